"""Reduce a few unimodular rows with a degree-two entry to a terminal row."""

from sl2kxy.endo import apply
from sl2kxy.generate import FAMILIES, generate_random_instance
from sl2kxy.reduce import reduce_row, trace_lines

for fam in FAMILIES:
    inst = generate_random_instance(11, "row", 3, 3, family=fam)
    theta, cert = reduce_row(inst.f, inst.g)
    row = (apply(theta, inst.f), apply(theta, inst.g))
    print(f"[{fam}] f = {inst.f}")
    print(f"{' ' * (len(fam) + 3)}g = {inst.g}")
    for line in trace_lines(row, cert.steps):
        print("   ", line)
    print("    terminal:", cert.terminal.kind, "check:", cert.check(row))
    print()
