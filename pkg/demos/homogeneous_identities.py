"""Top-degree identities for unimodular rows with equal-degree entries."""

from sl2kxy.cofactors import cofactors
from sl2kxy.generate import equal_degree_row
from sl2kxy.homog import alpha_sequence, verify_star

d = alpha_sequence("x*y + 1", "x^2", "1 - x*y", "y^2")
print("f = x*y + 1, g = x^2, phi =", d.phi)
print("alphas:", [str(a) for a in d.alphas], "verified:", verify_star(d))

for n in range(2, 6):
    for seed in range(40):
        inst = equal_degree_row(seed, n)
        P, Q = cofactors(inst.f, inst.g)
        if not (P.is_constant() or Q.is_constant()):
            break
    else:
        continue
    d = alpha_sequence(inst.f, inst.g, P, Q)
    print(f"n={n} m={d.m} seed={seed} phi={d.phi} "
          f"verified={verify_star(d)} degrees_ok={d.degrees_ok()}")
