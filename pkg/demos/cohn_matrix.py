"""Decompose the classic 2x2 matrix with entries x^2, xy-1, xy+1, y^2.

It has determinant one, yet no product of elementary transvections over
k[x, y] equals it; the decomposition isolates a single special factor.
"""

from sl2kxy import COHN_MATRIX, decompose, verify_certificate
from sl2kxy.mat import certificate_to_json

d = decompose(COHN_MATRIX, trace=True)
cert = d.certificate
print("matrix:", COHN_MATRIX)
print("det:", COHN_MATRIX.det())
for line in d.trace:
    print(" ", line)
print("special factor:", cert.cohn)
print("verified:", bool(verify_certificate(COHN_MATRIX, cert)))
print(certificate_to_json(cert))
