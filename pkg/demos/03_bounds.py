"""Bounds on products of codes, each checked against exact values.

The dual distance drives most of the useful estimates: products of
full-support codes keep a controlled dual distance, the dimension of a
product grows with it, and the regularity is capped by it.  The product
Singleton bound caps the other direction, with an explicit greedy witness
in the high-rate case.
"""

import json

import numpy as np

from schurpow import GF
from schurpow.bounds import (
    ddual_product_bound,
    dim_product_bound,
    ecp_check,
    fundamental_function,
    kashyap_pair,
    regularity_bounds,
    roos_bound,
    singleton_product,
)
from schurpow.families import parity, reed_solomon

# -- dual distance and dimension of products ----------------------------------
A = reed_solomon(5, 5, 2)
B = reed_solomon(5, 5, 2)
rep = ddual_product_bound(A, B)
print("ddual bound :", json.dumps(rep.as_dict()))
rep = dim_product_bound(A, B)
print("dim bound   :", json.dumps(rep.as_dict()))

# -- regularity caps ------------------------------------------------------------
rep = regularity_bounds(reed_solomon(5, 5, 3))
print("\nregularity  :", json.dumps(rep.as_dict()))

# -- the product Singleton bound ------------------------------------------------
P = parity(2, 3)
rep = singleton_product([P, P])
print("\nsingleton   :", json.dumps(rep.as_dict()))

# when k1 + k2 > n a weight-one product always exists, found greedily
c1, c2, A1, A2, j = kashyap_pair(P, P)
print("kashyap     : c1 =", c1, "c2 =", c2, "sets", A1, A2, "position", j)
print("product     :", GF(2).mul(c1, c2))

# -- decoding-pair style bounds ---------------------------------------------------
A = reed_solomon(5, 5, 2)
C = A.star(A).dual()
rep = roos_bound(A, A, C)
print("\nroos        :", json.dumps(rep.as_dict()))
rep = ecp_check(A, A, C, t=1)
print("ecp t=1     :", json.dumps(rep.as_dict()))

# -- the exact fundamental function at toy scale -----------------------------------
print("\nexact a^[2](n, d) over GF(2):")
for n in range(2, 6):
    row = [fundamental_function(GF(2), n, d, 2) for d in range(1, n + 1)]
    print(f"  n={n}:", row)
