"""When does a symmetric multilinear map decompose into symmetric tensors?

Over a finite field the answer is no longer "always": for arity beyond
the field size there is an extra compatibility constraint coming from
x^q = x.  Triple multiplication in GF(4), viewed over GF(2), fails it;
its symmetrization x^2yz + xy^2z + xyz^2 satisfies it and splits into
three cubes of trace forms.
"""

import itertools

import numpy as np

from schurpow import GF, SubfieldEmbedding
from schurpow.symtensor import (
    SymMultiForm,
    is_frobenius_symmetric,
    multisets,
    mu_nrm,
    mu_sym,
    mu_tri,
    mult_tensor,
    symmetric_algorithm,
    trace_form,
    waring_g,
)

F2 = GF(2)
F4 = GF(2, 2)

# -- the counterexample and its fix -------------------------------------------
m = mult_tensor(2, 2, 3)  # (x, y, z) -> xyz on GF(4), trilinear over GF(2)
ok, witness = is_frobenius_symmetric(m)
print("xyz Frobenius symmetric :", ok, "witness basis tuple:", witness)
print("xyz has an algorithm    :", symmetric_algorithm(m) is not None)

emb = SubfieldEmbedding(F2, F4)
coeffs = np.zeros((len(multisets(2, 3)), 2), dtype=np.int64)
for i, (a, b, c) in enumerate(multisets(2, 3)):
    val = 0
    for ex in (2 * a + b + c, a + 2 * b + c, a + b + 2 * c):
        val = F4.add(val, F4.pow(2, ex))
    coeffs[i] = emb.coords(val)
mp = SymMultiForm(F2, 2, 2, 3, coeffs)

ok, _ = is_frobenius_symmetric(mp)
alg = symmetric_algorithm(mp)
print("\nsymmetrized map is Frobenius symmetric:", ok)
print("algorithm length:", alg.length)
for l, w in zip(alg.forms, alg.outputs):
    print("  form", l, "-> output", w)

# spot-check one evaluation against the defining polynomial
x, y, z = 2, 3, 1  # alpha, alpha+1, 1 in GF(4)
direct = 0
for ex, ey, ez in ((2, 1, 1), (1, 2, 1), (1, 1, 2)):
    direct = F4.add(direct, F4.mul(F4.pow(x, ex), F4.mul(F4.pow(y, ey), F4.pow(z, ez))))
vecs = [np.array(emb.coords(v), dtype=np.int64) for v in (x, y, z)]
print("evaluation agrees:", tuple(alg.evaluate(vecs)) == emb.coords(direct))

# -- the trace form is a sum of three cubes ------------------------------------
T = trace_form(2, 2, 3)
algT = symmetric_algorithm(T)
print("\ntr(xyz) decomposes into", algT.length, "cubes of trace forms")

# -- exact complexities at toy sizes ---------------------------------------------
print("\nmultiplication algorithm lengths for GF(q^k) over GF(q):")
for q, k in [(2, 2), (3, 2), (2, 3)]:
    print(f"  q={q} k={k}: sym={mu_sym(q, k)} tri={mu_tri(q, k)} nrm={mu_nrm(q, k)}")
print("  q=4 k=2: nrm =", mu_nrm(4, 2))

# -- Waring numbers: how many cubes to write any scalar ---------------------------
print("\nWaring numbers g(3, q):")
for q in (2, 3, 4, 5, 7, 13):
    print(f"  q={q}: {waring_g(3, q)}")
