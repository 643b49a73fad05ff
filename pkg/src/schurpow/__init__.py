"""Exact computation with componentwise products and powers of linear codes.

The package is organized as a small numpy-based library:

- :mod:`schurpow.fields`: GF(p^e) arithmetic, subfield embeddings, traces
- :mod:`schurpow.linalg`: dense exact linear algebra over GF(q)
- :mod:`schurpow.codes`: the LinearCode type and structural operations
- :mod:`schurpow.metrics`: distances, weight hierarchies, rank distances
- :mod:`schurpow.bounds`: bound computations paired with exact verifiers
- :mod:`schurpow.families`: Reed-Solomon / Reed-Muller / simplex fixtures
- :mod:`schurpow.symtensor`: symmetric tensor decomposition over GF(q)
- :mod:`schurpow.necklace`: multilinearized polynomials and shift orbits
- :mod:`schurpow.concat`: concatenation through trace-form symbol maps
- :mod:`schurpow.lattices`: Construction-D lattices from code chains
- :mod:`schurpow.fileio` / :mod:`schurpow.cli`: text formats and batch CLI
"""

from .codes import LinearCode, Partition, SliceData, trace_descent
from .fields import (
    GF,
    FieldElem,
    FieldSpec,
    SubfieldEmbedding,
    dual_basis,
    field_of_order,
    from_header,
    normal_basis,
    trace,
)

__all__ = [
    "GF",
    "FieldElem",
    "FieldSpec",
    "SubfieldEmbedding",
    "LinearCode",
    "Partition",
    "SliceData",
    "dual_basis",
    "field_of_order",
    "from_header",
    "normal_basis",
    "trace",
    "trace_descent",
]

__version__ = "0.1.0"
