"""Algebra/coalgebra dualization on the dual basis.

With ``<e*_i, e_j> = delta_ij`` the dual of a product is a coproduct with
the very same structure constants, so dualization is pure re-nesting of
the 4-index data plus transposition of the twist matrices.
"""

from __future__ import annotations

from .algebra import MuTensor, TernaryHomAlgebra
from .coalgebra import DeltaTensor, TernaryHomCoalgebra
from .linalg import Matrix, mat_transpose


def dualize_linear_map(f: Matrix) -> Matrix:
    return mat_transpose(f)


def dualize_algebra(a: TernaryHomAlgebra) -> TernaryHomCoalgebra:
    delta: DeltaTensor = {}
    for (r, s, t), vec in a.mu.items():
        for l, c in vec.items():
            delta.setdefault(l, {})[(r, s, t)] = c
    return TernaryHomCoalgebra(a.dim, delta, mat_transpose(a.alpha1),
                               mat_transpose(a.alpha2), a.radicand)


def dualize_coalgebra(c: TernaryHomCoalgebra) -> TernaryHomAlgebra:
    mu: MuTensor = {}
    for l, tens in c.delta.items():
        for key, coeff in tens.items():
            mu.setdefault(key, {})[l] = coeff
    return TernaryHomAlgebra(c.dim, mu, mat_transpose(c.alpha1),
                             mat_transpose(c.alpha2), c.radicand)
