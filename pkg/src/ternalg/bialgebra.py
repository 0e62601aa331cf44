"""Ternary infinitesimal bialgebras over shared twist maps.

The compatibility law between product and coproduct is implemented three
times on purpose: as the element-form identity with the three
multiplication operators (normative), as the exchange-operator rewriting
that permutes a rank-5 tensor (secondary oracle), and as the published
structure-constant identity evaluated verbatim over its free indices
(secondary oracle).  The verdicts of the secondary encodings are compared
against the first, never substituted for it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    TernaryHomAlgebra,
    check_algebra_morphism,
    is_algebra_isomorphism,
)
from .coalgebra import (
    TernaryHomCoalgebra,
    Tensor3,
    check_coalgebra_morphism,
    is_coalgebra_isomorphism,
    tensor3_map,
)
from .duality import dualize_algebra, dualize_coalgebra
from .linalg import Matrix, mat_invertible
from .report import DEFAULT_MAX_VIOLATIONS, LawReport, Report
from .scalars import ONE, ZERO


class MismatchedStructures(ValueError):
    """Product and coproduct must live on one space with shared twists."""


@dataclass
class TernaryBialgebra:
    alg: TernaryHomAlgebra
    coalg: TernaryHomCoalgebra

    def __post_init__(self):
        a, c = self.alg, self.coalg
        if a.dim != c.dim:
            raise MismatchedStructures("dimension mismatch")
        if a.alpha1 != c.alpha1 or a.alpha2 != c.alpha2:
            raise MismatchedStructures("twist maps differ")
        if a.radicand != c.radicand:
            raise MismatchedStructures("radicand mismatch")

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def alpha1(self) -> Matrix:
        return self.alg.alpha1

    @property
    def alpha2(self) -> Matrix:
        return self.alg.alpha2


def bialgebra(dim, mu, delta, alpha1, alpha2, radicand=1) -> TernaryBialgebra:
    return TernaryBialgebra(
        TernaryHomAlgebra(dim, mu, alpha1, alpha2, radicand),
        TernaryHomCoalgebra(dim, delta, alpha1, alpha2, radicand))


def _t3_diff(a: Tensor3, b: Tensor3) -> Tensor3:
    out = dict(a)
    for key, v in b.items():
        s = out.get(key)
        if s is None:
            out[key] = -v
        elif s - v:
            out[key] = s - v
        else:
            del out[key]
    return out


def _t3_add_into(acc: Tensor3, t: Tensor3) -> None:
    for key, v in t.items():
        s = acc.get(key, ZERO) + v
        if s:
            acc[key] = s
        else:
            acc.pop(key, None)


def _t3_str(t: Tensor3) -> str:
    return "{" + ", ".join(
        f"({k[0] + 1},{k[1] + 1},{k[2] + 1}): {t[k]}" for k in sorted(t)) + "}"


def check_compatibility(bi: TernaryBialgebra,
                        max_violations: int = DEFAULT_MAX_VIOLATIONS) -> Report:
    """Coproduct of a product equals the three-operator expansion."""
    alg, co = bi.alg, bi.coalg
    n = bi.dim
    basis = [{i: ONE} for i in range(n)]
    a1 = alg.apply_alpha1
    a2 = alg.apply_alpha2
    lr = LawReport("compat", "cp1")
    report = Report()
    report.add(lr)
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = co.delta_vec(alg.mu_basis(i, j, k))
        lmat = alg.multiplication_operators(a1(basis[i]), a2(basis[j]))[0]
        mmat = alg.multiplication_operators(a1(basis[i]), a2(basis[k]))[2]
        rmat = alg.multiplication_operators(a1(basis[j]), a2(basis[k]))[1]
        rhs: Tensor3 = {}
        _t3_add_into(rhs, tensor3_map(lmat, alg.alpha1, alg.alpha2,
                                      co.delta_basis(k)))
        _t3_add_into(rhs, tensor3_map(alg.alpha1, mmat, alg.alpha2,
                                      co.delta_basis(j)))
        _t3_add_into(rhs, tensor3_map(alg.alpha1, alg.alpha2, rmat,
                                      co.delta_basis(i)))
        res = _t3_diff(lhs, rhs)
        if res:
            if not lr.record((i + 1, j + 1, k + 1), _t3_str(res),
                             max_violations):
                break
    return report


def check_compatibility_sigma_form(bi: TernaryBialgebra,
                                   max_violations: int = DEFAULT_MAX_VIOLATIONS
                                   ) -> Report:
    """The exchange-operator rewriting, evaluated by literal composition.

    Each summand is expanded to a rank-5 tensor, permuted where the
    rewriting inserts the slot swap, and contracted back to rank 3.
    """
    alg, co = bi.alg, bi.coalg
    n = bi.dim
    basis = [{i: ONE} for i in range(n)]
    a1 = alg.apply_alpha1
    a2 = alg.apply_alpha2
    a1c = [alg.apply_alpha1(b) for b in basis]
    a2c = [alg.apply_alpha2(b) for b in basis]
    lr = LawReport("compat:sigma", "cp1s")
    report = Report()
    report.add(lr)
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = co.delta_vec(alg.mu_basis(i, j, k))
        rhs: Tensor3 = {}
        xa, xb, xc = a1(basis[i]), a2(basis[j]), a2(basis[k])
        xb1 = a1(basis[j])

        # (mu x a1 x a2)(a1 x a2 x Delta)
        for (r, s, t), cf in co.delta_basis(k).items():
            head = alg.mu_vec(xa, xb, basis[r])
            for l, hv in head.items():
                for u, uv in a1c[s].items():
                    for v, vv in a2c[t].items():
                        _t3_add_into(rhs, {(l, u, v): cf * hv * uv * vv})
        # (a1 x mu x a2)(sigma x id x sigma)(a1 x Delta x a2)
        five = {}
        for p, pv in a1(basis[i]).items():
            for (r, s, t), cf in co.delta_basis(j).items():
                for q, qv in xc.items():
                    # slots after the swaps: (b1, a1 a, b2, a2 c, b3)
                    five[(r, p, s, q, t)] = pv * cf * qv
        for (r, p, s, q, t), cf in five.items():
            mid = alg.mu_basis(p, s, q)
            for u, uv in a1c[r].items():
                for l, lv in mid.items():
                    for v, vv in a2c[t].items():
                        _t3_add_into(rhs, {(u, l, v): cf * uv * lv * vv})
        # (a1 x a2 x mu)(Delta x a1 x a2)
        for (r, s, t), cf in co.delta_basis(i).items():
            tail = alg.mu_vec(basis[t], xb1, xc)
            for u, uv in a1c[r].items():
                for v, vv in a2c[s].items():
                    for l, lv in tail.items():
                        _t3_add_into(rhs, {(u, v, l): cf * uv * vv * lv})

        res = _t3_diff(lhs, rhs)
        if res:
            if not lr.record((i + 1, j + 1, k + 1), _t3_str(res),
                             max_violations):
                break
    return report


def compatibility_identity_check(bi: TernaryBialgebra,
                                 max_violations: int = DEFAULT_MAX_VIOLATIONS
                                 ) -> Report:
    """The published structure-constant identity, evaluated verbatim.

    Only the displayed summation index is contracted; every other index
    ranges free, including the ones a faithful re-derivation would bind.
    """
    alg, co = bi.alg, bi.coalg
    n = bi.dim

    def c(l, i, j, k):
        return alg.mu.get((i, j, k), {}).get(l, ZERO)

    def a(r, s, t, l):
        return co.delta.get(l, {}).get((r, s, t), ZERO)

    y1 = lambda src, dst: alg.alpha1[dst][src]
    y2 = lambda src, dst: alg.alpha2[dst][src]
    csum = {}
    for key, out in alg.mu.items():
        total = ZERO
        for v in out.values():
            total = total + v
        csum[key] = total
    y1sum = [sum((alg.alpha1[l][r] for l in range(n)), ZERO) for r in range(n)]

    lr = LawReport("compat:constants", "cp4")
    report = Report()
    report.add(lr)
    rng = range(n)
    for i, j, k, r, s, t in itertools.product(rng, repeat=6):
        a_k, a_j, a_i = a(r, s, t, k), a(r, s, t, j), a(r, s, t, i)
        last = ZERO
        for l in rng:
            last = last + a(r, s, t, l) * c(l, i, j, k)
        for p, q, u, v in itertools.product(rng, repeat=4):
            total = -last
            if a_k:
                total = total + a_k * csum.get((p, q, r), ZERO) * \
                    y1(i, p) * y2(j, q) * y1(s, u) * y2(t, v)
            if a_j:
                total = total + a_j * c(u, p, s, q) * \
                    y1(i, p) * y2(k, q) * y1sum[r] * y2(t, v)
            if a_i:
                total = total + a_i * c(v, t, p, q) * \
                    y1(j, p) * y2(k, q) * y1sum[r] * y2(s, u)
            if total:
                idx = (i + 1, j + 1, k + 1, r + 1, s + 1, t + 1,
                       p + 1, q + 1, u + 1, v + 1)
                if not lr.record(idx, total, max_violations):
                    return report
    return report


def check_bialgebra(bi: TernaryBialgebra, mode: str = "total",
                    max_violations: int = DEFAULT_MAX_VIOLATIONS) -> Report:
    """Associativity, coassociativity, and compatibility, per mode."""
    if mode not in ("total", "partial", "weak"):
        raise ValueError(f"unknown mode {mode!r}")
    report = Report()
    report.extend(bi.alg.check_associativity(mode, max_violations))
    report.extend(bi.coalg.check_coassociativity(mode, max_violations))
    report.extend(check_compatibility(bi, max_violations))
    return report


def sign_variant(bi: TernaryBialgebra, flip_mu: bool,
                 flip_delta: bool) -> TernaryBialgebra:
    mu = bi.alg.mu
    if flip_mu:
        mu = {key: {l: -v for l, v in out.items()} for key, out in mu.items()}
    delta = bi.coalg.delta
    if flip_delta:
        delta = {l: {key: -v for key, v in t.items()}
                 for l, t in delta.items()}
    return bialgebra(bi.dim, mu, delta, bi.alpha1, bi.alpha2,
                     bi.alg.radicand)


def dualize_bialgebra(bi: TernaryBialgebra) -> TernaryBialgebra:
    """Product and coproduct trade places on the dual basis."""
    return TernaryBialgebra(dualize_coalgebra(bi.coalg),
                            dualize_algebra(bi.alg))


def check_bialgebra_equivalence(f: Matrix, b1: TernaryBialgebra,
                                b2: TernaryBialgebra,
                                max_violations: int = DEFAULT_MAX_VIOLATIONS
                                ) -> Report:
    report = Report()
    inv = LawReport("equivalence:invertible", "equiv0")
    report.add(inv)
    if not mat_invertible(f):
        inv.record((), "map is singular", max_violations)
    for sub in (check_algebra_morphism(f, b1.alg, b2.alg, max_violations),
                check_coalgebra_morphism(f, b1.coalg, b2.coalg,
                                         max_violations)):
        for lr in sub.laws:
            lr.law = f"equivalence:{lr.law}"
            report.add(lr)
    return report


def is_bialgebra_equivalence(f: Matrix, b1: TernaryBialgebra,
                             b2: TernaryBialgebra) -> bool:
    return check_bialgebra_equivalence(f, b1, b2, max_violations=1).passed
