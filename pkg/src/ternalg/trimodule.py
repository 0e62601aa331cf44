"""Bihom-modules, trimodule actions, and the semidirect product.

A bihom-module is a space with two designated self-maps.  Trimodule
actions of an algebra A on a module V are stored uncurried and sparse:

    L[(a, b, w)]  image of e_a x e_b x f_w   (A x A x V -> V)
    R[(w, a, b)]  image of f_w x e_a x e_b   (V x A x A -> V)
    M[(a, w, b)]  image of e_a x f_w x e_b   (A x V x A -> V)

each value a sparse vector over the V basis.  The curried operator calls
mirror the algebra side: op_L(x, y)(v), op_R(x, y)(v) with v in the first
tensor slot, op_M(x, y)(v) with v in the middle slot.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import MuTensor, TernaryHomAlgebra
from .linalg import Matrix, SparseVec, mat_apply, vec_add_into
from .report import DEFAULT_MAX_VIOLATIONS, LawReport, Report
from .scalars import ONE, ZERO

ActionTensor = dict  # dict[tuple[int, int, int], SparseVec]


class NotMultiplicative(ValueError):
    """Regular actions require twist maps respecting the product."""


@dataclass
class BihomModule:
    dim: int
    beta1: Matrix
    beta2: Matrix


@dataclass
class TrimoduleActions:
    L: ActionTensor = field(default_factory=dict)
    R: ActionTensor = field(default_factory=dict)
    M: ActionTensor = field(default_factory=dict)

    def op_L(self, x: SparseVec, y: SparseVec, v: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for a, xa in x.items():
            for b, yb in y.items():
                c = xa * yb
                for w, vw in v.items():
                    vec_add_into(out, self.L.get((a, b, w), {}), c * vw)
        return out

    def op_R(self, x: SparseVec, y: SparseVec, v: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for w, vw in v.items():
            for a, xa in x.items():
                c = vw * xa
                for b, yb in y.items():
                    vec_add_into(out, self.R.get((w, a, b), {}), c * yb)
        return out

    def op_M(self, x: SparseVec, y: SparseVec, v: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for a, xa in x.items():
            for w, vw in v.items():
                c = xa * vw
                for b, yb in y.items():
                    vec_add_into(out, self.M.get((a, w, b), {}), c * yb)
        return out


def _vdiff(a: SparseVec, b: SparseVec) -> SparseVec:
    out = dict(a)
    for i, v in b.items():
        s = out.get(i)
        if s is None:
            out[i] = -v
        elif s - v:
            out[i] = s - v
        else:
            del out[i]
    return out


def _vstr(vec: SparseVec) -> str:
    return "{" + ", ".join(f"f{i + 1}: {vec[i]}" for i in sorted(vec)) + "}"


def check_trimodule(alg: TernaryHomAlgebra, mod: BihomModule,
                    act: TrimoduleActions, mode: str = "total",
                    level: str = "quasi",
                    max_violations: int = DEFAULT_MAX_VIOLATIONS) -> Report:
    """Verify the compatibility equations of the actions, one sub-law each.

    mode 'total' checks the chained equalities, 'partial' the three-term
    sums; level 'full' adds the braiding and twist-intertwining equations
    (identical in both modes).
    """
    if mode not in ("total", "partial"):
        raise ValueError(f"unknown mode {mode!r}")
    if level not in ("quasi", "full"):
        raise ValueError(f"unknown level {level!r}")
    n, m = alg.dim, mod.dim
    ea = [{i: ONE} for i in range(n)]
    fv = [{i: ONE} for i in range(m)]
    a1 = lambda x: mat_apply(alg.alpha1, x)
    a2 = lambda x: mat_apply(alg.alpha2, x)
    b1 = lambda v: mat_apply(mod.beta1, v)
    b2 = lambda v: mat_apply(mod.beta2, v)
    mu = alg.mu_vec
    L, R, M = act.op_L, act.op_R, act.op_M

    core = [
        ("1", lambda a, b, c, d, v: [
            L(a1(a), a2(b), L(c, d, v)),
            L(mu(a, b, c), a1(d), b2(v)),
            L(a1(a), mu(b, c, d), b2(v))]),
        ("2", lambda a, b, c, d, v: [
            R(a1(c), a2(d), R(a, b, v)),
            R(a2(a), mu(b, c, d), b1(v)),
            R(mu(a, b, c), a2(d), b1(v))]),
        ("4", lambda a, b, c, d, v: [
            M(a1(a), a2(d), L(b, c, v)),
            L(a1(a), a2(b), M(c, d, v)),
            M(mu(a, b, c), a2(d), b1(v))]),
        ("5", lambda a, b, c, d, v: [
            M(a1(a), a2(d), R(b, c, v)),
            R(a1(c), a2(d), M(a, b, v)),
            M(a1(a), mu(b, c, d), b2(v))]),
        ("6", lambda a, b, c, d, v: [
            R(a1(c), a2(d), L(a, b, v)),
            L(a1(a), a2(b), R(c, d, v)),
            M(a1(a), a2(d), M(b, c, v))]),
    ]

    prefix = "tr" if mode == "total" else "pr"
    report = Report()

    for num, members in core:
        lr = LawReport(f"trimodule.{prefix}{num}", f"{prefix}{num}")
        report.add(lr)
        for idx in itertools.product(range(n), range(n), range(n), range(n),
                                     range(m)):
            a, b, c, d = (ea[i] for i in idx[:4])
            v = fv[idx[4]]
            t1, t2, t3 = members(a, b, c, d, v)
            if mode == "total":
                res = _vdiff(t1, t2) or _vdiff(t2, t3)
            else:
                acc = dict(t1)
                vec_add_into(acc, t2)
                vec_add_into(acc, t3)
                res = acc
            if res:
                key = tuple(i + 1 for i in idx)
                if not lr.record(key, _vstr(res), max_violations):
                    break

    if level == "full":
        for num, beta in (("3", b1), ("3.2", b2)):
            lr = LawReport(f"trimodule.{prefix}{num}", f"{prefix}{num}")
            report.add(lr)
            for idx in itertools.product(range(n), range(n), range(n),
                                         range(n), range(n), range(n),
                                         range(m)):
                a, b, c, x, y, z = (ea[i] for i in idx[:6])
                v = fv[idx[6]]
                lhs = M(a1(a), a2(z),
                        M(a1(b), a2(y), M(a1(c), a2(x), beta(v))))
                rhs = M(mu(a1(a), a1(b), a1(c)),
                        mu(a2(x), a2(y), a2(z)), beta(v))
                res = _vdiff(lhs, rhs)
                if res:
                    key = tuple(i + 1 for i in idx)
                    if not lr.record(key, _vstr(res), max_violations):
                        break
        intertwine = [("7", L), ("8", M), ("9", R)]
        for num, op in intertwine:
            for which, beta in (("beta1", b1), ("beta2", b2)):
                lr = LawReport(f"trimodule.{prefix}{num}.{which}",
                               f"{prefix}{num}")
                report.add(lr)
                for idx in itertools.product(range(n), range(n), range(m)):
                    a, b = ea[idx[0]], ea[idx[1]]
                    v = fv[idx[2]]
                    lhs = beta(op(a, b, v))
                    rhs = op(a1(a), a2(b), beta(v))
                    res = _vdiff(lhs, rhs)
                    if res:
                        key = tuple(i + 1 for i in idx)
                        if not lr.record(key, _vstr(res), max_violations):
                            break
    return report


def regular_actions(alg: TernaryHomAlgebra, which: str = "lmr"
                    ) -> tuple[BihomModule, TrimoduleActions]:
    """Actions of the algebra on itself by the three multiplications."""
    if which not in ("left", "right", "lmr"):
        raise ValueError(f"unknown action choice {which!r}")
    if not alg.check_multiplicativity(max_violations=1).passed:
        raise NotMultiplicative("twist maps do not respect the product")
    mod = BihomModule(alg.dim, alg.alpha1, alg.alpha2)
    act = TrimoduleActions()
    for key, out in alg.mu.items():
        r, s, t = key
        if which in ("left", "lmr"):
            act.L[(r, s, t)] = dict(out)
        if which in ("right", "lmr"):
            act.R[(r, s, t)] = dict(out)
        if which == "lmr":
            act.M[(r, s, t)] = dict(out)
    return mod, act


def semidirect_product(alg: TernaryHomAlgebra, mod: BihomModule,
                       act: TrimoduleActions) -> TernaryHomAlgebra:
    """Block product on A + V driven by mu and the three actions."""
    n, m = alg.dim, mod.dim
    dim = n + m
    mu: MuTensor = {}
    for (r, s, t), out in alg.mu.items():
        mu[(r, s, t)] = dict(out)
    for (a, b, w), out in act.L.items():
        if out:
            mu[(a, b, n + w)] = {n + i: c for i, c in out.items()}
    for (a, w, b), out in act.M.items():
        if out:
            mu[(a, n + w, b)] = {n + i: c for i, c in out.items()}
    for (w, a, b), out in act.R.items():
        if out:
            mu[(n + w, a, b)] = {n + i: c for i, c in out.items()}

    def block(top: Matrix, bottom: Matrix) -> Matrix:
        rows = []
        for i in range(n):
            rows.append(list(top[i]) + [ZERO] * m)
        for i in range(m):
            rows.append([ZERO] * n + list(bottom[i]))
        return rows

    return TernaryHomAlgebra(dim, mu, block(alg.alpha1, mod.beta1),
                             block(alg.alpha2, mod.beta2), alg.radicand)
