"""Matched pairs of ternary hom-algebras and the bicrossed product.

A matched pair couples two algebras A and B through six cross actions:
actA lets A act on B (module twists are B's), actB lets B act on A.
Both action triples use the standard trimodule slot layout, so
``actA.op_R(x, y, b)`` evaluates the B x A x A action with the B element
in the first tensor slot, and so on.

The twenty coupling conditions are transcribed one member at a time; the
bicrossed product below is the independent oracle for that transcription.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import MuTensor, TernaryHomAlgebra
from .linalg import Matrix, mat_apply
from .report import DEFAULT_MAX_VIOLATIONS, LawReport, Report
from .scalars import ONE, ZERO
from .trimodule import BihomModule, TrimoduleActions, _vdiff, _vstr, check_trimodule


@dataclass
class MatchedPairData:
    A: TernaryHomAlgebra
    B: TernaryHomAlgebra
    actA: TrimoduleActions  # A x A x B -> B and friends
    actB: TrimoduleActions  # B x B x A -> A and friends


def _conditions(mp: MatchedPairData):
    """The coupling conditions as (number, arg pattern, member builder).

    Pattern letters give each quantified argument's algebra; builders
    return the three members whose chained equality (or vanishing sum)
    the condition asserts.
    """
    muA = mp.A.mu_vec
    muB = mp.B.mu_vec
    LA, RA, MA = mp.actA.op_L, mp.actA.op_R, mp.actA.op_M
    LB, RB, MB = mp.actB.op_L, mp.actB.op_R, mp.actB.op_M
    A1 = lambda v: mat_apply(mp.A.alpha1, v)
    A2 = lambda v: mat_apply(mp.A.alpha2, v)
    B1 = lambda v: mat_apply(mp.B.alpha1, v)
    B2 = lambda v: mat_apply(mp.B.alpha2, v)

    return [
        ("1", "AAABB", lambda x, y, z, a, b: [
            muA(LB(a, b, x), A1(y), A2(z)),
            LB(B1(a), RA(x, y, b), A2(z)),
            LB(B1(a), B2(b), muA(x, y, z))]),
        ("2", "AAABB", lambda x, y, z, a, b: [
            muA(MB(a, b, x), A1(y), A2(z)),
            LB(B1(a), MA(x, y, b), A2(z)),
            MB(B1(a), RA(y, z, b), A2(x))]),
        ("3", "AAABB", lambda x, y, z, a, b: [
            muA(RB(a, b, x), A1(y), A2(z)),
            muA(A1(x), LB(a, b, y), A2(z)),
            RB(B2(a), RA(y, z, b), A1(x))]),
        ("4", "AAABB", lambda x, y, z, a, b: [
            LB(LA(x, y, a), B1(b), A2(z)),
            muA(A1(x), RB(a, b, y), A2(z)),
            muA(A1(x), A2(y), LB(a, b, z))]),
        ("5", "AAABB", lambda x, y, z, a, b: [
            LB(MA(x, y, a), B1(b), A2(z)),
            muA(A1(x), MB(a, b, y), A2(z)),
            RB(B2(a), MA(y, z, b), A1(x))]),
        ("6", "AAABB", lambda x, y, z, a, b: [
            LB(RA(x, y, a), B1(b), A2(z)),
            LB(B1(a), LA(x, y, b), A2(z)),
            MB(B1(a), MA(y, z, b), A2(x))]),
        ("7", "AAABB", lambda x, y, z, a, b: [
            MB(LA(x, y, a), B2(b), A1(z)),
            RB(MA(y, z, a), B2(b), A1(x)),
            muA(A1(x), A2(y), MB(a, b, z))]),
        ("8", "AAABB", lambda x, y, z, a, b: [
            MB(MA(x, y, a), B2(b), A1(z)),
            RB(RA(y, z, a), B2(b), A1(x)),
            RB(B2(a), LA(y, z, b), A1(x))]),
        ("9", "AAABB", lambda x, y, z, a, b: [
            MB(RA(x, y, a), B2(b), A1(z)),
            MB(B1(a), B2(b), muA(x, y, z)),
            MB(B1(a), LA(y, z, b), A2(x))]),
        ("10", "AAABB", lambda x, y, z, a, b: [
            RB(B1(a), B2(b), muA(x, y, z)),
            RB(LA(y, z, a), B2(b), A1(x)),
            muA(A1(x), A2(y), RB(a, b, z))]),
        ("11", "AABBB", lambda x, y, a, b, c: [
            muB(LA(x, y, a), B1(b), B2(c)),
            LA(A1(x), RB(a, b, y), B2(c)),
            LA(A1(x), A2(y), muB(a, b, c))]),
        ("12", "AABBB", lambda x, y, a, b, c: [
            muB(MA(x, y, a), B1(b), B2(c)),
            LA(A1(x), MB(a, b, y), B2(c)),
            MA(A1(x), RB(b, c, y), B2(a))]),
        ("13", "AABBB", lambda x, y, a, b, c: [
            muB(RA(x, y, a), B1(b), B2(c)),
            muB(B1(a), LA(x, y, b), B2(c)),
            RA(A2(x), RB(b, c, y), B1(a))]),
        ("14", "AABBB", lambda x, y, a, b, c: [
            LA(LB(a, b, x), A1(y), B2(c)),
            muB(B1(a), RA(x, y, b), B2(c)),
            muB(B1(a), B2(b), LA(x, y, c))]),
        ("15", "AABBB", lambda x, y, a, b, c: [
            LA(MB(a, b, x), A1(y), B2(c)),
            muB(B1(a), MA(x, y, b), B2(c)),
            RA(A2(x), MB(b, c, y), B1(a))]),
        ("16", "AABBB", lambda x, y, a, b, c: [
            LA(RB(a, b, x), A1(y), B2(c)),
            LA(A1(x), LB(a, b, y), B2(c)),
            MA(A1(x), MB(b, c, y), B2(a))]),
        ("17", "AABBB", lambda x, y, a, b, c: [
            MA(LB(a, b, x), A2(y), B1(c)),
            RA(MB(b, c, x), A2(y), B1(a)),
            muB(B1(a), B2(b), MA(x, y, c))]),
        ("18", "AABBB", lambda x, y, a, b, c: [
            MA(MB(a, b, x), A2(y), B1(c)),
            RA(RB(b, c, x), A2(y), B1(a)),
            RA(A2(x), LB(b, c, y), B1(a))]),
        ("19", "AABBB", lambda x, y, a, b, c: [
            MA(RB(a, b, x), A2(y), B1(c)),
            MA(A1(x), A2(y), muB(a, b, c)),
            MA(A1(x), LB(b, c, y), B2(a))]),
        ("20", "AABBB", lambda x, y, a, b, c: [
            RA(A1(x), A2(y), muB(a, b, c)),
            RA(LB(b, c, x), A2(y), B1(a)),
            muB(B1(a), B2(b), RA(x, y, c))]),
    ]


def check_matched_pair(mp: MatchedPairData, mode: str = "total",
                       full: bool = False,
                       max_violations: int = DEFAULT_MAX_VIOLATIONS) -> Report:
    if mode not in ("total", "partial"):
        raise ValueError(f"unknown mode {mode!r}")
    report = Report()

    # prerequisite: each action triple is a quasi-trimodule over its algebra
    modB = BihomModule(mp.B.dim, mp.B.alpha1, mp.B.alpha2)
    modA = BihomModule(mp.A.dim, mp.A.alpha1, mp.A.alpha2)
    for label, alg, mod, act in (("actA", mp.A, modB, mp.actA),
                                 ("actB", mp.B, modA, mp.actB)):
        sub = check_trimodule(alg, mod, act, mode=mode, level="quasi",
                              max_violations=max_violations)
        for lr in sub.laws:
            lr.law = f"matchedpair.prereq.{label}.{lr.law}"
            report.add(lr)

    n, m = mp.A.dim, mp.B.dim
    ea = [{i: ONE} for i in range(n)]
    eb = [{i: ONE} for i in range(m)]
    prefix = "mp" if mode == "total" else "pp"
    for num, pattern, members in _conditions(mp):
        lr = LawReport(f"matchedpair.{mode}.{prefix}{num}", f"{prefix}{num}")
        report.add(lr)
        ranges = [range(n) if ch == "A" else range(m) for ch in pattern]
        for idx in itertools.product(*ranges):
            args = [ea[i] if ch == "A" else eb[i]
                    for ch, i in zip(pattern, idx)]
            t1, t2, t3 = members(*args)
            if mode == "total":
                res = _vdiff(t1, t2) or _vdiff(t2, t3)
            else:
                res = dict(t1)
                for vec in (t2, t3):
                    for i, v in vec.items():
                        s = res.get(i, ZERO) + v
                        if s:
                            res[i] = s
                        else:
                            res.pop(i, None)
            if res:
                key = tuple(i + 1 for i in idx)
                if not lr.record(key, _vstr(res), max_violations):
                    break

    if full:
        _check_full_extras(mp, report, prefix, max_violations)
    return report


def _check_full_extras(mp: MatchedPairData, report: Report, prefix: str,
                       cap: int) -> None:
    """Braiding and intertwining extras of the full matched-pair notion."""
    n, m = mp.A.dim, mp.B.dim
    ea = [{i: ONE} for i in range(n)]
    eb = [{i: ONE} for i in range(m)]
    A1 = lambda v: mat_apply(mp.A.alpha1, v)
    A2 = lambda v: mat_apply(mp.A.alpha2, v)
    B1 = lambda v: mat_apply(mp.B.alpha1, v)
    B2 = lambda v: mat_apply(mp.B.alpha2, v)

    braids = [
        ("21", mp.actA.op_M, mp.A.mu_vec, A1, A2, (B1, B2), n, m, ea, eb),
        ("22", mp.actB.op_M, mp.B.mu_vec, B1, B2, (A1, A2), m, n, eb, ea),
    ]
    for num, M, mu, t1, t2, betas, na, nv, alg_basis, mod_basis in braids:
        for bi, beta in enumerate(betas, start=1):
            lr = LawReport(f"matchedpair.full.{prefix}{num}.i{bi}",
                           f"{prefix}{num}")
            report.add(lr)
            for idx in itertools.product(range(na), repeat=6):
                a, b, c, x, y, z = (alg_basis[i] for i in idx)
                for w in range(nv):
                    v = mod_basis[w]
                    lhs = M(t1(a), t2(z),
                            M(t1(b), t2(y), M(t1(c), t2(x), beta(v))))
                    rhs = M(mu(t1(a), t1(b), t1(c)),
                            mu(t2(x), t2(y), t2(z)), beta(v))
                    res = _vdiff(lhs, rhs)
                    if res:
                        key = tuple(i + 1 for i in idx) + (w + 1,)
                        if not lr.record(key, _vstr(res), cap):
                            break
                else:
                    continue
                break

    intertwines = [
        ("23", mp.actA.op_L, A1, A2, (B1, B2), n, m, ea, eb),
        ("24", mp.actA.op_M, A1, A2, (B1, B2), n, m, ea, eb),
        ("25", mp.actA.op_R, A1, A2, (B1, B2), n, m, ea, eb),
        ("26", mp.actB.op_L, B1, B2, (A1, A2), m, n, eb, ea),
        ("27", mp.actB.op_M, B1, B2, (A1, A2), m, n, eb, ea),
        ("28", mp.actB.op_R, B1, B2, (A1, A2), m, n, eb, ea),
    ]
    for num, op, t1, t2, gammas, na, nv, alg_basis, mod_basis in intertwines:
        for gi, gamma in enumerate(gammas, start=1):
            lr = LawReport(f"matchedpair.full.{prefix}{num}.i{gi}",
                           f"{prefix}{num}")
            report.add(lr)
            for ia, ib, iw in itertools.product(range(na), range(na),
                                                range(nv)):
                a, b, v = alg_basis[ia], alg_basis[ib], mod_basis[iw]
                res = _vdiff(gamma(op(a, b, v)), op(t1(a), t2(b), gamma(v)))
                if res:
                    if not lr.record((ia + 1, ib + 1, iw + 1),
                                     _vstr(res), cap):
                        break


def bicrossed_product(mp: MatchedPairData) -> TernaryHomAlgebra:
    """The eight-term block product on A + B; no laws are checked here."""
    n, m = mp.A.dim, mp.B.dim
    mu: MuTensor = {}

    def put(key, out, offset):
        if out:
            vec = mu.setdefault(key, {})
            for i, c in out.items():
                s = vec.get(offset + i, ZERO) + c
                if s:
                    vec[offset + i] = s
                else:
                    vec.pop(offset + i, None)
            if not vec:
                del mu[key]

    for (r, s, t), out in mp.A.mu.items():
        put((r, s, t), out, 0)
    for (r, s, t), out in mp.B.mu.items():
        put((n + r, n + s, n + t), out, n)
    # A-valued cross terms
    for (a, b, z), out in mp.actB.L.items():
        put((n + a, n + b, z), out, 0)
    for (a, y, c), out in mp.actB.M.items():
        put((n + a, y, n + c), out, 0)
    for (x, b, c), out in mp.actB.R.items():
        put((x, n + b, n + c), out, 0)
    # B-valued cross terms
    for (x, y, c), out in mp.actA.L.items():
        put((x, y, n + c), out, n)
    for (x, b, z), out in mp.actA.M.items():
        put((x, n + b, z), out, n)
    for (a, y, z), out in mp.actA.R.items():
        put((n + a, y, z), out, n)

    def block(top: Matrix, bottom: Matrix) -> Matrix:
        rows = []
        for i in range(n):
            rows.append(list(top[i]) + [ZERO] * m)
        for i in range(m):
            rows.append([ZERO] * n + list(bottom[i]))
        return rows

    return TernaryHomAlgebra(n + m, mu,
                             block(mp.A.alpha1, mp.B.alpha1),
                             block(mp.A.alpha2, mp.B.alpha2),
                             mp.A.radicand)
