"""Finite-dimensional ternary hom-algebras given by structure constants.

An algebra of dimension ``n`` stores a trilinear product ``mu`` as a sparse
tensor ``mu[(r, s, t)][l]`` (0-based): the coefficient of ``e_l`` in
``mu(e_r, e_s, e_t)``.  Two twist endomorphisms ``alpha1`` and ``alpha2``
are kept as dense matrices whose columns are images of basis vectors.

Checkers never reconcile a failing identity: every nonzero residual is
reported with its 1-based basis index tuple.
"""

from __future__ import annotations

from .linalg import (
    Matrix,
    SparseVec,
    mat_apply,
    mat_column,
    mat_columns,
    mat_identity,
    mat_invertible,
    mat_is_identity,
    mat_mul,
    vec_add_into,
)
from .report import DEFAULT_MAX_VIOLATIONS, LawReport, Report
from .scalars import ONE as _ONE, ZERO as _ZERO

MuTensor = dict  # dict[tuple[int, int, int], SparseVec]

MODES = ("total", "partial", "weak")


class PreconditionNotClassical(ValueError):
    """A construction requiring identity twists was given a twisted input."""


class NotEndomorphism(ValueError):
    """The proposed twist map does not respect the product."""

    def __init__(self, triple: tuple):
        self.triple = triple
        super().__init__(f"map is not multiplicative on basis triple {triple}")


def _clean_tensor(mu: MuTensor) -> MuTensor:
    out: MuTensor = {}
    for key, vec in mu.items():
        nz = {l: c for l, c in vec.items() if c}
        if nz:
            out[key] = nz
    return out


class TernaryHomAlgebra:
    def __init__(self, dim: int, mu: MuTensor, alpha1: Matrix, alpha2: Matrix,
                 radicand: int = 1):
        self.dim = dim
        self.mu = _clean_tensor(mu)
        self.alpha1 = alpha1
        self.alpha2 = alpha2
        self.radicand = radicand
        self._alpha1_cols = mat_columns(alpha1)
        self._alpha2_cols = mat_columns(alpha2)

    # -- product --------------------------------------------------------

    def mu_basis(self, r: int, s: int, t: int) -> SparseVec:
        return self.mu.get((r, s, t), {})

    def mu_vec(self, x: SparseVec, y: SparseVec, z: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for r, xr in x.items():
            for s, ys in y.items():
                c = xr * ys
                for t, zt in z.items():
                    vec_add_into(out, self.mu_basis(r, s, t), c * zt)
        return out

    # left / middle / right multiplication operators
    def op_L(self, x: SparseVec, y: SparseVec, z: SparseVec) -> SparseVec:
        return self.mu_vec(x, y, z)

    def op_R(self, x: SparseVec, y: SparseVec, z: SparseVec) -> SparseVec:
        return self.mu_vec(z, x, y)

    def op_M(self, x: SparseVec, y: SparseVec, z: SparseVec) -> SparseVec:
        return self.mu_vec(x, z, y)

    def apply_alpha1(self, v: SparseVec) -> SparseVec:
        return mat_apply(self.alpha1, v)

    def apply_alpha2(self, v: SparseVec) -> SparseVec:
        return mat_apply(self.alpha2, v)

    def is_classical(self) -> bool:
        return mat_is_identity(self.alpha1) and mat_is_identity(self.alpha2)

    # -- associativity --------------------------------------------------

    def _assoc_terms(self, i1, i2, i3, i4, i5):
        a1 = self._alpha1_cols
        a2 = self._alpha2_cols
        t1 = self.mu_vec(self.mu_basis(i1, i2, i3), a1[i4], a2[i5])
        t2 = self.mu_vec(a1[i1], self.mu_basis(i2, i3, i4), a2[i5])
        t3 = self.mu_vec(a1[i1], a2[i2], self.mu_basis(i3, i4, i5))
        return t1, t2, t3

    def check_associativity(self, mode: str = "total",
                            max_violations: int = DEFAULT_MAX_VIOLATIONS) -> Report:
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        report = Report()
        if mode == "total":
            laws = [LawReport("assoc:total:1-2", "qt1a"),
                    LawReport("assoc:total:2-3", "qt1b")]
        elif mode == "partial":
            laws = [LawReport("assoc:partial", "qp1")]
        else:
            laws = [LawReport("assoc:weak", "qw1")]
        for lr in laws:
            report.add(lr)
        n = self.dim
        open_laws = set(range(len(laws)))
        for i1 in range(n):
            for i2 in range(n):
                for i3 in range(n):
                    for i4 in range(n):
                        for i5 in range(n):
                            t1, t2, t3 = self._assoc_terms(i1, i2, i3, i4, i5)
                            idx = (i1 + 1, i2 + 1, i3 + 1, i4 + 1, i5 + 1)
                            if mode == "total":
                                residuals = [_diff(t1, t2), _diff(t2, t3)]
                            elif mode == "partial":
                                acc: SparseVec = dict(t1)
                                vec_add_into(acc, t2)
                                vec_add_into(acc, t3)
                                residuals = [acc]
                            else:
                                residuals = [_diff(t1, t3)]
                            for li in list(open_laws):
                                res = residuals[li]
                                if res:
                                    if not laws[li].record(idx, _vec_str(res),
                                                           max_violations):
                                        open_laws.discard(li)
                            if not open_laws:
                                return report
        return report

    # -- multiplicativity of the twists ---------------------------------

    def check_multiplicativity(self, max_violations: int = DEFAULT_MAX_VIOLATIONS
                               ) -> Report:
        report = Report()
        for name, tag, mat in (("multiplicative:alpha1", "mult1", self.alpha1),
                               ("multiplicative:alpha2", "mult2", self.alpha2)):
            lr = LawReport(name, tag)
            report.add(lr)
            _endomorphism_defect(self, mat, lr, max_violations)
        return report

    def multiplication_operators(self, x: SparseVec, y: SparseVec
                                 ) -> tuple[Matrix, Matrix, Matrix]:
        """Matrices of z -> mu(x,y,z), z -> mu(z,x,y), z -> mu(x,z,y)."""
        n = self.dim
        basis = [{j: _ONE} for j in range(n)]
        ops = []
        for evaluate in (lambda z: self.mu_vec(x, y, z),
                         lambda z: self.mu_vec(z, x, y),
                         lambda z: self.mu_vec(x, z, y)):
            cols = [evaluate(b) for b in basis]
            ops.append([[cols[j].get(i, _ZERO) for j in range(n)]
                        for i in range(n)])
        return tuple(ops)

    # -- constructions --------------------------------------------------

    def yau_twist(self, rho: Matrix) -> "TernaryHomAlgebra":
        """Twist a classical ternary algebra along an endomorphism rho."""
        if not self.is_classical():
            raise PreconditionNotClassical(
                "Yau twist requires identity twist maps on the input")
        bad = _first_endomorphism_defect(self, rho)
        if bad is not None:
            raise NotEndomorphism(bad)
        mu_new: MuTensor = {}
        for key, vec in self.mu.items():
            mu_new[key] = mat_apply(rho, vec)
        # an irrational endomorphism widens the scalar field of the result
        rad = self.radicand
        for row in rho:
            for x in row:
                if x.d != 1:
                    rad = x.d
        return TernaryHomAlgebra(self.dim, mu_new, rho, rho, rad)


def _diff(a: SparseVec, b: SparseVec) -> SparseVec:
    out = dict(a)
    for i, v in b.items():
        s = out.get(i)
        if s is None:
            out[i] = -v
        else:
            s = s - v
            if s:
                out[i] = s
            else:
                del out[i]
    return out


def _vec_str(vec: SparseVec) -> str:
    parts = [f"e{i + 1}: {vec[i]}" for i in sorted(vec)]
    return "{" + ", ".join(parts) + "}"


def _first_endomorphism_defect(alg: TernaryHomAlgebra, mat: Matrix):
    """First basis triple where mat fails to respect the product, or None."""
    cols = mat_columns(mat)
    n = alg.dim
    for r in range(n):
        for s in range(n):
            for t in range(n):
                lhs = mat_apply(mat, alg.mu_basis(r, s, t))
                rhs = alg.mu_vec(cols[r], cols[s], cols[t])
                if lhs != rhs:
                    return (r + 1, s + 1, t + 1)
    return None


def _endomorphism_defect(alg: TernaryHomAlgebra, mat: Matrix, lr: LawReport,
                         cap: int) -> None:
    cols = mat_columns(mat)
    n = alg.dim
    for r in range(n):
        for s in range(n):
            for t in range(n):
                lhs = mat_apply(mat, alg.mu_basis(r, s, t))
                rhs = alg.mu_vec(cols[r], cols[s], cols[t])
                res = _diff(lhs, rhs)
                if res:
                    if not lr.record((r + 1, s + 1, t + 1), _vec_str(res), cap):
                        return


def check_algebra_morphism(f: Matrix, a: TernaryHomAlgebra, b: TernaryHomAlgebra,
                           max_violations: int = DEFAULT_MAX_VIOLATIONS) -> Report:
    """f respects products and intertwines the twists of a and b."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    report = Report()
    prod = LawReport("morphism:product", "mor1")
    report.add(prod)
    cols = mat_columns(f)
    n = a.dim
    done = False
    for r in range(n):
        for s in range(n):
            for t in range(n):
                lhs = mat_apply(f, a.mu_basis(r, s, t))
                rhs = b.mu_vec(cols[r], cols[s], cols[t])
                res = _diff(lhs, rhs)
                if res and not prod.record((r + 1, s + 1, t + 1),
                                           _vec_str(res), max_violations):
                    done = True
                    break
            if done:
                break
        if done:
            break
    for name, tag, am, bm in (("morphism:twist1", "mor2", a.alpha1, b.alpha1),
                              ("morphism:twist2", "mor3", a.alpha2, b.alpha2)):
        lr = LawReport(name, tag)
        report.add(lr)
        lhs = mat_mul(f, am)
        rhs = mat_mul(bm, f)
        for j in range(n):
            res = _diff(mat_column(lhs, j), mat_column(rhs, j))
            if res and not lr.record((j + 1,), _vec_str(res), max_violations):
                break
    return report


def is_algebra_isomorphism(f: Matrix, a: TernaryHomAlgebra,
                           b: TernaryHomAlgebra) -> bool:
    return check_algebra_morphism(f, a, b, max_violations=1).passed \
        and mat_invertible(f)


def classical(dim: int, mu: MuTensor, radicand: int = 1) -> TernaryHomAlgebra:
    ident = mat_identity(dim)
    return TernaryHomAlgebra(dim, mu, ident, ident, radicand)
