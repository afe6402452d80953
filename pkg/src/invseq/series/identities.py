"""Generating-function identities, each checked exactly through a finite order.

Every ``*_report`` function returns a :class:`CheckReport`; the matching
``*_check`` wrapper returns only the verdict.  Series in t carry Laurent
polynomials in x (``xbar`` is 1/x), except the distinct-values identity, which
is a series in x with Laurent polynomials in t.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from ..enumeration import (
    BAXTER_PATTERNS, CATALAN_TRIPLE, baxter_generating_tree, distribution, gen_avoiders,
)
from ..stats import lma_set, rma_set
from .algebra import LaurentPoly, MultiPoly, TruncatedSeries, ValuationError

__all__ = [
    "CheckReport", "kernel", "kernel_root", "kernel_root_Y", "dist_ogf_series",
    "dist_ogf_report", "dist_ogf_check", "kernel_root_report", "baxter_F",
    "baxter_fe_report", "baxter_fe_check", "F_tilde", "main_rhs",
    "main_identity_report", "main_identity_check", "baxter_lr_counts",
    "bousquet_side_report", "bousquet_side_check", "IDENTITIES",
]

ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
X = LaurentPoly.monomial(1)
XBAR = LaurentPoly.monomial(-1)


@dataclass
class CheckReport:
    identity: str
    order: int
    passed: bool
    failures: list[str] = field(default_factory=list)
    digests: list[str] = field(default_factory=list)

    def require(self, ok: bool, message: str) -> None:
        if not ok:
            self.passed = False
            self.failures.append(message)

    def to_json(self) -> dict:
        return {"identity": self.identity, "order": self.order,
                "status": "pass" if self.passed else "fail",
                "failures": self.failures,
                "digests": [{"order": n, "sha256": d} for n, d in enumerate(self.digests)]}


def _series(coeffs, order: int) -> TruncatedSeries:
    return TruncatedSeries(coeffs, order, ZERO)


def _const(c, order: int) -> TruncatedSeries:
    return TruncatedSeries.constant(c if isinstance(c, LaurentPoly) else LaurentPoly.const(c), order, ZERO)


def _t(order: int) -> TruncatedSeries:
    return TruncatedSeries.monomial(ONE, 1, order, ZERO)


def _reflect(s: TruncatedSeries) -> TruncatedSeries:
    return s.map(LaurentPoly.reflect)


def _within_bounds(s: TruncatedSeries) -> bool:
    # at t-order n every exponent lies in [-(3n+3), 3n+3]
    return all(not c or (-(3 * n + 3) <= c.low and c.high <= 3 * n + 3)
               for n, c in enumerate(s.coeffs))


# -- distinct positive entries over I_n(>=,-,>=) ----------------------------------

def dist_ogf_series(N_x: int) -> TruncatedSeries:
    """P(x, t) = sum_n x^n sum_e t^dist(e) from enumeration, through x^N_x."""
    coeffs = [ZERO]
    for n in range(1, N_x + 1):
        d = distribution(gen_avoiders(n, CATALAN_TRIPLE), ["dist"]).marginal(0)
        coeffs.append(LaurentPoly(d))
    return TruncatedSeries(coeffs, N_x, ZERO, var="x")


def _xseries(coeffs, order):
    return TruncatedSeries(coeffs, order, ZERO, var="x")


def dist_ogf_report(N_x: int) -> CheckReport:
    rep = CheckReport("dist-ogf", N_x, True)
    P = dist_ogf_series(N_x)
    T = LaurentPoly.monomial(1)  # t, the coefficient variable here
    T2, T3 = T * T, T * T * T
    # 2 t^2 x (t x - 1 - x) and 1 - 2 t x (1 + x - t x), 1 - 4 t x (1 + x - t x)
    denom = _xseries([ZERO, -2 * T2, 2 * T3 - 2 * T2], N_x + 1)
    lin = _xseries([ONE, -2 * T, 2 * T2 - 2 * T], N_x + 1)
    disc = _xseries([ONE, -4 * T, 4 * T2 - 4 * T], N_x + 1)

    root = (denom * P + lin).truncate(N_x)
    rep.require(root * root == disc.truncate(N_x), "squared form fails")

    closed = (disc.sqrt() - lin) / denom
    rep.require(closed.agrees(P, N_x), "closed form disagrees with enumeration")
    rep.require(all(c.is_integral() and c.low >= 0 for c in closed.coeffs),
                "closed form has non-polynomial coefficients")
    rep.digests = P.digests()
    return rep


def dist_ogf_check(N_x: int) -> bool:
    return dist_ogf_report(N_x).passed


# -- kernel and its roots ----------------------------------------------------------

def kernel() -> MultiPoly:
    """K(x, y) = x y - t (1 + x)(1 + y)(x + y) as a polynomial in t, x, y."""
    v = ("t", "x", "y")
    t, x, y = (MultiPoly.var(s, v) for s in v)
    return x * y - t * (1 + x) * (1 + y) * (x + y)


def _discriminant(order: int) -> TruncatedSeries:
    # 1 - 2 t (1+x)(1+xbar) - t^2 (1-x^2)(1-xbar^2)
    a = (ONE + X) * (ONE + XBAR)
    b = (ONE - X * X) * (ONE - XBAR * XBAR)
    return _series([ONE, -2 * a, -b], order)


def kernel_root(order: int, sign: int = -1) -> TruncatedSeries:
    """Y (sign -1) or Y' (sign +1) from the quadratic formula, through t^order.

    Y' has a numerator with non-zero constant term, so the division by t raises
    :class:`ValuationError`: that root has no expansion in t.
    """
    root = _discriminant(order + 1).sqrt()
    num = _series([ONE, -(ONE + X) * (ONE + XBAR)], order + 1) + root * sign
    return num.shift(1) / (2 * (ONE + XBAR))


def kernel_root_Y(N_t: int) -> TruncatedSeries:
    return kernel_root(N_t).truncate(N_t)


def _kernel_at(Y: TruncatedSeries) -> TruncatedSeries:
    n = Y.order
    x = _const(X, n)
    return x * Y - _t(n) * (1 + x) * (1 + Y) * (x + Y)


def kernel_root_report(N_t: int) -> CheckReport:
    rep = CheckReport("kernel-root", N_t, True)
    Y = kernel_root_Y(N_t)
    rep.require(not Y[0], "Y has a non-zero constant term")
    rep.require(_kernel_at(Y).valuation() is None, "K(x, Y) does not vanish")
    rep.require(kernel() == kernel().swap("x", "y"), "kernel is not symmetric")
    rep.require(_within_bounds(Y), "exponent of Y escapes its bound")
    try:
        kernel_root(N_t, sign=+1)
        rep.require(False, "second root unexpectedly expands in t")
    except ValuationError:
        pass
    rep.digests = Y.digests()
    return rep


def kernel_root_check(N_t: int) -> bool:
    return kernel_root_report(N_t).passed


# -- functional equation for the Baxter generating tree -------------------------------

_UV = ("u", "v")
_U = MultiPoly.var("u", _UV)
_V = MultiPoly.var("v", _UV)
_ZUV = MultiPoly(_UV)


def baxter_F(N_t: int):
    """F(u, v), F(1, v), F(u, u) as series in t with polynomial coefficients."""
    F, _ = baxter_generating_tree(max(N_t, 1))
    full, at_one, diag = [_ZUV], [_ZUV], [_ZUV]
    for n in range(1, N_t + 1):
        full.append(MultiPoly(_UV, {(p, q): c for (p, q), c in F[n].items()}))
        c1: Counter = Counter()
        cd: Counter = Counter()
        for (p, q), c in F[n].items():
            c1[(0, q)] += c
            cd[(p + q, 0)] += c
        at_one.append(MultiPoly(_UV, c1))
        diag.append(MultiPoly(_UV, cd))
    mk = lambda cs: TruncatedSeries(cs, N_t, _ZUV)
    return mk(full), mk(at_one), mk(diag)


def baxter_fe_report(N_t: int) -> CheckReport:
    """Cleared-denominator form of the functional equation, through t^N_t."""
    rep = CheckReport("baxter-fe", N_t, True)
    F, F1, Fd = baxter_F(N_t)
    u, v = _U, _V
    t = TruncatedSeries.monomial(MultiPoly.const(1, _UV), 1, N_t, _ZUV)
    lhs_factor = (1 - u) * (u - v) + t * (v * (u - v) + v * u * (1 - u))
    lhs = lhs_factor * F
    rhs = (t * (u * v * (1 - u) * (u - v))
           + t * (u * v * (2 - u) * (u - v)) * F1
           + t * (v * u * (1 - u)) * Fd)
    for n in range(N_t + 1):
        rep.require(lhs[n] == rhs[n], f"mismatch at t^{n}")
    rep.digests = F.digests()
    return rep


def baxter_fe_check(N_t: int) -> bool:
    return baxter_fe_report(N_t).passed


# -- main identity after the obstinate kernel method ------------------------------------

def F_tilde(N_t: int) -> TruncatedSeries:
    """x F(1+x, 1+x) from the generating tree."""
    F, _ = baxter_generating_tree(max(N_t, 1))
    coeffs = [ZERO]
    for n in range(1, N_t + 1):
        by_size: Counter = Counter()
        for (p, q), c in F[n].items():
            by_size[p + q] += c
        coeffs.append(sum(((ONE + X) ** s * c for s, c in by_size.items()), ZERO) * X)
    return _series(coeffs, N_t)


def main_rhs(N_t: int) -> TruncatedSeries:
    """Y(1+x)(x^4 - 2Y x^3 + 2Y^2 x - 2Y + 1) / (x^2 (Y-1)(Y-x))."""
    Y = kernel_root_Y(N_t)
    x = _const(X, N_t)
    x3, x4 = _const(X ** 3, N_t), _const(X ** 4, N_t)
    num = Y * (1 + x) * (x4 - 2 * Y * x3 + 2 * Y * Y * x - 2 * Y + 1)
    den = _const(X * X, N_t) * (Y - 1) * (Y - x)
    return num / den


def main_identity_report(N_t: int) -> CheckReport:
    rep = CheckReport("main-identity", N_t, True)
    Ft = F_tilde(N_t)
    rhs = main_rhs(N_t)
    rep.require((Ft + _reflect(Ft)).agrees(rhs, N_t), "F~(x) + F~(1/x) differs from the right side")
    for n in range(N_t + 1):
        c = rhs[n]
        rep.require(c.constant_term() == 0, f"non-zero constant term at t^{n}")
        rep.require(c.positive_part() == Ft[n], f"positive part differs at t^{n}")
        rep.require(c.negative_part() == Ft[n].reflect(), f"negative part differs at t^{n}")
        rep.require(all(k >= 1 and v > 0 and v.denominator == 1 for k, v in Ft[n].terms.items()),
                    f"F~ coefficient at t^{n} not in x N[x]")
    rep.require(_within_bounds(rhs), "exponent of the right side escapes its bound")
    rep.digests = Ft.digests()
    return rep


def main_identity_check(N_t: int) -> bool:
    return main_identity_report(N_t).passed


# -- left/right maxima on Baxter permutations ---------------------------------------------

def baxter_lr_counts(N_t: int) -> dict[int, Counter]:
    """n -> Counter of (lma, rma) over Baxter permutations of length n."""
    out = {}
    for n in range(1, N_t + 1):
        out[n] = Counter((len(lma_set(p)), len(rma_set(p)))
                         for p in gen_avoiders(n, list(BAXTER_PATTERNS), "perm"))
    return out


def bousquet_side_report(N_t: int) -> CheckReport:
    rep = CheckReport("bousquet-side", N_t, True)
    counts = baxter_lr_counts(N_t)
    Gt, R = [ZERO], [ZERO]
    for n in range(1, N_t + 1):
        Gt.append(sum(((ONE + X) ** (a + b) * c for (a, b), c in counts[n].items()), ZERO) * X)
        R.append(sum(((ONE + X) ** a * c for (a, _), c in counts[n].items()), ZERO) * X)
    Gt, R = _series(Gt, N_t), _series(R, N_t)
    Y = kernel_root_Y(N_t)
    t = _t(N_t)
    x = _const(X, N_t)
    xbar2 = _const(XBAR * XBAR, N_t)
    sq = _const((ONE + X) ** 2, N_t)

    rep.require(((x - 2 * t * sq) * Gt).agrees(t * sq * (_const(X * X, N_t) - 2 * R)),
                "G~ / R relation fails")
    r_sum = xbar2 * Y * (1 + _const(X ** 3, N_t) - x * Y)
    rep.require((R + _reflect(R)).agrees(r_sum), "R(x) + R(1/x) relation fails")

    chained = (t * sq) / (x - 2 * t * sq) * (_const(X * X + XBAR * XBAR, N_t) - 2 * r_sum)
    rep.require((Gt + _reflect(Gt)).agrees(chained), "G~(x) + G~(1/x) differs from the chained form")
    rep.require(chained.agrees(main_rhs(N_t)), "chained form differs from the kernel-method right side")
    rep.require(Gt.agrees(F_tilde(N_t)), "G~ differs from F~")
    rep.digests = Gt.digests()
    return rep


def bousquet_side_check(N_t: int) -> bool:
    return bousquet_side_report(N_t).passed


IDENTITIES = {
    "dist-ogf": dist_ogf_report,
    "kernel-root": kernel_root_report,
    "baxter-fe": baxter_fe_report,
    "main-identity": main_identity_report,
    "bousquet-side": bousquet_side_report,
}
