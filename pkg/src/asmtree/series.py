"""Exact truncated power series and the assembly-tree generating functions.

TruncatedSeries stores a dense window of rational coefficients up to
per-variable caps; add/mul/sqrt are exact on the window (every retained
coefficient equals the true coefficient of the infinite series).

The exponential generating function counting edge-rule assembly trees of a
blown-up template (H, phi) is

    A(x) = 1 - sqrt(1 - 2*sum x_i + sum_{phi(i)=0} x_i^2
                      + 2*sum_{{i,j} not in E(H)} x_i x_j),

and counts are recovered as coefficient times the product of factorials.
Two square-root engines are used: the general coefficient recurrence from
g^2 = f, and, for polynomial radicands, the first-order identity
2*R*dg/dx = (dR/dx)*g which costs O(#monomials of R) per coefficient and
makes deep diagonal windows affordable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, factorial

from .errors import DisconnectedGraph, EngineError, InputError
from .graphs import HSpec
from .rationals import binom_half, format_rational


class TruncatedSeries:
    """Multivariate power series truncated to componentwise caps."""

    __slots__ = ("caps", "_strides", "_coeffs")

    def __init__(self, caps, coeffs=None):
        caps = tuple(caps)
        if not caps or any(not isinstance(c, int) or c < 0 for c in caps):
            raise InputError("caps must be a non-empty tuple of non-negative integers")
        strides = [1] * len(caps)
        for i in range(len(caps) - 2, -1, -1):
            strides[i] = strides[i + 1] * (caps[i + 1] + 1)
        size = strides[0] * (caps[0] + 1)
        if coeffs is None:
            coeffs = [0] * size
        elif len(coeffs) != size:
            raise InputError("dense coefficient block has the wrong size")
        object.__setattr__(self, "caps", caps)
        object.__setattr__(self, "_strides", tuple(strides))
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_terms(cls, caps, terms: dict) -> "TruncatedSeries":
        s = cls(caps)
        for exp, val in terms.items():
            s._coeffs[s._index(tuple(exp))] = Fraction(val)
        return s

    @classmethod
    def one(cls, caps) -> "TruncatedSeries":
        return cls.from_terms(caps, {(0,) * len(tuple(caps)): 1})

    @property
    def nvars(self) -> int:
        return len(self.caps)

    def _index(self, exp: tuple) -> int:
        if len(exp) != len(self.caps):
            raise InputError(f"exponent {exp} has wrong arity")
        idx = 0
        for e, c, s in zip(exp, self.caps, self._strides):
            if not isinstance(e, int) or e < 0 or e > c:
                raise InputError(f"exponent {exp} outside caps {self.caps}")
            idx += e * s
        return idx

    def coeff(self, exp) -> Fraction:
        return Fraction(self._coeffs[self._index(tuple(exp))])

    def exponents(self):
        """All window exponents in lexicographic order."""
        return product(*(range(c + 1) for c in self.caps))

    def terms(self):
        """Nonzero (exponent, coefficient) pairs in lexicographic order."""
        for exp in self.exponents():
            v = self._coeffs[self._index(exp)]
            if v:
                yield exp, Fraction(v)

    def _require_compatible(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise InputError("expected a TruncatedSeries")
        if self.caps != other.caps:
            raise InputError(f"cap mismatch: {self.caps} vs {other.caps}")

    def __add__(self, other):
        self._require_compatible(other)
        return TruncatedSeries(
            self.caps, [a + b for a, b in zip(self._coeffs, other._coeffs)]
        )

    def __sub__(self, other):
        self._require_compatible(other)
        return TruncatedSeries(
            self.caps, [a - b for a, b in zip(self._coeffs, other._coeffs)]
        )

    def __neg__(self):
        return TruncatedSeries(self.caps, [-a for a in self._coeffs])

    def scale(self, factor) -> "TruncatedSeries":
        factor = Fraction(factor)
        return TruncatedSeries(self.caps, [a * factor for a in self._coeffs])

    def __mul__(self, other):
        self._require_compatible(other)
        caps = self.caps
        out = [0] * len(self._coeffs)
        mine = list(self.terms())
        theirs = list(other.terms())
        for ea, va in mine:
            for eb, vb in theirs:
                exp = tuple(a + b for a, b in zip(ea, eb))
                if all(e <= c for e, c in zip(exp, caps)):
                    idx = 0
                    for e, s in zip(exp, self._strides):
                        idx += e * s
                    out[idx] += va * vb
        return TruncatedSeries(caps, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.caps == other.caps
            and all(a == b for a, b in zip(self._coeffs, other._coeffs))
        )

    def __repr__(self) -> str:
        head = ", ".join(
            f"{exp}:{format_rational(v)}" for exp, v in list(self.terms())[:6]
        )
        return f"TruncatedSeries(caps={self.caps}, [{head}...])"

    def to_json_obj(self) -> list:
        return [
            {"exp": list(exp), "coeff": format_rational(v)} for exp, v in self.terms()
        ]


class Series1:
    """Univariate truncated series: coefficients 0..cap."""

    __slots__ = ("cap", "coeffs")

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if not coeffs:
            raise InputError("Series1 needs at least the constant term")
        object.__setattr__(self, "cap", len(coeffs) - 1)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *_):
        raise AttributeError("Series1 is immutable")

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n <= self.cap:
            raise InputError(f"index {n} outside 0..{self.cap}")
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Series1) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        head = ", ".join(format_rational(c) for c in self.coeffs[:8])
        return f"Series1([{head}...], cap={self.cap})"


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Truncated product, exact within the shared caps."""
    return a * b


def sqrt1(f: TruncatedSeries) -> TruncatedSeries:
    """Square root with constant term 1, by the g^2 = f coefficient
    recurrence in lexicographic order (no floating point, no Newton)."""
    zero = (0,) * f.nvars
    if f.coeff(zero) != 1:
        raise InputError("sqrt1 needs constant term 1")
    caps = f.caps
    g = TruncatedSeries(caps)
    gc = g._coeffs
    fc = f._coeffs
    strides = g._strides
    gc[0] = Fraction(1)
    for exp in f.exponents():
        if all(e == 0 for e in exp):
            continue
        idx = sum(e * s for e, s in zip(exp, strides))
        acc = 0
        for d in product(*(range(e + 1) for e in exp)):
            di = sum(e * s for e, s in zip(d, strides))
            if di == 0 or di == idx:
                continue
            v = gc[di]
            if v:
                w = gc[idx - di]
                if w:
                    acc += v * w
        gc[idx] = (fc[idx] - acc) / 2
    return g


def _sqrt_poly_radicand(radicand: dict, caps) -> TruncatedSeries:
    """Square root of a polynomial radicand R (constant term 1) via
    2*R*dg/dx_p = (dR/dx_p)*g, which yields

        g[f] = -(1/f_p) * sum_{m in R, m != 0, m <= f} R[m]*(f_p - 3*m_p/2)*g[f-m]

    for any coordinate p with f_p >= 1. Each coefficient costs O(|R|)."""
    caps = tuple(caps)
    mono = [(tuple(m), Fraction(v)) for m, v in radicand.items() if any(m) and v]
    if Fraction(radicand.get((0,) * len(caps), 0)) != 1:
        raise InputError("radicand must have constant term 1")
    g = TruncatedSeries(caps)
    gc = g._coeffs
    strides = g._strides
    gc[0] = Fraction(1)
    for exp in g.exponents():
        p = next((i for i, e in enumerate(exp) if e), None)
        if p is None:
            continue
        fp = exp[p]
        idx = sum(e * s for e, s in zip(exp, strides))
        acc = 0
        for m, r in mono:
            lower = tuple(e - d for e, d in zip(exp, m))
            if any(e < 0 for e in lower):
                continue
            v = gc[sum(e * s for e, s in zip(lower, strides))]
            if v:
                acc += r * (fp - Fraction(3 * m[p], 2)) * v
        if acc:
            gc[idx] = -acc / fp
    return g


def _radicand_terms(spec: HSpec) -> dict:
    base, phi = spec.base, spec.phi
    n = base.n
    terms: dict[tuple, int] = {(0,) * n: 1}

    def unit(i, k=1):
        e = [0] * n
        e[i] = k
        return tuple(e)

    for i in range(n):
        terms[unit(i)] = -2
        if phi[i] == 0:
            terms[unit(i, 2)] = 1
    for i in range(n):
        for j in range(i + 1, n):
            if not base.has_edge(i, j):
                e = [0] * n
                e[i] = 1
                e[j] = 1
                terms[tuple(e)] = 2
    return terms


def hgraph_egf(spec: HSpec, caps) -> TruncatedSeries:
    """EGF of edge-rule assembly-tree counts over all multiplicities of a
    connected template: 1 - sqrt of the quadratic radicand above.

    The closed form counts exactly whenever no non-adjacent template pair
    carries a clique bit (in particular for every complete template, which
    covers all the solved families). Outside that domain the series is the
    recursion closure and can exceed the true count on some connected
    blowups, because disconnected multiplicity patterns beyond the
    corrected boundary cases feed nonzero values back into the
    convolution. The tests pin the smallest counterexample.
    """
    if not spec.base.is_connected():
        raise DisconnectedGraph("hgraph_egf needs a connected template graph")
    caps = tuple(caps)
    if len(caps) != spec.base.n:
        raise InputError(f"caps must have {spec.base.n} entries")
    g = _sqrt_poly_radicand(_radicand_terms(spec), caps)
    return TruncatedSeries.one(caps) - g


def count_from_egf(series: TruncatedSeries, n) -> int:
    """Tree count at multiplicity vector n: coefficient times n!; the
    result must be a non-negative integer or the engine is broken."""
    n = tuple(n)
    c = series.coeff(n)
    for k in n:
        c *= factorial(k)
    if c.denominator != 1 or c < 0:
        raise EngineError(f"non-integer or negative count {c} at {n}")
    return int(c)


def b_egf(N: int, M: int, J: int, cap: int) -> Series1:
    """EGF totalling tree counts over all vertex assignments to a template
    with N vertices, M edges and J zero-bits:
    1 - sqrt(1 - 2Nx + (2*C(N,2) - 2M + J)*x^2)."""
    if not (isinstance(N, int) and N >= 1):
        raise InputError("b_egf needs N >= 1")
    if not (isinstance(M, int) and 0 <= M <= comb(N, 2)):
        raise InputError(f"b_egf needs 0 <= M <= C({N},2)")
    if not (isinstance(J, int) and 0 <= J <= N):
        raise InputError(f"b_egf needs 0 <= J <= {N}")
    if not (isinstance(cap, int) and cap >= 0):
        raise InputError("b_egf needs cap >= 0")
    radicand = {(0,): 1, (1,): -2 * N, (2,): 2 * comb(N, 2) - 2 * M + J}
    g = _sqrt_poly_radicand(radicand, (cap,))
    return Series1([(1 if k == 0 else 0) - g.coeff((k,)) for k in range(cap + 1)])


def diagonal(series: TruncatedSeries) -> Series1:
    """Univariate diagonal: coefficient n is the coefficient at equal
    exponents (n, ..., n); requires equal caps."""
    caps = series.caps
    if len(set(caps)) != 1:
        raise InputError(f"diagonal needs equal caps, got {caps}")
    k = len(caps)
    return Series1([series.coeff((n,) * k) for n in range(caps[0] + 1)])


def diag_formula_easyex(n: int) -> Fraction:
    """Closed form for the diagonal of 1 - sqrt(1 - 2x - 2y + y^2).

    Evaluates sum_{m=ceil(3n/2)}^{2n} C(1/2,m) C(m,n) C(m-n,2m-3n) 4^(m-n)
    and returns its NEGATIVE: the inner signs (-1)^m (-1)^(2n-m) cancel,
    so the whole alternation collapses to the single global minus coming
    from 1 - sqrt. The convention is fixed against the series oracle
    (n=1 gives 1, n=2 gives 3).
    """
    if not isinstance(n, int) or n < 1:
        raise InputError("diag_formula_easyex needs n >= 1")
    total = Fraction(0)
    for m in range((3 * n + 1) // 2, 2 * n + 1):
        total += binom_half(m) * comb(m, n) * comb(m - n, 2 * m - 3 * n) * 4 ** (m - n)
    return -total
