"""Hilbert series of circle invariants as exact rational functions.

Two engines and an independent oracle:

* generic path: for each negative weight a_i (N = -a_i) the integrand's
  residues sum to a series section - take the power series of
  Psi_i(u) = 1/prod_{j!=i}(1 - u^{a_j - a_i}) and keep every N-th
  coefficient.  On rational functions the section is computed by the
  denominator substitution (1-u^c) -> (1 - t^{c/gcd(N,c)})^{gcd(N,c)} and a
  numerator recovered from the series (its degree stays below the
  denominator degree, so the expansion length is known a priori).

* degenerate path (repeated negative weights): substitute t = u^N and place
  all N poles of a repeated group at once by writing z = x*u*(1+w) with x a
  formal N-th root of unity.  Group factors collapse to 1 - (1+w)^{-N} (a
  pole of order r in w); all other factors are invertible power series in w
  over Q(u)[x]/(x^N - 1).  The residue is the w^{r-1} coefficient; summing
  over the N roots is N times the x^0 component.  Denominators are tracked
  as multisets of (1-u^c) factors so the root-of-unity symmetrization that
  brings everything back to integer powers of t = u^N is a per-factor
  closed form.

* oracle: the m-th coefficient counts exponent vectors with weighted sum
  zero and total degree m, by dynamic programming - no residues involved.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

import numpy

from .cyclotomic import CyclotomicElement
from .errors import (
    DegreeOverflow,
    InternalInvariantViolation,
    OracleMismatch,
    Unstable,
)
from .exact import (
    LaurentPolynomial,
    Polynomial,
    RationalFunction,
    _expand_view,
    present_with_factors,
)
from .weights import WeightVector

DEFAULT_DEGREE_LIMIT = 10**7


@dataclass(frozen=True)
class SectionProblem:
    """sign * u^shift / prod (1 - u^c) together with the extraction stride."""

    sign: int
    shift: int
    factors: tuple  # positive exponents c, one per denominator factor
    ratio: int  # N: keep series coefficients at indices 0, N, 2N, ...


def section_problem(exponents, ratio: int) -> SectionProblem:
    """Normalize 1/prod(1 - u^e) with arbitrary nonzero integer exponents:
    each negative exponent factor contributes -u^{|e|}/(1 - u^{|e|})."""
    sign = 1
    shift = 0
    factors = []
    for e in exponents:
        if e == 0:
            raise InternalInvariantViolation("zero exponent in section source")
        if e > 0:
            factors.append(e)
        else:
            sign = -sign
            shift += -e
            factors.append(-e)
    return SectionProblem(sign, shift, tuple(sorted(factors)), ratio)


def section(problem: SectionProblem, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> RationalFunction:
    """Rational function whose series is every ratio-th coefficient of the
    problem's source series."""
    n_: int = problem.ratio
    den_degree = sum(problem.factors)
    if den_degree > degree_limit or n_ * den_degree > degree_limit:
        raise DegreeOverflow(
            f"section denominator degree {den_degree} (series length "
            f"{n_ * den_degree}) exceeds the limit {degree_limit}"
        )
    if problem.shift >= den_degree:
        raise InternalInvariantViolation("section source is not proper")
    view: Counter = Counter()
    for c in problem.factors:
        g = gcd(n_, c)
        view[c // g] += g
    # integer series of the source up to the last index we extract
    top = n_ * den_degree
    series = [0] * (top + 1)
    series[problem.shift] = problem.sign
    for c in problem.factors:
        for j in range(c, top + 1):
            series[j] += series[j - c]
    extracted = series[:: n_]  # length den_degree + 1
    den = _expand_view(view)
    num = [0] * (den_degree + 1)
    for e, coeff in den.items():
        ci = int(coeff)
        for m in range(e, den_degree + 1):
            num[m] += ci * extracted[m - e]
    num_poly = Polynomial({e: c for e, c in enumerate(num) if c})
    return RationalFunction.from_factored(num_poly, view)


def hilbert_generic(v: WeightVector, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> RationalFunction:
    """Sum of the per-negative-weight sections (negative side must be
    repetition-free)."""
    if not v.is_generic:
        raise Unstable("negative side has repeated weights; use the degenerate engine")
    ws = v.weights
    total = RationalFunction.zero()
    for i in range(v.k):
        a_i = ws[i]
        exponents = [w - a_i for j, w in enumerate(ws) if j != i]
        total = total + section(section_problem(exponents, -a_i), degree_limit)
    return total


# ---------------------------------------------------------------------------
# degenerate engine


class UFrac:
    """num(u) / prod (1 - u^c)^mult with a Laurent-polynomial numerator.

    The denominator stays in factored multiset form (possibly unreduced);
    that is what makes the final symmetrization under u -> eta*u exact and
    cheap.  Only ring operations are needed, never a polynomial gcd.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den=None):
        self.num = num
        self.den = Counter() if (num.is_zero() or not den) else Counter(den)

    @staticmethod
    def zero() -> "UFrac":
        return UFrac(LaurentPolynomial())

    @staticmethod
    def monomial(exp: int, coeff=1) -> "UFrac":
        return UFrac(LaurentPolynomial.monomial(exp, coeff))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "UFrac") -> "UFrac":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        keys = set(self.den) | set(other.den)
        common = Counter({c: max(self.den[c], other.den[c]) for c in keys})
        na = self.num * _expand_view(common - self.den)
        nb = other.num * _expand_view(common - other.den)
        return UFrac(na + nb, common)

    def __neg__(self) -> "UFrac":
        return UFrac(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "UFrac":
        if isinstance(other, UFrac):
            if self.is_zero() or other.is_zero():
                return UFrac.zero()
            return UFrac(self.num * other.num, self.den + other.den)
        if other == 0:
            return UFrac.zero()
        return UFrac(self.num * other, self.den)

    __rmul__ = __mul__

    def __repr__(self):
        return f"UFrac({self.num!r} / {dict(self.den)})"


def _ring_scalar(n_: int, value) -> CyclotomicElement:
    if isinstance(value, UFrac):
        u = value
    else:
        u = UFrac.monomial(0, value)
    if u.is_zero():
        return CyclotomicElement("full", n_, {})
    return CyclotomicElement("full", n_, {0: u})


def _inv_one_minus_monomial(b: int, s: int, n_: int) -> CyclotomicElement:
    """(1 - x^b u^s)^{-1} in Q(u)[x]/(x^n - 1) for s != 0.

    With M = n/gcd(n, b) the M-th power of x^b u^s is the scalar u^{sM}, so
    the inverse is (sum_{i<M} x^{bi} u^{si}) / (1 - u^{sM}).
    """
    if s == 0:
        raise InternalInvariantViolation("monomial inverse needs a u power")
    m_ = n_ // gcd(n_, b % n_ or n_)
    t_ = s * m_
    rep = {}
    for i in range(m_):
        exp_x = (b * i) % n_
        if t_ > 0:
            piece = UFrac(LaurentPolynomial.monomial(s * i), {t_: 1})
        else:
            # 1/(1 - u^T) with T < 0 equals -u^{|T|}/(1 - u^{|T|})
            piece = UFrac(LaurentPolynomial.monomial(s * i - t_, -1), {-t_: 1})
        rep[exp_x] = piece
    return CyclotomicElement("full", n_, rep)


def _binomial(b: int, j: int) -> Fraction:
    """Generalized binomial coefficient C(b, j) for any integer b."""
    num = 1
    for i in range(j):
        num *= b - i
    den = 1
    for i in range(2, j + 1):
        den *= i
    return Fraction(num, den)


def _series_mul(a: list, b: list, order: int) -> list:
    out = [Fraction(0)] * order
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(order - i):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def _series_inverse(a: list, order: int) -> list:
    inv0 = Fraction(1) / a[0]
    out = [inv0] + [Fraction(0)] * (order - 1)
    for m in range(1, order):
        acc = Fraction(0)
        for j in range(1, m + 1):
            if j < len(a) and a[j]:
                acc += a[j] * out[m - j]
        out[m] = -inv0 * acc
    return out


def _ring_series_mul(a: list, b: list, order: int) -> list:
    n_ = a[0].order if a else b[0].order
    zero = CyclotomicElement("full", n_, {})
    out = [zero] * order
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j in range(order - i):
            if not b[j].is_zero():
                out[i + j] = out[i + j] + ai * b[j]
    return out


def _offgroup_inverse_series(b: int, n_: int, order: int) -> list:
    """w-series of (1 - x^b u^{b+n} (1+w)^b)^{-1}, coefficients in the ring."""
    s = b + n_
    inv_q = _inv_one_minus_monomial(b, s, n_)
    zero = CyclotomicElement("full", n_, {})
    out = [zero] * order
    out[0] = inv_q
    if order == 1:
        return out
    q = CyclotomicElement("full", n_, {b % n_: UFrac.monomial(s)})
    step = q * inv_q
    # expand around w=0: (1-Q) - Q*((1+w)^b - 1); geometric series in the
    # second term, which has valuation 1 in w
    b_series = [Fraction(0)] + [_binomial(b, j) for j in range(1, order)]
    b_pow = [Fraction(1)] + [Fraction(0)] * (order - 1)
    cur = inv_q
    for i in range(1, order):
        b_pow = _series_mul(b_pow, b_series, order)
        cur = cur * step
        for j in range(i, order):
            if b_pow[j]:
                out[j] = out[j] + cur * b_pow[j]
    return out


def _group_piece(a: int, r: int, offgroup, degree_limit: int):
    """Contribution of one repeated negative value a (multiplicity r) as a
    (numerator, factored denominator view) pair in t."""
    n_ = -a
    order = r
    # scalar part: (w / (1 - (1+w)^{-N}))^r / (1+w)
    d_over_w = [Fraction((-1) ** j * comb(n_ + j, j + 1)) for j in range(order)]
    h = _series_inverse(d_over_w, order)
    pref = h
    for _ in range(r - 1):
        pref = _series_mul(pref, h, order)
    pref = _series_mul(pref, [Fraction((-1) ** j) for j in range(order)], order)
    series = [_ring_scalar(n_, c) for c in pref]
    for b, mult in offgroup:
        inv_series = _offgroup_inverse_series(b, n_, order)
        for _ in range(mult):
            series = _ring_series_mul(series, inv_series, order)
    residue = series[r - 1]
    x0 = residue.constant_coefficient()
    if not isinstance(x0, UFrac):
        x0 = UFrac.zero()
    total = x0 * Fraction(n_)
    return _symmetrize(total, n_, degree_limit)


def _symmetrize(value: UFrac, n_: int, degree_limit: int):
    """Turn T(u) (invariant under u -> eta*u for eta^n = 1) into a function
    of t = u^n: multiply through by the conjugate denominators and divide
    every exponent by n.  Raises when the invariance fails."""
    num = value.num
    view: Counter = Counter()
    for c, mult in sorted(value.den.items()):
        g = gcd(c, n_)
        reps = n_ // g
        geometric = Polynomial({c * i: 1 for i in range(reps)})
        bracket = Polynomial.one_minus_power(c * reps).pow(g - 1) * geometric
        for _ in range(mult):
            num = num * bracket
        view[c // g] += g * mult
    if sum(d * m for d, m in view.items()) > degree_limit:
        raise DegreeOverflow("degenerate denominator degree exceeds the limit")
    t_coeffs = {}
    for e, coeff in num.items():
        if e < 0 or e % n_:
            raise InternalInvariantViolation(
                "residue sum is not invariant under u -> eta*u"
            )
        t_coeffs[e // n_] = coeff
    return Polynomial(t_coeffs), view


def hilbert_degenerate(v: WeightVector, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> RationalFunction:
    """Residue engine grouping equal negative weights (valid for any stable
    vector; required when both sides carry repeats)."""
    groups = Counter(v.negatives)
    total = RationalFunction.zero()
    for a in sorted(groups, reverse=True):
        offgroup = sorted(Counter(w for w in v.weights if w != a).items())
        num, view = _group_piece(a, groups[a], offgroup, degree_limit)
        total = total + RationalFunction.from_factored(num, view)
    return total


# ---------------------------------------------------------------------------
# oracle and dispatcher


def oracle_coefficients(v: WeightVector, upto: int) -> list:
    """Coefficients 0..upto of the Hilbert series, counted directly:
    dim of degree-m invariants = #{e >= 0 : sum a_i e_i = 0, sum e_i = m}."""
    ws = list(v.weights) + [0] * v.zero_count
    if upto < 0:
        return []
    amax = max(abs(w) for w in ws)
    width = upto * amax
    n_ = len(ws)
    # counts fit comfortably in int64 iff the unconstrained monomial count does
    if comb(upto + n_, n_ - 1) < 2**62:
        return _oracle_numpy(ws, upto, width)
    return _oracle_python(ws, upto)


def _oracle_numpy(ws, upto: int, width: int) -> list:
    dp = numpy.zeros((upto + 1, 2 * width + 1), dtype=numpy.int64)
    dp[0, width] = 1
    size = 2 * width + 1
    for a in ws:
        if a == 0:
            for d in range(1, upto + 1):
                dp[d] += dp[d - 1]
        elif a > 0:
            for d in range(1, upto + 1):
                if a < size:
                    dp[d, a:] += dp[d - 1, :-a]
        else:
            aa = -a
            for d in range(1, upto + 1):
                if aa < size:
                    dp[d, :-aa] += dp[d - 1, aa:]
    return [int(dp[m, width]) for m in range(upto + 1)]


def _oracle_python(ws, upto: int) -> list:
    rows = [dict() for _ in range(upto + 1)]
    rows[0][0] = 1
    for a in ws:
        for d in range(1, upto + 1):
            target = rows[d]
            for w, count in rows[d - 1].items():
                key = w + a
                target[key] = target.get(key, 0) + count
    return [rows[m].get(0, 0) for m in range(upto + 1)]


def molien_coefficient_oracle(v: WeightVector, m: int) -> int:
    return oracle_coefficients(v, m)[m]


def _with_zero_block(f: RationalFunction, zero_count: int) -> RationalFunction:
    if zero_count == 0:
        return f
    return RationalFunction.from_factored(Polynomial.one(), Counter({1: zero_count})) * f


def hilbert_series(
    v: WeightVector,
    method: str = "auto",
    verify_depth=None,
    degree_limit: int = DEFAULT_DEGREE_LIMIT,
) -> RationalFunction:
    """Dispatcher: generic path when one side is repetition-free (negating
    if needed), degenerate engine otherwise; optional oracle cross-check."""
    if method == "auto":
        if v.is_generic:
            base = hilbert_generic(v, degree_limit)
        elif v.positive_side_generic:
            base = hilbert_generic(v.negate(), degree_limit)
        else:
            base = hilbert_degenerate(v, degree_limit)
    elif method == "generic":
        if v.is_generic:
            base = hilbert_generic(v, degree_limit)
        elif v.positive_side_generic:
            base = hilbert_generic(v.negate(), degree_limit)
        else:
            raise Unstable("both sides have repeated weights; generic path unavailable")
    elif method == "degenerate":
        base = hilbert_degenerate(v, degree_limit)
    else:
        raise ValueError(f"unknown method {method!r}")
    result = _with_zero_block(base, v.zero_count)
    result = present_with_factors(result, v.n - 1 + v.zero_count)
    if verify_depth:
        depth = (
            max(2 * result.denominator.degree, 50)
            if verify_depth == "auto"
            else int(verify_depth)
        )
        verify_against_oracle(v, result, depth)
    return result


def verify_against_oracle(v: WeightVector, f: RationalFunction, depth: int):
    expected = oracle_coefficients(v, depth)
    actual = f.series_at_zero(depth)
    for m, (want, got) in enumerate(zip(expected, actual)):
        if got != want:
            raise OracleMismatch(
                f"coefficient {m} of {v} is {got}, oracle says {want}"
            )


def hilbert_heuristic(v: WeightVector, degree_limit: int = DEFAULT_DEGREE_LIMIT):
    """Conjectural fast path: candidate denominator
    prod_{i<=k, j>k} (1 - t^{a_j - a_i}), numerator fitted from the oracle,
    then verified to twice the candidate degree.  Raises OracleMismatch when
    the verification fails."""
    view: Counter = Counter()
    for a in v.negatives:
        for b in v.positives:
            view[b - a] += 1
    deg = sum(d * m for d, m in view.items())
    if deg > degree_limit:
        raise DegreeOverflow("heuristic denominator degree exceeds the limit")
    coeffs = oracle_coefficients(v, 2 * deg)
    den = _expand_view(view)
    num = [0] * (deg + 1)
    for e, c in den.items():
        ci = int(c)
        for m in range(e, deg + 1):
            num[m] += ci * coeffs[m - e]
    candidate = RationalFunction.from_factored(
        Polynomial({e: c for e, c in enumerate(num) if c}), view
    )
    actual = candidate.series_at_zero(2 * deg)
    if [int(a) for a in actual] != coeffs:
        raise OracleMismatch("heuristic candidate denominator is incomplete")
    result = _with_zero_block(candidate, v.zero_count)
    return result
