"""A-invariant and Gorenstein diagnosis.

The a-invariant is the degree of the Hilbert series.  A circle invariant
ring is Cohen-Macaulay, so it is Gorenstein exactly when the series
satisfies the functional equation Hilb(1/t) = (-1)^dim t^{-a} Hilb(t);
that test is a polynomial identity on the reduced pair.  Three cheap
criteria avoid computing the series at all:

* n = 2: the ring is a polynomial ring on one generator (always Gorenstein);
* k = 1 with a_1 dividing the sum of the positive weights: Gorenstein with a
  known a-invariant;
* 2*gamma_1/gamma_0 not an integer: never Gorenstein.

The integer ratio 2*gamma_1/gamma_0 being an integer is necessary but not
sufficient - ``analyze`` settles the inconclusive cases with the series.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InternalInvariantViolation, ZeroFunction
from .exact import Polynomial, RationalFunction
from .hilbert import hilbert_series
from .laurent import _s, gamma0, gamma1
from .schur import elementary_symmetric
from .weights import WeightVector, remove

N2_POLYNOMIAL = "N2Polynomial"
K1_DIVISIBILITY = "K1Divisibility"


def a_invariant(f: RationalFunction) -> int:
    """Degree of the series: numerator degree minus denominator degree."""
    if f.is_zero():
        raise ZeroFunction("a-invariant of the zero function")
    return f.degree


def _reversed_poly(p: Polynomial) -> Polynomial:
    d = p.degree
    return Polynomial({d - e: c for e, c in p.items()})


def stanley_test(f: RationalFunction, dim: int) -> bool:
    """Exact functional-equation test Hilb(1/t) = (-1)^dim t^{-a} Hilb(t).

    Substituting 1/t turns each polynomial into its reversal times a power
    of t, and the powers cancel against t^{-a}; what remains is the
    polynomial identity rev(num)*den == (-1)^dim num*rev(den).
    """
    lhs = _reversed_poly(f.numerator) * f.denominator
    rhs = f.numerator * _reversed_poly(f.denominator)
    if dim % 2:
        rhs = -rhs
    return lhs == rhs


def a_invariant_closed_form(v: WeightVector) -> Fraction:
    """-2*gamma_1/gamma_0 - dim, from the closed gamma forms.

    Returns a Fraction and never rounds: a non-integer value is itself the
    obstruction (the ring cannot be Gorenstein).  zero-weight coordinates
    shift the dimension but not the gamma ratio.
    """
    g0 = gamma0(v)
    g1 = gamma1(v)
    return -2 * g1 / g0 - (v.n - 1 + v.zero_count)


def a_invariant_schur_form(v: WeightVector) -> Fraction:
    """The same a-invariant directly in partial-Schur terms.

    The reduced-vector terms are read at the top admissible row exponent
    n-3 for the (n-1)-entry reduced vectors; the agreement of this form
    with ``a_invariant_closed_form`` is asserted in the test suite.
    """
    ws = v.weights
    n_ = v.n
    s2 = _s(n_ - 2, ws)
    total = elementary_symmetric(1, ws) * _s(n_ - 3, ws)
    for j in range(n_):
        seq_j, g_j = remove(v, {j})
        if g_j == 1 or not seq_j:
            continue
        cofactor = Fraction(1)
        if j < v.k:
            for q in v.positives:
                cofactor *= ws[j] - q
        else:
            for p in v.negatives:
                cofactor *= p - ws[j]
        total += (1 - g_j) * _s(n_ - 3, seq_j) * cofactor
    return total / s2 - n_ - v.zero_count


def integer_obstruction(v: WeightVector):
    """(ratio 2*gamma_1/gamma_0, ratio in Z?).  False proves NotGorenstein;
    True is inconclusive."""
    ratio = 2 * gamma1(v) / gamma0(v)
    return ratio, ratio.denominator == 1


def k1_sufficient(v: WeightVector) -> bool:
    """k = 1 and a_1 | sum of positive weights: implies Gorenstein with
    a-invariant (sum of all weights)/a_1 - n."""
    if v.k != 1:
        return False
    return sum(v.positives) % v.negatives[0] == 0


def _k1_a_invariant(v: WeightVector) -> int:
    total = sum(v.weights)
    a1 = v.negatives[0]
    return total // a1 - v.n - v.zero_count


@dataclass
class GorensteinReport:
    weights: tuple
    zero_count: int
    faithful_scale: int
    dimension: int
    degenerate: bool
    gamma0: Fraction
    gamma1: Fraction
    ratio_2g1_g0: Fraction
    ratio_is_integer: bool
    stanley_holds: bool
    classification: str
    sufficient_condition_hits: list = field(default_factory=list)
    hilbert: RationalFunction | None = None
    degree: int | None = None

    def __post_init__(self):
        if self.classification != ("Gorenstein" if self.stanley_holds else "NotGorenstein"):
            raise InternalInvariantViolation("classification must mirror the Stanley test")
        if not self.ratio_is_integer and self.stanley_holds:
            raise InternalInvariantViolation("non-integer ratio contradicts a Gorenstein verdict")
        if self.sufficient_condition_hits and not self.stanley_holds:
            raise InternalInvariantViolation("a sufficient condition fired on a non-Gorenstein vector")


def _n2_series(v: WeightVector) -> RationalFunction:
    span = v.positives[0] - v.negatives[0]
    view = {span: 1}
    if v.zero_count:
        view[1] = v.zero_count
    return RationalFunction.from_factored(Polynomial.one(), view)


def analyze(v: WeightVector, full: bool = False, verify_depth=None) -> GorensteinReport:
    """Full Gorenstein diagnosis of one validated weight vector.

    Short-circuits (skipped when ``full``): n=2 and the k=1 divisibility
    criterion prove Gorenstein without the series; a non-integer gamma
    ratio proves NotGorenstein without the series (``hilbert``/``degree``
    stay None in that case).
    """
    g0 = gamma0(v)
    g1 = gamma1(v)
    ratio = 2 * g1 / g0
    ratio_is_integer = ratio.denominator == 1
    dim = v.n - 1 + v.zero_count
    hits = []
    if v.n == 2:
        hits.append(N2_POLYNOMIAL)
    if k1_sufficient(v) or k1_sufficient(v.negate()):
        hits.append(K1_DIVISIBILITY)

    common = dict(
        weights=v.weights,
        zero_count=v.zero_count,
        faithful_scale=v.faithful_scale,
        dimension=dim,
        degenerate=not v.is_generic,
        gamma0=g0,
        gamma1=g1,
        ratio_2g1_g0=ratio,
        ratio_is_integer=ratio_is_integer,
        sufficient_condition_hits=hits,
    )

    if v.n == 2 and not full:
        f = _n2_series(v)
        return GorensteinReport(
            stanley_holds=True,
            classification="Gorenstein",
            hilbert=f,
            degree=f.degree,
            **common,
        )
    if K1_DIVISIBILITY in hits and not full:
        return GorensteinReport(
            stanley_holds=True,
            classification="Gorenstein",
            hilbert=None,
            degree=_k1_a_invariant(v if v.k == 1 else v.negate()),
            **common,
        )
    if not ratio_is_integer and not full:
        return GorensteinReport(
            stanley_holds=False,
            classification="NotGorenstein",
            hilbert=None,
            degree=None,
            **common,
        )

    f = hilbert_series(v, verify_depth=verify_depth)
    degree = f.degree
    holds = stanley_test(f, dim)
    if holds:
        _assert_gorenstein_consistency(v, f, dim, ratio, degree)
    return GorensteinReport(
        stanley_holds=holds,
        classification="Gorenstein" if holds else "NotGorenstein",
        hilbert=f,
        degree=degree,
        **common,
    )


def _assert_gorenstein_consistency(v, f, dim, ratio, degree):
    closed = a_invariant_closed_form(v)
    if closed.denominator != 1 or int(closed) != degree:
        raise InternalInvariantViolation(
            f"closed-form a-invariant {closed} disagrees with the series degree {degree}"
        )
    if ratio != -degree - dim:
        raise InternalInvariantViolation(
            "gamma ratio violates 2*gamma1/gamma0 = -a - dim on a Gorenstein vector"
        )
