"""Alternants, Laurent-Schur polynomials and two-block partial Schur values.

The central object is the value S_u(xs, ys): the determinant whose first row
holds x_i^u over the x block and zeros over the y block, followed by the
full Vandermonde rows of all variables at exponents n-2 down to 0, divided
by the two block Vandermonde determinants.  It is computable three ways:

* ``partial_schur_det`` - the determinant directly (blocks must be
  repetition-free);
* ``partial_schur_expansion`` - the Laplace expansion along the x-block
  columns, a signed sum of products of Schur values, well defined even with
  repeated entries (the singularities are removable);
* ``partial_schur_tableaux`` - the same expansion with every Schur factor
  evaluated by explicit semistandard-tableau enumeration, plus a symbolic
  mode.

``partial_schur`` is the default entry point (expansion route).
"""

from fractions import Fraction
from itertools import combinations

from .errors import CombinatorialExplosion, OutOfRange, RepeatedVariables, ZeroBase

TABLEAU_SIZE_LIMIT = 10
SYMBOLIC_SIZE_LIMIT = 6


def _fracs(values):
    return [Fraction(v) for v in values]


def _power(base: Fraction, exp: int) -> Fraction:
    if exp >= 0:
        return base**exp
    if base == 0:
        raise ZeroBase("negative power of zero")
    return Fraction(1) / base ** (-exp)


def vandermonde(xs) -> Fraction:
    """prod_{i<j} (x_i - x_j); empty and singleton products are 1."""
    xs = _fracs(xs)
    out = Fraction(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            out *= xs[i] - xs[j]
    return out


def _det(rows) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(rows)
    mat = [list(r) for r in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        pv = mat[col][col]
        det *= pv
        for r in range(col + 1, n):
            if mat[r][col] != 0:
                factor = mat[r][col] / pv
                for c in range(col, n):
                    mat[r][c] -= factor * mat[col][c]
    return det


def alternant(parts, xs) -> Fraction:
    """det of the matrix with rows x_j^{parts_i} (negative parts allowed)."""
    xs = _fracs(xs)
    if len(parts) != len(xs):
        raise ValueError("signature length must match the variable count")
    rows = [[_power(x, p) for x in xs] for p in parts]
    return _det(rows)


def _delta(length: int) -> list:
    return list(range(length - 1, -1, -1))


def schur_tableaux(shape, xs) -> Fraction:
    """Schur value as the sum over semistandard tableaux of the shape.

    ``shape`` must be a partition (weakly decreasing, nonnegative); rows of
    length zero are allowed and contribute nothing.
    """
    n = len(xs)
    xs = _fracs(xs)
    rows = [p for p in shape if p > 0]
    for a, b in zip(rows, rows[1:]):
        if b > a:
            raise ValueError("shape must be weakly decreasing")
    if not rows:
        return Fraction(1)
    total = Fraction(0)
    filling = [[0] * p for p in rows]

    def fill(r: int, c: int, prod: Fraction):
        nonlocal total
        if r == len(rows):
            total += prod
            return
        if c + 1 < rows[r]:
            nr, nc = r, c + 1
        else:
            nr, nc = r + 1, 0
        lo = filling[r][c - 1] if c > 0 else 1
        if r > 0:
            lo = max(lo, filling[r - 1][c] + 1)
        for label in range(lo, n + 1):
            filling[r][c] = label
            fill(nr, nc, prod * xs[label - 1])

    fill(0, 0, Fraction(1))
    return total


def laurent_schur(parts, xs) -> Fraction:
    """s_lambda evaluated at xs: alternant ratio when the entries are
    distinct, tableau sum otherwise (handles repeated values)."""
    xs = _fracs(xs)
    if len(parts) != len(xs):
        raise ValueError("signature length must match the variable count")
    if not xs:
        return Fraction(1)
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise ValueError("signature must be weakly decreasing")
    if len(set(xs)) == len(xs):
        v = vandermonde(xs)
        exps = [p + d for p, d in zip(parts, _delta(len(xs)))]
        return alternant(exps, xs) / v
    return _schur_shifted_tableaux(parts, xs)


def _schur_shifted_tableaux(parts, xs) -> Fraction:
    shift = min(parts[-1], 0)
    shape = [p - shift for p in parts]
    prefactor = Fraction(1)
    if shift < 0:
        for x in xs:
            prefactor *= _power(Fraction(x), shift)
    return prefactor * schur_tableaux(shape, xs)


def elementary_symmetric(j: int, values) -> Fraction:
    """E_j of the values (0 when j exceeds the variable count)."""
    values = _fracs(values)
    if j < 0:
        raise OutOfRange(f"elementary symmetric degree {j} out of range")
    if j > len(values):
        return Fraction(0)
    dp = [Fraction(0)] * (j + 1)
    dp[0] = Fraction(1)
    for v in values:
        for d in range(min(j, len(dp) - 1), 0, -1):
            dp[d] += dp[d - 1] * v
    return dp[j]


# ---------------------------------------------------------------------------
# partial Schur values


def _check_u(u: int, n: int):
    if u > n - 2:
        raise OutOfRange(f"u={u} exceeds the admissible maximum {n - 2}")


def partial_schur_det(u: int, xs, ys) -> Fraction:
    """Determinant route; blocks must be repetition-free."""
    xs, ys = _fracs(xs), _fracs(ys)
    k, m = len(xs), len(ys)
    n = k + m
    _check_u(u, n)
    if k == 0:
        return Fraction(0)
    if len(set(xs)) != k or len(set(ys)) != m:
        raise RepeatedVariables("blocks must have pairwise distinct entries")
    rows = [[_power(x, u) for x in xs] + [Fraction(0)] * m]
    for e in range(n - 2, -1, -1):
        rows.append([_power(x, e) for x in xs] + [_power(y, e) for y in ys])
    return _det(rows) / (vandermonde(xs) * vandermonde(ys))


def _expansion_terms(u: int, k: int, m: int):
    """Yield (sign, x_signature, y_shape) triples of the Laplace expansion.

    Signs include the global prefactor.  x_signature has length k (last part
    may be negative when u < 0); y_shape is a partition of length m.
    """
    n = k + m
    universe = list(range(n - 1))  # 0 .. n-2
    if u >= 0:
        global_sign = (-1) ** (k * (k + 1) // 2 + n * (k - 1) + u)
        pool = [e for e in universe if e != u]
        for rest in combinations(pool, k - 1):
            lam = sorted((u,) + rest, reverse=True)
            i = lam.index(u) + 1
            comp = sorted(set(universe) - set(lam), reverse=True)
            mu = sorted(comp + [u], reverse=True)
            sign = global_sign * (-1) ** (sum(lam) + i)
            sig_x = [p - d for p, d in zip(lam, _delta(k))]
            shape_y = [p - d for p, d in zip(mu, _delta(m))]
            yield sign, sig_x, shape_y
    else:
        global_sign = (-1) ** (k * (k - 1) // 2 + n * (k - 1))
        for rest in combinations(universe, k - 1):
            lam = sorted(rest, reverse=True)
            parts_x = lam + [u]
            comp = sorted(set(universe) - set(lam), reverse=True)
            sign = global_sign * (-1) ** sum(lam)
            sig_x = [p - d for p, d in zip(parts_x, _delta(k))]
            shape_y = [p - d for p, d in zip(comp, _delta(m))]
            yield sign, sig_x, shape_y


def _empty_positive_block(u: int, xs) -> Fraction:
    """S_u(xs; ()) from the determinant without a y block.

    For u >= 0 the exponent u repeats among the Vandermonde rows, so the
    value is 0; for u < 0 it is a signed Laurent-Schur of the x block.
    """
    k = len(xs)
    if u >= 0:
        return Fraction(0)
    sig = [-1] * (k - 1) + [u]
    return (-1) ** (k - 1) * laurent_schur(sig, xs)


def partial_schur_expansion(u: int, xs, ys) -> Fraction:
    """Laplace-expansion route; well defined for repeated variable values."""
    xs, ys = _fracs(xs), _fracs(ys)
    k, m = len(xs), len(ys)
    _check_u(u, k + m)
    if k == 0:
        return Fraction(0)
    if m == 0:
        return _empty_positive_block(u, xs)
    total = Fraction(0)
    for sign, sig_x, shape_y in _expansion_terms(u, k, m):
        sx = laurent_schur(sig_x, xs)
        if sx == 0:
            continue
        sy = laurent_schur(shape_y, ys)
        total += sign * sx * sy
    return total


def partial_schur_tableaux(u: int, xs, ys, size_limit: int = TABLEAU_SIZE_LIMIT) -> Fraction:
    """Tableau route: every Schur factor is a semistandard-tableau sum."""
    xs, ys = _fracs(xs), _fracs(ys)
    k, m = len(xs), len(ys)
    if k + m > size_limit:
        raise CombinatorialExplosion(
            f"{k + m} variables exceed the tableau enumeration limit {size_limit}"
        )
    _check_u(u, k + m)
    if k == 0:
        return Fraction(0)
    if m == 0:
        if u >= 0:
            return Fraction(0)
        sig = [-1] * (k - 1) + [u]
        return (-1) ** (k - 1) * _schur_shifted_tableaux(sig, xs)
    total = Fraction(0)
    for sign, sig_x, shape_y in _expansion_terms(u, k, m):
        sx = _schur_shifted_tableaux(sig_x, xs)
        sy = _schur_shifted_tableaux(shape_y, ys)
        total += sign * sx * sy
    return total


def partial_schur(u: int, xs, ys) -> Fraction:
    """Default S_u evaluation (expansion route, safe at repeated weights)."""
    return partial_schur_expansion(u, xs, ys)


# ---------------------------------------------------------------------------
# symbolic mode (tableau route, small variable counts)


def _schur_tableaux_symbolic(shape, nvars: int) -> dict:
    """Monomial dict {exponent tuple: multiplicity} of s_shape in nvars
    variables."""
    rows = [p for p in shape if p > 0]
    if not rows:
        return {(0,) * nvars: 1}
    out: dict = {}
    filling = [[0] * p for p in rows]

    def fill(r: int, c: int, counts: tuple):
        if r == len(rows):
            out[counts] = out.get(counts, 0) + 1
            return
        if c + 1 < rows[r]:
            nr, nc = r, c + 1
        else:
            nr, nc = r + 1, 0
        lo = filling[r][c - 1] if c > 0 else 1
        if r > 0:
            lo = max(lo, filling[r - 1][c] + 1)
        for label in range(lo, nvars + 1):
            filling[r][c] = label
            bumped = list(counts)
            bumped[label - 1] += 1
            fill(nr, nc, tuple(bumped))

    fill(0, 0, (0,) * nvars)
    return out


def partial_schur_symbolic(u: int, k: int, m: int, size_limit: int = SYMBOLIC_SIZE_LIMIT) -> dict:
    """S_u as a multivariate (Laurent) monomial dict over x_1..x_k, y_1..y_m.

    Keys are exponent tuples of length k+m (x exponents first); values are
    integer coefficients.
    """
    if k + m > size_limit:
        raise CombinatorialExplosion(
            f"{k + m} variables exceed the symbolic limit {size_limit}"
        )
    _check_u(u, k + m)
    out: dict = {}
    if k == 0:
        return out

    def accumulate(sign: int, xdict: dict, ydict: dict, xshift: int):
        for ex, cx in xdict.items():
            for ey, cy in ydict.items():
                key = tuple(e + xshift for e in ex) + ey
                val = out.get(key, 0) + sign * cx * cy
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)

    if m == 0:
        if u >= 0:
            return out
        sig = [-1] * (k - 1) + [u]
        shift = sig[-1]
        shape = [p - shift for p in sig]
        accumulate(
            (-1) ** (k - 1),
            _schur_tableaux_symbolic(shape, k),
            {(): 1},
            shift,
        )
        return out
    for sign, sig_x, shape_y in _expansion_terms(u, k, m):
        shift = min(sig_x[-1], 0)
        shape_x = [p - shift for p in sig_x]
        accumulate(
            sign,
            _schur_tableaux_symbolic(shape_x, k),
            _schur_tableaux_symbolic(shape_y, m),
            shift,
        )
    return out


def evaluate_monomials(monomials: dict, values) -> Fraction:
    """Evaluate a symbolic monomial dict at rational values."""
    values = _fracs(values)
    total = Fraction(0)
    for exps, coeff in monomials.items():
        term = Fraction(coeff)
        for v, e in zip(values, exps):
            term *= _power(v, e)
        total += term
    return total
