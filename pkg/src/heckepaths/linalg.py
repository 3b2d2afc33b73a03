"""Small exact linear algebra over Fraction.

Vectors are plain tuples of Fraction, matrices are tuples of row tuples.
Sizes here are tiny (a handful of rows), so clarity beats asymptotics.

>>> parse_rational("-3/4")
Fraction(-3, 4)
>>> format_rational(Fraction(5, 1))
'5'
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import FormatError

Vec = tuple  # tuple[Fraction, ...] in spirit; plain ints are accepted on input


def parse_rational(text) -> Fraction:
    """Parse "p" or "p/q" (strings) or an int; floats are rejected."""
    if isinstance(text, bool):
        raise FormatError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise FormatError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"not a rational literal: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_vector(items) -> Vec:
    return tuple(parse_rational(x) for x in items)


def format_vector(v: Vec) -> list:
    return [format_rational(x) for x in v]


def vec(*xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vscale(c, u: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def vdot(u: Vec, v: Vec) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def is_integral_vec(u: Vec) -> bool:
    return all(Fraction(a).denominator == 1 for a in u)


def mat_rank(rows) -> int:
    """Rank of a matrix given as an iterable of rows.

    >>> mat_rank([(2, -2), (-2, 2)])
    1
    """
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def solve_linear(rows, rhs):
    """One exact solution x of A x = b, or None if inconsistent.

    Free variables are set to zero.

    >>> solve_linear([(1, 1), (0, 1)], (3, 1))
    (Fraction(2, 1), Fraction(1, 1))
    """
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs, strict=True)]
    nrows = len(m)
    ncols = len(m[0]) - 1 if m else 0
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if m[r][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = m[r][ncols]
    return tuple(x)


def nullspace(rows):
    """Basis of the right kernel of A, as a list of vectors.

    >>> nullspace([(2, -2), (-2, 2)])
    [(Fraction(1, 1), Fraction(1, 1))]
    """
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, col in enumerate(pivots):
            v[col] = -m[r][fc]
        basis.append(tuple(v))
    return basis


def scale_to_primitive_integers(v: Vec) -> Vec:
    """Scale a nonzero rational vector to coprime integers, keeping its sign."""
    denoms = [Fraction(x).denominator for x in v]
    lcm = 1
    for d in denoms:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(Fraction(x) * lcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(Fraction(x // g) for x in ints)
