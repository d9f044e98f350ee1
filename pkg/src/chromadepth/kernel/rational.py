"""Rational scalars and vectors, plus their string form used in every file format."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple, Union

Rat = Fraction
Vec = Tuple[Fraction, ...]

Number = Union[int, str, Fraction]


def rat(x: Number) -> Fraction:
    """Coerce an int, a Fraction or a string such as ``"-3/4"`` to a Fraction.

    Floats are refused: every predicate downstream is exact and a binary
    float would silently smuggle rounding into them.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        # accept the unicode minus that sneaks in from typeset sources
        return Fraction(x.strip().replace("−", "-"))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def vec(xs: Iterable[Number]) -> Vec:
    return tuple(rat(x) for x in xs)


def rat_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec_str(v: Sequence[Fraction]) -> list[str]:
    return [rat_str(x) for x in v]


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def integral_direction(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Positive multiple of ``v`` with coprime integer entries.

    Positive rescaling of a single point does not change whether the origin
    lies in the (relative interior of the) convex hull of a family, so the
    containment predicates run on these integer representatives.
    """
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(ints)


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Fraction, v: Sequence[Fraction]) -> Vec:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def barycenter(points: Sequence[Sequence[Fraction]]) -> Vec:
    if not points:
        raise ValueError("barycenter of an empty family")
    n = len(points)
    return tuple(sum(col, Fraction(0)) / n for col in zip(*points))
