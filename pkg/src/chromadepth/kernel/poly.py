"""Univariate rational polynomials and Sturm-sequence real root isolation."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

Interval = Tuple[Fraction, Fraction]

ZERO = Fraction(0)


class QPoly:
    """Polynomial with rational coefficients, stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def linear(cls, a, b) -> "QPoly":
        """The polynomial ``a + b t``."""
        return cls((a, b))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __call__(self, t) -> Fraction:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def sign_at(self, t) -> int:
        v = self(t)
        return (v > 0) - (v < 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            other = QPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "QPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*t^{k}" if k > 1 else f"{c}*t")
        return "QPoly(" + " + ".join(terms) + ")"

    def __add__(self, other) -> "QPoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return QPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "QPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "QPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "QPoly":
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other) -> Tuple["QPoly", "QPoly"]:
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lead
        if len(rem) - 1 < dq:
            return QPoly(), QPoly(rem)
        quot = [ZERO] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return QPoly(quot), QPoly(rem[:dq])

    def __mod__(self, other) -> "QPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other) -> "QPoly":
        return divmod(self, other)[0]

    def derivative(self) -> "QPoly":
        return QPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "QPoly":
        if not self.coeffs:
            return self
        lc = self.lead
        return QPoly(c / lc for c in self.coeffs)


def _coerce(x) -> QPoly:
    return x if isinstance(x, QPoly) else QPoly([x])


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic greatest common divisor (zero only if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: QPoly) -> QPoly:
    if p.degree <= 0:
        return p
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def interpolate(ts: Sequence[Fraction], values: Sequence[Fraction]) -> QPoly:
    """Unique polynomial of degree < len(ts) through the given samples (Newton form)."""
    n = len(ts)
    coef = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (ts[i] - ts[i - j])
    p = QPoly([coef[-1]]) if coef else QPoly()
    for i in range(n - 2, -1, -1):
        p = p * QPoly((-ts[i], 1)) + coef[i]
    return p


def sturm_sequence(p: QPoly) -> List[QPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def sign_variations(seq: Sequence[QPoly], t) -> int:
    signs = [s for s in (q.sign_at(t) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: QPoly, lo, hi, seq: Sequence[QPoly] | None = None) -> int:
    """Number of distinct real roots in the open interval ``(lo, hi)``.

    Requires ``p(lo) != 0 != p(hi)``.
    """
    if seq is None:
        seq = sturm_sequence(p)
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def sturm_isolate(p: QPoly, lo, hi) -> List[Interval]:
    """Disjoint open rational intervals, each holding exactly one root of ``p`` in ``(lo, hi)``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if p.is_zero():
        raise ValueError("polynomial is identically zero")
    if not lo < hi:
        raise ValueError("need lo < hi")
    if p(lo) == 0 or p(hi) == 0:
        raise ValueError("polynomial vanishes at an interval endpoint")
    q = squarefree_part(p)
    seq = sturm_sequence(q)
    out: List[Interval] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count_roots(q, a, b, seq)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if q(mid) != 0:
            stack.append((a, mid))
            stack.append((mid, b))
            continue
        # rational root at the midpoint: wall it off in a small interval
        delta = (b - a) / 4
        while True:
            l, r = mid - delta, mid + delta
            if q(l) != 0 and q(r) != 0 and count_roots(q, l, r, seq) == 1:
                break
            delta /= 2
        out.append((l, r))
        stack.append((a, l))
        stack.append((r, b))
    out.sort()
    return out


def refine(p: QPoly, interval: Interval, width=None) -> Interval:
    """Bisect an isolating interval of ``p`` once, or until it is narrower than ``width``."""
    q = squarefree_part(p)
    seq = None
    a, b = interval
    while True:
        mid = (a + b) / 2
        if q(mid) == 0:
            span = (b - a) / 4
            seq = seq or sturm_sequence(q)
            while True:
                l, r = mid - span, mid + span
                if q(l) != 0 and q(r) != 0 and count_roots(q, l, r, seq) == 1:
                    break
                span /= 2
            a, b = l, r
        elif q.sign_at(a) != q.sign_at(mid):
            b = mid
        else:
            a = mid
        if width is None or b - a < width:
            return a, b
