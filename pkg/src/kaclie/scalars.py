"""Exact scalars: the Eisenstein field Q(omega) and reduction to F_p."""

from __future__ import annotations

from fractions import Fraction

PRIME = 2**61 - 1


def _order_three(p: int) -> int:
    for g in range(2, 1000):
        w = pow(g, (p - 1) // 3, p)
        if w != 1:
            return w
    raise ValueError("no element of order 3")


OMEGA_P = _order_three(PRIME)


class Eisenstein:
    """a + b*omega with omega^2 + omega + 1 = 0; a, b are int or Fraction."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a
        self.b = b

    @staticmethod
    def lift(x) -> "Eisenstein":
        return x if isinstance(x, Eisenstein) else Eisenstein(x, 0)

    def __add__(self, o):
        o = Eisenstein.lift(o)
        return Eisenstein(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Eisenstein(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-Eisenstein.lift(o))

    def __rsub__(self, o):
        return Eisenstein.lift(o) - self

    def __mul__(self, o):
        if not isinstance(o, Eisenstein):
            return Eisenstein(self.a * o, self.b * o)
        a, b, c, d = self.a, self.b, o.a, o.b
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conj(self) -> "Eisenstein":
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self):
        return self.a * self.a - self.a * self.b + self.b * self.b

    def __truediv__(self, o):
        o = Eisenstein.lift(o)
        n = Fraction(o.norm())
        q = self * o.conj()
        return Eisenstein(Fraction(q.a) / n, Fraction(q.b) / n)

    def __rtruediv__(self, o):
        return Eisenstein.lift(o) / self

    def __eq__(self, o):
        o = Eisenstein.lift(o) if isinstance(o, (int, Fraction, Eisenstein)) else None
        return o is not None and self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_integral(self) -> bool:
        return all(Fraction(x).denominator == 1 for x in (self.a, self.b))

    def __repr__(self):
        return f"({self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}w)"


OMEGA = Eisenstein(0, 1)


def simplify(x):
    """Collapse Eisenstein numbers with zero omega part and integral Fractions."""
    if isinstance(x, Eisenstein) and not x.b:
        x = x.a
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def to_mod(x, p: int = PRIME) -> int:
    if isinstance(x, int):
        return x % p
    if isinstance(x, Fraction):
        return x.numerator * pow(x.denominator, -1, p) % p
    if isinstance(x, Eisenstein):
        if p != PRIME:
            raise ValueError("omega reduction is only set up for the default prime")
        return (to_mod(x.a, p) + to_mod(x.b, p) * OMEGA_P) % p
    raise TypeError(f"cannot reduce {type(x).__name__}")


def root_of_unity(t: int, k: int):
    """zeta_t^k as an exact scalar for t in {1, 2, 3}."""
    k %= t
    if t <= 2:
        return -1 if k else 1
    return [1, OMEGA, Eisenstein(-1, -1)][k]
