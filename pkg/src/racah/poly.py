"""Univariate polynomials over the exact rationals.

Coefficients are stored lowest-degree first with trailing zeros stripped;
the zero polynomial has an empty coefficient tuple and degree -1.  Division,
gcd and derivative are what squarefreeness and root finding need; nothing
fancier lives here.
"""

from __future__ import annotations

import math

from .rational import Rat, ZERO, ONE, rat, format_rat


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([ZERO, ONE])

    @classmethod
    def from_roots(cls, roots) -> "Poly":
        """Monic polynomial with the given roots (repeats allowed)."""
        acc = cls([ONE])
        for r in roots:
            acc = acc * cls([-rat(r), ONE])
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Rat:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Poly([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Poly":
        c = rat(c)
        return Poly([c * x for x in self.coeffs])

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial powers are not supported")
        acc = Poly([ONE])
        for _ in range(k):
            acc = acc * self
        return acc

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [ZERO] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        dlead = other.leading()
        dd = other.degree
        while len(rem) - 1 >= dd and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            shift = len(rem) - 1 - dd
            factor = rem[-1] / dlead
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * c
        return Poly(q), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading()
        return Poly([c / lead for c in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Rat) -> Rat:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_divide(self, r) -> "Poly":
        """Exact quotient by (x - r); raises if r is not a root."""
        r = rat(r)
        if self(r) != 0:
            raise ValueError(f"{format_rat(r)} is not a root")
        out = [ZERO] * self.degree
        carry = ZERO
        for i in range(self.degree, 0, -1):
            carry = self.coeffs[i] + r * carry
            out[i - 1] = carry
        return Poly(out)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                body = format_rat(abs(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if abs(c) == 1 else f"{format_rat(abs(c))}*{xs}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree(p: Poly) -> bool:
    """A nonzero polynomial is squarefree iff gcd(p, p') is constant."""
    if p.is_zero():
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    if p.degree == 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def _divisors(n: int) -> list[int]:
    # factorint is Pollard-rho backed; trial division chokes on the ~1e17
    # constant terms that honest minimal polynomials produce.
    from sympy import factorint

    divs = [1]
    for prime, mult in factorint(n).items():
        divs = [d * prime**k for d in divs for k in range(mult + 1)]
    return sorted(divs)


def rational_roots(p: Poly) -> tuple[list[tuple[Rat, int]], Poly]:
    """All rational roots with multiplicities, plus the rootless cofactor.

    The cofactor is the monic exact quotient of p by prod (x-r)^mult; it has
    no rational roots.  Roots are returned sorted increasing.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every root")
    roots: list[tuple[Rat, int]] = []
    work = p.monic()

    mult0 = 0
    while not work.is_zero() and work.coeffs and work.coeffs[0] == 0:
        work = Poly(work.coeffs[1:])
        mult0 += 1
    if mult0:
        roots.append((ZERO, mult0))
    if work.degree <= 0:
        return roots, Poly([ONE])

    denoms = [int(c.denominator) for c in work.coeffs]
    scale = math.lcm(*denoms)
    ints = [int(c.numerator) * (scale // int(c.denominator)) for c in work.coeffs]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]

    a0, an = abs(ints[0]), abs(ints[-1])
    candidates = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            if math.gcd(num, den) == 1:
                candidates.add(rat(num, den))
                candidates.add(rat(-num, den))
    for cand in sorted(candidates):
        mult = 0
        while work.degree > 0 and work(cand) == 0:
            work = work.shift_divide(cand)
            mult += 1
        if mult:
            roots.append((cand, mult))
    roots.sort(key=lambda rm: rm[0])
    return roots, work.monic()
