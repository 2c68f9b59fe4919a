"""Integer combinations of m-th roots of unity, i.e. elements of Z[t]/(t^m - 1).

Two values are equal as complex numbers exactly when their difference is
divisible by the cyclotomic polynomial Phi_m, so comparisons reduce mod Phi_m.
"""
from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Sequence


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    num = [-1] + [0] * (m - 1) + [1]
    for e in range(1, m):
        if m % e == 0:
            num = _exact_div(num, list(cyclotomic_poly(e)))
    return tuple(num)


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        q[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


def _reduce_mod(coeffs: Sequence[int], mod: Sequence[int]) -> tuple[int, ...]:
    """Remainder of coeffs modulo the monic polynomial ``mod``."""
    r = list(coeffs)
    deg = len(mod) - 1
    for i in range(len(r) - 1, deg - 1, -1):
        c = r[i]
        if c:
            for j, mj in enumerate(mod):
                r[i - deg + j] -= c * mj
    r = r[:deg] + [0] * max(0, deg - len(r))
    return tuple(r)


class CycValue:
    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Sequence[int] | None = None):
        if m < 1:
            raise ValueError("order must be positive")
        cs = [0] * m
        for j, c in enumerate(coeffs or ()):
            cs[j % m] += int(c)
        self.m = m
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def zeta(cls, m: int, j: int = 1) -> CycValue:
        cs = [0] * m
        cs[j % m] = 1
        return cls(m, cs)

    @classmethod
    def integer(cls, m: int, c: int) -> CycValue:
        return cls(m, [c])

    def lift(self, m: int) -> CycValue:
        """Same number written in Z[t]/(t^m - 1); needs self.m | m."""
        if m % self.m:
            raise ValueError(f"cannot lift order {self.m} to {m}")
        step = m // self.m
        cs = [0] * m
        for j, c in enumerate(self.coeffs):
            cs[j * step] += c
        return CycValue(m, cs)

    def _common(self, other) -> tuple[CycValue, CycValue]:
        if isinstance(other, int):
            other = CycValue.integer(self.m, other)
        if other.m == self.m:
            return self, other
        m = math.lcm(self.m, other.m)
        return self.lift(m), other.lift(m)

    def __add__(self, other) -> CycValue:
        a, b = self._common(other)
        return CycValue(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycValue:
        return CycValue(self.m, [-c for c in self.coeffs])

    def __sub__(self, other) -> CycValue:
        return self + (-other if isinstance(other, CycValue) else -other)

    def __mul__(self, other) -> CycValue:
        if isinstance(other, int):
            return CycValue(self.m, [c * other for c in self.coeffs])
        a, b = self._common(other)
        m = a.m
        cs = [0] * m
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        cs[(i + j) % m] += x * y
        return CycValue(m, cs)

    __rmul__ = __mul__

    def conjugate(self) -> CycValue:
        cs = [0] * self.m
        for j, c in enumerate(self.coeffs):
            cs[-j % self.m] += c
        return CycValue(self.m, cs)

    def reduced(self) -> tuple[int, ...]:
        """Canonical coordinates in the power basis 1, z, ..., z^(phi(m)-1)."""
        return _reduce_mod(self.coeffs, cyclotomic_poly(self.m))

    def is_rational(self) -> bool:
        return not any(self.reduced()[1:])

    def rational_value(self) -> int:
        r = self.reduced()
        if any(r[1:]):
            raise ValueError(f"{self} is not rational")
        return r[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, (CycValue, int)):
            return NotImplemented
        a, b = self._common(other)
        return (a - b).reduced() == (0,) * len(cyclotomic_poly(a.m)[:-1])

    __hash__ = None  # equality is mod Phi_m, across orders

    def to_complex(self) -> complex:
        return sum(c * complex(math.cos(2 * math.pi * j / self.m), math.sin(2 * math.pi * j / self.m))
                   for j, c in enumerate(self.coeffs))

    def format(self) -> str:
        return format_cyc(self)

    def __str__(self) -> str:
        return format_cyc(self)

    def __repr__(self) -> str:
        return f"CycValue({self.m}, {list(self.coeffs)})"


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*(z(\d+)(?:\^(-?\d+))?|i)?\s*")


def parse_cyc(text: str, m: int) -> CycValue:
    """Parse e.g. ``-1 - z3``, ``z24 - z24^7``, ``2*i``, ``3``; the result has order m.

    Every z<k> must have k dividing m; ``i`` means z4.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty cyclotomic expression")
    total = CycValue(m)
    pos = 0
    first = True
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse cyclotomic expression {text!r} at {s[pos:]!r}")
        sign, coef, atom, order, power = mt.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r}")
        if coef is None and atom is None:
            raise ValueError(f"dangling sign in {text!r}")
        c = int(coef) if coef is not None else 1
        if sign == "-":
            c = -c
        if atom is None:
            term = CycValue.integer(m, c)
        else:
            k = 4 if atom == "i" else int(order)
            j = 1 if (atom == "i" or power is None) else int(power)
            if m % k:
                raise ValueError(f"z{k} in {text!r} is not available at order {m}")
            term = CycValue.zeta(m, j * (m // k)) * c
        total = total + term
        pos = mt.end()
        first = False
    return total


def format_cyc(v: CycValue) -> str:
    """Text form of the stored coefficients in z<m>, lowest power first."""
    m = v.m
    parts = []
    for j, c in enumerate(v.coeffs):
        if not c:
            continue
        atom = "" if j == 0 else (f"z{m}" if j == 1 else f"z{m}^{j}")
        if not atom:
            body = str(abs(c))
        else:
            body = atom if abs(c) == 1 else f"{abs(c)}*{atom}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s
