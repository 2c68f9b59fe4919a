"""Exact univariate and sparse multivariate polynomials over the rationals."""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

Exponent = tuple[int, ...]


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class UniPoly:
    """Dense univariate polynomial, coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> UniPoly:
        return cls([c])

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, scale=1) -> UniPoly:
        """scale * prod (x - r)."""
        out = cls([scale])
        for r in roots:
            out = out * cls([-_frac(r), 1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> UniPoly:
        other = _as_uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> UniPoly:
        return self + (-_as_uni(other))

    def __rsub__(self, other) -> UniPoly:
        return _as_uni(other) - self

    def __mul__(self, other) -> UniPoly:
        other = _as_uni(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> UniPoly:
        c = _frac(c)
        return UniPoly(a / c for a in self.coeffs)

    def __pow__(self, e: int) -> UniPoly:
        out = UniPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: UniPoly) -> UniPoly:
        return self(inner)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({format_uni(self)})"


def _as_uni(v) -> UniPoly:
    return v if isinstance(v, UniPoly) else UniPoly.const(v)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_uni(p: UniPoly, var: str = "x") -> str:
    """Human-readable form, highest degree first, e.g. ``x^2 - 3*x + 1/2``."""
    if not p.coeffs:
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = _fmt_coeff(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


class ExpPoly:
    """Sparse polynomial in a fixed number of variables with rational coefficients."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Exponent, object] | None = None):
        self.arity = arity
        self.terms: dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != arity:
                    raise ValueError(f"exponent {e} does not have arity {arity}")
                c = _frac(c)
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def const(cls, arity: int, c) -> ExpPoly:
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def var(cls, arity: int, i: int) -> ExpPoly:
        e = [0] * arity
        e[i] = 1
        return cls(arity, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> ExpPoly:
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def from_uni(cls, p: UniPoly, arity: int, i: int) -> ExpPoly:
        terms = {}
        for deg, c in enumerate(p.coeffs):
            e = [0] * arity
            e[i] = deg
            terms[tuple(e)] = c
        return cls(arity, terms)

    def copy(self) -> ExpPoly:
        out = ExpPoly(self.arity)
        out.terms = dict(self.terms)
        return out

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, e: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def _check(self, other: ExpPoly) -> None:
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExpPoly.const(self.arity, other)
        return isinstance(other, ExpPoly) and self.arity == other.arity and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self.terms.items())))

    def __add__(self, other) -> ExpPoly:
        if not isinstance(other, ExpPoly):
            other = ExpPoly.const(self.arity, other)
        self._check(other)
        out = self.copy()
        out.add_inplace(other)
        return out

    __radd__ = __add__

    def add_inplace(self, other: ExpPoly, scale=1) -> None:
        t = self.terms
        for e, c in other.terms.items():
            v = t.get(e, 0) + c * scale
            if v:
                t[e] = v
            else:
                t.pop(e, None)

    def __neg__(self) -> ExpPoly:
        out = ExpPoly(self.arity)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other) -> ExpPoly:
        if not isinstance(other, ExpPoly):
            other = ExpPoly.const(self.arity, other)
        out = self.copy()
        out.add_inplace(other, -1)
        return out

    def __rsub__(self, other) -> ExpPoly:
        return (-self) + other

    def __mul__(self, other) -> ExpPoly:
        if not isinstance(other, ExpPoly):
            c = _frac(other)
            out = ExpPoly(self.arity)
            if c:
                out.terms = {e: v * c for e, v in self.terms.items()}
            return out
        self._check(other)
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        out = ExpPoly(self.arity)
        out.terms = {e: c for e, c in acc.items() if c}
        return out

    __rmul__ = __mul__

    def __truediv__(self, c) -> ExpPoly:
        return self * (1 / _frac(c))

    def __pow__(self, n: int) -> ExpPoly:
        out = ExpPoly.const(self.arity, 1)
        for _ in range(n):
            out = out * self
        return out

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= _frac(x) ** k
            total += v
        return total

    def substitute(self, images: Sequence[ExpPoly]) -> ExpPoly:
        """Replace variable i by images[i] (all of one common arity)."""
        if len(images) != self.arity:
            raise ValueError("need one image per variable")
        arity = images[0].arity
        powers: dict[tuple[int, int], ExpPoly] = {}

        def power(i: int, k: int) -> ExpPoly:
            key = (i, k)
            if key not in powers:
                powers[key] = ExpPoly.const(arity, 1) if k == 0 else power(i, k - 1) * images[i]
            return powers[key]

        out = ExpPoly(arity)
        for e, c in self.terms.items():
            term = ExpPoly.const(arity, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out.add_inplace(term)
        return out

    def map_exponents(self, f: Callable[[Exponent], Exponent], arity: int) -> ExpPoly:
        out = ExpPoly(arity)
        for e, c in self.terms.items():
            ne = f(e)
            v = out.terms.get(ne, 0) + c
            if v:
                out.terms[ne] = v
            else:
                out.terms.pop(ne, None)
        return out

    def as_int_dict(self) -> dict[Exponent, int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integral coefficients")
        return {e: int(c) for e, c in sorted(self.terms.items())}

    def __repr__(self) -> str:
        return f"ExpPoly({self.arity}, {dict(sorted(self.terms.items()))})"

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.arity)]
        if not self.terms:
            return "0"
        chunks = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-v for v in t[0]))):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            coeff = _fmt_coeff(abs(c))
            body = mono if (mono and abs(c) == 1) else (f"{coeff}*{mono}" if mono else coeff)
            chunks.append(("-" if c < 0 else "+", body))
        s = ("-" if chunks[0][0] == "-" else "") + chunks[0][1]
        for sign, body in chunks[1:]:
            s += f" {sign} {body}"
        return s


def product_of_unis(polys: Sequence[UniPoly]) -> ExpPoly:
    """Outer product f_1(x_1) f_2(x_2) ... f_k(x_k)."""
    k = len(polys)
    terms: dict[Exponent, Fraction] = {(): Fraction(1)}
    for p in polys:
        nxt = {}
        for e, c in terms.items():
            for deg, a in enumerate(p.coeffs):
                if a:
                    nxt[e + (deg,)] = c * a
        terms = nxt
    out = ExpPoly(k)
    out.terms = {e: c for e, c in terms.items() if c}
    return out


def build_from_basis(coeffs: Mapping[Exponent, object], basis: Sequence[UniPoly] | Sequence[Sequence[UniPoly]]) -> ExpPoly:
    """Sum of coeffs[p] * prod_i basis[p_i](x_i) as a monomial-basis ExpPoly.

    ``basis`` is either one list of univariate polynomials shared by every
    variable, or one such list per variable. The change of basis is applied
    one axis at a time, so the cost is linear in the number of axes.
    """
    if not coeffs:
        raise ValueError("empty coefficient map; arity unknown")
    k = len(next(iter(coeffs)))
    per_var = _per_var(basis, k)
    cur: dict[Exponent, Fraction] = {tuple(p): _frac(c) for p, c in coeffs.items() if c}
    for axis in range(k):
        b = per_var[axis]
        nxt: dict[Exponent, Fraction] = {}
        for p, c in cur.items():
            poly = b[p[axis]]
            for deg, a in enumerate(poly.coeffs):
                if a:
                    e = p[:axis] + (deg,) + p[axis + 1:]
                    nxt[e] = nxt.get(e, 0) + c * a
        cur = {e: c for e, c in nxt.items() if c}
    out = ExpPoly(k)
    out.terms = cur
    return out


def expand_in_basis(f: ExpPoly, basis: Sequence[UniPoly] | Sequence[Sequence[UniPoly]]) -> dict[Exponent, Fraction]:
    """Inverse of :func:`build_from_basis` for triangular bases (deg basis[i] == i)."""
    per_var = _per_var(basis, f.arity)
    for b in per_var:
        for i, poly in enumerate(b):
            if poly.degree != i:
                raise ValueError("basis must have basis[i] of exact degree i")
    cur = dict(f.terms)
    for axis in range(f.arity):
        b = per_var[axis]
        # group by the other coordinates, solve the triangular system along this axis
        groups: dict[Exponent, dict[int, Fraction]] = {}
        for e, c in cur.items():
            groups.setdefault(e[:axis] + e[axis + 1:], {})[e[axis]] = c
        nxt: dict[Exponent, Fraction] = {}
        for rest, col in groups.items():
            top = max(col)
            if top >= len(b):
                raise ValueError(f"basis too short for degree {top}")
            col = dict(col)
            for deg in range(top, -1, -1):
                c = col.get(deg, 0)
                if not c:
                    continue
                a = c / b[deg][deg]
                for j, bc in enumerate(b[deg].coeffs):
                    if bc:
                        col[j] = col.get(j, 0) - a * bc
                nxt[rest[:axis] + (deg,) + rest[axis:]] = a
        cur = {e: c for e, c in nxt.items() if c}
    return dict(sorted(cur.items()))


def _per_var(basis, k: int) -> list[Sequence[UniPoly]]:
    if basis and isinstance(basis[0], UniPoly):
        return [basis] * k
    if len(basis) != k:
        raise ValueError("need one basis per variable")
    return list(basis)


def exponent_box(bounds: Sequence[int], lower: int = 0) -> Iterator[Exponent]:
    """All integer vectors p with lower <= p_i <= bounds[i]."""
    return itertools.product(*(range(lower, b + 1) for b in bounds))
