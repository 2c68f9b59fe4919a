"""Characters: symmetric-group characters, class-sum counting, and exceptional-group tables.

Table files (``.ct``) are UTF-8, line oriented, ``#`` starts a comment::

    group G4
    degrees 4 6
    coexponents 1 3
    order_m 3
    basis P1 = (x - 1)/4
    basis P2 = (x - 1)*(x - 3)/24
    entry dim=1 chi=1 f=24*P2 + 48*P1 + 24
    entry dim=1 chi=z3 f=24*P2

``chi`` is an integer combination of roots of unity z<k>^<j> (``i`` = z4)
with k dividing order_m; ``f`` is a polynomial in x, or in the declared
basis names.  Polynomials are normalized to the power basis on load.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .cyclo import CycValue, format_cyc, parse_cyc  # noqa: F401  (CycValue re-exported)
from .perm_core import Partition
from .polys import ExpPoly, UniPoly, format_uni, product_of_unis
from .symfunc import contents, hooks, partitions_upto, z
from .wreath import GenPerm, GroupSpec, enumerate_group, fixdim, invariants


class TableError(ValueError):
    """Malformed table file or table data that fails a consistency check."""


# symmetric group --------------------------------------------------------------


def _beta(lam: Sequence[int]) -> tuple[int, ...]:
    ell = len(lam)
    return tuple(lam[i] + ell - 1 - i for i in range(ell))


def _from_beta(beta: Iterable[int]) -> Partition:
    b = sorted(beta, reverse=True)
    ell = len(b)
    return tuple(x for x in (b[i] - (ell - 1 - i) for i in range(ell)) if x > 0)


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """chi^lam evaluated at cycle type mu, by removing rim hooks (Murnaghan-Nakayama)."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    beta = set(_beta(lam))
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in beta:
            height = sum(1 for c in beta if b - r < c < b)
            new = _from_beta((beta - {b}) | {b - r})
            total += (-1) ** height * mn_character(new, rest)
    return total


def dimension(lam: Partition) -> int:
    n = sum(lam)
    return math.factorial(n) // math.prod(hooks(lam))


def class_size(mu: Partition) -> int:
    return math.factorial(sum(mu)) // z(mu)


def central_character(lam: Partition, mu: Partition) -> Fraction:
    """chi-hat(z_mu) = |C_mu| chi(mu) / dim."""
    return Fraction(class_size(mu) * mn_character(lam, mu), dimension(lam))


def frobenius_count(n: int, target: Partition, classes: Sequence[Iterable[Partition]]) -> int:
    """Number of (u_1..u_k) with u_i in the union of the listed classes and u_1...u_k = a fixed g of type target."""
    total = Fraction(0)
    for lam in partitions_upto(n):
        term = Fraction(dimension(lam) * mn_character(lam, target))
        for cls in classes:
            term *= sum((central_character(lam, mu) for mu in cls), Fraction(0))
        total += term
    total /= math.factorial(n)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral class-algebra count {total}")
    return int(total)


def g_lambda(lam: Partition) -> UniPoly:
    """sum_r chi-hat(class sum of permutations with r cycles) x^r, from character values."""
    n = sum(lam)
    coeffs = [Fraction(0)] * (n + 1)
    for mu in partitions_upto(n):
        coeffs[len(mu)] += central_character(lam, mu)
    return UniPoly(coeffs)


def g_lambda_contents(lam: Partition) -> UniPoly:
    """Same polynomial from the content product prod (x + c) over the cells."""
    return UniPoly.from_roots([-c for c in contents(lam)])


def hook_partition(n: int, m: int) -> Partition:
    return (n - m,) + (1,) * m


def near_hook_partition(n: int, m: int) -> Partition:
    return (n - m - 1, 2) + (1,) * (m - 1)


def hook_g(n: int, m: int) -> UniPoly:
    """g for the hook <n-m, 1^m>: (x - m)(x - m + 1)...(x - m + n - 1)."""
    return UniPoly.from_roots([m - j for j in range(n)])


def near_hook_g(n: int, m: int) -> UniPoly:
    """g for <n-m-1, 2, 1^(m-1)>: x * hook_g(n - 1, m)."""
    return UniPoly.x() * hook_g(n - 1, m)


def frobenius_fixdim_poly(n: int, target: Partition, k: int) -> ExpPoly:
    """Factorizations of an element of type ``target`` in S_n, x_i marking cycles of factor i."""
    total = ExpPoly(k)
    for lam in partitions_upto(n):
        g = g_lambda(lam)
        term = product_of_unis([g] * k) * (dimension(lam) * mn_character(lam, target))
        total.add_inplace(term)
    return total / math.factorial(n)


def n1cycle_by_characters(n: int, k: int) -> ExpPoly:
    """Transitive factorizations of an (n-1)-cycle in S_n: all, minus those fixing n (x_1...x_k times S_{n-1} count)."""
    everything = frobenius_fixdim_poly(n, (n - 1, 1), k)
    fixing = frobenius_fixdim_poly(n - 1, (n - 1,), k).map_exponents(lambda e: tuple(a + 1 for a in e), k)
    return everything - fixing


def column_orthogonality(n: int) -> bool:
    parts = partitions_upto(n)
    for mu in parts:
        for nu in parts:
            s = sum(mn_character(lam, mu) * mn_character(lam, nu) for lam in parts)
            if s != (z(mu) if mu == nu else 0):
                return False
    return True


# tables ------------------------------------------------------------------------


@dataclass
class Entry:
    dim: int
    chi: CycValue
    f: UniPoly

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Entry)
            and self.dim == other.dim
            and self.chi.m == other.chi.m
            and self.chi.coeffs == other.chi.coeffs
            and self.f == other.f
        )


@dataclass
class CharTable:
    group: str
    degrees: tuple[int, ...]
    coexponents: tuple[int, ...]
    order_m: int
    entries: list[Entry]
    basis: dict[str, UniPoly] = field(default_factory=dict)
    basis_text: dict[str, str] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def order(self) -> int:
        return math.prod(self.degrees)

    def spec(self) -> GroupSpec:
        return GroupSpec.exceptional(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CharTable)
            and (self.group, self.degrees, self.coexponents, self.order_m) ==
            (other.group, other.degrees, other.coexponents, other.order_m)
            and self.entries == other.entries
            and self.basis == other.basis
        )


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


def parse_poly(text: str, symbols: dict[str, UniPoly] | None = None) -> UniPoly:
    """Parse a polynomial expression in x (and named basis polynomials); division by constants only."""
    symbols = dict(symbols or {})
    symbols.setdefault("x", UniPoly.x())
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise TableError(f"bad character in polynomial {text!r} at {text[pos:]!r}")
        num, name, op = m.groups()
        tokens.append(("num", int(num)) if num else ("name", name) if name else ("op", "^" if op == "**" else op))
        pos = m.end()
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr():
        val = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = unary()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = unary()
            if op == "*":
                val = val * rhs
            else:
                if rhs.degree > 0 or not rhs:
                    raise TableError(f"division by a non-constant in {text!r}")
                val = val / rhs[0]
        return val

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, e = take()
            if kind != "num":
                raise TableError(f"exponent must be an integer in {text!r}")
            return base**e
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return UniPoly.const(val)
        if kind == "name":
            if val not in symbols:
                raise TableError(f"unknown symbol {val!r} in {text!r}")
            return symbols[val]
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise TableError(f"unbalanced parentheses in {text!r}")
            return inner
        raise TableError(f"unexpected token {val!r} in {text!r}")

    out = expr()
    if peek()[0] != "end":
        raise TableError(f"trailing input in {text!r}")
    return out


_ENTRY_KEYS = re.compile(r"\b(dim|chi|f)=")


def _parse_entry(rest: str, m: int, basis: dict[str, UniPoly], lineno: int) -> Entry:
    marks = list(_ENTRY_KEYS.finditer(rest))
    fields = {}
    for a, b in zip(marks, marks[1:] + [None]):
        fields[a.group(1)] = rest[a.end(): b.start() if b else len(rest)].strip()
    if set(fields) != {"dim", "chi", "f"}:
        raise TableError(f"line {lineno}: entry needs dim=, chi= and f=")
    try:
        dim = int(fields["dim"])
        chi = parse_cyc(fields["chi"], m)
    except ValueError as exc:
        raise TableError(f"line {lineno}: {exc}") from exc
    f = parse_poly(fields["f"], basis)
    return Entry(dim, chi, f)


def loads_char_table(text: str) -> CharTable:
    header: dict[str, str] = {}
    basis: dict[str, UniPoly] = {}
    basis_text: dict[str, str] = {}
    raw_entries: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key in ("group", "degrees", "coexponents", "order_m"):
            if key in header:
                raise TableError(f"line {lineno}: duplicate {key}")
            header[key] = rest
        elif key == "basis":
            name, eq, body = rest.partition("=")
            name = name.strip()
            if not eq or not re.fullmatch(r"[A-Za-z_]\w*", name) or name == "x":
                raise TableError(f"line {lineno}: basis lines look like 'basis P1 = (x - 1)/4'")
            basis[name] = parse_poly(body, basis)
            basis_text[name] = body.strip()
        elif key == "entry":
            raw_entries.append((lineno, rest))
        else:
            raise TableError(f"line {lineno}: unknown keyword {key!r}")
    missing = {"group", "degrees", "coexponents", "order_m"} - set(header)
    if missing:
        raise TableError(f"missing header lines: {sorted(missing)}")
    try:
        degrees = tuple(int(t) for t in header["degrees"].split())
        coexps = tuple(int(t) for t in header["coexponents"].split())
        m = int(header["order_m"])
    except ValueError as exc:
        raise TableError(f"bad header: {exc}") from exc
    if len(degrees) != len(coexps) or not degrees:
        raise TableError("degrees and coexponents must have the same positive length")
    if m < 1:
        raise TableError("order_m must be positive")
    entries = [_parse_entry(rest, m, basis, ln) for ln, rest in raw_entries]
    if not entries:
        raise TableError("table has no entries")
    return CharTable(header["group"], degrees, coexps, m, entries, basis, basis_text)


def load_char_table(source) -> CharTable:
    """Load from a path, a bundled group name (``"G6"``), or table text."""
    if isinstance(source, Path) or (isinstance(source, str) and Path(source).suffix == ".ct"):
        return loads_char_table(Path(source).read_text(encoding="utf-8"))
    if isinstance(source, str) and re.fullmatch(r"G\d+", source):
        return loads_char_table(_bundled_text(source))
    if isinstance(source, str):
        return loads_char_table(source)
    raise TypeError(f"cannot load a table from {type(source).__name__}")


def _bundled_text(name: str) -> str:
    res = resources.files("refacto") / "data" / f"{name}.ct"
    if not res.is_file():
        raise TableError(f"no bundled table for {name}")
    return res.read_text(encoding="utf-8")


def bundled_tables() -> list[str]:
    names = [p.name[:-3] for p in (resources.files("refacto") / "data").iterdir() if p.name.endswith(".ct")]
    return sorted(names, key=lambda s: int(s[1:]))


def dumps_char_table(t: CharTable) -> str:
    lines = [
        f"group {t.group}",
        "degrees " + " ".join(map(str, t.degrees)),
        "coexponents " + " ".join(map(str, t.coexponents)),
        f"order_m {t.order_m}",
    ]
    for name, body in t.basis_text.items():
        lines.append(f"basis {name} = {body}")
    for e in t.entries:
        lines.append(f"entry dim={e.dim} chi={format_cyc(e.chi.lift(t.order_m) if e.chi.m != t.order_m else e.chi)} "
                     f"f={format_uni(e.f)}")
    return "\n".join(lines) + "\n"


# evaluating tables ------------------------------------------------------------


def exceptional_F(table: CharTable, k: int) -> ExpPoly:
    """(1/|G|) sum_chi dim(chi) chi(c^-1) prod_i f_chi(x_i), reduced to a rational polynomial.

    Entries are grouped by f; each group's character sum lives in Z[z_m] and
    the whole combination must have vanishing non-constant coordinates mod
    Phi_m, otherwise the table is inconsistent.
    """
    groups: dict[UniPoly, CycValue] = {}
    order = []
    for e in table.entries:
        if e.f not in groups:
            groups[e.f] = CycValue(table.order_m)
            order.append(e.f)
        groups[e.f] = groups[e.f] + e.chi.lift(table.order_m) * e.dim
    coords = {f: groups[f].reduced() for f in order}
    width = len(next(iter(coords.values())))
    out = ExpPoly(k)
    for j in range(width):
        part = ExpPoly(k)
        for f in order:
            c = coords[f][j]
            if c:
                part.add_inplace(product_of_unis([f] * k), c)
        if j == 0:
            out = part
        elif part:
            raise TableError(f"{table.group}: character sum has an irrational part (coordinate z^{j})")
    out = out / table.order
    if not out.is_integral():
        raise TableError(f"{table.group}: F is not integral for k={k}")
    return out


@dataclass
class IdentityReport:
    group: str
    trivial_ok: bool
    det_ok: bool
    k1_ok: bool
    details: list[str]

    @property
    def ok(self) -> bool:
        return self.trivial_ok and self.det_ok and self.k1_ok


def char_poly_identity_check(source, method: str = "enumerate") -> IdentityReport:
    """Check f_triv = prod (x - 1 + d_i), that some linear character has f = prod (x - e*_i),
    and that the table gives exactly one one-factor factorization of c.

    ``source`` is a CharTable, or a wreath GroupSpec (then the two sums over
    the group are computed directly, which is the Shephard-Todd / Orlik-Solomon check).
    """
    if isinstance(source, GroupSpec):
        return _wreath_identity_check(source, method)
    t: CharTable = source
    details = []
    f_triv = UniPoly.from_roots([1 - d for d in t.degrees])
    f_det = UniPoly.from_roots(t.coexponents)
    first = t.entries[0]
    trivial_ok = first.dim == 1 and first.chi == 1 and first.f == f_triv
    if not trivial_ok:
        details.append(f"f_triv: trivial row f = {format_uni(first.f)}, expected {format_uni(f_triv)}")
    det_ok = any(e.dim == 1 and e.f == f_det for e in t.entries)
    if not det_ok:
        details.append(f"f_det: no linear character with f = {format_uni(f_det)}")
    try:
        k1_ok = exceptional_F(t, 1) == ExpPoly.const(1, 1)
    except TableError as exc:
        k1_ok = False
        details.append(f"F(k=1): {exc}")
    else:
        if not k1_ok:
            details.append("F(k=1): one-factor count is not 1")
    return IdentityReport(t.group, trivial_ok, det_ok, k1_ok, details)


def det_value(u: GenPerm) -> CycValue:
    """sign(pi) * w^(sum of weights), as an element of Z[z_d]."""
    return CycValue.zeta(u.d, sum(u.weights)) * u.perm.sign()


def _zero_sum_tuples(d: int, j: int) -> int:
    """Number of j-tuples of nonzero residues mod d with sum 0."""
    ways = [1] + [0] * (d - 1)
    for _ in range(j):
        total = sum(ways)
        ways = [total - w for w in ways]
    return ways[0]


def _fixdim_sums_by_class(spec: GroupSpec) -> tuple[UniPoly, UniPoly]:
    # a cycle of length l carries d^(l-1) weight vectors of each total weight;
    # weight 0 adds a fixed line, the other d - 1 weights do not
    n, d = spec.n, max(spec.d, 1)
    plain = UniPoly()
    signed = UniPoly()
    x = UniPoly.x()
    for lam in partitions_upto(n):
        count = math.factorial(n) // z(lam)
        sign = -1 if (n - len(lam)) % 2 else 1
        scale = count * d ** (n - len(lam))
        m = len(lam)
        if spec.family == "ddn":
            # total weight must vanish: choose which j cycles get a nonzero weight
            poly = UniPoly()
            for j in range(m + 1):
                poly = poly + x ** (m - j) * (math.comb(m, j) * _zero_sum_tuples(d, j))
            plain = plain + poly * scale
            signed = signed + poly * (sign * scale)
        else:
            # det picks up zeta^w per cycle, and the nonzero powers of zeta sum to -1
            plain = plain + (x + (d - 1)) ** m * scale
            signed = signed + (x - (1 if d > 1 else 0)) ** m * (sign * scale)
    return plain, signed


def fixdim_sums(spec: GroupSpec, method: str = "enumerate") -> tuple[UniPoly, UniPoly]:
    """(sum_w x^fixdim, sum_w det(w) x^fixdim) over the whole group.

    ``method="enumerate"`` walks every element; ``"classes"`` sums over cycle
    types and cycle weights, which is fast for large d.
    """
    if method == "classes":
        return _fixdim_sums_by_class(spec)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    plain = [0] * (spec.n + 1)
    signed = [CycValue(max(spec.d, 1)) for _ in range(spec.n + 1)]
    for w in enumerate_group(spec):
        f = fixdim(w)
        plain[f] += 1
        signed[f] = signed[f] + det_value(w)
    return UniPoly(plain), UniPoly(v.rational_value() for v in signed)


def _wreath_identity_check(spec: GroupSpec, method: str = "enumerate") -> IdentityReport:
    inv = invariants(spec)
    plain, signed = fixdim_sums(spec, method)
    f_triv = UniPoly.from_roots([1 - d for d in inv.degrees])
    f_det = UniPoly.from_roots(inv.coexponents)
    if spec.family == "sym":
        # on C^n the all-ones line is fixed: one extra factor of x
        f_triv = f_triv * UniPoly.x()
        f_det = f_det * UniPoly.x()
    details = []
    if plain != f_triv:
        details.append(f"sum x^fixdim = {format_uni(plain)}, expected {format_uni(f_triv)}")
    if signed != f_det:
        details.append(f"sum det x^fixdim = {format_uni(signed)}, expected {format_uni(f_det)}")
    return IdentityReport(str(spec), plain == f_triv, signed == f_det, True, details)
