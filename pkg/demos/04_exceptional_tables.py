"""Exceptional groups through their character polynomials."""
from pathlib import Path

from refacto import characters as ch
from refacto import closed_forms as cf

print("bundled:", " ".join(ch.bundled_tables()))

t = ch.load_char_table("G4")
print(t.group, "degrees", t.degrees, "coexponents", t.coexponents, "order", t.order)
for e in t.entries:
    print(" ", e.dim, ch.format_cyc(e.chi), ch.format_uni(e.f))

# The trivial row is prod (x - 1 + d_i); some linear character gives prod (x - e*_i).
print(ch.char_poly_identity_check(t))

spec = t.spec()
F = ch.exceptional_F(t, 2)
print(F.format(["x1", "x2"]))
print("rank-2 formula:", F == cf.rank2_poly(spec, 2), "explicit k=2:", F == cf.rank2_explicit_k2(spec))

# Rank 3: every group fits the common shape except G25
for name in ["G23", "G24", "G25", "G26", "G27"]:
    t = ch.load_char_table(name)
    F = ch.exceptional_F(t, 2)
    line = f"{name} rank-3 formula: {F == cf.rank3_poly(t.spec(), 2)}"
    if name == "G25":
        line += f"  own formula: {F == cf.g25_poly(t.spec(), 2)}"
    print(line)

# Larger tables ship with the demos in the power basis
for path in sorted((Path(__file__).parent / "tables").glob("*.ct")):
    t = ch.load_char_table(path)
    print(t.group, "rank", t.rank, "entries", len(t.entries), "checks", ch.char_poly_identity_check(t).ok)

# A custom table is plain text; a broken trivial row is caught
text = ch.dumps_char_table(ch.load_char_table("G4")).replace("x^2 + 8*x + 15", "x^2 + 8*x + 16")
print(ch.char_poly_identity_check(ch.loads_char_table(text)).details)
