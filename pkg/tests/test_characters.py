import math
from pathlib import Path

import pytest

from refacto import characters as ch
from refacto.closed_forms import jackson_poly, n1cycle_transitive_poly, rank2_explicit_k2, rank2_poly
from refacto.polys import UniPoly
from refacto.symfunc import partitions_upto
from refacto.wreath import GroupSpec


def test_mn_small_table():
    # S3: trivial, sign, standard
    assert [ch.mn_character((2, 1), mu) for mu in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, -1]
    assert [ch.mn_character((1, 1, 1), mu) for mu in [(1, 1, 1), (2, 1), (3,)]] == [1, -1, 1]
    assert [ch.dimension(lam) for lam in partitions_upto(5)] == [1, 4, 5, 6, 5, 4, 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_row_orthogonality(n):
    parts = partitions_upto(n)
    for a in parts:
        norm = sum(ch.class_size(mu) * ch.mn_character(a, mu) ** 2 for mu in parts)
        assert norm == math.factorial(n)
    assert ch.column_orthogonality(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_g_lambda_two_ways(n):
    for m in range(n):
        assert ch.hook_g(n, m) == ch.g_lambda(ch.hook_partition(n, m))
        assert ch.g_lambda(ch.hook_partition(n, m)) == ch.g_lambda_contents(ch.hook_partition(n, m))
    for m in range(1, n - 2):
        lam = ch.near_hook_partition(n, m)
        assert ch.near_hook_g(n, m) == ch.g_lambda(lam) == ch.g_lambda_contents(lam)


def test_frobenius_matches_closed_forms():
    assert ch.frobenius_fixdim_poly(4, (4,), 2) == jackson_poly(4, 2)
    for n in (3, 4, 5):
        assert ch.n1cycle_by_characters(n, 2) == n1cycle_transitive_poly(n, 2)


def test_parse_poly():
    x = UniPoly.x()
    assert ch.parse_poly("(x - 1)*(x - 3)/24") == (x - 1) * (x - 3) / 24
    assert ch.parse_poly("2*P1 + 3", {"P1": x - 1}) == 2 * x + 1
    assert ch.parse_poly("x^2 - 2*x") == x * x - 2 * x
    for bad in ["x / x", "2x", "(x - 1"]:
        with pytest.raises(ch.TableError):
            ch.parse_poly(bad)


def test_g4_table():
    t = ch.load_char_table("G4")
    assert t.degrees == (4, 6) and t.coexponents == (1, 3) and t.order == 24
    p1, p2 = t.basis["P1"], t.basis["P2"]
    assert t.entries[0].f == 24 * p2 + 48 * p1 + 24
    assert ch.exceptional_F(t, 2) == rank2_poly(t.spec(), 2) == rank2_explicit_k2(t.spec())


@pytest.mark.parametrize("name", ch.bundled_tables())
def test_bundled_round_trip_and_identities(name):
    t = ch.load_char_table(name)
    assert ch.loads_char_table(ch.dumps_char_table(t)) == t
    assert ch.char_poly_identity_check(t).ok


def test_bundled_manifest():
    names = ch.bundled_tables()
    assert "G32" in names
    assert all(ch.load_char_table(n).rank in (2, 3, 4) for n in names)


def test_corrupted_table_names_invariant(tmp_path):
    text = ch.dumps_char_table(ch.load_char_table("G4")).replace("x^2 + 8*x + 15", "x^2 + 8*x + 14")
    rep = ch.char_poly_identity_check(ch.loads_char_table(text))
    assert not rep.ok and not rep.trivial_ok
    assert rep.details[0].startswith("f_triv")


@pytest.mark.parametrize("bad", [
    "degrees 4 6\ncoexponents 1 3\norder_m 3\nentry dim=1 chi=1 f=x\n",
    "group G\ndegrees 4 6\ncoexponents 1 3\norder_m 3\nentry dim=1 chi=z5 f=x\n",
    "group G\ndegrees 4 6\ncoexponents 1 3\norder_m 3\nentry dim=1 chi=1\n",
])
def test_malformed_tables(bad):
    with pytest.raises(ch.TableError):
        ch.loads_char_table(bad)


@pytest.mark.parametrize("spec", [GroupSpec.d1n(2, 3), GroupSpec.ddn(3, 3), GroupSpec.sym(5), GroupSpec.d1n(4, 2)], ids=str)
def test_wreath_identity_sums(spec):
    assert ch.char_poly_identity_check(spec).ok


def test_demo_tables_load():
    root = Path(__file__).resolve().parents[1] / "demos" / "tables"
    for path in sorted(root.glob("*.ct")):
        assert ch.char_poly_identity_check(ch.load_char_table(path)).ok


@pytest.mark.parametrize("spec", [GroupSpec.sym(5), GroupSpec.d1n(3, 3), GroupSpec.ddn(4, 3), GroupSpec.ddn(5, 2), GroupSpec.d1n(7, 1)], ids=str)
def test_class_sums_match_enumeration(spec):
    assert ch.fixdim_sums(spec, "classes") == ch.fixdim_sums(spec)
