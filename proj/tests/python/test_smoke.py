import itertools
import json
from fractions import Fraction

import pytest

import wucalc
from wucalc import Complex, IntersectionRule


def brute_wu(facets, k):
    cells = Complex(facets).simplices
    total = 0
    for t in itertools.product(cells, repeat=k):
        if all(set(a) & set(b) for a, b in itertools.combinations(t, 2)):
            total += (-1) ** sum(len(x) - 1 for x in t)
    return total


def test_complex_basics():
    c = Complex([[1, 2, 3]])
    assert len(c) == 7
    assert c.f_vector() == [3, 3, 1]
    assert c.euler_characteristic() == 1
    assert c.dim == 2
    assert c.vertices == [1, 2, 3]
    assert [1, 2] in c.simplices


def test_whitney_and_catalog():
    c = Complex.whitney([(1, 2), (2, 3), (3, 1)])
    assert c == Complex([[1, 2, 3]])
    assert "moebius" in wucalc.catalog_names()
    assert Complex.catalog("octahedron").f_vector() == [6, 12, 8]


@pytest.mark.parametrize("facets", [[[1, 2]], [[1, 2], [2, 3]], [[1, 2], [2, 3], [3, 4], [4, 1]], [[1, 2, 3], [3, 4]]])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_wu_matches_enumeration(facets, k):
    assert wucalc.wu_characteristic(Complex(facets), k) == brute_wu(facets, k)


def test_betti_euler_poincare():
    c = Complex.catalog("cylinder")
    b = wucalc.betti_vector(c, 2)
    assert b == [0, 0, 1, 1, 0]
    assert sum((-1) ** p * x for p, x in enumerate(b)) == wucalc.wu_characteristic(c, 2)


def test_common_rule_table_cell():
    oct_ = Complex.catalog("octahedron")
    b = wucalc.betti_vector(oct_, 3, IntersectionRule.common)
    assert b[4] == 1 and b[6] == 1 and sum(b) == 2


def test_pair_betti():
    p3 = Complex([[1, 2], [2, 3]])
    assert wucalc.betti_vector([p3, Complex([[2]])]) == [0, 1]


def test_laplacian_blocks_p3():
    blocks = wucalc.laplacian_blocks(Complex([[1, 2], [2, 3]]), 2)
    assert [len(b) for b in blocks] == [3, 8, 4]
    assert sorted(blocks[0][i][i] for i in range(3)) == [2, 2, 4]
    spectra = wucalc.laplacian_spectra(Complex([[1, 2], [2, 3]]), 2)
    nonzero = lambda ev: sorted(round(x, 9) for x in ev if abs(x) > 1e-9)
    assert sorted(nonzero(spectra[0]) + nonzero(spectra[2])) == nonzero(spectra[1])


def test_lefschetz_cylinder():
    rows = wucalc.lefschetz_numbers(Complex.catalog("cylinder"), 1)
    assert len(rows) == 16
    assert all(ok for *_, ok in rows)
    assert sum(r[1] for r in rows) / len(rows) == Fraction(1)
    assert rows[0][0] in ("()", "")


def test_inductive_dimension():
    assert Complex.catalog("rabbit").inductive_dimension() == Fraction(3, 2)
    assert Complex.catalog("octahedron").inductive_dimension() == 2


def test_unimodular():
    for name in ("K3", "house", "moebius"):
        c = Complex.catalog(name)
        assert wucalc.fredholm_characteristic(c) == wucalc.fermi_characteristic(c)
        assert abs(wucalc.fermi_characteristic(c)) == 1


def test_products():
    k2 = Complex([[1, 2]])
    assert wucalc.product_f_vector(k2, k2) == [4, 4, 1]
    assert wucalc.euler_polynomial(k2) == [2, 1]


def test_cli_roundtrip(tmp_path):
    path = tmp_path / "tri.json"
    path.write_text(json.dumps([[1, 2, 3]]))
    code, out, err = wucalc.run_cli(["wu", "-k", "2", str(path)])
    assert code == 0, err
    assert json.loads(out)["wu"] == 1


def test_errors_raise():
    with pytest.raises(ValueError):
        Complex.catalog("no-such-complex")
