"""Algebra construction, root systems, invariants, representations."""

from fractions import Fraction

import pytest

from superweyl.superalgebra import (
    build_algebra, root_datum, Weight, borel, parabolic_from_simples,
    levi_vanishing, defining_representation, adjoint_representation,
    trivial_representation, contragredient_dual, double_dual_canonical,
    supertrace, UnsupportedFamilyError, DegenerateRootSystemError,
    mat_zero, super_bracket_matrices, mat_is_zero, mat_addsub, mat_scale,
)

FAMILIES = ["gl(1|1)", "A(0,1)", "B(0,1)", "B(0,2)", "C(2)", "sl(2|2)"]


@pytest.mark.parametrize("fam,dims", [
    ("gl(1|1)", (2, 2)),
    ("A(0,1)", (4, 4)),
    ("B(0,1)", (3, 2)),
    ("B(0,2)", (10, 4)),
    ("C(2)", (4, 4)),
    ("sl(2|2)", (7, 8)),
    ("gl(2|2)", (8, 8)),
    ("sl(2|0)", (3, 0)),
])
def test_dimensions(fam, dims):
    assert build_algebra(fam).dim() == dims


def test_gl11_is_matrix_units():
    g = build_algebra("gl(1|1)")
    assert g.rank == 2
    assert [g.parity[b] for b in g.basis] == [1, 0, 0, 1]


@pytest.mark.parametrize("fam", FAMILIES)
def test_invariants(fam):
    g = build_algebra(fam)
    assert g.check_super_antisymmetry()
    assert g.check_super_jacobi()
    assert g.check_cartan_diagonal()


def test_unsupported_labels():
    with pytest.raises(UnsupportedFamilyError):
        build_algebra("E(8)")
    with pytest.raises(UnsupportedFamilyError) as exc:
        build_algebra("A(1,1)")
    assert "m != n" in str(exc.value)
    with pytest.raises(UnsupportedFamilyError):
        build_algebra("C(1)")


def test_supertraceless():
    g = build_algebra("A(0,1)")
    for lab in g.basis:
        assert supertrace(g.matrices[lab], g.v_parities) == 0


def test_bracket_matches_matrix_realization():
    for fam in ["B(0,1)", "C(2)", "gl(1|1)"]:
        g = build_algebra(fam)
        for a in g.basis:
            for b in g.basis:
                m = super_bracket_matrices(g.matrices[a], g.matrices[b],
                                           g.parity[a], g.parity[b])
                for lab, c in g.bracket(a, b).items():
                    m = mat_addsub(m, mat_scale(g.matrices[lab], c), -1)
                assert mat_is_zero(m)


def test_root_counts():
    d = root_datum(build_algebra("gl(1|1)"))
    assert len(d.roots) == 2
    assert all(r.parity == 1 for r in d.roots)

    d = root_datum(build_algebra("B(0,1)"))
    odd = [r for r in d.roots if r.parity]
    even = [r for r in d.roots if not r.parity]
    assert len(odd) == 2 and len(even) == 2
    # the even roots are twice the odd ones
    ow = {r.weight for r in odd}
    for r in even:
        assert any((w + w) == r.weight for w in ow)

    d = root_datum(build_algebra("A(0,1)"))
    assert sum(1 for r in d.roots if not r.parity) == 2
    assert sum(1 for r in d.roots if r.parity) == 4


@pytest.mark.parametrize("fam", ["gl(1|1)", "A(0,1)", "B(0,1)", "B(0,2)",
                                 "C(2)", "gl(2|2)"])
def test_root_datum_roundtrip(fam):
    g = build_algebra(fam)
    d = root_datum(g)
    d0, d1 = g.dim()
    re = sum(1 for r in d.roots if not r.parity)
    ro = sum(1 for r in d.roots if r.parity)
    assert re + g.rank == d0
    assert ro == d1
    # opposite root vectors carry opposite weights
    for r in d.roots:
        assert (-r.weight) in d.by_weight
        other = d.by_weight[-r.weight]
        assert other.parity == r.parity
        assert other.positive != r.positive


def test_sl22_degenerate():
    with pytest.raises(DegenerateRootSystemError):
        root_datum(build_algebra("sl(2|2)"))


def test_negative_first_ordering():
    g = build_algebra("B(0,2)")
    roles = []
    for b in g.basis:
        if b in g.cartan:
            roles.append("h")
        elif b in g.positive:
            roles.append("e")
        else:
            roles.append("f")
    # negatives, then cartan, then positives
    assert roles == sorted(roles, key=lambda r: {"f": 0, "h": 1, "e": 2}[r])
    d = root_datum(g)
    negs = g.negative_labels()
    heights = [d.heights[g.weights[b]] for b in negs]
    assert heights == sorted(heights)


def test_weight_arithmetic():
    a = Weight([1, Fraction(1, 2)])
    b = Weight([0, Fraction(1, 2)])
    assert (a + b).coords == (Fraction(1), Fraction(1))
    assert (a - b).coords == (Fraction(1), Fraction(0))
    assert (-a).coords == (Fraction(-1), Fraction(-1, 2))
    assert (2 * b).coords == (Fraction(0), Fraction(1))
    assert Weight.from_json(a.to_json()) == a


def test_weight_from_marks_b01():
    d = root_datum(build_algebra("B(0,1)"))
    lam = d.weight_from_marks([2])
    assert lam.coords == (Fraction(2),)
    assert d.marks(lam) == [Fraction(2)]


def test_weight_from_marks_gl():
    g = build_algebra("gl(1|1)")
    d = root_datum(g)
    lam = d.weight_from_marks([3, 1])
    # first mark on the odd coroot E11+E22, second on E22
    assert lam.coords == (Fraction(2), Fraction(1))


def test_parabolic_and_characters():
    g = build_algebra("A(0,1)")
    B = borel(g)
    assert B.is_borel()
    d = root_datum(g)
    # Levi generated by the even simple root
    even_idx = [i for i, p in enumerate(d.simple_parities) if p == 0]
    P = parabolic_from_simples(g, even_idx)
    assert not P.is_borel()
    assert len(P.levi_negative_labels()) == 1
    f = P.levi_negative_labels()[0]
    lam_bad = -g.weights[f]     # the Levi root itself: not a character
    assert not levi_vanishing(P, lam_bad)
    assert levi_vanishing(P, Weight.zero(g.rank))


def test_representation_checks():
    for fam in ["gl(1|1)", "B(0,1)", "C(2)"]:
        g = build_algebra(fam)
        assert defining_representation(g).check()
        assert adjoint_representation(g).check()
        assert trivial_representation(g).check()


def test_dual_of_trivial():
    g = build_algebra("gl(1|1)")
    t = trivial_representation(g)
    dual = contragredient_dual(t)
    assert dual.check()
    assert dual.dims() == (1, 0)
    assert all(mat_is_zero(m) for m in dual.rho.values())


def test_dual_negates_weights():
    g = build_algebra("gl(1|1)")
    rep = defining_representation(g)
    dual = contragredient_dual(rep)
    assert dual.check()
    assert dual.basis_weights == [-w for w in rep.basis_weights]


@pytest.mark.parametrize("fam", ["gl(1|1)", "B(0,1)", "C(2)"])
def test_double_dual_canonical(fam):
    g = build_algebra(fam)
    for rep in (defining_representation(g), adjoint_representation(g)):
        dd = double_dual_canonical(rep)
        assert dd.basis_weights == rep.basis_weights
        assert dd.rho == rep.rho


def test_algebra_json():
    g = build_algebra("B(0,1)")
    j = g.to_json()
    assert j["dim"] == {"even": 3, "odd": 2}
    assert len(j["basis"]) == 5
    roles = [b["role"] for b in j["basis"]]
    assert roles.count("cartan") == 1
    d = root_datum(g)
    rj = d.to_json()
    assert len(rj["roots"]) == 4
