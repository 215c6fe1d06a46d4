"""Irreducible modules, characters, dominance, span equalities."""

import random
from fractions import Fraction

import pytest

from superweyl.superalgebra import (build_algebra, root_datum, Weight,
                                    adjoint_representation,
                                    defining_representation)
from superweyl.borelweil import (extract_irreducible, check_dominance,
                                 partial_span_from_one, coradical_spans,
                                 NonIntegralWeightError,
                                 InfiniteDimensionalError)
from superweyl.bigcell import section_space
from superweyl.pbw import PBWElement, TruncationError
from superweyl.verma import VermaModule
from superweyl.ratlinalg import SpanBuilder


def lam_of(fam, marks):
    g = build_algebra(fam)
    return g, root_datum(g).weight_from_marks(marks)


def test_trivial_module_everywhere():
    for fam in ["gl(1|1)", "A(0,1)", "B(0,1)", "B(0,2)", "C(2)"]:
        g = build_algebra(fam)
        mod = extract_irreducible(g, Weight.zero(g.rank))
        assert mod.finite_dimensional
        assert mod.total_dims() == (1, 0)
        assert mod.character() == {Weight.zero(g.rank): (1, 0)}


def test_b01_ladder():
    g, _ = lam_of("B(0,1)", [0])
    d = root_datum(g)
    for m, dims in [(1, (2, 1)), (2, (3, 2)), (3, (4, 3))]:
        mod = extract_irreducible(g, d.weight_from_marks([m]))
        assert mod.finite_dimensional
        assert mod.total_dims() == dims


def test_b01_adjoint_oracle():
    """The weight-2 module matches the adjoint realization of the algebra
    on its own 3|2 matrix module, weight space by weight space."""
    g, lam = lam_of("B(0,1)", [2])
    mod = extract_irreducible(g, lam)
    ad = adjoint_representation(g)
    assert ad.check()
    assert mod.character() == ad.weight_multiset()


def test_b01_defining_oracle_up_to_parity_flip():
    g, lam = lam_of("B(0,1)", [1])
    mod = extract_irreducible(g, lam)
    df = defining_representation(g)
    assert df.check()
    flipped = {w: (o, e) for w, (e, o) in df.weight_multiset().items()}
    assert mod.character() == flipped


def test_character_alternates_parity():
    g, lam = lam_of("B(0,1)", [2])
    ch = extract_irreducible(g, lam).character()
    delta = root_datum(g).simple_roots[0]
    expected = {}
    for k in range(5):
        w = lam - k * delta
        expected[w] = (1, 0) if k % 2 == 0 else (0, 1)
    assert ch == expected


def test_gl11_typical_and_atypical():
    g = build_algebra("gl(1|1)")
    typical = extract_irreducible(g, Weight([2, 1]))     # lam(z) = 3
    assert typical.total_dims() == (1, 1)
    atypical = extract_irreducible(g, Weight([1, -1]))   # lam(z) = 0
    assert atypical.total_dims() == (1, 0)


def test_non_integral_rejected():
    g = build_algebra("B(0,1)")
    with pytest.raises(NonIntegralWeightError):
        extract_irreducible(g, Weight([Fraction(1, 2)]))


def test_non_dominant_inconclusive():
    g, lam = lam_of("B(0,1)", [-1])
    mod = extract_irreducible(g, lam, max_height=12)
    assert not mod.finite_dimensional
    assert "inconclusive" in mod.status
    with pytest.raises(InfiniteDimensionalError):
        mod.character()


def test_monotone_stability():
    """Extending the truncation past stabilization never changes any
    multiplicity."""
    g, lam = lam_of("B(0,1)", [2])
    small = extract_irreducible(g, lam, max_height=6)
    big = extract_irreducible(g, lam, max_height=9)
    assert small.finite_dimensional and big.finite_dimensional
    for d, r in small.ranks.items():
        assert big.ranks.get(d, 0) == r
    for d, r in big.ranks.items():
        if r:
            assert small.ranks.get(d) == r


@pytest.mark.parametrize("fam,marks,cap", [
    ("B(0,1)", [1], 5),
    ("B(0,1)", [2], 7),
    ("B(0,1)", [3], 9),
    ("gl(1|1)", [3, 1], 3),
    ("A(0,1)", [1, 1], 5),
])
def test_span_equality(fam, marks, cap):
    """span of partial(U(n-)) applied to the constant section equals the
    co-radical of the pairing, weight space by weight space."""
    g, lam = lam_of(fam, marks)
    sp = section_space(g, lam, cap)
    spans = partial_span_from_one(sp)
    cor = coradical_spans(sp)
    for d, sb in cor.items():
        other = spans.get(d)
        if sb.dim == 0:
            assert other is None or other.dim == 0
        else:
            assert other is not None and other.equals(sb)


def test_g_stability_of_irreducible():
    """The irreducible submodule is closed under the full dual action,
    not just the lowering part."""
    g, lam = lam_of("B(0,1)", [2])
    sp = section_space(g, lam, 7)
    cor = coradical_spans(sp)
    for d, sb in cor.items():
        if sb.dim == 0:
            continue
        expos = sp.monomial_basis(d)
        for row in sb.basis():
            p = sp.element({e: c for e, c in zip(expos, row) if c})
            for lab in g.basis:
                try:
                    q = sp.partial(PBWElement.generator(g, lab), p)
                except TruncationError:
                    continue
                if q.is_zero():
                    continue
                d2 = {sp.depth_of_expo(e) for e in q.data}.pop()
                e2 = sp.monomial_basis(d2)
                assert cor[d2].contains(
                    [q.data.get(e, Fraction(0)) for e in e2])


def test_uniqueness_spot_check():
    """Any nonzero element of the section module generates a submodule
    containing the irreducible one (within truncation)."""
    rng = random.Random(13)
    g, lam = lam_of("B(0,1)", [2])
    sp = section_space(g, lam, 6)
    cor = coradical_spans(sp)
    gens = [PBWElement.generator(g, lab) for lab in g.basis]
    for d in list(sp.verma.depths())[:4]:
        expos = sp.monomial_basis(d)
        for trial in range(2):
            coeffs = [Fraction(rng.randint(-2, 2)) for _ in expos]
            if all(c == 0 for c in coeffs):
                coeffs[0] = Fraction(1)
            w = sp.element({e: c for e, c in zip(expos, coeffs) if c})
            if w.is_zero():
                continue
            spans = {}
            frontier = [w]
            dd = {sp.depth_of_expo(e) for e in w.data}.pop()
            spans[dd] = SpanBuilder(len(sp.monomial_basis(dd)))
            spans[dd].add([w.data.get(e, Fraction(0))
                           for e in sp.monomial_basis(dd)])
            while frontier:
                nxt = []
                for p in frontier:
                    for u in gens:
                        try:
                            q = sp.partial(u, p)
                        except TruncationError:
                            continue
                        if q.is_zero():
                            continue
                        d2 = {sp.depth_of_expo(e) for e in q.data}.pop()
                        if d2 not in spans:
                            spans[d2] = SpanBuilder(
                                len(sp.monomial_basis(d2)))
                        vec = [q.data.get(e, Fraction(0))
                               for e in sp.monomial_basis(d2)]
                        if spans[d2].add(vec):
                            nxt.append(q)
                frontier = nxt
            # the generated submodule contains the irreducible one on the
            # depths it reaches safely
            for d2, sb in cor.items():
                if sb.dim == 0 or sp.verma.height(d2) > 4:
                    continue
                assert d2 in spans
                for row in sb.basis():
                    assert spans[d2].contains(row)


def test_dominance_table():
    g = build_algebra("B(0,1)")
    d = root_datum(g)
    assert check_dominance(g, d.weight_from_marks([2])).verdict == "dominant"
    rep = check_dominance(g, d.weight_from_marks([-1]))
    assert rep.verdict == "not-dominant"
    assert rep.failing
    gg = build_algebra("gl(1|1)")
    assert check_dominance(gg, Weight([5, 1])).verdict == "dominant"
    a01 = build_algebra("A(0,1)")
    assert check_dominance(
        a01, Weight([Fraction(1, 2), 0])).verdict == "not-dominant"
    c2 = build_algebra("C(2)")
    assert check_dominance(c2, Weight.zero(2)).verdict == "dominant"
    assert check_dominance(c2, Weight([2, 1])).verdict == \
        "decided-by-computation"
    assert check_dominance(c2, Weight([0, -1])).verdict == "not-dominant"


def test_dominance_matches_computation_on_samples():
    """Where the table speaks, the stabilization computation agrees."""
    g = build_algebra("gl(1|1)")
    for coords in [(2, 1), (0, 0), (1, -1), (-1, -2)]:
        lam = Weight(coords)
        rep = check_dominance(g, lam)
        mod = extract_irreducible(g, lam, max_height=4)
        assert rep.verdict == "dominant"
        assert mod.finite_dimensional
    b = build_algebra("B(0,1)")
    d = root_datum(b)
    for mark, expect in [(0, True), (2, True), (-1, False), (-2, False)]:
        lam = d.weight_from_marks([mark])
        rep = check_dominance(b, lam)
        mod = extract_irreducible(b, lam, max_height=10)
        assert (rep.verdict == "dominant") == expect
        assert mod.finite_dimensional == expect


def test_classical_weyl_dimensions():
    """Degenerate even-only slice: rank-1 classical Weyl dimensions."""
    g = build_algebra("sl(2|0)")
    d = root_datum(g)
    for m in range(5):
        mod = extract_irreducible(g, d.weight_from_marks([m]))
        assert mod.total_dims() == (m + 1, 0)


def test_json_export():
    g, lam = lam_of("B(0,1)", [2])
    j = extract_irreducible(g, lam).to_json()
    assert j["finiteDimensional"] is True
    assert j["dims"] == {"even": 3, "odd": 2}
    assert len(j["character"]) == 5
    weights = [c["weight"] for c in j["character"]]
    assert weights[0] == ["2/1"]
