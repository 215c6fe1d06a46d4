"""Verma modules: weight spaces, the action, the contravariant form."""

import random
from fractions import Fraction

import pytest

from superweyl.superalgebra import build_algebra, root_datum, Weight
from superweyl.verma import VermaModule, kostant_dimension
from superweyl.pbw import (PBWElement, TruncationError, transpose_antiauto,
                           word_parity)


def module(fam, marks, cap):
    g = build_algebra(fam)
    d = root_datum(g)
    return VermaModule(g, d.weight_from_marks(marks), cap)


def test_defining_relations():
    M = module("B(0,1)", [1], 5)
    g = M.algebra
    v = M.highest_vector()
    for k, h in enumerate(g.cartan):
        assert M.act(h, v) == ({(): M.weight.coords[k]}
                               if M.weight.coords[k] else {})
    for lab in g.positive_labels():
        assert M.act(lab, v) == {}


def test_b01_lowering_then_raising():
    """X_a (X_{-a} v) is a nonzero multiple of v; the coefficient comes
    from [X_a, X_{-a}] evaluated at the weight."""
    M = module("B(0,1)", [1], 5)
    g = M.algebra
    fv = M.act("f[a1]", M.highest_vector())
    efv = M.act("e[a1]", fv)
    bracket = g.bracket("e[a1]", "f[a1]")
    coeffs = [bracket.get(h, Fraction(0)) for h in g.cartan]
    expected = M.weight.eval_on(coeffs)
    assert expected != 0
    assert efv == {(): expected}
    # and the diagonal form value at depth alpha equals that coefficient
    alpha = root_datum(g).simple_roots[0]
    gram = M.gram(alpha)
    assert gram[0][0] == expected


@pytest.mark.parametrize("fam,marks,cap", [
    ("gl(1|1)", [3, 1], 3),
    ("B(0,1)", [2], 7),
    ("A(0,1)", [1, 1], 5),
    ("C(2)", [1, 1], 5),
    ("B(0,2)", [1, 1], 5),
])
def test_weight_space_dims_vs_combinatorial_oracle(fam, marks, cap):
    M = module(fam, marks, cap)
    for d in M.depths():
        assert M.dim(d) == kostant_dimension(M.algebra, d, cap)


def test_b01_all_spaces_one_dimensional():
    M = module("B(0,1)", [2], 10)
    for d in M.depths():
        assert M.dim(d) == 1


def test_depth_vector_view():
    M = module("B(0,1)", [1], 6)
    alpha = root_datum(M.algebra).simple_roots[0]
    word = M.spaces[alpha + alpha][0]
    expo = M.exponent_view(word)
    assert expo == {alpha + alpha: 1}   # X_{-2a} once, odd cap forbids f^2


def test_pairing_normalization_and_orthogonality():
    M = module("B(0,1)", [1], 6)
    v = M.highest_vector()
    assert M.contravariant_pairing(v, v) == 1
    fv = M.act("f[a1]", v)
    from superweyl.superalgebra import SuperweylError
    with pytest.raises(SuperweylError):
        M.contravariant_pairing(v, fv)


def test_pairing_rank_examples():
    alpha = root_datum(build_algebra("B(0,1)")).simple_roots[0]
    zero = Weight.zero(1)
    M0 = module("B(0,1)", [0], 4)
    assert M0.pairing_rank(zero)[0] == 1
    r, kern = M0.pairing_rank(alpha)
    assert r == 0 and len(kern) == 1
    M1 = module("B(0,1)", [1], 4)
    assert M1.pairing_rank(alpha)[0] == 1


@pytest.mark.parametrize("fam,marks,cap", [
    ("gl(1|1)", [3, 1], 3),
    ("B(0,1)", [2], 6),
    ("A(0,1)", [1, 1], 4),
])
def test_contravariance(fam, marks, cap):
    """B(X x, y) = (-1)^{|X||x|} B(x, sigma(X) y) exactly."""
    M = module(fam, marks, cap)
    g = M.algebra
    rng = random.Random(7)
    sigma_img = {}
    for lab in g.basis:
        s = transpose_antiauto(PBWElement.generator(g, lab))
        (w, c), = s.data.items()
        sigma_img[lab] = (g.basis[w[0]], c)
    for _ in range(40):
        d = rng.choice(M.depths())
        words = M.spaces[d]
        x = {rng.choice(words): Fraction(rng.randint(-3, 3))}
        lab = rng.choice(g.basis)
        try:
            xs = M.act(lab, x)
        except TruncationError:
            continue
        if not xs:
            continue
        d2 = {M.word_depth(w) for w in xs}.pop()
        for y_word in M.spaces[d2]:
            y = {y_word: Fraction(1)}
            lhs = M.contravariant_pairing(xs, y)
            s_lab, s_c = sigma_img[lab]
            try:
                sy = M.act(s_lab, y)
            except TruncationError:
                continue
            sy = {w: s_c * c for w, c in sy.items()}
            px = word_parity(g, next(iter(x)))
            sign = -1 if (g.parity[lab] and px) else 1
            rhs = sign * M.contravariant_pairing(x, sy)
            assert lhs == rhs


@pytest.mark.parametrize("fam,marks,cap", [
    ("B(0,1)", [0], 5),
    ("B(0,1)", [2], 6),
    ("gl(1|1)", [1, -1], 3),
])
def test_radical_is_submodule(fam, marks, cap):
    M = module(fam, marks, cap)
    g = M.algebra
    for d in M.depths():
        r, kern = M.pairing_rank(d)
        words = M.spaces[d]
        for coeffs in kern:
            vec = {w: c for w, c in zip(words, coeffs) if c}
            for lab in g.negative_labels():
                try:
                    img = M.act(lab, vec)
                except TruncationError:
                    continue
                if not img:
                    continue
                d2 = {M.word_depth(w) for w in img}.pop()
                r2, kern2 = M.pairing_rank(d2)
                words2 = M.spaces[d2]
                # img pairs to zero with everything: it is in the radical
                for w2 in words2:
                    assert M.contravariant_pairing(
                        img, {w2: Fraction(1)}) == 0


def test_truncation_overflow():
    M = module("B(0,1)", [1], 2)
    v = M.highest_vector()
    fv = M.act("f[2a1]", v)
    with pytest.raises(TruncationError):
        M.act("f[2a1]", fv)


def test_act_element_matches_iterated_action():
    M = module("B(0,1)", [2], 6)
    g = M.algebra
    u = PBWElement.from_word(g, ["f[a1]", "f[2a1]"])
    v = M.highest_vector()
    via_element = M.act_element(u, v)
    step = M.act("f[a1]", M.act("f[2a1]", v))
    assert via_element == step


def test_dimension_table_json():
    M = module("B(0,1)", [2], 8)
    table = M.dimension_table()
    assert table["algebra"] == "B(0,1)"
    assert table["stabilizedAtHeight"] == 5
    by_height = {row["height"]: row for row in table["spaces"]}
    assert by_height[0]["dim"] == 1 and by_height[0]["radical"] == 0
    assert by_height[5]["radical"] == 1
    parities = [row["parity"] for row in table["spaces"][:3]]
    assert parities == ["even", "odd", "even"]


def test_enumeration_complete_flag():
    Mgl = module("gl(1|1)", [1, 0], 4)
    assert Mgl.enumeration_complete
    Mb = module("B(0,1)", [1], 4)
    assert not Mb.enumeration_complete
