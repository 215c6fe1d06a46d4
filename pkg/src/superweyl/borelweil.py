"""Extraction of the irreducible submodule generated by the constant
section, finite-dimensionality detection, and characters.

The irreducible module attached to an integral weight is realized inside
the big-cell section module as the image of the matrix-coefficient map
(equivalently the span of the dual action of the lowering operators on
the constant section).  Its weight multiplicities are the ranks of the
contravariant Gram blocks of the Verma module; finite-dimensionality is
detected by rank stabilization, with the fast-path dominance table used
only as a screen.
"""

import os
from fractions import Fraction

from .superalgebra import Weight, SuperweylError, root_datum, EVEN
from .verma import VermaModule
from .pbw import PBWElement, TruncationError
from .bigcell import section_space, SectionPolynomial
from .ratlinalg import SpanBuilder


class NonIntegralWeightError(SuperweylError):
    pass


class InfiniteDimensionalError(SuperweylError):
    pass


DEFAULT_MAX_HEIGHT = 12


def default_max_height():
    env = os.environ.get("SUPERWEYL_MAX_DEPTH")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return DEFAULT_MAX_HEIGHT


def is_integral(weight):
    return all(c.denominator == 1 for c in weight.coords)


class IrreducibleModule:
    """Irreducible quotient data, realized inside the section module."""

    def __init__(self, algebra, highest_weight, max_height, ranks,
                 stabilized_height):
        self.algebra = algebra
        self.highest_weight = highest_weight
        self.max_height = max_height
        self.ranks = ranks                    # depth -> multiplicity
        self.stabilized_height = stabilized_height
        self.finite_dimensional = stabilized_height is not None

    @property
    def status(self):
        if self.finite_dimensional:
            return "finite"
        return "inconclusive at height %d" % self.max_height

    def space(self):
        return section_space(self.algebra, self.highest_weight,
                             self.max_height)

    def character(self):
        """weight -> (even dim, odd dim); requires finite dimensionality."""
        if not self.finite_dimensional:
            raise InfiniteDimensionalError(
                "character of a module that did not stabilize "
                "(%s); increase the truncation" % self.status)
        sp = self.space()
        out = {}
        for d, r in sorted(self.ranks.items(),
                           key=lambda t: sp.verma.height(t[0])):
            if not r:
                continue
            w = self.highest_weight - d
            par = sp.verma.space_parity(d)
            e, o = out.get(w, (0, 0))
            out[w] = (e + r, o) if par == EVEN else (e, o + r)
        return out

    def total_dims(self):
        e = o = 0
        for (de, do) in self.character().values():
            e += de
            o += do
        return (e, o)

    def generators(self, depth):
        """Basis of the irreducible module at one depth, inside P-hat
        (matrix-coefficient images of the Verma monomials, row-reduced)."""
        sp = self.space()
        words = sp.verma.spaces.get(depth, [])
        expos = sp.monomial_basis(depth)
        sb = SpanBuilder(len(expos))
        polys = []
        for w in words:
            th = sp.theta({w: Fraction(1)})
            vec = [th.data.get(e, Fraction(0)) for e in expos]
            if sb.add(vec):
                polys.append(th)
        return polys

    def to_json(self):
        out = {
            "algebra": self.algebra.name,
            "lambda": self.highest_weight.to_json(),
            "finiteDimensional": self.finite_dimensional,
            "status": self.status,
            "maxHeight": self.max_height,
        }
        if self.finite_dimensional:
            e, o = self.total_dims()
            out["dims"] = {"even": e, "odd": o}
            out["character"] = [
                {"weight": w.to_json(), "even": de, "odd": do}
                for w, (de, do) in sorted(self.character().items(),
                                          key=lambda t: t[0].coords,
                                          reverse=True)
            ]
        else:
            out["dims"] = None
            out["character"] = None
        return out


def _stabilization_guess(algebra, weight):
    """Principled truncation for a dominant weight: the depth range of a
    finite-dimensional module with this highest weight is bounded by the
    height of twice the weight, plus the detection window."""
    from .ratlinalg import solve
    import math
    datum = root_datum(algebra)
    rows = [[w.coords[k] for w in datum.simple_roots]
            for k in range(algebra.rank)]
    coeffs = solve(rows, [2 * c for c in weight.coords])
    if coeffs is None or any(c < 0 for c in coeffs):
        return None
    window = max((datum.heights[r.weight] for r in datum.positive_roots),
                 default=1)
    return math.ceil(sum(coeffs)) + window


def extract_irreducible(algebra, highest_weight, max_height=None):
    """Irreducible module generated by the constant section.

    With max_height None, the truncation grows through a small ladder
    (the default cap comes from SUPERWEYL_MAX_DEPTH, and a bound derived
    from the weight is tried when it is plausibly dominant) until the
    ranks stabilize.
    """
    if not is_integral(highest_weight):
        raise NonIntegralWeightError(
            "weight %r is not integral on the Cartan lattice"
            % (highest_weight,))
    if max_height is not None:
        caps = [max_height]
    else:
        cap = default_max_height()
        caps = {min(6, cap), cap}
        guess = _stabilization_guess(algebra, highest_weight)
        if guess is not None:
            caps.add(min(max(guess, 1), max(cap, 40)))
        caps = sorted(caps)
    result = None
    for cap in caps:
        M = VermaModule(algebra, highest_weight, cap)
        ranks, stable = M.irreducible_ranks()
        result = IrreducibleModule(algebra, highest_weight, cap, ranks,
                                   stable)
        if result.finite_dimensional:
            break
    return result


def partial_span_from_one(space):
    """Per-depth spans of partial(U(n-)) applied to the constant section
    (breadth-first over the lowering generators, inside the truncation).

    Returns {depth: SpanBuilder over the monomial basis at that depth}.
    """
    g = space.algebra
    M = space.verma
    spans = {}
    basis_at = {d: space.monomial_basis(d) for d in M.depths()}

    def depth_of(p):
        ds = {space.depth_of_expo(e) for e in p.data}
        if len(ds) != 1:
            raise SuperweylError("span element not depth-homogeneous")
        return ds.pop()

    one = space.one()
    zero_d = depth_of(one)
    spans[zero_d] = SpanBuilder(len(basis_at[zero_d]))
    spans[zero_d].add([Fraction(1)])
    frontier = [one]
    lowering = [PBWElement.generator(g, lab) for lab in g.negative_labels()]
    while frontier:
        nxt = []
        for p in frontier:
            for f in lowering:
                try:
                    q = space.partial(f, p)
                except TruncationError:
                    continue
                if q.is_zero():
                    continue
                d = depth_of(q)
                if d not in spans:
                    spans[d] = SpanBuilder(len(basis_at[d]))
                vec = [q.data.get(e, Fraction(0)) for e in basis_at[d]]
                if spans[d].add(vec):
                    nxt.append(q)
        frontier = nxt
    return spans


def coradical_spans(space):
    """Per-depth spans of the matrix-coefficient images (the co-radical
    of the pairing realized inside P-hat)."""
    M = space.verma
    out = {}
    for d in M.depths():
        expos = space.monomial_basis(d)
        sb = SpanBuilder(len(expos))
        for w in M.spaces[d]:
            th = space.theta({w: Fraction(1)})
            sb.add([th.data.get(e, Fraction(0)) for e in expos])
        out[d] = sb
    return out


# ---------------------------------------------------------------------------
# dominance screening
# ---------------------------------------------------------------------------

class DominanceReport:
    def __init__(self, weight, verdict, failing):
        self.weight = weight
        self.verdict = verdict        # dominant | not-dominant | decided-by-computation
        self.failing = failing        # list of condition descriptions

    def __repr__(self):
        return "DominanceReport(%s, %s)" % (self.verdict, self.failing)

    def to_json(self):
        return {"weight": self.weight.to_json(), "verdict": self.verdict,
                "failingConditions": self.failing}


def _even_positive_marks(algebra, weight):
    """Marks of the weight on the normalized coroots of the even positive
    roots."""
    g = algebra
    datum = root_datum(g)
    out = []
    for r in datum.positive_roots:
        if r.parity:
            continue
        e = r.vector
        f = datum.by_weight[-r.weight].vector
        h_raw = g.bracket(e, f)
        coeffs = [h_raw.get(h, Fraction(0)) for h in g.cartan]
        val = r.weight.eval_on(coeffs)
        mark = 2 * weight.eval_on(coeffs) / val
        out.append((r.weight, mark))
    return out


def check_dominance(algebra, weight):
    """Fast-path dominance screen.

    The table covers the gl/sl families (even-part dominance plus
    integrality is exact there) and B(0,n) (all simple marks nonnegative
    integers).  For C(n) the odd-node condition is not tabulated: the
    verdict defers to the computation except for obvious failures.
    """
    g = algebra
    failing = []
    if not is_integral(weight):
        failing.append("weight is not integral on the Cartan lattice")
    datum = root_datum(g)
    even_marks = _even_positive_marks(g, weight)
    for root_w, mark in even_marks:
        if mark.denominator != 1:
            failing.append("mark on even coroot of %s is not integral"
                           % (root_w,))
        elif mark < 0:
            failing.append("mark on even coroot of %s is negative"
                           % (root_w,))
    if g.family in ("gl", "sl"):
        verdict = "not-dominant" if failing else "dominant"
        return DominanceReport(weight, verdict, failing)
    if g.family == "B":
        marks = datum.marks(weight)
        for a, mark in zip(datum.simple_roots, marks):
            if mark.denominator != 1:
                failing.append("mark on simple coroot of %s is not integral"
                               % (a,))
            elif mark < 0:
                failing.append("mark on simple coroot of %s is negative"
                               % (a,))
        verdict = "not-dominant" if failing else "dominant"
        return DominanceReport(weight, verdict, failing)
    if g.family == "C":
        if failing:
            return DominanceReport(weight, "not-dominant", failing)
        if weight.is_zero():
            return DominanceReport(weight, "dominant", [])
        return DominanceReport(weight, "decided-by-computation", [])
    raise SuperweylError("unsupported family %r" % (g.family,))
