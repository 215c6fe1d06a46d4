"""The graded coordinate superalgebra of a flag supermanifold and
projective-embedding tests.

The degree-n piece is the irreducible module attached to n times the
chosen parabolic character, realized inside the big-cell polynomials;
products of sections are honest polynomial products there.  Degree-one
generation is then an exact rank question, and the classical-section
conditions reduce to an eigenline computation plus the distinctness of
the character powers.
"""

from fractions import Fraction

from .superalgebra import (Weight, SuperweylError, root_datum,
                           ParabolicDatum, levi_vanishing)
from .pbw import PBWElement, TruncationError
from .bigcell import SectionPolynomial, section_space, multiply
from .borelweil import extract_irreducible, check_dominance
from .ratlinalg import SpanBuilder


class NonDominantCharacterError(SuperweylError):
    pass


class EmbeddingAlgebra:
    """O(G/P) up to a maximum degree, graded piece by graded piece."""

    def __init__(self, algebra, parabolic, character_weight, max_degree,
                 pieces, modules):
        self.algebra = algebra
        self.parabolic = parabolic
        self.character_weight = character_weight
        self.max_degree = max_degree
        self.pieces = pieces      # n -> list[SectionPolynomial] basis of O_n
        self.modules = modules    # n -> IrreducibleModule

    def dims(self):
        return [len(self.pieces[n]) for n in range(self.max_degree + 1)]

    def graded_dims(self):
        out = []
        for n in range(self.max_degree + 1):
            e, o = self.modules[n].total_dims()
            out.append({"degree": n, "even": e, "odd": o})
        return out


def build_graded_algebra(algebra, parabolic, character_weight, max_degree):
    """Assemble O(G/P) for the character with differential
    character_weight, through the requested degree.

    The weight must define a character of the parabolic (vanish on the
    semisimple part of the Levi); every multiple n*weight with
    n <= max_degree must be dominant (detected by rank stabilization).
    """
    g = algebra
    if not isinstance(parabolic, ParabolicDatum) or parabolic.algebra is not g:
        raise SuperweylError("parabolic does not belong to the algebra")
    if not levi_vanishing(parabolic, character_weight):
        raise NonDominantCharacterError(
            "weight does not vanish on the Levi semisimple part; "
            "it defines no character of the parabolic")
    pieces = {}
    modules = {}
    for n in range(max_degree + 1):
        lam_n = character_weight * n
        mod = extract_irreducible(g, lam_n)
        if not mod.finite_dimensional:
            raise NonDominantCharacterError(
                "degree %d piece did not stabilize (%s): n*weight is not "
                "dominant" % (n, mod.status))
        sp = mod.space()
        basis = []
        for d in sp.verma.depths():
            basis.extend(mod.generators(d))
        pieces[n] = basis
        modules[n] = mod
    return EmbeddingAlgebra(g, parabolic, character_weight, max_degree,
                            pieces, modules)


class VeryAmpleVerdict:
    def __init__(self, very_ample, fail_degree, witness, dims):
        self.very_ample = very_ample
        self.fail_degree = fail_degree   # n where O_1 x O_n -> O_{n+1} failed
        self.witness = witness           # a section of O_{n+1} not reached
        self.dims = dims

    def __bool__(self):
        return self.very_ample

    def to_json(self):
        return {
            "veryAmple": self.very_ample,
            "failDegree": self.fail_degree,
            "dims": self.dims,
            "witness": self.witness.render() if self.witness else None,
        }


def _support_union(polys):
    out = set()
    for p in polys:
        out.update(p.data)
    return sorted(out)


def _vec(p, monomials):
    return [p.data.get(m, Fraction(0)) for m in monomials]


def is_very_ample(emb):
    """Degree-one generation: surjectivity of O_1 x O_n -> O_{n+1} for
    every n < max_degree, by exact rank over the big-cell monomials."""
    dims = emb.dims()
    for n in range(1, emb.max_degree):
        products = [multiply(f, p) for f in emb.pieces[1]
                    for p in emb.pieces[n]]
        target = emb.pieces[n + 1]
        monomials = _support_union(products + target)
        span = SpanBuilder(len(monomials))
        for q in products:
            span.add(_vec(q, monomials))
        for q in target:
            if not span.contains(_vec(q, monomials)):
                return VeryAmpleVerdict(False, n, q, dims)
        # and the products stay inside the degree-(n+1) piece
        tspan = SpanBuilder(len(monomials))
        for q in target:
            tspan.add(_vec(q, monomials))
        for q in products:
            if not tspan.contains(_vec(q, monomials)):
                raise SuperweylError(
                    "product escaped the degree-%d piece" % (n + 1))
    return VeryAmpleVerdict(True, None, None, dims)


class ClassicalSectionReport:
    def __init__(self, semi_invariant, weight_line, powers_distinct, failures):
        self.semi_invariant = semi_invariant
        self.weight_line = weight_line
        self.powers_distinct = powers_distinct
        self.failures = failures

    def passed(self):
        return self.semi_invariant and self.powers_distinct

    def to_json(self):
        return {
            "semiInvariant": self.semi_invariant,
            "weightLine": self.weight_line.to_json() if self.weight_line else None,
            "powersDistinct": self.powers_distinct,
            "failures": self.failures,
        }


def check_classical_section(emb, v):
    """Semi-invariance of a degree-one section under the parabolic:
    Cartan directions act by the character, nilpotent directions (the
    positive roots and the Levi lowering operators) annihilate; plus
    distinctness of the character powers (nonzero character)."""
    g = emb.algebra
    lam = emb.character_weight
    sp = section_space(g, lam, v.cap)
    failures = []
    if v.is_zero():
        return ClassicalSectionReport(False, None, False, ["zero section"])
    for k, h in enumerate(g.cartan):
        got = sp.partial(PBWElement.generator(g, h), v)
        want = v.scale(lam.coords[k])
        if got.data != want.data:
            failures.append("cartan direction %s does not act by the "
                            "character" % h)
    nilpotent = g.positive_labels() + emb.parabolic.levi_negative_labels()
    for lab in nilpotent:
        try:
            got = sp.partial(PBWElement.generator(g, lab), v)
        except TruncationError:
            failures.append("truncation too small for direction %s" % lab)
            continue
        if not got.is_zero():
            failures.append("nilpotent direction %s does not annihilate" % lab)
    semi = not failures
    powers = not lam.is_zero()
    if not powers:
        failures.append("character is trivial: powers collide")
    return ClassicalSectionReport(semi, lam if semi else None, powers,
                                  failures)


def semi_invariant_locus(emb):
    """Exact solution space of the semi-invariance conditions inside the
    degree-one piece (for the uniqueness property of the eigenline)."""
    g = emb.algebra
    lam = emb.character_weight
    basis = emb.pieces[1]
    if not basis:
        return []
    sp = section_space(g, lam, basis[0].cap)
    monomials = _support_union(basis)
    rows = []
    images = []
    nilpotent = g.positive_labels() + emb.parabolic.levi_negative_labels()
    for p in basis:
        img = []
        for k, h in enumerate(g.cartan):
            got = sp.partial(PBWElement.generator(g, h), p)
            delta = got - p.scale(lam.coords[k])
            img.append(delta)
        for lab in nilpotent:
            img.append(sp.partial(PBWElement.generator(g, lab), p))
        images.append(img)
    n_cond = len(images[0])
    cond_monos = set()
    for img in images:
        for q in img:
            cond_monos.update(q.data)
    cond_monos = sorted(cond_monos)
    # columns: coefficients over the O_1 basis; rows: condition x monomial
    mat = []
    for mono in cond_monos:
        for j in range(n_cond):
            mat.append([images[b][j].data.get(mono, Fraction(0))
                        for b in range(len(basis))])
    from .ratlinalg import nullspace
    kern = nullspace(mat, len(basis))
    out = []
    for coeffs in kern:
        q = SectionPolynomial(g, lam, basis[0].cap, {})
        for c, p in zip(coeffs, basis):
            q = q + p.scale(c)
        out.append(q)
    return out


def big_cell_cover_data(emb, t):
    """Weight components of the translate span of a classical section.

    The span of the full algebra action on t inside the degree-one piece
    is the family whose invertibility trivializes the bundle; at desk
    scale the no-common-zero condition is the visibility of the constant
    section in the span.  Returns the list of torus weights of a basis
    of the span.
    """
    report = check_classical_section(emb, t)
    if not report.passed():
        raise SuperweylError(
            "not a classical section: %s" % "; ".join(report.failures))
    g = emb.algebra
    lam = emb.character_weight
    sp = section_space(g, lam, t.cap)
    basis = emb.pieces[1]
    monomials = _support_union(basis + [t])
    span = SpanBuilder(len(monomials))
    span.add(_vec(t, monomials))
    frontier = [t]
    gens = [PBWElement.generator(g, lab) for lab in g.basis]
    reps = [t]
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
                vec = _vec(q, monomials)
                if span.contains(vec):
                    continue
                span.add(vec)
                nxt.append(q)
                reps.append(q)
        frontier = nxt
    o1 = SpanBuilder(len(monomials))
    for p in basis:
        o1.add(_vec(p, monomials))
    if not span.equals(o1):
        raise SuperweylError("translate span is smaller than the "
                             "degree-one piece")
    one = SectionPolynomial.constant(g, lam, t.cap)
    if not span.contains(_vec(one, monomials)):
        raise SuperweylError("constant section missing from the span: "
                             "common zero on the big cell")
    weights = []
    for p in reps:
        expos = {e for e in p.data}
        ws = set()
        for e in expos:
            w = lam
            for i, k in enumerate(e):
                if k:
                    w = w + k * g.weights[g.basis[i]]
            ws.add(w)
        weights.append(sorted(ws, key=lambda w: w.coords, reverse=True)[0])
    return weights


def grassmannian_1_1_setup():
    """The flag setup behind the 1|1-planes-in-2|2 Grassmannian: the
    general linear superalgebra in alternating block order with the
    stabilizer parabolic of the first 1|1 block."""
    from .superalgebra import build_algebra, parabolic_from_simples
    g = build_algebra("gl(1|1|1|1)")
    P = parabolic_from_simples(g, [0, 2])
    return g, P
