"""Contragredient Lie superalgebras from matrix realizations.

Supported families (over the rationals, distinguished Borel):

    gl(m|n)           general linear, also gl(b1|b2|...|bk) with blocks of
                      alternating parity (used for non-standard flag orders)
    sl(m|n)           supertraceless matrices; sl(n|n) is kept as an
                      extension family (degenerate Cartan matrix)
    A(m,n) = sl(m+1|n+1) with m != n
    B(0,n) = osp(1|2n)
    C(n)   = osp(2|2n-2), n >= 2

All structure constants are exact rationals.  The basis produced by
``build_algebra`` is ordered: negative root vectors (by height, then
lexicographically), then the Cartan subalgebra, then positive root
vectors.  PBW normal forms downstream rely on this order.
"""

import re
from fractions import Fraction
from functools import lru_cache

from .ratlinalg import frac, nullspace, SpanBuilder, solve

EVEN, ODD = 0, 1


class SuperweylError(Exception):
    pass


class UnsupportedFamilyError(SuperweylError):
    pass


class DegenerateRootSystemError(SuperweylError):
    pass


class NonDiagonalCartanError(SuperweylError):
    pass


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

class Weight:
    """Functional on the Cartan subalgebra, stored as its values on the
    chosen Cartan basis (the "dual basis" coordinates)."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(frac(c) for c in coords)

    def __add__(self, other):
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Weight(-a for a in self.coords)

    def __mul__(self, k):
        k = frac(k)
        return Weight(k * a for a in self.coords)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def eval_on(self, element_coords):
        """Value on a Cartan element given by its coefficient vector."""
        return sum((c * x for c, x in zip(element_coords, self.coords)),
                   Fraction(0))

    def __repr__(self):
        return "Weight(%s)" % (", ".join(str(c) for c in self.coords))

    def to_json(self):
        return [str(c.numerator) + "/" + str(c.denominator) for c in self.coords]

    @staticmethod
    def from_json(arr):
        return Weight(Fraction(s) for s in arr)

    @staticmethod
    def zero(rank):
        return Weight([0] * rank)


def lex_positive(coords):
    for c in coords:
        if c > 0:
            return True
        if c < 0:
            return False
    return False


# ---------------------------------------------------------------------------
# matrices over Fraction (dense lists of lists; sizes here are tiny)
# ---------------------------------------------------------------------------

def mat_zero(n):
    return [[Fraction(0)] * n for _ in range(n)]


def mat_unit(n, i, j):
    m = mat_zero(n)
    m[i][j] = Fraction(1)
    return m


def mat_mul(a, b):
    n = len(a)
    out = mat_zero(n)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(n):
                    if bk[j]:
                        oi[j] += aik * bk[j]
    return out


def mat_addsub(a, b, sign):
    return [[x + sign * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, k):
    return [[k * x for x in row] for row in a]


def mat_is_zero(a):
    return all(x == 0 for row in a for x in row)


def super_bracket_matrices(a, b, pa, pb):
    """[a,b] = ab - (-1)^{pa pb} ba in the matrix realization."""
    sign = Fraction(-1) if (pa and pb) else Fraction(1)
    return mat_addsub(mat_mul(a, b), mat_mul(b, a), -sign)


def supertrace(m, v_parities):
    return sum(((-1) ** p) * m[i][i] for i, p in enumerate(v_parities))


# ---------------------------------------------------------------------------
# the algebra object
# ---------------------------------------------------------------------------

class LieSuperalgebra:
    """Finite-dimensional Lie superalgebra with a fixed weight-adapted basis.

    bracket data is a total table over ordered basis labels; weights of root
    vectors are functionals on the Cartan in dual-basis coordinates.
    """

    def __init__(self, name, labels, parities, table, cartan_labels,
                 weights, positive_labels, matrices, v_parities,
                 contragredient, family, family_params):
        self.name = name
        self.basis = list(labels)
        self.index = {lab: i for i, lab in enumerate(labels)}
        self.parity = dict(parities)            # label -> 0/1
        self._table = table                      # (label,label) -> {label: Fraction}
        self.cartan = list(cartan_labels)
        self.weights = dict(weights)             # label -> Weight (zero for cartan)
        self.positive = set(positive_labels)     # labels of positive root vectors
        self.matrices = matrices                 # label -> realization matrix
        self.v_parities = v_parities             # parities of the realization space
        self.contragredient = contragredient
        self.family = family
        self.family_params = family_params
        self.rank = len(self.cartan)
        self._root_datum = None

    # -- basic structure ----------------------------------------------------

    def dim(self):
        d0 = sum(1 for b in self.basis if self.parity[b] == EVEN)
        return (d0, len(self.basis) - d0)

    def bracket(self, a, b):
        """Bracket of two basis labels, as {label: coeff}."""
        return self._table[(a, b)]

    def bracket_lin(self, xa, xb):
        """Bracket of two linear combinations {label: coeff}."""
        out = {}
        for a, ca in xa.items():
            for b, cb in xb.items():
                c = ca * cb
                for lab, coef in self._table[(a, b)].items():
                    v = out.get(lab, Fraction(0)) + c * coef
                    if v:
                        out[lab] = v
                    elif lab in out:
                        del out[lab]
        return out

    def negative_labels(self):
        return [b for b in self.basis
                if b not in self.cartan and b not in self.positive]

    def positive_labels(self):
        return [b for b in self.basis if b in self.positive]

    # -- invariants ----------------------------------------------------------

    def check_super_antisymmetry(self):
        for a in self.basis:
            for b in self.basis:
                sign = -1 if (self.parity[a] and self.parity[b]) else 1
                ab = self._table[(a, b)]
                ba = self._table[(b, a)]
                keys = set(ab) | set(ba)
                for k in keys:
                    if ab.get(k, Fraction(0)) != -sign * ba.get(k, Fraction(0)):
                        return False
        return True

    def check_super_jacobi(self):
        """(-1)^{|x||z|}[x,[y,z]] + cyclic = 0 over all basis triples."""
        for x in self.basis:
            px = self.parity[x]
            for y in self.basis:
                py = self.parity[y]
                for z in self.basis:
                    pz = self.parity[z]
                    acc = {}
                    for lead, (a, b, c) in (((-1) ** (px * pz), (x, y, z)),
                                            ((-1) ** (py * px), (y, z, x)),
                                            ((-1) ** (pz * py), (z, x, y))):
                        inner = self._table[(b, c)]
                        for lab, coef in inner.items():
                            for lab2, coef2 in self._table[(a, lab)].items():
                                v = acc.get(lab2, Fraction(0)) + lead * coef * coef2
                                if v:
                                    acc[lab2] = v
                                elif lab2 in acc:
                                    del acc[lab2]
                    if acc:
                        return False
        return True

    def check_cartan_diagonal(self):
        for h in self.cartan:
            for b in self.basis:
                res = self._table[(h, b)]
                if b in self.cartan:
                    if res:
                        return False
                    continue
                expect = self.weights[b].coords[self.cartan.index(h)]
                for lab, coef in res.items():
                    if lab != b:
                        return False
                if res.get(b, Fraction(0)) != expect:
                    return False
        return True

    # -- serialization --------------------------------------------------------

    def to_json(self):
        return {
            "name": self.name,
            "dim": {"even": self.dim()[0], "odd": self.dim()[1]},
            "cartanRank": self.rank,
            "basis": [
                {
                    "label": b,
                    "parity": "odd" if self.parity[b] else "even",
                    "role": ("cartan" if b in self.cartan
                             else "positive" if b in self.positive
                             else "negative"),
                    "weight": self.weights[b].to_json(),
                }
                for b in self.basis
            ],
            "contragredient": self.contragredient,
        }

    def __repr__(self):
        d0, d1 = self.dim()
        return "LieSuperalgebra(%s, dim %d|%d)" % (self.name, d0, d1)


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------

class Root:
    __slots__ = ("weight", "parity", "vector", "positive")

    def __init__(self, weight, parity, vector, positive):
        self.weight = weight
        self.parity = parity
        self.vector = vector        # basis label of the root vector
        self.positive = positive

    def __repr__(self):
        return "Root(%s, %s, %s)" % (
            self.weight, "odd" if self.parity else "even", self.vector)


class RootDatum:
    """Root system data for a weight-adapted basis.

    simple roots carry normalized coroots: even roots a(h)=2, odd
    non-isotropic a(h)=1, odd isotropic h=[e,f] unscaled.
    """

    def __init__(self, algebra, roots, simple_roots, simple_coroots,
                 simple_parities, heights):
        self.algebra = algebra
        self.roots = roots                       # list[Root]
        self.simple_roots = simple_roots         # list[Weight]
        self.simple_coroots = simple_coroots     # list of coeff-vectors over cartan basis
        self.simple_parities = simple_parities
        self.heights = heights                   # Weight -> int (all roots)
        self.by_weight = {r.weight: r for r in roots}
        self.positive_roots = [r for r in roots if r.positive]

    def vector_for(self, weight):
        return self.by_weight[weight].vector

    def weight_from_marks(self, marks):
        """Weight with given values on the simple coroots.

        For gl families the coroots do not span the Cartan dual; the final
        mark is then read as the value on the last diagonal Cartan element.
        """
        g = self.algebra
        rows = [list(h) for h in self.simple_coroots]
        if len(rows) < g.rank:
            extra = [Fraction(0)] * g.rank
            extra[g.rank - 1] = Fraction(1)
            rows.append(extra)
        if len(marks) != len(rows):
            raise ValueError(
                "expected %d weight coordinates for %s, got %d"
                % (len(rows), g.name, len(marks)))
        sol = solve(rows, [frac(m) for m in marks])
        if sol is None:
            raise ValueError("inconsistent weight marks")
        return Weight(sol)

    def marks(self, weight):
        return [weight.eval_on(h) for h in self.simple_coroots]

    def to_json(self):
        return {
            "algebra": self.algebra.name,
            "roots": [
                {
                    "weight": r.weight.to_json(),
                    "parity": "odd" if r.parity else "even",
                    "vector": r.vector,
                    "positive": r.positive,
                    "height": self.heights[r.weight],
                }
                for r in self.roots
            ],
            "simpleRoots": [w.to_json() for w in self.simple_roots],
        }


def root_datum(g):
    """Root system of a weight-adapted algebra.

    Raises NonDiagonalCartanError if some basis vector is not a simultaneous
    ad-eigenvector, and DegenerateRootSystemError if a root weight carries
    both a raising and a lowering vector (e.g. sl(2|2), whose Cartan is too
    small to separate them; use gl(2|2) instead).
    """
    if g._root_datum is not None:
        return g._root_datum
    roots = []
    seen = {}
    for b in g.basis:
        if b in g.cartan:
            continue
        # verify the eigenvector property against the bracket table
        for k, h in enumerate(g.cartan):
            res = g.bracket(h, b)
            expect = g.weights[b].coords[k]
            if set(res) - {b} or res.get(b, Fraction(0)) != expect:
                raise NonDiagonalCartanError(
                    "cartan action is not diagonal on basis vector %r" % b)
        w = g.weights[b]
        if w.is_zero():
            raise NonDiagonalCartanError(
                "zero-weight vector %r outside the Cartan" % b)
        pos = b in g.positive
        if w in seen and seen[w] != pos:
            raise DegenerateRootSystemError(
                "root %s carries both raising and lowering vectors "
                "(degenerate Cartan, as in sl(n|n)); use the gl realization"
                % (w,))
        if w in seen:
            raise DegenerateRootSystemError("root multiplicity > 1 at %s" % (w,))
        seen[w] = pos
        roots.append(Root(w, g.parity[b], b, pos))

    pos_weights = [r.weight for r in roots if r.positive]
    pos_set = set(pos_weights)
    for r in roots:
        if not r.positive and (-r.weight) not in pos_set:
            raise DegenerateRootSystemError(
                "negative root %s without positive partner" % (r.weight,))

    sums = set()
    for a in pos_weights:
        for b in pos_weights:
            sums.add(a + b)
    simple = [w for w in pos_weights if w not in sums]
    simple.sort(key=lambda w: w.coords, reverse=True)

    # heights: expansion of each positive root over the simple roots
    rows = [[w.coords[k] for w in simple] for k in range(g.rank)]
    heights = {}
    for w in pos_weights:
        coeffs = solve(rows, list(w.coords))
        if coeffs is None:
            raise DegenerateRootSystemError(
                "root %s is not a sum of simple roots" % (w,))
        h = sum(coeffs)
        if h.denominator != 1:
            raise DegenerateRootSystemError("non-integral height for %s" % (w,))
        heights[w] = int(h)
        heights[-w] = -int(h)

    simple_coroots = []
    simple_parities = []
    by_weight = {r.weight: r for r in roots}
    for a in simple:
        e = by_weight[a].vector
        f = by_weight[-a].vector
        h_raw = g.bracket(e, f)
        coeffs = [h_raw.get(h, Fraction(0)) for h in g.cartan]
        if set(h_raw) - set(g.cartan):
            raise DegenerateRootSystemError("[e,f] not in the Cartan for %s" % (a,))
        val = a.eval_on(coeffs)
        par = by_weight[a].parity
        if par == EVEN:
            coeffs = [2 * c / val for c in coeffs]
        elif val != 0:
            coeffs = [c / val for c in coeffs]
        simple_coroots.append(tuple(coeffs))
        simple_parities.append(par)

    datum = RootDatum(g, roots, simple, simple_coroots, simple_parities, heights)
    g._root_datum = datum
    return datum


# ---------------------------------------------------------------------------
# construction from a matrix basis
# ---------------------------------------------------------------------------

def _expand_in_basis(mats, labels, target):
    n = len(target)
    rows = []
    for i in range(n):
        for j in range(n):
            rows.append([m[i][j] for m in mats])
    flat = [target[i][j] for i in range(n) for j in range(n)]
    coeffs = solve(rows, flat)
    if coeffs is None:
        raise SuperweylError("matrix outside the spanned algebra")
    return {lab: c for lab, c in zip(labels, coeffs) if c != 0}


def _algebra_from_matrix_basis(name, raw, cartan_raw, v_parities,
                               contragredient, family, family_params,
                               root_namer=None):
    """Assemble a LieSuperalgebra from weight vectors given as matrices.

    raw: list of (matrix, parity) for root vectors; cartan_raw: list of
    matrices spanning the Cartan (acting diagonally in the realization).
    """
    ncart = len(cartan_raw)

    entries = []  # (weight, parity, matrix, positive)
    for m, p in raw:
        coords = []
        for h in cartan_raw:
            br = super_bracket_matrices(h, m, EVEN, p)
            c = None
            for i in range(len(m)):
                for j in range(len(m)):
                    if m[i][j]:
                        c = br[i][j] / m[i][j]
                        break
                if c is not None:
                    break
            if not mat_is_zero(mat_addsub(br, mat_scale(m, c), -1)):
                raise NonDiagonalCartanError(
                    "constructed vector is not an ad-eigenvector")
            coords.append(c)
        w = Weight(coords)
        upper = all(m[i][j] == 0 for i in range(len(m)) for j in range(len(m))
                    if i >= j)
        lower = all(m[i][j] == 0 for i in range(len(m)) for j in range(len(m))
                    if i <= j)
        if not (upper or lower):
            raise DegenerateRootSystemError(
                "root vector neither upper nor lower triangular")
        entries.append((w, p, m, upper))

    # heights for ordering: expansion over the simple weights
    pos_w = [w for (w, _, _, up) in entries if up]
    sums = {a + b for a in pos_w for b in pos_w}
    simple = sorted([w for w in pos_w if w not in sums],
                    key=lambda w: w.coords, reverse=True)
    rows = [[w.coords[k] for w in simple] for k in range(ncart)]
    ht = {}
    for w in pos_w:
        coeffs = solve(rows, list(w.coords))
        if coeffs is None:
            # degenerate families (sl(n|n)): fall back to coordinate sum
            ht[w] = sum(w.coords)
        else:
            ht[w] = sum(coeffs)

    def root_body(w_pos):
        if root_namer is not None:
            return root_namer(w_pos)
        coeffs = solve(rows, list(w_pos.coords)) if rows else None
        if coeffs is None:
            return ",".join(str(c) for c in w_pos.coords)
        terms = []
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            base = "a%d" % (i + 1)
            terms.append(base if c == 1 else "%s%s" % (c, base))
        return "+".join(terms) if terms else "0"

    # negatives ordered by height ascending (deepest first), then lex
    negs = sorted([en for en in entries if not en[3]],
                  key=lambda en: (-ht[-en[0]], [c for c in en[0].coords]))
    poss = sorted([en for en in entries if en[3]],
                  key=lambda en: (ht[en[0]], [c for c in en[0].coords]))

    labels, parities, weights, matrices = [], {}, {}, {}
    positive_labels = set()
    used = set()

    def add(lab, p, w, m, pos):
        base, k = lab, 2
        while lab in used:
            lab = "%s#%d" % (base, k)
            k += 1
        used.add(lab)
        labels.append(lab)
        parities[lab] = p
        weights[lab] = w
        matrices[lab] = m
        if pos:
            positive_labels.add(lab)

    for (w, p, m, _) in negs:
        add("f[%s]" % root_body(-w), p, w, m, False)
    for k, hm in enumerate(cartan_raw):
        add("h%d" % (k + 1), EVEN, Weight.zero(ncart), hm, False)
    for (w, p, m, _) in poss:
        add("e[%s]" % root_body(w), p, w, m, True)

    cartan_labels = ["h%d" % (k + 1) for k in range(ncart)]

    mats = [matrices[lab] for lab in labels]
    table = {}
    for a in labels:
        pa = parities[a]
        for b in labels:
            br = super_bracket_matrices(matrices[a], matrices[b], pa, parities[b])
            table[(a, b)] = (_expand_in_basis(mats, labels, br)
                             if not mat_is_zero(br) else {})

    return LieSuperalgebra(name, labels, parities, table, cartan_labels,
                           weights, positive_labels, matrices, v_parities,
                           contragredient, family, family_params)


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

def _build_gl_blocks(blocks, name=None, contragredient=False):
    """gl with consecutive blocks of alternating parity starting even."""
    v_par = []
    for k, size in enumerate(blocks):
        v_par.extend([k % 2] * size)
    n = len(v_par)
    cartan_raw = [mat_unit(n, i, i) for i in range(n)]
    raw = []
    for i in range(n):
        for j in range(n):
            if i != j:
                raw.append((mat_unit(n, i, j), (v_par[i] + v_par[j]) % 2))
    return _algebra_from_matrix_basis(
        name or "gl(%s)" % "|".join(str(b) for b in blocks),
        raw, cartan_raw, v_par, contragredient, "gl", tuple(blocks))


def _build_sl(m, n, name=None, contragredient=False):
    v_par = [EVEN] * m + [ODD] * n
    N = m + n
    cartan_raw = []
    for i in range(N - 1):
        h = mat_zero(N)
        h[i][i] = Fraction(1)
        sign = Fraction(-1) if (v_par[i] == v_par[i + 1]) else Fraction(1)
        h[i + 1][i + 1] = sign
        cartan_raw.append(h)
    raw = []
    for i in range(N):
        for j in range(N):
            if i != j:
                raw.append((mat_unit(N, i, j), (v_par[i] + v_par[j]) % 2))
    return _algebra_from_matrix_basis(
        name or "sl(%d|%d)" % (m, n), raw, cartan_raw, v_par,
        contragredient, "sl", (m, n))


def _osp_kernel_basis(v_par, form):
    """Weight-homogeneous basis of osp(V, form) off-diagonal part.

    form is the Gram matrix of an even supersymmetric bilinear form; the
    conditions F(Xu,v) + (-1)^{|X||u|} F(u,Xv) = 0 are solved exactly.
    """
    n = len(v_par)
    out = []
    for p in (EVEN, ODD):
        vars_ = [(c, a) for c in range(n) for a in range(n)
                 if (v_par[c] + v_par[a]) % 2 == p]
        vidx = {v: k for k, v in enumerate(vars_)}
        rows = []
        for a in range(n):
            for b in range(n):
                row = [Fraction(0)] * len(vars_)
                nonzero = False
                for c in range(n):
                    if form[c][b] and (c, a) in vidx:
                        row[vidx[(c, a)]] += form[c][b]
                        nonzero = True
                sign = Fraction(-1) if (p and v_par[a]) else Fraction(1)
                for c in range(n):
                    if form[a][c] and (c, b) in vidx:
                        row[vidx[(c, b)]] += sign * form[a][c]
                        nonzero = True
                if nonzero:
                    rows.append(row)
        for vec in nullspace(rows, len(vars_)):
            m = mat_zero(n)
            for (c, a), k in vidx.items():
                m[c][a] = vec[k]
            off_diag = any(m[i][j] for i in range(n) for j in range(n) if i != j)
            diag = any(m[i][i] for i in range(n))
            if off_diag and diag:
                raise SuperweylError("osp kernel vector mixes weights")
            if off_diag:
                out.append((m, p))
    return out


def _build_osp_b(n, name=None):
    """B(0,n) = osp(1|2n).  V basis: f_1..f_n, v0, g_n..g_1 (weights
    delta_1..delta_n, 0, -delta_n..-delta_1)."""
    dim = 1 + 2 * n
    v_par = [ODD] * n + [EVEN] + [ODD] * n
    pos_f = list(range(n))
    pos_v0 = n
    pos_g = [n + 1 + (n - 1 - i) for i in range(n)]  # g_i position
    form = mat_zero(dim)
    form[pos_v0][pos_v0] = Fraction(1)
    for i in range(n):
        form[pos_f[i]][pos_g[i]] = Fraction(1)
        form[pos_g[i]][pos_f[i]] = Fraction(-1)
    cartan_raw = []
    for k in range(n):
        h = mat_zero(dim)
        h[pos_f[k]][pos_f[k]] = Fraction(1)
        h[pos_g[k]][pos_g[k]] = Fraction(-1)
        cartan_raw.append(h)
    raw = []
    for m, p in _osp_kernel_basis(v_par, form):
        if all(m[i][i] == 0 for i in range(dim)):
            raw.append((m, p))
    return _algebra_from_matrix_basis(
        name or "B(0,%d)" % n, raw, cartan_raw, v_par, True, "B", (0, n))


def _build_osp_c(n, name=None):
    """C(n) = osp(2|2n-2).  V basis: u+, f_1..f_{n-1}, g_{n-1}..g_1, u-."""
    q = n - 1
    dim = 2 + 2 * q
    v_par = [EVEN] + [ODD] * (2 * q) + [EVEN]
    pos_up, pos_um = 0, dim - 1
    pos_f = [1 + i for i in range(q)]
    pos_g = [1 + q + (q - 1 - i) for i in range(q)]
    form = mat_zero(dim)
    form[pos_up][pos_um] = Fraction(1)
    form[pos_um][pos_up] = Fraction(1)
    for i in range(q):
        form[pos_f[i]][pos_g[i]] = Fraction(1)
        form[pos_g[i]][pos_f[i]] = Fraction(-1)
    cartan_raw = []
    h = mat_zero(dim)
    h[pos_up][pos_up] = Fraction(1)
    h[pos_um][pos_um] = Fraction(-1)
    cartan_raw.append(h)
    for k in range(q):
        h = mat_zero(dim)
        h[pos_f[k]][pos_f[k]] = Fraction(1)
        h[pos_g[k]][pos_g[k]] = Fraction(-1)
        cartan_raw.append(h)
    raw = []
    for m, p in _osp_kernel_basis(v_par, form):
        if all(m[i][i] == 0 for i in range(dim)):
            raw.append((m, p))
    return _algebra_from_matrix_basis(
        name or "C(%d)" % n, raw, cartan_raw, v_par, True, "C", (n,))


_GL_RE = re.compile(r"^gl\((\d+(?:\|\d+)+)\)$")
_SL_RE = re.compile(r"^sl\((\d+)\|(\d+)\)$")
_A_RE = re.compile(r"^A\((\d+),(\d+)\)$")
_B_RE = re.compile(r"^B\(0,(\d+)\)$")
_C_RE = re.compile(r"^C\((\d+)\)$")


@lru_cache(maxsize=None)
def build_algebra(family):
    """Construct a supported algebra from its family label.

    Labels: "gl(m|n)" (more blocks allowed, e.g. "gl(1|1|1|1)"),
    "sl(m|n)", "A(m,n)" with m != n, "B(0,n)", "C(n)" with n >= 2.
    """
    family = family.strip()
    m = _GL_RE.match(family)
    if m:
        blocks = [int(b) for b in m.group(1).split("|")]
        if any(b < 1 for b in blocks):
            raise UnsupportedFamilyError("empty block in %r" % family)
        return _build_gl_blocks(blocks, name=family)
    m = _SL_RE.match(family)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        if a + b < 2:
            raise UnsupportedFamilyError("sl needs total size >= 2")
        return _build_sl(a, b, name=family)
    m = _A_RE.match(family)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        if a == b:
            raise UnsupportedFamilyError(
                "A(m,m) is excluded (the contragredient list requires m != n); "
                "use the extension label sl(%d|%d) or gl(%d|%d)"
                % (a + 1, a + 1, a + 1, a + 1))
        return _build_sl(a + 1, b + 1, name=family, contragredient=True)
    m = _B_RE.match(family)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise UnsupportedFamilyError("B(0,n) needs n >= 1")
        return _build_osp_b(n)
    m = _C_RE.match(family)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise UnsupportedFamilyError("C(n) needs n >= 2")
        return _build_osp_c(n)
    raise UnsupportedFamilyError("unsupported family label %r" % family)


# ---------------------------------------------------------------------------
# parabolic subalgebras
# ---------------------------------------------------------------------------

class ParabolicDatum:
    """A parabolic p containing the Borel b = h + n+, given by the included
    basis labels."""

    def __init__(self, algebra, labels):
        self.algebra = algebra
        self.labels = list(labels)
        lset = set(labels)
        for h in algebra.cartan:
            if h not in lset:
                raise SuperweylError("parabolic must contain the Cartan")
        for b in algebra.positive:
            if b not in lset:
                raise SuperweylError("parabolic must contain all of n+")
        for a in self.labels:
            for b in self.labels:
                for lab in algebra.bracket(a, b):
                    if lab not in lset:
                        raise SuperweylError(
                            "parabolic not closed under bracket: [%s,%s] -> %s"
                            % (a, b, lab))

    def levi_negative_labels(self):
        g = self.algebra
        return [b for b in self.labels
                if b not in g.cartan and b not in g.positive]

    def is_borel(self):
        return not self.levi_negative_labels()


def borel(g):
    return ParabolicDatum(g, g.cartan + g.positive_labels())


def parabolic_from_simples(g, levi_simple_indices):
    """Parabolic whose Levi part is generated by the given simple roots
    (indices into root_datum(g).simple_roots)."""
    datum = root_datum(g)
    chosen = [datum.simple_roots[i] for i in levi_simple_indices]
    rows = [[w.coords[k] for w in datum.simple_roots] for k in range(g.rank)]
    keep = []
    for r in datum.positive_roots:
        coeffs = solve(rows, list(r.weight.coords))
        if all(c == 0 for i, c in enumerate(coeffs)
               if datum.simple_roots[i] not in chosen):
            keep.append(datum.by_weight[-r.weight].vector)
    return ParabolicDatum(g, g.cartan + g.positive_labels() + keep)


def levi_vanishing(parabolic, weight):
    """True when the weight kills [l,l] of the Levi, i.e. defines a
    character of the parabolic."""
    g = parabolic.algebra
    for f in parabolic.levi_negative_labels():
        w = g.weights[f]
        e = root_datum(g).by_weight[-w].vector
        h_raw = g.bracket(e, f)
        coeffs = [h_raw.get(h, Fraction(0)) for h in g.cartan]
        if weight.eval_on(coeffs) != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# SHCP representations (torus + Lie algebra data)
# ---------------------------------------------------------------------------

class SHCPRepresentation:
    """Finite-dimensional representation in SHCP form.

    The group part is carried by the torus only: each basis vector has a
    torus weight, acted on symbolically through its character.  rho gives
    the Lie superalgebra action as matrices over the rationals.
    """

    def __init__(self, algebra, basis_parities, basis_weights, rho):
        self.algebra = algebra
        self.basis_parities = list(basis_parities)
        self.basis_weights = list(basis_weights)
        self.rho = dict(rho)  # label -> matrix

    def dims(self):
        d0 = sum(1 for p in self.basis_parities if p == EVEN)
        return (d0, len(self.basis_parities) - d0)

    def check(self):
        g = self.algebra
        n = len(self.basis_parities)
        # parity: rho(x) maps V_i into V_{i+|x|}
        for lab, m in self.rho.items():
            p = g.parity[lab]
            for i in range(n):
                for j in range(n):
                    if m[i][j] and (self.basis_parities[i]
                                    != (self.basis_parities[j] + p) % 2):
                        return False
        # morphism on all pairs
        for a in g.basis:
            for b in g.basis:
                lhs = mat_zero(n)
                for lab, coef in g.bracket(a, b).items():
                    lhs = mat_addsub(lhs, mat_scale(self.rho[lab], coef), 1)
                rhs = super_bracket_matrices(self.rho[a], self.rho[b],
                                             g.parity[a], g.parity[b])
                if not mat_is_zero(mat_addsub(lhs, rhs, -1)):
                    return False
        # torus compatibility: rho on the cartan is diagonal with the weights
        for k, h in enumerate(g.cartan):
            m = self.rho[h]
            for i in range(n):
                for j in range(n):
                    expect = self.basis_weights[i].coords[k] if i == j else 0
                    if m[i][j] != expect:
                        return False
        return True

    def weight_multiset(self):
        """weight -> (even multiplicity, odd multiplicity)."""
        out = {}
        for w, p in zip(self.basis_weights, self.basis_parities):
            e, o = out.get(w, (0, 0))
            out[w] = (e + 1, o) if p == EVEN else (e, o + 1)
        return out


def defining_representation(g):
    n = len(g.v_parities)
    weights = []
    for a in range(n):
        weights.append(Weight([g.matrices[h][a][a] for h in g.cartan]))
    return SHCPRepresentation(g, list(g.v_parities), weights,
                              {lab: g.matrices[lab] for lab in g.basis})


def adjoint_representation(g):
    """ad as explicit matrices over the ordered basis (independent oracle
    for small character computations)."""
    n = len(g.basis)
    rho = {}
    for lab in g.basis:
        m = mat_zero(n)
        for j, b in enumerate(g.basis):
            for out_lab, coef in g.bracket(lab, b).items():
                m[g.index[out_lab]][j] = coef
        rho[lab] = m
    parities = [g.parity[b] for b in g.basis]
    weights = [g.weights[b] for b in g.basis]
    return SHCPRepresentation(g, parities, weights, rho)


def trivial_representation(g):
    return SHCPRepresentation(g, [EVEN], [Weight.zero(g.rank)],
                              {lab: mat_zero(1) for lab in g.basis})


def super_transpose(m, row_parities, col_parities, p):
    """(A^{sT})_{ji} = (-1)^{p * |i|} A_{ij} for homogeneous A of parity p."""
    n = len(m)
    out = mat_zero(n)
    for i in range(n):
        for j in range(n):
            if m[i][j]:
                sign = Fraction(-1) if (p and row_parities[i]) else Fraction(1)
                out[j][i] = sign * m[i][j]
    return out


def contragredient_dual(rep):
    """Dual SHCP representation: rho_c(X) = -rho(X)^{sT}, torus weights
    negated."""
    g = rep.algebra
    pars = rep.basis_parities
    rho_c = {}
    for lab, m in rep.rho.items():
        p = g.parity[lab]
        rho_c[lab] = mat_scale(super_transpose(m, pars, pars, p), Fraction(-1))
    weights = [-w for w in rep.basis_weights]
    return SHCPRepresentation(g, list(pars), weights, rho_c)


def double_dual_canonical(rep):
    """Double dual pulled back through the canonical iso V -> V**
    (v -> (-1)^{|v|} ev_v); equals the original representation."""
    dd = contragredient_dual(contragredient_dual(rep))
    n = len(dd.basis_parities)
    rho = {}
    for lab, m in dd.rho.items():
        out = mat_zero(n)
        for i in range(n):
            for j in range(n):
                if m[i][j]:
                    s = (-1) ** (dd.basis_parities[i] + dd.basis_parities[j])
                    out[i][j] = s * m[i][j]
        rho[lab] = out
    return SHCPRepresentation(rep.algebra, dd.basis_parities,
                              dd.basis_weights, rho)
