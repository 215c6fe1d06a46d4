"""Polynomial sections on the big cell: the module P-hat.

A SectionPolynomial is a supercommutative polynomial in the exponential
coordinates t_a, one per negative root vector, together with the weight
of the line bundle it is a section of.  Monomials are graded by the
positive-root semigroup: t^r sits at depth d = -sum r_a * a and carries
the torus weight lambda + sum r_a * a (a running over negative roots).

Two module structures live here:

* partial_action - the U(g)-action dual to the Verma module through the
  contravariant form (the one whose Cartan action realizes the torus
  weights above, and which generates the irreducible submodule from the
  constant section).  Matrices are signed transposes of the Verma action
  composed with the transpose antiautomorphism.

* ell_action - the geometric action of the supergroup by left
  translation, computed exactly on the formal big cell.

The two are tied together by the matrix-coefficient map theta:
theta(m) = B(m, exp(sum t_a X_a) v), which intertwines the Verma action
with partial_action and identifies the image with the span of
partial(U(n-)) applied to the constant section.
"""

from fractions import Fraction

from .superalgebra import (Weight, SuperweylError, root_datum)
from .superpoly import SuperPoly
from .pbw import PBWElement, TruncationError, word_parity, _sigma_table
from .verma import VermaModule
from .ratlinalg import solve, row_echelon as _rref
from .bch import BigCellEngine, SPBW, spbw_exp, exp_action_on_highest_vector


def _mat_mul(a, b):
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            x = a[i][t]
            if x:
                row_b = b[t]
                row_o = out[i]
                for j in range(m):
                    if row_b[j]:
                        row_o[j] += x * row_b[j]
    return out


def _taylor_row(g, word, expos, cap):
    """Raw Taylor coefficients of the hatted coordinate monomials against
    one Verma word: value of the iterated right derivative at 1_G."""
    labels = [g.basis[i] for i in word]
    params = [("s%d" % (k + 1), g.parity[lab]) for k, lab in enumerate(labels)]
    eng = BigCellEngine(g, cap, params=params)
    gamma = SPBW.one(g, eng.ring)
    for k, lab in enumerate(labels):
        gamma = gamma * eng.param_exp(lab, "s%d" % (k + 1))
    nu, eta, _ = eng.factor(gamma)
    if any(not c.is_zero() for c in eta):
        raise SuperweylError("negative letters produced a Cartan factor")
    row = []
    for expo in expos:
        val = eng.substitute_coords({expo: Fraction(1)}, nu)
        for k in range(len(labels), 0, -1):
            val = val.extract("s%d" % k)
        row.append(val.constant_coefficient())
    return row


class SectionPolynomial:
    """Element of P-hat: {exponent tuple over negative coordinates:
    coefficient}, attached weight, truncation height."""

    __slots__ = ("algebra", "weight", "cap", "data")

    def __init__(self, algebra, weight, cap, data=None):
        self.algebra = algebra
        self.weight = weight
        self.cap = cap
        self.data = {} if data is None else data

    @staticmethod
    def constant(algebra, weight, cap, value=1):
        n = len(algebra.negative_labels())
        v = Fraction(value)
        return SectionPolynomial(algebra, weight, cap,
                                 {(0,) * n: v} if v else {})

    @staticmethod
    def coordinate(algebra, weight, cap, neg_index):
        n = len(algebra.negative_labels())
        expo = [0] * n
        expo[neg_index] = 1
        return SectionPolynomial(algebra, weight, cap,
                                 {tuple(expo): Fraction(1)})

    def space(self):
        return section_space(self.algebra, self.weight, self.cap)

    def is_zero(self):
        return not self.data

    def __eq__(self, other):
        return (isinstance(other, SectionPolynomial)
                and self.algebra is other.algebra
                and self.weight == other.weight
                and self.data == other.data)

    def __add__(self, other):
        if (other.algebra is not self.algebra or other.weight != self.weight
                or other.cap != self.cap):
            raise SuperweylError("sections live on different bundles")
        out = dict(self.data)
        for m, c in other.data.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return SectionPolynomial(self.algebra, self.weight, self.cap, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        k = Fraction(k)
        if not k:
            return SectionPolynomial(self.algebra, self.weight, self.cap, {})
        return SectionPolynomial(self.algebra, self.weight, self.cap,
                                 {m: k * c for m, c in self.data.items()})

    def __neg__(self):
        return self.scale(-1)

    def parity(self):
        sp = self.space()
        ps = {sp.ring.monomial_parity(m) for m in self.data}
        if len(ps) > 1:
            raise SuperweylError("inhomogeneous section has no parity")
        return ps.pop() if ps else 0

    def monomials(self):
        return sorted(self.data)

    def coefficient_vector(self, monomial_order):
        return [self.data.get(m, Fraction(0)) for m in monomial_order]

    def render(self):
        sp = self.space()
        return SuperPoly(sp.ring, dict(self.data)).render()

    def __repr__(self):
        return "Section(%s @ %s)" % (self.render(),
                                     "(" + ",".join(str(c) for c in
                                                    self.weight.coords) + ")")


def multiply(p, q):
    """Supercommutative product; the attached weights add and the
    truncation heights add, so no term is ever lost."""
    if p.algebra is not q.algebra:
        raise SuperweylError("sections over different algebras")
    g = p.algebra
    cap = p.cap + q.cap
    target = section_space(g, p.weight + q.weight, cap)
    ring = target.ring
    out = target.zero()
    a = SuperPoly(ring, dict(p.data))
    b = SuperPoly(ring, dict(q.data))
    prod = a * b
    return SectionPolynomial(g, p.weight + q.weight, cap, dict(prod.data))


def torus_weight(p_or_expo, lam, algebra=None):
    """Torus weight lambda + sum r_a * a of a monomial (a in Delta-)."""
    if isinstance(p_or_expo, SectionPolynomial):
        g = p_or_expo.algebra
        expos = set(p_or_expo.data)
        if len(expos) != 1:
            raise SuperweylError("torus weight of a non-monomial")
        expo = expos.pop()
        lam = p_or_expo.weight if lam is None else lam
    else:
        g = algebra
        expo = p_or_expo
    w = lam
    for i, e in enumerate(expo):
        if e:
            w = w + e * g.weights[g.basis[i]]
    return w


# ---------------------------------------------------------------------------
# the section space: basis bookkeeping plus both actions
# ---------------------------------------------------------------------------

_SPACES = {}


def section_space(algebra, weight, cap):
    key = (algebra.name, weight.coords, cap)
    sp = _SPACES.get(key)
    if sp is None:
        sp = SectionSpace(algebra, weight, cap)
        _SPACES[key] = sp
    return sp


class SectionSpace:
    def __init__(self, algebra, weight, cap):
        self.algebra = algebra
        self.weight = weight
        self.cap = cap
        self.verma = VermaModule(algebra, weight, cap)
        self.n_neg = len(algebra.negative_labels())
        eng = BigCellEngine(algebra, cap)
        self.ring = eng.ring
        self._theta_exp = None
        self._datum = root_datum(algebra)

    # words of the Verma basis <-> exponent tuples
    def expo_of_word(self, word):
        expo = [0] * self.n_neg
        for i in word:
            expo[i] += 1
        return tuple(expo)

    def word_of_expo(self, expo):
        word = []
        for i, e in enumerate(expo):
            word.extend([i] * e)
        return tuple(word)

    def zero(self):
        return SectionPolynomial(self.algebra, self.weight, self.cap, {})

    def one(self):
        return SectionPolynomial.constant(self.algebra, self.weight, self.cap)

    def monomial_basis(self, depth):
        words = self.verma.spaces.get(depth, [])
        return [self.expo_of_word(w) for w in words]

    def depth_of_expo(self, expo):
        return self.verma.word_depth(self.word_of_expo(expo))

    def element(self, data):
        return SectionPolynomial(self.algebra, self.weight, self.cap,
                                 dict(data))

    # -- the dual (partial) action ------------------------------------------------

    def _depth_info(self, target):
        """(exists, height) of a candidate depth in D+."""
        rows = [[w.coords[k] for w in self._datum.simple_roots]
                for k in range(self.algebra.rank)]
        coeffs = solve(rows, list(target.coords))
        if coeffs is None:
            return False, None
        if any(c < 0 or c.denominator != 1 for c in coeffs):
            return False, None
        return True, int(sum(coeffs))

    def _taylor_matrix(self, depth):
        """tau(d)[word][expo] = Taylor coefficient of the hatted monomial
        against the Verma word, together with its inverse.

        This is the exact change of basis between the exponential
        coordinate monomials and the dual basis of the Verma monomials;
        it is weight-independent (all letters are negative) and cached on
        the algebra.
        """
        g = self.algebra
        if not hasattr(g, "_taylor_mats"):
            g._taylor_mats = {}
        key = (self.cap, depth.coords)
        got = g._taylor_mats.get(key)
        if got is not None:
            return got
        words = self.verma.spaces[depth]
        expos = [self.expo_of_word(w) for w in words]
        tau = [_taylor_row(g, w, expos, self.cap) for w in words]
        n = len(words)
        aug, pivots = _rref([list(row) + [Fraction(1) if i == j else Fraction(0)
                                          for j in range(n)]
                             for i, row in enumerate(tau)])
        if pivots != list(range(n)):
            raise SuperweylError("Taylor matrix is singular at depth %r"
                                 % (depth,))
        tau_inv = [row[n:] for row in aug]
        got = (tau, tau_inv)
        g._taylor_mats[key] = got
        return got

    def _partial_matrix(self, label, depth):
        """Matrix of partial_action(label) from the weight space at the
        given depth into its target, in geometric monomial coordinates:
        tau(d')^-1 . (signed transpose of act(sigma(label))) . tau(d).

        Returns (target_depth, matrix) or None when the target space is
        empty; raises TruncationError when the target escapes the cap.
        """
        g = self.algebra
        if not hasattr(self, "_partial_cache"):
            self._partial_cache = {}
        key = (label, depth.coords)
        if key in self._partial_cache:
            return self._partial_cache[key]
        M = self.verma
        words = M.spaces[depth]
        if label in g.cartan:
            val = (self.weight - depth).coords[g.cartan.index(label)]
            mat = [[val if i == j else Fraction(0) for j in range(len(words))]
                   for i in range(len(words))]
            out = (depth, mat)
            self._partial_cache[key] = out
            return out
        sigma = _sigma_table(g)
        sig_lab, sig_c = sigma[label]
        shift = -g.weights[label]  # f[b] -> +b ; e[b] -> -b
        target = depth + shift
        words2 = M.spaces.get(target)
        if words2 is None:
            exists, h = self._depth_info(target)
            if exists and h > self.cap:
                raise TruncationError(
                    "partial action escapes height %d" % self.cap)
            self._partial_cache[key] = None
            return None
        p_lab = g.parity[label]
        # plain dual-basis matrix: D[w'][w] = sign(w) c [act(sig)(w')]_w
        D = [[Fraction(0)] * len(words) for _ in range(len(words2))]
        for jprime, w2 in enumerate(words2):
            res = M.act(sig_lab, {w2: Fraction(1)})
            for j, w in enumerate(words):
                coef = res.get(w)
                if coef:
                    sign = (Fraction(-1)
                            if (p_lab and word_parity(g, w)) else Fraction(1))
                    D[jprime][j] = sign * sig_c * coef
        tau_s, _ = self._taylor_matrix(depth)
        _, tau_t_inv = self._taylor_matrix(target)
        mat = _mat_mul(_mat_mul(tau_t_inv, D), tau_s)
        out = (target, mat)
        self._partial_cache[key] = out
        return out

    def partial_label(self, label, p):
        """partial_action of a single basis element."""
        g = self.algebra
        by_depth = {}
        for expo, c in p.data.items():
            d = self.depth_of_expo(expo)
            by_depth.setdefault(d, {})[expo] = c
        out = {}
        for d, part in by_depth.items():
            res = self._partial_matrix(label, d)
            if res is None:
                continue
            target, mat = res
            expos_src = self.monomial_basis(d)
            expos_tgt = self.monomial_basis(target)
            vec = [part.get(e, Fraction(0)) for e in expos_src]
            for i, e2 in enumerate(expos_tgt):
                v = sum((mat[i][j] * vec[j] for j in range(len(vec))),
                        Fraction(0))
                if v:
                    out[e2] = out.get(e2, Fraction(0)) + v
                    if not out[e2]:
                        del out[e2]
        return SectionPolynomial(g, self.weight, self.cap, out)

    def partial(self, u, p):
        """partial_action of a PBWElement: letters compose left to right,
        innermost (rightmost) first."""
        g = self.algebra
        total = self.zero()
        for word, c in u.data.items():
            cur = p.scale(c)
            for i in reversed(word):
                cur = self.partial_label(g.basis[i], cur)
                if cur.is_zero():
                    break
            total = total + cur
        return total

    # -- the geometric (left translation) action -----------------------------------

    def _left_factor(self, label):
        g = self.algebra
        if not hasattr(g, "_left_factor_cache"):
            g._left_factor_cache = {}
        if label in g.cartan or label not in g.positive:
            cap2 = self.cap
        else:
            beta = g.weights[label]
            cap2 = self.cap + self._datum.heights[beta]
        key = (cap2, label, "left")
        got = g._left_factor_cache.get(key)
        if got is None:
            eng = BigCellEngine(g, cap2, params=[("s", g.parity[label])])
            gamma = eng.param_exp(label, "s") * eng.coordinate_point()
            nu, eta, _ = eng.factor(gamma)
            got = (eng, nu, eta)
            g._left_factor_cache[key] = got
        return got

    def _right_factor(self, label):
        g = self.algebra
        if not hasattr(g, "_left_factor_cache"):
            g._left_factor_cache = {}
        key = (self.cap, label, "right")
        got = g._left_factor_cache.get(key)
        if got is None:
            eng = BigCellEngine(g, self.cap, params=[("s", g.parity[label])])
            gamma = eng.coordinate_point() * eng.param_exp(label, "s")
            nu, eta, _ = eng.factor(gamma)
            got = (eng, nu, eta)
            g._left_factor_cache[key] = got
        return got

    def _translate(self, label, p, side):
        eng, nu, eta = (self._left_factor(label) if side == "left"
                        else self._right_factor(label))
        val = (eng.character_factor(self.weight, eta)
               * eng.substitute_coords(p.data, nu))
        val = val.extract("s")
        out = {}
        for m, c in val.data.items():
            expo = m[:self.n_neg]
            if any(m[self.n_neg:]):
                raise SuperweylError("translation left parameters behind")
            if self.ring.monomial_weight(expo + (0,) * (self.ring.n - self.n_neg)) > self.cap:
                raise TruncationError(
                    "left translation escapes height %d" % self.cap)
            out[expo] = c
        return SectionPolynomial(self.algebra, self.weight, self.cap, out)

    def ell_label(self, label, p):
        return self._translate(label, p, "left").scale(-1)

    def ell(self, u, p):
        """Left translation action of a PBWElement (the supergroup action
        with the antipode twist built in: on generators it is
        -d/ds f(exp(sX) g))."""
        g = self.algebra
        total = self.zero()
        for word, c in u.data.items():
            cur = p.scale(c)
            for i in reversed(word):
                cur = self.ell_label(g.basis[i], cur)
                if cur.is_zero():
                    break
            total = total + cur
        return total

    def right_derivative_label(self, label, p):
        """The right translation derivative (the paper's differentiation
        used in the pairing), restricted to the big cell.  On Cartan
        directions this is multiplication by -lambda(H); on positive
        directions it vanishes on sections."""
        return self._translate(label, p, "right")

    # -- the matrix-coefficient dictionary -------------------------------------------

    def _theta_data(self):
        if self._theta_exp is None:
            eng, coeffs = exp_action_on_highest_vector(self.verma)
            table = {}
            for w, poly in coeffs.items():
                table[w] = {m[:self.n_neg]: c for m, c in poly.data.items()}
            self._theta_exp = table
        return self._theta_exp

    def theta(self, vec):
        """theta(m) = B(m, exp(sum t_a X_a) v) as a section polynomial."""
        table = self._theta_data()
        M = self.verma
        depths = {M.word_depth(w) for w in vec}
        out = {}
        for w, mono_map in table.items():
            if M.word_depth(w) not in depths:
                continue
            b = M.contravariant_pairing(vec, {w: Fraction(1)})
            if not b:
                continue
            for expo, q in mono_map.items():
                v = out.get(expo, Fraction(0)) + b * q
                if v:
                    out[expo] = v
                elif expo in out:
                    del out[expo]
        return SectionPolynomial(self.algebra, self.weight, self.cap, out)

    def theta_matrix(self, depth):
        """Matrix of theta on a weight space: columns are theta images of
        the Verma monomial basis in the coordinate monomial basis."""
        words = self.verma.spaces.get(depth, [])
        expos = self.monomial_basis(depth)
        cols = []
        for w in words:
            th = self.theta({w: Fraction(1)})
            cols.append([th.data.get(e, Fraction(0)) for e in expos])
        return [[cols[j][i] for j in range(len(words))]
                for i in range(len(expos))]


# ---------------------------------------------------------------------------
# covariance checking
# ---------------------------------------------------------------------------

class CovarianceReport:
    def __init__(self, weight, passed, failures):
        self.weight = weight
        self.passed = passed
        self.failures = failures    # list of (kind, direction, detail)

    def __bool__(self):
        return self.passed

    def to_json(self):
        return {
            "weight": self.weight.to_json(),
            "passed": self.passed,
            "failures": [
                {"kind": k, "direction": d, "detail": detail}
                for (k, d, detail) in self.failures
            ],
        }


def check_covariance(p, lam=None):
    """Infinitesimal covariance of a hatted section over the Borel.

    Checked conditions: integrality of the attached weight on the Cartan
    lattice (the group-level torus condition), Cartan directions acting
    by -lambda in the right-translation realization, and annihilation by
    the positive directions.
    """
    lam = p.weight if lam is None else lam
    g = p.algebra
    failures = []
    for k, c in enumerate(lam.coords):
        if c.denominator != 1:
            failures.append(("integrality", g.cartan[k],
                             "weight coordinate %s is not integral" % c))
    sp = section_space(g, lam, p.cap)
    q = SectionPolynomial(g, lam, p.cap, dict(p.data))
    for k, h in enumerate(g.cartan):
        got = sp.right_derivative_label(h, q)
        want = q.scale(-lam.coords[k])
        if got.data != want.data:
            failures.append(("cartan", h,
                             "right derivative is not -lambda(%s)" % h))
    for lab in g.positive_labels():
        got = sp.right_derivative_label(lab, q)
        if not got.is_zero():
            failures.append(("positive", lab, "section not annihilated"))
    return CovarianceReport(lam, not failures, failures)
