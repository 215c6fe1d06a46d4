"""Group-level translation calculus on the formal big cell.

Group elements near the identity are represented as grouplike elements
of U(g) with coefficients in a truncated supercommutative ring
(exponentials of nilpotent Lie elements).  A product of such
exponentials factors through the big cell as

    gamma = exp(nu) exp(eta) exp(pi),   nu in n-, eta in h, pi in n+

and the factors are read off sector by sector: in PBW order (negative,
Cartan, positive letters) the pure-negative part of gamma is exp(nu) on
the nose, and the negative+Cartan part is exp(nu) exp(eta).

Sections of the line bundle attached to a weight evaluate as

    f(gamma) = exp(-lam(eta)) * p(coordinates of nu)

which makes left/right translation derivatives, the Theorem-5 style
Taylor pairing and the torus action all exactly computable.  Everything
here is an independent check on the algebraic implementations: it never
consults the contravariant form or the dual action.
"""

from fractions import Fraction

from .superalgebra import SuperweylError
from .superpoly import SuperPolyRing, SuperPoly
from .pbw import normalize_word, word_parity
from .verma import VermaModule


# ---------------------------------------------------------------------------
# PBW elements with supercommutative coefficients
# ---------------------------------------------------------------------------

class SPBW:
    """U(g) tensor R for a supercommutative ring R; coefficients are kept
    to the left of the PBW word."""

    __slots__ = ("algebra", "ring", "data")

    def __init__(self, algebra, ring, data=None):
        self.algebra = algebra
        self.ring = ring
        self.data = {} if data is None else data

    @staticmethod
    def one(g, ring):
        return SPBW(g, ring, {(): ring.one()})

    def is_zero(self):
        return not self.data

    def copy(self):
        return SPBW(self.algebra, self.ring, dict(self.data))

    def add_term(self, word, coeff):
        if coeff.is_zero():
            return
        cur = self.data.get(word)
        v = coeff if cur is None else cur + coeff
        if v.is_zero():
            self.data.pop(word, None)
        else:
            self.data[word] = v

    def __add__(self, other):
        out = self.copy()
        for w, c in other.data.items():
            out.add_term(w, c)
        return out

    def __sub__(self, other):
        out = self.copy()
        for w, c in other.data.items():
            out.add_term(w, -c)
        return out

    def scale(self, k):
        return SPBW(self.algebra, self.ring,
                    {w: c.scale(k) for w, c in self.data.items()})

    def scale_poly(self, q):
        out = SPBW(self.algebra, self.ring)
        for w, c in self.data.items():
            out.add_term(w, q * c)
        return out

    def __mul__(self, other):
        g = self.algebra
        out = SPBW(g, self.ring)
        for wa, ca in self.data.items():
            pa = word_parity(g, wa)
            for wb, cb in other.data.items():
                if pa:
                    ce, co = cb.parity_split()
                    c = ca * ce - ca * co
                else:
                    c = ca * cb
                if c.is_zero():
                    continue
                for m, q in normalize_word(g, wa + wb).items():
                    out.add_term(m, c.scale(q))
        return out

    def __eq__(self, other):
        return (isinstance(other, SPBW) and self.data == other.data)


def spbw_exp(u):
    """exp of a nilpotent element (no constant term)."""
    if () in u.data:
        raise SuperweylError("exp needs a nilpotent argument")
    out = SPBW.one(u.algebra, u.ring)
    term = SPBW.one(u.algebra, u.ring)
    k = 1
    while True:
        term = (term * u).scale(Fraction(1, k))
        if term.is_zero():
            return out
        out = out + term
        k += 1
        if k > 200:
            raise SuperweylError("exp did not terminate")


def spbw_log(v):
    """log of a unipotent element 1 + N with N nilpotent."""
    n = v.copy()
    one = n.data.get(())
    if one is None or not (one - n.ring.one()).is_zero():
        raise SuperweylError("log needs constant term 1")
    n.add_term((), -n.ring.one())
    out = SPBW(v.algebra, v.ring)
    term = SPBW.one(v.algebra, v.ring)
    k = 1
    while True:
        term = term * n
        if term.is_zero():
            return out
        out = out + term.scale(Fraction((-1) ** (k + 1), k))
        k += 1
        if k > 200:
            raise SuperweylError("log did not terminate")


# ---------------------------------------------------------------------------
# the big-cell engine
# ---------------------------------------------------------------------------

class BigCellEngine:
    """Formal evaluation of sections and translation derivatives.

    cap bounds the height of everything kept; params is a list of
    (name, parity) nilpotent auxiliary parameters (weight zero, square
    zero) used for differentiation.
    """

    def __init__(self, algebra, cap, params=(), with_cartan_coords=False,
                 with_positive_coords=False, param_caps=None):
        from .superalgebra import root_datum
        self.algebra = algebra
        self.cap = cap
        g = algebra
        datum = root_datum(g)
        self.n_neg = len(g.negative_labels())
        self.rank = g.rank
        names, parities, weights, pcaps = [], [], [], []
        self.t_names = []
        for i in range(self.n_neg):
            lab = g.basis[i]
            beta = -g.weights[lab]
            nm = "t[%s]" % lab[2:-1]
            names.append(nm)
            self.t_names.append(nm)
            parities.append(g.parity[lab])
            weights.append(datum.heights[beta])
            pcaps.append(1 if g.parity[lab] else None)
        self.z_names = []
        if with_cartan_coords:
            for k in range(self.rank):
                nm = "z%d" % (k + 1)
                names.append(nm)
                self.z_names.append(nm)
                parities.append(0)
                weights.append(1)
                pcaps.append(None)
        self.y_names = []
        if with_positive_coords:
            for j, lab in enumerate(g.positive_labels()):
                beta = g.weights[lab]
                nm = "y[%s]" % lab[2:-1]
                names.append(nm)
                self.y_names.append(nm)
                parities.append(g.parity[lab])
                weights.append(datum.heights[beta])
                pcaps.append(1 if g.parity[lab] else None)
        self.param_names = []
        for idx, (nm, p) in enumerate(params):
            names.append(nm)
            self.param_names.append(nm)
            parities.append(p)
            weights.append(0)
            if param_caps is not None:
                pcaps.append(param_caps[idx])
            else:
                pcaps.append(1)
        self.ring = SuperPolyRing(names, parities, weights, cap, pcaps)

    # -- building group elements -------------------------------------------------

    def coordinate_point(self):
        """exp(sum t_i X_i) over the negative root vectors."""
        g = self.algebra
        u = SPBW(g, self.ring)
        for i in range(self.n_neg):
            u.add_term((i,), self.ring.gen(self.t_names[i]))
        return spbw_exp(u)

    def cartan_point(self):
        g = self.algebra
        u = SPBW(g, self.ring)
        for k in range(self.rank):
            u.add_term((self.n_neg + k,), self.ring.gen(self.z_names[k]))
        return spbw_exp(u)

    def positive_point(self):
        g = self.algebra
        u = SPBW(g, self.ring)
        for j, lab in enumerate(g.positive_labels()):
            u.add_term((g.index[lab],), self.ring.gen(self.y_names[j]))
        return spbw_exp(u)

    def param_exp(self, label, param_name):
        """exp(s X) for a basis label and a nilpotent parameter."""
        g = self.algebra
        u = SPBW(g, self.ring)
        u.add_term((g.index[label],), self.ring.gen(param_name))
        return spbw_exp(u)

    # -- factorization --------------------------------------------------------------

    def factor(self, gamma, need_positive=False):
        """Big-cell factorization gamma = exp(nu) exp(eta) exp(pi).

        Returns (nu_coords, eta_coords, pi_coords), each a list of ring
        elements (pi_coords None unless requested).
        """
        g = self.algebra
        lo, hi = self.n_neg, self.n_neg + self.rank

        s_neg = SPBW(g, self.ring,
                     {w: c for w, c in gamma.data.items()
                      if all(i < lo for i in w)})
        nu = spbw_log(s_neg)
        nu_coords = [self.ring.zero()] * self.n_neg
        for w, c in nu.data.items():
            if len(w) != 1 or w[0] >= lo:
                raise SuperweylError("log of the N- sector is not in n-")
            nu_coords[w[0]] = c

        s_nc = SPBW(g, self.ring,
                    {w: c for w, c in gamma.data.items()
                     if all(i < hi for i in w)})
        exp_eta = spbw_exp(nu.scale(-1)) * s_nc
        eta = spbw_log(exp_eta)
        eta_coords = [self.ring.zero()] * self.rank
        for w, c in eta.data.items():
            if len(w) != 1 or not (lo <= w[0] < hi):
                raise SuperweylError("Cartan factor is not in h")
            eta_coords[w[0] - lo] = c

        pi_coords = None
        if need_positive:
            exp_pi = spbw_exp(eta.scale(-1)) * (spbw_exp(nu.scale(-1)) * gamma)
            pi = spbw_log(exp_pi)
            pi_coords = {}
            for w, c in pi.data.items():
                if len(w) != 1 or w[0] < hi:
                    raise SuperweylError("N+ factor is not in n+")
                pi_coords[w[0]] = c
        return nu_coords, eta_coords, pi_coords

    # -- section evaluation ------------------------------------------------------------

    def character_factor(self, lam, eta_coords):
        """exp(-lam(eta)) in the ring."""
        val = self.ring.zero()
        for k in range(self.rank):
            val = val + eta_coords[k].scale(-lam.coords[k])
        out = self.ring.one()
        term = self.ring.one()
        k = 1
        while True:
            term = (term * val).scale(Fraction(1, k))
            if term.is_zero():
                return out
            out = out + term
            k += 1
            if k > 200:
                raise SuperweylError("character series did not terminate")

    def substitute_coords(self, p_data, nu_coords):
        """Evaluate a t-coordinate polynomial {expo: coeff} on nu."""
        out = self.ring.zero()
        for expo, c in p_data.items():
            term = self.ring.constant(c)
            for i, e in enumerate(expo):
                for _ in range(e):
                    term = term * nu_coords[i]
                if term.is_zero():
                    break
            out = out + term
        return out

    def section_value(self, p_data, lam, gamma):
        """Value of the section with big-cell polynomial p on gamma."""
        nu, eta, _ = self.factor(gamma)
        return self.character_factor(lam, eta) * self.substitute_coords(p_data, nu)


def taylor_coefficient(g, lam, p_data, labels, cap):
    """(d(X_{l1}) ... d(X_{lk}) f)(1_G) for the right-translation
    derivatives d: insert exp(s_i X_{li}) left to right at the identity
    and extract the parameters innermost first."""
    params = [("s%d" % (i + 1), g.parity[lab]) for i, lab in enumerate(labels)]
    eng = BigCellEngine(g, cap, params=params)
    gamma = SPBW.one(g, eng.ring)
    for i, lab in enumerate(labels):
        gamma = gamma * eng.param_exp(lab, "s%d" % (i + 1))
    val = eng.section_value(p_data, lam, gamma)
    for i in range(len(labels), 0, -1):
        val = val.extract("s%d" % i)
    return val.constant_coefficient()


def pairing_value(g, lam, p_data, p_parity, labels, cap):
    """Theorem-5 style pairing <f, u> = (-1)^{|u||f|} (d(u) f)(1_G) for
    f the section with polynomial p and u the ordered word of labels."""
    u_parity = sum(g.parity[lab] for lab in labels) % 2
    sign = -1 if (u_parity and p_parity) else 1
    return sign * taylor_coefficient(g, lam, p_data, labels, cap)


def exp_action_on_highest_vector(verma):
    """Coefficients of exp(sum t_i X_i) v in the Verma monomial basis:
    word -> ring element.  Used for the matrix-coefficient dictionary."""
    g = verma.algebra
    eng = BigCellEngine(g, verma.max_height)
    u = SPBW(g, eng.ring)
    for i in range(eng.n_neg):
        u.add_term((i,), eng.ring.gen(eng.t_names[i]))
    e = spbw_exp(u)
    return eng, {w: c for w, c in e.data.items()}


# ---------------------------------------------------------------------------
# the full coordinate model O(Gamma): left and right translations on
# functions of all big-cell coordinates (N- x T x N+)
# ---------------------------------------------------------------------------

class FunctionModel:
    """Polynomial functions on the formal big cell with honest left and
    right translation derivatives.

    This is the home of the commutation statement: left and right
    translations commute as operators on functions, with no reference to
    any line bundle.  Intermediate results are materialized as honest
    polynomials in all coordinates, so composing the two sides really
    exercises the group law and not just parameter bookkeeping.
    """

    PARAMS = (("se", 0), ("so", 1), ("ue", 0), ("uo", 1))

    def __init__(self, algebra, cap):
        self.algebra = algebra
        self.cap = cap
        self.eng = BigCellEngine(algebra, cap, params=self.PARAMS,
                                 with_cartan_coords=True,
                                 with_positive_coords=True)
        eng = self.eng
        self._base = (eng.coordinate_point() * eng.cartan_point()
                      * eng.positive_point())
        self._coord_names = eng.t_names + eng.z_names + eng.y_names
        self._right_cache = {}
        self._left_cache = {}

    def ring(self):
        return self.eng.ring

    def _param_for(self, label, side):
        p = self.algebra.parity[label]
        return ("u" if side == "right" else "s") + ("o" if p else "e")

    def _coords_of(self, gamma):
        nu, eta, pi = self.eng.factor(gamma, need_positive=True)
        images = {}
        for i, nm in enumerate(self.eng.t_names):
            images[nm] = nu[i]
        for k, nm in enumerate(self.eng.z_names):
            images[nm] = eta[k]
        g = self.algebra
        pos_labels = g.positive_labels()
        zero = self.eng.ring.zero()
        for j, nm in enumerate(self.eng.y_names):
            images[nm] = pi.get(g.index[pos_labels[j]], zero)
        return images

    def _op_images(self, label, side):
        cache = self._right_cache if side == "right" else self._left_cache
        got = cache.get(label)
        if got is None:
            param = self._param_for(label, side)
            ins = self.eng.param_exp(label, param)
            gamma = (self._base * ins if side == "right" else ins * self._base)
            got = (param, self._coords_of(gamma))
            cache[label] = got
        return got

    def _apply(self, func, label, side):
        param, images = self._op_images(label, side)
        ring = self.eng.ring
        out = ring.zero()
        for expo, c in func.data.items():
            term = ring.constant(c)
            for i, e in enumerate(expo):
                if not e:
                    continue
                img = images[ring.names[i]]
                for _ in range(e):
                    term = term * img
                if term.is_zero():
                    break
            out = out + term
        return out.extract(param)

    def right_derivative(self, func, label):
        """d(X) f: derivative of f(g exp(uX)) at u = 0."""
        return self._apply(func, label, "right")

    def left_action(self, func, label):
        """l(X) f: minus the derivative of f(exp(sX) g) at s = 0."""
        return -self._apply(func, label, "left")

    def right_derivative_word(self, func, labels):
        """d(X_1 ... X_k) = d(X_1) o ... o d(X_k)."""
        for lab in reversed(labels):
            func = self.right_derivative(func, lab)
        return func

    def left_action_word(self, func, labels):
        for lab in reversed(labels):
            func = self.left_action(func, lab)
        return func

    def truncate_to(self, func, max_weight):
        ring = self.eng.ring
        return SuperPoly(ring, {m: c for m, c in func.data.items()
                                if ring.monomial_weight(m) <= max_weight})

    def super_commutator_vanishes(self, x_labels, y_labels, func):
        """Exact check of [l(x), d(y)] f = 0 on the weight range that the
        truncation computes faithfully (drops can only propagate downward
        by the total height of the letters involved)."""
        g = self.algebra
        budget = 0
        from .superalgebra import root_datum
        datum = root_datum(g)
        for lab in tuple(x_labels) + tuple(y_labels):
            if lab not in g.cartan:
                w = g.weights[lab]
                budget += abs(datum.heights[w if lab in g.positive else -w])
        window = self.cap - budget
        if window < 0:
            raise SuperweylError("truncation too small for these words")
        px = sum(g.parity[lab] for lab in x_labels) % 2
        py = sum(g.parity[lab] for lab in y_labels) % 2
        lhs = self.left_action_word(self.right_derivative_word(func, y_labels),
                                    x_labels)
        rhs = self.right_derivative_word(self.left_action_word(func, x_labels),
                                         y_labels)
        sign = -1 if (px and py) else 1
        diff = lhs - rhs.scale(sign)
        return self.truncate_to(diff, window).is_zero(), window
