"""The universal enveloping superalgebra U(g) in PBW normal form.

A monomial is a non-decreasing tuple of basis indices in the algebra's
fixed order (negative root vectors, Cartan, positive root vectors); odd
generators appear at most once in a row.  Products are computed by the
straightening rule

    y x = (-1)^{|x||y|} x y + [y, x]        (x before y in the basis order)
    x x = [x, x] / 2                        (x odd)

which terminates because each step lowers (length, inversions).
"""

from fractions import Fraction

from .superalgebra import SuperweylError

ZERO = Fraction(0)
HALF = Fraction(1, 2)


class TruncationError(SuperweylError):
    """A product or action escaped the requested truncation degree."""


def _violation(g, word):
    """Index of the first out-of-order or odd-square pair, or None."""
    par = g._parity_by_index
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if a > b:
            return k
        if a == b and par[a]:
            return k
    return None


def _ensure_pbw_tables(g):
    if not hasattr(g, "_parity_by_index"):
        g._parity_by_index = [g.parity[lab] for lab in g.basis]
        g._bracket_by_index = {}
        for a, la in enumerate(g.basis):
            for b, lb in enumerate(g.basis):
                g._bracket_by_index[(a, b)] = tuple(
                    (g.index[lab], c) for lab, c in g.bracket(la, lb).items())
        g._norm_cache = {}


def _rewrite_children(g, w, k):
    """One straightening step at position k: list of (word, coeff)."""
    par = g._parity_by_index
    a, b = w[k], w[k + 1]
    out = []
    if a == b:
        for lab, coef in g._bracket_by_index[(a, a)]:
            out.append((w[:k] + (lab,) + w[k + 2:], coef * HALF))
    else:
        sign = Fraction(-1) if (par[a] and par[b]) else Fraction(1)
        out.append((w[:k] + (b, a) + w[k + 2:], sign))
        for lab, coef in g._bracket_by_index[(a, b)]:
            out.append((w[:k] + (lab,) + w[k + 2:], coef))
    return out


def normalize_word(g, word):
    """Normal form of a word of basis indices, as {monomial: Fraction}.

    Memoized per distinct word, so shared subproblems across long
    products are straightened once.
    """
    _ensure_pbw_tables(g)
    cache = g._norm_cache
    word = tuple(word)
    hit = cache.get(word)
    if hit is not None:
        return hit
    stack = [word]
    while stack:
        w = stack[-1]
        if w in cache:
            stack.pop()
            continue
        k = _violation(g, w)
        if k is None:
            cache[w] = {w: Fraction(1)}
            stack.pop()
            continue
        children = _rewrite_children(g, w, k)
        missing = [cw for cw, _ in children if cw not in cache]
        if missing:
            stack.extend(missing)
            continue
        out = {}
        for cw, cc in children:
            for m, v in cache[cw].items():
                nv = out.get(m, ZERO) + cc * v
                if nv:
                    out[m] = nv
                elif m in out:
                    del out[m]
        cache[w] = out
        stack.pop()
    return cache[word]


def word_parity(g, word):
    _ensure_pbw_tables(g)
    return sum(g._parity_by_index[i] for i in word) % 2


class PBWElement:
    """Element of U(g): a finite map from normal-ordered monomials to
    rational coefficients.  Canonical form stores no zero coefficients."""

    __slots__ = ("algebra", "data")

    def __init__(self, algebra, data=None):
        self.algebra = algebra
        self.data = {} if data is None else data

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def one(g):
        return PBWElement(g, {(): Fraction(1)})

    @staticmethod
    def zero(g):
        return PBWElement(g, {})

    @staticmethod
    def generator(g, label):
        return PBWElement(g, {(g.index[label],): Fraction(1)})

    @staticmethod
    def from_word(g, labels):
        word = tuple(g.index[lab] for lab in labels)
        return PBWElement(g, dict(normalize_word(g, word)))

    # -- structure -------------------------------------------------------------

    def is_zero(self):
        return not self.data

    def degree(self):
        return max((len(m) for m in self.data), default=0)

    def is_homogeneous_parity(self):
        g = self.algebra
        ps = {word_parity(g, m) for m in self.data}
        return len(ps) <= 1

    def parity(self):
        g = self.algebra
        ps = {word_parity(g, m) for m in self.data}
        if len(ps) > 1:
            raise SuperweylError("inhomogeneous element has no parity")
        return ps.pop() if ps else 0

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        out = dict(self.data)
        for m, c in other.data.items():
            v = out.get(m, ZERO) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return PBWElement(self.algebra, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PBWElement(self.algebra,
                          {m: -c for m, c in self.data.items()})

    def scale(self, k):
        k = Fraction(k)
        if k == 0:
            return PBWElement.zero(self.algebra)
        return PBWElement(self.algebra,
                          {m: k * c for m, c in self.data.items()})

    __rmul__ = scale

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return pbw_product(self, other)
        return self.scale(other)

    def __eq__(self, other):
        return (isinstance(other, PBWElement)
                and self.algebra is other.algebra
                and self.data == other.data)

    def __hash__(self):
        return hash(frozenset(self.data.items()))

    # -- rendering ---------------------------------------------------------------

    def render(self):
        """Stable text form: terms sorted by (degree, index word)."""
        if not self.data:
            return "0"
        g = self.algebra
        parts = []
        for m in sorted(self.data, key=lambda m: (len(m), m)):
            c = self.data[m]
            factors = []
            k = 0
            while k < len(m):
                j = k
                while j < len(m) and m[j] == m[k]:
                    j += 1
                lab = g.basis[m[k]]
                factors.append(lab if j - k == 1 else "%s^%d" % (lab, j - k))
                k = j
            body = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                term = body
            elif c == -1 and factors:
                term = "-" + body
            else:
                term = "%s*%s" % (c, body) if factors else str(c)
            parts.append(term)
        text = parts[0]
        for t in parts[1:]:
            text += " - " + t[1:] if t.startswith("-") else " + " + t
        return text

    def __repr__(self):
        return "PBW(%s)" % self.render()


def pbw_product(a, b, max_degree=None):
    """Canonical normal form of a*b.

    With max_degree set, any resulting monomial of larger total degree
    raises TruncationError instead of being dropped.
    """
    g = a.algebra
    out = {}
    for ma, ca in a.data.items():
        for mb, cb in b.data.items():
            c = ca * cb
            for m, v in normalize_word(g, ma + mb).items():
                nv = out.get(m, ZERO) + c * v
                if nv:
                    out[m] = nv
                elif m in out:
                    del out[m]
    if max_degree is not None:
        for m in out:
            if len(m) > max_degree:
                raise TruncationError(
                    "product reaches degree %d > %d" % (len(m), max_degree))
    return PBWElement(g, out)


# ---------------------------------------------------------------------------
# antiautomorphisms
# ---------------------------------------------------------------------------

def _anti_extend(g, word, gen_image, memo_key):
    """Extend a generator map to the word by the super rule
    S(x w) = (-1)^{|x||w|} S(w) S(x)."""
    _ensure_pbw_tables(g)
    memo = getattr(g, memo_key, None)
    if memo is None:
        memo = {}
        setattr(g, memo_key, memo)
    word = tuple(word)

    def rec(w):
        if w in memo:
            return memo[w]
        if not w:
            res = PBWElement.one(g)
        else:
            x, rest = w[0], w[1:]
            sign = Fraction(-1) if (g._parity_by_index[x]
                                    and word_parity(g, rest)) else Fraction(1)
            res = pbw_product(rec(rest), gen_image(x)).scale(sign)
        memo[w] = res
        return res

    return rec(word)


def antipode(u):
    """The antipode: X -> -X on g, S(uv) = (-1)^{|u||v|} S(v) S(u)."""
    g = u.algebra

    def image(i):
        return PBWElement(g, {(i,): Fraction(-1)})

    out = PBWElement.zero(g)
    for m, c in u.data.items():
        out = out + _anti_extend(g, m, image, "_antipode_memo").scale(c)
    return out


def _sigma_table(g):
    """Generator images of the transpose antiautomorphism: fixes the
    Cartan and exchanges e[b] with f[b].

    Signs: +1 on even simple pairs; on odd simples sigma(e) = -f,
    sigma(f) = +e; higher roots are propagated through bracket chains and
    the whole map is verified to satisfy
    sigma([x,y]) = (-1)^{|x||y|} [sigma(y), sigma(x)].
    """
    if hasattr(g, "_sigma"):
        return g._sigma
    from .superalgebra import root_datum
    datum = root_datum(g)
    sigma = {}
    for h in g.cartan:
        sigma[h] = (h, Fraction(1))

    by_weight = datum.by_weight
    pos = sorted((r for r in datum.roots if r.positive),
                 key=lambda r: datum.heights[r.weight])
    simple_set = set(datum.simple_roots)
    for r in pos:
        e_lab = r.vector
        f_lab = by_weight[-r.weight].vector
        if r.weight in simple_set:
            if r.parity:
                sigma[e_lab] = (f_lab, Fraction(-1))
                sigma[f_lab] = (e_lab, Fraction(1))
            else:
                sigma[e_lab] = (f_lab, Fraction(1))
                sigma[f_lab] = (e_lab, Fraction(1))
            continue
        done = False
        for s in datum.simple_roots:
            rest = r.weight - s
            if rest not in by_weight or not by_weight[rest].positive:
                continue
            ea, eb = by_weight[s].vector, by_weight[rest].vector
            br = g.bracket(ea, eb)
            if set(br) != {e_lab}:
                continue
            n_coef = br[e_lab]
            fa, fb = by_weight[-s].vector, by_weight[-rest].vector
            br_f = g.bracket(fb, fa)
            if set(br_f) != {f_lab}:
                continue
            m_coef = br_f[f_lab]
            sign = Fraction(-1) if (g.parity[ea] and g.parity[eb]) else Fraction(1)
            ca, cb = sigma[ea][1], sigma[eb][1]
            sigma[e_lab] = (f_lab, sign * ca * cb * m_coef / n_coef)
            # lowering side: f_gamma from [f_a, f_b]
            br2 = g.bracket(fa, fb)
            if set(br2) != {f_lab}:
                continue
            m2 = br2[f_lab]
            br2_e = g.bracket(eb, ea)
            if set(br2_e) != {e_lab}:
                continue
            n2 = br2_e[e_lab]
            da, db = sigma[fa][1], sigma[fb][1]
            sigma[f_lab] = (e_lab, sign * da * db * n2 / m2)
            done = True
            break
        if not done:
            raise SuperweylError(
                "no simple bracket chain reaches root %s" % (r.weight,))

    # verify the anti-morphism property on all pairs
    for a in g.basis:
        for b in g.basis:
            sign = Fraction(-1) if (g.parity[a] and g.parity[b]) else Fraction(1)
            lhs = {}
            for lab, c in g.bracket(a, b).items():
                la, ca = sigma[lab]
                v = lhs.get(la, ZERO) + c * ca
                if v:
                    lhs[la] = v
                elif la in lhs:
                    del lhs[la]
            ib, cb = sigma[b]
            ia, ca = sigma[a]
            rhs = {}
            for lab, c in g.bracket(ib, ia).items():
                v = sign * cb * ca * c
                if v:
                    rhs[lab] = rhs.get(lab, ZERO) + v
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                raise SuperweylError(
                    "transpose antiautomorphism is inconsistent at (%s, %s)"
                    % (a, b))
    g._sigma = sigma
    return sigma


def transpose_antiauto(u):
    """Chevalley-type antiautomorphism exchanging raising and lowering
    vectors and fixing the Cartan, with the super sign rule."""
    g = u.algebra
    sigma = _sigma_table(g)

    def image(i):
        lab, c = sigma[g.basis[i]]
        return PBWElement(g, {(g.index[lab],): c})

    out = PBWElement.zero(g)
    for m, c in u.data.items():
        out = out + _anti_extend(g, m, image, "_sigma_memo").scale(c)
    return out


# ---------------------------------------------------------------------------
# Harish-Chandra style projection
# ---------------------------------------------------------------------------

def hc_eval(u, lam):
    """Project onto U(h) along (n- U + U n+) and evaluate at the weight.

    In PBW coordinates: keep the monomials made of Cartan letters only,
    each H^k contributing lam(H)^k.
    """
    g = u.algebra
    cartan_idx = {g.index[h]: k for k, h in enumerate(g.cartan)}
    total = ZERO
    for m, c in u.data.items():
        val = c
        ok = True
        for i in m:
            k = cartan_idx.get(i)
            if k is None:
                ok = False
                break
            val *= lam.coords[k]
        if ok:
            total += val
    return total


def monomial_counts(g, degree):
    """Number of PBW monomials of total degree <= degree (for dimension
    cross-checks against the super-symmetric algebra count)."""
    from itertools import combinations_with_replacement
    par = [g.parity[lab] for lab in g.basis]
    count = 0
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(len(g.basis)), d):
            ok = True
            for k in range(len(combo) - 1):
                if combo[k] == combo[k + 1] and par[combo[k]]:
                    ok = False
                    break
            if ok:
                count += 1
    return count
