"""Highest-weight Verma modules M(lambda) with the contravariant form.

The module is truncated at a maximum height in the positive-root
semigroup D+ (height of a depth d = sum of its simple-root
coefficients).  Weight-space bases are the normal-ordered monomials in
the negative root vectors with odd exponents at most 1; the
contravariant form is

    B(x v, y v) = (sigma(x) y) projected to U(h), evaluated at lambda

with sigma the transpose antiautomorphism.  Its per-depth radical cuts
out the maximal submodule, so ranks of the Gram blocks are the weight
multiplicities of the irreducible quotient.
"""

from fractions import Fraction

from .ratlinalg import SpanBuilder, rank as mat_rank, nullspace
from .superalgebra import Weight, root_datum, SuperweylError, EVEN
from .pbw import (PBWElement, TruncationError, normalize_word, hc_eval,
                  pbw_product, transpose_antiauto, word_parity)


class VermaModule:
    """M(lambda) truncated at a height bound, over a rooted algebra."""

    def __init__(self, algebra, highest_weight, max_height):
        self.algebra = algebra
        self.weight = highest_weight
        self.max_height = max_height
        self.datum = root_datum(algebra)
        g = algebra
        self.neg_indices = [g.index[lab] for lab in g.negative_labels()]
        self.gen_heights = []
        self.gen_parities = []
        self.gen_depths = []
        for i in self.neg_indices:
            lab = g.basis[i]
            beta = -g.weights[lab]              # the positive root
            self.gen_heights.append(self.datum.heights[beta])
            self.gen_parities.append(g.parity[lab])
            self.gen_depths.append(beta)
        self._cartan_range = (len(self.neg_indices),
                              len(self.neg_indices) + g.rank)
        self.spaces = {}          # depth Weight -> ordered list of words
        self.space_index = {}     # depth Weight -> {word: position}
        self._enumerate()
        self._grams = {}
        self._act_cache = {}

    # -- basis enumeration -----------------------------------------------------

    def _enumerate(self):
        rank = self.algebra.rank
        zero = Weight.zero(rank)
        words_by_depth = {zero: [tuple()]}
        height_blocked = False
        stack = [(tuple(), 0, zero)]
        while stack:
            word, h, d = stack.pop()
            start = self.neg_indices.index(word[-1]) if word else 0
            for k in range(start, len(self.neg_indices)):
                if (self.gen_parities[k] and word
                        and word[-1] == self.neg_indices[k]):
                    continue
                nh = h + self.gen_heights[k]
                if nh > self.max_height:
                    height_blocked = True
                    continue
                nw = word + (self.neg_indices[k],)
                nd = d + self.gen_depths[k]
                words_by_depth.setdefault(nd, []).append(nw)
                stack.append((nw, nh, nd))
        # no extension was ever refused for height: the truncation holds
        # all of M(lambda), which is then finite-dimensional outright
        self.enumeration_complete = not height_blocked
        for d, words in words_by_depth.items():
            words = sorted(set(words))
            self.spaces[d] = words
            self.space_index[d] = {w: i for i, w in enumerate(words)}

    def depths(self):
        return sorted(self.spaces, key=lambda d: (self.height(d), d.coords))

    def height(self, depth):
        """Height of a depth element of D+ (sum of simple coefficients)."""
        if depth.is_zero():
            return 0
        return self.datum.heights.get(depth) or self._height_generic(depth)

    def _height_generic(self, depth):
        from .ratlinalg import solve
        g = self.algebra
        rows = [[w.coords[k] for w in self.datum.simple_roots]
                for k in range(g.rank)]
        coeffs = solve(rows, list(depth.coords))
        if coeffs is None:
            raise SuperweylError("depth outside the root lattice")
        h = sum(coeffs)
        if h.denominator != 1:
            raise SuperweylError("non-integral height")
        return int(h)

    def word_depth(self, word):
        d = Weight.zero(self.algebra.rank)
        for i in word:
            d = d - self.algebra.weights[self.algebra.basis[i]]
        return d

    def word_parity(self, word):
        return word_parity(self.algebra, word)

    def space_parity(self, depth):
        ps = {self.word_parity(w) for w in self.spaces[depth]}
        if len(ps) != 1:
            raise SuperweylError("weight space of mixed parity")
        return ps.pop()

    def space_weight(self, depth):
        return self.weight - depth

    def dim(self, depth):
        return len(self.spaces.get(depth, []))

    def exponent_view(self, word):
        """Word as a map positive-root Weight -> exponent (DepthVector)."""
        out = {}
        for i in word:
            beta = -self.algebra.weights[self.algebra.basis[i]]
            out[beta] = out.get(beta, 0) + 1
        return out

    # -- the action --------------------------------------------------------------

    def _apply_word_to_hwv(self, word):
        """Normal form of word * v_lambda as {neg-word: coeff}."""
        g = self.algebra
        lo, hi = self._cartan_range
        out = {}
        for m, c in normalize_word(g, word).items():
            k = len(m)
            if k and m[-1] >= hi:
                continue  # a positive root vector kills v_lambda
            val = c
            cut = k
            while cut and lo <= m[cut - 1] < hi:
                h_pos = m[cut - 1] - lo
                val *= self.weight.coords[h_pos]
                cut -= 1
            if val:
                neg = m[:cut]
                v = out.get(neg, Fraction(0)) + val
                if v:
                    out[neg] = v
                elif neg in out:
                    del out[neg]
        return out

    def act(self, label, vec):
        """Left action of a basis element on {word: coeff} vectors.

        Raises TruncationError if the result needs depth beyond the
        truncation height.
        """
        g = self.algebra
        i = g.index[label]
        out = {}
        for word, c in vec.items():
            key = (i, word)
            res = self._act_cache.get(key)
            if res is None:
                res = self._apply_word_to_hwv((i,) + word)
                self._act_cache[key] = res
            for w2, c2 in res.items():
                d = self.word_depth(w2)
                if d not in self.spaces:
                    if self.height(d) > self.max_height:
                        raise TruncationError(
                            "action escapes the truncation height %d"
                            % self.max_height)
                    raise SuperweylError("unexpected depth %r" % (d,))
                v = out.get(w2, Fraction(0)) + c * c2
                if v:
                    out[w2] = v
                elif w2 in out:
                    del out[w2]
        return out

    def act_element(self, u, vec):
        """Action of a PBWElement (letters applied right to left)."""
        out = {}
        for m, c in u.data.items():
            cur = {w: c * x for w, x in vec.items()}
            for i in reversed(m):
                cur = self.act(self.algebra.basis[i], cur)
            for w, x in cur.items():
                v = out.get(w, Fraction(0)) + x
                if v:
                    out[w] = v
                elif w in out:
                    del out[w]
        return out

    def highest_vector(self):
        return {tuple(): Fraction(1)}

    # -- contravariant form --------------------------------------------------------

    def _form_on_words(self, wx, wy):
        g = self.algebra
        x = PBWElement(g, {wx: Fraction(1)})
        y = PBWElement(g, {wy: Fraction(1)})
        return hc_eval(pbw_product(transpose_antiauto(x), y), self.weight)

    def gram(self, depth):
        """Gram matrix of the contravariant form on the weight space."""
        got = self._grams.get(depth)
        if got is not None:
            return got
        words = self.spaces[depth]
        rows = [[self._form_on_words(wx, wy) for wy in words] for wx in words]
        self._grams[depth] = rows
        return rows

    def contravariant_pairing(self, f, u):
        """Exact value of B on two vectors supported at one common depth."""
        depths_f = {self.word_depth(w) for w in f}
        depths_u = {self.word_depth(w) for w in u}
        if not depths_f or not depths_u:
            return Fraction(0)
        if len(depths_f) > 1 or len(depths_u) > 1:
            raise SuperweylError("pairing arguments must be depth-homogeneous")
        df, du = depths_f.pop(), depths_u.pop()
        if df != du:
            raise SuperweylError(
                "pairing across distinct weight spaces (depths %r vs %r)"
                % (df, du))
        gram = self.gram(df)
        idx = self.space_index[df]
        total = Fraction(0)
        for wx, cx in f.items():
            for wy, cy in u.items():
                total += cx * cy * gram[idx[wx]][idx[wy]]
        return total

    def pairing_rank(self, depth):
        """(rank, kernel basis) of the Gram block at the given depth."""
        words = self.spaces[depth]
        if not words:
            return 0, []
        gram = self.gram(depth)
        r = mat_rank(gram)
        kern = nullspace(gram, len(words))
        return r, kern

    # -- irreducible profile ----------------------------------------------------------

    def heights_map(self):
        out = {}
        for d in self.spaces:
            out.setdefault(self.height(d), []).append(d)
        return out

    def irreducible_ranks(self):
        """depth -> Gram rank, plus the height where the quotient provably
        ends (None if undetected within the truncation).

        Every vector of the irreducible quotient at height h comes from a
        vector at height h - ht(generator) for some lowering generator, so
        a run of max(generator heights) consecutive rank-zero shells cuts
        off everything deeper.  A complete enumeration (no extension ever
        refused for height) means M(lambda) itself is finite and the
        profile is exact as computed.
        """
        by_height = self.heights_map()
        ranks = {}
        max_h = max((h for h, ds in by_height.items() if ds), default=0)
        for h in range(max_h + 1):
            for d in by_height.get(h, []):
                ranks[d] = self.pairing_rank(d)[0]

        if self.enumeration_complete:
            return ranks, max_h + 1

        window = max(self.gen_heights) if self.gen_heights else 1

        def shell_rank(h):
            return sum(ranks.get(d, 0) for d in by_height.get(h, []))

        stable_at = None
        for h in range(1, self.max_height - window + 2):
            if all(shell_rank(h2) == 0 for h2 in range(h, h + window)):
                stable_at = h
                break
        if stable_at is not None:
            for d in list(ranks):
                if self.height(d) >= stable_at:
                    ranks[d] = 0
        return ranks, stable_at

    def dimension_table(self):
        """JSON-friendly weight-space dimensions and radical data."""
        ranks, stable = self.irreducible_ranks()
        rows = []
        for d in self.depths():
            dim = self.dim(d)
            r = ranks.get(d)
            rows.append({
                "depth": d.to_json(),
                "height": self.height(d),
                "weight": self.space_weight(d).to_json(),
                "dim": dim,
                "radical": dim - r if r is not None else None,
                "parity": "odd" if self.space_parity(d) else "even",
            })
        return {
            "algebra": self.algebra.name,
            "highestWeight": self.weight.to_json(),
            "maxHeight": self.max_height,
            "stabilizedAtHeight": stable,
            "spaces": rows,
        }


def kostant_dimension(algebra, depth, max_height):
    """Independent combinatorial count of restricted exponent vectors
    with Sum r_b * b = depth (odd exponents at most 1)."""
    datum = root_datum(algebra)
    gens = []
    for r in datum.positive_roots:
        gens.append((r.weight, r.parity, datum.heights[r.weight]))

    count = 0

    def rec(k, remaining, height_left):
        nonlocal count
        if k == len(gens):
            if all(c == 0 for c in remaining):
                count += 1
            return
        w, par, ht = gens[k]
        top = 1 if par else height_left // ht
        for e in range(top + 1):
            rec(k + 1,
                [c - e * wc for c, wc in zip(remaining, w.coords)],
                height_left - e * ht)

    rec(0, list(depth.coords), max_height)
    return count
