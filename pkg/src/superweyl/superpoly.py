"""Truncated supercommutative polynomial rings.

Generators carry a parity and a non-negative integer weight; monomials
whose total weight exceeds the ring's cap are dropped at creation time,
which makes every computation downstream a finite one.  Odd generators
square to zero; the Koszul sign of a product is computed from crossings
of odd generators.

These rings serve two roles: big-cell coordinate algebras (generators
t_a, one per negative root, weighted by root height) and parameter
extensions for group-level differentiation (nilpotent even/odd
parameters of weight zero).
"""

from fractions import Fraction

from .ratlinalg import frac

EVEN, ODD = 0, 1


class SuperPolyRing:
    def __init__(self, names, parities, weights, cap, power_caps=None):
        self.names = list(names)
        self.parities = list(parities)
        self.weights = list(weights)
        self.cap = cap
        self.n = len(self.names)
        if power_caps is None:
            power_caps = [1 if p else None for p in self.parities]
        self.power_caps = list(power_caps)
        self.index = {nm: i for i, nm in enumerate(self.names)}

    def monomial_ok(self, expo):
        total = 0
        for e, w, pc in zip(expo, self.weights, self.power_caps):
            if pc is not None and e > pc:
                return False
            total += e * w
        return total <= self.cap

    def monomial_weight(self, expo):
        return sum(e * w for e, w in zip(expo, self.weights))

    def monomial_parity(self, expo):
        return sum(e * p for e, p in zip(expo, self.parities)) % 2

    def extend(self, names, parities, weights=None):
        """Ring with extra generators appended (same cap)."""
        weights = [0] * len(names) if weights is None else list(weights)
        return SuperPolyRing(self.names + list(names),
                             self.parities + list(parities),
                             self.weights + weights,
                             self.cap,
                             self.power_caps + [1] * len(names))

    def zero(self):
        return SuperPoly(self, {})

    def one(self):
        return SuperPoly(self, {(0,) * self.n: Fraction(1)})

    def constant(self, c):
        c = frac(c)
        return SuperPoly(self, {(0,) * self.n: c} if c else {})

    def gen(self, name):
        expo = [0] * self.n
        expo[self.index[name]] = 1
        expo = tuple(expo)
        if not self.monomial_ok(expo):
            return self.zero()
        return SuperPoly(self, {expo: Fraction(1)})

    def monomial(self, expo, coeff=1):
        expo = tuple(expo)
        c = frac(coeff)
        if not c or not self.monomial_ok(expo):
            return self.zero()
        return SuperPoly(self, {expo: c})


def _koszul_sign(ring, ea, eb):
    """Sign for merging monomial eb after ea: each odd generator of eb
    crosses all odd generators of ea sitting at later positions."""
    crossings = 0
    suffix_odd = 0
    for i in range(ring.n - 1, -1, -1):
        if eb[i] and ring.parities[i]:
            crossings += suffix_odd
        if ea[i] and ring.parities[i]:
            suffix_odd += ea[i]
    return -1 if crossings % 2 else 1


class SuperPoly:
    __slots__ = ("ring", "data")

    def __init__(self, ring, data):
        self.ring = ring
        self.data = data

    def is_zero(self):
        return not self.data

    def __eq__(self, other):
        return (isinstance(other, SuperPoly) and self.ring is other.ring
                and self.data == other.data)

    def __hash__(self):
        return hash(frozenset(self.data.items()))

    def __add__(self, other):
        out = dict(self.data)
        for m, c in other.data.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return SuperPoly(self.ring, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SuperPoly(self.ring, {m: -c for m, c in self.data.items()})

    def scale(self, k):
        k = frac(k)
        if not k:
            return self.ring.zero()
        return SuperPoly(self.ring, {m: k * c for m, c in self.data.items()})

    def __mul__(self, other):
        if not isinstance(other, SuperPoly):
            return self.scale(other)
        ring = self.ring
        out = {}
        for ma, ca in self.data.items():
            for mb, cb in other.data.items():
                bad = False
                expo = []
                for i in range(ring.n):
                    e = ma[i] + mb[i]
                    if ma[i] and mb[i] and ring.parities[i]:
                        bad = True
                        break
                    expo.append(e)
                if bad:
                    continue
                expo = tuple(expo)
                if not ring.monomial_ok(expo):
                    continue
                c = ca * cb * _koszul_sign(ring, ma, mb)
                v = out.get(expo, Fraction(0)) + c
                if v:
                    out[expo] = v
                elif expo in out:
                    del out[expo]
        return SuperPoly(ring, out)

    __rmul__ = scale

    def parity_split(self):
        even, odd = {}, {}
        for m, c in self.data.items():
            (even if self.ring.monomial_parity(m) == EVEN else odd)[m] = c
        return SuperPoly(self.ring, even), SuperPoly(self.ring, odd)

    def constant_coefficient(self):
        return self.data.get((0,) * self.ring.n, Fraction(0))

    def extract(self, name):
        """Left coefficient of the generator: writes each monomial as
        name * rest (sign from moving the generator to the front) and
        returns the sum of rests; monomials without it are discarded."""
        ring = self.ring
        pos = ring.index[name]
        out = {}
        for m, c in self.data.items():
            if not m[pos]:
                continue
            if ring.parities[pos]:
                crossings = sum(m[i] for i in range(pos) if ring.parities[i])
                if crossings % 2:
                    c = -c
            expo = list(m)
            expo[pos] -= 1
            out[tuple(expo)] = c
        return SuperPoly(ring, out)

    def substitute_zero(self, name):
        """Drop all monomials containing the generator."""
        pos = self.ring.index[name]
        return SuperPoly(self.ring,
                         {m: c for m, c in self.data.items() if not m[pos]})

    def map_ring(self, ring2, name_map=None):
        """Reinterpret in another ring with the same generator names (or a
        rename map); truncation of the target applies."""
        out = {}
        for m, c in self.data.items():
            expo = [0] * ring2.n
            for i, e in enumerate(m):
                if e:
                    nm = self.ring.names[i]
                    nm = name_map.get(nm, nm) if name_map else nm
                    expo[ring2.index[nm]] += e
            expo = tuple(expo)
            if ring2.monomial_ok(expo):
                v = out.get(expo, Fraction(0)) + c
                if v:
                    out[expo] = v
                elif expo in out:
                    del out[expo]
        return SuperPoly(ring2, out)

    def terms(self):
        return sorted(self.data.items())

    def render(self):
        if not self.data:
            return "0"
        ring = self.ring
        parts = []
        for m in sorted(self.data, key=lambda m: (ring.monomial_weight(m),
                                                  sum(m), m)):
            c = self.data[m]
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(ring.names[i])
                elif e > 1:
                    factors.append("%s^%d" % (ring.names[i], e))
            body = "*".join(factors)
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (c, body))
        text = parts[0]
        for t in parts[1:]:
            text += " - " + t[1:] if t.startswith("-") else " + " + t
        return text

    def __repr__(self):
        return "SuperPoly(%s)" % self.render()
