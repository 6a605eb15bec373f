"""The extended affine Weyl group W = Lambda x| W_f.

Elements are kept in the canonical form t_lambda * w_f, so equality and
hashing are O(1).  The Iwahori-Matsumoto length is

    len(t_lam w) = sum_{a>0, w^-1(a)>0} |<lam, a_vee>|
                 + sum_{a>0, w^-1(a)<0} |<lam, a_vee> - 1|,

which makes len(t_lam) = <lam, 2 rho_vee> for dominant lam.  The affine
simple reflection s_0 is t_gamma * s_gamma for gamma the dominant short
root; the finite simple reflections are s_1 .. s_n.  Omega is the group
of length-zero elements (isomorphic to Lambda/Q).

Text notation: "t[1,-1]*s1*s2" with translation coords in the chosen
lattice basis, "e" for the identity, and "pi^k" accepted for powers of
the canonical Omega generator.  The printer emits the canonical
t-then-finite-word form; printer and parser round-trip.
"""

from __future__ import annotations

from .errors import DatumMismatchError, ParseError, ResourceBudgetError
from .root_datum import RootDatum, build_root_datum


class AffineWeylElement:
    """Canonical form (translation, finite part index); immutable."""

    __slots__ = ("group", "trans", "fin")

    def __init__(self, group, trans, fin):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "trans", tuple(trans))
        object.__setattr__(self, "fin", fin)

    def __setattr__(self, *args):
        raise AttributeError("AffineWeylElement is immutable")

    def __eq__(self, other):
        return (isinstance(other, AffineWeylElement)
                and self.group is other.group
                and self.trans == other.trans
                and self.fin == other.fin)

    def __hash__(self):
        return hash((id(self.group), self.trans, self.fin))

    def __mul__(self, other):
        return self.group.multiply(self, other)

    def inverse(self):
        return self.group.inverse(self)

    def length(self):
        return self.group.length(self)

    def __repr__(self):
        return self.group.format(self)


class ExtendedAffineWeyl:
    """Group operations, length, reduced words, Bruhat order, f-minimal
    coset representatives and the kappa bijection."""

    def __init__(self, rd: RootDatum):
        self.rd = rd
        self.identity = AffineWeylElement(self, (0,) * rd.rank, 0)
        self._positive_set = frozenset(rd.positive_roots)
        self._gamma_short = self._dominant_short_root()
        gamma_idx = self.rd.positive_roots.index(self._gamma_short)
        refl = rd._reflection_matrix(self._gamma_short, rd.positive_coroots[gamma_idx])
        self._s_gamma = rd.weyl.index[refl]
        self._length = {}
        self._rw = {}
        self._fmin = {}
        self._kappa = {}
        self._bruhat = {}
        self._omega = None
        self._omega_gen = None

    # -- construction -----------------------------------------------------

    def _dominant_short_root(self):
        short = min(self.rd.root_half_lengths)
        for fw, d in zip(self.rd.positive_roots, self.rd.root_half_lengths):
            if d == short and self.rd.is_dominant(fw):
                return fw
        raise AssertionError("no dominant short root")

    def translation(self, lam):
        lam = tuple(lam)
        if not self.rd.lattice_contains(lam):
            raise ValueError("weight %r is outside the chosen lattice" % (lam,))
        return AffineWeylElement(self, lam, 0)

    def finite_element(self, k):
        return AffineWeylElement(self, (0,) * self.rd.rank, k)

    def simple_reflection(self, i):
        """Generator s_i; i = 0 is the affine node, 1..n are finite."""
        if i == 0:
            return AffineWeylElement(self, self._gamma_short, self._s_gamma)
        return self.finite_element(self.rd.weyl.simple[i - 1])

    @property
    def num_generators(self):
        return self.rd.rank + 1

    # -- group arithmetic --------------------------------------------------

    def multiply(self, x, y):
        if x.group is not self or y.group is not self:
            raise DatumMismatchError("elements belong to different groups")
        w = self.rd.weyl
        lam = tuple(a + b for a, b in zip(x.trans, w.act(x.fin, y.trans)))
        return AffineWeylElement(self, lam, w.multiply(x.fin, y.fin))

    def inverse(self, x):
        w = self.rd.weyl
        k = w.inverse[x.fin]
        lam = w.act(k, tuple(-a for a in x.trans))
        return AffineWeylElement(self, lam, k)

    def length(self, x):
        out = self._length.get(x)
        if out is not None:
            return out
        w = self.rd.weyl
        kinv = w.inverse[x.fin]
        total = 0
        for beta, cov in zip(self.rd.positive_roots, self.rd.positive_coroots):
            p = self.rd.pair(x.trans, cov)
            if w.act(kinv, beta) in self._positive_set:
                total += abs(p)
            else:
                total += abs(p - 1)
        self._length[x] = total
        return total

    # -- reduced words and Omega -------------------------------------------

    def reduced_word(self, x):
        """x = omega_part * s_{i1} * ... * s_{ik} with k = len(x)."""
        out = self._rw.get(x)
        if out is not None:
            return out
        word = []
        cur = x
        lcur = self.length(cur)
        while lcur > 0:
            for i in range(self.num_generators):
                nxt = self.multiply(cur, self.simple_reflection(i))
                lnxt = self.length(nxt)
                if lnxt < lcur:
                    word.append(i)
                    cur, lcur = nxt, lnxt
                    break
            else:
                raise AssertionError("element of positive length has no descent")
        word.reverse()
        out = (cur, tuple(word))
        self._rw[x] = out
        return out

    def omega_part(self, x):
        return self.reduced_word(x)[0]

    def omega(self):
        """All length-zero elements, sorted canonically."""
        if self._omega is not None:
            return self._omega
        rd = self.rd
        out = [self.identity]
        # each nontrivial coset of Lambda/Q contains one minuscule dominant
        # weight; scan the 0/1 boxes of fundamental coordinates
        for mask in range(1, 1 << rd.rank):
            lam = tuple((mask >> i) & 1 for i in range(rd.rank))
            if not rd.lattice_contains(lam):
                continue
            if any(rd.pair(lam, cov) > 1 for cov in rd.positive_coroots):
                continue
            for k in range(len(rd.weyl)):
                cand = AffineWeylElement(self, lam, k)
                if self.length(cand) == 0:
                    out.append(cand)
                    break
        expected = rd.lattice_index_over_root_lattice()
        assert len(out) == expected, "Omega enumeration does not match [Lambda:Q]"
        out.sort(key=self.sort_key)
        self._omega = tuple(out)
        return self._omega

    def omega_generator(self):
        """Deterministic generator of Omega (maximal order, smallest key)."""
        if self._omega_gen is not None:
            return self._omega_gen
        best = self.identity
        best_order = 1
        for el in self.omega():
            if el == self.identity:
                continue
            order = 1
            cur = el
            while cur != self.identity:
                cur = self.multiply(cur, el)
                order += 1
            if order > best_order:
                best, best_order = el, order
        self._omega_gen = best
        return best

    # -- Bruhat order and coset combinatorics --------------------------------

    def bruhat_leq(self, x, w):
        """Subword order; elements in different Omega cosets are incomparable."""
        if x.group is not self or w.group is not self:
            raise DatumMismatchError("elements belong to different groups")
        if self.omega_part(x) != self.omega_part(w):
            return False
        return self._bruhat_rec(x, w)

    def _bruhat_rec(self, x, w):
        if x == w:
            return True
        lw = self.length(w)
        if self.length(x) >= lw:
            return False
        key = (x, w)
        out = self._bruhat.get(key)
        if out is not None:
            return out
        # lifting property along the first right descent of w
        for i in range(self.num_generators):
            s = self.simple_reflection(i)
            ws = self.multiply(w, s)
            if self.length(ws) < lw:
                xs = self.multiply(x, s)
                if self.length(xs) < self.length(x):
                    out = self._bruhat_rec(xs, ws)
                else:
                    out = self._bruhat_rec(x, ws)
                break
        else:
            raise AssertionError("no descent found")
        self._bruhat[key] = out
        return out

    def is_f_minimal(self, w):
        """True iff w is the minimal-length element of W_f * w."""
        out = self._fmin.get(w)
        if out is None:
            lw = self.length(w)
            out = all(self.length(self.multiply(self.simple_reflection(i), w)) > lw
                      for i in range(1, self.num_generators))
            self._fmin[w] = out
        return out

    def kappa(self, lam):
        """The unique f-minimal element of the coset W_f * t_lam."""
        lam = tuple(lam)
        out = self._kappa.get(lam)
        if out is not None:
            return out
        if not self.rd.lattice_contains(lam):
            raise ValueError("weight %r is outside the chosen lattice" % (lam,))
        found = None
        for k in range(len(self.rd.weyl)):
            cand = AffineWeylElement(self, self.rd.weyl.act(k, lam), k)
            if self.is_f_minimal(cand):
                assert found is None, "two f-minimal elements in one coset"
                found = cand
        assert found is not None, "coset without f-minimal element"
        self._kappa[lam] = found
        return found

    def kappa_inverse(self, w):
        """The weight lam with kappa(lam) = w, for f-minimal w."""
        k = self.rd.weyl.inverse[w.fin]
        return self.rd.weyl.act(k, w.trans)

    # -- enumeration ---------------------------------------------------------

    def enumerate_up_to_length(self, bound, max_elements=200_000):
        """All elements of length <= bound, sorted canonically."""
        if bound < 0:
            raise ValueError("bound must be non-negative")
        seen = set(self.omega())
        frontier = list(seen)
        level = 0
        while level < bound:
            new = []
            for x in frontier:
                for i in range(self.num_generators):
                    y = self.multiply(x, self.simple_reflection(i))
                    if y not in seen and self.length(y) == level + 1:
                        seen.add(y)
                        new.append(y)
                if len(seen) > max_elements:
                    raise ResourceBudgetError(
                        "enumeration bound %d exceeds the element budget (%d)"
                        % (bound, max_elements))
            frontier = new
            level += 1
        return sorted(seen, key=self.sort_key)

    def sort_key(self, w):
        return (self.length(w), w.trans, w.fin)

    # -- text form -------------------------------------------------------------

    def format(self, w):
        parts = []
        if any(w.trans):
            coords = self.rd.to_lattice_coords(w.trans)
            parts.append("t[%s]" % ",".join(str(c) for c in coords))
        if w.fin:
            parts.extend("s%d" % (i + 1) for i in self.rd.weyl.word[w.fin])
        return "*".join(parts) if parts else "e"

    def parse(self, text):
        s = text.strip()
        if not s:
            raise ParseError("empty element string")
        out = self.identity
        for tok in s.split("*"):
            tok = tok.strip()
            if tok == "e":
                continue
            if tok.startswith("t[") and tok.endswith("]"):
                inner = tok[2:-1]
                try:
                    coords = tuple(int(c) for c in inner.split(",")) if inner else ()
                except ValueError:
                    raise ParseError("bad translation %r" % tok) from None
                if len(coords) != self.rd.rank:
                    raise ParseError("translation rank mismatch in %r" % tok)
                out = self.multiply(out, self.translation(self.rd.from_lattice_coords(coords)))
            elif tok.startswith("pi"):
                k = 1
                if tok != "pi":
                    if not tok.startswith("pi^"):
                        raise ParseError("bad token %r" % tok)
                    try:
                        k = int(tok[3:])
                    except ValueError:
                        raise ParseError("bad token %r" % tok) from None
                gen = self.omega_generator()
                if k < 0:
                    gen = self.inverse(gen)
                    k = -k
                for _ in range(k):
                    out = self.multiply(out, gen)
            elif tok.startswith("s"):
                try:
                    i = int(tok[1:])
                except ValueError:
                    raise ParseError("bad token %r" % tok) from None
                if not 0 <= i <= self.rd.rank:
                    raise ParseError("generator index out of range in %r" % tok)
                out = self.multiply(out, self.simple_reflection(i))
            else:
                raise ParseError("bad token %r" % tok)
        return out


_group_cache = {}


def weyl_group(rd_or_label, lattice_kind="weight"):
    """Shared, cached group for a datum (or a label/lattice pair)."""
    rd = rd_or_label
    if isinstance(rd, str):
        rd = build_root_datum(rd, lattice_kind)
    grp = _group_cache.get(id(rd))
    if grp is None:
        grp = ExtendedAffineWeyl(rd)
        _group_cache[id(rd)] = grp
    return grp
