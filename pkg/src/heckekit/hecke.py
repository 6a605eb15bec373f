"""The affine Hecke algebra over Z[v, v^-1] in the T-basis.

Normalization: T_s^2 = (v^2 - 1) T_s + v^2, and T_pi T_w = T_{pi w} for
length-zero pi.  Products are computed one simple reflection at a time
along reduced words; theta_lam = v^{-len(t_lam)} T_{t_lam} for dominant
lam, extended multiplicatively.  The Kazhdan-Lusztig basis is the
self-dual C'-basis with non-negative P coefficients.

Text form of an element (frozen): terms sorted by (length, translation,
finite part), e.g. ``"(v^-1)*T(t[-1]) + (v^-1 - v)*T(t[1]*s1)"``.  JSON
form: list of ``{"element": ..., "coeff": ...}`` in the same order.

The per-algebra memo tables (inverses, theta, KL) are idempotent caches;
concurrent calls return identical results.
"""

from __future__ import annotations

import os

from .affine_weyl import ExtendedAffineWeyl, weyl_group
from .errors import DatumMismatchError, NotDominantError, ResourceBudgetError
from .laurent import LaurentPoly

DEFAULT_KL_BUDGET = 10
KL_BUDGET_ENV = "HECKEKIT_KL_BUDGET"


class HeckeElement:
    """Finite formal sum of T_w with Laurent polynomial coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c}

    def coefficient(self, w):
        return self.terms.get(w, LaurentPoly.zero())

    def support(self):
        return set(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, HeckeElement)
                and self.algebra is other.algebra
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, LaurentPoly.zero()) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return HeckeElement(self.algebra, out)

    def __neg__(self):
        return HeckeElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, poly):
        if isinstance(poly, int):
            poly = LaurentPoly.term(poly)
        if not poly:
            return self.algebra.zero()
        return HeckeElement(self.algebra, {w: c * poly for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return self.algebra.multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __str__(self):
        return self.algebra.format_element(self)

    def __repr__(self):
        return "HeckeElement(%s)" % self


class GroupAlgebraElement:
    """Element of the integral group ring Z[W]; the image of the Hecke
    algebra under the specialization v -> 1."""

    __slots__ = ("group", "terms")

    def __init__(self, group, terms):
        self.group = group
        self.terms = {w: int(c) for w, c in terms.items() if c}

    def coefficient(self, w):
        return self.terms.get(w, 0)

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement)
                and self.group is other.group
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.group), frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return GroupAlgebraElement(self.group, out)

    def __neg__(self):
        return GroupAlgebraElement(self.group, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupAlgebraElement(self.group, {w: c * other for w, c in self.terms.items()})
        if other.group is not self.group:
            raise DatumMismatchError("group ring elements over different groups")
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = self.group.multiply(w1, w2)
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
        return GroupAlgebraElement(self.group, out)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: self.group.sort_key(kv[0]))
        return " + ".join("%d*(%s)" % (c, self.group.format(w)) for w, c in items)

    def __repr__(self):
        return "GroupAlgebraElement(%s)" % self


class HeckeAlgebra:
    """T-basis arithmetic plus the Bernstein and Kazhdan-Lusztig layers."""

    def __init__(self, group_or_rd, kl_budget=None):
        if isinstance(group_or_rd, ExtendedAffineWeyl):
            self.group = group_or_rd
        else:
            self.group = weyl_group(group_or_rd)
        self.rd = self.group.rd
        if kl_budget is None:
            kl_budget = int(os.environ.get(KL_BUDGET_ENV, DEFAULT_KL_BUDGET))
        self.kl_budget = kl_budget
        self._tinv = {}
        self._theta = {}
        self._bar_t = {}
        self._kl = {}
        self._center = {}
        self._wakimoto = {}

    # -- constructors -----------------------------------------------------

    def zero(self):
        return HeckeElement(self, {})

    def one(self):
        return self.t(self.group.identity)

    def t(self, w):
        if w.group is not self.group:
            raise DatumMismatchError("element belongs to a different group")
        return HeckeElement(self, {w: LaurentPoly.one()})

    def element(self, terms):
        return HeckeElement(self, dict(terms))

    # -- product ------------------------------------------------------------

    def _left_mul_gen(self, i, h):
        """T_{s_i} * h via the quadratic relation."""
        s = self.group.simple_reflection(i)
        glen = self.group.length
        out = {}
        qm1 = LaurentPoly({2: 1, 0: -1})
        q = LaurentPoly.v(2)

        def add(w, c):
            s0 = out.get(w, LaurentPoly.zero()) + c
            if s0:
                out[w] = s0
            elif w in out:
                del out[w]

        for w, c in h.terms.items():
            sw = self.group.multiply(s, w)
            if glen(sw) > glen(w):
                add(sw, c)
            else:
                add(w, c * qm1)
                add(sw, c * q)
        return HeckeElement(self, out)

    def _right_mul_gen(self, h, i):
        s = self.group.simple_reflection(i)
        glen = self.group.length
        out = {}
        qm1 = LaurentPoly({2: 1, 0: -1})
        q = LaurentPoly.v(2)

        def add(w, c):
            s0 = out.get(w, LaurentPoly.zero()) + c
            if s0:
                out[w] = s0
            elif w in out:
                del out[w]

        for w, c in h.terms.items():
            ws = self.group.multiply(w, s)
            if glen(ws) > glen(w):
                add(ws, c)
            else:
                add(w, c * qm1)
                add(ws, c * q)
        return HeckeElement(self, out)

    def _left_mul_t(self, w, h):
        """T_w * h along a reduced word of w."""
        omega, word = self.group.reduced_word(w)
        acc = h
        for i in reversed(word):
            acc = self._left_mul_gen(i, acc)
        if omega != self.group.identity:
            acc = HeckeElement(self, {self.group.multiply(omega, x): c
                                      for x, c in acc.terms.items()})
        return acc

    def _right_mul_t(self, h, w):
        """h * T_w along a reduced word of w."""
        omega, word = self.group.reduced_word(w)
        if omega != self.group.identity:
            h = HeckeElement(self, {self.group.multiply(x, omega): c
                                    for x, c in h.terms.items()})
        acc = h
        for i in word:
            acc = self._right_mul_gen(acc, i)
        return acc

    def multiply(self, h1, h2):
        if h1.algebra is not self or h2.algebra is not self:
            raise DatumMismatchError("elements belong to different algebras")
        glen = self.group.length
        cost1 = sum(1 + glen(w) for w in h1.terms)
        cost2 = sum(1 + glen(w) for w in h2.terms)
        out = self.zero()
        if cost1 <= cost2:
            for w, c in h1.terms.items():
                out = out + self._left_mul_t(w, h2).scale(c)
        else:
            for w, c in h2.terms.items():
                out = out + self._right_mul_t(h1, w).scale(c)
        return out

    # -- inverses and the bar involution ---------------------------------------

    def t_inverse(self, w):
        """T_w^{-1}, built from T_s^{-1} = v^-2 T_s + (v^-2 - 1) T_e."""
        out = self._tinv.get(w)
        if out is not None:
            return out
        omega, word = self.group.reduced_word(w)
        acc = self.t(self.group.inverse(omega))
        vm2 = LaurentPoly.v(-2)
        vm2m1 = LaurentPoly({-2: 1, 0: -1})
        for i in word:
            acc = self._left_mul_gen(i, acc).scale(vm2) + acc.scale(vm2m1)
        self._tinv[w] = acc
        return acc

    def bar_involution(self, h):
        """Ring involution with v -> v^-1 and T_w -> (T_{w^-1})^{-1}."""
        out = self.zero()
        for w, c in h.terms.items():
            barT = self._bar_t.get(w)
            if barT is None:
                barT = self.t_inverse(self.group.inverse(w))
                self._bar_t[w] = barT
            out = out + barT.scale(c.bar())
        return out

    # -- Bernstein elements -------------------------------------------------

    def _dominant_decomposition(self, lam):
        """lam = mu - nu with both parts dominant and in the lattice; nu is
        the minimal-height dominant lattice weight covering the negative
        part of lam componentwise."""
        rd = self.rd
        tau = tuple(max(-x, 0) for x in lam)
        if not any(tau):
            return lam, (0,) * rd.rank
        if rd.lattice_kind == "weight":
            nu = tau
        else:
            # a multiple of 2*rho (always in Q) bounds the search height
            n = max(0, -(-max(tau) // 2))
            cap = rd.height2rho(tuple(2 * n for _ in range(rd.rank)))
            nu = next(cand for cand in rd.dominant_weights_up_to(cap)
                      if all(c >= t for c, t in zip(cand, tau)))
        mu = tuple(l + y for l, y in zip(lam, nu))
        return mu, nu

    def theta(self, lam):
        """theta_lam = v^{-len(t_mu)} T_{t_mu} * (v^{-len(t_nu)} T_{t_nu})^{-1}
        for any decomposition lam = mu - nu with mu, nu dominant."""
        lam = tuple(lam)
        out = self._theta.get(lam)
        if out is not None:
            return out
        mu, nu = self._dominant_decomposition(lam)
        out = self.theta_from_decomposition(mu, nu)
        self._theta[lam] = out
        return out

    def theta_from_decomposition(self, mu, nu):
        """The theta element from an explicit dominant pair; exposed so the
        decomposition-independence property can be tested directly."""
        if not (self.rd.is_dominant(mu) and self.rd.is_dominant(nu)):
            raise NotDominantError("decomposition parts must be dominant")
        tmu = self.group.translation(mu)
        tnu = self.group.translation(nu)
        shift = self.group.length(tnu) - self.group.length(tmu)
        if not any(nu):
            return self.t(tmu).scale(LaurentPoly.v(shift))
        return self.multiply(self.t(tmu), self.t_inverse(tnu)).scale(LaurentPoly.v(shift))

    def center_element(self, lam):
        """z_lam = sum over weights mu of V_lam of mult * theta_mu; lies in
        the center of the algebra."""
        lam = tuple(lam)
        out = self._center.get(lam)
        if out is not None:
            return out
        if not self.rd.is_dominant(lam):
            raise NotDominantError("center_element requires a dominant weight")
        out = self.zero()
        for mu, m in sorted(self.rd.weights_of(lam).items()):
            out = out + self.theta(mu).scale(m)
        self._center[lam] = out
        return out

    # -- Kazhdan-Lusztig basis -------------------------------------------------

    def kl_basis(self, w):
        """The self-dual element C'_w = v^{-len(w)} sum_{x<=w} P_{x,w}(v^2) T_x."""
        out = self._kl.get(w)
        if out is not None:
            return out
        if self.group.length(w) > self.kl_budget:
            raise ResourceBudgetError(
                "KL element of length %d exceeds budget %d (set %s or kl_budget)"
                % (self.group.length(w), self.kl_budget, KL_BUDGET_ENV))
        omega, word = self.group.reduced_word(w)
        if not word:
            out = self.t(w)
        elif omega != self.group.identity:
            u = self.group.multiply(self.group.inverse(omega), w)
            base = self.kl_basis(u)
            out = HeckeElement(self, {self.group.multiply(omega, x): c
                                      for x, c in base.terms.items()})
        else:
            s = word[0]
            u = self.group.multiply(self.group.simple_reflection(s), w)
            cu = self.kl_basis(u)
            vm1 = LaurentPoly.v(-1)
            out = self._left_mul_gen(s, cu).scale(vm1) + cu.scale(vm1)
            glen = self.group.length
            srefl = self.group.simple_reflection(s)
            for x in sorted(cu.terms, key=self.group.sort_key):
                if glen(self.group.multiply(srefl, x)) < glen(x):
                    mu_coeff = cu.terms[x].coefficient(-glen(x) - 1)
                    if mu_coeff:
                        out = out - self.kl_basis(x).scale(mu_coeff)
        self._kl[w] = out
        return out

    def kl_polynomial(self, x, w):
        """P_{x,w} as a polynomial in q (zero unless x <= w)."""
        c = self.kl_basis(w).coefficient(x)
        if not c:
            return LaurentPoly.zero()
        p = c.shift(self.group.length(w))
        out = {}
        for e, a in p.items():
            assert e >= 0 and e % 2 == 0, "odd v-exponent in a KL polynomial"
            out[e // 2] = a
        return LaurentPoly(out)

    # -- specialization to the group ring ------------------------------------

    def specialize_v1(self, h):
        """Ring map to Z[W]: T_w -> w, v -> 1."""
        return GroupAlgebraElement(
            self.group, {w: c.evaluate_at_one() for w, c in h.terms.items()})

    def wakimoto_class(self, w):
        """Group-ring class of the Wakimoto element attached to w = t_lam * w_f:
        the specialization of theta_lam * T_{w_f} (equal to w itself)."""
        out = self._wakimoto.get(w)
        if out is None:
            theta = self.theta(w.trans)
            prod = self._right_mul_t(theta, self.group.finite_element(w.fin))
            out = self.specialize_v1(prod)
            self._wakimoto[w] = out
        return out

    def euler_pairing(self, w, wprime):
        """(-1)^{len(w)} times the coefficient of w in the Wakimoto class of
        wprime; evaluates to (-1)^{len(w)} * delta_{w, wprime}."""
        cls = self.wakimoto_class(wprime)
        sign = -1 if self.group.length(w) % 2 else 1
        return sign * cls.coefficient(w)

    # -- frozen output forms -----------------------------------------------------

    def format_element(self, h, basis="T"):
        if not h.terms:
            return "0"
        items = sorted(h.terms.items(), key=lambda kv: self.group.sort_key(kv[0]))
        return " + ".join("(%s)*%s(%s)" % (c.format(), basis, self.group.format(w))
                          for w, c in items)

    def element_to_json(self, h, basis=None):
        items = sorted(h.terms.items(), key=lambda kv: self.group.sort_key(kv[0]))
        out = []
        for w, c in items:
            entry = {"element": self.group.format(w), "coeff": c.format()}
            if basis:
                entry["basis"] = basis
            out.append(entry)
        return out


_algebra_cache = {}


def hecke_algebra(rd_or_label, lattice_kind="weight", kl_budget=None):
    """Shared, cached algebra instance per (datum, budget)."""
    group = weyl_group(rd_or_label, lattice_kind)
    key = (id(group), kl_budget)
    alg = _algebra_cache.get(key)
    if alg is None:
        alg = HeckeAlgebra(group, kl_budget)
        _algebra_cache[key] = alg
    return alg
