"""The anti-spherical right module over the affine Hecke algebra.

Standard basis m_w = m_e * T_w indexed by the f-minimal coset
representatives; m_e spans the sign character of the finite subalgebra
(m_e T_s = -m_e for finite simple s).  The right action on the basis:

    m_w T_s = m_{ws}                      if ws f-minimal, len up
    m_w T_s = (v^2-1) m_w + v^2 m_{ws}    if len down
    m_w T_s = -m_w                        if ws not f-minimal
    m_w T_pi = m_{w pi}

The module is also realized as the quotient of the algebra by the span
of the C'_w with w not f-minimal; ``project_from_hecke`` computes that
quotient by eliminating non-minimal T-terms against C' elements in
length-decreasing order.  Agreement of the two realizations is a
theorem-level test, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DatumMismatchError
from .hecke import HeckeAlgebra, HeckeElement
from .laurent import LaurentPoly


class AntisphericalElement:
    """Finite sum of standard basis vectors m_w, w f-minimal."""

    __slots__ = ("module", "terms")

    def __init__(self, module, terms):
        self.module = module
        self.terms = {w: c for w, c in terms.items() if c}

    def coefficient(self, w):
        return self.terms.get(w, LaurentPoly.zero())

    def support(self):
        return set(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, AntisphericalElement)
                and self.module is other.module
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.module), frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, LaurentPoly.zero()) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return AntisphericalElement(self.module, out)

    def __neg__(self):
        return AntisphericalElement(self.module, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, poly):
        if isinstance(poly, int):
            poly = LaurentPoly.term(poly)
        if not poly:
            return AntisphericalElement(self.module, {})
        return AntisphericalElement(self.module, {w: c * poly for w, c in self.terms.items()})

    def __mul__(self, h):
        if isinstance(h, (int, LaurentPoly)):
            return self.scale(h)
        return self.module.act(self, h)

    def __str__(self):
        return self.module.algebra.format_element(
            HeckeElement(self.module.algebra, self.terms), basis="m")

    def __repr__(self):
        return "AntisphericalElement(%s)" % self


@dataclass
class FreenessRow:
    lam: tuple
    kappa: object
    element: AntisphericalElement


class FreenessMatrix:
    """Expansion of m_e * theta_lam over the standard basis for all lam
    with len(kappa(lam)) <= bound; certifies rank-1 freeness when it is
    Bruhat-upper-triangular with monomial-unit diagonal."""

    def __init__(self, rows, group):
        self.rows = rows
        self.group = group

    def diagonal(self):
        return [(row.lam, row.element.coefficient(row.kappa)) for row in self.rows]

    def is_unitriangular(self):
        for row in self.rows:
            if not row.element.coefficient(row.kappa).is_monomial_unit():
                return False
            for w in row.element.support():
                if w != row.kappa and not self.group.bruhat_leq(w, row.kappa):
                    return False
        return True

    def is_invertible(self):
        # triangular over Z[v, v^-1] with unit diagonal
        return self.is_unitriangular()


class AntisphericalModule:
    """Right module over a HeckeAlgebra in its two realizations."""

    def __init__(self, algebra: HeckeAlgebra):
        self.algebra = algebra
        self.group = algebra.group

    def unit(self):
        return AntisphericalElement(self, {self.group.identity: LaurentPoly.one()})

    def m(self, w):
        if w.group is not self.group:
            raise DatumMismatchError("element belongs to a different group")
        if not self.group.is_f_minimal(w):
            raise ValueError("%s is not f-minimal" % self.group.format(w))
        return AntisphericalElement(self, {w: LaurentPoly.one()})

    def element(self, terms):
        for w in terms:
            if not self.group.is_f_minimal(w):
                raise ValueError("%s is not f-minimal" % self.group.format(w))
        return AntisphericalElement(self, dict(terms))

    # -- the right action ---------------------------------------------------

    def _act_gen(self, m, i):
        s = self.group.simple_reflection(i)
        glen = self.group.length
        qm1 = LaurentPoly({2: 1, 0: -1})
        q = LaurentPoly.v(2)
        out = {}

        def add(w, c):
            t = out.get(w, LaurentPoly.zero()) + c
            if t:
                out[w] = t
            elif w in out:
                del out[w]

        for w, c in m.terms.items():
            ws = self.group.multiply(w, s)
            if not self.group.is_f_minimal(ws):
                add(w, -c)
            elif glen(ws) > glen(w):
                add(ws, c)
            else:
                add(w, c * qm1)
                add(ws, c * q)
        return AntisphericalElement(self, out)

    def _act_omega(self, m, omega):
        if omega == self.group.identity:
            return m
        return AntisphericalElement(
            self, {self.group.multiply(w, omega): c for w, c in m.terms.items()})

    def act(self, m, h):
        """m * h for a Hecke element h (right action)."""
        if h.algebra is not self.algebra or m.module is not self:
            raise DatumMismatchError("operands over different algebras")
        out = AntisphericalElement(self, {})
        for w, c in h.terms.items():
            omega, word = self.group.reduced_word(w)
            acc = self._act_omega(m, omega)
            for i in word:
                acc = self._act_gen(acc, i)
            out = out + acc.scale(c)
        return out

    # -- quotient realization -------------------------------------------------

    def project_from_hecke(self, h):
        """Image of h in the quotient by the span of C'_w, w not f-minimal,
        written in the residual basis m_w = image of T_w."""
        if h.algebra is not self.algebra:
            raise DatumMismatchError("element over a different algebra")
        work = dict(h.terms)
        glen = self.group.length
        while True:
            bad = [w for w in work if not self.group.is_f_minimal(w)]
            if not bad:
                break
            # eliminate in Bruhat-decreasing order: maximal length first,
            # ties broken by the canonical element ordering
            x = max(bad, key=lambda w: (glen(w), w.trans, w.fin))
            c = work.pop(x)
            cprime = self.algebra.kl_basis(x)
            factor = c * LaurentPoly.v(glen(x))
            for y, d in cprime.terms.items():
                if y == x:
                    continue
                s = work.get(y, LaurentPoly.zero()) - factor * d
                if s:
                    work[y] = s
                elif y in work:
                    del work[y]
        return AntisphericalElement(self, work)

    # -- the Bernstein basis ---------------------------------------------------

    def theta_basis(self, lam):
        """m_e * theta_lam."""
        return self.act(self.unit(), self.algebra.theta(tuple(lam)))

    def a_freeness_matrix(self, bound):
        """Rows for every lam with len(kappa(lam)) <= bound, sorted by the
        canonical order on kappa(lam)."""
        rows = []
        for w in self.group.enumerate_up_to_length(bound):
            if not self.group.is_f_minimal(w):
                continue
            lam = self.group.kappa_inverse(w)
            rows.append(FreenessRow(lam, w, self.theta_basis(lam)))
        rows.sort(key=lambda r: self.group.sort_key(r.kappa))
        return FreenessMatrix(rows, self.group)

    # -- output forms ------------------------------------------------------------

    def format_element(self, m):
        return str(m)

    def element_to_json(self, m):
        return self.algebra.element_to_json(
            HeckeElement(self.algebra, m.terms), basis="m")
