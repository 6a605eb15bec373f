"""Exact Laurent polynomials in one variable over the integers.

The default variable is v (the Hecke algebra parameter, q = v**2); the
same container doubles as a polynomial in q or t by passing a variable
name to :meth:`LaurentPoly.format` / :meth:`LaurentPoly.parse`.

The text format is frozen for golden files: terms in ascending exponent
order with explicit signs and a ``*`` between coefficient and power,
e.g. ``"v^-2 + 1 + 3*v^4"``.
"""

from __future__ import annotations

from .errors import ParseError


class LaurentPoly:
    """Sparse map exponent -> integer coefficient; no zero terms stored.

    Instances are immutable; all arithmetic returns new objects.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if isinstance(coeffs, int):
            if coeffs:
                c[0] = coeffs
        elif coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, a in items:
                a = c.get(e, 0) + a
                if a:
                    c[e] = a
                elif e in c:
                    del c[e]
        self._c = c

    @classmethod
    def term(cls, coeff, exp=0):
        p = cls()
        if coeff:
            p._c[exp] = coeff
        return p

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.term(1)

    @classmethod
    def v(cls, exp=1):
        return cls.term(1, exp)

    def items(self):
        """Term list sorted by ascending exponent."""
        return sorted(self._c.items())

    def coefficient(self, exp):
        return self._c.get(exp, 0)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        out = dict(self._c)
        for e, a in other._c.items():
            b = out.get(e, 0) + a
            if b:
                out[e] = b
            else:
                del out[e]
        p = LaurentPoly()
        p._c = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = LaurentPoly()
        p._c = {e: -a for e, a in self._c.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            p = LaurentPoly()
            p._c = {e: a * other for e, a in self._c.items()}
            return p
        out = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                b = out.get(e, 0) + a1 * a2
                if b:
                    out[e] = b
                elif e in out:
                    del out[e]
        p = LaurentPoly()
        p._c = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def bar(self):
        """The involution v -> v**-1 (exponent negation)."""
        p = LaurentPoly()
        p._c = {-e: a for e, a in self._c.items()}
        return p

    def shift(self, k):
        """Multiply by v**k."""
        p = LaurentPoly()
        p._c = {e + k: a for e, a in self._c.items()}
        return p

    def stretch(self, m):
        """Substitute v -> v**m (used for P(q) -> P(t^2))."""
        p = LaurentPoly()
        p._c = {e * m: a for e, a in self._c.items()}
        return p

    def evaluate_at_one(self):
        return sum(self._c.values())

    def degree(self):
        if not self._c:
            return None
        return max(self._c)

    def valuation(self):
        if not self._c:
            return None
        return min(self._c)

    def is_monomial_unit(self):
        """True iff the polynomial is +-v**k for some k."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    def format(self, var="v"):
        if not self._c:
            return "0"
        chunks = []
        for e, a in self.items():
            mag = abs(a)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else "%s^%d" % (var, e)
                body = power if mag == 1 else "%d*%s" % (mag, power)
            if not chunks:
                chunks.append(body if a > 0 else "-" + body)
            else:
                chunks.append(("+ " if a > 0 else "- ") + body)
        return " ".join(chunks)

    @classmethod
    def parse(cls, text, var="v"):
        s = text.strip()
        if s == "0":
            return cls()
        # split into signed terms; "-" after "^" belongs to an exponent
        terms = []
        cur = ""
        prev = ""
        for ch in s:
            if ch in "+-" and prev not in ("^", "") and not (ch == "-" and prev == "+"):
                terms.append(cur)
                cur = ch if ch == "-" else ""
            elif not ch.isspace():
                cur += ch
            if not ch.isspace():
                prev = ch
        terms.append(cur)
        out = {}
        for t in terms:
            if not t:
                raise ParseError("empty term in %r" % text)
            sign = 1
            if t[0] == "-":
                sign = -1
                t = t[1:]
            coeff = 1
            if "*" in t:
                c, t = t.split("*", 1)
                try:
                    coeff = int(c)
                except ValueError:
                    raise ParseError("bad coefficient %r" % c) from None
            if t.startswith(var):
                rest = t[len(var):]
                if rest == "":
                    exp = 1
                elif rest.startswith("^"):
                    try:
                        exp = int(rest[1:])
                    except ValueError:
                        raise ParseError("bad exponent in %r" % t) from None
                else:
                    raise ParseError("bad term %r" % t)
            else:
                try:
                    coeff = int(t) * coeff
                except ValueError:
                    raise ParseError("bad term %r" % t) from None
                exp = 0
            out[exp] = out.get(exp, 0) + sign * coeff
        return cls(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "LaurentPoly(%r)" % self.format()
