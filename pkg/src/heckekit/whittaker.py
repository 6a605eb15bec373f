"""q-analogues of weight multiplicity and Whittaker-trace polynomials.

P_{lam,mu}(q) is the alternating Weyl-group sum of q-Kostant partition
values at w(lam+rho) - (mu+rho); it specializes at q = 1 to the weight
multiplicity.  The trace polynomial is

    Q_{lam,mu}(t) = t^{len(t_lam) + len(w_0)} * P_{lam,mu+}(t^2)

with mu reduced to its dominant representative mu+, so the Weyl
invariance Q_{lam,mu} = Q_{lam,w(mu)} holds by construction.  The
exponent convention len(lam) = len(t_lam) = <lam, 2 rho_vee> is isolated
in :func:`translation_length`.  No parity normalization is applied: a
table stores exactly the formula's output.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .affine_weyl import weyl_group
from .errors import NotDominantError
from .hecke import HeckeAlgebra
from .laurent import LaurentPoly


def translation_length(rd, lam):
    """The reading of len(lam) used in the trace exponent: the length of
    the translation by dominant lam, <lam, 2 rho_vee>."""
    return rd.height2rho(lam)


def lusztig_q_analogue_unreduced(rd, lam, mu):
    """The raw alternating sum at an arbitrary mu (no dominant reduction).
    At q = 1 this is the Kostant multiplicity formula, invariant under the
    finite Weyl group acting on mu; the polynomial itself is not."""
    if not rd.is_dominant(lam):
        raise NotDominantError("highest weight %r is not dominant" % (lam,))
    lam_rho = tuple(x + 1 for x in lam)
    mu_rho = tuple(x + 1 for x in mu)
    out = LaurentPoly.zero()
    for k in range(len(rd.weyl)):
        shifted = rd.weyl.act(k, lam_rho)
        arg = tuple(a - b for a, b in zip(shifted, mu_rho))
        term = rd.kostant_partition_q(arg)
        if term:
            if rd.weyl.length[k] % 2:
                out = out - term
            else:
                out = out + term
    return out


def lusztig_q_analogue(rd, lam, mu):
    """P_{lam,mu}(q), with mu reduced to its dominant representative."""
    if not rd.is_dominant(lam):
        raise NotDominantError("highest weight %r is not dominant" % (lam,))
    return lusztig_q_analogue_unreduced(rd, lam, rd.dominant_representative(tuple(mu)))


def whittaker_trace(rd, lam, mu):
    """Q_{lam,mu}(t) = t^{len(t_lam)+len(w_0)} P_{lam,mu+}(t^2)."""
    if not rd.is_dominant(lam):
        raise NotDominantError("highest weight %r is not dominant" % (lam,))
    p = lusztig_q_analogue(rd, lam, mu)
    exp = translation_length(rd, lam) + rd.weyl.length[rd.weyl.longest]
    return p.stretch(2).shift(exp)


@dataclass
class WhittakerRow:
    mu: tuple
    kappa_mu: object
    p_poly: LaurentPoly
    q_poly: LaurentPoly
    q_at_one: int
    freudenthal_mult: int

    @property
    def match(self):
        return self.q_at_one == self.freudenthal_mult


CSV_COLUMNS = ("lambda", "mu", "kappa_mu", "P_q", "Q_t", "Q_at_1",
               "freudenthal_mult", "match")


class QWeightTable:
    """Trace polynomials for every weight of one irreducible module,
    rows keyed by kappa(mu).  Lookups outside the weight hull return the
    zero polynomial (the vanishing verdict)."""

    def __init__(self, rd, lam, rows):
        self.rd = rd
        self.lam = lam
        self.rows = rows
        self._by_mu = {row.mu: row for row in rows}

    def p(self, mu):
        row = self._by_mu.get(tuple(mu))
        return row.p_poly if row else lusztig_q_analogue(self.rd, self.lam, mu)

    def q(self, mu):
        row = self._by_mu.get(tuple(mu))
        return row.q_poly if row else whittaker_trace(self.rd, self.lam, mu)

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        lam_s = "[%s]" % ",".join(str(x) for x in self.lam)
        group = weyl_group(self.rd)
        for row in self.rows:
            writer.writerow([
                lam_s,
                "[%s]" % ",".join(str(x) for x in row.mu),
                group.format(row.kappa_mu),
                row.p_poly.format("q"),
                row.q_poly.format("t"),
                row.q_at_one,
                row.freudenthal_mult,
                str(row.match).lower(),
            ])
        return buf.getvalue()

    def to_json(self):
        group = weyl_group(self.rd)
        return json.dumps({
            "schema": 1,
            "type": self.rd.label,
            "lattice": self.rd.lattice_kind,
            "lambda": list(self.lam),
            "rows": [{
                "mu": list(row.mu),
                "kappa_mu": group.format(row.kappa_mu),
                "P_q": row.p_poly.format("q"),
                "Q_t": row.q_poly.format("t"),
                "Q_at_1": row.q_at_one,
                "freudenthal_mult": row.freudenthal_mult,
                "match": row.match,
            } for row in self.rows],
        }, sort_keys=True, indent=2)


def whittaker_table(rd, lam):
    """Rows for every weight mu of the module with highest weight lam;
    weights outside the hull have identically zero trace (the module-
    theoretic vanishing verdict) and are not listed."""
    lam = tuple(lam)
    if not rd.is_dominant(lam):
        raise NotDominantError("highest weight %r is not dominant" % (lam,))
    group = weyl_group(rd)
    weights = rd.weights_of(lam)
    rows = []
    for mu, mult in weights.items():
        p = lusztig_q_analogue(rd, lam, mu)
        q = whittaker_trace(rd, lam, mu)
        rows.append(WhittakerRow(mu, group.kappa(mu), p, q,
                                 q.evaluate_at_one(), mult))
    rows.sort(key=lambda r: group.sort_key(r.kappa_mu))
    return QWeightTable(rd, lam, rows)


def compare_with_kl(algebra: HeckeAlgebra, lam, mu, x, w):
    """Cross-check hook: P_{lam,mu} against the Kazhdan-Lusztig polynomial
    P_{x,w} for a caller-supplied pair of group elements.  No automatic
    choice of (x, w) is made."""
    p = lusztig_q_analogue(algebra.rd, tuple(lam), tuple(mu))
    klp = algebra.kl_polynomial(x, w)
    return p, klp, p == klp
