"""Named verification suites over the exact identities of the library.

Each suite executes the invariants of one layer (algebra structure,
Bernstein elements, center, group-ring specialization, anti-spherical
module, Euler pairing, trace polynomials) at a caller-chosen bound.
Random instances are drawn from a seeded generator recorded in the
report; reports serialize deterministically for a fixed seed (timing is
kept out of the serialized forms unless explicitly requested).

Suite name -> content map:
  braid     - quadratic/braid relations, associativity, inverses,
              Kazhdan-Lusztig self-duality and P-positivity
  theta     - decomposition independence and commutativity of theta
  center    - centrality of z_lam, tensor compatibility
  kgroup    - specialization to Z[W]: theta -> t_lam, z -> character
  masp      - module axioms, realization equivalence, kernel property,
              central compatibility, rank-1 freeness
  euler     - Wakimoto classes and the Euler pairing delta identity
  whittaker - Q(1) = weight multiplicity, Weyl invariance at q = 1,
              positivity and degree bound of P
  all       - everything above
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from .affine_weyl import weyl_group
from .antispherical import AntisphericalModule
from .errors import UnknownLabelError
from .hecke import HeckeAlgebra
from .laurent import LaurentPoly
from .root_datum import build_root_datum
from .whittaker import (lusztig_q_analogue, lusztig_q_analogue_unreduced,
                        whittaker_trace)

SUITE_NAMES = ("braid", "theta", "center", "kgroup", "masp", "euler",
               "whittaker", "all")

DEFAULT_BOUNDS = {"braid": 6, "theta": 3, "center": 6, "kgroup": 4,
                  "masp": 6, "euler": 6, "whittaker": 8}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    datum: str
    lattice: str
    bound: int
    seed: int
    checks: list = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_dict(self, include_timing=False):
        out = {
            "schema": 1,
            "suite": self.suite,
            "datum": self.datum,
            "lattice": self.lattice,
            "bound": self.bound,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [{"name": c.name,
                        "status": "pass" if c.passed else "fail",
                        "detail": c.detail}
                       for c in sorted(self.checks, key=lambda c: c.name)],
        }
        if include_timing:
            out["duration_s"] = round(self.duration, 3)
        return out

    def to_json(self, include_timing=False):
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)

    def to_text(self, include_timing=False):
        lines = []
        for c in sorted(self.checks, key=lambda c: c.name):
            status = "PASS" if c.passed else "FAIL"
            line = "%s %s" % (status, c.name)
            if c.detail:
                line += "  [%s]" % c.detail
            lines.append(line)
        verdict = "pass" if self.passed else "FAIL"
        summary = "suite=%s datum=%s lattice=%s bound=%d seed=%d: %s" % (
            self.suite, self.datum, self.lattice, self.bound, self.seed, verdict)
        if include_timing:
            summary += " (%.3fs)" % self.duration
        lines.append(summary)
        return "\n".join(lines)


def random_element(group, rng, max_len):
    """Product of max_len random generators and a random Omega element."""
    w = rng.choice(group.omega())
    for _ in range(max_len):
        w = group.multiply(w, group.simple_reflection(rng.randrange(group.num_generators)))
    return w


def _coxeter_order(group, i, j, cap=24):
    prod = group.multiply(group.simple_reflection(i), group.simple_reflection(j))
    cur = prod
    order = 1
    while cur != group.identity:
        cur = group.multiply(cur, prod)
        order += 1
        if order > cap:
            return None
    return order


# -- algebra structure ---------------------------------------------------------


def check_quadratic(alg):
    ok = True
    detail = ""
    for i in range(alg.group.num_generators):
        ts = alg.t(alg.group.simple_reflection(i))
        lhs = alg.multiply(ts, ts)
        rhs = ts.scale(LaurentPoly({2: 1, 0: -1})) + alg.one().scale(LaurentPoly.v(2))
        if lhs != rhs:
            ok, detail = False, "generator %d" % i
            break
    return [CheckResult("braid/quadratic-relation", ok, detail)]


def check_braid(alg):
    group = alg.group
    ok = True
    detail = ""
    for i in range(group.num_generators):
        for j in range(i + 1, group.num_generators):
            m = _coxeter_order(group, i, j)
            if m is None:
                continue
            ti = alg.t(group.simple_reflection(i))
            tj = alg.t(group.simple_reflection(j))
            lhs = alg.one()
            rhs = alg.one()
            for k in range(m):
                lhs = alg.multiply(lhs, ti if k % 2 == 0 else tj)
                rhs = alg.multiply(rhs, tj if k % 2 == 0 else ti)
            if lhs != rhs:
                ok, detail = False, "pair (%d, %d), order %d" % (i, j, m)
                break
        if not ok:
            break
    return [CheckResult("braid/braid-relations", ok, detail)]


def check_associativity(alg, rng, count, max_len):
    group = alg.group
    ok = True
    detail = ""
    for n in range(count):
        x = alg.t(random_element(group, rng, max_len))
        y = alg.t(random_element(group, rng, max_len))
        z = alg.t(random_element(group, rng, max_len))
        if alg.multiply(alg.multiply(x, y), z) != alg.multiply(x, alg.multiply(y, z)):
            ok, detail = False, "triple #%d" % n
            break
    return [CheckResult("braid/associativity-%d" % count, ok, detail)]


def check_inverses(alg, rng, count, max_len):
    group = alg.group
    ok = True
    detail = ""
    for n in range(count):
        w = random_element(group, rng, max_len)
        if alg.multiply(alg.t_inverse(w), alg.t(w)) != alg.one():
            ok, detail = False, group.format(w)
            break
        if alg.multiply(alg.t(w), alg.t_inverse(w)) != alg.one():
            ok, detail = False, group.format(w)
            break
    return [CheckResult("braid/t-inverses-%d" % count, ok, detail)]


def check_bar_selfdual(alg, bound):
    group = alg.group
    out = []
    ok_dual = True
    ok_pos = True
    detail_dual = ""
    detail_pos = ""
    for w in group.enumerate_up_to_length(bound):
        c = alg.kl_basis(w)
        if alg.bar_involution(c) != c:
            ok_dual, detail_dual = False, group.format(w)
            break
        for x in c.support():
            p = alg.kl_polynomial(x, w)
            if any(a < 0 for _, a in p.items()):
                ok_pos = False
                detail_pos = "P_{%s, %s} = %s" % (
                    group.format(x), group.format(w), p.format("q"))
    out.append(CheckResult("braid/kl-self-duality(len<=%d)" % bound, ok_dual, detail_dual))
    out.append(CheckResult("braid/kl-positivity(len<=%d)" % bound, ok_pos, detail_pos))
    return out


# -- Bernstein elements ---------------------------------------------------------


def check_theta_independence(alg, rng, count, box=3):
    rd = alg.rd
    ok = True
    detail = ""
    for n in range(count):
        coords = tuple(rng.randint(-box, box) for _ in range(rd.rank))
        lam = rd.from_lattice_coords(coords)
        shift_coords = tuple(rng.randint(0, box) for _ in range(rd.rank))
        shift = rd.from_lattice_coords(shift_coords)
        shift = rd.dominant_representative(shift)
        mu0, nu0 = alg._dominant_decomposition(lam)
        mu1 = tuple(a + b for a, b in zip(mu0, shift))
        nu1 = tuple(a + b for a, b in zip(nu0, shift))
        if not (rd.lattice_contains(mu1) and rd.lattice_contains(nu1)):
            continue
        if alg.theta_from_decomposition(mu0, nu0) != alg.theta_from_decomposition(mu1, nu1):
            ok, detail = False, "lam lattice coords %r" % (coords,)
            break
    return [CheckResult("theta/decomposition-independence-%d" % count, ok, detail)]


def check_theta_commutativity(alg, rng, count, box=2):
    rd = alg.rd
    ok = True
    detail = ""
    for n in range(count):
        a = rd.from_lattice_coords(tuple(rng.randint(-box, box) for _ in range(rd.rank)))
        b = rd.from_lattice_coords(tuple(rng.randint(-box, box) for _ in range(rd.rank)))
        tab = alg.multiply(alg.theta(a), alg.theta(b))
        tba = alg.multiply(alg.theta(b), alg.theta(a))
        tsum = alg.theta(tuple(x + y for x, y in zip(a, b)))
        if not (tab == tba == tsum):
            ok, detail = False, "pair %r, %r" % (a, b)
            break
    checks = [CheckResult("theta/commutativity-%d" % count, ok, detail)]
    checks.append(CheckResult("theta/theta-zero-is-unit",
                              alg.theta((0,) * rd.rank) == alg.one()))
    return checks


# -- center -----------------------------------------------------------------------


def check_center(alg, bound):
    group = alg.group
    rd = alg.rd
    ok = True
    detail = ""
    for lam in rd.dominant_weights_up_to(bound):
        z = alg.center_element(lam)
        for i in range(group.num_generators):
            ts = alg.t(group.simple_reflection(i))
            if alg.multiply(z, ts) != alg.multiply(ts, z):
                ok, detail = False, "z_%r vs s_%d" % (lam, i)
                break
        if ok:
            for pi in group.omega():
                tpi = alg.t(pi)
                if alg.multiply(z, tpi) != alg.multiply(tpi, z):
                    ok, detail = False, "z_%r vs %s" % (lam, group.format(pi))
                    break
        if not ok:
            break
    return [CheckResult("center/centrality(height<=%d)" % bound, ok, detail)]


def check_center_tensor(alg, bound):
    """z_lam * z_mu agrees with the character decomposition of the tensor
    product (checked on the smallest admissible dominant pairs)."""
    rd = alg.rd
    doms = [lam for lam in rd.dominant_weights_up_to(bound) if any(lam)]
    pairs = [(a, b) for a in doms[:2] for b in doms[:2]]
    ok = True
    detail = ""
    for a, b in pairs:
        prod_char = rd.character_product(rd.weights_of(a), rd.weights_of(b))
        decomp = rd.decompose_character(prod_char)
        lhs = alg.multiply(alg.center_element(a), alg.center_element(b))
        rhs = alg.zero()
        for nu, c in sorted(decomp.items()):
            rhs = rhs + alg.center_element(nu).scale(c)
        if lhs != rhs:
            ok, detail = False, "pair %r, %r" % (a, b)
            break
    return [CheckResult("center/tensor-compatibility(height<=%d)" % bound, ok, detail)]


# -- group ring specialization ------------------------------------------------------


def check_kgroup_theta(alg, box):
    group = alg.group
    rd = alg.rd
    ok = True
    detail = ""

    def boxes(i, acc):
        if i == rd.rank:
            yield tuple(acc)
            return
        for c in range(-box, box + 1):
            yield from boxes(i + 1, acc + [c])

    for coords in boxes(0, []):
        lam = rd.from_lattice_coords(coords)
        image = alg.specialize_v1(alg.theta(lam))
        if image.terms != {group.translation(lam): 1}:
            ok, detail = False, "lattice coords %r" % (coords,)
            break
    return [CheckResult("kgroup/theta-to-translation(box<=%d)" % box, ok, detail)]


def check_kgroup_center(alg, bound):
    group = alg.group
    rd = alg.rd
    ok = True
    detail = ""
    for lam in rd.dominant_weights_up_to(bound):
        image = alg.specialize_v1(alg.center_element(lam))
        expected = {group.translation(mu): m for mu, m in rd.weights_of(lam).items()}
        if image.terms != expected:
            ok, detail = False, "lam %r" % (lam,)
            break
    return [CheckResult("kgroup/center-to-character(height<=%d)" % bound, ok, detail)]


def check_kgroup_ring_hom(alg, rng, count, max_len):
    group = alg.group
    ok = True
    detail = ""
    for n in range(count):
        a = alg.t(random_element(group, rng, max_len))
        b = alg.t(random_element(group, rng, max_len))
        lhs = alg.specialize_v1(alg.multiply(a, b))
        rhs = alg.specialize_v1(a) * alg.specialize_v1(b)
        if lhs != rhs:
            ok, detail = False, "pair #%d" % n
            break
    return [CheckResult("kgroup/ring-homomorphism-%d" % count, ok, detail)]


# -- Euler pairing -------------------------------------------------------------------


def check_euler(alg, bound):
    group = alg.group
    elements = group.enumerate_up_to_length(bound)
    ok_class = True
    detail_class = ""
    classes = {}
    for w in elements:
        cls = alg.wakimoto_class(w)
        classes[w] = cls
        if cls.terms != {w: 1}:
            ok_class, detail_class = False, group.format(w)
            break
    ok_pair = ok_class
    detail_pair = ""
    if ok_class:
        for w in elements:
            sign = -1 if group.length(w) % 2 else 1
            for wp in elements:
                expected = sign if w == wp else 0
                got = sign * classes[wp].coefficient(w)
                if got != expected:
                    ok_pair = False
                    detail_pair = "(%s, %s)" % (group.format(w), group.format(wp))
                    break
            if not ok_pair:
                break
    return [
        CheckResult("euler/wakimoto-class-is-group-element(len<=%d)" % bound,
                    ok_class, detail_class),
        CheckResult("euler/pairing-delta(len<=%d)" % bound, ok_pair, detail_pair),
    ]


# -- anti-spherical module -------------------------------------------------------------


def check_masp_axioms(mod, rng, count, max_len):
    alg = mod.algebra
    group = alg.group
    ok = True
    detail = ""
    for n in range(count):
        h1 = alg.t(random_element(group, rng, max_len))
        h2 = alg.t(random_element(group, rng, max_len))
        m = mod.unit()
        if mod.act(mod.act(m, h1), h2) != mod.act(m, alg.multiply(h1, h2)):
            ok, detail = False, "pair #%d" % n
            break
    return [CheckResult("masp/module-axioms-%d" % count, ok, detail)]


def check_masp_equivalence(mod, bound):
    group = mod.group
    ok = True
    detail = ""
    for w in group.enumerate_up_to_length(bound):
        h = mod.algebra.t(w)
        if mod.act(mod.unit(), h) != mod.project_from_hecke(h):
            ok, detail = False, group.format(w)
            break
    return [CheckResult("masp/realization-equivalence(len<=%d)" % bound, ok, detail)]


def check_masp_kernel(mod, bound):
    group = mod.group
    ok = True
    detail = ""
    for w in group.enumerate_up_to_length(bound):
        image = mod.project_from_hecke(mod.algebra.kl_basis(w))
        vanished = not image
        if vanished == group.is_f_minimal(w):
            ok, detail = False, group.format(w)
            break
    return [CheckResult("masp/kernel-characterization(len<=%d)" % bound, ok, detail)]


def check_masp_central(mod, bound):
    alg = mod.algebra
    rd = alg.rd
    ok = True
    detail = ""
    for lam in rd.dominant_weights_up_to(bound):
        lhs = mod.act(mod.unit(), alg.center_element(lam))
        rhs = mod.unit().scale(0)
        for mu, m in sorted(rd.weights_of(lam).items()):
            rhs = rhs + mod.theta_basis(mu).scale(m)
        if lhs != rhs:
            ok, detail = False, "lam %r" % (lam,)
            break
    return [CheckResult("masp/central-compatibility(height<=%d)" % bound, ok, detail)]


def check_freeness(mod, bound):
    matrix = mod.a_freeness_matrix(bound)
    ok_tri = matrix.is_unitriangular()
    ok_inv = matrix.is_invertible()
    detail = ""
    if not ok_tri:
        for row in matrix.rows:
            if not row.element.coefficient(row.kappa).is_monomial_unit():
                detail = "diagonal at lam %r" % (row.lam,)
                break
        else:
            detail = "off-diagonal support"
    return [
        CheckResult("masp/freeness-unitriangular(len<=%d)" % bound, ok_tri, detail),
        CheckResult("masp/freeness-invertible(len<=%d)" % bound, ok_inv, ""),
    ]


# -- trace polynomials ------------------------------------------------------------------


def check_whittaker_q1(rd, bound):
    ok = True
    detail = ""
    for lam in rd.dominant_weights_up_to(bound):
        for mu, mult in rd.weights_of(lam).items():
            q = whittaker_trace(rd, lam, mu)
            if q.evaluate_at_one() != mult:
                ok, detail = False, "lam %r mu %r" % (lam, mu)
                break
        if not ok:
            break
    return [CheckResult("whittaker/trace-at-1-is-multiplicity(height<=%d)" % bound,
                        ok, detail)]


def check_whittaker_invariance(rd, bound):
    """Weyl invariance of the unreduced alternating sum, at q = 1 (the
    dimension-level statement; the raw polynomials differ off the
    dominant chamber)."""
    ok = True
    detail = ""
    for lam in rd.dominant_weights_up_to(bound):
        for mu, mult in rd.weights_of(lam).items():
            for k in range(len(rd.weyl)):
                translated = rd.weyl.act(k, mu)
                val = lusztig_q_analogue_unreduced(rd, lam, translated).evaluate_at_one()
                if val != mult:
                    ok, detail = False, "lam %r mu %r weyl #%d" % (lam, mu, k)
                    break
            if not ok:
                break
        if not ok:
            break
    return [CheckResult("whittaker/weyl-invariance-at-1(height<=%d)" % bound, ok, detail)]


def check_whittaker_positivity(rd, bound):
    ok_pos = True
    ok_deg = True
    detail_pos = ""
    detail_deg = ""
    for lam in rd.dominant_weights_up_to(bound):
        for mu in rd.weights_of(lam):
            p = lusztig_q_analogue(rd, lam, mu)
            if any(a < 0 for _, a in p.items()):
                ok_pos, detail_pos = False, "lam %r mu %r" % (lam, mu)
            mup = rd.dominant_representative(mu)
            diff = tuple(l - m for l, m in zip(lam, mup))
            height = rd.height2rho(diff)
            assert height % 2 == 0
            deg = p.degree()
            if deg is not None and deg > height // 2:
                ok_deg, detail_deg = False, "lam %r mu %r" % (lam, mu)
    return [
        CheckResult("whittaker/p-positivity(height<=%d)" % bound, ok_pos, detail_pos),
        CheckResult("whittaker/p-degree-bound(height<=%d)" % bound, ok_deg, detail_deg),
    ]


# -- suite assembly ------------------------------------------------------------------------


def _suite_braid(alg, mod, bound, rng):
    out = []
    out += check_quadratic(alg)
    out += check_braid(alg)
    out += check_associativity(alg, rng, 100, min(bound, 5))
    out += check_inverses(alg, rng, 50, bound)
    out += check_bar_selfdual(alg, min(bound, alg.kl_budget))
    return out

def _suite_theta(alg, mod, bound, rng):
    out = []
    out += check_theta_independence(alg, rng, 50, max(bound, 2))
    out += check_theta_commutativity(alg, rng, 20, max(bound - 1, 2))
    return out

def _suite_center(alg, mod, bound, rng):
    return check_center(alg, bound) + check_center_tensor(alg, bound)

def _suite_kgroup(alg, mod, bound, rng):
    out = []
    out += check_kgroup_theta(alg, min(bound, 4))
    out += check_kgroup_center(alg, bound + 2)
    out += check_kgroup_ring_hom(alg, rng, 25, bound)
    return out

def _suite_masp(alg, mod, bound, rng):
    out = []
    out += check_masp_axioms(mod, rng, 20, min(bound, 6))
    out += check_masp_equivalence(mod, bound)
    out += check_masp_kernel(mod, bound)
    out += check_masp_central(mod, min(bound, 4))
    out += check_freeness(mod, bound)
    return out

def _suite_euler(alg, mod, bound, rng):
    return check_euler(alg, bound)

def _suite_whittaker(alg, mod, bound, rng):
    rd = alg.rd
    return (check_whittaker_q1(rd, bound)
            + check_whittaker_invariance(rd, min(bound, 6))
            + check_whittaker_positivity(rd, bound))


_SUITE_FUNCS = {
    "braid": _suite_braid,
    "theta": _suite_theta,
    "center": _suite_center,
    "kgroup": _suite_kgroup,
    "masp": _suite_masp,
    "euler": _suite_euler,
    "whittaker": _suite_whittaker,
}


def run_suite(name, datum_label, lattice_kind="weight", bound=None, seed=0,
              kl_budget=None):
    """Execute one named suite (or ``all``) and return a SuiteReport."""
    if name not in SUITE_NAMES:
        raise UnknownLabelError(
            "unknown suite %r (choose from %s)" % (name, ", ".join(SUITE_NAMES)))
    rd = build_root_datum(datum_label, lattice_kind)
    alg = HeckeAlgebra(weyl_group(rd), kl_budget)
    mod = AntisphericalModule(alg)
    names = [n for n in SUITE_NAMES if n != "all"] if name == "all" else [name]
    start = time.monotonic()
    checks = []
    for n in names:
        b = bound if bound is not None else DEFAULT_BOUNDS[n]
        rng = random.Random(seed)
        checks += _SUITE_FUNCS[n](alg, mod, b, rng)
    report = SuiteReport(name, datum_label, lattice_kind,
                         bound if bound is not None else -1, seed, checks,
                         time.monotonic() - start)
    return report
