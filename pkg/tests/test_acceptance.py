"""Acceptance gate: every criterion at its stated bound, all exact
(integer / Laurent-polynomial equality, no tolerances).  Each test prints
one pass/fail line; run with ``pytest -s tests/test_acceptance.py`` to
see them, or via ``heckekit suite all``.

Pinned bounds:
  1. center commutation           A1 A2 B2 G2, height <= 6
  2. specialization identities    A1 A2, coordinate box 4 / height <= 6
  3. Euler pairing delta          A1 A2, length <= 6 (all pairs)
  4. anti-spherical equivalence   A1 A2, length <= 8 (all T_w; kernel too)
  5. rank-1 freeness              A1 A2, length <= 6
  6. trace at 1 = multiplicity    A1 A2 B2 G2, height <= 8 (+ Weyl
     invariance of the unreduced sum at q = 1 on every translate)
  7. bar self-duality, P >= 0     A1 length <= 8, A2 length <= 6
  8. algebra sanity               braid (A1 A2 B2 G2), associativity on
     500 seeded triples (len <= 5), 100 seeded inverses (len <= 8),
     50 seeded theta decompositions
"""

import random

from heckekit import AntisphericalModule, HeckeAlgebra, weyl_group
from heckekit.suites import (check_associativity, check_bar_selfdual,
                             check_braid, check_center, check_euler,
                             check_freeness, check_inverses,
                             check_kgroup_center, check_kgroup_theta,
                             check_masp_equivalence, check_masp_kernel,
                             check_quadratic, check_theta_independence,
                             check_whittaker_invariance, check_whittaker_q1)

_ALGS = {}
_MODS = {}


def alg(label):
    if label not in _ALGS:
        _ALGS[label] = HeckeAlgebra(weyl_group(label))
    return _ALGS[label]


def mod(label):
    if label not in _MODS:
        _MODS[label] = AntisphericalModule(alg(label))
    return _MODS[label]


def report(number, slug, checks):
    ok = all(c.passed for c in checks)
    state = "PASS" if ok else "FAIL"
    print("[acceptance] criterion %d (%s): %s" % (number, slug, state))
    for c in checks:
        if not c.passed:
            print("  failed: %s  %s" % (c.name, c.detail))
    assert ok, "criterion %d failed" % number


def test_criterion_1_bernstein_center():
    checks = []
    for label in ("A1", "A2", "B2", "G2"):
        checks += check_center(alg(label), 6)
    report(1, "bernstein-center", checks)


def test_criterion_2_kgroup_identities():
    checks = []
    for label in ("A1", "A2"):
        checks += check_kgroup_theta(alg(label), 4)
        checks += check_kgroup_center(alg(label), 6)
    report(2, "wakimoto-kgroup", checks)


def test_criterion_3_euler_identity():
    checks = []
    for label in ("A1", "A2"):
        checks += check_euler(alg(label), 6)
    report(3, "appendix-euler-pairing", checks)


def test_criterion_4_antispherical_equivalence():
    checks = []
    for label in ("A1", "A2"):
        checks += check_masp_equivalence(mod(label), 8)
        checks += check_masp_kernel(mod(label), 8)
    report(4, "antispherical-equivalence", checks)


def test_criterion_5_rank_one_freeness():
    checks = []
    for label in ("A1", "A2"):
        checks += check_freeness(mod(label), 6)
    report(5, "rank-1-freeness", checks)


def test_criterion_6_whittaker_traces():
    checks = []
    for label in ("A1", "A2", "B2", "G2"):
        rd = alg(label).rd
        checks += check_whittaker_q1(rd, 8)
        checks += check_whittaker_invariance(rd, 8)
    report(6, "whittaker-traces", checks)


def test_criterion_7_bar_self_duality():
    checks = check_bar_selfdual(alg("A1"), 8) + check_bar_selfdual(alg("A2"), 6)
    report(7, "kl-self-duality", checks)


def test_criterion_8_algebra_sanity():
    checks = []
    for label in ("A1", "A2", "B2", "G2"):
        checks += check_quadratic(alg(label))
        checks += check_braid(alg(label))
    a2 = alg("A2")
    checks += check_associativity(a2, random.Random(0), 500, 5)
    checks += check_inverses(a2, random.Random(1), 100, 8)
    checks += check_theta_independence(a2, random.Random(2), 50)
    report(8, "algebra-sanity", checks)
