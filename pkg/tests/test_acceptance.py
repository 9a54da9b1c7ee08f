"""Acceptance gate: one test per criterion, each reported as a PASS/FAIL line.

Every comparison is exact; there is no tolerance anywhere.
"""

import itertools
import json
import random
import time

import pytest

from exotica import branchcfg as bc
from exotica import cifibration as ci
from exotica.charnum import (
    K3,
    Definiteness,
    HitchinStatus,
    b2_from_euler,
    classify_form,
    hitchin_check,
    quotient_invariants,
)
from exotica.cli import RunConfig, run
from exotica.exactalg import I, ProjectivePoint as P, proj_equal, random_projective_point
from exotica.groupring import augmentation
from exotica.swcalc import distinguish, sw_xm

SAMPLES = 1000
def _params(label):
    rng = random.Random(f"acceptance:{label}")
    return [random_projective_point(rng, dim=1) for _ in range(SAMPLES)]


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.criterion(1, "SW distinctness for m=1..10, r=4 in under 1 s")
def test_sw_distinctness():
    start = time.perf_counter()
    report = distinguish(range(1, 11), 4)
    elapsed = time.perf_counter() - start
    assert len(report.pairs) == 45
    assert report.all_distinct
    for v in report.pairs:
        assert v.witness == (v.m1 ** 4, v.m2 ** 4)
    assert elapsed < 1.0, f"{elapsed:.3f}s"


@pytest.mark.criterion(2, "sw_xm(1,4) matches brute-force convolution of [1,-1,1]")
def test_sw_expansion_oracle():
    expected = [1]
    for _ in range(4):
        expected = _convolve(expected, [1, -1, 1])
    assert expected == [1, -4, 10, -16, 19, -16, 10, -4, 1]
    sw = sw_xm(1, 4).element
    # generator is 2[T] = (2,), so the support sits on even exponents 8..-8
    got = [sw.coefficient((2 * k,)) for k in range(4, -5, -1)]
    assert got == expected
    assert len(sw.support()) == 9


@pytest.mark.criterion(3, "augmentation of sw_xm(m,r) is 1 for m<=25, r<=6")
def test_augmentation():
    for m, r in itertools.product(range(1, 26), range(1, 7)):
        assert augmentation(sw_xm(m, r).element) == 1, (m, r)


@pytest.mark.criterion(4, "quotient invariants chi=6, b2=4, sigma=-4, form 4<-1>, Hitchin equality")
def test_quotient_invariants():
    assert (K3.euler, K3.signature) == (24, -16)
    q = quotient_invariants(K3, 4)
    assert (q.euler, q.signature, q.b1) == (6, -4, 0)
    b2 = b2_from_euler(q.euler, q.b1)
    assert b2 == 4
    form = classify_form(b2, q.signature)
    assert form.definiteness is Definiteness.NEGATIVE
    assert form.diagonal_form == (-1, -1, -1, -1)
    assert hitchin_check(24, -16) is HitchinStatus.EQUALITY
    assert hitchin_check(6, -4) is HitchinStatus.EQUALITY


@pytest.mark.criterion(5, "complete-intersection example certified")
def test_ci_certification():
    cond = ci.check_conditions(ci.EXAMPLE_PAIR)
    assert cond.passed and cond.det_A == 1 and cond.det_B == 1
    free = ci.freeness_certificate(ci.EXAMPLE_PAIR, strict=True)
    assert all(free[g].free for g in ci.NONTRIVIAL)
    assert ci.genus_ci(5, (2, 2, 1, 1)) == (1, True)
    p = P(1, 1 + I)
    assert set(ci.fiber_orbit(p)) == {P(1, 1 + I), P(1, 1 - I), P(1 + I, 1), P(1 - I, 1)}
    assert len(ci.fiber_orbit(p)) == 4
    assert not any(ci.is_exceptional(g, p) for g in ci.NONTRIVIAL)
    assert ci.q4_identities() == (True, True)
    assert all(ci.verify_rank2(q) == 2 for q in _params("rank2"))


@pytest.mark.criterion(6, "exceptional locus agrees with fixed points on 1000 parameters")
def test_exceptional_equivalence():
    pts = _params("exceptional")
    # bias a quarter of the sample onto the loci so both branches are exercised
    rng = random.Random("acceptance:exceptional-loci")
    for k in range(0, SAMPLES, 4):
        a = random_projective_point(rng, dim=1).coords[0] or I
        pts[k] = [P(a.re, a.re + 1), P(1, 1), P(a, a.conj()), P(1, -1)][(k // 4) % 4]
    hits = 0
    for p in pts:
        for g in ci.NONTRIVIAL:
            lhs = ci.is_exceptional(g, p)
            assert lhs == proj_equal(ci.fiber_action(g, p), p), (g, p)
            hits += lhs
    assert hits > 0


@pytest.mark.criterion(7, "branched-cover configuration certified")
def test_branched_certification():
    cfg = bc.EXAMPLE_CONFIG
    for inv in (bc.R, bc.J, bc.RJ):
        assert bc.config_invariance(cfg, inv), inv.name
    r = bc.product_fixed_report(bc.R)
    assert r.count == 4
    assert bc.product_fixed_report(bc.J).empty
    assert bc.product_fixed_report(bc.RJ).empty
    assert len(set(bc.config_intersections(cfg))) == 16
    assert bc.config_avoids_fix(cfg, bc.R)


@pytest.mark.criterion(8, "involutions square to identity and sigma*tau = tau_sigma on 1000 points")
def test_involutions():
    G = ci.GroupElement
    for p in _params("fiber"):
        for g in G:
            assert proj_equal(ci.fiber_action(g, ci.fiber_action(g, p)), p)
        st = ci.fiber_action(G.SIGMA, ci.fiber_action(G.TAU, p))
        assert proj_equal(st, ci.fiber_action(G.TAU_SIGMA, p))
    for p in _params("sphere"):
        for f in (bc.SphereMap.S, bc.SphereMap.C, bc.SphereMap.SC):
            assert proj_equal(bc.apply_sphere(f, bc.apply_sphere(f, p)), p)
    a_pts, b_pts = _params("product-a"), _params("product-b")
    for pair in zip(a_pts, b_pts):
        for inv in bc.PRODUCT_MAPS:
            back = inv(inv(pair))
            assert proj_equal(back[0], pair[0]) and proj_equal(back[1], pair[1])


@pytest.mark.criterion(9, "two default runs give byte-identical JSON, each under 5 s")
def test_determinism():
    outputs, times = [], []
    for _ in range(2):
        start = time.perf_counter()
        cert = run(RunConfig())
        outputs.append(cert.to_json().encode())
        times.append(time.perf_counter() - start)
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["overall"] == "PASS"
    assert max(times) < 5.0, times
