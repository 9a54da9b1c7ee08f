import pytest
from hypothesis import given

from exotica import branchcfg as bc
from exotica.branchcfg import J, R, RJ, LocusKind, SphereMap as S, apply_sphere
from exotica.errors import InvalidConfig, ZeroVector
from exotica.exactalg import I, MultivariatePolynomial, ProjectivePoint, proj_equal

from conftest import params

P = ProjectivePoint
CFG = bc.EXAMPLE_CONFIG


def test_apply_sphere_examples():
    p = P(1, 1 + I)
    assert apply_sphere(S.S, p) == P(-1, 1 + I)
    assert apply_sphere(S.C, p) == P(1 - I, 1)
    assert apply_sphere(S.SC, p) == P(-1 + I, 1)
    with pytest.raises(ZeroVector):
        apply_sphere(S.S, (0, 0))


def test_sphere_fixed_reports():
    s = bc.sphere_fixed_report(S.S)
    assert s.kind is LocusKind.FINITE and set(s.points) == {P(1, 0), P(0, 1)}
    c = bc.sphere_fixed_report(S.C)
    assert c.kind is LocusKind.CIRCLE and c.witness == P(1, 1)
    assert bc.is_sphere_fixed(S.C, c.witness)
    sc = bc.sphere_fixed_report(S.SC)
    assert sc.empty and sc.count == 0


def test_fixed_minors():
    v = {n: MultivariatePolynomial.var(n, ("u", "ubar", "v", "vbar")) for n in ("u", "ubar", "v", "vbar")}
    assert bc.fixed_point_minor(S.S) == (v["u"] * v["v"]).scale(2)
    assert bc.fixed_point_minor(S.C) == v["u"] * v["ubar"] - v["v"] * v["vbar"]
    assert bc.fixed_point_minor(S.SC) == v["u"] * v["ubar"] + v["v"] * v["vbar"]


def test_product_fixed_reports():
    r = bc.product_fixed_report(R)
    assert r.kind is LocusKind.FINITE and r.count == 4
    assert set(r.points) == {(a, b) for a in (P(1, 0), P(0, 1)) for b in (P(1, 0), P(0, 1))}
    assert bc.product_fixed_report(J).empty
    assert bc.product_fixed_report(RJ).empty
    cc = bc.product_fixed_report(bc.ProductInvolution(S.C, S.C))
    assert cc.kind is LocusKind.INFINITE and cc.count == float("inf")


def test_composite_maps():
    assert (RJ.first, RJ.second) == (S.SC, S.C)
    assert R.holomorphic and not J.holomorphic and not RJ.holomorphic


def test_invariance_examples():
    for inv in bc.PRODUCT_MAPS:
        assert bc.config_invariance(CFG, inv)
    pts = (P(1, 2),) + bc.EXAMPLE_POINTS[1:]
    assert not bc.config_invariance(bc.LineConfig(pts, pts), R)


def test_intersections():
    assert len(bc.config_intersections(CFG)) == 16
    assert len(set(bc.config_intersections(CFG))) == 16
    three = bc.LineConfig(bc.EXAMPLE_POINTS[:3], bc.EXAMPLE_POINTS)
    assert len(bc.config_intersections(three)) == 12
    with pytest.raises(InvalidConfig):
        bc.LineConfig((P(1, 1 + I), P(2, 2 + 2 * I)), bc.EXAMPLE_POINTS)


def test_avoids_fix():
    assert bc.config_avoids_fix(CFG, R)
    bad = bc.LineConfig((P(1, 0),) + bc.EXAMPLE_POINTS[1:], bc.EXAMPLE_POINTS)
    assert not bc.config_avoids_fix(bad, R)
    assert bc.config_avoids_fix(bad, J)
    assert bc.config_avoids_fix(CFG, RJ)
    # c x c fixes the whole torus of circles; (1:1) sits on it
    circle = bc.LineConfig((P(1, 1),), (P(1, 2),))
    assert not bc.config_avoids_fix(circle, bc.ProductInvolution(S.C, S.C))


def test_example_points_closed():
    for f in (S.S, S.C, S.SC):
        images = {apply_sphere(f, p) for p in bc.EXAMPLE_POINTS}
        assert images == set(bc.EXAMPLE_POINTS)
    assert set(bc.sphere_orbit(P(1, 1 + I))) == set(bc.EXAMPLE_POINTS)


def test_json():
    obj = CFG.to_json_obj()
    assert obj["p_points"][0] == ["1", "1+i"]
    assert bc.LineConfig.from_json_obj(obj) == CFG
    parsed = bc.LineConfig.from_json_obj({"p_points": [["1/2+3/4i", "1"]], "q_points": [["1", "-1/3 i"]]})
    assert parsed.p_points[0] == P(2 + 3 * I, 4)
    assert parsed.q_points[0] == P(3, -I)
    with pytest.raises(InvalidConfig):
        bc.LineConfig.from_json_obj({"p_points": [["x", "1"]], "q_points": []})
    with pytest.raises(InvalidConfig):
        bc.LineConfig.from_json_obj({"p_points": [["0", "0"]], "q_points": []})


@given(params)
def test_sphere_involutions(p):
    for f in S:
        assert proj_equal(apply_sphere(f, apply_sphere(f, p)), p)


@given(params)
def test_sphere_group_law(p):
    for f in S:
        for g in S:
            assert proj_equal(apply_sphere(f, apply_sphere(g, p)), apply_sphere(f.compose(g), p))
            assert f.compose(g) is g.compose(f)


@given(params, params)
def test_rj_two_ways(a, b):
    pointwise = R(J((a, b)))
    factorwise = RJ((a, b))
    assert all(proj_equal(x, y) for x, y in zip(pointwise, factorwise))
    assert all(proj_equal(x, y) for x, y in zip(R(J((a, b))), J(R((a, b)))))


@given(params)
def test_sc_fixed_point_free(p):
    assert not bc.is_sphere_fixed(S.SC, p)


@given(params)
def test_s_fixed_only_at_poles(p):
    u, v = p.coords
    assert bc.is_sphere_fixed(S.S, p) == (u * v == 0)
    assert bc.is_sphere_fixed(S.C, p) == (u.norm() == v.norm())
