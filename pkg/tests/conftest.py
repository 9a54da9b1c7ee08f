import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from exotica.exactalg import GaussianRational, MultivariatePolynomial, ProjectivePoint
from exotica.groupring import GroupRingElement

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SEED = 20240517

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)
# small integer coordinates make exceptional loci (lam = mu, |lam| = |mu|, ...) likely
small_gaussians = st.builds(
    GaussianRational,
    st.integers(-3, 3).map(Fraction),
    st.integers(-3, 3).map(Fraction),
)


def projective_points(dim=1, coords=gaussians):
    return st.lists(coords, min_size=dim + 1, max_size=dim + 1).filter(any).map(
        lambda cs: ProjectivePoint(*cs)
    )


params = st.one_of(projective_points(1, small_gaussians), projective_points(1))


def laurent_elements(max_terms=5, span=4):
    return st.dictionaries(
        st.integers(-span, span), st.integers(-9, 9), max_size=max_terms
    ).map(lambda d: GroupRingElement(1, {(k,): v for k, v in d.items()}))


def group_ring_elements(rank=2, max_terms=4, span=3):
    vec = st.tuples(*[st.integers(-span, span)] * rank)
    return st.dictionaries(vec, st.integers(-9, 9), max_size=max_terms).map(
        lambda d: GroupRingElement(rank, d)
    )


POLY_VARS = ("x1", "x2", "y1")


def polynomials(max_terms=4):
    exps = st.tuples(*[st.integers(0, 2)] * len(POLY_VARS))
    coeffs = st.builds(GaussianRational, st.integers(-4, 4), st.integers(-4, 4))
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(
        lambda d: MultivariatePolynomial(d, POLY_VARS)
    )


@pytest.fixture
def rng():
    return random.Random(SEED)


# --- acceptance reporting -------------------------------------------------------

ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        ACCEPTANCE[marker.args] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(ACCEPTANCE.items()):
        terminalreporter.write_line(f"{status} criterion {number}: {title}")
    passed = sum(s == "PASS" for s in ACCEPTANCE.values())
    terminalreporter.write_line(f"{passed}/{len(ACCEPTANCE)} criteria pass")
