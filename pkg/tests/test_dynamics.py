import math

import numpy as np
from pytest import approx, mark, raises

from disk_rigidity.dynamics import (
    CashKarpIntegrator, berkson_porta, certify_generator, classify_generator, denjoy_wolff, flow,
    generator_from_flow, interior_fixed_points, locate_null_points, null_point_profile, pr2_rate_check,
    selfmap_to_generator, semigroup_check, trajectory_to_csv,
)
from disk_rigidity.exceptions import (
    InputClassError, IntegrationError, NotAGeneratorError, NotDivisibleError, PreconditionError,
)
from disk_rigidity.models import ClassificationKind
from disk_rigidity.parser import parse_map


@mark.parametrize("text kind tau multiplier".split(),
                  (("0.5*z", ClassificationKind.DILATION, 0, 0.5),
                   ("i*z", ClassificationKind.ELLIPTIC_AUTOMORPHISM, 0, 1j),
                   ("(z+0.3)/(1+0.3*z)", ClassificationKind.HYPERBOLIC, 1, 7 / 13),
                   ("0.5*z+0.5", ClassificationKind.HYPERBOLIC, 1, 0.5),
                   ("z", ClassificationKind.IDENTITY, 0, 1)))
def test_denjoy_wolff(text, kind, tau, multiplier):
    classification = denjoy_wolff(parse_map(text))
    assert classification.kind is kind
    assert classification.tau_dw == approx(tau, abs=1e-8)
    assert classification.multiplier == approx(multiplier, abs=1e-8)


def test_denjoy_wolff_parabolic_automorphism():
    classification = denjoy_wolff(parse_map("mobius(2-i, i, -i, 2+i)"))
    assert classification.kind is ClassificationKind.PARABOLIC
    assert classification.tau_dw == approx(1, abs=1e-8)


def test_denjoy_wolff_rejects_non_selfmap():
    with raises(InputClassError):
        denjoy_wolff(parse_map("2*z"))


def test_fixed_and_null_points():
    assert interior_fixed_points(parse_map("0.5*z")) == [0]
    assert interior_fixed_points(parse_map("0.5*z+0.5")) == []
    assert sorted(t.real for t in locate_null_points(parse_map("z^2-1"))) == approx([-1, 1])
    # the double zero at 1 is reported once
    assert locate_null_points(parse_map("(1-z)^2")) == [1]
    # cancelled factors are not null points
    assert locate_null_points(parse_map("(z-0.5)*(z-1)/(z-0.5)")) == [1]


def test_berkson_porta():
    result = berkson_porta(parse_map("z"), 0)
    assert result.is_generator
    assert not berkson_porta(parse_map("-z"), 0).is_generator
    with raises(NotDivisibleError):
        berkson_porta(parse_map("z-0.5"), 0)
    with raises(PreconditionError):
        berkson_porta(parse_map("z"), 2)


@mark.parametrize("text beta m".split(),
                  (("z-1", 1.0, 0.5),
                   ("z^2-1", 2.0, 0.0),
                   ("(z^2-1)-(1-z)^2-(1-z)^3", 2.0, 1.0),
                   ("-i*(1-z)^2", 0.0, 0.0)))
def test_null_point_profile(text, beta, m):
    profile = null_point_profile(parse_map(text))
    assert profile.beta == approx(beta, abs=1e-8)
    assert profile.m == approx(m, abs=1e-6)
    assert profile.certified


def test_null_point_profile_needs_zero_at_one():
    with raises(InputClassError):
        null_point_profile(parse_map("z+1"))


@mark.parametrize("text kind".split(),
                  (("z-1", ClassificationKind.HYPERBOLIC),
                   ("-i*(1-z)^2", ClassificationKind.PARABOLIC),
                   ("z", ClassificationKind.DILATION),
                   ("i*z", ClassificationKind.ELLIPTIC_AUTOMORPHISM),
                   ("0", ClassificationKind.IDENTITY)))
def test_classify_generator(text, kind):
    assert classify_generator(parse_map(text)).kind is kind


def test_certify_generator_rejects():
    with raises(NotAGeneratorError):
        certify_generator(parse_map("-z"))
    with raises(NotAGeneratorError):
        certify_generator(parse_map("1-z"))


def test_flow_closed_forms():
    assert flow(parse_map("z-1"), 0j, math.log(2)).final == approx(0.5, abs=1e-9)
    assert flow(parse_map("z^2-1"), 0j, 1.0).final == approx(math.tanh(1.0), abs=1e-9)
    assert flow(parse_map("z"), 0.5, 1.0).final == approx(0.5 * math.exp(-1), abs=1e-9)


def test_flow_trajectory_shape():
    trajectory = flow(parse_map("z-1"), 0.2j, 0.5)
    times = [t for t, _ in trajectory.samples]
    assert times[0] == 0.0
    assert times[-1] == 0.5
    assert all(b > a for a, b in zip(times, times[1:]))
    assert trajectory.t_end == 0.5
    assert flow(parse_map("z-1"), 0j, 0.0).samples == [(0.0, 0j)]


def test_flow_rejects_bad_input():
    with raises(InputClassError):
        flow(parse_map("z-1"), 1.0, 1.0)
    with raises(NotAGeneratorError):
        flow(parse_map("-z"), 0.1, 1.0)
    with raises(IntegrationError):
        CashKarpIntegrator(parse_map("z-1")).integrate(0j, -1.0)


def test_semigroup_property():
    assert semigroup_check(parse_map("z^2-1"), 0.3j, 0.4, 0.7) < 1e-8


def test_generator_from_flow():
    f = parse_map("z^2-1")
    assert generator_from_flow(f, 0.3 + 0.2j) == approx(complex((0.3 + 0.2j) ** 2 - 1), abs=1e-6)


def test_horocycle_contraction_rate():
    profile = null_point_profile(parse_map("z-1"))
    z_list = np.array([0.0, 0.5j, -0.3 + 0.4j])
    report = pr2_rate_check(profile, [0.5, 1.0, 2.0], z_list)
    assert report.ok
    assert report.n_pairs == 9
    assert report.beta == approx(1.0)


def test_selfmap_to_generator_identities():
    profile = selfmap_to_generator(parse_map("(z+0.3)/(1+0.3*z)"))
    assert profile.details["identities_ok"]
    assert profile.details["alpha"] == approx(7 / 13)
    assert profile.beta == approx(26 / 7)
    assert profile.jet.derivative(2) == approx(26 / 7)
    with raises(PreconditionError):
        selfmap_to_generator(parse_map("0.5*z"))


def test_trajectory_to_csv():
    text = trajectory_to_csv(flow(parse_map("z-1"), 0j, 0.05))
    lines = text.splitlines()
    assert lines[0] == "t,re,im"
    t, re, im = lines[-1].split(",")
    assert float(t) == approx(0.05)
    assert float(re) == approx(1 - math.exp(-0.05), abs=1e-12)
    assert float(im) == 0.0
