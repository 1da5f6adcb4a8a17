"""End-to-end checks of the Python bindings against the worked examples."""

import json

import pytest

import credalchain as cc


def test_module_surface():
    assert cc.__version__
    for name in cc.__all__:
        assert hasattr(cc, name), name


def test_fixture_round_trip():
    chain = cc.load_fixture("example1")
    assert chain.states == ["1", "2", "3"]
    again = cc.parse_chain_spec_text(cc.serialize_chain_spec(chain))
    assert again == chain

    text = cc.fixture_text("example52")
    assert cc.parse_chain_spec_text(text) == cc.load_fixture("example52")


def test_natural_extensions():
    spec = cc.CredalSpec.intervals([0.33, 0.17, 0.25], [0.58, 0.42, 0.50])
    f = [0.0, 1.0, 0.5]
    assert cc.upper_natural_extension(spec, f) == pytest.approx(0.545, abs=1e-9)
    assert cc.lower_natural_extension(spec, f) == pytest.approx(0.295, abs=1e-9)

    via_lp = cc.upper_natural_extension(spec, f, cc.Backend.lp)
    assert via_lp == pytest.approx(0.545, abs=1e-9)

    assert cc.upper_natural_extension(cc.CredalSpec.vacuous(), f) == pytest.approx(1.0)
    assert cc.CredalSpec.precise([0.2, 0.3, 0.5]).dimension == 3


def test_constraints_and_validation():
    spec = cc.CredalSpec.constraints(
        upper=[([0.1, 1.0, 0.0], 0.305)], lower=[([0.0, 1.0, 0.0], 0.3)]
    )
    assert cc.upper_natural_extension(spec, [1.0, 0.5, 0.0]) == pytest.approx(0.2, abs=1e-9)
    assert cc.validate_spec(spec) == []

    broken = cc.CredalSpec.intervals([0.33, 0.25, 0.25], [0.38, 0.38, 0.43])
    assert cc.validate_spec(broken)


def test_vertices():
    vertices = cc.credal_vertices([0.33, 0.25, 0.25], [0.38, 0.38, 0.42])
    assert any(
        all(abs(a - b) < 1e-9 for a, b in zip(v, [0.38, 0.37, 0.25])) for v in vertices
    )
    for v in vertices:
        assert sum(v) == pytest.approx(1.0, abs=1e-9)


def test_operator_iteration():
    chain = cc.load_fixture("example1")
    t = chain.transition
    assert t.size == 3

    image = t.apply_upper([0.0, 1.0, 0.0])
    assert image == pytest.approx([0.67, 0.42, 0.58], abs=1e-9)

    lo, up = cc.nstep_mass_bounds(chain.initial, t, 3)
    assert lo == pytest.approx([0.1966, 0.2672, 0.1513], abs=5e-4)
    assert up == pytest.approx([0.5293, 0.5799, 0.3903], abs=5e-4)

    elo, eup = cc.nstep_event_bounds(t, 3)
    assert elo[2][1] == pytest.approx(0.3067, abs=5e-4)
    assert eup[0][0] == pytest.approx(0.5898, abs=5e-4)

    lo0, up0 = cc.distribution_bounds(chain.initial, t, 0, [1.0, 0.0, 0.0])
    assert (lo0, up0) == (pytest.approx(0.33), pytest.approx(0.38))


def test_metrics():
    a = cc.load_fixture("example1")
    b = cc.load_fixture("example52")

    assert cc.weak_ergodicity_coefficient(a.transition) == pytest.approx(0.67, abs=1e-9)
    assert cc.weak_ergodicity_coefficient(b.transition) == pytest.approx(0.60, abs=1e-9)
    assert cc.uniform_ergodicity_coefficient(a.transition) == pytest.approx(0.67, abs=1e-9)

    value, flag = cc.operator_distance(a.transition, b.transition)
    assert value == pytest.approx(0.05, abs=1e-9)
    assert flag == "exact"

    assert cc.distance_two_monotone(a.initial, b.initial) == pytest.approx(0.04, abs=1e-9)
    assert cc.imprecision(a.initial) == pytest.approx(0.17, abs=1e-9)
    assert cc.operator_imprecision(a.transition) == pytest.approx(0.34, abs=1e-9)
    assert cc.is_two_monotone_induced(a.initial)

    value, flag = cc.nstep_distribution_distance(a.initial, a.transition, b.initial, b.transition, 1)
    assert value == pytest.approx(0.0248, abs=5e-5)
    assert flag == "event_lower_bound"

    assert cc.nstep_imprecision(a.initial, a.transition, 1) == pytest.approx(0.2778, abs=1e-9)

    assert cc.dobrushin([[0.5, 0.5], [0.2, 0.8]]) == pytest.approx(0.3)

    result = cc.convergence_check(a.transition, 3)
    assert result["verdict"] == "converges"
    assert result["certified_r"] == 1
    assert result["rho"] == pytest.approx(0.67, abs=1e-9)


def test_bounds():
    assert cc.sum_rho_bound(3, 1, 0.6) == pytest.approx(1.96, abs=1e-12)
    assert cc.sum_rho_bound_limit(1, 0.6) == pytest.approx(2.5, abs=1e-12)

    value, raw, clamped = cc.distribution_error_bound(0.04, 0.05, 3, 1, 0.6)
    assert value == pytest.approx(0.10664, abs=1e-9)
    assert raw == pytest.approx(value)
    assert not clamped

    value, raw, clamped = cc.distribution_error_bound(0.0248, 0.05, None, 1, 0.6)
    assert value == pytest.approx(0.125, abs=1e-9)

    value, raw, clamped = cc.operator_error_bound(0.05, 4, 1, 0.6)
    assert value == pytest.approx(0.1088, abs=1e-9)

    value, raw, clamped = cc.imprecision_bound(0.17, 0.34, None, 1, 0.67)
    assert clamped and value == pytest.approx(1.0)
    assert raw == pytest.approx(0.34 / 0.33, abs=1e-9)


def test_contamination():
    chain = cc.load_fixture("example1")
    metrics = cc.contamination_metrics(chain.initial, chain.transition, 0.1)
    assert metrics["contaminated_rho"] == pytest.approx(0.603, abs=1e-9)
    assert metrics["spec_distance"] == pytest.approx(0.062, abs=1e-9)
    assert metrics["contaminated_imprecision"] == pytest.approx(0.253, abs=1e-9)

    spec_eps = chain.initial.contaminated(0.1)
    t_eps = chain.transition.contaminated(0.1)
    assert cc.weak_ergodicity_coefficient(t_eps) == pytest.approx(0.603, abs=1e-9)
    assert cc.distance_two_monotone(chain.initial, spec_eps) == pytest.approx(0.062, abs=1e-9)

    bounds = cc.contamination_bounds(chain.initial, chain.transition, 0.1, None)
    value, raw, clamped = bounds["distribution_error"]
    assert value == pytest.approx(0.1 / 0.397, abs=1e-9)


def test_reports():
    chain = cc.load_fixture("example1")
    doc = json.loads(cc.report_analyze(chain, [1, 2, 3]))
    rho = next(s for s in doc["scalars"] if s["name"] == "contraction coefficient rho")
    assert rho["cell"]["value"] == pytest.approx(0.67, abs=1e-9)
    assert doc["columns"] == ["n=1", "n=2", "n=3", "inf"]

    other = cc.load_fixture("example52")
    compare = json.loads(cc.report_compare(chain, other, [1]))
    bound_row = next(r for r in compare["rows"] if r["name"] == "distribution distance (bound)")
    assert bound_row["cells"][0]["value"] == pytest.approx(0.074, abs=1e-9)

    text, passed = cc.report_reproduce("example1")
    assert passed
    assert json.loads(text)["title"] == "reproduction: example1"


def test_exceptions():
    with pytest.raises(ValueError):
        cc.parse_chain_spec_text("{ not json")
    with pytest.raises(ValueError):
        cc.parse_chain_spec_text('{"states": ["a"]}')
    with pytest.raises(NotImplementedError):
        cc.upper_natural_extension(
            cc.CredalSpec.constraints(upper=[([1.0, 0.0], 0.7)]),
            [1.0, 0.0],
            cc.Backend.choquet,
        )


def test_contaminated_specs_stay_usable():
    chain = cc.load_fixture("example1")
    contaminated = chain.initial.contaminated(0.1)
    assert cc.imprecision(contaminated) == pytest.approx(0.253, abs=1e-9)
