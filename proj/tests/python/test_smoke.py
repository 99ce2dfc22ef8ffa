"""Smoke tests for the qentscale Python module."""

import math

import pytest

import qentscale as q


def test_bell_entropy_is_one_bit():
    bell = q.StateVector.bell()
    assert q.entropy(bell, 1) == pytest.approx(1.0, abs=1e-12)
    assert q.schmidt_rank(bell, 1) == 2
    assert q.reduced_spectrum(bell, 1) == pytest.approx([0.5, 0.5], abs=1e-12)


def test_product_state_is_unentangled():
    assert q.entropy(q.StateVector.basis(4, 0b0110), "half") == 0.0


def test_generated_instances_are_uniquely_satisfiable():
    inst = q.generate_instance(6, 3, seed=5)
    assert inst.n_qubits == 6
    assert q.count_satisfying(inst.clauses, 6) == 1
    again = q.generate_instance(6, 3, seed=5)
    assert again.to_json() == inst.to_json()


def test_sweep_profile_shape_and_endpoints():
    inst = q.generate_instance(6, 3, seed=2)
    prof = q.sweep(inst, step=0.1, seed=1)
    assert len(prof.records) == 11
    assert prof.records[0].entropy == pytest.approx(0.0, abs=1e-9)
    assert prof.records[-1].entropy == pytest.approx(0.0, abs=1e-9)
    assert 0.0 < prof.s_max_entropy < 1.0
    assert prof.min_gap > 0.0


def test_lowest_two_endpoints():
    inst = q.generate_instance(6, 3, seed=2)
    e0, ground, e1 = q.lowest_two(inst, s=1.0, seed=3)
    assert e0 == pytest.approx(0.0, abs=1e-9)
    assert e1 >= 1.0 - 1e-9


def test_grover_closed_forms():
    assert q.grover_ground_energy(2, 0.5) == pytest.approx(0.25, abs=1e-14)
    point = q.grover_point(10, 0.5)
    assert point.lambda_plus + point.lambda_minus == pytest.approx(1.0, abs=1e-12)
    assert 0.0 < point.entropy < 1.0
    state = q.grover_numeric_state(10, 0.37)
    assert q.entropy(state, "half") == pytest.approx(
        q.grover_point(10, 0.37).entropy, abs=1e-9
    )
    curve = q.grover_entropy_curve(8, [0.0, 0.5, 1.0])
    assert curve[0] == 0.0 and curve[-1] == 0.0
    assert q.grover_asymptotic_entropy(20) == pytest.approx(0.994364, abs=1e-6)


def test_shor_case_reports():
    assert q.order(7, 15) == 4
    assert q.factors_from_order(7, 15) == (3, 5)
    assert q.factors_from_order(14, 15) is None
    case = q.shor_case(15, 7)
    report = q.shor_target_report(case)
    assert report["rank"] == 4
    assert report["entropy"] == pytest.approx(2.0, abs=1e-12)
    assert report["entropy_prediction"] == pytest.approx(2.0, abs=1e-12)
    state = q.shor_pre_qft_state(case)
    assert q.schmidt_rank(state, (1 << case.n_target) - 1) == 4


def test_stats_helpers():
    fit = q.fit([6.0, 8.0, 10.0, 12.0], [0.6, 0.8, 1.0, 1.2], model="linear")
    assert fit["slope"] == pytest.approx(0.1, abs=1e-12)
    assert fit["correlation"] == pytest.approx(1.0, abs=1e-12)
    assert q.page_entropy(10) == pytest.approx(5.0 - 1.0 / (2.0 * math.log(2.0)))

    s = [0.01 * i for i in range(1, 100)]
    ent = [
        math.log(abs(math.log(abs(x - 0.7)))) if x < 0.7 else 2.0 * abs(x - 0.7) ** -2.3
        for x in s
    ]
    crit = q.fit_critical_region(s, ent, 0.7)
    assert crit["power_alpha"] == pytest.approx(2.3, abs=1e-6)
    assert crit["loglog_slope"] == pytest.approx(1.0, abs=1e-6)


def test_partition_helpers():
    masks = q.enumerate_bipartitions(4)
    assert len(masks) == 7
    ext = q.partition_extremes(q.StateVector.ghz(4), masks)
    assert ext["min_entropy"] == pytest.approx(1.0, abs=1e-10)
    assert ext["max_entropy"] == pytest.approx(1.0, abs=1e-10)
    sampled = q.sample_bipartitions(16, 64, seed=7)
    assert len(sampled) == 64
    assert sampled == q.sample_bipartitions(16, 64, seed=7)


def test_error_types_surface():
    with pytest.raises(ValueError):
        q.generate_instance(6, 5, seed=1)  # bad arity
    with pytest.raises(RuntimeError):
        q.grover_numeric_state(24, 0.5)  # resource guard
