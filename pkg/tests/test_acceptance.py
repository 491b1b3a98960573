"""Full-scale verification battery, one test per criterion.

Run with `pytest tests/test_acceptance.py -s` to watch the per-criterion
pass/fail lines stream; the same battery backs `degmatch verify-paper`.
"""
import pytest

from degmatch.battery import BatteryContext, run_criterion

CTX = BatteryContext()


def _check(number: int) -> None:
    result = run_criterion(number, CTX)
    print(result.line(), flush=True)
    assert result.passed, result.line()


def test_criterion_01_star_family_equals_oracle():
    _check(1)


def test_criterion_02_constructive_realizer():
    _check(2)


def test_criterion_03_four_vertex_classes():
    _check(3)


def test_criterion_04_six_vertex_facts():
    _check(4)


def test_criterion_05_closure():
    _check(5)


def test_criterion_06_potential_and_lifts():
    _check(6)


def test_criterion_07_switch_pipeline():
    _check(7)


def test_criterion_08_tightness_instances():
    _check(8)


def test_criterion_09_half_sum_bound():
    _check(9)


def test_criterion_10_hfactor_family():
    _check(10)


def test_criterion_11_forced_realization():
    _check(11)


def test_criterion_12_merge_and_disjoint_matchings():
    _check(12)


def test_criterion_13_packing_sweep():
    _check(13)


def test_criterion_14_binding_numbers():
    _check(14)


@pytest.fixture(scope="session", autouse=True)
def _summary():
    yield
    print("\nacceptance battery finished")
