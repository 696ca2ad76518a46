from dataclasses import replace

import pytest

from scalars import Scalar
from coisotropic import get_preset
from reports import CONTROL_PREFIX, PASS
from suites import AllSuite, SuiteNotApplicable, UnknownSuite, get_available_suites, run_suite
from suites.coideal_suite import CoidealSuite
from suites.doublecoset_suite import DoubleCosetSuite
from suites.adjoint_suite import AdjointSuite, wrong_transport_target
from suites.expansion_suite import ExpansionSuite

SUITE_NAMES = [
    "hopf",
    "pbw",
    "coideal",
    "grouplike",
    "expansion",
    "special-series",
    "classical-limit",
    "homspace",
    "doublecoset",
    "adjoint",
]


def test_registry_order():
    assert list(get_available_suites()) == SUITE_NAMES + ["all"]


def test_unknown_suite(s1, small_settings):
    with pytest.raises(UnknownSuite):
        run_suite("nonsense", s1, small_settings)


def test_lookup_ignores_case(s1, small_settings):
    assert run_suite("CoIdeal", s1, small_settings)["suite"] == "coideal"


@pytest.mark.parametrize("suite, preset", [("expansion", "special"), ("special-series", "rplus"), ("classical-limit", "s1")])
def test_not_applicable(suite, preset, small_settings):
    with pytest.raises(SuiteNotApplicable):
        run_suite(suite, get_preset(preset), small_settings)


@pytest.mark.parametrize(
    "suite, preset",
    [(name, "s1") for name in SUITE_NAMES if name not in ("special-series", "classical-limit")]
    + [("special-series", "special"), ("classical-limit", "special"), ("grouplike", "special")],
)
def test_suite_passes(suite, preset, small_settings):
    report = run_suite(suite, get_preset(preset), small_settings)
    failed = [check for check in report["checks"] if check["status"] != PASS]
    assert failed == []
    assert report["status"] == PASS
    assert any(check["id"].startswith(CONTROL_PREFIX) for check in report["checks"])


def test_all_suite_prefixes_ids(s1, small_settings):
    suites = [CoidealSuite(), DoubleCosetSuite()]
    combined = AllSuite(suites).run(s1, small_settings)
    expected = [f"{suite.name}:{check['id']}" for suite in suites for check in suite.run(s1, small_settings)["checks"]]
    assert [check["id"] for check in combined["checks"]] == expected
    assert combined["suite"] == "all"
    assert combined["preset"] == "s1"


def test_all_suite_skips_inapplicable(special, small_settings):
    suites = [ExpansionSuite(), CoidealSuite()]
    ids = [check["id"] for check in AllSuite(suites).run(special, small_settings)["checks"]]
    assert ids
    assert all(check_id.startswith("coideal:") for check_id in ids)


def test_workers_keep_order(s1, small_settings):
    serial = run_suite("grouplike", s1, small_settings)
    threaded = run_suite("grouplike", s1, replace(small_settings, workers=2))
    assert [check["id"] for check in threaded["checks"]] == [check["id"] for check in serial["checks"]]
    assert threaded["status"] == serial["status"] == PASS


@pytest.mark.parametrize("preset", ["rplus", "s1", "special"])
def test_adjoint_control_rejects_a_target_in_the_same_field(preset, small_settings):
    p = get_preset(preset)
    alpha = Scalar.from_rational("2")
    wrong = wrong_transport_target(p, alpha)
    assert wrong.radicand == p.radicand
    assert (wrong.mu, wrong.nu) != (p.mu / alpha**2, p.nu / alpha**4)
    checks = [check for task in AdjointSuite().controls(p, small_settings) for check in task()]
    assert [check["status"] for check in checks] == [PASS]


def test_pbw_suite_draws_twice_as_many_words(s1, small_settings):
    ids = [check["id"] for check in run_suite("pbw", s1, small_settings)["checks"]]
    assert len([check_id for check_id in ids if check_id.startswith("strategy-")]) == 2 * small_settings.samples
    assert len([check_id for check_id in ids if check_id.startswith("associativity-")]) == small_settings.samples
