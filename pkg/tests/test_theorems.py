import json
import random

import pytest

from epg import report
from epg.catalog import default_catalog, entry_by_name
from epg.errors import SpecError
from epg.theorems import (CHECKS, MANIFEST, SuiteContext, mutation_trial,
                          run_suite, select_checks)

EXPECTED_MANIFEST = [
    "lem-hereditary", "lem-max-cliques", "lem-2k2-mcs", "lem-2k2-classes",
    "thm-split", "lem-coprime-twin", "lem-nilpotent-p4c4", "thm-nilpotent",
    "cor-pgroup", "prop-uniform-intersection", "ex-dihedral-quaternion",
    "prop-cp", "cor-prime-graph", "prop-sn", "rem-sn-cycles",
    "prop-an-cograph", "prop-an-chordal", "cor-coprime", "prop-pq",
    "prop-two-primes", "census-24", "census-36",
]


def small_catalog():
    cat = default_catalog()
    keep_names = {"Z(6) x Z(6)", "Q(12) x Z(2)", "q8_semidirect_z3",
                  "z3_semidirect_d8", "Z(2) x Z(2) x S(3)", "Z(3) x S(3)",
                  "Z(2) x Z(4)"}
    return [e for e in cat
            if e.order <= 40 and ("product" not in e.tags or e.name in keep_names)]


def test_manifest_is_exactly_the_expected_checks():
    assert MANIFEST == EXPECTED_MANIFEST
    assert len(set(MANIFEST)) == len(MANIFEST)


def test_run_suite_empty_catalog():
    suite = run_suite(select_checks(["thm-split"]), [])
    assert suite["all_pass"]
    section = suite["checks"][0]
    assert section["totals"] == {"pass": 0, "fail": 0, "skip": 0, "error": 0}


def test_select_checks_globs():
    assert [c.id for c in select_checks(["census-*"])] == ["census-24", "census-36"]
    assert len(select_checks([])) == len(CHECKS)
    with pytest.raises(SpecError):
        select_checks(["no-such-check"])


def test_selected_checks_pass_on_small_catalog():
    cat = small_catalog()
    ctx = SuiteContext()
    suite = run_suite(select_checks(["thm-split", "lem-2k2-*", "prop-pq",
                                     "prop-two-primes", "census-24"]), cat, ctx)
    assert suite["all_pass"], json.dumps(
        [o for s in suite["checks"] for o in s["outcomes"]
         if o["status"] not in ("pass", "skip")][:5], indent=2)


def test_suite_report_is_deterministic():
    cat = small_catalog()
    s1 = run_suite(select_checks(["census-36"]), cat, SuiteContext())
    s2 = run_suite(select_checks(["census-36"]), cat, SuiteContext())
    assert report.dumps(report.suite_payload(s1)) == report.dumps(report.suite_payload(s2))


def test_suite_captures_per_group_errors():
    cat = [entry_by_name(default_catalog(), "A(7)")]
    ctx = SuiteContext(build_cap=100)  # force graph builds to fail
    suite = run_suite(select_checks(["prop-an-chordal"]), cat, ctx)
    section = suite["checks"][0]
    statuses = {o["group"]: o["status"] for o in section["outcomes"]}
    assert statuses["A(7)"] == "error"
    # the oracle-backed witness outcome still runs
    assert statuses["A(8) C4"] == "pass"
    assert not suite["all_pass"]


def test_mutation_trial_detects_flip():
    cat = default_catalog()
    rng = random.Random(7)
    assert all(mutation_trial(cat, rng) for _ in range(3))


def test_census_notes_present():
    suite = run_suite(select_checks(["census-24"]), small_catalog(), SuiteContext())
    assert any("z3_semidirect_d8" in note for note in suite["notes"])
