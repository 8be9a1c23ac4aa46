import json

import pytest

from gcwords.verify import (
    ALL_CHECKS,
    CLASS_COUNTS,
    GC_TABLE,
    Report,
    check_class_poset_equivalence,
    check_contraction_laws,
    check_injectivity_theorem,
    check_table1,
    check_tits_connectivity,
    count_gc_words_brute,
    run_checks,
)
from gcwords.words import DomainError


@pytest.mark.parametrize("n", [2, 3])
def test_tits_connectivity_small(n):
    report = check_tits_connectivity(n)
    assert report.passed and report.counterexample is None


@pytest.mark.parametrize("n", [2, 3])
def test_class_poset_equivalence_small(n):
    assert check_class_poset_equivalence(n).passed


def test_injectivity_small():
    assert check_injectivity_theorem(3).passed


def test_contraction_laws_small():
    assert check_contraction_laws(3).passed


def test_table1_small():
    report = check_table1(n_max=4, brute_max=3)
    assert report.passed
    assert report.params == {"n_max": 4, "brute_max": 3}


def test_table1_rejects_unknown_rank():
    with pytest.raises(DomainError):
        check_table1(n_max=9)


def test_brute_counts():
    assert [count_gc_words_brute(n) for n in (1, 2, 3, 4)] == [1, 2, 6, 40]


def test_reference_constants():
    assert GC_TABLE == (1, 1, 2, 6, 40, 916, 102176, 68464624, 317175051664)
    assert CLASS_COUNTS[4] == 62


def test_report_json_shape():
    report = check_tits_connectivity(2)
    payload = json.loads(report.json_line())
    assert payload["check"] == "tits_connectivity"
    assert payload["params"] == {"n": 2}
    assert payload["pass"] is True
    assert "elapsed_ms" in payload
    assert "counterexample" not in payload


def test_report_payload_byte_stable():
    first = check_class_poset_equivalence(3).json_line(include_elapsed=False)
    second = check_class_poset_equivalence(3).json_line(include_elapsed=False)
    assert first == second


def test_failing_report_carries_counterexample():
    bad = Report("demo", {"n": 2}, False, 0.1, {"unreached": "1,2,1"})
    payload = json.loads(bad.json_line())
    assert payload["pass"] is False
    assert payload["counterexample"] == {"unreached": "1,2,1"}


def test_run_checks_selection():
    reports = run_checks(["tits_connectivity"], scale=2)
    assert [r.check for r in reports] == ["tits_connectivity"]
    with pytest.raises(DomainError, match="unknown check"):
        run_checks(["nope"])
    assert set(ALL_CHECKS) == {
        "tits_connectivity",
        "class_poset_equivalence",
        "injectivity_theorem",
        "contraction_laws",
        "table1",
    }
