"""The self-verification runner and its CLI wiring."""

import json

from quatca.cli import main
from quatca.selfcheck import run_all


def test_run_all_reports_every_suite():
    report = run_all(seed=99)
    assert report["ok"] is True
    names = {suite["name"] for suite in report["suites"]}
    assert {
        "quaternion-ring-laws",
        "product-formula",
        "remainder-law",
        "independence-criterion-vs-rank",
        "degree-criterion-and-symmetry",
        "eigen-tuple-extraction",
        "honest-failure-paths",
        "print-parse-round-trip",
    } <= names
    for suite in report["suites"]:
        assert suite["failed"] == 0
        assert suite["passed"] > 0


def test_cli_selfcheck_exit_code_and_shape(capsys):
    code = main(["--json", "selfcheck", "--seed", "7"])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["ok"] is True
    assert all(suite["failed"] == 0 for suite in payload["suites"])
