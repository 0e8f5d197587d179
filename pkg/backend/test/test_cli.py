"""eta 명령행 도구 테스트.

사용법:
    uv run pytest backend/test/test_cli.py
"""

import io
import json
import sys
from pathlib import Path

# Add backend to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

import app
from app import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from modules.errors import CoverClassificationError


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out.strip()


# ============================================================
# compute
# ============================================================

class TestCompute:
    def test_json_is_default(self, capsys):
        code, out = _run(capsys, "compute", "--k", "1", "--lambda", "1:t1")
        assert code == EXIT_OK
        assert json.loads(out) == {
            "terms": [{"coeff": "1", "vars": {"b1": 1}}, {"coeff": "-1", "vars": {"t1": 1}}]
        }

    def test_text(self, capsys):
        assert _run(capsys, "compute", "--k", "1", "--lambda", "1:t1", "--format", "text") == (EXIT_OK, "b1 - t1")
        assert _run(capsys, "compute", "--k", "1", "--lambda", "-", "--format", "text") == (EXIT_OK, "1")

    def test_variants(self, capsys):
        args = ("compute", "--k", "1", "--format", "text")
        assert _run(capsys, *args, "--lambda", "2,1:t1", "--single") == (EXIT_OK, "b1*b2 - b3")
        assert _run(capsys, *args, "--lambda", "1:t1", "--dual") == (EXIT_OK, "bt1")
        assert _run(capsys, *args, "--lambda", "1", "--hat") == (EXIT_OK, "bt1 + b1 - t1")

    def test_latex(self, capsys):
        code, out = _run(capsys, "compute", "--k", "1", "--lambda", "1:t2", "--format", "latex")
        assert (code, out) == (EXIT_OK, r"\widetilde{b}_{1}")

    @pytest.mark.parametrize(
        "argv",
        [
            ("compute", "--k", "1", "--lambda", "1:t0"),
            ("compute", "--k", "1", "--lambda", "2,2"),
            ("compute", "--k", "1", "--lambda", "2,x"),
            ("compute", "--k", "1"),
            ("frobnicate",),
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert main(list(argv)) == EXIT_USAGE
        assert capsys.readouterr().out == ""


# ============================================================
# normal-form / basis-expand / schubert / enumerate
# ============================================================

class TestOtherCommands:
    def test_normal_form_json_argument(self, capsys):
        payload = '{"terms": [{"coeff": "1", "vars": {"b2": 2}}]}'
        code, out = _run(capsys, "normal-form", "--k", "1", "--json", payload)
        assert (code, out) == (EXIT_OK, "bt1*b3 + b1*b3 - b4")

    def test_normal_form_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO('{"terms": [{"coeff": "1", "vars": {"b1": 1, "bt1": 1}}]}'))
        assert _run(capsys, "normal-form", "--k", "1", "--json", "-") == (EXIT_OK, "b2")

    def test_malformed_json(self, capsys):
        assert main(["normal-form", "--k", "1", "--json", "{"]) == EXIT_USAGE

    def test_basis_expand(self, capsys):
        assert _run(capsys, "basis-expand", "--k", "1", "--lambda", "1:t1") == (EXIT_OK, "(1) H[1:t1]")
        code, out = _run(capsys, "basis-expand", "--k", "1", "--lambda", "1:t1", "--basis", "b")
        assert code == EXIT_OK
        assert out.splitlines() == ["(-t1) b[-]", "(1) b[1:t1]"]

    def test_basis_expand_json(self, capsys):
        code, out = _run(capsys, "basis-expand", "--k", "1", "--lambda", "1:t2", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out) == [{"partition": "1:t2", "coeff": {"terms": [{"coeff": "1", "vars": {}}]}}]

    def test_schubert(self, capsys):
        assert _run(capsys, "schubert", "--perm", "1,3,2") == (EXIT_OK, "t1 + t2")
        assert main(["schubert", "--perm", "-1,-2"]) == EXIT_USAGE

    def test_enumerate(self, capsys):
        code, out = _run(capsys, "enumerate", "--k", "1", "--rows", "1", "--cols", "1", "--format", "json")
        assert code == EXIT_OK
        rows = json.loads(out)
        assert [row["partition"] for row in rows] == ["-", "1:t1", "1:t2"]
        assert rows[1] == {"partition": "1:t1", "permutation": "2,1", "beta": [1]}


# ============================================================
# verify
# ============================================================

class TestVerify:
    def test_tables_pass(self, capsys):
        code, out = _run(capsys, "verify", "tables")
        assert code == EXIT_OK
        assert out.endswith("29/29 passed")

    def test_text_report_is_one_line_per_check(self, capsys):
        code, out = _run(capsys, "verify", "tables")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert len(lines) == 30
        assert all(line.startswith("PASS tables/") for line in lines[:-1])

    def test_internal_error_is_reported_without_traceback(self, capsys, monkeypatch):
        def broken(cfg, on_check=None):
            raise CoverClassificationError("Unclassified cover: s_0 on 2,-3,-1")

        monkeypatch.setattr(app, "run_suites", broken)
        assert main(["verify", "covers", "--k", "1", "--n", "3"]) == EXIT_FAILED
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "internal error: Unclassified cover" in captured.err

    def test_json_report(self, capsys):
        code, out = _run(capsys, "verify", "elem", "--format", "json")
        assert code == EXIT_OK
        report = json.loads(out)
        assert {check["name"] for check in report["checks"]} == {"sign_sum", "sign_sum_compositions"}

    def test_covers_flag_ideal_required(self, capsys):
        code, out = _run(capsys, "verify", "covers", "--k", "1", "--n", "3")
        assert code == EXIT_OK
        assert "[ideal-required]" in out
        assert "PASS covers/quotient-only k=1 (d1, i=1)" in out
        assert "PASS covers/quotient-only k=1 (g, i=0)" in out

    def test_seeded_report_is_deterministic(self, capsys):
        argv = ("verify", "laws", "--k", "1", "--samples", "3", "--seed", "5", "--format", "json")
        first = _run(capsys, *argv)
        second = _run(capsys, *argv)
        assert first == second
        assert first[0] == EXIT_OK

    def test_invalid_rectangle(self, capsys):
        assert main(["verify", "covers", "--k", "3", "--n", "2"]) == EXIT_USAGE

    def test_exit_codes_are_distinct(self):
        assert len({EXIT_OK, EXIT_FAILED, EXIT_USAGE}) == 3
