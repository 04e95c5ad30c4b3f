import pytest

from ternaryperm.catalog import format_sequence, generate
from ternaryperm.cli import (
    EXIT_BUDGET,
    EXIT_FAILURE,
    EXIT_INVALID_INPUT,
    EXIT_NONEXISTENT,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_dim2_decimal(self, capsys):
        code, out, err = run(capsys, "gen", "--dim", "2", "--format", "decimal")
        assert code == EXIT_OK
        assert out == "n=2\n1 2 3\n"
        assert err == ""

    def test_dim4_is_a_distinct_nonexistence_exit(self, capsys):
        code, out, err = run(capsys, "gen", "--dim", "4")
        assert code == EXIT_NONEXISTENT
        assert out == ""  # errors never interleave with data output
        assert "n=4" in err
        assert "{3, 4}" in err

    def test_dim7_binary_body_has_127_lines(self, capsys):
        code, out, err = run(capsys, "gen", "--dim", "7", "--format", "binary")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "n=7"
        body = lines[1:]
        assert len(body) == 127
        assert all(len(line) == 7 and set(line) <= {"0", "1"} for line in body)

    def test_out_writes_file_and_keeps_stdout_clean(self, capsys, tmp_path):
        target = tmp_path / "seq.txt"
        code, out, err = run(capsys, "gen", "--dim", "5", "--out", str(target))
        assert code == EXIT_OK
        assert out == ""
        assert target.read_text() == format_sequence(generate(5))

    def test_invalid_dim(self, capsys):
        code, _, err = run(capsys, "gen", "--dim", "1")
        assert code == EXIT_INVALID_INPUT
        assert "error" in err

    def test_deterministic_output(self, capsys):
        first = run(capsys, "gen", "--dim", "6")
        second = run(capsys, "gen", "--dim", "6")
        assert first == second


class TestVerify:
    def test_valid_file(self, capsys, tmp_path):
        path = tmp_path / "good.txt"
        run(capsys, "gen", "--dim", "6", "--out", str(path))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == EXIT_OK
        assert out == "valid\n"

    def test_invalid_file_reports_kind_and_index(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("n=3\n1 2 3 4 5 6 7\n")
        code, out, _ = run(capsys, "verify", str(path))
        assert code == EXIT_FAILURE
        assert "triple-sum at i=4" in out

    def test_truncated_file_is_a_parse_error(self, capsys, tmp_path):
        path = tmp_path / "short.txt"
        path.write_text("n=3\n1 2 3\n")
        code, _, err = run(capsys, "verify", str(path))
        assert code == EXIT_PARSE_ERROR
        assert "line" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", str(tmp_path / "nope.txt"))
        assert code == EXIT_FAILURE
        assert err != ""

    def test_explicit_format(self, capsys, tmp_path):
        path = tmp_path / "binary.txt"
        run(capsys, "gen", "--dim", "5", "--format", "binary", "--out", str(path))
        code, out, _ = run(capsys, "verify", str(path), "--format", "binary")
        assert code == EXIT_OK
        assert out == "valid\n"


class TestSearch:
    def test_count_dim2(self, capsys):
        code, out, _ = run(capsys, "search", "--dim", "2", "--mode", "count")
        assert code == EXIT_OK
        assert out == "6\n"

    def test_first_dim2_prints_sequence(self, capsys):
        code, out, _ = run(capsys, "search", "--dim", "2", "--mode", "first")
        assert code == EXIT_OK
        assert out == "n=2\n1 2 3\n"

    def test_prove_none_dim3(self, capsys):
        code, out, _ = run(capsys, "search", "--dim", "3", "--mode", "prove-none")
        assert code == EXIT_OK
        assert out == "nonexistent=true\n"

    def test_first_dim3_exits_nonexistent(self, capsys):
        code, out, err = run(capsys, "search", "--dim", "3", "--mode", "first")
        assert code == EXIT_NONEXISTENT
        assert out == ""
        assert "n=3" in err

    def test_budget_exhaustion_exit(self, capsys):
        code, _, err = run(capsys, "search", "--dim", "4", "--mode", "count", "--budget", "5")
        assert code == EXIT_BUDGET
        assert "budget" in err

    def test_parallel_count(self, capsys):
        code, out, _ = run(
            capsys, "search", "--dim", "3", "--mode", "count", "--parallel", "2"
        )
        assert code == EXIT_OK
        assert out == "0\n"

    def test_parallel_first_is_invalid(self, capsys):
        code, _, err = run(
            capsys, "search", "--dim", "3", "--mode", "first", "--parallel", "2"
        )
        assert code == EXIT_INVALID_INPUT
        assert "sequential" in err

    def test_reduce_toggle(self, capsys):
        code, out, _ = run(
            capsys, "search", "--dim", "2", "--mode", "count", "--reduce"
        )
        assert code == EXIT_OK
        assert out == "1\n"

    def test_dim_above_cap(self, capsys):
        code, _, err = run(capsys, "search", "--dim", "7", "--mode", "count")
        assert code == EXIT_INVALID_INPUT
        assert "error" in err


class TestProve:
    def test_dim3_certificate(self, capsys):
        code, out, _ = run(capsys, "prove", "--dim", "3")
        assert code == EXIT_OK
        assert "dim=3" in out
        assert "nonexistent=true" in out
        assert "cross_check_unreduced_nodes=" in out
        assert "total_xor_zero=true" in out
        assert "verifier_version=" in out

    def test_dim4_certificate(self, capsys):
        code, out, _ = run(capsys, "prove", "--dim", "4")
        assert code == EXIT_OK
        assert "dim=4" in out
        assert "nonexistent=true" in out

    def test_other_dims_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["prove", "--dim", "5"])
        assert err.value.code == 2


class TestInfo:
    def test_dim9_route(self, capsys):
        code, out, _ = run(capsys, "info", "--dim", "9")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert "dim=9" in lines
        assert "exists=true" in lines
        assert "length=511" in lines
        assert "route=lifted-from-7 ← lifted-from-5 ← base-5" in lines

    def test_dim3_reports_nonexistence_informationally(self, capsys):
        code, out, _ = run(capsys, "info", "--dim", "3")
        assert code == EXIT_OK
        assert "exists=false" in out
        assert "route=none" in out

    def test_dim1_is_invalid(self, capsys):
        code, _, err = run(capsys, "info", "--dim", "1")
        assert code == EXIT_INVALID_INPUT
        assert "error" in err

    def test_base_dim(self, capsys):
        code, out, _ = run(capsys, "info", "--dim", "6")
        assert "route=base-6" in out
        assert code == EXIT_OK


@pytest.mark.parametrize("dim", (2, 5, 6, 7, 8, 9, 10, 11, 12))
def test_gen_verify_pipeline(capsys, tmp_path, dim):
    path = tmp_path / f"{dim}.txt"
    code, _, _ = run(capsys, "gen", "--dim", str(dim), "--out", str(path))
    assert code == EXIT_OK
    code, out, _ = run(capsys, "verify", str(path))
    assert code == EXIT_OK
    assert out == "valid\n"


def test_version_flag():
    with pytest.raises(SystemExit) as err:
        main(["--version"])
    assert err.value.code == 0


def test_missing_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2
