import io
import json
import subprocess
import sys

import pytest

from glinv import conjugate
from glinv.cli import main, render_diagram

POWER_JSON = '{"gens": [[3, 3], [3, 2, 1], [2, 2, 2]], "m": 3, "n": 3}'


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_power_json_golden(capsys):
    code, out, err = run(capsys, ["power", "-m", "3", "-n", "3", "-p", "2",
                                  "-d", "3", "--format", "json"])
    assert code == 0
    assert out == POWER_JSON + "\n"
    assert err == ""


def test_ideal_prefix_token_is_accepted(capsys):
    code, out, _ = run(capsys, ["ideal", "power", "-m", "3", "-n", "3",
                                "-p", "2", "-d", "3", "--format", "json"])
    assert code == 0
    assert out == POWER_JSON + "\n"


def test_normalize_roundtrip_fixed_point(tmp_path, capsys):
    src = tmp_path / "ideal.json"
    src.write_text(json.dumps({"m": 3, "n": 3, "gens": [[2, 1], [2, 2], [3, 1]]}))
    code, out, _ = run(capsys, ["normalize", "--in", str(src), "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"m": 3, "n": 3, "gens": [[2, 1]]}
    again = tmp_path / "again.json"
    again.write_text(out)
    code, out2, _ = run(capsys, ["normalize", "--in", str(again), "--format", "json"])
    assert code == 0
    assert out2 == out


def test_normalize_reads_stdin(capsys, monkeypatch):
    payload = json.dumps({"m": 3, "n": 3, "gens": [[1, 1], [1]]})
    monkeypatch.setattr(sys, "stdin", io.StringIO(payload))
    code, out, _ = run(capsys, ["normalize", "--in", "-", "--format", "json"])
    assert code == 0
    assert json.loads(out)["gens"] == [[1]]


def test_normalize_pretty_mentions_degree(capsys):
    code, out, _ = run(capsys, ["normalize", "-m", "3", "-n", "3",
                                "--gens", "[[3,1]]"])
    assert code == 0
    assert "degree 4" in out
    assert "###" in out


def _grid(x):
    lines = render_diagram(x, indent="").splitlines()
    return {(r, c) for r, line in enumerate(lines) for c in range(len(line))}


def test_render_diagram_transposes():
    for x in ((3, 1), (2, 2, 1), (4,), (1, 1, 1)):
        assert _grid(conjugate(x)) == {(c, r) for r, c in _grid(x)}
    assert render_diagram(()) == "  (no boxes)"


@pytest.mark.parametrize("left,right,relation,wording", [
    ("[[1]]", "[[1]]", "equal", "the ideals are equal"),
    ("[[1]]", "[[1,1]]", "contains", "strictly contains"),
    ("[[1,1]]", "[[1]]", "contained-in", "strictly contained in"),
    ("[[2]]", "[[1,1]]", "incomparable", "incomparable"),
])
def test_compare_relations(capsys, left, right, relation, wording):
    code, out, _ = run(capsys, ["compare", "-m", "3", "-n", "3",
                                "--left", left, "--right", right,
                                "--format", "json"])
    assert code == 0
    assert json.loads(out)["relation"] == relation
    code, out, _ = run(capsys, ["compare", "-m", "3", "-n", "3",
                                "--left", left, "--right", right])
    assert code == 0
    assert wording in out


def test_wide_matrix_is_transposed_with_notice(capsys):
    code, out, err = run(capsys, ["normalize", "-m", "2", "-n", "3",
                                  "--gens", "[[1]]", "--format", "json"])
    assert code == 0
    assert "transposing" in err
    assert json.loads(out) == {"m": 3, "n": 2, "gens": [[1]]}


def test_zset_json_golden(capsys):
    code, out, _ = run(capsys, ["zset", "-m", "3", "-n", "3",
                                "--gens", "[[1,1]]", "--format", "json"])
    assert code == 0
    assert out == '{"m": 3, "n": 3, "pairs": [{"l": 1, "z": []}]}\n'


def test_zset_csv_golden(capsys):
    code, out, _ = run(capsys, ["zset", "-m", "3", "-n", "3", "--kind", "power",
                                "-p", "2", "-d", "2", "--format", "csv"])
    assert code == 0
    assert out == "l,z\n1,\n1,1 1\n0,1 1 1\n"


def test_ext_requires_window(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["ext", "-m", "3", "-n", "3", "--kind", "power", "-p", "3", "-d", "1"])
    assert exc.value.code == 2


def test_ext_rejects_malformed_window(capsys):
    code, _, err = run(capsys, ["ext", "-m", "3", "-n", "3", "--kind", "power",
                                "-p", "3", "-d", "1", "--window=whenever"])
    assert code == 2
    assert "usage error" in err


def test_ext_json_golden(capsys):
    code, out, _ = run(capsys, ["ext", "-m", "3", "-n", "3", "--kind", "power",
                                "-p", "3", "-d", "1", "--window=-4..-3",
                                "--format", "json"])
    assert code == 0
    assert out == ('[{"j": 1, "terms": [{"deg": -3, "mult": 1, '
                   '"wm": [-1, -1, -1], "wn": [-1, -1, -1]}], '
                   '"window": [-4, -3]}]\n')


def test_reg_outputs(capsys):
    code, out, _ = run(capsys, ["reg", "-m", "3", "-n", "3", "--kind", "power",
                                "-p", "2", "-d", "3"])
    assert code == 0
    assert out == "regularity = 6\n"
    code, out, _ = run(capsys, ["reg", "-m", "3", "-n", "3", "--kind", "power",
                                "-p", "2", "-d", "3", "--format", "json"])
    assert code == 0
    assert json.loads(out)["regularity"] == 6


def test_lc_json_and_csv(capsys):
    code, out, _ = run(capsys, ["lc", "-m", "3", "-n", "3", "-p", "2",
                                "--format", "json"])
    assert code == 0
    assert out == '{"p": 2, "rows": {"4": {"0": 1, "1": 1}, "6": {"0": 1}}}\n'
    code, out, _ = run(capsys, ["lc", "-m", "3", "-n", "3", "-p", "2",
                                "--format", "csv"])
    assert code == 0
    assert out == "j,s,mult\n4,0,1\n4,1,1\n6,0,1\n"


def test_lc_pretty_lists_support(capsys):
    code, out, _ = run(capsys, ["lc", "-m", "3", "-n", "3", "-p", "2"])
    assert code == 0
    assert "H^4 = D_0 + D_1" in out
    assert "support: 4..6" in out


def test_lc_ds_requires_window(capsys):
    code, _, err = run(capsys, ["lc", "-m", "2", "-n", "2", "-p", "1", "--ds", "0"])
    assert code == 2
    assert "usage error" in err


def test_lc_ds_has_no_csv(capsys):
    code, _, err = run(capsys, ["lc", "-m", "2", "-n", "2", "-p", "1", "--ds", "0",
                                "--window=-5..-4", "--format", "csv"])
    assert code == 2
    assert "usage error" in err


def test_lc_ds_json_golden(capsys):
    code, out, _ = run(capsys, ["lc", "-m", "2", "-n", "2", "-p", "1", "--ds", "0",
                                "--window=-5..-4", "--format", "json"])
    assert code == 0
    assert out == ('[{"j": 0, "terms": [{"deg": -5, "mult": 1, '
                   '"wm": [-2, -3], "wn": [-2, -3]}, {"deg": -4, "mult": 1, '
                   '"wm": [-2, -2], "wn": [-2, -2]}], "window": [-5, -4]}]\n')


def test_betti_csv(capsys):
    code, out, _ = run(capsys, ["betti", "-m", "3", "-n", "3", "-a", "2",
                                "-b", "2", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "i,degree,beta"
    assert "2,6,84" in lines


def test_qbinom_outputs(capsys):
    code, out, _ = run(capsys, ["qbinom", "4", "2"])
    assert code == 0
    assert out == "1 + q + 2q^2 + q^3 + q^4\n"
    code, out, _ = run(capsys, ["qbinom", "4", "2", "--format", "csv"])
    assert code == 0
    assert out == "exponent,coefficient\n0,1\n1,1\n2,2\n3,1\n4,1\n"


def test_schurdim(capsys):
    code, out, _ = run(capsys, ["schurdim", "-N", "3", "--weight", "[2,1]",
                                "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"N": 3, "weight": [2, 1], "dim": 8}


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, ["selftest"])
    assert code == 0
    assert out.splitlines()[-1] == "22/22 checks passed"


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, ["power", "-m", "3", "-n", "3", "-p", "4", "-d", "1"])
    assert code == 1
    assert err.startswith("error:")
    code, out, _ = run(capsys, ["power", "-m", "3", "-n", "3", "-p", "4", "-d", "1",
                                "--format", "json"])
    assert code == 1
    assert "error" in json.loads(out)


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["power", "-m", "3", "-n", "3", "-p", "2"])
    assert exc.value.code == 2
    assert main([]) == 2


def test_thread_cap_env(capsys, monkeypatch):
    argv = ["power", "-m", "3", "-n", "3", "-p", "2", "-d", "1"]
    monkeypatch.setenv("INVARIANTS_THREADS", "8")
    assert main(argv) == 0
    for bad in ("x", "0", "-3"):
        monkeypatch.setenv("INVARIANTS_THREADS", bad)
        code, _, err = run(capsys, argv)
        assert code == 2
        assert "INVARIANTS_THREADS" in err
    capsys.readouterr()


def test_repeated_runs_are_byte_identical(capsys):
    argv = ["betti", "-m", "3", "-n", "3", "-a", "2", "-b", "2",
            "--format", "json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second
    argv = ["zset", "-m", "4", "-n", "4", "--kind", "power", "-p", "3", "-d", "3"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second


def test_module_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "glinv", "selftest"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("22/22 checks passed")
    proc = subprocess.run(
        [sys.executable, "-m", "glinv", "power", "-m", "3", "-n", "3",
         "-p", "2", "-d", "3", "--format", "json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == POWER_JSON + "\n"
