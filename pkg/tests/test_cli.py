# Tests the gr-authcode command's subcommands.
#
# Copyright (C) the GrAuthCode authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
#

import json

import pytest

import grauthcode.cli as cli
import grauthcode.config as conf

from conftest import etcPath


def _run(capsys, *args):
    code = cli.main(list(args))
    (out, err) = capsys.readouterr()
    return (code, out)


def test_no_or_unknown_subcommand(capsys):
    assert _run(capsys)[0] == cli.cli_USAGE_ERROR
    assert _run(capsys, "decode")[0] == cli.cli_USAGE_ERROR

def test_every_subcommand_has_a_program():
    assert sorted(cli.cli_programClasses) == sorted(cli.cli_allSubcommands)
    for name in cli.cli_allSubcommands:
        assert cli.cli_programClasses[name].subcommand == name

def test_gray_table_of_z4(capsys):
    (code, out) = _run(capsys, "gray-table", "-c", etcPath("z4.cfg"))
    assert code == cli.cli_SUCCESS
    assert out.splitlines() == ["0\t0:0", "1\t0:1", "2\t1:1", "3\t1:0"]

def test_missing_configurations(capsys, tmp_path):
    assert _run(capsys, "gray-table")[0] == cli.cli_USAGE_ERROR
    missing = str(tmp_path / "missing.cfg")
    assert _run(capsys, "gray-table", "-c", missing)[0] == \
        cli.cli_USAGE_ERROR

def test_invalid_options(capsys):
    cfg = etcPath("p0.cfg")
    assert _run(capsys, "build-code", "-c", cfg, "-f", "xml")[0] == \
        cli.cli_USAGE_ERROR
    assert _run(capsys, "build-code", "-c", cfg, "extra")[0] == \
        cli.cli_USAGE_ERROR
    assert _run(capsys, "simulate", "-c", cfg, "--adversary", "replay")[0] \
        == cli.cli_USAGE_ERROR
    assert _run(capsys, "build-code", "--help")[0] == cli.cli_USAGE_ERROR

def test_invalid_instance_is_a_configuration_error(capsys):
    assert _run(capsys, "build-code", "-c", etcPath("z4.cfg"))[0] == \
        cli.cli_USAGE_ERROR

def test_ring_info(capsys):
    (code, out) = _run(capsys, "ring-info", "-c", etcPath("gr42.cfg"))
    assert code == cli.cli_SUCCESS
    lines = out.splitlines()
    assert "A\tGR(2^2, 1)\torder 4" in lines
    assert "B\tGR(2^2, 2)\torder 16" in lines
    assert "B\tmodulus\t1,1,1" in lines
    assert "check\ttrace\tpassed" in lines

def test_build_code_of_p0(capsys):
    (code, out) = _run(capsys, "build-code", "-c", etcPath("p0.cfg"))
    assert code == cli.cli_SUCCESS
    lines = out.splitlines()
    assert "|P|\t12" in lines
    assert "|S|\t48" in lines
    assert "|K|\t256" in lines
    assert "param\tZ\txi^0, xi^2" in lines
    assert "[gap] cardinality" in out
    assert "[fatal]" not in out

def test_records_are_reproducible(capsys, tmp_path):
    paths = [str(tmp_path / name) for name in ("a.jsonl", "b.jsonl")]
    for path in paths:
        code = _run(capsys, "build-code", "-c", etcPath("p0.cfg"), "-f",
                    "records", "-o", path)[0]
        assert code == cli.cli_SUCCESS
    with open(paths[0], 'rb') as a, open(paths[1], 'rb') as b:
        assert a.read() == b.read()

def test_table_reports_start_with_the_configuration(capsys):
    (code, out) = _run(capsys, "build-code", "-c", etcPath("p0.cfg"),
                       "-f", "records")
    run = json.loads(out.splitlines()[0])
    for subcommand in ("build-code", "attack-probs"):
        (code, out) = _run(capsys, subcommand, "-c", etcPath("p0.cfg"))
        assert code == cli.cli_SUCCESS
        lines = out.splitlines()
        assert lines[1] == "# fingerprint %s" % run["fingerprint"]
        assert "# Z = xi^0, xi^2" in lines
        header = lines[:lines.index("")]
        assert all(line.startswith("#") for line in header)
        assert len(header) == 2 + len(run["config"])
    (code, out) = _run(capsys, "verify-injectivity", "-c",
                       etcPath("p0.cfg"), "-m", "sampled", "-n", "5")
    assert "# mode = sampled" in out.splitlines()
    assert "# fingerprint " in out

def test_explicit_defaults_give_the_same_fingerprint(capsys):
    runs = []
    for name in ("p0.cfg", "p0-explicit.cfg"):
        (code, out) = _run(capsys, "build-code", "-c", etcPath(name),
                           "-f", "records")
        assert code == cli.cli_SUCCESS
        runs.append(json.loads(out.splitlines()[0]))
    assert runs[0]["fingerprint"] == runs[1]["fingerprint"]
    assert runs[0]["config"] == runs[1]["config"]

def test_tag_matrix_export(capsys, tmp_path):
    path = tmp_path / "tags.txt"
    code = _run(capsys, "build-code", "-c", etcPath("p0.cfg"),
                "--tag-matrix", str(path))[0]
    assert code == cli.cli_SUCCESS
    lines = path.read_text().splitlines()
    assert len(lines) == 48
    (state, tags) = lines[0].split("\t")
    assert len(state.split("|")) == 3
    assert len(tags.split(" ")) == 256

def test_check_resilience(capsys):
    (code, out) = _run(capsys, "check-resilience", "-c", etcPath("p0.cfg"))
    assert code == cli.cli_SUCCESS
    assert "result\tresilient" in out.splitlines()

def test_verify_injectivity_sampled(capsys):
    (code, out) = _run(capsys, "verify-injectivity", "-c",
                       etcPath("p0.cfg"), "-m", "sampled", "-n", "50",
                       "-s", "3")
    assert code == cli.cli_SUCCESS
    assert "0 collisions / 50 pairs" in out.splitlines()
    assert _run(capsys, "verify-injectivity", "-c", etcPath("p0.cfg"),
                "-m", "sampled")[0] == cli.cli_USAGE_ERROR

def test_attack_probs(capsys):
    (code, out) = _run(capsys, "attack-probs", "-c", etcPath("p0.cfg"),
                       "-f", "records")
    assert code == cli.cli_SUCCESS
    rows = [json.loads(line) for line in out.splitlines()[1:]]
    pI = [r["pI"] for r in rows if "pI" in r]
    assert len(pI) == 1
    (num, den) = (int(v) for v in pI[0].split("/"))
    assert 1 / 4 <= num / den <= 1

def test_simulate(capsys):
    (code, out) = _run(capsys, "simulate", "-c", etcPath("p0.cfg"),
                       "--trials", "300", "--seed", "2")
    assert code == cli.cli_SUCCESS
    lines = out.splitlines()
    assert lines[0] == "# simulate %s" % conf.toolVersion
    assert "adversary\timpersonation" in lines
    assert "successes\t" in out

def test_simulate_with_several_jobs(capsys):
    args = ["simulate", "-c", etcPath("p0.cfg"), "--trials", "100",
            "--seed", "5"]
    (code, out) = _run(capsys, *args)
    assert code == cli.cli_SUCCESS
    assert _run(capsys, *(args + ["--jobs", "2"])) == (code, out)
    assert _run(capsys, *(args + ["--jobs", "0"]))[0] == cli.cli_USAGE_ERROR

def test_gaps_are_warned_about(capsys):
    cfg = etcPath("p0.cfg")
    assert cli.main(["build-code", "-c", cfg]) == cli.cli_SUCCESS
    (out, err) = capsys.readouterr()
    assert err.startswith("WARNING: The report contains ")
    assert err.rstrip().endswith(" gap findings.")
    assert cli.main(["build-code", "-c", cfg, "-S"]) == cli.cli_SUCCESS
    assert capsys.readouterr()[1] == ""
