# Copyright 2026 The equicoalg authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#
import csv
import io
import json

import numpy as np
import pytest

from equicoalg import __version__
from equicoalg.__main__ import run
from equicoalg.const import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, UAT_CSV_COLUMNS
from equicoalg.groups import build_group, save_group_table


def run_cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def write_config(tmp_path, config_dict, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(config_dict), encoding="utf-8")
    return str(path)


def test_version():
    code, output = run_cli("--version")
    assert code == EXIT_OK
    assert output.strip() == __version__


def test_missing_command():
    code, _ = run_cli()
    assert code == EXIT_USAGE


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        run_cli("train")

    assert excinfo.value.code == EXIT_USAGE


# -----------------------------------------------------------------------------


def test_laws_default_group():
    code, output = run_cli("laws")
    assert code == EXIT_OK
    assert "group: cyclic(2) of order 2" in output
    assert "domain comonad laws: 0.0" in output
    assert "compatibility identity: yes" in output


@pytest.mark.parametrize("group", ["cyclic:5", "dihedral:4", "symmetric:3"])
def test_laws_builtin_groups(group):
    code, output = run_cli("laws", "--group", group, "--seed", "3")
    assert code == EXIT_OK, output


def test_laws_options_before_command():
    code, output = run_cli("--group", "dihedral:3", "laws")
    assert code == EXIT_OK
    assert "dihedral(3)" in output


def test_laws_table_group(tmp_path):
    save_group_table(build_group("dihedral", 2), tmp_path / "klein.txt")
    code, output = run_cli("laws", "--group", f"table:{tmp_path / 'klein.txt'}")
    assert code == EXIT_OK
    assert "table group of order 4" in output


def test_laws_relative_table_group_with_config_elsewhere(tmp_path, monkeypatch):
    save_group_table(build_group("cyclic", 3), tmp_path / "z3.txt")
    (tmp_path / "configs").mkdir()
    write_config(tmp_path / "configs", {"seed": 5}, "exp.json")

    # Table path is relative to the working directory, not the config file
    monkeypatch.chdir(tmp_path)
    code, output = run_cli(
        "laws", "--config", "configs/exp.json", "--group", "table:z3.txt"
    )
    assert code == EXIT_OK, output
    assert "table group of order 3" in output


def test_laws_corrupted_rep_file(tmp_path):
    matrices = 2.0 * np.array([np.eye(2), [[0.0, 1.0], [1.0, 0.0]]])
    (tmp_path / "doubled.json").write_text(
        json.dumps(matrices.tolist()), encoding="utf-8"
    )
    config_path = write_config(
        tmp_path, {"domain_rep": {"kind": "file", "path": "doubled.json"}}
    )

    code, output = run_cli("laws", "--config", config_path)
    assert code == EXIT_CHECK_FAILED
    assert "domain comodule laws" in output


def test_laws_config_errors(tmp_path):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{widths: ", encoding="utf-8")
    assert run_cli("laws", "--config", str(bad_json))[0] == EXIT_USAGE

    unknown = write_config(tmp_path, {"colour": "blue"}, "unknown.json")
    assert run_cli("laws", "--config", unknown)[0] == EXIT_USAGE

    assert run_cli("laws", "--config", str(tmp_path / "missing.json"))[0] == EXIT_USAGE
    assert run_cli("laws", "--group", "quaternion:8")[0] == EXIT_USAGE
    assert run_cli("laws", "--group", "symmetric:7")[0] == EXIT_USAGE
    assert run_cli("laws", "--seed", "-1")[0] == EXIT_USAGE

    not_a_group = tmp_path / "not_a_group.txt"
    not_a_group.write_text("2\n0 1\n1 1\n", encoding="utf-8")
    assert run_cli("laws", "--group", f"table:{not_a_group}")[0] == EXIT_USAGE

    rotation = write_config(
        tmp_path, {"domain_rep": {"kind": "rotation2d"}}, "rotation.json"
    )
    code, _ = run_cli("laws", "--config", rotation, "--group", "symmetric:3")
    assert code == EXIT_USAGE


# -----------------------------------------------------------------------------


def read_csv(text):
    return list(csv.reader(io.StringIO(text)))


def small_uat_config(tmp_path, **overrides):
    config_dict = {"train_count": 300, "test_count": 40, "widths": [16, 64, 256]}
    config_dict.update(overrides)
    return write_config(tmp_path, config_dict, "uat.json")


def test_uat_csv(tmp_path):
    code, output = run_cli("uat", "--config", small_uat_config(tmp_path))
    assert code == EXIT_OK

    rows = read_csv(output)
    assert tuple(rows[0]) == UAT_CSV_COLUMNS
    assert len(rows) == 4
    assert [row[0] for row in rows[1:]] == ["16", "64", "256"]

    for row in rows[1:]:
        assert len(row) == 7
        values = [float(v) for v in row[1:6]]
        assert all(np.isfinite(v) and v >= 0 for v in values)

        # Error transfer on the symmetrized test sample
        assert float(row[3]) <= float(row[2]) + 1e-9
        assert row[6] == "42"


def test_uat_is_reproducible(tmp_path):
    config_path = small_uat_config(tmp_path)
    out_path = tmp_path / "rows.csv"

    first = run_cli("uat", "--config", config_path)[1]
    code, _ = run_cli(
        "uat", "--config", config_path, "--num-threads", "3", "--out", str(out_path)
    )
    assert code == EXIT_OK
    assert out_path.read_text(encoding="utf-8") == first

    reseeded = run_cli("uat", "--config", config_path, "--seed", "5")[1]
    assert reseeded != first
    assert all(row[6] == "5" for row in read_csv(reseeded)[1:])


def test_uat_symmetrized_target(tmp_path):
    config_path = small_uat_config(
        tmp_path,
        group={"kind": "symmetric", "n": 3},
        target="symmetrized:sine_mix",
        bounds=[[-1, 1]] * 3,
        widths=[8],
    )
    code, output = run_cli("uat", "--config", config_path)
    assert code == EXIT_OK
    assert len(read_csv(output)) == 2


def test_uat_usage_errors(tmp_path):
    # Default bounds are 2-D but S3 permutes 3 coordinates
    assert run_cli("uat", "--group", "symmetric:3")[0] == EXIT_USAGE

    # swap_poly is only defined on R^2
    config_path = small_uat_config(
        tmp_path, group={"kind": "cyclic", "n": 3}, bounds=[[-1, 1]] * 3
    )
    assert run_cli("uat", "--config", config_path)[0] == EXIT_USAGE

    assert run_cli("uat", "--num-threads", "0")[0] == EXIT_USAGE


def test_uat_invalid_rep_fails(tmp_path):
    matrices = 2.0 * np.array([np.eye(2), [[0.0, 1.0], [1.0, 0.0]]])
    (tmp_path / "doubled.json").write_text(
        json.dumps(matrices.tolist()), encoding="utf-8"
    )
    config_path = small_uat_config(
        tmp_path, domain_rep={"kind": "file", "path": "doubled.json"}
    )
    assert run_cli("uat", "--config", config_path)[0] == EXIT_CHECK_FAILED


# -----------------------------------------------------------------------------


def test_lift_demo_swap():
    code, output = run_cli("lift-demo")
    assert code == EXIT_OK
    assert "block 0:\n  1 0\n  0 1\n" in output
    assert "block 1:\n  0 1\n  1 0\n" in output
    assert "lifted embedding: yes" in output


def test_lift_demo_trivial_group():
    code, output = run_cli("lift-demo", "--group", "cyclic:1")
    assert code == EXIT_OK
    assert "carrier size: 1" in output


def test_lift_demo_explicit_action(tmp_path):
    config_path = write_config(tmp_path, {"action": [[0, 1], [1, 0], [2, 2]]})
    code, output = run_cli("lift-demo", "--config", config_path)
    assert code == EXIT_OK
    assert "carrier size: 3" in output


def test_lift_demo_rejects_non_action(tmp_path):
    config_path = write_config(tmp_path, {"action": [[1, 0], [0, 1]]})
    code, output = run_cli("lift-demo", "--config", config_path)
    assert code == EXIT_CHECK_FAILED
    assert "action laws: no" in output
    assert "(0, 0)" in output


def test_lift_demo_rejects_ragged_action(tmp_path):
    config_path = write_config(tmp_path, {"action": [[0, 1], [1]]})
    code, output = run_cli("lift-demo", "--config", config_path)
    assert code == EXIT_CHECK_FAILED
    assert "block 0:" not in output
