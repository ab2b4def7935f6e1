import json
import math

import numpy as np
import pytest

from flipswitch.cli import main

pytestmark = pytest.mark.usefixtures("tmp_path")


def read_csv(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    data = np.array([[float(x) for x in line.split(",")] for line in lines[1:]])
    return header, data


def column(path, name):
    header, data = read_csv(path)
    return data[:, header.index(name)]


def test_check_valid_depolarizing(tmp_path):
    out = tmp_path / "check.csv"
    code = main(["check", "--family", "dcp", "--param", "0.5", "--out", str(out)])
    assert code == 0
    header, data = read_csv(out)
    assert header[0] == "t"
    assert np.all(column(out, "cptp_valid") == 1.0)
    assert np.max(np.abs(column(out, "gamma_z"))) <= 1e-15
    assert np.all(column(out, "td_witness") == 0.0)


def test_check_invalid_depolarizing_exits_3(tmp_path):
    out = tmp_path / "check.csv"
    code = main(["check", "--family", "dcp", "--param", "0.4", "--out", str(out)])
    assert code == 3
    assert np.any(column(out, "cptp_valid") == 0.0)


def test_check_nonunital_rates(tmp_path):
    out = tmp_path / "check.csv"
    code = main(["check", "--family", "nonunital-eternal", "--param", "0", "--out", str(out)])
    assert code == 0
    ts = column(out, "t")
    gz = column(out, "gamma_z")
    idx = np.argmin(np.abs(ts - 1.0))
    assert abs(ts[idx] - 1.0) <= 1e-12
    assert abs(gz[idx] - (-0.25 * math.tanh(0.5))) <= 1e-12


def test_check_custom_family_from_config(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "family": "custom",
        "custom": {"lam": "exp(-2*t)", "lam_z": "exp(-t)", "lam_star": "0*t"},
        "grid": {"t_max": 5.0, "steps": 50},
    }))
    out = tmp_path / "check.csv"
    code = main(["check", "--config", str(cfg), "--out", str(out)])
    assert code == 0
    gp = column(out, "gamma_plus")
    assert np.max(np.abs(gp - 0.5)) <= 1e-4


def test_evolve_reference_point_and_stability(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    args = ["evolve", "--family", "dcp", "--param", "3", "--supermap", "flip",
            "--pair", "plus-minus", "--tmax", "10", "--steps", "2000"]
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert b"\r" not in out1.read_bytes()
    header, data = read_csv(out1)
    assert header == ["t", "trace_distance", "success_prob_1", "success_prob_2"]
    ts = data[:, 0]
    idx = np.argmin(np.abs(ts - 1.0))
    expected = (4.0 * math.exp(-2.0) + math.e - 1.0) / (3.0 * math.e + 1.0)
    assert abs(data[idx, 1] - expected) <= 1e-9
    assert abs(data[idx, 2] - (3.0 + math.exp(-1.0)) / 4.0) <= 1e-9
    assert abs(data[0, 1] - 1.0) <= 1e-12  # orthogonal pair at t = 0


def test_evolve_raw_channel_has_no_prob_columns(tmp_path):
    out = tmp_path / "raw.csv"
    code = main(["evolve", "--family", "gad", "--param", "1", "--supermap", "none",
                 "--tmax", "5", "--steps", "100", "--out", str(out)])
    assert code == 0
    header, data = read_csv(out)
    assert header == ["t", "trace_distance"]
    assert np.max(np.abs(data[:, 1] - np.exp(-data[:, 0]))) <= 1e-11


def test_evolve_switch_gad_oscillation_band(tmp_path):
    out = tmp_path / "sw.csv"
    code = main(["evolve", "--family", "gad", "--param", "1", "--supermap", "switch",
                 "--tmax", "30", "--steps", "3000", "--out", str(out)])
    assert code == 0
    values = column(out, "trace_distance")
    tail = values[1500:]
    assert np.max(tail) <= 0.2 + 1e-6
    assert np.min(tail) >= 1.0 / 29.0 - 1e-6


def test_evolve_entanglement_columns(tmp_path):
    out = tmp_path / "ne.csv"
    code = main(["evolve", "--family", "eternal", "--param", "2", "--supermap", "none",
                 "--measure", "ne", "--tmax", "10", "--steps", "1000", "--out", str(out)])
    assert code == 0
    header, data = read_csv(out)
    assert header == ["t", "concurrence", "eof"]
    idx = 100  # t = 1
    assert abs(data[idx, 1] - (math.exp(-1) + math.exp(-2)) / 2.0) <= 1e-10


def test_evolve_minus_postselection_degenerates_at_zero(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"control": {"postselect": "minus"}}))
    code = main(["evolve", "--family", "dcp", "--param", "3", "--supermap", "flip",
                 "--config", str(cfg), "--out", str(tmp_path / "x.csv")])
    assert code == 4
    err = capsys.readouterr().err
    assert "t = 0" in err


def test_evolve_flip_nonunital_rejected(tmp_path):
    code = main(["evolve", "--family", "gad", "--param", "1", "--supermap", "flip",
                 "--out", str(tmp_path / "x.csv")])
    assert code == 2


def test_evolve_with_vector_control_state(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "control": {"initial": [[0.6, 0.0], [0.8, 0.0]], "postselect": "plus"},
    }))
    out = tmp_path / "v.csv"
    code = main(["evolve", "--family", "dcp", "--param", "3", "--supermap", "flip",
                 "--config", str(cfg), "--tmax", "2", "--steps", "50", "--out", str(out)])
    assert code == 0
    probs = column(out, "success_prob_1")
    assert np.all(probs > 0.5)
    bad = tmp_path / "bad_ctrl.json"
    bad.write_text(json.dumps({"control": {"initial": [0.6, 0.8]}}))
    code = main(["evolve", "--family", "dcp", "--param", "3", "--supermap", "flip",
                 "--config", str(bad), "--out", str(out)])
    assert code == 2


def test_config_error_paths(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["check", "--config", str(bad)]) == 2
    assert main(["check", "--param", "1"]) == 2  # family missing
    assert main(["evolve", "--family", "dcp"]) == 2  # param missing
    assert main(["measure", "--family", "dcp", "--param", "1", "--measure", "none"]) == 2
    assert main(["reproduce", "fig99", "--out", str(tmp_path)]) == 2
    assert main(["check", "--family", "unknown", "--param", "1"]) == 2  # argparse choice


def test_measure_json_report(tmp_path, capsys):
    code = main(["measure", "--family", "dcp", "--param", "3", "--supermap", "flip",
                 "--pair", "plus-minus", "--tmax", "20", "--steps", "2000"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["measure"] == "nd"
    assert report["value"] > 1e-3
    assert report["revival_intervals"]
    code = main(["measure", "--family", "dcp", "--param", "0.5", "--supermap", "flip",
                 "--pair", "plus-minus", "--tmax", "20", "--steps", "2000"])
    report = json.loads(capsys.readouterr().out)
    assert report["value"] <= 1e-9


def test_measure_search_is_deterministic(tmp_path, capsys):
    args = ["measure", "--family", "dcp", "--param", "3", "--supermap", "flip",
            "--pair", "search", "--seed", "5", "--tmax", "10", "--steps", "500"]
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"pair": {"samples": 40, "seed": 5}}))
    assert main(args + ["--config", str(cfg)]) == 0
    first = capsys.readouterr().out
    assert main(args + ["--config", str(cfg)]) == 0
    second = capsys.readouterr().out
    assert first == second
    report = json.loads(first)
    assert report["pair"] == "search"
    assert report["samples"] == 40
    assert report["value"] > 1e-3


def test_measure_ne_report(capsys):
    code = main(["measure", "--family", "gad", "--param", "2", "--supermap", "switch",
                 "--measure", "ne", "--tmax", "10", "--steps", "1000"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["measure"] == "ne"
    assert report["value"] <= 1e-9


def test_reproduce_fig3(tmp_path, capsys):
    code = main(["reproduce", "fig3", "--out", str(tmp_path)])
    assert code == 0
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == [
        "fig3_inset_nd_vs_omega.csv",
        "fig3_omega=0.5.csv",
        "fig3_omega=1.csv",
        "fig3_omega=3.csv",
        "fig3_omega=9.csv",
    ]
    # monotone for omega <= 1, revivals beyond
    for name, monotone in (("fig3_omega=0.5.csv", True), ("fig3_omega=1.csv", True),
                           ("fig3_omega=3.csv", False), ("fig3_omega=9.csv", False)):
        values = column(tmp_path / name, "trace_distance")
        rises = np.diff(values)
        if monotone:
            assert np.max(rises) <= 1e-10
        else:
            assert np.max(rises) > 1e-5
    ts = column(tmp_path / "fig3_omega=3.csv", "t")
    values = column(tmp_path / "fig3_omega=3.csv", "trace_distance")
    idx = np.argmin(np.abs(ts - 1.0))
    expected = (4.0 * math.exp(-2.0) + math.e - 1.0) / (3.0 * math.e + 1.0)
    assert abs(values[idx] - expected) <= 1e-9
    header, data = read_csv(tmp_path / "fig3_inset_nd_vs_omega.csv")
    assert header == ["omega", "nd"]
    assert data.shape[0] == 50
    omegas, nds = data[:, 0], data[:, 1]
    assert np.all(nds[omegas <= 1.0] <= 1e-9)
    assert np.all(nds[omegas > 1.2] > 1e-4)


def test_reproduce_fig7_growth_summary(tmp_path):
    code = main(["reproduce", "fig7", "--out", str(tmp_path)])
    assert code == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert "fig7_growth_summary.csv" in names
    assert not any("inset" in n for n in names)
    for alpha in (1, 2, 4, 8):
        values = column(tmp_path / f"fig7_alpha={alpha}.csv", "trace_distance")
        rises = np.diff(values)
        assert (rises > 1e-6).sum() > 50  # persistent oscillation
    header, data = read_csv(tmp_path / "fig7_growth_summary.csv")
    assert header == ["alpha", "nd_horizon", "t_max", "gain_per_period"]
    row_for_one = data[data[:, 0] == 1.0][0]
    assert abs(row_for_one[3] - (0.2 - 1.0 / 29.0)) <= 1e-3


def test_reproduce_fig9_zero_one_pair(tmp_path):
    code = main(["reproduce", "fig9", "--out", str(tmp_path)])
    assert code == 0
    values = column(tmp_path / "fig9_mu=0.8.csv", "trace_distance")
    assert abs(values[0] - 1.0) <= 1e-12  # |0>,|1> pair starts orthogonal
    header, data = read_csv(tmp_path / "fig9_inset_nd_vs_mu.csv")
    assert header == ["mu", "nd"]
    mus, nds = data[:, 0], data[:, 1]
    assert nds[0] > nds[-1] > 0.0  # memory grows as the shift direction weakens
    probs1 = column(tmp_path / "fig9_mu=0.8.csv", "success_prob_1")
    probs2 = column(tmp_path / "fig9_mu=0.8.csv", "success_prob_2")
    assert np.max(np.abs(probs1 - probs2)) > 1e-3  # branch probabilities differ


def test_reproduce_entanglement_figvalues_decay(tmp_path):
    for fig in ("fig4", "fig6", "fig8", "fig10"):
        fig_dir = tmp_path / fig
        code = main(["reproduce", fig, "--out", str(fig_dir), "--steps", "400"])
        assert code == 0
        for curve in fig_dir.glob(f"{fig}_*=*.csv"):
            if "inset" in curve.name:
                continue
            values = column(curve, "eof")
            assert values[0] >= values[-1] - 1e-12
            assert np.max(np.diff(values)) <= 1e-9
        inset = list(fig_dir.glob("*inset*"))
        assert len(inset) == 1
        _, data = read_csv(inset[0])
        assert np.max(data[:, 1]) <= 1e-9


def test_reproduce_fig5_constant_curve(tmp_path):
    code = main(["reproduce", "fig5", "--out", str(tmp_path), "--steps", "500"])
    assert code == 0
    values = column(tmp_path / "fig5_nu=1.csv", "trace_distance")
    assert np.max(np.abs(values - 1.0)) <= 1e-11
    values = column(tmp_path / "fig5_nu=4.csv", "trace_distance")
    assert np.max(np.diff(values)) > 1e-4


def test_oracles_command(capsys):
    code = main(["oracles"])
    assert code == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert out.count("PASS") >= 24
    assert "all 24 cases PASS" in out


def test_csv_uses_15_significant_digits(tmp_path):
    out = tmp_path / "p.csv"
    main(["evolve", "--family", "dcp", "--param", "3", "--supermap", "flip",
          "--tmax", "1", "--steps", "10", "--out", str(out)])
    first_data_line = out.read_text().splitlines()[5]
    fields = first_data_line.split(",")
    assert any(len(f.replace(".", "").replace("-", "").lstrip("0")) >= 14 for f in fields[1:])
