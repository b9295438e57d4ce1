import io
import math

import numpy as np
import pytest

import helpers
from nuqcorr.scan import (CSV_COLUMNS, PRESET_NOTES, PRESETS, ConfigError,
                          ExperimentParams, load_config, run_scan, with_grid_points,
                          write_csv)
from nuqcorr.oscillation import MixingSpec


def small(preset, n=16):
    return with_grid_points(PRESETS[preset], n)


def parse_csv(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    header = lines[0].split(",")
    rows = [dict(zip(header, map(float, ln.split(",")))) for ln in lines[1:]]
    return header, rows


class TestPresets:
    def test_daya_bay_values(self):
        p = PRESETS["daya-bay"]
        assert p.mixing.dm2_ev2 == pytest.approx(2.42e-3)
        assert p.mixing.sin2_2theta == pytest.approx(0.084, abs=1e-12)
        assert p.baseline_km == (0.364, 1.912)
        assert 1.0 <= p.energy_mev <= 8.0
        assert p.initial_flavor == "e"

    def test_kamland_literal_angle_reading(self):
        p = PRESETS["kamland"]
        assert p.mixing.dm2_ev2 == pytest.approx(7.49e-5)
        assert p.mixing.sin2_2theta == pytest.approx(0.47 / 1.47, abs=1e-12)
        assert p.baseline_km[1] == pytest.approx(180.0)
        assert 2.0 <= p.energy_mev <= 10.0

    def test_kamland_alternate_angle_reading(self):
        p = PRESETS["kamland-alt"]
        s2 = 0.47 / 1.47
        want = 4 * s2 * (1 - s2)
        assert p.mixing.sin2_2theta == pytest.approx(want, abs=1e-12)

    def test_minos_values(self):
        p = PRESETS["minos"]
        assert p.initial_flavor == "mu"
        assert p.mixing.dm2_ev2 == pytest.approx(2.32e-3)
        assert p.mixing.sin2_2theta == pytest.approx(0.95, abs=1e-12)
        assert p.baseline_km[1] == pytest.approx(735.0)
        assert 500.0 <= p.energy_mev <= 50000.0

    def test_every_preset_has_provenance_notes(self):
        for name in PRESETS:
            assert name in PRESET_NOTES

    def test_width_defaults_flagged_as_package_choices(self):
        flat = " ".join(" ".join(PRESET_NOTES[n]) for n in ("daya-bay", "kamland", "minos"))
        assert flat.count("NOT-FROM-PAPER") >= 3


class TestConfig:
    def test_full_config_roundtrip(self, tmp_path):
        cfg = tmp_path / "scan.cfg"
        cfg.write_text(
            "# custom run\n"
            "name = custom-run\n"
            "initial_flavor = e\n"
            "dm2_ev2 = 2.0e-3\n"
            "sin2_2theta = 0.1\n"
            "energy_mev = 5.0\n"
            "sigma_x_m = 1e-13\n"
            "baseline_min_km = 0.0\n"
            "baseline_max_km = 3.0\n"
            "grid_points = 64\n")
        p = load_config(cfg)
        assert p.name == "custom-run"
        assert p.mixing.dm2_ev2 == pytest.approx(2.0e-3)
        assert p.mixing.sin2_2theta == pytest.approx(0.1, abs=1e-12)
        assert p.sigma_x_m == pytest.approx(1e-13)
        assert p.baseline_km == (0.0, 3.0)
        assert p.grid_points == 64

    def test_preset_with_width_override(self, tmp_path):
        cfg = tmp_path / "scan.cfg"
        cfg.write_text("preset = daya-bay\nsigma_x_m = 9e-14\n")
        p = load_config(cfg)
        base = PRESETS["daya-bay"]
        assert p.sigma_x_m == pytest.approx(9e-14)
        assert p.mixing == base.mixing
        assert p.baseline_km == base.baseline_km

    def test_plane_wave_sentinel(self, tmp_path):
        cfg = tmp_path / "scan.cfg"
        cfg.write_text("preset = minos\nsigma_x_m = inf\n")
        assert math.isinf(load_config(cfg).sigma_x_m)

    def test_negative_energy_names_field(self, tmp_path):
        cfg = tmp_path / "scan.cfg"
        cfg.write_text("preset = daya-bay\nenergy_mev = -3\n")
        with pytest.raises(ConfigError, match="energy_mev"):
            load_config(cfg)

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "scan.cfg"
        cfg.write_text("preset = daya-bay\nenergy_gev = 3\n")
        with pytest.raises(ConfigError, match="energy_gev"):
            load_config(cfg)

    def test_missing_fields_listed(self, tmp_path):
        cfg = tmp_path / "scan.cfg"
        cfg.write_text("initial_flavor = e\ndm2_ev2 = 1e-3\nsin2_2theta = 0.1\n")
        with pytest.raises(ConfigError, match="missing required"):
            load_config(cfg)

    def test_conflicting_angle_keys(self, tmp_path):
        cfg = tmp_path / "scan.cfg"
        cfg.write_text("preset = daya-bay\nsin2_2theta = 0.1\ntan2_theta = 0.4\n")
        with pytest.raises(ConfigError, match="at most one"):
            load_config(cfg)

    def test_unknown_preset_lists_valid_ones(self, tmp_path):
        cfg = tmp_path / "scan.cfg"
        cfg.write_text("preset = dayabay\n")
        with pytest.raises(ConfigError, match="daya-bay"):
            load_config(cfg)

    def test_bad_grid_points(self, tmp_path):
        cfg = tmp_path / "scan.cfg"
        cfg.write_text("preset = daya-bay\ngrid_points = 1\n")
        with pytest.raises(ConfigError, match="grid_points"):
            load_config(cfg)

    def test_angle_out_of_range_names_key(self, tmp_path):
        cfg = tmp_path / "scan.cfg"
        cfg.write_text("preset = daya-bay\nsin2_2theta = 1.5\n")
        with pytest.raises(ConfigError, match="sin2_2theta"):
            load_config(cfg)


class TestRunScan:
    def test_row_count_and_ordering(self):
        table = run_scan(small("daya-bay"), "wave-packet")
        assert len(table.rows) == 16
        xs = [x for x, _ in table.rows]
        assert all(b > a for a, b in zip(xs, xs[1:]))

    def test_two_point_scan_from_origin(self):
        params = ExperimentParams(
            name="origin", initial_flavor="e",
            mixing=MixingSpec.from_sin2_2theta(0.5, 1e-3),
            energy_mev=4.0, sigma_x_m=1e-13, baseline_km=(0.0, 10.0), grid_points=2)
        table = run_scan(params, "wave-packet")
        x0, rep0 = table.rows[0]
        assert x0 == 0.0
        assert rep0.survival_prob == pytest.approx(1.0, abs=1e-14)
        for field in ("mutual_info", "cond_entropy", "discord", "classical_corr",
                      "c_re", "c_hs", "c_hs_nl"):
            assert abs(getattr(rep0, field)) < 1e-12

    def test_deterministic(self):
        a = run_scan(small("kamland"), "wave-packet")
        b = run_scan(small("kamland"), "wave-packet")
        assert a.rows == b.rows

    def test_grid_refinement_keeps_shared_points(self):
        params = ExperimentParams(
            name="grid", initial_flavor="e",
            mixing=MixingSpec.from_sin2_2theta(0.3, 1e-3),
            energy_mev=4.0, sigma_x_m=1e-13, baseline_km=(0.0, 4.0), grid_points=5)
        coarse = run_scan(params, "wave-packet")
        fine = run_scan(with_grid_points(params, 9), "wave-packet")
        for i, (x, rep) in enumerate(coarse.rows):
            x2, rep2 = fine.rows[2 * i]
            assert x2 == pytest.approx(x, abs=1e-15)
            for field in CSV_COLUMNS[1:]:
                assert getattr(rep2, field) == pytest.approx(
                    getattr(rep, field), abs=1e-12), field

    def test_tail_extends_range(self):
        table = run_scan(small("daya-bay"), "wave-packet", tail=True)
        assert table.rows[-1][0] == pytest.approx(19.12)

    def test_tail_factor_validated(self):
        with pytest.raises(ConfigError, match="tail_factor"):
            run_scan(small("daya-bay"), "wave-packet", tail=True, tail_factor=0.5)

    def test_bad_picture(self):
        with pytest.raises(ConfigError, match="picture"):
            run_scan(small("daya-bay"), "exact")

    def test_minos_tail_reaches_closed_form_asymptote(self):
        table = run_scan(small("minos", 64), "wave-packet", tail=True)
        mi_end = table.rows[-1][1].mutual_info
        want = helpers.asymptotic_mutual_info(PRESETS["minos"].mixing.matrix, 1)
        assert mi_end == pytest.approx(want, abs=1e-6)
        # at exactly maximal mixing the asymptote would be one full bit
        maximal = MixingSpec(math.pi / 4, 2.32e-3)
        assert helpers.asymptotic_mutual_info(maximal.matrix, 1) == pytest.approx(1.0, abs=1e-12)

    def test_daya_bay_tail_settles_low(self):
        table = run_scan(small("daya-bay", 64), "wave-packet", tail=True)
        mi_end = table.rows[-1][1].mutual_info
        want = helpers.asymptotic_mutual_info(PRESETS["daya-bay"].mixing.matrix, 0)
        assert mi_end == pytest.approx(want, abs=1e-6)
        big = helpers.asymptotic_mutual_info(PRESETS["minos"].mixing.matrix, 1)
        assert mi_end < 0.5 * big

    def test_budget_residual_every_row(self):
        for preset in ("daya-bay", "kamland", "minos"):
            table = run_scan(small(preset, 32), "wave-packet", tail=True)
            assert max(abs(rep.ccr_residual) for _, rep in table.rows) < 1e-10

    def test_plane_wave_rows_are_pure(self):
        table = run_scan(small("daya-bay", 16), "plane-wave")
        for _, rep in table.rows:
            assert rep.ccr_residual == pytest.approx(0.0, abs=1e-10)
            assert rep.p_hs + rep.c_hs + rep.c_hs_nl == pytest.approx(0.5, abs=1e-12)


class TestCsv:
    def test_header_contract(self):
        buf = io.StringIO()
        write_csv(run_scan(small("daya-bay", 4), "wave-packet"), buf)
        header, rows = parse_csv(buf.getvalue())
        assert header == list(CSV_COLUMNS)
        assert len(rows) == 4

    def test_line_counts(self):
        table = run_scan(small("daya-bay", 2), "wave-packet")
        bare = io.StringIO()
        write_csv(table, bare, comments=False)
        assert len(bare.getvalue().splitlines()) == 3
        commented = io.StringIO()
        write_csv(table, commented)
        lines = commented.getvalue().splitlines()
        assert len([ln for ln in lines if not ln.startswith("#")]) == 3
        meta = [ln for ln in lines if ln.startswith("#")]
        assert any("sigma_x_m" in ln for ln in meta)
        assert any("energy_mev" in ln for ln in meta)

    def test_round_trip_precision(self):
        table = run_scan(small("kamland", 8), "wave-packet")
        buf = io.StringIO()
        write_csv(table, buf)
        _, rows = parse_csv(buf.getvalue())
        for (x, rep), row in zip(table.rows, rows):
            # 12 significant digits: absolute for order-one values, relative
            # for the km-scale x column
            assert row["x_km"] == pytest.approx(x, rel=1e-10, abs=1e-10)
            for field in CSV_COLUMNS[1:]:
                want = getattr(rep, field) if field != "survival_prob" else rep.survival_prob
                assert row[field] == pytest.approx(want, rel=1e-10, abs=1e-10), field

    def test_golden_determinism(self, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            write_csv(run_scan(small("daya-bay", 8), "wave-packet"), str(path))
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_lf_line_endings(self, tmp_path):
        path = tmp_path / "scan.csv"
        write_csv(run_scan(small("daya-bay", 4), "wave-packet"), str(path))
        assert b"\r" not in path.read_bytes()

    def test_write_error_names_path(self, tmp_path):
        with pytest.raises(OSError, match="no-such-dir"):
            write_csv(run_scan(small("daya-bay", 2), "wave-packet"),
                      str(tmp_path / "no-such-dir" / "x.csv"))
