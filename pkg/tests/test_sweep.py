import io
import json
import math
from collections import Counter

import pytest

from oracles import brute_force_skipped, lambda_mp
from qlrep import SweepConfig, rc_fraction, run_sweep
from qlrep.sweep import CSV_FIELDS, ConfigError, grid, write_csv, write_json


def test_three_by_three_at_half():
    result = run_sweep(SweepConfig(P=0.5, q_steps=3, p_steps=3, margin=0.25))
    assert (result.total, result.skipped, len(result.points)) == (9, 0, 9)
    assert sorted({r.q for r in result.points}) == [0.25, 0.5, 0.75]
    assert brute_force_skipped(0.5, [0.25, 0.5, 0.75], [0.25, 0.5, 0.75]) == 0


def test_symmetric_cell_at_P_01_is_included():
    # cell (q, p) = (0.5, 0.5) sits on a 3x3 grid with margin 0.25
    result = run_sweep(SweepConfig(P=0.1, q_steps=3, p_steps=3, margin=0.25))
    (rec,) = [r for r in result.points if r.q == 0.5 and r.p == 0.5]
    assert rec.lambda1 == pytest.approx(0.0, abs=1e-15)


def test_cells_at_P_01():
    # lambda(0.05, 0.95) ~ 0.688 is included; lambda(0.5, 0.95) = 1.5 is skipped
    assert float(lambda_mp(0.05, 0.95, 0.1)) == pytest.approx(0.68824720161, abs=1e-10)
    assert float(lambda_mp(0.5, 0.95, 0.1)) == pytest.approx(1.5, abs=1e-12)
    result = run_sweep(SweepConfig(P=0.1, q_steps=10, p_steps=10, margin=0.05))
    qs, ps = grid(0.05, 10), grid(0.05, 10)
    assert qs[0] == 0.05 and ps[-1] == 0.95
    emitted = {(r.q, r.p) for r in result.points}
    assert (0.05, 0.95) in emitted
    narrow = run_sweep(SweepConfig(P=0.1, q_steps=3, p_steps=3, margin=0.05))
    assert (0.5, 0.95) not in {(r.q, r.p) for r in narrow.points}


@pytest.mark.parametrize("P", [0.1, 0.5, 0.9])
def test_skipped_matches_brute_force(P):
    cfg = SweepConfig(P=P, q_steps=41, p_steps=37)
    result = run_sweep(cfg)
    assert result.skipped == brute_force_skipped(P, cfg.q_grid(), cfg.p_grid())
    assert len(result.points) + result.skipped == result.total
    for rec in result.points:
        assert abs(rec.x ** 2 + rec.y ** 2 + rec.z ** 2 - 1.0) <= 1e-12


def test_both_branches_closed_under_y_negation():
    result = run_sweep(SweepConfig(P=0.3, q_steps=21, p_steps=21, sign="both"))
    assert len(result.points) == 2 * (result.total - result.skipped)
    pts = Counter((r.q, r.p, r.x, r.y, r.z) for r in result.points)
    mirrored = Counter((q, p, x, -y, z) for (q, p, x, y, z) in pts.elements())
    assert pts == mirrored


def test_output_order():
    result = run_sweep(SweepConfig(P=0.5, q_steps=5, p_steps=5, sign="both"))
    keys = [(r.q, r.p, r.branch) for r in result.points]
    assert keys == sorted(keys, key=lambda k: (k[0], k[1], k[2] != "plus"))


def test_determinism_and_parallel_parity():
    cfg = SweepConfig(P=0.2, q_steps=31, p_steps=29, sign="both")
    serial = run_sweep(cfg)
    assert run_sweep(cfg) == serial
    assert run_sweep(cfg, workers=3) == serial


def test_rc_fraction_at_half_matches_closed_region():
    n = 101
    qs, ps = grid(0.01, n), grid(0.01, n)
    inside = sum(abs(p - 0.5) <= math.sqrt(q * (1 - q)) for q in qs for p in ps)
    assert rc_fraction(0.5, n) == inside / n ** 2


@pytest.mark.parametrize("P", [0.1, 0.27, 0.4])
def test_rc_fraction_symmetry(P):
    assert rc_fraction(P, 51) == rc_fraction(1 - P, 51)


def test_rc_fraction_deterministic():
    assert rc_fraction(0.5, 31) == rc_fraction(0.5, 31)


@pytest.mark.parametrize("kwargs", [
    dict(P=0.0), dict(P=1.0), dict(P=0.5, q_steps=0), dict(P=0.5, p_steps=2.5),
    dict(P=0.5, margin=0.0), dict(P=0.5, margin=0.5), dict(P=0.5, sign="sideways"),
])
def test_bad_config(kwargs):
    with pytest.raises(ConfigError):
        SweepConfig(**kwargs)


def test_csv_format():
    result = run_sweep(SweepConfig(P=0.5, q_steps=3, p_steps=3, margin=0.25, sign="both"))
    buf = io.StringIO()
    write_csv(result, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "q,p,P,lambda1,phi1,x,y,z,r,g,b,branch"
    assert len(lines) == 1 + len(result.points)
    first = lines[1].split(",")
    assert len(first) == len(CSV_FIELDS)
    assert first[-1] in ("plus", "minus")
    # 17 significant digits round-trip exactly
    assert float(first[5]) == result.points[0].x
    assert first[0] == "0.25"


def test_json_envelope():
    result = run_sweep(SweepConfig(P=0.1, q_steps=7, p_steps=7))
    buf = io.StringIO()
    write_json(result, buf)
    doc = json.loads(buf.getvalue())
    assert set(doc) == {"config", "skipped", "total", "points"}
    assert doc["total"] == 49 and doc["skipped"] == result.skipped
    assert doc["config"]["P"] == 0.1
    assert list(doc["points"][0]) == list(CSV_FIELDS)
