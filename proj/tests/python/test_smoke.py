import json
import math
import os
import subprocess

import pytest

import fparadox as fp


def test_predict_alpha_two():
    r = fp.predict(fp.PowerLawSpec(2.0, 1.0, 100.0))
    assert r.branch == fp.Branch.LIMIT_ALPHA_2
    assert r.mean_k == pytest.approx(4.651687056553628, rel=1e-12)
    assert r.var_to_mean == pytest.approx(r.k_ff - r.mean_k, rel=1e-12)


def test_invalid_spec_raises():
    with pytest.raises(fp.Error):
        fp.predict(fp.PowerLawSpec(0.5, 1.0, fp.INFINITE))


def test_stats_identity():
    s = fp.stats_from_degrees([1, 2, 3, 6])
    assert s.mean_k == pytest.approx(3.0)
    assert s.k_ff == pytest.approx(50 / 12)
    assert s.gap == pytest.approx(s.variance / s.mean_k)


def test_generate_and_measure():
    seq = fp.make_graphical(fp.sample_degrees(fp.PowerLawSpec(2.0, 1.0, 30.0), 2000, 3), 3)
    for model in (fp.Model.A, fp.Model.B, fp.Model.KALISKY):
        g = fp.generate(seq, model, 3)
        assert g.num_vertices == len(seq)
        per_vertex, total = fp.drop_report(g, seq)
        assert total == sum(per_vertex)
        assert sum(fp.components(g)) == len(seq)
        degrees = g.degrees()
        assert fp.ff_total_adjacency(g) == sum(k * k for k in degrees)


def test_edge_list_round_trip():
    g = fp.Graph(4, [(0, 1), (1, 2), (2, 3)])
    back = fp.read_edge_list(g.to_edge_list())
    assert back.edges() == g.edges()
    assert fp.global_efficiency(g) == pytest.approx((3 + 2 * 0.5 + 1 / 3) * 2 / 12)


def test_fit_recovers_alpha():
    xs = fp.sample_continuous(fp.PowerLawSpec(2.5, 1.0, fp.INFINITE), 50000, 11)
    fit = fp.fit_alpha(xs, 1.0, fp.INFINITE)
    assert abs(fit.alpha_hat - 2.5) < 4 * fit.stderr
    p = fp.predict(fp.PowerLawSpec(1.7, 1.0, 1000.0))
    assert fp.alpha_from_moment(p.var_to_mean, fp.Moment.VAR_TO_MEAN, 1.0, 1000.0) == pytest.approx(1.7, abs=1e-6)


@pytest.mark.skipif(not os.environ.get("FPARADOX_BIN"), reason="CLI binary not provided")
def test_cli_predict():
    out = subprocess.run([os.environ["FPARADOX_BIN"], "predict", "--alpha", "2.5", "--kmax", "100"],
                         check=True, capture_output=True, text=True).stdout
    doc = json.loads(out)
    assert math.isclose(doc["mean_k"], fp.predict(fp.PowerLawSpec(2.5, 1.0, 100.0)).mean_k, rel_tol=1e-12)
