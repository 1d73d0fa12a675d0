import json
import math
import os
import subprocess

import pytest

import zap

ZAP_BIN = os.environ.get("ZAP_BIN")


def test_classical_values():
    assert abs(zap.zeta(2) - math.pi**2 / 6) < 1e-14
    assert abs(zap.zeta(-1) + 1 / 12) < 1e-14
    assert abs(zap.zeta_deriv(1, 2) + 0.9375482543158437537) < 1e-12


def test_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 30
    for s in (0.5 + 50j, -3 + 7j, 2 + 300j):
        jet = zap.zeta_jet(2, s)
        for k in range(3):
            ref = complex(mpmath.zeta(s, 1, k))
            assert abs(jet[k] - ref) <= 1e-11 * abs(ref)


def test_regions_and_trivial():
    assert zap.find_e2(1, 1) == 2.0
    t = zap.trivial_apoint(1, 1, 15)
    assert t["winding"] == 1
    assert t["newton_residual"] <= 1e-9


def test_locate_and_count():
    r = zap.Rect(-1, 3, 10, 30)
    assert zap.winding(1, 0, r) == 1
    (p,) = zap.locate(1, 0, r)
    assert abs(complex(p["beta"], p["gamma"]) - (2.46316186945432 + 23.29832049276286j)) < 1e-9
    pts = zap.scan(1, 1, 1, 100)
    n = sum(1 for q in pts if q["gamma"] > 1)
    assert abs(n - zap.count_main(1, 1, 100)) / math.log(100) <= 10


def test_coefficients():
    l2 = math.log(2)
    assert abs(zap.alpha(1, 1, 2) + l2**2) < 1e-14
    assert zap.alpha(1, 1, 2.5) == 0
    assert abs(zap.alpha_zero(1, 1.0) + l2) < 1e-14
    oracle = dict(zap.alpha_oracle(1, 1, 30))
    for x in range(2, 31):
        want = oracle.get(float(x), 0)
        got = zap.alpha(1, 1, x)
        assert abs(got - want) <= 1e-12 * max(abs(want), 1e-2)


def test_census_partition():
    rho = [(0.5, 150.0), (0.9, 160.0), (0.1, 170.0), (0.5, 10.0)]
    c = zap.census(1, 1, 100, 100, rho)
    assert c["n1"] + c["n2"] + c["n3"] == c["total"] == 3


def test_errors():
    with pytest.raises(zap.ZapError):
        zap.zeta(1)
    with pytest.raises(zap.ZapError):
        zap.band_halfwidth(2)


@pytest.mark.skipif(not ZAP_BIN, reason="CLI binary not available")
def test_cli(tmp_path):
    out = tmp_path / "pts.jsonl"
    r = subprocess.run([ZAP_BIN, "scan", "--k", "1", "--a", "1,0", "--t0", "1", "--t1", "60", "--jobs", "2",
                        "--out", str(out)], capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    lines = out.read_text().splitlines()
    assert lines
    rec = json.loads(lines[0])
    for key in ("k", "a_re", "a_im", "beta", "gamma", "residual", "box", "window_id"):
        assert key in rec
    gammas = [json.loads(l)["gamma"] for l in lines]
    assert gammas == sorted(gammas)

    r = subprocess.run([ZAP_BIN, "count", "--points", str(out), "--T", "30", "--T", "60"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "k,a_re,a_im,T,observed,predicted,ratio,pass"

    r = subprocess.run([ZAP_BIN, "census", "--points", str(out), "--T", "20", "--U", "40",
                        "--svg", str(tmp_path / "b.svg")], capture_output=True, text=True)
    assert r.stdout.startswith("k,a_re,a_im,T,U,halfwidth,n1,n2,n3,total")
    assert (tmp_path / "b.svg").read_text().startswith("<svg")

    r = subprocess.run([ZAP_BIN, "coeffs", "--k", "1", "--a", "1,0", "--max", "4"], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "index,alpha_re,alpha_im"
    assert len(r.stdout.splitlines()) == 4

    r = subprocess.run([ZAP_BIN, "regions", "--k", "1", "--a", "1,0", "--t-hi", "100", "--rows", "3"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert "n,beta,gamma,winding,newton_residual" in r.stdout

    # corrupted points file
    data = out.read_text()
    out.write_text(data.replace("1", "2", 1))
    r = subprocess.run([ZAP_BIN, "census", "--points", str(out), "--T", "20", "--U", "40"],
                       capture_output=True, text=True)
    assert r.returncode == 1
    assert "ChecksumMismatch" in r.stderr

    # usage errors
    assert subprocess.run([ZAP_BIN, "scan", "--k", "1"], capture_output=True).returncode == 2
    assert subprocess.run([ZAP_BIN], capture_output=True).returncode == 2
    assert subprocess.run([ZAP_BIN, "scan", "--k", "1", "--a", "x", "--t0", "1", "--t1", "2"],
                          capture_output=True).returncode == 2
    assert subprocess.run([ZAP_BIN, "--help"], capture_output=True).returncode == 0
