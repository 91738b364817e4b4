import pytest

import henonseq


def test_generate_matches_preset_and_is_deterministic():
    cfg = henonseq.preset("S3")
    assert cfg.decimation == 84
    a = henonseq.generate(cfg, 20000)
    assert len(a) == 20000
    assert a == henonseq.generate(cfg, 20000)
    assert henonseq.fips140_1(a)["overall"] is True


def test_linear_complexity_examples():
    assert henonseq.linear_complexity("0000") == 0
    assert henonseq.linear_complexity("0001") == 4
    assert henonseq.lc_profile("0001") == [0, 0, 0, 4]
    assert sum(henonseq.conjectured_pmf(4)) == pytest.approx(0.875)


def test_correlation():
    assert henonseq.correlation("1010", "1010") == 1.0
    assert henonseq.correlation("1010", "0101") == -1.0
    assert henonseq.autocorrelation("1010", 1) == -1.0
    support, probs = henonseq.correlation_pmf_exact(4)
    assert support[2] == 0.0
    assert probs[2] == pytest.approx(0.375)


def test_batteries():
    with pytest.raises(henonseq.WrongLength):
        henonseq.fips140_1(henonseq.BitSequence("1" * 100))
    report = henonseq.menezes_battery(henonseq.generate(henonseq.GeneratorConfig(), 128))
    assert report["overall"] is None
    assert len(report["entries"]) == 5 + 64


def test_keyspace():
    assert round(henonseq.keyspace_bits(henonseq.EPSILON_FLOAT32)) == 97
    assert round(henonseq.keyspace_bits()) == 213


def test_vernam_round_trip():
    cfg = henonseq.preset("U2")
    msg = b"attack at dawn"
    ct = henonseq.vernam(msg, cfg)
    assert ct != msg
    assert henonseq.vernam(ct, cfg) == msg
    assert henonseq.vernam(bytes(4), cfg) == henonseq.generate(cfg, 32).to_bytes()


def test_divergence():
    cfg = henonseq.GeneratorConfig()
    cfg.params = henonseq.MapParameters(1.4, 0.3, 10.0, 0.0)
    with pytest.raises(henonseq.DivergenceError):
        henonseq.generate(cfg, 8)
    with pytest.raises(KeyError):
        henonseq.preset("nope")


def test_orbit():
    pts = henonseq.orbit(henonseq.MapParameters(), 2)
    assert pts[0] == (1.0, 0.0)
    assert pts[1] == pytest.approx((-0.4, 0.3))
