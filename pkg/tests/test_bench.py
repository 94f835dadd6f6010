import json

import pytest

from rlentropy import BinaryImage, compression_stats, encode_image
from rlentropy.bench import BenchReport, bench
from rlentropy.errors import RLEntropyError
from rlentropy.fixtures import generate_fixture, example_document


def test_blank_fixture():
    assert generate_fixture("blank", 4, 4) == BinaryImage.blank(4, 4)


def test_checkerboard_fixture():
    assert generate_fixture("checkerboard", 2, 2).to_lists() == [[0, 1], [1, 0]]


def test_text_like_reproducible():
    a = generate_fixture("text-like", 100, 100, 0.1, seed=42)
    b = generate_fixture("text-like", 100, 100, 0.1, seed=42)
    assert a == b
    assert a != generate_fixture("text-like", 100, 100, 0.1, seed=43)
    assert compression_stats(encode_image(a)).ratio > 3
    ink = sum(a.pixels) / len(a.pixels)
    assert ink == pytest.approx(0.1, abs=0.01)


@pytest.mark.parametrize("density", [0.0, 1.0])
def test_text_like_extremes(density):
    img = generate_fixture("text-like", 20, 3, density, seed=1)
    assert set(img.pixels) == {int(density)}


@pytest.mark.parametrize("args", [
    ("text-like", 10, 10, 1.5),
    ("text-like", 10, 10, -0.1),
    ("blank", 0, 10, 0.1),
    ("stripes", 10, 10, 0.1),
])
def test_fixture_errors(args):
    with pytest.raises(RLEntropyError):
        generate_fixture(*args)


def test_bench_report_fields():
    report = bench(example_document(), "seq", "v", repetitions=3, label="t1")
    (r,) = report.results
    assert r.label == "t1" and r.quantifier == "seq" and r.direction == "v"
    assert r.t_compressed > 0 and r.t_uncompressed > 0
    assert r.ratio == r.t_uncompressed / r.t_compressed
    assert (r.width, r.height, r.repetitions) == (14, 13, 3)
    rows = json.loads(report.to_json())
    assert rows[0]["label"] == "t1"
    csv_lines = report.to_csv().splitlines()
    assert csv_lines[0].split(",") == list(BenchReport.FIELDS)
    assert len(csv_lines) == 2


def test_bench_deterministic_except_times():
    doc = encode_image(generate_fixture("text-like", 60, 30, 0.2, seed=5))
    a = bench(doc, "ceq", "h", 3).results[0].__dict__
    b = bench(doc, "ceq", "h", 3).results[0].__dict__
    timing = {"t_compressed", "t_uncompressed", "ratio", "unreliable"}
    assert {k: v for k, v in a.items() if k not in timing} == \
        {k: v for k, v in b.items() if k not in timing}


def test_bench_include_decode():
    r = bench(example_document(), "ceq", "h", 3, include_decode=True).results[0]
    assert r.include_decode


def test_bench_repetitions_floor():
    with pytest.raises(RLEntropyError):
        bench(example_document(), repetitions=2)


def test_bench_detects_disagreement(monkeypatch):
    import rlentropy.bench as b
    from rlentropy.entropy import EntropyFeatures
    monkeypatch.setattr(b, "oracle_features",
                        lambda *a: EntropyFeatures("ceq", "h", 1.0, 1.0, 2.0))
    with pytest.raises(RLEntropyError, match="oracle"):
        bench(example_document(), repetitions=3)
