"""Exit criteria.  Each test prints one PASS/FAIL line in the terminal summary."""

import io
import math
import random
import re
import time

import pytest

from netscore.archspec import (
    analyze,
    count_macs,
    graph_from_dict,
    infer_shapes,
    load_bundled,
    simulate_macs,
)
from netscore.cli import run
from netscore.metrics import MetricConfig, NetworkMetrics, netscore
from netscore.registry import (
    MergeConflictError,
    NetworkRecord,
    Registry,
    load_registry,
    load_seed,
    merge,
    seed_text,
    serialize_registry,
)
from netscore.report import emit_bar_chart, emit_table, rank, rank_scores

from conftest import random_arch_doc

TOL = 1e-9

# Families built with efficiency as a design goal; everything else counts as
# accuracy-first for the density comparison.
EFFICIENT_FAMILIES = {
    "SqueezeNet", "SqueezeNext", "TinyDarkNet", "MobileNetv1", "MobileNetv2",
    "ShuffleNet", "CondenseNet", "ZynqNet",
}


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.acceptance(1, "formula exactness")
def test_formula_exactness():
    rng = random.Random(1)
    with Timer() as t:
        assert abs(netscore(NetworkMetrics(100, 10**6, 10**9), MetricConfig()).value - 80.0) <= TOL
        cfg = MetricConfig(1, 0, 0)
        for _ in range(1000):
            a = rng.uniform(1.0001, 100)
            m = NetworkMetrics(a, rng.randint(1, 10**12), rng.randint(1, 10**13))
            assert abs(netscore(m, cfg).value - 20 * math.log10(a)) <= TOL
    assert t.elapsed < 1


@pytest.mark.acceptance(2, "scale-law property suite")
def test_scale_laws():
    rng = random.Random(2)
    with Timer() as t:
        for _ in range(1000):
            cfg = MetricConfig(rng.uniform(0, 4), rng.uniform(0, 4), rng.uniform(0, 4))
            a = rng.uniform(1.5, 50)
            p, m = rng.randint(1, 10**9), rng.randint(1, 10**11)
            k = rng.randint(1, 1000)
            base = netscore(NetworkMetrics(a, p, m), cfg).value
            shift_p = netscore(NetworkMetrics(a, p * k, m), cfg).value - base
            shift_m = netscore(NetworkMetrics(a, p, m * k), cfg).value - base
            assert abs(shift_p + 20 * cfg.beta * math.log10(k)) <= TOL
            assert abs(shift_m + 20 * cfg.gamma * math.log10(k)) <= TOL
            ka = rng.uniform(1.0, 100 / a)
            shift_a = netscore(NetworkMetrics(a * ka, p, m), cfg).value - base
            assert abs(shift_a - 20 * cfg.alpha * math.log10(ka)) <= TOL
    assert t.elapsed < 1


@pytest.mark.acceptance(3, "MAC-counting oracle equivalence")
def test_mac_oracle_equivalence():
    rng = random.Random(3)
    kinds = set()
    with Timer() as t:
        for i in range(100):
            doc = random_arch_doc(rng, n_ops=rng.randint(4, 8), name=f"dag{i}")
            g = infer_shapes(graph_from_dict(doc))
            kinds.update(layer.kind for layer in g.layers)
            kinds.update("depthwise" for layer in g.layers
                         if layer.kind == "conv2d" and layer["groups"] > 1
                         and layer["groups"] == g.shape_of(layer.inputs[0]).channels)
            assert count_macs(g).total == simulate_macs(g), doc["name"]
    assert {"conv2d", "depthwise", "fc", "add", "concat"} <= kinds
    assert kinds & {"maxpool", "avgpool"}
    assert t.elapsed < 60


@pytest.mark.acceptance(4, "architecture transcription checks")
def test_transcriptions():
    alexnet = analyze(load_bundled("alexnet"))
    conv1 = next(row for row in alexnet.per_layer if row.id == "conv1")
    assert abs(alexnet.total_params - 61e6) / 61e6 <= 0.01
    assert conv1.macs == 105_415_200

    vgg = load_bundled("vgg16")
    assert (vgg.input_shape.height, vgg.input_shape.width) == (224, 224)
    vgg = analyze(vgg)
    assert abs(vgg.total_params - 138e6) / 138e6 <= 0.01
    assert abs(vgg.total_macs - 15.5e9) / 15.5e9 <= 0.01

    squeeze = analyze(load_bundled("squeezenet_v1_0"))
    assert abs(squeeze.total_params - 1.25e6) / 1.25e6 <= 0.02


@pytest.mark.acceptance(5, "qualitative reproduction on the seed registry")
def test_paper_claims():
    with Timer() as t:
        reg = load_seed()
        by_netscore = rank(reg, "netscore", MetricConfig())
        by_density = rank(reg, "density")
        top1 = {name: r.metrics.accuracy_percent for name, r in reg.items()}

        # a. NetScore podium
        assert [e.name for e in by_netscore.entries[:3]] == [
            "SqueezeNext (1.0-23v5)", "CondenseNet (G=C=8)", "MobileNetv2",
        ]

        # b. density leaders ahead of every accuracy-first network
        leaders = ["SqueezeNext (1.0-23v5)", "TinyDarkNet", "SqueezeNet", "SqueezeNetv1.1"]
        density = {e.name: e.value for e in by_density.entries}
        others = [n for n, r in reg.items() if r.family not in EFFICIENT_FAMILIES]
        assert others
        assert min(density[n] for n in leaders) > max(density[n] for n in others)
        assert {e.name for e in by_density.entries[:4]} == set(leaders)

        # c. accuracy gain since AlexNet
        assert max(top1, key=top1.get) == "AmoebaNet-C (6, 228)"
        assert top1["AmoebaNet-C (6, 228)"] - top1["AlexNet"] > 25

        # d. efficient networks beat VGG16 on top-1
        efficient = ["MobileNetv1 (1.0-224)", "MobileNetv2"] + [
            n for n, r in reg.items() if r.family == "ShuffleNet"
        ]
        assert len(efficient) == 4
        assert all(top1[n] > top1["VGG16"] for n in efficient)

        # e. compute cost pulls SqueezeNet down under NetScore
        assert by_netscore.rank_of("SqueezeNet") > by_density.rank_of("SqueezeNet")
    assert t.elapsed < 5


def _cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    assert code == 0, err.getvalue()
    return out.getvalue()


@pytest.mark.acceptance(6, "determinism")
def test_determinism(tmp_path):
    with Timer() as t:
        for fmt in ("text", "csv", "md"):
            argv = ["rank", "--registry", "networks_ilsvrc2012.json", "--metric", "netscore", "--format", fmt]
            assert _cli(argv) == _cli(argv)
        outputs = []
        for i in range(2):
            path = tmp_path / f"plot{i}.svg"
            _cli(["plot", "--registry", "networks_ilsvrc2012.json", "--metric", "netscore", "--out", str(path)])
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1]

        ranking = rank_scores("top1", {"a": 10.0, "b": 5.0})
        svg = emit_bar_chart(ranking)
        assert svg == emit_bar_chart(ranking)
        widths = [float(w) for w in re.findall(r'<rect [^>]*width="([0-9.]+)"', svg)]
        assert widths[0] == 2 * widths[1]
        assert emit_table(ranking) == emit_table(ranking)
    assert t.elapsed < 5


@pytest.mark.acceptance(7, "round-trip and merge properties")
def test_round_trip_and_merge():
    with Timer() as t:
        text = seed_text()
        seed = load_registry(text)
        assert load_registry(serialize_registry(seed)) == seed
        assert serialize_registry(seed) == text

        def rec(name, acc):
            return NetworkRecord(name, "f", 2018, NetworkMetrics(acc, 10**6, 10**9), "fixture")

        a = Registry([rec("x", 50), rec("y", 60)])
        b = Registry([rec("y", 70), rec("z", 80)])
        for policy in ("reject_conflicts", "overlay_wins"):
            assert merge(a, Registry(), policy) == a
            assert merge(seed, Registry(), policy) == seed
        merged = merge(a, b, "overlay_wins")
        assert len(merged) == len({"x", "y", "z"})
        assert merged["y"].metrics.accuracy_percent == 70
        with pytest.raises(MergeConflictError) as info:
            merge(a, b, "reject_conflicts")
        assert info.value.names == ["y"]
        assert len(merge(a, Registry([rec("w", 40)]), "reject_conflicts")) == 3
    assert t.elapsed < 1
