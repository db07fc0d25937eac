import io
import json

import pytest

from netscore.cli import run
from netscore.registry import seed_text


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_score_identity():
    assert call("score", "--accuracy", "100", "--params", "1e6", "--macs", "1e9") == (0, "80.00\n", "")


def test_score_normalized_flags():
    code, out, _ = call("score", "--accuracy", "70.6", "--params-m", "4.24", "--macs-g", "0.569")
    assert (code, out) == (0, "70.13\n")


def test_score_density():
    code, out, _ = call("score", "--metric", "density", "--accuracy", "57.5",
                        "--params", "1250000", "--macs", "860000000")
    assert (code, out) == (0, "46.00\n")


def test_score_non_default_coefficients_commented():
    code, out, _ = call("score", "--accuracy", "10", "--params", "5", "--macs", "7",
                        "--alpha", "1", "--beta", "0", "--gamma", "0")
    assert code == 0
    assert out == "# alpha=1 beta=0 gamma=0\n20.00\n"


@pytest.mark.parametrize(
    "argv",
    [
        ("score", "--accuracy", "70", "--params", "1e6", "--macs-g", "1"),
        ("score", "--accuracy", "70", "--params", "1e6"),
        ("score", "--accuracy", "70", "--params-m", "1"),
        ("score", "--accuracy", "70", "--params", "1e6", "--macs", "1e9", "--alpha", "0", "--beta", "0", "--gamma", "0"),
        ("score", "--accuracy", "70", "--params", "1.5", "--macs", "1"),
        ("frobnicate",),
        ("rank", "--metric", "top1"),
        ("rank", "--registry", "networks_ilsvrc2012.json", "--metric", "top1", "--bogus"),
        (),
    ],
)
def test_usage_errors_exit_1(argv):
    code, out, err = call(*argv)
    assert code == 1
    assert out == ""
    assert "usage" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("score", "--accuracy", "0.706", "--params", "1e6", "--macs", "1e9"),
        ("score", "--accuracy", "70", "--params", "0", "--macs", "1e9"),
        ("score", "--accuracy", "170", "--params-m", "1", "--macs-g", "1"),
        ("analyze", "no/such/file.json"),
    ],
)
def test_data_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_rank_top3():
    code, out, _ = call("rank", "--registry", "networks_ilsvrc2012.json", "--metric", "netscore", "--top", "3")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert "SqueezeNext (1.0-23v5)" in lines[0]
    assert "CondenseNet (G=C=8)" in lines[1]
    assert "MobileNetv2" in lines[2]


def test_rank_csv_and_range(tmp_path):
    code, out, err = call("rank", "--registry", "networks_ilsvrc2012.json", "--metric", "density",
                          "--format", "csv", "--range")
    assert code == 0
    assert out.splitlines()[0] == "rank,name,metric,value"
    assert len(out.splitlines()) == 61
    assert "ratio=" in err


def test_rank_custom_coefficients_comment():
    code, out, _ = call("rank", "--registry", "networks_ilsvrc2012.json", "--metric", "netscore",
                        "--alpha", "1", "--beta", "1", "--gamma", "0", "--top", "1", "--format", "md")
    assert code == 0
    assert out.startswith("# alpha=1 beta=1 gamma=0\n| rank |")


def test_rank_reads_file(tmp_path):
    path = tmp_path / "reg.json"
    path.write_text(seed_text())
    code, out, _ = call("rank", "--registry", str(path), "--metric", "top1", "--top", "1")
    assert code == 0 and "AmoebaNet-C (6, 228)" in out


def test_rank_invalid_registry(tmp_path):
    doc = json.loads(seed_text())
    doc["records"][3]["params"] = 0
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, err = call("rank", "--registry", str(path), "--metric", "top1")
    assert code == 2
    assert doc["records"][3]["name"] in err and "params" in err


def test_analyze_alexnet():
    code, out, _ = call("analyze", "alexnet.json")
    assert code == 0
    assert "conv1" in out and "105415200" in out
    total = int(out.split("AlexNet: ")[1].split()[0])
    assert abs(total - 61e6) / 61e6 < 0.01


def test_analyze_formats(tmp_path):
    code, out, _ = call("analyze", "squeezenet_v1_0", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "layer,type,output,params,macs"
    assert out.splitlines()[-1].startswith("total,,,1248424,")
    code, out, _ = call("analyze", "vgg16.json", "--format", "md")
    assert code == 0 and "| **total** | | | 138357544 | 15470264320 |" in out


def test_plot(tmp_path):
    svg = tmp_path / "top1.svg"
    code, out, err = call("plot", "--registry", "networks_ilsvrc2012.json", "--metric", "top1",
                          "--out", str(svg), "--sort", "name", "--width", "900")
    assert code == 0 and out == ""
    text = svg.read_text()
    assert text.count("<rect ") == 60 and 'width="900"' in text


def test_validate(tmp_path):
    assert call("validate", "--registry", "networks_ilsvrc2012.json") == (0, "ok: 60 records\n", "")
    code, out, _ = call("validate", "--arch", "mobilenet_v1.json")
    assert code == 0 and out.startswith("ok: MobileNetv1")
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": 1, "name": "x", "input": {"height": 4, "width": 4, "channels": 1},'
                   ' "layers": [{"id": "a", "type": "conv2d", "inputs": ["convX"], "out_channels": 1, "kernel": 1}]}')
    code, _, err = call("validate", "--arch", str(bad))
    assert code == 2 and "convX" in err
    code, _, err = call("validate", "--registry", str(bad))
    assert code == 2


@pytest.mark.parametrize("sub", ["score", "analyze", "rank", "plot", "validate"])
def test_help_exits_zero(sub):
    code, out, _ = call(sub, "--help")
    assert code == 0
    assert "usage" in out
    if sub == "score":
        for flag in ("--accuracy", "--params", "--macs", "--params-m", "--macs-g", "--alpha", "--beta", "--gamma", "--metric"):
            assert flag in out


def test_deterministic_output(tmp_path):
    first = call("rank", "--registry", "networks_ilsvrc2012.json", "--metric", "netscore", "--format", "md")
    assert first == call("rank", "--registry", "networks_ilsvrc2012.json", "--metric", "netscore", "--format", "md")
