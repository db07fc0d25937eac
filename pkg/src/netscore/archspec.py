"""Static parameter and MAC counting over declarative layer graphs.

An architecture document is JSON::

    {"format": 1, "name": "tiny",
     "input": {"height": 8, "width": 8, "channels": 3},
     "layers": [{"id": "conv1", "type": "conv2d", "inputs": ["input"],
                 "out_channels": 16, "kernel": [3, 3], "padding": [1, 1]}]}

Counting conventions:

* conv2d params ``(kh*kw*c_in/groups + bias) * c_out``; MACs
  ``kh*kw*(c_in/groups)*c_out*h_out*w_out``.
* fc params ``(in_features + bias) * out_features``; MACs
  ``in_features*out_features``.  A spatial input is flattened implicitly.
* batchnorm holds ``2*C`` params (scale and shift) and no MACs, since it folds
  into the neighbouring conv at inference.
* Bias additions, pooling, activations, add, concat, LRN, softmax, dropout and
  flatten cost nothing.
"""

from __future__ import annotations

import heapq
import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, replace
from importlib import resources
from types import MappingProxyType
from typing import Any, NamedTuple

FORMAT_VERSION = 1
INPUT_ID = "input"

LAYER_KINDS = (
    "conv2d", "fc", "maxpool", "avgpool", "global_avgpool", "batchnorm",
    "activation", "add", "concat", "flatten", "dropout", "lrn", "softmax",
)

# attribute name -> required?
_ATTRS: dict[str, dict[str, bool]] = {
    "conv2d": {"out_channels": True, "kernel": True, "stride": False,
               "padding": False, "groups": False, "bias": False},
    "fc": {"out_features": True, "bias": False},
    "maxpool": {"kernel": True, "stride": False, "padding": False},
    "avgpool": {"kernel": True, "stride": False, "padding": False},
    "global_avgpool": {},
    "batchnorm": {},
    "activation": {"function": False},
    "add": {},
    "concat": {},
    "flatten": {},
    "dropout": {"rate": False},
    "lrn": {"size": False},
    "softmax": {},
}

_SIMULATE_LIMIT = 10**7


class ArchError(ValueError):
    """Base class for architecture document errors."""


class ArchSyntaxError(ArchError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class ArchValidationError(ArchError):
    def __init__(self, layer: str | None, message: str):
        self.layer = layer
        prefix = f"layer {layer!r}: " if layer is not None else ""
        super().__init__(prefix + message)


class ShapeError(ArchValidationError):
    pass


class SimulationLimitError(ArchError):
    pass


@dataclass(frozen=True)
class TensorShape:
    height: int
    width: int
    channels: int

    def __post_init__(self) -> None:
        for name in ("height", "width", "channels"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @property
    def numel(self) -> int:
        return self.height * self.width * self.channels

    def __str__(self) -> str:
        return f"{self.height}x{self.width}x{self.channels}"


@dataclass(frozen=True)
class Layer:
    id: str
    kind: str
    inputs: tuple[str, ...]
    attrs: Mapping[str, Any] = field(default_factory=dict)

    def __getitem__(self, key: str) -> Any:
        return self.attrs[key]


@dataclass(frozen=True)
class ArchGraph:
    name: str
    input_shape: TensorShape
    layers: tuple[Layer, ...]
    shapes: Mapping[str, TensorShape] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "_by_id", {layer.id: layer for layer in self.layers})

    def layer(self, layer_id: str) -> Layer:
        return self._by_id[layer_id]

    @property
    def output(self) -> str:
        consumed = {src for layer in self.layers for src in layer.inputs}
        return next(layer.id for layer in self.layers if layer.id not in consumed)

    def topological_order(self) -> list[str]:
        return _topological_order(self.layers)

    def shape_of(self, layer_id: str) -> TensorShape:
        if layer_id == INPUT_ID:
            return self.input_shape
        if self.shapes is None:
            raise ArchError("graph has no inferred shapes; call infer_shapes first")
        return self.shapes[layer_id]


class LayerStats(NamedTuple):
    id: str
    kind: str
    params: int
    macs: int
    output_shape: TensorShape


class Counts(NamedTuple):
    per_layer: dict[str, int]
    total: int


@dataclass(frozen=True)
class ComplexityReport:
    name: str
    per_layer: tuple[LayerStats, ...]
    total_params: int
    total_macs: int


# -- parsing ---------------------------------------------------------------


def _pair(layer_id: str, name: str, value: Any, minimum: int) -> tuple[int, int]:
    if isinstance(value, int) and not isinstance(value, bool):
        value = [value, value]
    if (
        not isinstance(value, list)
        or len(value) != 2
        or any(isinstance(v, bool) or not isinstance(v, int) for v in value)
    ):
        raise ArchValidationError(layer_id, f"{name} must be an integer or [int, int], got {value!r}")
    if min(value) < minimum:
        raise ArchValidationError(layer_id, f"{name} entries must be >= {minimum}, got {value!r}")
    return value[0], value[1]


def _positive_int(layer_id: str, name: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ArchValidationError(layer_id, f"{name} must be a positive integer, got {value!r}")
    return value


def _normalize_attrs(layer_id: str, kind: str, raw: dict[str, Any]) -> dict[str, Any]:
    spec = _ATTRS[kind]
    unknown = sorted(set(raw) - set(spec))
    if unknown:
        raise ArchValidationError(layer_id, f"unknown attribute(s) for {kind}: {', '.join(unknown)}")
    missing = sorted(k for k, required in spec.items() if required and k not in raw)
    if missing:
        raise ArchValidationError(layer_id, f"missing required attribute(s) for {kind}: {', '.join(missing)}")

    attrs: dict[str, Any] = {}
    if kind == "conv2d":
        attrs["out_channels"] = _positive_int(layer_id, "out_channels", raw["out_channels"])
        attrs["kernel"] = _pair(layer_id, "kernel", raw["kernel"], 1)
        attrs["stride"] = _pair(layer_id, "stride", raw.get("stride", 1), 1)
        attrs["padding"] = _pair(layer_id, "padding", raw.get("padding", 0), 0)
        attrs["groups"] = _positive_int(layer_id, "groups", raw.get("groups", 1))
        attrs["bias"] = raw.get("bias", True)
        if attrs["out_channels"] % attrs["groups"]:
            raise ArchValidationError(
                layer_id, f"groups={attrs['groups']} does not divide out_channels={attrs['out_channels']}"
            )
    elif kind == "fc":
        attrs["out_features"] = _positive_int(layer_id, "out_features", raw["out_features"])
        attrs["bias"] = raw.get("bias", True)
    elif kind in ("maxpool", "avgpool"):
        attrs["kernel"] = _pair(layer_id, "kernel", raw["kernel"], 1)
        attrs["stride"] = _pair(layer_id, "stride", raw.get("stride", raw["kernel"]), 1)
        attrs["padding"] = _pair(layer_id, "padding", raw.get("padding", 0), 0)
    else:
        attrs.update(raw)
    if "bias" in attrs and not isinstance(attrs["bias"], bool):
        raise ArchValidationError(layer_id, f"bias must be true or false, got {attrs['bias']!r}")
    return attrs


def _topological_order(layers: Iterable[Layer]) -> list[str]:
    """Kahn's algorithm; ties broken by id so the order ignores declaration order."""
    layers = list(layers)
    indegree = {layer.id: 0 for layer in layers}
    consumers: dict[str, list[str]] = {INPUT_ID: []}
    for layer in layers:
        consumers.setdefault(layer.id, [])
    for layer in layers:
        for src in set(layer.inputs):
            if src != INPUT_ID:
                indegree[layer.id] += 1
            consumers[src].append(layer.id)
    ready = [lid for lid, deg in indegree.items() if deg == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        lid = heapq.heappop(ready)
        order.append(lid)
        for nxt in consumers[lid]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                heapq.heappush(ready, nxt)
    if len(order) != len(layers):
        stuck = sorted(lid for lid, deg in indegree.items() if deg > 0)
        raise ArchValidationError(stuck[0], f"cycle detected among layers: {', '.join(stuck)}")
    return order


def _reachable(layers: Iterable[Layer]) -> set[str]:
    consumers: dict[str, list[str]] = {}
    for layer in layers:
        for src in layer.inputs:
            consumers.setdefault(src, []).append(layer.id)
    seen: set[str] = set()
    stack = [INPUT_ID]
    while stack:
        for nxt in consumers.get(stack.pop(), []):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def _expect_keys(where: str, obj: dict, required: set[str], optional: set[str] = frozenset()) -> None:
    unknown = sorted(set(obj) - required - optional)
    if unknown:
        raise ArchValidationError(None, f"{where}: unknown field(s): {', '.join(unknown)}")
    missing = sorted(required - set(obj))
    if missing:
        raise ArchValidationError(None, f"{where}: missing field(s): {', '.join(missing)}")


def graph_from_dict(doc: Any) -> ArchGraph:
    """Validate an already-decoded architecture document."""
    if not isinstance(doc, dict):
        raise ArchValidationError(None, "document must be a JSON object")
    _expect_keys("document", doc, {"format", "name", "input", "layers"})
    if doc["format"] != FORMAT_VERSION:
        raise ArchValidationError(None, f"unsupported format {doc['format']!r}; expected {FORMAT_VERSION}")
    if not isinstance(doc["name"], str) or not doc["name"]:
        raise ArchValidationError(None, "name must be a non-empty string")

    raw_input = doc["input"]
    if not isinstance(raw_input, dict):
        raise ArchValidationError(None, "input must be an object")
    _expect_keys("input", raw_input, {"height", "width", "channels"})
    try:
        input_shape = TensorShape(raw_input["height"], raw_input["width"], raw_input["channels"])
    except ValueError as exc:
        raise ArchValidationError(None, f"input: {exc}") from None

    if not isinstance(doc["layers"], list) or not doc["layers"]:
        raise ArchValidationError(None, "layers must be a non-empty array")

    layers: list[Layer] = []
    seen: set[str] = set()
    for index, raw in enumerate(doc["layers"]):
        if not isinstance(raw, dict):
            raise ArchValidationError(None, f"layers[{index}] must be an object")
        layer_id = raw.get("id")
        if not isinstance(layer_id, str) or not layer_id:
            raise ArchValidationError(None, f"layers[{index}]: id must be a non-empty string")
        if layer_id == INPUT_ID:
            raise ArchValidationError(layer_id, f"{INPUT_ID!r} is reserved for the graph input")
        if layer_id in seen:
            raise ArchValidationError(layer_id, "duplicate layer id")
        seen.add(layer_id)
        kind = raw.get("type")
        if kind not in _ATTRS:
            raise ArchValidationError(layer_id, f"unknown layer type {kind!r}")
        inputs = raw.get("inputs")
        if not isinstance(inputs, list) or not inputs or not all(isinstance(s, str) for s in inputs):
            raise ArchValidationError(layer_id, "inputs must be a non-empty array of layer ids")
        if kind == "add" and len(inputs) < 2:
            raise ArchValidationError(layer_id, "add needs at least two inputs")
        if kind not in ("add", "concat") and len(inputs) != 1:
            raise ArchValidationError(layer_id, f"{kind} takes exactly one input, got {len(inputs)}")
        extra = {k: v for k, v in raw.items() if k not in ("id", "type", "inputs")}
        attrs = _normalize_attrs(layer_id, kind, extra)
        layers.append(Layer(layer_id, kind, tuple(inputs), MappingProxyType(attrs)))

    declared = seen | {INPUT_ID}
    for layer in layers:
        for src in layer.inputs:
            if src not in declared:
                raise ArchValidationError(layer.id, f"input references undeclared layer {src!r}")
            if src == layer.id:
                raise ArchValidationError(layer.id, "layer consumes its own output (cycle)")

    _topological_order(layers)
    reachable = _reachable(layers)
    unreachable = [layer.id for layer in layers if layer.id not in reachable]
    if unreachable:
        raise ArchValidationError(unreachable[0], "layer is not reachable from the graph input")
    consumed = {src for layer in layers for src in layer.inputs}
    terminals = [layer.id for layer in layers if layer.id not in consumed]
    if len(terminals) != 1:
        raise ArchValidationError(
            None, f"graph must have exactly one output layer, found {len(terminals)}: {', '.join(terminals)}"
        )
    return ArchGraph(doc["name"], input_shape, tuple(layers))


def parse_arch(document: str) -> ArchGraph:
    """Parse and validate an architecture document (JSON text)."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ArchSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    return graph_from_dict(doc)


def graph_to_dict(graph: ArchGraph) -> dict[str, Any]:
    layers = []
    for layer in graph.layers:
        entry: dict[str, Any] = {"id": layer.id, "type": layer.kind, "inputs": list(layer.inputs)}
        for key, value in layer.attrs.items():
            entry[key] = list(value) if isinstance(value, tuple) else value
        layers.append(entry)
    shape = graph.input_shape
    return {
        "format": FORMAT_VERSION,
        "name": graph.name,
        "input": {"height": shape.height, "width": shape.width, "channels": shape.channels},
        "layers": layers,
    }


# -- shapes ------------------------------------------------------------------


def _window_out(layer_id: str, size: int, kernel: int, stride: int, pad: int) -> int:
    out = (size + 2 * pad - kernel) // stride + 1
    if out < 1:
        raise ShapeError(
            layer_id,
            f"non-positive output dimension {out} (input {size}, kernel {kernel}, stride {stride}, padding {pad})",
        )
    return out


def _infer_one(layer: Layer, ins: list[TensorShape]) -> TensorShape:
    kind = layer.kind
    x = ins[0]
    if kind in ("conv2d", "maxpool", "avgpool"):
        (kh, kw), (sh, sw), (ph, pw) = layer["kernel"], layer["stride"], layer["padding"]
        h = _window_out(layer.id, x.height, kh, sh, ph)
        w = _window_out(layer.id, x.width, kw, sw, pw)
        if kind != "conv2d":
            return TensorShape(h, w, x.channels)
        if x.channels % layer["groups"]:
            raise ShapeError(
                layer.id, f"groups={layer['groups']} does not divide input channels={x.channels}"
            )
        return TensorShape(h, w, layer["out_channels"])
    if kind == "fc":
        return TensorShape(1, 1, layer["out_features"])
    if kind == "global_avgpool":
        return TensorShape(1, 1, x.channels)
    if kind == "flatten":
        return TensorShape(1, 1, x.numel)
    if kind == "add":
        for src, shape in zip(layer.inputs[1:], ins[1:]):
            if shape != x:
                raise ShapeError(
                    layer.id,
                    f"add inputs disagree: {layer.inputs[0]!r} is {x}, {src!r} is {shape}",
                )
        return x
    if kind == "concat":
        for src, shape in zip(layer.inputs[1:], ins[1:]):
            if (shape.height, shape.width) != (x.height, x.width):
                raise ShapeError(
                    layer.id,
                    f"concat inputs disagree spatially: {layer.inputs[0]!r} is {x}, {src!r} is {shape}",
                )
        return TensorShape(x.height, x.width, sum(s.channels for s in ins))
    return x


def infer_shapes(graph: ArchGraph) -> ArchGraph:
    """Return a copy of ``graph`` with every layer's output shape filled in."""
    shapes: dict[str, TensorShape] = {}
    for lid in graph.topological_order():
        layer = graph.layer(lid)
        ins = [graph.input_shape if src == INPUT_ID else shapes[src] for src in layer.inputs]
        shapes[lid] = _infer_one(layer, ins)
    ordered = {layer.id: shapes[layer.id] for layer in graph.layers}
    return replace(graph, shapes=MappingProxyType(ordered))


def _ensure_shapes(graph: ArchGraph) -> ArchGraph:
    return graph if graph.shapes is not None else infer_shapes(graph)


# -- counting ----------------------------------------------------------------


def layer_params(layer: Layer, in_shape: TensorShape) -> int:
    if layer.kind == "conv2d":
        kh, kw = layer["kernel"]
        per_filter = kh * kw * (in_shape.channels // layer["groups"]) + int(layer["bias"])
        return per_filter * layer["out_channels"]
    if layer.kind == "fc":
        return (in_shape.numel + int(layer["bias"])) * layer["out_features"]
    if layer.kind == "batchnorm":
        return 2 * in_shape.channels
    return 0


def layer_macs(layer: Layer, in_shape: TensorShape, out_shape: TensorShape) -> int:
    if layer.kind == "conv2d":
        kh, kw = layer["kernel"]
        return (
            kh * kw * (in_shape.channels // layer["groups"])
            * out_shape.channels * out_shape.height * out_shape.width
        )
    if layer.kind == "fc":
        return in_shape.numel * layer["out_features"]
    return 0


def _count(graph: ArchGraph, fn) -> Counts:
    graph = _ensure_shapes(graph)
    per_layer = {}
    for lid in graph.topological_order():
        layer = graph.layer(lid)
        per_layer[lid] = fn(layer, graph.shape_of(layer.inputs[0]), graph.shape_of(lid))
    return Counts(per_layer, sum(per_layer.values()))


def count_params(graph: ArchGraph) -> Counts:
    return _count(graph, lambda layer, x, _y: layer_params(layer, x))


def count_macs(graph: ArchGraph) -> Counts:
    return _count(graph, layer_macs)


def analyze(graph: ArchGraph) -> ComplexityReport:
    graph = _ensure_shapes(graph)
    params = count_params(graph)
    macs = count_macs(graph)
    rows = tuple(
        LayerStats(lid, graph.layer(lid).kind, params.per_layer[lid], macs.per_layer[lid], graph.shape_of(lid))
        for lid in graph.topological_order()
    )
    return ComplexityReport(graph.name, rows, params.total, macs.total)


def analyze_document(document: str) -> ComplexityReport:
    return analyze(infer_shapes(parse_arch(document)))


# -- brute-force oracle --------------------------------------------------------


def _window_starts(size: int, kernel: int, stride: int, pad: int) -> list[int]:
    starts = []
    start = -pad
    while start + kernel <= size + pad:
        starts.append(start)
        start += stride
    return starts


def simulate_macs(graph: ArchGraph, limit: int = _SIMULATE_LIMIT) -> int:
    """Count MACs by walking every output element and every kernel tap.

    Deliberately naive; used to cross-check :func:`count_macs`.  Padded taps
    count, matching the dense-kernel convention.
    """
    graph = _ensure_shapes(graph)
    outputs = sum(graph.shape_of(layer.id).numel for layer in graph.layers)
    if outputs > limit:
        raise SimulationLimitError(f"{outputs} output elements exceeds simulation limit {limit}")

    total = 0
    for layer in graph.layers:
        x = graph.shape_of(layer.inputs[0])
        if layer.kind == "conv2d":
            (kh, kw), (sh, sw), (ph, pw) = layer["kernel"], layer["stride"], layer["padding"]
            groups = layer["groups"]
            c_out = layer["out_channels"]
            in_per_group = x.channels // groups
            out_per_group = c_out // groups
            rows = _window_starts(x.height, kh, sh, ph)
            cols = _window_starts(x.width, kw, sw, pw)
            for _y in rows:
                for _x in cols:
                    for co in range(c_out):
                        g = co // out_per_group
                        channels = range(g * in_per_group, (g + 1) * in_per_group)
                        for _ky in range(kh):
                            for _kx in range(kw):
                                for _ci in channels:
                                    total += 1
        elif layer.kind == "fc":
            for _o in range(layer["out_features"]):
                for _i in range(x.height * x.width):
                    for _c in range(x.channels):
                        total += 1
    return total


# -- bundled architectures ----------------------------------------------------

BUNDLED = {
    "alexnet": "alexnet.json",
    "vgg16": "vgg16.json",
    "squeezenet_v1_0": "squeezenet_v1_0.json",
    "mobilenet_v1": "mobilenet_v1.json",
}


def bundled_names() -> list[str]:
    return sorted(BUNDLED)


def bundled_text(name: str) -> str:
    filename = BUNDLED.get(name, name)
    return resources.files("netscore").joinpath("data").joinpath("arch").joinpath(filename).read_text(encoding="utf-8")


def load_bundled(name: str) -> ArchGraph:
    """Load one of the shipped architectures, e.g. ``load_bundled("alexnet")``."""
    return infer_shapes(parse_arch(bundled_text(name)))
