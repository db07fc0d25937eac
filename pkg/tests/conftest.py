import random


def _out(size, kernel, stride, pad):
    return (size + 2 * pad - kernel) // stride + 1


def random_arch_doc(rng: random.Random, n_ops: int = 5, name: str = "random") -> dict:
    """Small valid architecture document mixing conv/depthwise/fc/pool/add/concat.

    Shapes are tracked here independently of the library so every generated
    layer is valid by construction.
    """
    h, w, c = rng.randint(3, 9), rng.randint(3, 9), rng.randint(1, 6)
    shapes = {"input": (h, w, c)}
    layers = []
    consumed = set()

    def emit(kind, inputs, shape, **attrs):
        lid = f"l{len(layers)}_{kind}"
        layers.append({"id": lid, "type": kind, "inputs": list(inputs), **attrs})
        shapes[lid] = shape
        consumed.update(inputs)
        return lid

    def conv(src, depthwise=False, same=False):
        sh, sw, sc = shapes[src]
        if same:
            k, s, p = 3, 1, 1
            g, co = 1, sc
        else:
            k = rng.randint(1, min(3, sh + 2, sw + 2))
            s = rng.randint(1, 2)
            p = rng.randint(0, k // 2)
            while _out(sh, k, s, p) < 1 or _out(sw, k, s, p) < 1:
                k -= 1
            if depthwise:
                g, co = sc, sc * rng.randint(1, 2)
            else:
                g = rng.choice([d for d in range(1, sc + 1) if sc % d == 0])
                co = g * rng.randint(1, 3)
        shape = (_out(sh, k, s, p), _out(sw, k, s, p), co)
        return emit("conv2d", [src], shape, out_channels=co, kernel=[k, k], stride=[s, s],
                    padding=[p, p], groups=g, bias=rng.random() < 0.5)

    for _ in range(n_ops):
        nodes = list(shapes)
        src = rng.choice(nodes[-3:])
        op = rng.choice(["conv", "conv", "depthwise", "fc", "pool", "add", "concat", "bn"])
        sh, sw, sc = shapes[src]
        if op == "conv":
            conv(src)
        elif op == "depthwise":
            conv(src, depthwise=True)
        elif op == "fc":
            out = rng.randint(1, 8)
            emit("fc", [src], (1, 1, out), out_features=out, bias=rng.random() < 0.5)
        elif op == "pool":
            k = rng.randint(1, min(3, sh, sw))
            s = rng.randint(1, 2)
            emit(rng.choice(["maxpool", "avgpool"]), [src],
                 (_out(sh, k, s, 0), _out(sw, k, s, 0), sc), kernel=[k, k], stride=[s, s])
        elif op == "add":
            twins = [n for n in nodes if n != src and shapes[n] == shapes[src]]
            other = rng.choice(twins) if twins else conv(src, same=True)
            emit("add", [src, other], shapes[src])
        elif op == "concat":
            peers = [n for n in nodes if n != src and shapes[n][:2] == (sh, sw)]
            other = rng.choice(peers) if peers else conv(src, same=True)
            emit("concat", [src, other], (sh, sw, sc + shapes[other][2]))
        else:
            emit("batchnorm", [src], shapes[src])

    dangling = [lid for lid in shapes if lid != "input" and lid not in consumed]
    if len(dangling) > 1:
        pooled = [emit("global_avgpool", [d], (1, 1, shapes[d][2])) for d in dangling]
        emit("concat", pooled, (1, 1, sum(shapes[p][2] for p in pooled)))
    last = layers[-1]["id"]
    out = rng.randint(2, 10)
    emit("fc", [last], (1, 1, out), out_features=out)
    return {
        "format": 1,
        "name": name,
        "input": {"height": h, "width": w, "channels": c},
        "layers": layers,
    }


_acceptance_results = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion check")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for mark in report.user_properties:
        if mark[0] == "acceptance":
            _acceptance_results.append((mark[1], report.outcome))


def pytest_runtest_setup(item):
    mark = item.get_closest_marker("acceptance")
    if mark:
        item.user_properties.append(("acceptance", f"{mark.args[0]}. {mark.args[1]}"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for title, outcome in sorted(_acceptance_results, key=lambda r: r[0]):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {title}")
