import xml.etree.ElementTree as ET

import pytest

from argand.errors import EmptyTraceError
from argand.io import TraceRecord
from argand.polynomial import Polynomial
from argand.solver import find_all_roots
from argand.svg import emit_svg, render_svg, select_record

NS = {"s": "http://www.w3.org/2000/svg"}


def trace_of(coeffs):
    records = []
    find_all_roots(
        Polynomial(coeffs),
        on_step=lambda k, it, z, out: records.append(TraceRecord.from_outcome(k, it, z, out)),
    )
    return records


def points(attr):
    return [tuple(float(c) for c in pair.split(",")) for pair in attr.split()]


def test_empty_trace():
    with pytest.raises(EmptyTraceError):
        render_svg([])


def test_degenerate_single_step():
    trace = trace_of([1, 0, 1])[:1]
    root = ET.fromstring(render_svg(trace))
    line = root.find(".//s:polyline[@class='broken-line']", NS)
    assert len(points(line.get("points"))) == 2
    assert root.find(".//s:circle[@class='landing']", NS) is not None
    assert root.find(".//s:circle[@class='circle-AP']", NS) is None


def test_well_formed_with_one_path_per_root(tmp_path):
    trace = trace_of([1, 0, -2, 2, 1])
    path = tmp_path / "f.svg"
    emit_svg(trace, path)
    root = ET.parse(path).getroot()
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    paths = root.findall(".//s:path[@class='descent-path']", NS)
    indices = sorted(int(p.get("data-root-index")) for p in paths)
    assert indices == sorted({r.root_index for r in trace})
    assert root.find(".//s:circle[@class='unit-circle']", NS) is not None
    assert len(root.findall(".//s:line[@class='axis']", NS)) == 2


def test_broken_line_lands_on_next_modulus():
    trace = trace_of([1, 0, -2, 2])
    k = next(j for j, r in enumerate(trace) if r.branch == "general")
    rec, nxt = trace[k], trace[k + 1]
    assert nxt.root_index == rec.root_index
    root = ET.fromstring(render_svg(trace, k))
    pts = points(root.find(".//s:polyline[@class='broken-line']", NS).get("points"))
    assert len(pts) == len(rec.vertices)
    hx, hy = pts[-1]
    assert (hx * hx + hy * hy) ** 0.5 == pytest.approx(nxt.modulus, rel=1e-5)
    # K sits at the origin.
    assert pts[0] == (0.0, 0.0)
    # The circle about A passes through P.
    circle = root.find(".//s:circle[@class='circle-AP']", NS)
    ax, ay, r = (float(circle.get(a)) for a in ("cx", "cy", "r"))
    px, py = pts[1]
    assert ((px - ax) ** 2 + (py - ay) ** 2) ** 0.5 == pytest.approx(r, rel=1e-5)


def test_default_selection_is_first_general():
    trace = trace_of([1, 0, -2, 2])
    chosen = select_record(trace)
    assert chosen.branch == "general"
    assert all(r.branch == "degenerate" for r in trace[: trace.index(chosen)])
    only_degenerate = trace_of([1, 0, 1])
    assert select_record(only_degenerate) is only_degenerate[0]


def test_six_significant_digits():
    trace = trace_of([1, 0, -2, 2])
    text = render_svg(trace)
    root = ET.fromstring(text)
    for x, y in points(root.find(".//s:polyline", NS).get("points")):
        for v in (x, y):
            digits = f"{v:.6g}".lstrip("-").replace(".", "").split("e")[0].lstrip("0")
            assert len(digits) <= 6


def test_viewbox_has_margin():
    trace = trace_of([1, 0, -2, 2])
    root = ET.fromstring(render_svg(trace))
    panel = root.find("s:svg[@class='descent-panel']", NS)
    x, y, w, h = (float(v) for v in panel.get("viewBox").split())
    xs = []
    for p in root.findall(".//s:path[@class='descent-path']", NS):
        for token in p.get("d").replace("M", "").split("L"):
            xs.append(tuple(float(c) for c in token.strip().split(",")))
    assert all(x < px < x + w and y < py < y + h for px, py in xs)
