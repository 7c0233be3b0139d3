"""Static SVG figures of a descent trace.

The document has two panels side by side:

* left, the ``z``-plane: one polyline-style ``<path class="descent-path">``
  per root search, with the unit circle and axes for orientation;
* right, the value plane for one chosen step: the broken line
  K -> P -> A -> ... -> H, K at the origin, and the circle about A through P.

All coordinates are written with 6 significant digits; the imaginary axis
points up (SVG's ``y`` is negated).
"""

from xml.sax.saxutils import quoteattr

from .directed_line import modulus
from .errors import EmptyTraceError

__all__ = ["emit_svg", "render_svg", "select_record"]

PANEL = 480
GAP = 20


def _n(x):
    return f"{x:.6g}"


def _xy(v):
    return f"{_n(v.re)},{_n(-v.im)}"


def _viewbox(points, extra_boxes=()):
    xs = [p.re for p in points]
    ys = [-p.im for p in points]
    for x0, y0, x1, y1 in extra_boxes:
        xs += [x0, x1]
        ys += [y0, y1]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-12)
    # Square box centred on the data, padded by 10% of the span on each side.
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    half = span / 2 * 1.2
    return (cx - half, cy - half, 2 * half, 2 * half)


def select_record(trace, iteration=None):
    """The record to draw in the right panel.

    ``iteration`` indexes the trace list; by default the first
    general-branch record, else the first record.
    """
    if iteration is not None:
        return trace[iteration]
    for rec in trace:
        if rec.branch == "general":
            return rec
    return trace[0]


def _descent_panel(trace):
    by_root = {}
    for rec in trace:
        by_root.setdefault(rec.root_index, []).append(rec)
    paths = {}
    everything = []
    for k, recs in sorted(by_root.items()):
        pts = [r.z for r in recs] + [recs[-1].landing]
        paths[k] = pts
        everything += pts
    vb = _viewbox(everything, [(-1.0, -1.0, 1.0, 1.0)])
    size = vb[2]
    mark = size * 0.008
    thin = _n(size * 0.002)
    wide = _n(size * 0.004)
    dash = f'{_n(size * 0.01)} {_n(size * 0.008)}'
    out = [
        f'<svg class="descent-panel" x="0" y="0" width="{PANEL}" height="{PANEL}" '
        f'viewBox="{" ".join(_n(v) for v in vb)}">',
        "<title>descent path in the z-plane</title>",
        f'<line class="axis" x1="{_n(vb[0])}" y1="0" x2="{_n(vb[0] + size)}" y2="0" '
        f'stroke="#999" stroke-width="{thin}"/>',
        f'<line class="axis" x1="0" y1="{_n(vb[1])}" x2="0" y2="{_n(vb[1] + size)}" '
        f'stroke="#999" stroke-width="{thin}"/>',
        '<circle class="unit-circle" cx="0" cy="0" r="1" fill="none" stroke="#bbb" '
        f'stroke-dasharray="{dash}" stroke-width="{thin}"/>',
    ]
    palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"]
    for k, pts in paths.items():
        colour = palette[k % len(palette)]
        d = "M " + " L ".join(_xy(p) for p in pts)
        out.append(
            f'<path class="descent-path" data-root-index="{k}" d="{d}" fill="none" '
            f'stroke="{colour}" stroke-width="{wide}" stroke-linejoin="round"/>'
        )
        end = pts[-1]
        out.append(
            f'<circle class="root" data-root-index="{k}" cx="{_n(end.re)}" cy="{_n(-end.im)}" '
            f'r="{_n(mark)}" fill="{colour}"/>'
        )
    out.append("</svg>")
    return out


def _broken_line_panel(rec):
    verts = list(rec.vertices)
    K, P, H = verts[0], verts[1], verts[-1]
    boxes = []
    circle = None
    if rec.branch == "general" and len(verts) > 2:
        A = verts[2]
        radius = modulus(P - A)
        circle = (A, radius)
        boxes.append((A.re - radius, -A.im - radius, A.re + radius, -A.im + radius))
    vb = _viewbox(verts, boxes)
    size = vb[2]
    mark = size * 0.01
    font = size * 0.035
    thin = _n(size * 0.002)
    wide = _n(size * 0.004)
    dash = f'{_n(size * 0.01)} {_n(size * 0.008)}'
    drawn = verts if rec.branch == "general" else verts[:2]
    out = [
        f'<svg class="figure-panel" x="{PANEL + GAP}" y="0" width="{PANEL}" height="{PANEL}" '
        f'viewBox="{" ".join(_n(v) for v in vb)}">',
        f"<title>broken line for root {rec.root_index}, step {rec.iteration} "
        f"({rec.branch})</title>",
    ]
    if circle is not None:
        A, radius = circle
        out.append(
            f'<circle class="circle-AP" cx="{_n(A.re)}" cy="{_n(-A.im)}" r="{_n(radius)}" '
            f'fill="none" stroke="#aaa" stroke-dasharray="{dash}" stroke-width="{thin}"/>'
        )
    out.append(
        f'<polyline class="broken-line" points="{" ".join(_xy(v) for v in drawn)}" '
        f'fill="none" stroke="#1f77b4" stroke-width="{wide}" stroke-linejoin="round"/>'
    )
    out.append(
        f'<circle class="point-K" cx="0" cy="0" r="{_n(mark)}" fill="black"/>'
    )
    out.append(
        f'<circle class="landing" cx="{_n(H.re)}" cy="{_n(-H.im)}" r="{_n(mark)}" fill="#d62728"/>'
    )
    middle = [c for c in "ABCDEFGIJLMNOQRSTUVWXYZ"][: len(verts) - 3]
    names = ["K", "P"] + middle + ["H"]
    if rec.branch == "degenerate":
        names = ["K", "P", "H"]
    labelled = list(zip(verts, names))
    # Endpoints first; an inner vertex crowding an earlier label stays unnamed.
    labelled = labelled[:2] + labelled[-1:] + labelled[2:-1]
    placed = []
    for v, name in labelled:
        if placed and name not in "KPH" and min(modulus(v - q) for q in placed) < font:
            continue
        placed.append(v)
        out.append(
            f'<text x="{_n(v.re + mark)}" y="{_n(-v.im - mark)}" font-size="{_n(font)}" '
            f"font-family=\"sans-serif\">{name}</text>"
        )
    out.append("</svg>")
    return out


def render_svg(trace, iteration=None):
    """The SVG document for ``trace`` as a string."""
    if not trace:
        raise EmptyTraceError("cannot draw an empty trace")
    rec = select_record(trace, iteration)
    width = 2 * PANEL + GAP
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{PANEL}" viewBox="0 0 {width} {PANEL}">',
        f"<desc>{quoteattr(f'{len(trace)} steps')[1:-1]}</desc>",
    ]
    lines += _descent_panel(trace)
    lines += _broken_line_panel(rec)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_svg(trace, path, iteration=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(trace, iteration))
