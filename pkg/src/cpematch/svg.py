"""SVG drawing of an instance in the canonical 2-layer layout."""

from __future__ import annotations

from .model import Instance, Solution

SPACING = 40
MARGIN = 30
LAYER_GAP = 160


def _x(rank: int, n: int, width: int) -> float:
    if n <= 1:
        return width / 2
    return MARGIN + (rank - 1) * (width - 2 * MARGIN) / (n - 1)


def _intersection(p1, p2, q1, q2):
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = p1, p2, q1, q2
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
    return x1 + t * (x2 - x1), y1 + t * (y2 - y1)


def render_svg(instance: Instance, solution: Solution | None = None) -> str:
    """Upper layer a_1..a_nA, lower layer b_1..b_nB, edges as straight segments.

    Matched edges are drawn thick red; realized crossings get a small circle.
    """
    width = max(instance.n_a, instance.n_b, 1) * SPACING + 2 * MARGIN
    height = LAYER_GAP + 2 * MARGIN
    top, bottom = MARGIN, MARGIN + LAYER_GAP
    matched = solution.matching if solution else frozenset()

    def ends(e):
        edge = instance.edges[e]
        return (_x(edge.a, instance.n_a, width), top), (_x(edge.b, instance.n_b, width), bottom)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           f'<line x1="{MARGIN}" y1="{top}" x2="{width - MARGIN}" y2="{top}" stroke="#ddd"/>',
           f'<line x1="{MARGIN}" y1="{bottom}" x2="{width - MARGIN}" y2="{bottom}" stroke="#ddd"/>']
    for idx in range(instance.m):
        (x1, y1), (x2, y2) = ends(idx)
        style = 'stroke="#c00" stroke-width="3"' if idx in matched else 'stroke="#888" stroke-width="1"'
        out.append(f'<line class="edge" data-edge="{idx + 1}" x1="{x1:.2f}" y1="{y1:.2f}" '
                   f'x2="{x2:.2f}" y2="{y2:.2f}" {style}/>')
    if solution:
        for e, f in sorted(solution.realized_crossings):
            px, py = _intersection(*ends(e), *ends(f))
            out.append(f'<circle class="crossing" cx="{px:.2f}" cy="{py:.2f}" r="4" '
                       f'fill="none" stroke="#06c"/>')
    for rank in range(1, instance.n_a + 1):
        out.append(f'<circle class="vertex" cx="{_x(rank, instance.n_a, width):.2f}" cy="{top}" r="5" '
                   f'fill="white" stroke="black"><title>a{rank}</title></circle>')
    for rank in range(1, instance.n_b + 1):
        out.append(f'<circle class="vertex" cx="{_x(rank, instance.n_b, width):.2f}" cy="{bottom}" r="5" '
                   f'fill="white" stroke="black"><title>b{rank}</title></circle>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
