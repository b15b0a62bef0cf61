"""ASCII and SVG strand pictures of braid words, read top to bottom.

Classical crossings break the under-strand, welded crossings get a small
circle, and tau is a bar across its strand.
"""

from __future__ import annotations

from .words import BraidWord

_GAP = 4


def render_ascii(w: BraidWord) -> str:
    n = w.strands
    width = _GAP * (n - 1) + 1

    def blank():
        row = [" "] * width
        for k in range(n):
            row[_GAP * k] = "|"
        return row

    lines = ["".join(str(k + 1).ljust(_GAP) for k in range(n)).rstrip()]
    for t in w.tokens:
        c = _GAP * (t.index - 1)
        rows = [blank(), blank(), blank()]
        if t.kind == "t":
            rows[1][c] = "*"
        else:
            for r in rows:
                r[c] = r[c + _GAP] = " "
            rows[0][c + 1], rows[0][c + 3] = "\\", "/"
            rows[2][c + 1], rows[2][c + 3] = "/", "\\"
            rows[1][c + 2] = {"s": "/", "S": "\\", "r": "o"}[t.kind]
        lines.extend("".join(r).rstrip() for r in rows)
    lines.append("".join(blank()).rstrip())
    return "\n".join(lines) + "\n"


def render_svg(w: BraidWord, step: int = 40, pad: int = 20) -> str:
    n = w.strands
    width = 2 * pad + step * (n - 1)
    height = 2 * pad + step * max(len(w), 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g stroke="black" stroke-width="2" fill="none" stroke-linecap="round">',
    ]

    def line(x1, y1, x2, y2):
        parts.append(f'<line x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}"/>')

    def x(k):
        return pad + step * (k - 1)

    y = pad
    if not w.tokens:
        for k in range(1, n + 1):
            line(x(k), pad, x(k), height - pad)
    for t in w.tokens:
        y2 = y + step
        busy = (t.index, t.index + 1) if t.kind != "t" else ()
        for k in range(1, n + 1):
            if k not in busy:
                line(x(k), y, x(k), y2)
        if t.kind == "t":
            xm, ym = x(t.index), y + step / 2
            line(xm - 8, ym, xm + 8, ym)
        else:
            a, b = x(t.index), x(t.index + 1)
            xm, ym = (a + b) / 2, y + step / 2
            # over-strand drawn whole, under-strand split around the crossing
            over = (b, y, a, y2) if t.kind in "sr" else (a, y, b, y2)
            under = (a, y, b, y2) if t.kind in "sr" else (b, y, a, y2)
            line(*over)
            if t.kind == "r":
                line(*under)
                parts.append(f'<circle cx="{xm:g}" cy="{ym:g}" r="5"/>')
            else:
                f = 0.35
                ux1, uy1, ux2, uy2 = under
                line(ux1, uy1, ux1 + (ux2 - ux1) * f, uy1 + (uy2 - uy1) * f)
                line(ux2 - (ux2 - ux1) * f, uy2 - (uy2 - uy1) * f, ux2, uy2)
        y = y2
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
