"""Static SVG rendering of Ford circles over [0, 1].

Circles are shaded by parity class (gray for odd/odd bases, white
otherwise) and the principal convergents of an optional input are stroked
in red.  Output is byte-identical across runs: circles are emitted in
(denominator, numerator) order with fixed-precision coordinates.
"""

from fractions import Fraction
from math import gcd

from .convergents import convergent_stream
from .expansion import digit_stream
from .core import is_one_rational

_GRAY = "#c8c8c8"
_WHITE = "#ffffff"
_STROKE = "#404040"
_HIGHLIGHT = "#cc2200"


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def ford_svg(highlight=None, n_highlight: int = 4, den_max: int = 9,
             width: int = 800) -> str:
    """SVG document showing all Ford circles with denominator <= den_max,
    plus the circles of the first n_highlight principal convergents of
    ``highlight`` when given."""
    if den_max < 1:
        raise ValueError("den_max must be >= 1")
    margin = 24.0
    scale = width - 2 * margin
    height = scale / 2 + 2 * margin
    base_y = height - margin

    def circle(p: int, q: int, fill: str, stroke: str, sw: float) -> str:
        r = scale / (2 * q * q)
        cx = margin + scale * p / q
        return (f'<circle cx="{_fmt(cx)}" cy="{_fmt(base_y - r)}" '
                f'r="{_fmt(r)}" fill="{fill}" stroke="{stroke}" '
                f'stroke-width="{_fmt(sw)}"/>')

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{_fmt(height)}" viewBox="0 0 {width} {_fmt(height)}">',
        f'<rect width="{width}" height="{_fmt(height)}" fill="white"/>',
        f'<line x1="{_fmt(margin)}" y1="{_fmt(base_y)}" x2="{_fmt(margin + scale)}" '
        f'y2="{_fmt(base_y)}" stroke="{_STROKE}" stroke-width="1.0"/>',
    ]
    for q in range(1, den_max + 1):
        for p in range(0, q + 1):
            if gcd(p, q) != 1:
                continue
            fill = _GRAY if is_one_rational(Fraction(p, q)) else _WHITE
            lines.append(circle(p, q, fill, _STROKE, 0.8))
    if highlight is not None:
        picked = []
        for t in convergent_stream(digit_stream(highlight)):
            if t.n == 0:
                continue
            if t.n > n_highlight:
                break
            picked.append(t.principal)
        for c in picked:
            fill = _GRAY if is_one_rational(c) else _WHITE
            lines.append(circle(c.numerator, c.denominator, fill, _HIGHLIGHT, 2.0))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
