"""Draw a fundamental ball as an SVG document."""
from __future__ import annotations

from fractions import Fraction

from .seminorm import Band, Plane, Polygon

PIXELS = 400


def _clip(poly, a, b, c):
    """Part of a convex polygon satisfying a*x + b*y <= c (exact)."""
    out = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        fp = a * p[0] + b * p[1] - c
        fq = a * q[0] + b * q[1] - c
        if fp <= 0:
            out.append(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def ball_region(ball, viewport=10):
    """Vertices of the ball intersected with the square [-viewport, viewport]^2."""
    v = Fraction(viewport)
    square = [(-v, -v), (v, -v), (v, v), (-v, v)]
    if isinstance(ball, Plane):
        return square
    if isinstance(ball, Polygon):
        region = list(ball.vertices)
        for a, b, c in ((1, 0, v), (-1, 0, v), (0, 1, v), (0, -1, v)):
            region = _clip(region, a, b, c)
        return region
    if isinstance(ball, Band):
        # |det(k, x)| = |k.p*y - k.q*x| <= h
        k, h = ball.kernel, ball.halfwidth
        region = _clip(square, -k.q, k.p, h)
        return _clip(region, k.q, -k.p, h)
    raise TypeError(f"not a ball: {ball!r}")


def ball_svg(ball, viewport=10, lattice=True):
    v = float(viewport)
    scale = PIXELS / (2 * v)

    def px(pt):
        return (float(pt[0]) + v) * scale, (v - float(pt[1])) * scale

    pts = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(px, ball_region(ball, viewport)))
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{PIXELS}" '
             f'height="{PIXELS}" viewBox="0 0 {PIXELS} {PIXELS}">',
             f'<polygon points="{pts}" fill="#9ecae1" stroke="#08519c" stroke-width="1.5"/>']
    cx, cy = px((0, 0))
    parts.append(f'<line x1="0" y1="{cy}" x2="{PIXELS}" y2="{cy}" stroke="#888"/>')
    parts.append(f'<line x1="{cx}" y1="0" x2="{cx}" y2="{PIXELS}" stroke="#888"/>')
    if lattice and viewport <= 25:
        n = int(viewport)
        for i in range(-n, n + 1):
            for j in range(-n, n + 1):
                x, y = px((i, j))
                parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="1.2" fill="#333"/>')
    parts.append("</svg>")
    return "\n".join(parts)
