"""SVG pictures of rank-2 fans and stereographic pictures of rank-3 fans.

This is the only place where floating point appears; every coordinate is
rendered with 9 significant digits so the output is byte-stable.
"""
from __future__ import annotations

import math

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)


def fmt(x):
    x = float(x)
    if x == 0:
        x = 0.0  # no negative zero
    return f"{x:.9g}"


def _wall_colors(walls, catalog):
    """One color per wall module (isomorphism class), ordered by dimension vector."""
    mods = {}
    for N in walls.values():
        mods.setdefault(_module_id(N, catalog), N)
    order = sorted(mods, key=lambda k: (mods[k].dims, k))
    return {k: PALETTE[i % len(PALETTE)] for i, k in enumerate(order)}


def _module_id(N, catalog):
    for k, X in enumerate(catalog.corpus if catalog else ()):
        if X is N:
            return k
    return -1 - sum(N.dims)


def _label(N, catalog):
    k = _module_id(N, catalog)
    tag = f"#{k}" if k >= 0 else ""
    return "D(" + ",".join(str(d) for d in N.dims) + ")" + tag


def _style(N, colors, catalog):
    if N is None:
        return "#000000", "uncharted"
    return colors[_module_id(N, catalog)], _label(N, catalog)


def _open(width, height, vb):
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="{vb}">',
        '<rect x="-1000" y="-1000" width="2000" height="2000" fill="white"/>',
    ]


def emit_svg_2d(fan, walls, catalog=None, radius=100.0):
    """Walls as rays from the origin, chambers labelled by pair index."""
    if fan.n != 2:
        raise ValueError("2d emitter requires rank 2")
    colors = _wall_colors(walls, catalog)
    out = _open(300, 300, "-150 -150 300 300")
    out.append('<g id="walls">')
    for key in sorted(fan.facets):
        gens = [catalog.g_of(x) for x in key] if catalog else None
        if not gens:
            continue
        g = gens[0]
        nrm = math.hypot(*g)
        x, y = radius * g[0] / nrm, -radius * g[1] / nrm
        col, lab = _style(walls.get(key), colors, catalog)
        out.append(
            f'<line x1="0" y1="0" x2="{fmt(x)}" y2="{fmt(y)}" stroke="{col}" stroke-width="2" '
            f'data-wall="{lab}" data-ray="{g[0]},{g[1]}"/>'
        )
        out.append(f'<text x="{fmt(1.2 * x)}" y="{fmt(1.2 * y)}" font-size="9" text-anchor="middle">{lab}</text>')
    out.append("</g>")
    out.append('<g id="chambers">')
    for k, p in enumerate(fan.pairs):
        b = p.barycenter()
        nrm = math.hypot(*b)
        x, y = 0.55 * radius * b[0] / nrm, -0.55 * radius * b[1] / nrm
        out.append(f'<text x="{fmt(x)}" y="{fmt(y)}" font-size="10" text-anchor="middle" data-pair="{k}">c{k}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


# stereographic projection from c = (1,1,1)/sqrt(3) onto the plane c^perp

_C = tuple(1 / math.sqrt(3) for _ in range(3))
_E1 = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
_E2 = (-1 / math.sqrt(6), -1 / math.sqrt(6), 2 / math.sqrt(6))


def _unit(v):
    v = [float(x) for x in v]
    r = math.sqrt(sum(x * x for x in v))
    return [x / r for x in v]


def project(v):
    """Image-plane coordinates (a, b) of the unit vector along v."""
    u = _unit(v)
    uc = sum(a * b for a, b in zip(u, _C))
    if uc > 1 - 1e-12:
        raise ValueError("point coincides with the projection center")
    a = sum(x * y for x, y in zip(u, _E1)) / (1 - uc)
    b = sum(x * y for x, y in zip(u, _E2)) / (1 - uc)
    return a, b


def _circle(p, q, r):
    (ax, ay), (bx, by), (cx, cy) = p, q, r
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    size = max(abs(v) for v in (ax, ay, bx, by, cx, cy)) or 1.0
    if abs(d) < 1e-9 * size * size:
        return None
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    return ux, uy, math.hypot(ax - ux, ay - uy)


def arc_path(g1, g2, scale):
    """SVG path for the image of the great-circle arc from g1 to g2."""
    u1, u2 = _unit(g1), _unit(g2)
    mid = [a + b for a, b in zip(u1, u2)]
    pts = [project(u1), project(mid), project(u2)]
    # screen coordinates: y grows downwards
    P = [(scale * a, -scale * b) for a, b in pts]
    c = _circle(*P)
    if c is None:
        return f"M {fmt(P[0][0])} {fmt(P[0][1])} L {fmt(P[2][0])} {fmt(P[2][1])}"
    ox, oy, rad = c
    ang = [math.atan2(y - oy, x - ox) for x, y in P]
    tau = 2 * math.pi
    span = (ang[2] - ang[0]) % tau
    through = (ang[1] - ang[0]) % tau
    sweep = 1 if through < span else 0
    if not sweep:
        span = tau - span
    large = 1 if span > math.pi else 0
    return (
        f"M {fmt(P[0][0])} {fmt(P[0][1])} "
        f"A {fmt(rad)} {fmt(rad)} 0 {large} {sweep} {fmt(P[2][0])} {fmt(P[2][1])}"
    )


def emit_svg_stereographic(fan, walls, catalog, scale=60.0):
    """Arcs = facet cones on the sphere, points = normalized ray g-vectors."""
    if fan.n != 3:
        raise ValueError("stereographic emitter requires rank 3")
    colors = _wall_colors(walls, catalog)
    out = _open(600, 600, "-300 -300 600 600")
    out.append('<g id="walls" fill="none">')
    for key in sorted(fan.facets):
        gens = sorted(catalog.g_of(x) for x in key)
        col, lab = _style(walls.get(key), colors, catalog)
        d = arc_path(gens[0], gens[1], scale)
        out.append(f'<path d="{d}" stroke="{col}" stroke-width="1.5" data-wall="{lab}" data-facet="{gens}"/>')
    out.append("</g>")
    out.append('<g id="gvectors">')
    rays = sorted({catalog.g_of(x) for p in fan.pairs for x in p.items})
    for g in rays:
        a, b = project(g)
        x, y = scale * a, -scale * b
        out.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="2.5" fill="black" data-g="{g}"/>')
        out.append(f'<text x="{fmt(x + 4)}" y="{fmt(y - 4)}" font-size="8">{",".join(map(str, g))}</text>')
    out.append("</g>")
    out.append('<g id="chambers">')
    for k, p in enumerate(fan.pairs):
        try:
            a, b = project(p.barycenter())
        except ValueError:
            # this chamber contains the center and is the unbounded outer region
            out.append(f'<text x="-290" y="-285" font-size="8" fill="#555" data-pair="{k}">outer region: {k}</text>')
            continue
        out.append(f'<text x="{fmt(scale * a)}" y="{fmt(-scale * b)}" font-size="7" fill="#555" data-pair="{k}">{k}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(fan, walls, catalog):
    if fan.n == 2:
        return emit_svg_2d(fan, walls, catalog)
    if fan.n == 3:
        return emit_svg_stereographic(fan, walls, catalog)
    raise ValueError("stereographic emitter requires rank 3")
