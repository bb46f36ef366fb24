"""Staircase pictures of monomial ideals in two variables.

Lattice cell (i, j) stands for the monomial z1^i z2^j and belongs to an
ideal's region when some generator divides it.  Layers are drawn in order,
later ones on top, so listing the ideals from largest to smallest shows
every layer.
"""

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import MonomialError
from .ideals import contains

GLYPHS = (".", ":", "#")
SHADES = ("#d9d9d9", "#a6a6a6", "#595959")
CELL = 20
MARGIN = 30


@dataclass(frozen=True)
class Layer:
    label: str
    generators: tuple
    shade: str


@dataclass(frozen=True)
class StaircasePicture:
    layers: tuple
    bounds: tuple
    format: str
    text: str


def _raster(ideal, width, height):
    return {(i, j) for i in range(width) for j in range(height) if contains(ideal, (i, j))}


def render_staircase(layers, fmt: str = "ascii") -> StaircasePicture:
    """Draw ``layers``, a list of (label, MonomialIdeal) pairs."""
    if fmt not in ("ascii", "svg"):
        raise ValueError(f"unknown picture format {fmt!r}")
    if not layers:
        raise ValueError("nothing to draw")
    for _, ideal in layers:
        if ideal.dimension != 2:
            raise MonomialError("staircase diagrams need exactly two variables")
    width = max(g[0] for _, I in layers for g in I.generators) + 2
    height = max(g[1] for _, I in layers for g in I.generators) + 2

    rasters = [_raster(I, width, height) for _, I in layers]
    for a, (_, I) in enumerate(layers):
        for b, (_, J) in enumerate(layers):
            if a != b and I.issubset(J) and not rasters[a] <= rasters[b]:
                raise AssertionError(f"layer {a} is contained in layer {b} but not drawn inside it")

    style = GLYPHS if fmt == "ascii" else SHADES
    meta = tuple(Layer(label, I.generators, style[k % len(style)])
                 for k, (label, I) in enumerate(layers))
    if fmt == "ascii":
        text = _ascii(meta, rasters, width, height)
    else:
        text = _svg(meta, width, height)
    return StaircasePicture(meta, (width, height), fmt, text)


def _ascii(meta, rasters, width, height):
    rows = []
    for j in reversed(range(height)):
        cells = []
        for i in range(width):
            glyph = " "
            for layer, raster in zip(meta, rasters):
                if (i, j) in raster:
                    glyph = layer.shade
            cells.append(glyph)
        rows.append(f"{j:>3} |" + "".join(cells))
    rows.append("    +" + "-" * width)
    axis = "".join(str(i % 10) for i in range(width))
    rows.append("     " + axis)
    rows.append("")
    rows += [f"  {layer.shade}  {layer.label}" for layer in meta]
    return "\n".join(rows) + "\n"


def _outline(gens, width, height):
    """Boundary of the union of quadrants at gens, clipped to the box."""
    gens = sorted(gens)
    pts = [(gens[0][0], height)]
    for k, (x, y) in enumerate(gens):
        pts.append((x, y))
        nxt = gens[k + 1][0] if k + 1 < len(gens) else width
        pts.append((nxt, y))
    pts.append((width, height))
    return pts


def _svg(meta, width, height):
    w = width * CELL + 2 * MARGIN
    h = height * CELL + 2 * MARGIN + 20 * len(meta)

    def sx(x):
        return MARGIN + x * CELL

    def sy(y):
        return MARGIN + (height - y) * CELL

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
           f'viewBox="0 0 {w} {h}">']
    for layer in meta:
        pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in _outline(layer.generators, width, height))
        out.append(f'  <polygon points="{pts}" fill="{layer.shade}" stroke="black" '
                   f'stroke-width="1"/>')
    for i in range(width + 1):
        out.append(f'  <line x1="{sx(i)}" y1="{sy(0)}" x2="{sx(i)}" y2="{sy(height)}" '
                   f'stroke="#cccccc" stroke-width="0.5"/>')
    for j in range(height + 1):
        out.append(f'  <line x1="{sx(0)}" y1="{sy(j)}" x2="{sx(width)}" y2="{sy(j)}" '
                   f'stroke="#cccccc" stroke-width="0.5"/>')
    for layer in meta:
        for x, y in layer.generators:
            out.append(f'  <circle cx="{sx(x)}" cy="{sy(y)}" r="2.5" fill="black"/>')
    for k, layer in enumerate(meta):
        y = sy(0) + 25 + 20 * k
        out.append(f'  <rect x="{MARGIN}" y="{y - 10}" width="12" height="12" '
                   f'fill="{layer.shade}" stroke="black"/>')
        out.append(f'  <text x="{MARGIN + 18}" y="{y}" font-family="sans-serif" '
                   f'font-size="12">{escape(layer.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

