"""ASCII and SVG diagrams of a network, optionally with switch states and
highlighted photon paths."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import InvalidInput
from .topology import Network, State

_PALETTE = (
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759",
    "#b07aa1", "#76b7b2", "#edc948", "#9c755f",
)

_GLYPH = {State.BAR: "=", State.CROSS: "X", None: "?"}


@dataclass(frozen=True)
class RenderOptions:
    show_states: bool = True
    highlight: tuple[int, ...] = ()
    scale: int = 24
    palette: tuple[str, ...] = field(default=_PALETTE)

    def __post_init__(self) -> None:
        if self.scale < 1:
            raise InvalidInput(f"scale must be >= 1, got {self.scale}")


def _columns(net: Network) -> int:
    return max((sp.col for sp in net.switches), default=-1) + 1


def render_ascii(net: Network, states: Mapping[int, State] | None = None) -> str:
    """N horizontal lines with one state glyph per switch, drawn between the
    two lines it couples; brackets join each output pair on the right.

    Glyphs: ``X`` Cross, ``=`` Bar, ``?`` unset.
    """
    ncols = max(_columns(net), 1)
    cell = 3
    # even text rows are photon lines, odd rows the gaps between them
    grid = [
        [("-" if r % 2 == 0 else " ") * cell for _ in range(ncols)]
        for r in range(2 * net.ports - 1)
    ]
    for sp in net.switches:
        glyph = _GLYPH[states.get(sp.id) if states is not None else None]
        grid[2 * sp.line + 1][sp.col] = f" {glyph} "
    out = []
    for r in range(2 * net.ports - 1):
        body = "".join(grid[r])
        if r % 2 == 0:
            out.append(f"{r // 2:>3} {body}-+")
        elif r % 4 == 1:
            # gap between output lines 2j and 2j+1
            out.append(f"    {body} ] BSA{r // 4}")
        else:
            out.append(f"    {body}".rstrip())
    return "\n".join(out) + "\n"


def _trajectories(net: Network, states: Mapping[int, State]) -> list[list[int]]:
    """Per-photon line positions at each column boundary (column order)."""
    ncols = _columns(net)
    lines = list(range(net.ports))
    pos: dict[int, list[int]] = {p: [p] for p in range(net.ports)}
    by_col: dict[int, list] = {}
    for sp in net.switches:
        by_col.setdefault(sp.col, []).append(sp)
    for c in range(ncols):
        for sp in by_col.get(c, ()):
            if states[sp.id] is State.CROSS:
                i = sp.line
                lines[i], lines[i + 1] = lines[i + 1], lines[i]
        for line, photon in enumerate(lines):
            pos[photon].append(line)
    return [pos[p] for p in range(net.ports)]


def render_svg(
    net: Network,
    states: Mapping[int, State] | None = None,
    options: RenderOptions | None = None,
) -> str:
    """SVG 1.1 document: horizontal photon lines, one rectangle per switch
    spanning its two lines (colored per layer), semicircles for the output
    pair analyzers, and optional highlighted photon paths."""
    opt = options or RenderOptions()
    s = opt.scale
    ncols = _columns(net)
    left, top = 2 * s, s
    width = left + (ncols + 2) * s + 2 * s
    height = top + net.ports * s
    x_out = left + (ncols + 1) * s

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        "<style>.bar rect{fill-opacity:0.35;} .cross rect{fill-opacity:1.0;} "
        ".unset rect{fill-opacity:0.65;} .photon{fill:none;stroke-width:2;}</style>",
    ]
    for line in range(net.ports):
        y = top + line * s
        parts.append(
            f'<line x1="{left - s}" y1="{y}" x2="{x_out}" y2="{y}" '
            f'stroke="#555555" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{left - s - 4}" y="{y + 4}" font-size="{max(s // 2, 8)}" '
            f'text-anchor="end">{line}</text>'
        )
    if states is not None and opt.highlight:
        traj = _trajectories(net, states)
        for photon in opt.highlight:
            pts = traj[photon]
            coords = " ".join(
                f"{left + c * s},{top + line * s}" for c, line in enumerate(pts)
            )
            color = opt.palette[photon % len(opt.palette)]
            parts.append(f'<polyline class="photon" stroke="{color}" points="{coords}"/>')
    for sp in net.switches:
        x = left + sp.col * s + s // 6
        y = top + sp.line * s - s // 6
        w = s - s // 3
        h = s + s // 3
        color = opt.palette[(sp.layer - 1) % len(opt.palette)]
        if states is None or not opt.show_states:
            cls = "unset"
        else:
            cls = states[sp.id].value
        parts.append(
            f'<g class="{cls}"><rect x="{x}" y="{y}" width="{w}" height="{h}" '
            f'rx="{s // 6}" fill="{color}" stroke="#222222"/></g>'
        )
    for j in range(net.ports // 2):
        y0 = top + 2 * j * s
        y1 = y0 + s
        r = s // 2
        parts.append(
            f'<path class="bsa" d="M {x_out} {y0} A {r} {r} 0 0 1 {x_out} {y1}" '
            f'fill="#cccccc" stroke="#222222"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
