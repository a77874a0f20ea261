"""Standalone SVG renderings of learned paths and per-round travel times."""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

from .agent import RoundRecord
from .environment import LayeredMedium

AGENT_COLOR = "#d62728"
ORACLE_COLOR = "#1f4fd6"
EPISODE_COLORS = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79",
]


def _svg_open(width: int, height: int) -> list:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]


def _write(lines: list, destination) -> None:
    lines.append("</svg>")
    Path(destination).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _points(pts: Iterable) -> str:
    return " ".join(f"{x:.2f},{y:.2f}" for x, y in pts)


def render_path_svg(
    medium: LayeredMedium,
    states: Sequence[Sequence[int]],
    oracle_state: Sequence[float],
    destination,
    title: str | None = None,
    scale: float = 6.0,
) -> None:
    """Draw the slabs, agent paths (solid red) and the oracle path (dashed blue).

    Slabs are shaded darker for larger refractive index.  Later entries of
    ``states`` are drawn more opaque so the evolution reads left to right.
    """
    margin, top = 40, 50
    pw, ph = medium.width * scale, medium.height * scale
    width, height = int(pw + 2 * margin), int(ph + top + margin)

    def px(x: float, y: float):
        return margin + x * scale, top + ph - y * scale

    def path_pts(ys: Sequence[float]):
        xs = [i * medium.slab_width for i in range(medium.n_slabs + 1)]
        return [px(x, y) for x, y in zip(xs, [medium.start[1], *ys, medium.end[1]])]

    lines = _svg_open(width, height)
    if title:
        lines.append(
            f'<text x="{width / 2:.1f}" y="28" text-anchor="middle" font-size="16" '
            f'font-family="sans-serif">{escape(title)}</text>'
        )
    n_max = max(medium.indices)
    lines.append('<g id="slabs">')
    for i, n in enumerate(medium.indices):
        x0, y0 = px(i * medium.slab_width, medium.height)
        shade = 0.08 + 0.42 * n / n_max
        lines.append(
            f'<rect class="slab" x="{x0:.2f}" y="{y0:.2f}" width="{medium.slab_width * scale:.2f}" '
            f'height="{ph:.2f}" fill="#4a90c2" fill-opacity="{shade:.3f}" stroke="#333333"/>'
        )
        lines.append(
            f'<text x="{x0 + medium.slab_width * scale / 2:.2f}" y="{y0 + 18:.2f}" '
            f'text-anchor="middle" font-size="13" font-family="sans-serif">n = {n:g}</text>'
        )
    lines.append("</g>")

    lines.append('<g id="agent-paths">')
    k = len(states)
    for j, ys in enumerate(states):
        opacity = 0.25 + 0.75 * (j + 1) / k
        lines.append(
            f'<polyline class="agent-path" points="{_points(path_pts(ys))}" fill="none" '
            f'stroke="{AGENT_COLOR}" stroke-width="1.5" stroke-opacity="{opacity:.3f}"/>'
        )
    lines.append("</g>")
    lines.append(
        f'<polyline id="oracle-path" points="{_points(path_pts(oracle_state))}" fill="none" '
        f'stroke="{ORACLE_COLOR}" stroke-width="2" stroke-dasharray="6,4"/>'
    )
    for name, (x, y) in (("A", medium.start), ("B", medium.end)):
        cx, cy = px(x, y)
        lines.append(f'<circle class="endpoint" cx="{cx:.2f}" cy="{cy:.2f}" r="4" fill="#000000"/>')
        dy = 10 if cy < top + ph / 2 else -18
        lines.append(
            f'<text x="{cx:.2f}" y="{cy - dy:.2f}" text-anchor="middle" font-size="13" '
            f'font-family="sans-serif">{name}</text>'
        )
    _write(lines, destination)


def render_convergence_svg(
    records: Sequence[RoundRecord],
    oracle_time: float,
    destination,
    episodes: Sequence[int] | None = None,
    title: str | None = None,
) -> None:
    """Plot travel time against round, one polyline per episode.

    A dashed red horizontal line marks ``oracle_time``.  ``episodes`` picks
    which episodes to draw; by default every episode present is drawn.
    """
    by_episode: dict = {}
    for rec in records:
        by_episode.setdefault(rec.episode, []).append(rec)
    chosen = sorted(by_episode) if episodes is None else [e for e in episodes if e in by_episode]

    width, height = 900, 520
    left, right, top, bottom = 80, 150, 50, 60
    pw, ph = width - left - right, height - top - bottom
    times = [r.time_T for e in chosen for r in by_episode[e]] + [oracle_time]
    t_lo, t_hi = min(times), max(times)
    pad = 0.05 * (t_hi - t_lo) or 1.0
    t_lo, t_hi = t_lo - pad, t_hi + pad
    n_rounds = max((len(by_episode[e]) for e in chosen), default=1)

    def px(rnd: float, t: float):
        x = left + (rnd - 1) / max(n_rounds - 1, 1) * pw
        return x, top + (t_hi - t) / (t_hi - t_lo) * ph

    lines = _svg_open(width, height)
    if title:
        lines.append(
            f'<text x="{left + pw / 2:.1f}" y="30" text-anchor="middle" font-size="16" '
            f'font-family="sans-serif">{escape(title)}</text>'
        )
    lines.append(f'<g id="axes" stroke="#000000" stroke-width="1.5">')
    lines.append(f'<line x1="{left}" y1="{top + ph}" x2="{left + pw}" y2="{top + ph}"/>')
    lines.append(f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + ph}"/>')
    lines.append("</g>")
    for i in range(6):
        t = t_lo + (t_hi - t_lo) * i / 5
        _, y = px(1, t)
        lines.append(
            f'<text x="{left - 8}" y="{y + 4:.2f}" text-anchor="end" font-size="11" '
            f'font-family="sans-serif">{t:.1f}</text>'
        )
    for i in range(6):
        rnd = 1 + (n_rounds - 1) * i / 5
        x, _ = px(rnd, t_lo)
        lines.append(
            f'<text x="{x:.2f}" y="{top + ph + 18}" text-anchor="middle" font-size="11" '
            f'font-family="sans-serif">{rnd:.0f}</text>'
        )
    lines.append(
        f'<text id="x-label" x="{left + pw / 2:.1f}" y="{height - 15}" text-anchor="middle" '
        f'font-size="14" font-family="sans-serif">round</text>'
    )
    lines.append(
        f'<text id="y-label" x="20" y="{top + ph / 2:.1f}" text-anchor="middle" font-size="14" '
        f'font-family="sans-serif" transform="rotate(-90 20 {top + ph / 2:.1f})">time T</text>'
    )

    lines.append('<g id="episodes">')
    for j, e in enumerate(chosen):
        color = EPISODE_COLORS[j % len(EPISODE_COLORS)]
        pts = [px(r.round, r.time_T) for r in by_episode[e]]
        lines.append(
            f'<polyline class="episode" data-episode="{e}" points="{_points(pts)}" '
            f'fill="none" stroke="{color}" stroke-width="1.2"/>'
        )
        ly = top + 14 + 18 * j
        lines.append(
            f'<line x1="{left + pw + 15}" y1="{ly}" x2="{left + pw + 40}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        lines.append(
            f'<text x="{left + pw + 46}" y="{ly + 4}" font-size="12" '
            f'font-family="sans-serif">episode {e}</text>'
        )
    lines.append("</g>")
    x0, y0 = px(1, oracle_time)
    x1, _ = px(n_rounds, oracle_time)
    lines.append(
        f'<line id="oracle-time" x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y0:.2f}" '
        f'stroke="{AGENT_COLOR}" stroke-width="1.5" stroke-dasharray="5,4"/>'
    )
    _write(lines, destination)
