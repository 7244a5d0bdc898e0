"""
Log-log error plots with slope-1 and slope-2 reference lines.

SVG output is byte-deterministic for fixed input: a fixed hash salt, no
date metadata and text kept as text.
"""

import io
from pathlib import Path

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from core import logger
from core.errors import TooFewPoints
from .convergence_row import ConvergenceRow

SERIES = (
    ('err_l2', 'L2 error'),
    ('err_h1', 'broken H1 error'),
    ('err_h2', 'broken H2 error'),
    ('err_p_l2', 'pressure L2 error'),
)

SVG_STYLE = {
    'svg.hashsalt': 'quadstokes',
    'svg.fonttype': 'none',
    'path.simplify': False,
}


def _reference(h: np.ndarray, anchor_h: float, anchor_error: float, slope: int) -> np.ndarray:
    return anchor_error * (h / anchor_h) ** slope


def emit_plot(rows: list[ConvergenceRow], path: Path = None, title: str = None) -> str:
    """Render the rows as SVG text; also written to `path` when given."""
    if len(rows) < 2:
        raise TooFewPoints(f"a convergence plot needs at least 2 levels, got {len(rows)}")

    h = np.array([row.h for row in rows], dtype=float)
    with matplotlib.rc_context(SVG_STYLE):
        fig = Figure(figsize=(6, 4.5))
        ax = fig.subplots()
        anchor = None
        for key, label in SERIES:
            errors = [getattr(row, key) for row in rows]
            if any(e is None for e in errors):
                continue
            ax.loglog(h, errors, 'o-', label=label)
            if anchor is None:
                anchor = (h[0], errors[0])

        if anchor is not None:
            ax.loglog(h, _reference(h, anchor[0], anchor[1], 1), 'k--', linewidth=0.8, label='slope 1')
            ax.loglog(h, _reference(h, anchor[0], anchor[1], 2), 'k:', linewidth=0.8, label='slope 2')

        ax.set_xlabel('h')
        ax.set_ylabel('error')
        if title:
            ax.set_title(title)
        ax.grid(True, which='both', linewidth=0.3)
        ax.legend()

        buffer = io.StringIO()
        fig.savefig(buffer, format='svg', metadata={'Date': None})

    svg = buffer.getvalue()
    if path is not None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(svg, encoding='utf-8')
        logger.info(f"Wrote plot to {path}")
    return svg
