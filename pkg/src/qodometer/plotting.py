"""Graph samples of the interval maps and render them with matplotlib.

matplotlib is optional and only imported when a figure is requested.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .maps import MapId


def exact_samples(m, samples: int) -> list[tuple[Fraction, Fraction]]:
    """(x, m(x)) at x = i/samples, 0 <= i < samples, skipping points outside the domain."""
    if samples < 2:
        raise ValueError("need at least 2 samples")
    m = MapId.parse(m)
    rows = []
    for i in range(samples):
        x = Fraction(i, samples)
        if m.in_domain(x):
            rows.append((x, m.func(x)))
    return rows


def _floor_log2(y: float) -> int:
    return math.frexp(y)[1] - 1


_APPROX = {
    MapId.F: lambda x: 1 / (2 * math.floor(x) - x + 1),
    MapId.T: lambda x: 1 / (2 * math.floor(1 / (1 - x)) + 1 - 1 / (1 - x)),
    MapId.R: lambda x: 1 / (1 - x) - math.floor(1 / (1 - x)),
    MapId.G: lambda x: 1 / x - math.floor(1 / x),
    MapId.B: lambda x: 2 * x if x < 0.5 else 2 * x - 1,
    MapId.R2: lambda x: 2 - 2 * 2.0 ** _floor_log2(1 / (1 - x)) * (1 - x),
    MapId.J: lambda x: x / (1 - x) if x < 0.5 else (2 * x - 1) / x,
    MapId.D2: lambda x: x + 3 / 2.0 ** (_floor_log2(1 / (1 - x)) + 1) - 1,
}


def approx_samples(m, samples: int) -> list[tuple[float, float]]:
    """Floating-point version of :func:`exact_samples`, for dense plots only."""
    if samples < 2:
        raise ValueError("need at least 2 samples")
    m = MapId.parse(m)
    f = _APPROX[m]
    rows = []
    for i in range(samples):
        if m.in_domain(Fraction(i, samples)):
            x = i / samples
            rows.append((x, f(x)))
    return rows


def render(m, rows, path, dpi=150):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    m = MapId.parse(m)
    xs = [float(x) for x, _ in rows]
    ys = [float(y) for _, y in rows]
    fig, ax = plt.subplots(figsize=(4, 4))
    # points, not lines: most of these maps have infinitely many branches
    ax.plot(xs, ys, ".", markersize=max(0.5, min(4.0, 400 / max(len(xs), 1))), color="k")
    ax.set_xlim(0, 1)
    if m is not MapId.F:
        ax.set_ylim(0, 1)
    ax.set_aspect("equal" if m is not MapId.F else "auto")
    ax.set_xlabel("x")
    ax.set_ylabel(f"{m.value}(x)")
    ax.set_title(f"{m.value}, {len(xs)} samples")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    return path
