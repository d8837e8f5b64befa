"""Optional matplotlib renderings written alongside report documents.

Figures are side artifacts: they never influence verdicts or report
bytes.  Matplotlib is imported lazily and driven through the Agg backend
so the CLI works headless.
"""

from __future__ import annotations

import os


def _plt():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _path(fig_dir, stem):
    os.makedirs(fig_dir, exist_ok=True)
    return os.path.join(fig_dir, stem + ".png")


def render_newton(hull, fig_dir, stem, closure_points=(), contained=None,
                  names=("x", "y")):
    """2-variable Newton region with generators and closure points.

    Returns the written path, or None when the arity is unsupported.
    """
    if len(hull.points[0]) != 2:
        return None
    plt = _plt()
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    lim = max(max(p) for p in hull.points) + 2
    # shade the region using the facet inequalities on a fine grid
    import numpy as np
    xs = np.linspace(0, lim, 220)
    ys = np.linspace(0, lim, 220)
    X, Y = np.meshgrid(xs, ys)
    inside = np.ones_like(X, dtype=bool)
    for (a0, a1), rhs in hull.facets:
        inside &= a0 * X + a1 * Y >= rhs
    ax.contourf(X, Y, inside, levels=[0.5, 1.5], colors=["#d9e8f5"])
    for (a0, a1), rhs in hull.facets:
        if a1 != 0:
            ax.plot(xs, (rhs - a0 * xs) / a1, lw=0.8, color="#4878a8")
        elif a0 != 0:
            ax.axvline(rhs / a0, lw=0.8, color="#4878a8")
    gx = [p[0] for p in hull.points]
    gy = [p[1] for p in hull.points]
    ax.plot(gx, gy, "o", color="#1f3d5c", label="generators")
    if closure_points:
        colors = None
        if contained is not None:
            colors = ["#2a7d2a" if c else "#b03030" for c in contained]
        ax.scatter([p[0] for p in closure_points], [p[1] for p in closure_points],
                   marker="s", s=28, c=colors or "#2a7d2a", label="closure generators",
                   zorder=3)
    ax.set_xlim(-0.5, lim)
    ax.set_ylim(-0.5, lim)
    ax.set_xlabel("exponent of %s" % names[0])
    ax.set_ylabel("exponent of %s" % names[1])
    ax.legend(loc="upper right", fontsize=8)
    ax.set_title("Newton polyhedron")
    path = _path(fig_dir, stem)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def render_trace(trace, fig_dir, stem):
    """Frobenius trace rows as a one-row membership grid."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(max(2.5, 0.9 * len(trace.rows)), 1.6))
    for idx, (e, q, member) in enumerate(trace.rows):
        color = "#2a7d2a" if member else "#b03030"
        ax.add_patch(plt.Rectangle((idx, 0), 0.92, 0.92, color=color))
        ax.text(idx + 0.46, 1.08, "q=%d" % q, ha="center", fontsize=8)
        ax.text(idx + 0.46, 0.46, "in" if member else "out",
                ha="center", va="center", color="white", fontsize=9)
    ax.set_xlim(-0.1, len(trace.rows))
    ax.set_ylim(-0.1, 1.5)
    ax.axis("off")
    ax.set_title("c x^q membership in the bracket powers", fontsize=9)
    path = _path(fig_dir, stem)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def render_verdict_summary(verdicts, fig_dir, stem):
    """Horizontal PASS/FAIL/SKIP bar per verdict name."""
    plt = _plt()
    names = [v.name for v in verdicts]
    colors = {"PASS": "#2a7d2a", "FAIL": "#b03030", "SKIP": "#b8a11c"}
    fig, ax = plt.subplots(figsize=(6, max(1.5, 0.32 * len(names))))
    ax.barh(range(len(names)), [1] * len(names),
            color=[colors.get(v.status, "#808080") for v in verdicts])
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=7)
    ax.invert_yaxis()
    ax.set_xticks([])
    for spine in ax.spines.values():
        spine.set_visible(False)
    ax.set_title("verdicts", fontsize=10)
    path = _path(fig_dir, stem)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
