"""File reports: truth table CSV, verdict summary, and rendered figures.

Figures are written with the non-interactive matplotlib backend, so this
works in headless environments.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .dnf import dnf_from_tableau
from .formula import Formula, atoms, format_formula
from .render import venn_regions
from .semantics import truth_table
from .tableau import CLOSED, Tableau, build_tableau

__all__ = ["write_report", "draw_tableau", "draw_venn"]


def _layout(t: Tableau) -> dict[int, tuple[float, float]]:
    """x spreads leaves a unit apart, inner nodes sit over their children;
    y is one unit per tree depth."""
    positions: dict[int, tuple[float, float]] = {}
    depth: dict[int, int] = {}
    next_x = 0.0
    order = []
    stack = [(t.initial[0], 0)]
    while stack:
        node_id, d = stack.pop()
        depth[node_id] = d
        order.append(node_id)
        for child in reversed(t.nodes[node_id].children):
            stack.append((child, d + 1))
    for node_id in reversed(order):
        children = t.nodes[node_id].children
        if not children:
            positions[node_id] = (next_x, -depth[node_id])
            next_x += 1.0
        else:
            xs = [positions[c][0] for c in children]
            positions[node_id] = (sum(xs) / len(xs), -depth[node_id])
    return positions


def draw_tableau(t: Tableau, path: Path, dpi: int = 150) -> None:
    """Render the tableau tree to an image file."""
    t._ensure_state()
    positions = _layout(t)
    status = t._status
    numbers = t.leaf_numbers()
    n_leaves = len(numbers)
    max_depth = max(-y for _, y in positions.values())
    fig, ax = plt.subplots(
        figsize=(max(3.0, 1.6 * n_leaves), max(2.5, 0.75 * (max_depth + 1)))
    )
    for node in t.nodes:
        x0, y0 = positions[node.id]
        for child in node.children:
            x1, y1 = positions[child]
            ax.plot([x0, x1], [y0 - 0.12, y1 + 0.18], color="#666666", lw=1.0, zorder=1)
    for node in t.nodes:
        x, y = positions[node.id]
        label = format_formula(node.formula)
        closed = not node.children and status[node.id] == CLOSED
        if not node.children:
            mark = "×" if closed else ""
            label = f"{label}\n{mark} {numbers[node.id]}".replace("\n ", "\n")
        color = "#b22222" if closed else "#1a1a1a"
        ax.text(
            x,
            y,
            label,
            ha="center",
            va="center",
            fontsize=9,
            color=color,
            zorder=2,
            bbox=dict(boxstyle="round,pad=0.25", fc="white", ec="#999999", lw=0.8),
        )
    ax.set_xlim(-0.8, max(x for x, _ in positions.values()) + 0.8)
    ax.set_ylim(-max_depth - 0.6, 0.6)
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)


_CENTERS = {
    1: [(0.0, 0.0)],
    2: [(-0.55, 0.0), (0.55, 0.0)],
    3: [(-0.55, 0.35), (0.55, 0.35), (0.0, -0.6)],
}
_RADIUS = 1.0


def draw_venn(f: Formula, path: Path, dpi: int = 150) -> None:
    """Shade the regions of the formula's Venn diagram where it holds."""
    region_map = venn_regions(f)
    names = region_map.atoms
    centers = _CENTERS[max(len(names), 1)][: len(names)]
    xs = np.linspace(-2.3, 2.3, 480)
    ys = np.linspace(-2.1, 2.1, 440)
    gx, gy = np.meshgrid(xs, ys)
    mask_ids = np.zeros(gx.shape, dtype=int)
    for i, (cx, cy) in enumerate(centers):
        inside = (gx - cx) ** 2 + (gy - cy) ** 2 <= _RADIUS**2
        mask_ids |= inside.astype(int) << i
    shaded = np.zeros(gx.shape, dtype=float)
    for mask, value in region_map.regions.items():
        if value:
            shaded[mask_ids == mask] = 1.0
    fig, ax = plt.subplots(figsize=(5.2, 4.6))
    ax.imshow(
        shaded,
        extent=(xs[0], xs[-1], ys[0], ys[-1]),
        origin="lower",
        cmap="Greys",
        vmin=0.0,
        vmax=2.2,
        interpolation="nearest",
    )
    for (cx, cy), name in zip(centers, names):
        circle = plt.Circle((cx, cy), _RADIUS, fill=False, color="#1a1a1a", lw=1.4)
        ax.add_patch(circle)
        ax.text(cx, cy + _RADIUS + 0.14, name, ha="center", fontsize=12)
    ax.add_patch(
        plt.Rectangle(
            (xs[0], ys[0]),
            xs[-1] - xs[0],
            ys[-1] - ys[0],
            fill=False,
            color="#1a1a1a",
            lw=1.2,
        )
    )
    ax.set_title(format_formula(f), fontsize=11)
    ax.set_xticks([])
    ax.set_yticks([])
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)


def write_report(f: Formula, out_dir: str | Path, dpi: int = 150) -> list[Path]:
    """Write the full report for a formula and return the files created:
    a truth-table CSV, a plain-text summary, the tableau figure, and for
    up to three atoms the Venn figure."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    table = truth_table(f)
    csv_path = out / "truthtable.csv"
    csv_path.write_text(table.to_csv(), "utf-8")
    written.append(csv_path)

    t = build_tableau([f])
    satisfiable = t.is_open()
    lines = [f"formula: {format_formula(f)}"]
    lines.append(f"satisfiable: {'yes' if satisfiable else 'no'}")
    if satisfiable:
        model = t.extract_model()
        lines.append("model:")
        lines.extend("  " + line for line in model.to_text().splitlines())
        lines.append(f"dnf: {dnf_from_tableau(t).to_text()}")
    summary_path = out / "summary.txt"
    summary_path.write_text("\n".join(lines) + "\n", "utf-8")
    written.append(summary_path)

    tableau_path = out / "tableau.png"
    draw_tableau(t, tableau_path, dpi=dpi)
    written.append(tableau_path)

    if len(atoms(f)) <= 3:
        venn_path = out / "venn.png"
        draw_venn(f, venn_path, dpi=dpi)
        written.append(venn_path)

    return written
