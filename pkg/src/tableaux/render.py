"""Text renderings of tableaux and Venn-region maps for small formulas."""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Formula, atoms, format_formula
from .semantics import eval_standard
from .tableau import CLOSED, Tableau

__all__ = [
    "TooManyAtoms",
    "VennRegions",
    "render_ascii",
    "render_dot",
    "venn_regions",
]


class TooManyAtoms(ValueError):
    code = "TOO_MANY_ATOMS"


def render_ascii(t: Tableau) -> str:
    """Indented tree, two spaces per depth; leaves carry their number and
    closed leaves a × mark."""
    t._ensure_state()
    status = t._status
    numbers = t.leaf_numbers()
    lines = []
    stack = [(t.initial[0], 0)]
    nodes = t.nodes
    while stack:
        node_id, depth = stack.pop()
        node = nodes[node_id]
        text = "  " * depth + format_formula(node.formula)
        if not node.children:
            mark = " ×" if status[node_id] == CLOSED else ""
            text += f"{mark} [{numbers[node_id]}]"
        lines.append(text)
        for child in reversed(node.children):
            stack.append((child, depth + 1))
    return "\n".join(lines)


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def render_dot(t: Tableau) -> str:
    """Graphviz source for the tree; stable output for equal tableaux."""
    t._ensure_state()
    status = t._status
    numbers = t.leaf_numbers()
    lines = [
        "digraph tableau {",
        "  rankdir=TB;",
        '  node [shape=box, style=rounded, fontname="Helvetica"];',
    ]
    for node in t.nodes:
        label = _dot_escape(format_formula(node.formula))
        attrs = ""
        if not node.children:
            if status[node.id] == CLOSED:
                label += f"\\n× {numbers[node.id]}"
                attrs = ', color="firebrick", fontcolor="firebrick"'
            else:
                label += f"\\n{numbers[node.id]}"
        lines.append(f'  n{node.id} [label="{label}"{attrs}];')
    for node in t.nodes:
        for child in node.children:
            lines.append(f"  n{node.id} -> n{child};")
    lines.append("}")
    return "\n".join(lines)


@dataclass
class VennRegions:
    """Truth of a formula on every region of a 1-, 2-, or 3-set diagram.

    Region keys are bitmasks over the atom list: bit i set means the region
    lies inside atom i's set.  Mask 0 is the outside region.
    """

    atoms: list[str]
    regions: dict[int, bool]

    def to_json(self) -> dict:
        return {
            "atoms": list(self.atoms),
            "regions": {str(mask): value for mask, value in sorted(self.regions.items())},
        }


def venn_regions(f: Formula) -> VennRegions:
    """Which regions of the formula's Venn diagram would be shaded."""
    names = atoms(f)
    if len(names) > 3:
        raise TooManyAtoms(
            f"a Venn diagram supports at most 3 atoms, got {len(names)}"
        )
    regions = {}
    for mask in range(2 ** len(names)):
        valuation = {name: (mask >> i) & 1 for i, name in enumerate(names)}
        regions[mask] = bool(eval_standard(f, valuation))
    return VennRegions(atoms=names, regions=regions)
