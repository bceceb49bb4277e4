import type { LeafJson, NodeJson, TableauJson } from './types.js';

// Renders the tableau as nested columns: chains stack, forks split.
// Node buttons carry data-node, leaf badges carry data-leaf; the app wires
// clicks through event delegation on the canvas.

export function renderTree(tableau: TableauJson, selected: number | null): HTMLElement {
  const byId = new Map<number, NodeJson>();
  for (const node of tableau.nodes) {
    byId.set(node.id, node);
  }
  const leafAt = new Map<number, LeafJson>();
  for (const leaf of tableau.leaves) {
    leafAt.set(leaf.id, leaf);
  }

  function nodeRow(node: NodeJson): HTMLElement {
    const row = document.createElement('div');
    row.className = 'noderow';

    const button = document.createElement('button');
    button.type = 'button';
    button.className = 'node';
    button.dataset.node = String(node.id);
    button.textContent = node.formula;
    if (node.expanded) {
      button.classList.add('expanded');
      button.disabled = true;
    } else {
      button.classList.add('selectable');
    }
    if (node.id === selected) {
      button.classList.add('selected');
    }
    row.appendChild(button);

    const leaf = leafAt.get(node.id);
    if (leaf) {
      const badge = document.createElement('span');
      badge.className = 'leaf';
      badge.dataset.leaf = String(leaf.id);
      badge.dataset.status = leaf.status;
      badge.textContent = leaf.status === 'closed' ? `× ${leaf.number}` : String(leaf.number);
      badge.title = `branch ${leaf.number}: ${leaf.status}`;
      row.appendChild(badge);
    }
    return row;
  }

  function branch(startId: number): HTMLElement {
    const column = document.createElement('div');
    column.className = 'branch';
    let current = byId.get(startId);
    while (current) {
      column.appendChild(nodeRow(current));
      if (current.children.length === 1) {
        current = byId.get(current.children[0]);
        continue;
      }
      if (current.children.length > 1) {
        const fork = document.createElement('div');
        fork.className = 'fork';
        for (const child of current.children) {
          fork.appendChild(branch(child));
        }
        column.appendChild(fork);
      }
      break;
    }
    return column;
  }

  return branch(0);
}
