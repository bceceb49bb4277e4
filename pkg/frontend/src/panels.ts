import type { AnalysisJson, ModelJson } from './types.js';
import { vennSvg } from './venn.js';

function setText(parent: HTMLElement, tag: string, className: string, text: string): HTMLElement {
  const el = document.createElement(tag);
  el.className = className;
  el.textContent = text;
  parent.appendChild(el);
  return el;
}

function modelText(model: ModelJson): string {
  const lines = [`U = {${model.universe.join(', ')}}`];
  for (const [atom, states] of Object.entries(model.valuation)) {
    lines.push(`v(${atom}) = {${states.join(', ')}}`);
  }
  return lines.join('\n');
}

export function renderAnalysis(analysis: AnalysisJson): HTMLElement {
  const panel = document.createElement('div');

  setText(panel, 'p', 'verdict', analysis.verdict.replace(/-/g, ' '));
  setText(panel, 'p', 'subject', analysis.subject);

  if (analysis.openBranches.length > 0) {
    const list = document.createElement('ul');
    list.className = 'branches';
    for (const branch of analysis.openBranches) {
      const item = document.createElement('li');
      item.textContent = `branch ${branch.number}: ${branch.literals.join(', ')}`;
      list.appendChild(item);
    }
    panel.appendChild(list);
  }

  if (analysis.model) {
    const pre = document.createElement('pre');
    pre.className = 'modeltext';
    pre.textContent = modelText(analysis.model);
    panel.appendChild(pre);
  }

  if (analysis.dnf) {
    setText(panel, 'p', 'dnf', analysis.dnf.text);
  }

  if (analysis.truthTable) {
    const table = document.createElement('table');
    table.className = 'truth';
    const head = table.createTHead().insertRow();
    for (const atom of analysis.truthTable.atoms) {
      setText(head, 'th', '', atom);
    }
    setText(head, 'th', '', 'value');
    setText(head, 'th', '', 'states');
    const body = table.createTBody();
    for (const row of analysis.truthTable.rows) {
      const tr = body.insertRow();
      if (row.value === 1) {
        tr.className = 'true';
      }
      for (const bit of row.assignment) {
        tr.insertCell().textContent = String(bit);
      }
      tr.insertCell().textContent = String(row.value);
      tr.insertCell().textContent = row.states.join(', ');
    }
    panel.appendChild(table);
  }

  if (analysis.vennRegions) {
    const holder = document.createElement('div');
    holder.innerHTML = vennSvg(analysis.vennRegions);
    panel.appendChild(holder);
  }

  return panel;
}
