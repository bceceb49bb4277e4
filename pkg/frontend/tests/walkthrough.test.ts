// Scripted walkthroughs against a real service instance: the UI drives the
// documented /api endpoints only, so the test spawns the Python server and
// clicks through the DOM the way a student would.

import { spawn, type ChildProcess } from 'node:child_process';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';
import { initApp } from '../src/app.js';

const port = 7400 + (process.pid % 300);
const base = `http://127.0.0.1:${port}`;
let server: ChildProcess;

async function waitForHealth(): Promise<void> {
  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      const response = await fetch(`${base}/api/health`);
      if (response.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) {
      throw new Error('service did not come up');
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
}

beforeAll(async () => {
  server = spawn(
    'python3',
    ['-m', 'tableaux.cli', 'serve', '--host', '127.0.0.1', '--port', String(port)],
    { stdio: 'ignore' },
  );
  await waitForHealth();
});

afterAll(() => {
  server.kill('SIGTERM');
});

function query(selector: string): HTMLElement {
  const el = document.querySelector<HTMLElement>(selector);
  if (!el) {
    throw new Error(`no element matches ${selector}`);
  }
  return el;
}

function click(selector: string): void {
  query(selector).dispatchEvent(new MouseEvent('click', { bubbles: true }));
}

function enterFormula(text: string): void {
  const input = query('#formula') as HTMLInputElement;
  input.value = text;
  input.dispatchEvent(new Event('input', { bubbles: true }));
}

function submitEntry(): void {
  query('#entry').dispatchEvent(new Event('submit', { bubbles: true, cancelable: true }));
}

describe('workbench walkthrough', () => {
  it('steps the branching conjunction through to the analysis', async () => {
    document.body.innerHTML = '<div id="app"></div>';
    const app = initApp(query('#app'), base);

    enterFormula('(p|q)&(~p|r)');
    expect(query('#preview').textContent).toBe('well-formed');

    submitEntry();
    await app.idle();
    expect(query('[data-node="0"]').textContent).toBe('(p ∨ q) ∧ (¬p ∨ r)');

    // the α step stacks both conjuncts
    click('[data-node="0"]');
    expect(query('#feedback').textContent).toContain('α');
    click('[data-leaf="0"]');
    await app.idle();
    expect(query('[data-node="2"]').textContent).toBe('¬p ∨ r');

    // two β steps fork the tree
    click('[data-node="1"]');
    expect(query('#feedback').textContent).toContain('β');
    click('[data-leaf="2"]');
    await app.idle();
    click('[data-node="2"]');
    click('[data-leaf="3"]');
    await app.idle();

    // the contradictory branch is marked closed
    expect(query('[data-leaf="5"]').textContent).toContain('×');
    expect(query('[data-leaf="5"]').dataset.status).toBe('closed');

    // expanding the literal p is refused with an explanation
    click('[data-node="3"]');
    expect(query('#feedback').textContent).toContain('literal');
    click('[data-leaf="6"]');
    await app.idle();
    const refusal = query('#feedback').textContent ?? '';
    expect(refusal).toContain('NOT_APPLICABLE');
    expect(refusal).toContain('p is a literal');

    // auto-finish completes the tableau and loads the analysis
    click('#auto');
    await app.idle();
    const analysis = query('#analysis').textContent ?? '';
    expect(analysis).toContain('satisfiable');
    expect(analysis).toContain('U = {2, 3, 4}');
    expect(analysis).toContain('(p ∧ r) ∨ (¬p ∧ q) ∨ (q ∧ r)');
    expect(analysis).toContain('branch 2: p, r');
    expect(analysis).toContain('branch 3: ¬p, q');
    expect(analysis).toContain('branch 4: q, r');
    expect((query('#auto') as HTMLButtonElement).disabled).toBe(true);
  });

  it('validity mode works on the negation and closes everything', async () => {
    document.body.innerHTML = '<div id="app"></div>';
    const app = initApp(query('#app'), base);

    (query('#mode') as HTMLSelectElement).value = 'valid';
    enterFormula('(p & q) -> (p | q)');
    submitEntry();
    await app.idle();
    expect(query('[data-node="0"]').textContent).toBe('¬(p ∧ q → p ∨ q)');

    click('#auto');
    await app.idle();
    for (const badge of document.querySelectorAll<HTMLElement>('[data-leaf]')) {
      expect(badge.dataset.status).toBe('closed');
    }
    expect(query('#analysis').textContent).toContain('valid');
  });

  it('entailment mode reads premises one per line', async () => {
    document.body.innerHTML = '<div id="app"></div>';
    const app = initApp(query('#app'), base);

    const mode = query('#mode') as HTMLSelectElement;
    mode.value = 'entails';
    mode.dispatchEvent(new Event('change', { bubbles: true }));
    const premises = query('#premises') as HTMLTextAreaElement;
    expect(premises.hidden).toBe(false);
    premises.value = 'p -> q\np';
    enterFormula('q');
    submitEntry();
    await app.idle();

    click('#auto');
    await app.idle();
    expect(query('#analysis').textContent).toContain('entails');
  });

  it('surfaces parse errors from the service with their position', async () => {
    document.body.innerHTML = '<div id="app"></div>';
    const app = initApp(query('#app'), base);

    const input = query('#formula') as HTMLInputElement;
    input.value = 'p &';
    input.dispatchEvent(new Event('input', { bubbles: true }));
    expect(query('#preview').dataset.state).toBe('err');

    submitEntry();
    await app.idle();
    const feedback = query('#feedback').textContent ?? '';
    expect(feedback).toContain('PARSE_ERROR');
    expect(feedback).toContain('position 4');
  });
});
