import { ApiError, autoFinish, createSession, fetchAnalysis, stepSession } from './api.js';
import { renderAnalysis } from './panels.js';
import { parsePreview, PreviewError, ruleHint } from './preview.js';
import { renderTree } from './tree.js';
import type { AnalysisJson, ModeKind, SessionJson } from './types.js';

type Feedback = { tone: 'info' | 'hint' | 'error'; lines: string[] };

export interface App {
  /** Resolves once every queued request has settled; for scripted tests. */
  idle(): Promise<void>;
}

export function initApp(root: HTMLElement, apiBase = ''): App {
  root.innerHTML = `
    <main class="workbench">
      <h1>Semantic tableau workbench</h1>
      <form class="entry" id="entry">
        <select id="mode" aria-label="question">
          <option value="sat">satisfiable?</option>
          <option value="valid">valid?</option>
          <option value="entails">entails?</option>
        </select>
        <textarea id="premises" placeholder="premises, one per line" hidden
                  aria-label="premises" spellcheck="false"></textarea>
        <input type="text" id="formula" placeholder="(p|q)&amp;(~p|r)"
               aria-label="formula" autocomplete="off" spellcheck="false">
        <button type="submit">Start</button>
      </form>
      <p class="preview" id="preview"></p>
      <div class="controls">
        <button type="button" id="auto" disabled>Auto-finish</button>
        <button type="button" id="reset" disabled>New session</button>
      </div>
      <div class="panels">
        <section class="panel">
          <h2>Tableau</h2>
          <div class="canvas" id="canvas"><p>Enter a formula to begin.</p></div>
        </section>
        <div>
          <section class="panel feedback">
            <h2>Feedback</h2>
            <div id="feedback"><p>Pick a node, then the leaf to expand under.</p></div>
          </section>
          <section class="panel">
            <h2>Analysis</h2>
            <div id="analysis"><p>Finish the tableau to see the verdict.</p></div>
          </section>
        </div>
      </div>
    </main>
  `;

  function must<T>(value: T | null, what: string): T {
    if (!value) {
      throw new Error(`failed to initialise the workbench UI: missing ${what}`);
    }
    return value;
  }

  const form = must(root.querySelector<HTMLFormElement>('#entry'), 'entry form');
  const modeSelect = must(root.querySelector<HTMLSelectElement>('#mode'), 'mode select');
  const premisesArea = must(root.querySelector<HTMLTextAreaElement>('#premises'), 'premises');
  const formulaInput = must(root.querySelector<HTMLInputElement>('#formula'), 'formula input');
  const preview = must(root.querySelector<HTMLParagraphElement>('#preview'), 'preview');
  const autoButton = must(root.querySelector<HTMLButtonElement>('#auto'), 'auto button');
  const resetButton = must(root.querySelector<HTMLButtonElement>('#reset'), 'reset button');
  const canvas = must(root.querySelector<HTMLDivElement>('#canvas'), 'canvas');
  const feedbackBox = must(root.querySelector<HTMLDivElement>('#feedback'), 'feedback box');
  const analysisBox = must(root.querySelector<HTMLDivElement>('#analysis'), 'analysis box');

  // --- state, derived from server responses ---

  let session: SessionJson | null = null;
  let analysis: AnalysisJson | null = null;
  let selectedNode: number | null = null;
  let feedback: Feedback | null = null;

  // --- serialized request queue (one in flight per tab) ---

  let chain: Promise<void> = Promise.resolve();
  let pendingCount = 0;

  function enqueue(task: () => Promise<void>): void {
    pendingCount += 1;
    chain = chain
      .then(task)
      .catch((err: unknown) => {
        feedback = describeError(err);
      })
      .finally(() => {
        pendingCount -= 1;
        render();
      });
  }

  async function idle(): Promise<void> {
    while (pendingCount > 0) {
      await chain;
    }
  }

  function describeError(err: unknown): Feedback {
    if (err instanceof ApiError) {
      const lines = [`${err.code}: ${err.message}`];
      if (err.detail && typeof err.detail === 'object' && 'position' in err.detail) {
        lines.push(`at position ${(err.detail as { position: number }).position}`);
      }
      return { tone: 'error', lines };
    }
    return { tone: 'error', lines: [err instanceof Error ? err.message : String(err)] };
  }

  async function refreshAnalysisIfFinished(): Promise<void> {
    if (session && session.status === 'finished' && !analysis) {
      analysis = await fetchAnalysis(apiBase, session.id);
    }
  }

  // --- rendering ---

  function render(): void {
    canvas.replaceChildren();
    if (session) {
      canvas.appendChild(renderTree(session.tableau, selectedNode));
    } else {
      const p = document.createElement('p');
      p.textContent = 'Enter a formula to begin.';
      canvas.appendChild(p);
    }

    autoButton.disabled = !session || session.status === 'finished';
    resetButton.disabled = !session;

    feedbackBox.replaceChildren();
    if (feedback) {
      for (const line of feedback.lines) {
        const p = document.createElement('p');
        p.textContent = line;
        p.className = feedback.tone;
        feedbackBox.appendChild(p);
      }
    } else {
      const p = document.createElement('p');
      p.textContent = 'Pick a node, then the leaf to expand under.';
      feedbackBox.appendChild(p);
    }

    analysisBox.replaceChildren();
    if (analysis) {
      analysisBox.appendChild(renderAnalysis(analysis));
    } else {
      const p = document.createElement('p');
      p.textContent = session && session.status === 'finished'
        ? 'Loading analysis…'
        : 'Finish the tableau to see the verdict.';
      analysisBox.appendChild(p);
    }
  }

  // --- formula entry ---

  function updatePreview(): void {
    const text = formulaInput.value.trim();
    if (!text) {
      preview.textContent = '';
      preview.dataset.state = '';
      return;
    }
    try {
      parsePreview(text);
      preview.textContent = 'well-formed';
      preview.dataset.state = 'ok';
    } catch (err) {
      if (err instanceof PreviewError) {
        preview.textContent = `parse error at position ${err.position}: ${err.message}`;
        preview.dataset.state = 'err';
      }
    }
  }

  formulaInput.addEventListener('input', updatePreview);

  modeSelect.addEventListener('change', () => {
    const entails = modeSelect.value === 'entails';
    premisesArea.hidden = !entails;
    formulaInput.placeholder = entails ? 'conclusion' : '(p|q)&(~p|r)';
  });

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const mode = modeSelect.value as ModeKind;
    const formula = formulaInput.value.trim();
    if (!formula) {
      feedback = { tone: 'hint', lines: ['enter a formula first'] };
      render();
      return;
    }
    const formulas = mode === 'entails'
      ? [...premisesArea.value.split('\n').map((l) => l.trim()).filter(Boolean), formula]
      : [formula];
    enqueue(async () => {
      session = await createSession(apiBase, mode, formulas);
      analysis = null;
      selectedNode = null;
      feedback = { tone: 'info', lines: ['session started; pick a node, then a leaf'] };
      await refreshAnalysisIfFinished();
    });
  });

  // --- tableau interaction ---

  canvas.addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const nodeEl = target.closest<HTMLElement>('[data-node]');
    if (nodeEl && !nodeEl.classList.contains('expanded')) {
      selectedNode = Number(nodeEl.dataset.node);
      feedback = {
        tone: 'hint',
        lines: [
          `node ${selectedNode}: ${nodeEl.textContent ?? ''}`,
          ruleHint(nodeEl.textContent ?? ''),
        ].filter(Boolean),
      };
      render();
      return;
    }
    const leafEl = target.closest<HTMLElement>('[data-leaf]');
    if (!leafEl || !session) {
      return;
    }
    if (selectedNode === null) {
      feedback = { tone: 'hint', lines: ['pick a node first, then the leaf to expand under'] };
      render();
      return;
    }
    const nodeId = selectedNode;
    const leafId = Number(leafEl.dataset.leaf);
    enqueue(async () => {
      if (!session) {
        return;
      }
      const out = await stepSession(apiBase, session.id, nodeId, leafId);
      session = out.session;
      selectedNode = null;
      feedback = {
        tone: 'info',
        lines: [`applied ${out.delta.rule}; added node(s) ${out.delta.added.join(', ')}`],
      };
      await refreshAnalysisIfFinished();
    });
  });

  autoButton.addEventListener('click', () => {
    enqueue(async () => {
      if (!session) {
        return;
      }
      const out = await autoFinish(apiBase, session.id);
      session = out.session;
      selectedNode = null;
      feedback = { tone: 'info', lines: ['expanded everything that remained'] };
      await refreshAnalysisIfFinished();
    });
  });

  resetButton.addEventListener('click', () => {
    session = null;
    analysis = null;
    selectedNode = null;
    feedback = null;
    render();
  });

  render();
  return { idle };
}
