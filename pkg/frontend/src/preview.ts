// Tiny local re-parse used only for live diagnostics and rule-class hints;
// the engine on the server stays the single source of truth.

export type Ast =
  | { kind: 'atom'; name: string }
  | { kind: 'not'; inner: Ast }
  | { kind: 'and' | 'or' | 'implies'; left: Ast; right: Ast };

export class PreviewError extends Error {
  constructor(message: string, readonly position: number) {
    super(message);
  }
}

type Token = { kind: string; text: string; position: number };

const ATOM = /^[a-z][a-z0-9_]*/;

function lex(text: string): Token[] {
  const tokens: Token[] = [];
  let i = 0;
  while (i < text.length) {
    const ch = text[i];
    if (ch === ' ' || ch === '\t') {
      i += 1;
      continue;
    }
    const position = i + 1;
    if (ch === '(' || ch === ')') {
      tokens.push({ kind: ch, text: ch, position });
      i += 1;
    } else if (ch === '~' || ch === '¬') {
      tokens.push({ kind: 'not', text: ch, position });
      i += 1;
    } else if (ch === '&' || ch === '∧') {
      tokens.push({ kind: 'and', text: ch, position });
      i += 1;
    } else if (ch === '|' || ch === '∨') {
      tokens.push({ kind: 'or', text: ch, position });
      i += 1;
    } else if (ch === '→') {
      tokens.push({ kind: 'implies', text: ch, position });
      i += 1;
    } else if (ch === '-' && text[i + 1] === '>') {
      tokens.push({ kind: 'implies', text: '->', position });
      i += 2;
    } else {
      const match = ATOM.exec(text.slice(i));
      if (!match) {
        throw new PreviewError(`unexpected character '${ch}'`, position);
      }
      tokens.push({ kind: 'atom', text: match[0], position });
      i += match[0].length;
    }
  }
  tokens.push({ kind: 'end', text: '', position: text.length + 1 });
  return tokens;
}

/** Parse for preview purposes; throws PreviewError with a 1-based position. */
export function parsePreview(text: string): Ast {
  const tokens = lex(text);
  let at = 0;

  const peek = () => tokens[at];
  const take = () => tokens[at++];

  function primary(): Ast {
    const token = peek();
    if (token.kind === 'atom') {
      take();
      return { kind: 'atom', name: token.text };
    }
    if (token.kind === 'not') {
      take();
      return { kind: 'not', inner: primary() };
    }
    if (token.kind === '(') {
      take();
      const inner = implication();
      const closer = take();
      if (closer.kind !== ')') {
        throw new PreviewError("expected ')'", closer.position);
      }
      return inner;
    }
    throw new PreviewError('expected a formula', token.position);
  }

  function conjunction(): Ast {
    let left = primary();
    while (peek().kind === 'and') {
      take();
      left = { kind: 'and', left, right: primary() };
    }
    return left;
  }

  function disjunction(): Ast {
    let left = conjunction();
    while (peek().kind === 'or') {
      take();
      left = { kind: 'or', left, right: conjunction() };
    }
    return left;
  }

  function implication(): Ast {
    const left = disjunction();
    if (peek().kind === 'implies') {
      take();
      return { kind: 'implies', left, right: implication() };
    }
    return left;
  }

  const ast = implication();
  const rest = peek();
  if (rest.kind !== 'end') {
    throw new PreviewError(`trailing input '${rest.text}'`, rest.position);
  }
  return ast;
}

export type RuleClass = 'literal' | 'double-negation' | 'alpha' | 'beta';

/** Which rule family applies to a formula, for the feedback-panel hint. */
export function ruleClass(ast: Ast): RuleClass {
  switch (ast.kind) {
    case 'atom':
      return 'literal';
    case 'and':
      return 'alpha';
    case 'or':
    case 'implies':
      return 'beta';
    case 'not': {
      const inner = ast.inner;
      if (inner.kind === 'atom') {
        return 'literal';
      }
      if (inner.kind === 'not') {
        return 'double-negation';
      }
      return inner.kind === 'and' ? 'beta' : 'alpha';
    }
  }
}

export function ruleHint(formulaText: string): string {
  let ast: Ast;
  try {
    ast = parsePreview(formulaText);
  } catch {
    return '';
  }
  switch (ruleClass(ast)) {
    case 'literal':
      return 'literal: no rule applies, branches finish on literals';
    case 'double-negation':
      return '¬¬ rule: strips the double negation';
    case 'alpha':
      return 'α rule: stacks both parts on the branch';
    case 'beta':
      return 'β rule: forks the branch in two';
  }
}
