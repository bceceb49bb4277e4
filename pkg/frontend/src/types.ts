// Client-side mirrors of the service JSON payloads.

export type RuleKind =
  | 'double-negation'
  | 'alpha-and'
  | 'alpha-not-or'
  | 'alpha-not-implies'
  | 'beta-or'
  | 'beta-not-and'
  | 'beta-implies';

export type BranchStatus = 'open' | 'closed' | 'unfinished';

export interface NodeJson {
  id: number;
  formula: string;
  parent: number | null;
  children: number[];
  rule: { source: number; kind: RuleKind } | null;
  expanded: boolean;
}

export interface LeafJson {
  id: number;
  number: number;
  status: BranchStatus;
  literals: string[];
}

export interface TableauJson {
  nodes: NodeJson[];
  leaves: LeafJson[];
}

export interface HistoryStep {
  nodeId: number;
  leafId: number;
  rule: RuleKind;
  timestamp: number;
}

export type ModeKind = 'sat' | 'valid' | 'entails';

export interface SessionJson {
  id: string;
  mode: { kind: ModeKind; formulas: string[] };
  status: 'in-progress' | 'finished';
  history: HistoryStep[];
  tableau: TableauJson;
}

export interface StepDelta {
  nodeId: number;
  leafId: number;
  rule: RuleKind;
  added: number[];
}

export interface StepResponse {
  session: SessionJson;
  delta: StepDelta;
}

export interface ModelJson {
  universe: number[];
  valuation: Record<string, number[]>;
}

export interface TruthTableJson {
  atoms: string[];
  rows: { assignment: number[]; value: 0 | 1; states: number[] }[];
}

export interface VennJson {
  atoms: string[];
  regions: Record<string, boolean>;
}

export interface AnalysisJson {
  verdict: string;
  subject: string;
  openBranches: { number: number; literals: string[] }[];
  model: ModelJson | null;
  dnf: { text: string; clauses: [string, '+' | '-'][][] } | null;
  truthTable: TruthTableJson | null;
  vennRegions: VennJson | null;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail: unknown;
}
