/**
 * Editor state and its pure update functions.
 *
 * The document is the only geometry the client owns; every curve, comb and
 * chart on screen comes from a service response.  Update functions return a
 * new state and never touch the DOM, which keeps them trivially testable.
 */

import { alphaFromNormal, type ViewTransform } from './geometry.js';
import type {
  CoupleWire,
  InputDocument,
  RunReport,
  SchemeControls,
  SubdivideRequest,
} from './types.js';

export const OMEGA_MIN = -0.25;
export const OMEGA_MAX = -0.005;
export const OMEGA_DETENT = -1 / 18;
const DETENT_RADIUS = 0.006;
const SECANT_EPS = 1e-9;
const HISTORY_LIMIT = 100;

export interface EditorState {
  document: InputDocument;
  selection: number | null;
  scheme: SchemeControls;
  view: ViewTransform;
  report: RunReport | null;
  reportSeq: number | null;
  /** Couple whose move collapsed a secant; null when the document is sendable. */
  invalidIndex: number | null;
  warning: string | null;
  showNormals: boolean;
  showComb: boolean;
  history: InputDocument[];
}

export function initialState(document: InputDocument): EditorState {
  return {
    document,
    selection: null,
    scheme: schemeFromDocument(document),
    view: { scale: 200, offsetX: 400, offsetY: 300 },
    report: null,
    reportSeq: null,
    invalidIndex: null,
    warning: null,
    showNormals: true,
    showComb: true,
    history: [],
  };
}

/** Adopt the document's own scheme block where present, defaults elsewhere. */
export function schemeFromDocument(document: InputDocument): SchemeControls {
  const block = document.scheme ?? {};
  const name = typeof block.scheme === 'string' ? block.scheme : 'lr1';
  const levels = clampInt(block.levels ?? 5, 0, 10);
  const lr = /^lr([1-8])$/.exec(name);
  if (lr) {
    return { kind: 'lr', n: Number(lr[1]), omega: OMEGA_DETENT, levels, newtonSteps: 0 };
  }
  return { kind: 'fourpoint', n: 1, omega: OMEGA_DETENT, levels, newtonSteps: 0 };
}

function cloneDocument(document: InputDocument): InputDocument {
  return {
    format: 1,
    closed: document.closed,
    couples: document.couples.map((c) => ({ p: [c.p[0], c.p[1]], alpha: c.alpha })),
    ...(document.scheme ? { scheme: { ...document.scheme } } : {}),
  };
}

function clampInt(value: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, Math.round(value)));
}

/** First couple index whose outgoing secant is degenerate, or null. */
export function collapsedSecant(document: InputDocument): number | null {
  const couples = document.couples;
  const last = document.closed ? couples.length : couples.length - 1;
  for (let i = 0; i < last; i += 1) {
    const a = couples[i];
    const b = couples[(i + 1) % couples.length];
    if (Math.hypot(b.p[0] - a.p[0], b.p[1] - a.p[1]) < SECANT_EPS) return i;
  }
  return null;
}

function withDocument(state: EditorState, document: InputDocument): EditorState {
  const bad = collapsedSecant(document);
  return {
    ...state,
    document,
    invalidIndex: bad,
    warning:
      bad === null ? null : `couples ${bad} and ${bad + 1} coincide; not sent`,
  };
}

/** True when the current document may be sent to the service. */
export function sendable(state: EditorState): boolean {
  return state.invalidIndex === null && state.document.couples.length >= 2;
}

export function dragPoint(state: EditorState, index: number, x: number, y: number): EditorState {
  const document = cloneDocument(state.document);
  document.couples[index].p = [x, y];
  return withDocument(state, document);
}

/**
 * Point the couple's normal handle along (dx, dy); the tangent angle follows
 * as alpha = arg(n) - pi/2.  A zero-length direction leaves the state alone.
 */
export function dragNormal(state: EditorState, index: number, dx: number, dy: number): EditorState {
  const alpha = alphaFromNormal(dx, dy);
  if (alpha === null) return state;
  const document = cloneDocument(state.document);
  document.couples[index].alpha = alpha;
  return withDocument(state, document);
}

/** Scheme edits never touch the document. */
export function setScheme(state: EditorState, scheme: SchemeControls): EditorState {
  return { ...state, scheme };
}

/** Clamp omega into [-1/4, 0) and snap to the -1/18 detent when close. */
export function snapOmega(raw: number): number {
  const clamped = Math.min(OMEGA_MAX, Math.max(OMEGA_MIN, raw));
  return Math.abs(clamped - OMEGA_DETENT) < DETENT_RADIUS ? OMEGA_DETENT : clamped;
}

export function select(state: EditorState, index: number | null): EditorState {
  return { ...state, selection: index };
}

export function setClosed(state: EditorState, closed: boolean): EditorState {
  const document = cloneDocument(state.document);
  document.closed = closed;
  return withDocument(state, document);
}

export function addCouple(state: EditorState, x: number, y: number): EditorState {
  const document = cloneDocument(state.document);
  const couples = document.couples;
  const prev = couples[couples.length - 1];
  const alpha =
    prev === undefined ? 0 : Math.atan2(y - prev.p[1], x - prev.p[0]);
  couples.push({ p: [x, y], alpha });
  const next = withDocument(state, document);
  return { ...next, selection: couples.length - 1 };
}

export function deleteCouple(state: EditorState, index: number): EditorState {
  if (state.document.couples.length <= 2) {
    return { ...state, warning: 'a document needs at least two couples' };
  }
  const document = cloneDocument(state.document);
  document.couples.splice(index, 1);
  const next = withDocument(state, document);
  return { ...next, selection: null };
}

/** Snapshot the document before a gesture so one undo reverts the gesture. */
export function pushHistory(state: EditorState): EditorState {
  const history = [...state.history, cloneDocument(state.document)];
  if (history.length > HISTORY_LIMIT) history.shift();
  return { ...state, history };
}

export function undo(state: EditorState): EditorState {
  const history = [...state.history];
  const document = history.pop();
  if (document === undefined) return state;
  const next = withDocument({ ...state, history }, document);
  return { ...next, selection: null };
}

export function acceptReport(state: EditorState, report: RunReport, seq: number): EditorState {
  return { ...state, report, reportSeq: seq, warning: null };
}

/** Request body for the current document and controls. */
export function toRequestBody(state: EditorState): SubdivideRequest {
  const { kind, n, omega, levels, newtonSteps } = state.scheme;
  const body: SubdivideRequest = {
    input: cloneDocument(state.document),
    scheme: kind === 'lr' ? `lr${n}` : 'fourpoint',
    levels,
    newton_steps: newtonSteps,
    want_curvature: true,
  };
  if (kind === 'fourpoint') body.omega = omega;
  return body;
}

/** Parse an imported document, throwing a message suitable for the status bar. */
export function importDocument(text: string): InputDocument {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch {
    throw new Error('not valid JSON');
  }
  if (typeof data !== 'object' || data === null || Array.isArray(data)) {
    throw new Error('document must be a JSON object');
  }
  const doc = data as Partial<InputDocument>;
  if (!Array.isArray(doc.couples) || doc.couples.length < 2) {
    throw new Error('document needs a couples array with at least two entries');
  }
  const couples: CoupleWire[] = doc.couples.map((raw, i) => {
    const c = raw as { p?: unknown; alpha?: unknown; normal?: unknown };
    if (!Array.isArray(c.p) || c.p.length !== 2) {
      throw new Error(`couple ${i} has no point`);
    }
    const [x, y] = c.p as [unknown, unknown];
    if (typeof x !== 'number' || typeof y !== 'number' || !isFinite(x) || !isFinite(y)) {
      throw new Error(`couple ${i} has a bad point`);
    }
    if (typeof c.alpha === 'number') {
      return { p: [x, y], alpha: c.alpha };
    }
    if (Array.isArray(c.normal) && c.normal.length === 2) {
      const alpha = alphaFromNormal(Number(c.normal[0]), Number(c.normal[1]));
      if (alpha !== null) return { p: [x, y], alpha };
    }
    throw new Error(`couple ${i} needs alpha or a nonzero normal`);
  });
  return {
    format: 1,
    closed: doc.closed === true,
    couples,
    ...(doc.scheme && typeof doc.scheme === 'object' ? { scheme: doc.scheme } : {}),
  };
}

export function exportDocument(state: EditorState): string {
  return JSON.stringify(state.document, null, 2) + '\n';
}
