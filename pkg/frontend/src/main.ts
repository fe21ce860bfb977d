/** DOM wiring: one canvas, a toolbar, and a status line. */

import { DEFAULT_DEBOUNCE_MS, SubdivideClient, fetchTransport } from './api.js';
import { demoDocument } from './demo.js';
import { canvasToWorld, fitView, panBy, zoomAround, type Vec2 } from './geometry.js';
import { HANDLE_PX, buildFrame, drawFrame } from './render.js';
import {
  OMEGA_DETENT,
  OMEGA_MAX,
  OMEGA_MIN,
  acceptReport,
  addCouple,
  deleteCouple,
  dragNormal,
  dragPoint,
  exportDocument,
  importDocument,
  initialState,
  pushHistory,
  select,
  sendable,
  setClosed,
  setScheme,
  snapOmega,
  toRequestBody,
  undo,
  type EditorState,
} from './state.js';

const canvas = document.getElementById('canvas') as HTMLCanvasElement;
const ctx = canvas.getContext('2d')!;
const status = document.getElementById('status')!;
const devPanel = document.getElementById('devlog')!;
const devMode = new URLSearchParams(location.search).has('dev');

let state: EditorState = initialState(demoDocument());

const client = new SubdivideClient(fetchTransport(), {
  debounceMs: DEFAULT_DEBOUNCE_MS,
  onReport: (report, seq, elapsedMs) => {
    state = acceptReport(state, report, seq);
    const final = report.levels[report.levels.length - 1];
    setStatus(`${final.couples.length} couples, ${elapsedMs.toFixed(0)} ms`);
    repaint();
  },
  onError: (message, code, index) => {
    setStatus(
      `service: ${message}${index !== null ? ` (couple ${index})` : ''}${code ? ` [${code}]` : ''}`,
      true,
    );
    repaint();
  },
});

function setStatus(text: string, isError = false): void {
  status.textContent = text;
  status.className = isError ? 'error' : '';
}

function requestRefinement(immediate = false): void {
  if (!sendable(state)) {
    if (state.warning) setStatus(state.warning, true);
    return;
  }
  client.schedule(toRequestBody(state));
  if (immediate) client.flush();
}

function repaint(): void {
  const frame = buildFrame(state, canvas.width, canvas.height);
  drawFrame(ctx, frame, canvas.width, canvas.height);
  if (devMode) renderDevLog();
}

function renderDevLog(): void {
  const rows = client.log
    .slice(-12)
    .map((e) => {
      const ms = e.receivedAt === null ? '...' : `${e.receivedAt - e.sentAt}ms`;
      const n = e.couples === null ? '' : ` ${e.couples}c`;
      return `#${e.seq} ${e.outcome} ${ms}${n}${e.code ? ` ${e.code}` : ''}`;
    })
    .join('\n');
  devPanel.textContent = `rendered seq ${client.rendered}\n${rows}`;
}

// ---------------------------------------------------------------- toolbar

const schemeSelect = document.getElementById('scheme') as HTMLSelectElement;
const omegaSlider = document.getElementById('omega') as HTMLInputElement;
const omegaValue = document.getElementById('omega-value')!;
const levelsInput = document.getElementById('levels') as HTMLInputElement;
const newtonInput = document.getElementById('newton') as HTMLInputElement;
const closedBox = document.getElementById('closed') as HTMLInputElement;
const normalsBox = document.getElementById('normals') as HTMLInputElement;
const combBox = document.getElementById('comb') as HTMLInputElement;

omegaSlider.min = String(OMEGA_MIN);
omegaSlider.max = String(OMEGA_MAX);
omegaSlider.step = '0.0005';

function syncToolbar(): void {
  const { kind, n, omega, levels, newtonSteps } = state.scheme;
  schemeSelect.value = kind === 'lr' ? `lr${n}` : 'fourpoint';
  omegaSlider.value = String(omega);
  omegaSlider.disabled = kind !== 'fourpoint';
  omegaValue.textContent =
    omega === OMEGA_DETENT ? '-1/18' : omega.toFixed(4);
  levelsInput.value = String(levels);
  newtonInput.value = String(newtonSteps);
  closedBox.checked = state.document.closed;
  normalsBox.checked = state.showNormals;
  combBox.checked = state.showComb;
}

function schemeChanged(): void {
  const name = schemeSelect.value;
  const lr = /^lr([1-8])$/.exec(name);
  state = setScheme(state, {
    ...state.scheme,
    kind: lr ? 'lr' : 'fourpoint',
    n: lr ? Number(lr[1]) : state.scheme.n,
  });
  syncToolbar();
  requestRefinement();
}

schemeSelect.addEventListener('change', schemeChanged);

omegaSlider.addEventListener('input', () => {
  state = setScheme(state, { ...state.scheme, omega: snapOmega(Number(omegaSlider.value)) });
  syncToolbar();
  requestRefinement();
});

levelsInput.addEventListener('change', () => {
  const levels = Math.min(10, Math.max(0, Number(levelsInput.value) | 0));
  state = setScheme(state, { ...state.scheme, levels });
  syncToolbar();
  requestRefinement();
});

newtonInput.addEventListener('change', () => {
  const newtonSteps = Math.min(8, Math.max(0, Number(newtonInput.value) | 0));
  state = setScheme(state, { ...state.scheme, newtonSteps });
  syncToolbar();
  requestRefinement();
});

closedBox.addEventListener('change', () => {
  state = pushHistory(state);
  state = setClosed(state, closedBox.checked);
  repaint();
  requestRefinement();
});

normalsBox.addEventListener('change', () => {
  state = { ...state, showNormals: normalsBox.checked };
  repaint();
});

combBox.addEventListener('change', () => {
  state = { ...state, showComb: combBox.checked };
  repaint();
});

document.getElementById('undo')!.addEventListener('click', () => {
  state = undo(state);
  syncToolbar();
  repaint();
  requestRefinement();
});

document.getElementById('delete')!.addEventListener('click', () => {
  const index = state.selection;
  if (index === null) return;
  state = pushHistory(state);
  state = deleteCouple(state, index);
  if (state.warning) setStatus(state.warning, true);
  repaint();
  requestRefinement();
});

document.getElementById('fit')!.addEventListener('click', () => {
  fitToDocument();
  repaint();
});

document.getElementById('export')!.addEventListener('click', () => {
  const blob = new Blob([exportDocument(state)], { type: 'application/json' });
  const a = document.createElement('a');
  a.href = URL.createObjectURL(blob);
  a.download = 'curve.json';
  a.click();
  URL.revokeObjectURL(a.href);
});

const importInput = document.getElementById('import') as HTMLInputElement;
importInput.addEventListener('change', async () => {
  const file = importInput.files?.[0];
  if (!file) return;
  importInput.value = '';
  try {
    const doc = importDocument(await file.text());
    state = pushHistory(state);
    state = { ...initialState(doc), history: state.history, view: state.view };
    syncToolbar();
    fitToDocument();
    repaint();
    requestRefinement(true);
  } catch (err) {
    setStatus(`import: ${err instanceof Error ? err.message : String(err)}`, true);
  }
});

// ----------------------------------------------------------------- canvas

type Gesture =
  | { mode: 'point'; index: number }
  | { mode: 'normal'; index: number }
  | { mode: 'pan'; lastX: number; lastY: number }
  | null;

let gesture: Gesture = null;

function markerHit(at: Vec2): { mode: 'point' | 'normal'; index: number } | null {
  const frame = buildFrame(state, canvas.width, canvas.height);
  // Handle tips take priority: they sit farther from the couple and are
  // smaller targets.
  for (let i = 0; i < frame.markers.length; i += 1) {
    const tip = frame.markers[i].handleTip;
    if (Math.hypot(tip.x - at.x, tip.y - at.y) < 9 && state.showNormals) {
      return { mode: 'normal', index: i };
    }
  }
  for (let i = 0; i < frame.markers.length; i += 1) {
    const p = frame.markers[i].at;
    if (Math.hypot(p.x - at.x, p.y - at.y) < 11) {
      return { mode: 'point', index: i };
    }
  }
  return null;
}

function canvasPos(ev: PointerEvent): Vec2 {
  const rect = canvas.getBoundingClientRect();
  return { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
}

canvas.addEventListener('pointerdown', (ev) => {
  const at = canvasPos(ev);
  const hit = markerHit(at);
  if (hit) {
    state = pushHistory(select(state, hit.index));
    gesture = hit;
  } else {
    state = select(state, null);
    gesture = { mode: 'pan', lastX: at.x, lastY: at.y };
  }
  canvas.setPointerCapture(ev.pointerId);
  repaint();
});

canvas.addEventListener('pointermove', (ev) => {
  if (gesture === null) return;
  const at = canvasPos(ev);
  if (gesture.mode === 'pan') {
    state = { ...state, view: panBy(state.view, at.x - gesture.lastX, at.y - gesture.lastY) };
    gesture.lastX = at.x;
    gesture.lastY = at.y;
    repaint();
    return;
  }
  const world = canvasToWorld(at, state.view);
  if (gesture.mode === 'point') {
    state = dragPoint(state, gesture.index, world.x, world.y);
  } else {
    const c = state.document.couples[gesture.index];
    state = dragNormal(state, gesture.index, world.x - c.p[0], world.y - c.p[1]);
  }
  if (state.warning) setStatus(state.warning, true);
  else setStatus('');
  repaint();
  requestRefinement();
});

canvas.addEventListener('pointerup', (ev) => {
  gesture = null;
  canvas.releasePointerCapture(ev.pointerId);
});

canvas.addEventListener('dblclick', (ev) => {
  const rect = canvas.getBoundingClientRect();
  const world = canvasToWorld(
    { x: ev.clientX - rect.left, y: ev.clientY - rect.top },
    state.view,
  );
  state = pushHistory(state);
  state = addCouple(state, world.x, world.y);
  repaint();
  requestRefinement();
});

canvas.addEventListener('wheel', (ev) => {
  ev.preventDefault();
  const rect = canvas.getBoundingClientRect();
  const pivot = { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
  state = { ...state, view: zoomAround(state.view, pivot, ev.deltaY < 0 ? 1.1 : 1 / 1.1) };
  repaint();
});

window.addEventListener('keydown', (ev) => {
  const index = state.selection;
  if (ev.key === 'Delete' && index !== null) {
    state = pushHistory(state);
    state = deleteCouple(state, index);
    repaint();
    requestRefinement();
  }
});

function fitToDocument(): void {
  const pts = state.document.couples.map((c) => ({ x: c.p[0], y: c.p[1] }));
  state = { ...state, view: fitView(pts, canvas.width, canvas.height, HANDLE_PX + 40) };
}

function sizeCanvas(): void {
  const holder = canvas.parentElement!;
  canvas.width = holder.clientWidth;
  canvas.height = holder.clientHeight;
}

window.addEventListener('resize', () => {
  sizeCanvas();
  repaint();
});

if (devMode) devPanel.classList.remove('hidden');
sizeCanvas();
syncToolbar();
fitToDocument();
repaint();
requestRefinement(true);
