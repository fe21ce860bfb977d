/**
 * Frame construction and canvas drawing.
 *
 * buildFrame is pure: it turns the current state into canvas-space primitives
 * and is the single place deciding what gets drawn.  Curve, comb and chart
 * geometry come exclusively from the last service report; the only
 * client-owned geometry on screen is the input couples themselves.
 */

import {
  normalFromAlpha,
  worldToCanvas,
  type Vec2,
  type ViewTransform,
} from './geometry.js';
import type { EditorState } from './state.js';

export const HANDLE_PX = 44;
const COMB_FRACTION = 0.18;
const CHART_H = 110;

export interface InputMarker {
  at: Vec2;
  handleTip: Vec2;
  selected: boolean;
  invalid: boolean;
}

export interface CombTooth {
  base: Vec2;
  tip: Vec2;
}

export interface Frame {
  /** Sequence number of the report the curve came from, null = nothing yet. */
  sourceSeq: number | null;
  closed: boolean;
  curve: Vec2[];
  markers: InputMarker[];
  comb: CombTooth[];
  chart: Vec2[];
  chartBaseY: number;
}

/** Project the final report level to canvas space; [] before the first report. */
function curvePoints(state: EditorState, view: ViewTransform): Vec2[] {
  if (state.report === null) return [];
  const levels = state.report.levels;
  const final = levels[levels.length - 1];
  return final.couples.map((c) => worldToCanvas({ x: c.p[0], y: c.p[1] }, view));
}

function buildMarkers(state: EditorState, view: ViewTransform): InputMarker[] {
  return state.document.couples.map((c, i) => {
    const at = worldToCanvas({ x: c.p[0], y: c.p[1] }, view);
    const n = normalFromAlpha(c.alpha);
    return {
      at,
      // The handle is drawn at fixed screen length so it stays grabbable
      // at any zoom.
      handleTip: { x: at.x + HANDLE_PX * n.x, y: at.y - HANDLE_PX * n.y },
      selected: state.selection === i,
      invalid: state.invalidIndex === i || state.invalidIndex === i - 1,
    };
  });
}

/**
 * Curvature comb over the final level.  Tooth length is kappa scaled so the
 * largest tooth spans COMB_FRACTION of the curve's world extent, matching
 * the SVG exporter's auto-scale.
 */
function buildComb(state: EditorState, view: ViewTransform): CombTooth[] {
  const report = state.report;
  if (report === null || report.curvature === null || !state.showComb) return [];
  const final = report.levels[report.levels.length - 1].couples;
  const kappa = report.curvature.kappa;
  if (kappa.length !== final.length) return [];
  let peak = 0;
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (let i = 0; i < final.length; i += 1) {
    peak = Math.max(peak, Math.abs(kappa[i]));
    minX = Math.min(minX, final[i].p[0]);
    maxX = Math.max(maxX, final[i].p[0]);
    minY = Math.min(minY, final[i].p[1]);
    maxY = Math.max(maxY, final[i].p[1]);
  }
  if (peak === 0) return [];
  const span = Math.max(maxX - minX, maxY - minY, 1e-9);
  const scale = (COMB_FRACTION * span) / peak;
  return final.map((c, i) => {
    const n = normalFromAlpha(c.alpha);
    const world = { x: c.p[0], y: c.p[1] };
    const tip = {
      x: world.x + scale * kappa[i] * n.x,
      y: world.y + scale * kappa[i] * n.y,
    };
    return { base: worldToCanvas(world, view), tip: worldToCanvas(tip, view) };
  });
}

/** Kappa-vs-arclength strip along the bottom of the canvas. */
function buildChart(state: EditorState, width: number, height: number): Vec2[] {
  const report = state.report;
  if (report === null || report.curvature === null || !state.showComb) return [];
  const { s, kappa } = report.curvature;
  if (s.length < 2) return [];
  const sMax = s[s.length - 1];
  if (!(sMax > 0)) return [];
  let peak = 0;
  for (const k of kappa) peak = Math.max(peak, Math.abs(k));
  const margin = 16;
  const mid = height - CHART_H / 2;
  const yScale = peak === 0 ? 0 : (CHART_H / 2 - 12) / peak;
  return s.map((si, i) => ({
    x: margin + ((width - 2 * margin) * si) / sMax,
    y: mid - kappa[i] * yScale,
  }));
}

export function buildFrame(state: EditorState, width: number, height: number): Frame {
  const view = state.view;
  return {
    sourceSeq: state.report === null ? null : state.reportSeq,
    closed: state.report?.closed ?? state.document.closed,
    curve: curvePoints(state, view),
    markers: state.showNormals ? buildMarkers(state, view) : buildMarkersBare(state, view),
    comb: buildComb(state, view),
    chart: buildChart(state, width, height),
    chartBaseY: height - CHART_H / 2,
  };
}

function buildMarkersBare(state: EditorState, view: ViewTransform): InputMarker[] {
  return buildMarkers(state, view).map((m) => ({ ...m, handleTip: m.at }));
}

const COLORS = {
  grid: 'rgba(128, 128, 128, 0.14)',
  curve: '#1d4ed8',
  comb: 'rgba(22, 163, 74, 0.55)',
  marker: '#111827',
  markerInvalid: '#dc2626',
  markerSelected: '#d97706',
  handle: 'rgba(17, 24, 39, 0.5)',
  chart: '#16a34a',
  chartAxis: 'rgba(128, 128, 128, 0.4)',
};

export function drawFrame(ctx: CanvasRenderingContext2D, frame: Frame, width: number, height: number): void {
  ctx.clearRect(0, 0, width, height);
  drawGrid(ctx, width, height);

  if (frame.curve.length > 1) {
    ctx.beginPath();
    ctx.moveTo(frame.curve[0].x, frame.curve[0].y);
    for (let i = 1; i < frame.curve.length; i += 1) {
      ctx.lineTo(frame.curve[i].x, frame.curve[i].y);
    }
    if (frame.closed) ctx.closePath();
    ctx.strokeStyle = COLORS.curve;
    ctx.lineWidth = 2;
    ctx.stroke();
  }

  ctx.strokeStyle = COLORS.comb;
  ctx.lineWidth = 1;
  for (const tooth of frame.comb) {
    ctx.beginPath();
    ctx.moveTo(tooth.base.x, tooth.base.y);
    ctx.lineTo(tooth.tip.x, tooth.tip.y);
    ctx.stroke();
  }

  for (const m of frame.markers) {
    if (m.handleTip.x !== m.at.x || m.handleTip.y !== m.at.y) {
      ctx.beginPath();
      ctx.moveTo(m.at.x, m.at.y);
      ctx.lineTo(m.handleTip.x, m.handleTip.y);
      ctx.strokeStyle = COLORS.handle;
      ctx.lineWidth = 1;
      ctx.stroke();
      ctx.beginPath();
      ctx.arc(m.handleTip.x, m.handleTip.y, 4, 0, 2 * Math.PI);
      ctx.fillStyle = COLORS.handle;
      ctx.fill();
    }
    ctx.beginPath();
    ctx.arc(m.at.x, m.at.y, m.selected ? 6 : 5, 0, 2 * Math.PI);
    ctx.fillStyle = m.invalid
      ? COLORS.markerInvalid
      : m.selected
        ? COLORS.markerSelected
        : COLORS.marker;
    ctx.fill();
  }

  if (frame.chart.length > 1) {
    ctx.strokeStyle = COLORS.chartAxis;
    ctx.lineWidth = 1;
    ctx.beginPath();
    ctx.moveTo(0, frame.chartBaseY);
    ctx.lineTo(width, frame.chartBaseY);
    ctx.stroke();
    ctx.beginPath();
    ctx.moveTo(frame.chart[0].x, frame.chart[0].y);
    for (let i = 1; i < frame.chart.length; i += 1) {
      ctx.lineTo(frame.chart[i].x, frame.chart[i].y);
    }
    ctx.strokeStyle = COLORS.chart;
    ctx.stroke();
  }
}

function drawGrid(ctx: CanvasRenderingContext2D, width: number, height: number): void {
  ctx.strokeStyle = COLORS.grid;
  ctx.lineWidth = 1;
  const step = 50;
  for (let x = step; x < width; x += step) {
    ctx.beginPath();
    ctx.moveTo(x, 0);
    ctx.lineTo(x, height);
    ctx.stroke();
  }
  for (let y = step; y < height; y += step) {
    ctx.beginPath();
    ctx.moveTo(0, y);
    ctx.lineTo(width, y);
    ctx.stroke();
  }
}
