/** Wire types shared with the curve service. */

export interface CoupleWire {
  p: [number, number];
  alpha: number;
}

export interface SchemeBlock {
  scheme?: string;
  levels?: number;
}

export interface InputDocument {
  format: 1;
  closed: boolean;
  couples: CoupleWire[];
  scheme?: SchemeBlock;
}

export interface LevelWire {
  closed: boolean;
  couples: CoupleWire[];
}

export interface LevelDiagnosticsWire {
  max_secant: number;
  max_beta_norm: number;
  max_exterior_angle: number;
  max_tangent_mismatch: number;
}

export interface CurvatureWire {
  s: number[];
  kappa: number[];
}

export interface RunReport {
  format: number;
  version: string;
  scheme: Record<string, unknown>;
  closed: boolean;
  levels: LevelWire[];
  diagnostics: LevelDiagnosticsWire[];
  curvature: CurvatureWire | null;
}

export interface ServiceError {
  error: {
    code: string;
    message: string;
    index: number | null;
  };
}

/** Scheme controls as the toolbar edits them. */
export interface SchemeControls {
  kind: 'lr' | 'fourpoint';
  n: number;
  omega: number;
  levels: number;
  newtonSteps: number;
}

/** Body of a POST /api/subdivide request. */
export interface SubdivideRequest {
  input: InputDocument;
  scheme: string;
  levels: number;
  omega?: number;
  newton_steps: number;
  want_curvature: boolean;
}

export function isServiceError(value: unknown): value is ServiceError {
  if (typeof value !== 'object' || value === null) return false;
  const err = (value as { error?: unknown }).error;
  return typeof err === 'object' && err !== null && 'code' in err;
}

export function isRunReport(value: unknown): value is RunReport {
  if (typeof value !== 'object' || value === null) return false;
  const v = value as { levels?: unknown; diagnostics?: unknown };
  return Array.isArray(v.levels) && Array.isArray(v.diagnostics);
}
