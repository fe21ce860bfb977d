/** Plane math for the editor: angle/normal conversions and the view transform. */

export interface Vec2 {
  x: number;
  y: number;
}

const TWO_PI = 2 * Math.PI;

/** Wrap an angle to (-pi, pi]. */
export function wrapAngle(a: number): number {
  let r = a % TWO_PI;
  if (r <= -Math.PI) r += TWO_PI;
  else if (r > Math.PI) r -= TWO_PI;
  return r;
}

/**
 * Tangent angle encoded by a normal direction: alpha = arg(n) - pi/2.
 * Returns null for a vector too short to carry a direction, so a
 * zero-length handle drag can be ignored by the caller.
 */
export function alphaFromNormal(nx: number, ny: number): number | null {
  if (Math.hypot(nx, ny) < 1e-12) return null;
  return wrapAngle(Math.atan2(ny, nx) - Math.PI / 2);
}

/** Unit normal for a tangent angle: n = (cos(alpha + pi/2), sin(alpha + pi/2)). */
export function normalFromAlpha(alpha: number): Vec2 {
  return { x: Math.cos(alpha + Math.PI / 2), y: Math.sin(alpha + Math.PI / 2) };
}

export function tangentFromAlpha(alpha: number): Vec2 {
  return { x: Math.cos(alpha), y: Math.sin(alpha) };
}

/**
 * World-to-canvas mapping: uniform scale, then translate, with the y axis
 * flipped so world "up" is screen "up".
 */
export interface ViewTransform {
  scale: number;
  offsetX: number;
  offsetY: number;
}

export function worldToCanvas(p: Vec2, view: ViewTransform): Vec2 {
  return { x: view.offsetX + view.scale * p.x, y: view.offsetY - view.scale * p.y };
}

export function canvasToWorld(q: Vec2, view: ViewTransform): Vec2 {
  return { x: (q.x - view.offsetX) / view.scale, y: (view.offsetY - q.y) / view.scale };
}

/** Fit a set of world points into a width x height canvas with a margin. */
export function fitView(
  points: Vec2[],
  width: number,
  height: number,
  margin = 60,
): ViewTransform {
  if (points.length === 0) {
    return { scale: 100, offsetX: width / 2, offsetY: height / 2 };
  }
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const p of points) {
    minX = Math.min(minX, p.x);
    maxX = Math.max(maxX, p.x);
    minY = Math.min(minY, p.y);
    maxY = Math.max(maxY, p.y);
  }
  const spanX = Math.max(maxX - minX, 1e-9);
  const spanY = Math.max(maxY - minY, 1e-9);
  const scale = Math.min(
    (width - 2 * margin) / spanX,
    (height - 2 * margin) / spanY,
  );
  const cx = (minX + maxX) / 2;
  const cy = (minY + maxY) / 2;
  return {
    scale,
    offsetX: width / 2 - scale * cx,
    offsetY: height / 2 + scale * cy,
  };
}

export function zoomAround(
  view: ViewTransform,
  pivot: Vec2,
  factor: number,
): ViewTransform {
  const world = canvasToWorld(pivot, view);
  const scale = view.scale * factor;
  return {
    scale,
    offsetX: pivot.x - scale * world.x,
    offsetY: pivot.y + scale * world.y,
  };
}

export function panBy(view: ViewTransform, dx: number, dy: number): ViewTransform {
  return { ...view, offsetX: view.offsetX + dx, offsetY: view.offsetY + dy };
}
