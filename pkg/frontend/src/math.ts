/** Pure 2D geometry and barycentric-weight arithmetic for the editor. */

export type Vec2 = readonly [number, number];

/** Weighted average of the target vertices by one barycentric row. */
export function deformPoint(beta: readonly number[], target: readonly Vec2[]): [number, number] {
  let x = 0;
  let y = 0;
  for (let i = 0; i < beta.length; i++) {
    x += beta[i] * target[i][0];
    y += beta[i] * target[i][1];
  }
  return [x, y];
}

/** Apply every cached barycentric row to the target polygon. */
export function deformAll(
  betas: readonly (readonly number[])[],
  target: readonly Vec2[],
): [number, number][] {
  return betas.map((row) => deformPoint(row, target));
}

export function rowSum(row: readonly number[]): number {
  let s = 0;
  for (const v of row) s += v;
  return s;
}

function cross(o: Vec2, a: Vec2, b: Vec2): number {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/**
 * Strict convexity: every consecutive edge pair turns the same way and no
 * three consecutive vertices are collinear.  Works for either orientation.
 */
export function isConvex(polygon: readonly Vec2[]): boolean {
  const d = polygon.length;
  if (d < 3) return false;
  let sign = 0;
  for (let i = 0; i < d; i++) {
    const c = cross(polygon[i], polygon[(i + 1) % d], polygon[(i + 2) % d]);
    if (c === 0) return false;
    const s = c > 0 ? 1 : -1;
    if (sign === 0) sign = s;
    else if (s !== sign) return false;
  }
  return true;
}

/**
 * True when p lies strictly inside the convex polygon, at least `margin`
 * away from every edge (margin in the same units as the coordinates).
 */
export function strictlyInside(polygon: readonly Vec2[], p: Vec2, margin = 0): boolean {
  const d = polygon.length;
  let sign = 0;
  for (let i = 0; i < d; i++) {
    const a = polygon[i];
    const b = polygon[(i + 1) % d];
    const c = cross(a, b, p);
    const len = Math.hypot(b[0] - a[0], b[1] - a[1]);
    if (len === 0) return false;
    const dist = c / len; // signed distance to the edge line
    if (Math.abs(dist) <= margin) return false;
    const s = dist > 0 ? 1 : -1;
    if (sign === 0) sign = s;
    else if (s !== sign) return false;
  }
  return true;
}

/** Largest coordinate-wise distance between two point lists of equal length. */
export function maxPointDistance(
  a: readonly Vec2[],
  b: readonly Vec2[],
): number {
  let worst = 0;
  for (let i = 0; i < a.length; i++) {
    worst = Math.max(worst, Math.abs(a[i][0] - b[i][0]), Math.abs(a[i][1] - b[i][1]));
  }
  return worst;
}

export function centroid(polygon: readonly Vec2[]): [number, number] {
  let x = 0;
  let y = 0;
  for (const [px, py] of polygon) {
    x += px;
    y += py;
  }
  return [x / polygon.length, y / polygon.length];
}

export function allFinite(points: readonly Vec2[]): boolean {
  return points.every(([x, y]) => Number.isFinite(x) && Number.isFinite(y));
}
