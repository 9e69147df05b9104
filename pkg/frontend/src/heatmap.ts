/** Color mapping for per-sample coordinate values. */

/**
 * Map a coordinate value in [0, max] to an HSL ramp from deep blue (0) to
 * red (max).  Values outside the range clamp; a degenerate max maps to blue.
 */
export function heatColor(value: number, max: number): string {
  const x = max > 0 ? Math.min(1, Math.max(0, value / max)) : 0;
  const hue = Math.round(240 * (1 - x));
  return `hsl(${hue}, 85%, 55%)`;
}

export function valueRange(values: readonly number[]): { min: number; max: number } {
  let min = Infinity;
  let max = -Infinity;
  for (const v of values) {
    if (v < min) min = v;
    if (v > max) max = v;
  }
  if (values.length === 0) return { min: 0, max: 0 };
  return { min, max };
}
