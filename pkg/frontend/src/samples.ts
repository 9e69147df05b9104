/** Sample-set generators: all points land strictly inside the source polygon. */

import type { Vec2 } from "./math.js";
import { strictlyInside } from "./math.js";

export interface GridParams {
  kind: "grid";
  nx: number;
  ny: number;
}

export interface OutlineParams {
  kind: "outline";
  center: Vec2;
  radius: number;
  count: number;
}

export interface StrokeParams {
  kind: "stroke";
  points: readonly Vec2[];
}

export type ShapeParams = GridParams | OutlineParams | StrokeParams;

function insideMargin(polygon: readonly Vec2[]): number {
  let maxSpan = 0;
  for (const [x, y] of polygon) {
    maxSpan = Math.max(maxSpan, Math.abs(x), Math.abs(y));
  }
  return 1e-9 * Math.max(1, maxSpan);
}

/**
 * Generate the requested sample set, keeping only points strictly inside the
 * source polygon.  Grid cells are sampled at their centers, so a full nx-by-ny
 * grid survives whenever the polygon contains its bounding box interior (for a
 * square: nx*ny points).
 */
export function generateSamples(source: readonly Vec2[], params: ShapeParams): [number, number][] {
  const margin = insideMargin(source);
  const keep = (p: Vec2): boolean => strictlyInside(source, p, margin);
  switch (params.kind) {
    case "grid": {
      const xs = source.map((v) => v[0]);
      const ys = source.map((v) => v[1]);
      const minX = Math.min(...xs);
      const maxX = Math.max(...xs);
      const minY = Math.min(...ys);
      const maxY = Math.max(...ys);
      const out: [number, number][] = [];
      for (let j = 0; j < params.ny; j++) {
        for (let i = 0; i < params.nx; i++) {
          const p: [number, number] = [
            minX + ((i + 0.5) / params.nx) * (maxX - minX),
            minY + ((j + 0.5) / params.ny) * (maxY - minY),
          ];
          if (keep(p)) out.push(p);
        }
      }
      return out;
    }
    case "outline": {
      const out: [number, number][] = [];
      for (let k = 0; k < params.count; k++) {
        const a = (2 * Math.PI * k) / params.count;
        const p: [number, number] = [
          params.center[0] + params.radius * Math.cos(a),
          params.center[1] + params.radius * Math.sin(a),
        ];
        if (keep(p)) out.push(p);
      }
      return out;
    }
    case "stroke":
      return params.points.filter(keep).map(([x, y]) => [x, y]);
  }
}
