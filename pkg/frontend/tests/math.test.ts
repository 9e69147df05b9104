import { describe, expect, it } from "vitest";

import {
  allFinite,
  centroid,
  deformAll,
  deformPoint,
  isConvex,
  maxPointDistance,
  rowSum,
  strictlyInside,
  type Vec2,
} from "../src/math.js";

const SQUARE: Vec2[] = [
  [0, 0],
  [1, 0],
  [1, 1],
  [0, 1],
];

describe("deformPoint", () => {
  it("reproduces a vertex from its basis row", () => {
    expect(deformPoint([0, 1, 0, 0], SQUARE)).toEqual([1, 0]);
  });

  it("maps the uniform row to the vertex average", () => {
    expect(deformPoint([0.25, 0.25, 0.25, 0.25], SQUARE)).toEqual([0.5, 0.5]);
  });

  it("is linear in the target: translation moves every output", () => {
    const beta = [0.1, 0.2, 0.3, 0.4];
    const shifted = SQUARE.map(([x, y]) => [x + 2, y - 1] as Vec2);
    const [x0, y0] = deformPoint(beta, SQUARE);
    const [x1, y1] = deformPoint(beta, shifted);
    expect(x1).toBeCloseTo(x0 + 2, 12);
    expect(y1).toBeCloseTo(y0 - 1, 12);
  });
});

describe("deformAll", () => {
  it("applies every row", () => {
    const betas = [
      [1, 0, 0, 0],
      [0, 0, 1, 0],
    ];
    expect(deformAll(betas, SQUARE)).toEqual([
      [0, 0],
      [1, 1],
    ]);
  });
});

describe("rowSum", () => {
  it("sums a row", () => {
    expect(rowSum([0.5, 0.25, 0.25])).toBeCloseTo(1, 15);
  });
});

describe("isConvex", () => {
  it("accepts the square in both orientations", () => {
    expect(isConvex(SQUARE)).toBe(true);
    expect(isConvex([...SQUARE].reverse())).toBe(true);
  });

  it("rejects an arrow-shaped quadrilateral", () => {
    expect(
      isConvex([
        [0, 0],
        [4, 0],
        [1, 1],
        [0, 4],
      ]),
    ).toBe(false);
  });

  it("rejects collinear consecutive vertices", () => {
    expect(
      isConvex([
        [0, 0],
        [1, 0],
        [2, 0],
        [1, 1],
      ]),
    ).toBe(false);
  });

  it("rejects degenerate inputs", () => {
    expect(isConvex([])).toBe(false);
    expect(
      isConvex([
        [0, 0],
        [1, 1],
      ]),
    ).toBe(false);
  });
});

describe("strictlyInside", () => {
  it("accepts interior points and rejects boundary and exterior", () => {
    expect(strictlyInside(SQUARE, [0.5, 0.5])).toBe(true);
    expect(strictlyInside(SQUARE, [0, 0.5])).toBe(false);
    expect(strictlyInside(SQUARE, [1.5, 0.5])).toBe(false);
  });

  it("enforces the margin", () => {
    expect(strictlyInside(SQUARE, [0.005, 0.5], 0.01)).toBe(false);
    expect(strictlyInside(SQUARE, [0.02, 0.5], 0.01)).toBe(true);
  });
});

describe("maxPointDistance", () => {
  it("returns the worst coordinate difference", () => {
    expect(
      maxPointDistance(
        [
          [0, 0],
          [1, 1],
        ],
        [
          [0.25, 0],
          [1, 0.5],
        ],
      ),
    ).toBeCloseTo(0.5, 15);
  });
});

describe("centroid", () => {
  it("averages the vertices", () => {
    expect(centroid(SQUARE)).toEqual([0.5, 0.5]);
  });
});

describe("allFinite", () => {
  it("flags NaN and infinities", () => {
    expect(allFinite([[0, 1]])).toBe(true);
    expect(allFinite([[Number.NaN, 1]])).toBe(false);
    expect(allFinite([[0, Infinity]])).toBe(false);
  });
});
