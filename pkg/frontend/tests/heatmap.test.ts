import { describe, expect, it } from "vitest";

import { heatColor, valueRange } from "../src/heatmap.js";

describe("heatColor", () => {
  it("maps zero to blue and the max to red", () => {
    expect(heatColor(0, 1)).toBe("hsl(240, 85%, 55%)");
    expect(heatColor(1, 1)).toBe("hsl(0, 85%, 55%)");
  });

  it("maps the midpoint to green-ish hues", () => {
    expect(heatColor(0.5, 1)).toBe("hsl(120, 85%, 55%)");
  });

  it("clamps out-of-range values", () => {
    expect(heatColor(-0.2, 1)).toBe("hsl(240, 85%, 55%)");
    expect(heatColor(2, 1)).toBe("hsl(0, 85%, 55%)");
  });

  it("treats a degenerate max as blue", () => {
    expect(heatColor(0.5, 0)).toBe("hsl(240, 85%, 55%)");
  });
});

describe("valueRange", () => {
  it("finds min and max", () => {
    expect(valueRange([0.2, 0.9, 0.1])).toEqual({ min: 0.1, max: 0.9 });
  });

  it("handles the empty list", () => {
    expect(valueRange([])).toEqual({ min: 0, max: 0 });
  });
});
