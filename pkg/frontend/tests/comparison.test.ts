import { describe, expect, it } from "vitest";

import {
  buildComparisonModel,
  expectedGlyphCount,
  mulberry32,
} from "../src/model/comparison.js";
import type { ComparePayload } from "../src/types.js";

import compareK2 from "./fixtures/compare_k2.json";
import compareK3 from "./fixtures/compare_k3.json";
import compareK4 from "./fixtures/compare_k4.json";

const k2 = compareK2 as unknown as ComparePayload;
const k3 = compareK3 as unknown as ComparePayload;
const k4 = compareK4 as unknown as ComparePayload;

describe("domination glyph counts", () => {
  it.each([
    [k2, 1],
    [k3, 4],
    [k4, 11],
  ])("renders 2^k - 1 - k glyphs", (payload, expected) => {
    const model = buildComparisonModel(payload, payload.dimensions);
    expect(model.glyphs).toHaveLength(expected);
    expect(expectedGlyphCount(payload.selected.length)).toBe(expected);
  });

  it("every glyph links at least two points", () => {
    const model = buildComparisonModel(k4, k4.dimensions);
    for (const glyph of model.glyphs) {
      expect(glyph.members.length).toBeGreaterThanOrEqual(2);
    }
  });
});

describe("exclusive arcs", () => {
  it("renders a zero-length arc for an empty exclusive cell", () => {
    // fixture: everything p dominates is also dominated by q
    const model = buildComparisonModel(k2, k2.dimensions);
    const glyph = model.glyphs[0];
    const arcP = glyph.arcs.find((a) => a.pointId === "p")!;
    const arcQ = glyph.arcs.find((a) => a.pointId === "q")!;
    expect(arcP.count).toBe(0);
    expect(arcP.fraction).toBe(0);
    expect(arcP.pointIds).toEqual([]);
    expect(arcQ.count).toBe(1);
    expect(arcQ.fraction).toBeGreaterThan(0);
  });

  it("arc fractions never exceed the union", () => {
    const model = buildComparisonModel(k4, k4.dimensions);
    for (const glyph of model.glyphs) {
      const totalExclusive = glyph.arcs.reduce((s, a) => s + a.count, 0);
      expect(totalExclusive).toBeLessThanOrEqual(glyph.unionSize);
      for (const arc of glyph.arcs) {
        expect(arc.fraction).toBeGreaterThanOrEqual(0);
        expect(arc.fraction).toBeLessThanOrEqual(1);
      }
    }
  });

  it("exclusive points carry their raw vectors for the pop-up radar", () => {
    const model = buildComparisonModel(k2, k2.dimensions);
    const arcQ = model.glyphs[0].arcs.find((a) => a.pointId === "q")!;
    expect(arcQ.vectors).toHaveLength(arcQ.count);
    expect(arcQ.vectors[0]).toHaveLength(k2.dimensions.length);
  });
});

describe("glyph composition", () => {
  it("pie slices reflect the dominating scores of the linked points", () => {
    const model = buildComparisonModel(k3, k3.dimensions);
    for (const glyph of model.glyphs) {
      for (const slice of glyph.pie) {
        expect(slice.score).toBe(k3.partition.perPointScore[slice.pointId]);
      }
      const total = glyph.pie.reduce((s, p) => s + p.fraction, 0);
      if (glyph.pie.some((p) => p.score > 0)) {
        expect(total).toBeCloseTo(1, 9);
      }
    }
  });

  it("radius grows with the union of dominated points", () => {
    const model = buildComparisonModel(k4, k4.dimensions);
    const sorted = [...model.glyphs].sort((a, b) => a.unionSize - b.unionSize);
    const radii = sorted.map((g) => g.radius);
    for (let i = 1; i < radii.length; i++) {
      expect(radii[i]).toBeGreaterThanOrEqual(radii[i - 1]);
    }
    expect(Math.max(...radii)).toBe(1);
  });

  it("union matches cells touching the subset", () => {
    const model = buildComparisonModel(k4, k4.dimensions);
    for (const glyph of model.glyphs) {
      const members = new Set(glyph.members);
      let expected = 0;
      for (const cell of k4.partition.cells) {
        if (cell.members.some((m) => members.has(m))) {
          expected += cell.pointIds.length;
        }
      }
      expect(glyph.unionSize).toBe(expected);
    }
  });
});

describe("radar ring", () => {
  it("places radars at uniformly distributed angles", () => {
    const model = buildComparisonModel(k3, k3.dimensions);
    expect(model.radars).toHaveLength(3);
    for (const radar of model.radars) {
      expect(Math.hypot(radar.x, radar.y)).toBeCloseTo(1, 9);
    }
  });

  it("axes follow the requested attribute order", () => {
    const reversed = [...k3.dimensions].reverse();
    const model = buildComparisonModel(k3, reversed);
    for (const radar of model.radars) {
      expect(radar.axes.map((a) => a.attribute)).toEqual(reversed);
    }
  });

  it("axis values and ranks come straight from the payload", () => {
    const model = buildComparisonModel(k3, k3.dimensions);
    for (const radar of model.radars) {
      const info = k3.radar[radar.pointId];
      for (const axis of radar.axes) {
        expect(axis.value).toBe(info.values[axis.attribute]);
        expect(axis.rank).toBe(info.rankings[axis.attribute]);
      }
    }
  });
});

describe("layout determinism", () => {
  it("same payload, same coordinates", () => {
    const a = buildComparisonModel(k4, k4.dimensions);
    const b = buildComparisonModel(k4, k4.dimensions);
    expect(a.glyphs.map((g) => [g.x, g.y])).toEqual(
      b.glyphs.map((g) => [g.x, g.y]),
    );
  });

  it("prng is reproducible", () => {
    const a = mulberry32(7);
    const b = mulberry32(7);
    for (let i = 0; i < 10; i++) expect(a()).toBe(b());
  });

  it("matches the frozen snapshot", () => {
    expect(buildComparisonModel(k2, k2.dimensions)).toMatchSnapshot();
  });
});
