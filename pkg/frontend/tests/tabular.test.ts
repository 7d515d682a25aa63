import { describe, expect, it } from "vitest";

import {
  buildTabularModel,
  grayedRows,
  passesBrush,
  type TabularState,
} from "../src/model/tabular.js";
import type {
  DetailPayload,
  DistributionPayload,
  SkylinePayload,
} from "../src/types.js";

import skylineFixture from "./fixtures/skyline.json";
import detailsFixture from "./fixtures/details.json";
import distributionsFixture from "./fixtures/distributions.json";
import brushFixture from "./fixtures/brush.json";
import subspaceFixture from "./fixtures/subspace.json";

const skyline = skylineFixture as unknown as SkylinePayload;
const details = detailsFixture as unknown as Record<string, DetailPayload>;
const distributions = distributionsFixture as unknown as Record<
  string,
  DistributionPayload
>;

function baseState(overrides: Partial<TabularState> = {}): TabularState {
  return {
    attributeOrder: [...skyline.dimensions],
    expandedRowId: null,
    brushRanges: {},
    selectedSubspace: [],
    subspaceIds: [],
    ...overrides,
  };
}

const k = skyline.skyline.ids.length;
const m = skyline.dimensions.length;

describe("tabular expansion matrix", () => {
  const anchor = skyline.skyline.ids[0];
  const model = buildTabularModel(
    skyline,
    details,
    distributions,
    baseState({ expandedRowId: anchor }),
  );
  const row = model.rows.find((r) => r.pointId === anchor)!;

  it("renders an m x (k-1) delta matrix in every expanded cell", () => {
    for (const cell of row.cells) {
      expect(cell.matrix).not.toBeNull();
      expect(cell.matrix!.attributes).toHaveLength(m);
      expect(cell.matrix!.cells).toHaveLength(m);
      for (const matrixRow of cell.matrix!.cells) {
        expect(matrixRow).toHaveLength(k - 1);
      }
    }
  });

  it("aligns matrix columns with the cell's non-anchor bars", () => {
    for (const cell of row.cells) {
      const barOrder = cell.bars
        .filter((b) => !b.isAnchor)
        .map((b) => b.pointId);
      expect(cell.matrix!.columns).toEqual(barOrder);
    }
  });

  it("fills matrix cells with the payload's column-minus-anchor deltas", () => {
    const diff = details[anchor].diff;
    const idIndex = new Map(diff.skylineIds.map((id, i) => [id, i]));
    const cell = row.cells[0];
    cell.matrix!.attributes.forEach((attr, r) => {
      const l = diff.attributes.indexOf(attr);
      cell.matrix!.columns.forEach((pid, c) => {
        expect(cell.matrix!.cells[r][c]).toBe(diff.delta[idIndex.get(pid)!][l]);
      });
    });
  });

  it("collapsed rows carry no matrix", () => {
    const collapsed = model.rows.find((r) => r.pointId !== anchor)!;
    for (const cell of collapsed.cells) expect(cell.matrix).toBeNull();
  });

  it("draws one decisive line per minimal decisive subspace", () => {
    expect(row.decisive).not.toBeNull();
    expect(row.decisive!.lines).toHaveLength(
      details[anchor].decisive.minimal.length,
    );
    row.decisive!.lines.forEach((line, s) => {
      const subspace = details[anchor].decisive.minimal[s];
      line.forEach((member, i) => {
        expect(member).toBe(subspace.includes(row.decisive!.attributes[i]));
      });
    });
  });

  it("matches the frozen snapshot", () => {
    expect(row).toMatchSnapshot();
  });
});

describe("diverging bar signs", () => {
  const model = buildTabularModel(skyline, details, distributions, baseState());

  it("places a bar above the baseline iff its summary difference is positive", () => {
    for (const row of model.rows) {
      for (const cell of row.cells) {
        for (const bar of cell.bars) {
          expect(bar.above).toBe(bar.summary > 0);
        }
      }
    }
  });

  it("bar sign agrees with the payload summary matrix", () => {
    const anchor = skyline.skyline.ids[1];
    const row = model.rows.find((r) => r.pointId === anchor)!;
    const diff = details[anchor].diff;
    const idIndex = new Map(diff.skylineIds.map((id, i) => [id, i]));
    for (const cell of row.cells) {
      const j = diff.attributes.indexOf(cell.attribute);
      for (const bar of cell.bars) {
        expect(bar.summary).toBe(diff.summary[j][idIndex.get(bar.pointId)!]);
      }
    }
  });

  it("sorts bars worst-to-best and positions the anchor by its rank", () => {
    for (const row of model.rows) {
      for (const cell of row.cells) {
        const ranks = cell.bars.map((b) => b.rank);
        const sorted = [...ranks].sort((a, b) => b - a);
        expect(ranks).toEqual(sorted);
        expect(cell.bars[cell.anchorIndex].isAnchor).toBe(true);
      }
    }
  });
});

describe("brushing", () => {
  const ranges = Object.fromEntries(
    Object.entries(brushFixture.ranges).map(([attr, range]) => [
      attr,
      range as [number, number],
    ]),
  );
  const model = buildTabularModel(
    skyline,
    details,
    distributions,
    baseState({ brushRanges: ranges }),
  );

  it("grays exactly the rows the engine marks as failing", () => {
    const expectedFails = Object.entries(brushFixture.expected)
      .filter(([, pass]) => !pass)
      .map(([id]) => id);
    expect(grayedRows(model).sort()).toEqual(expectedFails.sort());
  });

  it("agrees with the engine on every row", () => {
    for (const [pid, pass] of Object.entries(brushFixture.expected)) {
      expect(passesBrush(details[pid].rawValues, ranges)).toBe(pass);
    }
  });

  it("boundary values pass (inclusive ranges)", () => {
    expect(passesBrush({ cost: 40.0 }, { cost: [40.0, 80.0] })).toBe(true);
    expect(passesBrush({ cost: 80.0 }, { cost: [40.0, 80.0] })).toBe(true);
    expect(passesBrush({ cost: 39.9 }, { cost: [40.0, 80.0] })).toBe(false);
  });

  it("no ranges grays nothing", () => {
    const clean = buildTabularModel(skyline, details, distributions, baseState());
    expect(grayedRows(clean)).toEqual([]);
  });
});

describe("subspace highlighting", () => {
  it("flags exactly the /subspace ids", () => {
    const model = buildTabularModel(
      skyline,
      details,
      distributions,
      baseState({
        selectedSubspace: subspaceFixture.attributes,
        subspaceIds: subspaceFixture.ids,
      }),
    );
    const flagged = model.rows
      .filter((r) => r.subspaceMember)
      .map((r) => r.pointId);
    expect(flagged.sort()).toEqual([...subspaceFixture.ids].sort());
    const headers = model.headers.filter((h) => h.inSubspaceSelection);
    expect(headers.map((h) => h.attribute).sort()).toEqual(
      [...subspaceFixture.attributes].sort(),
    );
  });
});

describe("attribute order", () => {
  it("reorders headers, cells, and matrix rows together", () => {
    const reversed = [...skyline.dimensions].reverse();
    const anchor = skyline.skyline.ids[0];
    const model = buildTabularModel(
      skyline,
      details,
      distributions,
      baseState({ attributeOrder: reversed, expandedRowId: anchor }),
    );
    expect(model.headers.map((h) => h.attribute)).toEqual(reversed);
    const row = model.rows.find((r) => r.pointId === anchor)!;
    expect(row.cells.map((c) => c.attribute)).toEqual(reversed);
    expect(row.cells[0].matrix!.attributes).toEqual(reversed);
  });
});
