/** Render model for the tabular view.
 *
 * Every number comes straight from API payloads: bar heights from the detail
 * diff summaries, matrix cells from the delta matrix, ranks from the rank
 * matrix. The view never recomputes analytics; the only client-side logic is
 * the inclusive brush-range check on raw values, which mirrors the engine's
 * brush semantics.
 */

import type { DetailPayload, DistributionPayload, SkylinePayload } from "../types.js";

export interface Bar {
  pointId: string;
  isAnchor: boolean;
  /** anchor-minus-point summary difference excluding this column's attribute */
  summary: number;
  /** bar drawn above the dashed baseline iff the summary is positive */
  above: boolean;
  /** |summary| scaled to the cell's largest magnitude, in [0, 1] */
  height: number;
  rank: number;
  rawValue: number;
}

export interface ExpansionMatrix {
  /** row attributes, in display order */
  attributes: string[];
  /** column point ids, aligned with the cell's non-anchor bars */
  columns: string[];
  /** cells[row][col]: standardized difference of column point minus anchor */
  cells: number[][];
}

export interface BarCell {
  attribute: string;
  bars: Bar[];
  anchorIndex: number;
  matrix: ExpansionMatrix | null;
}

export interface DecisiveLines {
  attributes: string[];
  /** one column per minimal decisive subspace; true marks a member attribute */
  lines: boolean[][];
}

export interface TabularRow {
  pointId: string;
  label: string;
  expanded: boolean;
  grayed: boolean;
  subspaceMember: boolean;
  dominatingScore: number;
  cells: BarCell[];
  decisive: DecisiveLines | null;
}

export interface HeaderModel {
  attribute: string;
  edges: number[];
  counts: number[];
  skylineTicks: number[];
  brushed: boolean;
  range: [number, number] | null;
  inSubspaceSelection: boolean;
}

export interface TabularModel {
  headers: HeaderModel[];
  rows: TabularRow[];
  skylineIds: string[];
}

export interface TabularState {
  attributeOrder: string[];
  expandedRowId: string | null;
  brushRanges: Record<string, [number, number]>;
  selectedSubspace: string[];
  subspaceIds: string[];
}

/** Inclusive range check over every brushed attribute (engine semantics). */
export function passesBrush(
  rawValues: Record<string, number | string>,
  ranges: Record<string, [number, number]>,
): boolean {
  for (const [attribute, [lo, hi]] of Object.entries(ranges)) {
    const value = Number(rawValues[attribute]);
    if (!(lo <= value && value <= hi)) return false;
  }
  return true;
}

export function buildTabularModel(
  skyline: SkylinePayload,
  details: Record<string, DetailPayload>,
  distributions: Record<string, DistributionPayload>,
  state: TabularState,
): TabularModel {
  const skyIds = skyline.skyline.ids;
  const headers: HeaderModel[] = state.attributeOrder.map((attribute) => {
    const dist = distributions[attribute];
    return {
      attribute,
      edges: dist ? dist.edges : [],
      counts: dist ? dist.counts : [],
      skylineTicks: dist ? dist.skylineTicks : [],
      brushed: attribute in state.brushRanges,
      range: state.brushRanges[attribute] ?? null,
      inSubspaceSelection: state.selectedSubspace.includes(attribute),
    };
  });

  const subspaceSet = new Set(state.subspaceIds);
  const rows = skyIds.map((anchor) =>
    buildRow(anchor, skyline, details, state, subspaceSet),
  );
  return { headers, rows, skylineIds: [...skyIds] };
}

function buildRow(
  anchor: string,
  skyline: SkylinePayload,
  details: Record<string, DetailPayload>,
  state: TabularState,
  subspaceSet: Set<string>,
): TabularRow {
  const detail = details[anchor];
  const diff = detail.diff;
  const ids = diff.skylineIds;
  const indexOf = new Map(ids.map((id, i) => [id, i]));
  const expanded = state.expandedRowId === anchor;

  const cells = state.attributeOrder.map((attribute) => {
    const j = diff.attributes.indexOf(attribute);
    // worst-to-best by competition rank; stable tiebreak keeps skyline order
    const order = [...ids].sort(
      (a, b) => diff.ranks[j][indexOf.get(b)!] - diff.ranks[j][indexOf.get(a)!],
    );
    const summaries = order.map((pid) => diff.summary[j][indexOf.get(pid)!]);
    const maxAbs = Math.max(
      ...order.map((pid, i) => (pid === anchor ? 0 : Math.abs(summaries[i]))),
      0,
    );
    const bars: Bar[] = order.map((pid, i) => ({
      pointId: pid,
      isAnchor: pid === anchor,
      summary: summaries[i],
      above: summaries[i] > 0,
      height: maxAbs > 0 ? Math.abs(summaries[i]) / maxAbs : 0,
      rank: diff.ranks[j][indexOf.get(pid)!],
      rawValue: Number(details[pid]?.rawValues[attribute] ?? NaN),
    }));

    let matrix: ExpansionMatrix | null = null;
    if (expanded) {
      const columns = order.filter((pid) => pid !== anchor);
      matrix = {
        attributes: [...state.attributeOrder],
        columns,
        cells: state.attributeOrder.map((rowAttr) => {
          const l = diff.attributes.indexOf(rowAttr);
          return columns.map((pid) => diff.delta[indexOf.get(pid)!][l]);
        }),
      };
    }
    return { attribute, bars, anchorIndex: order.indexOf(anchor), matrix };
  });

  const decisive: DecisiveLines | null = expanded
    ? {
        attributes: [...state.attributeOrder],
        lines: detail.decisive.minimal.map((subspace) =>
          state.attributeOrder.map((attr) => subspace.includes(attr)),
        ),
      }
    : null;

  return {
    pointId: anchor,
    label: detail.label,
    expanded,
    grayed: !passesBrush(detail.rawValues, state.brushRanges),
    subspaceMember: subspaceSet.has(anchor),
    dominatingScore: skyline.skyline.dominatingScore[anchor],
    cells,
    decisive,
  };
}

/** Ids of the rows a brush grays out (display state, no recompute). */
export function grayedRows(model: TabularModel): string[] {
  return model.rows.filter((r) => r.grayed).map((r) => r.pointId);
}
