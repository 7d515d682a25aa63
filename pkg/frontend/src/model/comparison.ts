/** Render model for the comparison view.
 *
 * Radar charts sit on a circle at uniform angles; one domination glyph per
 * combination of two or more selected points (2^k - 1 - k glyphs) summarizes
 * the domination relations. Glyph numbers are regroupings of the partition
 * cells the API delivers; nothing is recomputed.
 */

import type { ComparePayload } from "../types.js";

export interface RadarAxis {
  attribute: string;
  value: number;
  /** value scaled into [0, 1] across the selected points */
  scaled: number;
  rank: number;
}

export interface RadarModel {
  pointId: string;
  colorIndex: number;
  x: number;
  y: number;
  axes: RadarAxis[];
  dominatingScore: number;
}

export interface PieSlice {
  pointId: string;
  score: number;
  fraction: number;
}

export interface ExclusiveArc {
  pointId: string;
  count: number;
  /** share of the glyph's union; an empty exclusive cell yields length 0 */
  fraction: number;
  pointIds: string[];
  vectors: number[][];
}

export interface DominationGlyphModel {
  members: string[];
  unionSize: number;
  /** radius scaled by union size against the largest glyph, in (0, 1] */
  radius: number;
  pie: PieSlice[];
  arcs: ExclusiveArc[];
  x: number;
  y: number;
}

export interface ComparisonModel {
  radars: RadarModel[];
  glyphs: DominationGlyphModel[];
  /** dataset dimension order: exclusive-point vectors are indexed by it */
  dimensions: string[];
}

/** Deterministic layout PRNG (the view must be snapshot-stable). */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const LAYOUT_SEED = 42;
const LAYOUT_ITERATIONS = 60;

export function buildComparisonModel(
  payload: ComparePayload,
  attributeOrder: string[],
): ComparisonModel {
  const selected = payload.selected;
  const k = selected.length;

  const radars: RadarModel[] = selected.map((pointId, i) => {
    const angle = (2 * Math.PI * i) / k - Math.PI / 2;
    const info = payload.radar[pointId];
    return {
      pointId,
      colorIndex: i,
      x: Math.cos(angle),
      y: Math.sin(angle),
      axes: attributeOrder.map((attribute) => ({
        attribute,
        value: info.values[attribute],
        scaled: scaleAcrossSelected(payload, attribute, info.values[attribute]),
        rank: info.rankings[attribute],
      })),
      dominatingScore: info.dominatingScore,
    };
  });

  const glyphs = buildGlyphs(payload, radars);
  placeGlyphs(glyphs, radars);
  return { radars, glyphs, dimensions: [...payload.dimensions] };
}

function scaleAcrossSelected(
  payload: ComparePayload,
  attribute: string,
  value: number,
): number {
  const values = payload.selected.map((id) => payload.radar[id].values[attribute]);
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  return hi > lo ? (value - lo) / (hi - lo) : 0.5;
}

function buildGlyphs(
  payload: ComparePayload,
  radars: RadarModel[],
): DominationGlyphModel[] {
  const selected = payload.selected;
  const k = selected.length;
  const cells = payload.partition.cells;

  const subsets: string[][] = [];
  for (let bits = 1; bits < 1 << k; bits++) {
    const members = selected.filter((_, i) => bits & (1 << i));
    if (members.length >= 2) subsets.push(members);
  }
  subsets.sort((a, b) => a.length - b.length);

  const glyphs = subsets.map((members) => {
    const memberSet = new Set(members);
    let unionSize = 0;
    const exclusive = new Map<string, { ids: string[]; vectors: number[][] }>(
      members.map((m) => [m, { ids: [], vectors: [] }]),
    );
    for (const cell of cells) {
      const inT = cell.members.filter((m) => memberSet.has(m));
      if (inT.length === 0) continue;
      unionSize += cell.pointIds.length;
      if (inT.length === 1) {
        const bucket = exclusive.get(inT[0])!;
        bucket.ids.push(...cell.pointIds);
        bucket.vectors.push(...cell.vectors);
      }
    }
    const totalScore = members.reduce(
      (sum, m) => sum + payload.partition.perPointScore[m],
      0,
    );
    return {
      members,
      unionSize,
      radius: 0, // filled below once the maximum union is known
      pie: members.map((m) => ({
        pointId: m,
        score: payload.partition.perPointScore[m],
        fraction:
          totalScore > 0 ? payload.partition.perPointScore[m] / totalScore : 0,
      })),
      arcs: members.map((m) => {
        const bucket = exclusive.get(m)!;
        return {
          pointId: m,
          count: bucket.ids.length,
          fraction: unionSize > 0 ? bucket.ids.length / unionSize : 0,
          pointIds: bucket.ids,
          vectors: bucket.vectors,
        };
      }),
      x: 0,
      y: 0,
    };
  });

  const maxUnion = Math.max(...glyphs.map((g) => g.unionSize), 1);
  for (const g of glyphs) {
    g.radius = g.unionSize > 0 ? g.unionSize / maxUnion : 0.08;
  }
  void radars;
  return glyphs;
}

/** Seeded force layout with a fixed iteration budget: glyphs pull toward the
 * centroid of their linked radars and push each other apart. */
function placeGlyphs(glyphs: DominationGlyphModel[], radars: RadarModel[]): void {
  const pos = new Map(radars.map((r) => [r.pointId, { x: r.x, y: r.y }]));
  const rand = mulberry32(LAYOUT_SEED);
  for (const g of glyphs) {
    const cx =
      g.members.reduce((s, m) => s + pos.get(m)!.x, 0) / g.members.length;
    const cy =
      g.members.reduce((s, m) => s + pos.get(m)!.y, 0) / g.members.length;
    g.x = cx * 0.55 + (rand() - 0.5) * 0.05;
    g.y = cy * 0.55 + (rand() - 0.5) * 0.05;
  }
  for (let it = 0; it < LAYOUT_ITERATIONS; it++) {
    for (let i = 0; i < glyphs.length; i++) {
      let fx = 0;
      let fy = 0;
      const a = glyphs[i];
      for (let j = 0; j < glyphs.length; j++) {
        if (i === j) continue;
        const b = glyphs[j];
        const dx = a.x - b.x;
        const dy = a.y - b.y;
        const d2 = Math.max(dx * dx + dy * dy, 1e-4);
        const push = 0.004 / d2;
        fx += dx * push;
        fy += dy * push;
      }
      const cx =
        a.members.reduce((s, m) => s + pos.get(m)!.x, 0) / a.members.length;
      const cy =
        a.members.reduce((s, m) => s + pos.get(m)!.y, 0) / a.members.length;
      fx += (cx * 0.55 - a.x) * 0.1;
      fy += (cy * 0.55 - a.y) * 0.1;
      a.x += fx;
      a.y += fy;
    }
  }
}

/** 2^k - 1 - k: every combination of at least two selected points. */
export function expectedGlyphCount(k: number): number {
  return (1 << k) - 1 - k;
}
