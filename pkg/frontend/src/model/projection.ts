/** Render model for the projection view: one glyph per skyline point at its
 * embedding coordinate, sectors sized by normalized attribute values, inner
 * circle shaded by the normalized dominating score. In focus mode each
 * foreign sector carries the sign of its difference against the focused
 * point; subspace results and comparison picks are highlight flags.
 */

import type { FocusSign, ProjectionPayload } from "../types.js";

export interface SectorModel {
  attribute: string;
  /** min-max normalized attribute value in [0, 1]; drives sector radius */
  value: number;
  startAngle: number;
  endAngle: number;
  focusSign: FocusSign | null;
}

export interface GlyphModel {
  pointId: string;
  x: number;
  y: number;
  innerScore: number;
  sectors: SectorModel[];
  focused: boolean;
  highlighted: boolean;
  selected: boolean;
}

export interface ProjectionModel {
  glyphs: GlyphModel[];
  focusId: string | null;
}

export interface ProjectionState {
  attributeOrder: string[];
  focusId: string | null;
  subspaceIds: string[];
  comparisonSelection: string[];
}

export function buildProjectionModel(
  payload: ProjectionPayload,
  state: ProjectionState,
): ProjectionModel {
  const ids = Object.keys(payload.embedding.coords);
  const xs = ids.map((id) => payload.embedding.coords[id][0]);
  const ys = ids.map((id) => payload.embedding.coords[id][1]);
  const scaleX = makeScale(Math.min(...xs), Math.max(...xs));
  const scaleY = makeScale(Math.min(...ys), Math.max(...ys));

  const payloadAttrs = payload.glyphs.attributes;
  const sectorIndex = state.attributeOrder.map((a) => payloadAttrs.indexOf(a));
  const span = (2 * Math.PI) / state.attributeOrder.length;

  const subspaceSet = new Set(state.subspaceIds);
  const selectedSet = new Set(state.comparisonSelection);
  const focusDiffs = payload.glyphs.focusDiffs;

  const glyphs = ids.map((pointId) => {
    const [cx, cy] = payload.embedding.coords[pointId];
    const values = payload.glyphs.sectorValues[pointId];
    const diffs = focusDiffs ? focusDiffs[pointId] : null;
    const sectors: SectorModel[] = state.attributeOrder.map((attribute, s) => ({
      attribute,
      value: values[sectorIndex[s]],
      startAngle: s * span - Math.PI / 2,
      endAngle: (s + 1) * span - Math.PI / 2,
      focusSign: diffs ? diffs[sectorIndex[s]] : null,
    }));
    return {
      pointId,
      x: scaleX(cx),
      y: scaleY(cy),
      innerScore: payload.glyphs.innerScore[pointId],
      sectors,
      focused: state.focusId === pointId,
      highlighted: subspaceSet.has(pointId),
      selected: selectedSet.has(pointId),
    };
  });
  return { glyphs, focusId: payload.glyphs.focusId };
}

function makeScale(lo: number, hi: number): (v: number) => number {
  return hi > lo ? (v) => (v - lo) / (hi - lo) : () => 0.5;
}

/** Ids the subspace highlight emphasizes (cross-view consistency check). */
export function highlightedGlyphs(model: ProjectionModel): string[] {
  return model.glyphs.filter((g) => g.highlighted).map((g) => g.pointId);
}
