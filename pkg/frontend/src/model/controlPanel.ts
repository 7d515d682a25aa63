/** Control panel model: attribute toggles, predicate rows, excluded points,
 * and the QueryConfig body a submit posts to /refine.
 */

import type {
  AttributeInfo,
  CategoricalPredicateSpec,
  NumericPredicateSpec,
  QueryConfigBody,
} from "../types.js";

export interface PanelAttribute {
  name: string;
  kind: "numeric" | "categorical";
  direction: "max" | "min" | null;
  excluded: boolean;
}

export interface ControlPanelState {
  attributes: PanelAttribute[];
  numericPredicates: NumericPredicateSpec[];
  categoricalPredicates: CategoricalPredicateSpec[];
  excludedPointIds: string[];
}

export function initPanel(attributes: AttributeInfo[]): ControlPanelState {
  return {
    attributes: attributes.map((a) => ({
      name: a.name,
      kind: a.kind,
      direction: a.direction,
      excluded: false,
    })),
    numericPredicates: [],
    categoricalPredicates: [],
    excludedPointIds: [],
  };
}

export function toggleExclusion(
  panel: ControlPanelState,
  name: string,
): ControlPanelState {
  return {
    ...panel,
    attributes: panel.attributes.map((a) =>
      a.name === name ? { ...a, excluded: !a.excluded } : a,
    ),
  };
}

/** Validation mirrors the service: at least one numeric attribute must stay. */
export function panelProblems(panel: ControlPanelState): string[] {
  const problems: string[] = [];
  const numericLeft = panel.attributes.filter(
    (a) => a.kind === "numeric" && !a.excluded,
  );
  if (numericLeft.length === 0) {
    problems.push("at least one numeric attribute must remain included");
  }
  for (const p of panel.numericPredicates) {
    if (p.op === "between" && p.lo !== undefined && p.hi !== undefined && p.lo > p.hi) {
      problems.push(`predicate on ${p.attribute}: lo exceeds hi`);
    }
    if (p.op === "gte" && p.lo === undefined) {
      problems.push(`predicate on ${p.attribute}: missing bound`);
    }
    if (p.op === "lte" && p.hi === undefined) {
      problems.push(`predicate on ${p.attribute}: missing bound`);
    }
  }
  return problems;
}

export function buildRefineBody(panel: ControlPanelState): QueryConfigBody {
  return {
    excludedAttributes: panel.attributes
      .filter((a) => a.excluded)
      .map((a) => a.name),
    numericPredicates: panel.numericPredicates,
    categoricalPredicates: panel.categoricalPredicates,
    excludedPointIds: [...panel.excludedPointIds],
  };
}
