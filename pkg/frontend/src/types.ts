/** Wire types mirroring the JSON bodies of the analytics service. */

export interface AttributeInfo {
  name: string;
  kind: "numeric" | "categorical";
  direction: "max" | "min" | null;
  included: boolean;
}

export interface DescriptorPayload {
  id: string;
  name: string;
  csvPath: string;
  schemaPath: string;
  rowCount: number;
  attrCount: number;
  snapshotHash: string;
}

export interface SkylinePayload {
  snapshotHash: string;
  pointCount: number;
  attributes: AttributeInfo[];
  dimensions: string[];
  skyline: {
    ids: string[];
    dominatingScore: Record<string, number>;
    dominatorsOf: Record<string, string[]>;
  };
}

export interface RefinePayload {
  datasetId: string;
  snapshotHash: string;
  pointCount: number;
  skylineSize: number;
  ids: string[];
  dominatingScore: Record<string, number>;
}

export interface DiffBlock {
  anchorId: string;
  skylineIds: string[];
  attributes: string[];
  /** delta[k][l]: standardized difference of point k minus the anchor at attribute l */
  delta: number[][];
  /** summary[j][k]: anchor-minus-k summed over every attribute except j */
  summary: number[][];
  /** ranks[l][k]: competition rank of point k at attribute l (1 = best) */
  ranks: number[][];
}

export interface DetailPayload {
  snapshotHash: string;
  pointId: string;
  label: string;
  rawValues: Record<string, number | string>;
  rankings: Record<string, number>;
  diff: DiffBlock;
  decisive: { pointId: string; minimal: string[][] };
}

export interface CompareCell {
  members: string[];
  pointIds: string[];
  vectors: number[][];
}

export interface ComparePayload {
  snapshotHash: string;
  selected: string[];
  partition: {
    cells: CompareCell[];
    unionSize: number;
    perPointScore: Record<string, number>;
  };
  radar: Record<
    string,
    {
      values: Record<string, number>;
      rankings: Record<string, number>;
      dominatingScore: number;
    }
  >;
  dimensions: string[];
}

export type FocusSign = "higher" | "equal" | "lower";

export interface ProjectionPayload {
  snapshotHash: string;
  config: {
    perplexity: number;
    iterations: number;
    learningRate: number;
    earlyExaggeration: number;
    exaggerationIters: number;
    seed: number;
  };
  embedding: {
    coords: Record<string, number[]>;
    finalKLDivergence: number;
  };
  glyphs: {
    attributes: string[];
    sectorValues: Record<string, number[]>;
    innerScore: Record<string, number>;
    focusId: string | null;
    focusDiffs: Record<string, FocusSign[]> | null;
  };
}

export interface DistributionPayload {
  snapshotHash: string;
  attribute: string;
  bins: number;
  edges: number[];
  counts: number[];
  skylineTicks: number[];
}

export interface SearchPayload {
  query: string;
  kind: "skyline" | "dominated" | "not_found";
  pointId: string | null;
  dominators: string[];
}

export interface SubspacePayload {
  snapshotHash: string;
  attributes: string[];
  ids: string[];
}

export interface ApiErrorPayload {
  code: string;
  message: string;
  location?: Record<string, unknown>;
}

export interface NumericPredicateSpec {
  attribute: string;
  op: "gte" | "lte" | "between";
  lo?: number;
  hi?: number;
}

export interface CategoricalPredicateSpec {
  attribute: string;
  op: "equals" | "not-equals" | "in" | "not-in";
  tokens: string[];
}

export interface QueryConfigBody {
  excludedAttributes: string[];
  numericPredicates: NumericPredicateSpec[];
  categoricalPredicates: CategoricalPredicateSpec[];
  excludedPointIds: string[];
}
