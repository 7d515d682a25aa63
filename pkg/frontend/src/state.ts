/** Shared view state: one source of truth driving all three views.
 *
 * The attribute order is a permutation of the included numeric attributes
 * and is applied to the tabular columns, the glyph sectors, and the radar
 * axes alike. The comparison selection is capped at four points.
 */

export const MAX_COMPARISON = 4;

export interface ViewState {
  attributeOrder: string[];
  focusId: string | null;
  expandedRowId: string | null;
  brushRanges: Record<string, [number, number]>;
  selectedSubspace: string[];
  subspaceIds: string[];
  comparisonSelection: string[];
}

export function initialState(dimensions: string[]): ViewState {
  return {
    attributeOrder: [...dimensions],
    focusId: null,
    expandedRowId: null,
    brushRanges: {},
    selectedSubspace: [],
    subspaceIds: [],
    comparisonSelection: [],
  };
}

export type Listener = (state: ViewState) => void;

export class Store {
  private state: ViewState;
  private listeners: Listener[] = [];

  constructor(dimensions: string[]) {
    this.state = initialState(dimensions);
  }

  get(): ViewState {
    return this.state;
  }

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  update(partial: Partial<ViewState>): void {
    this.state = { ...this.state, ...partial };
    for (const fn of this.listeners) fn(this.state);
  }

  /** Reorder attributes; rejects anything that is not a permutation. */
  setAttributeOrder(order: string[]): void {
    const current = [...this.state.attributeOrder].sort();
    const next = [...order].sort();
    if (
      current.length !== next.length ||
      current.some((name, i) => name !== next[i])
    ) {
      throw new Error(`attribute order must be a permutation, got ${order}`);
    }
    this.update({ attributeOrder: [...order] });
  }

  /** Add or remove a comparison candidate; refuses to grow past the cap. */
  toggleComparison(pointId: string): { ok: boolean; notice?: string } {
    const selection = this.state.comparisonSelection;
    if (selection.includes(pointId)) {
      this.update({
        comparisonSelection: selection.filter((id) => id !== pointId),
      });
      return { ok: true };
    }
    if (selection.length >= MAX_COMPARISON) {
      return {
        ok: false,
        notice: `comparison holds at most ${MAX_COMPARISON} points`,
      };
    }
    this.update({ comparisonSelection: [...selection, pointId] });
    return { ok: true };
  }

  toggleFocus(pointId: string): void {
    this.update({ focusId: this.state.focusId === pointId ? null : pointId });
  }

  toggleSubspaceAttribute(name: string): void {
    const selected = this.state.selectedSubspace;
    this.update({
      selectedSubspace: selected.includes(name)
        ? selected.filter((a) => a !== name)
        : [...selected, name],
      subspaceIds: [],
    });
  }
}

/** Move one attribute within the order (drag handler core). */
export function reorderAttributes(
  order: string[],
  from: number,
  to: number,
): string[] {
  const next = [...order];
  const [moved] = next.splice(from, 1);
  next.splice(to, 0, moved);
  return next;
}
