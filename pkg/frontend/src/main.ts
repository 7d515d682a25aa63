/** Application wiring: fetch payloads, build models, paint views, and route
 * interactions through the shared store so all views stay coordinated.
 * Responses arriving for a superseded snapshot hash are discarded.
 */

import { ApiError, Client } from "./api.js";
import { initPanel } from "./model/controlPanel.js";
import { buildComparisonModel } from "./model/comparison.js";
import { buildProjectionModel } from "./model/projection.js";
import { buildTabularModel } from "./model/tabular.js";
import { ComparisonView } from "./render/comparisonView.js";
import { ControlPanelView } from "./render/controlPanelView.js";
import { ProjectionView } from "./render/projectionView.js";
import { TabularView } from "./render/tabularView.js";
import { Store } from "./state.js";
import type {
  DetailPayload,
  DistributionPayload,
  ProjectionPayload,
  SkylinePayload,
} from "./types.js";

const client = new Client("");

interface SnapshotData {
  hash: string;
  skyline: SkylinePayload;
  details: Record<string, DetailPayload>;
  distributions: Record<string, DistributionPayload>;
  projection: ProjectionPayload;
}

async function loadSnapshot(hash: string, seed: number, focus: string | null): Promise<SnapshotData> {
  const skyline = await client.skyline(hash);
  const [projection, detailList, distList] = await Promise.all([
    client.projection(hash, seed, focus),
    Promise.all(skyline.skyline.ids.map((id) => client.detail(hash, id))),
    Promise.all(skyline.dimensions.map((a) => client.distribution(hash, a))),
  ]);
  return {
    hash,
    skyline,
    details: Object.fromEntries(detailList.map((d) => [d.pointId, d])),
    distributions: Object.fromEntries(distList.map((d) => [d.attribute, d])),
    projection,
  };
}

function notice(text: string): void {
  const el = document.getElementById("notice");
  if (el) {
    el.textContent = text;
    setTimeout(() => {
      if (el.textContent === text) el.textContent = "";
    }, 4000);
  }
}

async function start(): Promise<void> {
  const datasets = await client.listDatasets();
  if (!datasets.length) {
    notice("no datasets registered; upload one via POST /datasets");
    return;
  }
  let datasetId = datasets[0].id;
  let data = await loadSnapshot(datasets[0].snapshotHash, 42, null);
  const store = new Store(data.skyline.dimensions);

  const projectionView = new ProjectionView(
    document.getElementById("projection")!,
    {
      onSelect: (id) => {
        const res = store.toggleComparison(id);
        if (!res.ok && res.notice) notice(res.notice);
        document
          .querySelector(`.tabular-row[data-point="${CSS.escape(id)}"]`)
          ?.scrollIntoView({ block: "center", behavior: "smooth" });
      },
      onFocusToggle: async (id) => {
        store.toggleFocus(id);
        const focus = store.get().focusId;
        data.projection = await client.projection(data.hash, 42, focus);
        renderAll();
      },
      onHover: (id) => highlightRow(id),
    },
  );

  const tabularView = new TabularView(document.getElementById("tabular")!, {
    onExpand: (id) =>
      store.update({
        expandedRowId: store.get().expandedRowId === id ? null : id,
      }),
    onBrush: (attribute, range) => {
      const ranges = { ...store.get().brushRanges };
      if (range) ranges[attribute] = range;
      else delete ranges[attribute];
      store.update({ brushRanges: ranges });
    },
    onHeaderClick: async (attribute) => {
      store.toggleSubspaceAttribute(attribute);
      const selection = store.get().selectedSubspace;
      if (selection.length) {
        const res = await client.subspace(data.hash, selection);
        store.update({ subspaceIds: res.ids });
      } else {
        store.update({ subspaceIds: [] });
      }
    },
    onRowHover: (id) => highlightGlyph(id),
    onSearch: async (query) => {
      if (!query) return;
      try {
        const res = await client.search(data.hash, query);
        if (res.kind === "not_found") notice(`no point matches "${query}"`);
        else if (res.kind === "skyline") highlightRows([res.pointId!]);
        else {
          notice(`dominated by: ${res.dominators.join(", ")}`);
          highlightRows(res.dominators);
        }
      } catch (err) {
        if (err instanceof ApiError) notice(err.payload.message);
      }
    },
  });

  const comparisonView = new ComparisonView(
    document.getElementById("comparison")!,
  );

  const panelView = new ControlPanelView(
    document.getElementById("control-panel")!,
    initPanel(data.skyline.attributes),
    [...store.get().attributeOrder],
    {
      onRefine: async (body) => {
        try {
          const refined = await client.refine(datasetId, body);
          data = await loadSnapshot(refined.snapshotHash, 42, null);
          store.update({
            attributeOrder: data.skyline.dimensions,
            focusId: null,
            expandedRowId: null,
            brushRanges: {},
            selectedSubspace: [],
            subspaceIds: [],
            comparisonSelection: [],
          });
        } catch (err) {
          if (err instanceof ApiError) notice(err.payload.message);
        }
      },
      onAttributeOrder: (order) => store.setAttributeOrder(order),
    },
  );

  function highlightRow(id: string | null): void {
    highlightRows(id ? [id] : []);
  }

  function highlightRows(ids: string[]): void {
    document
      .querySelectorAll(".tabular-row.row-highlighted")
      .forEach((el) => el.classList.remove("row-highlighted"));
    for (const id of ids) {
      document
        .querySelector(`.tabular-row[data-point="${CSS.escape(id)}"]`)
        ?.classList.add("row-highlighted");
    }
  }

  function highlightGlyph(id: string | null): void {
    document
      .querySelectorAll(".glyph.glyph-hovered")
      .forEach((el) => el.classList.remove("glyph-hovered"));
    if (id) {
      document
        .querySelector(`.glyph[data-point="${CSS.escape(id)}"]`)
        ?.classList.add("glyph-hovered");
    }
  }

  async function renderComparison(): Promise<void> {
    const selection = store.get().comparisonSelection;
    const host = document.getElementById("comparison")!;
    if (selection.length < 2) {
      host.querySelector(".comparison-hint")?.remove();
      const hint = document.createElement("p");
      hint.className = "comparison-hint";
      hint.textContent = "pick 2-4 skyline points to compare";
      host.appendChild(hint);
      comparisonView.render(
        { radars: [], glyphs: [], dimensions: [] },
        store.get().attributeOrder,
      );
      return;
    }
    host.querySelector(".comparison-hint")?.remove();
    try {
      const payload = await client.compare(data.hash, selection);
      comparisonView.render(
        buildComparisonModel(payload, store.get().attributeOrder),
        store.get().attributeOrder,
      );
    } catch (err) {
      if (err instanceof ApiError) notice(err.payload.message);
    }
  }

  function renderAll(): void {
    const state = store.get();
    projectionView.render(
      buildProjectionModel(data.projection, {
        attributeOrder: state.attributeOrder,
        focusId: state.focusId,
        subspaceIds: state.subspaceIds,
        comparisonSelection: state.comparisonSelection,
      }),
    );
    tabularView.render(
      buildTabularModel(data.skyline, data.details, data.distributions, {
        attributeOrder: state.attributeOrder,
        expandedRowId: state.expandedRowId,
        brushRanges: state.brushRanges,
        selectedSubspace: state.selectedSubspace,
        subspaceIds: state.subspaceIds,
      }),
    );
    panelView.setAttributeOrder(state.attributeOrder);
    void renderComparison();
  }

  store.subscribe(renderAll);
  renderAll();
}

start().catch((err) => {
  console.error(err);
  notice(err instanceof ApiError ? err.payload.message : String(err));
});
