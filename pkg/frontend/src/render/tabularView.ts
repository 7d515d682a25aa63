/** Tabular view painter: header area plots with brushing, diverging bar
 * cells, expansion matrices with decisive-subspace lines, linking curves,
 * and the search box.
 */

import type { BarCell, HeaderModel, TabularModel, TabularRow } from "../model/tabular.js";
import { clear, diverging, svgElement } from "./svg.js";

export interface TabularHandlers {
  onExpand(pointId: string): void;
  onBrush(attribute: string, range: [number, number] | null): void;
  onHeaderClick(attribute: string): void;
  onRowHover(pointId: string | null): void;
  onSearch(query: string): void;
}

const CELL_W = 120;
const CELL_H = 44;
const HEADER_H = 56;

export class TabularView {
  private table: HTMLDivElement;
  private searchBox: HTMLInputElement;

  constructor(
    container: HTMLElement,
    private handlers: TabularHandlers,
  ) {
    this.searchBox = document.createElement("input");
    this.searchBox.type = "search";
    this.searchBox.placeholder = "search a point…";
    this.searchBox.className = "tabular-search";
    this.searchBox.addEventListener("change", () =>
      this.handlers.onSearch(this.searchBox.value),
    );
    this.table = document.createElement("div");
    this.table.className = "tabular-table";
    container.append(this.searchBox, this.table);
  }

  render(model: TabularModel, highlightId: string | null = null): void {
    clear(this.table);
    this.table.appendChild(this.renderHeaders(model.headers));
    for (const row of model.rows) {
      this.table.appendChild(this.renderRow(row, row.pointId === highlightId));
    }
  }

  private renderHeaders(headers: HeaderModel[]): HTMLDivElement {
    const wrap = document.createElement("div");
    wrap.className = "tabular-headers";
    for (const header of headers) {
      const cell = document.createElement("div");
      cell.className = header.inSubspaceSelection
        ? "tabular-header header-subspace"
        : "tabular-header";
      const title = document.createElement("span");
      title.textContent = header.attribute;
      title.addEventListener("click", () =>
        this.handlers.onHeaderClick(header.attribute),
      );
      cell.appendChild(title);
      cell.appendChild(this.renderAreaPlot(header));
      wrap.appendChild(cell);
    }
    return wrap;
  }

  private renderAreaPlot(header: HeaderModel): SVGSVGElement {
    const svg = svgElement("svg", {
      viewBox: `0 0 ${CELL_W} ${HEADER_H}`,
      class: "header-area",
    });
    const { edges, counts, skylineTicks } = header;
    if (edges.length >= 2 && counts.length) {
      const lo = edges[0];
      const hi = edges[edges.length - 1];
      const spanX = hi > lo ? hi - lo : 1;
      const maxCount = Math.max(...counts, 1);
      const points: string[] = [`0,${HEADER_H}`];
      counts.forEach((count, i) => {
        const x0 = ((edges[i] - lo) / spanX) * CELL_W;
        const x1 = ((edges[i + 1] - lo) / spanX) * CELL_W;
        const y = HEADER_H - (count / maxCount) * (HEADER_H - 8);
        points.push(`${x0},${y}`, `${x1},${y}`);
      });
      points.push(`${CELL_W},${HEADER_H}`);
      svg.appendChild(
        svgElement("polygon", {
          points: points.join(" "),
          fill: "hsl(210 40% 85%)",
        }),
      );
      for (const tick of skylineTicks) {
        const x = ((tick - lo) / spanX) * CELL_W;
        svg.appendChild(
          svgElement("line", {
            x1: x,
            y1: 8,
            x2: x,
            y2: HEADER_H,
            stroke: "#888",
            "stroke-width": 1,
            class: "skyline-tick",
          }),
        );
      }
      if (header.range) {
        const [bLo, bHi] = header.range;
        const x0 = ((bLo - lo) / spanX) * CELL_W;
        const x1 = ((bHi - lo) / spanX) * CELL_W;
        svg.appendChild(
          svgElement("rect", {
            x: x0,
            y: 0,
            width: Math.max(x1 - x0, 0),
            height: HEADER_H,
            class: "brush-region",
            fill: "hsl(28 90% 60% / 0.25)",
          }),
        );
      }
      // drag to brush an acceptable value region
      let startX: number | null = null;
      svg.addEventListener("pointerdown", (ev) => {
        startX = ev.offsetX;
      });
      svg.addEventListener("pointerup", (ev) => {
        if (startX === null) return;
        const [a, b] = [startX, ev.offsetX].sort((p, q) => p - q);
        startX = null;
        if (Math.abs(b - a) < 3) {
          this.handlers.onBrush(header.attribute, null);
          return;
        }
        const toValue = (px: number) => lo + (px / CELL_W) * spanX;
        this.handlers.onBrush(header.attribute, [toValue(a), toValue(b)]);
      });
    }
    return svg;
  }

  private renderRow(row: TabularRow, highlighted: boolean): HTMLDivElement {
    const wrap = document.createElement("div");
    wrap.className = [
      "tabular-row",
      row.grayed ? "row-grayed" : "",
      row.subspaceMember ? "row-subspace" : "",
      highlighted ? "row-highlighted" : "",
    ]
      .filter(Boolean)
      .join(" ");
    wrap.dataset.point = row.pointId;

    const label = document.createElement("div");
    label.className = "row-label";
    label.textContent = row.label;
    label.addEventListener("click", () => this.handlers.onExpand(row.pointId));
    wrap.appendChild(label);

    const cells = document.createElement("div");
    cells.className = "row-cells";
    for (const cell of row.cells) {
      cells.appendChild(this.renderBarCell(cell));
    }
    wrap.appendChild(cells);

    if (row.expanded && row.decisive) {
      const lines = document.createElement("div");
      lines.className = "decisive-lines";
      lines.dataset.count = String(row.decisive.lines.length);
      row.decisive.lines.forEach((line) => {
        const col = document.createElement("div");
        col.className = "decisive-line";
        line.forEach((member) => {
          const mark = document.createElement("span");
          mark.className = member ? "decisive-mark on" : "decisive-mark";
          col.appendChild(mark);
        });
        lines.appendChild(col);
      });
      wrap.appendChild(lines);
    }

    wrap.addEventListener("pointerenter", () =>
      this.handlers.onRowHover(row.pointId),
    );
    wrap.addEventListener("pointerleave", () => this.handlers.onRowHover(null));
    return wrap;
  }

  private renderBarCell(cell: BarCell): HTMLDivElement {
    const div = document.createElement("div");
    div.className = "bar-cell";
    const totalH = cell.matrix ? CELL_H + cell.matrix.attributes.length * 10 : CELL_H;
    const svg = svgElement("svg", {
      viewBox: `0 0 ${CELL_W} ${totalH}`,
      class: "bar-svg",
    });
    const n = cell.bars.length;
    const barW = CELL_W / Math.max(n, 1);
    const base = CELL_H / 2;
    svg.appendChild(
      svgElement("line", {
        x1: 0,
        y1: base,
        x2: CELL_W,
        y2: base,
        stroke: "#999",
        "stroke-dasharray": "3 2",
      }),
    );
    cell.bars.forEach((bar, i) => {
      const h = bar.isAnchor ? base - 4 : bar.height * (base - 6);
      const y = bar.isAnchor ? 4 : bar.above ? base - h : base;
      svg.appendChild(
        svgElement("rect", {
          x: i * barW + 1,
          y,
          width: Math.max(barW - 2, 1),
          height: bar.isAnchor ? CELL_H - 8 : Math.max(h, 0.5),
          fill: bar.isAnchor ? "#8856a7" : "#67a9cf",
          class: bar.isAnchor ? "bar anchor-bar" : "bar",
          "data-point": bar.pointId,
        }),
      );
    });
    if (cell.matrix) {
      cell.matrix.cells.forEach((rowVals, r) => {
        rowVals.forEach((value, c) => {
          // matrix columns sit under their bars; the anchor column is skipped
          const barIdx =
            c >= cell.anchorIndex ? c + 1 : c;
          svg.appendChild(
            svgElement("rect", {
              x: barIdx * barW + 1,
              y: CELL_H + r * 10,
              width: Math.max(barW - 2, 1),
              height: 9,
              fill: diverging(Math.max(-1, Math.min(1, value / 3))),
              class: "matrix-cell",
            }),
          );
        });
      });
    }
    div.appendChild(svg);
    return div;
  }
}
