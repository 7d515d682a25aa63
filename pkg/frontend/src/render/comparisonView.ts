/** Comparison view painter: radar charts on a circle, domination glyphs in
 * the middle, hover pop-ups with the exclusively dominated points as thin
 * gray lines.
 */

import type {
  ComparisonModel,
  DominationGlyphModel,
  RadarModel,
} from "../model/comparison.js";
import { arcPath, CATEGORICAL, clear, svgElement } from "./svg.js";

const SIZE = 520;
const CENTER = SIZE / 2;
const RING = SIZE * 0.36;
const RADAR_R = 54;
const GLYPH_MAX_R = 34;
// enlarged minimum so thin sectors stay clickable
const MIN_SECTOR_FRACTION = 0.04;

export class ComparisonView {
  private root: SVGSVGElement;
  private popup: SVGGElement;

  constructor(container: HTMLElement) {
    this.root = svgElement("svg", {
      viewBox: `0 0 ${SIZE} ${SIZE}`,
      class: "comparison-canvas",
    });
    this.popup = svgElement("g", { class: "comparison-popup" });
    container.appendChild(this.root);
  }

  render(model: ComparisonModel, attributeOrder: string[]): void {
    clear(this.root);
    for (const glyph of model.glyphs) {
      this.root.appendChild(this.renderGlyph(glyph, model, attributeOrder));
    }
    for (const radar of model.radars) {
      this.root.appendChild(
        this.renderRadar(radar, CENTER + radar.x * RING, CENTER + radar.y * RING),
      );
    }
    this.root.appendChild(this.popup);
  }

  private renderRadar(radar: RadarModel, cx: number, cy: number): SVGGElement {
    const g = svgElement("g", { class: "radar", "data-point": radar.pointId });
    const m = radar.axes.length;
    const angle = (i: number) => (2 * Math.PI * i) / m - Math.PI / 2;
    for (let i = 0; i < m; i++) {
      g.appendChild(
        svgElement("line", {
          x1: cx,
          y1: cy,
          x2: cx + RADAR_R * Math.cos(angle(i)),
          y2: cy + RADAR_R * Math.sin(angle(i)),
          stroke: "#ddd",
        }),
      );
    }
    const points = radar.axes
      .map((axis, i) => {
        const r = RADAR_R * (0.15 + 0.85 * axis.scaled);
        return `${cx + r * Math.cos(angle(i))},${cy + r * Math.sin(angle(i))}`;
      })
      .join(" ");
    const color = CATEGORICAL[radar.colorIndex % CATEGORICAL.length];
    g.appendChild(
      svgElement("polygon", {
        points,
        fill: `${color}33`,
        stroke: color,
        "stroke-width": 2,
      }),
    );
    // ranking circles on the axes
    radar.axes.forEach((axis, i) => {
      const r = RADAR_R * (0.15 + 0.85 * axis.scaled);
      g.appendChild(
        svgElement("circle", {
          cx: cx + r * Math.cos(angle(i)),
          cy: cy + r * Math.sin(angle(i)),
          r: 2.5,
          fill: color,
          "data-rank": axis.rank,
        }),
      );
    });
    // inner circle encodes the dominating score
    g.appendChild(
      svgElement("circle", {
        cx,
        cy,
        r: 4 + Math.min(10, Math.sqrt(radar.dominatingScore)),
        fill: "hsl(215 65% 60% / 0.6)",
        class: "radar-score",
      }),
    );
    const label = svgElement("text", {
      x: cx,
      y: cy - RADAR_R - 6,
      "text-anchor": "middle",
      class: "radar-label",
    });
    label.textContent = radar.pointId;
    g.appendChild(label);
    return g;
  }

  private renderGlyph(
    glyph: DominationGlyphModel,
    model: ComparisonModel,
    attributeOrder: string[],
  ): SVGGElement {
    const cx = CENTER + glyph.x * RING;
    const cy = CENTER + glyph.y * RING;
    const R = GLYPH_MAX_R * (0.35 + 0.65 * glyph.radius);
    const g = svgElement("g", {
      class: "domination-glyph",
      "data-members": glyph.members.join("+"),
    });

    for (const radar of model.radars) {
      if (!glyph.members.includes(radar.pointId)) continue;
      g.appendChild(
        svgElement("line", {
          x1: cx,
          y1: cy,
          x2: CENTER + radar.x * RING,
          y2: CENTER + radar.y * RING,
          stroke: "#ccc",
          "stroke-width": 1,
          class: "glyph-link",
        }),
      );
    }

    const colorOf = (pid: string) =>
      CATEGORICAL[model.radars.findIndex((r) => r.pointId === pid) % CATEGORICAL.length];

    // inner pie: dominating scores of the linked points
    let angle = -Math.PI / 2;
    for (const slice of glyph.pie) {
      const fraction = Math.max(slice.fraction, MIN_SECTOR_FRACTION);
      const end = angle + 2 * Math.PI * fraction;
      const path = svgElement("path", {
        d: arcPath(cx, cy, R * 0.66, 0.5, angle, end),
        fill: colorOf(slice.pointId),
        class: "pie-slice",
        "data-point": slice.pointId,
      });
      path.addEventListener("pointerenter", () =>
        this.showPopup(glyph, slice.pointId, model, attributeOrder),
      );
      path.addEventListener("pointerleave", () => clear(this.popup));
      g.appendChild(path);
      angle = end;
    }

    // outer arcs: exclusive proportions; empty cells draw zero length
    glyph.arcs.forEach((arc, i) => {
      const slot = (2 * Math.PI) / glyph.arcs.length;
      const start = -Math.PI / 2 + i * slot;
      const sweep = slot * arc.fraction;
      const path = svgElement("path", {
        d:
          sweep > 0
            ? arcPath(cx, cy, R, R * 0.78, start, start + sweep)
            : "",
        fill: colorOf(arc.pointId),
        class: "exclusive-arc",
        "data-point": arc.pointId,
        "data-count": arc.count,
      });
      if (sweep > 0) {
        path.addEventListener("pointerenter", () =>
          this.showPopup(glyph, arc.pointId, model, attributeOrder),
        );
        path.addEventListener("pointerleave", () => clear(this.popup));
      }
      g.appendChild(path);
    });
    return g;
  }

  /** Pop-up radar: thick colored lines for the linked skyline points, thin
   * gray lines for the points exclusively dominated by the hovered one. */
  private showPopup(
    glyph: DominationGlyphModel,
    pointId: string,
    model: ComparisonModel,
    attributeOrder: string[],
  ): void {
    clear(this.popup);
    const arc = glyph.arcs.find((a) => a.pointId === pointId);
    if (!arc) return;
    const cx = CENTER;
    const cy = CENTER;
    const m = attributeOrder.length;
    const angle = (i: number) => (2 * Math.PI * i) / m - Math.PI / 2;
    const bg = svgElement("circle", {
      cx,
      cy,
      r: RADAR_R + 14,
      fill: "white",
      stroke: "#bbb",
    });
    this.popup.appendChild(bg);

    // vectors arrive in dataset dimension order; axes follow attributeOrder
    const dimIndex = attributeOrder.map((attr) => model.dimensions.indexOf(attr));
    const axisValue = (radar: (typeof model.radars)[number], i: number) =>
      radar.axes.find((a) => a.attribute === attributeOrder[i])!.value;
    const bounds = attributeOrder.map((_, i) => {
      const all = [
        ...model.radars
          .filter((r) => glyph.members.includes(r.pointId))
          .map((r) => axisValue(r, i)),
        ...arc.vectors.map((v) => v[dimIndex[i]]),
      ];
      const lo = Math.min(...all);
      const hi = Math.max(...all);
      return hi > lo ? ([lo, hi] as const) : ([lo - 1, hi + 1] as const);
    });
    const toPoint = (value: number, i: number) => {
      const [lo, hi] = bounds[i];
      const r = RADAR_R * (0.15 + 0.85 * ((value - lo) / (hi - lo)));
      return `${cx + r * Math.cos(angle(i))},${cy + r * Math.sin(angle(i))}`;
    };
    for (const vector of arc.vectors) {
      this.popup.appendChild(
        svgElement("polygon", {
          points: attributeOrder
            .map((_, i) => toPoint(vector[dimIndex[i]], i))
            .join(" "),
          fill: "none",
          stroke: "#aaa",
          "stroke-width": 0.75,
          class: "dominated-line",
        }),
      );
    }
    for (const radar of model.radars) {
      if (!glyph.members.includes(radar.pointId)) continue;
      this.popup.appendChild(
        svgElement("polygon", {
          points: attributeOrder
            .map((_, i) => toPoint(axisValue(radar, i), i))
            .join(" "),
          fill: "none",
          stroke: CATEGORICAL[radar.colorIndex % CATEGORICAL.length],
          "stroke-width": 2.5,
        }),
      );
    }
  }
}
