/** Projection view painter: glyph per skyline point, pan/zoom, hover raise,
 * double-click focus, click-to-compare.
 */

import type { GlyphModel, ProjectionModel } from "../model/projection.js";
import { arcPath, FOCUS_COLORS, orange, svgElement, clear } from "./svg.js";

export interface ProjectionHandlers {
  onSelect(pointId: string): void;
  onFocusToggle(pointId: string): void;
  onHover(pointId: string | null): void;
}

const SIZE = 640;
const MARGIN = 48;
const GLYPH_R = 16;

export class ProjectionView {
  private root: SVGSVGElement;
  private stage: SVGGElement;
  private zoom = 1;
  private panX = 0;
  private panY = 0;

  constructor(
    private container: HTMLElement,
    private handlers: ProjectionHandlers,
  ) {
    this.root = svgElement("svg", {
      viewBox: `0 0 ${SIZE} ${SIZE}`,
      class: "projection-canvas",
    });
    this.stage = svgElement("g");
    this.root.appendChild(this.stage);
    this.container.appendChild(this.root);

    this.root.addEventListener("wheel", (ev) => {
      ev.preventDefault();
      this.zoom = Math.max(0.4, Math.min(6, this.zoom * (ev.deltaY < 0 ? 1.1 : 0.9)));
      this.applyTransform();
    });
    let dragging = false;
    let last: [number, number] = [0, 0];
    this.root.addEventListener("pointerdown", (ev) => {
      dragging = true;
      last = [ev.clientX, ev.clientY];
    });
    this.root.addEventListener("pointermove", (ev) => {
      if (!dragging) return;
      this.panX += ev.clientX - last[0];
      this.panY += ev.clientY - last[1];
      last = [ev.clientX, ev.clientY];
      this.applyTransform();
    });
    this.root.addEventListener("pointerup", () => {
      dragging = false;
    });
  }

  private applyTransform(): void {
    this.stage.setAttribute(
      "transform",
      `translate(${this.panX} ${this.panY}) scale(${this.zoom})`,
    );
  }

  render(model: ProjectionModel): void {
    clear(this.stage);
    for (const glyph of model.glyphs) {
      this.stage.appendChild(this.renderGlyph(glyph));
    }
  }

  private renderGlyph(glyph: GlyphModel): SVGGElement {
    const cx = MARGIN + glyph.x * (SIZE - 2 * MARGIN);
    const cy = MARGIN + glyph.y * (SIZE - 2 * MARGIN);
    const g = svgElement("g", {
      class: [
        "glyph",
        glyph.focused ? "glyph-focused" : "",
        glyph.highlighted ? "glyph-highlighted" : "",
        glyph.selected ? "glyph-selected" : "",
      ]
        .filter(Boolean)
        .join(" "),
      "data-point": glyph.pointId,
      opacity: glyph.highlighted || glyph.focused ? 1 : 0.75,
    });

    for (const sector of glyph.sectors) {
      const radius = GLYPH_R * (0.35 + 0.65 * sector.value);
      const fill = sector.focusSign
        ? FOCUS_COLORS[sector.focusSign]
        : "hsl(210 15% 62%)";
      g.appendChild(
        svgElement("path", {
          d: arcPath(cx, cy, radius, GLYPH_R * 0.3, sector.startAngle, sector.endAngle),
          fill,
          stroke: "white",
          "stroke-width": 0.5,
        }),
      );
    }
    g.appendChild(
      svgElement("circle", {
        cx,
        cy,
        r: GLYPH_R * 0.3,
        fill: orange(glyph.innerScore),
        stroke: glyph.selected ? "#333" : "none",
        "stroke-width": 1.5,
      }),
    );
    if (glyph.highlighted) {
      g.appendChild(
        svgElement("circle", {
          cx,
          cy,
          r: GLYPH_R + 3,
          fill: "none",
          stroke: "#e66101",
          "stroke-width": 2,
        }),
      );
    }

    g.addEventListener("click", () => this.handlers.onSelect(glyph.pointId));
    g.addEventListener("dblclick", () => this.handlers.onFocusToggle(glyph.pointId));
    g.addEventListener("pointerenter", () => {
      g.setAttribute("opacity", "1");
      g.setAttribute("transform-origin", `${cx} ${cy}`);
      g.setAttribute("transform", "scale(1.5)");
      g.parentNode?.appendChild(g); // raise to foreground
      this.handlers.onHover(glyph.pointId);
    });
    g.addEventListener("pointerleave", () => {
      g.removeAttribute("transform");
      this.handlers.onHover(null);
    });
    return g;
  }
}
