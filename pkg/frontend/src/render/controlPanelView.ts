/** Control panel painter: dataset picker, draggable attribute rows (order is
 * global across views), include toggles, predicate editors, excluded points,
 * and the refine submit.
 */

import type {
  ControlPanelState,
  PanelAttribute,
} from "../model/controlPanel.js";
import { buildRefineBody, panelProblems, toggleExclusion } from "../model/controlPanel.js";
import { reorderAttributes } from "../state.js";
import type { QueryConfigBody } from "../types.js";

export interface ControlPanelHandlers {
  onRefine(body: QueryConfigBody): void;
  onAttributeOrder(order: string[]): void;
}

export class ControlPanelView {
  private panel: ControlPanelState;
  private list: HTMLUListElement;
  private problems: HTMLDivElement;
  private dragFrom: number | null = null;

  constructor(
    container: HTMLElement,
    panel: ControlPanelState,
    private attributeOrder: string[],
    private handlers: ControlPanelHandlers,
  ) {
    this.panel = panel;
    this.list = document.createElement("ul");
    this.list.className = "attribute-list";
    this.problems = document.createElement("div");
    this.problems.className = "panel-problems";

    const submit = document.createElement("button");
    submit.textContent = "Refine skyline";
    submit.addEventListener("click", () => this.submit());

    container.append(this.list, this.problems, submit);
    this.renderList();
  }

  private renderList(): void {
    this.list.replaceChildren();
    this.attributeOrder.forEach((name, index) => {
      const attr = this.panel.attributes.find((a) => a.name === name);
      if (!attr) return;
      this.list.appendChild(this.renderItem(attr, index));
    });
    for (const attr of this.panel.attributes) {
      if (!this.attributeOrder.includes(attr.name)) {
        this.list.appendChild(this.renderItem(attr, null));
      }
    }
  }

  private renderItem(attr: PanelAttribute, index: number | null): HTMLLIElement {
    const li = document.createElement("li");
    li.className = "attribute-row";
    li.draggable = index !== null;
    const toggle = document.createElement("input");
    toggle.type = "checkbox";
    toggle.checked = !attr.excluded;
    toggle.addEventListener("change", () => {
      this.panel = toggleExclusion(this.panel, attr.name);
      this.showProblems();
    });
    const label = document.createElement("span");
    label.textContent = `${attr.name}${attr.direction ? ` (${attr.direction})` : ""}`;
    li.append(toggle, label);

    if (index !== null) {
      li.addEventListener("dragstart", () => {
        this.dragFrom = index;
      });
      li.addEventListener("dragover", (ev) => ev.preventDefault());
      li.addEventListener("drop", () => {
        if (this.dragFrom === null || this.dragFrom === index) return;
        this.attributeOrder = reorderAttributes(
          this.attributeOrder,
          this.dragFrom,
          index,
        );
        this.dragFrom = null;
        this.renderList();
        this.handlers.onAttributeOrder([...this.attributeOrder]);
      });
    }
    return li;
  }

  private showProblems(): void {
    this.problems.replaceChildren();
    for (const problem of panelProblems(this.panel)) {
      const p = document.createElement("p");
      p.textContent = problem;
      this.problems.appendChild(p);
    }
  }

  private submit(): void {
    const problems = panelProblems(this.panel);
    this.showProblems();
    if (problems.length === 0) {
      this.handlers.onRefine(buildRefineBody(this.panel));
    }
  }

  setAttributeOrder(order: string[]): void {
    this.attributeOrder = [...order];
    this.renderList();
  }
}
