/** Minimal SVG helpers; no rendering library needed at this scale. */

const SVG_NS = "http://www.w3.org/2000/svg";

export function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

export function clear(node: Element): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

/** Pie/arc sector path between two angles (radians, clockwise from 3 o'clock). */
export function arcPath(
  cx: number,
  cy: number,
  r0: number,
  r1: number,
  a0: number,
  a1: number,
): string {
  const large = a1 - a0 > Math.PI ? 1 : 0;
  const p = (r: number, a: number) =>
    `${cx + r * Math.cos(a)} ${cy + r * Math.sin(a)}`;
  return [
    `M ${p(r0, a0)}`,
    `A ${r0} ${r0} 0 ${large} 1 ${p(r0, a1)}`,
    `L ${p(r1, a1)}`,
    `A ${r1} ${r1} 0 ${large} 0 ${p(r1, a0)}`,
    "Z",
  ].join(" ");
}

/** Sequential orange ramp for dominating scores. */
export function orange(t: number): string {
  const clamped = Math.max(0, Math.min(1, t));
  const light = 94 - clamped * 50; // 94% .. 44%
  return `hsl(28 92% ${light}%)`;
}

/** Diverging red-blue for difference signs: negative red, positive blue. */
export function diverging(t: number): string {
  const clamped = Math.max(-1, Math.min(1, t));
  if (clamped >= 0) return `hsl(215 70% ${90 - clamped * 45}%)`;
  return `hsl(4 72% ${90 + clamped * 45}%)`;
}

export const CATEGORICAL = ["#e66101", "#5e3c99", "#1b7837", "#b2182b"];
export const FOCUS_COLORS = {
  higher: "#2166ac",
  lower: "#b2182b",
  equal: "#bdbdbd",
} as const;
