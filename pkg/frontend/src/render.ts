/** Canvas rendering and vertex hit-testing. Decimal conversion is display
 * only; the session's rational strings stay the source of truth. */

import { displayNumber } from "./document.js";
import type { PolygonDocumentObject } from "./types.js";

export interface ViewMapping {
  toScreen(x: number, y: number): [number, number];
}

export function fitView(doc: PolygonDocumentObject, size: number): ViewMapping {
  const xs = doc.vertices.map((v) => displayNumber(v[0]));
  const ys = doc.vertices.map((v) => displayNumber(v[1]));
  xs.push(0);
  ys.push(0); // keep the axes in frame
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const span = Math.max(maxX - minX, maxY - minY) || 1;
  const margin = 0.1 * span;
  const scale = size / (span + 2 * margin);
  const cx = (minX + maxX) / 2;
  const cy = (minY + maxY) / 2;
  return {
    toScreen(x: number, y: number): [number, number] {
      return [(x - cx) * scale + size / 2, size / 2 - (y - cy) * scale];
    },
  };
}

export interface DrawOptions {
  /** Vertex index -> displaced screen position (for the pop animation). */
  override?: Map<number, [number, number]>;
  highlight?: number | null;
}

export function drawPolygon(ctx: CanvasRenderingContext2D,
                            doc: PolygonDocumentObject,
                            size: number,
                            options: DrawOptions = {}): void {
  const view = fitView(doc, size);
  const screen = doc.vertices.map((v, i) => {
    const moved = options.override?.get(i);
    return moved ?? view.toScreen(displayNumber(v[0]), displayNumber(v[1]));
  });

  ctx.clearRect(0, 0, size, size);
  ctx.fillStyle = "#ffffff";
  ctx.fillRect(0, 0, size, size);

  ctx.strokeStyle = "#cccccc";
  ctx.lineWidth = 1;
  const [ox, oy] = view.toScreen(0, 0);
  ctx.beginPath();
  ctx.moveTo(0, oy);
  ctx.lineTo(size, oy);
  ctx.moveTo(ox, 0);
  ctx.lineTo(ox, size);
  ctx.stroke();

  ctx.strokeStyle = "#1a1a1a";
  ctx.lineWidth = 2;
  ctx.beginPath();
  screen.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)));
  ctx.closePath();
  ctx.stroke();

  ctx.font = "13px monospace";
  screen.forEach(([x, y], i) => {
    ctx.fillStyle = i === options.highlight ? "#d62718" : "#1a56c4";
    ctx.beginPath();
    ctx.arc(x, y, 4, 0, Math.PI * 2);
    ctx.fill();
    ctx.fillStyle = "#333333";
    ctx.fillText(`p${i + 1}`, x + 7, y - 7); // 1-based labels, figure style
  });
}

/** Nearest vertex within `radius` px of the click, or null. */
export function hitTestVertex(doc: PolygonDocumentObject, size: number,
                              px: number, py: number, radius = 12): number | null {
  const view = fitView(doc, size);
  let best: number | null = null;
  let bestDist = radius * radius;
  doc.vertices.forEach((v, i) => {
    const [x, y] = view.toScreen(displayNumber(v[0]), displayNumber(v[1]));
    const d = (x - px) * (x - px) + (y - py) * (y - py);
    if (d <= bestDist) {
      best = i;
      bestDist = d;
    }
  });
  return best;
}
