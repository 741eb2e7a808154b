/** DOM wiring for the playground page. */

import { HttpTransport } from "./api.js";
import { displayNumber, isAlternating } from "./document.js";
import { PRESETS, findPreset } from "./presets.js";
import { drawPolygon, fitView, hitTestVertex } from "./render.js";
import { Session } from "./session.js";
import type { OperationKind, PolygonDocumentObject } from "./types.js";

const CANVAS_SIZE = 640;
const ANIMATION_MS = 250;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const params = new URLSearchParams(window.location.search);
const serviceUrl = params.get("service") ?? "http://127.0.0.1:8765";
const session = new Session(new HttpTransport(serviceUrl));

const canvas = el<HTMLCanvasElement>("canvas");
canvas.width = CANVAS_SIZE;
canvas.height = CANVAS_SIZE;
const ctx = canvas.getContext("2d");
if (!ctx) throw new Error("canvas 2d context unavailable");

const badges = el<HTMLDivElement>("badges");
const errorBox = el<HTMLDivElement>("error");
const historyBox = el<HTMLDivElement>("history");
const undoButton = el<HTMLButtonElement>("undo");
const redoButton = el<HTMLButtonElement>("redo");
const exportButton = el<HTMLButtonElement>("export");
const presetSelect = el<HTMLSelectElement>("preset");
const loadPresetButton = el<HTMLButtonElement>("load-preset");
const generateButton = el<HTMLButtonElement>("generate");
const fileInput = el<HTMLInputElement>("file");
let animating = false;

for (const preset of PRESETS) {
  const option = document.createElement("option");
  option.value = preset.id;
  option.textContent = preset.label;
  presetSelect.appendChild(option);
}

function badge(label: string, on: boolean): string {
  return `<span class="badge ${on ? "on" : "off"}">${label}: ${on ? "yes" : "no"}</span>`;
}

function redraw(override?: Map<number, [number, number]>): void {
  if (!session.loaded) return;
  drawPolygon(ctx!, session.document, CANVAS_SIZE, { override });
}

function refreshPanels(): void {
  errorBox.textContent = session.lastError ?? "";
  undoButton.disabled = !session.canUndo;
  redoButton.disabled = !session.canRedo;
  exportButton.disabled = !session.loaded || session.history.length === 0;
  if (!session.loaded) return;
  const report = session.status;
  if (report) {
    badges.innerHTML = [
      badge("simple", report.simple),
      badge("convex", report.convex),
      badge("strictly convex", report.strictly_convex),
      badge("weakly scalene", report.weakly_scalene),
      badge("alternating", isAlternating(session.document)),
      report.hairpin_indices.length
        ? `<span class="badge off">hairpins: ${report.hairpin_indices.map((i) => `p${i + 1}`).join(", ")}</span>`
        : "",
    ].join(" ");
  }
  historyBox.textContent = session.history
    .map((e, t) => `${t + 1}. ${e.op.kind} p${e.op.vertex + 1}`)
    .join("\n");
  redraw();
}

/** Slide vertex `i` from its pre-op position to the new one, then settle. */
function animateVertex(i: number, before: PolygonDocumentObject): void {
  const after = session.document;
  const view = fitView(after, CANVAS_SIZE);
  const old = before.vertices[i];
  const now = after.vertices[i];
  if (!old || !now) {
    redraw();
    return;
  }
  const from = view.toScreen(displayNumber(old[0]), displayNumber(old[1]));
  const to = view.toScreen(displayNumber(now[0]), displayNumber(now[1]));
  const start = performance.now();
  animating = true;

  function frame(ts: number): void {
    const t = Math.min((ts - start) / ANIMATION_MS, 1);
    const eased = t * (2 - t);
    const pos: [number, number] = [
      from[0] + (to[0] - from[0]) * eased,
      from[1] + (to[1] - from[1]) * eased,
    ];
    redraw(new Map([[i, pos]]));
    if (t < 1) {
      requestAnimationFrame(frame);
    } else {
      animating = false;
      redraw();
    }
  }
  requestAnimationFrame(frame);
}

canvas.addEventListener("click", (event) => {
  if (!session.loaded || animating) return;
  const rect = canvas.getBoundingClientRect();
  const i = hitTestVertex(session.document, CANVAS_SIZE,
                          event.clientX - rect.left, event.clientY - rect.top);
  if (i === null) return;
  const before = session.document;
  void session.clickVertex(i).then((ok) => {
    refreshPanels();
    if (ok) animateVertex(i, before);
  });
});

for (const kind of ["pop", "popturn"] as OperationKind[]) {
  el<HTMLInputElement>(`mode-${kind}`).addEventListener("change", () => {
    session.mode = kind;
  });
}

loadPresetButton.addEventListener("click", () => {
  const preset = findPreset(presetSelect.value);
  if (!preset) return;
  const load = preset.kind === "generator"
    ? session.loadGenerated(preset.x, preset.y, preset.sigma)
    : session.loadDocumentText(preset.doc);
  void load.then(refreshPanels);
});

generateButton.addEventListener("click", () => {
  void session.loadGenerated(
    el<HTMLInputElement>("gen-x").value,
    el<HTMLInputElement>("gen-y").value,
    el<HTMLInputElement>("gen-sigma").value,
  ).then(refreshPanels);
});

fileInput.addEventListener("change", () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  void file.text().then((text) =>
    session.loadDocumentText(text).then(refreshPanels));
});

undoButton.addEventListener("click", () => void session.undo().then(refreshPanels));
redoButton.addEventListener("click", () => void session.redo().then(refreshPanels));

exportButton.addEventListener("click", () => {
  const blob = new Blob([session.exportBundle()], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = "popkit-session.json";
  link.click();
  URL.revokeObjectURL(link.href);
});

refreshPanels();
