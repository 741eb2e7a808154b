/**
 * Canonical polygon document handling on the client.
 *
 * The client never does geometry: rational coordinates are kept as the exact
 * strings the service sent, and the canonical text form below reproduces the
 * service/CLI bytes exactly (same key order, compact separators, trailing
 * newline). Decimal conversion exists for canvas display only.
 */

import type { PolygonDocumentObject } from "./types.js";

/** Rebuild a parsed document with the canonical key order, validating shape. */
export function canonicalizeDocument(value: unknown): PolygonDocumentObject {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    throw new Error("document must be a JSON object");
  }
  const obj = value as Record<string, unknown>;
  for (const key of Object.keys(obj)) {
    if (key !== "format_version" && key !== "vertices" && key !== "metadata") {
      throw new Error(`unknown document key: ${key}`);
    }
  }
  const version = obj.format_version ?? "1";
  if (version !== "1") {
    throw new Error(`unsupported format_version: ${String(version)}`);
  }
  const rawVertices = obj.vertices;
  if (!Array.isArray(rawVertices) || rawVertices.length < 3) {
    throw new Error("vertices must be a list of at least 3 pairs");
  }
  const vertices: [string, string][] = rawVertices.map((entry, i) => {
    if (!Array.isArray(entry) || entry.length !== 2
        || typeof entry[0] !== "string" || typeof entry[1] !== "string") {
      throw new Error(`vertices[${i}] must be a pair of rational strings`);
    }
    return [entry[0], entry[1]];
  });
  const doc: PolygonDocumentObject = { format_version: "1", vertices };
  if (obj.metadata !== undefined) {
    const raw = obj.metadata;
    if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
      throw new Error("metadata must be an object");
    }
    const meta = raw as Record<string, unknown>;
    const out: { name?: string; provenance?: string } = {};
    for (const key of Object.keys(meta)) {
      if (key !== "name" && key !== "provenance") {
        throw new Error(`unknown metadata key: ${key}`);
      }
      if (typeof meta[key] !== "string") {
        throw new Error(`metadata.${key} must be a string`);
      }
    }
    if (typeof meta.name === "string") out.name = meta.name;
    if (typeof meta.provenance === "string") out.provenance = meta.provenance;
    doc.metadata = out;
  }
  return doc;
}

/** Canonical bytes (as a JS string): compact JSON plus trailing newline. */
export function canonicalText(doc: PolygonDocumentObject): string {
  return JSON.stringify(doc) + "\n";
}

export function parseDocumentText(text: string): PolygonDocumentObject {
  return canonicalizeDocument(JSON.parse(text));
}

/** Decimal value of a canonical rational string -- display only. */
export function displayNumber(rational: string): number {
  const slash = rational.indexOf("/");
  if (slash < 0) {
    return Number(rational);
  }
  return Number(rational.slice(0, slash)) / Number(rational.slice(slash + 1));
}

const stripSign = (s: string): string => (s.startsWith("-") ? s.slice(1) : s);

/**
 * Alternating-family membership from canonical strings alone: vertices
 * alternate between the axes (either phase) with distinct magnitudes per
 * axis. Pure string equality on canonical forms -- no arithmetic.
 */
export function isAlternating(doc: PolygonDocumentObject): boolean {
  const v = doc.vertices;
  const n = v.length;
  if (n < 4 || n % 2 !== 0) {
    return false;
  }
  const onX = (p: [string, string]) => p[1] === "0" && p[0] !== "0";
  const onY = (p: [string, string]) => p[0] === "0" && p[1] !== "0";
  const first = v[0]!;
  let offset: number;
  if (onX(first)) {
    offset = 0;
  } else if (onY(first)) {
    offset = 1;
  } else {
    return false;
  }
  const xs = new Set<string>();
  const ys = new Set<string>();
  for (let j = 0; j < n; j++) {
    const p = v[(j + offset) % n]!;
    if (j % 2 === 0) {
      if (!onX(p)) return false;
      xs.add(stripSign(p[0]));
    } else {
      if (!onY(p)) return false;
      ys.add(stripSign(p[1]));
    }
  }
  return xs.size === n / 2 && ys.size === n / 2;
}
