import { describe, expect, it } from "vitest";

import {
  canonicalText,
  canonicalizeDocument,
  displayNumber,
  isAlternating,
  parseDocumentText,
} from "../src/document.js";
import { fixtureText } from "./stub.js";

describe("canonical document text", () => {
  it("reproduces CLI bytes after a parse/stringify roundtrip", () => {
    for (const name of ["fig2-start.json", "after-pop-1.json", "hairpin.json"]) {
      const text = fixtureText(name);
      expect(canonicalText(parseDocumentText(text))).toBe(text);
    }
  });

  it("normalizes key order to the canonical form", () => {
    const shuffled = '{"vertices":[["0","0"],["1","0"],["0","1"]],"format_version":"1"}';
    expect(canonicalText(parseDocumentText(shuffled))).toBe(
      '{"format_version":"1","vertices":[["0","0"],["1","0"],["0","1"]]}\n');
  });

  it("defaults the format version and keeps metadata ordered", () => {
    const doc = parseDocumentText(
      '{"vertices":[["0","0"],["1","0"],["0","1"]],"metadata":{"provenance":"x","name":"n"}}');
    expect(canonicalText(doc)).toBe(
      '{"format_version":"1","vertices":[["0","0"],["1","0"],["0","1"]],'
      + '"metadata":{"name":"n","provenance":"x"}}\n');
  });

  it("rejects malformed documents", () => {
    expect(() => parseDocumentText("[1,2]")).toThrow(/object/);
    expect(() => parseDocumentText('{"vertices":[["0","0"],["1","0"]]}')).toThrow(/at least 3/);
    expect(() => parseDocumentText('{"vertices":[["0","0"],["1","0"],[0,1]]}'))
      .toThrow(/vertices\[2\]/);
    expect(() => parseDocumentText('{"vertices":[["0","0"],["1","0"],["0","1"]],"zap":1}'))
      .toThrow(/unknown document key/);
    expect(() => parseDocumentText('{"format_version":"2","vertices":[["0","0"],["1","0"],["0","1"]]}'))
      .toThrow(/format_version/);
  });
});

describe("displayNumber", () => {
  it("converts canonical rational strings for display", () => {
    expect(displayNumber("3")).toBe(3);
    expect(displayNumber("-1/2")).toBe(-0.5);
    expect(displayNumber("22/7")).toBeCloseTo(3.142857, 5);
  });
});

describe("isAlternating", () => {
  it("accepts family members in both phases", () => {
    const doc = parseDocumentText(fixtureText("fig2-start.json"));
    expect(isAlternating(doc)).toBe(true);
    const rotated = canonicalizeDocument({
      format_version: "1",
      vertices: [...doc.vertices.slice(1), doc.vertices[0]],
    });
    expect(isAlternating(rotated)).toBe(true);
  });

  it("rejects duplicate magnitudes on one axis", () => {
    expect(isAlternating(canonicalizeDocument({
      vertices: [["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-1"]],
    }))).toBe(false);
  });

  it("rejects off-axis vertices, odd counts, and origin vertices", () => {
    expect(isAlternating(canonicalizeDocument({
      vertices: [["2", "0"], ["0", "3"], ["-3", "1"], ["0", "-2"]],
    }))).toBe(false);
    expect(isAlternating(canonicalizeDocument({
      vertices: [["2", "0"], ["0", "3"], ["-3", "0"]],
    }))).toBe(false);
    expect(isAlternating(canonicalizeDocument({
      vertices: [["0", "0"], ["0", "3"], ["-3", "0"], ["0", "-2"]],
    }))).toBe(false);
  });

  it("rejects the hairpin demo", () => {
    expect(isAlternating(parseDocumentText(fixtureText("hairpin.json")))).toBe(false);
  });
});
