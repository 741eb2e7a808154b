export interface PolygonDocumentObject {
  format_version: string;
  vertices: [string, string][];
  metadata?: { name?: string; provenance?: string };
}

export interface ClassificationReport {
  simple: boolean;
  convex: boolean;
  strictly_convex: boolean;
  scalene: boolean;
  weakly_scalene: boolean;
  hairpin_indices: number[];
}

export type OperationKind = "pop" | "popturn";

export interface OperationDescriptor {
  kind: OperationKind;
  vertex: number;
}

/** History entry: the operation and the canonical document text it produced. */
export interface HistoryEntry {
  op: OperationDescriptor;
  doc: string;
}

export interface ExportBundle {
  initial: PolygonDocumentObject;
  operations: OperationDescriptor[];
  final: PolygonDocumentObject;
}
