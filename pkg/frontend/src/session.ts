/**
 * Playground session state: the current canonical document, history and redo
 * stacks, and the operation mode. Every geometric fact comes from the
 * service verbatim; this class only stores the returned document text, so
 * replaying the history through the service reproduces the current state
 * byte for byte.
 */

import type { Transport } from "./api.js";
import { serviceErrorMessage } from "./api.js";
import { canonicalText, canonicalizeDocument, parseDocumentText } from "./document.js";
import type {
  ClassificationReport,
  ExportBundle,
  HistoryEntry,
  OperationKind,
  PolygonDocumentObject,
} from "./types.js";

export class Session {
  mode: OperationKind = "pop";
  status: ClassificationReport | null = null;
  lastError: string | null = null;

  private initialDoc: string | null = null;
  private historyEntries: HistoryEntry[] = [];
  private redoEntries: HistoryEntry[] = [];
  private queue: Promise<unknown> = Promise.resolve();

  constructor(private readonly transport: Transport) {}

  get loaded(): boolean {
    return this.initialDoc !== null;
  }

  get initial(): string {
    if (this.initialDoc === null) throw new Error("no polygon loaded");
    return this.initialDoc;
  }

  /** Canonical text of the current document. */
  get current(): string {
    const last = this.historyEntries[this.historyEntries.length - 1];
    return last ? last.doc : this.initial;
  }

  get document(): PolygonDocumentObject {
    return parseDocumentText(this.current);
  }

  get history(): readonly HistoryEntry[] {
    return this.historyEntries;
  }

  get redoStack(): readonly HistoryEntry[] {
    return this.redoEntries;
  }

  get canUndo(): boolean {
    return this.historyEntries.length > 0;
  }

  get canRedo(): boolean {
    return this.redoEntries.length > 0;
  }

  /** Serialize service calls: at most one in flight, later calls queued. */
  private enqueue<T>(task: () => Promise<T>): Promise<T> {
    const next = this.queue.then(task);
    this.queue = next.catch(() => undefined);
    return next;
  }

  /** Load a polygon from pasted/uploaded document text. */
  loadDocumentText(text: string): Promise<boolean> {
    return this.enqueue(async () => {
      let canonical: string;
      try {
        canonical = canonicalText(parseDocumentText(text));
      } catch (err) {
        this.lastError = err instanceof Error ? err.message : String(err);
        return false;
      }
      const report = await this.fetchStatus(canonical);
      if (report === null) {
        return false; // lastError already set; state unchanged
      }
      this.resetTo(canonical, report);
      return true;
    });
  }

  /** Load a generated family member via the service. */
  loadGenerated(x: string, y: string, sigma: string): Promise<boolean> {
    return this.enqueue(async () => {
      const resp = await this.transport.post(
        "/alternating/build", JSON.stringify({ x, y, sigma }));
      if (resp.status !== 200) {
        this.lastError = serviceErrorMessage(resp);
        return false;
      }
      const polygon = (JSON.parse(resp.text) as { polygon: unknown }).polygon;
      const canonical = canonicalText(canonicalizeDocument(polygon));
      const report = await this.fetchStatus(canonical);
      if (report === null) {
        return false;
      }
      this.resetTo(canonical, report);
      return true;
    });
  }

  /**
   * Pop (or popturn, per mode) the clicked vertex. On success the returned
   * document is stored verbatim and the redo stack clears; on error the
   * state is unchanged and `lastError` explains why.
   */
  clickVertex(vertex: number): Promise<boolean> {
    return this.enqueue(async () => {
      if (this.initialDoc === null) {
        this.lastError = "no polygon loaded";
        return false;
      }
      const op = this.mode;
      const body = JSON.stringify({ polygon: this.document, vertex });
      const resp = await this.transport.post(`/polygon/${op}`, body).catch((err) => {
        this.lastError = `service unreachable: ${String(err)}`;
        return null;
      });
      if (resp === null) {
        return false;
      }
      if (resp.status !== 200) {
        this.lastError = serviceErrorMessage(resp);
        return false;
      }
      const polygon = (JSON.parse(resp.text) as { polygon: unknown }).polygon;
      const doc = canonicalText(canonicalizeDocument(polygon));
      const report = await this.fetchStatus(doc);
      if (report === null) {
        return false;
      }
      this.historyEntries.push({ op: { kind: op, vertex }, doc });
      this.redoEntries = [];
      this.status = report;
      this.lastError = null;
      return true;
    });
  }

  undo(): Promise<boolean> {
    return this.enqueue(async () => {
      const entry = this.historyEntries.pop();
      if (!entry) {
        return false;
      }
      this.redoEntries.push(entry);
      await this.refreshStatus();
      return true;
    });
  }

  redo(): Promise<boolean> {
    return this.enqueue(async () => {
      const entry = this.redoEntries.pop();
      if (!entry) {
        return false;
      }
      this.historyEntries.push(entry);
      await this.refreshStatus();
      return true;
    });
  }

  /** Initial document plus the ordered operation list, CLI-replayable. */
  exportBundle(): string {
    const bundle: ExportBundle = {
      initial: parseDocumentText(this.initial),
      operations: this.historyEntries.map((e) => e.op),
      final: parseDocumentText(this.current),
    };
    return JSON.stringify(bundle) + "\n";
  }

  private resetTo(doc: string, report: ClassificationReport): void {
    this.initialDoc = doc;
    this.historyEntries = [];
    this.redoEntries = [];
    this.status = report;
    this.lastError = null;
  }

  private async fetchStatus(doc: string): Promise<ClassificationReport | null> {
    const body = JSON.stringify({ polygon: parseDocumentText(doc) });
    const resp = await this.transport.post("/polygon/check", body).catch((err) => {
      this.lastError = `service unreachable: ${String(err)}`;
      return null;
    });
    if (resp === null) {
      return null;
    }
    if (resp.status !== 200) {
      this.lastError = serviceErrorMessage(resp);
      return null;
    }
    return JSON.parse(resp.text) as ClassificationReport;
  }

  private async refreshStatus(): Promise<void> {
    const report = await this.fetchStatus(this.current);
    if (report !== null) {
      this.status = report;
      this.lastError = null;
    }
  }
}
