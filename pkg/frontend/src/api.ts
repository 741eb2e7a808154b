/** Thin transport layer so the session logic is testable without a network. */

export interface TransportResponse {
  status: number;
  text: string;
}

export interface Transport {
  post(path: string, body: string): Promise<TransportResponse>;
  get(path: string): Promise<TransportResponse>;
}

export class HttpTransport implements Transport {
  constructor(private readonly baseUrl: string) {}

  async post(path: string, body: string): Promise<TransportResponse> {
    const resp = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body,
    });
    return { status: resp.status, text: await resp.text() };
  }

  async get(path: string): Promise<TransportResponse> {
    const resp = await fetch(this.baseUrl + path);
    return { status: resp.status, text: await resp.text() };
  }
}

export function serviceErrorMessage(resp: TransportResponse): string {
  try {
    const parsed = JSON.parse(resp.text) as { error?: string; field?: string };
    if (parsed.error === "hairpin") {
      return "hairpin — pop undefined";
    }
    if (parsed.error) {
      return parsed.field ? `${parsed.error} (${parsed.field})` : parsed.error;
    }
  } catch {
    // fall through to the generic message
  }
  return `service error (HTTP ${resp.status})`;
}
