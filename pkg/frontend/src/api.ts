// Fetch client for the computation service. At most one evaluation request
// is in flight: a newer submission aborts the previous one.

import type { RunReport, ServiceError, SourceDataDoc } from "./types.js";

export class ServiceFailure extends Error {
  constructor(readonly status: number, readonly payload: ServiceError) {
    super(payload.message ?? payload.error ?? `HTTP ${status}`);
  }
}

export class ApiClient {
  private inflight: AbortController | null = null;

  constructor(public baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  async health(): Promise<boolean> {
    try {
      const response = await fetch(this.url("/health"));
      return response.ok;
    } catch {
      return false;
    }
  }

  /** POST the document; a newer call cancels any still-running one. */
  async evaluate(doc: SourceDataDoc, semantics = "envelope"): Promise<RunReport> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    try {
      const response = await fetch(
        this.url(`/evaluate?semantics=${encodeURIComponent(semantics)}`),
        {
          method: "POST",
          headers: { "Content-Type": "application/json" },
          body: JSON.stringify(doc),
          signal: controller.signal,
        },
      );
      const payload = await response.json();
      if (!response.ok) {
        throw new ServiceFailure(response.status, payload as ServiceError);
      }
      return payload as RunReport;
    } finally {
      if (this.inflight === controller) {
        this.inflight = null;
      }
    }
  }
}
