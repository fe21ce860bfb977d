/**
 * Debounced service client with latest-wins delivery.
 *
 * Every edit calls schedule(); the client waits a short quiet period, then
 * sends one request tagged with a monotonically increasing sequence number.
 * A response is delivered only while its sequence number is still the newest
 * one sent, so a slow early response can never overwrite a later one.  There
 * is no cancellation, stale responses are simply dropped on arrival.
 */

import { isRunReport, isServiceError, type RunReport, type SubdivideRequest } from './types.js';

export interface TransportResult {
  status: number;
  body: unknown;
}

export type Transport = (body: SubdivideRequest) => Promise<TransportResult>;

export interface RequestLogEntry {
  seq: number;
  sentAt: number;
  receivedAt: number | null;
  outcome: 'pending' | 'ok' | 'stale' | 'error' | 'transport';
  /** Couples in the final level of a delivered report, for the dev panel. */
  couples: number | null;
  code: string | null;
}

export interface ClientOptions {
  debounceMs?: number;
  now?: () => number;
  onReport?: (report: RunReport, seq: number, elapsedMs: number) => void;
  onError?: (message: string, code: string | null, index: number | null) => void;
}

export const DEFAULT_DEBOUNCE_MS = 80;

export function fetchTransport(baseUrl = ''): Transport {
  return async (body) => {
    const response = await fetch(`${baseUrl}/api/subdivide`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
    });
    return { status: response.status, body: await response.json() };
  };
}

export class SubdivideClient {
  readonly log: RequestLogEntry[] = [];

  private readonly transport: Transport;
  private readonly debounceMs: number;
  private readonly now: () => number;
  private readonly onReport: ClientOptions['onReport'];
  private readonly onError: ClientOptions['onError'];

  private timer: ReturnType<typeof setTimeout> | null = null;
  private pendingBody: SubdivideRequest | null = null;
  private lastSentSeq = 0;
  private deliveredSeq = 0;

  constructor(transport: Transport, options: ClientOptions = {}) {
    this.transport = transport;
    this.debounceMs = options.debounceMs ?? DEFAULT_DEBOUNCE_MS;
    this.now = options.now ?? (() => Date.now());
    this.onReport = options.onReport;
    this.onError = options.onError;
  }

  /** Sequence number of the last delivered report, 0 before the first. */
  get rendered(): number {
    return this.deliveredSeq;
  }

  /** Coalesce rapid edits: **only the last body scheduled** is sent. */
  schedule(body: SubdivideRequest): void {
    this.pendingBody = body;
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => this.fire(), this.debounceMs);
  }

  /** Send the pending request immediately (initial load, tests). */
  flush(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    this.fire();
  }

  private fire(): void {
    this.timer = null;
    const body = this.pendingBody;
    if (body === null) return;
    this.pendingBody = null;
    this.lastSentSeq += 1;
    const seq = this.lastSentSeq;
    const entry: RequestLogEntry = {
      seq,
      sentAt: this.now(),
      receivedAt: null,
      outcome: 'pending',
      couples: null,
      code: null,
    };
    this.log.push(entry);
    this.transport(body).then(
      (result) => this.settle(entry, result),
      (err) => {
        entry.receivedAt = this.now();
        entry.outcome = 'transport';
        entry.code = 'unreachable';
        this.onError?.(String(err), 'unreachable', null);
      },
    );
  }

  private settle(entry: RequestLogEntry, result: TransportResult): void {
    entry.receivedAt = this.now();
    if (entry.seq !== this.lastSentSeq) {
      // A newer request is already out; this response must not render.
      entry.outcome = 'stale';
      return;
    }
    if (result.status === 200 && isRunReport(result.body)) {
      entry.outcome = 'ok';
      const levels = result.body.levels;
      entry.couples = levels[levels.length - 1]?.couples.length ?? 0;
      this.deliveredSeq = entry.seq;
      this.onReport?.(result.body, entry.seq, entry.receivedAt - entry.sentAt);
      return;
    }
    entry.outcome = 'error';
    if (isServiceError(result.body)) {
      const { code, message, index } = result.body.error;
      entry.code = code;
      this.onError?.(message, code, index);
    } else {
      entry.code = `http_${result.status}`;
      this.onError?.(`service returned status ${result.status}`, null, null);
    }
  }
}
