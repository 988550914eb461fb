/** Rate control for live evaluation round trips.
 *
 * Edits are coalesced so the service sees at most one request per
 * interval (150 ms by default): the first edit of a burst starts a
 * window, the newest value when the window closes is the one sent, and
 * editing that continues simply opens the next window. Responses carry
 * a sequence number; anything overtaken by a newer delivery is dropped,
 * so out-of-order completions can never paint stale results. */

export const EVALUATE_INTERVAL_MS = 150;

export class DebouncedEvaluator<A, R> {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private pending: A | undefined;
  private windowOpenedAt = 0;
  private issued = 0;
  private deliveredSeq = 0;

  constructor(
    private readonly send: (arg: A) => Promise<R>,
    private readonly deliver: (result: R) => void,
    private readonly intervalMs: number = EVALUATE_INTERVAL_MS,
  ) {}

  /** Register an edit; the value actually sent is the newest one at the
   * moment the current window closes. */
  schedule(arg: A): void {
    if (this.pending === undefined) {
      this.windowOpenedAt = Date.now();
    }
    this.pending = arg;
    if (this.timer === null) {
      const wait = Math.max(0, this.windowOpenedAt + this.intervalMs - Date.now());
      this.timer = setTimeout(() => {
        this.timer = null;
        void this.fire();
      }, wait);
    }
  }

  /** Abandon any queued edit without sending it. */
  cancel(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    this.pending = undefined;
  }

  /** Requests issued so far; used by tests and the status line. */
  get requestCount(): number {
    return this.issued;
  }

  private async fire(): Promise<void> {
    const arg = this.pending as A;
    this.pending = undefined;
    const seq = ++this.issued;
    const result = await this.send(arg);
    if (seq > this.deliveredSeq) {
      this.deliveredSeq = seq;
      this.deliver(result);
    }
  }
}
