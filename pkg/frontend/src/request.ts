/** Latest-only request guard: each view keeps at most one logical request
 * in flight; when parameters change mid-flight, the superseded response is
 * discarded instead of racing the newer one. */

export class LatestOnly {
  private seq = 0;

  /** Runs `task`; resolves to its value, or null if a newer run started. */
  async run<T>(task: () => Promise<T>): Promise<T | null> {
    const ticket = ++this.seq;
    const value = await task();
    return ticket === this.seq ? value : null;
  }
}
