/**
 * Serialized request lane: at most one task in flight; while busy, only the
 * most recently submitted task is kept, so a burst of edits resolves to the
 * first request plus one trailing request for the final state.
 */
export class SerialQueue<T> {
  private inflight = false;
  private pending: (() => Promise<T>) | null = null;

  constructor(
    private readonly onResult: (result: T) => void,
    private readonly onError: (error: unknown) => void,
  ) {}

  submit(task: () => Promise<T>): void {
    if (this.inflight) {
      this.pending = task;
      return;
    }
    this.run(task);
  }

  get busy(): boolean {
    return this.inflight;
  }

  private run(task: () => Promise<T>): void {
    this.inflight = true;
    task()
      .then((result) => this.onResult(result))
      .catch((error) => this.onError(error))
      .finally(() => {
        this.inflight = false;
        const next = this.pending;
        this.pending = null;
        if (next) this.run(next);
      });
  }
}
