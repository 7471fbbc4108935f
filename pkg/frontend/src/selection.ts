/** Selection draft shared across tabs: clicking points in the projection
 * and checking rows in the table edit the same ordered set. */

export type SelectionListener = (ids: string[]) => void;

export class SelectionDraft {
  private ids: string[] = [];
  private listeners = new Set<SelectionListener>();

  list(): string[] {
    return [...this.ids];
  }

  has(id: string): boolean {
    return this.ids.includes(id);
  }

  toggle(id: string): void {
    if (this.has(id)) {
      this.ids = this.ids.filter((x) => x !== id);
    } else {
      this.ids = [...this.ids, id];
    }
    this.emit();
  }

  clear(): void {
    this.ids = [];
    this.emit();
  }

  subscribe(listener: SelectionListener): () => void {
    this.listeners.add(listener);
    listener(this.list());
    return () => this.listeners.delete(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this.list());
  }
}
