/** Pinned-series management for overlay comparison. */

import type { SeriesReport } from "./types.js";

export const MAX_OVERLAYS = 6;

export interface PinnedSeries {
  label: string;
  key: string;
  series: SeriesReport;
}

export type PinOutcome = "pinned" | "duplicate" | "full";

export class OverlayStore {
  private entries: PinnedSeries[] = [];

  pin(label: string, key: string, series: SeriesReport): PinOutcome {
    if (this.entries.some((entry) => entry.key === key)) return "duplicate";
    if (this.entries.length >= MAX_OVERLAYS) return "full";
    this.entries.push({ label, key, series });
    return "pinned";
  }

  relabel(index: number, label: string): void {
    const entry = this.entries[index];
    if (entry) entry.label = label;
  }

  remove(index: number): void {
    this.entries.splice(index, 1);
  }

  clear(): void {
    this.entries = [];
  }

  list(): readonly PinnedSeries[] {
    return this.entries;
  }

  get size(): number {
    return this.entries.length;
  }
}
