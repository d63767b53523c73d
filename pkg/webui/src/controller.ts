/** The what-if loop: knob edits debounce into paired analyze + curve
 * requests; only the newest request may update the view, and a failed
 * request reports inline without clearing the last good plot.
 */

import { SkylineClient, ServiceError } from "./api.js";
import { Debouncer } from "./debounce.js";
import {
  KnobPanelState,
  NumericKnob,
  PresetKind,
  applyPreset,
  buildConfigDocument,
  configKey,
  defaultState,
  isModified,
  setKnob,
} from "./knobs.js";
import { MAX_OVERLAYS, OverlayStore, PinOutcome } from "./overlay.js";
import { AnalysisPanelView, panelFromAnalysis } from "./panel.js";
import { NamedSeries, renderPlotSvg } from "./plot.js";
import type { SeriesReport } from "./types.js";

export interface ControllerOptions {
  debounceMs?: number;
  fMinHz?: number;
  fMaxHz?: number;
  samples?: number;
  onChange?: (view: ControllerView) => void;
}

export interface ControllerView {
  state: KnobPanelState;
  modified: boolean;
  busy: boolean;
  error: string | null;
  panel: AnalysisPanelView | null;
  liveSeries: SeriesReport | null;
  pinned: readonly { label: string; series: SeriesReport }[];
  requestsIssued: number;
}

export class SkylineController {
  state: KnobPanelState = defaultState();

  private readonly debouncer: Debouncer;
  private readonly overlay = new OverlayStore();
  private latestToken = 0;
  private busy = false;
  private error: string | null = null;
  private panel: AnalysisPanelView | null = null;
  private liveSeries: SeriesReport | null = null;
  private liveKey: string | null = null;
  private lastAnalyzeRaw: string | null = null;
  private requestsIssued = 0;

  constructor(
    private readonly client: SkylineClient,
    private readonly options: ControllerOptions = {},
  ) {
    this.debouncer = new Debouncer(options.debounceMs ?? 150);
  }

  // ------------------------------------------------------------ state edits

  selectPreset(kind: PresetKind, name: string): void {
    this.state = applyPreset(this.state, kind, name);
    this.scheduleRefresh();
  }

  changeKnob(knob: NumericKnob, value: number): void {
    this.state = setKnob(this.state, knob, value);
    this.scheduleRefresh();
  }

  private scheduleRefresh(): void {
    this.debouncer.schedule(() => {
      void this.refresh();
    });
    this.notify();
  }

  /** One request cycle; superseded responses are discarded. */
  async refresh(): Promise<void> {
    this.latestToken += 1;
    const token = this.latestToken;
    const document = buildConfigDocument(this.state);
    const key = configKey(this.state);
    this.busy = true;
    this.requestsIssued += 1;
    this.notify();
    try {
      const [analyze, curve] = await Promise.all([
        this.client.analyze(document),
        this.client.curve(
          document,
          this.options.fMinHz ?? 0.1,
          this.options.fMaxHz ?? 1000.0,
          this.options.samples ?? 120,
        ),
      ]);
      if (token !== this.latestToken) return; // a newer edit superseded us
      this.panel = panelFromAnalysis(analyze.data.analysis);
      this.liveSeries = curve.data.series;
      this.liveKey = key;
      this.lastAnalyzeRaw = analyze.raw;
      this.error = null;
    } catch (error) {
      if (token !== this.latestToken) return;
      // keep the last good plot and panel; surface the failure inline
      this.error = error instanceof ServiceError ? error.message : String(error);
    } finally {
      if (token === this.latestToken) {
        this.busy = false;
        this.notify();
      }
    }
  }

  // ------------------------------------------------------------ overlays

  pinCurrent(): PinOutcome | "nothing" {
    if (this.liveSeries === null || this.liveKey === null) return "nothing";
    const label = this.panel?.configName ?? `pin ${this.overlay.size + 1}`;
    const outcome = this.overlay.pin(label, this.liveKey, this.liveSeries);
    this.notify();
    return outcome;
  }

  relabelPin(index: number, label: string): void {
    this.overlay.relabel(index, label);
    this.notify();
  }

  removePin(index: number): void {
    this.overlay.remove(index);
    this.notify();
  }

  clearPins(): void {
    this.overlay.clear();
    this.notify();
  }

  get maxOverlays(): number {
    return MAX_OVERLAYS;
  }

  // ------------------------------------------------------------ views

  private visibleSeries(): NamedSeries[] {
    const entries: NamedSeries[] = this.overlay.list().map((p) => ({ label: p.label, series: p.series }));
    if (this.liveSeries !== null && !this.overlay.list().some((p) => p.key === this.liveKey)) {
      entries.push({ label: this.panel?.configName ?? "current", series: this.liveSeries });
    }
    return entries;
  }

  plotSvg(): string {
    return renderPlotSvg(this.visibleSeries());
  }

  /** Current plot as SVG plus the verbatim analysis response, for export. */
  exportView(): { svg: string; analysisJson: string } | null {
    if (this.visibleSeries().length === 0 || this.lastAnalyzeRaw === null) return null;
    return { svg: this.plotSvg(), analysisJson: this.lastAnalyzeRaw };
  }

  view(): ControllerView {
    return {
      state: this.state,
      modified: isModified(this.state),
      busy: this.busy,
      error: this.error,
      panel: this.panel,
      liveSeries: this.liveSeries,
      pinned: this.overlay.list().map((p) => ({ label: p.label, series: p.series })),
      requestsIssued: this.requestsIssued,
    };
  }

  private notify(): void {
    this.options.onChange?.(this.view());
  }
}
