/** DOM bootstrap: binds the knob panel, plot, and analysis panel. */

import { SkylineClient } from "./api.js";
import { SkylineController, ControllerView } from "./controller.js";
import { KNOB_RANGES, NumericKnob, PresetKind } from "./knobs.js";
import { nearestSample, plotAxes, pxToFrequency, PLOT_WIDTH } from "./plot.js";
import type { PresetListing } from "./types.js";

const SERVICE_URL = (window as unknown as { SKYLINE_SERVICE_URL?: string }).SKYLINE_SERVICE_URL ?? "http://127.0.0.1:8045";

const client = new SkylineClient(SERVICE_URL, (url, init) => fetch(url, init));
const controller = new SkylineController(client, { onChange: render });

const $ = <T extends HTMLElement>(id: string): T => document.getElementById(id) as T;

const KNOB_IDS: [NumericKnob, string][] = [
  ["sensorFramerateHz", "knob-framerate"],
  ["sensorRangeM", "knob-range"],
  ["computeTdpW", "knob-tdp"],
  ["computeRuntimeS", "knob-runtime"],
  ["droneWeightG", "knob-weight"],
  ["rotorPullGf", "knob-pull"],
  ["payloadWeightG", "knob-payload"],
  ["kneeThreshold", "knob-threshold"],
];

function populatePresets(presets: PresetListing): void {
  const fill = (id: string, names: string[], selected: string | null) => {
    const select = $(id) as unknown as HTMLSelectElement;
    select.innerHTML = "";
    for (const name of names) {
      const option = document.createElement("option");
      option.value = name;
      option.textContent = name;
      option.selected = name === selected;
      select.append(option);
    }
  };
  fill("preset-uav", presets.uavs.map((u) => u.name), controller.state.uavPreset);
  fill("preset-platform", presets.platforms.map((p) => p.name), controller.state.platformPreset);
  fill("preset-sensor", presets.sensors.map((s) => s.name), controller.state.sensorPreset);
  refreshAlgorithmOptions(presets);
}

function refreshAlgorithmOptions(presets: PresetListing): void {
  const platform = controller.state.platformPreset;
  const rows = presets.algorithms.filter((a) => a.platform === platform);
  const select = $("preset-algorithm") as unknown as HTMLSelectElement;
  select.innerHTML = "";
  for (const row of rows) {
    const option = document.createElement("option");
    option.value = row.algorithm;
    option.textContent = `${row.algorithm} (${row.throughput_hz} Hz)`;
    option.selected = row.algorithm === controller.state.algorithmPreset;
    select.append(option);
  }
  if (rows.length > 0 && !rows.some((r) => r.algorithm === controller.state.algorithmPreset)) {
    controller.selectPreset("algorithm", rows[0].algorithm);
  }
}

function bindPresetSelect(id: string, kind: PresetKind, presets: PresetListing): void {
  ($(id) as unknown as HTMLSelectElement).addEventListener("change", (event) => {
    controller.selectPreset(kind, (event.target as HTMLSelectElement).value);
    if (kind === "platform") refreshAlgorithmOptions(presets);
  });
}

function bindKnobs(): void {
  for (const [knob, id] of KNOB_IDS) {
    const range = KNOB_RANGES[knob];
    const input = $(id) as unknown as HTMLInputElement;
    input.min = String(range.log ? Math.log10(range.min) : range.min);
    input.max = String(range.log ? Math.log10(range.max) : range.max);
    input.step = knob === "kneeThreshold" ? "0.001" : range.log ? "0.01" : "1";
    input.addEventListener("input", () => {
      const raw = Number(input.value);
      controller.changeKnob(knob, range.log ? 10 ** raw : raw);
    });
  }
}

function render(view: ControllerView): void {
  $("plot").innerHTML = controller.plotSvg();
  bindHover();
  $("status").textContent = view.busy ? "querying service..." : view.modified ? "modified" : "preset";
  const errorBox = $("error");
  errorBox.textContent = view.error ?? "";
  errorBox.style.display = view.error ? "block" : "none";
  const panel = view.panel;
  if (panel) {
    $("analysis-config").textContent = panel.configName;
    $("analysis-bound").textContent = panel.boundLabel;
    $("analysis-vsafe").textContent = panel.vSafeText;
    $("analysis-faction").textContent = panel.fActionText;
    $("analysis-knee").textContent = `${panel.kneeHzText} Hz at ${panel.kneeVelocityText} m/s`;
    $("analysis-gap").textContent = `${panel.gapText} (${panel.gapDirection})`;
    $("analysis-tips").innerHTML = "";
    for (const tip of panel.tips) {
      const item = document.createElement("li");
      item.textContent = tip;
      $("analysis-tips").append(item);
    }
  }
  const pins = $("pin-list");
  pins.innerHTML = "";
  view.pinned.forEach((pin, index) => {
    const item = document.createElement("li");
    const label = document.createElement("input");
    label.value = pin.label;
    label.addEventListener("change", () => controller.relabelPin(index, label.value));
    const remove = document.createElement("button");
    remove.textContent = "x";
    remove.addEventListener("click", () => controller.removePin(index));
    item.append(label, remove);
    pins.append(item);
  });
}

function bindHover(): void {
  const svg = $("plot").querySelector("svg");
  const view = controller.view();
  if (!svg || !view.liveSeries) return;
  const axes = plotAxes([{ label: "", series: view.liveSeries }], true);
  svg.addEventListener("mousemove", (event) => {
    const rect = svg.getBoundingClientRect();
    const px = ((event.clientX - rect.left) / rect.width) * PLOT_WIDTH;
    const sample = nearestSample(view.liveSeries!, pxToFrequency(axes, px));
    $("hover-readout").textContent = `f = ${sample.f.toPrecision(4)} Hz, v = ${sample.v.toPrecision(4)} m/s`;
  });
}

function download(filename: string, mime: string, content: string): void {
  const blob = new Blob([content], { type: mime });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = filename;
  link.click();
  URL.revokeObjectURL(link.href);
}

async function start(): Promise<void> {
  const presets = (await client.presets()).data.presets;
  populatePresets(presets);
  bindPresetSelect("preset-uav", "uav", presets);
  bindPresetSelect("preset-platform", "platform", presets);
  bindPresetSelect("preset-sensor", "sensor", presets);
  bindPresetSelect("preset-algorithm", "algorithm", presets);
  bindKnobs();
  $("pin-button").addEventListener("click", () => {
    const outcome = controller.pinCurrent();
    if (outcome === "full") $("error").textContent = `at most ${controller.maxOverlays} overlays`;
  });
  $("clear-button").addEventListener("click", () => controller.clearPins());
  $("export-button").addEventListener("click", () => {
    const exported = controller.exportView();
    if (!exported) {
      $("error").textContent = "nothing to export yet";
      $("error").style.display = "block";
      return;
    }
    download("roofline.svg", "image/svg+xml", exported.svg);
    download("analysis.json", "application/json", exported.analysisJson);
  });
  await controller.refresh();
}

void start();
