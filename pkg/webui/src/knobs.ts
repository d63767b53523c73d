/** Knob-panel state: preset selections plus per-knob custom overrides.
 *
 * A null override means "inherit from the selected preset". The panel is
 * "modified" as soon as any override is set; picking a preset clears the
 * overrides that preset owns.
 */

export interface KnobPanelState {
  uavPreset: string;
  platformPreset: string | null;
  sensorPreset: string | null;
  algorithmPreset: string | null;
  kneeThreshold: number;
  sensorFramerateHz: number | null;
  sensorRangeM: number | null;
  computeTdpW: number | null;
  computeRuntimeS: number | null;
  droneWeightG: number | null;
  rotorPullGf: number | null;
  payloadWeightG: number | null;
}

export type NumericKnob =
  | "kneeThreshold"
  | "sensorFramerateHz"
  | "sensorRangeM"
  | "computeTdpW"
  | "computeRuntimeS"
  | "droneWeightG"
  | "rotorPullGf"
  | "payloadWeightG";

export interface KnobRange {
  min: number;
  max: number;
  log: boolean;
  unit: string;
}

export const KNOB_RANGES: Record<NumericKnob, KnobRange> = {
  kneeThreshold: { min: 0.9, max: 0.999, log: false, unit: "" },
  sensorFramerateHz: { min: 1, max: 240, log: false, unit: "Hz" },
  sensorRangeM: { min: 0.5, max: 40, log: false, unit: "m" },
  computeTdpW: { min: 0, max: 65, log: false, unit: "W" },
  computeRuntimeS: { min: 0.001, max: 2, log: true, unit: "s" },
  droneWeightG: { min: 0, max: 3000, log: false, unit: "g" },
  rotorPullGf: { min: 50, max: 2000, log: false, unit: "g" },
  payloadWeightG: { min: 0, max: 3000, log: false, unit: "g" },
};

export function clampKnob(knob: NumericKnob, value: number): number {
  const range = KNOB_RANGES[knob];
  if (Number.isNaN(value)) return range.min;
  return Math.min(range.max, Math.max(range.min, value));
}

export function defaultState(): KnobPanelState {
  return {
    uavPreset: "AscTec Pelican",
    platformPreset: "Nvidia TX2",
    sensorPreset: "RGB-D-60",
    algorithmPreset: "DroNet",
    kneeThreshold: 0.985,
    sensorFramerateHz: null,
    sensorRangeM: null,
    computeTdpW: null,
    computeRuntimeS: null,
    droneWeightG: null,
    rotorPullGf: null,
    payloadWeightG: null,
  };
}

export type PresetKind = "uav" | "platform" | "sensor" | "algorithm";

/** Selecting a preset overwrites the knobs that preset owns. */
export function applyPreset(state: KnobPanelState, kind: PresetKind, name: string): KnobPanelState {
  const next = { ...state };
  switch (kind) {
    case "uav":
      next.uavPreset = name;
      next.droneWeightG = null;
      next.rotorPullGf = null;
      next.payloadWeightG = null;
      break;
    case "platform":
      next.platformPreset = name;
      next.computeTdpW = null;
      next.computeRuntimeS = null;
      break;
    case "sensor":
      next.sensorPreset = name;
      next.sensorFramerateHz = null;
      next.sensorRangeM = null;
      break;
    case "algorithm":
      next.algorithmPreset = name;
      next.computeRuntimeS = null;
      break;
  }
  return next;
}

export function setKnob(state: KnobPanelState, knob: NumericKnob, value: number): KnobPanelState {
  const clamped = clampKnob(knob, value);
  if (knob === "kneeThreshold") return { ...state, kneeThreshold: clamped };
  return { ...state, [knob]: clamped };
}

export function isModified(state: KnobPanelState): boolean {
  return (
    state.sensorFramerateHz !== null ||
    state.sensorRangeM !== null ||
    state.computeTdpW !== null ||
    state.computeRuntimeS !== null ||
    state.droneWeightG !== null ||
    state.rotorPullGf !== null ||
    state.payloadWeightG !== null
  );
}

/** The configuration document the service understands (never computed locally). */
export function buildConfigDocument(state: KnobPanelState): Record<string, unknown> {
  const uav: Record<string, unknown> = { name: state.uavPreset };
  if (state.droneWeightG !== null) uav.base_mass_g = state.droneWeightG;
  if (state.rotorPullGf !== null) uav.rotor_pull_gf = state.rotorPullGf;

  const doc: Record<string, unknown> = { uav };

  if (state.sensorPreset !== null || state.sensorFramerateHz !== null || state.sensorRangeM !== null) {
    const sensor: Record<string, unknown> = {};
    if (state.sensorPreset !== null) sensor.name = state.sensorPreset;
    if (state.sensorFramerateHz !== null) sensor.framerate_hz = state.sensorFramerateHz;
    if (state.sensorRangeM !== null) sensor.range_m = state.sensorRangeM;
    doc.sensor = sensor;
  }

  if (state.platformPreset !== null) {
    const compute: Record<string, unknown> = { name: state.platformPreset };
    if (state.computeTdpW !== null) compute.tdp_w = state.computeTdpW;
    doc.compute = compute;
  }

  if (state.computeRuntimeS !== null) {
    doc.algorithm = { runtime_s: state.computeRuntimeS };
  } else if (state.algorithmPreset !== null) {
    doc.algorithm = { name: state.algorithmPreset };
  }

  if (state.payloadWeightG !== null) {
    doc.payload = [{ name: "payload", mass_g: state.payloadWeightG, kind: "other" }];
  }

  doc.model = { knee_threshold: state.kneeThreshold };
  return doc;
}

/** Stable identity of the state's resolved request, for pin deduplication. */
export function configKey(state: KnobPanelState): string {
  return JSON.stringify(buildConfigDocument(state));
}
