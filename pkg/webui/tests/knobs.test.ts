import { describe, expect, it } from "vitest";

import {
  KNOB_RANGES,
  applyPreset,
  buildConfigDocument,
  clampKnob,
  configKey,
  defaultState,
  isModified,
  setKnob,
} from "../src/knobs.js";

describe("knob ranges", () => {
  it("clamps every knob to its declared range", () => {
    expect(clampKnob("sensorFramerateHz", 500)).toBe(240);
    expect(clampKnob("sensorFramerateHz", -3)).toBe(1);
    expect(clampKnob("sensorRangeM", 100)).toBe(40);
    expect(clampKnob("computeTdpW", 80)).toBe(65);
    expect(clampKnob("computeRuntimeS", 0)).toBe(0.001);
    expect(clampKnob("computeRuntimeS", 9)).toBe(2);
    expect(clampKnob("droneWeightG", 5000)).toBe(3000);
    expect(clampKnob("rotorPullGf", 10)).toBe(50);
    expect(clampKnob("payloadWeightG", -1)).toBe(0);
    expect(clampKnob("kneeThreshold", 1.5)).toBe(0.999);
  });

  it("treats NaN as the range minimum", () => {
    expect(clampKnob("computeTdpW", Number.NaN)).toBe(KNOB_RANGES.computeTdpW.min);
  });
});

describe("preset application", () => {
  it("selecting a UAV preset overwrites its dependent knobs", () => {
    let state = setKnob(defaultState(), "droneWeightG", 1200);
    state = setKnob(state, "payloadWeightG", 100);
    expect(isModified(state)).toBe(true);
    state = applyPreset(state, "uav", "DJI Spark");
    expect(state.uavPreset).toBe("DJI Spark");
    expect(state.droneWeightG).toBeNull();
    expect(state.payloadWeightG).toBeNull();
    expect(isModified(state)).toBe(false);
  });

  it("selecting a platform clears TDP and runtime overrides", () => {
    let state = setKnob(defaultState(), "computeTdpW", 20);
    state = setKnob(state, "computeRuntimeS", 0.05);
    state = applyPreset(state, "platform", "Intel NCS");
    expect(state.computeTdpW).toBeNull();
    expect(state.computeRuntimeS).toBeNull();
  });

  it("custom edits flag the configuration as modified", () => {
    const state = defaultState();
    expect(isModified(state)).toBe(false);
    expect(isModified(setKnob(state, "sensorRangeM", 7))).toBe(true);
  });
});

describe("document building", () => {
  it("builds pure preset references by default", () => {
    const doc = buildConfigDocument(defaultState()) as Record<string, any>;
    expect(doc.uav).toEqual({ name: "AscTec Pelican" });
    expect(doc.compute).toEqual({ name: "Nvidia TX2" });
    expect(doc.algorithm).toEqual({ name: "DroNet" });
    expect(doc.sensor).toEqual({ name: "RGB-D-60" });
    expect(doc.model).toEqual({ knee_threshold: 0.985 });
    expect(doc.payload).toBeUndefined();
  });

  it("layers custom overrides over the preset reference", () => {
    let state = setKnob(defaultState(), "computeTdpW", 20);
    state = setKnob(state, "droneWeightG", 900);
    const doc = buildConfigDocument(state) as Record<string, any>;
    expect(doc.compute).toEqual({ name: "Nvidia TX2", tdp_w: 20 });
    expect(doc.uav).toEqual({ name: "AscTec Pelican", base_mass_g: 900 });
  });

  it("a runtime override replaces the algorithm preset", () => {
    const doc = buildConfigDocument(setKnob(defaultState(), "computeRuntimeS", 0.05)) as Record<string, any>;
    expect(doc.algorithm).toEqual({ runtime_s: 0.05 });
  });

  it("the payload knob adds a single payload item", () => {
    const doc = buildConfigDocument(setKnob(defaultState(), "payloadWeightG", 166)) as Record<string, any>;
    expect(doc.payload).toEqual([{ name: "payload", mass_g: 166, kind: "other" }]);
  });

  it("configKey distinguishes distinct states and matches equal ones", () => {
    const a = defaultState();
    const b = setKnob(a, "payloadWeightG", 166);
    expect(configKey(a)).toBe(configKey(defaultState()));
    expect(configKey(a)).not.toBe(configKey(b));
  });
});
