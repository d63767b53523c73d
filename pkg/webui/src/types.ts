/** Response shapes of the analysis service (mirrors its JSON exactly). */

export interface KneeReport {
  throughput_hz: number;
  velocity_mps: number;
  asymptote_velocity_mps: number;
  threshold: number;
}

export interface AnalysisReport {
  config_name: string;
  f_action_hz: number;
  v_safe_mps: number;
  knee: KneeReport;
  bound: { kind: string; ceiling_velocity_mps: number; limiting_rate_hz: number };
  gap: { ratio: number; direction: string };
  rates: { sensor_hz: number; compute_hz: number; control_hz: number };
  physics: {
    a_max_mps2: number;
    sense_range_m: number;
    total_mass_kg: number;
    thrust_to_weight: number;
  };
  recommendations: string[];
}

export interface SeriesReport {
  label: string;
  scale: string;
  frequencies_hz: number[];
  velocities_mps: number[];
  roof_velocity_mps: number;
  knee: KneeReport;
  ceilings: { label: string; rate_hz: number; ceiling_velocity_mps: number }[];
}

export interface AnalyzeResponse {
  model_version: string;
  request_echo: unknown;
  analysis: AnalysisReport;
}

export interface CurveResponse {
  model_version: string;
  request_echo: unknown;
  series: SeriesReport;
}

export interface PresetListing {
  platforms: { name: string; tdp_w: number; board_mass_g: number; provenance: string }[];
  sensors: { name: string; framerate_hz: number; range_m: number; provenance: string }[];
  algorithms: { algorithm: string; platform: string; throughput_hz: number; provenance: string }[];
  uavs: { name: string; base_mass_g: number; rotor_pull_gf: number; sense_range_m: number }[];
}

export interface PresetsResponse {
  model_version: string;
  request_echo: unknown;
  presets: PresetListing;
}

export interface ServiceErrorBody {
  error?: { path?: string; message?: string; thrust_to_weight?: number };
}
