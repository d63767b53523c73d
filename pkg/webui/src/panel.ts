/** Analysis-panel view model.
 *
 * Every number is the service's value rendered with String(); the panel
 * never recomputes or reformats model math.
 */

import type { AnalysisReport } from "./types.js";

const BOUND_LABELS: Record<string, string> = {
  PhysicsBound: "Physics bound",
  SensorBound: "Sensor bound",
  ComputeBound: "Compute bound",
  ControlBound: "Control bound",
};

export interface AnalysisPanelView {
  configName: string;
  boundLabel: string;
  vSafeText: string;
  fActionText: string;
  kneeHzText: string;
  kneeVelocityText: string;
  gapText: string;
  gapDirection: string;
  tips: string[];
}

export function panelFromAnalysis(analysis: AnalysisReport): AnalysisPanelView {
  return {
    configName: analysis.config_name,
    boundLabel: BOUND_LABELS[analysis.bound.kind] ?? analysis.bound.kind,
    vSafeText: String(analysis.v_safe_mps),
    fActionText: String(analysis.f_action_hz),
    kneeHzText: String(analysis.knee.throughput_hz),
    kneeVelocityText: String(analysis.knee.velocity_mps),
    gapText: String(analysis.gap.ratio),
    gapDirection: analysis.gap.direction.replace("_", "-"),
    tips: [...analysis.recommendations],
  };
}
