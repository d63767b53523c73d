/** Pure plot geometry and SVG markup for roofline overlays.
 *
 * Geometry is derived only from service-provided series; no model math
 * happens here beyond coordinate mapping.
 */

import type { SeriesReport } from "./types.js";

export const PLOT_WIDTH = 760;
export const PLOT_HEIGHT = 440;
const MARGIN = { left: 60, right: 150, top: 30, bottom: 50 };

export const SERIES_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"];

export interface NamedSeries {
  label: string;
  series: SeriesReport;
}

export interface PlotAxes {
  fMin: number;
  fMax: number;
  vMax: number;
  logX: boolean;
}

/** Axis ranges that contain every visible series, roof included. */
export function plotAxes(entries: NamedSeries[], logX: boolean): PlotAxes {
  let fMin = Number.POSITIVE_INFINITY;
  let fMax = 0;
  let vMax = 0;
  for (const { series } of entries) {
    fMin = Math.min(fMin, series.frequencies_hz[0]);
    fMax = Math.max(fMax, series.frequencies_hz[series.frequencies_hz.length - 1]);
    vMax = Math.max(vMax, series.roof_velocity_mps, ...series.velocities_mps);
  }
  return { fMin, fMax, vMax: vMax * 1.08, logX };
}

export function xToPx(axes: PlotAxes, f: number): number {
  const span = PLOT_WIDTH - MARGIN.left - MARGIN.right;
  const t = axes.logX
    ? (Math.log10(f) - Math.log10(axes.fMin)) / (Math.log10(axes.fMax) - Math.log10(axes.fMin))
    : (f - axes.fMin) / (axes.fMax - axes.fMin);
  return MARGIN.left + t * span;
}

export function yToPx(axes: PlotAxes, v: number): number {
  const span = PLOT_HEIGHT - MARGIN.top - MARGIN.bottom;
  return PLOT_HEIGHT - MARGIN.bottom - (v / axes.vMax) * span;
}

export function pxToFrequency(axes: PlotAxes, px: number): number {
  const span = PLOT_WIDTH - MARGIN.left - MARGIN.right;
  const t = Math.min(1, Math.max(0, (px - MARGIN.left) / span));
  if (axes.logX) {
    const lo = Math.log10(axes.fMin);
    const hi = Math.log10(axes.fMax);
    return 10 ** (lo + t * (hi - lo));
  }
  return axes.fMin + t * (axes.fMax - axes.fMin);
}

/** The sampled point nearest a target frequency (for the hover readout). */
export function nearestSample(series: SeriesReport, f: number): { f: number; v: number } {
  let best = 0;
  let bestDistance = Number.POSITIVE_INFINITY;
  for (let i = 0; i < series.frequencies_hz.length; i += 1) {
    const distance = Math.abs(Math.log10(series.frequencies_hz[i]) - Math.log10(f));
    if (distance < bestDistance) {
      bestDistance = distance;
      best = i;
    }
  }
  return { f: series.frequencies_hz[best], v: series.velocities_mps[best] };
}

function escapeXml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

export function renderPlotSvg(entries: NamedSeries[], logX = true): string {
  if (entries.length === 0) {
    return `<svg xmlns="http://www.w3.org/2000/svg" width="${PLOT_WIDTH}" height="${PLOT_HEIGHT}"><text x="${PLOT_WIDTH / 2}" y="${PLOT_HEIGHT / 2}" text-anchor="middle" fill="#888">no series</text></svg>`;
  }
  const axes = plotAxes(entries, logX);
  const bottom = PLOT_HEIGHT - MARGIN.bottom;
  const right = PLOT_WIDTH - MARGIN.right;
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${PLOT_WIDTH}" height="${PLOT_HEIGHT}" viewBox="0 0 ${PLOT_WIDTH} ${PLOT_HEIGHT}">`,
    `<rect width="${PLOT_WIDTH}" height="${PLOT_HEIGHT}" fill="#ffffff"/>`,
  ];

  // y grid
  for (let i = 0; i <= 6; i += 1) {
    const v = (axes.vMax * i) / 6;
    const y = yToPx(axes, v).toFixed(1);
    parts.push(`<line x1="${MARGIN.left}" y1="${y}" x2="${right}" y2="${y}" stroke="#eee"/>`);
    parts.push(
      `<text x="${MARGIN.left - 6}" y="${y}" dy="4" text-anchor="end" font-size="10">${v.toFixed(1)}</text>`,
    );
  }
  // x decades
  if (logX) {
    const decLo = Math.ceil(Math.log10(axes.fMin) - 1e-9);
    const decHi = Math.floor(Math.log10(axes.fMax) + 1e-9);
    for (let p = decLo; p <= decHi; p += 1) {
      const x = xToPx(axes, 10 ** p).toFixed(1);
      parts.push(`<line x1="${x}" y1="${MARGIN.top}" x2="${x}" y2="${bottom}" stroke="#f0f0f0"/>`);
      parts.push(
        `<text x="${x}" y="${bottom + 16}" text-anchor="middle" font-size="10">${10 ** p}</text>`,
      );
    }
  }
  parts.push(`<line x1="${MARGIN.left}" y1="${bottom}" x2="${right}" y2="${bottom}" stroke="#000"/>`);
  parts.push(`<line x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${bottom}" stroke="#000"/>`);
  parts.push(
    `<text x="${(MARGIN.left + right) / 2}" y="${PLOT_HEIGHT - 12}" text-anchor="middle" font-size="11">action throughput (Hz)</text>`,
  );
  parts.push(
    `<text x="16" y="${(MARGIN.top + bottom) / 2}" text-anchor="middle" font-size="11" transform="rotate(-90 16 ${(MARGIN.top + bottom) / 2})">safe velocity (m/s)</text>`,
  );

  entries.forEach(({ label, series }, index) => {
    const color = SERIES_COLORS[index % SERIES_COLORS.length];
    const points = series.frequencies_hz
      .map((f, i) => `${xToPx(axes, f).toFixed(1)},${yToPx(axes, series.velocities_mps[i]).toFixed(1)}`)
      .join(" ");
    parts.push(`<polyline fill="none" stroke="${color}" stroke-width="2" points="${points}"/>`);
    const roofY = yToPx(axes, series.roof_velocity_mps).toFixed(1);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${roofY}" x2="${right}" y2="${roofY}" stroke="${color}" stroke-dasharray="6,4" opacity="0.55"/>`,
    );
    const knee = series.knee;
    if (knee.throughput_hz >= axes.fMin && knee.throughput_hz <= axes.fMax) {
      const kx = xToPx(axes, knee.throughput_hz).toFixed(1);
      const ky = yToPx(axes, knee.velocity_mps).toFixed(1);
      parts.push(`<circle cx="${kx}" cy="${ky}" r="4" fill="${color}"/>`);
    }
    for (const ceiling of series.ceilings) {
      if (ceiling.rate_hz < axes.fMin || ceiling.rate_hz > axes.fMax) continue;
      const cx = xToPx(axes, ceiling.rate_hz).toFixed(1);
      const cy = yToPx(axes, ceiling.ceiling_velocity_mps).toFixed(1);
      parts.push(
        `<line x1="${cx}" y1="${cy}" x2="${cx}" y2="${bottom}" stroke="${color}" stroke-dasharray="2,3" opacity="0.7"/>`,
      );
    }
    const ly = MARGIN.top + 8 + index * 16;
    parts.push(`<line x1="${right + 10}" y1="${ly}" x2="${right + 30}" y2="${ly}" stroke="${color}" stroke-width="2"/>`);
    parts.push(`<text x="${right + 36}" y="${ly + 4}" font-size="10">${escapeXml(label)}</text>`);
  });

  parts.push("</svg>");
  return parts.join("\n");
}
