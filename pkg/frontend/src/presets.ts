import { JudgmentCode } from "./saaty.js";

export const METRIC_LABELS = [
  "citeulike",
  "mendeley",
  "html_views",
  "pdf_downloads",
  "citations",
  "facebook",
  "twitter",
];

/**
 * Shipped judgment presets, as upper-triangle codes. Only the earliest and
 * latest phases have judgment matrices; the middle phases ship weight
 * constants on the server and have nothing to elicit.
 */
export const PRESET_CODES: Record<string, readonly JudgmentCode[]> = {
  "phase-1": [
    1, -4, -6, 4, -4, -6,
    -4, -6, 4, -4, -6,
    -4, 6, 3, 2,
    9, 4, 3,
    -4, -7,
    -2,
  ],
  "phase-4": [
    1, 3, 2, -7, 3, 2,
    3, 2, -7, 3, 2,
    -4, -9, 1, 1,
    -6, 1, 1,
    4, 3,
    -2,
  ],
};
