/**
 * Discrete judgment scale. A judgment is stored as an integer code so that
 * reciprocals stay exact: +k means k, -k means 1/k, and 1 is its own
 * reciprocal. The picker offers exactly these codes, so off-scale values
 * cannot be entered at all.
 */

export type JudgmentCode = number;

export const SCALE_CODES: readonly JudgmentCode[] = [
  9, 8, 7, 6, 5, 4, 3, 2, 1, -2, -3, -4, -5, -6, -7, -8, -9,
];

export function isScaleCode(code: number): boolean {
  return SCALE_CODES.includes(code);
}

export function invertCode(code: JudgmentCode): JudgmentCode {
  return code === 1 ? 1 : -code;
}

export function codeToValue(code: JudgmentCode): number {
  return code > 0 ? code : 1 / -code;
}

/** Exact text form understood by the service ("3", "1/3"). */
export function codeToText(code: JudgmentCode): string {
  return code > 0 ? String(code) : `1/${-code}`;
}
