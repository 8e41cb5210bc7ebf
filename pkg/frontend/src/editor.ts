import {
  JudgmentCode,
  codeToText,
  codeToValue,
  invertCode,
  isScaleCode,
} from "./saaty.js";

export interface MatrixDocument {
  n: number;
  labels: string[];
  upper: string[];
}

/**
 * Upper-triangle judgment store. Editing either cell of a pair rewrites the
 * stored judgment so that (i, j) and (j, i) are exact reciprocals by
 * construction; the diagonal is locked at 1.
 */
export class MatrixEditorState {
  readonly n: number;
  readonly labels: string[];
  private upper: JudgmentCode[];

  constructor(labels: string[], upperCodes?: readonly JudgmentCode[]) {
    if (labels.length < 2) throw new Error("need at least 2 criteria");
    this.n = labels.length;
    this.labels = [...labels];
    const size = (this.n * (this.n - 1)) / 2;
    if (upperCodes !== undefined) {
      if (upperCodes.length !== size) {
        throw new Error(`expected ${size} upper-triangle judgments`);
      }
      upperCodes.forEach((c) => {
        if (!isScaleCode(c)) throw new Error(`off-scale judgment code ${c}`);
      });
      this.upper = [...upperCodes];
    } else {
      this.upper = new Array(size).fill(1);
    }
  }

  private index(i: number, j: number): number {
    // row-major position of (i, j), i < j
    return (i * (2 * this.n - i - 1)) / 2 + (j - i - 1);
  }

  private checkCell(i: number, j: number): void {
    if (!Number.isInteger(i) || !Number.isInteger(j)
        || i < 0 || j < 0 || i >= this.n || j >= this.n) {
      throw new Error(`cell (${i}, ${j}) outside the ${this.n}x${this.n} matrix`);
    }
  }

  /** Judgment code at any cell; the diagonal is always 1. */
  codeAt(i: number, j: number): JudgmentCode {
    this.checkCell(i, j);
    if (i === j) return 1;
    if (i < j) return this.upper[this.index(i, j)];
    return invertCode(this.upper[this.index(j, i)]);
  }

  valueAt(i: number, j: number): number {
    return codeToValue(this.codeAt(i, j));
  }

  textAt(i: number, j: number): string {
    return codeToText(this.codeAt(i, j));
  }

  /**
   * Apply one judgment. Editing below the diagonal stores the reciprocal in
   * the upper triangle, so the mirror cell updates in the same step.
   */
  setJudgment(i: number, j: number, code: JudgmentCode): void {
    this.checkCell(i, j);
    if (i === j) throw new Error("diagonal is locked at 1");
    if (!isScaleCode(code)) throw new Error(`off-scale judgment code ${code}`);
    if (i < j) {
      this.upper[this.index(i, j)] = code;
    } else {
      this.upper[this.index(j, i)] = invertCode(code);
    }
  }

  fullMatrix(): number[][] {
    const m: number[][] = [];
    for (let i = 0; i < this.n; i++) {
      const row: number[] = [];
      for (let j = 0; j < this.n; j++) row.push(this.valueAt(i, j));
      m.push(row);
    }
    return m;
  }

  /** Matrix document in the exact text form the service parses. */
  toDocument(): MatrixDocument {
    const upper: string[] = [];
    for (let i = 0; i < this.n; i++) {
      for (let j = i + 1; j < this.n; j++) upper.push(this.textAt(i, j));
    }
    return { n: this.n, labels: [...this.labels], upper };
  }

  loadCodes(upperCodes: readonly JudgmentCode[]): void {
    const size = (this.n * (this.n - 1)) / 2;
    if (upperCodes.length !== size) {
      throw new Error(`expected ${size} upper-triangle judgments`);
    }
    upperCodes.forEach((c) => {
      if (!isScaleCode(c)) throw new Error(`off-scale judgment code ${c}`);
    });
    this.upper = [...upperCodes];
  }
}
