import { spawnSync } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

/** Flat test report, mirroring the CLI's JSON output field for field. */
export interface BoundResult {
  N: number;
  K: number;
  X: number;
  L: number;
  statistic: number;
  cutoff: number;
  k_at_cutoff: number;
  pvalue: number | null;
  lipson_bound: number;
  escore: number | null;
  escore_cutoff: number | null;
  psi: number;
}

export interface CutoffRow {
  n: number;
  k_n: number;
  hg_pvalue: number;
  fold_enrichment: number;
}

export interface TestOptions {
  X?: number;
  L?: number;
  psi?: number;
  boundOnly?: boolean;
  invert?: boolean;
}

/** List entries outside {0,1}, empty input, or unparseable data (CLI exit 2). */
export class InputFormatError extends Error {}

/** Parameter outside its legal range, e.g. psi = 0 or L > N (CLI exit 3). */
export class DomainViolationError extends Error {}

const CLI = process.env.RANKENRICH_CLI ?? "rankenrich";

function checkList(v: ArrayLike<number>): void {
  if (v.length === 0) throw new InputFormatError("empty list");
  for (let i = 0; i < v.length; i++) {
    if (v[i] !== 0 && v[i] !== 1) {
      throw new InputFormatError(`entry ${i} is ${v[i]}, expected 0 or 1`);
    }
  }
}

function countOnes(v: ArrayLike<number>): number {
  let k = 0;
  for (let i = 0; i < v.length; i++) k += v[i];
  return k;
}

function runCli(args: string[]): string {
  const res = spawnSync(CLI, args, { encoding: "utf-8" });
  if (res.error) {
    throw new Error(`failed to launch ${CLI}: ${res.error.message}`);
  }
  if (res.status === 2) throw new InputFormatError(res.stderr.trim());
  if (res.status === 3) throw new DomainViolationError(res.stderr.trim());
  if (res.status !== 0) {
    throw new Error(`${CLI} exited with ${res.status}: ${res.stderr.trim()}`);
  }
  return res.stdout;
}

function withListFile<T>(v: ArrayLike<number>, fn: (dir: string, path: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "rankenrich-"));
  try {
    const path = join(dir, "list.txt");
    writeFileSync(path, Array.from(v).join("\n") + "\n");
    return fn(dir, path);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

/**
 * Run the XL-mHG enrichment test on a ranked binary list.
 *
 * All computation happens in the rankenrich CLI; this wrapper only moves
 * data in and out, so results are identical to the command line down to
 * the 12-significant-digit serialization.
 *
 * Degenerate lists (all zeros or all ones) never carry an enrichment
 * signal; they are answered locally with statistic 1 and p-value 1
 * because the CLI rejects lists that lack both label values.
 */
export function xlmhg_test(v: ArrayLike<number>, opts: TestOptions = {}): BoundResult {
  checkList(v);
  const K = countOnes(v);
  const psi = opts.psi ?? 0.05;
  if (K === 0 || K === v.length) {
    const L = opts.L ?? v.length;
    return {
      N: v.length,
      K,
      X: opts.X ?? 0,
      L,
      statistic: 1.0,
      cutoff: 0,
      k_at_cutoff: 0,
      pvalue: opts.boundOnly ? null : 1.0,
      lipson_bound: 1.0,
      escore: null,
      escore_cutoff: null,
      psi,
    };
  }
  return withListFile(v, (_dir, path) => {
    const args = ["test", "--input", path, "--format", "json", "--psi", String(psi)];
    if (opts.X !== undefined) args.push("--x", String(opts.X));
    if (opts.L !== undefined) args.push("--l", String(opts.L));
    if (opts.boundOnly) args.push("--bound-only");
    if (opts.invert) args.push("--invert");
    return JSON.parse(runCli(args)) as BoundResult;
  });
}

/** Per-cutoff table: running count, tail p-value, and fold enrichment. */
export function perCutoff(v: ArrayLike<number>, invert = false): CutoffRow[] {
  checkList(v);
  if (countOnes(v) === 0 || countOnes(v) === v.length) {
    throw new InputFormatError("list must contain at least one 1 and one 0");
  }
  return withListFile(v, (dir, path) => {
    const csvPath = join(dir, "cutoffs.csv");
    runCli(["test", "--input", path, "--per-cutoff", csvPath]);
    const lines = readFileSync(csvPath, "utf-8").trim().split("\n");
    return lines.slice(1).map((line) => {
      const [n, k, p, e] = line.split(",");
      return {
        n: Number(n),
        k_n: Number(k),
        hg_pvalue: Number(p),
        fold_enrichment: Number(e),
      };
    });
  });
}
