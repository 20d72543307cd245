/**
 * Node/TypeScript binding for the extph extended-persistence engine.
 *
 * The engine is consumed exclusively through its external interfaces: graph
 * JSON in, barcode JSON out, via the extph CLI in a subprocess.  The async
 * API never blocks the JS event loop while the native computation runs.
 * Data crosses the boundary as JSON (one documented copy each way).
 */

import { mkdir, mkdtemp, readFile, rm, writeFile } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { pyFloat, pyInt, pyList, pyObject } from "./pyjson.js";
import { runCli } from "./runner.js";

export { rationalHat } from "./rationalHat.js";
export type { Point, RationalHatResult } from "./rationalHat.js";
export { pyFloat } from "./pyjson.js";
export { cliCommand, runCli } from "./runner.js";

export type Edge = readonly [number, number];

export interface BoundBar {
  birth: number;
  death: number;
  birthSimplex: number;
  deathSimplex: number;
}

export interface BoundBarcode {
  b0Low: BoundBar[];
  b0Up: BoundBar[];
  b0Ext: BoundBar[];
  b1Ext: BoundBar[];
  /** vertex-id cycles, aligned one-to-one with b1Ext */
  cycles: number[][];
}

export interface ComputeOptions {
  withCycles?: boolean;
  workers?: number;
  epsilon?: number;
}

/** Graph JSON in the engine's canonical schema. */
export function graphToJson(edges: readonly Edge[], vertexValues: readonly number[]): string {
  return JSON.stringify({
    num_vertices: vertexValues.length,
    edges: edges.map(([u, v]) => [u, v]),
    vertex_values: vertexValues,
  });
}

function parseBars(rows: number[][]): BoundBar[] {
  return rows.map(([birth, death, birthSimplex, deathSimplex]) => ({
    birth: birth!,
    death: death!,
    birthSimplex: birthSimplex!,
    deathSimplex: deathSimplex!,
  }));
}

export function parseBarcode(text: string): BoundBarcode {
  const obj = JSON.parse(text);
  return {
    b0Low: parseBars(obj.b0_low),
    b0Up: parseBars(obj.b0_up),
    b0Ext: parseBars(obj.b0_ext),
    b1Ext: parseBars(obj.b1_ext),
    cycles: obj.cycles,
  };
}

/** Re-serialize a barcode byte-identically to the engine's own output. */
export function canonicalBarcodeJson(bc: BoundBarcode): string {
  const bars = (list: BoundBar[]) =>
    pyList(
      list.map((b) =>
        pyList([pyFloat(b.birth), pyFloat(b.death), pyInt(b.birthSimplex), pyInt(b.deathSimplex)]),
      ),
    );
  return pyObject([
    ["b0_low", bars(bc.b0Low)],
    ["b0_up", bars(bc.b0Up)],
    ["b0_ext", bars(bc.b0Ext)],
    ["b1_ext", bars(bc.b1Ext)],
    ["cycles", pyList(bc.cycles.map((c) => pyList(c.map(pyInt))))],
  ]);
}

/**
 * Batch extended persistence.  Each graph i is edgeLists[i] plus
 * vertexValues[i]; results align positionally.  Per-graph failures (e.g.
 * duplicate vertex values) reject with an error naming the graph index.
 */
export async function computeBatch(
  edgeLists: readonly (readonly Edge[])[],
  vertexValues: readonly (readonly number[])[],
  options: ComputeOptions = {},
): Promise<BoundBarcode[]> {
  if (edgeLists.length !== vertexValues.length) {
    throw new Error(
      `shape mismatch: ${edgeLists.length} edge lists vs ${vertexValues.length} value arrays`,
    );
  }
  if (edgeLists.length === 0) {
    return [];
  }
  const work = await mkdtemp(join(tmpdir(), "extph-"));
  try {
    const inDir = join(work, "in");
    const outDir = join(work, "out");
    await mkdir(inDir, { recursive: true });
    const names: string[] = [];
    for (let i = 0; i < edgeLists.length; i++) {
      const name = `graph_${String(i).padStart(5, "0")}.json`;
      names.push(name);
      await writeFile(join(inDir, name), graphToJson(edgeLists[i]!, vertexValues[i]!) + "\n");
    }
    const args = ["compute", inDir, "--out", outDir, "--workers", String(options.workers ?? 1)];
    if (options.withCycles === false) {
      args.push("--no-with-cycles");
    }
    if (options.epsilon !== undefined) {
      args.push("--epsilon", String(options.epsilon));
    }
    const res = await runCli(args);
    if (res.code !== 0) {
      throw new Error(decodeFailure(res.stderr, names));
    }
    const out: BoundBarcode[] = [];
    for (const name of names) {
      const text = await readFile(join(outDir, name.replace(".json", ".barcode.json")), "utf8");
      out.push(parseBarcode(text));
    }
    return out;
  } finally {
    await rm(work, { recursive: true, force: true });
  }
}

function decodeFailure(stderr: string, names: string[]): string {
  const line = stderr.trim();
  for (let i = 0; i < names.length; i++) {
    if (line.includes(names[i]!)) {
      return `graph ${i}: ${line}`;
    }
  }
  return line || "extph compute failed";
}
