import { mkdtemp, rm, writeFile } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { rationalHat, runCli, type Point } from "../src/index.js";

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function close(a: number, b: number, tol = 1e-12): boolean {
  return Math.abs(a - b) <= tol * Math.max(1, Math.abs(a), Math.abs(b));
}

describe("rationalHat", () => {
  it("bar at the center with radius one gives 0.5", () => {
    const out = rationalHat([[1.0, 2.0]], [[1.0, 2.0]], [1.0]);
    expect(out.vector[0]).toBeCloseTo(0.5, 15);
  });

  it("empty barcode gives a zero vector", () => {
    const out = rationalHat([], [[0, 0], [1, 1]], [1, 2]);
    expect(out.vector).toEqual([0, 0]);
    expect(out.dRadii).toEqual([0, 0]);
  });

  it("is independent of bar order", () => {
    const bars: Point[] = [[0.3, 0.8], [1.4, 0.1], [0.9, 0.5]];
    const centers: Point[] = [[0.5, 0.5]];
    const a = rationalHat(bars, centers, [0.7]);
    const b = rationalHat([bars[2]!, bars[0]!, bars[1]!], centers, [0.7]);
    expect(b.vector[0]).toBe(a.vector[0]);
  });

  it("matches the engine to 1e-12 on random configurations", async () => {
    const rng = mulberry32(12345);
    const work = await mkdtemp(join(tmpdir(), "extph-hat-"));
    try {
      for (let trial = 0; trial < 30; trial++) {
        const nb = 1 + Math.floor(rng() * 5);
        const k = 1 + Math.floor(rng() * 4);
        const bars = Array.from({ length: nb }, () => [rng() * 3, rng() * 3] as [number, number]);
        const centers = Array.from({ length: k }, () => [rng() * 3, rng() * 3] as [number, number]);
        const radii = Array.from({ length: k }, () => 0.1 + rng() * 1.9);

        const barsFile = join(work, `bars${trial}.json`);
        const paramsFile = join(work, `params${trial}.json`);
        await writeFile(barsFile, JSON.stringify({ bars }));
        await writeFile(paramsFile, JSON.stringify({ centers, radii }));
        const res = await runCli(["hat", "--bars", barsFile, "--params", paramsFile]);
        expect(res.code).toBe(0);
        const ref = JSON.parse(res.stdout);

        const mine = rationalHat(bars, centers, radii);
        for (let i = 0; i < k; i++) {
          expect(close(mine.vector[i]!, ref.vector[i])).toBe(true);
          expect(close(mine.dRadii[i]!, ref.d_radii[i])).toBe(true);
          for (let c = 0; c < 2; c++) {
            expect(close(mine.dCenters[i]![c]!, ref.d_centers[i][c])).toBe(true);
          }
        }
        for (let b = 0; b < nb; b++) {
          for (let c = 0; c < 2; c++) {
            for (let i = 0; i < k; i++) {
              expect(close(mine.dPoints[b]![c]![i]!, ref.d_points[b][c][i])).toBe(true);
            }
          }
        }
      }
    } finally {
      await rm(work, { recursive: true, force: true });
    }
  }, 120_000);
});
