import { execFile } from "node:child_process";
import { promisify } from "node:util";

import { describe, expect, it } from "vitest";

import { pyFloat } from "../src/pyjson.js";

const run = promisify(execFile);

const TRICKY = [
  0.0, -0.0, 1.0, -1.0, 0.5, 2.0, 2.001, 0.001,
  1e-4, 1e-5, 6.25e-5, 9.999999999999999e-5, 1.0000000000000001e-4,
  1e15, 1e16, 9999999999999998.0, 1e17, 1.2e16,
  0.1, 0.2, 0.1 + 0.2, 1 / 3, 123456789.123456789,
  1e100, -2.5e-7,
];

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

function randomDoubles(count: number): number[] {
  const rng = mulberry32(2024);
  const buf = new DataView(new ArrayBuffer(8));
  const out: number[] = [];
  while (out.length < count) {
    buf.setUint32(0, Math.floor(rng() * 4294967296));
    buf.setUint32(4, Math.floor(rng() * 4294967296));
    const x = buf.getFloat64(0);
    if (Number.isFinite(x)) {
      out.push(x);
    }
  }
  return out;
}

describe("pyFloat", () => {
  it("matches CPython repr on tricky and random doubles", async () => {
    const values = [
      ...TRICKY.filter((x) => typeof x === "number" && Number.isFinite(x)),
      5e-324, 2.2250738585072014e-308, 1.7976931348623157e308,
      ...randomDoubles(200),
    ];
    // round-trip through the shortest form so Python parses the same double;
    // toExponential drops the sign of -0, so special-case it
    const payload = JSON.stringify(
      values.map((x) => (Object.is(x, -0) ? "-0.0" : x.toExponential())),
    );
    const script =
      "import sys, json\n" +
      "vals = json.load(sys.stdin)\n" +
      "print(json.dumps([repr(float(v)) for v in vals]))\n";
    const child = run("python3", ["-c", script]);
    child.child.stdin!.write(payload);
    child.child.stdin!.end();
    const { stdout } = await child;
    const expected: string[] = JSON.parse(stdout);
    values.forEach((x, i) => {
      expect(pyFloat(x), `value ${x} (case ${i})`).toBe(expected[i]);
    });
  }, 60_000);

  it("rejects non-finite values", () => {
    expect(() => pyFloat(Infinity)).toThrow();
    expect(() => pyFloat(NaN)).toThrow();
  });
});
