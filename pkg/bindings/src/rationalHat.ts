/**
 * Rational-hat barcode vectorization with analytic gradients, mirroring the
 * core engine: coordinate i sums 1/(1+|p-c_i|_1) - 1/(1+||r_i|-|p-c_i|_1|)
 * over bar points p.  Points are summed in lexicographically sorted order so
 * the output is independent of the multiset's presentation order.
 */

export type Point = readonly [number, number];

export interface RationalHatResult {
  /** k output coordinates */
  vector: number[];
  /** dPoints[b][coord][i] = d vector[i] / d bars[b][coord] */
  dPoints: number[][][];
  /** dCenters[i][coord] */
  dCenters: number[][];
  /** dRadii[i] */
  dRadii: number[];
}

export function rationalHat(
  bars: readonly Point[],
  centers: readonly Point[],
  radii: readonly number[],
): RationalHatResult {
  const k = centers.length;
  if (k < 1 || radii.length !== k) {
    throw new Error(`need k >= 1 centers with matching radii (got ${k}/${radii.length})`);
  }
  const nb = bars.length;
  const vector = new Array<number>(k).fill(0);
  const dCenters = centers.map(() => [0, 0]);
  const dRadii = new Array<number>(k).fill(0);
  const dPoints: number[][][] = bars.map(() => [new Array(k).fill(0), new Array(k).fill(0)]);
  if (nb === 0) {
    return { vector, dPoints, dCenters, dRadii };
  }

  const order = bars
    .map((_, idx) => idx)
    .sort((a, b) => bars[a]![0] - bars[b]![0] || bars[a]![1] - bars[b]![1]);

  for (const b of order) {
    const [px, py] = bars[b]!;
    for (let i = 0; i < k; i++) {
      const dx = px - centers[i]![0];
      const dy = py - centers[i]![1];
      const d = Math.abs(dx) + Math.abs(dy);
      const r = Math.abs(radii[i]!);
      const a = r - d;
      vector[i]! += 1 / (1 + d) - 1 / (1 + Math.abs(a));

      const dfdd = -((1 + d) ** -2) - Math.sign(a) * (1 + Math.abs(a)) ** -2;
      const gx = dfdd * Math.sign(dx);
      const gy = dfdd * Math.sign(dy);
      dPoints[b]![0]![i] = gx;
      dPoints[b]![1]![i] = gy;
      dCenters[i]![0]! -= gx;
      dCenters[i]![1]! -= gy;
      dRadii[i]! += Math.sign(a) * (1 + Math.abs(a)) ** -2 * Math.sign(radii[i]!);
    }
  }
  return { vector, dPoints, dCenters, dRadii };
}
