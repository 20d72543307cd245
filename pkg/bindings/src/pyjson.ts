/**
 * Canonical serialization matching Python's json.dumps defaults, so barcodes
 * re-serialized here are byte-equal to the files the extph CLI writes.
 *
 * JavaScript and CPython both print the shortest round-tripping digit string
 * for a double; they differ only in presentation (JS drops ".0" on integral
 * floats and switches to exponent notation at different magnitudes).  pyFloat
 * re-renders the JS digits with CPython's rules: fixed notation while the
 * decimal exponent lies in [-4, 16), otherwise scientific with a signed,
 * two-digit-padded exponent.
 */

export function pyFloat(x: number): string {
  if (!Number.isFinite(x)) {
    throw new Error(`non-finite value ${x} has no canonical form`);
  }
  if (x === 0) {
    return Object.is(x, -0) ? "-0.0" : "0.0";
  }
  const sign = x < 0 ? "-" : "";
  const exp = Math.abs(x).toExponential(); // shortest digits, e.g. "6.25e-5"
  const match = /^(\d)(?:\.(\d+))?e([+-]\d+)$/.exec(exp);
  if (!match) {
    throw new Error(`unexpected exponential form ${exp}`);
  }
  const digits = match[1]! + (match[2] ?? "");
  const e = parseInt(match[3]!, 10);
  if (e >= -4 && e < 16) {
    if (e >= digits.length - 1) {
      return sign + digits + "0".repeat(e - digits.length + 1) + ".0";
    }
    if (e >= 0) {
      return sign + digits.slice(0, e + 1) + "." + digits.slice(e + 1);
    }
    return sign + "0." + "0".repeat(-e - 1) + digits;
  }
  const mantissa = digits.length > 1 ? digits[0] + "." + digits.slice(1) : digits;
  const esign = e < 0 ? "-" : "+";
  const emag = String(Math.abs(e)).padStart(2, "0");
  return `${sign}${mantissa}e${esign}${emag}`;
}

export function pyInt(x: number): string {
  if (!Number.isInteger(x)) {
    throw new Error(`expected integer, got ${x}`);
  }
  return String(x);
}

/** "[a, b, c]" with Python's default ", " separator. */
export function pyList(items: string[]): string {
  return `[${items.join(", ")}]`;
}

/** '{"k": v, ...}' preserving entry order, Python default separators. */
export function pyObject(entries: Array<[string, string]>): string {
  return `{${entries.map(([k, v]) => `${JSON.stringify(k)}: ${v}`).join(", ")}}`;
}
