/** Percent formatting with the same signif-2 rule the server uses.
 *
 * A probability is shown as a percentage rounded to two significant figures
 * with ties resolved half-to-even on the exact binary value, then printed in
 * plain (non-exponential) notation with trailing zeros dropped: 0.892925 ->
 * "89%", 0.997 -> "100%", 0.0086 -> "0.86%". Matching the server's strings
 * byte-for-byte is a hard requirement, so the rounding works on the full
 * decimal expansion of the double rather than on a re-rounded float.
 */

/** Digits of `x` (positive, finite) with enough precision to separate any
 * double from the nearest two-significant-figure tie. Returns the mantissa
 * digit string and the decimal exponent of its leading digit. */
function exactDigits(x: number): { digits: string; exp: number } {
  // 26 significant digits: adjacent doubles differ within the first ~17,
  // so only a double that IS an exact decimal tie can produce "...5000..."
  const m = x.toExponential(25).match(/^(\d)\.(\d+)e([+-]\d+)$/);
  if (!m) {
    throw new Error(`unexpected number format: ${x}`);
  }
  return { digits: m[1] + m[2], exp: parseInt(m[3], 10) };
}

/** Lay out significant digits as a plain decimal string; `pointPos` is the
 * number of digits before the decimal point (may be <= 0). */
function plainString(digits: string, pointPos: number): string {
  if (pointPos >= digits.length) {
    return digits + "0".repeat(pointPos - digits.length);
  }
  if (pointPos <= 0) {
    return "0." + "0".repeat(-pointPos) + digits;
  }
  return digits.slice(0, pointPos) + "." + digits.slice(pointPos);
}

/** Format a probability in [0, 1] as a two-significant-figure percentage. */
export function formatPercent2sf(p: number): string {
  const x = p * 100;
  if (x === 0) {
    return "0%";
  }
  if (!isFinite(x) || x < 0) {
    throw new Error(`probability out of range: ${p}`);
  }
  const { digits, exp } = exactDigits(x);
  let first2 = parseInt(digits.slice(0, 2), 10);
  const rest = digits.slice(2);
  const half = "5" + "0".repeat(rest.length - 1);
  if (rest > half || (rest === half && first2 % 2 === 1)) {
    first2 += 1;
  }
  let k = exp;
  if (first2 === 100) {
    first2 = 10;
    k += 1;
  }
  // value is first2 / 10 * 10^k; strip the trailing zero of e.g. "40" -> "4"
  // so "0.50%" prints as "0.5%" while plainString re-pads integers like 40.
  let sig = String(first2);
  if (sig.endsWith("0")) {
    sig = sig.slice(0, 1);
  }
  return plainString(sig, k + 1) + "%";
}
