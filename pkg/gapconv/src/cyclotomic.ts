/** Symbolic cyclotomic values: parse sums of c*E(N)^k and re-express them
 * over the canonical power basis of Q(zeta_N), reducing modulo the N-th
 * cyclotomic polynomial.  No numerics anywhere: coefficients are exact
 * bigint rationals, and the translation is lossless by construction. */

import { Rat } from "./rational.js";

export function factorize(n: number): Map<number, number> {
  if (n < 1) throw new Error(`cannot factorize ${n}`);
  const out = new Map<number, number>();
  let d = 2;
  while (d * d <= n) {
    while (n % d === 0) {
      out.set(d, (out.get(d) ?? 0) + 1);
      n /= d;
    }
    d += d === 2 ? 1 : 2;
  }
  if (n > 1) out.set(n, (out.get(n) ?? 0) + 1);
  return out;
}

export function eulerPhi(n: number): number {
  let phi = 1;
  for (const [p, e] of factorize(n)) phi *= (p - 1) * p ** (e - 1);
  return phi;
}

export function divisors(n: number): number[] {
  let divs = [1];
  for (const [p, e] of factorize(n)) {
    const next: number[] = [];
    for (const d of divs) for (let k = 0, q = 1; k <= e; k++, q *= p) next.push(d * q);
    divs = next;
  }
  return divs.sort((a, b) => a - b);
}

const polyCache = new Map<number, bigint[]>();

/** Coefficients (constant first) of the n-th cyclotomic polynomial. */
export function cyclotomicPoly(n: number): bigint[] {
  const hit = polyCache.get(n);
  if (hit) return hit;
  // divide x^n - 1 by Phi_d for every proper divisor d
  let poly: bigint[] = new Array(n + 1).fill(0n);
  poly[0] = -1n;
  poly[n] = 1n;
  for (const d of divisors(n)) {
    if (d === n) continue;
    poly = polyDivExact(poly, cyclotomicPoly(d));
  }
  polyCache.set(n, poly);
  return poly;
}

function polyDivExact(num: bigint[], den: bigint[]): bigint[] {
  const work = num.slice();
  const dShift = den.length - 1;
  const quot: bigint[] = new Array(work.length - dShift).fill(0n);
  for (let i = quot.length - 1; i >= 0; i--) {
    const c = work[i + dShift];
    if (c !== 0n) {
      quot[i] = c; // divisor is monic
      for (let j = 0; j < den.length; j++) work[i + j] -= c * den[j];
    }
  }
  for (let j = 0; j < dShift; j++) {
    if (work[j] !== 0n) throw new Error("cyclotomic division left a remainder");
  }
  return quot;
}

const rowCache = new Map<number, bigint[][]>();

/** x^e mod Phi_n for phi(n) <= e < n, as integer coefficient rows. */
function powRow(n: number, e: number): bigint[] {
  const phi = eulerPhi(n);
  let rows = rowCache.get(n);
  if (!rows) {
    const seed = cyclotomicPoly(n).slice(0, phi).map((c) => -c);
    rows = [seed];
    rowCache.set(n, rows);
  }
  while (rows.length <= e - phi) {
    const prev = rows[rows.length - 1];
    const next: bigint[] = new Array(phi).fill(0n);
    for (let j = 0; j + 1 < phi; j++) next[j + 1] = prev[j];
    const lead = prev[phi - 1];
    if (lead !== 0n) {
      const first = rows[0];
      for (let j = 0; j < phi; j++) next[j] += lead * first[j];
    }
    rows.push(next);
  }
  return rows[e - phi];
}

/** A parsed term c * E(n)^k. */
export interface CycTerm {
  coeff: Rat;
  n: number;
  exp: number;
}

/** A cyclotomic value in canonical form: conductor + power-basis coords. */
export interface CycValue {
  n: number;
  coeffs: Rat[]; // length phi(n)
}

/** Reduce a sum of terms with a common conductor to the power basis. */
export function reduceTerms(n: number, terms: CycTerm[]): CycValue {
  const phi = eulerPhi(n);
  const coeffs: Rat[] = new Array(phi).fill(Rat.zero);
  for (const t of terms) {
    if (t.coeff.isZero()) continue;
    const e = ((t.exp % n) + n) % n; // E(n)^n = 1
    if (e < phi) {
      coeffs[e] = coeffs[e].add(t.coeff);
    } else {
      const row = powRow(n, e);
      for (let j = 0; j < phi; j++) {
        if (row[j] !== 0n) coeffs[j] = coeffs[j].add(t.coeff.mul(new Rat(row[j])));
      }
    }
  }
  return { n, coeffs };
}

export function isRational(v: CycValue): boolean {
  return v.coeffs.slice(1).every((c) => c.isZero());
}

/** Canonical JSON form matching the primary toolkit's serialization:
 * a bare rational string, or {"N": n, "coeffs": {exp: rational}}. */
export function toCanonicalJson(v: CycValue): string | { N: number; coeffs: Record<string, string> } {
  if (isRational(v)) return v.coeffs[0].toString();
  const coeffs: Record<string, string> = {};
  v.coeffs.forEach((c, j) => {
    if (!c.isZero()) coeffs[String(j)] = c.toString();
  });
  return { N: v.n, coeffs };
}

// ---------------------------------------------------------------------------
// the expression grammar:  expr := [+-] term ([+-] term)*
//   term := rat | [rat *] atom
//   atom := E(int) [^ int]
//   rat  := int [/ int]

const TERM_RE =
  /^(?:(\d+(?:\/\d+)?)\*)?E\((\d+)\)(?:\^(-?\d+))?$|^(\d+(?:\/\d+)?)$/;

/** Parse one CAS-style cyclotomic expression, e.g. "-E(5)^2-E(5)^3" or
 * "1/2+3*E(8)^3" or "-7".  All E() terms must share one conductor. */
export function parseCycExpression(text: string): CycValue {
  const src = text.replace(/\s+/g, "");
  if (!src) throw new Error("empty cyclotomic expression");
  // split into signed chunks
  const chunks: { sign: 1 | -1; body: string }[] = [];
  let i = 0;
  while (i < src.length) {
    let sign: 1 | -1 = 1;
    if (src[i] === "+" || src[i] === "-") {
      sign = src[i] === "-" ? -1 : 1;
      i++;
    } else if (chunks.length > 0) {
      throw new Error(`expected + or - at offset ${i} in ${JSON.stringify(text)}`);
    }
    let j = i;
    while (j < src.length && src[j] !== "+" && src[j] !== "-") j++;
    // a '-' inside E(n)^-k belongs to the exponent
    if (j < src.length && src[j] === "-" && src[j - 1] === "^") {
      j++;
      while (j < src.length && /\d/.test(src[j])) j++;
    }
    if (j === i) throw new Error(`empty term in ${JSON.stringify(text)}`);
    chunks.push({ sign, body: src.slice(i, j) });
    i = j;
  }

  const terms: CycTerm[] = [];
  let conductor = 1;
  for (const { sign, body } of chunks) {
    const m = TERM_RE.exec(body);
    if (!m) throw new Error(`cannot parse term ${JSON.stringify(body)} in ${JSON.stringify(text)}`);
    if (m[4] !== undefined) {
      const c = Rat.parse(m[4]);
      terms.push({ coeff: sign < 0 ? c.neg() : c, n: 1, exp: 0 });
      continue;
    }
    const coeff = m[1] === undefined ? Rat.one : Rat.parse(m[1]);
    const n = Number(m[2]);
    if (!Number.isInteger(n) || n < 1) throw new Error(`bad conductor in ${body}`);
    const exp = m[3] === undefined ? 1 : Number(m[3]);
    if (conductor !== 1 && n !== 1 && n !== conductor) {
      throw new Error(
        `mixed conductors ${conductor} and ${n} in ${JSON.stringify(text)}`,
      );
    }
    if (n !== 1) conductor = n;
    terms.push({ coeff: sign < 0 ? coeff.neg() : coeff, n, exp });
  }

  // rational-only terms live at exponent 0 of whatever conductor won
  const lifted = terms.map((t) =>
    t.n === conductor ? t : { coeff: t.coeff, n: conductor, exp: 0 },
  );
  return reduceTerms(conductor, lifted);
}
