/** Exact rationals over bigint, always in lowest terms, denominator > 0. */

export class Rat {
  readonly num: bigint;
  readonly den: bigint;

  constructor(num: bigint, den: bigint = 1n) {
    if (den === 0n) throw new Error("zero denominator");
    if (den < 0n) {
      num = -num;
      den = -den;
    }
    const g = gcd(num < 0n ? -num : num, den);
    this.num = g === 0n ? 0n : num / (g || 1n);
    this.den = g === 0n ? 1n : den / (g || 1n);
  }

  static zero = new Rat(0n);
  static one = new Rat(1n);

  add(other: Rat): Rat {
    return new Rat(this.num * other.den + other.num * this.den, this.den * other.den);
  }

  mul(other: Rat): Rat {
    return new Rat(this.num * other.num, this.den * other.den);
  }

  neg(): Rat {
    return new Rat(-this.num, this.den);
  }

  isZero(): boolean {
    return this.num === 0n;
  }

  isInteger(): boolean {
    return this.den === 1n;
  }

  equals(other: Rat): boolean {
    return this.num === other.num && this.den === other.den;
  }

  /** Canonical string: "p" for integers, "p/q" otherwise. */
  toString(): string {
    return this.den === 1n ? this.num.toString() : `${this.num}/${this.den}`;
  }

  /** Parse "p" or "p/q" (optional sign, no whitespace). */
  static parse(text: string): Rat {
    const m = /^([+-]?\d+)(?:\/(\d+))?$/.exec(text.trim());
    if (!m) throw new Error(`not a rational literal: ${JSON.stringify(text)}`);
    return new Rat(BigInt(m[1]), m[2] === undefined ? 1n : BigInt(m[2]));
  }
}

export function gcd(a: bigint, b: bigint): bigint {
  while (b) {
    [a, b] = [b, a % b];
  }
  return a < 0n ? -a : a;
}

export function lcm(a: number, b: number): number {
  if (a === 0 || b === 0) return 0;
  return (a / gcdNum(a, b)) * b;
}

export function gcdNum(a: number, b: number): number {
  while (b) [a, b] = [b, a % b];
  return Math.abs(a);
}
