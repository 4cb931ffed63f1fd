import { describe, expect, it } from "vitest";

import {
  cyclotomicPoly,
  eulerPhi,
  parseCycExpression,
  toCanonicalJson,
} from "../src/cyclotomic.js";
import { Rat } from "../src/rational.js";

describe("rationals", () => {
  it("normalizes to lowest terms with positive denominator", () => {
    expect(new Rat(6n, -4n).toString()).toBe("-3/2");
    expect(new Rat(0n, 7n).toString()).toBe("0");
    expect(Rat.parse("-10/5").toString()).toBe("-2");
  });

  it("does exact arithmetic", () => {
    const x = Rat.parse("1/3").add(Rat.parse("1/6"));
    expect(x.toString()).toBe("1/2");
    expect(Rat.parse("2/3").mul(Rat.parse("9/4")).toString()).toBe("3/2");
  });

  it("rejects junk", () => {
    expect(() => Rat.parse("1.5")).toThrow();
    expect(() => new Rat(1n, 0n)).toThrow();
  });
});

describe("cyclotomic polynomials", () => {
  it("matches the classical small cases", () => {
    expect(cyclotomicPoly(1)).toEqual([-1n, 1n]);
    expect(cyclotomicPoly(2)).toEqual([1n, 1n]);
    expect(cyclotomicPoly(4)).toEqual([1n, 0n, 1n]);
    expect(cyclotomicPoly(5)).toEqual([1n, 1n, 1n, 1n, 1n]);
    expect(cyclotomicPoly(12)).toEqual([1n, 0n, -1n, 0n, 1n]);
  });

  it("has degree phi(n)", () => {
    for (const n of [8, 9, 15, 20, 24, 40, 88, 105]) {
      expect(cyclotomicPoly(n).length - 1).toBe(eulerPhi(n));
    }
  });
});

describe("expression parsing and reduction", () => {
  it("parses bare rationals", () => {
    expect(toCanonicalJson(parseCycExpression("-7"))).toBe("-7");
    expect(toCanonicalJson(parseCycExpression("3/2"))).toBe("3/2");
    expect(toCanonicalJson(parseCycExpression("0"))).toBe("0");
  });

  it("keeps reduced power-basis terms as they are", () => {
    expect(toCanonicalJson(parseCycExpression("E(8)+E(8)^3"))).toEqual({
      N: 8,
      coeffs: { "1": "1", "3": "1" },
    });
    expect(toCanonicalJson(parseCycExpression("-2*E(11)^3+1/2"))).toEqual({
      N: 11,
      coeffs: { "0": "1/2", "3": "-2" },
    });
  });

  it("reduces exponents beyond the basis modulo the cyclotomic polynomial", () => {
    // all five nontrivial fifth roots sum to -1
    expect(
      toCanonicalJson(parseCycExpression("E(5)+E(5)^2+E(5)^3+E(5)^4")),
    ).toBe("-1");
    // E(5)^4 alone rewrites over 1, z, z^2, z^3
    expect(toCanonicalJson(parseCycExpression("E(5)^4"))).toEqual({
      N: 5,
      coeffs: { "0": "-1", "1": "-1", "2": "-1", "3": "-1" },
    });
    // exponents wrap modulo n, including negative ones
    expect(toCanonicalJson(parseCycExpression("E(7)^9"))).toEqual({
      N: 7,
      coeffs: { "2": "1" },
    });
    expect(parseCycExpression("E(7)^-1")).toEqual(parseCycExpression("E(7)^6"));
  });

  it("handles cancellation down to rationals", () => {
    expect(toCanonicalJson(parseCycExpression("E(4)-E(4)+5"))).toBe("5");
    // 2 cos(2 pi / 6): E(6) + E(6)^5 = 1
    expect(toCanonicalJson(parseCycExpression("E(6)+E(6)^5"))).toBe("1");
  });

  it("rejects malformed input", () => {
    expect(() => parseCycExpression("")).toThrow();
    expect(() => parseCycExpression("E(5)^")).toThrow();
    expect(() => parseCycExpression("E(5)+E(7)")).toThrow(/mixed conductors/);
    expect(() => parseCycExpression("2x+1")).toThrow();
    expect(() => parseCycExpression("E(0)")).toThrow();
  });
});
