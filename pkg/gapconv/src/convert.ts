/** DumpRecord -> canonical character-table JSON.
 *
 * The cyclotomic expressions are re-expressed symbolically over the power
 * basis (never evaluated numerically); the table conductor is the least N
 * containing every value.  Output objects use a fixed key order, so the
 * emitted bytes are deterministic and converting twice is idempotent.
 */

import { parseCycExpression, toCanonicalJson } from "./cyclotomic.js";
import { DumpRecord, REQUIRED_PRIMES } from "./dump.js";
import { lcm } from "./rational.js";

export interface CanonicalTable {
  group: string;
  order: string;
  conductor: number;
  classes: {
    name: string;
    size: string;
    order: number;
    powermaps: Record<string, number>;
  }[];
  irreducibles: {
    name: string;
    degree: number;
    values: (string | { N: number; coeffs: Record<string, string> })[];
  }[];
}

export function convertRecord(dump: DumpRecord): CanonicalTable {
  let conductor = 1;
  const irreducibles = dump.irreducibles.map((irr) => {
    const values = irr.values.map((raw, ci) => {
      let value;
      try {
        value = parseCycExpression(raw);
      } catch (err) {
        throw new Error(
          `character ${irr.name}, class ${dump.names[ci]}: ${(err as Error).message}`,
        );
      }
      const json = toCanonicalJson(value);
      if (typeof json !== "string") conductor = lcm(conductor, json.N);
      return json;
    });
    return { name: irr.name, degree: irr.degree, values };
  });

  const classes = dump.names.map((name, i) => {
    const powermaps: Record<string, number> = {};
    for (const p of REQUIRED_PRIMES) powermaps[String(p)] = dump.powermaps.get(p)![i];
    return { name, size: dump.sizes[i], order: dump.orders[i], powermaps };
  });

  return {
    group: dump.group,
    order: dump.order,
    conductor,
    classes,
    irreducibles,
  };
}

/** Deterministic serialization (mirrors the primary fixtures' layout). */
export function tableToJson(table: CanonicalTable): string {
  return JSON.stringify(table, null, 1) + "\n";
}
