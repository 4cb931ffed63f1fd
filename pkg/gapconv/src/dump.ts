/** Parser for the plain-text character-table dump format.
 *
 * Layout (sentinel headers, one record per file):
 *
 *   GAPDUMP v1
 *   GROUP <name>
 *   ORDER <integer>
 *   NCLASSES <r>
 *   NAMES <r class names>
 *   SIZES <r integers>
 *   ORDERS <r integers>
 *   POWERMAP <p> <r 1-based class indices>     (for p = 2, 3, 5, 7, 11)
 *   IRR <name> <degree>
 *   <r lines, one cyclotomic expression per class>
 *   ENDIRR
 *   ...
 *   END
 *
 * Every parse error carries its 1-based line number.
 */

export const REQUIRED_PRIMES = [2, 3, 5, 7, 11] as const;

export interface DumpIrreducible {
  name: string;
  degree: number;
  values: string[]; // raw cyclotomic expressions
}

export interface DumpRecord {
  group: string;
  order: string; // may exceed Number range; kept textual
  nClasses: number;
  names: string[];
  sizes: string[];
  orders: number[];
  powermaps: Map<number, number[]>; // prime -> 0-based class indices
  irreducibles: DumpIrreducible[];
}

export class DumpParseError extends Error {
  constructor(
    readonly line: number,
    message: string,
  ) {
    super(`line ${line}: ${message}`);
  }
}

export function parseDump(text: string): DumpRecord {
  const lines = text.split(/\r?\n/);
  let pos = 0;

  const fail = (msg: string): never => {
    throw new DumpParseError(pos, msg);
  };
  const next = (): string => {
    while (pos < lines.length) {
      const line = lines[pos++].trim();
      if (line) return line;
    }
    return fail("unexpected end of file");
  };
  const expectHeader = (word: string): string[] => {
    const line = next();
    const parts = line.split(/\s+/);
    if (parts[0] !== word) fail(`expected ${word}, found ${JSON.stringify(line)}`);
    return parts.slice(1);
  };

  const magic = next();
  if (magic !== "GAPDUMP v1") fail(`bad magic ${JSON.stringify(magic)}`);

  const group = expectHeader("GROUP").join(" ");
  if (!group) fail("GROUP needs a name");
  const orderParts = expectHeader("ORDER");
  if (orderParts.length !== 1 || !/^\d+$/.test(orderParts[0])) fail("bad ORDER");
  const order = orderParts[0];
  const nParts = expectHeader("NCLASSES");
  const nClasses = Number(nParts[0]);
  if (!Number.isInteger(nClasses) || nClasses < 1) fail("bad NCLASSES");

  const names = expectHeader("NAMES");
  if (names.length !== nClasses) fail(`NAMES lists ${names.length} of ${nClasses} classes`);
  const sizes = expectHeader("SIZES");
  if (sizes.length !== nClasses || sizes.some((s) => !/^\d+$/.test(s)))
    fail("SIZES must list one integer per class");
  const orderStrs = expectHeader("ORDERS");
  if (orderStrs.length !== nClasses) fail("ORDERS must list one integer per class");
  const orders = orderStrs.map((s) => {
    const v = Number(s);
    if (!Number.isInteger(v) || v < 1) fail(`bad element order ${s}`);
    return v;
  });

  const powermaps = new Map<number, number[]>();
  for (const p of REQUIRED_PRIMES) {
    const parts = expectHeader("POWERMAP");
    const gotP = Number(parts[0]);
    if (gotP !== p)
      fail(`power maps must cover primes ${REQUIRED_PRIMES.join(", ")} in order; ` +
        `expected ${p}, found ${parts[0]}`);
    const entries = parts.slice(1);
    if (entries.length !== nClasses) fail(`POWERMAP ${p} lists ${entries.length} of ${nClasses} classes`);
    powermaps.set(
      p,
      entries.map((s) => {
        const idx = Number(s);
        if (!Number.isInteger(idx) || idx < 1 || idx > nClasses)
          fail(`POWERMAP ${p}: class index ${s} out of range`);
        return idx - 1;
      }),
    );
  }

  const irreducibles: DumpIrreducible[] = [];
  for (;;) {
    const line = next();
    if (line === "END") break;
    const parts = line.split(/\s+/);
    if (parts[0] !== "IRR") fail(`expected IRR or END, found ${JSON.stringify(line)}`);
    if (parts.length !== 3) fail("IRR needs a name and a degree");
    const degree = Number(parts[2]);
    if (!Number.isInteger(degree) || degree < 1) fail(`bad degree ${parts[2]}`);
    const values: string[] = [];
    for (let i = 0; i < nClasses; i++) values.push(next());
    const end = next();
    if (end !== "ENDIRR") fail(`expected ENDIRR, found ${JSON.stringify(end)}`);
    irreducibles.push({ name: parts[1], degree, values });
  }
  if (irreducibles.length === 0) fail("dump contains no irreducible characters");

  return { group, order, nClasses, names, sizes, orders, powermaps, irreducibles };
}
