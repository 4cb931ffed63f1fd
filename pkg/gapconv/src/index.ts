export { Rat } from "./rational.js";
export {
  cyclotomicPoly,
  eulerPhi,
  parseCycExpression,
  toCanonicalJson,
} from "./cyclotomic.js";
export { parseDump, DumpParseError, REQUIRED_PRIMES } from "./dump.js";
export { convertRecord, tableToJson } from "./convert.js";
export type { DumpRecord, DumpIrreducible } from "./dump.js";
export type { CanonicalTable } from "./convert.js";
