import { readFileSync } from "node:fs";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { convertRecord, tableToJson } from "../src/convert.js";
import { DumpParseError, parseDump } from "../src/dump.js";

const FIXTURES = join(__dirname, "..", "fixtures");

const S3_DUMP = readFileSync(join(FIXTURES, "s3.dump"), "utf8");

describe("dump parsing", () => {
  it("parses the S3 dump", () => {
    const rec = parseDump(S3_DUMP);
    expect(rec.group).toBe("S3");
    expect(rec.order).toBe("6");
    expect(rec.nClasses).toBe(3);
    expect(rec.names).toEqual(["1a", "2a", "3a"]);
    expect(rec.orders).toEqual([1, 2, 3]);
    expect(rec.powermaps.get(2)).toEqual([0, 0, 2]);
    expect(rec.irreducibles.map((x) => x.degree)).toEqual([1, 1, 2]);
  });

  it("reports the line number on parse failures", () => {
    const broken = S3_DUMP.replace("SIZES 1 3 2", "SIZES 1 3");
    try {
      parseDump(broken);
      expect.unreachable();
    } catch (err) {
      expect(err).toBeInstanceOf(DumpParseError);
      expect((err as DumpParseError).line).toBe(6);
      expect((err as Error).message).toMatch(/SIZES/);
    }
  });

  it("aborts when a required power map is missing", () => {
    const broken = S3_DUMP.replace(/POWERMAP 7 .*\n/, "");
    expect(() => parseDump(broken)).toThrow(/expected 7/);
  });

  it("rejects out-of-range power-map indices", () => {
    const broken = S3_DUMP.replace("POWERMAP 2 1 1 3", "POWERMAP 2 1 1 4");
    expect(() => parseDump(broken)).toThrow(/out of range/);
  });

  it("requires consistent class counts across sections", () => {
    const broken = S3_DUMP.replace("NAMES 1a 2a 3a", "NAMES 1a 2a 3a 4a");
    expect(() => parseDump(broken)).toThrow(/NAMES/);
  });
});

describe("conversion", () => {
  it("matches the hand-built S3 table after key-order normalization", () => {
    const table = convertRecord(parseDump(S3_DUMP));
    const expected = JSON.parse(
      readFileSync(
        join(__dirname, "..", "..", "src", "repscreen", "data", "s3.json"),
        "utf8",
      ),
    );
    expect(JSON.parse(tableToJson(table))).toEqual(expected);
  });

  it("is idempotent: converting twice yields identical bytes", () => {
    const a = tableToJson(convertRecord(parseDump(S3_DUMP)));
    const b = tableToJson(convertRecord(parseDump(S3_DUMP)));
    expect(a).toBe(b);
  });

  it("computes the least conductor covering every value", () => {
    const m12 = readFileSync(join(FIXTURES, "m12.dump"), "utf8");
    const table = convertRecord(parseDump(m12));
    expect(table.conductor).toBe(11); // only the 11th roots are irrational
    expect(table.classes).toHaveLength(15);
  });

  it("pinpoints the offending value on bad cyclotomics", () => {
    const broken = S3_DUMP.replace(/^-1$/m, "E(oops)");
    expect(() => convertRecord(parseDump(broken))).toThrow(
      /character 1b, class 2a/,
    );
  });
});
