/** End-to-end checks through the primary toolkit's CLI: converted tables
 * must pass its exact validator, and the published per-group degree
 * entries must come out of its semi-invariant scan. */

import { spawnSync } from "node:child_process";
import { existsSync, mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { convertRecord, tableToJson } from "../src/convert.js";
import { parseDump } from "../src/dump.js";
import { main as cliMain } from "../src/cli.js";

const FIXTURES = join(__dirname, "..", "fixtures");
const PRIMARY = ["python3", "-m", "repscreen.cli"];

function runPrimary(...args: string[]) {
  return spawnSync(PRIMARY[0], [...PRIMARY.slice(1), ...args], {
    encoding: "utf8",
    cwd: join(__dirname, "..", ".."),
  });
}

function convertToTemp(dumpName: string): string {
  const text = readFileSync(join(FIXTURES, dumpName), "utf8");
  const table = convertRecord(parseDump(text));
  const out = join(mkdtempSync(join(tmpdir(), "gapconv-")), `${dumpName}.json`);
  writeFileSync(out, tableToJson(table));
  return out;
}

function flaggedEntries(stdout: string): { d: number; dim: number }[] {
  const rows = JSON.parse(stdout.split("\n")[0]);
  return rows
    .filter((r: { flagged: boolean }) => r.flagged)
    .map((r: { d: number; dim: number }) => ({ d: r.d, dim: r.dim }));
}

describe("converted tables through the primary CLI", () => {
  it("M12 passes validate and reproduces the published entry d=3, dim=16", () => {
    const out = convertToTemp("m12.dump");
    const val = runPrimary("validate", out);
    expect(val.status, val.stdout + val.stderr).toBe(0);

    const scan = runPrimary("invdeg", "--table", out, "--faithful-only");
    expect(scan.status).toBe(0);
    const flagged = flaggedEntries(scan.stdout);
    expect(flagged.length).toBeGreaterThan(0);
    for (const f of flagged) expect(f).toEqual({ d: 3, dim: 16 });
  }, 120_000);

  it("2.M12 passes validate and reproduces the published entry d=6, dim=10", () => {
    const out = convertToTemp("2m12.dump");
    const val = runPrimary("validate", out);
    expect(val.status, val.stdout + val.stderr).toBe(0);

    const scan = runPrimary("invdeg", "--table", out, "--faithful-only");
    expect(scan.status).toBe(0);
    const flagged = flaggedEntries(scan.stdout);
    expect(flagged.length).toBeGreaterThan(0);
    for (const f of flagged) expect(f).toEqual({ d: 6, dim: 10 });
  }, 240_000);

  it("matches the independently generated expected tables", () => {
    for (const name of ["m12", "2m12"]) {
      const got = JSON.parse(
        tableToJson(
          convertRecord(
            parseDump(readFileSync(join(FIXTURES, `${name}.dump`), "utf8")),
          ),
        ),
      );
      const expected = JSON.parse(
        readFileSync(join(FIXTURES, "expected", `${name}.json`), "utf8"),
      );
      expect(got).toEqual(expected);
    }
  });

  it("S3 converts via the command line with --validate-with", () => {
    const out = join(mkdtempSync(join(tmpdir(), "gapconv-")), "s3.json");
    const code = cliMain([
      join(FIXTURES, "s3.dump"),
      out,
      "--validate-with",
      PRIMARY.join(" "),
    ]);
    expect(code).toBe(0);
    expect(existsSync(out)).toBe(true);
  }, 60_000);

  const suzDump = join(FIXTURES, "suz6.dump");
  it.skipIf(!existsSync(suzDump))(
    "6.Suz reproduces the degree-6 and degree-7 splittings",
    () => {
      // needs a dump exported from a CAS installation (see
      // export_chartable.g); the build environment cannot compute the
      // table of a group of order 2690072985600 from scratch
      const out = convertToTemp("suz6.dump");
      const val = runPrimary("validate", out);
      expect(val.status, val.stdout + val.stderr).toBe(0);

      const delta = runPrimary(
        "delta", "--table", out, "--char", "dim=12", "--kmax", "7",
      );
      expect(delta.status).toBe(0);
      const byK = new Map<number, number[]>();
      for (const line of delta.stdout.split("\n")) {
        if (!line.startsWith("{")) continue;
        const entry = JSON.parse(line);
        byK.set(entry.k, entry.dims);
      }
      expect(byK.get(6)).toEqual([364, 12012]);
      expect(byK.get(7)).toEqual([4368, 27456]);
      for (let k = 2; k <= 5; k++) expect(byK.get(k)).toHaveLength(1);
    },
    1_200_000,
  );
});
