#!/usr/bin/env node
/** gapconv <dump> <out.json> [--validate-with <command>]
 *
 * Converts a character-table dump to the canonical JSON format.  With
 * --validate-with, runs `<command> validate <out.json>` afterwards (the
 * primary toolkit's CLI) and fails if it rejects the table.
 */

import { spawnSync } from "node:child_process";
import { readFileSync, writeFileSync } from "node:fs";

import { convertRecord, tableToJson } from "./convert.js";
import { DumpParseError, parseDump } from "./dump.js";

export function main(argv: string[]): number {
  const args: string[] = [];
  let validateWith: string | undefined;
  for (let i = 0; i < argv.length; i++) {
    if (argv[i] === "--validate-with") {
      validateWith = argv[++i];
      if (!validateWith) {
        console.error("error: --validate-with needs a command");
        return 1;
      }
    } else {
      args.push(argv[i]);
    }
  }
  if (args.length !== 2) {
    console.error("usage: gapconv <dump> <out.json> [--validate-with <command>]");
    return 1;
  }
  const [inPath, outPath] = args;

  let text: string;
  try {
    text = readFileSync(inPath, "utf8");
  } catch (err) {
    console.error(`error: cannot read ${inPath}: ${(err as Error).message}`);
    return 1;
  }

  let table;
  try {
    table = convertRecord(parseDump(text));
  } catch (err) {
    if (err instanceof DumpParseError) {
      console.error(`error: ${inPath}:${err.line}: ${err.message}`);
    } else {
      console.error(`error: ${inPath}: ${(err as Error).message}`);
    }
    return 1;
  }

  writeFileSync(outPath, tableToJson(table));
  console.log(
    `${table.group}: ${table.classes.length} classes, order ${table.order}, ` +
      `conductor ${table.conductor} -> ${outPath}`,
  );

  if (validateWith) {
    const parts = validateWith.split(/\s+/);
    const res = spawnSync(parts[0], [...parts.slice(1), "validate", outPath], {
      stdio: "inherit",
    });
    if (res.status !== 0) {
      console.error(`error: validation failed (exit ${res.status})`);
      return res.status ?? 1;
    }
  }
  return 0;
}

const entry = process.argv[1] ?? "";
if (entry.endsWith("cli.js") || entry.endsWith("gapconv")) {
  process.exit(main(process.argv.slice(2)));
}
