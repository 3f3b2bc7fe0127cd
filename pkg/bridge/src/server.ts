/**
 * Serving loop: one JSON response line per request line, in order,
 * strictly sequential, until end of input.
 */

import { createInterface } from "node:readline";
import type { Readable, Writable } from "node:stream";

import { handleLine } from "./protocol.js";

export function serve(input: Readable, output: Writable): Promise<void> {
  return new Promise((resolve) => {
    const lines = createInterface({ input, crlfDelay: Infinity });
    lines.on("line", (line) => {
      if (line.trim().length === 0) {
        return;
      }
      output.write(JSON.stringify(handleLine(line)) + "\n");
    });
    lines.on("close", resolve);
  });
}
