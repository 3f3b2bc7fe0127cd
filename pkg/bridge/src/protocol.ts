/**
 * Request handling for the newline-delimited JSON protocol.
 *
 * One request object in, one response object out, always carrying the
 * protocol version.  Bad input becomes an error response, never an
 * exception: the serving loop must survive malformed lines.
 */

import { detokenize, isValidId, tokenize } from "./tokenizer.js";
import { scoreContinuation, WINDOW } from "./model.js";

export const PROTOCOL_VERSION = 1;

export type Response = Record<string, unknown> & { v: number };

function ok(body: Record<string, unknown>): Response {
  return { v: PROTOCOL_VERSION, ...body };
}

function fail(message: string): Response {
  return { v: PROTOCOL_VERSION, error: message };
}

function idList(value: unknown, what: string): number[] {
  if (!Array.isArray(value) || !value.every(isValidId)) {
    throw new Error(`${what} must be an array of valid token ids`);
  }
  return value;
}

export function handleRequest(request: unknown): Response {
  if (typeof request !== "object" || request === null) {
    return fail("request must be a JSON object");
  }
  const req = request as Record<string, unknown>;
  try {
    switch (req.op) {
      case "ping":
        return ok({ ok: true, window: WINDOW });
      case "tokenize": {
        if (typeof req.word !== "string" || req.word.length === 0) {
          return fail("tokenize needs a non-empty word");
        }
        const ids = tokenize(req.word);
        return ok({ ids, text: detokenize(ids) });
      }
      case "score": {
        const context = idList(req.context ?? [], "context");
        if (!Array.isArray(req.continuations)) {
          return fail("score needs a continuations array");
        }
        const scores = req.continuations.map((cont, n) =>
          scoreContinuation(context, idList(cont, `continuation ${n}`)),
        );
        return ok({ scores });
      }
      default:
        return fail(`unknown op ${JSON.stringify(req.op ?? null)}`);
    }
  } catch (error) {
    return fail(error instanceof Error ? error.message : String(error));
  }
}

export function handleLine(line: string): Response {
  let parsed: unknown;
  try {
    parsed = JSON.parse(line);
  } catch {
    return fail("malformed request");
  }
  return handleRequest(parsed);
}
