import { describe, expect, it } from "vitest";

import { handleLine, handleRequest, PROTOCOL_VERSION } from "../src/protocol.js";
import { WINDOW } from "../src/model.js";
import { tokenize } from "../src/tokenizer.js";

function scores(response: Record<string, unknown>): number[] {
  expect(response.error).toBeUndefined();
  return response.scores as number[];
}

describe("ping", () => {
  it("acknowledges and reports the window", () => {
    const reply = handleRequest({ op: "ping" });
    expect(reply).toEqual({ v: PROTOCOL_VERSION, ok: true, window: WINDOW });
  });
});

describe("tokenize", () => {
  it("returns ids whose text round-trips", () => {
    const reply = handleRequest({ op: "tokenize", word: "missing" });
    expect(reply.v).toBe(PROTOCOL_VERSION);
    expect(reply.ids).toEqual(tokenize("missing"));
    expect(reply.text).toBe("missing");
  });

  it("rejects empty and missing words", () => {
    expect(handleRequest({ op: "tokenize", word: "" }).error).toMatch(/word/);
    expect(handleRequest({ op: "tokenize" }).error).toMatch(/word/);
  });
});

describe("score", () => {
  const x = tokenize("lib");
  const y = tokenize("erty");

  it("answers one score per continuation, in request order", () => {
    const fwd = scores(
      handleRequest({ op: "score", context: [], continuations: [x, y] }),
    );
    const rev = scores(
      handleRequest({ op: "score", context: [], continuations: [y, x] }),
    );
    expect(fwd).toHaveLength(2);
    expect([rev[1], rev[0]]).toEqual(fwd);
  });

  it("returns finite nonpositive scores", () => {
    const got = scores(
      handleRequest({ op: "score", context: x, continuations: [y, [7], x] }),
    );
    for (const lp of got) {
      expect(Number.isFinite(lp)).toBe(true);
      expect(lp).toBeLessThanOrEqual(0);
    }
  });

  it("is prefix-consistent through the protocol", () => {
    const joint = scores(
      handleRequest({ op: "score", context: [], continuations: [[...x, ...y]] }),
    )[0]!;
    const first = scores(
      handleRequest({ op: "score", context: [], continuations: [x] }),
    )[0]!;
    const second = scores(
      handleRequest({ op: "score", context: x, continuations: [y] }),
    )[0]!;
    expect(Math.abs(joint - (first + second))).toBeLessThan(1e-4);
  });

  it("treats a missing context as empty", () => {
    const a = scores(handleRequest({ op: "score", continuations: [x] }));
    const b = scores(
      handleRequest({ op: "score", context: [], continuations: [x] }),
    );
    expect(a).toEqual(b);
  });

  it("rejects bad ids and shapes", () => {
    expect(
      handleRequest({ op: "score", context: [99999], continuations: [x] }).error,
    ).toMatch(/context/);
    expect(
      handleRequest({ op: "score", context: [], continuations: [["7"]] }).error,
    ).toMatch(/continuation 0/);
    expect(
      handleRequest({ op: "score", context: [], continuations: "x" }).error,
    ).toMatch(/continuations/);
  });
});

describe("handleLine", () => {
  it("answers malformed lines with an error response", () => {
    const reply = handleLine("{nope");
    expect(reply.v).toBe(PROTOCOL_VERSION);
    expect(reply.error).toBe("malformed request");
  });

  it("answers unknown ops with an error response", () => {
    expect(handleLine('{"op":"shutdown"}').error).toMatch(/unknown op/);
    expect(handleLine("[1,2]").error).toMatch(/unknown op/);
    expect(handleLine("3").error).toMatch(/object/);
  });

  it("stamps the version on every response", () => {
    for (const line of ['{"op":"ping"}', "{bad", '{"op":"x"}']) {
      expect(handleLine(line).v).toBe(PROTOCOL_VERSION);
    }
  });
});
