/**
 * Deterministic subword neural scorer.
 *
 * A tiny fixed-weight network: hash-seeded embeddings, a recency-weighted
 * mean over the context window, a dot-product layer over the vocabulary
 * and a softmax.  No training, no randomness at run time: every weight
 * is a pure function of (id, dimension), so identical requests always
 * produce identical scores, bit for bit.
 *
 * A multi-token continuation scores as the sum of stepwise conditional
 * log probabilities with the window re-truncated after every step.  The
 * stepwise terms of a split and a joint scoring are identical, so prefix
 * consistency holds to the last ulp of summation order.
 */

import { VOCAB_SIZE } from "./tokenizer.js";

export const WINDOW = 32;
const DIM = 16;
const SCALE = 4.0;

/** Deterministic hash of an integer to a float in [-0.5, 0.5). */
function unit(n: number): number {
  let h = n | 0;
  h = Math.imul(h ^ (h >>> 16), 0x45d9f3b);
  h = Math.imul(h ^ (h >>> 16), 0x45d9f3b);
  h ^= h >>> 16;
  return (h >>> 8) / 0x1000000 - 0.5;
}

function embedding(id: number, k: number): number {
  return unit(id * 131 + k * 9176 + 7);
}

function bias(id: number): number {
  return 2 * unit(id * 977 + 3);
}

function contextVector(context: readonly number[]): Float64Array {
  const h = new Float64Array(DIM);
  if (context.length === 0) {
    return h;
  }
  let total = 0;
  for (let j = 0; j < context.length; j++) {
    const recency = 1 / (context.length - j);
    total += recency;
    const id = context[j]!;
    for (let k = 0; k < DIM; k++) {
      h[k]! += recency * embedding(id, k);
    }
  }
  for (let k = 0; k < DIM; k++) {
    h[k]! /= total;
  }
  return h;
}

/** log P(next = id | context window), softmax over the whole vocabulary. */
export function stepLogProb(context: readonly number[], id: number): number {
  const h = contextVector(context);
  const logits = new Float64Array(VOCAB_SIZE);
  let max = -Infinity;
  for (let v = 0; v < VOCAB_SIZE; v++) {
    let dot = 0;
    for (let k = 0; k < DIM; k++) {
      dot += h[k]! * embedding(v, k);
    }
    const logit = SCALE * dot + bias(v);
    logits[v] = logit;
    if (logit > max) max = logit;
  }
  let sum = 0;
  for (let v = 0; v < VOCAB_SIZE; v++) {
    sum += Math.exp(logits[v]! - max);
  }
  return logits[id]! - max - Math.log(sum);
}

/** Sum of stepwise log probabilities, truncating to the window each step. */
export function scoreContinuation(
  context: readonly number[],
  continuation: readonly number[],
): number {
  let window = context.slice(-WINDOW);
  let total = 0;
  for (const id of continuation) {
    total += stepLogProb(window, id);
    window = [...window, id].slice(-WINDOW);
  }
  return total;
}
