/**
 * Subword tokenizer with an exact round trip.
 *
 * The vocabulary is 256 single-character pieces (all of Latin-1) plus a
 * fixed list of frequent English chunks.  Encoding is greedy longest
 * match from the left, so any string whose code points fit in one byte
 * tokenizes, and concatenating the pieces reproduces it exactly.
 */

const CHUNKS: readonly string[] = [
  "tion", "ment", "ther", "ight", "ough", "ance", "ence", "able", "ward",
  "ing", "and", "the", "ent", "ion", "her", "for", "ter", "hat", "tha",
  "ere", "ate", "his", "con", "res", "ver", "all", "ons", "nce", "men",
  "ith", "ted", "ers", "pro", "thi", "wit", "are", "ess", "not", "ive",
  "was", "ect", "rea", "com", "eve", "per", "int", "est", "sta", "cti",
  "ica", "ist", "ear", "ain", "one", "our", "iti", "rat", "ell", "ant",
  "ous", "edi", "pre", "str", "out", "ort", "und", "red",
  "th", "he", "in", "er", "an", "re", "on", "at", "en", "nd", "ti", "es",
  "or", "te", "of", "ed", "is", "it", "al", "ar", "st", "to", "nt", "ng",
  "se", "ha", "as", "ou", "io", "le", "ve", "co", "me", "de", "hi", "ri",
  "ro", "ic", "ne", "ea", "ra", "ce", "li", "ch", "ll", "be", "ma", "si",
  "om", "ur", "ca", "el", "ta", "la", "ns", "di", "fo", "ho", "pe", "ec",
  "pr", "no", "ct", "us", "ac", "ot", "il", "tr", "ly", "nc", "et", "ut",
  "ss", "so", "rs", "un", "lo", "wa", "ge", "ie", "wh", "ol", "ad", "pa",
  "sh", "sa", "im", "ag", "sp", "mo", "do", "wi", "mi",
];

const BYTES: readonly string[] = Array.from({ length: 256 }, (_, i) =>
  String.fromCharCode(i),
);

export const VOCAB: readonly string[] = [...BYTES, ...CHUNKS];
export const VOCAB_SIZE = VOCAB.length;

const MAX_CHUNK = Math.max(...CHUNKS.map((c) => c.length));

const PIECE_ID = new Map<string, number>();
VOCAB.forEach((piece, id) => {
  // Byte pieces come first, so a chunk equal to a byte piece (none by
  // construction) would never shadow it.
  if (!PIECE_ID.has(piece)) PIECE_ID.set(piece, id);
});

export function isValidId(id: unknown): id is number {
  return typeof id === "number" && Number.isInteger(id) && id >= 0 && id < VOCAB_SIZE;
}

/** Greedy longest-match encoding; throws on non-Latin-1 input. */
export function tokenize(word: string): number[] {
  if (word.length === 0) {
    throw new Error("cannot tokenize an empty word");
  }
  const ids: number[] = [];
  let i = 0;
  while (i < word.length) {
    let matched = false;
    const limit = Math.min(MAX_CHUNK, word.length - i);
    for (let len = limit; len >= 2; len--) {
      const id = PIECE_ID.get(word.slice(i, i + len));
      if (id !== undefined) {
        ids.push(id);
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) {
      const code = word.charCodeAt(i);
      if (code > 255) {
        throw new Error(
          `character ${JSON.stringify(word[i])} in ${JSON.stringify(word)} is not encodable`,
        );
      }
      ids.push(code);
      i += 1;
    }
  }
  return ids;
}

export function detokenize(ids: readonly number[]): string {
  return ids
    .map((id) => {
      if (!isValidId(id)) {
        throw new Error(`token id ${id} out of range`);
      }
      return VOCAB[id];
    })
    .join("");
}
