"""End-to-end command-line runs over a small synthetic corpus."""

import json
import re
import sys
from pathlib import Path

import pytest

from bookcode.cli import main
from bookcode.lm import load_model
from bookcode.textgen import generate_book
from bookcode.transcript import parse_document
from bookcode.wordbank import load_wordbank

MOCK = Path(__file__).parent / "mock_sidecar.py"


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def combined_of(tsv: str) -> float:
    match = re.search(r"combined=(\S+)", tsv)
    assert match, tsv
    return float(match.group(1))


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")
    corpus = root / "corpus.txt"
    corpus.write_text(
        " ".join(generate_book(seed=9, n_tokens=3000)) + "\n", encoding="utf-8"
    )
    files = {
        "root": root,
        "corpus": corpus,
        "cipher": root / "cipher.txt",
        "plain": root / "plain.txt",
        "key": root / "key.tsv",
        "model": root / "book.model",
        "lattice": root / "lattice.json",
        "path": root / "path.tsv",
    }
    assert main([
        "synth", "--generate", "300", "--seed", "0", "--table-size", "120",
        "--out-cipher", str(files["cipher"]),
        "--out-plain", str(files["plain"]),
        "--out-key", str(files["key"]),
    ]) == 0
    assert main([
        "train-lm", "--corpus", str(corpus), "--order", "3",
        "--out", str(files["model"]),
    ]) == 0
    assert main([
        "lattice", "--cipher", str(files["cipher"]),
        "--wordbank", str(files["key"]), "--out", str(files["lattice"]),
    ]) == 0
    assert main([
        "decode", "--lattice", str(files["lattice"]),
        "--scorer", f"ngram:{files['model']}", "--out", str(files["path"]),
    ]) == 0
    return files


class TestParse:
    def test_listing(self, workdir, capsys):
        code, out, _ = run(capsys, "parse", workdir["cipher"])
        lines = out.strip().splitlines()
        ntokens = len(parse_document(workdir["cipher"].read_text()))
        assert code == 0
        assert lines[0] == "n\ttoken\tkind\tposition\tsuffix"
        assert len(lines) == ntokens + 1
        kinds = {line.split("\t")[2] for line in lines[1:]}
        assert kinds <= {"table_code", "dict_code", "literal", "sentence_end"}

    def test_bad_file_names_position(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("7.[12]*\n", encoding="utf-8")
        code, _, err = run(capsys, "parse", bad)
        assert code == 2
        assert "error:" in err and "bad.txt" in err and "line" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "parse", "no-such-file.txt")
        assert code == 2 and "no-such-file.txt" in err


class TestWordbank:
    def test_extract_round_trips(self, workdir, capsys, tmp_path):
        out = tmp_path / "wb.tsv"
        code, _, _ = run(
            capsys, "wordbank", "--cipher", workdir["cipher"],
            "--plain", workdir["plain"], "--out", out,
        )
        assert code == 0
        wb = load_wordbank(out)
        key = load_wordbank(workdir["key"])
        for pos, word in wb.dict_entries.items():
            assert key.dict_entries[pos] == word
        assert len(wb) > 50

    def test_misaligned_inputs_rejected(self, workdir, capsys, tmp_path):
        short = tmp_path / "short.txt"
        short.write_text("only three words\n", encoding="utf-8")
        code, _, err = run(
            capsys, "wordbank", "--cipher", workdir["cipher"], "--plain", short,
        )
        assert code == 2 and "3 words" in err


class TestLattice:
    def test_json_shape(self, workdir):
        payload = json.loads(workdir["lattice"].read_text(encoding="utf-8"))
        ntokens = len(parse_document(workdir["cipher"].read_text()))
        assert len(payload) == ntokens
        assert all(entry["candidates"] for entry in payload)

    def test_jobs_give_identical_output(self, workdir, capsys):
        args = ("lattice", "--cipher", workdir["cipher"],
                "--wordbank", workdir["key"])
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args, "--jobs", "3")
        assert code1 == code2 == 0
        assert out1 == out2

    def test_beta_floor(self, workdir, capsys):
        code, _, err = run(
            capsys, "lattice", "--cipher", workdir["cipher"],
            "--wordbank", workdir["key"], "--beta", "1.5",
        )
        assert code == 2 and "beta" in err


class TestDecode:
    def test_byte_identical_runs(self, workdir, capsys):
        args = ("decode", "--lattice", workdir["lattice"],
                "--scorer", f"ngram:{workdir['model']}", "--beam", "2")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2
        assert "runtime_s" not in out1

    def test_timing_flag_adds_runtime(self, workdir, capsys):
        code, out, _ = run(
            capsys, "decode", "--lattice", workdir["lattice"],
            "--scorer", f"ngram:{workdir['model']}", "--timing",
        )
        assert code == 0 and "runtime_s=" in out

    def test_wider_beam_never_worse(self, workdir, capsys):
        scores = {}
        for beam in (1, 16):
            _, out, _ = run(
                capsys, "decode", "--lattice", workdir["lattice"],
                "--scorer", f"ngram:{workdir['model']}", "--beam", beam,
            )
            scores[beam] = combined_of(out)
        assert scores[16] >= scores[1] - 1e-9

    def test_external_scorer(self, workdir, capsys):
        code, out, _ = run(
            capsys, "decode", "--lattice", workdir["lattice"],
            "--scorer", f"external:{sys.executable} {MOCK}", "--beam", "1",
        )
        assert code == 0
        assert combined_of(out) < 0

    def test_beam_floor(self, workdir, capsys):
        code, _, err = run(
            capsys, "decode", "--lattice", workdir["lattice"],
            "--scorer", f"ngram:{workdir['model']}", "--beam", "0",
        )
        assert code == 2 and "beam" in err

    def test_weight_must_be_positive(self, workdir, capsys):
        code, _, err = run(
            capsys, "decode", "--lattice", workdir["lattice"],
            "--scorer", f"ngram:{workdir['model']}", "--lattice-weight", "0",
        )
        assert code == 2 and "weight" in err


class TestEvaluate:
    def test_identity_scores_one(self, workdir, capsys):
        code, out, _ = run(
            capsys, "evaluate", "--path", workdir["path"],
            "--gold", workdir["plain"],
            "--wordbank", workdir["key"], "--lattice", workdir["lattice"],
        )
        assert code == 0
        metrics = json.loads(out)
        assert metrics["token_accuracy"] == 1.0
        assert metrics["coverage"] == 1.0
        assert metrics["oracle_accuracy"] == 1.0


class TestSelfLearn:
    def test_learns_and_saves_wordbank(self, workdir, capsys, tmp_path):
        partial = tmp_path / "partial.tsv"
        key_lines = workdir["key"].read_text(encoding="utf-8").splitlines()
        partial.write_text(
            "\n".join(key_lines[: len(key_lines) // 8]) + "\n", encoding="utf-8"
        )
        grown = tmp_path / "grown.tsv"
        code, out, _ = run(
            capsys, "self-learn", "--cipher", workdir["cipher"],
            "--wordbank", partial, "--scorer", f"ngram:{workdir['model']}",
            "--beam", "2", "--iterations", "2", "--promote-fraction", "0.5",
            "--min-confidence=-1e9", "--out-wordbank", grown,
        )
        assert code == 0
        assert out.startswith("cipher\tword")
        assert len(load_wordbank(grown)) >= len(load_wordbank(partial))


class TestSynth:
    def test_same_seed_same_bytes(self, capsys, tmp_path):
        outs = []
        for tag in ("one", "two"):
            c = tmp_path / f"c{tag}.txt"
            p = tmp_path / f"p{tag}.txt"
            code, _, _ = run(
                capsys, "synth", "--generate", "80", "--seed", "5",
                "--table-size", "50", "--out-cipher", c, "--out-plain", p,
            )
            assert code == 0
            outs.append((c.read_text(), p.read_text()))
        assert outs[0] == outs[1]

    def test_different_seed_differs(self, capsys, tmp_path):
        texts = []
        for seed in (1, 2):
            c = tmp_path / f"c{seed}.txt"
            p = tmp_path / f"p{seed}.txt"
            run(capsys, "synth", "--generate", "80", "--seed", seed,
                "--table-size", "50", "--out-cipher", c, "--out-plain", p)
            texts.append(c.read_text())
        assert texts[0] != texts[1]

    def test_book_file_input(self, capsys, tmp_path):
        book = tmp_path / "book.txt"
        book.write_text("The whole army was in camp.\n", encoding="utf-8")
        c, p = tmp_path / "c.txt", tmp_path / "p.txt"
        code, _, _ = run(
            capsys, "synth", "--book", book, "--table-size", "50",
            "--out-cipher", c, "--out-plain", p,
        )
        assert code == 0
        assert p.read_text().strip().endswith(".")
        assert len(parse_document(c.read_text())) == 7


class TestDataEfficiency:
    def test_report_and_parallel_match(self, workdir, capsys, tmp_path):
        train = tmp_path / "train.txt"
        test = tmp_path / "test.txt"
        train.write_text(
            " ".join(generate_book(seed=21, n_tokens=800)) + "\n", encoding="utf-8"
        )
        test.write_text(
            " ".join(generate_book(seed=22, n_tokens=150)) + "\n", encoding="utf-8"
        )
        blob = tmp_path / "rows.json"
        args = (
            "data-efficiency", "--train", train, "--test", test,
            "--scorer", f"ngram:{workdir['model']}", "--sizes", "50,150",
            "--table-size", "120", "--beam", "2", "--json", blob,
        )
        code, seq, _ = run(capsys, *args)
        assert code == 0
        lines = seq.strip().splitlines()
        assert lines[0] == "parallel_tokens\twordbank_size\tcoverage\taccuracy"
        assert len(lines) == 3
        rows = json.loads(blob.read_text(encoding="utf-8"))
        assert [r["parallel_tokens"] for r in rows] == [50, 150]
        code, par, _ = run(capsys, *args, "--jobs", "2")
        assert code == 0 and par == seq


class TestTrainLm:
    def test_model_round_trips(self, workdir):
        model = load_model(workdir["model"])
        assert model.order == 3
        assert len(model.vocab) > 100
