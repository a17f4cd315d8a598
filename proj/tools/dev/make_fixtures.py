#!/usr/bin/env python3
# Copyright 2026 The biodenoise Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the checked-in test fixtures.

  tests/data/bioasq_mini.json            30 BioASQ-style questions
  tests/data/bioasq_mini.expected.json   their counts
  tests/data/golden/corpus.pubtator      small annotated corpus
  tests/data/golden/dataset.json         gen-denoise output (tool)
  tests/data/golden/predictions.jsonl    synthetic logits
  tests/data/golden/expected_metrics.json  metrics computed here
  tests/data/golden/report.json          evaluate output (tool)

The expected metrics come from a decoder and scorer written here without
reference to the C++ sources; the acceptance suite checks the tool's report
against them.

Usage: make_fixtures.py --binary build/tools/biodenoise
"""

import argparse
import json
import random
import re
import subprocess
import unicodedata
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]
DATA = ROOT / "tests" / "data"
GOLDEN = DATA / "golden"

# Arguments shared with the acceptance suite.
GEN_ARGS = ["--seed", "13", "--task", "all", "--max-examples-per-doc", "2",
            "--min-context-chars", "0"]


# ----------------------------------------------------------------- BioASQ mini

def make_bioasq_mini():
    rng = random.Random(2020)
    plan = ["yesno"] * 9 + ["list"] * 6 + ["factoid"] * 9 + ["summary"] * 6
    rng.shuffle(plan)
    drugs = ["imatinib", "nivolumab", "aspirin", "metformin", "tamoxifen"]
    questions = []
    examples = 0
    for i, qtype in enumerate(plan):
        n_snippets = rng.randint(1, 4)
        pmids = [str(10000000 + rng.randint(0, 999)) for _ in range(n_snippets)]
        drug = drugs[i % len(drugs)]
        snippets = [{
            "text": f"Snippet {k} reports that {drug.capitalize()} targets TP53.",
            "document": f"http://www.ncbi.nlm.nih.gov/pubmed/{pmids[k]}",
        } for k in range(n_snippets)]
        q = {"id": f"mini{i:02d}", "type": qtype,
             "body": f"Question {i} about {drug}?", "snippets": snippets,
             "documents": [s["document"] for s in snippets]}
        if qtype == "yesno":
            q["exact_answer"] = rng.choice(["yes", "no"])
        elif qtype == "factoid":
            q["exact_answer"] = [[drug]]
        elif qtype == "list":
            q["exact_answer"] = [[drug], ["tp53", "p53"]]
        else:
            q["ideal_answer"] = ["A summary."]
        if qtype != "summary":
            examples += n_snippets
        questions.append(q)
    counts = {t: plan.count(t) for t in ["factoid", "list", "summary", "yesno"]}
    expected = {"questions": counts, "questions_total": len(plan),
                "examples": examples}
    (DATA / "bioasq_mini.json").write_text(
        json.dumps({"questions": questions}, indent=1) + "\n")
    (DATA / "bioasq_mini.expected.json").write_text(
        json.dumps(expected, indent=2, sort_keys=True) + "\n")


# ------------------------------------------------------------ golden corpus

VOCAB = {
    "Chemical": ["Nivolumab", "Bortezomib", "Cisplatin", "Metformin",
                 "β-lactam", "Tamoxifen"],
    "Disease": ["melanoma", "glioblastoma", "Crohn’s disease", "asthma",
                "sepsis"],
    "Gene": ["TP53", "BRCA1", "IL-1β", "EGFR", "KRAS"],
    "Species": ["mice", "patients", "zebrafish"],
}
TEMPLATES = [
    "{Chemical} was tested in {Species} with {Disease}.",
    "Expression of {Gene} rose after {Chemical} exposure.",
    "{Disease} risk depends on {Gene} status.",
    "We treated {Species} with {Chemical} for two weeks.",
    "Loss of {Gene} predicts poor outcome in {Disease}.",
]


def fill(template, rng):
    text, mentions = "", []
    for part in re.split(r"(\{\w+\})", template):
        m = re.fullmatch(r"\{(\w+)\}", part)
        if not m:
            text += part
            continue
        surface = rng.choice(VOCAB[m.group(1)])
        mentions.append((len(text), len(text) + len(surface), surface, m.group(1)))
        text += surface
    return text, mentions


def make_corpus():
    rng = random.Random(7)
    blocks = []
    for d in range(16):
        doc_id = str(40000000 + d)
        title, mentions = fill(rng.choice(TEMPLATES), rng)
        body = ""
        for _ in range(rng.randint(2, 3)):
            sentence, ms = fill(rng.choice(TEMPLATES), rng)
            offset = len(title) + 1 + len(body) + (1 if body else 0)
            mentions += [(s + offset, e + offset, surf, t) for s, e, surf, t in ms]
            body = f"{body} {sentence}" if body else sentence
        text = f"{title} {body}"
        lines = [f"{doc_id}|t|{title}", f"{doc_id}|a|{body}"]
        for s, e, surf, t in mentions:
            assert text[s:e] == surf
            lines.append(f"{doc_id}\t{s}\t{e}\t{surf}\t{t}\tID:{surf.lower()}")
        blocks.append("\n".join(lines) + "\n")
    (GOLDEN / "corpus.pubtator").write_text("\n".join(blocks))


# --------------------------------------------------- independent oracle

def normalize(text):
    text = unicodedata.normalize("NFKC", text).casefold()
    while True:
        words = text.split()
        if len(words) > 1 and words[0] in ("a", "an", "the"):
            words = words[1:]
        out = " ".join(words)
        while out and (unicodedata.category(out[0]).startswith("P") or out[0] == " "):
            out = out[1:]
        while out and (unicodedata.category(out[-1]).startswith("P") or out[-1] == " "):
            out = out[:-1]
        if out == text:
            return out
        text = out


def tokenize(context):
    return [(m.start(), m.end()) for m in re.finditer(r"\w+|[^\w\s]", context)]


def nbest(tokens, context, n=20, max_len=30):
    cands = []
    for i, (si, _, sl, _) in enumerate(tokens):
        for j in range(i, min(len(tokens), i + max_len)):
            cands.append((-(sl + tokens[j][3]), i, j))
    cands.sort()
    out, seen = [], set()
    for neg, i, j in cands:
        text = context[tokens[i][0]:tokens[j][1]]
        key = normalize(text)
        if key in seen:
            continue
        seen.add(key)
        out.append(text)
        if len(out) == n:
            break
    return out


def span_logits(context, answer, mode, rng):
    """Token logits making the gold span rank 1, 2 or absent."""
    offsets = tokenize(context)
    start = answer["answer_start"]
    end = start + len(answer["text"])
    start_tok = next((k for k, (s, _) in enumerate(offsets) if s == start), None)
    end_tok = next((k for k, (_, e) in enumerate(offsets) if e == end), None)
    starts = [round(rng.uniform(-1, 1), 3) for _ in offsets]
    ends = [round(rng.uniform(-1, 1), 3) for _ in offsets]
    if start_tok is not None and end_tok is not None:
        if mode == "top":
            starts[start_tok], ends[end_tok] = 6.0, 6.0
        elif mode == "second":
            starts[start_tok], ends[end_tok] = 4.0, 4.0
            decoy = next(k for k in range(len(offsets))
                         if k < start_tok or k > end_tok)
            starts[decoy], ends[decoy] = 5.5, 5.5
        else:
            starts[start_tok], ends[end_tok] = -9.0, -9.0
    return [(s, e, sl, el) for (s, e), sl, el in zip(offsets, starts, ends)]


def metrics(dataset):
    rng = random.Random(99)
    records, ranks, gold_yn, pred_yn = [], [], [], []
    modes = ["top", "second", "absent", "top"]
    seen = {"yesno": 0, "factoid": 0}
    for ex in dataset["examples"]:
        mode = modes[seen[ex["question_type"]] % 4]
        seen[ex["question_type"]] += 1
        if ex["question_type"] == "yesno":
            gold = ex["yesno_label"]
            right = mode != "absent"
            logit = round(rng.uniform(0.2, 2.0), 3)
            if (gold == "yes") != right:
                logit = -logit
            records.append({"example_id": ex["id"], "logit": logit})
            gold_yn.append(gold)
            pred_yn.append("yes" if logit > 0 else "no")
            continue
        tokens = span_logits(ex["context"], ex["answers"][0], mode, rng)
        records.append({"example_id": ex["id"], "tokens": [
            {"text": ex["context"][s:e], "char_start": s, "char_end": e,
             "start_logit": sl, "end_logit": el} for s, e, sl, el in tokens]})
        top5 = nbest(tokens, ex["context"])[:5]
        golds = {normalize(a["text"]) for a in ex["answers"]}
        rank = next((r + 1 for r, t in enumerate(top5) if normalize(t) in golds), None)
        ranks.append(rank)

    n = len(ranks)
    factoid = {"n": n,
               "sacc": sum(r == 1 for r in ranks) / n,
               "lacc": sum(r is not None for r in ranks) / n,
               "mrr": sum(1 / r for r in ranks if r) / n}

    def class_f1(label):
        tp = sum(g == label and p == label for g, p in zip(gold_yn, pred_yn))
        fp = sum(g != label and p == label for g, p in zip(gold_yn, pred_yn))
        fn = sum(g == label and p != label for g, p in zip(gold_yn, pred_yn))
        prec = tp / (tp + fp) if tp + fp else 0.0
        rec = tp / (tp + fn) if tp + fn else 0.0
        return 2 * prec * rec / (prec + rec) if prec + rec else 0.0

    f_yes, f_no = class_f1("yes"), class_f1("no")
    yesno = {"n": len(gold_yn),
             "acc": sum(g == p for g, p in zip(gold_yn, pred_yn)) / len(gold_yn),
             "f1_yes": f_yes, "f1_no": f_no, "f1": (f_yes + f_no) / 2}
    return records, {"factoid": factoid, "yesno": yesno}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--binary", required=True)
    args = parser.parse_args()

    make_bioasq_mini()
    make_corpus()
    tool = [str(Path(args.binary).resolve())]

    def run(*argv):
        subprocess.run(tool + list(argv), check=True, cwd=GOLDEN,
                       stderr=subprocess.DEVNULL, stdout=subprocess.DEVNULL)

    run("catalog", "--corpus", "corpus.pubtator", "--out", "/tmp/golden_catalog.json")
    run("gen-denoise", "--corpus", "corpus.pubtator", "--catalog",
        "/tmp/golden_catalog.json", "--out", "dataset.json", *GEN_ARGS)
    dataset = json.loads((GOLDEN / "dataset.json").read_text())
    records, expected = metrics(dataset)
    (GOLDEN / "predictions.jsonl").write_text(
        "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records))
    (GOLDEN / "expected_metrics.json").write_text(
        json.dumps(expected, indent=2, sort_keys=True) + "\n")
    run("evaluate", "--dataset", "dataset.json", "--predictions",
        "predictions.jsonl", "--out", "report.json")


if __name__ == "__main__":
    main()
