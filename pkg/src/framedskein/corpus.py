"""Deterministic, seed-driven diagram corpus.

Every diagram is generated in-repo (torus closures, kink chains, random
braid closures and flat-point variants), so all golden values used by
the verification suites are reproducible from the seed alone.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .diagram import FramedDiagram, parse_diagram, serialize_pd

DEFAULT_SEED = 42
MAX_CROSSINGS = 8


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    pd: str
    n_crossings: int
    n_components: int
    n_flat: int

    def diagram(self) -> FramedDiagram:
        return parse_diagram(self.pd, "pd")


def _entry(name: str, d: FramedDiagram) -> CorpusEntry:
    return CorpusEntry(name, serialize_pd(d), d.n_crossings,
                       d.n_components(), len(d.flat_crossings()))


def _random_braid_word(rng: random.Random, width: int, length: int) -> str:
    letters = []
    for _ in range(length):
        k = rng.randint(1, width - 1)
        e = rng.choice(("", "^-1"))
        letters.append(f"s{k}{e}")
    return " ".join(letters)


def generate_corpus(seed: int = DEFAULT_SEED,
                    max_crossings: int = MAX_CROSSINGS) -> list[CorpusEntry]:
    rng = random.Random(seed)
    entries: list[CorpusEntry] = []

    entries.append(_entry("unknot", parse_diagram("O", "pd")))
    entries.append(_entry("unlink2", parse_diagram("O\nO", "pd")))

    # torus braid closures s1^k
    for k in range(1, 7):
        d = parse_diagram(" ".join(["s1"] * k), "braid")
        entries.append(_entry(f"torus-{k}", d))
    entries.append(_entry("torus-neg-3",
                          parse_diagram("s1^-1 s1^-1 s1^-1", "braid")))

    # kink chains: kinks of random signs stacked on one strand
    base = parse_diagram("s1", "braid")
    for i in range(8):
        d = base
        for _ in range(rng.randint(1, max_crossings - 1)):
            arc = d.arcs[rng.randrange(len(d.arcs))]
            d = d.add_kink(arc, rng.choice((1, -1)))
        entries.append(_entry(f"kinks-{i}", d))

    # random braid closures, deduplicated by canonical code
    seen = {e.diagram().canonical_code() for e in entries}
    count = 0
    while count < 34:
        width = rng.randint(2, 4)
        length = rng.randint(3, max_crossings)
        word = _random_braid_word(rng, width, length)
        d = parse_diagram(word, "braid")
        if d.n_crossings > max_crossings:
            continue
        code = d.canonical_code()
        if code in seen:
            continue
        seen.add(code)
        entries.append(_entry(f"braid-{count}", d))
        count += 1

    # flat-point variants: k of the crossings forgotten, k = 1..4
    resolved = [e for e in entries if e.n_crossings >= 4 and e.n_flat == 0]
    for k in range(1, 5):
        for i in range(3):
            e = resolved[rng.randrange(len(resolved))]
            d = e.diagram()
            for c in rng.sample(range(d.n_crossings), k):
                d = d.make_flat(c)
            entries.append(_entry(f"flat{k}-{i}-{e.id}", d))

    return entries


def write_corpus(entries: list[CorpusEntry], out_dir: str | Path) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = []
    for e in entries:
        (out / f"{e.id}.pd").write_text(e.pd)
        manifest.append({"id": e.id, "file": f"{e.id}.pd",
                         "n_crossings": e.n_crossings,
                         "n_components": e.n_components,
                         "n_flat": e.n_flat})
    path = out / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2) + "\n")
    return path


def load_corpus(dir_path: str | Path) -> list[CorpusEntry]:
    out = Path(dir_path)
    manifest = json.loads((out / "manifest.json").read_text())
    entries = []
    for m in manifest:
        pd = (out / m["file"]).read_text()
        entries.append(CorpusEntry(m["id"], pd, m["n_crossings"],
                                   m["n_components"], m["n_flat"]))
    return entries


_cache: dict[int, list[CorpusEntry]] = {}


def default_corpus(seed: int = DEFAULT_SEED) -> list[CorpusEntry]:
    if seed not in _cache:
        _cache[seed] = generate_corpus(seed)
    return _cache[seed]
