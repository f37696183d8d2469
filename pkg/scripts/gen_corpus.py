#!/usr/bin/env python3
"""Regenerate the bundled corpus files under src/graycat/data/corpus/."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from graycat import corpus, serialize
from graycat.builders import quotient_z4_to_z2

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "graycat" / "data" / "corpus"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    files = {}
    for name, g in corpus.gray_categories().items():
        files[f"gray-{name}.txt"] = serialize.write_gray_category(g)
    for name, t in corpus.two_categories().items():
        files[f"two-{name}.txt"] = serialize.write_two_category(t)
    for name, c in corpus.categories().items():
        files[f"cat-{name}.txt"] = serialize.write_category(c)
    for name, c in corpus.computads().items():
        files[f"computad-{name}.txt"] = serialize.write_computad(c)
    qf, _, _ = quotient_z4_to_z2()
    files["functor-quotient-bz4-bz2.txt"] = serialize.write_gray_functor(qf)
    for name, text in sorted(files.items()):
        path = OUT / name.replace("(", "_").replace(")", "")
        path.write_text(text, encoding="utf-8")
        print("wrote", path.name)


if __name__ == "__main__":
    main()
