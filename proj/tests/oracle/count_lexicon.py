#!/usr/bin/env python3
"""Independent entry counter for marker lexicon files.

Recomputes, with no C++ involved, the number of distinct entries a lexicon
file yields after normalization, elision expansion and deduplication, plus
the max entry length in words and the number of elided entries.  The numbers
printed here are frozen into the C++ test suite as golden values.

Usage: count_lexicon.py LEXICON_FILE [--include-comma-marker]
"""

import sys
import unicodedata

APOSTROPHES = "'’"
NO_SPLIT = {"aujourd'hui", "quelqu'un", "quelqu'une"}


def is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P") or ch in "$+<=>^`|~"


def normalize(record: str) -> str:
    record = record.replace("’", "'").lower()
    return " ".join(record.split())


def split_words(record: str) -> list[str]:
    words = []
    for chunk in record.split():
        # leading punctuation
        while chunk and is_punct(chunk[0]) and not (
            chunk[0] in APOSTROPHES and len(chunk) > 1 and chunk[1].isalpha()
        ):
            words.append(chunk[0])
            chunk = chunk[1:]
        # trailing punctuation; apostrophe after a letter stays attached
        trail = []
        while chunk and is_punct(chunk[-1]):
            if chunk[-1] in APOSTROPHES and len(chunk) > 1 and chunk[-2].isalpha():
                break
            trail.append(chunk[-1])
            chunk = chunk[:-1]
        if chunk:
            if chunk in NO_SPLIT:
                words.append(chunk)
            else:
                piece = ""
                for i, ch in enumerate(chunk):
                    piece += ch
                    if ch in APOSTROPHES and i + 1 < len(chunk) and chunk[i + 1].isalpha():
                        words.append(piece)
                        piece = ""
                if piece:
                    words.append(piece)
        words.extend(reversed(trail))
    return words


def expand(words: list[str]) -> list[list[str]]:
    out = [words]
    last = words[-1]
    if last[-1] in APOSTROPHES:
        stem = last[:-1]
        companion = None
        if stem.endswith("qu"):
            companion = stem + "e"
        elif stem.endswith("d"):
            companion = stem + "e"
        elif stem.endswith("s"):
            companion = stem + "i"
        elif stem.endswith("l"):
            companion = stem + "e"
        if companion is not None:
            out.append(words[:-1] + [companion])
    return out


def main() -> int:
    path = sys.argv[1]
    include_comma = "--include-comma-marker" in sys.argv[2:]

    entries = set()
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            for record in line.split("/"):
                record = normalize(record)
                if not record:
                    continue
                words = split_words(record)
                if not words:
                    continue
                if not include_comma and all(
                    all(is_punct(c) for c in w) for w in words
                ):
                    continue
                for exp in expand(words):
                    entries.add(tuple(exp))

    elided = sum(1 for e in entries if e[-1][-1] in APOSTROPHES)
    max_len = max(len(e) for e in entries)
    print(f"entries {len(entries)}")
    print(f"max_len {max_len}")
    print(f"elided {elided}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
