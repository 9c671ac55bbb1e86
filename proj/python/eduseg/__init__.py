"""Rule-based discourse segmentation into elementary discourse units.

The heavy lifting lives in the compiled extension ``_eduseg``; this package
re-exports it and knows where the bundled lexicon data lives.
"""

from pathlib import Path

from ._eduseg import (
    EdusegError,
    MarkerEntry,
    MarkerLexicon,
    Segment,
    SegmentedDocument,
    Token,
    agreement,
    expand_elision,
    extract_pairs,
    score,
    segment,
    segment_pretagged,
    split_sentences,
    tokenize,
)

__all__ = [
    "EdusegError",
    "MarkerEntry",
    "MarkerLexicon",
    "Segment",
    "SegmentedDocument",
    "Token",
    "agreement",
    "default_lexicon_path",
    "expand_elision",
    "extract_pairs",
    "load_default_lexicon",
    "score",
    "segment",
    "segment_pretagged",
    "split_sentences",
    "tokenize",
]


def default_lexicon_path(language: str = "fr") -> Path:
    """Path of the bundled lexicon for *language*."""
    path = Path(__file__).parent / "data" / "lexicons" / f"{language}.lex"
    if not path.exists():
        raise FileNotFoundError(f"no bundled lexicon for language {language!r}: {path}")
    return path


def load_default_lexicon(language: str = "fr", include_comma_marker: bool = False) -> MarkerLexicon:
    """The bundled marker lexicon for *language*."""
    return MarkerLexicon.load_file(
        str(default_lexicon_path(language)), language, include_comma_marker
    )
