"""Rule-based sentence segmentation for abstracts.

A boundary is a run of terminal punctuation (``.``, ``!``, ``?``)
followed by whitespace and an uppercase letter or digit, unless the text
ends in a known abbreviation. The splitter first collapses all
whitespace runs to single spaces, so every emitted sentence is a
contiguous substring of the normalized abstract and joining the
sentences with single spaces reproduces it exactly.

This is a deliberately simple, deterministic splitter; it makes no
attempt at the harder cases (quoted speech, initials in names).
"""

from __future__ import annotations

from .errors import DataError

# Lowercased abbreviations that must not end a sentence. A multi-word
# entry like "et al." matches across the preceding space.
ABBREVIATIONS: tuple[str, ...] = (
    "et al.",
    "e.g.",
    "i.e.",
    "i.i.d.",
    "w.r.t.",
    "cf.",
    "ca.",
    "vs.",
    "resp.",
    "fig.",
    "figs.",
    "eq.",
    "eqs.",
    "sec.",
    "tab.",
    "dr.",
    "prof.",
    "mr.",
    "ms.",
)

_TERMINALS = ".!?"


def normalize_whitespace(text: str) -> str:
    """Collapse whitespace runs to single spaces and strip the ends."""
    return " ".join(text.split())


def _ends_with_abbreviation(text: str, end: int) -> bool:
    """True if text[:end+1] ends in a known abbreviation.

    Only single-period runs qualify; "etc?!" is never an abbreviation.
    The character before the abbreviation must be a space or the start
    of the text, so "against." does not match "st.".
    """
    head = text[: end + 1].lower()
    for abbr in ABBREVIATIONS:
        if head.endswith(abbr):
            cut = len(head) - len(abbr)
            if cut == 0 or head[cut - 1] == " ":
                return True
    return False


def segment_sentences(abstract: str) -> list[str]:
    """Split an abstract into sentences.

    Raises DataError on input that is empty after trimming.
    """
    text = normalize_whitespace(abstract)
    if not text:
        raise DataError("cannot segment an empty abstract")

    sentences: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in _TERMINALS:
            j = i
            while j + 1 < n and text[j + 1] in _TERMINALS:
                j += 1
            after = j + 1
            if (
                after < n
                and text[after] == " "
                and after + 1 < n
                and (text[after + 1].isupper() or text[after + 1].isdigit())
                and not (i == j and text[j] == "." and _ends_with_abbreviation(text, j))
            ):
                sentences.append(text[start : j + 1])
                start = after + 1
            i = j + 1
        else:
            i += 1
    if start < n:
        sentences.append(text[start:])
    return sentences
