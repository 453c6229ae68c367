"""Read, write, and normalize word-embedding tables stored as text.

Two on-disk layouts are supported:

* Word2Vec text: a header line ``<vocab_size> <dim_count>`` followed by one
  ``word v1 v2 ... vD`` line per word.
* GloVe text: the same data lines with no header.

All downstream labeling operates on tables whose values were rescaled into
[0, 1]; :func:`normalize` produces those via min-max scaling.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, Literal

import numpy as np

from .errors import (
    DimensionMismatchError,
    EmptyInputError,
    MalformedLineError,
    NonFiniteValueError,
)

logger = logging.getLogger(__name__)

NormalizationScope = Literal["dimension", "word", "global"]


class EmbeddingFormat(Enum):
    """The accepted embedding text layouts."""

    WORD2VEC_TEXT = "word2vec"
    GLOVE_TEXT = "glove"
    AUTO = "auto"


@dataclass(frozen=True, eq=False)
class EmbeddingTable:
    """Ordered vocabulary plus one raw vector per word.

    ``vectors`` is an immutable float64 matrix with one row per vocabulary
    entry.  Words must be unique, non-empty, and free of whitespace (the text
    formats are whitespace-delimited, so such words could never round-trip).
    """

    vocabulary: tuple[str, ...]
    vectors: np.ndarray
    duplicates_skipped: int = 0

    def __post_init__(self):
        vocab = tuple(self.vocabulary)
        if not vocab:
            raise ValueError("vocabulary must not be empty")
        if len(set(vocab)) != len(vocab):
            raise ValueError("vocabulary contains duplicate words")
        for word in vocab:
            if not word or any(ch.isspace() for ch in word):
                raise ValueError(f"invalid word {word!r}: empty or contains whitespace")
        vectors = np.array(self.vectors, dtype=np.float64, copy=True)
        if vectors.ndim != 2:
            raise ValueError(f"vectors must be a 2-D matrix, got ndim={vectors.ndim}")
        if vectors.shape[0] != len(vocab):
            raise ValueError(
                f"vector rows ({vectors.shape[0]}) do not match vocabulary size ({len(vocab)})"
            )
        if vectors.shape[1] < 1:
            raise ValueError("vectors must have at least one dimension")
        vectors.setflags(write=False)
        object.__setattr__(self, "vocabulary", vocab)
        object.__setattr__(self, "vectors", vectors)

    @property
    def dim_count(self) -> int:
        return int(self.vectors.shape[1])

    @property
    def word_count(self) -> int:
        return len(self.vocabulary)


@dataclass(frozen=True, eq=False)
class NormalizedEmbeddingTable(EmbeddingTable):
    """An :class:`EmbeddingTable` whose values all lie in [0, 1]."""

    def __post_init__(self):
        super().__post_init__()
        values = self.vectors
        if not np.isfinite(values).all():
            raise NonFiniteValueError("normalized tables must not contain NaN or infinity")
        if (values < 0.0).any() or (values > 1.0).any():
            raise ValueError("normalized values must lie in [0, 1]")


def detect_format(first_line: str) -> EmbeddingFormat:
    """Classify a file by its first line.

    A line consisting of exactly two positive integers is the Word2Vec text
    header; anything else is treated as a GloVe data line.
    """
    tokens = first_line.split()
    if len(tokens) == 2 and all(_is_positive_int(t) for t in tokens):
        return EmbeddingFormat.WORD2VEC_TEXT
    return EmbeddingFormat.GLOVE_TEXT


def _is_positive_int(token: str) -> bool:
    return token.isascii() and token.isdigit() and int(token) > 0


def _content_lines(source: Iterable[str]) -> Iterator[tuple[int, str]]:
    # Line numbers are 1-based over the raw input; blank lines are skipped.
    for number, raw in enumerate(source, start=1):
        if raw.strip():
            yield number, raw


def _parse_header(number: int, line: str) -> int:
    tokens = line.split()
    if len(tokens) != 2 or not all(_is_positive_int(t) for t in tokens):
        raise MalformedLineError(
            "expected Word2Vec header '<vocab_size> <dim_count>'", number
        )
    return int(tokens[1])


def parse_embeddings(
    source: Iterable[str],
    fmt: EmbeddingFormat = EmbeddingFormat.AUTO,
) -> EmbeddingTable:
    """Parse a line-oriented embedding source into an :class:`EmbeddingTable`.

    Args:
        source: Lines of text (an open file, ``io.StringIO``, or a list).
        fmt: Input layout; ``AUTO`` decides from the first non-blank line.

    Returns:
        The parsed table.  Vocabulary order equals file order; when a word
        repeats, the first occurrence wins and later ones are skipped (the
        skip count is kept on ``duplicates_skipped`` and logged).

    Raises:
        EmptyInputError: no data lines were found.
        MalformedLineError: wrong token count or unparseable number.
        DimensionMismatchError: the header disagrees with the data lines.
    """
    lines = _content_lines(source)
    try:
        first_number, first_line = next(lines)
    except StopIteration:
        raise EmptyInputError("no embedding lines found") from None

    if fmt is EmbeddingFormat.AUTO:
        fmt = detect_format(first_line)

    header_dims: int | None = None
    if fmt is EmbeddingFormat.WORD2VEC_TEXT:
        header_dims = _parse_header(first_number, first_line)
        try:
            first_number, first_line = next(lines)
        except StopIteration:
            raise EmptyInputError("header present but no embedding lines follow") from None

    words: list[str] = []
    rows: list[list[float]] = []
    seen: set[str] = set()
    duplicates = 0
    dim_count: int | None = None

    for number, line in itertools.chain([(first_number, first_line)], lines):
        tokens = line.split()
        if dim_count is None:
            if len(tokens) < 2:
                raise MalformedLineError(
                    "expected a word followed by at least one value", number
                )
            dim_count = len(tokens) - 1
            if header_dims is not None and dim_count != header_dims:
                raise DimensionMismatchError(
                    f"header declares {header_dims} dimensions but data has {dim_count}",
                    number,
                )
        elif len(tokens) - 1 != dim_count:
            raise MalformedLineError(
                f"expected {dim_count} values, found {len(tokens) - 1}", number
            )
        word = tokens[0]
        values = []
        for token in tokens[1:]:
            try:
                values.append(float(token))
            except ValueError:
                raise MalformedLineError(f"unparseable number {token!r}", number) from None
        if word in seen:
            duplicates += 1
            continue
        seen.add(word)
        words.append(word)
        rows.append(values)

    if duplicates:
        logger.warning("skipped %d duplicate word(s); first occurrence kept", duplicates)
    return EmbeddingTable(
        tuple(words), np.asarray(rows, dtype=np.float64), duplicates_skipped=duplicates
    )


def read_embeddings(
    path: str | Path,
    fmt: EmbeddingFormat = EmbeddingFormat.AUTO,
) -> EmbeddingTable:
    """Open ``path`` as UTF-8 text and parse it with :func:`parse_embeddings`."""
    with open(path, "r", encoding="utf-8") as stream:
        return parse_embeddings(stream, fmt)


def normalize(
    table: EmbeddingTable,
    scope: NormalizationScope = "dimension",
) -> NormalizedEmbeddingTable:
    """Min-max rescale a table into [0, 1].

    Args:
        table: Any embedding table with finite values.
        scope: What the min/max are taken over.  ``dimension`` (the default)
            scales each column independently, ``word`` each row, ``global``
            the whole matrix.

    Returns:
        A table of the same shape where, within each scaling group, the
        minimum maps to exactly 0.0 and the maximum to exactly 1.0.
        Degenerate groups (max equals min) map every value to 0.5, which no
        band test with theta > 0.5 can ever select.

    Raises:
        NonFiniteValueError: the input contains NaN or infinity.
    """
    values = table.vectors
    if not np.isfinite(values).all():
        raise NonFiniteValueError("cannot normalize a table with NaN or infinite values")

    if scope == "dimension":
        lo = values.min(axis=0, keepdims=True)
        hi = values.max(axis=0, keepdims=True)
    elif scope == "word":
        lo = values.min(axis=1, keepdims=True)
        hi = values.max(axis=1, keepdims=True)
    elif scope == "global":
        lo = values.min(keepdims=True)
        hi = values.max(keepdims=True)
    else:
        raise ValueError(f"unknown normalization scope {scope!r}")

    span = hi - lo
    degenerate = span == 0.0
    scaled = (values - lo) / np.where(degenerate, 1.0, span)
    scaled = np.where(np.broadcast_to(degenerate, scaled.shape), 0.5, scaled)
    return NormalizedEmbeddingTable(
        table.vocabulary, scaled, duplicates_skipped=table.duplicates_skipped
    )


def emit_embeddings(
    table: EmbeddingTable,
    fmt: EmbeddingFormat = EmbeddingFormat.GLOVE_TEXT,
    precision: int | None = None,
) -> str:
    """Serialize a table back to its text form.

    ``precision`` fixes the number of decimal places; ``None`` uses Python's
    shortest round-trip representation, so ``parse_embeddings`` recovers the
    exact values.
    """
    if fmt is EmbeddingFormat.AUTO:
        raise ValueError("emit requires a concrete format, not AUTO")
    if precision is None:
        render = lambda v: repr(float(v))  # noqa: E731
    else:
        render = lambda v: f"{v:.{precision}f}"  # noqa: E731

    lines: list[str] = []
    if fmt is EmbeddingFormat.WORD2VEC_TEXT:
        lines.append(f"{table.word_count} {table.dim_count}")
    for word, row in zip(table.vocabulary, table.vectors):
        lines.append(word + " " + " ".join(render(v) for v in row))
    return "\n".join(lines) + "\n"
