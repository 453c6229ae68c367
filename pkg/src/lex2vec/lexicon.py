"""Lexical resources: word-to-label dictionaries with optional prefix patterns.

Three file layouts are accepted:

* NRC emotion-lexicon style: ``word<TAB>label<TAB>flag`` lines, flag 1 keeps
  the association and flag 0 drops it.
* LIWC ``.dic`` style: a category block delimited by two ``%`` lines mapping
  ids to names, then ``pattern<TAB>id[<TAB>id...]`` body lines.  A trailing
  ``*`` on a pattern matches every word starting with that prefix.
* Plain: ``word<TAB>label`` lines, exact entries only.

Entries and query words are lowercased; queries are always matched literally
(a query is never interpreted as a pattern, so no escaping is needed).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import (
    MalformedLexiconLineError,
    MissingDelimiterError,
    UnknownCategoryIdError,
)

LEXICON_FORMATS = ("nrc", "liwc", "plain")

# Trie key holding the label set of a prefix that ends at this node.  Real
# keys are single characters, so None can never collide.
_END = None


class _PrefixTrie:
    """Character trie over prefix patterns.

    A query walks the trie once, collecting the labels of every stored
    prefix it passes through, so lookup cost is proportional to the query
    length plus the number of matches, not to the lexicon size.
    """

    __slots__ = ("_root",)

    def __init__(self, entries: Iterable[tuple[str, frozenset[str]]]):
        root: dict = {}
        for prefix, labels in entries:
            node = root
            for ch in prefix:
                node = node.setdefault(ch, {})
            node[_END] = labels | node.get(_END, frozenset())
        self._root = root

    def matches(self, word: str) -> set[str]:
        found: set[str] = set()
        node = self._root
        for ch in word:
            node = node.get(ch)
            if node is None:
                break
            labels = node.get(_END)
            if labels:
                found |= labels
        return found


def _check_entry(name: str, labels: frozenset[str], kind: str) -> None:
    if not name:
        raise ValueError(f"empty {kind} entry")
    if any(ch in "\t\n\r" for ch in name):
        raise ValueError(f"{kind} {name!r} contains a tab or newline")
    if not labels:
        raise ValueError(f"{kind} {name!r} has an empty label set")
    for label in labels:
        if not label:
            raise ValueError(f"{kind} {name!r} carries an empty label")
        if any(ch in "\t\n\r" for ch in label):
            raise ValueError(f"label {label!r} contains a tab or newline")


@dataclass(frozen=True)
class Lexicon:
    """Immutable word-pattern to label-set mapping.

    ``exact_entries`` maps whole words; ``prefix_entries`` holds (prefix,
    labels) pairs matching any word that starts with the prefix.  Both are
    lowercased on construction; label sets are never empty.
    """

    resource_name: str
    exact_entries: Mapping[str, frozenset[str]]
    prefix_entries: tuple[tuple[str, frozenset[str]], ...] = ()
    _trie: _PrefixTrie = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        exact: dict[str, frozenset[str]] = {}
        for word, labels in dict(self.exact_entries).items():
            key = word.lower()
            merged = frozenset(label.lower() for label in labels)
            exact[key] = exact.get(key, frozenset()) | merged
        prefixes: dict[str, frozenset[str]] = {}
        for prefix, labels in self.prefix_entries:
            key = prefix.lower()
            merged = frozenset(label.lower() for label in labels)
            prefixes[key] = prefixes.get(key, frozenset()) | merged

        for word, labels in exact.items():
            _check_entry(word, labels, "word")
        for prefix, labels in prefixes.items():
            _check_entry(prefix, labels, "prefix")

        prefix_tuple = tuple(prefixes.items())
        object.__setattr__(self, "exact_entries", exact)
        object.__setattr__(self, "prefix_entries", prefix_tuple)
        object.__setattr__(self, "_trie", _PrefixTrie(prefix_tuple))

    def lookup(self, word: str) -> set[str]:
        """All labels matching ``word``: its exact entry plus every stored
        prefix of it.  Returns an empty set on a miss."""
        key = word.lower()
        found = set(self.exact_entries.get(key, ()))
        found |= self._trie.matches(key)
        return found

    @property
    def entry_count(self) -> int:
        return len(self.exact_entries) + len(self.prefix_entries)


def lookup(lexicon: Lexicon, word: str) -> set[str]:
    """Function form of :meth:`Lexicon.lookup`."""
    return lexicon.lookup(word)


def _split_fields(line: str) -> list[str]:
    return [f.strip() for f in line.split("\t")]


def load_nrc(source: Iterable[str]) -> Lexicon:
    """Load an NRC-style lexicon: ``word<TAB>label<TAB>flag`` per line.

    Lines with flag 1 add the label to the word's set; flag 0 lines carry no
    association and are skipped.  Blank lines are ignored.
    """
    entries: dict[str, set[str]] = {}
    for number, raw in enumerate(source, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        fields = _split_fields(line)
        if len(fields) != 3:
            raise MalformedLexiconLineError(
                f"expected 3 tab-separated fields, found {len(fields)}", number
            )
        word, label, flag = fields
        if flag not in ("0", "1"):
            raise MalformedLexiconLineError(
                f"association flag must be 0 or 1, found {flag!r}", number
            )
        if not word or not label:
            raise MalformedLexiconLineError("empty word or label", number)
        if flag == "1":
            entries.setdefault(word.lower(), set()).add(label.lower())
    return Lexicon("nrc", {w: frozenset(ls) for w, ls in entries.items()})


def load_liwc(source: Iterable[str]) -> Lexicon:
    """Load a LIWC-style ``.dic`` file.

    Expects ``%``, category lines ``id<TAB>name``, ``%``, then body lines
    ``pattern<TAB>id[<TAB>id...]``.  A single trailing ``*`` marks a prefix
    pattern (the ``*`` is stripped); any other ``*`` is kept literally.
    """
    categories: dict[str, str] = {}
    exact: dict[str, set[str]] = {}
    prefixes: dict[str, set[str]] = {}
    section = 0  # 0: before opening %, 1: category block, 2: body
    last_number = 0

    for number, raw in enumerate(source, start=1):
        last_number = number
        line = raw.rstrip("\r\n")
        stripped = line.strip()
        if not stripped:
            continue
        if section == 0:
            if stripped != "%":
                raise MissingDelimiterError(
                    "expected '%' opening the category section", number
                )
            section = 1
        elif section == 1:
            if stripped == "%":
                section = 2
                continue
            fields = _split_fields(line)
            if len(fields) != 2 or not fields[0] or not fields[1]:
                raise MalformedLexiconLineError(
                    "expected 'category_id<TAB>category_name'", number
                )
            cat_id, cat_name = fields
            if cat_id in categories:
                raise MalformedLexiconLineError(
                    f"duplicate category id {cat_id!r}", number
                )
            categories[cat_id] = cat_name.lower()
        else:
            fields = [f for f in _split_fields(line) if f]
            if len(fields) < 2:
                raise MalformedLexiconLineError(
                    "expected a pattern followed by at least one category id", number
                )
            pattern, ids = fields[0], fields[1:]
            labels: set[str] = set()
            for cat_id in ids:
                if cat_id not in categories:
                    raise UnknownCategoryIdError(
                        f"category id {cat_id!r} is not declared in the header", number
                    )
                labels.add(categories[cat_id])
            if pattern.endswith("*"):
                prefix = pattern[:-1].lower()
                if not prefix:
                    raise MalformedLexiconLineError("bare '*' is not a valid pattern", number)
                prefixes.setdefault(prefix, set()).update(labels)
            else:
                exact.setdefault(pattern.lower(), set()).update(labels)

    if section < 2:
        raise MissingDelimiterError(
            "category section was never closed with '%'", last_number or None
        )
    return Lexicon(
        "liwc",
        {w: frozenset(ls) for w, ls in exact.items()},
        tuple((p, frozenset(ls)) for p, ls in prefixes.items()),
    )


def load_plain(source: Iterable[str]) -> Lexicon:
    """Load a plain ``word<TAB>label`` lexicon (exact entries only)."""
    entries: dict[str, set[str]] = {}
    for number, raw in enumerate(source, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        fields = _split_fields(line)
        if len(fields) != 2 or not fields[0] or not fields[1]:
            raise MalformedLexiconLineError("expected 'word<TAB>label'", number)
        word, label = fields
        entries.setdefault(word.lower(), set()).add(label.lower())
    return Lexicon("plain", {w: frozenset(ls) for w, ls in entries.items()})


_LOADERS = {"nrc": load_nrc, "liwc": load_liwc, "plain": load_plain}


def load_lexicon(path: str | Path, fmt: str) -> Lexicon:
    """Open ``path`` as UTF-8 text and load it as ``fmt`` (nrc, liwc, or plain)."""
    try:
        loader = _LOADERS[fmt]
    except KeyError:
        raise ValueError(
            f"unknown lexicon format {fmt!r}; expected one of {', '.join(LEXICON_FORMATS)}"
        ) from None
    with open(path, "r", encoding="utf-8") as stream:
        return loader(stream)


def merge_lexicons(lexicons: Sequence[Lexicon]) -> Lexicon:
    """Union several lexicons into one.

    Label sets are merged per word/prefix; the combined resource name joins
    the parts with ``+`` in the order given.
    """
    if not lexicons:
        raise ValueError("at least one lexicon is required")
    if len(lexicons) == 1:
        return lexicons[0]
    exact: dict[str, frozenset[str]] = {}
    prefixes: dict[str, frozenset[str]] = {}
    for lex in lexicons:
        for word, labels in lex.exact_entries.items():
            exact[word] = exact.get(word, frozenset()) | labels
        for prefix, labels in lex.prefix_entries:
            prefixes[prefix] = prefixes.get(prefix, frozenset()) | labels
    name = "+".join(lex.resource_name for lex in lexicons)
    return Lexicon(name, exact, tuple(prefixes.items()))


def emit_liwc(lexicon: Lexicon) -> str:
    """Serialize any lexicon canonically in the LIWC ``.dic`` layout.

    Category ids are assigned in sorted label order and entries are emitted
    sorted, so equal lexicons serialize identically.  Reloading the output
    with :func:`load_liwc` yields the same lookup results for every word.
    """
    labels = sorted({label for _, ls in lexicon.exact_entries.items() for label in ls}
                    | {label for _, ls in lexicon.prefix_entries for label in ls})
    ids = {label: str(i) for i, label in enumerate(labels, start=1)}

    lines = ["%"]
    lines.extend(f"{ids[label]}\t{label}" for label in labels)
    lines.append("%")
    for word in sorted(lexicon.exact_entries):
        id_fields = "\t".join(ids[label] for label in sorted(lexicon.exact_entries[word]))
        lines.append(f"{word}\t{id_fields}")
    for prefix, prefix_labels in sorted(lexicon.prefix_entries):
        id_fields = "\t".join(ids[label] for label in sorted(prefix_labels))
        lines.append(f"{prefix}*\t{id_fields}")
    return "\n".join(lines) + "\n"
