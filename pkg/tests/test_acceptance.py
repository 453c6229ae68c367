"""Acceptance criteria, one test per criterion.

Each test is exact about its stated tolerance: structural and counting
checks are zero-tolerance, normalization numerics allow 1e-9, and the two
timing checks use wall-clock budgets.  The terminal summary prints one
PASS/FAIL line per criterion (see conftest).
"""

from __future__ import annotations

import io
import time

import numpy as np

from lex2vec import (
    EmbeddingFormat,
    Lexicon,
    NormalizedEmbeddingTable,
    SweepReport,
    SweepRow,
    avg_labels_per_dimension,
    cap_labels,
    emit_embeddings,
    label_dimensions,
    load_liwc,
    load_nrc,
    normalize,
    parse_embeddings,
    sweep,
    top_k_frequent,
    unnamed_ratio,
)
from lex2vec.embeddings import EmbeddingTable
from lex2vec.report import render_sweep_tsv

from helpers import (
    LABEL_POOL,
    brute_force_label_counts,
    random_lexicon,
    random_normalized_table,
    random_words,
)

THETA_GRID = (0.81, 0.79, 0.77, 0.75)
NORM_TOL = 1e-9


def test_criterion_01_oracle_equivalence():
    """label_dimensions matches a brute-force triple loop on 200 random instances."""
    rng = np.random.default_rng(1001)
    started = time.perf_counter()
    for i in range(200):
        table = random_normalized_table(rng, max_words=32, max_dims=8)
        lexicon = random_lexicon(rng, table.vocabulary)
        theta = (0.6, 0.75, 0.9)[i % 3]
        expected = brute_force_label_counts(
            table.vocabulary,
            table.vectors.tolist(),
            dict(lexicon.exact_entries),
            lexicon.prefix_entries,
            theta,
        )
        got = label_dimensions(table, lexicon, theta)
        assert list(got.per_dimension) == expected, f"instance {i} diverged"
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0, f"200 oracle comparisons took {elapsed:.2f}s"


def test_criterion_02_theta_monotonicity():
    """Across the standard grid, lowering theta never raises the unnamed
    ratio and never lowers the average label mass.  Exact, 50 fixtures."""
    rng = np.random.default_rng(1002)
    for _ in range(50):
        table = random_normalized_table(rng, max_words=40, max_dims=10)
        lexicon = random_lexicon(rng, table.vocabulary)
        report = sweep(table, [lexicon], THETA_GRID)
        rows = report.rows
        assert [row.theta for row in rows] == sorted(THETA_GRID, reverse=True)
        for above, below in zip(rows, rows[1:]):
            assert below.unnamed_ratio <= above.unnamed_ratio
            assert below.avg_labels_all >= above.avg_labels_all


def _nested_sublexicon(rng, lexicon):
    exact = {}
    for word, labels in lexicon.exact_entries.items():
        kept = frozenset(l for l in labels if rng.random() < 0.6)
        if kept:
            exact[word] = kept
    prefixes = []
    for prefix, labels in lexicon.prefix_entries:
        kept = frozenset(l for l in labels if rng.random() < 0.6)
        if kept:
            prefixes.append((prefix, kept))
    return Lexicon("subset", exact, tuple(prefixes))


def test_criterion_03_lexicon_size_effect():
    """For nested lexicons L1 within L2, L2 covers at least as much at
    every theta: higher average mass, lower unnamed ratio.  Exact."""
    rng = np.random.default_rng(1003)
    for _ in range(30):
        table = random_normalized_table(rng, max_words=40, max_dims=10)
        bigger = random_lexicon(rng, table.vocabulary)
        smaller = _nested_sublexicon(rng, bigger)
        for theta in THETA_GRID:
            run_small = label_dimensions(table, smaller, theta)
            run_big = label_dimensions(table, bigger, theta)
            assert avg_labels_per_dimension(run_big, "all") >= avg_labels_per_dimension(
                run_small, "all"
            )
            assert unnamed_ratio(run_big) <= unnamed_ratio(run_small)


def test_criterion_04_normalization_suite():
    """Range, exact per-dimension extremes, idempotence, and order
    preservation, all within 1e-9."""
    rng = np.random.default_rng(1004)
    for _ in range(30):
        n_words = int(rng.integers(2, 40))
        n_dims = int(rng.integers(1, 12))
        values = rng.normal(scale=10.0, size=(n_words, n_dims))
        if n_dims >= 2:
            values[:, 0] = 7.5  # guarantee one degenerate dimension
        table = EmbeddingTable(tuple(random_words(rng, n_words)), values)
        normed = normalize(table)

        assert (normed.vectors >= -NORM_TOL).all()
        assert (normed.vectors <= 1.0 + NORM_TOL).all()

        for j in range(n_dims):
            raw_col = table.vectors[:, j]
            col = normed.vectors[:, j]
            if raw_col.min() == raw_col.max():
                assert np.abs(col - 0.5).max() <= NORM_TOL
                continue
            assert abs(col.min() - 0.0) <= NORM_TOL
            assert abs(col.max() - 1.0) <= NORM_TOL
            order = np.argsort(raw_col, kind="stable")
            diffs = np.diff(col[order])
            assert (diffs >= -NORM_TOL).all()
            raw_sorted = raw_col[order]
            span = raw_col.max() - raw_col.min()
            for k in range(len(raw_sorted) - 1):
                if (raw_sorted[k + 1] - raw_sorted[k]) / span > NORM_TOL:
                    assert col[order][k + 1] > col[order][k]

        twice = normalize(normed)
        assert np.abs(twice.vectors - normed.vectors).max() <= NORM_TOL


NRC_FIXTURE = (
    "abandon\tfear\t1\n"
    "abandon\tsadness\t1\n"
    "abandon\tjoy\t0\n"
    "cherish\tjoy\t1\n"
    "cherish\ttrust\t1\n"
    "outrage\tanger\t1\n"
)

LIWC_FIXTURE = (
    "%\n"
    "1\tposemo\n"
    "2\tnegemo\n"
    "3\tsocial\n"
    "%\n"
    "happ*\t1\n"
    "joy\t1\n"
    "hate*\t2\n"
    "friend*\t3\t1\n"
    "grief\t2\n"
)


def test_criterion_05_format_round_trips():
    """1,000 x 50 embedding tables survive emit/parse in both text layouts;
    NRC and LIWC fixtures load with the exact expected lookups."""
    rng = np.random.default_rng(1005)
    table = EmbeddingTable(
        tuple(random_words(rng, 1000)), rng.normal(size=(1000, 50))
    )
    for fmt in (EmbeddingFormat.WORD2VEC_TEXT, EmbeddingFormat.GLOVE_TEXT):
        back = parse_embeddings(io.StringIO(emit_embeddings(table, fmt)), fmt)
        assert back.vocabulary == table.vocabulary
        assert back.dim_count == 50
        np.testing.assert_array_equal(back.vectors, table.vectors)

        fixed = parse_embeddings(
            io.StringIO(emit_embeddings(table, fmt, precision=6)), fmt
        )
        np.testing.assert_allclose(fixed.vectors, table.vectors, atol=1e-6, rtol=0)

    nrc = load_nrc(io.StringIO(NRC_FIXTURE))
    assert nrc.lookup("abandon") == {"fear", "sadness"}
    assert nrc.lookup("cherish") == {"joy", "trust"}
    assert nrc.lookup("outrage") == {"anger"}
    assert nrc.lookup("missing") == set()

    liwc = load_liwc(io.StringIO(LIWC_FIXTURE))
    assert liwc.lookup("happy") == {"posemo"}
    assert liwc.lookup("happiness") == {"posemo"}
    assert liwc.lookup("happ") == {"posemo"}
    assert liwc.lookup("joy") == {"posemo"}
    assert liwc.lookup("joyful") == set()
    assert liwc.lookup("hate") == {"negemo"}
    assert liwc.lookup("hateful") == {"negemo"}
    assert liwc.lookup("friendly") == {"social", "posemo"}
    assert liwc.lookup("grief") == {"negemo"}
    assert liwc.lookup("griefs") == set()
    assert liwc.lookup("table") == set()


def test_criterion_06_boundary_semantics():
    """Values equal to theta or 1 - theta never label; theta = 1.0 leaves
    every dimension unnamed."""
    table = NormalizedEmbeddingTable(
        ("edgehigh", "edgelow", "inhigh", "inlow"),
        [[0.75, 0.75], [0.25, 0.25], [0.8, 0.75], [0.25, 0.2]],
    )
    lexicon = Lexicon(
        "demo",
        {
            "edgehigh": {"eh"},
            "edgelow": {"el"},
            "inhigh": {"ih"},
            "inlow": {"il"},
        },
    )
    labeling = label_dimensions(table, lexicon, 0.75)
    assert labeling.per_dimension == ({"ih": 1}, {"il": 1})

    rng = np.random.default_rng(1006)
    for _ in range(20):
        random_table = random_normalized_table(rng)
        random_lex = random_lexicon(rng, random_table.vocabulary)
        at_one = label_dimensions(random_table, random_lex, 1.0)
        assert unnamed_ratio(at_one) == 1.0


def test_criterion_07_filter_contract():
    """cap/top-k never increase a metric, keep retained counts untouched,
    and are the identity when the limit is generous."""
    rng = np.random.default_rng(1007)
    for _ in range(30):
        table = random_normalized_table(rng, max_words=24, max_dims=8)
        lexicon = random_lexicon(rng, table.vocabulary)
        labeling = label_dimensions(table, lexicon, 0.6)
        max_distinct = max(
            (len(counts) for counts in labeling.per_dimension), default=0
        )

        for limit in (1, 2, 3):
            for filtered in (cap_labels(labeling, limit), top_k_frequent(labeling, limit)):
                assert unnamed_ratio(filtered) >= unnamed_ratio(labeling)
                assert avg_labels_per_dimension(filtered, "all") <= (
                    avg_labels_per_dimension(labeling, "all")
                )
                for kept, original in zip(filtered.per_dimension, labeling.per_dimension):
                    assert len(kept) <= limit
                    for label, count in kept.items():
                        assert original[label] == count

        generous = cap_labels(labeling, max(max_distinct, 1))
        assert generous.per_dimension == labeling.per_dimension
        assert top_k_frequent(labeling, max(max_distinct, 1) + 5).per_dimension == (
            labeling.per_dimension
        )


def test_criterion_08_performance_sanity():
    """50,000 words x 300 dims against a 6,400-entry lexicon labels in
    under 10 s; the four-theta sweep finishes in under 40 s."""
    rng = np.random.default_rng(1008)
    n_words, n_dims = 50_000, 300
    vocabulary = tuple(f"w{i:05d}x" for i in range(n_words))
    table = NormalizedEmbeddingTable(vocabulary, rng.random((n_words, n_dims)))

    entry_words = rng.choice(n_words, size=6_400, replace=False)
    exact = {}
    prefixes = []
    for k, row in enumerate(entry_words):
        labels = frozenset(rng.choice(LABEL_POOL, size=int(rng.integers(1, 4))))
        if k < 50:
            prefixes.append((vocabulary[row][:-1], labels))
        else:
            exact[vocabulary[row]] = labels
    lexicon = Lexicon("scale", exact, tuple(prefixes))
    assert lexicon.entry_count == 6_400

    started = time.perf_counter()
    labeling = label_dimensions(table, lexicon, 0.75)
    label_elapsed = time.perf_counter() - started
    assert label_elapsed < 10.0, f"labeling took {label_elapsed:.2f}s"
    assert sum(sum(c.values()) for c in labeling.per_dimension) > 0

    started = time.perf_counter()
    report = sweep(table, [lexicon], THETA_GRID)
    sweep_elapsed = time.perf_counter() - started
    assert sweep_elapsed < 40.0, f"sweep took {sweep_elapsed:.2f}s"
    assert len(report.rows) == 4


REFERENCE_ROWS = (
    SweepRow(0.81, "liwc", 0.386, 22.2, None),
    SweepRow(0.79, "liwc", 0.306, 41.2, None),
    SweepRow(0.77, "liwc", 0.237, 68.3, None),
    SweepRow(0.75, "liwc", 0.178, 106.5, None),
    SweepRow(0.81, "nrc", 0.306, 83.3, None),
    SweepRow(0.79, "nrc", 0.237, 145.2, None),
    SweepRow(0.77, "nrc", 0.178, 235.8, None),
    SweepRow(0.75, "nrc", 0.118, 378.1, None),
)

EXPECTED_SWEEP_TSV = (
    "theta\tresource\tpct_unnamed\tavg_labels_dim\n"
    "0.81\tliwc\t38.6%\t22.2\n"
    "0.79\tliwc\t30.6%\t41.2\n"
    "0.77\tliwc\t23.7%\t68.3\n"
    "0.75\tliwc\t17.8%\t106.5\n"
    "0.81\tnrc\t30.6%\t83.3\n"
    "0.79\tnrc\t23.7%\t145.2\n"
    "0.77\tnrc\t17.8%\t235.8\n"
    "0.75\tnrc\t11.8%\t378.1\n"
)


def test_criterion_09_sweep_rendering():
    """The renderer reproduces the eight reference rows byte-for-byte."""
    report = SweepReport(REFERENCE_ROWS)
    assert render_sweep_tsv(report, avg_mode="all") == EXPECTED_SWEEP_TSV
