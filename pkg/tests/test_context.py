"""Tests for chord-pair features, the two decision trees, and group analysis."""

from hypothesis import assume, given, settings
from hypothesis import strategies as st
import pytest

from chordroot.chordify import Chord, chordify, group
from chordroot.context import (
    FEATURE_NAMES,
    OUTCOME_ORDER,
    PairFeatures,
    PairOutcome,
    analyze_group,
    apply_outcome,
    contained,
    context_roots,
    difference,
    feature_h,
    feature_n,
    features_of_pair,
    generated_tree,
    manual_tree,
    partial_sub,
    unique_root,
)
from chordroot.ingest import parse_eventlist
from chordroot.pitch import name_of_pc
from chordroot.rootmodels import schmid_roots

C, Cs, D, Ds, E, F, Fs, G, Gs, A, As, B = range(12)


def _chord(pcs, index=1, onset=0, offset=1):
    """A bare chord for feature tests that only look at pc content."""
    return Chord(
        index=index,
        onset=onset,
        offset=offset,
        members=frozenset(),
        pcs=frozenset(pcs),
        bass_pc=min(pcs),
        bass_octave=4,
    )


def run_pair(text, tree=manual_tree):
    """Parse a two-chord fixture and return (features, outcome, final roots)."""
    score = parse_eventlist(text)
    chords = chordify(score)
    groups = group(chords)
    assert len(groups) == 1, "fixture must form a single group"
    assert len(groups[0].chords) == 2, "fixture must contain exactly two chords"
    notes = score.notes_by_id()
    x, y = groups[0].chords
    rx, ry = schmid_roots(x.pcs), schmid_roots(y.pcs)
    feats = features_of_pair(x, y, rx, ry, notes)
    outcome = tree(feats)
    roots = analyze_group(groups[0], notes, tree)
    return feats, outcome, roots


# ---------------------------------------------------------------------------
# Listing orders (these orders are also the CSV column order and the
# induction tie-break order, so they must not drift).


def test_outcome_listing_order():
    assert [o.value for o in OUTCOME_ORDER] == [
        "Ignore",
        "RootXFromY",
        "RootYFromX",
        "RootXFromSubX",
        "RootYFromSubY",
    ]
    assert OUTCOME_ORDER == tuple(PairOutcome)


def test_feature_listing_order():
    assert FEATURE_NAMES == (
        "nx",
        "ny",
        "x_sub_y",
        "y_sub_x",
        "same_unique_root",
        "hy",
        "ux_rx_in_y",
        "uy_ry_in_x",
    )


def test_pair_features_tuple_roundtrip():
    for bits in range(256):
        vec = tuple(bool(bits >> i & 1) for i in range(8))
        assert PairFeatures.from_tuple(vec).as_tuple() == vec


# ---------------------------------------------------------------------------
# Individual features.


def test_feature_n_examples():
    # d <= 4 * (P - 1) marks a stack of thirds
    assert feature_n(schmid_roots({C, E, G}))  # 7 <= 8
    assert feature_n(schmid_roots({Fs, A, Cs, E}))  # 10 <= 12
    assert not feature_n(schmid_roots({G, As, D, C}))  # 14 > 12
    assert not feature_n(schmid_roots({C, Gs, As}))  # 14 > 8
    assert feature_n(schmid_roots({C, E}))  # 4 <= 4, boundary
    assert not feature_n(schmid_roots({E, F, A}))  # 11 > 8


def test_unique_root():
    assert unique_root(schmid_roots({C, E, G}))
    assert not unique_root(schmid_roots({C, Gs, As}))


def test_contained_and_difference():
    a, b = _chord({C, E}), _chord({C, E, G})
    assert contained(a, b)
    assert not contained(b, a)
    assert contained(a, a)
    assert difference(b, a) == {G}
    assert difference(a, b) == frozenset()


def test_partial_sub_by_containment():
    a, b = _chord({D, Fs, A}), _chord({D, Fs, A, E})
    assert partial_sub(a, b, schmid_roots(a.pcs), schmid_roots(b.pcs))


def test_partial_sub_by_unique_root_clauses():
    # E-G#-B vs E-G#-C#: roots E and C#; C# not in the first chord
    a, b = _chord({E, Gs, B}), _chord({E, Gs, Cs})
    ra, rb = schmid_roots(a.pcs), schmid_roots(b.pcs)
    assert partial_sub(a, b, ra, rb)
    # reverse direction fails: E (root of a) appears in b
    assert not partial_sub(b, a, rb, ra)


def test_partial_sub_needs_unique_root():
    # {C,D,A#} has two roots, so the second clause cannot apply
    a, b = _chord({C, D, As}), _chord({C, D, As, F})
    ra, rb = schmid_roots(a.pcs), schmid_roots(b.pcs)
    assert partial_sub(a, b, ra, rb)  # plain containment still holds
    a2 = _chord({C, D, As, E})
    assert not partial_sub(a2, b, schmid_roots(a2.pcs), rb)


def test_feature_h_counts_instances_not_pitches():
    # restruck C4 is a new instance even though the pitch repeats
    score = parse_eventlist(
        """
        P1 0 1 C4
        P1 1 1 C4
        P2 0 2 E4
        P3 1 1 G4
        """
    )
    x, y = chordify(score)
    assert feature_h(x, y, score.notes_by_id())  # 2 new vs 1 held


def test_feature_h_false_when_half_change():
    score = parse_eventlist(
        """
        P1 0 2 C4
        P2 0 2 E4
        P3 0 1 G4
        P3 1 1 A4
        P4 0 1 B4
        P4 1 1 D5
        """
    )
    x, y = chordify(score)
    assert not feature_h(x, y, score.notes_by_id())  # 2 new vs 2 held


def test_features_of_pair_field_mapping():
    score = parse_eventlist(
        """
        P1 0 2 C4
        P2 0 2 E4
        P3 0 1 G4
        P3 1 1 A4
        """
    )
    x, y = chordify(score)
    rx, ry = schmid_roots(x.pcs), schmid_roots(y.pcs)
    f = features_of_pair(x, y, rx, ry, score.notes_by_id())
    assert f.nx and f.ny  # C-E-G and C-E-A are both stacks of thirds
    assert not f.same_unique_root  # roots C vs A
    assert not f.hy  # 1 new vs 2 held
    assert f.ux_rx_in_y  # C is a pc of Y
    assert f.uy_ry_in_x is False  # A is not a pc of X


# ---------------------------------------------------------------------------
# Decision trees against an independent transcription.  Each path lists
# every node tested on the way to its leaf; together the paths must
# cover each of the 256 feature vectors exactly once.

I = PairOutcome.IGNORE
XY = PairOutcome.ROOT_X_FROM_Y
YX = PairOutcome.ROOT_Y_FROM_X
XSUB = PairOutcome.ROOT_X_FROM_SUB_X
YSUB = PairOutcome.ROOT_Y_FROM_SUB_Y

MANUAL_PATHS = [
    ({"same_unique_root": 1}, I),
    ({"same_unique_root": 0, "nx": 1, "hy": 1, "ny": 1}, I),
    ({"same_unique_root": 0, "nx": 1, "hy": 1, "ny": 0}, YSUB),
    ({"same_unique_root": 0, "nx": 1, "hy": 0, "x_sub_y": 1}, YX),
    ({"same_unique_root": 0, "nx": 1, "hy": 0, "x_sub_y": 0, "y_sub_x": 1}, XY),
    (
        {
            "same_unique_root": 0,
            "nx": 1,
            "hy": 0,
            "x_sub_y": 0,
            "y_sub_x": 0,
            "ux_rx_in_y": 1,
        },
        YX,
    ),
    (
        {
            "same_unique_root": 0,
            "nx": 1,
            "hy": 0,
            "x_sub_y": 0,
            "y_sub_x": 0,
            "ux_rx_in_y": 0,
        },
        I,
    ),
    ({"same_unique_root": 0, "nx": 0, "ny": 1, "hy": 1}, XSUB),
    ({"same_unique_root": 0, "nx": 0, "ny": 1, "hy": 0, "y_sub_x": 1}, XY),
    (
        {"same_unique_root": 0, "nx": 0, "ny": 1, "hy": 0, "y_sub_x": 0, "x_sub_y": 1},
        YX,
    ),
    (
        {
            "same_unique_root": 0,
            "nx": 0,
            "ny": 1,
            "hy": 0,
            "y_sub_x": 0,
            "x_sub_y": 0,
            "uy_ry_in_x": 1,
        },
        XY,
    ),
    (
        {
            "same_unique_root": 0,
            "nx": 0,
            "ny": 1,
            "hy": 0,
            "y_sub_x": 0,
            "x_sub_y": 0,
            "uy_ry_in_x": 0,
        },
        I,
    ),
    ({"same_unique_root": 0, "nx": 0, "ny": 0}, I),
]

GENERATED_PATHS = [
    ({"same_unique_root": 1}, I),
    ({"same_unique_root": 0, "x_sub_y": 1, "hy": 1, "ny": 1}, I),
    ({"same_unique_root": 0, "x_sub_y": 1, "hy": 1, "ny": 0}, YSUB),
    ({"same_unique_root": 0, "x_sub_y": 1, "hy": 0}, YX),
    ({"same_unique_root": 0, "x_sub_y": 0, "ny": 1, "hy": 1}, XSUB),
    ({"same_unique_root": 0, "x_sub_y": 0, "ny": 1, "hy": 0}, XY),
    ({"same_unique_root": 0, "x_sub_y": 0, "ny": 0, "hy": 1}, YSUB),
    ({"same_unique_root": 0, "x_sub_y": 0, "ny": 0, "hy": 0}, YX),
]


def _paths_outcome(paths, feats):
    vec = dict(zip(FEATURE_NAMES, feats.as_tuple()))
    matches = [
        out
        for cond, out in paths
        if all(vec[name] == bool(bit) for name, bit in cond.items())
    ]
    assert len(matches) == 1, f"paths must cover {vec} exactly once"
    return matches[0]


def _all_feature_vectors():
    for bits in range(256):
        yield PairFeatures.from_tuple(
            tuple(bool(bits >> i & 1) for i in range(8))
        )


def test_manual_tree_matches_transcribed_truth_table():
    for feats in _all_feature_vectors():
        assert manual_tree(feats) == _paths_outcome(MANUAL_PATHS, feats)


def test_generated_tree_matches_transcribed_truth_table():
    for feats in _all_feature_vectors():
        assert generated_tree(feats) == _paths_outcome(GENERATED_PATHS, feats)


def test_generated_tree_spot_checks():
    def vec(**kwargs):
        return PairFeatures.from_tuple(
            tuple(bool(kwargs.get(name, 0)) for name in FEATURE_NAMES)
        )

    assert generated_tree(vec(same_unique_root=1, hy=1)) == I
    assert generated_tree(vec(x_sub_y=1)) == YX
    assert generated_tree(vec()) == YX  # no sub-chord, not thirds, held


def test_trees_ignore_when_same_unique_root_regardless_of_rest():
    for feats in _all_feature_vectors():
        if feats.same_unique_root:
            assert manual_tree(feats) == I
            assert generated_tree(feats) == I


# ---------------------------------------------------------------------------
# Worked pair figures.  Each fixture is two chords linked by held notes;
# the expected outcome and final roots follow the figure captions.

PSC_A = """
P1 0 1 D4
P1 1 1 E4
P2 0 2 A3
P3 0 2 F#3
P4 0 2 D3
"""

PSC_B = """
P1 0 2 E4
P2 0 1 B3
P2 1 1 C#4
P3 0 2 G#3
P4 0 2 E3
"""

PSC_C = """
P1 0 2 E4
P2 0 2 A3
P3 0 1 F3
P3 1 1 C#4
"""

PSC_D = """
P1 0 1 C5
P1 1 1 B4
P2 0 1 A4
P2 1 1 G4
P3 0 2 D4
P4 0 2 G3
"""


def test_partial_sub_fig_a_contained_triad():
    # D-F#-A into D-F#-A-E: the E is treated as nonharmonic
    feats, outcome, roots = run_pair(PSC_A)
    assert feats.x_sub_y and not feats.hy
    assert outcome == YX
    assert roots == [frozenset({D}), frozenset({D})]


def test_partial_sub_fig_b_root_replaced():
    # E-G#-B into E-G#-C#: C# assumed nonharmonic, root stays E
    feats, outcome, roots = run_pair(PSC_B)
    assert feats.x_sub_y
    assert outcome == YX
    assert roots == [frozenset({E}), frozenset({E})]


def test_partial_sub_fig_c_reverse_direction():
    # F-A-E into A-C#-E: the F of the first chord is nonharmonic
    feats, outcome, roots = run_pair(PSC_C)
    assert feats.y_sub_x and not feats.nx
    assert outcome == XY
    assert roots == [frozenset({A}), frozenset({A})]


def test_partial_sub_fig_d_two_nonchord_tones():
    # G-D-A-C (root A) into G-D-G-B (root G): A and C assumed nonchord
    feats, outcome, roots = run_pair(PSC_D)
    assert feats.y_sub_x and not feats.hy
    assert outcome == XY
    assert roots == [frozenset({G}), frozenset({G})]


T212_A = """
P1 0 2 E4
P2 0 2 C#4
P3 0 2 A3
P4 1 1 F#4
"""

T212_B = """
P1 0 1 A4
P1 1 1 B4
P2 0 2 F4
P3 0 2 D4
P4 0 2 D3
"""

T212_C = """
P1 0 1 A3
P1 1 1 G3
P2 0 1 F#3
P2 1 1 F3
P3 0 2 D#3
P4 0 2 A#2
"""

T212_D = """
P1 0 2 C5
P2 0 1 A4
P2 1 1 Bb4
P3 0 1 A3
P3 1 1 D4
P4 0 2 C3
"""


def test_branch212_fig_a_added_nonharmonic_root():
    # A-C#-E into A-C#-E-F#: the F# was predicted as root, overwritten to A
    feats, outcome, roots = run_pair(T212_A)
    assert feats.nx and not feats.hy and feats.x_sub_y
    assert outcome == YX
    assert roots == [frozenset({A}), frozenset({A})]


def test_branch212_fig_b_unique_root_carried():
    # D-D-F-A into D-D-F-B: B not in X, D in Y, so Y's root becomes D
    feats, outcome, roots = run_pair(T212_B)
    assert outcome == YX
    assert roots == [frozenset({D}), frozenset({D})]


def test_branch212_fig_c_unique_root_contained_in_y():
    # neither chord is a partial sub-chord of the other; X's unique
    # root A# appears in Y while Y's predicted root F does not appear
    # in X, so Y's roots are overwritten with A#
    feats, outcome, roots = run_pair(T212_C)
    assert not feats.x_sub_y and not feats.y_sub_x
    assert feats.ux_rx_in_y
    assert outcome == YX
    assert roots == [frozenset({As}), frozenset({As})]


def test_branch212_fig_d_left_unchanged():
    # C-A-A-C (root A) into C-D-Bb-C (roots C or Bb): nothing applies
    feats, outcome, roots = run_pair(T212_D)
    assert not feats.x_sub_y and not feats.y_sub_x
    assert not feats.ux_rx_in_y
    assert outcome == I
    assert roots == [frozenset({A}), frozenset({C, As})]


B22_A = """
P1 0 2 C5
P2 0 1 D4
P2 1 1 E4
P3 0 1 Bb3
P3 1 1 C4
P4 0 1 G2
P4 1 1 A2
"""

B22_B = """
P1 0 2 F#4
P2 0 1 G4
P2 1 1 D#4
P3 0 1 C4
P3 1 1 B#3
P4 0 1 A3
P4 1 1 G#2
P5 0 1 F#2
"""


def test_branch22_fig_a_held_note_removed_from_x():
    # G-Bb-D-C (roots C or Bb) into A-C-E-C: only the C keeps sounding,
    # removing it from X leaves G-Bb-D with the unambiguous root G
    feats, outcome, roots = run_pair(B22_A)
    assert not feats.nx and feats.ny and feats.hy
    assert outcome == XSUB
    assert roots == [frozenset({G}), frozenset({A})]


def test_branch22_fig_b_root_survives_in_bass():
    # the held top F#4 is removed from X, but the bass F#2 still carries
    # the pc and the root stays F#; Y keeps its root G#
    feats, outcome, roots = run_pair(B22_B)
    assert not feats.nx and feats.ny and feats.hy
    assert outcome == XSUB
    assert roots == [frozenset({Fs}), frozenset({Gs})]


B211_A = """
P1 0 2 A4
P2 0 1 E4
P2 1 1 F#4
P3 0 1 C#4
P3 1 1 B3
P4 0 1 C#3
P4 1 1 D#3
"""

B211_B = """
P1 0 2 F4
P2 0 1 C4
P2 1 1 B3
P3 0 1 A3
P3 1 1 G3
P4 0 1 F2
P4 1 1 G2
"""


def test_branch211_loose_pair_left_alone():
    # C#-C#-E-A into D#-B-F#-A: only the A keeps sounding and both
    # chords are stacks of thirds, so the roots A and B stay
    feats, outcome, roots = run_pair(B211_A)
    assert feats.nx and feats.ny and feats.hy
    assert outcome == I
    assert roots == [frozenset({A}), frozenset({B})]


def test_branch211_held_note_removed_from_y():
    # the F held into G-G-B is removed and the root G remains
    feats, outcome, roots = run_pair(B211_B)
    assert feats.nx and not feats.ny and feats.hy
    assert outcome == YSUB
    assert roots == [frozenset({F}), frozenset({G})]


# ---------------------------------------------------------------------------
# apply_outcome in isolation.


def _pair_from(text):
    score = parse_eventlist(text)
    x, y = chordify(score)
    return x, y, schmid_roots(x.pcs), schmid_roots(y.pcs), score.notes_by_id()


def test_apply_outcome_ignore_keeps_both():
    x, y, rx, ry, notes = _pair_from(PSC_A)
    assert apply_outcome(x, y, rx, ry, I, notes) == (rx.roots, ry.roots)


def test_apply_outcome_copies_roots():
    x, y, rx, ry, notes = _pair_from(PSC_A)
    assert apply_outcome(x, y, rx, ry, YX, notes) == (rx.roots, rx.roots)
    assert apply_outcome(x, y, rx, ry, XY, notes) == (ry.roots, ry.roots)


def test_apply_outcome_sub_y_removes_held_instances():
    x, y, rx, ry, notes = _pair_from(B211_B)
    px, py = apply_outcome(x, y, rx, ry, YSUB, notes)
    assert px == rx.roots
    assert py == frozenset({G})


def test_apply_outcome_sub_falls_back_when_too_small():
    # all of X is held into Y, whose own notes form a single pc
    score = parse_eventlist(
        """
        P1 0 2 C4
        P2 0 2 E4
        P3 1 1 G4
        """
    )
    x, y = chordify(score)
    rx, ry = schmid_roots(x.pcs), schmid_roots(y.pcs)
    px, py = apply_outcome(x, y, rx, ry, YSUB, score.notes_by_id())
    assert py == ry.roots  # sub-chord has one pc, roots unchanged
    px2, _ = apply_outcome(x, y, rx, ry, XSUB, score.notes_by_id())
    assert px2 == rx.roots  # X minus held notes is empty


# ---------------------------------------------------------------------------
# Group analysis.

G3_SCORE = """
P1 0 3 C5
P2 0 1 G4
P2 1 2 A4
P3 0 1 Eb4
P3 1 1 F4
P3 2 1 Eb4
P4 0 1 C3
P4 1 2 F3
"""

G4_SCORE = """
P1 0 1 C5
P1 1 2 Bb4
P1 3 1 A4
P2 0 1 A4
P2 1 1 D4
P2 2 2 C5
P3 0 1 Eb4
P3 1 1 Bb3
P3 2 1 Eb4
P3 3 1 C4
P4 0 2 F3
P4 2 2 F3
"""

DISAGREE_SCORE = """
P1 1 2 E4
P2 0 2 A3
P3 0 2 F#3
P4 0 2 D3
P5 2 1 G#4
"""


def _grouped(text):
    score = parse_eventlist(text)
    chords = chordify(score)
    groups = group(chords)
    return score, chords, groups


def test_group_of_three_reduces_to_pairs():
    score, chords, groups = _grouped(G3_SCORE)
    assert [len(g.chords) for g in groups] == [3]
    roots = analyze_group(groups[0], score.notes_by_id())
    assert roots == [frozenset({C}), frozenset({F}), frozenset({F})]


def test_group_of_four_reduces_to_pairs():
    score, chords, groups = _grouped(G4_SCORE)
    assert [len(g.chords) for g in groups] == [4]
    roots = analyze_group(groups[0], score.notes_by_id())
    assert roots == [
        frozenset({F}),
        frozenset({As}),
        frozenset({F}),
        frozenset({F}),
    ]


def test_disagreeing_proposals_keep_context_free_roots():
    # the first pair proposes D for the middle chord, the second E;
    # the middle chord keeps its context-free roots {D, E}
    score, chords, groups = _grouped(DISAGREE_SCORE)
    assert [len(g.chords) for g in groups] == [3]
    roots = analyze_group(groups[0], score.notes_by_id())
    assert roots == [frozenset({D}), frozenset({D, E}), frozenset({E})]


def test_singleton_group_keeps_schmid_roots():
    score = parse_eventlist(
        """
        P1 0 1 C4
        P2 0 1 E4
        P3 0 1 G4
        """
    )
    groups = group(chordify(score))
    assert [len(g.chords) for g in groups] == [1]
    roots = analyze_group(groups[0], score.notes_by_id())
    assert roots == [frozenset({C})]


def test_context_roots_concatenates_groups_in_order():
    # two disconnected pairs: four chords, two groups
    score = parse_eventlist(
        """
        P1 0 2 C4
        P2 0 1 E4
        P2 1 1 G4
        P1 3 2 D4
        P2 3 1 F4
        P2 4 1 A4
        """
    )
    chords = chordify(score)
    groups = group(chords)
    assert [len(g.chords) for g in groups] == [2, 2]
    roots = context_roots(groups, score.notes_by_id())
    assert len(roots) == len(chords) == 4
    assert all(rs for rs in roots)


def test_context_roots_with_generated_tree_runs():
    score, chords, groups = _grouped(G4_SCORE)
    roots = context_roots(groups, score.notes_by_id(), tree=generated_tree)
    assert len(roots) == 4
    assert all(rs and rs <= set(range(12)) for rs in roots)


# ---------------------------------------------------------------------------
# Properties over randomly generated pairs.

_pcs = st.sets(st.integers(min_value=0, max_value=11), min_size=1, max_size=3)


def _pair_eventlist(held, x_extra, y_extra):
    lines = []
    part = 0
    for pc in sorted(held):
        part += 1
        lines.append(f"P{part} 0 2 {name_of_pc(pc)}4")
    for pc in sorted(x_extra):
        part += 1
        lines.append(f"P{part} 0 1 {name_of_pc(pc)}5")
    for pc in sorted(y_extra):
        part += 1
        lines.append(f"P{part} 1 1 {name_of_pc(pc)}5")
    return "\n".join(lines)


@st.composite
def pair_scores(draw):
    held = draw(_pcs)
    x_extra = draw(_pcs)
    y_extra = draw(_pcs)
    assume(len(held | x_extra) >= 2 and len(held | y_extra) >= 2)
    return parse_eventlist(_pair_eventlist(held, x_extra, y_extra))


@given(pair_scores())
@settings(max_examples=150, deadline=None)
def test_pair_analysis_always_yields_valid_roots(score):
    chords = chordify(score)
    groups = group(chords)
    assert [len(g.chords) for g in groups] == [2]
    notes = score.notes_by_id()
    for tree in (manual_tree, generated_tree):
        roots = analyze_group(groups[0], notes, tree)
        assert len(roots) == 2
        for rs in roots:
            assert rs and rs <= set(range(12))


@given(pair_scores())
@settings(max_examples=150, deadline=None)
def test_same_unique_root_pairs_never_change(score):
    chords = chordify(score)
    groups = group(chords)
    notes = score.notes_by_id()
    x, y = groups[0].chords
    rx, ry = schmid_roots(x.pcs), schmid_roots(y.pcs)
    feats = features_of_pair(x, y, rx, ry, notes)
    assume(feats.same_unique_root)
    for tree in (manual_tree, generated_tree):
        assert analyze_group(groups[0], notes, tree) == [rx.roots, ry.roots]


@given(pair_scores(), st.integers(min_value=1, max_value=11))
@settings(max_examples=100, deadline=None)
def test_context_roots_transposition_covariant(score, shift):
    def transposed(sc):
        lines = []
        for i, note in enumerate(sc.notes):
            height = note.height + shift
            pitch = f"{name_of_pc(height % 12)}{height // 12}"
            lines.append(f"{note.part} {note.onset} {note.duration} {pitch}")
        return parse_eventlist("\n".join(lines))

    base = context_roots(group(chordify(score)), score.notes_by_id())
    moved = transposed(score)
    shifted = context_roots(group(chordify(moved)), moved.notes_by_id())
    assert shifted == [
        frozenset((r + shift) % 12 for r in rs) for rs in base
    ]


@given(pair_scores(), st.sampled_from(list(PairOutcome)))
@settings(max_examples=150, deadline=None)
def test_apply_outcome_never_empties_roots(score, outcome):
    x, y = chordify(score)
    rx, ry = schmid_roots(x.pcs), schmid_roots(y.pcs)
    px, py = apply_outcome(x, y, rx, ry, outcome, score.notes_by_id())
    assert px and py
