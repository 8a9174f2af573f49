"""The context model: chord-pair features, decision trees, group analysis.

Within a chord group, adjacent chord pairs (X, Y) are classified by a
decision tree into one of five outcomes, which may overwrite a chord's
context-free (Schmid) roots: keep both, copy one root set across, or
recompute a chord's roots after removing the notes held over from its
neighbor.  Larger groups are reduced to their adjacent pairs; interior
chords accept the two proposals only when they agree.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass
from enum import Enum
from typing import Callable, Mapping, Sequence

from .chordify import Chord, ChordGroup
from .ingest import NoteInstance
from .rootmodels import RootResult, schmid_roots


class PairOutcome(Enum):
    """The five possible pair outcomes, in their canonical listing order."""

    IGNORE = "Ignore"
    ROOT_X_FROM_Y = "RootXFromY"
    ROOT_Y_FROM_X = "RootYFromX"
    ROOT_X_FROM_SUB_X = "RootXFromSubX"
    ROOT_Y_FROM_SUB_Y = "RootYFromSubY"


OUTCOME_ORDER = tuple(PairOutcome)

# Feature names in their canonical listing order; also the CSV column
# order and the tie-breaking order for tree induction.
FEATURE_NAMES = (
    "nx",
    "ny",
    "x_sub_y",
    "y_sub_x",
    "same_unique_root",
    "hy",
    "ux_rx_in_y",
    "uy_ry_in_x",
)


@dataclass(frozen=True)
class PairFeatures:
    """The eight boolean features of a chord pair (X, Y)."""

    nx: bool
    ny: bool
    x_sub_y: bool
    y_sub_x: bool
    same_unique_root: bool
    hy: bool
    ux_rx_in_y: bool
    uy_ry_in_x: bool

    def as_tuple(self) -> tuple[bool, ...]:
        return astuple(self)

    @classmethod
    def from_tuple(cls, bits: Sequence[bool]) -> "PairFeatures":
        return cls(*(bool(b) for b in bits))


def unique_root(result: RootResult) -> bool:
    """U(c): the chord has exactly one candidate root."""
    return len(result.roots) == 1


def feature_n(result: RootResult) -> bool:
    """N(c): the chord fits in major-third gaps, d(c) <= 4 * (P(c) - 1).

    ``result`` must be a Schmid result whose scores cover all chord pcs.
    """
    distance = min(result.scores.values())
    pc_count = len(result.scores)
    return distance <= 4 * (pc_count - 1)


def contained(a: Chord, b: Chord) -> bool:
    """All pcs of a also appear in b (chord equality is mutual containment)."""
    return a.pcs <= b.pcs


def difference(a: Chord, b: Chord) -> frozenset[int]:
    """Pitch classes of a that are not in b."""
    return a.pcs - b.pcs


def partial_sub(a: Chord, b: Chord, ra: RootResult, rb: RootResult) -> bool:
    """The partial sub-chord relation a <| b.

    Holds when a's pcs are contained in b's, or when no root of b
    appears in a while a's unique root is a pc of b.
    """
    if a.pcs <= b.pcs:
        return True
    return (
        not (rb.roots & a.pcs)
        and unique_root(ra)
        and ra.roots <= b.pcs
    )


def feature_h(
    x: Chord, y: Chord, notes: Mapping[int, NoteInstance]
) -> bool:
    """H(Y): more than half of Y's notes changed from X.

    Counted over note instances: strictly more members starting at Y's
    onset than members held over from X.
    """
    new = sum(1 for i in y.members if notes[i].onset == y.onset)
    held = len(y.members & x.members)
    return new > held


def features_of_pair(
    x: Chord,
    y: Chord,
    rx: RootResult,
    ry: RootResult,
    notes: Mapping[int, NoteInstance],
) -> PairFeatures:
    """Assemble all eight features of the pair (X, Y)."""
    return PairFeatures(
        nx=feature_n(rx),
        ny=feature_n(ry),
        x_sub_y=partial_sub(x, y, rx, ry),
        y_sub_x=partial_sub(y, x, ry, rx),
        same_unique_root=rx.roots == ry.roots and unique_root(rx),
        hy=feature_h(x, y, notes),
        ux_rx_in_y=unique_root(rx) and rx.roots <= y.pcs,
        uy_ry_in_x=unique_root(ry) and ry.roots <= x.pcs,
    )


def manual_tree(f: PairFeatures) -> PairOutcome:
    """The hand-built decision tree for a chord pair."""
    if f.same_unique_root:
        return PairOutcome.IGNORE
    if f.nx:
        if f.hy:
            if f.ny:
                return PairOutcome.IGNORE
            return PairOutcome.ROOT_Y_FROM_SUB_Y
        if f.x_sub_y:
            return PairOutcome.ROOT_Y_FROM_X
        if f.y_sub_x:
            return PairOutcome.ROOT_X_FROM_Y
        if f.ux_rx_in_y:
            return PairOutcome.ROOT_Y_FROM_X
        return PairOutcome.IGNORE  # no more features
    if f.ny:
        if f.hy:
            return PairOutcome.ROOT_X_FROM_SUB_X
        if f.y_sub_x:
            return PairOutcome.ROOT_X_FROM_Y
        if f.x_sub_y:
            return PairOutcome.ROOT_Y_FROM_X
        if f.uy_ry_in_x:
            return PairOutcome.ROOT_X_FROM_Y
        return PairOutcome.IGNORE  # no more features
    return PairOutcome.IGNORE  # insufficient training data


def generated_tree(f: PairFeatures) -> PairOutcome:
    """The automatically induced decision tree (uses 4 of the 8 features)."""
    if f.same_unique_root:
        return PairOutcome.IGNORE
    if f.x_sub_y:
        if f.hy:
            if f.ny:
                return PairOutcome.IGNORE
            return PairOutcome.ROOT_Y_FROM_SUB_Y
        return PairOutcome.ROOT_Y_FROM_X
    if f.ny:
        if f.hy:
            return PairOutcome.ROOT_X_FROM_SUB_X
        return PairOutcome.ROOT_X_FROM_Y
    if f.hy:
        return PairOutcome.ROOT_Y_FROM_SUB_Y
    return PairOutcome.ROOT_Y_FROM_X


def _sub_chord_roots(
    chord: Chord, other: Chord, notes: Mapping[int, NoteInstance]
) -> frozenset[int] | None:
    """Roots of ``chord`` after removing instances shared with ``other``.

    A pc survives as long as any non-held instance carries it.  Returns
    None when fewer than two pcs remain (no chord to analyze).
    """
    remaining = chord.members - other.members
    pcs = {notes[i].pc for i in remaining}
    if len(pcs) < 2:
        return None
    return schmid_roots(pcs).roots


def apply_outcome(
    x: Chord,
    y: Chord,
    rx: RootResult,
    ry: RootResult,
    outcome: PairOutcome,
    notes: Mapping[int, NoteInstance],
) -> tuple[frozenset[int], frozenset[int]]:
    """Root sets proposed for X and Y by a pair outcome."""
    if outcome is PairOutcome.ROOT_Y_FROM_X:
        return rx.roots, rx.roots
    if outcome is PairOutcome.ROOT_X_FROM_Y:
        return ry.roots, ry.roots
    if outcome is PairOutcome.ROOT_Y_FROM_SUB_Y:
        sub = _sub_chord_roots(y, x, notes)
        return rx.roots, (sub if sub is not None else ry.roots)
    if outcome is PairOutcome.ROOT_X_FROM_SUB_X:
        sub = _sub_chord_roots(x, y, notes)
        return (sub if sub is not None else rx.roots), ry.roots
    return rx.roots, ry.roots


Tree = Callable[[PairFeatures], PairOutcome]


def analyze_group(
    grp: ChordGroup,
    notes: Mapping[int, NoteInstance],
    tree: Tree = manual_tree,
) -> list[frozenset[int]]:
    """Per-chord root sets of one group under the context model.

    Singleton groups keep their context-free roots.  In larger groups
    every adjacent pair proposes roots for its two chords; an interior
    chord adopts its two proposals only when they agree and otherwise
    keeps the context-free roots, while boundary chords adopt their
    single proposal.
    """
    chords = grp.chords
    base = [schmid_roots(c.pcs) for c in chords]
    if len(chords) == 1:
        return [base[0].roots]
    proposals: list[list[frozenset[int]]] = [[] for _ in chords]
    for i in range(len(chords) - 1):
        x, y = chords[i], chords[i + 1]
        features = features_of_pair(x, y, base[i], base[i + 1], notes)
        px, py = apply_outcome(
            x, y, base[i], base[i + 1], tree(features), notes
        )
        proposals[i].append(px)
        proposals[i + 1].append(py)
    roots = []
    for i, proposed in enumerate(proposals):
        if len(proposed) == 1 or proposed[0] == proposed[1]:
            roots.append(proposed[0])
        else:
            roots.append(base[i].roots)
    return roots


def context_roots(
    groups: Sequence[ChordGroup],
    notes: Mapping[int, NoteInstance],
    tree: Tree = manual_tree,
) -> list[frozenset[int]]:
    """Context-model roots for a whole piece, in chord order."""
    out: list[frozenset[int]] = []
    for grp in groups:
        out.extend(analyze_group(grp, notes, tree))
    return out
