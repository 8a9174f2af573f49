"""Chordification: slice a score into chords and merge them into groups.

A new segment starts whenever any note starts or stops sounding.
Segments with fewer than two distinct pitch classes are not chords and
are dropped; the survivors are numbered 1..n in time order.  Consecutive
chords sharing a held note instance (the same note, not merely an equal
pitch) form chord groups, the unit the context model works on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ingest import Score


@dataclass(frozen=True)
class Segment:
    """A maximal time slice during which the sounding set is constant."""

    onset: int
    offset: int
    members: frozenset[int]


@dataclass(frozen=True)
class Chord:
    index: int  # 1-based position in the piece
    onset: int
    offset: int
    members: frozenset[int]
    pcs: frozenset[int]
    bass_pc: int
    bass_octave: int


@dataclass(frozen=True)
class ChordGroup:
    chords: tuple[Chord, ...]


def segment(score: Score) -> list[Segment]:
    """Partition the sounding time axis at every note onset and offset.

    Every returned segment is fully covered by each of its members;
    silent stretches produce no segment.
    """
    if not score.notes:
        return []
    boundaries = sorted(
        {n.onset for n in score.notes} | {n.offset for n in score.notes}
    )
    segments = []
    for start, end in zip(boundaries, boundaries[1:]):
        members = frozenset(
            n.id
            for n in score.notes
            if n.onset <= start and n.offset >= end
        )
        if members:
            segments.append(Segment(start, end, members))
    return segments


def chords_of(segments: list[Segment], score: Score) -> list[Chord]:
    """Keep segments with two or more distinct pcs and number them."""
    by_id = score.notes_by_id()
    chords = []
    for seg in segments:
        notes = [by_id[i] for i in seg.members]
        pcs = frozenset(n.pc for n in notes)
        if len(pcs) < 2:
            continue
        bass = min(notes, key=lambda n: n.height)
        chords.append(
            Chord(
                index=len(chords) + 1,
                onset=seg.onset,
                offset=seg.offset,
                members=seg.members,
                pcs=pcs,
                bass_pc=bass.pc,
                bass_octave=bass.octave,
            )
        )
    return chords


def group(chords: list[Chord]) -> list[ChordGroup]:
    """Merge consecutive chords that share a note instance into groups.

    A dropped segment (single pc or silence) between two chords breaks
    adjacency even when a note is held across it, so it always ends the
    group.
    """
    groups: list[ChordGroup] = []
    run: list[Chord] = []
    for chord in chords:
        if run and (
            run[-1].offset == chord.onset
            and run[-1].members & chord.members
        ):
            run.append(chord)
        else:
            if run:
                groups.append(ChordGroup(tuple(run)))
            run = [chord]
    if run:
        groups.append(ChordGroup(tuple(run)))
    return groups


def chordify(score: Score) -> list[Chord]:
    """Segment a score and return its numbered chords."""
    return chords_of(segment(score), score)
