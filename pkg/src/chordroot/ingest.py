"""Score ingestion: MusicXML (plain or .mxl) and a plain event-list format.

Both parsers produce the same uniform Score value: a flat, sorted
sequence of note instances with integer tick times and stable ids.
Ids matter downstream, where chord groups are defined by *the same*
note instance sounding across consecutive chords.

The event-list format is one note per line, ``part onset duration
pitch`` (e.g. ``P1 0 2 C4``), with ``#`` comment lines; it exists to
make fixtures and tests easy to write by hand.
"""

from __future__ import annotations

import io
import logging
import math
import zipfile
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence
from xml.etree import ElementTree as ET

from .pitch import NATURAL_PC, name_of_pc, parse_pitch

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class NoteInstance:
    """One sounding note with identity; tied notes are merged into one."""

    id: int
    pc: int
    octave: int
    onset: int
    duration: int
    part: str

    @property
    def offset(self) -> int:
        return self.onset + self.duration

    @property
    def height(self) -> int:
        # Absolute semitone height; the octave is the sounding one.
        return self.octave * 12 + self.pc


@dataclass(frozen=True)
class Score:
    ticks_per_quarter: int
    notes: tuple[NoteInstance, ...]
    parts: tuple[str, ...]

    def notes_by_id(self) -> dict[int, NoteInstance]:
        return {n.id: n for n in self.notes}


def _build_score(
    tpq: int, raw: Iterable[tuple[int, int, int, int, str]], parts: Sequence[str]
) -> Score:
    """Sort raw (pc, octave, onset, duration, part) rows and assign ids.

    Ids are positions in the sorted order, so equivalent inputs produce
    identical Scores regardless of the order notes appeared in.
    """
    order = {part: i for i, part in enumerate(parts)}
    rows = sorted(
        raw, key=lambda r: (r[2], order[r[4]], r[1] * 12 + r[0], r[3])
    )
    notes = tuple(
        NoteInstance(i, pc, octave, onset, duration, part)
        for i, (pc, octave, onset, duration, part) in enumerate(rows)
    )
    return Score(tpq, notes, tuple(parts))


# ---------------------------------------------------------------------------
# Event lists


def parse_eventlist(text: str) -> Score:
    """Parse the plain event-list format (one tick per quarter)."""
    raw = []
    parts: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 4:
            raise ValueError(
                f"line {lineno}: expected 'part onset duration pitch',"
                f" got {stripped!r}"
            )
        part, onset_text, duration_text, pitch_text = fields
        try:
            onset = int(onset_text)
            duration = int(duration_text)
        except ValueError:
            raise ValueError(
                f"line {lineno}: onset and duration must be integers"
            ) from None
        if onset < 0:
            raise ValueError(f"line {lineno}: negative onset")
        if duration <= 0:
            raise ValueError(f"line {lineno}: zero or negative duration")
        try:
            pc, octave = parse_pitch(pitch_text)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if part not in parts:
            parts.append(part)
        raw.append((pc, octave, onset, duration, part))
    return _build_score(1, raw, parts)


def write_eventlist(score: Score) -> str:
    """Serialize a Score as event-list text (ticks written verbatim).

    Notes are grouped by part so that reparsing sees the parts in their
    original order; parts without any notes are not representable.
    """
    lines = []
    for part in score.parts:
        for note in score.notes:
            if note.part != part:
                continue
            pitch = f"{name_of_pc(note.pc)}{note.octave}"
            lines.append(f"{part} {note.onset} {note.duration} {pitch}")
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# MusicXML


def _alter_of(text: str | None, where: str) -> int:
    if text is None:
        return 0
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f"bad alter value {text!r} in {where}") from None
    if value not in (-1.0, 0.0, 1.0):
        raise ValueError(
            f"unsupported alter {text!r} in {where}:"
            " only single sharps and flats are supported"
        )
    return int(value)


def parse_musicxml(data: bytes | str) -> Score:
    """Parse a partwise MusicXML document into a Score.

    Honored: divisions, pitch (step/alter/octave), rests, chord-member
    flags, voices, backup/forward, and ties (merged into single
    instances).  Grace notes and unpitched notes are skipped with a
    warning; ornaments produce a warning but the note itself counts.
    """
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        raise ValueError(f"malformed MusicXML: {exc}") from None
    if root.tag != "score-partwise":
        raise ValueError(f"unsupported document element: {root.tag!r}")

    part_elements = root.findall("part")
    parts = []
    for i, part in enumerate(part_elements):
        parts.append(part.get("id") or f"P{i + 1}")

    # First pass: the tick unit is the least common multiple of every
    # divisions value in the file, so all onsets stay integral.
    divisions_values = [
        int(div.text)
        for div in root.iter("divisions")
        if div.text and int(div.text) > 0
    ]
    tpq = math.lcm(*divisions_values) if divisions_values else 1

    raw: list[list] = []  # mutable [pc, octave, onset, duration, part]
    for part_id, part in zip(parts, part_elements):
        _parse_part(part, part_id, tpq, raw)
    return _build_score(tpq, [tuple(r) for r in raw], parts)


def _parse_part(part: ET.Element, part_id: str, tpq: int, raw: list) -> None:
    scale = tpq  # current multiplier: tpq / divisions
    pos = 0
    prev_onset = 0
    # Open ties by (voice, height) -> raw row awaiting continuation.
    pending: dict[tuple[str, int], list] = {}

    for measure in part.findall("measure"):
        measure_start = pos
        measure_end = pos
        for element in measure:
            if element.tag == "attributes":
                div = element.find("divisions")
                if div is not None and div.text:
                    scale = tpq // int(div.text)
            elif element.tag == "backup":
                pos -= _duration_of(element, scale, part_id)
            elif element.tag == "forward":
                pos += _duration_of(element, scale, part_id)
            elif element.tag == "note":
                pos, prev_onset = _parse_note(
                    element, part_id, scale, pos, prev_onset, pending, raw
                )
            measure_end = max(measure_end, pos)
        # A measure whose last voice is short of the barline still ends
        # at the furthest position any voice reached.
        pos = max(measure_end, measure_start)


def _duration_of(element: ET.Element, scale: int, part_id: str) -> int:
    duration = element.find("duration")
    if duration is None or duration.text is None:
        raise ValueError(f"{element.tag} without duration in part {part_id}")
    return int(duration.text) * scale


def _parse_note(
    note: ET.Element,
    part_id: str,
    scale: int,
    pos: int,
    prev_onset: int,
    pending: dict,
    raw: list,
) -> tuple[int, int]:
    if note.find("grace") is not None:
        LOGGER.warning("part %s: skipping grace note", part_id)
        return pos, prev_onset
    if note.find("notations/ornaments") is not None or (
        note.find("notations/tremolo") is not None
    ):
        LOGGER.warning(
            "part %s: ignoring ornament/tremolo on a note", part_id
        )

    duration = _duration_of(note, scale, part_id)
    in_chord = note.find("chord") is not None
    onset = prev_onset if in_chord else pos
    new_pos = pos if in_chord else pos + duration

    if note.find("rest") is not None:
        return new_pos, onset
    pitch = note.find("pitch")
    if pitch is None:
        LOGGER.warning("part %s: skipping unpitched note", part_id)
        return new_pos, onset

    step = pitch.findtext("step", "").strip()
    if step not in NATURAL_PC:
        raise ValueError(f"bad step {step!r} in part {part_id}")
    alter = _alter_of(pitch.findtext("alter"), f"part {part_id}")
    notated_octave = int(pitch.findtext("octave", "4"))
    height = notated_octave * 12 + NATURAL_PC[step] + alter
    pc, octave = height % 12, height // 12

    voice = note.findtext("voice", "1").strip()
    tie_types = {t.get("type") for t in note.findall("tie")}
    key = (voice, height)

    if "stop" in tie_types:
        open_row = pending.get(key)
        if open_row is not None and open_row[2] + open_row[3] == onset:
            open_row[3] += duration
            if "start" not in tie_types:
                del pending[key]
            return new_pos, onset
        LOGGER.warning(
            "part %s: tie stop without matching start at tick %d",
            part_id,
            onset,
        )
    row = [pc, octave, onset, duration, part_id]
    raw.append(row)
    if "start" in tie_types:
        pending[key] = row
    return new_pos, onset


# ---------------------------------------------------------------------------
# .mxl containers and file dispatch


def parse_mxl(data: bytes) -> Score:
    """Parse a compressed .mxl container (zip with a rootfile entry)."""
    with zipfile.ZipFile(io.BytesIO(data)) as archive:
        member = None
        try:
            container = archive.read("META-INF/container.xml")
            rootfile = ET.fromstring(container).find(".//rootfile")
            if rootfile is not None:
                member = rootfile.get("full-path")
        except (KeyError, ET.ParseError):
            pass
        if member is None:
            candidates = [
                name
                for name in archive.namelist()
                if name.endswith(".xml") and not name.startswith("META-INF")
            ]
            if not candidates:
                raise ValueError("no MusicXML member in .mxl container")
            member = candidates[0]
        return parse_musicxml(archive.read(member))


def load_score(path) -> Score:
    """Read a score file, dispatching on content and extension.

    Zip data is treated as .mxl, ``.evl`` files as event lists and
    anything else as plain MusicXML.
    """
    path = Path(path)
    data = path.read_bytes()
    if data[:2] == b"PK":
        return parse_mxl(data)
    if path.suffix.lower() == ".evl":
        return parse_eventlist(data.decode("utf-8"))
    return parse_musicxml(data)


# ---------------------------------------------------------------------------
# Numbered MusicXML output


def write_numbered_musicxml(score: Score, chords: Sequence) -> bytes:
    """Serialize the score with chord numbers attached as lyrics.

    Each note carries a lyric listing the 1-based indices of the chords
    it sounds in, the first stage of chordification made visible.
    ``chords`` must come from this score; unknown member ids are an
    error.
    """
    known = {n.id for n in score.notes}
    labels: dict[int, list[int]] = {}
    for chord in chords:
        if not set(chord.members) <= known:
            raise ValueError("chords do not belong to this score")
        for member in chord.members:
            labels.setdefault(member, []).append(chord.index)

    root = ET.Element("score-partwise", version="3.1")
    part_list = ET.SubElement(root, "part-list")
    for part_id in score.parts:
        score_part = ET.SubElement(part_list, "score-part", id=part_id)
        ET.SubElement(score_part, "part-name").text = part_id

    for part_id in score.parts:
        part_el = ET.SubElement(root, "part", id=part_id)
        measure = ET.SubElement(part_el, "measure", number="1")
        attributes = ET.SubElement(measure, "attributes")
        divisions = ET.SubElement(attributes, "divisions")
        divisions.text = str(score.ticks_per_quarter)
        _write_part_notes(
            measure,
            [n for n in score.notes if n.part == part_id],
            labels,
        )
    return ET.tostring(root, encoding="UTF-8", xml_declaration=True)


def _write_part_notes(
    measure: ET.Element, notes: list[NoteInstance], labels: dict
) -> None:
    # Greedy lane assignment: overlapping notes of one part go to
    # separate voices, written one after the other with backups.
    lanes: list[list[NoteInstance]] = []
    for note in sorted(notes, key=lambda n: (n.onset, n.height)):
        for lane in lanes:
            if lane[-1].offset <= note.onset:
                lane.append(note)
                break
        else:
            lanes.append([note])

    lane_end = 0
    for voice_number, lane in enumerate(lanes, start=1):
        if voice_number > 1:
            backup = ET.SubElement(measure, "backup")
            duration = ET.SubElement(backup, "duration")
            duration.text = str(lane_end)
        pos = 0
        for note in lane:
            if note.onset > pos:
                forward = ET.SubElement(measure, "forward")
                duration = ET.SubElement(forward, "duration")
                duration.text = str(note.onset - pos)
            _write_note(measure, note, voice_number, labels.get(note.id))
            pos = note.offset
        lane_end = pos


def _write_note(
    measure: ET.Element,
    note: NoteInstance,
    voice_number: int,
    chord_indices: list[int] | None,
) -> None:
    note_el = ET.SubElement(measure, "note")
    pitch_el = ET.SubElement(note_el, "pitch")
    name = name_of_pc(note.pc)
    ET.SubElement(pitch_el, "step").text = name.letter
    if name.accidental:
        ET.SubElement(pitch_el, "alter").text = str(name.accidental)
    ET.SubElement(pitch_el, "octave").text = str(note.octave)
    ET.SubElement(note_el, "duration").text = str(note.duration)
    ET.SubElement(note_el, "voice").text = str(voice_number)
    if chord_indices:
        lyric = ET.SubElement(note_el, "lyric")
        ET.SubElement(lyric, "syllabic").text = "single"
        text = ET.SubElement(lyric, "text")
        text.text = " ".join(str(i) for i in sorted(chord_indices))
