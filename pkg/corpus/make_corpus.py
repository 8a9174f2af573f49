"""Rebuild the annotated corpus from its authored sources.

Each piece is written as four-voice rows (bass, tenor, alto, soprano)
plus the intended harmonic root; "-" continues the previous note of
that voice and "?" marks chords left out of scoring.  The script emits
for every piece an event list (.evl), a compressed MusicXML container
(.mxl) and the annotation file (.correct.txt), and checks that
chordification yields exactly one chord per authored row.

The committed expected_statistics.json is NOT rewritten here: it is a
reviewed snapshot of the per-model scores; regenerate it only after
checking any change by hand.
"""

from __future__ import annotations

import sys
import zipfile
from pathlib import Path

from chordroot.chordify import chordify
from chordroot.ingest import parse_eventlist, write_numbered_musicxml
from chordroot.pitch import parse_pitch

VOICES = ("P1", "P2", "P3", "P4")  # bass, tenor, alto, soprano

PIECES: dict[str, list[str]] = {
    # C major chorale with a tonic pedal phrase and a 9-8 flourish.
    "air_c": [
        "C3 E4 G4 C5 C",
        "- F4 A4 - F",
        "- E4 G4 - C",
        "B2 D4 G4 D5 G",
        "A2 C4 A4 E5 A",
        "F2 - - F5 F",
        "G2 B3 G4 - G",
        "C3 C4 - E5 C",
        "- - A4 F5 F",
        "- B3 G4 G5 ?",
        "- C4 - E5 C",
        "E3 - - C5 C",
        "F3 - A4 - F",
        "G3 B3 D4 B4 G",
        "A3 C4 E4 A4 A",
        "D3 A3 F4 D5 D",
        "G3 B3 - - G",
        "C3 C4 E4 C5 C",
        "- E4 G4 - C",
        "A2 - A4 - A",
        "D3 F4 - D5 D",
        "G3 D4 G4 B4 G",
        "- - F4 - G",
        "C3 E4 G4 C5 C",
        "F3 F4 A4 - F",
        "G3 - G4 B4 G",
        "- D4 - - G",
        "C3 E4 G4 C5 C",
    ],
    # G major, with a 4-3 suspension over the dominant.
    "chorale_g": [
        "G2 D4 B4 G5 G",
        "- E4 C5 - C",
        "- D4 B4 - G",
        "F#2 - A4 D5 D",
        "G2 D4 G4 B4 G",
        "E3 C4 - C5 C",
        "D3 D4 F#4 - D",
        "G2 B3 G4 B4 G",
        "E3 - - E5 E",
        "A2 C#4 A4 - A",
        "D3 D4 F#4 D5 D",
        "- C4 - A4 D",
        "G2 B3 G4 B4 G",
        "D3 A3 D4 G4 D",
        "- - - F#4 D",
        "G2 B3 D4 G4 G",
        "C3 C4 E4 - C",
        "B2 D4 G4 G5 G",
        "A2 C4 E4 A4 A",
        "D3 A3 F#4 - D",
        "G2 B3 D4 B4 G",
        "E3 G3 E4 - E",
        "C3 - - C5 C",
        "A2 - C#4 E4 A",
        "D3 F#3 D4 D5 D",
        "- - C4 - D",
        "G2 G3 B3 - G",
    ],
    # A minor lament: descending bass, a diminished seventh, and a
    # 4-3 suspension over the tonic.
    "lament_a": [
        "A2 C4 E4 A4 A",
        "G2 B3 - G4 E",
        "F2 C4 F4 A4 F",
        "E2 B3 E4 G#4 E",
        "A2 C4 E4 A4 A",
        "G2 B3 D4 G4 G",
        "C3 C4 E4 - C",
        "F2 A3 C4 F4 F",
        "D3 - D4 - D",
        "E2 G#3 - E4 E",
        "A2 A3 C4 - A",
        "B2 F3 D4 G#4 G#",
        "A2 E3 C4 A4 A",
        "D3 F3 D4 - D",
        "E3 G#3 E4 B4 E",
        "A2 A3 - A4 A",
        "C3 G3 E4 C5 C",
        "F3 A3 F4 - F",
        "D3 - - D5 D",
        "E3 G#3 E4 - E",
        "A2 A3 - - A",
        "- - - C5 A",
        "D3 B3 F4 D5 B",
        "E3 - E4 B4 E",
        "- G#3 D4 - E",
        "A2 A3 C4 A4 A",
        "- - D4 F4 D",
        "- - C4 E4 A",
    ],
    # F major hymn with dominant sevenths and an added-sixth cloud.
    "hymn_f": [
        "F3 A3 C4 F4 F",
        "E3 G3 - G4 C",
        "F3 A3 - A4 F",
        "Bb2 Bb3 D4 F4 Bb",
        "C3 - E4 G4 C",
        "F3 A3 F4 A4 F",
        "D3 - - D5 D",
        "G3 Bb3 D4 G4 G",
        "C3 C4 E4 - C",
        "- Bb3 - - C",
        "F2 A3 C4 A4 F",
        "- C4 F4 - F",
        "E3 - G4 C5 C",
        "D3 D4 F4 B4 B",
        "C3 E4 G4 C5 C",
        "- F4 A4 - F",
        "- E4 G4 Bb4 C",
        "F3 F4 A4 A4 F",
        "D3 - - D5 D",
        "G3 E4 Bb4 - ?",
        "- - - C5 C",
        "F3 F4 A4 - F",
        "Bb2 - Bb4 D5 Bb",
        "C3 E4 G4 C5 C",
        "- - Bb4 - C",
        "F2 F4 A4 - F",
    ],
    # D minor round: a tone cluster resolving over a pedal, and a
    # picardy close.
    "round_d": [
        "D3 A3 F4 D5 D",
        "- Bb3 - - Bb",
        "- A3 - - D",
        "C#3 - E4 A4 A",
        "D3 - F4 - D",
        "Bb2 Bb3 D4 G4 G",
        "A2 A3 C#4 - A",
        "D3 - D4 F4 D",
        "F3 - C4 - F",
        "G3 Bb3 D4 G4 G",
        "A2 A3 C#4 E4 A",
        "D3 F3 D4 - ?",
        "- - - D5 D",
        "C3 G3 E4 C5 C",
        "F3 A3 F4 - F",
        "Bb2 Bb3 - D5 Bb",
        "E3 G3 E4 Bb4 E",
        "A2 A3 D4 A4 A",
        "- - C#4 - A",
        "D3 A3 D4 F4 D",
        "G3 Bb3 - G4 G",
        "D3 A3 D4 F4 D",
        "A2 A3 C#4 E4 A",
        "- G3 - - A",
        "D3 F3 A3 D4 D",
        "- G3 Bb3 - G",
        "- F#3 A3 - D",
    ],
    # E minor canon shape with two diminished sevenths.
    "canon_e": [
        "E3 G3 B3 E4 E",
        "D#3 B3 F#4 B4 B",
        "E3 G3 B3 G4 E",
        "A2 C4 E4 A4 A",
        "B2 B3 D#4 - B",
        "E3 G3 E4 G4 E",
        "G3 B3 D4 - G",
        "C3 C4 E4 - C",
        "A2 - - A4 A",
        "B2 B3 D#4 F#4 B",
        "- A3 - - B",
        "E3 G3 B3 E5 E",
        "- A3 C4 - A",
        "- G3 B3 - E",
        "D3 F#3 A3 D5 D",
        "G2 G3 B3 - G",
        "C3 - E4 C5 C",
        "A#2 C#4 - G4 A#",
        "B2 B3 D#4 F#4 B",
        "- A3 - - B",
        "E3 G3 E4 G4 E",
        "A2 C4 - A4 A",
        "F#3 - D#4 - D#",
        "E3 B3 E4 G4 E",
        "C3 A3 - A4 A",
        "B2 B3 F#4 - B",
        "- - D#4 - B",
        "E2 B3 E4 G4 E",
    ],
}


def rows_to_events(rows: list[str]) -> tuple[str, list[str]]:
    """Event list text and the annotation column of one piece."""
    started: list[tuple[int, str] | None] = [None] * len(VOICES)
    events: list[list[tuple[int, int, str]]] = [[] for _ in VOICES]
    annotations = []
    for tick, row in enumerate(rows):
        cells = row.split()
        if len(cells) != len(VOICES) + 1:
            raise SystemExit(f"bad row: {row!r}")
        *pitches, annotation = cells
        annotations.append(annotation)
        if all(cell == "-" for cell in pitches):
            raise SystemExit(f"row changes no voice: {row!r}")
        for voice, cell in enumerate(pitches):
            if cell == "-":
                if started[voice] is None:
                    raise SystemExit(f"voice {voice + 1} starts held: {row!r}")
                continue
            if started[voice] is not None:
                onset, pitch = started[voice]
                events[voice].append((onset, tick - onset, pitch))
            started[voice] = (tick, cell)
    for voice, state in enumerate(started):
        onset, pitch = state
        events[voice].append((onset, len(rows) - onset, pitch))
    lines = []
    for voice, part in enumerate(VOICES):
        for onset, duration, pitch in events[voice]:
            lines.append(f"{part} {onset} {duration} {pitch}")
    return "".join(line + "\n" for line in lines), annotations


def mxl_bytes(name: str, xml: bytes) -> bytes:
    container = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        "<container><rootfiles>"
        f'<rootfile full-path="{name}.xml"/>'
        "</rootfiles></container>\n"
    )
    import io

    buffer = io.BytesIO()
    stamp = (1980, 1, 1, 0, 0, 0)  # fixed so the archives are reproducible
    with zipfile.ZipFile(buffer, "w", zipfile.ZIP_DEFLATED) as archive:
        archive.writestr(zipfile.ZipInfo("META-INF/container.xml", stamp), container)
        archive.writestr(zipfile.ZipInfo(f"{name}.xml", stamp), xml)
    return buffer.getvalue()


def check_alignment(rows: list[str], score) -> None:
    chords = chordify(score)
    if len(chords) != len(rows):
        raise SystemExit(f"{len(rows)} rows but {len(chords)} chords")
    current = [None] * len(VOICES)
    for i, (row, chord) in enumerate(zip(rows, chords)):
        cells = row.split()[: len(VOICES)]
        for voice, cell in enumerate(cells):
            if cell != "-":
                current[voice] = cell
        expected = {parse_pitch(cell)[0] for cell in current}
        if chord.onset != i or chord.offset != i + 1 or chord.pcs != expected:
            raise SystemExit(f"row {i + 1} does not match chord {chord}")


def main() -> None:
    outdir = Path(__file__).resolve().parent
    total = 0
    for name, rows in PIECES.items():
        evl, annotations = rows_to_events(rows)
        score = parse_eventlist(evl)
        check_alignment(rows, score)
        (outdir / f"{name}.evl").write_text(evl, encoding="utf-8")
        (outdir / f"{name}.correct.txt").write_text(
            "".join(a + "\n" for a in annotations), encoding="utf-8"
        )
        xml = write_numbered_musicxml(score, [])
        (outdir / f"{name}.mxl").write_bytes(mxl_bytes(name, xml))
        total += len(rows)
        print(f"{name}: {len(rows)} chords")
    print(f"total: {total} chords in {len(PIECES)} pieces")


if __name__ == "__main__":
    sys.exit(main())
