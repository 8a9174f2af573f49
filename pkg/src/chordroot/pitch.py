"""Pitch-class arithmetic, note names, interval names and interval orders.

Pitch classes are plain integers 0..11 with C = 0.  Note names carry a
letter and an accidental (-1 flat, 0 natural, +1 sharp); enharmonic
spellings map to the same pitch class (B sharp and C are both 0).
Double accidentals are not supported.
"""

from __future__ import annotations

from dataclasses import dataclass

SHARP = "♯"
FLAT = "♭"

# Pitch classes of the natural (white-key) notes.
NATURAL_PC = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}

_ACCIDENTALS = {"": 0, "#": 1, SHARP: 1, "b": -1, FLAT: -1}
_ACCIDENTAL_TEXT = {-1: FLAT, 0: "", 1: SHARP}


@dataclass(frozen=True)
class NoteName:
    """A spelled note name without octave: letter plus accidental."""

    letter: str
    accidental: int = 0

    def __post_init__(self) -> None:
        if self.letter not in NATURAL_PC:
            raise ValueError(f"bad note letter: {self.letter!r}")
        if self.accidental not in (-1, 0, 1):
            raise ValueError(f"accidental out of range: {self.accidental}")

    def __str__(self) -> str:
        return self.letter + _ACCIDENTAL_TEXT[self.accidental]


def pc_of_name(name: NoteName) -> int:
    """Pitch class of a spelled note name."""
    return (NATURAL_PC[name.letter] + name.accidental) % 12


def name_of_pc(pc: int) -> NoteName:
    """Canonical sharp-preferring spelling of a pitch class."""
    pc %= 12
    for letter, base in NATURAL_PC.items():
        if base == pc:
            return NoteName(letter)
    # Black key: spell as the natural one semitone below, raised.
    for letter, base in NATURAL_PC.items():
        if base == pc - 1:
            return NoteName(letter, 1)
    raise AssertionError("unreachable")


def pc_name(pc: int) -> str:
    """Canonical display string for a pitch class (C, C#, ... as text)."""
    return str(name_of_pc(pc))


def parse_note_name(text: str) -> NoteName:
    """Parse a note name like ``C``, ``C#``, ``Bb`` or with unicode signs.

    Raises ValueError on anything else, including double accidentals.
    """
    text = text.strip()
    if not text or text[0].upper() not in NATURAL_PC:
        raise ValueError(f"bad note name: {text!r}")
    rest = text[1:]
    if rest not in _ACCIDENTALS:
        raise ValueError(f"bad accidental in note name: {text!r}")
    return NoteName(text[0].upper(), _ACCIDENTALS[rest])


def parse_pitch(token: str) -> tuple[int, int]:
    """Parse a pitch token like ``C#4`` into a sounding (pc, octave) pair.

    The octave is the sounding one: the accidental is applied before the
    octave is read off, so ``B#3`` comes out as pc 0, octave 4.
    """
    token = token.strip()
    i = len(token)
    while i > 0 and (token[i - 1].isdigit() or token[i - 1] == "-"):
        i -= 1
    if i == len(token):
        raise ValueError(f"pitch token has no octave: {token!r}")
    name = parse_note_name(token[:i])
    octave = int(token[i:])
    height = octave * 12 + NATURAL_PC[name.letter] + name.accidental
    return height % 12, height // 12


# Interval names keyed by (diatonic steps, semitones); the 26 valid pairs.
INTERVAL_NAMES = {
    (0, 0): "Perfect unison",
    (0, 1): "Augmented unison",
    (1, 0): "Diminished second",
    (1, 1): "Minor second",
    (1, 2): "Major second",
    (1, 3): "Augmented second",
    (2, 2): "Diminished third",
    (2, 3): "Minor third",
    (2, 4): "Major third",
    (2, 5): "Augmented third",
    (3, 4): "Diminished fourth",
    (3, 5): "Perfect fourth",
    (3, 6): "Augmented fourth",
    (4, 6): "Diminished fifth",
    (4, 7): "Perfect fifth",
    (4, 8): "Augmented fifth",
    (5, 7): "Diminished sixth",
    (5, 8): "Minor sixth",
    (5, 9): "Major sixth",
    (5, 10): "Augmented sixth",
    (6, 9): "Diminished seventh",
    (6, 10): "Minor seventh",
    (6, 11): "Major seventh",
    (6, 12): "Augmented seventh",
    (7, 11): "Diminished octave",
    (7, 12): "Perfect octave",
}


def interval_name(diatonic_steps: int, semitones: int) -> str:
    """Name of the interval spanning the given steps and semitones."""
    try:
        return INTERVAL_NAMES[(diatonic_steps, semitones)]
    except KeyError:
        raise ValueError(
            f"no interval with {diatonic_steps} diatonic steps"
            f" and {semitones} semitones"
        ) from None


@dataclass(frozen=True)
class IntervalOrder:
    """Importance ranking of the 12 semitone intervals (lower = better)."""

    id: str
    ranks: tuple[int, ...]

    def rank(self, semitones: int) -> int:
        return self.ranks[semitones % 12]


# Order (a): 0 > 7 > 5 > 4 > 8 > 3 > 9 > 2 > 10 > 1 > 11 > 6, all distinct.
STRICT_A = IntervalOrder(
    "strict_a", (0, 9, 7, 5, 3, 2, 11, 1, 4, 6, 8, 10)
)
# Order (b): same chain but complementary intervals tie (7 = 5, 4 = 8, ...).
TIED_B = IntervalOrder(
    "tied_b", (0, 5, 4, 3, 2, 1, 6, 1, 2, 3, 4, 5)
)

INTERVAL_ORDERS = {"a": STRICT_A, "b": TIED_B}


def interval_rank(semitones: int, order: IntervalOrder) -> int:
    """Rank of an interval under the given order; lower means better."""
    return order.rank(semitones)
