"""Context-free chord root models and interval-order disambiguation.

Four models determine candidate roots for a chord given as a set of
pitch classes:

* stacking thirds: the pc that stacks the longest chain of thirds;
* Terhardt: subharmonic coincidence counting;
* Parncutt: weighted subharmonics plus bass and tonality weights;
* Schmid: minimal-height stacking with gaps of at least three semitones.

All models are pure functions of the pc set (plus the bass pc and an
optional key for Parncutt), so they are trivially invariant under octave
changes and note duplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .pitch import IntervalOrder

# Parncutt's subharmonic weights, keyed by (candidate - chord pc) mod 12:
# unison, perfect fifth below, major third below, and the two seconds.
PARNCUTT_WEIGHTS = {0: 10, 5: 5, 8: 3, 2: 2, 10: 1}

# Parncutt's major tonality profile, indexed by (pc - tonic) mod 12.
MAJOR_PROFILE = (33, 0, 10, 1, 17, 15, 2, 24, 1, 11, 0, 5)

# Terhardt's five distinct pcs among the first ten subharmonic partials,
# as offsets from the chord note.
SUBHARMONIC_OFFSETS = (0, 5, 8, 2, 10)


@dataclass(frozen=True)
class SchmidStack:
    """One minimal stacking of a chord above an assumed root.

    ``order`` lists the pcs bottom-up starting with the root; ``heights``
    gives each pc's semitone height above the root (first entry 0).
    """

    order: tuple[int, ...]
    heights: tuple[int, ...]

    @property
    def top(self) -> int:
        return self.heights[-1]


@dataclass(frozen=True)
class RootResult:
    """Roots determined by one model, with its per-candidate figures.

    ``scores`` maps candidate pcs to the model's figure of merit:
    minimal stack height for Schmid (lower is better), subharmonic
    degree for Terhardt, overall weight for Parncutt, and chain length
    for stacking thirds (higher is better for those three).
    """

    model: str
    roots: frozenset[int]
    scores: Mapping[int, int]
    cyclic: bool = False


def _pcset(pcs: Iterable[int]) -> frozenset[int]:
    out = frozenset(p % 12 for p in pcs)
    if len(out) < 2:
        raise ValueError("a chord needs at least two distinct pitch classes")
    return out


def schmid_stack(pcs: Iterable[int], assumed_root: int) -> SchmidStack:
    """Stack ``pcs`` above ``assumed_root`` minimizing the top height.

    Every pc sits at a height congruent to its distance from the root
    mod 12, and consecutive heights differ by at least 3 semitones.  The
    returned stack has the minimal possible top; among orderings that
    tie it has the lexicographically smallest height sequence.
    """
    pcset = _pcset(pcs)
    root = assumed_root % 12
    if root not in pcset:
        raise ValueError(f"assumed root {root} is not in the chord")
    offsets = frozenset((p - root) % 12 for p in pcset if p != root)

    best_heights: tuple[int, ...] | None = None
    best_order: tuple[int, ...] | None = None
    best_top = 14 * len(pcset)  # above any minimal stacking

    heights = [0]
    order = [0]

    def walk(remaining: frozenset[int]) -> None:
        nonlocal best_heights, best_order, best_top
        if not remaining:
            if heights[-1] < best_top:
                best_top = heights[-1]
                best_heights = tuple(heights)
                best_order = tuple(order)
            return
        prev = heights[-1]
        nexts = []
        for off in remaining:
            diff = (off - prev) % 12
            if diff < 3:
                diff += 12
            nexts.append((prev + diff, off))
        # Ascending next-height first: leaves are visited in lexicographic
        # order of their height sequences, so the first leaf reaching a
        # given top is also the lex-smallest one for that top.
        for nh, off in sorted(nexts):
            if nh + 3 * (len(remaining) - 1) >= best_top:
                break
            heights.append(nh)
            order.append(off)
            walk(remaining - {off})
            heights.pop()
            order.pop()

    walk(offsets)
    assert best_heights is not None and best_order is not None
    return SchmidStack(
        order=tuple((root + off) % 12 for off in best_order),
        heights=best_heights,
    )


def schmid_roots(pcs: Iterable[int]) -> RootResult:
    """Schmid model: roots are the pcs with the lowest minimal stack top.

    A chord whose candidates all tie (diminished sevenths, augmented
    triads, ...) is cyclic: nothing can be determined, so all pcs are
    returned with the cyclic flag raised.
    """
    pcset = _pcset(pcs)
    tops = {p: schmid_stack(pcset, p).top for p in sorted(pcset)}
    lowest = min(tops.values())
    cyclic = all(t == lowest for t in tops.values()) and len(pcset) > 1
    if cyclic:
        roots = frozenset(pcset)
    else:
        roots = frozenset(p for p, t in tops.items() if t == lowest)
    return RootResult("schmid", roots, tops, cyclic)


def _longest_third_chain(start: int, pcset: frozenset[int]) -> int:
    best = 1

    def walk(cur: int, used: frozenset[int], length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        for step in (3, 4):
            nxt = (cur + step) % 12
            if nxt in pcset and nxt not in used:
                walk(nxt, used | {nxt}, length + 1)

    walk(start, frozenset({start}), 1)
    return best


def stacking_thirds_roots(pcs: Iterable[int]) -> RootResult:
    """Classical model: root of the longest chain of stacked thirds.

    From each pc, chains ascend by minor or major thirds (3 or 4
    semitones) through the chord's pcs, using each at most once; the
    pcs supporting the longest chain are the roots.
    """
    pcset = _pcset(pcs)
    lengths = {p: _longest_third_chain(p, pcset) for p in sorted(pcset)}
    longest = max(lengths.values())
    roots = frozenset(p for p, n in lengths.items() if n == longest)
    return RootResult("thirds", roots, lengths)


def terhardt_roots(pcs: Iterable[int]) -> RootResult:
    """Terhardt's model: count coincidences among subharmonic partials.

    Each chord pc contributes its five subharmonic pcs (itself, the
    fifth below, the major third below and the seconds above and
    below); the degree of a candidate is how many chord pcs list it.
    Roots are the candidates of maximal degree and may lie outside the
    chord.
    """
    pcset = _pcset(pcs)
    degrees = {
        q: sum(1 for p in pcset if (q - p) % 12 in SUBHARMONIC_OFFSETS)
        for q in range(12)
    }
    top = max(degrees.values())
    roots = frozenset(q for q, d in degrees.items() if d == top)
    return RootResult("terhardt", roots, degrees)


def parncutt_roots(
    pcs: Iterable[int],
    bass_pc: int | None = None,
    key: int | tuple[int, str] | None = None,
    bass_weight: int = 20,
) -> RootResult:
    """Parncutt's model: weighted subharmonics, bass and tonality.

    ``key`` is the tonic pc of a major key (optionally a (tonic,
    "major") pair); no tonality weights are applied without it.  The
    bass note receives ``bass_weight`` on top.  All candidates whose
    weight is within 5 of the maximum count as roots.
    """
    pcset = _pcset(pcs)
    tonic: int | None = None
    if key is not None:
        if isinstance(key, tuple):
            tonic, mode = key
            if mode != "major":
                raise ValueError(f"unsupported mode: {mode!r}")
        else:
            tonic = key
        tonic %= 12
    weights = {}
    for q in range(12):
        w = sum(PARNCUTT_WEIGHTS.get((q - p) % 12, 0) for p in pcset)
        if bass_pc is not None and q == bass_pc % 12:
            w += bass_weight
        if tonic is not None:
            w += MAJOR_PROFILE[(q - tonic) % 12]
        weights[q] = w
    top = max(weights.values())
    roots = frozenset(q for q, w in weights.items() if top - w < 5)
    return RootResult("parncutt", roots, weights)


def interval_order_disambiguate(
    results: Sequence[RootResult], order: IntervalOrder
) -> list[frozenset[int]]:
    """Resolve ambiguous roots by interval importance to the neighbors.

    One left-to-right pass over a piece's per-chord results.  For each
    chord with several candidate roots, every candidate is scored by
    the best (lowest) interval rank it forms with any of each
    neighbor's pre-pass candidates, summed over the available
    neighbors; the lowest-scoring candidates are kept.  Unique-root and
    cyclic chords pass through unchanged.
    """
    pre = [r.roots for r in results]
    out: list[frozenset[int]] = []
    for i, res in enumerate(results):
        roots = pre[i]
        if len(roots) <= 1 or res.cyclic:
            out.append(roots)
            continue
        neighbors = [pre[j] for j in (i - 1, i + 1) if 0 <= j < len(pre)]
        if not neighbors:
            out.append(roots)
            continue

        def score(r: int) -> int:
            return sum(
                min(order.rank(abs(r - rp) % 12) for rp in nb)
                for nb in neighbors
            )

        lowest = min(score(r) for r in roots)
        out.append(frozenset(r for r in roots if score(r) == lowest))
    return out
