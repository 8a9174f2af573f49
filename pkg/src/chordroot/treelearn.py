"""CART-style decision-tree induction for chord-pair outcomes.

Trees split on the eight boolean pair features, impurity is Gini
computed exactly over rationals, and splitting stops at a fixed
leaf-size floor.  Trees can be stored in and loaded from a small
line-oriented text format; one induced tree ships with the package.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterable, Mapping, Sequence, Union

from .context import FEATURE_NAMES, OUTCOME_ORDER, PairFeatures, PairOutcome

_OUTCOME_BY_NAME = {o.value: o for o in PairOutcome}
_OUTCOME_INDEX = {o: i for i, o in enumerate(OUTCOME_ORDER)}

CSV_HEADER = FEATURE_NAMES + ("label",)


@dataclass
class Sample:
    """One annotated chord pair: its features and the decided outcome."""

    features: PairFeatures
    label: PairOutcome


@dataclass
class Leaf:
    label: PairOutcome
    counts: dict[PairOutcome, int] = field(default_factory=dict)


@dataclass
class Split:
    feature: str
    yes: "Node"
    no: "Node"


Node = Union[Leaf, Split]


@dataclass
class DecisionTree:
    root: Node


def gini(counts: Mapping[object, int]) -> Fraction:
    """Gini impurity 1 - sum((n_k / n)^2), exact over rationals."""
    total = sum(counts.values())
    if total <= 0:
        raise ValueError("gini requires at least one sample")
    return 1 - sum(Fraction(n, total) ** 2 for n in counts.values())


def _majority(counts: Counter) -> PairOutcome:
    # ties go to the earliest outcome in the canonical listing order
    return min(counts, key=lambda o: (-counts[o], _OUTCOME_INDEX[o]))


def induce(
    samples: Sequence[Sample], min_samples_leaf: int = 10
) -> DecisionTree:
    """Greedy binary tree over the samples.

    A split is taken only if both children keep at least
    min_samples_leaf samples and the weighted Gini decrease is
    positive; equal decreases are resolved toward the earliest
    feature.  No feature is tested twice on one path.
    """
    if not samples:
        raise ValueError("cannot induce a tree from an empty dataset")
    if min_samples_leaf < 1:
        raise ValueError("min_samples_leaf must be positive")

    def build(subset: list[Sample], remaining: tuple[str, ...]) -> Node:
        counts = Counter(s.label for s in subset)
        best = None
        if len(counts) > 1:
            parent = gini(counts)
            n = len(subset)
            for name in remaining:
                yes = [s for s in subset if getattr(s.features, name)]
                no = [s for s in subset if not getattr(s.features, name)]
                if len(yes) < min_samples_leaf or len(no) < min_samples_leaf:
                    continue
                children = Fraction(len(yes), n) * gini(
                    Counter(s.label for s in yes)
                ) + Fraction(len(no), n) * gini(Counter(s.label for s in no))
                gain = parent - children
                if gain > 0 and (best is None or gain > best[0]):
                    best = (gain, name, yes, no)
        if best is None:
            return Leaf(_majority(counts), dict(counts))
        _, name, yes, no = best
        rest = tuple(f for f in remaining if f != name)
        return Split(name, build(yes, rest), build(no, rest))

    return DecisionTree(build(list(samples), FEATURE_NAMES))


def classify(tree: DecisionTree, features: PairFeatures) -> PairOutcome:
    """Root-to-leaf traversal."""
    node = tree.root
    while isinstance(node, Split):
        node = node.yes if getattr(features, node.feature) else node.no
    return node.label


def holdout_split(
    samples: Sequence[Sample],
) -> tuple[list[Sample], list[Sample]]:
    """(train, holdout): every 10th sample, then every 22nd of the rest."""
    samples = list(samples)
    first = samples[::10]
    rest = [s for i, s in enumerate(samples) if i % 10 != 0]
    second = rest[::22]
    train = [s for i, s in enumerate(rest) if i % 22 != 0]
    return train, first + second


# --- tree text format ------------------------------------------------------
#
# split <feature>
#   <yes subtree>
#   <no subtree>
# leaf <Label> [<Label>=<count> ...]
#
# Children are indented by two further spaces; blank lines and lines
# starting with '#' are skipped.


def save_tree(tree: DecisionTree) -> str:
    lines: list[str] = []

    def emit(node: Node, indent: int) -> None:
        pad = " " * indent
        if isinstance(node, Leaf):
            counts = " ".join(
                f"{o.value}={node.counts[o]}"
                for o in OUTCOME_ORDER
                if o in node.counts
            )
            lines.append(
                f"{pad}leaf {node.label.value}"
                + (f" {counts}" if counts else "")
            )
            return
        lines.append(f"{pad}split {node.feature}")
        emit(node.yes, indent + 2)
        emit(node.no, indent + 2)

    emit(tree.root, 0)
    return "\n".join(lines) + "\n"


def load_tree(text: str) -> DecisionTree:
    rows = [
        (num, line)
        for num, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ValueError("tree file contains no nodes")
    pos = 0

    def parse(indent: int) -> Node:
        nonlocal pos
        if pos >= len(rows):
            raise ValueError(
                f"line {rows[-1][0]}: tree file ends inside a split"
            )
        num, line = rows[pos]
        found = len(line) - len(line.lstrip(" "))
        if found != indent:
            raise ValueError(
                f"line {num}: expected indent {indent}, found {found}"
            )
        tokens = line.split()
        if tokens[0] == "split":
            if len(tokens) != 2 or tokens[1] not in FEATURE_NAMES:
                raise ValueError(f"line {num}: unknown split feature")
            pos += 1
            yes = parse(indent + 2)
            no = parse(indent + 2)
            return Split(tokens[1], yes, no)
        if tokens[0] == "leaf":
            if len(tokens) < 2 or tokens[1] not in _OUTCOME_BY_NAME:
                raise ValueError(f"line {num}: unknown leaf label")
            counts: dict[PairOutcome, int] = {}
            for token in tokens[2:]:
                name, _, value = token.partition("=")
                if name not in _OUTCOME_BY_NAME or not value.isdigit():
                    raise ValueError(f"line {num}: malformed leaf counts")
                counts[_OUTCOME_BY_NAME[name]] = int(value)
            pos += 1
            return Leaf(_OUTCOME_BY_NAME[tokens[1]], counts)
        raise ValueError(f"line {num}: expected 'split' or 'leaf'")

    root = parse(0)
    if pos != len(rows):
        raise ValueError(f"line {rows[pos][0]}: trailing content after tree")
    return DecisionTree(root)


def load_packaged_tree(name: str = "generated") -> DecisionTree:
    """Load a tree shipped with the package (trees/<name>.tree)."""
    text = (
        resources.files(__package__)
        .joinpath("trees", f"{name}.tree")
        .read_text(encoding="utf-8")
    )
    return load_tree(text)


# --- training data CSV -----------------------------------------------------


def write_samples_csv(samples: Iterable[Sample]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for sample in samples:
        writer.writerow(
            [int(bit) for bit in sample.features.as_tuple()]
            + [sample.label.value]
        )
    return out.getvalue()


def read_samples_csv(text: str) -> list[Sample]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("empty samples CSV") from None
    if tuple(header) != CSV_HEADER:
        raise ValueError("samples CSV has an unexpected header")
    samples = []
    for num, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(CSV_HEADER):
            raise ValueError(f"line {num}: expected {len(CSV_HEADER)} fields")
        bits = []
        for name, cell in zip(FEATURE_NAMES, row):
            if cell not in ("0", "1"):
                raise ValueError(f"line {num}: {name} must be 0 or 1")
            bits.append(cell == "1")
        label = row[-1]
        if label not in _OUTCOME_BY_NAME:
            raise ValueError(f"line {num}: unknown label {label!r}")
        samples.append(
            Sample(PairFeatures.from_tuple(bits), _OUTCOME_BY_NAME[label])
        )
    return samples
