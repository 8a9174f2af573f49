"""Command-line front end: batch analysis, report files, statistics.

Reads one score or a directory of scores, determines chord roots with
the selected models, and writes HTML/JSON reports, per-model root
lists, and numbered MusicXML next to the inputs (or into --outdir).
With --statistics, predictions are scored against a hand-annotated
root file (<piece>.correct.txt, one root name or ? per line).
"""

from __future__ import annotations

import argparse
import functools
import html
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

from .chordify import chordify, group
from .context import PairFeatures, PairOutcome, context_roots, manual_tree
from .ingest import Score, load_score, write_numbered_musicxml
from .pitch import INTERVAL_ORDERS, parse_note_name, pc_name, pc_of_name
from .rootmodels import (
    RootResult,
    interval_order_disambiguate,
    parncutt_roots,
    schmid_roots,
    stacking_thirds_roots,
    terhardt_roots,
)
from .treelearn import classify, load_packaged_tree

LOGGER = logging.getLogger(__name__)

MODEL_NAMES = (
    "thirds",
    "terhardt",
    "parncutt",
    "schmid",
    "schmid-io",
    "context",
    "context-auto",
)


@dataclass(frozen=True)
class ModelEntry:
    """Roots one model determined for one chord, plus its raw detail."""

    roots: tuple[str, ...]
    cyclic: bool = False
    scores: Mapping[str, int] | None = None


@dataclass
class ChordRecord:
    index: int
    onset: int
    offset: int
    pitch_classes: tuple[str, ...]
    bass: str
    models: dict[str, ModelEntry]


@dataclass
class AnalysisReport:
    piece: str
    models: tuple[str, ...]
    chords: list[ChordRecord]
    accuracy: dict[str, str] | None = None


def _names(pcs: Iterable[int]) -> tuple[str, ...]:
    return tuple(pc_name(pc) for pc in sorted(pcs))


def _score_names(scores: Mapping[int, int]) -> dict[str, int]:
    return {pc_name(pc): scores[pc] for pc in sorted(scores)}


@functools.lru_cache(maxsize=None)
def _auto_tree() -> Callable[[PairFeatures], PairOutcome]:
    tree = load_packaged_tree()
    return lambda features: classify(tree, features)


def piece_roots(
    score: Score,
    models: Sequence[str] = MODEL_NAMES,
    interval_order: str = "a",
) -> tuple[list, dict[str, list[frozenset[int]]], dict[str, list[ModelEntry]]]:
    """Chords of the score plus per-model roots and report entries."""
    chords = chordify(score)
    notes = score.notes_by_id()
    groups = group(chords)
    schmid = [schmid_roots(c.pcs) for c in chords]

    def plain(results: Sequence[RootResult]) -> list[ModelEntry]:
        return [
            ModelEntry(_names(r.roots), r.cyclic, _score_names(r.scores))
            for r in results
        ]

    raw: dict[str, list[frozenset[int]]] = {}
    entries: dict[str, list[ModelEntry]] = {}
    for model in models:
        if model == "thirds":
            results = [stacking_thirds_roots(c.pcs) for c in chords]
            raw[model] = [r.roots for r in results]
            entries[model] = plain(results)
        elif model == "terhardt":
            results = [terhardt_roots(c.pcs) for c in chords]
            raw[model] = [r.roots for r in results]
            entries[model] = plain(results)
        elif model == "parncutt":
            results = [
                parncutt_roots(c.pcs, bass_pc=c.bass_pc) for c in chords
            ]
            raw[model] = [r.roots for r in results]
            entries[model] = plain(results)
        elif model == "schmid":
            raw[model] = [r.roots for r in schmid]
            entries[model] = plain(schmid)
        elif model == "schmid-io":
            order = INTERVAL_ORDERS[interval_order]
            sets = interval_order_disambiguate(schmid, order)
            raw[model] = list(sets)
            entries[model] = [
                ModelEntry(_names(rs), r.cyclic, _score_names(r.scores))
                for rs, r in zip(sets, schmid)
            ]
        elif model == "context":
            sets = context_roots(groups, notes, manual_tree)
            raw[model] = list(sets)
            entries[model] = [ModelEntry(_names(rs)) for rs in sets]
        elif model == "context-auto":
            sets = context_roots(groups, notes, _auto_tree())
            raw[model] = list(sets)
            entries[model] = [ModelEntry(_names(rs)) for rs in sets]
        else:
            raise ValueError(f"unknown model {model!r}")
    return chords, raw, entries


def compute_report(
    score: Score,
    piece: str,
    models: Sequence[str] = MODEL_NAMES,
    interval_order: str = "a",
) -> tuple[AnalysisReport, dict[str, list[frozenset[int]]]]:
    chords, raw, entries = piece_roots(score, models, interval_order)
    records = [
        ChordRecord(
            index=c.index,
            onset=c.onset,
            offset=c.offset,
            pitch_classes=_names(c.pcs),
            bass=pc_name(c.bass_pc),
            models={m: entries[m][i] for m in models},
        )
        for i, c in enumerate(chords)
    ]
    return AnalysisReport(piece, tuple(models), records), raw


# --- annotations and statistics ---------------------------------------------


def parse_annotations(text: str) -> list[int | None]:
    """One root name or ? per line; ? marks chords excluded from scoring."""
    out: list[int | None] = []
    for num, line in enumerate(text.splitlines(), start=1):
        token = line.strip()
        if not token or token.startswith("#"):
            continue
        if token == "?":
            out.append(None)
            continue
        try:
            out.append(pc_of_name(parse_note_name(token)))
        except ValueError:
            raise ValueError(f"line {num}: not a root name: {token!r}") from None
    return out


def statistics(
    predicted: Sequence[frozenset[int]],
    annotation: Sequence[int | None],
    strict: bool = False,
    piece: str = "",
) -> str:
    """Percentage of scored chords predicted correctly, or n/a.

    By default a chord counts as correct when the annotated root is a
    member of the predicted set; with strict=True the predicted set
    must equal exactly the annotated singleton.
    """
    if len(predicted) != len(annotation):
        raise ValueError(
            f"{piece or 'annotation'}: {len(annotation)} annotated roots"
            f" for {len(predicted)} chords"
        )
    scored = [(p, a) for p, a in zip(predicted, annotation) if a is not None]
    if not scored:
        return "n/a"
    if strict:
        correct = sum(1 for p, a in scored if p == {a})
    else:
        correct = sum(1 for p, a in scored if a in p)
    return f"{100 * correct / len(scored):.2f}"


# --- output renderers --------------------------------------------------------


def roots_txt(report: AnalysisReport, model: str) -> str:
    """One line per chord; ambiguous roots space-joined; cyclic marked *."""
    if model not in report.models:
        raise ValueError(f"model {model!r} not in report")
    lines = []
    for record in report.chords:
        entry = record.models[model]
        line = " ".join(entry.roots)
        if entry.cyclic:
            line += " *"
        lines.append(line)
    return "".join(line + "\n" for line in lines)


def report_to_dict(report: AnalysisReport) -> dict:
    return {
        "piece": report.piece,
        "models": list(report.models),
        "chords": [
            {
                "index": r.index,
                "onset": r.onset,
                "offset": r.offset,
                "pitch_classes": list(r.pitch_classes),
                "bass": r.bass,
                "models": {
                    m: {
                        "roots": list(e.roots),
                        "cyclic": e.cyclic,
                        "scores": dict(e.scores) if e.scores is not None else None,
                    }
                    for m, e in r.models.items()
                },
            }
            for r in report.chords
        ],
        "accuracy": dict(report.accuracy) if report.accuracy is not None else None,
    }


def render_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), ensure_ascii=False, indent=2) + "\n"


_HTML_STYLE = """
body { font-family: sans-serif; margin: 2em; }
table { border-collapse: collapse; margin-top: 1em; }
th, td { border: 1px solid #999; padding: 0.3em 0.7em; text-align: left; }
th { background: #eee; }
"""


def render_html(report: AnalysisReport) -> str:
    """A static, script-free table of the analysis."""
    esc = html.escape
    head = "".join(f"<th>{esc(m)}</th>" for m in report.models)
    rows = []
    for record in report.chords:
        cells = [
            f"<td>{record.index}</td>",
            f"<td>{esc(' '.join(record.pitch_classes))}</td>",
            f"<td>{esc(record.bass)}</td>",
        ]
        for model in report.models:
            entry = record.models[model]
            text = " ".join(entry.roots) + (" *" if entry.cyclic else "")
            cells.append(f"<td>{esc(text)}</td>")
        rows.append("<tr>" + "".join(cells) + "</tr>")
    accuracy = ""
    if report.accuracy is not None:
        acc_rows = "".join(
            f"<tr><td>{esc(m)}</td><td>{esc(v)}</td></tr>"
            for m, v in report.accuracy.items()
        )
        accuracy = (
            "<h2>Correct roots</h2>"
            "<table><thead><tr><th>model</th><th>%</th></tr></thead>"
            f"<tbody>{acc_rows}</tbody></table>"
        )
    return (
        "<!DOCTYPE html>\n"
        '<html lang="en"><head><meta charset="utf-8">'
        f"<title>{esc(report.piece)}</title>"
        f"<style>{_HTML_STYLE}</style></head>\n"
        f"<body><h1>{esc(report.piece)}</h1>\n"
        "<table><thead><tr><th>#</th><th>pitch classes</th><th>bass</th>"
        f"{head}</tr></thead>\n<tbody>"
        + "\n".join(rows)
        + f"</tbody></table>\n{accuracy}</body></html>\n"
    )


# --- batch driver ------------------------------------------------------------


@dataclass
class Options:
    models: tuple[str, ...] = MODEL_NAMES
    outdir: Path | None = None
    htmls: bool = True
    musicxmls: bool = False
    txts: bool = False
    jsons: bool = False
    do_statistics: bool = False
    strict: bool = False
    interval_order: str = "a"
    verbose: bool = False


def analyse_file(path: Path, options: Options) -> list[str]:
    """Analyse one piece, write its outputs, return the transcript block."""
    lines = [f"Analysing: {path}"]
    score = load_score(path)
    piece = path.stem
    report, raw = compute_report(
        score, piece, options.models, options.interval_order
    )

    annotation = None
    if options.do_statistics:
        correct_path = path.with_name(path.stem + ".correct.txt")
        annotation = parse_annotations(
            correct_path.read_text(encoding="utf-8")
        )
        report.accuracy = {
            model: statistics(raw[model], annotation, options.strict, piece)
            for model in options.models
        }

    outdir = options.outdir if options.outdir is not None else path.parent
    outdir.mkdir(parents=True, exist_ok=True)

    def emit(name: str, data: str | bytes, kind: str) -> None:
        target = outdir / name
        if isinstance(data, bytes):
            target.write_bytes(data)
        else:
            target.write_text(data, encoding="utf-8")
        if options.verbose:
            lines.append(f"Wrote {kind} file ({target})")

    if options.htmls:
        emit(f"{piece}.html", render_html(report), "HTML")
    if options.jsons:
        emit(f"{piece}.json", render_json(report), "JSON")
    if options.txts:
        for model in options.models:
            emit(f"{piece}.{model}.txt", roots_txt(report, model), "TXT")
    if options.musicxmls:
        chords = chordify(score)
        emit(
            f"{piece}.numbered.xml",
            write_numbered_musicxml(score, chords),
            "MusicXML",
        )
    if report.accuracy is not None:
        lines.append(f"Statistics: {piece}")
        for model in options.models:
            value = report.accuracy[model]
            shown = value if value == "n/a" else value + "%"
            lines.append(f"  {model:<13} {shown}")
    if options.verbose:
        lines.append("Done!")
    return lines


def _collect_inputs(input_path: Path, filetype: str) -> list[Path]:
    if input_path.is_file():
        return [input_path]
    if input_path.is_dir():
        suffix = filetype if filetype.startswith(".") else "." + filetype
        return sorted(p for p in input_path.iterdir() if p.suffix == suffix)
    raise FileNotFoundError(f"no such file or directory: {input_path}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordroot",
        description="Determine chord roots of symbolic scores.",
    )
    parser.add_argument("input", help="score file or directory of scores")
    parser.add_argument(
        "--filetype",
        "-t",
        default=".mxl",
        help="suffix of files read from an input directory (default .mxl)",
    )
    parser.add_argument(
        "--outdir",
        "-o",
        default=None,
        help="directory for output files (default: next to the inputs)",
    )
    parser.add_argument(
        "--models",
        "-m",
        default=" ".join(MODEL_NAMES),
        help="whitespace-separated model names: " + " ".join(MODEL_NAMES),
    )
    parser.add_argument(
        "--nohtmls", action="store_true", help="do not write HTML reports"
    )
    parser.add_argument(
        "--musicxmls",
        "-mx",
        action="store_true",
        help="write numbered MusicXML files",
    )
    parser.add_argument(
        "--txts",
        action="store_true",
        help="write per-model root lists (one chord per line)",
    )
    parser.add_argument(
        "--jsons", action="store_true", help="write JSON reports"
    )
    parser.add_argument(
        "--statistics",
        "-s",
        action="store_true",
        help="score predictions against <piece>.correct.txt annotations",
    )
    parser.add_argument(
        "--strict",
        action="store_true",
        help="statistics require the exact predicted root set",
    )
    parser.add_argument(
        "--interval-order",
        choices=sorted(INTERVAL_ORDERS),
        default="a",
        help="interval order used by the schmid-io model",
    )
    parser.add_argument(
        "--jobs",
        "-j",
        type=int,
        default=1,
        help="process this many files in parallel",
    )
    parser.add_argument(
        "--debug", "-d", action="store_true", help="show debug messages"
    )
    parser.add_argument(
        "--verbose", "-v", action="store_true", help="more progress output"
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = (
        logging.DEBUG
        if args.debug
        else logging.INFO if args.verbose else logging.WARNING
    )
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    models = tuple(args.models.split())
    unknown = [m for m in models if m not in MODEL_NAMES]
    if unknown or not models:
        print(
            "error: unknown models: " + " ".join(unknown or ["(none)"]),
            file=sys.stderr,
        )
        return 1
    options = Options(
        models=models,
        outdir=Path(args.outdir) if args.outdir else None,
        htmls=not args.nohtmls,
        musicxmls=args.musicxmls,
        txts=args.txts,
        jsons=args.jsons,
        do_statistics=args.statistics,
        strict=args.strict,
        interval_order=args.interval_order,
        verbose=args.verbose,
    )

    try:
        inputs = _collect_inputs(Path(args.input), args.filetype)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if not inputs:
        print(f"error: no {args.filetype} files in {args.input}", file=sys.stderr)
        return 1

    def run_one(path: Path) -> tuple[list[str], str | None]:
        try:
            return analyse_file(path, options), None
        except (ValueError, OSError) as exc:
            return [f"Analysing: {path}"], f"{path}: {exc}"

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_one, inputs))
    else:
        results = [run_one(path) for path in inputs]

    failed = False
    for block, error in results:
        for line in block:
            print(line)
        if error is not None:
            failed = True
            print(f"error: {error}", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
