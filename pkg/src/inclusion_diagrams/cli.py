"""Command line: ``incdiag {check,diagram,explain,enumerate}``.

Exit codes: 0 valid (or all forms agree), 1 invalid (or a disagreement),
2 parse or usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .oracle import MAX_TERMS, classify_all_forms, forms_csv
from .parser import Argument, ParseError, parse_argument
from .render import emit_ascii, emit_svg, layout_chain
from .solver import Verdict, decide, explain

EXIT_VALID, EXIT_INVALID, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

FORMATS = {
    "check": ("text", "json"),
    "diagram": ("svg", "ascii"),
    "explain": ("text",),
    "enumerate": ("csv",),
}


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    input_path: str | None
    output_path: str | None
    format: str
    max_oracle_terms: int = MAX_TERMS

    def __post_init__(self):
        if self.format not in FORMATS[self.command]:
            raise UsageError(f"{self.command} supports --format "
                             f"{'|'.join(FORMATS[self.command])}, not {self.format!r}")


def _read_argument(cfg: CliConfig) -> Argument:
    try:
        if cfg.input_path == "-":
            text = sys.stdin.read()
        else:
            text = Path(cfg.input_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {cfg.input_path}: {exc.strerror or exc}") from exc
    return parse_argument(text)


def _write(cfg: CliConfig, text: str) -> None:
    if cfg.output_path:
        Path(cfg.output_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def verdict_json(arg: Argument, v: Verdict) -> str:
    payload = {
        "verdict": v.status,
        "chain": list(v.proof.labels) if v.proof else [],
        "rules": [s.rewrite.value for s in v.proof.steps] if v.proof else [],
        "countermodel": v.countermodel.to_json() if v.countermodel else None,
        "trace": explain(arg, v),
    }
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def verdict_text(v: Verdict) -> str:
    lines = [f"verdict: {v.status}"]
    if v.proof:
        lines.append("chain: " + " ⊆ ".join(v.proof.labels))
        lines.append("reading: " + v.proof.conclusion_reading)
    if v.countermodel:
        lines.append("countermodel:")
        lines += [f"  {name} = {{{', '.join(m)}}}" for name, m in v.countermodel.to_json().items()]
    if v.note:
        lines.append(f"note: {v.note}")
    return "\n".join(lines) + "\n"


def cmd_check(cfg: CliConfig) -> int:
    arg = _read_argument(cfg)
    v = decide(arg, max_oracle_terms=cfg.max_oracle_terms)
    _write(cfg, verdict_json(arg, v) if cfg.format == "json" else verdict_text(v))
    return EXIT_VALID if v.valid else EXIT_INVALID


def cmd_diagram(cfg: CliConfig) -> int:
    arg = _read_argument(cfg)
    v = decide(arg, max_oracle_terms=cfg.max_oracle_terms, with_countermodel=False)
    if not v.valid:
        print("the argument is not valid: no inclusion diagram can be constructed",
              file=sys.stderr)
        return EXIT_INVALID
    layout = layout_chain(v.proof)
    _write(cfg, emit_svg(layout) if cfg.format == "svg" else emit_ascii(layout))
    return EXIT_VALID


def cmd_explain(cfg: CliConfig) -> int:
    arg = _read_argument(cfg)
    v = decide(arg, max_oracle_terms=cfg.max_oracle_terms)
    _write(cfg, explain(arg, v))
    return EXIT_VALID if v.valid else EXIT_INVALID


def cmd_enumerate(cfg: CliConfig) -> int:
    rows = classify_all_forms()
    _write(cfg, forms_csv(rows))
    bad = [r for r in rows if not r.agree]
    for r in bad:
        print(f"disagreement: {r.mood}-{r.figure} oracle={r.oracle_valid} "
              f"solver={r.solver_valid}", file=sys.stderr)
    return EXIT_INVALID if bad else EXIT_VALID


COMMANDS = {
    "check": cmd_check,
    "diagram": cmd_diagram,
    "explain": cmd_explain,
    "enumerate": cmd_enumerate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="incdiag",
        description="Decide syllogisms and inclusion arguments with inclusion diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, formats in FORMATS.items():
        p = sub.add_parser(name)
        if name != "enumerate":
            p.add_argument("input", help='argument file (.syl), or "-" for standard input')
        p.add_argument("-o", "--output", help="write the result here instead of stdout")
        p.add_argument("--format", default=formats[0])
        p.add_argument("--max-oracle-terms", type=int, default=MAX_TERMS)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = CliConfig(args.command, getattr(args, "input", None), args.output,
                        args.format, args.max_oracle_terms)
        return COMMANDS[cfg.command](cfg)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
