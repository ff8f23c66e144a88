"""Command-line interface.

Exit codes: 0 success, 1 negative verdict, 2 input error, 3 search budget
exhausted, 4 a theorem probe was falsified.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
import warnings
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import suite
from .cm import depth, is_cm, is_minimal_cm
from .complex import alexander_dual, complement_complex
from .fideal import (
    Clutter,
    PreconditionError,
    facet_complex,
    homogeneous_complement_probe,
    is_f_complex_pure,
    is_f_ideal_general,
    main_theorem_probe,
    mayer_vietoris_check,
    newton_dual,
)
from .homology import FieldSpec, reduced_homology
from .io import emit_certificate, emit_complex, emit_order, parse_certificate, parse_complex, parse_order
from .shelling import find_shelling, shelled_over_decompose, verify_shelled_over, verify_shelling

OK, NEGATIVE, INPUT_ERROR, BUDGET, FALSIFIED = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    command: str
    input_digest: str
    field: str
    verdicts: list = dc_field(default_factory=list)
    certificates: list = dc_field(default_factory=list)
    timing: float = 0.0
    exit_code: int = OK
    notes: list = dc_field(default_factory=list)
    output_format: str = "text"
    show_timing: bool = False

    def add(self, check: str, verdict: str, detail: str = "", source: str = ""):
        self.verdicts.append(
            {"check": check, "input": source, "field": self.field, "verdict": verdict, "detail": detail}
        )

    def to_text(self, timing: bool = False) -> str:
        lines = [f"command: {self.command}", f"input: {self.input_digest}", f"field: {self.field}"]
        for v in self.verdicts:
            line = f"{v['check']}: {v['verdict']}"
            if v["detail"]:
                line += f"  [{v['detail']}]"
            lines.append(line)
        for cert in self.certificates:
            lines.append(cert.rstrip("\n"))
        lines.extend(self.notes)
        if timing:
            lines.append(f"time: {self.timing:.3f}s")
        return "\n".join(lines) + "\n"

    def to_json_lines(self) -> str:
        return "".join(json.dumps(v, ensure_ascii=False, sort_keys=True) + "\n" for v in self.verdicts)

    def render(self) -> str:
        if self.output_format == "json-lines":
            return self.to_json_lines()
        return self.to_text(self.show_timing)


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _digest(*texts: str) -> str:
    h = hashlib.sha256()
    for t in texts:
        h.update(t.encode())
        h.update(b"\0")
    return "sha256:" + h.hexdigest()[:16]


def _complex(report_inputs: list, path: str):
    text = _read(path)
    report_inputs.append(text)
    return parse_complex(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q (default) or gf:<p>")
    common.add_argument("--budget", type=int, default=1_000_000, help="search node limit")
    common.add_argument("--format", choices=("text", "json-lines"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for random sweeps")
    common.add_argument("--timing", action="store_true", help="append wall time to text output")

    p = argparse.ArgumentParser(prog="fcomplex", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("homology", "cm", "depth", "minimal-cm", "f-check"):
        sub.add_parser(name, parents=[common]).add_argument("complex")

    sh = sub.add_parser("shelling", parents=[common])
    sh.add_argument("action", choices=("verify", "find"))
    sh.add_argument("complex")
    sh.add_argument("order", nargs="?")

    so = sub.add_parser("shelled-over", parents=[common])
    so.add_argument("action", choices=("verify", "find"))
    so.add_argument("complex")
    so.add_argument("certificate", nargs="?")

    du = sub.add_parser("dual", parents=[common])
    du.add_argument("kind", choices=("c", "alexander", "newton"))
    du.add_argument("complex")

    pr = sub.add_parser("probe", parents=[common])
    pr.add_argument("kind", choices=("main-theorem", "mayer-vietoris", "complement-question"))
    pr.add_argument("complex")

    ps = sub.add_parser("paper-suite", parents=[common])
    ps.add_argument("--data-dir", default=None, help="directory with the example data files")
    return p


def _run_homology(args, rep, inputs, field):
    cx = _complex(inputs, args.complex)
    h = reduced_homology(cx, field)
    dims = " ".join(f"{i}:{h[i]}" for i in range(-1, cx.dim + 1))
    rep.add("reduced homology", "acyclic" if h.is_zero else "not acyclic", dims, args.complex)


def _run_cm(args, rep, inputs, field):
    cx = _complex(inputs, args.complex)
    res = is_cm(cx, field)
    rep.add("cm", "CM" if res else "not CM", res.describe(), args.complex)
    return OK if res else NEGATIVE


def _run_depth(args, rep, inputs, field):
    cx = _complex(inputs, args.complex)
    rep.add("depth", str(depth(cx, field)), f"dim {cx.dim}", args.complex)


def _run_minimal(args, rep, inputs, field):
    cx = _complex(inputs, args.complex)
    res = is_cm(cx, field)
    if not res:
        rep.add("minimal-cm", "not CM", res.describe(), args.complex)
        return NEGATIVE
    minimal = is_minimal_cm(cx, field)
    rep.add("minimal-cm", "minimal" if minimal else "not minimal", "", args.complex)
    return OK if minimal else NEGATIVE


def _run_fcheck(args, rep, inputs, field):
    cx = _complex(inputs, args.complex)
    res = is_f_complex_pure(cx) if cx.is_pure else is_f_ideal_general(Clutter.of_complex(cx))
    rep.add("f-check", "f-complex" if res else "not f-complex", "", args.complex)
    rep.certificates.append(res.to_text())
    return OK if res else NEGATIVE


def _run_shelling(args, rep, inputs, field):
    cx = _complex(inputs, args.complex)
    if args.action == "verify":
        if not args.order:
            raise InputError("shelling verify needs an order file")
        text = _read(args.order)
        inputs.append(text)
        res = verify_shelling(cx, parse_order(text, cx.n))
        detail = "" if res else f"fails at position {res.failed_at}"
        rep.add("shelling", "valid" if res else "invalid", detail, args.complex)
        return OK if res else NEGATIVE
    res = find_shelling(cx, args.budget)
    rep.add("shelling search", res.status, f"{res.nodes} nodes", args.complex)
    if res.found:
        rep.certificates.append(emit_order(res.order, cx.n))
        return OK
    return BUDGET if res.status == "budget-exhausted" else NEGATIVE


def _run_shelled_over(args, rep, inputs, field):
    cx = _complex(inputs, args.complex)
    if args.action == "verify":
        if not args.certificate:
            raise InputError("shelled-over verify needs a certificate file")
        text = _read(args.certificate)
        inputs.append(text)
        res = verify_shelled_over(cx, parse_certificate(text, field), field)
        detail = "" if res else f"step {res.failed_at}: {res.reason}"
        rep.add("shelled-over", "valid" if res else "invalid", detail, args.complex)
        return OK if res else NEGATIVE
    if not is_cm(cx, field):
        rep.add("shelled-over", "not CM", "", args.complex)
        return NEGATIVE
    cert = shelled_over_decompose(cx, field)
    rep.add("shelled-over", "found", f"core of {len(cert.core.facets)} facets, {len(cert.added)} steps", args.complex)
    rep.certificates.append(emit_certificate(cert))


def _run_dual(args, rep, inputs, field):
    cx = _complex(inputs, args.complex)
    if args.kind == "c":
        out = complement_complex(cx)
    elif args.kind == "alexander":
        out = alexander_dual(cx)
    else:
        out = facet_complex(newton_dual(Clutter.of_complex(cx)))
    rep.add(f"dual {args.kind}", "ok", f"{len(out.facets)} facets", args.complex)
    rep.certificates.append(emit_complex(out))


def _run_probe(args, rep, inputs, field):
    cx = _complex(inputs, args.complex)
    if args.kind == "main-theorem":
        res = main_theorem_probe(cx, field)
        rep.certificates.append(res.to_text())
        if not res.applicable:
            rep.add("main-theorem", "not applicable", "; ".join(res.preconditions), args.complex)
            return NEGATIVE
        rep.add("main-theorem", "falsified" if res.falsified else "consistent", "", args.complex)
        return FALSIFIED if res.falsified else OK
    if args.kind == "mayer-vietoris":
        try:
            ok = mayer_vietoris_check(cx, field)
        except PreconditionError as e:
            rep.add("mayer-vietoris", "not applicable", str(e), args.complex)
            return NEGATIVE
        rep.add("mayer-vietoris", "consistent" if ok else "falsified", "", args.complex)
        return OK if ok else FALSIFIED
    try:
        res = homogeneous_complement_probe(cx, args.budget)
    except PreconditionError as e:
        rep.add("complement-question", "not applicable", str(e), args.complex)
        return NEGATIVE
    rep.add(
        "complement-question",
        res.verdict,
        f"{len(res.complement.facets)} complement facets, {res.search.nodes} nodes",
        args.complex,
    )
    if res.search.found:
        rep.certificates.append(emit_order(res.search.order, cx.n))
    return BUDGET if res.search.status == "budget-exhausted" else OK


def _run_suite(args, rep, inputs, field):
    data = suite.load_data(args.data_dir)
    inputs.extend(data[name] for name in suite.DATA_FILES)
    rows = suite.run_suite(args.data_dir, field, args.seed)
    for row in rows:
        rep.add(f"[{row.criterion:2d}] {row.name}", row.status.upper(), row.detail, "paper-data")
    counts = {s: sum(r.status == s for r in rows) for s in ("pass", "flag", "fail")}
    rep.notes.append(f"summary: {counts['pass']} passed, {counts['flag']} flagged, {counts['fail']} failed")
    note = suite.divergence_note(args.data_dir, field)
    if note:
        rep.notes.append(note)
    return NEGATIVE if counts["fail"] else OK


HANDLERS = {
    "homology": _run_homology,
    "cm": _run_cm,
    "depth": _run_depth,
    "minimal-cm": _run_minimal,
    "f-check": _run_fcheck,
    "shelling": _run_shelling,
    "shelled-over": _run_shelled_over,
    "dual": _run_dual,
    "probe": _run_probe,
    "paper-suite": _run_suite,
}


def run_command(argv: list[str]) -> RunReport:
    """Parse ``argv`` and run one command; argparse errors raise SystemExit(2)."""
    args = build_parser().parse_args(argv)
    command = " ".join(argv)
    try:
        field = FieldSpec.parse(args.field)
    except ValueError as e:
        rep = RunReport(command, "-", args.field, exit_code=INPUT_ERROR)
        rep.add("input", "error", str(e))
        return rep
    rep = RunReport(command, "", str(field), output_format=args.format, show_timing=args.timing)
    inputs: list[str] = []
    start = time.perf_counter()
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = HANDLERS[args.command](args, rep, inputs, field) or OK
        rep.notes.extend(f"warning: {w.message}" for w in caught)
    except (InputError, ValueError) as e:
        rep.add("input", "error", str(e))
        code = INPUT_ERROR
    rep.timing = time.perf_counter() - start
    rep.input_digest = _digest(*inputs) if inputs else "-"
    rep.exit_code = code
    return rep


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    rep = run_command(argv)
    sys.stdout.write(rep.render())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
