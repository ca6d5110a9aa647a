"""``joingeom`` command line.

Exit codes: 0 when everything requested passes, 1 when a check fails or a
theorem disagrees, 2 on usage, file or resource-guard errors.
"""

from __future__ import annotations

import functools
import json
import sys
import warnings
from pathlib import Path

import click

from . import axioms, closure, generators, io, linespace
from .bitset import format_mask, from_points, to_points
from .enumeration import (DEFAULT_MAX_EXHAUSTIVE_N, EnumSpec, count_join_spaces,
                          enumerate_join_spaces, sample_join_spaces, sample_line_join_spaces)
from .relations import CheckReport, JoinSpace, ResourceLimitError, StructuralError
from .verify import THEOREMS, VerifyResult, verify, verify_exhaustive

DEFAULT_CHECKS = ("VI", "VII", "diagonal", "X", "IX", "XII", "VIII", "equivalence-relational",
                  "preprojective", "projective", "proper", "join-transitive",
                  "join-equivalence-relational", "matroid")


def _space_checks(max_n: int | None) -> dict:
    out = dict(axioms.AXIOMS)
    out["exchange"] = lambda s: closure.is_exchange_space(s, max_n)
    out["matroid"] = lambda s: closure.is_matroid(s, max_n)
    out["combinatorial"] = lambda s: closure.is_combinatorial(s, max_n)
    return out


LINE_CHECKS = {
    "A1-A2": linespace.validate_lines,
    "A3": linespace.assumption_a3,
    "E": linespace.assumption_e,
    "projective-lines": linespace.is_projective_line_space,
}


class Ctx:
    def __init__(self, output, fmt, jobs, max_n, seed):
        self.output, self.fmt, self.jobs, self.max_n, self.seed = output, fmt, jobs, max_n, seed

    def emit(self, text: str = "", data=None) -> None:
        """Text form, or ``data`` as JSON under ``--format structured``."""
        out = json.dumps(data, indent=2) + "\n" if self.fmt == "structured" else text
        if self.output:
            Path(self.output).write_text(out)
        else:
            click.echo(out, nl=False)


def die(msg: str) -> None:
    click.echo(f"error: {msg}", err=True)
    sys.exit(2)


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    return x


def _load_space(path: str, text: str | None = None) -> tuple[JoinSpace, list[str] | None]:
    """A SpaceFile, or a LineFile read through iota."""
    try:
        if text is None:
            text = Path(path).read_text()
        if io.detect_format(text, path) == io.LINE_FORMAT:
            return linespace.iota(io.loads_lines(text, path)), None
        return io.loads_space(text, path)
    except OSError as e:
        die(f"cannot read {path}: {e.strerror}")
    except io.FormatError as e:
        die(str(e))


def _guarded(fn, *args, **kw):
    try:
        return fn(*args, **kw)
    except ResourceLimitError as e:
        die(f"resource guard: {e}")
    except (StructuralError, ValueError) as e:
        die(str(e))


def _report_line(rep: CheckReport) -> str:
    tag = "PASS" if rep.verdict else "FAIL"
    extra = "" if rep.exact else " (sampled)"
    line = f"{tag}  {rep.label}{extra}"
    if not rep.verdict:
        line += f"  witness {rep.witness}"
    return line


def _report_dict(rep: CheckReport) -> dict:
    return {"check": rep.label, "verdict": rep.verdict, "witness": _jsonable(rep.witness),
            "exact": rep.exact}


def _local_flags(fn):
    """Let ``--output`` and ``--format`` also follow the verb."""
    @functools.wraps(fn)
    def run(obj: Ctx, *args, output=None, fmt=None, **kw):
        if output is not None:
            obj.output = output
        if fmt is not None:
            obj.fmt = fmt
        return fn(obj, *args, **kw)
    run = click.option("--format", "fmt", type=click.Choice(["text", "structured"]),
                       default=None)(run)
    return click.option("--output", type=click.Path(dir_okay=False), default=None)(run)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--output", type=click.Path(dir_okay=False), default=None,
              help="Write the result here instead of stdout.")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text")
@click.option("--jobs", type=click.IntRange(min=1), default=1, help="Worker processes for verify.")
@click.option("--max-n", type=click.IntRange(min=0), default=None,
              help="Raise the resource bound (closed-set enumeration, exhaustive n).")
@click.option("--seed", type=int, default=0)
@click.pass_context
def main(ctx, output, fmt, jobs, max_n, seed):
    """Verification engine for finite join geometries."""
    ctx.obj = Ctx(output, fmt, jobs, max_n, seed)


@main.command()
@click.argument("kind", type=click.Choice(["affine", "projective", "grid", "minimal"]))
@click.option("--p", "p", type=int, default=2, help="Field order (prime).")
@click.option("--dim", type=int, default=2)
@click.option("--w", "w", type=int, default=1)
@click.option("--h", "h", type=int, default=1)
@click.option("--n", "n", type=int, default=1, help="Points of the minimal space.")
@click.pass_obj
@_local_flags
def generate(obj: Ctx, kind, p, dim, w, h, n):
    """Write a generated space as a joinspace-v1 file."""
    if kind in ("affine", "projective") and not generators.is_prime(p):
        die(f"prime check: --p {p} is not prime")
    if kind == "affine":
        s = _guarded(generators.affine_join_space, p, dim)
        labels = [str(v) for v in generators.affine_points(p, dim)]
    elif kind == "projective":
        L, s = _guarded(generators.projective_space, p, dim)
        labels = [str(v) for v in generators.projective_points(p, dim)]
    elif kind == "grid":
        g = _guarded(generators.GridSpec, w, h)
        s = _guarded(generators.grid_segment_space, g)
        labels = [str(v) for v in g.points()]
    else:
        if n < 0:
            die("--n must be non-negative")
        s = generators.minimal_join_space(n)
        labels = None
    text = io.dumps_space(s, labels)
    if obj.output:
        Path(obj.output).write_text(text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("path", type=click.Path())
@click.argument("checks", nargs=-1)
@click.pass_obj
@_local_flags
def check(obj: Ctx, path, checks):
    """Evaluate axiom checks on a file (default: the main axioms).

    A linespace-v1 file also accepts A1-A2, A3, E and projective-lines.
    """
    try:
        raw = Path(path).read_text()
        text_fmt = io.detect_format(raw, path)
    except OSError as e:
        die(f"cannot read {path}: {e.strerror}")
    except io.FormatError as e:
        die(str(e))
    table = _space_checks(obj.max_n)
    lines = None
    if text_fmt == io.LINE_FORMAT:
        lines = _guarded(io.loads_lines, raw, path, raw=True)
        table.update(LINE_CHECKS)
    checks = checks or DEFAULT_CHECKS
    unknown = [c for c in checks if c not in table]
    if unknown:
        die(f"unknown check {unknown[0]!r}; choose from {', '.join(sorted(table))}")
    s = None
    if lines is None:
        s, _ = _load_space(path, raw)
    elif any(c not in LINE_CHECKS for c in checks):
        rep = linespace.validate_lines(lines)
        if not rep:
            die(f"{path}: not a line structure, witness {rep.witness}")
        s = linespace.iota(lines)
    reports = [_guarded(table[c], lines if c in LINE_CHECKS else s) for c in checks]
    reports = [r.relabel(c) for r, c in zip(reports, checks)]
    ok = all(reports)
    obj.emit("".join(_report_line(r) + "\n" for r in reports),
             {"file": path, "ok": ok, "checks": [_report_dict(r) for r in reports]})
    sys.exit(0 if ok else 1)


def _result_text(res: VerifyResult, quarantine: str | None) -> str:
    out = [f"{res.theorem}: {res.scanned} models scanned, {res.applicable} applicable, "
           f"{res.disagreements} disagreements"]
    for pat in sorted(res.patterns, key=repr):
        out.append(f"  verdicts {pat}: {res.patterns[pat]}")
    if res.ok:
        out.append("agreement")
    else:
        out.append(f"DISAGREEMENT at model {res.first_index}: verdicts {res.first_verdicts}")
        if quarantine:
            out.append(f"quarantined to {quarantine}")
    return "\n".join(out) + "\n"


@main.command("verify")
@click.argument("theorem", type=click.Choice(list(THEOREMS)))
@click.option("--exhaustive", "exhaustive_n", type=int, default=None, metavar="N",
              help="Every join space on N points.")
@click.option("--sampled", nargs=2, type=int, default=None, metavar="N COUNT",
              help="COUNT seeded samples on N points.")
@click.option("--file", "file_", type=click.Path(), default=None, help="One space from a file.")
@click.option("--sampler", type=click.Choice(["uniform", "lines"]), default="uniform",
              help="Sampling distribution for --sampled.")
@click.option("--quarantine", type=click.Path(dir_okay=False), default="quarantine.json",
              show_default=True, help="Where the first disagreeing model is written.")
@click.pass_obj
@_local_flags
def verify_cmd(obj: Ctx, theorem, exhaustive_n, sampled, file_, sampler, quarantine):
    """Check a theorem's conditions agree on every model in a scope."""
    scopes = [x is not None for x in (exhaustive_n, sampled, file_)]
    if sum(scopes) != 1:
        die("give exactly one of --exhaustive, --sampled, --file")
    opts = {"seed": obj.seed}
    if obj.max_n is not None:
        opts["max_closed_n"] = obj.max_n
    if exhaustive_n is not None:
        bound = max(DEFAULT_MAX_EXHAUSTIVE_N, obj.max_n or 0)
        _guarded(EnumSpec, exhaustive_n, allow_n5=bound >= 5)
        if count_join_spaces(exhaustive_n) > EnumSpec(0).ceiling:
            die(f"resource guard: {count_join_spaces(exhaustive_n)} models on "
                f"{exhaustive_n} points exceeds the enumeration ceiling")
        res = _guarded(verify_exhaustive, theorem, exhaustive_n, jobs=obj.jobs, **opts)
    elif sampled is not None:
        n, count = sampled
        if n < 0 or count < 0:
            die("--sampled needs non-negative N and COUNT")
        draw = sample_line_join_spaces if sampler == "lines" else sample_join_spaces
        res = _guarded(verify, theorem, draw(n, count, obj.seed), **opts)
    else:
        s, _ = _load_space(file_)
        res = _guarded(verify, theorem, [s], **opts)
    if not res.ok:
        io.write_space(quarantine, res.first_disagreement)
    data = {"theorem": theorem, "scanned": res.scanned, "applicable": res.applicable,
            "disagreements": res.disagreements, "ok": res.ok,
            "patterns": [{"verdicts": _jsonable(k), "count": v}
                         for k, v in sorted(res.patterns.items(), key=lambda kv: repr(kv[0]))],
            "first_disagreement": res.first_index,
            "quarantine": None if res.ok else quarantine}
    obj.emit(_result_text(res, None if res.ok else quarantine), data)
    sys.exit(0 if res.ok else 1)


@main.command("closure")
@click.argument("path", type=click.Path())
@click.argument("points", nargs=-1, type=int)
@click.pass_obj
@_local_flags
def closure_cmd(obj: Ctx, path, points):
    """Print the join closure of the given points."""
    s, labels = _load_space(path)
    bad = [p for p in points if not 0 <= p < s.n]
    if bad:
        die(f"point {bad[0]} out of range 0..{s.n - 1}")
    hull = closure.join_closure(s, from_points(points))
    text = format_mask(hull) + "\n"
    obj.emit(text, {"subset": sorted(set(points)), "closure": list(to_points(hull))})


@main.command()
@click.argument("path", type=click.Path())
@click.pass_obj
@_local_flags
def rank(obj: Ctx, path):
    """Print greedy rank and dimension; warns when the space is not a matroid."""
    s, _ = _load_space(path)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", closure.OrderDependenceWarning)
        r = _guarded(closure.matroid_rank, s, obj.max_n)
    if not r.matroid:
        click.echo("warning: not a matroid; greedy rank depends on point order", err=True)
    obj.emit(str(r) + "\n", {"rank": r.rank, "dimension": r.dimension,
                             "basis": list(r.basis), "matroid": r.matroid})


@main.command("enumerate")
@click.argument("n", type=int)
@click.option("--sampled", "count", type=int, default=None, metavar="COUNT",
              help="COUNT seeded samples instead of the exhaustive stream.")
@click.option("--dedup", is_flag=True, help="Keep one canonical form per isomorphism class.")
@click.option("--count-only", is_flag=True, help="Print only the number of models.")
@click.pass_obj
@_local_flags
def enumerate_cmd(obj: Ctx, n, count, dedup, count_only):
    """Stream join spaces on N points, one compact joinspace-v1 object per line."""
    bound = max(DEFAULT_MAX_EXHAUSTIVE_N, obj.max_n or 0)
    spec = _guarded(EnumSpec, n, mode="sampled" if count is not None else "exhaustive",
                    count=count or 0, seed=obj.seed, dedup=dedup, allow_n5=bound >= 5)
    models = _guarded(lambda: list(enumerate_join_spaces(spec)))
    if count_only:
        obj.emit(f"{len(models)}\n", {"n": n, "count": len(models)})
        return
    if obj.fmt == "structured":
        obj.emit(data={"n": n, "count": len(models),
                       "models": [json.loads(io.compact_space(s)) for s in models]})
    else:
        obj.emit("".join(io.compact_space(s) + "\n" for s in models))


@main.command()
@click.argument("path", type=click.Path())
@click.pass_obj
@_local_flags
def correspond(obj: Ctx, path):
    """Map a join-space file to its line file (lambda) or a line file to its join space (iota)."""
    try:
        text = Path(path).read_text()
        kind = io.detect_format(text, path)
        if kind == io.LINE_FORMAT:
            out = io.dumps_space(linespace.iota(io.loads_lines(text, path)))
        else:
            s, _ = io.loads_space(text, path)
            try:
                out = io.dumps_lines(linespace.lambda_(s))
            except linespace.HypothesisError as e:
                click.echo(f"not equivalence-relational: witness {e.report.witness}", err=True)
                sys.exit(1)
    except OSError as e:
        die(f"cannot read {path}: {e.strerror}")
    except io.FormatError as e:
        die(str(e))
    if obj.output:
        Path(obj.output).write_text(out)
    else:
        click.echo(out, nl=False)


if __name__ == "__main__":
    main()
