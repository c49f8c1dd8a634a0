"""Command-line front end: one JSON document in, one JSON document out.

Exit status: 0 for any computed answer (including ``not_variety`` and
``inconclusive``), 2 for unparsable input, 3 for contract violations,
4 for I/O failures.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from . import serialize as S
from .core import GeneratorSet, hull_member, is_tropically_singular, matrix, rank_witness
from .corpus import CountableFamilySpec, example_a0, example_countable_family, point_pj
from .errors import TropError
from .prevariety import (
    dimension,
    double_orthogonal_generators,
    orthogonal_generators,
    prevariety_member,
)
from .variety import (
    Budget,
    Decision,
    NOT_VARIETY,
    VARIETY,
    decide_variety,
    lift_hull_point,
    plucker_coordinates,
    trop_generators_from_plucker,
    trop_space_member,
)

EXIT_OK, EXIT_PARSE, EXIT_CONTRACT, EXIT_IO = 0, 2, 3, 4

log = logging.getLogger("tropdual")


@dataclass(frozen=True)
class JobSpec:
    command: str
    input: str | None = None
    output: str | None = None
    seed: int = 0
    budget: Budget = Budget()
    flags: dict = field(default_factory=dict)


def _rows_and_n(doc: dict) -> tuple[list, int | None]:
    if not isinstance(doc, dict):
        raise S.SchemaError("$", "expected an object")
    if "vectors" not in doc:
        raise S.SchemaError("$", 'missing key "vectors"')
    rows = S.decode_matrix(doc["vectors"], "$.vectors")
    n = doc.get("n")
    if n is not None and (isinstance(n, bool) or not isinstance(n, int)):
        raise S.SchemaError("$.n", "expected an integer")
    return matrix(rows, n), n


def _gens_doc(g: GeneratorSet) -> dict:
    return {"generators": [S.encode_vector(v) for v in g], "n": g.ambient_dim}


def _cmd_orth(doc, job):
    rows, n = _rows_and_n(doc)
    return _gens_doc(orthogonal_generators(rows, n))


def _cmd_dorth(doc, job):
    rows, n = _rows_and_n(doc)
    return _gens_doc(double_orthogonal_generators(rows, n))


def _cmd_dim(doc, job):
    rows, n = _rows_and_n(doc)
    xs = orthogonal_generators(rows, n)
    ys = orthogonal_generators(xs.rows(), xs.ambient_dim)
    return {
        "dim_hull": dimension(rows),
        "dim_perp": dimension(xs),
        "dim_perp_perp": dimension(ys),
        "n": xs.ambient_dim,
    }


def _cmd_member(doc, job):
    rows, n = _rows_and_n(doc)
    if "point" not in doc:
        raise S.SchemaError("$", 'missing key "point"')
    x = S.decode_vector(doc["point"], "$.point")
    mode = doc.get("mode", "prevariety")
    if mode == "prevariety":
        return {"member": prevariety_member(rows, x), "mode": mode}
    if mode == "hull":
        gens = rows if rows else GeneratorSet(n if n is not None else len(x), ())
        ok, lam = hull_member(gens, x)
        return {"member": ok, "mode": mode, "witness": None if lam is None else S.encode_vector(lam)}
    raise S.SchemaError("$.mode", 'expected "prevariety" or "hull"')


def _cmd_rank(doc, job):
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise S.SchemaError("$", 'missing key "matrix"')
    m = matrix(S.decode_matrix(doc["matrix"], "$.matrix"))
    r, rs, cs = rank_witness(m)
    out = {"rank": r, "rows": list(rs), "cols": list(cs)}
    out["singular"] = is_tropically_singular(m) if m and len(m) == len(m[0]) else None
    return out


def decision_doc(dec: Decision) -> dict:
    if dec.status == NOT_VARIETY:
        ob = dec.obstruction
        return {
            "status": dec.status,
            "obstruction": {"dim_perp": ob.dim_perp, "dim_perp_perp": ob.dim_perp_perp, "n": ob.n},
        }
    if dec.status == VARIETY:
        return {
            "status": dec.status,
            "certificate": {
                "n": dec.n,
                "xs": [S.encode_vector(v) for v in dec.xs],
                "ys": [S.encode_vector(v) for v in dec.ys],
                "V": [S.encode_pvector(v) for v in dec.V],
                "W": [S.encode_pvector(w) for w in dec.W],
                "basis_P": [S.encode_pvector(v) for v in dec.basis_P],
                "basis_Q": [S.encode_pvector(w) for w in dec.basis_Q],
            },
        }
    return {
        "status": dec.status,
        "budget": {"rounds": dec.budget.rounds, "terms": dec.budget.terms},
        "seed": dec.seed,
    }


def _cmd_decide(doc, job):
    rows, n = _rows_and_n(doc)
    dec = decide_variety(rows, job.budget, job.seed, n=n)
    if dec.status != VARIETY and dec.status != NOT_VARIETY:
        log.warning("inconclusive decision (seed %d); keep the input for escalation", job.seed)
    return decision_doc(dec)


def _cmd_lift(doc, job):
    if not isinstance(doc, dict):
        raise S.SchemaError("$", "expected an object")
    for key in ("liftings", "coefficients", "target"):
        if key not in doc:
            raise S.SchemaError("$", f'missing key "{key}"')
    V = S.decode_pmatrix(doc["liftings"], "$.liftings")
    r = S.decode_vector(doc["coefficients"], "$.coefficients")
    target = S.decode_vector(doc["target"], "$.target")
    return {"lifting": S.encode_pvector(lift_hull_point(V, r, target, job.seed))}


def _cmd_tropspace(doc, job):
    if not isinstance(doc, dict) or "basis" not in doc:
        raise S.SchemaError("$", 'missing key "basis"')
    basis = S.decode_pmatrix(doc["basis"], "$.basis")
    n = doc.get("n")
    pv = plucker_coordinates(basis, n)
    points = S.decode_matrix(doc.get("points", []), "$.points")
    return {
        "d": pv.d,
        "n": pv.n,
        "plucker": [
            {"subset": list(J), "value": S.encode_poly(p), "valuation": S.encode_rat(p.valuation())}
            for J, p in sorted(pv.coords.items())
        ],
        "generators": [S.encode_vector(v) for v in trop_generators_from_plucker(pv)],
        "members": [trop_space_member(pv, x) for x in points],
    }


def _cmd_example(doc, job):
    name = job.flags.get("name")
    if name == "a0":
        n = job.flags.get("n") or 3
        return {"vectors": [S.encode_vector(v) for v in example_a0(n)]}
    if name == "countable":
        spec = CountableFamilySpec(job.flags.get("m") or 8)
        return {
            "eps": [S.encode_rat(e) for e in spec.eps],
            "points": [S.encode_vector(point_pj(j, spec)) for j in range(2, spec.m + 1)],
            "vectors": [S.encode_vector(v) for v in example_countable_family(spec)],
        }
    raise S.SchemaError("--name", f"unknown example {name!r}; choose a0 or countable")


COMMANDS: dict[str, Callable[[Any, JobSpec], dict]] = {
    "orth": _cmd_orth,
    "dorth": _cmd_dorth,
    "member": _cmd_member,
    "rank": _cmd_rank,
    "dim": _cmd_dim,
    "decide": _cmd_decide,
    "lift": _cmd_lift,
    "tropspace": _cmd_tropspace,
    "example": _cmd_example,
}


def _read_input(job: JobSpec) -> str:
    if job.input is None or job.input == "-":
        return sys.stdin.read()
    return Path(job.input).read_text(encoding="utf-8")


def run_command(job: JobSpec) -> tuple[int, str]:
    """Execute one job; returns the exit status and the output text.

    On failure the text is a diagnostic for stderr.
    """
    handler = COMMANDS.get(job.command)
    if handler is None:
        return EXIT_CONTRACT, f"unknown command {job.command!r}"
    try:
        doc = None if job.command == "example" else S.loads(_read_input(job))
        result = handler(doc, job)
    except OSError as exc:
        return EXIT_IO, f"I/O error: {exc}"
    except json.JSONDecodeError as exc:
        return EXIT_PARSE, f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
    except S.SchemaError as exc:
        return EXIT_PARSE, f"invalid input at {exc}"
    except (TropError, OverflowError) as exc:
        return EXIT_CONTRACT, f"{type(exc).__name__}: {exc}"
    return EXIT_OK, S.dumps(result)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropdual", description="Exact tropical linear algebra from JSON files.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--input", help="input JSON file (default: stdin)")
    p.add_argument("--output", help="output JSON file (default: stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-rounds", type=int, default=Budget.rounds)
    p.add_argument("--budget-terms", type=int, default=Budget.terms)
    p.add_argument("--name", help="example name: a0 or countable")
    p.add_argument("--n", type=int, help="dimension for the a0 example")
    p.add_argument("--m", type=int, help="family size for the countable example")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.seed < 0:
        print("--seed must be non-negative", file=sys.stderr)
        return EXIT_CONTRACT
    try:
        budget = Budget(args.budget_rounds, args.budget_terms)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return EXIT_CONTRACT
    job = JobSpec(
        command=args.command,
        input=args.input,
        output=args.output,
        seed=args.seed,
        budget=budget,
        flags={"name": args.name, "n": args.n, "m": args.m},
    )
    status, text = run_command(job)
    if status != EXIT_OK:
        print(text, file=sys.stderr)
        return status
    if job.output:
        try:
            Path(job.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"I/O error: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
