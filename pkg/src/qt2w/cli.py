"""Command-line front end.

    qt2w search Q T M [--lambda L] [--h-index I] [--p-max P] [--mode exhaustive|sampled]
                      [--budget B] [--seed S] [--verify] [--raw] [--json]
    qt2w demo
    qt2w verify FILE [--json]
    qt2w factorizations Q T

Exit status is 1 when a requested verification fails and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Iterable, TextIO

import numpy as np

from .field import FieldTable, gf
from .gfmatrix import format_matrix
from .polyring import format_poly
from .qtform import decompose, factorizations, format_blocks, permute, qt_permutation, weight_matrix
from .search import BudgetExceeded, SearchConfig, complement_hit, find_two_weight_subsets, row_sums
from .simplex import IncompatibleTwist, build_simplex, full_constacyclic_matrix, simplex_length
from .verifier import (
    EnumerationTooLarge,
    LinearCodeInstance,
    build_selected_generator,
    is_projective,
    oracle_weights_equal_row_sums,
    verify_code,
)

EXIT_FAILED = 1
EXIT_INVALID = 2

RECORD_FIELDS = ("q", "k", "m", "p", "w1", "w2", "columns", "lam", "h_index", "verified", "projective", "rank")


@dataclass(frozen=True)
class ResultRecord:
    q: int
    k: int
    m: int
    p: int
    w1: int
    w2: int
    columns: tuple[int, ...]
    lam: int
    h_index: int
    verified: bool
    projective: bool
    rank: int

    def to_json(self) -> str:
        d = asdict(self)
        d["columns"] = list(self.columns)
        return json.dumps(d)

    @classmethod
    def from_json(cls, line: str) -> ResultRecord:
        d = json.loads(line)
        d["columns"] = tuple(d["columns"])
        return cls(**d)

    def to_text(self) -> str:
        cells = []
        for name in RECORD_FIELDS:
            v = getattr(self, name)
            if name == "columns":
                v = ",".join(map(str, v))
            elif isinstance(v, bool):
                v = "yes" if v else "no"
            cells.append(str(v))
        return " ".join(cells)


def text_header() -> str:
    return " ".join(RECORD_FIELDS)


def parse_text_records(text: str) -> list[ResultRecord]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#") or line == text_header():
            continue
        cells = dict(zip(RECORD_FIELDS, line.split()))
        out.append(
            ResultRecord(
                **{k: int(cells[k]) for k in ("q", "k", "m", "p", "w1", "w2", "lam", "h_index", "rank")},
                columns=tuple(int(c) for c in cells["columns"].split(",")),
                verified=cells["verified"] == "yes",
                projective=cells["projective"] == "yes",
            )
        )
    return out


def parse_matrix_file(text: str) -> tuple[FieldTable, np.ndarray]:
    """``q n k`` on the first line, then k rows of n elements (a/b allowed for GF(4))."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        q, n, k = (int(v) for v in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad header line {lines[0]!r}; expected 'q n k'") from exc
    field = gf(q)
    rows = lines[1:]
    if len(rows) != k:
        raise ValueError(f"expected {k} rows, found {len(rows)}")
    M = np.zeros((k, n), dtype=np.int64)
    for i, ln in enumerate(rows):
        cells = ln.split()
        if len(cells) != n:
            raise ValueError(f"row {i + 1} has {len(cells)} entries, expected {n}")
        M[i] = [field.parse_element(c) for c in cells]
    return field, M


def _lambda_arg(field: FieldTable, token: str | None) -> int | None:
    return None if token is None else field.parse_element(token)


def run_search(args, out: TextIO) -> int:
    q, t, m = args.q, args.t, args.m
    n = simplex_length(q, t)
    if n % m:
        raise ValueError(f"m={m} does not divide n={n}")
    if args.mode == "sampled" and args.seed is None:
        raise ValueError("--mode sampled requires --seed")
    field = gf(q)
    code = build_simplex(q, t, _lambda_arg(field, args.lam), args.h_index)
    dec = decompose(code, m, n // m)
    W = weight_matrix(dec)
    cfg = SearchConfig(
        p_max=args.p_max,
        mode=args.mode,
        budget=args.budget,
        rng_seed=args.seed,
        canonical=not args.raw,
    )
    result = find_two_weight_subsets(W, cfg)
    status = 0
    records = []
    for hit in result:
        G = build_selected_generator(dec, hit.columns)
        verified = False
        if args.verify:
            v = verify_code(G)
            verified = v.weights == (hit.w1, hit.w2) and oracle_weights_equal_row_sums(dec, hit.columns, W)
            if not verified:
                status = EXIT_FAILED
        if G.k != t:
            print(f"warning: rank drop to {G.k} for columns {hit.columns}", file=sys.stderr)
        records.append(
            ResultRecord(q, G.k, m, hit.p, hit.w1, hit.w2, hit.columns, code.lam, code.h_index, verified, is_projective(G), G.k)
        )
    records.sort(key=lambda rec: (rec.p, rec.w1, rec.w2, rec.columns))
    note = f"q={q} t={t} n={n} m={m} r={dec.r} lambda={field.format_element(code.lam)} h_index={code.h_index} h={format_poly(code.h)}"
    if dec.trivial:
        note += " (trivial factorization)"
    if args.json:
        for rec in records:
            print(rec.to_json(), file=out)
    else:
        print("# " + note, file=out)
        print("# W first row: " + " ".join(map(str, W.d)), file=out)
        print(text_header(), file=out)
        for rec in records:
            print(rec.to_text(), file=out)
    if result.truncated:
        msg = f"sampled search is partial: {result.examined} subsets examined"
        if not args.json:
            print("# truncated: " + msg, file=out)
        print("warning: " + msg, file=sys.stderr)
    return status


def run_verify(args, out: TextIO) -> int:
    with open(args.file) as fh:
        field, M = parse_matrix_file(fh.read())
    code = LinearCodeInstance.from_matrix(M, field)
    v = verify_code(code)
    if args.json:
        print(
            json.dumps(
                {
                    "q": field.q,
                    "n": code.n,
                    "rank": v.rank,
                    "distribution": {str(w): c for w, c in v.distribution.items()},
                    "two_weight": list(v.weights) if v.weights else None,
                    "projective": v.projective,
                }
            ),
            file=out,
        )
    else:
        dist = ", ".join(f"{w}:{c}" for w, c in sorted(v.distribution.items()))
        verdict = f"two-weight ({v.weights[0]},{v.weights[1]})" if v.weights else "not two-weight"
        proj = "projective" if v.projective else "not projective"
        print(f"weights {{{dist}}}", file=out)
        print(f"{verdict}, {proj}, rank {v.rank}", file=out)
    return 0 if v.weights else EXIT_FAILED


def run_factorizations(args, out: TextIO) -> int:
    n = simplex_length(args.q, args.t)
    for m, r in factorizations(n):
        flag = "  (trivial)" if m == 1 or r == 1 else ""
        print(f"n={n} m={m} r={r}{flag}", file=out)
    return 0


def demo_report() -> tuple[str, bool]:
    """GF(4) worked example: lambda = b, h_index = 2, n = 21 = 3 * 7."""
    lines: list[str] = []
    say = lines.append
    code = build_simplex(4, 3, lam=3, h_index=2)
    f = code.field
    say(f"GF(4) = {{0, 1, a, b}}, b = 1 + a; lambda = {f.format_element(code.lam)}")
    say(f"h(x) = {format_poly(code.h)}  (primitive, index {code.h_index})")
    say(f"c(x) = g(x) = (x^21 - lambda) / h(x) = {format_poly(code.g)}")
    say(f"n = {code.n}, k = {code.k}, d = {code.weight}")
    say("")
    say("first rows of the consta-cyclic matrix C:")
    C = full_constacyclic_matrix(code)
    say(format_matrix(C[:3], f))
    rows, _ = qt_permutation(code.n, 3, 7)
    say("")
    say("row/column order: " + " ".join(map(str, rows)))
    dec = decompose(code, 3, 7)
    say("")
    say("permuted matrix A (7 x 7 blocks of order 3):")
    say(format_blocks(permute(C, 3, 7), f, 3))
    say("")
    for i, a in enumerate(dec.polys, 1):
        say(f"a{i}(x) = {format_poly(a)}")
    W = weight_matrix(dec)
    say("")
    say("W =")
    for row in W.matrix:
        say("  " + " ".join(map(str, row)))
    ok = True
    hit = next(h for h in find_two_weight_subsets(W, SearchConfig(p_max=3)) if h.columns == (1, 2, 4))
    for h in (hit, complement_hit(hit, W)):
        say("")
        say(f"columns {','.join(map(str, h.columns))}: row sums {' '.join(map(str, row_sums(W, h.columns)))}")
        G = build_selected_generator(dec, h.columns)
        say(f"G = ({'; '.join(f'a{c}(x)' for c in h.columns)})")
        say(format_blocks(G.rows, f, 3))
        v = verify_code(G)
        total = sum(v.distribution.values())
        dist = ", ".join(f"{w}:{c}" for w, c in sorted(v.distribution.items()))
        say(f"verifier: {total} codewords, weights {{{dist}}}, rank {v.rank}, projective {v.projective}")
        agrees = v.weights == (h.w1, h.w2)
        ok &= agrees
        say(f"{h.params()} two-weight code: {'confirmed' if agrees else 'NOT CONFIRMED'}")
    return "\n".join(lines), ok


def run_demo(args, out: TextIO) -> int:
    text, ok = demo_report()
    print(text, file=out)
    return 0 if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qt2w", description="Quasi-twisted two-weight codes from consta-cyclic simplex codes")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("search", help="search one factorization n = m*r for two-weight codes")
    s.add_argument("q", type=int)
    s.add_argument("t", type=int, help="dimension of the simplex code")
    s.add_argument("m", type=int, help="twistulant block order")
    s.add_argument("--lambda", dest="lam", help="twist element (canonical value; a/b in GF(4))")
    s.add_argument("--h-index", type=int, help="primitive polynomial index (default: first compatible)")
    s.add_argument("--p-max", type=int, help="largest subset size examined (default r // 2)")
    s.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    s.add_argument("--budget", type=int, default=10_000_000, help="maximum number of subsets examined")
    s.add_argument("--seed", type=int, help="RNG seed (required for sampled mode)")
    s.add_argument("--verify", action="store_true", help="confirm every hit by codeword enumeration")
    s.add_argument("--raw", action="store_true", help="keep rotations of the same subset")
    s.add_argument("--json", action="store_true", help="line-delimited JSON records")
    s.set_defaults(func=run_search)

    d = sub.add_parser("demo", help="walk through the GF(4), n = 21 example")
    d.set_defaults(func=run_demo)

    v = sub.add_parser("verify", help="weight distribution of a generator matrix file")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=run_verify)

    fz = sub.add_parser("factorizations", help="list all m*r splits of n = (q^t - 1)/(q - 1)")
    fz.add_argument("q", type=int)
    fz.add_argument("t", type=int)
    fz.set_defaults(func=run_factorizations)
    return ap


def main(argv: Iterable[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(None if argv is None else list(argv))
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except (ValueError, IncompatibleTwist, BudgetExceeded, EnumerationTooLarge, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
