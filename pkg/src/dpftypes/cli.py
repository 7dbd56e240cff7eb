"""Command line front end: classify, scan, theorem1, lattice.

Exit codes: 0 success, 2 degenerate radicand, 3 computational failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields

from .cyclotomic import REFERENCE_TWO_SPLIT_PRIMES, conductor_p3, split_in_cyclotomic, two_split_primes
from .coarse_types import SPLIT_PAIRS, type_lattice
from .errors import ComputationFailure, DegenerateRadicand, InvalidPrime
from .radicand import SUPPORTED_PRIMES, factorize, normalize

EXIT_OK, EXIT_DEGENERATE, EXIT_FAILURE = 0, 2, 3

HEADER = ("d", "p", "a", "b", "species", "disc", "conductor", "h_L", "three_rank",
          "U", "P", "A", "R", "type", "theorem1", "notes")
_INT_FIELDS = {"d", "p", "a", "b", "disc", "conductor", "h_L", "three_rank", "U", "P", "A", "R"}


@dataclass
class ClassificationRecord:
    d: int
    p: int
    a: int | None = None
    b: int | None = None
    species: str | None = None
    disc: int | None = None
    conductor: int | None = None
    h_L: int | None = None
    three_rank: int | None = None
    U: int | None = None
    P: int | None = None
    A: int | None = None
    R: int | None = None
    type: str | None = None
    theorem1: bool = False
    notes: str = ""

    def to_row(self) -> list[str]:
        out = []
        for k in HEADER:
            v = getattr(self, k)
            out.append("" if v is None else ("true" if v is True else "false" if v is False else str(v)))
        return out

    @classmethod
    def from_row(cls, row: dict) -> "ClassificationRecord":
        kw = {}
        for k in HEADER:
            v = row[k]
            if k == "theorem1":
                kw[k] = v == "true"
            elif k in _INT_FIELDS:
                kw[k] = None if v == "" else int(v)
            elif k == "notes":
                kw[k] = v
            else:
                kw[k] = None if v == "" else v
        return cls(**kw)

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in HEADER}

    @classmethod
    def from_json(cls, obj: dict) -> "ClassificationRecord":
        return cls(**{k: obj[k] for k in HEADER})


assert tuple(f.name for f in fields(ClassificationRecord)) == HEADER


def to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(HEADER)
    for r in records:
        w.writerow(r.to_row())
    return buf.getvalue()


def from_csv(text: str) -> list[ClassificationRecord]:
    return [ClassificationRecord.from_row(row) for row in csv.DictReader(io.StringIO(text))]


def to_json(records) -> str:
    return json.dumps([r.to_json() for r in records], ensure_ascii=False, indent=1)


def from_json(text: str) -> list[ClassificationRecord]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [ClassificationRecord.from_json(o) for o in data]


def _split_note(ell: int, p: int) -> str:
    s = split_in_cyclotomic(ell, p)
    return ":".join(["SPLIT", str(ell), f"e{s.e}f{s.f}g{s.g}", *s.flags()])


def _two_split_flag(d: int, p: int) -> bool:
    return p == 7 and d % 7 in (2, 4) and factorize(d) == {d: 1}


def build_record(d_raw: int, p: int) -> ClassificationRecord:
    """Classify one radicand.  Raises DegenerateRadicand; computational
    failures are caught and reported in the notes (see ``failure_code``)."""
    r = normalize(d_raw, p)
    rec = ClassificationRecord(d=r.stripped, p=p)
    notes = []
    if not r.is_canonical:
        notes.append(f"NON_CANONICAL:{r.d}")
    if p != 3:
        rec.theorem1 = _two_split_flag(r.stripped, p)
        for ell in sorted(set(factorize(r.d)) | {p}):
            if ell != p:
                notes.append(_split_note(ell, p))
        notes.append("H_DIVISIBILITY_UNVERIFIED")
        rec.notes = ";".join(notes)
        return rec
    rec.a, rec.b, rec.species = r.a, r.b, r.species.value
    cond = conductor_p3(r)
    rec.conductor = cond.value
    for ell, _ in cond.prime_divisors:
        if ell != 3:
            notes.append(_split_note(ell, 3))
    # the field arithmetic pulls in sympy; only import it when needed
    from .class_group import class_group
    from .cubic_field import build_field
    from .dpf_classifier import classify_field

    try:
        F = build_field(r)
        rec.disc = F.discriminant
        cg = class_group(F)
        rec.h_L, rec.three_rank = cg.h, cg.three_rank
        c = classify_field(F)
        inv = c.invariants
        rec.U, rec.P, rec.A, rec.R = inv.U, inv.P, inv.A, inv.R
        rec.type = c.coarse.label
    except ComputationFailure as exc:
        notes.append(exc.code)
    rec.notes = ";".join(notes)
    return rec


def failure_code(rec: ClassificationRecord) -> int:
    codes = {c.code for c in ComputationFailure.__subclasses__()} | {ComputationFailure.code}
    return EXIT_FAILURE if any(n in codes for n in rec.notes.split(";")) else EXIT_OK


def _scan_one(args):
    d, p = args
    try:
        r = normalize(d, p)
    except DegenerateRadicand:
        return d, None, "DEGENERATE"
    if r.stripped != d:
        return d, None, "NOT_POWER_FREE"
    return d, build_record(d, p), None


def scan(p: int, dmin: int, dmax: int, jobs: int = 1) -> list[ClassificationRecord]:
    """Records for every p-th-power-free d in [dmin, dmax], ordered by d."""
    return [rec for _, rec, _ in scan_with_skips(p, dmin, dmax, jobs) if rec is not None]


def scan_with_skips(p: int, dmin: int, dmax: int, jobs: int = 1):
    if dmin < 2 or dmax < dmin:
        raise ValueError("need 2 <= dmin <= dmax")
    work = [(d, p) for d in range(dmin, dmax + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_scan_one, work, chunksize=1))
    return [_scan_one(w) for w in work]


def _text(rec: ClassificationRecord) -> str:
    width = max(len(k) for k in HEADER)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in zip(HEADER, rec.to_row()))


# --------------------------------------------------------------------- commands
def cmd_classify(args, out) -> int:
    try:
        rec = build_record(args.d, args.p)
    except DegenerateRadicand as exc:
        print(f"DEGENERATE: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    if args.format == "json":
        out.write(json.dumps(rec.to_json(), ensure_ascii=False) + "\n")
    elif args.format == "csv":
        out.write(to_csv([rec]))
    else:
        out.write(_text(rec) + "\n")
    return failure_code(rec)


def cmd_scan(args, out) -> int:
    rows = scan_with_skips(args.p, args.dmin, args.dmax, args.jobs)
    for d, rec, skip in rows:
        if skip:
            print(f"SKIP:{d}:{skip}", file=sys.stderr)
    recs = [rec for _, rec, _ in rows if rec is not None]
    out.write(to_json(recs) + "\n" if args.format == "json" else to_csv(recs))
    return EXIT_OK


def cmd_theorem1(args, out) -> int:
    found = two_split_primes(args.limit)
    out.write(" ".join(map(str, found)) + "\n")
    if args.limit == 200:
        ok = tuple(found) == REFERENCE_TWO_SPLIT_PRIMES
        out.write(("MATCH" if ok else "MISMATCH") + f" {len(found)} primes\n")
        return EXIT_OK if ok else 1
    return EXIT_OK


def cmd_lattice(args, out) -> int:
    types = type_lattice(args.p)
    if args.format == "json":
        out.write(json.dumps([asdict(t) | {"r": t.r} for t in types], ensure_ascii=False) + "\n")
        return EXIT_OK
    if args.format == "csv":
        w = csv.writer(out)
        w.writerow(("p", "label", "U", "A", "R", "filled"))
        for t in types:
            w.writerow((t.p, t.label, t.u, t.a, t.r, "true" if t.fine_marker else "false"))
        return EXIT_OK
    out.write(f"p={args.p}: {len(types)} types\n")
    for t in types:
        out.write(f"  {t.label}  U={t.u} A={t.a} R={t.r}  {'●' if t.fine_marker else '○'}\n")
    for pair in SPLIT_PAIRS.get(args.p, ()):
        out.write(f"  unresolved pair: {'/'.join(pair)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dpftypes", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    primes = list(SUPPORTED_PRIMES)

    c = sub.add_parser("classify", help="invariants and coarse type of one radicand")
    c.add_argument("--p", type=int, default=3, choices=primes)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--format", choices=("text", "csv", "json"), default="text")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("scan", help="classify every power-free radicand in a range")
    s.add_argument("--p", type=int, default=3, choices=primes)
    s.add_argument("--dmin", type=int, default=2)
    s.add_argument("--dmax", type=int, required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_scan)

    t = sub.add_parser("theorem1", help="prime radicands D = 2, 4 (mod 7) below a limit")
    t.add_argument("--limit", type=int, default=200)
    t.set_defaults(func=cmd_theorem1)

    lat = sub.add_parser("lattice", help="coarse type table for p = 3, 5, 7")
    lat.add_argument("--p", type=int, required=True, choices=primes)
    lat.add_argument("--format", choices=("text", "csv", "json"), default="text")
    lat.set_defaults(func=cmd_lattice)
    return ap


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except DegenerateRadicand as exc:
        print(f"DEGENERATE: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (InvalidPrime, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ComputationFailure as exc:
        print(exc.code, file=sys.stderr)
        return EXIT_FAILURE


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
