"""Command line front end: ``doubleflag {count,orbits,check}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, fields

from .ci import check_commutativity, is_sigma_stable, sigma_on_orbit
from .combinat import Partition
from .nilpotent import enumerate_syd, is_ci_diagram, sigma_on_syd
from .oracle import (
    DEFAULT_BOUND,
    DEFAULT_TRIALS,
    ambient_dimension,
    conormal_fiber_basis,
    orbit_dimension,
    phi_oracle_aiii,
)
from .orbits import CanonicalData, count_orbits, enumerate_orbit_reps
from .steinberg import phi_theta_comb

DEFAULT_MAX_N = 5

# known diagram counts for small n
KNOWN_SYD_COUNTS = {2: (10, 8)}


@dataclass
class OrbitRecord:
    n: int
    tau1: str
    tau2: str
    rpq: list
    phi_theta: list
    phi_theta_oracle: list
    phi_minus_theta: list
    ci: bool
    orbit_dim: int
    fiber_dim: int
    flagged: bool = False

    def check(self) -> bool:
        return (
            self.phi_theta == self.phi_theta_oracle
            and self.orbit_dim + self.fiber_dim == ambient_dimension(self.n)
        )


FIELDS = [f.name for f in fields(OrbitRecord)]
_JSON_CELLS = {"rpq", "phi_theta", "phi_theta_oracle", "phi_minus_theta"}


def _pair(p) -> list:
    return [list(Partition(x)) for x in p]


def build_record(data: CanonicalData, seed=0, trials=DEFAULT_TRIALS, bound=DEFAULT_BOUND) -> OrbitRecord:
    w = data.omega()
    oracle_theta, syd = phi_oracle_aiii(w, seed, trials, bound)
    rec = OrbitRecord(
        n=w.n,
        tau1=str(w.tau1),
        tau2=str(w.tau2),
        rpq=list(data.rpq),
        phi_theta=_pair(phi_theta_comb(w)),
        phi_theta_oracle=_pair(oracle_theta),
        phi_minus_theta=syd.to_strings(),
        ci=is_sigma_stable(w),
        orbit_dim=orbit_dimension(w),
        fiber_dim=conormal_fiber_basis(w).dim,
    )
    rec.flagged = not rec.check()
    return rec


def sorted_reps(n: int) -> list[CanonicalData]:
    return sorted(enumerate_orbit_reps(n), key=CanonicalData.sort_key)


def records_to_json(n: int, seed, records: list[OrbitRecord]) -> str:
    doc = {"n": n, "seed": seed, "records": [asdict(r) for r in records]}
    return json.dumps(doc, indent=2) + "\n"


def records_to_csv(records: list[OrbitRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        row = asdict(r)
        for k in _JSON_CELLS:
            row[k] = json.dumps(row[k], separators=(",", ":"))
        row["ci"] = str(r.ci).lower()
        row["flagged"] = str(r.flagged).lower()
        writer.writerow(row)
    return buf.getvalue()


def records_from_csv(text: str) -> list[OrbitRecord]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        for k in _JSON_CELLS:
            row[k] = json.loads(row[k])
        for k in ("n", "orbit_dim", "fiber_dim"):
            row[k] = int(row[k])
        for k in ("ci", "flagged"):
            row[k] = row[k] == "true"
        out.append(OrbitRecord(**row))
    return out


def count_table(n: int) -> dict:
    reps = list(enumerate_orbit_reps(n))
    syd = enumerate_syd(n)
    return {
        "n": n,
        "aiii": count_orbits(n),
        "aiii_enumerated": len(reps),
        "ci": sum(1 for d in reps if is_sigma_stable(d.omega())),
        "syd": len(syd),
        "syd_ci": sum(1 for d in syd if is_ci_diagram(d)),
    }


def suite_counts(n: int, **_) -> dict:
    t = count_table(n)
    syd = enumerate_syd(n)
    sigma_fixed = sum(1 for d in syd if sigma_on_syd(d) == d)
    checks = {
        "formula_vs_enumeration": t["aiii"] == t["aiii_enumerated"],
        "syd_ci_is_sigma_fixed": sigma_fixed == t["syd_ci"],
    }
    if n in KNOWN_SYD_COUNTS:
        checks["syd_counts_match_known"] = (t["syd"], t["syd_ci"]) == KNOWN_SYD_COUNTS[n]
    return {"passed": all(checks.values()), "checks": checks, "table": t}


def suite_rs(n: int, seed=0, trials=DEFAULT_TRIALS, bound=DEFAULT_BOUND) -> dict:
    mismatches = []
    reps = sorted_reps(n)
    for d in reps:
        w = d.omega()
        comb = phi_theta_comb(w)
        first = phi_oracle_aiii(w, seed, trials, bound)[0]
        second = phi_oracle_aiii(w, seed + 1, trials, bound)[0]
        if not comb == first == second:
            mismatches.append(
                {"tau1": str(w.tau1), "tau2": str(w.tau2), "comb": _pair(comb),
                 "oracle": _pair(first), "oracle_second_seed": _pair(second)}
            )
    return {"passed": not mismatches, "classes": len(reps), "mismatches": mismatches}


def suite_sigma(n: int, **_) -> dict:
    bad = []
    for d in enumerate_orbit_reps(n):
        w = d.omega()
        if (sigma_on_orbit(w) == w) != is_sigma_stable(w):
            bad.append({"tau1": str(w.tau1), "tau2": str(w.tau2)})
    return {"passed": not bad, "failures": bad}


def suite_conjecture(n: int, seed=0, trials=DEFAULT_TRIALS, bound=DEFAULT_BOUND) -> dict:
    rep = check_commutativity(n, seed, trials, bound)
    return {"passed": rep.ok, **rep.to_json()}


SUITES = {
    "counts": suite_counts,
    "rs": suite_rs,
    "sigma": suite_sigma,
    "conjecture": suite_conjecture,
}


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_count(args) -> int:
    t = count_table(args.n)
    if args.format == "json":
        _emit(json.dumps(t, indent=2) + "\n", args.out)
    else:
        lines = [
            f"n        {t['n']}",
            f"AIII     {t['aiii']}",
            f"CI       {t['ci']}",
            f"SYD      {t['syd']}",
            f"SYD_CI   {t['syd_ci']}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_orbits(args) -> int:
    reps = sorted_reps(args.n)
    if args.ci:
        reps = [d for d in reps if is_sigma_stable(d.omega())]
    records = [build_record(d, args.seed, args.trials, args.bound) for d in reps]
    if args.format == "csv":
        _emit(records_to_csv(records), args.out)
    else:
        _emit(records_to_json(args.n, args.seed, records), args.out)
    return 1 if any(r.flagged for r in records) else 0


def cmd_check(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = {}
    for name in names:
        results[name] = SUITES[name](args.n, seed=args.seed, trials=args.trials, bound=args.bound)
    ok = all(r["passed"] for r in results.values())
    if args.json:
        _emit(json.dumps({"n": args.n, "seed": args.seed, "passed": ok, "suites": results}, indent=2) + "\n", args.out)
    else:
        lines = [f"{name:<11} {'PASS' if r['passed'] else 'FAIL'}" for name, r in results.items()]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doubleflag",
        description="K-orbits of GL_2n/P_(n,n) x GL_n/B+ x GL_n/B- and their Steinberg maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seeded=True):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
        p.add_argument("--out", default=None, help="write output to FILE")
        if seeded:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
            p.add_argument("--bound", type=int, default=DEFAULT_BOUND)

    p = sub.add_parser("count", help="orbit and diagram counts")
    common(p, seeded=False)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("orbits", help="one record per orbit")
    common(p)
    p.add_argument("--ci", action="store_true", help="only sigma-stable classes")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("check", help="run a verification suite")
    common(p)
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not 1 <= args.n <= args.max_n:
        parser.error(f"--n must lie in 1..{args.max_n}")
    if getattr(args, "trials", 1) < 1 or getattr(args, "bound", 1) < 1:
        parser.error("--trials and --bound must be positive")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
