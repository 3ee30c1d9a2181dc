"""Command line: ``cayley demo FILE`` and ``cayley fuzz ...``.

Fuzz reports are line-oriented ``key=value`` text. Every trial draws from its
own generator seeded by (seed, suite, ring, dim, trial), so results do not
depend on ``--jobs`` and a failure line is enough to replay that one trial.
"""

from __future__ import annotations

import argparse
import random
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .action import act, right_subst, t_of
from .exterior import adjugate_exterior, adjugate_identity_holds, det_exterior
from .matrix import (
    LEIBNIZ_CAP,
    Matrix,
    MatrixParseError,
    adjugate_cofactor,
    charpoly,
    det_cofactor,
    det_leibniz,
    monic_charpoly,
    parse_matrix,
    random_matrix,
)
from .poly import poly_degree
from .rings import RingDescriptor, RingError, make_ring, parse_ring
from .theorems import (
    TRACE_STEPS,
    check_cayley_hamilton,
    check_ch_special_case,
    check_generalized,
    example_instance,
    generate_instance,
    random_commuting_pair,
)
from .transport import MatPoly, matpoly_add, matpoly_mul, random_matpoly, to_matpoly, to_polymat

SUITES = ("ch", "general", "oracles", "action", "transport")
MAX_DIM = 6


@dataclass(frozen=True)
class FuzzConfig:
    rings: tuple[RingDescriptor, ...]
    dims: tuple[int, int]
    trials: int
    seed: int
    suite: str = "all"

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        lo, hi = self.dims
        if not 1 <= lo <= hi <= MAX_DIM:
            raise ValueError(f"dims must satisfy 1 <= A <= B <= {MAX_DIM}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.suite not in SUITES + ("all",):
            raise ValueError(f"unknown suite {self.suite!r}")
        if not self.rings:
            raise ValueError("no rings given")

    @property
    def suites(self) -> tuple[str, ...]:
        return SUITES if self.suite == "all" else (self.suite,)


@dataclass
class SuiteResult:
    suite: str
    ring: RingDescriptor
    dim: int
    trials: int = 0
    failures: list[str] = field(default_factory=list)
    millis: int = 0


@dataclass
class FuzzReport:
    results: list[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(not r.failures for r in self.results)

    def lines(self, timing: bool = False) -> list[str]:
        out = []
        for r in self.results:
            line = f"suite={r.suite} ring={r.ring.token} dim={r.dim} trials={r.trials} failures={len(r.failures)}"
            if timing:
                line += f" millis={r.millis}"
            out.append(line)
            out.extend(r.failures)
        out.append(f"verdict={'pass' if self.passed else 'fail'}")
        return out


def trial_rng(seed: int, suite: str, ring: RingDescriptor, dim: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{ring.token}:{dim}:{trial}")


def _enc(*ms: Matrix) -> str:
    return "|".join(";".join(",".join(m.ring.format(x) for x in row) for row in m.rows) for m in ms)


# Each trial returns (ok, check_name, encoded inputs).


def _trial_ch(ring, dim, rng):
    a = random_matrix(ring, dim, rng)
    rep = check_cayley_hamilton(a)
    if not rep.verdict:
        return False, f"trace:{rep.failed_step()}", _enc(a)
    if not rep.factorization_holds:
        return False, "chi=adj(t)t", _enc(a)
    if not right_subst(t_of(a), a).is_zero():
        return False, "t.id", _enc(a)
    chi = rep.chi
    sign = ring.one if dim % 2 == 0 else ring.neg(ring.one)
    if poly_degree(chi) != dim or chi.payload[-1] != sign:
        return False, "charpoly_shape", _enc(a)
    return True, "", _enc(a)


def _trial_oracles(ring, dim, rng):
    a, b = random_matrix(ring, dim, rng), random_matrix(ring, dim, rng)
    inputs = _enc(a, b)
    d = det_cofactor(a)
    if dim <= LEIBNIZ_CAP and d != det_leibniz(a):
        return False, "det_leibniz", inputs
    if d != det_exterior(a):
        return False, "det_exterior", inputs
    adj = adjugate_cofactor(a)
    if adj != adjugate_exterior(a):
        return False, "adjugate_exterior", inputs
    dI = a.identity_like().scale(d.payload)
    if adj @ a != dI or a @ adj != dI:
        return False, "adj_a=a_adj=det", inputs
    if det_cofactor(a @ b) != d * det_cofactor(b):
        return False, "det_multiplicative", inputs
    chi = charpoly(a)
    if monic_charpoly(a) != (-chi if dim % 2 else chi):
        return False, "monic_charpoly", inputs
    if dim >= 2:
        xs = [tuple(ring.random(rng) for _ in range(dim)) for _ in range(dim - 1)]
        y = tuple(ring.random(rng) for _ in range(dim))
        if not adjugate_identity_holds(a, xs, y, adj):
            return False, "adjugate_wedge_identity", inputs
    return True, "", inputs


def _trial_action(ring, dim, rng):
    p = random_matpoly(ring, dim, 3, rng)
    q = random_matpoly(ring, dim, 3, rng)
    g, h, a = (random_matrix(ring, dim, rng) for _ in range(3))
    inputs = _enc(*p.coeffs, *q.coeffs, g, h, a)
    if act(matpoly_mul(p, q), g, a) != act(p, act(q, g, a), a):
        return False, "action_law", inputs
    if act(MatPoly.unit(ring, dim), g, a) != g:
        return False, "unitality", inputs
    if act(matpoly_add(p, q), g, a) != act(p, g, a) + act(q, g, a):
        return False, "linear_in_p", inputs
    if act(p, g + h, a) != act(p, g, a) + act(p, h, a):
        return False, "linear_in_g", inputs
    if act(p, a.identity_like(), a) != right_subst(p, a):
        return False, "right_subst", inputs
    if not act(t_of(a), a.identity_like(), a).is_zero():
        return False, "annihilation", inputs
    return True, "", inputs


def _trial_transport(ring, dim, rng):
    p = random_matpoly(ring, dim, 3, rng)
    q = random_matpoly(ring, dim, 3, rng)
    a = random_matrix(ring, dim, rng)
    inputs = _enc(*p.coeffs, *q.coeffs, a)
    pm, qm = to_polymat(p), to_polymat(q)
    if to_matpoly(pm) != p or to_polymat(to_matpoly(pm)) != pm:
        return False, "round_trip", inputs
    if to_polymat(matpoly_mul(p, q)) != pm @ qm:
        return False, "mul_homomorphism", inputs
    if to_polymat(matpoly_add(p, q)) != pm + qm:
        return False, "add_homomorphism", inputs
    if to_polymat(MatPoly.unit(ring, dim)) != pm.identity_like():
        return False, "unit", inputs
    if det_cofactor(to_polymat(t_of(a))).payload != charpoly(a).payload:
        return False, "det_t=chi", inputs
    return True, "", inputs


def _trial_general(ring, dim, rng, trial):
    n = 2 + trial % 2
    inst = generate_instance(ring, dim, n, rng)
    inputs = _enc(*inst.f, *inst.a)
    if not check_generalized(inst).verdict:
        return False, f"generated_n{n}", inputs
    x, y = random_commuting_pair(ring, dim, rng)
    if not check_generalized(example_instance(x, y)).verdict:
        return False, "example_bX-aY", _enc(x, y)
    c = random_matrix(ring, dim, rng)
    report, _, matches = check_ch_special_case(c)
    if not report.verdict or not matches:
        return False, "ch_special_case", _enc(c)
    return True, "", inputs


def run_trial(suite: str, ring_desc: RingDescriptor, dim: int, seed: int, trial: int) -> tuple[bool, str, str]:
    ring = make_ring(ring_desc)
    rng = trial_rng(seed, suite, ring_desc, dim, trial)
    try:
        if suite == "general":
            return _trial_general(ring, dim, rng, trial)
        return _TRIALS[suite](ring, dim, rng)
    except Exception as exc:  # a crash is a failure of that trial, not of the campaign
        return False, f"exception:{type(exc).__name__}", ""


_TRIALS = {
    "ch": _trial_ch,
    "oracles": _trial_oracles,
    "action": _trial_action,
    "transport": _trial_transport,
}


def failure_line(suite, ring_desc, dim, seed, trial, check, inputs) -> str:
    return (
        f"failure suite={suite} ring={ring_desc.token} dim={dim} seed={seed} "
        f"trial={trial} check={check} inputs={inputs or '-'}"
    )


def _run_job(job):
    return run_trial(*job)


def run_fuzz(config: FuzzConfig, jobs: int = 1) -> FuzzReport:
    results = []
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for suite in config.suites:
            for desc in config.rings:
                for dim in range(config.dims[0], config.dims[1] + 1):
                    start = time.perf_counter()
                    work = [(suite, desc, dim, config.seed, t) for t in range(config.trials)]
                    outcomes = pool.map(_run_job, work, chunksize=16) if pool else map(_run_job, work)
                    res = SuiteResult(suite, desc, dim)
                    for t, (ok, check, inputs) in enumerate(outcomes):
                        res.trials += 1
                        if not ok:
                            res.failures.append(failure_line(suite, desc, dim, config.seed, t, check, inputs))
                    res.millis = int((time.perf_counter() - start) * 1000)
                    results.append(res)
    finally:
        if pool:
            pool.shutdown()
    return FuzzReport(results)


_KV = re.compile(r"(\w+)=(\S+)")


def replay(text: str) -> list[tuple[str, bool, str]]:
    """Re-run every ``failure`` record in ``text``; returns (record, ok, check) triples."""
    out = []
    for line in text.splitlines():
        if not line.startswith("failure "):
            continue
        kv = dict(_KV.findall(line))
        try:
            desc = parse_ring(kv["ring"])
            ok, check, _ = run_trial(kv["suite"], desc, int(kv["dim"]), int(kv["seed"]), int(kv["trial"]))
        except (KeyError, ValueError) as exc:
            raise ValueError(f"malformed failure record {line!r}: {exc}") from None
        out.append((line, ok, check))
    return out


def parse_dims(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text.strip())
    if not m:
        raise ValueError(f"dims must look like A..B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    return lo, hi


def demo_report(a: Matrix) -> list[str]:
    ring = a.ring
    lines = [f"ring = {ring.desc}", f"dim = {a.dim}", "a ="]
    lines += ["  " + s for s in str(a).splitlines()]
    lines.append(f"det_cofactor = {det_cofactor(a)}")
    if a.dim <= LEIBNIZ_CAP:
        lines.append(f"det_leibniz = {det_leibniz(a)}")
    else:
        lines.append(f"det_leibniz = skipped (dim > {LEIBNIZ_CAP})")
    lines.append(f"det_exterior = {det_exterior(a)}")

    def block(name, m):
        lines.append(f"{name} =")
        lines.extend("  " + s for s in str(m).splitlines())

    adj = adjugate_cofactor(a)
    block("adjugate_cofactor", adj)
    block("adjugate_exterior", adjugate_exterior(a))
    block("adj(a) a", adj @ a)
    block("a adj(a)", a @ adj)
    rep = check_cayley_hamilton(a)
    lines.append(f"chi = det(a - X) = {rep.chi}")
    lines.append(f"monic chi = det(X - a) = {monic_charpoly(a)}")
    block("chi(a)", rep.proof_trace[0])
    lines.append("proof trace:")
    for name, value in zip(TRACE_STEPS, rep.proof_trace):
        lines.append(f"  {name}: {'zero' if value.is_zero() else 'NONZERO'}")
    lines.append(f"cayley-hamilton = {'verified' if rep.verdict else 'FAILED'}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cayley", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    demo = sub.add_parser("demo", help="determinants, adjugates and the Cayley-Hamilton trace for a matrix file")
    demo.add_argument("path")

    fuzz = sub.add_parser("fuzz", help="seeded randomized property campaign")
    fuzz.add_argument("--suite", default="all", choices=SUITES + ("all",))
    fuzz.add_argument("--rings", default="Z,Q,Zmod4,Zmod6,Zmod97,DualZ",
                      help="comma-separated ring descriptors, e.g. Z,Zmod6,DualZ")
    fuzz.add_argument("--dims", default="1..4", help="inclusive range A..B within 1..6")
    fuzz.add_argument("--trials", type=int, default=100)
    fuzz.add_argument("--seed", type=int, default=0)
    fuzz.add_argument("--jobs", type=int, default=1, help="worker processes (results do not depend on this)")
    fuzz.add_argument("--timing", action="store_true", help="add millis= to report lines (breaks byte-identity)")
    fuzz.add_argument("--replay", metavar="FILE", help="re-run the failure records in FILE instead")
    return parser


def _cmd_demo(args) -> int:
    try:
        with open(args.path) as fh:
            a = parse_matrix(fh.read())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MatrixParseError as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return 2
    print("\n".join(demo_report(a)))
    return 0


def _cmd_fuzz(args, parser) -> int:
    if args.replay:
        try:
            with open(args.replay) as fh:
                records = replay(fh.read())
        except (OSError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        failed = 0
        for record, ok, check in records:
            print(f"replay {'pass' if ok else 'fail'} check={check or '-'} <- {record}")
            failed += not ok
        print(f"verdict={'fail' if failed else 'pass'}")
        return 1 if failed else 0
    try:
        rings = tuple(parse_ring(r) for r in args.rings.split(",") if r.strip())
        config = FuzzConfig(rings=rings, dims=parse_dims(args.dims), trials=args.trials,
                            seed=args.seed, suite=args.suite)
        if args.jobs < 1:
            raise ValueError("jobs must be >= 1")
    except (RingError, ValueError) as exc:
        parser.error(str(exc))
    report = run_fuzz(config, jobs=args.jobs)
    for line in report.lines(timing=args.timing):
        print(line)
    for res in report.results:
        for failure in res.failures:
            print(failure, file=sys.stderr)
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "demo":
        return _cmd_demo(args)
    return _cmd_fuzz(args, parser)


if __name__ == "__main__":
    sys.exit(main())
