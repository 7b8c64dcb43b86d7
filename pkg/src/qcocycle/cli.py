"""Command-line entry point: ``qcocycle <group> <command> ...``.

Exit status 0 means the computation ran.  Obstruction verdicts are part of
the output, never the exit status; ``verify`` commands exit 1 when the
object fails its checks, and usage or input errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import concordance as conc
from .cocycle import (
    CapExceeded,
    Cocycle2,
    Cocycle3,
    enumerate_2cocycles,
    mochizuki_cocycle,
    q6_appendix_cocycle,
    verify_2cocycle,
    verify_3cocycle,
)
from .diagram import BraidSyntaxError, enumerate_colorings, parse_braid, parse_knot
from .formats import (
    FormatError,
    dumps_cocycle,
    dumps_quandle,
    parse_quandle_text,
    read_cocycle,
    read_quandle,
)
from .invariant import (
    WeightMultiset,
    omega_family,
    phi_invariant,
    residue_support,
    twist_spun_reference,
)
from .quandle import FiniteQuandle, builtin_quandle, quandle_type, verify_quandle_axioms

SCHEMA_VERSION = 1
JOBS_ENV = "QCOCYCLE_JOBS"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    json: bool = False
    jobs: int = 1
    cap: int = 10_000


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{JOBS_ENV}={raw!r} is not an integer") from None


def load_quandle(spec: str) -> FiniteQuandle:
    try:
        return builtin_quandle(spec)
    except KeyError:
        pass
    if not Path(spec).is_file():
        raise UsageError(f"no builtin quandle or file named {spec!r}")
    return read_quandle(spec)


def load_cocycle(spec: str, X: FiniteQuandle | None) -> Cocycle2 | Cocycle3:
    if spec == "q6z4":
        return q6_appendix_cocycle()
    if spec.startswith("mochizuki:"):
        return mochizuki_cocycle(int(spec.split(":", 1)[1]))
    if spec.startswith("zero:"):
        if X is None:
            raise UsageError("zero cocycle needs --quandle")
        return Cocycle2.zero(X, int(spec.split(":", 1)[1]))
    if X is None:
        raise UsageError("a cocycle file needs --quandle")
    if not Path(spec).is_file():
        raise UsageError(f"no builtin cocycle or file named {spec!r}")
    return read_cocycle(spec, X)


def _knot(args):
    if getattr(args, "braid", None):
        return parse_braid(args.braid)
    if getattr(args, "knot", None):
        return parse_knot(args.knot)
    raise UsageError("give --braid or --knot")


def _multiset_json(M: WeightMultiset) -> dict:
    return {
        "modulus": M.modulus,
        "multiset": {str(v): c for v, c in M.items()},
        "size": M.size,
    }


def _emit(cfg: RunConfig, out, text: str, payload: dict) -> None:
    if cfg.json:
        doc = {"schema_version": SCHEMA_VERSION, "command": cfg.command}
        doc.update(payload)
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


# --- quandle -----------------------------------------------------------------

def cmd_quandle_verify(args, cfg, out) -> int:
    if args.file:
        table, _ = parse_quandle_text(Path(args.file).read_text())
    elif args.builtin:
        table = load_quandle(args.builtin).table
    else:
        raise UsageError("give --file or --builtin")
    rep = verify_quandle_axioms(table)
    axioms = [rep.idempotency, rep.right_invertibility, rep.self_distributivity]
    text = "axioms: " + " ".join("pass" if r.passed else "fail" for r in axioms)
    for name, r in zip(("idempotency", "right-invertibility", "self-distributivity"), axioms):
        if not r.passed:
            text += f"\n{name} witness: {' '.join(map(str, r.witness))}"
    payload = {
        "order": len(table),
        "axioms": {
            name: {"pass": r.passed, "witness": None if r.witness is None else list(r.witness)}
            for name, r in zip(
                ("idempotency", "right_invertibility", "self_distributivity"), axioms
            )
        },
    }
    _emit(cfg, out, text, payload)
    return 0 if rep.ok else 1


def cmd_quandle_show(args, cfg, out) -> int:
    X = load_quandle(args.name)
    text = dumps_quandle(X)
    if args.out:
        Path(args.out).write_text(text)
        text = f"wrote {args.out}"
    _emit(cfg, out, text.rstrip("\n"), {"order": X.order, "table": [list(r) for r in X.table]})
    return 0


def cmd_quandle_type(args, cfg, out) -> int:
    X = load_quandle(args.quandle)
    s = quandle_type(X)
    _emit(cfg, out, f"type: {s}", {"type": s})
    return 0


# --- cocycle -----------------------------------------------------------------

def cmd_cocycle_verify(args, cfg, out) -> int:
    X = load_quandle(args.quandle) if args.quandle else None
    c = load_cocycle(args.cocycle, X)
    rep = verify_2cocycle(c) if isinstance(c, Cocycle2) else verify_3cocycle(c)
    payload = {
        "degree": 2 if isinstance(c, Cocycle2) else 3,
        "modulus": c.modulus,
        "pass": rep.ok,
        "degenerate_witness": rep.degenerate_witness and list(rep.degenerate_witness),
        "identity_witness": None
        if rep.identity_witness is None
        else {
            "tuple": list(rep.identity_witness[0]),
            "lhs": rep.identity_witness[1],
            "rhs": rep.identity_witness[2],
        },
    }
    _emit(cfg, out, str(rep), payload)
    return 0 if rep.ok else 1


def cmd_cocycle_gen(args, cfg, out) -> int:
    if args.kind == "mochizuki":
        if args.p is None:
            raise UsageError("mochizuki needs --p")
        c = mochizuki_cocycle(args.p)
    else:
        c = q6_appendix_cocycle()
    text = dumps_cocycle(c)
    if args.out:
        Path(args.out).write_text(text)
        if args.quandle_out:
            Path(args.quandle_out).write_text(dumps_quandle(c.quandle))
        text = f"wrote {args.out}"
    _emit(cfg, out, text.rstrip("\n"), {"cocycle": dumps_cocycle(c)})
    return 0


def cmd_cocycle_enumerate(args, cfg, out) -> int:
    X = load_quandle(args.quandle)
    space = enumerate_2cocycles(X, args.modulus, max_order=args.max_order)
    orders = [g.order for g in space.solutions.generators]
    lines = [f"cocycles: {space.count}", "generator orders: " + " ".join(map(str, orders))]
    listed = []
    if args.list:
        try:
            for c in space.iter_cocycles(cap=cfg.cap):
                listed.append(dumps_cocycle(c))
        except CapExceeded as e:
            raise UsageError(str(e)) from None
        lines.extend(s.rstrip("\n") for s in listed)
    payload = {
        "count": space.count,
        "modulus": args.modulus,
        "generators": [
            {"order": o, "cocycle": dumps_cocycle(c)} for c, o in space.generators()
        ],
    }
    if args.list:
        payload["cocycles"] = listed
    _emit(cfg, out, "\n".join(lines), payload)
    return 0


# --- knot / invariant ----------------------------------------------------------

def cmd_knot_colorings(args, cfg, out) -> int:
    K = _knot(args)
    X = load_quandle(args.quandle)
    cols = enumerate_colorings(K, X, workers=cfg.jobs)
    lines = [f"colorings: {len(cols)}"]
    if args.list:
        lines += [" ".join(X.label(a) for a in c.top) for c in cols]
    payload = {"braid": str(K), "count": len(cols)}
    if args.list:
        payload["colorings"] = [list(c.top) for c in cols]
    _emit(cfg, out, "\n".join(lines), payload)
    return 0


def _phi_inputs(args):
    K = _knot(args)
    X = load_quandle(args.quandle)
    c = load_cocycle(args.cocycle, X)
    if not isinstance(c, Cocycle2):
        raise UsageError("the state sum over a knot diagram needs a 2-cocycle")
    if c.quandle != X:
        raise UsageError("cocycle and quandle do not match")
    return K, X, c


def cmd_invariant_phi(args, cfg, out) -> int:
    K, X, c = _phi_inputs(args)
    M = phi_invariant(K, X, c, workers=cfg.jobs)
    _emit(cfg, out, str(M), {"braid": str(K), **_multiset_json(M)})
    return 0


def cmd_invariant_omega(args, cfg, out) -> int:
    K, X, c = _phi_inputs(args)
    om = omega_family(K, X, c, args.r)
    lines = [f"k={k}: {m}" for k, m in enumerate(om.members)]
    payload = {
        "braid": str(K),
        "r": args.r,
        "modulus": om.modulus,
        "infinite_multiplicity": om.infinite_multiplicity,
        "members": [_multiset_json(m) for m in om.members],
    }
    _emit(cfg, out, "\n".join(lines), payload)
    return 0


def cmd_invariant_twistspun(args, cfg, out) -> int:
    M = twist_spun_reference(args.q, p=args.p)
    payload = _multiset_json(M)
    payload["reference_data"] = True
    text = str(M)
    if args.p is None or args.p == args.q:
        payload["support"] = sorted(residue_support(args.q))
    _emit(cfg, out, text, payload)
    return 0


# --- concordance -----------------------------------------------------------------

def _verdict_text(verdicts) -> str:
    return "\n".join(str(v) for v in verdicts)


def _emit_verdicts(cfg, out, verdicts) -> None:
    payload = {"verdicts": [v.to_json() for v in verdicts]}
    if len(verdicts) == 1:
        payload = verdicts[0].to_json()
    _emit(cfg, out, _verdict_text(verdicts), payload)


def cmd_conc_thm11(args, cfg, out) -> int:
    a = WeightMultiset.parse(args.modulus, args.phi1)
    b = WeightMultiset.parse(args.modulus, args.phi0)
    _emit_verdicts(cfg, out, [conc.theorem11_check(a, b)])
    return 0


def cmd_conc_thm12(args, cfg, out) -> int:
    X = load_quandle(args.quandle)
    c = load_cocycle(args.cocycle, X)
    if not isinstance(c, Cocycle2):
        raise UsageError("needs a 2-cocycle")
    k1, k0 = parse_knot(args.knot1), parse_knot(args.knot0)
    om1 = omega_family(k1, X, c, args.r1)
    om0 = omega_family(k0, X, c, args.r0)
    v = conc.theorem12_check(
        om1, om0, (f"sigma^{args.r1} [{args.knot1}]", f"sigma^{args.r0} [{args.knot0}]")
    )
    _emit_verdicts(cfg, out, [v])
    return 0


def cmd_conc_cor21(args, cfg, out) -> int:
    _emit_verdicts(cfg, out, list(conc.corollary21_report(args.q, args.q2)))
    return 0


def cmd_conc_cor43(args, cfg, out) -> int:
    v = conc.corollary43_report(args.l, args.m, args.n, args.r, args.s)
    _emit_verdicts(cfg, out, [v])
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qcocycle", description=__doc__.splitlines()[0])
    groups = p.add_subparsers(dest="group", required=True)

    def leaf(sub, name, fn, help_):
        q = sub.add_parser(name, help=help_)
        q.add_argument("--json", action="store_true", help="emit JSON")
        q.add_argument("--jobs", type=int, default=None, help=f"worker processes (env {JOBS_ENV})")
        q.set_defaults(func=fn)
        return q

    g = groups.add_parser("quandle").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "verify", cmd_quandle_verify, "check the quandle axioms")
    q.add_argument("--file")
    q.add_argument("--builtin")
    q = leaf(g, "show", cmd_quandle_show, "print a builtin quandle in file format")
    q.add_argument("name")
    q.add_argument("--out")
    q = leaf(g, "type", cmd_quandle_type, "least s with x(*y)^s = x")
    q.add_argument("--quandle", required=True)

    g = groups.add_parser("cocycle").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "verify", cmd_cocycle_verify, "check the cocycle conditions")
    q.add_argument("--cocycle", required=True, help="file, q6z4, mochizuki:P or zero:N")
    q.add_argument("--quandle")
    q = leaf(g, "gen", cmd_cocycle_gen, "write an explicit cocycle")
    q.add_argument("kind", choices=["mochizuki", "q6z4"])
    q.add_argument("--p", type=int)
    q.add_argument("--out")
    q.add_argument("--quandle-out")
    q = leaf(g, "enumerate", cmd_cocycle_enumerate, "solve for all 2-cocycles")
    q.add_argument("--quandle", required=True)
    q.add_argument("--modulus", type=int, required=True)
    q.add_argument("--cap", type=int, default=10_000)
    q.add_argument("--max-order", type=int, default=24)
    q.add_argument("--list", action="store_true")

    g = groups.add_parser("knot").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "colorings", cmd_knot_colorings, "enumerate quandle colorings")
    q.add_argument("--braid")
    q.add_argument("--knot")
    q.add_argument("--quandle", required=True)
    q.add_argument("--list", action="store_true")

    g = groups.add_parser("invariant").add_subparsers(dest="cmd", required=True)
    for name, fn in (("phi", cmd_invariant_phi), ("omega", cmd_invariant_omega)):
        q = leaf(g, name, fn, f"{name} state-sum invariant")
        q.add_argument("--braid")
        q.add_argument("--knot")
        q.add_argument("--quandle", required=True)
        q.add_argument("--cocycle", required=True)
        if name == "omega":
            q.add_argument("--r", type=int, required=True)
    q = leaf(g, "twistspun", cmd_invariant_twistspun, "reference multiset for tau^2 T(2,q)")
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--p", type=int)

    g = groups.add_parser("concordance").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "thm11", cmd_conc_thm11, "multiset inclusion check")
    q.add_argument("--phi1", required=True, help='e.g. "0:3 1:6"')
    q.add_argument("--phi0", required=True)
    q.add_argument("--modulus", type=int, required=True)
    q = leaf(g, "thm12", cmd_conc_thm12, "family inclusion check for sigma^r K")
    q.add_argument("--knot1", required=True)
    q.add_argument("--r1", type=int, required=True)
    q.add_argument("--knot0", required=True)
    q.add_argument("--r0", type=int, required=True)
    q.add_argument("--quandle", default="q6")
    q.add_argument("--cocycle", default="q6z4")
    q = leaf(g, "cor21", cmd_conc_cor21, "twist-spun T(2,q) comparisons")
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--q2", type=int, help="second prime; omit for the mirror test")
    q = leaf(g, "cor43", cmd_conc_cor43, "sigma^r T(2,l) vs sigma^s S(m,n)")
    for name in ("l", "m", "n", "r", "s"):
        q.add_argument(f"--{name}", type=int, required=True)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        jobs = args.jobs if args.jobs is not None else _default_jobs()
        if jobs < 1:
            raise UsageError("--jobs must be >= 1")
        cfg = RunConfig(f"{args.group} {args.cmd}", json=args.json, jobs=jobs,
                        cap=getattr(args, "cap", 10_000))
        if cfg.cap < 1:
            raise UsageError("--cap must be positive")
        return args.func(args, cfg, out)
    except (UsageError, FormatError, BraidSyntaxError, ValueError, OSError) as e:
        err.write(f"qcocycle: error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())
