"""Command line interface.

Reports go to standard output as JSON (or plain text with ``--format text``);
a one line summary goes to standard error.  Exit codes: 0 when every
requested check passes, 1 on a failed check, 2 on a usage error, 3 when a
computation needs a degree above its cap and the matching opt-in flag is
absent.
"""
from __future__ import annotations

import argparse
import configparser
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import data
from .errors import CapExceeded

GROUPS = ("e6", "e7", "e8")
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


@dataclass
class RunConfig:
    group: str = "e6"
    threads: int = 1
    cache_dir: str | None = None
    format: str = "json"
    timings: bool = False
    caps: dict = field(default_factory=dict)
    e8_rho18_plus: bool = False
    e8_gamma15: bool = False
    nj_e7: bool = False

    @property
    def kind(self) -> str:
        return self.group.upper()

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("thread count must be at least 1")
        if any(c < 1 for c in self.caps.values()):
            raise ValueError("caps must be positive")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument handling

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", choices=GROUPS, type=str.lower)
    common.add_argument("--config", help="key = value file with an [echow] section")
    common.add_argument("--threads", type=int)
    common.add_argument("--cache-dir")
    common.add_argument("--format", choices=("json", "text"))
    common.add_argument("--timings", action="store_true", default=None,
                        help="include wall-clock times (output is then not reproducible)")
    common.add_argument("--cap", type=int, help="degree cap for this subcommand")
    common.add_argument("--e8-rho18-plus", action="store_true", default=None)
    common.add_argument("--e8-gamma15", action="store_true", default=None)
    common.add_argument("--nj-e7", action="store_true", default=None)

    p = argparse.ArgumentParser(prog="echow", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[common], help="positive roots and Cartan matrix")
    w = sub.add_parser("weyl", parents=[common], help="Weyl group elements by length")
    w.add_argument("--coset", type=int, help="enumerate W^P for the maximal parabolic of this node")
    w.add_argument("--max-len", type=int, default=4)
    w.add_argument("--min-len", type=int, default=0)
    b = sub.add_parser("bgg", parents=[common], help="Schubert expansion of an expression")
    b.add_argument("--expr", required=True)
    b.add_argument("--check-collisions", action="store_true")
    sub.add_parser("verify-dictionary", parents=[common], help="generator dictionaries")
    vp = sub.add_parser("verify-presentation", parents=[common], help="relation kernel tests")
    vp.add_argument("--method", choices=("groebner", "bgg"), default="groebner")
    sub.add_parser("verify-duan-zhao", parents=[common], help="Schubert-generator presentation")
    sub.add_parser("invariants-table", parents=[common], help="orbit sums and the n_j table")
    c = sub.add_parser("chow", parents=[common], help="Chow ring of the group")
    c.add_argument("--mod-p", type=int)
    sub.add_parser("verify-all", parents=[common], help="every check for one group")
    sub.add_parser("verify", parents=[common], help="alias of verify-all")
    return p


_CONFIG_KEYS = {"group": str, "threads": int, "cache_dir": str, "format": str,
                "timings": bool, "e8_rho18_plus": bool, "e8_gamma15": bool, "nj_e7": bool}


def _read_config(path: str) -> dict:
    cp = configparser.ConfigParser()
    if not cp.read(path):
        raise UsageError(f"cannot read config file {path}")
    if "echow" not in cp:
        raise UsageError(f"{path} has no [echow] section")
    sec = cp["echow"]
    out = {}
    for key in sec:
        norm = key.replace("-", "_")
        if norm in _CONFIG_KEYS:
            kind = _CONFIG_KEYS[norm]
            out[norm] = sec.getboolean(key) if kind is bool else kind(sec[key])
        elif norm.startswith("cap_"):
            out.setdefault("caps", {})[norm[4:]] = sec.getint(key)
        else:
            raise UsageError(f"unknown config key {key!r}")
    return out


def build_config(args: argparse.Namespace) -> RunConfig:
    values = _read_config(args.config) if args.config else {}
    for key in _CONFIG_KEYS:
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    values.setdefault("group", "e6")
    if values["group"] not in GROUPS:
        raise UsageError(f"unknown group {values['group']!r}")
    try:
        return RunConfig(**values)
    except (TypeError, ValueError) as err:
        raise UsageError(str(err)) from err


# ---------------------------------------------------------------------------
# output

def _scrub(obj, timings: bool):
    if timings:
        return obj
    if isinstance(obj, dict):
        return {k: _scrub(v, timings) for k, v in obj.items() if k != "seconds"}
    if isinstance(obj, list):
        return [_scrub(v, timings) for v in obj]
    return obj


def _text(obj, indent: int = 0) -> list:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        if "passed" in obj and "name" in obj:
            mark = "PASS" if obj["passed"] else "FAIL"
            extra = f"  [{obj['note']}]" if obj.get("note") else ""
            return [f"{pad}{mark} {obj['name']}{extra}"]
        if "status" in obj and "relation" in obj:
            return [f"{pad}{obj['status'].upper():8} {obj['relation']} (degree {obj['degree']})"]
        if all(not isinstance(v, (dict, list)) for v in obj.values()):
            return [pad + "  ".join(f"{k}={v}" for k, v in obj.items())]
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return lines
    if isinstance(obj, list):
        for v in obj:
            lines.extend(_text(v, indent))
        return lines
    return [f"{pad}{obj}"]


def _emit(cfg: RunConfig, payload: dict, out) -> None:
    payload = _scrub(payload, cfg.timings)
    if cfg.format == "text":
        out.write("\n".join(_text(payload)) + "\n")
    else:
        out.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")


# ---------------------------------------------------------------------------
# commands; each returns (payload, passed)

def cmd_roots(cfg, args):
    from .rootweyl import root_system
    rs = root_system(cfg.kind)
    roots = [list(r) for r in rs.positive_roots]
    return {"group": cfg.kind, "rank": rs.rank, "cartan": [list(r) for r in rs.cartan],
            "positive_roots": len(roots), "roots": roots}, True


def cmd_weyl(cfg, args):
    from .rootweyl import ParabolicSpec, enumerate_by_length, root_system
    rs = root_system(cfg.kind)
    par = None
    if args.coset is not None:
        if not 1 <= args.coset <= rs.rank:
            raise UsageError(f"--coset must be a node 1..{rs.rank}")
        par = ParabolicSpec.complement_of(rs.rank, [args.coset])
    if args.max_len < 0 or args.min_len < 0:
        raise UsageError("lengths must be non-negative")
    elems = [w for w in enumerate_by_length(rs, args.max_len, par, cfg.cache_dir)
             if w.length >= args.min_len]
    return {"group": cfg.kind, "coset": args.coset, "max_len": args.max_len,
            "words": [{"word": w.word_string, "length": w.length} for w in elems]}, True


def cmd_bgg(cfg, args):
    from .schubert import DEFAULT_CAPS, expand_expression
    cap = args.cap or DEFAULT_CAPS[cfg.kind]
    exp = expand_expression(cfg.kind, args.expr, caps={cfg.kind: cap},
                            check_collisions=args.check_collisions)
    out = exp.to_json()
    out["group"] = cfg.kind
    out["integral"] = exp.is_integral()
    return out, True


def _dictionary(cfg, args):
    from .schubert import DEFAULT_CAPS, Report, verify_generator_dictionary
    kind = cfg.kind
    if kind == "E8" and not cfg.e8_gamma15:
        names = {n for n, _, _ in data.GAMMA_MULTIPLES[kind] if n != "g15"}
        names |= {"Z" + w for w, _ in data.INVERSE_GAMMA_FORMS[kind] if len(w) < 15}
        rep = verify_generator_dictionary(kind, include=names)
        payload = rep.to_json()
        payload["skipped"] = ["forward g15", "inverse Z134276543876542 (needs --e8-gamma15)"]
        return payload, rep.passed
    caps = {kind: max(DEFAULT_CAPS[kind], 15)} if kind == "E8" else None
    rep = verify_generator_dictionary(kind, caps=caps)
    return rep.to_json(), rep.passed


def _presentation(cfg, args):
    from .presentations import DEFAULT_RELATION_CAPS, presentation_data, verify_relations
    kind = cfg.kind
    cap = args.cap or DEFAULT_RELATION_CAPS[kind]
    opt_in = kind == "E8" and cfg.e8_rho18_plus
    if args.cap and args.cap > DEFAULT_RELATION_CAPS[kind] and not (opt_in or kind != "E8"):
        raise CapExceeded(kind, args.cap, DEFAULT_RELATION_CAPS[kind], "relation checks")
    pres = presentation_data(kind)
    names = [r.name for r in pres.relations]
    method = getattr(args, "method", "groebner")

    def job(name):
        return verify_relations(kind, degree_cap=cap, method=method, opt_in=opt_in, names={name})[0]

    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        statuses = list(pool.map(job, names))
    passed = all(s.status != "fail" for s in statuses)
    return {"group": kind, "method": method, "relations": [s.to_json() for s in statuses],
            "passed": passed}, passed


def _duan_zhao(cfg, args):
    from .presentations import verify_alt_relations_e8, verify_duan_zhao
    rep = verify_duan_zhao(cfg.kind)
    payload = rep.to_json()
    if cfg.kind == "E8":
        payload["experimental_relations"] = {
            "stated_y": [s.to_json() for s in verify_alt_relations_e8()],
            "corrected_y": [s.to_json() for s in verify_alt_relations_e8(y_variant="corrected")],
        }
    return payload, rep.passed


def _invariants(cfg, args):
    from .invariants import invariant_report
    return invariant_report(cfg.kind, nj_opt_in=cfg.nj_e7 and cfg.kind == "E7",
                            timings=cfg.timings)


def _chow(cfg, args):
    from .chow import (ISOMORPHISM_CAPS, coprime_kill, derive_chow, graded_structure,
                       mod_p_analysis, mod_p_report, theorem_presentation, verify_e8_congruences,
                       verify_isomorphism)
    kind = cfg.kind
    cap = args.cap or ISOMORPHISM_CAPS[kind]
    der = derive_chow(kind)
    pres = der.presentation
    iso = verify_isomorphism(theorem_presentation(kind), pres, data.CHOW_GENERATOR_MAP[kind], cap)
    stated = [pres.ring.format(pres.ring.parse(r)) for r in data.CHOW_GAMMA_STATED[kind]]
    derived_ok = pres.format_relations() == stated
    structure = graded_structure(pres, cap)
    payload = {
        "group": kind,
        "generators": [{"name": n, "degree": d} for n, d in pres.generators],
        "relations": pres.format_relations(),
        "matches_stated": derived_ok,
        "derivation": [s.to_json(pres.ring) for s in der.steps],
        "replay": der.replay(),
        "structure": structure.to_json(),
        "isomorphism": iso.to_json(),
    }
    passed = derived_ok and der.replay() and iso.passed
    if kind in ("E6", "E7"):
        bad = coprime_kill(pres, cap)
        payload["coprime_kill"] = {"passed": not bad, "nonzero": bad}
        passed = passed and not bad
    else:
        cong = verify_e8_congruences(der)
        payload["congruences"] = cong.to_json()
        passed = passed and cong.passed
    primes = [args.mod_p] if getattr(args, "mod_p", None) else \
        sorted(p for k, p in data.MOD_P_TABLE if k == kind)
    payload["mod_p"] = []
    for p in primes:
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise UsageError(f"{p} is not a prime")
        res = mod_p_analysis(kind, p)
        rep = mod_p_report(kind, p, cap=cap)
        entry = res.to_json()
        entry["report"] = rep.to_json()
        payload["mod_p"].append(entry)
        passed = passed and rep.passed
    payload["passed"] = passed
    return payload, passed


_VERIFY = {
    "verify-dictionary": _dictionary,
    "verify-presentation": _presentation,
    "verify-duan-zhao": _duan_zhao,
    "invariants-table": _invariants,
    "chow": _chow,
}


def cmd_verify_all(cfg, args):
    sections = {}
    ok = True
    for name, fn in _VERIFY.items():
        args.cap = None
        payload, passed = fn(cfg, args)
        sections[name] = {"passed": passed, "report": payload}
        ok = ok and passed
    return {"group": cfg.kind, "passed": ok, "sections": sections}, ok


_COMMANDS = {"roots": cmd_roots, "weyl": cmd_weyl, "bgg": cmd_bgg, "verify-all": cmd_verify_all,
             "verify": cmd_verify_all}
_COMMANDS.update(_VERIFY)


def execute(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if not hasattr(args, "method"):
        args.method = "groebner"
    try:
        cfg = build_config(args)
        t0 = time.perf_counter()
        payload, passed = _COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        err.write(f"echow: usage error: {exc}\n")
        return EXIT_USAGE
    except CapExceeded as exc:
        err.write(f"echow: {exc}; raise the cap or pass the opt-in flag\n")
        return EXIT_CAP
    except ValueError as exc:
        err.write(f"echow: {exc}\n")
        return EXIT_USAGE
    _emit(cfg, payload, out)
    summary = f"{args.command} {cfg.kind}: {'pass' if passed else 'FAIL'}"
    if cfg.timings:
        summary += f" ({time.perf_counter() - t0:.2f} s)"
    err.write(summary + "\n")
    return EXIT_OK if passed else EXIT_FAIL


def main() -> None:
    sys.exit(execute())


if __name__ == "__main__":
    main()
