"""Command-line front end: build, verify, tabulate, report.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad
configuration, 3 a resource cap was hit.  JSON output is byte-stable for a
fixed configuration, independent of the worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import adjoint_action, galois_ext, splitting, tits
from .chevalley import representation
from .report import VerificationReport
from .rootsystem import build_cartan, generate_roots, weyl_group_order

SCHEMA_VERSION = 1


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    type_label: str = "A"
    rank: int = 1
    rep: str = "adjoint"
    json_output: bool = False
    threads: int = 1
    cap: int = 2**20
    lift: str = "tits"
    tilde: bool = False

    def validate(self):
        if self.type_label.upper() not in "ABCDEFG" or len(self.type_label) != 1:
            raise ConfigError(f"--type must be one of A..G, got {self.type_label!r}")
        if self.rank < 1:
            raise ConfigError(f"--rank must be positive, got {self.rank}")
        try:
            build_cartan(self.type_label, self.rank)
        except ValueError as exc:
            raise ConfigError(f"--rank: {exc}") from exc
        if self.rep not in ("adjoint", "defining", "sl2"):
            raise ConfigError(f"--rep must be adjoint, defining or sl2, got {self.rep!r}")
        if self.rep == "sl2" and (self.type_label.upper(), self.rank) != ("A", 1):
            raise ConfigError("--rep sl2 requires --type A --rank 1")
        if self.rep == "defining" and self.type_label.upper() not in ("A", "C"):
            raise ConfigError(f"--rep defining is not available for type {self.type_label}")
        if self.threads < 1:
            raise ConfigError(f"--threads must be positive, got {self.threads}")
        if self.cap < 1:
            raise ConfigError(f"--cap must be positive, got {self.cap}")
        if self.tilde and self.lift != "tits":
            raise ConfigError("--tilde applies to --lift tits only")

    def load_rep(self):
        return representation(self.type_label.upper(), self.rank, self.rep)


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _report_payload(cfg: RunConfig, command: str, report: VerificationReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "type": cfg.type_label.upper(),
        "rank": cfg.rank,
        "rep": cfg.rep,
        "results": report.to_json(),
        "all_pass": report.all_pass,
    }


def _print_report(cfg: RunConfig, command: str, report: VerificationReport) -> int:
    if cfg.json_output:
        _emit_json(_report_payload(cfg, command, report))
    else:
        for c in report.checks:
            idx = ",".join(str(k) for k in c.indices)
            print(f"{c.relation_id:<24} ({idx}): {c.status}")
        print(report.summary())
    return 0 if report.all_pass else 1


def cmd_roots(cfg: RunConfig) -> int:
    cartan = build_cartan(cfg.type_label, cfg.rank)
    rs = generate_roots(cartan)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "type": cartan.type_label,
        "rank": cartan.rank,
        "cartan": cartan.rows(),
        "num_roots": len(rs.roots),
        "weyl_order": weyl_group_order(rs),
    }
    if cfg.json_output:
        _emit_json(payload)
    else:
        print(f"type {payload['type']}{payload['rank']}")
        for row in payload["cartan"]:
            print("  " + " ".join(f"{v:3d}" for v in row))
        print(f"roots: {payload['num_roots']}")
        print(f"weyl group order: {payload['weyl_order']}")
    return 0


def cmd_tits_verify(cfg: RunConfig) -> int:
    rep = cfg.load_rep()
    report = tits.verify_tits_presentation(rep, cfg.threads)
    report.extend(tits.verify_normalizer_action(rep, cfg.threads))
    report.extend(tits.verify_lift_identities(rep, cfg.threads))
    return _print_report(cfg, "tits-verify", report)


def cmd_u_verify(cfg: RunConfig) -> int:
    rep = cfg.load_rep()
    report = galois_ext.verify_wu_presentation(rep, cfg.threads)
    report.extend(galois_ext.verify_unitary_lemmas(rep, cfg.threads))
    report.extend(galois_ext.verify_m_intersection(rep, cfg.threads))
    return _print_report(cfg, "u-verify", report)


def cmd_verify_all(cfg: RunConfig) -> int:
    rep = cfg.load_rep()
    report = tits.verify_tits_presentation(rep, cfg.threads)
    report.extend(tits.verify_normalizer_action(rep, cfg.threads))
    report.extend(tits.verify_lift_identities(rep, cfg.threads))
    report.extend(galois_ext.verify_wu_presentation(rep, cfg.threads))
    report.extend(galois_ext.verify_unitary_lemmas(rep, cfg.threads))
    report.extend(galois_ext.verify_m_intersection(rep, cfg.threads))
    table = adjoint_action.verify_action_tables(rep)
    if cfg.json_output:
        payload = _report_payload(cfg, "verify", report)
        payload["action_table"] = table.to_json()
        payload["all_pass"] = report.all_pass and table.all_match
        _emit_json(payload)
        return 0 if report.all_pass and table.all_match else 1
    rc = _print_report(cfg, "verify", report)
    status = "pass" if table.all_match else "fail"
    print(f"action tables: {status} ({len(table.entries)} entries)")
    return rc if table.all_match else 1


def cmd_adjoint_table(cfg: RunConfig) -> int:
    rep = cfg.load_rep()
    lifts = ("tits_tilde",) if cfg.tilde else (cfg.lift,)
    table = adjoint_action.verify_action_tables(rep, lifts=lifts)
    if cfg.json_output:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "adjoint-table",
            "type": cfg.type_label.upper(),
            "rank": cfg.rank,
            "rep": cfg.rep,
            "lift": lifts[0],
            "entries": table.to_json(),
            "all_pass": table.all_match,
        }
        _emit_json(payload)
    else:
        for e in table.entries:
            mark = "ok " if e.match else "BAD"
            print(f"{mark} {e.lift} s_{e.i} on {e.kind}_{e.j}")
            print("    " + str(e.actual).replace("\n", "\n    "))
        print(f"{sum(e.match for e in table.entries)}/{len(table.entries)} entries match")
    return 0 if table.all_match else 1


def cmd_split_check(cfg: RunConfig) -> int:
    rep = cfg.load_rep()
    report = splitting.split_search(rep, cap=cfg.cap)
    verdict, note = splitting.cww_oracle(
        cfg.type_label.upper(), cfg.rank, splitting.isogeny_of(rep)
    )
    agrees = (report.status == "split_with_witness") == (verdict == "split")
    payload = report.to_json()
    payload.update(
        {
            "schema_version": SCHEMA_VERSION,
            "command": "split-check",
            "oracle": verdict,
            "oracle_note": note,
            "oracle_agrees": agrees,
        }
    )
    if cfg.json_output:
        _emit_json(payload)
    else:
        print(f"{cfg.type_label.upper()}{cfg.rank} ({cfg.rep}): {report.status}")
        print(f"searched {report.search_space} candidate tuples, {report.relations_checked} checks")
        print(f"classification table says: {verdict}" + (f" ({note})" if note else ""))
    return 0 if agrees else 1


COMMANDS = {
    "roots": cmd_roots,
    "verify": cmd_verify_all,
    "tits-verify": cmd_tits_verify,
    "u-verify": cmd_u_verify,
    "adjoint-table": cmd_adjoint_table,
    "split-check": cmd_split_check,
}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylnorm", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        q = sub.add_parser(name)
        q.add_argument("--type", dest="type_label", default="A")
        q.add_argument("--rank", type=int, default=1)
        q.add_argument("--rep", default="adjoint", choices=["adjoint", "defining", "sl2"])
        q.add_argument("--json", dest="json_output", action="store_true")
        q.add_argument("--threads", type=int, default=None)
        q.add_argument("--cap", type=int, default=2**20)
        if name == "adjoint-table":
            q.add_argument("--lift", default="tits", choices=["tits", "unitary"])
            q.add_argument("--tilde", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    threads = args.threads
    if threads is None:
        threads = int(os.environ.get("WEYLNORM_THREADS", "1") or "1")
    cfg = RunConfig(
        command=args.command,
        type_label=args.type_label,
        rank=args.rank,
        rep=args.rep,
        json_output=args.json_output,
        threads=threads,
        cap=args.cap,
        lift=getattr(args, "lift", "tits"),
        tilde=getattr(args, "tilde", False),
    )
    try:
        cfg.validate()
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    try:
        return COMMANDS[cfg.command](cfg)
    except splitting.SearchCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
