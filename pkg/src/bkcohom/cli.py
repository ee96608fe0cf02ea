"""Command-line frontend: exact results as deterministic JSON, with a disk cache.

All numbers are emitted as strings encoding exact rationals ("p/q" or "p"),
Weyl elements as reduced words (lists of 1-based simple-reflection indices).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__, bkproduct, cohomology, levi, schubert, verify
from .extcomplex import ComplexError
from .rootsys import CartanType, ParabolicData, RootSystemError, build_root_system

CACHE_TAG = f"bkcohom-{__version__}-1"


class ConfigError(ValueError):
    pass


def q(x) -> str:
    return str(Fraction(x))


def word(w) -> list[int]:
    return list(w.word)


def parse_rationals(text: str | None) -> tuple[Fraction, ...] | None:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse rationals from {text!r}") from exc


def parse_ints(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ConfigError(f"cannot parse integers from {text!r}") from exc


def parse_indices(text: str | None) -> tuple[int, ...]:
    return tuple(sorted(set(parse_ints(text))))


def parse_tuple(text: str | None) -> list[tuple[int, ...]] | None:
    """Reduced words separated by ';', letters by ','; 'e' or empty for the identity."""
    if text is None:
        return None
    out = []
    for part in text.split(";"):
        part = part.strip()
        out.append(() if part in ("", "e") else parse_ints(part))
    return out


@dataclass(frozen=True)
class JobConfig:
    command: str
    type: str
    I: tuple[int, ...]
    t: tuple | None = None
    tau: tuple | None = None
    J: tuple[int, ...] = ()
    tuple_words: tuple | None = None
    indexing: str = "epsilon"
    seed: int = verify.DEFAULT_SEED

    def parabolic(self) -> ParabolicData:
        try:
            rs = build_root_system(CartanType.parse(self.type))
            return ParabolicData.make(rs, self.I)
        except (RootSystemError, ValueError) as exc:
            raise ConfigError(str(exc)) from exc

    def key_material(self) -> dict:
        return {
            "command": self.command, "type": self.type, "I": list(self.I),
            "t": None if self.t is None else [q(x) for x in self.t],
            "tau": None if self.tau is None else [q(x) for x in self.tau],
            "J": list(self.J), "tuple": None if self.tuple_words is None else [list(w) for w in self.tuple_words],
            "indexing": self.indexing, "seed": self.seed, "version": CACHE_TAG,
        }

    def cache_key(self) -> str:
        blob = json.dumps(self.key_material(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def _point(P: ParabolicData, x: tuple | None, default: Fraction, name: str) -> tuple:
    if x is None:
        return (default,) * P.m
    if len(x) != P.m:
        raise ConfigError(f"--{name} needs {P.m} coordinates, got {len(x)}")
    return x


def _header(P: ParabolicData, command: str) -> dict:
    return {"command": command, "type": str(P.rs.cartan_type), "I": sorted(P.I),
            "deform_order": list(P.deform_order), "dim_G_over_P": str(P.N)}


def _triples(table: dict) -> list[dict]:
    rows = [{"u": word(u), "v": word(v), "w": word(w), "coefficient": q(c)} for (u, v, w), c in table.items() if c]
    rows.sort(key=lambda r: (len(r["u"]), r["u"], len(r["v"]), r["v"], len(r["w"]), r["w"]))
    return rows


def cmd_betti(cfg: JobConfig) -> dict:
    P = cfg.parabolic()
    t = _point(P, cfg.t, Fraction(1), "t")
    b = cohomology.betti(P, t)
    exp = cohomology.kostant_expected(P)
    out = _header(P, "betti")
    out.update({
        "t": [q(x) for x in t],
        "degrees": [str(i) for i in range(0, len(b.dims), 2)],
        "dims": [str(d) for i, d in enumerate(b.dims) if i % 2 == 0],
        "odd_dims": [str(d) for i, d in enumerate(b.dims) if i % 2],
        "total": str(b.total),
        "matches_kostant": b == exp,
    })
    return out


def cmd_product_table(cfg: JobConfig) -> dict:
    """Engine table C-hat(t) from the global basis, next to the oracle constants."""
    P = cfg.parabolic()
    t = _point(P, cfg.t, Fraction(1), "t")
    out = _header(P, "product-table")
    out.update({
        "t": [q(x) for x in t],
        "engine": _triples(cohomology.engine_table(P, t)),
        "oracle": _triples(schubert.structure_constants(P).entries),
    })
    return out


def cmd_bk_table(cfg: JobConfig) -> dict:
    P = cfg.parabolic()
    tau = _point(P, cfg.tau, Fraction(1), "tau")
    tab = bkproduct.bk_table(P, tau, cfg.indexing)
    out = _header(P, "bk-table")
    out.update({"tau": [q(x) for x in tau], "indexing": cfg.indexing, "entries": _triples(tab.entries)})
    return out


def cmd_disjoint(cfg: JobConfig) -> dict:
    P = cfg.parabolic()
    t = _point(P, cfg.t, Fraction(1), "t")
    rep = cohomology.disjointness_suite(P, t)
    out = _header(P, "disjoint")
    out.update({"t": [q(x) for x in t], "checks": dict(sorted(rep.checks.items())),
                "dim_ker_S": str(rep.dim_ker_S), "W_P": str(rep.expected), "ok": rep.ok})
    return out


def _certificate(cert: levi.MovabilityCertificate) -> dict:
    return {
        "tuple": [word(w) for w in cert.tuple_], "J": sorted(cert.J), "decision": cert.decision,
        "classical_nonvanishing": cert.classical_nonvanishing, "top_coefficient": q(cert.top_coefficient),
        "chi_defect": [q(x) for x in cert.chi_defect], "rho_value": q(cert.rho_value),
        "rho_decision": cert.rho_decision,
    }


def cmd_levi(cfg: JobConfig) -> dict:
    P = cfg.parabolic()
    try:
        J = P.check_J(cfg.J)
    except RootSystemError as exc:
        raise ConfigError(str(exc)) from exc
    out = _header(P, "levi")
    out["J"] = sorted(J)
    out["z_rho"] = [q(x) for x in P.z_rho(J)]
    if cfg.tuple_words is not None:
        try:
            ws = [P.rs.from_word(wd) for wd in cfg.tuple_words]
            out["certificates"] = [_certificate(levi.levi_movable(P, ws, J))]
        except (levi.MovabilityError, RootSystemError, ValueError, IndexError) as exc:
            raise ConfigError(str(exc)) from exc
        return out
    rep = levi.cross_check_corollary(P, J)
    reps = P.min_coset_reps
    certs = []
    for u in reps:
        for v in reps:
            for w in reps:
                if levi.codim(P, u) + levi.codim(P, v) + levi.codim(P, w) == P.N:
                    certs.append(_certificate(levi.levi_movable(P, (u, v, w), J)))
    out["certificates"] = certs
    out["corollary"] = {"checked": str(rep.checked), "movable": str(rep.movable),
                        "classical": str(rep.classical), "ok": rep.ok}
    return out


def cmd_verify(cfg: JobConfig) -> dict:
    P = cfg.parabolic()
    results = verify.run_case(cfg.type, P.I, seed=cfg.seed)
    out = _header(P, "verify")
    out["sample_points"] = [[q(x) for x in t] for t in verify.sample_points(P, cfg.seed)]
    out["criteria"] = [{"number": str(r.number), "name": r.name, "ok": r.ok, "details": r.details} for r in results]
    out["ok"] = all(r.ok for r in results)
    return out


COMMANDS = {
    "betti": cmd_betti,
    "product-table": cmd_product_table,
    "bk-table": cmd_bk_table,
    "disjoint": cmd_disjoint,
    "levi": cmd_levi,
    "verify": cmd_verify,
}


def render(doc: dict) -> bytes:
    return (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode()


# ---------------------------------------------------------------------------
# cache: <dir>/<key>.json holding {"sha256": ..., "payload": <rendered text>}

def cache_load(cache_dir: Path, key: str) -> bytes | None:
    path = cache_dir / f"{key}.json"
    try:
        rec = json.loads(path.read_text())
        payload = rec["payload"].encode()
    except (OSError, ValueError, KeyError, TypeError, AttributeError):
        return None
    if hashlib.sha256(payload).hexdigest() != rec.get("sha256"):
        return None
    return payload


def cache_store(cache_dir: Path, key: str, payload: bytes) -> None:
    cache_dir.mkdir(parents=True, exist_ok=True)
    rec = json.dumps({"sha256": hashlib.sha256(payload).hexdigest(), "payload": payload.decode()})
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(rec)
        os.replace(tmp, cache_dir / f"{key}.json")
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run(cfg: JobConfig, cache_dir: Path | None = None) -> bytes:
    if cfg.command not in COMMANDS:
        raise ConfigError(f"unknown command {cfg.command!r}")
    key = cfg.cache_key()
    if cache_dir is not None:
        hit = cache_load(cache_dir, key)
        if hit is not None:
            return hit
    payload = render(COMMANDS[cfg.command](cfg))
    if cache_dir is not None:
        cache_store(cache_dir, key, payload)
    return payload


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bkcohom", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--type", required=True, help="Cartan type, e.g. A3")
    p.add_argument("--parabolic", default="", help="comma list of simple roots in the Levi (1-based)")
    p.add_argument("--t", help="comma list of rationals, one per deformation coordinate")
    p.add_argument("--tau", help="comma list of rationals for the BK parameter")
    p.add_argument("--J", default="", help="comma list of deformation simple-root indices")
    p.add_argument("--tuple", dest="tuple_words", help="Levi query: reduced words, ';'-separated")
    p.add_argument("--indexing", choices=["epsilon", "lambda"], default="epsilon")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--cache-dir", default=os.environ.get("BKCOHOM_CACHE", ".bkcohom-cache"))
    p.add_argument("--no-cache", action="store_true")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        words = parse_tuple(args.tuple_words)
        cfg = JobConfig(
            command=args.command, type=args.type.strip(), I=parse_indices(args.parabolic),
            t=parse_rationals(args.t), tau=parse_rationals(args.tau), J=parse_indices(args.J),
            tuple_words=None if words is None else tuple(words), indexing=args.indexing, seed=args.seed,
        )
        cfg.parabolic()
        payload = run(cfg, None if args.no_cache else Path(args.cache_dir))
    except (ConfigError, ComplexError, RootSystemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
