# -*- coding: utf-8 -*-
"""
coxsig.py
Linea de comandos: grupos, clases, vectores de firmas, ISS, polinomios d(S, rho),
verificacion de clases cuspidales y comprobaciones de un tipo completo.
"""
from __future__ import annotations

import argparse
import io
import json
import re
import sys
import time
from dataclasses import dataclass

import pandas as pd

import config
from conjugacy import (
    conjugacy_classes,
    cuspidal_by_parabolics,
    cuspidal_data,
    cuspidal_data_json,
    data_for_type,
    find_datum,
    save_cuspidal_data,
)
from coxeter_core import CoxeterSystem, enumerate_group, format_word, parse_type, parse_word
from cuspidal import algorithm_A
from exact_algebra import MultiPoly
from iss import build_iss, h3_example_check, report_from_signatures, verify_ism
from repr_poly import (
    catalog_for,
    d_poly,
    d_tilde,
    decompose,
    representation_from_spec,
    restrict_poly,
    verify_main_theorem,
)
from signatures import brute_force_signature_vector, parse_signature, signature_vector

FORMATS = ("json", "csv", "latex")
_SYM_RE = re.compile(r"^S(\d+)$", re.IGNORECASE)


@dataclass
class RunConfig:
    type_spec: str
    command: str
    format: str = "json"
    labeling: str = "table2"
    threads: int = config.THREADS
    extended: bool = config.EXTENDED
    cache_dir: str = config.CACHE_DIR
    data_file: str = config.DATA_FILE
    timing: bool = False

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError(f"--threads debe ser >= 1 (recibido {self.threads})")
        if self.format not in FORMATS:
            raise ValueError(f"formato desconocido: {self.format}")


def normalize_type(text: str) -> str:
    """S_n se acepta como alias de A_{n-1}."""
    hit = _SYM_RE.match((text or "").strip())
    if hit:
        n = int(hit.group(1))
        if n < 2:
            raise ValueError(f"S{n} no tiene generadores")
        return f"A{n - 1}"
    return text


@dataclass
class Context:
    cfg: RunConfig
    sys: CoxeterSystem | None = None
    _table: object = None
    _classes: object = None

    def table(self):
        if self._table is None:
            self._table = enumerate_group(self.sys, cache_dir=self.cfg.cache_dir)
        return self._table

    def classes(self):
        if self._classes is None:
            self._classes = conjugacy_classes(self.table(), self.sys)
        return self._classes


# ===== Comandos =====
def cmd_group(ctx: Context, args):
    s = ctx.sys
    table = ctx.table()
    doc = {
        "type": s.type_spec,
        "labeling": s.labeling,
        "rank": s.rank,
        "order": str(table.order),
        "components": [c.name for c in s.components],
        "max_length": int(table.lengths.max()) if table.order else 0,
        "coxeter_matrix": [list(r) for r in s.coxeter_matrix],
    }
    frame = pd.DataFrame([{k: v for k, v in doc.items() if k != "coxeter_matrix"} | {"components": "x".join(doc["components"])}])
    return doc, frame


def cmd_classes(ctx: Context, args):
    classes = ctx.classes()
    rows = []
    for c in range(classes.count):
        p = classes.char_poly[c]
        rows.append(
            {
                "index": c + 1,
                "name": classes.name(c),
                "size": len(classes.classes[c]),
                "min_length": classes.min_length[c],
                "cuspidal": classes.cuspidal[c],
                "char_poly": str(p) if p is not None else "",
            }
        )
    return {"type": ctx.sys.type_spec, "count": classes.count, "classes": rows}, pd.DataFrame(rows)


def cmd_sigvec(ctx: Context, args):
    alpha = parse_signature(args.alpha, ctx.sys.rank)
    table, classes = ctx.table(), ctx.classes()
    if args.brute:
        vec = brute_force_signature_vector(table, classes, alpha)
    else:
        vec = signature_vector(table, classes, alpha)
    doc = {"alpha": list(alpha), "classes": classes.names(), "vector": [str(v) for v in vec]}
    frame = pd.DataFrame({"class": classes.names(), "count": [str(v) for v in vec]})
    return doc, frame


def _parse_signature_list(text: str, rank: int) -> list[tuple[int, ...]]:
    return [parse_signature(chunk, rank) for chunk in text.split(";") if chunk.strip()]


def cmd_iss(ctx: Context, args):
    table, classes = ctx.table(), ctx.classes()
    if args.signatures:
        report = report_from_signatures(ctx.sys, table, classes, _parse_signature_list(args.signatures, ctx.sys.rank))
    else:
        report = build_iss(ctx.sys, table, classes, engine=args.engine)
    doc = report.to_json()
    if args.verify:
        doc["verification"] = verify_ism(report, table, classes).to_json()
    names = report.class_names()
    frame = pd.DataFrame(
        [[str(v) for v in row] for row in report.matrix],
        columns=names,
        index=[",".join(str(a) for a in s) for s in report.signatures],
    )
    frame.index.name = "alpha"
    return doc, frame


def _poly_frame(p: MultiPoly) -> pd.DataFrame:
    return pd.DataFrame(
        [{"exponents": ",".join(str(e) for e in exps), "coeff": str(c)} for exps, c in p.sorted_terms()]
    )


def cmd_dpoly(ctx: Context, args):
    rep = representation_from_spec(ctx.sys, args.rep)
    p = d_tilde(rep) if args.tilde else d_poly(rep)
    doc = {
        "type": ctx.sys.type_spec,
        "rep": rep.name,
        "degree": rep.degree,
        "tilde": bool(args.tilde),
        "text": str(p),
        "poly": p.to_json(),
    }
    return doc, _poly_frame(p)


def _read_poly(path: str) -> MultiPoly:
    with open(path, "r", encoding="utf-8") as f:
        raw = json.load(f)
    return MultiPoly.from_json(raw["poly"] if isinstance(raw, dict) else raw)


def cmd_decompose(ctx: Context, args):
    p = _read_poly(args.poly)
    catalog = catalog_for(ctx.sys)
    parts = decompose(p, catalog)
    doc = {"type": ctx.sys.type_spec, "complete_catalog": catalog.complete, "decomposition": parts}
    return doc, pd.DataFrame([{"rep": k, "multiplicity": v} for k, v in parts.items()])


def cmd_restrict(ctx: Context, args):
    big = parse_type(normalize_type(args.from_type), ctx.cfg.labeling)
    small = parse_type(normalize_type(args.to_type), ctx.cfg.labeling)
    for s in (big, small):
        if not (s.is_irreducible and s.components[0].kind == "A"):
            raise ValueError(f"restrict solo trabaja con grupos simetricos (recibido {s.type_spec})")
    rep = representation_from_spec(big, args.rep)
    p = restrict_poly(d_poly(rep), small.rank + 1)
    parts = decompose(p, catalog_for(small))
    doc = {
        "from": big.type_spec,
        "to": small.type_spec,
        "rep": rep.name,
        "text": str(p),
        "poly": p.to_json(),
        "decomposition": parts,
    }
    return doc, pd.DataFrame([{"rep": k, "multiplicity": v} for k, v in parts.items()])


def _cuspidal_targets(ctx: Context):
    if ctx.sys.order <= config.ENUM_CAP:
        return cuspidal_data(ctx.sys, ctx.table(), ctx.classes())
    data = data_for_type(ctx.sys.type_spec, ctx.cfg.data_file)
    if not data:
        raise RuntimeError(f"{ctx.sys.type_spec}: no hay datos cuspidales en {ctx.cfg.data_file}")
    return data


def cmd_cuspcheck(ctx: Context, args):
    word = parse_word(args.word, ctx.sys.rank)
    target = find_datum(_cuspidal_targets(ctx), args.target)
    enumerable = ctx.sys.order <= config.ENUM_CAP
    result = algorithm_A(
        ctx.sys,
        word,
        target,
        mode=args.mode,
        table=ctx.table() if enumerable else None,
        classes=ctx.classes() if enumerable else None,
        threads=ctx.cfg.threads,
        extended=ctx.cfg.extended,
        checkpoint=args.checkpoint,
    )
    doc = {"type": ctx.sys.type_spec, "word": format_word(word, ctx.sys.rank), "target": target.name}
    doc |= result.to_json(ctx.sys.rank, ctx.cfg.timing)
    return doc, pd.DataFrame([doc])


def cmd_cuspdata(ctx: Context, args):
    data = cuspidal_data(ctx.sys, ctx.table(), ctx.classes())
    if args.output:
        save_cuspidal_data(args.output, ctx.sys.type_spec, data)
        config.log("CLI", f"datos cuspidales de {ctx.sys.type_spec} guardados en {args.output}")
    doc = cuspidal_data_json(ctx.sys.type_spec, data)
    rows = [{k: v if not isinstance(v, list) else json.dumps(v, ensure_ascii=False) for k, v in c.items()} for c in doc["classes"]]
    return doc, pd.DataFrame(rows)


def cmd_verify(ctx: Context, args):
    s = ctx.sys
    table, classes = ctx.table(), ctx.classes()
    checks = {}
    checks["order"] = {"expected": str(s.order), "enumerated": str(table.order), "ok": table.order == s.order}
    parab = cuspidal_by_parabolics(s, table, classes)
    checks["cuspidal"] = {
        "count": sum(classes.cuspidal),
        "ok": parab == list(classes.cuspidal),
    }
    verdict = verify_ism(build_iss(s, table, classes), table, classes)
    checks["iss"] = verdict.to_json() | {"ok": verdict.passed}
    catalog = catalog_for(s)
    if catalog.complete:
        theorem = verify_main_theorem(s, catalog, samples=args.samples, seed=args.seed, check_iss=False)
        checks["main_theorem"] = theorem.to_json() | {"ok": theorem.passed}
    if s.type_spec == "H3":
        h3 = h3_example_check()
        checks["h3_example"] = {"reproduced_by": h3["reproduced_by"], "ok": bool(h3["reproduced_by"])}
    passed = all(c["ok"] for c in checks.values())
    doc = {"type": s.type_spec, "classes": classes.count, "passed": passed, "checks": checks}
    frame = pd.DataFrame([{"check": k, "ok": v["ok"]} for k, v in checks.items()])
    return doc, frame


COMMANDS = {
    "group": cmd_group,
    "classes": cmd_classes,
    "sigvec": cmd_sigvec,
    "iss": cmd_iss,
    "dpoly": cmd_dpoly,
    "decompose": cmd_decompose,
    "restrict": cmd_restrict,
    "cuspcheck": cmd_cuspcheck,
    "cuspdata": cmd_cuspdata,
    "verify": cmd_verify,
}


# ===== Parser =====
def _thread_count(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"no es un entero: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"debe ser >= 1 (recibido {n})")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json", help="formato de salida")
    common.add_argument("--labeling", default="table2", help="table2 | example73 | perm:i,j,...")
    common.add_argument("--threads", type=_thread_count, default=config.THREADS, help="hilos para el barrido de candidatos")
    common.add_argument("--extended", action="store_true", default=config.EXTENDED, help="permite barridos grandes")
    common.add_argument("--cache-dir", default=config.CACHE_DIR, help="directorio de cache de tablas")
    common.add_argument("--data-file", default=config.DATA_FILE, help="archivo de representantes cuspidales")
    common.add_argument("--quiet", action="store_true", help="sin diagnosticos en stderr")
    common.add_argument("--timing", action="store_true", help="agrega 'elapsed' a cuspcheck")

    ap = argparse.ArgumentParser(prog="coxsig", description="Polinomios caracteristicos de grupos de Coxeter finitos")
    sub = ap.add_subparsers(dest="command", required=True)

    for name in ("group", "classes"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("type")

    p = sub.add_parser("sigvec", parents=[common])
    p.add_argument("type")
    p.add_argument("--alpha", required=True, help="firma separada por comas, p. ej. 2,4,3")
    p.add_argument("--brute", action="store_true", help="enumeracion directa de palabras")

    p = sub.add_parser("iss", parents=[common])
    p.add_argument("type")
    p.add_argument("--engine", choices=["auto", "greedy", "nss"], default="auto")
    p.add_argument("--signatures", default="", help="firmas dadas, separadas por ';'")
    p.add_argument("--verify", action="store_true", help="recalcula y verifica la ISM")

    p = sub.add_parser("dpoly", parents=[common])
    p.add_argument("type")
    p.add_argument("--rep", required=True, help="reflection | sign | trivial | young:3,1 | file:<ruta>")
    p.add_argument("--tilde", action="store_true", help="d~ con x0 = 1")

    p = sub.add_parser("decompose", parents=[common])
    p.add_argument("type")
    p.add_argument("--poly", required=True, help="ruta a un polinomio JSON")

    p = sub.add_parser("restrict", parents=[common])
    p.add_argument("--from", dest="from_type", required=True)
    p.add_argument("--to", dest="to_type", required=True)
    p.add_argument("--rep", required=True)

    p = sub.add_parser("cuspcheck", parents=[common])
    p.add_argument("type")
    p.add_argument("--word", required=True)
    p.add_argument("--target", type=int, required=True, help="indice de la clase cuspidal")
    p.add_argument("--mode", choices=["auto", "enumeration", "fingerprint"], default="auto")
    p.add_argument("--checkpoint", default=None, help="archivo JSON de avance")

    p = sub.add_parser("cuspdata", parents=[common])
    p.add_argument("type")
    p.add_argument("--output", default=None)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("type")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return ap


# ===== Salida =====
def render(doc, frame: pd.DataFrame | None, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, ensure_ascii=False, indent=2)
    if frame is None:
        raise ValueError(f"el formato {fmt} no esta disponible para este comando")
    if fmt == "csv":
        buf = io.StringIO()
        frame.to_csv(buf, index=frame.index.name is not None)
        return buf.getvalue().rstrip("\n")
    return frame.to_latex(index=frame.index.name is not None)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.quiet:
        config.VERBOSE = False
    t0 = time.time()
    try:
        type_text = getattr(args, "type", None) or ""
        cfg = RunConfig(
            type_spec=normalize_type(type_text),
            command=args.command,
            format=args.format,
            labeling=args.labeling,
            threads=args.threads,
            extended=args.extended,
            cache_dir=args.cache_dir,
            data_file=args.data_file,
            timing=args.timing,
        )
        ctx = Context(cfg, parse_type(cfg.type_spec, cfg.labeling) if cfg.type_spec else None)
        doc, frame = COMMANDS[args.command](ctx, args)
        print(render(doc, frame, cfg.format), file=out)
    except (ValueError, RuntimeError) as e:
        print(f"[CLI] Error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"[CLI] No se pudo leer/escribir: {e}", file=sys.stderr)
        return 1
    config.debug("CLI", f"{args.command} terminado en {time.time() - t0:.2f} s")
    return 0


if __name__ == "__main__":
    sys.exit(run())
