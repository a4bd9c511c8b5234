# -*- coding: utf-8 -*-
"""
cuspidal.py
Busqueda de bandera cuspidal: clases ciclicas, operadores de insercion, conjuntos candidatos
y busqueda de la bandera Flag para pares de clases cuspidales empatadas.
"""
from __future__ import annotations

import itertools
import json
import math
import os
import threading
import time
from dataclasses import dataclass
from itertools import islice

from sympy import divisors, totient
from sympy.utilities.iterables import multiset_permutations

import config
from conjugacy import (
    ClassTable,
    CuspidalDatum,
    check_fingerprint_type,
    conjugacy_classes,
    element_char_poly,
    target_char_poly,
)
from coxeter_core import (
    CoxeterSystem,
    GroupTable,
    enumerate_group,
    format_word,
    word_from_table2,
    word_to_matrix,
    word_to_table2,
)
from exact_algebra import ONE
from signatures import multinomial, signature_of, signature_vector

CHUNK = 4096
CHECKPOINT_EVERY = 1_000_000


class InsertOp:
    """Inserta `block` a la izquierda de `count(alpha)` letras elegidas entre `targets`."""

    def __init__(self, name: str, block, targets, count):
        self.name = name
        self.block = tuple(block)
        self.targets = frozenset(targets)
        self.count = count

    def __repr__(self):
        return f"I_{self.name}"


# Cadenas con la numeracion de los diagramas (letras desde 0): letras base y operadores en orden
_H4_F4_CHAIN = (
    (1, 2),
    (
        InsertOp("1", (0,), {1}, lambda a: a[0]),
        InsertOp("4", (3,), {2}, lambda a: a[3]),
    ),
)
INSERTION_CHAINS = {
    "F4": _H4_F4_CHAIN,
    "H4": _H4_F4_CHAIN,
    "E8": (
        (3, 5),
        (
            InsertOp("3", (2,), {3}, lambda a: a[2] - a[0]),
            InsertOp("13", (0, 2), {3}, lambda a: a[0]),
            InsertOp("2", (1,), {3}, lambda a: a[1]),
            InsertOp("5", (4,), {3, 5}, lambda a: a[4]),
            InsertOp("7", (6,), {5}, lambda a: a[6] - a[7]),
            InsertOp("87", (7, 6), {5}, lambda a: a[7]),
        ),
    ),
}


@dataclass
class FlagResult:
    flag: int
    candidates_checked: int
    total: int
    mode: str
    match: tuple | None = None
    elapsed: float | None = None

    def to_json(self, rank: int = 9, timing: bool = False) -> dict:
        out = {"flag": self.flag, "candidates_checked": self.candidates_checked, "total": self.total, "mode": self.mode}
        if self.match is not None:
            out["match"] = format_word(self.match, rank)
        if timing and self.elapsed is not None:
            out["elapsed"] = round(self.elapsed, 3)
        return out


# ===== Clases ciclicas =====
def min_rotation(word) -> tuple:
    w = tuple(word)
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def rotations(word) -> set:
    w = tuple(word)
    return {w[i:] + w[:i] for i in range(len(w))} if w else {w}


def necklace_count(alpha) -> int:
    """Burnside: (1/L) sum_{d | g} phi(d) * multinomial(alpha / d)."""
    counts = [a for a in alpha if a]
    L = sum(counts)
    if L == 0:
        return 1
    g = math.gcd(*counts)
    total = sum(int(totient(d)) * multinomial([a // d for a in counts]) for d in divisors(g))
    return total // L


def cyclic_reps(alpha) -> list[tuple]:
    """Un representante por clase ciclica: la rotacion lexicograficamente minima."""
    letters = [i for i, a in enumerate(alpha) for _ in range(a)]
    if not letters:
        return [()]
    reps = [tuple(w) for w in multiset_permutations(letters) if tuple(w) == min_rotation(w)]
    return sorted(reps)


# ===== Operadores de insercion =====
def insert_before(u, targets, block, k: int) -> list[tuple]:
    u = tuple(u)
    block = tuple(block)
    positions = [i for i, x in enumerate(u) if x in set(targets)]
    if k < 0 or k > len(positions):
        raise ValueError(f"no se pueden elegir {k} de {len(positions)} letras objetivo")
    out = []
    for chosen in itertools.combinations(positions, k):
        marks = set(chosen)
        word = []
        for i, x in enumerate(u):
            if i in marks:
                word.extend(block)
            word.append(x)
        out.append(tuple(word))
    return out


def _chain_for(sys: CoxeterSystem):
    chain = INSERTION_CHAINS.get(sys.type_spec) if sys.is_irreducible else None
    if chain is None:
        raise ValueError(f"no hay cadena de insercion para {sys.type_spec} (solo {sorted(INSERTION_CHAINS)})")
    return chain


def _check_alpha(sys: CoxeterSystem, alpha2) -> list[int]:
    base, ops = _chain_for(sys)
    counts = []
    for op in ops:
        k = op.count(alpha2)
        available = sum(alpha2[t] for t in op.targets)
        if k < 0 or k > available:
            raise ValueError(
                f"alpha={tuple(alpha2)} viola las desigualdades de I_{op.name} "
                f"({k} inserciones, {available} letras objetivo): no hay palabra de longitud minima"
            )
        counts.append(k)
    return counts


def candidate_set(sys: CoxeterSystem, alpha, necklaces=None):
    """Genera perezosamente I_k ... I_1 (E^cyc) en orden: collar, luego combinaciones lex anidadas."""
    base, ops = _chain_for(sys)
    alpha2 = [0] * sys.rank
    for i, a in enumerate(alpha):
        alpha2[word_to_table2(sys, (i,))[0]] = int(a)
    counts = _check_alpha(sys, alpha2)
    if necklaces is None:
        restricted = [alpha2[i] if i in base else 0 for i in range(sys.rank)]
        necklaces = cyclic_reps(restricted)
    else:
        necklaces = [word_to_table2(sys, u) for u in necklaces]

    def expand(word, depth):
        if depth == len(ops):
            yield word_from_table2(sys, word)
            return
        op = ops[depth]
        for nxt in insert_before(word, op.targets, op.block, counts[depth]):
            yield from expand(nxt, depth + 1)

    for u in necklaces:
        yield from expand(tuple(u), 0)


def candidate_count(sys: CoxeterSystem, alpha) -> int:
    base, ops = _chain_for(sys)
    alpha2 = [0] * sys.rank
    for i, a in enumerate(alpha):
        alpha2[word_to_table2(sys, (i,))[0]] = int(a)
    counts = _check_alpha(sys, alpha2)
    total = necklace_count([alpha2[i] for i in base])
    for op, k in zip(ops, counts):
        total *= math.comb(sum(alpha2[t] for t in op.targets), k)
    return total


# ===== Busqueda de bandera =====
def _scan_block(block, check, threads: int):
    """Primer indice del bloque que cumple check; reparto por saltos entre hilos."""
    if threads <= 1 or len(block) < 2 * threads:
        return next((i for i, cand in enumerate(block) if check(cand)), None)
    best = [None]
    lock = threading.Lock()

    def worker(t):
        for i in range(t, len(block), threads):
            with lock:
                if best[0] is not None and best[0] < i:
                    return
            if check(block[i]):
                with lock:
                    if best[0] is None or i < best[0]:
                        best[0] = i
                return

    pool = [threading.Thread(target=worker, args=(t,), daemon=True) for t in range(threads)]
    for th in pool:
        th.start()
    for th in pool:
        th.join()
    return best[0]


def _read_checkpoint(path: str, key: dict) -> int:
    if not path or not os.path.exists(path):
        return 0
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
        if all(data.get(k) == v for k, v in key.items()):
            config.log("CUSP", f"reanudando desde el candidato {data['next_index']}")
            return int(data["next_index"])
        config.log("CUSP", f"checkpoint {path} de otra corrida; se ignora")
    except Exception as e:
        config.log("CUSP", f"No se pudo leer el checkpoint {path}: {e}")
    return 0


def _write_checkpoint(path: str, key: dict, next_index: int) -> None:
    try:
        with open(path, "w", encoding="utf-8") as f:
            json.dump({**key, "next_index": next_index}, f)
    except Exception as e:
        config.log("CUSP", f"No se pudo escribir el checkpoint {path}: {e}")


def _resolve_mode(sys: CoxeterSystem, mode: str) -> str:
    if mode not in {"auto", "fingerprint", "enumeration"}:
        raise ValueError(f"modo desconocido: {mode}")
    if mode == "auto":
        return "enumeration" if sys.type_spec == "F4" else "fingerprint"
    return mode


def algorithm_A(
    sys: CoxeterSystem,
    w,
    target: CuspidalDatum,
    mode: str = "auto",
    table: GroupTable | None = None,
    classes: ClassTable | None = None,
    threads: int | None = None,
    extended: bool | None = None,
    checkpoint: str | None = None,
    checkpoint_every: int = CHECKPOINT_EVERY,
) -> FlagResult:
    """Flag = 1 si algun candidato cae en la clase objetivo; Flag = 0 certifica E_alpha vacio en ella."""
    t0 = time.time()
    threads = config.THREADS if threads is None else max(1, int(threads))
    extended = config.EXTENDED if extended is None else extended
    word = tuple(w)
    if len(word) != target.min_length:
        raise ValueError(f"|w| = {len(word)} distinto de l({target.name}) = {target.min_length}")
    mode = _resolve_mode(sys, mode)
    alpha = signature_of(word, sys.rank)
    total = candidate_count(sys, alpha)
    if total > config.CANDIDATE_CAP and not extended:
        raise RuntimeError(f"{total} candidatos superan el tope {config.CANDIDATE_CAP}; use --extended")

    if mode == "fingerprint":
        check_fingerprint_type(sys)
        wanted = target_char_poly(sys, target)

        def check(cand):
            return word_to_matrix(sys, cand).char_poly() == wanted
    else:
        if table is None:
            table = enumerate_group(sys)
        if classes is None:
            classes = conjugacy_classes(table, sys)
        if target.class_id is not None:
            goal = target.class_id
        elif target.rep_word is not None:
            goal = classes.class_of_word(table, target.rep_word)
        else:
            raise RuntimeError(f"falta la palabra representante de {target.name} para el modo enumeracion")

        def check(cand):
            return classes.class_of[table.word_to_element(cand)] == goal

    key = {"type": sys.type_spec, "word": format_word(word, sys.rank), "target": target.gp_index}
    start = _read_checkpoint(checkpoint, key) if checkpoint else 0
    config.log("CUSP", f"{sys.type_spec} {key['word']} vs {target.name}: {total} candidatos, modo {mode}, {threads} hilo(s)")
    stream = islice(candidate_set(sys, alpha), start, None)
    index = start
    since = 0
    hit = None
    while True:
        block = list(islice(stream, CHUNK))
        if not block:
            break
        local = _scan_block(block, check, threads)
        if local is not None:
            hit = (index + local, block[local])
            break
        index += len(block)
        since += len(block)
        if checkpoint and since >= checkpoint_every:
            _write_checkpoint(checkpoint, key, index)
            since = 0
    if checkpoint and hit is None:
        _write_checkpoint(checkpoint, key, index)
    elapsed = time.time() - t0
    if hit is None:
        config.log("CUSP", f"Flag=0 tras {total} candidatos ({elapsed:.2f} s)")
        return FlagResult(0, total, total, mode, None, elapsed)
    config.log("CUSP", f"Flag=1 en el candidato {hit[0] + 1}: {format_word(hit[1], sys.rank)}")
    return FlagResult(1, hit[0] + 1, total, mode, hit[1], elapsed)


def oracle_flag(table: GroupTable, classes: ClassTable, alpha, target_class: int) -> int:
    """Clasifica todo E_alpha con la programacion dinamica sobre el grupo completo."""
    return int(signature_vector(table, classes, alpha)[target_class] != 0)


def candidate_profile(sys: CoxeterSystem, w) -> list[dict]:
    """Polinomios caracteristicos distintos de los candidatos cuspidales (con conteo)."""
    alpha = signature_of(tuple(w), sys.rank)
    seen = {}
    for cand in candidate_set(sys, alpha):
        p = word_to_matrix(sys, cand).char_poly()
        if p(ONE):
            entry = seen.setdefault(p, {"char_poly": str(p), "count": 0, "first": format_word(cand, sys.rank)})
            entry["count"] += 1
    config.log("CUSP", f"{sys.type_spec}: {len(seen)} polinomios cuspidales distintos entre los candidatos")
    own = element_char_poly(sys, w)
    return [dict(v, own=(p == own)) for p, v in seen.items()]
