# -*- coding: utf-8 -*-
"""
conjugacy.py
Clases de conjugacion, longitudes minimas, clases cuspidales y huellas p_C(lambda).
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

import config
from coxeter_core import (
    CoxeterSystem,
    GroupTable,
    format_word,
    has_matrix_mode,
    maximal_parabolics,
    parse_word,
    word_from_table2,
    word_to_matrix,
)
from exact_algebra import ONE, QuadScalar, UniPoly

FINGERPRINT_TYPES = {"H3", "H4", "E6", "E7", "E8"}


class TieWord(NamedTuple):
    word: str
    own: int
    partner: int


# Palabras de desempate (numeracion de los diagramas): la clase de `word` es la `own`-esima
TIE_WORDS = {
    "F4": [TieWord("1213213234", 5, 4)],
    "H4": [TieWord("1212132121321234", 7, 8)],
    "E8": [
        TieWord("1231423454657658", 5, 6),
        TieWord("1234234542345654765876", 9, 10),
        TieWord("123142314542345654765876", 11, 12),
        TieWord("12314231454231456542345678", 13, 14),
        TieWord("12314231545231436542314354265431765423456878", 22, 21),
        TieWord("1231423154523165456237654567238765456782345678", 23, 24),
    ],
}


@dataclass
class ClassTable:
    class_of: np.ndarray
    classes: list
    min_length: list
    min_rep_word: list
    cuspidal: list
    char_poly: list
    rank: int

    @property
    def count(self) -> int:
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def name(self, c: int) -> str:
        w = self.min_rep_word[c]
        return f"C({format_word(w, self.rank)})" if w else "C(ε)"

    def names(self) -> list[str]:
        return [self.name(c) for c in range(self.count)]

    def class_of_word(self, table: GroupTable, w) -> int:
        return int(self.class_of[table.word_to_element(w)])

    def cuspidal_ids(self) -> list[int]:
        return [c for c in range(self.count) if self.cuspidal[c]]


@dataclass
class CuspidalDatum:
    type_spec: str
    gp_index: int
    name: str
    min_length: int
    rep_word: tuple | None = None
    char_poly: UniPoly | None = None
    class_id: int | None = None

    def __post_init__(self):
        if self.rep_word is None and self.char_poly is None:
            raise ValueError(f"dato cuspidal {self.type_spec}#{self.gp_index} sin palabra ni polinomio")


# ===== Clases de conjugacion =====
def conjugacy_classes(table: GroupTable, sys: CoxeterSystem | None = None) -> ClassTable:
    n = table.rank
    N = table.order
    conj = np.empty((N, n), dtype=np.int64)
    for i in range(n):
        conj[:, i] = table.left_mult[table.gen_mult[:, i], i]
    raw = np.full(N, -1, dtype=np.int64)
    orbits = []
    for start in range(N):
        if raw[start] >= 0:
            continue
        cid = len(orbits)
        raw[start] = cid
        stack = [start]
        members = []
        while stack:
            x = stack.pop()
            members.append(x)
            for y in conj[x]:
                if raw[y] < 0:
                    raw[y] = cid
                    stack.append(int(y))
        orbits.append(np.array(sorted(members), dtype=np.int64))

    info = []
    for members in orbits:
        lens = table.lengths[members]
        lmin = int(lens.min())
        words = [table.element_word(int(g)) for g in members[lens == lmin]]
        info.append((lmin, min(words), members))
    info.sort(key=lambda t: (t[0], t[1]))

    class_of = np.empty(N, dtype=np.int64)
    for cid, (_, _, members) in enumerate(info):
        class_of[members] = cid

    full = (1 << n) - 1
    by_support = [bool(np.all(table.support[m] == full)) for _, _, m in info]
    polys = [None] * len(info)
    cuspidal = list(by_support)
    if sys is not None and n > 0 and has_matrix_mode(sys):
        for cid, (_, word, _) in enumerate(info):
            polys[cid] = word_to_matrix(sys, word).char_poly()
        cuspidal = [bool(p(ONE)) for p in polys]
        if cuspidal != by_support:
            raise RuntimeError("criterio p_C(1) != 0 y soporte completo no coinciden")
    config.log("CLASES", f"{table.type_spec}: {len(info)} clases, {sum(cuspidal)} cuspidales")
    return ClassTable(
        class_of=class_of,
        classes=[m for _, _, m in info],
        min_length=[lmin for lmin, _, _ in info],
        min_rep_word=[w for _, w, _ in info],
        cuspidal=cuspidal,
        char_poly=polys,
        rank=n,
    )


def parabolic_elements(table: GroupTable, subset) -> np.ndarray:
    """Elementos de W_J por clausura desde la identidad."""
    seen = {table.identity}
    stack = [table.identity]
    J = list(subset)
    while stack:
        x = stack.pop()
        for j in J:
            y = int(table.gen_mult[x, j])
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return np.array(sorted(seen), dtype=np.int64)


def cuspidal_by_parabolics(sys: CoxeterSystem, table: GroupTable, classes: ClassTable) -> list[bool]:
    hit = np.zeros(classes.count, dtype=bool)
    for J, _ in maximal_parabolics(sys):
        hit[np.unique(classes.class_of[parabolic_elements(table, J)])] = True
    return [not bool(h) for h in hit]


# ===== Huellas p_g(lambda) =====
def element_char_poly(sys: CoxeterSystem, w) -> UniPoly:
    return word_to_matrix(sys, w).char_poly()


def is_cuspidal(sys: CoxeterSystem, w) -> bool:
    return bool(element_char_poly(sys, w)(ONE))


def target_char_poly(sys: CoxeterSystem, target: CuspidalDatum) -> UniPoly:
    if target.char_poly is not None:
        return target.char_poly
    if target.rep_word is not None:
        return element_char_poly(sys, target.rep_word)
    raise RuntimeError(f"faltan polinomio y palabra para {target.name}")


def check_fingerprint_type(sys: CoxeterSystem) -> None:
    names = [c.name for c in sys.components]
    if "F4" in names:
        raise ValueError("huella ambigua para F4: Cus4 y Cus5 comparten (λ+1)(λ^3+1); use modo enumeracion")
    if len(names) != 1 or names[0] not in FINGERPRINT_TYPES:
        raise ValueError(f"la huella solo identifica clases cuspidales en {sorted(FINGERPRINT_TYPES)}, no en {sys.type_spec}")


def cuspidal_fingerprint_match(sys: CoxeterSystem, w, target: CuspidalDatum) -> bool:
    check_fingerprint_type(sys)
    return element_char_poly(sys, w) == target_char_poly(sys, target)


# ===== Datos cuspidales =====
def tie_word(sys: CoxeterSystem, tie: TieWord) -> tuple[int, ...]:
    return word_from_table2(sys, parse_word(tie.word, sys.rank))


def tie_words_for(sys: CoxeterSystem) -> list[TieWord]:
    return TIE_WORDS.get(sys.type_spec, []) if sys.is_irreducible else []


def cuspidal_data(sys: CoxeterSystem, table: GroupTable, classes: ClassTable) -> list[CuspidalDatum]:
    """Indices de clases cuspidales ordenados por longitud minima, desempates segun TIE_WORDS."""
    cusp = sorted(classes.cuspidal_ids(), key=lambda c: (classes.min_length[c], classes.min_rep_word[c]))
    ties = tie_words_for(sys)
    order = {}
    pos = 0
    while pos < len(cusp):
        group = [c for c in cusp[pos:] if classes.min_length[c] == classes.min_length[cusp[pos]]]
        slots = list(range(pos + 1, pos + len(group) + 1))
        assigned = dict(zip(slots, group))
        if len(group) > 1:
            tie = next((t for t in ties if {t.own, t.partner} == set(slots)), None)
            own_class = classes.class_of_word(table, tie_word(sys, tie)) if tie else None
            if tie and own_class in group and len(group) == 2:
                assigned = {tie.own: own_class, tie.partner: next(c for c in group if c != own_class)}
            else:
                config.log("CUSP", f"{sys.type_spec}: empate en posiciones {slots} sin palabra verificada; orden lexicografico")
        order.update(assigned)
        pos += len(group)
    data = []
    for idx in sorted(order):
        c = order[idx]
        data.append(
            CuspidalDatum(
                type_spec=sys.type_spec,
                gp_index=idx,
                name=f"Cus{idx}",
                min_length=classes.min_length[c],
                rep_word=tuple(classes.min_rep_word[c]),
                char_poly=classes.char_poly[c],
                class_id=c,
            )
        )
    return data


def find_datum(data, gp_index: int) -> CuspidalDatum:
    for d in data:
        if d.gp_index == gp_index:
            return d
    raise RuntimeError(f"no hay clase cuspidal con indice {gp_index}")


def load_cuspidal_data(path: str) -> dict[str, list[CuspidalDatum]]:
    with open(path, "r", encoding="utf-8") as f:
        raw = json.load(f)
    blocks = raw if isinstance(raw, list) else raw.get("types", [raw])
    out = {}
    for block in blocks:
        type_spec = str(block["type"]).upper()
        items = []
        for c in block.get("classes", []):
            rep = c.get("rep_word")
            poly = c.get("char_poly")
            items.append(
                CuspidalDatum(
                    type_spec=type_spec,
                    gp_index=int(c["gp_index"]),
                    name=str(c.get("name") or f"Cus{c['gp_index']}"),
                    min_length=int(c["min_length"]),
                    rep_word=tuple(int(x) - 1 for x in rep) if rep is not None else None,
                    char_poly=UniPoly([QuadScalar.from_json(s) for s in poly]) if poly is not None else None,
                )
            )
        out[type_spec] = sorted(items, key=lambda d: d.gp_index)
    return out


def cuspidal_data_json(type_spec: str, data) -> dict:
    classes = []
    for d in data:
        item = {"gp_index": d.gp_index, "name": d.name, "min_length": d.min_length}
        if d.rep_word is not None:
            item["rep_word"] = [x + 1 for x in d.rep_word]
        if d.char_poly is not None:
            item["char_poly"] = d.char_poly.to_json()
        classes.append(item)
    return {"type": type_spec, "classes": classes}


def save_cuspidal_data(path: str, type_spec: str, data) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(cuspidal_data_json(type_spec, data), f, ensure_ascii=False, indent=2)


def data_for_type(type_spec: str, path: str | None = None) -> list[CuspidalDatum] | None:
    path = path or config.DATA_FILE
    if not path or not os.path.exists(path):
        return None
    return load_cuspidal_data(path).get(type_spec.upper())
