# -*- coding: utf-8 -*-
"""
coxeter_core.py
Sistemas de Coxeter finitos: registro de tipos, representacion de reflexion,
palabras y elementos, enumeracion completa del grupo, parabolicos y productos directos.
"""
from __future__ import annotations

import json
import math
import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np

import config
from exact_algebra import (
    ONE,
    ZERO,
    QuadScalar,
    RingMatrix,
    qidentity,
    qmat_mul,
    ring_matmul,
)

CACHE_FORMAT_VERSION = 1

_ATOM_RE = re.compile(r"^(?:([ABD])(\d+)|E([678])|F(4)|H([34])|I2\((\d+)\))$")

_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("H", 3): 120,
    ("H", 4): 14400,
}


# ===== Tipos =====
@dataclass(frozen=True)
class Component:
    kind: str
    rank: int
    indices: tuple[int, ...]
    m: int = 0

    @property
    def name(self) -> str:
        if self.kind == "I":
            return f"I2({self.m})"
        return f"{self.kind}{self.rank}"

    @property
    def order(self) -> int:
        n = self.rank
        if self.kind == "A":
            return math.factorial(n + 1)
        if self.kind == "B":
            return 2 ** n * math.factorial(n)
        if self.kind == "D":
            return 2 ** (n - 1) * math.factorial(n)
        if self.kind == "I":
            return 2 * self.m
        return _EXCEPTIONAL_ORDERS[(self.kind, n)]

    @property
    def is_exceptional(self) -> bool:
        return self.kind in {"E", "F", "H"}


@dataclass(frozen=True)
class CoxeterSystem:
    coxeter_matrix: tuple[tuple[int, ...], ...]
    type_spec: str
    components: tuple[Component, ...]
    node_labels: tuple[str, ...] = ()
    labeling: str = "table2"

    @property
    def rank(self) -> int:
        return len(self.coxeter_matrix)

    def m(self, i: int, j: int) -> int:
        return self.coxeter_matrix[i][j]

    @property
    def is_irreducible(self) -> bool:
        return len(self.components) == 1

    @property
    def order(self) -> int:
        return math.prod(c.order for c in self.components)

    @property
    def cache_key(self) -> str:
        return f"{self.type_spec}__{self.labeling}".replace(":", "-").replace(",", "-").replace("(", "").replace(")", "")


def _check_matrix(m) -> None:
    n = len(m)
    for i in range(n):
        if len(m[i]) != n:
            raise ValueError("la matriz de Coxeter no es cuadrada")
        if m[i][i] != 1:
            raise ValueError("la diagonal de la matriz de Coxeter debe ser 1")
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("la matriz de Coxeter no es simetrica")
            if i != j and m[i][j] < 2:
                raise ValueError(f"m[{i + 1}][{j + 1}] debe ser >= 2")


def _atom_matrix(kind: str, n: int, mval: int = 0) -> list[list[int]]:
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]

    def bond(i, j, v=3):
        m[i][j] = m[j][i] = v

    if kind in {"A", "B", "F", "H"}:
        for i in range(n - 1):
            bond(i, i + 1)
    if kind == "B":
        bond(n - 2, n - 1, 4)
    elif kind == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif kind == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif kind == "F":
        bond(1, 2, 4)
    elif kind == "H":
        bond(0, 1, 5)
    elif kind == "I":
        bond(0, 1, mval)
    return m


def _classify(matrix, indices: tuple[int, ...]) -> Component:
    """Nombra una componente irreducible a partir de su submatriz de Coxeter."""
    r = len(indices)
    sub = [[matrix[i][j] for j in indices] for i in indices]
    if r == 1:
        return Component("A", 1, indices)
    if r == 2:
        v = sub[0][1]
        if v == 3:
            return Component("A", 2, indices)
        if v == 4:
            return Component("B", 2, indices)
        return Component("I", 2, indices, v)
    bonds = [sub[i][j] for i in range(r) for j in range(i + 1, r) if sub[i][j] > 2]
    degree = [sum(1 for j in range(r) if j != i and sub[i][j] > 2) for i in range(r)]
    if max(bonds) > 5 or len(bonds) != r - 1 or max(degree) > 3:
        raise ValueError(f"diagrama no finito: {sub}")
    if 5 in bonds:
        if r in (3, 4) and bonds.count(5) == 1 and max(degree) <= 2:
            ends = [i for i in range(r) if degree[i] == 1]
            if any(sub[e][j] == 5 for e in ends for j in range(r)):
                return Component("H", r, indices)
        raise ValueError(f"diagrama no finito: {sub}")
    if 4 in bonds:
        if bonds.count(4) > 1 or max(degree) > 2:
            raise ValueError(f"diagrama no finito: {sub}")
        ends = [i for i in range(r) if degree[i] == 1]
        four = next((i, j) for i in range(r) for j in range(i + 1, r) if sub[i][j] == 4)
        if any(e in four for e in ends):
            return Component("B", r, indices)
        if r == 4:
            return Component("F", 4, indices)
        raise ValueError(f"diagrama no finito: {sub}")
    branch = [i for i in range(r) if degree[i] == 3]
    if not branch:
        return Component("A", r, indices)
    if len(branch) > 1:
        raise ValueError(f"diagrama no finito: {sub}")
    c = branch[0]
    arms = []
    for start in (j for j in range(r) if j != c and sub[c][j] > 2):
        length, prev, cur = 1, c, start
        while True:
            nxt = [j for j in range(r) if j not in (prev, cur) and sub[cur][j] > 2]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return Component("D", r, indices)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return Component("E", r, indices)
    raise ValueError(f"diagrama no finito: {sub}")


def _components_of(matrix) -> tuple[Component, ...]:
    n = len(matrix)
    seen = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        stack, members = [start], []
        seen.add(start)
        while stack:
            i = stack.pop()
            members.append(i)
            for j in range(n):
                if j not in seen and matrix[i][j] > 2:
                    seen.add(j)
                    stack.append(j)
        comps.append(_classify(matrix, tuple(sorted(members))))
    return tuple(comps)


def _labeling_perm(labeling: str, n: int) -> list[int]:
    lab = (labeling or "table2").strip()
    if lab == "table2":
        return list(range(n))
    if lab == "example73":
        return list(range(n - 1, -1, -1))
    if lab.startswith("perm:"):
        perm = [int(x) - 1 for x in lab[5:].split(",") if x.strip()]
        if sorted(perm) != list(range(n)):
            raise ValueError(f"permutacion de etiquetas invalida para rango {n}: {lab}")
        return perm
    raise ValueError(f"etiquetado desconocido: {lab}")


def system_from_matrix(matrix, labeling: str = "table2", type_spec: str | None = None) -> CoxeterSystem:
    m = tuple(tuple(int(v) for v in row) for row in matrix)
    _check_matrix(m)
    comps = _components_of(m)
    spec = type_spec or ("x".join(c.name for c in comps) if comps else "trivial")
    return CoxeterSystem(m, spec, comps, tuple(str(i + 1) for i in range(len(m))), labeling)


def parse_type(spec: str, labeling: str = "table2") -> CoxeterSystem:
    text = (spec or "").replace(" ", "").upper()
    if not text:
        raise ValueError("especificacion de tipo vacia")
    blocks = []
    for atom in text.split("X"):
        hit = _ATOM_RE.match(atom)
        if not hit:
            raise ValueError(f"atomo desconocido: {atom!r}")
        kind, num, e, f, h, mval = hit.groups()
        if kind:
            n = int(num)
            minimum = {"A": 1, "B": 2, "D": 4}[kind]
            if n < minimum:
                raise ValueError(f"{kind}{n} no es un tipo valido ({kind}_n requiere n >= {minimum})")
            blocks.append(_atom_matrix(kind, n))
        elif e:
            blocks.append(_atom_matrix("E", int(e)))
        elif f:
            blocks.append(_atom_matrix("F", 4))
        elif h:
            blocks.append(_atom_matrix("H", int(h)))
        else:
            mv = int(mval)
            if mv < 5:
                raise ValueError(f"I2({mv}) requiere m >= 5 (use A1xA1, A2 o B2)")
            blocks.append(_atom_matrix("I", 2, mv))
    size = sum(len(b) for b in blocks)
    big = [[1 if i == j else 2 for j in range(size)] for i in range(size)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                big[off + i][off + j] = v
        off += len(b)
    perm = _labeling_perm(labeling, size)
    relabeled = [[big[perm[i]][perm[j]] for j in range(size)] for i in range(size)]
    canonical = "x".join(a for a in text.split("X"))
    return system_from_matrix(relabeled, labeling=labeling, type_spec=canonical)


def direct_product(a: CoxeterSystem, b: CoxeterSystem) -> CoxeterSystem:
    n, k = a.rank, b.rank
    big = [[1 if i == j else 2 for j in range(n + k)] for i in range(n + k)]
    for i in range(n):
        for j in range(n):
            big[i][j] = a.m(i, j)
    for i in range(k):
        for j in range(k):
            big[n + i][n + j] = b.m(i, j)
    specs = [s for s in (a.type_spec, b.type_spec) if s != "trivial"]
    return system_from_matrix(big, type_spec="x".join(specs) if specs else "trivial")


def subsystem(sys: CoxeterSystem, subset) -> CoxeterSystem:
    J = tuple(subset)
    sub = [[sys.m(i, j) for j in J] for i in J]
    return system_from_matrix(sub)


def parabolic_subsets(sys: CoxeterSystem) -> list[tuple[tuple[int, ...], CoxeterSystem]]:
    """Todos los J propios (incluido el vacio), por tamano descendente y luego lex."""
    n = sys.rank
    subsets = []
    for mask in range((1 << n) - 1):
        subsets.append(tuple(i for i in range(n) if mask >> i & 1))
    subsets.sort(key=lambda J: (-len(J), J))
    return [(J, subsystem(sys, J)) for J in subsets]


def maximal_parabolics(sys: CoxeterSystem) -> list[tuple[tuple[int, ...], CoxeterSystem]]:
    out = []
    for s in range(sys.rank):
        J = tuple(i for i in range(sys.rank) if i != s)
        out.append((J, subsystem(sys, J)))
    return out


# ===== Representacion de reflexion =====
def matrix_discriminant(sys: CoxeterSystem) -> int:
    bonds = {sys.m(i, j) for i in range(sys.rank) for j in range(sys.rank) if i != j}
    bad = sorted(v for v in bonds if v > 5)
    if bad:
        raise ValueError(f"m={bad[0]} no es representable en Q(sqrt d); use el modo diedral")
    if 4 in bonds and 5 in bonds:
        raise ValueError("enlaces 4 y 5 mezclados: discriminantes incompatibles")
    if 5 in bonds:
        return 5
    if 4 in bonds:
        return 2
    return 1


def has_matrix_mode(sys: CoxeterSystem) -> bool:
    try:
        matrix_discriminant(sys)
    except ValueError:
        return False
    return True


def bilinear_form(sys: CoxeterSystem) -> list[list[QuadScalar]]:
    """B(e_i, e_j) = -2 cos(pi / m_ij)."""
    values = {1: QuadScalar(2), 2: ZERO, 3: QuadScalar(-1), 4: -QuadScalar.sqrt2(), 5: -QuadScalar.phi()}
    matrix_discriminant(sys)
    return [[values[sys.m(i, j)] for j in range(sys.rank)] for i in range(sys.rank)]


def reflection_generators(sys: CoxeterSystem) -> list[list[list[QuadScalar]]]:
    """sigma_i(x) = x - B(x, e_i) e_i; solo cambia la fila i de la identidad."""
    B = bilinear_form(sys)
    n = sys.rank
    gens = []
    for i in range(n):
        sigma = qidentity(n)
        sigma[i] = [(ONE if k == i else ZERO) - B[k][i] for k in range(n)]
        gens.append(sigma)
    return gens


@lru_cache(maxsize=64)
def ring_generators(sys: CoxeterSystem) -> tuple[int, tuple[RingMatrix, ...]]:
    d = matrix_discriminant(sys)
    return d, tuple(RingMatrix.from_quad(g, d) for g in reflection_generators(sys))


# ===== Palabras =====
def check_word(w, rank: int) -> tuple[int, ...]:
    word = tuple(int(x) for x in w)
    for x in word:
        if not 0 <= x < rank:
            raise ValueError(f"letra {x + 1} fuera de rango (rango {rank})")
    return word


def parse_word(text: str, rank: int) -> tuple[int, ...]:
    raw = (text or "").strip()
    if raw in {"", "e", "ε"}:
        return ()
    parts = raw.split(",") if "," in raw else list(raw)
    return check_word([int(p) - 1 for p in parts if p.strip()], rank)


def format_word(w, rank: int = 9) -> str:
    if rank > 9:
        return ",".join(str(x + 1) for x in w)
    return "".join(str(x + 1) for x in w)


def word_from_table2(sys: CoxeterSystem, w) -> tuple[int, ...]:
    """Palabra escrita con la numeracion de los diagramas, pasada al etiquetado de sys."""
    perm = _labeling_perm(sys.labeling, sys.rank)
    inverse = {t: i for i, t in enumerate(perm)}
    return tuple(inverse[x] for x in check_word(w, sys.rank))


def word_to_table2(sys: CoxeterSystem, w) -> tuple[int, ...]:
    perm = _labeling_perm(sys.labeling, sys.rank)
    return tuple(perm[x] for x in check_word(w, sys.rank))


def word_to_matrix(sys: CoxeterSystem, w) -> RingMatrix:
    d, gens = ring_generators(sys)
    word = check_word(w, sys.rank)
    out = RingMatrix.identity(sys.rank, d)
    for x in word:
        out = out @ gens[x]
    return out


def word_to_element(t, w):
    """phi(w): producto de generadores en el orden de la palabra."""
    if isinstance(t, GroupTable):
        return t.word_to_element(w)
    gens = list(t)
    word = check_word(w, len(gens))
    if gens and isinstance(gens[0], RingMatrix):
        out = RingMatrix.identity(gens[0].size, gens[0].d)
        for x in word:
            out = out @ gens[x]
        return out
    out = qidentity(len(gens[0]) if gens else 0)
    for x in word:
        out = qmat_mul(out, gens[x])
    return out


# ===== Tabla del grupo =====
@dataclass
class GroupTable:
    type_spec: str
    rank: int
    gen_mult: np.ndarray
    left_mult: np.ndarray
    lengths: np.ndarray
    support: np.ndarray
    identity: int = 0
    elements: list | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return int(self.lengths.shape[0])

    def word_to_element(self, w) -> int:
        g = self.identity
        for x in check_word(w, self.rank):
            g = int(self.gen_mult[g, x])
        return g

    def descent(self, g: int) -> int:
        lg = self.lengths[g]
        for i in range(self.rank):
            if self.lengths[self.left_mult[g, i]] < lg:
                return i
        return -1

    def element_word(self, g: int) -> tuple[int, ...]:
        """Palabra reducida lexicograficamente minima."""
        word = []
        while self.lengths[g] > 0:
            i = self.descent(g)
            word.append(i)
            g = int(self.left_mult[g, i])
        return tuple(word)

    def multiply(self, g: int, h: int) -> int:
        for x in self.element_word(h):
            g = int(self.gen_mult[g, x])
        return g

    def inverse(self, g: int) -> int:
        return self.word_to_element(tuple(reversed(self.element_word(g))))

    def in_parabolic(self, g: int, subset) -> bool:
        mask = sum(1 << i for i in subset)
        return int(self.support[g]) & ~mask == 0


def _bfs_abstract(identity, right_fn, left_fn, rank: int):
    index = {identity: 0}
    elems = [identity]
    lengths = [0]
    support = [0]
    right = []
    frontier = [0]
    depth = 0
    while frontier:
        nxt = []
        for x in frontier:
            row = []
            for i in range(rank):
                y_el = right_fn(elems[x], i)
                y = index.get(y_el)
                if y is None:
                    y = len(elems)
                    index[y_el] = y
                    elems.append(y_el)
                    lengths.append(depth + 1)
                    support.append(support[x] | (1 << i))
                    nxt.append(y)
                row.append(y)
            while len(right) <= x:
                right.append(None)
            right[x] = row
        frontier = nxt
        depth += 1
    left = [[index[left_fn(el, i)] for i in range(rank)] for el in elems]
    return elems, np.array(right, dtype=np.int64).reshape(len(elems), rank), np.array(left, dtype=np.int64).reshape(len(elems), rank), lengths, support


class DihedralElement(NamedTuple):
    """rho^rotation * s1^reflected en I2(m), con s1 = (0, 1) y s2 = (1, 1)."""

    rotation: int
    reflected: bool

    def compose(self, other: "DihedralElement", m: int) -> "DihedralElement":
        k = self.rotation - other.rotation if self.reflected else self.rotation + other.rotation
        return DihedralElement(k % m, self.reflected != other.reflected)


def _dihedral_table(m: int):
    gens = (DihedralElement(0, True), DihedralElement(1, True))
    return _bfs_abstract(
        DihedralElement(0, False),
        lambda el, i: el.compose(gens[i], m),
        lambda el, i: gens[i].compose(el, m),
        2,
    )


def _matrix_table(sys: CoxeterSystem):
    d, gens = ring_generators(sys)
    n = sys.rank
    ga = [g.a for g in gens]
    gb = [g.b for g in gens]
    eye = RingMatrix.identity(n, d)
    index = {eye.key(): 0}
    mats_a = [eye.a]
    mats_b = [eye.b]
    lengths = [0]
    support = [0]
    right = {}
    frontier = [0]
    depth = 0
    while frontier:
        fa = np.stack([mats_a[x] for x in frontier])
        fb = np.stack([mats_b[x] for x in frontier])
        nxt = []
        for i in range(n):
            pa, pb = ring_matmul(fa, fb, ga[i], gb[i], d)
            for pos, x in enumerate(frontier):
                key = pa[pos].tobytes() + pb[pos].tobytes()
                y = index.get(key)
                if y is None:
                    y = len(mats_a)
                    index[key] = y
                    mats_a.append(pa[pos])
                    mats_b.append(pb[pos])
                    lengths.append(depth + 1)
                    support.append(support[x] | (1 << i))
                    nxt.append(y)
                right[(x, i)] = y
        frontier = nxt
        depth += 1
    total = len(mats_a)
    all_a = np.stack(mats_a)
    all_b = np.stack(mats_b)
    gen_mult = np.empty((total, n), dtype=np.int64)
    left = np.empty((total, n), dtype=np.int64)
    for (x, i), y in right.items():
        gen_mult[x, i] = y
    for i in range(n):
        pa, pb = ring_matmul(ga[i], gb[i], all_a, all_b, d)
        for x in range(total):
            left[x, i] = index[pa[x].tobytes() + pb[x].tobytes()]
    elems = [RingMatrix(all_a[x], all_b[x], d) for x in range(total)]
    return elems, gen_mult, left, lengths, support


def _component_table(sys: CoxeterSystem, comp: Component):
    local = subsystem(sys, comp.indices)
    if comp.kind == "I":
        return _dihedral_table(comp.m)
    return _matrix_table(local)


def _product_table(sys: CoxeterSystem) -> GroupTable:
    n = sys.rank
    if n == 0:
        z = np.zeros((1, 0), dtype=np.int64)
        return GroupTable(sys.type_spec, 0, z, z.copy(), np.zeros(1, dtype=np.int64), np.zeros(1, dtype=np.int64), 0, [()])
    parts = []
    for comp in sys.components:
        elems, right, left, lengths, support = _component_table(sys, comp)
        gmask = np.array(
            [sum(1 << comp.indices[b] for b in range(comp.rank) if s >> b & 1) for s in support],
            dtype=np.int64,
        )
        parts.append((comp, elems, right, left, np.array(lengths, dtype=np.int64), gmask))
    if len(parts) == 1:
        comp, elems, right, left, lengths, gmask = parts[0]
        gen_mult = np.empty_like(right)
        left_mult = np.empty_like(left)
        for b, g in enumerate(comp.indices):
            gen_mult[:, g] = right[:, b]
            left_mult[:, g] = left[:, b]
        return GroupTable(sys.type_spec, n, gen_mult, left_mult, lengths, gmask, 0, elems)
    total = math.prod(len(p[1]) for p in parts)
    ids = np.arange(total, dtype=np.int64)
    gen_mult = np.empty((total, n), dtype=np.int64)
    left_mult = np.empty((total, n), dtype=np.int64)
    lengths = np.zeros(total, dtype=np.int64)
    support = np.zeros(total, dtype=np.int64)
    stride = 1
    for comp, elems, right, left, clen, gmask in parts:
        size = len(elems)
        digit = (ids // stride) % size
        lengths += clen[digit]
        support |= gmask[digit]
        for b, g in enumerate(comp.indices):
            gen_mult[:, g] = ids + (right[digit, b] - digit) * stride
            left_mult[:, g] = ids + (left[digit, b] - digit) * stride
        stride *= size
    return GroupTable(sys.type_spec, n, gen_mult, left_mult, lengths, support, 0, None)


def _cache_path(sys: CoxeterSystem, cache_dir: str) -> str:
    return os.path.join(cache_dir, f"{sys.cache_key}.npz")


def _load_cached(sys: CoxeterSystem, path: str) -> GroupTable | None:
    try:
        with np.load(path, allow_pickle=False) as data:
            header = json.loads(str(data["header"]))
            if header.get("format_version") != CACHE_FORMAT_VERSION:
                raise RuntimeError(f"version de cache {header.get('format_version')}")
            if header.get("type_spec") != sys.type_spec or header.get("coxeter_matrix") != [list(r) for r in sys.coxeter_matrix]:
                raise RuntimeError("la cabecera no corresponde al tipo pedido")
            if header.get("order") != sys.order:
                raise RuntimeError("orden incorrecto en la cabecera")
            return GroupTable(
                sys.type_spec,
                sys.rank,
                data["gen_mult"].astype(np.int64),
                data["left_mult"].astype(np.int64),
                data["lengths"].astype(np.int64),
                data["support"].astype(np.int64),
            )
    except Exception as e:
        config.log("CACHE", f"No se pudo leer {path}: {e}. Se recalcula.")
        return None


def _save_cached(sys: CoxeterSystem, table: GroupTable, path: str) -> None:
    header = {
        "format_version": CACHE_FORMAT_VERSION,
        "type_spec": sys.type_spec,
        "labeling": sys.labeling,
        "coxeter_matrix": [list(r) for r in sys.coxeter_matrix],
        "order": table.order,
    }
    try:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        np.savez(
            path,
            header=np.array(json.dumps(header)),
            gen_mult=table.gen_mult,
            left_mult=table.left_mult,
            lengths=table.lengths,
            support=table.support,
        )
    except Exception as e:
        config.log("CACHE", f"No se pudo escribir {path}: {e}")


def enumerate_group(sys: CoxeterSystem, cap: int | None = None, cache_dir: str | None = None) -> GroupTable:
    cap = config.ENUM_CAP if cap is None else cap
    if sys.order > cap:
        raise RuntimeError(f"tipo demasiado grande para enumerar: |W({sys.type_spec})| = {sys.order} > tope {cap}")
    cache_dir = config.CACHE_DIR if cache_dir is None else cache_dir
    path = _cache_path(sys, cache_dir) if cache_dir else ""
    if path and os.path.exists(path):
        table = _load_cached(sys, path)
        if table is not None:
            config.debug("CACHE", f"{sys.type_spec}: tabla leida de {path}")
            return table
    table = _product_table(sys)
    if table.order != sys.order:
        raise RuntimeError(f"enumeracion inconsistente: {table.order} != {sys.order}")
    config.log("ENUM", f"{sys.type_spec}: {table.order} elementos, longitud maxima {int(table.lengths.max())}")
    if path:
        _save_cached(sys, table, path)
    return table
