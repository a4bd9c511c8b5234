# -*- coding: utf-8 -*-
"""
iss.py
Sucesiones de firmas independientes (ISS) y sus matrices (ISM):
voraz triangular, producto directo, ensamblado NSS/CSS y verificacion.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import config
from conjugacy import ClassTable, conjugacy_classes, cuspidal_data, tie_word, tie_words_for
from coxeter_core import (
    CoxeterSystem,
    GroupTable,
    enumerate_group,
    format_word,
    maximal_parabolics,
    parse_type,
    parse_word,
    subsystem,
)
from exact_algebra import bareiss_det
from signatures import multinomial, signature_of, signature_stream, signature_vector, splice

GREEDY_KINDS = {"A", "B", "D", "I"}

# Matriz de referencia H3: firmas, palabras de las columnas (etiquetado invertido) y filas esperadas
H3_EXAMPLE_SIGNATURES = [
    (0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 0),
    (1, 1, 1), (0, 2, 2), (1, 2, 2), (2, 4, 3), (3, 6, 6),
]
H3_EXAMPLE_CLASS_WORDS = ["", "3", "23", "13", "12", "123", "2323", "12323", "123212323", "123213232132323"]
H3_EXAMPLE_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 2, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 2, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 6, 0, 0, 0, 0],
    [4, 0, 0, 0, 0, 0, 2, 0, 0, 0],
    [0, 20, 0, 0, 0, 0, 0, 10, 0, 0],
    [0, 738, 0, 0, 0, 468, 0, 36, 18, 0],
    [0, 194450, 0, 0, 0, 24690, 0, 192000, 9240, 40],
]


@dataclass
class IssReport:
    type_spec: str
    signatures: list
    class_order: list
    matrix: list
    class_words: list
    method: str = ""
    triangular: bool = field(init=False)
    diagonal_nonzero: bool = field(init=False)

    def __post_init__(self):
        self.triangular = is_lower_triangular(self.matrix)
        self.diagonal_nonzero = diagonal_nonzero(self.matrix)

    @property
    def rank(self) -> int:
        return len(self.signatures[0]) if self.signatures else 0

    def class_names(self) -> list[str]:
        return [f"C({format_word(w, self.rank)})" if w else "C(ε)" for w in self.class_words]

    def diagonal(self) -> list[int]:
        return [self.matrix[i][i] for i in range(len(self.matrix))]

    def to_json(self) -> dict:
        return {
            "type": self.type_spec,
            "class_order": self.class_names(),
            "signatures": [list(s) for s in self.signatures],
            "matrix": [[str(v) for v in row] for row in self.matrix],
            "triangular": self.triangular,
            "diagonal_nonzero": self.diagonal_nonzero,
        }


@dataclass
class NssCssParts:
    nss_signatures: list = field(default_factory=list)
    css_signatures: list = field(default_factory=list)
    non_cuspidal_order: list = field(default_factory=list)
    cuspidal_order: list = field(default_factory=list)
    nss_rows: list = field(default_factory=list)
    css_rows: list = field(default_factory=list)


@dataclass
class IsmVerdict:
    recomputed: bool
    triangular: bool
    diagonal_nonzero: bool
    determinant: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.recomputed and self.triangular and self.diagonal_nonzero and self.determinant != 0

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "recomputed": self.recomputed,
            "triangular": self.triangular,
            "diagonal_nonzero": self.diagonal_nonzero,
            "determinant": str(self.determinant),
            "failures": list(self.failures),
        }


def is_lower_triangular(matrix) -> bool:
    return all(v == 0 for i, row in enumerate(matrix) for v in row[i + 1 :])


def diagonal_nonzero(matrix) -> bool:
    return all(i < len(row) and row[i] != 0 for i, row in enumerate(matrix))


# ===== Voraz triangular =====
def greedy_triangular(stream, r: int, type_spec: str = "", classes: ClassTable | None = None) -> IssReport:
    """Acepta un vector si su soporte agrega exactamente una clase nueva; para en r filas."""
    signatures, rows, order = [], [], []
    covered = set()
    for beta, vec in stream:
        support = {j for j, v in enumerate(vec) if v}
        new = support - covered
        if len(new) != 1:
            continue
        c = new.pop()
        signatures.append(tuple(beta))
        rows.append(list(vec))
        order.append(c)
        covered |= support
        config.debug("ISS", f"{type_spec}: acepta {tuple(beta)} -> clase {c}")
        if len(order) == r:
            break
    if len(order) < r:
        missing = sorted(set(range(r)) - covered)
        raise RuntimeError(f"flujo agotado en {type_spec}: {len(order)}/{r} filas; clases sin cubrir {missing}")
    words = [classes.min_rep_word[c] for c in order] if classes is not None else [() for _ in order]
    matrix = [[row[c] for c in order] for row in rows]
    return IssReport(type_spec, signatures, order, matrix, words, method="voraz")


def greedy_iss(sys: CoxeterSystem, table: GroupTable, classes: ClassTable) -> IssReport:
    top = max(classes.min_length) if classes.count else 0
    try:
        return greedy_triangular(signature_stream(table, classes, top), classes.count, sys.type_spec, classes)
    except RuntimeError as e:
        config.log("ISS", f"{sys.type_spec}: {e}; se extiende hasta |beta| = {2 * top}")
    return greedy_triangular(signature_stream(table, classes, 2 * top), classes.count, sys.type_spec, classes)


# ===== Producto directo =====
def iss_direct_product(a: IssReport, b: IssReport) -> IssReport:
    """Firmas alpha_i || beta_j (i externo), matriz M_ij * (X kron Y)."""
    ra = a.rank
    signatures, rows = [], []
    for i, alpha in enumerate(a.signatures):
        for j, beta in enumerate(b.signatures):
            scale = multinomial((sum(alpha), sum(beta)))
            signatures.append(splice(alpha, beta))
            rows.append([scale * x * y for x in a.matrix[i] for y in b.matrix[j]])
    words = [wa + tuple(x + ra for x in wb) for wa in a.class_words for wb in b.class_words]
    order = [(ca, cb) for ca in a.class_order for cb in b.class_order]
    specs = [s for s in (a.type_spec, b.type_spec) if s and s != "trivial"]
    return IssReport("x".join(specs) or "trivial", signatures, order, rows, words, method="producto")


def trivial_report() -> IssReport:
    return IssReport("trivial", [()], [0], [[1]], [()], method="trivial")


def _product_iss(sys: CoxeterSystem, table: GroupTable, classes: ClassTable) -> IssReport:
    coords = []
    acc = trivial_report()
    for comp in sys.components:
        sub = subsystem(sys, comp.indices)
        acc = iss_direct_product(acc, build_iss(sub))
        coords.extend(comp.indices)
    signatures = []
    for s in acc.signatures:
        alpha = [0] * sys.rank
        for k, a in enumerate(s):
            alpha[coords[k]] = a
        signatures.append(tuple(alpha))
    words = [tuple(coords[x] for x in w) for w in acc.class_words]
    order = [classes.class_of_word(table, w) for w in words]
    if len(set(order)) != len(order):
        raise RuntimeError(f"clases del producto repetidas en {sys.type_spec}")
    return IssReport(sys.type_spec, signatures, order, acc.matrix, [classes.min_rep_word[c] for c in order], method="producto")


# ===== NSS / CSS =====
def nss_from_parabolics(sys: CoxeterSystem, table: GroupTable, classes: ClassTable, parts: NssCssParts | None = None) -> NssCssParts:
    """Levanta las ISS de los parabolicos maximales; la primera elevacion que toca una clase la fija."""
    parts = parts or NssCssParts()
    for J, sub in maximal_parabolics(sys):
        local = build_iss(sub)
        # psi: clase local -> clase de W que la contiene
        fuse = {lc: classes.class_of_word(table, tuple(J[x] for x in w)) for lc, w in zip(local.class_order, local.class_words)}
        for sig, lc, lrow in zip(local.signatures, local.class_order, local.matrix):
            big = fuse[lc]
            if big in parts.non_cuspidal_order:
                continue
            alpha = [0] * sys.rank
            for k, a in enumerate(sig):
                alpha[J[k]] = a
            row = [0] * classes.count
            for col, v in zip(local.class_order, lrow):
                row[fuse[col]] += v
            parts.nss_signatures.append(tuple(alpha))
            parts.non_cuspidal_order.append(big)
            parts.nss_rows.append(row)
    missing = [c for c in range(classes.count) if not classes.cuspidal[c] and c not in parts.non_cuspidal_order]
    if missing:
        raise RuntimeError(f"NSS incompleta en {sys.type_spec}: clases no cuspidales sin cubrir {missing}")
    config.log("ISS", f"{sys.type_spec}: NSS con {len(parts.nss_signatures)} firmas")
    return parts


def css_from_lengths(sys: CoxeterSystem, table: GroupTable, classes: ClassTable, data=None, parts: NssCssParts | None = None) -> NssCssParts:
    """Firma del representante minimo por clase cuspidal; en cada empate, la palabra de desempate va primero."""
    parts = parts or NssCssParts()
    data = data if data is not None else cuspidal_data(sys, table, classes)
    by_index = {d.gp_index: d for d in data}
    ties = [t for t in tie_words_for(sys) if t.own in by_index and t.partner in by_index]
    lengths = {}
    for d in data:
        lengths.setdefault(d.min_length, []).append(d.gp_index)
    for same in lengths.values():
        if len(same) > 1 and not any({t.own, t.partner} == set(same) for t in ties):
            names = "/".join(f"Cus{i}" for i in same)
            raise RuntimeError(f"{sys.type_spec}: par empatado {names} sin palabra de desempate verificada")
    order = sorted(by_index)
    for t in ties:
        i, j = order.index(t.own), order.index(t.partner)
        if i > j:
            order[i], order[j] = order[j], order[i]
    for idx in order:
        d = by_index[idx]
        tie = next((t for t in ties if t.own == idx), None)
        word = tie_word(sys, tie) if tie else d.rep_word
        alpha = signature_of(word, sys.rank)
        row = signature_vector(table, classes, alpha)
        if tie:
            partner = by_index[tie.partner]
            if row[partner.class_id] != 0:
                raise RuntimeError(f"{sys.type_spec}: la palabra {tie.word} no separa Cus{tie.own} de Cus{tie.partner}")
            config.log("ISS", f"{sys.type_spec}: Cus{tie.own} antes que Cus{tie.partner} con alpha={alpha}")
        parts.css_signatures.append(alpha)
        parts.cuspidal_order.append(d.class_id)
        parts.css_rows.append(row)
    return parts


def assemble_iss(parts: NssCssParts, classes: ClassTable, type_spec: str = "") -> IssReport:
    order = parts.non_cuspidal_order + parts.cuspidal_order
    rows = parts.nss_rows + parts.css_rows
    matrix = [[row[c] for c in order] for row in rows]
    words = [classes.min_rep_word[c] for c in order]
    return IssReport(type_spec, parts.nss_signatures + parts.css_signatures, order, matrix, words, method="nss_css")


def report_from_signatures(sys: CoxeterSystem, table: GroupTable, classes: ClassTable, signatures) -> IssReport:
    """Matriz de una lista de firmas dada; columnas en el orden de primera cobertura."""
    rows = [signature_vector(table, classes, alpha) for alpha in signatures]
    order = []
    for row in rows:
        new = sorted(j for j, v in enumerate(row) if v and j not in order)
        if new:
            order.append(new[0])
    order += [c for c in range(classes.count) if c not in order]
    matrix = [[row[c] for c in order] for row in rows]
    words = [classes.min_rep_word[c] for c in order]
    return IssReport(sys.type_spec, [tuple(a) for a in signatures], order, matrix, words, method="dada")


# ===== Construccion y verificacion =====
def build_iss(sys: CoxeterSystem, table: GroupTable | None = None, classes: ClassTable | None = None, engine: str = "auto") -> IssReport:
    if engine not in {"auto", "greedy", "nss"}:
        raise ValueError(f"motor desconocido: {engine}")
    if sys.rank == 0:
        return trivial_report()
    if table is None:
        table = enumerate_group(sys)
    if classes is None:
        classes = conjugacy_classes(table, sys)
    if not sys.is_irreducible:
        report = _product_iss(sys, table, classes)
    elif engine == "greedy" or (engine == "auto" and sys.components[0].kind in GREEDY_KINDS):
        report = greedy_iss(sys, table, classes)
    else:
        parts = nss_from_parabolics(sys, table, classes)
        css_from_lengths(sys, table, classes, parts=parts)
        report = assemble_iss(parts, classes, sys.type_spec)
    config.log("ISS", f"{sys.type_spec}: {len(report.signatures)} firmas ({report.method}), triangular={report.triangular}")
    return report


def verify_ism(report: IssReport, table: GroupTable, classes: ClassTable) -> IsmVerdict:
    """Recalcula cada fila con la programacion dinamica y revisa triangularidad y determinante."""
    failures = []
    order = list(report.class_order)
    if sorted(order) != list(range(classes.count)):
        failures.append("el orden de clases no es una permutacion de todas las clases")
        order = [c for c in order if isinstance(c, int) and 0 <= c < classes.count]
    matrix = []
    for i, alpha in enumerate(report.signatures):
        vec = signature_vector(table, classes, alpha)
        matrix.append([vec[c] for c in order])
    recomputed = matrix == [list(row) for row in report.matrix]
    if not recomputed:
        bad = [i + 1 for i, (a, b) in enumerate(zip(matrix, report.matrix)) if a != list(b)]
        failures.append(f"filas que no coinciden al recalcular: {bad or 'tamano distinto'}")
    square = len(matrix) == classes.count and all(len(row) == classes.count for row in matrix)
    if not square:
        failures.append(f"matriz {len(matrix)}x{len(order)} para {classes.count} clases")
    triangular = square and is_lower_triangular(matrix)
    diag = square and diagonal_nonzero(matrix)
    det = bareiss_det(matrix) if square else 0
    if square and not triangular:
        failures.append("la matriz no es triangular inferior")
    if square and not diag:
        failures.append("hay ceros en la diagonal")
    if square and det == 0:
        failures.append("determinante nulo")
    return IsmVerdict(recomputed, triangular, diag, det, failures)


def h3_example_check(labelings=("table2", "example73")) -> dict:
    """Reproduce la matriz de referencia H3 con cada etiquetado y dice cual la reproduce."""
    out = {"labelings": {}, "reproduced_by": []}
    for lab in labelings:
        sys = parse_type("H3", lab)
        table = enumerate_group(sys)
        classes = conjugacy_classes(table, sys)
        cols = [classes.class_of_word(table, parse_word(w, 3)) for w in H3_EXAMPLE_CLASS_WORDS]
        distinct = len(set(cols)) == len(cols)
        rows = []
        for alpha in H3_EXAMPLE_SIGNATURES:
            vec = signature_vector(table, classes, alpha)
            rows.append([vec[c] for c in cols])
        mismatches = sum(1 for r, e in zip(rows, H3_EXAMPLE_MATRIX) for a, b in zip(r, e) if a != b)
        ok = distinct and mismatches == 0
        out["labelings"][lab] = {"distinct_columns": distinct, "mismatches": mismatches, "matches": ok, "matrix": rows}
        if ok:
            out["reproduced_by"].append(lab)
        config.log("ISS", f"H3 etiquetado {lab}: {'reproduce' if ok else 'no reproduce'} la matriz ({mismatches} diferencias)")
    return out
