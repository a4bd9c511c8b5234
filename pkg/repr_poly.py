# -*- coding: utf-8 -*-
"""
repr_poly.py
Polinomios caracteristicos multivariados d(S, rho) y d~(S, rho), representaciones
(reflexion, Young natural, diedrales, regular), descomposicion por division y restriccion.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from sympy.utilities.iterables import partitions

import config
from conjugacy import ClassTable, conjugacy_classes
from coxeter_core import (
    CoxeterSystem,
    GroupTable,
    enumerate_group,
    has_matrix_mode,
    parse_type,
    reflection_generators,
    word_to_element,
)
from exact_algebra import (
    ONE,
    ZERO,
    MultiPoly,
    QuadScalar,
    UniPoly,
    poly_det,
    qidentity,
    qmat_equal,
    qmat_inverse,
    qmat_mul,
    qmat_trace,
    qmatrix,
)

REGULAR_MAX = 12

# b_k = 2 + 2 cos(2 pi k / m) para las representaciones diedrales de grado 2
_HALF = Fraction(1, 2)
DIHEDRAL_B = {
    3: [QuadScalar(1)],
    4: [QuadScalar(2)],
    5: [QuadScalar(Fraction(3, 2), _HALF, 5), QuadScalar(Fraction(3, 2), -_HALF, 5)],
    6: [QuadScalar(3), QuadScalar(1)],
    8: [QuadScalar(2, 1, 2), QuadScalar(2), QuadScalar(2, -1, 2)],
    10: [
        QuadScalar(Fraction(5, 2), _HALF, 5),
        QuadScalar(Fraction(3, 2), _HALF, 5),
        QuadScalar(Fraction(5, 2), -_HALF, 5),
        QuadScalar(Fraction(3, 2), -_HALF, 5),
    ],
}


@dataclass
class Representation:
    name: str
    degree: int
    matrices: list

    def __post_init__(self):
        self.matrices = [qmatrix(m) for m in self.matrices]
        for m in self.matrices:
            if len(m) != self.degree or any(len(row) != self.degree for row in m):
                raise ValueError(f"{self.name}: las matrices deben ser {self.degree}x{self.degree}")

    @property
    def generator_count(self) -> int:
        return len(self.matrices)

    def evaluate(self, word):
        if not self.matrices:
            return qidentity(self.degree)
        return word_to_element(self.matrices, word)

    def character(self, word) -> QuadScalar:
        return qmat_trace(self.evaluate(word))

    def check_relations(self, sys: CoxeterSystem) -> bool:
        """rho(s_i)^2 = I y (rho(s_i) rho(s_j))^m_ij = I."""
        if self.generator_count != sys.rank:
            return False
        eye = qidentity(self.degree)
        for i in range(sys.rank):
            for j in range(i, sys.rank):
                base = self.matrices[i] if i == j else qmat_mul(self.matrices[i], self.matrices[j])
                power = eye
                for _ in range(2 if i == j else sys.m(i, j)):
                    power = qmat_mul(power, base)
                if not qmat_equal(power, eye):
                    return False
        return True


@dataclass
class PolyCatalog:
    type_spec: str
    entries: list = field(default_factory=list)
    complete: bool = False

    def names(self) -> list[str]:
        return [rep.name for rep, _ in self.entries]

    def by_name(self, name: str):
        for rep, poly in self.entries:
            if rep.name == name:
                return rep, poly
        raise ValueError(f"{name} no esta en el catalogo de {self.type_spec}")

    def sorted_entries(self) -> list:
        return sorted(self.entries, key=lambda e: (e[0].degree, e[0].name))


# ===== d(S, rho) =====
def d_poly(rep: Representation) -> MultiPoly:
    """det[x0 I + x1 rho(s1) + ... + xn rho(sn)]."""
    n = rep.generator_count
    size = rep.degree
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            coeffs = [ONE if i == j else ZERO] + [m[i][j] for m in rep.matrices]
            row.append(MultiPoly.linear(coeffs))
        rows.append(row)
    return poly_det(rows, n + 1)


def d_tilde(rep: Representation) -> MultiPoly:
    return d_poly(rep).substitute({0: ONE})


# ===== Representaciones basicas =====
def trivial_rep(sys: CoxeterSystem) -> Representation:
    return Representation("trivial", 1, [[[1]] for _ in range(sys.rank)])


def sign_rep(sys: CoxeterSystem) -> Representation:
    return Representation("sign", 1, [[[-1]] for _ in range(sys.rank)])


def linear_characters(sys: CoxeterSystem) -> list[Representation]:
    """Caracteres lineales: constantes en las clases de generadores unidos por enlaces impares."""
    n = sys.rank
    block = list(range(n))

    def find(i):
        while block[i] != i:
            block[i] = block[block[i]]
            i = block[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if sys.m(i, j) % 2:
                block[find(i)] = find(j)
    roots = sorted({find(i) for i in range(n)})
    out = []
    for mask in range(1 << len(roots)):
        signs = [-1 if mask >> roots.index(find(i)) & 1 else 1 for i in range(n)]
        if all(s == 1 for s in signs):
            name = "trivial"
        elif all(s == -1 for s in signs):
            name = "sign"
        else:
            name = "lin:" + "".join("+" if s > 0 else "-" for s in signs)
        out.append(Representation(name, 1, [[[s]] for s in signs]))
    return out


def reflection_rep(sys: CoxeterSystem) -> Representation:
    return Representation("reflection", sys.rank, reflection_generators(sys))


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    if r1.generator_count != r2.generator_count:
        raise ValueError("las representaciones tienen distinto numero de generadores")
    n1, n2 = r1.degree, r2.degree
    mats = []
    for a, b in zip(r1.matrices, r2.matrices):
        m = [[ZERO] * (n1 + n2) for _ in range(n1 + n2)]
        for i in range(n1):
            m[i][:n1] = a[i]
        for i in range(n2):
            m[n1 + i][n1:] = b[i]
        mats.append(m)
    return Representation(f"{r1.name}+{r2.name}", n1 + n2, mats)


def conjugate_rep(rep: Representation, p) -> Representation:
    p = qmatrix(p)
    pinv = qmat_inverse(p)
    return Representation(f"{rep.name}^P", rep.degree, [qmat_mul(qmat_mul(p, m), pinv) for m in rep.matrices])


# ===== Young natural (polinomios de Specht) =====
def check_partition(lam) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if not lam or any(x <= 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"particion invalida: {lam}")
    return lam


def standard_tableaux(lam) -> list[tuple[tuple[int, ...], ...]]:
    lam = check_partition(lam)
    n = sum(lam)
    out = []

    def fill(rows, k):
        if k == n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, length in enumerate(lam):
            if len(rows[i]) < length and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                fill(rows, k + 1)
                rows[i].pop()

    fill([[] for _ in lam], 0)
    return out


def specht_poly(tableau, n: int) -> MultiPoly:
    """Producto sobre columnas de (x_abajo - x_arriba)."""
    out = MultiPoly.constant(ONE, n)
    for c in range(len(tableau[0])):
        col = [row[c] for row in tableau if len(row) > c]
        for i in range(len(col)):
            for j in range(i + 1, len(col)):
                out = out * (MultiPoly.variable(col[j], n) - MultiPoly.variable(col[i], n))
    return out


def _swap_vars(p: MultiPoly, i: int, j: int) -> MultiPoly:
    terms = {}
    for exps, c in p.terms.items():
        e = list(exps)
        e[i], e[j] = e[j], e[i]
        terms[tuple(e)] = c
    return MultiPoly(p.arity, terms)


def _coordinates(basis, target: MultiPoly) -> list[Fraction]:
    monos = sorted(set(target.terms).union(*(b.terms for b in basis)))
    f = len(basis)
    rows = [[b.coefficient(m).a for b in basis] + [target.coefficient(m).a] for m in monos]
    r = 0
    for col in range(f):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            raise RuntimeError("base de Specht dependiente")
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                fct = rows[i][col]
                rows[i] = [a - fct * b for a, b in zip(rows[i], rows[r])]
        r += 1
    if any(rows[i][f] != 0 for i in range(r, len(rows))):
        raise RuntimeError("el polinomio no esta en el modulo de Specht")
    return [rows[i][f] for i in range(f)]


def young_natural(lam) -> Representation:
    """Matrices enteras de s_i = (i, i+1) en la base de polinomios de Specht de tablas estandar."""
    lam = check_partition(lam)
    n = sum(lam)
    tabs = standard_tableaux(lam)
    basis = [specht_poly(t, n) for t in tabs]
    mats = []
    for i in range(n - 1):
        cols = [_coordinates(basis, _swap_vars(b, i, i + 1)) for b in basis]
        mats.append([[cols[c][r] for c in range(len(basis))] for r in range(len(basis))])
    name = "young:" + ",".join(str(x) for x in lam)
    return Representation(name, len(basis), mats)


def partition_list(n: int) -> list[tuple[int, ...]]:
    out = []
    for p in partitions(n):
        out.append(tuple(sorted((k for k, mult in p.items() for _ in range(mult)), reverse=True)))
    return sorted(out, reverse=True)


# ===== Diedrales =====
def dihedral_catalog(m: int) -> list[Representation]:
    """Irreducibles de W(I2(m)) para m en {3,4,5,6,8,10}."""
    if m not in DIHEDRAL_B:
        raise ValueError(f"m={m} no soportado en modo exacto (m en {sorted(DIHEDRAL_B)})")
    sys = parse_type("A2" if m == 3 else "B2" if m == 4 else f"I2({m})")
    reps = linear_characters(sys)
    for k, b in enumerate(DIHEDRAL_B[m], start=1):
        reps.append(Representation(f"dihedral:{k}", 2, [[[-1, 1], [0, 1]], [[1, 0], [b, -1]]]))
    return reps


# ===== Grupo completo =====
def regular_rep(table: GroupTable, limit: int = REGULAR_MAX) -> Representation:
    """Matrices de permutacion de la multiplicacion izquierda, una por elemento no trivial."""
    N = table.order
    if N > limit:
        raise ValueError(f"|G| = {N} excede el tope {limit} de la representacion regular")
    mats = []
    for g in range(N):
        if g == table.identity:
            continue
        m = [[0] * N for _ in range(N)]
        for h in range(N):
            m[table.multiply(g, h)][h] = 1
        mats.append(m)
    return Representation("regular", N, mats)


def over_all_elements(rep: Representation, table: GroupTable) -> Representation:
    mats = [rep.evaluate(table.element_word(g)) for g in range(table.order) if g != table.identity]
    return Representation(f"{rep.name}@G", rep.degree, mats)


def group_determinant_check(table: GroupTable, catalog: PolyCatalog) -> dict:
    """d(G^, lambda_G) = prod_rho d(G^, rho)^deg(rho)."""
    left = d_poly(regular_rep(table))
    right = MultiPoly.constant(ONE, table.order)
    degrees = []
    for rep, _ in catalog.entries:
        right = right * d_poly(over_all_elements(rep, table)) ** rep.degree
        degrees.append(rep.degree)
    holds = left == right
    config.log("REPR", f"determinante de grupo {table.type_spec}: {'se factoriza' if holds else 'NO se factoriza'}")
    return {"holds": holds, "order": table.order, "degrees": degrees, "degree_square_sum": sum(d * d for d in degrees)}


def class_characters(rep: Representation, table: GroupTable, classes: ClassTable) -> list[QuadScalar]:
    return [rep.character(w) for w in classes.min_rep_word]


# ===== Catalogos =====
def catalog_for(sys: CoxeterSystem) -> PolyCatalog:
    comps = sys.components
    reps = None
    complete = False
    if len(comps) == 1 and comps[0].kind == "A":
        n = sys.rank + 1
        reps = [young_natural(lam) for lam in partition_list(n)]
        complete = True
    elif sys.rank == 2 and len(comps) == 1 and sys.m(0, 1) in DIHEDRAL_B:
        reps = dihedral_catalog(sys.m(0, 1))
        complete = True
    else:
        reps = linear_characters(sys)
        complete = all(c.kind == "A" and c.rank == 1 for c in comps)
        if not complete and has_matrix_mode(sys):
            reps.append(reflection_rep(sys))
    catalog = PolyCatalog(sys.type_spec, [(r, d_poly(r)) for r in reps], complete)
    config.log("REPR", f"{sys.type_spec}: catalogo con {len(reps)} representaciones ({'completo' if complete else 'parcial'})")
    return catalog


def representation_from_spec(sys: CoxeterSystem, spec: str) -> Representation:
    text = (spec or "").strip()
    if text == "reflection":
        return reflection_rep(sys)
    if text == "trivial":
        return trivial_rep(sys)
    if text == "sign":
        return sign_rep(sys)
    if text.startswith("young:"):
        lam = check_partition(int(x) for x in text[6:].split(",") if x.strip())
        if not (len(sys.components) == 1 and sys.components[0].kind == "A" and sys.rank == sum(lam) - 1):
            raise ValueError(f"young:{text[6:]} requiere el tipo A{sum(lam) - 1}")
        return young_natural(lam)
    if text.startswith("file:"):
        rep = load_representation(text[5:])
        if rep.generator_count != sys.rank:
            raise ValueError(f"{rep.name}: {rep.generator_count} generadores para rango {sys.rank}")
        return rep
    raise ValueError(f"representacion desconocida: {spec!r}")


def load_representation(path: str) -> Representation:
    """JSON {degree, generators: [[escalares por filas]], name?}."""
    with open(path, "r", encoding="utf-8") as f:
        raw = json.load(f)
    deg = int(raw["degree"])
    mats = []
    for flat in raw["generators"]:
        if len(flat) != deg * deg:
            raise ValueError(f"generador con {len(flat)} entradas; se esperaban {deg * deg}")
        vals = [QuadScalar.from_json(v) for v in flat]
        mats.append([vals[i * deg : (i + 1) * deg] for i in range(deg)])
    return Representation(str(raw.get("name") or path), deg, mats)


# ===== Descomposicion y restriccion =====
def decompose(p: MultiPoly, catalog: PolyCatalog) -> dict[str, int]:
    """Division exacta por los d del catalogo (grado ascendente) hasta quedar la constante 1."""
    if not p.is_homogeneous():
        raise ValueError("el polinomio no es homogeneo")
    rest = p
    out = {}
    for rep, poly in catalog.sorted_entries():
        if poly.arity != p.arity:
            raise ValueError(f"aridad {p.arity} distinta de la del catalogo ({poly.arity})")
        while rest.degree >= poly.degree:
            q = rest.divide_exact(poly)
            if q is None:
                break
            rest = q
            out[rep.name] = out.get(rep.name, 0) + 1
    if rest != MultiPoly.constant(ONE, p.arity):
        raise ValueError(f"no pertenece al semigrupo del catalogo: queda un factor de grado {rest.degree}")
    return out


def restrict_poly(p: MultiPoly, m: int) -> MultiPoly:
    """d(T_m, rho restringida) = d(T_n, rho)(x0, ..., x_{m-1}, 0, ..., 0)."""
    n = p.arity
    if not 1 <= m < n:
        raise ValueError(f"se requiere 1 <= m < {n}; m = {m}")
    zeroed = p.substitute({i: ZERO for i in range(m, n)})
    return zeroed.keep_variables(range(m))


def specialize(p: MultiPoly, point) -> UniPoly:
    """x0 = t y x_i = point[i-1]."""
    return p.substitute({i + 1: QuadScalar(v) for i, v in enumerate(point)}).to_unipoly(0)


def _decompose_images(target: UniPoly, images) -> list[int]:
    order = sorted(range(len(images)), key=lambda i: images[i].degree)
    mults = [0] * len(images)
    rest = target
    for i in order:
        while rest.degree >= images[i].degree:
            q = rest.divide_exact(images[i])
            if q is None:
                break
            rest = q
            mults[i] += 1
    return mults if rest == UniPoly([ONE]) else None


def _decompose_product(polys, mults, catalog: PolyCatalog) -> list[int] | None:
    prod = MultiPoly.constant(ONE, polys[0].arity)
    for p, k in zip(polys, mults):
        if k:
            prod = prod * p ** k
    try:
        found = decompose(prod, catalog)
    except ValueError:
        return None
    return [found.get(name, 0) for name in catalog.names()]


@dataclass
class MainTheoremReport:
    type_spec: str
    catalog_size: int
    complete: bool
    distinct: bool
    duplicates: list
    samples: int
    unique_sums: int
    iss_passed: bool | None
    failures: list = field(default_factory=list)
    exact: bool = False

    @property
    def passed(self) -> bool:
        return self.distinct and self.unique_sums == self.samples and self.iss_passed is not False

    def to_json(self) -> dict:
        return {
            "type": self.type_spec,
            "catalog_size": self.catalog_size,
            "complete": self.complete,
            "distinct": self.distinct,
            "duplicates": self.duplicates,
            "samples": self.samples,
            "unique_sums": self.unique_sums,
            "iss_passed": self.iss_passed,
            "exact": self.exact,
            "passed": self.passed,
            "failures": self.failures,
        }


def verify_main_theorem(
    sys: CoxeterSystem,
    catalog: PolyCatalog | None = None,
    samples: int = 100,
    max_mult: int = 3,
    seed: int = 0,
    check_iss: bool = True,
    table: GroupTable | None = None,
    classes: ClassTable | None = None,
    exact: bool | None = None,
) -> MainTheoremReport:
    """(i) d distintos, (ii) sumas aleatorias se descomponen de forma unica, (iii) ISM invertible.

    Con exact, (ii) descompone el producto multivariado con decompose; si no, trabaja sobre
    una especializacion univariada. Por omision exact vale para rango <= 3.
    """
    exact = sys.rank <= 3 if exact is None else exact
    catalog = catalog or catalog_for(sys)
    names = catalog.names()
    polys = [p for _, p in catalog.entries]
    duplicates = [[names[i], names[j]] for i in range(len(polys)) for j in range(i + 1, len(polys)) if polys[i] == polys[j]]
    failures = [f"d repetido: {a} = {b}" for a, b in duplicates]
    rng = np.random.default_rng(seed)
    images = None
    for _ in range(8):
        point = [int(c) for c in rng.integers(-50, 51, size=sys.rank)]
        images = [specialize(p, point) for p in polys]
        if len(set(images)) == len(images):
            break
    unique = 0
    for s in range(samples):
        mults = [int(k) for k in rng.integers(0, max_mult + 1, size=len(polys))]
        if not any(mults):
            mults[int(rng.integers(len(polys)))] = 1
        if exact:
            got = _decompose_product(polys, mults, catalog)
        else:
            prod = UniPoly([ONE])
            for img, k in zip(images, mults):
                prod = prod * img ** k
            got = _decompose_images(prod, images)
        if got == mults:
            unique += 1
        else:
            failures.append(f"suma {s}: multiplicidades {mults}, recuperadas {got}")
    iss_passed = None
    if check_iss:
        from iss import build_iss, verify_ism

        table = table if table is not None else enumerate_group(sys)
        classes = classes if classes is not None else conjugacy_classes(table, sys)
        verdict = verify_ism(build_iss(sys, table, classes), table, classes)
        iss_passed = verdict.passed
        failures.extend(verdict.failures)
    report = MainTheoremReport(sys.type_spec, len(polys), catalog.complete, not duplicates, duplicates, samples, unique, iss_passed, failures, exact)
    config.log("REPR", f"{sys.type_spec}: factorizacion de d {'verificada' if report.passed else 'con fallas'} ({unique}/{samples} sumas)")
    return report


# ===== Sucesion por particiones en S_n =====
def partition_signature(mu) -> tuple[int, ...]:
    """alpha(mu) = (1^{p1-1}, 0, 1^{p2-1}, 0, ..., 1^{pr-1})."""
    mu = check_partition(mu)
    out = []
    for k, p in enumerate(mu):
        out.extend([1] * (p - 1))
        if k < len(mu) - 1:
            out.append(0)
    return tuple(out)


def partition_iss(n: int):
    """Firmas alpha(mu) de S_n y su ISM diagonal diag((n - k)!), k = numero de partes."""
    if n < 2:
        raise ValueError("partition_iss requiere n >= 2")
    from iss import report_from_signatures

    sys = parse_type(f"A{n - 1}")
    table = enumerate_group(sys)
    classes = conjugacy_classes(table, sys)
    parts = partition_list(n)
    return parts, report_from_signatures(sys, table, classes, [partition_signature(mu) for mu in parts])
