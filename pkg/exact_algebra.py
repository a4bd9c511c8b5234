# -*- coding: utf-8 -*-
"""
exact_algebra.py
Aritmetica exacta en Q(sqrt d) (d = 1, 2, 5), polinomios uni y multivariados,
determinantes de matrices polinomiales y la via rapida con matrices enteras Z[theta].
"""
from __future__ import annotations

from fractions import Fraction
from operator import add

import numpy as np

DISCRIMINANTS = (1, 2, 5)


# ===== Escalares a + b*sqrt(d) =====
def _join_d(d1: int, d2: int) -> int:
    if d1 == 1:
        return d2
    if d2 == 1 or d1 == d2:
        return d1
    raise ValueError(f"discriminantes incompatibles: sqrt({d1}) y sqrt({d2})")


class QuadScalar:
    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 1):
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        if d not in DISCRIMINANTS:
            raise ValueError(f"discriminante no soportado: {d}")
        if d == 1 and b != 0:
            raise ValueError("con d=1 la parte irracional debe ser 0")
        if b == 0:
            d = 1
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def phi(cls) -> "QuadScalar":
        return cls(Fraction(1, 2), Fraction(1, 2), 5)

    @classmethod
    def sqrt2(cls) -> "QuadScalar":
        return cls(0, 1, 2)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadScalar":
        return QuadScalar(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division por cero en Q(sqrt d)")
        return QuadScalar(self.a / n, -self.b / n, self.d)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadScalar(self.a + other.a, self.b + other.b, _join_d(self.d, other.d))

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadScalar(self.a - other.a, self.b - other.b, _join_d(self.d, other.d))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = _join_d(self.d, other.d)
        return QuadScalar(
            self.a * other.a + d * self.b * other.b,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        _join_d(self.d, other.d)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadScalar(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b and (self.b == 0 or self.d == other.d)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * (self.d ** 0.5)

    def __repr__(self):
        return f"QuadScalar({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        irr = f"sqrt{self.d}" if mag == 1 else f"{mag}*sqrt{self.d}"
        if self.a == 0:
            return irr if sign == "+" else f"-{irr}"
        return f"({self.a} {sign} {irr})"

    def to_json(self) -> dict:
        return {
            "num": str(self.a.numerator),
            "den": str(self.a.denominator),
            "irr_num": str(self.b.numerator),
            "irr_den": str(self.b.denominator),
            "d": self.d,
        }

    @classmethod
    def from_json(cls, obj) -> "QuadScalar":
        if isinstance(obj, (int, str)):
            return cls(Fraction(obj))
        a = Fraction(int(obj["num"]), int(obj.get("den", "1")))
        b = Fraction(int(obj.get("irr_num", "0")), int(obj.get("irr_den", "1")))
        return cls(a, b, int(obj.get("d", 1)) if b else 1)


def _coerce(x):
    if isinstance(x, QuadScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadScalar(x)
    return NotImplemented


ZERO = QuadScalar(0)
ONE = QuadScalar(1)


# ===== Matrices de escalares =====
def qmatrix(rows) -> list[list[QuadScalar]]:
    return [[x if isinstance(x, QuadScalar) else QuadScalar(x) for x in row] for row in rows]


def qidentity(n: int) -> list[list[QuadScalar]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def qmat_mul(x, y):
    n, k, m = len(x), len(y), len(y[0]) if y else 0
    if x and len(x[0]) != k:
        raise ValueError("dimensiones incompatibles en el producto")
    out = []
    for i in range(n):
        row = []
        xi = x[i]
        for j in range(m):
            acc = ZERO
            for t in range(k):
                if xi[t] and y[t][j]:
                    acc = acc + xi[t] * y[t][j]
            row.append(acc)
        out.append(row)
    return out


def qmat_add(x, y):
    return [[p + q for p, q in zip(rx, ry)] for rx, ry in zip(x, y)]


def qmat_scale(c, x):
    return [[c * p for p in row] for row in x]


def qmat_trace(x) -> QuadScalar:
    acc = ZERO
    for i in range(len(x)):
        acc = acc + x[i][i]
    return acc


def qmat_equal(x, y) -> bool:
    return len(x) == len(y) and all(rx == ry for rx, ry in zip(x, y))


def qmat_inverse(x):
    n = len(x)
    work = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(x)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            raise ValueError("matriz singular")
        work[col], work[piv] = work[piv], work[col]
        inv = work[col][col].inverse()
        work[col] = [v * inv for v in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [v - f * p for v, p in zip(work[r], work[col])]
    return [row[n:] for row in work]


def qmat_det(x) -> QuadScalar:
    n = len(x)
    work = [list(row) for row in x]
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = -det
        det = det * work[col][col]
        inv = work[col][col].inverse()
        for r in range(col + 1, n):
            if work[r][col]:
                f = work[r][col] * inv
                work[r] = [v - f * p for v, p in zip(work[r], work[col])]
    return det


# ===== Polinomios en lambda =====
class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, QuadScalar) else QuadScalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> QuadScalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                if y:
                    out[i + j] = out[i + j] + x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division por el polinomio cero")
        rem = list(self.coeffs)
        quot = [ZERO] * max(0, len(rem) - len(other.coeffs) + 1)
        inv = other.leading().inverse()
        dq = other.degree
        for shift in range(len(quot) - 1, -1, -1):
            c = rem[shift + dq] * inv
            quot[shift] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[shift + j] = rem[shift + j] - c * y
        return UniPoly(quot), UniPoly(rem)

    def divide_exact(self, other: "UniPoly"):
        q, r = divmod(self, other)
        return q if r.is_zero() else None

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, QuadScalar)):
            return self == UniPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("λ" if k == 1 else f"λ^{k}")
            parts.append(_term_text(c, mono))
        return _join_terms(parts)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> "UniPoly":
        return cls([QuadScalar.from_json(c) for c in obj])


def _term_text(c: QuadScalar, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    return f"{c}*{mono}"


def _join_terms(parts: list[str]) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# ===== Polinomios en x0..xn =====
def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        self.arity = int(arity)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.arity:
                raise ValueError(f"exponente {exps} no tiene aridad {self.arity}")
            c = c if isinstance(c, QuadScalar) else QuadScalar(c)
            if c:
                clean[exps] = c
        self.terms = clean

    @classmethod
    def constant(cls, c, arity: int) -> "MultiPoly":
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, i: int, arity: int) -> "MultiPoly":
        exps = [0] * arity
        exps[i] = 1
        return cls(arity, {tuple(exps): ONE})

    @classmethod
    def linear(cls, coeffs) -> "MultiPoly":
        arity = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            exps = [0] * arity
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(arity, terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exps) -> QuadScalar:
        return self.terms.get(tuple(exps), ZERO)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def leading_term(self):
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def _check(self, other: "MultiPoly"):
        if other.arity != self.arity:
            raise ValueError(f"aridades distintas: {self.arity} y {other.arity}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.arity)
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms[exps] + c if exps in terms else c
        return MultiPoly(self.arity, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.arity)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
            return MultiPoly(self.arity, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                p = c1 * c2
                terms[e] = terms[e] + p if e in terms else p
        return MultiPoly(self.arity, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.constant(ONE, self.arity)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def divide_exact(self, other: "MultiPoly"):
        """Division larga en orden graded-lex; None si no divide."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division por el polinomio cero")
        lead_e, lead_c = other.leading_term()
        inv = lead_c.inverse()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem, key=_grlex_key)
            shift = tuple(x - y for x, y in zip(e, lead_e))
            if min(shift) < 0:
                return None
            c = rem[e] * inv
            quot[shift] = c
            for e2, c2 in other.terms.items():
                t = tuple(map(add, shift, e2))
                v = rem.get(t, ZERO) - c * c2
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MultiPoly(self.arity, quot)

    def substitute(self, values: dict) -> "MultiPoly":
        """Sustituye x_i por escalares; la aridad no cambia."""
        terms = {}
        for exps, c in self.terms.items():
            e = list(exps)
            for i, v in values.items():
                if e[i]:
                    c = c * (v if isinstance(v, QuadScalar) else QuadScalar(v)) ** e[i]
                    e[i] = 0
            if not c:
                continue
            e = tuple(e)
            terms[e] = terms[e] + c if e in terms else c
        return MultiPoly(self.arity, terms)

    def keep_variables(self, keep) -> "MultiPoly":
        keep = list(keep)
        dropped = [i for i in range(self.arity) if i not in keep]
        terms = {}
        for exps, c in self.terms.items():
            if any(exps[i] for i in dropped):
                raise ValueError("no se puede descartar una variable presente")
            terms[tuple(exps[i] for i in keep)] = c
        return MultiPoly(len(keep), terms)

    def to_unipoly(self, var: int) -> UniPoly:
        coeffs = {}
        for exps, c in self.terms.items():
            if any(x for i, x in enumerate(exps) if i != var):
                raise ValueError("quedan otras variables; sustituyalas antes")
            coeffs[exps[var]] = c
        top = max(coeffs, default=-1)
        return UniPoly([coeffs.get(k, ZERO) for k in range(top + 1)])

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e
            )
            parts.append(_term_text(c, mono))
        return _join_terms(parts)

    def to_json(self) -> list:
        return [{"exponents": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, obj) -> "MultiPoly":
        if not obj:
            raise ValueError("polinomio vacio: falta la aridad")
        arity = len(obj[0]["exponents"])
        return cls(arity, {tuple(t["exponents"]): QuadScalar.from_json(t["coeff"]) for t in obj})


def poly_det(matrix, arity: int | None = None) -> MultiPoly:
    """Cofactores memoizados sobre subconjuntos de columnas (costo ~2^n * n)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("la matriz no es cuadrada")
    if arity is None:
        arity = next((e.arity for row in matrix for e in row if isinstance(e, MultiPoly)), None)
    if arity is None:
        raise ValueError("no se puede deducir la aridad")
    if n == 0:
        return MultiPoly.constant(ONE, arity)
    entries = [
        [e if isinstance(e, MultiPoly) else MultiPoly.constant(e, arity) for e in row]
        for row in matrix
    ]
    # level[mask]: det de las ultimas popcount(mask) filas restringidas a las columnas de mask
    level = {0: MultiPoly.constant(ONE, arity)}
    for k in range(1, n + 1):
        r = n - k
        nxt = {}
        for mask, sub in level.items():
            if sub.is_zero():
                continue
            for j in range(n):
                bit = 1 << j
                if mask & bit or entries[r][j].is_zero():
                    continue
                sign = -1 if bin(mask & (bit - 1)).count("1") % 2 else 1
                term = entries[r][j] * sub
                if sign < 0:
                    term = -term
                full = mask | bit
                nxt[full] = nxt[full] + term if full in nxt else term
        level = nxt
    return level.get((1 << n) - 1, MultiPoly(arity))


def char_poly(matrix) -> UniPoly:
    """Faddeev-LeVerrier exacto: det(lambda I - M)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("la matriz no es cuadrada")
    a = qmatrix(matrix)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m = [[ZERO] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = qmat_mul(a, m) if k > 1 else m
        c = coeffs[n - k + 1]
        m = [[m[i][j] + (c if i == j else ZERO) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -qmat_trace(qmat_mul(a, m)) / k
    return UniPoly(coeffs)


def bareiss_det(rows) -> int:
    """Determinante entero libre de fracciones (Bareiss)."""
    m = [[int(v) for v in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("la matriz no es cuadrada")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ===== Matrices enteras sobre Z[theta] (theta = sqrt2 o phi) =====
def ring_matmul(a1, b1, a2, b2, d: int):
    if d == 1:
        prod = a1 @ a2
        return prod, np.zeros_like(prod)
    bb = b1 @ b2
    if d == 2:
        return a1 @ a2 + 2 * bb, a1 @ b2 + b1 @ a2
    return a1 @ a2 + bb, a1 @ b2 + b1 @ a2 + bb


def ring_to_quad(x: int, y: int, d: int) -> QuadScalar:
    if d == 5:
        return QuadScalar(Fraction(2 * int(x) + int(y), 2), Fraction(int(y), 2), 5)
    if d == 2:
        return QuadScalar(int(x), int(y), 2)
    return QuadScalar(int(x))


def quad_to_ring(c: QuadScalar, d: int) -> tuple[int, int]:
    if c.d not in (1, d):
        raise ValueError(f"el escalar {c} no esta en Q(sqrt{d})")
    if d == 5:
        x, y = c.a - c.b, 2 * c.b
    else:
        x, y = c.a, c.b
    if x.denominator != 1 or y.denominator != 1:
        raise ValueError(f"el escalar {c} no es entero en Z[theta]")
    return int(x), int(y)


class RingMatrix:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=None, d: int = 1):
        self.a = np.asarray(a, dtype=np.int64)
        self.b = np.zeros_like(self.a) if b is None else np.asarray(b, dtype=np.int64)
        self.d = int(d)

    @classmethod
    def identity(cls, n: int, d: int = 1) -> "RingMatrix":
        return cls(np.eye(n, dtype=np.int64), None, d)

    @classmethod
    def from_quad(cls, rows, d: int) -> "RingMatrix":
        n = len(rows)
        a = np.zeros((n, len(rows[0]) if rows else 0), dtype=np.int64)
        b = np.zeros_like(a)
        for i, row in enumerate(rows):
            for j, c in enumerate(row):
                a[i, j], b[i, j] = quad_to_ring(c, d)
        return cls(a, b, d)

    @property
    def size(self) -> int:
        return self.a.shape[0]

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        a, b = ring_matmul(self.a, self.b, other.a, other.b, self.d)
        return RingMatrix(a, b, self.d)

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return np.array_equal(self.a, other.a) and np.array_equal(self.b, other.b)

    def __hash__(self):
        return hash(self.key())

    def key(self) -> bytes:
        return self.a.tobytes() + self.b.tobytes()

    def is_identity(self) -> bool:
        return np.array_equal(self.a, np.eye(self.size, dtype=np.int64)) and not self.b.any()

    def to_quad(self) -> list[list[QuadScalar]]:
        n, m = self.a.shape
        return [[ring_to_quad(self.a[i, j], self.b[i, j], self.d) for j in range(m)] for i in range(n)]

    def char_poly(self) -> UniPoly:
        """Faddeev-LeVerrier en Z[theta]; la division por k es exacta componente a componente."""
        n = self.size
        coeffs = [(0, 0)] * (n + 1)
        coeffs[n] = (1, 0)
        ma = np.zeros((n, n), dtype=np.int64)
        mb = np.zeros((n, n), dtype=np.int64)
        eye = np.eye(n, dtype=np.int64)
        for k in range(1, n + 1):
            if k > 1:
                ma, mb = ring_matmul(self.a, self.b, ma, mb, self.d)
            c0, c1 = coeffs[n - k + 1]
            ma = ma + c0 * eye
            mb = mb + c1 * eye
            ta, tb = ring_matmul(self.a, self.b, ma, mb, self.d)
            t0, t1 = int(np.trace(ta)), int(np.trace(tb))
            if t0 % k or t1 % k:
                raise RuntimeError("traza no divisible en Faddeev-LeVerrier")
            coeffs[n - k] = (-t0 // k, -t1 // k)
        return UniPoly([ring_to_quad(x, y, self.d) for x, y in coeffs])
