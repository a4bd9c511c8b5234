# -*- coding: utf-8 -*-
"""
signatures.py
Firmas de palabras y vectores de firma V_alpha: conteo exacto de palabras por elemento y por clase.
"""
from __future__ import annotations

import math

import numpy as np
from sympy import prevprime
from sympy.ntheory.modular import crt
from sympy.utilities.iterables import multiset_permutations

import config
from conjugacy import ClassTable
from coxeter_core import GroupTable, check_word
from exact_algebra import ZERO, QuadScalar

INT64_SAFE = 1 << 62


# ===== Firmas =====
def check_signature(alpha, rank: int) -> tuple[int, ...]:
    sig = tuple(int(a) for a in alpha)
    if len(sig) != rank:
        raise ValueError(f"la firma {sig} tiene {len(sig)} entradas, el rango es {rank}")
    if any(a < 0 for a in sig):
        raise ValueError(f"la firma {sig} tiene entradas negativas")
    return sig


def parse_signature(text: str, rank: int) -> tuple[int, ...]:
    parts = [p for p in (text or "").replace(" ", "").split(",") if p]
    return check_signature([int(p) for p in parts], rank)


def signature_of(w, rank: int | None = None) -> tuple[int, ...]:
    word = tuple(int(x) for x in w)
    n = rank if rank is not None else (max(word) + 1 if word else 0)
    check_word(word, n)
    counts = [0] * n
    for x in word:
        counts[x] += 1
    return tuple(counts)


def splice(a, b) -> tuple[int, ...]:
    return tuple(a) + tuple(b)


def multinomial(alpha) -> int:
    out = math.factorial(sum(alpha))
    for a in alpha:
        out //= math.factorial(a)
    return out


def graded_signatures(rank: int, k: int):
    """Firmas de tamano k en orden lexicografico ascendente."""
    if rank == 0:
        if k == 0:
            yield ()
        return
    if rank == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in graded_signatures(rank - 1, k - first):
            yield (first,) + rest


# ===== Programa dinamico N_beta(g) = sum_i N_{beta - e_i}(g s_i) =====
def _box_level_sizes(alpha) -> list[int]:
    sizes = [1]
    for a in alpha:
        grown = [0] * (len(sizes) + a)
        for k, s in enumerate(sizes):
            for j in range(a + 1):
                grown[k + j] += s
        sizes = grown
    return sizes


def _parity_maps(table: GroupTable):
    """Los elementos alcanzados en el nivel k tienen longitud de paridad k mod 2."""
    parity = table.lengths % 2
    elems = [np.flatnonzero(parity == p) for p in (0, 1)]
    pos = np.empty(table.order, dtype=np.int64)
    for p in (0, 1):
        pos[elems[p]] = np.arange(len(elems[p]), dtype=np.int64)
    step = [pos[table.gen_mult[elems[p], :]] for p in (0, 1)]
    return elems, pos, step


def _dp_counts(table: GroupTable, alpha, modulus: int | None, maps) -> np.ndarray:
    elems, pos, step = maps
    n = table.rank
    start = np.zeros(len(elems[0]), dtype=np.int64)
    start[pos[table.identity]] = 1
    level = {tuple([0] * n): start}
    for k in range(1, sum(alpha) + 1):
        p = k % 2
        keys = set()
        for beta in level:
            for i in range(n):
                if beta[i] < alpha[i]:
                    keys.add(beta[:i] + (beta[i] + 1,) + beta[i + 1 :])
        nxt = {}
        for beta in keys:
            acc = np.zeros(len(elems[p]), dtype=np.int64)
            for i in range(n):
                if beta[i] == 0:
                    continue
                acc += level[beta[:i] + (beta[i] - 1,) + beta[i + 1 :]][step[p][:, i]]
            if modulus is not None:
                acc %= modulus
            nxt[beta] = acc
        level = nxt
    return level[tuple(alpha)]


def _crt_primes(bound: int, rank: int) -> list[int]:
    """Primos bajo 2^(62 - bits(rango)) cuyo producto supera bound."""
    top = 1 << (62 - max(1, rank).bit_length())
    primes = []
    product = 1
    while product <= bound:
        top = prevprime(top)
        primes.append(top)
        product *= top
    return primes


def count_words_by_element(table: GroupTable, alpha, budget: int | None = None) -> np.ndarray:
    """Cantidad exacta de palabras u con sig(u) = alpha y phi(u) = g, para cada g."""
    alpha = check_signature(alpha, table.rank)
    budget = config.DP_BUDGET if budget is None else budget
    half = (table.order + 1) // 2
    peak = max(_box_level_sizes(alpha)) * half
    if peak > budget:
        raise RuntimeError(
            f"la programacion dinamica para alpha={alpha} necesita {peak} entradas (presupuesto {budget}); "
            "use una firma menor o el conteo por fuerza bruta"
        )
    total = multinomial(alpha)
    maps = _parity_maps(table)
    target = maps[0][sum(alpha) % 2]
    if total < INT64_SAFE:
        counts = np.zeros(table.order, dtype=np.int64)
        counts[target] = _dp_counts(table, alpha, None, maps)
        return counts
    primes = _crt_primes(total, table.rank)
    config.debug("DP", f"alpha={alpha}: {len(primes)} pasadas modulares")
    residues = np.stack([_dp_counts(table, alpha, p, maps) for p in primes])
    counts = np.zeros(table.order, dtype=object)
    for j in np.flatnonzero(residues.any(axis=0)):
        counts[target[j]] = int(crt(primes, [int(r) for r in residues[:, j]], check=False)[0])
    return counts


def class_sums(counts: np.ndarray, classes: ClassTable) -> list[int]:
    if counts.dtype == object:
        return [sum(int(v) for v in counts[m]) for m in classes.classes]
    vec = np.zeros(classes.count, dtype=np.int64)
    np.add.at(vec, classes.class_of, counts)
    return [int(v) for v in vec]


def signature_vector(table: GroupTable, classes: ClassTable, alpha) -> list[int]:
    vec = class_sums(count_words_by_element(table, alpha), classes)
    if sum(vec) != multinomial(alpha):
        raise RuntimeError(f"suma de V_alpha distinta del multinomial para alpha={tuple(alpha)}")
    return vec


def brute_force_signature_vector(table: GroupTable, classes: ClassTable, alpha, max_length: int | None = None) -> list[int]:
    alpha = check_signature(alpha, table.rank)
    max_length = config.BRUTE_MAX if max_length is None else max_length
    if sum(alpha) > max_length:
        raise ValueError(f"|alpha| = {sum(alpha)} excede el tope de fuerza bruta {max_length}")
    letters = [i for i, a in enumerate(alpha) for _ in range(a)]
    vec = [0] * classes.count
    for word in multiset_permutations(letters):
        vec[classes.class_of[table.word_to_element(word)]] += 1
    return vec


def signature_stream(table: GroupTable, classes: ClassTable, max_length: int):
    """(beta, V_beta) para todo |beta| <= max_length, graduado y lexicografico."""
    n = table.rank
    dtype = object if n > 1 and n ** max_length >= INT64_SAFE else np.int64
    start = np.zeros(table.order, dtype=dtype)
    start[table.identity] = 1
    level = {tuple([0] * n): start}
    yield tuple([0] * n), class_sums(start, classes)
    if n == 0:
        return
    for k in range(1, max_length + 1):
        nxt = {}
        for beta in graded_signatures(n, k):
            acc = np.zeros(table.order, dtype=dtype)
            for i in range(n):
                if beta[i]:
                    acc = acc + level[beta[:i] + (beta[i] - 1,) + beta[i + 1 :]][table.gen_mult[:, i]]
            nxt[beta] = acc
            yield beta, class_sums(acc, classes)
        level = nxt


def character_sum(vector, chi) -> QuadScalar:
    if len(vector) != len(chi):
        raise ValueError(f"longitudes distintas: {len(vector)} clases y {len(chi)} valores de caracter")
    total = ZERO
    for v, c in zip(vector, chi):
        total = total + c * v
    return total
