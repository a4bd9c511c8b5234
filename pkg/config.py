# -*- coding: utf-8 -*-
"""
config.py
Configuracion por variables de entorno y mensajes de diagnostico de coxsig
"""
from __future__ import annotations

import os
import sys


def parse_int(value: str, default: int) -> int:
    raw = (value or "").strip().lower().replace("_", "")
    if not raw:
        return default
    if raw.startswith("0x"):
        return int(raw, 16)
    if "e" in raw:
        return int(float(raw))
    return int(raw, 10)


def env_flag(name: str, default: bool = False) -> bool:
    raw = os.environ.get(name, "").strip().lower()
    if not raw:
        return default
    return raw in {"1", "true", "yes"}


BASE_DIR = os.path.dirname(os.path.abspath(__file__))

# ===== Cache y datos externos =====
CACHE_DIR = os.environ.get("COXSIG_CACHE_DIR", "").strip()
DATA_FILE = os.environ.get("COXSIG_DATA_FILE", "").strip() or os.path.join(BASE_DIR, "data", "cuspidal_reps.json")

# ===== Limites de calculo =====
ENUM_CAP = parse_int(os.environ.get("COXSIG_ENUM_CAP", "1000000"), 1_000_000)
DP_BUDGET = parse_int(os.environ.get("COXSIG_DP_BUDGET", "100000000"), 100_000_000)
BRUTE_MAX = parse_int(os.environ.get("COXSIG_BRUTE_MAX", "10"), 10)
CANDIDATE_CAP = parse_int(os.environ.get("COXSIG_CANDIDATE_CAP", "100000000"), 100_000_000)
THREADS = max(1, parse_int(os.environ.get("COXSIG_THREADS", "1"), 1))

# ===== Diagnostico =====
VERBOSE = env_flag("COXSIG_VERBOSE", default=True)
DEBUG = env_flag("COXSIG_DEBUG")
EXTENDED = env_flag("COXSIG_EXTENDED")


def log(tag: str, msg: str) -> None:
    if VERBOSE:
        print(f"[{tag}] {msg}", file=sys.stderr)


def debug(tag: str, msg: str) -> None:
    if DEBUG:
        print(f"[{tag}] {msg}", file=sys.stderr)
