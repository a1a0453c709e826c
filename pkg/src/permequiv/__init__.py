"""Equivalence of matrices up to permutations, and a key-recovery attack on
McEliece over Reed-Solomon codes."""
from .algebra import GF, QQ, Field, Poly
from .attack import AttackResult, full_attack, variety_attack
from .codes import ReedSolomonCode, min_weight_codewords
from .config import DEFAULT_LIMITS, Limits
from .equivsolver import solve_equiv, variety
from .linalg import Matrix, decode, parity_check, rref
from .mceliece import decrypt, encrypt, keygen
from .perm import Permutation, act, compose, perm_matrix
from .permdetect import detect_all, detect_first, detect_sorted, is_perm_equiv

__version__ = "0.1.0"

__all__ = [
    "AttackResult", "DEFAULT_LIMITS", "Field", "GF", "Limits", "Matrix", "Permutation", "Poly",
    "QQ", "ReedSolomonCode", "act", "compose", "decode", "decrypt", "detect_all",
    "detect_first", "detect_sorted", "encrypt", "full_attack", "is_perm_equiv", "keygen",
    "min_weight_codewords", "parity_check", "perm_matrix", "rref", "solve_equiv",
    "variety", "variety_attack",
]
