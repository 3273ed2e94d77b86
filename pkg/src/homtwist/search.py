"""Bounded exhaustive search for deformation data.

Finds every pair ``(alpha_H, alpha_C)`` with integer entries in
``[-r, r]`` such that ``alpha_H`` is a bialgebra endomorphism of the host,
``alpha_C`` a coalgebra endomorphism of the coalgebra, and the two are
compatible with the coaction.

The enumeration runs row by row on batches of integer matrices.  Each
polynomial equation is tested as soon as every row it touches is assigned,
so dead branches are cut early.  Survivors are re-verified with the exact
rational checkers before being returned.
"""

from __future__ import annotations

import itertools
import math
from typing import Callable

import numpy as np

from .constructions import DeformationInput, deformation_prechecks
from .errors import InvalidClassicalBundle, SearchSpaceTooLarge
from .structures import Bundle, is_classical, is_valid
from .tensor import LinearMap

DEFAULT_MAX_CANDIDATES = 10**8

Residual = Callable[[np.ndarray], np.ndarray]


def _integer_tensor(f: LinearMap, shape: tuple[int, ...]) -> np.ndarray:
    """Structure constants scaled to integers.

    Every equation searched is homogeneous in the structure constants, so
    clearing denominators leaves the solution set unchanged.
    """
    scale = 1
    for v in f.flat():
        scale = math.lcm(scale, v.denominator)
    vals = [int(v * scale) for v in f.flat()]
    bound = max((abs(v) for v in vals), default=0)
    dtype = np.int64 if bound < 2**20 else object
    return np.array(vals, dtype=dtype).reshape(f.codomain_dim, f.domain_dim).reshape(shape)


def _coalgebra_equations(delta: np.ndarray, d: int) -> tuple[Residual, np.ndarray]:
    """``Delta X == (X (x) X) Delta``; ``delta`` indexed ``[p, q, k]``."""

    def residual(x):
        lhs = np.einsum("pqk,nkj->npqj", delta, x)
        rhs = np.einsum("npa,nqb,abj->npqj", x, x, delta)
        return (lhs - rhs).reshape(len(x), -1)

    level = np.empty((d, d, d), dtype=np.int64)
    for p, q, j in itertools.product(range(d), repeat=3):
        rows = {p, q} | {k for k in range(d) if delta[p, q, k] != 0}
        level[p, q, j] = max(rows)
    return residual, level.reshape(-1)


def _algebra_equations(mu: np.ndarray, d: int) -> tuple[Residual, np.ndarray]:
    """``X mu == mu (X (x) X)``; ``mu`` indexed ``[i, a, b]``."""

    def residual(x):
        lhs = np.einsum("nik,kab->niab", x, mu)
        rhs = np.einsum("ipq,npa,nqb->niab", mu, x, x)
        return (lhs - rhs).reshape(len(x), -1)

    level = np.empty((d, d, d), dtype=np.int64)
    for i, a, b in itertools.product(range(d), repeat=3):
        rows = {i} | {p for p in range(d) for q in range(d) if mu[i, p, q] != 0}
        rows |= {q for p in range(d) for q in range(d) if mu[i, p, q] != 0}
        level[i, a, b] = max(rows)
    return residual, level.reshape(-1)


def _compat_equations(
    coaction: np.ndarray, alpha_h: np.ndarray, hd: int, cd: int
) -> tuple[Residual, np.ndarray]:
    """``delta X == (A (x) X) delta`` for fixed ``A``; ``coaction`` indexed ``[h, m, k]``."""

    def residual(x):
        lhs = np.einsum("hmk,nkj->nhmj", coaction, x)
        rhs = np.einsum("ha,nmb,abj->nhmj", alpha_h, x, coaction)
        return (lhs - rhs).reshape(len(x), -1)

    level = np.empty((hd, cd, cd), dtype=np.int64)
    for h, m, j in itertools.product(range(hd), range(cd), range(cd)):
        rows = {m} | {k for k in range(cd) if coaction[h, m, k] != 0}
        level[h, m, j] = max(rows)
    return residual, level.reshape(-1)


def _rowwise_search(
    d: int, entry_range: int, systems: list[tuple[Residual, np.ndarray]]
) -> np.ndarray:
    """All ``d x d`` integer matrices in range solving every system."""
    values = np.arange(-entry_range, entry_range + 1, dtype=np.int64)
    row_options = np.array(list(itertools.product(values, repeat=d)), dtype=np.int64)
    batch = np.zeros((1, d, d), dtype=np.int64)
    for r in range(d):
        n = len(batch)
        grown = np.repeat(batch, len(row_options), axis=0)
        grown[:, r, :] = np.tile(row_options, (n, 1))
        keep = np.ones(len(grown), dtype=bool)
        for residual, level in systems:
            mask = level == r
            if not mask.any():
                continue
            res = residual(grown)[:, mask]
            keep &= ~np.any(res != 0, axis=1)
        batch = grown[keep]
        if len(batch) == 0:
            break
    return batch


def candidate_count(bundle: Bundle, entry_range: int) -> int:
    """Size of the naive per-factor enumeration the guard is measured against."""
    k = 2 * entry_range + 1
    return k ** (bundle.host.dim**2) + k ** (bundle.coalg.dim**2)


def _to_linear_map(x: np.ndarray) -> LinearMap:
    return LinearMap.from_rows([[int(v) for v in row] for row in x])


def bialgebra_endomorphisms(host, entry_range: int) -> list[LinearMap]:
    d = host.dim
    mu = _integer_tensor(host.mu, (d, d, d))
    delta = _integer_tensor(host.delta, (d, d, d))
    found = _rowwise_search(
        d, entry_range, [_algebra_equations(mu, d), _coalgebra_equations(delta, d)]
    )
    return [_to_linear_map(x) for x in found]


def coalgebra_endomorphisms(coalg, entry_range: int) -> list[LinearMap]:
    d = coalg.dim
    delta = _integer_tensor(coalg.delta, (d, d, d))
    return [_to_linear_map(x) for x in _rowwise_search(d, entry_range, [_coalgebra_equations(delta, d)])]


def endomorphism_search(
    bundle: Bundle, entry_range: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> list[DeformationInput]:
    """Every valid :class:`DeformationInput` with entries in ``[-entry_range, entry_range]``.

    Results are sorted lexicographically by the flattened entries of
    ``alpha_H`` followed by ``alpha_C``.
    """
    if entry_range < 0:
        raise ValueError("entry_range must be non-negative")
    total = candidate_count(bundle, entry_range)
    if total > max_candidates:
        raise SearchSpaceTooLarge(f"{total} candidates exceed the guard of {max_candidates}")
    if not (is_classical(bundle) and is_valid(bundle)):
        raise InvalidClassicalBundle("search needs a valid classical bundle")

    hd, cd = bundle.host.dim, bundle.coalg.dim
    coalg_delta = _integer_tensor(bundle.coalg.delta, (cd, cd, cd))
    coaction = _integer_tensor(bundle.coaction.delta, (hd, cd, cd))
    coalg_system = _coalgebra_equations(coalg_delta, cd)

    results = []
    for alpha_h in bialgebra_endomorphisms(bundle.host, entry_range):
        a = np.array([[int(v) for v in row] for row in alpha_h.entries], dtype=np.int64)
        found = _rowwise_search(
            cd, entry_range, [coalg_system, _compat_equations(coaction, a, hd, cd)]
        )
        for x in found:
            inp = DeformationInput(bundle, alpha_h, _to_linear_map(x))
            failed = [name for name, ok in deformation_prechecks(inp) if not ok]
            if failed:
                raise AssertionError(f"search produced a pair failing {failed}")
            results.append(inp)
    results.sort(key=DeformationInput.key)
    return results
