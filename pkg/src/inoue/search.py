"""Random generation of type-I matrices.

Randomness comes from numpy's Philox counter-based generator.  Trial
``i`` of a search seeded with ``s`` uses ``SeedSequence(s, spawn_key=(i,))``,
so every trial is reproducible on its own and trials can run in any order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, InternalInconsistency, Rejection
from .linalg import IntMatrix, IntPoly
from .polyroots import count_real_roots
from .spectral import TypeICertificate, check_type_I, is_diagonalizable

RNG_ALGORITHM = "numpy Philox (4x64) seeded by SeedSequence(seed, spawn_key=(trial,))"
MODES = ("companion", "conjugated-companion", "block-nondiag")


@dataclass(frozen=True)
class SearchConfig:
    dim: int
    entry_bound: int = 3
    count: int = 5
    rng_seed: int = 0
    mode: str = "companion"
    max_attempts: int = 10_000
    bits: int = 128

    def __post_init__(self):
        if self.dim < 3 or self.dim % 2 == 0:
            raise ConfigError(f"dim must be odd and >= 3, got {self.dim}")
        if self.entry_bound < 1:
            raise ConfigError("entry_bound must be >= 1")
        if self.count < 0 or self.max_attempts < 1:
            raise ConfigError("count must be >= 0 and max_attempts >= 1")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}")
        if self.mode == "block-nondiag" and self.dim < 7:
            raise ConfigError("block-nondiag needs dim >= 7 (deg f >= 3 plus the g^2 block)")


@dataclass(frozen=True)
class SearchHit:
    trial: int
    matrix: IntMatrix
    certificate: TypeICertificate


@dataclass(frozen=True)
class SearchResult:
    config: SearchConfig
    hits: tuple
    attempts: int
    rng: str = RNG_ALGORITHM

    def __iter__(self):
        return iter(self.hits)

    def __len__(self):
        return len(self.hits)

    @property
    def matrices(self) -> list[IntMatrix]:
        return [h.matrix for h in self.hits]


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(trial,))))


def _ints(rng: np.random.Generator, lo: int, hi: int, size: int) -> list[int]:
    return [int(x) for x in rng.integers(lo, hi, size=size, endpoint=True)]


def random_unimodular(dim: int, rng: np.random.Generator, steps: int = 3) -> IntMatrix:
    """Product of ``steps`` elementary matrices ``I + c e_ij`` with ``c = +-1``."""
    rows = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        i, j = (int(x) for x in rng.choice(dim, size=2, replace=False))
        c = 1 if rng.integers(0, 2) else -1
        # left-multiply by I + c e_ij: row i += c * row j
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return IntMatrix.from_rows(rows)


def _random_unit_poly(rng, degree: int, bound: int) -> IntPoly:
    middle = _ints(rng, -bound, bound, degree - 1)
    return IntPoly(tuple([-1] + middle + [1]))


def _random_g(rng, degree: int, bound: int) -> IntPoly | None:
    middle = _ints(rng, -bound, bound, degree - 1)
    g = IntPoly(tuple([1] + middle + [1]))
    return g if count_real_roots(g) == 0 else None


def _attempt(cfg: SearchConfig, trial: int) -> IntMatrix | None:
    rng = trial_rng(cfg.rng_seed, trial)
    if cfg.mode in ("companion", "conjugated-companion"):
        P = _random_unit_poly(rng, cfg.dim, cfg.entry_bound)
        M = IntMatrix.companion(P)
        if cfg.mode == "conjugated-companion":
            U = random_unimodular(cfg.dim, rng, int(rng.integers(1, 6)))
            M = U @ M @ U.inverse()
        return M
    gdeg = 2 * int(rng.integers(1, (cfg.dim - 3) // 4 + 1))
    f = _random_unit_poly(rng, cfg.dim - 2 * gdeg, cfg.entry_bound)
    g = _random_g(rng, gdeg, cfg.entry_bound)
    if g is None:
        return None
    try:
        return make_nondiagonalizable(f, g, rng=rng)
    except Rejection:
        return None


def search_type_I(cfg: SearchConfig) -> SearchResult:
    """Draw random candidates until ``cfg.count`` certified type-I matrices are found."""
    hits = []
    trial = 0
    while len(hits) < cfg.count and trial < cfg.max_attempts:
        M = _attempt(cfg, trial)
        if M is not None:
            try:
                cert = check_type_I(M, cfg.bits)
            except Rejection:
                cert = None
            if cert is not None:
                hits.append(SearchHit(trial, M, cert))
        trial += 1
    return SearchResult(cfg, tuple(hits), trial)


def make_nondiagonalizable(f: IntPoly, g: IntPoly, conjugator: IntMatrix | None = None,
                           rng: np.random.Generator | None = None, seed: int = 0) -> IntMatrix:
    """A unimodular conjugate of ``block_diag(C_f, C_{g^2})``: type I, never diagonalizable.

    ``f`` supplies the real eigenvalue (odd degree, one real root, ``f(0) = -1``),
    ``g`` has no real roots.  The conjugator is ``conjugator`` if given,
    otherwise drawn from ``rng`` (or from ``seed``).
    """
    for name, p in (("f", f), ("g", g)):
        if not p.is_monic() or p.degree < 1:
            raise Rejection("not-monic", {name: str(p)})
    if f.degree % 2 == 0:
        raise Rejection("f-degree-even", {"f": str(f)})
    if count_real_roots(f) != 1:
        raise Rejection("f-real-root-count!=1", {"f": str(f), "real_roots": count_real_roots(f)})
    if f.coeffs[0] != -1:
        raise Rejection("f(0)!=-1", {"f(0)": f.coeffs[0]})
    if count_real_roots(g) != 0:
        raise Rejection("extra-real-roots", {"g": str(g), "real_roots": count_real_roots(g)})
    if f(1) * g(1) == 0:
        raise Rejection("eigenvalue-one", {"f(1)": f(1), "g(1)": g(1)})
    if f(-1) == 0:
        raise Rejection("alpha-rational", {"f(-1)": 0})
    det = g.coeffs[0] ** 2
    if det != 1:
        raise Rejection("det!=1", {"det": det})
    B = IntMatrix.block_diag(IntMatrix.companion(f), IntMatrix.companion(g * g))
    if conjugator is None:
        if rng is None:
            rng = trial_rng(seed, 0)
        conjugator = random_unimodular(B.dim, rng, int(rng.integers(1, 6)))
    if abs(conjugator.det()) != 1:
        raise Rejection("conjugator-not-unimodular", {"det": conjugator.det()})
    M = conjugator @ B @ conjugator.inverse()
    if is_diagonalizable(M).diagonalizable:
        raise InternalInconsistency("block construction produced a diagonalizable matrix")
    try:
        check_type_I(M, 32)
    except Rejection as exc:
        raise InternalInconsistency(f"block construction rejected: {exc.reason}") from exc
    return M
