"""Numerical maximization of |<Phi|Psi>|^2 over K-separable product states.

The workhorse is multistart alternating ascent: with all factors but one
fixed, the optimal remaining factor is the normalized contraction of the
state against the others, and the overlap modulus it achieves is the
contraction norm, so every update is exact and monotone. Restarts are
batched along a leading axis and run vectorized.

grid_oracle is a deliberately separate brute-force maximizer used as an
independent reference in tests; it shares no iteration logic with the
ascent solver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.optimize

from .errors import DomainError, ResourceCapError, ShapeMismatchError
from .hyperspherical import angles_to_amplitudes
from .partitions import Partition
from .states import PureState

_ZERO_NORM = 1e-120
_GAUGE_EPS = 1e-14
_MAX_GRID_POINTS = 200_000_000
_GRID_CHUNK = 65536


@dataclass(frozen=True)
class OptimizerConfig:
    """Knobs for the multistart ascent (and the oracle's default resolution)."""

    restarts: int = 64
    max_iterations: int = 10000
    tol: float = 1e-12
    seed: int = 0
    grid_resolution: int = 40

    def __post_init__(self):
        if self.restarts < 1 or self.max_iterations < 1:
            raise DomainError("restarts and max_iterations must be positive")
        if self.tol <= 0 or self.grid_resolution < 2:
            raise DomainError("tol must be positive and grid_resolution >= 2")


@dataclass(frozen=True, eq=False)
class ProductState:
    """One unit-norm factor per partition block, aligned with the partition."""

    partition: Partition
    factors: tuple[np.ndarray, ...]

    def __post_init__(self):
        factors = tuple(np.asarray(f, dtype=np.complex128).reshape(-1) for f in self.factors)
        if len(factors) != self.partition.k:
            raise ShapeMismatchError(
                f"{len(factors)} factors for a {self.partition.k}-block partition"
            )
        for block, f in zip(self.partition.blocks, factors):
            if f.size != 2 ** len(block):
                raise ShapeMismatchError(
                    f"factor for block {block} has dimension {f.size}, "
                    f"expected {2 ** len(block)}"
                )
            norm = np.linalg.norm(f)
            if abs(norm - 1.0) > 1e-12:
                raise DomainError(f"factor for block {block} is not unit norm ({norm!r})")
            f.setflags(write=False)
        object.__setattr__(self, "factors", factors)

    def assemble(self) -> PureState:
        """Expand the tensor product back to a full state in qubit order."""
        n = self.partition.n
        full = self.factors[0].reshape((2,) * len(self.partition.blocks[0]))
        for f, block in zip(self.factors[1:], self.partition.blocks[1:]):
            full = np.tensordot(full, f.reshape((2,) * len(block)), axes=0)
        block_axes = [q - 1 for b in self.partition.blocks for q in b]
        amps = np.ascontiguousarray(full.transpose(np.argsort(block_axes))).reshape(-1)
        return PureState(n, amps)


@dataclass(frozen=True, eq=False)
class OverlapResult:
    """Best squared overlap found, with the realizing product state."""

    lambda2: float
    e_g: float
    argmax: ProductState
    partition: Partition
    iterations: int
    converged: bool
    winner_restart: int
    reinjections: int = 0

    def __post_init__(self):
        if not -1e-12 <= self.lambda2 <= 1.0 + 1e-9:
            raise DomainError(f"lambda2 = {self.lambda2!r} outside [0, 1]")
        if abs(self.e_g - (1.0 - self.lambda2)) > 1e-15:
            raise DomainError("e_g must equal 1 - lambda2")


# ---------------------------------------------------------------------------
# tensor plumbing
# ---------------------------------------------------------------------------

def _blocked_tensor(psi: PureState, partition: Partition) -> np.ndarray:
    """Reshape the state so axis s enumerates the basis of block s."""
    if partition.n != psi.num_qubits:
        raise ShapeMismatchError(
            f"partition covers {partition.n} qubits, state has {psi.num_qubits}"
        )
    axes = [q - 1 for b in partition.blocks for q in b]
    dims = [2 ** len(b) for b in partition.blocks]
    return np.ascontiguousarray(psi.tensor.transpose(axes)).reshape(dims)


def _environment(psi_k: np.ndarray, factors_conj: list[np.ndarray], skip: int) -> np.ndarray:
    """Contract the state against every conjugated factor except ``skip``.

    ``factors_conj[t]`` has shape (R, d_t); the result has shape (R, d_skip)
    and is the vector v with <Phi|Psi> = <phi_skip|v>. Contraction order is
    fixed (descending block dimension) so results are bit-reproducible.
    """
    k = psi_k.ndim
    order = sorted((t for t in range(k) if t != skip), key=lambda t: (-psi_k.shape[t], t))
    if not order:
        r = factors_conj[0].shape[0] if factors_conj else 1
        return np.tile(psi_k.reshape(1, -1), (r, 1))
    t0 = order[0]
    env = np.tensordot(factors_conj[t0], psi_k, axes=(1, t0))
    remaining = [t for t in range(k) if t != t0]
    for t in order[1:]:
        pos = 1 + remaining.index(t)
        env = np.einsum("r...d,rd->r...", np.moveaxis(env, pos, -1), factors_conj[t])
        remaining.remove(t)
    return env.reshape(env.shape[0], -1)


def _gauge_fix(factors: np.ndarray) -> np.ndarray:
    """Rotate each row so its first non-negligible entry is real nonnegative."""
    lead = np.argmax(np.abs(factors) > _GAUGE_EPS, axis=1)
    pivot = factors[np.arange(factors.shape[0]), lead]
    phase = np.where(np.abs(pivot) > 0, pivot / np.maximum(np.abs(pivot), _ZERO_NORM), 1.0)
    return factors * phase.conj()[:, None]


def _single_excitation_uniform(d: int) -> np.ndarray:
    m = d.bit_length() - 1
    v = np.zeros(d, dtype=np.complex128)
    v[[2 ** p for p in range(m)]] = 1.0 / np.sqrt(m) if m else 1.0
    if m == 0:
        v[0] = 1.0
    return v


def _two_excitation_uniform(d: int) -> np.ndarray:
    m = d.bit_length() - 1
    if m < 2:
        v = np.zeros(d, dtype=np.complex128)
        v[-1] = 1.0
        return v
    idx = [2 ** p + 2 ** q for p in range(m) for q in range(p)]
    v = np.zeros(d, dtype=np.complex128)
    v[idx] = 1.0 / np.sqrt(len(idx))
    return v


def _deterministic_starts(dims: list[int], count: int) -> list[list[np.ndarray]]:
    """Fixed start menu: basis/uniform rows plus per-block excitation patterns.

    The per-block patterns make the known optima of the uniform-excitation
    families exact fixed points of the ascent, so those values are
    reproduced without iteration error.
    """
    def e0(d):
        v = np.zeros(d, dtype=np.complex128)
        v[0] = 1.0
        return v

    def etop(d):
        v = np.zeros(d, dtype=np.complex128)
        v[-1] = 1.0
        return v

    def uniform(d):
        return np.full(d, 1.0 / np.sqrt(d), dtype=np.complex128)

    k = len(dims)
    menu: list[list[np.ndarray]] = [
        [e0(d) for d in dims],
        [uniform(d) for d in dims],
        [_single_excitation_uniform(d) for d in dims],
        [etop(d) for d in dims],
    ]
    for s in range(k):
        menu.append([_single_excitation_uniform(d) if t == s else e0(d)
                     for t, d in enumerate(dims)])
    for s in range(k):
        menu.append([_two_excitation_uniform(d) if t == s else e0(d)
                     for t, d in enumerate(dims)])
    for s in range(k):
        menu.append([uniform(d) if t == s else e0(d) for t, d in enumerate(dims)])
    return menu[:count]


def _partition_seed_material(partition: Partition) -> list[int]:
    return [sum(1 << (q - 1) for q in block) for block in partition.blocks]


def _initial_factors(dims, config, partition) -> tuple[list[np.ndarray], np.random.Generator]:
    r = config.restarts
    n_det = min(4 + 3 * len(dims), max(1, r // 2))
    det = _deterministic_starts(list(dims), n_det)
    n_det = len(det)
    seed_seq = np.random.SeedSequence(
        [int(config.seed) & 0x7FFFFFFF] + _partition_seed_material(partition)
    )
    rng = np.random.default_rng(seed_seq)
    factors = []
    for t, d in enumerate(dims):
        f = np.empty((r, d), dtype=np.complex128)
        for i in range(n_det):
            f[i] = det[i][t]
        n_rand = r - n_det
        if n_rand > 0:
            z = rng.normal(size=(n_rand, d)) + 1j * rng.normal(size=(n_rand, d))
            f[n_det:] = z / np.linalg.norm(z, axis=1, keepdims=True)
        factors.append(f)
    return factors, rng


# ---------------------------------------------------------------------------
# alternating ascent
# ---------------------------------------------------------------------------

def update_factor(psi: PureState, product: ProductState, s: int, rng=None):
    """Optimal single-factor step: replace factor s by the normalized
    contraction of the state against the other conjugated factors.

    Returns (new_factor, new_overlap_modulus). A zero contraction is the
    degenerate case; the factor is then replaced by a fresh random unit
    vector and the modulus reported is 0.
    """
    if not 0 <= s < product.partition.k:
        raise DomainError(f"block index {s} out of range")
    psi_k = _blocked_tensor(psi, product.partition)
    fcs = [f.conj().reshape(1, -1) for f in product.factors]
    env = _environment(psi_k, fcs, s)[0]
    norm = np.linalg.norm(env)
    if norm < _ZERO_NORM:
        rng = np.random.default_rng(rng)
        z = rng.normal(size=env.size) + 1j * rng.normal(size=env.size)
        return z / np.linalg.norm(z), 0.0
    factor = _gauge_fix((env / norm).reshape(1, -1))[0]
    return factor, float(norm)


def best_overlap(psi: PureState, partition: Partition, config: OptimizerConfig | None = None) -> OverlapResult:
    """Multistart alternating ascent for Lambda_K^2 on a fixed partition.

    Blocks are swept in canonical order; one iteration is one full sweep.
    A restart stops when its squared overlap improves by less than
    ``config.tol`` over a sweep. The returned result is the highest value
    across restarts (ties broken by lowest restart index) and is
    deterministic for a fixed seed.
    """
    config = config or OptimizerConfig()
    psi_k = _blocked_tensor(psi, partition)
    dims = list(psi_k.shape)
    k = len(dims)
    r = config.restarts

    if k == 1:
        factor = _gauge_fix(psi.amplitudes.reshape(1, -1).copy())[0]
        product = ProductState(partition, (factor,))
        return OverlapResult(1.0, 0.0, product, partition, 0, True, 0)

    factors, rng = _initial_factors(dims, config, partition)
    lam2 = np.zeros(r)
    prev_sweep = np.full(r, -1.0)
    prev_overlap = np.zeros(r)
    iterations = np.full(r, config.max_iterations, dtype=int)
    converged = np.zeros(r, dtype=bool)
    active = np.ones(r, dtype=bool)
    reinjections = 0

    for sweep in range(1, config.max_iterations + 1):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        for s in range(k):
            fcs = [factors[t][idx].conj() for t in range(k)]
            env = _environment(psi_k, fcs, s)
            norms = np.linalg.norm(env, axis=1)
            dead = norms < _ZERO_NORM
            if np.any(dead):
                for row in np.flatnonzero(dead):
                    z = rng.normal(size=dims[s]) + 1j * rng.normal(size=dims[s])
                    env[row] = z / np.linalg.norm(z)
                    norms[row] = 0.0
                    prev_overlap[idx[row]] = 0.0
                reinjections += int(np.count_nonzero(dead))
            alive = ~dead
            if np.any(norms[alive] < prev_overlap[idx][alive] - 1e-9):
                raise RuntimeError("ascent monotonicity violated; numerical fault")
            divisor = np.where(dead, 1.0, np.maximum(norms, _ZERO_NORM))
            factors[s][idx] = _gauge_fix(env / divisor[:, None])
            prev_overlap[idx] = norms
        lam2[idx] = prev_overlap[idx] ** 2
        done = np.abs(lam2[idx] - prev_sweep[idx]) < config.tol
        newly = idx[done]
        iterations[newly] = sweep
        converged[newly] = True
        active[newly] = False
        prev_sweep[idx] = lam2[idx]

    winner = int(np.argmax(lam2))
    product = ProductState(partition, tuple(factors[s][winner] for s in range(k)))
    best = float(lam2[winner])
    return OverlapResult(
        lambda2=best,
        e_g=1.0 - best,
        argmax=product,
        partition=partition,
        iterations=int(iterations[winner]),
        converged=bool(converged[winner]),
        winner_restart=winner,
        reinjections=reinjections,
    )


# ---------------------------------------------------------------------------
# brute-force reference maximizer
# ---------------------------------------------------------------------------

def _batch_hyperspherical(angle_grid: np.ndarray) -> np.ndarray:
    """angles (rows, d-1) -> nonnegative unit vectors (rows, d)."""
    rows, dm1 = angle_grid.shape
    v = np.empty((rows, dm1 + 1))
    prefix = np.ones(rows)
    for L in range(dm1):
        v[:, L] = prefix * np.cos(angle_grid[:, L])
        prefix = prefix * np.sin(angle_grid[:, L])
    v[:, dm1] = prefix
    return v


def _params_to_factor(params: np.ndarray, d: int) -> np.ndarray:
    """One parameter row (2d-2,) -> complex unit factor with first phase 0."""
    moduli = angles_to_amplitudes(params[: d - 1])
    phases = np.concatenate([[0.0], params[d - 1:]])
    return moduli * np.exp(1j * phases)


def _grid_factors(params: np.ndarray, d: int) -> np.ndarray:
    moduli = _batch_hyperspherical(params[:, : d - 1])
    phases = np.concatenate([np.zeros((params.shape[0], 1)), params[:, d - 1:]], axis=1)
    return moduli * np.exp(1j * phases)


def grid_oracle(psi: PureState, partition: Partition, resolution: int = 40) -> OverlapResult:
    """Brute-force reference maximizer: exhaustive grid plus local refinement.

    All blocks but the largest are gridded over their hyperspherical angles
    and relative phases; the largest factor is closed exactly, because for a
    fixed remainder the optimum over one unit factor is the contraction norm
    (a linear closure, not an iterative step). The best grid point is then
    polished with a derivative-free local search. Intended as an independent
    test oracle for small systems; refuses when the grid would be too large.
    """
    psi_k = _blocked_tensor(psi, partition)
    dims = list(psi_k.shape)
    k = len(dims)
    if k == 1:
        return best_overlap(psi, partition, OptimizerConfig(restarts=1))
    closed = k - 1  # canonical order puts a largest block last
    gridded = [s for s in range(k) if s != closed]
    n_params = sum(2 * dims[s] - 2 for s in gridded)
    if n_params > 10:
        raise ResourceCapError(
            f"grid oracle supports at most 10 gridded parameters, needs {n_params}"
        )
    total = resolution ** n_params
    if total > _MAX_GRID_POINTS:
        raise ResourceCapError(
            f"{total} grid points exceed the cap of {_MAX_GRID_POINTS}; "
            "lower the resolution"
        )

    angle_axis = np.linspace(0.0, np.pi / 2, resolution)
    phase_axis = np.linspace(0.0, 2 * np.pi, resolution, endpoint=False)
    # parameter layout: per gridded block, d-1 angles then d-1 phases
    param_axes = []
    for s in gridded:
        param_axes += [angle_axis] * (dims[s] - 1) + [phase_axis] * (dims[s] - 1)

    def params_for(flat: np.ndarray) -> np.ndarray:
        cols = []
        rem = flat
        for axis in reversed(param_axes):
            rem, digit = np.divmod(rem, resolution)
            cols.append(axis[digit])
        return np.stack(cols[::-1], axis=-1)

    best_value = -1.0
    best_flat = 0
    for start in range(0, total, _GRID_CHUNK):
        flat = np.arange(start, min(start + _GRID_CHUNK, total))
        params = params_for(flat)
        fcs = [None] * k
        offset = 0
        for s in gridded:
            width = 2 * dims[s] - 2
            fcs[s] = _grid_factors(params[:, offset:offset + width], dims[s]).conj()
            offset += width
        env = _environment(psi_k, fcs, closed)
        norms = np.linalg.norm(env, axis=1)
        arg = int(np.argmax(norms))
        if norms[arg] > best_value:
            best_value = float(norms[arg])
            best_flat = int(flat[arg])

    x0 = params_for(np.array([best_flat]))[0]
    splits = np.cumsum([2 * dims[s] - 2 for s in gridded])[:-1]
    bounds = []
    for s in gridded:
        bounds += [(0.0, np.pi / 2)] * (dims[s] - 1) + [(0.0, 2 * np.pi)] * (dims[s] - 1)

    def assemble(x):
        parts = np.split(x, splits)
        fcs = [None] * k
        for j, s in enumerate(gridded):
            fcs[s] = _params_to_factor(parts[j], dims[s]).conj().reshape(1, -1)
        return fcs

    def neg_value(x):
        env = _environment(psi_k, assemble(x), closed)
        return -float(np.linalg.norm(env[0]))

    res = scipy.optimize.minimize(neg_value, x0, method="Powell", bounds=bounds)
    x_best = res.x if -res.fun >= best_value else x0
    fcs = assemble(x_best)
    env = _environment(psi_k, fcs, closed)[0]
    norm = np.linalg.norm(env)
    factors = [None] * k
    parts = np.split(x_best, splits)
    for j, s in enumerate(gridded):
        factors[s] = _params_to_factor(parts[j], dims[s])
    factors[closed] = env / norm if norm > _ZERO_NORM else _single_excitation_uniform(dims[closed])
    product = ProductState(partition, tuple(factors))
    lam2 = float(norm ** 2)
    return OverlapResult(
        lambda2=lam2,
        e_g=1.0 - lam2,
        argmax=product,
        partition=partition,
        iterations=total,
        converged=True,
        winner_restart=0,
    )
