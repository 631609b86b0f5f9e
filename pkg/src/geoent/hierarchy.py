"""Absolute K-separability measures, full hierarchies, and structural checks.

The absolute measure at a given K is the minimum of the relative measure
over K-block partitions. Symmetric states (invariant under every qubit
transposition) need only one representative partition per block-size shape;
asymmetric states are scanned over all set partitions, within size caps.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import closedform
from .errors import DomainError, ResourceCapError
from .optimizer import OptimizerConfig, OverlapResult, best_overlap
from .partitions import Partition, Shape, representative_partition, set_partitions, shapes
from .states import PureState, ghz, magnon, permute_qubits, superpose, w, w_tilde3

SYMMETRY_TOL = 1e-10
DEGENERACY_TOL = 1e-9
MONOTONICITY_TOL = 1e-9


def _max_full_scan() -> int:
    return int(os.environ.get("GEOENT_MAX_FULL_SCAN", "8"))


def _max_shape_scan() -> int:
    return int(os.environ.get("GEOENT_MAX_SHAPE_SCAN", "14"))


def is_symmetric(psi: PureState, tol: float = SYMMETRY_TOL) -> bool:
    """True iff the state is invariant under every adjacent qubit transposition."""
    n = psi.num_qubits
    for q in range(1, n):
        sigma = list(range(1, n + 1))
        sigma[q - 1], sigma[q] = sigma[q], sigma[q - 1]
        if not psi.allclose(permute_qubits(psi, sigma), tol):
            return False
    return True


def egk_relative(psi: PureState, partition: Partition, config: OptimizerConfig | None = None) -> OverlapResult:
    """Partition-dependent measure E_G^(K)(Q_1|...|Q_K) = 1 - Lambda_K^2."""
    return best_overlap(psi, partition, config)


def _relative_e_task(args):
    amps, n, blocks, cfg = args
    psi = PureState(n, np.asarray(amps))
    partition = Partition(blocks)
    config = OptimizerConfig(**cfg)
    return best_overlap(psi, partition, config).e_g


def _relative_values(psi, partitions, config, workers):
    if workers <= 1 or len(partitions) <= 1:
        return [best_overlap(psi, p, config).e_g for p in partitions]
    cfg = {
        "restarts": config.restarts,
        "max_iterations": config.max_iterations,
        "tol": config.tol,
        "seed": config.seed,
        "grid_resolution": config.grid_resolution,
    }
    tasks = [(psi.amplitudes, psi.num_qubits, p.blocks, cfg) for p in partitions]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_relative_e_task, tasks))


@dataclass(frozen=True)
class KEntry:
    k: int
    absolute_e: float
    argmin_partitions: tuple[Partition, ...]
    relative: dict
    scan: str
    reran: bool = False


@dataclass(frozen=True)
class HierarchyReport:
    num_qubits: int
    symmetric: bool
    entries: tuple[KEntry, ...]
    monotonic: bool
    violations: tuple[tuple[int, float, float], ...]

    def entry(self, k: int) -> KEntry:
        for e in self.entries:
            if e.k == k:
                return e
        raise KeyError(k)

    def to_dict(self) -> dict:
        return {
            "n": self.num_qubits,
            "symmetric": self.symmetric,
            "monotonic": self.monotonic,
            "violations": [list(v) for v in self.violations],
            "entries": [
                {
                    "k": e.k,
                    "absolute_e": e.absolute_e,
                    "argmin_partitions": [p.text for p in e.argmin_partitions],
                    "scan": e.scan,
                    "relative": dict(e.relative),
                }
                for e in self.entries
            ],
        }


def _resolve_scan(psi: PureState, scan: str) -> str:
    n = psi.num_qubits
    if scan == "shapes" or (scan == "auto" and is_symmetric(psi)):
        if n > _max_shape_scan():
            raise ResourceCapError(
                f"N={n} exceeds the shape-scan cap of {_max_shape_scan()}"
            )
        return "shapes"
    if scan in ("auto", "full"):
        if n > _max_full_scan():
            raise ResourceCapError(
                f"N={n} exceeds the full set-partition scan cap of {_max_full_scan()}; "
                "use the shapes-only scan"
            )
        return "full"
    raise DomainError(f"unknown scan mode {scan!r}")


def _scan_k(psi, k, config, scan_mode, workers) -> KEntry:
    n = psi.num_qubits
    if scan_mode == "shapes":
        partitions = [representative_partition(s) for s in shapes(n, k)]
        keys = [p.shape.text for p in partitions]
    else:
        partitions = sorted(set_partitions(n, k), key=lambda p: p.sort_key())
        keys = [p.text for p in partitions]
    values = _relative_values(psi, partitions, config, workers)
    minimum = min(values)
    argmin = tuple(
        p for p, v in zip(partitions, values) if v <= minimum + DEGENERACY_TOL
    )
    relative = dict(zip(keys, values))
    return KEntry(k, minimum, argmin, relative, scan_mode)


def egk_absolute(psi: PureState, k: int, config: OptimizerConfig | None = None,
                 scan: str = "auto", workers: int = 1):
    """Absolute measure: minimum of the relative measure over K-block partitions.

    Returns (value, realizing_partitions); every partition within 1e-9 of the
    minimum is reported, in canonical order.
    """
    if not 2 <= k <= psi.num_qubits:
        raise DomainError(f"need 2 <= K <= N, got K={k}, N={psi.num_qubits}")
    config = config or OptimizerConfig()
    entry = _scan_k(psi, k, config, _resolve_scan(psi, scan), workers)
    return entry.absolute_e, list(entry.argmin_partitions)


def full_hierarchy(psi: PureState, config: OptimizerConfig | None = None,
                   scan: str = "auto", workers: int = 1) -> HierarchyReport:
    """Absolute measures for K = 2..N with the monotonicity verdict.

    The law E^(K-1) <= E^(K) is a theorem; an apparent violation means the
    (K-1)-scan under-optimized, so that scan is re-run once with 4x restarts
    before the violation is reported.
    """
    config = config or OptimizerConfig()
    n = psi.num_qubits
    scan_mode = _resolve_scan(psi, scan)
    symmetric = is_symmetric(psi)
    entries = {k: _scan_k(psi, k, config, scan_mode, workers) for k in range(2, n + 1)}

    # Descending sweep: re-running K-1 can only lower E^(K-1), which only
    # affects the pair below it, examined later in this order.
    for k in range(n, 2, -1):
        if entries[k - 1].absolute_e > entries[k].absolute_e + MONOTONICITY_TOL:
            boosted = replace(config, restarts=config.restarts * 4)
            entries[k - 1] = replace(
                _scan_k(psi, k - 1, boosted, scan_mode, workers), reran=True
            )
    violations = [
        (k, entries[k - 1].absolute_e, entries[k].absolute_e)
        for k in range(3, n + 1)
        if entries[k - 1].absolute_e > entries[k].absolute_e + MONOTONICITY_TOL
    ]
    return HierarchyReport(
        num_qubits=n,
        symmetric=symmetric,
        entries=tuple(entries[k] for k in range(2, n + 1)),
        monotonic=not violations,
        violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# structural checks and curve sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScaleCheck:
    family: str
    shape: Shape
    scale: int
    scaled_shape: Shape
    base_e: float
    scaled_e: float
    eta: float | None = None

    @property
    def diff(self) -> float:
        return abs(self.base_e - self.scaled_e)


def _family_state(family: str, n: int, eta: float | None):
    if family == "w":
        return w(n)
    if family == "magnon2":
        return magnon(n, 2)
    if family == "wghz":
        if eta is None:
            raise DomainError("family 'wghz' requires eta")
        return superpose(np.cos(eta), w(n), np.sin(eta), 0.0, ghz(n))
    raise DomainError(f"unknown scalable family {family!r}")


def scale_invariance_check(family: str, shape: Shape, l: int,
                           config: OptimizerConfig | None = None,
                           eta: float | None = None) -> ScaleCheck:
    """Compare E on a shape with E on the L-scaled shape of the scaled state."""
    config = config or OptimizerConfig()
    if l < 1:
        raise DomainError("scale factor must be >= 1")
    scaled = shape.scaled(l)
    if scaled.n > _max_shape_scan():
        raise ResourceCapError(
            f"scaled system of {scaled.n} qubits exceeds the cap of {_max_shape_scan()}"
        )
    base = best_overlap(_family_state(family, shape.n, eta),
                        representative_partition(shape), config)
    big = best_overlap(_family_state(family, scaled.n, eta),
                       representative_partition(scaled), config)
    return ScaleCheck(family, shape, l, scaled, base.e_g, big.e_g, eta)


def sweep_eta(family: str, etas, config: OptimizerConfig | None = None, *,
              phi: float = 0.0, k: int = 3, m1: int = 1, n: int = 3):
    """(eta, E) pairs along a mixing-angle grid for the superposition families.

    family 'w_w_tilde' / 'w_ghz3': 3-qubit superpositions with relative phase
    ``phi``; ``k`` selects E^(2) (bipartition 1|2) or E^(3) (full separability),
    computed with the numeric optimizer. family 'wghz': E^(2)(m1 | n-m1) of the
    real N-qubit superposition via the reduced 4-angle closed form.
    """
    config = config or OptimizerConfig()
    etas = [float(e) for e in etas]
    rows = []
    if family in ("w_w_tilde", "w_ghz3"):
        other = w_tilde3() if family == "w_w_tilde" else ghz(3)
        if k == 3:
            partition = Partition(((1,), (2,), (3,)))
        elif k == 2:
            partition = Partition(((1,), (2, 3)))
        else:
            raise DomainError("three-qubit sweeps support k = 2 or 3")
        for eta in etas:
            psi = superpose(np.cos(eta), w(3), np.sin(eta), phi, other)
            rows.append((eta, best_overlap(psi, partition, config).e_g))
    elif family == "wghz":
        if not 1 <= m1 <= n - 1:
            raise DomainError(f"need 1 <= m1 < n, got m1={m1}, n={n}")
        for eta in etas:
            rows.append((eta, closedform.wghz_bisep_reduced(eta, m1, n - m1).e_g))
    else:
        raise DomainError(f"unknown sweep family {family!r}")
    return rows
