"""Diagonal coefficient tables and their brute-force oracle.

The entry at (n, k) is the grid quadrature of 1_E . f^n . e^{-2 pi i (n-k) nu . x}.
The production path maintains the masked power sequence with one pointwise
multiplication per n, re-projecting every step to unit modulus on E so that
modulus drift stays at rounding level even for n ~ 10^4, and takes character
inner products over the k window directly.  Negative rows use the pointwise
conjugate-power reading f^m = conj(f)^|m| on E (where |f| = 1).  All
reductions are compensated and fixed-order, so tables are bit-identical
across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .accum import csum, csum_rows
from .symbols import (
    GridSampling,
    ResolutionError,
    SymbolError,
    TrigSymbol,
    UnitModulusSet,
    grid_phase,
    unit_modulus_set,
)

# A true unit-modulus set of measure zero shows up on a grid as a lower
# dimensional slice with mask fraction O(1/G); below this fraction the table
# is declared degenerate and forced to exact zeros.
DEGENERATE_MEASURE_FACTOR = 8.0

ENTRY_BOUND_SLACK = 1e-12


class TableError(ValueError):
    pass


def default_degenerate_tol(resolution: Sequence[int]) -> float:
    return DEGENERATE_MEASURE_FACTOR / min(resolution)


def k_values_for_window(k_window) -> tuple[int, ...]:
    if isinstance(k_window, int):
        if k_window < 0:
            raise TableError("k window must be >= 0")
        return tuple(range(-k_window, k_window + 1))
    return tuple(int(k) for k in k_window)


def required_resolution(nu: Sequence[int], n_abs_max: int, k_abs_max: int) -> tuple[int, ...]:
    """Per-axis resolution needed for spectral exactness of the characters."""
    return tuple(2 * abs(int(v)) * (n_abs_max + k_abs_max) + 2 for v in nu)


@dataclass
class DiagonalTable:
    """Values b_{n,n-k} for n in a range and k in a window, plus grid metadata."""

    nu: tuple[int, ...]
    n_min: int
    n_max: int
    k_values: tuple[int, ...]
    values: np.ndarray  # shape (n_max - n_min + 1, len(k_values))
    resolution: tuple[int, ...]
    e_tol: float
    e_measure: float
    degenerate: bool

    def row_index(self, n: int) -> int:
        if not self.n_min <= n <= self.n_max:
            raise TableError(f"n={n} outside table range [{self.n_min}, {self.n_max}]")
        return n - self.n_min

    def entry(self, n: int, k: int) -> complex:
        try:
            kj = self.k_values.index(k)
        except ValueError:
            raise TableError(f"k={k} outside table window {self.k_values}") from None
        return complex(self.values[self.row_index(n), kj])

    def abs2_column(self, k: int) -> np.ndarray:
        kj = self.k_values.index(k)
        return np.abs(self.values[:, kj]) ** 2

    @property
    def n_values(self) -> np.ndarray:
        return np.arange(self.n_min, self.n_max + 1)

    def write_csv(self, path, meta: dict | None = None) -> None:
        lines = ["# watlab diagonal table"]
        for key, val in (meta or {}).items():
            lines.append(f"# {key}: {val}")
        lines.append(f"# nu: {list(self.nu)}")
        lines.append(f"# grid: {list(self.resolution)}")
        lines.append(f"# e_tol: {self.e_tol!r}")
        lines.append(f"# e_measure: {self.e_measure!r}")
        lines.append(f"# degenerate: {self.degenerate}")
        lines.append("n,k,re,im,abs2")
        for i, n in enumerate(range(self.n_min, self.n_max + 1)):
            for j, k in enumerate(self.k_values):
                v = self.values[i, j]
                re, im = float(v.real), float(v.imag)
                lines.append(f"{n},{k},{re!r},{im!r},{re * re + im * im!r}")
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")


def _masked_geometry(E: UnitModulusSet, nu: Sequence[int]):
    res = E.sampling.resolution
    flat_mask = E.mask.ravel()
    idx = np.flatnonzero(flat_mask)
    samples = E.sampling.samples.ravel()[idx]
    phase = grid_phase(res, nu).ravel()[idx]
    return samples, phase


def compute_b_table(
    f: TrigSymbol,
    E: UnitModulusSet,
    nu: Sequence[int],
    n_range: tuple[int, int],
    k_window,
    degenerate_tol: float | None = None,
) -> DiagonalTable:
    nu = tuple(int(v) for v in nu)
    if len(nu) != f.dimension:
        raise TableError("nu dimension mismatch")
    n_min, n_max = int(n_range[0]), int(n_range[1])
    if n_min > n_max:
        raise TableError("empty n range")
    k_values = k_values_for_window(k_window)
    res = E.sampling.resolution
    k_abs = max((abs(k) for k in k_values), default=0)
    need = required_resolution(nu, max(abs(n_min), abs(n_max)), k_abs)
    if any(g < r for g, r in zip(res, need)):
        raise ResolutionError(
            f"grid {res} cannot resolve characters up to (n-k)nu; "
            f"required per-axis resolution: {need}"
        )

    if degenerate_tol is None:
        degenerate_tol = default_degenerate_tol(res)
    n_count = n_max - n_min + 1
    values = np.zeros((n_count, len(k_values)), dtype=np.complex128)
    degenerate = E.measure <= degenerate_tol
    if degenerate:
        return DiagonalTable(
            nu=nu, n_min=n_min, n_max=n_max, k_values=k_values, values=values,
            resolution=res, e_tol=E.tol, e_measure=E.measure, degenerate=True,
        )

    samples, phase = _masked_geometry(E, nu)
    total = E.sampling.size
    u = samples / np.abs(samples)
    step = u * np.exp(-2j * np.pi * phase)
    chars = np.exp(2j * np.pi * np.outer(np.asarray(k_values), phase))
    prod = np.empty_like(chars)

    def emit(n: int, h: np.ndarray) -> None:
        np.multiply(chars, h, out=prod)
        values[n - n_min, :] = csum_rows(prod) / total

    h = np.ones(samples.size, dtype=np.complex128)
    if n_min <= 0 <= n_max:
        emit(0, h)
    for n in range(1, n_max + 1):
        h *= step
        h /= np.abs(h)
        if n >= n_min:
            emit(n, h)
    if n_min < 0:
        h = np.ones(samples.size, dtype=np.complex128)
        step_neg = np.conj(step)
        for n in range(-1, n_min - 1, -1):
            h *= step_neg
            h /= np.abs(h)
            if n <= n_max:
                emit(n, h)

    peak = float(np.abs(values).max()) if values.size else 0.0
    if peak > E.measure + ENTRY_BOUND_SLACK:
        raise TableError(
            f"entry bound violated: max |b| = {peak} > measure(E) = {E.measure}"
        )
    return DiagonalTable(
        nu=nu, n_min=n_min, n_max=n_max, k_values=k_values, values=values,
        resolution=res, e_tol=E.tol, e_measure=E.measure, degenerate=False,
    )


def brute_force_b(
    f: TrigSymbol,
    nu: Sequence[int],
    n: int,
    k: int,
    resolution: Sequence[int] | int,
    e_tol: float = 1e-9,
) -> complex:
    """Direct quadrature of the defining integral with fresh pointwise
    exponentiation: no power iteration, no unit-modulus re-projection."""
    nu = tuple(int(v) for v in nu)
    sampling = f.evaluate_on_grid(resolution)
    if any(
        abs((n - k) * v) >= g / 2 for v, g in zip(nu, sampling.resolution)
    ):
        need = required_resolution(nu, abs(n), abs(k))
        raise ResolutionError(
            f"grid {sampling.resolution} cannot resolve character (n-k)nu; "
            f"required per-axis resolution: {need}"
        )
    E = unit_modulus_set(sampling, e_tol)
    if E.measure == 0.0:
        return 0j
    samples, phase = _masked_geometry(E, nu)
    if n >= 0:
        w = samples**n
    else:
        w = np.conj(samples) ** (-n)
    vals = w * np.exp(-2j * np.pi * (n - k) * phase)
    return csum(vals) / sampling.size


@dataclass
class MatrixSlab:
    """Composition-matrix rows c_{n,beta} on the full circle (d=1)."""

    n_min: int
    n_max: int
    beta_values: tuple[int, ...]
    values: np.ndarray
    resolution: int

    def entry(self, n: int, beta: int) -> complex:
        return complex(
            self.values[n - self.n_min, self.beta_values.index(beta)]
        )

    def row_power(self, n: int) -> float:
        """Sum of |c_{n,beta}|^2 over the stored betas (at most 1)."""
        row = self.values[n - self.n_min]
        return float(math.fsum((np.abs(row) ** 2).tolist()))


def compute_c_table(
    phi: TrigSymbol,
    n_range: tuple[int, int],
    beta_range: tuple[int, int],
    resolution: int,
) -> MatrixSlab:
    if phi.dimension != 1:
        raise TableError("c tables are defined on the circle (d=1)")
    n_min, n_max = int(n_range[0]), int(n_range[1])
    if n_min < 0:
        raise TableError("c table rows require n >= 0")
    b_min, b_max = int(beta_range[0]), int(beta_range[1])
    betas = tuple(range(b_min, b_max + 1))
    sampling = phi.evaluate_on_grid(resolution)
    g = sampling.resolution[0]
    if max(abs(b_min), abs(b_max)) >= g / 2:
        raise ResolutionError(f"beta range {beta_range} beyond Nyquist for grid {g}")
    x = np.arange(g) / g
    chars = np.exp(-2j * np.pi * np.outer(np.asarray(betas), x))
    prod = np.empty_like(chars)
    values = np.zeros((n_max - n_min + 1, len(betas)), dtype=np.complex128)
    w = np.ones(g, dtype=np.complex128)
    samples = sampling.samples

    def emit(n: int) -> None:
        np.multiply(chars, w, out=prod)
        row = csum_rows(prod) / g
        values[n - n_min, :] = row

    if n_min == 0:
        emit(0)
    for n in range(1, n_max + 1):
        w = w * samples
        if n >= n_min:
            emit(n)
    slab = MatrixSlab(
        n_min=n_min, n_max=n_max, beta_values=betas, values=values, resolution=g
    )
    for n in range(n_min, n_max + 1):
        if slab.row_power(n) > 1.0 + 1e-9:
            raise TableError(f"row Parseval bound violated at n={n}")
    return slab
