"""Two-level preconditioner, stationary iteration and dense spectra."""

from dataclasses import dataclass, field

import numpy as np

from .assembly import (
    assemble_coarse,
    assemble_operator,
    assemble_smoother,
    assemble_transfer,
    smoother_partition,
)
from .config import ProblemConfig


class EigenSolverError(RuntimeError):
    """The dense eigenvalue iteration did not converge."""


@dataclass
class IterationHistory:
    residual_norms: list
    iterations: int
    converged: bool
    diverged: bool = False


@dataclass
class TwoLevelComponents:
    """Immutable bundle of the two-level method's operators.

    ``A`` is the fine operator, ``D`` the block-diagonal smoother whose
    blocks are listed by ``partition``, ``R``/``P`` the transfers,
    ``A0 = R A P`` the Galerkin coarse operator and ``alpha`` the
    smoother relaxation.  Block factorizations and the coarse solve are
    prepared once at construction.
    """

    A: np.ndarray
    D: np.ndarray
    R: np.ndarray
    P: np.ndarray
    A0: np.ndarray
    alpha: float
    partition: list
    _block_inverses: list = field(default_factory=list, repr=False)
    _A0_inverse: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        n = self.A.shape[0]
        if self.A.shape != (n, n) or self.D.shape != (n, n):
            raise ValueError("A and D must be square and of equal size")
        if self.R.shape != (n // 2, n) or self.P.shape != (n, n // 2):
            raise ValueError("transfer operators have incompatible shapes")
        self._block_inverses = [
            np.linalg.inv(self.D[np.ix_(g, g)]) for g in self.partition
        ]
        # The periodic pure-diffusion coarse operator is singular on the
        # constant vector; the pseudo-inverse removes exactly that mode.
        ones = np.ones(self.A0.shape[0])
        if np.abs(self.A0 @ ones).max() < 1e-8 * np.abs(self.A0).max():
            self._A0_inverse = np.linalg.pinv(self.A0)
        else:
            self._A0_inverse = np.linalg.inv(self.A0)

    def smooth(self, g: np.ndarray) -> np.ndarray:
        """Apply D^{-1} block by block."""
        x = np.zeros_like(g, dtype=float)
        for grp, inv in zip(self.partition, self._block_inverses):
            x[grp] = inv @ g[grp]
        return x

    def coarse_solve(self, g: np.ndarray) -> np.ndarray:
        return self._A0_inverse @ g


def two_level_components(config: ProblemConfig, kind: str, alpha: float) -> TwoLevelComponents:
    """Build every operator of the two-level method for ``config``."""
    A = assemble_operator(config)
    D = assemble_smoother(config, kind)
    R, P = assemble_transfer(config.cells)
    A0 = assemble_coarse(A, R, P)
    return TwoLevelComponents(A, D, R, P, A0, alpha, smoother_partition(config, kind))


def apply_preconditioner(tl: TwoLevelComponents, g: np.ndarray) -> np.ndarray:
    """One application of the two-level preconditioner to a residual g.

    Smooths with the relaxed block solve, then corrects on the coarse
    space: ``y = x + P A0^{-1} R (g - A x)`` with ``x = alpha D^{-1} g``.
    """
    g = np.asarray(g, dtype=float)
    x = tl.alpha * tl.smooth(g)
    return x + tl.P @ tl.coarse_solve(tl.R @ (g - tl.A @ x))


def build_iteration_matrix(tl: TwoLevelComponents) -> np.ndarray:
    """Dense error-propagation matrix
    ``E = (I - P A0^{-1} R A)(I - alpha D^{-1} A)``."""
    n = tl.A.shape[0]
    identity = np.eye(n)
    smooth = identity - tl.alpha * np.column_stack([tl.smooth(col) for col in tl.A.T])
    correct = identity - tl.P @ tl.coarse_solve(tl.R @ tl.A)
    return correct @ smooth


def spectral_radius_dense(M: np.ndarray) -> float:
    """Largest eigenvalue modulus of a dense square matrix.

    Uses the full nonsymmetric eigensolver (Hessenberg reduction plus
    shifted QR); matrices are restricted to desk scale.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"need a square matrix, got shape {M.shape}")
    if M.shape[0] > 1024:
        raise ValueError("matrix larger than the supported desk scale (1024)")
    try:
        return float(np.abs(np.linalg.eigvals(M)).max())
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(str(exc)) from exc


def stationary_solve(
    tl: TwoLevelComponents, f: np.ndarray, tol: float, maxit: int
) -> IterationHistory:
    """Run ``u <- u + M^{-1}(f - A u)`` from u = 0, recording residuals.

    Converged when the 2-norm residual drops below ``tol`` relative to
    the initial one; flagged as diverged when it grows beyond 1e8 times
    the initial residual.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    if maxit < 1:
        raise ValueError("maxit must be at least 1")
    f = np.asarray(f, dtype=float)
    u = np.zeros_like(f)
    r = f.copy()
    norms = [float(np.linalg.norm(r))]
    if norms[0] == 0.0:
        return IterationHistory(norms, 0, True)
    for it in range(1, maxit + 1):
        u += apply_preconditioner(tl, r)
        r = f - tl.A @ u
        norms.append(float(np.linalg.norm(r)))
        if norms[-1] <= tol * norms[0]:
            return IterationHistory(norms, it, True)
        if norms[-1] > 1e8 * norms[0]:
            return IterationHistory(norms, it, False, diverged=True)
    return IterationHistory(norms, maxit, False)


def convergence_factor(history: IterationHistory, window: int = 10) -> float:
    """Asymptotic residual reduction per step, as the geometric mean of
    the last ``window`` recorded ratios (damps transient effects)."""
    norms = [n for n in history.residual_norms if n > 0.0]
    if len(norms) < 2:
        return 0.0
    w = min(window, len(norms) - 1)
    return (norms[-1] / norms[-1 - w]) ** (1.0 / w)
