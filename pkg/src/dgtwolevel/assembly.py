"""Dense assembly of the interior-penalty operator, smoothers and transfers.

Unknowns are ordered cell by cell, ``(u_0^+, u_0^-, u_1^+, u_1^-, ...)``,
where ``u_j^+`` is the trace at the left end of cell ``j`` and ``u_j^-``
the trace at its right end.  All operators carry the ``1/h**2`` scaling
of the discrete problem, so their spectra depend on ``(delta0, gamma)``
only.
"""

import numpy as np

from .config import CELL, DIRICHLET, PERIODIC, ProblemConfig, check_smoother


class SingularBlockError(ValueError):
    """A smoother block cannot be inverted."""

    def __init__(self, block_index: int, message: str):
        self.block_index = block_index
        super().__init__(f"block {block_index}: {message}")


def symmetry_defect(A: np.ndarray) -> float:
    """Return ``max|A - A^T|`` relative to ``max|A|`` (0 for symmetric A)."""
    scale = np.abs(A).max()
    if scale == 0.0:
        return 0.0
    return float(np.abs(A - A.T).max() / scale)


def assemble_operator(config: ProblemConfig) -> np.ndarray:
    """Assemble the 2J x 2J interior-penalty reaction-diffusion matrix.

    Interior rows follow the five-point pattern
    ``(1/h^2) * [-1/2, 1/(6 gamma), delta0 + 1/(3 gamma), 1 - delta0, -1/2]``
    (row parity decides which off-diagonal carries the mass coupling and
    which the cross-node penalty coupling).  In periodic mode the pattern
    wraps block-circulantly.  In Dirichlet mode the boundary value is
    imposed weakly: jump and derivative average degenerate to the
    single-sided trace and the boundary face carries penalty weight
    ``2 delta0 / h`` (the doubled weight keeps the form coercive down to
    delta0 = 1 and reproduces the measured Dirichlet spectra; a one-sided
    trace inequality needs twice the interior constant).
    """
    J = config.cells
    d = config.delta0 + config.inv_gamma / 3.0
    mu = config.inv_gamma / 6.0
    cross = 1.0 - config.delta0
    n = 2 * J
    A = np.zeros((n, n))
    for j in range(J):
        p, m = 2 * j, 2 * j + 1
        A[p, p] = d
        A[m, m] = d
        A[p, m] = A[m, p] = mu
        if j + 1 < J or config.bc == PERIODIC:
            q, r = (2 * j + 2) % n, (2 * j + 3) % n
            A[m, q] = A[q, m] = cross
            A[p, q] = A[q, p] = -0.5
            A[m, r] = A[r, m] = -0.5
    if config.bc == DIRICHLET:
        corner = 2.0 * config.delta0 - 1.0 + config.inv_gamma / 3.0
        edge = 0.5 + mu
        A[0, 0] = corner
        A[0, 1] = A[1, 0] = edge
        A[-1, -1] = corner
        A[-1, -2] = A[-2, -1] = edge
    return A / config.h**2


def smoother_partition(config: ProblemConfig, kind: str) -> list:
    """Index groups of the block-Jacobi partition, in mesh order.

    Cell blocks pair the two unknowns of each cell.  Point blocks pair
    the two unknowns meeting at a node; under Dirichlet conditions the
    two boundary nodes carry a single unknown each, so the first and
    last groups degenerate to singletons.
    """
    J = config.cells
    n = 2 * J
    check_smoother(kind)
    if kind == CELL:
        return [np.array([2 * j, 2 * j + 1]) for j in range(J)]
    if config.bc == PERIODIC:
        return [np.array([2 * j + 1, (2 * j + 2) % n]) for j in range(J)]
    groups = [np.array([0])]
    groups += [np.array([2 * j + 1, 2 * j + 2]) for j in range(J - 1)]
    groups.append(np.array([n - 1]))
    return groups


def assemble_smoother(config: ProblemConfig, kind: str) -> np.ndarray:
    """Assemble the block-diagonal smoother matrix D (not its inverse).

    Cell blocks are ``(1/h^2) * [[delta0 + 1/(3 gamma), 1/(6 gamma)],
    [1/(6 gamma), delta0 + 1/(3 gamma)]]`` for every cell; point blocks
    couple the node pair with off-diagonal ``1 - delta0``.  The Dirichlet
    point smoother keeps 1x1 corner blocks holding the operator's
    diagonal entry at the unpaired boundary unknowns.
    """
    J = config.cells
    d = config.delta0 + config.inv_gamma / 3.0
    mu = config.inv_gamma / 6.0
    check_smoother(kind)
    D = np.zeros((2 * J, 2 * J))
    off = mu if kind == CELL else 1.0 - config.delta0
    for group in smoother_partition(config, kind):
        if len(group) == 1:
            # unpaired boundary unknown: diagonal entry of the Dirichlet matrix
            D[group[0], group[0]] = 2.0 * config.delta0 - 1.0 + config.inv_gamma / 3.0
        else:
            a, b = group
            D[a, a] = D[b, b] = d
            D[a, b] = D[b, a] = off
    D /= config.h**2
    for i, group in enumerate(smoother_partition(config, kind)):
        block = D[np.ix_(group, group)]
        if abs(np.linalg.det(block)) < 1e-14 * max(1.0, np.abs(block).max() ** len(group)):
            raise SingularBlockError(i, f"singular smoother block {block.tolist()}")
    return D


def assemble_transfer(cells: int) -> tuple:
    """Restriction R (J x 2J) and prolongation P = 2 R^T (2J x J).

    Each coarse cell joins two neighboring fine cells; restriction rows
    are ``(1/2) [1, 1/2, 1/2]`` and ``(1/2) [1/2, 1/2, 1]`` over the four
    fine unknowns of the pair, and P interpolates linearly.  The pattern
    is identical for periodic and Dirichlet meshes (no coupling crosses
    the pairing boundary, so the periodic wrap is vacuous).
    """
    if cells % 2 != 0:
        raise ValueError("cells must be even to coarsen by pairing")
    J = cells
    R = np.zeros((J, 2 * J))
    for M in range(J // 2):
        c = 4 * M
        R[2 * M, c] = 1.0
        R[2 * M, c + 1] = R[2 * M, c + 2] = 0.5
        R[2 * M + 1, c + 1] = R[2 * M + 1, c + 2] = 0.5
        R[2 * M + 1, c + 3] = 1.0
    R *= 0.5
    return R, 2.0 * R.T


def assemble_coarse(A: np.ndarray, R: np.ndarray, P: np.ndarray) -> np.ndarray:
    """Galerkin coarse operator ``A0 = R A P``."""
    if A.shape[0] != A.shape[1] or R.shape[1] != A.shape[0] or P.shape[0] != A.shape[1]:
        raise ValueError(
            f"incompatible shapes: A {A.shape}, R {R.shape}, P {P.shape}"
        )
    return R @ A @ P
