"""Frequency-space (Fourier) analysis of the periodic two-grid operator.

The periodic operator, smoothers and transfers are block circulant, so a
unitary basis of discrete grid functions turns them into small blocks
per frequency: 2x2 for operator and smoother, 2x4 / 4x2 for restriction
and prolongation once the two frequencies that alias on the coarse mesh
are grouped.  The resulting 4x4 two-grid block carries the exact
spectrum of the full iteration matrix.

Everything here is built numerically from the grid-function products;
printed closed forms are used as cross-checks in the test suite only.
"""

import math
from dataclasses import dataclass

import numpy as np

from .config import CELL, ProblemConfig, check_smoother

_SQRT_HALF = math.sqrt(0.5)

# Fine node offsets of the eight unknowns in cells (j-1 .. j+2) and of
# the four central unknowns in cells (j, j+1), for an even j (taken 0).
_POS_WIDE = np.array([-2, -1, -1, 0, 0, 1, 1, 2], dtype=float)
_POS_CENTER = np.array([-1, 0, 0, 1], dtype=float)
_POS_COARSE = np.array([-2, 0, 0, 2], dtype=float)
_PLUS_ROWS = (0, 2, 4, 6)
_MINUS_ROWS = (1, 3, 5, 7)


@dataclass(frozen=True)
class Frequency:
    """Integer frequency index k on a mesh of ``cells`` cells.

    The two-grid spectrum depends on k only through
    ``c_k = cos(4 pi k / J)``; indices ``1 <= k <= J/2`` cover it.
    """

    k: int
    cells: int

    def __post_init__(self):
        if not 1 <= self.k <= self.cells // 2:
            raise ValueError(f"need 1 <= k <= cells/2, got k={self.k}, cells={self.cells}")

    @property
    def angle(self) -> float:
        """Phase advance per fine node, ``2 pi k h``."""
        return 2.0 * math.pi * self.k / self.cells

    @property
    def ck(self) -> float:
        return math.cos(2.0 * self.angle)


@dataclass(frozen=True)
class SymbolSet:
    """Per-frequency blocks of the two-grid components.

    ``Ahat`` and ``Dhat`` are 4x4 and block diagonal over the aliasing
    frequency pair, ``Rhat`` is 2x4, ``Phat = 2 Rhat^*`` is 4x2,
    ``A0hat = Rhat Ahat Phat`` is the 2x2 Galerkin coarse block and
    ``Ehat`` the 4x4 error-propagation block.
    """

    Ahat: np.ndarray
    Dhat: np.ndarray
    Rhat: np.ndarray
    Phat: np.ndarray
    A0hat: np.ndarray
    Ehat: np.ndarray


def _stencil_rows(delta0: float, inv_gamma: float, kind: str | None) -> np.ndarray:
    """4x8 slab of operator (kind None) or smoother rows for two cells."""
    d = delta0 + inv_gamma / 3.0
    mu = inv_gamma / 6.0
    w = 1.0 - delta0
    T = np.zeros((4, 8))
    if kind is None:
        T[0, :5] = [-0.5, w, d, mu, -0.5]
        T[1, 1:6] = [-0.5, mu, d, w, -0.5]
        T[2, 2:7] = [-0.5, w, d, mu, -0.5]
        T[3, 3:8] = [-0.5, mu, d, w, -0.5]
    elif kind == CELL:
        T[0, 2:4] = [d, mu]
        T[1, 2:4] = [mu, d]
        T[2, 4:6] = [d, mu]
        T[3, 4:6] = [mu, d]
    else:  # point: blocks pair the unknowns meeting at a node
        T[0, 1:3] = [w, d]
        T[1, 3:5] = [d, w]
        T[2, 3:5] = [w, d]
        T[3, 5:7] = [d, w]
    return T


_RESTRICTION_ROWS = 0.5 * np.array(
    [
        [1.0, 0.5, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.5, 0.5, 1.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 1.0, 0.5, 0.5, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.5, 1.0],
    ]
)

_PROLONGATION_ROWS = np.array(
    [
        [0.5, 0.5, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.5, 0.5],
    ]
)


def _grid_factors(t: float) -> tuple:
    """Left/right grid-function factors for the frequency pair (t - pi, t)."""
    angles = (t - math.pi, t)
    Qr = np.zeros((8, 4), dtype=complex)
    for col, ang in enumerate(angles):
        Qr[_PLUS_ROWS, 2 * col] = np.exp(1j * ang * _POS_WIDE[list(_PLUS_ROWS)])
        Qr[_MINUS_ROWS, 2 * col + 1] = np.exp(1j * ang * _POS_WIDE[list(_MINUS_ROWS)])
    Qr *= _SQRT_HALF
    Ql = Qr[2:6].conj().T
    # coarse factors live on the even nodes, where both frequencies alias to t
    Ql0 = np.zeros((2, 4), dtype=complex)
    Ql0[0, (0, 2)] = np.exp(-1j * t * _POS_COARSE[[0, 2]])
    Ql0[1, (1, 3)] = np.exp(-1j * t * _POS_COARSE[[1, 3]])
    Ql0 *= 0.5
    Qr0 = np.zeros((4, 2), dtype=complex)
    Qr0[(0, 2), 0] = np.exp(1j * t * _POS_COARSE[[0, 2]])
    Qr0[(1, 3), 1] = np.exp(1j * t * _POS_COARSE[[1, 3]])
    return Ql, Qr, Ql0, Qr0


def _solve_2x2(M: np.ndarray) -> np.ndarray:
    """Inverse of a 2x2 block, falling back to the pseudo-inverse when the
    coarse constant mode makes it singular (pure diffusion at c_k = 1)."""
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    if abs(det) < 1e-12 * max(1.0, np.abs(M).max() ** 2):
        return np.linalg.pinv(M)
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]]) / det


def symbols_at_angle(
    t: float,
    delta0: float,
    inv_gamma: float,
    kind: str,
    alpha: float,
    scale: float = 1.0,
) -> SymbolSet:
    """Blocks of every two-grid component at node-phase ``t = 2 pi k h``."""
    check_smoother(kind)
    Ql, Qr, Ql0, Qr0 = _grid_factors(t)
    Ahat = scale * (Ql @ _stencil_rows(delta0, inv_gamma, None) @ Qr)
    Dhat = scale * (Ql @ _stencil_rows(delta0, inv_gamma, kind) @ Qr)
    Rhat = Ql0 @ _RESTRICTION_ROWS @ Qr
    Phat = Ql @ _PROLONGATION_ROWS @ Qr0
    A0hat = Rhat @ Ahat @ Phat
    identity = np.eye(4)
    smooth = identity - alpha * np.linalg.solve(Dhat, Ahat)
    correct = identity - Phat @ _solve_2x2(A0hat) @ Rhat @ Ahat
    return SymbolSet(Ahat, Dhat, Rhat, Phat, A0hat, correct @ smooth)


def symbol_blocks(freq: Frequency, config: ProblemConfig, kind: str, alpha: float) -> SymbolSet:
    """Symbol blocks at integer frequency ``freq`` of the given problem."""
    return symbols_at_angle(
        freq.angle,
        config.delta0,
        config.inv_gamma,
        kind,
        alpha,
        scale=1.0 / config.h**2,
    )


def symbols_at_ck(delta0: float, gamma: float, kind: str, alpha: float, ck: float) -> SymbolSet:
    """Symbol blocks parameterized by ``c_k`` directly (mesh-free mode)."""
    inv_gamma = 0.0 if math.isinf(gamma) else 1.0 / gamma
    t = 0.5 * math.acos(min(1.0, max(-1.0, ck)))
    return symbols_at_angle(t, delta0, inv_gamma, kind, alpha)


def two_grid_eigenvalues(config: ProblemConfig, kind: str, alpha: float) -> np.ndarray:
    """Spectrum of the periodic two-grid operator as the union over all
    frequency blocks ``k = 1 .. J/2`` (4 eigenvalues each)."""
    out = []
    for k in range(1, config.cells // 2 + 1):
        sym = symbol_blocks(Frequency(k, config.cells), config, kind, alpha)
        out.append(np.linalg.eigvals(sym.Ehat))
    return np.concatenate(out)


def fourier_basis(cells: int) -> np.ndarray:
    """Unitary 2J x 2J grid-function basis of the fine mesh.

    Column pair n (0-based) carries frequency ``(n+2)//2 - J/2`` for even
    n and ``(n+1)//2`` for odd n; the first column of each pair holds the
    grid function sampled at left traces, the second at right traces.
    """
    J = cells
    h = 1.0 / J
    Q = np.zeros((2 * J, 2 * J), dtype=complex)
    m = np.arange(J)
    for n in range(J):
        # block-column n+1 in 1-based counting
        kappa = (n + 2) // 2 - J // 2 if n % 2 == 0 else (n + 1) // 2
        Q[2 * m, 2 * n] = np.exp(2j * math.pi * kappa * m * h)
        Q[2 * m + 1, 2 * n + 1] = np.exp(2j * math.pi * kappa * (m + 1) * h)
    return math.sqrt(h) * Q


def block_circulant(blocks) -> np.ndarray:
    """Assemble the block-circulant matrix whose first block row is ``blocks``."""
    blocks = [np.asarray(b, dtype=float) for b in blocks]
    J = len(blocks)
    C = np.zeros((2 * J, 2 * J))
    for i in range(J):
        for j in range(J):
            C[2 * i : 2 * i + 2, 2 * j : 2 * j + 2] = blocks[(j - i) % J]
    return C


def verify_block_diagonalization(blocks, cells: int) -> tuple:
    """Residuals of the block-diagonalization of a block-circulant matrix.

    Returns ``(off_block_residual, unitarity_residual)`` where the first
    is the largest modulus of ``Q* C Q`` outside its 2x2 diagonal blocks
    and the second is ``max|Q* Q - I|``.
    """
    if len(blocks) != cells:
        raise ValueError(f"need {cells} blocks for a {2 * cells}x{2 * cells} circulant")
    C = block_circulant(blocks)
    Q = fourier_basis(cells)
    M = Q.conj().T @ C @ Q
    off = M.copy()
    for n in range(cells):
        off[2 * n : 2 * n + 2, 2 * n : 2 * n + 2] = 0.0
    unitarity = np.abs(Q.conj().T @ Q - np.eye(2 * cells)).max()
    return float(np.abs(off).max()), float(unitarity)
