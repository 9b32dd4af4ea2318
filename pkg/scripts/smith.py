"""
Forma Normal de Smith e álgebra linear inteira exata.

Todas as contas de módulos finitos se reduzem a matrizes inteiras. As
matrizes são arrays numpy de dtype ``object`` com inteiros Python, de modo
que não há estouro nem ponto flutuante em nenhuma etapa.
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)


def int_matrix(rows: Sequence[Sequence[int]], shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
    """
    Converte linhas em matriz inteira exata (dtype object).

    Args:
        rows (Sequence[Sequence[int]]): Linhas da matriz.
        shape (Optional[Tuple[int, int]]): Forma esperada; obrigatória quando
            não há linhas ou colunas.

    Returns:
        np.ndarray: Matriz m×n de inteiros Python.
    """
    if shape is None:
        m = len(rows)
        n = len(rows[0]) if m else 0
    else:
        m, n = shape
    out = np.zeros((m, n), dtype=object)
    for i in range(m):
        for j in range(n):
            out[i, j] = int(rows[i][j])
    return out


def identity_matrix(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def zero_matrix(m: int, n: int) -> np.ndarray:
    return np.zeros((m, n), dtype=object)


def as_tuple(matrix: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
    """Matriz como tupla de tuplas de int (forma imutável e hasheável)."""
    return tuple(tuple(int(v) for v in row) for row in matrix)


def _smith(A: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    D = np.array(A, dtype=object).copy()
    m, n = D.shape
    U = identity_matrix(m)
    V = identity_matrix(n)
    Vinv = identity_matrix(n)

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            D[[i, j], :] = D[[j, i], :]
            U[[i, j], :] = U[[j, i], :]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            D[:, [i, j]] = D[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]
            Vinv[[i, j], :] = Vinv[[j, i], :]

    for t in range(min(m, n)):
        while True:
            block = D[t:, t:]
            nonzero = [(abs(block[i, j]), i, j) for i in range(m - t) for j in range(n - t) if block[i, j] != 0]
            if not nonzero:
                return U, D, V, Vinv
            _, i, j = min(nonzero)
            swap_rows(t, t + i)
            swap_cols(t, t + j)
            pivot = D[t, t]
            clean = True
            for i in range(t + 1, m):
                q = D[i, t] // pivot
                if q:
                    D[i, :] = D[i, :] - q * D[t, :]
                    U[i, :] = U[i, :] - q * U[t, :]
                if D[i, t] != 0:
                    clean = False
            for j in range(t + 1, n):
                q = D[t, j] // pivot
                if q:
                    D[:, j] = D[:, j] - q * D[:, t]
                    V[:, j] = V[:, j] - q * V[:, t]
                    Vinv[t, :] = Vinv[t, :] + q * Vinv[j, :]
                if D[t, j] != 0:
                    clean = False
            if not clean:
                continue
            # divisibilidade: o pivô precisa dividir todo o bloco restante
            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i, j] % pivot != 0),
                None,
            )
            if offender is None:
                break
            D[t, :] = D[t, :] + D[offender, :]
            U[t, :] = U[t, :] + U[offender, :]
        if D[t, t] < 0:
            D[t, :] = -D[t, :]
            U[t, :] = -U[t, :]
    return U, D, V, Vinv


def smith_normal_form(A) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Forma normal de Smith de uma matriz inteira.

    Args:
        A: Matriz inteira m×n (qualquer sequência de linhas ou array).

    Returns:
        Tuple[np.ndarray, np.ndarray, np.ndarray]: (U, D, V) com U·A·V = D,
        U e V unimodulares, D diagonal com d1 | d2 | ... e entradas >= 0.
    """
    A = np.array(A, dtype=object)
    if A.ndim != 2:
        raise ValueError("Forma de Smith exige uma matriz bidimensional")
    U, D, V, _ = _smith(A)
    return U, D, V


def smith_with_inverse(A: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Como smith_normal_form, devolvendo também V^{-1}."""
    return _smith(np.array(A, dtype=object))


def diagonal(D: np.ndarray) -> Tuple[int, ...]:
    return tuple(int(D[i, i]) for i in range(min(D.shape)))


def rank_of_diagonal(D: np.ndarray) -> int:
    return sum(1 for d in diagonal(D) if d != 0)


def invariant_factors(A) -> Tuple[int, ...]:
    """Fatores invariantes não triviais (> 1) do conúcleo Z^n / linhas(A)."""
    A = np.array(A, dtype=object)
    _, D, _ = smith_normal_form(A)
    return tuple(d for d in diagonal(D) if d != 1)


def integer_kernel(B: np.ndarray) -> np.ndarray:
    """
    Base do núcleo inteiro {x em Z^n : B·x = 0}.

    Args:
        B (np.ndarray): Matriz m×n.

    Returns:
        np.ndarray: Matriz n×k cujas colunas formam uma base do núcleo.
    """
    B = np.array(B, dtype=object)
    _, D, V = smith_normal_form(B)
    r = rank_of_diagonal(D)
    return V[:, r:]


def solve_integer(B: np.ndarray, x: Sequence[int]) -> Optional[np.ndarray]:
    """
    Resolve B·y = x em inteiros.

    Args:
        B (np.ndarray): Matriz m×n.
        x (Sequence[int]): Lado direito (m entradas).

    Returns:
        Optional[np.ndarray]: Uma solução y (n entradas) ou None.
    """
    B = np.array(B, dtype=object)
    m, n = B.shape
    U, D, V = smith_normal_form(B)
    rhs = U.dot(np.array([int(v) for v in x], dtype=object).reshape(m)) if m else np.zeros(0, dtype=object)
    z = np.zeros(n, dtype=object)
    for i in range(m):
        d = D[i, i] if i < n else 0
        if d == 0:
            if rhs[i] != 0:
                return None
        else:
            if rhs[i] % d != 0:
                return None
            z[i] = rhs[i] // d
    return V.dot(z) if n else z
