"""
Testes da Forma Normal de Smith.

Propriedades verificadas contra determinantes exatos do sympy e matrizes
aleatórias geradas pelo hypothesis.
"""

import os
import sys
from functools import reduce
from math import gcd

import numpy as np
from hypothesis import given, settings, strategies as st
from sympy import Matrix

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from scripts.smith import (
    diagonal,
    int_matrix,
    integer_kernel,
    invariant_factors,
    smith_normal_form,
    smith_with_inverse,
    solve_integer,
)

square_matrices = st.lists(
    st.lists(st.integers(min_value=-9, max_value=9), min_size=3, max_size=3), min_size=3, max_size=3
)
wide_matrices = st.lists(
    st.lists(st.integers(min_value=-6, max_value=6), min_size=4, max_size=4), min_size=2, max_size=2
)


def _det(M) -> int:
    return int(Matrix([[int(v) for v in row] for row in np.array(M, dtype=object).tolist()]).det())


def _is_diagonal_chain(D: np.ndarray) -> bool:
    m, n = D.shape
    for i in range(m):
        for j in range(n):
            if i != j and D[i, j] != 0:
                return False
    d = diagonal(D)
    if any(x < 0 for x in d):
        return False
    return all(b % a == 0 if a else b == 0 for a, b in zip(d, d[1:]))


class TestSmithNormalForm:
    """Testes para smith_normal_form."""

    @staticmethod
    def test_known_forms():
        """Testa formas conhecidas."""
        print("Teste 1: Formas de Smith conhecidas...")
        _, D, _ = smith_normal_form([[2, 0], [0, 3]])
        assert diagonal(D) == (1, 6), f"diag(2, 3) deveria virar diag(1, 6), obtido {diagonal(D)}"
        _, D, _ = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        assert diagonal(D) == (2, 6, 12), f"Forma incorreta: {diagonal(D)}"
        _, D, _ = smith_normal_form([[0, 0], [0, 0]])
        assert diagonal(D) == (0, 0), "Matriz nula deveria ficar nula"
        assert invariant_factors([[2, 0], [0, 3]]) == (6,), "Z/2 ⊕ Z/3 ≅ Z/6"
        assert invariant_factors([[4, 0], [0, 2]]) == (2, 4), "Fatores de Z/4 ⊕ Z/2"
        print("  ✓ Formas de Smith conhecidas OK")

    @staticmethod
    def test_rejects_non_matrix():
        """Testa rejeição de entradas unidimensionais."""
        print("Teste 2: Entrada inválida...")
        try:
            smith_normal_form([1, 2, 3])
        except ValueError:
            pass
        else:
            raise AssertionError("Vetor deveria ser rejeitado")
        print("  ✓ Entrada inválida OK")

    @settings(max_examples=60, deadline=None)
    @given(rows=square_matrices)
    def test_square_properties(self, rows):
        """Testa U·A·V = D, unimodularidade e |det A| = Π d_i."""
        A = int_matrix(rows)
        U, D, V = smith_normal_form(A)

        assert np.array_equal(U.dot(A).dot(V), D), "U·A·V deveria ser D"
        assert _is_diagonal_chain(D), "D deveria ser diagonal com divisibilidade"
        assert abs(_det(U)) == 1 and abs(_det(V)) == 1, "U e V deveriam ser unimodulares"
        assert int(np.prod(diagonal(D))) == abs(_det(A)), "Produto da diagonal deveria ser |det A|"
        g = reduce(gcd, (abs(v) for row in rows for v in row), 0)
        assert diagonal(D)[0] == g, "Primeiro fator deveria ser o mdc das entradas"

    @settings(max_examples=40, deadline=None)
    @given(rows=wide_matrices)
    def test_rectangular_inverse(self, rows):
        """Testa V·V⁻¹ = I em matrizes retangulares."""
        A = int_matrix(rows)
        U, D, V, Vinv = smith_with_inverse(A)

        assert np.array_equal(U.dot(A).dot(V), D), "U·A·V deveria ser D"
        assert _is_diagonal_chain(D), "D deveria ser diagonal com divisibilidade"
        assert np.array_equal(V.dot(Vinv), int_matrix([[int(i == j) for j in range(4)] for i in range(4)]))


class TestIntegerLinearAlgebra:
    """Testes para núcleo e sistemas inteiros."""

    @staticmethod
    def test_integer_kernel():
        """Testa base do núcleo inteiro."""
        print("Teste 3: Núcleo inteiro...")
        B = int_matrix([[1, 2, 3]])
        K = integer_kernel(B)

        assert K.shape == (3, 2), f"Núcleo de posto 2 esperado, obtido {K.shape}"
        assert not B.dot(K).any(), "Colunas deveriam estar no núcleo"
        print("  ✓ Núcleo inteiro OK")

    @staticmethod
    def test_solve_integer():
        """Testa solubilidade em inteiros."""
        print("Teste 4: Sistemas inteiros...")
        B = int_matrix([[2, 0], [0, 3]])
        y = solve_integer(B, [4, 9])

        assert y is not None and list(B.dot(y)) == [4, 9], "Solução incorreta"
        assert solve_integer(B, [1, 0]) is None, "2y = 1 não tem solução inteira"
        y = solve_integer(int_matrix([[2, 3]]), [1])
        assert y is not None and int(2 * y[0] + 3 * y[1]) == 1, "Bézout deveria resolver 2a + 3b = 1"
        print("  ✓ Sistemas inteiros OK")
