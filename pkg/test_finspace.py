"""
Testes de Espaços Finitos.

Aplicações, fibras, uniões disjuntas e produtos fibrados (com a lei de
cardinalidade verificada pelo hypothesis).
"""

import os
import sys

from hypothesis import given, settings, strategies as st

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from scripts.finspace import (
    FiniteSpace,
    SpaceMap,
    constant_map,
    disjoint_union,
    fibre,
    fibres,
    inclusion_of_fibre,
    projection_from_fibre_sizes,
    pullback,
)


class TestFiniteSpace:
    """Testes para FiniteSpace e SpaceMap."""

    @staticmethod
    def test_invalid_space():
        """Testa rejeição de tamanhos negativos."""
        print("Teste 1: Espaço inválido...")
        try:
            FiniteSpace(-1)
        except ValueError:
            pass
        else:
            raise AssertionError("Tamanho negativo deveria falhar")
        print("  ✓ Espaço inválido OK")

    @staticmethod
    def test_map_validation_and_composition():
        """Testa validação de valores e composição."""
        print("Teste 2: Composição de aplicações...")
        X, Y, Z = FiniteSpace(3), FiniteSpace(2), FiniteSpace(2)
        f = SpaceMap(X, Y, (0, 1, 1))
        g = SpaceMap(Y, Z, (1, 0))

        assert g.compose(f).values == (1, 0, 0), "Composição incorreta"
        assert SpaceMap.identity(Y).compose(f) == f, "Identidade deveria ser neutra"
        assert f.is_surjective() and not f.is_injective(), "Propriedades de f incorretas"
        try:
            SpaceMap(X, Y, (0, 2, 1))
        except ValueError:
            pass
        else:
            raise AssertionError("Valor fora do contradomínio deveria falhar")
        try:
            f.compose(g)
        except ValueError:
            pass
        else:
            raise AssertionError("Composição incompatível deveria falhar")
        print("  ✓ Composição de aplicações OK")

    @staticmethod
    def test_fibres():
        """Testa fibras, inclusive vazias."""
        print("Teste 3: Fibras...")
        p = projection_from_fibre_sizes([2, 0, 1])

        assert p.domain.size == 3 and p.codomain.size == 3, "Tamanhos da projeção incorretos"
        assert fibres(p) == [[0, 1], [], [2]], "Fibras incorretas"
        assert fibre(p, 1) == [], "Fibra vazia esperada"
        assert inclusion_of_fibre(p, 0).values == (0, 1), "Inclusão da fibra incorreta"
        try:
            fibre(p, 3)
        except ValueError:
            pass
        else:
            raise AssertionError("Ponto fora da base deveria falhar")
        print("  ✓ Fibras OK")

    @staticmethod
    def test_disjoint_union():
        """Testa blocos consecutivos da união disjunta."""
        print("Teste 4: União disjunta...")
        total, incs = disjoint_union([FiniteSpace(2), FiniteSpace(0), FiniteSpace(3)])

        assert total.size == 5, "Tamanho da união incorreto"
        assert incs[0].values == (0, 1) and incs[1].values == () and incs[2].values == (2, 3, 4)
        print("  ✓ União disjunta OK")


class TestPullback:
    """Testes para produtos fibrados."""

    @staticmethod
    def test_pullback_sizes():
        """Testa |A ×_X B| = Σ |f⁻¹(x)|·|g⁻¹(x)|."""
        print("Teste 5: Tamanho do produto fibrado...")
        f = projection_from_fibre_sizes([2, 1])
        g = projection_from_fibre_sizes([3, 2])
        P, pr1, pr2 = pullback(f, g)

        assert P.size == 2 * 3 + 1 * 2, "Tamanho do produto fibrado incorreto"
        for t in P.points():
            assert f(pr1(t)) == g(pr2(t)), "Quadrado não comuta"
        pairs = list(zip(pr1.values, pr2.values))
        assert pairs == sorted(pairs), "Pares deveriam estar em ordem lexicográfica"
        print("  ✓ Tamanho do produto fibrado OK")

    @staticmethod
    def test_pullback_with_constant_map():
        """Testa produto fibrado com aplicação constante (produto cartesiano)."""
        print("Teste 6: Produto fibrado constante...")
        one = FiniteSpace(1)
        P, _, _ = pullback(constant_map(FiniteSpace(2), one), constant_map(FiniteSpace(3), one))

        assert P.size == 6, "Produto cartesiano 2×3 esperado"
        try:
            pullback(constant_map(FiniteSpace(2), one), SpaceMap.identity(FiniteSpace(2)))
        except ValueError:
            pass
        else:
            raise AssertionError("Cospan incompatível deveria falhar")
        print("  ✓ Produto fibrado constante OK")

    @settings(max_examples=50, deadline=None)
    @given(
        f_values=st.lists(st.integers(min_value=0, max_value=3), max_size=6),
        g_values=st.lists(st.integers(min_value=0, max_value=3), max_size=6),
    )
    def test_pullback_cardinality_law(self, f_values, g_values):
        """Testa |A ×_X B| = Σ_x |f⁻¹(x)|·|g⁻¹(x)| e a partição em fibras."""
        X = FiniteSpace(4)
        f = SpaceMap(FiniteSpace(len(f_values)), X, tuple(f_values))
        g = SpaceMap(FiniteSpace(len(g_values)), X, tuple(g_values))
        P, pr1, pr2 = pullback(f, g)

        over_f, over_g = fibres(f), fibres(g)
        assert P.size == sum(len(a) * len(b) for a, b in zip(over_f, over_g)), "Cardinalidade do pullback"
        assert sorted(a for block in over_f for a in block) == list(f.domain.points()), "Fibras particionam A"
        assert all(f(pr1(t)) == g(pr2(t)) for t in P.points()), "Quadrado não comuta"
