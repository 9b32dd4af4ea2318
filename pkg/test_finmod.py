"""
Testes de Módulos Finitos.

Anéis Z/n e (Z/n)[G], homomorfismos, somas diretas, tensor, Tor,
dualidade de Pontryagin, indução e restrição.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from scripts import finmod
from scripts.finmod import (
    FiniteModule,
    ModuleHom,
    cyclic_module,
    direct_sum,
    group_algebra,
    parse_ring_spec,
    trivial_module,
    zmod,
)
from scripts.fingroup import parse_group_spec, subgroup

Z4 = zmod(4)
KC2 = parse_ring_spec("(Z/2)[C2]")


def _s3_subgroup(order: int):
    S3 = parse_group_spec("S3")
    g = next(x for x in range(S3.order) if S3.element_order(x) == order)
    return subgroup(S3, S3.generated_subgroup([g]))


class TestFiniteModule:
    """Testes para FiniteModule, ModuleHom e somas diretas."""

    @staticmethod
    def test_rings():
        """Testa especificações de anéis."""
        print("Teste 1: Anéis finitos...")
        assert parse_ring_spec("Z/6") == zmod(6), "Z/6 incorreto"
        assert KC2.order == 4 and KC2.kind == "GroupAlgebra", "(Z/2)[C2] tem 4 elementos"
        assert group_algebra(3, parse_group_spec("C1")).kind == "Zmod", "k[1] deveria ser Z/n"
        for bad in ("Z/1", "Q/Z", "(Z/2)[Z7]"):
            try:
                parse_ring_spec(bad)
            except ValueError:
                continue
            raise AssertionError(f"Anel {bad!r} deveria ser rejeitado")
        print("  ✓ Anéis finitos OK")

    @staticmethod
    def test_invalid_modules():
        """Testa rejeição de fatores inválidos e homomorfismos mal definidos."""
        print("Teste 2: Módulos inválidos...")
        for factors in ((3,), (4, 2)):
            try:
                FiniteModule(Z4, factors)
            except ValueError:
                continue
            raise AssertionError(f"Fatores {factors} deveriam ser rejeitados")
        try:
            ModuleHom(cyclic_module(Z4, 2), cyclic_module(Z4, 4), [[1]])
        except ValueError:
            pass
        else:
            raise AssertionError("Z/2 -> Z/4, 1 ↦ 1 não está bem definido")
        try:
            ModuleHom(cyclic_module(Z4, 2), cyclic_module(zmod(2), 2), [[1]])
        except ValueError:
            pass
        else:
            raise AssertionError("Anéis diferentes deveriam falhar")
        print("  ✓ Módulos inválidos OK")

    @staticmethod
    def test_direct_sums():
        """Testa fatores invariantes de somas diretas."""
        print("Teste 3: Somas diretas...")
        S, inj, proj = direct_sum([cyclic_module(Z4, 2), cyclic_module(Z4, 4)])
        assert S.invariant_factors == (2, 4), f"Z/2 ⊕ Z/4 deveria ter fatores (2, 4): {S.invariant_factors}"
        for i in range(2):
            composite = proj[i].compose(inj[i])
            assert composite.matrix == ModuleHom.identity(composite.domain).matrix, "π_i ∘ ι_i ≠ id"

        Z6 = zmod(6)
        S, _, _ = direct_sum([cyclic_module(Z6, 2), cyclic_module(Z6, 3)])
        assert S.invariant_factors == (6,), "Z/2 ⊕ Z/3 ≅ Z/6"
        assert finmod.find_module_isomorphism(S, cyclic_module(Z6, 6)) is not None, "Isomorfismo esperado"

        empty, _, _ = direct_sum([], Z4)
        assert empty.order == 1, "Soma vazia é o módulo zero"
        print("  ✓ Somas diretas OK")

    @staticmethod
    def test_hom_counts():
        """Testa contagens de homomorfismos de módulos."""
        print("Teste 4: Contagem de homomorfismos...")
        M = direct_sum([cyclic_module(Z4, 2), cyclic_module(Z4, 4)])[0]
        N = cyclic_module(Z4, 4)

        assert finmod.count_module_homs(M, N) == 8, "|Hom(Z/2 ⊕ Z/4, Z/4)| = 8"
        assert len(finmod.enumerate_module_homs(M, N)) == 8, "Enumeração deveria ter 8 elementos"

        free, k = finmod.free_module(KC2, 1), trivial_module(KC2)
        assert finmod.count_module_homs(free, k) == 2, "Hom(kG, k) ≅ k"
        assert finmod.count_module_homs(k, free) == 2, "Hom(k, kG) ≅ (kG)^G"
        assert finmod.count_module_homs(free, free) == 4, "End(kG) ≅ kG"
        print("  ✓ Contagem de homomorfismos OK")

    @staticmethod
    def test_kernel_and_cokernel():
        """Testa núcleo e conúcleo da multiplicação por 2 em Z/4."""
        print("Teste 5: Núcleo e conúcleo...")
        M = cyclic_module(Z4, 4)
        times_two = ModuleHom(M, M, [[2]])

        assert finmod.kernel(times_two).module.order == 2, "ker(·2) tem ordem 2"
        assert finmod.cokernel(times_two).module.order == 2, "coker(·2) tem ordem 2"
        assert not times_two.is_isomorphism(), "·2 não é isomorfismo"
        print("  ✓ Núcleo e conúcleo OK")

    @staticmethod
    def test_free_modules():
        """Testa módulos livres sobre espaços finitos."""
        print("Teste 6: Módulos livres...")
        assert finmod.free_module(zmod(3), 2).order == 9, "|(Z/3)⟦2⟧| = 9"
        assert finmod.free_module(KC2, 2).order == 16, "|(Z/2)[C2]⟦2⟧| = 16"
        assert finmod.free_module(Z4, 0).order == 1, "Livre sobre o vazio é zero"
        print("  ✓ Módulos livres OK")


class TestTensorTor:
    """Testes para produto tensorial e Tor."""

    @staticmethod
    def test_tensor_products():
        """Testa produtos tensoriais conhecidos."""
        print("Teste 7: Produto tensorial...")
        Z6 = zmod(6)
        assert finmod.tensor(cyclic_module(Z4, 2), cyclic_module(Z4, 2)).invariant_factors == (2,), "Z/2 ⊗ Z/2 = Z/2"
        assert finmod.tensor(cyclic_module(Z6, 2), cyclic_module(Z6, 3)).order == 1, "Z/2 ⊗ Z/3 = 0"
        k = trivial_module(KC2)
        assert finmod.tensor(finmod.free_module(KC2, 1), k).order == 2, "kG ⊗_{kG} k ≅ k"
        print("  ✓ Produto tensorial OK")

    @staticmethod
    def test_tor_values():
        """Testa Tor sobre Z/4, Z/6 e (Z/2)[C2]."""
        print("Teste 8: Tor...")
        two = cyclic_module(Z4, 2)
        assert finmod.tor(1, two, two).invariant_factors == (2,), "Tor_1^{Z/4}(Z/2, Z/2) = Z/2"
        assert finmod.tor(2, two, two).invariant_factors == (2,), "Tor_2^{Z/4}(Z/2, Z/2) = Z/2"
        assert finmod.tor(1, cyclic_module(Z4, 4), two).order == 1, "Tor_1 de livre é zero"
        Z6 = zmod(6)
        assert finmod.tor(1, cyclic_module(Z6, 2), cyclic_module(Z6, 3)).order == 1, "Tor_1^{Z/6}(Z/2, Z/3) = 0"
        k = trivial_module(KC2)
        for i in range(3):
            assert finmod.tor(i, k, k).order == 2, f"Tor_{i}^{{kC2}}(k, k) = k"
        print("  ✓ Tor OK")

    @staticmethod
    def test_tor_independent_of_resolution():
        """Testa que as duas estratégias de resolução dão o mesmo Tor."""
        print("Teste 9: Independência da resolução...")
        M = direct_sum([cyclic_module(Z4, 2), cyclic_module(Z4, 4)])[0]
        N = cyclic_module(Z4, 2)
        for i in range(3):
            a = finmod.tor(i, M, N, "minimal").invariant_factors
            b = finmod.tor(i, M, N, "redundant").invariant_factors
            assert a == b, f"Tor_{i} depende da resolução: {a} vs {b}"
        try:
            finmod.tor(0, M, N, "bogus")
        except ValueError:
            pass
        else:
            raise AssertionError("Estratégia desconhecida deveria falhar")
        print("  ✓ Independência da resolução OK")

    @staticmethod
    def test_tor_degree_bounds():
        """Testa rejeição de graus fora do intervalo."""
        print("Teste 10: Graus de Tor...")
        two = cyclic_module(Z4, 2)
        for i in (-1, 99):
            try:
                finmod.tor(i, two, two)
            except ValueError:
                continue
            raise AssertionError(f"Grau {i} deveria ser rejeitado")
        print("  ✓ Graus de Tor OK")


class TestDuality:
    """Testes para a dualidade de Pontryagin."""

    @staticmethod
    def test_dual_orders():
        """Testa ordens e fatores do dual."""
        print("Teste 11: Dual de Pontryagin...")
        M = direct_sum([cyclic_module(Z4, 2), cyclic_module(Z4, 4)])[0]
        D = finmod.pontryagin_dual(M)

        assert D.order == 8 and D.invariant_factors == (2, 4), "Dual de Z/2 ⊕ Z/4"
        assert finmod.pontryagin_dual(finmod.zero_module(Z4)).order == 1, "Dual do zero é zero"
        print("  ✓ Dual de Pontryagin OK")

    @staticmethod
    def test_evaluation_is_isomorphism():
        """Testa ev: M -> M^∨∨ sobre Z/n e sobre kG."""
        print("Teste 12: Avaliação no bidual...")
        modules = [
            direct_sum([cyclic_module(Z4, 2), cyclic_module(Z4, 4)])[0],
            finmod.free_module(KC2, 1),
            direct_sum([finmod.free_module(KC2, 1), trivial_module(KC2)])[0],
        ]
        for M in modules:
            assert finmod.verify_evaluation(M), f"Avaliação falhou para {M!r}"

        # 3·ev é isomorfismo sobre Z/4, mas não é a avaliação
        M = modules[0]
        ev = finmod.evaluation_map(M)
        tripled = ev.add(ev).add(ev)
        assert tripled.is_isomorphism(), "3·ev deveria ser isomorfismo"
        assert not finmod.verify_evaluation(M, tripled), "Pareamento deveria rejeitar 3·ev"
        assert not finmod.verify_evaluation(M, finmod.evaluation_map(modules[1])), "Avaliação de outro módulo"
        print("  ✓ Avaliação no bidual OK")

    @staticmethod
    def test_dual_is_contravariant():
        """Testa (g ∘ f)^∨ = f^∨ ∘ g^∨."""
        print("Teste 13: Contravariância do dual...")
        A = cyclic_module(Z4, 2)
        B = cyclic_module(Z4, 4)
        C = direct_sum([A, B])[0]
        for f in finmod.enumerate_module_homs(A, B):
            for g in finmod.enumerate_module_homs(B, C):
                left = finmod.dual_hom(g.compose(f))
                right = finmod.dual_hom(f).compose(finmod.dual_hom(g))
                assert left.matrix == right.matrix, "Dual não é contravariante"
        print("  ✓ Contravariância do dual OK")


class TestInduction:
    """Testes para indução e restrição."""

    @staticmethod
    def test_induced_orders():
        """Testa |Ind_H^G k| = |k|^[G:H]."""
        print("Teste 14: Ordens induzidas...")
        H, inc = _s3_subgroup(2)
        k = trivial_module(group_algebra(2, H))
        assert finmod.induce(2, inc, k).order == 8, "Ind_{C2}^{S3} k tem ordem 8"

        S3 = parse_group_spec("S3")
        E, inc1 = subgroup(S3, [S3.identity])
        assert finmod.induce(2, inc1, trivial_module(zmod(2))).order == 64, "Ind_1^{S3} k = kS3"
        print("  ✓ Ordens induzidas OK")

    @staticmethod
    def test_restriction_and_unit():
        """Testa restrição e a unidade M -> Res Ind M."""
        print("Teste 15: Restrição e unidade...")
        H, inc = _s3_subgroup(3)
        kG = group_algebra(2, inc.codomain)
        R = finmod.restriction(inc, finmod.free_module(kG, 1))
        assert R.order == 64 and R.ring == group_algebra(2, H), "Restrição de kS3"

        k = trivial_module(group_algebra(2, H))
        unit = finmod.induction_unit(2, inc, k)
        assert unit.is_injective(), "Unidade da indução deveria ser injetora"
        try:
            finmod.restriction(inc, trivial_module(zmod(2)))
        except ValueError:
            pass
        else:
            raise AssertionError("Módulo sobre o anel errado deveria falhar")
        print("  ✓ Restrição e unidade OK")

    @staticmethod
    def test_frobenius_reciprocity_count():
        """Testa |Hom_kG(Ind M, N)| = |Hom_kH(M, Res N)|."""
        print("Teste 16: Reciprocidade de Frobenius...")
        H, inc = _s3_subgroup(2)
        kG = group_algebra(2, inc.codomain)
        M = trivial_module(group_algebra(2, H))
        for N in (trivial_module(kG), finmod.free_module(kG, 1)):
            left = finmod.count_module_homs(finmod.induce(2, inc, M), N)
            right = finmod.count_module_homs(M, finmod.restriction(inc, N))
            assert left == right, f"Contagens diferem: {left} vs {right}"
        print("  ✓ Reciprocidade de Frobenius OK")
