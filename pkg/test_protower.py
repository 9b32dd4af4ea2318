"""
Testes de Torres e Adjunções Relativas.

Famílias de torres, extensão nível a nível de funtores, impressões digitais
por contagens de Hom, adjunções relativas e o quadrado de quatro funtores.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from scripts import finmod
from scripts.bundle import ModuleBundle, constant_bundle, functor
from scripts.fingroup import parse_group_spec, subgroup
from scripts.finmod import cyclic_module, group_algebra, trivial_module, zmod
from scripts.finspace import FiniteSpace, projection_from_fibre_sizes
from scripts.protower import (
    RelativeAdjunctionSpec,
    UnsupportedSample,
    check_four_square,
    check_relative_adjunction,
    constant_of_underlying,
    constant_tower,
    extend_functor_levelwise,
    forget_module_bundle,
    labelled_bijection,
    tower_from_descriptor,
    tower_limit_fingerprint,
)


class TestTower:
    """Testes para Tower e as famílias registradas."""

    @staticmethod
    def test_zmod_chain_levels():
        """Testa níveis C_{b^(d+1)} e transições de redução."""
        print("Teste 1: Cadeia Zmod...")
        t = tower_from_descriptor({"family": "Zmod-chain", "base": 3}, max_depth=2)

        assert [G.order for G in t.levels()] == [3, 9, 27], "Ordens dos níveis incorretas"
        reduction = t.transition(0)
        assert reduction.domain.order == 9 and reduction.codomain.order == 3, "Extremos da transição"
        assert reduction.is_surjective(), "Redução deveria ser sobrejetora"
        assert t.to_json()["kind"] == "group" and t.to_json()["max_depth"] == 2, "JSON da torre"
        print("  ✓ Cadeia Zmod OK")

    @staticmethod
    def test_depth_bound():
        """Testa rejeição de profundidade acima do limite."""
        print("Teste 2: Limite de profundidade...")
        t = tower_from_descriptor({"family": "space-chain"}, max_depth=3)
        for bad in (lambda: t.level(4), lambda: t.transition(3), lambda: t.truncate(5)):
            try:
                bad()
            except ValueError:
                continue
            raise AssertionError("Profundidade excedida deveria falhar")
        assert t.truncate(1).max_depth == 1, "Truncamento incorreto"
        print("  ✓ Limite de profundidade OK")

    @staticmethod
    def test_other_families():
        """Testa as famílias constante, elementar abeliana e de fibrados."""
        print("Teste 3: Outras famílias...")
        c = tower_from_descriptor({"family": "constant", "kind": "group", "object": "S3"}, max_depth=2)
        assert all(G.order == 6 for G in c.levels()), "Torre constante deveria repetir S3"
        assert c.transition(1).is_injective(), "Transições constantes são identidades"

        e = tower_from_descriptor({"family": "elementary-abelian-chain", "p": 2}, max_depth=2)
        assert [G.order for G in e.levels()] == [2, 4, 8], "Ordens de (C2)^(d+1)"
        assert e.transition(1).is_surjective(), "Projeção deveria ser sobrejetora"
        m = tower_from_descriptor({"family": "elementary-abelian-chain", "p": 3, "kind": "module"}, max_depth=2)
        assert m.kind == "module" and [M.order for M in m.levels()] == [3, 9, 27], "Módulos (Z/3)^(d+1)"

        b = tower_from_descriptor({"family": "converging-bundle", "groups": ["C2", "C3"]}, max_depth=3)
        level = b.level(3)
        assert level.base.size == 4, "Nível d tem d + 1 pontos"
        assert [G.order for G in level.fibres] == [2, 3, 2, 1], "Última fibra deveria ser trivial"
        assert b.transition(2).base_map.values == (0, 1, 2, 2), "Cauda colapsa no último ponto"
        try:
            tower_from_descriptor({"family": "no-such-family"})
        except ValueError:
            pass
        else:
            raise AssertionError("Família desconhecida deveria falhar")
        print("  ✓ Outras famílias OK")

    @staticmethod
    def test_extend_functor_levelwise():
        """Testa F aplicado nível a nível."""
        print("Teste 4: Extensão nível a nível...")
        spaces = tower_from_descriptor({"family": "space-chain"}, max_depth=2)
        free = extend_functor_levelwise(functor("free_module", ring=zmod(2)), spaces)

        assert free.kind == "module", "Módulo livre de espaços dá torre de módulos"
        assert [M.order for M in free.levels()] == [2, 4, 8], "Ordens de (Z/2)^(d+1)"
        assert free.transition(1).domain.order == 8, "Transição levantada com extremos corretos"

        bundles = tower_from_descriptor({"family": "converging-bundle", "groups": ["S3"]}, max_depth=2)
        ab = extend_functor_levelwise(functor("abelianisation"), bundles)
        assert [G.order for G in ab.level(2).fibres] == [2, 2, 1], "Abelianização fibra a fibra"
        try:
            extend_functor_levelwise(functor("pontryagin_dual"), constant_tower("module", cyclic_module(zmod(4), 2)))
        except ValueError:
            pass
        else:
            raise AssertionError("Funtor contravariante deveria falhar")
        try:
            extend_functor_levelwise(functor("abelianisation"), spaces)
        except ValueError:
            pass
        else:
            raise AssertionError("Tipo incompatível deveria falhar")
        print("  ✓ Extensão nível a nível OK")


class TestFingerprint:
    """Testes para tower_limit_fingerprint."""

    @staticmethod
    def test_zmod_chain_fingerprint():
        """Testa |Hom(C_{2^(d+1)}, T)| e a profundidade de estabilização."""
        print("Teste 5: Impressão digital da cadeia Zmod...")
        t = tower_from_descriptor({"family": "Zmod-chain", "base": 2}, max_depth=3)
        C2, C4 = parse_group_spec("C2"), parse_group_spec("C4")
        fp = tower_limit_fingerprint(t, [C2, C4], 3)

        assert fp.history["C2"] == [2, 2, 2, 2], "Hom em C2 é constante"
        assert fp.history["C4"] == [2, 4, 4, 4], "Hom em C4 estabiliza em 4"
        assert fp.stabilised_at == {"C2": 0, "C4": 1}, f"Estabilização incorreta: {fp.stabilised_at}"
        assert all(fp.monotone.values()), "Contagens deveriam ser não decrescentes"
        assert fp.to_json()["counts"] == {"C2": 2, "C4": 4}, "JSON da impressão digital"
        print("  ✓ Impressão digital da cadeia Zmod OK")

    @staticmethod
    def test_space_and_module_fingerprints():
        """Testa contagens em torres de espaços, módulos e fibrados."""
        print("Teste 6: Impressões digitais de outros tipos...")
        spaces = tower_from_descriptor({"family": "space-chain"}, max_depth=2)
        fp = tower_limit_fingerprint(spaces, [FiniteSpace(2)], 2)
        assert fp.history["space2"] == [2, 4, 8], "|2|^(d+1) funções"

        free = extend_functor_levelwise(functor("free_module", ring=zmod(2)), spaces)
        probe = cyclic_module(zmod(2), 2)
        fp = tower_limit_fingerprint(free, [probe], 2)
        assert list(fp.history.values()) == [[2, 4, 8]], "Hom((Z/2)^(d+1), Z/2)"

        bundles = tower_from_descriptor({"family": "converging-bundle", "groups": ["C2"]}, max_depth=2)
        fp = tower_limit_fingerprint(bundles, [parse_group_spec("C2")], 2)
        assert fp.history["C2"] == [1, 2, 4], "Coproduto de d cópias de C2 e do trivial"
        try:
            tower_limit_fingerprint(spaces, [FiniteSpace(2)], 3)
        except ValueError:
            pass
        else:
            raise AssertionError("Profundidade acima do limite deveria falhar")
        print("  ✓ Impressões digitais de outros tipos OK")


class TestAdjunction:
    """Testes para adjunções relativas e o quadrado de quatro funtores."""

    @staticmethod
    def test_registered_pairs():
        """Testa o registro de pares (L, R)."""
        print("Teste 7: Pares registrados...")
        assert RelativeAdjunctionSpec("free_module", "forget").name == "free_module-forget"
        try:
            RelativeAdjunctionSpec("tensor", "forget")
        except ValueError:
            pass
        else:
            raise AssertionError("Par não registrado deveria falhar")
        print("  ✓ Pares registrados OK")

    @staticmethod
    def test_free_module_forget():
        """Testa Hom(R⟦X⟧, M) ≅ M^X."""
        print("Teste 8: Módulo livre e esquecimento...")
        Z4 = zmod(4)
        spec = RelativeAdjunctionSpec("free_module", "forget", {"ring": Z4})
        samples = [(FiniteSpace(2), cyclic_module(Z4, 2)), (FiniteSpace(0), cyclic_module(Z4, 4))]
        report = check_relative_adjunction(spec, samples)

        assert report.passed and report.first_failure() is None, "Adjunção deveria valer"
        assert [(s.left_count, s.right_count) for s in report.samples] == [(4, 4), (1, 1)], "Contagens incorretas"
        print("  ✓ Módulo livre e esquecimento OK")

    @staticmethod
    def test_abelianisation_with_towers():
        """Testa Hom(G^ab, A) ≅ Hom(G, A), inclusive com G uma torre."""
        print("Teste 9: Abelianização e inclusão...")
        spec = RelativeAdjunctionSpec("abelianisation", "inclusion")
        S3, C2, C4 = parse_group_spec("S3"), parse_group_spec("C2"), parse_group_spec("C4")
        chain = tower_from_descriptor({"family": "Zmod-chain", "base": 2}, max_depth=3)
        report = check_relative_adjunction(spec, [(S3, C2), (chain, C4)])

        assert report.passed, "Adjunção deveria valer"
        assert report.samples[0].left_count == 2, "|Hom(S3^ab, C2)| = 2"
        assert (report.samples[1].depth, report.samples[1].left_count) == (1, 4), "Torre estabiliza em C4"
        try:
            check_relative_adjunction(spec, [(S3, S3)])
        except ValueError:
            pass
        else:
            raise AssertionError("Alvo não abeliano deveria falhar")
        growing = tower_from_descriptor({"family": "elementary-abelian-chain", "p": 2}, max_depth=2)
        try:
            check_relative_adjunction(spec, [(growing, C2)])
        except UnsupportedSample:
            pass
        else:
            raise AssertionError("Torre sem estabilização deveria ser inconclusiva")
        print("  ✓ Abelianização e inclusão OK")

    @staticmethod
    def test_induction_and_free_group():
        """Testa indução contra restrição e o pró-grupo livre."""
        print("Teste 10: Indução e grupo livre...")
        S3 = parse_group_spec("S3")
        g = next(x for x in range(S3.order) if S3.element_order(x) == 2)
        H, inc = subgroup(S3, S3.generated_subgroup([g]))
        kH, kG = group_algebra(2, H), group_algebra(2, S3)
        spec = RelativeAdjunctionSpec("induce", "restriction", {"k": 2, "inclusion": inc})
        report = check_relative_adjunction(spec, [(trivial_module(kH), trivial_module(kG))])
        assert report.passed and report.samples[0].left_count == 2, "Reciprocidade de Frobenius"

        free = RelativeAdjunctionSpec("free_group", "forget")
        report = check_relative_adjunction(free, [(FiniteSpace(2), S3), (FiniteSpace(1), parse_group_spec("C3"))])
        assert report.passed, "Adjunção do grupo livre deveria valer"
        assert [s.left_count for s in report.samples] == [36, 3], "|T|^|X| homomorfismos"
        print("  ✓ Indução e grupo livre OK")

    @staticmethod
    def test_four_square():
        """Testa o quadrado de espaços, fibrados, módulos e fibrados de módulos."""
        print("Teste 11: Quadrado de quatro funtores...")
        Z4 = zmod(4)
        p = projection_from_fibre_sizes([2, 1])
        B = ModuleBundle(p.codomain, Z4, (cyclic_module(Z4, 2), cyclic_module(Z4, 4)))
        report = check_four_square(Z4, p, cyclic_module(Z4, 2), B)

        assert report.passed, f"Quadrado deveria comutar: {report.to_json()}"
        assert report.details["lifted_left_count"] == 2 ** 2 * 4, "Π |B(x)|^|Y_x|"
        assert report.details["right_total"] == 2 * 2, "X × |M| com |X| = |M| = 2"
        assert report.details["left_order"] == finmod.free_module(Z4, 3).order, "⊕ R⟦Y_x⟧ ≅ R⟦Y⟧"
        other = ModuleBundle(FiniteSpace(1), Z4, (cyclic_module(Z4, 2),))
        try:
            check_four_square(Z4, p, cyclic_module(Z4, 2), other)
        except ValueError:
            pass
        else:
            raise AssertionError("Base diferente deveria falhar")
        print("  ✓ Quadrado de quatro funtores OK")

    @staticmethod
    def test_right_adjoints_match_elements():
        """Testa a bijeção rotulada entre esquecer ∘ Δ e Δ ∘ esquecer."""
        print("Teste 12: Adjuntos direitos por elementos...")
        Z4 = zmod(4)
        X = FiniteSpace(2)
        C4 = cyclic_module(Z4, 4)
        V4 = finmod.direct_sum([cyclic_module(Z4, 2), cyclic_module(Z4, 2)], Z4)[0]

        bijection = labelled_bijection(forget_module_bundle(constant_bundle(C4, X)), constant_of_underlying(C4, X))
        assert bijection is not None and sorted(bijection) == list(range(8)), "Bijeção esperada em 8 pontos"

        # Mesma ordem, elementos diferentes: Z/4 contra Z/2 ⊕ Z/2
        assert labelled_bijection(forget_module_bundle(constant_bundle(C4, X)), constant_of_underlying(V4, X)) is None
        # Uma fibra diferente da constante
        mixed = ModuleBundle(X, Z4, (C4, V4))
        assert labelled_bijection(forget_module_bundle(mixed), constant_of_underlying(C4, X)) is None
        # Bases diferentes
        assert labelled_bijection(forget_module_bundle(constant_bundle(C4, X)), constant_of_underlying(C4, FiniteSpace(1))) is None
        print("  ✓ Adjuntos direitos por elementos OK")
