"""
Testes do Verificador de Teoremas.

Sementes derivadas, geração determinística de instâncias, veredictos com
testemunhas reverificáveis, invariância por permutação da base e a suíte.
"""

import os
import sys

from hypothesis import given, settings, strategies as st

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from scripts.bundle import GroupBundle
from scripts.config import EXIT_PASS, HOM_TUPLE_ENUMERATION_CAP, MASK_64
from scripts.fingroup import parse_group_spec
from scripts.finspace import FiniteSpace
from scripts.harness import (
    ALL_THEOREMS,
    Bounds,
    CheckInstance,
    TheoremId,
    Verdict,
    _check_abelianisation_fibrewise,
    abelian_probes,
    check,
    gen_instance,
    group_probes,
    mix,
    permute_instance,
    run_suite,
    verify_witness,
)

SMALL = Bounds(max_base=2, max_fibre_order=6, max_test_order=6, max_ring_n=4)


class TestSeeds:
    """Testes para a derivação de sementes."""

    @staticmethod
    def test_mix_is_deterministic():
        """Testa que mix é determinística, de 64 bits e separa tentativas."""
        print("Teste 1: Sementes derivadas...")
        seeds = [mix(7, i) for i in range(8)]

        assert seeds == [mix(7, i) for i in range(8)], "mix deveria ser determinística"
        assert all(0 <= s <= MASK_64 for s in seeds), "Sementes deveriam caber em 64 bits"
        assert len(set(seeds)) == len(seeds), "Tentativas deveriam ter sementes distintas"
        assert mix(7, 0) != mix(8, 0), "Sementes base diferentes deveriam divergir"
        print("  ✓ Sementes derivadas OK")

    @settings(max_examples=100, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2 ** 64 - 1), i=st.integers(min_value=0, max_value=1000))
    def test_mix_properties(self, seed, i):
        """Testa que mix fica em 64 bits e não colide entre tentativas vizinhas."""
        a, b = mix(seed, i), mix(seed, i + 1)
        assert 0 <= a <= MASK_64 and 0 <= b <= MASK_64, "Semente fora de 64 bits"
        assert a != b, "Tentativas vizinhas colidiram"

    @staticmethod
    def test_probe_lists():
        """Testa as listas de sondas."""
        print("Teste 2: Sondas...")
        assert len(abelian_probes(12)) == 17, "17 grupos abelianos de ordem <= 12"
        probes = group_probes(8)
        assert {"S3", "D4", "Q8"} <= set(probes), "Sondas não abelianas de ordem <= 8"
        assert "S3" not in group_probes(4), "S3 não cabe em ordem 4"
        print("  ✓ Sondas OK")


class TestInstances:
    """Testes para Bounds e gen_instance."""

    @staticmethod
    def test_bounds_caps():
        """Testa rejeição de limites acima dos tetos."""
        print("Teste 3: Tetos dos limites...")
        for kwargs in ({"max_base": 7}, {"max_fibre_order": 65}, {"max_test_order": 25}, {"max_ring_n": 1}):
            try:
                Bounds(**kwargs)
            except ValueError:
                continue
            raise AssertionError(f"Limites {kwargs} deveriam ser rejeitados")
        assert Bounds.from_json(SMALL.to_json()) == SMALL, "JSON dos limites"
        print("  ✓ Tetos dos limites OK")

    @staticmethod
    def test_generation_is_deterministic():
        """Testa que (teorema, semente, limites) fixa a instância."""
        print("Teste 4: Geração determinística...")
        for theorem in ALL_THEOREMS:
            a = gen_instance(theorem, 42, SMALL)
            b = gen_instance(theorem.value, 42, SMALL)
            assert a.to_json() == b.to_json(), f"Instâncias de {theorem.value} divergem"
            assert a.digest == b.digest and len(a.digest) == 64, "Resumo instável"
            assert CheckInstance.from_json(a.to_json()).to_json() == a.to_json(), "JSON da instância"
        assert gen_instance("four-square", -1, SMALL).seed == MASK_64, "Semente mascarada em 64 bits"
        try:
            gen_instance("no-such-theorem", 1)
        except ValueError:
            pass
        else:
            raise AssertionError("Teorema desconhecido deveria falhar")
        print("  ✓ Geração determinística OK")


class TestChecks:
    """Testes para check, permute_instance e verify_witness."""

    @staticmethod
    def test_every_theorem_holds():
        """Testa que nenhum teorema falha e que testemunhas pass reverificam."""
        print("Teste 5: Veredictos...")
        for theorem in ALL_THEOREMS:
            for seed in (1, 2):
                report = check(theorem, gen_instance(theorem, seed, SMALL))
                assert report.verdict is not Verdict.FAIL, f"{theorem.value} seed={seed}: {report.witness}"
                if report.verdict is Verdict.PASS:
                    assert verify_witness(report), f"Testemunha de {theorem.value} não reverifica"
                assert report.digest == report.instance.digest, "Resumo do relatório"
        print("  ✓ Veredictos OK")

    @staticmethod
    def test_permutation_invariance():
        """Testa que reordenar a base não altera o veredicto."""
        print("Teste 6: Invariância por permutação...")
        for theorem in ALL_THEOREMS:
            instance = gen_instance(theorem, 5, SMALL)
            fibres = instance.payload.get("fibres")
            if not fibres or len(fibres) < 2:
                continue
            perm = list(reversed(range(len(fibres))))
            permuted = permute_instance(instance, perm)
            assert check(theorem, permuted).verdict == check(theorem, instance).verdict, f"{theorem.value} mudou"
        instance = gen_instance(TheoremId.ABELIANISATION_COPRODUCT, 5, SMALL)
        try:
            permute_instance(instance, [0] * (len(instance.payload["fibres"]) + 1))
        except ValueError:
            pass
        else:
            raise AssertionError("Permutação inválida deveria falhar")
        print("  ✓ Invariância por permutação OK")

    @staticmethod
    def test_mismatched_instance():
        """Testa rejeição de instância de outro teorema."""
        print("Teste 7: Instância incompatível...")
        instance = gen_instance(TheoremId.TENSOR_COPRODUCT, 3, SMALL)
        try:
            check(TheoremId.TOR_COPRODUCT, instance)
        except ValueError:
            pass
        else:
            raise AssertionError("Instância de outro teorema deveria falhar")
        print("  ✓ Instância incompatível OK")

    @staticmethod
    def test_abelianisation_above_enumeration_cap():
        """Testa a bijeção fibra a fibra quando |Hom| passa do teto de enumeração."""
        print("Teste 8: Abelianização acima do teto...")
        payload = {"fibres": ["C12"] * 4, "probes": ["C12"]}
        instance = CheckInstance(TheoremId.ABELIANISATION_COPRODUCT, 0, Bounds(), payload)
        report = check(TheoremId.ABELIANISATION_COPRODUCT, instance)
        entry = report.witness["counts"]["C12"]

        assert entry["left"] == 12 ** 4 > HOM_TUPLE_ENUMERATION_CAP, "Caso deveria passar do teto"
        assert report.verdict is Verdict.PASS and entry["mode"] == "fibrewise", f"Veredicto: {report.witness}"
        assert verify_witness(report), "Testemunha fibra a fibra não reverifica"

        B = GroupBundle(FiniteSpace(2), (parse_group_spec("C12"), parse_group_spec("S3")))
        T = parse_group_spec("C12")
        assert _check_abelianisation_fibrewise(B, T, 12 * 2) is None, "Hom(C12 ⊕ C2, C12) = 12·2"
        failure = _check_abelianisation_fibrewise(B, T, 12 * 3)
        assert failure is not None and failure["product"] == 24, "Contagem errada deveria ser apontada"
        print("  ✓ Abelianização acima do teto OK")

    @staticmethod
    def test_colimit_over_monoid_shape():
        """Testa o colimite sobre um monoide de endomorfismos (composição não livre)."""
        print("Teste 9: Colimite sobre monoide...")
        payload = {"shape": "monoid", "G": "C4", "generators": [[0, 3, 2, 1]], "probes": ["C2", "C4", "S3"]}
        instance = CheckInstance(TheoremId.COLIMIT_COEQUALISER, 0, SMALL, payload)
        report = check(TheoremId.COLIMIT_COEQUALISER, instance)

        assert report.verdict is Verdict.PASS, f"Veredicto: {report.witness}"
        assert report.witness["counts"] == {"C2": 2, "C4": 2, "S3": 4}, "Hom(C4 coinvariantes = C2, T)"
        assert verify_witness(report), "Testemunha do colimite não reverifica"
        shapes = {gen_instance(TheoremId.COLIMIT_COEQUALISER, seed, SMALL).payload["shape"] for seed in range(40)}
        assert "monoid" in shapes, "Gerador deveria produzir a forma monoid"
        print("  ✓ Colimite sobre monoide OK")


class TestSuite:
    """Testes para run_suite e SuiteReport."""

    @staticmethod
    def test_suite_matches_single_checks():
        """Testa que a tentativa i usa a semente mix(seed, i)."""
        print("Teste 10: Suíte contra verificações isoladas...")
        theorems = [TheoremId.FREE_MODULE_COPRODUCT, TheoremId.DISCRETE_COLIMIT_AGREEMENT]
        suite = run_suite(theorems, 2, 9, SMALL, workers=1)

        for theorem in theorems:
            reports = suite.reports[theorem.value]
            assert len(reports) == 2, "Duas tentativas por teorema"
            for i, report in enumerate(reports):
                single = check(theorem, gen_instance(theorem, mix(9, i), SMALL))
                assert report.digest == single.digest and report.verdict == single.verdict, "Tentativa diverge"
        if suite.verdict is Verdict.PASS:
            assert suite.exit_code() == EXIT_PASS, "Código de saída de pass"
        assert suite.to_json()["trials"] == 2 and set(suite.to_json()["theorems"]) == {t.value for t in theorems}
        print("  ✓ Suíte contra verificações isoladas OK")

    @staticmethod
    def test_summary_and_invalid_trials():
        """Testa a tabela de resumo e trials < 1."""
        print("Teste 11: Resumo da suíte...")
        suite = run_suite(["four-square"], 1, 3, SMALL)
        table = suite.summary()

        assert list(table.columns) == ["theorem", "trials", "pass", "fail", "inconclusive", "verdict"], "Colunas"
        assert table.iloc[0]["theorem"] == "four-square" and int(table.iloc[0]["trials"]) == 1, "Linha do resumo"
        try:
            run_suite(["four-square"], 0, 3)
        except ValueError:
            pass
        else:
            raise AssertionError("trials = 0 deveria falhar")
        print("  ✓ Resumo da suíte OK")
