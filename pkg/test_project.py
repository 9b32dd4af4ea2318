"""
Testes e Validação do Projeto.

Este módulo contém testes da configuração, dos utilitários e da interface
de linha de comando, além do executor que roda todas as classes de teste
do projeto sem depender do pytest.
"""

import os
import sys
import tempfile

# Adicionar raiz ao path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from scripts.config import EXIT_PASS, EXIT_USAGE, get_config
from utils import canonical_json, digest, load_json, save_json
import main as cli


class TestConfig:
    """Testes para o módulo de configuração."""

    @staticmethod
    def test_config_loading():
        """Testa carregamento de configuração."""
        print("Teste 1: Carregamento de configuração...")
        config = get_config()

        for section in ("seeds", "caps", "defaults", "search", "generators", "output", "directories"):
            assert section in config, f"Config deveria conter '{section}'"

        assert config["caps"]["max_base"] >= config["defaults"]["max_base"], "Padrão acima do teto"
        assert config["caps"]["max_test_order"] >= config["defaults"]["max_test_order"], "Padrão acima do teto"
        assert config["search"]["naturality_samples"] >= 1, "Amostras de naturalidade devem ser positivas"

        print("  ✓ Carregamento de configuração OK")

    @staticmethod
    def test_exit_codes():
        """Testa os códigos de saída declarados."""
        print("Teste 2: Códigos de saída...")
        codes = get_config()["output"]["exit_codes"]

        assert codes == {"pass": 0, "fail": 1, "inconclusive": 2, "usage": 3}, "Códigos de saída incorretos"

        print("  ✓ Códigos de saída OK")


class TestUtils:
    """Testes para os utilitários JSON."""

    @staticmethod
    def test_canonical_json_sorted():
        """Testa que a serialização canônica independe da ordem das chaves."""
        print("Teste 3: JSON canônico...")
        a = {"b": 1, "a": [1, 2]}
        b = {"a": [1, 2], "b": 1}

        assert canonical_json(a) == canonical_json(b), "Serialização deveria ignorar a ordem"
        assert canonical_json(a) == '{"a":[1,2],"b":1}', "Formato canônico inesperado"
        assert digest(a) == digest(b), "Resumos deveriam coincidir"
        assert len(digest(a)) == 64, "SHA-256 tem 64 dígitos hexadecimais"

        print("  ✓ JSON canônico OK")

    @staticmethod
    def test_save_and_load_json():
        """Testa persistência byte-estável."""
        print("Teste 4: Salvar e carregar JSON...")
        data = {"seed": 7, "verdict": "pass", "witness": {"count": 4}}
        with tempfile.TemporaryDirectory() as tmp:
            first = os.path.join(tmp, "a", "r.json")
            second = os.path.join(tmp, "b.json")
            save_json(data, first)
            save_json(load_json(first), second)

            assert load_json(first) == data, "Conteúdo recarregado difere"
            with open(first, "rb") as f1, open(second, "rb") as f2:
                assert f1.read() == f2.read(), "Arquivos deveriam ser idênticos byte a byte"

        print("  ✓ Salvar e carregar JSON OK")


class TestCLI:
    """Testes para a interface de linha de comando."""

    @staticmethod
    def test_homs_command():
        """Testa o subcomando homs."""
        print("Teste 5: Subcomando homs...")

        assert cli.main(["homs", "--group", "C2", "--target", "S3"]) == EXIT_PASS, "homs deveria sair com 0"

        print("  ✓ Subcomando homs OK")

    @staticmethod
    def test_tor_and_dual_commands():
        """Testa os subcomandos tor e dual."""
        print("Teste 6: Subcomandos tor e dual...")

        code = cli.main(["tor", "--ring", "4", "--i", "1", "--module", "[2]", "--coeff", "[2]"])
        assert code == EXIT_PASS, "tor deveria sair com 0"
        assert cli.main(["dual", "--module", "[2, 4]", "--ring", "4"]) == EXIT_PASS, "dual deveria sair com 0"

        print("  ✓ Subcomandos tor e dual OK")

    @staticmethod
    def test_invalid_module_is_usage_error():
        """Testa que módulo inválido resulta em código 3."""
        print("Teste 7: Módulo inválido...")

        assert cli.main(["dual", "--module", "[5]", "--ring", "4"]) == EXIT_USAGE, "Fator 5 não divide 4"
        assert cli.main(["dual", "--module", "[2]"]) == EXIT_USAGE, "Módulo sem anel deveria falhar"

        print("  ✓ Módulo inválido OK")

    @staticmethod
    def test_unknown_theorem_exits_with_usage():
        """Testa que teorema desconhecido encerra com código 3."""
        print("Teste 8: Teorema desconhecido...")
        try:
            cli.main(["check", "no-such-theorem"])
        except SystemExit as e:
            assert e.code == EXIT_USAGE, f"Código de saída {e.code}, esperado 3"
        else:
            raise AssertionError("argparse deveria encerrar o processo")

        print("  ✓ Teorema desconhecido OK")

    @staticmethod
    def test_gen_is_deterministic():
        """Testa que gen produz o mesmo arquivo para a mesma semente."""
        print("Teste 9: Determinismo do gen...")
        with tempfile.TemporaryDirectory() as tmp:
            paths = [os.path.join(tmp, f"inst{i}.json") for i in range(2)]
            for path in paths:
                assert cli.main(["gen", "free-module-coproduct", "--seed", "11", "--out", path]) == EXIT_PASS
            with open(paths[0], "rb") as f1, open(paths[1], "rb") as f2:
                assert f1.read() == f2.read(), "Instâncias da mesma semente diferem"
            instance = load_json(paths[0])

        assert instance["theorem"] == "free-module-coproduct", "Teorema gravado incorreto"
        assert instance["seed"] == 11, "Semente gravada incorreta"

        print("  ✓ Determinismo do gen OK")


def _test_classes():
    from test_finspace import TestFiniteSpace, TestPullback
    from test_fingroup import TestFiniteGroup, TestHoms, TestQuotients
    from test_smith import TestSmithNormalForm, TestIntegerLinearAlgebra
    from test_finmod import TestFiniteModule, TestTensorTor, TestDuality, TestInduction
    from test_bundle import TestBundles, TestProGroups, TestComparison
    from test_internalcat import TestInternalCategory, TestColimits
    from test_protower import TestTower, TestFingerprint, TestAdjunction
    from test_harness import TestSeeds, TestInstances, TestChecks, TestSuite

    return [
        TestConfig, TestUtils, TestCLI,
        TestFiniteSpace, TestPullback,
        TestFiniteGroup, TestHoms, TestQuotients,
        TestSmithNormalForm, TestIntegerLinearAlgebra,
        TestFiniteModule, TestTensorTor, TestDuality, TestInduction,
        TestBundles, TestProGroups, TestComparison,
        TestInternalCategory, TestColimits,
        TestTower, TestFingerprint, TestAdjunction,
        TestSeeds, TestInstances, TestChecks, TestSuite,
    ]


def run_all_tests():
    """Executa todos os testes."""
    print("\n" + "=" * 60)
    print("EXECUTANDO SUITE DE TESTES DO CÁLCULO DE FIBRADOS")
    print("=" * 60 + "\n")

    total_tests = 0
    passed_tests = 0

    for test_class in _test_classes():
        methods = [method for method in dir(test_class) if method.startswith("test_")]

        for method_name in methods:
            total_tests += 1
            try:
                method = getattr(test_class(), method_name)
                method()
                passed_tests += 1
            except AssertionError as e:
                print(f"  ✗ FALHOU ({test_class.__name__}.{method_name}): {e}")
            except Exception as e:
                print(f"  ✗ ERRO ({test_class.__name__}.{method_name}): {e}")

    print("\n" + "=" * 60)
    print(f"RESULTADOS: {passed_tests}/{total_tests} testes passaram")
    print("=" * 60)

    if passed_tests == total_tests:
        print("✓ TODOS OS TESTES PASSARAM!")
        return True
    else:
        print("✗ ALGUNS TESTES FALHARAM!")
        return False


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
