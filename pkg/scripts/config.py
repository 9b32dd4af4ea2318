"""
Módulo de Configuração Global do Projeto.

Este módulo centraliza todos os parâmetros globais utilizados na verificação
das identidades do cálculo de fibrados: limites de segurança dos geradores de
instâncias, orçamentos de busca, constantes de mistura de sementes e códigos
de saída da CLI.

Qualquer valor marcado como "sobrescrevível" pode ser alterado por uma
variável de ambiente com prefixo ``PROFIN_`` (inclusive via arquivo ``.env``).
"""

import os
from typing import Dict, Any, List, Tuple

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    """
    Lê um inteiro do ambiente, com valor padrão.

    Args:
        name (str): Nome da variável (sem o prefixo PROFIN_).
        default (int): Valor usado quando a variável não existe.

    Returns:
        int: Valor lido.
    """
    raw = os.environ.get(f"PROFIN_{name}")
    if raw is None or raw.strip() == "":
        return default
    return int(raw, 0)


def _env_flag(name: str, default: bool = False) -> bool:
    raw = os.environ.get(f"PROFIN_{name}")
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on", "sim")


# ============================================================================
# SEMENTES E MISTURA (SPLITMIX64)
# ============================================================================

DEFAULT_SEED: int = _env_int("SEED", 42)  # sobrescrevível

# Constantes da função de mistura de 64 bits usada em run_suite:
# seed_i = mix(seed, i), com z = seed + (i + 1) * GAMMA e finalização splitmix.
SPLITMIX_GAMMA: int = 0x9E3779B97F4A7C15
SPLITMIX_MIX1: int = 0xBF58476D1CE4E5B9
SPLITMIX_MIX2: int = 0x94D049BB133111EB
MASK_64: int = (1 << 64) - 1

# ============================================================================
# LIMITES DE TAMANHO DAS INSTÂNCIAS
# ============================================================================

# Tetos globais (nenhum gerador pode ultrapassá-los)
MAX_BASE_CAP: int = 6  # pontos na base de um fibrado
MAX_FIBRE_ORDER_CAP: int = 64  # ordem de cada fibra
MAX_RING_N_CAP: int = 12  # n em Z/n
MAX_TEST_ORDER_CAP: int = 24  # ordem dos objetos de teste T

# Valores padrão usados pela CLI e pela suíte
DEFAULT_MAX_BASE: int = 4
DEFAULT_MAX_FIBRE_ORDER: int = 24
DEFAULT_MAX_TEST_ORDER: int = 12
DEFAULT_MAX_RING_N: int = 12

# ============================================================================
# ORÇAMENTOS DE BUSCA E ENUMERAÇÃO
# ============================================================================

# Nós de backtracking permitidos na busca de isomorfismos (sobrescrevível)
ISO_SEARCH_BUDGET: int = _env_int("ISO_BUDGET", 200_000)

# Grau máximo aceito por tor(i, M, N) (sobrescrevível)
TOR_MAX_DEGREE: int = _env_int("TOR_MAX_DEGREE", 3)

# Busca por tabela completa (oráculo) só até esta ordem de domínio
FULL_TABLE_SEARCH_MAX_ORDER: int = 16

# Verificação exaustiva de pareamentos e ações só até esta ordem de módulo
MODULE_EXHAUSTIVE_MAX_ORDER: int = 2 ** 10

# Acima deste número de tuplas, a bijeção é certificada por contagem + amostra
HOM_TUPLE_ENUMERATION_CAP: int = 4096
HOM_TUPLE_SAMPLE_SIZE: int = 256

# Morfismos amostrados por quadrado de naturalidade
NATURALITY_SAMPLES: int = 3

# Profundidade máxima padrão das torres
TOWER_MAX_DEPTH: int = 6

# ============================================================================
# ESCOLHAS DOS GERADORES DE INSTÂNCIAS
# ============================================================================

# Anéis Z/n para o teorema do módulo livre
FREE_MODULE_RINGS: Tuple[int, ...] = (2, 3, 4, 6, 8)

# Anéis para tensor/Tor: Z/4, Z/6 e (Z/2)[C2]
TOR_RINGS: Tuple[str, ...] = ("Z/4", "Z/6", "(Z/2)[C2]")
TOR_DEGREES: Tuple[int, ...] = (0, 1, 2)

# Corpos de coeficientes k para indução/restrição
INDUCTION_FIELDS: Tuple[int, ...] = (2, 3)
INDUCTION_MAX_GROUP_ORDER: int = 12
INDUCTION_MAX_BASE: int = 3

# Catálogo de fibras de grupos (filtrado pela ordem máxima da instância)
FIBRE_CATALOG: Tuple[str, ...] = (
    "C1", "C2", "C3", "C4", "C5", "C6", "C2xC2", "S3", "C7", "C8",
    "C2xC4", "D4", "Q8", "C9", "C10", "A4", "C12", "D6", "C2xC6", "S4",
)

# Grupos de ordem pequena para diagramas de colimites e amálgamas
COLIMIT_GROUPS: Tuple[str, ...] = ("C1", "C2", "C3", "C4", "C2xC2", "C6", "S3")
COLIMIT_MAX_PROBE_ORDER: int = 8

# Sondas não abelianas adicionadas às abelianas de ordem <= max_test_order
NONABELIAN_PROBES: Tuple[str, ...] = ("S3", "D4", "Q8")

# ============================================================================
# SAÍDA E RELATÓRIOS
# ============================================================================

# Inclui timing_ms nos relatórios serializados (quebra a igualdade byte a byte)
REPORT_TIMING: bool = _env_flag("REPORT_TIMING", False)

# Processos paralelos na suíte (1 = sequencial)
WORKERS: int = _env_int("WORKERS", 1)

# Tentativas padrão por teorema
DEFAULT_TRIALS: int = _env_int("TRIALS", 5)

LOG_LEVEL: str = os.environ.get("PROFIN_LOG_LEVEL", "WARNING")

# Códigos de saída da CLI
EXIT_PASS: int = 0
EXIT_FAIL: int = 1
EXIT_INCONCLUSIVE: int = 2
EXIT_USAGE: int = 3

# ============================================================================
# DIRETÓRIOS
# ============================================================================

PROJECT_ROOT: str = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
RESULTS_DIR: str = os.path.join(PROJECT_ROOT, "results")

# ============================================================================
# UTILITY FUNCTION
# ============================================================================


def get_config() -> Dict[str, Any]:
    """
    Retorna um dicionário com todas as configurações do projeto.

    Returns:
        Dict[str, Any]: Dicionário contendo todos os parâmetros de configuração.
    """
    catalog: List[str] = list(FIBRE_CATALOG)
    return {
        "seeds": {
            "default_seed": DEFAULT_SEED,
            "splitmix": {
                "gamma": SPLITMIX_GAMMA,
                "mix1": SPLITMIX_MIX1,
                "mix2": SPLITMIX_MIX2,
            },
        },
        "caps": {
            "max_base": MAX_BASE_CAP,
            "max_fibre_order": MAX_FIBRE_ORDER_CAP,
            "max_ring_n": MAX_RING_N_CAP,
            "max_test_order": MAX_TEST_ORDER_CAP,
        },
        "defaults": {
            "max_base": DEFAULT_MAX_BASE,
            "max_fibre_order": DEFAULT_MAX_FIBRE_ORDER,
            "max_test_order": DEFAULT_MAX_TEST_ORDER,
            "max_ring_n": DEFAULT_MAX_RING_N,
            "trials": DEFAULT_TRIALS,
        },
        "search": {
            "iso_budget": ISO_SEARCH_BUDGET,
            "tor_max_degree": TOR_MAX_DEGREE,
            "full_table_max_order": FULL_TABLE_SEARCH_MAX_ORDER,
            "module_exhaustive_max_order": MODULE_EXHAUSTIVE_MAX_ORDER,
            "hom_tuple_cap": HOM_TUPLE_ENUMERATION_CAP,
            "hom_tuple_sample": HOM_TUPLE_SAMPLE_SIZE,
            "naturality_samples": NATURALITY_SAMPLES,
            "tower_max_depth": TOWER_MAX_DEPTH,
        },
        "generators": {
            "free_module_rings": list(FREE_MODULE_RINGS),
            "tor_rings": list(TOR_RINGS),
            "tor_degrees": list(TOR_DEGREES),
            "induction_fields": list(INDUCTION_FIELDS),
            "fibre_catalog": catalog,
            "colimit_groups": list(COLIMIT_GROUPS),
            "nonabelian_probes": list(NONABELIAN_PROBES),
        },
        "output": {
            "report_timing": REPORT_TIMING,
            "workers": WORKERS,
            "log_level": LOG_LEVEL,
            "exit_codes": {
                "pass": EXIT_PASS,
                "fail": EXIT_FAIL,
                "inconclusive": EXIT_INCONCLUSIVE,
                "usage": EXIT_USAGE,
            },
        },
        "directories": {
            "project_root": PROJECT_ROOT,
            "results": RESULTS_DIR,
        },
    }


if __name__ == "__main__":
    # Teste da configuração
    config = get_config()
    print("Configuração do Projeto Carregada com Sucesso!")
    print(f"Semente padrão: {config['seeds']['default_seed']}")
    print(f"Orçamento de busca: {config['search']['iso_budget']} nós")
