"""
RESUMO DA ESTRUTURA DO PROJETO
==============================

Verificador do Cálculo de Fibrados (coprodutos profinitos no nível finito)

ESTRUTURA DE DIRETÓRIOS:
"""

STRUCTURE = """
bundle-calculus/
│
├── 📁 scripts/                       # Módulos Python principais
│   ├── __init__.py                  # Inicialização do pacote
│   ├── config.py                    # Tetos, padrões, sementes, PROFIN_* do ambiente
│   ├── finspace.py                  # Espaços finitos, aplicações, fibras, pullbacks
│   ├── fingroup.py                  # Grupos por tábua, catálogo, Hom, quocientes
│   ├── smith.py                     # Forma normal de Smith, núcleo e sistemas inteiros
│   ├── finmod.py                    # Anéis Z/n e kG, módulos, tensor, Tor, dual, indução
│   ├── bundle.py                    # Fibrados, coprodutos internos, funtores levantados
│   ├── internalcat.py               # Categorias internas, colimites, amálgamas, pushouts
│   ├── protower.py                  # Torres, impressões digitais, adjunções relativas
│   └── harness.py                   # Instâncias, verificadores, testemunhas, suíte
│
├── 📁 utils/                         # Funções utilitárias
│   └── __init__.py                  # JSON canônico, resumos sha256, logging, diretórios
│
├── 📁 docs/                          # Documentação
│   ├── README_PROJECT.md            # Documentação completa
│   ├── QUICKSTART.md                # Guia de início rápido
│   └── DEVELOPMENT.md               # Convenções de código
│
├── 📁 results/                       # Saídas (criado sob demanda)
│   └── suite.json                   # Relatório reprodutível da suíte
│
├── 📄 main.py                        # CLI: check, gen, tor, dual, homs, suite
├── 📄 test_project.py               # Executor de todos os testes
├── 📄 test_finspace.py ... test_harness.py  # Testes por módulo
├── 📄 requirements.txt               # Dependências Python
├── 📄 SPEC_FULL.md                  # Requisitos
└── 📄 DESIGN.md                     # Decisões de projeto


MÓDULOS E SUAS RESPONSABILIDADES:
==================================

1. config.py
   ✓ Tetos e padrões dos limites de instância
   ✓ Constantes splitmix64 e semente padrão
   ✓ Orçamentos de busca e profundidade de torres
   ✓ Função get_config()

2. finspace.py / fingroup.py
   ✓ FiniteSpace, SpaceMap, pullback em ordem lexicográfica
   ✓ FiniteGroup por tábua, catálogo (Cn, Sn, An, Dn, Q8, produtos)
   ✓ Enumeração de homomorfismos por geradores, abelianização

3. smith.py / finmod.py
   ✓ Forma normal de Smith exata (numpy dtype=object)
   ✓ Módulos por apresentação, Hom, núcleo, conúcleo, soma direta
   ✓ Tensor, resoluções livres, Tor, dual de Pontryagin, indução

4. bundle.py
   ✓ GroupBundle, ModuleBundle, morfismos covariantes e opostos
   ✓ Coprodutos internos observados por Hom
   ✓ Registro de funtores e mapas de comparação

5. internalcat.py / protower.py
   ✓ Categorias internas finitas, colimite por coequalizador
   ✓ Torres, extensão nível a nível, adjunções relativas

6. harness.py
   ✓ Doze teoremas com geradores e verificadores
   ✓ Veredictos pass / fail / inconclusive com testemunhas
   ✓ Suíte paralela com resumo em pandas


COMO USAR:
==========

1. INSTALAÇÃO:
   python -m venv venv
   source venv/bin/activate
   pip install -r requirements.txt

2. RODAR A SUÍTE:
   python main.py suite --all --trials 4 --seed 1

3. EXECUTAR TESTES:
   python test_project.py

4. MODIFICAR PARÂMETROS:
   Editar scripts/config.py ou definir PROFIN_* no .env


DEPENDÊNCIAS PRINCIPAIS:
=========================

numpy           - Matrizes inteiras exatas, geradores semeados
sympy           - Grupos de permutação do catálogo, determinantes nos testes
pandas          - Resumo da suíte
hypothesis      - Testes de propriedades
python-dotenv   - Configuração por .env
"""

print(STRUCTURE)

if __name__ == "__main__":
    print("\n" + "=" * 60)
    print("Estrutura do verificador")
    print("=" * 60)
    print("\nProximos passos:")
    print("  1. Instalar dependências: pip install -r requirements.txt")
    print("  2. Executar testes: python test_project.py")
    print("  3. Rodar a suíte: python main.py suite --all")
