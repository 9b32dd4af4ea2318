"""
Script Principal - Verificador do Cálculo de Fibrados.

Subcomandos:
  check   verifica um teorema numa instância gerada (ou em várias tentativas)
  gen     gera e imprime a instância determinística de um teorema
  tor     calcula Tor_i(M, N) sobre um anel finito
  dual    calcula o dual de Pontryagin de um módulo
  homs    conta homomorfismos entre grupos do catálogo
  suite   executa a suíte de teoremas (relatório JSON reprodutível)

Códigos de saída: 0 tudo pass, 1 algum fail, 2 algum inconclusive, 3 uso incorreto.
"""

import argparse
import json
import os
import sys
from typing import Any, List, Optional

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from scripts import finmod
from scripts.config import (
    DEFAULT_MAX_BASE,
    DEFAULT_MAX_FIBRE_ORDER,
    DEFAULT_MAX_TEST_ORDER,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    EXIT_FAIL,
    EXIT_INCONCLUSIVE,
    EXIT_PASS,
    EXIT_USAGE,
    WORKERS,
)
from scripts.fingroup import count_homs, parse_group_spec
from scripts.harness import (
    ALL_THEOREMS,
    Bounds,
    Report,
    SuiteReport,
    TheoremId,
    Verdict,
    check,
    gen_instance,
    run_suite,
)
from utils import configure_logging, print_banner, save_json


class UsageError(Exception):
    """Argumentos inválidos (saída 3)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: erro: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _json_arg(text: str) -> Any:
    """JSON literal ou caminho para um arquivo JSON."""
    if os.path.exists(text):
        with open(text, "r", encoding="utf-8") as f:
            return json.load(f)
    return json.loads(text)


def _ring_arg(text: str) -> finmod.FiniteRing:
    return finmod.zmod(int(text)) if text.isdigit() else finmod.parse_ring_spec(text)


def _module_arg(text: str, ring: Optional[finmod.FiniteRing] = None) -> finmod.FiniteModule:
    data = _json_arg(text)
    if isinstance(data, list):
        data = {"invariant_factors": data}
    if "ring" not in data:
        if ring is None:
            raise UsageError("Módulo sem anel: informe 'ring' no JSON")
        data = dict(data, ring=ring.to_json())
    return finmod.FiniteModule.from_json(data)


def _bounds(args: argparse.Namespace) -> Bounds:
    return Bounds(
        max_base=args.max_base,
        max_fibre_order=args.max_fibre_order,
        max_test_order=args.max_test_order,
    )


def _verdict_exit(verdict: Verdict) -> int:
    return {Verdict.PASS: EXIT_PASS, Verdict.FAIL: EXIT_FAIL, Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE}[verdict]


def _print_report(report: Report) -> None:
    print(f"   {report.theorem.value:<28} seed={report.seed:<20} {report.verdict.value}")
    if report.verdict is not Verdict.PASS:
        print(f"     testemunha: {json.dumps(report.witness, sort_keys=True)[:400]}")


def _print_suite(suite: SuiteReport) -> None:
    table = suite.summary()
    print(f"   {'Teorema':<28} {'Tentativas':>10} {'pass':>6} {'fail':>6} {'inconc.':>8}")
    print(f"   {'-'*28} {'-'*10} {'-'*6} {'-'*6} {'-'*8}")
    for row in table.itertuples(index=False):
        print(f"   {row.theorem:<28} {row.trials:>10} {row[2]:>6} {row.fail:>6} {row.inconclusive:>8}")
    print(f"\n   Veredicto geral: {suite.verdict.value}")


# ============================================================================
# SUBCOMANDOS
# ============================================================================


def cmd_check(args: argparse.Namespace) -> int:
    theorem = TheoremId(args.theorem)
    bounds = _bounds(args)
    print_banner(f"VERIFICAÇÃO: {theorem.value}")
    if args.trials > 1:
        suite = run_suite([theorem], args.trials, args.seed, bounds, args.workers)
        for report in suite.reports[theorem.value]:
            _print_report(report)
        if args.json:
            save_json(suite.to_json(), args.json)
        return suite.exit_code()
    report = check(theorem, gen_instance(theorem, args.seed, bounds))
    _print_report(report)
    if args.json:
        save_json(report.to_json(), args.json)
    return _verdict_exit(report.verdict)


def cmd_gen(args: argparse.Namespace) -> int:
    instance = gen_instance(args.theorem, args.seed, _bounds(args))
    if args.out:
        save_json(instance.to_json(), args.out)
    else:
        print(json.dumps(instance.to_json(), indent=2, sort_keys=True))
    return EXIT_PASS


def cmd_tor(args: argparse.Namespace) -> int:
    ring = _ring_arg(args.ring)
    M = _module_arg(args.module, ring)
    N = _module_arg(args.coeff, ring)
    T = finmod.tor(args.i, M, N, args.strategy)
    print(f"Tor_{args.i}^{ring.name}(M, N) = {list(T.invariant_factors)}  (ordem {T.order})")
    print(json.dumps(T.to_json(), sort_keys=True))
    return EXIT_PASS


def cmd_dual(args: argparse.Namespace) -> int:
    M = _module_arg(args.module, _ring_arg(args.ring) if args.ring else None)
    D = finmod.pontryagin_dual(M)
    print(f"M^∨ = {list(D.invariant_factors)}  (ordem {D.order})")
    print(json.dumps(D.to_json(), sort_keys=True))
    return EXIT_PASS


def cmd_homs(args: argparse.Namespace) -> int:
    G = parse_group_spec(args.group)
    T = parse_group_spec(args.target)
    print(f"|Hom({G.name}, {T.name})| = {count_homs(G, T)}")
    return EXIT_PASS


def cmd_suite(args: argparse.Namespace) -> int:
    theorems = list(ALL_THEOREMS) if args.all or not args.theorem else [TheoremId(t) for t in args.theorem]
    print_banner("SUÍTE DE TEOREMAS")
    print(f"\n1. {len(theorems)} teoremas, {args.trials} tentativas cada, semente {args.seed}")
    suite = run_suite(theorems, args.trials, args.seed, _bounds(args), args.workers)
    print("\n2. Sumário")
    _print_suite(suite)
    if args.json:
        save_json(suite.to_json(), args.json)
        print(f"\n3. Relatório salvo em {args.json}")
    return suite.exit_code()


# ============================================================================
# PARSER
# ============================================================================


def _add_bounds(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-base", type=int, default=DEFAULT_MAX_BASE)
    p.add_argument("--max-fibre-order", type=int, default=DEFAULT_MAX_FIBRE_ORDER)
    p.add_argument("--max-test-order", type=int, default=DEFAULT_MAX_TEST_ORDER)


def build_parser() -> argparse.ArgumentParser:
    theorem_ids = [t.value for t in ALL_THEOREMS]
    parser = _Parser(prog="profin", description="Verificador exato do cálculo de fibrados finitos")
    parser.add_argument("--verbose", "-v", action="store_true", help="logging em nível DEBUG")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="verifica um teorema")
    p.add_argument("theorem", choices=theorem_ids)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--workers", type=int, default=WORKERS)
    p.add_argument("--json", default=None)
    _add_bounds(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="gera uma instância")
    p.add_argument("theorem", choices=theorem_ids)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default=None)
    _add_bounds(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("tor", help="Tor_i(M, N)")
    p.add_argument("--ring", required=True, help="n de Z/n ou especificação como '(Z/2)[C2]'")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--coeff", required=True)
    p.add_argument("--strategy", choices=finmod.RESOLUTION_STRATEGIES, default="minimal")
    p.set_defaults(func=cmd_tor)

    p = sub.add_parser("dual", help="dual de Pontryagin")
    p.add_argument("--module", required=True)
    p.add_argument("--ring", default=None)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("homs", help="conta homomorfismos")
    p.add_argument("--group", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_homs)

    p = sub.add_parser("suite", help="executa a suíte")
    p.add_argument("--all", action="store_true")
    p.add_argument("--theorem", action="append", choices=theorem_ids)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=WORKERS)
    p.add_argument("--json", default=None)
    _add_bounds(p)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Função principal do projeto."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging("DEBUG" if args.verbose else None)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError) as e:
        print(f"Erro: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
