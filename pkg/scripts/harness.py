"""
Módulo de Verificação dos Teoremas.

Gera instâncias determinísticas a partir de (teorema, semente, limites),
verifica cada identidade de comutação com uma testemunha explícita e agrega
os resultados em relatórios reprodutíveis byte a byte.

Veredictos:
    - pass: testemunha explícita (isomorfismo canônico ou bijeção contada).
    - fail: contraexemplo concreto, minimizado por remoção gulosa de fibras.
    - inconclusive: orçamento de busca esgotado (nunca tratado como sucesso).
"""

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from math import lcm, prod
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from scripts import finmod
from scripts.bundle import (
    Coproduct,
    GroupBundle,
    ModuleBundle,
    bundle_evaluation,
    comparison_map,
    dualise_bundle,
    dualise_bundle_map,
    enumerate_bundle_maps,
    enumerate_opposite_bundle_maps,
    functor,
)
from scripts.config import (
    COLIMIT_GROUPS,
    COLIMIT_MAX_PROBE_ORDER,
    DEFAULT_MAX_BASE,
    DEFAULT_MAX_FIBRE_ORDER,
    DEFAULT_MAX_RING_N,
    DEFAULT_MAX_TEST_ORDER,
    FIBRE_CATALOG,
    FREE_MODULE_RINGS,
    HOM_TUPLE_ENUMERATION_CAP,
    HOM_TUPLE_SAMPLE_SIZE,
    INDUCTION_FIELDS,
    INDUCTION_MAX_BASE,
    INDUCTION_MAX_GROUP_ORDER,
    MASK_64,
    MAX_BASE_CAP,
    MAX_FIBRE_ORDER_CAP,
    MAX_RING_N_CAP,
    MAX_TEST_ORDER_CAP,
    NATURALITY_SAMPLES,
    NONABELIAN_PROBES,
    REPORT_TIMING,
    SPLITMIX_GAMMA,
    SPLITMIX_MIX1,
    SPLITMIX_MIX2,
    TOR_DEGREES,
    TOR_RINGS,
    WORKERS,
    EXIT_FAIL,
    EXIT_INCONCLUSIVE,
    EXIT_PASS,
)
from scripts.fingroup import (
    FiniteGroup,
    GroupHom,
    SearchBudgetExceeded,
    abelian_groups_up_to,
    abelianisation,
    catalog_groups,
    enumerate_hom_values,
    parse_group_spec,
    quotient_by_normal_closure,
    subgroup,
)
from scripts.finmod import FiniteModule, FiniteRing, ModuleHom
from scripts.finspace import FiniteSpace, projection_from_fibre_sizes
from scripts.internalcat import (
    AmalgamData,
    amalgam_diagram,
    amalgam_homs,
    amalgam_to_colimit_tuple,
    colimit_via_coequaliser,
    diagram_on_free_category,
    direct_universal_homs,
    discrete_colimit_agrees,
    endomorphism_monoid_diagram,
    free_category_on_dag,
    pushout_with_surjective_leg,
    span_diagram,
)
from scripts.protower import (
    RelativeAdjunctionSpec,
    UnsupportedSample,
    check_four_square,
    check_relative_adjunction,
    tower_from_descriptor,
)
from utils import digest

logger = logging.getLogger(__name__)


# ============================================================================
# IDENTIFICADORES, LIMITES E INSTÂNCIAS
# ============================================================================


class TheoremId(str, Enum):
    ABELIANISATION_COPRODUCT = "abelianisation-coproduct"
    FREE_MODULE_COPRODUCT = "free-module-coproduct"
    TENSOR_COPRODUCT = "tensor-coproduct"
    TOR_COPRODUCT = "tor-coproduct"
    INDUCTION_COPRODUCT = "induction-coproduct"
    RESTRICTION_COPRODUCT = "restriction-coproduct"
    DUALITY_INVOLUTION = "duality-involution"
    DUALITY_EQUIVALENCE = "duality-equivalence"
    COLIMIT_COEQUALISER = "colimit-coequaliser"
    DISCRETE_COLIMIT_AGREEMENT = "discrete-colimit-agreement"
    RELATIVE_ADJUNCTION = "relative-adjunction"
    FOUR_SQUARE = "four-square"


ALL_THEOREMS: Tuple[TheoremId, ...] = tuple(TheoremId)


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Bounds:
    """
    Limites de tamanho das instâncias geradas.

    Raises:
        ValueError: Se algum limite exceder os tetos globais.
    """

    max_base: int = DEFAULT_MAX_BASE
    max_fibre_order: int = DEFAULT_MAX_FIBRE_ORDER
    max_test_order: int = DEFAULT_MAX_TEST_ORDER
    max_ring_n: int = DEFAULT_MAX_RING_N

    def __post_init__(self):
        checks = (
            (0 <= self.max_base <= MAX_BASE_CAP, "max_base"),
            (1 <= self.max_fibre_order <= MAX_FIBRE_ORDER_CAP, "max_fibre_order"),
            (1 <= self.max_test_order <= MAX_TEST_ORDER_CAP, "max_test_order"),
            (2 <= self.max_ring_n <= MAX_RING_N_CAP, "max_ring_n"),
        )
        for ok, name in checks:
            if not ok:
                raise ValueError(f"limites excedem os tetos (bounds exceed caps): {name}={getattr(self, name)}")

    def to_json(self) -> Dict[str, int]:
        return {
            "max_base": self.max_base,
            "max_fibre_order": self.max_fibre_order,
            "max_test_order": self.max_test_order,
            "max_ring_n": self.max_ring_n,
        }

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "Bounds":
        return Bounds(**{k: int(v) for k, v in data.items()})


@dataclass(frozen=True)
class CheckInstance:
    """
    Instância regenerável a partir de (teorema, semente, limites).

    Attributes:
        theorem (TheoremId): Teorema.
        seed (int): Semente de 64 bits.
        bounds (Bounds): Limites usados.
        payload (Dict[str, Any]): Dados gerados, já em forma JSON.
    """

    theorem: TheoremId
    seed: int
    bounds: Bounds
    payload: Dict[str, Any] = field(compare=False)

    def to_json(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem.value,
            "seed": self.seed,
            "bounds": self.bounds.to_json(),
            "payload": self.payload,
        }

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "CheckInstance":
        return CheckInstance(TheoremId(data["theorem"]), int(data["seed"]), Bounds.from_json(data["bounds"]), data["payload"])

    @property
    def digest(self) -> str:
        return digest(self.to_json())


@dataclass
class Report:
    """Resultado de uma verificação."""

    theorem: TheoremId
    seed: int
    digest: str
    verdict: Verdict
    witness: Dict[str, Any]
    timing_ms: Optional[float]
    instance: CheckInstance

    def to_json(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem.value,
            "seed": self.seed,
            "digest": self.digest,
            "verdict": self.verdict.value,
            "witness": self.witness,
            "timing_ms": self.timing_ms,
            "instance": self.instance.to_json(),
        }

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "Report":
        return Report(
            TheoremId(data["theorem"]),
            int(data["seed"]),
            data["digest"],
            Verdict(data["verdict"]),
            data["witness"],
            data.get("timing_ms"),
            CheckInstance.from_json(data["instance"]),
        )


def mix(seed: int, i: int) -> int:
    """
    Semente derivada seed_i pela finalização splitmix64.

    Args:
        seed (int): Semente base.
        i (int): Índice da tentativa.

    Returns:
        int: Semente de 64 bits.
    """
    z = (seed + (i + 1) * SPLITMIX_GAMMA) & MASK_64
    z = ((z ^ (z >> 30)) * SPLITMIX_MIX1) & MASK_64
    z = ((z ^ (z >> 27)) * SPLITMIX_MIX2) & MASK_64
    return z ^ (z >> 31)


def _rng(theorem: TheoremId, seed: int) -> np.random.RandomState:
    seed &= MASK_64
    return np.random.RandomState([seed & 0xFFFFFFFF, seed >> 32, ALL_THEOREMS.index(theorem)])


def _pick(rng: np.random.RandomState, items: Sequence[Any]) -> Any:
    if not items:
        raise ValueError("Nenhuma escolha disponível dentro dos limites")
    return items[rng.randint(len(items))]


def _base_size(rng: np.random.RandomState, max_base: int) -> int:
    return rng.randint(1, max_base + 1) if max_base >= 1 else 0


# ============================================================================
# GERADORES DE OBJETOS
# ============================================================================


def abelian_probes(max_order: int) -> List[str]:
    return [G.name for G in abelian_groups_up_to(max_order)]


def group_probes(max_order: int) -> List[str]:
    """Abelianos de ordem <= max_order mais as sondas não abelianas que cabem."""
    extra = [s for s in NONABELIAN_PROBES if parse_group_spec(s).order <= max_order]
    return abelian_probes(max_order) + extra


def _fibre_specs(bounds: Bounds, catalog: Sequence[str] = FIBRE_CATALOG) -> List[str]:
    return [s for s in catalog if parse_group_spec(s).order <= bounds.max_fibre_order]


def _divisors(n: int) -> List[int]:
    return [d for d in range(2, n + 1) if n % d == 0]


def _random_module(rng: np.random.RandomState, ring: FiniteRing, max_rank: int = 2) -> FiniteModule:
    """Soma de 1..max_rank parcelas cíclicas (ou livres de posto 1, sobre kG)."""
    menu: List[FiniteModule] = [finmod.cyclic_module(ring, d) for d in _divisors(ring.n)]
    if ring.group is not None:
        menu.append(finmod.free_module(ring, 1))
    parts = [_pick(rng, menu) for _ in range(rng.randint(1, max_rank + 1))]
    return finmod.direct_sum(parts, ring)[0]


def _tor_rings(bounds: Bounds) -> List[str]:
    return [s for s in TOR_RINGS if finmod.parse_ring_spec(s).n <= bounds.max_ring_n]


def _random_subgroup(rng: np.random.RandomState, G: FiniteGroup) -> List[int]:
    choice = rng.randint(3)
    if choice == 0:
        return [G.identity]
    if choice == 1:
        return list(range(G.order))
    return [int(g) for g in G.generated_subgroup([int(rng.randint(G.order))])]


def _named_module(ring: FiniteRing, name: str) -> FiniteModule:
    if name == "free":
        return finmod.free_module(ring, 1)
    if name == "trivial":
        return finmod.trivial_module(ring)
    raise ValueError(f"Módulo nomeado desconhecido: {name!r}")


# ============================================================================
# GERADORES DE INSTÂNCIAS
# ============================================================================


def _gen_group_bundle(rng: np.random.RandomState, bounds: Bounds) -> Dict[str, Any]:
    specs = _fibre_specs(bounds)
    return {
        "fibres": [_pick(rng, specs) for _ in range(_base_size(rng, bounds.max_base))],
        "probes": abelian_probes(bounds.max_test_order),
    }


def _gen_discrete(rng: np.random.RandomState, bounds: Bounds) -> Dict[str, Any]:
    specs = _fibre_specs(bounds, COLIMIT_GROUPS)
    return {
        "fibres": [_pick(rng, specs) for _ in range(_base_size(rng, bounds.max_base))],
        "probes": group_probes(min(COLIMIT_MAX_PROBE_ORDER, bounds.max_test_order)),
    }


def _gen_free_module(rng: np.random.RandomState, bounds: Bounds) -> Dict[str, Any]:
    rings = [n for n in FREE_MODULE_RINGS if n <= bounds.max_ring_n]
    return {
        "ring": int(_pick(rng, rings)),
        "fibres": [int(rng.randint(0, 3)) for _ in range(_base_size(rng, bounds.max_base))],
    }


def _gen_module_bundle(rng: np.random.RandomState, bounds: Bounds, with_degree: bool) -> Dict[str, Any]:
    ring = finmod.parse_ring_spec(_pick(rng, _tor_rings(bounds)))
    payload = {
        "ring": ring.name,
        "fibres": [_random_module(rng, ring).to_json() for _ in range(_base_size(rng, bounds.max_base))],
        "coefficient": _random_module(rng, ring, max_rank=1).to_json(),
    }
    if with_degree:
        payload["i"] = int(_pick(rng, TOR_DEGREES))
    return payload


def _gen_scalars(rng: np.random.RandomState, bounds: Bounds) -> Dict[str, Any]:
    max_order = min(INDUCTION_MAX_GROUP_ORDER, bounds.max_fibre_order)
    G = _pick(rng, [g for g in catalog_groups(max_order) if g.order > 1] or catalog_groups(max_order))
    base = _base_size(rng, min(INDUCTION_MAX_BASE, bounds.max_base))
    return {
        "k": int(_pick(rng, INDUCTION_FIELDS)),
        "group": G.name,
        "subgroup": _random_subgroup(rng, G),
        "fibres": [_pick(rng, ("trivial", "free")) for _ in range(base)],
    }


def _gen_duality(rng: np.random.RandomState, bounds: Bounds) -> Dict[str, Any]:
    ring = finmod.parse_ring_spec(_pick(rng, _tor_rings(bounds)))
    return {
        "ring": ring.name,
        "fibres": [_random_module(rng, ring).to_json() for _ in range(_base_size(rng, bounds.max_base))],
    }


def _gen_duality_pair(rng: np.random.RandomState, bounds: Bounds) -> Dict[str, Any]:
    rings = [n for n in (2, 3, 4) if n <= bounds.max_ring_n]
    ring = finmod.zmod(int(_pick(rng, rings)))
    small = min(2, bounds.max_base)
    return {
        "ring": ring.name,
        "fibres": [_random_module(rng, ring, 1).to_json() for _ in range(_base_size(rng, small))],
        "target_fibres": [_random_module(rng, ring, 1).to_json() for _ in range(_base_size(rng, small))],
    }


def _injective_values(H: FiniteGroup, G: FiniteGroup) -> List[Tuple[int, ...]]:
    return [v for v in enumerate_hom_values(H, G) if len(set(v)) == H.order]


def _gen_colimit(rng: np.random.RandomState, bounds: Bounds) -> Dict[str, Any]:
    specs = _fibre_specs(bounds, COLIMIT_GROUPS)
    probes = group_probes(min(COLIMIT_MAX_PROBE_ORDER, bounds.max_test_order))
    shape = _pick(rng, ("dag", "cone", "span", "monoid"))
    if shape == "monoid":
        G = parse_group_spec(_pick(rng, [s for s in specs if parse_group_spec(s).order > 1] or specs))
        endos = [v for v in enumerate_hom_values(G, G) if v != tuple(range(G.order))] or [tuple(range(G.order))]
        generators = [list(_pick(rng, endos)) for _ in range(rng.randint(1, 3))]
        return {"shape": shape, "G": G.name, "generators": generators, "probes": probes}
    if shape == "cone":
        H = parse_group_spec(_pick(rng, [s for s in specs if parse_group_spec(s).order <= 3]))
        hosts = [s for s in specs if _injective_values(H, parse_group_spec(s))]
        vertex_groups = [_pick(rng, hosts) for _ in range(_base_size(rng, min(2, bounds.max_base)))]
        theta = [list(_pick(rng, _injective_values(H, parse_group_spec(s)))) for s in vertex_groups]
        return {"shape": shape, "H": H.name, "vertex_groups": vertex_groups, "theta": theta, "probes": probes}
    if shape == "span":
        K = parse_group_spec(_pick(rng, specs))
        G1 = parse_group_spec(_pick(rng, specs))
        return {
            "shape": shape,
            "K": K.name,
            "G1": G1.name,
            "i": list(_pick(rng, enumerate_hom_values(K, G1))),
            "j": _pick(rng, ("identity", "abelianisation")),
            "probes": probes,
        }
    n = rng.randint(1, 4)
    candidates = [(s, t) for s in range(n) for t in range(s + 1, n)]
    rng.shuffle(candidates)
    edges: List[Tuple[int, int]] = []
    for e in candidates:
        if len(free_category_on_dag(n, edges + [e])[1]) <= 6:
            edges.append(e)
    groups = [_pick(rng, specs) for _ in range(n)]
    homs = [list(_pick(rng, enumerate_hom_values(parse_group_spec(groups[s]), parse_group_spec(groups[t])))) for s, t in edges]
    return {"shape": shape, "groups": groups, "edges": [list(e) for e in edges], "edge_homs": homs, "probes": probes}


def _gen_adjunction(rng: np.random.RandomState, bounds: Bounds) -> Dict[str, Any]:
    pair = _pick(rng, ("free_module-forget", "abelianisation-inclusion", "induce-restriction", "free_group-forget"))
    samples: List[Dict[str, Any]] = []
    params: Dict[str, Any] = {}
    if pair == "free_module-forget":
        ring = finmod.zmod(int(_pick(rng, [n for n in (2, 3, 4) if n <= bounds.max_ring_n])))
        params["ring"] = ring.n
        for _ in range(2):
            samples.append({"c": int(rng.randint(0, 3)), "d": _random_module(rng, ring).to_json()})
    elif pair == "abelianisation-inclusion":
        sources = [s for s in FIBRE_CATALOG if parse_group_spec(s).order <= min(12, bounds.max_fibre_order)]
        targets = abelian_probes(min(12, bounds.max_test_order))
        for _ in range(2):
            c: Any = _pick(rng, sources)
            if rng.randint(2):
                c = {"tower": {"family": "constant", "kind": "group", "object": c}}
            samples.append({"c": c, "d": _pick(rng, targets)})
    elif pair == "induce-restriction":
        G = _pick(rng, [g for g in catalog_groups(min(6, bounds.max_fibre_order)) if g.order > 1] or catalog_groups(1))
        params.update({"k": int(_pick(rng, INDUCTION_FIELDS)), "group": G.name, "subgroup": _random_subgroup(rng, G)})
        for _ in range(2):
            samples.append({"c": _pick(rng, ("trivial", "free")), "d": _pick(rng, ("trivial", "free"))})
    else:
        targets = _fibre_specs(bounds, COLIMIT_GROUPS)
        for _ in range(2):
            samples.append({"c": int(rng.randint(0, 3)), "d": _pick(rng, targets)})
    return {"pair": pair, "params": params, "samples": samples}


def _gen_four_square(rng: np.random.RandomState, bounds: Bounds) -> Dict[str, Any]:
    n = int(_pick(rng, [n for n in (2, 3, 4) if n <= bounds.max_ring_n]))
    base = _base_size(rng, min(2, bounds.max_base))
    return {
        "ring": n,
        "module": [int(_pick(rng, _divisors(n)))],
        "fibres": [[int(rng.randint(0, 3)), int(_pick(rng, _divisors(n)))] for _ in range(base)],
    }


_GENERATORS: Dict[TheoremId, Callable[[np.random.RandomState, Bounds], Dict[str, Any]]] = {
    TheoremId.ABELIANISATION_COPRODUCT: _gen_group_bundle,
    TheoremId.FREE_MODULE_COPRODUCT: _gen_free_module,
    TheoremId.TENSOR_COPRODUCT: lambda rng, b: _gen_module_bundle(rng, b, False),
    TheoremId.TOR_COPRODUCT: lambda rng, b: _gen_module_bundle(rng, b, True),
    TheoremId.INDUCTION_COPRODUCT: _gen_scalars,
    TheoremId.RESTRICTION_COPRODUCT: _gen_scalars,
    TheoremId.DUALITY_INVOLUTION: _gen_duality,
    TheoremId.DUALITY_EQUIVALENCE: _gen_duality_pair,
    TheoremId.COLIMIT_COEQUALISER: _gen_colimit,
    TheoremId.DISCRETE_COLIMIT_AGREEMENT: _gen_discrete,
    TheoremId.RELATIVE_ADJUNCTION: _gen_adjunction,
    TheoremId.FOUR_SQUARE: _gen_four_square,
}


def gen_instance(theorem: Any, seed: int, bounds: Optional[Bounds] = None) -> CheckInstance:
    """
    Gera a instância determinística de um teorema.

    Args:
        theorem (TheoremId | str): Teorema.
        seed (int): Semente de 64 bits.
        bounds (Optional[Bounds]): Limites (padrão: Bounds()).

    Returns:
        CheckInstance: Instância com payload JSON.

    Raises:
        ValueError: Teorema desconhecido ou limites acima dos tetos.
    """
    theorem = TheoremId(theorem)
    bounds = bounds or Bounds()
    payload = _GENERATORS[theorem](_rng(theorem, seed), bounds)
    return CheckInstance(theorem, seed & MASK_64, bounds, payload)


# ============================================================================
# VERIFICADORES
# ============================================================================

Outcome = Tuple[Verdict, Dict[str, Any]]


def _group_bundle(specs: Sequence[str]) -> GroupBundle:
    return GroupBundle(FiniteSpace(len(specs)), tuple(parse_group_spec(s) for s in specs))


def _module_bundle(payload: Dict[str, Any], key: str = "fibres") -> ModuleBundle:
    ring = finmod.parse_ring_spec(payload["ring"]) if isinstance(payload["ring"], str) else finmod.zmod(payload["ring"])
    fibres = tuple(FiniteModule.from_json(m) for m in payload[key])
    return ModuleBundle(FiniteSpace(len(fibres)), ring, fibres)


def _comparison_outcome(F: Any, B: Any) -> Outcome:
    c = comparison_map(F, B)
    if c.is_isomorphism():
        return Verdict.PASS, {"comparison": c.to_json(), "invariant_factors": list(c.codomain.invariant_factors)}
    left, right = list(c.domain.invariant_factors), list(c.codomain.invariant_factors)
    if left != right:
        return Verdict.FAIL, {"reason": "invariant factors differ", "domain": left, "codomain": right}
    abstract = finmod.find_module_isomorphism(c.domain, c.codomain)
    return Verdict.FAIL, {
        "reason": "canonical comparison is not an isomorphism",
        "abstract_isomorphism": abstract is not None,
        "comparison": c.to_json(),
    }


def _abelian_module_side(B: GroupBundle, T: FiniteGroup):
    """Hom(⊕ G_x^ab, T) como módulos sobre Z/n e a transposição para tuplas de grupos."""
    abs_ = [abelianisation(G) for G in B.fibres]
    n = lcm(2, T.exponent(), *(A.exponent() for A, _ in abs_))
    ring = finmod.zmod(n)
    parts = [finmod.module_from_abelian_group(A, n) for A, _ in abs_]
    S, injections, _ = finmod.direct_sum([m for m, _ in parts], ring)
    MT, mapT = finmod.module_from_abelian_group(T, n)
    inverse = {tuple(v): t for t, v in mapT.items()}

    def transpose(h: ModuleHom) -> Tuple[Tuple[int, ...], ...]:
        return tuple(
            tuple(inverse[tuple(h.apply(inj.apply(mapping[q(g)])))] for g in range(G.order))
            for G, (_, q), (_, mapping), inj in zip(B.fibres, abs_, parts, injections)
        )

    return S, MT, transpose


def _check_abelianisation_fibrewise(B: GroupBundle, T: FiniteGroup, n_right: int) -> Optional[Dict[str, Any]]:
    """
    Bijeção Hom(⊕ G_x^ab, T) ≅ Π_x Hom(G_x, T) conferida fibra a fibra.

    Hom de uma soma direta é o produto dos Hom das parcelas, então basta
    enumerar cada Hom(G_x^ab, T) por inteiro e multiplicar as contagens.

    Returns:
        Optional[Dict[str, Any]]: Descrição da falha, ou None se a bijeção vale.
    """
    total = 1
    for x, G in enumerate(B.fibres):
        S_x, MT_x, transpose_x = _abelian_module_side(GroupBundle(FiniteSpace(1), (G,)), T)
        images = [transpose_x(h)[0] for h in finmod.iter_module_homs(S_x, MT_x)]
        if len(set(images)) != len(images) or set(images) != set(enumerate_hom_values(G, T)):
            return {"point": x, "reason": "fibrewise transposition is not a bijection"}
        total *= len(images)
    if total != n_right:
        return {"reason": "Hom of the sum is not the product of fibre Homs", "product": total, "right": n_right}
    return None


def _check_abelianisation(payload: Dict[str, Any]) -> Outcome:
    B = _group_bundle(payload["fibres"])
    coproduct = Coproduct(B)
    counts: Dict[str, Any] = {}
    for name in payload["probes"]:
        T = parse_group_spec(name)
        if not T.is_abelian():
            raise ValueError(f"Sonda não abeliana {name} para abelianização")
        S, MT, transpose = _abelian_module_side(B, T)
        n_left = coproduct.count_homs_to(T)
        n_right = finmod.count_module_homs(S, MT)
        if n_left != n_right:
            return Verdict.FAIL, {"probe": name, "left": n_left, "right": n_right}
        if n_left <= HOM_TUPLE_ENUMERATION_CAP:
            images = [transpose(h) for h in finmod.iter_module_homs(S, MT)]
            if len(set(images)) != len(images) or set(images) != set(coproduct.homs_to(T)):
                return Verdict.FAIL, {"probe": name, "reason": "transposition is not a bijection"}
            mode = "enumerated"
        else:
            failure = _check_abelianisation_fibrewise(B, T, n_right)
            if failure is not None:
                return Verdict.FAIL, {"probe": name, **failure}
            mode = "fibrewise"
        counts[name] = {"left": n_left, "right": n_right, "mode": mode}
    return Verdict.PASS, {"counts": counts}


def _check_free_module(payload: Dict[str, Any]) -> Outcome:
    R = finmod.zmod(payload["ring"])
    p = projection_from_fibre_sizes(payload["fibres"])
    return _comparison_outcome(functor("free_module", ring=R), p)


def _check_tensor(payload: Dict[str, Any]) -> Outcome:
    B = _module_bundle(payload)
    N = FiniteModule.from_json(payload["coefficient"])
    return _comparison_outcome(functor("tensor", coefficient=N), B)


def _check_tor(payload: Dict[str, Any]) -> Outcome:
    B = _module_bundle(payload)
    N = FiniteModule.from_json(payload["coefficient"])
    return _comparison_outcome(functor("tor", i=int(payload["i"]), coefficient=N), B)


def _scalars(payload: Dict[str, Any]) -> Tuple[FiniteRing, GroupHom]:
    G = parse_group_spec(payload["group"])
    _, inclusion = subgroup(G, payload["subgroup"])
    return finmod.zmod(payload["k"]), inclusion


def _check_induction(payload: Dict[str, Any]) -> Outcome:
    k, inclusion = _scalars(payload)
    kH = finmod.group_algebra(k.n, inclusion.domain)
    fibres = tuple(_named_module(kH, name) for name in payload["fibres"])
    B = ModuleBundle(FiniteSpace(len(fibres)), kH, fibres)
    return _comparison_outcome(functor("induce", k=k, inclusion=inclusion), B)


def _check_restriction(payload: Dict[str, Any]) -> Outcome:
    k, inclusion = _scalars(payload)
    kG = finmod.group_algebra(k.n, inclusion.codomain)
    fibres = tuple(_named_module(kG, name) for name in payload["fibres"])
    B = ModuleBundle(FiniteSpace(len(fibres)), kG, fibres)
    return _comparison_outcome(functor("restriction", inclusion=inclusion), B)


def _sample_evenly(items: List[Any], k: int) -> List[Any]:
    if len(items) <= k:
        return items
    step = len(items) / k
    return [items[int(i * step)] for i in range(k)]


def _check_duality_involution(payload: Dict[str, Any]) -> Outcome:
    B = _module_bundle(payload)
    ev = bundle_evaluation(B)
    for x, (M, e) in enumerate(zip(B.fibres, ev.fibre_homs)):
        if not e.is_isomorphism():
            return Verdict.FAIL, {"point": x, "reason": "evaluation is not an isomorphism"}
        endos = list(itertools.islice(finmod.iter_module_homs(M, M), HOM_TUPLE_SAMPLE_SIZE))
        for f in _sample_evenly(endos, NATURALITY_SAMPLES) + [ModuleHom.identity(M)]:
            double = finmod.dual_hom(finmod.dual_hom(f))
            if e.compose(f) != double.compose(e):
                return Verdict.FAIL, {"point": x, "reason": "naturality square fails", "morphism": f.to_json()}
    return Verdict.PASS, {"evaluation": [e.to_json() for e in ev.fibre_homs]}


def _opposite_key(psi: Any) -> Tuple[Any, ...]:
    return (psi.base_map.values, tuple(h.matrix for h in psi.fibre_homs))


def _check_duality_equivalence(payload: Dict[str, Any]) -> Outcome:
    B = _module_bundle(payload)
    Bp = _module_bundle(payload, "target_fibres")
    forward = list(itertools.islice(enumerate_bundle_maps(B, Bp), HOM_TUPLE_ENUMERATION_CAP + 1))
    backward = list(itertools.islice(enumerate_opposite_bundle_maps(dualise_bundle(Bp), dualise_bundle(B)), HOM_TUPLE_ENUMERATION_CAP + 1))
    if len(forward) > HOM_TUPLE_ENUMERATION_CAP or len(backward) > HOM_TUPLE_ENUMERATION_CAP:
        raise SearchBudgetExceeded("duality-equivalence", HOM_TUPLE_ENUMERATION_CAP)
    if len(forward) != len(backward):
        return Verdict.FAIL, {"left": len(forward), "right": len(backward)}
    images = [_opposite_key(dualise_bundle_map(phi)) for phi in forward]
    targets = {_opposite_key(psi): i for i, psi in enumerate(backward)}
    witness = [targets.get(key, -1) for key in images]
    if -1 in witness or len(set(witness)) != len(witness):
        return Verdict.FAIL, {"reason": "dualisation is not a bijection on hom-sets", "left": len(forward)}
    return Verdict.PASS, {"left": len(forward), "right": len(backward), "bijection": witness}


def _colimit_data(payload: Dict[str, Any]):
    """(diagrama, oráculo de contagem opcional) para a forma do payload."""
    shape = payload["shape"]
    if shape == "cone":
        H = parse_group_spec(payload["H"])
        groups = tuple(parse_group_spec(s) for s in payload["vertex_groups"])
        theta = tuple(GroupHom(H, G, tuple(v)) for G, v in zip(groups, payload["theta"]))
        data = AmalgamData(FiniteSpace(len(groups)), H, groups, theta)
        return amalgam_diagram(data), lambda T: {amalgam_to_colimit_tuple(t) for t in amalgam_homs(data, T)}
    if shape == "span":
        K = parse_group_spec(payload["K"])
        G1 = parse_group_spec(payload["G1"])
        i = GroupHom(K, G1, tuple(payload["i"]))
        j = GroupHom.identity(K) if payload["j"] == "identity" else abelianisation(K)[1]
        Q, _, _ = pushout_with_surjective_leg(i, j)
        return span_diagram(i, j), lambda T: len(enumerate_hom_values(Q, T))
    if shape == "monoid":
        G = parse_group_spec(payload["G"])
        P = endomorphism_monoid_diagram(G, [GroupHom(G, G, tuple(v)) for v in payload["generators"]])
        relators = {G.mul(G.inv(g), e(g)) for e in P.arrow_homs for g in range(G.order)}
        Q, _ = quotient_by_normal_closure(G, relators)
        return P, lambda T: len(enumerate_hom_values(Q, T))
    groups = [parse_group_spec(s) for s in payload["groups"]]
    edges = [tuple(e) for e in payload["edges"]]
    category, paths = free_category_on_dag(len(groups), edges)
    homs = [GroupHom(groups[s], groups[t], tuple(v)) for (s, t), v in zip(edges, payload["edge_homs"])]
    bundle = GroupBundle(FiniteSpace(len(groups)), tuple(groups))
    return diagram_on_free_category(category, paths, bundle, homs), None


def _check_colimit(payload: Dict[str, Any]) -> Outcome:
    P, oracle = _colimit_data(payload)
    colimit = colimit_via_coequaliser(P.category, P)
    counts: Dict[str, int] = {}
    for name in payload["probes"]:
        T = parse_group_spec(name)
        via = set(colimit.homs_to(T))
        direct = set(direct_universal_homs(P, T))
        if via != direct:
            return Verdict.FAIL, {"probe": name, "via_coequaliser": len(via), "direct": len(direct)}
        if oracle is not None:
            expected = oracle(T)
            if (isinstance(expected, set) and expected != via) or (isinstance(expected, int) and expected != len(via)):
                size = expected if isinstance(expected, int) else len(expected)
                return Verdict.FAIL, {"probe": name, "via_coequaliser": len(via), "oracle": size}
        counts[name] = len(via)
    return Verdict.PASS, {"shape": payload["shape"], "counts": counts}


def _check_discrete(payload: Dict[str, Any]) -> Outcome:
    B = _group_bundle(payload["fibres"])
    counts: Dict[str, int] = {}
    for name in payload["probes"]:
        T = parse_group_spec(name)
        if not discrete_colimit_agrees(B, T):
            return Verdict.FAIL, {"probe": name, "reason": "discrete colimit differs from the free product"}
        counts[name] = Coproduct(B).count_homs_to(T)
    return Verdict.PASS, {"counts": counts}


def _adjunction_samples(payload: Dict[str, Any]) -> Tuple[RelativeAdjunctionSpec, List[Tuple[Any, Any]]]:
    left, right = payload["pair"].split("-")
    params = payload.get("params", {})
    samples: List[Tuple[Any, Any]] = []
    if left == "free_module":
        ring = finmod.zmod(params["ring"])
        spec = RelativeAdjunctionSpec(left, right, {"ring": ring})
        samples = [(FiniteSpace(s["c"]), FiniteModule.from_json(s["d"])) for s in payload["samples"]]
    elif left == "abelianisation":
        spec = RelativeAdjunctionSpec(left, right)
        for s in payload["samples"]:
            c = s["c"]
            c = tower_from_descriptor(c["tower"]) if isinstance(c, dict) else parse_group_spec(c)
            samples.append((c, parse_group_spec(s["d"])))
    elif left == "induce":
        k, inclusion = _scalars(params)
        spec = RelativeAdjunctionSpec(left, right, {"k": k, "inclusion": inclusion})
        kH = finmod.group_algebra(k.n, inclusion.domain)
        kG = finmod.group_algebra(k.n, inclusion.codomain)
        samples = [(_named_module(kH, s["c"]), _named_module(kG, s["d"])) for s in payload["samples"]]
    else:
        spec = RelativeAdjunctionSpec(left, right)
        samples = [(FiniteSpace(s["c"]), parse_group_spec(s["d"])) for s in payload["samples"]]
    return spec, samples


def _check_adjunction(payload: Dict[str, Any]) -> Outcome:
    spec, samples = _adjunction_samples(payload)
    try:
        report = check_relative_adjunction(spec, samples)
    except UnsupportedSample as exc:
        return Verdict.INCONCLUSIVE, {"reason": "unsupported sample", "detail": str(exc)}
    if report.passed:
        return Verdict.PASS, report.to_json()
    return Verdict.FAIL, {"sample": report.first_failure(), "report": report.to_json()}


def _check_four_square(payload: Dict[str, Any]) -> Outcome:
    R = finmod.zmod(payload["ring"])
    sizes = [s for s, _ in payload["fibres"]]
    p = projection_from_fibre_sizes(sizes)
    M = finmod.direct_sum([finmod.cyclic_module(R, d) for d in payload["module"]], R)[0]
    B = ModuleBundle(p.codomain, R, tuple(finmod.cyclic_module(R, d) for _, d in payload["fibres"]))
    report = check_four_square(R, p, M, B)
    return (Verdict.PASS if report.passed else Verdict.FAIL), report.to_json()


_CHECKERS: Dict[TheoremId, Callable[[Dict[str, Any]], Outcome]] = {
    TheoremId.ABELIANISATION_COPRODUCT: _check_abelianisation,
    TheoremId.FREE_MODULE_COPRODUCT: _check_free_module,
    TheoremId.TENSOR_COPRODUCT: _check_tensor,
    TheoremId.TOR_COPRODUCT: _check_tor,
    TheoremId.INDUCTION_COPRODUCT: _check_induction,
    TheoremId.RESTRICTION_COPRODUCT: _check_restriction,
    TheoremId.DUALITY_INVOLUTION: _check_duality_involution,
    TheoremId.DUALITY_EQUIVALENCE: _check_duality_equivalence,
    TheoremId.COLIMIT_COEQUALISER: _check_colimit,
    TheoremId.DISCRETE_COLIMIT_AGREEMENT: _check_discrete,
    TheoremId.RELATIVE_ADJUNCTION: _check_adjunction,
    TheoremId.FOUR_SQUARE: _check_four_square,
}


def _run_checker(theorem: TheoremId, payload: Dict[str, Any]) -> Outcome:
    try:
        return _CHECKERS[theorem](payload)
    except SearchBudgetExceeded as exc:
        return Verdict.INCONCLUSIVE, {"reason": "search budget exhausted", "what": exc.what, "budget": exc.budget}


def _minimise(theorem: TheoremId, payload: Dict[str, Any], witness: Dict[str, Any]) -> Dict[str, Any]:
    """Remoção gulosa de fibras enquanto o veredicto continuar fail."""
    current = dict(payload)
    shrinking = "fibres" in current
    while shrinking and len(current["fibres"]) > 1:
        shrinking = False
        for i in range(len(current["fibres"])):
            trial = dict(current, fibres=current["fibres"][:i] + current["fibres"][i + 1:])
            verdict, trial_witness = _run_checker(theorem, trial)
            if verdict is Verdict.FAIL:
                current, witness, shrinking = trial, trial_witness, True
                break
    return {"counterexample": witness, "minimised_payload": current}


def check(theorem: Any, instance: CheckInstance) -> Report:
    """
    Verifica um teorema numa instância.

    Args:
        theorem (TheoremId | str): Teorema.
        instance (CheckInstance): Instância gerada para o mesmo teorema.

    Returns:
        Report: Veredicto, testemunha e instância.

    Raises:
        ValueError: Instância de outro teorema (mismatched instance kind).
    """
    theorem = TheoremId(theorem)
    if instance.theorem != theorem:
        raise ValueError(f"instância incompatível (mismatched instance kind): {instance.theorem.value} != {theorem.value}")
    start = time.perf_counter()
    verdict, witness = _run_checker(theorem, instance.payload)
    if verdict is Verdict.FAIL:
        witness = _minimise(theorem, instance.payload, witness)
    elapsed = (time.perf_counter() - start) * 1000.0
    logger.debug("%s seed=%d: %s (%.1f ms)", theorem.value, instance.seed, verdict.value, elapsed)
    return Report(
        theorem,
        instance.seed,
        instance.digest,
        verdict,
        witness,
        round(elapsed, 3) if REPORT_TIMING else None,
        instance,
    )


def permute_instance(instance: CheckInstance, perm: Sequence[int]) -> CheckInstance:
    """
    Reordena os pontos da base (teste metamórfico).

    Raises:
        ValueError: Instância sem fibras ou permutação inválida.
    """
    fibres = instance.payload.get("fibres")
    if fibres is None:
        raise ValueError(f"Instância de {instance.theorem.value} não tem fibras para permutar")
    if sorted(perm) != list(range(len(fibres))):
        raise ValueError("Permutação inválida dos pontos da base")
    payload = dict(instance.payload, fibres=[fibres[i] for i in perm])
    return CheckInstance(instance.theorem, instance.seed, instance.bounds, payload)


# ============================================================================
# REVERIFICAÇÃO DE TESTEMUNHAS
# ============================================================================


def verify_witness(report: Report) -> bool:
    """
    Reverifica a testemunha de um relatório pass por um caminho independente.

    Isomorfismos são recarregados (o que valida homomorfismo e equivariância)
    e testados quanto à bijetividade; contagens são recalculadas por fórmula.

    Returns:
        bool: True se a testemunha confirma o veredicto.
    """
    if report.verdict is not Verdict.PASS:
        return False
    w = report.witness
    payload = report.instance.payload
    t = report.theorem
    if "comparison" in w:
        c = ModuleHom.from_json(w["comparison"])
        return c.is_isomorphism() and list(c.codomain.invariant_factors) == w["invariant_factors"]
    if t is TheoremId.DUALITY_INVOLUTION:
        return all(ModuleHom.from_json(e).is_isomorphism() for e in w["evaluation"])
    if t in (TheoremId.ABELIANISATION_COPRODUCT, TheoremId.DISCRETE_COLIMIT_AGREEMENT):
        fibres = [parse_group_spec(s) for s in payload["fibres"]]
        for name, entry in w["counts"].items():
            T = parse_group_spec(name)
            expected = 1
            for G in fibres:
                source = abelianisation(G)[0] if t is TheoremId.ABELIANISATION_COPRODUCT else G
                expected *= len(enumerate_hom_values(source, T))
            observed = entry if isinstance(entry, int) else entry["right"]
            if observed != expected:
                return False
        return set(w["counts"]) == set(payload["probes"])
    if t is TheoremId.COLIMIT_COEQUALISER:
        P, _ = _colimit_data(payload)
        return all(len(direct_universal_homs(P, parse_group_spec(n))) == c for n, c in w["counts"].items())
    if t is TheoremId.DUALITY_EQUIVALENCE:
        return w["left"] == w["right"] and sorted(w["bijection"]) == list(range(w["right"]))
    if t is TheoremId.RELATIVE_ADJUNCTION:
        return all(
            s["left_count"] == s["right_count"] and sorted(s["witness"]) == list(range(s["right_count"]))
            for s in w["samples"]
        )
    if t is TheoremId.FOUR_SQUARE:
        d = w["details"]
        right_total = len(payload["fibres"]) * prod(payload["module"])
        return (
            d["lifted_left_count"] == d["lifted_right_count"]
            and d["left_order"] == d["free_order"]
            and d["right_total"] == right_total
        )
    return False


# ============================================================================
# SUÍTE
# ============================================================================


@dataclass
class SuiteReport:
    """Relatórios por teorema, em ordem de tentativa."""

    seed: int
    trials: int
    bounds: Bounds
    reports: Dict[str, List[Report]] = field(default_factory=dict)

    @property
    def verdict(self) -> Verdict:
        verdicts = [r.verdict for rs in self.reports.values() for r in rs]
        if Verdict.FAIL in verdicts:
            return Verdict.FAIL
        if Verdict.INCONCLUSIVE in verdicts:
            return Verdict.INCONCLUSIVE
        return Verdict.PASS

    def exit_code(self) -> int:
        return {Verdict.PASS: EXIT_PASS, Verdict.FAIL: EXIT_FAIL, Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE}[self.verdict]

    def to_json(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "bounds": self.bounds.to_json(),
            "verdict": self.verdict.value,
            "theorems": {
                name: {
                    "verdict": _aggregate([r.verdict for r in rs]).value,
                    "reports": [r.to_json() for r in rs],
                }
                for name, rs in self.reports.items()
            },
        }

    def summary(self) -> pd.DataFrame:
        """Tabela com uma linha por teorema (tentativas por veredicto)."""
        rows = []
        for name, rs in self.reports.items():
            verdicts = [r.verdict for r in rs]
            rows.append(
                {
                    "theorem": name,
                    "trials": len(rs),
                    "pass": verdicts.count(Verdict.PASS),
                    "fail": verdicts.count(Verdict.FAIL),
                    "inconclusive": verdicts.count(Verdict.INCONCLUSIVE),
                    "verdict": _aggregate(verdicts).value,
                }
            )
        return pd.DataFrame(rows, columns=["theorem", "trials", "pass", "fail", "inconclusive", "verdict"])


def _aggregate(verdicts: Sequence[Verdict]) -> Verdict:
    if Verdict.FAIL in verdicts:
        return Verdict.FAIL
    if Verdict.INCONCLUSIVE in verdicts:
        return Verdict.INCONCLUSIVE
    return Verdict.PASS


def _run_trial(task: Tuple[str, int, Dict[str, int]]) -> Report:
    theorem, seed, bounds = task
    return check(theorem, gen_instance(theorem, seed, Bounds.from_json(bounds)))


def run_suite(
    theorems: Sequence[Any],
    trials: int,
    seed: int,
    bounds: Optional[Bounds] = None,
    workers: int = WORKERS,
) -> SuiteReport:
    """
    Executa tentativas independentes de cada teorema.

    A tentativa i usa a semente mix(seed, i); com workers > 1 as tentativas
    rodam num pool de processos e são recolhidas na ordem das tentativas.

    Args:
        theorems (Sequence[TheoremId | str]): Teoremas.
        trials (int): Tentativas por teorema (>= 1).
        seed (int): Semente base.
        bounds (Optional[Bounds]): Limites.
        workers (int): Processos paralelos.

    Returns:
        SuiteReport: Relatórios agregados.

    Raises:
        ValueError: trials < 1 ou teorema desconhecido.
    """
    if trials < 1:
        raise ValueError("trials deve ser >= 1")
    ids = [TheoremId(t) for t in theorems]
    bounds = bounds or Bounds()
    tasks = [(t.value, mix(seed, i), bounds.to_json()) for t in ids for i in range(trials)]
    logger.info("Suíte: %d teoremas x %d tentativas (semente %d)", len(ids), trials, seed)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial, tasks))
    else:
        results = [_run_trial(task) for task in tasks]
    suite = SuiteReport(seed & MASK_64, trials, bounds)
    for t in ids:
        suite.reports[t.value] = [r for r in results if r.theorem is t]
    for name, rs in suite.reports.items():
        logger.info("  %s: %s", name, _aggregate([r.verdict for r in rs]).value)
    return suite
