"""
Módulo de Fibrados.

Fibrados de grupos e de módulos finitos sobre espaços finitos, morfismos de
fibrados nas duas variâncias, coprodutos internos e o levantamento fibra a
fibra F ↦ F* de funtores registrados.

Os coprodutos internos de grupos nunca são materializados: são grupos
profinitos (em geral infinitos) observados só pelos seus conjuntos de
homomorfismos em grupos finitos de teste (ProGroupByHoms).
"""

import itertools
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from math import prod
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from scripts import finmod
from scripts.fingroup import (
    FiniteGroup,
    GroupHom,
    abelianisation,
    abelianisation_map,
    enumerate_hom_values,
    group_spec_or_json,
)
from scripts.finmod import FiniteModule, FiniteRing, ModuleHom
from scripts.finspace import FiniteSpace, SpaceMap, fibres, inclusion_of_fibre

logger = logging.getLogger(__name__)

HomTuple = Tuple[Tuple[int, ...], ...]


# ============================================================================
# FIBRADOS
# ============================================================================


class _FibreOps:
    """Operações comuns aos fibrados (base + uma fibra por ponto)."""

    def fibre(self, x: int) -> Any:
        if not 0 <= x < self.base.size:
            raise ValueError(f"Ponto {x} fora da base de tamanho {self.base.size}")
        return self.fibres[x]

    @property
    def total_order(self) -> int:
        return sum(f.order for f in self.fibres)

    def total_space(self) -> List[Tuple[int, int]]:
        """Pares (x, índice do elemento) do espaço total, em ordem lexicográfica."""
        return [(x, g) for x, f in enumerate(self.fibres) for g in range(f.order)]

    def restrict(self, points: Sequence[int]):
        """Subfibrado sobre os pontos dados (na ordem dada)."""
        return replace(self, base=FiniteSpace(len(points)), fibres=tuple(self.fibre(x) for x in points))

    def pullback_along(self, a: SpaceMap):
        """Fibrado a*B sobre o domínio de a: fibra em y é a fibra em a(y)."""
        if a.codomain != self.base:
            raise ValueError("Aplicação não chega na base do fibrado")
        return replace(self, base=a.domain, fibres=tuple(self.fibres[a(y)] for y in a.domain.points()))

    def permute(self, perm: Sequence[int]):
        """Renumera a base: a nova fibra i é a antiga fibra perm[i]."""
        if sorted(perm) != list(range(self.base.size)):
            raise ValueError("Permutação inválida da base")
        return self.restrict(perm)


@dataclass(frozen=True, repr=False)
class GroupBundle(_FibreOps):
    """
    Fibrado de grupos finitos.

    Attributes:
        base (FiniteSpace): Espaço base X.
        fibres (Tuple[FiniteGroup, ...]): Uma fibra por ponto de X.
    """

    base: FiniteSpace
    fibres: Tuple[FiniteGroup, ...]

    kind = "group"

    def __post_init__(self):
        object.__setattr__(self, "fibres", tuple(self.fibres))
        if len(self.fibres) != self.base.size:
            raise ValueError(f"{len(self.fibres)} fibras para base de tamanho {self.base.size}")

    def __repr__(self) -> str:
        return f"GroupBundle({[g.name or g.order for g in self.fibres]})"

    def to_json(self) -> Dict[str, Any]:
        return {"base": self.base.size, "kind": self.kind, "fibres": [group_spec_or_json(g) for g in self.fibres]}


@dataclass(frozen=True, repr=False)
class ModuleBundle(_FibreOps):
    """
    Fibrado de módulos finitos sobre um anel comum.

    Attributes:
        base (FiniteSpace): Espaço base X.
        ring (FiniteRing): Anel comum a todas as fibras.
        fibres (Tuple[FiniteModule, ...]): Uma fibra por ponto de X.
    """

    base: FiniteSpace
    ring: FiniteRing
    fibres: Tuple[FiniteModule, ...]

    kind = "module"

    def __post_init__(self):
        object.__setattr__(self, "fibres", tuple(self.fibres))
        if len(self.fibres) != self.base.size:
            raise ValueError(f"{len(self.fibres)} fibras para base de tamanho {self.base.size}")
        if any(m.ring != self.ring for m in self.fibres):
            raise ValueError("anel incompatível (ring mismatch) entre as fibras")

    def __repr__(self) -> str:
        return f"ModuleBundle({self.ring.name}, {[list(m.invariant_factors) for m in self.fibres]})"

    def to_json(self) -> Dict[str, Any]:
        return {
            "base": self.base.size,
            "kind": self.kind,
            "ring": self.ring.to_json(),
            "fibres": [
                {"invariant_factors": list(m.invariant_factors), "action": [[list(r) for r in a] for a in m.action]}
                for m in self.fibres
            ],
        }


Bundle = Union[GroupBundle, ModuleBundle]


def bundle_from_json(data: Dict[str, Any]) -> Bundle:
    """Lê {"base": n, "kind": "group"|"module", "fibres": [...]} (módulos levam "ring")."""
    base = FiniteSpace(int(data["base"]))
    if data.get("kind", "group") == "group":
        return GroupBundle(base, tuple(FiniteGroup.from_json(g) for g in data["fibres"]))
    ring = FiniteRing.from_json(data["ring"])
    fibres_ = tuple(FiniteModule.from_json(dict(m, ring=data["ring"])) for m in data["fibres"])
    return ModuleBundle(base, ring, fibres_)


def constant_bundle(G: Union[FiniteGroup, FiniteModule], X: FiniteSpace) -> Bundle:
    """
    Fibrado constante Δ(G) sobre X.

    Args:
        G (FiniteGroup | FiniteModule): Fibra comum.
        X (FiniteSpace): Base.

    Returns:
        Bundle: Fibrado com todas as fibras iguais a G.
    """
    if isinstance(G, FiniteModule):
        return ModuleBundle(X, G.ring, (G,) * X.size)
    return GroupBundle(X, (G,) * X.size)


def space_bundle_fibre_sizes(p: SpaceMap) -> List[int]:
    """Tamanhos das fibras de um fibrado de espaços p: Y -> X."""
    return [len(f) for f in fibres(p)]


# ============================================================================
# MORFISMOS DE FIBRADOS
# ============================================================================


def _hom_endpoints(h: Union[GroupHom, ModuleHom]) -> Tuple[Any, Any]:
    return h.domain, h.codomain


@dataclass(frozen=True, repr=False)
class BundleMap:
    """
    Morfismo de fibrados (P, X) -> (Q, Y) sobre a: X -> Y.

    Attributes:
        domain (Bundle): P.
        codomain (Bundle): Q.
        base_map (SpaceMap): a: X -> Y.
        fibre_homs (Tuple): f_x: P(x) -> Q(a(x)).
    """

    domain: Bundle
    codomain: Bundle
    base_map: SpaceMap
    fibre_homs: Tuple[Any, ...]

    def __post_init__(self):
        object.__setattr__(self, "fibre_homs", tuple(self.fibre_homs))
        if self.base_map.domain != self.domain.base or self.base_map.codomain != self.codomain.base:
            raise ValueError("Aplicação de base incompatível com os fibrados")
        if len(self.fibre_homs) != self.domain.base.size:
            raise ValueError("Um homomorfismo por ponto da base é obrigatório")
        for x, h in enumerate(self.fibre_homs):
            if _hom_endpoints(h) != (self.domain.fibre(x), self.codomain.fibre(self.base_map(x))):
                raise ValueError(f"Homomorfismo da fibra {x} com extremos errados")

    def __repr__(self) -> str:
        return f"BundleMap({self.domain!r} -> {self.codomain!r} over {list(self.base_map.values)})"

    def compose(self, other: "BundleMap") -> "BundleMap":
        """Composição self ∘ other."""
        if other.codomain != self.domain:
            raise ValueError("Composição de morfismos de fibrados incompatíveis")
        homs = [self.fibre_homs[other.base_map(x)].compose(h) for x, h in enumerate(other.fibre_homs)]
        return BundleMap(other.domain, self.codomain, self.base_map.compose(other.base_map), tuple(homs))

    def apply(self, point: Tuple[int, Any]) -> Tuple[int, Any]:
        """Imagem de um ponto (x, elemento) do espaço total."""
        x, g = point
        h = self.fibre_homs[x]
        return self.base_map(x), (h.apply(g) if isinstance(h, ModuleHom) else h(g))

    @staticmethod
    def identity(B: Bundle) -> "BundleMap":
        homs = [
            ModuleHom.identity(f) if isinstance(f, FiniteModule) else GroupHom.identity(f) for f in B.fibres
        ]
        return BundleMap(B, B, SpaceMap.identity(B.base), tuple(homs))

    def to_json(self) -> Dict[str, Any]:
        return {
            "base_map": self.base_map.to_json(),
            "fibre_homs": [
                [list(r) for r in h.matrix] if isinstance(h, ModuleHom) else list(h.values) for h in self.fibre_homs
            ],
        }


@dataclass(frozen=True, repr=False)
class OppositeBundleMap:
    """
    Morfismo de fibrados opostos (P, X) -> (Q, Y).

    A aplicação de base vai de Y para X e cada homomorfismo vai de
    P(b(y)) para Q(y), como no produto fibrado P ×_X Y -> Q.

    Attributes:
        domain (ModuleBundle): P sobre X.
        codomain (ModuleBundle): Q sobre Y.
        base_map (SpaceMap): b: Y -> X.
        fibre_homs (Tuple[ModuleHom, ...]): g_y: P(b(y)) -> Q(y).
    """

    domain: ModuleBundle
    codomain: ModuleBundle
    base_map: SpaceMap
    fibre_homs: Tuple[ModuleHom, ...]

    def __post_init__(self):
        object.__setattr__(self, "fibre_homs", tuple(self.fibre_homs))
        if self.base_map.domain != self.codomain.base or self.base_map.codomain != self.domain.base:
            raise ValueError("Aplicação de base incompatível com os fibrados opostos")
        if len(self.fibre_homs) != self.codomain.base.size:
            raise ValueError("Um homomorfismo por ponto da base de chegada é obrigatório")
        for y, h in enumerate(self.fibre_homs):
            if _hom_endpoints(h) != (self.domain.fibre(self.base_map(y)), self.codomain.fibre(y)):
                raise ValueError(f"Homomorfismo oposto da fibra {y} com extremos errados")

    def __repr__(self) -> str:
        return f"OppositeBundleMap({self.domain!r} -> {self.codomain!r} over {list(self.base_map.values)})"

    def compose(self, other: "OppositeBundleMap") -> "OppositeBundleMap":
        """Composição self ∘ other: bases compostas na ordem inversa."""
        if other.codomain != self.domain:
            raise ValueError("Composição de morfismos opostos incompatíveis")
        homs = [h.compose(other.fibre_homs[self.base_map(z)]) for z, h in enumerate(self.fibre_homs)]
        return OppositeBundleMap(other.domain, self.codomain, other.base_map.compose(self.base_map), tuple(homs))

    @staticmethod
    def identity(B: ModuleBundle) -> "OppositeBundleMap":
        return OppositeBundleMap(B, B, SpaceMap.identity(B.base), tuple(ModuleHom.identity(f) for f in B.fibres))


def all_space_maps(X: FiniteSpace, Y: FiniteSpace) -> Iterator[SpaceMap]:
    """Todas as aplicações X -> Y em ordem lexicográfica."""
    for values in itertools.product(range(Y.size), repeat=X.size):
        yield SpaceMap(X, Y, values)


def _fibre_homs(source: Any, target: Any) -> List[Any]:
    if isinstance(source, FiniteModule):
        return finmod.enumerate_module_homs(source, target)
    return [GroupHom(source, target, v) for v in enumerate_hom_values(source, target)]


def enumerate_bundle_maps(P: Bundle, Q: Bundle, base_map: Optional[SpaceMap] = None) -> Iterator[BundleMap]:
    """
    Todos os morfismos de fibrados P -> Q (sobre base_map, ou sobre todas as aplicações de base).
    """
    maps = [base_map] if base_map is not None else all_space_maps(P.base, Q.base)
    for a in maps:
        choices = [_fibre_homs(P.fibre(x), Q.fibre(a(x))) for x in P.base.points()]
        for homs in itertools.product(*choices):
            yield BundleMap(P, Q, a, homs)


def enumerate_opposite_bundle_maps(
    P: ModuleBundle, Q: ModuleBundle, base_map: Optional[SpaceMap] = None
) -> Iterator[OppositeBundleMap]:
    """Todos os morfismos opostos P -> Q (base Y -> X)."""
    maps = [base_map] if base_map is not None else all_space_maps(Q.base, P.base)
    for b in maps:
        choices = [finmod.enumerate_module_homs(P.fibre(b(y)), Q.fibre(y)) for y in Q.base.points()]
        for homs in itertools.product(*choices):
            yield OppositeBundleMap(P, Q, b, homs)


def _require_identity_base(phi: BundleMap) -> None:
    if phi.domain.base != phi.codomain.base or phi.base_map != SpaceMap.identity(phi.domain.base):
        raise ValueError("Operação fibra a fibra exige aplicação de base identidade")


def fibrewise_kernel(phi: BundleMap) -> Tuple[ModuleBundle, BundleMap]:
    """Núcleo fibra a fibra de um morfismo sobre a identidade, com a inclusão."""
    _require_identity_base(phi)
    subs = [finmod.kernel(h) for h in phi.fibre_homs]
    K = ModuleBundle(phi.domain.base, phi.domain.ring, tuple(s.module for s in subs))
    return K, BundleMap(K, phi.domain, phi.base_map, tuple(s.inclusion for s in subs))


def fibrewise_cokernel(phi: BundleMap) -> Tuple[ModuleBundle, BundleMap]:
    """Conúcleo fibra a fibra de um morfismo sobre a identidade, com a projeção."""
    _require_identity_base(phi)
    quots = [finmod.cokernel(h) for h in phi.fibre_homs]
    C = ModuleBundle(phi.codomain.base, phi.codomain.ring, tuple(q.module for q in quots))
    return C, BundleMap(phi.codomain, C, phi.base_map, tuple(q.projection for q in quots))


# ============================================================================
# GRUPOS PROFINITOS OBSERVADOS POR HOMOMORFISMOS
# ============================================================================


class ProGroupByHoms(ABC):
    """
    Grupo profinito dado pelos dados de definição e um avaliador de Hom.

    ``homs_to(T)`` devolve tuplas de componentes: uma tabela de valores por
    componente (um homomorfismo por grupo de ``components``).
    """

    @property
    @abstractmethod
    def components(self) -> Tuple[FiniteGroup, ...]:
        """Grupos finitos cujos homomorfismos formam cada tupla."""

    @abstractmethod
    def homs_to(self, T: FiniteGroup) -> Tuple[HomTuple, ...]:
        """Todas as tuplas de componentes em T, em ordem determinística."""

    def count_homs_to(self, T: FiniteGroup) -> int:
        return len(self.homs_to(T))

    def as_homs(self, alpha: HomTuple, T: FiniteGroup) -> List[GroupHom]:
        return [GroupHom(G, T, v) for G, v in zip(self.components, alpha)]

    @staticmethod
    def postcompose(alpha: HomTuple, t: GroupHom) -> HomTuple:
        """t ∘ α componente a componente."""
        return tuple(tuple(t(v) for v in values) for values in alpha)

    def check_functoriality(self, t: GroupHom) -> bool:
        """Pós-compor com t: T -> T' leva homs_to(T) em homs_to(T')."""
        target = set(self.homs_to(t.codomain))
        return all(self.postcompose(alpha, t) in target for alpha in self.homs_to(t.domain))

    @abstractmethod
    def describe(self) -> Dict[str, Any]:
        """Dados de definição em JSON."""


class FiniteProGroup(ProGroupByHoms):
    """Um grupo finito visto como pró-grupo constante."""

    def __init__(self, group: FiniteGroup):
        self.group = group

    @property
    def components(self) -> Tuple[FiniteGroup, ...]:
        return (self.group,)

    def homs_to(self, T: FiniteGroup) -> Tuple[HomTuple, ...]:
        return tuple((v,) for v in enumerate_hom_values(self.group, T))

    def describe(self) -> Dict[str, Any]:
        return {"kind": "finite", "group": group_spec_or_json(self.group)}


class Coproduct(ProGroupByHoms):
    """
    Produto livre profinito ∐_x P(x) de um fibrado de grupos.

    Um homomorfismo em T é uma família (α_x: P(x) -> T) sem restrições; as
    componentes são as injeções canônicas κ_x compostas com o homomorfismo.
    """

    def __init__(self, bundle: GroupBundle):
        self.bundle = bundle

    @property
    def components(self) -> Tuple[FiniteGroup, ...]:
        return self.bundle.fibres

    def homs_to(self, T: FiniteGroup) -> Tuple[HomTuple, ...]:
        choices = [enumerate_hom_values(G, T) for G in self.bundle.fibres]
        return tuple(itertools.product(*choices))

    def count_homs_to(self, T: FiniteGroup) -> int:
        return prod(len(enumerate_hom_values(G, T)) for G in self.bundle.fibres)

    def describe(self) -> Dict[str, Any]:
        return {"kind": "coproduct", "bundle": self.bundle.to_json()}


class FreeProGroup(ProGroupByHoms):
    """
    Grupo profinito livre sobre um espaço finito X.

    Cada componente é um gerador livre; a tupla guarda a imagem de cada
    gerador (um elemento de T), de modo que |Hom(F(X), T)| = |T|^|X|.
    """

    def __init__(self, X: FiniteSpace):
        self.space = X

    @property
    def components(self) -> Tuple[FiniteGroup, ...]:
        return ()

    def homs_to(self, T: FiniteGroup) -> Tuple[HomTuple, ...]:
        return tuple(tuple((t,) for t in images) for images in itertools.product(range(T.order), repeat=self.space.size))

    def count_homs_to(self, T: FiniteGroup) -> int:
        return T.order ** self.space.size

    def as_homs(self, alpha: HomTuple, T: FiniteGroup) -> List[GroupHom]:
        raise TypeError("Geradores livres não são grupos finitos")

    def describe(self) -> Dict[str, Any]:
        return {"kind": "free", "base": self.space.size}


def internal_coproduct_groups(B: GroupBundle) -> Coproduct:
    """Coproduto interno de um fibrado de grupos, observado por Hom."""
    return Coproduct(B)


def internal_coproduct_modules(B: ModuleBundle) -> Tuple[FiniteModule, List[ModuleHom]]:
    """
    Soma direta profinita (finita) ⊕_x M_x com as injeções, na ordem da base.

    Args:
        B (ModuleBundle): Fibrado de módulos.

    Returns:
        Tuple[FiniteModule, List[ModuleHom]]: (soma, injeções).
    """
    S, injections, _ = finmod.direct_sum(list(B.fibres), B.ring)
    return S, injections


def coproduct_projections(B: ModuleBundle) -> List[ModuleHom]:
    """Projeções do biproduto ⊕_x M_x."""
    return finmod.direct_sum(list(B.fibres), B.ring)[2]


def factor_through_coproduct(phi: BundleMap, target: Optional[FiniteModule] = None) -> ModuleHom:
    """
    Homomorfismo ⊕_x M_x -> M correspondente a um morfismo B -> Δ(M) sobre a identidade.

    Sobre a base vazia a soma é o módulo nulo e o resultado é o mapa nulo
    para `target` (ou para o módulo nulo, se `target` não for dado).

    Args:
        phi (BundleMap): Morfismo B -> Δ(M) sobre a identidade.
        target (Optional[FiniteModule]): M, necessário só para a base vazia.

    Raises:
        ValueError: Morfismo fora da identidade ou `target` diferente das fibras de Δ(M).
    """
    B = phi.domain
    if phi.base_map != SpaceMap.identity(B.base):
        raise ValueError("Morfismo para o fibrado constante deve estar sobre a identidade")
    S, _ = internal_coproduct_modules(B)
    if not phi.codomain.fibres:
        return ModuleHom.zero(S, target if target is not None else finmod.zero_module(B.ring))
    if target is not None and target != phi.codomain.fibres[0]:
        raise ValueError("target difere da fibra do fibrado constante")
    total = ModuleHom.zero(S, phi.codomain.fibres[0])
    for h, pi in zip(phi.fibre_homs, coproduct_projections(B)):
        total = total.add(h.compose(pi))
    return total


def bundle_map_from_coproduct_hom(B: ModuleBundle, h: ModuleHom) -> BundleMap:
    """Inverso de factor_through_coproduct: f_x = h ∘ ι_x."""
    _, injections = internal_coproduct_modules(B)
    homs = tuple(h.compose(i) for i in injections)
    return BundleMap(B, constant_bundle(h.codomain, B.base), SpaceMap.identity(B.base), homs)


# ============================================================================
# FUNTORES FIBRA A FIBRA
# ============================================================================


@dataclass(frozen=True)
class FunctorInfo:
    """Metadados declarados de um funtor registrado."""

    id: str
    input_kind: str
    output_kind: str
    variance: str
    additive: bool
    adjoint_partner: Optional[str]
    description: str


FUNCTOR_REGISTRY: Dict[str, FunctorInfo] = {
    info.id: info
    for info in (
        FunctorInfo("identity", "any", "any", "covariant", True, "identity", "Funtor identidade"),
        FunctorInfo("abelianisation", "group", "group", "covariant", True, "inclusion", "G ↦ G^ab"),
        FunctorInfo("free_module", "space", "module", "covariant", True, "forget", "X ↦ R⟦X⟧"),
        FunctorInfo("tensor", "module", "module", "covariant", True, "hom", "M ↦ M ⊗_R N"),
        FunctorInfo("tor", "module", "module", "covariant", True, None, "M ↦ Tor_i(M, N)"),
        FunctorInfo("induce", "module", "module", "covariant", True, "restriction", "M ↦ kG ⊗_{kH} M"),
        FunctorInfo("restriction", "module", "module", "covariant", True, "induce", "M ↦ Res^G_H M"),
        FunctorInfo("pontryagin_dual", "module", "module", "contravariant", True, "pontryagin_dual", "M ↦ Hom(M, Q/Z)"),
    )
}


@dataclass(frozen=True)
class FunctorSpec:
    """
    Funtor registrado com seus parâmetros.

    Attributes:
        id (str): Identificador no FUNCTOR_REGISTRY.
        params (Dict[str, Any]): ring (free_module), coefficient (tensor, tor),
            i e strategy (tor), k e inclusion (induce), inclusion (restriction).
    """

    id: str
    params: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.id not in FUNCTOR_REGISTRY:
            raise ValueError(f"Funtor desconhecido: {self.id!r}")

    @property
    def info(self) -> FunctorInfo:
        return FUNCTOR_REGISTRY[self.id]

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"id": self.id}
        for key, value in sorted(self.params.items()):
            data[key] = value.to_json() if hasattr(value, "to_json") else value
        return data

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "FunctorSpec":
        params: Dict[str, Any] = {}
        for key, value in data.items():
            if key == "id":
                continue
            if key == "coefficient":
                value = FiniteModule.from_json(value)
            elif key in ("ring", "k"):
                value = FiniteRing.from_json(value)
            elif key == "inclusion":
                value = GroupHom.from_json(value)
            params[key] = value
        return FunctorSpec(data["id"], params)


def functor(id: str, **params: Any) -> FunctorSpec:
    return FunctorSpec(id, dict(params))


def apply_object(F: FunctorSpec, obj: Any) -> Any:
    """Aplica F a um objeto finito."""
    p = F.params
    if F.id == "identity":
        return obj
    if F.id == "abelianisation":
        return abelianisation(obj)[0]
    if F.id == "free_module":
        return finmod.free_module(p["ring"], obj)
    if F.id == "tensor":
        return finmod.tensor(obj, p["coefficient"])
    if F.id == "tor":
        return finmod.tor(p.get("i", 1), obj, p["coefficient"], p.get("strategy", "minimal"))
    if F.id == "induce":
        return finmod.induce(p["k"], p["inclusion"], obj)
    if F.id == "restriction":
        return finmod.restriction(p["inclusion"], obj)
    return finmod.pontryagin_dual(obj)


def apply_morphism(F: FunctorSpec, f: Any) -> Any:
    """Aplica F a um morfismo (o dual inverte o sentido)."""
    p = F.params
    if F.id == "identity":
        return f
    if F.id == "abelianisation":
        return abelianisation_map(f)
    if F.id == "free_module":
        return finmod.free_module_map(p["ring"], f)
    if F.id == "tensor":
        return finmod.tensor_hom(f, ModuleHom.identity(p["coefficient"]))
    if F.id == "tor":
        return finmod.tor_map(p.get("i", 1), f, p["coefficient"], p.get("strategy", "minimal"))
    if F.id == "induce":
        return finmod.induce_hom(p["k"], p["inclusion"], f)
    if F.id == "restriction":
        return finmod.restriction_hom(p["inclusion"], f)
    return finmod.dual_hom(f)


def _bundle_kind(B: Any) -> str:
    if isinstance(B, SpaceMap):
        return "space"
    return B.kind


def output_ring(F: FunctorSpec, ring: Optional[FiniteRing]) -> Optional[FiniteRing]:
    """Anel das fibras de saída de F (None para fibrados de grupos)."""
    p = F.params
    if F.id == "free_module":
        return p["ring"]
    if F.id in ("tensor", "tor"):
        return finmod.zmod(ring.n)
    if F.id == "induce":
        k = p["k"] if isinstance(p["k"], FiniteRing) else finmod.zmod(int(p["k"]))
        return finmod.group_algebra(k.n, p["inclusion"].codomain)
    if F.id == "restriction":
        return finmod.group_algebra(ring.n, p["inclusion"].domain)
    return ring


def lift_functor(F: FunctorSpec, B: Union[Bundle, SpaceMap]) -> Bundle:
    """
    Levantamento F*: aplica F fibra a fibra, preservando a base.

    Um fibrado de espaços é dado pela projeção p: Y -> X; free_module o
    leva ao fibrado de módulos R⟦p^{-1}(x)⟧.

    Raises:
        ValueError: Funtor desconhecido ou tipo de fibrado incompatível.
    """
    info = F.info
    kind = _bundle_kind(B)
    if info.input_kind not in ("any", kind):
        raise ValueError(f"Funtor {F.id} espera fibrado de {info.input_kind}, recebido {kind}")
    if kind == "space":
        base = B.codomain
        objects = [FiniteSpace(n) for n in space_bundle_fibre_sizes(B)]
        ring = None
    else:
        base = B.base
        objects = list(B.fibres)
        ring = getattr(B, "ring", None)
    out = [apply_object(F, obj) for obj in objects]
    out_kind = kind if info.output_kind == "any" else info.output_kind
    if out_kind == "group":
        return GroupBundle(base, tuple(out))
    if out_kind == "space":
        return B
    return ModuleBundle(base, output_ring(F, ring), tuple(out))


def lift_bundle_map(F: FunctorSpec, phi: BundleMap) -> Union[BundleMap, OppositeBundleMap]:
    """
    F* em morfismos: fibra a fibra, base preservada (covariante) ou invertida (dual).
    """
    homs = tuple(apply_morphism(F, h) for h in phi.fibre_homs)
    P = lift_functor(F, phi.domain)
    Q = lift_functor(F, phi.codomain)
    if F.info.variance == "contravariant":
        return OppositeBundleMap(Q, P, phi.base_map, homs)
    return BundleMap(P, Q, phi.base_map, homs)


DUAL = FunctorSpec("pontryagin_dual")


def dualise_bundle(B: ModuleBundle) -> ModuleBundle:
    """Fibrado oposto (P^∨, X)."""
    return lift_functor(DUAL, B)


def dualise_bundle_map(phi: Union[BundleMap, OppositeBundleMap]) -> Union[BundleMap, OppositeBundleMap]:
    """
    Dual de um morfismo: BundleMap (a, f) ↦ OppositeBundleMap (a, f^∨) e vice-versa.
    """
    if isinstance(phi, BundleMap):
        return lift_bundle_map(DUAL, phi)
    homs = tuple(finmod.dual_hom(h) for h in phi.fibre_homs)
    return BundleMap(dualise_bundle(phi.codomain), dualise_bundle(phi.domain), phi.base_map, homs)


def bundle_evaluation(B: ModuleBundle) -> BundleMap:
    """Avaliação fibra a fibra B -> B^∨∨ sobre a identidade."""
    DD = dualise_bundle(dualise_bundle(B))
    homs = tuple(finmod.evaluation_map(m) for m in B.fibres)
    return BundleMap(B, DD, SpaceMap.identity(B.base), homs)


def comparison_map(F: FunctorSpec, B: Union[ModuleBundle, SpaceMap]) -> ModuleHom:
    """
    Comparação canônica entre F aplicado ao coproduto e o coproduto dos F(M_x).

    Covariante: ⊕_x F(M_x) -> F(⊕_x M_x), soma de F(ι_x) ∘ π'_x.
    Contravariante (leitura como produto): F(⊕_x M_x) -> ⊕_x F(M_x), soma de ι'_x ∘ F(ι_x).
    Para um fibrado de espaços p: Y -> X, F(ι_x) é R⟦inclusão da fibra⟧.
    """
    if not F.info.additive:
        raise ValueError(f"Funtor {F.id} não é declarado aditivo")
    lifted = lift_functor(F, B)
    S_lift, inj_lift, proj_lift = finmod.direct_sum(list(lifted.fibres), lifted.ring)
    if isinstance(B, SpaceMap):
        whole = apply_object(F, B.domain)
        legs = [apply_morphism(F, inclusion_of_fibre(B, x)) for x in B.codomain.points()]
    else:
        S, injections = internal_coproduct_modules(B)
        whole = apply_object(F, S)
        legs = [apply_morphism(F, i) for i in injections]
    if F.info.variance == "contravariant":
        total = ModuleHom.zero(whole, S_lift)
        for leg, i in zip(legs, inj_lift):
            total = total.add(i.compose(leg))
        return total
    total = ModuleHom.zero(S_lift, whole)
    for leg, p in zip(legs, proj_lift):
        total = total.add(leg.compose(p))
    return total
