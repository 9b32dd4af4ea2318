"""
Módulo de Categorias Internas Finitas.

Categorias internas a espaços finitos (A0, A1, d0, d1, i, c), diagramas de
grupos sobre elas e o colimite construído por coprodutos e coequalizadores,
sempre no nível dos conjuntos de homomorfismos em grupos de teste finitos.

Convenção: uma seta f vai de d0(f) para d1(f) e as composições são listadas
como triplas (f, g, g∘f) para os pares com d1(f) = d0(g).
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Sequence, Tuple

from scripts.bundle import Coproduct, GroupBundle, HomTuple, ProGroupByHoms
from scripts.fingroup import (
    FiniteGroup,
    GroupHom,
    coequaliser,
    enumerate_hom_values,
    group_spec_or_json,
    subgroup,
)
from scripts.finspace import FiniteSpace, SpaceMap, projection_from_fibre_sizes, pullback

logger = logging.getLogger(__name__)


# ============================================================================
# CATEGORIAS INTERNAS
# ============================================================================


@dataclass(frozen=True, repr=False)
class FiniteInternalCategory:
    """
    Categoria interna a espaços finitos.

    Attributes:
        A0 (FiniteSpace): Objetos.
        A1 (FiniteSpace): Setas.
        d0 (SpaceMap): Origem, A1 -> A0.
        d1 (SpaceMap): Destino, A1 -> A0.
        ident (SpaceMap): Identidades, A0 -> A1.
        comp (Tuple[Tuple[int, int, int], ...]): Triplas (f, g, g∘f).
    """

    A0: FiniteSpace
    A1: FiniteSpace
    d0: SpaceMap
    d1: SpaceMap
    ident: SpaceMap
    comp: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "comp", tuple(sorted(tuple(int(v) for v in t) for t in self.comp)))
        for m, dom, cod, label in (
            (self.d0, self.A1, self.A0, "d0"),
            (self.d1, self.A1, self.A0, "d1"),
            (self.ident, self.A0, self.A1, "ident"),
        ):
            if m.domain != dom or m.codomain != cod:
                raise ValueError(f"Aplicação {label} com domínio/contradomínio errados")
        identity = SpaceMap.identity(self.A0)
        if self.d0.compose(self.ident) != identity or self.d1.compose(self.ident) != identity:
            raise ValueError("d0∘i e d1∘i devem ser a identidade de A0")
        pairs = set(self.composable_pairs())
        table = self.composition
        if set(table) != pairs or len(table) != len(self.comp):
            raise ValueError("Tabela de composição não cobre exatamente os pares componíveis")
        for (f, g), h in table.items():
            if self.d0(h) != self.d0(f) or self.d1(h) != self.d1(g):
                raise ValueError(f"Composta {h} de ({f}, {g}) com extremos errados")
        for f in self.A1.points():
            if table[(self.ident(self.d0(f)), f)] != f or table[(f, self.ident(self.d1(f)))] != f:
                raise ValueError(f"Identidades não são neutras para a seta {f}")
        for (f, g), gf in table.items():
            for h in self.arrows_from(self.d1(g)):
                if table[(gf, h)] != table[(f, table[(g, h)])]:
                    raise ValueError(f"Composição não associativa em ({f}, {g}, {h})")

    def __repr__(self) -> str:
        return f"FiniteInternalCategory(|A0|={self.A0.size}, |A1|={self.A1.size})"

    @cached_property
    def composition(self) -> Dict[Tuple[int, int], int]:
        return {(f, g): h for f, g, h in self.comp}

    def composable_pairs(self) -> List[Tuple[int, int]]:
        """Pares (f, g) com d1(f) = d0(g), via produto fibrado A1 ×_{A0} A1."""
        space, pr1, pr2 = pullback(self.d1, self.d0)
        return [(pr1(r), pr2(r)) for r in space.points()]

    def compose(self, f: int, g: int) -> int:
        """g ∘ f."""
        try:
            return self.composition[(f, g)]
        except KeyError:
            raise ValueError(f"Setas {f} e {g} não são componíveis") from None

    def arrows_from(self, a: int) -> List[int]:
        return [f for f in self.A1.points() if self.d0(f) == a]

    def is_identity(self, f: int) -> bool:
        return self.ident(self.d0(f)) == f

    def to_json(self) -> Dict[str, Any]:
        return {
            "A0": self.A0.size,
            "A1": self.A1.size,
            "d0": list(self.d0.values),
            "d1": list(self.d1.values),
            "ident": list(self.ident.values),
            "comp": [list(t) for t in self.comp],
        }

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "FiniteInternalCategory":
        A0, A1 = FiniteSpace(int(data["A0"])), FiniteSpace(int(data["A1"]))
        return FiniteInternalCategory(
            A0,
            A1,
            SpaceMap(A1, A0, tuple(data["d0"])),
            SpaceMap(A1, A0, tuple(data["d1"])),
            SpaceMap(A0, A1, tuple(data["ident"])),
            tuple(tuple(t) for t in data["comp"]),
        )


def discrete_category(X: FiniteSpace) -> FiniteInternalCategory:
    """Categoria interna discreta: A0 = A1 = X e todas as estruturas identidade."""
    identity = SpaceMap.identity(X)
    return FiniteInternalCategory(X, X, identity, identity, identity, tuple((x, x, x) for x in X.points()))


def cone_graph_category(X: FiniteSpace) -> FiniteInternalCategory:
    """
    Grafo-cone de X com identidades acrescentadas.

    Objetos: x = 0..n-1 e * = n. Setas: as arestas x̄ = 0..n-1 (de * para x),
    a identidade de x em n + x e a identidade de * em 2n.
    """
    n = X.size
    A0, A1 = FiniteSpace(n + 1), FiniteSpace(2 * n + 1)
    star, star_id = n, 2 * n
    d0 = [star] * n + list(range(n)) + [star]
    d1 = list(range(n)) + list(range(n)) + [star]
    ident = [n + x for x in range(n)] + [star_id]
    comp = [(star_id, star_id, star_id)]
    for x in range(n):
        comp += [(star_id, x, x), (x, n + x, x), (n + x, n + x, n + x)]
    return FiniteInternalCategory(A0, A1, SpaceMap(A1, A0, d0), SpaceMap(A1, A0, d1), SpaceMap(A0, A1, ident), tuple(comp))


Path = Tuple[int, Tuple[int, ...]]


def free_category_on_dag(
    num_objects: int, edges: Sequence[Tuple[int, int]]
) -> Tuple[FiniteInternalCategory, List[Path]]:
    """
    Categoria livre (caminhos finitos) de um grafo acíclico.

    As setas são as identidades (índices 0..n-1) seguidas dos caminhos de
    comprimento >= 1, em ordem (origem, sequência de arestas).

    Args:
        num_objects (int): Número de vértices.
        edges (Sequence[Tuple[int, int]]): Arestas (origem, destino).

    Returns:
        Tuple[FiniteInternalCategory, List[Path]]: (categoria, caminhos por seta).

    Raises:
        ValueError: Se o grafo tiver ciclos.
    """
    edges = [(int(s), int(t)) for s, t in edges]
    out_edges: Dict[int, List[int]] = {a: [] for a in range(num_objects)}
    for e, (s, _) in enumerate(edges):
        out_edges[s].append(e)

    def extend(path: Tuple[int, ...], at: int, seen: Tuple[int, ...]) -> List[Tuple[int, ...]]:
        found = []
        for e in out_edges[at]:
            t = edges[e][1]
            if t in seen:
                raise ValueError("Grafo com ciclo: a categoria livre seria infinita")
            found.append(path + (e,))
            found += extend(path + (e,), t, seen + (t,))
        return found

    paths: List[Path] = [(a, ()) for a in range(num_objects)]
    for a in range(num_objects):
        paths += sorted((a, p) for p in extend((), a, (a,)))
    index = {p: i for i, p in enumerate(paths)}

    def target(p: Path) -> int:
        return edges[p[1][-1]][1] if p[1] else p[0]

    A0, A1 = FiniteSpace(num_objects), FiniteSpace(len(paths))
    comp = []
    for f, pf in enumerate(paths):
        for g, pg in enumerate(paths):
            if target(pf) == pg[0]:
                comp.append((f, g, index[(pf[0], pf[1] + pg[1])]))
    category = FiniteInternalCategory(
        A0,
        A1,
        SpaceMap(A1, A0, tuple(p[0] for p in paths)),
        SpaceMap(A1, A0, tuple(target(p) for p in paths)),
        SpaceMap(A0, A1, tuple(range(num_objects))),
        tuple(comp),
    )
    return category, paths


def span_category() -> FiniteInternalCategory:
    """Forma de pushout 1 <- 0 -> 2 (setas 3: 0 -> 1 e 4: 0 -> 2)."""
    return free_category_on_dag(3, [(0, 1), (0, 2)])[0]


# ============================================================================
# DIAGRAMAS DE GRUPOS
# ============================================================================


@dataclass(frozen=True, repr=False)
class InternalGroupDiagram:
    """
    Funtor interno A -> Grp: fibrado P0 -> A0 com a ação das setas.

    Attributes:
        category (FiniteInternalCategory): A.
        bundle (GroupBundle): Fibrado sobre A0.
        arrow_homs (Tuple[GroupHom, ...]): P(f): P(d0 f) -> P(d1 f).
    """

    category: FiniteInternalCategory
    bundle: GroupBundle
    arrow_homs: Tuple[GroupHom, ...]

    def __post_init__(self):
        object.__setattr__(self, "arrow_homs", tuple(self.arrow_homs))
        A = self.category
        if self.bundle.base != A.A0:
            raise ValueError("Fibrado do diagrama não está sobre A0")
        if len(self.arrow_homs) != A.A1.size:
            raise ValueError("Um homomorfismo por seta é obrigatório")
        for f, h in enumerate(self.arrow_homs):
            if h.domain != self.bundle.fibre(A.d0(f)) or h.codomain != self.bundle.fibre(A.d1(f)):
                raise ValueError(f"Homomorfismo da seta {f} com extremos errados")
        for a in A.A0.points():
            if self.arrow_homs[A.ident(a)] != GroupHom.identity(self.bundle.fibre(a)):
                raise ValueError(f"P(identidade de {a}) não é a identidade")
        for f, g, gf in A.comp:
            if self.arrow_homs[gf] != self.arrow_homs[g].compose(self.arrow_homs[f]):
                raise ValueError(f"P não é funtorial em ({f}, {g})")

    def __repr__(self) -> str:
        return f"InternalGroupDiagram({self.category!r}, {self.bundle!r})"

    def act(self, f: int, g: int) -> int:
        """Ação da seta f sobre um elemento g da fibra sobre d0(f)."""
        return self.arrow_homs[f](g)

    @cached_property
    def total_projection(self) -> SpaceMap:
        """p0: P0 -> A0 (pares (a, g) em ordem lexicográfica)."""
        return projection_from_fibre_sizes([G.order for G in self.bundle.fibres])

    @cached_property
    def _offsets(self) -> Tuple[int, ...]:
        offsets, total = [], 0
        for G in self.bundle.fibres:
            offsets.append(total)
            total += G.order
        return tuple(offsets)

    def point_index(self, a: int, g: int) -> int:
        return self._offsets[a] + g

    @cached_property
    def arrow_space(self) -> Tuple[FiniteSpace, SpaceMap, SpaceMap]:
        """A1 ×_{A0} P0 (pares (f, ponto sobre d0 f)) com as projeções."""
        return pullback(self.category.d0, self.total_projection)

    @cached_property
    def structure_map(self) -> SpaceMap:
        """p1: A1 ×_{A0} P0 -> P0, (f, (d0 f, g)) ↦ (d1 f, P(f)(g))."""
        space, pr_arrow, pr_point = self.arrow_space
        p0 = self.total_projection
        values = []
        for r in space.points():
            f, point = pr_arrow(r), pr_point(r)
            g = point - self._offsets[p0(point)]
            values.append(self.point_index(self.category.d1(f), self.act(f, g)))
        return SpaceMap(space, p0.domain, tuple(values))

    def to_json(self) -> Dict[str, Any]:
        return {
            "category": self.category.to_json(),
            "fibres": [group_spec_or_json(G) for G in self.bundle.fibres],
            "arrow_homs": [list(h.values) for h in self.arrow_homs],
        }


def diagram_on_free_category(
    category: FiniteInternalCategory,
    paths: Sequence[Path],
    bundle: GroupBundle,
    edge_homs: Sequence[GroupHom],
) -> InternalGroupDiagram:
    """
    Diagrama sobre uma categoria livre a partir dos homomorfismos das arestas.

    P(caminho) é a composta dos homomorfismos das arestas ao longo do caminho.
    """
    homs = []
    for a, path in paths:
        h = GroupHom.identity(bundle.fibre(a))
        for e in path:
            h = edge_homs[e].compose(h)
        homs.append(h)
    return InternalGroupDiagram(category, bundle, tuple(homs))


def span_diagram(i: GroupHom, j: GroupHom) -> InternalGroupDiagram:
    """Diagrama G1 <-i- K -j-> G2 sobre span_category()."""
    if i.domain != j.domain:
        raise ValueError("As pernas do span devem ter o mesmo domínio")
    category, paths = free_category_on_dag(3, [(0, 1), (0, 2)])
    bundle = GroupBundle(FiniteSpace(3), (i.domain, i.codomain, j.codomain))
    return diagram_on_free_category(category, paths, bundle, (i, j))


def monoid_category(table: Sequence[Sequence[int]]) -> FiniteInternalCategory:
    """
    Categoria com um único objeto cujas setas formam um monoide finito.

    A seta 0 é a unidade e table[g][f] = g∘f.

    Raises:
        ValueError: Se a tabela não for de um monoide com unidade 0.
    """
    m = len(table)
    A0, A1 = FiniteSpace(1), FiniteSpace(m)
    to_point = SpaceMap(A1, A0, (0,) * m)
    comp = tuple((f, g, int(table[g][f])) for f in range(m) for g in range(m))
    if any(not 0 <= h < m for _, _, h in comp):
        raise ValueError("Tabela do monoide com seta fora de A1")
    return FiniteInternalCategory(A0, A1, to_point, to_point, SpaceMap(A0, A1, (0,)), comp)


def endomorphism_monoid_diagram(G: FiniteGroup, generators: Sequence[GroupHom]) -> InternalGroupDiagram:
    """
    Monoide gerado por endomorfismos de G, agindo em G (um único objeto).

    As setas são as palavras nos geradores, fechadas por composição; as
    relações entre palavras vêm das igualdades entre os endomorfismos. O
    colimite é o quociente de coinvariantes G/⟨⟨g⁻¹·e(g)⟩⟩.

    Args:
        G (FiniteGroup): Grupo do vértice.
        generators (Sequence[GroupHom]): Endomorfismos geradores.

    Returns:
        InternalGroupDiagram: Diagrama sobre monoid_category.

    Raises:
        ValueError: Se algum gerador não for endomorfismo de G.
    """
    for e in generators:
        if e.domain != G or e.codomain != G:
            raise ValueError("Geradores do monoide devem ser endomorfismos de G")
    elements = [GroupHom.identity(G)]
    index = {elements[0].values: 0}
    k = 0
    while k < len(elements):
        for e in generators:
            h = e.compose(elements[k])
            if h.values not in index:
                index[h.values] = len(elements)
                elements.append(h)
        k += 1
    table = [[index[g.compose(f).values] for f in elements] for g in elements]
    logger.debug("Monoide de endomorfismos de %s com %d elementos", G.name, len(elements))
    return InternalGroupDiagram(monoid_category(table), GroupBundle(FiniteSpace(1), (G,)), tuple(elements))


# ============================================================================
# AMÁLGAMAS (GRAFO-CONE)
# ============================================================================


@dataclass(frozen=True, repr=False)
class AmalgamData:
    """
    Grafo de grupos sobre o grafo-cone: H com injeções θ_x: H -> G(x).

    Attributes:
        X (FiniteSpace): Vértices (além do cone *).
        H (FiniteGroup): Grupo amalgamado (fibra sobre * e sobre as arestas).
        vertex_groups (Tuple[FiniteGroup, ...]): G(x).
        theta (Tuple[GroupHom, ...]): θ_x injetoras.
    """

    X: FiniteSpace
    H: FiniteGroup
    vertex_groups: Tuple[FiniteGroup, ...]
    theta: Tuple[GroupHom, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_groups", tuple(self.vertex_groups))
        object.__setattr__(self, "theta", tuple(self.theta))
        if len(self.vertex_groups) != self.X.size or len(self.theta) != self.X.size:
            raise ValueError("Um grupo de vértice e uma injeção por ponto de X")
        for x, (G, t) in enumerate(zip(self.vertex_groups, self.theta)):
            if t.domain != self.H or t.codomain != G:
                raise ValueError(f"θ_{x} com extremos errados")
            if not t.is_injective():
                raise ValueError(f"θ_{x} não é injetora")

    def __repr__(self) -> str:
        return f"AmalgamData(H={self.H.name or self.H.order}, {[G.name or G.order for G in self.vertex_groups]})"

    def to_json(self) -> Dict[str, Any]:
        return {
            "H": group_spec_or_json(self.H),
            "vertex_groups": [group_spec_or_json(G) for G in self.vertex_groups],
            "theta": [list(t.values) for t in self.theta],
        }


def amalgam_diagram(D: AmalgamData) -> InternalGroupDiagram:
    """Diagrama induzido sobre cone_graph_category(X): fibra H sobre *, θ_x nas arestas."""
    category = cone_graph_category(D.X)
    bundle = GroupBundle(category.A0, D.vertex_groups + (D.H,))
    homs = list(D.theta) + [GroupHom.identity(G) for G in D.vertex_groups] + [GroupHom.identity(D.H)]
    return InternalGroupDiagram(category, bundle, tuple(homs))


def amalgam_homs(D: AmalgamData, T: FiniteGroup) -> List[HomTuple]:
    """
    Tuplas (β_*, β_0, ..., β_{n-1}) com β_x ∘ θ_x = β_*.

    Args:
        D (AmalgamData): Dados do amálgama.
        T (FiniteGroup): Grupo de teste.

    Returns:
        List[HomTuple]: Tabelas de valores, β_* primeiro.
    """
    vertex_homs = [enumerate_hom_values(G, T) for G in D.vertex_groups]
    out: List[HomTuple] = []
    for beta_star in enumerate_hom_values(D.H, T):
        compatible = [
            [b for b in homs if tuple(b[t] for t in theta.values) == beta_star]
            for homs, theta in zip(vertex_homs, D.theta)
        ]
        for betas in itertools.product(*compatible):
            out.append((beta_star,) + tuple(betas))
    return out


def amalgam_to_colimit_tuple(t: HomTuple) -> HomTuple:
    """Reordena (β_*, β_0, ...) para a ordem de A0 do grafo-cone (β_0, ..., β_*)."""
    return tuple(t[1:]) + tuple(t[:1])


class Amalgam(ProGroupByHoms):
    """Produto livre profinito dos G(x) amalgamando H."""

    def __init__(self, data: AmalgamData):
        self.data = data

    @property
    def components(self) -> Tuple[FiniteGroup, ...]:
        return (self.data.H,) + self.data.vertex_groups

    def homs_to(self, T: FiniteGroup) -> Tuple[HomTuple, ...]:
        return tuple(amalgam_homs(self.data, T))

    def describe(self) -> Dict[str, Any]:
        return {"kind": "amalgam", "data": self.data.to_json()}


# ============================================================================
# COLIMITES
# ============================================================================


class ColimitOfDiagram(ProGroupByHoms):
    """
    Colimite de um diagrama interno como coequalizador de φ, ψ.

    φ e ψ são as duas aplicações A1 ×_{A0} P0 -> P0: φ esquece a seta e ψ é
    a ação p1. Um homomorfismo do coproduto ∐_a P(a) em T é uma função
    α: P0 -> T homomórfica em cada fibra; o colimite aceita as que
    satisfazem α∘φ = α∘ψ.
    """

    def __init__(self, diagram: InternalGroupDiagram):
        self.diagram = diagram
        space, pr_arrow, pr_point = diagram.arrow_space
        self.phi = pr_point
        self.psi = diagram.structure_map
        A = diagram.category
        ready: List[List[int]] = [[] for _ in A.A0.points()]
        for r in space.points():
            f = pr_arrow(r)
            ready[max(A.d0(f), A.d1(f))].append(r)
        self._ready = ready

    @property
    def components(self) -> Tuple[FiniteGroup, ...]:
        return self.diagram.bundle.fibres

    def homs_to(self, T: FiniteGroup) -> Tuple[HomTuple, ...]:
        choices = [enumerate_hom_values(G, T) for G in self.components]
        results: List[HomTuple] = []

        def extend(a: int, chosen: Tuple[Tuple[int, ...], ...], flat: Tuple[int, ...]) -> None:
            if a == len(choices):
                results.append(chosen)
                return
            for values in choices[a]:
                trial = flat + values
                if all(trial[self.phi(r)] == trial[self.psi(r)] for r in self._ready[a]):
                    extend(a + 1, chosen + (values,), trial)

        extend(0, (), ())
        return tuple(results)

    def describe(self) -> Dict[str, Any]:
        return {"kind": "colimit", "diagram": self.diagram.to_json()}


def colimit_via_coequaliser(A: FiniteInternalCategory, P: InternalGroupDiagram) -> ColimitOfDiagram:
    """
    Colimite de P: A -> Grp construído por coproduto e coequalizador.

    Raises:
        ValueError: Se P não estiver sobre A.
    """
    if P.category != A:
        raise ValueError("diagrama/categoria incompatíveis (diagram/category mismatch)")
    return ColimitOfDiagram(P)


def direct_universal_homs(P: InternalGroupDiagram, T: FiniteGroup) -> Tuple[HomTuple, ...]:
    """
    Cocones de P com vértice T por força bruta: α_{d1 f} ∘ P(f) = α_{d0 f} para toda seta.
    """
    A = P.category
    fibres_ = P.bundle.fibres
    found: List[HomTuple] = []
    for alpha in itertools.product(*(enumerate_hom_values(G, T) for G in fibres_)):
        homs = [GroupHom(G, T, v) for G, v in zip(fibres_, alpha)]
        if all(
            homs[A.d1(f)].compose(P.arrow_homs[f]) == homs[A.d0(f)] for f in A.A1.points()
        ):
            found.append(tuple(alpha))
    return tuple(found)


def discrete_diagram(B: GroupBundle) -> InternalGroupDiagram:
    """Diagrama sobre discrete_category(X) com as identidades."""
    category = discrete_category(B.base)
    return InternalGroupDiagram(category, B, tuple(GroupHom.identity(G) for G in B.fibres))


def discrete_colimit_agrees(B: GroupBundle, T: FiniteGroup) -> bool:
    """Colimite sobre a categoria discreta = coproduto interno (mesmas tuplas)."""
    P = discrete_diagram(B)
    return colimit_via_coequaliser(P.category, P).homs_to(T) == Coproduct(B).homs_to(T)


def pushout_with_surjective_leg(i: GroupHom, j: GroupHom) -> Tuple[FiniteGroup, GroupHom, GroupHom]:
    """
    Pushout ordinário de G1 <-i- K -j-> G2 com j sobrejetora.

    É o coequalizador de (i restrita a ker j) e do homomorfismo trivial em G1.

    Returns:
        Tuple[FiniteGroup, GroupHom, GroupHom]: (Q, q1: G1 -> Q, q2: G2 -> Q).

    Raises:
        ValueError: Se j não for sobrejetora.
    """
    if not j.is_surjective():
        raise ValueError("A segunda perna deve ser sobrejetora para o pushout finito")
    N, incl = subgroup(j.domain, j.kernel(), name="ker")
    leg = i.compose(incl)
    Q, q1 = coequaliser(leg, GroupHom.trivial(N, i.codomain))
    values = [Q.identity] * j.codomain.order
    for k in range(j.domain.order):
        values[j(k)] = q1(i(k))
    return Q, q1, GroupHom(j.codomain, Q, tuple(values))
