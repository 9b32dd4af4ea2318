"""
Módulo de Grupos Finitos.

Teoria exata de grupos finitos por tábua de multiplicação (tábua de Cayley):
homomorfismos, abelianização, coequalizadores, quocientes por fecho normal e
a enumeração exaustiva de homomorfismos, que é o oráculo de todas as
verificações de propriedades universais do projeto.

Os grupos nomeados (S_n, A_n, D_n) vêm de ``sympy.combinatorics``; os
elementos são ordenados pela forma de array da permutação, de modo que a
identidade é sempre o índice 0.
"""

import logging
import re
from collections import deque
from dataclasses import dataclass, field, replace
from functools import cached_property, lru_cache, reduce
from math import lcm
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy.combinatorics import PermutationGroup
from sympy.combinatorics.named_groups import AlternatingGroup, DihedralGroup, SymmetricGroup

from scripts.config import FULL_TABLE_SEARCH_MAX_ORDER, ISO_SEARCH_BUDGET

logger = logging.getLogger(__name__)


class SearchBudgetExceeded(RuntimeError):
    """Busca por backtracking interrompida ao exceder o orçamento de nós."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"Orçamento de busca esgotado em {what} ({budget} nós)")
        self.what = what
        self.budget = budget


# ============================================================================
# GRUPOS E HOMOMORFISMOS
# ============================================================================


@dataclass(frozen=True, repr=False)
class FiniteGroup:
    """
    Grupo finito dado pela tábua de multiplicação.

    Attributes:
        table (Tuple[Tuple[int, ...], ...]): table[i][j] = índice de i·j.
        generators (Tuple[int, ...]): Conjunto gerador opcional (verificado).
        name (str): Rótulo de exibição (não participa da igualdade).
    """

    table: Tuple[Tuple[int, ...], ...]
    generators: Tuple[int, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "generators", tuple(int(g) for g in self.generators))
        n = len(table)
        if n == 0:
            raise ValueError("Grupo sem elementos")
        if any(len(row) != n for row in table):
            raise ValueError("Tábua de multiplicação não é quadrada")
        arr = self.array
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError("Tábua com índices fora do intervalo")
        expected = np.arange(n)
        if not (np.sort(arr, axis=1) == expected).all() or not (np.sort(arr, axis=0) == expected[:, None]).all():
            raise ValueError("Tábua não é um quadrado latino (faltam inversos)")
        e = self.identity
        if not (arr[:, e] == expected).all():
            raise ValueError("Identidade à esquerda não é identidade à direita")
        if not np.array_equal(arr[arr], arr[:, arr]):
            raise ValueError("Tábua não é associativa")
        for g in self.generators:
            if not 0 <= g < n:
                raise ValueError(f"Gerador {g} fora do grupo")
        if self.generators and len(self.generated_subgroup(self.generators)) != n:
            raise ValueError("Os geradores informados não geram o grupo")

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    @cached_property
    def array(self) -> np.ndarray:
        """Tábua como array numpy (somente leitura)."""
        arr = np.array(self.table, dtype=np.int64).reshape(len(self.table), len(self.table))
        arr.setflags(write=False)
        return arr

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def identity(self) -> int:
        rows = np.where((self.array == np.arange(self.order)).all(axis=1))[0]
        if len(rows) != 1:
            raise ValueError("Tábua sem identidade única")
        return int(rows[0])

    @cached_property
    def inverses(self) -> Tuple[int, ...]:
        return tuple(int(i) for i in np.argmax(self.array == self.identity, axis=1))

    @cached_property
    def element_orders(self) -> Tuple[int, ...]:
        orders = []
        for a in range(self.order):
            k, x = 1, a
            while x != self.identity:
                x = self.table[x][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def element_order(self, a: int) -> int:
        return self.element_orders[a]

    def power(self, a: int, k: int) -> int:
        """Potência a^k (k pode ser negativo)."""
        k %= self.element_order(a)
        x = self.identity
        for _ in range(k):
            x = self.table[x][a]
        return x

    def exponent(self) -> int:
        return reduce(lcm, self.element_orders, 1)

    def is_abelian(self) -> bool:
        return bool((self.array == self.array.T).all())

    def generated_subgroup(self, elements: Iterable[int]) -> Tuple[int, ...]:
        """
        Subgrupo gerado por um conjunto de elementos (fecho por multiplicação).

        Args:
            elements (Iterable[int]): Geradores.

        Returns:
            Tuple[int, ...]: Elementos do subgrupo em ordem crescente.
        """
        gens = sorted(set(elements))
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = self.table[x][s]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    def normal_closure(self, elements: Iterable[int]) -> Tuple[int, ...]:
        """Menor subgrupo normal que contém os elementos dados."""
        elements = set(elements)
        conjugates = {
            self.table[self.table[g][s]][self.inverses[g]] for g in range(self.order) for s in elements
        }
        return self.generated_subgroup(conjugates)

    def commutator_subgroup(self) -> Tuple[int, ...]:
        inv = self.inverses
        commutators = {
            self.table[self.table[self.table[a][b]][inv[a]]][inv[b]]
            for a in range(self.order)
            for b in range(self.order)
        }
        return self.generated_subgroup(commutators)

    @cached_property
    def _greedy_generators(self) -> Tuple[int, ...]:
        gens: List[int] = []
        span = {self.identity}
        for x in range(self.order):
            if x not in span:
                gens.append(x)
                span = set(self.generated_subgroup(gens))
        return tuple(gens)

    def generating_set(self) -> Tuple[int, ...]:
        """Geradores informados, ou um conjunto guloso determinístico."""
        gens = tuple(g for g in self.generators if g != self.identity)
        return gens if gens else self._greedy_generators

    def to_json(self) -> Dict[str, Any]:
        data = {
            "order": self.order,
            "table": [list(row) for row in self.table],
            "generators": list(self.generators),
        }
        if self.name:
            data["name"] = self.name
        return data

    @staticmethod
    def from_json(data: Any) -> "FiniteGroup":
        """Aceita o dicionário JSON ou uma especificação textual ("S3", "C2xC2")."""
        if isinstance(data, str):
            return parse_group_spec(data)
        group = FiniteGroup(
            tuple(tuple(row) for row in data["table"]),
            tuple(data.get("generators", ())),
            data.get("name", ""),
        )
        if "order" in data and int(data["order"]) != group.order:
            raise ValueError("Campo 'order' não confere com a tábua")
        return group


@dataclass(frozen=True, repr=False)
class GroupHom:
    """
    Homomorfismo entre grupos finitos.

    Attributes:
        domain (FiniteGroup): Grupo de partida.
        codomain (FiniteGroup): Grupo de chegada.
        values (Tuple[int, ...]): Imagem de cada elemento do domínio.
    """

    domain: FiniteGroup
    codomain: FiniteGroup
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.domain.order:
            raise ValueError("Número de valores difere da ordem do domínio")
        if any(not 0 <= v < self.codomain.order for v in values):
            raise ValueError("Valor fora do contradomínio")
        v = np.array(values, dtype=np.int64)
        if not np.array_equal(v[self.domain.array], self.codomain.array[v[:, None], v[None, :]]):
            raise ValueError("Aplicação não é homomorfismo de grupos")

    def __repr__(self) -> str:
        return f"GroupHom({self.domain.name or '?'} -> {self.codomain.name or '?'}, {list(self.values)})"

    def __call__(self, x: int) -> int:
        return self.values[x]

    def compose(self, other: "GroupHom") -> "GroupHom":
        """Composição self ∘ other."""
        if other.codomain != self.domain:
            raise ValueError("Composição de homomorfismos incompatíveis")
        return GroupHom(other.domain, self.codomain, tuple(self.values[v] for v in other.values))

    def kernel(self) -> Tuple[int, ...]:
        e = self.codomain.identity
        return tuple(x for x, v in enumerate(self.values) if v == e)

    def image(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.values)))

    def is_injective(self) -> bool:
        return len(self.kernel()) == 1

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.codomain.order

    @staticmethod
    def identity(group: FiniteGroup) -> "GroupHom":
        return GroupHom(group, group, tuple(range(group.order)))

    @staticmethod
    def trivial(domain: FiniteGroup, codomain: FiniteGroup) -> "GroupHom":
        return GroupHom(domain, codomain, (codomain.identity,) * domain.order)

    def to_json(self) -> Dict[str, Any]:
        return {
            "domain": self.domain.to_json(),
            "codomain": self.codomain.to_json(),
            "values": list(self.values),
        }

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "GroupHom":
        return GroupHom(
            FiniteGroup.from_json(data["domain"]),
            FiniteGroup.from_json(data["codomain"]),
            tuple(data["values"]),
        )


# ============================================================================
# CONSTRUTORES E CATÁLOGO
# ============================================================================


def from_func(
    elements: Sequence[Any],
    mult: Callable[[Any, Any], Any],
    name: str = "",
    generators: Sequence[int] = (),
) -> FiniteGroup:
    """
    Constrói um grupo a partir de uma lista de elementos e da multiplicação.

    Args:
        elements (Sequence[Any]): Elementos (hasheáveis).
        mult (Callable): Produto de dois elementos.
        name (str): Rótulo.
        generators (Sequence[int]): Índices de geradores.

    Returns:
        FiniteGroup: O grupo.
    """
    index = {el: i for i, el in enumerate(elements)}
    table = tuple(tuple(index[mult(a, b)] for b in elements) for a in elements)
    return FiniteGroup(table, tuple(generators), name)


def from_permutation_group(pgroup: PermutationGroup, name: str = "") -> FiniteGroup:
    """Tábua de um grupo de permutações do sympy, elementos em ordem de array_form."""
    elements = sorted(pgroup.generate(), key=lambda p: tuple(p.array_form))
    index = {tuple(p.array_form): i for i, p in enumerate(elements)}
    table = tuple(
        tuple(index[tuple((a * b).array_form)] for b in elements) for a in elements
    )
    gens = sorted({index[tuple(g.array_form)] for g in pgroup.generators} - {0})
    return FiniteGroup(table, tuple(gens), name)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError(f"Ordem cíclica inválida: {n}")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(table, (1,) if n > 1 else (), f"C{n}")


def trivial_group() -> FiniteGroup:
    return cyclic(1)


def symmetric(n: int) -> FiniteGroup:
    return from_permutation_group(SymmetricGroup(n), f"S{n}")


def alternating(n: int) -> FiniteGroup:
    return from_permutation_group(AlternatingGroup(n), f"A{n}")


def dihedral(n: int) -> FiniteGroup:
    """Grupo diedral de ordem 2n (simetrias do n-ágono)."""
    return from_permutation_group(DihedralGroup(n), f"D{n}")


# (a, b) -> (sinal, c) para as unidades 0=1, 1=i, 2=j, 3=k
_QUATERNION_UNITS = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)


def quaternion() -> FiniteGroup:
    """Grupo dos quatérnios Q8 = {±1, ±i, ±j, ±k}."""
    elements = [(s, u) for u in range(4) for s in (1, -1)]

    def mult(a, b):
        sign, unit = _QUATERNION_UNITS[a[1]][b[1]]
        return (a[0] * b[0] * sign, unit)

    return from_func(elements, mult, "Q8", generators=(2, 4))


def direct_product(G: FiniteGroup, H: FiniteGroup, name: Optional[str] = None) -> FiniteGroup:
    """
    Produto direto G × H; o par (g, h) tem índice g·|H| + h.

    Args:
        G (FiniteGroup): Primeiro fator.
        H (FiniteGroup): Segundo fator.
        name (Optional[str]): Rótulo (padrão "GxH").

    Returns:
        FiniteGroup: O produto.
    """
    m = H.order
    n = G.order * m
    arr = G.array[:, None, :, None] * m + H.array[None, :, None, :]
    table = tuple(tuple(int(v) for v in row) for row in arr.reshape(n, n))
    gens = [g * m + H.identity for g in G.generating_set()]
    gens += [G.identity * m + h for h in H.generating_set()]
    return FiniteGroup(table, tuple(gens), name or f"{G.name}x{H.name}")


_FACTOR_RE = re.compile(r"^([CSAD])(\d+)$")


@lru_cache(maxsize=None)
def parse_group_spec(spec: str) -> FiniteGroup:
    """
    Interpreta uma especificação textual de grupo.

    Aceita "C{n}", "S{n}", "A{n}" (n <= 5), "D{n}" (ordem 2n), "Q8", "1" e
    produtos diretos separados por "x" (por exemplo "C2xC2" ou "S3xC2").

    Args:
        spec (str): Especificação.

    Returns:
        FiniteGroup: O grupo, com ``name`` igual à especificação.

    Raises:
        ValueError: Especificação desconhecida.
    """
    factors = []
    for part in spec.strip().split("x"):
        if part in ("1", "C1"):
            factors.append(trivial_group())
            continue
        if part == "Q8":
            factors.append(quaternion())
            continue
        match = _FACTOR_RE.match(part)
        if not match:
            raise ValueError(f"Especificação de grupo desconhecida: {spec!r}")
        letter, k = match.group(1), int(match.group(2))
        if k < 1 or (letter in "SA" and k > 5):
            raise ValueError(f"Especificação de grupo fora do catálogo: {spec!r}")
        builder = {"C": cyclic, "S": symmetric, "A": alternating, "D": dihedral}[letter]
        factors.append(builder(k))
    group = reduce(direct_product, factors)
    return replace(group, name=spec.strip())


def group_spec_or_json(G: FiniteGroup) -> Any:
    """Especificação textual quando o nome reconstrói o grupo; senão a tábua completa."""
    try:
        if G.name and parse_group_spec(G.name) == G:
            return G.name
    except ValueError:
        pass
    return G.to_json()


def _invariant_factor_chains(max_order: int) -> List[Tuple[int, ...]]:
    chains: List[Tuple[int, ...]] = []

    def extend(chain: Tuple[int, ...], size: int) -> None:
        chains.append(chain)
        step = chain[-1] if chain else 1
        d = chain[-1] if chain else 2
        while size * d <= max_order:
            extend(chain + (d,), size * d)
            d += step

    extend((), 1)
    return chains


def abelian_group_name(factors: Sequence[int]) -> str:
    return "x".join(f"C{d}" for d in factors) if factors else "C1"


def abelian_groups_up_to(max_order: int) -> List[FiniteGroup]:
    """
    Todos os grupos abelianos de ordem <= max_order, um por classe de isomorfismo.

    Args:
        max_order (int): Ordem máxima.

    Returns:
        List[FiniteGroup]: Grupos ordenados por (ordem, fatores invariantes).
    """
    chains = _invariant_factor_chains(max_order)
    chains.sort(key=lambda c: (int(np.prod(c)) if c else 1, c))
    return [parse_group_spec(abelian_group_name(c)) for c in chains]


CATALOG_SPECS: Tuple[str, ...] = (
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7",
    "C8", "C2xC4", "C2xC2xC2", "D4", "Q8",
)


def catalog_groups(max_order: int) -> List[FiniteGroup]:
    """Grupos do catálogo embutido com ordem <= max_order."""
    groups = [parse_group_spec(s) for s in CATALOG_SPECS]
    return [g for g in groups if g.order <= max_order]


# ============================================================================
# ENUMERAÇÃO DE HOMOMORFISMOS
# ============================================================================


def _close(
    G: FiniteGroup, T: FiniteGroup, gens: Sequence[int], images: Sequence[int]
) -> Optional[Tuple[int, ...]]:
    """
    Propaga φ(x·g) = φ(x)·φ(g) pelo grafo de Cayley de ⟨gens⟩.

    Returns:
        Optional[Tuple[int, ...]]: Valores (-1 fora de ⟨gens⟩) ou None se houver conflito.
    """
    values = [-1] * G.order
    values[G.identity] = T.identity
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        vx = values[x]
        for g, t in zip(gens, images):
            y = G.table[x][g]
            vy = T.table[vx][t]
            if values[y] == -1:
                values[y] = vy
                queue.append(y)
            elif values[y] != vy:
                return None
    return tuple(values)


@lru_cache(maxsize=4096)
def enumerate_hom_values(G: FiniteGroup, T: FiniteGroup) -> Tuple[Tuple[int, ...], ...]:
    """
    Tabelas de valores de todos os homomorfismos G -> T.

    Backtracking sobre as imagens dos geradores de G (ordem da imagem divide
    a ordem do gerador), com verificação incremental no subgrupo já gerado.
    A ordem de saída é lexicográfica nas imagens dos geradores.

    Args:
        G (FiniteGroup): Domínio.
        T (FiniteGroup): Grupo de teste.

    Returns:
        Tuple[Tuple[int, ...], ...]: Tabelas de valores.
    """
    gens = G.generating_set()
    if not gens:
        return ((T.identity,) * G.order,)
    candidates = [
        [t for t in range(T.order) if G.element_order(g) % T.element_order(t) == 0]
        for g in gens
    ]
    results: List[Tuple[int, ...]] = []

    def extend(k: int, images: List[int]) -> None:
        for t in candidates[k]:
            trial = images + [t]
            values = _close(G, T, gens[: k + 1], trial)
            if values is None:
                continue
            if k + 1 == len(gens):
                results.append(values)
            else:
                extend(k + 1, trial)

    extend(0, [])
    logger.debug("Hom(%s, %s): %d homomorfismos", G.name, T.name, len(results))
    return tuple(results)


def enumerate_homs(G: FiniteGroup, T: FiniteGroup) -> List[GroupHom]:
    """Lista completa de homomorfismos G -> T em ordem determinística."""
    return [GroupHom(G, T, values) for values in enumerate_hom_values(G, T)]


def count_homs(G: FiniteGroup, T: FiniteGroup) -> int:
    return len(enumerate_hom_values(G, T))


def enumerate_homs_by_table(G: FiniteGroup, T: FiniteGroup) -> List[Tuple[int, ...]]:
    """
    Busca por força bruta em tabelas de valores (oráculo independente).

    Atribui φ(0), φ(1), ... nessa ordem e testa φ(a)φ(b) = φ(ab) assim que
    os três valores estão definidos.

    Args:
        G (FiniteGroup): Domínio (ordem <= FULL_TABLE_SEARCH_MAX_ORDER).
        T (FiniteGroup): Contradomínio.

    Returns:
        List[Tuple[int, ...]]: Tabelas em ordem lexicográfica.
    """
    if G.order > FULL_TABLE_SEARCH_MAX_ORDER:
        raise ValueError(f"Busca por tabela limitada a ordem {FULL_TABLE_SEARCH_MAX_ORDER}")
    n = G.order
    values = [0] * n
    out: List[Tuple[int, ...]] = []

    def consistent(i: int) -> bool:
        for a in range(i + 1):
            for b in range(i + 1):
                c = G.table[a][b]
                if c <= i and i in (a, b, c):
                    if T.table[values[a]][values[b]] != values[c]:
                        return False
        return True

    def extend(i: int) -> None:
        if i == n:
            out.append(tuple(values))
            return
        for t in range(T.order):
            values[i] = t
            if consistent(i):
                extend(i + 1)

    extend(0)
    return out


# ============================================================================
# QUOCIENTES, ABELIANIZAÇÃO E COEQUALIZADORES
# ============================================================================


def quotient_by_normal_closure(G: FiniteGroup, S: Iterable[int]) -> Tuple[FiniteGroup, GroupHom]:
    """
    Quociente G/⟨⟨S⟩⟩ com a projeção canônica.

    As classes laterais são numeradas pela ordem de primeira aparição.

    Args:
        G (FiniteGroup): Grupo.
        S (Iterable[int]): Elementos a anular.

    Returns:
        Tuple[FiniteGroup, GroupHom]: (quociente, projeção sobrejetora).
    """
    normal = G.normal_closure(S)
    coset_of = [-1] * G.order
    reps: List[int] = []
    for x in range(G.order):
        if coset_of[x] == -1:
            cid = len(reps)
            reps.append(x)
            for m in normal:
                coset_of[G.table[x][m]] = cid
    k = len(reps)
    table = tuple(tuple(coset_of[G.table[reps[i]][reps[j]]] for j in range(k)) for i in range(k))
    gens: List[int] = []
    for g in G.generating_set():
        c = coset_of[g]
        if c != coset_of[G.identity] and c not in gens:
            gens.append(c)
    label = G.name if len(normal) == 1 else f"{G.name}/N{len(normal)}"
    quotient = FiniteGroup(table, tuple(gens), label)
    return quotient, GroupHom(G, quotient, tuple(coset_of))


@lru_cache(maxsize=1024)
def abelianisation(G: FiniteGroup) -> Tuple[FiniteGroup, GroupHom]:
    """
    Abelianização G -> G/[G, G].

    Args:
        G (FiniteGroup): Grupo.

    Returns:
        Tuple[FiniteGroup, GroupHom]: (G^ab, projeção canônica).
    """
    A, q = quotient_by_normal_closure(G, G.commutator_subgroup())
    A = replace(A, name=f"{G.name}^ab" if not G.is_abelian() else G.name)
    return A, GroupHom(G, A, q.values)


def abelianisation_map(f: GroupHom) -> GroupHom:
    """Homomorfismo induzido f^ab: G^ab -> H^ab."""
    A, q = abelianisation(f.domain)
    B, r = abelianisation(f.codomain)
    values = [B.identity] * A.order
    for g in range(f.domain.order):
        values[q(g)] = r(f(g))
    return GroupHom(A, B, tuple(values))


def coequaliser(phi: GroupHom, psi: GroupHom) -> Tuple[FiniteGroup, GroupHom]:
    """
    Coequalizador de um par paralelo φ, ψ: H -> G.

    Args:
        phi (GroupHom): Primeiro homomorfismo.
        psi (GroupHom): Segundo homomorfismo.

    Returns:
        Tuple[FiniteGroup, GroupHom]: (G/N, q) com N = ⟨⟨φ(h)ψ(h)^{-1}⟩⟩.

    Raises:
        ValueError: Se domínios ou contradomínios diferirem.
    """
    if phi.domain != psi.domain or phi.codomain != psi.codomain:
        raise ValueError("Par paralelo incompatível (mismatched domains/codomains)")
    G = phi.codomain
    relators = {G.mul(phi(h), G.inv(psi(h))) for h in range(phi.domain.order)}
    return quotient_by_normal_closure(G, relators)


def subgroup(G: FiniteGroup, elements: Iterable[int], name: str = "") -> Tuple[FiniteGroup, GroupHom]:
    """
    Subgrupo dado por seus elementos, com a inclusão em G.

    Args:
        G (FiniteGroup): Grupo ambiente.
        elements (Iterable[int]): Elementos (devem formar um subgrupo).
        name (str): Rótulo.

    Returns:
        Tuple[FiniteGroup, GroupHom]: (H, inclusão H -> G).
    """
    elems = sorted(set(elements))
    if tuple(elems) != G.generated_subgroup(elems):
        raise ValueError("Os elementos não formam um subgrupo")
    index = {g: i for i, g in enumerate(elems)}
    table = tuple(tuple(index[G.table[a][b]] for b in elems) for a in elems)
    H = FiniteGroup(table, (), name or f"{G.name}<{len(elems)}>")
    return H, GroupHom(H, G, tuple(elems))


def find_isomorphism(
    G: FiniteGroup, H: FiniteGroup, budget: int = ISO_SEARCH_BUDGET
) -> Optional[GroupHom]:
    """
    Procura um isomorfismo G -> H.

    Filtra por ordem, ordens dos elementos e comutatividade; depois faz
    backtracking sobre imagens dos geradores com a mesma ordem.

    Args:
        G (FiniteGroup): Domínio.
        H (FiniteGroup): Contradomínio.
        budget (int): Máximo de nós visitados.

    Returns:
        Optional[GroupHom]: Isomorfismo ou None se não existir.

    Raises:
        SearchBudgetExceeded: Se o orçamento acabar antes de uma resposta.
    """
    if G.order != H.order or sorted(G.element_orders) != sorted(H.element_orders):
        return None
    if G.is_abelian() != H.is_abelian():
        return None
    gens = G.generating_set()
    if not gens:
        return GroupHom(G, H, (H.identity,))
    candidates = [
        [t for t in range(H.order) if H.element_order(t) == G.element_order(g)] for g in gens
    ]
    nodes = 0

    def extend(k: int, images: List[int]) -> Optional[Tuple[int, ...]]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded("find_isomorphism", budget)
        values = _close(G, H, gens[:k], images)
        if values is None:
            return None
        if k == len(gens):
            return values if len(set(values)) == H.order else None
        for t in candidates[k]:
            found = extend(k + 1, images + [t])
            if found is not None:
                return found
        return None

    values = extend(0, [])
    return None if values is None else GroupHom(G, H, values)
