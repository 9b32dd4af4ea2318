"""
Módulo de Módulos Finitos.

Álgebra homológica exata sobre anéis finitos (Z/n e álgebras de grupo
(Z/n)[G]): módulos livres, somas diretas, produto tensorial, Tor por
resoluções livres, dual de Pontryagin, indução e restrição de escalares.

Convenções:
    - Um módulo é a soma ⊕ Z/d_i com d_1 | d_2 | ... e uma matriz de ação
      por gerador do anel, agindo em vetores-coluna de coordenadas.
    - Todos os módulos são módulos à esquerda. Um módulo à direita sobre kG
      é representado pelo módulo à esquerda com m·g := g^{-1}·m.
    - Toda conta passa por matrizes inteiras e forma de Smith (scripts.smith);
      não há ponto flutuante em lugar nenhum.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import gcd, lcm, prod
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from scripts import smith
from scripts.config import ISO_SEARCH_BUDGET, MODULE_EXHAUSTIVE_MAX_ORDER, TOR_MAX_DEGREE
from scripts.fingroup import FiniteGroup, GroupHom, SearchBudgetExceeded, group_spec_or_json, parse_group_spec
from scripts.finspace import FiniteSpace, SpaceMap

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]


# ============================================================================
# ANÉIS
# ============================================================================


@dataclass(frozen=True, repr=False)
class FiniteRing:
    """
    Anel finito Z/n ou (Z/n)[G].

    A álgebra de um grupo trivial é identificada com Z/n.

    Attributes:
        n (int): Característica (>= 2).
        group (Optional[FiniteGroup]): Grupo da álgebra, ou None para Z/n.
    """

    n: int
    group: Optional[FiniteGroup] = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"Anel Z/n exige n >= 2 (recebido {self.n!r})")
        if self.group is not None and self.group.order == 1:
            object.__setattr__(self, "group", None)

    def __repr__(self) -> str:
        return f"FiniteRing({self.name})"

    @property
    def kind(self) -> str:
        return "Zmod" if self.group is None else "GroupAlgebra"

    @property
    def name(self) -> str:
        if self.group is None:
            return f"Z/{self.n}"
        return f"(Z/{self.n})[{self.group.name or self.group.order}]"

    @property
    def group_or_trivial(self) -> FiniteGroup:
        return self.group if self.group is not None else parse_group_spec("C1")

    @property
    def order(self) -> int:
        return self.n ** self.group_or_trivial.order

    @property
    def additive_exponent(self) -> int:
        return self.n

    def generators(self) -> Tuple[int, ...]:
        """Geradores do anel que exigem matriz de ação (os geradores de G)."""
        return () if self.group is None else self.group.generating_set()

    def element(self, index: int) -> Vector:
        """Elemento de índice canônico, como vetor de coeficientes por elemento de G."""
        size = self.group_or_trivial.order
        digits = []
        for _ in range(size):
            index, r = divmod(index, self.n)
            digits.append(r)
        return tuple(digits)

    def multiply(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        """Produto por convolução: (a·b)[gh] += a[g]·b[h]."""
        G = self.group_or_trivial
        out = [0] * G.order
        for x, ax in enumerate(a):
            if ax:
                for y, by in enumerate(b):
                    if by:
                        out[G.table[x][y]] += ax * by
        return tuple(c % self.n for c in out)

    def add(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        return tuple((x + y) % self.n for x, y in zip(a, b))

    def one(self) -> Vector:
        G = self.group_or_trivial
        return tuple(1 if g == G.identity else 0 for g in range(G.order))

    def to_json(self) -> Dict[str, Any]:
        if self.group is None:
            return {"kind": "Zmod", "n": self.n}
        return {"kind": "GroupAlgebra", "n": self.n, "group": group_spec_or_json(self.group)}

    @staticmethod
    def from_json(data: Any) -> "FiniteRing":
        if isinstance(data, str):
            return parse_ring_spec(data)
        if isinstance(data, int):
            return zmod(data)
        if data.get("kind", "Zmod") == "Zmod":
            return zmod(int(data["n"]))
        group = data["group"]
        return group_algebra(int(data["n"]), parse_group_spec(group) if isinstance(group, str) else FiniteGroup.from_json(group))


def zmod(n: int) -> FiniteRing:
    return FiniteRing(n)


def group_algebra(n: int, group: FiniteGroup) -> FiniteRing:
    return FiniteRing(n, group)


_ZMOD_RE = re.compile(r"^Z/(\d+)$")
_ALGEBRA_RE = re.compile(r"^\(Z/(\d+)\)\[(.+)\]$")


def parse_ring_spec(spec: str) -> FiniteRing:
    """
    Interpreta "Z/n" ou "(Z/n)[G]" (G no formato de parse_group_spec).

    Raises:
        ValueError: Especificação desconhecida.
    """
    spec = spec.strip()
    match = _ZMOD_RE.match(spec)
    if match:
        return zmod(int(match.group(1)))
    match = _ALGEBRA_RE.match(spec)
    if match:
        return group_algebra(int(match.group(1)), parse_group_spec(match.group(2)))
    raise ValueError(f"Especificação de anel desconhecida: {spec!r}")


# ============================================================================
# MÓDULOS E HOMOMORFISMOS
# ============================================================================


def _reduce_rows(matrix: Any, factors: Sequence[int], shape: Tuple[int, int]) -> Matrix:
    arr = np.array(matrix, dtype=object).reshape(shape)
    return tuple(
        tuple(int(arr[j, i]) % factors[j] for i in range(shape[1])) for j in range(shape[0])
    )


def _int_array(matrix: Matrix, shape: Tuple[int, int]) -> np.ndarray:
    return np.array(matrix, dtype=np.int64).reshape(shape)


@dataclass(frozen=True, repr=False)
class FiniteModule:
    """
    Módulo finito à esquerda sobre um anel finito.

    Attributes:
        ring (FiniteRing): Anel de escalares.
        invariant_factors (Tuple[int, ...]): d_1 | d_2 | ..., cada d_i > 1 dividindo n.
        action (Tuple[Matrix, ...]): Uma matriz por gerador do anel; a coluna i
            é a imagem do i-ésimo gerador cíclico.
    """

    ring: FiniteRing
    invariant_factors: Tuple[int, ...]
    action: Tuple[Matrix, ...] = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for d in factors:
            if d < 2 or self.ring.n % d != 0:
                raise ValueError(f"Fator invariante {d} inválido para {self.ring.name}")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                raise ValueError(f"Fatores invariantes fora da cadeia de divisibilidade: {factors}")
        r = len(factors)
        gens = self.ring.generators()
        if len(self.action) != len(gens):
            raise ValueError(
                f"Esperadas {len(gens)} matrizes de ação para {self.ring.name}, recebidas {len(self.action)}"
            )
        action = tuple(
            tuple(tuple(int(v) for v in row) for row in np.array(m, dtype=object).reshape(r, r))
            for m in self.action
        )
        object.__setattr__(self, "action", action)
        for m in action:
            for j in range(r):
                for i in range(r):
                    if not 0 <= m[j][i] < factors[j]:
                        raise ValueError("Matriz de ação não reduzida módulo os fatores")
                    if (factors[i] * m[j][i]) % factors[j] != 0:
                        raise ValueError("Matriz de ação mal definida nos fatores cíclicos")
        _ = self.element_actions  # valida a ação do grupo

    def __repr__(self) -> str:
        return f"FiniteModule({self.ring.name}, {list(self.invariant_factors)})"

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @cached_property
    def factor_array(self) -> np.ndarray:
        return np.array(self.invariant_factors, dtype=np.int64).reshape(self.rank, 1)

    def mat_mul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Produto de endomorfismos reduzido nos fatores deste módulo."""
        return (A @ B) % self.factor_array

    @cached_property
    def generator_actions(self) -> Tuple[np.ndarray, ...]:
        return tuple(_int_array(m, (self.rank, self.rank)) for m in self.action)

    @cached_property
    def element_actions(self) -> Tuple[np.ndarray, ...]:
        """
        Matriz de cada elemento do grupo, obtida por BFS no grafo de Cayley.

        Raises:
            ValueError: Se as matrizes dos geradores não definem uma representação.
        """
        G = self.ring.group_or_trivial
        gens = self.ring.generators()
        mats: List[Optional[np.ndarray]] = [None] * G.order
        mats[G.identity] = np.eye(self.rank, dtype=np.int64) % self.factor_array
        queue = [G.identity]
        for x in queue:
            for g, A in zip(gens, self.generator_actions):
                y = G.table[x][g]
                candidate = self.mat_mul(mats[x], A)
                if mats[y] is None:
                    mats[y] = candidate
                    queue.append(y)
                elif not np.array_equal(mats[y], candidate):
                    raise ValueError("As matrizes de ação não definem uma representação do grupo")
        if any(m is None for m in mats):
            raise ValueError("Geradores do anel não alcançam todo o grupo")
        return tuple(mats)

    def reduce(self, v: Sequence[int]) -> Vector:
        return tuple(int(x) % d for x, d in zip(v, self.invariant_factors))

    def zero(self) -> Vector:
        return (0,) * self.rank

    def unit(self, i: int) -> Vector:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def add(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        return self.reduce(tuple(a + b for a, b in zip(u, v)))

    def act(self, g: int, v: Sequence[int]) -> Vector:
        """Ação do elemento g do grupo do anel."""
        if not self.rank:
            return ()
        return self.reduce(self.element_actions[g] @ np.array(v, dtype=np.int64))

    def act_ring(self, r: Sequence[int], v: Sequence[int]) -> Vector:
        """Ação de um elemento do anel dado por coeficientes."""
        out = self.zero()
        for g, c in enumerate(r):
            if c:
                out = self.add(out, tuple(c * x for x in self.act(g, v)))
        return out

    def element_order(self, v: Sequence[int]) -> int:
        return reduce(lcm, (d // gcd(d, int(x)) for x, d in zip(v, self.invariant_factors)), 1)

    def elements(self) -> Iterator[Vector]:
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def to_json(self) -> Dict[str, Any]:
        return {
            "ring": self.ring.to_json(),
            "invariant_factors": list(self.invariant_factors),
            "action": [[list(row) for row in m] for m in self.action],
        }

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "FiniteModule":
        ring = FiniteRing.from_json(data["ring"])
        factors = tuple(data.get("invariant_factors", ()))
        action = data.get("action")
        if action is None:
            action = [smith.as_tuple(smith.identity_matrix(len(factors)))] * len(ring.generators())
        return FiniteModule(ring, factors, tuple(tuple(tuple(r) for r in m) for m in action))


def zero_module(ring: FiniteRing) -> FiniteModule:
    return FiniteModule(ring, (), ((),) * len(ring.generators()))


def cyclic_module(ring: FiniteRing, d: int) -> FiniteModule:
    """Z/d com ação trivial do grupo (d divide n)."""
    if d == 1:
        return zero_module(ring)
    return FiniteModule(ring, (d,), (((1,),),) * len(ring.generators()))


def trivial_module(ring: FiniteRing) -> FiniteModule:
    """O módulo trivial k = Z/n."""
    return cyclic_module(ring, ring.n)


@dataclass(frozen=True, repr=False)
class ModuleHom:
    """
    Homomorfismo de módulos sobre o mesmo anel.

    Attributes:
        domain (FiniteModule): Módulo de partida.
        codomain (FiniteModule): Módulo de chegada.
        matrix (Matrix): matriz[j][i] = coordenada j da imagem do gerador i
            (reduzida módulo o fator j do contradomínio na construção).
    """

    domain: FiniteModule
    codomain: FiniteModule
    matrix: Matrix

    def __post_init__(self):
        if self.domain.ring != self.codomain.ring:
            raise ValueError("anel incompatível (ring mismatch)")
        e = self.codomain.invariant_factors
        d = self.domain.invariant_factors
        shape = (len(e), len(d))
        matrix = _reduce_rows(self.matrix, e, shape)
        object.__setattr__(self, "matrix", matrix)
        for j in range(len(e)):
            for i in range(len(d)):
                if (d[i] * matrix[j][i]) % e[j] != 0:
                    raise ValueError("Homomorfismo mal definido nos fatores cíclicos")
        M = self.array
        for A, B in zip(self.domain.generator_actions, self.codomain.generator_actions):
            if not np.array_equal((M @ A) % self.codomain.factor_array, self.codomain.mat_mul(B, M)):
                raise ValueError("Matriz não é equivariante (não comuta com a ação)")

    def __repr__(self) -> str:
        return f"ModuleHom({self.domain!r} -> {self.codomain!r}, {[list(r) for r in self.matrix]})"

    @cached_property
    def array(self) -> np.ndarray:
        return _int_array(self.matrix, (self.codomain.rank, self.domain.rank))

    def apply(self, v: Sequence[int]) -> Vector:
        if not self.codomain.rank:
            return ()
        if not self.domain.rank:
            return self.codomain.zero()
        return self.codomain.reduce(self.array @ np.array(v, dtype=np.int64))

    def compose(self, other: "ModuleHom") -> "ModuleHom":
        """Composição self ∘ other."""
        if other.codomain != self.domain:
            raise ValueError("Composição de homomorfismos incompatíveis")
        return ModuleHom(other.domain, self.codomain, self.array @ other.array)

    def add(self, other: "ModuleHom") -> "ModuleHom":
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise ValueError("Soma de homomorfismos com tipos diferentes")
        return ModuleHom(self.domain, self.codomain, self.array + other.array)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.matrix for v in row)

    def is_injective(self) -> bool:
        return kernel(self).module.order == 1

    def is_surjective(self) -> bool:
        return image(self).module.order == self.codomain.order

    def is_isomorphism(self) -> bool:
        return self.domain.order == self.codomain.order and self.is_injective()

    @staticmethod
    def identity(module: FiniteModule) -> "ModuleHom":
        return ModuleHom(module, module, smith.identity_matrix(module.rank))

    @staticmethod
    def zero(domain: FiniteModule, codomain: FiniteModule) -> "ModuleHom":
        return ModuleHom(domain, codomain, smith.zero_matrix(codomain.rank, domain.rank))

    def to_json(self) -> Dict[str, Any]:
        return {
            "domain": self.domain.to_json(),
            "codomain": self.codomain.to_json(),
            "matrix": [list(row) for row in self.matrix],
        }

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "ModuleHom":
        domain = FiniteModule.from_json(data["domain"])
        codomain = FiniteModule.from_json(data["codomain"])
        rows = data["matrix"]
        return ModuleHom(domain, codomain, smith.int_matrix(rows, (codomain.rank, domain.rank)))


def is_isomorphism(hom: ModuleHom) -> bool:
    return hom.is_isomorphism()


# ============================================================================
# APRESENTAÇÕES, SUBMÓDULOS E QUOCIENTES
# ============================================================================


@dataclass(frozen=True, eq=False)
class Presentation:
    """
    Módulo obtido de geradores e relações, com as mudanças de coordenadas.

    Attributes:
        module (FiniteModule): Módulo em forma de fatores invariantes.
        proj (np.ndarray): r×k; coeficientes nos k geradores -> coordenadas.
        lift (np.ndarray): k×r; gerador cíclico l -> coeficientes representantes.
    """

    module: FiniteModule
    proj: np.ndarray
    lift: np.ndarray

    def coordinates(self, coefficients: Sequence[int]) -> Vector:
        k = self.proj.shape[1]
        c = np.array([int(x) for x in coefficients], dtype=object).reshape(k)
        return self.module.reduce(self.proj.dot(c)) if self.module.rank else ()

    def representative(self, l: int) -> List[int]:
        return [int(x) for x in self.lift[:, l]]


def present(
    ring: FiniteRing,
    num_generators: int,
    relations: Sequence[Sequence[int]],
    actions: Sequence[Any] = (),
) -> Presentation:
    """
    Módulo Z^k / ⟨relações, n·e_i⟩ com ação induzida.

    Args:
        ring (FiniteRing): Anel (n é acrescentado como relação de cada gerador).
        num_generators (int): k.
        relations (Sequence[Sequence[int]]): Linhas de coeficientes que se anulam.
        actions (Sequence[Any]): Uma matriz k×k (convenção de colunas) por gerador do anel.

    Returns:
        Presentation: Módulo e mudanças de coordenadas.
    """
    k = num_generators
    rows = [list(r) for r in relations]
    rows += [[ring.n if j == i else 0 for j in range(k)] for i in range(k)]
    R = smith.int_matrix(rows, (len(rows), k))
    _, D, V, Vinv = smith.smith_with_inverse(R)
    diag = smith.diagonal(D)
    kept = [i for i, d in enumerate(diag) if d != 1]
    factors = tuple(diag[i] for i in kept)
    proj = V[:, kept].T
    lift = Vinv[kept, :].T
    r = len(kept)
    new_actions = []
    for A in actions:
        A = smith.int_matrix(A, (k, k)) if not isinstance(A, np.ndarray) else np.array(A, dtype=object)
        induced = proj.dot(A).dot(lift) if r else smith.zero_matrix(0, 0)
        new_actions.append(_reduce_rows(induced, factors, (r, r)))
    module = FiniteModule(ring, factors, tuple(new_actions))
    return Presentation(module, proj.reshape(r, k), lift.reshape(k, r))


@dataclass(frozen=True, eq=False)
class Submodule:
    """
    Submódulo gerado (como grupo abeliano) por vetores de um módulo ambiente.

    Attributes:
        ambient (FiniteModule): Módulo ambiente A.
        generators (np.ndarray): k×c; colunas são os geradores em A.
        presentation (Presentation): Apresentação sobre os c geradores.
        inclusion (ModuleHom): Inclusão no ambiente.
    """

    ambient: FiniteModule
    generators: np.ndarray
    presentation: Presentation
    inclusion: ModuleHom

    @property
    def module(self) -> FiniteModule:
        return self.presentation.module

    @cached_property
    def _system(self) -> np.ndarray:
        return np.hstack([self.generators, _diag(self.ambient.invariant_factors)])

    def coordinates(self, v: Sequence[int]) -> Vector:
        """
        Coordenadas de um elemento do ambiente no submódulo.

        Raises:
            ValueError: Se v não pertence ao submódulo.
        """
        c = self.generators.shape[1]
        y = smith.solve_integer(self._system, v)
        if y is None:
            raise ValueError(f"Vetor {tuple(v)} fora do submódulo")
        return self.presentation.coordinates(y[:c])

    def contains(self, v: Sequence[int]) -> bool:
        return smith.solve_integer(self._system, v) is not None


def _diag(values: Sequence[int]) -> np.ndarray:
    out = smith.zero_matrix(len(values), len(values))
    for i, v in enumerate(values):
        out[i, i] = int(v)
    return out


def _columns(vectors: Sequence[Sequence[int]], rows: int) -> np.ndarray:
    out = smith.zero_matrix(rows, len(vectors))
    for j, v in enumerate(vectors):
        for i in range(rows):
            out[i, j] = int(v[i])
    return out


def submodule(A: FiniteModule, gens: Sequence[Sequence[int]]) -> Submodule:
    """
    Submódulo Z-gerado por ``gens`` (deve ser estável pela ação).

    Args:
        A (FiniteModule): Ambiente.
        gens (Sequence[Sequence[int]]): Vetores geradores.

    Returns:
        Submodule: Submódulo com apresentação e inclusão.

    Raises:
        ValueError: Se o subgrupo gerado não for estável pela ação do anel.
    """
    k = A.rank
    gens = [A.reduce(g) for g in gens]
    gens = [g for g in gens if any(g)]
    c = len(gens)
    W = _columns(gens, k)
    system = np.hstack([W, _diag(A.invariant_factors)])
    K = smith.integer_kernel(system)
    relations = [[int(K[i, j]) for i in range(c)] for j in range(K.shape[1])]
    actions = []
    for Ag in A.generator_actions:
        act = smith.zero_matrix(c, c)
        for l in range(c):
            target = [int(x) for x in Ag @ np.array(gens[l], dtype=np.int64)]
            y = smith.solve_integer(system, target)
            if y is None:
                raise ValueError("Subconjunto não é estável pela ação do anel")
            act[:, l] = y[:c]
        actions.append(act)
    pres = present(A.ring, c, relations, actions)
    inclusion = ModuleHom(pres.module, A, W.dot(pres.lift) if c else smith.zero_matrix(k, 0))
    return Submodule(A, W, pres, inclusion)


@dataclass(frozen=True, eq=False)
class Quotient:
    module: FiniteModule
    projection: ModuleHom
    presentation: Presentation


def quotient(B: FiniteModule, gens: Sequence[Sequence[int]]) -> Quotient:
    """
    Quociente de B pelo submódulo gerado por ``gens``.

    Args:
        B (FiniteModule): Módulo.
        gens (Sequence[Sequence[int]]): Elementos a anular (conjunto estável).

    Returns:
        Quotient: Módulo quociente, projeção e apresentação.
    """
    k = B.rank
    relations = [[B.invariant_factors[i] if j == i else 0 for j in range(k)] for i in range(k)]
    relations += [[int(x) for x in g] for g in gens]
    pres = present(B.ring, k, relations, B.action)
    return Quotient(pres.module, ModuleHom(B, pres.module, pres.proj), pres)


def kernel(f: ModuleHom) -> Submodule:
    """Núcleo de f como submódulo do domínio."""
    a = f.domain.rank
    F = smith.int_matrix(f.matrix, (f.codomain.rank, a))
    system = np.hstack([F, _diag(f.codomain.invariant_factors)])
    K = smith.integer_kernel(system)
    gens = [[int(K[i, j]) for i in range(a)] for j in range(K.shape[1])]
    return submodule(f.domain, gens)


def image(f: ModuleHom) -> Submodule:
    """Imagem de f como submódulo do contradomínio."""
    columns = [[row[i] for row in f.matrix] for i in range(f.domain.rank)]
    return submodule(f.codomain, columns)


def cokernel(f: ModuleHom) -> Quotient:
    columns = [[row[i] for row in f.matrix] for i in range(f.domain.rank)]
    return quotient(f.codomain, columns)


def preimage(f: ModuleHom, target: Sequence[int]) -> Optional[Vector]:
    """Algum x com f(x) = target, ou None."""
    a = f.domain.rank
    F = smith.int_matrix(f.matrix, (f.codomain.rank, a))
    system = np.hstack([F, _diag(f.codomain.invariant_factors)])
    y = smith.solve_integer(system, target)
    if y is None:
        return None
    return f.domain.reduce(y[:a])


@dataclass(frozen=True, eq=False)
class Homology:
    module: FiniteModule
    cycles: Submodule
    quotient: Quotient


def homology(incoming: ModuleHom, outgoing: ModuleHom) -> Homology:
    """
    Homologia ker(outgoing) / im(incoming) no termo do meio.

    Raises:
        ValueError: Se outgoing ∘ incoming ≠ 0.
    """
    if incoming.codomain != outgoing.domain:
        raise ValueError("Complexo com termos incompatíveis")
    if not outgoing.compose(incoming).is_zero():
        raise ValueError("Não é complexo: a composta não é zero")
    cycles = kernel(outgoing)
    columns = [[row[i] for row in incoming.matrix] for i in range(incoming.domain.rank)]
    boundaries = [cycles.coordinates(col) for col in columns]
    q = quotient(cycles.module, boundaries)
    return Homology(q.module, cycles, q)


# ============================================================================
# SOMA DIRETA E MÓDULOS LIVRES
# ============================================================================


def _block_diagonal(blocks: Sequence[Matrix], sizes: Sequence[int]) -> np.ndarray:
    total = sum(sizes)
    out = smith.zero_matrix(total, total)
    offset = 0
    for block, size in zip(blocks, sizes):
        for j in range(size):
            for i in range(size):
                out[offset + j, offset + i] = block[j][i]
        offset += size
    return out


def direct_sum(
    ms: Sequence[FiniteModule], ring: Optional[FiniteRing] = None
) -> Tuple[FiniteModule, List[ModuleHom], List[ModuleHom]]:
    """
    Biproduto de uma lista de módulos sobre o mesmo anel.

    Args:
        ms (Sequence[FiniteModule]): Parcelas.
        ring (Optional[FiniteRing]): Anel, obrigatório para a lista vazia.

    Returns:
        Tuple[FiniteModule, List[ModuleHom], List[ModuleHom]]: (soma, injeções, projeções).

    Raises:
        ValueError: Anéis diferentes ou lista vazia sem anel.
    """
    if not ms:
        if ring is None:
            raise ValueError("Soma vazia exige o anel")
        return zero_module(ring), [], []
    ring = ring or ms[0].ring
    if any(m.ring != ring for m in ms):
        raise ValueError("anel incompatível (ring mismatch)")
    sizes = [m.rank for m in ms]
    k = sum(sizes)
    relations = []
    offset = 0
    for m in ms:
        for i, d in enumerate(m.invariant_factors):
            row = [0] * k
            row[offset + i] = d
            relations.append(row)
        offset += m.rank
    actions = [
        _block_diagonal([m.action[g] for m in ms], sizes) for g in range(len(ring.generators()))
    ]
    pres = present(ring, k, relations, actions)
    S = pres.module
    injections, projections = [], []
    offset = 0
    for m in ms:
        block = slice(offset, offset + m.rank)
        injections.append(ModuleHom(m, S, pres.proj[:, block]))
        projections.append(ModuleHom(S, m, pres.lift[block, :]))
        offset += m.rank
    return S, injections, projections


def _space_size(X: Any) -> int:
    return X.size if isinstance(X, FiniteSpace) else int(X)


def free_module(R: FiniteRing, X: Any) -> FiniteModule:
    """
    Módulo livre R⟦X⟧ sobre um espaço finito (ou um número de geradores).

    A base de Z/n é e_{x,h} (índice x·|G| + h) e g·e_{x,h} = e_{x,gh}.

    Args:
        R (FiniteRing): Anel.
        X (FiniteSpace | int): Conjunto de geradores.

    Returns:
        FiniteModule: Módulo de ordem |R|^|X|.
    """
    k = _space_size(X)
    G = R.group_or_trivial
    g = G.order
    actions = []
    for s in R.generators():
        P = smith.zero_matrix(k * g, k * g)
        for x in range(k):
            for h in range(g):
                P[x * g + G.table[s][h], x * g + h] = 1
        actions.append(P)
    return FiniteModule(R, (R.n,) * (k * g), tuple(smith.as_tuple(P) for P in actions))


def free_generator(R: FiniteRing, X: Any, x: int) -> Vector:
    """Vetor do elemento de base e_x de R⟦X⟧ (inclusão X -> R⟦X⟧)."""
    G = R.group_or_trivial
    k = _space_size(X)
    return tuple(1 if i == x * G.order + G.identity else 0 for i in range(k * G.order))


def free_module_hom(R: FiniteRing, X: Any, target: FiniteModule, images: Sequence[Sequence[int]]) -> ModuleHom:
    """
    Homomorfismo R⟦X⟧ -> M determinado pelas imagens da base.

    Args:
        R (FiniteRing): Anel.
        X (FiniteSpace | int): Base.
        target (FiniteModule): M.
        images (Sequence[Sequence[int]]): Imagem de cada e_x.

    Returns:
        ModuleHom: O homomorfismo.
    """
    k = _space_size(X)
    G = R.group_or_trivial
    g = G.order
    M = smith.zero_matrix(target.rank, k * g)
    for x in range(k):
        for h in range(g):
            col = target.act(h, images[x])
            for j in range(target.rank):
                M[j, x * g + h] = col[j]
    return ModuleHom(free_module(R, k), target, M)


def free_module_map(R: FiniteRing, f: SpaceMap) -> ModuleHom:
    """R⟦f⟧: R⟦X⟧ -> R⟦Y⟧ para f: X -> Y."""
    target = free_module(R, f.codomain)
    images = [free_generator(R, f.codomain, f(x)) for x in f.domain.points()]
    return free_module_hom(R, f.domain, target, images)


# ============================================================================
# GERADORES, ENUMERAÇÃO E ISOMORFISMOS
# ============================================================================


def _span_contains(M: FiniteModule, vectors: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    system = np.hstack([_columns(vectors, M.rank), _diag(M.invariant_factors)])
    return smith.solve_integer(system, v) is not None


def r_generators(M: FiniteModule) -> List[Vector]:
    """
    Conjunto gerador guloso de M como R-módulo, escolhido entre os geradores cíclicos.

    Sobre Z/n todos os geradores cíclicos são necessários.
    """
    units = [M.unit(i) for i in range(M.rank)]
    if M.ring.group is None:
        return units
    G = M.ring.group
    chosen: List[Vector] = []
    span: List[Vector] = []
    for e in units:
        if span and _span_contains(M, span, e):
            continue
        chosen.append(e)
        span.extend(M.act(g, e) for g in range(G.order))
    return chosen


@dataclass(frozen=True, eq=False)
class _FreeCover:
    generators: List[Vector]
    cover: ModuleHom
    relations: Submodule
    lifts: List[Vector]


def _free_cover(M: FiniteModule, gens: List[Vector]) -> _FreeCover:
    pi = free_module_hom(M.ring, len(gens), M, gens)
    lifts = []
    for i in range(M.rank):
        u = preimage(pi, M.unit(i))
        if u is None:
            raise ValueError("Os geradores escolhidos não geram o módulo")
        lifts.append(u)
    return _FreeCover(gens, pi, kernel(pi), lifts)


def iter_module_homs(M: FiniteModule, N: FiniteModule) -> Iterator[ModuleHom]:
    """
    Todos os homomorfismos M -> N em ordem determinística.

    Sobre Z/n as colunas são escolhidas independentemente entre os elementos
    de N anulados por d_i. Sobre kG, as imagens dos R-geradores percorrem N e
    só sobrevivem as que anulam as relações da cobertura livre.
    """
    if M.ring != N.ring:
        raise ValueError("anel incompatível (ring mismatch)")
    if M.ring.group is None:
        choices = [
            [v for v in N.elements() if all((d * x) % e == 0 for x, e in zip(v, N.invariant_factors))]
            for d in M.invariant_factors
        ]
        for combo in itertools.product(*choices):
            yield ModuleHom(M, N, _columns(combo, N.rank))
        return
    cover = _free_cover(M, r_generators(M))
    relation_gens = [list(cover.relations.generators[:, j]) for j in range(cover.relations.generators.shape[1])]
    pools = [
        [v for v in N.elements() if M.element_order(g) % N.element_order(v) == 0]
        for g in cover.generators
    ]
    for images in itertools.product(*pools):
        h = free_module_hom(M.ring, len(images), N, images)
        if any(any(h.apply(r)) for r in relation_gens):
            continue
        yield ModuleHom(M, N, _columns([h.apply(u) for u in cover.lifts], N.rank))


def enumerate_module_homs(M: FiniteModule, N: FiniteModule) -> List[ModuleHom]:
    return list(iter_module_homs(M, N))


def count_module_homs(M: FiniteModule, N: FiniteModule) -> int:
    """|Hom_R(M, N)|; sobre Z/n pela fórmula Π gcd(d_i, e_j)."""
    if M.ring != N.ring:
        raise ValueError("anel incompatível (ring mismatch)")
    if M.ring.group is None:
        return prod(gcd(d, e) for d in M.invariant_factors for e in N.invariant_factors)
    return sum(1 for _ in iter_module_homs(M, N))


def find_module_isomorphism(
    M: FiniteModule, N: FiniteModule, budget: int = ISO_SEARCH_BUDGET
) -> Optional[ModuleHom]:
    """
    Procura um isomorfismo equivariante M -> N.

    Compara primeiro os fatores invariantes; sobre Z/n eles decidem. Sobre kG
    faz backtracking nas imagens dos R-geradores (mesma ordem aditiva).

    Returns:
        Optional[ModuleHom]: Isomorfismo, ou None se não existir.

    Raises:
        SearchBudgetExceeded: Orçamento esgotado sem decisão.
    """
    if M.ring != N.ring or M.invariant_factors != N.invariant_factors:
        return None
    if M.ring.group is None:
        return ModuleHom(M, N, smith.identity_matrix(M.rank))
    cover = _free_cover(M, r_generators(M))
    relation_gens = [list(cover.relations.generators[:, j]) for j in range(cover.relations.generators.shape[1])]
    pools = [[v for v in N.elements() if N.element_order(v) == M.element_order(g)] for g in cover.generators]
    nodes = 0
    for images in itertools.product(*pools):
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded("find_module_isomorphism", budget)
        h = free_module_hom(M.ring, len(images), N, images)
        if any(any(h.apply(r)) for r in relation_gens):
            continue
        candidate = ModuleHom(M, N, _columns([h.apply(u) for u in cover.lifts], N.rank))
        if candidate.is_isomorphism():
            return candidate
    return None


def module_from_abelian_group(A: FiniteGroup, n: Optional[int] = None) -> Tuple[FiniteModule, Dict[int, Vector]]:
    """
    Decomposição exata de um grupo abeliano em fatores invariantes.

    Usa a apresentação policíclica dos geradores de A e a forma de Smith.

    Args:
        A (FiniteGroup): Grupo abeliano.
        n (Optional[int]): Característica do anel Z/n (múltiplo do expoente).

    Returns:
        Tuple[FiniteModule, Dict[int, Vector]]: (módulo, elemento -> vetor).
    """
    if not A.is_abelian():
        raise ValueError("Grupo não abeliano não é um Z-módulo")
    exp = A.exponent()
    n = n or max(exp, 2)
    if n % exp != 0:
        raise ValueError(f"n = {n} não é múltiplo do expoente {exp}")
    gens = A.generating_set()
    vectors: Dict[int, List[int]] = {A.identity: [0] * len(gens)}
    relations = []
    for k, g in enumerate(gens):
        x, o = g, 1
        while x not in vectors:
            x = A.table[x][g]
            o += 1
        rel = [-c for c in vectors[x]]
        rel[k] += o
        relations.append(rel)
        grown: Dict[int, List[int]] = {}
        for h, v in vectors.items():
            p = h
            for j in range(o):
                w = list(v)
                w[k] += j
                grown[p] = w
                p = A.table[p][g]
        vectors = grown
    pres = present(zmod(n), len(gens), relations)
    mapping = {x: pres.coordinates(v) for x, v in vectors.items()}
    return pres.module, mapping


# ============================================================================
# PRODUTO TENSORIAL E TOR
# ============================================================================


@lru_cache(maxsize=1024)
def tensor_presentation(M: FiniteModule, N: FiniteModule) -> Presentation:
    """
    Apresentação de M ⊗_R N sobre os geradores m_i ⊗ n_j (índice i·|N| + j).

    Sobre kG, M é lido como módulo à direita via m·g = g^{-1}m, e as relações
    (m·g) ⊗ n = m ⊗ (g·n) tornam-se (g m_i) ⊗ (g n_j) - m_i ⊗ n_j.
    """
    if M.ring != N.ring:
        raise ValueError("anel incompatível (ring mismatch)")
    r, s = M.rank, N.rank
    k = r * s
    relations = []
    for i, d in enumerate(M.invariant_factors):
        for j, e in enumerate(N.invariant_factors):
            for modulus in (d, e):
                row = [0] * k
                row[i * s + j] = modulus
                relations.append(row)
    for A, B in zip(M.action, N.action):
        for i in range(r):
            for j in range(s):
                row = [A[a][i] * B[b][j] for a in range(r) for b in range(s)]
                row[i * s + j] -= 1
                relations.append(row)
    return present(zmod(M.ring.n), k, relations)


def tensor(M: FiniteModule, N: FiniteModule) -> FiniteModule:
    """Produto tensorial M ⊗_R N, um módulo sobre Z/n."""
    return tensor_presentation(M, N).module


def _kron(F: np.ndarray, G: np.ndarray) -> np.ndarray:
    rows = F.shape[0] * G.shape[0]
    cols = F.shape[1] * G.shape[1]
    out = smith.zero_matrix(rows, cols)
    for a in range(F.shape[0]):
        for i in range(F.shape[1]):
            if F[a, i]:
                for b in range(G.shape[0]):
                    for j in range(G.shape[1]):
                        out[a * G.shape[0] + b, i * G.shape[1] + j] = int(F[a, i]) * int(G[b, j])
    return out


def tensor_hom(f: ModuleHom, g: ModuleHom) -> ModuleHom:
    """f ⊗ g: M ⊗ N -> M' ⊗ N'."""
    P = tensor_presentation(f.domain, g.domain)
    Q = tensor_presentation(f.codomain, g.codomain)
    F = smith.int_matrix(f.matrix, (f.codomain.rank, f.domain.rank))
    G = smith.int_matrix(g.matrix, (g.codomain.rank, g.domain.rank))
    big = _kron(F, G)
    return ModuleHom(P.module, Q.module, Q.proj.dot(big).dot(P.lift))


@dataclass(frozen=True, eq=False)
class FreeResolution:
    """
    Resolução livre truncada F_L -> ... -> F_0 -> M.

    Attributes:
        module (FiniteModule): M.
        ranks (List[int]): Posto (sobre R) de cada F_j.
        terms (List[FiniteModule]): F_0..F_L.
        augmentation (ModuleHom): F_0 -> M.
        differentials (List[ModuleHom]): d_1..d_L com d_j: F_j -> F_{j-1}.
        strategy (str): "minimal" ou "redundant".
    """

    module: FiniteModule
    ranks: List[int]
    terms: List[FiniteModule]
    augmentation: ModuleHom
    differentials: List[ModuleHom]
    strategy: str


RESOLUTION_STRATEGIES = ("minimal", "redundant")


def _cover_generators(K: FiniteModule, strategy: str) -> List[Vector]:
    if strategy == "minimal":
        return r_generators(K)
    if strategy == "redundant":
        units = [K.unit(i) for i in range(K.rank)]
        return units + units[:1]
    raise ValueError(f"Estratégia de resolução desconhecida: {strategy!r}")


def free_resolution(M: FiniteModule, length: int, strategy: str = "minimal") -> FreeResolution:
    """
    Resolução livre de M até F_length.

    "minimal" cobre cada núcleo por um conjunto guloso de R-geradores;
    "redundant" usa todos os geradores cíclicos e repete o primeiro.
    """
    gens = _cover_generators(M, strategy)
    eps = free_module_hom(M.ring, len(gens), M, gens)
    ranks, terms, diffs = [len(gens)], [eps.domain], []
    current = eps
    for _ in range(length):
        K = kernel(current)
        gens = _cover_generators(K.module, strategy)
        pi = free_module_hom(M.ring, len(gens), K.module, gens)
        d = K.inclusion.compose(pi)
        ranks.append(len(gens))
        terms.append(d.domain)
        diffs.append(d)
        current = d
    logger.debug("Resolução %s de %r: postos %s", strategy, M, ranks)
    return FreeResolution(M, ranks, terms, eps, diffs, strategy)


def lift_chain_map(f: ModuleHom, P: FreeResolution, Q: FreeResolution, upto: int) -> List[ModuleHom]:
    """
    Levanta f: M -> M' a morfismos f_j: P_j -> Q_j, j = 0..upto.

    Cada vetor de base de P_j vai para uma pré-imagem (por ε' ou d'_j) de
    f_{j-1}(d_j(base)), que existe por exatidão de Q.
    """
    R = f.domain.ring
    maps: List[ModuleHom] = []
    for j in range(upto + 1):
        images = []
        for s in range(P.ranks[j]):
            b = free_generator(R, P.ranks[j], s)
            if j == 0:
                target = f.apply(P.augmentation.apply(b))
                along = Q.augmentation
            else:
                target = maps[j - 1].apply(P.differentials[j - 1].apply(b))
                along = Q.differentials[j - 1]
            u = preimage(along, target)
            if u is None:
                raise ArithmeticError("Resolução de chegada não é exata")
            images.append(u)
        maps.append(free_module_hom(R, P.ranks[j], Q.terms[j], images))
    return maps


@dataclass(frozen=True, eq=False)
class TorComputation:
    degree: int
    resolution: FreeResolution
    coefficient: FiniteModule
    chain: List[Presentation]
    homology: Homology

    @property
    def module(self) -> FiniteModule:
        return self.homology.module


def tor_computation(i: int, M: FiniteModule, N: FiniteModule, strategy: str = "minimal") -> TorComputation:
    """
    Tor_i(M, N): homologia de (resolução livre de M) ⊗_R N no grau i.

    Raises:
        ValueError: Grau fora de [0, TOR_MAX_DEGREE] ou anéis diferentes.
    """
    if not 0 <= i <= TOR_MAX_DEGREE:
        raise ValueError(f"Grau de Tor fora do intervalo [0, {TOR_MAX_DEGREE}]: {i}")
    if M.ring != N.ring:
        raise ValueError("anel incompatível (ring mismatch)")
    res = free_resolution(M, i + 1, strategy)
    chain = [tensor_presentation(F, N) for F in res.terms]
    ident = ModuleHom.identity(N)
    boundary = [tensor_hom(d, ident) for d in res.differentials]
    if i == 0:
        outgoing = ModuleHom.zero(chain[0].module, zero_module(zmod(M.ring.n)))
    else:
        outgoing = boundary[i - 1]
    H = homology(boundary[i], outgoing)
    return TorComputation(i, res, N, chain, H)


def tor(i: int, M: FiniteModule, N: FiniteModule, strategy: str = "minimal") -> FiniteModule:
    """Tor_i^R(M, N) como módulo sobre Z/n."""
    return tor_computation(i, M, N, strategy).module


def tor_map(i: int, f: ModuleHom, N: FiniteModule, strategy: str = "minimal") -> ModuleHom:
    """
    Tor_i(f, N): Tor_i(M, N) -> Tor_i(M', N) por levantamento de cadeias.
    """
    src = tor_computation(i, f.domain, N, strategy)
    tgt = tor_computation(i, f.codomain, N, strategy)
    lifts = lift_chain_map(f, src.resolution, tgt.resolution, i)
    fi = tensor_hom(lifts[i], ModuleHom.identity(N))
    columns = []
    for l in range(src.module.rank):
        cycle = src.homology.cycles.module.reduce(src.homology.quotient.presentation.representative(l))
        c = src.homology.cycles.inclusion.apply(cycle)
        w = fi.apply(c)
        y = tgt.homology.cycles.coordinates(w)
        columns.append(tgt.homology.quotient.projection.apply(y))
    return ModuleHom(src.module, tgt.module, _columns(columns, tgt.module.rank))


# ============================================================================
# DUALIDADE DE PONTRYAGIN
# ============================================================================


def pontryagin_dual(M: FiniteModule) -> FiniteModule:
    """
    Dual M^∨ = Hom(M, Q/Z) com base de caracteres χ_i(m_j) = δ_ij / d_i.

    A estrutura à direita (χ·g)(m) = χ(g m) é devolvida como módulo à
    esquerda via g ⋆ χ = χ·g^{-1}, isto é, pela identificação kG^op ≅ kG.
    """
    d = M.invariant_factors
    G = M.ring.group_or_trivial
    actions = []
    for g in M.ring.generators():
        A = M.element_actions[G.inv(g)]
        actions.append(
            tuple(
                tuple((int(A[i][j]) * d[j] // d[i]) % d[j] for i in range(M.rank))
                for j in range(M.rank)
            )
        )
    return FiniteModule(M.ring, d, tuple(actions))


def dual_hom(f: ModuleHom) -> ModuleHom:
    """f^∨: N^∨ -> M^∨, ψ ↦ ψ ∘ f."""
    d = f.domain.invariant_factors
    b = f.codomain.invariant_factors
    matrix = [
        [f.matrix[j][i] * d[i] // b[j] for j in range(len(b))] for i in range(len(d))
    ]
    return ModuleHom(pontryagin_dual(f.codomain), pontryagin_dual(f.domain), smith.int_matrix(matrix, (len(d), len(b))))


def character_value(M: FiniteModule, chi: Sequence[int], m: Sequence[int]) -> Fraction:
    """Valor exato χ(m) em Q/Z, representado em [0, 1)."""
    total = sum((Fraction(int(c) * int(x), d) for c, x, d in zip(chi, m, M.invariant_factors)), Fraction(0))
    return total % 1


def evaluation_map(M: FiniteModule) -> ModuleHom:
    """ev: M -> M^∨∨, m ↦ (χ ↦ χ(m)); na base dual é a identidade."""
    return ModuleHom(M, pontryagin_dual(pontryagin_dual(M)), smith.identity_matrix(M.rank))


def verify_evaluation(M: FiniteModule, ev: Optional[ModuleHom] = None) -> bool:
    """
    Confere ⟨ev(m), χ⟩ = χ(m) elemento a elemento contra os caracteres de M^∨.

    As coordenadas de ev(m) são recalculadas pelos valores de m nos
    caracteres da base de M^∨, e cada caractere é conferido como aplicação
    equivariante M -> Q/Z. Exaustivo até MODULE_EXHAUSTIVE_MAX_ORDER
    elementos; acima disso só os geradores cíclicos e seus caracteres.

    Args:
        M (FiniteModule): Módulo.
        ev (Optional[ModuleHom]): Mapa a conferir (padrão: evaluation_map(M)).

    Returns:
        bool: True se ev é a avaliação e é isomorfismo.
    """
    ev = ev or evaluation_map(M)
    D = pontryagin_dual(M)
    if ev.domain != M or ev.codomain != pontryagin_dual(D):
        return False
    G = M.ring.group_or_trivial
    if M.order <= MODULE_EXHAUSTIVE_MAX_ORDER:
        elements = list(M.elements())
        characters = list(D.elements())
    else:
        elements = [M.unit(i) for i in range(M.rank)]
        characters = [D.unit(i) for i in range(D.rank)]
    for chi in characters:
        for g in M.ring.generators():
            for m in elements:
                if character_value(M, D.act(g, chi), m) != character_value(M, chi, M.act(G.inv(g), m)):
                    return False
    for m in elements:
        evm = tuple(ev.apply(m))
        coordinates = tuple(
            int(character_value(M, D.unit(i), m) * d) % d for i, d in enumerate(D.invariant_factors)
        )
        if evm != coordinates:
            return False
        values = []
        for chi in characters:
            value = character_value(M, chi, m)
            if character_value(D, evm, chi) != value:
                return False
            values.append(value)
        if any(m) and all(v == 0 for v in values):
            return False
    return ev.is_isomorphism()


# ============================================================================
# INDUÇÃO E RESTRIÇÃO
# ============================================================================


def _check_inclusion(inclusion: GroupHom) -> None:
    if not inclusion.is_injective():
        raise ValueError("Inclusão não injetora: H não é subgrupo (non-subgroup inclusion)")


@lru_cache(maxsize=512)
def induction_presentation(k: FiniteRing, inclusion: GroupHom, M: FiniteModule) -> Presentation:
    """
    Apresentação de kG ⊗_{kH} M nos geradores (g, i) = g ⊗ m_i (índice g·r + i).
    """
    _check_inclusion(inclusion)
    H, G = inclusion.domain, inclusion.codomain
    kH = group_algebra(k.n, H)
    if M.ring != kH:
        raise ValueError(f"Módulo sobre {M.ring.name}, esperado {kH.name}")
    r = M.rank
    total = G.order * r
    relations = []
    for x in range(G.order):
        for i, d in enumerate(M.invariant_factors):
            row = [0] * total
            row[x * r + i] = d
            relations.append(row)
    for h, A in zip(kH.generators(), M.generator_actions):
        hg = inclusion(h)
        for x in range(G.order):
            for i in range(r):
                row = [0] * total
                row[G.table[x][hg] * r + i] += 1
                for a in range(r):
                    row[x * r + a] -= int(A[a][i])
                relations.append(row)
    kG = group_algebra(k.n, G)
    actions = []
    for s in kG.generators():
        P = smith.zero_matrix(total, total)
        for x in range(G.order):
            for i in range(r):
                P[G.table[s][x] * r + i, x * r + i] = 1
        actions.append(P)
    return present(kG, total, relations, actions)


def _as_ring(k: Any) -> FiniteRing:
    return k if isinstance(k, FiniteRing) else zmod(int(k))


def induce(k: Any, inclusion: GroupHom, M: FiniteModule) -> FiniteModule:
    """
    Indução Ind_H^G(M) = kG ⊗_{kH} M.

    Args:
        k (FiniteRing | int): Anel de coeficientes Z/n.
        inclusion (GroupHom): Inclusão H -> G (deve ser injetora).
        M (FiniteModule): Módulo sobre kH.

    Returns:
        FiniteModule: Módulo sobre kG.
    """
    return induction_presentation(_as_ring(k), inclusion, M).module


def induce_hom(k: Any, inclusion: GroupHom, f: ModuleHom) -> ModuleHom:
    """Ind(f) = id_{kG} ⊗ f."""
    k = _as_ring(k)
    P = induction_presentation(k, inclusion, f.domain)
    Q = induction_presentation(k, inclusion, f.codomain)
    F = smith.int_matrix(f.matrix, (f.codomain.rank, f.domain.rank))
    big = _kron(smith.identity_matrix(inclusion.codomain.order), F)
    return ModuleHom(P.module, Q.module, Q.proj.dot(big).dot(P.lift))


def restriction(inclusion: GroupHom, M: FiniteModule) -> FiniteModule:
    """
    Restrição de escalares de kG para kH ao longo de H -> G.

    Raises:
        ValueError: Se M não estiver sobre kG.
    """
    _check_inclusion(inclusion)
    kG = group_algebra(M.ring.n, inclusion.codomain)
    if M.ring != kG:
        raise ValueError(f"Módulo sobre {M.ring.name}, esperado {kG.name}")
    kH = group_algebra(M.ring.n, inclusion.domain)
    actions = tuple(
        smith.as_tuple(M.element_actions[inclusion(h)]) for h in kH.generators()
    )
    return FiniteModule(kH, M.invariant_factors, actions)


def restriction_hom(inclusion: GroupHom, f: ModuleHom) -> ModuleHom:
    return ModuleHom(restriction(inclusion, f.domain), restriction(inclusion, f.codomain), f.matrix)


def induction_unit(k: Any, inclusion: GroupHom, M: FiniteModule) -> ModuleHom:
    """Unidade M -> Res Ind M, m ↦ 1 ⊗ m."""
    k = _as_ring(k)
    pres = induction_presentation(k, inclusion, M)
    e = inclusion.codomain.identity
    r = M.rank
    columns = pres.proj[:, e * r: e * r + r]
    return ModuleHom(M, restriction(inclusion, pres.module), columns)
