"""
Módulo de Espaços Finitos.

Espaços finitos (pontos indexados por 0..n-1), aplicações entre eles, fibras
e produtos fibrados. É o substrato combinatório de todos os fibrados: as
projeções p0, d0, d1 dos objetos internos são aplicações deste módulo.

Todas as construções produzem ordens determinísticas (lexicográficas).
"""

from dataclasses import dataclass
from typing import Dict, Any, List, Sequence, Tuple


@dataclass(frozen=True)
class FiniteSpace:
    """
    Espaço finito com pontos canônicos 0..size-1.

    Attributes:
        size (int): Número de pontos (>= 0).
    """

    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 0:
            raise ValueError(f"Tamanho de espaço inválido: {self.size!r}")

    def points(self) -> range:
        """Pontos do espaço em ordem crescente."""
        return range(self.size)

    def to_json(self) -> Dict[str, Any]:
        return {"size": self.size}

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "FiniteSpace":
        return FiniteSpace(int(data["size"]))


@dataclass(frozen=True)
class SpaceMap:
    """
    Aplicação entre espaços finitos.

    Attributes:
        domain (FiniteSpace): Espaço de partida.
        codomain (FiniteSpace): Espaço de chegada.
        values (Tuple[int, ...]): Imagem de cada ponto do domínio.
    """

    domain: FiniteSpace
    codomain: FiniteSpace
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != self.domain.size:
            raise ValueError(
                f"Aplicação com {len(self.values)} valores para domínio de "
                f"tamanho {self.domain.size}"
            )
        for v in self.values:
            if not 0 <= v < self.codomain.size:
                raise ValueError(f"Valor {v} fora do contradomínio ({self.codomain.size})")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def compose(self, other: "SpaceMap") -> "SpaceMap":
        """
        Composição self ∘ other (other é aplicada primeiro).

        Args:
            other (SpaceMap): Aplicação com contradomínio igual ao domínio de self.

        Returns:
            SpaceMap: A composta.
        """
        if other.codomain != self.domain:
            raise ValueError("Composição de aplicações incompatíveis")
        return SpaceMap(other.domain, self.codomain, tuple(self.values[v] for v in other.values))

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.codomain.size

    @staticmethod
    def identity(space: FiniteSpace) -> "SpaceMap":
        return SpaceMap(space, space, tuple(space.points()))

    def to_json(self) -> Dict[str, Any]:
        return {
            "domain": self.domain.size,
            "codomain": self.codomain.size,
            "values": list(self.values),
        }

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "SpaceMap":
        return SpaceMap(
            FiniteSpace(int(data["domain"])),
            FiniteSpace(int(data["codomain"])),
            tuple(data["values"]),
        )


def constant_map(domain: FiniteSpace, codomain: FiniteSpace, point: int = 0) -> SpaceMap:
    """
    Aplicação constante de valor ``point``.

    Args:
        domain (FiniteSpace): Domínio.
        codomain (FiniteSpace): Contradomínio (não vazio se o domínio não for vazio).
        point (int): Ponto imagem.

    Returns:
        SpaceMap: A aplicação constante.
    """
    return SpaceMap(domain, codomain, (point,) * domain.size)


def fibre(p: SpaceMap, x: int) -> List[int]:
    """
    Fibra p^{-1}(x) em ordem crescente.

    Args:
        p (SpaceMap): Projeção.
        x (int): Ponto do contradomínio.

    Returns:
        List[int]: Pontos do domínio que vão em x.

    Raises:
        ValueError: Se x estiver fora do contradomínio.
    """
    if not 0 <= x < p.codomain.size:
        raise ValueError(f"Ponto {x} fora da base de tamanho {p.codomain.size}")
    return [a for a, v in enumerate(p.values) if v == x]


def fibres(p: SpaceMap) -> List[List[int]]:
    """Todas as fibras de p, indexadas pelos pontos do contradomínio."""
    out: List[List[int]] = [[] for _ in p.codomain.points()]
    for a, v in enumerate(p.values):
        out[v].append(a)
    return out


def inclusion_of_fibre(p: SpaceMap, x: int) -> SpaceMap:
    """Inclusão da fibra p^{-1}(x), vista como espaço, no domínio de p."""
    points = fibre(p, x)
    return SpaceMap(FiniteSpace(len(points)), p.domain, tuple(points))


def pullback(f: SpaceMap, g: SpaceMap) -> Tuple[FiniteSpace, SpaceMap, SpaceMap]:
    """
    Produto fibrado de um cospan f: A -> X <- B: g.

    Os pares (a, b) com f(a) = g(b) são listados em ordem lexicográfica.

    Args:
        f (SpaceMap): Primeira perna.
        g (SpaceMap): Segunda perna.

    Returns:
        Tuple[FiniteSpace, SpaceMap, SpaceMap]: (P, pr1: P -> A, pr2: P -> B).

    Raises:
        ValueError: Se os contradomínios forem diferentes.
    """
    if f.codomain != g.codomain:
        raise ValueError("cospan incompatível (incompatible cospan)")
    over = fibres(g)
    pairs = [(a, b) for a in f.domain.points() for b in over[f.values[a]]]
    space = FiniteSpace(len(pairs))
    pr1 = SpaceMap(space, f.domain, tuple(a for a, _ in pairs))
    pr2 = SpaceMap(space, g.domain, tuple(b for _, b in pairs))
    return space, pr1, pr2


def disjoint_union(spaces: Sequence[FiniteSpace]) -> Tuple[FiniteSpace, List[SpaceMap]]:
    """
    União disjunta com as inclusões canônicas (blocos consecutivos).

    Args:
        spaces (Sequence[FiniteSpace]): Parcelas.

    Returns:
        Tuple[FiniteSpace, List[SpaceMap]]: (soma, inclusões).
    """
    total = FiniteSpace(sum(s.size for s in spaces))
    inclusions = []
    offset = 0
    for s in spaces:
        inclusions.append(SpaceMap(s, total, tuple(range(offset, offset + s.size))))
        offset += s.size
    return total, inclusions


def projection_from_fibre_sizes(sizes: Sequence[int]) -> SpaceMap:
    """
    Projeção Y -> X cujas fibras têm os tamanhos dados, em blocos consecutivos.

    Args:
        sizes (Sequence[int]): |Y(x)| para cada x.

    Returns:
        SpaceMap: A projeção.
    """
    values = [x for x, n in enumerate(sizes) for _ in range(n)]
    return SpaceMap(FiniteSpace(len(values)), FiniteSpace(len(sizes)), tuple(values))
