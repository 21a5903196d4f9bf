"""Recognition of the graph classes of competition, CCE and niche graphs of orders.

Niche-graph shapes are described with :class:`NicheClassDescriptor` values.
Building one yields a graph with a fixed block numbering: the X block, then
the Z block (the universal join part), then the Y block, then isolated
vertices. The witness constructors rely on the same numbering.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph_core import (
    UndirectedGraph,
    are_isomorphic,
    complement,
    complete,
    complete_bipartite,
    components,
    disjoint_union,
    edgeless,
    is_complete,
    isolated_vertices,
    universal_vertices,
)


@dataclass(frozen=True)
class NicheClassDescriptor:
    """Base for the four niche-graph shapes."""

    def __post_init__(self) -> None:
        m, n = getattr(self, "m", None), getattr(self, "n", None)
        if m is not None and n is not None and m > n:
            object.__setattr__(self, "m", n)
            object.__setattr__(self, "n", m)
        self._check()

    def _check(self) -> None:
        raise NotImplementedError

    @property
    def vertex_count(self) -> int:
        raise NotImplementedError

    @property
    def is_semiorder_shape(self) -> bool:
        """Whether the shape can arise as the niche graph of a semiorder."""
        return True

    @property
    def shape(self) -> str:
        """The ``shape:params`` string accepted by :func:`parse_shape`."""
        raise NotImplementedError


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


@dataclass(frozen=True)
class Edgeless(NicheClassDescriptor):
    q: int

    def _check(self) -> None:
        _require(self.q >= 1, f"Edgeless needs q >= 1, got {self.q}")

    @property
    def vertex_count(self) -> int:
        return self.q

    @property
    def shape(self) -> str:
        return f"edgeless:{self.q}"

    def __str__(self) -> str:
        return f"I{self.q}"


@dataclass(frozen=True)
class TwoCliques(NicheClassDescriptor):
    m: int
    n: int

    def _check(self) -> None:
        _require(self.m >= 1 and self.n >= 1, f"TwoCliques needs m, n >= 1, got {self.m}, {self.n}")

    @property
    def vertex_count(self) -> int:
        return self.m + self.n

    @property
    def shape(self) -> str:
        return f"two-cliques:{self.m},{self.n}"

    def __str__(self) -> str:
        return f"K{self.m} ∪ K{self.n}"


@dataclass(frozen=True)
class TwoCliquesPlusIsolated(NicheClassDescriptor):
    m: int
    n: int
    q: int

    def _check(self) -> None:
        _require(
            min(self.m, self.n, self.q) >= 1,
            f"TwoCliquesPlusIsolated needs m, n, q >= 1, got {self.m}, {self.n}, {self.q}",
        )

    @property
    def vertex_count(self) -> int:
        return self.m + self.n + self.q

    @property
    def shape(self) -> str:
        return f"two-cliques-isolated:{self.m},{self.n},{self.q}"

    def __str__(self) -> str:
        return f"K{self.m} ∪ K{self.n} ∪ I{self.q}"


@dataclass(frozen=True)
class Gamma(NicheClassDescriptor):
    """complement(K_{m,n} ∪ I_q) ∪ I_r with a nonempty join part (q >= 1)."""

    m: int
    n: int
    q: int
    r: int = 0

    def _check(self) -> None:
        _require(
            min(self.m, self.n, self.q) >= 1 and self.r >= 0,
            f"Gamma needs m, n, q >= 1 and r >= 0, got {self.m}, {self.n}, {self.q}, {self.r}",
        )

    @property
    def vertex_count(self) -> int:
        return self.m + self.n + self.q + self.r

    @property
    def is_semiorder_shape(self) -> bool:
        return self.r == 0

    @property
    def shape(self) -> str:
        return f"gamma:{self.m},{self.n},{self.q},{self.r}"

    def __str__(self) -> str:
        core = f"complement(K{self.m},{self.n} ∪ I{self.q})"
        return f"{core} ∪ I{self.r}" if self.r else core


def gamma(m: int, n: int, q: int, r: int) -> NicheClassDescriptor:
    """Descriptor of Γ(m, n, q, r), collapsed to a two-clique shape when q = 0."""
    if q == 0:
        return TwoCliques(m, n) if r == 0 else TwoCliquesPlusIsolated(m, n, r)
    return Gamma(m, n, q, r)


_SHAPE_ARITY = {"edgeless": 1, "two-cliques": 2, "two-cliques-isolated": 3, "gamma": 4}


def parse_shape(text: str) -> NicheClassDescriptor:
    """Parse ``edgeless:q``, ``two-cliques:m,n``, ``two-cliques-isolated:m,n,q`` or ``gamma:m,n,q,r``."""
    name, sep, params = text.partition(":")
    if not sep or name not in _SHAPE_ARITY:
        raise ValueError(f"unknown shape {text!r}; expected one of {sorted(_SHAPE_ARITY)}")
    try:
        args = [int(p) for p in params.split(",")]
    except ValueError:
        raise ValueError(f"shape parameters must be integers, got {params!r}") from None
    if len(args) != _SHAPE_ARITY[name]:
        raise ValueError(f"shape {name} takes {_SHAPE_ARITY[name]} parameters, got {len(args)}")
    if name == "edgeless":
        return Edgeless(*args)
    if name == "two-cliques":
        return TwoCliques(*args)
    if name == "two-cliques-isolated":
        return TwoCliquesPlusIsolated(*args)
    return gamma(*args)


def enumerate_descriptors(max_vertices: int, semiorder_only: bool = False) -> list[NicheClassDescriptor]:
    """Every descriptor with at most ``max_vertices`` vertices, in a fixed order."""
    found: list[NicheClassDescriptor] = [Edgeless(q) for q in range(1, max_vertices + 1)]
    for m in range(1, max_vertices + 1):
        for n in range(m, max_vertices + 1 - m):
            found.append(TwoCliques(m, n))
            for extra in range(1, max_vertices + 1 - m - n):
                found.append(TwoCliquesPlusIsolated(m, n, extra))
                for r in range(0, max_vertices + 1 - m - n - extra):
                    if r and semiorder_only:
                        break
                    found.append(Gamma(m, n, extra, r))
    return found


def build_from_descriptor(d: NicheClassDescriptor) -> UndirectedGraph:
    if isinstance(d, Edgeless):
        return edgeless(d.q)
    if isinstance(d, TwoCliques):
        return disjoint_union(complete(d.m), complete(d.n))
    if isinstance(d, TwoCliquesPlusIsolated):
        return disjoint_union(disjoint_union(complete(d.m), complete(d.n)), edgeless(d.q))
    if isinstance(d, Gamma):
        # complement(K_{m,n} ∪ I_q) numbered X, Y, Z; move Z between X and Y
        core = complement(disjoint_union(complete_bipartite(d.m, d.n), edgeless(d.q)))
        perm = (
            list(range(d.m))
            + [d.m + d.q + k for k in range(d.n)]
            + [d.m + k for k in range(d.q)]
        )
        return disjoint_union(core.permute(perm), edgeless(d.r))
    raise TypeError(f"not a niche class descriptor: {d!r}")


@dataclass(frozen=True)
class CompetitionClassDescriptor:
    """The graph K_r ∪ I_q."""

    r: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 0 or not (self.r >= 1 or (self.r == 0 and self.q >= 1)):
            raise ValueError(f"invalid K_r ∪ I_q parameters r={self.r}, q={self.q}")

    def graph(self) -> UndirectedGraph:
        return disjoint_union(complete(self.r), edgeless(self.q))

    def __str__(self) -> str:
        return f"K{self.r} ∪ I{self.q}"


def clique_plus_isolated_decompositions(g: UndirectedGraph) -> list[CompetitionClassDescriptor]:
    """Every (r, q) with K_r ∪ I_q equal to ``g``; the preferred one comes first."""
    if g.n == 0:
        return []
    big = [c for c in components(g) if len(c) >= 2]
    if len(big) > 1:
        return []
    if big:
        if not is_complete(g.induced(big[0])):
            return []
        return [CompetitionClassDescriptor(len(big[0]), g.n - len(big[0]))]
    return [CompetitionClassDescriptor(1, g.n - 1), CompetitionClassDescriptor(0, g.n)]


def decompose_clique_plus_isolated(g: UndirectedGraph) -> CompetitionClassDescriptor | None:
    found = clique_plus_isolated_decompositions(g)
    return found[0] if found else None


def classify_competition(g: UndirectedGraph) -> tuple[bool, CompetitionClassDescriptor | None]:
    """Competition graphs of semiorders (equivalently interval orders): K_r ∪ I_q, r >= 2 ⇒ q >= 1."""
    for d in clique_plus_isolated_decompositions(g):
        if d.r < 2 or d.q >= 1:
            return True, d
    return False, None


def classify_cce(g: UndirectedGraph) -> tuple[bool, CompetitionClassDescriptor | None]:
    """CCE graphs of semiorders (equivalently interval orders): K_r ∪ I_q, r >= 2 ⇒ q >= 2."""
    for d in clique_plus_isolated_decompositions(g):
        if d.r < 2 or d.q >= 2:
            return True, d
    return False, None


def decompose_gamma(g: UndirectedGraph) -> tuple[int, int, int, int] | None:
    """Read off (m, n, q, r) with g ≅ complement(K_{m,n} ∪ I_q) ∪ I_r, or None.

    r counts isolated vertices, q the universal vertices of what remains,
    and the rest must split into two nonempty cliques. A final rebuild guards
    the structural reading.
    """
    isolated = isolated_vertices(g)
    rest = [v for v in range(g.n) if v not in isolated]
    if not rest:
        return None
    h = g.induced(rest)
    z = universal_vertices(h)
    core = h.induced(v for v in range(h.n) if v not in z)
    parts = components(core)
    if len(parts) != 2 or not all(is_complete(core.induced(p)) for p in parts):
        return None
    m, n = sorted(len(p) for p in parts)
    params = (m, n, len(z), len(isolated))
    if not are_isomorphic(build_from_descriptor(gamma(*params)), g):
        return None
    return params


def two_clique_decompositions(g: UndirectedGraph) -> list[NicheClassDescriptor]:
    """All readings of ``g`` as K_m ∪ K_n or K_m ∪ K_n ∪ I_q.

    Singleton cliques are isolated vertices, so the spare isolated vertices
    can be promoted to K_1 blocks.
    """
    comps = components(g)
    big = [c for c in comps if len(c) >= 2]
    singles = len(comps) - len(big)
    if len(big) > 2 or not all(is_complete(g.induced(c)) for c in big):
        return []
    found: list[NicheClassDescriptor] = []
    promote = 2 - len(big)
    if singles >= promote:
        sizes = [len(c) for c in big] + [1] * promote
        left = singles - promote
        found.append(TwoCliques(*sizes) if left == 0 else TwoCliquesPlusIsolated(*sizes, left))
    return found


@dataclass(frozen=True)
class ClassificationVerdict:
    competition_semiorder: bool
    competition_interval: bool
    cce_semiorder: bool
    cce_interval: bool
    niche_semiorder: bool
    niche_interval: bool
    niche_descriptors: tuple[NicheClassDescriptor, ...] = field(default=())
    competition_descriptors: tuple[CompetitionClassDescriptor, ...] = field(default=())


def niche_descriptors(g: UndirectedGraph) -> list[NicheClassDescriptor]:
    """Every niche-graph shape that ``g`` matches (shapes overlap, e.g. I_2 = K_1 ∪ K_1)."""
    if g.n == 0:
        return []
    found: list[NicheClassDescriptor] = []
    if g.edge_count == 0:
        found.append(Edgeless(g.n))
    found.extend(two_clique_decompositions(g))
    params = decompose_gamma(g)
    if params is not None:
        d = gamma(*params)
        if d not in found:
            found.append(d)
    return found


def classify_niche(g: UndirectedGraph) -> ClassificationVerdict:
    """Verdicts for all four characterizations, with every matching decomposition."""
    shapes = niche_descriptors(g)
    competition_ok, _ = classify_competition(g)
    cce_ok, _ = classify_cce(g)
    return ClassificationVerdict(
        competition_semiorder=competition_ok,
        competition_interval=competition_ok,
        cce_semiorder=cce_ok,
        cce_interval=cce_ok,
        niche_semiorder=any(d.is_semiorder_shape for d in shapes),
        niche_interval=bool(shapes),
        niche_descriptors=tuple(shapes),
        competition_descriptors=tuple(clique_plus_isolated_decompositions(g)),
    )
