"""Labelled rooted uniform hypergraph forests and their structural checks.

A forest here is a hypergraph on vertices 1..n whose hyperedges all have b
vertices, together with one distinguished root vertex per connected
component.  The excess of a connected hypergraph is sum(|e| - 1) over its
hyperedges minus its vertex count; a component is a hypertree exactly when
its excess is -1, and a forest is a hypergraph all of whose components are
hypertrees.  With s hyperedges and k+1 components the vertex count satisfies
n = s*(b-1) + k + 1.

All values are immutable and hash/compare structurally, so they are safe to
share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidStructureError

VertexId = int
Hyperedge = tuple[VertexId, ...]


@dataclass(frozen=True)
class RootedForest:
    """A b-uniform hypergraph on 1..n with one root per intended component.

    The constructor canonicalises: each edge is stored as an ascending tuple,
    the edge list is sorted lexicographically, roots are sorted ascending.
    Duplicate hyperedges are rejected outright.  Every other invariant
    (uniform edge size, labels in range, component excess -1, exactly one
    root per component) is checked by :func:`validate_forest`, so invalid
    values can be constructed, inspected, and reported on.
    """

    n: int
    b: int
    edges: tuple[Hyperedge, ...]
    roots: tuple[VertexId, ...]

    def __post_init__(self) -> None:
        edges = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        for i in range(1, len(edges)):
            if edges[i] == edges[i - 1]:
                raise InvalidStructureError(
                    f"duplicate hyperedge {list(edges[i])}: edges form a set"
                )
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "roots", tuple(sorted(self.roots)))
        object.__setattr__(self, "_known_valid", False)

    @property
    def s(self) -> int:
        """Number of hyperedges."""
        return len(self.edges)

    @property
    def k(self) -> int:
        """One less than the number of roots (and of intended components)."""
        return len(self.roots) - 1


@dataclass(frozen=True)
class Component:
    """One connected component: its vertices, edges, excess, and root count."""

    vertices: tuple[VertexId, ...]
    edges: tuple[Hyperedge, ...]
    excess: int
    root_count: int


@dataclass(frozen=True)
class ComponentReport:
    """Connected components of a forest, ordered by smallest vertex label."""

    components: tuple[Component, ...]

    def __iter__(self) -> Iterator[Component]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural validation.

    ``violations`` lists every broken rule in human-readable form; ``valid``
    is True only when the list is empty.  ``s`` and ``k`` echo the edge count
    and the root count minus one of the checked value.
    """

    valid: bool
    violations: tuple[str, ...]
    s: int
    k: int


@dataclass(frozen=True)
class LeafBlock:
    """A prunable leaf of a forest.

    ``block`` holds the b-1 non-root vertices of ``edge`` that lie in no
    other hyperedge; ``link`` is the one remaining vertex of the edge, the
    vertex through which the edge hangs off the rest of its tree.
    """

    block: tuple[VertexId, ...]
    link: VertexId
    edge: Hyperedge


def _edge_violations(n: int, b: int, edges: Iterable[Hyperedge]) -> list[str]:
    """Well-formedness problems of individual edges (size, range, repeats)."""
    problems = []
    for e in edges:
        if len(e) != b:
            problems.append(f"edge {list(e)}: has {len(e)} vertices, expected b={b}")
        if len(set(e)) != len(e):
            problems.append(f"edge {list(e)}: repeated vertex label")
        if e and (e[0] < 1 or e[-1] > n):
            problems.append(f"edge {list(e)}: vertex label outside 1..{n}")
    return problems


def _union_find_components(n: int, edges: tuple[Hyperedge, ...]) -> list[int]:
    """Per-vertex component representative, computed by union-find."""
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        r0 = find(e[0])
        for v in e[1:]:
            r1 = find(v)
            if r1 != r0:
                parent[r1] = r0
    return [find(v) for v in range(n + 1)]


def component_decomposition(forest: RootedForest) -> ComponentReport:
    """Split a forest into connected components with excess and root counts.

    Isolated vertices form singleton components of excess -1.  Raises
    InvalidStructureError when a hyperedge is malformed (wrong size, label
    out of 1..n, repeated label inside the edge); all component-level rules
    are reported, not raised, by :func:`validate_forest`.
    """
    n, b, edges = forest.n, forest.b, forest.edges
    if n < 1:
        raise InvalidStructureError(f"vertex count n={n} must be at least 1")
    problems = _edge_violations(n, b, edges)
    if problems:
        raise InvalidStructureError("malformed hyperedge: " + "; ".join(problems))

    rep = _union_find_components(n, edges)
    root_set = set(forest.roots)
    vertices_by_rep: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        vertices_by_rep.setdefault(rep[v], []).append(v)
    edges_by_rep: dict[int, list[Hyperedge]] = {}
    for e in edges:
        edges_by_rep.setdefault(rep[e[0]], []).append(e)

    components = []
    for r in sorted(vertices_by_rep, key=lambda r: vertices_by_rep[r][0]):
        verts = vertices_by_rep[r]
        comp_edges = tuple(edges_by_rep.get(r, ()))
        excess = sum(len(e) - 1 for e in comp_edges) - len(verts)
        root_count = sum(1 for v in verts if v in root_set)
        components.append(
            Component(tuple(verts), comp_edges, excess, root_count)
        )
    return ComponentReport(tuple(components))


def validate_forest(forest: RootedForest) -> ValidationReport:
    """Check every forest invariant and report all violations.

    Rules: n >= 1 and b >= 2; every edge has b distinct labels in 1..n;
    roots are distinct labels in 1..n; n = s*(b-1) + k + 1; every component
    has excess -1 and contains exactly one root; no two hyperedges share
    more than one vertex.  Never raises.
    """
    n, b, edges, roots = forest.n, forest.b, forest.edges, forest.roots
    s, k = forest.s, forest.k
    violations: list[str] = []

    if n < 1:
        violations.append(f"vertex count n={n} must be at least 1")
    if b < 2:
        violations.append(f"uniformity b={b} must be at least 2")
    violations.extend(_edge_violations(max(n, 0), b, edges))
    for i in range(1, len(roots)):
        if roots[i] == roots[i - 1]:
            violations.append(f"repeated root {roots[i]}")
    for r in roots:
        if r < 1 or r > n:
            violations.append(f"root {r} outside 1..{n}")
    if not roots:
        violations.append("at least one root is required")
    if violations:
        # component analysis is meaningless on malformed input
        return ValidationReport(False, tuple(violations), s, k)

    if n != s * (b - 1) + k + 1:
        violations.append(
            f"vertex count n={n} differs from s(b-1)+k+1={s * (b - 1) + k + 1}"
        )

    rep = _union_find_components(n, edges)
    excess: dict[int, int] = {}
    root_count: dict[int, int] = {}
    min_vertex: dict[int, int] = {}
    for v in range(1, n + 1):
        r = rep[v]
        excess[r] = excess.get(r, 0) - 1
        if r not in min_vertex:
            min_vertex[r] = v
    for e in edges:
        excess[rep[e[0]]] += len(e) - 1
    for v in roots:
        r = rep[v]
        root_count[r] = root_count.get(r, 0) + 1
    for r in sorted(excess, key=min_vertex.get):
        if excess[r] != -1:
            violations.append(
                f"component containing vertex {min_vertex[r]} has excess "
                f"{excess[r]}, expected -1"
            )
        c = root_count.get(r, 0)
        if c != 1:
            violations.append(
                f"component containing vertex {min_vertex[r]} has {c} roots, "
                f"expected exactly 1"
            )

    seen_pairs: set[int] = set()
    stride = n + 1
    for e in edges:
        for i in range(len(e)):
            for j in range(i + 1, len(e)):
                key = e[i] * stride + e[j]
                if key in seen_pairs:
                    violations.append(
                        f"vertices {e[i]} and {e[j]} appear together in more "
                        f"than one hyperedge"
                    )
                else:
                    seen_pairs.add(key)

    valid = not violations
    if valid:
        object.__setattr__(forest, "_known_valid", True)
    return ValidationReport(valid, tuple(violations), s, k)


def ensure_valid(forest: RootedForest) -> None:
    """Raise InvalidStructureError unless the forest validates cleanly."""
    if getattr(forest, "_known_valid", False):
        return
    report = validate_forest(forest)
    if not report.valid:
        raise InvalidStructureError(
            "invalid forest: " + "; ".join(report.violations)
        )


def leaf_blocks(forest: RootedForest) -> list[LeafBlock]:
    """Current leaf blocks of a valid forest, ordered by smallest block label.

    A hyperedge contributes a leaf block when exactly b-1 of its vertices are
    non-root and incident to no other hyperedge; those b-1 vertices form the
    block and the remaining vertex is the link.  Distinct blocks are disjoint
    because block members lie in a single edge each.
    """
    ensure_valid(forest)
    n = forest.n
    incidence = [0] * (n + 1)
    for e in forest.edges:
        for v in e:
            incidence[v] += 1
    is_root = [False] * (n + 1)
    for r in forest.roots:
        is_root[r] = True

    found = []
    for e in forest.edges:
        block = [v for v in e if incidence[v] == 1 and not is_root[v]]
        if len(block) == len(e) - 1:
            link = next(v for v in e if incidence[v] > 1 or is_root[v])
            found.append(LeafBlock(tuple(block), link, e))
    found.sort(key=lambda lb: lb.block[0])
    return found
