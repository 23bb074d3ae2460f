"""Prufer-style codec between rooted uniform-hypertree forests and 4-tuples.

A forest on n = s*(b-1) + k + 1 vertices with s hyperedges of size b and
k+1 roots is represented by the 4-tuple (roots, final_root, blocks, links):

* roots: the k+1 root labels,
* final_root: one distinguished root (present exactly when s >= 1),
* blocks: an unordered partition of the n - k - 1 non-root vertices into
  s blocks of b-1 labels each,
* links: a sequence of s-1 labels, repeats allowed, drawn from 1..n.

Encoding prunes the forest one leaf block at a time, always the block with
the smallest label among the current leaves, recording the block and its
link vertex.  The link recorded by the last round is always a root; it is
removed from the link sequence and kept as final_root, which leaves s-1
links.  Decoding replays the construction: at each step it takes the
unused block with the smallest label none of whose vertices occurs in the
not-yet-consumed part of the link sequence (the entry being consumed
counts as not yet consumed), joins it with the current link to form a
hyperedge, and finally closes the last block with final_root.

Both directions run in O((n + s) log s) time using a heap of ready blocks,
and the pair of maps is a bijection between valid forests and valid codes
of the same shape.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import InvalidStructureError, InvariantViolation, ParameterRangeError
from .forest import (
    Hyperedge,
    RootedForest,
    ValidationReport,
    VertexId,
    ensure_valid,
)

Block = tuple[VertexId, ...]


@dataclass(frozen=True)
class ForestShape:
    """Shape parameters of a forest: edge size b, edge count s, k+1 trees.

    The vertex count n = s*(b-1) + k + 1 is derived; it satisfies n >= b
    automatically whenever s >= 1.  Requires b >= 2, s >= 0, k >= 0.
    """

    b: int
    s: int
    k: int

    def __post_init__(self) -> None:
        if self.b < 2:
            raise ParameterRangeError(f"edge size b={self.b} must be at least 2")
        if self.s < 0:
            raise ParameterRangeError(f"edge count s={self.s} must be at least 0")
        if self.k < 0:
            raise ParameterRangeError(f"tree parameter k={self.k} must be at least 0")

    @property
    def n(self) -> int:
        return self.s * (self.b - 1) + self.k + 1


@dataclass(frozen=True)
class ForestCode:
    """The 4-tuple code of a forest.  Serialised with keys R, r, P, N.

    Canonical form: roots ascending, each block ascending, blocks ordered by
    their smallest label, links kept in sequence order.  The constructor
    only canonicalises; use :func:`validate_code` for the structural rules.
    """

    shape: ForestShape
    roots: tuple[VertexId, ...]
    final_root: VertexId | None
    blocks: tuple[Block, ...]
    links: tuple[VertexId, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "roots", tuple(sorted(self.roots)))
        object.__setattr__(
            self, "blocks", tuple(sorted(tuple(sorted(blk)) for blk in self.blocks))
        )
        object.__setattr__(self, "links", tuple(self.links))


def validate_code(code: ForestCode) -> ValidationReport:
    """Check every code invariant and report all violations.

    Rules: exactly k+1 distinct roots in 1..n; final_root present and a root
    exactly when s >= 1; blocks form a partition of the non-root labels into
    s blocks of b-1; links has max(s-1, 0) entries, each in 1..n.
    """
    shape = code.shape
    b, s, k, n = shape.b, shape.s, shape.k, shape.n
    violations: list[str] = []

    roots = code.roots
    if len(roots) != k + 1:
        violations.append(f"expected {k + 1} roots, found {len(roots)}")
    if len(set(roots)) != len(roots):
        violations.append("repeated root label")
    for r in roots:
        if r < 1 or r > n:
            violations.append(f"root {r} outside 1..{n}")

    if s == 0:
        if code.final_root is not None:
            violations.append("final root must be absent when s=0")
    elif code.final_root is None:
        violations.append("final root is required when s>=1")
    elif code.final_root not in roots:
        violations.append(f"final root {code.final_root} is not a root")

    if len(code.blocks) != s:
        violations.append(f"expected {s} blocks, found {len(code.blocks)}")
    seen: set[int] = set()
    overlap = False
    for blk in code.blocks:
        if len(blk) != b - 1:
            violations.append(f"block {list(blk)}: has {len(blk)} labels, expected {b - 1}")
        for v in blk:
            if v < 1 or v > n:
                violations.append(f"block label {v} outside 1..{n}")
            elif v in seen:
                overlap = True
            else:
                seen.add(v)
    if overlap:
        violations.append("blocks are not disjoint")
    root_set = set(roots)
    if seen & root_set:
        violations.append("a root label appears inside a block")
    elif not overlap and seen != set(range(1, n + 1)) - root_set:
        violations.append("blocks do not cover every non-root label exactly once")

    expected_links = max(s - 1, 0)
    if len(code.links) != expected_links:
        violations.append(
            f"expected {expected_links} links, found {len(code.links)}"
        )
    for v in code.links:
        if v < 1 or v > n:
            violations.append(f"link {v} outside 1..{n}")

    return ValidationReport(not violations, tuple(violations), s, k)


def ensure_valid_code(code: ForestCode) -> None:
    """Raise InvalidStructureError unless the code validates cleanly."""
    report = validate_code(code)
    if not report.valid:
        raise InvalidStructureError("invalid code: " + "; ".join(report.violations))


def encode_forest(forest: RootedForest) -> ForestCode:
    """Encode a valid forest as its 4-tuple code.

    Repeatedly removes the leaf block with the smallest label, appending the
    block and its link vertex; after s rounds the last recorded link, always
    a root, becomes final_root.  A heap keyed by smallest block label keeps
    each round at O(b + log s): an edge enters the heap exactly once, when
    the count of its anchor vertices (roots or vertices with more than one
    incident edge) first drops to one.
    """
    ensure_valid(forest)
    n, b, edges, roots = forest.n, forest.b, forest.edges, forest.roots
    s = len(edges)
    shape = ForestShape(b=b, s=s, k=len(roots) - 1)

    if s == 0:
        return ForestCode(shape, roots, None, (), ())

    # live_edge_sum[v] holds the sum of the ids of live edges containing v;
    # when only one live edge is left at v, the sum names that edge directly.
    incidence = [0] * (n + 1)
    live_edge_sum = [0] * (n + 1)
    for i, e in enumerate(edges):
        for v in e:
            incidence[v] += 1
            live_edge_sum[v] += i
    is_root = bytearray(n + 1)
    for r in roots:
        is_root[r] = 1

    # heap entries are key * s + edge_id so comparisons stay single-int
    anchors = [0] * s
    heap: list[int] = []
    for i, e in enumerate(edges):
        c = 0
        key = 0
        for v in e:
            if is_root[v] or incidence[v] > 1:
                c += 1
            elif not key:
                key = v
        anchors[i] = c
        if c == 1:
            heap.append(key * s + i)
    heapq.heapify(heap)
    heappush, heappop = heapq.heappush, heapq.heappop

    removal_blocks: list[Block] = []
    links: list[VertexId] = []
    record_block = removal_blocks.append
    record_link = links.append
    for _ in range(s):
        if not heap:
            raise InvariantViolation(
                "pruning found no leaf block in a validated forest"
            )
        i = heappop(heap) % s
        link = -1
        block = []
        for v in edges[i]:
            if is_root[v] or incidence[v] > 1:
                link = v
            else:
                block.append(v)
                incidence[v] = 0
        record_link(link)
        record_block(tuple(block))
        incidence[link] -= 1
        live_edge_sum[link] -= i
        if incidence[link] == 1 and not is_root[link]:
            j = live_edge_sum[link]
            anchors[j] -= 1
            if anchors[j] == 1:
                key = 0
                for u in edges[j]:
                    if not is_root[u] and incidence[u] == 1:
                        key = u
                        break
                heappush(heap, key * s + j)

    final_root = links.pop()
    if not is_root[final_root]:
        raise InvariantViolation(
            f"last pruned link {final_root} is not a root"
        )
    return ForestCode(shape, roots, final_root, tuple(removal_blocks), tuple(links))


def decode_code(code: ForestCode) -> RootedForest:
    """Decode a valid 4-tuple code back into its forest.

    Walks the link sequence left to right.  At each step the hyperedge is
    the current link joined with the unused block of smallest label whose
    vertices are all absent from the remaining links, the current entry
    included; the last block is closed with final_root instead.  Block
    readiness is tracked by counting, per block, how many of its vertices
    still occur in the unconsumed links; a block enters the ready heap when
    that count reaches zero.  At least one block is always ready: the u
    unused blocks are pairwise disjoint, so the u-1 or fewer remaining link
    entries can block at most u-1 of them.
    """
    ensure_valid_code(code)
    shape = code.shape
    b, s, k, n = shape.b, shape.s, shape.k, shape.n
    roots = code.roots

    if s == 0:
        return decoded_forest(n, b, [], roots)

    blocks, links = code.blocks, code.links
    occurrences = [0] * (n + 1)
    for v in links:
        occurrences[v] += 1
    block_of = [-1] * (n + 1)
    for j, blk in enumerate(blocks):
        for v in blk:
            block_of[v] = j

    # heap entries are smallest_label * s + block_id, single-int comparisons
    pending = [0] * s
    heap: list[int] = []
    for j, blk in enumerate(blocks):
        c = 0
        for v in blk:
            if occurrences[v]:
                c += 1
        pending[j] = c
        if c == 0:
            heap.append(blk[0] * s + j)
    heapq.heapify(heap)
    heappush, heappop = heapq.heappush, heapq.heappop

    edges: list[Hyperedge] = []
    record_edge = edges.append
    for t in range(s - 1):
        if not heap:
            raise InvariantViolation(
                "no block is ready although the code validated; "
                f"step {t + 1} of {s}"
            )
        j = heappop(heap) % s
        v = links[t]
        record_edge(tuple(sorted(blocks[j] + (v,))))
        occurrences[v] -= 1
        if occurrences[v] == 0:
            bj = block_of[v]
            if bj >= 0:
                pending[bj] -= 1
                if pending[bj] == 0:
                    heappush(heap, blocks[bj][0] * s + bj)

    if not heap:
        raise InvariantViolation("the final block is not ready")
    j = heappop(heap) % s
    record_edge(tuple(sorted(blocks[j] + (code.final_root,))))
    if heap:
        raise InvariantViolation("more than one block left after decoding")

    return decoded_forest(n, b, edges, roots)


def decoded_forest(
    n: int, b: int, edges: list[Hyperedge], roots: tuple[VertexId, ...]
) -> RootedForest:
    """Build the decoder's output forest and mark it as known valid."""
    forest = RootedForest(n=n, b=b, edges=tuple(edges), roots=roots)
    object.__setattr__(forest, "_known_valid", True)
    return forest
