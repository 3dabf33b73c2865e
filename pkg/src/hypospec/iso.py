"""Canonical labeling, isomorphism, decks, and hypomorphism for hypergraphs.

The canonical form is computed by iterated partition refinement on vertex
invariants followed by individualization and complete backtracking: every
branch is explored, the lexicographically smallest relabeled edge list wins,
and the number of leaves that attain it is exactly the automorphism count.
Labels in a canonical form are 1..num_vertices.

The search is exact at any size but exhaustive, so a size bound (default 33
vertices) guards against accidental huge inputs; callers can raise it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .hypergraph import Hypergraph, UnknownVertexError

SIZE_BOUND = 33


class SizeBoundExceededError(ValueError):
    def __init__(self, size: int, bound: int) -> None:
        super().__init__(f"{size} vertices exceeds the size bound {bound}; pass size_bound to raise it")
        self.size = size
        self.bound = bound


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical relabeling of a hypergraph.

    edges: canonical edge list over labels 1..size, lexicographically sorted.
    witness: input vertex -> canonical label.
    automorphism_count: order of the automorphism group of the input.
    """

    rank: int
    size: int
    edges: tuple[tuple[int, ...], ...]
    witness: dict[int, int]
    automorphism_count: int

    def key(self) -> tuple:
        return (self.rank, self.size, self.edges)

    def hypergraph(self) -> Hypergraph:
        return Hypergraph(self.rank, range(1, self.size + 1), self.edges)

    def text(self) -> str:
        return self.hypergraph().to_text()


def _check_size(hypergraph: Hypergraph, size_bound: int) -> None:
    if len(hypergraph.vertices) > size_bound:
        raise SizeBoundExceededError(len(hypergraph.vertices), size_bound)


def _refine(cells: tuple[tuple[int, ...], ...], edge_list: list[tuple[int, ...]],
            incidence: list[list[int]], n: int) -> tuple[tuple[int, ...], ...]:
    """Split cells by edge cell-profile until stable.  Refinement is
    isomorphism-invariant, which is what makes the leaf count equal |Aut|."""
    while True:
        cell_of = [0] * n
        for ci, cell in enumerate(cells):
            for p in cell:
                cell_of[p] = ci
        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for p in cell:
                profile = tuple(sorted(
                    tuple(sorted(cell_of[q] for q in edge_list[ei])) for ei in incidence[p]))
                groups.setdefault(profile, []).append(p)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for profile in sorted(groups):
                    new_cells.append(tuple(sorted(groups[profile])))
        if not changed:
            return cells
        cells = tuple(new_cells)


def canonical_form(hypergraph: Hypergraph, *, size_bound: int = SIZE_BOUND) -> CanonicalForm:
    _check_size(hypergraph, size_bound)
    verts = hypergraph.vertices
    n = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    edge_list = [tuple(index[v] for v in e) for e in hypergraph.edges]
    incidence: list[list[int]] = [[] for _ in range(n)]
    for ei, e in enumerate(edge_list):
        for p in e:
            incidence[p].append(ei)

    best: tuple | None = None
    best_labels: list[int] | None = None
    best_count = 0

    def visit(cells: tuple[tuple[int, ...], ...]) -> None:
        nonlocal best, best_labels, best_count
        cells = _refine(cells, edge_list, incidence, n)
        target = None
        for ci, cell in enumerate(cells):
            if len(cell) > 1:
                target = ci
                break
        if target is None:
            label = [0] * n
            for li, cell in enumerate(cells):
                label[cell[0]] = li + 1
            candidate = tuple(sorted(tuple(sorted(label[p] for p in e)) for e in edge_list))
            if best is None or candidate < best:
                best = candidate
                best_labels = label
                best_count = 1
            elif candidate == best:
                best_count += 1
            return
        cell = cells[target]
        for p in cell:
            rest = tuple(q for q in cell if q != p)
            visit(cells[:target] + ((p,), rest) + cells[target + 1:])

    if n == 0:
        return CanonicalForm(hypergraph.rank, 0, (), {}, 1)
    visit((tuple(range(n)),))
    assert best is not None and best_labels is not None
    witness = {verts[p]: best_labels[p] for p in range(n)}
    return CanonicalForm(hypergraph.rank, n, best, witness, best_count)


def automorphism_count(hypergraph: Hypergraph, *, size_bound: int = SIZE_BOUND) -> int:
    return canonical_form(hypergraph, size_bound=size_bound).automorphism_count


def are_isomorphic(first: Hypergraph, second: Hypergraph, *,
                   size_bound: int = SIZE_BOUND) -> tuple[bool, dict[int, int] | None]:
    """Decide isomorphism; on success also return a vertex bijection witness."""
    if first.rank != second.rank or first.num_vertices != second.num_vertices \
            or first.num_edges != second.num_edges:
        return False, None
    cf = canonical_form(first, size_bound=size_bound)
    cg = canonical_form(second, size_bound=size_bound)
    if cf.key() != cg.key():
        return False, None
    inverse = {label: v for v, label in cg.witness.items()}
    witness = {v: inverse[cf.witness[v]] for v in first.vertices}
    return True, witness


def delete_vertex(hypergraph: Hypergraph, vertex: int) -> Hypergraph:
    """Remove a vertex and every edge through it (vertex-deleted subhypergraph)."""
    if vertex not in set(hypergraph.vertices):
        raise UnknownVertexError(vertex)
    return Hypergraph(hypergraph.rank,
                      (v for v in hypergraph.vertices if v != vertex),
                      (e for e in hypergraph.edges if vertex not in e))


@dataclass(frozen=True)
class Deck:
    """All vertex-deleted canonical forms, tagged by the deleted vertex."""

    entries: tuple[tuple[int, CanonicalForm], ...]

    def key(self) -> tuple:
        return tuple(sorted(cf.key() for _, cf in self.entries))

    def __iter__(self) -> Iterator[tuple[int, CanonicalForm]]:
        return iter(self.entries)

    def to_json_list(self) -> list[dict]:
        return [{"deleted": v, "canonical": cf.text()} for v, cf in self.entries]


def deck(hypergraph: Hypergraph, *, size_bound: int = SIZE_BOUND) -> Deck:
    _check_size(hypergraph, size_bound)
    return Deck(tuple(
        (v, canonical_form(delete_vertex(hypergraph, v), size_bound=size_bound))
        for v in hypergraph.vertices))


def hypomorphic(first: Hypergraph, second: Hypergraph, *,
                size_bound: int = SIZE_BOUND) -> tuple[bool, dict[int, int] | None]:
    """Deck multiset equality; on success returns eta with H-v iso to G-eta(v)."""
    if first.rank != second.rank or first.num_vertices != second.num_vertices:
        return False, None
    deck_f = deck(first, size_bound=size_bound)
    deck_g = deck(second, size_bound=size_bound)
    if deck_f.key() != deck_g.key():
        return False, None
    by_key: dict[tuple, list[int]] = {}
    for v, cf in deck_g:
        by_key.setdefault(cf.key(), []).append(v)
    for targets in by_key.values():
        targets.sort()
    eta: dict[int, int] = {}
    taken: dict[tuple, int] = {}
    for v, cf in sorted(deck_f, key=lambda item: (item[1].key(), item[0])):
        k = cf.key()
        eta[v] = by_key[k][taken.get(k, 0)]
        taken[k] = taken.get(k, 0) + 1
    return True, eta
