"""Uniform hypergraphs, their generating polynomials, and file formats.

A rank-m hypergraph is a sorted vertex list plus a set of m-element edges.
Its generating polynomial is the sum of the squarefree edge monomials, so
hypergraphs and multilinear 0/1 polynomials convert back and forth exactly.

Two serializations are supported: a plain text format

    rank 3
    vertices 0 1 2
    0 1 2

with one sorted edge per line in lexicographic order, and the equivalent
JSON object {"rank": m, "vertices": [...], "edges": [[...], ...]}.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Sequence

from .polyalg import SparsePoly, monomial_text


class NonSquarefreeError(ValueError):
    """A monomial with a repeated variable cannot describe an edge."""

    def __init__(self, monomial_str: str) -> None:
        super().__init__(f"monomial {monomial_str} is not squarefree")
        self.monomial = monomial_str


class BadCoefficientError(ValueError):
    """Edge monomials must carry coefficient exactly 1."""

    def __init__(self, monomial_str: str, coefficient: int) -> None:
        super().__init__(f"monomial {monomial_str} has coefficient {coefficient}, expected 1")
        self.monomial = monomial_str
        self.coefficient = coefficient


class WrongDegreeError(ValueError):
    """Edge monomials must have total degree equal to the rank."""

    def __init__(self, monomial_str: str, degree: int, rank: int) -> None:
        super().__init__(f"monomial {monomial_str} has degree {degree}, expected {rank}")
        self.monomial = monomial_str
        self.degree = degree


class UnknownVertexError(KeyError):
    def __init__(self, vertex: int) -> None:
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self) -> str:
        return f"vertex {self.vertex} is not in the hypergraph"


class Hypergraph:
    """Immutable uniform hypergraph with a deterministic edge order."""

    __slots__ = ("rank", "vertices", "edges")

    def __init__(self, rank: int, vertices: Iterable[int], edges: Iterable[Sequence[int]]) -> None:
        if not isinstance(rank, int) or rank < 2:
            raise ValueError(f"rank must be an int >= 2, got {rank!r}")
        verts = tuple(sorted(vertices))
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertices")
        if any(v < 0 for v in verts):
            raise ValueError("vertices must be nonnegative integers")
        vset = set(verts)
        norm = []
        for edge in edges:
            e = tuple(sorted(edge))
            if len(e) != rank or len(set(e)) != rank:
                raise ValueError(f"edge {edge!r} is not a {rank}-element set")
            for v in e:
                if v not in vset:
                    raise UnknownVertexError(v)
            norm.append(e)
        ordered = tuple(sorted(norm))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a!r}")
        self.rank = rank
        self.vertices = verts
        self.edges = ordered

    # -- basic protocol -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.rank, self.vertices, self.edges) == (other.rank, other.vertices, other.edges)

    def __hash__(self) -> int:
        return hash((self.rank, self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(rank={self.rank}, vertices={len(self.vertices)}, edges={len(self.edges)})"

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def relabel(self, mapping: Mapping[int, int]) -> "Hypergraph":
        """Relabel vertices through an injective map covering every vertex."""
        missing = [v for v in self.vertices if v not in mapping]
        if missing:
            raise UnknownVertexError(missing[0])
        imgs = [mapping[v] for v in self.vertices]
        if len(set(imgs)) != len(imgs):
            raise ValueError("relabeling is not injective")
        return Hypergraph(self.rank, imgs, [tuple(mapping[v] for v in e) for e in self.edges])

    # -- text format ----------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"rank {self.rank}", "vertices " + " ".join(str(v) for v in self.vertices)]
        lines.extend(" ".join(str(v) for v in e) for e in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Hypergraph":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) < 2:
            raise ValueError("hypergraph text needs a rank line and a vertices line")
        if not lines[0].startswith("rank "):
            raise ValueError(f"line 1 must be 'rank m', got {lines[0]!r}")
        try:
            rank = int(lines[0].split()[1])
        except (IndexError, ValueError):
            raise ValueError(f"unparseable rank line: {lines[0]!r}") from None
        head = lines[1].split()
        if head[0] != "vertices":
            raise ValueError(f"line 2 must start with 'vertices', got {lines[1]!r}")
        try:
            vertices = [int(tok) for tok in head[1:]]
            edges = [[int(tok) for tok in ln.split()] for ln in lines[2:]]
        except ValueError:
            raise ValueError("non-integer token in hypergraph text") from None
        return cls(rank, vertices, edges)

    # -- JSON format ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "Hypergraph":
        try:
            return cls(data["rank"], data["vertices"], data["edges"])
        except KeyError as exc:
            raise ValueError(f"missing key {exc.args[0]!r} in hypergraph JSON") from None

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        return cls.from_json_dict(json.loads(text))


def lagrangian_of(hypergraph: Hypergraph) -> SparsePoly:
    """Sum of the squarefree edge monomials."""
    terms = {tuple((v, 1) for v in edge): 1 for edge in hypergraph.edges}
    return SparsePoly(terms)


def hypergraph_from_lagrangian(poly: SparsePoly, rank: int) -> Hypergraph:
    """Read a hypergraph off a multilinear 0/1 generating polynomial.

    The vertex list is the union of edge supports.  Raises a named error
    identifying the first offending monomial in canonical order when the
    polynomial is not a sum of distinct squarefree degree-`rank` monomials
    with coefficient 1.
    """
    edges = []
    for mono, coef in poly.monomials():
        text = monomial_text(mono)
        if any(e != 1 for _, e in mono):
            raise NonSquarefreeError(text)
        if sum(e for _, e in mono) != rank:
            raise WrongDegreeError(text, sum(e for _, e in mono), rank)
        if coef != 1:
            raise BadCoefficientError(text, coef)
        edges.append(tuple(v for v, _ in mono))
    vertices = sorted({v for e in edges for v in e})
    return Hypergraph(rank, vertices, edges)
