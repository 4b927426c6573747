"""Labeled acyclic multi-vertex graphs and their composition algebra.

A graph is a sequence of vertices, each carrying ordered in-ports and
out-ports.  Ports have integer labels that are unique within the graph (the
full label set is exactly ``0..P-1`` for ``P`` ports), which makes every line
distinguishable.  An edge joins one out-port to one in-port; ports not in any
edge dangle, gray on the in side and white on the out side.  Directedness is
inherited from the ports and cycles are excluded.

Composition of ``g1`` with ``g2`` picks a partial matching between the
dangling in-ports of ``g1`` and the dangling out-ports of ``g2`` and adds one
edge per matched pair, so every new edge runs from ``g2`` into ``g1`` and
acyclicity is preserved by construction.  The number of compositions is

    sum over i in 0..min(|gray1|, |white2|) of  i! * C(|gray1|, i) * C(|white2|, i)

and projecting each composition down to its dangling-line counts reproduces
the closed-form product of :mod:`laddergraphs.ladder` term by term.  That
projection (:func:`project_sum`) is an algebra homomorphism and the bridge
between the two representations.

Port labels are assigned at vertex creation and never collide: the right
operand of a composition is embedded by shifting its labels up by the left
operand's port count.  The shift is order-preserving and additive, so label
assignment commutes with reassociating products and canonical encodings are
stable across runs with no global state.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations, islice, permutations
from math import comb, factorial
from typing import Iterable, Iterator, Mapping

from .ladder import Letter, NormalMonomial, NormalPolynomial, Word
from .scalars import GaussianRational, ScalarLike

Matching = tuple[tuple[int, int], ...]  # (gray in-port of g1, white out-port of g2) pairs


@dataclass(frozen=True, slots=True)
class Vertex:
    """One vertex: ordered in-port labels and ordered out-port labels."""

    in_ports: tuple[int, ...]
    out_ports: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class DiagGraph:
    """Immutable labeled graph; equality is labeled-structure equality.

    ``edges`` are (out-port, in-port) pairs, stored sorted.  ``dangling_in``
    and ``dangling_out`` list the unmatched in-ports (gray spots) and
    out-ports (white spots) in a significant order.
    """

    vertices: tuple[Vertex, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()
    dangling_in: tuple[int, ...] = ()
    dangling_out: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        self._validate()

    # -- structure ----------------------------------------------------------

    @property
    def port_count(self) -> int:
        return sum(len(v.in_ports) + len(v.out_ports) for v in self.vertices)

    def port_owners(self) -> tuple[dict[int, int], dict[int, int]]:
        """Maps in-port label -> vertex index and out-port label -> vertex index."""
        in_owner: dict[int, int] = {}
        out_owner: dict[int, int] = {}
        for idx, v in enumerate(self.vertices):
            for p in v.in_ports:
                in_owner[p] = idx
            for p in v.out_ports:
                out_owner[p] = idx
        return in_owner, out_owner

    def _validate(self) -> None:
        in_owner, out_owner = self.port_owners()
        labels = sorted(in_owner) + sorted(out_owner)
        if len(labels) != self.port_count or sorted(labels) != list(range(len(labels))):
            raise ValueError("port labels must be distinct and form a contiguous 0..P-1 range")
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be stored in sorted order")
        used_out: set[int] = set()
        used_in: set[int] = set()
        for out_p, in_p in self.edges:
            if out_p not in out_owner or in_p not in in_owner:
                raise ValueError(f"edge ({out_p}, {in_p}) references unknown ports")
            if out_p in used_out or in_p in used_in:
                raise ValueError("a port may belong to at most one edge")
            used_out.add(out_p)
            used_in.add(in_p)
        if sorted(self.dangling_in) != sorted(set(in_owner) - used_in):
            raise ValueError("dangling_in must list exactly the unmatched in-ports")
        if sorted(self.dangling_out) != sorted(set(out_owner) - used_out):
            raise ValueError("dangling_out must list exactly the unmatched out-ports")
        if __debug__ and self.has_cycle():
            raise ValueError("graph contains a closed path")

    def has_cycle(self) -> bool:
        """Explicit cycle search over the vertex-level directed graph."""
        in_owner, out_owner = self.port_owners()
        succ: dict[int, set[int]] = {i: set() for i in range(len(self.vertices))}
        for out_p, in_p in self.edges:
            succ[out_owner[out_p]].add(in_owner[in_p])
        # Iterative three-color depth-first search.
        WHITE, GRAY, BLACK = 0, 1, 2
        color = dict.fromkeys(succ, WHITE)
        for start in succ:
            if color[start] != WHITE:
                continue
            stack: list[tuple[int, Iterator[int]]] = [(start, iter(succ[start]))]
            color[start] = GRAY
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    if color[nxt] == GRAY:
                        return True
                    if color[nxt] == WHITE:
                        color[nxt] = GRAY
                        stack.append((nxt, iter(succ[nxt])))
                        advanced = True
                        break
                if not advanced:
                    color[node] = BLACK
                    stack.pop()
        return False

    def __str__(self) -> str:
        return canonical_encode(self).decode("ascii")


def void_graph() -> DiagGraph:
    """The graph with no vertices and no lines; the multiplicative unit."""
    return DiagGraph()


def make_vertex(r: int, s: int) -> DiagGraph:
    """A single vertex with ``r`` white out-lines and ``s`` gray in-lines.

    ``make_vertex(0, 0)`` is an isolated vertex, not the void graph.
    """
    if r < 0 or s < 0:
        raise ValueError("line counts must be nonnegative")
    out_ports = tuple(range(r))
    in_ports = tuple(range(r, r + s))
    return DiagGraph(
        vertices=(Vertex(in_ports=in_ports, out_ports=out_ports),),
        edges=(),
        dangling_in=in_ports,
        dangling_out=out_ports,
    )


# ---------------------------------------------------------------------------
# Composition
# ---------------------------------------------------------------------------

def enumerate_matchings(grays: Iterable[int], whites: Iterable[int]) -> Iterator[Matching]:
    """All partial matchings between two port-label sets, in canonical order.

    Order: by matching size ascending, then lexicographically on the sorted
    tuple of (gray, white) pairs.  The empty matching always comes first.
    """
    gray_sorted = sorted(grays)
    white_sorted = sorted(whites)
    for size in range(min(len(gray_sorted), len(white_sorted)) + 1):
        bucket = [
            tuple(zip(gs, ws))
            for gs in combinations(gray_sorted, size)
            for ws in permutations(white_sorted, size)
        ]
        bucket.sort()
        yield from bucket


def count_matchings(n_gray: int, n_white: int) -> int:
    """Closed-form matching count: sum of i! * C(n_gray, i) * C(n_white, i)."""
    return sum(
        factorial(i) * comb(n_gray, i) * comb(n_white, i)
        for i in range(min(n_gray, n_white) + 1)
    )


def _shift_vertex(v: Vertex, offset: int) -> Vertex:
    return Vertex(
        in_ports=tuple(p + offset for p in v.in_ports),
        out_ports=tuple(p + offset for p in v.out_ports),
    )


def compose(g1: DiagGraph, g2: DiagGraph, matching: Matching) -> DiagGraph:
    """One composition of ``g1`` with ``g2`` for a chosen partial matching.

    ``matching`` pairs dangling in-ports of ``g1`` with dangling out-ports of
    ``g2`` (labels as in the operands).  ``g2`` is embedded with its labels
    shifted by ``g1.port_count``; matched pairs become edges from ``g2`` into
    ``g1``.
    """
    shift = g1.port_count
    gray_set = set(g1.dangling_in)
    white_set = set(g2.dangling_out)
    matched_gray: set[int] = set()
    matched_white: set[int] = set()
    for gray, white in matching:
        if gray not in gray_set or gray in matched_gray:
            raise ValueError(f"invalid matching: {gray} is not an unmatched gray spot of the first graph")
        if white not in white_set or white in matched_white:
            raise ValueError(f"invalid matching: {white} is not an unmatched white spot of the second graph")
        matched_gray.add(gray)
        matched_white.add(white)
    edges = list(g1.edges)
    edges.extend((out_p + shift, in_p + shift) for out_p, in_p in g2.edges)
    edges.extend((white + shift, gray) for gray, white in matching)
    return DiagGraph(
        vertices=g1.vertices + tuple(_shift_vertex(v, shift) for v in g2.vertices),
        edges=tuple(sorted(edges)),
        dangling_in=tuple(p for p in g1.dangling_in if p not in matched_gray)
        + tuple(p + shift for p in g2.dangling_in),
        dangling_out=g1.dangling_out
        + tuple(p + shift for p in g2.dangling_out if p not in matched_white),
    )


def enumerate_compositions(g1: DiagGraph, g2: DiagGraph) -> list[DiagGraph]:
    """All compositions of ``g1`` with ``g2``, one per partial matching.

    Output order follows :func:`enumerate_matchings`; the first entry is the
    disjoint union (empty matching).  All outputs are pairwise distinct as
    labeled graphs.
    """
    return [
        compose(g1, g2, matching)
        for matching in enumerate_matchings(g1.dangling_in, g2.dangling_out)
    ]


def build_iteratively(steps: Iterable[tuple[int, int, int]]) -> DiagGraph:
    """Fold one-vertex graphs onto the void graph by successive composition.

    Each step is ``(r, s, matching_index)`` where the index selects a partial
    matching between the accumulated graph's gray spots and the new vertex's
    white spots, in :func:`enumerate_matchings` order (0 = no joins).
    """
    acc = void_graph()
    for step_no, (r, s, matching_index) in enumerate(steps):
        vertex = make_vertex(r, s)
        total = count_matchings(len(acc.dangling_in), len(vertex.dangling_out))
        if not 0 <= matching_index < total:
            raise ValueError(
                f"step {step_no}: matching index {matching_index} out of range 0..{total - 1}"
            )
        matchings = enumerate_matchings(acc.dangling_in, vertex.dangling_out)
        chosen = next(islice(matchings, matching_index, None))
        acc = compose(acc, vertex, chosen)
    return acc


# ---------------------------------------------------------------------------
# Formal sums of graphs
# ---------------------------------------------------------------------------

class GraphSum:
    """Finitely supported sum of labeled graphs with exact coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[DiagGraph, ScalarLike] | Iterable[tuple[DiagGraph, ScalarLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[DiagGraph, GaussianRational] = {}
        for graph, coeff in items:
            c = acc.get(graph, GaussianRational.zero()) + GaussianRational.coerce(coeff)
            if c.is_zero():
                acc.pop(graph, None)
            else:
                acc[graph] = c
        self._terms = acc

    @classmethod
    def zero(cls) -> "GraphSum":
        return cls()

    @classmethod
    def one(cls) -> "GraphSum":
        return cls.basis(void_graph())

    @classmethod
    def basis(cls, graph: DiagGraph, coeff: ScalarLike = 1) -> "GraphSum":
        return cls([(graph, coeff)])

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, graph: DiagGraph) -> GaussianRational:
        return self._terms.get(graph, GaussianRational.zero())

    def terms(self) -> Iterator[tuple[DiagGraph, GaussianRational]]:
        """Iterate terms deterministically, ordered by canonical encoding."""
        for graph in sorted(self._terms, key=canonical_encode):
            yield graph, self._terms[graph]

    def __add__(self, other: "GraphSum") -> "GraphSum":
        if not isinstance(other, GraphSum):
            return NotImplemented
        acc = dict(self._terms)
        for graph, coeff in other._terms.items():
            c = acc.get(graph, GaussianRational.zero()) + coeff
            if c.is_zero():
                acc.pop(graph, None)
            else:
                acc[graph] = c
        return GraphSum(acc)

    def __neg__(self) -> "GraphSum":
        return GraphSum({g: -c for g, c in self._terms.items()})

    def __sub__(self, other: "GraphSum") -> "GraphSum":
        if not isinstance(other, GraphSum):
            return NotImplemented
        return self + (-other)

    def scale(self, c: ScalarLike) -> "GraphSum":
        c = GaussianRational.coerce(c)
        if c.is_zero():
            return GraphSum.zero()
        return GraphSum({g: coeff * c for g, coeff in self._terms.items()})

    def __mul__(self, other: "GraphSum") -> "GraphSum":
        """Bilinear extension of composition enumeration; unit is the void graph."""
        if not isinstance(other, GraphSum):
            return NotImplemented
        acc: dict[DiagGraph, GaussianRational] = {}
        for g1, c1 in self._terms.items():
            for g2, c2 in other._terms.items():
                c12 = c1 * c2
                for composed in enumerate_compositions(g1, g2):
                    c = acc.get(composed, GaussianRational.zero()) + c12
                    if c.is_zero():
                        acc.pop(composed, None)
                    else:
                        acc[composed] = c
        return GraphSum(acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphSum):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "GraphSum(0)"
        parts = ", ".join(f"{g}: {c}" for g, c in self.terms())
        return f"GraphSum({parts})"


def graph_multiply(x: GraphSum, y: GraphSum) -> GraphSum:
    return x * y


# ---------------------------------------------------------------------------
# Forgetful projection
# ---------------------------------------------------------------------------

def project(g: DiagGraph) -> NormalMonomial:
    """Forget all inner structure: keep (white spot count, gray spot count)."""
    return NormalMonomial(len(g.dangling_out), len(g.dangling_in))


def project_sum(x: GraphSum) -> NormalPolynomial:
    """Linear extension of :func:`project`; an algebra homomorphism."""
    return NormalPolynomial((project(g), c) for g, c in x._terms.items())


_LETTER_VERTEX = {
    Letter.ANNIHILATOR: (0, 1),
    Letter.CREATOR: (1, 0),
}


def normal_order_via_graphs(word: Word) -> NormalPolynomial:
    """Third normal-ordering route: compose one-vertex graphs, then project."""
    product = reduce(
        graph_multiply,
        (GraphSum.basis(make_vertex(*_LETTER_VERTEX[letter])) for letter in word),
        GraphSum.one(),
    )
    return project_sum(product)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def canonical_encode(g: DiagGraph) -> bytes:
    """Injective, run-stable byte encoding of a labeled graph.

    Layout: ``V:<out>/<in>;...|E:<out>><in>,...|I:...|O:...`` with decimal
    port labels.  The void graph encodes as ``V:|E:|I:|O:``.
    """
    vertices = ";".join(
        ",".join(map(str, v.out_ports)) + "/" + ",".join(map(str, v.in_ports))
        for v in g.vertices
    )
    edges = ",".join(f"{o}>{i}" for o, i in g.edges)
    gray = ",".join(map(str, g.dangling_in))
    white = ",".join(map(str, g.dangling_out))
    return f"V:{vertices}|E:{edges}|I:{gray}|O:{white}".encode("ascii")


def canonical_decode(data: bytes) -> DiagGraph:
    """Inverse of :func:`canonical_encode`; validates the decoded structure."""
    text = data.decode("ascii")
    fields = text.split("|")
    if len(fields) != 4 or [f.split(":", 1)[0] for f in fields] != ["V", "E", "I", "O"]:
        raise ValueError(f"malformed graph encoding: {text!r}")
    v_part, e_part, i_part, o_part = (f.split(":", 1)[1] for f in fields)

    def int_list(chunk: str) -> tuple[int, ...]:
        return tuple(int(x) for x in chunk.split(",")) if chunk else ()

    vertices = []
    if v_part:
        for vtx in v_part.split(";"):
            out_s, _, in_s = vtx.partition("/")
            vertices.append(Vertex(in_ports=int_list(in_s), out_ports=int_list(out_s)))
    edges = []
    if e_part:
        for e in e_part.split(","):
            out_s, _, in_s = e.partition(">")
            edges.append((int(out_s), int(in_s)))
    return DiagGraph(
        vertices=tuple(vertices),
        edges=tuple(edges),
        dangling_in=int_list(i_part),
        dangling_out=int_list(o_part),
    )


def graph_to_json(g: DiagGraph) -> dict:
    """JSON object mirroring the graph fields with explicit port labels."""
    return {
        "vertices": [{"out": list(v.out_ports), "in": list(v.in_ports)} for v in g.vertices],
        "edges": [list(e) for e in g.edges],
        "dangling_in": list(g.dangling_in),
        "dangling_out": list(g.dangling_out),
    }


def graph_from_json(obj: dict) -> DiagGraph:
    return DiagGraph(
        vertices=tuple(
            Vertex(in_ports=tuple(v["in"]), out_ports=tuple(v["out"]))
            for v in obj["vertices"]
        ),
        edges=tuple((e[0], e[1]) for e in obj["edges"]),
        dangling_in=tuple(obj["dangling_in"]),
        dangling_out=tuple(obj["dangling_out"]),
    )


def graph_to_dot(g: DiagGraph, name: str = "composition") -> str:
    """Graphviz DOT rendering: black vertex dots, gray/white terminal spots.

    Ingoing lines run from their gray spot into the vertex; outgoing lines run
    from the vertex to their white spot; internal lines run between vertices
    and are labeled with their (out-port, in-port) pair.
    """
    in_owner, out_owner = g.port_owners()
    lines = [
        f"digraph {name} {{",
        "  rankdir=BT;",
        '  node [shape=circle, fontsize=10];',
    ]
    for idx in range(len(g.vertices)):
        lines.append(f'  v{idx} [label="", style=filled, fillcolor=black, width=0.2];')
    for p in g.dangling_in:
        lines.append(f'  gray{p} [label="{p}", style=filled, fillcolor=gray, width=0.15];')
    for p in g.dangling_out:
        lines.append(f'  white{p} [label="{p}", style=filled, fillcolor=white, width=0.15];')
    for out_p, in_p in g.edges:
        lines.append(f'  v{out_owner[out_p]} -> v{in_owner[in_p]} [label="{out_p}>{in_p}"];')
    for p in g.dangling_in:
        lines.append(f"  gray{p} -> v{in_owner[p]};")
    for p in g.dangling_out:
        lines.append(f"  v{out_owner[p]} -> white{p};")
    lines.append("}")
    return "\n".join(lines) + "\n"
