# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import conwaycore.designs
import conwaycore.workers
import dataclasses
import itertools
import logging
import networkx
import numpy

logger = logging.getLogger(__name__)


class GraphError(Exception):
    """A graph does not satisfy the precondition of an operation."""
    pass


@dataclasses.dataclass(frozen=True)
class TwoGraphReport:
    n: int
    is_regular_two_graph: bool
    mu: object
    s: object
    identity_n_eq: object
    n_eq_6_lambda: object
    witness: object

    @property
    def n_is_even(self):
        return self.n % 2 == 0


def triple_mask(n, triples):
    """
    Returns the symmetric membership array of a set of triples.

    :param int n: The number of points.
    :param triples: The triples.
    :return: An n x n x n boolean array, true at every ordering of every triple.
    :rtype: numpy.ndarray
    """
    mask = numpy.zeros((n, n, n), dtype=bool)
    triples = numpy.array(sorted(tuple(sorted(t)) for t in triples), dtype=numpy.int64).reshape(-1, 3)
    for order in itertools.permutations(range(3)):
        mask[triples[:, order[0]], triples[:, order[1]], triples[:, order[2]]] = True

    return mask


def _scan_quadruples(mask, n, first):
    rest = numpy.array(list(itertools.combinations(range(first + 1, n), 3)), dtype=numpy.int64).reshape(-1, 3)
    if len(rest) == 0:
        return 0, None

    b, c, d = rest[:, 0], rest[:, 1], rest[:, 2]
    counts = (mask[first, b, c].astype(numpy.int8) + mask[first, b, d] + mask[first, c, d] + mask[b, c, d])
    odd = numpy.flatnonzero(counts % 2)
    if len(odd) == 0:
        return len(rest), None

    row = odd[0]
    return len(rest), ((first, int(b[row]), int(c[row]), int(d[row])), int(counts[row]))


def two_graph_report(n, triples, lam=None, pool=None):
    """
    Decides whether a set of triples is a regular two-graph.

    The triples form a two-graph when every 4-set contains 0, 2 or 4 of them, and the two-graph is regular when every
    pair lies in the same number ``mu`` of triples. A 4-set is coherent when it contains four triples, and ``s``
    counts the coherent 4-sets through a triple.

    :param int n: The number of points.
    :param triples: The triples, usually the collinear triples of a design.
    :param int lam: The index of the design the triples come from, if any.
    :param WorkerPool pool: The pool used to scan the 4-sets.
    :return: The report.
    :rtype: TwoGraphReport
    """
    pool = pool or conwaycore.workers.SEQUENTIAL
    mask = triple_mask(n, triples)

    pair_totals = mask.sum(axis=2)
    off_diagonal = ~numpy.eye(n, dtype=bool)
    mu = None
    witness = None
    if n > 1:
        values = pair_totals[off_diagonal]
        if values.min() == values.max():
            mu = int(values[0])
        else:
            x, y = (int(v) for v in numpy.argwhere((pair_totals != values[0]) & off_diagonal)[0])
            witness = {'pair': [x, y], 'triples': int(pair_totals[x, y]), 'expected': int(values[0])}

    results = pool.map(lambda first: _scan_quadruples(mask, n, first), range(n))
    checked, odd_set = conwaycore.workers.first_witness(results)
    if witness is None and odd_set is not None:
        witness = {'quadruple': list(odd_set[0]), 'triples': odd_set[1]}

    is_regular = mu is not None and odd_set is None

    # Coherent 4-sets through each triple
    present = numpy.argwhere(mask)
    present = present[(present[:, 0] < present[:, 1]) & (present[:, 1] < present[:, 2])]
    s = None
    if len(present):
        a, b, c = present[:, 0], present[:, 1], present[:, 2]
        through = (mask[a, b, :] & mask[a, c, :] & mask[b, c, :]).sum(axis=1)
        s = int(through[0]) if through.min() == through.max() else 'non-constant'

    identity = None
    identity_lambda = None
    if isinstance(s, int) and mu is not None:
        identity = n == 3 * mu - 2 * s
        if lam is not None:
            identity_lambda = n == 6 * lam - 2 * s

    logger.info('Scanned %d 4-sets on %d points: regular=%s, mu=%s, s=%s', checked, n, is_regular, mu, s)
    return TwoGraphReport(
        n=n,
        is_regular_two_graph=is_regular,
        mu=mu,
        s=s,
        identity_n_eq=identity,
        n_eq_6_lambda=identity_lambda,
        witness=witness)


class DerivedGraph(object):
    """The graph on the points other than ``inf``, joining a and b when {inf, a, b} is collinear."""

    def __init__(self, index, inf):
        """
        :param CollinearityIndex index: The collinearity index of the design.
        :param int inf: The base point.
        """
        if not 0 <= inf < index.n:
            raise GraphError('The point {} is not in the design.'.format(inf))

        self.base = inf
        self.graph = networkx.Graph()
        self.graph.add_nodes_from(point for point in range(index.n) if point != inf)

        a, b = numpy.nonzero(numpy.triu(index.collinear[inf], 1))
        self.graph.add_edges_from(zip(a.tolist(), b.tolist()))

    @property
    def vertices(self):
        return sorted(self.graph.nodes())

    def degrees(self):
        return dict(self.graph.degree())


def derived_graph(design, inf):
    """
    Returns the derived graph of a design at a base point.

    :param design: The design, or its collinearity index.
    :param int inf: The base point.
    :rtype: DerivedGraph
    """
    if isinstance(design, conwaycore.designs.Design):
        design = conwaycore.designs.collinearity_index(design)

    return DerivedGraph(design, inf)


@dataclasses.dataclass(frozen=True)
class TriangleReport:
    has_triangle_property: bool
    has_strong_triangle_property: bool
    f_map: dict
    candidates: dict
    edge_count: int
    has_dominating_vertex: bool
    witness: object
    reason: str = None

    @property
    def dominating_implication_holds(self):
        """The triangle property without a dominating vertex forces the strong triangle property."""
        return not (self.has_triangle_property and not self.has_dominating_vertex) or self.has_strong_triangle_property


def triangle_report(graph):
    """
    Computes the triangle property of a graph.

    For an edge {u, v}, the set F(u, v) holds the common neighbours w such that every other vertex is adjacent to
    exactly one or exactly three of u, v and w. The graph has the triangle property when F(u, v) is never empty, and
    the strong triangle property when it always has a single element f(u, v).

    :param graph: A DerivedGraph or a networkx graph.
    :rtype: TriangleReport
    """
    if isinstance(graph, DerivedGraph):
        graph = graph.graph

    vertices = sorted(graph.nodes())
    position = {vertex: i for i, vertex in enumerate(vertices)}
    size = len(vertices)
    edges = sorted(tuple(sorted(edge)) for edge in graph.edges())
    dominating = any(degree == size - 1 for _, degree in graph.degree()) if size > 1 else False

    if not edges:
        return TriangleReport(False, False, {}, {}, 0, dominating, None, 'E=∅')

    adjacency = networkx.to_numpy_array(graph, nodelist=vertices, dtype=numpy.int64)
    adjacency = (adjacency != 0).astype(numpy.int64)

    candidates = {}
    for u, v in edges:
        i, j = position[u], position[v]
        common = numpy.flatnonzero(adjacency[i] & adjacency[j])
        if len(common) == 0:
            candidates[(u, v)] = ()
            continue

        counts = adjacency[i][None, :] + adjacency[j][None, :] + adjacency[common]
        counts[:, [i, j]] = 1
        counts[numpy.arange(len(common)), common] = 1
        valid = common[numpy.all(counts % 2 == 1, axis=1)]
        candidates[(u, v)] = tuple(vertices[k] for k in valid)

    failing = next((edge for edge in edges if not candidates[edge]), None)
    ambiguous = next((edge for edge in edges if len(candidates[edge]) > 1), None)

    has_triangle = failing is None
    is_strong = has_triangle and ambiguous is None
    f_map = {edge: candidates[edge][0] for edge in edges} if is_strong else {}

    if failing is not None:
        witness = {'edge': list(failing), 'candidates': []}
    elif ambiguous is not None:
        witness = {'edge': list(ambiguous), 'candidates': list(candidates[ambiguous])}
    else:
        witness = None

    return TriangleReport(has_triangle, is_strong, f_map, candidates, len(edges), dominating, witness)


def verify_f_lines(index, inf, report):
    """
    Checks that the lines through ``inf`` are exactly the sets {inf, a, b, f(a, b)} over the edges {a, b} of the derived
    graph.

    When the strong triangle property fails only because some F(a, b) has several elements, the fourth point of the
    line through {inf, a, b} must belong to F(a, b).

    :param CollinearityIndex index: The collinearity index of the design.
    :param int inf: The base point.
    :param TriangleReport report: The triangle report of the derived graph at ``inf``.
    :return: True if the lines through ``inf`` match.
    :rtype: bool
    """
    if not report.has_triangle_property:
        raise GraphError('The derived graph does not have the triangle property.')

    fourth = {}
    for a in range(index.n):
        if a == inf:
            continue
        for p, q in index.completing_pairs(inf, a):
            fourth[(a, p)] = q
            fourth[(a, q)] = p

    expected = set()
    for (a, b), choices in report.candidates.items():
        point = fourth.get((a, b))
        if point is None or point not in choices:
            return False
        if report.has_strong_triangle_property and report.f_map[(a, b)] != point:
            return False
        expected.add(tuple(sorted((inf, a, b, point))))

    actual = {block for block in index.design.blocks if inf in block}
    return expected == actual
