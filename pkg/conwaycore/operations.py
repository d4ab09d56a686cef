# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import conwaycore.classifier
import conwaycore.constructions
import conwaycore.designs
import conwaycore.groupoids
import conwaycore.groups
import conwaycore.moves
import conwaycore.routing
import conwaycore.twographs
import contextlib
import logging
import time

logger = logging.getLogger(__name__)

SCHEMA = 1

LEMMA_CHECKS = (
    ('line_move_identity', lambda table, pool: conwaycore.moves.check_line_move_identity(table)),
    ('sympeq', conwaycore.moves.check_sympeq),
    ('braid_orders', conwaycore.moves.check_braid_orders),
    ('conjugation', lambda table, pool: conwaycore.moves.check_conjugation(table, pool=pool)),
    ('move_conjugation_conditions', conwaycore.moves.check_move_conjugation_conditions),
    ('move_count', lambda table, pool: conwaycore.moves.check_move_count(table))
)

DESIGN_CHECKS = ('two_design', 'supersimple', 'triangle_delta', 'regular_two_graph', 'two_graph_identities')
TRIANGLE_CHECKS = ('triangle_property', 'strong_triangle_property', 'dominating_vertex', 'f_lines')
CHECK_NAMES = DESIGN_CHECKS + tuple(name for name, _ in LEMMA_CHECKS) + TRIANGLE_CHECKS


class Controller(object):
    """Contains all operations provided by Conwaycore."""

    def __init__(self, configuration, cache_factory, pool, timings=False):
        self.configuration = configuration
        self.cache_factory = cache_factory
        self.pool = pool
        self.timings = timings
        self._cache = None
        self._phases = {}

    def generate(self,
        family: "The design family: boolean, symplectic, orthogonal or pg23",
        m: "The rank parameter of the vector space families"=None,
        sign: "The type of the quadratic form of the orthogonal family ('+' or '-')"=None,
        model: "The point model of the orthogonal family ('singular' or 'theta')"='singular',
        output: "Write the design to this file instead of the standard output"=None
    ):
        """Builds a design of one of the known families."""
        rank = self._as_int(m) if m is not None else None
        if model not in ('singular', 'theta'):
            raise conwaycore.routing.ControllerError("The model '{}' is not 'singular' or 'theta'.".format(model))

        try:
            with self._phase('construct'):
                design = conwaycore.constructions.build(family, rank, sign, model)
        except (conwaycore.constructions.ConstructionError, conwaycore.designs.DesignError, ValueError) as error:
            raise conwaycore.routing.ControllerError(str(error))

        if output is None:
            return conwaycore.routing.RawOutput(design.serialize())

        try:
            with open(output, 'w', encoding='utf-8') as stream:
                conwaycore.designs.dump(design, stream)
        except OSError as error:
            raise conwaycore.routing.ControllerError('Could not write {}: {}'.format(output, error.strerror))

        report = self._report('generate', design)
        report['output'] = output
        return self._finish(report, [])

    def check(self,
        file: "The design file",
        base: "The base point of the derived graph"='0',
        expect: "Comma-separated names of the checks expected to fail"=''
    ):
        """Validates a design and runs the two-graph, triangle and move identity checks."""
        design = self._load(file)
        expected = self._as_check_names(expect)
        report = self._report('check', design)

        try:
            with self._phase('validate'):
                stats = conwaycore.designs.validate(design)
        except conwaycore.designs.DesignError as error:
            raise conwaycore.routing.ControllerError(str(error))
        report['stats'] = self._stats_json(stats)

        checks = [
            self._entry('two_design', stats.is_2_design, 1, None if stats.is_2_design else {
                'lambda_min': stats.lambda_min, 'lambda_max': stats.lambda_max}),
            self._entry('supersimple', stats.is_supersimple, 1, self._blocks_witness(stats.supersimple_witness)),
            self._entry('triangle_delta', stats.satisfies_triangle_delta, 1, self._blocks_witness(stats.delta_witness))
        ]

        if stats.problems:
            reason = 'the design is {}'.format(', '.join(stats.problems))
            checks.extend(self._skipped(name, reason) for name in CHECK_NAMES[3:])
            return self._finish(report, checks, expected)

        try:
            index = conwaycore.designs.CollinearityIndex(design, stats)
        except conwaycore.designs.DesignError as error:
            raise conwaycore.routing.ControllerError(str(error))

        point = self._as_point(base, design.n)
        two_graph = self._two_graph(index)
        report['two_graph'] = self._two_graph_json(two_graph)
        checks.append(self._entry(
            'regular_two_graph', two_graph.is_regular_two_graph, 1, two_graph.witness))
        checks.append(self._two_graph_identities(two_graph))

        hypotheses = conwaycore.classifier.Hypotheses(
            stats.is_supersimple, stats.satisfies_triangle_delta, two_graph.is_regular_two_graph)
        if not hypotheses.verified:
            reason = 'hypotheses not verified'
            checks.extend(self._skipped(name, reason) for name, _ in LEMMA_CHECKS)
            checks.extend(self._skipped(name, reason) for name in TRIANGLE_CHECKS)
            return self._finish(report, checks, expected)

        table = self._move_table(index)
        report['moves'] = {'distinct': len(table)}
        with self._phase('lemmas'):
            checks.extend(self._lemma_suite(table))

        if design.n == 2 * stats.lam + 2:
            reason = 'hypothesis n>2λ+2 fails'
            checks.extend(self._skipped(name, reason) for name in TRIANGLE_CHECKS)
        else:
            with self._phase('triangle'):
                triangle = conwaycore.twographs.triangle_report(conwaycore.twographs.derived_graph(index, point))
            report['triangle'] = self._triangle_json(triangle, point)
            checks.extend(self._triangle_checks(index, point, triangle))

        return self._finish(report, checks, expected)

    def groupoid(self,
        file: "The design file",
        base: "The base point of the groupoid"='0',
        cap: "The largest group or groupoid enumerated element by element"=None,
        all_bases: "Compute the order of the hole-stabilizer at every point"=False
    ):
        """Computes the Conway groupoid and hole-stabilizer of a design, analyses them and classifies the groupoid."""
        design = self._load(file)
        cap = self._as_int(cap) if cap is not None else self.configuration.enumeration_cap
        report = self._report('groupoid', design)
        stats, index, table = self._prepare(design)
        point = self._as_point(base, design.n)
        report['stats'] = self._stats_json(stats)

        two_graph = self._two_graph(index)
        report['two_graph'] = self._two_graph_json(two_graph)
        hypotheses = conwaycore.classifier.Hypotheses(
            stats.is_supersimple, stats.satisfies_triangle_delta, two_graph.is_regular_two_graph)
        report['moves'] = {'distinct': len(table)}
        checks = []

        with self._phase('hole_stabilizer'):
            hole = conwaycore.groupoids.hole_stabilizer(table, point, cap, self.pool)
        self._store(design, 'pi_order', point, hole.order)

        with self._phase('groupoid'):
            groupoid = conwaycore.groupoids.conway_groupoid(table, point, hole, cap)
        with self._phase('group_chain'):
            move_chain = conwaycore.groups.StabilizerChain(table.distinct, design.n, base=[point])
            evidence = conwaycore.groupoids.is_group(table, point, hole.order, move_chain)
        self._store(design, 'move_group_order', -1, evidence.move_group_order)

        generators = hole.generators + [table.move(point, x) for x in range(design.n) if x != point]
        automorphisms, automorphism_witness = conwaycore.groupoids.is_automorphism_group(design, generators)
        report['groupoid'] = {
            'base': point,
            'pi_order': hole.order,
            'pi_enumerated': hole.enumerated,
            'L_size': groupoid.size,
            'L_enumerated': groupoid.enumerated,
            'is_group': evidence.is_group,
            'move_group_order': evidence.move_group_order,
            'stabilizer_order': evidence.stabilizer_order,
            'is_automorphism_group': automorphisms,
            'automorphism_witness': automorphism_witness
        }
        if not groupoid.enumerated:
            report['groupoid']['mode'] = 'order-only (cap {})'.format(cap)

        if evidence.is_group:
            checks.append(self._entry('stabilizer_agreement', evidence.stabilizer_matches, 1, None if
                evidence.stabilizer_matches else {
                    'transitive': evidence.transitive,
                    'stabilizer_order': evidence.stabilizer_order,
                    'pi_order': hole.order}))

        if groupoid.enumerated and design.n <= self.configuration.walk_max_degree:
            checks.append(self._coset_check(table, point, groupoid, cap))
        else:
            checks.append(self._skipped('coset_check', 'direct walk not run'))

        if evidence.is_group and groupoid.enumerated:
            with self._phase('spot_check'):
                checked, witness = conwaycore.groupoids.closure_spot_check(
                    groupoid, self.configuration.spot_checks, self.configuration.seed)
            checks.append(self._entry('closure_spot_check', witness is None, checked, witness))

        if all_bases:
            with self._phase('base_sweep'):
                orders = self._base_sweep(design, table)
            uniform = len(set(orders.values())) == 1
            report['groupoid']['pi_orders'] = {str(x): order for x, order in orders.items()}
            checks.append(self._entry('base_independence', uniform, len(orders), None if uniform else {
                'orders': {str(x): order for x, order in orders.items()}}))

        with self._phase('group_analysis'):
            analysis = self._group_analysis(design.n, table, move_chain, groupoid.size)
            hole_analysis = self._hole_analysis(design.n, point, hole)
        report['group_analysis'] = analysis
        report['hole_stabilizer'] = hole_analysis

        label = conwaycore.classifier.classify(
            design.n, stats.lam, groupoid.size, hole.order, hypotheses, evidence.is_group,
            hole_analysis['primitive'])
        report['classification'] = label.to_json()
        checks.append(self._entry('classification', label.consistent, 1, None if label.consistent else {
            'reason': 'no family matches under verified hypotheses'}))

        report['verification'] = self._verification(
            design, stats, index, point, hypotheses, evidence.is_group, analysis['primitive'],
            two_graph.is_regular_two_graph, hole_analysis)

        return self._finish(report, checks)

    def classify(self,
        file: "The design file",
        base: "The base point of the groupoid"='0'
    ):
        """Classifies the Conway groupoid of a design from stabilizer chains only."""
        design = self._load(file)
        report = self._report('classify', design)
        stats, index, table = self._prepare(design)
        point = self._as_point(base, design.n)
        report['stats'] = self._stats_json(stats)

        two_graph = self._two_graph(index)
        report['two_graph'] = self._two_graph_json(two_graph)
        hypotheses = conwaycore.classifier.Hypotheses(
            stats.is_supersimple, stats.satisfies_triangle_delta, two_graph.is_regular_two_graph)

        with self._phase('chains'):
            hole = conwaycore.groupoids.hole_stabilizer(table, point, enumerate_elements=False)
            pi_order = self._cached(design, 'pi_order', point, lambda: hole.order)
            group_order = self._cached(design, 'move_group_order', -1, lambda: conwaycore.groups.StabilizerChain(
                table.distinct, design.n, base=[point]).order)

        size = design.n * pi_order
        is_group = group_order == size
        report['groupoid'] = {
            'base': point,
            'pi_order': pi_order,
            'L_size': size,
            'is_group': is_group,
            'move_group_order': group_order
        }

        with self._phase('primitivity'):
            hole_analysis = self._hole_analysis(design.n, point, hole)
            moves_primitive = self._primitive(table.distinct, design.n)[0]
        report['hole_stabilizer'] = hole_analysis

        label = conwaycore.classifier.classify(
            design.n, stats.lam, size, pi_order, hypotheses, is_group, hole_analysis['primitive'])
        report['classification'] = label.to_json()
        checks = [self._entry('classification', label.consistent, 1, None if label.consistent else {
            'reason': 'no family matches under verified hypotheses'})]

        report['verification'] = self._verification(
            design, stats, index, point, hypotheses, is_group, moves_primitive, two_graph.is_regular_two_graph,
            hole_analysis)

        return self._finish(report, checks)

    def verify_lemmas(self,
        file: "The design file"
    ):
        """Runs the exhaustive move identity checks and the counting identities."""
        design = self._load(file)
        report = self._report('verify-lemmas', design)
        stats, index, table = self._prepare(design)
        report['stats'] = self._stats_json(stats)
        report['moves'] = {'distinct': len(table)}

        with self._phase('lemmas'):
            checks = self._lemma_suite(table)

        two_graph = self._two_graph(index)
        report['two_graph'] = self._two_graph_json(two_graph)
        checks.append(self._two_graph_identities(two_graph))
        report['hypotheses_verified'] = conwaycore.classifier.Hypotheses(
            stats.is_supersimple, stats.satisfies_triangle_delta, two_graph.is_regular_two_graph).verified

        return self._finish(report, checks)

    # Pipeline helpers

    def _prepare(self, design):
        try:
            stats = conwaycore.designs.require_supersimple_2_design(design)
            index = conwaycore.designs.CollinearityIndex(design, stats)
        except conwaycore.designs.DesignError as error:
            raise conwaycore.routing.ControllerError(str(error))

        return stats, index, self._move_table(index)

    def _move_table(self, index):
        with self._phase('moves'):
            return conwaycore.moves.MoveTable(index)

    def _two_graph(self, index):
        with self._phase('two_graph'):
            return conwaycore.twographs.two_graph_report(index.n, index.collinear_triples(), index.lam, self.pool)

    def _lemma_suite(self, table):
        return [check(table, self.pool).to_json() for _, check in LEMMA_CHECKS]

    def _group_analysis(self, n, table, chain, groupoid_size):
        generators = table.distinct
        primitive, block = self._primitive(generators, n)
        transpositions = conwaycore.groups.three_transposition_report(
            generators, pool=self.pool, chain=chain, group_order=groupoid_size)
        return {
            'group_order': chain.order,
            'transitivity_degree': conwaycore.groups.transitivity_degree(generators, n),
            'primitive': primitive,
            'block': block,
            'three_transposition': {
                'is_class': transpositions.is_three_transposition_class,
                'generates': transpositions.generates,
                'class_closed': transpositions.class_closed,
                'single_class': transpositions.single_class,
                'orders_ok': transpositions.orders_ok,
                'product_orders': list(transpositions.product_orders),
                'witness': transpositions.witness
            }
        }

    def _coset_check(self, table, point, groupoid, cap):
        try:
            with self._phase('direct_walk'):
                walked = conwaycore.groupoids.direct_walk(table, point, cap)
        except conwaycore.groupoids.EnumerationCapExceeded:
            return self._entry('coset_check', False, cap, {'walk_size': '>{}'.format(cap), 'coset_size': groupoid.size})

        agree = walked == groupoid.keys
        return self._entry('coset_check', agree, len(walked), None if agree else {
            'walk_size': len(walked), 'coset_size': groupoid.size})

    def _base_sweep(self, design, table):
        cache = self._get_cache()
        digest = design.digest()
        orders = {x: cache.get(digest, 'pi_order', x) for x in range(design.n)}
        missing = [x for x, order in orders.items() if order is None]
        logger.info('Base sweep: %d cached, %d to compute', design.n - len(missing), len(missing))

        for x, order in conwaycore.groupoids.base_sweep(table, missing).items():
            orders[x] = order
            cache.put(digest, 'pi_order', x, order)
        cache.commit()
        return orders

    def _hole_analysis(self, n, point, hole):
        if n < 3:
            return {'order': hole.order, 'orbit_lengths': [n - 1], 'transitive': True, 'primitive': True}

        generators = conwaycore.groups.remove_fixed_point(hole.generators, point, n)
        orbit_lengths = sorted(len(orbit) for orbit in conwaycore.groups.orbits(generators, n - 1))
        transitive = len(orbit_lengths) == 1
        primitive = self._primitive(generators, n - 1)[0] if transitive else False
        return {'order': hole.order, 'orbit_lengths': orbit_lengths, 'transitive': transitive, 'primitive': primitive}

    @staticmethod
    def _primitive(generators, n):
        if not conwaycore.groups.is_transitive(generators, n):
            return False, None
        return conwaycore.groups.is_primitive(generators, n)

    def _verification(self, design, stats, index, point, hypotheses, is_group, moves_primitive, regular, hole_analysis):
        n, lam = design.n, stats.lam
        primitivity = conwaycore.classifier.verify_primitivity_implications(
            n, lam, is_group, moves_primitive, regular, hole_analysis['transitive'], hole_analysis['primitive'],
            hole_analysis['orbit_lengths'])

        if not hypotheses.verified:
            family = conwaycore.classifier.VerificationReport(
                'family_parameters', 'skipped', details={'reason': 'hypotheses not verified'})
        else:
            strong = None
            if n > 2 * lam + 2:
                graph = conwaycore.twographs.derived_graph(index, point)
                strong = conwaycore.twographs.triangle_report(graph).has_strong_triangle_property
            family = conwaycore.classifier.verify_family_parameters(n, lam, hypotheses, design, strong)

        return [primitivity.to_json(), family.to_json()]

    def _cached(self, design, quantity, point, compute):
        cache = self._get_cache()
        value = cache.get(design.digest(), quantity, point)
        if value is not None:
            logger.info('Cache hit for %s at %d', quantity, point)
            return value

        value = compute()
        self._store(design, quantity, point, value)
        return value

    def _store(self, design, quantity, point, value):
        cache = self._get_cache()
        cache.put(design.digest(), quantity, point, value)
        cache.commit()

    def _get_cache(self):
        if self._cache is None:
            self._cache = self.cache_factory()
        return self._cache

    # Checks and reports

    def _triangle_checks(self, index, point, triangle):
        checks = [
            self._entry('triangle_property', triangle.has_triangle_property, triangle.edge_count, triangle.witness),
            self._entry('strong_triangle_property', triangle.has_strong_triangle_property, triangle.edge_count,
                triangle.witness),
            self._entry('dominating_vertex', triangle.dominating_implication_holds, 1, None if
                triangle.dominating_implication_holds else {'has_dominating_vertex': triangle.has_dominating_vertex})
        ]
        if triangle.has_triangle_property:
            lines = conwaycore.twographs.verify_f_lines(index, point, triangle)
            checks.append(self._entry('f_lines', lines, triangle.edge_count, None if lines else {'base': point}))
        else:
            checks.append(self._skipped('f_lines', 'no triangle property'))

        return checks

    def _two_graph_identities(self, two_graph):
        if not two_graph.is_regular_two_graph:
            return self._skipped('two_graph_identities', 'not a regular two-graph')

        passed = bool(two_graph.identity_n_eq) and bool(two_graph.n_eq_6_lambda) and two_graph.n_is_even
        return self._entry('two_graph_identities', passed, 1, None if passed else {
            'n': two_graph.n, 'mu': two_graph.mu, 's': two_graph.s})

    @staticmethod
    def _entry(name, passed, checked, witness=None):
        return {'name': name, 'status': 'pass' if passed else 'fail', 'checked': checked, 'witness': witness}

    @staticmethod
    def _skipped(name, reason):
        return {'name': name, 'status': 'skipped', 'checked': 0, 'witness': {'reason': reason}}

    @staticmethod
    def _blocks_witness(blocks):
        return None if blocks is None else {'blocks': [list(block) for block in blocks]}

    @staticmethod
    def _stats_json(stats):
        return {
            'n': stats.n,
            'blocks': stats.block_count,
            'lambda': stats.lam,
            'lambda_min': stats.lambda_min,
            'lambda_max': stats.lambda_max,
            'is_2_design': stats.is_2_design,
            'is_supersimple': stats.is_supersimple,
            'satisfies_triangle_delta': stats.satisfies_triangle_delta
        }

    @staticmethod
    def _two_graph_json(two_graph):
        return {
            'is_regular_two_graph': two_graph.is_regular_two_graph,
            'mu': two_graph.mu,
            's': two_graph.s,
            'n_eq_3mu_minus_2s': two_graph.identity_n_eq,
            'n_eq_6lambda_minus_2s': two_graph.n_eq_6_lambda,
            'n_is_even': two_graph.n_is_even,
            'witness': two_graph.witness
        }

    @staticmethod
    def _triangle_json(triangle, point):
        return {
            'base': point,
            'edges': triangle.edge_count,
            'has_triangle_property': triangle.has_triangle_property,
            'has_strong_triangle_property': triangle.has_strong_triangle_property,
            'has_dominating_vertex': triangle.has_dominating_vertex,
            'reason': triangle.reason
        }

    def _report(self, command, design):
        self._phases = {}
        return {
            'schema': SCHEMA,
            'command': command,
            'status': None,
            'design': {
                'name': design.name,
                'n': design.n,
                'blocks': len(design.blocks),
                'digest': design.digest().hex()
            }
        }

    def _finish(self, report, checks, expected=frozenset()):
        """Applies the expected failures, sets the status and attaches the timings."""
        for entry in checks:
            if entry['name'] in expected:
                if entry['status'] == 'fail':
                    entry['status'] = 'expected-fail'
                elif entry['status'] == 'pass':
                    entry['status'] = 'unexpected-pass'

        failed = [entry['name'] for entry in checks if entry['status'] in ('fail', 'unexpected-pass')]
        failed.extend(item['name'] for item in report.get('verification', []) if item['status'] == 'fail')
        report['checks'] = checks
        report['status'] = 'fail' if failed else 'pass'
        if failed:
            logger.warning('Failed checks: %s', ', '.join(failed))

        if self.timings:
            report['timings'] = {name: round(value * 1000, 3) for name, value in self._phases.items()}

        return report

    @contextlib.contextmanager
    def _phase(self, name):
        start = time.perf_counter()
        try:
            yield
        finally:
            self._phases[name] = self._phases.get(name, 0.0) + time.perf_counter() - start

    # Argument conversion

    @staticmethod
    def _load(path):
        try:
            with open(path, 'r', encoding='utf-8') as stream:
                return conwaycore.designs.load(stream)
        except OSError as error:
            raise conwaycore.routing.ControllerError('Could not read {}: {}'.format(path, error.strerror))
        except conwaycore.designs.DesignError as error:
            raise conwaycore.routing.ControllerError(str(error))

    @staticmethod
    def _as_int(value):
        try:
            return int(value)
        except ValueError:
            raise conwaycore.routing.ControllerError("Value '{}' is not a valid integer.".format(value))

    def _as_point(self, value, n):
        point = self._as_int(value)
        if not 0 <= point < n:
            raise conwaycore.routing.ControllerError('The point {} is not in 0..{}.'.format(point, n - 1))
        return point

    @staticmethod
    def _as_check_names(value):
        names = frozenset(name.strip() for name in value.split(',') if name.strip())
        unknown = sorted(names.difference(CHECK_NAMES))
        if unknown:
            raise conwaycore.routing.ControllerError('Unknown check names: {}.'.format(', '.join(unknown)))
        return names
