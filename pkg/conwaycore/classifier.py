# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import conwaycore.designs
import dataclasses
import enum
import logging

logger = logging.getLogger(__name__)

M13_DEGREE = 13
M12_ORDER = 95040


class ClassificationError(Exception):
    """The classification cannot be carried out with the reports provided."""
    pass


class Family(enum.Enum):
    BOOLEAN = 'BOOLEAN'
    SP = 'SP'
    AFFINE_SP = 'AFFINE_SP'
    EXOTIC_M13_CANDIDATE = 'EXOTIC_M13_CANDIDATE'
    UNCLASSIFIED = 'UNCLASSIFIED'


@dataclasses.dataclass(frozen=True)
class Hypotheses:
    """The structural hypotheses under which the groupoid is classified."""
    is_supersimple: bool
    satisfies_triangle_delta: bool
    is_regular_two_graph: bool

    @property
    def verified(self):
        return self.is_supersimple and self.satisfies_triangle_delta and self.is_regular_two_graph


@dataclasses.dataclass(frozen=True)
class ClassLabel:
    family: Family
    m: int = None
    sign: str = None
    evidence: tuple = ()
    hypotheses_verified: bool = False

    @property
    def label(self):
        if self.m is None:
            return self.family.value
        return '{}({})'.format(self.family.value, self.m)

    @property
    def consistent(self):
        """An unclassified groupoid contradicts the classification when the hypotheses hold."""
        return not (self.hypotheses_verified and self.family is Family.UNCLASSIFIED)

    def to_json(self):
        return {
            'family': self.label,
            'parameters': {'m': self.m, 'sign': self.sign},
            'hypotheses_verified': self.hypotheses_verified,
            'evidence': list(self.evidence)
        }


def _log2(value):
    if value < 1 or value & (value - 1):
        return None
    return value.bit_length() - 1


def orthogonal_degree(m, sign):
    """The number of points 2^(m-1) (2^m + sign) of the orthogonal designs."""
    return 2 ** (m - 1) * (2 ** m + conwaycore.designs.parse_sign(sign))


def classify(n, lam, groupoid_size, hole_order, hypotheses, is_group=None, hole_primitive=None):
    """
    Identifies a Conway groupoid from its parameters.

    Under the hypotheses, the groupoid is the translation group of a vector space of dimension m, the symplectic group
    Sp(2m, 2) acting on 2^(m-1) (2^m + 1) or 2^(m-1) (2^m - 1) points, or the affine symplectic group 2^(2m).Sp(2m, 2).
    Outside the hypotheses, a non-group groupoid on 13 points with a primitive hole-stabilizer of order 95040 is
    reported as an exotic candidate.

    :param int n: The number of points.
    :param int lam: The index of the design.
    :param int groupoid_size: The size of the Conway groupoid.
    :param int hole_order: The order of the hole-stabilizer.
    :param Hypotheses hypotheses: The structural hypotheses.
    :param bool is_group: Whether the groupoid is a group.
    :param bool hole_primitive: Whether the hole-stabilizer is primitive on the other points.
    :rtype: ClassLabel
    """
    if None in (n, lam, groupoid_size, hole_order) or hypotheses is None:
        raise ClassificationError('The classification requires the design, groupoid and hypotheses reports.')

    evidence = ['n={}'.format(n), 'lambda={}'.format(lam), '|L|={}'.format(groupoid_size), '|pi|={}'.format(hole_order)]

    if hypotheses.verified:
        m = _log2(n)
        if m is not None and groupoid_size == n and hole_order == 1:
            evidence.append('n=2^{0} and |L|=2^{0}'.format(m))
            return ClassLabel(Family.BOOLEAN, m, None, tuple(evidence), True)

        m = 1
        while 2 ** (m - 1) * (2 ** m - 1) <= n:
            for sign in ('+', '-'):
                if n == orthogonal_degree(m, sign) and groupoid_size == conwaycore.designs.sp_order(m):
                    evidence.append('n=2^{0}(2^{1}{2}1) and |L|=|Sp({3},2)|'.format(m - 1, m, sign, 2 * m))
                    if hole_order == conwaycore.designs.o_order(m, sign):
                        evidence.append('|pi|=|O{}({},2)|'.format(sign, 2 * m))
                    return ClassLabel(Family.SP, m, sign, tuple(evidence), True)

            if n == 4 ** m and groupoid_size == n * conwaycore.designs.sp_order(m):
                evidence.append('n=2^{0} and |L|=2^{0}|Sp({0},2)|'.format(2 * m))
                if hole_order == conwaycore.designs.sp_order(m):
                    evidence.append('|pi|=|Sp({},2)|'.format(2 * m))
                return ClassLabel(Family.AFFINE_SP, m, None, tuple(evidence), True)
            m += 1

        logger.warning('No family matches n=%d, |L|=%d under verified hypotheses', n, groupoid_size)
        return ClassLabel(Family.UNCLASSIFIED, None, None, tuple(evidence), True)

    if is_group is None or hole_primitive is None:
        raise ClassificationError(
            'The classification outside the hypotheses requires the group and primitivity reports.')

    if n == M13_DEGREE and hole_order == M12_ORDER and not is_group and hole_primitive:
        evidence.extend(['not a group', 'pi primitive'])
        return ClassLabel(Family.EXOTIC_M13_CANDIDATE, None, None, tuple(evidence), False)

    return ClassLabel(Family.UNCLASSIFIED, None, None, tuple(evidence), False)


@dataclasses.dataclass(frozen=True)
class Implication:
    name: str
    antecedent: bool
    consequent: bool

    @property
    def holds(self):
        return not self.antecedent or self.consequent

    @property
    def vacuous(self):
        return not self.antecedent

    def to_json(self):
        return {
            'name': self.name,
            'antecedent': self.antecedent,
            'consequent': self.consequent,
            'status': 'pass' if self.holds else 'fail',
            'vacuous': self.vacuous
        }


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    name: str
    status: str
    implications: tuple = ()
    details: dict = None

    @property
    def passed(self):
        return self.status != 'fail'

    def to_json(self):
        result = {'name': self.name, 'status': self.status}
        if self.implications:
            result['implications'] = [implication.to_json() for implication in self.implications]
        if self.details:
            result['details'] = self.details
        return result


def verify_primitivity_implications(n, lam, is_group, moves_primitive, is_regular_two_graph, hole_transitive,
                                    hole_primitive, hole_orbit_lengths=None):
    """
    Checks the primitivity implications for a design with n > 2 lambda + 2.

    The implications are: a group is primitive on the points; a regular two-graph makes the hole-stabilizer transitive
    on the other points; both together make it primitive there. With the two-graph, every orbit of the hole-stabilizer
    also has length at least 2 lambda + 2.

    :param int n: The number of points.
    :param int lam: The index of the design.
    :param bool is_group: Whether the groupoid is a group.
    :param bool moves_primitive: Whether the group generated by the moves is primitive.
    :param bool is_regular_two_graph: Whether the collinear triples form a regular two-graph.
    :param bool hole_transitive: Whether the hole-stabilizer is transitive on the other points.
    :param bool hole_primitive: Whether the hole-stabilizer is primitive on the other points.
    :param list[int] hole_orbit_lengths: The orbit lengths of the hole-stabilizer on the other points.
    :rtype: VerificationReport
    """
    if n <= 2 * lam + 2:
        return VerificationReport(
            'primitivity_implications', 'skipped', details={'reason': 'hypothesis n>2λ+2 fails, skipped'})

    implications = [
        Implication('group implies primitive', is_group, bool(moves_primitive)),
        Implication('two-graph implies hole-stabilizer transitive', is_regular_two_graph, bool(hole_transitive)),
        Implication(
            'group and two-graph imply hole-stabilizer primitive',
            is_group and is_regular_two_graph,
            bool(hole_primitive))
    ]
    if hole_orbit_lengths is not None:
        implications.append(Implication(
            'two-graph implies hole-stabilizer orbits of length at least 2λ+2',
            is_regular_two_graph,
            min(hole_orbit_lengths) >= 2 * lam + 2))

    status = 'pass' if all(implication.holds for implication in implications) else 'fail'
    return VerificationReport('primitivity_implications', status, tuple(implications))


def verify_family_parameters(n, lam, hypotheses, design=None, strong_triangle=None):
    """
    Checks that the parameters of a design satisfying the hypotheses belong to one of the three families.

    Designs with n = 2 lambda + 2 must be Boolean, which is confirmed by rebuilding the vector space. Other designs must
    be 2-(f(m), 4, f(m-1) - 1) designs with f(m) = 2^(2m) or f(m) = 2^(m-1) (2^m + sign). Isomorphism to the reference
    design is not checked.

    :param int n: The number of points.
    :param int lam: The index of the design.
    :param Hypotheses hypotheses: The structural hypotheses.
    :param Design design: The design, needed for the Boolean branch.
    :param bool strong_triangle: Whether the derived graph has the strong triangle property.
    :rtype: VerificationReport
    """
    if hypotheses is None or not hypotheses.verified:
        raise ClassificationError('theorem inapplicable: the hypotheses are not verified')

    details = {'isomorphism': 'parameters and structural flags only'}
    if n == 2 * lam + 2:
        if design is None:
            raise ClassificationError('The Boolean branch requires the design.')
        try:
            reconstruction = conwaycore.designs.reconstruct_boolean(design, 0)
        except conwaycore.designs.DesignError as error:
            details.update({'branch': 'boolean', 'error': str(error)})
            return VerificationReport('family_parameters', 'fail', details=details)

        details.update({'branch': 'boolean', 'm': reconstruction.m})
        return VerificationReport('family_parameters', 'pass', details=details)

    m = 2
    while 2 ** (m - 1) * (2 ** m - 1) <= n:
        if n == 4 ** m and lam == 4 ** (m - 1) - 1:
            details.update({'branch': 'symplectic', 'm': m})
            break

        matched = False
        for sign in ('+', '-'):
            if n == orthogonal_degree(m, sign) and lam == orthogonal_degree(m - 1, sign) - 1:
                details.update({'branch': 'orthogonal', 'm': m, 'sign': sign})
                matched = True
                break
        if matched:
            break
        m += 1

    if 'branch' not in details:
        details['branch'] = None
        return VerificationReport('family_parameters', 'fail', details=details)

    if strong_triangle is not None:
        details['strong_triangle_property'] = strong_triangle
        if not strong_triangle:
            return VerificationReport('family_parameters', 'fail', details=details)

    return VerificationReport('family_parameters', 'pass', details=details)
