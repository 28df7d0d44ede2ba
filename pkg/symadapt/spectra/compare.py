# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
import logging
from collections import namedtuple

import numpy

from symadapt.errors import ContractError, MismatchError
from symadapt.util import LABEL_TOLERANCE, MATCH_TOLERANCE

logger = logging.getLogger(__name__)

#: Methods whose non-target levels collapse to zero.
PROJECTION_METHODS = ('lowdin_PHP', 'lowdin_HP', 'sum_over_states')


class LevelMatch(namedtuple(
        'LevelMatch', ['level', 'energy', 'transformed', 'matched',
                       'deviation'])):
    """ The fate of one original level.

    Attributes
    ----------
    level : int
        Index of the original level.

    energy : float
        The original energy.

    transformed : int
        Index of the matched transformed level, ``None`` for levels outside
        the target sector or without a partner.

    matched : bool
        Whether a partner was found within the tolerance.

    deviation : float
        ``|transformed - original|`` for matched levels, ``None`` otherwise.

    """


class SpectrumMatchReport(object):
    """ Comparison of an original labeled spectrum with a transformed one.

    Attributes
    ----------
    method : str
        The adaptation method compared.

    matches : list
        One :class:`~.LevelMatch` per original level.

    predicted : numpy.ndarray
        Closed-form prediction of every transformed level, in the order
        of the original levels.

    prediction_deviation : float
        Largest difference between the sorted non-target predictions and
        the sorted unmatched transformed levels.

    """

    def __init__(self, method, matches, predicted, prediction_deviation):
        self.method = method
        self.matches = list(matches)
        self.predicted = numpy.asarray(predicted, dtype=float)
        self.prediction_deviation = prediction_deviation

    @property
    def matched_count(self):
        return sum(1 for match in self.matches if match.matched)

    @property
    def unmatched_count(self):
        return len(self.matches) - self.matched_count

    @property
    def matched_levels(self):
        """ Indices of the transformed levels that have an original partner.

        """
        return set(
            match.transformed for match in self.matches if match.matched)


def predict_level(method, energy, value, target, mu=None,
                  tolerance=LABEL_TOLERANCE):
    """ Closed-form image of an energy level under an adaptation method.

    Arguments
    ---------
    method : str
        One of ``'none'``, ``'lowdin_PHP'``, ``'lowdin_HP'``,
        ``'sum_over_states'``, ``'shift'``, ``'reflection'`` or
        ``'reflection_singlet'``.

    energy : float
        The original energy.

    value : float
        The symmetry eigenvalue of the level (``S(S+1)`` for spin).

    target : float
        The target symmetry eigenvalue.

    mu : float
        Penalty parameter, only used by ``'shift'``.

    """
    method = getattr(method, 'value', method)
    delta = value - target
    if method == 'none' or abs(delta) <= tolerance:
        return energy
    if method in PROJECTION_METHODS:
        return 0.0
    if method == 'shift':
        if mu is None:
            raise ContractError('shift predictions need mu')
        return energy + 0.5 * mu * delta ** 2
    if method == 'reflection':
        return energy * (1.0 - 2.0 * delta ** 2)
    if method == 'reflection_singlet':
        return energy * (1.0 - 2.0 * value)
    raise ContractError('unknown adaptation method {0!r}'.format(method))


def compare_spectra(original, transformed, spec=None, method='none', mu=None,
                    tolerance=MATCH_TOLERANCE):
    """ Match the target sector of ``original`` inside ``transformed``.

    Target-sector levels are matched greedily, in ascending order, to the
    nearest unused transformed level within ``tolerance``. The remaining
    transformed levels are compared, as a sorted multiset, with the
    closed-form predictions of the non-target levels.

    Arguments
    ---------
    original : LabeledSpectrum
        The labeled spectrum of the unadapted operator.

    transformed : sequence
        Ascending eigenvalues of the adapted operator.

    spec : SymmetrySpec
        The symmetry used for the adaptation; ignored for ``'none'``.

    method : str
        The adaptation method, see :func:`predict_level`.

    Returns
    -------
    report : SpectrumMatchReport

    Raises
    ------
    MismatchError :
        When a target-sector level has no partner or a non-target level
        lands away from its prediction.

    """
    method = getattr(method, 'value', method)
    transformed = numpy.asarray(transformed, dtype=float)
    if len(transformed) != len(original):
        raise ContractError(
            'spectra of {0} and {1} levels'.format(
                len(original), len(transformed)))
    if method == 'none':
        values = numpy.zeros(len(original))
        target = 0.0
    else:
        kind = getattr(spec.kind, 'value', spec.kind)
        values = original.n_values if kind == 'number' else \
            original.s2_values
        target = spec.target
    predicted = numpy.array([
        predict_level(method, energy, value, target, mu)
        for energy, value in zip(original.energies, values)])
    in_target = numpy.abs(values - target) <= LABEL_TOLERANCE
    used = numpy.zeros(len(transformed), dtype=bool)
    matches = []
    offenders = []
    for level, energy in enumerate(original.energies):
        if not in_target[level]:
            matches.append(LevelMatch(level, energy, None, False, None))
            continue
        distance = numpy.where(used, numpy.inf, numpy.abs(transformed - energy))
        nearest = int(numpy.argmin(distance))
        if distance[nearest] <= tolerance:
            used[nearest] = True
            matches.append(LevelMatch(
                level, energy, nearest, True, float(distance[nearest])))
        else:
            matches.append(LevelMatch(level, energy, None, False, None))
            offenders.append(level)
    if offenders:
        raise MismatchError(
            '{0} target levels without a partner'.format(len(offenders)),
            offenders)
    rest = numpy.sort(transformed[~used])
    expected = numpy.sort(predicted[~in_target])
    deviation = float(numpy.max(numpy.abs(rest - expected))) \
        if len(rest) else 0.0
    if deviation > tolerance:
        offenders = [
            float(value) for value, other in zip(rest, expected)
            if abs(value - other) > tolerance]
        raise MismatchError(
            'non-target levels deviate from the {0} prediction by '
            '{1:.3e}'.format(method, deviation), offenders)
    report = SpectrumMatchReport(method, matches, predicted, deviation)
    logger.info(
        '%s: %d matched, %d moved, prediction deviation %.3e',
        method, report.matched_count, report.unmatched_count, deviation)
    return report
