# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
import json
import os
from collections import namedtuple

from symadapt import __version__
from symadapt.errors import UsageError
from symadapt.util import DEFAULT_DENSE_LIMIT, DEFAULT_MU, DEFAULT_THRESHOLD

DEFAULTS = (
    ('fcidump', None),
    ('mapping', 'parity'),
    ('ordering', 'interleaved'),
    ('threshold', DEFAULT_THRESHOLD),
    ('mu', DEFAULT_MU),
    ('symmetry', 'number'),
    ('target', None),
    ('method', 'php'),
    ('columns', None),
    ('include_vnn', False),
    ('dense_limit', DEFAULT_DENSE_LIMIT),
    ('out', None),
    ('format', 'table'),
    ('core', ()),
    ('active', None),
    ('grid', False),
    ('trials', 200),
    ('seed', 0))

FORMATS = ('json', 'table')
SYMMETRIES = ('number', 'spin')


class RunConfig(namedtuple('RunConfig', [key for key, _ in DEFAULTS])):
    """ The settings of one pipeline run.

    Attributes
    ----------
    fcidump : str
        Path of the integral file.

    mapping : str
        ``jw``, ``parity`` or ``bk`` (or the full mapping names).

    ordering : str
        ``interleaved`` or ``blocked`` spin-orbitals.

    threshold : float
        Pruning threshold of every qubit operator.

    mu : float
        Penalty parameter of the shift method.

    symmetry : str
        ``number`` or ``spin``.

    target : float
        Electron count or total spin ``S``; the neutral electron count or
        ``S = 0`` when ``None``.

    method : str
        ``php``, ``hp``, ``shift``, ``reflect``, ``reflect-singlet`` or
        ``sos``.

    columns : tuple
        Adapted operators shown next to the original spectrum by the
        ``spectra`` command, as method names. The projected, shifted and
        reflected Hamiltonians when ``None``.

    include_vnn : bool
        Add the nuclear repulsion to the Hamiltonian.

    dense_limit : int
        Largest qubit count diagonalized.

    out : str
        Output directory, nothing is written when ``None``.

    format : str
        ``json`` or ``table`` report on the standard output.

    core, active : sequence
        Zero-based frozen core and active orbitals.

    grid : bool
        Build every adapted operator of the term-count grid.

    trials, seed : int
        Size and seed of the random property checks.

    """

    @classmethod
    def defaults(cls):
        return cls(**dict(DEFAULTS))

    @property
    def fixture_id(self):
        """ File name of the integrals without extension.

        """
        if self.fcidump is None:
            return None
        return os.path.splitext(os.path.basename(self.fcidump))[0]

    def replace(self, **overrides):
        """ A copy with the given settings replaced and validated.

        """
        unknown = sorted(set(overrides) - set(self._fields))
        if unknown:
            raise UsageError(
                'unknown settings: {0}'.format(', '.join(unknown)))
        return _validate(self._replace(**overrides))

    def provenance(self):
        """ The settings as a JSON compatible dictionary.

        """
        settings = self._asdict()
        settings['core'] = list(self.core)
        if self.active is not None:
            settings['active'] = list(self.active)
        if self.columns is not None:
            settings['columns'] = list(self.columns)
        settings['fixture'] = self.fixture_id
        settings['version'] = __version__
        return dict(settings)


def load_config(text):
    """ Parse a JSON configuration document into a dictionary.

    Raises
    ------
    UsageError :
        For malformed JSON, a document that is not an object or unknown
        keys.

    """
    try:
        document = json.loads(text)
    except ValueError as error:
        raise UsageError('malformed configuration: {0}'.format(error))
    if not isinstance(document, dict):
        raise UsageError('the configuration must be a JSON object')
    fields = set(RunConfig._fields)
    unknown = sorted(set(document) - fields)
    if unknown:
        raise UsageError(
            'unknown configuration keys: {0}'.format(', '.join(unknown)))
    return document


def build_config(filename=None, overrides=None):
    """ Defaults, then the configuration file, then ``overrides``.

    ``None`` values in ``overrides`` leave the setting untouched.

    """
    config = RunConfig.defaults()
    if filename is not None:
        try:
            with open(filename) as handle:
                text = handle.read()
        except IOError as error:
            raise UsageError('cannot read {0}: {1}'.format(filename, error))
        config = config.replace(**load_config(text))
    if overrides:
        config = config.replace(**dict(
            (key, value) for key, value in overrides.items()
            if value is not None))
    return _validate(config)


def _validate(config):
    if config.format not in FORMATS:
        raise UsageError('format must be one of {0}'.format(FORMATS))
    if config.symmetry not in SYMMETRIES:
        raise UsageError('symmetry must be one of {0}'.format(SYMMETRIES))
    try:
        threshold = float(config.threshold)
        mu = float(config.mu)
        dense_limit = int(config.dense_limit)
        trials = int(config.trials)
        core = tuple(int(index) for index in config.core)
        active = None if config.active is None else tuple(
            int(index) for index in config.active)
        target = None if config.target is None else float(config.target)
        columns = _columns(config.columns)
    except (TypeError, ValueError) as error:
        raise UsageError('bad setting: {0}'.format(error))
    if threshold < 0:
        raise UsageError('the threshold must not be negative')
    if trials < 0:
        raise UsageError('the number of trials must not be negative')
    return config._replace(
        threshold=threshold, mu=mu, dense_limit=dense_limit, trials=trials,
        core=core, active=active, target=target, columns=columns,
        include_vnn=bool(config.include_vnn), grid=bool(config.grid))


def _columns(columns):
    if columns is None:
        return None
    if isinstance(columns, str):
        columns = columns.split(',')
    columns = tuple(str(column).strip() for column in columns)
    if not columns or not all(columns):
        raise UsageError('columns must name at least one method')
    return columns
