"""Evaluate the detect requests of a circuit at every sweep point.

The closed form engine uses mzi.fock.closed_form and the mixed-state phase, the oracle engine the dense Fock space
matrices. With both engines every column is followed by the oracle value and the absolute difference.
"""

import concurrent.futures
import functools
import logging
import math

from mzi import config
from mzi.circuit.parser import DETECT_COINCIDENCE, DETECT_PHASE, DETECT_RATE_DA, DETECT_RATE_DB
from mzi.errno_ import MZE_ENGINE, MZE_INVAL
from mzi.error import MziError
from mzi.fock.closed_form import (coincidence_singlet_closed_form, coincidence_triplet_closed_form,
                                  detector_rate_closed_form, phase_readout_closed_form)
from mzi.fock.density import build_source, SOURCE_SINGLET, SOURCE_TRIPLET, SOURCE_UNPOLARIZED, SOURCE_VACUUM
from mzi.fock.interferometer import coincidence_rate, DETECTOR_A, DETECTOR_B, detector_rate, phase_readout
from mzi.misc import angular_distance

_LOGGER = logging.getLogger(__name__)

LABELS = {
    DETECT_RATE_DA: ('N_Da',),
    DETECT_RATE_DB: ('N_Db',),
    DETECT_COINCIDENCE: ('N_DaDb',),
    DETECT_PHASE: ('visibility', 'phase'),
}
PHASE_LABELS = frozenset(('phase',))


class SweepResult(object):
    """Table of sweep values and detect columns.

    Instance variables:
    variable -- name of the sweep variable, the first CSV column.
    labels -- list of column labels after the sweep variable.
    rows -- list of tuples (sweep value, column values...), ascending in the sweep value.
    """

    def __init__(self, variable, labels, rows):
        """Constructor."""
        self.variable = variable
        self.labels = list(labels)
        self.rows = [tuple(r) for r in rows]

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} variable={2} labels={3} rows={4}>'.format(
            self.__class__.__module__, self.__class__.__name__, self.variable, self.labels, len(self.rows),
        )

    def __len__(self):
        """Number of rows."""
        return len(self.rows)

    def column(self, label):
        """All values of one column (the sweep variable included) as a list."""
        index = 0 if label == self.variable else self.labels.index(label) + 1
        return [row[index] for row in self.rows]

    def max_difference(self):
        """Largest entry over all *_diff columns, 0.0 without any; nan entries are ignored."""
        values = [v for label in self.labels if label.endswith('_diff') for v in self.column(label)]
        values = [v for v in values if not math.isnan(v)]
        return max(values) if values else 0.0


def column_labels(detects, engine):
    """Labels of the columns produced for a list of detect requests."""
    labels = list()
    for detect in detects:
        for label in LABELS[detect]:
            labels.append(label)
            if engine == config.ENGINE_BOTH:
                labels.extend((label + '_oracle', label + '_diff'))
    return labels


def check_closed_form(spec):
    """Raise MZE_ENGINE unless the closed form engine covers every detect request of the circuit.

    Rates need the unpolarized source or the vacuum; coincidences need one of those with a lossless splitter, or the
    singlet or triplet with a symmetric lossless splitter; phase readouts need the unpolarized source.
    """
    bs, source = spec.beamsplitter, spec.source
    for detect in spec.detects:
        if detect in (DETECT_RATE_DA, DETECT_RATE_DB):
            covered = source in (SOURCE_UNPOLARIZED, SOURCE_VACUUM)
        elif detect == DETECT_COINCIDENCE:
            if source in (SOURCE_SINGLET, SOURCE_TRIPLET):
                covered = bs.is_symmetric() and bs.is_lossless()
            else:
                covered = bs.is_lossless()
        else:
            covered = source == SOURCE_UNPOLARIZED
        if not covered:
            raise MziError(MZE_ENGINE, 'closed form engine does not cover detect {0!r} with the {1} source and this '
                                       'beam splitter, use --engine=oracle'.format(detect, source))


def _phase_values(readout):
    return [readout.visibility, readout.phase if readout.defined else float('nan')]


def _closed(spec, deph, detect):
    bs = spec.beamsplitter
    if detect == DETECT_RATE_DA:
        return [detector_rate_closed_form(bs, deph, spec.source)[0]]
    if detect == DETECT_RATE_DB:
        return [detector_rate_closed_form(bs, deph, spec.source)[1]]
    if detect == DETECT_COINCIDENCE:
        if spec.source == SOURCE_SINGLET:
            return [coincidence_singlet_closed_form(bs, deph)]
        if spec.source == SOURCE_TRIPLET:
            return [coincidence_triplet_closed_form(bs, deph)]
        return [0.0]
    return _phase_values(phase_readout_closed_form(deph))


def _oracle(spec, rho, deph, detect):
    bs = spec.beamsplitter
    if detect == DETECT_RATE_DA:
        return [detector_rate(rho, bs, deph, DETECTOR_A)]
    if detect == DETECT_RATE_DB:
        return [detector_rate(rho, bs, deph, DETECTOR_B)]
    if detect == DETECT_COINCIDENCE:
        return [coincidence_rate(rho, bs, deph)]
    return _phase_values(phase_readout(rho, deph))


def _difference(label, closed, oracle):
    if label not in PHASE_LABELS:
        return abs(closed - oracle)
    if math.isnan(closed) and math.isnan(oracle):
        return 0.0
    if math.isnan(closed) or math.isnan(oracle):
        return float('nan')
    return angular_distance(closed, oracle)


def _evaluate_point(spec, engine, rho, value):
    deph = spec.dephasers_at(value)
    row = [float(value)]
    for detect in spec.detects:
        closed = _closed(spec, deph, detect) if engine != config.ENGINE_ORACLE else None
        oracle = _oracle(spec, rho, deph, detect) if engine != config.ENGINE_CLOSED else None
        if engine == config.ENGINE_CLOSED:
            row.extend(closed)
        elif engine == config.ENGINE_ORACLE:
            row.extend(oracle)
        else:
            for label, c, o in zip(LABELS[detect], closed, oracle):
                row.extend((c, o, _difference(label, c, o)))
    return tuple(row)


def run_sweep(spec, engine=None, jobs=1):
    """Evaluate every detect column at every sweep point.

    Positional arguments:
    spec -- CircuitSpec instance.

    Keyword arguments:
    engine -- config.ENGINE_CLOSED, config.ENGINE_ORACLE or config.ENGINE_BOTH; config.default_engine if None.
    jobs -- number of worker threads; rows keep ascending order whatever the value.

    Returns:
    SweepResult instance. Without detect requests there is nothing to measure and the result has no rows.
    """
    engine = engine or config.default_engine
    if engine not in config.ENGINES:
        raise MziError(MZE_INVAL, 'unknown engine {0!r}, valid engines: {1}'.format(engine, ', '.join(config.ENGINES)))
    if jobs < 1:
        raise MziError(MZE_INVAL, 'need at least one job, got {0}'.format(jobs))
    if engine != config.ENGINE_ORACLE:
        check_closed_form(spec)

    labels = column_labels(spec.detects, engine)
    if not spec.detects:
        _LOGGER.debug('no detect requests, empty sweep')
        return SweepResult(spec.sweep.variable, labels, list())

    rho = build_source(spec.source)
    values = spec.sweep.values()
    evaluate = functools.partial(_evaluate_point, spec, engine, rho)
    _LOGGER.debug('sweeping %s over %d points with the %s engine, %d jobs', spec.sweep.variable, len(values), engine,
                  jobs)
    if jobs == 1:
        rows = [evaluate(v) for v in values]
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(evaluate, values))
    return SweepResult(spec.sweep.variable, labels, rows)
