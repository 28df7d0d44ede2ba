__all__ = [
    'diagonalize',
    'degeneracy_groups',
    'simultaneous_eigenbasis',
    'LabeledSpectrum',
    'label_spectrum',
    'LevelMatch',
    'SpectrumMatchReport',
    'predict_level',
    'compare_spectra']

from symadapt.spectra.diagonalize import (
    diagonalize, degeneracy_groups, simultaneous_eigenbasis)
from symadapt.spectra.labels import LabeledSpectrum, label_spectrum
from symadapt.spectra.compare import (
    LevelMatch, SpectrumMatchReport, predict_level, compare_spectra)
