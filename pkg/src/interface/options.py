# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Options module to grab the options object into this namespace.
"""

from ._options.options import (Options, Literals, ZetaKind, SubsetOp, RateKind,
                               LogicOp, LogicMode, resolve_options)
from ._options.interface import SurfaceSample, CensusTable, SolutionCensus, DensityResult

__all__ = ['Options', 'Literals', 'ZetaKind', 'SubsetOp', 'RateKind', 'LogicOp',
           'LogicMode', 'SurfaceSample', 'CensusTable', 'SolutionCensus', 'DensityResult',
           'resolve_options']

Options.__module__ = 'diffinfo.options'
SurfaceSample.__module__ = 'diffinfo.options'
CensusTable.__module__ = 'diffinfo.options'
SolutionCensus.__module__ = 'diffinfo.options'
