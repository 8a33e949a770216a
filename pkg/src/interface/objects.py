# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Objects module to get the useful names into the correct namespace.
"""

__module__ = 'diffinfo.objects'

from ._objects.finset import FinSet
from ._objects.point import Point
from ._objects.bitvector import BitVector, CharString
from ._objects.dilationspec import DilationSpec
from ._objects.codebook import Codebook, SubsetProblem
from ._objects.sbxor import SbxorInstance
from ._objects.formula import PropFormula, CNF

__all__ = ['FinSet', 'Point', 'BitVector', 'CharString', 'DilationSpec',
           'Codebook', 'SubsetProblem', 'SbxorInstance', 'PropFormula', 'CNF']

# The value types live in private modules; documentation should list them
# under the public namespace.
for _cls in (FinSet, Point, BitVector, CharString, DilationSpec, Codebook,
             SubsetProblem, SbxorInstance, PropFormula, CNF):
    _cls.__module__ = 'diffinfo.objects'
del _cls
