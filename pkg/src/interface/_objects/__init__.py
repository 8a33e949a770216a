# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Objects module; contains the value types shared by all diffinfo modules.
"""

__all__ = ['BitVector', 'CharString', 'Codebook', 'DilationSpec', 'FinSet',
           'Point', 'PropFormula', 'CNF', 'SbxorInstance', 'SubsetProblem']
__module__ = 'diffinfo.objects'
