# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

from importlib import metadata


__version__ = metadata.version('diffinfo')

__all__ = ['objects', 'options', 'errors', 'numeric', 'pairing', 'setcodec',
           'dilation', 'injection', 'subsets', 'xor', 'sat', 'entropy',
           'concurrent', 'cli']
