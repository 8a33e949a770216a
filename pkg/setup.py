# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

from setuptools import setup

# metadata, dependencies and tool configuration live in setup.cfg
setup()
