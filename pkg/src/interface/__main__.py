# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

import sys

from .cli import main


if __name__ == "__main__":
    sys.exit(main())
