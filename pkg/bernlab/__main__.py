# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING

import sys

from .system import main

if __name__ == '__main__':
    sys.exit(main())

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
