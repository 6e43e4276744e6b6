#!/usr/bin/env python3
import sys

from acyclic_coloring.cli import main

if __name__ == "__main__":
    sys.exit(main())
