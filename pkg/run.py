#!/usr/bin/env python3
"""
clusterforge v1.0.0
Command line for cluster repetitive algebras and their coverings.

Usage:
    python run.py knit clusterforge/fixtures/a5_abc.json
    # or
    python -m clusterforge.cli knit clusterforge/fixtures/a5_abc.json

Requirements:
    - Python 3.9+
    - sympy, networkx, pydantic, filelock (pip install -r requirements.txt)
"""

import sys
import os

# Ensure Python 3.9+
if sys.version_info < (3, 9):
    print("Error: Python 3.9 or higher is required", file=sys.stderr)
    print(f"Current version: {sys.version}", file=sys.stderr)
    sys.exit(1)

# Add the project directory to path so 'clusterforge' can be imported
project_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_dir)

from clusterforge import main

if __name__ == "__main__":
    main()
