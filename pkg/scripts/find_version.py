# -*- coding: utf-8 -*-
"""Print the version of :mod:`glwf` without importing the package."""

import ast
import os
import re
import sys

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.realpath(__file__)))
INIT_FILE = os.path.join(PROJECT_ROOT, 'glwf', '__init__.py')

with open(INIT_FILE, 'r', encoding='utf-8') as file:
    assignments = re.findall(r'(?am)^__version__\s*=\s*(.*?)$', file.read())

if len(assignments) != 1:
    sys.exit('expected exactly one __version__ in %s, found %d' % (INIT_FILE, len(assignments)))
print(ast.literal_eval(assignments[0]))
