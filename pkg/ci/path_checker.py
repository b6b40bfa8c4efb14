# -*- coding: utf-8 -*-
"""Report where :mod:`glwf` is imported from; ``strict`` insists on an installed copy."""

import importlib
import os
import re
import sys

PACKAGE = 'glwf'

if not os.path.isfile('setup.py'):
    sys.exit('Please execute this script in the project root directory.')

strict = len(sys.argv) > 1 and sys.argv[1] == 'strict'
if not strict:
    sys.path.insert(0, '.')

location = os.path.dirname(importlib.import_module(PACKAGE).__file__)
print('Package %s is located at: %s' % (PACKAGE, location))

if strict and not re.search(r'\b(?:site|dist)-packages\b', location):
    sys.exit('Error: package %s is not an installed version' % PACKAGE)
