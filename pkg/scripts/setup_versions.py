# -*- coding: utf-8 -*-
"""Stamp the current version into the manual page and the Sphinx configuration."""

import os
import re
import subprocess  # nosec
import sys
import time

os.chdir(os.path.dirname(os.path.dirname(os.path.realpath(__file__))))

version = subprocess.check_output([sys.executable,  # nosec
                                   os.path.join('scripts', 'find_version.py')],
                                  universal_newlines=True).strip()

#: File name and the substitutions applied to it, line by line.
TARGETS = [
    (os.path.join('share', 'glwf.rst'), [
        (r'^:Version: .*$', ':Version: v%s' % version),
        (r'^:Date: .*$', ':Date: %s' % time.strftime('%B %d, %Y')),
    ]),
    (os.path.join('docs', 'source', 'conf.py'), [
        (r'^release = .*$', 'release = %r' % version),
    ]),
]

for path, rules in TARGETS:
    with open(path, 'r', encoding='utf-8') as file:
        text = file.read()
    for pattern, replacement in rules:
        text = re.sub(pattern, replacement, text, flags=re.MULTILINE)
    with open(path, 'w', encoding='utf-8') as file:
        file.write(text)
    print('updated %s to v%s' % (path, version))
