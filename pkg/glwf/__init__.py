# -*- coding: utf-8 -*-
"""Exact combinatorics of representations of GL(n) over a p-adic field.

Multisegments, their Aubert–Zelevinsky duals and Langlands parameters,
Kazhdan–Lusztig multiplicities, local character expansions, wavefront sets,
Spaltenstein duality of nilpotent orbits in types A and D, and the reduction
of pure types to unipotent data of a twisted Levi subgroup.
"""

# version string
__version__ = '0.1.0'
