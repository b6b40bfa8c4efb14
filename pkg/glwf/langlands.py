# -*- coding: utf-8 -*-
"""Representation labels, Weil–Deligne parameters and wavefront sets.

An irreducible representation is labelled by a multisegment in one of two
conventions: ``zelevinsky`` (the segments give the unique irreducible
subrepresentation of the standard product) or ``langlands`` (the segments
give the essentially square-integrable data of the Langlands quotient,
equivalently the Weil–Deligne parameter).  The two labels of one
representation differ by the Aubert–Zelevinsky involution.
"""

import collections
from fractions import Fraction
from typing import Counter, Generator, Iterable, List, NamedTuple, Tuple

from typing_extensions import Final, Literal

from glwf.errors import GLWFError
from glwf.multisegments import (DEFAULT_LINE, CuspidalLine, Multisegment, Segment, is_linked, mw_dual,
                                split_by_line)
from glwf.partitions import Partition, dominance_leq, join, transpose

__all__ = [
    'RepLabel', 'WDSummand', 'WeilDeligneParameter', 'InertiaClass',
    'az', 'convert', 'parameter_of', 'nilpotent_partition', 'o_dual', 'wavefront', 'inertia_class',
    'upper_bound_holds', 'generic_labels',
]

Convention = Literal['zelevinsky', 'langlands']

#: Supported classification conventions.
CONVENTIONS = ('zelevinsky', 'langlands')  # type: Final[Tuple[str, ...]]

###############################################################################
# Typings


class _RepLabel(NamedTuple):
    multisegment: Multisegment
    convention: str


class RepLabel(_RepLabel):
    """Irreducible representation given by a multisegment and a convention.

    Raises:
        GLWFError: if the convention is unknown

    """

    __slots__ = ()

    def __new__(cls, multisegment: Multisegment, convention: str = 'langlands') -> 'RepLabel':
        if convention not in CONVENTIONS:
            raise GLWFError('unknown convention %r (expected one of %s)' % (convention, ', '.join(CONVENTIONS)))
        return super().__new__(cls, Multisegment(multisegment), convention)

    @property
    def degree(self) -> int:
        """int: ``n`` for a representation of :math:`\\mathrm{GL}_n`"""
        return self.multisegment.degree

    def __str__(self) -> str:
        return '%s [%s]' % (self.multisegment, self.convention)


class WDSummand(NamedTuple):
    """Summand ``σ ⊗ Sp(k)`` with ``σ = ρ ν^a`` of dimension ``line.dim``."""

    line: CuspidalLine
    start: Fraction
    length: int

    @property
    def dimension(self) -> int:
        """int: ``dim ρ · k``"""
        return self.line.dim * self.length

    def __str__(self) -> str:
        return '(%d,%s,%d)' % (self.line.dim, self.start, self.length)


class WeilDeligneParameter(tuple):
    """Multiset of :class:`WDSummand`, stored sorted."""

    def __new__(cls, summands: Iterable[WDSummand] = ()) -> 'WeilDeligneParameter':
        return super().__new__(cls, sorted(summands))  # type: ignore[arg-type]

    @property
    def dimension(self) -> int:
        """int: ``n = Σ m_i k_i``"""
        return sum(summand.dimension for summand in self)

    def __str__(self) -> str:
        return '+'.join(map(str, self)) or '0'


class InertiaClass(tuple):
    """Inertial support: each cuspidal line with the number of its cuspidal factors, sorted by line."""

    def __new__(cls, entries: Iterable[Tuple[CuspidalLine, int]] = ()) -> 'InertiaClass':
        counts = collections.Counter()  # type: Counter[CuspidalLine]
        for line, count in entries:
            if count < 1:
                raise GLWFError('inertia counts must be positive, got %r for %s' % (count, line))
            counts[line] += count
        return super().__new__(cls, sorted(counts.items()))  # type: ignore[arg-type]

    def __str__(self) -> str:
        return ' x '.join('%s^%d' % (line, count) for line, count in self) or '{}'


###############################################################################
# Conventions and the involution


def _dual_by_line(m: Multisegment) -> Multisegment:
    segments = []  # type: List[Segment]
    for part in split_by_line(m).values():
        segments.extend(mw_dual(part))
    return Multisegment(segments)


def az(label: RepLabel) -> RepLabel:
    """Aubert–Zelevinsky dual, in the convention of ``label``."""
    return RepLabel(_dual_by_line(label.multisegment), label.convention)


def convert(label: RepLabel) -> RepLabel:
    """The same representation labelled in the other convention."""
    other = 'langlands' if label.convention == 'zelevinsky' else 'zelevinsky'
    return RepLabel(_dual_by_line(label.multisegment), other)


def _langlands(label: RepLabel) -> Multisegment:
    return label.multisegment if label.convention == 'langlands' else convert(label).multisegment


###############################################################################
# Parameters


def parameter_of(label: RepLabel) -> WeilDeligneParameter:
    """Weil–Deligne parameter: one summand per segment of the Langlands label."""
    return WeilDeligneParameter(WDSummand(item.line, item.start, item.length) for item in _langlands(label))


def nilpotent_partition(p: WeilDeligneParameter) -> Partition:
    """Jordan type of ``N``: a summand ``(m, a, k)`` gives ``m`` Jordan blocks of size ``k``."""
    return join(*([summand.length] * summand.line.dim for summand in p))


def o_dual(label: RepLabel) -> Partition:
    """Partition of the orbit :math:`O^\\vee_\\pi` of the parameter's nilpotent."""
    return nilpotent_partition(parameter_of(label))


def wavefront(label: RepLabel) -> Partition:
    """Wavefront set of the representation, ``d(O∨)`` of its Aubert–Zelevinsky dual.

    >>> from glwf.multisegments import parse_multisegment
    >>> str(wavefront(RepLabel(parse_multisegment('(0,2)'), 'zelevinsky')))
    '(1,1,1)'

    """
    return transpose(o_dual(az(label)))


def upper_bound_holds(label: RepLabel) -> bool:
    """Whether ``WF(AZ(π)) ≤ d(O∨_π)`` in the dominance order; for :math:`\\mathrm{GL}_n` an equality."""
    return dominance_leq(wavefront(az(label)), transpose(o_dual(label)))


def inertia_class(m: Multisegment) -> InertiaClass:
    """Inertial support of ``m``: a segment of length ``k`` contributes ``k`` copies of its line."""
    return InertiaClass((item.line, item.length) for item in m)


def generic_labels(n: int, line: CuspidalLine = DEFAULT_LINE) -> List[RepLabel]:
    """Generic Langlands labels of degree ``n`` on ``line`` with integral exponents in ``0 .. n - 1``."""
    candidates = [Segment(line, start, length) for length in range(1, n + 1) for start in range(n - length + 1)]

    def _extend(index: int, remaining: int,
                chosen: Tuple[Segment, ...]) -> Generator[Tuple[Segment, ...], None, None]:
        if remaining == 0:
            yield chosen
            return
        for position in range(index, len(candidates)):
            item = candidates[position]
            if item.length * line.dim > remaining:
                continue
            if any(is_linked(item, other) for other in chosen):
                continue
            yield from _extend(position, remaining - item.length * line.dim, chosen + (item,))

    return [RepLabel(Multisegment(chosen), 'langlands') for chosen in _extend(0, n, ())]
