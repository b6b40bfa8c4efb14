# -*- coding: utf-8 -*-
"""Segments, multisegments and the Mœglin–Waldspurger algorithm.

A segment is a string ``ρ, νρ, …, ν^{k-1}ρ`` of cuspidal representations on
one *cuspidal line* (``ρ`` up to unramified twist), encoded by the line, a
rational start exponent and a length.  Points of one line whose exponents
differ by an integer form a *lattice block*; blocks never interact, so every
algorithm below works block by block.
"""

import collections
import collections.abc
import itertools
import json
import re
from fractions import Fraction
from typing import (Any, Counter, DefaultDict, Dict, Generator, Iterable, Iterator, List, NamedTuple,
                    Optional, Tuple, Union)

from typing_extensions import Final

from glwf.errors import GLWFError, LineMismatchError, ParseError, SupportMismatchError
from glwf.partitions import Partition

__all__ = [
    'CuspidalLine', 'DEFAULT_LINE', 'Segment', 'Multisegment', 'SupportMultiset',
    'as_rational', 'segment', 'support', 'precedes', 'is_linked', 'standard_order', 'mw_dual',
    'lengths_partition', 'rank_function', 'closure_leq_graded', 'enumerate_multisegments', 'singletons',
    'is_generic', 'split_by_line', 'parse_multisegment', 'format_multisegment', 'parse_support',
    'multisegment_as_json', 'multisegment_from_json',
]

Rational = Union[int, str, Fraction]

###############################################################################
# Typings


class _CuspidalLine(NamedTuple):
    ident: str
    dim: int


class CuspidalLine(_CuspidalLine):
    """Cuspidal representation up to unramified twist.

    Args:
        ident (str): opaque identifier
        dim (int): ``m`` for a cuspidal representation of :math:`\\mathrm{GL}_m`

    """

    __slots__ = ()

    def __new__(cls, ident: str, dim: int = 1) -> 'CuspidalLine':
        ident = str(ident)
        if not re.fullmatch(r'[A-Za-z0-9_]+', ident):
            raise ParseError('invalid cuspidal line identifier %r' % ident)
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
            raise GLWFError('cuspidal dimension must be a positive integer, got %r' % (dim,))
        return super().__new__(cls, ident, dim)

    def __str__(self) -> str:
        return 'rho%s[%d]' % (self.ident, self.dim)


#: Line used when none is given: the trivial character of :math:`\mathrm{GL}_1`.
DEFAULT_LINE = CuspidalLine('1', 1)  # type: Final[CuspidalLine]


def as_rational(value: Rational) -> Fraction:
    """Convert an exponent to :class:`~fractions.Fraction`.

    Raises:
        ParseError: if ``value`` is not a rational number

    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError('exponents must be integers, fractions or strings, got %r' % (value,))
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as error:
        raise ParseError('invalid rational number %r' % value) from error


class _Segment(NamedTuple):
    line: CuspidalLine
    start: Fraction
    length: int


class Segment(_Segment):
    """Segment ``[start, start + length - 1]`` on a cuspidal line."""

    __slots__ = ()

    def __new__(cls, line: CuspidalLine, start: Rational, length: int) -> 'Segment':
        if not isinstance(line, CuspidalLine):
            raise GLWFError('segment line must be a CuspidalLine, got %r' % (line,))
        if isinstance(length, bool) or not isinstance(length, int) or length < 1:
            raise GLWFError('segment length must be a positive integer, got %r' % (length,))
        return super().__new__(cls, line, as_rational(start), length)

    @property
    def end(self) -> Fraction:
        """Fraction: last exponent of the segment"""
        return self.start + self.length - 1

    @property
    def block(self) -> Tuple[CuspidalLine, Fraction]:
        """Tuple[CuspidalLine, Fraction]: line and exponent class modulo the integers"""
        return self.line, self.start % 1

    def points(self) -> Tuple[Fraction, ...]:
        """Exponents covered by the segment."""
        return tuple(self.start + offset for offset in range(self.length))

    def covers(self, i: Fraction, j: Fraction) -> bool:
        """Whether the segment contains every point of ``[i, j]`` (``i`` and ``j`` on its lattice)."""
        return self.start <= i and j <= self.end and (i - self.start).denominator == 1

    def __str__(self) -> str:
        return '(%s,%s)' % (self.start, self.end)


def segment(start: Rational, end: Optional[Rational] = None, line: CuspidalLine = DEFAULT_LINE) -> Segment:
    """Build a segment from its endpoints; ``end`` defaults to ``start``.

    Raises:
        GLWFError: if ``end - start`` is not a nonnegative integer

    """
    first = as_rational(start)
    last = first if end is None else as_rational(end)
    span = last - first
    if span.denominator != 1 or span < 0:
        raise GLWFError('invalid segment endpoints (%s,%s)' % (first, last))
    return Segment(line, first, int(span) + 1)


class Multisegment(tuple):
    """Finite multiset of segments, stored sorted.

    >>> str(Multisegment([segment(1), segment(0)]))
    '(0,0)+(1,1)'

    """

    def __new__(cls, segments: Iterable[Segment] = ()) -> 'Multisegment':
        items = tuple(segments)
        for item in items:
            if not isinstance(item, Segment):
                raise GLWFError('multisegments hold Segment objects, got %r' % (item,))
        return super().__new__(cls, sorted(items))  # type: ignore[arg-type]

    @property
    def lines(self) -> Tuple[CuspidalLine, ...]:
        """Tuple[CuspidalLine, ...]: cuspidal lines met by the multisegment"""
        return tuple(sorted({item.line for item in self}))

    @property
    def degree(self) -> int:
        """int: ``n`` such that the multisegment labels a representation of :math:`\\mathrm{GL}_n`"""
        return sum(item.line.dim * item.length for item in self)

    @property
    def size(self) -> int:
        """int: number of points counted with multiplicity"""
        return sum(item.length for item in self)

    def blocks(self) -> Dict[Tuple[CuspidalLine, Fraction], 'Multisegment']:
        """Split into lattice blocks."""
        groups = collections.defaultdict(list)  # type: DefaultDict[Tuple[CuspidalLine, Fraction], List[Segment]]
        for item in self:
            groups[item.block].append(item)
        return {key: Multisegment(groups[key]) for key in sorted(groups)}

    def __repr__(self) -> str:
        return 'Multisegment(%r)' % format_multisegment(self)

    def __str__(self) -> str:
        return format_multisegment(self)


class SupportMultiset(collections.abc.Mapping):
    """Multiset of points ``(line, exponent)``, immutable and hashable.

    Raises:
        GLWFError: if a multiplicity is not positive

    """

    __slots__ = ('_counts', '_lookup')

    def __init__(self, counts: Union[Dict[Tuple[CuspidalLine, Fraction], int],
                                     Iterable[Tuple[Tuple[CuspidalLine, Fraction], int]]] = ()) -> None:
        items = counts.items() if isinstance(counts, dict) else counts
        merged = collections.Counter()  # type: Counter[Tuple[CuspidalLine, Fraction]]
        for (line, point), count in items:
            if count < 1:
                raise GLWFError('support multiplicities must be positive, got %r at %s' % (count, point))
            merged[(line, as_rational(point))] += count
        self._counts = tuple(sorted(merged.items()))
        self._lookup = dict(self._counts)

    @classmethod
    def on_line(cls, points: Dict[Rational, int], line: CuspidalLine = DEFAULT_LINE) -> 'SupportMultiset':
        """Support on a single line from ``{exponent: multiplicity}``."""
        return cls({(line, as_rational(point)): count for point, count in points.items()})

    def __getitem__(self, key: Tuple[CuspidalLine, Fraction]) -> int:
        return self._lookup[key]

    def __iter__(self) -> Iterator[Tuple[CuspidalLine, Fraction]]:
        return (item for item, _ in self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SupportMultiset):
            return self._counts == other._counts
        return super().__eq__(other)

    def __hash__(self) -> int:
        return hash(self._counts)

    @property
    def total(self) -> int:
        """int: number of points counted with multiplicity"""
        return sum(count for _, count in self._counts)

    @property
    def lines(self) -> Tuple[CuspidalLine, ...]:
        """Tuple[CuspidalLine, ...]: lines met by the support"""
        return tuple(sorted({line for (line, _), _ in self._counts}))

    def is_multiplicity_free(self) -> bool:
        """Whether every point occurs once."""
        return all(count == 1 for _, count in self._counts)

    def __repr__(self) -> str:
        return 'SupportMultiset(%r)' % str(self)

    def __str__(self) -> str:
        groups = collections.OrderedDict()  # type: Dict[CuspidalLine, List[str]]
        for (line, point), count in self._counts:
            groups.setdefault(line, []).append('%s:%d' % (point, count))
        if not groups:
            return '{}'
        return ';'.join(('' if line == DEFAULT_LINE else '%s:' % (line,)) + ','.join(points)
                        for line, points in groups.items())


###############################################################################
# Linkage and ordering


def support(m: Multisegment) -> SupportMultiset:
    """Points of ``m`` counted once per covering segment."""
    counts = collections.Counter()  # type: Counter[Tuple[CuspidalLine, Fraction]]
    for item in m:
        for point in item.points():
            counts[(item.line, point)] += 1
    return SupportMultiset(dict(counts))


def precedes(d1: Segment, d2: Segment) -> bool:
    """Whether ``d1`` precedes ``d2``: linked, with ``d1`` starting first.

    The union of two linked segments is a segment while neither contains the
    other.
    """
    if d1.line != d2.line or (d2.start - d1.start).denominator != 1:
        return False
    return d2.start > d1.start and d2.end > d1.end and d2.start <= d1.end + 1


def is_linked(d1: Segment, d2: Segment) -> bool:
    return precedes(d1, d2) or precedes(d2, d1)


def standard_order(m: Multisegment) -> Tuple[Segment, ...]:
    """Order segments so that no earlier one precedes a later one."""
    return tuple(sorted(m, key=lambda item: (-item.start, -item.end, item.line)))


def is_generic(m: Multisegment) -> bool:
    """Whether no two segments of ``m`` are linked."""
    return not any(is_linked(d1, d2) for d1, d2 in itertools.combinations(m, 2))


def lengths_partition(m: Multisegment) -> Partition:
    """Sorted segment lengths."""
    return Partition(sorted((item.length for item in m), reverse=True))


def split_by_line(m: Multisegment) -> Dict[CuspidalLine, Multisegment]:
    """Group the segments of ``m`` by cuspidal line."""
    return {line: Multisegment(item for item in m if item.line == line) for line in m.lines}


###############################################################################
# Aubert–Zelevinsky involution


def _mw_dual_block(pairs: List[List[Fraction]]) -> List[Tuple[Fraction, Fraction]]:
    """Mœglin–Waldspurger algorithm on ``[start, end]`` pairs of one lattice block."""
    result = []  # type: List[Tuple[Fraction, Fraction]]
    while pairs:
        top = max(end for _, end in pairs)
        # first segment: largest end, then largest start
        chosen = [max((index for index, (_, end) in enumerate(pairs) if end == top),
                      key=lambda index: pairs[index][0])]
        while True:
            start, end = pairs[chosen[-1]]
            candidates = [index for index, (other_start, other_end) in enumerate(pairs)
                          if index not in chosen and other_end == end - 1 and other_start < start]
            if not candidates:
                break
            chosen.append(max(candidates, key=lambda index: pairs[index][0]))
        result.append((top - len(chosen) + 1, top))
        for index in chosen:
            pairs[index][1] -= 1
        pairs = [pair for pair in pairs if pair[1] >= pair[0]]
    return result


def mw_dual(m: Multisegment) -> Multisegment:
    """Aubert–Zelevinsky dual of ``m`` by the Mœglin–Waldspurger algorithm.

    Repeatedly take a segment with the largest end (largest start among
    those), then chase segments ending one step earlier and starting
    strictly earlier, always taking the largest start; the chain of ``K``
    segments ending at ``b`` contributes the dual segment ``[b - K + 1, b]``
    and every chained segment loses its last point.

    >>> str(mw_dual(Multisegment([segment(0, 1)])))
    '(0,0)+(1,1)'

    Raises:
        LineMismatchError: if ``m`` meets more than one cuspidal line

    """
    if len(m.lines) > 1:
        raise LineMismatchError('mw_dual needs a single cuspidal line, got %s'
                                % ', '.join(map(str, m.lines)))
    result = []  # type: List[Segment]
    for (line, _), block in m.blocks().items():
        pairs = [[item.start, item.end] for item in block]
        result.extend(segment(start, end, line) for start, end in _mw_dual_block(pairs))
    return Multisegment(result)


###############################################################################
# Graded closure order


def rank_function(m: Multisegment, i: Rational, j: Rational, line: Optional[CuspidalLine] = None) -> int:
    """Number of segments of ``m`` containing ``[i, j]``.

    Args:
        m (Multisegment): the multisegment
        i (Rational): first point
        j (Rational): last point, ``j - i`` a nonnegative integer
        line (Optional[CuspidalLine]): line of the points, the unique line of ``m`` if omitted

    Raises:
        LineMismatchError: if ``line`` is omitted and ``m`` meets several lines
        GLWFError: if ``[i, j]`` is not an interval of one lattice

    """
    first, last = as_rational(i), as_rational(j)
    if (last - first).denominator != 1 or last < first:
        raise GLWFError('[%s, %s] is not an interval of a lattice' % (first, last))
    if line is None:
        lines = m.lines
        if len(lines) > 1:
            raise LineMismatchError('rank_function needs a line for multisegments on several lines')
        line = lines[0] if lines else DEFAULT_LINE
    return sum(1 for item in m if item.line == line and item.covers(first, last))


def _rank_table(m: Multisegment) -> Counter[Tuple[CuspidalLine, Fraction, Fraction]]:
    """Nonzero ranks ``r(i, j)``, ``i < j``."""
    ranks = collections.Counter()  # type: Counter[Tuple[CuspidalLine, Fraction, Fraction]]
    for item in m:
        for first, last in itertools.combinations(item.points(), 2):
            ranks[(item.line, first, last)] += 1
    return ranks


def _ranks_leq(m1: Multisegment, m2: Multisegment) -> bool:
    ranks1, ranks2 = _rank_table(m1), _rank_table(m2)
    return all(count <= ranks2[key] for key, count in ranks1.items())


def closure_leq_graded(m1: Multisegment, m2: Multisegment) -> bool:
    """Closure order of the orbits of ``m1`` and ``m2``: every rank of ``m1`` is bounded by that of ``m2``.

    Raises:
        SupportMismatchError: if the supports differ

    """
    if support(m1) != support(m2):
        raise SupportMismatchError('cannot compare %s and %s: supports differ' % (m1, m2))
    return _ranks_leq(m1, m2)


def orbit_dimension_key(m: Multisegment) -> int:
    """Sum of all ranks; strictly increasing along the closure order on a fixed support."""
    return sum(_rank_table(m).values())


def enumerate_multisegments(s: SupportMultiset) -> List[Multisegment]:
    """All multisegments with support ``s``.

    The smallest point is peeled off first: its multiplicity is split into a
    weakly decreasing list of segment lengths, and the remaining support is
    enumerated recursively.  The result is sorted along a linear extension of
    the closure order, the all-singletons multisegment first.
    """
    def _peel(counts: Dict[Tuple[CuspidalLine, Fraction], int]) -> Generator[List[Segment], None, None]:
        if not counts:
            yield []
            return
        line, point = min(counts)
        longest = 0
        while counts.get((line, point + longest), 0) > 0:
            longest += 1
        for lengths in itertools.combinations_with_replacement(range(longest, 0, -1), counts[(line, point)]):
            rest = dict(counts)
            feasible = True
            for length in lengths:
                for offset in range(length):
                    key = (line, point + offset)
                    rest[key] = rest.get(key, 0) - 1
                    if rest[key] < 0:
                        feasible = False
            if not feasible:
                continue
            rest = {key: count for key, count in rest.items() if count}
            head = [Segment(line, point, length) for length in lengths]
            for tail in _peel(rest):
                yield head + tail

    found = {Multisegment(items) for items in _peel(dict(s.items()))}
    return sorted(found, key=lambda m: (orbit_dimension_key(m), m))


def singletons(s: SupportMultiset) -> Multisegment:
    """The all-singletons multisegment, the minimum of the closure order on ``s``."""
    return Multisegment(Segment(line, point, 1) for (line, point), count in s.items() for _ in range(count))


###############################################################################
# Text and JSON forms

#: Line prefix ``rho<id>[<dim>]:``.
_LINE_PREFIX = re.compile(r'^\s*rho([A-Za-z0-9_]+)\[(\d+)\]\s*:(.*)$', re.DOTALL)
#: Segment ``(a,b)`` or ``(a)``.
_SEGMENT = re.compile(r'^\(\s*([^,()\s]+)\s*(?:,\s*([^,()\s]+)\s*)?\)$')


def _split_line_prefix(group: str) -> Tuple[CuspidalLine, str]:
    match = _LINE_PREFIX.match(group)
    if match is None:
        return DEFAULT_LINE, group.strip()
    return CuspidalLine(match.group(1), int(match.group(2))), match.group(3).strip()


def parse_multisegment(text: str) -> Multisegment:
    """Parse ``rho<id>[m]:(a,b)+(c,d);…``.

    Groups are separated by ``;``; a group without a line prefix lies on
    :data:`DEFAULT_LINE`.  ``(a)`` is the singleton ``(a,a)`` and ``{}`` the
    empty multisegment.

    Raises:
        ParseError: if the text does not follow the grammar

    """
    segments = []  # type: List[Segment]
    for group in text.split(';'):
        line, body = _split_line_prefix(group)
        if body in ('', '{}'):
            continue
        for token in body.split('+'):
            match = _SEGMENT.match(token.strip())
            if match is None:
                raise ParseError('invalid segment %r in %r' % (token.strip(), text))
            try:
                segments.append(segment(match.group(1), match.group(2), line))
            except ParseError:
                raise
            except GLWFError as error:
                raise ParseError('invalid segment %r: %s' % (token.strip(), error)) from error
    return Multisegment(segments)


def format_multisegment(m: Multisegment) -> str:
    """Inverse of :func:`parse_multisegment`; segments in canonical order."""
    if not m:
        return '{}'
    groups = []
    for line, part in split_by_line(m).items():
        body = '+'.join(str(item) for item in part)
        groups.append(body if line == DEFAULT_LINE else '%s:%s' % (line, body))
    return ';'.join(groups)


def parse_support(text: str, line: CuspidalLine = DEFAULT_LINE) -> SupportMultiset:
    """Parse ``0:2,1:2`` (point and multiplicity) or ``0,0,1,1`` into a support.

    Groups may carry a ``rho<id>[m]:`` prefix and are separated by ``;``.

    Raises:
        ParseError: if the text does not follow the grammar

    """
    counts = collections.Counter()  # type: Counter[Tuple[CuspidalLine, Fraction]]
    for group in text.split(';'):
        match = _LINE_PREFIX.match(group)
        group_line, body = (line, group.strip()) if match is None else (
            CuspidalLine(match.group(1), int(match.group(2))), match.group(3).strip())
        if body in ('', '{}'):
            continue
        for token in body.split(','):
            point, _, count = token.strip().partition(':')
            try:
                multiplicity = int(count) if count else 1
            except ValueError as error:
                raise ParseError('invalid multiplicity in %r' % token) from error
            if multiplicity < 1:
                raise ParseError('multiplicities must be positive, got %r' % token)
            counts[(group_line, as_rational(point.strip()))] += multiplicity
    return SupportMultiset(dict(counts))


def multisegment_as_json(m: Multisegment) -> Dict[str, Any]:
    """JSON mirror ``{"lines": [{"line": "1", "dim": 1, "segments": [["0", "1"]]}]}``."""
    return {'lines': [{'line': line.ident, 'dim': line.dim,
                       'segments': [[str(item.start), str(item.end)] for item in part]}
                      for line, part in split_by_line(m).items()]}


def multisegment_from_json(data: Union[str, Dict[str, Any]]) -> Multisegment:
    """Inverse of :func:`multisegment_as_json`; also accepts the encoded string.

    Raises:
        ParseError: if the document does not follow the schema

    """
    try:
        document = json.loads(data) if isinstance(data, str) else data
        segments = [segment(start, end, CuspidalLine(group['line'], group['dim']))
                    for group in document['lines'] for start, end in group['segments']]
    except (ValueError, KeyError, TypeError) as error:
        if isinstance(error, GLWFError):
            raise
        raise ParseError('invalid multisegment document %r' % (data,)) from error
    return Multisegment(segments)
