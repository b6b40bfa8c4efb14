# -*- coding: utf-8 -*-
"""Partitions and compositions.

Partitions label nilpotent orbits of :math:`\\mathfrak{gl}_n` (Jordan types);
the dominance order is their closure order and the transpose realises
Spaltenstein duality in type A.
"""

import collections
import itertools
import json
import re
from typing import Dict, Generator, Iterable, List, Optional, Union

from glwf.errors import InvalidPartitionError, ParseError, SizeMismatchError

__all__ = [
    'Partition', 'Composition', 'transpose', 'dominance_leq', 'sort_to_partition',
    'expand_multiplicity', 'multiplicities', 'join', 'integer_partitions', 'integer_compositions',
    'parse_partition', 'format_partition',
]

###############################################################################
# Typings


class Composition(tuple):
    """Finite sequence of positive integers.

    Args:
        parts (Iterable[int]): the parts, in order

    Raises:
        InvalidPartitionError: if a part is not a positive integer

    """

    def __new__(cls, parts: Iterable[int] = ()) -> 'Composition':
        values = tuple(parts)
        for part in values:
            if isinstance(part, bool) or not isinstance(part, int) or part < 1:
                raise InvalidPartitionError('parts must be positive integers, got %r' % (values,))
        return super().__new__(cls, values)  # type: ignore[arg-type]

    @property
    def n(self) -> int:
        """int: sum of the parts"""
        return sum(self)

    def __repr__(self) -> str:
        return '%s(%s)' % (type(self).__name__, ', '.join(map(str, self)))

    def __str__(self) -> str:
        return format_partition(self)


class Partition(Composition):
    """Weakly decreasing finite sequence of positive integers.

    Trailing zeros are never stored; the empty partition (of ``0``) is
    allowed.

    >>> str(Partition([3, 1, 1]))
    '(3,1,1)'

    Raises:
        InvalidPartitionError: if the parts are not positive or not weakly decreasing

    """

    def __new__(cls, parts: Iterable[int] = ()) -> 'Partition':
        self = super().__new__(cls, parts)
        if any(a < b for a, b in zip(self, self[1:])):
            raise InvalidPartitionError('parts must be weakly decreasing, got %r' % (tuple(self),))
        return self  # type: ignore[return-value]


###############################################################################
# Operations


def transpose(lam: Partition) -> Partition:
    """Conjugate partition, reading the Young diagram by columns.

    >>> str(transpose(Partition([3, 1])))
    '(2,1,1)'

    """
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """Dominance order: every partial sum of ``lam`` is at most that of ``mu``.

    Raises:
        SizeMismatchError: if ``lam`` and ``mu`` are partitions of different integers

    """
    if sum(lam) != sum(mu):
        raise SizeMismatchError('cannot compare partitions of %d and %d' % (sum(lam), sum(mu)))
    for left, right in zip(itertools.accumulate(lam), itertools.accumulate(mu)):
        if left > right:
            return False
    # the shorter partition is zero-padded; once it runs out its partial sums
    # equal the total, which the other side can only match
    return True


def sort_to_partition(alpha: Iterable[int]) -> Partition:
    """Sort the parts of a composition into a partition."""
    return Partition(sorted(Composition(alpha), reverse=True))


def expand_multiplicity(lam: Partition, m: int) -> Partition:
    """Repeat every part of ``lam`` ``m`` times.

    Raises:
        InvalidPartitionError: if ``m`` is not positive

    """
    if m < 1:
        raise InvalidPartitionError('multiplicity must be positive, got %r' % m)
    return Partition(part for part in lam for _ in range(m))


def multiplicities(lam: Iterable[int]) -> Dict[int, int]:
    """Map each part to the number of times it occurs, largest part first."""
    counter = collections.Counter(lam)
    return {part: counter[part] for part in sorted(counter, reverse=True)}


def join(*partitions: Iterable[int]) -> Partition:
    """Multiset union of parts; the empty partition is the identity."""
    return Partition(sorted(itertools.chain.from_iterable(partitions), reverse=True))


def integer_partitions(n: int, bound: Optional[int] = None) -> Generator[Partition, None, None]:
    """Generate the partitions of ``n`` in decreasing lexicographic order.

    Args:
        n (int): the integer to partition
        bound (Optional[int]): upper bound on the largest part

    """
    def _partitions(rest: int, largest: int) -> Generator[List[int], None, None]:
        if rest == 0:
            yield []
            return
        for part in range(min(rest, largest), 0, -1):
            for tail in _partitions(rest - part, part):
                yield [part] + tail

    if n < 0:
        return
    for parts in _partitions(n, n if bound is None else bound):
        yield Partition(parts)


def integer_compositions(n: int) -> Generator[Composition, None, None]:
    """Generate the compositions of ``n`` (``2 ** (n - 1)`` of them for ``n > 0``)."""
    if n == 0:
        yield Composition()
        return
    for first in range(n, 0, -1):
        for tail in integer_compositions(n - first):
            yield Composition((first,) + tuple(tail))


###############################################################################
# Text forms

#: Characters allowed around a plain list of parts.
_PLAIN_PARTS = re.compile(r'^[\s(]*([0-9+,\s]*?)[\s)]*$')


def parse_partition(text: Union[str, bytes]) -> Partition:
    """Parse ``3+2+1``, ``3,2,1``, ``(3,2,1)`` or the JSON array ``[3,2,1]``.

    Raises:
        ParseError: if the text is none of the accepted forms
        InvalidPartitionError: if the parts do not form a partition

    """
    if isinstance(text, bytes):
        text = text.decode('utf-8')
    text = text.strip()
    if text.startswith('['):
        try:
            parts = json.loads(text)
        except ValueError as error:
            raise ParseError('invalid JSON partition %r' % text) from error
        if not isinstance(parts, list) or not all(isinstance(part, int) for part in parts):
            raise ParseError('JSON partition must be an array of integers, got %r' % text)
        return Partition(parts)

    match = _PLAIN_PARTS.match(text)
    if match is None:
        raise ParseError('invalid partition %r' % text)
    body = match.group(1).strip()
    if not body:
        return Partition()
    try:
        return Partition(int(part) for part in re.split(r'[+,]', body))
    except ValueError as error:
        if isinstance(error, InvalidPartitionError):
            raise
        raise ParseError('invalid partition %r' % text) from error


def format_partition(lam: Iterable[int]) -> str:
    """Render parts as ``(3,2,1)``; the empty partition is ``()``."""
    return '(%s)' % ','.join(map(str, lam))
