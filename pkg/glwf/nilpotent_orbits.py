# -*- coding: utf-8 -*-
"""Nilpotent orbits of types A and D, Spaltenstein duality and outer automorphisms.

Orbits of :math:`\\mathfrak{gl}_k` (type ``A(k)``) are labelled by partitions
of ``k``; orbits of :math:`\\mathfrak{so}_{2k}` (type ``D(k)``) by partitions
of ``2k`` in which every even part has even multiplicity, the *very even*
ones (all parts even) splitting into two orbits tagged ``I`` and ``II``.
The tags are opaque: only their behaviour under duality and under the
diagram flip is modelled.
"""

import functools
from typing import Any, Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple, Union

from typing_extensions import Final, Literal

from glwf.errors import (AmbiguousNumeralError, IncompatibleAutomorphismError, InvalidPartitionError,
                         OrbitLabelError)
from glwf.partitions import Partition, dominance_leq, integer_partitions, multiplicities, transpose

__all__ = [
    'SimpleOrbitLabel', 'ProductOrbitLabel', 'OuterAutomorphism',
    'is_valid_D', 'is_very_even', 'collapse_D', 'spaltenstein_A', 'spaltenstein_D', 'spaltenstein',
    'spaltenstein_product', 'orbit_labels', 'is_special', 'diagram_flip', 'outer_action', 'closure_leq',
    'is_fixed', 'twisted_levi_label', 'galois_rotation', 'label_from_json',
]

LieType = Literal['A', 'D']
Numeral = Optional[Literal['I', 'II']]

#: Supported Lie types.
LIE_TYPES = ('A', 'D')  # type: Final[Tuple[str, ...]]
#: Numerals tagging the two orbits of a very even partition.
NUMERALS = ('I', 'II')  # type: Final[Tuple[str, ...]]

###############################################################################
# Typings


class _SimpleOrbitLabel(NamedTuple):
    lie_type: str
    rank: int
    partition: Partition
    numeral: Optional[str]


class SimpleOrbitLabel(_SimpleOrbitLabel):
    """Nilpotent orbit of a simple Lie algebra of type ``A(k)`` or ``D(k)``.

    Args:
        lie_type (Literal['A', 'D']): Lie type tag
        rank (int): ``k``, so that type ``A(k)`` is :math:`\\mathfrak{gl}_k` and
            type ``D(k)`` is :math:`\\mathfrak{so}_{2k}`
        partition (Iterable[int]): Jordan type of the orbit
        numeral (Optional[Literal['I', 'II']]): tag of a very even orbit

    Raises:
        OrbitLabelError: if the data do not describe an orbit

    """

    __slots__ = ()

    def __new__(cls, lie_type: str, rank: int, partition: Iterable[int],
                numeral: Optional[str] = None) -> 'SimpleOrbitLabel':
        if lie_type not in LIE_TYPES:
            raise OrbitLabelError('unknown Lie type %r' % lie_type)
        if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
            raise OrbitLabelError('rank must be a positive integer, got %r' % rank)
        try:
            lam = Partition(partition)
        except InvalidPartitionError as error:
            raise OrbitLabelError(str(error)) from error
        if lie_type == 'A':
            if lam.n != rank:
                raise OrbitLabelError('A(%d) orbit needs a partition of %d, got %s' % (rank, rank, lam))
            if numeral is not None:
                raise OrbitLabelError('type A orbits carry no numeral')
        else:
            if not is_valid_D(lam, rank):
                raise OrbitLabelError('%s does not label an orbit of D(%d)' % (lam, rank))
            if is_very_even(lam):
                if numeral not in NUMERALS:
                    raise OrbitLabelError('very even partition %s needs numeral I or II' % (lam,))
            elif numeral is not None:
                raise OrbitLabelError('numeral %r given for partition %s which is not very even' % (numeral, lam))
        return super().__new__(cls, lie_type, rank, lam, numeral)

    @property
    def is_very_even(self) -> bool:
        """bool: whether the label is a type D very even orbit"""
        return self.numeral is not None

    def as_json(self) -> Dict[str, Any]:
        """JSON mirror ``{"type": "D", "k": 4, "partition": [3, 3, 1, 1], "numeral": null}``."""
        return {'type': self.lie_type, 'k': self.rank, 'partition': list(self.partition), 'numeral': self.numeral}

    def __str__(self) -> str:
        if self.numeral is None:
            return str(self.partition)
        return '%s %s' % (self.partition, self.numeral)


class ProductOrbitLabel(NamedTuple):
    """Nilpotent orbit of a finite product of simple Lie algebras, one label per factor."""

    factors: Tuple[SimpleOrbitLabel, ...]

    def __str__(self) -> str:
        return ' x '.join(str(factor) for factor in self.factors)


class _OuterAutomorphism(NamedTuple):
    permutation: Tuple[int, ...]
    flips: Tuple[bool, ...]


class OuterAutomorphism(_OuterAutomorphism):
    """Outer automorphism of a product of simple factors.

    Factor ``i`` of the image of a label ``o`` is ``o.factors[permutation[i]]``,
    diagram-flipped when ``flips[i]`` is set.  The swap of two factors is
    ``OuterAutomorphism((1, 0), (False, False))``.

    Raises:
        IncompatibleAutomorphismError: if ``permutation`` is not a permutation or
            the sizes do not agree

    """

    __slots__ = ()

    def __new__(cls, permutation: Iterable[int], flips: Optional[Iterable[bool]] = None) -> 'OuterAutomorphism':
        perm = tuple(permutation)
        if sorted(perm) != list(range(len(perm))):
            raise IncompatibleAutomorphismError('%r is not a permutation of the factors' % (perm,))
        flip_flags = (False,) * len(perm) if flips is None else tuple(bool(flag) for flag in flips)
        if len(flip_flags) != len(perm):
            raise IncompatibleAutomorphismError('expected %d flip flags, got %d' % (len(perm), len(flip_flags)))
        return super().__new__(cls, perm, flip_flags)


###############################################################################
# Partition combinatorics for type D


def is_very_even(lam: Partition) -> bool:
    """Whether a nonempty partition has only even parts."""
    return bool(lam) and all(part % 2 == 0 for part in lam)


def is_valid_D(lam: Partition, k: int) -> bool:
    """Whether ``lam`` labels a nilpotent orbit of :math:`\\mathfrak{so}_{2k}`."""
    if sum(lam) != 2 * k:
        return False
    return all(count % 2 == 0 for part, count in multiplicities(lam).items() if part % 2 == 0)


def collapse_D(lam: Partition) -> Partition:
    """The largest D-valid partition dominated by ``lam``.

    While some even part occurs with odd multiplicity, take the largest such
    part ``q``, lower its last occurrence to ``q - 1`` and raise the first
    later part smaller than ``q - 1`` (a zero if there is none) by one.

    >>> str(collapse_D(Partition([4, 2])))
    '(3,3)'

    Raises:
        OrbitLabelError: if ``lam`` is a partition of an odd integer

    """
    if sum(lam) % 2:
        raise OrbitLabelError('cannot collapse %s: size %d is odd' % (Partition(lam), sum(lam)))
    parts = list(lam)
    while True:
        bad = [part for part, count in multiplicities(parts).items() if part % 2 == 0 and count % 2]
        if not bad:
            return Partition(parts)
        q = max(bad)
        last = len(parts) - 1 - parts[::-1].index(q)
        parts[last] = q - 1
        for index in range(last + 1, len(parts)):
            if parts[index] < q - 1:
                parts[index] += 1
                break
        else:
            parts.append(1)


###############################################################################
# Spaltenstein duality


def spaltenstein_A(lam: Partition) -> Partition:
    """Spaltenstein duality in type A, the transpose."""
    return transpose(lam)


def _other_numeral(numeral: str) -> str:
    return 'II' if numeral == 'I' else 'I'


def spaltenstein_D(o: SimpleOrbitLabel) -> SimpleOrbitLabel:
    """Spaltenstein duality on :math:`\\mathfrak{so}_{2k}`.

    The partition of the image is the D-collapse of the transpose.  A very
    even label keeps its numeral when ``k`` is even and swaps it when ``k``
    is odd.

    Raises:
        OrbitLabelError: if ``o`` is not of type D
        AmbiguousNumeralError: if a very even image arises from a label without a numeral

    """
    if o.lie_type != 'D':
        raise OrbitLabelError('spaltenstein_D needs a type D label, got %s(%d)' % (o.lie_type, o.rank))
    image = collapse_D(transpose(o.partition))
    if not is_very_even(image):
        return SimpleOrbitLabel('D', o.rank, image)
    if o.numeral is None:
        raise AmbiguousNumeralError('ambiguous numeral: very even image %s of %s' % (image, o.partition))
    numeral = o.numeral if o.rank % 2 == 0 else _other_numeral(o.numeral)
    return SimpleOrbitLabel('D', o.rank, image, numeral)


def spaltenstein(o: SimpleOrbitLabel) -> SimpleOrbitLabel:
    """Spaltenstein duality of a simple label of either type."""
    if o.lie_type == 'A':
        return SimpleOrbitLabel('A', o.rank, spaltenstein_A(o.partition))
    return spaltenstein_D(o)


def spaltenstein_product(o: ProductOrbitLabel) -> ProductOrbitLabel:
    """Factor-wise Spaltenstein duality."""
    return ProductOrbitLabel(tuple(spaltenstein(factor) for factor in o.factors))


def orbit_labels(lie_type: str, k: int) -> List[SimpleOrbitLabel]:
    """All orbit labels of ``A(k)`` or ``D(k)``, partitions in decreasing lexicographic order."""
    if lie_type == 'A':
        return [SimpleOrbitLabel('A', k, lam) for lam in integer_partitions(k)]
    if lie_type != 'D':
        raise OrbitLabelError('unknown Lie type %r' % lie_type)
    labels = []  # type: List[SimpleOrbitLabel]
    for lam in integer_partitions(2 * k):
        if not is_valid_D(lam, k):
            continue
        if is_very_even(lam):
            labels.extend(SimpleOrbitLabel('D', k, lam, numeral) for numeral in NUMERALS)
        else:
            labels.append(SimpleOrbitLabel('D', k, lam))
    return labels


@functools.lru_cache(maxsize=None)
def _special_labels(lie_type: str, k: int) -> FrozenSet[SimpleOrbitLabel]:
    return frozenset(spaltenstein(o) for o in orbit_labels(lie_type, k))


def is_special(o: SimpleOrbitLabel) -> bool:
    """Whether ``o`` lies in the image of Spaltenstein duality."""
    return o in _special_labels(o.lie_type, o.rank)


###############################################################################
# Closure order and outer automorphisms


def closure_leq(o1: SimpleOrbitLabel, o2: SimpleOrbitLabel) -> bool:
    """Closure order; the two orbits of a very even partition are incomparable.

    Raises:
        OrbitLabelError: if the labels belong to different Lie algebras

    """
    if (o1.lie_type, o1.rank) != (o2.lie_type, o2.rank):
        raise OrbitLabelError('cannot compare orbits of %s(%d) and %s(%d)'
                              % (o1.lie_type, o1.rank, o2.lie_type, o2.rank))
    if o1.partition == o2.partition:
        return o1.numeral == o2.numeral
    return dominance_leq(o1.partition, o2.partition)


def diagram_flip(o: SimpleOrbitLabel) -> SimpleOrbitLabel:
    """Action of the nontrivial diagram automorphism: swaps I and II, fixes the rest."""
    if o.numeral is None:
        return o
    return o._replace(numeral=_other_numeral(o.numeral))


def outer_action(tau: OuterAutomorphism,
                 o: Union[SimpleOrbitLabel, ProductOrbitLabel]) -> Union[SimpleOrbitLabel, ProductOrbitLabel]:
    """Apply an outer automorphism to an orbit label.

    A simple label is treated as a product with one factor.

    Raises:
        IncompatibleAutomorphismError: if ``tau`` does not fit the factors of ``o``

    """
    if isinstance(o, SimpleOrbitLabel):
        image = outer_action(tau, ProductOrbitLabel((o,)))
        return image.factors[0]  # type: ignore[union-attr]

    factors = o.factors
    if len(tau.permutation) != len(factors):
        raise IncompatibleAutomorphismError('automorphism of %d factors applied to %d factors'
                                            % (len(tau.permutation), len(factors)))
    result = []
    for index, (source, flip) in enumerate(zip(tau.permutation, tau.flips)):
        factor = factors[source]
        if (factor.lie_type, factor.rank) != (factors[index].lie_type, factors[index].rank):
            raise IncompatibleAutomorphismError('factor %d of type %s(%d) cannot move to a %s(%d) slot'
                                                % (source, factor.lie_type, factor.rank,
                                                   factors[index].lie_type, factors[index].rank))
        result.append(diagram_flip(factor) if flip else factor)
    return ProductOrbitLabel(tuple(result))


def is_fixed(tau: OuterAutomorphism, o: Union[SimpleOrbitLabel, ProductOrbitLabel]) -> bool:
    """Whether ``o`` is invariant under ``tau``."""
    return outer_action(tau, o) == o


def galois_rotation(degree: int) -> OuterAutomorphism:
    """Cyclic permutation of ``degree`` factors, the Frobenius action on a twisted Levi."""
    return OuterAutomorphism(tuple((index + 1) % degree for index in range(degree)))


def twisted_levi_label(lam: Partition, degree: int) -> ProductOrbitLabel:
    """Label of :math:`\\mathrm{GL}_m^{degree}` with every factor of Jordan type ``lam``."""
    factor = SimpleOrbitLabel('A', sum(lam), lam)
    return ProductOrbitLabel((factor,) * degree)


def label_from_json(data: Dict[str, Any]) -> SimpleOrbitLabel:
    """Inverse of :meth:`SimpleOrbitLabel.as_json`.

    Raises:
        OrbitLabelError: if a key is missing or a value is invalid

    """
    try:
        return SimpleOrbitLabel(data['type'], data['k'], data['partition'], data.get('numeral'))
    except (KeyError, TypeError) as error:
        raise OrbitLabelError('invalid orbit label %r' % (data,)) from error
