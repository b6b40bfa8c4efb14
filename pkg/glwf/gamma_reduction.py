# -*- coding: utf-8 -*-
"""Reduction of pure types to unipotent data over a twisted Levi subgroup.

A representation containing a pure refined minimal K-type has a
multisegment on a single cuspidal line of dimension ``m``.  The Hecke
algebra isomorphism with the Iwahori–Hecke algebra of
:math:`G' = \\mathrm{GL}_{n/m}(E)`, ``[E:F] = m``, is modelled as a
relabelling of that line onto the trivial line of :math:`G'`.  Through it the
Γ-asymptotic wavefront set and expansion of the representation are read off
the unipotent representation of :math:`G'`.  Volumes and ``dim ϱ`` stay
formal symbols.
"""

from fractions import Fraction
from typing import Any, Dict, NamedTuple, Optional, Tuple

from glwf.character_expansion import ExpansionVector, hch_expansion_of_multisegment
from glwf.errors import DescriptorError
from glwf.langlands import RepLabel, convert, wavefront
from glwf.multisegments import (DEFAULT_LINE, CuspidalLine, Multisegment, Rational, Segment, as_rational,
                                lengths_partition, mw_dual)
from glwf.partitions import Partition, transpose

__all__ = [
    'PureTypeDescriptor', 'GammaOrbitLabel', 'FormalScalar',
    'is_pure', 'descriptor_for', 'reduce', 'gamma_wavefront', 'transfer_expansion', 'az_reduce_commutes',
    'hch_vs_gamma', 'gamma_of_inertia', 'gamma_expansion',
]

###############################################################################
# Typings


class _PureTypeDescriptor(NamedTuple):
    n: int
    m: int
    e: int
    f: int
    depth: Fraction
    s_label: str


class PureTypeDescriptor(_PureTypeDescriptor):
    """Pure refined minimal K-type, as far as it matters combinatorially.

    Args:
        n (int): the group is :math:`\\mathrm{GL}_n(F)`
        m (int): cuspidal dimension ``[E:F]``, dividing ``n``
        e (int): ramification degree of ``E/F``
        f (int): residue degree of ``E/F``, with ``e * f = m``
        depth (Rational): depth of the type, metadata only
        s_label (str): opaque tag of the semisimple element :math:`s_\\varrho`

    Raises:
        DescriptorError: if the integers are inconsistent

    """

    __slots__ = ()

    def __new__(cls, n: int, m: int, e: int = 1, f: Optional[int] = None, depth: Rational = 0,
                s_label: str = 's') -> 'PureTypeDescriptor':
        for name, value in (('n', n), ('m', m), ('e', e), ('f', f)):
            if value is None and name == 'f':
                continue
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise DescriptorError('%s must be a positive integer, got %r' % (name, value))
        if n % m:
            raise DescriptorError('cuspidal dimension %d does not divide n = %d' % (m, n))
        if f is None:
            if m % e:
                raise DescriptorError('ramification degree e = %d does not divide m = %d' % (e, m))
            f = m // e
        if e * f != m:
            raise DescriptorError('e * f = %d * %d differs from m = %d' % (e, f, m))
        level = as_rational(depth)
        if level < 0:
            raise DescriptorError('depth must be nonnegative, got %s' % level)
        return super().__new__(cls, n, m, e, f, level, str(s_label))

    @property
    def rank(self) -> int:
        """int: ``n / m``, the rank of the twisted Levi subgroup"""
        return self.n // self.m

    def as_json(self) -> Dict[str, Any]:
        return {'n': self.n, 'm': self.m, 'e': self.e, 'f': self.f, 'depth': str(self.depth), 's': self.s_label}

    def __str__(self) -> str:
        return 'GL_%d over E, [E:F] = %d (e = %d, f = %d), depth %s, s = %s' % (
            self.rank, self.m, self.e, self.f, self.depth, self.s_label)


class GammaOrbitLabel(NamedTuple):
    """Orbit ``G · (s + O')`` with ``O'`` a nilpotent orbit of the centralizer of ``s``."""

    s_label: str
    partition: Partition

    def as_json(self) -> Dict[str, Any]:
        return {'s': self.s_label, 'partition': list(self.partition)}

    def __str__(self) -> str:
        return '%s+%s' % (self.s_label, self.partition)


class FormalScalar(NamedTuple):
    """``coefficient · vol(J')/vol(J) · dim ϱ`` with formal volumes and degree."""

    coefficient: Fraction

    def as_json(self) -> Dict[str, Any]:
        return {'coefficient': str(self.coefficient), 'symbols': ["vol(J')/vol(J)", 'dim(rho)']}

    def __str__(self) -> str:
        return "%s*vol(J')/vol(J)*dim(rho)" % self.coefficient


###############################################################################
# Reduction


def _inertia_tag(line: CuspidalLine) -> str:
    return 'gamma(%s)' % (line,)


def is_pure(m: Multisegment) -> bool:
    """Whether all segments lie on one cuspidal line (vacuously true for the empty multisegment)."""
    return len(m.lines) <= 1


def descriptor_for(m: Multisegment, s_label: Optional[str] = None, depth: Rational = 0,
                   e: int = 1, f: Optional[int] = None) -> PureTypeDescriptor:
    """Descriptor matching a pure multisegment: ``n`` its degree, ``m`` its line's dimension.

    Raises:
        DescriptorError: if ``m`` is empty or not pure

    """
    if not m or not is_pure(m):
        raise DescriptorError('%s is not a nonempty pure multisegment' % (m,))
    line = m.lines[0]
    return PureTypeDescriptor(m.degree, line.dim, e, f, depth, _inertia_tag(line) if s_label is None else s_label)


def _check(m: Multisegment, desc: PureTypeDescriptor) -> None:
    if not is_pure(m):
        raise DescriptorError('%s meets several cuspidal lines' % (m,))
    if m and m.lines[0].dim != desc.m:
        raise DescriptorError('cuspidal dimension %d of %s differs from m = %d' % (m.lines[0].dim, m, desc.m))
    if m.degree != desc.n:
        raise DescriptorError('%s has degree %d, not n = %d' % (m, m.degree, desc.n))


def reduce(m: Multisegment, desc: PureTypeDescriptor) -> Multisegment:
    """Unipotent multisegment of :math:`\\mathrm{GL}_{n/m}(E)`: the same segments on the trivial line.

    Raises:
        DescriptorError: if ``m`` is not pure or does not match ``desc``

    """
    _check(m, desc)
    return Multisegment(Segment(DEFAULT_LINE, item.start, item.length) for item in m)


def gamma_wavefront(m: Multisegment, desc: PureTypeDescriptor, convention: str = 'langlands') -> GammaOrbitLabel:
    """Γ-asymptotic wavefront set: ``s`` with the wavefront orbit of the reduced representation.

    The partition is the transpose of the Jordan type of the Aubert–Zelevinsky
    dual of the reduced representation over :math:`E`.
    """
    langlands = convert(RepLabel(m, convention)).multisegment if convention == 'zelevinsky' else m
    reduced = reduce(langlands, desc)
    return GammaOrbitLabel(desc.s_label, transpose(lengths_partition(mw_dual(reduced))))


def transfer_expansion(v: ExpansionVector, desc: PureTypeDescriptor) -> Dict[GammaOrbitLabel, FormalScalar]:
    """Carry an expansion over :math:`G'` to Γ-orbits; nonzero coefficients stay nonzero."""
    return {GammaOrbitLabel(desc.s_label, lam): FormalScalar(Fraction(value)) for lam, value in v.items() if value}


def gamma_expansion(m: Multisegment, desc: PureTypeDescriptor,
                    backend: str = 'kl_zelevinsky') -> Dict[GammaOrbitLabel, FormalScalar]:
    """Γ-asymptotic expansion of the Langlands label ``m`` transported from the reduced representation."""
    reduced = reduce(m, desc)
    return transfer_expansion(hch_expansion_of_multisegment(mw_dual(reduced), backend), desc)


def az_reduce_commutes(m: Multisegment, desc: PureTypeDescriptor) -> bool:
    """Whether reduction intertwines the Aubert–Zelevinsky involutions."""
    return reduce(mw_dual(m), desc) == mw_dual(reduce(m, desc))


def hch_vs_gamma(m: Multisegment, desc: PureTypeDescriptor) -> Tuple[Partition, GammaOrbitLabel]:
    """Wavefront set over :math:`F` next to the Γ-asymptotic one, for the Langlands label ``m``."""
    return wavefront(RepLabel(m, 'langlands')), gamma_wavefront(m, desc)


def gamma_of_inertia(m: Multisegment) -> Tuple[str, ...]:
    """One semisimple tag per cuspidal line; unramified twists do not change it."""
    return tuple(_inertia_tag(line) for line in m.lines)
