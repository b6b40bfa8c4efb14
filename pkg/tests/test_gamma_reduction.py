# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest

from glwf.character_expansion import ExpansionVector
from glwf.errors import DescriptorError
from glwf.gamma_reduction import (FormalScalar, GammaOrbitLabel, PureTypeDescriptor, az_reduce_commutes,
                                  descriptor_for, gamma_expansion, gamma_of_inertia, gamma_wavefront,
                                  hch_vs_gamma, is_pure, reduce, transfer_expansion)
from glwf.multisegments import DEFAULT_LINE, CuspidalLine, SupportMultiset, enumerate_multisegments
from glwf.multisegments import parse_multisegment as P
from glwf.partitions import Partition, integer_compositions, sort_to_partition


def test_descriptors():
    desc = PureTypeDescriptor(4, 2, depth='1/2')
    assert desc.f == 2
    assert desc.rank == 2
    assert desc.depth == Fraction(1, 2)
    assert str(desc) == 'GL_2 over E, [E:F] = 2 (e = 1, f = 2), depth 1/2, s = s'
    assert desc.as_json() == {'n': 4, 'm': 2, 'e': 1, 'f': 2, 'depth': '1/2', 's': 's'}
    assert PureTypeDescriptor(4, 2, e=2).f == 1


@pytest.mark.parametrize('args, kwargs', [
    ((4, 3), {}),
    ((4, 2), {'e': 2, 'f': 2}),
    ((4, 2), {'e': 3}),
    ((0, 1), {}),
    ((True, 1), {}),
    ((2, 1), {'depth': -1}),
])
def test_invalid_descriptors(args, kwargs):
    with pytest.raises(DescriptorError):
        PureTypeDescriptor(*args, **kwargs)


def test_descriptor_messages():
    with pytest.raises(DescriptorError, match=r'^ramification degree e = 3 does not divide m = 2$'):
        PureTypeDescriptor(4, 2, e=3)
    with pytest.raises(DescriptorError, match=r'^f must be a positive integer, got 0$'):
        PureTypeDescriptor(4, 2, f=0)
    with pytest.raises(DescriptorError, match=r'^e \* f = 1 \* 1 differs from m = 2$'):
        PureTypeDescriptor(4, 2, f=1)


def test_descriptor_for():
    desc = descriptor_for(P('rho3[2]:(0,1)'))
    assert (desc.n, desc.m, desc.s_label) == (4, 2, 'gamma(rho3[2])')
    assert descriptor_for(P('(0)'), s_label='t').s_label == 't'
    with pytest.raises(DescriptorError):
        descriptor_for(P('{}'))
    with pytest.raises(DescriptorError):
        descriptor_for(P('(0);rho2[2]:(0)'))


def test_reduce():
    desc = PureTypeDescriptor(4, 2)
    assert reduce(P('rho2[2]:(0,1)'), desc) == P('(0,1)')
    assert reduce(P('rho2[2]:(0)+(1/2)'), desc) == P('(0)+(1/2)')
    with pytest.raises(DescriptorError):
        reduce(P('(0);rho2[2]:(0)'), PureTypeDescriptor(3, 1))
    with pytest.raises(DescriptorError):
        reduce(P('(0)+(1)'), desc)
    with pytest.raises(DescriptorError):
        reduce(P('rho2[2]:(0)'), desc)


@pytest.mark.parametrize('text, n, m, expected, over_f', [
    ('rho2[2]:(0)', 2, 2, (1,), (2,)),
    ('rho2[2]:(0,1)', 4, 2, (2,), (4,)),
    ('rho2[2]:(0)+(1)', 4, 2, (1, 1), (2, 2)),
    ('rho5[3]:(0,2)', 9, 3, (3,), (9,)),
])
def test_gamma_wavefront_examples(text, n, m, expected, over_f):
    desc = PureTypeDescriptor(n, m)
    orbit = gamma_wavefront(P(text), desc)
    assert orbit == GammaOrbitLabel('s', Partition(expected))
    assert hch_vs_gamma(P(text), desc) == (Partition(over_f), orbit)


def test_gamma_wavefront_conventions():
    desc = PureTypeDescriptor(4, 2)
    assert gamma_wavefront(P('rho2[2]:(0,1)'), desc, 'zelevinsky').partition == (1, 1)
    assert str(gamma_wavefront(P('rho2[2]:(0,1)'), desc)) == 's+(2)'
    assert GammaOrbitLabel('s', Partition([2])).as_json() == {'s': 's', 'partition': [2]}


def _pure_cases(n):
    for dim in range(1, n + 1):
        if n % dim or n // dim > 6:
            continue
        line = CuspidalLine(DEFAULT_LINE.ident, dim)
        desc = PureTypeDescriptor(n, dim)
        for counts in integer_compositions(n // dim):
            for m in enumerate_multisegments(SupportMultiset.on_line(dict(enumerate(counts)), line)):
                yield m, desc


@pytest.mark.parametrize('n', range(1, 13))
def test_wavefront_scales_with_the_cuspidal_dimension(n):
    for m, desc in _pure_cases(n):
        lam, orbit = hch_vs_gamma(m, desc)
        assert lam == sort_to_partition(part * desc.m for part in orbit.partition)
        assert az_reduce_commutes(m, desc)


def test_transfer_expansion():
    desc = PureTypeDescriptor(2, 1, s_label='t')
    transferred = transfer_expansion(ExpansionVector({(2,): 1, (1, 1): -1}), desc)
    assert transferred == {GammaOrbitLabel('t', Partition([2])): FormalScalar(Fraction(1)),
                           GammaOrbitLabel('t', Partition([1, 1])): FormalScalar(Fraction(-1))}
    assert transfer_expansion(ExpansionVector(n=2), desc) == {}


def test_gamma_expansion():
    m = P('rho1[2]:(0,1)')
    desc = descriptor_for(m)
    expansion = gamma_expansion(m, desc)
    assert {str(orbit): str(value) for orbit, value in expansion.items()} == {
        'gamma(rho1[2])+(2)': "1*vol(J')/vol(J)*dim(rho)",
        'gamma(rho1[2])+(1,1)': "-1*vol(J')/vol(J)*dim(rho)",
    }
    assert FormalScalar(Fraction(1, 2)).as_json() == {'coefficient': '1/2', 'symbols': ["vol(J')/vol(J)", 'dim(rho)']}


def test_gamma_of_inertia():
    assert gamma_of_inertia(P('(0);rho2[2]:(1)')) == ('gamma(rho1[1])', 'gamma(rho2[2])')
    assert gamma_of_inertia(P('rho2[2]:(0,1)')) == gamma_of_inertia(P('rho2[2]:(3/2,5/2)'))
    assert gamma_of_inertia(P('{}')) == ()


def test_is_pure():
    assert is_pure(P('rho2[2]:(0)+(3)'))
    assert is_pure(P('{}'))
    assert not is_pure(P('(0);rho2[2]:(0)'))
