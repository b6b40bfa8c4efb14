# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest

from glwf.errors import GLWFError
from glwf.langlands import (InertiaClass, RepLabel, WDSummand, WeilDeligneParameter, az, convert, generic_labels,
                            inertia_class, nilpotent_partition, o_dual, parameter_of, upper_bound_holds,
                            wavefront)
from glwf.multisegments import (DEFAULT_LINE, CuspidalLine, Multisegment, Segment, SupportMultiset,
                                enumerate_multisegments, is_generic)
from glwf.multisegments import parse_multisegment as P
from glwf.partitions import Partition, integer_compositions, transpose


def test_labels_and_conventions():
    label = RepLabel(P('(0,1)'), 'zelevinsky')
    assert az(label) == RepLabel(P('(0)+(1)'), 'zelevinsky')
    assert convert(label) == RepLabel(P('(0)+(1)'), 'langlands')
    assert convert(convert(label)) == label
    assert str(label) == '(0,1) [zelevinsky]'
    assert RepLabel(P('rho2[2]:(0,1)')).degree == 4
    with pytest.raises(GLWFError):
        RepLabel(P('(0)'), 'bernstein')


def test_az_on_several_lines():
    label = RepLabel(P('(0,1);rho2[2]:(0)+(1)'))
    assert az(label).multisegment == P('(0)+(1);rho2[2]:(0,1)')
    assert az(az(label)) == label


def test_parameters():
    steinberg = RepLabel(P('(0,1)'), 'langlands')
    parameter = parameter_of(steinberg)
    assert parameter == WeilDeligneParameter([WDSummand(DEFAULT_LINE, 0, 2)])
    assert str(parameter) == '(1,0,2)'
    assert parameter.dimension == 2
    assert nilpotent_partition(parameter) == (2,)
    assert o_dual(RepLabel(P('(0,1)'), 'zelevinsky')) == (1, 1)
    assert o_dual(RepLabel(P('rho2[2]:(0,1)'))) == (2, 2)
    assert str(WeilDeligneParameter()) == '0'


def test_wavefront_examples():
    assert wavefront(RepLabel(P('(0,2)'), 'zelevinsky')) == (1, 1, 1)
    assert wavefront(RepLabel(P('(0,2)'), 'langlands')) == (3,)
    assert wavefront(RepLabel(P('(0)+(1)'), 'langlands')) == (1, 1)
    assert wavefront(RepLabel(P('rho2[2]:(0)'))) == (2,)


@pytest.mark.parametrize('n', range(1, 9))
def test_generic_representations_have_regular_wavefront(n):
    labels = generic_labels(n)
    assert labels
    for label in labels:
        assert is_generic(label.multisegment)
        assert label.degree == n
        assert wavefront(label) == Partition([n])


def test_generic_labels():
    assert sorted(str(label.multisegment) for label in generic_labels(2)) == ['(0,0)+(0,0)', '(0,1)', '(1,1)+(1,1)']
    for label in generic_labels(4, CuspidalLine('3', 2)):
        assert label.multisegment.lines == (CuspidalLine('3', 2),)
        assert wavefront(label) == (4,)


@pytest.mark.parametrize('size', range(1, 6))
def test_upper_bound_is_an_equality(size):
    for counts in integer_compositions(size):
        for m in enumerate_multisegments(SupportMultiset.on_line(dict(enumerate(counts)))):
            label = RepLabel(m)
            assert upper_bound_holds(label)
            assert wavefront(az(label)) == transpose(o_dual(label))


def test_inertia_class():
    assert str(inertia_class(P('(0,1)+(3)'))) == 'rho1[1]^3'
    assert str(inertia_class(P('(0);rho2[2]:(0,1)'))) == 'rho1[1]^1 x rho2[2]^2'
    assert inertia_class(P('(0,1)')) == inertia_class(P('(5)+(7)'))
    assert str(InertiaClass()) == '{}'
    with pytest.raises(GLWFError):
        InertiaClass([(DEFAULT_LINE, 0)])


def _shifted(m, shift):
    return Multisegment(Segment(item.line, item.start + shift, item.length) for item in m)


@pytest.mark.parametrize('shift', [1, -3, Fraction(1, 3)])
@pytest.mark.parametrize('convention', ['langlands', 'zelevinsky'])
def test_o_dual_ignores_unramified_twists(shift, convention):
    for size in range(1, 6):
        for counts in integer_compositions(size):
            for m in enumerate_multisegments(SupportMultiset.on_line(dict(enumerate(counts)))):
                assert o_dual(RepLabel(_shifted(m, shift), convention)) == o_dual(RepLabel(m, convention))
    wide = P('(0,1);rho2[2]:(1/2)+(3/2)')
    assert o_dual(RepLabel(_shifted(wide, 5))) == o_dual(RepLabel(wide)) == (2, 1, 1, 1, 1)
