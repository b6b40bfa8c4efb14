# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest

from glwf.errors import GLWFError, LineMismatchError, ParseError, SupportMismatchError
from glwf.multisegments import (CuspidalLine, Multisegment, Segment, SupportMultiset, closure_leq_graded,
                                enumerate_multisegments, format_multisegment, is_generic, is_linked,
                                lengths_partition, multisegment_as_json, multisegment_from_json, mw_dual,
                                parse_multisegment, parse_support, precedes, rank_function, segment, singletons,
                                split_by_line, standard_order, support)
from glwf.partitions import integer_compositions

P = parse_multisegment


def test_segments():
    item = segment(0, 2)
    assert item.length == 3
    assert item.end == 2
    assert item.points() == (0, 1, 2)
    assert str(segment('1/2')) == '(1/2,1/2)'
    assert str(CuspidalLine('2', 2)) == 'rho2[2]'
    with pytest.raises(GLWFError):
        segment(2, 1)
    with pytest.raises(GLWFError):
        segment(0, '1/2')
    with pytest.raises(ParseError):
        segment('x')
    with pytest.raises(ParseError):
        CuspidalLine('a-b', 1)
    with pytest.raises(GLWFError):
        CuspidalLine('2', 0)


def test_linkage():
    assert precedes(segment(0, 1), segment(1, 2))
    assert precedes(segment(0), segment(1))
    assert not precedes(segment(1), segment(0))
    assert not precedes(segment(0, 2), segment(1))
    assert not precedes(segment(0), segment(2))
    assert not precedes(segment(0), segment('1/2'))
    assert not is_linked(segment(0), segment(1, line=CuspidalLine('2', 1)))
    assert is_linked(segment(1), segment(0))
    assert is_generic(P('(0,0)+(2,2)'))
    assert not is_generic(P('(0,0)+(1,1)'))
    assert is_generic(P('(0,2)+(1,1)'))


def test_standard_order():
    ordered = standard_order(P('(0)+(1)+(2)'))
    for position, first in enumerate(ordered):
        for later in ordered[position + 1:]:
            assert not precedes(first, later)


def test_multisegment_properties():
    m = P('(0,1);rho2[2]:(0,1)')
    assert m.degree == 6
    assert m.size == 4
    assert [str(line) for line in m.lines] == ['rho1[1]', 'rho2[2]']
    assert lengths_partition(m) == (2, 2)
    assert list(split_by_line(m)) == list(m.lines)
    assert len(P('(0)+(1/2)').blocks()) == 2
    with pytest.raises(GLWFError):
        Multisegment([(0, 1)])


def test_mw_dual_examples():
    assert mw_dual(P('(0,1)')) == P('(0)+(1)')
    assert mw_dual(P('(0)+(1)')) == P('(0,1)')
    assert mw_dual(P('(0,2)')) == P('(0)+(1)+(2)')
    assert mw_dual(P('(1,1)+(1,2)')) == P('(1)+(1)+(2)')
    assert mw_dual(P('(0,1)+(1/2)')) == P('(0)+(1)+(1/2)')
    assert mw_dual(Multisegment()) == Multisegment()
    with pytest.raises(LineMismatchError):
        mw_dual(P('(0);rho2[1]:(0)'))


@pytest.mark.parametrize('size', range(1, 9))
def test_mw_dual_is_an_involution(size):
    for counts in integer_compositions(size):
        s = SupportMultiset.on_line(dict(enumerate(counts)))
        for m in enumerate_multisegments(s):
            dual = mw_dual(m)
            assert support(dual) == s
            assert mw_dual(dual) == m


def test_mw_dual_on_a_wider_line():
    m = P('rho7[3]:(0,2)+(1,1)')
    assert mw_dual(mw_dual(m)) == m
    assert mw_dual(m).lines == m.lines


def test_supports():
    s = parse_support('0:2,1:2')
    assert s == SupportMultiset.on_line({0: 2, 1: 2})
    assert str(s) == '0:2,1:2'
    assert s.total == 4
    assert not s.is_multiplicity_free()
    assert parse_support('0,0,1') == SupportMultiset.on_line({0: 2, 1: 1})
    assert str(parse_support('rho2[2]:0,1')) == 'rho2[2]:0:1,1:1'
    assert str(parse_support('{}')) == '{}'
    assert support(P('(0,1)+(1)')) == SupportMultiset.on_line({0: 1, 1: 2})
    assert hash(s) == hash(parse_support('1:2,0:2'))
    with pytest.raises(ParseError):
        parse_support('0:x')
    with pytest.raises(ParseError):
        parse_support('0:0')
    with pytest.raises(GLWFError):
        SupportMultiset.on_line({0: -1})


def test_enumerate_multisegments():
    found = enumerate_multisegments(parse_support('0:2,1:2'))
    assert [format_multisegment(m) for m in found] == [
        '(0,0)+(0,0)+(1,1)+(1,1)',
        '(0,0)+(0,1)+(1,1)',
        '(0,1)+(0,1)',
    ]
    assert found[0] == singletons(parse_support('0:2,1:2'))
    assert len(enumerate_multisegments(parse_support('0,1,2'))) == 4
    assert len(enumerate_multisegments(parse_support('0,1,2,3'))) == 8
    assert enumerate_multisegments(SupportMultiset()) == [Multisegment()]


@pytest.mark.parametrize('size', range(1, 6))
def test_enumeration_follows_the_closure_order(size):
    for counts in integer_compositions(size):
        found = enumerate_multisegments(SupportMultiset.on_line(dict(enumerate(counts))))
        assert len(set(found)) == len(found)
        for position, m in enumerate(found):
            assert closure_leq_graded(found[0], m)
            for later in found[position + 1:]:
                assert not closure_leq_graded(later, m)


@pytest.mark.parametrize('k', range(1, 6))
def test_two_point_supports_are_parametrized_by_rank(k):
    found = enumerate_multisegments(SupportMultiset.on_line({0: k, 1: k}))
    assert len(found) == k + 1
    assert sorted(rank_function(m, 0, 1) for m in found) == list(range(k + 1))


@pytest.mark.parametrize('size', range(1, 9))
def test_closure_order_is_a_partial_order(size):
    for counts in integer_compositions(size):
        found = enumerate_multisegments(SupportMultiset.on_line(dict(enumerate(counts))))
        above = {m: {other for other in found if closure_leq_graded(m, other)} for m in found}
        for m in found:
            assert m in above[m]
            for other in above[m]:
                assert other == m or m not in above[other]
                assert above[other] <= above[m]


def test_mw_dual_does_not_reverse_the_closure_order():
    lower = P('(0,0)+(0,0)+(1,1)+(1,2)')
    upper = P('(0,0)+(0,1)+(1,2)')
    assert closure_leq_graded(lower, upper)
    assert mw_dual(upper) == upper
    assert mw_dual(lower) == P('(0,1)+(0,1)+(2,2)')
    assert rank_function(mw_dual(upper), 1, 2) == 1
    assert rank_function(mw_dual(lower), 1, 2) == 0
    assert not closure_leq_graded(mw_dual(upper), mw_dual(lower))
    assert not closure_leq_graded(mw_dual(lower), mw_dual(upper))


def test_rank_function():
    m = P('(0,1)+(0)')
    assert rank_function(m, 0, 0) == 2
    assert rank_function(m, 0, 1) == 1
    assert rank_function(m, 1, 1) == 1
    assert rank_function(m, 2, 2) == 0
    with pytest.raises(GLWFError):
        rank_function(m, 1, 0)
    with pytest.raises(LineMismatchError):
        rank_function(P('(0);rho2[1]:(0)'), 0, 0)
    assert rank_function(P('(0);rho2[1]:(0)'), 0, 0, line=CuspidalLine('2', 1)) == 1


def test_closure_order():
    assert closure_leq_graded(P('(0)+(1)'), P('(0,1)'))
    assert not closure_leq_graded(P('(0,1)'), P('(0)+(1)'))
    assert closure_leq_graded(P('(0,1)+(0)+(1)'), P('(0,1)+(0,1)'))
    with pytest.raises(SupportMismatchError):
        closure_leq_graded(P('(0)'), P('(1)'))


def test_text_forms():
    assert str(P('(0,1)+(2)')) == '(0,1)+(2,2)'
    assert str(P('rho2[2]:(0,1);(0)')) == '(0,0);rho2[2]:(0,1)'
    assert str(P('(1/2,3/2)')) == '(1/2,3/2)'
    assert P('(1/2,3/2)')[0].start == Fraction(1, 2)
    assert P('{}') == Multisegment()
    assert format_multisegment(Multisegment()) == '{}'
    assert repr(P('(0)')) == "Multisegment('(0,0)')"
    for text in ('(0,1', '(1,0)', '(a,b)', '(0,1)+', 'rho2[0]:(0)'):
        with pytest.raises(GLWFError):
            P(text)


def test_json_mirror():
    m = P('(0,1)')
    document = multisegment_as_json(m)
    assert document == {'lines': [{'line': '1', 'dim': 1, 'segments': [['0', '1']]}]}
    assert multisegment_from_json(document) == m
    wide = P('(1/2);rho2[2]:(0,1)')
    assert multisegment_from_json(multisegment_as_json(wide)) == wide
    assert multisegment_from_json('{"lines": []}') == Multisegment()
    with pytest.raises(ParseError):
        multisegment_from_json('{"lines": [{"line": "1"}]}')
    with pytest.raises(ParseError):
        multisegment_from_json('not json')


def test_segment_type():
    item = Segment(CuspidalLine('1', 1), '1/3', 2)
    assert item.end == Fraction(4, 3)
    assert item.block == (CuspidalLine('1', 1), Fraction(1, 3))
    assert item.covers(Fraction(1, 3), Fraction(4, 3))
    assert not item.covers(Fraction(0), Fraction(1))
