# -*- coding: utf-8 -*-

import json
import os
import re
import subprocess  # nosec: B404
import sys

import pytest

from glwf.cli import _get_backend_option, _get_json_option, check_case, get_parser, main, run

os.environ['GLWF_CONCURRENCY'] = '1'


@pytest.fixture(autouse=True)
def clean_environ(monkeypatch):
    for name in ('GLWF_QUIET', 'GLWF_JSON', 'GLWF_BACKEND'):
        monkeypatch.delenv(name, raising=False)


def test_get_parser():
    parser = get_parser()
    args = parser.parse_args(['verify', '-q', '-C', '2', '--max-size', '4',
                              '--family', 'kl', '--family', 'rodier', '--backend', 'closure'])
    assert args.quiet is True
    assert args.concurrency == 2
    assert args.max_size == 4
    assert args.family == ['kl', 'rodier']
    assert args.backend == 'closure'

    args = parser.parse_args(['az', '(0,1)'])
    assert args.convention == 'zelevinsky'
    assert args.json_output is None
    args = parser.parse_args(['wf', '(0,1)'])
    assert args.convention == 'langlands'


@pytest.mark.parametrize('argv, expected', [
    (['az', '(0,1)'], '(0,0)+(1,1)'),
    (['az', '(0,1);rho2[2]:(0)+(1)'], '(0,0)+(1,1);rho2[2]:(0,1)'),
    (['wf', '(0,2)', '--convention', 'zelevinsky'], '(1,1,1)'),
    (['wf', '(0,2)'], '(3)'),
    (['param', '(0,1)'], 'parameter: (1,0,2)\nN: (2)'),
    (['inertia', '(0,1)+(3)'], 'rho1[1]^3'),
    (['duality', '--type', 'D', '--k', '2', '--partition', '2,2', '--numeral', 'I'], '(2,2) I'),
    (['duality', '--type', 'D', '--k', '3', '--partition', '5,1'], '(1,1,1,1,1,1)'),
    (['closure', '(0)+(1)', '(0,1)'], 'true'),
    (['closure', '(0,1)', '(0)+(1)'], 'false'),
    (['enumerate', '--support', '0:2,1:2'], '(0,0)+(0,0)+(1,1)+(1,1)\n(0,0)+(0,1)+(1,1)\n(0,1)+(0,1)'),
    (['kl-poly', '4', '1324', '3412'], '1+q'),
    (['kl-poly', '4', '2143', '4231', '--method', 'products'], '1+q'),
    (['expansion', '--alpha', '1,1', '--nu', '1/2,-1/2'], '(2): 1\n(1,1): -1'),
    (['expansion', '--alpha', '2,1', '--backend', 'closure'], '(2,1): 1'),
    (['wavefront', '--alpha', '1,1', '--nu', '1/2,-1/2'], '(2)'),
])
def test_text_output(argv, expected, capsys):
    assert main(argv) == 0
    assert capsys.readouterr().out == expected + '\n'


def test_reduce_output(capsys):
    assert main(['reduce', '--n', '4', '--m', '2', '--multisegment', '(0,1)']) == 0
    assert capsys.readouterr().out.splitlines() == [
        'descriptor: GL_2 over E, [E:F] = 2 (e = 1, f = 2), depth 0, s = s',
        'reduced: (0,1)',
        'gamma wavefront: s+(2)',
        'expansion:',
        "s+(2): 1*vol(J')/vol(J)*dim(rho)",
        "s+(1,1): -1*vol(J')/vol(J)*dim(rho)",
    ]


def test_json_output(capsys):
    assert main(['az', '(0,1)', '--json']) == 0
    document = json.loads(capsys.readouterr().out)
    assert document['result'] == {
        'multisegment': {'lines': [{'line': '1', 'dim': 1, 'segments': [['0', '0'], ['1', '1']]}]},
        'convention': 'zelevinsky',
    }

    status, output = run(['expansion', '--alpha', '1,1', '--nu', '1/2,-1/2', '--json'])
    assert status == 0
    document = json.loads(output)
    assert document['backend'] == 'kl_zelevinsky'
    assert document['coefficients'] == [{'partition': [2], 'coefficient': 1},
                                        {'partition': [1, 1], 'coefficient': -1}]


def test_json_from_environment(monkeypatch):
    monkeypatch.setenv('GLWF_JSON', '1')
    assert _get_json_option() is True
    status, output = run(['kl-poly', '3', '123', '321'])
    assert status == 0
    assert json.loads(output) == {'x': '123', 'w': '321', 'coefficients': [1]}


def test_backend_option(monkeypatch):
    assert _get_backend_option() == 'kl_zelevinsky'
    assert _get_backend_option('closure') == 'closure01'
    monkeypatch.setenv('GLWF_BACKEND', 'closure01')
    assert _get_backend_option() == 'closure01'
    assert _get_backend_option('kl') == 'kl_zelevinsky'


@pytest.mark.parametrize('argv', [
    [],
    ['bogus'],
    ['az'],
    ['expansion', '--nu', '0'],
    ['expansion', '--alpha', '1', '--backend', 'lusztig'],
    ['kl-poly', 'four', '1', '1'],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().out == ''


@pytest.mark.parametrize('argv', [
    ['az', '(0,1'],
    ['az', '(1,0)'],
    ['closure', '(0)', '(1)'],
    ['duality', '--type', 'D', '--k', '2', '--partition', '2,2'],
    ['kl-poly', '3', '1324', '3412'],
    ['expansion', '--alpha', '1,1', '--nu', '0'],
    ['reduce', '--n', '4', '--m', '3', '--multisegment', '(0)'],
])
def test_domain_errors(argv, capsys):
    assert main(argv) == 1
    captured = capsys.readouterr()
    assert captured.out == ''
    assert captured.err.startswith('glwf: error: ')


def test_domain_errors_as_json(capsys):
    assert main(['reduce', '--n', '4', '--m', '3', '--multisegment', '(0)', '--json']) == 1
    captured = capsys.readouterr()
    assert json.loads(captured.out) == {'error': {'type': 'DescriptorError',
                                                  'message': 'cuspidal dimension 3 does not divide n = 4'}}
    assert captured.err == 'glwf: error: cuspidal dimension 3 does not divide n = 4\n'


def test_ramification_must_divide_the_cuspidal_dimension(capsys):
    assert main(['reduce', '--n', '4', '--m', '2', '--e', '3', '--multisegment', '(0)']) == 1
    assert capsys.readouterr().err == 'glwf: error: ramification degree e = 3 does not divide m = 2\n'


def test_unknown_backend_in_environment(monkeypatch, capsys):
    monkeypatch.setenv('GLWF_BACKEND', 'lusztig')
    assert main(['expansion', '--alpha', '1']) == 1
    assert 'lusztig' in capsys.readouterr().err


def test_check_case(capsys):
    assert check_case(('rodier', 2), backend='kl_zelevinsky', quiet=True) == (3, 0, 0)
    assert capsys.readouterr().err == ''
    assert check_case(('spherical', 3), backend='closure01', quiet=False) == (3, 0, 0)
    assert capsys.readouterr().err == 'Now checking: spherical 3\n'


def test_verify(capsys):
    assert main(['verify', '-q', '-C', '1', '--max-size', '3']) == 0
    assert re.fullmatch(r'[1-9]\d* cases checked, 0 failures, \d+ flagged\n', capsys.readouterr().out)


def test_order_reversal_is_flagged(capsys):
    report = check_case(('mw-order', 5), backend='kl_zelevinsky', quiet=True)
    assert report.checked > 0
    assert report.failures == 0
    assert report.flagged > 0
    assert 'Flagged: mw_dual reverses (0,0)+(0,0)+(1,1)+(1,2) <= (0,0)+(0,1)+(1,2)\n' in capsys.readouterr().err

    assert main(['verify', '-q', '-C', '1', '--family', 'mw-order', '--max-size', '5']) == 0
    assert re.fullmatch(r'[1-9]\d* cases checked, 0 failures, [1-9]\d* flagged\n', capsys.readouterr().out)

    status, output = run(['verify', '-q', '-C', '1', '--family', 'mw-order', '--max-size', '5', '--json'])
    assert status == 0
    document = json.loads(output)
    assert document['failures'] == 0
    assert document['flagged'] == report.flagged


def test_module_entry_point():
    output = subprocess.check_output([sys.executable, '-m', 'glwf', 'az', '(0,1)'],  # nosec: B603
                                     universal_newlines=True)
    assert output == '(0,0)+(1,1)\n'
