# -*- coding: utf-8 -*-
"""Command line interface of :mod:`glwf`."""

import argparse
import json
import os
import pathlib
import re
import sys
import traceback
from fractions import Fraction
from typing import Any, Callable, Dict, FrozenSet, Generator, Iterable, List, NamedTuple, Optional, Tuple

import tbtrim
from bpc_utils import (Config, TaskLock, first_non_none, map_tasks, parse_boolean_state,
                       parse_positive_integer)
from typing_extensions import Final

from glwf import __version__
from glwf.character_expansion import (BACKEND_ALIASES, BACKENDS, ExpansionVector, hch_expansion_of_az,
                                      multisegment_of, normalize_backend, spherical_unipotent, std_in_irr_matrix,
                                      wavefront_from_expansion)
from glwf.errors import GLWFError, ParseError, SizeMismatchError
from glwf.gamma_reduction import (PureTypeDescriptor, az_reduce_commutes, gamma_expansion, gamma_wavefront,
                                  hch_vs_gamma, reduce)
from glwf.kl_engine import (all_permutations, bruhat_leq, kl_polynomial, kl_polynomial_via_products,
                            length, parse_permutation)
from glwf.langlands import (CONVENTIONS, RepLabel, az, generic_labels, inertia_class, nilpotent_partition,
                            o_dual, parameter_of, upper_bound_holds, wavefront)
from glwf.multisegments import (DEFAULT_LINE, CuspidalLine, Multisegment, Segment, SupportMultiset, as_rational,
                                closure_leq_graded, enumerate_multisegments, format_multisegment,
                                multisegment_as_json, mw_dual, parse_multisegment, parse_support, support)
from glwf.nilpotent_orbits import (LIE_TYPES, NUMERALS, SimpleOrbitLabel, diagram_flip, orbit_labels,
                                   spaltenstein)
from glwf.partitions import (Composition, Partition, dominance_leq, format_partition, integer_compositions,
                             integer_partitions, parse_partition, sort_to_partition, transpose)

__all__ = ['main', 'get_parser', 'run']

###############################################################################
# Typings


class GLWFConfig(Config):
    backend = 'kl_zelevinsky'  # type: str
    concurrency = None  # Optional[int]
    quiet = False  # type: bool
    json_output = False  # type: bool


class Result(NamedTuple):
    """Output of a subcommand: the text form, the JSON document and the exit status."""

    text: str
    document: Dict[str, Any]
    status: int = 0


class CaseReport(NamedTuple):
    """Counts of one family at one size."""

    checked: int
    failures: int
    flagged: int = 0


###############################################################################
# Auxiliaries

#: Accepted values of the ``--backend`` option.
BACKEND_CHOICES = BACKENDS + tuple(BACKEND_ALIASES)  # type: Final[Tuple[str, ...]]

# option default values
#: Default value for the ``quiet`` option.
_default_quiet = False
#: Default value for the ``json_output`` option.
_default_json_output = False
#: Default value for the ``concurrency`` option.
_default_concurrency = None  # auto detect
#: Default value for the ``backend`` option.
_default_backend = 'kl_zelevinsky'

# option getter utility functions
# option value precedence is: explicit value (CLI/API arguments) > environment variable > default value


def _get_quiet_option(explicit: Optional[bool] = None) -> Optional[bool]:
    """Get the value for the ``quiet`` option.

    Args:
        explicit (Optional[bool]): the value explicitly specified by user,
            :data:`None` if not specified

    Returns:
        bool: the value for the ``quiet`` option

    :Environment Variables:
        :envvar:`GLWF_QUIET` -- the value in environment variable

    See Also:
        :data:`_default_quiet`

    """
    def _option_layers() -> Generator[Optional[bool], None, None]:
        yield explicit
        yield parse_boolean_state(os.getenv('GLWF_QUIET'))
        yield _default_quiet
    return first_non_none(_option_layers())


def _get_json_option(explicit: Optional[bool] = None) -> Optional[bool]:
    """Get the value for the ``json_output`` option.

    Args:
        explicit (Optional[bool]): the value explicitly specified by user,
            :data:`None` if not specified

    Returns:
        bool: the value for the ``json_output`` option

    :Environment Variables:
        :envvar:`GLWF_JSON` -- the value in environment variable

    See Also:
        :data:`_default_json_output`

    """
    def _option_layers() -> Generator[Optional[bool], None, None]:
        yield explicit
        yield parse_boolean_state(os.getenv('GLWF_JSON'))
        yield _default_json_output
    return first_non_none(_option_layers())


def _get_concurrency_option(explicit: Optional[int] = None) -> Optional[int]:
    """Get the value for the ``concurrency`` option.

    Args:
        explicit (Optional[int]): the value explicitly specified by user,
            :data:`None` if not specified

    Returns:
        Optional[int]: the value for the ``concurrency`` option;
        :data:`None` means *auto detection* at runtime

    :Environment Variables:
        :envvar:`GLWF_CONCURRENCY` -- the value in environment variable

    See Also:
        :data:`_default_concurrency`

    """
    return parse_positive_integer(explicit or os.getenv('GLWF_CONCURRENCY') or _default_concurrency)


def _get_backend_option(explicit: Optional[str] = None) -> str:
    """Get the value for the ``backend`` option.

    Args:
        explicit (Optional[str]): the value explicitly specified by user,
            :data:`None` if not specified

    Returns:
        str: the canonical backend name

    Raises:
        GLWFError: if the environment variable names an unknown backend

    :Environment Variables:
        :envvar:`GLWF_BACKEND` -- the value in environment variable

    See Also:
        :data:`_default_backend`

    """
    return normalize_backend(explicit or os.getenv('GLWF_BACKEND') or _default_backend)


# tracebacks of domain errors stop at the package boundary
ROOT = pathlib.Path(__file__).resolve().parent


def predicate(filename: str) -> bool:
    return pathlib.Path(filename).parent == ROOT


tbtrim.set_trim_rule(predicate, strict=True, target=GLWFError)

###############################################################################
# Argument conversion


def _parse_integers(text: str) -> List[int]:
    try:
        return [int(token) for token in re.split(r'[\s,+]+', text.strip(' ()[]')) if token]
    except ValueError as error:
        raise ParseError('expected a comma separated list of integers, got %r' % text) from error


def _parse_rationals(text: str) -> List[Fraction]:
    return [as_rational(token) for token in re.split(r'[\s,]+', text.strip(' ()[]')) if token]


def _alpha_nu(args: argparse.Namespace) -> Tuple[Composition, List[Fraction]]:
    alpha = Composition(_parse_integers(args.alpha))
    nu = [Fraction(0)] * len(alpha) if args.nu is None else _parse_rationals(args.nu)
    return alpha, nu


def _label(args: argparse.Namespace) -> RepLabel:
    return RepLabel(parse_multisegment(args.multisegment), args.convention)


def _label_as_json(label: RepLabel) -> Dict[str, Any]:
    return {'multisegment': multisegment_as_json(label.multisegment), 'convention': label.convention}


def _onto_line(m: Multisegment, dim: int) -> Multisegment:
    """Put the segments of the default line onto ``rho1[dim]``."""
    if dim == 1:
        return m
    line = CuspidalLine(DEFAULT_LINE.ident, dim)
    return Multisegment(Segment(line, item.start, item.length) if item.line == DEFAULT_LINE else item for item in m)


###############################################################################
# Subcommands


def cmd_az(args: argparse.Namespace, config: GLWFConfig) -> Result:  # pylint: disable=unused-argument
    label = _label(args)
    dual = az(label)
    return Result(format_multisegment(dual.multisegment),
                  {'input': _label_as_json(label), 'result': _label_as_json(dual)})


def cmd_wf(args: argparse.Namespace, config: GLWFConfig) -> Result:  # pylint: disable=unused-argument
    label = _label(args)
    lam = wavefront(label)
    return Result(format_partition(lam), {'label': _label_as_json(label), 'wavefront': list(lam)})


def cmd_param(args: argparse.Namespace, config: GLWFConfig) -> Result:  # pylint: disable=unused-argument
    label = _label(args)
    parameter = parameter_of(label)
    lam = nilpotent_partition(parameter)
    summands = [{'line': summand.line.ident, 'dim': summand.line.dim,
                 'start': str(summand.start), 'length': summand.length} for summand in parameter]
    return Result('parameter: %s\nN: %s' % (parameter, format_partition(lam)),
                  {'label': _label_as_json(label), 'summands': summands, 'nilpotent': list(lam)})


def cmd_inertia(args: argparse.Namespace, config: GLWFConfig) -> Result:  # pylint: disable=unused-argument
    m = parse_multisegment(args.multisegment)
    inertia = inertia_class(m)
    entries = [{'line': line.ident, 'dim': line.dim, 'count': count} for line, count in inertia]
    return Result(str(inertia), {'multisegment': multisegment_as_json(m), 'inertia': entries})


def cmd_duality(args: argparse.Namespace, config: GLWFConfig) -> Result:  # pylint: disable=unused-argument
    label = SimpleOrbitLabel(args.type, args.k, parse_partition(args.partition), args.numeral)
    dual = spaltenstein(label)
    return Result(str(dual), {'input': label.as_json(), 'result': dual.as_json()})


def cmd_closure(args: argparse.Namespace, config: GLWFConfig) -> Result:  # pylint: disable=unused-argument
    m1 = parse_multisegment(args.first)
    m2 = parse_multisegment(args.second)
    leq = closure_leq_graded(m1, m2)
    return Result('true' if leq else 'false',
                  {'first': multisegment_as_json(m1), 'second': multisegment_as_json(m2), 'leq': leq})


def cmd_enumerate(args: argparse.Namespace, config: GLWFConfig) -> Result:  # pylint: disable=unused-argument
    s = parse_support(args.support)
    found = enumerate_multisegments(s)
    return Result('\n'.join(map(format_multisegment, found)),
                  {'support': str(s), 'multisegments': [multisegment_as_json(m) for m in found]})


def cmd_kl_poly(args: argparse.Namespace, config: GLWFConfig) -> Result:  # pylint: disable=unused-argument
    x = parse_permutation(args.x)
    w = parse_permutation(args.w)
    for perm in (x, w):
        if perm.size != args.N:
            raise SizeMismatchError('%s is not a permutation of size %d' % (perm, args.N))
    if args.method == 'products':
        poly = kl_polynomial_via_products(x, w)
    else:
        poly = kl_polynomial(x, w)
    return Result(str(poly), {'x': str(x), 'w': str(w), 'coefficients': list(poly)})


def _expansion(args: argparse.Namespace, config: GLWFConfig) -> Tuple[Composition, List[Fraction], ExpansionVector]:
    alpha, nu = _alpha_nu(args)
    return alpha, nu, hch_expansion_of_az(alpha, nu, config.backend)


def cmd_expansion(args: argparse.Namespace, config: GLWFConfig) -> Result:
    alpha, nu, vector = _expansion(args, config)
    document = {'alpha': list(alpha), 'nu': [str(value) for value in nu], 'backend': config.backend}
    document.update(vector.as_json())
    return Result(str(vector), document)


def cmd_wavefront(args: argparse.Namespace, config: GLWFConfig) -> Result:
    alpha, nu, vector = _expansion(args, config)
    orbits = sorted(wavefront_from_expansion(vector), reverse=True)
    return Result('\n'.join(map(format_partition, orbits)),
                  {'alpha': list(alpha), 'nu': [str(value) for value in nu], 'backend': config.backend,
                   'wavefront': [list(lam) for lam in orbits]})


def cmd_reduce(args: argparse.Namespace, config: GLWFConfig) -> Result:
    desc = PureTypeDescriptor(args.n, args.m, args.e, args.f, args.depth, args.s_label)
    m = _onto_line(parse_multisegment(args.multisegment), desc.m)
    reduced = reduce(m, desc)
    orbit = gamma_wavefront(m, desc)
    expansion = gamma_expansion(m, desc, config.backend)
    lines = ['descriptor: %s' % (desc,),
             'reduced: %s' % format_multisegment(reduced),
             'gamma wavefront: %s' % (orbit,),
             'expansion:']
    lines.extend('%s: %s' % (key, value) for key, value in expansion.items())
    document = {
        'descriptor': desc.as_json(),
        'reduced': multisegment_as_json(reduced),
        'gamma_wavefront': orbit.as_json(),
        'expansion': [{'orbit': key.as_json(), 'scalar': value.as_json()} for key, value in expansion.items()],
        'backend': config.backend,
    }
    return Result('\n'.join(lines), document)


###############################################################################
# Verification sweep

#: A check outcome: whether it passed and what it was about.
Check = Tuple[bool, str]


def _one_line_supports(size: int) -> Generator[SupportMultiset, None, None]:
    for counts in integer_compositions(size):
        yield SupportMultiset.on_line(dict(enumerate(counts)))


def _verify_mw_involution(size: int, backend: str) -> Generator[Check, None, None]:  # pylint: disable=unused-argument
    for s in _one_line_supports(size):
        for m in enumerate_multisegments(s):
            dual = mw_dual(m)
            yield mw_dual(dual) == m and support(dual) == s, 'mw_dual involution at %s' % (m,)


def _verify_mw_order(size: int, backend: str) -> Generator[Check, None, None]:  # pylint: disable=unused-argument
    for s in _one_line_supports(size):
        found = enumerate_multisegments(s)
        duals = {m: mw_dual(m) for m in found}
        for lower in found:
            for upper in found:
                if lower != upper and closure_leq_graded(lower, upper):
                    yield (closure_leq_graded(duals[upper], duals[lower]),
                           'mw_dual reverses %s <= %s' % (lower, upper))


def _verify_leading_coefficient(size: int, backend: str) -> Generator[Check, None, None]:
    for alpha in integer_compositions(size):
        # starts at 0, 1, 2, ... keep every segment on the integral lattice
        nu = [Fraction(part - 1, 2) + index for index, part in enumerate(alpha)]
        target = transpose(sort_to_partition(alpha))
        vector = hch_expansion_of_az(alpha, nu, backend)
        label = RepLabel(multisegment_of(alpha, nu))
        passed = (vector.coefficient(target) == 1
                  and all(dominance_leq(lam, target) for lam in vector)
                  and wavefront_from_expansion(vector) == frozenset({target})
                  and wavefront(az(label)) == transpose(o_dual(label)) == target
                  and upper_bound_holds(label))
        yield passed, 'leading coefficient of alpha = %s' % (alpha,)


def _verify_rodier(size: int, backend: str) -> Generator[Check, None, None]:  # pylint: disable=unused-argument
    for label in generic_labels(size):
        yield wavefront(label) == Partition([size]), 'wavefront of generic %s' % (label,)


def _verify_spherical(size: int, backend: str) -> Generator[Check, None, None]:
    for lam in integer_partitions(size):
        alpha, nu = spherical_unipotent(lam)
        vector = hch_expansion_of_az(alpha, nu, backend)
        yield vector == ExpansionVector({transpose(lam): 1}), 'spherical expansion at %s' % (lam,)


def _verify_duality(size: int, backend: str) -> Generator[Check, None, None]:  # pylint: disable=unused-argument
    for lie_type in LIE_TYPES:
        for o in orbit_labels(lie_type, size):
            dual = spaltenstein(o)
            yield spaltenstein(spaltenstein(dual)) == dual, 'd^3 = d at %s(%d) %s' % (lie_type, size, o)
            if lie_type == 'D':
                yield spaltenstein(diagram_flip(o)) == diagram_flip(dual), 'equivariance at D(%d) %s' % (size, o)


def _verify_kl(size: int, backend: str) -> Generator[Check, None, None]:  # pylint: disable=unused-argument
    elements = all_permutations(size)
    for w in elements:
        for x in elements:
            if not bruhat_leq(x, w):
                continue
            first = kl_polynomial(x, w)
            passed = first == kl_polynomial_via_products(x, w) and first(0) == 1
            if x == w:
                passed = passed and first == (1,)
            else:
                passed = passed and 2 * first.degree <= length(w) - length(x) - 1
            yield passed, 'P(%s, %s)' % (x, w)


def _verify_matrices(size: int, backend: str) -> Generator[Check, None, None]:  # pylint: disable=unused-argument
    for s in _one_line_supports(size):
        for name in BACKENDS:
            try:
                std_in_irr_matrix(s, name)
            except GLWFError:
                yield False, '%s multiplicity matrix over %s' % (name, s)
            else:
                yield True, '%s multiplicity matrix over %s' % (name, s)


def _verify_reduction(size: int, backend: str) -> Generator[Check, None, None]:  # pylint: disable=unused-argument
    for dim in range(1, size + 1):
        if size % dim:
            continue
        line = CuspidalLine(DEFAULT_LINE.ident, dim)
        desc = PureTypeDescriptor(size, dim)
        for counts in integer_compositions(size // dim):
            for m in enumerate_multisegments(SupportMultiset.on_line(dict(enumerate(counts)), line)):
                lam, orbit = hch_vs_gamma(m, desc)
                scaled = Partition(sorted((part * dim for part in orbit.partition), reverse=True))
                yield az_reduce_commutes(m, desc) and lam == scaled, 'reduction of %s' % (m,)


#: Verification families and the largest size each one runs at.
VERIFY_FAMILIES = {
    'mw-involution': (_verify_mw_involution, 8),
    'mw-order': (_verify_mw_order, 6),
    'leading-coefficient': (_verify_leading_coefficient, 6),
    'rodier': (_verify_rodier, 8),
    'spherical': (_verify_spherical, 6),
    'duality': (_verify_duality, 6),
    'kl': (_verify_kl, 5),
    'matrices': (_verify_matrices, 6),
    'reduction': (_verify_reduction, 8),
}  # type: Final[Dict[str, Tuple[Callable[[int, str], Iterable[Check]], int]]]

#: Families whose failed checks are reported as findings and do not fail the sweep.
#: ``mw_dual`` does not reverse the graded closure order in general.
FLAGGED_FAMILIES = frozenset({'mw-order'})  # type: Final[FrozenSet[str]]


def check_case(case: Tuple[str, int], backend: str, quiet: bool) -> CaseReport:
    """Run one family of checks at one size.

    Args:
        case (Tuple[str, int]): family name and size
        backend (str): multiplicity backend used by the expansion checks
        quiet (bool): whether to suppress progress messages

    Returns:
        CaseReport: the number of checks run, of failures and of flagged findings

    """
    family, size = case
    if not quiet:
        with TaskLock():
            print('Now checking: %s %d' % (family, size), file=sys.stderr)
    checker = VERIFY_FAMILIES[family][0]
    checked = failures = flagged = 0
    for passed, description in checker(size, backend):
        checked += 1
        if passed:
            continue
        if family in FLAGGED_FAMILIES:
            flagged += 1
            message = 'Flagged: %s'
        else:
            failures += 1
            message = 'Check failed: %s'
        with TaskLock():
            print(message % description, file=sys.stderr)
    return CaseReport(checked, failures, flagged)


def do_check_case(case: Tuple[str, int], **kwargs: Any) -> CaseReport:
    """Wrapper function to catch exceptions."""
    try:
        return check_case(case, **kwargs)
    except Exception:  # pylint: disable=broad-except
        with TaskLock():
            print('Failed to check case: %s %d' % case, file=sys.stderr)
            traceback.print_exc()
        return CaseReport(1, 1)


def cmd_verify(args: argparse.Namespace, config: GLWFConfig) -> Result:
    families = args.family or sorted(VERIFY_FAMILIES)
    cases = [(family, size) for family in families
             for size in range(1, min(args.max_size, VERIFY_FAMILIES[family][1]) + 1)]
    results = map_tasks(do_check_case, cases, kwargs={'backend': config.backend, 'quiet': config.quiet},
                        processes=config.concurrency)
    checked = sum(report.checked for report in results)
    failures = sum(report.failures for report in results)
    flagged = sum(report.flagged for report in results)
    return Result('%d cases checked, %d failures, %d flagged' % (checked, failures, flagged),
                  {'checked': checked, 'failures': failures, 'flagged': flagged, 'families': families},
                  1 if failures else 0)


###############################################################################
# CLI & Entry Point

# option values display
# these values are only intended for argparse help messages
# this shows default values by default, environment variables may override them
__glwf_quiet__ = 'quiet mode' if _get_quiet_option() else 'non-quiet mode'
__glwf_json__ = 'JSON output' if _get_json_option() else 'text output'
__glwf_concurrency__ = _get_concurrency_option() or 'auto detect'
__glwf_backend__ = os.getenv('GLWF_BACKEND') or _default_backend


def get_parser() -> argparse.ArgumentParser:
    """Generate CLI parser.

    Returns:
        argparse.ArgumentParser: CLI parser for glwf

    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', dest='json_output', default=None,
                        help='print a single JSON document instead of text (current: %s)' % __glwf_json__)
    common.add_argument('-q', '--quiet', action='store_true', default=None,
                        help='run in quiet mode (current: %s)' % __glwf_quiet__)

    backend = argparse.ArgumentParser(add_help=False)
    backend.add_argument('--backend', action='store', choices=BACKEND_CHOICES, default=None,
                         help='multiplicity backend (current: %s)' % __glwf_backend__)

    expansion = argparse.ArgumentParser(add_help=False)
    expansion.add_argument('--alpha', action='store', required=True, metavar='PARTS',
                           help='composition of n, e.g. 2,1')
    expansion.add_argument('--nu', action='store', metavar='EXPONENTS',
                           help='one rational exponent per part, e.g. 1/2,-1/2 (default: all zero); '
                                'write --nu=-1/2,1/2 when the first entry is negative')

    label = argparse.ArgumentParser(add_help=False)
    label.add_argument('multisegment', action='store', help='multisegment, e.g. "(0,1)+(1)" or "rho2[2]:(0,1)"')

    parser = argparse.ArgumentParser(prog='glwf',
                                     description='Wavefront sets, Langlands data and character expansions '
                                                 'of representations of GL(n) over a p-adic field.')
    parser.add_argument('-V', '--version', action='version', version=__version__)
    subparsers = parser.add_subparsers(title='commands', dest='command', metavar='<command>')
    subparsers.required = True

    def _add(name: str, func: Callable[[argparse.Namespace, GLWFConfig], Result], help_text: str,
             *parents: argparse.ArgumentParser) -> argparse.ArgumentParser:
        subparser = subparsers.add_parser(name, parents=(common,) + parents, help=help_text, description=help_text)
        subparser.set_defaults(func=func)
        return subparser

    subparser = _add('az', cmd_az, 'Aubert-Zelevinsky dual of a multisegment', label)
    subparser.add_argument('--convention', action='store', choices=CONVENTIONS, default='zelevinsky',
                           help='labelling convention (default: %(default)s)')
    for name, func, help_text in (('wf', cmd_wf, 'wavefront set of a representation'),
                                  ('param', cmd_param, 'Weil-Deligne parameter of a representation')):
        subparser = _add(name, func, help_text, label)
        subparser.add_argument('--convention', action='store', choices=CONVENTIONS, default='langlands',
                               help='labelling convention (default: %(default)s)')
    _add('inertia', cmd_inertia, 'inertial support of a multisegment', label)

    subparser = _add('duality', cmd_duality, 'Spaltenstein dual of a nilpotent orbit')
    subparser.add_argument('--type', action='store', choices=LIE_TYPES, required=True, help='Lie type')
    subparser.add_argument('--k', action='store', type=int, required=True,
                           help='rank: A(k) is gl(k), D(k) is so(2k)')
    subparser.add_argument('--partition', action='store', required=True, help='Jordan type, e.g. 3,1,1')
    subparser.add_argument('--numeral', action='store', choices=NUMERALS, help='numeral of a very even orbit')

    subparser = _add('closure', cmd_closure, 'whether the orbit of FIRST lies in the closure of SECOND')
    subparser.add_argument('first', action='store', help='multisegment')
    subparser.add_argument('second', action='store', help='multisegment with the same support')

    subparser = _add('enumerate', cmd_enumerate, 'all multisegments with a given support')
    subparser.add_argument('--support', action='store', required=True,
                           help='points with multiplicities, e.g. 0:2,1:2 or rho2[2]:0,1')

    subparser = _add('kl-poly', cmd_kl_poly, 'Kazhdan-Lusztig polynomial of two permutations')
    subparser.add_argument('N', action='store', type=int, help='size of the permutations')
    subparser.add_argument('x', action='store', help='permutation in one-line notation, e.g. 1324')
    subparser.add_argument('w', action='store', help='permutation in one-line notation, e.g. 3412')
    subparser.add_argument('--method', action='store', choices=('recursion', 'products'), default='recursion',
                           help='algorithm (default: %(default)s)')

    _add('expansion', cmd_expansion, 'local character expansion of AZ(pi(alpha; nu))', expansion, backend)
    _add('wavefront', cmd_wavefront, 'maximal orbits of the local character expansion', expansion, backend)

    subparser = _add('reduce', cmd_reduce, 'Gamma-asymptotic data of a pure type', backend)
    subparser.add_argument('--n', action='store', type=int, required=True, help='the group is GL(n)')
    subparser.add_argument('--m', action='store', type=int, required=True, help='cuspidal dimension [E:F]')
    subparser.add_argument('--multisegment', action='store', required=True,
                           help='Langlands multisegment; unprefixed segments lie on rho1[m]')
    subparser.add_argument('--e', action='store', type=int, default=1, help='ramification degree (default: 1)')
    subparser.add_argument('--f', action='store', type=int, help='residue degree (default: m / e)')
    subparser.add_argument('--depth', action='store', default='0', help='depth of the type (default: 0)')
    subparser.add_argument('--s-label', action='store', default='s', help='tag of the semisimple element')

    subparser = _add('verify', cmd_verify, 'run the built-in consistency checks', backend)
    subparser.add_argument('-C', '--concurrency', action='store', type=int, metavar='N',
                           help='the number of concurrent processes (current: %s)' % __glwf_concurrency__)
    subparser.add_argument('--max-size', action='store', type=int, default=6, metavar='N',
                           help='largest size to check (default: %(default)s)')
    subparser.add_argument('--family', action='append', choices=sorted(VERIFY_FAMILIES),
                           help='check only this family (repeatable)')

    return parser


def run(argv: Optional[List[str]] = None) -> Tuple[int, str]:
    """Run a command and return its exit status with its standard output.

    Args:
        argv (Optional[List[str]]): CLI arguments

    Returns:
        Tuple[int, str]: exit status and output text; domain errors are
        reported on standard error with status 1 (and as an ``error``
        document in JSON mode), usage errors with status 2

    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors, --help and --version
        return (exc.code if isinstance(exc.code, int) else 2), ''

    json_output = _get_json_option(args.json_output)
    try:
        config = GLWFConfig(
            backend=_get_backend_option(getattr(args, 'backend', None)),
            concurrency=_get_concurrency_option(getattr(args, 'concurrency', None)),
            quiet=_get_quiet_option(args.quiet),
            json_output=json_output,
        )
        result = args.func(args, config)  # type: Result
    except GLWFError as error:
        print('glwf: error: %s' % error, file=sys.stderr)
        if json_output:
            return 1, json.dumps({'error': {'type': type(error).__name__, 'message': str(error)}}, sort_keys=True)
        return 1, ''

    if config.json_output:
        return result.status, json.dumps(result.document, sort_keys=True)
    return result.status, result.text


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point for glwf.

    Args:
        argv (Optional[List[str]]): CLI arguments

    :Environment Variables:
     - :envvar:`GLWF_QUIET` -- same as the ``--quiet`` option in CLI
     - :envvar:`GLWF_JSON` -- same as the ``--json`` option in CLI
     - :envvar:`GLWF_CONCURRENCY` -- same as the ``--concurrency`` option in CLI
     - :envvar:`GLWF_BACKEND` -- same as the ``--backend`` option in CLI

    """
    status, output = run(argv)
    if output:
        print(output)
    return status


if __name__ == '__main__':
    sys.exit(main())
