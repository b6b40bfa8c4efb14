# -*- coding: utf-8 -*-
"""Multiplicities of standard modules and local character expansions.

For a support ``s`` the standard modules ``I(m)`` and their Langlands
quotients ``L(m)``, ``m`` running over the multisegments with support ``s``,
are related by the unitriangular matrix ``M[m][m'] = [I(m) : L(m')]``.  The
entries of its inverse ``N`` aggregated over segment lengths give the
coefficients of the local character expansion of Aubert–Zelevinsky duals.

Two backends compute ``M``:

``closure01``
    ``M[m][m'] = 1`` exactly when ``m <= m'`` in the closure order; correct
    on multiplicity-free supports.
``kl_zelevinsky``
    Kazhdan–Lusztig polynomials at ``q = 1`` of Zelevinsky permutations,
    see :func:`zelevinsky_permutation`.
"""

import collections
import collections.abc
from fractions import Fraction
from typing import (Any, Counter, Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Optional,
                    Sequence, Tuple)

import numpy
from typing_extensions import Final, Literal

from glwf.errors import BackendValidationError, GLWFError, LineMismatchError, SizeMismatchError
from glwf.kl_engine import KazhdanLusztig, Permutation, kl_polynomial, longest_element
from glwf.langlands import RepLabel, az, convert
from glwf.multisegments import (DEFAULT_LINE, Multisegment, Rational, Segment, SupportMultiset, as_rational,
                                closure_leq_graded, enumerate_multisegments, lengths_partition, support)
from glwf.partitions import Composition, Partition, dominance_leq, format_partition, multiplicities, transpose

__all__ = [
    'GeometricParameter', 'ExpansionVector', 'MultiplicityMatrix', 'BACKENDS',
    'normalize_backend', 's_vee', 'multisegment_of', 'geometric_parameter', 'zelevinsky_permutation',
    'std_in_irr_matrix', 'validate_matrix', 'm_tilde', 'hch_expansion_of_multisegment', 'hch_expansion_of_az',
    'hch_expansion', 'wavefront_from_expansion', 'flag_levi', 'centralizer_reductive', 'spherical_unipotent',
]

Backend = Literal['closure01', 'kl_zelevinsky']

#: Multiplicity backends.
BACKENDS = ('closure01', 'kl_zelevinsky')  # type: Final[Tuple[str, ...]]
#: Short names accepted for backends.
BACKEND_ALIASES = {'kl': 'kl_zelevinsky', 'closure': 'closure01'}  # type: Final[Dict[str, str]]

###############################################################################
# Typings


class GeometricParameter(NamedTuple):
    """Pair :math:`(s^\\vee, e^\\vee)`: eigenvalues of the semisimple part and the multisegment of the nilpotent."""

    s_coordinates: Tuple[Fraction, ...]
    multisegment: Multisegment


class ExpansionVector(collections.abc.Mapping):
    """Integer coefficients indexed by nilpotent orbits (partitions of ``n``); zeros are dropped.

    Args:
        coefficients (Mapping[Partition, int]): the coefficients
        n (Optional[int]): size of the partitions, needed for an empty vector

    Raises:
        SizeMismatchError: if the partitions have different sizes

    """

    __slots__ = ('_items', '_lookup', 'n')

    def __init__(self, coefficients: Optional[Mapping[Iterable[int], int]] = None,
                 n: Optional[int] = None) -> None:
        items = {}  # type: Dict[Partition, int]
        for key, value in (coefficients or {}).items():
            if value:
                lam = Partition(key)
                items[lam] = items.get(lam, 0) + value
        sizes = {lam.n for lam in items}
        if n is not None:
            sizes.add(n)
        if len(sizes) > 1:
            raise SizeMismatchError('expansion mixes partitions of %s' % ', '.join(map(str, sorted(sizes))))
        self.n = sizes.pop() if sizes else 0  # type: int
        self._items = tuple(sorted(((lam, value) for lam, value in items.items() if value), reverse=True))
        self._lookup = dict(self._items)

    def __getitem__(self, key: Iterable[int]) -> int:
        return self._lookup[Partition(key)]

    def __iter__(self) -> Iterator[Partition]:
        return (lam for lam, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExpansionVector):
            return self._items == other._items
        return super().__eq__(other)

    def __hash__(self) -> int:
        return hash(self._items)

    def coefficient(self, lam: Iterable[int]) -> int:
        """Coefficient at ``lam``, zero when absent."""
        return self._lookup.get(Partition(lam), 0)

    def as_json(self) -> Dict[str, Any]:
        return {'n': self.n,
                'coefficients': [{'partition': list(lam), 'coefficient': value} for lam, value in self._items]}

    def __repr__(self) -> str:
        return 'ExpansionVector({%s})' % ', '.join('%s: %d' % (lam, value) for lam, value in self._items)

    def __str__(self) -> str:
        return '\n'.join('%s: %d' % (format_partition(lam), value) for lam, value in self._items)


class MultiplicityMatrix(NamedTuple):
    """Standard-to-irreducible multiplicities over one support.

    ``standard[a, b]`` is ``[I(index[a]) : L(index[b])]`` and ``inverse`` its
    integral inverse; ``index`` runs along a linear extension of the closure
    order, so both matrices are upper unitriangular.
    """

    support: SupportMultiset
    backend: str
    index: Tuple[Multisegment, ...]
    standard: numpy.ndarray
    inverse: numpy.ndarray

    def position(self, m: Multisegment) -> int:
        try:
            return self.index.index(m)
        except ValueError as error:
            raise GLWFError('%s does not have support %s' % (m, self.support)) from error

    def entry(self, m: Multisegment, m2: Multisegment) -> int:
        return self.standard[self.position(m), self.position(m2)]

    def inverse_entry(self, m: Multisegment, m2: Multisegment) -> int:
        return self.inverse[self.position(m), self.position(m2)]


def normalize_backend(tag: str) -> str:
    """Resolve backend aliases.

    Raises:
        GLWFError: if the backend is unknown

    """
    tag = BACKEND_ALIASES.get(tag, tag)
    if tag not in BACKENDS:
        raise GLWFError('unknown multiplicity backend %r (expected one of %s)'
                        % (tag, ', '.join(BACKENDS + tuple(BACKEND_ALIASES))))
    return tag


###############################################################################
# Geometric parameters


def _exponents(nu: Sequence[Rational], alpha: Composition) -> List[Fraction]:
    if len(nu) != len(alpha):
        raise SizeMismatchError('alpha has %d entries but nu has %d' % (len(alpha), len(nu)))
    return [as_rational(value) for value in nu]


def s_vee(alpha: Iterable[int], nu: Sequence[Rational]) -> Tuple[Fraction, ...]:
    """Eigenvalues of :math:`s^\\vee_\\nu`: ``nu_i - (alpha_i - 1)/2 + j`` for ``0 <= j < alpha_i``, sorted.

    Raises:
        SizeMismatchError: if ``alpha`` and ``nu`` have different lengths

    """
    alpha = Composition(alpha)
    values = []  # type: List[Fraction]
    for part, shift in zip(alpha, _exponents(nu, alpha)):
        values.extend(shift - Fraction(part - 1, 2) + offset for offset in range(part))
    return tuple(sorted(values))


def multisegment_of(alpha: Iterable[int], nu: Sequence[Rational]) -> Multisegment:
    """Langlands multisegment of :math:`\\pi(\\alpha; \\nu)`, one segment centred at ``nu_i`` per part."""
    alpha = Composition(alpha)
    return Multisegment(Segment(DEFAULT_LINE, shift - Fraction(part - 1, 2), part)
                        for part, shift in zip(alpha, _exponents(nu, alpha)))


def geometric_parameter(alpha: Iterable[int], nu: Sequence[Rational]) -> GeometricParameter:
    return GeometricParameter(s_vee(alpha, nu), multisegment_of(alpha, nu))


def spherical_unipotent(lam: Iterable[int]) -> Tuple[Composition, Tuple[Fraction, ...]]:
    """``(alpha, nu)`` whose Aubert–Zelevinsky dual is the spherical representation attached to ``lam``."""
    lam = Partition(lam)
    return Composition(lam), (Fraction(0),) * len(lam)


###############################################################################
# Multiplicity matrices


def zelevinsky_permutation(m: Multisegment) -> Permutation:
    """Permutation attached to the orbit of a multisegment of one lattice block.

    With points ``p_0 < … < p_r`` of dimensions ``d_i``, ``s_ij`` segments equal
    to ``[p_i, p_j]`` and ``t_j`` segments containing ``p_j`` and ``p_{j+1}``,
    the permutation matrix has block rows ``0 .. r`` from the top, block
    columns ``r .. 0`` from the left, ``s_ij`` ones in block ``(i, j)`` for
    ``i <= j``, ``t_j`` ones in block ``(j + 1, j)`` and no others, the ones
    running from north-west to south-east inside every block row and block
    column.

    >>> from glwf.multisegments import parse_multisegment
    >>> str(zelevinsky_permutation(parse_multisegment('(0,1)+(0,0)+(1,1)')))
    '1324'

    Raises:
        LineMismatchError: if ``m`` has more than one lattice block

    """
    blocks = m.blocks()
    if len(blocks) > 1:
        raise LineMismatchError('zelevinsky_permutation needs a single lattice block, got %d' % len(blocks))
    if not m:
        return Permutation(())
    base = min(item.start for item in m)
    top = max(item.end for item in m)
    r = int(top - base)
    dims = [0] * (r + 1)
    exact = collections.Counter()  # type: Counter[Tuple[int, int]]
    bridges = [0] * r
    for item in m:
        first, last = int(item.start - base), int(item.end - base)
        exact[(first, last)] += 1
        for point in range(first, last + 1):
            dims[point] += 1
        for point in range(first, last):
            bridges[point] += 1

    rows = [sum(dims[:i]) for i in range(r + 1)]
    columns = [sum(dims[j + 1:]) for j in range(r + 1)]
    values = [0] * sum(dims)

    def _fill(i: int, j: int, count: int) -> None:
        for _ in range(count):
            values[rows[i]] = columns[j] + 1
            rows[i] += 1
            columns[j] += 1

    for i in range(r + 1):
        for j in range(r, i - 1, -1):
            _fill(i, j, exact[(i, j)])
        if i:
            _fill(i, i - 1, bridges[i - 1])
    return Permutation(values)


def _kl_block_entry(m: Multisegment, m2: Multisegment, session: Optional[KazhdanLusztig]) -> int:
    first, second = zelevinsky_permutation(m), zelevinsky_permutation(m2)
    top = longest_element(len(first))
    return kl_polynomial(top * first, top * second, session)(1)


def _kl_entry(m: Multisegment, m2: Multisegment, session: Optional[KazhdanLusztig]) -> int:
    blocks, blocks2 = m.blocks(), m2.blocks()
    value = 1
    for key, block in blocks.items():
        value *= _kl_block_entry(block, blocks2[key], session)
        if not value:
            break
    return value


def _invert_unitriangular(matrix: numpy.ndarray) -> numpy.ndarray:
    size = matrix.shape[0]
    inverse = numpy.zeros((size, size), dtype=object)
    for row in range(size - 1, -1, -1):
        for column in range(size):
            value = 1 if row == column else 0
            for middle in range(row + 1, size):
                if matrix[row, middle]:
                    value -= matrix[row, middle] * inverse[middle, column]
            inverse[row, column] = value
    return inverse


def _build_standard(index: Tuple[Multisegment, ...], backend: str,
                    session: Optional[KazhdanLusztig]) -> numpy.ndarray:
    size = len(index)
    standard = numpy.zeros((size, size), dtype=object)
    for row, m in enumerate(index):
        standard[row, row] = 1
        for column in range(row + 1, size):
            m2 = index[column]
            if not closure_leq_graded(m, m2):
                continue
            standard[row, column] = 1 if backend == 'closure01' else _kl_entry(m, m2, session)
    return standard


def validate_matrix(matrix: MultiplicityMatrix) -> None:
    """Check unitriangularity, nonnegativity and ``M N = 1``.

    Raises:
        BackendValidationError: if a check fails

    """
    size = len(matrix.index)
    standard, inverse = matrix.standard, matrix.inverse
    for row, m in enumerate(matrix.index):
        if standard[row, row] != 1:
            raise BackendValidationError('%s: diagonal entry at %s is %s' % (matrix.backend, m, standard[row, row]))
        for column, m2 in enumerate(matrix.index):
            value = standard[row, column]
            if value < 0:
                raise BackendValidationError('%s: negative multiplicity [I(%s) : L(%s)] = %s'
                                             % (matrix.backend, m, m2, value))
            if value and row != column and not closure_leq_graded(m, m2):
                raise BackendValidationError('%s: [I(%s) : L(%s)] = %s outside the closure order'
                                             % (matrix.backend, m, m2, value))
    if size and not numpy.array_equal(standard.dot(inverse), numpy.identity(size, dtype=int)):
        raise BackendValidationError('%s: multiplicity matrix of %s is not inverted' % (matrix.backend, matrix.support))


def std_in_irr_matrix(s: SupportMultiset, backend: str = 'kl_zelevinsky',
                      session: Optional[KazhdanLusztig] = None) -> MultiplicityMatrix:
    """Multiplicity matrix of standard modules in irreducibles over the support ``s``.

    Supports spread over several lattice blocks or lines give products of the
    block multiplicities.  On multiplicity-free supports the
    ``kl_zelevinsky`` backend is cross-checked against ``closure01``.

    Raises:
        GLWFError: if the backend is unknown
        BackendValidationError: if the matrix fails :func:`validate_matrix`
            or the cross-check

    """
    backend = normalize_backend(backend)
    index = tuple(enumerate_multisegments(s))
    standard = _build_standard(index, backend, session)
    matrix = MultiplicityMatrix(s, backend, index, standard, _invert_unitriangular(standard))
    validate_matrix(matrix)
    if backend == 'kl_zelevinsky' and s.is_multiplicity_free():
        if not numpy.array_equal(standard, _build_standard(index, 'closure01', session)):
            raise BackendValidationError('kl_zelevinsky disagrees with closure01 on multiplicity-free support %s' % s)
    return matrix


###############################################################################
# Character expansions


def m_tilde(alpha: Iterable[int], lam: Iterable[int], nu: Sequence[Rational], backend: str = 'kl_zelevinsky',
            session: Optional[KazhdanLusztig] = None) -> int:
    """Sum of ``N[m][m']`` over the ``m'`` with segment lengths ``lam``, ``m`` the multisegment of ``(alpha, nu)``."""
    lam = Partition(lam)
    m = multisegment_of(alpha, nu)
    matrix = std_in_irr_matrix(support(m), backend, session)
    row = matrix.position(m)
    return sum(matrix.inverse[row, column] for column, m2 in enumerate(matrix.index)
               if lengths_partition(m2) == lam)


def hch_expansion_of_multisegment(m: Multisegment, backend: str = 'kl_zelevinsky',
                                  session: Optional[KazhdanLusztig] = None) -> ExpansionVector:
    """Local character expansion of the Aubert–Zelevinsky dual of the Langlands label ``m``.

    The coefficient at ``lam`` is the sum of ``N[m][m']`` over the ``m'`` whose
    segment lengths form the transpose of ``lam``.

    Raises:
        GLWFError: if ``m`` meets a cuspidal line of dimension other than one

    """
    if any(line.dim != 1 for line in m.lines):
        raise GLWFError('character expansions need lines of dimension one; reduce %s to its twisted Levi first' % (m,))
    matrix = std_in_irr_matrix(support(m), backend, session)
    row = matrix.position(m)
    coefficients = collections.Counter()  # type: Counter[Partition]
    for column, m2 in enumerate(matrix.index):
        value = matrix.inverse[row, column]
        if value:
            coefficients[transpose(lengths_partition(m2))] += value
    return ExpansionVector(coefficients, n=m.degree)


def hch_expansion_of_az(alpha: Iterable[int], nu: Sequence[Rational], backend: str = 'kl_zelevinsky',
                        session: Optional[KazhdanLusztig] = None) -> ExpansionVector:
    """Local character expansion of :math:`AZ(\\pi(\\alpha; \\nu))`: ``lam ↦ m_tilde(alpha, transpose(lam), nu)``."""
    return hch_expansion_of_multisegment(multisegment_of(alpha, nu), backend, session)


def hch_expansion(label: RepLabel, backend: str = 'kl_zelevinsky',
                  session: Optional[KazhdanLusztig] = None) -> ExpansionVector:
    """Local character expansion of the representation labelled by ``label`` itself."""
    langlands = label if label.convention == 'langlands' else convert(label)
    return hch_expansion_of_multisegment(az(langlands).multisegment, backend, session)


def wavefront_from_expansion(v: ExpansionVector) -> FrozenSet[Partition]:
    """Dominance-maximal orbits with nonzero coefficient.

    Raises:
        GLWFError: if ``v`` has no nonzero coefficient

    """
    if not v:
        raise GLWFError('the zero expansion has no wavefront set')
    orbits = list(v)
    return frozenset(lam for lam in orbits
                     if not any(mu != lam and dominance_leq(lam, mu) for mu in orbits))


###############################################################################
# Orbit structure


def flag_levi(lam: Iterable[int]) -> Composition:
    """Block sizes of the Levi of the parabolic whose Richardson orbit is ``lam``."""
    return Composition(transpose(Partition(lam)))


def centralizer_reductive(lam: Iterable[int]) -> List[int]:
    """Ranks ``r_i`` of the reductive centralizer :math:`\\prod GL_{r_i}`, by increasing part ``i``."""
    counts = multiplicities(Partition(lam))
    return [counts[part] for part in sorted(counts)]

