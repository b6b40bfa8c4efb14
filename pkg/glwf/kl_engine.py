# -*- coding: utf-8 -*-
"""Bruhat order and Kazhdan–Lusztig polynomials of symmetric groups.

Two independent algorithms are provided:

* :class:`KazhdanLusztig` runs the classical recursion along a right
  descent with the μ-correction;
* :class:`HeckeAlgebra` builds the canonical basis element :math:`C'_w` as a
  corrected product :math:`C'_{ws} C'_s - \\sum \\mu(z, ws) C'_z` in the
  standard basis :math:`T_x` of the Hecke algebra, with Laurent polynomial
  coefficients in :math:`v = q^{1/2}`, and reads off the polynomials.

Both keep their caches on the session object; the module level functions
use one default session per algorithm.
"""

import collections
import functools
import itertools
from typing import DefaultDict, Dict, Iterable, List, Optional, Tuple, Union

from glwf.errors import GLWFError, ParseError, SizeMismatchError

__all__ = [
    'Permutation', 'KLPolynomial', 'KazhdanLusztig', 'HeckeAlgebra',
    'identity', 'longest_element', 'all_permutations', 'parse_permutation', 'length', 'bruhat_leq',
    'kl_polynomial', 'kl_polynomial_via_products', 'kl_mu',
]

#: Laurent polynomial in ``v``: exponent to coefficient.
Laurent = Dict[int, int]

###############################################################################
# Typings


class Permutation(tuple):
    """Permutation of ``1 .. N`` in one-line notation.

    >>> str(Permutation([3, 1, 4, 2]).inverse())
    '2413'

    Raises:
        ParseError: if the values are not a permutation of ``1 .. N``

    """

    def __new__(cls, values: Iterable[int]) -> 'Permutation':
        items = tuple(values)
        if sorted(items) != list(range(1, len(items) + 1)):
            raise ParseError('%r is not a permutation of 1..%d' % (items, len(items)))
        return super().__new__(cls, items)  # type: ignore[arg-type]

    @property
    def size(self) -> int:
        """int: ``N``"""
        return len(self)

    def inverse(self) -> 'Permutation':
        result = [0] * len(self)
        for position, value in enumerate(self, start=1):
            result[value - 1] = position
        return Permutation(result)

    def __mul__(self, other: 'Permutation') -> 'Permutation':  # type: ignore[override]
        """Composition ``(self * other)(i) = self(other(i))``."""
        if len(self) != len(other):
            raise SizeMismatchError('cannot compose permutations of %d and %d' % (len(self), len(other)))
        return Permutation(self[value - 1] for value in other)

    def times_simple(self, i: int) -> 'Permutation':
        """Right multiplication by the simple transposition ``s_i``: swap positions ``i`` and ``i + 1``."""
        items = list(self)
        items[i - 1], items[i] = items[i], items[i - 1]
        return Permutation(items)

    def has_descent(self, i: int) -> bool:
        """Whether ``self * s_i < self``."""
        return self[i - 1] > self[i]

    def right_descents(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, len(self)) if self.has_descent(i))

    def __repr__(self) -> str:
        return 'Permutation(%r)' % str(self)

    def __str__(self) -> str:
        if len(self) <= 9:
            return ''.join(map(str, self))
        return ','.join(map(str, self))


class KLPolynomial(tuple):
    """Polynomial in ``q`` with integer coefficients, constant term first, no trailing zeros.

    >>> str(KLPolynomial([1, 2, 1]))
    '1+2q+q^2'

    """

    def __new__(cls, coefficients: Iterable[int] = ()) -> 'KLPolynomial':
        items = list(coefficients)
        while items and items[-1] == 0:
            items.pop()
        return super().__new__(cls, items)  # type: ignore[arg-type]

    @property
    def degree(self) -> int:
        """int: degree, ``-1`` for the zero polynomial"""
        return len(self) - 1

    def __call__(self, q: int) -> int:
        return sum(coefficient * q ** power for power, coefficient in enumerate(self))

    def __repr__(self) -> str:
        return 'KLPolynomial(%r)' % str(self)

    def __str__(self) -> str:
        terms = []  # type: List[str]
        for power, coefficient in enumerate(self):
            if coefficient == 0:
                continue
            monomial = '' if power == 0 else 'q' if power == 1 else 'q^%d' % power
            if power == 0 or abs(coefficient) != 1:
                text = '%d%s' % (abs(coefficient), monomial)
            else:
                text = monomial
            sign = '-' if coefficient < 0 else '+'
            terms.append(text if not terms and sign == '+' else sign + text)
        return ''.join(terms) or '0'


###############################################################################
# Symmetric group combinatorics


def identity(size: int) -> Permutation:
    return Permutation(range(1, size + 1))


def longest_element(size: int) -> Permutation:
    return Permutation(range(size, 0, -1))


def all_permutations(size: int) -> List[Permutation]:
    """All of :math:`S_N`, sorted by length then lexicographically."""
    return sorted((Permutation(items) for items in itertools.permutations(range(1, size + 1))),
                  key=lambda w: (length(w), w))


def parse_permutation(text: str) -> Permutation:
    """Parse ``3142`` or ``3,1,4,2``.

    Raises:
        ParseError: if the text is not a permutation

    """
    text = text.strip()
    try:
        values = [int(item) for item in (text.split(',') if ',' in text else text)]
    except ValueError as error:
        raise ParseError('invalid permutation %r' % text) from error
    return Permutation(values)


@functools.lru_cache(maxsize=None)
def length(w: Permutation) -> int:
    """Number of inversions."""
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


@functools.lru_cache(maxsize=None)
def _rank_matrix(w: Permutation) -> Tuple[int, ...]:
    """Entries ``#{a <= i : w(a) >= j}`` for ``1 <= i, j <= N``, row by row."""
    size = len(w)
    entries = []  # type: List[int]
    for i in range(1, size + 1):
        prefix = w[:i]
        entries.extend(sum(1 for value in prefix if value >= j) for j in range(1, size + 1))
    return tuple(entries)


def bruhat_leq(x: Permutation, w: Permutation) -> bool:
    """Bruhat order by the rank matrix criterion.

    Raises:
        SizeMismatchError: if ``x`` and ``w`` have different sizes

    """
    if len(x) != len(w):
        raise SizeMismatchError('cannot compare permutations of %d and %d' % (len(x), len(w)))
    return all(a <= b for a, b in zip(_rank_matrix(x), _rank_matrix(w)))


###############################################################################
# Classical recursion


def _shift_add(target: List[int], source: Iterable[int], power: int, factor: int = 1) -> None:
    """``target += factor * q^power * source`` in place."""
    for degree, coefficient in enumerate(source, start=power):
        if degree >= len(target):
            target.extend([0] * (degree - len(target) + 1))
        target[degree] += factor * coefficient


class KazhdanLusztig:
    """Session computing :math:`P_{x,w}` by the classical recursion.

    Results are cached under a representative of ``(x, w)`` modulo
    inversion and conjugation by the longest element, which leave the
    polynomial unchanged.
    """

    def __init__(self) -> None:
        self._cache = {}  # type: Dict[Tuple[Permutation, Permutation], Tuple[int, ...]]
        self._mu_lists = {}  # type: Dict[Permutation, List[Tuple[Permutation, int]]]
        self._lower = {}  # type: Dict[Permutation, List[Permutation]]

    @staticmethod
    def _canonical(x: Permutation, w: Permutation) -> Tuple[Permutation, Permutation]:
        top = longest_element(len(w))
        candidates = []
        for left, right in ((x, w), (x.inverse(), w.inverse())):
            candidates.append((left, right))
            candidates.append((top * left * top, top * right * top))
        return min(candidates)

    def polynomial(self, x: Permutation, w: Permutation) -> KLPolynomial:
        """:math:`P_{x,w}`, zero unless ``x <= w``.

        Raises:
            SizeMismatchError: if ``x`` and ``w`` have different sizes

        """
        if len(x) != len(w):
            raise SizeMismatchError('permutations of %d and %d' % (len(x), len(w)))
        return KLPolynomial(self._polynomial(x, w))

    def mu(self, x: Permutation, w: Permutation) -> int:
        """Coefficient of :math:`q^{(\\ell(w) - \\ell(x) - 1)/2}` in :math:`P_{x,w}` (zero unless defined)."""
        gap = length(w) - length(x)
        if gap <= 0 or gap % 2 == 0:
            return 0
        coefficients = self._polynomial(x, w)
        degree = (gap - 1) // 2
        return coefficients[degree] if degree < len(coefficients) else 0

    def _lower_interval(self, v: Permutation) -> List[Permutation]:
        if v not in self._lower:
            self._lower[v] = [z for z in all_permutations(len(v)) if z != v and bruhat_leq(z, v)]
        return self._lower[v]

    def _mu_list(self, v: Permutation) -> List[Tuple[Permutation, int]]:
        """Elements ``z < v`` with nonzero :math:`\\mu(z, v)`."""
        if v not in self._mu_lists:
            pairs = []
            for z in self._lower_interval(v):
                value = self.mu(z, v)
                if value:
                    pairs.append((z, value))
            self._mu_lists[v] = pairs
        return self._mu_lists[v]

    def _polynomial(self, x: Permutation, w: Permutation) -> Tuple[int, ...]:
        if x == w:
            return (1,)
        if not bruhat_leq(x, w):
            return ()
        key = self._canonical(x, w)
        if key in self._cache:
            return self._cache[key]

        i = w.right_descents()[0]
        v = w.times_simple(i)
        flip = x.times_simple(i)
        down = 1 if x.has_descent(i) else 0

        result = []  # type: List[int]
        _shift_add(result, self._polynomial(flip, v), 1 - down)
        _shift_add(result, self._polynomial(x, v), down)
        for z, value in self._mu_list(v):
            if z.has_descent(i) and bruhat_leq(x, z):
                _shift_add(result, self._polynomial(x, z), (length(w) - length(z)) // 2, -value)

        coefficients = tuple(KLPolynomial(result))
        self._cache[key] = coefficients
        return coefficients


###############################################################################
# Canonical basis by products


def _laurent_add(target: Laurent, source: Laurent, shift: int = 0, factor: int = 1) -> None:
    for exponent, coefficient in source.items():
        value = target.get(exponent + shift, 0) + factor * coefficient
        if value:
            target[exponent + shift] = value
        else:
            target.pop(exponent + shift, None)


class HeckeAlgebra:
    """Session computing canonical basis elements of the Hecke algebra of :math:`S_N`.

    Elements are dictionaries ``{x: Laurent}`` meaning :math:`\\sum_x a_x T_x`,
    with :math:`T_x T_s = T_{xs}` when ``xs > x`` and
    :math:`T_x T_s = (v^2 - 1) T_x + v^2 T_{xs}` otherwise.

    Args:
        size (int): ``N``

    """

    def __init__(self, size: int) -> None:
        self.size = size
        self._basis = {identity(size): {identity(size): {0: 1}}}  # type: Dict[Permutation, Dict[Permutation, Laurent]]

    def _times_generator(self, element: Dict[Permutation, Laurent], i: int) -> Dict[Permutation, Laurent]:
        """``element * C'_s`` with ``C'_s = v^{-1} (T_s + T_e)``."""
        product = collections.defaultdict(dict)  # type: DefaultDict[Permutation, Laurent]
        for x, coefficient in element.items():
            flip = x.times_simple(i)
            # element * T_e
            _laurent_add(product[x], coefficient, -1)
            # element * T_s
            if not x.has_descent(i):
                _laurent_add(product[flip], coefficient, -1)
            else:
                _laurent_add(product[x], coefficient, 1)
                _laurent_add(product[x], coefficient, -1, -1)
                _laurent_add(product[flip], coefficient, 1)
        return {x: coefficient for x, coefficient in product.items() if coefficient}

    def canonical_basis(self, w: Permutation) -> Dict[Permutation, Laurent]:
        """:math:`C'_w` in the standard basis.

        Raises:
            SizeMismatchError: if ``w`` is not in :math:`S_N`

        """
        if len(w) != self.size:
            raise SizeMismatchError('permutation of %d in the Hecke algebra of S_%d' % (len(w), self.size))
        if w in self._basis:
            return self._basis[w]

        i = w.right_descents()[0]
        v = w.times_simple(i)
        lower = self.canonical_basis(v)
        element = self._times_generator(lower, i)
        for z, coefficient in lower.items():
            if z == v or not z.has_descent(i):
                continue
            value = coefficient.get(-length(z) - 1, 0)
            if value:
                for x, term in self.canonical_basis(z).items():
                    target = element.setdefault(x, {})
                    _laurent_add(target, term, 0, -value)
        element = {x: coefficient for x, coefficient in element.items() if coefficient}
        self._basis[w] = element
        return element

    def polynomial(self, x: Permutation, w: Permutation) -> KLPolynomial:
        """:math:`P_{x,w}` read from the coefficient :math:`v^{-\\ell(w)} P_{x,w}(v^2)` of :math:`T_x`.

        Raises:
            SizeMismatchError: if ``x`` is not in :math:`S_N`

        """
        if len(x) != self.size:
            raise SizeMismatchError('permutation of %d in the Hecke algebra of S_%d' % (len(x), self.size))
        coefficient = self.canonical_basis(w).get(x, {})
        result = []  # type: List[int]
        for exponent, value in coefficient.items():
            power = exponent + length(w)
            if power < 0 or power % 2:
                raise GLWFError('canonical basis coefficient of %s in C_%s is not a polynomial in q' % (x, w))
            _shift_add(result, (value,), power // 2)
        return KLPolynomial(result)


###############################################################################
# Default sessions

#: Session used by :func:`kl_polynomial` and :func:`kl_mu`.
_default_session = KazhdanLusztig()
#: Hecke algebras used by :func:`kl_polynomial_via_products`, by ``N``.
_default_algebras = {}  # type: Dict[int, HeckeAlgebra]


def kl_polynomial(x: Union[Permutation, Iterable[int]], w: Union[Permutation, Iterable[int]],
                  session: Optional[KazhdanLusztig] = None) -> KLPolynomial:
    """:math:`P_{x,w}` by the classical recursion.

    >>> str(kl_polynomial(Permutation([1, 3, 2, 4]), Permutation([3, 4, 1, 2])))
    '1+q'

    """
    if session is None:
        session = _default_session
    return session.polynomial(Permutation(x), Permutation(w))


def kl_mu(x: Union[Permutation, Iterable[int]], w: Union[Permutation, Iterable[int]],
          session: Optional[KazhdanLusztig] = None) -> int:
    """:math:`\\mu(x, w)` by the classical recursion."""
    if session is None:
        session = _default_session
    return session.mu(Permutation(x), Permutation(w))


def kl_polynomial_via_products(x: Union[Permutation, Iterable[int]], w: Union[Permutation, Iterable[int]],
                               algebra: Optional[HeckeAlgebra] = None) -> KLPolynomial:
    """:math:`P_{x,w}` from the canonical basis of the Hecke algebra.

    Raises:
        SizeMismatchError: if ``x`` and ``w`` have different sizes

    """
    x, w = Permutation(x), Permutation(w)
    if len(x) != len(w):
        raise SizeMismatchError('permutations of %d and %d' % (len(x), len(w)))
    if algebra is None:
        algebra = _default_algebras.setdefault(len(w), HeckeAlgebra(len(w)))
    return algebra.polynomial(x, w)
