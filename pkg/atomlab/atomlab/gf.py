'''
Finite field towers
===================

A `FieldTower` is a pair K <= F of finite fields, K = GF(p^m) and
F = GF(p^(m e)), with exact arithmetic and a fixed K-basis of F.

Elements are plain integers: the integer code of an element is its
coefficient vector over GF(p) read as a base-p number, which is also how
`galois` represents field elements. So in GF(8) = GF(2)[t]/(t^3+t+1),
code 2 is t and code 3 is 1+t.

Fields are built by `galois`. We only precompute exp/log (and, for odd
characteristic, addition) tables so the inner loops of the enumeration
code do list lookups rather than array operations.

>>> tower = tower_make(2, 1, 3)
>>> tower.format(tower.mul(2, 4))
'1+y'
>>> tower.k_elements
(0, 1)
'''

import functools
import itertools

import galois
import numpy as np

import atomlab.exceptions
import atomlab.settings

from atomlab.log_event import debug_log

# Fields at most this large get a full addition table in odd
# characteristic; larger ones fall back to `galois` for addition.
ADD_TABLE_MAX = 1024


def least_irreducible(p, d):
    '''
    The monic irreducible polynomial of degree `d` over GF(p) with the
    least integer code (highest-degree coefficient most significant).

    >>> least_irreducible(2, 3)
    Poly(x^3 + x + 1, GF(2))
    >>> least_irreducible(3, 2)
    Poly(x^2 + 1, GF(3))
    >>> least_irreducible(2, 1)
    Poly(x, GF(2))
    '''
    prime_field = galois.GF(p)
    for code in range(p ** d, 2 * p ** d):
        poly = galois.Poly.Int(code, field=prime_field)
        if poly.is_irreducible():
            return poly
    raise atomlab.exceptions.InternalInconsistency(
        "no irreducible polynomial found", "least_irreducible", {'p': p, 'd': d}
    )


@functools.lru_cache(maxsize=None)
def _build_field(p, d):
    modulus = least_irreducible(p, d)
    if d == 1:
        return galois.GF(p)
    return galois.GF(p ** d, irreducible_poly=modulus)


def field_make(p, d):
    '''
    GF(p^d), defined by `least_irreducible(p, d)`.

    Raises `ValueError` for a non-prime `p` or `d < 1`, and
    `CapExceeded` when p^d is over `field_size_cap`.
    '''
    if not isinstance(p, int) or not galois.is_prime(p):
        raise ValueError(f"Characteristic must be prime, got {p}")
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"Degree must be a positive integer, got {d}")
    cap = atomlab.settings.limit('field_size_cap')
    if p ** d > cap:
        raise atomlab.exceptions.CapExceeded('field_size_cap', p ** d, cap)
    return _build_field(p, d)


def tower_make(p, m, e):
    '''
    The tower GF(p^m) <= GF(p^(m e)). Equal parameters give the same
    object, so towers can be compared with `is`.
    '''
    if not isinstance(m, int) or not isinstance(e, int) or m < 1 or e < 1:
        raise ValueError(f"Tower degrees must be positive integers, got m={m}, e={e}")
    field_make(p, m * e)
    return _tower(p, m, e)


@functools.lru_cache(maxsize=None)
def _tower(p, m, e):
    return FieldTower(p, m, e)


class FieldTower:
    '''
    K = GF(p^m) inside F = GF(p^(m e)).

    Attributes:
        p, m, e -- characteristic, degree of K, degree of F over K
        order -- |F|
        k_order -- |K|
        field -- the `galois` field class of F
        modulus -- the defining polynomial of F over GF(p)
        k_elements -- the elements of K, sorted by code
        generator -- g with kbasis = (1, g, ..., g^(e-1))
        kbasis -- K-basis of F
        y -- the class of the polynomial variable (code p), or 0 when F
             is a prime field
    '''

    def __init__(self, p, m, e):
        self.p = p
        self.m = m
        self.e = e
        self.d = m * e
        self.order = p ** self.d
        self.k_order = p ** m
        self.field = field_make(p, self.d)
        self.modulus = least_irreducible(p, self.d)
        self.y = p if self.d > 1 else 0
        debug_log("Building tower", self)
        self._build_tables()
        self.k_elements = tuple(x for x in range(self.order) if self.frobenius(x, m) == x)
        if len(self.k_elements) != self.k_order:
            raise atomlab.exceptions.InternalInconsistency(
                "fixed field of Frobenius has the wrong size", "FieldTower",
                {'p': p, 'm': m, 'e': e, 'size': len(self.k_elements)}
            )
        self._k_set = frozenset(self.k_elements)
        self.generator = self._find_generator()
        self.kbasis = tuple(self.pow(self.generator, i) for i in range(e))
        self._build_coordinates()

    def __repr__(self):
        return f"FieldTower(p={self.p}, m={self.m}, e={self.e})"

    def _build_tables(self):
        q = self.order
        elements = self.field.elements
        alpha = self.field.primitive_element
        exp = np.asarray(alpha ** np.arange(q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        # Doubled so a product never needs a modulo.
        self._exp = exp.tolist() * 2
        self._log = log.tolist()
        self._neg = np.asarray(-elements, dtype=np.int64).tolist()
        if self.p == 2:
            self._add = None
        elif q <= ADD_TABLE_MAX:
            table = elements[:, np.newaxis] + elements[np.newaxis, :]
            self._add = np.asarray(table, dtype=np.int64).ravel().tolist()
        else:
            self._add = None

    def _find_generator(self):
        if self.e == 1:
            return 1
        for candidate in range(2, self.order):
            powers = [self.pow(candidate, i) for i in range(self.e)]
            if len(self._combinations(powers)) == self.order:
                return candidate
        raise atomlab.exceptions.InternalInconsistency(
            "no generator of F over K", "FieldTower._find_generator", {'tower': repr(self)}
        )

    def _combinations(self, vectors):
        '''
        Every K-linear combination of `vectors`, as a dict from element
        to its coefficient tuple.
        '''
        combos = {}
        for coeffs in itertools.product(self.k_elements, repeat=len(vectors)):
            total = 0
            for c, v in zip(coeffs, vectors):
                total = self.add(total, self.mul(c, v))
            combos.setdefault(total, coeffs)
        return combos

    def _build_coordinates(self):
        combos = self._combinations(self.kbasis)
        self._coords = [None] * self.order
        for element, coeffs in combos.items():
            self._coords[element] = coeffs
        self._from_coords = {coeffs: element for element, coeffs in combos.items()}

    # Arithmetic. These sit in every inner loop, so they are kept short.

    def check(self, x):
        if not isinstance(x, (int, np.integer)) or not 0 <= x < self.order:
            raise atomlab.exceptions.CrossTowerError(f"{x!r} is not an element of {self!r}")
        return int(x)

    def add(self, x, y):
        if self._add is not None:
            return self._add[x * self.order + y]
        if self.p == 2:
            return x ^ y
        return int(self.field(x) + self.field(y))

    def neg(self, x):
        return self._neg[x]

    def sub(self, x, y):
        return self.add(x, self._neg[y])

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def inv(self, x):
        self.check(x)
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._exp[(self.order - 1 - self._log[x]) % (self.order - 1)]

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, k):
        '''
        >>> tower_make(2, 1, 3).pow(2, 7)
        1
        '''
        self.check(x)
        if x == 0:
            if k < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 1 if k == 0 else 0
        return self._exp[(self._log[x] * k) % (self.order - 1)]

    def frobenius(self, x, j=1):
        '''
        x -> x^(p^j)
        '''
        return self.pow(x, self.p ** j)

    def in_subfield_K(self, x):
        return self.frobenius(self.check(x), self.m) == x

    def sum(self, values):
        return functools.reduce(self.add, values, 0)

    # Coordinates over K

    def coords(self, x):
        '''
        Coordinates of x in `kbasis`, as a tuple of K elements.

        >>> tower = tower_make(2, 1, 3)
        >>> tower.coords(tower.add(1, tower.mul(2, 2)))
        (1, 0, 1)
        '''
        return self._coords[self.check(x)]

    def from_coords(self, coeffs):
        return self._from_coords[tuple(coeffs)]

    def combine(self, coeffs, vectors):
        '''
        The K-combination sum(c_i v_i).
        '''
        total = 0
        for c, v in zip(coeffs, vectors):
            total = self.add(total, self.mul(c, v))
        return total

    # Polynomials in y

    def digits(self, x):
        '''
        Coefficients over GF(p) of the code `x`, lowest degree first.
        '''
        x = self.check(x)
        out = []
        for _ in range(self.d):
            out.append(x % self.p)
            x //= self.p
        return out

    def format(self, x):
        '''
        Render an element as a polynomial in y.

        >>> tower = tower_make(3, 1, 3)
        >>> tower.format(0), tower.format(1), tower.format(3 + 2 * 9)
        ('0', '1', 'y+2y^2')
        '''
        terms = []
        for power, c in enumerate(self.digits(x)):
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
                continue
            monomial = "y" if power == 1 else f"y^{power}"
            terms.append(monomial if c == 1 else f"{c}{monomial}")
        return "+".join(terms) if terms else "0"

    def evaluate(self, terms):
        '''
        Evaluate sum(c y^k) for a list of (c, k) integer pairs. The
        coefficients are reduced mod p; y is the class of the variable,
        so y^d and beyond reduce through the modulus.

        >>> tower = tower_make(2, 1, 3)
        >>> tower.format(tower.evaluate([(1, 3)]))
        '1+y'
        '''
        total = 0
        for c, k in terms:
            total = self.add(total, self.mul(c % self.p, self.pow(self.y, k)))
        return total

    # Polynomials over K, coefficient lists lowest degree first

    def poly_eval(self, coeffs, x):
        total = 0
        for c in reversed(coeffs):
            total = self.add(self.mul(total, x), c)
        return total

    def poly_roots(self, coeffs):
        return [x for x in range(self.order) if self.poly_eval(coeffs, x) == 0]


def _monic_polys(tower, degree):
    '''
    Monic polynomials of the given degree over K, in increasing integer
    code order (higher coefficients most significant).
    '''
    for high_to_low in itertools.product(tower.k_elements, repeat=degree):
        yield list(reversed(high_to_low)) + [1]


def _poly_mod(tower, a, b):
    '''
    Remainder of a by monic b, coefficient lists lowest degree first.
    '''
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        lead = a[-1]
        if lead != 0:
            shift = len(a) - 1 - db
            for i, c in enumerate(b):
                a[shift + i] = tower.sub(a[shift + i], tower.mul(lead, c))
        a.pop()
    return a


def is_irreducible_over_k(tower, coeffs):
    '''
    Trial division by monic polynomials over K of degree up to half.
    '''
    degree = len(coeffs) - 1
    for factor_degree in range(1, degree // 2 + 1):
        for factor in _monic_polys(tower, factor_degree):
            if not any(_poly_mod(tower, coeffs, factor)):
                return False
    return True


def irreducible_over_k(tower, degree):
    '''
    The monic irreducible polynomial of `degree` over K with the least
    integer code, lowest coefficient first.

    >>> irreducible_over_k(tower_make(2, 1, 3), 2)
    [1, 1, 1]
    >>> irreducible_over_k(tower_make(2, 1, 4), 3)
    [1, 1, 0, 1]
    '''
    if degree < 1:
        raise ValueError("degree must be positive")
    for coeffs in _monic_polys(tower, degree):
        if is_irreducible_over_k(tower, coeffs):
            return coeffs
    raise atomlab.exceptions.InternalInconsistency(
        "no irreducible polynomial over K", "irreducible_over_k",
        {'tower': repr(tower), 'degree': degree}
    )
