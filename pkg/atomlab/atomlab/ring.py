'''
Graded power-series rings
=========================

R = K + V_1 X + ... + V_{n-1} X^{n-1} + F[[X]] X^n, with V_0 = K and
V_j = F for j >= n.

Elements are truncated at T = 3n coefficients. That is enough for
everything the package asks of them:

* an element of order d >= 2n is X^n (x / X^n), a product of two
  nonunits, so atoms have order at most 2n - 1;
* an element of order d is associate to its *window*, the n
  coefficients c_d, ..., c_{d+n-1}: the correcting factor lies in
  1 + F[[X]] X^n, which consists of units of R;
* deciding whether a divides x, for windows, needs quotient
  coefficients up to index n - 1 only, i.e. dividend coefficients up to
  ord(a) + n - 1 <= 3n - 2.

Associate classes are therefore classes of windows under the unit
windows u = (k, k w_1, ..., k w_{n-1}), k in K*, w_j in V_j, acting by
truncated multiplication. The action is free (u w = w forces u = 1 since
w_0 != 0), so each class has exactly as many windows as there are unit
windows. The canonical representative of a class is its least window,
comparing coefficients left to right by integer code.

>>> import atomlab.gf, atomlab.linalg
>>> tower = atomlab.gf.tower_make(2, 1, 3)
>>> spec = spec_validate(tower, 2, [atomlab.linalg.span(tower, [1, 2])])
>>> len(class_enumerate(spec, 1))
6
>>> divide(monomial(spec, 7, 2), monomial(spec, 1, 1)) is None
True
'''

import dataclasses
import functools
import itertools
import math

import atomlab.exceptions
import atomlab.linalg

from atomlab.log_event import debug_log

# Stored coefficients per conductor exponent.
TRUNCATION_FACTOR = 3

# Order of an element whose stored coefficients all vanish.
BEYOND_TRUNCATION = math.inf


@dataclasses.dataclass(frozen=True)
class RingSpec:
    '''
    Validated description of R. Build with `spec_validate`.
    '''
    tower: object
    n: int
    V: tuple

    @property
    def T(self):
        return TRUNCATION_FACTOR * self.n

    @functools.cached_property
    def k_space(self):
        return atomlab.linalg.span(self.tower, [1])

    @functools.cached_property
    def f_space(self):
        return atomlab.linalg.full(self.tower)

    @functools.cached_property
    def _allowed(self):
        return {}

    def subspace(self, j):
        '''
        The coefficient space at X^j: K for j = 0, V_j for 0 < j < n, F
        beyond.
        '''
        if j <= 0:
            return self.k_space
        if j < self.n:
            return self.V[j - 1]
        return self.f_space

    def allowed(self, j):
        '''
        Sorted elements of `subspace(j)`.
        '''
        key = min(max(j, 0), self.n)
        if key not in self._allowed:
            self._allowed[key] = tuple(sorted(self.subspace(key).elements))
        return self._allowed[key]

    def __repr__(self):
        spaces = ", ".join(repr(v) for v in self.V)
        return f"RingSpec({self.tower!r}, n={self.n}, V=[{spaces}])"


def spec_validate(tower, n, V):
    '''
    Check V_i V_j in V_{i+j} for i + j <= n - 1 and build the spec.

    Raises `SpecError` for a list of the wrong length and
    `ClosureViolation` listing every failing (i, j), i <= j.
    '''
    if not isinstance(n, int) or n < 1:
        raise atomlab.exceptions.SpecError(f"Conductor exponent n must be a positive integer, got {n}")
    V = tuple(V)
    if len(V) != n - 1:
        raise atomlab.exceptions.SpecError(f"Expected {n - 1} subspaces V_1..V_{n - 1}, got {len(V)}")
    for space in V:
        if not isinstance(space, atomlab.linalg.Subspace) or space.tower is not tower:
            raise atomlab.exceptions.CrossTowerError("V_i must be subspaces of the spec's tower")
        if any(tower.mul(k, v) not in space.elements for k in tower.k_elements for v in space.vectors):
            raise atomlab.exceptions.InternalInconsistency(
                "subspace not closed under K", "spec_validate", {'space': repr(space)}
            )
    pairs = []
    for i in range(1, n):
        for j in range(i, n - i):
            target = V[i + j - 1].elements
            products = (tower.mul(a, b) for a in V[i - 1].vectors for b in V[j - 1].vectors)
            if any(x not in target for x in products):
                pairs.append((i, j))
    if pairs:
        raise atomlab.exceptions.ClosureViolation(pairs)
    return RingSpec(tower, n, V)


@dataclasses.dataclass(frozen=True, order=True)
class NormalForm:
    '''
    An associate class of nonzero elements: the order d and the window
    (c_d, ..., c_{d+n-1}), c_d != 0.
    '''
    order: int
    window: tuple
    canonical: bool = dataclasses.field(default=False, compare=False)


@dataclasses.dataclass(frozen=True)
class RingElem:
    '''
    c_0 + c_1 X + ... + c_{T-1} X^{T-1}, standing for every element of
    R that agrees with it below X^T.
    '''
    spec: RingSpec
    coeffs: tuple

    def __post_init__(self):
        spec = self.spec
        if len(self.coeffs) != spec.T:
            raise ValueError(f"Expected {spec.T} coefficients, got {len(self.coeffs)}")
        for j, c in enumerate(self.coeffs):
            spec.tower.check(c)
            if j < spec.n and c not in spec.subspace(j).elements:
                raise atomlab.exceptions.NotInRing(
                    f"coefficient of X^{j} is {spec.tower.format(c)}, outside V_{j}"
                )

    def format(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            coefficient = self.spec.tower.format(c)
            if j == 0:
                terms.append(coefficient)
                continue
            if "+" in coefficient:
                coefficient = f"({coefficient})"
            power = "X" if j == 1 else f"X^{j}"
            terms.append(power if coefficient == "1" else f"{coefficient}{power}")
        return " + ".join(terms) if terms else "0"


def element(spec, coeffs):
    '''
    A ring element from leading coefficients; the rest are zero.
    '''
    coeffs = tuple(coeffs)
    if len(coeffs) > spec.T:
        raise ValueError(f"At most {spec.T} coefficients are stored")
    return RingElem(spec, coeffs + (0,) * (spec.T - len(coeffs)))


def monomial(spec, c, j):
    '''
    c X^j
    '''
    coeffs = [0] * spec.T
    if j < spec.T:
        coeffs[j] = c
    return RingElem(spec, tuple(coeffs))


def order(x):
    '''
    Least j with c_j != 0, or `BEYOND_TRUNCATION`.
    '''
    for j, c in enumerate(x.coeffs):
        if c != 0:
            return j
    return BEYOND_TRUNCATION


def is_unit(x):
    return x.coeffs[0] != 0


def _same_spec(x, y):
    if x.spec != y.spec:
        raise atomlab.exceptions.CrossTowerError("Operands belong to different rings")


def add(x, y):
    _same_spec(x, y)
    tower = x.spec.tower
    return RingElem(x.spec, tuple(tower.add(a, b) for a, b in zip(x.coeffs, y.coeffs)))


def mul(x, y):
    '''
    Truncated convolution.
    '''
    _same_spec(x, y)
    tower = x.spec.tower
    T = x.spec.T
    out = [0] * T
    for i, a in enumerate(x.coeffs):
        if a == 0:
            continue
        for j in range(T - i):
            b = y.coeffs[j]
            if b:
                out[i + j] = tower.add(out[i + j], tower.mul(a, b))
    return RingElem(x.spec, tuple(out))


def window_of(x):
    '''
    The normal form (not canonicalized) of a ring element or the normal
    form itself.
    '''
    if isinstance(x, NormalForm):
        return x
    d = order(x)
    if d is BEYOND_TRUNCATION:
        raise ValueError("The zero element has no window")
    n = x.spec.n
    if d + n > x.spec.T:
        raise ValueError(f"Order {d} is too large for a window at truncation {x.spec.T}")
    return NormalForm(d, tuple(x.coeffs[d:d + n]))


def lift(spec, nf):
    '''
    The element whose coefficients are the window, placed at its order.
    '''
    coeffs = [0] * spec.T
    for i, c in enumerate(nf.window):
        if nf.order + i < spec.T:
            coeffs[nf.order + i] = c
    return RingElem(spec, tuple(coeffs))


def window_mul(tower, u, w):
    '''
    Product of two windows, truncated to their common length.
    '''
    n = len(w)
    add, times = tower.add, tower.mul
    out = []
    for i in range(n):
        acc = 0
        for t in range(i + 1):
            if u[t] and w[i - t]:
                acc = add(acc, times(u[t], w[i - t]))
        out.append(acc)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def unit_windows(spec):
    '''
    Windows of units of R modulo X^n: k in K*, then V_1, ..., V_{n-1}.
    '''
    lists = [tuple(k for k in spec.allowed(0) if k != 0)]
    lists += [spec.allowed(j) for j in range(1, spec.n)]
    return tuple(itertools.product(*lists))


def unit_count(spec):
    count = spec.tower.k_order - 1
    for space in spec.V:
        count *= space.size
    return count


def window_space(spec, d):
    '''
    All windows of order d, in increasing order.
    '''
    lists = [tuple(x for x in spec.allowed(d) if x != 0)]
    lists += [spec.allowed(d + i) for i in range(1, spec.n)]
    return itertools.product(*lists)


def window_count(spec, d):
    count = spec.subspace(d).size - 1
    for i in range(1, spec.n):
        count *= spec.subspace(d + i).size
    return count


@functools.lru_cache(maxsize=None)
def class_enumerate(spec, d):
    '''
    Canonical forms of every associate class of order d, 1 <= d <= 2n-1.

    Windows are walked in increasing order; the first window of each
    orbit is its least element, hence canonical, and its whole orbit is
    marked.
    '''
    if not 1 <= d <= 2 * spec.n - 1:
        raise ValueError(f"Order must lie in 1..{2 * spec.n - 1}, got {d}")
    tower = spec.tower
    units = unit_windows(spec)
    seen = set()
    classes = []
    for w in window_space(spec, d):
        if w in seen:
            continue
        classes.append(NormalForm(d, w, True))
        for u in units:
            seen.add(window_mul(tower, u, w))
    expected = window_count(spec, d) // len(units)
    if len(classes) != expected:
        raise atomlab.exceptions.InternalInconsistency(
            "unit action on windows is not free", "class_enumerate",
            {'spec': repr(spec), 'order': d, 'classes': len(classes), 'expected': expected}
        )
    debug_log("order", d, "classes", len(classes))
    return tuple(classes)


def canonicalize(x):
    '''
    The least window in the unit orbit of a nonzero ring element.
    '''
    return canonical_form(x.spec, window_of(x))


def canonical_form(spec, nf):
    '''
    `canonicalize` for a normal form.
    '''
    if nf.canonical:
        return nf
    tower = spec.tower
    best = min(window_mul(tower, u, nf.window) for u in unit_windows(spec))
    return NormalForm(nf.order, best, True)


def associates(x, y):
    _same_spec(x, y)
    return canonicalize(x) == canonicalize(y)


def window_quotient(tower, x, a):
    '''
    Coefficients q_s, ..., q_{s+n-1} of x / a where s = ord x - ord a,
    for normal forms x and a with windows of equal length n.
    '''
    n = len(a.window)
    lead = tower.inv(a.window[0])
    q = []
    for j in range(n):
        acc = x.window[j]
        for i in range(1, j + 1):
            if a.window[i] and q[j - i]:
                acc = tower.sub(acc, tower.mul(a.window[i], q[j - i]))
        q.append(tower.mul(acc, lead))
    return q


def divides_with(spec, x, a, space_at):
    '''
    Quotient window of x / a when every coefficient q_t with t < n lies
    in `space_at(t)`, else None.
    '''
    if a.order > x.order:
        return None
    s = x.order - a.order
    q = window_quotient(spec.tower, x, a)
    for j, c in enumerate(q):
        t = s + j
        if t >= spec.n:
            break
        if c not in space_at(t).elements:
            return None
    return NormalForm(s, tuple(q))


def divide(x, a):
    '''
    Does a divide x in R? Returns the quotient's normal form (not
    canonical) or None. Both arguments are ring elements.
    '''
    _same_spec(x, a)
    d = order(a)
    if d is BEYOND_TRUNCATION:
        raise ValueError("Division by zero")
    spec = x.spec
    if d > spec.T - spec.n:
        raise ValueError(f"Divisor order {d} exceeds {spec.T - spec.n}")
    D = order(x)
    if D is BEYOND_TRUNCATION:
        return NormalForm(D, (0,) * spec.n)
    # Coefficients past T only feed quotient terms at X^n and beyond.
    padded = x.coeffs[D:D + spec.n] + (0,) * max(0, D + spec.n - spec.T)
    return divides_with(spec, NormalForm(D, padded), window_of(a), spec.subspace)


def exact_quotient(x, a):
    '''
    The series quotient x / a, truncated to T coefficients. The result
    must lie in R; otherwise `NotInRing` is raised.
    '''
    _same_spec(x, a)
    spec = x.spec
    tower = spec.tower
    d, D = order(a), order(x)
    if d is BEYOND_TRUNCATION:
        raise ValueError("Division by zero")
    if D is BEYOND_TRUNCATION:
        return element(spec, [])
    if d > D:
        raise atomlab.exceptions.NotInRing("quotient has negative order")
    s = D - d
    lead = tower.inv(a.coeffs[d])
    q = [0] * spec.T
    for j in range(spec.T - D):
        acc = x.coeffs[D + j]
        for i in range(1, j + 1):
            if d + i < spec.T:
                acc = tower.sub(acc, tower.mul(a.coeffs[d + i], q[s + j - i]))
        q[s + j] = tower.mul(acc, lead)
    return RingElem(spec, tuple(q))
