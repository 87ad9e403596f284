'''
K-subspaces of F
================

A `Subspace` is stored as a reduced row-echelon basis over K, in the
coordinates of `tower.kbasis`. Equal subspaces have equal bases, so
subspaces can be compared, hashed and used as dictionary keys.

Everything here enumerates elements outright. Fields in this package are
small (the default cap is 2^16 elements), and the counting arguments we
check need exact sets such as W^2 = {ab : a, b in W}, which is not a
subspace.

>>> import atomlab.gf
>>> tower = atomlab.gf.tower_make(2, 1, 3)
>>> W = span(tower, [1, 2])
>>> W.dim, W.size
(2, 4)
>>> sorted(set_product(W, W))
[0, 1, 2, 3, 4, 5, 6]
>>> product_space(W, W) == full(tower)
True
>>> coset_reps(W)
[0, 4]
'''

import dataclasses
import functools
import itertools

import atomlab.exceptions


def _same_tower(*spaces):
    towers = {id(space.tower) for space in spaces}
    if len(towers) > 1:
        raise atomlab.exceptions.CrossTowerError("Subspaces live in different towers")


def rref(tower, rows):
    '''
    Reduced row-echelon form over K of coordinate rows. Zero rows are
    dropped; pivots are leftmost.
    '''
    rows = [list(row) for row in rows]
    basis = []
    pivot_row = 0
    for column in range(tower.e):
        found = None
        for r in range(pivot_row, len(rows)):
            if rows[r][column] != 0:
                found = r
                break
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        scale = tower.inv(rows[pivot_row][column])
        rows[pivot_row] = [tower.mul(scale, c) for c in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][column] != 0:
                factor = rows[r][column]
                rows[r] = [tower.sub(a, tower.mul(factor, b)) for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    for row in rows[:pivot_row]:
        basis.append(tuple(row))
    return tuple(basis)


@dataclasses.dataclass(frozen=True)
class Subspace:
    '''
    A K-subspace of F. `basis` holds reduced row-echelon rows of K
    coordinates.
    '''
    tower: object
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    @property
    def size(self):
        return self.tower.k_order ** self.dim

    @functools.cached_property
    def vectors(self):
        '''
        The basis as field elements.
        '''
        return tuple(self.tower.from_coords(row) for row in self.basis)

    @functools.cached_property
    def elements(self):
        tower = self.tower
        return frozenset(
            tower.combine(coeffs, self.vectors)
            for coeffs in itertools.product(tower.k_elements, repeat=self.dim)
        )

    def __contains__(self, x):
        return x in self.elements

    def __repr__(self):
        shown = ", ".join(self.tower.format(v) for v in self.vectors)
        return f"Subspace<{shown}>"


def span(tower, generators):
    '''
    The smallest K-subspace containing `generators`.

    >>> import atomlab.gf
    >>> span(atomlab.gf.tower_make(2, 1, 3), []).dim
    0
    '''
    rows = [tower.coords(tower.check(g)) for g in generators]
    return Subspace(tower, rref(tower, rows))


def zero(tower):
    return Subspace(tower, ())


def full(tower):
    return span(tower, tower.kbasis)


def sum_spaces(tower, spaces):
    vectors = []
    for space in spaces:
        if space.tower is not tower:
            raise atomlab.exceptions.CrossTowerError("Subspace from another tower")
        vectors.extend(space.vectors)
    return span(tower, vectors)


def member(W, x):
    W.tower.check(x)
    return x in W.elements


def set_product(A, B):
    '''
    {a b : a in A, b in B}, generally not a subspace.
    '''
    _same_tower(A, B)
    mul = A.tower.mul
    return frozenset(mul(a, b) for a in A.elements for b in B.elements)


def product_space(A, B):
    '''
    K A B, the span of all products. Bilinearity means products of basis
    vectors suffice.
    '''
    _same_tower(A, B)
    tower = A.tower
    return span(tower, [tower.mul(a, b) for a in A.vectors for b in B.vectors])


def lines(W):
    '''
    One representative per one-dimensional K-subspace of W: the least
    nonzero element of each line, in increasing order.

    >>> import atomlab.gf
    >>> len(lines(full(atomlab.gf.tower_make(2, 2, 2))))
    5
    '''
    tower = W.tower
    units = [k for k in tower.k_elements if k != 0]
    seen = set()
    reps = []
    for x in sorted(W.elements):
        if x == 0 or x in seen:
            continue
        reps.append(x)
        seen.update(tower.mul(k, x) for k in units)
    return reps


def coset_reps(W):
    '''
    The least element of each coset of W in F, in increasing order.
    '''
    tower = W.tower
    seen = set()
    reps = []
    members = sorted(W.elements)
    for x in range(tower.order):
        if x in seen:
            continue
        reps.append(x)
        seen.update(tower.add(x, w) for w in members)
    return reps


def stabilizer(W):
    '''
    [W : W] = {x in F : x W in W}. It is F when W = 0, and an
    intermediate field of K <= F otherwise.
    '''
    tower = W.tower
    elements = W.elements
    vectors = W.vectors
    keep = [
        x for x in range(tower.order)
        if all(tower.mul(x, v) in elements for v in vectors)
    ]
    return span(tower, keep)


def is_subspace(tower, elements):
    '''
    True when the set contains 0 and is closed under addition and
    K-scaling.
    '''
    elements = frozenset(elements)
    if 0 not in elements:
        return False
    for x in elements:
        if any(tower.mul(k, x) not in elements for k in tower.k_elements):
            return False
        if any(tower.add(x, y) not in elements for y in elements):
            return False
    return True


def complement(big, small):
    '''
    Vectors of `big` whose classes form a basis of big / small. Assumes
    small is contained in big.
    '''
    _same_tower(big, small)
    tower = big.tower
    chosen = []
    current = small
    for v in big.vectors:
        if v not in current.elements:
            chosen.append(v)
            current = span(tower, list(current.vectors) + [v])
    return chosen


def intermediate_field(tower, k):
    '''
    The subfield L of F with [L:K] = k, as a K-subspace.

    >>> import atomlab.gf
    >>> intermediate_field(atomlab.gf.tower_make(2, 1, 4), 2).size
    4
    '''
    if k < 1 or tower.e % k != 0:
        raise ValueError(f"No intermediate field of degree {k} over K in {tower!r}")
    size = tower.k_order ** k
    members = [x for x in range(tower.order) if tower.pow(x, size) == x]
    return span(tower, members)


def subspaces(tower, dim=None):
    '''
    All K-subspaces of F (or those of dimension `dim`), generated
    directly in reduced row-echelon form: choose pivot columns, then
    fill every free entry to the right of each pivot that is not itself
    a pivot column.

    >>> import atomlab.gf
    >>> tower = atomlab.gf.tower_make(2, 1, 3)
    >>> [sum(1 for _ in subspaces(tower, k)) for k in range(4)]
    [1, 7, 7, 1]
    '''
    dims = range(tower.e + 1) if dim is None else [dim]
    for k in dims:
        for pivots in itertools.combinations(range(tower.e), k):
            free = [
                (r, c) for r, pivot in enumerate(pivots)
                for c in range(pivot + 1, tower.e) if c not in pivots
            ]
            for values in itertools.product(tower.k_elements, repeat=len(free)):
                rows = [[0] * tower.e for _ in pivots]
                for r, pivot in enumerate(pivots):
                    rows[r][pivot] = 1
                for (r, c), value in zip(free, values):
                    rows[r][c] = value
                yield Subspace(tower, tuple(tuple(row) for row in rows))
