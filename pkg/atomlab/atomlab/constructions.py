'''
Named rings and closed-form counts
==================================

Builders for the ring shapes that come with known atom counts, and the
counts themselves. `expected_counts` recognizes a spec's shape and
returns what the formulas predict, so the property suite and the sweeps
can compare them with enumeration.

All builders return validated `RingSpec`s.
'''

import atomlab.gf
import atomlab.linalg
import atomlab.ring


def corrected(p, m, e, n):
    '''
    K + F[[X]] X^n, with K = GF(p^m) and [F:K] = e.

    >>> corrected(2, 1, 2, 1).n
    1
    '''
    tower = atomlab.gf.tower_make(p, m, e)
    return atomlab.ring.spec_validate(tower, n, [atomlab.linalg.zero(tower)] * (n - 1))


def two_step(p, m, e, w_generators):
    '''
    K + W X + F[[X]] X^2, W spanned by the given element codes.
    '''
    tower = atomlab.gf.tower_make(p, m, e)
    return atomlab.ring.spec_validate(tower, 2, [atomlab.linalg.span(tower, w_generators)])


def intermediate_field(p, m, k, l):
    '''
    K + L X + F[[X]] X^2 with [L:K] = k and [F:L] = l.
    '''
    tower = atomlab.gf.tower_make(p, m, k * l)
    return atomlab.ring.spec_validate(tower, 2, [atomlab.linalg.intermediate_field(tower, k)])


def cubic_root(tower):
    '''
    The least root in F of the least monic irreducible cubic over K.
    '''
    cubic = atomlab.gf.irreducible_over_k(tower, 3)
    return min(tower.poly_roots(cubic))


def atoms_in_m2(p, m):
    '''
    K + W X + F[[X]] X^2 with [F:K] = 3 and W = span{1, y}, y a root of
    an irreducible cubic over K. This ring has atoms in M^2.
    '''
    tower = atomlab.gf.tower_make(p, m, 3)
    return atomlab.ring.spec_validate(tower, 2, [atomlab.linalg.span(tower, [1, cubic_root(tower)])])


def eight_atoms():
    '''
    GF(2) + span{1, y} X + GF(8)[[X]] X^2: eight atoms, two of them in
    M^2.
    '''
    return atoms_in_m2(2, 1)


def conductor_atom(p, m, n):
    '''
    The ring with [F:K] = n + 1 and V_i = span{1, g, ..., g^i}, together
    with its designated atom f_n(g) X^n, f_n the least monic irreducible
    polynomial of degree n over K. The atom lies in M^n and M^(2n) is the
    least universal power.

    >>> spec, f = conductor_atom(2, 1, 2)
    >>> f.format()
    '(1+y+y^2)X^2'
    '''
    tower = atomlab.gf.tower_make(p, m, n + 1)
    g = tower.generator
    V = [atomlab.linalg.span(tower, [tower.pow(g, t) for t in range(i + 1)]) for i in range(1, n)]
    spec = atomlab.ring.spec_validate(tower, n, V)
    value = tower.poly_eval(atomlab.gf.irreducible_over_k(tower, n), g)
    return spec, atomlab.ring.monomial(spec, value, n)


def w_squared_size(q):
    '''
    |W^2| for W = span{1, y} in GF(q^3) over GF(q).

    >>> [w_squared_size(q) for q in (2, 3, 4, 5)]
    [7, 21, 46, 85]
    '''
    return (q ** 3 + 2 * q ** 2 - q) // 2


def binary_hypersurface_bound(order):
    '''
    Least number of atoms of a non-DVR with residue field GF(2),
    dim M/M^2 = 2 and the given multiplicity.
    '''
    return 2 ** (order - 1) + 1


def _lines(size, k_order):
    return (size - 1) // (k_order - 1)


def _shape(spec):
    full = spec.tower.e
    if all(v.dim == full for v in spec.V):
        return 'dvr_like'
    if all(v.dim == 0 for v in spec.V):
        return 'conductor'
    if spec.n == 2:
        return 'two_step'
    return None


def expected_counts(spec):
    '''
    Closed-form atom counts and |V| for recognized shapes, or None.

    The result has `shape`, `total`, `in_m2` and `v_order`.

    >>> expected_counts(eight_atoms())['total']
    8
    '''
    tower = spec.tower
    q, big = tower.k_order, tower.order
    shape = _shape(spec)
    if shape == 'dvr_like':
        count = _lines(big, q)
        return {'shape': 'K + F[[X]]X', 'total': count, 'in_m2': 0, 'v_order': count}
    if shape == 'conductor':
        n = spec.n
        return {
            'shape': 'K + F[[X]]X^n',
            'total': n * _lines(big, q) * big ** (n - 1),
            'in_m2': 0,
            'v_order': _lines(big, q) * big ** (n - 1),
        }
    if shape != 'two_step':
        return None
    W = spec.V[0]
    square = atomlab.linalg.set_product(W, W)
    span_square = atomlab.linalg.product_space(W, W)
    stabilizer = atomlab.linalg.stabilizer(W)
    cosets = big // W.size
    outside = (big - len(square)) // (q - 1)
    in_span = (span_square.size - len(square)) // (q - 1)
    if stabilizer == W:
        shape = 'K + LX + F[[X]]X^2'
    else:
        shape = 'K + WX + F[[X]]X^2'
    return {
        'shape': shape,
        'total': (_lines(W.size, q) + outside) * cosets,
        'in_m2': in_span * cosets,
        'v_order': _lines(stabilizer.size, q) * cosets,
    }
