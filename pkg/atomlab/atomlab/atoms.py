'''
Atoms
=====

An atom is a nonzero nonunit x such that x = ab forces a or b to be a
unit. Every atom of R has order at most 2n - 1 (anything of order 2n or
more is X^n times a nonunit), so the atoms up to associates are found by
walking the canonical classes of orders 1 through 2n - 1 and discarding
those with a proper divisor.

Divisibility only depends on associate classes, so candidate divisors
are canonical classes of smaller order. Any such divisor leaves a
quotient of positive order, i.e. a nonunit.

`brute_force_atoms` computes the same inventory from the definition
alone: it multiplies pairs of nonunit windows and keeps what is never
hit. It shares no divisibility code with `is_atom` and serves as a
test oracle.

>>> import atomlab.constructions
>>> enumerate_atoms(atomlab.constructions.eight_atoms()).layer_counts
{1: 6, 2: 2}
'''

import dataclasses
import functools
import itertools

import atomlab.exceptions
import atomlab.ring
import atomlab.settings
# Fully qualified: `structure` imports this module as well.
import atomlab.structure

from atomlab.log_event import debug_log


@dataclasses.dataclass
class AtomInventory:
    '''
    The atoms of a ring up to associates.

    `by_order` maps each order d to the canonical forms of the atom
    classes of that order, in increasing order. `layer_of` maps each
    atom to the k with the atom in M^k minus M^(k+1).
    '''
    spec: atomlab.ring.RingSpec
    by_order: dict = dataclasses.field(default_factory=dict)
    layer_of: dict = dataclasses.field(default_factory=dict)

    @property
    def atoms(self):
        return [nf for d in sorted(self.by_order) for nf in self.by_order[d]]

    @property
    def total(self):
        return sum(len(forms) for forms in self.by_order.values())

    @property
    def layers(self):
        '''
        Atoms grouped by layer, in increasing order within each layer.
        '''
        grouped = {}
        for nf in self.atoms:
            grouped.setdefault(self.layer_of[nf], []).append(nf)
        return {k: tuple(grouped[k]) for k in sorted(grouped)}

    @property
    def layer_counts(self):
        return {k: len(forms) for k, forms in self.layers.items()}

    @property
    def layer1(self):
        return self.layer_counts.get(1, 0)

    @property
    def in_m2(self):
        '''
        Number of atom classes in M^2.
        '''
        return self.total - self.layer1

    def to_dict(self):
        tower = self.spec.tower
        return {
            'total': self.total,
            'layer_counts': {str(k): v for k, v in self.layer_counts.items()},
            'atoms': [
                {
                    'order': nf.order,
                    'layer': self.layer_of[nf],
                    'window': [tower.format(c) for c in nf.window],
                }
                for nf in self.atoms
            ],
        }


def _check_nonunit(x):
    if atomlab.ring.order(x) is atomlab.ring.BEYOND_TRUNCATION:
        raise ValueError("Zero is not an atom candidate")
    if atomlab.ring.is_unit(x):
        raise ValueError("Units are not atom candidates")


def _first_divisor(spec, nf):
    '''
    The first canonical class of order 1..d-1 dividing the class `nf`.
    '''
    for e in range(1, nf.order):
        for a in atomlab.ring.class_enumerate(spec, e):
            if atomlab.ring.divides_with(spec, nf, a, spec.subspace) is not None:
                return a
    return None


def factor_witness(x):
    '''
    A factorization x = a b into nonunits, or None when x is an atom.

    >>> import atomlab.constructions
    >>> spec = atomlab.constructions.eight_atoms()
    >>> a, b = factor_witness(atomlab.ring.monomial(spec, 2, 2))
    >>> a.format(), b.format()
    ('X', 'yX')
    '''
    _check_nonunit(x)
    spec = x.spec
    d = atomlab.ring.order(x)
    if d >= 2 * spec.n:
        shift = atomlab.ring.monomial(spec, 1, spec.n)
        return shift, atomlab.ring.exact_quotient(x, shift)
    if d == 1:
        return None
    a = _first_divisor(spec, atomlab.ring.window_of(x))
    if a is None:
        return None
    divisor = atomlab.ring.lift(spec, a)
    return divisor, atomlab.ring.exact_quotient(x, divisor)


def is_atom(x):
    return factor_witness(x) is None


def is_atom_class(spec, nf):
    '''
    `is_atom` for the class of a normal form.
    '''
    if nf.order >= 2 * spec.n:
        return False
    return nf.order == 1 or _first_divisor(spec, nf) is None


def _inventory(spec, by_order):
    layer_of = {nf: atomlab.structure.layer(spec, nf) for forms in by_order.values() for nf in forms}
    return AtomInventory(spec, by_order, layer_of)


@functools.lru_cache(maxsize=None)
def enumerate_atoms(spec):
    '''
    Every atom class of the ring, with layers.
    '''
    by_order = {}
    for d in range(1, 2 * spec.n):
        classes = atomlab.ring.class_enumerate(spec, d)
        if d == 1:
            found = classes
        else:
            found = tuple(nf for nf in classes if _first_divisor(spec, nf) is None)
        debug_log("order", d, "atoms", len(found), "of", len(classes))
        if found:
            by_order[d] = found
    return _inventory(spec, by_order)


# Oracle. Everything below works from the definitions and avoids the
# quotient recursion used above.

def _windows(spec, d, members):
    lists = [[c for c in members[min(d, spec.n)] if c != 0]]
    lists += [members[min(d + i, spec.n)] for i in range(1, spec.n)]
    return itertools.product(*lists)


def _convolve(tower, a, b):
    out = []
    for i in range(len(a)):
        acc = 0
        for t in range(i + 1):
            acc = tower.add(acc, tower.mul(a[t], b[i - t]))
        out.append(acc)
    return tuple(out)


def _orbit_min(tower, units, w):
    return min(_convolve(tower, u, w) for u in units)


def brute_force_atoms(spec):
    '''
    Atom inventory by exhaustive multiplication of nonunit windows.

    For each order d, every product a b with ord a = e <= d / 2 and
    ord b = d - e is marked. Up to a unit, a can be taken from one
    representative per orbit; b ranges over all windows.

    Raises `CapExceeded` when |F|^n is over `oracle_cap`.
    '''
    tower = spec.tower
    n = spec.n
    cap = atomlab.settings.limit('oracle_cap')
    if tower.order ** n > cap:
        raise atomlab.exceptions.CapExceeded('oracle_cap', tower.order ** n, cap)
    members = {j: sorted(spec.subspace(j).elements) for j in range(n + 1)}
    units = [
        (k,) + rest
        for k in members[0] if k != 0
        for rest in itertools.product(*(members[j] for j in range(1, n)))
    ]
    windows = {d: list(_windows(spec, d, members)) for d in range(1, 2 * n)}
    reps = {}
    for d in range(1, n + 1):
        reps[d] = sorted({_orbit_min(tower, units, w) for w in windows[d]})

    by_order = {}
    for d in range(1, 2 * n):
        hit = set()
        for e in range(1, d // 2 + 1):
            for a in reps[e]:
                for b in windows[d - e]:
                    hit.add(_convolve(tower, a, b))
        classes = sorted({_orbit_min(tower, units, w) for w in windows[d] if w not in hit})
        debug_log("oracle order", d, "atoms", len(classes))
        if classes:
            by_order[d] = tuple(atomlab.ring.NormalForm(d, w, True) for w in classes)
    return _inventory(spec, by_order)
