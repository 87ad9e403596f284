'''
Ideal powers, universality and the group V
==========================================

Powers of the maximal ideal
---------------------------

M^k is described coefficient by coefficient. There are subspaces
S_j = S_j^(k) of F with

    f in M^k  iff  c_j = 0 for j < k, and c_j in S_j for k <= j < kn,

and no constraint from X^(kn) on. With S^(1)_j = V_j (F for j >= n),

    S^(k)_j = K-span of S^(k-1)_(j-i) V_i over i >= 1.

Products of k elements of M have their coefficients in these spans.
Conversely sX^j with s in S^(k)_j is a sum of products of k monomials
of M, and F[[X]] X^(kn) = (F[[X]] X^n)^k. M^k is closed, so it is
exactly the set above.

The R-module M^k is generated by sX^j (s in a basis of S_j, k <= j < kn)
together with bX^j (b in the K-basis of F, kn <= j < kn + n). Those
generators are kept as normal forms, since their orders can run past
the truncation used for ring elements.

Multiplier ring
---------------

[M:M] = {x : xM in M} consists of power series whose coefficients
satisfy x_j in U_j with

    U_j = {c in F : c V_i in V_(i+j) for 1 <= i <= n - 1 - j},

so U_j = F for j >= n - 1. Units of [M:M] modulo 1 + F[[X]]X^n are
windows (u_0 in U_0*, u_1 in U_1, ...), which gives |V| as a quotient
of window counts. We also count the cosets of the unit windows of R
in the unit windows of [M:M] directly (`v_transversal`), and refuse to
answer if the two disagree.

>>> import atomlab.constructions
>>> spec = atomlab.constructions.eight_atoms()
>>> v_order(spec), least_universal_power(spec), dim_m_over_m2(spec)
(2, 4, 2)
'''

import dataclasses
import functools
import itertools

import recordclass

import atomlab.atoms
import atomlab.exceptions
import atomlab.linalg
import atomlab.ring

from atomlab.log_event import debug_log


@dataclasses.dataclass(frozen=True)
class IdealPower:
    '''
    M^k. `S` holds S_j for k <= j < kn.
    '''
    spec: atomlab.ring.RingSpec
    k: int
    S: tuple

    def subspace_at(self, j):
        spec = self.spec
        if j < self.k:
            return atomlab.linalg.zero(spec.tower)
        if j >= self.k * spec.n:
            return spec.f_space
        return self.S[j - self.k]

    def contains(self, x):
        '''
        Membership of a ring element or of the class of a normal form.
        '''
        if isinstance(x, atomlab.ring.NormalForm):
            if x.order < self.k:
                return False
            return all(
                c in self.subspace_at(x.order + i).elements
                for i, c in enumerate(x.window)
            )
        return all(
            c in self.subspace_at(j).elements
            for j, c in enumerate(x.coeffs)
        )

    def generators(self):
        '''
        R-module generators, as normal forms sX^j.
        '''
        spec = self.spec
        pad = (0,) * (spec.n - 1)
        gens = []
        for j in range(self.k, self.k * spec.n):
            gens.extend(atomlab.ring.NormalForm(j, (s,) + pad) for s in self.S[j - self.k].vectors)
        for j in range(self.k * spec.n, self.k * spec.n + spec.n):
            gens.extend(atomlab.ring.NormalForm(j, (b,) + pad) for b in spec.tower.kbasis)
        return gens


_powers = {}


def _next_power(spec, previous):
    tower = spec.tower
    n = spec.n
    k = previous.k + 1
    S = []
    for j in range(k, k * n):
        parts = [
            atomlab.linalg.product_space(previous.subspace_at(j - i), spec.subspace(i))
            for i in range(1, j - (k - 1) + 1)
        ]
        space = atomlab.linalg.sum_spaces(tower, parts)
        if not set(space.elements) <= previous.subspace_at(j).elements:
            raise atomlab.exceptions.InternalInconsistency(
                "M^k not contained in M^(k-1)", "ideal_power",
                {'spec': repr(spec), 'k': k, 'j': j}
            )
        S.append(space)
    return IdealPower(spec, k, tuple(S))


def ideal_power(spec, k):
    '''
    M^k, built up from the highest power computed so far for `spec`.

    >>> import atomlab.constructions
    >>> m2 = ideal_power(atomlab.constructions.eight_atoms(), 2)
    >>> m2.subspace_at(2).dim, m2.subspace_at(1).dim
    (3, 0)
    '''
    if k < 1:
        raise ValueError(f"Exponent must be at least 1, got {k}")
    powers = _powers.setdefault(spec, [])
    if not powers:
        powers.append(IdealPower(spec, 1, tuple(spec.subspace(j) for j in range(1, spec.n))))
    while len(powers) < k:
        powers.append(_next_power(spec, powers[-1]))
    return powers[k - 1]


def layer(spec, x):
    '''
    The largest k with x in M^k, for a nonzero nonunit x.
    '''
    k = 1
    while ideal_power(spec, k + 1).contains(x):
        k += 1
    return k


def graded_quotient_dim(spec, k):
    '''
    dim_K of M^(k-1) / M^k; for k = 1 this is R / M = K.
    '''
    if k < 1:
        raise ValueError(f"Exponent must be at least 1, got {k}")
    if k == 1:
        return 1
    upper = ideal_power(spec, k - 1)
    lower = ideal_power(spec, k)
    return sum(
        upper.subspace_at(j).dim - lower.subspace_at(j).dim
        for j in range(k - 1, k * spec.n)
    )


def dim_m_over_m2(spec):
    return graded_quotient_dim(spec, 2)


def quotient_lines(spec, k):
    '''
    One element per line of the K-space M^(k-1) / M^k, k >= 2, as
    {position: coefficient} with first nonzero coordinate 1.
    '''
    if k < 2:
        raise ValueError(f"Exponent must be at least 2, got {k}")
    upper = ideal_power(spec, k - 1)
    lower = ideal_power(spec, k)
    tower = spec.tower
    basis = [
        (j, v)
        for j in range(k - 1, k * spec.n)
        for v in atomlab.linalg.complement(upper.subspace_at(j), lower.subspace_at(j))
    ]
    for lead in range(len(basis)):
        for tail in itertools.product(tower.k_elements, repeat=len(basis) - lead - 1):
            coeffs = {}
            for (j, v), c in zip(basis[lead:], (1,) + tail):
                if c:
                    coeffs[j] = tower.add(coeffs.get(j, 0), tower.mul(c, v))
            yield coeffs


def quotient_line_reps(spec, k):
    '''
    `quotient_lines` as normal forms.
    '''
    for coeffs in quotient_lines(spec, k):
        d = min(coeffs)
        yield atomlab.ring.NormalForm(d, tuple(coeffs.get(d + i, 0) for i in range(spec.n)))


def _divides(spec, g, a):
    return atomlab.ring.divides_with(spec, g, a, spec.subspace) is not None


def _universal_for(spec, k, atoms):
    gens = ideal_power(spec, k).generators()
    return all(_divides(spec, g, a) for a in atoms for g in gens)


def is_universal(spec, k):
    '''
    M^k lies in Rx for every atom x.
    '''
    return _universal_for(spec, k, atomlab.atoms.enumerate_atoms(spec).atoms)


def is_weakly_universal(spec, k):
    '''
    M^k lies in Rx for every atom x in M minus M^2.
    '''
    inventory = atomlab.atoms.enumerate_atoms(spec)
    return _universal_for(spec, k, inventory.layers.get(1, ()))


def _least(spec, test, cap, name):
    k = 1
    while not test(spec, k):
        debug_log(name, "fails at", k)
        k += 1
        if k > cap:
            raise atomlab.exceptions.InternalInconsistency(
                f"no {name} power up to the guaranteed bound", name,
                {'spec': repr(spec), 'bound': cap}
            )
    return k


@functools.lru_cache(maxsize=None)
def least_universal_power(spec):
    '''
    Least k with M^k universal. M^(N-1) is universal for N atoms, so
    the search never passes max(N - 1, 1).
    '''
    total = atomlab.atoms.enumerate_atoms(spec).total
    return _least(spec, is_universal, max(total - 1, 1), "universal")


@functools.lru_cache(maxsize=None)
def least_weakly_universal(spec):
    layer1 = atomlab.atoms.enumerate_atoms(spec).layer1
    return _least(spec, is_weakly_universal, max(layer1, 1), "weakly universal")


def universality_profile(spec, upto):
    '''
    {k: (weakly universal, universal)} for k = 1..upto.
    '''
    return {k: (is_weakly_universal(spec, k), is_universal(spec, k)) for k in range(1, upto + 1)}


# Multiplier ring and V

@dataclasses.dataclass(frozen=True)
class MultiplierRing:
    '''
    [M:M] as coefficient spaces U_0, ..., U_(n-2); U_j = F beyond.
    '''
    spec: atomlab.ring.RingSpec
    U: tuple

    def subspace_at(self, j):
        if j < len(self.U):
            return self.U[j]
        return self.spec.f_space

    @property
    def m_is_maximal(self):
        '''
        M is the maximal ideal of [M:M].
        '''
        return all(self.subspace_at(j) == self.spec.subspace(j) for j in range(1, self.spec.n))


@functools.lru_cache(maxsize=None)
def multiplier_ring(spec):
    tower = spec.tower
    n = spec.n
    U = []
    for j in range(n - 1):
        keep = []
        for c in range(tower.order):
            if all(
                tower.mul(c, v) in spec.subspace(i + j).elements
                for i in range(1, n - j)
                for v in spec.subspace(i).vectors
            ):
                keep.append(c)
        U.append(atomlab.linalg.span(tower, keep))
    return MultiplierRing(spec, tuple(U))


def _multiplier_units(spec):
    ring = multiplier_ring(spec)
    lists = [sorted(x for x in ring.subspace_at(0).elements if x != 0)]
    lists += [sorted(ring.subspace_at(j).elements) for j in range(1, spec.n)]
    return lists


def _v_order_formula(spec):
    ring = multiplier_ring(spec)
    top = ring.subspace_at(0).size - 1
    bottom = spec.tower.k_order - 1
    for j in range(1, spec.n):
        top *= ring.subspace_at(j).size
        bottom *= spec.subspace(j).size
    if top % bottom:
        raise atomlab.exceptions.InternalInconsistency(
            "unit group of R does not divide that of [M:M]", "v_order",
            {'spec': repr(spec), 'multiplier_units': top, 'units': bottom}
        )
    return top // bottom


@functools.lru_cache(maxsize=None)
def v_transversal(spec):
    '''
    The least unit window of [M:M] in each coset of the units of R.
    '''
    tower = spec.tower
    units = atomlab.ring.unit_windows(spec)
    seen = set()
    reps = []
    for t in itertools.product(*_multiplier_units(spec)):
        if t in seen:
            continue
        reps.append(t)
        seen.update(atomlab.ring.window_mul(tower, u, t) for u in units)
    return tuple(reps)


@functools.lru_cache(maxsize=None)
def v_order(spec):
    '''
    |V| = |U([M:M]) / U(R)|.

    Raises `InternalInconsistency` if the window-count formula and the
    coset count of `v_transversal` differ.
    '''
    formula = _v_order_formula(spec)
    counted = len(v_transversal(spec))
    if formula != counted:
        raise atomlab.exceptions.InternalInconsistency(
            "two computations of |V| disagree", "v_order",
            {'spec': repr(spec), 'formula': formula, 'cosets': counted}
        )
    return formula


def v_orbits(spec, inventory=None):
    '''
    Atom classes grouped into V-orbits, each orbit sorted, orbits
    ordered by their least member.
    '''
    if inventory is None:
        inventory = atomlab.atoms.enumerate_atoms(spec)
    tower = spec.tower
    transversal = v_transversal(spec)
    orbit_of = {}
    for a in inventory.atoms:
        if a in orbit_of:
            continue
        orbit = tuple(sorted({
            atomlab.ring.canonical_form(spec, atomlab.ring.NormalForm(a.order, atomlab.ring.window_mul(tower, t, a.window)))
            for t in transversal
        }))
        for b in orbit:
            if b not in inventory.layer_of:
                raise atomlab.exceptions.InternalInconsistency(
                    "V moved an atom to a non-atom", "v_orbits",
                    {'spec': repr(spec), 'atom': repr(a), 'image': repr(b)}
                )
            orbit_of[b] = orbit
    return sorted(set(orbit_of.values()))


def m_principal_in_multiplier(spec):
    '''
    M = a [M:M] for some a of order 1, with M maximal in [M:M].
    '''
    ring = multiplier_ring(spec)
    if not ring.m_is_maximal:
        return False
    gens = ideal_power(spec, 1).generators()
    for a in atomlab.ring.class_enumerate(spec, 1):
        if all(atomlab.ring.divides_with(spec, g, a, ring.subspace_at) is not None for g in gens):
            return True
    return False


def divisibility_invariants(spec):
    '''
    Invariants of the group of divisibility G(R). For n <= 2 it is
    Z + F*/K* + F/V_1; beyond that only its torsion cardinality is
    reported.
    '''
    tower = spec.tower
    units = (tower.order - 1) // (tower.k_order - 1)
    additive = 1
    for space in spec.V:
        additive *= tower.order // space.size
    result = {
        'rank': 1,
        'cardinality': units * additive,
        'structure_known': spec.n <= 2,
    }
    if spec.n <= 2:
        result['unit_quotient'] = units
        result['additive_quotient'] = additive
    return result


class StructureReport(recordclass.make_dataclass(
    "StructureReport",
    [
        "dim_m_over_m2", "residue_field_size", "v_order", "least_universal",
        "least_weakly_universal", "m_maximal_in_multiplier",
        "m_principal_in_multiplier", "multiplier_dims", "divisibility_invariants"
    ],
)):
    def to_dict(self):
        return recordclass.asdict(self)


def structure_report(spec):
    '''
    >>> import atomlab.constructions
    >>> report = structure_report(atomlab.constructions.corrected(2, 1, 2, 1))
    >>> report.v_order, report.least_universal, report.m_principal_in_multiplier
    (3, 2, True)
    '''
    ring = multiplier_ring(spec)
    return StructureReport(
        dim_m_over_m2=dim_m_over_m2(spec),
        residue_field_size=spec.tower.k_order,
        v_order=v_order(spec),
        least_universal=least_universal_power(spec),
        least_weakly_universal=least_weakly_universal(spec),
        m_maximal_in_multiplier=ring.m_is_maximal,
        m_principal_in_multiplier=m_principal_in_multiplier(spec),
        multiplier_dims=[ring.subspace_at(j).dim for j in range(spec.n)],
        divisibility_invariants=divisibility_invariants(spec),
    )
