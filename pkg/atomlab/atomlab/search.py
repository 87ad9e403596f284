'''
Families, sweeps and searches
=============================

Three infinite families have closed-form atom counts. With q = p^m:

1. K + L X + F[[X]] X^2, [L:K] = k, [F:L] = l
       (q^(kl) - 1) / (q - 1) * q^(k(l-1)) atoms, none in M^2
2. K + W X + F[[X]] X^2, [F:K] = 3, W = span{1, y}
       q (q^2 + q + 2) / 2 atoms, q^2 (q - 1) / 2 of them in M^2
3. K + F[[X]] X^l, [F:K] = k
       l (q^k - 1) / (q - 1) * q^(k(l-1)) atoms, none in M^2

`sweep` lists family points with their predictions and, where the caps
allow, compares them with enumeration. The count lists below some limit
(`achievable_counts`, `excluded_counts`, `unresolved_counts`) and the
searches (`find_with_atom_count`, `compose_nonlocal`) are arithmetic on
top of the closed forms.

>>> achievable_counts(2, 100)
[8, 21, 44, 80]
>>> compose_nonlocal(9)
[(2, 5)]
'''

import dataclasses
import itertools

import galois
import recordclass

import atomlab.atoms
import atomlab.constructions
import atomlab.exceptions
import atomlab.gf
import atomlab.linalg
import atomlab.ring
import atomlab.settings
import atomlab.structure

from atomlab.log_event import debug_log

FAMILIES = (1, 2, 3)

STATUS_PREDICTED = 'predicted-only'
STATUS_MATCH = 'match'
STATUS_MISMATCH = 'mismatch'
STATUS_CAP = 'cap-exceeded'

NOT_FOUND = 'not found within bounds'
FOUND = 'found'
IMPOSSIBLE = 'impossible'


@dataclasses.dataclass(frozen=True, order=True)
class FamilyPoint:
    '''
    A member of one of the three families. Family 2 only uses p and m;
    its k and l are kept at 1.
    '''
    family: int
    p: int
    m: int
    k: int = 1
    l: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"Unknown family {self.family}; expected one of {FAMILIES}")
        if not galois.is_prime(self.p) or min(self.m, self.k, self.l) < 1:
            raise ValueError(f"Invalid family parameters {self}")

    @property
    def q(self):
        return self.p ** self.m

    @property
    def field_size(self):
        if self.family == 1:
            return self.q ** (self.k * self.l)
        if self.family == 2:
            return self.q ** 3
        return self.q ** self.k

    @property
    def conductor(self):
        return self.l if self.family == 3 else 2

    def spec(self):
        if self.family == 1:
            return atomlab.constructions.intermediate_field(self.p, self.m, self.k, self.l)
        if self.family == 2:
            return atomlab.constructions.atoms_in_m2(self.p, self.m)
        return atomlab.constructions.corrected(self.p, self.m, self.k, self.l)

    def describe(self):
        q = self.q
        if self.family == 1:
            return f"GF({q}) + GF({q}^{self.k})X + GF({q}^{self.k * self.l})[[X]]X^2"
        if self.family == 2:
            return f"GF({q}) + span(1,y)X + GF({q}^3)[[X]]X^2"
        return f"GF({q}) + GF({q}^{self.k})[[X]]X^{self.l}"


Prediction = recordclass.make_dataclass(
    "Prediction",
    ["total", "in_m2", "least_universal", "v_order", "layer1"],
)


def predict(point):
    '''
    Closed-form counts for a family point.

    >>> p = predict(FamilyPoint(2, 5, 1))
    >>> p.total, p.in_m2, p.layer1
    (80, 50, 30)
    '''
    q, k, l = point.q, point.k, point.l
    if point.family == 2:
        total = q * (q * q + q + 2) // 2
        in_m2 = q * q * (q - 1) // 2
        return Prediction(total, in_m2, 4, q, total - in_m2)
    v_order = (q ** k - 1) // (q - 1) * q ** (k * (l - 1))
    if k == l == 1:
        universal = 1
    elif l == 1:
        universal = 2
    else:
        universal = 4 if point.family == 1 else 3
    if point.family == 1:
        total = (q ** (k * l) - 1) // (q - 1) * q ** (k * (l - 1))
    else:
        total = l * v_order
    return Prediction(total, 0, universal, v_order, total)


@dataclasses.dataclass(frozen=True)
class SweepBounds:
    '''
    Finite bounds on family points. `limit` keeps points whose predicted
    total is below it; `max_pm` bounds q = p^m (default: `limit`).
    '''
    max_pm: int = None
    max_k: int = None
    max_l: int = None
    limit: int = None

    def q_bound(self):
        if self.max_pm is not None:
            return self.max_pm
        if self.limit is not None:
            return self.limit
        raise ValueError("Sweep bounds need max_pm or limit")


def prime_powers(bound):
    '''
    (p, m) with p^m <= bound, ordered by p^m.
    '''
    found = []
    for p in (galois.primes(bound) if bound >= 2 else []):
        q, m = p, 1
        while q <= bound:
            found.append((q, p, m))
            q, m = q * p, m + 1
    return [(p, m) for _, p, m in sorted(found)]


def _within(bounds, point, prediction):
    if bounds.limit is not None and prediction.total >= bounds.limit:
        return False
    if bounds.max_k is not None and point.k > bounds.max_k:
        return False
    if bounds.max_l is not None and point.l > bounds.max_l:
        return False
    return True


def family_points(family, bounds):
    '''
    Every point of a family within bounds, in parameter order. Totals
    grow with k and l, so each inner loop stops at its first miss.
    '''
    if bounds.limit is None and (family != 2 and (bounds.max_k is None or bounds.max_l is None)):
        raise ValueError("Sweep bounds need a limit or both max_k and max_l")
    points = []
    for p, m in prime_powers(bounds.q_bound()):
        if family == 2:
            point = FamilyPoint(2, p, m)
            if _within(bounds, point, predict(point)):
                points.append(point)
            continue
        for k in itertools.count(1):
            if not _within(bounds, FamilyPoint(family, p, m, k, 1), predict(FamilyPoint(family, p, m, k, 1))):
                break
            for l in itertools.count(1):
                point = FamilyPoint(family, p, m, k, l)
                if not _within(bounds, point, predict(point)):
                    break
                points.append(point)
    return points


class SweepEntry(recordclass.make_dataclass(
    "SweepEntry",
    ["point", "predicted", "achieved", "least_universal", "v_order", "status"],
    defaults=[None, None, None, STATUS_PREDICTED]
)):
    def to_dict(self):
        point = self.point
        return {
            'family': point.family, 'p': point.p, 'm': point.m, 'k': point.k, 'l': point.l,
            'ring': point.describe(),
            'predicted': recordclass.asdict(self.predicted),
            'achieved': self.achieved,
            'least_universal': self.least_universal,
            'v_order': self.v_order,
            'status': self.status,
        }


def _enumerable(point):
    if point.q > atomlab.settings.limit('enumeration_max_pm'):
        return False
    return point.field_size ** point.conductor <= atomlab.settings.limit('oracle_cap')


def evaluate(point, enumerate_points=False):
    '''
    A `SweepEntry` for one point; with `enumerate_points`, also the
    enumerated counts when the caps allow.
    '''
    predicted = predict(point)
    entry = SweepEntry(point, predicted)
    if not enumerate_points:
        return entry
    if not _enumerable(point):
        entry.status = STATUS_CAP
        return entry
    try:
        spec = point.spec()
    except atomlab.exceptions.CapExceeded:
        entry.status = STATUS_CAP
        return entry
    inventory = atomlab.atoms.enumerate_atoms(spec)
    entry.achieved = inventory.total
    entry.least_universal = atomlab.structure.least_universal_power(spec)
    entry.v_order = atomlab.structure.v_order(spec)
    same = (
        inventory.total == predicted.total
        and inventory.in_m2 == predicted.in_m2
        and entry.least_universal == predicted.least_universal
        and entry.v_order == predicted.v_order
    )
    entry.status = STATUS_MATCH if same else STATUS_MISMATCH
    debug_log("sweep", point.describe(), entry.status)
    return entry


def sweep(family, bounds, enumerate_points=False):
    '''
    Sweep entries for one family (or all when `family` is None).
    '''
    families = FAMILIES if family is None else (family,)
    entries = []
    for f in families:
        entries.extend(evaluate(point, enumerate_points) for point in family_points(f, bounds))
    return entries


def achievable_counts(family, limit, l=None):
    '''
    Sorted distinct totals below `limit`; for families 1 and 3, `l`
    restricts to one value of l.

    >>> achievable_counts(3, 100, l=3)
    [12, 27, 48, 75]
    '''
    points = family_points(family, SweepBounds(limit=limit))
    return sorted({predict(p).total for p in points if l is None or p.l == l})


def _is_projective_count(count):
    '''
    count = (q^k - 1) / (q - 1) for a prime power q and k >= 2.
    '''
    for p, m in prime_powers(count - 1):
        q = p ** m
        value = 1 + q
        while value < count:
            value = value * q + 1
        if value == count:
            return True
    return False


def excluded_counts(limit):
    '''
    Counts below `limit` that no ring of this kind has: 2, and primes
    not of the form (q^k - 1) / (q - 1).
    '''
    excluded = [2] if limit > 2 else []
    excluded += [p for p in galois.primes(limit - 1) if p > 2 and not _is_projective_count(p)] if limit > 3 else []
    return excluded


def unresolved_counts(limit):
    reached = set()
    for family in FAMILIES:
        reached.update(achievable_counts(family, limit))
    excluded = set(excluded_counts(limit))
    return [n for n in range(1, limit) if n not in reached and n not in excluded]


FindResult = recordclass.make_dataclass(
    "FindResult",
    ["count", "status", "reason", "points", "graded"],
    defaults=["", (), ()]
)


def find_with_atom_count(count, bounds=None, exhaustive=False):
    '''
    Family points with exactly `count` atoms. With `exhaustive`, also
    every small graded spec (see `graded_specs`) with that many atoms.

    An empty result only means nothing was found within bounds, except
    for the two counts that are ruled out outright.
    '''
    if count < 1:
        raise ValueError("Atom counts start at 1")
    if count == 2:
        return FindResult(count, IMPOSSIBLE, "no ring of this kind has exactly two atoms")
    if count > 2 and galois.is_prime(count) and not _is_projective_count(count):
        return FindResult(count, IMPOSSIBLE, "prime count not of the form (q^k - 1)/(q - 1)")
    if bounds is None:
        bounds = SweepBounds(max_pm=max(count, 2), limit=count + 1)
    points = [
        point for family in FAMILIES for point in family_points(family, bounds)
        if predict(point).total == count
    ]
    graded = []
    if exhaustive:
        graded = [spec for spec in graded_specs() if atomlab.atoms.enumerate_atoms(spec).total == count]
    status = FOUND if points or graded else NOT_FOUND
    return FindResult(count, status, "", points, graded)


# Small graded specs up to isomorphism

def _towers(max_field):
    for p, d in prime_powers(max_field):
        for m in range(1, d + 1):
            if d % m == 0:
                yield p, m, d // m


def _chains(tower, n):
    all_spaces = list(atomlab.linalg.subspaces(tower))
    return itertools.product(all_spaces, repeat=n - 1)


def _isomorphic_images(tower, V):
    '''
    Images of (V_1, ..., V_(n-1)) under X -> cX and the automorphisms of F.
    '''
    images = set()
    for power in range(tower.d):
        for c in range(1, tower.order):
            chain = []
            for i, space in enumerate(V, start=1):
                scale = tower.pow(c, i)
                moved = [tower.mul(scale, tower.frobenius(v, power)) for v in space.vectors]
                chain.append(atomlab.linalg.span(tower, moved).basis)
            images.add(tuple(chain))
    return images


def graded_specs(max_field=16, max_conductor=3):
    '''
    Every valid graded spec with |F| <= max_field and n <= max_conductor,
    one per isomorphism class, in a fixed order.
    '''
    specs = []
    for p, m, e in _towers(max_field):
        tower = atomlab.gf.tower_make(p, m, e)
        for n in range(1, max_conductor + 1):
            seen = set()
            for V in _chains(tower, n):
                key = tuple(space.basis for space in V)
                if key in seen:
                    continue
                try:
                    spec = atomlab.ring.spec_validate(tower, n, V)
                except atomlab.exceptions.ClosureViolation:
                    continue
                seen.update(_isomorphic_images(tower, V))
                specs.append(spec)
    debug_log("graded specs", len(specs))
    return specs


# Sums of (p + 1) over distinct primes

def compose_nonlocal(count, limit=None):
    '''
    Sets of distinct primes p_i with sum(p_i + 1) = count, as increasing
    tuples in lexicographic order. `limit` stops after that many.

    >>> compose_nonlocal(8)
    [(7,)]
    '''
    if count < 3:
        return []
    primes = list(galois.primes(count - 1))
    # reach[i] has bit s set when s is a sum of (p + 1) over distinct
    # primes from primes[i:].
    mask = (1 << (count + 1)) - 1
    reach = [0] * len(primes) + [1]
    for i in reversed(range(len(primes))):
        reach[i] = (reach[i + 1] | (reach[i + 1] << (primes[i] + 1))) & mask
    found = []

    def extend(start, remaining, chosen):
        if limit is not None and len(found) >= limit:
            return
        if remaining == 0:
            found.append(tuple(chosen))
            return
        for i in range(start, len(primes)):
            step = primes[i] + 1
            if step > remaining:
                break
            if (reach[i + 1] >> (remaining - step)) & 1:
                extend(i + 1, remaining - step, chosen + [primes[i]])

    if (reach[0] >> count) & 1:
        extend(0, count, [])
    return found


def has_nonlocal_decomposition(count):
    return bool(compose_nonlocal(count, limit=1))
