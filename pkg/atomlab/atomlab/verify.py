'''
Property suite
==============

`verify_spec` enumerates a ring's atoms, computes its structure, and
checks the counting theorems and bounds that hold for every ring of
this shape. Each check is a `PropertyResult`; a failed check means a
bug somewhere in this package.

Checks that would enumerate too many lines of a graded quotient are
reported as passed with a "skipped" detail.
'''

import galois
import recordclass

import atomlab.atoms
import atomlab.constructions
import atomlab.linalg
import atomlab.ring
import atomlab.settings
import atomlab.structure

from atomlab.log_event import debug_log

PropertyResult = recordclass.make_dataclass(
    "PropertyResult",
    ["name", "passed", "detail"],
    defaults=[""]
)


def _lines(q, dim):
    return (q ** dim - 1) // (q - 1)


def _context(spec):
    inventory = atomlab.atoms.enumerate_atoms(spec)
    report = atomlab.structure.structure_report(spec)
    return inventory, report


def _check(name, passed, detail=""):
    debug_log("property", name, "passed" if passed else "FAILED", detail)
    return PropertyResult(name, bool(passed), detail)


def check_order_one(spec, inventory, report):
    classes = atomlab.ring.class_enumerate(spec, 1)
    return _check(
        "order_one_classes_are_atoms",
        tuple(inventory.by_order.get(1, ())) == tuple(classes),
        f"{len(classes)} classes of order 1"
    )


def check_high_order(spec, inventory, report):
    top = max((nf.order for nf in inventory.atoms), default=0)
    shift = atomlab.ring.monomial(spec, 1, 2 * spec.n)
    return _check(
        "no_atom_of_order_2n",
        top < 2 * spec.n and atomlab.atoms.factor_witness(shift) is not None,
        f"largest atom order {top}"
    )


def check_atom_factor(spec, inventory, report):
    '''
    Every nonzero nonunit has an atom factor; orders past 2n - 1 reduce
    to smaller ones through X^n.
    '''
    missing = []
    for d in range(1, 2 * spec.n):
        divisors = [a for a in inventory.atoms if a.order <= d]
        for nf in atomlab.ring.class_enumerate(spec, d):
            if all(atomlab.ring.divides_with(spec, nf, a, spec.subspace) is None for a in divisors):
                missing.append(nf)
    return _check("every_nonunit_has_atom_factor", not missing, f"{len(missing)} classes without one")


def check_layer1_lower_bound(spec, inventory, report):
    q = report.residue_field_size
    m = _lines(q, report.dim_m_over_m2)
    return _check("layer1_at_least_lines_of_m_over_m2", inventory.layer1 >= m, f"layer1={inventory.layer1} m={m}")


def check_atoms_in_m2_bounds(spec, inventory, report):
    if inventory.in_m2 == 0:
        return _check("atoms_in_m2_bounds", True, "no atoms in M^2")
    q = report.residue_field_size
    k = report.dim_m_over_m2
    m = _lines(q, k)
    total_bound = _lines(q, k + 1) + q - 1 + (1 if report.m_maximal_in_multiplier else 0)
    return _check(
        "atoms_in_m2_bounds",
        inventory.layer1 >= m * q and inventory.total >= total_bound,
        f"layer1={inventory.layer1} >= {m * q}, total={inventory.total} >= {total_bound}"
    )


def check_x_alpha_atoms(spec, inventory, report):
    '''
    With q an atom in M^2 and x_a line representatives of M/M^2, the
    x_a + u q (u in K) are m |K| distinct atom classes of layer 1.
    '''
    if inventory.in_m2 == 0:
        return _check("x_alpha_plus_uq_distinct", True, "no atoms in M^2")
    tower = spec.tower
    deep = next(nf for nf in inventory.atoms if inventory.layer_of[nf] >= 2)
    deep = atomlab.ring.lift(spec, deep)
    found = set()
    bad = []
    for coeffs in atomlab.structure.quotient_lines(spec, 2):
        x = atomlab.ring.element(spec, [coeffs.get(j, 0) for j in range(max(coeffs) + 1)])
        for u in tower.k_elements:
            y = atomlab.ring.add(x, atomlab.ring.mul(atomlab.ring.monomial(spec, u, 0), deep))
            if atomlab.structure.layer(spec, y) != 1 or not atomlab.atoms.is_atom(y):
                bad.append(y.format())
            found.add(atomlab.ring.canonicalize(y))
    expected = _lines(tower.k_order, report.dim_m_over_m2) * tower.k_order
    return _check(
        "x_alpha_plus_uq_distinct",
        not bad and len(found) == expected,
        f"{len(found)} classes, expected {expected}"
    )


def check_layer_upper_bound(spec, inventory, report):
    '''
    With M^k universal, M^(k-1) minus M^k holds at most as many atom
    classes as M^(k-1) / M^k has lines, one fewer when k >= 3.
    '''
    q = report.residue_field_size
    counts = inventory.layer_counts
    worst = []
    for k in range(max(2, report.least_universal), 2 * spec.n + 1):
        bound = _lines(q, atomlab.structure.graded_quotient_dim(spec, k)) - (1 if k >= 3 else 0)
        if counts.get(k - 1, 0) > bound:
            worst.append((k, counts.get(k - 1, 0), bound))
    return _check("universal_layer_upper_bound", not worst, f"violations {worst}")


def check_non_atom_line(spec, inventory, report):
    '''
    With M^k universal, k >= 3 and M^(k-1) != M^k, some element of
    M^(k-1) minus M^k is not an atom.
    '''
    q = report.residue_field_size
    cap = atomlab.settings.limit('line_search_cap')
    skipped = []
    failed = []
    for k in range(max(3, report.least_universal), 2 * spec.n + 1):
        dim = atomlab.structure.graded_quotient_dim(spec, k)
        if dim == 0:
            continue
        if q ** dim > cap:
            skipped.append(k)
            continue
        if all(atomlab.atoms.is_atom_class(spec, nf) for nf in atomlab.structure.quotient_line_reps(spec, k)):
            failed.append(k)
    detail = f"failed at {failed}" if failed else ""
    if skipped:
        detail += f" skipped {skipped} (line_search_cap)"
    return _check("universal_layer_has_non_atom", not failed, detail.strip())


def check_v_divides(spec, inventory, report):
    v = report.v_order
    counts = [inventory.total] + list(inventory.layer_counts.values())
    return _check("v_order_divides_counts", all(c % v == 0 for c in counts), f"|V|={v} counts={counts}")


def check_single_orbit(spec, inventory, report):
    orbits = atomlab.structure.v_orbits(spec, inventory)
    layer1_orbits = [o for o in orbits if inventory.layer_of[o[0]] == 1]
    m2_universal = report.least_universal <= 2
    return _check(
        "m2_universal_iff_one_orbit",
        m2_universal == (len(orbits) == 1) == (len(layer1_orbits) == 1),
        f"{len(orbits)} orbits, {len(layer1_orbits)} in layer 1, least universal {report.least_universal}"
    )


def check_prime_counts(spec, inventory, report):
    m2_universal = report.least_universal <= 2
    prime = [c for c in (inventory.total, inventory.layer1) if c > 1 and galois.is_prime(c)]
    return _check("prime_count_means_m2_universal", not prime or m2_universal, f"prime counts {prime}")


def check_small_layer1(spec, inventory, report):
    q = report.residue_field_size
    if report.dim_m_over_m2 < 2 or inventory.layer1 >= 2 * q:
        return _check("small_layer1_means_q_plus_1", True, "not applicable")
    return _check(
        "small_layer1_means_q_plus_1",
        inventory.total == q + 1 and report.least_universal <= 2,
        f"layer1={inventory.layer1} total={inventory.total}"
    )


def check_universal_powers(spec, inventory, report):
    '''
    M^(N_1) is weakly universal and M^(N - 1) universal. Powers descend,
    so it is enough that the least such exponents are within those bounds
    and that universality persists one step past them.
    '''
    n1 = max(inventory.layer1, 1)
    n = max(inventory.total - 1, 1)
    weak = report.least_weakly_universal
    strong = report.least_universal
    passed = (
        weak <= n1 and strong <= n
        and atomlab.structure.is_weakly_universal(spec, weak + 1)
        and atomlab.structure.is_universal(spec, strong + 1)
    )
    return _check(
        "guaranteed_universal_powers",
        passed,
        f"least weakly universal {weak} <= {n1}, least universal {strong} <= {n}"
    )


def check_v_lower_bound(spec, inventory, report):
    if inventory.total == 1:
        return _check("v_order_lower_bound", True, "DVR")
    q = report.residue_field_size
    bound = q + 1 if report.m_maximal_in_multiplier else q
    return _check("v_order_lower_bound", report.v_order >= bound, f"|V|={report.v_order} bound={bound}")


def check_principal_multiplier(spec, inventory, report):
    return _check(
        "m2_universal_iff_m_principal_in_multiplier",
        (report.least_universal <= 2) == report.m_principal_in_multiplier,
        f"least universal {report.least_universal}"
    )


def check_weak_m2(spec, inventory, report):
    return _check(
        "m2_weakly_universal_iff_universal",
        atomlab.structure.is_weakly_universal(spec, 2) == atomlab.structure.is_universal(spec, 2)
    )


def check_m2_layer1(spec, inventory, report):
    m = _lines(report.residue_field_size, report.dim_m_over_m2)
    return _check(
        "m2_universal_iff_layer1_is_m",
        (report.least_universal <= 2) == (inventory.layer1 == m),
        f"layer1={inventory.layer1} m={m}"
    )


def check_generator_count(spec, inventory, report):
    '''
    M is generated by floor(log_q N_1) + 1 elements.
    '''
    q = report.residue_field_size
    log = 0
    while q ** (log + 1) <= inventory.layer1:
        log += 1
    return _check("embedding_dimension_bound", report.dim_m_over_m2 <= log + 1, f"dim={report.dim_m_over_m2} bound={log + 1}")


def check_never_two(spec, inventory, report):
    return _check("total_is_not_two", inventory.total != 2, f"total={inventory.total}")


def check_twice_prime(spec, inventory, report):
    total = inventory.total
    q = report.residue_field_size
    applies = total % 2 == 0 and galois.is_prime(total // 2) and q != 2
    return _check("twice_prime_means_no_atoms_in_m2", not applies or inventory.in_m2 == 0, f"total={total}")


def check_two_step_family(spec, inventory, report):
    '''
    K + W X + F[[X]] X^2 with 0 < W < F: aX^2 + bX^3 is an atom iff a is
    not in W^2; atoms lie in M^2 iff W^2 is smaller than K W^2; M^3 is
    universal iff W^2 = F; M^4 is universal.
    '''
    tower = spec.tower
    if spec.n != 2 or spec.V[0].dim in (0, tower.e):
        return _check("two_step_classification", True, "not applicable")
    W = spec.V[0]
    square = atomlab.linalg.set_product(W, W)
    span_square = atomlab.linalg.product_space(W, W)
    atoms = set(inventory.by_order.get(2, ()))
    wrong = [
        nf for nf in atomlab.ring.class_enumerate(spec, 2)
        if (nf in atoms) != (nf.window[0] not in square)
    ]
    passed = (
        not wrong
        and (inventory.in_m2 > 0) == (len(square) < span_square.size)
        and atomlab.structure.is_universal(spec, 3) == (len(square) == tower.order)
        and atomlab.structure.is_universal(spec, 4)
    )
    return _check("two_step_classification", passed, f"{len(wrong)} misclassified order-2 classes")


def check_closed_forms(spec, inventory, report):
    expected = atomlab.constructions.expected_counts(spec)
    if expected is None:
        return _check("closed_form_counts", True, "no closed form for this shape")
    seen = {'total': inventory.total, 'in_m2': inventory.in_m2, 'v_order': report.v_order}
    passed = all(seen[key] == expected[key] for key in seen)
    return _check("closed_form_counts", passed, f"{expected['shape']}: expected {expected}, got {seen}")


def check_binary_plane_curve(spec, inventory, report):
    '''
    |K| = 2 and dim M/M^2 = 2: at least 2^(c e - 1) + 1 atoms, where c e is
    the multiplicity (c the least j with V_j != 0).
    '''
    tower = spec.tower
    if tower.k_order != 2 or report.dim_m_over_m2 != 2:
        return _check("binary_plane_curve_bound", True, "not applicable")
    c = next((j for j in range(1, spec.n) if spec.subspace(j).dim), spec.n)
    bound = atomlab.constructions.binary_hypersurface_bound(c * tower.e)
    return _check("binary_plane_curve_bound", inventory.total >= bound, f"total={inventory.total} bound={bound}")


def check_oracle(spec, inventory, report):
    oracle = atomlab.atoms.brute_force_atoms(spec)
    return _check("oracle_agrees", oracle == inventory, f"oracle total {oracle.total}, enumerated {inventory.total}")


CHECKS = [
    check_order_one,
    check_high_order,
    check_atom_factor,
    check_layer1_lower_bound,
    check_atoms_in_m2_bounds,
    check_x_alpha_atoms,
    check_layer_upper_bound,
    check_non_atom_line,
    check_v_divides,
    check_single_orbit,
    check_prime_counts,
    check_small_layer1,
    check_universal_powers,
    check_v_lower_bound,
    check_principal_multiplier,
    check_weak_m2,
    check_m2_layer1,
    check_generator_count,
    check_never_two,
    check_twice_prime,
    check_two_step_family,
    check_closed_forms,
    check_binary_plane_curve,
]


def verify_spec(spec, oracle=False):
    '''
    Run every check. With `oracle`, also compare against
    `brute_force_atoms` (subject to `oracle_cap`).
    '''
    inventory, report = _context(spec)
    checks = CHECKS + ([check_oracle] if oracle else [])
    return [check(spec, inventory, report) for check in checks]


def failures(results):
    return [r for r in results if not r.passed]
