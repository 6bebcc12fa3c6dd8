"""Acceptance criteria, each checked exactly.

Run with ``pytest tests/test_acceptance.py`` for a one-line PASS/FAIL
summary per criterion at the end of the session.
"""

import random
from fractions import Fraction

import pytest
from sympy import primerange

from conftest import record_criterion
from ppav.errors import ImaginaryPartNotPositiveDefinite
from ppav.exact import I, GaussianRational, Matrix
from ppav.levels import (
    conjugacy_certificate_check,
    g3_block_forms,
    g3_conjugator,
    g3_conjugator_constant,
    mod_p_classes,
)
from ppav.siegel import (
    SiegelPoint,
    StratumParameters,
    is_fixed,
    stratum_build,
    stratum_contains,
    stratum_parameter_count,
)
from ppav.strata import (
    admissible_triples,
    component_count_bound,
    component_dimension,
    connectivity_certificate,
    dual_classes,
    family_F0_witness,
    family_Fx_witness,
    odd_g_master_witness,
    phi0_matrix,
    phix_matrix,
    prop4_link,
    prop5_link,
    recheck_certificate,
)
from ppav.symplectic import (
    InvolutionType,
    classify_involution,
    group_closure,
    is_involution,
    is_symplectic,
    negate,
    random_symplectic,
    reiner_normal_form,
    symplectic_inverse,
)

pytestmark = pytest.mark.acceptance


def types_of(g):
    return [InvolutionType(x, y, g - 2 * x - y) for x in range(g // 2 + 1) for y in range(g - 2 * x + 1)]


def test_criterion_1_classification_round_trip():
    failures = []
    checked = 0
    for g in range(3, 9):
        for i, t in enumerate(types_of(g)):
            N = reiner_normal_form(t).matrix
            if classify_involution(N) != t:
                failures.append(f"normal form {t}")
            for k in range(100):
                E = random_symplectic(g, 10**6 * g + 1000 * i + k, 4 * g + 8)
                if classify_involution(symplectic_inverse(E) @ N @ E) != t:
                    failures.append(f"{t} conjugate {k}")
                checked += 1
    ok = not failures
    record_criterion(1, ok, f"{checked} conjugates over all types, 3 <= g <= 8; failures: {failures[:3]}")
    assert ok


def test_criterion_2_counting_formulas():
    bad = []
    for g in range(3, 51):
        n_cls = g * (g + 6) // 8 if g % 2 == 0 else (g + 5) * (g - 1) // 8
        n_tri = (g + 2) ** 2 // 4 - 2 if g % 2 == 0 else (g + 1) * (g + 3) // 4 - 2
        if not (len(dual_classes(g)) == component_count_bound(g) == n_cls):
            bad.append(("classes", g))
        if len(admissible_triples(g)) != n_tri:
            bad.append(("triples", g))
    ok = not bad
    record_criterion(2, ok, f"class and triple counts for 3 <= g <= 50; mismatches: {bad}")
    assert ok


def test_criterion_3_dimension_formula():
    bad = [
        t for g in range(1, 11) for t in types_of(g)
        if component_dimension(t) != stratum_parameter_count(t)
    ]
    g3 = [c.dimension for c in dual_classes(3)]
    ok = not bad and g3 == [4, 4]
    record_criterion(3, ok, f"parameter count = dimension for g <= 10 (mismatches {bad}); g=3 dims {g3}")
    assert ok


def _pair_ok(inv, Z, t):
    R = inv.matrix
    return is_symplectic(R) and is_involution(R) and is_fixed(R, Z) and classify_involution(R) == t


def test_criterion_4_witness_families():
    checked, bad = 0, []

    def check(inv, Z, t, label):
        nonlocal checked
        checked += 1
        if not _pair_ok(inv, Z, t):
            bad.append(label)

    for g in range(3, 9):
        Z0 = family_F0_witness(g)
        for y in range(1, g):
            check(phi0_matrix(g, y), Z0, InvolutionType(0, y, g - y), f"F0 g={g} y={y}")
        for x in range(1, g // 2 + 1):
            Zx = family_Fx_witness(g, x)
            for y in range(g - 2 * x + 1):
                check(phix_matrix(g, x, y), Zx, InvolutionType(x, y, g - 2 * x - y), f"Fx g={g} x={x} y={y}")
            if not (g % 2 == 0 and 2 * x == g):
                Z, inv = prop4_link(g, x)
                check(inv, Z, InvolutionType(0, 2 * x, g - 2 * x), f"link g={g} x={x}")
        if g % 2 == 0:
            Z, inv = prop5_link(g)
            check(inv, Z, inv.type, f"even link g={g}")
            check(reiner_normal_form(InvolutionType(g // 2, 0, 0)), Z, InvolutionType(g // 2, 0, 0),
                  f"even link blocks g={g}")
    # g = 3: one point fixed by involutions of type (1,0,1) and (0,1,2)
    Z, inv = prop4_link(3, 1)
    both = _pair_ok(reiner_normal_form(InvolutionType(1, 0, 1)), Z, InvolutionType(1, 0, 1)) and _pair_ok(
        negate(inv), Z, InvolutionType(0, 1, 2)
    )
    ok = not bad and both
    record_criterion(4, ok, f"{checked} witness/involution pairs for 3 <= g <= 8; failures {bad}; "
                            f"g=3 (1,0,1) and (0,1,2) share a fixed point: {both}")
    assert ok


def test_criterion_5_connectivity_certificate():
    summary, ok = [], True
    for g in range(3, 9):
        cert = connectivity_certificate(g)
        good = (
            cert.connected
            and all(e.verified for e in cert.edges)
            and len(cert.nodes) == component_count_bound(g)
            and recheck_certificate(cert) == []
        )
        ok = ok and good
        summary.append(f"g={g}:{len(cert.nodes)}n/{len(cert.edges)}e{'' if good else ' BAD'}")
    record_criterion(5, ok, "connected, all edges verified: " + " ".join(summary))
    assert ok


def test_criterion_6_odd_master_witness():
    summary, ok = [], True
    for g, bound in ((3, 6), (5, 12), (7, 20)):
        Z, found = odd_g_master_witness(g)
        all_types = sorted(found) == admissible_triples(g)
        pairs = all(_pair_ok(inv, Z, t) for t, inv in found.items())
        order = len(group_closure([inv.matrix for inv in found.values()]))
        good = all_types and pairs and order >= bound == (g + 1) * (g + 3) // 4
        ok = ok and good
        summary.append(f"g={g}: {len(found)} types, order {order} >= {bound}")
    record_criterion(6, ok, "; ".join(summary))
    assert ok


def test_criterion_7_mod_p_conjugacy():
    primes = list(primerange(3, 50))
    bad = []
    for p in primes:
        c = g3_conjugator_constant(p)
        a, b = g3_block_forms(p)
        if (-2 * c) % p != 1 or not conjugacy_certificate_check(g3_conjugator(p), a, b, p):
            bad.append(p)
    consts = [g3_conjugator_constant(p) for p in (3, 5, 7)]
    classes = [mod_p_classes(3, p) for p in primes]
    two = all(len(cl) == 2 for cl in classes)
    ok = not bad and consts == [1, 2, 3] and two
    record_criterion(7, ok, f"conjugator certificates for {len(primes)} odd primes < 50 (failures {bad}); "
                            f"c at 3,5,7 = {consts}; g=3 collapses to 2 classes: {two}")
    assert ok


def _random_stratum_point(rng, t):
    scale = 4 * (t.g + 1)
    base = StratumParameters.default(t)

    def r():
        return GaussianRational(Fraction(rng.randint(-3, 3), rng.randint(1, 4)),
                                Fraction(rng.randint(-1, 1), rng.randint(1, 4)))

    def tail(n):
        up = [[I * scale + r() if i == j else r() for j in range(n)] for i in range(n)]
        return Matrix([[up[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)])

    while True:
        try:
            return stratum_build(StratumParameters(
                t, [v * scale + r() for v in base.a], [v * scale + r() for v in base.b],
                [r() for _ in base.c], [r() for _ in base.d], tail(t.y), tail(t.z),
            ))
        except ImaginaryPartNotPositiveDefinite:
            continue


def test_criterion_8_convexity():
    rng = random.Random(8)
    pairs, bad = 0, []
    for g in range(1, 7):
        for t in types_of(g):
            N = reiner_normal_form(t).matrix
            for _ in range(100):
                Z1, Z2 = _random_stratum_point(rng, t), _random_stratum_point(rng, t)
                q = Fraction(rng.randint(1, 50), rng.randint(1, 50))
                try:
                    S, Q = SiegelPoint(Z1.Z + Z2.Z), SiegelPoint(Z1.Z * q)
                except ImaginaryPartNotPositiveDefinite:
                    bad.append(t)
                    continue
                if not (stratum_contains(t, S) and stratum_contains(t, Q) and is_fixed(N, S)):
                    bad.append(t)
                pairs += 1
    ok = not bad
    record_criterion(8, ok, f"{pairs} pairs over all types g <= 6 stay in the stratum and the upper "
                            f"half-space; failures {bad[:3]}")
    assert ok


def test_criterion_9_excluded():
    record_criterion(9, True, "analytic statements about moduli spaces are not finite computations; "
                              "covered only through criteria 1-8", status="EXCLUDED")
    pytest.skip("not a finite computation")
