"""End-to-end acceptance checks, one per headline capability.

Each test prints a single pass/fail line (outside pytest's capture) so the
run log shows the scoreboard at a glance.  Every comparison is exact.
"""

from fractions import Fraction
import math
import random

from pfecalc import arith, congruences, identities, oracle, pfe, roots
from pfecalc.series import TruncatedSeries, power_rational

INTRO_PARTITION_COUNTS = [
    1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297,
    385, 490, 627,
]


def report(capsys, num, label, ok):
    with capsys.disabled():
        verdict = "pass" if ok else "FAIL"
        print(f"[acceptance] {num:02d} {label}: {verdict}")
    assert ok, f"criterion {num} ({label}) failed"


def all_ones_matrix(N):
    return pfe.build_product_matrix([(Fraction(1), lambda k: Fraction(1))], N)


def test_01_partition_bootstrap(capsys):
    N = 60
    result = pfe.enumerate_pfe(all_ones_matrix(N), N, with_freq=False)
    ok = list(result.P[:21]) == INTRO_PARTITION_COUNTS
    ok = ok and all(
        result.P[n] == oracle.count_partitions(n) for n in range(N + 1)
    )
    report(capsys, 1, "partition bootstrap vs direct enumeration", ok)


def test_02_worked_frequency_example(capsys):
    result = pfe.enumerate_pfe(all_ones_matrix(3), 3)
    ok = (
        result.freq(1, 2) == 2
        and result.freq(2, 2) == 1
        and result.freq(1, 3) == 4
        and result.freq(2, 3) == 1
        and result.freq(3, 3) == 1
        and result.P[3] == 3
    )
    report(capsys, 2, "worked frequency example", ok)


def test_03_sigma_partition_recurrence(capsys):
    rep = identities.verify("ramanujan_partition", N=500)
    report(capsys, 3, "sigma1/partition recurrence to n=500", rep.passed)


def test_04_sigma_pentagonal_recurrence(capsys):
    rep = identities.verify("euler_sigma", N=1000)
    report(capsys, 4, "sigma1 pentagonal recurrence to n=1000", rep.passed)


def test_05_tau_pipeline(capsys):
    N = 50
    via_pent = identities.partition_power(-24, N - 1, method="pentagonal")
    via_tri = identities.partition_power(-24, N - 1, method="triangular")
    brute = TruncatedSeries([arith.pentagonal_sign(n) for n in range(N)])
    prod = TruncatedSeries([1], N - 1)
    for _ in range(24):
        prod = prod * brute
    ok = via_pent == via_tri == list(prod.coeffs)
    t = identities.tau(205)
    ok = ok and t[1] == 1 and t[2] == -24 and t[5] == 4830
    ok = ok and all(t[5 * m + 5] % 5 == 0 for m in range(41))
    report(capsys, 5, "tau via both recurrences + brute product, mod-5 family", ok)


def test_06_zeta_even_values(capsys):
    got = identities.zeta_hat(30)
    want = [Fraction(0)] + [
        (-1) ** (n + 1) * arith.bernoulli(2 * n) * 2 ** (2 * n)
        / (2 * math.factorial(2 * n))
        for n in range(1, 31)
    ]
    ok = got == want and got[1] == Fraction(1, 6)
    report(capsys, 6, "zeta(2n)/pi^(2n) recurrence vs Bernoulli", ok)


def test_07_gap2_product_discovery(capsys):
    N = 60
    counts = oracle.gap2_partition_counts(N)
    b, _ = pfe.series_to_pfe(counts, with_freq=False)
    ok = all(
        b[k] == (1 if k % 5 in (1, 4) else 0) for k in range(1, N + 1)
    )
    report(capsys, 7, "gap-2 counts invert to the mod-5 indicator product", ok)


def test_08_exponential_example(capsys):
    N = 100
    g = [Fraction(0), Fraction(1)] + [Fraction(0)] * (N - 1)
    b, P, _ = pfe.g_to_pfe(g, with_freq=False)
    ok = all(P[n] == Fraction(1, math.factorial(n)) for n in range(N + 1))
    ok = ok and all(
        b[k] == Fraction(arith.mobius(k), k) for k in range(1, N + 1)
    )
    report(capsys, 8, "exponential series from g=(1,0,0,...)", ok)


def test_09_integrality_and_divisibility(capsys):
    ok = True
    # the remark series
    P = [Fraction(1)] + [Fraction(4)] * 20
    res = roots.integrality_check(P)
    ok = ok and res.b[1] == 4 and res.b[2] == -6 and res.both_integral

    # boolean agreement on 100 random series, half integer, half rational
    rng = random.Random(2024)
    for trial in range(100):
        N = rng.randint(10, 60)
        if trial % 2:
            P = [Fraction(1)] + [Fraction(rng.randint(-9, 9)) for _ in range(N)]
        else:
            P = [Fraction(1)] + [
                Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(N)
            ]
        res = roots.integrality_check(P)
        ok = ok and res.p_integral == res.b_integral

    # prime-power divisibility and integral roots on 200 random instances
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7])
        r = rng.randint(1, 4)
        N = rng.randint(10, 30)
        P = [Fraction(1)] + [
            Fraction(rng.randint(-9, 9) * p ** r) for _ in range(N)
        ]
        ok = ok and roots.prime_power_divisibility(P, p, r).passed
        s = rng.randint(0, r - 1)
        _, integral = roots.root_integrality(P, p, r, s)
        ok = ok and integral
    report(capsys, 9, "integrality agreement + prime-power divisibility", ok)


def test_10_congruence_families(capsys):
    ok = True
    M = 100
    for fam in congruences.FAMILIES:
        if fam.modulus == 5:
            rs = [
                fam.r_residue, fam.r_residue + 5, fam.r_residue + 10,
                fam.r_residue - 5, fam.r_residue - 10,
            ]
            if fam.k == 4:
                rs += [1, -24, Fraction(1, 6)]
        else:
            rs = [3, 6, 9, -3, -6]
        for r in rs:
            rep = congruences.check_family(fam, r, M)
            ok = ok and rep.passed
    report(capsys, 10, "all six congruence families, M=100", ok)


def test_11_squares_triangular_theta(capsys):
    ok = True
    N = 100
    phi = identities.phi_series(N)
    psi = identities.psi_series(N)
    phi_brute = TruncatedSeries([1], N)
    psi_brute = TruncatedSeries([1], N)
    for k in range(1, 9):
        phi_brute = phi_brute * phi
        psi_brute = psi_brute * psi
        ok = ok and power_rational(phi, k) == phi_brute
        ok = ok and power_rational(psi, k) == psi_brute
        ok = ok and identities.verify("squares_rec", N=N, k=k).passed
        ok = ok and identities.verify("triangular_rec", N=N, k=k).passed
    for z in (Fraction(1), Fraction(2), Fraction(1, 3)):
        for r in (Fraction(2), Fraction(-1), Fraction(1, 2)):
            ok = ok and identities.verify("jtp_power_rec", N=60, r=r, z=z).passed
    report(capsys, 11, "squares/triangular/theta power recurrences", ok)


def test_12_moments_and_indicators(capsys):
    ok = True
    for m in (1, 2, 3):
        ok = ok and identities.verify("moments", N=200, m=m).passed
    ok = ok and identities.verify("frequency_indicator", N=200, kmax=10).passed
    ok = ok and identities.verify("mu_frequency", N=200).passed
    report(capsys, 12, "divisor moments + frequency indicators to n=200", ok)


def test_13_property_suite(capsys):
    ok = True
    rng = random.Random(77)

    # two-power recurrence on random series
    for _ in range(50):
        N = 40
        Q = TruncatedSeries(
            [1] + [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(N)]
        )
        r = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        s = Fraction(0)
        while s == 0:
            s = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        ok = ok and identities.verify("pr_ps", N=N, r=r, s=s, Q=Q).passed

    # interleaved and collapsed layouts agree
    N = 20
    factors = [
        (Fraction(-1), [Fraction(0)] + [Fraction(rng.randint(-3, 3)) for _ in range(N)]),
        (Fraction(1, 2), [Fraction(0)] + [Fraction(rng.randint(-3, 3)) for _ in range(N)]),
    ]
    m2 = pfe.build_product_matrix(factors, N)
    r2 = pfe.enumerate_pfe(m2, N)
    r1 = pfe.enumerate_pfe(pfe.collapse_form1(m2), N)
    ok = ok and r1.P == r2.P
    ok = ok and all(
        r1.freq(k, n) == r2.freq(k, n)
        for k in range(1, N + 1)
        for n in range(N + 1)
    )

    # series <-> product round trips
    for z in (Fraction(1), Fraction(-1), Fraction(1, 2)):
        b = [Fraction(0)] + [
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(N)
        ]
        m = pfe.build_product_matrix([(z, b)], N)
        res = pfe.enumerate_pfe(m, N, with_freq=False)
        got_b, _ = pfe.series_to_pfe(list(res.P), z=z, with_freq=False)
        ok = ok and got_b == b

    # engine vs direct partition-sum evaluation
    for _ in range(4):
        Nn = 25
        b = [Fraction(0)] + [
            Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(Nn)
        ]
        z = Fraction(rng.randint(1, 3), rng.randint(1, 3))
        res = pfe.enumerate_pfe(pfe.build_product_matrix([(z, b)], Nn), Nn)
        ok = ok and all(
            res.P[n] == oracle.p_direct(n, b, z) for n in range(Nn + 1)
        )
        ok = ok and all(
            res.freq(k, n) == oracle.f_direct(k, n, b, z)
            for k in (1, 2, 3, 5)
            for n in range(Nn + 1)
        )
    report(capsys, 13, "randomized property suite", ok)
