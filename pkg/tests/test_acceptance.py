"""End-to-end acceptance checks, one test per criterion.

Each test prints a single pass line on success; under pytest -v the
test name itself gives the per-criterion pass/fail verdict.  Numeric
claims are exact unless a runtime limit is stated.
"""

import random
import time
from fractions import Fraction
from math import gcd

from origami_rings import (
    Angle,
    CyclotomicReal,
    MembershipKind,
    RingStatus,
    SearchBounds,
    SetKind,
    SlopeSet,
    classify,
    cos_of,
    delta_set,
    extension_check,
    generate,
    membership_in_MR,
    minimal_polynomial,
    p_value,
    product_e,
    ratio_elements,
    ring_check,
    sin_of,
    sqrt_rational,
    trace_element,
)
from origami_rings.geometry import PlanePoint, project
from origami_rings.polynomials import RationalPolynomial

PENTAGON = ["0", "pi/5", "pi/4", "pi/3"]


def angle_pool(denominators):
    out = []
    for n in denominators:
        for k in range(1, n):
            if gcd(k, n) == 1:
                out.append(Angle(k, n))
    return out


def test_criterion_1_free_value_minimal_polynomial():
    # X^8+4X^7-8X^6-20X^5+(104/5)X^4+16X^3-8X^2-(16/5)X+16/25, under 10 s
    start = time.monotonic()
    u = SlopeSet(PENTAGON)
    p = p_value(u, Angle(1, 5))
    mu = minimal_polynomial(p)
    expected = RationalPolynomial(
        [
            Fraction(16, 25),
            Fraction(-16, 5),
            Fraction(-8),
            Fraction(16),
            Fraction(104, 5),
            Fraction(-20),
            Fraction(-8),
            Fraction(4),
            Fraction(1),
        ]
    )
    assert mu == expected
    assert mu(p).is_zero
    elapsed = time.monotonic() - start
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    print(f"criterion 1 (free-value minimal polynomial): PASS in {elapsed:.2f}s")


def test_criterion_2_ring_and_sqrt3_membership():
    # exact ratios 6+3sqrt3 and 4+2sqrt3, Ring verdict, and a
    # re-evaluating sqrt(3) witness, under 60 s with default bounds
    start = time.monotonic()
    u = SlopeSet(PENTAGON)
    qa, qb = ratio_elements(u)
    s3 = sqrt_rational(3)
    assert qa == 6 + 3 * s3
    assert qb == 4 + 2 * s3
    report = ring_check(u)
    assert report.status is RingStatus.RING
    verdict = membership_in_MR(s3, u)
    assert verdict.kind is MembershipKind.PROVEN_IN
    assert verdict.witness is not None
    assert verdict.witness.evaluate() == s3
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    print(f"criterion 2 (worked ring example with witness): PASS in {elapsed:.2f}s")


def test_criterion_3_supersets_of_equilateral_pair():
    # any set containing pi/3 and 2pi/3 is a ring; in that frame both
    # ratio elements collapse to 1 exactly
    rng = random.Random(20260814)
    pool = [
        a
        for a in angle_pool([2, 3, 4, 5, 6, 8, 10, 12])
        if a not in (Angle(1, 3), Angle(2, 3))
    ]
    for _ in range(10):
        extra = rng.sample(pool, rng.randint(1, 3))
        u = SlopeSet(
            ["0", "pi/3", "2pi/3"] + [str(a) for a in extra],
            alpha="2pi/3",
            beta="pi/3",
        )
        report = ring_check(u)
        assert report.status is RingStatus.RING, str(u)
        qa, qb = ratio_elements(u)
        assert qa == 1 and qb == 1, str(u)
    print("criterion 3 (10 random supersets of the equilateral pair): PASS")


def test_criterion_4_difference_sets_and_classification():
    rng = random.Random(31415)
    pool = angle_pool([2, 3, 4, 5, 6, 8, 10, 12, 16])
    one = CyclotomicReal.from_rational(1)
    # 20 random 3-slope sets: difference set {1, -1}, discrete lattice
    for _ in range(20):
        g1, g2 = rng.sample(pool, 2)
        u = SlopeSet([Angle.zero(), g1, g2])
        d = list(delta_set(u))
        assert len(d) == 2, str(u)
        assert any(v == one for v in d) and any(v == -one for v in d), str(u)
        assert classify(u).kind is SetKind.DISCRETE, str(u)
    # 10 random 4-slope sets: dense, difference set {+-1, +-p, +-(p-1)}
    for _ in range(10):
        picks = rng.sample(pool, 3)
        u = SlopeSet([Angle.zero()] + picks)
        assert classify(u).kind is SetKind.DENSE, str(u)
        d = list(delta_set(u))
        p = p_value(u, u.free_slopes[0])
        expected = [p, -p, p - 1, 1 - p, one, -one]
        assert len(d) == 6, str(u)
        for v in d:
            assert any(v == w for w in expected), (str(u), v.decimal(8))
    print("criterion 4 (random difference sets and classification): PASS")


def test_criterion_5_generated_points_live_in_the_ring():
    # every generated coordinate passes the sound membership screen;
    # 3-slope coordinates are plain integers; the first equilateral
    # level is exactly the 4-point set; all exact, under 5 minutes
    start = time.monotonic()
    sets = [
        SlopeSet(["0", "pi/3", "2pi/3"]),
        SlopeSet(["0", "pi/4", "pi/2"]),
        SlopeSet(["0", "pi/4", "pi/3", "2pi/3"]),
        SlopeSet(["0", "pi/6", "pi/3", "pi/2"]),
        SlopeSet(["0", "pi/5", "2pi/5", "pi/2"]),
    ]
    assert all(
        max(a.conductor for a in u.slopes) <= 24 for u in sets
    )
    screen = SearchBounds(max_den_exp=1, max_num_deg=2, max_candidates=50)
    for u in sets:
        levels = generate(u, 2, point_cap=50_000)
        for level in levels:
            for pt in level:
                for coord in (pt.r, pt.s):
                    v = membership_in_MR(coord, u, bounds=screen)
                    assert v.kind is not MembershipKind.PROVEN_NOT_IN, (
                        str(u), str(pt),
                    )
                    if u.size == 3:
                        assert coord.is_integer, (str(u), str(pt))

    triangle = sets[0]
    levels = generate(triangle, 1)
    f = triangle.frame
    s32 = sqrt_rational(3) / 2
    expected = {
        f.zero(),
        f.one(),
        PlanePoint.from_cartesian(Fraction(1, 2), s32, f),
        PlanePoint.from_cartesian(Fraction(1, 2), -s32, f),
    }
    assert set(levels[1].points) == expected
    elapsed = time.monotonic() - start
    assert elapsed < 300.0, f"took {elapsed:.1f}s"
    print(f"criterion 5 (generated points live in the ring): PASS in {elapsed:.1f}s")


def test_criterion_6_exact_property_suites():
    # all identities hold with zero tolerance
    pool = angle_pool([1, 2, 3, 4, 5, 6, 8, 10, 12])
    assert max(a.conductor for a in pool) <= 24

    # projection is linear and fixes real points
    u = SlopeSet(["0", "pi/3", "2pi/3"])
    f = u.frame
    z = PlanePoint(1, Fraction(1, 2), f)
    w = PlanePoint(Fraction(-2, 3), 4, f)
    for gamma in (Angle(1, 3), Angle(1, 4), Angle(1, 2), Angle(1, 6)):
        assert project(z + w, gamma) == project(z, gamma) + project(w, gamma)
        assert project(z * 3, gamma) == project(z, gamma) * 3
        real = PlanePoint(Fraction(5, 7), Fraction(5, 7), f)
        assert project(real, gamma) == Fraction(5, 7)

    # coordinate round-trips in both frame orders
    from origami_rings.geometry import from_frame, to_frame

    for a, b in [(Angle(1, 3), Angle(2, 3)), (Angle(1, 2), Angle(1, 4))]:
        for alpha, beta in [(a, b), (b, a)]:
            z = PlanePoint(Fraction(3, 5), Fraction(-7, 2), f)
            w = to_frame(z, alpha, beta)
            back = from_frame(w.r, w.s, alpha, beta, f)
            assert back.r == z.r and back.s == z.s

    # sin^2 + cos^2 = 1, exhaustive over all angles k*pi/n, n <= 24
    for n in range(1, 25):
        for k in range(n):
            if k == 0 and n > 1:
                continue
            a = Angle(k, n)
            assert sin_of(a) ** 2 + cos_of(a) ** 2 == 1, a

    # the trace identity connecting the norm-trace and ratio criteria:
    # qa = 1 + t + qb over every distinct nonzero pair up to conductor 24
    pairs = 0
    for a in pool:
        for b in pool:
            if a == b:
                continue
            sa, sb = sin_of(a), sin_of(b)
            d = sa * cos_of(b) - cos_of(a) * sb
            dinv = d.inv()
            qa = (sa * dinv) ** 2
            qb = (sb * dinv) ** 2
            t = 2 * cos_of(a) * sb * dinv
            assert qa == 1 + t + qb, (a, b)
            pairs += 1
    assert pairs == 506

    # product of the two unit points against plain complex arithmetic
    for i, a in enumerate(pool):
        for b in pool[i + 1:]:
            u = SlopeSet([Angle.zero(), a, b])
            prod = product_e(u)
            x, y = u.frame.unit_parts()
            got_re, got_im = prod.to_cartesian()
            assert got_re == x - x * x + y * y, (a, b)
            assert got_im == y - 2 * x * y, (a, b)
    print("criterion 6 (exact property suites): PASS")


def test_criterion_7_criteria_coherence():
    # decided criteria never disagree; enlarging a ring never flips the
    # verdict to NotRing
    rng = random.Random(987654321)
    pool = angle_pool([2, 3, 4, 5, 6, 8, 10, 12])
    bounds = SearchBounds(max_den_exp=2, max_num_deg=8, max_candidates=300)
    names = ("norm-trace", "ratios", "unit-product")
    seen = set()
    for _ in range(30):
        size = rng.choice([2, 2, 3, 3, 4])
        picks = rng.sample(pool, size)
        u = SlopeSet([Angle.zero()] + picks)
        report = ring_check(u, bounds=bounds)
        decided = {
            report.criterion(n).status
            for n in names
            if report.criterion(n).status is not RingStatus.UNKNOWN
        }
        assert len(decided) <= 1, (str(u), decided)
        extra = rng.choice([a for a in pool if a not in u.slopes])
        extended = extension_check(u, [extra], bounds=bounds)
        assert not (
            report.status is RingStatus.RING
            and extended.status is RingStatus.NOT_RING
        ), (str(u), str(extra))
        seen.add(report.status)
    # the sample is only meaningful if it exercises all three verdicts
    assert seen == {RingStatus.RING, RingStatus.NOT_RING, RingStatus.UNKNOWN}
    print("criterion 7 (criteria coherence on 30 random sets): PASS")
