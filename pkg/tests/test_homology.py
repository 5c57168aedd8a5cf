import pytest

from glinv import (
    DegreeWindow,
    MatrixContext,
    ZPair,
    attainable_indices,
    enumerate_in_box,
    ext_components,
    ext_jzl,
    ext_map_analysis,
    ext_min_degree,
    ext_quotient,
    make_ideal,
    power_of_minors,
    regularity,
    saturate,
    saturation_filter,
    size,
    symbolic_power,
    zset,
    zset_of_generators,
    zset_power_closed,
)

from _oracles import ext_lambda_first


def test_zpair_validation():
    ZPair((2, 2, 1), 1)
    ZPair((), 2)
    with pytest.raises(ValueError):
        ZPair((2, 1), 1)  # rows 1..2 differ
    with pytest.raises(ValueError):
        ZPair((1, 0), 0)  # not canonical
    with pytest.raises(ValueError):
        ZPair((1,), -1)


def test_degree_window():
    w = DegreeWindow(-5, -3)
    assert -4 in w and -5 in w and -3 in w
    assert -6 not in w and -2 not in w
    with pytest.raises(ValueError):
        DegreeWindow(3, 2)


def test_zset_ignores_redundant_generators():
    ctx = MatrixContext(3, 3)
    lean = zset_of_generators(ctx, [(2, 1)])
    fat = zset_of_generators(ctx, [(2, 1), (2, 2), (3, 1), (2, 1, 1)])
    assert lean == fat
    assert zset(make_ideal(ctx, [(2, 1)])) == lean


def test_zset_of_trivial_ideals_is_empty():
    ctx = MatrixContext(3, 3)
    assert zset(make_ideal(ctx, [])) == frozenset()
    assert zset(make_ideal(ctx, [[]])) == frozenset()


def test_zset_matches_closed_form_for_powers():
    for n in range(1, 5):
        for m in (n, n + 2):
            ctx = MatrixContext(m, n)
            for p in range(1, n + 1):
                for d in range(1, 5):
                    got = zset(power_of_minors(ctx, p, d))
                    assert got == zset_power_closed(ctx, p, d), (m, n, p, d)


def test_zset_of_maximal_ideal_powers():
    for n in (1, 2, 3):
        ctx = MatrixContext(n + 1, n)
        for d in range(1, 5):
            expect = frozenset(
                ZPair(z, 0)
                for z in enumerate_in_box(n, d - 1)
                if size(z) <= d - 1
            )
            assert zset(power_of_minors(ctx, 1, d)) == expect


def test_saturation_filter_matches_saturated_zset():
    ctx = MatrixContext(4, 4)
    cube = power_of_minors(ctx, 3, 3)
    for p in range(5):
        assert saturation_filter(zset(cube), p) == zset(saturate(cube, p))
    with pytest.raises(ValueError):
        saturation_filter(zset(cube), -1)


def test_saturation_filter_golden():
    ctx = MatrixContext(4, 4)
    sq = power_of_minors(ctx, 2, 2)
    assert saturation_filter(zset(sq), 1) == zset(symbolic_power(ctx, 2, 2))


ORACLE_CASES = [
    (3, 3, (), 1, -8, -4),
    (3, 3, (1, 1), 1, -9, -5),
    (4, 3, (2, 2), 1, -12, -8),
    (4, 4, (2, 2, 2, 1), 1, -16, -12),
    (4, 4, (2, 2, 2), 2, -14, -10),
]


@pytest.mark.parametrize("m,n,z,l,lo,hi", ORACLE_CASES)
def test_ext_components_match_weight_first_oracle(m, n, z, l, lo, hi):
    ctx = MatrixContext(m, n)
    comps = ext_components(ctx, ZPair(z, l), DegreeWindow(lo, hi))
    got = sorted((c.j, c.lam_s, c.lam, c.degree) for c in comps)
    assert got == ext_lambda_first(m, n, z, l, lo, hi)
    assert all(lo <= c.degree <= hi for c in comps)


def test_ext_of_maximal_ideal_powers():
    # For the ideal of entries of a one-column matrix, Ext is concentrated
    # in cohomological index N with one weight per filtration factor.
    N, d = 3, 3
    ctx = MatrixContext(N, 1)
    ideal = power_of_minors(ctx, 1, d)
    ch = ext_quotient(ideal, DegreeWindow(-5, -3))
    assert ch.indices() == [N]
    assert ch.dimension_table(N, 1) == {(N, -3): 1, (N, -4): 3, (N, -5): 6}
    assert not ext_quotient(ideal, DegreeWindow(-9, -6))
    for zp in zset(ideal):
        assert attainable_indices(ctx, zp) == [N]


def test_ext_quotient_of_trivial_ideals_is_empty():
    ctx = MatrixContext(3, 3)
    w = DegreeWindow(-10, 0)
    assert not ext_quotient(make_ideal(ctx, []), w)
    assert not ext_quotient(make_ideal(ctx, [[]]), w)


def test_ext_map_analysis_identity():
    ctx = MatrixContext(3, 3)
    sq = power_of_minors(ctx, 2, 2)
    w = DegreeWindow(-10, -6)
    kernel, image, cokernel = ext_map_analysis(sq, sq, w)
    assert not kernel and not cokernel
    assert image == ext_quotient(sq, w)


def test_ext_map_analysis_saturation_map():
    ctx = MatrixContext(4, 4)
    cube = power_of_minors(ctx, 3, 3)
    sat = saturate(cube, 2)
    w = DegreeWindow(-16, -10)
    kernel, image, cokernel = ext_map_analysis(sat, cube, w)
    assert not kernel
    assert image == ext_quotient(sat, w)
    dropped = zset(cube) - zset(sat)
    assert dropped == {ZPair((2, 2, 2, 2), 0), ZPair((2, 2, 2, 1), 1)}
    assert all(zp.l < 2 for zp in dropped)
    expect = ext_jzl(ctx, ZPair((2, 2, 2, 2), 0), w)
    expect.merge(ext_jzl(ctx, ZPair((2, 2, 2, 1), 1), w))
    assert cokernel == expect
    with pytest.raises(ValueError):
        ext_map_analysis(cube, sat, w)


def test_attainable_indices_golden():
    assert attainable_indices(MatrixContext(3, 1), ZPair((1,), 0)) == [3]
    assert attainable_indices(MatrixContext(3, 3), ZPair((), 1)) == [4]


def test_ext_min_degree_one_column():
    ctx = MatrixContext(3, 1)
    for i in range(3):
        zp = ZPair((i,) if i else (), 0)
        assert ext_min_degree(ctx, zp, 3) == -i - 3
        assert ext_min_degree(ctx, zp, 2) is None


def test_ext_min_degree_is_attained():
    ctx = MatrixContext(3, 3)
    zp = ZPair((), 1)
    lo = ext_min_degree(ctx, zp, 4)
    assert lo == -6
    hit = ext_jzl(ctx, zp, DegreeWindow(lo, lo))
    assert hit and hit.indices() == [4]
    assert not ext_jzl(ctx, zp, DegreeWindow(lo - 5, lo - 1)).at_index(4)


def test_regularity_of_determinantal_powers():
    ctx3 = MatrixContext(3, 3)
    for d in (1, 2, 3):
        assert regularity(power_of_minors(ctx3, 3, d)) == 3 * d
    ctx4 = MatrixContext(4, 4)
    for d in (1, 2, 3):
        assert regularity(power_of_minors(ctx4, 2, d)) == d + 3
        assert regularity(power_of_minors(ctx4, 4, d)) == 4 * d
    assert regularity(power_of_minors(ctx4, 3, 3)) == 10
    assert regularity(symbolic_power(ctx4, 3, 3)) == 9


def test_regularity_rejects_trivial_ideals():
    ctx = MatrixContext(3, 3)
    with pytest.raises(ValueError):
        regularity(make_ideal(ctx, []))
    with pytest.raises(ValueError):
        regularity(make_ideal(ctx, [[]]))
