"""Linear quotients, Betti tables via upper Koszul homology, linearity checks."""

import random
from itertools import combinations

import pytest

from coverrees import (
    GeneratorLimitExceeded,
    LatticeLimitExceeded,
    LinearQuotientsCertificate,
    MonomialIdeal,
    VariableUniverse,
    betti_table,
    check_linear_quotients,
    cover_ideal,
    find_linear_quotients_order,
    has_linear_resolution,
    is_componentwise_linear,
    lcm_lattice,
    minimalize,
    parse_monomial,
    power,
    standard_family,
    upper_koszul_faces,
    variable,
)

from oracles import (
    exhaustive_linear_quotients,
    fraction_rank,
    order_admits_linear_quotients,
    random_monomial,
)

from coverrees.resolutions import _int_rank


def _ideal(universe, *texts):
    return MonomialIdeal(universe, [parse_monomial(t, universe) for t in texts])


U3 = VariableUniverse(("x1", "x2", "x3"))
U4 = VariableUniverse(("x1", "x2", "x3", "x4"))


def test_check_linear_quotients_certificate():
    u = VariableUniverse(("x1", "x2"))
    square = [parse_monomial(t, u) for t in ("x2^2", "x1*x2", "x1^2")]
    cert = check_linear_quotients(square)
    assert isinstance(cert, LinearQuotientsCertificate)
    assert cert.witnesses == {2: {1: 1}, 3: {1: 2, 2: 2}}
    assert cert.validate()

    # the oracle restatement agrees
    assert order_admits_linear_quotients([dict(m.exps) for m in square])


def test_check_linear_quotients_failure_position():
    gens = [parse_monomial(t, U3) for t in ("x1*x3", "x2")]
    # colon(x1*x3, x2) = x1*x3 has degree two, so position 2 fails
    assert check_linear_quotients(gens) == 2
    assert isinstance(check_linear_quotients(list(reversed(gens))), LinearQuotientsCertificate)


def test_check_linear_quotients_edge_cases():
    assert check_linear_quotients([]).validate()
    single = check_linear_quotients([parse_monomial("x1*x3", U3)])
    assert single.validate() and single.witnesses == {}
    m = parse_monomial("x1", U3)
    with pytest.raises(ValueError):
        check_linear_quotients([m, m])


def test_certificate_validation_rejects_tampering():
    u = VariableUniverse(("x1", "x2"))
    square = [parse_monomial(t, u) for t in ("x2^2", "x1*x2", "x1^2")]
    cert = check_linear_quotients(square)
    cert.witnesses[3][1] = 3  # out of range: witnesses must come earlier
    assert not cert.validate()
    cert.witnesses[3] = {}
    assert not cert.validate()


def test_find_order_uses_ascending_heuristic():
    u = VariableUniverse(("x1", "x2"))
    gens = _ideal(u, "x1^2", "x1*x2", "x2^2").gens
    cert = find_linear_quotients_order(gens)
    assert cert is not None and cert.method == "ascending"
    assert [str(m) for m in cert.ordering] == ["x2^2", "x1*x2", "x1^2"]
    assert cert.validate()


def test_find_order_falls_back_to_search():
    # both sweeps fail on (x1^3, x1*x2, x2^3) but a mixed order works
    u = VariableUniverse(("x1", "x2"))
    gens = _ideal(u, "x1^3", "x1*x2", "x2^3").gens
    cert = find_linear_quotients_order(gens)
    assert cert is not None and cert.method == "search"
    assert [str(m) for m in cert.ordering] == ["x1*x2", "x2^3", "x1^3"]
    assert cert.validate()


def test_find_order_detects_impossible_ideals():
    ideal = _ideal(U4, "x1*x3", "x2*x4")
    assert find_linear_quotients_order(ideal.gens) is None
    assert exhaustive_linear_quotients(list(ideal.gens)) is None


def test_find_order_respects_generator_bound():
    gens = _ideal(U3, "x1", "x2", "x3").gens
    with pytest.raises(GeneratorLimitExceeded):
        find_linear_quotients_order(gens, max_generators=2)


def test_find_order_agrees_with_exhaustive_search():
    rng = random.Random(1848)
    hits = misses = 0
    for _ in range(60):
        gens = {random_monomial(rng, U3, max_degree=4) for _ in range(rng.randint(2, 5))}
        gens = {g for g in gens if not g.is_one}
        if not gens:
            continue
        ideal = minimalize(gens, U3)
        cert = find_linear_quotients_order(ideal.gens)
        oracle = exhaustive_linear_quotients(list(ideal.gens))
        assert (cert is None) == (oracle is None)
        if cert is None:
            misses += 1
        else:
            hits += 1
            assert cert.validate()
    assert hits > 0 and misses > 0


def test_int_rank_matches_fraction_elimination():
    rng = random.Random(27)
    for _ in range(200):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        assert _int_rank(m) == fraction_rank(m)
    assert _int_rank([]) == 0
    assert _int_rank([[0, 0], [0, 0]]) == 0
    assert _int_rank([[2, 4], [1, 2]]) == 1


def test_lcm_lattice_of_triangle_cover():
    tri = _ideal(U3, "x1*x2", "x1*x3", "x2*x3")
    lattice = [str(m) for m in lcm_lattice(tri)]
    assert lattice == ["x2*x3", "x1*x3", "x1*x2", "x1*x2*x3"]
    with pytest.raises(LatticeLimitExceeded):
        lcm_lattice(tri, max_multidegrees=2)
    assert lcm_lattice(MonomialIdeal(U3, [])) == []


def test_upper_koszul_faces_worked_example():
    p3 = _ideal(U3, "x2", "x1*x3")
    b = parse_monomial("x1*x2*x3", U3)
    faces = upper_koszul_faces(p3, b)
    assert faces[-1] == [()]
    assert sorted(faces[0]) == [("x1",), ("x2",), ("x3",)]
    assert faces[1] == [("x1", "x3")]
    assert 2 not in faces

    # a multidegree outside the ideal has no faces at all
    outside = parse_monomial("x1", U3)
    assert upper_koszul_faces(p3, outside) == {}


def test_betti_tables_of_small_ideals():
    tri = _ideal(U3, "x1*x2", "x1*x3", "x2*x3")
    assert betti_table(tri).entries == {(0, 2): 3, (1, 3): 2}

    c4 = _ideal(U4, "x1*x3", "x2*x4")
    assert betti_table(c4).entries == {(0, 2): 2, (1, 4): 1}

    p3 = _ideal(U3, "x2", "x1*x3")
    assert betti_table(p3).entries == {(0, 1): 1, (0, 2): 1, (1, 3): 1}

    principal = _ideal(U3, "x1")
    assert betti_table(principal).entries == {(0, 1): 1}

    unit = MonomialIdeal(U3, [U3.one()])
    assert betti_table(unit).entries == {(0, 0): 1}

    zero = MonomialIdeal(U3, [])
    table = betti_table(zero)
    assert table.entries == {} and table.max_index() == -1
    assert table.format_text() == "(zero ideal: empty resolution)"


def test_betti_table_interface():
    tri = _ideal(U3, "x1*x2", "x1*x3", "x2*x3")
    table = betti_table(tri)
    assert table.beta(0, 2) == 3 and table.beta(1, 3) == 2
    assert table.beta(5, 9) == 0
    assert table.max_index() == 1
    assert table.generator_count == 3
    text = table.format_text()
    assert text.splitlines()[0].startswith("i\\j")
    assert "." in text  # absent entries print as dots
    # multigraded refinement sums to the graded table
    total = {}
    for (i, b), v in table.multigraded.items():
        key = (i, b.total_degree)
        total[key] = total.get(key, 0) + v
    assert total == table.entries


def test_betti_respects_generator_bound():
    tri = _ideal(U3, "x1*x2", "x1*x3", "x2*x3")
    with pytest.raises(GeneratorLimitExceeded):
        betti_table(tri, max_generators=2)


def test_betti_zeroth_row_counts_generators():
    for ideal in [
        cover_ideal(standard_family("path", 3)),
        cover_ideal(standard_family("cycle", 4)),
        cover_ideal(standard_family("star", 3)),
        power(cover_ideal(standard_family("path", 3)), 2),
    ]:
        table = betti_table(ideal)
        by_degree = {}
        for g in ideal.gens:
            by_degree[g.total_degree] = by_degree.get(g.total_degree, 0) + 1
        assert {j: v for (i, j), v in table.entries.items() if i == 0} == by_degree
        # the Taylor complex bounds the length of the resolution
        assert table.max_index() < table.generator_count


def _euler_characteristic(ideal, b):
    """Alternating face count of the upper Koszul complex, recomputed from
    scratch on exponent dictionaries."""
    gens = [dict(g.exps) for g in ideal.gens]
    support = sorted(b.exps)
    total = 0
    for size in range(len(support) + 1):
        for combo in combinations(support, size):
            quotient = dict(b.exps)
            for v in combo:
                quotient[v] -= 1
            member = any(
                all(quotient.get(v, 0) >= e for v, e in g.items()) for g in gens
            )
            if member:
                total += (-1) ** (size - 1)
    return total


def test_betti_alternating_sums_match_euler_characteristics():
    for ideal in [
        _ideal(U3, "x1*x2", "x1*x3", "x2*x3"),
        _ideal(U4, "x1*x3", "x2*x4"),
        cover_ideal(standard_family("path", 3)),
        power(cover_ideal(standard_family("path", 3)), 2),
        cover_ideal(standard_family("star", 3)),
    ]:
        table = betti_table(ideal)
        for b in lcm_lattice(ideal):
            alternating = sum(
                (-1) ** i * v for (i, bb), v in table.multigraded.items() if bb == b
            )
            assert alternating == -_euler_characteristic(ideal, b)


def test_has_linear_resolution():
    u = VariableUniverse(("x1", "x2"))
    assert has_linear_resolution(_ideal(u, "x1^2", "x1*x2", "x2^2"))
    assert has_linear_resolution(_ideal(U3, "x1*x2", "x1*x3", "x2*x3"))
    assert has_linear_resolution(_ideal(U3, "x1"))
    assert has_linear_resolution(MonomialIdeal(U3, []))
    assert has_linear_resolution(MonomialIdeal(U3, [U3.one()]))
    # mixed degrees disqualify immediately
    assert not has_linear_resolution(_ideal(U3, "x2", "x1*x3"))
    # equigenerated but with a nonlinear syzygy
    assert not has_linear_resolution(_ideal(U4, "x1*x3", "x2*x4"))


def test_linear_quotients_imply_linear_resolution_when_equigenerated():
    candidates = [
        _ideal(U3, "x1*x2", "x1*x3", "x2*x3"),
        power(cover_ideal(standard_family("path", 2)), 3),
        cover_ideal(standard_family("cycle", 4)),
        power(cover_ideal(standard_family("complete", 3)), 2),
    ]
    exercised = 0
    for ideal in candidates:
        cert = find_linear_quotients_order(ideal.gens)
        if cert is not None and ideal.is_equigenerated():
            assert has_linear_resolution(ideal)
            exercised += 1
    assert exercised >= 2


def test_is_componentwise_linear():
    p3 = cover_ideal(standard_family("path", 3))
    rep = is_componentwise_linear(p3)
    assert rep.componentwise_linear
    assert rep.by_degree == {1: True, 2: True}
    assert rep.degree_range == (1, 2)
    assert rep.range_limited

    c4 = cover_ideal(standard_family("cycle", 4))
    bad = is_componentwise_linear(c4)
    assert not bad.componentwise_linear
    assert bad.by_degree == {2: False}

    zero = is_componentwise_linear(MonomialIdeal(U3, []))
    assert zero.componentwise_linear and zero.degree_range is None

    principal = is_componentwise_linear(_ideal(U3, "x1*x2*x3"))
    assert principal.componentwise_linear
    assert principal.by_degree == {3: True}


def test_componentwise_bounds_propagate():
    tri = _ideal(U3, "x1*x2", "x1*x3", "x2*x3")
    with pytest.raises(GeneratorLimitExceeded):
        is_componentwise_linear(tri, max_generators=2)
