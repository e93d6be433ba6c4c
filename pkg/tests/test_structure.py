from math import gcd

import pytest

from tsigma.families import builder_family
from tsigma.groups import symmetric
from tsigma.lattice import (all_subgroups, cyclic_subgroups, embedded, generated_subgroup,
                            hall_subgroups, is_normal, normal_subgroups, whole)
from tsigma.quotient import quotient_group
from tsigma.numtheory import prime_divisors
from tsigma.sigma import robinson_check
from tsigma.structure import (center, chief_series, derived_subgroup, gaschutz_check,
                              is_abelian, is_dedekind, is_dedekind_subgroup, is_nilpotent,
                              is_soluble, is_subnormal, is_t_group, nilpotent_residual,
                              power_automorphism_on, upper_central_series)

import oracles


def normal_of_order(G, n):
    return next(N for N in normal_subgroups(G) if N.order == n)


def test_derived_subgroup_examples():
    assert derived_subgroup(builder_family("elem:2^3")).order == 1
    S3 = symmetric(3)
    assert derived_subgroup(S3) == normal_of_order(S3, 3)
    S4 = symmetric(4)
    assert derived_subgroup(S4) == normal_of_order(S4, 12)


@pytest.mark.parametrize("spec,expected", [
    ("cyclic:6", (True, True, True)),
    ("sym:3", (False, False, True)),
    ("alt:5", (False, False, False)),
    ("q8", (False, True, True)),
    ("sym:4", (False, False, True)),
])
def test_classical_predicates(spec, expected):
    G = builder_family(spec)
    assert (is_abelian(G), is_nilpotent(G), is_soluble(G)) == expected


def test_dedekind_examples():
    assert is_dedekind(builder_family("q8"))
    assert is_dedekind(builder_family("prod(cyclic:4,cyclic:6)"))
    assert not is_dedekind(symmetric(3))


def test_nilpotent_residual_examples():
    assert nilpotent_residual(builder_family("q8")).order == 1
    assert nilpotent_residual(symmetric(3)).order == 3
    G = builder_family("prod(sym:3,cyclic:5)")
    R = nilpotent_residual(G)
    assert R.order == 3 and R <= embedded(G, "left")


def test_chief_series_examples():
    C6 = builder_family("cyclic:6")
    assert chief_series(C6).factor_orders == (2, 3)
    assert chief_series(C6, largest_first=True).factor_orders == (3, 2)
    assert chief_series(symmetric(4)).factor_orders == (4, 3, 2)
    assert chief_series(builder_family("alt:5")).factor_orders == (60,)


def test_power_automorphism_examples():
    S3 = symmetric(3)
    assert power_automorphism_on(S3, normal_of_order(S3, 3))
    A = builder_family("prod(cyclic:3,cyclic:4)")
    assert power_automorphism_on(A, whole(A))
    S4 = symmetric(4)
    assert not power_automorphism_on(S4, normal_of_order(S4, 4))


def test_gaschutz_and_robinson_examples():
    assert gaschutz_check(symmetric(3))
    assert not gaschutz_check(symmetric(4))
    assert gaschutz_check(builder_family("q8"))
    assert robinson_check(symmetric(3))
    assert not robinson_check(symmetric(4))
    assert robinson_check(builder_family("prod(cyclic:4,cyclic:6)"))


def test_nilpotent_residual_matches_intersection_oracle(corpus60):
    # every corpus group has order <= 100
    for G in corpus60:
        subs = [frozenset(H.members) for H in all_subgroups(G)]
        expected = oracles.nilpotent_residual_by_intersection(G, subs)
        assert frozenset(nilpotent_residual(G).members) == expected, G.name


def test_nilpotency_matches_upper_central_series(corpus48):
    for G in corpus48:
        assert is_nilpotent(G) == oracles.is_nilpotent_mod(G), G.name
        assert is_nilpotent(G) == (upper_central_series(G)[-1].order == G.order), G.name


def test_center_matches_brute_force(corpus48):
    for G in corpus48:
        assert frozenset(center(G).members) == oracles.center_mod(G, {0})


def test_chief_series_is_chief_and_tiebreak_invariant(corpus60):
    for G in corpus60:
        normals = normal_subgroups(G)
        for largest in (False, True):
            cs = chief_series(G, largest_first=largest)
            assert cs.terms[0].order == 1 and cs.terms[-1] == whole(G)
            for lo, hi in zip(cs.terms, cs.terms[1:]):
                assert is_normal(G, hi) and lo < hi
                assert not any(lo < N < hi for N in normals), G.name
        assert sorted(chief_series(G).factor_orders) == \
            sorted(chief_series(G, largest_first=True).factor_orders), G.name


def test_soluble_iff_prime_power_chief_factors(corpus60):
    for G in corpus60:
        prime_power = all(len(prime_divisors(f)) == 1
                          for f in chief_series(G).factor_orders)
        assert is_soluble(G) == prime_power, G.name


def test_power_automorphism_forms_agree(corpus48):
    for G in corpus48:
        cyclic = cyclic_subgroups(G)
        for D in normal_subgroups(G):
            brute = all(oracles.closure(G, [G.mul[G.mul[g][d]][G.inv[g]]]) <= oracles.closure(G, [d])
                        for g in range(G.order) for d in D.members)
            via_cyclic = all(is_normal(G, C) for C in cyclic if C <= D)
            assert power_automorphism_on(G, D) == brute == via_cyclic, G.name


def test_dedekind_matches_definition(corpus60):
    for G in corpus60:
        assert is_dedekind(G) == all(is_normal(G, H) for H in all_subgroups(G)), G.name


def test_dedekind_implies_nilpotent(corpus60):
    for G in corpus60:
        if is_dedekind(G):
            assert is_nilpotent(G), G.name


def test_odd_order_dedekind_is_abelian(corpus60):
    for G in corpus60:
        if G.order % 2 and is_dedekind(G):
            assert is_abelian(G), G.name


def test_dedekind_closed_under_subgroups_and_quotients(corpus60):
    for G in corpus60:
        if not is_dedekind(G):
            continue
        assert all(is_dedekind_subgroup(H) for H in all_subgroups(G)), G.name
        assert all(is_dedekind(quotient_group(G, N).target) for N in normal_subgroups(G)), G.name


def test_dedekind_subgroup_matches_materialised(corpus48):
    from tsigma.lattice import as_group
    for G in corpus48:
        for H in all_subgroups(G)[::3]:
            assert is_dedekind_subgroup(H) == is_dedekind(as_group(H)), G.name


def test_hall_dedekind_product_is_dedekind():
    # built pairs A x B with A a Hall subgroup and both factors Dedekind
    factors = ["cyclic:3", "cyclic:5", "q8", "cyclic:4", "elem:3^2", "prod(q8,cyclic:3)",
               "cyclic:7", "elem:2^2"]
    for a in factors:
        for b in factors:
            A, B = builder_family(a), builder_family(b)
            if gcd(A.order, B.order) != 1 or A.order * B.order > 256:
                continue
            G = builder_family(f"prod({a},{b})")
            assert is_dedekind(G), G.name


def test_subnormal_matches_oracle(corpus48):
    for G in corpus48:
        for H in all_subgroups(G):
            assert is_subnormal(G, H) == oracles.is_subnormal(G, H.members), G.name


def test_t_group_examples():
    assert is_t_group(symmetric(3))
    assert not is_t_group(symmetric(4))
    assert is_t_group(builder_family("prod(sym:3,cyclic:5)"))
    assert not is_t_group(builder_family("dihedral:8"))


def test_hall_subgroups_filter(corpus48):
    for G in corpus48:
        for p in prime_divisors(G.order):
            for H in hall_subgroups(G, {p}):
                assert gcd(H.order, G.order // H.order) == 1
                assert prime_divisors(H.order) <= {p}


def test_generated_derived_subgroup_contains_commutators(corpus48):
    for G in corpus48:
        D = derived_subgroup(G)
        assert all(G.commutator(a, b) in D for a in range(G.order) for b in range(0, G.order, 5))
        assert D == generated_subgroup(G, {G.commutator(a, b) for a in range(G.order)
                                           for b in range(G.order)})
