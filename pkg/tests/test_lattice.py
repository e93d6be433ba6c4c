import pytest

from tsigma import config
from tsigma.config import lattice_cap
from tsigma.errors import OrderCapExceeded
from tsigma.families import builder_family
from tsigma.groups import elementary_abelian, quaternion8, symmetric
from tsigma.lattice import (all_subgroups, are_conjugate, embedded, frattini, generated_subgroup,
                            hall_subgroups, is_normal, minimal_normal_subgroups, normal_closure,
                            normal_core, normal_subgroups, normalizer, sort_key, sylow_subgroups,
                            whole)
from tsigma.numtheory import prime_divisors

from oracles import core_in, normal_in, subgroups_by_small_seeds


@pytest.fixture(scope="module")
def S3():
    return symmetric(3)


def transposition(G, a, b):
    images = list(range(G.degree))
    images[a], images[b] = b, a
    return G.index_of(images)


def test_generated_subgroup_examples(S3):
    assert generated_subgroup(S3, [0]).order == 1
    t = transposition(S3, 0, 1)
    assert generated_subgroup(S3, [t]).order == 2
    u = transposition(S3, 1, 2)
    assert generated_subgroup(S3, [t, u]).order == 6
    # seeds may be any iterable, including generators
    assert generated_subgroup(S3, (x for x in [t, u])).order == 6


@pytest.mark.parametrize("spec,count", [
    ("sym:3", 6), ("cyclic:7", 2), ("q8", 6), ("sym:4", 30), ("alt:5", 59), ("alt:4", 10),
    ("dihedral:8", 10), ("elem:2^3", 16), ("dihedral:12", 16), ("prod(sym:3,cyclic:5)", 12),
    ("semidirect(cyclic:5,cyclic:4,pow:2)", 14),
])
def test_subgroup_counts(spec, count):
    assert len(all_subgroups(builder_family(spec))) == count


def test_q8_subgroups_all_normal():
    Q = quaternion8()
    assert all(is_normal(Q, H) for H in all_subgroups(Q))


def test_lattice_sorted_and_bounded(corpus60):
    for G in corpus60:
        subs = all_subgroups(G)
        assert [H.key for H in subs] == sorted(H.key for H in subs)
        assert subs[0].order == 1 and subs[-1].order == G.order
        assert len({H.mask for H in subs}) == len(subs)
        assert all(G.order % H.order == 0 for H in subs)


def test_lattice_cap():
    G = builder_family("prod(sym:4,cyclic:2)")
    with pytest.raises(OrderCapExceeded):
        all_subgroups(G, cap=40)
    saved = config.LATTICE_CAP
    config.set_caps(lattice_cap=30)
    try:
        assert lattice_cap() == 30
        with pytest.raises(OrderCapExceeded):
            all_subgroups(builder_family("prod(sym:4,cyclic:2)"))
    finally:
        config.set_caps(lattice_cap=saved)


def test_lattice_matches_seed_closure_oracle(corpus24):
    # C2^4 needs four generators, so seeds go up to four elements
    for G in corpus24:
        ours = {frozenset(H.members) for H in all_subgroups(G)}
        assert ours == subgroups_by_small_seeds(G, 4), G.name


def test_three_element_seeds_miss_rank_four():
    G = elementary_abelian(2, 4)
    assert len(subgroups_by_small_seeds(G, 3)) == len(all_subgroups(G)) - 1


def test_subgroups_closed(corpus60):
    for G in corpus60:
        for H in all_subgroups(G):
            m = H.members
            s = set(m)
            assert 0 in s
            assert all(G.inv[x] in s for x in m)
            assert all(G.mul[x][y] in s for x in H.generators for y in m)


def test_is_normal_examples(S3):
    A3 = generated_subgroup(S3, [S3.index_of((1, 2, 0))])
    assert is_normal(S3, A3)
    assert not is_normal(S3, generated_subgroup(S3, [transposition(S3, 0, 1)]))
    assert is_normal(S3, whole(S3))


def test_normalizer_examples(S3):
    C2 = generated_subgroup(S3, [transposition(S3, 0, 1)])
    assert normalizer(S3, C2) == C2
    A3 = generated_subgroup(S3, [S3.index_of((1, 2, 0))])
    assert normalizer(S3, A3).order == 6
    S4 = symmetric(4)
    for P in sylow_subgroups(S4, 2):
        assert normalizer(S4, P) == P


def test_normal_core_examples(S3):
    C2 = generated_subgroup(S3, [transposition(S3, 0, 1)])
    assert normal_core(S3, C2).order == 1
    A3 = generated_subgroup(S3, [S3.index_of((1, 2, 0))])
    assert normal_core(S3, A3) == A3
    G = builder_family("prod(sym:3,cyclic:5)")
    left = embedded(G, "left")
    c2 = next(H for H in all_subgroups(G) if H.order == 2 and H <= left)
    assert normal_core(G, c2).order == 1


def test_core_normalizer_sandwich(corpus60):
    for G in corpus60:
        for H in all_subgroups(G):
            core, norm = normal_core(G, H), normalizer(G, H)
            assert core <= H <= norm
            assert is_normal(G, core)
            assert all(G.mul[G.mul[g][h]][G.inv[g]] in H for g in norm.generators for h in H.members)


def test_core_and_normality_match_oracle(corpus24):
    for G in corpus24:
        everything = range(G.order)
        for H in all_subgroups(G):
            assert frozenset(normal_core(G, H).members) == core_in(G, H.members, everything)
            assert is_normal(G, H) == normal_in(G, H.members, everything)


def test_normal_subgroups_match_lattice_filter(corpus60):
    for G in corpus60:
        filtered = [H for H in all_subgroups(G) if is_normal(G, H)]
        assert normal_subgroups(G) == filtered, G.name


def test_normal_subgroup_examples(S3):
    assert [N.order for N in normal_subgroups(S3)] == [1, 3, 6]
    assert [N.order for N in minimal_normal_subgroups(S3)] == [3]
    assert [N.order for N in minimal_normal_subgroups(elementary_abelian(2, 2))] == [2, 2, 2]
    A5 = builder_family("alt:5")
    assert [N.order for N in minimal_normal_subgroups(A5)] == [60]


def test_normal_closure_is_smallest_normal_overgroup(corpus24):
    for G in corpus24:
        normals = normal_subgroups(G)
        for H in all_subgroups(G):
            C = normal_closure(G, H.members)
            assert C == min((N for N in normals if H <= N), key=sort_key)


def test_hall_examples():
    G = builder_family("prod(sym:3,cyclic:5)")
    halls = hall_subgroups(G, {2, 3})
    assert len(halls) == 1 and halls[0] == embedded(G, "left")
    assert hall_subgroups(G, {2, 3, 5}) == [whole(G)]
    assert hall_subgroups(builder_family("alt:5"), {3, 5}) == []


def test_sylow_examples(S3):
    assert [P.order for P in sylow_subgroups(S3, 3)] == [3]
    assert [P.order for P in sylow_subgroups(S3, 2)] == [2, 2, 2]
    assert [P.order for P in sylow_subgroups(symmetric(4), 2)] == [8, 8, 8]


def test_sylow_counts_congruent_to_one(corpus60):
    for G in corpus60:
        for p in prime_divisors(G.order):
            syl = sylow_subgroups(G, p)
            assert len(syl) % p == 1 % p, (G.name, p)
            assert G.order % len(syl) == 0
            for P in syl[1:]:
                assert are_conjugate(G, syl[0], P) is not None


def test_frattini_examples(S3):
    assert frattini(S3).order == 1
    Q = quaternion8()
    assert frattini(Q).order == 2
    assert frattini(builder_family("cyclic:7")).order == 1
    assert frattini(builder_family("cyclic:8")).order == 4
