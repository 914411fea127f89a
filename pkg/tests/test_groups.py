import math
import random
from fractions import Fraction

import pytest

from zetaforms.directions import Direction32, Direction33
from zetaforms.exactnum import lcm_upto, primes_upto
from zetaforms.forms import ParamSet33
from zetaforms.groups import (
    CMatrix,
    LABELS,
    PRINTED_COSET_WORDS,
    ab_from_c,
    c_from_ab,
    c_from_direction,
    check_reduced_denominators,
    check_stability,
    compose,
    coset_reps_z3,
    direction_from_c,
    enumerate_group,
    generators,
    identity,
    nu_p,
    orbit_M,
    parse_word,
    phi_n,
    subgroup_perms,
    transposition_product,
    word_to_perm,
)
from zetaforms.measures import phi_function
from zetaforms.presets import HATA, RV_ZETA2, RV_ZETA3

PRINTED_COLLECTIONS = [
    ((16, 17, 18, 19), (0, 7, 31, 32)),
    ((12, 14, 16, 18), (0, 2, 27, 31)),
    ((12, 15, 17, 18), (0, 3, 28, 31)),
    ((14, 15, 18, 19), (0, 5, 30, 31)),
    ((13, 15, 17, 19), (0, 4, 29, 31)),
    ((13, 14, 15, 16), (0, 1, 25, 32)),
    ((13, 14, 16, 19), (0, 3, 28, 31)),
    ((12, 13, 16, 17), (0, 1, 26, 31)),
    ((11, 14, 15, 18), (0, 1, 27, 30)),
    ((11, 15, 16, 18), (0, 2, 28, 30)),
    ((12, 13, 14, 19), (0, 1, 28, 29)),
    ((14, 16, 17, 19), (0, 5, 29, 32)),
    ((14, 15, 16, 19), (0, 4, 28, 32)),
    ((13, 14, 16, 17), (0, 2, 26, 32)),
    ((13, 15, 16, 18), (0, 3, 27, 32)),
    ((13, 16, 17, 18), (0, 4, 28, 32)),
    ((15, 16, 18, 19), (0, 6, 30, 32)),
    ((12, 15, 16, 19), (0, 3, 29, 30)),
    ((12, 14, 15, 19), (0, 2, 28, 30)),
    ((10, 15, 16, 17), (0, 1, 28, 29)),
]

C_RV3 = c_from_direction(RV_ZETA3)
C_RV2 = c_from_direction(RV_ZETA2)
C_HATA = c_from_direction(HATA)


def parity(p):
    seen, sign = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign += length - 1
    return sign % 2


# --- c-matrices ------------------------------------------------------------


def test_c_matrix_of_rv_direction():
    assert C_RV3.rows() == [(18, 11, 13, 14), (17, 10, 14, 15), (16, 9, 15, 16), (19, 12, 12, 13)]
    reordered = c_from_direction(Direction33((16, 17, 18, 19), (0, 7, 31, 32)))
    assert reordered.rows() == [(16, 9, 15, 16), (17, 10, 14, 15), (18, 11, 13, 14), (19, 12, 12, 13)]


def test_c_matrix_of_z2_direction():
    c = c_from_direction(Direction32((10, 11, 12), (0, 24, 25)))
    assert c.rows() == [(16,), (10, 14, 15), (11, 13, 14), (12, 12, 13)]


def test_zero_entry_is_not_admissible():
    c = c_from_ab(ParamSet33((2, 2, 2, 2), (2, 1, 4, 4)))
    assert 0 in c.entries and not c.admissible
    assert C_RV3.admissible


def test_c_matrix_round_trips():
    p = RV_ZETA3.params(2)
    assert ab_from_c(c_from_ab(p)) == p.normalized()
    assert direction_from_c(C_RV3) == RV_ZETA3
    assert direction_from_c(C_RV2) == RV_ZETA2


# --- group structure -------------------------------------------------------


def test_group_orders():
    assert enumerate_group("z3").order == 1920
    assert enumerate_group("z2").order == 120
    assert len(subgroup_perms("z3", "G1")) == 96


@pytest.mark.parametrize("kind", ["z3", "z2"])
def test_generators_are_involutions(kind):
    for g in generators(kind).values():
        assert g != identity(len(g))
        assert compose(g, g) == identity(len(g))


def test_all_elements_even():
    assert all(parity(p) == 0 for p in enumerate_group("z3").elements)


def test_b12_relation():
    word = parse_word("ha1a2a1a3hbha3a1a2a1h")
    b12 = transposition_product(16, [(4 * j + 0, 4 * j + 1) for j in range(4)])
    assert word_to_perm("z3", word) == b12


def test_h_action_matches_explicit_image():
    def entries(a, b):
        return tuple(x - y if x >= y else y - x - 1 for x in a for y in b)

    h = generators("z3")["h"]
    rng = random.Random(4)
    checked = 0
    while checked < 50:
        a = [rng.randint(2, 9) for _ in range(4)]
        b2 = rng.randint(1, min(a))
        b3 = rng.randint(max(a) + 1, max(a) + 6)
        b4 = sum(a) + 2 - 1 - b2 - b3
        if b4 <= max(a):
            continue
        p = ParamSet33(tuple(a), (1, b2, b3, b4))
        c = c_from_ab(p)
        if not c.admissible:
            continue
        a1, a2, a3, a4 = a
        img_a = (b3 - a3, a2, b3 - a1, a4)
        img_b = (1, b2 + b3 - a1 - a3, b3, b3 + b4 - a1 - a3)
        assert c.act(h).entries == entries(img_a, img_b)
        checked += 1


def test_z2_group_embeds_by_index_shift():
    """c00 -> c11 and c_jk -> c_{j+1,k+1} carries the z2 generators a1, a2, b, h
    to the z3 generators a2, a3, b, h restricted to the ten shifted labels."""
    z3, z2 = generators("z3"), generators("z2")
    lab3, lab2 = LABELS["z3"], LABELS["z2"]
    shift = {(j, k): (1, 1) if (j, k) == (0, 0) else (j + 1, k + 1) for j, k in lab2}
    shared = [lab3.index(shift[x]) for x in lab2]

    def restrict(g3):
        # position i of the z2 matrix reads the z3 entry g3[shared[i]]
        return tuple(shared.index(g3[s]) for s in shared)

    for name2, name3 in [("a1", "a2"), ("a2", "a3"), ("b", "b"), ("h", "h")]:
        assert restrict(z3[name3]) == z2[name2], name2
    sub = {restrict(word_to_perm("z3", w)) for w in enumerate_group("z3").words.values() if set(w) <= {"a2", "a3", "b", "h"}}
    assert sub <= set(enumerate_group("z2").elements)


def test_sum_b_invariant_under_group():
    d = RV_ZETA3
    ref = d.beta[2] + d.beta[3] - d.beta[0] - d.beta[1]
    for p in enumerate_group("z3").elements:
        img = direction_from_c(C_RV3.act(p))
        assert img.beta[2] + img.beta[3] - img.beta[0] - img.beta[1] == ref


# --- cosets and orbits -----------------------------------------------------


def test_coset_representatives():
    G1 = subgroup_perms("z3", "G1")
    for words in (coset_reps_z3(), [parse_word(w) for w in PRINTED_COSET_WORDS]):
        assert len(words) == 20
        cosets = {frozenset(compose(word_to_perm("z3", w), g) for g in G1) for w in words}
        assert len(cosets) == 20
    assert coset_reps_z3()[0] == ()


def test_printed_words_reproduce_printed_collections_in_order():
    got = [direction_from_c(C_RV3.act(word_to_perm("z3", parse_word(w)))).normalized() for w in PRINTED_COSET_WORDS]
    assert [(d.alpha, d.beta) for d in got] == PRINTED_COLLECTIONS


def test_h_image_is_a_printed_collection():
    d = direction_from_c(C_RV3.act(generators("z3")["h"])).normalized()
    assert (d.alpha, d.beta) in PRINTED_COLLECTIONS


def test_orbit_of_rv_direction():
    orbit = orbit_M(C_RV3)
    assert {(d.alpha, d.beta) for d in orbit.collections} == set(PRINTED_COLLECTIONS)
    assert len(orbit.collections) == 20
    assert len(orbit.coset_words) == 480 and len(orbit.elements) == 480
    assert C_RV3.m_values()[1:] == (16, 18, 16)


def test_orbit_sizes_other_modes():
    assert len(orbit_M(C_RV2).coset_words) == 60
    hata = orbit_M(C_HATA, "hata")
    assert len(hata.coset_words) == 24
    # alpha1 = alpha3 makes half of the 24 images coincide
    assert len(hata.elements) == 12


def test_pi_entry_sum_constant_on_orbit():
    d = RV_ZETA3
    target = 2 * (d.beta[2] + d.beta[3] - d.beta[0] - d.beta[1])
    for c in orbit_M(C_RV3).elements:
        assert sum(c.pi_entries()) == target


# --- stability and arithmetic ---------------------------------------------


def test_stability_under_h():
    assert check_stability(C_RV3, 1, words=[("h",)])


def test_stability_full_orbit_small():
    c = c_from_direction(Direction33((1, 1, 1, 1), (0, 0, 2, 2)))
    # the Apery direction has zero entries; use a small admissible one instead
    c = c_from_direction(Direction33((3, 3, 4, 4), (0, 1, 6, 7)))
    assert c.admissible
    assert check_stability(c, 1)


def test_z2_stability_under_tau_squared():
    assert check_stability(C_RV2, 1, words=[parse_word("a2a1bha2a1bh")])


def test_nu_vanishes_for_large_primes():
    m0 = C_RV3.m_values()[0]
    for n in (1, 3):
        for p in primes_upto(m0 * n + 60):
            if p > m0 * n:
                assert nu_p(C_RV3, n, p) == 0


@pytest.mark.parametrize("n", range(1, 11))
def test_phi_n_divides_denominator_bound(n):
    _, m1, m2, _ = C_RV3.m_values()
    assert (lcm_upto(m1 * n) ** 2 * lcm_upto(m2 * n)) % phi_n(C_RV3, n) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_reduced_denominators_rv_direction(n):
    assert check_reduced_denominators(C_RV3, n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_reduced_denominators_hata_orbit(n):
    assert check_reduced_denominators(C_HATA, n, orbit_M(C_HATA, "hata"))


@pytest.mark.parametrize("n", [20, 50])
def test_nu_equals_step_function(n):
    orbit = orbit_M(C_RV3)
    phi = phi_function(C_RV3, orbit)
    m0, _, _, m3 = C_RV3.m_values()
    primes = [p for p in primes_upto(m3 * n) if p * p > m0 * n]
    assert primes
    for p in primes:
        assert nu_p(C_RV3, n, p, orbit) == phi(Fraction(n, p))


def test_nu_at_101():
    orbit = orbit_M(C_RV3)
    assert nu_p(C_RV3, 20, 101, orbit) == phi_function(C_RV3, orbit)(Fraction(20, 101))
