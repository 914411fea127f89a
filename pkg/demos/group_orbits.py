"""The permutation group acting on c-matrices and the orbits that feed phi.

Run: python3 demos/group_orbits.py
"""

from zetaforms.groups import (
    PRINTED_COSET_WORDS,
    c_from_direction,
    coset_reps_z3,
    direction_from_c,
    enumerate_group,
    orbit_M,
    parse_word,
    subgroup_perms,
    word_to_perm,
)
from zetaforms.measures import measure_z3
from zetaforms.presets import HATA, RV_ZETA3

print("group orders:", enumerate_group("z3").order, enumerate_group("z2").order)
print("parameter-trivial subgroup:", len(subgroup_perms("z3", "G1")))

c = c_from_direction(RV_ZETA3)
print("\ncoset words (shortest found / as tabulated) and the direction each produces:")
for ours, printed in zip(coset_reps_z3(), PRINTED_COSET_WORDS):
    d = direction_from_c(c.act(word_to_perm("z3", parse_word(printed)))).normalized()
    print(f"  {''.join(ours) or 'id':14s} {printed:14s} {d}")

print("\nThe Hata direction under the small and the full orbit:")
for mode in ("hata", "full"):
    orbit = orbit_M(c_from_direction(HATA), mode)
    r = measure_z3(HATA, mode)
    print(f"  {mode:5s}: {len(orbit.coset_words):3d} cosets, mu <= {r.as_dict(12)['mu_bound']}")
