"""Distance profiles over a working interval and P_ue comparisons.

A code deployed over a range of block lengths should be judged on the
whole range: here the standard 16-bit generator is profiled against the
search winner for [17..3840], then compared at a realistic bit error
rate.  Run with:  python demos/04_distance_profiles.py
"""

from crcselect import (
    cumulative_scores,
    distance_profile,
    improvement,
    p_ue_first_term,
)

standard = 0x11021
winner = 0x1A2EB

for name, g in (("standard 11021", standard), ("search winner 1a2eb", winner)):
    profile = distance_profile(g, 17, 3840)
    score = cumulative_scores(profile)
    print(f"{name}: S_d={score.s_d}  S_Ad={score.s_ad}")
    print(f"  runs: {profile.run_string()}")

eps = 1e-12
print(f"\nP_ue' comparison at eps = {eps}")
prof_std = distance_profile(standard, 17, 3840)
prof_win = distance_profile(winner, 17, 3840)
for n in (23, 100, 620, 2500):
    ref = p_ue_first_term(prof_std.d_at(n), prof_std.a_d_at(n), n, eps)
    new = p_ue_first_term(prof_win.d_at(n), prof_win.a_d_at(n), n, eps)
    print(f"  n={n:>5}: winner is {improvement(ref, new):6.2f}% better "
          f"(ratio {ref / new:.3g})")
