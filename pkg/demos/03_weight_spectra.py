"""Dual-code weight spectra and exact MacWilliams recovery.

A length-n CRC code has 2^(n-p) codewords but its dual has only 2^p, so
the dual spectrum is cheap to enumerate and the primal one follows
exactly through the MacWilliams identity.  Run with:
python demos/03_weight_spectra.py
"""

from crcselect import (
    CodeSpec,
    brute_force_spectrum,
    dual_weight_distribution,
    macwilliams_transform,
    min_distance,
)

g, n = 0x61, 24
dual = dual_weight_distribution(g, n)
print(f"dual spectrum of the [24,18] code of 61 ({dual.total()} words):")
print(dict(sorted(dual.counts.items())))

primal = macwilliams_transform(dual)
direct = brute_force_spectrum(CodeSpec(g, n))
print(f"\nprimal via MacWilliams == brute force over 2^18 codewords: "
      f"{primal == direct}")
print(dict(sorted(primal.counts.items())))

d, a_d = min_distance(g, n)
print(f"\nminimum distance {d} with {a_d} codewords of that weight")
