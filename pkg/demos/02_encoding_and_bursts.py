"""Systematic encoding, codeword checking, and burst detection.

Run with:  python demos/02_encoding_and_bursts.py
"""

from crcselect import CodeSpec, burst_coverage, check, encode
from crcselect.codec import format_word

spec = CodeSpec(0x61, n=18)  # 6 check bits protecting 12 information bits
print(f"[{spec.n},{spec.k}] code generated by 61")

info = 0b101100111010
word = encode(spec, info)
print(f"info     {format_word(info, spec.k)}")
print(f"codeword {format_word(word, spec.n)}  (low {spec.p} bits are checks)")
print(f"check(codeword)          = {check(spec, word)}")
print(f"check(codeword ^ 1 bit)  = {check(spec, word ^ (1 << 9))}")

# Every burst no wider than the check-bit count is caught; one span
# wider, exactly one interior pattern in 2^(p-1) slips through.
print("\nburst span -> detected fraction")
for b in (1, 4, 6, 7, 8):
    print(f"{b:>10} -> {burst_coverage(spec, b):.6f}")
