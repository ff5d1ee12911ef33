"""Binary polynomial basics: parsing, division, reciprocals, orders.

Generator polynomials are written in hex with every coefficient present,
so "61" is x^6 + x^5 + 1.  Run with:  python demos/01_gf2_polynomials.py
"""

from crcselect import gf2

g = gf2.parse_hex("61")
print(f"g = {gf2.format_hex(g)} = {gf2.to_terms(g)}  (degree {gf2.degree(g)})")

# Division with remainder is the heart of CRC encoding: the check bits
# are the remainder of x^p * i(x) divided by g(x).
q, r = gf2.div_rem(1 << 6, g)
print(f"x^6 = ({gf2.to_terms(q)}) * g + {gf2.to_terms(r)}")

# The reciprocal polynomial reverses the coefficients; it generates an
# equivalent code, which lets a search skip half the candidates.
print(f"reciprocal of 61 is {gf2.format_hex(gf2.reciprocal(g))}")

# The order of g is the largest usable code length: x^m = 1 (mod g)
# first happens at m = order, and beyond that length the columns of the
# parity-check matrix start repeating.
for text in ("61", "e21", "11021", "1b2b117"):
    poly = gf2.parse_hex(text)
    print(f"order({text}) = {gf2.order(poly)}")
