"""Arithmetic on binary polynomials over GF(2).

Polynomials are represented as nonnegative Python integers: bit j of the
integer is the coefficient of x^j.  The representation is canonical by
construction (an integer has no leading zero bits), addition is ``^`` and
the helpers below supply multiplication, division with remainder, the
reciprocal (coefficient reversal) and the multiplicative order of x.

Hexadecimal notation always includes every coefficient, so ``"61"`` is
x^6 + x^5 + 1.  Implicit-leading-term conventions are deliberately not
supported.
"""

import string
from functools import lru_cache

from .errors import ConsistencyError, DomainError

_HEXDIGITS = set(string.hexdigits)


def parse_hex(text):
    """Parse a hexadecimal coefficient string into a polynomial."""
    text = text.strip().lower()
    if not text or any(c not in _HEXDIGITS for c in text):
        raise DomainError(f"not a hexadecimal polynomial: {text!r}")
    return int(text, 16)


def format_hex(a):
    """Format polynomial a as lowercase hex without leading zeros."""
    if a < 0:
        raise DomainError("polynomials are nonnegative bit patterns")
    return format(a, "x")


def degree(a):
    """Degree of polynomial a (-1 for the zero polynomial)."""
    return a.bit_length() - 1


def mul(a, b):
    """Carry-less product of polynomials a and b."""
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def div_rem(a, b):
    """Divide a by b, returning (quotient, remainder) with deg r < deg b."""
    if b == 0:
        raise DomainError("division by the zero polynomial")
    m = a.bit_length() - 1
    n = b.bit_length() - 1
    if m < n:
        return 0, a
    q = 0
    b <<= m - n
    for i in range(m - n + 1):
        q <<= 1
        if (a >> (m - i)) & 1:
            a ^= b
            q ^= 1
        b >>= 1
    return q, a


def mod(a, b):
    """Remainder of a modulo b, for nonzero b."""
    if b == 0:
        raise DomainError("division by the zero polynomial")
    m = a.bit_length() - 1
    n = b.bit_length() - 1
    if m < n:
        return a
    b <<= m - n
    for i in range(m - n + 1):
        if (a >> (m - i)) & 1:
            a ^= b
        b >>= 1
    return a


def reciprocal(g):
    """Reverse the coefficients of g over its degree.

    Requires a nonzero constant term, otherwise the reversal would drop
    the degree and the operation would not be an involution.
    """
    if g <= 0 or not g & 1:
        raise DomainError("reciprocal requires a nonzero constant term")
    return int(format(g, "b")[::-1], 2)


def require_generator(g):
    """Validate that g can generate a code: degree >= 1, constant term 1."""
    if g & 1 == 0 or g.bit_length() < 2:
        raise DomainError(
            f"not a generator polynomial (degree >= 1, constant term 1): 0x{g:x}"
        )


@lru_cache(maxsize=1 << 16)
def order(g):
    """Smallest m >= 1 with x^m = 1 modulo g.

    Defined whenever gcd(x, g) = 1, i.e. g has a nonzero constant term;
    repeated factors in g need no special handling.  The loop is capped at
    2^deg(g) since the unit group of GF(2)[x]/(g) has fewer than 2^deg(g)
    elements.
    """
    require_generator(g)
    p = g.bit_length() - 1
    top = 1 << p
    r = 1
    for m in range(1, (1 << p) + 1):
        r <<= 1
        if r & top:
            r ^= g
        if r == 1:
            return m
    raise ConsistencyError(f"order loop did not terminate for 0x{g:x}")


def order_at_least(g, m):
    """True iff order(g) >= m, without computing the full order."""
    require_generator(g)
    if m <= 1:
        return True
    p = g.bit_length() - 1
    top = 1 << p
    r = 1
    for _ in range(1, m):
        r <<= 1
        if r & top:
            r ^= g
        if r == 1:
            return False
    return True


def to_terms(a):
    """Render a as a sum of powers of x, e.g. 0x61 -> 'x^6+x^5+1'."""
    if a == 0:
        return "0"
    parts = []
    for j in range(a.bit_length() - 1, -1, -1):
        if (a >> j) & 1:
            parts.append("1" if j == 0 else "x" if j == 1 else f"x^{j}")
    return "+".join(parts)
