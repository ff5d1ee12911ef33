"""Systematic encoding and checking for shortened cyclic (CRC) codes.

A code is described by :class:`CodeSpec`: a generator polynomial ``g`` of
degree ``p`` and a block length ``n`` with ``p < n <= order(g)``.  Words
are plain integers whose bit j is coefficient j of the word polynomial,
so bit 0 is the last-transmitted (constant-term) position.
"""

from dataclasses import dataclass, field

import numpy as np

from . import gf2
from .errors import DomainError, UnsupportedSizeError

#: Largest number of free interior burst bits enumerated by burst_coverage.
BURST_INTERIOR_CAP = 24


@dataclass(frozen=True)
class CodeSpec:
    """A shortened cyclic code: generator g, check bits p, length n."""

    g: int
    n: int
    p: int = field(init=False)
    k: int = field(init=False)

    def __post_init__(self):
        gf2.require_generator(self.g)
        p = gf2.degree(self.g)
        if not p < self.n:
            raise DomainError(f"length {self.n} must exceed check-bit count {p}")
        n_c = gf2.order(self.g)
        if self.n > n_c:
            raise DomainError(
                f"length {self.n} exceeds the generator's order {n_c}"
            )
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", self.n - p)


def encode(spec, info):
    """Encode an information polynomial systematically.

    The word is x^p * info plus the remainder of x^p * info modulo g, so
    the high k positions carry the information bits and the low p
    positions the check bits.  The result is divisible by g.
    """
    if not 0 <= info < (1 << spec.k):
        raise DomainError(f"information word needs degree < {spec.k}")
    shifted = info << spec.p
    return shifted ^ gf2.mod(shifted, spec.g)


def check(spec, word):
    """True iff word is a codeword (word polynomial divisible by g)."""
    if not 0 <= word < (1 << spec.n):
        raise DomainError(f"word does not fit length {spec.n}")
    return gf2.mod(word, spec.g) == 0


def check_columns(g, n):
    """The parity-check columns h_j = x^j mod g for j = 0..n-1.

    A word w is a codeword exactly when the XOR of h_j over its set bit
    positions j is zero.  Requires n <= order(g); beyond the order the
    columns repeat and the code degenerates.
    """
    gf2.require_generator(g)
    if n > gf2.order(g):
        raise DomainError(f"length {n} exceeds the generator's order {gf2.order(g)}")
    p = gf2.degree(g)
    top = 1 << p
    cols = []
    h = 1
    for _ in range(n):
        cols.append(h)
        h <<= 1
        if h & top:
            h ^= g
    return cols


def burst_coverage(spec, b, interior_cap=BURST_INTERIOR_CAP):
    """Fraction of exact-span-b burst patterns that are detected.

    A burst of span b has its first and last error exactly b-1 positions
    apart; the b-2 interior bits are free.  Since g is coprime to x,
    detectability of x^pos * m(x) depends only on the span pattern m(x),
    so the enumeration runs once over the 2^(b-2) interior patterns and
    the result holds for every one of the n-b+1 positions.
    """
    if not 1 <= b <= spec.n:
        raise DomainError(f"burst span {b} outside [1, {spec.n}]")
    if b == 1:
        # single errors are never codewords (g has at least two terms)
        return 1.0
    interior = b - 2
    if interior > interior_cap:
        raise UnsupportedSizeError(
            f"burst span {b} needs 2^{interior} interior patterns (cap 2^{interior_cap})"
        )
    cols = check_columns(spec.g, b)
    syn = np.zeros(1 << interior, dtype=np.uint32)
    size = 1
    for t in range(1, b - 1):
        syn[size : 2 * size] = syn[:size] ^ cols[t]
        size *= 2
    base = cols[0] ^ cols[b - 1]
    undetected = int(np.count_nonzero(syn == base))
    return 1.0 - undetected / (1 << interior)


def format_word(word, n, style="bin"):
    """Render a word for display, most significant position first."""
    if style == "bin":
        return format(word, f"0{n}b")
    if style == "hex":
        return format(word, f"0{(n + 3) // 4}x")
    raise DomainError(f"unknown word style: {style!r}")
