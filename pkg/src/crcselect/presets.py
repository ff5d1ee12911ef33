"""Bundled generator polynomials and their working length intervals.

The ``standard`` table lists the six CRC generators from the 5G NR
channel-coding specification together with the code-length interval
(payload range plus check bits) each one must serve.  The ``improved``
table lists the generators this package's own interval search ranks
highest for the same intervals; ``tables`` in the CLI re-derives all of
their scorecards from scratch.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Preset:
    name: str
    g: int
    p: int
    min_len: int
    max_len: int


STANDARD = {
    "crc6": Preset("crc6", 0x61, 6, 18, 25),
    "crc11": Preset("crc11", 0xE21, 11, 31, 1717),
    "crc16": Preset("crc16", 0x11021, 16, 17, 3840),
    "crc24a": Preset("crc24a", 0x1864CFB, 24, 3848, 8448),
    "crc24b": Preset("crc24b", 0x1800063, 24, 25, 8448),
    # crc24c serves two distinct roles: short downlink-control blocks
    # and full-size broadcast blocks.
    "crc24c": Preset("crc24c", 0x1B2B117, 24, 25, 8448),
    "crc24c-short": Preset("crc24c-short", 0x1B2B117, 24, 25, 164),
}

#: Best-scoring generators found by the interval search (S_d, then S_Ad).
IMPROVED = {
    "crc6": [0x59],
    "crc11": [0xE0F],
    "crc16": [0x1A2EB],
    # no single 24-bit generator dominates the whole interval; the top
    # three by S_d over [25..8448] are kept.
    "crc24": [0x118B933, 0x125AE5D, 0x10F6F6D],
    "crc24-short": [0x118B983],
}

#: Shared evaluation interval for all 24-bit generators.
CRC24_FULL_INTERVAL = (25, 8448)
CRC24_SHORT_INTERVAL = (25, 164)
