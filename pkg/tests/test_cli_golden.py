"""Golden-file pins for the documented reproduction invocations.

Regenerate a file deliberately with the command in its header comment
below if an intentional output change is made; any accidental drift in
values or formatting fails here first.
"""

from pathlib import Path

import pytest
from click.testing import CliRunner

from crcselect.cli import main

GOLDEN = Path(__file__).parent / "golden"

CASES = [
    ("analyze_61.txt", ["analyze", "61", "--min-len", "18", "--max-len", "25"]),
    ("analyze_61.csv", ["analyze", "61", "--min-len", "18", "--max-len", "25",
                        "--format", "csv"]),
    ("analyze_e0f.txt", ["analyze", "e0f", "--min-len", "31", "--max-len", "1717"]),
    ("search_p6.txt", ["search", "-p", "6", "--min-len", "18", "--max-len", "25",
                       "--top-k", "8"]),
    ("curves_61_n20.csv", ["curves", "--poly", "61", "--len", "20",
                           "--eps", "0.01", "--eps", "1e-9"]),
]


@pytest.mark.parametrize("fname,args", CASES, ids=[c[0] for c in CASES])
def test_output_matches_golden(fname, args):
    result = CliRunner().invoke(main, args)
    assert result.exit_code == 0
    assert result.output == (GOLDEN / fname).read_text()
