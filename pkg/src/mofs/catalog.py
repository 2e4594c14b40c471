"""Reference corpus: known small MOFS sets used as fixtures and demos.

Each set is stored in its display form (superimposed digit grids: digit t
of cell (r, c) is entry (r, c) of square t) and parsed through the normal
validation path, so importing this module re-checks the data.
"""

from .core import (
    FrequencySquare,
    FrequencyType,
    MofsSet,
    unpack_superimposed,
    validate_mofs,
)

_PAIR_3 = """\
11 00 00
00 10 01
00 01 10"""

_SIX_5 = """\
000000 000111 001011 110100 111000
010101 000000 011100 101010 100011
101001 101100 000000 010011 010110
100110 011010 110001 000000 001101
011010 110001 100110 001101 000000"""

_EIGHT_6 = """\
00000011 00001100 00111101 11110100 11010011 11101010
00010100 01110011 01001000 10101011 11100101 10011110
01001111 01100000 10110110 10010000 00111011 11001101
10111001 10101110 10000001 01000010 01011110 01110101
11111000 11011001 11000111 00101111 00100100 00010010
11100110 10010111 01111010 01011101 10001000 00100001"""

_SEVEN_6 = """\
1111111 0000001 0000010 0011110 1101100 1110001
0000100 0010111 0101101 1011001 1101010 1110010
0100000 0111001 1010110 0101011 1000111 1011100
0111010 1001110 1011001 1000000 0110101 0100111
1010011 1101010 0111100 1100101 0010000 0001111
1001101 1110100 1100011 0110110 0011011 0001000"""

_SEVEN_6_EXTENSION = (
    (0, 0, 0, 1, 1, 1),
    (0, 1, 1, 0, 0, 1),
    (1, 1, 1, 0, 0, 0),
    (1, 1, 0, 1, 0, 0),
    (0, 0, 0, 1, 1, 1),
    (1, 0, 1, 0, 1, 0),
)


def _from_display(text: str) -> MofsSet:
    grid = [line.split() for line in text.splitlines()]
    return validate_mofs(unpack_superimposed(grid))


def two_mofs_3() -> MofsSet:
    """The smallest interesting example: a 2-MOFS(3;2,1) pair."""
    return _from_display(_PAIR_3)


def six_mofs_5() -> MofsSet:
    """A maximal 6-MOFS(5;3,2)."""
    return _from_display(_SIX_5)


def eight_mofs_6() -> MofsSet:
    """An 8-MOFS(6;3,3) with constant mod-3 sum; type-maximal."""
    return _from_display(_EIGHT_6)


def seven_mofs_6() -> MofsSet:
    """A 7-MOFS(6;3,3) that admits an eighth member."""
    return _from_display(_SEVEN_6)


def seven_mofs_6_extension() -> FrequencySquare:
    """A square of type (6;3,3) orthogonal to every member of seven_mofs_6()."""
    return FrequencySquare(FrequencyType(6, (3, 3)), _SEVEN_6_EXTENSION)
