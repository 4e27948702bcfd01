"""Published values for the worked example with nodes 1, 3^2, 6^2."""

from fractions import Fraction as F

NODES = "1,3^2,6^2"

V = [
    [1, 1, 1, 1, 1],
    [1, 3, 9, 27, 81],
    [0, 1, 6, 27, 108],
    [1, 6, 36, 216, 1296],
    [0, 1, 12, 108, 864],
]

U_INV = [
    [1, -1, 3, -9, 54],
    [0, 1, -4, 15, -99],
    [0, 0, 1, -7, 57],
    [0, 0, 0, 1, -13],
    [0, 0, 0, 0, 1],
]

L = [
    [1, 0, 0, 0, 0],
    [1, 2, 0, 0, 0],
    [0, 1, 2, 0, 0],
    [1, 5, 15, 45, 0],
    [0, 1, 8, 39, 45],
]

# det V in factored form: (3-1)^2 (6-1)^2 (6-3)^4
DET_FACTORS = [(3 - 1, 2), (6 - 1, 2), (6 - 3, 4)]

H_HAT = [
    [324, -36, 108, -9, 54],
    [-324, 48, -180, 15, -99],
    [117, -13, 87, -7, 57],
    [-18, 1, -16, 1, -13],
    [1, 0, 1, 0, 1],
]

T = [
    [100, 0, 0, 0, 0],
    [0, 18, 0, 0, 0],
    [0, -3, 18, 0, 0],
    [0, 0, 0, 45, 0],
    [0, 0, 0, 39, 45],
]

T_INV = [
    [F(1, 100), 0, 0, 0, 0],
    [0, F(1, 18), 0, 0, 0],
    [0, F(1, 108), F(1, 18), 0, 0],
    [0, 0, 0, F(1, 45), 0],
    [0, 0, 0, F(-13, 675), F(1, 45)],
]

# Taylor expansion of (x - 1)(x - 6)^2 about 3
COFACTOR_AT_3 = [18, -3, -4, 1]
