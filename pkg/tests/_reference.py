"""Reference trick matrices for N = 2..8, kept exactly as distributed,
including one bad entry at the bottom right of N=8."""

REFERENCE = {
    2: [
        [3, 1],
        [5, 3],
    ],
    3: [
        [10, 4, 1],
        [16, 10, 4],
        [19, 16, 10],
    ],
    4: [
        [35, 15, 5, 1],
        [55, 35, 17, 5],
        [65, 53, 35, 15],
        [69, 65, 55, 35],
    ],
    5: [
        [126, 56, 21, 6, 1],
        [196, 126, 66, 26, 6],
        [231, 186, 126, 66, 21],
        [246, 226, 186, 126, 56],
        [251, 246, 231, 196, 126],
    ],
    6: [
        [462, 210, 84, 28, 7, 1],
        [714, 462, 252, 112, 37, 7],
        [840, 672, 462, 262, 112, 28],
        [896, 812, 662, 462, 252, 84],
        [917, 887, 812, 672, 462, 210],
        [923, 917, 896, 840, 714, 462],
    ],
    7: [
        [1716, 792, 330, 120, 36, 8, 1],
        [2640, 1716, 960, 456, 176, 50, 8],
        [3102, 2472, 1716, 1016, 491, 176, 36],
        [3312, 2976, 2416, 1716, 1016, 456, 120],
        [3396, 3256, 2941, 2416, 1716, 960, 330],
        [3424, 3382, 3256, 2976, 2472, 1716, 792],
        [3431, 3424, 3396, 3312, 3102, 2640, 1716],
    ],
    8: [
        [6435, 3003, 1287, 495, 165, 45, 9, 1],
        [9867, 6435, 3663, 1815, 765, 261, 65, 9],
        [11583, 9207, 6435, 3915, 2025, 849, 261, 45],
        [12375, 11055, 8955, 6435, 3985, 2025, 765, 165],
        [12705, 12105, 10845, 8885, 6435, 3915, 1815, 495],
        [12825, 12609, 12021, 10845, 8955, 6435, 3663, 1287],
        [12861, 12805, 12609, 12105, 11055, 9207, 6435, 3003],
        [12869, 12861, 12825, 12705, 12375, 11583, 9867, 6425],
    ],
}

# the one bad entry: a constant main diagonal forces C(16, 8) / 2
INCONSISTENT = {(8, 8, 8): (6425, 6435)}
