//! Integer-coefficient polynomials in the absolute invariants `(j1, j2, j3)`.

/// Denominator `q` of the moduli map.
pub(crate) const PHI_Q_TERMS: &[(i64, [u32; 3])] = &[
    (1, [8, 4, 0]),
    (-12, [8, 3, 1]),
    (54, [8, 2, 2]),
    (-108, [8, 1, 3]),
    (81, [8, 0, 4]),
    (78, [7, 5, 0]),
    (-1332, [7, 4, 1]),
    (8910, [7, 3, 2]),
    (-29376, [7, 2, 3]),
    (47952, [7, 1, 4]),
    (-31104, [7, 0, 5]),
    (-159, [6, 6, 0]),
    (1728, [6, 5, 1]),
    (-6048, [6, 4, 2]),
    (6912, [6, 3, 3]),
    (80, [5, 7, 0]),
    (-384, [5, 6, 1]),
    (-972, [9, 2, 0]),
    (5832, [9, 1, 1]),
    (-8748, [9, 0, 2]),
    (-77436, [8, 3, 0]),
    (870912, [8, 2, 1]),
    (-3090960, [8, 1, 2]),
    (3499200, [8, 0, 3]),
    (592272, [7, 4, 0]),
    (-4743360, [7, 3, 1]),
    (9331200, [7, 2, 2]),
    (-41472, [6, 5, 0]),
    (236196, [10, 0, 0]),
    (19245600, [9, 1, 0]),
    (-104976000, [9, 0, 1]),
    (-507384000, [8, 2, 0]),
    (2099520000, [8, 1, 1]),
    (125971200000, [9, 0, 0]),
];

/// `m`, whose fifth power is `g1`.
pub(crate) const PHI_M_TERMS: &[(i64, [u32; 3])] = &[
    (-1, [1, 2, 0]),
    (6, [1, 1, 1]),
    (-9, [1, 0, 2]),
    (1, [0, 3, 0]),
    (540, [2, 0, 0]),
];

/// `g2 / m^3`.
pub(crate) const PHI_G2_COFACTOR: &[(i64, [u32; 3])] = &[
    (1, [2, 4, 0]),
    (-12, [2, 3, 1]),
    (54, [2, 2, 2]),
    (-108, [2, 1, 3]),
    (81, [2, 0, 4]),
    (-2, [1, 5, 0]),
    (12, [1, 4, 1]),
    (-18, [1, 3, 2]),
    (1, [0, 6, 0]),
    (-756, [3, 2, 0]),
    (4536, [3, 1, 1]),
    (-6804, [3, 0, 2]),
    (5130, [2, 3, 0]),
    (-17496, [2, 2, 1]),
    (131220, [4, 0, 0]),
    (-2332800, [3, 1, 0]),
];

/// `g3 / m^2`.
pub(crate) const PHI_G3_COFACTOR: &[(i64, [u32; 3])] = &[
    (-1, [3, 6, 0]),
    (18, [3, 5, 1]),
    (-135, [3, 4, 2]),
    (540, [3, 3, 3]),
    (-1215, [3, 2, 4]),
    (1458, [3, 1, 5]),
    (-729, [3, 0, 6]),
    (3, [2, 7, 0]),
    (-36, [2, 6, 1]),
    (162, [2, 5, 2]),
    (-324, [2, 4, 3]),
    (243, [2, 3, 4]),
    (-3, [1, 8, 0]),
    (18, [1, 7, 1]),
    (-27, [1, 6, 2]),
    (1, [0, 9, 0]),
    (1350, [4, 4, 0]),
    (-16200, [4, 3, 1]),
    (72900, [4, 2, 2]),
    (-145800, [4, 1, 3]),
    (109350, [4, 0, 4]),
    (-6345, [3, 5, 0]),
    (52650, [3, 4, 1]),
    (-144585, [3, 3, 2]),
    (131220, [3, 2, 3]),
    (4995, [2, 6, 0]),
    (-14580, [2, 5, 1]),
    (-599724, [5, 2, 0]),
    (3598344, [5, 1, 1]),
    (-5397516, [5, 0, 2]),
    (4175226, [4, 3, 0]),
    (-15390648, [4, 2, 1]),
    (4898880, [4, 1, 2]),
    (-1961496, [3, 4, 0]),
    (87392520, [6, 0, 0]),
    (-881798400, [5, 1, 0]),
    (-1259712000, [5, 0, 1]),
];
