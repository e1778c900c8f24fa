//! Integer-coefficient polynomial tables.

/// `I2` in `(s, p, r)`, the elementary symmetric functions of the Rosenhain roots.
pub(crate) const I2_TERMS: &[(i64, [u32; 3])] = &[
    (6, [2, 0, 0]),
    (-4, [1, 1, 0]),
    (-16, [1, 0, 1]),
    (6, [0, 2, 0]),
    (-16, [0, 1, 0]),
    (24, [0, 0, 1]),
];

pub(crate) const I4_TERMS: &[(i64, [u32; 3])] = &[
    (-12, [3, 0, 1]),
    (4, [2, 2, 0]),
    (-4, [2, 1, 1]),
    (4, [2, 0, 2]),
    (12, [2, 0, 1]),
    (-4, [1, 2, 0]),
    (44, [1, 1, 1]),
    (-12, [0, 3, 0]),
    (12, [0, 2, 1]),
    (-12, [0, 1, 2]),
    (-12, [1, 0, 1]),
    (4, [0, 2, 0]),
    (-72, [0, 0, 2]),
];

pub(crate) const I6_TERMS: &[(i64, [u32; 3])] = &[
    (-24, [5, 0, 1]),
    (8, [4, 2, 0]),
    (20, [4, 1, 1]),
    (48, [4, 0, 2]),
    (-8, [3, 3, 0]),
    (-36, [3, 2, 1]),
    (20, [3, 1, 2]),
    (-24, [3, 0, 3]),
    (8, [2, 4, 0]),
    (-8, [2, 3, 1]),
    (8, [2, 2, 2]),
    (24, [4, 0, 1]),
    (-8, [3, 2, 0]),
    (118, [3, 1, 1]),
    (-136, [3, 0, 2]),
    (-36, [2, 3, 0]),
    (-194, [2, 1, 2]),
    (32, [2, 0, 3]),
    (20, [1, 4, 0]),
    (118, [1, 3, 1]),
    (-66, [1, 2, 2]),
    (76, [1, 1, 3]),
    (-24, [0, 5, 0]),
    (24, [0, 4, 1]),
    (-24, [0, 3, 2]),
    (-24, [3, 0, 1]),
    (8, [2, 2, 0]),
    (-66, [2, 1, 1]),
    (10, [2, 0, 2]),
    (20, [1, 3, 0]),
    (-194, [1, 2, 1]),
    (412, [1, 1, 2]),
    (150, [1, 0, 3]),
    (48, [0, 4, 0]),
    (-136, [0, 3, 1]),
    (10, [0, 2, 2]),
    (-42, [0, 1, 3]),
    (-36, [0, 0, 4]),
    (76, [1, 1, 1]),
    (-42, [1, 0, 2]),
    (-24, [0, 3, 0]),
    (32, [0, 2, 1]),
    (150, [0, 1, 2]),
    (-252, [0, 0, 3]),
    (-36, [0, 0, 2]),
];

/// `Q = 2^12 3^9 chi35^2 / chi10` in `(psi4, psi6, chi10, chi12)`.
pub(crate) const Q_TERMS: &[(i64, [u32; 4])] = &[
    (-9, [7, 0, 2, 1]),
    (-2, [6, 1, 3, 0]),
    (27, [6, 0, 0, 3]),
    (-331776, [5, 0, 4, 0]),
    (18, [4, 2, 2, 1]),
    (4, [3, 3, 3, 0]),
    (55240704, [4, 0, 2, 2]),
    (-54, [3, 2, 0, 3]),
    (47278080, [3, 1, 3, 1]),
    (8294400, [2, 2, 4, 0]),
    (-9, [1, 4, 2, 1]),
    (-2, [0, 5, 3, 0]),
    (-161243136, [3, 0, 0, 4]),
    (-107495424, [2, 1, 1, 3]),
    (9459597312000, [2, 0, 4, 1]),
    (52254720, [1, 2, 2, 2]),
    (2866544640000, [1, 1, 5, 0]),
    (27, [0, 4, 0, 3]),
    (12441600, [0, 3, 3, 1]),
    (-111451255603200, [1, 0, 2, 3]),
    (-161243136, [0, 2, 0, 4]),
    (-20639121408000, [0, 1, 3, 2]),
    (264180754022400000, [0, 0, 6, 0]),
    (240734712102912, [0, 0, 0, 5]),
];
