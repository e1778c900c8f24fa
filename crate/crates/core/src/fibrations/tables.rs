//! Integer-coefficient polynomials in the fibration parameters `(a, b, c, d, e)`.

/// Bracket whose vanishing makes two `I1` fibers of the alternate fibration
/// collide.
pub(crate) const SU2_TERMS: &[(i64, [u32; 5])] = &[
    (16, [7, 0, 2, 1, 0]),
    (-16, [6, 1, 3, 0, 0]),
    (16, [5, 0, 4, 0, 1]),
    (16, [6, 0, 0, 3, 0]),
    (216, [4, 2, 2, 1, 0]),
    (888, [4, 0, 2, 2, 1]),
    (-216, [3, 3, 3, 0, 0]),
    (-3420, [3, 1, 3, 1, 1]),
    (2700, [2, 2, 4, 0, 1]),
    (4125, [2, 0, 4, 1, 2]),
    (-5625, [1, 1, 5, 0, 2]),
    (3125, [0, 0, 6, 0, 3]),
    (216, [3, 2, 0, 3, 0]),
    (864, [3, 0, 0, 4, 1]),
    (-2592, [2, 1, 1, 3, 1]),
    (729, [1, 4, 2, 1, 0]),
    (-5670, [1, 2, 2, 2, 1]),
    (16200, [1, 0, 2, 3, 2]),
    (-729, [0, 5, 3, 0, 0]),
    (6075, [0, 3, 3, 1, 1]),
    (-13500, [0, 1, 3, 2, 2]),
    (729, [0, 4, 0, 3, 0]),
    (-5832, [0, 2, 0, 4, 1]),
    (11664, [0, 0, 0, 5, 2]),
];
