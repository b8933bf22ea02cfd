//! Coordinates and equations of the Klein configuration, transcribed once.
//! Point and line numbers are 1-based in these tables, as in the
//! literature; the rest of the crate uses 0-based indices.

/// The 60 points, in order.
pub const POINTS: [&str; 60] = [
    "[0:0:1:1]",
    "[0:0:1:i]",
    "[0:0:1:-1]",
    "[0:0:1:-i]",
    "[0:1:0:1]",
    "[0:1:0:i]",
    "[0:1:0:-1]",
    "[0:1:0:-i]",
    "[0:1:1:0]",
    "[0:1:i:0]",
    "[0:1:-1:0]",
    "[0:1:-i:0]",
    "[1:0:0:1]",
    "[1:0:0:i]",
    "[1:0:0:-1]",
    "[1:0:0:-i]",
    "[1:0:1:0]",
    "[1:0:i:0]",
    "[1:0:-1:0]",
    "[1:0:-i:0]",
    "[1:1:0:0]",
    "[1:i:0:0]",
    "[1:-1:0:0]",
    "[1:-i:0:0]",
    "[1:0:0:0]",
    "[0:1:0:0]",
    "[0:0:1:0]",
    "[0:0:0:1]",
    "[1:1:1:1]",
    "[1:1:1:-1]",
    "[1:1:-1:1]",
    "[1:1:-1:-1]",
    "[1:-1:1:1]",
    "[1:-1:1:-1]",
    "[1:-1:-1:1]",
    "[1:-1:-1:-1]",
    "[1:1:i:i]",
    "[1:1:i:-i]",
    "[1:1:-i:i]",
    "[1:1:-i:-i]",
    "[1:-1:i:i]",
    "[1:-1:i:-i]",
    "[1:-1:-i:i]",
    "[1:-1:-i:-i]",
    "[1:i:1:i]",
    "[1:i:1:-i]",
    "[1:-i:1:i]",
    "[1:-i:1:-i]",
    "[1:i:-1:i]",
    "[1:i:-1:-i]",
    "[1:-i:-1:i]",
    "[1:-i:-1:-i]",
    "[1:i:i:1]",
    "[1:i:-i:1]",
    "[1:-i:i:1]",
    "[1:-i:-i:1]",
    "[1:i:i:-1]",
    "[1:i:-i:-1]",
    "[1:-i:i:-1]",
    "[1:-i:-i:-1]",
];

/// The 30 lines as pairs of linear forms.
pub const LINES: [(&str, &str); 30] = [
    ("x", "y"),
    ("z-w", "x-y"),
    ("z-w", "x+y"),
    ("z+i*w", "x+i*y"),
    ("z+i*w", "x-i*y"),
    ("z+w", "x-y"),
    ("z+w", "x+y"),
    ("z-i*w", "x+i*y"),
    ("z-i*w", "x-i*y"),
    ("z", "x"),
    ("y-w", "x-z"),
    ("y-w", "x+z"),
    ("y+i*w", "x+i*z"),
    ("y+i*w", "x-i*z"),
    ("y+w", "x-z"),
    ("y+w", "x+z"),
    ("y-i*w", "x+i*z"),
    ("y-i*w", "x-i*z"),
    ("w", "x"),
    ("y-z", "x-w"),
    ("y-z", "x+w"),
    ("y+i*z", "x+i*w"),
    ("y+i*z", "x-i*w"),
    ("y+z", "x-w"),
    ("y+z", "x+w"),
    ("y-i*z", "x+i*w"),
    ("y-i*z", "x-i*w"),
    ("z", "y"),
    ("w", "y"),
    ("w", "z"),
];

/// The ten fundamental quadrics, as displayed.
pub const QUADRICS: [&str; 10] = [
    "x^2 + y^2 + z^2 + w^2",
    "xw + zy",
    "xz + yw",
    "x^2 + y^2 - z^2 - w^2",
    "x^2 - y^2 - z^2 + w^2",
    "x^2 - y^2 + z^2 - w^2",
    "xw - yz",
    "xy + zw",
    "xy - zw",
    "xz - yw",
];

/// How each quadric is labelled as an image under T: `(source quadric, power)`
/// for the entries given that way, 1-based.
pub const QUADRIC_T_LABELS: [(usize, usize, u32); 8] =
    [(2, 1, 1), (3, 1, 2), (4, 1, 3), (5, 1, 4), (7, 6, 1), (8, 6, 2), (9, 1, 3), (10, 1, 4)];

/// The 24 sextic generators of the ideal of the 60 points.
pub const GENERATORS: [&str; 24] = [
    "xy(x^4-y^4)",
    "xz(z^4-x^4)",
    "xw(x^4-w^4)",
    "yz(y^4-z^4)",
    "yw(w^4-y^4)",
    "zw(z^4-w^4)",
    "xy(z^4-w^4)",
    "xz(y^4-w^4)",
    "xw(y^4-z^4)",
    "yz(x^4-w^4)",
    "yw(x^4-z^4)",
    "zw(x^4-y^4)",
    "yw(x^2y^2-z^2w^2)",
    "xw(x^2y^2-z^2w^2)",
    "yz(x^2y^2-z^2w^2)",
    "xz(x^2y^2-z^2w^2)",
    "zw(x^2z^2-y^2w^2)",
    "xw(x^2z^2-y^2w^2)",
    "yz(x^2z^2-y^2w^2)",
    "xy(x^2z^2-y^2w^2)",
    "zw(y^2z^2-x^2w^2)",
    "yw(y^2z^2-x^2w^2)",
    "xz(y^2z^2-x^2w^2)",
    "xy(y^2z^2-x^2w^2)",
];

/// The four extra sextics through the 56 non-coordinate points.
pub const EXTRA_SEXTICS: [&str; 4] = [
    "2x^2y^2z^2 - x^4w^2 - y^4w^2 - z^4w^2 + w^6",
    "2x^2y^2w^2 - x^4z^2 - y^4z^2 - w^4z^2 + z^6",
    "2x^2z^2w^2 - x^4y^2 - z^4y^2 - w^4y^2 + y^6",
    "2y^2z^2w^2 - y^4x^2 - z^4x^2 - w^4x^2 + x^6",
];

/// The cone through the 60 points with vertex (a:b:c:d): one summand
/// `scalar * generator(x,y,z,w) * coefficient(a,b,c,d)` per generator,
/// in the order of [`GENERATORS`].
pub const CONE_SUMMANDS: [(i64, &str); 24] = [
    (1, "cd(c^4-d^4)"),
    (1, "bd(b^4-d^4)"),
    (1, "bc(b^4-c^4)"),
    (1, "ad(a^4-d^4)"),
    (1, "ac(a^4-c^4)"),
    (1, "ab(a^4-b^4)"),
    (5, "cd(a^4-b^4)"),
    (5, "bd(c^4-a^4)"),
    (5, "bc(a^4-d^4)"),
    (5, "ad(b^4-c^4)"),
    (5, "ac(d^4-b^4)"),
    (5, "ab(c^4-d^4)"),
    (10, "ac(c^2d^2-a^2b^2)"),
    (10, "bc(a^2b^2-c^2d^2)"),
    (10, "ad(a^2b^2-c^2d^2)"),
    (10, "bd(c^2d^2-a^2b^2)"),
    (10, "ab(a^2c^2-b^2d^2)"),
    (10, "bc(b^2d^2-a^2c^2)"),
    (10, "ad(b^2d^2-a^2c^2)"),
    (10, "cd(a^2c^2-b^2d^2)"),
    (10, "ab(a^2d^2-b^2c^2)"),
    (10, "ac(b^2c^2-a^2d^2)"),
    (10, "bd(b^2c^2-a^2d^2)"),
    (10, "cd(a^2d^2-b^2c^2)"),
];

/// The plane sextic through the projected points as tabulated, in
/// the chart (ay-bx : az-cx : aw-dx) with coefficients in {a,b,c,d}. One
/// coefficient carries a sign error; see `C6_CORRECTION`.
pub const C6: &str = "b(a^4-b^4)tu(t^4-u^4) + c(a^4-c^4)su(u^4-s^4) + d(a^4-d^4)st(s^4-t^4) \
    + 5b(d^4-c^4)s^4tu + 5c(b^4-d^4)st^4u + 5d(c^4-b^4)stu^4 \
    + 10b(a^2d^2-b^2c^2)s^2t^3u + 10c(a^2d^2-b^2c^2)s^3t^2u + 10d(a^2c^2-b^2d^2)s^3tu^2 \
    + 10b(b^2d^2-a^2c^2)s^2tu^3 + 10c(a^2b^2-c^2d^2)st^2u^3 + 10d(c^2d^2-a^2b^2)st^3u^2";

/// The summand of `C6` whose sign is wrong, and its replacement.
pub const C6_CORRECTION: (&str, &str) = ("10c(a^2d^2-b^2c^2)s^3t^2u", "10c(b^2c^2-a^2d^2)s^3t^2u");

/// Images of the 30 lines under the projection from (a:b:c:d).
pub const PROJECTED_LINES: [&str; 30] = [
    "s",
    "(c^2-cd)s+(ac-ad-bc+bd)t+(-ab+b^2)u",
    "(c^2-cd)s+(ac-ad+bc-bd)t+(-ab-b^2)u",
    "(i*cd+c^2)s+(i*(ad+bc)+ac-bd)t+(i*ab-b^2)u",
    "(i*cd+c^2)s+(i*(ad-bc)+ac+bd)t+(i*ab+b^2)u",
    "(c^2+cd)s+(ac+ad-bc-bd)t+(ab-b^2)u",
    "(c^2+cd)s+(ac+ad+bc+bd)t+(ab+b^2)u",
    "(-i*cd+c^2)s+(-i*(ad-bc)+ac+bd)t+(-i*ab+b^2)u",
    "(-i*cd+c^2)s+(-i*(ad+bc)+ac-bd)t+(-i*ab-b^2)u",
    "cs+at",
    "(bc-cd)s+(-ad+bc)t+(-ab+bc)u",
    "(bc-cd)s+(-ad-bc)t+(-ab-bc)u",
    "(i*cd+bc)s+i*(ad-bc)t+(i*ab-bc)u",
    "(i*cd+bc)s+i*(ad+bc)t+(i*ab+bc)u",
    "(bc+cd)s+(ad+bc)t+(ab-bc)u",
    "(bc+cd)s+(ad-bc)t+(ab+bc)u",
    "(-i*cd+bc)s-i*(ad+bc)t+(-i*ab+bc)u",
    "(-i*cd+bc)s-i*(ad-bc)t+(-i*ab-bc)u",
    "cds+adt+abu",
    "(bc-c^2)s+(-ac+bd)t+(b^2-bc)u",
    "(bc-c^2)s+(-ac-bd)t+(-b^2+bc)u",
    "(i*c^2+bc)s+i*(ac-bd)t+(-i*b^2+bc)u",
    "(i*c^2+bc)s+i*(ac+bd)t+(i*b^2-bc)u",
    "(bc+c^2)s+(ac+bd)t+(b^2+bc)u",
    "(bc+c^2)s+(ac-bd)t+(-b^2-bc)u",
    "(-i*c^2+bc)s-i*(ac+bd)t+(-i*b^2-bc)u",
    "(-i*c^2+bc)s-i*(ac-bd)t+(i*b^2+bc)u",
    "t",
    "dt+bu",
    "u",
];

/// The six families of ten pairwise disjoint lines covering all 60 points.
pub const COVERS: [(char, [usize; 10]); 6] = [
    ('A', [1, 12, 13, 15, 18, 20, 23, 25, 26, 30]),
    ('B', [1, 11, 14, 16, 17, 21, 22, 24, 27, 30]),
    ('C', [3, 4, 6, 9, 10, 20, 22, 25, 27, 29]),
    ('D', [3, 5, 6, 8, 11, 13, 16, 18, 19, 28]),
    ('E', [2, 4, 7, 9, 12, 14, 15, 17, 19, 28]),
    ('F', [2, 5, 7, 8, 10, 21, 23, 24, 26, 29]),
];

/// The 24-point subset.
pub const Z24: [usize; 24] =
    [1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36];

/// The 18 lines carrying four points of the 24-point subset, with their family labels.
pub const L18: [(usize, &str); 18] = [
    (1, "AB"),
    (2, "EF"),
    (3, "CD"),
    (6, "CD"),
    (7, "EF"),
    (10, "CF"),
    (11, "BD"),
    (12, "AE"),
    (15, "AE"),
    (16, "BD"),
    (19, "DE"),
    (20, "AC"),
    (21, "BF"),
    (24, "BF"),
    (25, "AC"),
    (28, "DE"),
    (29, "CF"),
    (30, "AB"),
];

/// The six lines of family A inside the 18.
pub const L18_FAMILY_A: [usize; 6] = [1, 12, 15, 20, 25, 30];

/// The two rulings of the residual 36 points.
pub const RESIDUAL_RULINGS: [[usize; 6]; 2] = [[4, 9, 14, 17, 22, 27], [5, 8, 13, 18, 23, 26]];

/// The 12-point planar set in the plane w = 0.
pub const PLANAR_F12: [usize; 12] = [9, 10, 11, 12, 17, 18, 19, 20, 21, 22, 23, 24];

pub const PLANAR_TRIPLES: [[usize; 3]; 16] = [
    [9, 17, 23],
    [9, 18, 24],
    [9, 19, 21],
    [9, 20, 22],
    [10, 17, 22],
    [10, 18, 23],
    [10, 19, 24],
    [10, 20, 21],
    [11, 17, 21],
    [11, 18, 22],
    [11, 19, 23],
    [11, 20, 24],
    [12, 17, 24],
    [12, 18, 21],
    [12, 19, 22],
    [12, 20, 23],
];

pub const PLANAR_QUADRUPLES: [[usize; 4]; 3] = [[9, 10, 11, 12], [17, 18, 19, 20], [21, 22, 23, 24]];

/// Converts 1-based labels to 0-based indices.
pub fn indices(labels: &[usize]) -> Vec<usize> {
    labels.iter().map(|&l| l - 1).collect()
}
