//! Canonical fixture wall spaces used throughout the tests and shipped as
//! JSON files under `fixtures/`.

use crate::wallspace::WallSpace;

/// One point, trivial wall only.
pub fn pt() -> WallSpace {
    WallSpace::from_sides(&["p"], &[])
}

/// Two points separated by one wall.
pub fn two() -> WallSpace {
    WallSpace::from_sides(&["a", "b"], &[&[0]])
}

/// Three points on a path: walls {a}|{b,c} and {a,b}|{c}.
pub fn p3() -> WallSpace {
    WallSpace::from_sides(&["a", "b", "c"], &[&[0], &[0, 1]])
}

/// A 6-cycle of the hexagonal tiling with its three wall directions.
pub fn hex6() -> WallSpace {
    WallSpace::from_sides(
        &["0", "1", "2", "3", "4", "5"],
        &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]],
    )
}
