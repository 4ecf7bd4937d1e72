//! A few named matroids.

use crate::element_set::ElementSet;
use crate::matroid::Matroid;

/// Lines of the Fano plane under the labelling with vertices 1, 2, 3, side midpoints 4
/// (on 12), 5 (on 13), 6 (on 23) and centre 7.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 4],
    [1, 3, 5],
    [1, 6, 7],
    [2, 3, 6],
    [2, 5, 7],
    [3, 4, 7],
    [4, 5, 6],
];

fn plane_avoiding(lines: &[[usize; 3]]) -> Matroid {
    let lines: Vec<ElementSet> = lines.iter().map(|l| l.iter().collect()).collect();
    let bases = ElementSet::full(7)
        .subsets_of_size(3)
        .filter(|s| !lines.contains(s))
        .collect();
    Matroid::from_trusted(7, bases)
}

/// The Fano matroid: triples of points not on a common line.
pub fn fano() -> Matroid {
    plane_avoiding(&FANO_LINES)
}

/// The non-Fano matroid: the Fano plane with the line `{4,5,6}` relaxed.
pub fn non_fano() -> Matroid {
    plane_avoiding(&FANO_LINES[..6])
}

/// The dual of the Fano matroid, a rank-4 matroid on seven elements.
pub fn dual_fano() -> Matroid {
    fano().dual()
}
