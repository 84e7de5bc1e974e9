//! Frozen target invariants for the eight families: minimal Betti tables,
//! ideal-sheaf cohomology in the window 0..4, and Rao Hilbert functions.

use crate::cohomology::CohomologyTable;
use crate::modres::BettiTable;
use crate::numerology::FamilyId;

pub fn betti_table(f: FamilyId) -> BettiTable {
    let rows: &[(usize, i64, usize)] = match f {
        FamilyId::A => &[
            (0, 4, 2),
            (0, 5, 5),
            (0, 6, 1),
            (1, 6, 9),
            (1, 7, 3),
            (2, 7, 3),
            (2, 8, 3),
            (3, 9, 1),
        ],
        FamilyId::B => &[(0, 4, 1), (0, 5, 10), (1, 6, 18), (2, 7, 10), (3, 8, 2)],
        FamilyId::C => &[
            (0, 4, 2),
            (0, 5, 4),
            (0, 6, 3),
            (1, 6, 7),
            (1, 7, 8),
            (2, 7, 2),
            (2, 8, 7),
            (3, 9, 2),
        ],
        FamilyId::D => &[
            (0, 4, 1),
            (0, 5, 9),
            (0, 6, 1),
            (1, 6, 15),
            (1, 7, 3),
            (2, 7, 7),
            (2, 8, 3),
            (3, 8, 1),
            (3, 9, 1),
        ],
        FamilyId::E => &[
            (0, 4, 1),
            (0, 5, 9),
            (1, 6, 14),
            (1, 7, 1),
            (2, 7, 5),
            (2, 8, 2),
            (3, 9, 1),
        ],
        FamilyId::F => &[
            (0, 4, 1),
            (0, 5, 8),
            (0, 6, 3),
            (1, 6, 13),
            (1, 7, 8),
            (2, 7, 6),
            (2, 8, 7),
            (3, 8, 1),
            (3, 9, 2),
        ],
        FamilyId::G => &[(0, 4, 3), (0, 5, 3), (1, 6, 9), (2, 7, 5), (3, 8, 1)],
        FamilyId::H => &[
            (0, 4, 3),
            (0, 5, 3),
            (0, 6, 1),
            (1, 5, 1),
            (1, 6, 6),
            (1, 7, 3),
            (2, 7, 2),
            (2, 8, 3),
            (3, 9, 1),
        ],
    };
    BettiTable::from_pairs(rows)
}

/// h^i(I_S(n)) for n in 0..=4; everything not listed is zero there.
pub fn cohomology_window(f: FamilyId) -> CohomologyTable {
    let rows: &[(u8, i64, i64)] = match f {
        FamilyId::A => &[(2, 1, 2), (1, 3, 2), (1, 4, 1), (0, 4, 2)],
        FamilyId::B => &[(2, 1, 2), (1, 3, 2), (0, 4, 1)],
        FamilyId::C => &[
            (3, 0, 1),
            (2, 1, 1),
            (1, 2, 1),
            (1, 3, 3),
            (1, 4, 2),
            (0, 4, 2),
        ],
        FamilyId::D => &[
            (3, 0, 1),
            (2, 1, 1),
            (1, 2, 1),
            (1, 3, 3),
            (1, 4, 1),
            (0, 4, 1),
        ],
        FamilyId::E => &[
            (3, 0, 1),
            (2, 1, 1),
            (1, 2, 1),
            (1, 3, 3),
            (1, 4, 1),
            (0, 4, 1),
        ],
        FamilyId::F => &[(3, 0, 2), (1, 2, 2), (1, 3, 4), (1, 4, 2), (0, 4, 1)],
        FamilyId::G => &[(3, 0, 2), (2, 1, 1), (1, 3, 1), (0, 4, 3)],
        FamilyId::H => &[(3, 0, 3), (1, 2, 1), (1, 3, 2), (1, 4, 1), (0, 4, 3)],
    };
    CohomologyTable::from_rows(0, 4, rows)
}

/// Hilbert function of the Hartshorne-Rao module, as (degree, dim) pairs.
pub fn rao_hilbert_function(f: FamilyId) -> Vec<(i64, usize)> {
    match f {
        FamilyId::A => vec![(3, 2), (4, 1)],
        FamilyId::B => vec![(3, 2)],
        FamilyId::C => vec![(2, 1), (3, 3), (4, 2)],
        FamilyId::D | FamilyId::E => vec![(2, 1), (3, 3), (4, 1)],
        FamilyId::F => vec![(2, 2), (3, 4), (4, 2)],
        FamilyId::G => vec![(3, 1)],
        FamilyId::H => vec![(2, 1), (3, 2), (4, 1)],
    }
}

/// What the Rao-support extraction should find: Some(true) = a 6-secant
/// line (three forms, intersection length 6), Some(false) = certified no
/// line; None = the three-secant families where only containment data is
/// recorded.
pub fn six_secant_expectation(f: FamilyId) -> Option<bool> {
    match f {
        FamilyId::A | FamilyId::D | FamilyId::H => Some(true),
        FamilyId::B | FamilyId::E | FamilyId::G => Some(false),
        FamilyId::C | FamilyId::F => None,
    }
}
