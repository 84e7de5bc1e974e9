//! Closed-form numerical formulas for surfaces in P^4 (adjunction,
//! Riemann-Roch, the double point formula, liaison bookkeeping, multisecant
//! counts) and the classification table of the eight degree-10 families.

use crate::{Error, Result};

/// Arithmetic genus of a curve on a smooth surface: 2p_a - 2 = C^2 + C.K.
pub fn adjunction_genus(c2: i64, ck: i64) -> Result<i64> {
    let s = c2 + ck;
    if s % 2 != 0 {
        return Err(Error::Precondition(format!("C^2 + C.K = {} is odd", s)));
    }
    Ok(s / 2 + 1)
}

/// p_a(C ∪ D) = p_a(C) + p_a(D) + C.D - 1.
pub fn union_genus(pa_c: i64, pa_d: i64, cd: i64) -> i64 {
    pa_c + pa_d + cd - 1
}

/// Riemann-Roch: chi(O_S(C)) = (C^2 - C.K)/2 + chi(O_S).
pub fn chi_twist(c2: i64, ck: i64, chi_s: i64) -> i64 {
    (c2 - ck) / 2 + chi_s
}

/// Double point formula for smooth surfaces in P^4:
/// d^2 - 10d - 5 H.K - 2 K^2 + 12 chi = 0, solved for K^2.
pub fn double_point_k2(d: i64, hk: i64, chi: i64) -> Result<i64> {
    let num = d * d - 10 * d - 5 * hk + 12 * chi;
    if num % 2 != 0 {
        return Err(Error::Precondition(
            "double point formula gives a non-integer K^2".into(),
        ));
    }
    Ok(num / 2)
}

/// H.K from the sectional genus: pi = (d + H.K)/2 + 1.
pub fn hk_from_genus(d: i64, pi: i64) -> i64 {
    2 * pi - 2 - d
}

/// Le Barz multisecant numbers for smooth surfaces of degree 10 in P^4:
/// (number of 5-secants meeting a general plane, number of 6-secants plus
/// (-1)-lines). Evaluated table; out-of-table input is an error.
pub fn lebarz_counts(pi: i64, chi: i64) -> Result<(i64, i64)> {
    match (pi, chi) {
        (9, 1) => Ok((6, 7)),
        (9, 2) => Ok((12, 3)),
        (9, 3) => Ok((18, 3)),
        (10, 3) => Ok((2, 2)),
        (10, 4) => Ok((6, 1)),
        _ => Err(Error::Precondition(format!(
            "no multisecant table entry for (pi, chi) = ({}, {})",
            pi, chi
        ))),
    }
}

/// Liaison: pi(S) - pi(S') = (m + n - 4)(d(S) - d(S'))/2, solved for pi(S').
pub fn liaison_transform(d: i64, pi: i64, m: i64, n: i64, d_residual: i64) -> Result<i64> {
    let num = (m + n - 4) * (d - d_residual);
    if num % 2 != 0 {
        return Err(Error::Precondition(
            "liaison genus relation gives a non-integer".into(),
        ));
    }
    Ok(pi - num / 2)
}

/// chi(S') = chi(V ∩ V') - chi(O_S(m + n - 5)).
pub fn chi_relation(chi_ci: i64, chi_s_twist: i64) -> i64 {
    chi_ci - chi_s_twist
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::A,
        FamilyId::B,
        FamilyId::C,
        FamilyId::D,
        FamilyId::E,
        FamilyId::F,
        FamilyId::G,
        FamilyId::H,
    ];

    pub fn letter(&self) -> char {
        match self {
            FamilyId::A => 'A',
            FamilyId::B => 'B',
            FamilyId::C => 'C',
            FamilyId::D => 'D',
            FamilyId::E => 'E',
            FamilyId::F => 'F',
            FamilyId::G => 'G',
            FamilyId::H => 'H',
        }
    }

    pub fn from_letter(c: char) -> Result<FamilyId> {
        match c.to_ascii_uppercase() {
            'A' => Ok(FamilyId::A),
            'B' => Ok(FamilyId::B),
            'C' => Ok(FamilyId::C),
            'D' => Ok(FamilyId::D),
            'E' => Ok(FamilyId::E),
            'F' => Ok(FamilyId::F),
            'G' => Ok(FamilyId::G),
            'H' => Ok(FamilyId::H),
            _ => Err(Error::Precondition(format!("unknown family '{}'", c))),
        }
    }
}

/// One row of the classification table for degree 10, sectional genus 9/10.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDescriptor {
    pub family: FamilyId,
    pub pi: i64,
    pub chi: i64,
    pub n6: i64,
    pub n5: i64,
    pub birational_type: &'static str,
    pub minus_one_lines: i64,
    /// recorded as metadata only; not reproduced computationally
    pub hilbert_scheme_dim: i64,
    pub construction: &'static str,
}

pub fn family_descriptor(f: FamilyId) -> FamilyDescriptor {
    match f {
        FamilyId::A => FamilyDescriptor {
            family: f,
            pi: 9,
            chi: 1,
            n6: 1,
            n5: 6,
            birational_type: "rational",
            minus_one_lines: 6,
            hilbert_scheme_dim: 42,
            construction: "linked (4,4) to three planes through a line union a cubic scroll with that directrix",
        },
        FamilyId::B => FamilyDescriptor {
            family: f,
            pi: 9,
            chi: 1,
            n6: 0,
            n5: 6,
            birational_type: "rational",
            minus_one_lines: 7,
            hilbert_scheme_dim: 42,
            construction: "cokernel presentation 2*Omega^3(3) -> 2*Omega^1(1) + O",
        },
        FamilyId::C => FamilyDescriptor {
            family: f,
            pi: 9,
            chi: 2,
            n6: 3,
            n5: 12,
            birational_type: "K3",
            minus_one_lines: 0,
            hilbert_scheme_dim: 45,
            construction: "linked (4,4) to three planes union a triple structure on a plane",
        },
        FamilyId::D => FamilyDescriptor {
            family: f,
            pi: 9,
            chi: 2,
            n6: 1,
            n5: 12,
            birational_type: "K3",
            minus_one_lines: 2,
            hilbert_scheme_dim: 44,
            construction: "bilinked (4,4)+(4,5) to plane union quadric union cubic scroll",
        },
        FamilyId::E => FamilyDescriptor {
            family: f,
            pi: 9,
            chi: 2,
            n6: 0,
            n5: 12,
            birational_type: "elliptic",
            minus_one_lines: 3,
            hilbert_scheme_dim: 44,
            construction: "bilinked (4,4)+(4,5) to quadruple plane structure union quadric",
        },
        FamilyId::F => FamilyDescriptor {
            family: f,
            pi: 9,
            chi: 3,
            n6: 3,
            n5: 18,
            birational_type: "general type",
            minus_one_lines: 0,
            hilbert_scheme_dim: 47,
            construction: "bilinked (4,4)+(4,5) to cubic Del Pezzo union three planes",
        },
        FamilyId::G => FamilyDescriptor {
            family: f,
            pi: 10,
            chi: 3,
            n6: 0,
            n5: 2,
            birational_type: "elliptic",
            minus_one_lines: 2,
            hilbert_scheme_dim: 51,
            construction: "linked (4,4) to quartic Del Pezzo union quadric",
        },
        FamilyId::H => FamilyDescriptor {
            family: f,
            pi: 10,
            chi: 4,
            n6: 1,
            n5: 6,
            birational_type: "general type",
            minus_one_lines: 0,
            hilbert_scheme_dim: 53,
            construction: "linked (4,4) to cubic Del Pezzo union three planes through a line on it",
        },
    }
}

/// Classification of smooth degree-10 surfaces by sectional genus. For
/// pi in {9, 10} this returns the family rows; the other possible genera
/// get a one-line summary.
pub enum Classification {
    Families(Vec<FamilyDescriptor>),
    Summary(&'static str),
}

pub fn classify_d10(pi: i64) -> Result<Classification> {
    match pi {
        6 => Ok(Classification::Summary("abelian or bielliptic")),
        8 => Ok(Classification::Summary(
            "Enriques surface with four (-1)-lines, or a rational surface",
        )),
        9 => Ok(Classification::Families(
            FamilyId::ALL.iter().map(|&f| family_descriptor(f)).filter(|d| d.pi == 9).collect(),
        )),
        10 => Ok(Classification::Families(
            FamilyId::ALL.iter().map(|&f| family_descriptor(f)).filter(|d| d.pi == 10).collect(),
        )),
        11 => Ok(Classification::Summary(
            "linked to an elliptic quintic scroll (on a cubic hypersurface), or to a Bordiga surface (no cubic)",
        )),
        12 => Ok(Classification::Summary("linked to a degenerate quadric surface")),
        16 => Ok(Classification::Summary("complete intersection of a quadric and a quintic")),
        _ => Err(Error::Precondition(format!("no degree-10 classification for pi = {}", pi))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceNumerics {
    pub d: i64,
    pub hk: i64,
    pub k2: i64,
    pub pi: i64,
    pub chi: i64,
    pub n5: i64,
    pub n6: i64,
}

impl SurfaceNumerics {
    pub fn for_family(f: FamilyId) -> SurfaceNumerics {
        let desc = family_descriptor(f);
        let d = 10;
        let hk = hk_from_genus(d, desc.pi);
        SurfaceNumerics {
            d,
            hk,
            k2: double_point_k2(d, hk, desc.chi).unwrap(),
            pi: desc.pi,
            chi: desc.chi,
            n5: desc.n5,
            n6: desc.n6,
        }
    }

    pub fn adjunction_consistent(&self) -> bool {
        adjunction_genus(self.d, self.hk) == Ok(self.pi)
    }

    pub fn double_point_consistent(&self) -> bool {
        self.d * self.d - 10 * self.d - 5 * self.hk - 2 * self.k2 + 12 * self.chi == 0
    }
}
