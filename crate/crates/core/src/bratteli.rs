//! Bratteli diagrams of the snapshot towers and their K0 data.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{CylinderAlgebra, Level};
use crate::error::Result;
use crate::snf;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tower {
    /// `Ã_0 ⊆ Ã_1 ⊆ …`, levels `(0, l)`.
    A,
    /// `D̃_0^0 ⊆ D̃_1^1 ⊆ …`, levels `(l, l)`.
    Diagonal,
}

impl Tower {
    pub fn level(self, l: usize) -> Level {
        match self {
            Tower::A => Level { k: 0, l },
            Tower::Diagonal => Level { k: l, l },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BratteliDiagram {
    pub sizes: Vec<usize>,
    /// `incidence[l][j][i]`: multiplicity of atom `i` of step `l` inside
    /// atom `j` of step `l + 1`.
    pub incidence: Vec<Vec<Vec<u64>>>,
    /// The last two incidence matrices coincide.
    pub stable: bool,
}

impl BratteliDiagram {
    pub fn build(alg: &CylinderAlgebra, tower: Tower, depth: usize) -> Result<Self> {
        let mut sizes = Vec::with_capacity(depth + 1);
        let mut incidence = Vec::with_capacity(depth);
        for l in 0..=depth {
            sizes.push(alg.atoms(tower.level(l))?.len());
        }
        for l in 0..depth {
            let (coarse, fine) = (tower.level(l), tower.level(l + 1));
            let fine_atoms = alg.atoms(fine)?;
            let mut m = alloc::vec![alloc::vec![0u64; sizes[l]]; sizes[l + 1]];
            for (i, atom) in alg.atoms(coarse)?.iter().enumerate() {
                let up = alg.promote(&alg.atom_indicator(coarse, atom.clone())?, fine)?;
                for a in up.support() {
                    let j = fine_atoms
                        .binary_search(a)
                        .expect("promoted atoms belong to the level");
                    m[j][i] += 1;
                }
            }
            incidence.push(m);
        }
        let stable = depth >= 2 && incidence[depth - 1] == incidence[depth - 2];
        Ok(BratteliDiagram {
            sizes,
            incidence,
            stable,
        })
    }

    /// The repeating incidence matrix, if any.
    pub fn stationary_matrix(&self) -> Option<&Vec<Vec<u64>>> {
        if self.stable {
            self.incidence.last()
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct K0Presentation {
    pub sizes: Vec<usize>,
    pub maps: Vec<Vec<Vec<u64>>>,
    /// No stationary matrix was found; only the finite system is reported.
    pub truncated: bool,
    pub stationary: Option<Vec<Vec<u64>>>,
    pub smith_diagonal: Option<Vec<i64>>,
    /// `Z^rank` when the stationary matrix is invertible over `Z`.
    pub rank: Option<usize>,
    pub order_unit: Option<Vec<i64>>,
}

impl K0Presentation {
    pub fn from_diagram(d: &BratteliDiagram) -> Self {
        let mut out = K0Presentation {
            sizes: d.sizes.clone(),
            maps: d.incidence.clone(),
            truncated: true,
            stationary: None,
            smith_diagonal: None,
            rank: None,
            order_unit: None,
        };
        // Constant size one with multiplicity-one maps is stationary from the start.
        let trivial = d.sizes.iter().all(|s| *s == 1)
            && d.incidence
                .iter()
                .all(|m| m == &alloc::vec![alloc::vec![1]]);
        let matrix = if trivial {
            Some(alloc::vec![alloc::vec![1u64]])
        } else {
            d.stationary_matrix().cloned()
        };
        if let Some(b) = matrix {
            let signed: Vec<Vec<i64>> = b
                .iter()
                .map(|r| r.iter().map(|v| *v as i64).collect())
                .collect();
            let diag = snf::invariant_factors(&signed);
            out.truncated = false;
            if snf::is_unimodular(&signed) {
                out.rank = Some(b.len());
                out.order_unit = Some(alloc::vec![1; b.len()]);
            }
            out.smith_diagonal = Some(diag);
            out.stationary = Some(b);
        }
        out
    }

    /// `"Z^n"`, `"Z"`, or a description of the unresolved limit.
    pub fn describe(&self) -> String {
        match (self.rank, &self.stationary) {
            (Some(1), _) => "Z".into(),
            (Some(n), _) => alloc::format!("Z^{n}"),
            (None, Some(_)) => {
                "stationary limit with non-invertible matrix (no closed form claimed)".into()
            }
            (None, None) => "non-stationary system (truncated, no closed form claimed)".into(),
        }
    }
}
