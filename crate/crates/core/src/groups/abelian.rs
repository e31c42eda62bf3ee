use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::snf::{smith_normal_form, IntMatrix};
use crate::error::Error;

/// Finitely generated abelian group `Z^rank + Z/d1 + ... + Z/dk` with
/// `d1 | d2 | ... | dk` and every `di >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FgAbelian {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FgAbelian {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelian { rank, torsion: Vec::new() }
    }

    /// Cokernel of the map `Z^cols <- Z^rows` whose image is spanned by the rows of `m`.
    pub fn cokernel(m: &IntMatrix, cols: usize) -> Self {
        let diag = smith_normal_form(m);
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        FgAbelian {
            rank: cols - nonzero,
            torsion: diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect(),
        }
    }

    /// Canonical form of `Z^rank` plus cyclic groups of the given orders
    /// (zero orders count as free summands).
    pub fn from_cyclic(rank: usize, orders: &[BigInt]) -> Self {
        let n = orders.len();
        let m: IntMatrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { orders[i].clone() } else { BigInt::zero() }).collect())
            .collect();
        let mut g = Self::cokernel(&m, n);
        g.rank += rank;
        g
    }

    pub fn direct_sum(&self, other: &FgAbelian) -> FgAbelian {
        let orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        Self::from_cyclic(self.rank + other.rank, &orders)
    }

    /// `m`-fold direct sum.
    pub fn power(&self, m: usize) -> FgAbelian {
        let orders: Vec<BigInt> =
            std::iter::repeat_n(self.torsion.iter().cloned(), m).flatten().collect();
        Self::from_cyclic(self.rank * m, &orders)
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Number of invariant factors of the torsion part.
    pub fn torsion_rank(&self) -> usize {
        self.torsion.len()
    }

    /// Group order, or `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for FgAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl FromStr for FgAbelian {
    type Err = Error;

    /// Parses the canonical string; summands may come in any order and are
    /// re-canonicalised.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let mut rank = 0;
        let mut orders = Vec::new();
        for part in s.split('+').map(str::trim) {
            let bad = || Error::Domain(format!("bad abelian group summand `{part}`"));
            if part == "Z" {
                rank += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                rank += r.parse::<usize>().map_err(|_| bad())?;
            } else if let Some(d) = part.strip_prefix("Z/") {
                orders.push(d.parse::<BigInt>().map_err(|_| bad())?);
            } else {
                return Err(bad());
            }
        }
        Ok(Self::from_cyclic(rank, &orders))
    }
}
