//! Homology of fibers of cables of twist-spun knots.
//!
//! The n-twist spin of a knot k fibers with fiber the punctured n-fold
//! cyclic branched cover of k, and its degree-m cable fibers with fiber a
//! punctured m-fold connected sum of that cover. First homology of the
//! cover is computed exactly from a Seifert matrix and checked against the
//! resultant of the Alexander polynomial with `1 + t + ... + t^(n-1)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groups::det::determinant;
use crate::groups::{FgAbelian, IntMatrix, IntPolynomial};

/// Square integer matrix of even size with `det(V - V^T) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix(IntMatrix);

impl SeifertMatrix {
    pub fn new(v: IntMatrix) -> Result<Self> {
        let n = v.len();
        if v.iter().any(|r| r.len() != n) || !n.is_multiple_of(2) {
            return Err(Error::Domain(format!("Seifert matrix must be square of even size, got {n} rows")));
        }
        let skew: IntMatrix = (0..n)
            .map(|i| (0..n).map(|j| &v[i][j] - &v[j][i]).collect())
            .collect();
        let d = determinant(skew);
        if !d.is_one() {
            return Err(Error::Domain(format!("det(V - V^T) = {d}, not 1")));
        }
        Ok(SeifertMatrix(v))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(crate::groups::snf::int_matrix(rows))
    }

    pub fn unknot() -> Self {
        SeifertMatrix(Vec::new())
    }

    pub fn trefoil() -> Self {
        Self::torus_2(3).unwrap()
    }

    pub fn figure_eight() -> Self {
        Self::from_i64(&[&[1, 1], &[0, -1]]).unwrap()
    }

    /// Torus knot `T(2, q)` for odd `q >= 3`: `-1` on the diagonal and `1` just above it.
    pub fn torus_2(q: usize) -> Result<Self> {
        if q < 3 || q.is_multiple_of(2) {
            return Err(Error::Domain(format!("T(2,{q}) needs odd q >= 3")));
        }
        let h = q - 1;
        let v = (0..h)
            .map(|i| {
                (0..h)
                    .map(|j| BigInt::from(if i == j { -1 } else if j == i + 1 { 1 } else { 0 }))
                    .collect()
            })
            .collect();
        Self::new(v)
    }

    /// Twist knot with `m` full twists, `V = [[-1, 1], [0, m]]`.
    pub fn twist(m: i64) -> Result<Self> {
        Self::from_i64(&[&[-1, 1], &[0, m]])
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    fn transpose(&self) -> IntMatrix {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.0[j][i].clone()).collect()).collect()
    }

    /// Change of Seifert-surface basis `P V P^T`.
    pub fn congruent(&self, p: &IntMatrix) -> Result<Self> {
        let n = self.size();
        let mul = |a: &IntMatrix, b: &IntMatrix| -> IntMatrix {
            (0..n)
                .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
                .collect()
        };
        let pt: IntMatrix = (0..n).map(|i| (0..n).map(|j| p[j][i].clone()).collect()).collect();
        Self::new(mul(&mul(p, &self.0), &pt))
    }

    /// `det(t V - V^T)`, normalised.
    pub fn alexander(&self) -> IntPolynomial {
        let vt = self.transpose();
        let m: Vec<Vec<IntPolynomial>> = (0..self.size())
            .map(|i| {
                (0..self.size())
                    .map(|j| IntPolynomial::new(vec![-vt[i][j].clone(), self.0[i][j].clone()]))
                    .collect()
            })
            .collect();
        determinant(m).normalized()
    }
}

/// A named knot from the built-in catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnotName {
    Unknot,
    Trefoil,
    FigureEight,
    /// `T(2, q)`.
    Torus2(usize),
    /// Twist knot with the given number of full twists.
    Twist(i64),
}

impl KnotName {
    pub fn seifert(self) -> Result<SeifertMatrix> {
        match self {
            KnotName::Unknot => Ok(SeifertMatrix::unknot()),
            KnotName::Trefoil => Ok(SeifertMatrix::trefoil()),
            KnotName::FigureEight => Ok(SeifertMatrix::figure_eight()),
            KnotName::Torus2(q) => SeifertMatrix::torus_2(q),
            KnotName::Twist(m) => SeifertMatrix::twist(m),
        }
    }

    pub fn catalogue() -> Vec<KnotName> {
        vec![
            KnotName::Trefoil,
            KnotName::FigureEight,
            KnotName::Torus2(5),
            KnotName::Torus2(7),
            KnotName::Twist(2),
            KnotName::Twist(-2),
            KnotName::Twist(3),
        ]
    }
}

impl fmt::Display for KnotName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotName::Unknot => write!(f, "unknot"),
            KnotName::Trefoil => write!(f, "trefoil"),
            KnotName::FigureEight => write!(f, "figure-eight"),
            KnotName::Torus2(q) => write!(f, "torus(2,{q})"),
            KnotName::Twist(m) => write!(f, "twist({m})"),
        }
    }
}

impl FromStr for KnotName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("unknown knot `{s}`"));
        let inner = |pre: &str| s.strip_prefix(pre).and_then(|r| r.strip_suffix(')'));
        match s {
            "unknot" => Ok(KnotName::Unknot),
            "trefoil" | "3_1" => Ok(KnotName::Trefoil),
            "figure-eight" | "figure8" | "4_1" => Ok(KnotName::FigureEight),
            _ => {
                if let Some(q) = inner("torus(2,") {
                    let q = q.parse().map_err(|_| bad())?;
                    SeifertMatrix::torus_2(q)?;
                    Ok(KnotName::Torus2(q))
                } else if let Some(m) = inner("twist(") {
                    Ok(KnotName::Twist(m.parse().map_err(|_| bad())?))
                } else {
                    Err(bad())
                }
            }
        }
    }
}

/// Order of the first homology of a branched cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoverOrder {
    Finite(BigInt),
    Infinite,
}

impl CoverOrder {
    pub fn of(h: &FgAbelian) -> Self {
        h.order().map_or(CoverOrder::Infinite, CoverOrder::Finite)
    }
}

/// `|Res(Delta, 1 + t + ... + t^(n-1))|`, or infinite when it vanishes.
pub fn order_via_alexander(delta: &IntPolynomial, n: usize) -> Result<CoverOrder> {
    if n < 2 {
        return Err(Error::Precondition(format!("cover degree {n} < 2")));
    }
    let cyclotomic = IntPolynomial::from_i64(&vec![1; n]);
    let r = delta.resultant(&cyclotomic).abs();
    Ok(if r.is_zero() { CoverOrder::Infinite } else { CoverOrder::Finite(r) })
}

/// Presentation matrix of `H_1` of the n-fold branched cover: an
/// `(n-1) x (n-1)` block matrix with `V + V^T` on the diagonal, `-V` above
/// it and `-V^T` below.
pub fn cover_presentation(v: &SeifertMatrix, n: usize) -> IntMatrix {
    let h = v.size();
    let vt = v.transpose();
    let size = h * (n - 1);
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for b in 0..n - 1 {
        for i in 0..h {
            for j in 0..h {
                m[b * h + i][b * h + j] = &v.0[i][j] + &vt[i][j];
                if b + 1 < n - 1 {
                    m[b * h + i][(b + 1) * h + j] = -&v.0[i][j];
                    m[(b + 1) * h + i][b * h + j] = -&vt[i][j];
                }
            }
        }
    }
    m
}

/// First homology of the n-fold cyclic branched cover, cross-checked
/// against the resultant order.
pub fn branched_cover_homology(v: &SeifertMatrix, n: usize) -> Result<FgAbelian> {
    if n < 2 {
        return Err(Error::Precondition(format!("cover degree {n} < 2")));
    }
    if v.size() == 0 {
        return Ok(FgAbelian::trivial());
    }
    let m = cover_presentation(v, n);
    let h = FgAbelian::cokernel(&m, m.len());
    let oracle = order_via_alexander(&v.alexander(), n)?;
    if CoverOrder::of(&h) != oracle {
        return Err(Error::Consistency(format!(
            "cover homology {h} disagrees with resultant order {oracle:?} for n = {n}"
        )));
    }
    Ok(h)
}

/// Checks the cover-matrix convention against the resultant on the whole
/// built-in catalogue for `n = 2..=max_n`.
pub fn convention_self_test(max_n: usize) -> Result<()> {
    for k in KnotName::catalogue() {
        let v = k.seifert()?;
        for n in 2..=max_n {
            branched_cover_homology(&v, n)?;
        }
    }
    Ok(())
}

/// Degree-`m` cable of the `n`-twist spin of a knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CableOfTwistSpun {
    pub twist: usize,
    pub degree: usize,
    pub knot: SeifertMatrix,
}

impl CableOfTwistSpun {
    pub fn new(twist: usize, degree: usize, knot: SeifertMatrix) -> Result<Self> {
        if twist < 2 {
            return Err(Error::Precondition(format!("twist {twist} < 2")));
        }
        if degree < 1 {
            return Err(Error::Precondition("cable degree must be >= 1".into()));
        }
        Ok(CableOfTwistSpun { twist, degree, knot })
    }
}

/// `H_1` of the fiber: the `m`-fold direct sum of the cover homology.
pub fn cable_fiber_homology(c: &CableOfTwistSpun) -> Result<FgAbelian> {
    Ok(branched_cover_homology(&c.knot, c.twist)?.power(c.degree))
}

/// True when the fiber homology certifies the knot is not ribbon: a fibered
/// ribbon 2-knot has fiber a punctured `#_q S^1 x S^2`, whose `H_1` is free.
pub fn ribbon_obstruction(h: &FgAbelian) -> bool {
    !h.torsion.is_empty()
}

/// Whether the degree-`m1` and degree-`m2` cables have different fiber homology.
pub fn distinguish_cables(m1: usize, m2: usize, n: usize, v: &SeifertMatrix) -> Result<bool> {
    if m1 == m2 {
        return Err(Error::Precondition("cable degrees must differ".into()));
    }
    let h1 = cable_fiber_homology(&CableOfTwistSpun::new(n, m1, v.clone())?)?;
    let h2 = cable_fiber_homology(&CableOfTwistSpun::new(n, m2, v.clone())?)?;
    Ok(h1 != h2)
}
