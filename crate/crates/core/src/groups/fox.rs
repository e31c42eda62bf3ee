//! Alexander polynomials by Fox calculus.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::det::determinant;
use super::snf::{smith_normal_form, IntMatrix};
use super::{abelianization, FgAbelian, IntPolynomial, Presentation};
use crate::error::{Error, Result};
use crate::word::Word;

const MAX_MINORS: usize = 20_000;

/// Alexander polynomial of a group with infinite cyclic abelianization.
///
/// Fox derivatives are pushed through the abelianization onto `Z[t, t^-1]`;
/// the result is the gcd of the maximal minors of that matrix, normalised to
/// lowest degree 0 with positive leading coefficient.
pub fn fox_alexander(p: &Presentation) -> Result<IntPolynomial> {
    p.validate()?;
    if abelianization(p) != FgAbelian::free(1) {
        return Err(Error::Domain(format!(
            "abelianization is {}, not Z",
            abelianization(p)
        )));
    }
    let g = p.generators;
    let phi = abelianization_map(p);

    let matrix: Vec<Vec<IntPolynomial>> = p
        .relators
        .iter()
        .map(|r| {
            let row: Vec<BTreeMap<i64, BigInt>> = (0..g).map(|j| fox_derivative(r, j, &phi)).collect();
            let low = row.iter().filter_map(|m| m.keys().next().copied()).min().unwrap_or(0);
            row.into_iter().map(|m| laurent_to_poly(&m, low)).collect()
        })
        .collect();

    let k = g - 1;
    let row_sets = combinations(p.relators.len(), k);
    if row_sets.len().saturating_mul(g) > MAX_MINORS {
        return Err(Error::Resource(format!(
            "{} maximal minors exceed the bound {MAX_MINORS}",
            row_sets.len().saturating_mul(g)
        )));
    }
    let mut acc = IntPolynomial::default();
    for rows in &row_sets {
        for skip in 0..g {
            let sub: Vec<Vec<IntPolynomial>> = rows
                .iter()
                .map(|&i| (0..g).filter(|&j| j != skip).map(|j| matrix[i][j].clone()).collect())
                .collect();
            let minor = determinant(sub);
            if !minor.is_zero() {
                acc = acc.gcd(&minor);
            }
        }
    }
    Ok(acc.normalized())
}

/// Primitive generator of the kernel of the exponent matrix: the images of
/// the generators under the abelianization onto `Z`.
fn abelianization_map(p: &Presentation) -> Vec<i64> {
    let g = p.generators;
    let m = p.exponent_matrix();
    // pick g-1 independent rows greedily
    let mut basis: IntMatrix = Vec::new();
    for row in &m {
        let mut trial = basis.clone();
        trial.push(row.clone());
        if rank(&trial) == trial.len() {
            basis = trial;
        }
        if basis.len() == g - 1 {
            break;
        }
    }
    // generalised cross product of the basis rows
    let mut e: Vec<BigInt> = (0..g)
        .map(|j| {
            let sub: IntMatrix = basis
                .iter()
                .map(|r| (0..g).filter(|&c| c != j).map(|c| r[c].clone()).collect())
                .collect();
            let d = determinant(sub);
            if j % 2 == 1 {
                -d
            } else {
                d
            }
        })
        .collect();
    let gcd = e.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
    let flip = e.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in &mut e {
        *x = &*x / &gcd;
        if flip {
            *x = -&*x;
        }
    }
    e.iter().map(|x| i64::try_from(x).expect("meridian images fit in i64")).collect()
}

fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).iter().filter(|d| !d.is_zero()).count()
}

fn fox_derivative(r: &Word, j: usize, phi: &[i64]) -> BTreeMap<i64, BigInt> {
    let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
    let mut prefix = 0i64;
    for l in r.letters() {
        let e = phi[l.gen];
        if l.gen == j {
            if l.inverse {
                *out.entry(prefix - e).or_default() -= 1;
            } else {
                *out.entry(prefix).or_default() += 1;
            }
        }
        prefix += if l.inverse { -e } else { e };
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn laurent_to_poly(m: &BTreeMap<i64, BigInt>, low: i64) -> IntPolynomial {
    let Some(&high) = m.keys().next_back() else {
        return IntPolynomial::default();
    };
    let mut v = vec![BigInt::zero(); (high - low + 1) as usize];
    for (&k, c) in m {
        v[(k - low) as usize] = c.clone();
    }
    IntPolynomial::new(v)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::BandedUnlink;
    use crate::groups::presentation_from_kirby;
    use crate::kirby::KirbyDiagram;

    fn complement(d: &BandedUnlink) -> Presentation {
        presentation_from_kirby(&KirbyDiagram::handle_decomposition(d).unwrap(), false)
    }

    #[test]
    fn spun_knots() {
        assert_eq!(
            fox_alexander(&complement(&BandedUnlink::spun_trefoil())).unwrap(),
            IntPolynomial::from_i64(&[1, -1, 1])
        );
        assert_eq!(
            fox_alexander(&complement(&BandedUnlink::spun_figure_eight())).unwrap(),
            IntPolynomial::from_i64(&[1, -3, 1])
        );
        assert_eq!(
            fox_alexander(&complement(&BandedUnlink::unknotted_sphere())).unwrap(),
            IntPolynomial::from_i64(&[1])
        );
        assert_eq!(
            fox_alexander(&complement(&BandedUnlink::cable_diagram(4).unwrap())).unwrap(),
            IntPolynomial::from_i64(&[1])
        );
    }

    #[test]
    fn connected_sum_multiplies() {
        let t = BandedUnlink::spun_trefoil();
        let f = BandedUnlink::spun_figure_eight();
        let tf = fox_alexander(&complement(&t.connected_sum(&f).unwrap())).unwrap();
        assert_eq!(tf, IntPolynomial::from_i64(&[1, -1, 1]) * IntPolynomial::from_i64(&[1, -3, 1]));
        let tt = fox_alexander(&complement(&t.connected_sum(&t).unwrap())).unwrap();
        assert_eq!(tt, IntPolynomial::from_i64(&[1, -2, 3, -2, 1]));
    }

    #[test]
    fn rejects_non_knot_groups() {
        assert!(matches!(fox_alexander(&Presentation::free(2)), Err(Error::Domain(_))));
        let z3 = Presentation::new(1, vec![Word::from_signed(&[(0, 1), (0, 1), (0, 1)])]).unwrap();
        assert!(fox_alexander(&z3).is_err());
    }

    #[test]
    fn non_meridian_generator() {
        // trefoil with an extra generator z = x y, so z maps to t^2
        let mut p = complement(&BandedUnlink::spun_trefoil());
        p.generators = 3;
        p.relators.push(Word::from_signed(&[(2, 1), (1, -1), (0, -1)]));
        assert_eq!(abelianization_map(&p), vec![1, 1, 2]);
        assert_eq!(fox_alexander(&p).unwrap(), IntPolynomial::from_i64(&[1, -1, 1]));
    }
}
