//! Group-theoretic invariants of 2-knot complements.

mod abelian;
pub mod det;
mod fox;
mod hom;
mod poly;
pub mod snf;
pub mod tietze;

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::kirby::KirbyDiagram;
use crate::diagram::BandedUnlink;
use crate::word::{Letter, Word};

pub use abelian::FgAbelian;
pub use fox::fox_alexander;
pub use hom::{hom_count, MAX_HOM_GENERATORS};
pub use poly::IntPolynomial;
pub use snf::{smith_normal_form, IntMatrix};

/// Finite presentation `<x_0, ..., x_{g-1} | relators>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: usize, relators: Vec<Word>) -> Result<Self> {
        let p = Presentation { generators, relators };
        p.validate()?;
        Ok(p)
    }

    pub fn free(generators: usize) -> Self {
        Presentation { generators, relators: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        for r in &self.relators {
            if let Some(g) = r.max_gen() {
                if g >= self.generators {
                    return Err(Error::Structural(format!(
                        "relator {r} uses generator x{g} of {}",
                        self.generators
                    )));
                }
            }
        }
        Ok(())
    }

    /// `generators - relators`.
    pub fn deficiency(&self) -> i64 {
        self.generators as i64 - self.relators.len() as i64
    }

    /// Relator-by-generator matrix of exponent sums.
    pub fn exponent_matrix(&self) -> IntMatrix {
        self.relators
            .iter()
            .map(|r| (0..self.generators).map(|g| BigInt::from(r.exponent_of(g))).collect())
            .collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..self.generators).map(|g| format!("x{g}")).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

/// Fundamental group of the complement: one generator per dotted circle and
/// one relator per 2-handle. The Gluck circle's relator is added only when
/// `include_gluck` is set.
pub fn presentation_from_kirby(kd: &KirbyDiagram, include_gluck: bool) -> Presentation {
    let mut relators: Vec<Word> = kd.handles.iter().map(|h| h.attaching.clone()).collect();
    if include_gluck {
        if let Some(g) = kd.gluck_circle {
            relators.push(g.attaching());
        }
    }
    Presentation { generators: kd.dotted.len(), relators }
}

/// Fundamental group of the complement of any diagram, orientable or not.
///
/// Meridians are oriented along a spanning forest of the band graph. A band
/// closing an orientation-reversing cycle identifies its meridians up to
/// inversion. For 2-knots this agrees with the Kirby presentation.
pub fn complement_presentation(d: &BandedUnlink) -> Result<Presentation> {
    d.validate()?;
    let n = d.num_components();
    let mut colour: Vec<Option<u8>> = vec![None; n];
    for root in 0..n {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(0);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for b in &d.bands {
                let Some(w) = b.other_end(v) else { continue };
                if colour[w].is_none() {
                    colour[w] = Some(colour[v].unwrap() ^ (b.half_twists % 2) as u8);
                    stack.push(w);
                }
            }
        }
    }
    let relators = d
        .bands
        .iter()
        .map(|b| {
            let (s, e) = (b.start.component, b.end.component);
            let reversing = colour[s].unwrap() ^ colour[e].unwrap() ^ (b.half_twists % 2) as u8 == 1;
            let mut w = b.core.clone();
            w.push(Letter::pos(s));
            let mut w = w.concat(&b.core.inverse());
            w.push(if reversing { Letter::pos(e) } else { Letter::neg(e) });
            w
        })
        .collect();
    Presentation::new(n, relators)
}

/// Abelianization via the Smith normal form of the exponent matrix.
pub fn abelianization(p: &Presentation) -> FgAbelian {
    FgAbelian::cokernel(&p.exponent_matrix(), p.generators)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_projective_plane_is_z2() {
        let p = complement_presentation(&BandedUnlink::standard_projective_plane()).unwrap();
        assert_eq!(abelianization(&p).to_string(), "Z/2");
        assert_eq!(hom_count(&p, 3).unwrap(), 4);
    }

    #[test]
    fn complement_matches_kirby_for_two_knots() {
        for d in [BandedUnlink::spun_trefoil(), BandedUnlink::cable_diagram(4).unwrap()] {
            let kd = KirbyDiagram::handle_decomposition(&d).unwrap();
            assert_eq!(complement_presentation(&d).unwrap(), presentation_from_kirby(&kd, false));
        }
    }


    fn trefoil() -> Presentation {
        Presentation::new(2, vec![Word::from_signed(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)])])
            .unwrap()
    }

    #[test]
    fn abelianizations() {
        assert_eq!(abelianization(&trefoil()), FgAbelian::free(1));
        let z3 = Presentation::new(1, vec![Word::from_signed(&[(0, 1), (0, 1), (0, 1)])]).unwrap();
        assert_eq!(abelianization(&z3).to_string(), "Z/3");
        assert_eq!(abelianization(&Presentation::free(2)), FgAbelian::free(2));
    }

    #[test]
    fn presentations_from_diagrams() {
        let kd = KirbyDiagram::handle_decomposition(&BandedUnlink::spun_trefoil()).unwrap();
        assert_eq!(presentation_from_kirby(&kd, false), trefoil());
        let u = KirbyDiagram::handle_decomposition(&BandedUnlink::unknotted_sphere()).unwrap();
        assert_eq!(presentation_from_kirby(&u, false), Presentation::free(1));
        let c = KirbyDiagram::handle_decomposition(&BandedUnlink::cable_diagram(3).unwrap()).unwrap();
        let p = presentation_from_kirby(&c, false);
        assert_eq!((p.generators, p.relators.len()), (3, 2));
        assert_eq!(p.deficiency(), 1);
        assert_eq!(abelianization(&p), FgAbelian::free(1));
        let g = c.gluck_twist(0).unwrap();
        assert_eq!(presentation_from_kirby(&g, false).relators.len(), 2);
        let with = presentation_from_kirby(&g, true);
        assert_eq!(with.relators.len(), 3);
        assert!(abelianization(&with).is_trivial());
    }

    #[test]
    fn invalid_relator() {
        assert!(Presentation::new(1, vec![Word::from_signed(&[(3, 1)])]).is_err());
    }
}
