//! Kirby diagrams of 2-knot complements and the Gluck-twist circle.
//!
//! Dotting every unlink component gives the 1-handles and each band becomes
//! a 0-framed 2-handle. The Gluck twist adds a +1-framed meridian of one
//! dotted circle. Sliding gamma over that circle removes one meridian letter
//! and shifts gamma's framing by one, which is all the framing bookkeeping
//! the classification needs.

use crate::diagram::{BandedUnlink, MarkedCurve};
use crate::error::{Error, Result};
use crate::satellite::{CompanionDescriptor, GluckClass, PatternKind};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoHandle {
    /// Attaching circle as a word in the dotted-circle meridians.
    pub attaching: Word,
    pub framing: i64,
}

/// The +1-framed meridian that realises the Gluck twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GluckCircle {
    pub meridian_of: usize,
}

impl GluckCircle {
    pub const FRAMING: i64 = 1;

    pub fn attaching(&self) -> Word {
        Word(vec![Letter::pos(self.meridian_of)])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KirbyDiagram {
    /// Names of the dotted circles; generator `i` is the meridian of `dotted[i]`.
    pub dotted: Vec<String>,
    pub handles: Vec<TwoHandle>,
    pub gluck_circle: Option<GluckCircle>,
    pub gamma: Option<MarkedCurve>,
}

/// Outcome of sliding gamma off every dotted circle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaNormalization {
    pub diagram: KirbyDiagram,
    /// Final framing of gamma mod 2.
    pub parity: u8,
    pub slides: usize,
}

impl KirbyDiagram {
    /// Handle decomposition of the complement of a 2-knot diagram.
    ///
    /// A band from `s` to `e` with core `w` becomes a 0-framed handle
    /// attached along `w x_s w^-1 x_e^-1`.
    pub fn handle_decomposition(d: &BandedUnlink) -> Result<KirbyDiagram> {
        d.require_two_knot()?;
        let handles = d
            .bands
            .iter()
            .map(|b| {
                let mut w = b.core.clone();
                w.push(Letter::pos(b.start.component));
                let w = w.concat(&b.core.inverse());
                let mut w = w;
                w.push(Letter::neg(b.end.component));
                TwoHandle { attaching: w, framing: 0 }
            })
            .collect();
        Ok(KirbyDiagram {
            dotted: d.components.iter().map(|c| c.name.clone()).collect(),
            handles,
            gluck_circle: None,
            gamma: d.gamma.clone(),
        })
    }

    fn require_dotted(&self, c: usize) -> Result<()> {
        if c < self.dotted.len() {
            Ok(())
        } else {
            Err(Error::Structural(format!("dotted circle {c} does not exist")))
        }
    }

    /// Adds the +1-framed circle on a meridian of dotted circle `c`.
    pub fn gluck_twist(&self, c: usize) -> Result<KirbyDiagram> {
        if self.gluck_circle.is_some() {
            return Err(Error::State("the Gluck circle is already present".into()));
        }
        self.require_dotted(c)?;
        let mut k = self.clone();
        k.gluck_circle = Some(GluckCircle { meridian_of: c });
        Ok(k)
    }

    /// Moves the +1 circle to a meridian of another dotted circle; all
    /// meridians of a 2-knot are isotopic.
    pub fn move_gluck_circle(&self, c: usize) -> Result<KirbyDiagram> {
        if self.gluck_circle.is_none() {
            return Err(Error::Precondition("no Gluck circle to move".into()));
        }
        self.require_dotted(c)?;
        let mut k = self.clone();
        k.gluck_circle = Some(GluckCircle { meridian_of: c });
        Ok(k)
    }

    /// Pushes gamma once through the +1 circle.
    ///
    /// Drops gamma's first letter and adds one to its framing; the push
    /// down into the 1-handlebody and back is free reduction.
    pub fn gamma_slide(&self) -> Result<KirbyDiagram> {
        let gamma = self
            .gamma
            .as_ref()
            .ok_or_else(|| Error::Precondition("diagram has no marked curve gamma".into()))?;
        let first = *gamma
            .word
            .letters()
            .first()
            .ok_or_else(|| Error::Precondition("gamma is unlinked; nothing to slide".into()))?;
        match self.gluck_circle {
            Some(g) if g.meridian_of == first.gen => {}
            Some(g) => {
                return Err(Error::Precondition(format!(
                    "Gluck circle sits on dotted circle {} but gamma's first letter is on {}",
                    g.meridian_of, first.gen
                )))
            }
            None => return Err(Error::Precondition("no Gluck circle present".into())),
        }
        let mut k = self.clone();
        let g = k.gamma.as_mut().unwrap();
        g.word = Word(g.word.letters()[1..].to_vec()).reduce();
        g.framing += GluckCircle::FRAMING;
        Ok(k)
    }

    /// Slides gamma off everything, moving the +1 circle as needed, and
    /// reports the final framing parity.
    pub fn gamma_normalize(&self) -> Result<GammaNormalization> {
        if self.gluck_circle.is_none() {
            return Err(Error::Precondition("no Gluck circle present".into()));
        }
        let mut k = self.clone();
        let g = k
            .gamma
            .as_mut()
            .ok_or_else(|| Error::Precondition("diagram has no marked curve gamma".into()))?;
        g.word = g.word.reduce();
        let mut slides = 0;
        while let Some(first) = k.gamma.as_ref().unwrap().word.letters().first().copied() {
            k = k.move_gluck_circle(first.gen)?.gamma_slide()?;
            slides += 1;
        }
        let parity = k.gamma.as_ref().unwrap().framing_parity();
        Ok(GammaNormalization { diagram: k, parity, slides })
    }

    /// Renames generator `i` to `perm[i]` throughout.
    pub fn relabel(&self, perm: &[usize]) -> KirbyDiagram {
        let f = |g: usize| Some(perm[g]);
        let mut dotted = vec![String::new(); self.dotted.len()];
        for (i, name) in self.dotted.iter().enumerate() {
            dotted[perm[i]] = name.clone();
        }
        KirbyDiagram {
            dotted,
            handles: self
                .handles
                .iter()
                .map(|h| TwoHandle { attaching: h.attaching.remap(f), framing: h.framing })
                .collect(),
            gluck_circle: self.gluck_circle.map(|g| GluckCircle { meridian_of: perm[g.meridian_of] }),
            gamma: self
                .gamma
                .as_ref()
                .map(|g| MarkedCurve::new(g.word.remap(f), g.framing)),
        }
    }
}

/// Reads off the Gluck class from gamma's final framing parity: twisting
/// along the satellite equals twisting along `P` (even) or `C # P` (odd).
pub fn classify(parity: u8, companion: &CompanionDescriptor, pattern: &PatternKind) -> GluckClass {
    let mut summands = vec![pattern.summand()];
    if parity % 2 == 1 {
        summands.push(companion.summand());
    }
    GluckClass::new("S4", summands)
}
