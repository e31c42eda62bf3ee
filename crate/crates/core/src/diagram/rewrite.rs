use super::{Band, BandedUnlink, Endpoint};
use crate::error::{Error, Result};

/// What happened to the sphere left behind by an untwisted pair cancellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairCancel {
    /// The pair was its own surface component and is dropped as a split unknot.
    Discarded,
    /// The pair hung off the rest of the surface by one tube; tube and unknot are dropped.
    Absorbed,
    /// The pair sat between two tubes, which are merged into one.
    Bridged,
    /// The pair carried a crosscap and stays as one unlinked component.
    Kept,
}

fn not_applicable(msg: impl Into<String>) -> Error {
    Error::RewriteNotApplicable(msg.into())
}

impl BandedUnlink {
    /// Untwists a half-twisted tube by passing a crosscap across it.
    ///
    /// The crosscap must sit on one end of the tube; afterwards the tube is
    /// untwisted and the crosscap sits on the other end.
    pub fn untwist_with_crosscap(&self, tube: usize, crosscap: usize) -> Result<BandedUnlink> {
        let t = self
            .bands
            .get(tube)
            .ok_or_else(|| not_applicable(format!("no band {tube}")))?;
        if crosscap >= self.bands.len() || tube == crosscap {
            return Err(not_applicable(format!("no crosscap band {crosscap}")));
        }
        if !t.is_twisted() || t.is_self_band() {
            return Err(not_applicable(format!(
                "band `{}` is not a half-twisted tube between distinct components",
                t.name
            )));
        }
        if !self.is_crosscap(crosscap) {
            return Err(not_applicable(format!(
                "band `{}` is not a crosscap",
                self.bands[crosscap].name
            )));
        }
        let here = self.bands[crosscap].start.component;
        let far = t
            .other_end(here)
            .ok_or_else(|| not_applicable("crosscap is not on either end of the tube"))?;

        let mut d = self.clone();
        d.bands[tube].half_twists = 0;
        let k = d.site_count(far);
        let cc = &mut d.bands[crosscap];
        cc.start = Endpoint { component: far, site: k };
        cc.end = Endpoint { component: far, site: k + 1 };
        d.compact_sites();
        Ok(d)
    }

    /// The lowest pair `(c1, c2)`, `c1 < c2`, to which
    /// [`untwisted_pair_cancel`](Self::untwisted_pair_cancel) applies.
    pub fn find_cancellable_pair(&self) -> Option<(usize, usize)> {
        let n = self.components.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.untwisted_pair_cancel_traced(a, b).is_ok())
    }

    pub fn untwisted_pair_cancel(&self, c1: usize, c2: usize) -> Result<BandedUnlink> {
        self.untwisted_pair_cancel_traced(c1, c2).map(|(d, _)| d)
    }

    /// Cancels two parallel copies joined by an untwisted tube.
    ///
    /// Both copies must be linked exactly once, with the same sign, by
    /// adjacent letters of the reduced gamma word. The tubed pair bounds a
    /// ball, so it becomes one unknotted sphere no longer linked by gamma.
    pub fn untwisted_pair_cancel_traced(
        &self,
        c1: usize,
        c2: usize,
    ) -> Result<(BandedUnlink, PairCancel)> {
        self.require_component(c1)?;
        self.require_component(c2)?;
        if c1 == c2 {
            return Err(not_applicable("a pair needs two distinct components"));
        }
        let in_pair = |c: usize| c == c1 || c == c2;
        let joins = |b: &Band| {
            !b.is_self_band() && in_pair(b.start.component) && in_pair(b.end.component)
        };
        let joining = self
            .bands
            .iter()
            .position(|b| joins(b) && !b.is_twisted() && b.core.is_empty())
            .ok_or_else(|| not_applicable("no untwisted empty-core tube joins the pair"))?;

        let gamma = self
            .gamma
            .as_ref()
            .ok_or_else(|| Error::Precondition("diagram has no marked curve gamma".into()))?;
        let reduced = gamma.word.reduce();
        let pos = |c: usize| -> Vec<usize> {
            reduced.letters().iter().enumerate().filter(|(_, l)| l.gen == c).map(|(i, _)| i).collect()
        };
        let (p1, p2) = (pos(c1), pos(c2));
        if p1.len() != 1 || p2.len() != 1 {
            return Err(not_applicable("each copy must be linked exactly once by gamma"));
        }
        let (i1, i2) = (p1[0], p2[0]);
        if reduced.letters()[i1].inverse != reduced.letters()[i2].inverse || i1.abs_diff(i2) != 1 {
            return Err(not_applicable("gamma letters of the pair are not adjacent with equal sign"));
        }
        if self
            .bands
            .iter()
            .any(|b| b.core.letters().iter().any(|l| in_pair(l.gen)))
        {
            return Err(not_applicable("a band core passes under one of the pair"));
        }

        let mut crosscaps = Vec::new();
        let mut outer = Vec::new();
        for (i, b) in self.bands.iter().enumerate() {
            if i == joining || !(in_pair(b.start.component) || in_pair(b.end.component)) {
                continue;
            }
            if joins(b) {
                return Err(not_applicable("the pair is joined by more than one band"));
            } else if b.is_self_band() {
                if !self.is_crosscap(i) {
                    return Err(not_applicable(format!("self-band `{}` is not a crosscap", b.name)));
                }
                crosscaps.push(i);
            } else {
                outer.push(i);
            }
        }

        let mut d = self.clone();
        let word = reduced
            .letters()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != i1 && i != i2)
            .map(|(_, &l)| l)
            .collect();
        d.gamma.as_mut().unwrap().word = word;

        let outcome = if crosscaps.is_empty() {
            if outer.iter().any(|&i| !self.bands[i].core.is_empty()) {
                return Err(not_applicable("a tube leaving the pair has a nonempty core"));
            }
            match outer.len() {
                0 => {
                    d.remove_bands(&[joining]);
                    PairCancel::Discarded
                }
                1 => {
                    d.remove_bands(&[joining, outer[0]]);
                    PairCancel::Absorbed
                }
                2 => {
                    let far = |i: usize| {
                        let b = &self.bands[i];
                        if in_pair(b.start.component) {
                            b.end
                        } else {
                            b.start
                        }
                    };
                    let (a, b) = (&self.bands[outer[0]], &self.bands[outer[1]]);
                    let merged = Band {
                        name: a.name.clone(),
                        start: far(outer[0]),
                        end: far(outer[1]),
                        core: a.core.clone(),
                        half_twists: (a.half_twists + b.half_twists) % 2,
                    };
                    d.bands.push(merged);
                    d.remove_bands(&[joining, outer[0], outer[1]]);
                    PairCancel::Bridged
                }
                _ => return Err(not_applicable("the pair meets more than two other tubes")),
            }
        } else {
            let name = self.components[c1].name.clone();
            d.components[c1].name = format!("{name}\u{0}");
            let u = d.add_component(name);
            let key = |e: Endpoint| (if e.component == c1 { 0 } else { 1 << 20 }) + e.site;
            for &i in crosscaps.iter().chain(outer.iter()) {
                let b = &mut d.bands[i];
                for e in [&mut b.start, &mut b.end] {
                    if in_pair(e.component) {
                        *e = Endpoint { component: u, site: key(*e) };
                    }
                }
            }
            d.remove_bands(&[joining]);
            PairCancel::Kept
        };
        d.remove_components(&[c1, c2]);
        d.compact_sites();
        d.validate()?;
        Ok((d, outcome))
    }
}
