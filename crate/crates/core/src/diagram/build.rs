use super::{Band, BandedUnlink, Component, Endpoint, MarkedCurve};
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

impl BandedUnlink {
    pub fn add_component(&mut self, name: impl Into<String>) -> usize {
        self.components.push(Component { name: name.into() });
        self.components.len() - 1
    }

    /// Attaches a band with fresh sites at the end of both circles' cyclic orders.
    pub fn add_band(
        &mut self,
        name: impl Into<String>,
        from: usize,
        to: usize,
        core: Word,
        half_twists: u32,
    ) -> Result<usize> {
        self.require_component(from)?;
        self.require_component(to)?;
        let start = self.next_site(from);
        let end = if from == to {
            Endpoint { component: to, site: start.site + 1 }
        } else {
            self.next_site(to)
        };
        self.bands.push(Band { name: name.into(), start, end, core, half_twists });
        Ok(self.bands.len() - 1)
    }

    /// A single unknotted circle: the unknotted 2-sphere.
    pub fn unknotted_sphere() -> BandedUnlink {
        let mut d = BandedUnlink::new();
        d.add_component("c1");
        d
    }

    /// Spun knot whose band identifies the second meridian with the first
    /// conjugated by `core`.
    pub fn spun(core: Word) -> BandedUnlink {
        let mut d = BandedUnlink::new();
        let x = d.add_component("c1");
        let y = d.add_component("c2");
        d.add_band("b1", x, y, core, 0).expect("components exist");
        d
    }

    /// Spun trefoil: one band realising `y = (xy) x (xy)^-1`.
    pub fn spun_trefoil() -> BandedUnlink {
        Self::spun(Word::from_signed(&[(0, 1), (1, 1)]))
    }

    /// Spun figure-eight: `y = w x w^-1` with `w = x^-1 y x y^-1`.
    pub fn spun_figure_eight() -> BandedUnlink {
        Self::spun(Word::from_signed(&[(0, -1), (1, 1), (0, 1), (1, -1)]))
    }

    /// `n` parallel copies of the companion core, each linked once by gamma.
    pub fn parallel_copies(n: usize) -> Result<BandedUnlink> {
        if n == 0 {
            return Err(Error::Precondition("parallel copies need n >= 1".into()));
        }
        let mut d = BandedUnlink::new();
        for i in 1..=n {
            d.add_component(format!("c{i}"));
        }
        d.gamma = Some(MarkedCurve::new((0..n).map(Letter::pos).collect(), 0));
        Ok(d)
    }

    /// Tubes two distinct components together with an empty-core band.
    pub fn tube(&self, c1: usize, c2: usize, twisted: bool) -> Result<BandedUnlink> {
        self.require_component(c1)?;
        self.require_component(c2)?;
        if c1 == c2 {
            return Err(Error::Precondition(
                "a tube joins two distinct components; use crosscap_sum for a self-band".into(),
            ));
        }
        let mut d = self.clone();
        let name = d.fresh_band_name("t");
        d.add_band(name, c1, c2, Word::empty(), twisted as u32)?;
        Ok(d)
    }

    /// Unknotted cable pattern of degree `n`: parallel copies joined in a
    /// chain by half-twisted tubes.
    pub fn cable_diagram(n: usize) -> Result<BandedUnlink> {
        let mut d = Self::parallel_copies(n)?;
        for i in 0..n - 1 {
            d = d.tube(i, i + 1, true)?;
        }
        Ok(d)
    }

    /// Tube sum in a ball of the first components of each diagram.
    ///
    /// Gamma words are concatenated (first, then second) and framings added.
    pub fn connected_sum(&self, other: &BandedUnlink) -> Result<BandedUnlink> {
        if self.components.is_empty() || other.components.is_empty() {
            return Err(Error::Precondition("connected sum of an empty diagram".into()));
        }
        let mut d = self.clone();
        let off = d.components.len();
        for c in &other.components {
            let name = if d.component_index(&c.name).is_some() {
                d.fresh_component_name(&format!("{}_", c.name))
            } else {
                c.name.clone()
            };
            d.add_component(name);
        }
        let shift = |w: &Word| w.remap(|g| Some(g + off));
        for b in &other.bands {
            let name = if d.band_index(&b.name).is_some() {
                d.fresh_band_name(&format!("{}_", b.name))
            } else {
                b.name.clone()
            };
            d.bands.push(Band {
                name,
                start: Endpoint { component: b.start.component + off, site: b.start.site },
                end: Endpoint { component: b.end.component + off, site: b.end.site },
                core: shift(&b.core),
                half_twists: b.half_twists,
            });
        }
        d.gamma = match (&self.gamma, &other.gamma) {
            (None, None) => None,
            (a, b) => {
                let wa = a.as_ref().map(|g| g.word.clone()).unwrap_or_default();
                let wb = b.as_ref().map(|g| shift(&g.word)).unwrap_or_default();
                let fa = a.as_ref().map_or(0, |g| g.framing);
                let fb = b.as_ref().map_or(0, |g| g.framing);
                Some(MarkedCurve::new(wa.concat(&wb), fa + fb))
            }
        };
        let name = d.fresh_band_name("s");
        d.add_band(name, 0, off, Word::empty(), 0)?;
        Ok(d)
    }

    /// Connected sum with the standard projective plane: a half-twisted
    /// self-band on `c` whose feet are adjacent.
    pub fn crosscap_sum(&self, c: usize) -> Result<BandedUnlink> {
        self.require_component(c)?;
        let mut d = self.clone();
        let name = d.fresh_band_name("x");
        d.add_band(name, c, c, Word::empty(), 1)?;
        Ok(d)
    }

    /// The unknotted projective plane: one circle with one crosscap.
    pub fn standard_projective_plane() -> BandedUnlink {
        Self::unknotted_sphere().crosscap_sum(0).expect("component exists")
    }

    /// Indices of the crosscaps: half-twisted self-bands with empty core and
    /// cyclically adjacent feet.
    pub fn crosscaps(&self) -> Vec<usize> {
        (0..self.bands.len()).filter(|&i| self.is_crosscap(i)).collect()
    }

    pub fn is_crosscap(&self, i: usize) -> bool {
        let b = &self.bands[i];
        if !(b.is_self_band() && b.is_twisted() && b.core.is_empty()) {
            return false;
        }
        let k = self.site_count(b.start.component);
        let (s, e) = (b.start.site, b.end.site);
        (s + 1) % k == e || (e + 1) % k == s
    }
}
