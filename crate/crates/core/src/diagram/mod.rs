//! Combinatorial banded unlink diagrams.
//!
//! A diagram is an unlink of oriented circles with bands attached at
//! numbered sites. Each circle carries its sites in cyclic order `0..k`.
//! Only the data the rewrites and the fundamental-group computations need is
//! recorded: band cores are words of meridians the band passes under, and
//! the marked curve is a word of meridians it links. Planar positions,
//! over-crossings and everything else a drawing would carry are discarded.

mod build;
mod rewrite;

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::word::Word;

pub use rewrite::PairCancel;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub name: String,
}

/// Attachment of a band end: component index and site position on that circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub component: usize,
    pub site: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Band {
    pub name: String,
    pub start: Endpoint,
    pub end: Endpoint,
    /// Meridians of unlink components the band core passes under.
    pub core: Word,
    /// Only the parity matters; see [`BandedUnlink::normalize_twists`].
    pub half_twists: u32,
}

impl Band {
    pub fn is_twisted(&self) -> bool {
        self.half_twists % 2 == 1
    }

    pub fn is_self_band(&self) -> bool {
        self.start.component == self.end.component
    }

    pub fn touches(&self, c: usize) -> bool {
        self.start.component == c || self.end.component == c
    }

    /// The component at the other end of the band, seen from `c`.
    pub fn other_end(&self, c: usize) -> Option<usize> {
        if self.start.component == c {
            Some(self.end.component)
        } else if self.end.component == c {
            Some(self.start.component)
        } else {
            None
        }
    }
}

/// The marked curve gamma, written as a word of meridians, with its framing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedCurve {
    pub word: Word,
    pub framing: i64,
}

impl MarkedCurve {
    pub fn new(word: Word, framing: i64) -> Self {
        MarkedCurve { word, framing }
    }

    pub fn framing_parity(&self) -> u8 {
        self.framing.rem_euclid(2) as u8
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BandedUnlink {
    pub components: Vec<Component>,
    pub bands: Vec<Band>,
    pub gamma: Option<MarkedCurve>,
}

impl BandedUnlink {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn num_bands(&self) -> usize {
        self.bands.len()
    }

    pub fn component_index(&self, name: &str) -> Option<usize> {
        self.components.iter().position(|c| c.name == name)
    }

    pub fn band_index(&self, name: &str) -> Option<usize> {
        self.bands.iter().position(|b| b.name == name)
    }

    /// Band ends on component `c`, ordered by site: `(band index, is_start)`.
    pub fn sites(&self, c: usize) -> Vec<(usize, bool)> {
        let mut v: Vec<(usize, usize, bool)> = Vec::new();
        for (i, b) in self.bands.iter().enumerate() {
            if b.start.component == c {
                v.push((b.start.site, i, true));
            }
            if b.end.component == c {
                v.push((b.end.site, i, false));
            }
        }
        v.sort();
        v.into_iter().map(|(_, i, s)| (i, s)).collect()
    }

    pub fn site_count(&self, c: usize) -> usize {
        self.bands
            .iter()
            .map(|b| (b.start.component == c) as usize + (b.end.component == c) as usize)
            .sum()
    }

    /// Checks every referential invariant of the diagram.
    pub fn validate(&self) -> Result<()> {
        let n = self.components.len();
        let mut names = BTreeSet::new();
        for c in &self.components {
            if !names.insert(c.name.as_str()) {
                return Err(Error::Structural(format!("duplicate component name `{}`", c.name)));
            }
        }
        let mut band_names = BTreeSet::new();
        let mut used: Vec<Vec<usize>> = vec![Vec::new(); n];
        for b in &self.bands {
            if !band_names.insert(b.name.as_str()) {
                return Err(Error::Structural(format!("duplicate band name `{}`", b.name)));
            }
            for e in [b.start, b.end] {
                if e.component >= n {
                    return Err(Error::Structural(format!(
                        "band `{}` attaches to missing component {}",
                        b.name, e.component
                    )));
                }
                used[e.component].push(e.site);
            }
            if b.start == b.end {
                return Err(Error::Structural(format!(
                    "band `{}` uses the same attachment site twice",
                    b.name
                )));
            }
            if let Some(g) = b.core.max_gen() {
                if g >= n {
                    return Err(Error::Structural(format!(
                        "core word of band `{}` references missing component {}",
                        b.name, g
                    )));
                }
            }
        }
        for (c, sites) in used.iter_mut().enumerate() {
            sites.sort_unstable();
            if sites.iter().enumerate().any(|(i, &s)| i != s) {
                return Err(Error::Structural(format!(
                    "sites on component `{}` are not a permutation of 0..{}: {:?}",
                    self.components[c].name,
                    sites.len(),
                    sites
                )));
            }
        }
        if let Some(g) = &self.gamma {
            if let Some(m) = g.word.max_gen() {
                if m >= n {
                    return Err(Error::Structural(format!(
                        "gamma references missing component {m}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Reduces every band's half-twist count to its parity.
    pub fn normalize_twists(&self) -> BandedUnlink {
        let mut d = self.clone();
        for b in &mut d.bands {
            b.half_twists %= 2;
        }
        d
    }

    /// Number of circles left after surgering the unlink along every band.
    ///
    /// Each site is split into a left and a right point. Circle arcs join
    /// the right point of a site to the left point of the next one; an
    /// untwisted band joins left to right across its ends and a
    /// half-twisted band joins left to left and right to right.
    pub fn surgered_components(&self) -> Result<usize> {
        self.validate()?;
        let mut offset = Vec::with_capacity(self.components.len());
        let mut total = 0usize;
        let mut bare = 0usize;
        for c in 0..self.components.len() {
            let k = self.site_count(c);
            offset.push(total);
            total += 2 * k;
            if k == 0 {
                bare += 1;
            }
        }
        let left = |e: Endpoint| offset[e.component] + 2 * e.site;
        let right = |e: Endpoint| offset[e.component] + 2 * e.site + 1;
        let mut uf = UnionFind::new(total);
        for c in 0..self.components.len() {
            let k = self.site_count(c);
            for s in 0..k {
                let here = Endpoint { component: c, site: s };
                let next = Endpoint { component: c, site: (s + 1) % k };
                uf.union(right(here), left(next));
            }
        }
        for b in &self.bands {
            if b.is_twisted() {
                uf.union(left(b.start), left(b.end));
                uf.union(right(b.start), right(b.end));
            } else {
                uf.union(left(b.start), right(b.end));
                uf.union(right(b.start), left(b.end));
            }
        }
        Ok(bare + uf.classes())
    }

    /// Euler characteristic of the closed surface: minima + maxima - saddles.
    pub fn euler_characteristic(&self) -> Result<i64> {
        let u = self.components.len() as i64;
        let up = self.surgered_components()? as i64;
        Ok(u + up - self.bands.len() as i64)
    }

    /// Connected components of the realized surface (union-find on the band graph).
    pub fn surface_components(&self) -> usize {
        let mut uf = UnionFind::new(self.components.len());
        for b in &self.bands {
            uf.union(b.start.component, b.end.component);
        }
        uf.classes()
    }

    /// True iff the band graph has no cycle of odd twist parity.
    pub fn orientable(&self) -> bool {
        let n = self.components.len();
        let mut adj: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n];
        for b in &self.bands {
            let p = (b.half_twists % 2) as u8;
            let (a, c) = (b.start.component, b.end.component);
            if a == c {
                if p == 1 {
                    return false;
                }
                continue;
            }
            adj[a].push((c, p));
            adj[c].push((a, p));
        }
        let mut colour: Vec<Option<u8>> = vec![None; n];
        for root in 0..n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(0);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let cv = colour[v].unwrap();
                for &(w, p) in &adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(cv ^ p);
                            stack.push(w);
                        }
                        Some(cw) if cw != cv ^ p => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Exponent sum of the marked curve's word.
    pub fn degree(&self) -> Result<i64> {
        self.gamma
            .as_ref()
            .map(|g| g.word.exponent_sum())
            .ok_or_else(|| Error::Precondition("diagram has no marked curve gamma".into()))
    }

    /// One connected sphere: a single surface component with Euler characteristic 2.
    pub fn is_two_knot(&self) -> Result<bool> {
        Ok(self.surface_components() == 1 && self.euler_characteristic()? == 2)
    }

    pub(crate) fn require_two_knot(&self) -> Result<()> {
        if self.is_two_knot()? {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "diagram is not a single 2-knot (surface components {}, chi {})",
                self.surface_components(),
                self.euler_characteristic()?
            )))
        }
    }

    pub(crate) fn require_component(&self, c: usize) -> Result<()> {
        if c < self.components.len() {
            Ok(())
        } else {
            Err(Error::Structural(format!("component {c} does not exist")))
        }
    }

    /// Opens a new site at the end of component `c`'s cyclic order.
    pub(crate) fn next_site(&self, c: usize) -> Endpoint {
        Endpoint { component: c, site: self.site_count(c) }
    }

    /// Renumbers sites on every component to `0..k`, keeping their relative order.
    pub(crate) fn compact_sites(&mut self) {
        let n = self.components.len();
        let mut per: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); n];
        for (i, b) in self.bands.iter().enumerate() {
            per[b.start.component].push((b.start.site, i, true));
            per[b.end.component].push((b.end.site, i, false));
        }
        for list in &mut per {
            list.sort();
            for (k, &(_, i, is_start)) in list.iter().enumerate() {
                let b = &mut self.bands[i];
                if is_start {
                    b.start.site = k;
                } else {
                    b.end.site = k;
                }
            }
        }
    }

    /// Removes bands by index, then closes the gaps in site numbering.
    pub(crate) fn remove_bands(&mut self, idx: &[usize]) {
        let drop: BTreeSet<usize> = idx.iter().copied().collect();
        let mut i = 0;
        self.bands.retain(|_| {
            let keep = !drop.contains(&i);
            i += 1;
            keep
        });
        self.compact_sites();
    }

    /// Removes components. Bands touching them must already be gone; their
    /// letters are deleted from core words and from gamma.
    pub(crate) fn remove_components(&mut self, idx: &[usize]) {
        let drop: BTreeSet<usize> = idx.iter().copied().collect();
        debug_assert!(self.bands.iter().all(|b| !drop.contains(&b.start.component)
            && !drop.contains(&b.end.component)));
        let mut map: HashMap<usize, usize> = HashMap::new();
        let mut kept = Vec::new();
        for (i, c) in self.components.drain(..).enumerate() {
            if !drop.contains(&i) {
                map.insert(i, kept.len());
                kept.push(c);
            }
        }
        self.components = kept;
        let f = |g: usize| map.get(&g).copied();
        for b in &mut self.bands {
            b.start.component = map[&b.start.component];
            b.end.component = map[&b.end.component];
            b.core = b.core.remap(f);
        }
        if let Some(g) = &mut self.gamma {
            g.word = g.word.remap(f);
        }
    }

    pub(crate) fn fresh_band_name(&self, prefix: &str) -> String {
        (1..)
            .map(|i| format!("{prefix}{i}"))
            .find(|n| self.band_index(n).is_none())
            .unwrap()
    }

    pub(crate) fn fresh_component_name(&self, prefix: &str) -> String {
        (1..)
            .map(|i| format!("{prefix}{i}"))
            .find(|n| self.component_index(n).is_none())
            .unwrap()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub(crate) fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

#[cfg(test)]
mod tests;
