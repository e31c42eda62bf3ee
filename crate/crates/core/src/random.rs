//! Seeded generators for diagrams and words used by property checks and `verify`.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::diagram::{Band, BandedUnlink, Endpoint, MarkedCurve};
use crate::word::{Letter, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word<R: Rng>(rng: &mut R, gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| Letter { gen: rng.gen_range(0..gens), inverse: rng.gen_bool(0.5) })
        .collect()
}

/// Inserts a band end at a uniformly random position of `c`'s cyclic order,
/// shifting later sites up by one.
fn insert_site<R: Rng>(rng: &mut R, d: &mut BandedUnlink, c: usize) -> Endpoint {
    let k = d.site_count(c);
    let p = rng.gen_range(0..=k);
    for b in &mut d.bands {
        for e in [&mut b.start, &mut b.end] {
            if e.component == c && e.site >= p {
                e.site += 1;
            }
        }
    }
    Endpoint { component: c, site: p }
}

/// A random 2-knot diagram: `u` circles joined by a random spanning tree of
/// bands with random cores, twists and site positions, plus a random gamma.
pub fn random_two_knot<R: Rng>(rng: &mut R, max_components: usize, max_word: usize) -> BandedUnlink {
    let u = rng.gen_range(1..=max_components.max(1));
    let mut d = BandedUnlink::new();
    for i in 1..=u {
        d.add_component(format!("c{i}"));
    }
    let mut order: Vec<usize> = (0..u).collect();
    order.shuffle(rng);
    for k in 1..u {
        let a = order[rng.gen_range(0..k)];
        let b = order[k];
        let (from, to) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
        let start = insert_site(rng, &mut d, from);
        d.bands.push(Band {
            name: format!("b{k}"),
            start,
            end: Endpoint { component: usize::MAX, site: 0 },
            core: random_word(rng, u, max_word),
            half_twists: rng.gen_range(0..5),
        });
        let last = d.bands.len() - 1;
        let end = insert_site(rng, &mut d, to);
        d.bands[last].end = end;
    }
    d.gamma = Some(MarkedCurve::new(random_word(rng, u, max_word * 2), rng.gen_range(-3..=3)));
    d
}

/// A random diagram with arbitrary band structure (self-bands and cycles
/// allowed); it need not represent a sphere.
pub fn random_diagram<R: Rng>(rng: &mut R, max_components: usize, max_bands: usize) -> BandedUnlink {
    let u = rng.gen_range(1..=max_components.max(1));
    let mut d = BandedUnlink::new();
    for i in 1..=u {
        d.add_component(format!("c{i}"));
    }
    let nb = rng.gen_range(0..=max_bands);
    for k in 1..=nb {
        let from = rng.gen_range(0..u);
        let to = rng.gen_range(0..u);
        let start = insert_site(rng, &mut d, from);
        d.bands.push(Band {
            name: format!("b{k}"),
            start,
            end: Endpoint { component: usize::MAX, site: 0 },
            core: random_word(rng, u, 3),
            half_twists: rng.gen_range(0..4),
        });
        let last = d.bands.len() - 1;
        let end = insert_site(rng, &mut d, to);
        d.bands[last].end = end;
    }
    d
}
