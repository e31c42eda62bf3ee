//! Random Tietze transformations, used to perturb presentations without
//! changing the group they present.

use rand::Rng;

use super::Presentation;
use crate::random::random_word;
use crate::word::Word;

const MAX_RELATOR_LEN: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TietzeMove {
    /// New generator `z` with relator `z w^-1`.
    AddGenerator,
    /// Solve a relator for a generator occurring once and substitute it away.
    EliminateGenerator,
    /// Append a product of conjugates of existing relators.
    AddConsequence,
    /// Replace `r_i` by `r_i * c r_j c^-1`.
    MultiplyRelator,
    /// Cyclically permute or invert one relator.
    RotateRelator,
}

/// Applies one move chosen at random; returns the move and the new presentation.
/// A move that does not apply (or would grow relators past the size bound)
/// falls back to rotating a relator, or to no change.
pub fn random_move<R: Rng>(rng: &mut R, p: &Presentation, max_generators: usize) -> (TietzeMove, Presentation) {
    let choice = match rng.gen_range(0..5) {
        0 if p.generators < max_generators => TietzeMove::AddGenerator,
        1 => TietzeMove::EliminateGenerator,
        2 if !p.relators.is_empty() => TietzeMove::AddConsequence,
        3 if p.relators.len() >= 2 => TietzeMove::MultiplyRelator,
        _ => TietzeMove::RotateRelator,
    };
    let out = match choice {
        TietzeMove::AddGenerator => add_generator(rng, p),
        TietzeMove::EliminateGenerator => eliminate_generator(rng, p),
        TietzeMove::AddConsequence => add_consequence(rng, p),
        TietzeMove::MultiplyRelator => multiply_relator(rng, p),
        TietzeMove::RotateRelator => None,
    };
    match out.filter(|q| q.relators.iter().all(|r| r.len() <= MAX_RELATOR_LEN)) {
        Some(q) => (choice, q),
        None => (TietzeMove::RotateRelator, rotate_relator(rng, p)),
    }
}

/// Applies `count` random moves in sequence.
pub fn perturb<R: Rng>(rng: &mut R, p: &Presentation, count: usize, max_generators: usize) -> Presentation {
    (0..count).fold(p.clone(), |q, _| random_move(rng, &q, max_generators).1)
}

fn add_generator<R: Rng>(rng: &mut R, p: &Presentation) -> Option<Presentation> {
    let w = random_word(rng, p.generators, 4).reduce();
    let z = p.generators;
    let mut rel = Word(vec![crate::word::Letter::pos(z)]);
    rel = rel.concat(&w.inverse());
    let mut q = p.clone();
    q.generators += 1;
    q.relators.push(rel);
    Some(q)
}

fn eliminate_generator<R: Rng>(rng: &mut R, p: &Presentation) -> Option<Presentation> {
    let mut options = Vec::new();
    for (i, r) in p.relators.iter().enumerate() {
        for g in 0..p.generators {
            if r.letters().iter().filter(|l| l.gen == g).count() == 1 {
                options.push((i, g));
            }
        }
    }
    if options.is_empty() {
        return None;
    }
    let (i, z) = options[rng.gen_range(0..options.len())];
    let r = &p.relators[i];
    let pos = r.letters().iter().position(|l| l.gen == z).unwrap();
    // r = a z^e b  =>  z^e = a^-1 b^-1
    let a = Word(r.letters()[..pos].to_vec());
    let b = Word(r.letters()[pos + 1..].to_vec());
    let mut image = a.inverse().concat(&b.inverse());
    if r.letters()[pos].inverse {
        image = image.inverse();
    }
    let relators = p
        .relators
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, s)| {
            s.substitute(z, &image)
                .remap(|g| Some(if g > z { g - 1 } else { g }))
                .cyclic_reduce()
        })
        .collect();
    Some(Presentation { generators: p.generators - 1, relators })
}

fn conjugate_of<R: Rng>(rng: &mut R, p: &Presentation) -> Word {
    let r = &p.relators[rng.gen_range(0..p.relators.len())];
    let r = if rng.gen_bool(0.5) { r.inverse() } else { r.clone() };
    r.conjugate_by(&random_word(rng, p.generators.max(1), 2))
}

fn add_consequence<R: Rng>(rng: &mut R, p: &Presentation) -> Option<Presentation> {
    let a = conjugate_of(rng, p);
    let b = conjugate_of(rng, p);
    let mut q = p.clone();
    q.relators.push(a.concat(&b).reduce());
    Some(q)
}

fn multiply_relator<R: Rng>(rng: &mut R, p: &Presentation) -> Option<Presentation> {
    let i = rng.gen_range(0..p.relators.len());
    let mut j = rng.gen_range(0..p.relators.len() - 1);
    if j >= i {
        j += 1;
    }
    let other = &p.relators[j];
    let other = if rng.gen_bool(0.5) { other.inverse() } else { other.clone() };
    let c = random_word(rng, p.generators.max(1), 2);
    let mut q = p.clone();
    q.relators[i] = q.relators[i].concat(&other.conjugate_by(&c)).reduce();
    Some(q)
}

fn rotate_relator<R: Rng>(rng: &mut R, p: &Presentation) -> Presentation {
    let mut q = p.clone();
    if q.relators.is_empty() {
        return q;
    }
    let i = rng.gen_range(0..q.relators.len());
    let r = &q.relators[i];
    let k = rng.gen_range(0..=r.len());
    let mut w = r.rotate(k);
    if rng.gen_bool(0.5) {
        w = w.inverse();
    }
    q.relators[i] = w;
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{abelianization, fox_alexander, hom_count};

    #[test]
    fn moves_preserve_invariants() {
        let p = Presentation::new(
            2,
            vec![Word::from_signed(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)])],
        )
        .unwrap();
        let mut r = crate::random::rng(11);
        let mut q = p.clone();
        let mut seen = std::collections::HashSet::new();
        for _ in 0..60 {
            let (m, next) = random_move(&mut r, &q, 5);
            seen.insert(format!("{m:?}"));
            next.validate().unwrap();
            assert_eq!(abelianization(&next), abelianization(&p));
            assert_eq!(hom_count(&next, 3).unwrap(), 12);
            q = next;
        }
        assert!(seen.len() >= 4, "moves exercised: {seen:?}");
    }

    #[test]
    fn elimination_keeps_alexander() {
        // adding then eliminating a generator keeps Delta
        let p = Presentation::new(
            2,
            vec![Word::from_signed(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)])],
        )
        .unwrap();
        let mut r = crate::random::rng(3);
        let q = add_generator(&mut r, &p).unwrap();
        assert_eq!(fox_alexander(&q).unwrap(), fox_alexander(&p).unwrap());
    }
}
