//! Exhaustive counting of homomorphisms into small symmetric groups.

use rayon::prelude::*;

use super::Presentation;
use crate::error::{Error, Result};

pub const MAX_HOM_GENERATORS: usize = 6;

/// Symmetric group as a multiplication table over element indices.
struct SymmetricGroup {
    order: usize,
    identity: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl SymmetricGroup {
    fn new(n: usize) -> Self {
        let mut perms: Vec<Vec<u8>> = Vec::new();
        permutations(&mut (0..n as u8).collect(), 0, &mut perms);
        perms.sort();
        let index = |p: &[u8]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let order = perms.len();
        let mut mul = vec![0; order * order];
        let mut inv = vec![0; order];
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                // (a b)(k) = a(b(k))
                let c: Vec<u8> = b.iter().map(|&k| a[k as usize]).collect();
                mul[i * order + j] = index(&c);
            }
            let mut ai = vec![0u8; n];
            for (k, &v) in a.iter().enumerate() {
                ai[v as usize] = k as u8;
            }
            inv[i] = index(&ai);
        }
        let identity = index(&(0..n as u8).collect::<Vec<_>>());
        SymmetricGroup { order, identity, mul, inv }
    }

    fn times(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }
}

fn permutations(v: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Number of homomorphisms from the presented group to the symmetric group
/// on `n` letters, `3 <= n <= 5`.
pub fn hom_count(p: &Presentation, n: usize) -> Result<u128> {
    if !(3..=5).contains(&n) {
        return Err(Error::Precondition(format!("symmetric group degree {n} outside 3..=5")));
    }
    if p.generators > MAX_HOM_GENERATORS {
        return Err(Error::Resource(format!(
            "{} generators exceed the enumeration bound {MAX_HOM_GENERATORS}",
            p.generators
        )));
    }
    p.validate()?;
    let sym = SymmetricGroup::new(n);

    // Generators in order of first use; a relator is checked at the depth
    // where its last generator gets assigned.
    let mut order: Vec<usize> = Vec::new();
    for r in &p.relators {
        for l in r.letters() {
            if !order.contains(&l.gen) {
                order.push(l.gen);
            }
        }
    }
    let free = p.generators - order.len();
    let mut slot = vec![usize::MAX; p.generators];
    for (i, &g) in order.iter().enumerate() {
        slot[g] = i;
    }
    let mut checks: Vec<Vec<Vec<(usize, bool)>>> = vec![Vec::new(); order.len()];
    for r in &p.relators {
        if r.is_empty() {
            continue;
        }
        let depth = r.letters().iter().map(|l| slot[l.gen]).max().unwrap();
        checks[depth].push(r.letters().iter().map(|l| (slot[l.gen], l.inverse)).collect());
    }

    let bound = if order.is_empty() {
        1
    } else {
        (0..sym.order)
            .into_par_iter()
            .map(|first| {
                let mut assign = vec![0usize; order.len()];
                assign[0] = first;
                if !satisfied(&sym, &checks[0], &assign) {
                    return 0;
                }
                extend(&sym, &checks, &mut assign, 1)
            })
            .sum::<u128>()
    };
    Ok(bound * (sym.order as u128).pow(free as u32))
}

fn satisfied(sym: &SymmetricGroup, rels: &[Vec<(usize, bool)>], assign: &[usize]) -> bool {
    rels.iter().all(|r| {
        let v = r.iter().fold(sym.identity, |acc, &(s, inverse)| {
            let x = assign[s];
            sym.times(acc, if inverse { sym.inv[x] } else { x })
        });
        v == sym.identity
    })
}

fn extend(sym: &SymmetricGroup, checks: &[Vec<Vec<(usize, bool)>>], assign: &mut [usize], depth: usize) -> u128 {
    if depth == assign.len() {
        return 1;
    }
    let mut total = 0;
    for x in 0..sym.order {
        assign[depth] = x;
        if satisfied(sym, &checks[depth], assign) {
            total += extend(sym, checks, assign, depth + 1);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    /// Oracle: plain enumeration of all generator images as explicit
    /// permutation vectors, composing right to left.
    fn brute_force(p: &Presentation, n: usize) -> u128 {
        let mut perms = Vec::new();
        permutations(&mut (0..n as u8).collect(), 0, &mut perms);
        let idn: Vec<u8> = (0..n as u8).collect();
        let mut count = 0;
        let total = perms.len().pow(p.generators as u32);
        for code in 0..total {
            let mut c = code;
            let images: Vec<&Vec<u8>> = (0..p.generators)
                .map(|_| {
                    let i = c % perms.len();
                    c /= perms.len();
                    &perms[i]
                })
                .collect();
            let ok = p.relators.iter().all(|r| {
                let mut acc = idn.clone();
                for l in r.letters() {
                    let g = images[l.gen];
                    let g: Vec<u8> = if l.inverse {
                        let mut v = vec![0u8; n];
                        for (k, &x) in g.iter().enumerate() {
                            v[x as usize] = k as u8;
                        }
                        v
                    } else {
                        g.clone()
                    };
                    acc = g.iter().map(|&k| acc[k as usize]).collect();
                }
                acc == idn
            });
            count += ok as u128;
        }
        count
    }

    fn trefoil() -> Presentation {
        Presentation::new(2, vec![Word::from_signed(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)])])
            .unwrap()
    }

    fn figure_eight() -> Presentation {
        let core = Word::from_signed(&[(0, -1), (1, 1), (0, 1), (1, -1)]);
        let r = core.concat(&Word::from_signed(&[(0, 1)])).concat(&core.inverse()).concat(&Word::from_signed(&[(1, -1)]));
        Presentation::new(2, vec![r]).unwrap()
    }

    #[test]
    fn oracle_values() {
        assert_eq!(brute_force(&trefoil(), 3), 12);
        assert_eq!(brute_force(&Presentation::free(1), 3), 6);
        assert_eq!(brute_force(&figure_eight(), 3), 6);
    }

    #[test]
    fn matches_oracle() {
        for n in 3..=4 {
            assert_eq!(hom_count(&trefoil(), n).unwrap(), brute_force(&trefoil(), n));
            assert_eq!(hom_count(&figure_eight(), n).unwrap(), brute_force(&figure_eight(), n));
        }
        assert_eq!(hom_count(&trefoil(), 3).unwrap(), 12);
        assert_eq!(hom_count(&trefoil(), 5).unwrap(), 600);
        assert_eq!(hom_count(&figure_eight(), 4).unwrap(), 48);
        assert_eq!(hom_count(&Presentation::free(1), 3).unwrap(), 6);
        assert_eq!(hom_count(&Presentation::free(2), 5).unwrap(), 14400);
    }

    #[test]
    fn bounds() {
        assert!(matches!(hom_count(&Presentation::free(7), 3), Err(Error::Resource(_))));
        assert!(matches!(hom_count(&Presentation::free(1), 6), Err(Error::Precondition(_))));
    }
}
