use super::*;
use crate::random;
use crate::word::Letter;
use proptest::prelude::*;

/// Independent oracle: follow each surgered circle point by point.
/// Points are `(component, site, side)`; side 0 is the left foot.
fn walk_circles(d: &BandedUnlink) -> usize {
    type P = (usize, usize, u8);
    let mut across: HashMap<P, P> = HashMap::new();
    for b in &d.bands {
        let (s, e) = (b.start, b.end);
        let pairs = if b.half_twists % 2 == 1 {
            [((s.component, s.site, 0), (e.component, e.site, 0)), ((s.component, s.site, 1), (e.component, e.site, 1))]
        } else {
            [((s.component, s.site, 0), (e.component, e.site, 1)), ((s.component, s.site, 1), (e.component, e.site, 0))]
        };
        for (a, c) in pairs {
            across.insert(a, c);
            across.insert(c, a);
        }
    }
    let along = |p: P| -> P {
        let k = d.site_count(p.0);
        if p.2 == 1 {
            (p.0, (p.1 + 1) % k, 0)
        } else {
            (p.0, (p.1 + k - 1) % k, 1)
        }
    };
    let mut seen = std::collections::HashSet::new();
    let mut count = (0..d.num_components()).filter(|&c| d.site_count(c) == 0).count();
    let mut keys: Vec<P> = across.keys().copied().collect();
    keys.sort();
    for start in keys {
        if seen.contains(&start) {
            continue;
        }
        count += 1;
        let mut p = start;
        loop {
            seen.insert(p);
            let q = across[&p];
            seen.insert(q);
            p = along(q);
            if p == start {
                break;
            }
        }
    }
    count
}

fn two_circles_one_band(twists: u32) -> BandedUnlink {
    let mut d = BandedUnlink::new();
    d.add_component("a");
    d.add_component("b");
    d.add_band("t", 0, 1, Word::empty(), twists).unwrap();
    d
}

#[test]
fn normalize_twists_reduces_to_parity() {
    for (k, want) in [(4, 0), (3, 1), (1, 1)] {
        let d = two_circles_one_band(k).normalize_twists();
        assert_eq!(d.bands[0].half_twists, want);
    }
}

#[test]
fn surgery_counts() {
    assert_eq!(two_circles_one_band(0).surgered_components().unwrap(), 1);
    assert_eq!(BandedUnlink::unknotted_sphere().surgered_components().unwrap(), 1);
    let cable = BandedUnlink::cable_diagram(3).unwrap();
    assert_eq!(walk_circles(&cable), 1);
    assert_eq!(cable.surgered_components().unwrap(), 1);
}

#[test]
fn self_band_fission_and_mobius() {
    let mut d = BandedUnlink::unknotted_sphere();
    d.add_band("s", 0, 0, Word::empty(), 0).unwrap();
    assert_eq!(d.surgered_components().unwrap(), 2);
    assert_eq!(walk_circles(&d), 2);
    assert!(d.orientable());
    let r = BandedUnlink::standard_projective_plane();
    assert_eq!(r.surgered_components().unwrap(), 1);
    assert_eq!(r.euler_characteristic().unwrap(), 1);
    assert!(!r.orientable());
}

#[test]
fn euler_characteristics() {
    let st = BandedUnlink::spun_trefoil();
    assert_eq!((st.num_components(), st.num_bands()), (2, 1));
    assert_eq!(st.surgered_components().unwrap(), 1);
    assert_eq!(st.euler_characteristic().unwrap(), 2);
    assert_eq!(BandedUnlink::unknotted_sphere().euler_characteristic().unwrap(), 2);
    assert_eq!(BandedUnlink::cable_diagram(3).unwrap().euler_characteristic().unwrap(), 2);
}

#[test]
fn orientability() {
    assert!(two_circles_one_band(0).orientable());
    assert!(BandedUnlink::cable_diagram(3).unwrap().orientable());
    let r = BandedUnlink::cable_diagram(3).unwrap().crosscap_sum(0).unwrap();
    assert!(!r.orientable());
    // an odd cycle of tubes without any self-band
    let mut d = BandedUnlink::parallel_copies(3).unwrap();
    d = d.tube(0, 1, true).unwrap().tube(1, 2, false).unwrap().tube(2, 0, false).unwrap();
    assert!(!d.orientable());
    let mut e = BandedUnlink::parallel_copies(3).unwrap();
    e = e.tube(0, 1, true).unwrap().tube(1, 2, true).unwrap().tube(2, 0, false).unwrap();
    assert!(e.orientable());
}

#[test]
fn degrees() {
    assert_eq!(BandedUnlink::cable_diagram(3).unwrap().degree().unwrap(), 3);
    let mut d = BandedUnlink::parallel_copies(2).unwrap();
    d.gamma = Some(MarkedCurve::new(Word::empty(), 0));
    assert_eq!(d.degree().unwrap(), 0);
    d.gamma = Some(MarkedCurve::new(Word::from_signed(&[(0, 1), (0, -1), (1, 1)]), 0));
    assert_eq!(d.degree().unwrap(), 1);
    assert!(matches!(BandedUnlink::spun_trefoil().degree(), Err(Error::Precondition(_))));
}

#[test]
fn parallel_copies_shape() {
    let one = BandedUnlink::parallel_copies(1).unwrap();
    assert_eq!(one.gamma.as_ref().unwrap().word, Word(vec![Letter::pos(0)]));
    assert_eq!(one.degree().unwrap(), 1);
    assert_eq!(BandedUnlink::parallel_copies(3).unwrap().degree().unwrap(), 3);
    let two = BandedUnlink::parallel_copies(2).unwrap();
    assert!(two.orientable());
    assert_eq!(two.surface_components(), 2);
    // each copy alone is a sphere: chi of the disjoint union is 2 per component
    assert_eq!(two.euler_characteristic().unwrap(), 4);
    assert!(matches!(BandedUnlink::parallel_copies(0), Err(Error::Precondition(_))));
    assert!(matches!(BandedUnlink::cable_diagram(0), Err(Error::Precondition(_))));
}

#[test]
fn tubes() {
    let d = BandedUnlink::parallel_copies(2).unwrap();
    let before = d.surgered_components().unwrap();
    let t = d.tube(0, 1, false).unwrap();
    assert_eq!((t.num_components(), t.num_bands()), (2, 1));
    assert_eq!(t.surgered_components().unwrap(), before - 1);
    assert_eq!(t.euler_characteristic().unwrap(), 2);
    let tw = d.tube(0, 1, true).unwrap();
    assert_eq!(tw.bands[0].half_twists, 1);
    assert!(matches!(d.tube(0, 0, false), Err(Error::Precondition(_))));
    assert!(matches!(d.tube(0, 5, false), Err(Error::Structural(_))));
}

#[test]
fn cable_shapes() {
    let c1 = BandedUnlink::cable_diagram(1).unwrap();
    assert_eq!((c1.num_components(), c1.num_bands(), c1.degree().unwrap()), (1, 0, 1));
    let c2 = BandedUnlink::cable_diagram(2).unwrap();
    assert_eq!((c2.num_components(), c2.num_bands(), c2.degree().unwrap()), (2, 1, 2));
    assert!(c2.bands[0].is_twisted());
    for n in 1..=20 {
        let c = BandedUnlink::cable_diagram(n).unwrap();
        assert_eq!(c.degree().unwrap(), n as i64);
        assert!(c.is_two_knot().unwrap());
        assert!(c.orientable());
    }
}

#[test]
fn connected_sums() {
    let st = BandedUnlink::spun_trefoil();
    let u = BandedUnlink::unknotted_sphere();
    let s = st.connected_sum(&u).unwrap();
    assert_eq!(s.euler_characteristic().unwrap(), 2);
    assert_eq!(s.surface_components(), 1);
    let ss = st.connected_sum(&st).unwrap();
    assert_eq!((ss.num_components(), ss.num_bands()), (4, 3));
    assert_eq!(ss.euler_characteristic().unwrap(), 2);
    ss.validate().unwrap();
    let c = BandedUnlink::cable_diagram(1).unwrap();
    let cc = c.connected_sum(&c).unwrap();
    assert_eq!(cc.degree().unwrap(), 2);
    assert!(BandedUnlink::new().connected_sum(&u).is_err());
}

#[test]
fn crosscap_sums() {
    let r = BandedUnlink::unknotted_sphere().crosscap_sum(0).unwrap();
    assert_eq!(r.euler_characteristic().unwrap(), 1);
    assert!(!r.orientable());
    let k = r.crosscap_sum(0).unwrap();
    assert_eq!(k.euler_characteristic().unwrap(), 0);
    let c = BandedUnlink::cable_diagram(2).unwrap().crosscap_sum(0).unwrap();
    assert_eq!(c.euler_characteristic().unwrap(), 1);
    assert!(!c.orientable());
    assert!(matches!(r.crosscap_sum(3), Err(Error::Structural(_))));
}

#[test]
fn untwisting_moves_the_crosscap() {
    let d = BandedUnlink::cable_diagram(2).unwrap().crosscap_sum(0).unwrap();
    let (tube, cc) = (0, 1);
    let e = d.untwist_with_crosscap(tube, cc).unwrap();
    assert_eq!(e.bands[tube].half_twists, 0);
    assert_eq!(e.bands[cc].start.component, 1);
    assert!(e.is_crosscap(cc));
    assert_eq!(e.euler_characteristic().unwrap(), d.euler_characteristic().unwrap());
    assert_eq!(e.orientable(), d.orientable());
    assert_eq!(e.degree().unwrap(), d.degree().unwrap());
    // tube is no longer twisted
    assert!(matches!(e.untwist_with_crosscap(tube, cc), Err(Error::RewriteNotApplicable(_))));
}

#[test]
fn untwisting_along_a_cable_chain() {
    for n in 2..=8 {
        let mut d = BandedUnlink::cable_diagram(n).unwrap().crosscap_sum(0).unwrap();
        let cc = d.num_bands() - 1;
        let chi = d.euler_characteristic().unwrap();
        for tube in 0..n - 1 {
            d = d.untwist_with_crosscap(tube, cc).unwrap();
            assert_eq!(d.euler_characteristic().unwrap(), chi);
            assert!(!d.orientable());
            assert_eq!(d.degree().unwrap(), n as i64);
        }
        assert!(d.bands[..n - 1].iter().all(|b| b.half_twists == 0));
        assert_eq!(d.crosscaps(), vec![cc]);
        assert_eq!(d.bands[cc].start.component, n - 1);
    }
}

fn untwisted_chain(n: usize) -> BandedUnlink {
    let mut d = BandedUnlink::parallel_copies(n).unwrap();
    for i in 0..n - 1 {
        d = d.tube(i, i + 1, false).unwrap();
    }
    d
}

fn split_pairs(n: usize) -> BandedUnlink {
    let mut d = BandedUnlink::parallel_copies(n).unwrap();
    for i in (0..n - 1).step_by(2) {
        d = d.tube(i, i + 1, false).unwrap();
    }
    d
}

#[test]
fn pair_cancel_isolated() {
    let d = untwisted_chain(2);
    let (e, how) = d.untwisted_pair_cancel_traced(0, 1).unwrap();
    assert_eq!(how, PairCancel::Discarded);
    assert_eq!(e.num_components(), 0);
    assert_eq!(e.degree().unwrap(), 0);
    assert_eq!(d.surface_components() - 1, e.surface_components());
}

#[test]
fn pair_cancel_four_and_three() {
    let mut d = split_pairs(4);
    assert_eq!(d.degree().unwrap(), 4);
    for expect in [2, 0] {
        let before = d.surface_components();
        let (a, b) = d.find_cancellable_pair().unwrap();
        d = d.untwisted_pair_cancel(a, b).unwrap();
        assert_eq!(d.degree().unwrap(), expect);
        assert_eq!(d.surface_components(), before - 1);
    }
    let d3 = split_pairs(3);
    let e = d3.untwisted_pair_cancel(0, 1).unwrap();
    assert_eq!(e.num_components(), 1);
    assert_eq!(e.degree().unwrap(), 1);
}

#[test]
fn pair_cancel_rejections() {
    let twisted = BandedUnlink::cable_diagram(2).unwrap();
    assert!(matches!(twisted.untwisted_pair_cancel(0, 1), Err(Error::RewriteNotApplicable(_))));
    let mut apart = untwisted_chain(3);
    apart.gamma = Some(MarkedCurve::new(Word::from_signed(&[(0, 1), (2, 1), (1, 1)]), 0));
    let with_tube = apart.tube(0, 2, false).unwrap();
    assert!(matches!(with_tube.untwisted_pair_cancel(0, 1), Err(Error::RewriteNotApplicable(_))));
    let mut signs = untwisted_chain(2);
    signs.gamma = Some(MarkedCurve::new(Word::from_signed(&[(0, 1), (1, -1)]), 0));
    assert!(signs.untwisted_pair_cancel(0, 1).is_err());
}

#[test]
fn pair_cancel_inside_chain() {
    let d = untwisted_chain(4);
    let (e, how) = d.untwisted_pair_cancel_traced(1, 2).unwrap();
    assert_eq!(how, PairCancel::Bridged);
    assert_eq!(e.num_components(), 2);
    assert_eq!(e.num_bands(), 1);
    assert!(e.is_two_knot().unwrap());
    let (f, how) = d.untwisted_pair_cancel_traced(0, 1).unwrap();
    assert_eq!(how, PairCancel::Absorbed);
    assert_eq!((f.num_components(), f.num_bands()), (2, 1));
    assert_eq!(f.degree().unwrap(), 2);
}

#[test]
fn pair_cancel_keeps_crosscap() {
    let d = untwisted_chain(2).crosscap_sum(1).unwrap();
    let (e, how) = d.untwisted_pair_cancel_traced(0, 1).unwrap();
    assert_eq!(how, PairCancel::Kept);
    assert_eq!(e, {
        let mut r = BandedUnlink::standard_projective_plane();
        r.bands[0].name = "x1".into();
        r.gamma = Some(MarkedCurve::new(Word::empty(), 0));
        r
    });
}

#[test]
fn validation_errors() {
    let mut d = two_circles_one_band(0);
    d.bands[0].end.component = 7;
    assert!(matches!(d.validate(), Err(Error::Structural(_))));
    let mut d = two_circles_one_band(0);
    d.bands[0].end.site = 3;
    assert!(d.validate().is_err());
    let mut d = two_circles_one_band(0);
    d.bands[0].core = Word(vec![Letter::pos(9)]);
    assert!(d.validate().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_two_knots_are_spheres(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let d = random::random_two_knot(&mut r, 6, 4);
        d.validate().unwrap();
        prop_assert_eq!(d.surgered_components().unwrap(), 1);
        prop_assert_eq!(d.euler_characteristic().unwrap(), 2);
        prop_assert!(d.is_two_knot().unwrap());
        let x = d.crosscap_sum(0).unwrap();
        prop_assert_eq!(x.euler_characteristic().unwrap(), 1);
        prop_assert!(!x.orientable());
    }

    #[test]
    fn surgery_matches_walking_oracle(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let d = random::random_diagram(&mut r, 5, 7);
        prop_assert_eq!(d.surgered_components().unwrap(), walk_circles(&d));
    }

    #[test]
    fn band_graph_connectivity_matches_surface(seed in any::<u64>()) {
        // two random spheres in disjoint union: one surface component each
        let mut r = random::rng(seed);
        let a = random::random_two_knot(&mut r, 4, 2);
        let b = random::random_two_knot(&mut r, 4, 2);
        let mut d = a.connected_sum(&b).unwrap();
        let joined = d.bands.len() - 1;
        d.remove_bands(&[joined]);
        prop_assert_eq!(d.surface_components(), 2);
        prop_assert_eq!(d.surgered_components().unwrap(), 2);
        prop_assert_eq!(d.euler_characteristic().unwrap(), 4);
        let t = d.tube(0, a.num_components(), rand::Rng::gen_bool(&mut r, 0.5)).unwrap();
        prop_assert_eq!(t.surface_components(), 1);
        prop_assert_eq!(t.surgered_components().unwrap(), 1);
    }

    #[test]
    fn normalize_twists_idempotent_and_commutes(seed in any::<u64>(), n in 1usize..8) {
        let mut r = random::rng(seed);
        let d = random::random_two_knot(&mut r, 5, 3);
        let once = d.normalize_twists();
        prop_assert_eq!(once.normalize_twists(), once.clone());
        prop_assert_eq!(d.crosscap_sum(0).unwrap().normalize_twists(), once.crosscap_sum(0).unwrap());
        prop_assert_eq!(
            d.connected_sum(&BandedUnlink::cable_diagram(n).unwrap()).unwrap().normalize_twists(),
            once.connected_sum(&BandedUnlink::cable_diagram(n).unwrap()).unwrap()
        );
        prop_assert_eq!(d.euler_characteristic().unwrap(), once.euler_characteristic().unwrap());
        prop_assert_eq!(d.orientable(), once.orientable());
    }
}
