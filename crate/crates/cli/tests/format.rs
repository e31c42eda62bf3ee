use gluck_cli::format::{parse, print, DiagramFile, ParseErrorKind};
use gluck_core::fiber::SeifertMatrix;
use gluck_core::random::{random_diagram, random_two_knot, rng};
use gluck_core::satellite::{CompanionDescriptor, KnotSpec, PatternKind};
use gluck_core::{BandedUnlink, MarkedCurve, Word};
use proptest::prelude::*;

fn corpus() -> Vec<DiagramFile> {
    let mut ds = vec![
        BandedUnlink::unknotted_sphere(),
        BandedUnlink::spun_trefoil(),
        BandedUnlink::spun_figure_eight(),
        BandedUnlink::standard_projective_plane(),
        BandedUnlink::parallel_copies(3).unwrap(),
        BandedUnlink::spun_trefoil().connected_sum(&BandedUnlink::spun_figure_eight()).unwrap(),
        BandedUnlink::spun_trefoil().crosscap_sum(1).unwrap(),
    ];
    for n in 1..=8 {
        ds.push(BandedUnlink::cable_diagram(n).unwrap());
        ds.push(BandedUnlink::cable_diagram(n).unwrap().crosscap_sum(0).unwrap());
    }
    let mut t = BandedUnlink::spun_trefoil();
    t.gamma = Some(MarkedCurve::new(Word::from_signed(&[(0, 1), (1, -1), (0, 1)]), -3));
    ds.push(t);
    let mut files: Vec<DiagramFile> = ds.into_iter().map(DiagramFile::new).collect();
    let companions = [
        CompanionDescriptor::Unknot,
        CompanionDescriptor::twist_spun(3, "figure-eight"),
        CompanionDescriptor::TwistSpun { twist: 2, knot: KnotSpec::Matrix(SeifertMatrix::trefoil()) },
        CompanionDescriptor::Ribbon { label: "K9".into() },
        CompanionDescriptor::opaque("C"),
    ];
    let patterns = [
        PatternKind::Unknot,
        PatternKind::Ribbon { label: "P".into() },
        PatternKind::TwistSpun { label: "tau5(trefoil)".into() },
        PatternKind::opaque("P"),
    ];
    for (i, f) in files.iter_mut().enumerate() {
        if i % 2 == 0 {
            f.name = Some(format!("diagram {i}"));
            f.companion = Some(companions[i % companions.len()].clone());
            f.pattern = Some(patterns[i % patterns.len()].clone());
        }
    }
    files
}

#[test]
fn corpus_round_trips() {
    let files = corpus();
    assert!(files.len() >= 20);
    for f in files {
        let text = print(&f);
        assert_eq!(parse(&text).unwrap(), f, "{text}");
    }
}

#[test]
fn shipped_files_match_builders() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../diagrams");
    let read = |n: &str| parse(&std::fs::read_to_string(format!("{dir}/{n}")).unwrap()).unwrap();
    let cable = read("cable3.gk");
    assert_eq!(cable.diagram, BandedUnlink::cable_diagram(3).unwrap());
    assert_eq!(cable.diagram.degree().unwrap(), 3);
    assert_eq!(read("spun_trefoil.gk").diagram, BandedUnlink::spun_trefoil());
    assert_eq!(read("unknot.gk").diagram, BandedUnlink::unknotted_sphere());
    assert_eq!(read("cable4_crosscap.gk").diagram, BandedUnlink::cable_diagram(4).unwrap().crosscap_sum(0).unwrap());
}

#[test]
fn minimal_file_is_unknotted_sphere() {
    let f = parse("component c1\n").unwrap();
    assert_eq!(f.diagram, BandedUnlink::unknotted_sphere());
    assert_eq!(f.diagram.euler_characteristic().unwrap(), 2);
}

#[test]
fn inverse_spellings_agree() {
    let a = parse("component c1\ncomponent c2\nband b from c1 to c2\ngamma word \"c1' C2 c2\" framing 1\n").unwrap();
    let g = a.diagram.gamma.unwrap();
    assert_eq!(g.word, Word::from_signed(&[(0, -1), (1, -1), (1, 1)]));
    assert_eq!(g.framing, 1);
}

#[test]
fn comments_and_blank_lines() {
    let f = parse("# header\n\ncomponent c1   # trailing\n  \n").unwrap();
    assert_eq!(f.diagram.num_components(), 1);
}

fn error_at(text: &str) -> (usize, usize, ParseErrorKind) {
    let e = parse(text).unwrap_err();
    (e.line, e.column, e.kind)
}

#[test]
fn missing_component_is_referential_error() {
    let (line, col, kind) = error_at("component c1\nband b1 from c1 to c9 twists 1\n");
    assert_eq!((line, col), (2, 20));
    assert!(matches!(kind, ParseErrorKind::UnknownReference(_)));
    let (line, col, kind) = error_at("component c1\ngamma word \"c1 c2\" framing 0\n");
    assert_eq!((line, col), (2, 16));
    assert!(matches!(kind, ParseErrorKind::UnknownReference(_)));
}

#[test]
fn bad_twists_and_sites() {
    let (line, col, kind) = error_at("component a\ncomponent b\nband t from a to b twists -1\n");
    assert_eq!((line, col), (3, 27));
    assert!(matches!(kind, ParseErrorKind::BadTwists(_)));
    let (_, _, kind) = error_at("component a\ncomponent b\nband t from a.3 to b\n");
    assert!(matches!(kind, ParseErrorKind::BadSite(_)));
    let (_, _, kind) = error_at("component a\ncomponent b\nband t from a.0 to b\nband u from a.0 to b\n");
    assert!(matches!(kind, ParseErrorKind::BadSite(_)));
}

#[test]
fn syntax_errors() {
    let cases = [
        ("bogus c1\n", 1, 1),
        ("component C1\n", 1, 11),
        ("component c1\ncomponent c1\n", 2, 11),
        ("component c1\nband b from c1\n", 2, 15),
        ("component c1\ngamma word \"c1\n", 2, 12),
        ("component c1 extra\n", 1, 14),
        ("component a\ncomponent b\nband t from a to b\nband t from a to b\n", 4, 6),
    ];
    for (text, line, col) in cases {
        let e = parse(text).unwrap_err();
        assert_eq!((e.line, e.column), (line, col), "{text:?}: {e}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn random_round_trip(seed in any::<u64>(), knot in any::<bool>()) {
        let mut r = rng(seed);
        let d = if knot { random_two_knot(&mut r, 6, 4) } else { random_diagram(&mut r, 5, 6) };
        let f = DiagramFile::new(d);
        prop_assert_eq!(parse(&print(&f)).unwrap(), f);
    }
}
