//! Satellite 2-knots and the classification of their Gluck twists.
//!
//! Three independent routes reach the same answer:
//!
//! * sliding the marked curve off the Kirby diagram of the pattern and
//!   reading its framing parity ([`pipeline_kirby`]);
//! * splitting the satellite into the pattern plus parallel copies of the
//!   companion and cancelling copies in untwisted pairs ([`second_proof_reduce`]);
//! * rewriting the unit 2-knot as a cable summed with the pattern, then
//!   unknotting the cable with a crosscap ([`unit_knot_reduce`]).

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{BandedUnlink, MarkedCurve};
use crate::error::{Error, Result};
use crate::fiber::{self, CableOfTwistSpun, KnotName, SeifertMatrix};
use crate::groups::FgAbelian;
use crate::kirby::{self, KirbyDiagram};
use crate::word::{Letter, Word};

/// The 1-knot a twist spin is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotSpec {
    Named(KnotName),
    Matrix(SeifertMatrix),
}

impl KnotSpec {
    pub fn seifert(&self) -> Result<SeifertMatrix> {
        match self {
            KnotSpec::Named(k) => k.seifert(),
            KnotSpec::Matrix(v) => Ok(v.clone()),
        }
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::Named(k) => write!(f, "{k}"),
            KnotSpec::Matrix(v) => write!(f, "V{}", v.size()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompanionDescriptor {
    Unknot,
    TwistSpun { twist: usize, knot: KnotSpec },
    Ribbon { label: String },
    Opaque { label: String },
}

impl CompanionDescriptor {
    pub fn twist_spun(twist: usize, knot: &str) -> Self {
        CompanionDescriptor::TwistSpun {
            twist,
            knot: KnotSpec::Named(knot.parse().expect("built-in knot name")),
        }
    }

    pub fn opaque(label: &str) -> Self {
        CompanionDescriptor::Opaque { label: label.into() }
    }

    pub fn label(&self) -> String {
        match self {
            CompanionDescriptor::Unknot => "U".into(),
            CompanionDescriptor::TwistSpun { twist, knot } => format!("tau{twist}({knot})"),
            CompanionDescriptor::Ribbon { label } | CompanionDescriptor::Opaque { label } => label.clone(),
        }
    }

    pub fn summand(&self) -> Summand {
        match self {
            CompanionDescriptor::Unknot => Summand::Unknot,
            _ => Summand::Companion(self.label()),
        }
    }

    /// Ribbon and twist-spun 2-knots have trivial Gluck twist.
    pub fn gluck_trivial(&self) -> bool {
        !matches!(self, CompanionDescriptor::Opaque { .. })
    }
}

/// What is known about the pattern 2-knot once the marked curve is forgotten.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternKind {
    Unknot,
    Ribbon { label: String },
    TwistSpun { label: String },
    Opaque { label: String },
}

impl PatternKind {
    pub fn opaque(label: &str) -> Self {
        PatternKind::Opaque { label: label.into() }
    }

    pub fn label(&self) -> String {
        match self {
            PatternKind::Unknot => "U".into(),
            PatternKind::Ribbon { label } | PatternKind::TwistSpun { label } | PatternKind::Opaque { label } => {
                label.clone()
            }
        }
    }

    pub fn summand(&self) -> Summand {
        match self {
            PatternKind::Unknot => Summand::Unknot,
            _ => Summand::Pattern(self.label()),
        }
    }

    pub fn gluck_trivial(&self) -> bool {
        !matches!(self, PatternKind::Opaque { .. })
    }
}

/// A connected summand in a knot expression. Variant order is the sort order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Summand {
    Companion(String),
    Pattern(String),
    /// The standard projective plane.
    ProjectivePlane,
    Unknot,
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Companion(l) | Summand::Pattern(l) => write!(f, "{l}"),
            Summand::ProjectivePlane => write!(f, "R"),
            Summand::Unknot => write!(f, "U"),
        }
    }
}

/// Connected sum of summands with unknots removed, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct KnotExpression(Vec<Summand>);

impl KnotExpression {
    pub fn new(summands: impl IntoIterator<Item = Summand>) -> Self {
        let mut v: Vec<Summand> = summands.into_iter().filter(|s| *s != Summand::Unknot).collect();
        v.sort();
        KnotExpression(v)
    }

    pub fn summands(&self) -> &[Summand] {
        &self.0
    }

    pub fn sum(&self, other: &KnotExpression) -> KnotExpression {
        KnotExpression::new(self.0.iter().chain(&other.0).cloned())
    }

    pub fn without_projective_plane(&self) -> KnotExpression {
        let mut v = self.0.clone();
        if let Some(i) = v.iter().position(|s| *s == Summand::ProjectivePlane) {
            v.remove(i);
        }
        KnotExpression(v)
    }

    pub fn is_unknot(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for KnotExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "U");
        }
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" # "))
    }
}

/// The knot along which the Gluck twist is equivalently performed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GluckClass {
    pub ambient: String,
    pub knot: KnotExpression,
}

impl GluckClass {
    pub fn new(ambient: &str, summands: impl IntoIterator<Item = Summand>) -> Self {
        GluckClass { ambient: ambient.into(), knot: KnotExpression::new(summands) }
    }
}

impl fmt::Display for GluckClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gluck({}; {})", self.ambient, self.knot)
    }
}

/// Pattern diagram with marked curve, plus what is known about pattern and companion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatelliteSpec {
    pub pattern: BandedUnlink,
    pub pattern_kind: PatternKind,
    pub companion: CompanionDescriptor,
    pub ambient: String,
}

impl SatelliteSpec {
    pub fn new(pattern: BandedUnlink, pattern_kind: PatternKind, companion: CompanionDescriptor) -> Result<Self> {
        let s = SatelliteSpec { pattern, pattern_kind, companion, ambient: "S4".into() };
        s.validate()?;
        Ok(s)
    }

    /// Cable of signed degree `degree`; degree 0 gives an unlinked unknot.
    pub fn cable(degree: i64, companion: CompanionDescriptor) -> Result<Self> {
        let pattern = signed_cable(degree)?;
        Self::new(pattern, PatternKind::Unknot, companion)
    }

    pub fn validate(&self) -> Result<()> {
        self.pattern.validate()?;
        self.pattern.require_two_knot()?;
        if self.pattern.gamma.is_none() {
            return Err(Error::Structural("satellite pattern needs a marked curve gamma".into()));
        }
        Ok(())
    }

    pub fn degree(&self) -> i64 {
        self.pattern.degree().expect("validated spec has gamma")
    }
}

fn signed_cable(degree: i64) -> Result<BandedUnlink> {
    if degree == 0 {
        let mut d = BandedUnlink::unknotted_sphere();
        d.gamma = Some(MarkedCurve::new(Word::empty(), 0));
        return Ok(d);
    }
    let mut d = BandedUnlink::cable_diagram(degree.unsigned_abs() as usize)?;
    if degree < 0 {
        let g = d.gamma.as_mut().unwrap();
        g.word = Word(g.word.letters().iter().map(|l| l.inv()).collect());
    }
    Ok(d)
}

/// The pattern split into a tube sum of the pattern knot and parallel copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitForm {
    /// The pattern diagram with gamma forgotten.
    pub pattern_part: BandedUnlink,
    pub copies: usize,
    /// Twist parity of the tube joining copy `i` to copy `i + 1`.
    pub tube_parities: Vec<u8>,
    /// Set when the degree is negative.
    pub reversed: bool,
}

pub fn satellite_expand(s: &SatelliteSpec) -> Result<SplitForm> {
    s.validate()?;
    let degree = s.degree();
    let copies = degree.unsigned_abs() as usize;
    let mut pattern_part = s.pattern.clone();
    pattern_part.gamma = None;
    Ok(SplitForm {
        pattern_part,
        copies,
        tube_parities: vec![1; copies.saturating_sub(1)],
        reversed: degree < 0,
    })
}

/// A reduction result with a human-readable step trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Traced<T> {
    pub value: T,
    pub steps: Vec<String>,
}

/// Split-link reduction: twisting along the tube sum equals twisting along
/// the split union, where copies cancel in untwisted pairs.
pub fn second_proof_reduce(
    f: &SplitForm,
    companion: &CompanionDescriptor,
    pattern: &PatternKind,
) -> Result<Traced<GluckClass>> {
    let mut steps = vec![format!(
        "split the tube sum into P and {} parallel copies of the companion",
        f.copies
    )];
    let mut remaining = 0;
    if f.copies > 0 {
        let mut d = BandedUnlink::parallel_copies(f.copies)?;
        for i in (0..f.copies - 1).step_by(2) {
            d = d.tube(i, i + 1, false)?;
        }
        while let Some((a, b)) = d.find_cancellable_pair() {
            steps.push(format!(
                "cancel copies {} and {} joined by an untwisted tube",
                d.components[a].name, d.components[b].name
            ));
            d = d.untwisted_pair_cancel(a, b)?;
        }
        remaining = d.num_components();
        if remaining != f.copies % 2 || d.degree()?.unsigned_abs() as usize != remaining {
            return Err(Error::Consistency(format!(
                "pair cancellation left {remaining} copies from {}",
                f.copies
            )));
        }
    }
    let mut summands = vec![pattern.summand()];
    if remaining == 1 {
        steps.push("one copy remains: split union of C and P, equivalent to C # P".into());
        summands.push(companion.summand());
    } else {
        steps.push("all copies cancelled: only P remains".into());
    }
    Ok(Traced { value: GluckClass::new("S4", summands), steps })
}

/// Diagram-level run of the crosscap unknotting of a cable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscapRun {
    pub expression: KnotExpression,
    pub diagram: BandedUnlink,
    pub untwists: usize,
    pub cancels: usize,
    pub steps: Vec<String>,
}

/// Pushes the crosscap along the cable, untwisting each tube, then cancels
/// copies in pairs. Ends at `R` (even degree) or `C # R` (odd).
pub fn crosscap_reduce(d: &BandedUnlink, companion: &CompanionDescriptor) -> Result<CrosscapRun> {
    d.validate()?;
    let degree = d.degree()?;
    let ccs = d.crosscaps();
    if ccs.len() != 1 {
        return Err(Error::Precondition(format!("expected one crosscap, found {}", ccs.len())));
    }
    if d.bands.iter().enumerate().any(|(i, b)| i != ccs[0] && (b.is_self_band() || !b.core.is_empty())) {
        return Err(Error::Precondition("pattern is not a cable chain of empty-core tubes".into()));
    }
    let mut d = d.normalize_twists();
    let (mut untwists, mut cancels) = (0, 0);
    let mut steps = Vec::new();
    loop {
        let cc_idx = d.crosscaps();
        if let Some(&cc_now) = cc_idx.first() {
            let home = d.bands[cc_now].start.component;
            let tube = d.bands.iter().position(|b| b.is_twisted() && !b.is_self_band() && b.touches(home));
            if let Some(t) = tube {
                steps.push(format!(
                    "untwist tube {} with the crosscap, moving it off {}",
                    d.bands[t].name, d.components[home].name
                ));
                d = d.untwist_with_crosscap(t, cc_now)?;
                untwists += 1;
                continue;
            }
        }
        if let Some((a, b)) = d.find_cancellable_pair() {
            steps.push(format!(
                "cancel copies {} and {} joined by an untwisted tube",
                d.components[a].name, d.components[b].name
            ));
            d = d.untwisted_pair_cancel(a, b)?;
            cancels += 1;
            continue;
        }
        break;
    }
    let linked: Vec<usize> = {
        let mut v: Vec<usize> = d.gamma.as_ref().unwrap().word.reduce().letters().iter().map(|l| l.gen).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let odd = degree.rem_euclid(2) == 1;
    let shape_ok = d.num_components() == 1
        && d.num_bands() == 1
        && d.is_crosscap(0)
        && linked.len() == odd as usize;
    if !shape_ok {
        return Err(Error::Consistency(format!(
            "crosscap reduction stuck with {} components, {} bands, {} linked copies",
            d.num_components(),
            d.num_bands(),
            linked.len()
        )));
    }
    let mut summands = vec![Summand::ProjectivePlane];
    if odd {
        summands.push(companion.summand());
    }
    Ok(CrosscapRun { expression: KnotExpression::new(summands), diagram: d, untwists, cancels, steps })
}

/// Cable of the given signed degree with a crosscap on its first copy.
pub fn cable_with_crosscap(degree: i64) -> Result<BandedUnlink> {
    signed_cable(degree)?.crosscap_sum(0)
}

/// Unit 2-knot route: the satellite becomes `cable(d, C) # P`, the crosscap
/// unknots the cable, and the Gluck twist along `K` equals the Price twist
/// along `K # R`.
pub fn unit_knot_reduce(s: &SatelliteSpec) -> Result<Traced<GluckClass>> {
    s.validate()?;
    let degree = s.degree();
    let mut steps = vec![format!(
        "unit 2-knot rewrite: satellite(P, C) ~ cable({degree}, C) # P"
    )];
    steps.push("Gluck twist along K equals Price twist along K # R".into());
    let run = crosscap_reduce(&cable_with_crosscap(degree)?, &s.companion)?;
    steps.extend(run.steps.iter().cloned());
    steps.push(format!("cable({degree}, C) # R ~ {}", run.expression));
    let with_pattern = run.expression.sum(&KnotExpression::new([s.pattern_kind.summand()]));
    steps.push(format!("K # R ~ {with_pattern}; strip R back through the Price twist"));
    let knot = with_pattern.without_projective_plane();
    Ok(Traced { value: GluckClass { ambient: s.ambient.clone(), knot }, steps })
}

/// Kirby route: dot the pattern, add the +1 circle, slide gamma off.
pub fn pipeline_kirby(s: &SatelliteSpec) -> Result<Traced<GluckClass>> {
    s.validate()?;
    let kd = KirbyDiagram::handle_decomposition(&s.pattern)?.gluck_twist(0)?;
    let initial = kd.gamma.as_ref().unwrap().framing;
    let n = kd.gamma_normalize()?;
    let change = (n.diagram.gamma.as_ref().unwrap().framing - initial).rem_euclid(2) as u8;
    let mut class = kirby::classify(change, &s.companion, &s.pattern_kind);
    class.ambient = s.ambient.clone();
    Ok(Traced {
        value: class,
        steps: vec![
            format!("{} dotted circles, {} 0-framed handles, +1 circle on a meridian", kd.dotted.len(), kd.handles.len()),
            format!("gamma slid {} times through the +1 circle; framing parity changed by {change}", n.slides),
        ],
    })
}

pub fn pipeline_split(s: &SatelliteSpec) -> Result<Traced<GluckClass>> {
    let f = satellite_expand(s)?;
    let mut t = second_proof_reduce(&f, &s.companion, &s.pattern_kind)?;
    t.value.ambient = s.ambient.clone();
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluckReport {
    pub class: GluckClass,
    pub degree: i64,
    /// Results of the Kirby, split-link and unit-knot routes, in that order.
    pub pipelines: [GluckClass; 3],
    /// The twist is known to give back the ambient manifold.
    pub trivial: bool,
}

/// Runs all three routes, insists they agree, and flags a trivial Gluck
/// twist when every remaining summand is known to be Gluck-trivial.
pub fn classify_gluck(s: &SatelliteSpec) -> Result<GluckReport> {
    let a = pipeline_kirby(s)?.value;
    let b = pipeline_split(s)?.value;
    let c = unit_knot_reduce(s)?.value;
    if a != b || b != c {
        return Err(Error::Consistency(format!("pipelines disagree: {a} / {b} / {c}")));
    }
    let trivial = a.knot.summands().iter().all(|x| match x {
        Summand::Pattern(_) => s.pattern_kind.gluck_trivial(),
        Summand::Companion(_) => s.companion.gluck_trivial(),
        Summand::ProjectivePlane => false,
        Summand::Unknot => true,
    });
    Ok(GluckReport { class: a.clone(), degree: s.degree(), pipelines: [a, b, c], trivial })
}

/// A random valid satellite spec with degree in `-10..=10`.
pub fn random_satellite<R: Rng>(rng: &mut R) -> SatelliteSpec {
    let degree: i64 = rng.gen_range(-10..=10);
    let companion = match rng.gen_range(0..4) {
        0 => CompanionDescriptor::Unknot,
        1 => {
            let knots = KnotName::catalogue();
            CompanionDescriptor::TwistSpun {
                twist: rng.gen_range(2..=5),
                knot: KnotSpec::Named(*knots.choose(rng).unwrap()),
            }
        }
        2 => CompanionDescriptor::Ribbon { label: "Rb".into() },
        _ => CompanionDescriptor::opaque("C"),
    };
    let (pattern, kind) = if rng.gen_bool(0.25) {
        (signed_cable(degree).expect("cable"), PatternKind::Unknot)
    } else {
        let mut d = crate::random::random_two_knot(rng, 5, 3);
        let u = d.num_components();
        let mut letters: Vec<Letter> = (0..degree.unsigned_abs())
            .map(|_| Letter::new(rng.gen_range(0..u), degree.signum() as i32))
            .collect();
        for _ in 0..rng.gen_range(0..4) {
            let g = rng.gen_range(0..u);
            letters.push(Letter::pos(g));
            letters.push(Letter::neg(g));
        }
        letters.shuffle(rng);
        d.gamma = Some(MarkedCurve::new(Word(letters), 0));
        let kind = match rng.gen_range(0..3) {
            0 => PatternKind::Ribbon { label: "P".into() },
            1 => PatternKind::TwistSpun { label: "P".into() },
            _ => PatternKind::opaque("P"),
        };
        (d, kind)
    };
    SatelliteSpec::new(pattern, kind, companion).expect("random spec is valid")
}

/// One row of the family report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViroRow {
    pub n: usize,
    pub degree: usize,
    pub fiber: FgAbelian,
    pub not_ribbon: bool,
    pub crosscap_unknotted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViroReport {
    pub knot: KnotName,
    pub rows: Vec<ViroRow>,
    pub pairwise_distinct: bool,
}

impl ViroReport {
    pub fn passed(&self) -> bool {
        self.pairwise_distinct && self.rows.iter().all(|r| r.not_ribbon && r.crosscap_unknotted)
    }

    pub fn table(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let fibers: Vec<String> = self.rows.iter().map(|r| r.fiber.to_string()).collect();
        let w = fibers.iter().map(|f| f.len()).max().unwrap_or(0).max(8);
        let mut out = format!("even cables of tau2({})\n", self.knot);
        out.push_str(&format!(
            "{:>3}  {:>6}  {:<w$}  {:<10}  {}\n",
            "n", "degree", "fiber H1", "not-ribbon", "crosscap-unknotted"
        ));
        for (r, f) in self.rows.iter().zip(&fibers) {
            out.push_str(&format!(
                "{:>3}  {:>6}  {:<w$}  {:<10}  {}\n",
                r.n,
                r.degree,
                f,
                yn(r.not_ribbon),
                yn(r.crosscap_unknotted)
            ));
        }
        out.push_str(&format!("pairwise distinct: {}\n", yn(self.pairwise_distinct)));
        out
    }

    pub fn machine_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&format!(
                "knot={} n={} degree={} fiber={} not_ribbon={} crosscap_unknotted={}\n",
                self.knot,
                r.n,
                r.degree,
                r.fiber.to_string().replace(' ', ""),
                r.not_ribbon,
                r.crosscap_unknotted
            ));
        }
        out.push_str(&format!(
            "knot={} pairwise_distinct={} passed={}\n",
            self.knot,
            self.pairwise_distinct,
            self.passed()
        ));
        out
    }
}

/// Even-degree cables of the 2-twist spin of `k`: fiber homology, the
/// ribbon obstruction, pairwise distinctness and crosscap unknotting.
pub fn viro_family(k: KnotName, max_n: usize) -> Result<ViroReport> {
    let v = k.seifert()?;
    let cover = fiber::branched_cover_homology(&v, 2)?;
    if !cover.is_finite() || cover.is_trivial() {
        return Err(Error::Precondition(format!(
            "double branched cover of {k} has homology {cover}; need finite and nontrivial"
        )));
    }
    let companion = CompanionDescriptor::TwistSpun { twist: 2, knot: KnotSpec::Named(k) };
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let degree = 2 * n;
        let fiber = fiber::cable_fiber_homology(&CableOfTwistSpun::new(2, degree, v.clone())?)?;
        let run = crosscap_reduce(&cable_with_crosscap(degree as i64)?, &companion)?;
        rows.push(ViroRow {
            n,
            degree,
            not_ribbon: fiber::ribbon_obstruction(&fiber),
            crosscap_unknotted: run.expression == KnotExpression::new([Summand::ProjectivePlane]),
            fiber,
        });
    }
    let pairwise_distinct = rows
        .iter()
        .enumerate()
        .all(|(i, a)| rows[i + 1..].iter().all(|b| a.fiber != b.fiber));
    Ok(ViroReport { knot: k, rows, pairwise_distinct })
}
