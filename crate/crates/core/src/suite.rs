//! Property suite: every structural equivalence and formula checked over
//! all meet-semilattices up to a size bound, plus seeded samples.
//!
//! Items are evaluated in parallel and merged in input order, so the report
//! depends only on the configuration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write as _;

use crate::duality::{
    dual_by_one_cogenerated, dual_ideal, dual_ideal_by_complement, dual_ideal_by_nonfaces, eagon_reiner_cm,
    graft_report, height2_classification, ideal_by_one_cogenerated, intersect_ideal_coideal, is_flag_dual,
    is_shellable, poset_ideal_dual, stanley_reisner_complex,
};
use crate::error::Error;
use crate::generate;
use crate::linalg::Field;
use crate::monomial::{
    colon_formula, generator_monomial, lattice_ideal, linear_quotients_search, preceding_ideal, subfamily_ideal,
    DEFAULT_SEARCH_BUDGET,
};
use crate::resolution::{
    betti_oracle, mapping_cone_resolution, meet_distributive_differential, regularity_bounds, BettiTable,
    DEFAULT_BASIS_CAP,
};
use crate::semilattice::MeetSemilattice;

/// Failure messages kept per check.
const KEPT_FAILURES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub max_elements: usize,
    pub seed: u64,
    #[serde(serialize_with = "field_name")]
    pub field: Field,
    /// Random meet-semilattices one and two elements above the bound.
    pub larger_samples: usize,
    /// Random distributive lattices for the one-cogenerated decomposition.
    pub decomposition_samples: usize,
    /// Ideal/coideal pairs drawn per distributive lattice.
    pub intersection_samples: usize,
    pub graft_samples: usize,
    pub search_budget: u64,
    /// Run the corrupted claim that must be falsified.
    pub negative_control: bool,
}

fn field_name<S: serde::Serializer>(field: &Field, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&field.to_string())
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_elements: 8,
            seed: 0,
            field: Field::Rationals,
            larger_samples: 20,
            decomposition_samples: 30,
            intersection_samples: 12,
            graft_samples: 200,
            search_budget: DEFAULT_SEARCH_BUDGET / 50,
            negative_control: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    ColonIdeals,
    LinearQuotients,
    ConeResolution,
    ClosedForm,
    Regularity,
    DualCmShellable,
    SemimodularLinear,
    DualRoutes,
    HeightTwoPrimes,
    FlagDual,
    OneCogenerated,
    PosetIdealDual,
    IdealCoidealIntersection,
    Graft,
    NegativeControl,
}

impl CheckKind {
    pub const ALL: [CheckKind; 15] = [
        CheckKind::ColonIdeals,
        CheckKind::LinearQuotients,
        CheckKind::ConeResolution,
        CheckKind::ClosedForm,
        CheckKind::Regularity,
        CheckKind::DualCmShellable,
        CheckKind::SemimodularLinear,
        CheckKind::DualRoutes,
        CheckKind::HeightTwoPrimes,
        CheckKind::FlagDual,
        CheckKind::OneCogenerated,
        CheckKind::PosetIdealDual,
        CheckKind::IdealCoidealIntersection,
        CheckKind::Graft,
        CheckKind::NegativeControl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::ColonIdeals => "colon-ideals",
            CheckKind::LinearQuotients => "linear-quotients",
            CheckKind::ConeResolution => "cone-resolution",
            CheckKind::ClosedForm => "closed-form",
            CheckKind::Regularity => "regularity",
            CheckKind::DualCmShellable => "dual-cm-shellable",
            CheckKind::SemimodularLinear => "semimodular-linear",
            CheckKind::DualRoutes => "dual-routes",
            CheckKind::HeightTwoPrimes => "height-two-primes",
            CheckKind::FlagDual => "flag-dual",
            CheckKind::OneCogenerated => "one-cogenerated",
            CheckKind::PosetIdealDual => "poset-ideal-dual",
            CheckKind::IdealCoidealIntersection => "ideal-coideal-intersection",
            CheckKind::Graft => "graft",
            CheckKind::NegativeControl => "negative-control",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            CheckKind::ColonIdeals => "H_L(<p) : u_p is generated by y_{p minus t}, t in N(p)",
            CheckKind::LinearQuotients => "meet-distributive <=> linear quotients <=> linear resolution",
            CheckKind::ConeResolution => "mapping cone resolves H_L; minimal <=> meet-irredundant",
            CheckKind::ClosedForm => "closed form is a minimal resolution with the oracle Betti numbers",
            CheckKind::Regularity => "reg H_L within the neighbor bound, equal to it when meet-irredundant",
            CheckKind::DualCmShellable => "dual shellable <=> dual Cohen-Macaulay <=> meet-distributive",
            CheckKind::SemimodularLinear => "upper semimodular lattice: linear resolution <=> distributive",
            CheckKind::DualRoutes => "cover, complement and nonface duals agree; duality is an involution",
            CheckKind::HeightTwoPrimes => "height-2 primes are (x_p, y_q), p <= q; higher primes <=> not distributive",
            CheckKind::FlagDual => "dual complex flag <=> distributive",
            CheckKind::OneCogenerated => "H_I and its dual decompose over 1-cogenerated ideals",
            CheckKind::PosetIdealDual => "poset ideal dual formula equals the cover dual",
            CheckKind::IdealCoidealIntersection => "intersection dual formula holds; rank <= reg <= rank + 1",
            CheckKind::Graft => "grafted complexes have Cohen-Macaulay facet ideals and pure duals",
            CheckKind::NegativeControl => "corrupted claim: meet-distributive <=> meet-irredundant",
        }
    }

    /// The negative control passes when it is falsified.
    pub fn expects_failure(self) -> bool {
        self == CheckKind::NegativeControl
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: &'static str,
    pub statement: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
    pub expects_failure: bool,
    pub passed: bool,
}

impl CheckSummary {
    fn new(kind: CheckKind) -> CheckSummary {
        CheckSummary {
            name: kind.name(),
            statement: kind.statement(),
            checked: 0,
            failed: 0,
            skipped: 0,
            failures: Vec::new(),
            expects_failure: kind.expects_failure(),
            passed: false,
        }
    }

    fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Pass => self.checked += 1,
            Outcome::Fail(msg) => {
                self.checked += 1;
                self.failed += 1;
                if self.failures.len() < KEPT_FAILURES {
                    self.failures.push(msg);
                }
            }
            Outcome::Skip(_) => self.skipped += 1,
        }
    }

    fn finish(mut self) -> CheckSummary {
        self.passed = if self.expects_failure { self.failed > 0 } else { self.failed == 0 };
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub semilattices: usize,
    pub sampled_semilattices: usize,
    pub checks: Vec<CheckSummary>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn check(&self, kind: CheckKind) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == kind.name())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "suite: {} meet-semilattices with at most {} elements, {} sampled larger, seed {}, field {}",
            self.semilattices, c.max_elements, self.sampled_semilattices, c.seed, c.field
        );
        for check in &self.checks {
            let verdict = match (check.passed, check.expects_failure) {
                (true, true) => "pass (falsified as expected)",
                (false, true) => "FAIL (not falsified)",
                (true, false) => "pass",
                (false, false) => "FAIL",
            };
            let _ = writeln!(
                out,
                "{:<28} checked {:>5}  failed {:>4}  skipped {:>3}  {}",
                check.name, check.checked, check.failed, check.skipped, verdict
            );
            if !check.expects_failure {
                for f in &check.failures {
                    let _ = writeln!(out, "    {f}");
                }
            }
        }
        let _ = writeln!(out, "result: {}", if self.passed { "pass" } else { "FAIL" });
        out
    }
}

/// Cover relations by label, for failure messages.
pub fn describe(lattice: &MeetSemilattice) -> String {
    let p = lattice.poset();
    let covers: Vec<String> = p.covers().iter().map(|(a, b)| format!("{}<{}", p.label(*a), p.label(*b))).collect();
    format!("[{} elements: {}]", lattice.len(), covers.join(" "))
}

fn outcome(ok: bool, message: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(message())
    }
}

fn failed(lattice: &MeetSemilattice, what: impl std::fmt::Display) -> Outcome {
    Outcome::Fail(format!("{} {what}", describe(lattice)))
}

/// All per-semilattice checks on one input.
pub fn lattice_checks(lattice: &MeetSemilattice, config: &SuiteConfig) -> Vec<(CheckKind, Outcome)> {
    let field = config.field;
    let mut out = Vec::new();
    let h = lattice_ideal(lattice);
    let n = lattice.irreducibles().len();
    let md = lattice.is_meet_distributive();
    let mi = lattice.is_meet_irredundant();

    let colon_ok = (0..lattice.len()).filter(|&p| p != lattice.bottom()).all(|p| {
        let u = generator_monomial(lattice, p);
        preceding_ideal(lattice, p).colon(&u).same_ideal(&colon_formula(lattice, p).expect("not the bottom"))
    });
    out.push((CheckKind::ColonIdeals, outcome(colon_ok, || format!("{} colon ideal mismatch", describe(lattice)))));

    let betti: BettiTable = match betti_oracle(&h, field) {
        Ok(b) => b,
        Err(e) => {
            out.push((CheckKind::LinearQuotients, Outcome::Skip(e.to_string())));
            return out;
        }
    };
    let linear = betti.is_linear(n);
    out.push((
        CheckKind::LinearQuotients,
        match linear_quotients_search(&h, 64, config.search_budget) {
            Ok(order) => {
                let lq = order.is_some();
                outcome(md == lq && lq == linear, || {
                    format!("{} meet-distributive {md}, linear quotients {lq}, linear {linear}", describe(lattice))
                })
            }
            Err(e) => Outcome::Skip(e.to_string()),
        },
    ));

    out.push((
        CheckKind::ConeResolution,
        match mapping_cone_resolution(lattice, DEFAULT_BASIS_CAP) {
            Ok(cone) => match cone.verify_resolution(&h, field) {
                Err(e) => failed(lattice, format!("mapping cone: {e}")),
                Ok(()) => {
                    let minimal = cone.is_minimal();
                    let reduced = BettiTable::from_minimal_complex(&cone.minimize(), field);
                    if minimal != mi {
                        failed(lattice, format!("minimal {minimal}, meet-irredundant {mi}"))
                    } else if reduced.as_ref() != Ok(&betti) {
                        failed(lattice, "minimized cone disagrees with the oracle")
                    } else {
                        Outcome::Pass
                    }
                }
            },
            Err(e) => Outcome::Skip(e.to_string()),
        },
    ));

    if md {
        out.push((
            CheckKind::ClosedForm,
            match meet_distributive_differential(lattice) {
                Ok(c) => match c.verify_resolution(&h, field) {
                    Err(e) => failed(lattice, format!("closed form: {e}")),
                    Ok(()) => outcome(
                        c.is_minimal() && BettiTable::from_minimal_complex(&c, field).as_ref() == Ok(&betti),
                        || format!("{} closed form not minimal or Betti mismatch", describe(lattice)),
                    ),
                },
                Err(e) => failed(lattice, e),
            },
        ));
    }

    let reg = betti.regularity().unwrap_or(0);
    let (upper, exact) = regularity_bounds(lattice);
    out.push((
        CheckKind::Regularity,
        outcome(n <= reg && reg <= upper && (!mi || reg == exact), || {
            format!("{} reg {reg}, bound {upper}, neighbor value {exact}, meet-irredundant {mi}", describe(lattice))
        }),
    ));

    if n > 0 {
        let dual = dual_ideal(&h).expect("proper ideal");
        out.push((
            CheckKind::DualCmShellable,
            match (
                eagon_reiner_cm(&dual, field),
                stanley_reisner_complex(&dual).and_then(|c| is_shellable(&c, config.search_budget)),
            ) {
                (Ok(cm), Ok(shellable)) => outcome(cm == shellable && cm == md, || {
                    format!("{} shellable {shellable}, CM {cm}, meet-distributive {md}", describe(lattice))
                }),
                (Err(e), _) | (_, Err(e)) => Outcome::Skip(e.to_string()),
            },
        ));

        let complement = dual_ideal_by_complement(&h);
        let nonfaces = dual_ideal_by_nonfaces(&h);
        let back = dual_ideal(&dual);
        out.push((
            CheckKind::DualRoutes,
            outcome(
                complement.as_ref() == Ok(&dual)
                    && nonfaces.as_ref() == Ok(&dual)
                    && back.as_ref() == Ok(&h.minimal_generators()),
                || format!("{} dual routes disagree", describe(lattice)),
            ),
        ));
    }

    if lattice.is_lattice() {
        let distributive = lattice.classify().is_distributive == Some(true);
        if lattice.is_upper_semimodular() == Some(true) {
            out.push((
                CheckKind::SemimodularLinear,
                outcome(linear == distributive, || {
                    format!("{} linear {linear}, distributive {distributive}", describe(lattice))
                }),
            ));
        }
        out.push((
            CheckKind::HeightTwoPrimes,
            match height2_classification(lattice) {
                Ok(r) => outcome(r.consistent && r.matches_order, || format!("{} {r:?}", describe(lattice))),
                Err(e) => failed(lattice, e),
            },
        ));
        out.push((
            CheckKind::FlagDual,
            match is_flag_dual(lattice) {
                Ok(flag) => outcome(flag == distributive, || {
                    format!("{} flag {flag}, distributive {distributive}", describe(lattice))
                }),
                Err(e) => failed(lattice, e),
            },
        ));
    }

    if config.negative_control {
        out.push((
            CheckKind::NegativeControl,
            outcome(md == mi, || format!("{} meet-irredundant but not meet-distributive", describe(lattice))),
        ));
    }
    out
}

fn sub_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A random nonempty poset ideal: the down-set of a random subset.
fn random_ideal(rng: &mut ChaCha8Rng, lattice: &MeetSemilattice) -> u64 {
    let p = lattice.poset();
    let pick = rng.gen_range(0..=p.all()) | 1 << lattice.bottom();
    p.downset(pick).0
}

/// The two sides of the one-cogenerated decomposition on sampled ideals.
pub fn one_cogenerated_checks(config: &SuiteConfig) -> Vec<Outcome> {
    let mut rng = sub_rng(config.seed, 1);
    let lattices: Vec<MeetSemilattice> =
        (0..config.decomposition_samples).map(|_| generate::random_distributive_lattice(&mut rng, 5)).collect();
    let ideals: Vec<Vec<u64>> = lattices.iter().map(|l| (0..6).map(|_| random_ideal(&mut rng, l)).collect()).collect();
    lattices
        .par_iter()
        .zip(ideals.par_iter())
        .flat_map_iter(|(l, ideals)| {
            ideals.iter().map(move |&i| {
                let h = subfamily_ideal(l, i);
                let intersection_ok = ideal_by_one_cogenerated(l, i).same_ideal(&h);
                let dual_ok = match (dual_by_one_cogenerated(l, i), dual_ideal(&h)) {
                    (Ok(a), Ok(b)) => a.same_ideal(&b),
                    (Err(Error::UnitIdeal), _) | (_, Err(Error::UnitIdeal)) => h.is_unit(),
                    _ => false,
                };
                outcome(intersection_ok && dual_ok, || format!("{} ideal {:?}", describe(l), l.poset().labels_of(i)))
            })
        })
        .collect()
}

/// The poset ideal dual formula on every nonempty ideal of every
/// distributive lattice with at most `max_irreducibles` join-irreducibles.
pub fn poset_ideal_dual_checks(max_irreducibles: usize) -> Vec<Outcome> {
    let lattices = generate::distributive_lattices(max_irreducibles);
    lattices
        .par_iter()
        .flat_map_iter(|l| {
            let ideals = l.poset().enumerate_ideals(64).expect("small lattice");
            ideals.into_iter().filter(|i| i.0 != 0).map(move |i| {
                let h = subfamily_ideal(l, i.0);
                if h.is_unit() {
                    return Outcome::Skip("unit ideal".into());
                }
                match (poset_ideal_dual(l, i.0), dual_ideal(&h)) {
                    (Ok(a), Ok(b)) => {
                        outcome(a == b, || format!("{} ideal {:?}", describe(l), l.poset().labels_of(i.0)))
                    }
                    (a, b) => Outcome::Fail(format!("{} {a:?} {b:?}", describe(l))),
                }
            })
        })
        .collect()
}

/// Sampled ideal/coideal pairs of distributive lattices with at most
/// `max_irreducibles` join-irreducibles; half of them cover the lattice.
pub fn intersection_checks(config: &SuiteConfig, max_irreducibles: usize) -> Vec<Outcome> {
    let mut rng = sub_rng(config.seed, 2);
    let lattices = generate::distributive_lattices(max_irreducibles);
    let mut items = Vec::new();
    for (k, l) in lattices.iter().enumerate() {
        let all = l.poset().all();
        for s in 0..config.intersection_samples {
            let ideal = random_ideal(&mut rng, l);
            let mut coideal = l.poset().upset(rng.gen_range(0..=all)).0;
            if s % 2 == 0 {
                coideal = l.poset().upset(coideal | (all & !ideal)).0;
            }
            if coideal == 0 {
                coideal = all;
            }
            items.push((k, ideal, coideal));
        }
    }
    items
        .par_iter()
        .map(|&(k, ideal, coideal)| {
            let l = &lattices[k];
            match intersect_ideal_coideal(l, ideal, coideal, config.field) {
                Ok(r) => outcome(r.formula_matches() && r.regularity_in_range != Some(false), || {
                    format!(
                        "{} I {:?} J {:?}: formula {}, reg {} rank {}",
                        describe(l),
                        l.poset().labels_of(ideal),
                        l.poset().labels_of(coideal),
                        r.formula_matches(),
                        r.regularity,
                        r.rank
                    )
                }),
                Err(e) => Outcome::Fail(format!("{} {e}", describe(l))),
            }
        })
        .collect()
}

/// Grafts of random complexes on at most five vertices.
pub fn graft_checks(config: &SuiteConfig) -> Vec<Outcome> {
    let mut rng = sub_rng(config.seed, 3);
    let complexes: Vec<_> = (0..config.graft_samples).map(|_| generate::random_complex(&mut rng, 5)).collect();
    complexes
        .par_iter()
        .map(|c| match graft_report(c, config.field) {
            Ok(r) => outcome(r.cohen_macaulay && r.sigma_pure && r.sigma_facet_size, || {
                format!("graft of {:?}: CM {}, pure {}", c.to_file().facets, r.cohen_macaulay, r.sigma_pure)
            }),
            Err(e) => Outcome::Fail(format!("graft of {:?}: {e}", c.to_file().facets)),
        })
        .collect()
}

/// The exhaustive population plus the sampled larger semilattices.
pub fn population(config: &SuiteConfig) -> (Vec<MeetSemilattice>, usize) {
    let mut all = generate::meet_semilattices_up_to(config.max_elements);
    let exhaustive = all.len();
    let mut rng = sub_rng(config.seed, 0);
    let top = generate::MAX_ENUMERATED;
    for k in 0..config.larger_samples {
        let size = (config.max_elements + 1 + k % 2).min(top);
        all.push(generate::random_meet_semilattice(&mut rng, size));
    }
    (all, exhaustive)
}

pub fn summarize(kind: CheckKind, outcomes: impl IntoIterator<Item = Outcome>) -> CheckSummary {
    let mut summary = CheckSummary::new(kind);
    for o in outcomes {
        summary.record(o);
    }
    summary.finish()
}

pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let (lattices, exhaustive) = population(config);
    let per_lattice: Vec<Vec<(CheckKind, Outcome)>> = lattices.par_iter().map(|l| lattice_checks(l, config)).collect();
    let mut summaries: Vec<CheckSummary> = Vec::new();
    for kind in CheckKind::ALL {
        let outcomes: Vec<Outcome> = match kind {
            CheckKind::OneCogenerated => one_cogenerated_checks(config),
            CheckKind::PosetIdealDual => poset_ideal_dual_checks(4),
            CheckKind::IdealCoidealIntersection => intersection_checks(config, 4),
            CheckKind::Graft => graft_checks(config),
            CheckKind::NegativeControl if !config.negative_control => continue,
            _ => per_lattice.iter().flatten().filter(|(k, _)| *k == kind).map(|(_, o)| o.clone()).collect(),
        };
        summaries.push(summarize(kind, outcomes));
    }
    let passed = summaries.iter().all(|s| s.passed);
    SuiteReport {
        config: config.clone(),
        semilattices: exhaustive,
        sampled_semilattices: lattices.len() - exhaustive,
        checks: summaries,
        passed,
    }
}
