//! Command-line front end. Every command returns its whole output as a
//! string, so runs with the same input and seed are byte-identical.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::duality::{
    bipartite_lattice, dual_ideal, graft_report, intersect_ideal_coideal, poset_ideal_complex_check, poset_ideal_dual,
    BipartiteGraph, ComplexFile, GraphFile, SimplicialComplex,
};
use crate::error::Error;
use crate::fixtures;
use crate::linalg::Field;
use crate::monomial::{lattice_ideal, linear_quotients_search, subfamily_ideal, MonomialIdeal, DEFAULT_SEARCH_BUDGET};
use crate::poset::{Poset, PosetFile, DEFAULT_IDEAL_LIMIT};
use crate::resolution::{
    betti_table, mapping_cone_resolution, meet_distributive_differential, taylor_complex, BettiTable, FreeComplex,
    DEFAULT_BASIS_CAP,
};
use crate::semilattice::MeetSemilattice;
use crate::suite::{run_suite, SuiteConfig};

#[derive(Debug, Parser)]
#[command(name = "meet-ideal", version, about = "Monomial ideals of finite meet-semilattices")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Coefficient field: `Q` or a prime.
    #[arg(long, global = true, default_value = "Q")]
    pub field: Field,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest mapping-cone basis to build.
    #[arg(long, global = true, default_value_t = DEFAULT_BASIS_CAP)]
    pub cap_basis: usize,
}

/// Lattice inputs are JSON files, or `fixture:NAME` for a bundled one.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a meet-semilattice.
    Check { file: PathBuf },
    /// Resolve `H_L` (or `H_I ∩ H_J` with --ideal/--coideal).
    Resolve {
        file: PathBuf,
        /// Use the closed form (meet-distributive input only).
        #[arg(long)]
        closed_form: bool,
        /// Reduce to a minimal resolution.
        #[arg(long)]
        minimize: bool,
        /// Check exactness; exits nonzero on failure.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        subfamily: Subfamily,
    },
    /// Betti table of `H_L` (or `H_I ∩ H_J`).
    Betti {
        file: PathBuf,
        #[command(flatten)]
        subfamily: Subfamily,
    },
    /// Alexander dual of `H_L`, `H_I` or `H_I ∩ H_J`, by formula and by covers.
    Dual {
        /// Lattice file (omit with --complex).
        file: Option<PathBuf>,
        /// Poset ideal `I`, given by comma-separated generators.
        #[arg(long, value_delimiter = ',')]
        poset_ideal: Option<Vec<String>>,
        /// Poset coideal `J`, given by comma-separated generators.
        #[arg(long, value_delimiter = ',')]
        coideal: Option<Vec<String>>,
        /// Dualize a simplicial complex file instead.
        #[arg(long)]
        complex: Option<PathBuf>,
    },
    /// Graft a simplicial complex and test its facet ideal.
    Graft { complex: PathBuf },
    /// Lattice of a bipartite graph, or the poset-ideal test of a complex.
    Bipartite {
        /// Graph file (omit with --complex).
        file: Option<PathBuf>,
        /// Complex on two vertex classes to test instead.
        #[arg(long)]
        complex: Option<PathBuf>,
        /// First vertex class of the complex (default: its first half).
        #[arg(long, value_delimiter = ',')]
        left: Option<Vec<String>>,
    },
    /// `H_I ∩ H_J` for a poset ideal and coideal of a distributive lattice.
    Intersect {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        ideal: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        coideal: Vec<String>,
    },
    /// `(u_q : r <= rank q <= s)`, reported without claims.
    RankRange { file: PathBuf, r: usize, s: usize },
    /// Property suite over all small meet-semilattices.
    Suite {
        #[arg(long, default_value_t = 8)]
        max_elements: usize,
        /// Skip the corrupted control claim.
        #[arg(long)]
        no_negative_control: bool,
        #[arg(long, default_value_t = 200)]
        graft_samples: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Subfamily {
    /// Poset ideal `I`, given by comma-separated generators.
    #[arg(long, value_delimiter = ',')]
    pub ideal: Option<Vec<String>>,
    /// Poset coideal `J`, given by comma-separated generators.
    #[arg(long, value_delimiter = ',')]
    pub coideal: Option<Vec<String>>,
}

/// Result of a command: its output and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, success: true }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: serde_json::Error },
    #[error("{0}")]
    Domain(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

fn read(path: &Path) -> Result<String, CliError> {
    let name = path.to_string_lossy();
    if let Some(fixture) = name.strip_prefix("fixture:") {
        return fixtures::json_by_name(fixture)
            .map(str::to_string)
            .ok_or_else(|| CliError::Usage(format!("no fixture named `{fixture}`")));
    }
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: name.into_owned(), source })
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|source| CliError::Parse { path: path.to_string_lossy().into_owned(), source })
}

pub fn load_lattice(path: &Path) -> Result<MeetSemilattice, CliError> {
    let file: PosetFile = parse(path)?;
    Ok(MeetSemilattice::new(Poset::from_file(&file)?)?)
}

pub fn load_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    let file: ComplexFile = parse(path)?;
    Ok(SimplicialComplex::from_file(&file)?)
}

pub fn load_graph(path: &Path) -> Result<BipartiteGraph, CliError> {
    let file: GraphFile = parse(path)?;
    Ok(BipartiteGraph::from_file(&file)?)
}

fn labels(lattice: &MeetSemilattice, set: u64) -> String {
    lattice.poset().labels_of(set).join(" ")
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    b.map(yes).unwrap_or("n/a")
}

/// `S(-d)^k` summands of each free module, by total degree.
fn shifts(complex: &FreeComplex) -> Vec<Vec<(usize, usize)>> {
    complex
        .modules()
        .iter()
        .map(|m| {
            let mut by_degree = std::collections::BTreeMap::new();
            for b in m {
                *by_degree.entry(b.multidegree.degree()).or_insert(0) += 1;
            }
            by_degree.into_iter().collect()
        })
        .collect()
}

fn render_shifts(complex: &FreeComplex) -> String {
    let mut out = String::new();
    for (i, module) in shifts(complex).iter().enumerate() {
        let parts: Vec<String> = module.iter().map(|(d, k)| format!("S(-{d})^{k}")).collect();
        let _ = writeln!(out, "F_{i}: {}", parts.join(" + "));
    }
    out
}

fn cmd_check(lattice: &MeetSemilattice, json: bool) -> Output {
    let c = lattice.classify();
    let order: Vec<&str> = lattice.order().iter().map(|&q| lattice.label(q)).collect();
    let irreducibles = lattice.irreducible_labels();
    if json {
        return Output::ok(pretty(&json!({
            "elements": lattice.len(),
            "irreducibles": irreducibles,
            "order": order,
            "classification": c,
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", lattice.len());
    let _ = writeln!(out, "join-irreducibles: {} ({})", irreducibles.len(), irreducibles.join(" "));
    let _ = writeln!(out, "total order: {}", order.join(" "));
    let _ = writeln!(out, "lattice: {}", yes(c.is_lattice));
    let _ = writeln!(out, "graded: {}", yes(c.is_graded));
    let _ = writeln!(out, "distributive: {}", opt(c.is_distributive));
    let _ = writeln!(out, "meet-distributive: {}", yes(c.is_meet_distributive));
    let _ = writeln!(out, "meet-irredundant: {}", yes(c.is_meet_irredundant));
    let _ = writeln!(out, "upper semimodular: {}", opt(c.is_upper_semimodular));
    let _ = writeln!(out, "lower semimodular: {}", opt(c.is_lower_semimodular));
    Output::ok(out)
}

fn element_set(lattice: &MeetSemilattice, names: &[String]) -> Result<u64, CliError> {
    Ok(lattice.poset().set_of(names)?)
}

/// The ideal selected by --ideal/--coideal: `H_I`, `H_J`, `H_I ∩ H_J`,
/// or `None` for `H_L` itself.
fn selected_ideal(lattice: &MeetSemilattice, sub: &Subfamily) -> Result<Option<MonomialIdeal>, CliError> {
    let poset = lattice.poset();
    let ideal = sub.ideal.as_ref().map(|i| Ok::<_, CliError>(poset.downset(element_set(lattice, i)?).0)).transpose()?;
    let coideal =
        sub.coideal.as_ref().map(|j| Ok::<_, CliError>(poset.upset(element_set(lattice, j)?).0)).transpose()?;
    Ok(match (ideal, coideal) {
        (None, None) => None,
        (Some(i), None) => Some(subfamily_ideal(lattice, i)),
        (None, Some(j)) => Some(subfamily_ideal(lattice, j)),
        (Some(i), Some(j)) => Some(subfamily_ideal(lattice, i).intersection(&subfamily_ideal(lattice, j))),
    })
}

fn cmd_resolve(
    lattice: &MeetSemilattice,
    global: &GlobalArgs,
    closed_form: bool,
    minimize: bool,
    verify: bool,
    sub: &Subfamily,
) -> Result<Output, CliError> {
    let field = global.field;
    let (ideal, mut complex, method) = match selected_ideal(lattice, sub)? {
        Some(ideal) => {
            if closed_form {
                return Err(CliError::Usage("--closed-form applies to H_L only".into()));
            }
            let gens = ideal.generators().to_vec();
            let taylor = taylor_complex(ideal.vars(), &gens)?;
            (ideal, taylor, "taylor")
        }
        None if closed_form => (lattice_ideal(lattice), meet_distributive_differential(lattice)?, "closed form"),
        None => (lattice_ideal(lattice), mapping_cone_resolution(lattice, global.cap_basis)?, "mapping cone"),
    };
    if minimize || method == "taylor" {
        complex = complex.minimize();
    }
    let verified = if verify { Some(complex.verify_resolution(&ideal, field)) } else { None };
    let minimal = complex.is_minimal();
    let betti = if minimal { BettiTable::from_minimal_complex(&complex, field)? } else { betti_table(&ideal, field)? };
    let success = verified.as_ref().is_none_or(|v| v.is_ok());
    if global.json {
        return Ok(Output {
            text: pretty(&json!({
                "field": field.to_string(),
                "method": method,
                "generators": ideal.render(),
                "resolution": complex.to_json(),
                "minimal": minimal,
                "verified": verified.as_ref().map(|v| v.as_ref().map(|_| "ok".to_string()).unwrap_or_else(|e| e.to_string())),
                "betti": betti.to_json(),
            })),
            success,
        });
    }
    let mut out = String::new();
    let _ = writeln!(out, "resolution: {method}");
    let _ = writeln!(out, "generators: {}", ideal.len());
    let _ = writeln!(out, "ranks: {}", complex.ranks().iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" "));
    out.push_str(&render_shifts(&complex));
    let _ = writeln!(out, "minimal: {}", yes(minimal));
    if let Some(v) = &verified {
        let _ = writeln!(
            out,
            "verify: {}",
            v.as_ref().map(|_| "ok".to_string()).unwrap_or_else(|e| format!("FAILED ({e})"))
        );
    }
    out.push_str(&betti.render());
    Ok(Output { text: out, success })
}

fn cmd_betti(lattice: &MeetSemilattice, global: &GlobalArgs, sub: &Subfamily) -> Result<Output, CliError> {
    let ideal = selected_ideal(lattice, sub)?.unwrap_or_else(|| lattice_ideal(lattice));
    let betti = betti_table(&ideal, global.field)?;
    let linear = ideal.common_degree().is_some_and(|d| betti.is_linear(d));
    if global.json {
        let mut v = betti.to_json();
        v["linear"] = json!(linear);
        return Ok(Output::ok(pretty(&v)));
    }
    let mut out = betti.render();
    let _ = writeln!(out, "regularity: {}", betti.regularity().map(|r| r.to_string()).unwrap_or("-".into()));
    let _ = writeln!(out, "linear: {}", yes(linear));
    Ok(Output::ok(out))
}

fn ideal_lines(ideal: &MonomialIdeal) -> String {
    ideal.render().join(" ")
}

fn cmd_dual(
    file: Option<&Path>,
    global: &GlobalArgs,
    poset_ideal: Option<&Vec<String>>,
    coideal: Option<&Vec<String>>,
    complex: Option<&Path>,
) -> Result<Output, CliError> {
    if let Some(path) = complex {
        let c = load_complex(path)?;
        let dual = c.alexander_dual();
        let twice = dual.alexander_dual() == c;
        if global.json {
            return Ok(Output {
                text: pretty(&json!({ "dual": dual.to_file(), "involution": twice })),
                success: twice,
            });
        }
        let text = format!("dual facets: {}\ninvolution: {}\n", render_facets(&dual), yes(twice));
        return Ok(Output { text, success: twice });
    }
    let path = file.ok_or_else(|| CliError::Usage("dual needs a lattice file or --complex".into()))?;
    let lattice = load_lattice(path)?;
    let poset = lattice.poset();
    let all = poset.all();
    let i = poset_ideal.map(|i| element_set(&lattice, i).map(|s| poset.downset(s).0)).transpose()?;
    let j = coideal.map(|j| element_set(&lattice, j).map(|s| poset.upset(s).0)).transpose()?;
    let (brute, formula) = match (i, j) {
        (i, None) => {
            let set = i.unwrap_or(all);
            let brute = dual_ideal(&subfamily_ideal(&lattice, set))?;
            let formula = match poset_ideal_dual(&lattice, set) {
                Ok(f) => Some(f),
                Err(Error::NotDistributive) if i.is_none() => None,
                Err(e) => return Err(e.into()),
            };
            (brute, formula)
        }
        (i, Some(j)) => {
            let r = intersect_ideal_coideal(&lattice, i.unwrap_or(all), j, global.field)?;
            (r.dual_brute_force, Some(r.dual_formula))
        }
    };
    let agree = formula.as_ref().map(|f| f.same_ideal(&brute));
    if global.json {
        return Ok(Output {
            text: pretty(&json!({
                "generators": brute.render(),
                "formula": formula.as_ref().map(|f| f.render()),
                "formula_matches": agree,
            })),
            success: agree != Some(false),
        });
    }
    let mut out = String::new();
    let _ = writeln!(out, "dual generators ({}): {}", brute.len(), ideal_lines(&brute));
    match agree {
        Some(a) => {
            let _ = writeln!(out, "formula==bruteforce: {}", yes(a));
        }
        None => {
            let _ = writeln!(out, "formula==bruteforce: n/a (not distributive)");
        }
    }
    Ok(Output { text: out, success: agree != Some(false) })
}

fn render_facets(complex: &SimplicialComplex) -> String {
    if complex.is_void() {
        return "none (void complex)".into();
    }
    let facets: Vec<String> =
        complex.facets().iter().map(|f| format!("{{{}}}", complex.labels_of(*f).join(","))).collect();
    facets.join(" ")
}

fn cmd_graft(path: &Path, global: &GlobalArgs) -> Result<Output, CliError> {
    let r = graft_report(&load_complex(path)?, global.field)?;
    let success = r.cohen_macaulay && r.sigma_pure;
    if global.json {
        return Ok(Output { text: pretty(&r.to_json()), success });
    }
    let mut out = String::new();
    let _ = writeln!(out, "field: {}", r.field);
    let _ = writeln!(out, "grafted facets: {}", render_facets(&r.grafted));
    let _ = writeln!(out, "facet ideal: {}", ideal_lines(&r.facet_ideal));
    let _ = writeln!(out, "cohen-macaulay: {}", yes(r.cohen_macaulay));
    let _ = writeln!(out, "dual complex pure: {}", yes(r.sigma_pure));
    Ok(Output { text: out, success })
}

fn cmd_bipartite(
    file: Option<&Path>,
    global: &GlobalArgs,
    complex: Option<&Path>,
    left: Option<&Vec<String>>,
) -> Result<Output, CliError> {
    if let Some(path) = complex {
        let c = load_complex(path)?;
        let left = left.cloned().unwrap_or_else(|| c.vertices()[..c.vertices().len() / 2].to_vec());
        let r = poset_ideal_complex_check(&c, &left, global.field, DEFAULT_IDEAL_LIMIT)?;
        let success = r.equivalent();
        if global.json {
            return Ok(Output { text: pretty(&r.to_json()), success });
        }
        let mut out = String::new();
        let _ = writeln!(out, "field: {}", r.field);
        let _ = writeln!(out, "(a) cohen-macaulay: {}", yes(r.cohen_macaulay));
        let _ = writeln!(out, "(b) pure: {}", yes(r.pure));
        let _ = writeln!(out, "(c) poset ideal: {}", r.poset_ideal.map(yes).unwrap_or("unknown (search cap)"));
        if let Some(w) = &r.witness {
            let _ = writeln!(out, "witness: {}", w.join(" "));
        }
        let _ = writeln!(out, "equivalent: {}", yes(success));
        return Ok(Output { text: out, success });
    }
    let path = file.ok_or_else(|| CliError::Usage("bipartite needs a graph file or --complex".into()))?;
    let graph = load_graph(path)?;
    let r = bipartite_lattice(&graph)?;
    let success = r.reproduces_edges && r.dual_matches;
    if global.json {
        return Ok(Output { text: pretty(&r.to_json(&graph)), success });
    }
    let mut out = String::new();
    let pairs: Vec<String> =
        r.matching.iter().enumerate().map(|(i, j)| format!("{}-{}", graph.left()[i], graph.right()[*j])).collect();
    let _ = writeln!(out, "matching: {}", pairs.join(" "));
    let relations: Vec<String> =
        r.poset.covers().iter().map(|(a, b)| format!("{}<{}", r.poset.label(*a), r.poset.label(*b))).collect();
    let _ =
        writeln!(out, "order: {}", if relations.is_empty() { "antichain".to_string() } else { relations.join(" ") });
    let _ = writeln!(out, "lattice elements: {}", r.lattice.len());
    let _ = writeln!(out, "edges reproduced: {}", yes(r.reproduces_edges));
    let _ = writeln!(out, "dual equals edge ideal: {}", yes(r.dual_matches));
    Ok(Output { text: out, success })
}

fn cmd_intersect(
    lattice: &MeetSemilattice,
    global: &GlobalArgs,
    ideal: &[String],
    coideal: &[String],
) -> Result<Output, CliError> {
    let i = lattice.poset().downset(element_set(lattice, ideal)?).0;
    let j = lattice.poset().upset(element_set(lattice, coideal)?).0;
    let r = intersect_ideal_coideal(lattice, i, j, global.field)?;
    let success = r.formula_matches() && r.regularity_in_range != Some(false);
    if global.json {
        return Ok(Output { text: pretty(&r.to_json()), success });
    }
    let mut out = String::new();
    let _ = writeln!(out, "generators ({}): {}", r.intersection.len(), ideal_lines(&r.intersection));
    let _ = writeln!(out, "equals H of the meet: {}", yes(r.equals_meet_ideal));
    let _ = writeln!(out, "dual: {}", ideal_lines(&r.dual_brute_force));
    let _ = writeln!(out, "formula==bruteforce: {}", yes(r.formula_matches()));
    out.push_str(&r.betti.render());
    let _ = writeln!(out, "regularity: {} (rank {})", r.regularity, r.rank);
    let _ = writeln!(out, "regularity within rank bounds: {}", opt(r.regularity_in_range));
    let _ = writeln!(out, "linear: {}", yes(r.linear));
    Ok(Output { text: out, success })
}

fn cmd_rank_range(lattice: &MeetSemilattice, global: &GlobalArgs, r: usize, s: usize) -> Result<Output, CliError> {
    let members: Vec<usize> = (0..lattice.len()).filter(|&q| (r..=s).contains(&lattice.rank(q))).collect();
    let set = members.iter().fold(0u64, |acc, q| acc | 1 << q);
    if set == 0 {
        return Err(CliError::Usage(format!("no elements with rank in {r}..={s}")));
    }
    let ideal = subfamily_ideal(lattice, set);
    let betti = betti_table(&ideal, global.field)?;
    let linear = ideal.common_degree().is_some_and(|d| betti.is_linear(d));
    let quotients = match linear_quotients_search(&ideal, 63, DEFAULT_SEARCH_BUDGET) {
        Ok(o) => Some(o.is_some()),
        Err(Error::Timeout(_)) => None,
        Err(e) => return Err(e.into()),
    };
    if global.json {
        let mut v = betti.to_json();
        v["elements"] = json!(lattice.poset().labels_of(set));
        v["linear"] = json!(linear);
        v["linear_quotients"] = json!(quotients);
        return Ok(Output::ok(pretty(&v)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", labels(lattice, set));
    out.push_str(&betti.render());
    let _ = writeln!(out, "linear: {}", yes(linear));
    let _ = writeln!(out, "linear quotients: {}", opt(quotients));
    Ok(Output::ok(out))
}

fn cmd_suite(
    global: &GlobalArgs,
    max_elements: usize,
    negative_control: bool,
    graft_samples: usize,
) -> Result<Output, CliError> {
    if max_elements == 0 || max_elements > 9 {
        return Err(CliError::Usage("--max-elements must be between 1 and 9".into()));
    }
    let config = SuiteConfig {
        max_elements,
        seed: global.seed,
        field: global.field,
        graft_samples,
        negative_control,
        ..SuiteConfig::default()
    };
    let report = run_suite(&config);
    let text =
        if global.json { pretty(&serde_json::to_value(&report).expect("serializable")) } else { report.render() };
    Ok(Output { text, success: report.passed })
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let g = &cli.global;
    if g.cap_basis == 0 {
        return Err(CliError::Usage("--cap-basis must be positive".into()));
    }
    match &cli.command {
        Command::Check { file } => Ok(cmd_check(&load_lattice(file)?, g.json)),
        Command::Resolve { file, closed_form, minimize, verify, subfamily } => {
            cmd_resolve(&load_lattice(file)?, g, *closed_form, *minimize, *verify, subfamily)
        }
        Command::Betti { file, subfamily } => cmd_betti(&load_lattice(file)?, g, subfamily),
        Command::Dual { file, poset_ideal, coideal, complex } => {
            cmd_dual(file.as_deref(), g, poset_ideal.as_ref(), coideal.as_ref(), complex.as_deref())
        }
        Command::Graft { complex } => cmd_graft(complex, g),
        Command::Bipartite { file, complex, left } => {
            cmd_bipartite(file.as_deref(), g, complex.as_deref(), left.as_ref())
        }
        Command::Intersect { file, ideal, coideal } => cmd_intersect(&load_lattice(file)?, g, ideal, coideal),
        Command::RankRange { file, r, s } => cmd_rank_range(&load_lattice(file)?, g, *r, *s),
        Command::Suite { max_elements, no_negative_control, graft_samples } => {
            cmd_suite(g, *max_elements, !no_negative_control, *graft_samples)
        }
    }
}

/// Parses `args`, runs the command, prints, and returns the exit code:
/// 0 on success, 1 when a check fails, 2 on bad input.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
