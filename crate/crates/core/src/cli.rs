//! Command-line front end. All input and output is JSON.
//!
//! Exit codes: 0 on success, 1 when a checked property is violated, 2 on
//! usage or domain errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::census::{self, Check, Sampling};
use crate::error::{Error, Result};
use crate::family::{make_family, verify_family_critical, FamilyParams};
use crate::function::{
    graph_of_quadratic, is_separable_extension, oracle_is_w_separable, reduce_mod_constraint, separable_set_quadratic,
    table_from_poly, Decomposition, PartialExtension, PolyJson, PolynomialZq, TableJson,
};
use crate::graph::{VertexLabeling, WeightedGraph};
use crate::iso::switching_isomorphic;
use crate::json::{self, GraphJson};
use crate::quasigroup::{
    build_qfa, invert, is_quasigroup, is_separable_qg, is_w_separable_qg, retract, verify_correspondence,
    verify_retract_implication, QgDecomposition, QuasigroupJson,
};
use crate::separability::{
    is_critical, is_separable, is_separable_set, nonseparable_subgraph_count, nontrivial_separable_sets,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "switchsep", about = "Switching separability of Z_q-weighted graphs", disable_version_flag = true)]
struct Cli {
    /// Worker threads for census scans (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Largest number of classes or table entries scanned exhaustively
    #[arg(long, global = true, default_value_t = census::DEFAULT_BUDGET)]
    budget: u128,
    /// Seed for sampled runs
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the JSON result here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print the pinned census manifest and exit
    #[arg(long)]
    version: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Single-graph operations
    #[command(subcommand)]
    Graph(GraphCmd),
    /// The exceptional critical family
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Scans over all switching classes
    #[command(subcommand)]
    Census(CensusCmd),
    /// Partial functions given as polynomials with the hidden variable last
    #[command(subcommand, name = "fn")]
    Function(FnCmd),
    /// n-ary quasigroups
    #[command(subcommand)]
    Qg(QgCmd),
}

#[derive(Debug, Args)]
struct GraphIn {
    /// Graph JSON file
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Debug, Subcommand)]
enum GraphCmd {
    CheckAdditive(GraphIn),
    Switch {
        #[command(flatten)]
        input: GraphIn,
        /// Comma-separated vertex labels
        #[arg(long, value_delimiter = ',')]
        labels: Vec<u32>,
    },
    Isolate {
        #[command(flatten)]
        input: GraphIn,
        #[arg(long)]
        vertex: usize,
    },
    /// Graph separability, or separability of one vertex set with --set
    Separable {
        #[command(flatten)]
        input: GraphIn,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// All nontrivial separable sets containing vertex 0
    Sets(GraphIn),
    Critical(GraphIn),
    /// Switching isomorphism between two graphs
    Swiso {
        #[command(flatten)]
        input: GraphIn,
        #[arg(long)]
        other: PathBuf,
    },
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: u32,
    #[arg(long, default_value_t = 0)]
    gamma: u32,
}

#[derive(Debug, Subcommand)]
enum FamilyCmd {
    Gen(FamilyArgs),
    Verify(FamilyArgs),
}

#[derive(Debug, Subcommand)]
enum CensusCmd {
    Critical {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
    },
    Check {
        /// One of nss, c2rs, allsep, t2rs, czm
        #[arg(long)]
        name: String,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        /// Sample this many random classes instead of scanning all
        #[arg(long)]
        samples: Option<u64>,
    },
}

#[derive(Debug, Args)]
struct PolyIn {
    /// Polynomial JSON file over (x_1, ..., x_n, x_0)
    #[arg(long)]
    poly: PathBuf,
}

#[derive(Debug, Subcommand)]
enum FnCmd {
    /// Eliminate x_0 using the hyperplane constraint
    Reduce {
        #[command(flatten)]
        input: PolyIn,
        #[arg(long, default_value_t = 0)]
        a: u32,
    },
    /// Graph of a quadratic polynomial
    Graph(PolyIn),
    /// Search for a separating argument set
    Separable {
        #[command(flatten)]
        input: PolyIn,
        #[arg(long, default_value_t = 0)]
        a: u32,
        /// Decide through the graph of the polynomial, then confirm
        #[arg(long)]
        fast: bool,
    },
    /// Decompose along one argument set
    Oracle {
        #[command(flatten)]
        input: PolyIn,
        #[arg(long, default_value_t = 0)]
        a: u32,
        #[arg(long, value_delimiter = ',')]
        w: Vec<usize>,
    },
}

#[derive(Debug, Args)]
struct TableIn {
    /// Quasigroup JSON file
    #[arg(long)]
    table: PathBuf,
}

#[derive(Debug, Subcommand)]
enum QgCmd {
    /// Build the order-q^2 quasigroup of a function table or polynomial
    Build {
        #[arg(long = "fn")]
        function: PathBuf,
        #[arg(long, default_value_t = 0)]
        a: u32,
    },
    Check(TableIn),
    Retract {
        #[command(flatten)]
        input: TableIn,
        #[arg(long)]
        position: usize,
        #[arg(long)]
        element: u32,
    },
    Invert {
        #[command(flatten)]
        input: TableIn,
        #[arg(long)]
        position: usize,
    },
    Separable {
        #[command(flatten)]
        input: TableIn,
        #[arg(long, value_delimiter = ',')]
        w: Option<Vec<usize>>,
        /// Also admit |W| = n
        #[arg(long)]
        inclusive: bool,
    },
    /// Quasigroup versus function separability and the table identities
    VerifyProp5 {
        #[arg(long, default_value_t = 3)]
        q: u32,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// All retracts separable implies separable
    VerifyCor7 {
        #[arg(long, default_value_t = 3)]
        q: u32,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

struct Outcome {
    value: Value,
    ok: bool,
}

fn ok<T: Serialize>(v: T) -> Result<Outcome> {
    Ok(Outcome { value: serde_json::to_value(v).expect("serializable"), ok: true })
}

fn checked<T: Serialize>(v: T, passed: bool) -> Result<Outcome> {
    Ok(Outcome { value: serde_json::to_value(v).expect("serializable"), ok: passed })
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn load_graph(path: &PathBuf) -> Result<WeightedGraph> {
    json::parse::<GraphJson>(&read(path)?)?.to_graph()
}

fn load_poly(path: &PathBuf) -> Result<PolynomialZq> {
    json::parse::<PolyJson>(&read(path)?)?.to_poly()
}

fn labels_json(l: &VertexLabeling) -> Vec<u32> {
    l.labels().iter().map(|&x| x as u32).collect()
}

fn decomposition_json(d: Option<Decomposition>) -> Value {
    match d {
        None => json!({"separable": false}),
        Some(d) => json!({
            "separable": true,
            "W": d.w,
            "U": d.u,
            "f_W": d.f_w.to_json(),
            "f_U": d.f_u.to_json(),
        }),
    }
}

fn qg_decomposition_json(d: Option<QgDecomposition>) -> Value {
    match d {
        None => json!({"separable": false}),
        Some(d) => json!({
            "separable": true,
            "W": d.w,
            "inverted_at": d.inverted_at,
            "H": d.h.to_json(),
            "G": d.g.to_json(),
        }),
    }
}

/// The extension described by a polynomial over `(x_1, ..., x_n, x_0)`.
fn extension(p: &PolynomialZq, a: u32) -> Result<PartialExtension> {
    let tau = reduce_mod_constraint(p, a)?;
    Ok(PartialExtension::new(table_from_poly(&tau)?, a))
}

fn graph_cmd(cmd: GraphCmd) -> Result<Outcome> {
    match cmd {
        GraphCmd::CheckAdditive(i) => {
            let lab = load_graph(&i.graph)?.is_additive();
            ok(json!({"additive": lab.is_some(), "labels": lab.as_ref().map(labels_json)}))
        }
        GraphCmd::Switch { input, labels } => {
            let g = load_graph(&input.graph)?;
            ok(GraphJson::from(&g.switch(&VertexLabeling::new(g.q(), labels)?)?))
        }
        GraphCmd::Isolate { input, vertex } => {
            let (g, lab) = load_graph(&input.graph)?.isolate(vertex)?;
            ok(json!({"graph": GraphJson::from(&g), "labels": labels_json(&lab)}))
        }
        GraphCmd::Separable { input, set } => {
            let g = load_graph(&input.graph)?;
            let cert = match set {
                Some(s) => is_separable_set(&g, &s)?,
                None => is_separable(&g),
            };
            ok(match cert {
                Some(c) => json!({"separable": true, "certificate": c.to_json()}),
                None => json!({"separable": false}),
            })
        }
        GraphCmd::Sets(i) => {
            let sets: Vec<_> = nontrivial_separable_sets(&load_graph(&i.graph)?).iter().map(|c| c.to_json()).collect();
            ok(json!({"sets": sets}))
        }
        GraphCmd::Critical(i) => {
            let g = load_graph(&i.graph)?;
            ok(json!({"critical": is_critical(&g), "nonseparable_subgraphs": nonseparable_subgraph_count(&g)}))
        }
        GraphCmd::Swiso { input, other } => {
            let w = switching_isomorphic(&load_graph(&input.graph)?, &load_graph(&other)?)?;
            ok(match w {
                Some(w) => json!({"isomorphic": true, "permutation": w.permutation, "labels": labels_json(&w.labeling)}),
                None => json!({"isomorphic": false}),
            })
        }
    }
}

fn family_cmd(cmd: FamilyCmd) -> Result<Outcome> {
    match cmd {
        FamilyCmd::Gen(a) => ok(GraphJson::from(&make_family(FamilyParams::new(a.n, a.q, a.gamma)?)?)),
        FamilyCmd::Verify(a) => {
            let r = verify_family_critical(FamilyParams::new(a.n, a.q, a.gamma)?)?;
            let passed = r.passed();
            checked(r, passed)
        }
    }
}

fn census_cmd(cmd: CensusCmd, cli: &Cli) -> Result<Outcome> {
    match cmd {
        CensusCmd::Critical { q, n } => {
            let r = census::find_critical(q, n, cli.jobs, cli.budget)?;
            eprintln!("wall time: {:.3?}", r.wall_time);
            let passed = r.passed();
            checked(r, passed)
        }
        CensusCmd::Check { name, q, n, samples } => {
            let check = Check::parse(&name)?;
            let sampling = samples.map(|samples| Sampling { seed: cli.seed, samples });
            let r = census::run_check(check, q, n, sampling, cli.jobs, cli.budget)?;
            let passed = r.passed();
            checked(r, passed)
        }
    }
}

fn fn_cmd(cmd: FnCmd) -> Result<Outcome> {
    match cmd {
        FnCmd::Reduce { input, a } => ok(reduce_mod_constraint(&load_poly(&input.poly)?, a)?.to_json()),
        FnCmd::Graph(i) => ok(GraphJson::from(&graph_of_quadratic(&load_poly(&i.poly)?)?)),
        FnCmd::Separable { input, a, fast } => {
            let p = load_poly(&input.poly)?;
            let e = extension(&p, a)?;
            let d = if fast {
                match separable_set_quadratic(&p)? {
                    Some(w) => {
                        let d = oracle_is_w_separable(&e, &w)?;
                        if d.is_none() {
                            return Err(Error::Invalid(format!("graph set {w:?} failed functional confirmation")));
                        }
                        d
                    }
                    None => None,
                }
            } else {
                is_separable_extension(&e)?
            };
            ok(decomposition_json(d))
        }
        FnCmd::Oracle { input, a, w } => {
            let e = extension(&load_poly(&input.poly)?, a)?;
            ok(decomposition_json(oracle_is_w_separable(&e, &w)?))
        }
    }
}

fn qg_cmd(cmd: QgCmd, cli: &Cli) -> Result<Outcome> {
    let load = |p: &PathBuf| json::parse::<QuasigroupJson>(&read(p)?)?.to_table();
    match cmd {
        QgCmd::Build { function, a } => {
            let text = read(&function)?;
            let table = match json::parse::<TableJson>(&text) {
                Ok(t) => t.to_table()?,
                Err(_) => table_from_poly(&json::parse::<PolyJson>(&text)?.to_poly()?)?,
            };
            ok(build_qfa(&table, a)?.to_json())
        }
        QgCmd::Check(i) => {
            let latin = is_quasigroup(&load(&i.table)?);
            checked(json!({"quasigroup": latin}), latin)
        }
        QgCmd::Retract { input, position, element } => ok(retract(&load(&input.table)?, position, element)?.to_json()),
        QgCmd::Invert { input, position } => {
            let t = load(&input.table)?;
            if !is_quasigroup(&t) {
                return Err(Error::NotQuasigroup);
            }
            ok(invert(&t, position)?.to_json())
        }
        QgCmd::Separable { input, w, inclusive } => {
            let t = load(&input.table)?;
            if !is_quasigroup(&t) {
                return Err(Error::NotQuasigroup);
            }
            let d = match w {
                Some(w) => is_w_separable_qg(&t, &w, inclusive)?,
                None => is_separable_qg(&t, inclusive)?,
            };
            ok(qg_decomposition_json(d))
        }
        QgCmd::VerifyProp5 { q, n, count } => {
            let r = verify_correspondence(q, n, count, cli.seed)?;
            let passed = r.passed();
            checked(r, passed)
        }
        QgCmd::VerifyCor7 { q, n, count } => {
            let r = verify_retract_implication(q, n, count, cli.seed)?;
            let passed = r.passed();
            checked(r, passed)
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing JSON to
/// stdout or `--out`, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let command = cli.command.take();
    let result = match (cli.version, command) {
        (true, _) => ok(crate::manifest::manifest()),
        (false, None) => {
            eprintln!("error: a subcommand is required (try --help)");
            return EXIT_USAGE;
        }
        (false, Some(Command::Graph(c))) => graph_cmd(c),
        (false, Some(Command::Family(c))) => family_cmd(c),
        (false, Some(Command::Census(c))) => census_cmd(c, &cli),
        (false, Some(Command::Function(c))) => fn_cmd(c),
        (false, Some(Command::Qg(c))) => qg_cmd(c, &cli),
    };
    match result {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.value).expect("serializable") + "\n";
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return EXIT_USAGE;
                    }
                }
                None => print!("{text}"),
            }
            if outcome.ok {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
