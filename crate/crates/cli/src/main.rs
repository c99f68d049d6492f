//! `cublink`: JSON front end for the link checks, metrics, tight spans and
//! simplices of groups.
//!
//! Exit codes: 0 on success or a passing verdict, 1 on a failing verdict, 2
//! on usage or input errors (with a JSON error object on stdout).

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cublink::complex::{order_complex, ComplexDoc, OrderedComplex};
use cublink::cube::{CubeComplex, CubeDoc};
use cublink::generators::{
    affine_a_patch, boolean_poset, column_complex, integer_line, noncrossing_partitions, partition_lattice,
    subspace_poset,
};
use cublink::groups::{check_conditions, local_development, s4_example, trivial_example, SimplexOfGroups, SimplexOfGroupsDoc};
use cublink::link::{check_garside, check_type_a, check_type_c, LinkError, Verdict, VertexMap};
use cublink::metric::{approx_distance, chamber_distance, MetricError, PLPoint, Point};
use cublink::poset::PosetDoc;
use cublink::rational::{fmt_rational, parse_rational, q, Q};
use cublink::selftest::{self, SelftestConfig};
use cublink::tightspan::{dress_dimension_test, tight_span, FiniteMetric};

#[derive(Parser, Debug)]
#[command(name = "cublink", version, about = "Local CUB checks with explicit witnesses")]
struct Cli {
    /// Output format; JSON is the only one.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CheckType {
    #[value(name = "A")]
    A,
    #[value(name = "C")]
    C,
    #[value(name = "garside")]
    Garside,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the link conditions of a complex, poset or cube complex.
    Check(CheckArgs),
    /// Emit a generated poset, complex or simplex of groups.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
    /// Distance between two points of an ordered complex.
    Dist(DistArgs),
    /// Tight span and combinatorial dimension of a finite metric.
    Tightspan(TightspanArgs),
    /// Check a simplex of groups and its local developments.
    Groupdev(GroupdevArgs),
    /// Run the oracle-equivalence suites.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long = "type", value_enum)]
    check_type: CheckType,
    /// Input file; stdin if omitted or `-`.
    input: Option<String>,
    /// Vertex map `{"x": "phi(x)", ...}` for the garside check.
    #[arg(long)]
    phi: Option<String>,
    /// Record that the complex is assumed simply connected (not verified).
    #[arg(long)]
    assume_simply_connected: bool,
}

#[derive(Args, Debug)]
struct DistArgs {
    input: Option<String>,
    /// A vertex label or a point `{"chain": [...], "coords": [...]}`.
    #[arg(long, allow_hyphen_values = true)]
    from: String,
    #[arg(long, allow_hyphen_values = true)]
    to: String,
    /// Mesh `1/m` of the boundary grid; without it the exact chamber
    /// distance is used when the points share a chamber.
    #[arg(long)]
    mesh: Option<String>,
}

#[derive(Args, Debug)]
struct TightspanArgs {
    input: Option<String>,
    /// Also run the Dress test for dimension at most `n`.
    #[arg(long)]
    dress: Option<usize>,
}

#[derive(Args, Debug)]
struct GroupdevArgs {
    input: Option<String>,
    /// Only this vertex; its local development is included in the output.
    #[arg(long)]
    vertex: Option<usize>,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    #[arg(long, default_value_t = SelftestConfig::default().seed)]
    seed: u64,
    #[arg(long, default_value_t = SelftestConfig::default().random_posets)]
    posets: usize,
    #[arg(long, default_value_t = SelftestConfig::default().random_cubes)]
    cubes: usize,
    #[arg(long, default_value_t = SelftestConfig::default().metrics)]
    metrics: usize,
}

#[derive(Subcommand, Debug)]
enum Generate {
    /// Subsets of {1..n}.
    Boolean {
        #[arg(long)]
        n: usize,
    },
    /// Noncrossing partitions of {1..n}.
    Noncrossing {
        #[arg(long)]
        n: usize,
    },
    /// Set partitions of {1..n}.
    Partitions {
        #[arg(long)]
        n: usize,
    },
    /// Subspaces of F_q^n.
    Subspaces {
        #[arg(long)]
        q: u8,
        #[arg(long)]
        n: usize,
    },
    /// Patch of the type A tiling of dimension n.
    AffineA {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        radius: usize,
    },
    /// Column complex with its shift.
    Column {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Subdivided segment [lo, hi] of the integer line.
    IntegerLine {
        #[arg(long, allow_negative_numbers = true)]
        lo: i64,
        #[arg(long, allow_negative_numbers = true)]
        hi: i64,
    },
    /// Simplex of groups over Sym(4) with stabilizer faces.
    S4,
    /// Simplex of trivial groups on n vertices.
    Trivial {
        #[arg(long)]
        n: usize,
    },
}

struct CliError {
    kind: &'static str,
    message: String,
    details: Option<Value>,
}

impl CliError {
    fn new(kind: &'static str, message: impl ToString) -> Self {
        CliError {
            kind,
            message: message.to_string(),
            details: None,
        }
    }

    fn to_json(&self) -> Value {
        let mut e = json!({"kind": self.kind, "message": self.message});
        if let Some(d) = &self.details {
            e["details"] = d.clone();
        }
        json!({ "error": e })
    }
}

impl From<LinkError> for CliError {
    fn from(e: LinkError) -> Self {
        let details = match &e {
            LinkError::GarsideCheckFailed(v) => serde_json::to_value(v).ok(),
            LinkError::PreconditionFailed(inner) => Some(json!(format!("{inner:?}"))),
            _ => None,
        };
        CliError {
            kind: "link",
            message: e.to_string(),
            details,
        }
    }
}

impl From<MetricError> for CliError {
    fn from(e: MetricError) -> Self {
        CliError::new("metric", e)
    }
}

type Outcome = Result<(Value, bool), CliError>;

fn read_input(path: Option<&str>) -> Result<String, CliError> {
    match path {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::new("io", format!("stdin: {e}")))?;
            Ok(s)
        }
        Some(p) => fs::read_to_string(p).map_err(|e| CliError::new("io", format!("{p}: {e}"))),
    }
}

fn read_json(path: Option<&str>) -> Result<Value, CliError> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::new("json", e))
}

fn parse_doc<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::new("json", e))
}

/// Accepts a complex, a poset (converted to its order complex) or a cube
/// complex (converted to its barycentric subdivision).
fn load_complex(v: Value) -> Result<OrderedComplex, CliError> {
    if v.get("maximal_simplices").is_some() {
        let doc: ComplexDoc = parse_doc(v)?;
        OrderedComplex::from_doc(&doc).map_err(|e| CliError::new("complex", e))
    } else if v.get("elements").is_some() {
        let doc: PosetDoc = parse_doc(v)?;
        let p = cublink::poset::Poset::from_doc(&doc).map_err(|e| CliError::new("poset", e))?;
        Ok(order_complex(&p))
    } else if v.get("cubes").is_some() {
        let doc: CubeDoc = parse_doc(v)?;
        let c = CubeComplex::from_doc(&doc).map_err(|e| CliError::new("cube", e))?;
        Ok(c.barycentric_subdivision())
    } else {
        Err(CliError::new(
            "json",
            "expected a complex (`maximal_simplices`), a poset (`elements`) or a cube complex (`cubes`)",
        ))
    }
}

fn verdict_outcome(v: Verdict, assume_simply_connected: bool) -> Outcome {
    let pass = v.pass;
    let mut out = serde_json::to_value(&v).expect("verdict serializes");
    if assume_simply_connected {
        out["simply_connected"] = json!("assumed");
    }
    Ok((out, pass))
}

fn run_check(a: CheckArgs) -> Outcome {
    let x = load_complex(read_json(a.input.as_deref())?)?;
    let v = match a.check_type {
        CheckType::A => check_type_a(&x)?,
        CheckType::C => check_type_c(&x)?,
        CheckType::Garside => {
            let path = a
                .phi
                .as_deref()
                .ok_or_else(|| CliError::new("usage", "--phi is required for --type garside"))?;
            let pairs: BTreeMap<String, String> = parse_doc(read_json(Some(path))?)?;
            let phi = VertexMap::from_labels(&x, &pairs)?;
            check_garside(&x, &phi)?
        }
    };
    verdict_outcome(v, a.assume_simply_connected)
}

fn parse_point(x: &OrderedComplex, s: &str) -> Result<Point, CliError> {
    let pl = if s.trim_start().starts_with('{') {
        serde_json::from_str::<PLPoint>(s).map_err(|e| CliError::new("json", e))?
    } else {
        PLPoint::vertex(s)
    };
    Ok(Point::from_pl(x, &pl)?)
}

fn run_dist(a: DistArgs) -> Outcome {
    let x = load_complex(read_json(a.input.as_deref())?)?;
    let p = parse_point(&x, &a.from)?;
    let r = parse_point(&x, &a.to)?;
    let mesh = a
        .mesh
        .as_deref()
        .map(|m| parse_rational(m).map_err(|e| CliError::new("usage", e)))
        .transpose()?;
    let (d, exact, mesh) = match mesh {
        Some(m) => (approx_distance(&x, &p, &r, &m)?, false, Some(m)),
        None => match chamber_distance(&x, &p, &r) {
            Ok(d) => (d, true, None),
            Err(MetricError::NoCommonChamber) => {
                let m: Q = q(1, 8);
                (approx_distance(&x, &p, &r, &m)?, false, Some(m))
            }
            Err(e) => return Err(e.into()),
        },
    };
    let mut out = json!({
        "from": a.from,
        "to": a.to,
        "distance": fmt_rational(&d),
        "exact": exact,
    });
    if let Some(m) = mesh {
        out["mesh"] = json!(fmt_rational(&m));
    }
    Ok((out, true))
}

fn run_tightspan(a: TightspanArgs) -> Outcome {
    let m: FiniteMetric = parse_doc(read_json(a.input.as_deref())?)?;
    m.validate().map_err(|e| CliError::new("metric", e))?;
    let t = tight_span(&m).map_err(|e| CliError::new("metric", e))?;
    let mut out = serde_json::to_value(&t).expect("tight span serializes");
    let mut pass = true;
    if let Some(n) = a.dress {
        let holds = dress_dimension_test(&m, n).map_err(|e| CliError::new("metric", e))?;
        out["dress"] = json!({"n": n, "holds": holds});
        pass = holds;
    }
    Ok((out, pass))
}

fn run_groupdev(a: GroupdevArgs) -> Outcome {
    let doc: SimplexOfGroupsDoc = parse_doc(read_json(a.input.as_deref())?)?;
    let s = SimplexOfGroups::from_doc(&doc).map_err(|e| CliError::new("groups", e))?;
    let report = check_conditions(&s);
    let vertices: Vec<usize> = match a.vertex {
        Some(i) if i >= s.n() => return Err(CliError::new("usage", format!("vertex {i} out of range"))),
        Some(i) => vec![i],
        None => (0..s.n()).collect(),
    };
    let mut pass = report.pass;
    let mut devs = Vec::new();
    for i in vertices {
        let l = local_development(&s, i).map_err(|e| CliError::new("groups", e))?;
        let v = check_type_a(&l)?;
        pass &= v.pass;
        let mut entry = json!({
            "vertex": i,
            "num_vertices": l.num_vertices(),
            "num_chambers": l.maximal_simplices().len(),
            "type_a": v,
        });
        if a.vertex.is_some() {
            entry["complex"] = serde_json::to_value(l.to_doc()).expect("complex serializes");
        }
        devs.push(entry);
    }
    Ok((json!({"conditions": report, "local_developments": devs}), pass))
}

fn run_generate(g: Generate) -> Outcome {
    let gen_err = |e: cublink::generators::GeneratorError| CliError::new("generate", e);
    let poset = |p: cublink::poset::Poset| serde_json::to_value(p.to_doc()).expect("poset serializes");
    let complex = |c: OrderedComplex| serde_json::to_value(c.to_doc()).expect("complex serializes");
    let v = match g {
        Generate::Boolean { n } => poset(boolean_poset(n).map_err(gen_err)?),
        Generate::Noncrossing { n } => poset(noncrossing_partitions(n).map_err(gen_err)?),
        Generate::Partitions { n } => poset(partition_lattice(n).map_err(gen_err)?),
        Generate::Subspaces { q, n } => poset(subspace_poset(q, n).map_err(gen_err)?),
        Generate::AffineA { n, radius } => complex(affine_a_patch(n, radius).map_err(gen_err)?),
        Generate::Column { n, depth } => complex(column_complex(n, depth).map_err(gen_err)?),
        Generate::IntegerLine { lo, hi } => {
            if lo >= hi {
                return Err(CliError::new("usage", "--lo must be less than --hi"));
            }
            complex(integer_line(lo, hi))
        }
        Generate::S4 => serde_json::to_value(s4_example().to_doc()).expect("groups serialize"),
        Generate::Trivial { n } => {
            if !(2..=cublink::groups::MAX_VERTICES).contains(&n) {
                return Err(CliError::new("usage", format!("n must be in 2..={}", cublink::groups::MAX_VERTICES)));
            }
            serde_json::to_value(trivial_example(n).to_doc()).expect("groups serialize")
        }
    };
    Ok((v, true))
}

fn run_selftest(a: SelftestArgs) -> Outcome {
    let cfg = SelftestConfig {
        seed: a.seed,
        random_posets: a.posets,
        random_cubes: a.cubes,
        metrics: a.metrics,
    };
    let r = selftest::run(&cfg);
    let pass = r.pass;
    Ok((serde_json::to_value(r).expect("report serializes"), pass))
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("CUBLINK_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::new("usage", format!("CUBLINK_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::new("usage", e))
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value serializes"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.render().to_string();
            emit(&CliError::new("usage", msg.trim_end()).to_json());
            return ExitCode::from(2);
        }
    };
    let Format::Json = cli.format;
    if let Err(e) = configure_threads() {
        emit(&e.to_json());
        return ExitCode::from(2);
    }
    let outcome = match cli.command {
        Command::Check(a) => run_check(a),
        Command::Generate { what } => run_generate(what),
        Command::Dist(a) => run_dist(a),
        Command::Tightspan(a) => run_tightspan(a),
        Command::Groupdev(a) => run_groupdev(a),
        Command::Selftest(a) => run_selftest(a),
    };
    match outcome {
        Ok((v, pass)) => {
            emit(&v);
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            emit(&e.to_json());
            ExitCode::from(2)
        }
    }
}
