use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use critgroup::chartables::{
    abelian_subgroup_fusion, build_abelian_table, builtin_table, critical_group,
    critical_group_order, repeated_value_subgroups, CharacterTable, RepVector,
};
use critgroup::linalg::{smith_normal_form, IntMatrix, JsonInt};
use critgroup::posets::{alpha_values, UDWord, WordPolynomial};
use critgroup::sandpile::{cayley_covering, graph_critical_group, spanning_tree_count, Digraph};
use critgroup::towers::{check_conjecture_56, ones_count, structure_bounds, tower_critical_group};
use critgroup::verify::{exit_code, run_suite};
use critgroup::{AbelianGroup, Error, Result};

#[derive(Parser)]
#[command(name = "critgroup", version, about = "Critical groups of graphs, representations and differential towers")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Smith normal form and cokernel of a matrix file.
    Snf { file: String },
    /// Critical group and spanning-tree count of a graph file.
    Graph {
        file: String,
        #[arg(long)]
        sink: Option<String>,
    },
    /// Critical group of a representation.
    Rep {
        #[command(flatten)]
        table: TableArg,
        #[command(flatten)]
        rep: RepArg,
    },
    /// Critical group of V(f)_n over Y^r.
    Tower {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "f")]
        word: Option<String>,
        /// Coefficients c_0,c_1,… of Σ c_i U^i D^i.
        #[arg(long)]
        f: Option<String>,
    },
    /// Covering of Cayley graphs of dual abelian groups.
    Cayley {
        /// Invariant factors of G, e.g. 6 or 2,6.
        #[arg(long)]
        group: String,
        /// Invariant factors of H.
        #[arg(long)]
        subgroup: String,
        /// Images of the generators of H in G, rows separated by ';'.
        #[arg(long)]
        images: String,
        #[command(flatten)]
        rep: RepArg,
    },
    /// Compare K(V(U^kD^k)_n) with the conjectured divisor list.
    Conjecture {
        #[arg(long, requires_all = ["n", "k"])]
        r: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// RMAX NMAX
        #[arg(long, num_args = 2, conflicts_with = "r")]
        grid: Option<Vec<usize>>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "published")]
        suite: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TableArg {
    /// Character table JSON file.
    #[arg(long)]
    table: Option<String>,
    /// S<n>, D<n>, Z<a>xZ<b>, …
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RepArg {
    /// Multiplicities in table order, e.g. 1,1,0,0,0.
    #[arg(long, allow_hyphen_values = true)]
    rep: Option<String>,
    /// Irreducible by name; repeatable.
    #[arg(long)]
    irrep: Vec<String>,
}

impl TableArg {
    fn load(&self) -> Result<CharacterTable> {
        match (&self.table, &self.builtin) {
            (Some(path), _) => CharacterTable::from_json(&std::fs::read_to_string(path)?),
            (_, Some(name)) => builtin_table(name),
            _ => Err(Error::Invalid("give --table or --builtin".into())),
        }
    }
}

impl RepArg {
    fn resolve(&self, t: &CharacterTable) -> Result<RepVector> {
        let v = match &self.rep {
            Some(s) => s.parse::<RepVector>()?,
            None => RepVector::from_names(t, &self.irrep.iter().map(String::as_str).collect::<Vec<_>>())?,
        };
        v.check_table(t)?;
        Ok(v)
    }
}

type Report = Vec<(&'static str, Value)>;

fn group_fields(g: &AbelianGroup) -> Value {
    json!({ "text": g.to_string(), "invariant_factors": g })
}

fn factors(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad factor {t:?}"))))
        .collect()
}

fn snf(file: &str) -> Result<(Report, i32)> {
    let m = IntMatrix::from_json(&std::fs::read_to_string(file)?)?;
    let d = smith_normal_form(&m);
    let mut sorted = d.diagonal.clone();
    sorted.sort();
    let diag: Vec<String> = sorted.iter().map(|x| x.to_string()).collect();
    Ok((
        vec![
            ("diagonal", json!(diag.join(" "))),
            ("cokernel", group_fields(&d.cokernel())),
        ],
        0,
    ))
}

fn graph(file: &str, sink: Option<&str>) -> Result<(Report, i32)> {
    let g = Digraph::from_json(&std::fs::read_to_string(file)?)?;
    let s = match sink {
        Some(name) => Some(g.vertex_index(name).ok_or_else(|| Error::Invalid(format!("no vertex {name:?}")))?),
        None => None,
    };
    let k = graph_critical_group(&g, s)?;
    let trees = spanning_tree_count(&g, s)?;
    if k.order() != Some(trees.clone()) {
        return Err(Error::Internal(format!("|{k}| ≠ {trees} spanning trees")));
    }
    Ok((vec![("group", group_fields(&k)), ("trees", json!(JsonInt(trees)))], 0))
}

fn rep(t: &CharacterTable, v: &RepVector) -> Result<(Report, i32)> {
    let k = critical_group(t, v)?;
    let order = critical_group_order(t, v)?;
    let subgroups: Vec<Value> = repeated_value_subgroups(t, v)?
        .into_iter()
        .map(|(d, m)| json!({ "modulus": JsonInt(d), "exponent": m }))
        .collect();
    Ok((
        vec![
            ("table", json!(t.name())),
            ("rep", json!(v.to_string())),
            ("group", group_fields(&k)),
            ("order_formula", json!(JsonInt(order))),
            ("subgroups", json!(subgroups)),
        ],
        0,
    ))
}

fn tower(r: usize, n: usize, word: Option<&str>, f: Option<&str>) -> Result<(Report, i32)> {
    let (poly, w) = match (word, f) {
        (Some(w), _) => {
            let w: UDWord = w.parse()?;
            (WordPolynomial::from_word(&w, r)?, Some(w))
        }
        (_, Some(c)) => (WordPolynomial::parse_coeffs(r, c)?, None),
        _ => return Err(Error::Invalid("give --word or --f".into())),
    };
    let k = tower_critical_group(&poly, n)?;
    let bounds = structure_bounds(&poly, n)?;
    let alpha: Vec<JsonInt> = alpha_values(&poly, n).into_iter().map(JsonInt).collect();
    let mut out = vec![
        ("f", json!(poly.to_string())),
        ("group", group_fields(&k)),
        ("alpha", json!(alpha)),
        ("structure", serde_json::to_value(&bounds)?),
    ];
    if let Some(w) = w {
        out.push(("ones", serde_json::to_value(ones_count(r, &w, n)?)?));
    }
    Ok((out, 0))
}

fn cayley(group: &str, subgroup: &str, images: &str, rep: &RepArg) -> Result<(Report, i32)> {
    let gf = factors(group)?;
    let hf = factors(subgroup)?;
    let imgs = images.split(';').map(factors).collect::<Result<Vec<_>>>()?;
    let g = build_abelian_table(&gf)?;
    let h = build_abelian_table(&hf)?;
    let fusion = abelian_subgroup_fusion(&g, &gf, &h, &hf, &imgs)?;
    let v = rep.resolve(&g)?;
    let (cov, map) = cayley_covering(&g, &h, &fusion, &v)?;
    let vertex_map: Vec<Value> = cov
        .vertex_map
        .iter()
        .enumerate()
        .map(|(i, &w)| json!([g.irreps()[i], h.irreps()[w]]))
        .collect();
    Ok((
        vec![
            ("source_graph", serde_json::from_str(&cov.source.to_json())?),
            ("target_graph", serde_json::from_str(&cov.target.to_json())?),
            ("vertex_map", json!(vertex_map)),
            ("covering_verified", json!(cov.verified)),
            ("source_group", group_fields(&map.source)),
            ("target_group", group_fields(&map.target)),
            ("induced_map", serde_json::from_str(&map.matrix.to_json())?),
            ("surjective", json!(map.surjective)),
        ],
        0,
    ))
}

fn conjecture(cells: Vec<(usize, usize, usize)>) -> Result<(Report, i32)> {
    let mut reports = Vec::new();
    let mut code = 0;
    for (r, n, k) in cells {
        let rep = check_conjecture_56(r, n, k)?;
        if r == 1 && !rep.matches {
            code = 1;
        }
        reports.push(serde_json::to_value(&rep)?);
    }
    Ok((vec![("reports", json!(reports))], code))
}

fn verify(suite: &str, seed: u64) -> Result<(Report, i32)> {
    let results = run_suite(suite, seed)?;
    let code = exit_code(&results);
    let passed = results.iter().filter(|r| r.passed()).count();
    Ok((
        vec![
            ("suite", json!(suite)),
            ("passed", json!(passed)),
            ("total", json!(results.len())),
            ("results", serde_json::to_value(&results)?),
        ],
        code,
    ))
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) if m.contains_key("text") => out.push_str(m["text"].as_str().unwrap_or_default()),
        Value::Object(m) => {
            for (k, x) in m {
                out.push_str(&format!("\n{pad}{k}: "));
                render_text(x, indent + 1, out);
            }
        }
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = xs.iter().map(scalar).collect();
            out.push_str(&parts.join(" "));
        }
        Value::Array(xs) => {
            for x in xs {
                out.push_str(&format!("\n{pad}- "));
                render_text(x, indent + 1, out);
            }
        }
        other => out.push_str(&scalar(other)),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn dispatch(cli: &Cli) -> Result<(Report, i32)> {
    match &cli.cmd {
        Cmd::Snf { file } => snf(file),
        Cmd::Graph { file, sink } => graph(file, sink.as_deref()),
        Cmd::Rep { table, rep: r } => {
            let t = table.load()?;
            let v = r.resolve(&t)?;
            rep(&t, &v)
        }
        Cmd::Tower { r, n, word, f } => tower(*r, *n, word.as_deref(), f.as_deref()),
        Cmd::Cayley { group, subgroup, images, rep } => cayley(group, subgroup, images, rep),
        Cmd::Conjecture { r, n, k, grid } => {
            let cells = match (r, n, k, grid) {
                (Some(r), Some(n), Some(k), _) => vec![(*r, *n, *k)],
                (_, _, _, Some(g)) => (1..=g[0])
                    .flat_map(|r| (1..=g[1]).flat_map(move |n| (1..=n).map(move |k| (r, n, k))))
                    .collect(),
                _ => return Err(Error::Invalid("give --r --n --k or --grid RMAX NMAX".into())),
            };
            conjecture(cells)
        }
        Cmd::Verify { suite } => verify(suite, cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((report, code)) => {
            let obj: serde_json::Map<String, Value> =
                report.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            let text = match cli.format {
                Format::Json => Value::Object(obj).to_string(),
                Format::Text => {
                    let mut s = String::new();
                    render_text(&Value::Object(obj), 0, &mut s);
                    s.trim_start().to_string()
                }
            };
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
