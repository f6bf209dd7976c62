//! Command-line driver. Exit codes: 0 success or pass, 1 property fails, 2 usage or input error.

mod expr;

pub use expr::{module_from_expr, resolve_group, ExprError};

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};

use crate::bounds::{self, Counting, MaximalSubgroup};
use crate::catalog::{self, CatalogError};
use crate::chartab::{dixon_schneider, CharacterTable};
use crate::ctformat::{emit_table, TableFile};
use crate::hypc::{self, indicator_symbol, Verdict};
use crate::modfp::{orbit_census_with_bound, CENSUS_BOUND};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "repcheck", version, about = "Character tables, indicator checks, orbit censuses and bounds for finite groups")]
struct Cli {
    /// key=value output for scripts.
    #[arg(long, global = true)]
    porcelain: bool,
    /// Seed for randomized algorithms.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the character table in .ctb format.
    Chartab { reference: String },
    /// Check that rows of equal degree and indicator are complex conjugates.
    Hypc { reference: String },
    /// Check that the real irreducible representations have distinct degrees.
    Corb { reference: String },
    /// Check that the complex irreducible degrees are distinct.
    Cdeg { reference: String },
    /// Orbit-length census of a module, e.g. `deleted(catalog:A8, 11)`.
    Orbits {
        module: String,
        #[arg(long, default_value_t = CENSUS_BOUND)]
        bound: u64,
    },
    /// Closed-form bounds.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Orbits on k-subsets with set-stabilizer data.
    Subsets {
        reference: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = bounds::SUBSET_BOUND)]
        bound: u64,
    },
    /// Self-associate partition of n with n mod 4 diagonal nodes.
    Partition {
        #[arg(long)]
        n: u64,
    },
    /// The group catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    List,
}

#[derive(Subcommand, Debug)]
enum BoundsCommand {
    /// Counting functions eq1, f, g, h.
    Fgh(FghArgs),
    /// floor(n (r - 1) / r).
    Fixdim {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// Lower bound for the number of regular orbits.
    Reglb {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        /// `count:r` pairs, comma separated.
        #[arg(long)]
        spectrum: String,
    },
    /// Dimension from which at least five regular orbits are guaranteed.
    Dthreshold {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        pcount: u64,
        #[arg(long)]
        r: u64,
    },
    /// Largest divisor a of the order with sigma(order) - 1 >= binomial(a, a/2).
    B {
        #[arg(long)]
        order: u64,
    },
    /// N_1 from maximal subgroup indices: a shipped group or explicit `index:min_index` pairs.
    N1 {
        #[arg(long, conflicts_with_all = ["order", "maxes"])]
        group: Option<String>,
        #[arg(long, requires = "maxes")]
        order: Option<u64>,
        #[arg(long)]
        maxes: Option<String>,
    },
    /// N(H) and W(H) from the subgroup lattice.
    Nhwh { reference: String },
    /// Whether target is a sum of distinct pool elements.
    Subsetsum {
        #[arg(long)]
        target: u64,
        #[arg(long, value_delimiter = ',')]
        pool: Vec<u64>,
    },
}

#[derive(Args, Debug)]
struct FghArgs {
    #[arg(long, value_parser = ["eq1", "f", "g", "h"])]
    kind: String,
    /// Prime p (eq1, f) or q (g, h).
    #[arg(long)]
    p: u64,
    /// Dimension n or m.
    #[arg(long)]
    n: u32,
    #[arg(long)]
    a: Option<u32>,
    /// |L|; defaults to 72 for g and 200 for h.
    #[arg(long)]
    l: Option<u64>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Hypc(#[from] hypc::HypcError),
    #[error(transparent)]
    Bound(#[from] bounds::BoundError),
    #[error(transparent)]
    Table(#[from] crate::chartab::ChartabError),
    #[error(transparent)]
    Module(#[from] crate::modfp::ModError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Key/value report, rendered aligned for people or as `key=value` lines.
struct Report {
    porcelain: bool,
    lines: Vec<(String, String)>,
}

impl Report {
    fn new(porcelain: bool) -> Self {
        Report { porcelain, lines: Vec::new() }
    }

    fn put(&mut self, key: &str, value: impl ToString) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    fn write(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let width = self.lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.lines {
            if self.porcelain {
                writeln!(out, "{k}={v}")?;
            } else {
                writeln!(out, "{k:<width$}  {v}")?;
            }
        }
        Ok(())
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn pass_fail(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// `catalog:NAME`, a `.ctb` table file, or a `.grp` group file.
fn resolve_table(r: &str, seed: u64) -> Result<CharacterTable, CliError> {
    if let Some(name) = r.strip_prefix("catalog:") {
        return Ok(catalog::table(name, seed)?);
    }
    if r.ends_with(".ctb") {
        return Ok(catalog::load_table_file(Path::new(r))?);
    }
    if r.ends_with(".grp") {
        let g = catalog::load_group_file(Path::new(r))?;
        let mut t = dixon_schneider(&g, seed)?;
        t.name = Path::new(r).file_stem().map_or_else(|| r.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok(t);
    }
    Err(CliError::Usage(format!("cannot resolve {r:?}: use catalog:NAME, a .ctb file, or a .grp file")))
}

fn verdict_report(rep: &mut Report, t: &CharacterTable, check: &str, v: &Verdict) {
    rep.put("group", &t.name);
    rep.put("order", t.group_order());
    rep.put("classes", t.num_classes());
    rep.put("check", check);
    rep.put("verdict", pass_fail(v.pass));
    for w in &v.witnesses {
        rep.put("witness", w);
    }
}

fn run_command(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut rep = Report::new(cli.porcelain);
    let seed = cli.seed;
    let code = match &cli.command {
        Command::Chartab { reference } => {
            let t = resolve_table(reference, seed)?;
            write!(out, "{}", emit_table(&TableFile::from_table(&t)))?;
            return Ok(EXIT_PASS);
        }
        Command::Hypc { reference } => {
            let t = resolve_table(reference, seed)?;
            let v = hypc::check_hypothesis_c(&t)?;
            verdict_report(&mut rep, &t, "hypothesis-c", &v);
            for e in &v.profile {
                let ind = e.indicator.map_or("?", indicator_symbol);
                rep.put("profile", format!("degree {} indicator {} count {}", e.degree, ind, e.count));
            }
            v.pass
        }
        Command::Corb { reference } => {
            let t = resolve_table(reference, seed)?;
            let p = hypc::real_degree_profile(&t)?;
            verdict_report(&mut rep, &t, "real-degrees-distinct", &p.verdict);
            rep.put("real-degrees", join(&p.degrees));
            p.verdict.pass
        }
        Command::Cdeg { reference } => {
            let t = resolve_table(reference, seed)?;
            let v = hypc::complex_degree_uniqueness(&t);
            verdict_report(&mut rep, &t, "complex-degrees-distinct", &v);
            v.pass
        }
        Command::Orbits { module, bound } => {
            let m = module_from_expr(module, seed)?;
            let c = orbit_census_with_bound(&m, *bound)?;
            rep.put("module", module);
            rep.put("field", m.p);
            rep.put("dimension", m.n);
            rep.put("group-order", c.group_order);
            for (len, count) in &c.histogram {
                rep.put("orbits", format!("length {len} count {count}"));
            }
            rep.put("orbit-count", c.orbit_count());
            rep.put("regular", c.regular_count);
            rep.put("half-regular", c.half_regular_count);
            true
        }
        Command::Bounds(b) => {
            run_bounds(b, &mut rep)?;
            true
        }
        Command::Subsets { reference, k, bound } => {
            let g = resolve_group(reference)?;
            let p = bounds::subset_orbit_profile(&g, *k, *bound, seed)?;
            rep.put("group-order", g.order_u64());
            rep.put("degree", g.degree());
            rep.put("k", k);
            for o in &p.orbits {
                let pts = o.representative.iter().map(|x| x + 1);
                rep.put("orbit", format!("size {} stabilizer {} abelianization {} representative {{{}}}", o.size, o.stabilizer_order, o.stabilizer_abelianization, join(pts).replace(' ', ",")));
            }
            rep.put("distinct-sizes", if p.distinct_sizes { "yes" } else { "no" });
            true
        }
        Command::Partition { n } => {
            let p = bounds::splitting_partition(*n)?;
            rep.put("n", n);
            rep.put("partition", join(&p.parts));
            rep.put("diagonal", p.diagonal);
            rep.put("self-associate", if p.self_associate { "yes" } else { "no" });
            rep.put("diagonal-congruent", if p.congruence_ok { "yes" } else { "no" });
            p.self_associate && p.congruence_ok
        }
        Command::Catalog(CatalogCommand::List) => {
            for e in catalog::list() {
                let expect = |x: Option<bool>| x.map_or("-", pass_fail);
                let line = format!(
                    "order {} table {} list {} hypc {} corb {}  {}",
                    e.order,
                    e.source_tag(),
                    if e.almost_simple_list { "yes" } else { "no" },
                    expect(e.expect_hypc),
                    expect(e.expect_corb),
                    e.description
                );
                rep.put(e.name, line);
            }
            true
        }
    };
    rep.write(out)?;
    Ok(if code { EXIT_PASS } else { EXIT_FAIL })
}

fn parse_pairs(s: &str, what: &str) -> Result<Vec<(u64, u64)>, CliError> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|pair| {
            let (a, b) = pair.split_once(':').ok_or_else(|| CliError::Usage(format!("{what}: expected a:b, found {pair:?}")))?;
            let num = |x: &str| x.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("{what}: bad number {x:?}")));
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

fn run_bounds(b: &BoundsCommand, rep: &mut Report) -> Result<(), CliError> {
    match b {
        BoundsCommand::Fgh(a) => {
            let kind = match a.kind.as_str() {
                "eq1" => Counting::Eq1 { p: a.p, n: a.n, a: a.a.ok_or_else(|| CliError::Usage("eq1 needs --a".into()))? },
                "f" => Counting::F { p: a.p, n: a.n },
                "g" => Counting::G { q: a.p, m: a.n, l: a.l.unwrap_or(bounds::L_ORDER_G) },
                _ => Counting::H { q: a.p, m: a.n, l: a.l.unwrap_or(bounds::L_ORDER_H) },
            };
            let v = bounds::counting_function(kind)?;
            rep.put("value", &v);
            rep.put("positive", if v > 0.into() { "yes" } else { "no" });
        }
        BoundsCommand::Fixdim { n, r } => rep.put("fixdim", bounds::fix_dim_upper(*n, *r)?),
        BoundsCommand::Reglb { order, p, n, spectrum } => {
            let spec = parse_pairs(spectrum, "--spectrum")?;
            let v = bounds::regular_orbit_lower_bound(*order, *p, *n, &spec)?;
            rep.put("bound", &v);
            rep.put("at-least-5", if v >= num_rational::BigRational::from_integer(5.into()) { "yes" } else { "no" });
        }
        BoundsCommand::Dthreshold { order, pcount, r } => rep.put("D", bounds::dimension_threshold(*order, *pcount, *r)?),
        BoundsCommand::B { order } => rep.put("b", bounds::b_of(*order)?),
        BoundsCommand::N1 { group, order, maxes } => {
            let (order, list) = match (group, order, maxes) {
                (Some(name), _, _) => {
                    let tables = catalog::maximal_indices()?;
                    let t = tables
                        .into_iter()
                        .find(|t| t.name == *name || catalog::lookup(name).is_ok_and(|e| e.name == t.name))
                        .ok_or_else(|| CliError::Usage(format!("no maximal subgroup data for {name:?}")))?;
                    (t.order, t.core_free())
                }
                (None, Some(order), Some(m)) => {
                    (*order, parse_pairs(m, "--maxes")?.into_iter().map(|(index, min_index)| MaximalSubgroup { index, min_index }).collect())
                }
                _ => return Err(CliError::Usage("give --group, or --order with --maxes".into())),
            };
            let n1 = bounds::n1_of(order, &list)?;
            rep.put("b", n1.b);
            rep.put("raw", join(&n1.raw));
            rep.put("refined", join(&n1.refined));
        }
        BoundsCommand::Nhwh { reference } => {
            let (n, w) = bounds::nh_wh(&resolve_group(reference)?)?;
            rep.put("N", join(&n));
            rep.put("W", join(&w));
        }
        BoundsCommand::Subsetsum { target, pool } => {
            let pool = pool.iter().copied().collect();
            rep.put("feasible", if bounds::distinct_sum_feasible(*target, &pool) { "yes" } else { "no" });
        }
    }
    Ok(())
}

/// Run with the given arguments (including the program name); returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if !e.use_stderr() {
                let _ = write!(out, "{text}");
                return EXIT_PASS;
            }
            let line = text.lines().next().unwrap_or("error: bad arguments");
            let _ = writeln!(err, "{line} (try --help)");
            return EXIT_USAGE;
        }
    };
    if let Some(j) = cli.jobs {
        // Fails only if a pool already exists, which keeps its size.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match run_command(&cli, out) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_PASS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
