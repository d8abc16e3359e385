//! Command-line front end. [`run_subcommand`] parses arguments, runs one
//! command and returns the exit code with the rendered output, so the binary
//! and the tests share one code path.

pub mod json;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use polyk0::algebra::{group_completion, smith_normal_form, CommMonoid, DEFAULT_FINITE_CAP};
use polyk0::characters::{character, check_divisibility, Divisibility};
use polyk0::k0::{induced_k0_map, k0_stable, lambda_and_adams};
use polyk0::monoid_ring::{aug_ideal_power_quotient, CoefficientRing};
use polyk0::polymap::{extend_over_group_completion, DegreeBound};
use polyk0::simplicial::{
    apply_functor_levelwise, cech_nerve, derived_functor_homology, dk_gamma, dold_kan_roundtrip, euler_class,
    normalized_chains, top_normalized_degree, FunctorRef, FunctorRegistry,
};
use polyk0::suites::{SuiteConfig, SuiteRegistry, DEFAULT_SEED};
use polyk0::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable naming the directory that relative input paths fall
/// back to.
pub const FIXTURES_ENV: &str = "POLYK0_FIXTURES";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "polyk0", version, about = "Exact polynomial maps, K0 and Dold-Kan computations")]
pub struct Cli {
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Box side for degree verification.
    #[arg(long = "box", global = true, default_value_t = 6)]
    pub box_side: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Coefficient modulus; Z when absent.
    #[arg(long = "mod", global = true)]
    pub modulus: Option<u64>,
    /// Largest finite monoid accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_FINITE_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smith normal form of an integer matrix.
    Snf {
        #[arg(long)]
        matrix: String,
    },
    /// Group completion of a commutative monoid.
    GroupComplete {
        #[arg(long)]
        monoid: String,
    },
    /// The quotient R[M]/I^(n+1) of a monoid ring.
    MonoidQuotient {
        #[arg(long)]
        monoid: String,
        #[arg(long)]
        degree: usize,
    },
    /// Extends a polynomial map over the group completion of its domain.
    Extend {
        #[arg(long)]
        map: String,
        /// Degree bound, overriding the one stored with the map.
        #[arg(long)]
        degree: Option<i64>,
    },
    /// Certifies a degree bound or prints a witnessing difference.
    VerifyDegree {
        #[arg(long)]
        map: String,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
    },
    /// K0 of a category given by pi0 and cofiber relations.
    K0 {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        rels: Option<String>,
        /// A polynomial map on pi0 to induce on K0.
        #[arg(long)]
        induce: Option<String>,
        /// Target category of the induced map; defaults to the source.
        #[arg(long)]
        target: Option<String>,
    },
    /// Lambda or Adams operations on K0 = Z.
    Lambda {
        #[arg(long = "i")]
        i: usize,
        #[arg(long, allow_negative_numbers = true)]
        at: i64,
        #[arg(long)]
        adams: bool,
    },
    /// Gamma of a chain complex and its normalized chains.
    DoldKan {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        levels: Option<usize>,
    },
    /// Bar-construction nerve of a linear map, optionally under a functor.
    Cech {
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 3)]
        levels: usize,
        #[arg(long)]
        functor: Option<String>,
    },
    /// Homology of F applied to Gamma of a complex.
    Derive {
        #[arg(long)]
        functor: String,
        #[arg(long)]
        complex: String,
    },
    /// Character of a homogeneous functor, optionally divided against another.
    Char {
        #[arg(long)]
        functor: String,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        compare: Option<String>,
    },
    /// Runs named verification suites, all of them by default.
    VerifyAll {
        #[arg(long)]
        suite: Vec<String>,
    },
}

/// Settings shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub finite_cap: usize,
    pub box_side: usize,
    pub format: Format,
    pub seed: u64,
    pub modulus: Option<u64>,
}

impl Config {
    fn suite_config(&self) -> SuiteConfig {
        SuiteConfig { finite_cap: self.finite_cap, box_side: self.box_side, seed: self.seed }
    }

    fn ring(&self) -> Result<CoefficientRing> {
        match self.modulus {
            None => Ok(CoefficientRing::Integers),
            Some(m) => with_flag("mod", CoefficientRing::modulo(m)),
        }
    }

    /// The ring for simplicial commands, which need `Z` or a prime field.
    fn field_or_z(&self) -> Result<CoefficientRing> {
        match self.modulus {
            Some(m) if !polyk0::algebra::is_prime(m) => {
                Err(Error::Parse(format!("--mod: simplicial modules need Z or a prime field, got Z/{}", m)))
            }
            _ => self.ring(),
        }
    }
}

/// A command result rendered both ways.
struct Output {
    code: i32,
    json: Value,
    text: String,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { code: EXIT_OK, json, text }
    }
}

pub fn fixtures_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"))
}

/// Inline JSON, a path, or a path relative to the fixtures directory.
fn load(flag: &str, arg: &str) -> Result<Value> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        let direct = PathBuf::from(arg);
        let path = if direct.exists() { direct } else { fixtures_dir().join(arg) };
        std::fs::read_to_string(&path).map_err(|e| Error::Parse(format!("--{}: cannot read {}: {}", flag, arg, e)))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("--{}: {}", flag, e)))
}

fn with_flag<T>(flag: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse(m) if m.starts_with("--") => Error::Parse(m),
        Error::Parse(m) => Error::Parse(format!("--{}: {}", flag, m)),
        e if e.is_counterexample() => e,
        e => Error::Parse(format!("--{}: {}", flag, e)),
    })
}

fn ints(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn functor(flag: &str, spec: &str, modulus: Option<u64>) -> Result<FunctorRef> {
    // a bare twist takes its prime from --mod
    let spec = match (spec.trim(), modulus) {
        ("frobenius" | "twist", Some(p)) => format!("frobenius:{}", p),
        (s, _) => s.to_string(),
    };
    FunctorRegistry::default().parse(&spec).map_err(|e| Error::Parse(format!("--{}: {}", flag, e)))
}

fn snf(cfg: &Config, matrix: &str) -> Result<Output> {
    let m = with_flag("matrix", json::matrix_from_json(&load("matrix", matrix)?, None))?;
    let s = smith_normal_form(&m);
    let factors = s.invariant_factors();
    let j = json!({
        "invariant_factors": factors.iter().map(json::int_to_json).collect::<Vec<_>>(),
        "rank": s.rank(),
        "u": json::matrix_to_json(&s.u),
        "d": json::matrix_to_json(&s.d),
        "v": json::matrix_to_json(&s.v),
    });
    let _ = cfg;
    Ok(Output::ok(j, format!("invariant factors: [{}]\nrank: {}\n", ints(&factors), s.rank())))
}

fn group_complete(cfg: &Config, monoid: &str) -> Result<Output> {
    let m = with_flag("monoid", json::monoid_from_json(&load("monoid", monoid)?, cfg.finite_cap))?;
    let c = group_completion(&m);
    let elements = match &m {
        CommMonoid::Finite(_) => m.elements().expect("finite"),
        CommMonoid::Free { .. } => m.generators(),
    };
    let mut text = format!("completion: {}\n", c.group);
    let mut images = Vec::new();
    for e in &elements {
        let img = c.hom.apply(e)?;
        let _ = writeln!(text, "  {} -> ({})", e, ints(&img));
        images.push(json!({"element": json::element_to_json(e), "class": json::coords_to_json(&img)}));
    }
    Ok(Output::ok(json!({"group": json::group_to_json(&c.group), "classes": images}), text))
}

fn monoid_quotient(cfg: &Config, monoid: &str, degree: usize) -> Result<Output> {
    let m = with_flag("monoid", json::monoid_from_json(&load("monoid", monoid)?, cfg.finite_cap))?;
    let q = aug_ideal_power_quotient(&m, degree, cfg.ring()?)?;
    let table: Vec<Vec<Value>> =
        q.structure_constants().iter().map(|row| row.iter().map(|c| json::coords_to_json(c)).collect()).collect();
    let j = json!({
        "coefficients": q.coeffs().to_string(),
        "degree": degree,
        "basis": q.basis_labels(),
        "group": json::group_to_json(q.group()),
        "invariant_factors": q.group().torsion().iter().map(json::int_to_json).collect::<Vec<_>>(),
        "multiplication": table,
    });
    let mut text = format!("{}[M]/I^{}: {}\nbasis: {}\n", q.coeffs(), degree + 1, q.group(), q.basis_labels().join(", "));
    let _ = writeln!(text, "dimension: {}", q.dimension());
    Ok(Output::ok(j, text))
}

fn extend(cfg: &Config, map: &str, degree: Option<i64>) -> Result<Output> {
    let mut f = with_flag("map", json::map_from_json(&load("map", map)?, cfg.finite_cap))?;
    if let Some(d) = degree {
        let bound = with_flag("degree", DegreeBound::from_i64(d))?;
        f = polyk0::polymap::PolyMap::from_slices(f.domain().clone(), f.codomain().clone(), bound, f.slices().to_vec())?;
    }
    let f = f.certify()?;
    let ext = extend_over_group_completion(&f)?;
    let mut text = format!("extension to {} of degree {}\n", ext.completion.group, ext.map.degree());
    for (t, slice) in ext.map.slices().iter().enumerate() {
        for (j, c) in slice {
            let idx = j.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            if ext.map.slices().len() > 1 {
                let _ = writeln!(text, "  [{}] C(x; {}) : {}", t, idx, ints(c));
            } else {
                let _ = writeln!(text, "  C(x; {}) : {}", idx, ints(c));
            }
        }
    }
    Ok(Output::ok(json::map_to_json(&ext.map), text))
}

fn verify_degree(cfg: &Config, map: &str, degree: i64) -> Result<Output> {
    let f = with_flag("map", json::map_from_json(&load("map", map)?, cfg.finite_cap))?;
    let bound = with_flag("degree", DegreeBound::from_i64(degree))?;
    match f.verify_degree(bound, cfg.box_side) {
        Ok(c) => {
            let method = format!("{:?}", c.method);
            let j = json!({"bound": degree, "method": method, "checks": c.checks, "genuine": c.is_genuine()});
            let kind = if c.is_genuine() { "certified" } else { "passed box checks (not a proof)" };
            Ok(Output::ok(j, format!("degree <= {} {} by {} after {} checks\n", degree, kind, method, c.checks)))
        }
        Err(Error::DegreeCounterexample(w)) => Ok(Output {
            code: EXIT_COUNTEREXAMPLE,
            json: json!({
                "bound": degree,
                "counterexample": {"directions": w.directions, "at": w.at, "value": json::coords_to_json(&w.value)},
            }),
            text: format!("degree <= {} fails: {}\n", degree, w),
        }),
        Err(e) => Err(e),
    }
}

fn k0(cfg: &Config, spec: &str, rels: Option<&str>, induce: Option<&str>, target: Option<&str>) -> Result<Output> {
    let mut source = with_flag("spec", json::cat_spec_from_json(&load("spec", spec)?, cfg.finite_cap))?;
    if let Some(r) = rels {
        source.cofiber_rels.extend(with_flag("rels", json::rels_from_json(&load("rels", r)?))?);
        with_flag("rels", source.check())?;
    }
    let k = k0_stable(&source)?;
    let gens = match source.additive.pi0.elements() {
        Some(all) => all,
        None => source.additive.pi0.generators(),
    };
    let mut text = format!("K0: {}\n", k.group);
    let mut classes = Vec::new();
    for e in &gens {
        let c = k.class_of(e)?;
        let _ = writeln!(text, "  [{}] = ({})", e, ints(&c));
        classes.push(json!({"element": json::element_to_json(e), "class": json::coords_to_json(&c)}));
    }
    let mut j = json!({"group": json::group_to_json(&k.group), "classes": classes});
    if let Some(m) = induce {
        let f = with_flag("induce", json::map_from_json(&load("induce", m)?, cfg.finite_cap))?.certify()?;
        let target = match target {
            Some(t) => with_flag("target", json::cat_spec_from_json(&load("target", t)?, cfg.finite_cap))?,
            None => source.clone(),
        };
        let n = f.degree().as_i64().max(0) as usize;
        let induced = induced_k0_map(&f, n, &source, &target)?;
        let _ = writeln!(text, "induced map of degree {} on {}", induced.map.degree(), induced.source.group);
        for e in &gens {
            let _ = writeln!(text, "  F_*[{}] = ({})", e, ints(&induced.at_class(e)?));
        }
        j["induced"] = json::map_to_json(&induced.map);
    }
    Ok(Output::ok(j, text))
}

fn lambda(i: usize, at: i64, adams: bool) -> Result<Output> {
    if i == 0 {
        return Ok(Output::ok(json!({"i": 0, "at": at.to_string(), "value": "1"}), "1\n".into()));
    }
    let fam = lambda_and_adams(i)?;
    let f = if adams { &fam.adams[i] } else { &fam.lambdas[i] };
    let v = f.evaluate_int(&[at])?;
    let op = if adams { "adams" } else { "lambda" };
    Ok(Output::ok(json!({"operation": op, "i": i, "at": at.to_string(), "value": v.to_string()}), format!("{}\n", v)))
}

fn dold_kan(complex: &str, levels: Option<usize>) -> Result<Output> {
    let c = with_flag("complex", json::complex_from_json(&load("complex", complex)?))?;
    let levels = levels.unwrap_or(c.top() + 1);
    let gamma = dk_gamma(&c, levels)?;
    let n = normalized_chains(&gamma)?;
    let roundtrip = dold_kan_roundtrip(&c)?;
    let homology = c.homology()?;
    let j = json!({
        "gamma_ranks": gamma.ranks(),
        "normalized_ranks": n.complex.ranks(),
        "roundtrip": roundtrip.homology_matches,
        "homology": homology.iter().map(json::group_to_json).collect::<Vec<_>>(),
    });
    let mut text = format!("Gamma ranks: {:?}\nnormalized ranks: {:?}\n", gamma.ranks(), n.complex.ranks());
    let _ = writeln!(text, "N(Gamma(C)) ~ C: {}", if roundtrip.homology_matches { "yes" } else { "no" });
    for (k, h) in homology.iter().enumerate() {
        let _ = writeln!(text, "H_{} = {}", k, h);
    }
    Ok(Output { code: if roundtrip.homology_matches { EXIT_OK } else { EXIT_COUNTEREXAMPLE }, json: j, text })
}

fn cech(cfg: &Config, map: &str, levels: usize, functor_spec: Option<&str>) -> Result<Output> {
    let ring = cfg.field_or_z()?;
    let f = with_flag("map", json::matrix_from_json(&load("map", map)?, None))?;
    let x = cech_nerve(&f, ring, levels)?;
    let (y, label) = match functor_spec {
        Some(s) => {
            let func = functor("functor", s, cfg.modulus)?;
            (apply_functor_levelwise(func.as_ref(), &x)?, func.spec())
        }
        None => (x, "id".to_string()),
    };
    let n = normalized_chains(&y)?;
    let top = top_normalized_degree(&y)?;
    let euler = match top {
        Some(t) if t < y.top() => Some(euler_class(&y, t)?),
        None => Some(BigInt::from(0)),
        _ => None,
    };
    let j = json!({
        "functor": label,
        "ring": ring.to_string(),
        "ranks": y.ranks(),
        "normalized_ranks": n.complex.ranks(),
        "skeletal_degree": top,
        "euler_class": euler.as_ref().map(json::int_to_json),
    });
    let mut text = format!("{} of nerve over {}\nranks: {:?}\nnormalized ranks: {:?}\n", label, ring, y.ranks(), n.complex.ranks());
    match (top, &euler) {
        (Some(t), Some(e)) => {
            let _ = writeln!(text, "{}-skeletal, Euler class {}", t, e);
        }
        (None, _) => text.push_str("normalized chains vanish\n"),
        (Some(_), None) => text.push_str("truncation too small to certify skeletality\n"),
    }
    Ok(Output::ok(j, text))
}

fn derive(complex: &str, functor_spec: &str, modulus: Option<u64>) -> Result<Output> {
    let c = with_flag("complex", json::complex_from_json(&load("complex", complex)?))?;
    let f = functor("functor", functor_spec, modulus)?;
    let h = derived_functor_homology(f.as_ref(), &c)?;
    let mut text = String::new();
    for (k, g) in h.iter().enumerate() {
        let _ = writeln!(text, "L_{} {} = {}", k, f.spec(), g);
    }
    Ok(Output::ok(json!({"functor": f.spec(), "homology": h.iter().map(json::group_to_json).collect::<Vec<_>>()}), text))
}

fn char_cmd(cfg: &Config, functor_spec: &str, vars: usize, compare: Option<&str>) -> Result<Output> {
    let f = functor("functor", functor_spec, cfg.modulus)?;
    let p = f.degree();
    let a = with_flag("vars", character(f.as_ref(), vars, p))?;
    let mut j = json!({"functor": f.spec(), "character": json::symmetric_to_json(&a)});
    let mut text = format!("char {} = {}\n", f.spec(), a);
    let modulus = cfg.modulus.unwrap_or(p as u64);
    let Some(other) = compare else {
        let reduced = a.reduce_mod(&BigInt::from(modulus));
        let _ = writeln!(text, "mod {}: {}", modulus, reduced);
        j["reduced"] = json::symmetric_to_json(&reduced);
        return Ok(Output::ok(j, text));
    };
    let g = functor("compare", other, Some(cfg.modulus.unwrap_or(p as u64)))?;
    let b = character(g.as_ref(), vars, p)?;
    let _ = writeln!(text, "char {} = {}", g.spec(), b);
    j["compare"] = json::symmetric_to_json(&b);
    match check_divisibility(&a, &b, modulus)? {
        Divisibility::Quotient(q) => {
            let _ = writeln!(text, "quotient: {}", q);
            j["quotient"] = json::symmetric_to_json(&q);
            Ok(Output::ok(j, text))
        }
        Divisibility::Counterexample { partition, coefficient } => {
            let _ = writeln!(text, "not divisible by {}: m({}) has coefficient {}",
                modulus,
                partition.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                coefficient);
            j["counterexample"] = json!({"partition": partition, "coefficient": json::int_to_json(&coefficient)});
            Ok(Output { code: EXIT_COUNTEREXAMPLE, json: j, text })
        }
    }
}

fn verify_all(cfg: &Config, names: &[String]) -> Result<Output> {
    let registry = SuiteRegistry::default();
    let suites = if names.is_empty() {
        registry.ordered()
    } else {
        names.iter().map(|n| with_flag("suite", registry.get(n))).collect::<Result<Vec<_>>>()?
    };
    let sc = cfg.suite_config();
    let mut reports: Vec<_> = suites.par_iter().map(|s| s.run(&sc)).collect();
    reports.sort_by_key(|r| (r.criterion.unwrap_or(usize::MAX), r.name.clone()));
    let all_passed = reports.iter().all(|r| r.passed());
    let mut text = String::new();
    let mut items = Vec::new();
    for r in &reports {
        let _ = writeln!(text, "{}", r);
        for f in r.failures.iter().take(3) {
            let _ = writeln!(text, "    {}", f);
        }
        items.push(json!({
            "suite": r.name,
            "criterion": r.criterion,
            "passed": r.passed(),
            "checks": r.checks,
            "failures": r.failures,
            "summary": r.summary,
        }));
    }
    Ok(Output {
        code: if all_passed { EXIT_OK } else { EXIT_COUNTEREXAMPLE },
        json: json!({"passed": all_passed, "suites": items}),
        text,
    })
}

fn dispatch(cli: &Cli) -> Result<Output> {
    if cli.cap == 0 {
        return Err(Error::Parse("--cap: must be positive".into()));
    }
    if cli.box_side == 0 {
        return Err(Error::Parse("--box: must be positive".into()));
    }
    let cfg = Config { finite_cap: cli.cap, box_side: cli.box_side, format: cli.format, seed: cli.seed, modulus: cli.modulus };
    match &cli.command {
        Command::Snf { matrix } => snf(&cfg, matrix),
        Command::GroupComplete { monoid } => group_complete(&cfg, monoid),
        Command::MonoidQuotient { monoid, degree } => monoid_quotient(&cfg, monoid, *degree),
        Command::Extend { map, degree } => extend(&cfg, map, *degree),
        Command::VerifyDegree { map, degree } => verify_degree(&cfg, map, *degree),
        Command::K0 { spec, rels, induce, target } => k0(&cfg, spec, rels.as_deref(), induce.as_deref(), target.as_deref()),
        Command::Lambda { i, at, adams } => lambda(*i, *at, *adams),
        Command::DoldKan { complex, levels } => dold_kan(complex, *levels),
        Command::Cech { map, levels, functor } => cech(&cfg, map, *levels, functor.as_deref()),
        Command::Derive { functor, complex } => derive(complex, functor, cfg.modulus),
        Command::Char { functor, vars, compare } => char_cmd(&cfg, functor, *vars, compare.as_deref()),
        Command::VerifyAll { suite } => verify_all(&cfg, suite),
    }
}

/// Runs one command. `argv[0]` is the program name.
pub fn run_subcommand<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).expect("serializable")),
                Format::Table => out.text,
            };
            (out.code, body)
        }
        Err(e) if e.is_counterexample() => (EXIT_COUNTEREXAMPLE, format!("counterexample: {}\n", e)),
        Err(e) => (EXIT_USAGE, format!("error: {}\n", e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String) {
        run_subcommand(std::iter::once("polyk0").chain(args.iter().copied()))
    }

    #[test]
    fn lambda_at_minus_one() {
        assert_eq!(run(&["lambda", "--i", "2", "--at", "-1"]), (0, "1\n".to_string()));
        assert_eq!(run(&["lambda", "--i", "3", "--at", "-1"]).1, "-1\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, out) = run(&["lambda", "--i", "x", "--at", "1"]);
        assert_eq!(code, 2);
        assert!(out.contains("--i"));
        assert_eq!(run(&["nonsense"]).0, 2);
        let (code, out) = run(&["snf", "--matrix", "[[1, \"a\"]]"]);
        assert_eq!(code, 2);
        assert!(out.contains("--matrix"), "{}", out);
    }

    #[test]
    fn char_quotient() {
        let (code, out) = run(&["char", "--functor", "tensor:2", "--vars", "2", "--mod", "2", "--compare", "frobenius"]);
        assert_eq!(code, 0);
        assert!(out.contains("quotient: m(1,1)"), "{}", out);
    }

    #[test]
    fn inline_snf() {
        let (code, out) = run(&["snf", "--matrix", "[[2, 4], [6, 8]]"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("invariant factors: [2, 4]"), "{}", out);
    }
}
