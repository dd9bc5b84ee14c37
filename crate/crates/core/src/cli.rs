//! The `cellhecke` command line. [`run`] is the whole program minus process
//! setup, so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 a `verify` axiom failed, 2 usage or input error,
//! 3 size cap exceeded, 4 internal invariant violated.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cellcheck::{hecke_clifford_instance, hecke_instance, AxiomReport, FilteredAlgebraInstance, LabelOrder};
use crate::coeff::{AnyRing, Ring, RingDescriptor};
use crate::error::{Error, Result};
use crate::hecke::{classify, Elem, Hecke, SpechtQuotient};
use crate::heckeclifford::{
    count_super_simples, delta_is_whole_integrally, theta_generators, CliffordWord, HCElem, HeckeClifford, SuperSpecht, SuperTraceIdeal,
};
use crate::symgroup::{Composition, Perm, SymGroup};
use crate::with_ring;

pub const SCHEMA_VERSION: u32 = 1;
pub const HECKE_CAP: usize = 6;
pub const HC_CAP: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "cellhecke", version, about = "Exact computations in Hecke and Hecke-Clifford algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for the per-partition loops (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Lift the size caps (Hecke n ≤ 6, Hecke-Clifford n ≤ 4).
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algebra {
    Hecke,
    Hc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    Dominance,
    Total,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the standard basis (T_w, or c^P T_w).
    Basis {
        #[arg(long, value_enum, default_value_t = Algebra::Hecke)]
        algebra: Algebra,
        #[arg(long)]
        n: usize,
    },
    /// Multiply two words in the generators, e.g. `T1*c2*T[2,1,3]`.
    Product {
        #[arg(long, value_enum, default_value_t = Algebra::Hecke)]
        algebra: Algebra,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, default_value = "ZaQ", value_parser = RingDescriptor::parse)]
        ring: RingDescriptor,
    },
    /// Dimension and basis of the Specht quotient S_{λ;μ} (or S^c_{λ;μ}).
    Specht {
        #[arg(long, value_enum, default_value_t = Algebra::Hecke)]
        algebra: Algebra,
        #[arg(long, value_parser = Composition::parse)]
        lambda: Composition,
        #[arg(long, value_parser = Composition::parse)]
        mu: Composition,
        #[arg(long, default_value = "Qaq", value_parser = RingDescriptor::parse)]
        ring: RingDescriptor,
    },
    /// Gram matrix of S_λ on the standard tableaux, with its rank.
    Gram {
        #[arg(long, value_parser = Composition::parse)]
        lambda: Composition,
        #[arg(long, default_value = "Qaq", value_parser = RingDescriptor::parse)]
        ring: RingDescriptor,
    },
    /// Simple H_n-modules via Gram ranks. `--e` alone means `cyclo:e`.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: Option<u32>,
        #[arg(long, value_parser = RingDescriptor::parse)]
        ring: Option<RingDescriptor>,
    },
    /// Simple H^c_n-supermodules (up to parity change) via Θ_λ and Δ_λ.
    ClassifySuper {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "Qaq", value_parser = RingDescriptor::parse)]
        ring: RingDescriptor,
    },
    /// Trace-ideal data: J_λ against f_λ, or Θ_λ, Δ_λ, J^c_λ inside Γ_λ.
    Ideal {
        #[arg(long, value_enum, default_value_t = Algebra::Hecke)]
        algebra: Algebra,
        #[arg(long, value_parser = Composition::parse)]
        lambda: Composition,
        #[arg(long, default_value = "Qaq", value_parser = RingDescriptor::parse)]
        ring: RingDescriptor,
    },
    /// Check the ideal-filter, rigidity, Morita and standard-basis axioms.
    Verify {
        #[arg(long, value_enum, default_value_t = Algebra::Hecke)]
        algebra: Algebra,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "Qaq", value_parser = RingDescriptor::parse)]
        ring: RingDescriptor,
        #[arg(long, value_enum, default_value_t = Order::Dominance)]
        order: Order,
    },
}

/// What a subcommand produced.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, failed: false }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidRing(_) | Error::InvalidInput(_) | Error::NonField(_) => 2,
        Error::SizeLimit(_) => 3,
        Error::Invariant(_) => 4,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the result to `out`, diagnostics to `err`. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return 4;
        }
    };
    let format = cli.format;
    match pool.install(|| dispatch(&cli)) {
        Ok(o) => {
            let _ = match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("json")),
                Format::Text => write!(out, "{}", o.text),
            };
            i32::from(o.failed)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn cap(n: usize, algebra: Algebra, force: bool) -> Result<()> {
    let limit = match algebra {
        Algebra::Hecke => HECKE_CAP,
        Algebra::Hc => HC_CAP,
    };
    if n > limit && !force {
        let name = if algebra == Algebra::Hecke { "Hecke" } else { "Hecke-Clifford" };
        return Err(Error::SizeLimit(format!("n = {n} exceeds the {name} cap of {limit}; pass --force to override")));
    }
    Ok(())
}

fn build(ring: &RingDescriptor) -> Result<AnyRing> {
    ring.build()
}

fn header(command: &str, ring: Option<&RingDescriptor>) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    if let Some(r) = ring {
        m.insert("ring".into(), json!(r.to_string()));
    }
    m
}

fn with(mut m: serde_json::Map<String, Value>, rest: Value) -> Value {
    if let Value::Object(r) = rest {
        m.extend(r);
    }
    Value::Object(m)
}

fn same_size(lambda: &Composition, mu: &Composition) -> Result<()> {
    if lambda.size() != mu.size() {
        return Err(Error::InvalidInput(format!("{lambda} and {mu} have different sizes")));
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let force = cli.force;
    match &cli.command {
        Command::Basis { algebra, n } => {
            cap(*n, *algebra, force)?;
            basis(*algebra, *n)
        }
        Command::Product { algebra, n, left, right, ring } => {
            cap(*n, *algebra, force)?;
            let r = build(ring)?;
            let body = with_ring!(&r, r => product(r.clone(), *algebra, *n, left, right))?;
            Ok(Output { json: with(header("product", Some(ring)), body.json), ..body })
        }
        Command::Specht { algebra, lambda, mu, ring } => {
            same_size(lambda, mu)?;
            cap(lambda.size(), *algebra, force)?;
            let r = build(ring)?;
            let body = with_ring!(&r, r => specht(r.clone(), *algebra, lambda, mu))?;
            Ok(Output { json: with(header("specht", Some(ring)), body.json), ..body })
        }
        Command::Gram { lambda, ring } => {
            cap(lambda.size(), Algebra::Hecke, force)?;
            let r = build(ring)?;
            let body = with_ring!(&r, r => gram(r, lambda))?;
            Ok(Output { json: with(header("gram", Some(ring)), body.json), ..body })
        }
        Command::Classify { n, e, ring } => {
            cap(*n, Algebra::Hecke, force)?;
            let ring = match (e, ring) {
                (Some(e), None) => RingDescriptor::Cyclotomic { e: *e, a: "1".into() },
                (Some(e), Some(r @ RingDescriptor::Cyclotomic { e: re, .. })) if re == e => r.clone(),
                (Some(_), Some(r)) => return Err(Error::InvalidInput(format!("--e needs a cyclotomic ring with the same e, got {r}"))),
                (None, Some(r)) => r.clone(),
                (None, None) => RingDescriptor::FractionField,
            };
            let r = build(&ring)?;
            let c = with_ring!(&r, r => classify::count_simples(r, *n))?;
            let mut text = format!("n = {}, e = {}: {} simple modules\n", n, show_char(c.e), c.count);
            for row in &c.table {
                text += &format!(
                    "  {:<14} gram rank {:>3} / {:<3} {}\n",
                    row.lambda.to_string(),
                    row.gram_rank,
                    row.specht_dim,
                    if row.e_restricted { "restricted" } else { "" }
                );
            }
            let body = json!({"n": c.n, "e": c.e, "count": c.count, "table": c.table});
            Ok(Output::ok(with(header("classify", Some(&ring)), body), text))
        }
        Command::ClassifySuper { n, ring } => {
            cap(*n, Algebra::Hc, force)?;
            let r = build(ring)?;
            let c = with_ring!(&r, r => count_super_simples(r, *n))?;
            let mut text = format!(
                "n = {}, e = {}, e2 = {}, 2a = 0: {}: {} simple supermodules (predicted {})\n",
                n,
                show_char(c.e),
                show_char(c.e2),
                c.two_a_zero,
                c.count,
                c.predicted
            );
            for row in &c.table {
                text += &format!(
                    "  {:<14} {:<6} predicted {:<5} nonzero {}\n",
                    row.lambda.to_string(),
                    if row.strict { "strict" } else { "" },
                    row.e_restricted,
                    row.simple_nonzero
                );
            }
            let body = serde_json::to_value(&c).map_err(|e| Error::Invariant(e.to_string()))?;
            Ok(Output::ok(with(header("classify-super", Some(ring)), body), text))
        }
        Command::Ideal { algebra, lambda, ring } => {
            if !lambda.is_partition() {
                return Err(Error::InvalidInput(format!("{lambda} is not a partition")));
            }
            cap(lambda.size(), *algebra, force)?;
            let body = match algebra {
                Algebra::Hecke => hecke_ideal(lambda)?,
                Algebra::Hc => {
                    let r = build(ring)?;
                    with_ring!(&r, r => super_ideal(r.clone(), lambda))?
                }
            };
            let ring = (*algebra == Algebra::Hc).then_some(ring);
            Ok(Output { json: with(header("ideal", ring), body.json), ..body })
        }
        Command::Verify { algebra, n, ring, order } => {
            cap(*n, *algebra, force)?;
            let r = build(ring)?;
            let order = match order {
                Order::Dominance => LabelOrder::Dominance,
                Order::Total => LabelOrder::Total,
            };
            let body = with_ring!(&r, r => verify(r.clone(), *algebra, *n, order))?;
            Ok(Output { json: with(header("verify", Some(ring)), body.json), ..body })
        }
    }
}

fn show_char(e: Option<u32>) -> String {
    e.map_or("∞".into(), |e| e.to_string())
}

fn basis(algebra: Algebra, n: usize) -> Result<Output> {
    let g = SymGroup::get(n);
    let perms = g.perms();
    let masks: Vec<u32> = match algebra {
        Algebra::Hecke => vec![0],
        Algebra::Hc => (0..1u32 << n).collect(),
    };
    let mut terms = Vec::new();
    let mut text = String::new();
    for &mask in &masks {
        let word = CliffordWord::from_mask(n, mask);
        for w in perms {
            let label = if word.is_empty() { format!("T{w}") } else { format!("{word} T{w}") };
            text += &label;
            text.push('\n');
            terms.push(match algebra {
                Algebra::Hecke => json!({"perm": w.one_line(), "length": w.length()}),
                Algebra::Hc => json!({"clifford": word.indices(), "perm": w.one_line(), "length": w.length()}),
            });
        }
    }
    let name = if algebra == Algebra::Hecke { "hecke" } else { "hc" };
    let body = json!({"algebra": name, "n": n, "dim": terms.len(), "basis": terms});
    Ok(Output::ok(with(header("basis", None), body), text))
}

/// One factor of a product word.
enum Factor {
    One,
    T(usize),
    Perm(Perm),
    C(usize),
    M(Composition),
}

fn parse_word(s: &str, n: usize, clifford: bool) -> Result<Vec<Factor>> {
    let bad = |f: &str| Error::InvalidInput(format!("cannot read factor {f:?}; use 1, T<i>, T[w], c<i> or m(λ)"));
    let index = |f: &str, digits: &str| -> Result<usize> {
        let i: usize = digits.parse().map_err(|_| bad(f))?;
        Ok(i)
    };
    s.split('*')
        .map(str::trim)
        .map(|f| {
            if f == "1" {
                Ok(Factor::One)
            } else if let Some(rest) = f.strip_prefix("T[") {
                let line = Composition::parse(&format!("[{rest}"))?;
                let p = Perm::from_one_line(line.parts())?;
                if p.n() != n {
                    return Err(Error::InvalidInput(format!("{f} is not in S_{n}")));
                }
                Ok(Factor::Perm(p))
            } else if let Some(d) = f.strip_prefix('T') {
                let i = index(f, d)?;
                if i == 0 || i >= n {
                    return Err(Error::InvalidInput(format!("T{i} needs 1 ≤ i < {n}")));
                }
                Ok(Factor::T(i))
            } else if let Some(d) = f.strip_prefix('c') {
                let i = index(f, d)?;
                if !clifford {
                    return Err(Error::InvalidInput("c<i> needs --algebra hc".into()));
                }
                if i == 0 || i > n {
                    return Err(Error::InvalidInput(format!("c{i} needs 1 ≤ i ≤ {n}")));
                }
                Ok(Factor::C(i))
            } else if let Some(l) = f.strip_prefix('m') {
                let lambda = Composition::parse(l)?;
                if lambda.size() != n {
                    return Err(Error::InvalidInput(format!("{lambda} is not a composition of {n}")));
                }
                Ok(Factor::M(lambda))
            } else {
                Err(bad(f))
            }
        })
        .collect()
}

/// Reads a word in `1`, `T<i>`, `T[w]`, `m(λ)` joined by `*`.
pub fn hecke_word<R: Ring>(h: &Hecke<R>, s: &str) -> Result<Elem<R>> {
    let mut acc = h.one();
    for f in parse_word(s, h.n(), false)? {
        let x = match f {
            Factor::One => h.one(),
            Factor::T(i) => h.t_gen(i),
            Factor::Perm(p) => h.t(&p)?,
            Factor::M(l) => h.m(&l)?,
            Factor::C(_) => unreachable!(),
        };
        acc = h.mul(&acc, &x)?;
    }
    Ok(acc)
}

/// As [`hecke_word`], also allowing `c<i>`.
pub fn hc_word<R: Ring>(hc: &HeckeClifford<R>, s: &str) -> Result<HCElem<R>> {
    let mut acc = hc.one();
    for f in parse_word(s, hc.n(), true)? {
        let x = match f {
            Factor::One => hc.one(),
            Factor::T(i) => hc.t_gen(i),
            Factor::Perm(p) => hc.t(&p)?,
            Factor::M(l) => hc.m(&l)?,
            Factor::C(i) => hc.c(i),
        };
        acc = hc.mul(&acc, &x)?;
    }
    Ok(acc)
}

fn product<R: Ring>(ring: R, algebra: Algebra, n: usize, left: &str, right: &str) -> Result<Output> {
    let (json, text, len) = match algebra {
        Algebra::Hecke => {
            let h = Hecke::new(ring, n);
            let x = h.mul(&hecke_word(&h, left)?, &hecke_word(&h, right)?)?;
            (h.to_json(&x), h.render(&x), x.len())
        }
        Algebra::Hc => {
            let hc = HeckeClifford::new(ring, n);
            let x = hc.mul(&hc_word(&hc, left)?, &hc_word(&hc, right)?)?;
            (hc.to_json(&x), hc.render(&x), x.len())
        }
    };
    let body = json!({"n": n, "left": left, "right": right, "terms": len, "product": json});
    Ok(Output::ok(body, text + "\n"))
}

fn specht<F: Ring>(ring: F, algebra: Algebra, lambda: &Composition, mu: &Composition) -> Result<Output> {
    let (dim, basis): (usize, Vec<String>) = match algebra {
        Algebra::Hecke => {
            let s = SpechtQuotient::new(ring, lambda, mu)?;
            (s.dim(), s.free_tableaux().into_iter().map(|i| s.basis().tableau(i).to_string()).collect())
        }
        Algebra::Hc => {
            let s = SuperSpecht::new(ring, lambda, mu)?;
            (s.dim(), s.free_tableaux().into_iter().map(|i| s.basis().tableau(i).to_string()).collect())
        }
    };
    let mut text = format!("dim = {dim}\n");
    for t in &basis {
        text += &format!("  {t}\n");
    }
    let body = json!({"lambda": lambda, "mu": mu, "dim": dim, "basis": basis});
    Ok(Output::ok(body, text))
}

fn gram<F: Ring>(ring: &F, lambda: &Composition) -> Result<Output> {
    let g = classify::gram_matrix(ring, lambda)?;
    let rank = crate::linalg::rank(ring, &g);
    let mut text = format!("rank = {rank} of {}\n", g.len());
    for row in &g {
        let cells: Vec<String> = row.iter().map(|c| ring.render(c)).collect();
        text += &format!("  [{}]\n", cells.join(", "));
    }
    let matrix: Vec<Vec<Value>> = g.iter().map(|row| row.iter().map(|c| ring.to_json(c)).collect()).collect();
    let body = json!({"lambda": lambda, "size": g.len(), "rank": rank, "matrix": matrix});
    Ok(Output::ok(body, text))
}

fn hecke_ideal(lambda: &Composition) -> Result<Output> {
    let t = classify::trace_ideal(lambda)?;
    let gens: Vec<String> = t.generators.iter().map(|g| g.to_string()).collect();
    let text = format!(
        "J_{lambda} over Z[q,q^-1]\n  f = {}\n  generators: {}\n  divisible by f: {}\n  f^r certified: {}\n",
        t.f,
        gens.join(", "),
        t.divisible_by_f(),
        t.contains_f_power()
    );
    let body = json!({
        "algebra": "hecke",
        "lambda": lambda,
        "f": t.f.to_string(),
        "generators": gens,
        "witness": t.witness,
        "witness_value": t.witness_value.to_string(),
        "divisible_by_f": t.divisible_by_f(),
        "contains_f_power": t.contains_f_power(),
    });
    Ok(Output::ok(body, text))
}

fn super_ideal<F: Ring>(ring: F, lambda: &Composition) -> Result<Output> {
    let t = SuperTraceIdeal::new(ring, lambda)?;
    let d = &t.data;
    let g = &d.gamma;
    let theta: Vec<String> = theta_generators(g)?.iter().map(|x| g.render(x)).collect();
    let delta_power = d.delta_power()?;
    let sandwich = t.sandwich_holds()?;
    let two_sided = d.delta_closure_failure()?.is_none();
    let text = format!(
        "Γ_{lambda}: dim {}\n  Θ: rank {} ({})\n  Δ: rank {}, two-sided {}\n  Δ^r: rank {}\n  J^c: rank {}, sandwiched {}\n  simple nonzero: {}\n",
        g.dim(),
        d.theta.rank(),
        theta.join(", "),
        d.delta.rank(),
        two_sided,
        delta_power.rank(),
        t.jc.rank(),
        sandwich,
        d.simple_nonzero()
    );
    let body = json!({
        "algebra": "hc",
        "lambda": lambda,
        "gamma_dim": g.dim(),
        "theta_generators": theta,
        "theta_rank": d.theta.rank(),
        "delta_rank": d.delta.rank(),
        "delta_two_sided": two_sided,
        "delta_whole_integrally": delta_is_whole_integrally(lambda)?,
        "delta_power_rank": delta_power.rank(),
        "jc_rank": t.jc.rank(),
        "specht_dim": t.specht_dim,
        "kernel_is_theta": t.kernel_is_theta(),
        "sandwich": sandwich,
        "simple_nonzero": d.simple_nonzero(),
    });
    Ok(Output::ok(body, text))
}

fn verify<F: Ring>(ring: F, algebra: Algebra, n: usize, order: LabelOrder) -> Result<Output> {
    let inst: FilteredAlgebraInstance<F> = match algebra {
        Algebra::Hecke => hecke_instance(ring, n, order)?,
        Algebra::Hc => hecke_clifford_instance(ring, n, order)?,
    };
    let mut reports: Vec<(Option<String>, AxiomReport)> = vec![(None, inst.verify_ideal_filter()), (None, inst.verify_rigidity())];
    for l in &inst.labels {
        reports.push((Some(l.clone()), inst.verify_morita_context(l)?));
    }
    reports.push((None, inst.verify_standard_basis()));
    let failed = reports.iter().any(|(_, r)| !r.passed());
    let mut text = format!("{} (dim {}, {} labels)\n", inst.name, inst.algebra.dim(), inst.num_labels());
    let mut list = Vec::new();
    for (label, r) in &reports {
        let name = match label {
            Some(l) => format!("{} {l}", r.axiom),
            None => r.axiom.clone(),
        };
        text += &format!("  {:<28} {}\n", name, if r.passed() { "pass" } else { "FAIL" });
        if let Some(w) = &r.witness {
            text += &format!("    witness: {}\n", serde_json::to_string(w).expect("json"));
        }
        let mut v = serde_json::to_value(r).map_err(|e| Error::Invariant(e.to_string()))?;
        if let (Some(l), Value::Object(m)) = (label, &mut v) {
            m.insert("label".into(), json!(l));
        }
        list.push(v);
    }
    let body = json!({"instance": inst.name, "dim": inst.algebra.dim(), "labels": inst.labels, "reports": list, "passed": !failed});
    Ok(Output { json: body, text, failed })
}
