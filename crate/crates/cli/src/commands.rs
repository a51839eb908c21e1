use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};
use symprod_core::curves::{brill_noether_rho, generic_delta, generic_gonality, generic_min_degree, CurveClass, CurveProfile};
use symprod_core::io::{
    cert_report_value, certificate_value, configuration_to_json, parse_configuration, subspace_doc, AnyConfiguration,
};
use symprod_core::irrationality::{deg_gonality, degirr_interval, moving_gonality_lower, BoundInterval};
use symprod_core::linalg::{format_rational, parse_rational, Field, PrimeField};
use symprod_core::nefcone::{
    default_gonality_constant, search_min_ratio, verify_tau_certificate, CertReport, FailedCheck, Infeasibility,
};
use symprod_core::projective::plucker;
use symprod_core::special_position::{
    check_span_bound, decide, gen_fixture, oracle_ffield, BoundStatus, Certificate, Configuration, Family,
};

use crate::args::{ClassArg, Cli, Command, FamilyArg, FixtureArgs, ProfileArgs};
use crate::EXIT_UNDECIDED;

/// What a command produced: a JSON document, its text rendering, and the
/// exit status.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub code: u8,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Self { json, text, code: 0 }
    }
}

const KNOWN_PAIRS: [(u64, u64, u64); 3] = [(6, 32, 13), (7, 77, 29), (8, 17, 6)];

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::SpecposDecide { config, trials } => match load(config)? {
            AnyConfiguration::Rational(c) => Ok(decide_report(&c, *trials, cli.seed)),
            AnyConfiguration::Prime(c) => Ok(decide_report(&c, *trials, cli.seed)),
        },
        Command::SpecposSpan { config } => match load(config)? {
            AnyConfiguration::Rational(c) => Ok(span_report(&c)),
            AnyConfiguration::Prime(c) => Ok(span_report(&c)),
        },
        Command::SpecposOracle { config, prime } => oracle_report(load(config)?, *prime),
        Command::Fixture(args) => fixture(args, cli.seed),
        Command::Plucker { config } => match load(config)? {
            AnyConfiguration::Rational(c) => Ok(plucker_report(&c)),
            AnyConfiguration::Prime(c) => Ok(plucker_report(&c)),
        },
        Command::Bn { genus, r, d } => bn(*genus, *r, *d),
        Command::Gonality { genus } => Ok(gonality(*genus)),
        Command::Degirr(p) => {
            let interval = degirr_interval(&profile(p))?;
            Ok(interval_report("deg_r(C^(2))", &interval))
        }
        Command::Dego { profile: p, k } => {
            let prof = profile(p);
            let interval = deg_gonality(&prof, *k)?;
            let mut report = interval_report(&format!("deg_o(C^({k}))"), &interval);
            if *k == 2 && prof.genus >= 3 {
                let m = moving_gonality_lower(&prof)?;
                report.json["moving_gonality"] = json!(m);
                let rigid = match m.rigidity_applies {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "unknown",
                };
                let _ = writeln!(report.text, "covering curves have gonality >= {}; rigidity: {rigid}", m.bound);
            }
            Ok(report)
        }
        Command::NefconeVerify { g, a, b, tau_prev, c } => {
            let a = parse_int(a, "a")?;
            let b = parse_int(b, "b")?;
            let tau = parse_rational(tau_prev).map_err(|e| anyhow!("--tau-prev: {e}"))?;
            let c = gonality_constant(*g, *c)?;
            let report = verify_tau_certificate(*g, &a, &b, &tau, c)?;
            Ok(Report::ok(cert_report_value(&report), cert_text(&report)))
        }
        Command::NefconeSearch { g, tau_prev, b_max, c } => {
            let tau = parse_rational(tau_prev).map_err(|e| anyhow!("--tau-prev: {e}"))?;
            let c = gonality_constant(*g, *c)?;
            let report = search_min_ratio(*g, c, &tau, *b_max)?;
            let known = KNOWN_PAIRS
                .iter()
                .any(|&(kg, ka, kb)| kg == *g && report.a == BigInt::from(ka) && report.b == BigInt::from(kb));
            let mut json = cert_report_value(&report);
            json["known_pair"] = json!(known);
            let mut text = format!("best certificate for b <= {b_max}: a = {}, b = {}\n", report.a, report.b);
            if !known {
                text.push_str("toolkit-derived, unpublished\n");
            }
            text.push_str(&cert_text(&report));
            Ok(Report::ok(json, text))
        }
    }
}

fn load(path: &Path) -> Result<AnyConfiguration> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_configuration(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_int(s: &str, name: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| anyhow!("--{name} must be an integer, got {s:?}"))
}

fn gonality_constant(g: u64, c: Option<u64>) -> Result<u64> {
    if let Some(c) = c {
        return Ok(c);
    }
    let g = u32::try_from(g).map_err(|_| anyhow!("genus {g} too large"))?;
    Ok(default_gonality_constant(g).0 as u64)
}

fn fmt_vec<F: Field>(field: &F, v: &[F::Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|x| field.format(x)).collect();
    format!("({})", parts.join(", "))
}

fn decide_report<F: Field>(c: &Configuration<F>, trials: usize, seed: u64) -> Report {
    let field = c.field();
    let cert = decide(c, trials, seed);
    let mut json = certificate_value(&cert, field);
    json["n"] = json!(c.n());
    json["k"] = json!(c.k());
    json["d"] = json!(c.d());
    let mut text = String::new();
    let mut code = 0;
    match &cert {
        Certificate::Special { dependencies } => {
            text.push_str("verdict: special\n");
            for (j, row) in dependencies.iter().enumerate() {
                let _ = writeln!(text, "p(l{j}) = {}", combination(field, row));
            }
        }
        Certificate::NotSpecial {
            excluded_index,
            witness,
        } => {
            text.push_str("verdict: not special\n");
            let _ = writeln!(text, "witness misses l{excluded_index} and meets every other subspace:");
            for row in witness.basis().row_iter() {
                let _ = writeln!(text, "  {}", fmt_vec(field, row));
            }
        }
        Certificate::Undecided { trials_used: 0 } => {
            let _ = writeln!(
                text,
                "verdict: undecided (no witness search applies to d = {}, k = {} in P^{})",
                c.d(),
                c.k(),
                c.n()
            );
            code = EXIT_UNDECIDED;
        }
        Certificate::Undecided { trials_used } => {
            let _ = writeln!(text, "verdict: undecided after {trials_used} trials per index");
            code = EXIT_UNDECIDED;
        }
    }
    Report { json, text, code }
}

fn combination<F: Field>(field: &F, coeffs: &[F::Elem]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, a)| !field.is_zero(a))
        .map(|(i, a)| format!("{}·p(l{i})", field.format(a)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn span_report<F: Field>(c: &Configuration<F>) -> Report {
    let s = check_span_bound(c);
    let status = match s.status {
        BoundStatus::Holds => "holds",
        BoundStatus::Violated => "violated",
        BoundStatus::NotApplicable => "not applicable (k = 1)",
    };
    let json = json!({
        "n": c.n(), "k": c.k(), "d": c.d(),
        "span_dim": s.span_dim, "bound": s.bound, "status": s.status,
    });
    let text = format!("span dimension {}, bound floor(kd/2) - 1 = {}: {status}\n", s.span_dim, s.bound);
    Report::ok(json, text)
}

fn oracle_report(config: AnyConfiguration, prime: Option<u32>) -> Result<Report> {
    let c = match (config, prime) {
        (AnyConfiguration::Prime(c), None) => c,
        (AnyConfiguration::Prime(c), Some(p)) => {
            if c.field().modulus() != p {
                bail!("configuration is over F_{}, not F_{p}", c.field().modulus());
            }
            c
        }
        (AnyConfiguration::Rational(c), Some(p)) => c.reduce_mod(PrimeField::new(p as u64)?)?,
        (AnyConfiguration::Rational(_), None) => bail!("a rational configuration needs --prime"),
    };
    let r = oracle_ffield(&c)?;
    let fp = *c.field();
    let p = fp.modulus();
    let mut json = json!({
        "prime": p,
        "special": r.special,
        "planes_enumerated": r.planes_enumerated,
    });
    let mut text = format!(
        "over F_{p}: {} ({} planes of dimension {} enumerated)\n",
        if r.special { "special" } else { "not special" },
        r.planes_enumerated,
        c.n() - c.k()
    );
    if let Some((j, w)) = &r.counterexample {
        json["counterexample"] = json!({ "excluded_index": j, "witness": subspace_doc(w) });
        let _ = writeln!(text, "first plane missing only l{j}:");
        for row in w.basis().row_iter() {
            let _ = writeln!(text, "  {}", fmt_vec(&fp, row));
        }
    }
    Ok(Report::ok(json, text))
}

fn family(args: &FixtureArgs, seed: u64) -> Result<Family> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| anyhow!("--{name} is required for this family"));
    Ok(match args.family {
        FamilyArg::Pencil => Family::Pencil {
            d: need(args.d, "d")?,
            n: args.n.unwrap_or(3),
        },
        FamilyArg::QuadricRuling => Family::QuadricRuling { d: need(args.d, "d")? },
        FamilyArg::Scroll => Family::Scroll { d: need(args.d, "d")? },
        FamilyArg::Triangle => Family::Triangle,
        FamilyArg::RandomSkew => Family::RandomSkew {
            d: need(args.d, "d")?,
            n: args.n.unwrap_or(3),
            seed,
        },
    })
}

fn fixture(args: &FixtureArgs, seed: u64) -> Result<Report> {
    let c = gen_fixture(family(args, seed)?)?;
    let doc = configuration_to_json(&c);
    let json: Value = serde_json::from_str(&doc).expect("emitted JSON parses");
    match &args.out {
        Some(path) => {
            fs::write(path, &doc).with_context(|| format!("writing {}", path.display()))?;
            let text = format!("wrote {} subspaces of P^{} to {}\n", c.d(), c.n(), path.display());
            Ok(Report::ok(json!({ "path": path.display().to_string(), "d": c.d(), "n": c.n() }), text))
        }
        None => Ok(Report::ok(json, doc)),
    }
}

fn plucker_report<F: Field>(c: &Configuration<F>) -> Report {
    let field = c.field();
    let vectors: Vec<_> = c.subspaces().iter().map(plucker).collect();
    let index_sets = vectors[0].index_sets();
    let coords: Vec<Vec<String>> = vectors
        .iter()
        .map(|v| v.coords.iter().map(|x| field.format(x)).collect())
        .collect();
    let mut text = String::new();
    let labels: Vec<String> = index_sets
        .iter()
        .map(|s| s.iter().map(|i| i.to_string()).collect::<String>())
        .collect();
    let _ = writeln!(text, "index sets: {}", labels.join(" "));
    for (i, v) in vectors.iter().enumerate() {
        let _ = writeln!(text, "p(l{i}) = {}", fmt_vec(field, &v.coords));
    }
    Report::ok(json!({ "index_sets": index_sets, "coordinates": coords }), text)
}

fn bn(g: u32, r: u32, d: Option<u32>) -> Result<Report> {
    if r == 0 && d.is_none() {
        bail!("--r must be positive unless --d is given");
    }
    let mut json = json!({ "genus": g, "r": r });
    let mut text = String::new();
    if let Some(d) = d {
        let rho = brill_noether_rho(g as i64, r as i64, d as i64);
        json["d"] = json!(d);
        json["rho"] = json!(rho);
        let _ = writeln!(text, "rho({g}, {r}, {d}) = {rho}");
    }
    if r >= 1 {
        let m = generic_min_degree(g, r);
        json["min_degree"] = json!(m);
        let _ = writeln!(text, "least d with rho >= 0: {m}");
    }
    Ok(Report::ok(json, text))
}

fn gonality(g: u32) -> Report {
    let gon = generic_gonality(g);
    let mut json = json!({ "genus": g, "gonality": gon });
    let mut text = format!("gonality of a very general curve of genus {g}: {gon}\n");
    if g >= 3 {
        let d2 = generic_delta(g, 2).expect("defined");
        let d3 = generic_delta(g, 3).expect("defined");
        json["delta2"] = json!(d2);
        json["delta3"] = json!(d3);
        let _ = writeln!(text, "delta_2 = {d2}, delta_3 = {d3}");
    }
    Report::ok(json, text)
}

fn profile(p: &ProfileArgs) -> CurveProfile {
    let class = match p.class {
        ClassArg::VeryGeneral => CurveClass::VeryGeneral,
        ClassArg::Hyperelliptic => CurveClass::Hyperelliptic,
        ClassArg::NonHyperelliptic => CurveClass::NonHyperelliptic,
        ClassArg::Arbitrary => CurveClass::Arbitrary,
    };
    let mut prof = CurveProfile::new(p.genus, class);
    prof.gonality = p.gonality;
    if let Some(v) = p.delta2 {
        prof.delta.insert(2, v);
    }
    if let Some(v) = p.delta3 {
        prof.delta.insert(3, v);
    }
    prof.elliptic_cover_degree = p.elliptic_cover;
    prof.trivial_automorphisms = p.trivial_aut;
    prof
}

fn interval_report(name: &str, b: &BoundInterval) -> Report {
    let json = serde_json::to_value(b).expect("serializable");
    let hi = b.hi.map_or_else(|| "?".to_string(), |h| h.to_string());
    let mut text = if b.exact {
        format!("{name} = {}\n", b.lo)
    } else {
        format!("{} <= {name} <= {hi}\n", b.lo)
    };
    let _ = writeln!(text, "from: {}", b.provenance.join(", "));
    for a in &b.annotations {
        let _ = writeln!(text, "note: {a}");
    }
    Report::ok(json, text)
}

/// A m² + B m + C with unit coefficients left implicit.
fn poly(q: &(BigInt, BigInt, BigInt)) -> String {
    let one = BigInt::from(1);
    let mut s = if q.0 == one {
        "m²".to_string()
    } else if q.0 == -&one {
        "-m²".to_string()
    } else {
        format!("{}m²", q.0)
    };
    for (c, var) in [(&q.1, "m"), (&q.2, "")] {
        let sign = if c.sign() == num_bigint::Sign::Minus { "-" } else { "+" };
        let mag = c.magnitude();
        if var.is_empty() || (c != &one && c != &-&one) {
            let _ = write!(s, " {sign} {mag}{var}");
        } else {
            let _ = write!(s, " {sign} {var}");
        }
    }
    s
}

fn cert_text(r: &CertReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "{}", if r.valid { "valid" } else { "invalid" });
    let _ = writeln!(t, "ratio a/b = {}", format_rational(&r.ratio));
    let _ = writeln!(t, "L²={}", r.l_squared);
    let _ = writeln!(t, "f(m) = {}", poly(&r.quadratic));
    let _ = writeln!(t, "discriminant = {}", r.discriminant);
    match &r.evidence {
        Some(Infeasibility::NegativeDiscriminant(_)) => {
            t.push_str("f has no real root, so f(m) > 0 for every integer m\n");
        }
        Some(Infeasibility::IntegerPoints { from, to }) if to < from => {
            t.push_str("larger root of f is below 2, so f(m) > 0 for every integer m >= 2\n");
        }
        Some(Infeasibility::IntegerPoints { from, to }) => {
            let _ = writeln!(t, "f checked positive on every integer in [{from}, {to}], and has no root beyond");
        }
        Some(Infeasibility::Counterexample { m, value }) => {
            let _ = writeln!(t, "f({m}) = {value} <= 0");
        }
        None => {}
    }
    if let Some(check) = r.failed_check {
        let what = match check {
            FailedCheck::Ratio => "ratio below the previous slope bound",
            FailedCheck::LSquared => "L² is not positive",
            FailedCheck::LeadingCoefficient => "leading coefficient L² - b² is not positive",
            FailedCheck::IntegerPoint => "f is not positive at some integer m >= 2",
        };
        let _ = writeln!(t, "failed: {what}");
    }
    if r.advisory {
        t.push_str("advisory: gonality constant is not established for this genus\n");
    }
    t
}
