//! Command-line front end. [`run`] returns the exit code and captured
//! output so it can be driven from tests and the C interface.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use crate::corpus;
use crate::descartes::{mult_neg_one_direct, mult_one_direct, sign_changes, substitute_neg, verify_descartes};
use crate::error::{Error, Result};
use crate::hyperfield::{check_axioms, Element, Hyperfield, Trop};
use crate::instances::{check_homomorphism, iso_to_named, Homomorphism};
use crate::parse::{parse_element, parse_field, parse_poly, parse_poly_list, parse_ratpoly, parse_rational_list};
use crate::polynomial::{eval_hyperset, hyper_product, is_root, quotients, AssocTree, Method, MultReport, MultSolver, Poly};
use crate::ratpoly::{sign_image, RatPoly};
use crate::rational::format_rational;
use crate::tropical::{
    functional_equiv, in_product, newton_polygon, newton_rule_verify, normalize, tropical_roots, trop_values,
    NewtonPolygon,
};
use crate::verify;

const ABOUT: &str = "Roots and multiplicities of polynomials over hyperfields.

Coefficients are always listed in ascending order, c_0 first, separated by
commas. Hyperfields: Q, Fp:<p>, S, K, W, P, T, quot:<p>:<g1,g2,...>.
Tropical values use `inf`; phases are 0, 1, -1 or e^q (angle q·pi);
quotient cosets are [r]. Rationals are written a or a/b.

Exit status: 0 on success, 1 on a domain error or a failed check, 2 on a
parse error.";

#[derive(Parser, Debug)]
#[command(name = "hyperpoly", version, about = "Roots and multiplicities of polynomials over hyperfields", long_about = ABOUT)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MultMethod {
    Auto,
    Recursive,
    SignChanges,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Signs,
    Descartes,
    Newton,
    Tropical,
    Axioms,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the hyperfield axioms; optionally search for an isomorphism.
    Axioms {
        #[arg(long)]
        field: String,
        /// Target hyperfield for the isomorphism search.
        #[arg(long)]
        iso: Option<String>,
    },
    /// Evaluate at an element, or list all roots.
    Roots {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Multiplicity of an element as a root, with a witness chain.
    Mult {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value_t = MultMethod::Auto)]
        method: MultMethod,
    },
    /// All q with p ∈ (T - a) q.
    Quotients {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Sign changes; over Q, compare them with the positive and negative root counts.
    Descartes {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Rational roots certifying a full split.
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
    },
    /// Newton polygon over T, or of the p-adic valuations of a rational polynomial.
    Newton {
        #[arg(long, default_value = "T")]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        prime: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
        /// Write hull segments as "x y" lines, blank line between segments.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Factor a tropical polynomial into linear factors.
    Factor {
        #[arg(long, default_value = "T")]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Iterated hyperproduct under an association tree such as "((1 2) 3)".
    Hyperprod {
        #[arg(long)]
        field: String,
        /// Factors separated by ';', e.g. "(-1,1);(-1,1);(1,1)".
        #[arg(long, allow_hyphen_values = true)]
        polys: String,
        #[arg(long)]
        assoc: Option<String>,
    },
    /// Batch cross-checks; HYPERPOLY_SEED fixes the random corpus.
    Verify {
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        /// Homomorphism to check: sign or padic:<p>.
        #[arg(long)]
        hom: Option<String>,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Output {
    text: String,
    json: Json,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Json) -> Self {
        Output { text, json, ok: true }
    }
}

/// Runs one command line; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let mut warnings = Vec::new();
    match dispatch(&cli.command, &mut warnings) {
        Ok(out) => {
            let stdout = match cli.format {
                Format::Text => out.text,
                Format::Json => {
                    let mut j = serde_json::to_string_pretty(&out.json).expect("json values serialize");
                    j.push('\n');
                    j
                }
            };
            Outcome {
                code: if out.ok { 0 } else { 1 },
                stdout,
                stderr: warnings.iter().map(|w| format!("warning: {w}\n")).collect(),
            }
        }
        Err(e) => {
            let mut stderr: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            let _ = writeln!(stderr, "error: {e}");
            let stdout = match cli.format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({ "error": e.to_string(), "code": e.exit_code() })).unwrap()
                ),
                Format::Text => String::new(),
            };
            Outcome {
                code: e.exit_code(),
                stdout,
                stderr,
            }
        }
    }
}

fn poly_arg(f: &Hyperfield, text: &str, warnings: &mut Vec<String>) -> Result<Poly> {
    let (p, trimmed) = parse_poly(f, text)?;
    if trimmed {
        warnings.push(format!("dropped trailing zero coefficients; using {p}"));
    }
    Ok(p)
}

fn ratpoly_arg(text: &str, warnings: &mut Vec<String>) -> Result<RatPoly> {
    let (p, trimmed) = parse_ratpoly(text)?;
    if trimmed {
        warnings.push(format!("dropped trailing zero coefficients; using {p}"));
    }
    Ok(p)
}

fn dispatch(cmd: &Command, warnings: &mut Vec<String>) -> Result<Output> {
    match cmd {
        Command::Axioms { field, iso } => axioms(field, iso.as_deref()),
        Command::Roots { field, poly, at } => {
            let f = parse_field(field)?;
            let p = poly_arg(&f, poly, warnings)?;
            roots(&f, &p, at.as_deref())
        }
        Command::Mult { field, poly, at, method } => {
            let f = parse_field(field)?;
            let p = poly_arg(&f, poly, warnings)?;
            let a = parse_element(&f, at)?;
            mult(&f, &p, &a, *method)
        }
        Command::Quotients { field, poly, at } => {
            let f = parse_field(field)?;
            let p = poly_arg(&f, poly, warnings)?;
            let a = parse_element(&f, at)?;
            let qs = quotients(&f, &p, &a)?;
            let mut text = format!("quotients of {p} by T - {a}: {}\n", qs.len());
            for q in &qs {
                let _ = writeln!(text, "{q}");
            }
            Ok(Output::ok(
                text,
                json!({ "field": f.spec(), "poly": p, "at": a.to_string(), "quotients": qs }),
            ))
        }
        Command::Descartes { field, poly, roots } => {
            let f = parse_field(field)?;
            descartes(&f, poly, roots.as_deref(), warnings)
        }
        Command::Newton {
            field,
            poly,
            prime,
            roots,
            plot,
        } => {
            let f = parse_field(field)?;
            newton(&f, poly, *prime, roots.as_deref(), plot.as_ref(), warnings)
        }
        Command::Factor { field, poly } => {
            let f = parse_field(field)?;
            if !f.is_tropical() {
                return Err(Error::domain(format!("factor needs the tropical hyperfield T, got {}", f.spec())));
            }
            let p = poly_arg(&f, poly, warnings)?;
            factor(&p)
        }
        Command::Hyperprod { field, polys, assoc } => {
            let f = parse_field(field)?;
            let factors: Vec<Poly> = parse_poly_list(&f, polys)?
                .into_iter()
                .map(|(p, trimmed)| {
                    if trimmed {
                        warnings.push(format!("dropped trailing zero coefficients; using {p}"));
                    }
                    p
                })
                .collect();
            if factors.is_empty() {
                return Err(Error::parse("no factors given"));
            }
            let tree = match assoc {
                Some(t) => AssocTree::parse(t)?,
                None => AssocTree::left(factors.len()),
            };
            let prods = hyper_product(&f, &factors, &tree)?;
            let mut text = format!("{} polynomials\n", prods.len());
            for q in &prods {
                let _ = writeln!(text, "{q}");
            }
            Ok(Output::ok(
                text,
                json!({ "field": f.spec(), "factors": factors, "count": prods.len(), "products": prods }),
            ))
        }
        Command::Verify { suite, hom, count } => verify_cmd(*suite, hom.as_deref(), *count),
    }
}

fn axioms(field: &str, iso: Option<&str>) -> Result<Output> {
    let f = parse_field(field)?;
    let report = check_axioms(&f);
    let mut text = format!(
        "{}: {} ({} cases)\n",
        report.instance,
        if report.exhaustive { "exhaustive" } else { "sampled" },
        report.sample_size
    );
    for r in &report.results {
        let _ = write!(text, "{:<22} {}", r.axiom.label(), if r.passed { "pass" } else { "FAIL" });
        if let Some(w) = &r.witness {
            let w: Vec<String> = w.iter().map(|e| e.to_string()).collect();
            let _ = write!(text, "  witness ({})", w.join(", "));
        }
        text.push('\n');
    }
    for n in &report.notes {
        let _ = writeln!(text, "note: {n}");
    }
    let mut j = json!({ "report": report });
    let mut ok = report.all_passed();
    if let Some(target) = iso {
        let g = parse_field(target)?;
        match iso_to_named(&f, &g)? {
            Some(map) => {
                let pairs: Vec<String> = map.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                let _ = writeln!(text, "isomorphic to {}: {}", g.spec(), pairs.join(", "));
                j["iso"] = json!({ "target": g.spec(), "mapping": pairs });
            }
            None => {
                let _ = writeln!(text, "not isomorphic to {}", g.spec());
                j["iso"] = json!({ "target": g.spec(), "mapping": Json::Null });
                ok = false;
            }
        }
    }
    Ok(Output { text, json: j, ok })
}

fn roots(f: &Hyperfield, p: &Poly, at: Option<&str>) -> Result<Output> {
    if let Some(tok) = at {
        let a = parse_element(f, tok)?;
        let value = eval_hyperset(f, p, &a)?;
        let root = is_root(f, p, &a)?;
        return Ok(Output::ok(
            format!("p({a}) = {value}\nroot = {root}\n"),
            json!({ "field": f.spec(), "poly": p, "at": a.to_string(), "value": value.to_string(), "root": root }),
        ));
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let found: Vec<(Element, usize)> = if f.is_tropical() {
        let mut grouped: Vec<(Element, usize)> = Vec::new();
        for r in tropical_roots(p)? {
            let e = Element::trop(r);
            match grouped.last_mut() {
                Some((last, n)) if *last == e => *n += 1,
                _ => grouped.push((e, 1)),
            }
        }
        grouped
    } else if f.is_enumerable() {
        let mut solver = MultSolver::new(f);
        let mut v = Vec::new();
        for a in f.carrier()? {
            let m = solver.multiplicity(p, &a)?.multiplicity;
            if m > 0 {
                v.push((a, m));
            }
        }
        v
    } else {
        return Err(Error::NonEnumerable(format!(
            "carrier of {} is infinite; pass --at",
            f.spec()
        )));
    };
    let total: usize = found.iter().map(|(_, m)| m).sum();
    let mut text = String::new();
    for (a, m) in &found {
        let _ = writeln!(text, "{a}  mult {m}");
    }
    let _ = writeln!(text, "total multiplicity = {total}, degree = {}", p.degree().unwrap());
    let list: Vec<Json> = found
        .iter()
        .map(|(a, m)| json!({ "root": a.to_string(), "mult": m }))
        .collect();
    Ok(Output::ok(
        text,
        json!({ "field": f.spec(), "poly": p, "roots": list, "total": total, "degree": p.degree() }),
    ))
}

fn mult(f: &Hyperfield, p: &Poly, a: &Element, method: MultMethod) -> Result<Output> {
    let report = match method {
        MultMethod::Auto | MultMethod::Recursive => {
            let r = MultSolver::new(f).multiplicity(p, a)?;
            if method == MultMethod::Recursive && r.method != Method::Recursive && !a.is_zero() {
                return Err(Error::Unsupported(format!(
                    "recursive multiplicity over {} (quotient families are infinite)",
                    f.spec()
                )));
            }
            r
        }
        MultMethod::SignChanges => {
            if f != &Hyperfield::sign() {
                return Err(Error::domain("sign changes apply to the sign hyperfield S"));
            }
            let m = match a.as_sign() {
                Some(1) => mult_one_direct(p)?,
                Some(-1) => mult_neg_one_direct(p)?,
                _ => return Err(Error::domain("sign changes give multiplicities at 1 and -1")),
            };
            MultReport {
                element: a.clone(),
                multiplicity: m,
                method: Method::SignChanges,
                chain: Vec::new(),
            }
        }
    };
    let mut text = format!("mult = {}\nmethod = {}\n", report.multiplicity, method_name(report.method));
    if !report.chain.is_empty() {
        text.push_str("chain:\n");
        let mut prev = p.clone();
        for q in &report.chain {
            let _ = writeln!(text, "  {prev} ∈ (T - {a}) · ({q})");
            prev = q.clone();
        }
    }
    Ok(Output::ok(
        text,
        json!({ "field": f.spec(), "poly": p, "report": report }),
    ))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Recursive => "recursive",
        Method::SignChanges => "sign_changes",
        Method::NewtonPolygon => "newton_polygon",
        Method::ZeroOrder => "zero_order",
    }
}

fn descartes(f: &Hyperfield, poly: &str, hint: Option<&str>, warnings: &mut Vec<String>) -> Result<Output> {
    if f == &Hyperfield::sign() {
        let p = poly_arg(f, poly, warnings)?;
        let pos = sign_changes(&p)?;
        let neg = sign_changes(&substitute_neg(&p)?)?;
        return Ok(Output::ok(
            format!("sign changes = {pos}\nsign changes of p(-T) = {neg}\n"),
            json!({ "field": "S", "poly": p, "sign_changes": pos, "sign_changes_neg": neg }),
        ));
    }
    if f != &Hyperfield::rational() {
        return Err(Error::domain(format!("descartes needs Q or S, got {}", f.spec())));
    }
    let p = ratpoly_arg(poly, warnings)?;
    let roots = hint.map(parse_rational_list).transpose()?;
    let r = verify_descartes(&p, roots.as_deref())?;
    let img = sign_image(&p);
    let text = format!(
        "sign image = {img}\nbound = ({}, {})\npositive roots = {}\nnegative roots = {}\nsplit = {}\npassed = {}\n",
        r.bound_pos, r.bound_neg, r.positive_roots, r.negative_roots, r.split, r.passed
    );
    Ok(Output {
        text,
        json: json!({ "field": "Q", "poly": p.to_string(), "sign_image": img, "report": r }),
        ok: r.passed,
    })
}

fn polygon_json(np: &NewtonPolygon) -> Json {
    json!({
        "vertices": np.vertices.iter().map(|(x, y)| json!([x, format_rational(y)])).collect::<Vec<_>>(),
        "segments": np.segments.iter().map(|s| json!({ "s": format_rational(&s.slope), "length": s.length })).collect::<Vec<_>>(),
        "infinite_prefix": np.infinite_prefix,
    })
}

fn polygon_text(np: &NewtonPolygon) -> String {
    let verts: Vec<String> = np
        .vertices
        .iter()
        .map(|(x, y)| format!("({x}, {})", format_rational(y)))
        .collect();
    let segs: Vec<String> = np
        .segments
        .iter()
        .map(|s| format!("({}, {})", format_rational(&s.slope), s.length))
        .collect();
    format!(
        "vertices = {}\nsegments (s, length) = {}\ninfinite prefix = {}\n",
        verts.join(" "),
        segs.join(" "),
        np.infinite_prefix
    )
}

fn plot_data(np: &NewtonPolygon) -> String {
    np.vertices
        .windows(2)
        .map(|w| {
            format!(
                "{} {}\n{} {}\n",
                w[0].0,
                format_rational(&w[0].1),
                w[1].0,
                format_rational(&w[1].1)
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn newton(
    f: &Hyperfield,
    poly: &str,
    prime: Option<u32>,
    hint: Option<&str>,
    plot: Option<&PathBuf>,
    warnings: &mut Vec<String>,
) -> Result<Output> {
    let out = if f.is_tropical() {
        if prime.is_some() || hint.is_some() {
            return Err(Error::domain("--prime and --roots apply to rational polynomials (--field Q)"));
        }
        let p = poly_arg(f, poly, warnings)?;
        let np = newton_polygon(&p)?;
        let roots: Vec<String> = tropical_roots(&p)?.iter().map(|r| r.to_string()).collect();
        let text = format!("{}roots = {}\n", polygon_text(&np), roots.join(","));
        let j = json!({ "field": "T", "poly": p, "polygon": polygon_json(&np), "roots": roots });
        (Output::ok(text, j), np)
    } else if f == &Hyperfield::rational() {
        let prime = prime.ok_or_else(|| Error::domain("newton over Q needs --prime"))?;
        let p = ratpoly_arg(poly, warnings)?;
        let roots = hint.map(parse_rational_list).transpose()?;
        let r = newton_rule_verify(&p, prime, roots.as_deref())?;
        let mut text = format!("valuations = {}\n{}", r.valuations, polygon_text(&r.polygon));
        let mut rows = Vec::new();
        for c in &r.slopes {
            let _ = writeln!(text, "s = {}: nu = {}, roots = {}", c.slope, c.nu, c.roots);
            rows.push(json!({ "s": c.slope.to_string(), "nu": c.nu, "roots": c.roots }));
        }
        let _ = writeln!(text, "split = {}\npassed = {}", r.split, r.passed);
        let j = json!({
            "field": "Q",
            "prime": prime,
            "poly": p.to_string(),
            "valuations": r.valuations,
            "polygon": polygon_json(&r.polygon),
            "slopes": rows,
            "split": r.split,
            "passed": r.passed,
        });
        let ok = r.passed;
        (Output { text, json: j, ok }, r.polygon)
    } else {
        return Err(Error::domain(format!(
            "newton needs T, or Q with --prime; got {}",
            f.spec()
        )));
    };
    let (mut output, np) = out;
    if let Some(path) = plot {
        std::fs::write(path, plot_data(&np))
            .map_err(|e| Error::domain(format!("cannot write {}: {e}", path.display())))?;
        let _ = writeln!(output.text, "plot data written to {}", path.display());
    }
    Ok(output)
}

fn factor(p: &Poly) -> Result<Output> {
    let c = trop_values(p)?;
    let lead = c.last().and_then(Trop::finite).ok_or(Error::ZeroPolynomial)?.clone();
    let monic = normalize(p)?;
    let roots = tropical_roots(p)?;
    let member = in_product(&monic, &roots)?;
    let equiv = functional_equiv(&monic, &roots)?;
    let mut groups: Vec<(Trop, usize)> = Vec::new();
    for r in &roots {
        match groups.last_mut() {
            Some((last, n)) if last == r => *n += 1,
            _ => groups.push((r.clone(), 1)),
        }
    }
    let factors: Vec<String> = groups
        .iter()
        .map(|(r, n)| {
            let base = if r.is_inf() { "T".to_string() } else { format!("(T ⊞ {r})") };
            if *n > 1 {
                format!("{base}^{n}")
            } else {
                base
            }
        })
        .collect();
    let text = format!(
        "p ∈ {} ⊙ {}\nnormalized = {monic}\nroots = {}\nin product = {member}\nfunctional match = {equiv}\n",
        format_rational(&lead),
        factors.join(" "),
        roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
    );
    Ok(Output {
        text,
        json: json!({
            "field": "T",
            "poly": p,
            "leading": format_rational(&lead),
            "normalized": monic,
            "roots": roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "in_product": member,
            "functional_equiv": equiv,
        }),
        ok: member && equiv,
    })
}

fn verify_cmd(suite: Option<Suite>, hom: Option<&str>, count: usize) -> Result<Output> {
    if let Some(h) = hom {
        let hom = match h.trim() {
            "sign" => Homomorphism::sign(),
            other => {
                let p = other
                    .strip_prefix("padic:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::parse(format!("expected sign or padic:<p>, got {other:?}")))?;
                Homomorphism::padic(p)?
            }
        };
        let r = check_homomorphism(&hom)?;
        let mut text = format!(
            "homomorphism {h}: {} ({} cases, {})\n",
            if r.passed { "pass" } else { "FAIL" },
            r.cases,
            if r.exhaustive { "exhaustive" } else { "sampled" }
        );
        for v in &r.violations {
            let _ = writeln!(text, "  {} fails at ({})", v.property, v.witness.join(", "));
        }
        return Ok(Output {
            text,
            json: json!({ "homomorphism": h, "report": r }),
            ok: r.passed,
        });
    }
    let suite = suite.ok_or_else(|| Error::parse("verify needs --suite or --hom"))?;
    let seed = corpus::seed_from_env()?;
    let rep = match suite {
        Suite::Signs => verify::sign_suite(6)?,
        Suite::Descartes => verify::descartes_suite(seed, count)?,
        Suite::Newton => verify::newton_suite(seed, count)?,
        Suite::Tropical => verify::tropical_suite(seed, count)?,
        Suite::Axioms => verify::axiom_suite(31)?,
    };
    let mut text = format!(
        "suite {}: {} ({} cases, {} failures)\n",
        rep.suite,
        if rep.passed() { "pass" } else { "FAIL" },
        rep.cases,
        rep.failures.len()
    );
    if let Some(s) = rep.seed {
        let _ = writeln!(text, "seed = {s}");
    }
    for f in rep.failures.iter().take(10) {
        let _ = writeln!(text, "  {f}");
    }
    let ok = rep.passed();
    Ok(Output {
        text,
        json: json!({ "report": rep, "passed": ok }),
        ok,
    })
}
