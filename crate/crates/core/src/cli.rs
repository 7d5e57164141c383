//! Command-line front end. Every subcommand produces one JSON document on
//! stdout; `--pretty` renders the same document as indented text.
//!
//! Exit codes: 0 success, 2 parse or validation error, 3 mathematical
//! precondition violated, 4 unsupported request, 1 internal error.
//! Arguments may be given inline or as `@path` to read them from a file.
//! `DEDEKIND_THREADS` sets the size of the worker pool.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Map, Value};

use crate::admissible::{finset_approx, verify_partition, Admissible};
use crate::arith::{parse_integer, parse_rational, Integer, Rational};
use crate::class_group::{
    class_group_compute, class_number_is_one_iff_pid_check, ClassGroupOptions, ClassGroupResult, NormSearch,
};
use crate::domain::{EuclideanDomain, Integers, PolyRingFp};
use crate::error::{Error, Result};
use crate::function_field::FunctionFieldQuadratic;
use crate::ideals::{factor_ideal, IntegralIdeal, PrimeIdealData};
use crate::number_field::NumberField;
use crate::order::{Maximality, Order, OrderBasis};
use crate::poly::{parse_poly, IrreducibilityCertificate};

pub const THREADS_ENV: &str = "DEDEKIND_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "dedekind",
    version,
    about = "Exact arithmetic in rings of integers of global fields"
)]
pub struct Cli {
    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Degree, discriminants, irreducibility certificate and maximal order
    /// of a number field.
    FieldInfo {
        /// Defining polynomial in x, or a JSON field/order description.
        input: String,
        /// Optional integral basis to verify: JSON list of coordinate
        /// columns, e.g. [["1","0"],["0","1"]].
        #[arg(long)]
        basis: Option<String>,
    },
    /// Canonical prime factorization of an ideal of a maximal order.
    FactorIdeal {
        /// Order: "Q", "Q(sqrt(d))", a polynomial in x, or JSON.
        order: String,
        /// Generators, e.g. "(2, 1+x)", or a JSON list of coordinate vectors.
        generators: String,
    },
    /// Class number and class group of a maximal order.
    ClassNumber {
        /// "Q", "Q(sqrt(d))", a polynomial in x, or JSON (number field or
        /// {"q": 5, "f": "t^3+t+1"}).
        spec: String,
        /// Fail with exit code 4 instead of reporting a bound.
        #[arg(long)]
        exact: bool,
        /// Principality search radius in indefinite cases.
        #[arg(long, default_value_t = 50)]
        search_bound: u64,
        /// Primes of norm up to this bound enter the principal-ideal check.
        #[arg(long, default_value_t = 50)]
        prime_bound: u64,
    },
    /// Card values and verified partition certificates for an admissible
    /// absolute value.
    AdmissibleAudit {
        /// "Z" or "F<q>[t]".
        #[arg(long, default_value = "Z")]
        domain: String,
        /// Comma-separated positive rationals.
        #[arg(long, value_delimiter = ',', default_value = "1,1/2,1/3,1/4")]
        eps: Vec<String>,
        /// Comma-separated nonzero moduli (integers, or polynomials in t).
        #[arg(long, value_delimiter = ',')]
        b: Vec<String>,
        /// Also report the approximation set of this order.
        #[arg(long)]
        order: Option<String>,
    },
    /// Maximal order and class number of y^2 = f(t) over F_q(t).
    FunctionField {
        /// JSON {"q": 5, "f": "t^3+t+1"}; alternatively use --q and --f.
        spec: Option<String>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        f: Option<String>,
    },
}

/// Parses arguments, runs the command, prints the result and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Err(e) = configure_threads() {
        return report(&e);
    }
    match execute(&cli.command) {
        Ok(value) => {
            if cli.pretty {
                print!("{}", render_pretty(&value));
            } else {
                println!("{}", serde_json::to_string(&value).expect("JSON values serialize"));
            }
            0
        }
        Err(e) => report(&e),
    }
}

fn report(e: &Error) -> i32 {
    let doc = json!({ "error": e.to_string(), "exit_code": e.exit_code() });
    eprintln!("{doc}");
    e.exit_code()
}

fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?;
    if n == 0 {
        return Err(Error::InvalidInput(format!("{THREADS_ENV} must be positive")));
    }
    // A pool may already exist when called twice in one process.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Runs a command and returns its JSON document.
pub fn execute(command: &Command) -> Result<Value> {
    match command {
        Command::FieldInfo { input, basis } => field_info(&load(input)?, basis.as_deref().map(load).transpose()?),
        Command::FactorIdeal { order, generators } => factor_ideal_cmd(&load(order)?, &load(generators)?),
        Command::ClassNumber {
            spec,
            exact,
            search_bound,
            prime_bound,
        } => {
            let options = ClassGroupOptions {
                search_bound: *search_bound,
            };
            class_number_cmd(&load(spec)?, *exact, &options, *prime_bound)
        }
        Command::AdmissibleAudit { domain, eps, b, order } => {
            admissible_audit(domain, eps, b, order.as_deref().map(load).transpose()?)
        }
        Command::FunctionField { spec, q, f } => {
            let ff = match (spec, q, f) {
                (Some(s), None, None) => parse_function_field(&parse_json(&load(s)?)?)?,
                (None, Some(q), Some(f)) => FunctionFieldQuadratic::parse(*q, f)?,
                _ => {
                    return Err(Error::InvalidInput(
                        "give either a JSON spec or both --q and --f".into(),
                    ))
                }
            };
            function_field_cmd(&ff)
        }
    }
}

/// Inline text, or the contents of the file after `@`.
fn load(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))
        }
        None => Ok(arg.to_string()),
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn looks_like_json(text: &str) -> bool {
    let t = text.trim_start();
    t.starts_with('{') || t.starts_with('[')
}

enum OrderSpec {
    Number(OrderBasis),
    Function(FunctionFieldQuadratic),
}

fn parse_order_spec(text: &str) -> Result<OrderSpec> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if looks_like_json(&t) {
        let v = parse_json(text)?;
        if v.get("q").is_some() {
            return Ok(OrderSpec::Function(parse_function_field(&v)?));
        }
        return Ok(OrderSpec::Number(parse_number_order(&v)?));
    }
    if t == "Q" {
        return Ok(OrderSpec::Number(OrderBasis::rationals()));
    }
    if t == "Q(i)" {
        return Ok(OrderSpec::Number(OrderBasis::quadratic_maximal(-1)?));
    }
    if let Some(inner) = t.strip_prefix("Q(sqrt(").and_then(|r| r.strip_suffix("))")) {
        let d = parse_integer(inner)?
            .to_i64()
            .ok_or_else(|| Error::InvalidInput(format!("{inner} is out of range")))?;
        return Ok(OrderSpec::Number(OrderBasis::quadratic_maximal(d)?));
    }
    let field = NumberField::new(parse_poly(&t, 'x')?)?;
    Ok(OrderSpec::Number(default_order(&field)?))
}

/// Without an explicit basis: `Z` for `Q`, the closed-form maximal order for
/// integral quadratics, and the certified power-basis order otherwise.
fn default_order(field: &NumberField) -> Result<OrderBasis> {
    if field.degree() == 1 {
        return OrderBasis::from_basis(field, &[field.one()])?.with_certified_maximality();
    }
    if field.degree() == 2 && field.defining_poly().to_integer().is_some() {
        return OrderBasis::quadratic_maximal_of(field);
    }
    OrderBasis::from_basis(field, &field.power_basis())?.with_certified_maximality()
}

fn parse_field(v: &Value) -> Result<NumberField> {
    let poly = v
        .get("defining_poly")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::InvalidInput("field needs a \"defining_poly\" string".into()))?;
    NumberField::new(parse_poly(poly, 'x')?)
}

fn parse_number_order(v: &Value) -> Result<OrderBasis> {
    let field = parse_field(v.get("field").unwrap_or(v))?;
    match v.get("basis") {
        None => default_order(&field),
        Some(b) => {
            let basis = parse_basis(&field, b)?;
            OrderBasis::from_basis(&field, &basis)?.with_certified_maximality()
        }
    }
}

fn parse_basis(field: &NumberField, v: &Value) -> Result<Vec<crate::number_field::NfElement>> {
    let cols = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("basis must be a list of coordinate lists".into()))?;
    cols.iter()
        .map(|c| {
            let strings = string_list(c)?;
            field.element_from_strings(&strings)
        })
        .collect()
}

fn string_list(v: &Value) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| Error::InvalidInput(format!("expected a list, got {v}")))?
        .iter()
        .map(|x| match x {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) => Ok(n.to_string()),
            _ => Err(Error::InvalidInput(format!("expected a string or number, got {x}"))),
        })
        .collect()
}

fn parse_function_field(v: &Value) -> Result<FunctionFieldQuadratic> {
    let q = v
        .get("q")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::InvalidInput("function field needs an integer \"q\"".into()))?;
    let f = v
        .get("f")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::InvalidInput("function field needs a string \"f\"".into()))?;
    FunctionFieldQuadratic::parse(q, f)
}

/// Splits "(a, b, c)" into its top-level items.
fn split_generators(text: &str) -> Vec<String> {
    let t = text.trim();
    let t = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
    t.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn number_generators(order: &OrderBasis, text: &str) -> Result<Vec<Vec<Integer>>> {
    if looks_like_json(text) {
        let v = parse_json(text)?;
        let list = v
            .as_array()
            .ok_or_else(|| Error::InvalidInput("generators must be a list".into()))?;
        return list
            .iter()
            .map(|g| {
                string_list(g)?
                    .iter()
                    .map(|s| parse_integer(s))
                    .collect::<Result<Vec<_>>>()
                    .and_then(|c| check_len(c, order.degree()))
            })
            .collect();
    }
    split_generators(text)
        .iter()
        .map(|g| order.coords(&order.field().parse_element(g)?))
        .collect()
}

fn function_generators(ff: &FunctionFieldQuadratic, text: &str) -> Result<Vec<Vec<crate::domain::FpPoly>>> {
    let v = parse_json(text)?;
    let list = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("generators must be a list of [u, v] pairs meaning u + v*y".into()))?;
    list.iter()
        .map(|g| {
            string_list(g)?
                .iter()
                .map(|s| ff.ring().parse(s))
                .collect::<Result<Vec<_>>>()
                .and_then(|c| check_len(c, 2))
        })
        .collect()
}

fn check_len<T>(v: Vec<T>, n: usize) -> Result<Vec<T>> {
    if v.len() == n {
        Ok(v)
    } else {
        Err(Error::InvalidInput(format!(
            "expected {n} coordinates, got {}",
            v.len()
        )))
    }
}

fn number_order_json(o: &OrderBasis) -> Value {
    let basis: Vec<Vec<String>> = o.basis().iter().map(|b| b.to_strings()).collect();
    json!({
        "field": { "defining_poly": o.field().defining_poly().to_string() },
        "basis": basis,
    })
}

fn function_order_json(ff: &FunctionFieldQuadratic) -> Value {
    json!({ "q": ff.q(), "f": ff.ring().format(ff.f()) })
}

fn ideal_json<D: EuclideanDomain>(ideal: &IntegralIdeal<D>, order_json: &Value) -> Value {
    let d = ideal.order().domain();
    json!({
        "order": order_json,
        "hnf": ideal.format_hnf(),
        "norm": ideal.norm().map(|n| d.format(&n)).unwrap_or_else(|_| "0".into()),
    })
}

fn prime_json<D: EuclideanDomain>(p: &PrimeIdealData<D>, exponent: u32) -> Value {
    let d = p.ideal.order().domain();
    json!({
        "p": d.format(&p.p),
        "f": p.residue_degree,
        "e": p.ramification,
        "hnf": p.ideal.format_hnf(),
        "exponent": exponent,
    })
}

fn maximality_json(m: &Maximality) -> Value {
    match m {
        Maximality::Maximal(e) => json!({ "maximal": true, "evidence": e }),
        Maximality::NotMaximal(e) => json!({ "maximal": false, "evidence": e }),
        Maximality::Unknown => json!({ "maximal": null, "evidence": "certificate inapplicable" }),
    }
}

fn certificate_text(c: &IrreducibilityCertificate) -> String {
    match c {
        IrreducibilityCertificate::Linear => "degree one".into(),
        IrreducibilityCertificate::NoRationalRoot => "degree at most three without rational roots".into(),
        IrreducibilityCertificate::ModPrime(p) => format!("irreducible modulo {p}"),
        IrreducibilityCertificate::FactorSearch => "exhaustive integer factor search".into(),
    }
}

fn order_summary(o: &OrderBasis) -> Value {
    let integrality: Vec<Value> = o
        .basis()
        .iter()
        .map(|b| {
            json!({
                "element": b.to_strings(),
                "minpoly": o.field().minpoly(b).to_string(),
                "integral": o.field().is_integral(b),
            })
        })
        .collect();
    let mut m = Map::new();
    m.insert(
        "basis".into(),
        json!(o.basis().iter().map(|b| b.to_strings()).collect::<Vec<_>>()),
    );
    m.insert("discriminant".into(), json!(o.discriminant().to_string()));
    m.insert("index".into(), json!(o.index().to_string()));
    m.insert("maximality".into(), maximality_json(o.order().maximality()));
    m.insert("integrality".into(), json!(integrality));
    Value::Object(m)
}

fn field_info(input: &str, basis: Option<String>) -> Result<Value> {
    let (field, given) = if looks_like_json(input) {
        let v = parse_json(input)?;
        let field = parse_field(v.get("field").unwrap_or(&v))?;
        let given = v.get("basis").map(|b| parse_basis(&field, b)).transpose()?;
        (field, given)
    } else {
        (NumberField::new(parse_poly(input, 'x')?)?, None)
    };
    let given = match basis {
        Some(b) => Some(parse_basis(&field, &parse_json(&b)?)?),
        None => given,
    };
    let gen = field.gen();
    let mut out = Map::new();
    out.insert("defining_poly".into(), json!(field.defining_poly().to_string()));
    out.insert("degree".into(), json!(field.degree()));
    out.insert("irreducibility".into(), json!(certificate_text(field.certificate())));
    out.insert(
        "power_basis_discriminant".into(),
        json!(field.poly_discriminant().to_string()),
    );
    out.insert("trace_of_generator".into(), json!(field.trace(&gen).to_string()));
    out.insert("norm_of_generator".into(), json!(field.norm(&gen).to_string()));
    let maximal = match field.degree() {
        1 => Some(default_order(&field)?),
        2 if field.defining_poly().to_integer().is_some() => Some(OrderBasis::quadratic_maximal_of(&field)?),
        _ => None,
    };
    out.insert(
        "maximal_order".into(),
        maximal.as_ref().map_or(Value::Null, order_summary),
    );
    if let Some(basis) = given {
        let o = OrderBasis::from_basis(&field, &basis)?.with_certified_maximality()?;
        out.insert("order".into(), order_summary(&o));
    }
    Ok(Value::Object(out))
}

fn factor_ideal_cmd(order_text: &str, gens_text: &str) -> Result<Value> {
    match parse_order_spec(order_text)? {
        OrderSpec::Number(o) => {
            let gens = number_generators(&o, gens_text)?;
            factorization_json(
                &IntegralIdeal::from_generators(o.order(), &gens),
                &number_order_json(&o),
            )
        }
        OrderSpec::Function(ff) => {
            let order = ff.order()?;
            let gens = function_generators(&ff, gens_text)?;
            factorization_json(
                &IntegralIdeal::from_generators(&order, &gens),
                &function_order_json(&ff),
            )
        }
    }
}

fn factorization_json<D: EuclideanDomain>(ideal: &IntegralIdeal<D>, order_json: &Value) -> Result<Value> {
    let fact = factor_ideal(ideal)?;
    let factors: Vec<Value> = fact.factors.iter().map(|(p, e)| prime_json(p, *e)).collect();
    Ok(json!({
        "ideal": ideal_json(ideal, order_json),
        "factorization": factors,
    }))
}

fn class_number_cmd(spec: &str, exact: bool, options: &ClassGroupOptions, prime_bound: u64) -> Result<Value> {
    match parse_order_spec(spec)? {
        OrderSpec::Number(o) => class_group_json(o.order(), &number_order_json(&o), exact, options, prime_bound),
        OrderSpec::Function(ff) => {
            class_group_json(&ff.order()?, &function_order_json(&ff), exact, options, prime_bound)
        }
    }
}

fn class_group_json<D: NormSearch>(
    order: &Arc<Order<D>>,
    order_json: &Value,
    exact: bool,
    options: &ClassGroupOptions,
    prime_bound: u64,
) -> Result<Value> {
    match class_group_compute(order, options)? {
        ClassGroupResult::Exact(g) => {
            let pid = class_number_is_one_iff_pid_check(order, prime_bound)?;
            let reps: Vec<Value> = g.representatives.iter().map(|r| ideal_json(r, order_json)).collect();
            Ok(json!({
                "order": order_json,
                "class_number": g.class_number(),
                "invariant_factors": g.invariant_factors,
                "representatives": reps,
                "mode": "exact",
                "principal_ideal_domain": pid,
            }))
        }
        ClassGroupResult::BoundOnly(b) => {
            if exact {
                return Err(Error::Unsupported(format!(
                    "exact class group requested but {}; class number is at most {}",
                    b.reason, b.upper_bound
                )));
            }
            let primes: Vec<Value> = b.divisor_primes.iter().map(|(p, e)| prime_json(p, *e)).collect();
            Ok(json!({
                "order": order_json,
                "class_number": null,
                "class_number_upper_bound": b.upper_bound.to_string(),
                "invariant_factors": null,
                "representatives": [],
                "divisor_primes": primes,
                "mode": "bound-only",
                "reason": b.reason,
            }))
        }
    }
}

fn admissible_audit(domain: &str, eps: &[String], b: &[String], order: Option<String>) -> Result<Value> {
    let eps: Vec<Rational> = eps.iter().map(|e| parse_rational(e)).collect::<Result<_>>()?;
    if let Some(e) = eps.iter().find(|e| !e.is_positive()) {
        return Err(Error::InvalidInput(format!("precision must be positive, got {e}")));
    }
    let name: String = domain.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = if name == "Z" {
        let moduli = if b.is_empty() {
            vec!["10".to_string()]
        } else {
            b.to_vec()
        };
        let moduli: Vec<Integer> = moduli.iter().map(|s| parse_integer(s)).collect::<Result<_>>()?;
        audit(&Integers, "Z", &eps, &moduli)?
    } else {
        let q = name
            .strip_prefix('F')
            .and_then(|r| r.strip_suffix("[t]"))
            .map(|s| s.trim_start_matches('_'))
            .and_then(|s| s.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("domain must be Z or F<q>[t], got {domain:?}")))?;
        let ring = PolyRingFp::new(q)?;
        let moduli = if b.is_empty() {
            vec!["t^2+1".to_string()]
        } else {
            b.to_vec()
        };
        let moduli = moduli.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        audit(&ring, &ring.name(), &eps, &moduli)?
    };
    if let Some(spec) = order {
        let approx = match parse_order_spec(&spec)? {
            OrderSpec::Number(o) => approx_json(&**o.order())?,
            OrderSpec::Function(ff) => approx_json(&*ff.order()?)?,
        };
        out.insert("finset_approx".into(), approx);
    }
    Ok(Value::Object(out))
}

const MAX_AUDIT_RESIDUES: usize = 100_000;

fn audit<D: Admissible>(d: &D, name: &str, eps: &[Rational], moduli: &[D::Elem]) -> Result<Map<String, Value>> {
    let mut entries = Vec::new();
    for b in moduli {
        if d.is_zero(b) {
            return Err(Error::InvalidInput("modulus must be nonzero".into()));
        }
        if d.abv(b) > Integer::from(MAX_AUDIT_RESIDUES) {
            return Err(Error::InvalidInput(format!(
                "modulus {} has too many residues to audit",
                d.format(b)
            )));
        }
        let values = d.residues(b);
        for e in eps {
            let card = d.card(e)?;
            let assignment = d.partition(e, b, &values)?;
            if !verify_partition(d, e, b, &values, &assignment)? {
                return Err(Error::Internal(format!(
                    "partition contract failed for b = {}",
                    d.format(b)
                )));
            }
            let mut parts: std::collections::BTreeMap<Integer, Vec<String>> = Default::default();
            for (v, p) in values.iter().zip(&assignment) {
                parts.entry(p.clone()).or_default().push(d.format(v));
            }
            entries.push(json!({
                "eps": e.to_string(),
                "card": card.to_string(),
                "b": d.format(b),
                "parts": parts.into_values().collect::<Vec<_>>(),
                "verified": true,
            }));
        }
    }
    let mut out = Map::new();
    out.insert("domain".into(), json!(name));
    out.insert("ultrametric".into(), json!(d.is_ultrametric()));
    out.insert("entries".into(), json!(entries));
    Ok(out)
}

const MAX_PRINTED_SET: usize = 200;

fn approx_json<D: Admissible>(order: &Order<D>) -> Result<Value> {
    let d = order.domain();
    let approx = finset_approx(order)?;
    let small = approx.set.len() <= MAX_PRINTED_SET;
    Ok(json!({
        "order": order.label(),
        "row_bound_product": approx.bound.to_string(),
        "epsilon": approx.epsilon.to_string(),
        "card": approx.card.to_string(),
        "set_size": approx.set.len(),
        "set": if small { json!(approx.set.iter().map(|x| d.format(x)).collect::<Vec<_>>()) } else { Value::Null },
        "m": if small { json!(d.format(&approx.product(d))) } else { Value::Null },
        "m_prime_support": approx.prime_support(d)?.iter().map(|p| d.format(p)).collect::<Vec<_>>(),
    }))
}

fn function_field_cmd(ff: &FunctionFieldQuadratic) -> Result<Value> {
    let order = ff.order()?;
    let order_json = function_order_json(ff);
    let group = class_group_compute(&order, &ClassGroupOptions::default())?.exact()?;
    let reps: Vec<Value> = group
        .representatives
        .iter()
        .map(|r| ideal_json(r, &order_json))
        .collect();
    Ok(json!({
        "q": ff.q(),
        "f": ff.ring().format(ff.f()),
        "basis": ["1", "y"],
        "discriminant": ff.ring().format(&order.discriminant()),
        "maximality": maximality_json(order.maximality()),
        "class_number": group.class_number(),
        "invariant_factors": group.invariant_factors,
        "representatives": reps,
    }))
}

/// Indented `key: value` rendering of a JSON document.
pub fn render_pretty(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => Some(format!(
            "[{}]",
            a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_into(x, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render_into(x, indent + 2, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}
