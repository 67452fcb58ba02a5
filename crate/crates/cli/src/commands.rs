use std::path::Path;

use serde_json::{json, Value};
use wildflower::sat::{self, FullGameBound, VerifyMode};
use wildflower::sweeps::run_family;
use wildflower::{Engine, Error, FamilyRule, FormId, OutcomeClass, TamenessClass, TwinReport};

use crate::output::{dyadic, tri};

/// A finished report plus whether it records a failed verification.
pub struct Report {
    pub body: Value,
    pub failed: bool,
}

impl Report {
    fn ok(body: Value) -> Self {
        Report { body, failed: false }
    }
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult = Result<Report, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Play {
    Normal,
    Misere,
}

pub fn eval(e: &Engine, expr: &str, play: Play) -> CliResult {
    let p = e.parse_expr(expr)?;
    let (name, outcome) = match play {
        Play::Normal => ("normal", e.outcome_normal(&p)),
        Play::Misere => ("misere", e.outcome_misere(&p)),
    };
    Ok(Report::ok(json!({
        "expr": e.format_position(&p),
        "play": name,
        "outcome": outcome.as_str(),
    })))
}

pub fn canonical(e: &Engine, expr: &str) -> CliResult {
    let p = e.parse_expr(expr)?;
    let g = e.canonical(e.sum_form(&p));
    Ok(Report::ok(json!({
        "expr": e.format_position(&p),
        "canonical": e.format_form(g),
        "birthday": e.birthday(g),
        "value": e.as_number(g).map(dyadic),
    })))
}

pub fn genus(e: &Engine, expr: &str) -> CliResult {
    let p = e.parse_expr(expr)?;
    let g = e.sum_form(&p);
    if !e.is_impartial(g) {
        return Err(CliError::Input(format!("{} is not impartial", e.format_position(&p))));
    }
    let genus = e.genus(g)?;
    Ok(Report::ok(json!({
        "expr": e.format_position(&p),
        "genus": genus.to_string(),
        "g_plus": genus.g_plus,
        "g_minus": genus.g_minus,
        "tameness": e.classify_tameness(g, true)?.as_str(),
    })))
}

fn impartial_status(e: &Engine, g: FormId) -> Result<Value, Error> {
    let genus = e.genus(g)?;
    Ok(json!({
        "genus": genus.to_string(),
        "tameness": e.classify_tameness(g, true)?.as_str(),
        "restricted_fickle": e.is_restricted_fickle(g)?,
        "restricted_firm": e.is_restricted_firm(g)?,
    }))
}

fn classify_component(e: &Engine, g: FormId) -> Result<Value, Error> {
    let mut out = json!({ "form": e.format_form(g), "impartial": e.is_impartial(g) });
    if e.is_impartial(g) {
        merge(&mut out, impartial_status(e, g)?);
        return Ok(out);
    }
    let w = e.wildflower(g);
    let base = impartial_status(e, w.base)?;
    let wild_base = e.classify_tameness(w.base, true)? == TamenessClass::Wild;
    out["wildflower"] = json!({
        "base": e.format_form(w.base),
        "top": e.format_form(w.top),
        "color": e.color(&w).as_str(),
        "base_genus": base["genus"],
        "base_tameness": base["tameness"],
        "restricted_fickle": if wild_base { Value::Bool(false) } else { tri(e.is_restricted_fickle_wildflower(&w)?) },
        "restricted_firm": !wild_base && e.is_restricted_firm_wildflower(&w)?,
    });
    out["mutant_flower"] = match e.recognize_mutant(g) {
        Some(m) => json!({
            "xs": m.xs,
            "value": dyadic(m.value),
            "height": m.height,
            "in_closed_set": m.in_closed_set(),
        }),
        None => Value::Null,
    };
    Ok(out)
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

pub fn classify(e: &Engine, expr: &str) -> CliResult {
    let p = e.parse_expr(expr)?;
    let components = p.components().iter().map(|&g| classify_component(e, g)).collect::<Result<Vec<_>, _>>()?;
    Ok(Report::ok(json!({
        "expr": e.format_position(&p),
        "components": components,
        "kernel_member": tri(e.kernel_member_wildflowers(&p)),
    })))
}

fn outcome_pair(pair: (OutcomeClass, OutcomeClass)) -> Value {
    json!({ "game": pair.0.as_str(), "twin": pair.1.as_str() })
}

fn twin_json(e: &Engine, family: FamilyRule, r: &TwinReport) -> Value {
    json!({
        "family": family.as_str(),
        "input": e.format_position(&r.input),
        "kernel_member": tri(r.kernel_member),
        "twin": e.format_position(&r.twin),
        "normal_outcomes": outcome_pair(r.normal_outcomes),
        "misere_outcomes": outcome_pair(r.misere_outcomes),
        "verified": r.verified,
    })
}

pub fn twin(e: &Engine, expr: &str, family: FamilyRule) -> CliResult {
    let p = e.parse_expr(expr)?;
    let r = e.twin_of(&p, family)?;
    Ok(Report { body: twin_json(e, family, &r), failed: !r.verified })
}

pub fn check(e: &Engine, family: FamilyRule, bound: Option<usize>) -> CliResult {
    let bound = bound.unwrap_or_else(|| family.default_bound());
    let r = run_family(e, family, bound)?;
    let failures: Vec<Value> = r.failures.iter().map(|f| twin_json(e, family, f)).collect();
    Ok(Report {
        body: json!({
            "family": family.as_str(),
            "bound": bound,
            "instances": r.instances,
            "failures": failures,
            "flipped_failures": r.flipped_failures,
            "passed": r.passed(),
        }),
        failed: !r.passed(),
    })
}

pub struct ReduceArgs<'a> {
    pub file: &'a Path,
    pub mode: VerifyMode,
    pub allow_even: bool,
    pub bound: FullGameBound,
}

pub fn reduce(e: &Engine, args: &ReduceArgs) -> CliResult {
    let text = std::fs::read_to_string(args.file)
        .map_err(|err| CliError::Input(format!("cannot read {}: {err}", args.file.display())))?;
    let f = sat::parse_dimacs(&text)?;
    let red = e.build_reduction(&f, args.allow_even)?;
    let witness = sat::xor_cover(&f, args.allow_even)?;
    let eq = e.verify_equivalence(&f, args.mode, args.allow_even, args.bound)?;

    let gadgets: Vec<Value> = red
        .gadgets
        .iter()
        .enumerate()
        .map(|(i, g)| {
            json!({
                "variable": i + 1,
                "r": g.r, "s": g.s, "t": g.t,
                "a": g.a, "b": g.b, "c": g.c, "d": g.d,
                "big": g.big,
                "x": e.format_form(g.x),
            })
        })
        .collect();
    let mut failed = !eq.agree;
    let lemmas = match args.mode {
        VerifyMode::FullGame => {
            let big = e.big_nimber_lemma_holds(&red, witness.as_ref());
            let color = e.color_lemma_holds(&red);
            failed |= !(big && color);
            json!({ "big_nimber": big, "color": color })
        }
        VerifyMode::Oracle => Value::Null,
    };
    Ok(Report {
        body: json!({
            "num_vars": red.num_vars,
            "num_clauses": red.num_clauses,
            "gadgets": gadgets,
            "y": e.format_form(red.y),
            "tail": red.tail,
            "satisfiable": eq.satisfiable,
            "xor_cover": eq.xor_cover,
            "witness": witness.as_ref().map(|w| json!({ "choices": w.choices, "assignment": w.assignment })),
            "trace": witness.as_ref().map(|w| json!({ "N_i": sat::trace(red.tail, &w.choices) })),
            "verify": match args.mode { VerifyMode::Oracle => "oracle", VerifyMode::FullGame => "full" },
            "outcome": eq.outcome.map(|o| o.as_str()),
            "left_wins_second": eq.left_wins_second,
            "lemmas": lemmas,
            "agree": eq.agree,
        }),
        failed,
    })
}
