//! Text and JSON renderings of terms, relations, and residuals.
//!
//! Text output is line oriented and stable; JSON documents carry a
//! versioned schema tag and parse back into the structures they came
//! from.

use schur_core::{
    BoxTerm, BoxTermKind, HirotaTerm, Interval, IntervalChain, MinorForm, Monomial,
    PaddedPartition, Partition, Polynomial, RowLabel, Symbol, TermKind,
};
use serde_json::{json, Value};

pub const SCHEMA: &str = "hirota-schur/1";

pub fn shape_list(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&v| json!(v)).collect())
}

pub fn raw_list(pp: &PaddedPartition) -> Value {
    Value::Array(pp.raw_parts().iter().map(|&v| json!(v)).collect())
}

fn raw_text(pp: &PaddedPartition) -> String {
    let parts: Vec<String> = pp.raw_parts().iter().map(u32::to_string).collect();
    format!("s[{}]", parts.join(","))
}

pub fn shift_text(c: i64) -> String {
    if c == 0 {
        "(u)".to_string()
    } else if c > 0 {
        format!("(u+{c})")
    } else {
        format!("(u{c})")
    }
}

fn product_text(t: &HirotaTerm, quantum: bool) -> String {
    if quantum {
        format!(
            "{}^{} * {}^{}",
            raw_text(&t.alpha),
            shift_text(t.shift_left),
            raw_text(&t.beta),
            shift_text(t.shift_right)
        )
    } else {
        format!("s{}*s{}", t.alpha.shape, t.beta.shape)
    }
}

/// One signed line per right-hand product, headed by the squared term.
pub fn identity_text(terms: &[HirotaTerm], quantum: bool) -> String {
    let mut out = format!("{} =\n", product_text(&terms[0], quantum));
    for t in &terms[1..] {
        let sign = if t.sign >= 0 { '+' } else { '-' };
        out.push_str(&format!("{sign} {}\n", product_text(t, quantum)));
    }
    out
}

fn chain_json(c: &IntervalChain) -> Value {
    json!({
        "k": c.k,
        "intervals": c.intervals.iter().map(|iv| json!([iv.i, iv.j])).collect::<Vec<_>>(),
    })
}

pub fn term_json(t: &HirotaTerm) -> Value {
    let (kind, chain) = match &t.kind {
        TermKind::Square => ("square", Value::Null),
        TermKind::Fundamental => ("fundamental", Value::Null),
        TermKind::Chain(c) => ("chain", chain_json(c)),
    };
    json!({
        "kind": kind,
        "chain": chain,
        "alpha": raw_list(&t.alpha),
        "beta": raw_list(&t.beta),
        "sign": t.sign,
        "shift_left": t.shift_left,
        "shift_right": t.shift_right,
    })
}

fn raw_from_json(v: &Value) -> Option<PaddedPartition> {
    let parts: Option<Vec<u32>> = v
        .as_array()?
        .iter()
        .map(|x| x.as_u64().map(|n| n as u32))
        .collect();
    Some(PaddedPartition::from_raw(&parts?))
}

fn chain_from_json(v: &Value) -> Option<IntervalChain> {
    let k = v.get("k")?.as_u64()? as usize;
    let mut intervals = Vec::new();
    for iv in v.get("intervals")?.as_array()? {
        let pair = iv.as_array()?;
        intervals.push(Interval {
            i: pair.first()?.as_u64()? as usize,
            j: pair.get(1)?.as_u64()? as usize,
        });
    }
    Some(IntervalChain { k, intervals })
}

pub fn term_from_json(v: &Value) -> Option<HirotaTerm> {
    let kind = match v.get("kind")?.as_str()? {
        "square" => TermKind::Square,
        "fundamental" => TermKind::Fundamental,
        "chain" => TermKind::Chain(chain_from_json(v.get("chain")?)?),
        _ => return None,
    };
    Some(HirotaTerm {
        kind,
        alpha: raw_from_json(v.get("alpha")?)?,
        beta: raw_from_json(v.get("beta")?)?,
        sign: v.get("sign")?.as_i64()? as i32,
        shift_left: v.get("shift_left")?.as_i64()?,
        shift_right: v.get("shift_right")?.as_i64()?,
    })
}

pub fn terms_from_json(v: &Value) -> Option<Vec<HirotaTerm>> {
    v.as_array()?.iter().map(term_from_json).collect()
}

fn symbol_text(s: Symbol) -> String {
    match s {
        Symbol::H { degree } => format!("h{degree}"),
        Symbol::T { degree, shift } => format!("t{degree}{}", shift_text(shift)),
    }
}

pub fn monomial_text(m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let pieces: Vec<String> = m
        .factors()
        .iter()
        .map(|&(s, e)| {
            if e == 1 {
                symbol_text(s)
            } else {
                format!("{}^{e}", symbol_text(s))
            }
        })
        .collect();
    pieces.join("*")
}

pub fn poly_text(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&monomial_text(m));
        } else {
            out.push_str(&format!("{mag}*{}", monomial_text(m)));
        }
    }
    out
}

/// The surviving monomials of a nonzero LHS - RHS, one per entry.
pub fn residual_json(p: &Polynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| json!({"coeff": c.to_string(), "monomial": monomial_text(m)}))
            .collect(),
    )
}

pub fn residual_text(p: &Polynomial, limit: usize) -> String {
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        if i == limit {
            out.push_str(&format!("  ... and {} more\n", p.term_count() - limit));
            break;
        }
        out.push_str(&format!("  {} {}\n", c, monomial_text(m)));
    }
    out
}

pub fn label_text(l: &RowLabel) -> String {
    match l {
        RowLabel::Left => "L".to_string(),
        RowLabel::Right => "R".to_string(),
        RowLabel::Row(i) => i.to_string(),
        RowLabel::Primed(i) => format!("{i}'"),
    }
}

pub fn rows_text(rows: &[RowLabel]) -> String {
    let pieces: Vec<String> = rows.iter().map(label_text).collect();
    format!("[{}]", pieces.join(" "))
}

pub fn rows_json(rows: &[RowLabel]) -> Value {
    Value::Array(rows.iter().map(|l| json!(label_text(l))).collect())
}

fn minor_form_text(form: &MinorForm, quantum: bool) -> String {
    let pp = form.padded().expect("term minors read as partitions");
    if pp.raw_len() == 0 {
        return "1".to_string();
    }
    if quantum {
        format!("{}^{}", raw_text(&pp), shift_text(form.shift.unwrap()))
    } else {
        format!("s{}", pp.shape)
    }
}

pub fn box_product_text(bt: &BoxTerm, quantum: bool) -> String {
    let sep = if quantum { " * " } else { "*" };
    format!(
        "{}{sep}{}",
        minor_form_text(&bt.left_form, quantum),
        minor_form_text(&bt.right_form, quantum)
    )
}

fn shift_or_null(s: Option<i64>) -> Value {
    match s {
        Some(v) => json!(v),
        None => Value::Null,
    }
}

pub fn box_term_json(bt: &BoxTerm) -> Value {
    let (kind, chain) = match &bt.kind {
        BoxTermKind::Square => ("square", Value::Null),
        BoxTermKind::Fundamental => ("fundamental", Value::Null),
        BoxTermKind::Chain(c) => ("chain", chain_json(c)),
        BoxTermKind::Vanishing => ("vanishing", Value::Null),
    };
    json!({
        "rows_left": rows_json(&bt.left_rows),
        "rows_right": rows_json(&bt.right_rows),
        "sign": bt.identity_sign,
        "schur_form": json!({
            "kind": kind,
            "chain": chain,
            "alpha": bt.left_form.padded().map_or(Value::Null, |pp| raw_list(&pp)),
            "beta": bt.right_form.padded().map_or(Value::Null, |pp| raw_list(&pp)),
            "sign": bt.identity_sign,
            "shift_left": shift_or_null(bt.left_form.shift),
            "shift_right": shift_or_null(bt.right_form.shift),
        }),
    })
}

pub fn counted_shapes_json<'a, I: Iterator<Item = (&'a Partition, i64)>>(table: I) -> Value {
    Value::Array(
        table
            .map(|(shape, mult)| json!({"shape": shape_list(shape), "mult": mult}))
            .collect(),
    )
}
