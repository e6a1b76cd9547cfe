//! Build envelopes (rows + text) for each subcommand.

use crate::envelope::Envelope;
use alcove::classify::{
    extended_orbit_meets_alcove, ClassificationRow, G1Row, MinusculeRow, SmallDegreeFamily,
    SteinbergDigits, TableCheck,
};
use alcove::degree::DegreeValue;
use alcove::{PrimeClass, Reduction, RootSystem, Weight};
use serde_json::{json, Value};

pub fn print(envelope: &Envelope, as_json: bool) {
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&envelope.to_json()).expect("envelope serializes")
        );
    } else {
        for line in &envelope.text {
            println!("{line}");
        }
    }
}

fn to_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("row serializes")
}

fn check_lines(check: &TableCheck) -> Vec<String> {
    let mut lines = Vec::new();
    if let Some(note) = &check.note {
        lines.push(format!("note: {note}"));
    }
    if check.pass {
        lines.push(format!(
            "fidelity: PASS ({} golden rows match)",
            check.compared
        ));
    } else {
        lines.push("fidelity: FAIL".to_string());
        for m in &check.missing {
            lines.push(format!("  missing:    {m}"));
        }
        for e in &check.extra {
            lines.push(format!("  unexpected: {e}"));
        }
        for m in &check.mismatched {
            lines.push(format!("  mismatch:   {m}"));
        }
    }
    lines
}

pub fn info(rs: &RootSystem) -> Envelope {
    let minuscule: Vec<Weight> = rs
        .j_set
        .iter()
        .map(|&i| Weight::fundamental(rs.rank(), i))
        .collect();
    let mut env = Envelope::new("info", &rs.ty.to_string());
    env.rows.push(json!({
        "family": rs.ty.family.letter().to_string(),
        "rank": rs.rank(),
        "coxeter_number": rs.coxeter_number,
        "positive_roots": rs.num_positive_roots(),
        "det_cartan": rs.fundamental_group_order,
        "j": rs.j_set,
        "minuscule_weights": to_value(&minuscule),
        "adjoint_dimension": rs.adjoint_dimension(),
    }));
    env.text = vec![
        format!("root system:        {}", rs.ty),
        format!("coxeter number h:   {}", rs.coxeter_number),
        format!("positive roots:     {}", rs.num_positive_roots()),
        format!("|det cartan|:       {}", rs.fundamental_group_order),
        format!(
            "J (minuscule idx):  {}",
            if rs.j_set.is_empty() {
                "{}".to_string()
            } else {
                format!("{:?}", rs.j_set)
            }
        ),
        format!(
            "minuscule weights:  {}",
            if minuscule.is_empty() {
                "none".to_string()
            } else {
                minuscule
                    .iter()
                    .map(|w| format!("[{w}]"))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        ),
        format!("dim g = (h+1)r:     {}", rs.adjoint_dimension()),
    ];
    env
}

pub fn dim(rs: &RootSystem, lambda: &Weight, degree: &DegreeValue) -> Envelope {
    let mut env = Envelope::new("dim", &rs.ty.to_string()).param("weight", to_value(lambda));
    let mut row = serde_json::Map::new();
    row.insert("weight".into(), to_value(lambda));
    row.insert("degree".into(), Value::from(degree.value.to_string()));
    if let Some(trace) = &degree.factor_trace {
        row.insert("factors".into(), to_value(trace));
    }
    env.rows.push(Value::Object(row));
    env.text = vec![
        format!("root system: {}", rs.ty),
        format!("weight:      [{lambda}]"),
        format!("d(lambda):   {}", degree.value),
    ];
    if let Some(trace) = &degree.factor_trace {
        let rendered: Vec<String> = trace.iter().map(|(n, d)| format!("{n}/{d}")).collect();
        env.text
            .push(format!("factors:     {}", rendered.join(" * ")));
    }
    env
}

#[allow(clippy::too_many_arguments)]
pub fn reduce(
    rs: &RootSystem,
    lambda: &Weight,
    level: i64,
    reduction: &Reduction,
    plain: bool,
    extended_orbit: bool,
    report_extended: bool,
    oracle_checked: bool,
) -> alcove::Result<Envelope> {
    let mut env = Envelope::new("reduce", &rs.ty.to_string())
        .param("weight", to_value(lambda))
        .param("level", level);
    let mut row = serde_json::Map::new();
    row.insert("input".into(), to_value(lambda));
    row.insert("reduced".into(), to_value(&reduction.weight));
    row.insert("steps".into(), to_value(&reduction.steps));
    row.insert(
        "witness_translation".into(),
        to_value(&reduction.witness.translation),
    );
    row.insert("in_orbit_of_zero".into(), Value::from(plain));
    row.insert(
        "in_extended_orbit_of_zero".into(),
        Value::from(extended_orbit),
    );
    row.insert("oracle_checked".into(), Value::from(oracle_checked));

    let steps_text: Vec<String> = reduction
        .steps
        .iter()
        .map(|step| match step {
            alcove::affine::ReduceStep::Simple { i } => format!("s{i}"),
            alcove::affine::ReduceStep::Wall { root, k } => {
                format!("s[alpha{}@{}]", root, k * level)
            }
        })
        .collect();
    let mut text = vec![
        format!("root system:  {}", rs.ty),
        format!("level l:      {level}"),
        format!("input:        [{lambda}]"),
        format!("reduced:      [{}]", reduction.weight),
        format!(
            "witness:      {}",
            if steps_text.is_empty() {
                "identity".to_string()
            } else {
                steps_text.join(" ")
            }
        ),
        format!("in W_l . 0:   {plain}"),
        format!("in W^_l . 0:  {extended_orbit}"),
    ];
    if report_extended {
        // Canonical representative modulo the full extended group: the
        // lex-least alcove point in the Omega-orbit of the reduction.
        let mut candidates = Vec::new();
        for omega in rs.omega_elements(level)? {
            let image = omega.dot_apply(rs, &reduction.weight)?;
            let pos = rs.alcove_position(&image, level, false)?.position;
            if pos != alcove::AlcovePosition::Exterior {
                candidates.push(image);
            }
        }
        candidates.sort();
        let canonical = candidates
            .first()
            .cloned()
            .unwrap_or_else(|| reduction.weight.clone());
        row.insert("extended_reduced".into(), to_value(&canonical));
        text.push(format!("mod Omega:    [{canonical}]"));
    }
    if oracle_checked {
        text.push("oracle:       BFS verified".to_string());
    }
    env.rows.push(Value::Object(row));
    env.text = text;
    Ok(env)
}

pub fn steinberg(rs: &RootSystem, lambda: &Weight, digits: &SteinbergDigits) -> Envelope {
    let mut env = Envelope::new("steinberg", &rs.ty.to_string())
        .param("weight", to_value(lambda))
        .param("p", digits.p);
    env.rows.push(json!({
        "digits": to_value(&digits.digits),
    }));
    let rendered: Vec<String> = digits.digits.iter().map(|d| format!("[{d}]")).collect();
    env.text = vec![
        format!("root system: {}", rs.ty),
        format!("weight:      [{lambda}]"),
        format!("p:           {}", digits.p),
        format!(
            "digits:      {}",
            if rendered.is_empty() {
                "(empty)".to_string()
            } else {
                rendered.join(" ")
            }
        ),
    ];
    env
}

pub fn primes(rs: &RootSystem, p: i64, class: PrimeClass, rule: &str) -> Envelope {
    let mut env = Envelope::new("primes", &rs.ty.to_string()).param("p", p);
    env.rows.push(json!({
        "class": to_value(&class),
        "rule": rule,
    }));
    env.text = vec![
        format!("root system: {}", rs.ty),
        format!("p:           {p}"),
        format!("class:       {class}"),
        format!("rule:        {rule}"),
    ];
    env
}

pub fn minuscule_table(rows: &[MinusculeRow], check: &TableCheck, max_rank: usize) -> Envelope {
    let mut env = Envelope::new("tables", "all")
        .param("which", "minuscule")
        .param("max_rank", max_rank)
        .param("pass", check.pass);
    env.rows = rows.iter().map(to_value).collect();
    env.rows.push(to_value(check));
    env.text = vec![format!("{:<8}{:<6}{:<18}degrees", "system", "h", "J")];
    for row in rows {
        let j = format!("{:?}", row.j);
        let degrees = format!("{:?}", row.degrees);
        env.text.push(format!(
            "{:<8}{:<6}{j:<18}{degrees}",
            row.system.to_string(),
            row.h
        ));
    }
    env.text.extend(check_lines(check));
    env
}

pub fn small_table(
    rows: &[ClassificationRow],
    families: &[SmallDegreeFamily],
    check: &TableCheck,
    max_rank: usize,
    max_level: i64,
) -> Envelope {
    let mut env = Envelope::new("tables", "all")
        .param("which", "small")
        .param("max_rank", max_rank)
        .param("max_level", max_level)
        .param("pass", check.pass);
    env.rows = rows.iter().map(to_value).collect();
    env.rows.push(json!({ "families": to_value(&families) }));
    env.rows.push(to_value(check));
    env.text = vec![format!(
        "{:<16}{:<12}{:<11}weight (inferred pattern)",
        "family", "level", "instances"
    )];
    for f in families {
        env.text.push(format!(
            "{:<16}{:<12}{:<11}{}",
            f.label, f.level_constraint, f.instances, f.weight_pattern
        ));
    }
    env.text.push(format!(
        "concrete rows: {} (rank <= {max_rank}, h < l <= {max_level}); every degree is l - 1",
        rows.len()
    ));
    env.text.extend(check_lines(check));
    env
}

pub fn g1_table(rows: &[G1Row], check: &TableCheck, p: i64) -> Envelope {
    let mut env = Envelope::new("tables", "all")
        .param("which", "g1")
        .param("p", p)
        .param("pass", check.pass);
    env.rows = rows.iter().map(to_value).collect();
    env.rows.push(to_value(check));

    // One text line per system, joining its weights (the reference table
    // lists both end weights of the A family on a single line).
    let mut grouped: Vec<(String, Vec<String>, usize, String, Vec<String>)> = Vec::new();
    for row in rows {
        let system = row.system.to_string();
        let lambda = format!("[{}]", row.weight);
        match grouped.last_mut() {
            Some(last) if last.0 == system && last.2 == row.i0 => {
                last.1.push(lambda);
                last.4.push(row.v_label.clone());
            }
            _ => grouped.push((
                system,
                vec![lambda],
                row.i0,
                row.dim.to_string(),
                vec![row.v_label.clone()],
            )),
        }
    }
    let lambda_width = grouped
        .iter()
        .map(|g| g.1.join(", ").len())
        .chain([8])
        .max()
        .unwrap()
        + 2;
    env.text = vec![format!(
        "{:<10}{:<lambda_width$}{:<6}{:<8}V",
        "system", "lambda", "i0", "dim"
    )];
    for (system, lambdas, i0, dim, labels) in &grouped {
        let lambda = lambdas.join(", ");
        env.text.push(format!(
            "{system:<10}{lambda:<lambda_width$}{i0:<6}{dim:<8}{}",
            labels.join(", ")
        ));
    }
    env.text.extend(check_lines(check));
    env
}

pub fn omega_table(
    rs: &RootSystem,
    level: i64,
    check: &TableCheck,
    oracle_checked: bool,
) -> alcove::Result<Envelope> {
    let mut env = Envelope::new("tables", &rs.ty.to_string())
        .param("which", "omega")
        .param("level", level)
        .param("pass", check.pass);
    let reps = extended_orbit_meets_alcove(rs, level)?;
    let omega = rs.omega_elements(level)?;
    for (g, rep) in omega.iter().zip(&reps) {
        env.rows.push(json!({
            "translation": to_value(&g.translation),
            "dot_zero": to_value(rep),
            "identity": g.is_identity(),
        }));
    }
    env.rows.push(to_value(check));
    env.text = vec![
        format!("root system: {}", rs.ty),
        format!("level l:     {level}"),
        format!("|Omega|:     {}", omega.len()),
    ];
    for (g, rep) in omega.iter().zip(&reps) {
        let name = if g.is_identity() {
            "identity".to_string()
        } else {
            format!("t(l*[{}]) w_i w_0", g.translation)
        };
        env.text.push(format!("  {name:<24} . 0 = [{rep}]"));
    }
    if oracle_checked {
        env.text.push("oracle:      BFS verified".to_string());
    }
    env.text.extend(check_lines(check));
    Ok(env)
}
