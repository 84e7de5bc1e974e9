//! Report emission: structured JSON (stable key order, integers and strings
//! only) and human-readable text, including the Betti grid and the
//! cohomology diagram layout.

use crate::cohomology::CohomologyTable;
use crate::constructions::CertificationReport;
use crate::idealops::SmoothnessVerdict;
use crate::modres::BettiTable;
use crate::ring::parse::poly_to_string;

/// Minimal JSON writer with insertion-ordered objects.
pub enum Json {
    Int(i64),
    Bool(bool),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(String, Json)>),
}

impl Json {
    pub fn render(&self, out: &mut String, indent: usize) {
        match self {
            Json::Int(v) => out.push_str(&v.to_string()),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Str(s) => {
                out.push('"');
                for ch in s.chars() {
                    match ch {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Arr(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push('[');
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    item.render(out, indent);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push_str("{\n");
                let pad = "  ".repeat(indent + 1);
                for (k, (key, val)) in fields.iter().enumerate() {
                    out.push_str(&pad);
                    out.push('"');
                    out.push_str(key);
                    out.push_str("\": ");
                    val.render(out, indent + 1);
                    if k + 1 < fields.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
        }
    }

    pub fn to_string_pretty(&self) -> String {
        let mut s = String::new();
        self.render(&mut s, 0);
        s.push('\n');
        s
    }
}

/// Betti grid in the standard layout: rows are j - i, columns the step.
pub fn betti_to_text(b: &BettiTable) -> String {
    if b.entries.is_empty() {
        return "betti {}\n".to_string();
    }
    let max_step = b.entries.keys().map(|&(i, _)| i).max().unwrap();
    let min_slope = b.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap();
    let max_slope = b.entries.keys().map(|&(i, j)| j - i as i64).max().unwrap();
    let mut out = String::new();
    out.push_str("      ");
    for i in 0..=max_step {
        out.push_str(&format!("{:>5}", i));
    }
    out.push('\n');
    let mut totals = vec![0usize; max_step + 1];
    for (&(i, _), &r) in &b.entries {
        totals[i] += r;
    }
    out.push_str("total:");
    for t in &totals {
        out.push_str(&format!("{:>5}", t));
    }
    out.push('\n');
    for slope in min_slope..=max_slope {
        out.push_str(&format!("{:>5}:", slope));
        for i in 0..=max_step {
            let r = b.get(i, slope + i as i64);
            if r == 0 {
                out.push_str("    .");
            } else {
                out.push_str(&format!("{:>5}", r));
            }
        }
        out.push('\n');
    }
    out
}

/// Machine-readable Betti block: `betti { i j rank; ... }`.
pub fn betti_to_block(b: &BettiTable) -> String {
    let mut s = String::from("betti { ");
    for (&(i, j), &r) in &b.entries {
        s.push_str(&format!("{} {} {}; ", i, j, r));
    }
    s.push('}');
    s
}

/// Cohomology grid in the diagram layout: rows i = 3..0, columns the twist.
pub fn cohomology_to_text(t: &CohomologyTable) -> String {
    let mut out = String::new();
    out.push_str("h^i(I(n))   n = ");
    for n in t.lo..=t.hi {
        out.push_str(&format!("{:>4}", n));
    }
    out.push('\n');
    for i in (0..4u8).rev() {
        out.push_str(&format!("  i = {}        ", i));
        for n in t.lo..=t.hi {
            let v = t.h(i, n);
            if v == 0 {
                out.push_str("   .");
            } else {
                out.push_str(&format!("{:>4}", v));
            }
        }
        out.push('\n');
    }
    out
}

fn smoothness_json(v: &SmoothnessVerdict) -> Json {
    match v {
        SmoothnessVerdict::Smooth {
            empty_at_degree,
            trials,
        } => Json::Obj(vec![
            ("verdict".into(), Json::Str("smooth".into())),
            ("certified".into(), Json::Bool(true)),
            ("empty_at_degree".into(), Json::Int(*empty_at_degree)),
            ("trials".into(), Json::Int(*trials as i64)),
        ]),
        SmoothnessVerdict::Singular { singular_locus_dim } => Json::Obj(vec![
            ("verdict".into(), Json::Str("singular".into())),
            ("certified".into(), Json::Bool(true)),
            ("singular_locus_dim".into(), Json::Int(*singular_locus_dim)),
        ]),
        SmoothnessVerdict::Suspect {
            scanned_to_degree,
            trials,
        } => Json::Obj(vec![
            ("verdict".into(), Json::Str("suspect".into())),
            ("certified".into(), Json::Bool(false)),
            ("scanned_to_degree".into(), Json::Int(*scanned_to_degree)),
            ("trials".into(), Json::Int(*trials as i64)),
        ]),
    }
}

pub fn report_to_json(r: &CertificationReport) -> Json {
    let fp = crate::Fp::new(r.prime).unwrap();
    let betti_rows: Vec<Json> = r
        .betti
        .entries
        .iter()
        .map(|(&(i, j), &rank)| {
            Json::Arr(vec![
                Json::Int(i as i64),
                Json::Int(j),
                Json::Int(rank as i64),
            ])
        })
        .collect();
    let coh_rows: Vec<Json> = r
        .cohomology
        .entries
        .iter()
        .map(|(&(i, n), &v)| Json::Arr(vec![Json::Int(i as i64), Json::Int(n), Json::Int(v)]))
        .collect();
    let rao: Vec<Json> = r
        .rao_hilbert
        .iter()
        .map(|&(d, v)| Json::Arr(vec![Json::Int(d), Json::Int(v as i64)]))
        .collect();
    let checks: Vec<Json> = r
        .checks
        .iter()
        .map(|c| {
            Json::Obj(vec![
                ("name".into(), Json::Str(c.name.clone())),
                ("pass".into(), Json::Bool(c.pass)),
                ("expected".into(), Json::Str(c.expected.clone())),
                ("actual".into(), Json::Str(c.actual.clone())),
            ])
        })
        .collect();
    let six_secant = match &r.six_secant {
        None => Json::Obj(vec![]),
        Some((forms, len)) => Json::Obj(vec![
            (
                "line".into(),
                Json::Arr(
                    forms
                        .iter()
                        .map(|f| Json::Str(poly_to_string(fp, f)))
                        .collect(),
                ),
            ),
            ("intersection_length".into(), Json::Int(*len)),
        ]),
    };
    let residual = match r.residual_invariants {
        None => Json::Arr(vec![]),
        Some((d, p, c)) => Json::Arr(vec![Json::Int(d), Json::Int(p), Json::Int(c)]),
    };
    // wall-clock timings stay out of the artifact: identical
    // (family, prime, seed) must produce bit-identical reports
    Json::Obj(vec![
        ("family".into(), Json::Str(r.family.letter().to_string())),
        ("prime".into(), Json::Int(r.prime as i64)),
        ("seed".into(), Json::Int(r.seed as i64)),
        ("pass".into(), Json::Bool(r.pass)),
        ("degree".into(), Json::Int(r.degree)),
        ("sectional_genus".into(), Json::Int(r.sectional_genus)),
        ("euler_characteristic".into(), Json::Int(r.chi)),
        ("betti".into(), Json::Arr(betti_rows)),
        ("betti_block".into(), Json::Str(betti_to_block(&r.betti))),
        ("cohomology".into(), Json::Arr(coh_rows)),
        ("rao_hilbert_function".into(), Json::Arr(rao)),
        ("rao_generators".into(), Json::Int(r.rao_generators as i64)),
        (
            "rao_support_dim".into(),
            Json::Int(r.rao_support_dim as i64),
        ),
        ("six_secant".into(), six_secant),
        ("smoothness".into(), smoothness_json(&r.smoothness)),
        ("liaison_residual".into(), residual),
        (
            "relink_returns_original".into(),
            Json::Bool(r.relink_returns_original),
        ),
        (
            "speciality".into(),
            Json::Obj(vec![
                ("e".into(), Json::Int(r.speciality.e)),
                (
                    "h0_at_e_plus_4".into(),
                    Json::Int(r.speciality.h0_at_e_plus_4),
                ),
                (
                    "h0_at_e_plus_5".into(),
                    Json::Int(r.speciality.h0_at_e_plus_5),
                ),
                ("minimal".into(), Json::Bool(r.speciality.minimal)),
                (
                    "unique_minimal".into(),
                    Json::Bool(r.speciality.unique_minimal),
                ),
                ("rao_trivial".into(), Json::Bool(r.speciality.acm)),
            ]),
        ),
        ("checks".into(), Json::Arr(checks)),
    ])
}

pub fn report_to_text(r: &CertificationReport) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "family {}  (p = {}, seed = {})  --  {}\n",
        r.family.letter(),
        r.prime,
        r.seed,
        if r.pass { "PASS" } else { "FAIL" }
    ));
    s.push_str(&format!(
        "degree {}  sectional genus {}  chi(O) {}\n\n",
        r.degree, r.sectional_genus, r.chi
    ));
    s.push_str(&betti_to_text(&r.betti));
    s.push('\n');
    s.push_str(&cohomology_to_text(&r.cohomology));
    s.push('\n');
    s.push_str(&format!(
        "rao module: hilbert function {:?}, {} generator(s)\n",
        r.rao_hilbert, r.rao_generators
    ));
    if let Some((forms, len)) = &r.six_secant {
        let fp = crate::Fp::new(r.prime).unwrap();
        let f: Vec<String> = forms.iter().map(|f| poly_to_string(fp, f)).collect();
        s.push_str(&format!(
            "six-secant line: V({}) meets S in length {}\n",
            f.join(", "),
            len
        ));
    }
    s.push_str(&format!("smoothness: {:?}\n", r.smoothness));
    s.push_str(&format!(
        "speciality e = {}, minimal: {}, unique: {}\n",
        r.speciality.e, r.speciality.minimal, r.speciality.unique_minimal
    ));
    if let Some((d, p, c)) = r.residual_invariants {
        s.push_str(&format!(
            "liaison residual: (d, pi, chi) = ({}, {}, {}), relink closure: {}\n",
            d, p, c, r.relink_returns_original
        ));
    }
    s.push('\n');
    for c in &r.checks {
        s.push_str(&format!(
            "  [{}] {}: expected {}, got {}\n",
            if c.pass { "ok" } else { "FAIL" },
            c.name,
            c.expected,
            c.actual
        ));
    }
    s
}
