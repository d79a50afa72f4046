//! Deterministic report serialization.
//!
//! Every report is JSON with insertion-ordered keys, a `schema` version
//! field, and floating-point numbers printed at exactly 15 significant
//! digits with a lowercase exponent. Identical inputs therefore produce
//! byte-identical reports on every platform, which is what lets the test
//! suite compare runs directly.

use crate::error::Error;
use crate::quantum::{BrillouinZone, ConjugatePair, HydrogenicTransition, EV};
use crate::sampling::{AliasReport, SamplingScenario};
use crate::widths::{CorpusAudit, UncertaintyReport, WidthReport};

/// Schema tag stamped into every report.
pub const SCHEMA: &str = "conjugate-bench/1";

/// JSON value tree with insertion-ordered object keys.
#[derive(Debug, Clone)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Num(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
}

fn fmt_f64(v: f64) -> String {
    if !v.is_finite() {
        return "null".into();
    }
    // normalize the sign of zero so equal values print identically
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.14e}")
}

fn escape(s: &str, out: &mut String) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
}

impl Json {
    fn write(&self, indent: usize, out: &mut String) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => out.push_str(&i.to_string()),
            Json::Num(v) => out.push_str(&fmt_f64(*v)),
            Json::Str(s) => escape(s, out),
            Json::Arr(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    out.push_str(&"  ".repeat(indent + 1));
                    item.write(indent + 1, out);
                }
                out.push('\n');
                out.push_str(&"  ".repeat(indent));
                out.push(']');
            }
            Json::Obj(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    out.push_str(&"  ".repeat(indent + 1));
                    escape(key, out);
                    out.push_str(": ");
                    value.write(indent + 1, out);
                }
                out.push('\n');
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
        }
    }

    /// Renders the tree with a trailing newline.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(0, &mut out);
        out.push('\n');
        out
    }
}

fn with_schema(mut fields: Vec<(&'static str, Json)>) -> Json {
    let mut all = vec![("schema", Json::Str(SCHEMA.into()))];
    all.append(&mut fields);
    Json::Obj(all)
}

fn width_fields(r: &WidthReport) -> Json {
    Json::Obj(vec![
        ("mean_ordinate", Json::Num(r.mean_ordinate)),
        ("effective_width", Json::Num(r.effective_width)),
        ("energy", Json::Num(r.energy)),
        ("width_reliable", Json::Bool(r.width_reliable)),
    ])
}

/// Width statistics of a single signal.
pub fn width_report(label: &str, r: &WidthReport) -> String {
    with_schema(vec![
        ("signal", Json::Str(label.into())),
        ("mean_ordinate", Json::Num(r.mean_ordinate)),
        ("effective_width", Json::Num(r.effective_width)),
        ("energy", Json::Num(r.energy)),
        ("width_reliable", Json::Bool(r.width_reliable)),
    ])
    .render()
}

/// Dimensionless uncertainty-product audit.
pub fn uncertainty_report(label: &str, r: &UncertaintyReport) -> String {
    with_schema(vec![
        ("signal", Json::Str(label.into())),
        ("convention", Json::Str(r.convention.as_str().into())),
        ("product", Json::Num(r.product)),
        ("bound_constant", Json::Num(r.bound_constant)),
        ("satisfied", Json::Bool(r.satisfied)),
        ("width_reliable", Json::Bool(r.width_reliable)),
        ("signal_widths", width_fields(&r.signal_report)),
        ("transform_widths", width_fields(&r.transform_report)),
    ])
    .render()
}

/// Corpus-wide audit with per-family outcomes.
pub fn corpus_report(audit: &CorpusAudit) -> String {
    let entries = audit
        .entries
        .iter()
        .map(|e| {
            let mut fields = vec![("family", Json::Str(e.family.to_string()))];
            match &e.outcome {
                Ok(r) => {
                    fields.push(("product", Json::Num(r.product)));
                    fields.push(("satisfied", Json::Bool(r.satisfied)));
                    fields.push(("width_reliable", Json::Bool(r.width_reliable)));
                    fields.push(("signal_widths", width_fields(&r.signal_report)));
                    fields.push(("transform_widths", width_fields(&r.transform_report)));
                }
                Err(err) => fields.push(("error", Json::Str(err.to_string()))),
            }
            Json::Obj(fields)
        })
        .collect();
    let minimum = match &audit.minimum {
        Some((family, product)) => Json::Obj(vec![
            ("family", Json::Str(family.to_string())),
            ("product", Json::Num(*product)),
        ]),
        None => Json::Null,
    };
    with_schema(vec![
        ("convention", Json::Str(audit.convention.as_str().into())),
        ("bound_constant", Json::Num(audit.bound_constant)),
        ("entries", Json::Arr(entries)),
        ("minimum_reliable", minimum),
    ])
    .render()
}

/// Alias folding of one frequency.
pub fn alias_report(r: &AliasReport) -> String {
    with_schema(vec![
        ("true_frequency", Json::Num(r.true_frequency)),
        ("sampling_rate", Json::Num(r.sampling_rate)),
        ("apparent_frequency", Json::Num(r.apparent_frequency)),
        ("aliased", Json::Bool(r.aliased)),
    ])
    .render()
}

/// Conjugate-domain limits of a sampling scenario.
pub fn scenario_report(s: &SamplingScenario) -> String {
    with_schema(vec![
        ("sample_interval", Json::Num(s.sample_interval)),
        (
            "truncation_limit",
            s.truncation_limit.map_or(Json::Null, Json::Num),
        ),
        ("nyquist_conjugate_limit", Json::Num(s.nyquist_conjugate_limit)),
        (
            "conjugate_sample_interval",
            s.conjugate_sample_interval.map_or(Json::Null, Json::Num),
        ),
    ])
    .render()
}

/// Physical-unit width product with both candidate bounds.
pub fn pair_report(label: &str, p: &ConjugatePair) -> String {
    with_schema(vec![
        ("signal", Json::Str(label.into())),
        ("kind", Json::Str(p.kind.as_str().into())),
        ("width_a", Json::Num(p.width_a)),
        ("width_b", Json::Num(p.width_b)),
        ("product", Json::Num(p.product)),
        ("bound_choice", Json::Str(p.bound_choice.as_str().into())),
        ("bound", Json::Num(p.bound)),
        ("satisfied", Json::Bool(p.satisfied)),
        ("h_over_2", Json::Num(p.h_over_2)),
        ("hbar_over_2", Json::Num(p.hbar_over_2)),
        ("width_reliable", Json::Bool(p.width_reliable)),
    ])
    .render()
}

/// Zone reduction of one wavenumber.
pub fn brillouin_report(zone: &BrillouinZone, k: f64, reduced_k: f64, zone_index: i64) -> String {
    with_schema(vec![
        ("lattice_spacing_a", Json::Num(zone.lattice_spacing_a)),
        ("boundary", Json::Num(zone.boundary)),
        ("k", Json::Num(k)),
        ("reduced_k", Json::Num(reduced_k)),
        ("zone_index", Json::Int(zone_index)),
    ])
    .render()
}

/// Hydrogenic observability record, energies in joules and electron-volts.
pub fn hydrogen_report(t: &HydrogenicTransition) -> String {
    with_schema(vec![
        ("n", Json::Int(t.n as i64)),
        ("m", Json::Int(t.m as i64)),
        ("Z", Json::Int(t.z as i64)),
        ("rate_constant_k", Json::Num(t.rate_constant_k)),
        ("lifetime_tau_n", Json::Num(t.lifetime_tau_n)),
        ("transition_energy_E_mn", Json::Num(t.transition_energy_e_mn)),
        ("transition_energy_eV", Json::Num(t.transition_energy_e_mn / EV)),
        ("min_resolvable_energy", Json::Num(t.min_resolvable_energy)),
        (
            "min_resolvable_energy_eV",
            Json::Num(t.min_resolvable_energy / EV),
        ),
        ("observable", Json::Bool(t.observable)),
        ("margin", Json::Num(t.margin)),
    ])
    .render()
}

/// Structured error record for failed runs.
pub fn error_report(err: &Error) -> String {
    let kind = match err {
        Error::InvalidParameter(_) => "invalid_parameter",
        Error::DegenerateSignal(_) => "degenerate_signal",
        Error::SizeGuard(_) => "size_guard",
        Error::InvalidConfig(_) => "invalid_config",
        Error::EmptyInput(_) => "empty_input",
        Error::Io(_) => "io",
    };
    with_schema(vec![(
        "error",
        Json::Obj(vec![
            ("kind", Json::Str(kind.into())),
            ("message", Json::Str(err.to_string())),
        ]),
    )])
    .render()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{self, PhysicalConstants};
    use crate::sampling;

    #[test]
    fn numbers_print_fifteen_significant_digits() {
        assert_eq!(fmt_f64(0.5), "5.00000000000000e-1");
        assert_eq!(fmt_f64(50.0), "5.00000000000000e1");
        assert_eq!(fmt_f64(-0.25), "-2.50000000000000e-1");
        assert_eq!(fmt_f64(6.62607015e-34), "6.62607015000000e-34");
    }

    #[test]
    fn negative_zero_prints_like_zero() {
        assert_eq!(fmt_f64(-0.0), fmt_f64(0.0));
        assert_eq!(fmt_f64(-0.0), "0.00000000000000e0");
    }

    #[test]
    fn strings_are_escaped() {
        let j = Json::Str("a\"b\\c\nd".into());
        assert_eq!(j.render(), "\"a\\\"b\\\\c\\nd\"\n");
    }

    #[test]
    fn object_keys_keep_insertion_order() {
        let j = Json::Obj(vec![
            ("zeta", Json::Int(1)),
            ("alpha", Json::Int(2)),
            ("mid", Json::Bool(false)),
        ]);
        let text = j.render();
        let z = text.find("zeta").unwrap();
        let a = text.find("alpha").unwrap();
        let m = text.find("mid").unwrap();
        assert!(z < a && a < m);
    }

    #[test]
    fn every_builder_emits_parseable_json_with_schema() {
        let c = PhysicalConstants::codata2018();
        let zone = quantum::BrillouinZone::new(2e-10).unwrap();
        let (r, i) = quantum::brillouin_reduce(8e10, &zone);
        let scenario = sampling::scenario_from_sampling(0.01, Some(5.0)).unwrap();
        let alias = sampling::alias_fold(130.0, 100.0).unwrap();
        let hydrogen = quantum::observability(2, 1, 1, &c).unwrap();

        let reports = [
            alias_report(&alias),
            scenario_report(&scenario),
            brillouin_report(&zone, 8e10, r, i),
            hydrogen_report(&hydrogen),
            error_report(&Error::DegenerateSignal("no energy".into())),
        ];
        for text in reports {
            let v: serde_json::Value = serde_json::from_str(&text).expect("parseable");
            assert_eq!(v["schema"], SCHEMA);
        }
    }

    #[test]
    fn scenario_report_uses_null_for_absent_limits() {
        let s = sampling::scenario_from_sampling(0.25, None).unwrap();
        let text = scenario_report(&s);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(v["truncation_limit"].is_null());
        assert!(v["conjugate_sample_interval"].is_null());
    }

    #[test]
    fn hydrogen_report_carries_both_energy_units() {
        let t = quantum::observability(2, 1, 1, &PhysicalConstants::codata2018()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&hydrogen_report(&t)).unwrap();
        let joules = v["transition_energy_E_mn"].as_f64().unwrap();
        let ev = v["transition_energy_eV"].as_f64().unwrap();
        assert!((joules / ev - EV).abs() < 1e-30);
        assert_eq!(v["Z"], 1);
    }

    #[test]
    fn rendering_is_deterministic() {
        let s = sampling::scenario_from_sampling(0.013, Some(7.3)).unwrap();
        assert_eq!(scenario_report(&s), scenario_report(&s));
    }
}
