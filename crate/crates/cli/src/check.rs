use std::collections::BTreeMap;
use std::fs;

use dnacyclic::code::CodeReport;
use dnacyclic::constraints::{
    check_rc_pair, check_rc_single, check_reversible_pair, check_reversible_single, gc_spectrum,
    is_rc_closed, is_reversible, theta_image,
};
use dnacyclic::deletion::{code_similarity_report, subcode_deletion_distance, SubcodeDistance};
use dnacyclic::{
    Code, CodeSpec, ConstraintError, ConstraintVerdict, DeletionError, Granularity, ImageMap,
    Limits, PolyR, PolyZ4, SimilarityReport,
};
use serde::{Deserialize, Serialize};

use crate::config::check_length;
use crate::{CheckArgs, Failure};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    n: usize,
    g1: String,
    g2: Option<String>,
    g3: Option<String>,
    #[serde(default)]
    strict: bool,
}

fn parse_z4(name: &str, s: &str) -> Result<PolyZ4, Failure> {
    s.parse()
        .map_err(|e| Failure::usage(format!("{name}: {e}")))
}

fn build_spec(
    n: usize,
    g1: &str,
    g2: Option<&str>,
    g3: Option<&str>,
    strict: bool,
) -> Result<CodeSpec, Failure> {
    let g1 = parse_z4("g1", g1)?;
    let g2: PolyR = match g2 {
        Some(s) => s.parse().map_err(|e| Failure::usage(format!("g2: {e}")))?,
        None => PolyR::zero(),
    };
    let spec = match g3 {
        Some(s) => CodeSpec::pair(n, g1, g2, parse_z4("g3", s)?),
        None => CodeSpec::single(n, g1, g2),
    };
    Ok(spec.strict(strict))
}

fn read_spec(args: &CheckArgs) -> Result<CodeSpec, Failure> {
    if let Some(path) = &args.spec {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let f: SpecFile = toml::from_str(&text)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        return build_spec(
            f.n,
            &f.g1,
            f.g2.as_deref(),
            f.g3.as_deref(),
            f.strict || args.strict,
        );
    }
    let (Some(n), Some(g1)) = (args.n, args.g1.as_deref()) else {
        return Err(Failure::usage("give either --spec FILE or --n and --g1"));
    };
    build_spec(n, g1, args.g2.as_deref(), args.g3.as_deref(), args.strict)
}

/// A computed value or the reason it is missing.
#[derive(Serialize)]
#[serde(untagged)]
enum Computed<T> {
    Value(T),
    Missing { error: String },
}

impl<T> Computed<T> {
    fn missing(e: impl ToString) -> Self {
        Computed::Missing {
            error: e.to_string(),
        }
    }
}

#[derive(Serialize)]
struct ConstraintSection {
    brute_force: bool,
    conditions: Computed<ConstraintVerdict>,
}

#[derive(Serialize)]
struct SubcodeSection {
    cardinality: usize,
    equals_one_plus_u_g3: bool,
}

#[derive(Serialize)]
struct GcSection {
    theta: BTreeMap<usize, usize>,
    phi: BTreeMap<usize, usize>,
}

#[derive(Serialize)]
struct DeletionSection {
    similarity: Computed<SimilarityReport>,
    subcode: Computed<SubcodeDistance>,
}

#[derive(Serialize)]
struct WordRow {
    word: String,
    theta: String,
}

#[derive(Serialize)]
struct CheckReport<'a> {
    code: CodeReport<'a>,
    subcode_one_plus_u: SubcodeSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    reversible: Option<ConstraintSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rc: Option<ConstraintSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gc: Option<GcSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    deletion: Option<BTreeMap<String, DeletionSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    words: Option<Vec<WordRow>>,
    verdicts_hold: bool,
}

fn conditions(
    spec: &CodeSpec,
    cap: usize,
    single: fn(&CodeSpec, usize) -> Result<ConstraintVerdict, ConstraintError>,
    pair: fn(&CodeSpec, usize) -> Result<ConstraintVerdict, ConstraintError>,
) -> Result<Computed<ConstraintVerdict>, Failure> {
    let check = if spec.is_single_generator() {
        single
    } else {
        pair
    };
    match check(spec, cap) {
        Ok(v) => Ok(Computed::Value(v)),
        Err(e @ ConstraintError::DegreeOrder { .. }) => Ok(Computed::missing(e)),
        Err(e) => Err(e.into()),
    }
}

fn deletion_section(
    code: &Code,
    g: Granularity,
    pair_cap: usize,
) -> Result<DeletionSection, Failure> {
    let similarity = match code_similarity_report(code, g, pair_cap) {
        Ok(r) => Computed::Value(r),
        Err(e @ DeletionError::TooFewWords(_)) => Computed::missing(e),
        Err(e) => return Err(e.into()),
    };
    let subcode = match subcode_deletion_distance(code, g, pair_cap) {
        Ok(r) => Computed::Value(r),
        Err(e @ DeletionError::TooFewWords(_)) => Computed::missing(e),
        Err(e) => return Err(e.into()),
    };
    Ok(DeletionSection {
        similarity,
        subcode,
    })
}

pub fn run(out: &mut String, args: &CheckArgs, limits: &Limits) -> Result<bool, Failure> {
    let spec = read_spec(args)?;
    check_length(spec.n, limits)?;
    spec.validate().map_err(Failure::usage)?;
    let code = Code::enumerate(&spec, limits.enum_cap)?;

    let all = !(args.reversible || args.rc || args.deletion || args.gc);
    let sub = code.subcode_1pu();
    let generated = Code::enumerate(&spec.one_plus_u_g3_spec(), limits.enum_cap)?;
    let mut report = CheckReport {
        code: code.report(None),
        subcode_one_plus_u: SubcodeSection {
            cardinality: sub.cardinality(),
            equals_one_plus_u_g3: sub.same_words(&generated),
        },
        reversible: None,
        rc: None,
        gc: None,
        deletion: None,
        words: None,
        verdicts_hold: true,
    };
    if all || args.reversible {
        let brute_force = is_reversible(&code);
        report.verdicts_hold &= brute_force;
        report.reversible = Some(ConstraintSection {
            brute_force,
            conditions: conditions(
                &spec,
                limits.enum_cap,
                check_reversible_single,
                check_reversible_pair,
            )?,
        });
    }
    if all || args.rc {
        let brute_force = is_rc_closed(&code);
        report.verdicts_hold &= brute_force;
        report.rc = Some(ConstraintSection {
            brute_force,
            conditions: conditions(&spec, limits.enum_cap, check_rc_single, check_rc_pair)?,
        });
    }
    if all || args.gc {
        report.gc = Some(GcSection {
            theta: gc_spectrum(&code, ImageMap::Theta),
            phi: gc_spectrum(&code, ImageMap::Phi),
        });
    }
    if all || args.deletion {
        let mut sections = BTreeMap::new();
        for &g in &args.granularity {
            sections.insert(g.to_string(), deletion_section(&code, g, limits.pair_cap)?);
        }
        report.deletion = Some(sections);
    }
    if args.emit_words && code.cardinality() <= args.max_words {
        report.words = Some(
            code.words()
                .iter()
                .map(|w| WordRow {
                    word: w.to_string(),
                    theta: theta_image(w).to_string(),
                })
                .collect(),
        );
    }

    if args.json {
        emit!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        print_human(out, &spec, &report);
    }
    Ok(report.verdicts_hold)
}

fn spectrum_line(s: &BTreeMap<usize, usize>) -> String {
    s.iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn constraint_line(out: &mut String, name: &str, s: &ConstraintSection) {
    let conditions = match &s.conditions {
        Computed::Value(v) => {
            let named: Vec<String> = v
                .conditions
                .iter()
                .map(|(k, b)| format!("{k}={b}"))
                .collect();
            format!("conditions {} ({})", v.conditions_hold, named.join(", "))
        }
        Computed::Missing { error } => format!("conditions not evaluated: {error}"),
    };
    emit!(out, "{name:<14}brute force {}; {conditions}", s.brute_force);
}

fn print_human(out: &mut String, spec: &CodeSpec, r: &CheckReport<'_>) {
    emit!(out, "{:<14}{spec}", "spec");
    emit!(out, "{:<14}{}", "cardinality", r.code.cardinality);
    let d = r
        .code
        .min_distance
        .map_or("undefined".to_string(), |d| d.to_string());
    emit!(out, "{:<14}{d}", "min distance");
    let w: Vec<String> = r
        .code
        .weight_enumerator
        .iter()
        .map(|c| c.to_string())
        .collect();
    emit!(out, "{:<14}[{}]", "weights", w.join(","));
    emit!(
        out,
        "{:<14}{} words; equals <(1+u)g3>: {}",
        "(1+u) subcode",
        r.subcode_one_plus_u.cardinality,
        r.subcode_one_plus_u.equals_one_plus_u_g3
    );
    if let Some(s) = &r.reversible {
        constraint_line(out, "reversible", s);
    }
    if let Some(s) = &r.rc {
        constraint_line(out, "rc closed", s);
    }
    if let Some(gc) = &r.gc {
        emit!(out, "{:<14}{}", "gc theta", spectrum_line(&gc.theta));
        emit!(out, "{:<14}{}", "gc phi", spectrum_line(&gc.phi));
    }
    if let Some(sections) = &r.deletion {
        for (g, s) in sections {
            let label = format!("D {g}");
            match &s.similarity {
                Computed::Value(v) => emit!(
                    out,
                    "{label:<14}L={} max S={} D={} via {} / {}",
                    v.effective_length,
                    v.max_similarity,
                    v.deletion_distance,
                    v.pair.0,
                    v.pair.1
                ),
                Computed::Missing { error } => emit!(out, "{label:<14}{error}"),
            }
            match &s.subcode {
                Computed::Value(v) => emit!(
                    out,
                    "{:<14}D={} D(1+u)={} equal={}",
                    "",
                    v.code_d,
                    v.subcode_d,
                    v.equal
                ),
                Computed::Missing { error } => emit!(out, "{:<14}subcode: {error}", ""),
            }
        }
    }
    if let Some(words) = &r.words {
        for w in words {
            emit!(out, "{:<14}{} {}", "", w.theta, w.word);
        }
    }
    emit!(
        out,
        "{:<14}{}",
        "verdicts",
        if r.verdicts_hold { "hold" } else { "fail" }
    );
}
