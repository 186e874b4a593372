use dnacyclic::{catalog, G2Family, Limits, RingElement};

use crate::config::check_length;
use crate::Failure;

fn family(max_degree: Option<usize>, coeffs: &str) -> Result<G2Family, Failure> {
    let Some(max_degree) = max_degree else {
        return Ok(G2Family::Divisors);
    };
    let coeffs = coeffs
        .split(',')
        .map(|c| c.trim().parse::<RingElement>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::usage(format!("--g2-coeffs: {e}")))?;
    if coeffs.is_empty() {
        return Err(Failure::usage("--g2-coeffs is empty"));
    }
    Ok(G2Family::bounded(max_degree, coeffs))
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".to_string(), T::to_string)
}

pub fn run(
    out: &mut String,
    n: usize,
    g2_max_degree: Option<usize>,
    g2_coeffs: &str,
    json: bool,
    limits: &Limits,
) -> Result<bool, Failure> {
    check_length(n, limits)?;
    let family = family(g2_max_degree, g2_coeffs)?;
    let cat = catalog(n, &family, limits)?;
    if json {
        emit!(
            out,
            "{}",
            serde_json::to_string_pretty(&cat).expect("serializable")
        );
        return Ok(true);
    }
    emit!(out, "spec\t|C|\td\trev\trc\tgc\tD_sym\tD_nuc");
    for e in &cat.entries {
        let gc = e.gc_spectrum.as_ref().map_or("-".to_string(), |s| {
            s.iter()
                .map(|(k, v)| format!("{k}:{v}"))
                .collect::<Vec<_>>()
                .join(" ")
        });
        let row = format!(
            "{}\t{}\t{}\t{}\t{}\t{gc}\t{}\t{}",
            e.spec,
            opt(&e.cardinality),
            opt(&e.min_distance),
            opt(&e.reversible),
            opt(&e.rc_closed),
            opt(&e.d_symbol),
            opt(&e.d_nucleotide)
        );
        match &e.skipped {
            Some(why) => emit!(out, "{row}\tskipped: {why}"),
            None => emit!(out, "{row}"),
        }
    }
    let best: Vec<String> = cat
        .best_d_by_cardinality
        .iter()
        .map(|(k, d)| format!("{k}:{d}"))
        .collect();
    emit!(out, "best D by cardinality: {}", best.join(" "));
    Ok(true)
}
