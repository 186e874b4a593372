use dnacyclic::factor::{factor_xn_minus_1_z4, factor_xn_plus_1_mod2};
use dnacyclic::Limits;
use serde::Serialize;

use crate::config::check_length;
use crate::Failure;

#[derive(Serialize)]
struct FactorReport {
    n: usize,
    z4: Vec<String>,
    mod2: Vec<String>,
}

pub fn run(
    out: &mut String,
    n: usize,
    json: bool,
    signed: bool,
    limits: &Limits,
) -> Result<bool, Failure> {
    check_length(n, limits)?;
    let z4 = factor_xn_minus_1_z4(n)?;
    let mod2 = factor_xn_plus_1_mod2(n)?;
    let report = FactorReport {
        n,
        z4: z4
            .iter()
            .map(|f| {
                if signed {
                    f.to_signed_string()
                } else {
                    f.to_bracket_string()
                }
            })
            .collect(),
        mod2: mod2.iter().map(|f| f.to_bracket_string()).collect(),
    };
    if json {
        emit!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        emit!(out, "z4: {}", report.z4.join(", "));
        emit!(out, "mod2: {}", report.mod2.join(", "));
    }
    Ok(true)
}
