use std::fs;
use std::path::Path;

use dnacyclic::factor::MAX_SUPPORTED_LENGTH;
use dnacyclic::Limits;

use crate::Failure;

pub fn load(path: Option<&Path>) -> Result<Limits, Failure> {
    let Some(path) = path else {
        return Ok(Limits::default());
    };
    let text =
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let limits: Limits =
        toml::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    if limits.max_n > MAX_SUPPORTED_LENGTH {
        return Err(Failure::usage(format!(
            "{}: max_n = {} is above the supported {MAX_SUPPORTED_LENGTH}",
            path.display(),
            limits.max_n
        )));
    }
    Ok(limits)
}

pub fn check_length(n: usize, limits: &Limits) -> Result<(), Failure> {
    if n > limits.max_n {
        return Err(Failure::usage(format!(
            "n = {n} exceeds the configured maximum {}",
            limits.max_n
        )));
    }
    Ok(())
}
