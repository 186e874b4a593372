use dnacyclic::constraints::theta_image;
use dnacyclic::{ring, Code, CodeSpec, PolyZ4, DEFAULT_ENUMERATION_CAP};

use crate::Failure;

/// Theta images of `<g + (1+u)g>` with `g = 1 + x + ... + x^(n-1)`, in codeword order.
pub fn constant_code_images(n: usize) -> Result<Vec<String>, Failure> {
    let g = PolyZ4::from_u8s(&vec![1; n]);
    let code = Code::enumerate(
        &CodeSpec::single(n, g.clone(), g.to_ring()),
        DEFAULT_ENUMERATION_CAP,
    )?;
    Ok(code
        .words()
        .iter()
        .map(|w| theta_image(w).to_string())
        .collect())
}

fn print_grid(out: &mut String, title: &str, images: &[String]) {
    emit!(out, "{title}");
    for row in images.chunks(4) {
        emit!(out, "{}", row.join(" "));
    }
}

pub fn run(out: &mut String) -> Result<bool, Failure> {
    emit!(out, "element\tgray\tdna");
    for x in ring::all() {
        emit!(out, "{x}\t{}\t{}", x.as_pair_string(), x.theta());
    }
    emit!(out);
    print_grid(
        out,
        "length 6, g1 = g2 = x^2 + x + 1",
        &constant_code_images(3)?,
    );
    emit!(out);
    print_grid(
        out,
        "length 18, g1 = g2 = (x^2 + x + 1)(x^6 + x^3 + 1)",
        &constant_code_images(9)?,
    );
    Ok(true)
}
