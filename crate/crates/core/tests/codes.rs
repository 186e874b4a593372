use std::collections::BTreeSet;

use dnacyclic::catalog::small_coefficients;
use dnacyclic::constraints::{check_reversible_single, is_reversible, theta_image};
use dnacyclic::deletion::{code_similarity_report, DEFAULT_PAIR_CAP};
use dnacyclic::{
    spec_space, Code, CodeSpec, G2Family, Granularity, PolyZ4, DEFAULT_ENUMERATION_CAP,
};

const CAP: usize = DEFAULT_ENUMERATION_CAP;

fn constant_spec(n: usize) -> CodeSpec {
    let g = PolyZ4::from_u8s(&vec![1; n]);
    CodeSpec::single(n, g.clone(), g.to_ring())
}

#[test]
fn every_length_3_code_is_a_cyclic_submodule() {
    for spec in spec_space(3, &G2Family::Divisors).unwrap() {
        let code = Code::enumerate(&spec, CAP).unwrap();
        assert!(code.is_cyclic(), "{spec}");
        assert!(code.cardinality().is_power_of_two(), "{spec}");
        assert!(code.contains(&dnacyclic::Codeword::zero(3)));
    }
}

#[test]
fn subcode_matches_one_plus_u_g3() {
    // Equality holds exactly when g3 (g1 if absent) divides g2.
    let mut mismatched = 0;
    for spec in spec_space(3, &G2Family::Divisors).unwrap() {
        let code = Code::enumerate(&spec, CAP).unwrap();
        let generated = Code::enumerate(&spec.one_plus_u_g3_spec(), CAP).unwrap();
        let equal = code.subcode_1pu().same_words(&generated);
        let divides = spec.effective_g3().to_ring().divides(&spec.g2).unwrap();
        assert_eq!(equal, divides, "{spec}");
        mismatched += usize::from(!equal);
    }
    assert_eq!(mismatched, 18);
}

#[test]
fn brute_force_field_is_the_enumerated_verdict() {
    let family = G2Family::bounded(2, small_coefficients());
    let mut seen = 0;
    for spec in spec_space(3, &family)
        .unwrap()
        .into_iter()
        .filter(|s| s.is_single_generator())
    {
        let Ok(v) = check_reversible_single(&spec, CAP) else {
            continue;
        };
        let code = Code::enumerate(&spec, CAP).unwrap();
        assert_eq!(v.brute_force, is_reversible(&code), "{spec}");
        seen += 1;
    }
    assert!(seen > 50);
}

#[test]
fn constant_word_codes() {
    for n in [3, 5, 9] {
        let code = Code::enumerate(&constant_spec(n), CAP).unwrap();
        assert_eq!(code.cardinality(), 16);
        assert_eq!(code.min_hamming_distance(), Some(n));
        let images: BTreeSet<String> = code
            .words()
            .iter()
            .map(|w| theta_image(w).to_string())
            .collect();
        assert_eq!(images.len(), 16);
        let r = code_similarity_report(&code, Granularity::Symbol, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(r.deletion_distance, n as i64 - 1);
    }
}
