//! Cyclic DNA codes of odd length over the ring `R = Z4[u]/(u^2 - 1)`.

pub mod catalog;
pub mod code;
pub mod constraints;
pub mod deletion;
pub mod factor;
pub mod poly;
pub mod ring;

pub use catalog::{catalog, spec_space, Catalog, CatalogEntry, CatalogError, G2Family, Limits};
pub use code::{Code, CodeError, CodeSpec, Codeword, DEFAULT_ENUMERATION_CAP};
pub use constraints::{ConstraintError, ConstraintVerdict, Criterion, DnaString, ImageMap};
pub use deletion::{DeletionError, Granularity, SimilarityReport, DEFAULT_PAIR_CAP};
pub use poly::{Coeff, Gf2, Poly, PolyError, PolyGf2, PolyR, PolyZ4};
pub use ring::{DnaPair, Nucleotide, ParseError, RingElement, Z4};
