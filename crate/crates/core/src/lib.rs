//! Exact computation of the group-theoretic invariants that classify
//! connected components of affine Deligne-Lusztig varieties and of moduli of
//! p-adic shtukas: Kottwitz sets B(G, mu), Galois (co)invariants of pi1,
//! torsor descriptors for component sets, z-extensions, norm maps, and
//! admissible sets in extended affine Weyl groups.
//!
//! All arithmetic is arbitrary-precision and exact; no floating point is used
//! anywhere.

pub mod abelian;
pub mod adlv;
pub mod affine_weyl;
pub mod error;
pub mod intmat;
pub mod kottwitz;
pub mod pi1;
pub mod preset;
pub mod rat;
pub mod root_datum;
pub mod shtuka;
pub mod tori;

pub use adlv::{adlv_pi0, cartesian_pi0_check, torsor_matches, TorsorDescription};
pub use affine_weyl::admissible_set;
pub use error::{Error, Result};
pub use kottwitz::{
    basic_element, enumerate_b_g_mu, in_b_g_mu, is_basic, is_hn_irreducible, newton_oracle_gln,
    Group, SigmaConjClass,
};
pub use pi1::{KottwitzTarget, Pi1Presentation};
pub use rat::RatVec;
pub use root_datum::{Cocharacter, FrobeniusAction, RootDatum, ValidationReport};
pub use shtuka::{
    frobenius_translation_class, g_circle_presentation, jb_descriptor, pi0_sht, weil_descriptor,
    ArtinNormalization, Level,
};
pub use tori::{lift_b, lift_mu, norm_map, z_extension, ZExtension};
