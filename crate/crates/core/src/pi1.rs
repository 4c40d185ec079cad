//! The fundamental group pi1(G) = X_*(T) / (coroot lattice) with its induced
//! Frobenius action, Kottwitz classes of cocharacters, and the Galois
//! coinvariants and invariants.
//!
//! Coinvariants are presented as a quotient of the same ambient lattice with
//! the image of (sigma - 1) adjoined to the relations. Invariants are computed
//! as the preimage lattice {x : (sigma - 1) x lies in the zero class} modulo
//! the zero class, which handles free and torsion parts uniformly.

use crate::abelian::{
    congruence_kernel, subgroup_from_ambient_lattice, CanonVec, QuotientPresentation,
    SubgroupPresentation,
};
use crate::error::{Error, Result};
use crate::intmat::{IntMat, IntVec};
use crate::rat::RatVec;
use crate::root_datum::{FrobeniusAction, RootDatum};
use num::{BigInt, One, Zero};

/// Which group a Kottwitz class is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KottwitzTarget {
    /// pi1(G) itself.
    Pi1,
    /// The Galois coinvariants pi1(G)_Gamma.
    Coinvariants,
}

/// pi1(G) and its coinvariants, with the transforms needed to move elements
/// between the cocharacter lattice and canonical coordinates.
#[derive(Debug, Clone)]
pub struct Pi1Presentation {
    pub ambient_rank: usize,
    /// pi1(G) = Z^rank / (coroots).
    pub pi1: QuotientPresentation,
    /// Frobenius on canonical coordinates of pi1.
    pub induced_action: IntMat,
    /// pi1(G)_Gamma = Z^rank / (coroots + (sigma - 1) lattice).
    pub coinvariants: QuotientPresentation,
}

impl Pi1Presentation {
    pub fn new(rd: &RootDatum, fr: &FrobeniusAction) -> Self {
        let relations: Vec<IntVec> = rd.coroots.to_vec();
        let pi1 = QuotientPresentation::new(rd.rank, relations.clone());
        let induced_action = pi1.induced_endo(&fr.matrix);
        let mut coinv_relations = relations;
        for j in 0..rd.rank {
            // column j of (sigma - 1)
            let mut e = vec![BigInt::zero(); rd.rank];
            e[j] = BigInt::one();
            let mut col = fr.apply(&e);
            col[j] -= BigInt::one();
            coinv_relations.push(col);
        }
        let coinvariants = QuotientPresentation::new(rd.rank, coinv_relations);
        Pi1Presentation { ambient_rank: rd.rank, pi1, induced_action, coinvariants }
    }

    /// Kottwitz class of an integral cocharacter.
    pub fn kottwitz_class(&self, lam: &[BigInt], target: KottwitzTarget) -> CanonVec {
        match target {
            KottwitzTarget::Pi1 => self.pi1.project(lam),
            KottwitzTarget::Coinvariants => self.coinvariants.project(lam),
        }
    }

    /// Push a pi1 element down to the coinvariants.
    pub fn to_coinvariants(&self, x: &[BigInt]) -> CanonVec {
        self.coinvariants.project(&self.pi1.lift(x))
    }

    /// The invariants pi1(G)^Gamma as a subgroup of pi1(G).
    pub fn invariants(&self, fr: &FrobeniusAction) -> SubgroupPresentation {
        // K = {x in Z^rank : (sigma - 1) x = 0 in pi1}.
        let n = self.ambient_rank;
        let mut sigma_minus_one = fr.matrix.clone();
        for i in 0..n {
            sigma_minus_one[(i, i)] -= BigInt::one();
        }
        let k_basis = congruence_kernel(&sigma_minus_one, &self.pi1);
        subgroup_from_ambient_lattice(&self.pi1, &k_basis)
    }

    /// Test whether a pi1 element (canonical coordinates) is fixed by sigma.
    pub fn is_invariant(&self, x: &[BigInt]) -> bool {
        let img = self.pi1.reduce_canonical(&self.induced_action.mul_vec(x));
        img == self.pi1.reduce_canonical(x)
    }

    /// Membership of a pi1 element in the subgroup spanned by `sub`'s
    /// generators.
    pub fn in_subgroup(&self, x: &[BigInt], sub: &SubgroupPresentation) -> bool {
        crate::abelian::subgroup_contains(&self.pi1, sub, x)
    }

    /// The class of a rational cocharacter in pi1(G)_Gamma tensor Q equals the
    /// class of `x` (an integral element of the coinvariants)?
    ///
    /// Both are compared in Q^rank modulo the rational span of the coroots and
    /// the image of (sigma - 1).
    pub fn rational_class_matches(
        &self,
        rd: &RootDatum,
        fr: &FrobeniusAction,
        nu: &RatVec,
        kappa: &[BigInt],
    ) -> bool {
        let lift = self.coinvariants.lift(kappa);
        let diff = RatVec::from_int(&lift).sub(nu);
        // columns: coroots and (sigma - 1)
        let mut cols: Vec<IntVec> = rd.coroots.to_vec();
        for j in 0..rd.rank {
            let mut e = vec![BigInt::zero(); rd.rank];
            e[j] = BigInt::one();
            let mut col = fr.apply(&e);
            col[j] -= BigInt::one();
            cols.push(col);
        }
        if cols.is_empty() {
            return diff.is_zero();
        }
        crate::intmat::in_rational_span(&IntMat::from_columns(cols), &diff.components())
    }
}

/// Validate-and-build entry point used by the higher layers.
pub fn pi1(rd: &RootDatum, fr: &FrobeniusAction) -> Result<Pi1Presentation> {
    let rep = rd.validate(fr);
    if !rep.is_valid() {
        return Err(Error::validation(rep.violations.join("; ")));
    }
    Ok(Pi1Presentation::new(rd, fr))
}
