//! The extended affine Weyl group of a split datum: translations extended by
//! the finite Weyl group, with Iwahori-Matsumoto length, Bruhat order, and
//! the admissible set of a dominant cocharacter.
//!
//! Elements are pairs t^lambda w stored as (lambda, cocharacter matrix of w);
//! the group law is (t^lambda u)(t^mu v) = t^{lambda + u mu} (uv). The affine
//! reflection subgroup is generated by the finite simple reflections plus one
//! affine reflection t^{theta_v} s_theta per Dynkin component; its complement
//! of length-zero elements maps isomorphically to pi1.
//!
//! Only split data are accepted: for twisted Frobenius actions the right
//! combinatorics live on a coinvariant lattice with its own echelonnage root
//! system, which this module does not model.

use crate::abelian::CanonVec;
use crate::error::{Error, Result};
use crate::intmat::{IntMat, IntVec};
use crate::kottwitz::Group;
use crate::pi1::KottwitzTarget;
use crate::rat::RatVec;
use crate::root_datum::Cocharacter;
use num::{BigInt, One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// An element t^lambda w of the extended affine Weyl group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedAffineWeylElement {
    /// The translation part lambda.
    pub translation: Cocharacter,
    /// The finite part w, as its matrix on the cocharacter lattice.
    pub finite_matrix: IntMat,
    /// Class of the element modulo the affine reflection subgroup: the pi1
    /// class of the translation part.
    pub omega_component: CanonVec,
}

impl ExtendedAffineWeylElement {
    /// Total order key: translation, then matrix entries.
    pub fn key(&self) -> Vec<BigInt> {
        let mut k = self.translation.clone();
        for i in 0..self.finite_matrix.rows {
            for j in 0..self.finite_matrix.cols {
                k.push(self.finite_matrix[(i, j)].clone());
            }
        }
        k
    }
}

fn require_split(g: &Group) -> Result<()> {
    if !g.fr.is_split() {
        return Err(Error::precondition(
            "affine Weyl combinatorics are only implemented for split data",
        ));
    }
    Ok(())
}

/// The identity element.
pub fn identity(g: &Group) -> ExtendedAffineWeylElement {
    translation_parts(g, vec![BigInt::zero(); g.rd.rank], IntMat::identity(g.rd.rank))
}

/// The pure translation t^lambda.
pub fn translation_element(g: &Group, lam: &[BigInt]) -> Result<ExtendedAffineWeylElement> {
    require_split(g)?;
    if lam.len() != g.rd.rank {
        return Err(Error::precondition("translation has wrong dimension"));
    }
    Ok(translation_parts(g, lam.to_vec(), IntMat::identity(g.rd.rank)))
}

fn translation_parts(
    g: &Group,
    translation: Cocharacter,
    finite_matrix: IntMat,
) -> ExtendedAffineWeylElement {
    let omega_component = g.kottwitz_class(&translation, KottwitzTarget::Pi1);
    ExtendedAffineWeylElement { translation, finite_matrix, omega_component }
}

/// Build t^lambda w from a candidate matrix for w, validating that the matrix
/// is a genuine finite Weyl element: it must send the half-sum of positive
/// coroots into the orbit with the recovering word reproducing the matrix.
pub fn element(
    g: &Group,
    lam: &[BigInt],
    finite_matrix: IntMat,
) -> Result<ExtendedAffineWeylElement> {
    require_split(g)?;
    if lam.len() != g.rd.rank
        || finite_matrix.rows != g.rd.rank
        || finite_matrix.cols != g.rd.rank
    {
        return Err(Error::precondition("element parts have wrong dimension"));
    }
    let rho_v = half_sum_positive_coroots(g);
    let moved = rho_v.apply(&finite_matrix);
    let (dom, word) = g.rd.dominantize(&moved);
    if dom != rho_v {
        return Err(Error::precondition(
            "matrix does not lie in the finite Weyl group",
        ));
    }
    let mut rebuilt = IntMat::identity(g.rd.rank);
    for &si in &word {
        rebuilt = rebuilt.mul(&g.rd.reflection_matrix(si));
    }
    if rebuilt != finite_matrix {
        return Err(Error::precondition(
            "matrix does not lie in the finite Weyl group",
        ));
    }
    Ok(translation_parts(g, lam.to_vec(), finite_matrix))
}

fn half_sum_positive_coroots(g: &Group) -> RatVec {
    let mut sum = vec![BigInt::zero(); g.rd.rank];
    for i in g.rd.positive_root_indices() {
        for (slot, x) in sum.iter_mut().zip(g.rd.coroots[i].iter()) {
            *slot += x;
        }
    }
    RatVec::new(sum, BigInt::from(2))
}

/// Group law: (t^lambda u)(t^mu v) = t^{lambda + u mu}(uv).
pub fn multiply(
    g: &Group,
    x: &ExtendedAffineWeylElement,
    y: &ExtendedAffineWeylElement,
) -> ExtendedAffineWeylElement {
    let moved = x.finite_matrix.mul_vec(&y.translation);
    let translation: IntVec = x
        .translation
        .iter()
        .zip(moved.iter())
        .map(|(a, b)| a + b)
        .collect();
    translation_parts(g, translation, x.finite_matrix.mul(&y.finite_matrix))
}

/// The simple letters of the affine reflection subgroup: every finite simple
/// reflection, then t^{theta_v} s_theta for the highest root theta of each
/// Dynkin component.
struct AffineSystem {
    letters: Vec<(IntVec, IntMat)>,
    positive_roots: BTreeSet<IntVec>,
    positive_list: Vec<usize>,
}

fn affine_system(g: &Group) -> AffineSystem {
    let r = g.rd.rank;
    let mut letters = Vec::new();
    for si in 0..g.rd.simple_indices.len() {
        letters.push((vec![BigInt::zero(); r], g.rd.reflection_matrix(si)));
    }
    for comp in g.rd.dynkin_components() {
        let (theta, theta_v) = g.rd.highest_root_of_component(&comp);
        let mut m = IntMat::identity(r);
        for j in 0..r {
            for i in 0..r {
                let t = &theta[j] * &theta_v[i];
                m[(i, j)] -= t;
            }
        }
        letters.push((theta_v, m));
    }
    let positive_list = g.rd.positive_root_indices();
    let positive_roots =
        positive_list.iter().map(|&i| g.rd.roots[i].clone()).collect();
    AffineSystem { letters, positive_roots, positive_list }
}

fn right_mul(
    g: &Group,
    x: &ExtendedAffineWeylElement,
    letter: &(IntVec, IntMat),
) -> ExtendedAffineWeylElement {
    let moved = x.finite_matrix.mul_vec(&letter.0);
    let translation: IntVec = x
        .translation
        .iter()
        .zip(moved.iter())
        .map(|(a, b)| a + b)
        .collect();
    translation_parts(g, translation, x.finite_matrix.mul(&letter.1))
}

fn left_mul(
    g: &Group,
    letter: &(IntVec, IntMat),
    x: &ExtendedAffineWeylElement,
) -> ExtendedAffineWeylElement {
    let moved = letter.1.mul_vec(&x.translation);
    let translation: IntVec =
        letter.0.iter().zip(moved.iter()).map(|(a, b)| a + b).collect();
    translation_parts(g, translation, letter.1.mul(&x.finite_matrix))
}

fn length_with(g: &Group, sys: &AffineSystem, x: &ExtendedAffineWeylElement) -> usize {
    // l(t^lambda w) counts affine root hyperplanes separating the base
    // alcove from its translate: |<alpha, lambda>| when w^{-1} alpha stays
    // positive, |<alpha, lambda> - 1| when it turns negative.
    let mt = x.finite_matrix.transpose();
    let mut total = BigInt::zero();
    for &i in &sys.positive_list {
        let alpha = &g.rd.roots[i];
        let pairing: BigInt = alpha
            .iter()
            .zip(x.translation.iter())
            .map(|(a, b)| a * b)
            .sum();
        let pulled = mt.mul_vec(alpha);
        if sys.positive_roots.contains(&pulled) {
            total += pairing.abs();
        } else {
            total += (pairing - BigInt::one()).abs();
        }
    }
    total.to_usize().expect("length fits a machine word")
}

/// Iwahori-Matsumoto length.
pub fn length(g: &Group, x: &ExtendedAffineWeylElement) -> Result<usize> {
    require_split(g)?;
    Ok(length_with(g, &affine_system(g), x))
}

/// A reduced word for the affine-reflection part, by greedy left descent:
/// x = s_{w_1} s_{w_2} ... s_{w_k} omega with omega of length zero. Letters
/// index the affine system: finite simple positions first, then one affine
/// letter per Dynkin component.
pub fn reduced_word(
    g: &Group,
    x: &ExtendedAffineWeylElement,
) -> Result<(Vec<usize>, ExtendedAffineWeylElement)> {
    require_split(g)?;
    let sys = affine_system(g);
    Ok(reduced_word_with(g, &sys, x))
}

fn reduced_word_with(
    g: &Group,
    sys: &AffineSystem,
    x: &ExtendedAffineWeylElement,
) -> (Vec<usize>, ExtendedAffineWeylElement) {
    let mut cur = x.clone();
    let mut len = length_with(g, sys, &cur);
    let mut word = Vec::with_capacity(len);
    while len > 0 {
        let mut descended = false;
        for (idx, letter) in sys.letters.iter().enumerate() {
            let cand = left_mul(g, letter, &cur);
            let cand_len = length_with(g, sys, &cand);
            if cand_len < len {
                word.push(idx);
                cur = cand;
                len = cand_len;
                descended = true;
                break;
            }
        }
        assert!(descended, "positive length forces a left descent");
    }
    (word, cur)
}

/// Bruhat order, elementwise. Elements in different components are
/// incomparable; within a component the order descends through right
/// descents of y, memoized per comparison context.
pub fn bruhat_leq(
    g: &Group,
    x: &ExtendedAffineWeylElement,
    y: &ExtendedAffineWeylElement,
) -> Result<bool> {
    require_split(g)?;
    let sys = affine_system(g);
    let mut ctx = BruhatCtx { g, sys: &sys, memo: HashMap::new() };
    Ok(ctx.leq(x, y))
}

struct BruhatCtx<'a> {
    g: &'a Group,
    sys: &'a AffineSystem,
    memo: HashMap<(Vec<BigInt>, Vec<BigInt>), bool>,
}

impl BruhatCtx<'_> {
    fn leq(&mut self, x: &ExtendedAffineWeylElement, y: &ExtendedAffineWeylElement) -> bool {
        if x.omega_component != y.omega_component {
            return false;
        }
        let lx = length_with(self.g, self.sys, x);
        let ly = length_with(self.g, self.sys, y);
        self.leq_graded(x, lx, y, ly)
    }

    fn leq_graded(
        &mut self,
        x: &ExtendedAffineWeylElement,
        lx: usize,
        y: &ExtendedAffineWeylElement,
        ly: usize,
    ) -> bool {
        if lx > ly {
            return false;
        }
        if ly == 0 {
            // Same component and both length zero: equal.
            return true;
        }
        if lx == 0 && x.finite_matrix == y.finite_matrix && x.translation == y.translation {
            return true;
        }
        let key = (x.key(), y.key());
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        // Find a right descent of y and apply the lifting property.
        let mut result = None;
        for letter in &self.sys.letters {
            let ys = right_mul(self.g, y, letter);
            let lys = length_with(self.g, self.sys, &ys);
            if lys < ly {
                let xs = right_mul(self.g, x, letter);
                let lxs = length_with(self.g, self.sys, &xs);
                let r = if lxs < lx {
                    self.leq_graded(&xs, lxs, &ys, lys)
                } else {
                    self.leq_graded(x, lx, &ys, lys)
                };
                result = Some(r);
                break;
            }
        }
        let r = result.expect("positive length forces a right descent");
        self.memo.insert(key, r);
        r
    }
}

/// The admissible set of a dominant cocharacter: all elements below some
/// translation by a Weyl-orbit point, enumerated as subword closures of those
/// extreme translations, sorted by length then key.
pub fn admissible_set(
    g: &Group,
    mu: &Cocharacter,
) -> Result<Vec<ExtendedAffineWeylElement>> {
    require_split(g)?;
    g.require_dominant(mu)?;
    let sys = affine_system(g);
    let mut found: BTreeMap<Vec<BigInt>, ExtendedAffineWeylElement> = BTreeMap::new();
    for point in g.rd.weyl_orbit(&RatVec::from_int(mu)) {
        let lam = point.as_int().expect("orbit of an integral point is integral");
        let t = translation_parts(g, lam, IntMat::identity(g.rd.rank));
        let (word, omega) = reduced_word_with(g, &sys, &t);
        // Distinct products of subwords of a reduced word are exactly the
        // elements below it; fold the letters left to right.
        let mut below: BTreeMap<Vec<BigInt>, ExtendedAffineWeylElement> = BTreeMap::new();
        let id = identity(g);
        below.insert(id.key(), id);
        for &idx in &word {
            let letter = &sys.letters[idx];
            let extended: Vec<ExtendedAffineWeylElement> = below
                .values()
                .map(|z| right_mul(g, z, letter))
                .collect();
            for z in extended {
                below.entry(z.key()).or_insert(z);
            }
        }
        for z in below.into_values() {
            let zw = multiply(g, &z, &omega);
            found.entry(zw.key()).or_insert(zw);
        }
    }
    let mut out: Vec<ExtendedAffineWeylElement> = found.into_values().collect();
    out.sort_by(|a, b| {
        length_with(g, &sys, a)
            .cmp(&length_with(g, &sys, b))
            .then_with(|| a.key().cmp(&b.key()))
    });
    Ok(out)
}
