//! Induced tori, the universal cocharacter, norm maps, and z-extensions:
//! centrally extend a group by an induced torus so that the extension has
//! torsion-free fundamental group, with cocharacter- and class-lifting.
//!
//! The extension is built on cocharacter lattices: X_*(T') is the fiber
//! product of X_*(T) with a permutation module P surjecting equivariantly
//! onto pi1(G); coroots lift through the X_*(T) component, so pi1(G')
//! identifies with P and is free.

use crate::abelian::{congruence_kernel, CanonVec};
use crate::error::{Error, Result};
use crate::intmat::{self, IntMat, IntVec};
use crate::kottwitz::{enumerate_b_g_mu, in_b_g_mu, Group, SigmaConjClass};
use crate::preset;
use crate::rat::RatVec;
use crate::root_datum::{Cocharacter, FrobeniusAction};
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeSet;

/// An induced torus: lattice Z^degree with the cyclic coordinate shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedTorusDatum {
    pub degree: usize,
}

impl InducedTorusDatum {
    /// Realize as a validated group (rank-degree torus, shift Frobenius).
    pub fn group(&self) -> Group {
        let (rd, fr) = preset::res_gm(self.degree);
        Group::new(rd, fr).expect("induced torus datum is valid")
    }
}

/// The degree-s induced torus together with its universal cocharacter: the
/// basis vector at the identity embedding.
pub fn universal_cocharacter(s: usize) -> Result<(InducedTorusDatum, Cocharacter)> {
    if s == 0 {
        return Err(Error::precondition("induced torus degree must be positive"));
    }
    let mut mu = vec![BigInt::zero(); s];
    mu[0] = BigInt::one();
    Ok((InducedTorusDatum { degree: s }, mu))
}

/// The sigma-equivariant lattice map Z^{s_E} -> X_*(T) with e_k -> sigma^k mu:
/// the cocharacter shadow of the norm morphism from the degree-s_E induced
/// torus.
pub fn norm_map(fr: &FrobeniusAction, mu: &Cocharacter) -> Result<IntMat> {
    let rank = fr.matrix.rows;
    if mu.len() != rank {
        return Err(Error::precondition("cocharacter has wrong dimension"));
    }
    let mut cols = Vec::new();
    let mut cur = mu.clone();
    loop {
        cols.push(cur.clone());
        cur = fr.apply(&cur);
        if cur == *mu {
            break;
        }
        if cols.len() > fr.order {
            return Err(Error::validation("frobenius orbit failed to close"));
        }
    }
    let s_e = cols.len();
    let m = IntMat::from_columns(cols);
    // Equivariance: m composed with the shift equals sigma composed with m.
    let shift = preset::shift_frobenius(s_e);
    debug_assert_eq!(
        m.mul(&shift.matrix).columns(),
        fr.matrix.mul(&m).columns(),
        "norm map must be sigma-equivariant"
    );
    Ok(m)
}

/// A central extension G' -> G by an induced torus Z, with pi1(G') free.
#[derive(Debug, Clone)]
pub struct ZExtension {
    pub source: Group,
    pub target: Group,
    /// Induced-torus blocks of the kernel Z.
    pub kernel: Vec<InducedTorusDatum>,
    /// Basis of X_*(Z) inside X_*(T'), block-major; sigma' cycles the basis
    /// vectors within each block.
    pub kernel_basis: Vec<IntVec>,
    /// The lattice surjection X_*(T') -> X_*(T).
    pub quotient_map: IntMat,
}

impl ZExtension {
    pub fn is_identity(&self) -> bool {
        self.kernel.is_empty()
    }

    pub fn project_cochar(&self, v: &[BigInt]) -> IntVec {
        self.quotient_map.mul_vec(v)
    }

    pub fn project_rat(&self, v: &RatVec) -> RatVec {
        v.apply(&self.quotient_map)
    }

    /// Push a coinvariants class of G' down to a coinvariants class of G.
    pub fn project_kappa(&self, kappa: &CanonVec) -> CanonVec {
        let ambient = self.source.pi1.coinvariants.lift(kappa);
        self.target.pi1.coinvariants.project(&self.quotient_map.mul_vec(&ambient))
    }

    /// Frobenius on X_*(Z) in kernel-basis coordinates: the block-diagonal
    /// cyclic shift of each induced block.
    pub fn kernel_frobenius(&self) -> FrobeniusAction {
        let q = self.kernel_basis.len();
        let mut m = IntMat::zero(q, q);
        let mut off = 0;
        for blk in &self.kernel {
            let d = blk.degree;
            for j in 0..d {
                m[(off + (j + 1) % d, off + j)] = BigInt::one();
            }
            off += d;
        }
        FrobeniusAction::new(m).expect("block shifts have finite order")
    }
}

/// Construct a z-extension: the identity extension when pi1(G) is already
/// torsion-free, otherwise the fiber product of X_*(T) with a permutation
/// module surjecting onto pi1(G).
pub fn z_extension(g: &Group) -> Result<ZExtension> {
    if g.pi1.pi1.is_torsion_free() {
        return Ok(ZExtension {
            source: g.clone(),
            target: g.clone(),
            kernel: Vec::new(),
            kernel_basis: Vec::new(),
            quotient_map: IntMat::identity(g.rd.rank),
        });
    }
    let r = g.rd.rank;
    let pi1 = &g.pi1.pi1;
    let k = pi1.generator_count();

    // Sigma-orbits of the canonical generators of pi1(G); the permutation
    // module P has one coordinate per orbit element.
    let mut orbits: Vec<Vec<CanonVec>> = Vec::new();
    let mut seen: BTreeSet<CanonVec> = BTreeSet::new();
    for i in 0..k {
        let mut delta = vec![BigInt::zero(); k];
        delta[i] = BigInt::one();
        let delta = pi1.reduce_canonical(&delta);
        if seen.contains(&delta) {
            continue;
        }
        let mut orb = vec![delta.clone()];
        loop {
            let next = pi1.reduce_canonical(
                &g.pi1.induced_action.mul_vec(orb.last().unwrap()),
            );
            if next == orb[0] {
                break;
            }
            orb.push(next);
        }
        for y in &orb {
            seen.insert(y.clone());
        }
        orbits.push(orb);
    }
    let m: usize = orbits.iter().map(|o| o.len()).sum();

    // phi: P = Z^m -> pi1, slot (o, j) -> orbit element; its ambient-lift
    // matrix, used for both the fiber lattice and the kernel of phi.
    let phi_cols: Vec<IntVec> = orbits
        .iter()
        .flat_map(|orb| orb.iter().map(|y| pi1.lift(y)))
        .collect();

    // Fiber lattice L = {(x, p) : [x] = phi(p)} as the congruence kernel of
    // (x, p) -> x - phi_lift(p) against pi1.
    let mut psi_cols: Vec<IntVec> = Vec::with_capacity(r + m);
    for l in 0..r {
        let mut e = vec![BigInt::zero(); r];
        e[l] = BigInt::one();
        psi_cols.push(e);
    }
    for c in &phi_cols {
        psi_cols.push(intmat::vec_neg(c));
    }
    let basis = congruence_kernel(&IntMat::from_columns(psi_cols), pi1);
    assert_eq!(basis.len(), r + m, "fiber lattice has full rank");
    let b_mat = IntMat::from_columns(basis.clone());

    // Sigma on the ambient Z^{r+m}: block diagonal with the orbit shifts.
    let mut sigma_amb = IntMat::zero(r + m, r + m);
    for i in 0..r {
        for j in 0..r {
            sigma_amb[(i, j)] = g.fr.matrix[(i, j)].clone();
        }
    }
    let mut offset = r;
    for orb in &orbits {
        let t = orb.len();
        for j in 0..t {
            sigma_amb[(offset + (j + 1) % t, offset + j)] = BigInt::one();
        }
        offset += t;
    }
    let sigma_prime_cols: Vec<IntVec> = (0..r + m)
        .map(|j| {
            let w = sigma_amb.mul_vec(&b_mat.column(j));
            intmat::solve(&b_mat, &w).expect("sigma preserves the fiber lattice")
        })
        .collect();
    let sigma_prime = IntMat::from_columns(sigma_prime_cols);

    // Roots pull back through the X-projection; coroots lift as (coroot, 0).
    let pr = {
        let mut p = IntMat::zero(r, r + m);
        for j in 0..r + m {
            for i in 0..r {
                p[(i, j)] = b_mat[(i, j)].clone();
            }
        }
        p
    };
    let roots: Vec<IntVec> = g
        .rd
        .roots
        .iter()
        .map(|a| (0..r + m).map(|j| intmat::dot(a, &pr.column(j))).collect())
        .collect();
    let coroots: Vec<IntVec> = g
        .rd
        .coroots
        .iter()
        .map(|c| {
            let mut amb = c.clone();
            amb.extend(std::iter::repeat_n(BigInt::zero(), m));
            intmat::solve(&b_mat, &amb).expect("coroots lie in the fiber lattice")
        })
        .collect();
    let rd_prime = crate::root_datum::RootDatum {
        rank: r + m,
        roots,
        coroots,
        simple_indices: g.rd.simple_indices.clone(),
    };
    let fr_prime = FrobeniusAction::new(sigma_prime)
        .map_err(|e| Error::validation(format!("extension frobenius: {e}")))?;
    let source = Group::new(rd_prime, fr_prime)?;
    assert!(
        source.pi1.pi1.is_torsion_free(),
        "extension must have torsion-free fundamental group"
    );

    // Kernel of phi, then an induced (orbit-permuted) basis of it.
    let ker_phi = congruence_kernel(&IntMat::from_columns(phi_cols), pi1);
    let q = ker_phi.len();
    let (blocks, block_basis) = induced_basis(&ker_phi, &sigma_amb, r, m)?;
    assert_eq!(block_basis.len(), q);
    let kernel_basis: Vec<IntVec> = block_basis
        .iter()
        .map(|w| {
            let mut amb = vec![BigInt::zero(); r];
            amb.extend(w.iter().cloned());
            intmat::solve(&b_mat, &amb).expect("kernel lies in the fiber lattice")
        })
        .collect();
    let kernel: Vec<InducedTorusDatum> =
        blocks.iter().map(|&t| InducedTorusDatum { degree: t }).collect();

    // The quotient map must be sigma-equivariant and send coroots to coroots.
    debug_assert_eq!(
        g.fr.matrix.mul(&pr).columns(),
        pr.mul(&source.fr.matrix).columns(),
        "quotient map must be sigma-equivariant"
    );
    Ok(ZExtension { source, target: g.clone(), kernel, kernel_basis, quotient_map: pr })
}

/// Find a basis of the kernel lattice (vectors in Z^m, the P-coordinates)
/// permuted in cycles by the P-shift; returns block lengths and the basis
/// block-major.
fn induced_basis(
    ker: &[IntVec],
    sigma_amb: &IntMat,
    r: usize,
    m: usize,
) -> Result<(Vec<usize>, Vec<IntVec>)> {
    let q = ker.len();
    if q == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    // The P-shift in the coordinates of the kernel basis.
    let k_mat = IntMat::from_columns(ker.to_vec());
    let action_cols: Vec<IntVec> = (0..q)
        .map(|j| {
            // sigma_amb restricted to the P block
            let mut img = vec![BigInt::zero(); m];
            for i in 0..m {
                let mut s = BigInt::zero();
                for l in 0..m {
                    s += &sigma_amb[(r + i, r + l)] * &ker[j][l];
                }
                img[i] = s;
            }
            intmat::solve(&k_mat, &img).expect("shift preserves the kernel of phi")
        })
        .collect();
    let action = IntMat::from_columns(action_cols);
    if action.is_identity() {
        // Any basis works; blocks are all singletons.
        let basis = (0..q)
            .map(|j| {
                let mut e = vec![BigInt::zero(); q];
                e[j] = BigInt::one();
                e
            })
            .collect::<Vec<_>>();
        let basis_m: Vec<IntVec> = basis.iter().map(|c| k_mat.mul_vec(c)).collect();
        return Ok((vec![1; q], basis_m));
    }
    // Orbit search: gather cycles of small vectors under the action, then
    // look for a subset of cycles forming a unimodular basis.
    let mut pool: Vec<Vec<IntVec>> = Vec::new();
    let mut seen: BTreeSet<IntVec> = BTreeSet::new();
    let mut candidates: Vec<IntVec> = Vec::new();
    for j in 0..q {
        let mut e = vec![BigInt::zero(); q];
        e[j] = BigInt::one();
        candidates.push(e);
    }
    if q <= 6 {
        let mut box_vecs = vec![vec![BigInt::zero(); q]];
        for j in 0..q {
            let mut next = Vec::new();
            for v in box_vecs {
                for val in [-1i64, 0, 1] {
                    let mut w = v.clone();
                    w[j] = BigInt::from(val);
                    next.push(w);
                }
            }
            box_vecs = next;
        }
        candidates.extend(box_vecs.into_iter().filter(|v| !intmat::vec_is_zero(v)));
    }
    for v in candidates {
        if seen.contains(&v) {
            continue;
        }
        let mut orb = vec![v.clone()];
        loop {
            let next = action.mul_vec(orb.last().unwrap());
            if next == orb[0] {
                break;
            }
            if orb.len() > action.rows * 8 {
                break;
            }
            orb.push(next);
        }
        if action.mul_vec(orb.last().unwrap()) != orb[0] {
            continue;
        }
        for w in &orb {
            seen.insert(w.clone());
        }
        pool.push(orb);
    }
    // Backtracking over cycles.
    fn search(
        pool: &[Vec<IntVec>],
        start: usize,
        chosen: &mut Vec<usize>,
        have: usize,
        q: usize,
    ) -> Option<Vec<usize>> {
        if have == q {
            let cols: Vec<IntVec> = chosen
                .iter()
                .flat_map(|&i| pool[i].iter().cloned())
                .collect();
            let snf = intmat::smith_normal_form(&IntMat::from_columns(cols));
            let unimodular = (0..q).all(|i| {
                let d = snf.diag[i].abs();
                d == BigInt::one()
            });
            return if unimodular { Some(chosen.clone()) } else { None };
        }
        for i in start..pool.len() {
            if have + pool[i].len() > q {
                continue;
            }
            chosen.push(i);
            if let Some(found) = search(pool, i + 1, chosen, have + pool[i].len(), q) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
    let mut chosen = Vec::new();
    match search(&pool, 0, &mut chosen, 0, q) {
        Some(sel) => {
            let blocks: Vec<usize> = sel.iter().map(|&i| pool[i].len()).collect();
            let basis_m: Vec<IntVec> = sel
                .iter()
                .flat_map(|&i| pool[i].iter().map(|c| k_mat.mul_vec(c)))
                .collect();
            Ok((blocks, basis_m))
        }
        None => Err(Error::precondition(
            "no induced basis of the extension kernel found within search bounds",
        )),
    }
}

/// Lift a dominant cocharacter through the extension, preserving the reflex
/// degree: particular preimage plus kernel-lattice shells, first hit wins.
pub fn lift_mu(z: &ZExtension, mu: &Cocharacter) -> Result<Cocharacter> {
    if !z.target.rd.is_dominant_int(mu) {
        return Err(Error::precondition(format!(
            "cocharacter {} is not dominant",
            RatVec::from_int(mu)
        )));
    }
    let s_e = z.target.rd.reflex_degree(&z.target.fr, mu);
    let part = intmat::solve(&z.quotient_map, mu)
        .expect("quotient map is surjective on cocharacters");
    let q = z.kernel_basis.len();
    // All preimages are dominant (roots pull back), and their heights agree;
    // order by kernel-coefficient shells, lexicographic within a shell.
    let cap = 16i64;
    for radius in 0..=cap {
        let mut coeffs = vec![-radius; q];
        loop {
            if q == 0 && radius > 0 {
                break;
            }
            let on_shell =
                q == 0 || coeffs.iter().any(|c| c.abs() == radius);
            if on_shell {
                let mut cand = part.clone();
                for (c, kv) in coeffs.iter().zip(z.kernel_basis.iter()) {
                    for (slot, x) in cand.iter_mut().zip(kv.iter()) {
                        *slot += BigInt::from(*c) * x;
                    }
                }
                debug_assert!(z.source.rd.is_dominant_int(&cand));
                if z.source.rd.reflex_degree(&z.source.fr, &cand) == s_e {
                    return Ok(cand);
                }
            }
            // Advance odometer within [-radius, radius]^q.
            let mut carry = true;
            for slot in coeffs.iter_mut() {
                if !carry {
                    break;
                }
                *slot += 1;
                if *slot > radius {
                    *slot = -radius;
                } else {
                    carry = false;
                }
            }
            if carry {
                break;
            }
        }
        if q == 0 {
            break;
        }
    }
    Err(Error::precondition(
        "no reflex-degree-preserving lift found within the search bound",
    ))
}

/// Lift a class of B(G, mu) to the unique class of B(G', mu') with Newton
/// point projecting back to it.
pub fn lift_b(
    z: &ZExtension,
    c: &SigmaConjClass,
    mu_prime: &Cocharacter,
) -> Result<SigmaConjClass> {
    let mu = z.project_cochar(mu_prime);
    if !in_b_g_mu(&z.target, c, &mu)? {
        return Err(Error::precondition(
            "class does not lie in B(G, mu) for the projected cocharacter",
        ));
    }
    let classes = enumerate_b_g_mu(&z.source, mu_prime)?;
    let mut hits: Vec<SigmaConjClass> = classes
        .into_iter()
        .filter(|cp| z.project_rat(&cp.newton) == c.newton)
        .collect();
    if hits.len() != 1 {
        return Err(Error::precondition(format!(
            "expected a unique lift, found {}",
            hits.len()
        )));
    }
    let lifted = hits.pop().unwrap();
    debug_assert_eq!(
        z.project_kappa(&lifted.kappa),
        c.kappa,
        "kappa must project back"
    );
    Ok(lifted)
}
