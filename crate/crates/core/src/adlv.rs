//! Connected components of affine Deligne-Lusztig varieties at hyperspecial
//! level: the component set is a torsor under the sigma-invariants of pi1(G),
//! labeled by a canonical lift of the Kottwitz point, for Hodge-Newton
//! irreducible input.
//!
//! Also the adjoint-quotient lattice functor and the two structural
//! cross-checks it supports: the Cartesian comparison with the adjoint group
//! and the determinant-fiber identification when the derived group is simply
//! connected.

use crate::abelian::{
    congruence_kernel, subgroup_contains, subgroup_from_ambient_lattice, CanonVec,
    QuotientPresentation, SubgroupPresentation,
};
use crate::error::{Error, Result};
use crate::intmat::{self, IntMat, IntVec};
use crate::kottwitz::{in_b_g_mu, Group, SigmaConjClass};
use crate::rat::RatVec;
use crate::root_datum::{Cocharacter, FrobeniusAction, RootDatum};
use num::{BigInt, One, Signed, Zero};

/// The component set of an ADLV as a torsor: structure group, a deterministic
/// coset label in pi1(G), and the component count.
#[derive(Debug, Clone)]
pub struct TorsorDescription {
    /// The sigma-invariants of pi1(G), acting simply transitively.
    pub acting_group: SubgroupPresentation,
    /// Representative in pi1(G) (canonical coordinates) of the Kottwitz
    /// point's fiber; deterministic but not canonical beyond its class.
    pub coset_label: CanonVec,
    /// The label is a pinned choice: any translate by the acting group
    /// labels the same torsor.
    pub canonical_choice: bool,
    /// |pi1(G)^Gamma|, None when infinite.
    pub cardinality: Option<BigInt>,
}

/// Deterministic representative in pi1(G) of a coinvariants class: reduce an
/// arbitrary lift modulo the lattice spanned by (sigma - 1)pi1 and the
/// invariant factors, in canonical coordinates.
pub fn canonical_pi1_lift(g: &Group, kappa: &CanonVec) -> CanonVec {
    let ambient = g.pi1.coinvariants.lift(kappa);
    let x0 = g.pi1.pi1.project(&ambient);
    let k = g.pi1.pi1.generator_count();
    let mut lattice: Vec<IntVec> = Vec::new();
    for i in 0..k {
        let mut e = vec![BigInt::zero(); k];
        e[i] = BigInt::one();
        let img = g.pi1.induced_action.mul_vec(&e);
        lattice.push(intmat::vec_sub(&img, &e));
    }
    for (i, d) in g.pi1.pi1.invariant_factors().iter().enumerate() {
        if !d.is_zero() {
            let mut col = vec![BigInt::zero(); k];
            col[i] = d.clone();
            lattice.push(col);
        }
    }
    let basis = intmat::hnf_basis(k, &lattice);
    intmat::hnf_reduce(&x0, &basis)
}

/// Require membership in B(G, mu) and HN-irreducibility, diagnosing the first
/// failing simple-coroot coefficient.
pub(crate) fn require_hn_irreducible(g: &Group, c: &SigmaConjClass, mu: &Cocharacter) -> Result<()> {
    if !in_b_g_mu(g, c, mu)? {
        return Err(Error::precondition(format!(
            "class with newton point {} does not lie in B(G, mu) for mu = {}",
            c.newton,
            RatVec::from_int(mu)
        )));
    }
    let diff = g.mu_bar(mu).sub(&c.newton);
    let (coeffs, _) = g.rd.coroot_expansion(&diff);
    if let Some(i) = coeffs.iter().position(|x| !x.is_positive()) {
        return Err(Error::precondition(format!(
            "not HN-irreducible: the coefficient of simple coroot {} in the \
             expansion of mu_bar - newton is {}, not positive",
            i, coeffs[i]
        )));
    }
    Ok(())
}

/// pi0 of the ADLV attached to (c, mu) at hyperspecial level: a torsor under
/// pi1(G)^Gamma labeled by a lift of kappa(c).
pub fn adlv_pi0(g: &Group, c: &SigmaConjClass, mu: &Cocharacter) -> Result<TorsorDescription> {
    require_hn_irreducible(g, c, mu)?;
    let acting_group = g.pi1.invariants(&g.fr);
    let coset_label = canonical_pi1_lift(g, &c.kappa);
    let cardinality = acting_group.order();
    Ok(TorsorDescription { acting_group, coset_label, canonical_choice: true, cardinality })
}

/// Same torsor, independently derived: identical invariant factors and
/// cardinality, mutually contained acting subgroups, equal label classes.
pub fn torsor_matches(g: &Group, a: &TorsorDescription, b: &TorsorDescription) -> bool {
    a.acting_group.invariant_factors == b.acting_group.invariant_factors
        && a.cardinality == b.cardinality
        && a.acting_group
            .generators
            .iter()
            .all(|x| g.pi1.in_subgroup(x, &b.acting_group))
        && b.acting_group
            .generators
            .iter()
            .all(|x| g.pi1.in_subgroup(x, &a.acting_group))
        && g.pi1.pi1.eq_elem(&a.coset_label, &b.coset_label)
}

/// The adjoint quotient as a lattice functor: the adjoint datum in the
/// fundamental-coweight basis, plus the induced cocharacter map
/// q: X_*(T) -> X_*(T_ad), pairing-compatibly.
pub fn adjoint_datum(g: &Group) -> Result<(Group, IntMat)> {
    let l = g.rd.semisimple_rank();
    let r = g.rd.rank;
    // q has the simple roots of G as rows.
    let q = IntMat::from_rows(g.rd.simple_roots());
    if l == 0 {
        let rd = RootDatum {
            rank: 0,
            roots: Vec::new(),
            coroots: Vec::new(),
            simple_indices: Vec::new(),
        };
        return Ok((Group::new(rd, FrobeniusAction::identity(0))?, q));
    }
    let simple_coroot_mat = IntMat::from_columns(g.rd.simple_coroots());
    // Roots: simple-expansion coefficient vectors. Coroots: Cartan-matrix
    // images of simple-coroot coefficient vectors.
    let cartan = {
        let mut a = IntMat::zero(l, l);
        let sr = g.rd.simple_roots();
        let sc = g.rd.simple_coroots();
        for i in 0..l {
            for j in 0..l {
                a[(i, j)] = intmat::dot(&sr[i], &sc[j]);
            }
        }
        a
    };
    let mut roots = Vec::with_capacity(g.rd.roots.len());
    let mut coroots = Vec::with_capacity(g.rd.roots.len());
    for i in 0..g.rd.roots.len() {
        let expansion = g
            .rd
            .root_simple_expansion(i)
            .ok_or_else(|| Error::validation("root outside the simple-root span"))?;
        roots.push(expansion);
        let coeffs = intmat::solve(&simple_coroot_mat, &g.rd.coroots[i])
            .ok_or_else(|| Error::validation("coroot outside the simple-coroot lattice"))?;
        coroots.push(cartan.mul_vec(&coeffs));
    }
    let rd_ad = RootDatum {
        rank: l,
        roots,
        coroots,
        simple_indices: g.rd.simple_indices.clone(),
    };
    // sigma_ad: the permutation of simple positions, acting on the
    // fundamental-coweight basis.
    let fr_char = g.fr.char_matrix();
    let simples = g.rd.simple_roots();
    let mut perm_mat = IntMat::zero(l, l);
    for (i, s) in simples.iter().enumerate() {
        let img = fr_char.mul_vec(s);
        let target = simples
            .iter()
            .position(|t| *t == img)
            .ok_or_else(|| Error::validation("frobenius does not permute the simple roots"))?;
        perm_mat[(target, i)] = BigInt::one();
    }
    let fr_ad = FrobeniusAction::new(perm_mat)?;
    // q must be equivariant: q . sigma = sigma_ad . q.
    if g.fr.matrix.rows == r {
        let lhs = q.mul(&g.fr.matrix);
        let rhs = fr_ad.matrix.mul(&q);
        if lhs.columns() != rhs.columns() {
            return Err(Error::validation("adjoint quotient map is not sigma-equivariant"));
        }
    }
    Ok((Group::new(rd_ad, fr_ad)?, q))
}

/// Push a class of G to its image class in the adjoint group.
pub fn adjoint_class(
    g: &Group,
    g_ad: &Group,
    q: &IntMat,
    c: &SigmaConjClass,
) -> Result<SigmaConjClass> {
    let newton = c.newton.apply(q);
    let ambient = g.pi1.coinvariants.lift(&c.kappa);
    let kappa = g_ad.pi1.coinvariants.project(&q.mul_vec(&ambient));
    SigmaConjClass::new(g_ad, newton, kappa)
}

/// The induced map pi1(G) -> pi1(G_ad) on canonical coordinates.
fn pi1_map(g: &Group, g_ad: &Group, q: &IntMat) -> Vec<CanonVec> {
    (0..g.pi1.pi1.generator_count())
        .map(|j| {
            let mut e = vec![BigInt::zero(); g.pi1.pi1.generator_count()];
            e[j] = BigInt::one();
            let amb = g.pi1.pi1.lift(&e);
            g_ad.pi1.pi1.project(&q.mul_vec(&amb))
        })
        .collect()
}

/// Compare the ADLV component description of G with the fiber-product
/// description through the adjoint group. Four structural identities must
/// hold; any failure indicates an implementation bug (the comparison is a
/// theorem).
pub fn cartesian_pi0_check(g: &Group, c: &SigmaConjClass, mu: &Cocharacter) -> Result<bool> {
    let desc = adlv_pi0(g, c, mu)?;
    let (g_ad, q) = adjoint_datum(g)?;
    let c_ad = adjoint_class(g, &g_ad, &q, c)?;
    let mu_ad = q.mul_vec(mu);
    let desc_ad = adlv_pi0(&g_ad, &c_ad, &mu_ad)?;

    // (1) kappa functoriality: the G label maps into the adjoint label's
    // coinvariants class.
    let label_amb = g.pi1.pi1.lift(&desc.coset_label);
    let label_image = g_ad.pi1.coinvariants.project(&q.mul_vec(&label_amb));
    let ad_label_class = g_ad.pi1.to_coinvariants(&desc_ad.coset_label);
    let part1 = label_image == c_ad.kappa && ad_label_class == c_ad.kappa;

    // (2) the kernel of pi1(G)^Gamma -> pi1(G_ad)^Gamma computed on invariant
    // generators equals the sigma-invariants of ker(pi1(G) -> pi1(G_ad)).
    let inv_g = &desc.acting_group;
    let qbar = pi1_map(g, &g_ad, &q);
    let a = inv_g.generators.len();
    let route_a = {
        // Columns: ambient-of-ad images of the invariant generators.
        let cols: Vec<IntVec> = inv_g
            .generators
            .iter()
            .map(|u| q.mul_vec(&g.pi1.pi1.lift(u)))
            .collect();
        let kbasis = if a == 0 {
            Vec::new()
        } else {
            congruence_kernel(&IntMat::from_columns(cols), &g_ad.pi1.pi1)
        };
        let mut rels: Vec<IntVec> = Vec::new();
        for (i, d) in inv_g.invariant_factors.iter().enumerate() {
            if !d.is_zero() {
                let mut col = vec![BigInt::zero(); a];
                col[i] = d.clone();
                rels.push(col);
            }
        }
        let abs = QuotientPresentation::new(a, rels);
        let sub = subgroup_from_ambient_lattice(&abs, &kbasis);
        // Realize generators back inside pi1(G).
        let gens: Vec<CanonVec> = sub
            .generators
            .iter()
            .map(|t| {
                let mut acc = g.pi1.pi1.zero();
                for (coeff, u) in t.iter().zip(inv_g.generators.iter()) {
                    let scaled: IntVec = u.iter().map(|x| coeff * x).collect();
                    acc = g.pi1.pi1.add(&acc, &scaled);
                }
                acc
            })
            .collect();
        SubgroupPresentation { generators: gens, invariant_factors: sub.invariant_factors }
    };
    let route_b = {
        // Ambient vectors whose pi1(G_ad) class vanishes, intersected with
        // those fixed by sigma in pi1(G).
        let k0 = congruence_kernel(&q, &g_ad.pi1.pi1);
        let mut sigma_minus_one = g.fr.matrix.clone();
        for i in 0..g.rd.rank {
            sigma_minus_one[(i, i)] -= BigInt::one();
        }
        let ksigma = congruence_kernel(&sigma_minus_one, &g.pi1.pi1);
        let both = intmat::lattice_intersection(g.rd.rank, &k0, &ksigma);
        subgroup_from_ambient_lattice(&g.pi1.pi1, &both)
    };
    let part2 = route_a.invariant_factors == route_b.invariant_factors
        && route_a
            .generators
            .iter()
            .all(|x| g.pi1.in_subgroup(x, &route_b))
        && route_b
            .generators
            .iter()
            .all(|x| g.pi1.in_subgroup(x, &route_a));

    // (3) the graph group {(u, v) : qbar(u) = v} inside
    // pi1(G)^Gamma x pi1(G_ad)^Gamma has the invariant factors of
    // pi1(G)^Gamma.
    let inv_ad = &desc_ad.acting_group;
    let b = inv_ad.generators.len();
    let part3 = {
        let mut cols: Vec<IntVec> = inv_g
            .generators
            .iter()
            .map(|u| q.mul_vec(&g.pi1.pi1.lift(u)))
            .collect();
        for v in &inv_ad.generators {
            cols.push(intmat::vec_neg(&g_ad.pi1.pi1.lift(v)));
        }
        let kbasis = if a + b == 0 {
            Vec::new()
        } else {
            congruence_kernel(&IntMat::from_columns(cols), &g_ad.pi1.pi1)
        };
        let mut rels: Vec<IntVec> = Vec::new();
        for (i, d) in inv_g.invariant_factors.iter().enumerate() {
            if !d.is_zero() {
                let mut col = vec![BigInt::zero(); a + b];
                col[i] = d.clone();
                rels.push(col);
            }
        }
        for (i, d) in inv_ad.invariant_factors.iter().enumerate() {
            if !d.is_zero() {
                let mut col = vec![BigInt::zero(); a + b];
                col[a + i] = d.clone();
                rels.push(col);
            }
        }
        let prod = QuotientPresentation::new(a + b, rels);
        let graph = subgroup_from_ambient_lattice(&prod, &kbasis);
        graph.invariant_factors == inv_g.invariant_factors
    };

    // (4) the image of every invariant generator is invariant on the adjoint
    // side (equivariance of qbar on the subgroup actually used above).
    let part4 = inv_g.generators.iter().all(|u| {
        let img = {
            let mut acc = g_ad.pi1.pi1.zero();
            for (coeff, col) in u.iter().zip(qbar.iter()) {
                let scaled: IntVec = col.iter().map(|x| coeff * x).collect();
                acc = g_ad.pi1.pi1.add(&acc, &scaled);
            }
            acc
        };
        g_ad.pi1.is_invariant(&img)
    });

    Ok(part1 && part2 && part3 && part4)
}

/// For G with simply connected derived group, the cocenter map identifies
/// pi1(G)^Gamma with X_*(G^ab)^Gamma; verify through two independently built
/// presentations.
pub fn det_fiber_check(g: &Group) -> Result<bool> {
    if !g.pi1.pi1.is_torsion_free() {
        return Err(Error::precondition(
            "derived group is not simply connected: pi1 has torsion",
        ));
    }
    // Route 1: pi1 = X / (coroot lattice), already torsion-free.
    let route1 = &g.pi1.pi1;
    // Route 2: X / saturation(coroot lattice), saturating through the Smith
    // form of the coroot matrix.
    let r = g.rd.rank;
    let saturation: Vec<IntVec> = if g.rd.coroots.is_empty() {
        Vec::new()
    } else {
        let m = IntMat::from_columns(g.rd.coroots.to_vec());
        let snf = intmat::smith_normal_form(&m);
        let rank = (0..snf.diag.len()).filter(|&i| !snf.diag[i].is_zero()).count();
        (0..rank).map(|i| snf.u_inv.column(i)).collect()
    };
    let route2 = QuotientPresentation::new(r, saturation);
    let same_quotient = route1.invariant_factors() == route2.invariant_factors()
        && {
            let z1 = route1.zero_class_lattice();
            let z2 = route2.zero_class_lattice();
            z1 == z2
        };
    if !same_quotient {
        return Ok(false);
    }
    // Invariants functor: compute on both presentations and compare the
    // subgroups through the shared ambient lattice.
    let inv1 = g.pi1.invariants(&g.fr);
    let mut sigma_minus_one = g.fr.matrix.clone();
    for i in 0..r {
        sigma_minus_one[(i, i)] -= BigInt::one();
    }
    let k2 = congruence_kernel(&sigma_minus_one, &route2);
    let inv2 = subgroup_from_ambient_lattice(&route2, &k2);
    if inv1.invariant_factors != inv2.invariant_factors {
        return Ok(false);
    }
    // Cross membership through ambient lifts.
    let cross = inv1.generators.iter().all(|u| {
        let amb = route1.lift(u);
        subgroup_contains(&route2, &inv2, &route2.project(&amb))
    }) && inv2.generators.iter().all(|v| {
        let amb = route2.lift(v);
        subgroup_contains(route1, &inv1, &route1.project(&amb))
    });
    Ok(cross)
}
