//! Finitely generated abelian groups presented as Z^n modulo a relation
//! lattice, in Smith canonical coordinates.
//!
//! A `QuotientPresentation` retains the unimodular change of basis from the
//! Smith normal form, so elements convert losslessly between ambient
//! coordinates (the cocharacter lattice) and canonical coordinates (one per
//! retained invariant factor). Factors equal to 1 are dropped; a factor 0
//! denotes a free generator.

use crate::intmat::{
    hnf_basis, hnf_reduce, kernel_basis, smith_normal_form, solve, vec_is_zero, IntMat, IntVec,
};
use num::{BigInt, One, Signed, Zero};

#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    pub ambient_rank: usize,
    /// Relation generators, as ambient column vectors.
    pub relations: Vec<IntVec>,
    /// Canonical coordinates are y = U x.
    u: IntMat,
    u_inv: IntMat,
    /// Invariant factor for every ambient coordinate (1 = collapsed, 0 = free).
    full_factors: Vec<BigInt>,
    /// Indices of ambient coordinates kept as canonical generators.
    kept: Vec<usize>,
}

/// An element in canonical coordinates of some `QuotientPresentation`.
/// Torsion coordinates are reduced into [0, d); free coordinates are plain
/// integers.
pub type CanonVec = IntVec;

impl QuotientPresentation {
    pub fn new(ambient_rank: usize, relations: Vec<IntVec>) -> Self {
        for r in &relations {
            assert_eq!(r.len(), ambient_rank, "relation has wrong dimension");
        }
        let m = IntMat::from_columns(relations.clone());
        let m = if relations.is_empty() { IntMat::zero(ambient_rank, 0) } else { m };
        let snf = smith_normal_form(&m);
        let mut full_factors = vec![BigInt::zero(); ambient_rank];
        for (i, d) in snf.diag.iter().enumerate() {
            full_factors[i] = d.clone();
        }
        let kept = (0..ambient_rank).filter(|&i| !full_factors[i].is_one()).collect();
        QuotientPresentation {
            ambient_rank,
            relations,
            u: snf.u,
            u_inv: snf.u_inv,
            full_factors,
            kept,
        }
    }

    /// Invariant factors of the canonical form: torsion factors (ascending
    /// divisibility) followed by zeros for the free generators.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.kept.iter().map(|&i| self.full_factors[i].clone()).collect()
    }

    pub fn generator_count(&self) -> usize {
        self.kept.len()
    }

    pub fn free_rank(&self) -> usize {
        self.kept.iter().filter(|&&i| self.full_factors[i].is_zero()).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.kept.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.kept.iter().all(|&i| self.full_factors[i].is_zero())
    }

    /// Order of the group: None when infinite.
    pub fn order(&self) -> Option<BigInt> {
        let mut n = BigInt::one();
        for &i in &self.kept {
            if self.full_factors[i].is_zero() {
                return None;
            }
            n *= &self.full_factors[i];
        }
        Some(n)
    }

    /// Project an ambient vector to canonical coordinates.
    pub fn project(&self, x: &[BigInt]) -> CanonVec {
        self.reduce_canonical(&self.project_unreduced(x))
    }

    /// Canonical coordinates before torsion reduction: linear in x, so usable
    /// on scaled vectors standing for rational ambient elements.
    pub fn project_unreduced(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.ambient_rank);
        let y = self.u.mul_vec(x);
        self.kept.iter().map(|&i| y[i].clone()).collect()
    }

    /// Reduce canonical coordinates modulo the invariant factors.
    pub fn reduce_canonical(&self, y: &[BigInt]) -> CanonVec {
        assert_eq!(y.len(), self.kept.len(), "canonical coordinate count mismatch");
        y.iter()
            .zip(self.kept.iter())
            .map(|(v, &i)| {
                let d = &self.full_factors[i];
                if d.is_zero() {
                    v.clone()
                } else {
                    v.mod_floor_ref(d)
                }
            })
            .collect()
    }

    /// A distinguished ambient representative of a canonical element.
    pub fn lift(&self, y: &[BigInt]) -> IntVec {
        assert_eq!(y.len(), self.kept.len());
        let mut full = vec![BigInt::zero(); self.ambient_rank];
        for (v, &i) in y.iter().zip(self.kept.iter()) {
            full[i] = v.clone();
        }
        self.u_inv.mul_vec(&full)
    }

    pub fn zero(&self) -> CanonVec {
        vec![BigInt::zero(); self.kept.len()]
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> CanonVec {
        self.reduce_canonical(
            &a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>(),
        )
    }

    pub fn neg(&self, a: &[BigInt]) -> CanonVec {
        self.reduce_canonical(&a.iter().map(|x| -x).collect::<Vec<_>>())
    }

    pub fn is_zero_elem(&self, a: &[BigInt]) -> bool {
        vec_is_zero(&self.reduce_canonical(a))
    }

    pub fn eq_elem(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        self.reduce_canonical(a) == self.reduce_canonical(b)
    }

    /// The induced endomorphism matrix on canonical coordinates, for an ambient
    /// endomorphism `s` that preserves the relation lattice. Panics when the
    /// map is not well defined on the quotient.
    pub fn induced_endo(&self, s: &IntMat) -> IntMat {
        assert_eq!(s.rows, self.ambient_rank);
        assert_eq!(s.cols, self.ambient_rank);
        for r in &self.relations {
            assert!(
                self.is_zero_elem(&self.project(&s.mul_vec(r))),
                "endomorphism does not preserve the relation lattice"
            );
        }
        let n = self.kept.len();
        let mut m = IntMat::zero(n, n);
        for j in 0..n {
            let mut e = self.zero();
            e[j] = BigInt::one();
            let img = self.project(&s.mul_vec(&self.lift(&e)));
            for i in 0..n {
                m[(i, j)] = img[i].clone();
            }
        }
        // Torsion consistency: d_j * (image of generator j) must vanish.
        for (j, &kj) in self.kept.iter().enumerate() {
            let d = &self.full_factors[kj];
            if !d.is_zero() {
                let col: Vec<BigInt> = (0..n).map(|i| &m[(i, j)] * d).collect();
                assert!(
                    self.is_zero_elem(&col),
                    "induced map is inconsistent on torsion generator {j}"
                );
            }
        }
        m
    }

    /// Membership of an ambient vector in the relation lattice.
    pub fn in_relation_lattice(&self, x: &[BigInt]) -> bool {
        self.is_zero_elem(&self.project(x))
    }

    /// Ambient sublattice {x : [x] = 0}, i.e. relation lattice saturation by
    /// the torsion structure. Returned as an HNF basis.
    pub fn zero_class_lattice(&self) -> Vec<IntVec> {
        let mut gens: Vec<IntVec> = Vec::new();
        for i in 0..self.ambient_rank {
            let d = &self.full_factors[i];
            let mut e = vec![BigInt::zero(); self.ambient_rank];
            if d.is_zero() {
                continue;
            }
            e[i] = d.clone();
            gens.push(self.u_inv.mul_vec(&e));
        }
        hnf_basis(self.ambient_rank, &gens)
    }
}

/// A subgroup of a `QuotientPresentation`, with generators in the parent's
/// canonical coordinates and its own abstract canonical form.
#[derive(Debug, Clone)]
pub struct SubgroupPresentation {
    /// Generators, one per canonical generator of the abstract form, as
    /// elements of the parent group (canonical coordinates).
    pub generators: Vec<CanonVec>,
    /// Invariant factors of the subgroup in canonical form.
    pub invariant_factors: Vec<BigInt>,
}

impl SubgroupPresentation {
    pub fn order(&self) -> Option<BigInt> {
        let mut n = BigInt::one();
        for d in &self.invariant_factors {
            if d.is_zero() {
                return None;
            }
            n *= d;
        }
        Some(n)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Present the subgroup K/L of Z^n / L, where L is the relation lattice of
/// `parent` (plus its torsion saturation) and K is spanned by `k_gens` (ambient
/// vectors, required to contain L's saturation — callers pass the full
/// preimage lattice of the subgroup).
pub fn subgroup_from_ambient_lattice(
    parent: &QuotientPresentation,
    k_gens: &[IntVec],
) -> SubgroupPresentation {
    let n = parent.ambient_rank;
    // Work with K + sat(L) so the quotient K/sat(L) is exactly the subgroup.
    let mut gens = k_gens.to_vec();
    let sat = parent.zero_class_lattice();
    gens.extend(sat.iter().cloned());
    let k_basis = hnf_basis(n, &gens);
    if k_basis.is_empty() {
        return SubgroupPresentation { generators: vec![], invariant_factors: vec![] };
    }
    // Express sat(L) in the K basis: solve B_K * X = B_L column by column.
    let bk = IntMat::from_columns(k_basis.clone());
    let rels: Vec<IntVec> = sat
        .iter()
        .map(|l| solve(&bk, l).expect("zero-class lattice not contained in K"))
        .collect();
    let inner = QuotientPresentation::new(k_basis.len(), rels);
    // Map the inner canonical generators back into the parent group.
    let generators: Vec<CanonVec> = (0..inner.generator_count())
        .map(|j| {
            let mut e = inner.zero();
            e[j] = BigInt::one();
            let coeffs = inner.lift(&e);
            let ambient = bk.mul_vec(&coeffs);
            parent.project(&ambient)
        })
        .collect();
    SubgroupPresentation { generators, invariant_factors: inner.invariant_factors() }
}

/// Membership of an element of `parent` (canonical coordinates) in the
/// subgroup spanned by `sub`'s generators: solve sum a_j g_j = x in the
/// quotient, over the generators plus the invariant-factor columns.
pub fn subgroup_contains(
    parent: &QuotientPresentation,
    sub: &SubgroupPresentation,
    x: &[BigInt],
) -> bool {
    let n = parent.generator_count();
    let x = parent.reduce_canonical(x);
    if sub.generators.is_empty() {
        return parent.is_zero_elem(&x);
    }
    let mut cols: Vec<IntVec> = sub.generators.clone();
    for (i, d) in parent.invariant_factors().iter().enumerate() {
        if !d.is_zero() {
            let mut c = vec![BigInt::zero(); n];
            c[i] = d.clone();
            cols.push(c);
        }
    }
    crate::intmat::solve(&IntMat::from_columns(cols), &x).is_some()
}

/// Solve the congruence system M x = 0 in the quotient group `target`
/// (M maps Z^k ambient-to-ambient of target's presentation): returns an HNF
/// basis of the lattice {x in Z^k : [M x] = 0}.
pub fn congruence_kernel(m: &IntMat, target: &QuotientPresentation) -> Vec<IntVec> {
    assert_eq!(m.rows, target.ambient_rank);
    let k = m.cols;
    // Canonical-coordinate rows of U*M, with auxiliary unknowns t_i scaled by
    // the invariant factors: solutions of (U M) x = diag(d) t.
    let um = target.u.mul(m);
    let mut rows: Vec<IntVec> = Vec::new();
    let mut aux: Vec<BigInt> = Vec::new();
    for i in 0..target.ambient_rank {
        let d = &target.full_factors[i];
        if d.is_one() {
            continue; // coordinate collapsed, no constraint
        }
        rows.push(um.row(i));
        aux.push(d.clone());
    }
    let extended_cols = k + aux.iter().filter(|d| !d.is_zero()).count();
    let mut sys = IntMat::zero(rows.len(), extended_cols);
    let mut aux_col = k;
    for (i, row) in rows.iter().enumerate() {
        for j in 0..k {
            sys[(i, j)] = row[j].clone();
        }
        if !aux[i].is_zero() {
            sys[(i, aux_col)] = -aux[i].clone();
            aux_col += 1;
        }
    }
    let kern = kernel_basis(&sys);
    let projected: Vec<IntVec> = kern.iter().map(|v| v[..k].to_vec()).collect();
    hnf_basis(k, &projected)
}

/// Canonical coset representative of x + span(basis), via HNF reduction.
pub fn coset_representative(x: &[BigInt], basis: &[IntVec]) -> IntVec {
    hnf_reduce(x, basis)
}

trait ModFloor {
    fn mod_floor_ref(&self, m: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor_ref(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m.abs()
        } else {
            r
        }
    }
}
