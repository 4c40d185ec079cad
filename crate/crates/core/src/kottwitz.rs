//! Sigma-conjugacy classes: the Kottwitz set B(G, mu), basic classes,
//! Hodge-Newton irreducibility, and the enumeration of B(G, mu) certified
//! through basic classes of standard Levi subgroups.
//!
//! A class is the pair (Newton point, Kottwitz point); that pair is a
//! complete invariant. The enumeration generates candidate Newton points
//! three ways — averages of dominant integral cocharacters below mu, slope
//! merges of those, and a sweep over basic classes of the sigma-stable
//! standard Levis — and keeps exactly the candidates certified as genuine
//! Newton points with the correct Kottwitz point. The Levi sweep alone is
//! complete (every Newton point is the basic point of its own centralizer
//! Levi, which is standard and sigma-stable since the point is dominant
//! and sigma-fixed); the first two routes are cheap direct seeds.

use crate::abelian::CanonVec;
use crate::error::{Error, Result};
use crate::intmat::{vec_sub, IntVec};
use crate::pi1::{KottwitzTarget, Pi1Presentation};
use crate::rat::RatVec;
use crate::root_datum::{Cocharacter, FrobeniusAction, RootDatum};
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::collections::BTreeSet;

/// A validated group: root datum, Frobenius, and the pi1 presentations.
#[derive(Debug, Clone)]
pub struct Group {
    pub rd: RootDatum,
    pub fr: FrobeniusAction,
    pub pi1: Pi1Presentation,
}

impl Group {
    pub fn new(rd: RootDatum, fr: FrobeniusAction) -> Result<Self> {
        rd.validate(&fr).into_result()?;
        Ok(Group::new_unchecked(rd, fr))
    }

    /// Skip structural validation (internal sub-data known to be valid).
    pub fn new_unchecked(rd: RootDatum, fr: FrobeniusAction) -> Self {
        let pi1 = Pi1Presentation::new(&rd, &fr);
        Group { rd, fr, pi1 }
    }

    pub fn kottwitz_class(&self, lam: &[BigInt], target: KottwitzTarget) -> CanonVec {
        self.pi1.kottwitz_class(lam, target)
    }

    /// Galois average of mu, the slope bound of B(G, mu).
    pub fn mu_bar(&self, mu: &[BigInt]) -> RatVec {
        self.rd.galois_average(&self.fr, &RatVec::from_int(mu))
    }

    pub fn require_dominant(&self, mu: &[BigInt]) -> Result<()> {
        if !self.rd.is_dominant_int(mu) {
            return Err(Error::precondition(format!(
                "cocharacter {} is not dominant",
                RatVec::from_int(mu)
            )));
        }
        Ok(())
    }
}

/// A sigma-conjugacy class, identified by its complete invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaConjClass {
    /// Dominant, sigma-fixed rational Newton point.
    pub newton: RatVec,
    /// Kottwitz point in pi1(G)_Gamma, canonical coordinates.
    pub kappa: CanonVec,
}

impl SigmaConjClass {
    /// Validating constructor: newton must be dominant and sigma-fixed, and
    /// kappa must have newton's class rationally.
    pub fn new(g: &Group, newton: RatVec, kappa: CanonVec) -> Result<Self> {
        if newton.dim() != g.rd.rank {
            return Err(Error::precondition("newton point has wrong dimension"));
        }
        let kappa = g.pi1.coinvariants.reduce_canonical(&kappa);
        if !g.rd.is_dominant(&newton) {
            return Err(Error::precondition(format!(
                "newton point {newton} is not dominant"
            )));
        }
        if g.fr.apply_rat(&newton) != newton {
            return Err(Error::precondition(format!(
                "newton point {newton} is not sigma-fixed"
            )));
        }
        if !g.pi1.rational_class_matches(&g.rd, &g.fr, &newton, &kappa) {
            return Err(Error::precondition(
                "kappa does not match the rational class of the newton point",
            ));
        }
        Ok(SigmaConjClass { newton, kappa })
    }
}

/// A standard Levi subgroup: the sub-datum together with the surviving simple
/// positions of the parent.
#[derive(Debug, Clone)]
pub struct LeviDatum {
    pub datum: RootDatum,
    pub frobenius: FrobeniusAction,
    /// Positions (into the parent's simple list) of the Levi's simple roots.
    pub simple_positions: Vec<usize>,
}

/// The centralizer Levi of a dominant sigma-fixed rational cocharacter: the
/// roots pairing to zero with it.
pub fn levi_of(g: &Group, nu: &RatVec) -> Result<LeviDatum> {
    if !g.rd.is_dominant(nu) {
        return Err(Error::precondition(format!("{nu} is not dominant")));
    }
    if g.fr.apply_rat(nu) != *nu {
        return Err(Error::precondition(format!("{nu} is not sigma-fixed")));
    }
    let positions: Vec<usize> = (0..g.rd.simple_indices.len())
        .filter(|&i| nu.pair_int(&g.rd.roots[g.rd.simple_indices[i]]).is_zero())
        .collect();
    Ok(standard_levi(&g.rd, &g.fr, &positions))
}

/// The standard Levi with the given simple positions: roots supported on that
/// subset of simple roots.
pub fn standard_levi(
    rd: &RootDatum,
    fr: &FrobeniusAction,
    positions: &[usize],
) -> LeviDatum {
    let keep: BTreeSet<usize> = positions.iter().copied().collect();
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    for i in 0..rd.roots.len() {
        if let Some(coeffs) = rd.root_simple_expansion(i) {
            let support: Vec<usize> =
                (0..coeffs.len()).filter(|&j| !coeffs[j].is_zero()).collect();
            if !support.is_empty() && support.iter().all(|j| keep.contains(j)) {
                roots.push(rd.roots[i].clone());
                coroots.push(rd.coroots[i].clone());
            }
        }
    }
    let simple_indices: Vec<usize> = positions
        .iter()
        .map(|&p| {
            roots
                .iter()
                .position(|r| r == &rd.roots[rd.simple_indices[p]])
                .expect("simple root survives in its own Levi")
        })
        .collect();
    LeviDatum {
        datum: RootDatum { rank: rd.rank, roots, coroots, simple_indices },
        frobenius: fr.clone(),
        simple_positions: positions.to_vec(),
    }
}

/// Basic means the Newton point is central: orthogonal to every root.
pub fn is_basic(g: &Group, c: &SigmaConjClass) -> bool {
    g.rd.roots.iter().all(|r| c.newton.pair_int(r).is_zero())
}

/// The unique basic class with the given Kottwitz point: average an integral
/// lift over sigma and project to the root-orthogonal subspace.
pub fn basic_element(g: &Group, kappa: &CanonVec) -> SigmaConjClass {
    let kappa = g.pi1.coinvariants.reduce_canonical(kappa);
    let lift = g.pi1.coinvariants.lift(&kappa);
    let avg = g.rd.galois_average(&g.fr, &RatVec::from_int(&lift));
    let (_, z) = g.rd.coroot_expansion(&avg);
    SigmaConjClass { newton: z, kappa }
}

/// Membership of a class in B(G, mu): Kottwitz points agree and
/// mu_bar - newton is a nonnegative rational combination of the positive
/// coroots (nonnegative simple-coroot coefficients with zero central
/// residual).
pub fn in_b_g_mu(g: &Group, c: &SigmaConjClass, mu: &Cocharacter) -> Result<bool> {
    g.require_dominant(mu)?;
    let kappa_mu = g.kottwitz_class(mu, KottwitzTarget::Coinvariants);
    if c.kappa != kappa_mu {
        return Ok(false);
    }
    let diff = g.mu_bar(mu).sub(&c.newton);
    let (coeffs, z) = g.rd.coroot_expansion(&diff);
    Ok(z.is_zero() && coeffs.iter().all(|x| !x.is_negative()))
}

/// Hodge-Newton irreducibility: every simple-coroot coefficient of
/// mu_bar - newton is strictly positive. Requires membership in B(G, mu).
pub fn is_hn_irreducible(g: &Group, c: &SigmaConjClass, mu: &Cocharacter) -> Result<bool> {
    if !in_b_g_mu(g, c, mu)? {
        return Err(Error::precondition(format!(
            "class with newton point {} does not lie in B(G, mu) for mu = {}",
            c.newton,
            RatVec::from_int(mu)
        )));
    }
    let diff = g.mu_bar(mu).sub(&c.newton);
    let (coeffs, _) = g.rd.coroot_expansion(&diff);
    Ok(coeffs.iter().all(|x| x.is_positive()))
}

/// The permutation of simple positions induced by the Frobenius.
fn simple_permutation(rd: &RootDatum, fr: &FrobeniusAction) -> Vec<usize> {
    let fr_char = fr.char_matrix();
    let simples = rd.simple_roots();
    (0..simples.len())
        .map(|i| {
            let img = fr_char.mul_vec(&simples[i]);
            simples
                .iter()
                .position(|s| *s == img)
                .expect("frobenius permutes the simple roots of valid data")
        })
        .collect()
}

/// Sigma-stable subsets of the simple positions: unions of sigma-orbits.
fn sigma_stable_subsets(rd: &RootDatum, fr: &FrobeniusAction) -> Vec<Vec<usize>> {
    let perm = simple_permutation(rd, fr);
    let k = perm.len();
    let mut orbit_of = vec![usize::MAX; k];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = Vec::new();
        let mut i = start;
        while orbit_of[i] == usize::MAX {
            orbit_of[i] = id;
            members.push(i);
            i = perm[i];
        }
        members.sort_unstable();
        orbits.push(members);
    }
    let m = orbits.len();
    let mut subsets = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let mut s = Vec::new();
        for (j, orbit) in orbits.iter().enumerate() {
            if mask & (1 << j) != 0 {
                s.extend(orbit.iter().copied());
            }
        }
        s.sort_unstable();
        subsets.push(s);
    }
    subsets
}

/// Certify that nu is the Newton point of a class in B(G) with Kottwitz point
/// kappa_mu: inside the centralizer Levi M there must be an integral element
/// of pi1(M)_Gamma with nu's rational class mapping to kappa_mu.
fn certify_newton(g: &Group, nu: &RatVec, kappa_mu: &CanonVec) -> bool {
    if !g.rd.is_dominant(nu) || g.fr.apply_rat(nu) != *nu {
        return false;
    }
    let levi = match levi_of(g, nu) {
        Ok(l) => l,
        Err(_) => return false,
    };
    let m = Group::new_unchecked(levi.datum, levi.frobenius);
    let coinv = &m.pi1.coinvariants;
    let factors = coinv.invariant_factors();
    // Canonical coordinates are linear in the ambient vector, so projecting
    // the numerator vector gives den * (class of nu) before torsion
    // reduction; the free coordinates of nu's rational class must be
    // integers for an integral class to carry nu.
    let scaled = coinv.project_unreduced(&nu.nums);
    let den = nu.den.clone();
    // Free coordinates must be divisible by the denominator.
    let mut free_vals: Vec<BigInt> = Vec::new();
    for (pos, d) in factors.iter().enumerate() {
        if d.is_zero() {
            let v = &scaled[pos];
            if !(v % &den).is_zero() {
                return false;
            }
            free_vals.push(v / &den);
        }
    }
    // Try every torsion combination.
    let torsion_positions: Vec<(usize, BigInt)> = factors
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(i, d)| (i, d.clone()))
        .collect();
    let mut combo = vec![BigInt::zero(); torsion_positions.len()];
    loop {
        // Assemble kappa_m.
        let mut kappa_m = vec![BigInt::zero(); factors.len()];
        let mut fi = 0;
        for (pos, d) in factors.iter().enumerate() {
            if d.is_zero() {
                kappa_m[pos] = free_vals[fi].clone();
                fi += 1;
            }
        }
        for (slot, (pos, _)) in combo.iter().zip(torsion_positions.iter()) {
            kappa_m[*pos] = slot.clone();
        }
        let ambient = coinv.lift(&kappa_m);
        let image = g.pi1.coinvariants.project(&ambient);
        if image == *kappa_mu {
            // The basic Newton point of kappa_m in the Levi must be nu.
            let avg = m.rd.galois_average(&m.fr, &RatVec::from_int(&ambient));
            let (_, z) = m.rd.coroot_expansion(&avg);
            if z == *nu {
                return true;
            }
        }
        // Next torsion combination.
        let mut carry = true;
        for (slot, (_, d)) in combo.iter_mut().zip(torsion_positions.iter()) {
            if carry {
                *slot += BigInt::one();
                if &*slot >= d {
                    *slot = BigInt::zero();
                } else {
                    carry = false;
                }
            }
        }
        if carry || torsion_positions.is_empty() {
            break;
        }
    }
    false
}

/// Enumerate B(G, mu), sorted by ascending dominance height of the Newton
/// point with lexicographic tie-break. The basic class comes first, the
/// mu-ordinary class last.
pub fn enumerate_b_g_mu(g: &Group, mu: &Cocharacter) -> Result<Vec<SigmaConjClass>> {
    g.require_dominant(mu)?;
    let kappa_mu = g.kottwitz_class(mu, KottwitzTarget::Coinvariants);
    let mu_bar = g.mu_bar(mu);

    // Per-coordinate bound: candidates lie in the convex hull of the Weyl
    // orbit of mu_bar.
    let orbit = g.rd.weyl_orbit(&mu_bar);
    let coord_bound: Vec<BigRational> = (0..g.rd.rank)
        .map(|k| {
            orbit
                .iter()
                .map(|v| v.component(k).abs())
                .max()
                .unwrap_or_else(BigRational::zero)
        })
        .collect();

    let mut candidates: BTreeSet<RatVec> = BTreeSet::new();

    // Route 1: Galois averages of dominant integral cocharacters lam with
    // mu - lam a nonnegative integral combination of the simple coroots.
    for lam in dominant_below(g, mu, &coord_bound) {
        let avg = g.rd.galois_average(&g.fr, &RatVec::from_int(&lam));
        candidates.insert(avg);
    }

    // Route 2: one averaging pass — replace a coordinate interval by its
    // mean, keeping dominant sigma-fixed results. A single pass only:
    // iterating merges builds unboundedly fine denominators and never
    // closes, while completeness is already carried by route 3.
    let seeds: Vec<RatVec> = candidates.iter().cloned().collect();
    for v in &seeds {
        for i in 0..v.dim() {
            for j in i + 1..v.dim() {
                let merged = merge_interval(v, i, j);
                if g.rd.is_dominant(&merged) && g.fr.apply_rat(&merged) == merged {
                    candidates.insert(merged);
                }
            }
        }
    }

    // Route 3: basic classes of every sigma-stable standard Levi whose
    // Kottwitz point maps to kappa_mu.
    for subset in sigma_stable_subsets(&g.rd, &g.fr) {
        let levi = standard_levi(&g.rd, &g.fr, &subset);
        let m = Group::new_unchecked(levi.datum, levi.frobenius);
        sweep_levi_basics(g, &m, &kappa_mu, &coord_bound, &mut candidates);
    }

    // Certify and filter.
    let mut classes: Vec<SigmaConjClass> = Vec::new();
    for nu in candidates {
        if !certify_newton(g, &nu, &kappa_mu) {
            continue;
        }
        let c = SigmaConjClass { newton: nu, kappa: kappa_mu.clone() };
        if in_b_g_mu(g, &c, mu)? {
            classes.push(c);
        }
    }
    classes.sort_by(|a, b| {
        g.rd.height(&a.newton)
            .cmp(&g.rd.height(&b.newton))
            .then_with(|| a.newton.lex_cmp(&b.newton))
    });
    Ok(classes)
}

/// Dominant integral cocharacters lam = mu - sum n_i alpha_i^vee (n_i >= 0)
/// within the coordinate bound.
fn dominant_below(g: &Group, mu: &Cocharacter, coord_bound: &[BigRational]) -> Vec<IntVec> {
    let simples = g.rd.simple_coroots();
    let mut found: BTreeSet<IntVec> = BTreeSet::new();
    let mut visited: BTreeSet<IntVec> = BTreeSet::new();
    let mut stack = vec![mu.clone()];
    visited.insert(mu.clone());
    let in_box = |v: &IntVec| -> bool {
        v.iter().zip(coord_bound.iter()).all(|(x, b)| {
            BigRational::from(x.clone()).abs() <= *b
        })
    };
    while let Some(cur) = stack.pop() {
        if g.rd.is_dominant_int(&cur) {
            found.insert(cur.clone());
        }
        for s in &simples {
            let next = vec_sub(&cur, s);
            if in_box(&next) && visited.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    found.into_iter().collect()
}

/// Replace coordinates i..=j by their mean.
fn merge_interval(v: &RatVec, i: usize, j: usize) -> RatVec {
    let mut comps = v.components();
    let len = BigRational::from(BigInt::from((j - i + 1) as i64));
    let mean: BigRational =
        comps[i..=j].iter().fold(BigRational::zero(), |a, b| a + b) / len;
    for c in comps[i..=j].iter_mut() {
        *c = mean.clone();
    }
    RatVec::from_components(&comps)
}

/// Enumerate integral elements of the Levi's pi1 coinvariants whose basic
/// Newton points can meet the bound, mapping to kappa_mu; add the dominant
/// representatives of those Newton points to the candidate set.
fn sweep_levi_basics(
    g: &Group,
    m: &Group,
    kappa_mu: &CanonVec,
    coord_bound: &[BigRational],
    candidates: &mut BTreeSet<RatVec>,
) {
    let coinv = &m.pi1.coinvariants;
    let factors = coinv.invariant_factors();
    let n_gen = factors.len();
    if n_gen == 0 {
        // Trivial coinvariants: single basic class with kappa_m = 0.
        let empty: Vec<BigInt> = Vec::new();
        let ambient = coinv.lift(&empty);
        if g.pi1.coinvariants.project(&ambient) == *kappa_mu {
            let nu = basic_newton_of_lift(m, &ambient);
            let (dom, _) = g.rd.dominantize(&nu);
            candidates.insert(dom);
        }
        return;
    }
    // Bound each free coordinate: |y_j| <= sum_k |u_{jk}| * bound_k, where the
    // functional row is read off by projecting basis vectors.
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); g.rd.rank]; n_gen];
    for k in 0..g.rd.rank {
        let mut e = vec![BigInt::zero(); g.rd.rank];
        e[k] = BigInt::one();
        let col = coinv.project_unreduced(&e);
        for j in 0..n_gen {
            rows[j][k] = col[j].clone();
        }
    }
    let mut limits: Vec<BigInt> = Vec::with_capacity(n_gen);
    for (j, d) in factors.iter().enumerate() {
        if d.is_zero() {
            let mut b = BigRational::zero();
            for k in 0..g.rd.rank {
                b += BigRational::from(rows[j][k].abs()) * &coord_bound[k];
            }
            limits.push(b.ceil().to_integer());
        } else {
            limits.push(d - BigInt::one());
        }
    }
    // Odometer over the coordinate box.
    let mut coords: Vec<BigInt> = factors
        .iter()
        .zip(limits.iter())
        .map(|(d, l)| if d.is_zero() { -l.clone() } else { BigInt::zero() })
        .collect();
    loop {
        let kappa_m = coinv.reduce_canonical(&coords);
        let ambient = coinv.lift(&kappa_m);
        if g.pi1.coinvariants.project(&ambient) == *kappa_mu {
            let nu = basic_newton_of_lift(m, &ambient);
            let within = (0..nu.dim())
                .all(|k| nu.component(k).abs() <= coord_bound[k]);
            if within {
                let (dom, _) = g.rd.dominantize(&nu);
                candidates.insert(dom);
            }
        }
        // Advance.
        let mut carry = true;
        for j in 0..n_gen {
            if !carry {
                break;
            }
            coords[j] += BigInt::one();
            let upper = &limits[j];
            if &coords[j] > upper {
                coords[j] = if factors[j].is_zero() {
                    -upper.clone()
                } else {
                    BigInt::zero()
                };
            } else {
                carry = false;
            }
        }
        if carry {
            break;
        }
    }
}

/// The Newton point of the basic Levi class with the given ambient lift.
fn basic_newton_of_lift(m: &Group, ambient: &[BigInt]) -> RatVec {
    let avg = m.rd.galois_average(&m.fr, &RatVec::from_int(ambient));
    let (_, z) = m.rd.coroot_expansion(&avg);
    z
}

/// Independent Newton-point oracle for GL_n: weakly decreasing rational slope
/// vectors below mu with equal total and integral slope-change breakpoints,
/// found by block enumeration (slope denominators divide block lengths).
pub fn newton_oracle_gln(n: usize, mu: &[BigInt]) -> Result<Vec<RatVec>> {
    if mu.len() != n {
        return Err(Error::precondition("mu has wrong length"));
    }
    for w in mu.windows(2) {
        if w[0] < w[1] {
            return Err(Error::precondition("mu must be weakly decreasing"));
        }
    }
    let total: BigInt = mu.iter().sum();
    let partial_mu: Vec<BigInt> = mu
        .iter()
        .scan(BigInt::zero(), |acc, x| {
            *acc += x;
            Some(acc.clone())
        })
        .collect();
    let mut out: BTreeSet<RatVec> = BTreeSet::new();
    // blocks: (length, integer sum); slopes strictly decrease.
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        n: usize,
        total: &BigInt,
        partial_mu: &[BigInt],
        pos: usize,
        cur_sum: BigInt,
        prev_slope: Option<BigRational>,
        blocks: &mut Vec<(usize, BigInt)>,
        out: &mut BTreeSet<RatVec>,
    ) {
        if pos == n {
            if cur_sum == *total {
                let comps: Vec<BigRational> = blocks
                    .iter()
                    .flat_map(|(len, a)| {
                        let s = BigRational::new(a.clone(), BigInt::from(*len as i64));
                        std::iter::repeat_n(s, *len)
                    })
                    .collect();
                out.insert(RatVec::from_components(&comps));
            }
            return;
        }
        for len in 1..=(n - pos) {
            // Candidate integer block sums a with slope a/len.
            let rest = n - pos - len;
            // Upper bounds: partial-sum constraint at the block end, strict
            // slope decrease, and feasibility of the remainder.
            let mut hi = partial_mu[pos + len - 1].clone() - &cur_sum;
            if let Some(p) = &prev_slope {
                // a/len < p strictly: a <= ceil(p*len) - 1 adjusted exactly.
                let bound = p * BigRational::from(BigInt::from(len as i64));
                let floor = bound.floor().to_integer();
                let strict = if bound == BigRational::from(floor.clone()) {
                    floor - BigInt::one()
                } else {
                    floor
                };
                if strict < hi {
                    hi = strict;
                }
            }
            // Lower bound from the remainder: remaining slopes < a/len, so
            // (total - cur - a) * len < a * rest, i.e. a * (rest + len) >
            // (total - cur) * len; for rest = 0 the last block sum is forced.
            let need = total - &cur_sum;
            let lo = if rest == 0 {
                need.clone()
            } else {
                // smallest a with a * (rest + len) > need * len
                let num = &need * BigInt::from(len as i64);
                let den = BigInt::from((rest + len) as i64);
                num.div_floor(&den) + BigInt::one()
            };
            let hi = if rest == 0 { std::cmp::min(hi, need) } else { hi };
            let mut a = lo;
            while a <= hi {
                // Intermediate partial sums are below mu's by concavity of the
                // mu polygon; endpoints suffice.
                blocks.push((len, a.clone()));
                recurse(
                    n,
                    total,
                    partial_mu,
                    pos + len,
                    &cur_sum + &a,
                    Some(BigRational::new(a.clone(), BigInt::from(len as i64))),
                    blocks,
                    out,
                );
                blocks.pop();
                a += BigInt::one();
            }
        }
    }
    let mut blocks = Vec::new();
    recurse(n, &total, &partial_mu, 0, BigInt::zero(), None, &mut blocks, &mut out);
    Ok(out.into_iter().collect())
}
