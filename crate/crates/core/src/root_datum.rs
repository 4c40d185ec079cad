//! Root data with Frobenius action, and the basic cocharacter operations:
//! validation, dominantization, Galois averaging, reflex degree, expansion
//! over simple coroots, and Weyl orbits.
//!
//! Conventions: characters and cocharacters both live in Z^rank and pair by
//! the standard dot product. The Frobenius matrix acts on cocharacters; its
//! inverse transpose acts on characters. Quasi-split pinned data is assumed
//! throughout: the Frobenius permutes the simple roots.

use crate::error::{Error, Result};
use crate::intmat::{dot, vec_add, vec_is_zero, vec_neg, vec_sub, IntMat, IntVec};
use crate::rat::RatVec;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeSet;

pub type Cocharacter = IntVec;

#[derive(Debug, Clone)]
pub struct RootDatum {
    pub rank: usize,
    /// Characters of the maximal torus, one per root.
    pub roots: Vec<IntVec>,
    /// Cocharacters, aligned index-by-index with `roots`.
    pub coroots: Vec<IntVec>,
    /// Indices into `roots` marking a base of simple roots.
    pub simple_indices: Vec<usize>,
}

/// Frobenius acting on the cocharacter lattice by a finite-order integer
/// matrix.
#[derive(Debug, Clone)]
pub struct FrobeniusAction {
    pub matrix: IntMat,
    pub order: usize,
}

impl FrobeniusAction {
    pub fn identity(rank: usize) -> Self {
        FrobeniusAction { matrix: IntMat::identity(rank), order: 1 }
    }

    pub fn new(matrix: IntMat) -> Result<Self> {
        if matrix.rows != matrix.cols {
            return Err(Error::validation("frobenius matrix is not square"));
        }
        let n = matrix.rows;
        let mut p = matrix.clone();
        let mut order = 1;
        // Bound: the order of a finite-order integer matrix of rank n is at
        // most exp bound; 6^n is a comfortable cutoff for the ranks seen here.
        let cutoff = 6usize.pow(n.max(1) as u32).max(24);
        while !p.is_identity() {
            p = p.mul(&matrix);
            order += 1;
            if order > cutoff {
                return Err(Error::validation("frobenius matrix does not have finite order"));
            }
        }
        Ok(FrobeniusAction { matrix, order })
    }

    pub fn is_split(&self) -> bool {
        self.order == 1
    }

    /// Action on cocharacters.
    pub fn apply(&self, v: &[BigInt]) -> IntVec {
        self.matrix.mul_vec(v)
    }

    pub fn apply_rat(&self, v: &RatVec) -> RatVec {
        v.apply(&self.matrix)
    }

    /// Action on characters: the inverse transpose of the cocharacter matrix,
    /// computed from powers (matrix^(order-1) is the inverse).
    pub fn char_matrix(&self) -> IntMat {
        let mut inv = IntMat::identity(self.matrix.rows);
        for _ in 0..self.order.saturating_sub(1) {
            inv = inv.mul(&self.matrix);
        }
        inv.transpose()
    }
}

/// A structural validation report: empty means valid.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::validation(self.violations.join("; ")))
        }
    }
}

impl RootDatum {
    pub fn torus(rank: usize) -> Self {
        RootDatum { rank, roots: vec![], coroots: vec![], simple_indices: vec![] }
    }

    pub fn simple_roots(&self) -> Vec<IntVec> {
        self.simple_indices.iter().map(|&i| self.roots[i].clone()).collect()
    }

    pub fn simple_coroots(&self) -> Vec<IntVec> {
        self.simple_indices.iter().map(|&i| self.coroots[i].clone()).collect()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_indices.len()
    }

    /// Pairing of a character with a rational cocharacter.
    pub fn pair(&self, chi: &[BigInt], lam: &RatVec) -> BigRational {
        lam.pair_int(chi)
    }

    /// Positive roots: those whose expansion over the simple roots is
    /// nonnegative. Precomputed forms are cheap at these ranks.
    pub fn positive_root_indices(&self) -> Vec<usize> {
        (0..self.roots.len())
            .filter(|&i| {
                self.root_sign(i) == Some(std::cmp::Ordering::Greater)
            })
            .collect()
    }

    /// Sign of a root: Greater = positive, Less = negative, None = not a
    /// signed combination of simple roots (validation failure).
    fn root_sign(&self, idx: usize) -> Option<std::cmp::Ordering> {
        let coeffs = self.root_simple_expansion(idx)?;
        if coeffs.iter().all(|c| !c.is_negative()) && coeffs.iter().any(|c| c.is_positive()) {
            Some(std::cmp::Ordering::Greater)
        } else if coeffs.iter().all(|c| !c.is_positive()) && coeffs.iter().any(|c| c.is_negative())
        {
            Some(std::cmp::Ordering::Less)
        } else {
            None
        }
    }

    /// Integer expansion of a root over the simple roots, when it exists.
    pub fn root_simple_expansion(&self, idx: usize) -> Option<IntVec> {
        let simples = self.simple_roots();
        if simples.is_empty() {
            return None;
        }
        let m = IntMat::from_columns(simples);
        crate::intmat::solve(&m, &self.roots[idx])
    }

    /// Sum of the positive roots (the character 2-rho).
    pub fn two_rho(&self) -> IntVec {
        let mut s = vec![BigInt::zero(); self.rank];
        for i in self.positive_root_indices() {
            s = vec_add(&s, &self.roots[i]);
        }
        s
    }

    /// Half-sum pairing <2rho, v>, a dominance-monotone height.
    pub fn height(&self, v: &RatVec) -> BigRational {
        v.pair_int(&self.two_rho())
    }

    /// Simple reflection on cocharacters: s_i(v) = v - <alpha_i, v> alpha_i^vee.
    pub fn simple_reflection_cochar(&self, i: usize, v: &RatVec) -> RatVec {
        let alpha = &self.roots[self.simple_indices[i]];
        let alpha_v = &self.coroots[self.simple_indices[i]];
        let c = v.pair_int(alpha);
        v.sub(&RatVec::from_int(alpha_v).scale(&c))
    }

    pub fn simple_reflection_int(&self, i: usize, v: &[BigInt]) -> IntVec {
        let alpha = &self.roots[self.simple_indices[i]];
        let alpha_v = &self.coroots[self.simple_indices[i]];
        let c = dot(alpha, v);
        vec_sub(v, &crate::intmat::vec_scale(&c, alpha_v))
    }

    /// Simple reflection on characters: s_i(chi) = chi - <chi, alpha_i^vee> alpha_i.
    pub fn simple_reflection_char(&self, i: usize, chi: &[BigInt]) -> IntVec {
        let alpha = &self.roots[self.simple_indices[i]];
        let alpha_v = &self.coroots[self.simple_indices[i]];
        let c = dot(chi, alpha_v);
        vec_sub(chi, &crate::intmat::vec_scale(&c, alpha))
    }

    pub fn is_dominant(&self, v: &RatVec) -> bool {
        self.simple_indices
            .iter()
            .all(|&i| !self.pair(&self.roots[i], v).is_negative())
    }

    pub fn is_dominant_int(&self, v: &[BigInt]) -> bool {
        self.is_dominant(&RatVec::from_int(v))
    }

    /// Full validation per the structural invariants. Returns a report listing
    /// every violation found.
    pub fn validate(&self, fr: &FrobeniusAction) -> ValidationReport {
        let mut rep = ValidationReport::default();
        fn fail(rep: &mut ValidationReport, msg: String) {
            rep.violations.push(msg);
        }

        if self.rank == 0 && !self.roots.is_empty() {
            fail(&mut rep, "rank 0 datum cannot carry roots".into());
        }
        if self.roots.len() != self.coroots.len() {
            fail(&mut rep, format!(
                "roots and coroots must align: {} roots vs {} coroots",
                self.roots.len(),
                self.coroots.len()
            ));
        }
        for (i, r) in self.roots.iter().enumerate() {
            if r.len() != self.rank {
                fail(&mut rep, format!("root {i} has dimension {} != rank {}", r.len(), self.rank));
            }
            if vec_is_zero(r) {
                fail(&mut rep, format!("root {i} is zero"));
            }
        }
        for (i, c) in self.coroots.iter().enumerate() {
            if c.len() != self.rank {
                fail(&mut rep, format!("coroot {i} has dimension {} != rank {}", c.len(), self.rank));
            }
        }
        if !rep.is_valid() {
            return rep; // dimension errors make the remaining checks meaningless
        }
        let mut seen = BTreeSet::new();
        for (i, r) in self.roots.iter().enumerate() {
            if !seen.insert(r.clone()) {
                fail(&mut rep, format!("duplicate root at index {i}"));
            }
        }
        for &i in &self.simple_indices {
            if i >= self.roots.len() {
                fail(&mut rep, format!("simple index {i} out of range"));
                return rep;
            }
        }
        // <alpha_i, alpha_i^vee> = 2 for every root.
        for i in 0..self.roots.len() {
            if dot(&self.roots[i], &self.coroots[i]) != BigInt::from(2) {
                fail(&mut rep, format!("<alpha, alpha^vee> != 2 at root index {i}"));
            }
        }
        // Every root is a signed integer combination of simple roots.
        for i in 0..self.roots.len() {
            if self.root_sign(i).is_none() {
                fail(&mut rep, format!(
                    "root {i} is not a one-signed integer combination of the simple roots"
                ));
            }
        }
        // Simple reflections permute the root/coroot pairs compatibly.
        let pair_index: std::collections::BTreeMap<IntVec, usize> =
            self.roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        for (si, _) in self.simple_indices.iter().enumerate() {
            for i in 0..self.roots.len() {
                let r_img = self.simple_reflection_char(si, &self.roots[i]);
                let c_img = self.simple_reflection_int(si, &self.coroots[i]);
                match pair_index.get(&r_img) {
                    None => fail(&mut rep, format!(
                        "simple reflection {si} maps root {i} outside the root set"
                    )),
                    Some(&j) => {
                        if self.coroots[j] != c_img {
                            fail(&mut rep, format!(
                                "simple reflection {si} breaks the root/coroot pairing at index {i}"
                            ));
                        }
                    }
                }
            }
        }
        // Frobenius checks.
        if fr.matrix.rows != self.rank {
            fail(&mut rep, format!(
                "frobenius matrix rank {} != datum rank {}",
                fr.matrix.rows, self.rank
            ));
            return rep;
        }
        let mut p = IntMat::identity(self.rank);
        for _ in 0..fr.order {
            p = p.mul(&fr.matrix);
        }
        if !p.is_identity() {
            fail(&mut rep, format!("frobenius matrix does not have order {}", fr.order));
        }
        for k in 1..fr.order {
            let mut q = IntMat::identity(self.rank);
            for _ in 0..k {
                q = q.mul(&fr.matrix);
            }
            if q.is_identity() {
                fail(&mut rep, format!("frobenius order is not minimal: matrix^{k} = 1"));
                break;
            }
        }
        // Frobenius permutes the simple roots (pinned quasi-split data).
        let fr_char = fr.char_matrix();
        let simple_set: BTreeSet<IntVec> = self.simple_roots().into_iter().collect();
        for (si, &idx) in self.simple_indices.iter().enumerate() {
            let img = fr_char.mul_vec(&self.roots[idx]);
            if !simple_set.contains(&img) {
                fail(&mut rep, format!("frobenius does not permute the simple roots (simple {si})"));
            }
        }
        // Frobenius maps root/coroot pairs to root/coroot pairs.
        for i in 0..self.roots.len() {
            let r_img = fr_char.mul_vec(&self.roots[i]);
            let c_img = fr.apply(&self.coroots[i]);
            match pair_index.get(&r_img) {
                None => fail(&mut rep, format!("frobenius maps root {i} outside the root set")),
                Some(&j) => {
                    if self.coroots[j] != c_img {
                        fail(&mut rep, format!("frobenius breaks the root/coroot pairing at index {i}"));
                    }
                }
            }
        }
        rep
    }

    /// The unique dominant element of the Weyl orbit, together with a reduced
    /// word w (indices into `simple_indices`) such that w applied to the
    /// output returns the input.
    pub fn dominantize(&self, v: &RatVec) -> (RatVec, Vec<usize>) {
        let mut cur = v.clone();
        let mut word = Vec::new();
        'outer: loop {
            for si in 0..self.simple_indices.len() {
                let alpha = &self.roots[self.simple_indices[si]];
                if cur.pair_int(alpha).is_negative() {
                    cur = self.simple_reflection_cochar(si, &cur);
                    word.push(si);
                    continue 'outer;
                }
            }
            break;
        }
        // word applied left-to-right to the dominant output recovers v:
        // v = s_{w_1} s_{w_2} ... s_{w_k} (output).
        (cur, word)
    }

    /// Apply a word of simple reflections (left-to-right composition order,
    /// matching the convention of `dominantize`).
    pub fn apply_word(&self, word: &[usize], v: &RatVec) -> RatVec {
        let mut cur = v.clone();
        for &si in word.iter().rev() {
            cur = self.simple_reflection_cochar(si, &cur);
        }
        cur
    }

    /// Galois average: the mean of the sigma-orbit of v.
    pub fn galois_average(&self, fr: &FrobeniusAction, v: &RatVec) -> RatVec {
        let mut sum = v.clone();
        let mut cur = v.clone();
        for _ in 1..fr.order {
            cur = fr.apply_rat(&cur);
            sum = sum.add(&cur);
        }
        sum.scale(&BigRational::new(BigInt::one(), BigInt::from(fr.order as i64)))
    }

    /// Size of the sigma-orbit of a dominant cocharacter: the degree of its
    /// reflex field.
    pub fn reflex_degree(&self, fr: &FrobeniusAction, mu: &[BigInt]) -> usize {
        let mut cur = mu.to_vec();
        for k in 1..=fr.order {
            cur = fr.apply(&cur);
            if cur == mu {
                return k;
            }
        }
        unreachable!("orbit must close within the frobenius order")
    }

    /// Write a rational cocharacter as sum_i c_i alpha_i^vee + z with z
    /// orthogonal to every root. Returns (coefficients over the simple
    /// coroots, central residual z).
    pub fn coroot_expansion(&self, v: &RatVec) -> (Vec<BigRational>, RatVec) {
        let k = self.simple_indices.len();
        if k == 0 {
            return (vec![], v.clone());
        }
        // Solve the Cartan system A c = (<alpha_j, v>)_j, A_ji = <alpha_j, alpha_i^vee>.
        let mut a = IntMat::zero(k, k);
        for j in 0..k {
            for i in 0..k {
                a[(j, i)] = dot(
                    &self.roots[self.simple_indices[j]],
                    &self.coroots[self.simple_indices[i]],
                );
            }
        }
        let b: Vec<BigRational> =
            (0..k).map(|j| v.pair_int(&self.roots[self.simple_indices[j]])).collect();
        let c = crate::intmat::solve_rational(&a, &b)
            .expect("Cartan matrix of a valid datum is invertible");
        let mut z = v.clone();
        for (i, ci) in c.iter().enumerate() {
            z = z.sub(&RatVec::from_int(&self.coroots[self.simple_indices[i]]).scale(ci));
        }
        (c, z)
    }

    /// Full Weyl orbit of a cocharacter, sorted lexicographically.
    pub fn weyl_orbit(&self, v: &RatVec) -> Vec<RatVec> {
        let mut seen: BTreeSet<RatVec> = BTreeSet::new();
        let mut queue = vec![v.clone()];
        seen.insert(v.clone());
        while let Some(cur) = queue.pop() {
            for si in 0..self.simple_indices.len() {
                let img = self.simple_reflection_cochar(si, &cur);
                if seen.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Order of the Weyl group, by closure of the generating reflections.
    pub fn weyl_order(&self) -> BigInt {
        let gens: Vec<IntMat> =
            (0..self.simple_indices.len()).map(|si| self.reflection_matrix(si)).collect();
        let id = IntMat::identity(self.rank);
        let mut seen: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        let key = |m: &IntMat| -> Vec<BigInt> {
            let mut v = Vec::new();
            for i in 0..m.rows {
                v.extend(m.row(i));
            }
            v
        };
        seen.insert(key(&id));
        let mut queue = vec![id];
        while let Some(cur) = queue.pop() {
            for g in &gens {
                let next = cur.mul(g);
                if seen.insert(key(&next)) {
                    queue.push(next);
                }
            }
        }
        BigInt::from(seen.len())
    }

    /// Matrix of the simple reflection s_i on the cocharacter lattice.
    pub fn reflection_matrix(&self, si: usize) -> IntMat {
        let n = self.rank;
        let mut m = IntMat::identity(n);
        let alpha = &self.roots[self.simple_indices[si]];
        let alpha_v = &self.coroots[self.simple_indices[si]];
        for j in 0..n {
            // column j: e_j - alpha_j * alpha^vee
            for i in 0..n {
                let t = &alpha[j] * &alpha_v[i];
                m[(i, j)] -= t;
            }
        }
        m
    }

    /// Connected components of the Dynkin diagram, as lists of simple indices
    /// (positions into `simple_indices`).
    #[allow(clippy::needless_range_loop)]
    pub fn dynkin_components(&self) -> Vec<Vec<usize>> {
        let k = self.simple_indices.len();
        let mut comp: Vec<Option<usize>> = vec![None; k];
        let mut components = Vec::new();
        for start in 0..k {
            if comp[start].is_some() {
                continue;
            }
            let id = components.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = Some(id);
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..k {
                    if comp[j].is_none()
                        && !dot(
                            &self.roots[self.simple_indices[i]],
                            &self.coroots[self.simple_indices[j]],
                        )
                        .is_zero()
                    {
                        comp[j] = Some(id);
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    /// The highest root of one Dynkin component (by height in the simple-root
    /// expansion), with its coroot.
    pub fn highest_root_of_component(&self, component: &[usize]) -> (IntVec, IntVec) {
        let member_set: BTreeSet<usize> = component.iter().copied().collect();
        let mut best: Option<(BigInt, usize)> = None;
        for idx in self.positive_root_indices() {
            let coeffs = self.root_simple_expansion(idx).expect("validated root");
            let support: Vec<usize> =
                (0..coeffs.len()).filter(|&i| !coeffs[i].is_zero()).collect();
            if support.iter().all(|i| member_set.contains(i)) && !support.is_empty() {
                let height: BigInt = coeffs.iter().sum();
                if best.as_ref().map(|(h, _)| height > *h).unwrap_or(true) {
                    best = Some((height, idx));
                }
            }
        }
        let (_, idx) = best.expect("component has at least one root");
        (self.roots[idx].clone(), self.coroots[idx].clone())
    }

    /// Direct product of two data, on the concatenated lattice.
    pub fn direct_sum(&self, other: &RootDatum) -> RootDatum {
        let rank = self.rank + other.rank;
        let pad_left = |v: &IntVec| -> IntVec {
            let mut w = v.clone();
            w.extend(vec![BigInt::zero(); other.rank]);
            w
        };
        let pad_right = |v: &IntVec| -> IntVec {
            let mut w = vec![BigInt::zero(); self.rank];
            w.extend(v.clone());
            w
        };
        let mut roots: Vec<IntVec> = self.roots.iter().map(pad_left).collect();
        let mut coroots: Vec<IntVec> = self.coroots.iter().map(pad_left).collect();
        let offset = roots.len();
        roots.extend(other.roots.iter().map(pad_right));
        coroots.extend(other.coroots.iter().map(pad_right));
        let mut simple_indices = self.simple_indices.clone();
        simple_indices.extend(other.simple_indices.iter().map(|&i| i + offset));
        RootDatum { rank, roots, coroots, simple_indices }
    }
}

/// Block-diagonal Frobenius for a direct product.
pub fn frobenius_direct_sum(a: &FrobeniusAction, b: &FrobeniusAction) -> FrobeniusAction {
    let n = a.matrix.rows + b.matrix.rows;
    let mut m = IntMat::zero(n, n);
    for i in 0..a.matrix.rows {
        for j in 0..a.matrix.cols {
            m[(i, j)] = a.matrix[(i, j)].clone();
        }
    }
    for i in 0..b.matrix.rows {
        for j in 0..b.matrix.cols {
            m[(a.matrix.rows + i, a.matrix.cols + j)] = b.matrix[(i, j)].clone();
        }
    }
    FrobeniusAction { matrix: m, order: num::integer::lcm(a.order, b.order) }
}

/// Negation helper used by tests and presets.
pub fn neg_vec(v: &[BigInt]) -> IntVec {
    vec_neg(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intmat::vec_from_i64;
    use crate::preset;

    #[test]
    fn gl3_validates() {
        let (rd, fr) = preset::gl(3);
        assert!(rd.validate(&fr).is_valid());
        assert_eq!(rd.roots.len(), 6);
        assert_eq!(rd.positive_root_indices().len(), 3);
    }

    #[test]
    fn sp4_validates_and_has_long_roots() {
        let (rd, fr) = preset::sp(4);
        let rep = rd.validate(&fr);
        assert!(rep.is_valid(), "{:?}", rep.violations);
        assert_eq!(rd.roots.len(), 8);
        // the long simple root is 2e_2 with coroot e_2
        assert!(rd.roots.contains(&vec_from_i64(&[0, 2])));
    }

    #[test]
    fn u3_validates() {
        let (rd, fr) = preset::unitary(3);
        let rep = rd.validate(&fr);
        assert!(rep.is_valid(), "{:?}", rep.violations);
        assert_eq!(fr.order, 2);
    }

    #[test]
    fn broken_pairing_is_reported() {
        let (mut rd, fr) = preset::gl(2);
        rd.coroots[0] = vec_from_i64(&[1, 0]);
        let rep = rd.validate(&fr);
        assert!(!rep.is_valid());
        assert!(rep.violations.iter().any(|v| v.contains("alpha^vee")));
    }

    #[test]
    fn dominantize_gl3() {
        let (rd, _) = preset::gl(3);
        let v = RatVec::from_i64(&[0, 2, 1]);
        let (dom, word) = rd.dominantize(&v);
        assert_eq!(dom, RatVec::from_i64(&[2, 1, 0]));
        assert_eq!(rd.apply_word(&word, &dom), v);
        // The word length matches the inversion count, so it is reduced.
        assert_eq!(word.len(), 2);
    }

    #[test]
    fn dominantize_already_dominant_is_identity() {
        let (rd, _) = preset::gl(2);
        let v = RatVec::from_i64(&[1, 0]);
        let (dom, word) = rd.dominantize(&v);
        assert_eq!(dom, v);
        assert!(word.is_empty());
    }

    #[test]
    fn galois_average_u3() {
        let (rd, fr) = preset::unitary(3);
        let mu = RatVec::from_i64(&[1, 0, 0]);
        let avg = rd.galois_average(&fr, &mu);
        assert_eq!(avg, RatVec::parse("1/2, 0, -1/2").unwrap());
        assert_eq!(avg, fr.apply_rat(&avg), "average is sigma-fixed");
    }

    #[test]
    fn reflex_degree_examples() {
        let (rd, fr) = preset::gl(2);
        assert_eq!(rd.reflex_degree(&fr, &vec_from_i64(&[1, 0])), 1);
        let (rt, ft) = preset::res_gm(2);
        assert_eq!(rt.reflex_degree(&ft, &vec_from_i64(&[1, 0])), 2);
        assert_eq!(rt.reflex_degree(&ft, &vec_from_i64(&[1, 1])), 1);
        let (ru, fu) = preset::unitary(3);
        assert_eq!(ru.reflex_degree(&fu, &vec_from_i64(&[1, 0, 0])), 2);
        assert_eq!(ru.reflex_degree(&fu, &vec_from_i64(&[1, 0, -1])), 1);
    }

    #[test]
    fn coroot_expansion_gl2() {
        let (rd, _) = preset::gl(2);
        let v = RatVec::parse("1/2, -1/2").unwrap();
        let (c, z) = rd.coroot_expansion(&v);
        assert_eq!(c, vec![BigRational::new(BigInt::one(), BigInt::from(2))]);
        assert!(z.is_zero());
        let w = RatVec::from_i64(&[1, 1]);
        let (c2, z2) = rd.coroot_expansion(&w);
        assert!(c2[0].is_zero());
        assert_eq!(z2, w);
    }

    #[test]
    fn coroot_expansion_gl3_regular() {
        let (rd, _) = preset::gl(3);
        let v = RatVec::from_i64(&[1, 0, -1]);
        let (c, z) = rd.coroot_expansion(&v);
        assert_eq!(c, vec![BigRational::from(BigInt::one()), BigRational::from(BigInt::one())]);
        assert!(z.is_zero());
    }

    #[test]
    fn weyl_orbit_gl3() {
        let (rd, _) = preset::gl(3);
        let orbit = rd.weyl_orbit(&RatVec::from_i64(&[2, 1, 0]));
        assert_eq!(orbit.len(), 6);
        let orbit2 = rd.weyl_orbit(&RatVec::from_i64(&[1, 1, 0]));
        assert_eq!(orbit2.len(), 3);
        assert_eq!(rd.weyl_order(), BigInt::from(6));
    }

    #[test]
    fn reconstruction_from_expansion() {
        let (rd, _) = preset::sp(4);
        let v = RatVec::parse("3/2, 1/2").unwrap();
        let (c, z) = rd.coroot_expansion(&v);
        let mut rebuilt = z.clone();
        for (i, ci) in c.iter().enumerate() {
            rebuilt = rebuilt
                .add(&RatVec::from_int(&rd.coroots[rd.simple_indices[i]]).scale(ci));
        }
        assert_eq!(rebuilt, v);
    }

    #[test]
    fn dynkin_components_and_highest_roots() {
        let (rd, _) = preset::gl(3);
        let comps = rd.dynkin_components();
        assert_eq!(comps.len(), 1);
        let (theta, _) = rd.highest_root_of_component(&comps[0]);
        assert_eq!(theta, vec_from_i64(&[1, 0, -1]));

        let (a, fa) = preset::sl(2);
        let (b, fb) = preset::sl(2);
        let prod = a.direct_sum(&b);
        let fr = frobenius_direct_sum(&fa, &fb);
        assert!(prod.validate(&fr).is_valid());
        let comps = prod.dynkin_components();
        assert_eq!(comps.len(), 2);
    }
}
