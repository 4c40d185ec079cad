//! Catalog of standard unramified group data.
//!
//! Realizations:
//! - GL(n): lattice Z^n, type A_{n-1} roots e_i - e_j, split.
//! - SL(n): lattice Z^{n-1} (coroot lattice of A_{n-1}), split.
//! - PGL(n): lattice Z^{n-1} (coweight lattice of A_{n-1}), split.
//! - Sp(2n): lattice Z^n, type C_n, split, simply connected.
//! - SO(n): split special orthogonal realizations, types B_m (n = 2m+1)
//!   and D_m (n = 2m).
//! - U(n): quasi-split unramified unitary group, the GL(n) datum with the
//!   order-2 twist v -> -reverse(v).
//! - Res(s): the degree-s induced torus Res_{E/Qp} Gm with cyclic Frobenius.
//!
//! Products are available through `RootDatum::direct_sum` and the "AxB"
//! preset syntax.

use crate::intmat::{IntMat, IntVec};
use crate::root_datum::{frobenius_direct_sum, FrobeniusAction, RootDatum};
use num::{BigInt, One, Zero};

fn e(rank: usize, i: usize) -> IntVec {
    let mut v = vec![BigInt::zero(); rank];
    v[i] = BigInt::one();
    v
}

fn diff(rank: usize, i: usize, j: usize) -> IntVec {
    let mut v = vec![BigInt::zero(); rank];
    v[i] = BigInt::one();
    v[j] = -BigInt::one();
    v
}

/// GL(n): roots and coroots e_i - e_j.
pub fn gl(n: usize) -> (RootDatum, FrobeniusAction) {
    assert!(n >= 1);
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut simple_indices = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                if j == i + 1 {
                    simple_indices.push(roots.len());
                }
                roots.push(diff(n, i, j));
                coroots.push(diff(n, i, j));
            }
        }
    }
    (
        RootDatum { rank: n, roots, coroots, simple_indices },
        FrobeniusAction::identity(n),
    )
}

/// SL(n) on the coroot lattice Z^{n-1}: basis f_i = e_i - e_n of the
/// trace-zero lattice; characters are classes modulo (1,...,1).
pub fn sl(n: usize) -> (RootDatum, FrobeniusAction) {
    assert!(n >= 2);
    let rank = n - 1;
    // Coroot alpha_i^vee = e_i - e_{i+1}: f_i - f_{i+1} for i < n-1, f_{n-1} last.
    // Root alpha_i = g_i - g_{i+1} for i < n-1; alpha_{n-1} = g_1 + ... + g_{n-2} + 2 g_{n-1}.
    let simple_coroot = |i: usize| -> IntVec {
        if i + 1 < rank {
            diff(rank, i, i + 1)
        } else {
            e(rank, rank - 1)
        }
    };
    let simple_root = |i: usize| -> IntVec {
        if i + 1 < rank {
            diff(rank, i, i + 1)
        } else {
            let mut v = vec![BigInt::one(); rank];
            v[rank - 1] = BigInt::from(2);
            v
        }
    };
    build_from_simples(
        rank,
        (0..rank).map(simple_root).collect(),
        (0..rank).map(simple_coroot).collect(),
        FrobeniusAction::identity(rank),
    )
}

/// PGL(n) on the coweight lattice Z^{n-1}: basis f_i = class of e_i.
pub fn pgl(n: usize) -> (RootDatum, FrobeniusAction) {
    assert!(n >= 2);
    let rank = n - 1;
    let simple_root = |i: usize| -> IntVec {
        if i + 1 < rank {
            diff(rank, i, i + 1)
        } else {
            e(rank, rank - 1)
        }
    };
    let simple_coroot = |i: usize| -> IntVec {
        if i + 1 < rank {
            diff(rank, i, i + 1)
        } else {
            let mut v = vec![BigInt::one(); rank];
            v[rank - 1] = BigInt::from(2);
            v
        }
    };
    build_from_simples(
        rank,
        (0..rank).map(simple_root).collect(),
        (0..rank).map(simple_coroot).collect(),
        FrobeniusAction::identity(rank),
    )
}

/// Sp(2n): type C_n on Z^n, simply connected.
pub fn sp(two_n: usize) -> (RootDatum, FrobeniusAction) {
    assert!(two_n >= 2 && two_n.is_multiple_of(2), "Sp takes an even argument");
    let n = two_n / 2;
    let mut simple_roots: Vec<IntVec> = (0..n.saturating_sub(1)).map(|i| diff(n, i, i + 1)).collect();
    let mut last = e(n, n - 1);
    last[n - 1] = BigInt::from(2);
    simple_roots.push(last);
    let mut simple_coroots: Vec<IntVec> =
        (0..n.saturating_sub(1)).map(|i| diff(n, i, i + 1)).collect();
    simple_coroots.push(e(n, n - 1));
    build_from_simples(n, simple_roots, simple_coroots, FrobeniusAction::identity(n))
}

/// Split SO(n): type B_m for n = 2m+1 (short simple root e_m, coroot 2e_m),
/// type D_m for n = 2m (fork node e_{m-1} + e_m).
pub fn so(n: usize) -> (RootDatum, FrobeniusAction) {
    assert!(n >= 3, "SO needs n >= 3");
    if n % 2 == 1 {
        let m = n / 2;
        let mut simple_roots: Vec<IntVec> =
            (0..m.saturating_sub(1)).map(|i| diff(m, i, i + 1)).collect();
        simple_roots.push(e(m, m - 1));
        let mut simple_coroots: Vec<IntVec> =
            (0..m.saturating_sub(1)).map(|i| diff(m, i, i + 1)).collect();
        let mut last = e(m, m - 1);
        last[m - 1] = BigInt::from(2);
        simple_coroots.push(last);
        build_from_simples(m, simple_roots, simple_coroots, FrobeniusAction::identity(m))
    } else {
        let m = n / 2;
        assert!(m >= 2, "SO(2m) needs m >= 2");
        let mut simple_roots: Vec<IntVec> =
            (0..m - 1).map(|i| diff(m, i, i + 1)).collect();
        let mut fork = e(m, m - 1);
        fork[m - 2] = BigInt::one();
        simple_roots.push(fork.clone());
        let simple_coroots = simple_roots.clone();
        build_from_simples(m, simple_roots, simple_coroots, FrobeniusAction::identity(m))
    }
}

/// Quasi-split unramified U(n): the GL(n) lattice with Frobenius
/// v -> -reverse(v).
pub fn unitary(n: usize) -> (RootDatum, FrobeniusAction) {
    assert!(n >= 1);
    let (rd, _) = gl(n);
    let mut m = IntMat::zero(n, n);
    for i in 0..n {
        m[(i, n - 1 - i)] = -BigInt::one();
    }
    (rd, FrobeniusAction { matrix: m, order: 2 })
}

/// Degree-s induced torus Res_{E/Qp} Gm, E/Qp unramified of degree s;
/// Frobenius is the cyclic coordinate shift.
pub fn res_gm(s: usize) -> (RootDatum, FrobeniusAction) {
    assert!(s >= 1);
    let rd = RootDatum::torus(s);
    (rd, shift_frobenius(s))
}

/// The cyclic shift e_i -> e_{i+1 mod s}.
pub fn shift_frobenius(s: usize) -> FrobeniusAction {
    let mut m = IntMat::zero(s, s);
    for i in 0..s {
        m[((i + 1) % s, i)] = BigInt::one();
    }
    FrobeniusAction { matrix: m, order: s }
}

/// Close a set of simple roots/coroots under the simple reflections to build
/// the full root datum.
fn build_from_simples(
    rank: usize,
    simple_roots: Vec<IntVec>,
    simple_coroots: Vec<IntVec>,
    fr: FrobeniusAction,
) -> (RootDatum, FrobeniusAction) {
    let k = simple_roots.len();
    let mut pairs: Vec<(IntVec, IntVec)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut queue: Vec<(IntVec, IntVec)> = simple_roots
        .iter()
        .cloned()
        .zip(simple_coroots.iter().cloned())
        .collect();
    for p in &queue {
        seen.insert(p.0.clone());
    }
    while let Some((r, c)) = queue.pop() {
        pairs.push((r.clone(), c.clone()));
        for i in 0..k {
            // reflect (r, c) in the i-th simple root
            let coeff_r = crate::intmat::dot(&r, &simple_coroots[i]);
            let coeff_c = crate::intmat::dot(&simple_roots[i], &c);
            let new_r = crate::intmat::vec_sub(&r, &crate::intmat::vec_scale(&coeff_r, &simple_roots[i]));
            let new_c =
                crate::intmat::vec_sub(&c, &crate::intmat::vec_scale(&coeff_c, &simple_coroots[i]));
            if seen.insert(new_r.clone()) {
                queue.push((new_r, new_c));
            }
        }
    }
    // Deterministic order: sort pairs, then locate the simples.
    pairs.sort();
    let roots: Vec<IntVec> = pairs.iter().map(|(r, _)| r.clone()).collect();
    let coroots: Vec<IntVec> = pairs.iter().map(|(_, c)| c.clone()).collect();
    let simple_indices: Vec<usize> = simple_roots
        .iter()
        .map(|s| roots.iter().position(|r| r == s).expect("simple root in closure"))
        .collect();
    (RootDatum { rank, roots, coroots, simple_indices }, fr)
}

/// Parse a preset name. Grammar:
///   GL(n) | SL(n) | PGL(n) | Sp(2n) | SO(n) | U(n) | Res(s)
/// plus products with 'x', e.g. "SL(2)xSL(2)".
/// "U(n,unramified)" and "ResE/Qp-Gm(s)" are accepted long forms.
pub fn parse(name: &str) -> Result<(RootDatum, FrobeniusAction), String> {
    let name = name.trim();
    if let Some((a, b)) = split_product(name) {
        let (ra, fa) = parse(a)?;
        let (rb, fb) = parse(b)?;
        return Ok((ra.direct_sum(&rb), frobenius_direct_sum(&fa, &fb)));
    }
    let (head, arg) = name
        .split_once('(')
        .ok_or_else(|| format!("unrecognized preset: {name}"))?;
    let arg = arg
        .strip_suffix(')')
        .ok_or_else(|| format!("unbalanced parentheses in preset: {name}"))?;
    let first_arg = arg.split(',').next().unwrap_or("").trim();
    let n: usize = first_arg
        .parse()
        .map_err(|_| format!("bad preset argument: {name}"))?;
    let head_norm = head.trim();
    match head_norm {
        "GL" => {
            check_bounds(n, 1, 8, name)?;
            Ok(gl(n))
        }
        "SL" => {
            check_bounds(n, 2, 8, name)?;
            Ok(sl(n))
        }
        "PGL" => {
            check_bounds(n, 2, 8, name)?;
            Ok(pgl(n))
        }
        "Sp" => {
            if !n.is_multiple_of(2) {
                return Err(format!("Sp takes an even argument: {name}"));
            }
            check_bounds(n, 2, 12, name)?;
            Ok(sp(n))
        }
        "SO" => {
            check_bounds(n, 3, 12, name)?;
            Ok(so(n))
        }
        "U" => {
            check_bounds(n, 1, 8, name)?;
            Ok(unitary(n))
        }
        "Res" | "ResE/Qp-Gm" => {
            check_bounds(n, 1, 12, name)?;
            Ok(res_gm(n))
        }
        _ => Err(format!("unrecognized preset: {name}")),
    }
}

fn check_bounds(n: usize, lo: usize, hi: usize, name: &str) -> Result<(), String> {
    if n < lo || n > hi {
        Err(format!("preset argument out of supported range [{lo}, {hi}]: {name}"))
    } else {
        Ok(())
    }
}

/// Split "AxB" at a top-level 'x' (outside parentheses).
fn split_product(name: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, ch) in name.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            'x' if depth == 0 && i > 0 => {
                return Some((&name[..i], &name[i + 1..]));
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intmat::vec_from_i64;

    #[test]
    fn all_catalog_entries_validate() {
        let entries: Vec<(RootDatum, FrobeniusAction)> = vec![
            gl(1),
            gl(2),
            gl(3),
            gl(4),
            sl(2),
            sl(3),
            sl(4),
            pgl(2),
            pgl(3),
            sp(2),
            sp(4),
            sp(6),
            so(3),
            so(5),
            so(7),
            so(4),
            so(6),
            unitary(1),
            unitary(2),
            unitary(3),
            unitary(4),
            res_gm(1),
            res_gm(2),
            res_gm(3),
        ];
        for (rd, fr) in entries {
            let rep = rd.validate(&fr);
            assert!(rep.is_valid(), "rank {} datum: {:?}", rd.rank, rep.violations);
        }
    }

    #[test]
    fn root_counts() {
        assert_eq!(gl(4).0.roots.len(), 12);
        assert_eq!(sl(3).0.roots.len(), 6);
        assert_eq!(pgl(2).0.roots.len(), 2);
        assert_eq!(sp(4).0.roots.len(), 8);
        assert_eq!(so(5).0.roots.len(), 8);
        assert_eq!(so(6).0.roots.len(), 12);
        assert_eq!(so(4).0.roots.len(), 4);
    }

    #[test]
    fn sl2_pgl2_shapes() {
        let (rd, _) = sl(2);
        assert_eq!(rd.simple_roots(), vec![vec_from_i64(&[2])]);
        assert_eq!(rd.simple_coroots(), vec![vec_from_i64(&[1])]);
        let (rd, _) = pgl(2);
        assert_eq!(rd.simple_roots(), vec![vec_from_i64(&[1])]);
        assert_eq!(rd.simple_coroots(), vec![vec_from_i64(&[2])]);
    }

    #[test]
    fn parse_grammar() {
        assert!(parse("GL(3)").is_ok());
        assert!(parse("U(3,unramified)").is_ok());
        assert!(parse("ResE/Qp-Gm(2)").is_ok());
        assert!(parse("SL(2)xSL(2)").is_ok());
        assert!(parse("GL(0)").is_err());
        assert!(parse("Sp(3)").is_err());
        assert!(parse("XYZ(2)").is_err());
        let (rd, fr) = parse("GL(2)xRes(2)").unwrap();
        assert_eq!(rd.rank, 4);
        assert_eq!(fr.order, 2);
        assert!(rd.validate(&fr).is_valid());
    }

    #[test]
    fn res_frobenius_shifts() {
        let (_, fr) = res_gm(3);
        assert_eq!(fr.apply(&vec_from_i64(&[1, 0, 0])), vec_from_i64(&[0, 1, 0]));
        assert_eq!(fr.order, 3);
    }
}
