//! Randomized cross-module properties: Weyl-chamber normalization, linearity
//! and Weyl invariance of the Kottwitz class, coroot-expansion
//! reconstruction, the certified shape of enumerated Kottwitz sets, and
//! round trips through z-extensions.

use kottwitz_core::kottwitz::{enumerate_b_g_mu, is_basic, newton_oracle_gln, Group};
use kottwitz_core::pi1::KottwitzTarget;
use kottwitz_core::preset;
use kottwitz_core::tori::{lift_mu, z_extension};
use kottwitz_core::RatVec;
use num::{BigInt, Signed, Zero};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn catalog() -> Vec<Group> {
    [
        preset::gl(2),
        preset::gl(3),
        preset::sl(3),
        preset::sp(4),
        preset::unitary(3),
    ]
    .into_iter()
    .map(|(rd, fr)| Group::new(rd, fr).expect("preset data is valid"))
    .collect()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Truncate a fixed-width raw sample to the group's rank.
fn cochar(g: &Group, raw: &[i64]) -> Vec<BigInt> {
    big(&raw[..g.rd.rank])
}

/// A random dominant integral cocharacter: dominantize the raw sample.
fn dominant_cochar(g: &Group, raw: &[i64]) -> Vec<BigInt> {
    let (dom, _) = g.rd.dominantize(&RatVec::from_int(&cochar(g, raw)));
    dom.as_int().expect("dominantization of an integral vector is integral")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dominantize_lands_in_the_chamber_and_the_word_inverts(
        gi in 0..5usize,
        raw in proptest::collection::vec(-4i64..=4, 4),
    ) {
        let g = &catalog()[gi];
        let v = RatVec::from_int(&cochar(g, &raw));
        let (dom, word) = g.rd.dominantize(&v);
        prop_assert!(g.rd.is_dominant(&dom));
        prop_assert_eq!(g.rd.apply_word(&word, &dom), v);
        let (again, word_again) = g.rd.dominantize(&dom);
        prop_assert_eq!(again, dom);
        prop_assert!(word_again.is_empty());
    }

    #[test]
    fn kottwitz_class_is_additive_and_weyl_invariant(
        gi in 0..5usize,
        a in proptest::collection::vec(-3i64..=3, 4),
        b in proptest::collection::vec(-3i64..=3, 4),
        word in proptest::collection::vec(0..8usize, 0..5),
    ) {
        let g = &catalog()[gi];
        let la = cochar(g, &a);
        let lb = cochar(g, &b);
        let ka = g.kottwitz_class(&la, KottwitzTarget::Coinvariants);
        let kb = g.kottwitz_class(&lb, KottwitzTarget::Coinvariants);
        let sum: Vec<BigInt> = la.iter().zip(&lb).map(|(x, y)| x + y).collect();
        let ks = g.kottwitz_class(&sum, KottwitzTarget::Coinvariants);
        prop_assert_eq!(ks, g.pi1.coinvariants.add(&ka, &kb));

        // Any Weyl image of la has the same class: coroot differences die.
        let n_simple = g.rd.simple_indices.len();
        let mut img = RatVec::from_int(&la);
        for &s in &word {
            img = g.rd.simple_reflection_cochar(s % n_simple, &img);
        }
        let img = img.as_int().expect("reflections preserve integrality");
        prop_assert_eq!(
            g.kottwitz_class(&img, KottwitzTarget::Coinvariants),
            ka
        );
    }

    #[test]
    fn coroot_expansion_reconstructs_with_central_residual(
        gi in 0..5usize,
        raw in proptest::collection::vec(-4i64..=4, 4),
    ) {
        let g = &catalog()[gi];
        let v = RatVec::from_int(&cochar(g, &raw));
        let (coeffs, z) = g.rd.coroot_expansion(&v);
        let mut acc = z.clone();
        for (i, ci) in coeffs.iter().enumerate() {
            let coroot = &g.rd.coroots[g.rd.simple_indices[i]];
            acc = acc.add(&RatVec::from_int(coroot).scale(ci));
        }
        prop_assert_eq!(acc, v);
        for &idx in &g.rd.simple_indices {
            prop_assert!(z.pair_int(&g.rd.roots[idx]).is_zero());
        }
    }

    #[test]
    fn enumerated_kottwitz_set_has_the_certified_shape(
        gi in 0..5usize,
        raw in proptest::collection::vec(0i64..=2, 4),
    ) {
        let g = &catalog()[gi];
        let mu = dominant_cochar(g, &raw);
        let classes = enumerate_b_g_mu(g, &mu).unwrap();
        prop_assert!(!classes.is_empty());

        // Exactly one basic class, and the ordering puts it first.
        let n_basic = classes.iter().filter(|c| is_basic(g, c)).count();
        prop_assert_eq!(n_basic, 1);
        prop_assert!(is_basic(g, &classes[0]));

        // The top class is mu-ordinary: its Newton point is the sigma
        // average of mu.
        let mu_bar = g.mu_bar(&mu);
        prop_assert_eq!(&classes.last().unwrap().newton, &mu_bar);

        // One Kottwitz point for the whole set, every Newton point dominant,
        // sigma-fixed, and distinct.
        let kappa = g.kottwitz_class(&mu, KottwitzTarget::Coinvariants);
        for c in &classes {
            prop_assert_eq!(&c.kappa, &kappa);
            prop_assert!(g.rd.is_dominant(&c.newton));
            prop_assert_eq!(&g.fr.apply_rat(&c.newton), &c.newton);
        }
        let distinct: BTreeSet<&RatVec> = classes.iter().map(|c| &c.newton).collect();
        prop_assert_eq!(distinct.len(), classes.len());

        // Height increases weakly along the list and strictly into the top.
        for w in classes.windows(2) {
            let d = g.rd.height(&w[1].newton) - g.rd.height(&w[0].newton);
            prop_assert!(!d.is_negative());
        }
    }

    #[test]
    fn gln_enumeration_matches_the_polygon_oracle(
        n in 2usize..=3,
        raw in proptest::collection::vec(0i64..=3, 3),
    ) {
        let (rd, fr) = preset::gl(n);
        let g = Group::new(rd, fr).unwrap();
        let mut mu_raw: Vec<i64> = raw[..n].to_vec();
        mu_raw.sort_unstable_by(|a, b| b.cmp(a));
        let mu = big(&mu_raw);
        let got: BTreeSet<RatVec> = enumerate_b_g_mu(&g, &mu)
            .unwrap()
            .into_iter()
            .map(|c| c.newton)
            .collect();
        let expect: BTreeSet<RatVec> =
            newton_oracle_gln(n, &mu).unwrap().into_iter().collect();
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn z_extension_lifts_project_back(
        gi in 0..5usize,
        raw in proptest::collection::vec(0i64..=2, 4),
    ) {
        let g = &catalog()[gi];
        let mu = dominant_cochar(g, &raw);
        let z = z_extension(g).unwrap();
        let lifted = lift_mu(&z, &mu).unwrap();
        prop_assert_eq!(z.project_cochar(&lifted), mu.clone());
        prop_assert!(z.source.rd.is_dominant_int(&lifted));
        prop_assert_eq!(
            z.source.rd.reflex_degree(&z.source.fr, &lifted),
            z.target.rd.reflex_degree(&z.target.fr, &mu)
        );
    }
}
