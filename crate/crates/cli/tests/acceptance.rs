//! Release acceptance suite. Each test is one go/no-go criterion and prints a
//! single `criterion N (...): PASS` line on success; a failed assertion is the
//! failure line. The checks deliberately recompute expected answers through
//! independent routes (polygon oracles, rational elimination over hand-picked
//! lattice bases, Bruhat-ball brute force) rather than through the library
//! calls under test.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, One, Signed, Zero};

use kottwitz_core::affine_weyl::{
    self, admissible_set, bruhat_leq, translation_element, ExtendedAffineWeylElement,
};
use kottwitz_core::intmat::IntMat;
use kottwitz_core::kottwitz::{
    enumerate_b_g_mu, is_hn_irreducible, newton_oracle_gln, Group, SigmaConjClass,
};
use kottwitz_core::preset;
use kottwitz_core::shtuka::{
    frobenius_orbit_sum, pi0_sht, weil_descriptor, ArtinNormalization, Level,
};
use kottwitz_core::tori::{lift_b, lift_mu, z_extension};
use kottwitz_core::{adlv_pi0, cartesian_pi0_check, torsor_matches, RatVec};

fn group(name: &str) -> Group {
    let (rd, fr) = preset::parse(name).unwrap_or_else(|e| panic!("preset {name}: {e}"));
    Group::new(rd, fr).unwrap_or_else(|e| panic!("group {name}: {e}"))
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Deterministic xorshift64* generator so random cases are reproducible.
struct XorShift(u64);

impl XorShift {
    fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }

    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

// --- criterion 1: GL(n) enumeration against the polygon oracle ---------------

#[test]
fn criterion_1_gln_enumeration_matches_polygon_oracle() {
    let start = Instant::now();
    let mut raw_tuples = 0usize;
    let mut checked: BTreeSet<(usize, Vec<BigInt>)> = BTreeSet::new();
    for n in 1..=4usize {
        let g = group(&format!("GL({n})"));
        // Every tuple with entries in [0, 3], reduced to its dominant
        // (descending) representative; the enumeration only accepts those.
        for code in 0..4u64.pow(n as u32) {
            raw_tuples += 1;
            let mut mu: Vec<BigInt> = (0..n)
                .map(|i| BigInt::from((code / 4u64.pow(i as u32)) % 4))
                .collect();
            mu.sort_by(|a, b| b.cmp(a));
            if !checked.insert((n, mu.clone())) {
                continue;
            }
            let classes = enumerate_b_g_mu(&g, &mu)
                .unwrap_or_else(|e| panic!("enumerate GL({n}) mu={mu:?}: {e}"));
            let got: BTreeSet<RatVec> = classes.iter().map(|c| c.newton.clone()).collect();
            assert_eq!(got.len(), classes.len(), "duplicate Newton point for mu={mu:?}");
            let oracle: BTreeSet<RatVec> =
                newton_oracle_gln(n, &mu).unwrap().into_iter().collect();
            assert_eq!(got, oracle, "GL({n}) mu={mu:?} disagrees with the polygon oracle");
            let kappa = g.pi1.coinvariants.project(&mu);
            for c in &classes {
                assert_eq!(c.kappa, kappa, "kappa must be constant on B(G, mu), mu={mu:?}");
            }
        }
    }
    assert_eq!(raw_tuples, 340);
    assert_eq!(checked.len(), 69);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}, budget 10s");
    println!(
        "criterion 1 (GL(n) sets match the polygon oracle): PASS \
         ({} tuples, {} dominant cocharacters, {elapsed:?})",
        raw_tuples,
        checked.len()
    );
}

// --- criterion 2: fundamental-group catalog against rational elimination ----

/// Is `target` an integer combination of the linearly independent `basis`
/// vectors? Solved from scratch by rational Gaussian elimination, so the
/// answer owes nothing to the library's normal-form machinery.
#[allow(clippy::needless_range_loop)]
fn in_lattice(basis: &[Vec<BigInt>], target: &[BigInt]) -> bool {
    let rows = target.len();
    let cols = basis.len();
    if cols == 0 {
        return target.iter().all(|x| x.is_zero());
    }
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| BigRational::from(basis[j][i].clone()))
                .chain(std::iter::once(BigRational::from(target[i].clone())))
                .collect()
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(r) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, r);
        let p = a[pivot_row][col].clone();
        for other in 0..rows {
            if other != pivot_row && !a[other][col].is_zero() {
                let f = &a[other][col] / &p;
                for c in col..=cols {
                    let sub = &a[pivot_row][c] * &f;
                    a[other][c] = &a[other][c] - &sub;
                }
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    assert_eq!(pivots.len(), cols, "lattice basis must be linearly independent");
    for r in pivot_row..rows {
        if !a[r][cols].is_zero() {
            return false;
        }
    }
    pivots.iter().all(|&(r, c)| (&a[r][cols] / &a[r][c]).is_integer())
}

/// Number of classes of the box {-1, 0, 1}^rank modulo the sublattice spanned
/// by `basis`, computed by pairwise membership tests.
fn box_classes(rank: usize, basis: &[Vec<BigInt>]) -> usize {
    let mut reps: Vec<Vec<BigInt>> = Vec::new();
    for code in 0..3u64.pow(rank as u32) {
        let v: Vec<BigInt> = (0..rank)
            .map(|i| BigInt::from(((code / 3u64.pow(i as u32)) % 3) as i64 - 1))
            .collect();
        let known = reps.iter().any(|r| {
            let diff: Vec<BigInt> = r.iter().zip(&v).map(|(a, b)| a - b).collect();
            in_lattice(basis, &diff)
        });
        if !known {
            reps.push(v);
        }
    }
    reps.len()
}

#[test]
fn criterion_2_fundamental_group_catalog_matches_brute_force() {
    // (preset, elementary divisors of the fundamental group, class count of
    // the [-1,1] box modulo the coroot lattice). The box counts are worked
    // out by hand: GL(n) classes are separated by the coordinate sum
    // (2n + 1 values), trivial groups merge everything, Z/n keeps n classes,
    // and the rank-two induced torus has no coroots at all (27 = 9 per box of
    // rank two... all 9 points stay distinct).
    let table: &[(&str, &[i64], usize)] = &[
        ("GL(2)", &[0], 5),
        ("GL(3)", &[0], 7),
        ("GL(4)", &[0], 9),
        ("SL(2)", &[], 1),
        ("SL(3)", &[], 1),
        ("PGL(2)", &[2], 2),
        ("PGL(3)", &[3], 3),
        ("Sp(4)", &[], 1),
        ("Sp(6)", &[], 1),
        ("Res(2)", &[0, 0], 9),
    ];
    for &(name, factors, expected_classes) in table {
        let g = group(name);
        assert_eq!(
            g.pi1.pi1.invariant_factors(),
            big(factors).as_slice(),
            "{name}: fundamental group"
        );
        let basis: Vec<Vec<BigInt>> = g
            .rd
            .simple_indices
            .iter()
            .map(|&i| g.rd.coroots[i].clone())
            .collect();
        assert_eq!(
            box_classes(g.rd.rank, &basis),
            expected_classes,
            "{name}: box classes modulo the simple coroots"
        );
    }

    // The quadratic induced torus carries the only nontrivial Galois action
    // in the catalog: coinvariants kill (1, -1), invariants keep the
    // diagonal.
    let res2 = group("Res(2)");
    assert_eq!(res2.pi1.coinvariants.invariant_factors(), big(&[0]).as_slice());
    assert_eq!(box_classes(2, &[big(&[1, -1])]), 5, "Res(2) coinvariant box classes");
    let inv = res2.pi1.invariants(&res2.fr);
    assert_eq!(inv.invariant_factors, big(&[0]), "Res(2) invariants are infinite cyclic");
    assert_eq!(inv.generators.len(), 1);
    let fixed_in_box = (0..9)
        .map(|code| big(&[(code / 3) as i64 - 1, (code % 3) as i64 - 1]))
        .filter(|v| res2.fr.matrix.mul_vec(v) == *v)
        .count();
    assert_eq!(fixed_in_box, 3, "Res(2) swap fixes exactly the diagonal of the box");

    println!(
        "criterion 2 (fundamental-group catalog vs rational elimination): PASS \
         ({} presets + twisted coinvariants/invariants)",
        table.len()
    );
}

// --- criteria 3 and 5 share one case list ------------------------------------

/// Every irreducible pair (class, cocharacter) arising from a fixed list of
/// split groups and dominant cocharacters.
fn irreducible_cases() -> Vec<(String, Group, SigmaConjClass, Vec<BigInt>)> {
    let specs: &[(&str, &[i64])] = &[
        ("GL(2)", &[1, 0]),
        ("GL(2)", &[2, 0]),
        ("GL(2)", &[2, 1]),
        ("GL(2)", &[3, 0]),
        ("GL(2)", &[3, 1]),
        ("GL(3)", &[1, 0, 0]),
        ("GL(3)", &[1, 1, 0]),
        ("GL(3)", &[2, 1, 0]),
        ("GL(3)", &[2, 2, 1]),
        ("GL(4)", &[1, 1, 0, 0]),
        ("GL(4)", &[2, 1, 1, 0]),
        ("SL(2)", &[1]),
        ("SL(2)", &[2]),
        ("SL(3)", &[1, 0]),
        ("SL(3)", &[2, 1]),
        ("PGL(2)", &[1]),
        ("PGL(3)", &[1, 0]),
        ("Sp(4)", &[1, 0]),
        ("Sp(4)", &[1, 1]),
        ("SO(5)", &[1, 0]),
        ("SL(2)xSL(2)", &[1, 1]),
    ];
    let mut cases = Vec::new();
    for &(name, mu_raw) in specs {
        let g = group(name);
        let mu = big(mu_raw);
        for c in enumerate_b_g_mu(&g, &mu).unwrap() {
            if is_hn_irreducible(&g, &c, &mu).unwrap() {
                let label = format!("{name} mu={mu_raw:?} nu={:?}", c.newton);
                cases.push((label, g.clone(), c, mu.clone()));
            }
        }
    }
    cases
}

#[test]
fn criterion_3_component_groups_factor_cartesian() {
    let cases = irreducible_cases();
    assert!(
        cases.len() >= 20,
        "need at least 20 irreducible cases, found {}",
        cases.len()
    );
    for (label, g, c, mu) in &cases {
        assert!(
            cartesian_pi0_check(g, c, mu).unwrap_or_else(|e| panic!("{label}: {e}")),
            "{label}: component set is not cartesian"
        );
    }
    println!(
        "criterion 3 (cartesian component structure): PASS ({} irreducible cases)",
        cases.len()
    );
}

// --- criterion 4: induced tori, two routes to the translation class ----------

#[test]
fn criterion_4_torus_translation_agrees_along_both_routes() {
    let mut rng = XorShift::new(0x9e37_79b9_7f4a_7c15);
    let mut checked = 0usize;
    let mut names = BTreeSet::new();
    for _ in 0..24 {
        let blocks = 1 + rng.below(3);
        let name = (0..blocks)
            .map(|_| format!("Res({})", 1 + rng.below(4)))
            .collect::<Vec<_>>()
            .join("x");
        let g = group(&name);
        let mu: Vec<BigInt> = (0..g.rd.rank)
            .map(|_| BigInt::from(rng.below(7) as i64 - 3))
            .collect();
        // Route one: sum the period-lattice columns upstairs, project through
        // the extension, read off the class. Route two: the direct
        // Frobenius-orbit sum downstairs.
        let w = weil_descriptor(&g, &mu, ArtinNormalization::Arithmetic)
            .unwrap_or_else(|e| panic!("{name} mu={mu:?}: {e}"));
        let ones = vec![BigInt::one(); w.reflex_degree];
        let upstairs = w.norm_lattice_map.mul_vec(&ones);
        let down = w.g_circle.extension.project_cochar(&upstairs);
        assert_eq!(
            g.pi1.pi1.project(&down),
            frobenius_orbit_sum(&g, &mu),
            "{name} mu={mu:?}: the two translation routes disagree"
        );
        names.insert(name);
        checked += 1;
    }
    assert!(checked >= 20);
    println!(
        "criterion 4 (induced-torus translation, two routes): PASS \
         ({checked} random tori, {} distinct shapes)",
        names.len()
    );
}

// --- criterion 5: moduli components at hyperspecial level vs affine flags ----

#[test]
fn criterion_5_hyperspecial_components_match_affine_flag_components() {
    let cases = irreducible_cases();
    assert!(cases.len() >= 20);
    for (label, g, c, mu) in &cases {
        let direct = adlv_pi0(g, c, mu).unwrap_or_else(|e| panic!("{label}: {e}"));
        let sht = pi0_sht(g, c, mu, Level::Hyperspecial, ArtinNormalization::Arithmetic)
            .unwrap_or_else(|e| panic!("{label}: {e}"));
        let torsor = sht.torsor.unwrap_or_else(|| panic!("{label}: missing torsor"));
        assert!(
            torsor_matches(g, &direct, &torsor),
            "{label}: hyperspecial components disagree with the affine-flag computation"
        );
    }
    println!(
        "criterion 5 (hyperspecial level matches affine flags): PASS ({} cases)",
        cases.len()
    );
}

// --- criterion 6: central extensions with torsion-free fundamental group -----

#[test]
fn criterion_6_central_extension_suite() {
    let start = Instant::now();
    let specs: &[(&str, &[&[i64]])] = &[
        ("PGL(2)", &[&[1], &[2]]),
        ("PGL(3)", &[&[1, 0], &[1, 1]]),
        ("SO(5)", &[&[1, 0]]),
        ("SO(7)", &[&[1, 0, 0], &[1, 1, 0]]),
    ];
    let mut lifted_classes = 0usize;
    for &(name, mus) in specs {
        let g = group(name);
        let z = z_extension(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(
            z.source.pi1.pi1.invariant_factors().iter().all(|f| f.is_zero()),
            "{name}: extension source must have torsion-free fundamental group"
        );
        for mu_raw in mus {
            let mu = big(mu_raw);
            let mu_prime = lift_mu(&z, &mu).unwrap();
            assert_eq!(z.project_cochar(&mu_prime), mu, "{name}: lift must project back");
            assert_eq!(
                g.rd.reflex_degree(&g.fr, &mu),
                z.source.rd.reflex_degree(&z.source.fr, &mu_prime),
                "{name} mu={mu_raw:?}: lifting changed the reflex degree"
            );
            for c in enumerate_b_g_mu(&g, &mu).unwrap() {
                let c_prime = lift_b(&z, &c, &mu_prime)
                    .unwrap_or_else(|e| panic!("{name} mu={mu_raw:?}: {e}"));
                assert_eq!(z.project_rat(&c_prime.newton), c.newton);
                assert_eq!(z.project_kappa(&c_prime.kappa), c.kappa);
                assert_eq!(
                    is_hn_irreducible(&z.source, &c_prime, &mu_prime).unwrap(),
                    is_hn_irreducible(&g, &c, &mu).unwrap(),
                    "{name} mu={mu_raw:?} nu={:?}: irreducibility must transfer",
                    c.newton
                );
                lifted_classes += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}, budget 5s");
    println!(
        "criterion 6 (central extensions lift classes faithfully): PASS \
         ({lifted_classes} classes across {} groups, {elapsed:?})",
        specs.len()
    );
}

// --- criterion 7: admissible sets in the extended affine Weyl group ----------

fn weyl_matrices(g: &Group) -> Vec<IntMat> {
    let flatten = |m: &IntMat| -> Vec<BigInt> {
        let mut v = Vec::with_capacity(m.rows * m.cols);
        for i in 0..m.rows {
            for j in 0..m.cols {
                v.push(m[(i, j)].clone());
            }
        }
        v
    };
    let mut seen = BTreeSet::new();
    let mut out = vec![IntMat::identity(g.rd.rank)];
    seen.insert(flatten(&out[0]));
    let mut frontier = out.clone();
    while let Some(m) = frontier.pop() {
        for si in 0..g.rd.simple_indices.len() {
            let next = m.mul(&g.rd.reflection_matrix(si));
            if seen.insert(flatten(&next)) {
                out.push(next.clone());
                frontier.push(next);
            }
        }
    }
    out
}

/// All box translations paired with all finite Weyl parts: a finite ball that
/// contains every element below a translation by a vector with entries in
/// [-bound, bound].
fn weyl_ball(g: &Group, bound: i64) -> Vec<ExtendedAffineWeylElement> {
    let mats = weyl_matrices(g);
    let width = (2 * bound + 1) as u64;
    let mut out = Vec::new();
    for code in 0..width.pow(g.rd.rank as u32) {
        let lam: Vec<BigInt> = (0..g.rd.rank)
            .map(|i| BigInt::from(((code / width.pow(i as u32)) % width) as i64 - bound))
            .collect();
        for m in &mats {
            out.push(affine_weyl::element(g, &lam, m.clone()).unwrap());
        }
    }
    out
}

fn orbit_translation_keys(g: &Group, mu: &[BigInt]) -> BTreeSet<Vec<BigInt>> {
    g.rd
        .weyl_orbit(&RatVec::from_int(mu))
        .iter()
        .map(|p| {
            let lam = p.as_int().expect("integral orbit");
            translation_element(g, &lam).unwrap().key()
        })
        .collect()
}

#[test]
fn criterion_7_admissible_sets_are_correct_and_monotone() {
    // Exact comparison against a Bruhat-ball brute force: an element is
    // admissible iff it sits below some orbit translation.
    for (name, mu_raw, expected) in [
        ("GL(2)", vec![1i64, 0], Some(3usize)),
        ("GL(2)", vec![1, 1], Some(1)),
        ("GL(3)", vec![1, 1, 0], None),
    ] {
        let g = group(name);
        let mu = big(&mu_raw);
        let adm = admissible_set(&g, &mu).unwrap();
        if let Some(n) = expected {
            assert_eq!(adm.len(), n, "{name} mu={mu_raw:?}: wrong cardinality");
        }
        let adm_keys: BTreeSet<Vec<BigInt>> = adm.iter().map(|x| x.key()).collect();
        assert_eq!(adm_keys.len(), adm.len(), "{name}: duplicate admissible elements");
        let targets: Vec<_> = g
            .rd
            .weyl_orbit(&RatVec::from_int(&mu))
            .iter()
            .map(|p| translation_element(&g, &p.as_int().unwrap()).unwrap())
            .collect();
        let mut brute = BTreeSet::new();
        for x in weyl_ball(&g, 2) {
            if targets.iter().any(|t| bruhat_leq(&g, &x, t).unwrap()) {
                brute.insert(x.key());
            }
        }
        assert_eq!(adm_keys, brute, "{name} mu={mu_raw:?}: brute-force ball disagrees");
    }

    // Downward closure on sampled pairs: anything below an admissible element
    // is admissible. Random ball elements rarely land below a short element,
    // so keep drawing until fifty comparable pairs per instance have been
    // exercised.
    let mut rng = XorShift::new(0x0123_4567_89ab_cdef);
    let mut comparable = 0usize;
    for (name, mu_raw) in [("GL(2)", vec![2i64, 0]), ("GL(3)", vec![1, 1, 0])] {
        let g = group(name);
        let mu = big(&mu_raw);
        let adm = admissible_set(&g, &mu).unwrap();
        let adm_keys: BTreeSet<Vec<BigInt>> = adm.iter().map(|x| x.key()).collect();
        let ball = weyl_ball(&g, 2);
        let mut hits = 0usize;
        let mut attempts = 0usize;
        while hits < 50 {
            attempts += 1;
            assert!(attempts < 20_000, "{name}: sampling starved at {hits} comparable pairs");
            let x = &ball[rng.below(ball.len() as u64) as usize];
            let y = &adm[rng.below(adm.len() as u64) as usize];
            if bruhat_leq(&g, x, y).unwrap() {
                hits += 1;
                assert!(
                    adm_keys.contains(&x.key()),
                    "{name} mu={mu_raw:?}: closure fails below {:?}",
                    y.key()
                );
            }
        }
        comparable += hits;
    }
    assert_eq!(comparable, 100);

    // The maximal admissible elements are exactly the orbit translations.
    for (name, mu_raw) in [
        ("GL(2)", vec![2i64, 0]),
        ("GL(3)", vec![1, 1, 0]),
        ("Sp(4)", vec![1, 0]),
    ] {
        let g = group(name);
        let mu = big(&mu_raw);
        let adm = admissible_set(&g, &mu).unwrap();
        let maximal: BTreeSet<Vec<BigInt>> = adm
            .iter()
            .filter(|x| {
                !adm.iter().any(|y| {
                    y.key() != x.key() && bruhat_leq(&g, x, y).unwrap()
                })
            })
            .map(|x| x.key())
            .collect();
        assert_eq!(
            maximal,
            orbit_translation_keys(&g, &mu),
            "{name} mu={mu_raw:?}: maximal elements are not the orbit translations"
        );
    }

    // Monotonicity in the dominance order, on pairs validated in place by
    // expanding the difference over the simple coroots.
    let pairs: &[(&str, &[i64], &[i64])] = &[
        ("GL(2)", &[1, 0], &[2, -1]),
        ("GL(2)", &[1, 1], &[2, 0]),
        ("GL(2)", &[2, 0], &[3, -1]),
        ("GL(2)", &[2, 1], &[3, 0]),
        ("GL(2)", &[2, 2], &[3, 1]),
        ("GL(2)", &[0, 0], &[1, -1]),
        ("GL(2)", &[3, 1], &[4, 0]),
        ("GL(2)", &[1, 0], &[3, -2]),
        ("GL(3)", &[1, 1, 0], &[2, 0, 0]),
        ("GL(3)", &[1, 1, 0], &[2, 1, -1]),
        ("GL(3)", &[0, 0, 0], &[1, 0, -1]),
        ("GL(3)", &[1, 0, 0], &[2, 0, -1]),
        ("GL(3)", &[1, 1, 1], &[2, 1, 0]),
        ("GL(3)", &[2, 1, 0], &[3, 0, 0]),
        ("GL(3)", &[2, 1, 0], &[3, 1, -1]),
        ("GL(3)", &[1, 1, 0], &[3, 0, -1]),
        ("Sp(4)", &[1, 0], &[1, 1]),
        ("Sp(4)", &[0, 0], &[1, 1]),
        ("Sp(4)", &[1, 1], &[2, 0]),
        ("Sp(4)", &[0, 0], &[2, 0]),
    ];
    for &(name, lo_raw, hi_raw) in pairs {
        let g = group(name);
        let lo = big(lo_raw);
        let hi = big(hi_raw);
        let diff: Vec<BigInt> = hi.iter().zip(&lo).map(|(a, b)| a - b).collect();
        let (coeffs, central) = g.rd.coroot_expansion(&RatVec::from_int(&diff));
        assert_eq!(
            central,
            RatVec::from_int(&vec![BigInt::zero(); g.rd.rank]),
            "{name}: {lo_raw:?} and {hi_raw:?} differ by a central part"
        );
        assert!(
            coeffs.iter().all(|c| !c.is_negative()),
            "{name}: {lo_raw:?} is not below {hi_raw:?}"
        );
        let small: BTreeSet<Vec<BigInt>> =
            admissible_set(&g, &lo).unwrap().iter().map(|x| x.key()).collect();
        let large: BTreeSet<Vec<BigInt>> =
            admissible_set(&g, &hi).unwrap().iter().map(|x| x.key()).collect();
        assert!(
            small.is_subset(&large),
            "{name}: admissible set of {lo_raw:?} is not inside that of {hi_raw:?}"
        );
    }

    println!(
        "criterion 7 (admissible sets: brute force, closure, maxima, monotonicity): PASS \
         ({comparable} comparable sampled pairs, {} dominance pairs)",
        pairs.len()
    );
}

// --- criterion 8: command-line determinism and frozen outputs ----------------

fn golden_catalog() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("validate-gl2", vec!["--preset", "GL(2)", "validate"]),
        ("pi1-gl1", vec!["--preset", "GL(1)", "pi1"]),
        ("pi1-gl2", vec!["--preset", "GL(2)", "pi1"]),
        ("pi1-gl3", vec!["--preset", "GL(3)", "pi1"]),
        ("pi1-gl4", vec!["--preset", "GL(4)", "pi1"]),
        ("pi1-sl2", vec!["--preset", "SL(2)", "pi1"]),
        ("pi1-sl3", vec!["--preset", "SL(3)", "pi1"]),
        ("pi1-pgl2", vec!["--preset", "PGL(2)", "pi1"]),
        ("pi1-pgl3", vec!["--preset", "PGL(3)", "pi1"]),
        ("pi1-sp4", vec!["--preset", "Sp(4)", "pi1"]),
        ("pi1-sp6", vec!["--preset", "Sp(6)", "pi1"]),
        ("pi1-so5", vec!["--preset", "SO(5)", "pi1"]),
        ("pi1-so6", vec!["--preset", "SO(6)", "pi1"]),
        ("pi1-u3", vec!["--preset", "U(3)", "pi1"]),
        ("pi1-u4", vec!["--preset", "U(4)", "pi1"]),
        ("pi1-res2", vec!["--preset", "Res(2)", "pi1"]),
        ("pi1-res3", vec!["--preset", "Res(3)", "pi1"]),
        ("pi1-sl2xsl2", vec!["--preset", "SL(2)xSL(2)", "pi1"]),
        ("pi1-pgl2-coinv", vec!["--preset", "PGL(2)", "pi1", "--coinvariants"]),
        ("pi1-pgl3-coinv", vec!["--preset", "PGL(3)", "pi1", "--coinvariants"]),
        ("pi1-u3-coinv", vec!["--preset", "U(3)", "pi1", "--coinvariants"]),
        ("pi1-res2-coinv", vec!["--preset", "Res(2)", "pi1", "--coinvariants"]),
        ("pi1-gl2-inv", vec!["--preset", "GL(2)", "pi1", "--invariants"]),
        ("pi1-u3-inv", vec!["--preset", "U(3)", "pi1", "--invariants"]),
        ("pi1-res2-inv", vec!["--preset", "Res(2)", "pi1", "--invariants"]),
        ("bgmu-gl2-10", vec!["--preset", "GL(2)", "bgmu", "--mu", "1,0"]),
        ("bgmu-gl3-110", vec!["--preset", "GL(3)", "bgmu", "--mu", "1,1,0"]),
        ("bgmu-sp4-10", vec!["--preset", "Sp(4)", "bgmu", "--mu", "1,0"]),
        ("bgmu-u3-100", vec!["--preset", "U(3)", "bgmu", "--mu", "1,0,0"]),
        ("bgmu-pgl2-1", vec!["--preset", "PGL(2)", "bgmu", "--mu", "1"]),
        ("bgmu-sl2-1", vec!["--preset", "SL(2)", "bgmu", "--mu", "1"]),
        ("adm-gl2-10", vec!["--preset", "GL(2)", "adm", "--mu", "1,0"]),
        ("adm-gl2-11", vec!["--preset", "GL(2)", "adm", "--mu", "1,1"]),
        ("adm-gl3-100", vec!["--preset", "GL(3)", "adm", "--mu", "1,0,0"]),
        ("adm-sp4-10", vec!["--preset", "Sp(4)", "adm", "--mu", "1,0"]),
        (
            "hn-irred-gl2-basic",
            vec!["--preset", "GL(2)", "hn-irred", "--mu", "1,0", "--nu", "1/2,1/2", "--kappa", "1"],
        ),
        (
            "adlv-pi0-gl2-basic",
            vec!["--preset", "GL(2)", "adlv-pi0", "--mu", "1,0", "--nu", "1/2,1/2", "--kappa", "1"],
        ),
        (
            "adlv-pi0-pgl2-basic",
            vec!["--preset", "PGL(2)", "adlv-pi0", "--mu", "1", "--nu", "0", "--kappa", "1"],
        ),
        (
            "adlv-pi0-sp4-basic",
            vec!["--preset", "Sp(4)", "adlv-pi0", "--mu", "1,0", "--nu", "0,0"],
        ),
        (
            "sht-pi0-gl2-hyperspecial",
            vec![
                "--preset", "GL(2)", "sht-pi0", "--level", "hyperspecial", "--mu", "1,0", "--nu",
                "1/2,1/2", "--kappa", "1",
            ],
        ),
        (
            "sht-pi0-gl2-infinite",
            vec![
                "--preset", "GL(2)", "sht-pi0", "--level", "infinite", "--mu", "1,0", "--nu",
                "1/2,1/2", "--kappa", "1",
            ],
        ),
        (
            "sht-pi0-pgl2-hyperspecial",
            vec![
                "--preset", "PGL(2)", "sht-pi0", "--level", "hyperspecial", "--mu", "1", "--nu",
                "0", "--kappa", "1",
            ],
        ),
        (
            "sht-pi0-u3-hyperspecial",
            vec![
                "--preset", "U(3)", "sht-pi0", "--level", "hyperspecial", "--mu", "1,0,0", "--nu",
                "0,0,0", "--kappa", "1",
            ],
        ),
        ("norm-map-res2", vec!["--preset", "Res(2)", "norm-map", "--mu", "2,1"]),
        (
            "norm-map-res2-geometric",
            vec!["--preset", "Res(2)", "--artin", "geometric", "norm-map", "--mu", "2,1"],
        ),
        ("norm-map-res3", vec!["--preset", "Res(3)", "norm-map", "--mu", "1,0,0"]),
        ("norm-map-gl2", vec!["--preset", "GL(2)", "norm-map", "--mu", "1,0"]),
        ("zext-pgl2", vec!["--preset", "PGL(2)", "zext"]),
        ("zext-pgl3", vec!["--preset", "PGL(3)", "zext"]),
        ("zext-sl3", vec!["--preset", "SL(3)", "zext"]),
        ("zext-so5", vec!["--preset", "SO(5)", "zext"]),
        ("lift-mu-pgl2-1", vec!["--preset", "PGL(2)", "lift-mu", "--mu", "1"]),
        ("lift-mu-pgl3-10", vec!["--preset", "PGL(3)", "lift-mu", "--mu", "1,0"]),
        ("lift-mu-so5-10", vec!["--preset", "SO(5)", "lift-mu", "--mu", "1,0"]),
        (
            "pretty-bgmu-gl2",
            vec!["--preset", "GL(2)", "--format", "pretty", "bgmu", "--mu", "1,0"],
        ),
    ]
}

#[test]
fn criterion_8_cli_output_is_deterministic_and_frozen() {
    let start = Instant::now();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    if update {
        std::fs::create_dir_all(&dir).unwrap();
    }
    let catalog = golden_catalog();
    for (name, args) in &catalog {
        let argv: Vec<&str> = std::iter::once("kottwitz").chain(args.iter().copied()).collect();
        let first = kottwitz_cli::run(argv.clone());
        let second = kottwitz_cli::run(argv);
        assert_eq!(first.code, 0, "{name} failed: {}", first.stderr);
        assert!(first.stderr.is_empty(), "{name} wrote to stderr on success");
        assert_eq!(first.stdout, second.stdout, "{name}: output changed between runs");
        let ext = if args.contains(&"pretty") { "txt" } else { "json" };
        let path = dir.join(format!("{name}.{ext}"));
        if update {
            std::fs::write(&path, &first.stdout).unwrap();
        } else {
            let want = std::fs::read_to_string(&path).unwrap_or_else(|_| {
                panic!("{name}: golden file missing; regenerate with UPDATE_GOLDEN=1")
            });
            assert_eq!(first.stdout, want, "{name}: output drifted from the frozen copy");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}, budget 60s");
    println!(
        "criterion 8 (deterministic, frozen command output): PASS \
         ({} invocations run twice, {elapsed:?})",
        catalog.len()
    );
}
