//! Component sets of moduli of local shtukas: the maximal abelian quotient
//! presented on valuation lattices (directly, or through a central extension
//! by an induced torus when the fundamental group has torsion), the norm and
//! determinant descriptors acting on it, and the component torsor itself —
//! concrete at hyperspecial level, symbolic at infinite level.
//!
//! Everything is materialized on cocharacter lattices. Unit parts of torus
//! points act trivially on components, so all answers factor through the
//! valuation shadow; points of the abelianized group over the base field are
//! never modeled directly.

use crate::abelian::{subgroup_from_ambient_lattice, CanonVec, QuotientPresentation};
use crate::adlv::{canonical_pi1_lift, require_hn_irreducible, TorsorDescription};
use crate::error::Result;
use crate::intmat::{IntMat, IntVec};
use crate::kottwitz::{levi_of, standard_levi, Group, LeviDatum, SigmaConjClass};
use crate::root_datum::{Cocharacter, FrobeniusAction, RootDatum};
use crate::tori::{lift_b, lift_mu, norm_map, z_extension, ZExtension};
use num::{BigInt, Zero};

/// How the maximal abelian quotient is presented.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationMode {
    /// The derived group is simply connected: the cocenter is the
    /// abelianization itself and the quotient map on points is surjective.
    Direct,
    /// Presented through a central extension with torsion-free fundamental
    /// group; the cocenter is the extension's abelianization and the kernel
    /// torus maps in.
    ViaZExtension,
}

/// Sign convention for the reciprocity identification of the Weil group's
/// abelianization: which Frobenius goes to the uniformizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ArtinNormalization {
    #[default]
    Arithmetic,
    Geometric,
}

/// Valuation-lattice presentation of the maximal abelian quotient of the
/// group of rational points.
#[derive(Debug, Clone)]
pub struct GCirclePresentation {
    pub mode: PresentationMode,
    /// The central extension behind the presentation; the identity extension
    /// in direct mode.
    pub extension: ZExtension,
    /// Torus whose cocharacter lattice carries the valuation shadow of the
    /// abelianization: the free fundamental group of the extension source,
    /// with the induced Frobenius.
    pub cocenter: Group,
    /// Cocharacters of the extension source onto cocenter coordinates.
    pub projection: IntMat,
    /// Cocharacters of the kernel torus into cocenter coordinates
    /// (zero-width in direct mode).
    pub kernel_map: IntMat,
}

impl GCirclePresentation {
    /// Quotient of the cocenter lattice by the kernel image. Its invariant
    /// factors recover the fundamental group of the base group, whichever
    /// extension was chosen.
    pub fn cokernel(&self) -> QuotientPresentation {
        QuotientPresentation::new(
            self.cocenter.rd.rank,
            self.kernel_map.columns(),
        )
    }
}

/// Present the maximal abelian quotient: directly when the fundamental group
/// is torsion-free, otherwise through a central extension by an induced
/// torus.
pub fn g_circle_presentation(g: &Group) -> Result<GCirclePresentation> {
    let extension = z_extension(g)?;
    let mode = if extension.is_identity() {
        PresentationMode::Direct
    } else {
        PresentationMode::ViaZExtension
    };
    let source = &extension.source;
    let pi1 = &source.pi1.pi1;
    assert!(pi1.is_torsion_free(), "extension source must have free fundamental group");
    let n = pi1.generator_count();
    let r = source.rd.rank;
    let projection = IntMat::from_columns(
        (0..r)
            .map(|i| {
                let mut e = vec![BigInt::zero(); r];
                e[i] = num::one();
                pi1.project(&e)
            })
            .collect(),
    );
    let projection =
        if n == 0 { IntMat::zero(0, r) } else { projection };
    let cocenter = Group::new(
        RootDatum::torus(n),
        FrobeniusAction::new(source.pi1.induced_action.clone())?,
    )?;
    let kernel_map = if extension.kernel_basis.is_empty() {
        IntMat::zero(n, 0)
    } else {
        IntMat::from_columns(
            extension.kernel_basis.iter().map(|b| projection.mul_vec(b)).collect(),
        )
    };
    // The kernel map intertwines the kernel-coordinate shift with the induced
    // Frobenius on the cocenter.
    debug_assert_eq!(
        kernel_map.mul(&extension.kernel_frobenius().matrix).columns(),
        cocenter.fr.matrix.mul(&kernel_map).columns(),
        "kernel map must be equivariant",
    );
    Ok(GCirclePresentation { mode, extension, cocenter, projection, kernel_map })
}

/// Lattice data of the composite from the reciprocity source into the
/// abelianized group: the norm morphism of a reflex-degree induced torus,
/// followed by the quotient to the cocenter.
#[derive(Debug, Clone)]
pub struct WeilDescriptor {
    /// Degree over the base field of the cocharacter's field of definition.
    pub reflex_degree: usize,
    /// Basis vector k of the induced torus goes to the k-th Frobenius
    /// translate of the lifted cocharacter, inside the extension source.
    pub norm_lattice_map: IntMat,
    /// The cocharacter of the extension source the norm map is built on;
    /// equals the input cocharacter in direct mode.
    pub lifted_cocharacter: Cocharacter,
    pub artin_normalization: ArtinNormalization,
    /// Where the norm lands: the composite into `g_circle.projection` of the
    /// presentation below finishes the descriptor.
    pub g_circle: GCirclePresentation,
}

impl WeilDescriptor {
    /// The finished composite: induced-torus coordinates to cocenter
    /// coordinates.
    pub fn composite(&self) -> IntMat {
        self.g_circle.projection.mul(&self.norm_lattice_map)
    }
}

/// Assemble the reciprocity descriptor of a dominant cocharacter.
pub fn weil_descriptor(
    g: &Group,
    mu: &Cocharacter,
    artin_normalization: ArtinNormalization,
) -> Result<WeilDescriptor> {
    g.require_dominant(mu)?;
    let g_circle = g_circle_presentation(g)?;
    let lifted = lift_mu(&g_circle.extension, mu)?;
    let reflex_degree = g.rd.reflex_degree(&g.fr, mu);
    let norm_lattice_map = norm_map(&g_circle.extension.source.fr, &lifted)?;
    debug_assert_eq!(
        norm_lattice_map.cols, reflex_degree,
        "lifting must preserve the reflex degree",
    );
    Ok(WeilDescriptor {
        reflex_degree,
        norm_lattice_map,
        lifted_cocharacter: lifted,
        artin_normalization,
        g_circle,
    })
}

/// Sum of the Frobenius orbit of a cocharacter, as a fundamental-group
/// element: always fixed by the induced Frobenius.
pub fn frobenius_orbit_sum(g: &Group, mu: &Cocharacter) -> CanonVec {
    let s = g.rd.reflex_degree(&g.fr, mu);
    let mut acc = vec![BigInt::zero(); g.rd.rank];
    let mut cur = mu.clone();
    for _ in 0..s {
        for (slot, x) in acc.iter_mut().zip(cur.iter()) {
            *slot += x;
        }
        cur = g.fr.apply(&cur);
    }
    let class = g.pi1.pi1.project(&acc);
    debug_assert!(g.pi1.is_invariant(&class), "orbit sum must be fixed");
    class
}

/// The translation induced on hyperspecial-level components by a Frobenius
/// lift: the fundamental-group class of the orbit sum of the cocharacter,
/// negated under the geometric normalization.
pub fn frobenius_translation_class(
    g: &Group,
    c: &SigmaConjClass,
    mu: &Cocharacter,
    artin_normalization: ArtinNormalization,
) -> Result<CanonVec> {
    require_hn_irreducible(g, c, mu)?;
    let class = frobenius_orbit_sum(g, mu);
    Ok(match artin_normalization {
        ArtinNormalization::Arithmetic => class,
        ArtinNormalization::Geometric => g.pi1.pi1.neg(&class),
    })
}

/// Lattice data of the determinant morphism on the twisted centralizer of a
/// class: the centralizer Levi, its lift through the extension, and the
/// composite from the Levi's valuation shadow into the cocenter.
#[derive(Debug, Clone)]
pub struct DetDescriptor {
    /// Centralizer Levi of the Newton point.
    pub levi: LeviDatum,
    /// The central extension the composite routes through; identity in
    /// direct mode.
    pub extension: ZExtension,
    /// The same Levi inside the extension source (same simple positions).
    pub lifted_levi: LeviDatum,
    /// Fundamental group of the lifted Levi: the valuation shadow the
    /// centralizer's points report to.
    pub levi_shadow: QuotientPresentation,
    /// Extension-source cocharacters to cocenter coordinates; kills the
    /// lifted Levi's coroots, hence well-defined on `levi_shadow`.
    pub composite: IntMat,
    /// Action convention: the torsor translates by the inverse of the value
    /// this descriptor reports.
    pub inverse_translation: bool,
}

/// Assemble the determinant descriptor of a class.
pub fn jb_descriptor(g: &Group, c: &SigmaConjClass) -> Result<DetDescriptor> {
    let levi = levi_of(g, &c.newton)?;
    let g_circle = g_circle_presentation(g)?;
    let source = &g_circle.extension.source;
    let lifted_levi = standard_levi(&source.rd, &source.fr, &levi.simple_positions);
    let levi_shadow = QuotientPresentation::new(
        source.rd.rank,
        lifted_levi.datum.coroots.clone(),
    );
    let composite = g_circle.projection.clone();
    debug_assert!(
        lifted_levi.datum.coroots.iter().all(|cr| {
            composite.mul_vec(cr).iter().all(|x| x.is_zero())
        }),
        "composite must kill the Levi's coroots",
    );
    Ok(DetDescriptor {
        levi,
        extension: g_circle.extension,
        lifted_levi,
        levi_shadow,
        composite,
        inverse_translation: true,
    })
}

/// Level structure at which components are materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Hyperspecial,
    Infinite,
}

/// Component description of the moduli space attached to a class and a
/// cocharacter: action descriptors at every level, and a concrete torsor at
/// hyperspecial level. At infinite level the components form a torsor under
/// the abelianized point group, which is not finite data; only the
/// descriptors are returned there.
#[derive(Debug, Clone)]
pub struct ShtukaComponents {
    pub level: Level,
    /// Target of all three actions: the abelianized group's presentation.
    pub g_circle: GCirclePresentation,
    /// Action of the Weil group through reciprocity and the norm.
    pub weil: WeilDescriptor,
    /// Action of the twisted centralizer through its determinant.
    pub jb: DetDescriptor,
    /// Concrete component torsor at hyperspecial level, None at infinite
    /// level.
    pub torsor: Option<TorsorDescription>,
    /// Translation of the hyperspecial components under a Frobenius lift, in
    /// fundamental-group coordinates; None at infinite level.
    pub frobenius_translation: Option<CanonVec>,
}

/// Components of the moduli space: requires membership of the class in the
/// cocharacter's decency set and irreducibility of the pair.
///
/// The hyperspecial torsor is computed through the extension on purpose: the
/// acting group is the image of the extension source's fixed classes and the
/// label descends from the lifted class, so agreement with the direct
/// affine-flag computation is a genuine cross-check.
pub fn pi0_sht(
    g: &Group,
    c: &SigmaConjClass,
    mu: &Cocharacter,
    level: Level,
    artin_normalization: ArtinNormalization,
) -> Result<ShtukaComponents> {
    require_hn_irreducible(g, c, mu)?;
    let weil = weil_descriptor(g, mu, artin_normalization)?;
    let g_circle = weil.g_circle.clone();
    let jb = jb_descriptor(g, c)?;
    let (torsor, frobenius_translation) = match level {
        Level::Infinite => (None, None),
        Level::Hyperspecial => {
            let ext = &g_circle.extension;
            let mu_lift = lift_mu(ext, mu)?;
            let c_lift = lift_b(ext, c, &mu_lift)?;
            // Fixed classes upstairs, pushed to ambient lattice vectors of
            // the base: their span is the full fixed subgroup downstairs.
            let source = &ext.source;
            let upstairs = source.pi1.invariants(&source.fr);
            let pushed: Vec<IntVec> = upstairs
                .generators
                .iter()
                .map(|u| ext.project_cochar(&source.pi1.pi1.lift(u)))
                .collect();
            let acting_group = subgroup_from_ambient_lattice(&g.pi1.pi1, &pushed);
            let kappa_down = ext.project_kappa(&c_lift.kappa);
            let coset_label = canonical_pi1_lift(g, &kappa_down);
            let cardinality = acting_group.order();
            let torsor = TorsorDescription {
                acting_group,
                coset_label,
                canonical_choice: true,
                cardinality,
            };
            let translation =
                frobenius_translation_class(g, c, mu, artin_normalization)?;
            (Some(torsor), Some(translation))
        }
    };
    Ok(ShtukaComponents { level, g_circle, weil, jb, torsor, frobenius_translation })
}
