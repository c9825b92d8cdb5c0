//! Fundamental-domain hearts of the principal tilting component of the
//! Calabi-Yau-N category, with simple tilts, the tilting dichotomy and
//! braid-generator decorations.
//!
//! A fundamental heart is given by its n simple objects, all stalks with
//! shifts in `[2-N, 0]`, each decorated by a braid group element. Tilting
//! follows the simple-change formulas: the tilted simple shifts, simples
//! without a degree-1 extension against it survive, and the rest are
//! replaced by their spherical twist. When the tilted simple leaves the
//! window, the heart is pulled back by the inverse twist and the node picks
//! up a braid factor.
//!
//! Twists are computed on the D(Q) side by explicit cones whenever the
//! extension class lives there. A class coming purely from the dual summand
//! of the CY doubling is resolved by its forced K-theory class plus the Hom
//! profiles the twist must satisfy; the resolution fails loudly if the
//! candidate is not unique.

use crate::braid::{BraidElement, BraidGroup};
use crate::dynkin::DimVec;
use crate::linalg::QMat;
use crate::repq::{GradedDims, IndecObject, RepCat, RepqError};
use std::sync::Arc;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum HeartError {
    #[error("object {0} is not a simple of the heart")]
    NotSimple(IndecObject),
    #[error("graded Hom from {s} to {t} is not one-dimensional concentrated: {profile:?}")]
    NotConcentrated { s: IndecObject, t: IndecObject, profile: GradedDims },
    #[error("degree-1 extensions in both directions between {s} and {t}")]
    ExtBothWays { s: IndecObject, t: IndecObject },
    #[error("twist of {t} by {s} did not produce a single indecomposable")]
    TwistNotIndecomposable { s: IndecObject, t: IndecObject },
    #[error("twist pin for K-class {kclass} found {found} candidates")]
    PinFailed { kclass: DimVec, found: usize },
    #[error("heart axioms violated: {0}")]
    AxiomViolation(String),
    #[error(transparent)]
    Repq(#[from] RepqError),
}

/// Shared context: a quiver's derived category plus the braid group of its
/// diagram and the Calabi-Yau dimension N >= 2.
#[derive(Clone)]
pub struct CyContext {
    pub rep: Arc<RepCat>,
    pub braid: BraidGroup,
    pub n_cy: i32,
}

impl CyContext {
    pub fn new(rep: Arc<RepCat>, n_cy: i32) -> Self {
        assert!(n_cy >= 2, "Calabi-Yau dimension must be at least 2");
        let braid = BraidGroup::new(&rep.quiver.diagram);
        CyContext { rep, braid, n_cy }
    }

    pub fn rank(&self) -> usize {
        self.rep.rank()
    }

    /// Lowest shift allowed for a simple of a fundamental heart.
    pub fn min_shift(&self) -> i32 {
        2 - self.n_cy
    }
}

/// A simple object of a heart together with its associated braid generator.
#[derive(Clone, Debug)]
pub struct HeartSimple {
    pub obj: IndecObject,
    pub braid: BraidElement,
}

/// A heart in the fundamental domain, simples in canonical order.
#[derive(Clone, Debug)]
pub struct FundHeart {
    simples: Vec<HeartSimple>,
}

/// Canonical key: the sorted (root, shift) pairs of the simples.
pub type HeartKey = Vec<(DimVec, i32)>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TiltDirection {
    Left,
    Right,
}

/// How each replaced simple was computed; dual pins are worth surfacing
/// because they witness extensions living purely in the dual summand.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
pub struct TwistStats {
    pub cone_route: usize,
    pub dual_pin_route: usize,
}

#[derive(Clone, Debug)]
pub struct TiltOutcome {
    pub heart: FundHeart,
    /// True when the tilt stayed inside the fundamental domain.
    pub stays: bool,
    /// Braid factor picked up by the covering node when `stays` is false:
    /// multiply on the right by this element (already inverted for right
    /// tilts).
    pub braid_factor: Option<BraidElement>,
    pub stats: TwistStats,
}

impl FundHeart {
    pub fn simples(&self) -> &[HeartSimple] {
        &self.simples
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn key(&self) -> HeartKey {
        self.simples.iter().map(|s| (s.obj.root.clone(), s.obj.shift)).collect()
    }

    pub fn position_of(&self, obj: &IndecObject) -> Option<usize> {
        self.simples.iter().position(|s| &s.obj == obj)
    }

    pub fn to_json(&self, ctx: &CyContext) -> serde_json::Value {
        serde_json::json!({
            "simples": self.simples.iter().map(|s| serde_json::json!({
                "root": s.obj.root.0,
                "shift": s.obj.shift,
                "braid": ctx.braid.display(&s.braid),
            })).collect::<Vec<_>>()
        })
    }
}

/// The standard heart: the n simple modules at shift 0, decorated by the
/// standard generators.
pub fn standard_heart(ctx: &CyContext) -> FundHeart {
    let n = ctx.rank();
    let simples = (0..n)
        .map(|i| HeartSimple {
            obj: ctx.rep.simple_object(i),
            braid: ctx.braid.generator(i).expect("vertex in range"),
        })
        .collect();
    let mut h = FundHeart { simples };
    sort_canonical(&mut h);
    h
}

fn sort_canonical(h: &mut FundHeart) {
    h.simples.sort_by(|a, b| a.obj.cmp(&b.obj));
}

/// Check the heart axioms on a finished set of simples and sort it.
fn make_heart(ctx: &CyContext, simples: Vec<HeartSimple>) -> Result<FundHeart, HeartError> {
    let n = ctx.rank();
    if simples.len() != n {
        return Err(HeartError::AxiomViolation(format!(
            "expected {} simples, got {}",
            n,
            simples.len()
        )));
    }
    for s in &simples {
        if s.obj.shift < ctx.min_shift() || s.obj.shift > 0 {
            return Err(HeartError::AxiomViolation(format!(
                "simple {} outside the fundamental window [{}, 0]",
                s.obj,
                ctx.min_shift()
            )));
        }
    }
    // K-classes form a Z-basis
    let km = QMat::from_int_rows(
        &simples.iter().map(|s| s.obj.k_class().0.clone()).collect::<Vec<_>>(),
    );
    let det = km.determinant();
    if det != crate::linalg::rat(1) && det != crate::linalg::rat(-1) {
        return Err(HeartError::AxiomViolation(format!(
            "K-classes are not unimodular (det {det})"
        )));
    }
    // no Homs in degrees <= 0 between distinct simples
    for a in &simples {
        for b in &simples {
            if a.obj == b.obj {
                continue;
            }
            let prof = ctx.rep.hom_cy(&a.obj, &b.obj, ctx.n_cy)?;
            if prof.keys().any(|&d| d <= 0) {
                return Err(HeartError::AxiomViolation(format!(
                    "nonpositive-degree Hom from {} to {}: {:?}",
                    a.obj, b.obj, prof
                )));
            }
        }
    }
    let mut h = FundHeart { simples };
    sort_canonical(&mut h);
    Ok(h)
}

/// Forward twist of `t` by the spherical simple `s` in the CY category,
/// requiring the full graded Hom(s, t) to be one-dimensional.
fn twist_fwd(
    ctx: &CyContext,
    s: &IndecObject,
    t: &IndecObject,
    certain: &[IndecObject],
    stats: &mut TwistStats,
) -> Result<IndecObject, HeartError> {
    let n_cy = ctx.n_cy;
    let prof = ctx.rep.hom_cy(s, t, n_cy)?;
    if prof.is_empty() {
        return Ok(t.clone());
    }
    let (&d, &dim) = prof.iter().next().expect("nonempty");
    if prof.len() != 1 || dim != 1 {
        return Err(HeartError::NotConcentrated { s: s.clone(), t: t.clone(), profile: prof });
    }
    // phi_s(t) = Cone(s[-d] -> t)
    if ctx.rep.hom_d(s, t, d)? == 1 {
        stats.cone_route += 1;
        let parts = ctx.rep.cone_onedim(s, t, d)?;
        if parts.len() != 1 {
            return Err(HeartError::TwistNotIndecomposable { s: s.clone(), t: t.clone() });
        }
        Ok(parts.into_iter().next().expect("one part"))
    } else {
        stats.dual_pin_route += 1;
        let kclass = t.k_class().sub(&s.shifted(-d).k_class());
        // Hom(phi_s t, s) = Hom(t, s[N-1]) and Hom(s, phi_s t) = Hom(s[N-1], t)
        let into_s = ctx.rep.hom_cy(t, &s.shifted(n_cy - 1), n_cy)?;
        let from_s = ctx.rep.hom_cy(&s.shifted(n_cy - 1), t, n_cy)?;
        pin_object(ctx, &kclass, s, &into_s, &from_s, certain)
    }
}

/// Inverse twist of `t` by `s`: phi_s^{-1}(t) = Cone(t -> s[N-e])[-1] for a
/// one-dimensional graded Hom(s, t) concentrated in degree e.
fn twist_bwd(
    ctx: &CyContext,
    s: &IndecObject,
    t: &IndecObject,
    certain: &[IndecObject],
    stats: &mut TwistStats,
) -> Result<IndecObject, HeartError> {
    let n_cy = ctx.n_cy;
    let prof = ctx.rep.hom_cy(s, t, n_cy)?;
    if prof.is_empty() {
        return Ok(t.clone());
    }
    let (&e, &dim) = prof.iter().next().expect("nonempty");
    if prof.len() != 1 || dim != 1 {
        return Err(HeartError::NotConcentrated { s: s.clone(), t: t.clone(), profile: prof });
    }
    let target = s.shifted(n_cy - e);
    if ctx.rep.hom_d(t, &target, 0)? == 1 {
        stats.cone_route += 1;
        let parts = ctx.rep.cone_onedim(t, &target, 0)?;
        if parts.len() != 1 {
            return Err(HeartError::TwistNotIndecomposable { s: s.clone(), t: t.clone() });
        }
        Ok(parts.into_iter().next().expect("one part").shifted(-1))
    } else {
        stats.dual_pin_route += 1;
        let kclass = t.k_class().sub(&target.k_class());
        // Hom(phi^-1 t, s) = Hom(t, s[1-N]) and Hom(s, phi^-1 t) = Hom(s[1-N], t)
        let into_s = ctx.rep.hom_cy(t, &s.shifted(1 - n_cy), n_cy)?;
        let from_s = ctx.rep.hom_cy(&s.shifted(1 - n_cy), t, n_cy)?;
        pin_object(ctx, &kclass, s, &into_s, &from_s, certain)
    }
}

/// Resolve a twist by its forced K-class: the unique stalk with that class
/// whose Hom profiles against the twisting simple match and which satisfies
/// the heart axioms against the already-known simples.
fn pin_object(
    ctx: &CyContext,
    kclass: &DimVec,
    s_probe: &IndecObject,
    into_s: &GradedDims,
    from_s: &GradedDims,
    certain: &[IndecObject],
) -> Result<IndecObject, HeartError> {
    let (root, parity) = if kclass.is_nonneg() && !kclass.is_zero() {
        (kclass.clone(), 0)
    } else if kclass.is_nonpos() && !kclass.is_zero() {
        (kclass.neg(), 1)
    } else {
        return Err(HeartError::PinFailed { kclass: kclass.clone(), found: 0 });
    };
    if !ctx.rep.is_positive_root(&root) {
        return Err(HeartError::PinFailed { kclass: kclass.clone(), found: 0 });
    }
    let n_cy = ctx.n_cy;
    let mut found = Vec::new();
    let lo = -2 * n_cy - 2;
    let hi = 2 * n_cy + 2;
    'cand: for m in lo..=hi {
        if m.rem_euclid(2) != parity {
            continue;
        }
        let x = IndecObject::new(root.clone(), m);
        if &ctx.rep.hom_cy(&x, s_probe, n_cy)? != into_s {
            continue;
        }
        if &ctx.rep.hom_cy(s_probe, &x, n_cy)? != from_s {
            continue;
        }
        for u in certain {
            if *u == x {
                continue 'cand;
            }
            let fwd = ctx.rep.hom_cy(&x, u, n_cy)?;
            let bwd = ctx.rep.hom_cy(u, &x, n_cy)?;
            if fwd.keys().any(|&d| d <= 0) || bwd.keys().any(|&d| d <= 0) {
                continue 'cand;
            }
        }
        found.push(x);
    }
    if found.len() == 1 {
        Ok(found.into_iter().next().expect("one"))
    } else {
        Err(HeartError::PinFailed { kclass: kclass.clone(), found: found.len() })
    }
}

/// Degree-1 extension in the CY double, checking the two-directions bound.
/// For N >= 3 at most one direction may carry an extension; for N = 2 the
/// grading is Serre-symmetric, so both directions agree and the bound is
/// one per direction.
fn ext1_cy(ctx: &CyContext, s: &IndecObject, t: &IndecObject) -> Result<usize, HeartError> {
    let fwd = ctx.rep.hom_cy_d(s, t, ctx.n_cy, 1)?;
    let bwd = ctx.rep.hom_cy_d(t, s, ctx.n_cy, 1)?;
    let violated = if ctx.n_cy >= 3 { fwd + bwd > 1 } else { fwd > 1 || bwd > 1 };
    if violated {
        return Err(HeartError::ExtBothWays { s: s.clone(), t: t.clone() });
    }
    Ok(fwd)
}

/// Simple tilt of a fundamental heart at one of its simples.
///
/// Returns the new fundamental heart, whether the tilt stayed inside the
/// fundamental domain, and the braid factor the covering node picks up when
/// it did not.
pub fn simple_tilt(
    ctx: &CyContext,
    heart: &FundHeart,
    simple: &IndecObject,
    dir: TiltDirection,
) -> Result<TiltOutcome, HeartError> {
    let idx =
        heart.position_of(simple).ok_or_else(|| HeartError::NotSimple(simple.clone()))?;
    let s = heart.simples[idx].clone();
    let others: Vec<HeartSimple> = heart
        .simples
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != idx)
        .map(|(_, hs)| hs.clone())
        .collect();
    let mut stats = TwistStats::default();
    let b = &ctx.braid;
    let bs_inv = b.inverse(&s.braid);

    // split the other simples by the degree-1 extension against s
    let mut touched = Vec::new();
    let mut untouched = Vec::new();
    for t in &others {
        let e1 = match dir {
            TiltDirection::Left => ext1_cy(ctx, &s.obj, &t.obj)?,
            TiltDirection::Right => ext1_cy(ctx, &t.obj, &s.obj)?,
        };
        if e1 > 0 {
            touched.push(t.clone());
        } else {
            untouched.push(t.clone());
        }
    }

    match dir {
        TiltDirection::Left => {
            let stays = s.obj.shift >= 3 - ctx.n_cy;
            if stays {
                // simples: s[-1], untouched, phi_s(touched)
                let mut entries =
                    vec![HeartSimple { obj: s.obj.shifted(-1), braid: s.braid.clone() }];
                entries.extend(untouched.iter().cloned());
                let mut certain: Vec<IndecObject> =
                    entries.iter().map(|hs| hs.obj.clone()).collect();
                for t in &touched {
                    let obj = twist_fwd(ctx, &s.obj, &t.obj, &certain, &mut stats)?;
                    certain.push(obj.clone());
                    let braid =
                        b.multiply(&b.multiply(&s.braid, &t.braid), &bs_inv);
                    entries.push(HeartSimple { obj, braid });
                }
                Ok(TiltOutcome {
                    heart: make_heart(ctx, entries)?,
                    stays: true,
                    braid_factor: None,
                    stats,
                })
            } else {
                // pull back by phi_s^{-1}: s goes to s[N-2], touched return to
                // themselves, untouched are inverse-twisted
                debug_assert_eq!(s.obj.shift, 2 - ctx.n_cy);
                let mut entries = vec![HeartSimple {
                    obj: s.obj.shifted(ctx.n_cy - 2),
                    braid: s.braid.clone(),
                }];
                entries.extend(touched.iter().cloned());
                let mut certain: Vec<IndecObject> =
                    entries.iter().map(|hs| hs.obj.clone()).collect();
                for t in &untouched {
                    let obj = twist_bwd(ctx, &s.obj, &t.obj, &certain, &mut stats)?;
                    certain.push(obj.clone());
                    let braid = b.multiply(&b.multiply(&bs_inv, &t.braid), &s.braid);
                    entries.push(HeartSimple { obj, braid });
                }
                Ok(TiltOutcome {
                    heart: make_heart(ctx, entries)?,
                    stays: false,
                    braid_factor: Some(s.braid.clone()),
                    stats,
                })
            }
        }
        TiltDirection::Right => {
            let stays = s.obj.shift <= -1;
            if stays {
                // simples: s[1], untouched, phi_s^{-1}(touched)
                let mut entries =
                    vec![HeartSimple { obj: s.obj.shifted(1), braid: s.braid.clone() }];
                entries.extend(untouched.iter().cloned());
                let mut certain: Vec<IndecObject> =
                    entries.iter().map(|hs| hs.obj.clone()).collect();
                for t in &touched {
                    let obj = twist_bwd(ctx, &s.obj, &t.obj, &certain, &mut stats)?;
                    certain.push(obj.clone());
                    let braid = b.multiply(&b.multiply(&bs_inv, &t.braid), &s.braid);
                    entries.push(HeartSimple { obj, braid });
                }
                Ok(TiltOutcome {
                    heart: make_heart(ctx, entries)?,
                    stays: true,
                    braid_factor: None,
                    stats,
                })
            } else {
                // push forward by phi_s: s goes to s[2-N], touched return to
                // themselves, untouched are twisted
                debug_assert_eq!(s.obj.shift, 0);
                let mut entries = vec![HeartSimple {
                    obj: s.obj.shifted(2 - ctx.n_cy),
                    braid: s.braid.clone(),
                }];
                entries.extend(touched.iter().cloned());
                let mut certain: Vec<IndecObject> =
                    entries.iter().map(|hs| hs.obj.clone()).collect();
                for t in &untouched {
                    let obj = twist_fwd(ctx, &s.obj, &t.obj, &certain, &mut stats)?;
                    certain.push(obj.clone());
                    let braid = b.multiply(&b.multiply(&s.braid, &t.braid), &bs_inv);
                    entries.push(HeartSimple { obj, braid });
                }
                Ok(TiltOutcome {
                    heart: make_heart(ctx, entries)?,
                    stays: false,
                    braid_factor: Some(bs_inv),
                    stats,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{Family, Quiver};

    fn ctx(fam: Family, rank: usize, n_cy: i32) -> CyContext {
        let rep = Arc::new(RepCat::new(Quiver::standard(fam, rank).unwrap()));
        CyContext::new(rep, n_cy)
    }

    fn obj(root: &[i64], shift: i32) -> IndecObject {
        IndecObject::new(DimVec(root.to_vec()), shift)
    }

    #[test]
    fn standard_hearts() {
        let c = ctx(Family::A, 2, 3);
        let h = standard_heart(&c);
        assert_eq!(h.key(), vec![(DimVec(vec![0, 1]), 0), (DimVec(vec![1, 0]), 0)]);
        let c4 = ctx(Family::D, 4, 2);
        let h4 = standard_heart(&c4);
        assert_eq!(h4.len(), 4);
        for (i, s) in h4.simples().iter().enumerate() {
            let v = s.obj.root.0.iter().position(|&x| x == 1).unwrap();
            assert_eq!(s.braid, c4.braid.generator(v).unwrap(), "simple {i}");
        }
    }

    #[test]
    fn tilt_standard_a2_at_s1() {
        let c = ctx(Family::A, 2, 3);
        let h = standard_heart(&c);
        let out = simple_tilt(&c, &h, &obj(&[1, 0], 0), TiltDirection::Left).unwrap();
        assert!(out.stays);
        assert!(out.braid_factor.is_none());
        assert_eq!(out.heart.key(), vec![(DimVec(vec![1, 0]), -1), (DimVec(vec![1, 1]), 0)]);
        // decorations: b1 on S1[-1], b1 b2 b1^-1 on P1
        let b = &c.braid;
        let b1 = b.generator(0).unwrap();
        let conj = b.parse_word("b1 b2 b1^-1").unwrap();
        for s in out.heart.simples() {
            if s.obj == obj(&[1, 0], -1) {
                assert_eq!(s.braid, b1);
            } else {
                assert_eq!(s.obj, obj(&[1, 1], 0));
                assert_eq!(s.braid, conj);
            }
        }
    }

    #[test]
    fn tilt_standard_a2_at_s2() {
        let c = ctx(Family::A, 2, 3);
        let h = standard_heart(&c);
        let out = simple_tilt(&c, &h, &obj(&[0, 1], 0), TiltDirection::Left).unwrap();
        assert!(out.stays);
        assert_eq!(out.heart.key(), vec![(DimVec(vec![0, 1]), -1), (DimVec(vec![1, 0]), 0)]);
        let b = &c.braid;
        for s in out.heart.simples() {
            if s.obj == obj(&[0, 1], -1) {
                assert_eq!(s.braid, b.generator(1).unwrap());
            } else {
                assert_eq!(s.braid, b.generator(0).unwrap());
            }
        }
    }

    #[test]
    fn a1_bottom_tilt_leaves_domain() {
        let c = ctx(Family::A, 1, 3);
        let h = standard_heart(&c);
        let down = simple_tilt(&c, &h, &obj(&[1], 0), TiltDirection::Left).unwrap();
        assert!(down.stays);
        assert_eq!(down.heart.key(), vec![(DimVec(vec![1]), -1)]);
        let out = simple_tilt(&c, &down.heart, &obj(&[1], -1), TiltDirection::Left).unwrap();
        assert!(!out.stays);
        assert_eq!(out.heart.key(), vec![(DimVec(vec![1]), 0)]);
        assert_eq!(out.braid_factor.unwrap(), c.braid.generator(0).unwrap());
    }

    #[test]
    fn left_then_right_is_identity() {
        for (fam, rank, n_cy) in
            [(Family::A, 2, 3), (Family::A, 3, 3), (Family::A, 2, 2), (Family::D, 4, 3)]
        {
            let c = ctx(fam, rank, n_cy);
            let h = standard_heart(&c);
            // walk a few tilts to get away from the standard heart, then test
            let mut cur = h.clone();
            let mut seen = vec![cur.key()];
            for step in 0..6 {
                let s = cur.simples()[step % cur.len()].obj.clone();
                let out = simple_tilt(&c, &cur, &s, TiltDirection::Left).unwrap();
                // invert the tilt we just did
                let tilted = if out.stays { s.shifted(-1) } else { s.shifted(c.n_cy - 2) };
                let back = simple_tilt(&c, &out.heart, &tilted, TiltDirection::Right).unwrap();
                assert_eq!(back.heart.key(), cur.key(), "{fam}{rank} N={n_cy} step {step}");
                for (a, bsimple) in back.heart.simples().iter().zip(cur.simples()) {
                    assert_eq!(a.braid, bsimple.braid);
                }
                assert_eq!(out.stays, back.stays);
                if !out.stays {
                    let prod = c.braid.multiply(
                        &out.braid_factor.clone().unwrap(),
                        &back.braid_factor.clone().unwrap(),
                    );
                    assert!(prod.is_identity());
                }
                cur = out.heart;
                seen.push(cur.key());
            }
            let _ = seen;
        }
    }

    #[test]
    fn n2_tilts_return_to_standard() {
        // for N=2 every tilt leaves the fundamental domain and returns the
        // standard heart with a braid factor
        let c = ctx(Family::A, 2, 2);
        let h = standard_heart(&c);
        for i in 0..2 {
            let s = h.simples()[i].obj.clone();
            let out = simple_tilt(&c, &h, &s, TiltDirection::Left).unwrap();
            assert!(!out.stays);
            assert_eq!(out.heart.key(), h.key());
            assert!(out.braid_factor.is_some());
        }
    }

    #[test]
    fn decoration_dichotomy_on_reachable_hearts() {
        // corollary of the generating-set construction: decorations commute
        // or braid exactly as the graded Homs predict
        let c = ctx(Family::A, 3, 3);
        let mut frontier = vec![standard_heart(&c)];
        let mut seen = std::collections::HashSet::new();
        seen.insert(frontier[0].key());
        let mut checked = 0;
        for _ in 0..3 {
            let mut next = Vec::new();
            for h in &frontier {
                for s in h.simples() {
                    let out = simple_tilt(&c, h, &s.obj, TiltDirection::Left).unwrap();
                    if seen.insert(out.heart.key()) {
                        next.push(out.heart.clone());
                    }
                }
            }
            for h in &next {
                for a in h.simples() {
                    for b in h.simples() {
                        if a.obj >= b.obj {
                            continue;
                        }
                        let orthogonal = c.rep.hom_cy(&a.obj, &b.obj, c.n_cy).unwrap().is_empty()
                            && c.rep.hom_cy(&b.obj, &a.obj, c.n_cy).unwrap().is_empty();
                        let g = &c.braid;
                        if orthogonal {
                            assert_eq!(
                                g.multiply(&a.braid, &b.braid),
                                g.multiply(&b.braid, &a.braid)
                            );
                        } else {
                            let lhs =
                                g.multiply(&g.multiply(&a.braid, &b.braid), &a.braid);
                            let rhs =
                                g.multiply(&g.multiply(&b.braid, &a.braid), &b.braid);
                            assert_eq!(lhs, rhs);
                        }
                        checked += 1;
                    }
                }
            }
            frontier = next;
        }
        assert!(checked > 10);
    }
}
