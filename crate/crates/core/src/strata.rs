//! The combinatorial chart of algebraic stability conditions: strata
//! indexed by a t-structure and a subset of its heart's simples,
//! charge-cell classification with exact rational coordinates, the frontier
//! relation, interval structure, and the chart-reconstruction data.
//!
//! No masses, phases or metrics appear here: the chart is the cell/poset
//! combinatorics that carries the homotopy type.

use crate::dynkin::DimVec;
use crate::hearts::FundHeart;
use crate::linalg::{rat, QMat, Rat};
use crate::repq::IndecObject;
use crate::tiltp::{strata_between, ConeElement, TiltpError, Window};
use crate::topo::FinitePoset;
use num::{Signed, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum StrataError {
    #[error("charge vector has length {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("stratum subset contains a non-simple object")]
    NotSimple,
    #[error(transparent)]
    Tiltp(#[from] TiltpError),
}

/// Exact complex number: rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Charge {
    pub re: Rat,
    pub im: Rat,
}

impl Charge {
    pub fn new(re: i64, im: i64) -> Self {
        Charge { re: rat(re), im: rat(im) }
    }

    pub fn from_rationals(re: Rat, im: Rat) -> Self {
        Charge { re, im }
    }
}

/// Central charges of the simples of a heart, in canonical simple order.
pub type ChargeVector = Vec<Charge>;

/// Where a charge vector sits relative to the cells over a fixed heart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChargeClass {
    /// Every charge in the open upper half plane or on the strictly
    /// negative real axis; the subset records the simples on the axis.
    Interior(Vec<usize>),
    /// On the closure only: all imaginary parts nonnegative, but some
    /// vanishing one has a nonnegative real part. The subset is the full
    /// set of simples with vanishing imaginary part.
    BoundaryFace(Vec<usize>),
    /// Some strictly negative imaginary part.
    Outside,
}

/// Classify a charge vector for the cell decomposition of S_D: interior of
/// the stratum S_{D,I}, a boundary face, or outside the closed cell.
pub fn classify_charge(
    heart: &FundHeart,
    z: &ChargeVector,
) -> Result<ChargeClass, StrataError> {
    let n = heart.len();
    if z.len() != n {
        return Err(StrataError::DimensionMismatch { got: z.len(), expected: n });
    }
    if z.iter().any(|c| c.im.is_negative()) {
        return Ok(ChargeClass::Outside);
    }
    let on_axis: Vec<usize> =
        (0..n).filter(|&i| z[i].im.is_zero()).collect();
    if on_axis.iter().all(|&i| z[i].re.is_negative()) {
        Ok(ChargeClass::Interior(on_axis))
    } else {
        Ok(ChargeClass::BoundaryFace(on_axis))
    }
}

/// Sample an exact rational charge from the open cell of S_{D,I}: upper
/// half plane off I, strictly negative real axis on I.
pub fn sample_interior_charge(
    n: usize,
    subset: &[usize],
    rng: &mut impl Rng,
) -> ChargeVector {
    (0..n)
        .map(|i| {
            if subset.contains(&i) {
                Charge { re: rat(-(rng.gen_range(1..=1000))), im: rat(0) }
            } else {
                Charge {
                    re: rat(rng.gen_range(-1000..=1000)),
                    im: rat(rng.gen_range(1..=1000)),
                }
            }
        })
        .collect()
}

/// A stratum in a window: a node (the t-structure) and a subset of the
/// simples of its heart.
#[derive(Clone, Debug)]
pub struct Stratum {
    pub node: usize,
    pub subset: Vec<IndecObject>,
}

impl Stratum {
    pub fn codim(&self) -> usize {
        self.subset.len()
    }
}

/// The frontier relation: S_{E,J} lies in the closure of S_{D,I} iff
/// E <= D <= L_I D <= L_J E in the tilting order.
pub fn frontier(
    w: &mut Window,
    lower: &Stratum,
    upper: &Stratum,
) -> Result<bool, StrataError> {
    w.ensure_closure();
    if !w.leq(lower.node, upper.node) {
        return Ok(false);
    }
    let li_d = w.tilt_multi(upper.node, &upper.subset)?;
    let lj_e = w.tilt_multi(lower.node, &lower.subset)?;
    Ok(w.leq(li_d, lj_e))
}

/// The strata poset of the region between two comparable nodes: all (E, J)
/// with lo <= E and L_J E <= hi, in the closure order.
pub fn strata_poset(
    w: &mut Window,
    lo: usize,
    hi: usize,
) -> Result<(Vec<ConeElement>, FinitePoset), StrataError> {
    Ok(strata_between(w, &[lo], hi)?)
}

/// The closed interval between two strata in the poset of strata, plus the
/// Boolean-interval comparison of the closed-interval lemma.
#[derive(Clone, Debug)]
pub struct IntervalReport {
    /// Elements (node, subset) of the interval.
    pub elements: Vec<Stratum>,
    pub poset: FinitePoset,
    /// Rank of the Boolean interval [I, K]: #J - #I.
    pub boolean_rank: usize,
    /// The interval order-embeds into [I, K]^op respecting codimension.
    pub embeds: bool,
    /// The embedding is onto: the locally-closed case.
    pub is_boolean: bool,
}

pub fn closed_interval(
    w: &mut Window,
    lower: &Stratum,
    upper: &Stratum,
) -> Result<IntervalReport, StrataError> {
    w.ensure_closure();
    if !frontier(w, lower, upper)? {
        return Ok(IntervalReport {
            elements: Vec::new(),
            poset: FinitePoset::from_relation(0, |_, _| false).expect("empty"),
            boolean_rank: 0,
            embeds: false,
            is_boolean: false,
        });
    }
    // candidate elements: strata (E', J') with lower <= (E',J') <= upper
    let mut elements = Vec::new();
    for node in w.interval(lower.node, upper.node) {
        let simples: Vec<IndecObject> =
            w.node(node).heart.simples().iter().map(|s| s.obj.clone()).collect();
        let n = simples.len();
        for mask in 0u32..(1 << n) {
            let subset: Vec<IndecObject> = (0..n)
                .filter(|&k| mask & (1 << k) != 0)
                .map(|k| simples[k].clone())
                .collect();
            let el = Stratum { node, subset };
            if w.tilt_multi(el.node, &el.subset).is_err() {
                continue;
            }
            if frontier(w, lower, &el)? && frontier(w, &el, upper)? {
                elements.push(el);
            }
        }
    }
    let poset = FinitePoset::from_relation(elements.len(), |a, b| {
        let (ea, eb) = (elements[a].clone(), elements[b].clone());
        frontier(w, &ea, &eb).unwrap_or(false)
    })
    .map_err(TiltpError::from)?;
    let boolean_rank = lower.codim() - upper.codim();
    let embeds = boolean_embedding_exists(&elements, &poset, upper.codim(), boolean_rank);
    let is_boolean = embeds && elements.len() == 1usize << boolean_rank;
    Ok(IntervalReport { elements, poset, boolean_rank, embeds, is_boolean })
}

/// Search for an order-reversing, codimension-graded injection of the
/// interval into the Boolean lattice of the given rank.
fn boolean_embedding_exists(
    elements: &[Stratum],
    poset: &FinitePoset,
    base_codim: usize,
    rank: usize,
) -> bool {
    if rank >= 32 {
        return false;
    }
    let subsets: Vec<u32> = (0u32..(1 << rank)).collect();
    let mut assignment: Vec<Option<u32>> = vec![None; elements.len()];
    // assign elements in order of decreasing codimension so the order
    // constraints bind early
    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(elements[i].codim()));
    fn rec(
        pos: usize,
        order: &[usize],
        elements: &[Stratum],
        poset: &FinitePoset,
        base_codim: usize,
        subsets: &[u32],
        assignment: &mut Vec<Option<u32>>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let i = order[pos];
        let need = elements[i].codim() - base_codim;
        for &s in subsets {
            if s.count_ones() as usize != need {
                continue;
            }
            if assignment.iter().any(|a| *a == Some(s)) {
                continue;
            }
            // order-reversal against already assigned elements
            let ok = (0..elements.len()).all(|j| {
                let Some(t) = assignment[j] else { return true };
                let le_ij = poset.leq(i, j);
                let le_ji = poset.leq(j, i);
                // i <= j in the strata order must give s >= t, and dually
                (!le_ij || (s & t == t)) && (!le_ji || (t & s == s))
            });
            if ok {
                assignment[i] = Some(s);
                if rec(pos + 1, order, elements, poset, base_codim, subsets, assignment) {
                    return true;
                }
                assignment[i] = None;
            }
        }
        false
    }
    rec(0, &order, elements, poset, base_codim, &subsets, &mut assignment)
}

/// The chart data of a stratum: the ordered K-classes of the heart simples
/// (with the sign rule for shifts) and the marked subset.
pub fn chart_basis(
    heart: &FundHeart,
    subset: &[IndecObject],
) -> Result<(Vec<DimVec>, Vec<usize>), StrataError> {
    let classes: Vec<DimVec> = heart.simples().iter().map(|s| s.obj.k_class()).collect();
    let mut marks = Vec::new();
    for s in subset {
        let Some(i) = heart.position_of(s) else {
            return Err(StrataError::NotSimple);
        };
        marks.push(i);
    }
    marks.sort_unstable();
    // emitted classes are always a unimodular basis
    let m = QMat::from_int_rows(&classes.iter().map(|c| c.0.clone()).collect::<Vec<_>>());
    let det = m.determinant();
    debug_assert!(det == rat(1) || det == rat(-1));
    Ok((classes, marks))
}

/// CSV rows (braid, heart_key, subset, codim) for a strata table.
pub fn strata_table_csv(
    ctx: &crate::hearts::CyContext,
    w: &Window,
    elements: &[ConeElement],
) -> String {
    let mut out = String::from("braid,heart,subset,codim\n");
    for el in elements {
        let node = w.node(el.node);
        let heart: Vec<String> =
            node.heart.simples().iter().map(|s| format!("{}", s.obj)).collect();
        let subset: Vec<String> = el.subset.iter().map(|s| format!("{s}")).collect();
        out.push_str(&format!(
            "\"{}\",\"{}\",\"{}\",{}\n",
            ctx.braid.display(&node.braid),
            heart.join(" "),
            subset.join(" "),
            el.subset.len()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{Family, Quiver};
    use crate::hearts::{standard_heart, CyContext};
    use crate::repq::RepCat;
    use crate::tiltp::{shift_down, Budget, Node, Prune};
    use std::sync::Arc;

    fn ctx(fam: Family, rank: usize, n_cy: i32) -> CyContext {
        let rep = Arc::new(RepCat::new(Quiver::standard(fam, rank).unwrap()));
        CyContext::new(rep, n_cy)
    }

    #[test]
    fn classify_examples() {
        let c = ctx(Family::A, 2, 3);
        let h = standard_heart(&c);
        let z = vec![Charge::new(0, 1), Charge::new(0, 1)];
        assert_eq!(classify_charge(&h, &z).unwrap(), ChargeClass::Interior(vec![]));
        let z = vec![Charge::new(-1, 0), Charge::new(0, 1)];
        assert_eq!(classify_charge(&h, &z).unwrap(), ChargeClass::Interior(vec![0]));
        let z = vec![Charge::new(1, 0), Charge::new(0, 1)];
        assert_eq!(classify_charge(&h, &z).unwrap(), ChargeClass::BoundaryFace(vec![0]));
        let z = vec![Charge::new(0, -1), Charge::new(0, 1)];
        assert_eq!(classify_charge(&h, &z).unwrap(), ChargeClass::Outside);
        assert!(classify_charge(&h, &vec![Charge::new(0, 1)]).is_err());
    }

    #[test]
    fn classify_round_trip_sampled() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let c = ctx(Family::A, 3, 3);
        let h = standard_heart(&c);
        for _ in 0..200 {
            let k = rng.gen_range(0..=3usize);
            let mut subset: Vec<usize> = (0..3).collect();
            for _ in 0..(3 - k) {
                let del = rng.gen_range(0..subset.len());
                subset.remove(del);
            }
            let z = sample_interior_charge(3, &subset, &mut rng);
            let got = classify_charge(&h, &z).unwrap();
            let mut expect = subset.clone();
            expect.sort_unstable();
            assert_eq!(got, ChargeClass::Interior(expect));
        }
    }

    #[test]
    fn frontier_examples() {
        let c = ctx(Family::A, 2, 3);
        let mut w = Window::explore(&c, Node::start(&c), 5, Prune::MinShift(0), Budget::default())
            .unwrap();
        w.ensure_closure();
        let s1 = IndecObject::new(DimVec(vec![1, 0]), 0);
        let s2 = IndecObject::new(DimVec(vec![0, 1]), 0);
        // (D, {s}) is in the closure of (D, {})
        let lower = Stratum { node: 0, subset: vec![s1.clone()] };
        let upper = Stratum { node: 0, subset: vec![] };
        assert!(frontier(&mut w, &lower, &upper).unwrap());
        // wrong direction fails
        let (t1, _) = w.tilt_target(0, &s1).unwrap();
        let (t2, _) = w.tilt_target(0, &s2).unwrap();
        let top = w.join(t1, t2).unwrap();
        let lower2 = Stratum { node: top, subset: vec![] };
        assert!(!frontier(&mut w, &lower2, &upper).unwrap());
        // the pentagon's intermediate node covers the codim-2 stratum at D
        let lower3 = Stratum { node: 0, subset: vec![s1.clone(), s2.clone()] };
        for mid in 0..w.len() {
            if w.depth_of(mid) == 2 && mid != top {
                let upper3 = Stratum { node: mid, subset: vec![] };
                // mid is D' or D[-1]; in both cases the frontier holds iff
                // L_{J}D >= mid, which is true since L_{s1,s2}D is the top
                let got = frontier(&mut w, &lower3, &upper3).unwrap();
                assert!(got);
            }
        }
    }

    #[test]
    fn interval_boolean_shapes() {
        let c = ctx(Family::A, 3, 3);
        let mut w = Window::explore(&c, Node::start(&c), 7, Prune::MinShift(0), Budget::default())
            .unwrap();
        w.ensure_closure();
        let s1 = IndecObject::new(DimVec(vec![1, 0, 0]), 0);
        let s3 = IndecObject::new(DimVec(vec![0, 0, 1]), 0);
        // [S_{D,{s}}, S_{D,{}}] is a two-element chain
        let lower = Stratum { node: 0, subset: vec![s1.clone()] };
        let upper = Stratum { node: 0, subset: vec![] };
        let r = closed_interval(&mut w, &lower, &upper).unwrap();
        assert_eq!(r.elements.len(), 2);
        assert!(r.embeds && r.is_boolean);
        assert_eq!(r.boolean_rank, 1);
        // two non-adjacent simples: the square gives the Boolean lattice B2
        let lower2 = Stratum { node: 0, subset: vec![s1, s3] };
        let r2 = closed_interval(&mut w, &lower2, &upper).unwrap();
        assert_eq!(r2.boolean_rank, 2);
        assert!(r2.embeds);
        assert!(r2.is_boolean);
        assert_eq!(r2.elements.len(), 4);
    }

    #[test]
    fn purity_of_a2_window() {
        let c = ctx(Family::A, 2, 3);
        let start = Node::start(&c);
        let mut w = Window::explore(&c, start.clone(), 5, Prune::MinShift(0), Budget::default())
            .unwrap();
        w.ensure_closure();
        let top = shift_down(&c, &start, Budget::default()).unwrap();
        let hi = w.index_of(&top).unwrap();
        let (elements, poset) = strata_poset(&mut w, 0, hi).unwrap();
        assert!(!elements.is_empty());
        assert_eq!(poset.pure_length(), Some(2));
    }

    #[test]
    fn chart_basis_examples() {
        let c = ctx(Family::A, 2, 3);
        let h = standard_heart(&c);
        let (classes, marks) = chart_basis(&h, &[]).unwrap();
        assert_eq!(classes, vec![DimVec(vec![0, 1]), DimVec(vec![1, 0])]);
        assert!(marks.is_empty());
        // a tilted heart picks up the sign rule
        let out = crate::hearts::simple_tilt(
            &c,
            &h,
            &IndecObject::new(DimVec(vec![1, 0]), 0),
            crate::hearts::TiltDirection::Left,
        )
        .unwrap();
        let (classes2, _) = chart_basis(&out.heart, &[]).unwrap();
        assert_eq!(classes2, vec![DimVec(vec![-1, 0]), DimVec(vec![1, 1])]);
    }

    #[test]
    fn frontier_is_transitive_on_samples() {
        let c = ctx(Family::A, 2, 3);
        let mut w = Window::explore(&c, Node::start(&c), 5, Prune::MinShift(0), Budget::default())
            .unwrap();
        w.ensure_closure();
        let top = {
            let t = shift_down(&c, &Node::start(&c), Budget::default()).unwrap();
            w.index_of(&t).unwrap()
        };
        let (elements, poset) = strata_poset(&mut w, 0, top).unwrap();
        for a in 0..poset.len() {
            for b in 0..poset.len() {
                for cc in 0..poset.len() {
                    if poset.leq(a, b) && poset.leq(b, cc) {
                        assert!(poset.leq(a, cc));
                    }
                }
            }
        }
        let _ = elements;
    }
}
