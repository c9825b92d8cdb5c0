//! The Artin braid group of an ADE diagram, with the word problem solved by
//! Garside left-greedy normal forms.
//!
//! Simple elements are the Weyl group elements, stored as integer matrices
//! acting on the root lattice; the Garside element is the longest element
//! w0. An element is `Delta^inf * w_1 ... w_r` with every consecutive pair
//! left-weighted, so equality of normal forms is structural equality.

use crate::dynkin::{DimVec, DynkinDiagram};
use std::fmt::Write as _;
use std::sync::Arc;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("vertex {0} out of range 1..={1}")]
    BadVertex(usize, usize),
    #[error("elements belong to different braid groups")]
    GroupMismatch,
    #[error("cannot parse braid word '{0}'")]
    BadWord(String),
}

/// Small square integer matrix, row major, acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SmallMat {
    n: usize,
    a: Vec<i64>,
}

impl SmallMat {
    pub(crate) fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        SmallMat { n, a }
    }

    /// Matrix of the simple reflection s_i on the root lattice.
    pub(crate) fn reflection(diagram: &DynkinDiagram, i: usize) -> Self {
        let n = diagram.rank;
        let mut m = Self::identity(n);
        for j in 0..n {
            m.a[i * n + j] -= diagram.cartan(i, j);
        }
        m
    }

    fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub(crate) fn mul(&self, other: &SmallMat) -> SmallMat {
        let n = self.n;
        let mut a = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x != 0 {
                    for j in 0..n {
                        a[i * n + j] += x * other.get(k, j);
                    }
                }
            }
        }
        SmallMat { n, a }
    }

    pub fn apply(&self, v: &DimVec) -> DimVec {
        let n = self.n;
        DimVec((0..n).map(|i| (0..n).map(|j| self.get(i, j) * v.0[j]).sum()).collect())
    }

    /// Column `j`, i.e. the image of the j-th simple root.
    fn column_nonpos(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.get(i, j) <= 0)
    }
}

/// A Weyl group element together with its inverse matrix.
#[derive(Clone, Debug)]
pub struct WeylElt {
    mat: SmallMat,
    inv: SmallMat,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}
impl Eq for WeylElt {}
impl std::hash::Hash for WeylElt {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}
impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.mat.cmp(&other.mat)
    }
}

impl WeylElt {
    fn identity(n: usize) -> Self {
        WeylElt { mat: SmallMat::identity(n), inv: SmallMat::identity(n) }
    }

    fn is_identity(&self) -> bool {
        self.mat == SmallMat::identity(self.mat.n)
    }

    /// Bitmask of left descents: i with l(s_i w) < l(w).
    fn left_descents(&self) -> u32 {
        let mut mask = 0u32;
        for j in 0..self.mat.n {
            if self.inv.column_nonpos(j) {
                mask |= 1 << j;
            }
        }
        mask
    }

    /// Bitmask of right descents: i with l(w s_i) < l(w).
    fn right_descents(&self) -> u32 {
        let mut mask = 0u32;
        for j in 0..self.mat.n {
            if self.mat.column_nonpos(j) {
                mask |= 1 << j;
            }
        }
        mask
    }

    pub fn matrix(&self) -> &SmallMat {
        &self.mat
    }
}

struct WeylData {
    n: usize,
    refl: Vec<WeylElt>,
    w0: WeylElt,
    longest_len: usize,
    positive_roots: Vec<DimVec>,
    diagram: DynkinDiagram,
}

/// Handle to the braid group Br(Q) of a diagram; cheap to clone.
#[derive(Clone)]
pub struct BraidGroup(Arc<WeylData>);

impl PartialEq for BraidGroup {
    fn eq(&self, other: &Self) -> bool {
        self.0.diagram == other.0.diagram
    }
}

impl std::fmt::Debug for BraidGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BraidGroup({}{})", self.0.diagram.family, self.0.diagram.rank)
    }
}

/// Artin group element in Garside left-greedy normal form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BraidElement {
    inf: i64,
    factors: Vec<WeylElt>,
}

impl BraidElement {
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[WeylElt] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }
}

impl BraidGroup {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        let n = diagram.rank;
        let mut refl = Vec::with_capacity(n);
        for i in 0..n {
            let a = SmallMat::reflection(diagram, i);
            refl.push(WeylElt { mat: a.clone(), inv: a });
        }
        // longest element by greedy right ascents
        let mut w0 = WeylElt::identity(n);
        loop {
            let asc = (!w0.right_descents()) & ((1u32 << n) - 1);
            if asc == 0 {
                break;
            }
            let i = asc.trailing_zeros() as usize;
            w0 = WeylElt { mat: w0.mat.mul(&refl[i].mat), inv: refl[i].inv.mul(&w0.inv) };
        }
        let positive_roots = diagram.positive_roots();
        let longest_len =
            positive_roots.iter().filter(|r| !w0.mat.apply(r).is_nonneg()).count();
        debug_assert_eq!(longest_len, positive_roots.len());
        BraidGroup(Arc::new(WeylData {
            n,
            refl,
            w0,
            longest_len,
            positive_roots,
            diagram: diagram.clone(),
        }))
    }

    pub fn rank(&self) -> usize {
        self.0.n
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.0.diagram
    }

    pub fn identity(&self) -> BraidElement {
        BraidElement { inf: 0, factors: Vec::new() }
    }

    pub fn delta_power(&self, k: i64) -> BraidElement {
        BraidElement { inf: k, factors: Vec::new() }
    }

    /// Standard generator b_i for a 0-based vertex.
    pub fn generator(&self, i: usize) -> Result<BraidElement, BraidError> {
        if i >= self.0.n {
            return Err(BraidError::BadVertex(i + 1, self.0.n));
        }
        Ok(self.normalize(0, vec![self.0.refl[i].clone()]))
    }

    pub fn generator_inverse(&self, i: usize) -> Result<BraidElement, BraidError> {
        Ok(self.inverse(&self.generator(i)?))
    }

    fn tau(&self, w: &WeylElt) -> WeylElt {
        let w0 = &self.0.w0;
        WeylElt { mat: w0.mat.mul(&w.mat).mul(&w0.mat), inv: w0.inv.mul(&w.inv).mul(&w0.inv) }
    }

    fn mul_simple_right(&self, w: &WeylElt, i: usize) -> WeylElt {
        let r = &self.0.refl[i];
        WeylElt { mat: w.mat.mul(&r.mat), inv: r.inv.mul(&w.inv) }
    }

    fn mul_simple_left(&self, i: usize, w: &WeylElt) -> WeylElt {
        let r = &self.0.refl[i];
        WeylElt { mat: r.mat.mul(&w.mat), inv: w.inv.mul(&r.inv) }
    }

    /// Left-greedy normal form of `Delta^inf * factors`.
    fn normalize(&self, mut inf: i64, mut factors: Vec<WeylElt>) -> BraidElement {
        factors.retain(|w| !w.is_identity());
        loop {
            let mut changed = false;
            let mut k = 0;
            while k + 1 < factors.len() {
                // slide generators from factors[k+1] into factors[k] until
                // the pair is left-weighted
                loop {
                    let movable =
                        factors[k + 1].left_descents() & !factors[k].right_descents();
                    if movable == 0 {
                        break;
                    }
                    let i = movable.trailing_zeros() as usize;
                    factors[k] = self.mul_simple_right(&factors[k], i);
                    factors[k + 1] = self.mul_simple_left(i, &factors[k + 1]);
                    changed = true;
                }
                if factors[k + 1].is_identity() {
                    factors.remove(k + 1);
                } else {
                    k += 1;
                }
            }
            if !changed {
                break;
            }
        }
        while factors.first().map(|w| w == &self.0.w0).unwrap_or(false) {
            inf += 1;
            factors.remove(0);
        }
        BraidElement { inf, factors }
    }

    pub fn multiply(&self, a: &BraidElement, b: &BraidElement) -> BraidElement {
        let twist = b.inf.rem_euclid(2) == 1;
        let mut factors: Vec<WeylElt> = a
            .factors
            .iter()
            .map(|w| if twist { self.tau(w) } else { w.clone() })
            .collect();
        factors.extend(b.factors.iter().cloned());
        self.normalize(a.inf + b.inf, factors)
    }

    pub fn inverse(&self, a: &BraidElement) -> BraidElement {
        // (Delta^p u_1 .. u_r)^-1 = u_r^-1 .. u_1^-1 Delta^-p, with
        // u^-1 = Delta^-1 * (w0 u^-1) as a normal-form pair.
        let mut acc = self.identity();
        for u in a.factors.iter().rev() {
            let w = WeylElt {
                mat: self.0.w0.mat.mul(&u.inv),
                inv: u.mat.mul(&self.0.w0.inv),
            };
            let piece = self.normalize(-1, vec![w]);
            acc = self.multiply(&acc, &piece);
        }
        self.multiply(&acc, &self.delta_power(-a.inf))
    }

    /// g x g^-1.
    pub fn conjugate(&self, g: &BraidElement, x: &BraidElement) -> BraidElement {
        self.multiply(&self.multiply(g, x), &self.inverse(g))
    }

    /// Normal form of a word in the generators; letters are `(vertex,
    /// exponent)` with 0-based vertices.
    pub fn from_word(&self, letters: &[(usize, i64)]) -> Result<BraidElement, BraidError> {
        let mut acc = self.identity();
        for &(i, e) in letters {
            if i >= self.0.n {
                return Err(BraidError::BadVertex(i + 1, self.0.n));
            }
            let g = if e >= 0 { self.generator(i)? } else { self.generator_inverse(i)? };
            for _ in 0..e.unsigned_abs() {
                acc = self.multiply(&acc, &g);
            }
        }
        Ok(acc)
    }

    /// Image in the Weyl group (used as an independent oracle in tests).
    pub fn weyl_image(&self, a: &BraidElement) -> SmallMat {
        let mut m = if a.inf.rem_euclid(2) == 1 {
            self.0.w0.mat.clone()
        } else {
            SmallMat::identity(self.0.n)
        };
        for w in &a.factors {
            m = m.mul(&w.mat);
        }
        m
    }

    /// Exponent sum in the abelianization Z.
    pub fn exponent_sum(&self, a: &BraidElement) -> i64 {
        a.inf * self.0.longest_len as i64
            + a.factors.iter().map(|w| self.length(w) as i64).sum::<i64>()
    }

    pub fn length(&self, w: &WeylElt) -> usize {
        self.0.positive_roots.iter().filter(|r| !w.mat.apply(r).is_nonneg()).count()
    }

    /// A reduced word for a Weyl element (smallest left descent first).
    pub fn reduced_word(&self, w: &WeylElt) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        while !cur.is_identity() {
            let d = cur.left_descents();
            debug_assert_ne!(d, 0);
            let i = d.trailing_zeros() as usize;
            word.push(i);
            cur = self.mul_simple_left(i, &cur);
        }
        word
    }

    /// Render as `D^k | w1.w2...` with reduced words for the factors.
    pub fn display(&self, a: &BraidElement) -> String {
        let mut s = format!("D^{} | ", a.inf);
        if a.factors.is_empty() {
            s.push('e');
            return s;
        }
        for (k, w) in a.factors.iter().enumerate() {
            if k > 0 {
                s.push('.');
            }
            for i in self.reduced_word(w) {
                let _ = write!(s, "s{}", i + 1);
            }
        }
        s
    }

    /// Parse a word such as "b1 b2 b1^-1" (1-based vertices).
    pub fn parse_word(&self, text: &str) -> Result<BraidElement, BraidError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let rest = tok.strip_prefix('b').ok_or_else(|| BraidError::BadWord(tok.into()))?;
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (
                    i.parse::<usize>().map_err(|_| BraidError::BadWord(tok.into()))?,
                    e.parse::<i64>().map_err(|_| BraidError::BadWord(tok.into()))?,
                ),
                None => (rest.parse::<usize>().map_err(|_| BraidError::BadWord(tok.into()))?, 1),
            };
            if idx == 0 || idx > self.0.n {
                return Err(BraidError::BadVertex(idx, self.0.n));
            }
            letters.push((idx - 1, exp));
        }
        self.from_word(&letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::Family;

    fn group(fam: Family, rank: usize) -> BraidGroup {
        BraidGroup::new(&DynkinDiagram::new(fam, rank).unwrap())
    }

    #[test]
    fn generators_are_single_factors() {
        let g = group(Family::A, 2);
        let b1 = g.generator(0).unwrap();
        assert_eq!(b1.inf(), 0);
        assert_eq!(b1.canonical_length(), 1);
        let b2 = g.generator(1).unwrap();
        assert_ne!(b1, b2);
        assert!(g.generator(5).is_err());
        // in A1 the generator is Delta itself
        let g1 = group(Family::A, 1);
        let b = g1.generator(0).unwrap();
        assert_eq!((b.inf(), b.canonical_length()), (1, 0));
    }

    #[test]
    fn inverse_cancels() {
        let g = group(Family::A, 2);
        let b1 = g.generator(0).unwrap();
        let prod = g.multiply(&b1, &g.inverse(&b1));
        assert!(prod.is_identity());
    }

    #[test]
    fn a2_delta_shapes() {
        let g = group(Family::A, 2);
        // b1 b2 b1 b2 = Delta * b2
        let w = g.from_word(&[(0, 1), (1, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(w.inf(), 1);
        assert_eq!(w.canonical_length(), 1);
        assert_eq!(g.display(&w), "D^1 | s2");
        // b1^-1 = Delta^-1 * (s1 s2)
        let inv = g.generator_inverse(0).unwrap();
        assert_eq!(inv.inf(), -1);
        assert_eq!(g.display(&inv), "D^-1 | s1s2");
        // b1 b2 b1 = b2 b1 b2 = Delta
        let d = g.from_word(&[(0, 1), (1, 1), (0, 1)]).unwrap();
        assert_eq!((d.inf(), d.canonical_length()), (1, 0));
        let d2 = g.from_word(&[(1, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(d, d2);
    }

    #[test]
    fn presentation_relations() {
        for (fam, rank) in [(Family::A, 3), (Family::D, 4)] {
            let g = group(fam, rank);
            for i in 0..rank {
                for j in i + 1..rank {
                    let adj = g.diagram().adjacent(i, j);
                    let lhs;
                    let rhs;
                    if adj {
                        lhs = g.from_word(&[(i, 1), (j, 1), (i, 1)]).unwrap();
                        rhs = g.from_word(&[(j, 1), (i, 1), (j, 1)]).unwrap();
                    } else {
                        lhs = g.from_word(&[(i, 1), (j, 1)]).unwrap();
                        rhs = g.from_word(&[(j, 1), (i, 1)]).unwrap();
                    }
                    assert_eq!(lhs, rhs, "{fam}{rank} at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn conjugation() {
        let g = group(Family::A, 2);
        let b1 = g.generator(0).unwrap();
        let b2 = g.generator(1).unwrap();
        assert_eq!(g.conjugate(&g.identity(), &b1), b1);
        assert!(g.conjugate(&b1, &g.identity()).is_identity());
        let c = g.conjugate(&b1, &b2);
        let expect = g.from_word(&[(0, 1), (1, 1), (0, -1)]).unwrap();
        assert_eq!(c, expect);
    }

    #[test]
    fn random_words_cancel_and_match_weyl_image() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (fam, rank) in [(Family::A, 2), (Family::A, 3), (Family::D, 4)] {
            let g = group(fam, rank);
            for _ in 0..300 {
                let len = rng.gen_range(0..=12);
                let letters: Vec<(usize, i64)> = (0..len)
                    .map(|_| (rng.gen_range(0..rank), if rng.gen_bool(0.5) { 1 } else { -1 }))
                    .collect();
                let w = g.from_word(&letters).unwrap();
                // w * reverse-inverse(w) = identity
                let ri: Vec<(usize, i64)> =
                    letters.iter().rev().map(|&(i, e)| (i, -e)).collect();
                let wi = g.from_word(&ri).unwrap();
                assert!(g.multiply(&w, &wi).is_identity());
                assert_eq!(g.inverse(&w), wi);
                // Weyl image and exponent sum as independent invariants
                let mut m = SmallMat::identity(rank);
                for &(i, e) in &letters {
                    let r = g.0.refl[i].mat.clone();
                    let _ = e;
                    m = m.mul(&r);
                }
                assert_eq!(g.weyl_image(&w), m);
                let esum: i64 = letters.iter().map(|&(_, e)| e).sum();
                assert_eq!(g.exponent_sum(&w), esum);
            }
        }
    }

    #[test]
    fn relation_rewrite_invariance() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let g = group(Family::A, 3);
        for _ in 0..200 {
            let len = rng.gen_range(2..=10);
            let mut letters: Vec<(usize, i64)> =
                (0..len).map(|_| (rng.gen_range(0..3), 1)).collect();
            let w = g.from_word(&letters).unwrap();
            // apply one defining relation at a random admissible position
            let mut applied = false;
            for k in 0..letters.len().saturating_sub(1) {
                let (i, _) = letters[k];
                let (j, _) = letters[k + 1];
                if i != j && !g.diagram().adjacent(i, j) {
                    letters.swap(k, k + 1);
                    applied = true;
                    break;
                }
                if k + 2 < letters.len() && i != j && g.diagram().adjacent(i, j) {
                    let (i2, _) = letters[k + 2];
                    if i2 == i {
                        letters[k] = (j, 1);
                        letters[k + 1] = (i, 1);
                        letters[k + 2] = (j, 1);
                        applied = true;
                        break;
                    }
                }
            }
            if applied {
                assert_eq!(g.from_word(&letters).unwrap(), w);
            }
        }
    }
}
