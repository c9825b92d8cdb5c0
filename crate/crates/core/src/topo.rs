//! Finite posets, order complexes, and exact integral simplicial homology.
//!
//! Homology is computed from boundary matrices over the integers via Smith
//! normal form, so torsion is certified exactly. Collapsibility is decided
//! by an elementary-collapse search with backtracking under an explicit
//! budget; homology triviality alone is never reported as contractibility.

use crate::linalg::smith_diagonal;
use num::BigInt;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TopoError {
    #[error("relation is not antisymmetric: {0} and {1} are equivalent")]
    NotAntisymmetric(usize, usize),
}

/// Finite poset as the reflexive-transitive closure of a relation.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Build from an arbitrary relation generator; closes transitively and
    /// checks antisymmetry.
    pub fn from_relation(
        n: usize,
        mut rel: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self, TopoError> {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = i == j || rel(i, j);
            }
        }
        // Floyd-Warshall style closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(TopoError::NotAntisymmetric(i, j));
                }
            }
        }
        Ok(FinitePoset { n, leq })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) && !(0..self.n).any(|k| self.lt(i, k) && self.lt(k, j))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| !(0..self.n).any(|i| self.lt(i, j))).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| !(0..self.n).any(|j| self.lt(i, j))).collect()
    }

    pub fn has_minimum(&self) -> bool {
        (0..self.n).any(|m| (0..self.n).all(|j| self.leq(m, j)))
    }

    pub fn has_maximum(&self) -> bool {
        (0..self.n).any(|m| (0..self.n).all(|j| self.leq(j, m)))
    }

    /// All maximal chains (as vertex lists, increasing).
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> =
            self.minimal_elements().into_iter().map(|v| vec![v]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("nonempty chain");
            let next: Vec<usize> = (0..self.n).filter(|&j| self.covers(last, j)).collect();
            if next.is_empty() {
                out.push(chain);
            } else {
                for j in next {
                    let mut c = chain.clone();
                    c.push(j);
                    stack.push(c);
                }
            }
        }
        out.sort();
        out
    }

    /// Length (number of covers) common to all maximal chains, if pure.
    pub fn pure_length(&self) -> Option<usize> {
        let chains = self.maximal_chains();
        let mut lens = chains.iter().map(|c| c.len() - 1);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    /// Simplices are the chains of the poset.
    pub fn order_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.n, self.maximal_chains())
    }
}

/// Simplicial complex given by its facets (vertex lists, sorted).
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    pub vertex_count: usize,
    pub facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn from_facets(vertex_count: usize, facets: Vec<Vec<usize>>) -> Self {
        let mut fs: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        fs.sort();
        fs.dedup();
        // drop faces contained in other facets
        let keep: Vec<bool> = fs
            .iter()
            .map(|f| {
                !fs.iter().any(|g| g.len() > f.len() && f.iter().all(|v| g.contains(v)))
            })
            .collect();
        let facets = fs.into_iter().zip(keep).filter_map(|(f, k)| k.then_some(f)).collect();
        SimplicialComplex { vertex_count, facets }
    }

    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    /// All simplices, grouped and sorted by dimension.
    pub fn simplices_by_dim(&self) -> Vec<Vec<Vec<usize>>> {
        let Some(dim) = self.dim() else {
            return Vec::new();
        };
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); dim + 1];
        for f in &self.facets {
            // all nonempty subsets of the facet
            let k = f.len();
            for mask in 1u64..(1 << k) {
                let sub: Vec<usize> =
                    (0..k).filter(|&i| mask & (1 << i) != 0).map(|i| f[i]).collect();
                by_dim[sub.len() - 1].insert(sub);
            }
        }
        by_dim.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices_by_dim().iter().map(|s| s.len()).collect()
    }

    pub fn total_simplices(&self) -> usize {
        self.f_vector().iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertex_count,
            "facets": self.facets,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let vertices = v.get("vertices")?.as_u64()? as usize;
        let facets: Vec<Vec<usize>> = serde_json::from_value(v.get("facets")?.clone()).ok()?;
        Some(Self::from_facets(vertices, facets))
    }
}

/// Betti numbers and torsion coefficients per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyResult {
    pub fn is_point_like(&self) -> bool {
        self.betti.first().copied() == Some(1)
            && self.betti.iter().skip(1).all(|&b| b == 0)
            && self.torsion.iter().all(|t| t.is_empty())
    }
}

/// Exact integral simplicial homology via Smith normal form.
pub fn homology(c: &SimplicialComplex) -> HomologyResult {
    let by_dim = c.simplices_by_dim();
    if by_dim.is_empty() {
        return HomologyResult { betti: vec![], torsion: vec![] };
    }
    let dim = by_dim.len() - 1;
    // index maps per dimension
    let index: Vec<BTreeMap<&Vec<usize>, usize>> = by_dim
        .iter()
        .map(|s| s.iter().enumerate().map(|(i, x)| (x, i)).collect())
        .collect();
    // boundary matrix of degree k maps C_k -> C_{k-1}
    let boundary = |k: usize| -> Vec<Vec<i64>> {
        let rows = by_dim[k - 1].len();
        let cols = by_dim[k].len();
        let mut m = vec![vec![0i64; cols]; rows];
        for (j, s) in by_dim[k].iter().enumerate() {
            for (drop, sign) in (0..s.len()).zip([1i64, -1].into_iter().cycle()) {
                let face: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                let i = index[k - 1][&face];
                m[i][j] = sign;
            }
        }
        m
    };
    let mut rank = vec![0usize; dim + 2];
    let mut tors = vec![Vec::new(); dim + 2];
    for k in 1..=dim {
        let diag = smith_diagonal(&boundary(k));
        rank[k] = diag.len();
        tors[k] = diag.into_iter().filter(|d| d > &BigInt::from(1)).collect();
    }
    let betti = (0..=dim)
        .map(|k| by_dim[k].len() - rank[k] - rank[k + 1])
        .collect();
    // torsion of H_k comes from the SNF of boundary_{k+1}
    let torsion = (0..=dim).map(|k| tors[k + 1].clone()).collect();
    HomologyResult { betti, torsion }
}

/// True when all reduced homology vanishes (a single component, no higher
/// Betti numbers, no torsion).
pub fn reduced_homology_trivial(c: &SimplicialComplex) -> bool {
    homology(c).is_point_like()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Contractibility {
    /// Collapses to a point by elementary collapses: a certificate.
    Collapsible,
    /// All reduced integral homology vanishes; not a proof of
    /// contractibility on its own.
    HomologyTrivial,
    /// Reduced homology is nontrivial, so certainly not contractible.
    NotContractible,
    /// Budget exceeded before any certificate was found.
    Unknown,
}

/// Try to certify contractibility: first an elementary-collapse search with
/// backtracking under `budget` visited states, then exact homology.
pub fn is_contractible_certificate(c: &SimplicialComplex, budget: usize) -> Contractibility {
    if c.facets.is_empty() {
        return Contractibility::Unknown;
    }
    if c.facets.len() == 1 && c.facets[0].len() == 1 {
        return Contractibility::Collapsible;
    }
    let all: BTreeSet<Vec<usize>> = c.simplices_by_dim().into_iter().flatten().collect();
    let mut visited = 0usize;
    if collapse_search(all, &mut visited, budget) {
        return Contractibility::Collapsible;
    }
    if visited >= budget {
        return Contractibility::Unknown;
    }
    if reduced_homology_trivial(c) {
        Contractibility::HomologyTrivial
    } else {
        Contractibility::NotContractible
    }
}

fn collapse_search(
    simplices: BTreeSet<Vec<usize>>,
    visited: &mut usize,
    budget: usize,
) -> bool {
    if simplices.len() == 1 {
        return true;
    }
    if *visited >= budget {
        return false;
    }
    *visited += 1;
    // free pairs: sigma with a unique proper coface tau
    let mut pairs = Vec::new();
    for sigma in &simplices {
        let mut cofaces = simplices
            .iter()
            .filter(|t| t.len() > sigma.len() && sigma.iter().all(|v| t.contains(v)));
        if let (Some(tau), None) = (cofaces.next(), cofaces.next()) {
            if tau.len() == sigma.len() + 1 {
                pairs.push((sigma.clone(), tau.clone()));
            }
        }
    }
    for (sigma, tau) in pairs {
        let mut next = simplices.clone();
        next.remove(&sigma);
        next.remove(&tau);
        if collapse_search(next, visited, budget) {
            return true;
        }
        if *visited >= budget {
            return false;
        }
    }
    false
}

/// Greedy collapse reduction preserving the homotopy type; useful to shrink
/// a complex before running homology.
pub fn collapse_reduce(c: &SimplicialComplex) -> SimplicialComplex {
    let mut simplices: BTreeSet<Vec<usize>> =
        c.simplices_by_dim().into_iter().flatten().collect();
    loop {
        let mut found: Option<(Vec<usize>, Vec<usize>)> = None;
        for sigma in &simplices {
            let mut cofaces = simplices
                .iter()
                .filter(|t| t.len() > sigma.len() && sigma.iter().all(|v| t.contains(v)));
            if let (Some(tau), None) = (cofaces.next(), cofaces.next()) {
                if tau.len() == sigma.len() + 1 {
                    found = Some((sigma.clone(), tau.clone()));
                    break;
                }
            }
        }
        match found {
            Some((s, t)) => {
                simplices.remove(&s);
                simplices.remove(&t);
            }
            None => break,
        }
    }
    let facets: Vec<Vec<usize>> = simplices
        .iter()
        .filter(|s| {
            !simplices.iter().any(|t| t.len() > s.len() && s.iter().all(|v| t.contains(v)))
        })
        .cloned()
        .collect();
    SimplicialComplex::from_facets(c.vertex_count, facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_poset(n: usize) -> FinitePoset {
        FinitePoset::from_relation(n, |i, j| i + 1 == j).unwrap()
    }

    #[test]
    fn order_complex_of_chain_is_simplex() {
        let p = chain_poset(3);
        let oc = p.order_complex();
        assert_eq!(oc.f_vector(), vec![3, 3, 1]);
        assert_eq!(homology(&oc).betti, vec![1, 0, 0]);
    }

    #[test]
    fn order_complex_of_antichain() {
        let p = FinitePoset::from_relation(2, |_, _| false).unwrap();
        let oc = p.order_complex();
        assert_eq!(oc.f_vector(), vec![2]);
        assert_eq!(homology(&oc).betti, vec![2]);
    }

    #[test]
    fn boolean_lattice_is_contractible_cone() {
        // B2: subsets of {1,2} ordered by inclusion; has a minimum, so the
        // order complex is a cone
        let subsets = [0b00usize, 0b01, 0b10, 0b11];
        let p = FinitePoset::from_relation(4, |i, j| {
            subsets[i] & subsets[j] == subsets[i] && i != j
        })
        .unwrap();
        assert!(p.has_minimum());
        let oc = p.order_complex();
        assert_eq!(
            is_contractible_certificate(&oc, 10_000),
            Contractibility::Collapsible
        );
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let c = SimplicialComplex::from_facets(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        let h = homology(&c);
        assert_eq!(h.betti, vec![1, 1]);
        assert!(h.torsion.iter().all(|t| t.is_empty()));
        assert_eq!(
            is_contractible_certificate(&c, 5_000),
            Contractibility::NotContractible
        );
    }

    #[test]
    fn solid_triangle() {
        let c = SimplicialComplex::from_facets(3, vec![vec![0, 1, 2]]);
        assert_eq!(homology(&c).betti, vec![1, 0, 0]);
        assert_eq!(
            is_contractible_certificate(&c, 5_000),
            Contractibility::Collapsible
        );
    }

    #[test]
    fn projective_plane_torsion() {
        // minimal 6-vertex triangulation of RP^2 (antipodal icosahedron);
        // every edge of K6 appears in exactly two faces
        let facets = vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 4],
            vec![0, 3, 5],
            vec![0, 4, 5],
            vec![1, 2, 5],
            vec![1, 3, 4],
            vec![1, 4, 5],
            vec![2, 3, 4],
            vec![2, 3, 5],
        ];
        let c = SimplicialComplex::from_facets(6, facets);
        let h = homology(&c);
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion[1], vec![BigInt::from(2)]);
        assert_eq!(
            is_contractible_certificate(&c, 2_000),
            Contractibility::NotContractible
        );
    }

    #[test]
    fn euler_characteristic_matches_betti() {
        let c = SimplicialComplex::from_facets(
            5,
            vec![vec![0, 1, 2], vec![2, 3], vec![3, 4], vec![2, 4]],
        );
        let h = homology(&c);
        let chi: i64 = h
            .betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        assert_eq!(chi, c.euler_characteristic());
    }

    #[test]
    fn disjoint_union_adds_homology() {
        let two_circles = SimplicialComplex::from_facets(
            6,
            vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![3, 4], vec![4, 5], vec![3, 5]],
        );
        assert_eq!(homology(&two_circles).betti, vec![2, 2]);
    }

    #[test]
    fn collapse_reduce_shrinks_cones() {
        let cone = SimplicialComplex::from_facets(
            4,
            vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 1, 3]],
        );
        let r = collapse_reduce(&cone);
        assert_eq!(r.total_simplices(), 1);
    }

    #[test]
    fn purity_detection() {
        let p = chain_poset(4);
        assert_eq!(p.pure_length(), Some(3));
        // a poset with chains of different lengths
        let q = FinitePoset::from_relation(4, |i, j| (i, j) == (0, 1) || (i, j) == (1, 2))
            .unwrap();
        assert_eq!(q.pure_length(), None);
    }

    #[test]
    fn rp2_from_json_round_trip() {
        let c = SimplicialComplex::from_facets(3, vec![vec![0, 1, 2]]);
        let j = c.to_json();
        let back = SimplicialComplex::from_json(&j).unwrap();
        assert_eq!(back.facets, c.facets);
    }
}
