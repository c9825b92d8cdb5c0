//! ADE Dynkin diagrams, quiver orientations, root systems and the Euler form.
//!
//! Vertex numbering is fixed once and for all so that canonical keys are
//! stable across runs:
//!
//! * `A_n`: path `1 - 2 - ... - n`;
//! * `D_n`: path `1 - 2 - ... - (n-1)` with vertex `n` attached to `n-2`
//!   (so `D_4` has centre `2`);
//! * `E_n`: path `1 - 3 - 4 - 5 - 6 (- 7)(- 8)` with vertex `2` attached
//!   to `4` (Bourbaki numbering).
//!
//! Vertices are 1-based in JSON and in the CLI, 0-based internally.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
            Family::E => write!(f, "E"),
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DynkinError {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("dimension vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("cannot parse quiver spec '{0}' (expected e.g. A2, D4, E6)")]
    BadSpec(String),
}

/// Integer vector in the root lattice, coordinates in the simple-root basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct DimVec(pub Vec<i64>);

impl DimVec {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVec(v)
    }

    pub fn zero(n: usize) -> Self {
        DimVec(vec![0; n])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_nonpos(&self) -> bool {
        self.0.iter().all(|&x| x <= 0)
    }

    pub fn neg(&self) -> Self {
        DimVec(self.0.iter().map(|&x| -x).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        DimVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        DimVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl std::fmt::Display for DimVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DynkinDiagram {
    pub family: Family,
    pub rank: usize,
    /// Tree edges between 0-based vertices, lexicographically sorted.
    pub edges: Vec<(usize, usize)>,
}

impl DynkinDiagram {
    pub fn new(family: Family, rank: usize) -> Result<Self, DynkinError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok || rank > 10 {
            return Err(DynkinError::InvalidRank { family, rank });
        }
        let mut edges = Vec::new();
        match family {
            Family::A => {
                for i in 0..rank - 1 {
                    edges.push((i, i + 1));
                }
            }
            Family::D => {
                for i in 0..rank - 2 {
                    edges.push((i, i + 1));
                }
                edges.push((rank - 3, rank - 1));
            }
            Family::E => {
                // path 1-3-4-5-6(-7)(-8), vertex 2 attached to 4
                edges.push((0, 2));
                for i in 2..rank - 1 {
                    edges.push((i, i + 1));
                }
                edges.push((1, 3));
            }
        }
        edges.sort_unstable();
        Ok(DynkinDiagram { family, rank, edges })
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Cartan matrix entry: 2 on the diagonal, -1 for adjacent vertices.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if self.adjacent(i, j) {
            -1
        } else {
            0
        }
    }

    pub fn coxeter_number(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::D => 2 * self.rank - 2,
            Family::E => match self.rank {
                6 => 12,
                7 => 18,
                _ => 30,
            },
        }
    }

    /// Tits form q(x) = sum x_i^2 - sum_{edges} x_i x_j.
    pub fn tits_form(&self, x: &DimVec) -> i64 {
        let mut q: i64 = x.0.iter().map(|&a| a * a).sum();
        for &(i, j) in &self.edges {
            q -= x.0[i] * x.0[j];
        }
        q
    }

    /// All positive roots, by exhaustive search over the known coordinate
    /// box, in lexicographic order.
    pub fn positive_roots(&self) -> Vec<DimVec> {
        let cap = match (self.family, self.rank) {
            (Family::A, _) => 1,
            (Family::D, _) => 2,
            (Family::E, 6) => 3,
            (Family::E, 7) => 4,
            _ => 6,
        };
        let n = self.rank;
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        self.search_roots(0, cap, &mut cur, &mut out);
        out.sort_unstable();
        out
    }

    fn search_roots(&self, v: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<DimVec>) {
        if v == self.rank {
            let d = DimVec(cur.clone());
            if !d.is_zero() && self.tits_form(&d) == 1 {
                out.push(d);
            }
            return;
        }
        for x in 0..=cap {
            cur[v] = x;
            self.search_roots(v + 1, cap, cur, out);
        }
        cur[v] = 0;
    }
}

/// Quiver: an ADE diagram with an orientation of each edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    pub diagram: DynkinDiagram,
    /// Arrows `(source, target)`, 0-based; one per diagram edge.
    pub arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Standard orientation: each edge points from the smaller vertex to the
    /// larger one.
    pub fn standard(family: Family, rank: usize) -> Result<Self, DynkinError> {
        let diagram = DynkinDiagram::new(family, rank)?;
        let arrows = diagram.edges.clone();
        Ok(Quiver { diagram, arrows })
    }

    /// Parse a spec such as "A2", "D4" or "E6" into the standard quiver.
    pub fn parse(spec: &str) -> Result<Self, DynkinError> {
        let s = spec.trim();
        let mut chars = s.chars();
        let fam = match chars.next() {
            Some('A') | Some('a') => Family::A,
            Some('D') | Some('d') => Family::D,
            Some('E') | Some('e') => Family::E,
            _ => return Err(DynkinError::BadSpec(spec.to_string())),
        };
        let rank: usize =
            chars.as_str().parse().map_err(|_| DynkinError::BadSpec(spec.to_string()))?;
        Quiver::standard(fam, rank).map_err(|_| DynkinError::BadSpec(spec.to_string()))
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.diagram.family, self.diagram.rank)
    }

    /// Hereditary Euler form <x,y> = sum_i x_i y_i - sum_{a: i->j} x_i y_j.
    pub fn euler_form(&self, x: &DimVec, y: &DimVec) -> Result<i64, DynkinError> {
        let n = self.rank();
        if x.len() != n {
            return Err(DynkinError::LengthMismatch { got: x.len(), expected: n });
        }
        if y.len() != n {
            return Err(DynkinError::LengthMismatch { got: y.len(), expected: n });
        }
        let mut s: i64 = x.0.iter().zip(&y.0).map(|(a, b)| a * b).sum();
        for &(i, j) in &self.arrows {
            s -= x.0[i] * y.0[j];
        }
        Ok(s)
    }

    /// Reverse all arrows incident to `v` (BGP reflection of the orientation).
    pub fn reflect_at(&self, v: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == v || t == v { (t, s) } else { (s, t) })
            .collect();
        Quiver { diagram: self.diagram.clone(), arrows }
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != v)
    }

    /// An admissible sink ordering: vertex `order[0]` is a sink of the
    /// quiver, `order[1]` is a sink after reflecting there, and so on.
    pub fn admissible_sink_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.rank());
        let mut q = self.clone();
        let mut used = vec![false; self.rank()];
        while order.len() < self.rank() {
            let v = (0..self.rank())
                .find(|&v| !used[v] && q.is_sink(v))
                .expect("acyclic quiver has a sink ordering");
            used[v] = true;
            order.push(v);
            q = q.reflect_at(v);
        }
        order
    }
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    family: Family,
    rank: usize,
    arrows: Vec<(usize, usize)>,
}

impl Serialize for Quiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QuiverJson {
            family: self.diagram.family,
            rank: self.diagram.rank,
            arrows: self.arrows.iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quiver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = QuiverJson::deserialize(d)?;
        let diagram = DynkinDiagram::new(j.family, j.rank).map_err(serde::de::Error::custom)?;
        let mut arrows: Vec<(usize, usize)> = Vec::new();
        for (a, b) in j.arrows {
            if a == 0 || b == 0 || a > j.rank || b > j.rank {
                return Err(serde::de::Error::custom("arrow endpoint out of range"));
            }
            let (s, t) = (a - 1, b - 1);
            if !diagram.adjacent(s, t) {
                return Err(serde::de::Error::custom("arrow not along a diagram edge"));
            }
            arrows.push((s, t));
        }
        if arrows.len() != diagram.edges.len() {
            return Err(serde::de::Error::custom("wrong number of arrows"));
        }
        Ok(Quiver { diagram, arrows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_shapes() {
        let a2 = DynkinDiagram::new(Family::A, 2).unwrap();
        assert_eq!(a2.edges, vec![(0, 1)]);
        let a1 = DynkinDiagram::new(Family::A, 1).unwrap();
        assert!(a1.edges.is_empty());
        let d4 = DynkinDiagram::new(Family::D, 4).unwrap();
        // central vertex 2 (1-based) adjacent to the three leaves
        assert!(d4.adjacent(1, 0) && d4.adjacent(1, 2) && d4.adjacent(1, 3));
        assert_eq!(d4.edges.len(), 3);
        assert!(DynkinDiagram::new(Family::D, 3).is_err());
        assert!(DynkinDiagram::new(Family::E, 9).is_err());
        assert!(DynkinDiagram::new(Family::A, 0).is_err());
    }

    #[test]
    fn euler_form_a2() {
        let q = Quiver::standard(Family::A, 2).unwrap();
        let e1 = DimVec::unit(2, 0);
        let e2 = DimVec::unit(2, 1);
        assert_eq!(q.euler_form(&e1, &e1).unwrap(), 1);
        // direct evaluation of the defining sum: arrow 1->2 contributes -1
        assert_eq!(q.euler_form(&e1, &e2).unwrap(), -1);
        assert_eq!(q.euler_form(&e2, &e1).unwrap(), 0);
        assert!(q.euler_form(&DimVec::zero(3), &e1).is_err());
    }

    #[test]
    fn roots_small_types() {
        let a2 = DynkinDiagram::new(Family::A, 2).unwrap();
        let roots = a2.positive_roots();
        assert_eq!(
            roots,
            vec![DimVec(vec![0, 1]), DimVec(vec![1, 0]), DimVec(vec![1, 1])]
        );
        let a1 = DynkinDiagram::new(Family::A, 1).unwrap();
        assert_eq!(a1.positive_roots(), vec![DimVec(vec![1])]);
        let d4 = DynkinDiagram::new(Family::D, 4).unwrap();
        assert_eq!(d4.positive_roots().len(), 12);
    }

    #[test]
    fn root_count_matches_coxeter_number() {
        for (fam, rank) in [
            (Family::A, 1),
            (Family::A, 2),
            (Family::A, 3),
            (Family::A, 5),
            (Family::D, 4),
            (Family::D, 5),
            (Family::E, 6),
        ] {
            let d = DynkinDiagram::new(fam, rank).unwrap();
            let roots = d.positive_roots();
            assert_eq!(roots.len(), rank * d.coxeter_number() / 2, "{fam}{rank}");
            let mut sorted = roots.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), roots.len());
        }
    }

    #[test]
    fn symmetrized_euler_is_cartan_pairing() {
        for (fam, rank) in [(Family::A, 3), (Family::D, 4)] {
            let q = Quiver::standard(fam, rank).unwrap();
            for i in 0..rank {
                for j in 0..rank {
                    let ei = DimVec::unit(rank, i);
                    let ej = DimVec::unit(rank, j);
                    let s = q.euler_form(&ei, &ej).unwrap() + q.euler_form(&ej, &ei).unwrap();
                    assert_eq!(s, q.diagram.cartan(i, j));
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let q = Quiver::parse("A2").unwrap();
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"family":"A","rank":2,"arrows":[[1,2]]}"#);
        let back: Quiver = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
        assert!(Quiver::parse("F4").is_err());
        assert!(Quiver::parse("A").is_err());
    }
}
