//! The covering poset of the principal tilting component: nodes are pairs
//! (braid element, fundamental heart), edges are simple left tilts, and the
//! free braid action is visible as the braid coordinate.
//!
//! The poset is infinite, so everything is computed on explicit windows
//! with budgets. A window is a breadth-first ball of left tilts; its order
//! relation is reachability. Lattice operations are certified inside a
//! window only when the window is known to contain the full interval below
//! a common bound, which all call sites here arrange.

use crate::braid::BraidElement;
use crate::hearts::{
    simple_tilt, standard_heart, CyContext, FundHeart, HeartError, HeartKey, TiltDirection,
    TwistStats,
};
use crate::repq::IndecObject;
use crate::topo::{FinitePoset, TopoError};
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

#[derive(Error, Debug)]
pub enum TiltpError {
    #[error("node budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("node is not in the window")]
    NotInWindow,
    #[error("tilt target not explored; enlarge the window depth")]
    Unexplored,
    #[error("no common bound found in the window for the lattice operation")]
    NoBoundInWindow,
    #[error(
        "decoration conflict on revisit of a node: the braid decorations \
         reached by two tilt paths differ"
    )]
    DecorationConflict { heart: HeartKey },
    #[error("pruned exploration requires a start heart with all simples at shift 0")]
    PruneNeedsStandardBase,
    #[error(transparent)]
    Heart(#[from] HeartError),
    #[error(transparent)]
    Topo(#[from] TopoError),
}

/// An element of the covering poset.
#[derive(Clone, Debug)]
pub struct Node {
    pub braid: BraidElement,
    pub heart: FundHeart,
}

pub type NodeKey = (BraidElement, HeartKey);

impl Node {
    pub fn start(ctx: &CyContext) -> Self {
        Node { braid: ctx.braid.identity(), heart: standard_heart(ctx) }
    }

    pub fn key(&self) -> NodeKey {
        (self.braid.clone(), self.heart.key())
    }
}

/// Left tilt of a covering node at a simple of its heart.
pub fn tilt_node(ctx: &CyContext, node: &Node, simple: &IndecObject) -> Result<(Node, bool, TwistStats), TiltpError> {
    let out = simple_tilt(ctx, &node.heart, simple, TiltDirection::Left)?;
    let braid = match &out.braid_factor {
        None => node.braid.clone(),
        Some(f) => ctx.braid.multiply(&node.braid, f),
    };
    Ok((Node { braid, heart: out.heart }, out.stays, out.stats))
}

/// Right tilt, inverse to `tilt_node` at the corresponding simple.
pub fn tilt_node_right(
    ctx: &CyContext,
    node: &Node,
    simple: &IndecObject,
) -> Result<(Node, bool), TiltpError> {
    let out = simple_tilt(ctx, &node.heart, simple, TiltDirection::Right)?;
    let braid = match &out.braid_factor {
        None => node.braid.clone(),
        Some(f) => ctx.braid.multiply(&node.braid, f),
    };
    Ok((Node { braid, heart: out.heart }, out.stays))
}

/// Expansion filter for window exploration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Prune {
    /// Follow every simple tilt.
    None,
    /// Only tilt at simples with shift >= the bound. Starting from the
    /// standard heart this cuts the ball down to the interval
    /// `[D, D[-(1 - bound)]]` exactly.
    MinShift(i32),
}

#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 200_000 }
    }
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub simple: IndecObject,
    pub stays: bool,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct WindowStats {
    pub revisits_checked: usize,
    pub dual_pins: usize,
    pub cone_twists: usize,
}

pub struct Window {
    nodes: Vec<Node>,
    index: HashMap<NodeKey, usize>,
    depth: Vec<usize>,
    expanded: Vec<bool>,
    edges: Vec<Edge>,
    up: Vec<Vec<usize>>,
    reach: Option<Vec<Vec<u64>>>,
    pub stats: WindowStats,
}

impl Window {
    /// Breadth-first ball of left tilts from `start` to the given depth.
    /// Every revisit re-derives the node and checks that braid decorations
    /// agree, so path independence is verified continuously.
    pub fn explore(
        ctx: &CyContext,
        start: Node,
        max_depth: usize,
        prune: Prune,
        budget: Budget,
    ) -> Result<Window, TiltpError> {
        if let Prune::MinShift(_) = prune {
            if start.heart.simples().iter().any(|s| s.obj.shift != 0) {
                return Err(TiltpError::PruneNeedsStandardBase);
            }
        }
        let mut w = Window {
            nodes: Vec::new(),
            index: HashMap::new(),
            depth: Vec::new(),
            expanded: Vec::new(),
            edges: Vec::new(),
            up: Vec::new(),
            reach: None,
            stats: WindowStats::default(),
        };
        w.push_node(start, 0);
        let mut layer: Vec<usize> = vec![0];
        for d in 0..max_depth {
            let mut next: Vec<(NodeKey, Node, usize, IndecObject, bool)> = Vec::new();
            for &i in &layer {
                w.expanded[i] = true;
                let simples: Vec<IndecObject> =
                    w.nodes[i].heart.simples().iter().map(|s| s.obj.clone()).collect();
                for s in simples {
                    if let Prune::MinShift(b) = prune {
                        if s.shift < b {
                            continue;
                        }
                    }
                    let (tgt, stays, stats) = tilt_node(ctx, &w.nodes[i], &s)?;
                    w.stats.dual_pins += stats.dual_pin_route;
                    w.stats.cone_twists += stats.cone_route;
                    let key = tgt.key();
                    if let Some(&j) = w.index.get(&key) {
                        w.check_decorations(&tgt, j)?;
                        w.add_edge(i, j, s, stays);
                    } else {
                        next.push((key, tgt, i, s, stays));
                    }
                }
            }
            // deterministic ordering of the new layer
            next.sort_by(|a, b| a.0.cmp(&b.0));
            layer = Vec::new();
            for (key, node, from, s, stays) in next {
                let j = match w.index.get(&key) {
                    Some(&j) => {
                        w.check_decorations(&node, j)?;
                        j
                    }
                    None => {
                        if w.nodes.len() >= budget.max_nodes {
                            return Err(TiltpError::BudgetExceeded(budget.max_nodes));
                        }
                        let j = w.push_node(node, d + 1);
                        layer.push(j);
                        j
                    }
                };
                w.add_edge(from, j, s, stays);
            }
            if layer.is_empty() {
                break;
            }
        }
        Ok(w)
    }

    fn push_node(&mut self, node: Node, depth: usize) -> usize {
        let key = node.key();
        let i = self.nodes.len();
        self.nodes.push(node);
        self.depth.push(depth);
        self.expanded.push(false);
        self.up.push(Vec::new());
        self.index.insert(key, i);
        i
    }

    fn add_edge(&mut self, from: usize, to: usize, simple: IndecObject, stays: bool) {
        if self
            .up[from]
            .iter()
            .any(|&e| self.edges[e].to == to && self.edges[e].simple == simple)
        {
            return;
        }
        let e = self.edges.len();
        self.edges.push(Edge { from, to, simple, stays });
        self.up[from].push(e);
    }

    fn check_decorations(&mut self, fresh: &Node, at: usize) -> Result<(), TiltpError> {
        self.stats.revisits_checked += 1;
        let stored = &self.nodes[at];
        let same = stored
            .heart
            .simples()
            .iter()
            .zip(fresh.heart.simples())
            .all(|(a, b)| a.obj == b.obj && a.braid == b.braid);
        if same {
            Ok(())
        } else {
            Err(TiltpError::DecorationConflict { heart: fresh.heart.key() })
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &Node {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn depth_of(&self, i: usize) -> usize {
        self.depth[i]
    }

    pub fn index_of(&self, node: &Node) -> Option<usize> {
        self.index.get(&node.key()).copied()
    }

    pub fn is_expanded(&self, i: usize) -> bool {
        self.expanded[i]
    }

    /// Where the tilt at `simple` from node `i` lands, if explored.
    pub fn tilt_target(&self, i: usize, simple: &IndecObject) -> Option<(usize, bool)> {
        self.up[i]
            .iter()
            .map(|&e| &self.edges[e])
            .find(|e| &e.simple == simple)
            .map(|e| (e.to, e.stays))
    }

    pub fn out_edges(&self, i: usize) -> Vec<&Edge> {
        self.up[i].iter().map(|&e| &self.edges[e]).collect()
    }

    /// Distinct fundamental hearts appearing in the window.
    pub fn heart_keys(&self) -> BTreeSet<HeartKey> {
        self.nodes.iter().map(|n| n.heart.key()).collect()
    }

    fn words(&self) -> usize {
        self.nodes.len().div_ceil(64)
    }

    /// Build the reachability closure (idempotent).
    pub fn ensure_closure(&mut self) {
        if self.reach.is_some() {
            return;
        }
        let n = self.nodes.len();
        let words = self.words();
        // topological order by Kahn on tilt edges
        let mut indeg = vec![0usize; n];
        for e in &self.edges {
            indeg[e.to] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(i) = queue.pop() {
            topo.push(i);
            for &e in &self.up[i] {
                let t = self.edges[e].to;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push(t);
                }
            }
        }
        assert_eq!(topo.len(), n, "tilt edges must form a DAG");
        let mut reach = vec![vec![0u64; words]; n];
        for &i in topo.iter().rev() {
            reach[i][i / 64] |= 1 << (i % 64);
            let succ: Vec<usize> = self.up[i].iter().map(|&e| self.edges[e].to).collect();
            for t in succ {
                let (a, b) = if i < t {
                    let (lo, hi) = reach.split_at_mut(t);
                    (&mut lo[i], &hi[0])
                } else {
                    let (lo, hi) = reach.split_at_mut(i);
                    (&mut hi[0], &lo[t])
                };
                for w in 0..words {
                    a[w] |= b[w];
                }
            }
        }
        self.reach = Some(reach);
    }

    fn reach_row(&self, i: usize) -> &[u64] {
        self.reach.as_ref().expect("closure not built")[i].as_slice()
    }

    /// Order relation of the window: j is reachable from i by left tilts.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.reach_row(i)[j / 64] & (1 << (j % 64)) != 0
    }

    /// Least upper bound inside the window. Certified only when the window
    /// contains the full interval below some common bound of `i` and `j`.
    pub fn join(&self, i: usize, j: usize) -> Result<usize, TiltpError> {
        let words = self.words();
        let ri = self.reach_row(i);
        let rj = self.reach_row(j);
        let common: Vec<u64> = (0..words).map(|w| ri[w] & rj[w]).collect();
        let mut candidates = Vec::new();
        for (w, &bits) in common.iter().enumerate() {
            let mut b = bits;
            while b != 0 {
                let k = w * 64 + b.trailing_zeros() as usize;
                candidates.push(k);
                b &= b - 1;
            }
        }
        candidates
            .iter()
            .copied()
            .find(|&c| {
                let rc = self.reach_row(c);
                (0..words).all(|w| common[w] & !rc[w] == 0)
            })
            .ok_or(TiltpError::NoBoundInWindow)
    }

    /// Greatest lower bound inside the window, dual to `join`.
    pub fn meet(&self, i: usize, j: usize) -> Result<usize, TiltpError> {
        let lowers: Vec<usize> =
            (0..self.nodes.len()).filter(|&c| self.leq(c, i) && self.leq(c, j)).collect();
        lowers
            .iter()
            .copied()
            .find(|&c| lowers.iter().all(|&d| self.leq(d, c)))
            .ok_or(TiltpError::NoBoundInWindow)
    }

    /// All window nodes in the closed interval `[lo, hi]`.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&k| self.leq(lo, k) && self.leq(k, hi)).collect()
    }

    /// Left tilt at a whole subset of simples: the join of the single tilts,
    /// `L_J D = sup { L_s D : s in J }`.
    pub fn tilt_multi(&self, i: usize, subset: &[IndecObject]) -> Result<usize, TiltpError> {
        let mut acc = i;
        for s in subset {
            let (t, _) = self.tilt_target(i, s).ok_or(TiltpError::Unexplored)?;
            acc = self.join(acc, t)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self, ctx: &CyContext) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.nodes.iter().enumerate().map(|(i, n)| serde_json::json!({
                "id": i,
                "depth": self.depth[i],
                "braid": ctx.braid.display(&n.braid),
                "heart": n.heart.to_json(ctx),
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| serde_json::json!({
                "from": e.from,
                "to": e.to,
                "tilt": format!("{}", e.simple),
                "stays": e.stays,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph tilts {\n  rankdir=BT;\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let label: Vec<String> =
                n.heart.simples().iter().map(|hs| format!("{}", hs.obj)).collect();
            s.push_str(&format!("  n{} [label=\"{}\"];\n", i, label.join(" ")));
        }
        for e in &self.edges {
            s.push_str(&format!(
                "  n{} -> n{} [label=\"tilt:{}\"];\n",
                e.from, e.to, e.simple
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// Depth that surely covers the interval `[node, node[-1]]`: the longest
/// chain there is at most the number of indecomposables of the heart, which
/// is at most the number of positive roots.
pub fn interval_depth(ctx: &CyContext) -> usize {
    ctx.rep.roots.len() + 1
}

/// The node representing `alpha(node)[-1]`, computed as the join of all
/// simple tilts (the left tilt at the whole heart).
pub fn shift_down(ctx: &CyContext, node: &Node, budget: Budget) -> Result<Node, TiltpError> {
    let standard_base = node.heart.simples().iter().all(|s| s.obj.shift == 0);
    let prune = if standard_base { Prune::MinShift(0) } else { Prune::None };
    let mut w = Window::explore(ctx, node.clone(), interval_depth(ctx), prune, budget)?;
    w.ensure_closure();
    let simples: Vec<IndecObject> =
        node.heart.simples().iter().map(|s| s.obj.clone()).collect();
    let top = w.tilt_multi(0, &simples)?;
    Ok(w.node(top).clone())
}

/// The local structure between two simples of a heart: a commuting square
/// when neither direction carries a degree-1 extension, otherwise a
/// pentagon with a unique intermediate node.
#[derive(Clone, Debug)]
pub enum LocalDiagram {
    Square {
        top: Node,
    },
    Pentagon {
        /// The simple whose tilt starts the length-three side.
        long_first: IndecObject,
        mid: Node,
        top: Node,
    },
}

pub fn local_diagram(
    ctx: &CyContext,
    node: &Node,
    si: &IndecObject,
    sj: &IndecObject,
) -> Result<LocalDiagram, TiltpError> {
    let n_cy = ctx.n_cy;
    let eij = ctx.rep.hom_cy_d(si, sj, n_cy, 1).map_err(HeartError::from)?;
    let eji = ctx.rep.hom_cy_d(sj, si, n_cy, 1).map_err(HeartError::from)?;
    let mut w = Window::explore(ctx, node.clone(), 4, Prune::None, Budget::default())?;
    w.ensure_closure();
    let (ti, _) = w.tilt_target(0, si).ok_or(TiltpError::Unexplored)?;
    let (tj, _) = w.tilt_target(0, sj).ok_or(TiltpError::Unexplored)?;
    let top = w.join(ti, tj)?;
    if eij == 0 && eji == 0 {
        // both orders of tilts land on the join in one step (the tilted
        // simple may be renamed by the fundamental-domain normalization)
        debug_assert!(w.out_edges(ti).iter().any(|e| e.to == top));
        debug_assert!(w.out_edges(tj).iter().any(|e| e.to == top));
        return Ok(LocalDiagram::Square { top: w.node(top).clone() });
    }
    // pentagon: the long side starts at the top object of the extension
    let (first, first_target, other_target) =
        if eij > 0 { (si.clone(), ti, tj) } else { (sj.clone(), tj, ti) };
    // the second step of the long side tilts at the twisted simple, i.e. the
    // unique simple of the middle heart whose tilt stays strictly below top
    let mid = w
        .out_edges(first_target)
        .into_iter()
        .map(|e| e.to)
        .find(|&t| t != top && w.leq(t, top))
        .ok_or(TiltpError::Unexplored)?;
    // and the short side reaches top in one step
    debug_assert!(w.out_edges(other_target).iter().any(|e| e.to == top));
    debug_assert!(w.out_edges(mid).iter().any(|e| e.to == top));
    Ok(LocalDiagram::Pentagon {
        long_first: first,
        mid: w.node(mid).clone(),
        top: w.node(top).clone(),
    })
}

/// An element (E, J) of a cone C(F): a node of the window plus a subset of
/// the simples of its heart.
#[derive(Clone, Debug)]
pub struct ConeElement {
    pub node: usize,
    pub subset: Vec<IndecObject>,
    /// Window index of L_J E.
    pub tilted: usize,
}

/// Strata elements (E, J) with some floor below E and L_J E below the
/// ceiling, with the closure order: (E, J) <= (D, I) iff E <= D and
/// L_I D <= L_J E.
pub fn strata_between(
    w: &mut Window,
    floors: &[usize],
    ceiling: usize,
) -> Result<(Vec<ConeElement>, FinitePoset), TiltpError> {
    w.ensure_closure();
    let mut elements = Vec::new();
    for e in 0..w.len() {
        if !floors.iter().any(|&f0| w.leq(f0, e)) {
            continue;
        }
        if !w.leq(e, ceiling) {
            // L_J E <= ceiling forces E <= ceiling already (J may be empty)
            continue;
        }
        let simples: Vec<IndecObject> =
            w.node(e).heart.simples().iter().map(|s| s.obj.clone()).collect();
        let n = simples.len();
        'subsets: for mask in 0u32..(1 << n) {
            let subset: Vec<IndecObject> = (0..n)
                .filter(|&k| mask & (1 << k) != 0)
                .map(|k| simples[k].clone())
                .collect();
            // L_J E <= ceiling iff every single tilt is
            for s in &subset {
                match w.tilt_target(e, s) {
                    Some((t, _)) if w.leq(t, ceiling) => {}
                    Some(_) => continue 'subsets,
                    None => {
                        if w.is_expanded(e) {
                            continue 'subsets;
                        }
                        return Err(TiltpError::Unexplored);
                    }
                }
            }
            let tilted = w.tilt_multi(e, &subset)?;
            elements.push(ConeElement { node: e, subset, tilted });
        }
    }
    let poset = FinitePoset::from_relation(elements.len(), |a, b| {
        let (ea, eb) = (&elements[a], &elements[b]);
        w.leq(ea.node, eb.node) && w.leq(eb.tilted, ea.tilted)
    })?;
    Ok((elements, poset))
}

/// The finite poset C(F) of a cone over a set of window nodes: the ceiling
/// is the supremum of F.
pub fn cone_poset(
    w: &mut Window,
    f_nodes: &[usize],
) -> Result<(Vec<ConeElement>, FinitePoset), TiltpError> {
    w.ensure_closure();
    assert!(!f_nodes.is_empty());
    let mut sup = f_nodes[0];
    for &x in &f_nodes[1..] {
        sup = w.join(sup, x)?;
    }
    strata_between(w, f_nodes, sup)
}
