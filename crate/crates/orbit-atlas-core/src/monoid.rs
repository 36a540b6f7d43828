//! The length-increasing monoid action on standardized pairs, the
//! root-type classification of each move, and the weak-order graph with
//! its closure-order refinement.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::{bruhat_leq, monoid_left, monoid_right};
use crate::reps::{enumerate_std_pairs, StdPair};

/// One generator of the extended monoid action on standardized pairs.
///
/// `Right(k)` and `Left(k)` act diagonally (with the left indices
/// restricted to those fixing the distinguished line).  The two extra
/// generators move a single coordinate: `FirstOnly` applies `s_{i-1}` on
/// the left of the first coordinate, `SecondOnly` applies `s_1` on the
/// left of the second.  Orbit preservation for the one-coordinate moves is
/// stated without proof in the source theory, so their edges are flagged
/// in serialized output.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ActionLabel {
    Right(usize),
    Left(usize),
    FirstOnly,
    SecondOnly,
}

impl ActionLabel {
    /// Whether this label is admissible for parameters `(n, i)`.
    pub fn is_valid(self, n: usize, i: usize) -> bool {
        match self {
            ActionLabel::Right(k) => k >= 1 && k < n,
            // Left moves exist for the simple roots away from positions
            // i-1 and i: indices 1..=i-2 and i+1..=n-1.
            ActionLabel::Left(k) => k >= 1 && k < n && (k + 2 <= i || k >= i + 1),
            ActionLabel::FirstOnly | ActionLabel::SecondOnly => i >= 2,
        }
    }

    /// Every admissible label for `(n, i)`, rights first.
    pub fn all(n: usize, i: usize) -> Vec<ActionLabel> {
        let mut out: Vec<ActionLabel> = (1..n).map(ActionLabel::Right).collect();
        out.extend((1..n).map(ActionLabel::Left).filter(|a| a.is_valid(n, i)));
        if ActionLabel::FirstOnly.is_valid(n, i) {
            out.push(ActionLabel::FirstOnly);
            out.push(ActionLabel::SecondOnly);
        }
        out
    }

    /// True for the two one-coordinate generators.
    pub fn is_single_sided(self) -> bool {
        matches!(self, ActionLabel::FirstOnly | ActionLabel::SecondOnly)
    }

    /// Stable identifier used in serialized output.
    pub fn name(self) -> String {
        match self {
            ActionLabel::Right(k) => format!("right({})", k),
            ActionLabel::Left(k) => format!("left({})", k),
            ActionLabel::FirstOnly => String::from("first_only"),
            ActionLabel::SecondOnly => String::from("second_only"),
        }
    }
}

/// How a generator moves an orbit: both coordinates lengthen, exactly one
/// does, or neither does.  The theory does not separate the real and
/// complex-unstable cases, so they are reported together.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RootType {
    ComplexStable,
    Noncompact,
    RealOrComplexUnstable,
}

impl RootType {
    pub fn name(self) -> &'static str {
        match self {
            RootType::ComplexStable => "complex_stable",
            RootType::Noncompact => "noncompact",
            RootType::RealOrComplexUnstable => "real_or_complex_unstable",
        }
    }
}

/// Applies one generator to a standardized pair.
///
/// In standardized coordinates the conjugation untwists the second factor,
/// so the right action is the plain diagonal one; a left move at `k <=
/// i-2` reaches the second factor as `s_{k+1}` because the conjugation
/// shifts those simple roots up by one.
pub fn act(p: &StdPair, a: ActionLabel) -> StdPair {
    let (n, i) = (p.n(), p.i());
    assert!(a.is_valid(n, i), "label {:?} is not admissible for (n, i) = ({}, {})", a, n, i);
    let (w, u) = match a {
        ActionLabel::Right(k) => (monoid_right(p.w(), k), monoid_right(p.u(), k)),
        ActionLabel::Left(k) if k + 2 <= i => (monoid_left(p.w(), k), monoid_left(p.u(), k + 1)),
        ActionLabel::Left(k) => (monoid_left(p.w(), k), monoid_left(p.u(), k)),
        ActionLabel::FirstOnly => (monoid_left(p.w(), i - 1), p.u().clone()),
        ActionLabel::SecondOnly => (p.w().clone(), monoid_left(p.u(), 1)),
    };
    StdPair::new_unchecked(i, w, u)
}

/// Classifies a generator at a pair by which coordinates it lengthens.
/// The one-coordinate generators are never complex stable: they are
/// noncompact when their coordinate moves and unstable otherwise.
pub fn root_type(p: &StdPair, a: ActionLabel) -> RootType {
    let q = act(p, a);
    let w_moved = q.w() != p.w();
    let u_moved = q.u() != p.u();
    if a.is_single_sided() {
        if w_moved || u_moved {
            RootType::Noncompact
        } else {
            RootType::RealOrComplexUnstable
        }
    } else if w_moved && u_moved {
        RootType::ComplexStable
    } else if w_moved || u_moved {
        RootType::Noncompact
    } else {
        RootType::RealOrComplexUnstable
    }
}

/// Closure order on standardized pairs: the product of plain Bruhat orders
/// in the two coordinates.
pub fn closure_leq(p: &StdPair, q: &StdPair) -> bool {
    assert_eq!((p.n(), p.i()), (q.n(), q.i()), "pair parameters mismatch");
    bruhat_leq(p.w(), q.w()) && bruhat_leq(p.u(), q.u())
}

/// A labelled move between two distinct nodes of the weak-order graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: ActionLabel,
    pub root_type: RootType,
}

/// The weak-order graph of all standardized pairs for `(n, i)`: every
/// generator move between distinct pairs, with nodes levelled by breadth-
/// first search from the sources.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitGraph {
    n: usize,
    i: usize,
    nodes: Vec<StdPair>,
    edges: Vec<Edge>,
    levels: Vec<usize>,
}

/// Builds the weak-order graph.  Panics if some node is unreachable from
/// the minimal ones or if some move fails to raise the level by exactly
/// one; the theory rules both out, so either signals an implementation
/// bug.
pub fn weak_order_graph(n: usize, i: usize) -> OrbitGraph {
    let nodes = enumerate_std_pairs(n, i);
    let mut edges = Vec::new();
    for (src, p) in nodes.iter().enumerate() {
        for a in ActionLabel::all(n, i) {
            let q = act(p, a);
            if q != *p {
                let dst = nodes
                    .binary_search(&q)
                    .unwrap_or_else(|_| panic!("move {:?} left the node set at {:?}", a, p));
                edges.push(Edge {
                    src,
                    dst,
                    label: a,
                    root_type: root_type(p, a),
                });
            }
        }
    }
    edges.sort();

    let mut indegree = vec![0usize; nodes.len()];
    for e in &edges {
        indegree[e.dst] += 1;
    }
    let mut levels = vec![usize::MAX; nodes.len()];
    let mut queue: Vec<usize> = (0..nodes.len()).filter(|&v| indegree[v] == 0).collect();
    for &v in &queue {
        levels[v] = 0;
    }
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for e in edges.iter().filter(|e| e.src == v) {
            if levels[e.dst] == usize::MAX {
                levels[e.dst] = levels[v] + 1;
                queue.push(e.dst);
            } else if levels[e.dst] != levels[v] + 1 {
                panic!(
                    "level inconsistency: {:?} -> {:?} spans levels {} -> {}",
                    nodes[v], nodes[e.dst], levels[v], levels[e.dst]
                );
            }
        }
    }
    if let Some(v) = levels.iter().position(|&l| l == usize::MAX) {
        panic!("node {:?} is unreachable from the minimal nodes", nodes[v]);
    }
    for e in &edges {
        assert!(
            levels[e.dst] == levels[e.src] + 1,
            "level inconsistency: {:?} -> {:?} spans levels {} -> {}",
            nodes[e.src],
            nodes[e.dst],
            levels[e.src],
            levels[e.dst]
        );
    }

    OrbitGraph {
        n,
        i,
        nodes,
        edges,
        levels,
    }
}

impl OrbitGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn nodes(&self) -> &[StdPair] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// BFS level of each node; sources sit at level 0.
    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn node_index(&self, p: &StdPair) -> Option<usize> {
        self.nodes.binary_search(p).ok()
    }

    /// Covering pairs of the closure order that no generator move
    /// realizes.
    pub fn closure_only_edges(&self) -> Vec<(usize, usize)> {
        let m = self.nodes.len();
        let mut leq = vec![vec![false; m]; m];
        for a in 0..m {
            for b in 0..m {
                leq[a][b] = closure_leq(&self.nodes[a], &self.nodes[b]);
            }
        }
        let mut out = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if a == b || !leq[a][b] {
                    continue;
                }
                let covers = (0..m)
                    .all(|c| c == a || c == b || !(leq[a][c] && leq[c][b]));
                if covers && !self.edges.iter().any(|e| (e.src, e.dst) == (a, b)) {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }
}
