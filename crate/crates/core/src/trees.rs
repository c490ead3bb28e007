//! Weighted leaf-labelled trees.
//!
//! A tree has a root vertex of valence one; its single edge is the root edge
//! and leads to [`Node`] `root` of a [`WeightedTree`]. Every node stores the
//! weight of the edge joining it to its parent. A weighting is valid when the
//! weights along every leaf-to-root path sum to exactly 1.
//!
//! Normalized trees ([`TreePoint::Tree`]) have positive weights and no vertex
//! with a single child; everything with a vanishing root or leaf edge is the
//! basepoint.
//!
//! JSON form: `{"root": node}` with `node = {"w": "p/q", "children": [...]}`
//! or `{"w": "p/q", "leaf": "label"}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::FlagChain;

pub type Weight = BigRational;
pub type Label = String;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(Label),
    Internal(Vec<Node>),
}

/// A non-root vertex together with the edge to its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    weight: Weight,
    kind: NodeKind,
}

impl Node {
    pub fn leaf(label: impl Into<Label>, weight: Weight) -> Self {
        Self {
            weight,
            kind: NodeKind::Leaf(label.into()),
        }
    }

    pub fn internal(weight: Weight, children: Vec<Node>) -> Self {
        Self {
            weight,
            kind: NodeKind::Internal(children),
        }
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn kind(&self) -> &NodeKind {
        &self.kind
    }

    pub fn children(&self) -> &[Node] {
        match &self.kind {
            NodeKind::Leaf(_) => &[],
            NodeKind::Internal(c) => c,
        }
    }

    pub fn label(&self) -> Option<&str> {
        match &self.kind {
            NodeKind::Leaf(l) => Some(l),
            NodeKind::Internal(_) => None,
        }
    }

    /// Leaf labels below this node.
    pub fn leaf_labels(&self) -> BTreeSet<Label> {
        let mut out = BTreeSet::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut BTreeSet<Label>) {
        match &self.kind {
            NodeKind::Leaf(l) => {
                out.insert(l.clone());
            }
            NodeKind::Internal(c) => c.iter().for_each(|n| n.collect_labels(out)),
        }
    }

    fn min_label(&self) -> &str {
        match &self.kind {
            NodeKind::Leaf(l) => l,
            NodeKind::Internal(c) => c.iter().map(Node::min_label).min().unwrap_or(""),
        }
    }

    fn canonicalize(&mut self) {
        if let NodeKind::Internal(c) = &mut self.kind {
            c.iter_mut().for_each(Node::canonicalize);
            c.sort_by(|a, b| a.min_label().cmp(b.min_label()));
        }
    }

    fn scale(&mut self, factor: &Weight) {
        self.weight = &self.weight * factor;
        if let NodeKind::Internal(c) = &mut self.kind {
            c.iter_mut().for_each(|n| n.scale(factor));
        }
    }

    fn path_sums_into(&self, above: &Weight, out: &mut BTreeMap<Label, Weight>) {
        let total = above + &self.weight;
        match &self.kind {
            NodeKind::Leaf(l) => {
                out.insert(l.clone(), total);
            }
            NodeKind::Internal(c) => c.iter().for_each(|n| n.path_sums_into(&total, out)),
        }
    }

    /// Weight from this node's parent down to any leaf below it.
    fn height(&self) -> Weight {
        match &self.kind {
            NodeKind::Leaf(_) => self.weight.clone(),
            NodeKind::Internal(c) => &self.weight + c[0].height(),
        }
    }

    fn any_zero_leaf(&self) -> bool {
        match &self.kind {
            NodeKind::Leaf(_) => self.weight.is_zero(),
            NodeKind::Internal(c) => c.iter().any(Node::any_zero_leaf),
        }
    }

    /// Replaces every single-child vertex by its child, adding edge weights.
    fn merge_unary(self) -> Node {
        match self.kind {
            NodeKind::Leaf(_) => self,
            NodeKind::Internal(c) => {
                let mut c: Vec<Node> = c.into_iter().map(Node::merge_unary).collect();
                if c.len() == 1 {
                    let mut only = c.pop().expect("one child");
                    only.weight += self.weight;
                    only
                } else {
                    Node::internal(self.weight, c)
                }
            }
        }
    }

    /// Contracts zero-weight edges strictly below this node.
    fn contract_zero_children(self) -> Node {
        match self.kind {
            NodeKind::Leaf(_) => self,
            NodeKind::Internal(c) => {
                let mut out = Vec::with_capacity(c.len());
                for child in c {
                    let child = child.contract_zero_children();
                    match child.kind {
                        NodeKind::Internal(grand) if child.weight.is_zero() => out.extend(grand),
                        kind => out.push(Node {
                            weight: child.weight,
                            kind,
                        }),
                    }
                }
                Node::internal(self.weight, out)
            }
        }
    }

    fn is_normal(&self) -> bool {
        self.weight.is_positive()
            && match &self.kind {
                NodeKind::Leaf(_) => true,
                NodeKind::Internal(c) => c.len() >= 2 && c.iter().all(Node::is_normal),
            }
    }

    fn relabel(&mut self, map: &BTreeMap<Label, Label>) {
        match &mut self.kind {
            NodeKind::Leaf(l) => *l = map[l.as_str()].clone(),
            NodeKind::Internal(c) => c.iter_mut().for_each(|n| n.relabel(map)),
        }
    }

    /// Finds the node with leaf set exactly `labels` and replaces it by a leaf
    /// labelled `a` of weight `ω`; returns the removed node and `ω`.
    fn split_off(&mut self, labels: &BTreeSet<Label>, a: &str) -> Option<(Node, Weight)> {
        let NodeKind::Internal(children) = &mut self.kind else {
            return None;
        };
        for child in children.iter_mut() {
            let below = child.leaf_labels();
            if below == *labels {
                let omega = child.height();
                let taken = std::mem::replace(child, Node::leaf(a, omega.clone()));
                return Some((taken, omega));
            }
            if labels.is_subset(&below) {
                return child.split_off(labels, a);
            }
        }
        None
    }

    /// Replaces the leaf labelled `a` by `graft`.
    fn replace_leaf(&mut self, a: &str, graft: &mut Option<Node>) {
        match &mut self.kind {
            NodeKind::Leaf(l) if l == a => {
                *self = graft.take().expect("leaf labels are distinct");
            }
            NodeKind::Leaf(_) => {}
            NodeKind::Internal(c) => c.iter_mut().for_each(|n| n.replace_leaf(a, graft)),
        }
    }

    fn leaf_weight(&self, a: &str) -> Option<&Weight> {
        match &self.kind {
            NodeKind::Leaf(l) => (l == a).then_some(&self.weight),
            NodeKind::Internal(c) => c.iter().find_map(|n| n.leaf_weight(a)),
        }
    }
}

/// A rooted tree with at least two labelled leaves and a valid weighting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedTree {
    root: Node,
}

impl WeightedTree {
    /// Validates labels, weights and path sums; children are put in canonical
    /// order (by least leaf label).
    pub fn new(root: Node) -> Result<Self> {
        let tree = Self::structural(root)?;
        for (label, sum) in tree.path_sums() {
            if !sum.is_one() {
                return Err(Error::MalformedWeighting(format!(
                    "path from leaf {label} to the root has weight {sum}"
                )));
            }
        }
        Ok(tree)
    }

    fn structural(mut root: Node) -> Result<Self> {
        let mut labels = BTreeSet::new();
        let mut leaves = 0usize;
        let mut stack = vec![&root];
        while let Some(node) = stack.pop() {
            if node.weight.is_negative() {
                return Err(Error::MalformedWeighting(format!(
                    "negative weight {}",
                    node.weight
                )));
            }
            match &node.kind {
                NodeKind::Leaf(l) => {
                    leaves += 1;
                    if !labels.insert(l.clone()) {
                        return Err(Error::Labels(format!("label {l:?} used twice")));
                    }
                }
                NodeKind::Internal(c) if c.is_empty() => {
                    return Err(Error::Precondition(
                        "internal vertex without children".into(),
                    ));
                }
                NodeKind::Internal(c) => stack.extend(c),
            }
        }
        if leaves < 2 {
            return Err(Error::Precondition(
                "a tree needs at least two leaves".into(),
            ));
        }
        root.canonicalize();
        Ok(Self { root })
    }

    /// The vertex below the root edge.
    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn labels(&self) -> BTreeSet<Label> {
        self.root.leaf_labels()
    }

    /// Total weight on each leaf-to-root path.
    pub fn path_sums(&self) -> BTreeMap<Label, Weight> {
        let mut out = BTreeMap::new();
        self.root.path_sums_into(&Weight::zero(), &mut out);
        out
    }

    pub fn leaf_weight(&self, label: &str) -> Option<&Weight> {
        self.root.leaf_weight(label)
    }

    /// Positive weights and no single-child vertices.
    pub fn is_normal(&self) -> bool {
        self.root.is_normal()
    }

    /// Renames leaves; `map` must be a bijection defined on every label.
    pub fn relabel(&self, map: &BTreeMap<Label, Label>) -> Result<Self> {
        let labels = self.labels();
        let domain: BTreeSet<Label> = map.keys().cloned().collect();
        if domain != labels {
            return Err(Error::Labels(
                "relabelling must be defined exactly on the leaves".into(),
            ));
        }
        let image: BTreeSet<&Label> = map.values().collect();
        if image.len() != map.len() {
            return Err(Error::Labels("relabelling is not injective".into()));
        }
        let mut root = self.root.clone();
        root.relabel(map);
        root.canonicalize();
        Ok(Self { root })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Precondition(format!("tree JSON: {e}")))
    }
}

impl fmt::Display for WeightedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(n: &Node, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match &n.kind {
                NodeKind::Leaf(l) => write!(f, "{l}:{}", n.weight),
                NodeKind::Internal(c) => {
                    write!(f, "(")?;
                    for (i, child) in c.iter().enumerate() {
                        if i > 0 {
                            write!(f, " ")?;
                        }
                        go(child, f)?;
                    }
                    write!(f, "):{}", n.weight)
                }
            }
        }
        go(&self.root, f)
    }
}

/// A point of the space of weighted trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreePoint {
    Basepoint,
    Tree(WeightedTree),
}

impl TreePoint {
    pub fn is_basepoint(&self) -> bool {
        matches!(self, TreePoint::Basepoint)
    }

    pub fn tree(&self) -> Option<&WeightedTree> {
        match self {
            TreePoint::Basepoint => None,
            TreePoint::Tree(t) => Some(t),
        }
    }
}

impl fmt::Display for TreePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreePoint::Basepoint => write!(f, "*"),
            TreePoint::Tree(t) => write!(f, "{t}"),
        }
    }
}

/// Canonical representative of the point `t` names.
///
/// Single-child vertices are merged first (adding weights); a vanishing root
/// or leaf edge then gives the basepoint, and zero-weight internal edges are
/// contracted.
pub fn normalize(t: &WeightedTree) -> Result<TreePoint> {
    let t = WeightedTree::new(t.root.clone())?;
    let root = t.root.merge_unary();
    if root.weight.is_zero() || root.any_zero_leaf() {
        return Ok(TreePoint::Basepoint);
    }
    let root = root.contract_zero_children();
    Ok(TreePoint::Tree(WeightedTree::structural(root)?))
}

/// The tree of a point in the simplex spanned by `chain`, with barycentric
/// coordinates `coords` (one per level `λ_0 … λ_k`). Leaves are labelled
/// `1..n`.
pub fn tree_of_simplex(chain: &FlagChain, coords: &[Weight]) -> Result<TreePoint> {
    let levels = chain.levels();
    if coords.len() != levels.len() {
        return Err(Error::Precondition(format!(
            "{} coordinates for a chain with {} levels",
            coords.len(),
            levels.len()
        )));
    }
    if let Some(c) = coords.iter().find(|c| c.is_negative()) {
        return Err(Error::Precondition(format!("negative coordinate {c}")));
    }
    let total: Weight = coords.iter().sum();
    if !total.is_one() {
        return Err(Error::MalformedWeighting(format!(
            "coordinates sum to {total}"
        )));
    }

    fn build(
        levels: &[crate::partition::Partition],
        coords: &[Weight],
        i: usize,
        block: u16,
    ) -> Node {
        if i == 0 {
            let label = (block.trailing_zeros() + 1).to_string();
            return Node::leaf(label, coords[0].clone());
        }
        let children = levels[i - 1]
            .masks()
            .iter()
            .filter(|&&b| b & block == b)
            .map(|&b| build(levels, coords, i - 1, b))
            .collect();
        Node::internal(coords[i].clone(), children)
    }
    let k = levels.len() - 1;
    let top = levels[k].masks()[0];
    normalize(&WeightedTree::new(build(&levels, coords, k, top))?)
}

/// Grafts the root edge of `v` onto the leaf edge of `u` labelled `a`.
///
/// With `ω` the weight of that leaf edge, every weight of `v` is multiplied
/// by `ω`; the merged edge gets `ω` times the root weight of `v`.
pub fn graft(u: &WeightedTree, a: &str, v: &WeightedTree) -> Result<WeightedTree> {
    let omega = u
        .leaf_weight(a)
        .ok_or_else(|| Error::Labels(format!("{a:?} is not a leaf of the outer tree")))?
        .clone();
    let rest: BTreeSet<Label> = u.labels().into_iter().filter(|l| l != a).collect();
    if let Some(clash) = v.labels().intersection(&rest).next() {
        return Err(Error::Labels(format!(
            "label {clash:?} occurs in both trees"
        )));
    }
    if omega.is_zero() {
        return Err(Error::DegenerateGraft);
    }
    let mut inner = v.root.clone();
    inner.scale(&omega);
    let mut root = u.root.clone();
    root.replace_leaf(a, &mut Some(inner));
    root.canonicalize();
    Ok(WeightedTree { root })
}

/// The decomposition `∘_a`: splits `t` as `U ∪_a V` with `U` over `a_labels`
/// and `V` over `b_labels`, or returns `None` (the basepoint) when `t` has no
/// vertex whose leaves are exactly `b_labels`.
///
/// `ω` is the weight from the top of the merged edge down to any leaf of
/// `b_labels`; `U` gets a leaf edge of weight `ω` at `a`, and the weights of
/// `V` are divided by `ω`.
pub fn cocompose(
    t: &WeightedTree,
    a_labels: &BTreeSet<Label>,
    a: &str,
    b_labels: &BTreeSet<Label>,
) -> Result<Option<(WeightedTree, WeightedTree)>> {
    if !t.is_normal() {
        return Err(Error::Precondition("tree must be normalized".into()));
    }
    if !a_labels.contains(a) {
        return Err(Error::Labels(format!(
            "{a:?} is not in the outer label set"
        )));
    }
    if a_labels.len() < 2 || b_labels.len() < 2 {
        return Err(Error::Labels(
            "both label sets need at least two labels".into(),
        ));
    }
    let rest: BTreeSet<Label> = a_labels.iter().filter(|l| *l != a).cloned().collect();
    if !rest.is_disjoint(b_labels) {
        return Err(Error::Labels("label sets overlap".into()));
    }
    let all: BTreeSet<Label> = rest.union(b_labels).cloned().collect();
    if all != t.labels() {
        return Err(Error::Labels("label sets do not match the tree".into()));
    }
    let mut outer = t.root.clone();
    let Some((mut inner, omega)) = outer.split_off(b_labels, a) else {
        return Ok(None);
    };
    inner.scale(&(Weight::one() / omega));
    outer.canonicalize();
    Ok(Some((
        WeightedTree { root: outer },
        WeightedTree { root: inner },
    )))
}

/// Parses `p/q` or an integer.
pub fn parse_weight(text: &str) -> Result<Weight> {
    Weight::from_str(text.trim())
        .map_err(|_| Error::MalformedWeighting(format!("{text:?} is not a rational number")))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeRepr {
    w: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    children: Option<Vec<NodeRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    leaf: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeRepr {
    root: NodeRepr,
}

impl From<&Node> for NodeRepr {
    fn from(n: &Node) -> Self {
        match &n.kind {
            NodeKind::Leaf(l) => NodeRepr {
                w: n.weight.to_string(),
                children: None,
                leaf: Some(l.clone()),
            },
            NodeKind::Internal(c) => NodeRepr {
                w: n.weight.to_string(),
                children: Some(c.iter().map(NodeRepr::from).collect()),
                leaf: None,
            },
        }
    }
}

impl TryFrom<NodeRepr> for Node {
    type Error = Error;

    fn try_from(r: NodeRepr) -> Result<Self> {
        let weight = parse_weight(&r.w)?;
        match (r.children, r.leaf) {
            (None, Some(l)) => Ok(Node::leaf(l, weight)),
            (Some(c), None) => Ok(Node::internal(
                weight,
                c.into_iter().map(Node::try_from).collect::<Result<_>>()?,
            )),
            _ => Err(Error::Precondition(
                "a node needs exactly one of \"children\" and \"leaf\"".into(),
            )),
        }
    }
}

impl Serialize for WeightedTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TreeRepr {
            root: NodeRepr::from(&self.root),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightedTree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TreeRepr::deserialize(d)?;
        let root = Node::try_from(repr.root).map_err(serde::de::Error::custom)?;
        WeightedTree::new(root).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn q(s: &str) -> Weight {
        parse_weight(s).unwrap()
    }

    fn leaf(l: &str, w: &str) -> Node {
        Node::leaf(l, q(w))
    }

    fn set(ls: &[&str]) -> BTreeSet<Label> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    fn cherry(a: &str, b: &str, leaves: &str, root: &str) -> WeightedTree {
        WeightedTree::new(Node::internal(
            q(root),
            vec![leaf(a, leaves), leaf(b, leaves)],
        ))
        .unwrap()
    }

    #[test]
    fn path_sums_are_checked() {
        let bad = Node::internal(q("1/2"), vec![leaf("1", "1/2"), leaf("2", "1/3")]);
        assert!(matches!(
            WeightedTree::new(bad),
            Err(Error::MalformedWeighting(_))
        ));
        let one_leaf = Node::internal(q("0"), vec![leaf("1", "1")]);
        assert!(WeightedTree::new(one_leaf).is_err());
    }

    #[test]
    fn normal_tree_is_unchanged() {
        let t = cherry("1", "2", "1/3", "2/3");
        assert_eq!(normalize(&t).unwrap(), TreePoint::Tree(t));
    }

    #[test]
    fn zero_leaf_edge_is_basepoint() {
        let t = cherry("1", "2", "0", "1");
        assert_eq!(normalize(&t).unwrap(), TreePoint::Basepoint);
        let t = cherry("1", "2", "1", "0");
        assert_eq!(normalize(&t).unwrap(), TreePoint::Basepoint);
    }

    #[test]
    fn zero_internal_edge_is_contracted() {
        let inner = Node::internal(q("0"), vec![leaf("1", "1/2"), leaf("2", "1/2")]);
        let t = WeightedTree::new(Node::internal(q("1/2"), vec![inner, leaf("3", "1/2")])).unwrap();
        let TreePoint::Tree(n) = normalize(&t).unwrap() else {
            panic!("expected a tree")
        };
        assert_eq!(n.root().children().len(), 3);
        assert!(n.path_sums().values().all(One::is_one));
        assert_eq!(normalize(&n).unwrap(), TreePoint::Tree(n));
    }

    #[test]
    fn two_point_simplex() {
        let chain = FlagChain::new(2, vec![]).unwrap();
        let TreePoint::Tree(t) = tree_of_simplex(&chain, &[q("1/3"), q("2/3")]).unwrap() else {
            panic!("expected a tree")
        };
        assert_eq!(t, cherry("1", "2", "1/3", "2/3"));
        let p = tree_of_simplex(&chain, &[q("0"), q("1")]).unwrap();
        assert!(p.is_basepoint());
    }

    #[test]
    fn single_child_levels_merge() {
        let mid = Partition::new(3, &[vec![1, 2], vec![3]]).unwrap();
        let chain = FlagChain::new(3, vec![mid]).unwrap();
        let t = tree_of_simplex(&chain, &[q("1/2"), q("1/4"), q("1/4")]).unwrap();
        let t = t.tree().unwrap();
        assert_eq!(t.leaf_weight("3"), Some(&q("3/4")));
        assert_eq!(t.root().weight(), &q("1/4"));
        assert_eq!(t.root().children()[0].leaf_labels(), set(&["1", "2"]));
        assert!(tree_of_simplex(&chain, &[q("1/2"), q("1/2")]).is_err());
        assert!(tree_of_simplex(&chain, &[q("1"), q("1/2"), q("-1/2")]).is_err());
    }

    #[test]
    fn graft_of_cherries() {
        let u = cherry("a", "3", "1/2", "1/2");
        let v = cherry("1", "2", "1/2", "1/2");
        let g = graft(&u, "a", &v).unwrap();
        assert_eq!(g.labels(), set(&["1", "2", "3"]));
        assert_eq!(g.leaf_weight("1"), Some(&q("1/4")));
        assert_eq!(g.root().children()[0].weight(), &q("1/4"));
        assert!(g.path_sums().values().all(One::is_one));
    }

    #[test]
    fn graft_at_full_height_keeps_weights() {
        let u = WeightedTree::new(Node::internal(q("0"), vec![leaf("a", "1"), leaf("b", "1")]))
            .unwrap();
        let v = cherry("1", "2", "1/3", "2/3");
        let g = graft(&u, "a", &v).unwrap();
        assert_eq!(g.root().children()[0], v.root().clone());
    }

    #[test]
    fn graft_rejects_bad_input() {
        let u = cherry("a", "1", "1/2", "1/2");
        let v = cherry("1", "2", "1/2", "1/2");
        assert!(matches!(graft(&u, "a", &v), Err(Error::Labels(_))));
        assert!(matches!(graft(&u, "z", &v), Err(Error::Labels(_))));
        let flat = cherry("a", "b", "0", "1");
        let v = cherry("x", "y", "1/2", "1/2");
        assert!(matches!(graft(&flat, "a", &v), Err(Error::DegenerateGraft)));
    }

    #[test]
    fn corolla_does_not_split() {
        let t = WeightedTree::new(Node::internal(
            q("1/2"),
            vec![leaf("1", "1/2"), leaf("2", "1/2"), leaf("3", "1/2")],
        ))
        .unwrap();
        let r = cocompose(&t, &set(&["a", "3"]), "a", &set(&["1", "2"])).unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn cocompose_inverts_graft() {
        let u = cherry("a", "3", "2/5", "3/5");
        let v = cherry("1", "2", "1/3", "2/3");
        let g = graft(&u, "a", &v).unwrap();
        let (u2, v2) = cocompose(&g, &set(&["a", "3"]), "a", &set(&["1", "2"]))
            .unwrap()
            .unwrap();
        assert_eq!((u2, v2), (u, v));
    }

    #[test]
    fn cocompose_three_leaves() {
        let inner = Node::internal(q("1/5"), vec![leaf("1", "3/5"), leaf("2", "3/5")]);
        let t = WeightedTree::new(Node::internal(q("1/5"), vec![inner, leaf("3", "4/5")])).unwrap();
        let (u, v) = cocompose(&t, &set(&["3", "a"]), "a", &set(&["1", "2"]))
            .unwrap()
            .unwrap();
        assert_eq!(u.leaf_weight("a"), Some(&q("4/5")));
        assert_eq!(v.root().weight(), &q("1/4"));
        assert!(u.path_sums().values().all(One::is_one));
        assert!(v.path_sums().values().all(One::is_one));
    }

    #[test]
    fn json_roundtrip() {
        let inner = Node::internal(q("1/5"), vec![leaf("1", "3/5"), leaf("2", "3/5")]);
        let t = WeightedTree::new(Node::internal(q("1/5"), vec![inner, leaf("3", "4/5")])).unwrap();
        let text = t.to_json();
        assert_eq!(
            text,
            r#"{"root":{"w":"1/5","children":[{"w":"1/5","children":[{"w":"3/5","leaf":"1"},{"w":"3/5","leaf":"2"}]},{"w":"4/5","leaf":"3"}]}}"#
        );
        assert_eq!(WeightedTree::from_json(&text).unwrap(), t);
        assert!(WeightedTree::from_json(r#"{"root":{"w":"1","leaf":"x","children":[]}}"#).is_err());
    }

    #[test]
    fn relabel_reorders_children() {
        let t = cherry("1", "2", "1/2", "1/2");
        let map = BTreeMap::from([
            ("1".to_string(), "b".to_string()),
            ("2".to_string(), "a".to_string()),
        ]);
        let r = t.relabel(&map).unwrap();
        assert_eq!(r.root().children()[0].label(), Some("a"));
        let bad = BTreeMap::from([
            ("1".to_string(), "a".to_string()),
            ("2".to_string(), "a".to_string()),
        ]);
        assert!(t.relabel(&bad).is_err());
    }
}
