//! The tree of even integers.
//!
//! Every proper prefix of a base 3/2 integer is itself an even integer, so the
//! even integers hang off the root `2` in a tree whose edge labels, read from
//! the root, spell each node's numeral. A node `x` with `x/2` odd has a single
//! child `3x/2 + 1` along digit 1; otherwise it has children `3x/2` and
//! `3x/2 + 2` along digits 0 and 2.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::numeral::{BaseSpec, Numeral};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("{value} is not a node of the even tree (need an even integer >= 2)")]
    InvalidNode { value: BigUint },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenTreeNode {
    pub value: BigUint,
    /// Digit on the edge into this node; the root carries 2.
    pub edge_digit: u8,
    pub children: Vec<EvenTreeNode>,
}

fn check_node(x: &BigUint) -> Result<(), TreeError> {
    if x.is_odd() || *x < BigUint::from(2u32) {
        return Err(TreeError::InvalidNode { value: x.clone() });
    }
    Ok(())
}

/// Outgoing edges of node `x` as `(digit, child value)` pairs.
pub fn children(x: &BigUint) -> Result<Vec<(u8, BigUint)>, TreeError> {
    check_node(x)?;
    let half = x >> 1u32;
    let scaled = &half * 3u32;
    Ok(if half.is_odd() {
        vec![(1, scaled + 1u32)]
    } else {
        vec![(0, scaled.clone()), (2, scaled + 2u32)]
    })
}

/// Builds the first `depth` levels of the tree.
///
/// # Panics
///
/// If `depth` is zero.
pub fn build_tree(depth: usize) -> EvenTreeNode {
    assert!(depth >= 1, "tree depth must be at least 1");
    grow(BigUint::from(2u32), 2, depth)
}

fn grow(value: BigUint, edge_digit: u8, levels: usize) -> EvenTreeNode {
    let children = if levels > 1 {
        children(&value)
            .expect("tree values are even and >= 2")
            .into_iter()
            .map(|(d, v)| grow(v, d, levels - 1))
            .collect()
    } else {
        Vec::new()
    };
    EvenTreeNode {
        value,
        edge_digit,
        children,
    }
}

impl EvenTreeNode {
    /// Node values level by level, left to right.
    pub fn levels(&self) -> Vec<Vec<&BigUint>> {
        let mut out = Vec::new();
        let mut frontier = vec![self];
        while !frontier.is_empty() {
            out.push(frontier.iter().map(|n| &n.value).collect());
            frontier = frontier.iter().flat_map(|n| n.children.iter()).collect();
        }
        out
    }

    /// Visits nodes depth-first, passing the 1-based depth of each.
    pub fn walk<F: FnMut(usize, &EvenTreeNode)>(&self, mut visit: F) {
        fn go<F: FnMut(usize, &EvenTreeNode)>(node: &EvenTreeNode, depth: usize, visit: &mut F) {
            visit(depth, node);
            for child in &node.children {
                go(child, depth + 1, visit);
            }
        }
        go(self, 1, &mut visit);
    }

    /// One node per line as `<depth> <digit>_<value>`, indented two spaces
    /// per level below the root.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.walk(|depth, node| {
            let _ = writeln!(
                out,
                "{:indent$}{} {}_{}",
                "",
                depth,
                node.edge_digit,
                node.value,
                indent = 2 * (depth - 1)
            );
        });
        out
    }
}

/// Reads the numeral of `x` off the tree by walking up to the root.
///
/// The parent of `x` is `2 * floor(x / 3)`, and the edge digit is checked
/// against the parent's child list, so this relies on the tree rule rather
/// than on the division-based encoder.
pub fn path_representation(x: &BigUint) -> Result<Numeral, TreeError> {
    check_node(x)?;
    let two = BigUint::from(2u32);
    let mut path = Vec::new();
    let mut node = x.clone();
    while node != two {
        let parent = (&node / 3u32) * 2u32;
        let digit = children(&parent)?
            .into_iter()
            .find(|(_, v)| *v == node)
            .map(|(d, _)| d)
            .ok_or_else(|| TreeError::InvalidNode {
                value: node.clone(),
            })?;
        path.push(u32::from(digit));
        node = parent;
    }
    path.push(2);
    path.reverse();
    Ok(Numeral::from_digits(BaseSpec::THREE_HALVES, path).expect("tree paths are canonical"))
}

/// Number of tree nodes at level `k` (the root is level 1), which is the
/// number of even integers with `k` digits.
///
/// Uses `a(k) = ceil((1 + sum of preceding terms) / 2)`.
pub fn level_count(k: usize) -> BigUint {
    level_counts(k).pop().unwrap_or_else(BigUint::zero)
}

/// `level_count(1..=k)` in one pass.
pub fn level_counts(k: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(k);
    let mut sum = BigUint::zero();
    for _ in 0..k {
        let term = (BigUint::one() + &sum).div_ceil(&BigUint::from(2u32));
        sum += &term;
        out.push(term);
    }
    out
}

/// How many nonnegative integers have exactly `k` base 3/2 digits, counting 0
/// as a one-digit integer.
///
/// With `S` the number of integers shorter than `k` digits (equivalently the
/// smallest `k`-digit integer), the count is `3 * ceil(S / 2) - S`. The first
/// term is 3.
pub fn integers_with_k_digits(k: usize) -> BigUint {
    integers_by_digit_count(k)
        .pop()
        .unwrap_or_else(BigUint::zero)
}

/// `integers_with_k_digits(1..=k)` in one pass.
pub fn integers_by_digit_count(k: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(k);
    let mut sum = BigUint::zero();
    for i in 0..k {
        let term = if i == 0 {
            BigUint::from(3u32)
        } else {
            sum.div_ceil(&BigUint::from(2u32)) * 3u32 - &sum
        };
        sum += &term;
        out.push(term);
    }
    out
}

/// Level sizes of a materialized tree, for comparison with [`level_count`].
pub fn tree_level_sizes(root: &EvenTreeNode) -> Vec<usize> {
    root.levels().iter().map(Vec::len).collect()
}
