//! Breadth-first Fibonacci trees.
//!
//! A black node has the sons black, white; a white node has the sons black,
//! white, white, in that order from left to right. Nodes are numbered from 1
//! at the root, level by level and left to right within a level.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::numeration::{fib, FibCode};
use crate::report::{Check, Discrepancy, Report};

/// Deepest level a table may be generated to unless a caller raises the
/// limit. The white tree then has about 1.35 million nodes.
pub const DEFAULT_DEPTH_LIMIT: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeKind {
    WhiteRoot,
    BlackRoot,
}

impl TreeKind {
    pub fn root_status(self) -> Status {
        match self {
            TreeKind::WhiteRoot => Status::White,
            TreeKind::BlackRoot => Status::Black,
        }
    }
}

impl fmt::Display for TreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeKind::WhiteRoot => "white",
            TreeKind::BlackRoot => "black",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Black,
    White,
}

impl Status {
    /// Statuses of the sons, left to right.
    pub fn sons(self) -> &'static [Status] {
        match self {
            Status::Black => &[Status::Black, Status::White],
            Status::White => &[Status::Black, Status::White, Status::White],
        }
    }

    pub fn letter(self) -> char {
        match self {
            Status::Black => 'b',
            Status::White => 'w',
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Black => "black",
            Status::White => "white",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("depth {requested} exceeds the depth limit {limit}")]
    DepthLimit { requested: usize, limit: usize },
    #[error("node {node} is not in the table (nodes 1..={len})")]
    NodeOutOfRange { node: u64, len: u64 },
}

/// Everything the table knows about one node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeRecord {
    pub number: u64,
    pub status: Status,
    pub level: usize,
    pub father: Option<u64>,
    /// Sons from left to right; empty on the last generated level.
    pub sons: Vec<u64>,
}

/// White, black and total node counts per level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelStats {
    pub white: Vec<u64>,
    pub black: Vec<u64>,
    pub total: Vec<u64>,
}

impl LevelStats {
    /// `white' = 2 white + black`, `black' = white + black` (every node has
    /// exactly one black son), and `total'' = 3 total' - total` on
    /// consecutive levels.
    pub fn satisfies_recurrences(&self) -> bool {
        let n = self.total.len();
        let split = (0..n).all(|k| self.white[k] + self.black[k] == self.total[k]);
        let step = (0..n.saturating_sub(1)).all(|k| {
            self.white[k + 1] == 2 * self.white[k] + self.black[k]
                && self.black[k + 1] == self.white[k] + self.black[k]
        });
        let total = (0..n.saturating_sub(2))
            .all(|k| self.total[k + 2] + self.total[k] == 3 * self.total[k + 1]);
        split && step && total
    }
}

/// A Fibonacci tree expanded breadth-first down to a fixed depth. Immutable
/// once built.
#[derive(Clone, Debug)]
pub struct TreeTable {
    kind: TreeKind,
    depth: usize,
    status: Vec<Status>,
    /// 0 for the root.
    father: Vec<u64>,
    /// First son, for nodes above the last level.
    first_son: Vec<u64>,
    /// `level_starts[k]` is the number of the leftmost node of level `k`;
    /// the final entry is one past the last node.
    level_starts: Vec<u64>,
}

impl TreeTable {
    pub fn build(kind: TreeKind, depth: usize) -> Result<Self, TreeError> {
        Self::build_with_limit(kind, depth, DEFAULT_DEPTH_LIMIT)
    }

    pub fn build_with_limit(kind: TreeKind, depth: usize, limit: usize) -> Result<Self, TreeError> {
        if depth > limit {
            return Err(TreeError::DepthLimit {
                requested: depth,
                limit,
            });
        }
        let mut status = vec![kind.root_status()];
        let mut father = vec![0];
        let mut first_son = Vec::new();
        let mut level_starts = vec![1, 2];
        for level in 0..depth {
            let (lo, hi) = (level_starts[level], level_starts[level + 1]);
            for node in lo..hi {
                first_son.push(status.len() as u64 + 1);
                for &s in status[(node - 1) as usize].sons() {
                    status.push(s);
                    father.push(node);
                }
            }
            level_starts.push(status.len() as u64 + 1);
        }
        Ok(Self {
            kind,
            depth,
            status,
            father,
            first_son,
            level_starts,
        })
    }

    pub fn kind(&self) -> TreeKind {
        self.kind
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Number of nodes in the table.
    pub fn len(&self) -> u64 {
        self.status.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.status.is_empty()
    }

    pub fn contains(&self, node: u64) -> bool {
        node >= 1 && node <= self.len()
    }

    pub fn nodes(&self) -> RangeInclusive<u64> {
        1..=self.len()
    }

    pub fn status(&self, node: u64) -> Option<Status> {
        self.contains(node)
            .then(|| self.status[(node - 1) as usize])
    }

    pub fn level(&self, node: u64) -> Option<usize> {
        self.contains(node)
            .then(|| self.level_starts.partition_point(|&s| s <= node) - 1)
    }

    pub fn father(&self, node: u64) -> Option<u64> {
        if !self.contains(node) {
            return None;
        }
        match self.father[(node - 1) as usize] {
            0 => None,
            f => Some(f),
        }
    }

    /// Sons of `node`, or `None` if they were not generated.
    pub fn sons(&self, node: u64) -> Option<RangeInclusive<u64>> {
        let status = self.status(node)?;
        let first = *self.first_son.get((node - 1) as usize)?;
        Some(first..=first + status.sons().len() as u64 - 1)
    }

    pub fn leftmost_son(&self, node: u64) -> Option<u64> {
        self.sons(node).map(|r| *r.start())
    }

    pub fn rightmost_son(&self, node: u64) -> Option<u64> {
        self.sons(node).map(|r| *r.end())
    }

    /// Node numbers on level `k`.
    pub fn level_range(&self, k: usize) -> Option<RangeInclusive<u64>> {
        (k <= self.depth).then(|| self.level_starts[k]..=self.level_starts[k + 1] - 1)
    }

    pub fn node_info(&self, node: u64) -> Result<NodeRecord, TreeError> {
        let status = self.status(node).ok_or(TreeError::NodeOutOfRange {
            node,
            len: self.len(),
        })?;
        Ok(NodeRecord {
            number: node,
            status,
            level: self.level(node).expect("node is in the table"),
            father: self.father(node),
            sons: self.sons(node).map(Iterator::collect).unwrap_or_default(),
        })
    }

    pub fn level_stats(&self) -> LevelStats {
        let mut stats = LevelStats {
            white: Vec::with_capacity(self.depth + 1),
            black: Vec::with_capacity(self.depth + 1),
            total: Vec::with_capacity(self.depth + 1),
        };
        for k in 0..=self.depth {
            let range = self.level_range(k).expect("k <= depth");
            let (lo, hi) = (*range.start() as usize - 1, *range.end() as usize);
            let black = self.status[lo..hi]
                .iter()
                .filter(|&&s| s == Status::Black)
                .count() as u64;
            let total = (hi - lo) as u64;
            stats.black.push(black);
            stats.white.push(total - black);
            stats.total.push(total);
        }
        stats
    }
}

/// Nodes on level `k`: `f_{2k+1}` in the white tree, `f_{2k}` in the black one.
pub fn level_count(kind: TreeKind, k: usize) -> BigUint {
    match kind {
        TreeKind::WhiteRoot => fib(2 * k + 1),
        TreeKind::BlackRoot => fib(2 * k),
    }
}

/// Nodes on levels `0..=k`: `f_{2k+2} - 1` in the white tree, `f_{2k+1}` in
/// the black one.
pub fn cumulative_count(kind: TreeKind, k: usize) -> BigUint {
    match kind {
        TreeKind::WhiteRoot => fib(2 * k + 2) - 1u32,
        TreeKind::BlackRoot => fib(2 * k + 1),
    }
}

/// Level of node `node` (counted from 1) in a tree of the given kind. Node 0
/// is reported on level 0.
pub fn level_of(kind: TreeKind, node: &BigUint) -> usize {
    (0..)
        .find(|&k| cumulative_count(kind, k) >= *node)
        .expect("cumulative counts are unbounded")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Leftmost,
    Rightmost,
}

/// Number and Fibonacci code of the leftmost or rightmost node of level `k`,
/// from the level counts alone.
///
/// The white leftmost node is `f_{2k}` with code `1 0^(2k-1)` (the root when
/// `k = 0`); the black rightmost node is `f_{2k+1}` with code `1 0^(2k)`.
pub fn extremal_node(kind: TreeKind, k: usize, side: Side) -> (BigUint, FibCode) {
    let number = match (side, k) {
        (Side::Leftmost, 0) => BigUint::one(),
        (Side::Leftmost, _) => cumulative_count(kind, k - 1) + 1u32,
        (Side::Rightmost, _) => cumulative_count(kind, k),
    };
    let code = FibCode::encode(&number).expect("node numbers are positive");
    (number, code)
}

/// Level counts, sibling blocks, father links, extremal nodes and level
/// statistics of `table` against their closed forms. For the white tree also
/// checks the status/trailing-zero parity rule and reports the misprinted
/// rightmost-node index.
pub fn verify_structure(table: &TreeTable) -> Report {
    let kind = table.kind();
    let mut report = Report::new(format!("{kind} tree structure, depth {}", table.depth()));

    let mut counts = Check::new("level_count_formula");
    let mut extremal = Check::new("extremal_nodes");
    for k in 0..=table.depth() {
        let range = table.level_range(k).expect("k <= depth");
        let size = range.end() - range.start() + 1;
        let expected = level_count(kind, k);
        counts.record(k as u64, BigUint::from(size) == expected, || {
            format!("level {k} has {size} nodes, expected {expected}")
        });
        for (side, observed) in [
            (Side::Leftmost, *range.start()),
            (Side::Rightmost, *range.end()),
        ] {
            let (number, code) = extremal_node(kind, k, side);
            let observed_code = FibCode::from_u64(observed).expect("positive");
            extremal.record(
                k as u64,
                number == BigUint::from(observed) && code == observed_code,
                || {
                    format!(
                        "{side:?} of level {k} is {observed}, closed form gives {number} ({code})"
                    )
                },
            );
        }
    }

    let mut closed_form_codes = Check::new("extremal_codes");
    for k in 0..=table.depth() {
        let (_, code) = match kind {
            TreeKind::WhiteRoot => extremal_node(kind, k, Side::Leftmost),
            TreeKind::BlackRoot => extremal_node(kind, k, Side::Rightmost),
        };
        let zeros = match kind {
            TreeKind::WhiteRoot => (2 * k).saturating_sub(1),
            TreeKind::BlackRoot => 2 * k,
        };
        let expected = FibCode::from_u64(1).expect("1").append_zeros(zeros);
        closed_form_codes.record(k as u64, code == expected, || {
            format!("level {k}: {code}, expected {expected}")
        });
    }

    let mut blocks = Check::new("son_blocks_tile_next_level");
    let mut adjacent = Check::new("adjacent_son_blocks");
    let mut fathers = Check::new("father_links");
    let mut son_counts = Check::new("son_count_by_status");
    for k in 0..table.depth() {
        let range = table.level_range(k).expect("k < depth");
        let next = table.level_range(k + 1).expect("k + 1 <= depth");
        let mut expected_first = *next.start();
        for node in range.clone() {
            let sons = table
                .sons(node)
                .expect("sons generated above the last level");
            blocks.record(node, *sons.start() == expected_first, || {
                format!("sons start at {}, expected {expected_first}", sons.start())
            });
            expected_first = sons.end() + 1;
            if node < *range.end() {
                let next_left = table.leftmost_son(node + 1).expect("same level");
                adjacent.record(node, sons.end() + 1 == next_left, || {
                    format!(
                        "s_r({node}) + 1 = {}, s_l({}) = {next_left}",
                        sons.end() + 1,
                        node + 1
                    )
                });
            }
            let status = table.status(node).expect("in table");
            son_counts.record(node, sons.clone().count() == status.sons().len(), || {
                format!("{status} node has {} sons", sons.clone().count())
            });
            for son in sons {
                fathers.record(son, table.father(son) == Some(node), || {
                    format!("father is {:?}, expected {node}", table.father(son))
                });
            }
        }
        blocks.record(k as u64, expected_first == next.end() + 1, || {
            format!(
                "son blocks of level {k} end at {}, level {} ends at {}",
                expected_first - 1,
                k + 1,
                next.end()
            )
        });
    }

    let mut stats_check = Check::new("level_stats_recurrences");
    let stats = table.level_stats();
    stats_check.record(table.depth() as u64, stats.satisfies_recurrences(), || {
        format!("{stats:?}")
    });

    report.push(counts);
    report.push(extremal);
    report.push(closed_form_codes);
    report.push(blocks);
    report.push(adjacent);
    report.push(fathers);
    report.push(son_counts);
    report.push(stats_check);

    if kind == TreeKind::WhiteRoot {
        let mut parity = Check::new("black_iff_odd_trailing_zeros");
        for node in table.nodes() {
            let black = table.status(node) == Some(Status::Black);
            let zeros = FibCode::from_u64(node).expect("positive").trailing_zeros();
            parity.record(node, black == (zeros % 2 == 1), || {
                format!(
                    "{} with {zeros} trailing zeros",
                    table.status(node).expect("in table")
                )
            });
        }
        report.push(parity);

        // the published rightmost index f_{2k} - 1 versus the table
        let mismatched: Vec<usize> = (1..=table.depth())
            .filter(|&k| {
                let rightmost = *table.level_range(k).expect("k <= depth").end();
                fib(2 * k) - 1u32 != BigUint::from(rightmost)
            })
            .collect();
        if let Some(&k) = mismatched.first() {
            let rightmost = *table.level_range(k).expect("k <= depth").end();
            report.warn(
                Discrepancy::WhiteRightmostIndex,
                format!(
                    "rightmost node of white level k is f_(2k+2) - 1, not f_(2k) - 1 \
                     (level {k}: node {rightmost}, f_{} - 1 = {}; differs on {} of {} levels)",
                    2 * k,
                    fib(2 * k) - 1u32,
                    mismatched.len(),
                    table.depth(),
                ),
            );
        }
    }
    report
}
