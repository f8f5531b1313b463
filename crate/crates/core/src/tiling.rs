//! Tiles of the pentagrid and the heptagrid, and strips of a sector.
//!
//! Around a central tile the pentagrid has 5 sectors and the heptagrid 7,
//! each spanned by a white tree: tile `ν` of a sector is node `ν` of that
//! tree. A [`TileAddress`] names a tile by sector and node; global ids
//! interleave the sectors so that `0` is the central tile and `g >= 1` is
//! sector `(g - 1) mod s + 1`, node `(g - 1) div s + 1`.
//!
//! A sector also splits into strips `B_0, B_1, ...`, each spanned by a black
//! tree. Strip `B_n` is led by the node `R_n` on the rightmost branch of the
//! white tree and holds the descendants of `R_n` that are not descendants of
//! `R_{n+1}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::numeration::fib;
use crate::report::{Check, Discrepancy, Report};
use crate::tree::{cumulative_count, Status, TreeError, TreeKind, TreeTable};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("sector {sector} is out of range 1..={count}")]
    SectorOutOfRange { sector: u32, count: u32 },
    #[error("tile nodes are numbered from 1")]
    ZeroNode,
    #[error("cannot parse tile address {0:?}")]
    Parse(String),
    #[error("strips need the white tree")]
    WrongTree,
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GridKind {
    Pentagrid,
    Heptagrid,
}

impl GridKind {
    pub fn sector_count(self) -> u32 {
        match self {
            GridKind::Pentagrid => 5,
            GridKind::Heptagrid => 7,
        }
    }
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GridKind::Pentagrid => "pentagrid",
            GridKind::Heptagrid => "heptagrid",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Locus {
    Central,
    Sector { sector: u32, node: BigUint },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TileAddress {
    grid: GridKind,
    locus: Locus,
}

impl TileAddress {
    pub fn central(grid: GridKind) -> Self {
        Self {
            grid,
            locus: Locus::Central,
        }
    }

    /// Tile `node` of sector `sector`, sectors counted from 1.
    pub fn in_sector(grid: GridKind, sector: u32, node: BigUint) -> Result<Self, TilingError> {
        let count = grid.sector_count();
        if !(1..=count).contains(&sector) {
            return Err(TilingError::SectorOutOfRange { sector, count });
        }
        if node.is_zero() {
            return Err(TilingError::ZeroNode);
        }
        Ok(Self {
            grid,
            locus: Locus::Sector { sector, node },
        })
    }

    pub fn from_global_id(grid: GridKind, id: &BigUint) -> Self {
        if id.is_zero() {
            return Self::central(grid);
        }
        let s = grid.sector_count();
        let k = id - 1u32;
        let sector = (&k % s).to_u32().expect("remainder < sector count") + 1;
        Self {
            grid,
            locus: Locus::Sector {
                sector,
                node: k / s + 1u32,
            },
        }
    }

    pub fn to_global_id(&self) -> BigUint {
        match &self.locus {
            Locus::Central => BigUint::zero(),
            Locus::Sector { sector, node } => (node - 1u32) * self.grid.sector_count() + *sector,
        }
    }

    pub fn grid(&self) -> GridKind {
        self.grid
    }

    pub fn locus(&self) -> &Locus {
        &self.locus
    }

    /// Parses `g0` or `s<sector>:n<node>`.
    pub fn parse(grid: GridKind, s: &str) -> Result<Self, TilingError> {
        let bad = || TilingError::Parse(s.to_string());
        if s == "g0" {
            return Ok(Self::central(grid));
        }
        let (sector, node) = s
            .strip_prefix('s')
            .and_then(|rest| rest.split_once(":n"))
            .ok_or_else(bad)?;
        let sector = sector.parse::<u32>().map_err(|_| bad())?;
        let node = BigUint::from_str(node).map_err(|_| bad())?;
        Self::in_sector(grid, sector, node)
    }
}

impl fmt::Display for TileAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.locus {
            Locus::Central => f.write_str("g0"),
            Locus::Sector { sector, node } => write!(f, "s{sector}:n{node}"),
        }
    }
}

pub fn tile_address(grid: GridKind, global_id: u64) -> TileAddress {
    TileAddress::from_global_id(grid, &BigUint::from(global_id))
}

/// Node of the white tree on the rightmost branch at level `k`, the leading
/// tile of strip `B_k`: `f_{2k+2} - 1`.
pub fn rightmost_branch(k: usize) -> BigUint {
    fib(2 * k + 2) - 1u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StripAssignment {
    pub strip: usize,
    /// Breadth-first rank inside the strip, from 1.
    pub local: u64,
}

fn branch_u64(k: usize) -> u64 {
    rightmost_branch(k).to_u64().expect("within table range")
}

/// Strip of node `node` of the white tree and its rank inside the strip.
///
/// The strip is found by climbing to the nearest rightmost-branch ancestor.
/// Inside strip `n`, the nodes of relative level `j >= 1` form the block
/// ending `f_{2j-1}` before the rightmost node of white level `n + j`, and the
/// levels above hold `f_{2j-1}` nodes in all.
pub fn strip_index(table: &TreeTable, node: u64) -> Result<StripAssignment, TilingError> {
    if table.kind() != TreeKind::WhiteRoot {
        return Err(TilingError::WrongTree);
    }
    let level = table.level(node).ok_or(TreeError::NodeOutOfRange {
        node,
        len: table.len(),
    })?;
    let mut ancestor = node;
    let mut j = 0;
    while ancestor != branch_u64(level - j) {
        ancestor = table.father(ancestor).expect("the root is on the branch");
        j += 1;
    }
    let strip = level - j;
    if j == 0 {
        return Ok(StripAssignment { strip, local: 1 });
    }
    let above = fib(2 * j - 1).to_u64().expect("within table range");
    let block_start = branch_u64(level) + 1 - fib(2 * j + 1).to_u64().expect("within table range");
    Ok(StripAssignment {
        strip,
        local: above + (node - block_start) + 1,
    })
}

/// `f_{2k+1} = f_0 + f_2 + ... + f_{2k}` for every `k <= k_max`.
pub fn counting_identity(k_max: usize) -> Check {
    let mut check = Check::new("level_count_identity");
    let mut sum = BigUint::zero();
    for k in 0..=k_max {
        sum += fib(2 * k);
        let lhs = fib(2 * k + 1);
        check.record(k as u64, lhs == sum, || {
            format!("f_{} = {lhs}, sum = {sum}", 2 * k + 1)
        });
    }
    check
}

/// Strips of a white tree collected by walking sons, independently of
/// [`strip_index`]: for each `n`, the breadth-first order of the subtree of
/// `R_n` with the subtree of `R_{n+1}` cut off.
fn strips_by_traversal(table: &TreeTable) -> Vec<Vec<u64>> {
    (0..=table.depth())
        .map(|n| {
            let cut = branch_u64(n + 1);
            let mut order = vec![branch_u64(n)];
            let mut i = 0;
            while i < order.len() {
                if let Some(sons) = table.sons(order[i]) {
                    order.extend(sons.filter(|&s| s != cut));
                }
                i += 1;
            }
            order
        })
        .collect()
}

/// Exhaustive check that the strips partition the white tree to `depth`.
///
/// Compares [`strip_index`] with a traversal, checks strip level sizes, the
/// contiguity of each strip level and its abutment with the next strip, the
/// status and son structure of every strip against a black tree, and the
/// level-count identity. The leading tiles are compared with the published
/// index formula and any mismatch is reported as a warning.
///
/// A strip's leading node is white in the white tree while the black root is
/// black; its sons in the strip, black then white, match the black root's.
/// Statuses are therefore compared from local number 2 on, and the leading
/// node by the shape of its in-strip sons.
pub fn verify_strip_partition(depth: usize) -> Result<Report, TreeError> {
    let white = TreeTable::build(TreeKind::WhiteRoot, depth)?;
    let black = TreeTable::build(TreeKind::BlackRoot, depth)?;
    let mut report = Report::new(format!("strips of the white tree, depth {depth}"));
    let strips = strips_by_traversal(&white);

    let mut assigned = vec![0u8; white.len() as usize];
    let mut agree = Check::new("strip_index_matches_traversal");
    let mut sizes = Check::new("strip_level_sizes");
    let mut contiguous = Check::new("strip_levels_contiguous_and_abutting");
    let mut statuses = Check::new("strip_status_isomorphism");
    let mut son_map = Check::new("strip_son_isomorphism");
    let mut leading = Check::new("leading_tile_is_rightmost_of_level");

    for (n, members) in strips.iter().enumerate() {
        let r = rightmost_branch(n);
        let end = *white.level_range(n).expect("n <= depth").end();
        leading.record(n as u64, r == BigUint::from(end), || {
            format!("rightmost branch formula gives {r}, table has {end}")
        });

        let mut local_of = std::collections::HashMap::with_capacity(members.len());
        for (i, &node) in members.iter().enumerate() {
            let local = i as u64 + 1;
            local_of.insert(node, local);
            assigned[(node - 1) as usize] += 1;
            let got = strip_index(&white, node);
            let want = StripAssignment { strip: n, local };
            agree.record(node, got.as_ref() == Ok(&want), || {
                format!("strip_index gives {got:?}, traversal gives {want:?}")
            });
        }

        // levels of the strip as they appear in the white tree
        for j in 0..=depth - n {
            let level: Vec<u64> = members
                .iter()
                .copied()
                .filter(|&v| white.level(v) == Some(n + j))
                .collect();
            let want = fib(2 * j);
            sizes.record(n as u64, BigUint::from(level.len()) == want, || {
                format!(
                    "strip {n}, level {j}: {} nodes, expected {want}",
                    level.len()
                )
            });
            let gapless = level.windows(2).all(|w| w[1] == w[0] + 1);
            // the strip's block ends where the next strip's block, one level
            // up in strip terms, begins; the last strip level ends the row
            let abuts = match level.last() {
                None => false,
                Some(&last) if j == 0 => last == branch_u64(n),
                Some(&last) => {
                    let next = if j >= 1 && n < depth {
                        strips[n + 1]
                            .iter()
                            .find(|&&v| white.level(v) == Some(n + j))
                            .copied()
                    } else {
                        None
                    };
                    next.is_some_and(|first| first == last + 1)
                }
            };
            contiguous.record(n as u64, gapless && abuts, || {
                format!("strip {n}, level {j}: {level:?}")
            });
        }

        for (i, &node) in members.iter().enumerate() {
            let m = i as u64 + 1;
            let in_strip: Vec<u64> = match white.sons(node) {
                Some(sons) => sons.filter_map(|s| local_of.get(&s).copied()).collect(),
                None => continue,
            };
            if m == 1 {
                let shape: Vec<Status> = in_strip
                    .iter()
                    .map(|&l| white.status(members[(l - 1) as usize]).expect("in table"))
                    .collect();
                statuses.record(node, shape == [Status::Black, Status::White], || {
                    format!("leading node of strip {n} has in-strip sons {shape:?}")
                });
            }
            let want: Vec<u64> = black.sons(m).expect("black tree is as deep").collect();
            son_map.record(node, in_strip == want, || {
                format!("strip {n}, local {m}: in-strip sons {in_strip:?}, black sons {want:?}")
            });
        }
        for (i, &node) in members.iter().enumerate().skip(1) {
            let m = i as u64 + 1;
            let (s, b) = (white.status(node), black.status(m));
            statuses.record(node, s == b, || {
                format!("strip {n}, local {m}: {s:?} in the strip, {b:?} in the black tree")
            });
        }
    }

    let mut partition = Check::new("strips_partition_nodes");
    for (i, &count) in assigned.iter().enumerate() {
        partition.record(i as u64 + 1, count == 1, || format!("in {count} strips"));
    }

    for c in [
        partition, agree, sizes, contiguous, statuses, son_map, leading,
    ] {
        report.push(c);
    }
    report.push(counting_identity(depth));

    let cumulative =
        (0..=depth).all(|k| cumulative_count(TreeKind::WhiteRoot, k) == rightmost_branch(k));
    let published: Vec<BigUint> = (0..=depth.min(3))
        .map(|n| fib(2 * n + 1) - BigUint::one())
        .collect();
    let actual: Vec<BigUint> = (0..=depth.min(3)).map(rightmost_branch).collect();
    if published != actual {
        let show = |v: &[BigUint]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        report.warn(
            Discrepancy::LeadingTileIndex,
            format!(
                "leading tiles are the rightmost-branch nodes {} = f_(2n+2) - 1{}; f_(2n+1) - 1 \
                 gives {}",
                show(&actual),
                if cumulative { ", the level totals" } else { "" },
                show(&published),
            ),
        );
    }
    Ok(report)
}
