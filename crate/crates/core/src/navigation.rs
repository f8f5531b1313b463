//! Navigation by code rewriting.
//!
//! In the white tree every node has a preferred son whose code is the
//! father's code followed by `00` (Fibonacci codes) or `0` (golden codes). In
//! the black tree the node with that code, the successor, is either the
//! rightmost son or the node right after it, depending on the node's type: its
//! status combined with the ending of its code. Types propagate from a node to
//! its sons by a fixed automaton.
//!
//! Everything here computes from codes and statuses only; [`verify_theorems`]
//! checks the results against the breadth-first table.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::numeration::{FibCode, GoldenCode, GoldenWeights};
use crate::report::{Check, Discrepancy, Report};
use crate::tree::{level_of, Status, TreeError, TreeKind, TreeTable};

/// Black-tree nodes whose successor is fixed by hand rather than by type.
pub const BASE_CASES: [u64; 2] = [1, 2];

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NavigationError {
    #[error("operation needs the {expected} tree, got the {found} tree")]
    WrongTree { expected: TreeKind, found: TreeKind },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("sons of node {node} are not generated; depth {required_depth} is needed")]
    SonsNotGenerated { node: u64, required_depth: usize },
    #[error("successor {successor} of node {node} lies beyond the table; depth {required_depth} is needed")]
    BeyondTable {
        node: u64,
        successor: BigUint,
        required_depth: usize,
    },
    #[error("type {0} has no son rule")]
    NoSonRule(String),
    #[error("node {node} has no type in the successor rules")]
    Unclassified { node: u64 },
    #[error("preferred son of node {node} is {found}, expected son {expected}")]
    PositionMismatch {
        node: u64,
        found: BigUint,
        expected: u64,
    },
}

/// Type of a black-tree node under Fibonacci codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FibNodeType {
    B00,
    B01,
    W00,
    /// A white node numbered `f_{2k+1}`, `k >= 1`: the rightmost of its level.
    W00Star,
    W01,
    W10,
    Exceptional,
}

impl FibNodeType {
    pub fn name(self) -> &'static str {
        match self {
            FibNodeType::B00 => "b00",
            FibNodeType::B01 => "b01",
            FibNodeType::W00 => "w00",
            FibNodeType::W00Star => "w00*",
            FibNodeType::W01 => "w01",
            FibNodeType::W10 => "w10",
            FibNodeType::Exceptional => "exceptional",
        }
    }

    /// Classifies a node from its number and status. Node 1 and 2 and black
    /// nodes whose code ends in `10` fall outside the five-ending scheme.
    pub fn classify(node: u64, status: Status) -> Self {
        if BASE_CASES.contains(&node) {
            return FibNodeType::Exceptional;
        }
        let code = FibCode::from_u64(node).expect("node numbers are positive");
        let digits = code.digits();
        match (status, &digits[digits.len() - 2..]) {
            (Status::Black, [0, 0]) => FibNodeType::B00,
            (Status::Black, [0, 1]) => FibNodeType::B01,
            (Status::Black, _) => FibNodeType::Exceptional,
            (Status::White, [0, 0]) if is_one_then_even_zeros(digits) => FibNodeType::W00Star,
            (Status::White, [0, 0]) => FibNodeType::W00,
            (Status::White, [0, 1]) => FibNodeType::W01,
            (Status::White, _) => FibNodeType::W10,
        }
    }

    /// Types of the sons, left to right.
    pub fn son_types(self) -> Result<&'static [FibNodeType], NavigationError> {
        use FibNodeType::*;
        Ok(match self {
            B00 => &[B01, W10],
            B01 => &[B01, W10],
            W00 => &[B00, W01, W00],
            W00Star => &[B01, W10, W00Star],
            W01 => &[B00, W01, W10],
            W10 => &[B00, W01, W00],
            Exceptional => return Err(NavigationError::NoSonRule(self.name().into())),
        })
    }

    /// How the successor relates to the rightmost son.
    pub fn relation(self) -> Option<Relation> {
        use FibNodeType::*;
        match self {
            B00 | B01 | W01 => Some(Relation::RightmostSonPlusOne),
            W00 | W00Star | W10 => Some(Relation::RightmostSon),
            Exceptional => None,
        }
    }

    /// Whether `(self, next)` may occur on consecutive nodes of one level.
    pub fn may_precede(self, next: FibNodeType) -> bool {
        use FibNodeType::*;
        let unstar = |t| if t == W00Star { W00 } else { t };
        matches!(
            (unstar(self), unstar(next)),
            (B00, W01)
                | (B01, W10)
                | (W00, B01)
                | (W10, B00)
                | (W01, W00)
                | (W10, W00)
                | (W01, W10)
        )
    }
}

fn is_one_then_even_zeros(digits: &[u8]) -> bool {
    digits.len() >= 3 && digits.len() % 2 == 1 && digits[1..].iter().all(|&d| d == 0)
}

impl fmt::Display for FibNodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Type of a black-tree node under golden codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GoldenNodeType {
    B0,
    B1,
    W0,
    W1,
    W2,
    Exceptional,
}

impl GoldenNodeType {
    pub fn name(self) -> &'static str {
        match self {
            GoldenNodeType::B0 => "b0",
            GoldenNodeType::B1 => "b1",
            GoldenNodeType::W0 => "w0",
            GoldenNodeType::W1 => "w1",
            GoldenNodeType::W2 => "w2",
            GoldenNodeType::Exceptional => "exceptional",
        }
    }

    pub fn classify(node: u64, status: Status) -> Self {
        Self::classify_with(GoldenWeights::standard(), node, status)
    }

    /// Classification under arbitrary golden weights.
    pub fn classify_with(weights: &GoldenWeights, node: u64, status: Status) -> Self {
        if BASE_CASES.contains(&node) {
            return GoldenNodeType::Exceptional;
        }
        let code = weights
            .encode(&BigUint::from(node))
            .expect("node numbers are positive");
        match (status, code.last_digit()) {
            (Status::Black, 0) => GoldenNodeType::B0,
            (Status::Black, 1) => GoldenNodeType::B1,
            (Status::Black, _) => GoldenNodeType::Exceptional,
            (Status::White, 0) => GoldenNodeType::W0,
            (Status::White, 1) => GoldenNodeType::W1,
            (Status::White, _) => GoldenNodeType::W2,
        }
    }

    pub fn son_types(self) -> Result<&'static [GoldenNodeType], NavigationError> {
        use GoldenNodeType::*;
        Ok(match self {
            B0 => &[B0, W1],
            B1 => &[B1, W2],
            W0 => &[B0, W1, W0],
            W1 => &[B0, W1, W2],
            W2 => &[B0, W1, W2],
            Exceptional => return Err(NavigationError::NoSonRule(self.name().into())),
        })
    }

    pub fn relation(self) -> Option<Relation> {
        match self {
            GoldenNodeType::W0 => Some(Relation::RightmostSon),
            GoldenNodeType::Exceptional => None,
            _ => Some(Relation::RightmostSonPlusOne),
        }
    }

    pub fn may_precede(self, next: GoldenNodeType) -> bool {
        use GoldenNodeType::*;
        matches!(
            (self, next),
            (B0, W1) | (B1, W2) | (W1, B0) | (W2, B0) | (W1, W0) | (W1, W2)
        )
    }
}

impl fmt::Display for GoldenNodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    RightmostSon,
    RightmostSonPlusOne,
    BaseCase,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::RightmostSon => "rightmost_son",
            Relation::RightmostSonPlusOne => "rightmost_son_plus_one",
            Relation::BaseCase => "base_case",
        })
    }
}

/// The node whose code is the given node's code with zeros appended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessorResult<C> {
    pub node: u64,
    pub relation: Relation,
    pub code: C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Numeration {
    Fibonacci,
    Golden,
}

impl fmt::Display for Numeration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Numeration::Fibonacci => "fibonacci",
            Numeration::Golden => "golden",
        })
    }
}

fn require(table: &TreeTable, expected: TreeKind) -> Result<(), NavigationError> {
    if table.kind() != expected {
        return Err(NavigationError::WrongTree {
            expected,
            found: table.kind(),
        });
    }
    Ok(())
}

fn status_of(table: &TreeTable, node: u64) -> Result<Status, NavigationError> {
    table.status(node).ok_or_else(|| {
        TreeError::NodeOutOfRange {
            node,
            len: table.len(),
        }
        .into()
    })
}

fn sons_of(table: &TreeTable, node: u64) -> Result<std::ops::RangeInclusive<u64>, NavigationError> {
    status_of(table, node)?;
    table.sons(node).ok_or(NavigationError::SonsNotGenerated {
        node,
        required_depth: table.level(node).expect("in table") + 1,
    })
}

/// Looks `target` up in the table, failing with the depth it would need.
fn in_table(table: &TreeTable, node: u64, target: &BigUint) -> Result<u64, NavigationError> {
    match target.to_u64() {
        Some(t) if table.contains(t) => Ok(t),
        _ => Err(NavigationError::BeyondTable {
            node,
            successor: target.clone(),
            required_depth: level_of(table.kind(), target),
        }),
    }
}

pub fn fib_type(table: &TreeTable, node: u64) -> Result<FibNodeType, NavigationError> {
    require(table, TreeKind::BlackRoot)?;
    Ok(FibNodeType::classify(node, status_of(table, node)?))
}

pub fn golden_type(table: &TreeTable, node: u64) -> Result<GoldenNodeType, NavigationError> {
    require(table, TreeKind::BlackRoot)?;
    Ok(GoldenNodeType::classify(node, status_of(table, node)?))
}

pub fn fib_son_types(t: FibNodeType) -> Result<&'static [FibNodeType], NavigationError> {
    t.son_types()
}

pub fn golden_son_types(t: GoldenNodeType) -> Result<&'static [GoldenNodeType], NavigationError> {
    t.son_types()
}

/// Successor of `node` in the black tree under Fibonacci codes: the node
/// coded `[node]00`, with its relation to the rightmost son taken from the
/// type of `node`.
pub fn successor_black_fib(
    table: &TreeTable,
    node: u64,
) -> Result<SuccessorResult<FibCode>, NavigationError> {
    let t = fib_type(table, node)?;
    let relation = if BASE_CASES.contains(&node) {
        Relation::BaseCase
    } else {
        t.relation().ok_or(NavigationError::Unclassified { node })?
    };
    let code = FibCode::from_u64(node).expect("positive").append_zeros(2);
    let successor = in_table(table, node, &code.decode())?;
    Ok(SuccessorResult {
        node: successor,
        relation,
        code,
    })
}

/// Successor of `node` in the black tree under golden codes: the node coded
/// `[node]_g 0`.
pub fn successor_black_golden(
    table: &TreeTable,
    node: u64,
) -> Result<SuccessorResult<GoldenCode>, NavigationError> {
    let t = golden_type(table, node)?;
    let relation = if BASE_CASES.contains(&node) {
        Relation::BaseCase
    } else {
        t.relation().ok_or(NavigationError::Unclassified { node })?
    };
    let code = GoldenCode::from_u64(node).expect("positive").append_zero();
    let successor = in_table(table, node, &code.decode())?;
    Ok(SuccessorResult {
        node: successor,
        relation,
        code,
    })
}

/// Preferred son in the white tree under Fibonacci codes: the son coded
/// `[node]00`. It must be the black son of a black node and the middle son of
/// a white node; any other outcome is reported as an error.
pub fn preferred_son_white(table: &TreeTable, node: u64) -> Result<u64, NavigationError> {
    require(table, TreeKind::WhiteRoot)?;
    let sons = sons_of(table, node)?;
    let expected = match status_of(table, node)? {
        Status::Black => *sons.start(),
        Status::White => sons.start() + 1,
    };
    let found = FibCode::from_u64(node)
        .expect("positive")
        .append_zeros(2)
        .decode();
    if found != BigUint::from(expected) {
        return Err(NavigationError::PositionMismatch {
            node,
            found,
            expected,
        });
    }
    Ok(expected)
}

/// Preferred son in the white tree under golden codes: the son coded
/// `[node]_g 0`, which must be the leftmost white son.
pub fn preferred_son_golden(table: &TreeTable, node: u64) -> Result<u64, NavigationError> {
    require(table, TreeKind::WhiteRoot)?;
    let sons = sons_of(table, node)?;
    let expected = sons.start() + 1;
    let found = GoldenCode::from_u64(node)
        .expect("positive")
        .append_zero()
        .decode();
    if found != BigUint::from(expected) {
        return Err(NavigationError::PositionMismatch {
            node,
            found,
            expected,
        });
    }
    Ok(expected)
}

/// Builds the table and runs [`verify_theorems_on`].
pub fn verify_theorems(
    kind: TreeKind,
    numeration: Numeration,
    depth: usize,
) -> Result<Report, TreeError> {
    Ok(verify_theorems_on(
        &TreeTable::build(kind, depth)?,
        numeration,
    ))
}

/// Exhaustive check of the navigation rules for one tree and one numeration.
///
/// White tree: uniqueness, code and position of the preferred son, and
/// reconstruction of every son block from the preferred son's code.
///
/// Black tree: for every node from 3 on, the successor relation given by its
/// type, the son-type automaton, the list of type pairs allowed on
/// consecutive nodes of a level, and a census of the type classes. Nodes 1
/// and 2 are base cases; pairs involving them or their sons are not checked
/// against the pair list.
pub fn verify_theorems_on(table: &TreeTable, numeration: Numeration) -> Report {
    match (table.kind(), numeration) {
        (TreeKind::WhiteRoot, Numeration::Fibonacci) => verify_white_fib(table),
        (TreeKind::WhiteRoot, Numeration::Golden) => verify_white_golden(table),
        (TreeKind::BlackRoot, Numeration::Fibonacci) => verify_black_fib(table),
        (TreeKind::BlackRoot, Numeration::Golden) => verify_black_golden(table),
    }
}

fn title(table: &TreeTable, numeration: Numeration) -> String {
    format!(
        "{} tree, {} codes, depth {}",
        table.kind(),
        numeration,
        table.depth()
    )
}

/// Nodes above the last level, i.e. those with generated sons.
fn inner_nodes(table: &TreeTable) -> std::ops::RangeInclusive<u64> {
    match table.depth() {
        #[allow(clippy::reversed_empty_ranges)]
        0 => 1..=0,
        d => 1..=*table.level_range(d - 1).expect("d - 1 <= depth").end(),
    }
}

fn verify_white_fib(table: &TreeTable) -> Report {
    let mut report = Report::new(title(table, Numeration::Fibonacci));
    let mut unique = Check::new("preferred_son_unique");
    let mut position = Check::new("preferred_son_position");
    let mut closed_form = Check::new("sons_from_code_rewriting");
    for node in inner_nodes(table) {
        let sons = table.sons(node).expect("inner node");
        let status = table.status(node).expect("in table");
        let code = FibCode::from_u64(node).expect("positive");
        let target = code.append_zeros(2);
        let matching: Vec<u64> = sons
            .clone()
            .filter(|&s| FibCode::from_u64(s).expect("positive") == target)
            .collect();
        unique.record(node, matching.len() == 1, || {
            format!("{} sons coded {target}: {matching:?}", matching.len())
        });
        let expected = match status {
            Status::Black => *sons.start(),
            Status::White => sons.start() + 1,
        };
        position.record(
            node,
            preferred_son_white(table, node) == Ok(expected),
            || {
                format!(
                    "{status} node: son coded {target} is {}, expected {expected}",
                    target.decode()
                )
            },
        );

        // the whole son block from the preferred son's code alone
        let rebuilt: Vec<BigUint> = match status {
            Status::Black => vec![target.decode(), target.increment().decode()],
            Status::White => vec![
                target.decrement().expect("> 1").decode(),
                target.decode(),
                target.increment().decode(),
            ],
        };
        let oracle: Vec<BigUint> = sons.map(BigUint::from).collect();
        closed_form.record(node, rebuilt == oracle, || {
            format!("rewriting gives {rebuilt:?}, table has {oracle:?}")
        });
    }
    report.push(unique);
    report.push(position);
    report.push(closed_form);
    report
}

fn verify_white_golden(table: &TreeTable) -> Report {
    let mut report = Report::new(title(table, Numeration::Golden));
    let mut single = Check::new("single_son_ending_0");
    let mut code_check = Check::new("preferred_son_code");
    let mut position = Check::new("preferred_son_is_leftmost_white");
    let mut closed_form = Check::new("sons_from_code");
    for node in inner_nodes(table) {
        let sons = table.sons(node).expect("inner node");
        let code = GoldenCode::from_u64(node).expect("positive");
        let son_codes: Vec<(u64, GoldenCode)> = sons
            .clone()
            .map(|s| (s, GoldenCode::from_u64(s).expect("positive")))
            .collect();
        let ending_0: Vec<&(u64, GoldenCode)> = son_codes
            .iter()
            .filter(|(_, c)| c.last_digit() == 0)
            .collect();
        single.record(node, ending_0.len() == 1, || {
            format!("{} sons end in 0", ending_0.len())
        });
        let target = code.append_zero();
        let preferred = ending_0.first().map(|(s, _)| *s);
        let preferred_code = ending_0.first().map(|(_, c)| c.clone());
        code_check.record(node, preferred_code.as_ref() == Some(&target), || {
            format!("son ending in 0 is coded {preferred_code:?}, expected {target}")
        });
        let leftmost_white = sons
            .clone()
            .find(|&s| table.status(s) == Some(Status::White))
            .expect("every node has a white son");
        position.record(
            node,
            preferred == Some(leftmost_white) && preferred_son_golden(table, node).is_ok(),
            || format!("son ending in 0 is {preferred:?}, leftmost white son is {leftmost_white}"),
        );

        let p = target.decode();
        let rebuilt: Vec<BigUint> = match table.status(node).expect("in table") {
            Status::Black => vec![&p - 1u32, p.clone()],
            Status::White => vec![&p - 1u32, p.clone(), &p + 1u32],
        };
        let oracle: Vec<BigUint> = sons.map(BigUint::from).collect();
        closed_form.record(node, rebuilt == oracle, || {
            format!("code gives {rebuilt:?}, table has {oracle:?}")
        });
    }
    report.push(single);
    report.push(code_check);
    report.push(position);
    report.push(closed_form);
    report
}

/// Whether consecutive nodes `node`, `node + 1` fall inside the inductive
/// range: neither is a base case nor a son of one.
fn pair_in_range(table: &TreeTable, node: u64) -> bool {
    [node, node + 1].iter().all(|&n| {
        !BASE_CASES.contains(&n) && table.father(n).is_none_or(|f| !BASE_CASES.contains(&f))
    })
}

/// Checks shared by both numerations on the black tree.
struct BlackSweep<'a, T> {
    table: &'a TreeTable,
    types: Vec<T>,
}

impl<T: Copy + Eq + Ord + fmt::Display + 'static> BlackSweep<'_, T> {
    fn type_of(&self, node: u64) -> T {
        self.types[(node - 1) as usize]
    }

    fn successor_check(
        &self,
        name: &str,
        successor: impl Fn(u64) -> BigUint,
        relation: impl Fn(T) -> Option<Relation>,
    ) -> Check {
        let mut check = Check::new(name);
        for node in inner_nodes(self.table) {
            if BASE_CASES.contains(&node) {
                continue;
            }
            let rightmost = self.table.rightmost_son(node).expect("inner node");
            let succ = successor(node);
            // the successor must itself be in the table to be compared
            if succ > BigUint::from(self.table.len()) {
                continue;
            }
            let t = self.type_of(node);
            let expected = match relation(t) {
                Some(Relation::RightmostSon) => Some(rightmost),
                Some(Relation::RightmostSonPlusOne) => Some(rightmost + 1),
                _ => None,
            };
            check.record(
                node,
                expected.is_some_and(|e| BigUint::from(e) == succ),
                || format!("type {t}: successor {succ}, s_r = {rightmost}"),
            );
        }
        check
    }

    fn son_rule_check(
        &self,
        name: &str,
        rule: impl Fn(T) -> Result<&'static [T], NavigationError>,
    ) -> Check {
        let mut check = Check::new(name);
        for node in inner_nodes(self.table) {
            if BASE_CASES.contains(&node) {
                continue;
            }
            let t = self.type_of(node);
            let observed: Vec<T> = self
                .table
                .sons(node)
                .expect("inner node")
                .map(|s| self.type_of(s))
                .collect();
            let expected = rule(t);
            check.record(node, expected.as_deref() == Ok(observed.as_slice()), || {
                let show = |v: &[T]| v.iter().map(T::to_string).collect::<Vec<_>>().join(",");
                match &expected {
                    Ok(e) => format!("{t} -> [{}], rule gives [{}]", show(&observed), show(e)),
                    Err(e) => format!("{t} -> [{}]: {e}", show(&observed)),
                }
            });
        }
        check
    }

    fn pair_check(&self, name: &str, allowed: impl Fn(T, T) -> bool) -> (Check, BTreeSet<(T, T)>) {
        let mut check = Check::new(name);
        let mut seen = BTreeSet::new();
        for k in 0..=self.table.depth() {
            let level = self.table.level_range(k).expect("k <= depth");
            for node in *level.start()..*level.end() {
                if !pair_in_range(self.table, node) {
                    continue;
                }
                let (a, b) = (self.type_of(node), self.type_of(node + 1));
                seen.insert((a, b));
                check.record(node, allowed(a, b), || {
                    format!("pair {a},{b} on nodes {node},{}", node + 1)
                });
            }
        }
        (check, seen)
    }

    fn classified_check(&self, name: &str, exceptional: T) -> Check {
        let mut check = Check::new(name);
        for node in self.table.nodes() {
            if BASE_CASES.contains(&node) {
                continue;
            }
            let t = self.type_of(node);
            check.record(node, t != exceptional, || {
                "outside the type table".to_string()
            });
        }
        check
    }

    fn census(&self) -> BTreeMap<String, u64> {
        let mut census = BTreeMap::new();
        for &t in &self.types {
            *census.entry(t.to_string()).or_insert(0) += 1;
        }
        census
    }
}

fn verify_black_fib(table: &TreeTable) -> Report {
    let mut report = Report::new(title(table, Numeration::Fibonacci));
    report.base_cases = BASE_CASES.to_vec();
    let sweep = BlackSweep {
        table,
        types: table
            .nodes()
            .map(|n| FibNodeType::classify(n, table.status(n).expect("in table")))
            .collect(),
    };
    report.push(sweep.classified_check("every_node_typed", FibNodeType::Exceptional));
    report.push(sweep.successor_check(
        "successor_relation",
        |n| {
            FibCode::from_u64(n)
                .expect("positive")
                .append_zeros(2)
                .decode()
        },
        FibNodeType::relation,
    ));
    report.push(sweep.son_rule_check("son_type_automaton", FibNodeType::son_types));
    report.push(
        sweep
            .pair_check("adjacent_type_pairs", FibNodeType::may_precede)
            .0,
    );

    let mut star = Check::new("w00_star_is_rightmost_of_level");
    let mut ending_10 = Check::new("black_ending_10_only_at_base");
    for node in table.nodes() {
        let t = sweep.type_of(node);
        let level = table.level(node).expect("in table");
        let rightmost = *table.level_range(level).expect("level <= depth").end();
        if t == FibNodeType::W00Star || (node == rightmost && level >= 1) {
            star.record(
                node,
                (t == FibNodeType::W00Star) == (node == rightmost),
                || format!("type {t}, rightmost of level {level} is {rightmost}"),
            );
        }
        if table.status(node) == Some(Status::Black)
            && FibCode::from_u64(node)
                .expect("positive")
                .ends_with(&[1, 0])
        {
            ending_10.record(node, BASE_CASES.contains(&node), || {
                "black node ending in 10".to_string()
            });
        }
    }
    report.push(star);
    report.push(ending_10);

    report.census = sweep.census();
    let b01 = report
        .census
        .get(FibNodeType::B01.name())
        .copied()
        .unwrap_or(0);
    if b01 > 0 {
        let first = table
            .nodes()
            .find(|&n| sweep.type_of(n) == FibNodeType::B01)
            .expect("b01 census is nonzero");
        report.warn(
            Discrepancy::EmptyTypeClass,
            format!(
                "type b01 is not empty: {b01} nodes, the first is node {first}; among black \
                 nodes the ending 10 occurs only at node 2"
            ),
        );
    }
    report
}

fn verify_black_golden(table: &TreeTable) -> Report {
    let mut report = Report::new(title(table, Numeration::Golden));
    report.base_cases = BASE_CASES.to_vec();
    let sweep = BlackSweep {
        table,
        types: table
            .nodes()
            .map(|n| GoldenNodeType::classify(n, table.status(n).expect("in table")))
            .collect(),
    };
    report.push(sweep.classified_check("every_node_typed", GoldenNodeType::Exceptional));
    report.push(sweep.successor_check(
        "successor_relation",
        |n| {
            GoldenCode::from_u64(n)
                .expect("positive")
                .append_zero()
                .decode()
        },
        GoldenNodeType::relation,
    ));
    report.push(sweep.son_rule_check("son_type_automaton", GoldenNodeType::son_types));
    let (pairs, seen) = sweep.pair_check("adjacent_type_pairs", GoldenNodeType::may_precede);
    report.push(pairs);

    let mut w0_b1 = Check::new("no_w0_b1_on_one_level");
    w0_b1.record(
        table.depth() as u64,
        !seen.contains(&(GoldenNodeType::W0, GoldenNodeType::B1)),
        || "pair w0,b1 observed".to_string(),
    );
    report.push(w0_b1);

    let mut w0_last = Check::new("w0_is_rightmost_of_level");
    for node in table.nodes() {
        if sweep.type_of(node) == GoldenNodeType::W0 {
            let level = table.level(node).expect("in table");
            let rightmost = *table.level_range(level).expect("level <= depth").end();
            w0_last.record(node, node == rightmost, || {
                format!("w0 node on level {level}, whose rightmost node is {rightmost}")
            });
        }
    }
    report.push(w0_last);
    report.census = sweep.census();

    // the successor rules under the alternative weights 1, 2, 5, 13, ...
    let alt = GoldenWeights::new(1, 2).expect("1 < 2");
    let alt_sweep = BlackSweep {
        table,
        types: table
            .nodes()
            .map(|n| GoldenNodeType::classify_with(&alt, n, table.status(n).expect("in table")))
            .collect(),
    };
    let alt_check = alt_sweep.successor_check(
        "successor_relation_w2_2",
        |n| {
            alt.decode(
                &alt.encode(&BigUint::from(n))
                    .expect("positive")
                    .append_zero(),
            )
        },
        GoldenNodeType::relation,
    );
    if alt_check.failed > 0 {
        report.warn(
            Discrepancy::BlackGoldenInitialWeights,
            format!(
                "golden weights 1, 2, 5, 13, ... break the black-tree successor rule at {} of {} \
                 nodes (first: node {}); weights 1, 3, 8, 21, ... satisfy it",
                alt_check.failed,
                alt_check.passed + alt_check.failed,
                alt_check.violations.first().map_or(0, |v| v.node),
            ),
        );
    }
    report
}
