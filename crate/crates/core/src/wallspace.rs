//! Finite spaces with walls.
//!
//! A wall space is a finite point set together with a collection of walls,
//! each wall being a partition of the points into two halfspaces. The trivial
//! wall `{∅, X}` is always present at index 0, and any two distinct points
//! must be separated by at least one wall.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on points and walls: one machine word per subset.
pub const MAX_POINTS: usize = 64;
pub const MAX_WALLS: usize = 64;

/// A subset of points, encoded as a bitmask over point indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> PointSet {
        debug_assert!(n >= 1 && n <= MAX_POINTS);
        PointSet(u64::MAX >> (64 - n))
    }

    pub fn singleton(x: usize) -> PointSet {
        PointSet(1 << x)
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn complement(self, n: usize) -> PointSet {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_strict_subset(self, other: PointSet) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(x)
            }
        })
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for x in iter {
            s.0 |= 1 << x;
        }
        s
    }
}

/// A set of wall indices, encoded as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct WallSet(pub u64);

impl WallSet {
    pub const EMPTY: WallSet = WallSet(0);

    pub fn singleton(i: usize) -> WallSet {
        WallSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn union(self, other: WallSet) -> WallSet {
        WallSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: WallSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for WallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for WallSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = WallSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// A wall: an unordered pair of complementary halfspaces, stored canonically.
/// `side0` is the side containing point 0 (for the trivial wall, side0 = X).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Wall {
    pub side0: PointSet,
    pub side1: PointSet,
}

impl Wall {
    /// The side selected by an orientation bit.
    pub fn side(&self, bit: bool) -> PointSet {
        if bit {
            self.side1
        } else {
            self.side0
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.side1.is_empty()
    }
}

/// One wall as supplied by a caller, before canonicalization.
#[derive(Clone, Debug)]
pub enum RawWall {
    /// One side given; the complement is implied.
    OneSided(PointSet),
    /// Both sides given explicitly; must form a partition.
    TwoSided(PointSet, PointSet),
}

/// A wall-space candidate: parsed but not yet validated.
#[derive(Clone, Debug)]
pub struct RawWallSpace {
    pub names: Vec<String>,
    pub walls: Vec<RawWall>,
}

/// A single invariant violation, naming the offending wall or point pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Violation {
    EmptyPointSet,
    TooManyPoints { count: usize },
    TooManyWalls { count: usize },
    DuplicatePointName { name: String },
    NonComplementarySides { wall: usize },
    UnseparatedPair { x: String, y: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyPointSet => write!(f, "the point set is empty"),
            Violation::TooManyPoints { count } => {
                write!(f, "{count} points exceeds the limit of {MAX_POINTS}")
            }
            Violation::TooManyWalls { count } => {
                write!(f, "{count} walls exceeds the limit of {MAX_WALLS}")
            }
            Violation::DuplicatePointName { name } => {
                write!(f, "duplicate point name {name:?}")
            }
            Violation::NonComplementarySides { wall } => {
                write!(f, "wall {wall}: the two sides are not a partition of the points")
            }
            Violation::UnseparatedPair { x, y } => {
                write!(f, "no wall separates points {x:?} and {y:?}")
            }
        }
    }
}

/// A normalization applied while building, reported but not an error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Note {
    TrivialWallInserted,
    DuplicateWallRemoved { input_index: usize },
}

impl fmt::Display for Note {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Note::TrivialWallInserted => write!(f, "trivial wall inserted at index 0"),
            Note::DuplicateWallRemoved { input_index } => {
                write!(f, "duplicate wall at input position {input_index} removed")
            }
        }
    }
}

/// Outcome of validating a wall-space candidate.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub notes: Vec<Note>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A validated finite space with walls.
#[derive(Clone, Debug)]
pub struct WallSpace {
    names: Vec<String>,
    walls: Vec<Wall>,
    /// Per point, bit i selects which side of wall i contains it (1 = side1).
    sigs: Vec<u64>,
    key: u64,
}

impl PartialEq for WallSpace {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.walls == other.walls
    }
}
impl Eq for WallSpace {}

impl RawWallSpace {
    /// Validate without building; collects every violation it can find.
    pub fn validate(&self) -> ValidationReport {
        match self.canonicalize() {
            Ok((_, _, report)) | Err(report) => report,
        }
    }

    /// Validate and build the canonical wall space.
    pub fn build(&self) -> std::result::Result<(WallSpace, Vec<Note>), ValidationReport> {
        let (names, walls, report) = self.canonicalize().map_err(|r| r)?;
        if !report.ok() {
            return Err(report);
        }
        Ok((WallSpace::from_canonical(names, walls), report.notes))
    }

    /// Canonicalize walls and gather violations/notes. Returns Err only when
    /// the point set itself is unusable.
    #[allow(clippy::type_complexity)]
    fn canonicalize(
        &self,
    ) -> std::result::Result<(Vec<String>, Vec<Wall>, ValidationReport), ValidationReport> {
        let mut report = ValidationReport::default();
        let n = self.names.len();
        if n == 0 {
            report.violations.push(Violation::EmptyPointSet);
            return Err(report);
        }
        if n > MAX_POINTS {
            report.violations.push(Violation::TooManyPoints { count: n });
            return Err(report);
        }
        let mut seen_names = HashMap::new();
        for name in &self.names {
            if seen_names.insert(name.clone(), ()).is_some() {
                report
                    .violations
                    .push(Violation::DuplicatePointName { name: name.clone() });
            }
        }
        if !report.ok() {
            return Err(report);
        }

        let full = PointSet::full(n);
        let mut walls: Vec<Wall> = vec![Wall {
            side0: full,
            side1: PointSet::EMPTY,
        }];
        let mut seen: HashMap<PointSet, ()> = HashMap::new();
        seen.insert(full, ());
        let mut trivial_given = false;

        for (idx, raw) in self.walls.iter().enumerate() {
            let (a, b) = match raw {
                RawWall::OneSided(a) => (*a, a.complement(n)),
                RawWall::TwoSided(a, b) => {
                    if a.union(*b) != full || !a.intersection(*b).is_empty() {
                        report
                            .violations
                            .push(Violation::NonComplementarySides { wall: idx });
                        continue;
                    }
                    (*a, *b)
                }
            };
            // Canonical order: side0 is the side containing point 0.
            let (side0, side1) = if a.contains(0) { (a, b) } else { (b, a) };
            if side1.is_empty() {
                // The trivial wall itself; a one-sided ∅ or X input lands here too.
                if trivial_given {
                    report
                        .notes
                        .push(Note::DuplicateWallRemoved { input_index: idx });
                }
                trivial_given = true;
                continue;
            }
            if seen.insert(side0, ()).is_some() {
                report
                    .notes
                    .push(Note::DuplicateWallRemoved { input_index: idx });
                continue;
            }
            walls.push(Wall { side0, side1 });
        }
        if !trivial_given {
            report.notes.push(Note::TrivialWallInserted);
        }
        if walls.len() > MAX_WALLS {
            report
                .violations
                .push(Violation::TooManyWalls { count: walls.len() });
            return Err(report);
        }

        // Separation axiom: distinct points must have distinct side signatures.
        let mut sigs = vec![0u64; n];
        for (i, wall) in walls.iter().enumerate() {
            for x in wall.side1.iter() {
                sigs[x] |= 1 << i;
            }
        }
        'outer: for x in 0..n {
            for y in (x + 1)..n {
                if sigs[x] == sigs[y] {
                    report.violations.push(Violation::UnseparatedPair {
                        x: self.names[x].clone(),
                        y: self.names[y].clone(),
                    });
                    break 'outer;
                }
            }
        }

        Ok((self.names.clone(), walls, report))
    }
}

impl WallSpace {
    fn from_canonical(names: Vec<String>, walls: Vec<Wall>) -> WallSpace {
        let n = names.len();
        let mut sigs = vec![0u64; n];
        for (i, wall) in walls.iter().enumerate() {
            for x in wall.side1.iter() {
                sigs[x] |= 1 << i;
            }
        }
        let mut hasher = std::collections::hash_map::DefaultHasher::new();
        n.hash(&mut hasher);
        for wall in &walls {
            wall.side0.0.hash(&mut hasher);
        }
        let key = hasher.finish();
        WallSpace {
            names,
            walls,
            sigs,
            key,
        }
    }

    /// Convenience constructor from point names and one side per wall
    /// (indices into `names`); panics on invalid input. Intended for
    /// fixtures and tests; parsed input goes through [`RawWallSpace::build`].
    pub fn from_sides(names: &[&str], sides: &[&[usize]]) -> WallSpace {
        let raw = RawWallSpace {
            names: names.iter().map(|s| s.to_string()).collect(),
            walls: sides
                .iter()
                .map(|side| RawWall::OneSided(side.iter().copied().collect()))
                .collect(),
        };
        raw.build().expect("invalid fixture wall space").0
    }

    pub fn num_points(&self) -> usize {
        self.names.len()
    }

    pub fn num_walls(&self) -> usize {
        self.walls.len()
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.num_points())
    }

    pub fn point_name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn point_names(&self) -> &[String] {
        &self.names
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn wall(&self, i: usize) -> &Wall {
        &self.walls[i]
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    /// Fingerprint used to detect cross-space orientation mixups.
    pub fn key(&self) -> u64 {
        self.key
    }

    /// Per-point side signature: bit i = 1 iff the point lies on side1 of wall i.
    pub fn signature(&self, x: usize) -> Result<u64> {
        self.sigs
            .get(x)
            .copied()
            .ok_or(Error::InvalidPoint(x))
    }

    /// The set W(x, y) of walls separating two points.
    pub fn separating_walls(&self, x: usize, y: usize) -> Result<WallSet> {
        let sx = self.signature(x)?;
        let sy = self.signature(y)?;
        Ok(WallSet(sx ^ sy))
    }

    /// The wall metric d_w(x, y): the number of separating walls.
    pub fn wall_metric(&self, x: usize, y: usize) -> Result<usize> {
        Ok(self.separating_walls(x, y)?.len())
    }

    /// Two nontrivial walls cross iff all four side intersections are nonempty.
    pub fn walls_cross(&self, i: usize, j: usize) -> Result<bool> {
        if i >= self.walls.len() {
            return Err(Error::InvalidWall(i));
        }
        if j >= self.walls.len() {
            return Err(Error::InvalidWall(j));
        }
        if i == 0 || j == 0 {
            return Err(Error::TrivialWallQuery);
        }
        let wi = &self.walls[i];
        let wj = &self.walls[j];
        Ok(!wi.side0.intersection(wj.side0).is_empty()
            && !wi.side0.intersection(wj.side1).is_empty()
            && !wi.side1.intersection(wj.side0).is_empty()
            && !wi.side1.intersection(wj.side1).is_empty())
    }

    pub fn check_point(&self, x: usize) -> Result<()> {
        if x < self.num_points() {
            Ok(())
        } else {
            Err(Error::InvalidPoint(x))
        }
    }
}
