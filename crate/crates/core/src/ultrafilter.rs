//! Orientations of a wall system and ultrafilters.
//!
//! An orientation picks one side of every wall; it is an ultrafilter when the
//! chosen sides are pairwise intersecting. Pairwise intersection is equivalent
//! to the upward-closure axiom (A chosen and A ⊆ B imply B chosen): if A ⊆ B
//! with A chosen and B not, then B^c is chosen and A ∩ B^c = ∅; conversely,
//! disjoint chosen A, C give A ⊆ C^c, so upward closure forces C^c chosen,
//! contradicting that C is chosen.

use crate::error::{Error, Result};
use crate::wallspace::{PointSet, WallSet, WallSpace};

/// One chosen side per wall: bit i = 0 selects side0 of wall i, 1 selects
/// side1. The trivial wall's bit is always 0 (selecting X).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Orientation {
    bits: u64,
    space_key: u64,
}

impl Orientation {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }
}

impl WallSpace {
    pub(crate) fn check_orientation(&self, o: &Orientation) -> Result<()> {
        if o.space_key == self.key() {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// Build an orientation from raw bits; the trivial wall's bit is forced
    /// to 0 and bits beyond the wall count are cleared.
    pub fn orientation_from_bits(&self, bits: u64) -> Orientation {
        let mask = if self.num_walls() == 64 {
            u64::MAX
        } else {
            (1 << self.num_walls()) - 1
        };
        Orientation {
            bits: bits & mask & !1,
            space_key: self.key(),
        }
    }

    /// Parse the serialized form: one character per wall, wall 0 first.
    pub fn orientation_from_bitstring(&self, s: &str) -> Result<Orientation> {
        if s.len() != self.num_walls() {
            return Err(Error::Parse(format!(
                "expected a bitstring of length {}, got {:?}",
                self.num_walls(),
                s
            )));
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::Parse(format!("invalid bitstring character {c:?}"))),
            }
        }
        if bits & 1 == 1 {
            return Err(Error::Parse(
                "the trivial wall's bit must select X (bit 0)".into(),
            ));
        }
        Ok(self.orientation_from_bits(bits))
    }

    /// Serialize an orientation: wall 0 first.
    pub fn bitstring(&self, o: &Orientation) -> String {
        (0..self.num_walls())
            .map(|i| if o.bit(i) { '1' } else { '0' })
            .collect()
    }

    /// The principal ultrafilter σ_x: every chosen side contains x.
    pub fn principal(&self, x: usize) -> Result<Orientation> {
        Ok(Orientation {
            bits: self.signature(x)?,
            space_key: self.key(),
        })
    }

    /// The side of wall i selected by the orientation.
    pub fn chosen_side(&self, o: &Orientation, i: usize) -> Result<PointSet> {
        self.check_orientation(o)?;
        if i >= self.num_walls() {
            return Err(Error::InvalidWall(i));
        }
        Ok(self.wall(i).side(o.bit(i)))
    }

    /// True iff every two chosen sides intersect nontrivially.
    pub fn is_ultrafilter(&self, o: &Orientation) -> Result<bool> {
        self.check_orientation(o)?;
        let w = self.num_walls();
        // The trivial wall's chosen side is X; only nontrivial pairs can fail.
        for i in 1..w {
            let si = self.wall(i).side(o.bit(i));
            for j in (i + 1)..w {
                let sj = self.wall(j).side(o.bit(j));
                if si.intersection(sj).is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Walls whose chosen side is minimal under inclusion among all chosen
    /// sides. These are exactly the walls that can be flipped while staying
    /// an ultrafilter. The trivial wall is never reported.
    pub fn minimal_walls(&self, o: &Orientation) -> Result<WallSet> {
        if !self.is_ultrafilter(o)? {
            return Err(Error::NotUltrafilter);
        }
        let w = self.num_walls();
        let mut out = WallSet::EMPTY;
        for i in 1..w {
            let si = self.wall(i).side(o.bit(i));
            let minimal = (1..w)
                .filter(|&j| j != i)
                .all(|j| !self.wall(j).side(o.bit(j)).is_strict_subset(si));
            if minimal {
                out.insert(i);
            }
        }
        Ok(out)
    }

    /// Exchange the chosen side of a minimal wall for its complement.
    pub fn flip(&self, o: &Orientation, i: usize) -> Result<Orientation> {
        if i == 0 {
            return Err(Error::TrivialFlip);
        }
        if i >= self.num_walls() {
            return Err(Error::InvalidWall(i));
        }
        if !self.minimal_walls(o)?.contains(i) {
            return Err(Error::NotMinimal(i));
        }
        Ok(self.flip_unchecked(o, i))
    }

    /// Flip without the minimality check; the result may fail to be an
    /// ultrafilter. Used by the brute-force oracle and path construction.
    pub(crate) fn flip_unchecked(&self, o: &Orientation, i: usize) -> Orientation {
        Orientation {
            bits: o.bits ^ (1 << i),
            space_key: o.space_key,
        }
    }

    /// The walls on which two orientations differ (ω₁△ω₂ counted in walls).
    pub fn symdiff(&self, o1: &Orientation, o2: &Orientation) -> Result<WallSet> {
        self.check_orientation(o1)?;
        self.check_orientation(o2)?;
        Ok(WallSet(o1.bits ^ o2.bits))
    }

    /// Per-wall majority of three ultrafilters: (ω₁∩ω₂)∪(ω₂∩ω₃)∪(ω₃∩ω₁).
    pub fn boolean_median(
        &self,
        o1: &Orientation,
        o2: &Orientation,
        o3: &Orientation,
    ) -> Result<Orientation> {
        self.check_orientation(o1)?;
        self.check_orientation(o2)?;
        self.check_orientation(o3)?;
        Ok(Orientation {
            bits: (o1.bits & o2.bits) | (o2.bits & o3.bits) | (o3.bits & o1.bits),
            space_key: self.key(),
        })
    }
}
