//! Flags of faces, with optional universal-subflag annotations.

use crate::{ElemSet, Error, Result};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

/// How the universal face `T_i = T_{i-1} ∪ {x_i, y_i}` sits in a flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitKind {
    /// No face strictly between `T_{i-1}` and `T_i`.
    None,
    /// `T_{i-1} ∪ {x_i}` is in the flag.
    X,
    /// `T_{i-1} ∪ {y_i}` is in the flag.
    Y,
}

impl SplitKind {
    pub const ALL: [SplitKind; 3] = [SplitKind::None, SplitKind::X, SplitKind::Y];

    pub fn is_split(self) -> bool {
        self != SplitKind::None
    }
}

/// One level `T_i ∖ T_{i-1} = {x_i, y_i}` of a universal subflag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level {
    pub x: usize,
    pub y: usize,
    pub split: SplitKind,
}

/// The role of a face inside a flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceRole {
    /// `T_j` of the universal subflag, `|T_j| = 2j`.
    Universal,
    /// `T_{j-1} ∪ {x_j}` or `T_{j-1} ∪ {y_j}`.
    Split,
    Other,
}

/// A strictly increasing chain of faces `T'₁ ⊂ … ⊂ T'_k`.
///
/// When built by [`Flag::universal`] the flag also records the levels of its
/// universal subflag; otherwise `levels` is empty and every role is
/// [`FaceRole::Other`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Flag {
    faces: Vec<ElemSet>,
    roles: Vec<FaceRole>,
    levels: Vec<Level>,
}

impl Flag {
    /// An unannotated flag; rejects chains that are not strictly increasing
    /// or start with the empty set.
    pub fn new(faces: Vec<ElemSet>) -> Result<Flag> {
        if faces.first().is_some_and(|f| f.is_empty()) {
            return Err(Error::InvalidFlag("empty face".into()));
        }
        for w in faces.windows(2) {
            if !(w[0].is_subset(w[1]) && w[0] != w[1]) {
                return Err(Error::InvalidFlag(format!("{} is not strictly inside {}", w[0], w[1])));
            }
        }
        let roles = alloc::vec![FaceRole::Other; faces.len()];
        Ok(Flag { faces, roles, levels: Vec::new() })
    }

    /// The flag `T₁ ⊂ … ⊂ T_m` of `T_j = {x_i, y_i}_{i ≤ j}` with the split
    /// faces requested by each level inserted below `T_j`.
    pub fn universal(levels: Vec<Level>) -> Result<Flag> {
        let mut faces = Vec::new();
        let mut roles = Vec::new();
        let mut t = ElemSet::EMPTY;
        for l in &levels {
            if l.x == l.y || t.contains(l.x) || t.contains(l.y) {
                return Err(Error::InvalidFlag(format!("level ({}, {}) repeats an element", l.x, l.y)));
            }
            match l.split {
                SplitKind::None => {}
                SplitKind::X => {
                    faces.push(t.with(l.x));
                    roles.push(FaceRole::Split);
                }
                SplitKind::Y => {
                    faces.push(t.with(l.y));
                    roles.push(FaceRole::Split);
                }
            }
            t = t.with(l.x).with(l.y);
            faces.push(t);
            roles.push(FaceRole::Universal);
        }
        Ok(Flag { faces, roles, levels })
    }

    /// Detects a universal-subflag skeleton by shape alone: faces of sizes
    /// 2, 4, …, 2m each preceded by at most one split face. Universality of
    /// the faces is the caller's concern.
    pub fn with_detected_levels(self) -> Flag {
        let mut levels = Vec::new();
        let mut roles = alloc::vec![FaceRole::Other; self.faces.len()];
        let mut prev = ElemSet::EMPTY;
        let mut pending: Option<(usize, usize)> = None;
        for (i, &f) in self.faces.iter().enumerate() {
            let below = pending.map_or(prev, |(j, _)| self.faces[j]);
            let diff = f.difference(below);
            match (diff.len(), pending) {
                (1, None) => pending = Some((i, diff.min().unwrap())),
                (2, None) => {
                    let v = diff.to_vec();
                    levels.push(Level { x: v[0], y: v[1], split: SplitKind::None });
                    roles[i] = FaceRole::Universal;
                    prev = f;
                }
                (1, Some((j, x))) => {
                    levels.push(Level { x, y: diff.min().unwrap(), split: SplitKind::X });
                    roles[j] = FaceRole::Split;
                    roles[i] = FaceRole::Universal;
                    pending = None;
                    prev = f;
                }
                _ => break,
            }
        }
        Flag { faces: self.faces, roles, levels }
    }

    pub fn faces(&self) -> &[ElemSet] {
        &self.faces
    }

    pub fn roles(&self) -> &[FaceRole] {
        &self.roles
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// The universal faces `T₁ ⊂ … ⊂ T_m`.
    pub fn universal_faces(&self) -> Vec<ElemSet> {
        self.faces
            .iter()
            .zip(&self.roles)
            .filter(|(_, r)| **r == FaceRole::Universal)
            .map(|(f, _)| *f)
            .collect()
    }

    /// Every face relabeled through `f`. Annotations are kept.
    pub fn map(&self, f: impl Fn(usize) -> usize + Copy) -> Flag {
        Flag {
            faces: self.faces.iter().map(|s| s.map(f)).collect(),
            roles: self.roles.clone(),
            levels: self.levels.iter().map(|l| Level { x: f(l.x), y: f(l.y), split: l.split }).collect(),
        }
    }

    /// The flag with `prefix` united into every face and `levels` prepended.
    pub fn lifted(&self, prefix: &Flag) -> Flag {
        let top = prefix.faces.last().copied().unwrap_or(ElemSet::EMPTY);
        let mut out = prefix.clone();
        for (f, r) in self.faces.iter().zip(&self.roles) {
            out.faces.push(f.union(top));
            out.roles.push(*r);
        }
        out.levels.extend(self.levels.iter().copied());
        out
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, face) in self.faces.iter().enumerate() {
            if i > 0 {
                write!(f, " < ")?;
            }
            for (j, e) in face.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Flag({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universal_with_splits() {
        let f = Flag::universal(alloc::vec![
            Level { x: 0, y: 1, split: SplitKind::X },
            Level { x: 2, y: 3, split: SplitKind::None },
        ])
        .unwrap();
        assert_eq!(format!("{f}"), "0 < 0,1 < 0,1,2,3");
        assert_eq!(f.universal_faces(), [ElemSet::from_slice(&[0, 1]), ElemSet::from_slice(&[0, 1, 2, 3])]);
    }

    #[test]
    fn detection_round_trips() {
        let f = Flag::universal(alloc::vec![
            Level { x: 4, y: 1, split: SplitKind::X },
            Level { x: 2, y: 3, split: SplitKind::None },
        ])
        .unwrap();
        let g = Flag::new(f.faces().to_vec()).unwrap().with_detected_levels();
        assert_eq!(g.roles(), f.roles());
        assert_eq!(g.levels()[0].x, 4);
    }

    #[test]
    fn rejects_non_chains() {
        assert!(Flag::new(alloc::vec![ElemSet::from_slice(&[0, 1]), ElemSet::from_slice(&[0, 2])]).is_err());
        assert!(Flag::new(alloc::vec![ElemSet::from_slice(&[0]), ElemSet::from_slice(&[0])]).is_err());
    }
}
