// SPDX-License-Identifier: MIT OR Apache-2.0

//! Tiles of the dodecagrid as canonical words.
//!
//! Crossing the face of panel type `p` is an involutive generator. Two
//! generators commute exactly when their faces are contiguous, because four
//! dodecahedra meet around every edge. A tile is therefore an element of the
//! right-angled Coxeter group on the twelve panel types, and it is stored as
//! the shortlex-least reduced word that reaches it from the origin.
//!
//! A [`Frame`] says which panel type carries each local face number of a
//! tile. The default frame is the identity on even words and the mirror on
//! odd words, since crossing a face reverses the orientation seen from inside.

use std::fmt;

use crate::geometry::{contiguous, is_rotation, mirror_mu, rotation_group, FaceMap, GeometryError, FACES};

/// Errors raised by the topology module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopologyError {
    /// A letter outside `0..12` in a word.
    #[error("generator {0} is outside 0..11")]
    InvalidLetter(u8),
    /// Anchors that cannot describe a frame.
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    /// Textual tile that does not parse.
    #[error("cannot parse tile `{0}`")]
    Parse(String),
}

/// A tile, stored as its canonical generator word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TileId(Vec<u8>);

impl TileId {
    /// The origin tile, with the empty word.
    pub fn origin() -> Self {
        TileId(Vec::new())
    }

    /// The canonical word.
    pub fn word(&self) -> &[u8] {
        &self.0
    }

    /// Word length, which is the distance to the origin.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the origin.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for TileId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join("."))
    }
}

impl std::str::FromStr for TileId {
    type Err = TopologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "e" {
            return Ok(TileId::origin());
        }
        let word = s
            .split('.')
            .map(|p| p.parse::<u8>().map_err(|_| TopologyError::Parse(s.to_string())))
            .collect::<Result<Vec<u8>, _>>()?;
        normalize(&word)
    }
}

fn commute(a: u8, b: u8) -> bool {
    contiguous(a, b)
}

/// Multiplies a reduced word by one generator on the right, keeping it reduced.
fn reduce_append(word: &mut Vec<u8>, s: u8) {
    for i in (0..word.len()).rev() {
        if word[i] == s {
            word.remove(i);
            return;
        }
        if !commute(word[i], s) {
            break;
        }
    }
    word.push(s);
}

/// Reorders a reduced word into its shortlex-least equivalent.
fn shortlex(word: &[u8]) -> Vec<u8> {
    let mut rest = word.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for (i, &x) in rest.iter().enumerate() {
            if rest[..i].iter().all(|&y| commute(x, y)) && best.is_none_or(|b| x < rest[b]) {
                best = Some(i);
            }
        }
        let b = best.expect("the first letter is always movable");
        out.push(rest.remove(b));
    }
    out
}

/// Brings an arbitrary generator word to canonical form.
pub fn normalize(word: &[u8]) -> Result<TileId, TopologyError> {
    let mut reduced = Vec::with_capacity(word.len());
    for &s in word {
        if s as usize >= FACES {
            return Err(TopologyError::InvalidLetter(s));
        }
        reduce_append(&mut reduced, s);
    }
    Ok(TileId(shortlex(&reduced)))
}

/// The tile across the face of the given panel type.
///
/// # Panics
///
/// Panics if `panel` is outside `0..12`.
pub fn neighbor(t: &TileId, panel: u8) -> TileId {
    assert!((panel as usize) < FACES, "panel {panel} is outside 0..11");
    let mut w = t.0.clone();
    reduce_append(&mut w, panel);
    TileId(shortlex(&w))
}

/// The canonical word of `a⁻¹ b`, the walk leading from `a` to `b`.
pub fn relative_word(a: &TileId, b: &TileId) -> TileId {
    let mut w: Vec<u8> = a.0.iter().rev().copied().collect();
    w.extend_from_slice(&b.0);
    normalize(&w).expect("tile words hold valid letters")
}

/// How two tiles touch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContactKind {
    /// The same tile.
    Same,
    /// The tiles share a face.
    Generation1,
    /// The tiles share an edge and no face.
    Generation2,
    /// The tiles share a vertex and no edge.
    Generation3,
    /// The tiles are disjoint.
    None,
}

/// Classifies the contact between two tiles.
pub fn contact(a: &TileId, b: &TileId) -> ContactKind {
    let w = relative_word(a, b);
    let w = w.word();
    match w.len() {
        0 => ContactKind::Same,
        1 => ContactKind::Generation1,
        2 if commute(w[0], w[1]) => ContactKind::Generation2,
        3 if commute(w[0], w[1]) && commute(w[1], w[2]) && commute(w[0], w[2]) => ContactKind::Generation3,
        _ => ContactKind::None,
    }
}

/// Number of face crossings on a shortest walk between two tiles.
pub fn distance(a: &TileId, b: &TileId) -> usize {
    relative_word(a, b).len()
}

/// A labelling of the local faces of a tile by panel types.
///
/// `frame[i]` is the panel type of local face `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Frame(pub FaceMap);

impl Frame {
    /// The panel type carried by local face `local`.
    pub fn panel(&self, local: u8) -> u8 {
        self.0[local as usize]
    }

    /// The local face that carries panel type `panel`.
    pub fn local(&self, panel: u8) -> u8 {
        self.0.preimage(panel)
    }

    /// The underlying face map.
    pub fn map(&self) -> &FaceMap {
        &self.0
    }

    /// True when the frame is the default frame of `t` followed by a rotation.
    pub fn is_valid_for(&self, t: &TileId) -> bool {
        is_rotation(&default_frame(t).0.inverse().compose(&self.0))
    }
}

/// The default frame: identity for even words, mirror for odd words.
pub fn default_frame(t: &TileId) -> Frame {
    if t.len().is_multiple_of(2) {
        Frame(FaceMap::IDENTITY)
    } else {
        Frame(mirror_mu())
    }
}

/// The frame of `t` that puts panel `pa` on local face `a` and panel `pb` on local face `b`.
///
/// Local faces `a`, `b` must be contiguous, and so must the panels.
pub fn frame_with(t: &TileId, a: u8, pa: u8, b: u8, pb: u8) -> Result<Frame, TopologyError> {
    let d = default_frame(t).0;
    // F = D ∘ r, so r sends a to D⁻¹(pa) and b to D⁻¹(pb).
    let r = crate::geometry::rotation_sending(a, b, d.preimage(pa), d.preimage(pb))?;
    Ok(Frame(d.compose(&r)))
}

/// The frame of `t` whose local faces 0 and 1 carry the given panels.
pub fn frame_from_anchors(t: &TileId, panel_of_local0: u8, panel_of_local1: u8) -> Result<Frame, TopologyError> {
    frame_with(t, 0, panel_of_local0, 1, panel_of_local1)
}

/// All sixty valid frames of a tile.
pub fn frames(t: &TileId) -> Vec<Frame> {
    let d = default_frame(t).0;
    rotation_group().iter().map(|r| Frame(d.compose(&r.map))).collect()
}
