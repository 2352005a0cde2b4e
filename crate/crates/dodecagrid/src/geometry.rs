// SPDX-License-Identifier: MIT OR Apache-2.0

//! Combinatorics of a single labelled dodecahedron.
//!
//! Faces are numbered 0 to 11. Faces 1 to 5 surround face 0 in clockwise
//! order, faces 6 to 10 surround face 11, and face `5 + k` sits between
//! faces `k - 1` and `k` of the lower ring (face 6 touches faces 5 and 1).
//!
//! A [`FaceMap`] is a permutation of the twelve faces. Rotations, the mirror
//! and the per-tile frames of the [`topology`](crate::topology) module are all
//! face maps. The sixty rotations are produced by closing the face-axis
//! quarter turns under composition, and are labelled by the image of the
//! ordered pair of faces (0, 1).

use std::fmt;
use std::ops::Index;
use std::sync::OnceLock;

/// Number of faces of the dodecahedron.
pub const FACES: usize = 12;

/// Oriented neighbour cycle of every face.
///
/// Reading `CYCLES[f]` left to right turns around `f` in the direction of the
/// global orientation, so `(f, CYCLES[f][k], CYCLES[f][k + 1])` is an oriented
/// vertex.
pub const CYCLES: [[u8; 5]; FACES] = [
    [1, 2, 3, 4, 5],
    [0, 5, 6, 7, 2],
    [0, 1, 7, 8, 3],
    [0, 2, 8, 9, 4],
    [0, 3, 9, 10, 5],
    [0, 4, 10, 6, 1],
    [1, 5, 10, 11, 7],
    [1, 6, 11, 8, 2],
    [2, 7, 11, 9, 3],
    [3, 8, 11, 10, 4],
    [4, 9, 11, 6, 5],
    [6, 10, 9, 8, 7],
];

/// The opposite-face involution.
pub const OPPOSITE: [u8; FACES] = [11, 9, 10, 6, 7, 8, 3, 4, 5, 1, 2, 0];

/// The reflection fixing faces 0, 3, 6 and 11.
pub const MU: [u8; FACES] = [0, 5, 4, 3, 2, 1, 6, 10, 9, 8, 7, 11];

const LABELS: &str = include_str!("../data/rotation_labels.txt");

/// Errors raised by the geometry module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    /// A face index outside `0..12`.
    #[error("face index {0} is outside 0..11")]
    InvalidFace(u8),
    /// Two faces that were required to share a side do not.
    #[error("faces {0} and {1} are not contiguous")]
    NotAdjacent(u8, u8),
    /// An image array that is not a permutation of the faces.
    #[error("face images {0:?} do not form a bijection")]
    NotABijection([u8; FACES]),
    /// A permutation that separates two contiguous faces.
    #[error("face map {0:?} does not preserve contiguity")]
    NotAdjacencyPreserving([u8; FACES]),
    /// An adjacency-preserving map that is neither a rotation nor a mirrored rotation.
    #[error("face map {0:?} is not a symmetry of the dodecahedron")]
    NotASymmetry([u8; FACES]),
    /// The closure of the face-axis turns did not have sixty elements.
    #[error("rotation closure produced {0} elements instead of 60")]
    Closure(usize),
    /// The embedded rotation label table is malformed or inconsistent.
    #[error("rotation label table: {0}")]
    LabelData(String),
}

/// A face index in `0..12`, range-checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceIndex(u8);

impl FaceIndex {
    /// Checks the range and wraps the value.
    pub fn new(value: u8) -> Result<Self, GeometryError> {
        if (value as usize) < FACES {
            Ok(FaceIndex(value))
        } else {
            Err(GeometryError::InvalidFace(value))
        }
    }

    /// The wrapped face number.
    pub fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for FaceIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// True when faces `a` and `b` share a side.
///
/// # Panics
///
/// Panics if either face is outside `0..12`.
pub fn contiguous(a: u8, b: u8) -> bool {
    CYCLES[a as usize].contains(&b)
}

/// A permutation of the twelve faces: position `i` holds the image of face `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceMap([u8; FACES]);

impl FaceMap {
    /// The identity map.
    pub const IDENTITY: FaceMap = FaceMap([0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]);

    /// Builds a face map after checking that it is an adjacency-preserving bijection.
    pub fn new(images: [u8; FACES]) -> Result<Self, GeometryError> {
        let mut seen = [false; FACES];
        for &x in &images {
            if x as usize >= FACES || seen[x as usize] {
                return Err(GeometryError::NotABijection(images));
            }
            seen[x as usize] = true;
        }
        let map = FaceMap(images);
        if !map.preserves_adjacency() {
            return Err(GeometryError::NotAdjacencyPreserving(images));
        }
        Ok(map)
    }

    /// Wraps an array without validation. Callers guarantee the invariants.
    pub(crate) const fn from_raw(images: [u8; FACES]) -> Self {
        FaceMap(images)
    }

    /// The image array.
    pub fn images(&self) -> [u8; FACES] {
        self.0
    }

    /// The composite `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &FaceMap) -> FaceMap {
        let mut out = [0u8; FACES];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0[other.0[i] as usize];
        }
        FaceMap(out)
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> FaceMap {
        let mut out = [0u8; FACES];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        FaceMap(out)
    }

    /// The position of `face` among the images, that is the preimage of `face`.
    pub fn preimage(&self, face: u8) -> u8 {
        self.0.iter().position(|&x| x == face).expect("face maps are bijections") as u8
    }

    /// The smallest `k >= 1` with `self^k` equal to the identity.
    pub fn order(&self) -> usize {
        let mut power = *self;
        let mut k = 1;
        while power != FaceMap::IDENTITY {
            power = self.compose(&power);
            k += 1;
        }
        k
    }

    /// True when every pair of contiguous faces is sent to contiguous faces.
    pub fn preserves_adjacency(&self) -> bool {
        (0..FACES as u8).all(|f| CYCLES[f as usize].iter().all(|&g| contiguous(self.0[f as usize], self.0[g as usize])))
    }

    /// True when every oriented vertex is sent to an oriented vertex.
    pub fn preserves_orientation(&self) -> bool {
        (0..FACES).all(|f| {
            let c = CYCLES[f];
            let img = &CYCLES[self.0[f] as usize];
            let k = img.iter().position(|&x| x == self.0[c[0] as usize]);
            match k {
                Some(k) => img[(k + 1) % 5] == self.0[c[1] as usize],
                None => false,
            }
        })
    }
}

impl Index<usize> for FaceMap {
    type Output = u8;

    fn index(&self, face: usize) -> &u8 {
        &self.0[face]
    }
}

impl fmt::Display for FaceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// The fixed adjacency data of the dodecahedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyTable {
    /// The five neighbours of each face in oriented cyclic order.
    pub contiguous: [[u8; 5]; FACES],
    /// The opposite-face involution.
    pub opposite: [u8; FACES],
    /// The 30 edges as sorted face pairs.
    pub edges: Vec<(u8, u8)>,
    /// The 20 vertices as sorted face triples.
    pub vertices: Vec<(u8, u8, u8)>,
}

/// Returns the adjacency table of the labelled dodecahedron.
pub fn adjacency() -> AdjacencyTable {
    let mut edges = Vec::new();
    let mut vertices = Vec::new();
    for f in 0..FACES as u8 {
        let c = CYCLES[f as usize];
        for k in 0..5 {
            let (g, h) = (c[k], c[(k + 1) % 5]);
            if f < g {
                edges.push((f, g));
            }
            if f < g && f < h {
                let mut t = [f, g, h];
                t.sort_unstable();
                vertices.push((t[0], t[1], t[2]));
            }
        }
    }
    edges.sort_unstable();
    vertices.sort_unstable();
    AdjacencyTable { contiguous: CYCLES, opposite: OPPOSITE, edges, vertices }
}

/// The geometric kind of a rotation axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxisKind {
    /// The trivial rotation.
    Identity,
    /// Axis through the centres of two opposite faces (order 5).
    Face,
    /// Axis through two opposite vertices (order 3).
    Vertex,
    /// Axis through the midpoints of two opposite edges (order 2).
    Edge,
}

impl fmt::Display for AxisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            AxisKind::Identity => "identity",
            AxisKind::Face => "face",
            AxisKind::Vertex => "vertex",
            AxisKind::Edge => "edge",
        };
        f.write_str(name)
    }
}

/// A rotation together with its axis classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RotationRecord {
    /// The permutation of faces.
    pub map: FaceMap,
    /// The kind of axis.
    pub kind: AxisKind,
    /// Rank of the axis within its kind, starting at 1 (0 for the identity).
    pub axis: u8,
    /// Rank of the turn around the axis, starting at 1 (0 for the identity).
    pub turn: u8,
}

impl fmt::Display for RotationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AxisKind::Identity => f.write_str("identity"),
            kind => write!(f, "{} axis {}, turn {}", kind, self.axis, self.turn),
        }
    }
}

/// The unique orientation-preserving map sending `a` to `image_a` and `b` to
/// `image_b`, when `a`, `b` are contiguous and so are their images.
pub fn rotation_sending(a: u8, b: u8, image_a: u8, image_b: u8) -> Result<FaceMap, GeometryError> {
    for x in [a, b, image_a, image_b] {
        FaceIndex::new(x)?;
    }
    if !contiguous(a, b) {
        return Err(GeometryError::NotAdjacent(a, b));
    }
    if !contiguous(image_a, image_b) {
        return Err(GeometryError::NotAdjacent(image_a, image_b));
    }
    let mut map = [u8::MAX; FACES];
    map[a as usize] = image_a;
    map[b as usize] = image_b;
    let mut queue = vec![(a, b)];
    while let Some((f, g)) = queue.pop() {
        let c = CYCLES[f as usize];
        let ci = CYCLES[map[f as usize] as usize];
        let k = c.iter().position(|&x| x == g).expect("g neighbours f");
        let ki = ci.iter().position(|&x| x == map[g as usize]).expect("images are contiguous");
        for j in 0..5 {
            let src = c[(k + j) % 5];
            let dst = ci[(ki + j) % 5];
            if map[src as usize] == u8::MAX {
                map[src as usize] = dst;
                queue.push((src, f));
            }
        }
    }
    Ok(FaceMap(map))
}

/// One parsed label line: the images of faces 0 and 1, kind, axis and turn.
type LabelLine = ((u8, u8), AxisKind, u8, u8);

fn parse_labels() -> Result<Vec<LabelLine>, GeometryError> {
    let bad = |line: &str| GeometryError::LabelData(format!("bad line `{line}`"));
    let mut out = Vec::new();
    for line in LABELS.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(bad(line));
        }
        let num = |s: &str| s.parse::<u8>().map_err(|_| bad(line));
        let kind = match fields[2] {
            "identity" => AxisKind::Identity,
            "face" => AxisKind::Face,
            "vertex" => AxisKind::Vertex,
            "edge" => AxisKind::Edge,
            _ => return Err(bad(line)),
        };
        out.push(((num(fields[0])?, num(fields[1])?), kind, num(fields[3])?, num(fields[4])?));
    }
    Ok(out)
}

fn kind_of_order(order: usize) -> Option<AxisKind> {
    match order {
        1 => Some(AxisKind::Identity),
        5 => Some(AxisKind::Face),
        3 => Some(AxisKind::Vertex),
        2 => Some(AxisKind::Edge),
        _ => None,
    }
}

/// Computes the rotation group from scratch.
///
/// The four non-trivial turns about each of the six face axes, together with
/// the identity, are closed under composition. The result is sorted by the
/// image pair of faces 0 and 1 and classified with the embedded label table.
pub fn try_rotation_group() -> Result<Vec<RotationRecord>, GeometryError> {
    let mut generators = Vec::new();
    for f in 0..6u8 {
        let c = CYCLES[f as usize];
        for k in 1..5 {
            generators.push(rotation_sending(f, c[0], f, c[k])?);
        }
    }
    let mut group = vec![FaceMap::IDENTITY];
    let mut frontier = vec![FaceMap::IDENTITY];
    while let Some(g) = frontier.pop() {
        for h in &generators {
            let p = h.compose(&g);
            if !group.contains(&p) {
                group.push(p);
                frontier.push(p);
            }
        }
    }
    if group.len() != 60 {
        return Err(GeometryError::Closure(group.len()));
    }
    let labels = parse_labels()?;
    if labels.len() != 60 {
        return Err(GeometryError::LabelData(format!("{} entries instead of 60", labels.len())));
    }
    let mut records = Vec::with_capacity(60);
    for ((i0, i1), kind, axis, turn) in labels {
        let map =
            rotation_sending(0, 1, i0, i1).map_err(|e| GeometryError::LabelData(format!("entry ({i0} {i1}): {e}")))?;
        if !group.contains(&map) {
            return Err(GeometryError::LabelData(format!("entry ({i0} {i1}) is not in the closure")));
        }
        if kind_of_order(map.order()) != Some(kind) {
            return Err(GeometryError::LabelData(format!(
                "entry ({i0} {i1}) is labelled {kind} but has order {}",
                map.order()
            )));
        }
        records.push(RotationRecord { map, kind, axis, turn });
    }
    records.sort_by_key(|r| (r.map[0], r.map[1]));
    records.dedup_by_key(|r| r.map);
    if records.len() != 60 {
        return Err(GeometryError::LabelData("duplicate image pairs".into()));
    }
    Ok(records)
}

/// The sixty rotations of the dodecahedron, sorted by the image of (0, 1).
///
/// # Panics
///
/// Panics on first use if the embedded data is inconsistent, which the test
/// suite rules out.
pub fn rotation_group() -> &'static [RotationRecord] {
    static GROUP: OnceLock<Vec<RotationRecord>> = OnceLock::new();
    GROUP.get_or_init(|| try_rotation_group().expect("embedded rotation data is consistent"))
}

/// Looks up the rotation that sends face 0 to `img0` and face 1 to `img1`.
pub fn rotation_from_image(img0: FaceIndex, img1: FaceIndex) -> Result<RotationRecord, GeometryError> {
    if !contiguous(img0.0, img1.0) {
        return Err(GeometryError::NotAdjacent(img0.0, img1.0));
    }
    let group = rotation_group();
    let k = group
        .binary_search_by_key(&(img0.0, img1.0), |r| (r.map[0], r.map[1]))
        .expect("every contiguous pair labels a rotation");
    Ok(group[k])
}

/// True when `map` is one of the sixty rotations.
pub fn is_rotation(map: &FaceMap) -> bool {
    rotation_group().iter().any(|r| r.map == *map)
}

/// The mirror permutation `(1 5)(2 4)(7 10)(8 9)`.
pub fn mirror_mu() -> FaceMap {
    FaceMap::from_raw(MU)
}

/// Decides whether a labelling of the faces has the reference orientation.
///
/// Returns `Ok(true)` for rotations and `Ok(false)` for mirrored rotations.
pub fn is_chirality_correct(labeling: &FaceMap) -> Result<bool, GeometryError> {
    if !labeling.preserves_adjacency() {
        return Err(GeometryError::NotASymmetry(labeling.0));
    }
    if is_rotation(labeling) {
        Ok(true)
    } else if is_rotation(&labeling.compose(&mirror_mu())) {
        Ok(false)
    } else {
        Err(GeometryError::NotASymmetry(labeling.0))
    }
}

/// The geometric axis of a rotation, described by the faces it fixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    /// The identity fixes everything.
    Identity,
    /// A fixed opposite pair of faces, smaller face first.
    Face(u8, u8),
    /// A fixed vertex, given by its sorted face triple with the smallest face overall.
    Vertex([u8; 3]),
    /// A fixed edge, given by its sorted face pair with the smallest face overall.
    Edge([u8; 2]),
}

/// Computes the geometric axis of a rotation from its action on faces.
pub fn axis_of(map: &FaceMap) -> Axis {
    let opposite_set = |s: &[u8]| -> Vec<u8> {
        let mut v: Vec<u8> = s.iter().map(|&x| OPPOSITE[x as usize]).collect();
        v.sort_unstable();
        v
    };
    if *map == FaceMap::IDENTITY {
        return Axis::Identity;
    }
    if let Some(f) = (0..FACES as u8).find(|&f| map[f as usize] == f) {
        let g = OPPOSITE[f as usize];
        return Axis::Face(f.min(g), f.max(g));
    }
    let table = adjacency();
    for &(a, b, c) in &table.vertices {
        let mut img = [map[a as usize], map[b as usize], map[c as usize]];
        img.sort_unstable();
        if img == [a, b, c] {
            let opp = opposite_set(&[a, b, c]);
            let t = if [a, b, c].as_slice() <= opp.as_slice() { [a, b, c] } else { [opp[0], opp[1], opp[2]] };
            return Axis::Vertex(t);
        }
    }
    for &(a, b) in &table.edges {
        let mut img = [map[a as usize], map[b as usize]];
        img.sort_unstable();
        if img == [a, b] {
            let opp = opposite_set(&[a, b]);
            let e = if [a, b].as_slice() <= opp.as_slice() { [a, b] } else { [opp[0], opp[1]] };
            return Axis::Edge(e);
        }
    }
    unreachable!("every rotation of the dodecahedron has an axis")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    fn all_face_maps_preserving_adjacency() -> Vec<FaceMap> {
        // Any adjacency-preserving bijection is fixed by the images of two
        // contiguous faces and one orientation choice.
        let mut out = BTreeSet::new();
        for i0 in 0..12u8 {
            for &i1 in &CYCLES[i0 as usize] {
                let r = rotation_sending(0, 1, i0, i1).unwrap();
                out.insert(r);
                out.insert(r.compose(&mirror_mu()));
            }
        }
        out.into_iter().collect()
    }

    #[test]
    fn adjacency_table_matches_the_face_numbering() {
        let t = adjacency();
        assert_eq!(t.contiguous[0], [1, 2, 3, 4, 5]);
        let mut around11 = t.contiguous[11].to_vec();
        around11.sort_unstable();
        assert_eq!(around11, vec![6, 7, 8, 9, 10]);
        assert!(t.contiguous[6].contains(&1) && t.contiguous[6].contains(&5));
        assert_eq!(t.edges.len(), 30);
        assert_eq!(t.vertices.len(), 20);
        for &(a, b, c) in &t.vertices {
            assert!(contiguous(a, b) && contiguous(b, c) && contiguous(a, c));
        }
        for f in 0..12u8 {
            let o = t.opposite[f as usize];
            assert_ne!(o, f);
            assert_eq!(t.opposite[o as usize], f);
            assert!(!contiguous(f, o));
        }
        assert_eq!((t.opposite[4], t.opposite[5], t.opposite[1]), (7, 8, 9));
    }

    #[test]
    fn adjacency_is_symmetric() {
        for a in 0..12u8 {
            for b in 0..12u8 {
                assert_eq!(contiguous(a, b), contiguous(b, a));
            }
        }
    }

    #[test]
    fn opposite_map_is_the_only_edge_preserving_involution() {
        // Brute force over fixed-point-free involutions that send every edge of
        // a face to an edge; only the central symmetry survives.
        fn search(partial: &mut [Option<u8>; 12], found: &mut Vec<[u8; 12]>) {
            let Some(f) = (0..12).find(|&f| partial[f].is_none()) else {
                let m: [u8; 12] = std::array::from_fn(|i| partial[i].unwrap());
                let ok = adjacency().edges.iter().all(|&(a, b)| contiguous(m[a as usize], m[b as usize]));
                let disjoint = (0..12).all(|i| !contiguous(i as u8, m[i]));
                if ok && disjoint {
                    found.push(m);
                }
                return;
            };
            for g in 0..12u8 {
                if g as usize != f && partial[g as usize].is_none() {
                    partial[f] = Some(g);
                    partial[g as usize] = Some(f as u8);
                    search(partial, found);
                    partial[f] = None;
                    partial[g as usize] = None;
                }
            }
        }
        let mut found = Vec::new();
        search(&mut [None; 12], &mut found);
        assert_eq!(found, vec![OPPOSITE]);
    }

    #[test]
    fn group_has_sixty_rotations_split_by_kind() {
        let g = rotation_group();
        assert_eq!(g.len(), 60);
        let mut counts = BTreeMap::new();
        for r in g {
            *counts.entry(r.kind).or_insert(0) += 1;
        }
        assert_eq!(counts[&AxisKind::Face], 24);
        assert_eq!(counts[&AxisKind::Vertex], 20);
        assert_eq!(counts[&AxisKind::Edge], 15);
        assert_eq!(counts[&AxisKind::Identity], 1);
    }

    #[test]
    fn group_is_closed_under_composition_and_inverse() {
        let g = rotation_group();
        for a in g {
            assert!(is_rotation(&a.map.inverse()));
            for b in g {
                assert!(is_rotation(&a.map.compose(&b.map)));
            }
        }
    }

    #[test]
    fn rotations_preserve_adjacency_and_opposites() {
        for r in rotation_group() {
            assert!(r.map.preserves_adjacency());
            for f in 0..12 {
                assert_eq!(OPPOSITE[r.map[f] as usize], r.map[OPPOSITE[f] as usize]);
            }
        }
    }

    #[test]
    fn image_lookup_examples() {
        let f = |x| FaceIndex::new(x).unwrap();
        let id = rotation_from_image(f(0), f(1)).unwrap();
        assert_eq!(id.kind, AxisKind::Identity);
        assert_eq!(id.map, FaceMap::IDENTITY);
        let r = rotation_from_image(f(9), f(4)).unwrap();
        assert_eq!((r.kind, r.axis, r.turn), (AxisKind::Vertex, 10, 2));
        assert_eq!(r.to_string(), "vertex axis 10, turn 2");
        let e = rotation_from_image(f(1), f(0)).unwrap();
        assert_eq!((e.kind, e.axis), (AxisKind::Edge, 1));
        assert_eq!(rotation_from_image(f(0), f(7)), Err(GeometryError::NotAdjacent(0, 7)));
        assert!(FaceIndex::new(12).is_err());
    }

    #[test]
    fn image_lookup_is_a_bijection() {
        let mut seen = BTreeSet::new();
        for a in 0..12u8 {
            for &b in &CYCLES[a as usize] {
                let r = rotation_from_image(FaceIndex::new(a).unwrap(), FaceIndex::new(b).unwrap()).unwrap();
                assert_eq!((r.map[0], r.map[1]), (a, b));
                seen.insert(r.map);
            }
        }
        assert_eq!(seen.len(), 60);
    }

    #[test]
    fn labels_are_consistent_with_geometric_axes() {
        let mut by_label: BTreeMap<(AxisKind, u8), BTreeSet<Axis>> = BTreeMap::new();
        let mut turns = BTreeSet::new();
        for r in rotation_group() {
            by_label.entry((r.kind, r.axis)).or_default().insert(axis_of(&r.map));
            assert!(turns.insert((r.kind, r.axis, r.turn)), "duplicate label {r}");
        }
        let axes: BTreeSet<Axis> = by_label.values().flatten().copied().collect();
        for set in by_label.values() {
            assert_eq!(set.len(), 1);
        }
        assert_eq!(axes.len(), by_label.len());
        assert_eq!(by_label.keys().filter(|k| k.0 == AxisKind::Face).count(), 6);
        assert_eq!(by_label.keys().filter(|k| k.0 == AxisKind::Vertex).count(), 10);
        assert_eq!(by_label.keys().filter(|k| k.0 == AxisKind::Edge).count(), 15);
    }

    #[test]
    fn mirror_is_an_orientation_reversing_involution() {
        let mu = mirror_mu();
        assert_eq!((mu[0], mu[11], mu[1], mu[8]), (0, 11, 5, 9));
        assert_eq!(mu.compose(&mu), FaceMap::IDENTITY);
        assert!(mu.preserves_adjacency());
        assert!(!is_rotation(&mu));
        assert_eq!(is_chirality_correct(&mu), Ok(false));
        assert_eq!(is_chirality_correct(&FaceMap::IDENTITY), Ok(true));
        for r in rotation_group() {
            assert_eq!(is_chirality_correct(&r.map), Ok(true));
            assert!(r.map.preserves_orientation());
        }
        assert!(!mu.preserves_orientation());
    }

    #[test]
    fn symmetries_split_into_sixty_and_sixty() {
        let all = all_face_maps_preserving_adjacency();
        assert_eq!(all.len(), 120);
        let good = all.iter().filter(|m| is_chirality_correct(m).unwrap()).count();
        assert_eq!(good, 60);
        let swapped = FaceMap::new([1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]);
        assert!(matches!(swapped, Err(GeometryError::NotAdjacencyPreserving(_))));
    }

    #[test]
    fn face_axis_turns_generate_in_three_steps() {
        let faces: Vec<FaceMap> = rotation_group().iter().filter(|r| r.kind == AxisKind::Face).map(|r| r.map).collect();
        let mut reach: BTreeSet<FaceMap> = faces.iter().copied().collect();
        let mut layer = reach.clone();
        for _ in 0..2 {
            let mut next = BTreeSet::new();
            for a in &layer {
                for b in &faces {
                    next.insert(b.compose(a));
                }
            }
            reach.extend(next.iter().copied());
            layer = next;
        }
        for r in rotation_group().iter().filter(|r| matches!(r.kind, AxisKind::Vertex | AxisKind::Edge)) {
            assert!(reach.contains(&r.map), "{r} not reached");
        }
    }
}
