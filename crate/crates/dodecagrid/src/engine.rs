// SPDX-License-Identifier: MIT OR Apache-2.0

//! Synchronous evolution of finite configurations.
//!
//! Only blank cells are left out of a [`Configuration`]. One step evaluates
//! the support together with every tile that shares a face with it; any other
//! tile sees twelve blank neighbours and stays blank by the quiescent rule.
//! A cell reads its neighbours through its frame, which is the default frame
//! of the tile unless an [`Evolver`] is asked to twist frames.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{is_rotation, rotation_group, FaceMap, FACES};
use crate::rules::{lookup, Color, MissingRule, Neighborhood, RuleError, RuleTable};
use crate::topology::{default_frame, neighbor, TileId};

/// Errors raised while evolving a configuration.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    /// The table has no rule for the situation of a tile.
    #[error("tile {tile} at generation {generation}: {missing}")]
    MissingRule {
        /// Tile whose neighbourhood is uncovered.
        tile: TileId,
        /// Generation being evaluated.
        generation: u64,
        /// The uncovered situation.
        missing: Box<MissingRule>,
    },
    /// A requested frame twist is not a rotation.
    #[error("frame twist {0} is not a rotation")]
    NotARotation(FaceMap),
}

/// A finite-support assignment of states to tiles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Configuration {
    cells: BTreeMap<TileId, Color>,
    generation: u64,
}

impl Configuration {
    /// The all-blank configuration at generation 0.
    pub fn new() -> Self {
        Self::default()
    }

    /// The state of a tile, blank when absent.
    pub fn get(&self, t: &TileId) -> Color {
        self.cells.get(t).copied().unwrap_or(Color::W)
    }

    /// Sets a state; setting `W` removes the tile from the support.
    pub fn set(&mut self, t: TileId, c: Color) {
        if c == Color::W {
            self.cells.remove(&t);
        } else {
            self.cells.insert(t, c);
        }
    }

    /// The non-blank cells in canonical order.
    pub fn cells(&self) -> &BTreeMap<TileId, Color> {
        &self.cells
    }

    /// Number of non-blank cells.
    pub fn support_len(&self) -> usize {
        self.cells.len()
    }

    /// The time step.
    pub fn generation(&self) -> u64 {
        self.generation
    }

    /// Largest distance from the origin among non-blank tiles.
    pub fn support_radius(&self) -> usize {
        self.cells.keys().map(TileId::len).max().unwrap_or(0)
    }

    /// The state of the neighbour of `t` across local face `local` under `frame`.
    pub fn neighborhood(&self, t: &TileId, frame: &FaceMap) -> Neighborhood {
        let mut around = [Color::W; FACES];
        for (j, slot) in around.iter_mut().enumerate() {
            *slot = self.get(&neighbor(t, frame[j]));
        }
        around
    }

    /// True when both configurations colour the same tiles the same way.
    pub fn same_cells(&self, other: &Configuration) -> bool {
        self.cells == other.cells
    }
}

impl FromIterator<(TileId, Color)> for Configuration {
    fn from_iter<I: IntoIterator<Item = (TileId, Color)>>(iter: I) -> Self {
        let mut c = Configuration::new();
        for (t, col) in iter {
            c.set(t, col);
        }
        c
    }
}

/// Summary of one step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StepReport {
    /// Cells whose state changed.
    pub changed: usize,
    /// Cells that went from blank to non-blank.
    pub born: usize,
    /// Cells that went from non-blank to blank.
    pub died: usize,
    /// Support radius after the step.
    pub support_radius: usize,
}

/// What to do when no rule matches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MissingPolicy {
    /// Abort the step with [`EngineError::MissingRule`].
    #[default]
    Fail,
    /// Leave the cell in its current state.
    KeepState,
}

/// How each tile chooses its reading frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FrameSource {
    /// The default frame of the tile.
    #[default]
    Default,
    /// The default frame followed by a rotation drawn per tile from a seed.
    Random(u64),
    /// The default frame followed by one fixed rotation.
    Twist(FaceMap),
}

/// Evaluates steps with a chosen table, missing-rule policy and frame source.
#[derive(Debug, Clone, Copy)]
pub struct Evolver<'a> {
    table: &'a RuleTable,
    policy: MissingPolicy,
    frames: FrameSource,
}

fn tile_hash(t: &TileId) -> u64 {
    // FNV-1a over the word, with a terminator so that prefixes differ.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in t.word().iter().chain(std::iter::once(&0xff)) {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

impl<'a> Evolver<'a> {
    /// Default frames and failure on missing rules.
    pub fn new(table: &'a RuleTable) -> Self {
        Evolver { table, policy: MissingPolicy::Fail, frames: FrameSource::Default }
    }

    /// Changes the missing-rule policy.
    pub fn with_policy(mut self, policy: MissingPolicy) -> Self {
        self.policy = policy;
        self
    }

    /// Changes the frame source. Twists must be rotations, since a mirrored
    /// frame would read every neighbourhood in the wrong orientation.
    pub fn with_frames(mut self, frames: FrameSource) -> Result<Self, EngineError> {
        if let FrameSource::Twist(m) = frames {
            if !is_rotation(&m) {
                return Err(EngineError::NotARotation(m));
            }
        }
        self.frames = frames;
        Ok(self)
    }

    /// The reading frame of a tile.
    pub fn frame(&self, t: &TileId) -> FaceMap {
        let d = default_frame(t).0;
        match self.frames {
            FrameSource::Default => d,
            FrameSource::Twist(m) => d.compose(&m),
            FrameSource::Random(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ tile_hash(t));
                let k = rng.gen_range(0..rotation_group().len());
                d.compose(&rotation_group()[k].map)
            }
        }
    }

    /// One synchronous step.
    pub fn step(&self, c: &Configuration) -> Result<(Configuration, StepReport), EngineError> {
        // Scatter every non-blank state to the tiles across its twelve faces,
        // indexed by panel type. Crossing panel p is an involution, so the
        // neighbour of u across p is s exactly when u is found from s across p.
        let mut seen: BTreeMap<TileId, [Color; FACES]> = BTreeMap::new();
        for (s, &col) in &c.cells {
            seen.entry(s.clone()).or_insert([Color::W; FACES]);
            for p in 0..FACES as u8 {
                seen.entry(neighbor(s, p)).or_insert([Color::W; FACES])[p as usize] = col;
            }
        }
        let mut next = Configuration { cells: BTreeMap::new(), generation: c.generation + 1 };
        let mut report = StepReport::default();
        for (t, by_panel) in seen {
            let here = c.get(&t);
            let frame = self.frame(&t);
            let around: Neighborhood = std::array::from_fn(|j| by_panel[frame[j] as usize]);
            let new = match lookup(self.table, here, &around) {
                Ok(x) => x,
                Err(RuleError::Missing(m)) => match self.policy {
                    MissingPolicy::Fail => {
                        return Err(EngineError::MissingRule { tile: t, generation: c.generation, missing: m })
                    }
                    MissingPolicy::KeepState => here,
                },
                Err(other) => unreachable!("lookup only reports missing rules: {other}"),
            };
            if new != here {
                report.changed += 1;
                if here == Color::W {
                    report.born += 1;
                }
                if new == Color::W {
                    report.died += 1;
                }
            }
            next.set(t, new);
        }
        report.support_radius = next.support_radius();
        Ok((next, report))
    }

    /// Applies `steps` steps and records the probes before the first step and after each one.
    pub fn run(&self, c: &Configuration, steps: usize, probes: &[Probe]) -> Result<Run, EngineError> {
        let mut current = c.clone();
        let mut rows = vec![probes.iter().map(|p| p.letters(&current)).collect::<Vec<_>>()];
        for _ in 0..steps {
            current = self.step(&current)?.0;
            rows.push(probes.iter().map(|p| p.letters(&current)).collect());
        }
        Ok(Run { rows, last: current })
    }

    /// Steps until a configuration repeats or `max_steps` steps have been taken.
    pub fn detect_cycle(&self, c: &Configuration, max_steps: usize) -> Result<CycleOutcome, EngineError> {
        let mut seen: HashMap<BTreeMap<TileId, Color>, usize> = HashMap::new();
        let mut current = c.clone();
        seen.insert(current.cells.clone(), 0);
        for n in 1..=max_steps {
            current = self.step(&current)?.0;
            if let Some(&first) = seen.get(&current.cells) {
                let period = n - first;
                return Ok(if period == 1 {
                    CycleOutcome::FixedPoint { at: first }
                } else {
                    CycleOutcome::Cycle { period, start: first }
                });
            }
            seen.insert(current.cells.clone(), n);
        }
        Ok(CycleOutcome::Open)
    }
}

/// A named ordered list of tiles whose states are recorded in traces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Probe {
    /// Row label.
    pub label: String,
    /// Watched tiles.
    pub tiles: Vec<TileId>,
}

impl Probe {
    /// Builds a probe.
    pub fn new(label: impl Into<String>, tiles: Vec<TileId>) -> Self {
        Probe { label: label.into(), tiles }
    }

    /// The states of the probe tiles as space-separated letters.
    pub fn letters(&self, c: &Configuration) -> String {
        let v: Vec<String> = self.tiles.iter().map(|t| c.get(t).to_string()).collect();
        v.join(" ")
    }
}

/// The trace of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    /// `rows[k][p]` holds the letters of probe `p` at time `k`.
    pub rows: Vec<Vec<String>>,
    /// The configuration after the last step.
    pub last: Configuration,
}

/// Long-run behaviour observed by [`detect_cycle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleOutcome {
    /// The configuration reached at step `at` never changes again.
    FixedPoint {
        /// First step of the fixed configuration.
        at: usize,
    },
    /// The configurations from `start` on repeat with the given period.
    Cycle {
        /// Length of the cycle.
        period: usize,
        /// First step of the cycle.
        start: usize,
    },
    /// No repetition within the step budget.
    Open,
}

/// One step with default frames; fails on missing rules.
pub fn step(c: &Configuration, t: &RuleTable) -> Result<Configuration, EngineError> {
    Ok(Evolver::new(t).step(c)?.0)
}

/// Runs `steps` steps with default frames and records probe rows.
pub fn run(c: &Configuration, t: &RuleTable, steps: usize, probes: &[Probe]) -> Result<Run, EngineError> {
    Evolver::new(t).run(c, steps, probes)
}

/// Looks for the first repeated configuration within `max_steps` steps.
pub fn detect_cycle(c: &Configuration, t: &RuleTable, max_steps: usize) -> Result<CycleOutcome, EngineError> {
    Evolver::new(t).detect_cycle(c, max_steps)
}

/// Runs the evolution twice, once with default frames and once with a random
/// rotation per tile, and reports whether both agree at every step.
pub fn frame_metamorphic_check(c: &Configuration, t: &RuleTable, steps: usize, seed: u64) -> Result<bool, EngineError> {
    let plain = Evolver::new(t);
    let twisted = Evolver::new(t).with_frames(FrameSource::Random(seed))?;
    let (mut a, mut b) = (c.clone(), c.clone());
    for _ in 0..steps {
        a = plain.step(&a)?.0;
        b = twisted.step(&b)?.0;
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::mirror_mu;
    use crate::rules::builtin_table;
    use crate::topology::normalize;

    fn tile(w: &[u8]) -> TileId {
        normalize(w).unwrap()
    }

    #[test]
    fn blank_stays_blank() {
        let c = Configuration::new();
        let n = step(&c, builtin_table()).unwrap();
        assert_eq!(n.support_len(), 0);
        assert_eq!(n.generation(), 1);
        assert_eq!(detect_cycle(&c, builtin_table(), 5).unwrap(), CycleOutcome::FixedPoint { at: 0 });
    }

    #[test]
    fn lone_blue_cell_persists() {
        let c: Configuration = [(tile(&[3]), Color::B)].into_iter().collect();
        let (n, report) = Evolver::new(builtin_table()).step(&c).unwrap();
        assert!(n.same_cells(&c));
        assert_eq!(report, StepReport { changed: 0, born: 0, died: 0, support_radius: 1 });
    }

    #[test]
    fn setting_blank_removes_a_cell() {
        let mut c = Configuration::new();
        c.set(tile(&[1]), Color::R);
        c.set(tile(&[1]), Color::W);
        assert_eq!(c.support_len(), 0);
        assert_eq!(c.get(&tile(&[1])), Color::W);
    }

    #[test]
    fn missing_rules_fail_or_keep_the_state() {
        let mut c = Configuration::new();
        for (i, p) in [1u8, 2, 3, 4, 5].into_iter().enumerate() {
            c.set(tile(&[p]), Color::ALL[1 + i % 4]);
        }
        let err = step(&c, builtin_table()).unwrap_err();
        assert!(matches!(err, EngineError::MissingRule { .. }));
        let lenient = Evolver::new(builtin_table()).with_policy(MissingPolicy::KeepState);
        assert!(lenient.step(&c).is_ok());
    }

    #[test]
    fn mirrored_twists_are_rejected() {
        let e = Evolver::new(builtin_table());
        assert!(matches!(e.with_frames(FrameSource::Twist(mirror_mu())), Err(EngineError::NotARotation(_))));
        let r = rotation_group()[17].map;
        assert!(e.with_frames(FrameSource::Twist(r)).is_ok());
    }

    #[test]
    fn random_frames_are_valid_and_reproducible() {
        let e = Evolver::new(builtin_table()).with_frames(FrameSource::Random(7)).unwrap();
        for w in [&[][..], &[5], &[5, 2], &[6, 7, 11]] {
            let t = tile(w);
            let f = crate::topology::Frame(e.frame(&t));
            assert!(f.is_valid_for(&t));
            assert_eq!(e.frame(&t), e.frame(&t));
        }
    }

    #[test]
    fn zero_step_run_records_the_initial_row() {
        let c: Configuration = [(tile(&[2]), Color::B)].into_iter().collect();
        let probe = Probe::new("x", vec![tile(&[1]), tile(&[2])]);
        let r = run(&c, builtin_table(), 0, &[probe]).unwrap();
        assert_eq!(r.rows, vec![vec!["W B".to_string()]]);
    }
}
