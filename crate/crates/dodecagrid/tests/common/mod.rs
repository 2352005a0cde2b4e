// SPDX-License-Identifier: MIT OR Apache-2.0

//! Helpers shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use dodecagrid::engine::{step, Configuration};
use dodecagrid::rules::RuleTable;
use dodecagrid::topology::{default_frame, neighbor, TileId};

/// Tiles evaluated by one step: the support and its face neighbours.
pub fn domain(c: &Configuration) -> BTreeSet<TileId> {
    let mut d = BTreeSet::new();
    for t in c.cells().keys() {
        d.insert(t.clone());
        for p in 0..12 {
            d.insert(neighbor(t, p));
        }
    }
    d
}

/// Labels of the rules that fire while running `steps` steps from `c`.
pub fn rules_used(c: &Configuration, table: &RuleTable, steps: usize) -> BTreeSet<String> {
    let mut used = BTreeSet::new();
    let mut cur = c.clone();
    for _ in 0..steps {
        for t in domain(&cur) {
            let around = cur.neighborhood(&t, &default_frame(&t).0);
            if let Some(r) = table.find(cur.get(&t), &around) {
                used.insert(r.name().to_string());
            }
        }
        cur = step(&cur, table).expect("scenario runs");
    }
    used
}

/// Runs `steps` steps and checks that every intermediate configuration equals the start.
pub fn is_fixed_for(c: &Configuration, table: &RuleTable, steps: usize) -> bool {
    let mut cur = c.clone();
    for _ in 0..steps {
        cur = step(&cur, table).expect("idle configuration runs");
        if !cur.same_cells(c) {
            return false;
        }
    }
    true
}

/// Which register operation a locomotive triggers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operation {
    /// Entry on strand `c`.
    Increment,
    /// Entry on the `p` approach.
    Decrement,
}

/// Observations after an operation on an idle register.
#[derive(Debug, Clone)]
pub struct Outcome {
    /// Content after the run.
    pub content: usize,
    /// True when a blue cell appeared on the path leaving the zero-test junction.
    pub z_emitted: bool,
    /// Configuration after the run.
    pub last: Configuration,
}

/// Length of the registers used by the post-condition audits.
pub const AUDIT_LENGTH: usize = 17;
/// Steps allowed for an operation to settle.
pub const AUDIT_STEPS: usize = 40;

/// Runs one operation on an idle register holding `content`, or on `start`
/// when given (a configuration laid out on the same register sites).
pub fn operate(op: Operation, content: usize, start: Option<Configuration>) -> Outcome {
    use dodecagrid::rules::{scenario_table, Color};
    use dodecagrid::scenarios::{build_full_register, Z_PATH};
    let reg = build_full_register(content, AUDIT_LENGTH, false, Z_PATH).unwrap();
    let mut cur = start.unwrap_or_else(|| reg.config.clone());
    let entry = match op {
        Operation::Increment => ("c", -3),
        Operation::Decrement => ("p", -3),
    };
    cur.set(reg.tile(entry).clone(), Color::B);
    let z: Vec<TileId> = (1..=Z_PATH).map(|k| reg.tile(("z", k)).clone()).collect();
    let mut z_emitted = false;
    for _ in 0..AUDIT_STEPS {
        cur = step(&cur, scenario_table()).expect("operation runs");
        z_emitted |= z.iter().any(|t| cur.get(t) == Color::B);
    }
    Outcome { content: reg.content(&cur), z_emitted, last: cur }
}

/// All tiles within `radius` face crossings of the origin.
pub fn ball(radius: usize) -> Vec<TileId> {
    let mut seen = BTreeSet::from([TileId::origin()]);
    let mut layer = vec![TileId::origin()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for t in &layer {
            for p in 0..12 {
                let u = neighbor(t, p);
                if seen.insert(u.clone()) {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    seen.into_iter().collect()
}

/// Result of one randomized run under the reinstated quiescence rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallRun {
    /// True when the support never left the starting ball.
    pub stayed_inside: bool,
    /// True when a configuration repeated within the step budget.
    pub repeated: bool,
}

/// Random configuration in the ball of radius `radius`, run for `steps` steps
/// on the archive with rule 4 kept and rule 118 removed. Cells without an
/// applicable rule keep their state.
pub fn ball_run(seed: u64, radius: usize, steps: usize) -> BallRun {
    use dodecagrid::engine::{Evolver, MissingPolicy};
    use dodecagrid::rules::{reinstated_table, Color};
    use rand::{Rng, SeedableRng};
    use std::collections::HashSet;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let density: f64 = rng.gen_range(0.05..0.6);
    let mut c = Configuration::new();
    for t in ball(radius) {
        if rng.gen_bool(density) {
            c.set(t, Color::ALL[rng.gen_range(1..5)]);
        }
    }
    let ev = Evolver::new(reinstated_table()).with_policy(MissingPolicy::KeepState);
    let mut seen = HashSet::from([c.cells().clone()]);
    let mut out = BallRun { stayed_inside: true, repeated: false };
    for _ in 0..steps {
        c = ev.step(&c).expect("lenient steps do not fail").0;
        out.stayed_inside &= c.support_radius() <= radius;
        out.repeated |= !seen.insert(c.cells().clone());
    }
    out
}
