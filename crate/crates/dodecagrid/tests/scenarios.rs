// SPDX-License-Identifier: MIT OR Apache-2.0

//! Behavioural checks of the structures beyond their golden traces.

mod common;

use common::{operate, Operation, AUDIT_LENGTH};
use dodecagrid::engine::{detect_cycle, step, CycleOutcome, Run};
use dodecagrid::rules::{scenario_table, Color};
use dodecagrid::scenarios::*;
use dodecagrid::topology::neighbor;

/// Letters of probe `probe` at generation `k`.
fn at(run: &Run, k: usize, probe: usize) -> Vec<char> {
    run.rows[k][probe].split(' ').map(|l| l.chars().next().unwrap()).collect()
}

fn blue_positions(row: &[char]) -> Vec<usize> {
    row.iter().enumerate().filter(|(_, &l)| l == 'B').map(|(i, _)| i).collect()
}

/// Asserts that a single locomotive sits on position `start + k` at generation `k`.
fn assert_one_per_step(run: &Run, start: usize, generations: std::ops::RangeInclusive<usize>) {
    for k in generations {
        assert_eq!(blue_positions(&at(run, k, 0)), vec![start + k], "generation {k}");
    }
}

/// Asserts that every decoration cell of the idle form is unchanged.
fn decoration_kept(s: &Scenario, run: &Run) {
    let idle = s.idle.as_ref().unwrap();
    for (t, c) in idle.cells() {
        assert_eq!(run.last.get(t), *c, "{}: decoration tile {t} changed", s.name);
    }
}

#[test]
fn idle_structures_are_fixed_points() {
    for name in NAMES {
        let s = build(name).unwrap();
        let idle = s.idle.as_ref().expect("every builder has an idle form");
        assert!(common::is_fixed_for(idle, scenario_table(), 10), "{name} idle form moves");
    }
}

#[test]
fn line_carries_one_locomotive_and_keeps_its_decoration() {
    let s = build_track_line(15);
    let run = s.run().unwrap();
    assert_one_per_step(&run, 1, 0..=13);
    decoration_kept(&s, &run);
}

#[test]
fn shorter_lines_run_without_golden() {
    let s = build_track_line(6);
    assert!(s.golden.is_none());
    assert_eq!(s.steps, 4);
    let run = s.run().unwrap();
    assert_one_per_step(&run, 1, 0..=4);
}

#[test]
fn arc_locomotive_leaves_the_window() {
    let s = build_arc(12);
    let run = s.run().unwrap();
    assert_one_per_step(&run, 1, 0..=10);
    assert!(at(&run, 11, 0).iter().all(|&l| l == 'W'));
    decoration_kept(&s, &run);
}

#[test]
fn both_switch_branches_give_the_same_trace() {
    let a = build_fixed_switch(Branch::A).run().unwrap();
    let b = build_fixed_switch(Branch::B).run().unwrap();
    assert_eq!(a.rows, b.rows);
    assert_one_per_step(&a, 1, 0..=9);
}

#[test]
fn fork_splits_the_locomotive() {
    let s = build_fork();
    let run = s.run().unwrap();
    assert_one_per_step(&run, 1, 0..=3);
    for k in 4..=7 {
        let offset = k - 4;
        assert_eq!(blue_positions(&at(&run, k, 0)), vec![5 + offset, 9 + offset], "generation {k}");
    }
    decoration_kept(&s, &run);
}

#[test]
fn permissive_controller_lets_the_locomotive_pass() {
    let s = build_controller(false);
    let run = s.run().unwrap();
    assert_one_per_step(&run, 1, 0..=7);
    decoration_kept(&s, &run);
}

#[test]
fn blocking_controller_stops_its_locomotive() {
    let s = build_controller(true);
    let run = s.run().unwrap();
    for k in 0..=5 {
        let row = at(&run, k, 0);
        let blocked: Vec<usize> = blue_positions(&row[..6]);
        let free: Vec<usize> = blue_positions(&row[6..]);
        assert_eq!(blocked, if k < 3 { vec![k + 1] } else { vec![] }, "blocked track, generation {k}");
        assert_eq!(free, if k < 5 { vec![k + 1] } else { vec![] }, "free track, generation {k}");
    }
    decoration_kept(&s, &run);
}

#[test]
fn signal_toggles_both_controllers() {
    let s = build_control_change();
    let run = s.run().unwrap();
    // Positions 4 and 10 are the two controllers; 5, 6 and 11 to 13 lie on
    // the tracks they control.
    let first = at(&run, 0, 0);
    let last = at(&run, s.steps, 0);
    assert_eq!((first[4], first[10]), ('B', 'W'));
    assert_eq!((last[4], last[10]), ('W', 'B'));
    for k in 0..=s.steps {
        let row = at(&run, k, 0);
        assert!([5, 6, 11, 12, 13].iter().all(|&i| row[i] == 'W'), "generation {k}");
    }
}

#[test]
fn tunnel_passes_under_the_upper_track() {
    let s = build_tunnel();
    let upper = build_tunnel_upper();
    let idle = s.idle.as_ref().unwrap();
    let marker: Vec<_> = idle.cells().iter().filter(|(_, c)| **c == Color::R).map(|(t, _)| t.clone()).collect();
    assert_eq!(marker.len(), 1);
    let mut c = s.initial.clone();
    for _ in 0..s.steps {
        c = step(&c, scenario_table()).unwrap();
        assert!(upper.probes[0].tiles.iter().all(|t| c.get(t) == Color::W));
        assert_eq!(c.get(&marker[0]), Color::R);
    }
    let run = s.run().unwrap();
    for k in 0..=s.steps {
        assert_eq!(blue_positions(&at(&run, k, 0)), vec![11 - k], "generation {k}");
    }
    let crossing = upper.run().unwrap();
    assert_one_per_step(&crossing, 1, 0..=7);
    decoration_kept(&upper, &crossing);
}

#[test]
fn growth_front_advances_one_element_every_two_steps() {
    let s = build_grow();
    let run = s.run_on(scenario_table(), 8).unwrap();
    for k in 0..=8 {
        for probe in 0..4 {
            let row = at(&run, k, probe);
            let front = row.iter().rposition(|&l| l == 'G');
            assert_eq!(front, Some(4 + k / 2), "generation {k}, strand {probe}");
        }
    }
    assert_eq!(detect_cycle(&s.initial, scenario_table(), 20).unwrap(), CycleOutcome::Open);
}

#[test]
fn stop_ends_in_a_fixed_point() {
    let s = build_stop();
    let mut c = s.initial.clone();
    for _ in 0..30 {
        c = step(&c, scenario_table()).unwrap();
    }
    assert!(matches!(detect_cycle(&c, scenario_table(), 5).unwrap(), CycleOutcome::FixedPoint { .. }));
    assert!(c.cells().values().all(|&col| col != Color::G), "the tip is still growing");
    // What the stop signal leaves behind does not touch the surviving register.
    let idle = s.idle.unwrap();
    let survives = |t: &dodecagrid::TileId| idle.get(t) != Color::W && c.get(t) == idle.get(t);
    for t in c.cells().keys().filter(|t| !survives(t)) {
        assert!((0..12).all(|p| !survives(&neighbor(t, p))), "residual cell {t} touches the register");
    }
}

#[test]
fn register_decoration_matches_the_layout() {
    let reg = build_register(2, 6, true).unwrap();
    let d = &reg.sites[&("d", -1)];
    assert_eq!(reg.config.get(&d.across(10)), Color::R);
    assert_eq!(reg.config.get(reg.tile(("c", 1))), Color::W);
    assert_eq!(reg.config.get(reg.tile(("c", 2))), Color::B);
    assert_eq!(reg.config.get(reg.tile(("i", 6))), Color::G);
    assert_eq!(reg.content(&reg.config), 2);
    assert!(build_register(4, 6, false).is_err());
}

#[test]
fn increment_and_decrement_change_the_content_by_one() {
    for c in [0, 1, 2, 5] {
        let inc = operate(Operation::Increment, c, None);
        assert_eq!(inc.content, c + 1, "increment from {c}");
        assert!(!inc.z_emitted);
        let expect = build_full_register(c + 1, AUDIT_LENGTH, false, Z_PATH).unwrap().config;
        assert!(inc.last.same_cells(&expect), "increment from {c} leaves debris");

        let dec = operate(Operation::Decrement, c, None);
        assert_eq!(dec.content, c.saturating_sub(1), "decrement from {c}");
        assert_eq!(dec.z_emitted, c == 0, "zero test from {c}");
        let expect = build_full_register(c.saturating_sub(1), AUDIT_LENGTH, false, Z_PATH).unwrap().config;
        assert!(dec.last.same_cells(&expect), "decrement from {c} leaves debris");
    }
}

#[test]
fn increment_then_decrement_restores_the_register() {
    let start = build_full_register(2, AUDIT_LENGTH, false, Z_PATH).unwrap().config;
    let up = operate(Operation::Increment, 2, None);
    let down = operate(Operation::Decrement, 3, Some(up.last));
    assert!(down.last.same_cells(&start));
}
