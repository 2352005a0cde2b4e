// SPDX-License-Identifier: MIT OR Apache-2.0

//! Builders for the traced structures, their probes and golden traces.
//!
//! Every structure is laid out by walking a [`Cursor`] from the origin. A
//! cursor is a tile plus a frame, and each move names the local face that is
//! crossed and the two local faces of the new tile that are anchored to known
//! panels. Tracks keep local face 0 on panel 0, the plane that carries the
//! circuit; a track element is entered through local face 5, left through
//! local face 2 and decorated by blue cells on local faces 6, 9 and 10.
//!
//! Scenario names: `line`, `arc`, `fixed-switch`, `fork`, `controller-pass`,
//! `controller-block`, `control-change`, `tunnel`, `grow`, `inc`, `inc2`,
//! `inc1`, `inc0`, `dec`, `dec2`, `dec1`, `dec0`, `stop`.

use std::collections::BTreeMap;

use crate::engine::{Configuration, EngineError, Evolver, Probe, Run};
use crate::rules::{scenario_table, Color, RuleTable};
use crate::topology::{frame_with, neighbor, Frame, TileId};

/// Panel type of the plane carrying the circuit.
pub const PLANE: u8 = 0;

/// All registered scenario names.
pub const NAMES: [&str; 18] = [
    "line",
    "arc",
    "fixed-switch",
    "fork",
    "controller-pass",
    "controller-block",
    "control-change",
    "tunnel",
    "grow",
    "inc",
    "inc2",
    "inc1",
    "inc0",
    "dec",
    "dec2",
    "dec1",
    "dec0",
    "stop",
];

/// Errors raised by scenario builders.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScenarioError {
    /// No scenario with this name.
    #[error("unknown scenario `{0}`")]
    Unknown(String),
    /// Register content outside `0..=length - 3`.
    #[error("register content {content} does not fit a register of length {length}")]
    Capacity {
        /// Requested content.
        content: usize,
        /// Requested length.
        length: usize,
    },
}

/// A tile with a frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cursor {
    /// The tile.
    pub tile: TileId,
    /// Its frame.
    pub frame: Frame,
}

impl Cursor {
    /// The origin with the identity frame.
    pub fn origin() -> Self {
        Cursor { tile: TileId::origin(), frame: Frame(crate::geometry::FaceMap::IDENTITY) }
    }

    /// Panel type of a local face.
    pub fn panel(&self, local: u8) -> u8 {
        self.frame.panel(local)
    }

    /// The tile across a local face.
    pub fn across(&self, local: u8) -> TileId {
        neighbor(&self.tile, self.panel(local))
    }

    /// A cursor on `tile` whose local faces `a` and `b` carry panels `pa` and `pb`.
    ///
    /// # Panics
    ///
    /// Panics if either pair is not contiguous; builders only use fixed valid anchors.
    pub fn anchored(tile: TileId, a: u8, pa: u8, b: u8, pb: u8) -> Self {
        let frame = frame_with(&tile, a, pa, b, pb).expect("builder anchors are contiguous");
        Cursor { tile, frame }
    }

    /// Crosses local face `exit`; in the new tile local face `a` carries panel
    /// `pa` and local face `entry` carries the crossed panel.
    pub fn cross(&self, exit: u8, a: u8, pa: u8, entry: u8) -> Self {
        let shared = self.panel(exit);
        Cursor::anchored(neighbor(&self.tile, shared), a, pa, entry, shared)
    }

    /// The next track element: leave by face 2, enter the next one by face 5.
    pub fn forward(&self) -> Self {
        self.cross(2, 0, self.panel(0), 5)
    }

    /// The previous track element: leave by face 5, arrive in its face 2.
    pub fn backward(&self) -> Self {
        self.cross(5, 0, self.panel(0), 2)
    }
}

/// How trace rows are laid out in text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceLayout {
    /// One probe; rows labelled `-` for the initial time, then 0, 1, 2 and so on.
    Timeline,
    /// One block per time, with a comment line and one row per probe.
    Snapshots,
}

/// A ready-to-run structure.
#[derive(Debug, Clone)]
pub struct Scenario {
    /// Registry name.
    pub name: &'static str,
    /// Starting configuration.
    pub initial: Configuration,
    /// The structure without locomotive or growth tip, when it has an idle form.
    pub idle: Option<Configuration>,
    /// Watched tile rows.
    pub probes: Vec<Probe>,
    /// Text layout of the trace.
    pub layout: TraceLayout,
    /// Default number of steps.
    pub steps: usize,
    /// Embedded golden trace, if the structure is traced.
    pub golden: Option<&'static str>,
}

/// A difference between a produced and a golden trace row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowMismatch {
    /// Zero-based index among the non-comment rows.
    pub row: usize,
    /// Golden row, if the golden trace is long enough.
    pub expected: Option<String>,
    /// Produced row, if the produced trace is long enough.
    pub actual: Option<String>,
}

/// Outcome of comparing a run with its golden trace.
#[derive(Debug, Clone)]
pub struct Verification {
    /// Rendered trace text lines, comments included.
    pub produced: Vec<String>,
    /// Row differences; empty means exact agreement.
    pub mismatches: Vec<RowMismatch>,
    /// Configuration at the end of the run.
    pub last: Configuration,
}

impl Verification {
    /// True when every golden row was reproduced.
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn ruler(n: usize) -> String {
    (0..n).map(|i| if i % 5 == 0 { "+" } else { "-" }).collect::<Vec<_>>().join(" ")
}

/// Non-comment, non-empty lines of a trace text.
pub fn data_rows<'a>(lines: impl IntoIterator<Item = &'a str>) -> Vec<&'a str> {
    lines.into_iter().map(str::trim_end).filter(|l| !l.is_empty() && !l.starts_with('#')).collect()
}

/// Compares trace rows, ignoring comment lines.
pub fn compare_rows(golden: &str, produced: &[String]) -> Vec<RowMismatch> {
    let g = data_rows(golden.lines());
    let p = data_rows(produced.iter().map(String::as_str));
    let mut out = Vec::new();
    for row in 0..g.len().max(p.len()) {
        let (e, a) = (g.get(row), p.get(row));
        if e != a {
            out.push(RowMismatch { row, expected: e.map(|s| s.to_string()), actual: a.map(|s| s.to_string()) });
        }
    }
    out
}

impl Scenario {
    /// Runs the scenario for `steps` steps on the given table.
    pub fn run_on(&self, table: &RuleTable, steps: usize) -> Result<Run, EngineError> {
        Evolver::new(table).run(&self.initial, steps, &self.probes)
    }

    /// Runs the scenario for its default number of steps on the scenario table.
    pub fn run(&self) -> Result<Run, EngineError> {
        self.run_on(scenario_table(), self.steps)
    }

    /// Renders a run in the trace text format.
    pub fn render(&self, run: &Run) -> Vec<String> {
        let mut out = Vec::new();
        match self.layout {
            TraceLayout::Timeline => {
                let width = self.probes.first().map_or(0, |p| p.tiles.len());
                out.push(format!("# {}", ruler(width)));
                for (k, row) in run.rows.iter().enumerate() {
                    let label = if k == 0 { "-".to_string() } else { (k - 1).to_string() };
                    out.push(format!("{label} {}", row[0]));
                }
            }
            TraceLayout::Snapshots => {
                let width = self.probes.iter().map(|p| p.tiles.len()).max().unwrap_or(0);
                for (k, row) in run.rows.iter().enumerate() {
                    out.push(format!("# {k} {}", ruler(width)));
                    for (probe, letters) in self.probes.iter().zip(row) {
                        out.push(format!("{} {letters}", probe.label));
                    }
                }
            }
        }
        out
    }

    /// Runs on `table` for the default steps and compares with the golden trace.
    ///
    /// Scenarios without golden trace pass vacuously.
    pub fn verify_on(&self, table: &RuleTable) -> Result<Verification, EngineError> {
        let run = self.run_on(table, self.steps)?;
        let produced = self.render(&run);
        let mismatches = match self.golden {
            Some(g) => compare_rows(g, &produced),
            None => Vec::new(),
        };
        Ok(Verification { produced, mismatches, last: run.last })
    }

    /// Verification on the scenario table.
    pub fn verify(&self) -> Result<Verification, EngineError> {
        self.verify_on(scenario_table())
    }
}

/// A configuration under construction.
#[derive(Debug, Clone, Default)]
struct Canvas {
    config: Configuration,
}

impl Canvas {
    fn put(&mut self, t: &TileId, c: Color) {
        self.config.set(t.clone(), c);
    }

    fn deco(&mut self, cur: &Cursor, faces: &[u8], c: Color) {
        for &f in faces {
            self.config.set(cur.across(f), c);
        }
    }

    fn track(&mut self, cells: &[Cursor]) {
        for cur in cells {
            self.deco(cur, &TRACK_DECORATION, Color::B);
        }
    }
}

/// Local faces of a track element carrying its blue decoration.
pub const TRACK_DECORATION: [u8; 3] = [6, 9, 10];

fn walk(start: Cursor, n: usize, step: impl Fn(&Cursor) -> Cursor) -> Vec<Cursor> {
    let mut cells = vec![start];
    while cells.len() < n {
        let next = step(cells.last().expect("non-empty"));
        cells.push(next);
    }
    cells
}

fn tiles(cells: &[Cursor]) -> Vec<TileId> {
    cells.iter().map(|c| c.tile.clone()).collect()
}

fn timeline(name: &'static str, canvas: Canvas, locos: &[&TileId], probe: Vec<TileId>, steps: usize) -> Scenario {
    let idle = canvas.config.clone();
    let mut initial = canvas.config;
    for t in locos {
        initial.set((*t).clone(), Color::B);
    }
    Scenario {
        name,
        initial,
        idle: Some(idle),
        probes: vec![Probe::new("t", probe)],
        layout: TraceLayout::Timeline,
        steps,
        golden: golden(name),
    }
}

fn golden(name: &str) -> Option<&'static str> {
    Some(match name {
        "line" => include_str!("../data/golden/line.txt"),
        "arc" => include_str!("../data/golden/arc.txt"),
        "fork" => include_str!("../data/golden/fork.txt"),
        "controller-block" => include_str!("../data/golden/controller-block.txt"),
        "control-change" => include_str!("../data/golden/control-change.txt"),
        "tunnel" => include_str!("../data/golden/tunnel.txt"),
        "grow" => include_str!("../data/golden/grow.txt"),
        "inc" => include_str!("../data/golden/inc.txt"),
        "inc2" => include_str!("../data/golden/inc2.txt"),
        "inc1" => include_str!("../data/golden/inc1.txt"),
        "inc0" => include_str!("../data/golden/inc0.txt"),
        "dec" => include_str!("../data/golden/dec.txt"),
        "dec2" => include_str!("../data/golden/dec2.txt"),
        "dec1" => include_str!("../data/golden/dec1.txt"),
        "dec0" => include_str!("../data/golden/dec0.txt"),
        "stop" => include_str!("../data/golden/stop.txt"),
        _ => return None,
    })
}

/// A straight track of `n + 3` elements; the locomotive starts on element 1
/// and the first `n` elements are watched for `n - 2` steps.
pub fn build_track_line(n: usize) -> Scenario {
    let n = n.max(3);
    let cells = walk(Cursor::origin(), n + 3, Cursor::forward);
    let mut canvas = Canvas::default();
    canvas.track(&cells);
    let mut s = timeline("line", canvas, &[&cells[1].tile], tiles(&cells[..n]), n - 2);
    if n != 15 {
        s.golden = None;
    }
    s
}

/// A track bending along a circle: its elements alternately take the previous
/// element on local face 5 twice and on local face 1 once.
pub fn build_arc(n: usize) -> Scenario {
    let n = n.max(3);
    let mut cells = vec![Cursor::origin()];
    for k in 0..n + 2 {
        let entry = if k % 3 == 2 { 1 } else { 5 };
        let next = cells[k].cross(2, 0, PLANE, entry);
        cells.push(next);
    }
    let mut canvas = Canvas::default();
    canvas.track(&cells);
    let mut s = timeline("arc", canvas, &[&cells[1].tile], tiles(&cells[..n]), n - 1);
    if n != 12 {
        s.golden = None;
    }
    s
}

/// Which branch of the fixed switch carries the locomotive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The branch arriving on local face 5 of the switch.
    A,
    /// The branch arriving on local face 4 of the switch.
    B,
}

/// Two branches merging into one exit track at the origin.
pub fn build_fixed_switch(branch: Branch) -> Scenario {
    let centre = Cursor::origin();
    let exit = walk(centre.clone(), 6, Cursor::forward);
    let mut branch_a = walk(centre.clone(), 6, Cursor::backward);
    branch_a.remove(0);
    branch_a.reverse();
    let first_b = centre.cross(4, 0, PLANE, 2);
    let mut branch_b = walk(first_b, 5, Cursor::backward);
    branch_b.reverse();
    let mut canvas = Canvas::default();
    canvas.track(&exit);
    canvas.track(&branch_a);
    canvas.track(&branch_b);
    let used = if branch == Branch::A { &branch_a } else { &branch_b };
    let mut probe = tiles(used);
    probe.extend(tiles(&exit));
    let loco = used[1].tile.clone();
    timeline("fixed-switch", canvas, &[&loco], probe, 9)
}

/// A fork: one track enters on local face 2 of the centre, two tracks leave
/// through local faces 4 and 5.
pub fn build_fork() -> Scenario {
    let approach = walk(Cursor::origin(), 4, Cursor::forward);
    let centre = approach[3].cross(2, 0, PLANE, 2);
    let branch = |face: u8| walk(centre.cross(face, 0, PLANE, 5), 5, Cursor::forward);
    let (left, right) = (branch(4), branch(5));
    let mut canvas = Canvas::default();
    canvas.track(&approach);
    canvas.track(&left);
    canvas.track(&right);
    canvas.deco(&centre, &[6, 7, 8, 9], Color::B);
    canvas.deco(&centre, &[11], Color::R);
    let mut probe = tiles(&approach);
    probe.push(centre.tile.clone());
    probe.extend(tiles(&left[..4]));
    probe.extend(tiles(&right[..5]));
    let loco = approach[1].tile.clone();
    timeline("fork", canvas, &[&loco], probe, 7)
}

/// A nine-element track with a controller under element 4.
struct ControlledTrack {
    cells: Vec<Cursor>,
    controller: Cursor,
}

fn controlled_track(canvas: &mut Canvas, start: Cursor, colour: Color) -> ControlledTrack {
    let cells = walk(start, 9, Cursor::forward);
    canvas.track(&cells);
    let above = &cells[4];
    let controller = Cursor::anchored(neighbor(&above.tile, PLANE), 0, PLANE, 5, above.panel(1));
    canvas.deco(&controller, &[6, 9, 10, 11], Color::B);
    canvas.put(&controller.tile, colour);
    ControlledTrack { cells, controller }
}

/// Start of a second track far enough from the one through the origin.
fn distant_start() -> Cursor {
    let mut c = Cursor::origin();
    for _ in 0..6 {
        c = c.backward();
    }
    c.cross(3, 0, PLANE, 5)
}

/// A single track through a permissive controller.
pub fn build_controller_pass() -> Scenario {
    let mut canvas = Canvas::default();
    let t = controlled_track(&mut canvas, Cursor::origin(), Color::W);
    let loco = t.cells[1].tile.clone();
    timeline("controller-pass", canvas, &[&loco], tiles(&t.cells), 7)
}

/// Two tracks side by side: a blocking controller on the first, a permissive
/// one on the second, one locomotive on each.
pub fn build_controller_block() -> Scenario {
    let mut canvas = Canvas::default();
    let a = controlled_track(&mut canvas, Cursor::origin(), Color::B);
    let b = controlled_track(&mut canvas, distant_start(), Color::W);
    let mut probe = tiles(&a.cells[..6]);
    probe.extend(tiles(&b.cells[..6]));
    timeline("controller-block", canvas, &[&a.cells[1].tile, &b.cells[1].tile], probe, 5)
}

/// Builds the permissive (`false`) or blocking (`true`) controller scenario.
pub fn build_controller(blocking: bool) -> Scenario {
    if blocking {
        build_controller_block()
    } else {
        build_controller_pass()
    }
}

/// A signal track of five elements ending on local face 5 of a controller.
fn signal_track(canvas: &mut Canvas, controller: &Cursor) -> Vec<Cursor> {
    let last = controller.cross(5, 0, PLANE, 2);
    let mut cells = walk(last, 5, Cursor::backward);
    cells.reverse();
    canvas.track(&cells);
    cells
}

/// Both controllers receive a signal locomotive that toggles their colour.
pub fn build_control_change() -> Scenario {
    let mut canvas = Canvas::default();
    let a = controlled_track(&mut canvas, Cursor::origin(), Color::B);
    let b = controlled_track(&mut canvas, distant_start(), Color::W);
    let sa = signal_track(&mut canvas, &a.controller);
    let sb = signal_track(&mut canvas, &b.controller);
    let mut probe = tiles(&sa[1..5]);
    probe.push(a.controller.tile.clone());
    probe.extend(tiles(&a.cells[4..6]));
    probe.extend(tiles(&sb[2..5]));
    probe.push(b.controller.tile.clone());
    probe.extend(tiles(&b.cells[4..7]));
    timeline("control-change", canvas, &[&sa[2].tile, &sb[2].tile], probe, 6)
}

/// Track elements of the tunnel and of the track crossing it.
struct TunnelLayout {
    path: Vec<Cursor>,
    upper: Vec<Cursor>,
}

fn tunnel_layout() -> TunnelLayout {
    let line = walk(Cursor::origin(), 5, Cursor::forward);
    let mut path: Vec<Cursor> = line[1..4].to_vec();
    let entry_above = &line[4];
    // The entry element turns: the locomotive comes in on face 1 and leaves
    // downwards through face 2, which lies on the plane.
    let a_e = Cursor::anchored(entry_above.tile.clone(), 1, entry_above.panel(5), 2, PLANE);
    let b_e = Cursor::anchored(neighbor(&a_e.tile, PLANE), 7, PLANE, 2, a_e.panel(7));
    path.push(a_e);
    path.push(b_e);
    for _ in 0..3 {
        let next = path.last().expect("non-empty").cross(2, 0, PLANE, 5);
        path.push(next);
    }
    let t3 = path.last().expect("non-empty");
    let b_x = Cursor::anchored(t3.across(2), 1, t3.panel(2), 2, PLANE);
    let a_y = Cursor::anchored(neighbor(&b_x.tile, PLANE), 1, PLANE, 2, b_x.panel(8));
    path.push(b_x);
    path.push(a_y);
    let first = path.last().expect("non-empty").cross(2, 0, PLANE, 5);
    path.extend(walk(first, 4, Cursor::forward));

    let under = &path[6];
    let centre = Cursor::anchored(neighbor(&under.tile, PLANE), 0, PLANE, 5, under.panel(3));
    let ahead = walk(centre.clone(), 5, Cursor::forward);
    let mut upper = walk(centre, 5, Cursor::backward);
    upper.reverse();
    upper.pop();
    upper.extend(ahead);
    TunnelLayout { path, upper }
}

/// A track dipping under the plane for three elements while another track
/// crosses above it. The entry element below the plane has a red marker on
/// local face 3.
pub fn build_tunnel() -> Scenario {
    let layout = tunnel_layout();
    let mut canvas = Canvas::default();
    canvas.track(&layout.path);
    canvas.track(&layout.upper);
    canvas.deco(&layout.path[4], &[3], Color::R);
    let mut probe = tiles(&layout.path[..13]);
    probe.reverse();
    let loco = layout.path[1].tile.clone();
    timeline("tunnel", canvas, &[&loco], probe, 11)
}

/// The crossing track of the tunnel with a locomotive on it.
pub fn build_tunnel_upper() -> Scenario {
    let layout = tunnel_layout();
    let mut canvas = Canvas::default();
    canvas.track(&layout.path);
    canvas.track(&layout.upper);
    canvas.deco(&layout.path[4], &[3], Color::R);
    let loco = layout.upper[1].tile.clone();
    let mut s = timeline("tunnel", canvas, &[&loco], tiles(&layout.upper), 7);
    s.golden = None;
    s
}

/// A register site: a strand letter or access-path name with a coordinate.
///
/// Strands are `c` (content), `i` (increment return), `d` (decrement return)
/// and `s` (stop). Access cells are `b` (the decrement entry at coordinate 0),
/// `p` (its approach), `cc` (the zero-test junction at 0) and `z` (the path
/// leaving the junction).
pub type Site = (&'static str, i32);

/// A register laid out along the plane.
#[derive(Debug, Clone)]
pub struct Register {
    /// Cell states.
    pub config: Configuration,
    /// Cursor of every named site.
    pub sites: BTreeMap<Site, Cursor>,
    /// Number of strand elements before the tip.
    pub length: usize,
}

impl Register {
    /// The tile of a site.
    ///
    /// # Panics
    ///
    /// Panics if the site was not built.
    pub fn tile(&self, site: Site) -> &TileId {
        &self.sites.get(&site).unwrap_or_else(|| panic!("site {site:?} was not built")).tile
    }

    fn strand_cells(&mut self, n: i32, c: Cursor) {
        let (p0, p1) = (c.panel(0), c.panel(1));
        let i = Cursor::anchored(neighbor(&c.tile, p0), 0, p0, 1, p1);
        let d = Cursor::anchored(neighbor(&c.tile, p1), 0, p0, 1, p1);
        let s = Cursor::anchored(neighbor(&d.tile, p0), 0, p0, 1, p1);
        self.sites.insert(("c", n), c);
        self.sites.insert(("i", n), i);
        self.sites.insert(("d", n), d);
        self.sites.insert(("s", n), s);
    }

    /// Adds strand sites beyond the built length, without colouring them.
    pub fn extend_to(&mut self, upto: i32) {
        let mut n = self.sites.keys().filter(|k| k.0 == "c").map(|k| k.1).max().unwrap_or(0);
        while n + 1 < upto {
            let next = self.sites[&("c", n)].forward();
            n += 1;
            self.strand_cells(n, next);
        }
    }

    fn deco(&mut self, site: Site, faces: &[u8], c: Color) {
        let cur = self.sites[&site].clone();
        for &f in faces {
            self.config.set(cur.across(f), c);
        }
    }

    /// Register content: the number of blank cells at the start of strand `c`.
    pub fn content(&self, c: &Configuration) -> usize {
        (0..self.length as i32).take_while(|&n| c.get(self.tile(("c", n))) == Color::W).count()
    }
}

/// The four strands of a register holding `content`, with `length` elements
/// and, when `tip` is set, a green growing tip at coordinate `length`.
pub fn build_register(content: usize, length: usize, tip: bool) -> Result<Register, ScenarioError> {
    if length < 3 || content > length - 3 {
        return Err(ScenarioError::Capacity { content, length });
    }
    let mut reg = Register { config: Configuration::new(), sites: BTreeMap::new(), length };
    let mut c = Cursor::origin();
    reg.strand_cells(-1, c.backward());
    for n in 0..=length as i32 {
        if n > 0 {
            c = c.forward();
        }
        reg.strand_cells(n, c.clone());
    }
    let len = length as i32;
    for n in 0..=len {
        let cells: Vec<TileId> = ["c", "i", "d", "s"].iter().map(|k| reg.tile((k, n)).clone()).collect();
        if n == len {
            if tip {
                for t in cells {
                    reg.config.set(t, Color::G);
                }
            }
            continue;
        }
        let content_colour = if (n as usize) < content { Color::W } else { Color::B };
        for (t, col) in cells.into_iter().zip([content_colour, Color::R, Color::Y, Color::B]) {
            reg.config.set(t, col);
        }
        for k in ["c", "s"] {
            reg.deco((k, n), &[3, 7], Color::B);
        }
        for k in ["i", "d"] {
            reg.deco((k, n), &[4, 6], Color::B);
        }
    }
    reg.deco(("c", 0), &[9], Color::B);
    reg.deco(("i", 0), &[9], Color::B);
    reg.deco(("d", 0), &[9, 11], Color::R);
    reg.deco(("s", 0), &[9], Color::B);
    reg.deco(("c", -1), &[6, 9, 10], Color::Y);
    reg.deco(("i", -1), &[6, 9], Color::R);
    reg.deco(("i", -1), &[10], Color::Y);
    reg.deco(("d", -1), &[6, 9], Color::Y);
    reg.deco(("d", -1), &[10], Color::R);
    reg.deco(("s", -1), &[6, 9, 10], Color::R);
    reg.deco(("s", -1), &[7], Color::B);
    Ok(reg)
}

fn track_site(reg: &mut Register, site: Site, cur: Cursor) {
    reg.sites.insert(site, cur);
    reg.deco(site, &TRACK_DECORATION, Color::B);
}

/// A register with its access paths: the approach `p` and entry `b` used by
/// decrement, the strand `c` track used by increment, the junction `cc` with
/// its leaving path `z1..z_paths`, and the return paths of strands `d` and `i`.
pub fn build_full_register(content: usize, length: usize, tip: bool, z_paths: i32) -> Result<Register, ScenarioError> {
    let mut reg = build_register(content, length, tip)?;
    let before = reg.sites[&("c", -1)].clone();

    let b = Cursor::anchored(neighbor(&before.tile, before.panel(4)), 2, before.panel(4), 0, before.panel(0));
    reg.sites.insert(("b", 0), b.clone());
    reg.deco(("b", 0), &[6, 9, 10], Color::R);
    reg.deco(("b", 0), &[7], Color::B);
    let mut cur = b;
    for k in 1..=3 {
        cur = cur.backward();
        track_site(&mut reg, ("p", -k), cur.clone());
    }

    let mut cur = before.clone();
    for k in 2..=4 {
        cur = cur.backward();
        track_site(&mut reg, ("c", -k), cur.clone());
    }

    let cc = Cursor::anchored(neighbor(&before.tile, before.panel(8)), 4, before.panel(8), 0, before.panel(9));
    reg.sites.insert(("cc", 0), cc.clone());
    reg.deco(("cc", 0), &[8, 9, 11], Color::Y);
    let mut cur = cc;
    for k in 1..=z_paths {
        cur = cur.forward();
        track_site(&mut reg, ("z", k), cur.clone());
    }

    for (strand, face) in [("d", 3u8), ("i", 2u8)] {
        let from = reg.sites[&(strand, -1)].clone();
        let mut cur = Cursor::anchored(neighbor(&from.tile, from.panel(face)), 5, from.panel(face), 0, from.panel(0));
        for k in 2..=4 {
            if k > 2 {
                cur = cur.forward();
            }
            track_site(&mut reg, (strand, -k), cur.clone());
        }
    }
    Ok(reg)
}

fn strand_probe(reg: &Register, label: &str, strand: &'static str, range: std::ops::Range<i32>) -> Probe {
    Probe::new(label, range.map(|n| reg.tile((strand, n)).clone()).collect())
}

fn return_probe(reg: &Register, label: &str, strand: &'static str, width: i32) -> Probe {
    let mut t = vec![reg.tile((strand, -3)).clone(), reg.tile((strand, -2)).clone()];
    t.extend((-1..width - 3).map(|n| reg.tile((strand, n)).clone()));
    Probe::new(label, t)
}

/// Parameters of a traced register operation: content, probe width, steps.
fn register_setting(name: &str) -> Option<(usize, i32, usize)> {
    Some(match name {
        "dec" => (5, 11, 18),
        "dec2" => (2, 9, 11),
        "dec1" => (1, 8, 9),
        "dec0" => (0, 7, 7),
        "inc" => (5, 11, 15),
        "inc2" => (2, 9, 9),
        "inc1" => (1, 8, 7),
        "inc0" => (0, 7, 5),
        _ => return None,
    })
}

/// Number of elements of the path leaving the zero-test junction.
pub const Z_PATH: i32 = 6;

/// A register holding `content`, with a decrement locomotive on the approach.
pub fn build_decrement(content: usize) -> Result<Scenario, ScenarioError> {
    let name = match content {
        0 => "dec0",
        1 => "dec1",
        2 => "dec2",
        _ => "dec",
    };
    let (_, width, steps) = register_setting(name).expect("known setting");
    let length = width as usize + 6;
    let reg = build_full_register(content, length, true, Z_PATH)?;
    let idle = build_full_register(content, length, false, Z_PATH)?.config;
    let approach: [Site; 11] = [
        ("p", -3),
        ("p", -2),
        ("p", -1),
        ("b", 0),
        ("z", 2),
        ("z", 1),
        ("cc", 0),
        ("z", 3),
        ("z", 4),
        ("z", 5),
        ("z", 6),
    ];
    let p = Probe::new("p", approach[..width as usize].iter().map(|&s| reg.tile(s).clone()).collect());
    let probes = vec![strand_probe(&reg, "c", "c", -3..width - 3), return_probe(&reg, "d", "d", width), p];
    let mut initial = reg.config.clone();
    initial.set(reg.tile(("p", -3)).clone(), Color::B);
    let golden = if content <= 2 || content == 5 { golden(name) } else { None };
    Ok(Scenario { name, initial, idle: Some(idle), probes, layout: TraceLayout::Snapshots, steps, golden })
}

/// A register holding `content`, with an increment locomotive on strand `c`.
pub fn build_increment(content: usize) -> Result<Scenario, ScenarioError> {
    let name = match content {
        0 => "inc0",
        1 => "inc1",
        2 => "inc2",
        _ => "inc",
    };
    let (_, width, steps) = register_setting(name).expect("known setting");
    let length = width as usize + 6;
    let reg = build_full_register(content, length, true, 3)?;
    let idle = build_full_register(content, length, false, 3)?.config;
    let label = if name == "inc" { "i" } else { "d" };
    let probes = vec![strand_probe(&reg, "c", "c", -3..width - 3), return_probe(&reg, label, "i", width)];
    let mut initial = reg.config.clone();
    initial.set(reg.tile(("c", -3)).clone(), Color::B);
    let golden = if content <= 2 || content == 5 { golden(name) } else { None };
    Ok(Scenario { name, initial, idle: Some(idle), probes, layout: TraceLayout::Snapshots, steps, golden })
}

/// An empty register of length 4 with its growing tip.
pub fn build_grow() -> Scenario {
    let mut reg = build_full_register(0, 4, true, 3).expect("valid register");
    let idle = build_full_register(0, 4, false, 3).expect("valid register").config;
    reg.extend_to(12);
    let probes = ["c", "i", "d", "s"].iter().map(|&k| strand_probe(&reg, k, k, 0..10)).collect();
    Scenario {
        name: "grow",
        initial: reg.config.clone(),
        idle: Some(idle),
        probes,
        layout: TraceLayout::Snapshots,
        steps: 5,
        golden: golden("grow"),
    }
}

/// Length of the register used by the stop scenario.
pub const STOP_LENGTH: usize = 8;

/// A growing register receiving the stop signal on strand `s`.
pub fn build_stop() -> Scenario {
    let mut reg = build_full_register(0, STOP_LENGTH, true, 3).expect("valid register");
    let idle = build_full_register(0, STOP_LENGTH, false, 3).expect("valid register").config;
    let len = STOP_LENGTH as i32;
    reg.extend_to(len + 8);
    let mut initial = reg.config.clone();
    initial.set(reg.tile(("s", len - 4)).clone(), Color::R);
    let probes = ["c", "i", "d", "s"].iter().map(|&k| strand_probe(&reg, k, k, len - 4..len + 7)).collect();
    Scenario {
        name: "stop",
        initial,
        idle: Some(idle),
        probes,
        layout: TraceLayout::Snapshots,
        steps: 12,
        golden: golden("stop"),
    }
}

/// Builds a scenario by registry name.
pub fn build(name: &str) -> Result<Scenario, ScenarioError> {
    Ok(match name {
        "line" => build_track_line(15),
        "arc" => build_arc(12),
        "fixed-switch" => build_fixed_switch(Branch::A),
        "fork" => build_fork(),
        "controller-pass" => build_controller(false),
        "controller-block" => build_controller(true),
        "control-change" => build_control_change(),
        "tunnel" => build_tunnel(),
        "grow" => build_grow(),
        "stop" => build_stop(),
        "inc" | "inc2" | "inc1" | "inc0" | "dec" | "dec2" | "dec1" | "dec0" => {
            let (content, _, _) = register_setting(name).expect("listed setting");
            if name.starts_with("inc") {
                build_increment(content)?
            } else {
                build_decrement(content)?
            }
        }
        other => return Err(ScenarioError::Unknown(other.to_string())),
    })
}

/// The states of the probe tiles as space-separated letters.
pub fn probe_letters(c: &Configuration, probe: &Probe) -> String {
    probe.letters(c)
}
