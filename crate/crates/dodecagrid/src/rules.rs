// SPDX-License-Identifier: MIT OR Apache-2.0

//! Rules, their rotated images, minimal forms and rule tables.
//!
//! A rule is written `X:YYYYYYYYYYYY:Z`: the current state, the states seen
//! on local faces 0 to 11, and the new state. Rotating a rule by `ρ` moves the
//! state seen on face `i` to face `ρ(i)`. The minimal form of a rule is the
//! rotated image whose neighbour word is lexicographically least under the
//! letter order `W < B < R < G < Y`; two rules are rotations of one another
//! exactly when their minimal forms agree.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::geometry::{rotation_group, FaceMap, FACES};

/// One of the five cell states. `W` is the quiescent blank state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Color {
    /// Blank, quiescent.
    #[default]
    W,
    /// Blue.
    B,
    /// Red.
    R,
    /// Green.
    G,
    /// Yellow.
    Y,
}

impl Color {
    /// All states in the canonical letter order.
    pub const ALL: [Color; 5] = [Color::W, Color::B, Color::R, Color::G, Color::Y];

    /// Parses one letter.
    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'W' => Some(Color::W),
            'B' => Some(Color::B),
            'R' => Some(Color::R),
            'G' => Some(Color::G),
            'Y' => Some(Color::Y),
            _ => None,
        }
    }

    /// The letter of the state.
    pub fn as_char(self) -> char {
        match self {
            Color::W => 'W',
            Color::B => 'B',
            Color::R => 'R',
            Color::G => 'G',
            Color::Y => 'Y',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// The twelve neighbour states of a cell, indexed by local face.
pub type Neighborhood = [Color; FACES];

/// Formats a neighbourhood as twelve letters.
pub fn word(n: &Neighborhood) -> String {
    n.iter().map(|c| c.as_char()).collect()
}

/// A transition rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    /// Current state of the cell.
    pub here: Color,
    /// States seen on local faces 0 to 11.
    pub around: Neighborhood,
    /// New state of the cell.
    pub next: Color,
    /// Optional running label such as `118`, `r19` or `s3`.
    pub label: Option<String>,
}

impl Rule {
    /// Builds an unlabelled rule.
    pub fn new(here: Color, around: Neighborhood, next: Color) -> Self {
        Rule { here, around, next, label: None }
    }

    /// The label, or `?` when the rule has none.
    pub fn name(&self) -> &str {
        self.label.as_deref().unwrap_or("?")
    }

    /// The rule text without its label.
    pub fn body(&self) -> String {
        format!("{}:{}:{}", self.here, word(&self.around), self.next)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l} {}", self.body()),
            None => f.write_str(&self.body()),
        }
    }
}

/// A rule reported by [`lookup`] as absent from the table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MissingRule {
    /// State of the cell.
    pub here: Color,
    /// Neighbourhood in the frame used for reading.
    pub around: Neighborhood,
    /// Minimal rotated form of `around`.
    pub minimal: Neighborhood,
}

impl fmt::Display for MissingRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no rule for {}:{}: (minimal form {}:{})",
            self.here,
            word(&self.around),
            self.here,
            word(&self.minimal)
        )
    }
}

/// Errors raised by the rules module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RuleError {
    /// Malformed rule text.
    #[error("{}column {column}: {message}", line.map(|l| format!("line {l}, ")).unwrap_or_default())]
    Parse {
        /// One-based line number when parsing a file.
        line: Option<usize>,
        /// One-based column of the offending character.
        column: usize,
        /// Description of the problem.
        message: String,
    },
    /// No rule matches a neighbourhood.
    #[error("{0}")]
    Missing(Box<MissingRule>),
    /// Two rules with the same left-hand side but different new states.
    #[error("rules {0} and {1} have the same left-hand side and different new states")]
    Conflict(String, String),
}

fn parse_error(column: usize, message: impl Into<String>) -> RuleError {
    RuleError::Parse { line: None, column, message: message.into() }
}

/// Parses `[label ]X:YYYYYYYYYYYY:Z`.
pub fn parse_rule(text: &str) -> Result<Rule, RuleError> {
    let trimmed = text.trim_end();
    let lead = trimmed.len() - trimmed.trim_start().len();
    let trimmed = trimmed.trim_start();
    let (label, body, offset) = match trimmed.split_once(char::is_whitespace) {
        Some((l, b)) => {
            let b2 = b.trim_start();
            (Some(l.to_string()), b2, lead + trimmed.len() - b2.len())
        }
        None => (None, trimmed, lead),
    };
    let chars: Vec<char> = body.chars().collect();
    if chars.len() != 16 {
        return Err(parse_error(
            offset + 1,
            format!("expected 16 characters `X:YYYYYYYYYYYY:Z`, found {}", chars.len()),
        ));
    }
    let letter = |i: usize| {
        Color::from_char(chars[i])
            .ok_or_else(|| parse_error(offset + i + 1, format!("`{}` is not one of W B R G Y", chars[i])))
    };
    for i in [1, 14] {
        if chars[i] != ':' {
            return Err(parse_error(offset + i + 1, format!("expected `:`, found `{}`", chars[i])));
        }
    }
    let here = letter(0)?;
    let mut around = [Color::W; FACES];
    for (k, slot) in around.iter_mut().enumerate() {
        *slot = letter(2 + k)?;
    }
    let next = letter(15)?;
    Ok(Rule { here, around, next, label })
}

/// Parses a rule file: one rule per line, `#` starts a comment.
pub fn parse_rules(text: &str) -> Result<Vec<Rule>, RuleError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let rule = parse_rule(line).map_err(|e| match e {
            RuleError::Parse { column, message, .. } => RuleError::Parse { line: Some(n + 1), column, message },
            other => other,
        })?;
        out.push(rule);
    }
    Ok(out)
}

/// Applies a rotation: the state on face `i` moves to face `ρ(i)`.
pub fn rotate_neighborhood(around: &Neighborhood, rho: &FaceMap) -> Neighborhood {
    let mut out = [Color::W; FACES];
    for i in 0..FACES {
        out[rho[i] as usize] = around[i];
    }
    out
}

/// The rotated image of a rule.
pub fn rotate_rule(r: &Rule, rho: &FaceMap) -> Rule {
    Rule { here: r.here, around: rotate_neighborhood(&r.around, rho), next: r.next, label: r.label.clone() }
}

fn inverse_rotations() -> &'static [[u8; FACES]] {
    static INV: OnceLock<Vec<[u8; FACES]>> = OnceLock::new();
    INV.get_or_init(|| rotation_group().iter().map(|r| r.map.inverse().images()).collect())
}

/// The least rotated image of a neighbourhood.
pub fn minimal_neighborhood(around: &Neighborhood) -> Neighborhood {
    // The image under ρ reads around[ρ⁻¹(j)] at position j; comparing lazily
    // lets most rotations be discarded after a few letters.
    let mut best = *around;
    for inv in inverse_rotations() {
        let mut better = false;
        for j in 0..FACES {
            let c = around[inv[j] as usize];
            if c != best[j] {
                better = c < best[j];
                break;
            }
        }
        if better {
            for j in 0..FACES {
                best[j] = around[inv[j] as usize];
            }
        }
    }
    best
}

/// The minimal form of a rule: state, least rotated neighbour word, new state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    /// Current state.
    pub here: Color,
    /// Least rotated neighbour word.
    pub around: Neighborhood,
    /// New state.
    pub next: Color,
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.here, word(&self.around), self.next)
    }
}

/// The minimal form of a rule.
pub fn minimal_form(r: &Rule) -> CanonicalForm {
    CanonicalForm { here: r.here, around: minimal_neighborhood(&r.around), next: r.next }
}

type Key = (Color, Neighborhood);

/// A list of rules with an index from canonical left-hand sides to new states.
#[derive(Debug, Clone)]
pub struct RuleTable {
    rules: Vec<Rule>,
    index: HashMap<Key, usize>,
    conflicts: Vec<(usize, usize)>,
}

impl RuleTable {
    /// Indexes the rules. When two rules share a left-hand side the first one
    /// is kept in the index and the pair is recorded as a conflict if their
    /// new states differ.
    pub fn new(rules: Vec<Rule>) -> Self {
        let mut index: HashMap<Key, usize> = HashMap::with_capacity(rules.len());
        let mut conflicts = Vec::new();
        for (i, r) in rules.iter().enumerate() {
            let key = (r.here, minimal_neighborhood(&r.around));
            match index.get(&key) {
                Some(&j) => {
                    if rules[j].next != r.next {
                        conflicts.push((j, i));
                    }
                }
                None => {
                    index.insert(key, i);
                }
            }
        }
        RuleTable { rules, index, conflicts }
    }

    /// Indexes the rules and rejects tables whose left-hand sides clash.
    pub fn deterministic(rules: Vec<Rule>) -> Result<Self, RuleError> {
        let t = RuleTable::new(rules);
        match t.conflicts.first() {
            Some(&(a, b)) => Err(RuleError::Conflict(t.rules[a].name().into(), t.rules[b].name().into())),
            None => Ok(t),
        }
    }

    /// The rules in input order.
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Number of rules.
    pub fn len(&self) -> usize {
        self.rules.len()
    }

    /// True for an empty table.
    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// True when no left-hand side maps to two new states.
    pub fn is_deterministic(&self) -> bool {
        self.conflicts.is_empty()
    }

    /// The rule whose canonical left-hand side matches, if any.
    pub fn find(&self, here: Color, around: &Neighborhood) -> Option<&Rule> {
        self.index.get(&(here, minimal_neighborhood(around))).map(|&i| &self.rules[i])
    }

    /// A copy of the table with extra rules appended.
    pub fn extended(&self, extra: &[Rule]) -> RuleTable {
        let mut rules = self.rules.clone();
        rules.extend_from_slice(extra);
        RuleTable::new(rules)
    }

    /// A copy of the table without the rules carrying the given labels.
    pub fn without(&self, labels: &[&str]) -> RuleTable {
        let rules = self.rules.iter().filter(|r| !labels.contains(&r.name())).cloned().collect();
        RuleTable::new(rules)
    }

    /// True when some rule has exactly this minimal form, new state included.
    pub fn contains_form(&self, form: &CanonicalForm) -> bool {
        self.rules.iter().any(|r| minimal_form(r) == *form)
    }
}

/// Result of a coherence audit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoherenceReport {
    /// Number of rules audited.
    pub rules: usize,
    /// Label pairs of rules with identical minimal forms.
    pub violations: Vec<(String, String)>,
    /// Label pairs with identical left-hand sides and different new states.
    pub conflicts: Vec<(String, String)>,
}

impl CoherenceReport {
    /// True when there are neither violations nor conflicts.
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.conflicts.is_empty()
    }
}

/// Lists every pair of rules sharing a minimal form and every pair sharing a
/// left-hand side with a different outcome.
pub fn check_coherence(t: &RuleTable) -> CoherenceReport {
    let forms: Vec<CanonicalForm> = t.rules.iter().map(minimal_form).collect();
    let mut report = CoherenceReport { rules: t.rules.len(), ..Default::default() };
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let (a, b) = (&forms[i], &forms[j]);
            if a.here != b.here || a.around != b.around {
                continue;
            }
            let pair = (t.rules[i].name().to_string(), t.rules[j].name().to_string());
            if a.next == b.next {
                report.violations.push(pair);
            } else {
                report.conflicts.push(pair);
            }
        }
    }
    report
}

/// The new state for a cell, looked up by canonical left-hand side.
pub fn lookup(t: &RuleTable, here: Color, around: &Neighborhood) -> Result<Color, RuleError> {
    let minimal = minimal_neighborhood(around);
    match t.index.get(&(here, minimal)) {
        Some(&i) => Ok(t.rules[i].next),
        None => Err(RuleError::Missing(Box::new(MissingRule { here, around: *around, minimal }))),
    }
}

const ARCHIVE_TEXT: &str = include_str!("../data/rules.txt");
const SUPPLEMENT_TEXT: &str = include_str!("../data/supplement.txt");

/// Label of the archived rule withdrawn from execution.
pub const WITHDRAWN: &str = "4";
/// Label of the rule sharing a left-hand side with the withdrawn rule.
pub const REPLACEMENT: &str = "118";

/// The full rule archive, 262 rules, including the withdrawn rule 4.
pub fn archive() -> &'static RuleTable {
    static T: OnceLock<RuleTable> = OnceLock::new();
    T.get_or_init(|| RuleTable::new(parse_rules(ARCHIVE_TEXT).expect("embedded archive parses")))
}

/// The executable table: the archive without rule 4.
pub fn builtin_table() -> &'static RuleTable {
    static T: OnceLock<RuleTable> = OnceLock::new();
    T.get_or_init(|| archive().without(&[WITHDRAWN]))
}

/// Rules absent from the archive that the shipped scenarios need.
pub fn supplement() -> &'static [Rule] {
    static S: OnceLock<Vec<Rule>> = OnceLock::new();
    S.get_or_init(|| parse_rules(SUPPLEMENT_TEXT).expect("embedded supplement parses"))
}

/// The executable table extended by the supplement; scenarios run on it.
pub fn scenario_table() -> &'static RuleTable {
    static T: OnceLock<RuleTable> = OnceLock::new();
    T.get_or_init(|| builtin_table().extended(supplement()))
}

/// The archive with rule 4 kept and rule 118 removed.
pub fn reinstated_table() -> &'static RuleTable {
    static T: OnceLock<RuleTable> = OnceLock::new();
    T.get_or_init(|| archive().without(&[REPLACEMENT]))
}

/// One representative per rotation class of the blank-preserving rules:
/// the quiescent rule, a lone non-blank state on face 0, a non-blank pair on
/// faces 0 and 1, and a non-blank triple on the vertex of faces 0, 1 and 2.
pub fn quiescence_family() -> Vec<Rule> {
    let inks = [Color::B, Color::R, Color::G, Color::Y];
    let mut patterns: Vec<Vec<Color>> = vec![vec![]];
    patterns.extend(inks.iter().map(|&x| vec![x]));
    for &x in &inks {
        for &y in &inks {
            patterns.push(vec![x, y]);
        }
    }
    for &x in &inks {
        for &y in &inks {
            for &z in &inks {
                patterns.push(vec![x, y, z]);
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for p in patterns {
        let mut around = [Color::W; FACES];
        around[..p.len()].copy_from_slice(&p);
        let rule = Rule::new(Color::W, around, Color::W);
        if seen.insert(minimal_form(&rule)) {
            out.push(rule);
        }
    }
    out
}
