//! Game representation, structural validation and the `.ssg` text format.
//!
//! Positions are dense indices `0..=n`. Index 0 is always the GOAL terminal;
//! every other position belongs to Max, Min or is a coin toss (AVE) and has
//! exactly two ordered outgoing arcs. Parallel arcs and self-loops are legal.
//!
//! The text format is line based:
//!
//! ```text
//! # comments run to end of line
//! ssg <n> <r>
//! <id> <MAX|MIN|AVE> <s1> <s2>     (exactly n lines, ids 1..=n once each)
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Index of the GOAL position.
pub const GOAL: usize = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PositionKind {
    Max,
    Min,
    /// Coin toss position.
    Ave,
    Goal,
}

impl PositionKind {
    pub fn keyword(self) -> &'static str {
        match self {
            PositionKind::Max => "MAX",
            PositionKind::Min => "MIN",
            PositionKind::Ave => "AVE",
            PositionKind::Goal => "GOAL",
        }
    }

    pub fn is_player(self) -> bool {
        matches!(self, PositionKind::Max | PositionKind::Min)
    }
}

impl fmt::Display for PositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for PositionKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "MAX" => Ok(PositionKind::Max),
            "MIN" => Ok(PositionKind::Min),
            "AVE" => Ok(PositionKind::Ave),
            _ => Err(()),
        }
    }
}

/// One of the two outgoing arcs of a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    First,
    Second,
}

impl Slot {
    pub const BOTH: [Slot; 2] = [Slot::First, Slot::Second];

    pub fn index(self) -> usize {
        match self {
            Slot::First => 0,
            Slot::Second => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Slot> {
        match i {
            0 => Some(Slot::First),
            1 => Some(Slot::Second),
            _ => None,
        }
    }
}

/// A position as written down, before any structural checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPosition {
    pub id: usize,
    pub kind: PositionKind,
    pub successors: Vec<usize>,
    /// Source line, when the position came from text.
    pub line: Option<usize>,
}

/// An unchecked game description. [`validate`] reports everything wrong
/// with it; [`Game::from_raw`] turns a clean one into a [`Game`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawGame {
    pub n: usize,
    pub r: usize,
    pub positions: Vec<RawPosition>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `n` must be at least 1.
    Empty,
    DuplicateId,
    IdOutOfRange,
    MissingPosition,
    /// The GOAL kind is reserved for index 0.
    GoalKind,
    WrongArity { found: usize },
    SuccessorOutOfRange { successor: usize },
    RMismatch { declared: usize, actual: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Position the violation refers to; `None` for whole-game violations.
    pub position: Option<usize>,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ViolationKind::Empty => write!(f, "game has no non-terminal positions")?,
            ViolationKind::DuplicateId => write!(f, "duplicate id")?,
            ViolationKind::IdOutOfRange => write!(f, "id out of range")?,
            ViolationKind::MissingPosition => write!(f, "missing position line")?,
            ViolationKind::GoalKind => write!(f, "GOAL kind outside index 0")?,
            ViolationKind::WrongArity { found } => {
                write!(f, "expected 2 successors, found {found}")?
            }
            ViolationKind::SuccessorOutOfRange { successor } => {
                write!(f, "successor out of range ({successor})")?
            }
            ViolationKind::RMismatch { declared, actual } => {
                write!(f, "r mismatch: declared {declared}, found {actual} AVE positions")?
            }
        }
        if let Some(p) = self.position {
            write!(f, " at position {p}")?;
        }
        Ok(())
    }
}

/// List of invariant violations; empty means the game is well formed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every structural invariant of a raw game description.
pub fn validate(raw: &RawGame) -> ValidationReport {
    let mut violations = Vec::new();
    let n = raw.n;
    if n == 0 {
        violations.push(Violation { position: None, kind: ViolationKind::Empty });
    }
    let mut seen = vec![false; n + 1];
    let mut aves = 0;
    for p in &raw.positions {
        let at = Some(p.id);
        if p.id == GOAL || p.id > n {
            violations.push(Violation { position: at, kind: ViolationKind::IdOutOfRange });
        } else if seen[p.id] {
            violations.push(Violation { position: at, kind: ViolationKind::DuplicateId });
        } else {
            seen[p.id] = true;
        }
        match p.kind {
            PositionKind::Goal => {
                violations.push(Violation { position: at, kind: ViolationKind::GoalKind })
            }
            PositionKind::Ave => aves += 1,
            _ => {}
        }
        if p.successors.len() != 2 {
            violations.push(Violation {
                position: at,
                kind: ViolationKind::WrongArity { found: p.successors.len() },
            });
        }
        for &s in &p.successors {
            if s > n {
                violations.push(Violation {
                    position: at,
                    kind: ViolationKind::SuccessorOutOfRange { successor: s },
                });
            }
        }
    }
    for (id, present) in seen.iter().enumerate().skip(1) {
        if !present {
            violations.push(Violation { position: Some(id), kind: ViolationKind::MissingPosition });
        }
    }
    if aves != raw.r {
        violations.push(Violation {
            position: None,
            kind: ViolationKind::RMismatch { declared: raw.r, actual: aves },
        });
    }
    ValidationReport { violations }
}

/// A validated simple stochastic game. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Game {
    kinds: Vec<PositionKind>,
    successors: Vec<[usize; 2]>,
    coins: Vec<usize>,
    coin_ordinal: Vec<Option<usize>>,
    // reverse arcs in CSR form: predecessors of k are pred_arcs[pred_start[k]..pred_start[k + 1]]
    pred_start: Vec<usize>,
    pred_arcs: Vec<(usize, Slot)>,
}

#[derive(Debug, Error)]
#[error("invalid game:\n{0}")]
pub struct InvalidGame(pub ValidationReport);

impl Game {
    /// Builds a game from per-position kinds and successor pairs for
    /// positions `1..=n` (element `i` describes position `i + 1`).
    pub fn new(positions: Vec<(PositionKind, [usize; 2])>) -> Result<Game, InvalidGame> {
        let r = positions.iter().filter(|(k, _)| *k == PositionKind::Ave).count();
        let raw = RawGame {
            n: positions.len(),
            r,
            positions: positions
                .into_iter()
                .enumerate()
                .map(|(i, (kind, s))| RawPosition {
                    id: i + 1,
                    kind,
                    successors: s.to_vec(),
                    line: None,
                })
                .collect(),
        };
        Game::from_raw(&raw)
    }

    pub fn from_raw(raw: &RawGame) -> Result<Game, InvalidGame> {
        let report = validate(raw);
        if !report.is_empty() {
            return Err(InvalidGame(report));
        }
        let n = raw.n;
        let mut kinds = vec![PositionKind::Goal; n + 1];
        let mut successors = vec![[GOAL, GOAL]; n + 1];
        for p in &raw.positions {
            kinds[p.id] = p.kind;
            successors[p.id] = [p.successors[0], p.successors[1]];
        }
        Ok(Game::assemble(kinds, successors))
    }

    fn assemble(kinds: Vec<PositionKind>, successors: Vec<[usize; 2]>) -> Game {
        let n1 = kinds.len();
        let mut coins = Vec::new();
        let mut coin_ordinal = vec![None; n1];
        for (k, kind) in kinds.iter().enumerate() {
            if *kind == PositionKind::Ave {
                coin_ordinal[k] = Some(coins.len());
                coins.push(k);
            }
        }
        let mut pred_start = vec![0usize; n1 + 1];
        for s in successors.iter().skip(1) {
            pred_start[s[0] + 1] += 1;
            pred_start[s[1] + 1] += 1;
        }
        for k in 0..n1 {
            pred_start[k + 1] += pred_start[k];
        }
        let mut fill = pred_start.clone();
        let mut pred_arcs = vec![(GOAL, Slot::First); pred_start[n1]];
        for (k, s) in successors.iter().enumerate().skip(1) {
            for slot in Slot::BOTH {
                let target = s[slot.index()];
                pred_arcs[fill[target]] = (k, slot);
                fill[target] += 1;
            }
        }
        Game { kinds, successors, coins, coin_ordinal, pred_start, pred_arcs }
    }

    /// Number of non-terminal positions.
    pub fn n(&self) -> usize {
        self.kinds.len() - 1
    }

    /// Number of coin toss positions.
    pub fn r(&self) -> usize {
        self.coins.len()
    }

    pub fn kind(&self, k: usize) -> PositionKind {
        self.kinds[k]
    }

    pub fn kinds(&self) -> &[PositionKind] {
        &self.kinds
    }

    /// Ordered successor pair of a non-terminal position.
    pub fn successors(&self, k: usize) -> [usize; 2] {
        self.successors[k]
    }

    pub fn successor(&self, k: usize, slot: Slot) -> usize {
        self.successors[k][slot.index()]
    }

    /// Coin toss positions in increasing index order.
    pub fn coins(&self) -> &[usize] {
        &self.coins
    }

    /// Position of `k` within [`Game::coins`], if `k` is a coin toss position.
    pub fn coin_ordinal(&self, k: usize) -> Option<usize> {
        self.coin_ordinal[k]
    }

    /// Arcs `(source, slot)` that point at `k`, one entry per arc.
    pub fn predecessors(&self, k: usize) -> &[(usize, Slot)] {
        &self.pred_arcs[self.pred_start[k]..self.pred_start[k + 1]]
    }

    pub fn positions_of(&self, kind: PositionKind) -> impl Iterator<Item = usize> + '_ {
        self.kinds.iter().enumerate().filter(move |(_, k)| **k == kind).map(|(i, _)| i)
    }

    pub fn to_raw(&self) -> RawGame {
        RawGame {
            n: self.n(),
            r: self.r(),
            positions: (1..=self.n())
                .map(|k| RawPosition {
                    id: k,
                    kind: self.kinds[k],
                    successors: self.successors[k].to_vec(),
                    line: None,
                })
                .collect(),
        }
    }

    /// Always empty for a constructed game; kept so callers can treat raw
    /// and validated games uniformly.
    pub fn validate(&self) -> ValidationReport {
        validate(&self.to_raw())
    }

    /// Renders the game in `.ssg` format.
    pub fn to_ssg(&self) -> String {
        let mut out = format!("ssg {} {}\n", self.n(), self.r());
        for k in 1..=self.n() {
            let [a, b] = self.successors[k];
            out.push_str(&format!("{} {} {} {}\n", k, self.kinds[k], a, b));
        }
        out
    }
}

/// Maps one player's positions to an arc slot.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PositionalStrategy {
    choices: std::collections::BTreeMap<usize, Slot>,
}

impl PositionalStrategy {
    pub fn new() -> Self {
        Self::default()
    }

    /// The strategy choosing `Slot::First` everywhere for the positions of `kind`.
    pub fn first_arcs(game: &Game, kind: PositionKind) -> Self {
        PositionalStrategy {
            choices: game.positions_of(kind).map(|k| (k, Slot::First)).collect(),
        }
    }

    /// Decodes the `bits`-th strategy of the player owning `positions`:
    /// bit `i` selects the arc of `positions[i]`.
    pub fn from_bits(positions: &[usize], bits: u64) -> Self {
        PositionalStrategy {
            choices: positions
                .iter()
                .enumerate()
                .map(|(i, &k)| (k, if bits >> i & 1 == 1 { Slot::Second } else { Slot::First }))
                .collect(),
        }
    }

    pub fn set(&mut self, position: usize, slot: Slot) {
        self.choices.insert(position, slot);
    }

    pub fn get(&self, position: usize) -> Option<Slot> {
        self.choices.get(&position).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Slot)> + '_ {
        self.choices.iter().map(|(k, s)| (*k, *s))
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    /// True when the domain is exactly the positions of `kind` in `game`.
    pub fn covers(&self, game: &Game, kind: PositionKind) -> bool {
        self.choices.keys().copied().eq(game.positions_of(kind))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    DuplicateId(usize),
    IdOutOfRange(usize),
    RMismatch { declared: usize, actual: usize },
    MissingPosition(usize),
    Invalid(String),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::DuplicateId(id) => write!(f, "duplicate id {id}"),
            ParseErrorKind::IdOutOfRange(id) => write!(f, "id out of range: {id}"),
            ParseErrorKind::RMismatch { declared, actual } => {
                write!(f, "declared r = {declared} but found {actual} AVE positions")
            }
            ParseErrorKind::MissingPosition(id) => write!(f, "missing position line for id {id}"),
            ParseErrorKind::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in content.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token { text: &content[s..i], column: s + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &content[s..], column: s + 1 });
    }
    out
}

fn number(tok: &Token<'_>, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.text.parse().map_err(|_| ParseError {
        line,
        column: tok.column,
        kind: ParseErrorKind::Syntax(format!("expected {what}, found `{}`", tok.text)),
    })
}

/// Syntax-only parse: the result may still violate structural invariants.
pub fn parse_raw(text: &str) -> Result<RawGame, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut positions = Vec::new();
    let mut last_line = 0;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        let syntax = |column: usize, msg: String| ParseError {
            line: lineno,
            column,
            kind: ParseErrorKind::Syntax(msg),
        };
        match header {
            None => {
                if toks[0].text != "ssg" {
                    return Err(syntax(toks[0].column, format!("expected `ssg` header, found `{}`", toks[0].text)));
                }
                if toks.len() != 3 {
                    let col = toks.get(3).map_or(line.len() + 1, |t| t.column);
                    return Err(syntax(col, "header must be `ssg <n> <r>`".into()));
                }
                header = Some((number(&toks[1], lineno, "n")?, number(&toks[2], lineno, "r")?));
            }
            Some(_) => {
                if toks.len() != 4 {
                    let col = toks.get(4).map_or(line.len() + 1, |t| t.column);
                    return Err(syntax(col, "position line must be `<id> <MAX|MIN|AVE> <s1> <s2>`".into()));
                }
                let id = number(&toks[0], lineno, "position id")?;
                let kind = toks[1].text.parse::<PositionKind>().map_err(|_| {
                    syntax(toks[1].column, format!("expected MAX, MIN or AVE, found `{}`", toks[1].text))
                })?;
                let s1 = number(&toks[2], lineno, "successor")?;
                let s2 = number(&toks[3], lineno, "successor")?;
                positions.push(RawPosition { id, kind, successors: vec![s1, s2], line: Some(lineno) });
            }
        }
    }
    let (n, r) = header.ok_or(ParseError {
        line: last_line.max(1),
        column: 1,
        kind: ParseErrorKind::Syntax("missing `ssg <n> <r>` header".into()),
    })?;
    Ok(RawGame { n, r, positions })
}

/// Parses `.ssg` text into a validated game.
pub fn parse_game(text: &str) -> Result<Game, ParseError> {
    let raw = parse_raw(text)?;
    let report = validate(&raw);
    if let Some(v) = report.violations.first() {
        let line_of = |id: Option<usize>| {
            id.and_then(|id| raw.positions.iter().find(|p| p.id == id))
                .and_then(|p| p.line)
                .unwrap_or(1)
        };
        let (line, kind) = match &v.kind {
            ViolationKind::DuplicateId => {
                // report the second occurrence
                let id = v.position.unwrap_or(0);
                let line = raw
                    .positions
                    .iter()
                    .filter(|p| p.id == id)
                    .nth(1)
                    .and_then(|p| p.line)
                    .unwrap_or(1);
                (line, ParseErrorKind::DuplicateId(id))
            }
            ViolationKind::IdOutOfRange => {
                (line_of(v.position), ParseErrorKind::IdOutOfRange(v.position.unwrap_or(0)))
            }
            ViolationKind::SuccessorOutOfRange { successor } => {
                (line_of(v.position), ParseErrorKind::IdOutOfRange(*successor))
            }
            ViolationKind::MissingPosition => {
                (text.lines().count().max(1), ParseErrorKind::MissingPosition(v.position.unwrap_or(0)))
            }
            ViolationKind::RMismatch { declared, actual } => {
                (1, ParseErrorKind::RMismatch { declared: *declared, actual: *actual })
            }
            _ => (line_of(v.position), ParseErrorKind::Invalid(v.to_string())),
        };
        return Err(ParseError { line, column: 1, kind });
    }
    Ok(Game::from_raw(&raw).expect("validated above"))
}

impl FromStr for Game {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Game, ParseError> {
        parse_game(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GAME_B: &str = "ssg 2 1\n1 AVE 0 2\n2 MIN 2 2\n";

    #[test]
    fn parses_minimal_game() {
        let g = parse_game(GAME_B).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.r(), 1);
        assert_eq!(g.kind(1), PositionKind::Ave);
        assert_eq!(g.successors(1), [0, 2]);
        assert_eq!(g.successors(2), [2, 2]);
        assert!(g.validate().is_empty());
    }

    #[test]
    fn parses_degenerate_single_coin() {
        let g = parse_game("ssg 1 1\n1 AVE 0 0").unwrap();
        assert_eq!((g.n(), g.r()), (1, 1));
        assert_eq!(g.predecessors(GOAL).len(), 2);
    }

    #[test]
    fn parses_value_one_example_with_comments() {
        let text = "# five positions, three coins\nssg 5 3\n\
                    1 MIN 4 5\n2 AVE 5 4 # coin\n3 AVE 0 3\n\n4 AVE 4 5\n5 MIN 0 3\n";
        let g = parse_game(text).unwrap();
        assert_eq!((g.n(), g.r()), (5, 3));
        assert_eq!(g.coins(), &[2, 3, 4]);
    }

    #[test]
    fn serialize_roundtrip() {
        let g = parse_game(GAME_B).unwrap();
        assert_eq!(g.to_ssg(), GAME_B);
        assert_eq!(parse_game(&g.to_ssg()).unwrap(), g);
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = parse_game("ssg 2 1\n1 AVE 0 2\n2 MXN 2 2\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 3));
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));

        let err = parse_game("ssg 2 x\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 7));

        let err = parse_game("# nothing\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn semantic_parse_errors() {
        let err = parse_game("ssg 2 1\n1 AVE 0 2\n1 MIN 2 2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateId(1));
        assert_eq!(err.line, 3);

        let err = parse_game("ssg 2 1\n1 AVE 0 3\n2 MIN 2 2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::IdOutOfRange(3));
        assert_eq!(err.line, 2);

        let err = parse_game("ssg 2 1\n3 AVE 0 1\n2 MIN 2 2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::IdOutOfRange(3));

        let err = parse_game("ssg 2 2\n1 AVE 0 2\n2 MIN 2 2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::RMismatch { declared: 2, actual: 1 });

        let err = parse_game("ssg 3 1\n1 AVE 0 2\n2 MIN 2 2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingPosition(3));
    }

    #[test]
    fn validate_reports_violations() {
        let mut raw = parse_game(GAME_B).unwrap().to_raw();
        raw.positions[1].successors[0] = 3;
        let report = validate(&raw);
        assert_eq!(
            report.violations,
            vec![Violation {
                position: Some(2),
                kind: ViolationKind::SuccessorOutOfRange { successor: 3 }
            }]
        );
        assert!(report.to_string().contains("successor out of range"));

        let raw = RawGame {
            n: 3,
            r: 2,
            positions: (1..=3)
                .map(|id| RawPosition { id, kind: PositionKind::Ave, successors: vec![0, 0], line: None })
                .collect(),
        };
        let report = validate(&raw);
        assert_eq!(report.violations.len(), 1);
        assert!(report.to_string().contains("r mismatch"));
    }

    #[test]
    fn validate_reports_arity_and_goal_kind() {
        let raw = RawGame {
            n: 2,
            r: 0,
            positions: vec![
                RawPosition { id: 1, kind: PositionKind::Goal, successors: vec![0, 0], line: None },
                RawPosition { id: 2, kind: PositionKind::Max, successors: vec![0], line: None },
            ],
        };
        let kinds: Vec<_> = validate(&raw).violations.into_iter().map(|v| v.kind).collect();
        assert_eq!(kinds, vec![ViolationKind::GoalKind, ViolationKind::WrongArity { found: 1 }]);
        assert!(Game::from_raw(&raw).is_err());
    }

    #[test]
    fn predecessors_list_each_arc() {
        let g = Game::new(vec![
            (PositionKind::Min, [0, 0]),
            (PositionKind::Max, [1, 2]),
        ])
        .unwrap();
        assert_eq!(g.predecessors(GOAL), &[(1, Slot::First), (1, Slot::Second)]);
        assert_eq!(g.predecessors(1), &[(2, Slot::First)]);
        assert_eq!(g.predecessors(2), &[(2, Slot::Second)]);
    }

    #[test]
    fn strategy_bits_cover_positions() {
        let g = parse_game("ssg 3 0\n1 MAX 0 1\n2 MIN 0 1\n3 MAX 2 0\n").unwrap();
        let maxes: Vec<_> = g.positions_of(PositionKind::Max).collect();
        let s = PositionalStrategy::from_bits(&maxes, 0b10);
        assert_eq!(s.get(1), Some(Slot::First));
        assert_eq!(s.get(3), Some(Slot::Second));
        assert!(s.covers(&g, PositionKind::Max));
        assert!(!s.covers(&g, PositionKind::Min));
    }
}
