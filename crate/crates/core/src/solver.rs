//! Modified value iteration and the exact solving pipeline.
//!
//! Each iteration solves the deterministic game obtained by freezing the coin
//! toss positions at their current values, then replaces every coin value by
//! the average of its two successors. After `t` such iterations the vector
//! holds the values of the timed game in which Max loses on meeting the
//! `(t+1)`-st coin toss. [`solve`] runs a fixed number of iterations with
//! values rounded down to `7 * max(r, 6)` bits, then snaps every value to
//! the smallest fraction above it whose denominator is at most `4^r`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::dgg::{solve_dgg, DggValue, DggView, Retrograde};
use crate::game::{Game, PositionKind, PositionalStrategy, Slot, GOAL};
use crate::numeric::{min_rational_geq, Dyadic, Fraction, Rational};
use crate::oracle::eval_strategy_pair;

/// Largest coin count [`solve`] accepts unless configured otherwise.
pub const DEFAULT_R_CAP: usize = 24;

/// Which convergence bound sets the number of iterations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BudgetMode {
    /// `2 (5r' + 1) ln 2 * 2^r'`, from the extremal game analysis.
    #[default]
    Extremal,
    /// `5 ln 2 * r'^2 * 2^r'`, from the elementary bound.
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IterationBudget {
    pub mode: BudgetMode,
    /// `max(r, 6)`.
    pub r_eff: usize,
    pub iterations: u64,
}

/// Effective coin count used for precision and budget.
pub fn effective_r(r: usize) -> usize {
    r.max(6)
}

pub fn iteration_budget(r: usize, mode: BudgetMode) -> IterationBudget {
    let r_eff = effective_r(r);
    let rf = r_eff as f64;
    let pow = 2f64.powi(r_eff as i32);
    let ln2 = std::f64::consts::LN_2;
    let exact = match mode {
        BudgetMode::Extremal => 2.0 * (5.0 * rf + 1.0) * ln2 * pow,
        BudgetMode::Direct => 5.0 * ln2 * rf * rf * pow,
    };
    IterationBudget { mode, r_eff, iterations: (exact.ceil() as u64).max(1) }
}

/// Working precision in bits for a game with `r` coin toss positions.
pub fn default_precision(r: usize) -> u32 {
    7 * effective_r(r) as u32
}

/// How coin averages are formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    /// Round every average down to this many fractional bits.
    Floor(u32),
    /// Keep averages exact; precision grows one bit per iteration.
    Exact,
}

/// One value per position `0..=n`, all at a common precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueVector {
    values: Vec<Dyadic>,
    rounding: Rounding,
}

impl ValueVector {
    /// `(1, 0, ..., 0)`.
    pub fn initial(game: &Game, rounding: Rounding) -> Self {
        let p = match rounding {
            Rounding::Floor(bits) => bits,
            Rounding::Exact => 0,
        };
        let mut values = vec![Dyadic::zero(p); game.n() + 1];
        values[GOAL] = Dyadic::one(p);
        ValueVector { values, rounding }
    }

    pub fn get(&self, k: usize) -> &Dyadic {
        &self.values[k]
    }

    pub fn values(&self) -> &[Dyadic] {
        &self.values
    }

    pub fn rounding(&self) -> Rounding {
        self.rounding
    }

    pub fn precision(&self) -> u32 {
        self.values[GOAL].precision()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.values.iter().map(Dyadic::to_rational).collect()
    }

    fn coin_values(&self, game: &Game) -> Vec<Dyadic> {
        game.coins().iter().map(|&c| self.values[c].clone()).collect()
    }
}

fn average(a: &Dyadic, b: &Dyadic, rounding: Rounding) -> Dyadic {
    match rounding {
        Rounding::Floor(_) => Dyadic::avg_floor(a, b),
        Rounding::Exact => Dyadic::exact_avg(a, b),
    }
    .expect("value vector entries share one precision")
}

fn coin_update(game: &Game, dgg: &[DggValue], coins: &[Dyadic], rounding: Rounding) -> Vec<Dyadic> {
    let p = coins.first().map_or(0, Dyadic::precision);
    let (zero, one) = (Dyadic::zero(p), Dyadic::one(p));
    game.coins()
        .iter()
        .map(|&c| {
            let [s1, s2] = game.successors(c);
            let a = dgg[s1].resolve(coins, &zero, &one);
            let b = dgg[s2].resolve(coins, &zero, &one);
            average(a, b, rounding)
        })
        .collect()
}

fn full_vector(dgg: &[DggValue], coins: &[Dyadic], precision: u32, rounding: Rounding) -> ValueVector {
    let (zero, one) = (Dyadic::zero(precision), Dyadic::one(precision));
    ValueVector {
        values: dgg.iter().map(|v| v.resolve(coins, &zero, &one).clone()).collect(),
        rounding,
    }
}

/// One loop body: solve the frozen deterministic game, then average every
/// coin over its successors' values. Player entries keep their DGG values;
/// in exact mode all entries move up one bit of precision.
pub fn mvi_step(game: &Game, v: &ValueVector) -> ValueVector {
    let coins = v.coin_values(game);
    let dgg = solve_dgg(DggView::new(game, &coins));
    let updated = coin_update(game, dgg.values(), &coins, v.rounding);
    let p = match v.rounding {
        Rounding::Floor(_) => v.precision(),
        Rounding::Exact => v.precision() + 1,
    };
    let mut out = full_vector(dgg.values(), &coins, v.precision(), v.rounding);
    for value in out.values.iter_mut() {
        *value = value.widen(p);
    }
    for (&c, value) in game.coins().iter().zip(updated) {
        out.values[c] = value;
    }
    out
}

/// Iterator over the timed values `v^0, v^1, ...`, where `v^t` is the vector
/// right after the deterministic solve of the `(t+1)`-st loop body.
pub struct TimedValues<'g> {
    game: &'g Game,
    coins: Vec<Dyadic>,
    precision: u32,
    rounding: Rounding,
    retro: Retrograde,
    dgg: Vec<DggValue>,
}

impl<'g> TimedValues<'g> {
    pub fn new(game: &'g Game, rounding: Rounding) -> Self {
        let start = ValueVector::initial(game, rounding);
        TimedValues {
            game,
            coins: start.coin_values(game),
            precision: start.precision(),
            rounding,
            retro: Retrograde::new(game),
            dgg: vec![DggValue::Zero; game.n() + 1],
        }
    }
}

impl Iterator for TimedValues<'_> {
    type Item = ValueVector;

    fn next(&mut self) -> Option<ValueVector> {
        self.retro.solve_into(DggView::new(self.game, &self.coins), &mut self.dgg, None, None);
        let out = full_vector(&self.dgg, &self.coins, self.precision, self.rounding);
        self.coins = coin_update(self.game, &self.dgg, &self.coins, self.rounding);
        if self.rounding == Rounding::Exact {
            self.precision += 1;
        }
        Some(out)
    }
}

/// `val(G^t)` in exact mode, or the rounded iterate in floor mode.
pub fn timed_values(game: &Game, t: usize, rounding: Rounding) -> ValueVector {
    TimedValues::new(game, rounding).nth(t).expect("infinite iterator")
}

/// One synchronous backup of classical value iteration, exact.
pub fn unmodified_vi_step(game: &Game, v: &ValueVector) -> ValueVector {
    let p = v.precision() + 1;
    let values = (0..=game.n())
        .map(|k| {
            if k == GOAL {
                return Dyadic::one(p);
            }
            let [a, b] = game.successors(k).map(|s| v.get(s));
            match game.kind(k) {
                PositionKind::Max => a.max(b).widen(p),
                PositionKind::Min => a.min(b).widen(p),
                PositionKind::Ave => Dyadic::exact_avg(a, b).expect("common precision"),
                PositionKind::Goal => unreachable!(),
            }
        })
        .collect();
    ValueVector { values, rounding: Rounding::Exact }
}

/// Iterator over `val(Ḡ^0), val(Ḡ^1), ...`, the game in which Max loses
/// once `t + 1` positions have been visited.
pub fn unmodified_values(game: &Game) -> impl Iterator<Item = ValueVector> + '_ {
    std::iter::successors(Some(ValueVector::initial(game, Rounding::Exact)), move |v| {
        Some(unmodified_vi_step(game, v))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: BudgetMode,
    /// Overrides the `7 * max(r, 6)` working precision.
    pub precision_bits: Option<u32>,
    pub r_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: BudgetMode::Extremal, precision_bits: None, r_cap: DEFAULT_R_CAP }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("r exceeds cap: {r} coin toss positions, cap is {cap}")]
    RCapExceeded { r: usize, cap: usize },
    #[error("strategy verification failed at position {position}")]
    StrategyVerification { position: usize },
}

impl SolveError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, SolveError::RCapExceeded { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub values: Vec<Rational>,
    pub max_strategy: PositionalStrategy,
    pub min_strategy: PositionalStrategy,
    pub iterations_run: u64,
    pub budget: IterationBudget,
    pub precision: u32,
    /// Value classes of the last deterministic solve, highest first.
    pub dgg_classes: Vec<(Dyadic, usize)>,
}

impl Solution {
    /// `value <id> <num>/<den>` lines, optionally followed by strategy lines.
    pub fn to_text(&self, with_strategies: bool) -> String {
        let mut out = write_values(&self.values);
        if with_strategies {
            for (who, s) in [("max", &self.max_strategy), ("min", &self.min_strategy)] {
                for (k, slot) in s.iter() {
                    out.push_str(&format!("strategy {who} {k} {}\n", slot.index()));
                }
            }
        }
        out
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(true))
    }
}

pub fn write_values(values: &[Rational]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(k, v)| format!("value {k} {}\n", Fraction(v)))
        .collect()
}

/// Solves the game exactly.
pub fn solve(game: &Game, options: &SolveOptions) -> Result<Solution, SolveError> {
    let r = game.r();
    if r > options.r_cap {
        return Err(SolveError::RCapExceeded { r, cap: options.r_cap });
    }
    let budget = iteration_budget(r, options.budget);
    let precision = options.precision_bits.unwrap_or_else(|| default_precision(r));
    let rounding = Rounding::Floor(precision);
    let iterations = if r == 0 { 0 } else { budget.iterations };

    let mut retro = Retrograde::new(game);
    let mut dgg = vec![DggValue::Zero; game.n() + 1];
    let mut coins = vec![Dyadic::zero(precision); r];
    for _ in 0..iterations {
        retro.solve_into(DggView::new(game, &coins), &mut dgg, None, None);
        coins = coin_update(game, &dgg, &coins, rounding);
    }
    let classes = retro.solve_into(DggView::new(game, &coins), &mut dgg, None, None);

    let bound = BigUint::one() << (2 * r);
    let mut memo: BTreeMap<&Dyadic, Rational> = BTreeMap::new();
    let coin_exact: Vec<Rational> = coins
        .iter()
        .map(|v| memo.entry(v).or_insert_with(|| min_rational_geq(v, &bound)).clone())
        .collect();
    let values: Vec<Rational> = dgg
        .iter()
        .map(|v| v.resolve(&coin_exact, &Rational::zero(), &Rational::one()).clone())
        .collect();

    let (zero, one) = (Dyadic::zero(precision), Dyadic::one(precision));
    let dgg_classes = classes
        .iter()
        .map(|(v, size)| (v.resolve(&coins, &zero, &one).clone(), *size))
        .collect();

    let (max_strategy, min_strategy) = extract_strategies(game, &values)?;
    Ok(Solution {
        values,
        max_strategy,
        min_strategy,
        iterations_run: iterations,
        budget,
        precision,
        dgg_classes,
    })
}

/// Optimal positional strategies from the exact values. Min picks the
/// lowest slot among value-minimising arcs. Max must also make progress:
/// within each class of equal positive value, positions are added backwards
/// from the class exits (GOAL, and coins whose successors differ in value),
/// and each Max position takes the arc through which it was added. The pair
/// is checked by exact evaluation before being returned.
pub fn extract_strategies(
    game: &Game,
    values: &[Rational],
) -> Result<(PositionalStrategy, PositionalStrategy), SolveError> {
    let n1 = game.n() + 1;
    let mut max_choice = vec![Slot::First; n1];
    // value-preserving arcs a Min position still has outside the attractor
    let mut pending = vec![0u8; n1];
    let mut reached = vec![false; n1];
    let mut queue = Vec::new();
    for k in 0..n1 {
        if values[k].is_zero() {
            continue;
        }
        let [a, b] = game.successors(k);
        match game.kind(k) {
            PositionKind::Goal => reached[k] = true,
            PositionKind::Ave => reached[k] = values[a] != values[b],
            PositionKind::Min => {
                pending[k] = u8::from(values[a] == values[k]) + u8::from(values[b] == values[k]);
            }
            PositionKind::Max => {}
        }
        if reached[k] {
            queue.push(k);
        }
    }
    while let Some(x) = queue.pop() {
        for &(p, slot) in game.predecessors(x) {
            if reached[p] || values[p] != values[x] {
                continue;
            }
            match game.kind(p) {
                PositionKind::Max => {
                    max_choice[p] = slot;
                    reached[p] = true;
                }
                PositionKind::Ave => reached[p] = true,
                PositionKind::Min => {
                    pending[p] -= 1;
                    reached[p] = pending[p] == 0;
                }
                PositionKind::Goal => {}
            }
            if reached[p] {
                queue.push(p);
            }
        }
    }

    let mut max = PositionalStrategy::new();
    for k in game.positions_of(PositionKind::Max) {
        max.set(k, max_choice[k]);
    }
    let mut min = PositionalStrategy::new();
    for k in game.positions_of(PositionKind::Min) {
        let [a, b] = game.successors(k);
        min.set(k, if values[b] < values[a] { Slot::Second } else { Slot::First });
    }

    let achieved = eval_strategy_pair(game, &max, &min).values;
    if let Some(position) = (0..values.len()).find(|&k| achieved[k] != values[k]) {
        return Err(SolveError::StrategyVerification { position });
    }
    Ok((max, min))
}

/// True when `values` satisfies every local optimality equation exactly
/// and GOAL has value 1.
pub fn satisfies_bellman(game: &Game, values: &[Rational]) -> bool {
    if values.len() != game.n() + 1 || !values[GOAL].is_one() {
        return false;
    }
    (1..=game.n()).all(|k| {
        let [a, b] = game.successors(k).map(|s| &values[s]);
        let expected = match game.kind(k) {
            PositionKind::Max => a.max(b).clone(),
            PositionKind::Min => a.min(b).clone(),
            PositionKind::Ave => (a + b) / Rational::from_integer(BigInt::from(2)),
            PositionKind::Goal => return false,
        };
        values[k] == expected
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::parse_game;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn game_b() -> Game {
        parse_game("ssg 2 1\n1 AVE 0 2\n2 MIN 2 2\n").unwrap()
    }

    #[test]
    fn budget_formulas() {
        let b = iteration_budget(6, BudgetMode::Extremal);
        assert_eq!((b.iterations, b.r_eff), (2751, 6));
        assert_eq!(iteration_budget(6, BudgetMode::Direct).iterations, 7986);
        for r in 0..6 {
            assert_eq!(iteration_budget(r, BudgetMode::Extremal).iterations, 2751);
            assert_eq!(iteration_budget(r, BudgetMode::Direct).iterations, 7986);
        }
        // 2 * 36 * ln2 * 128 = 6388.2...
        assert_eq!(iteration_budget(7, BudgetMode::Extremal).iterations, 6389);
        assert_eq!(default_precision(3), 42);
        assert_eq!(default_precision(10), 70);
    }

    #[test]
    fn mvi_step_on_game_b() {
        let g = game_b();
        let v0 = ValueVector::initial(&g, Rounding::Floor(42));
        let v1 = mvi_step(&g, &v0);
        assert_eq!(v1.to_rationals(), vec![q(1, 1), q(1, 2), q(0, 1)]);
        let v2 = mvi_step(&g, &v1);
        assert_eq!(v2.to_rationals(), v1.to_rationals());
    }

    #[test]
    fn all_coins_at_one_is_fixed() {
        let g = Game::new(vec![
            (PositionKind::Ave, [2, 3]),
            (PositionKind::Min, [1, 3]),
            (PositionKind::Ave, [3, 1]),
        ])
        .unwrap();
        let mut v = ValueVector::initial(&g, Rounding::Floor(10));
        for &c in g.coins() {
            v.values[c] = Dyadic::one(10);
        }
        let next = mvi_step(&g, &v);
        assert!(next.values().iter().all(Dyadic::is_one));
    }

    #[test]
    fn exact_step_on_two_coin_extremal() {
        // E_{2,2}: coin 1 -> {GOAL, 2}, coin 2 -> {1, 2}
        let g = Game::new(vec![(PositionKind::Ave, [0, 2]), (PositionKind::Ave, [1, 2])]).unwrap();
        let mut v = ValueVector::initial(&g, Rounding::Exact);
        v = mvi_step(&g, &v);
        v = mvi_step(&g, &v);
        assert_eq!(v.precision(), 2);
        assert_eq!(v.get(2).to_rational(), q(1, 4));
        assert_eq!(timed_values(&g, 2, Rounding::Exact).get(2).to_rational(), q(1, 4));
    }

    #[test]
    fn timed_values_game_b() {
        let g = game_b();
        assert_eq!(timed_values(&g, 0, Rounding::Exact).to_rationals(), vec![q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(timed_values(&g, 1, Rounding::Exact).to_rationals(), vec![q(1, 1), q(1, 2), q(0, 1)]);
    }

    #[test]
    fn timed_values_extremal_five_three() {
        // E_{5,3}: coin 3 after five ticks; three tails in a row within five
        // tosses happens in 8 of 32 sequences.
        let g = Game::new(vec![
            (PositionKind::Ave, [0, 3]),
            (PositionKind::Ave, [1, 3]),
            (PositionKind::Ave, [2, 3]),
            (PositionKind::Min, [0, 0]),
            (PositionKind::Min, [0, 0]),
        ])
        .unwrap();
        assert_eq!(timed_values(&g, 5, Rounding::Exact).get(3).to_rational(), q(1, 4));
    }

    #[test]
    fn unmodified_step_game_b() {
        let g = game_b();
        let v1 = unmodified_vi_step(&g, &ValueVector::initial(&g, Rounding::Exact));
        assert_eq!(v1.to_rationals(), vec![q(1, 1), q(1, 2), q(0, 1)]);
    }

    #[test]
    fn unmodified_chain_propagates_one_per_step() {
        let g = Game::new(vec![
            (PositionKind::Min, [0, 0]),
            (PositionKind::Min, [1, 1]),
            (PositionKind::Min, [2, 2]),
        ])
        .unwrap();
        for (t, v) in unmodified_values(&g).take(5).enumerate() {
            for k in 1..=3 {
                assert_eq!(v.get(k).is_one(), k <= t, "t={t} k={k}");
            }
        }
    }

    #[test]
    fn solve_game_b() {
        let s = solve(&game_b(), &SolveOptions::default()).unwrap();
        assert_eq!(s.values, vec![q(1, 1), q(1, 2), q(0, 1)]);
        assert_eq!(s.iterations_run, 2751);
        assert!(s.max_strategy.is_empty());
        assert_eq!(s.min_strategy.get(2), Some(Slot::First));
        assert_eq!(s.to_text(false), "value 0 1/1\nvalue 1 1/2\nvalue 2 0/1\n");
        assert_eq!(s.to_text(true), "value 0 1/1\nvalue 1 1/2\nvalue 2 0/1\nstrategy min 2 0\n");
    }

    #[test]
    fn solve_without_coins() {
        let g = Game::new(vec![(PositionKind::Max, [2, 0]), (PositionKind::Min, [2, 1])]).unwrap();
        let s = solve(&g, &SolveOptions::default()).unwrap();
        assert_eq!(s.iterations_run, 0);
        // Min at 2 keeps play on its self-loop
        assert_eq!(s.values, vec![q(1, 1), q(1, 1), q(0, 1)]);
        assert_eq!(s.max_strategy.get(1), Some(Slot::Second));
        assert_eq!(s.min_strategy.get(2), Some(Slot::First));
    }

    #[test]
    fn max_picks_goal_arc() {
        let g = Game::new(vec![(PositionKind::Max, [0, 2]), (PositionKind::Min, [2, 2])]).unwrap();
        let s = solve(&g, &SolveOptions::default()).unwrap();
        assert_eq!(s.max_strategy.get(1), Some(Slot::First));
        let g = Game::new(vec![(PositionKind::Max, [2, 0]), (PositionKind::Min, [2, 2])]).unwrap();
        let s = solve(&g, &SolveOptions::default()).unwrap();
        assert_eq!(s.max_strategy.get(1), Some(Slot::Second));
    }

    #[test]
    fn max_witness_avoids_value_preserving_cycle() {
        // Max 1 and Max 2 can bounce between each other forever; both have
        // value 1 only through 2's GOAL arc.
        let g = Game::new(vec![(PositionKind::Max, [2, 2]), (PositionKind::Max, [1, 0])]).unwrap();
        let s = solve(&g, &SolveOptions::default()).unwrap();
        assert_eq!(s.max_strategy.get(2), Some(Slot::Second));
        // value-preserving choice at 2 would be slot 0 (to 1, also value 1)
        let mut bad = s.max_strategy.clone();
        bad.set(2, Slot::First);
        assert!(eval_strategy_pair(&g, &bad, &s.min_strategy).values[1].is_zero());
    }

    #[test]
    fn max_leaves_coin_cycles_of_value_one() {
        // 10 -> 5 keeps value 1 but closes the loop 5 -> 1 -> 3 -> 10
        let g = parse_game(
            "ssg 11 4\n1 MAX 3 10\n2 MAX 6 8\n3 MAX 10 10\n4 AVE 1 9\n5 AVE 1 6\n6 MIN 10 2\n\
             7 MIN 9 4\n8 AVE 5 0\n9 MAX 6 4\n10 MAX 11 5\n11 AVE 0 5\n",
        )
        .unwrap();
        let s = solve(&g, &SolveOptions::default()).unwrap();
        assert!(s.values.iter().all(|v| v.is_one()));
        assert_eq!(s.max_strategy.get(10), Some(Slot::First));
    }

    #[test]
    fn cap_is_resource_error() {
        let g = Game::new(vec![(PositionKind::Ave, [0, 0]); 3]).unwrap();
        let opts = SolveOptions { r_cap: 2, ..SolveOptions::default() };
        let err = solve(&g, &opts).unwrap_err();
        assert_eq!(err, SolveError::RCapExceeded { r: 3, cap: 2 });
        assert!(err.is_resource_limit());
        assert!(err.to_string().contains("r exceeds cap"));
    }

    #[test]
    fn strategy_verification_rejects_wrong_values() {
        let err = extract_strategies(&game_b(), &[q(1, 1), q(1, 3), q(0, 1)]).unwrap_err();
        assert!(matches!(err, SolveError::StrategyVerification { .. }));
    }

    #[test]
    fn bellman_check() {
        let g = game_b();
        assert!(satisfies_bellman(&g, &[q(1, 1), q(1, 2), q(0, 1)]));
        assert!(!satisfies_bellman(&g, &[q(1, 1), q(1, 3), q(0, 1)]));
        assert!(!satisfies_bellman(&g, &[q(1, 2), q(1, 4), q(0, 1)]));
    }
}
