//! Ground truth that shares no code path with the iterative solver:
//! exhaustive positional-strategy enumeration with exact absorption
//! probabilities, and the closed form for the extremal family.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::game::{Game, PositionKind, PositionalStrategy, GOAL};
use crate::numeric::Rational;

/// Default limit on `|V_1| + |V_2|` for [`enumerate_values`].
pub const DEFAULT_STRATEGY_BITS: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle needs {bits} strategy bits, cap is {cap}")]
    CapExceeded { bits: usize, cap: usize },
}

/// Probability of reaching GOAL from each position under a fixed pair of
/// positional strategies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyPairEvaluation {
    pub values: Vec<Rational>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Target {
    Unresolved,
    Zero,
    Goal,
    Coin(usize),
}

/// Exact absorption probabilities of the Markov chain induced by `max` and
/// `min`. Panics if a strategy leaves a position of its player uncovered.
pub fn eval_strategy_pair(
    game: &Game,
    max: &PositionalStrategy,
    min: &PositionalStrategy,
) -> StrategyPairEvaluation {
    let n1 = game.n() + 1;
    let choice = |k: usize| -> usize {
        let slot = match game.kind(k) {
            PositionKind::Max => max.get(k),
            PositionKind::Min => min.get(k),
            _ => unreachable!(),
        };
        game.successor(k, slot.unwrap_or_else(|| panic!("strategy does not cover position {k}")))
    };

    // Positions that reach GOAL in the induced chain, by backward search.
    let mut reaches = vec![false; n1];
    reaches[GOAL] = true;
    let mut stack = vec![GOAL];
    while let Some(k) = stack.pop() {
        for &(pred, slot) in game.predecessors(k) {
            if reaches[pred] {
                continue;
            }
            let uses_arc = match game.kind(pred) {
                PositionKind::Ave => true,
                _ => choice(pred) == k && game.successor(pred, slot) == k,
            };
            if uses_arc {
                reaches[pred] = true;
                stack.push(pred);
            }
        }
    }

    // Collapse runs of player positions onto the coin or GOAL they lead to.
    let mut target = vec![Target::Unresolved; n1];
    target[GOAL] = Target::Goal;
    for k in 1..n1 {
        if !reaches[k] {
            target[k] = Target::Zero;
        } else if let Some(c) = game.coin_ordinal(k) {
            target[k] = Target::Coin(c);
        }
    }
    let mut path = Vec::new();
    for k in 1..n1 {
        let mut cur = k;
        while target[cur] == Target::Unresolved {
            path.push(cur);
            cur = choice(cur);
        }
        let t = target[cur];
        for p in path.drain(..) {
            target[p] = t;
        }
    }

    // 2 u_c - sum over arcs of u_succ = 0, with GOAL contributing 1.
    let live: Vec<usize> = game.coins().iter().copied().filter(|&c| reaches[c]).collect();
    let mut row_of = vec![usize::MAX; game.r()];
    for (i, &c) in live.iter().enumerate() {
        row_of[game.coin_ordinal(c).unwrap()] = i;
    }
    let m = live.len();
    let mut a = vec![vec![Rational::zero(); m]; m];
    let mut b = vec![Rational::zero(); m];
    for (i, &c) in live.iter().enumerate() {
        a[i][i] += Rational::from_integer(2.into());
        for s in game.successors(c) {
            match target[s] {
                Target::Goal => b[i] += Rational::one(),
                Target::Coin(o) => a[i][row_of[o]] -= Rational::one(),
                Target::Zero => {}
                Target::Unresolved => unreachable!(),
            }
        }
    }
    let coin_values = solve_linear(a, b).expect("pruned absorption system is nonsingular");

    let values = target
        .iter()
        .map(|t| match t {
            Target::Goal => Rational::one(),
            Target::Zero => Rational::zero(),
            Target::Coin(o) => coin_values[row_of[*o]].clone(),
            Target::Unresolved => unreachable!(),
        })
        .collect();
    StrategyPairEvaluation { values }
}

/// Gaussian elimination over the rationals. `None` if `a` is singular.
pub fn solve_linear(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let m = b.len();
    for col in 0..m {
        let pivot = (col..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for j in col..m {
            a[col][j] *= &inv;
        }
        b[col] *= &inv;
        for row in 0..m {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let f = a[row][col].clone();
            for j in col..m {
                let delta = &f * &a[col][j];
                a[row][j] -= delta;
            }
            let delta = &f * &b[col];
            b[row] -= delta;
        }
    }
    Some(b)
}

/// Values of all positions as max over Max strategies of min over Min
/// strategies of the reach probability, by brute force.
pub fn enumerate_values(game: &Game, cap_bits: usize) -> Result<Vec<Rational>, OracleError> {
    let maxes: Vec<usize> = game.positions_of(PositionKind::Max).collect();
    let mins: Vec<usize> = game.positions_of(PositionKind::Min).collect();
    let bits = maxes.len() + mins.len();
    if bits > cap_bits || bits >= 64 {
        return Err(OracleError::CapExceeded { bits, cap: cap_bits });
    }
    let mut best: Option<Vec<Rational>> = None;
    for xb in 0..1u64 << maxes.len() {
        let x = PositionalStrategy::from_bits(&maxes, xb);
        let mut worst: Option<Vec<Rational>> = None;
        for yb in 0..1u64 << mins.len() {
            let y = PositionalStrategy::from_bits(&mins, yb);
            let u = eval_strategy_pair(game, &x, &y).values;
            worst = Some(match worst {
                None => u,
                Some(w) => w.into_iter().zip(u).map(|(a, b)| a.min(b)).collect(),
            });
        }
        let worst = worst.expect("at least one Min strategy");
        best = Some(match best {
            None => worst,
            Some(bst) => bst.into_iter().zip(worst).map(|(a, b)| a.max(b)).collect(),
        });
    }
    Ok(best.expect("at least one Max strategy"))
}

/// r-step Fibonacci number: `F_m = F_{m-1} + ... + F_{m-r}` with
/// `F_m = 0` for `m <= 0` and `F_1 = F_2 = 1`.
pub fn fib_r_step(m: i64, r: usize) -> BigUint {
    assert!(r >= 1, "r must be positive");
    if m <= 0 {
        return BigUint::zero();
    }
    if m <= 2 {
        return BigUint::one();
    }
    // window holds F_{i-r+1..=i}, oldest first, zero-padded for indices <= 0
    let mut window: std::collections::VecDeque<BigUint> =
        std::iter::repeat_with(BigUint::zero).take(r).collect();
    let mut sum = BigUint::zero();
    for i in 1..=m {
        let next = if i <= 2 { BigUint::one() } else { sum.clone() };
        sum += &next;
        window.push_back(next);
        sum -= window.pop_front().unwrap();
    }
    window.pop_back().unwrap()
}

/// Probability that `t` fair coin tosses contain a run of `r` tails:
/// `1 - F_{t+2} / 2^t`.
pub fn tails_run_prob(t: u32, r: usize) -> Rational {
    let f = BigInt::from(fib_r_step(i64::from(t) + 2, r));
    Rational::one() - Rational::new(f, BigInt::one() << t as usize)
}
