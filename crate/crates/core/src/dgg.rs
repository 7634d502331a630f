//! Deterministic graphical games by retrograde analysis.
//!
//! Every coin toss position is frozen into a terminal carrying a payoff in
//! `[0, 1]`; GOAL is a terminal with payoff 1 and infinite play pays 0. The
//! distinct positive payoffs are processed in descending order. For each
//! value class a backward search from the class's terminals assigns
//! * a Max position as soon as one successor is assigned, and
//! * a Min position once both arcs lead to assigned positions,
//!
//! tracked by a per-position counter of unassigned out-arcs. Whatever is
//! left unassigned gets value 0. The total work is one sort of at most `r`
//! payoffs plus one pass over the arcs.

use std::collections::VecDeque;

use crate::game::{Game, PositionKind, Slot, GOAL};
use crate::numeric::{Dyadic, Rational};

use num_traits::{One, Zero};

/// Payoff values the retrograde solver can order.
pub trait Payoff: Ord {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
}

impl Payoff for Dyadic {
    fn is_zero(&self) -> bool {
        Dyadic::is_zero(self)
    }

    fn is_one(&self) -> bool {
        Dyadic::is_one(self)
    }
}

impl Payoff for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// A game whose coin toss positions are replaced by payoff terminals.
/// `coin_payoffs[i]` belongs to `game.coins()[i]`.
#[derive(Clone, Copy, Debug)]
pub struct DggView<'a, T> {
    pub game: &'a Game,
    pub coin_payoffs: &'a [T],
}

impl<'a, T: Payoff> DggView<'a, T> {
    pub fn new(game: &'a Game, coin_payoffs: &'a [T]) -> Self {
        assert_eq!(game.r(), coin_payoffs.len(), "one payoff per coin toss position");
        DggView { game, coin_payoffs }
    }
}

/// Value of a position in a solved view, stated by reference to the payoffs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DggValue {
    Zero,
    One,
    /// Equal to the payoff of the coin with this ordinal.
    Payoff(usize),
}

impl DggValue {
    pub fn resolve<'a, T>(self, coin_payoffs: &'a [T], zero: &'a T, one: &'a T) -> &'a T {
        match self {
            DggValue::Zero => zero,
            DggValue::One => one,
            DggValue::Payoff(c) => &coin_payoffs[c],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DggSolution {
    values: Vec<DggValue>,
    witness: Vec<Option<Slot>>,
    order: Vec<usize>,
    classes: Vec<(DggValue, usize)>,
}

impl DggSolution {
    pub fn value(&self, k: usize) -> DggValue {
        self.values[k]
    }

    pub fn values(&self) -> &[DggValue] {
        &self.values
    }

    /// Arc through which a player position was assigned; `None` for
    /// unassigned (value 0) positions and terminals.
    pub fn witness(&self, k: usize) -> Option<Slot> {
        self.witness[k]
    }

    /// Positions in the order they were assigned, highest value class first.
    /// Value-0 positions are excluded.
    pub fn assignment_order(&self) -> &[usize] {
        &self.order
    }

    /// Processed value classes in descending order with their sizes.
    pub fn classes(&self) -> &[(DggValue, usize)] {
        &self.classes
    }

    pub fn resolve<T: Clone>(&self, coin_payoffs: &[T], zero: &T, one: &T) -> Vec<T> {
        self.values.iter().map(|v| v.resolve(coin_payoffs, zero, one).clone()).collect()
    }
}

pub fn solve_dgg<T: Payoff>(view: DggView<'_, T>) -> DggSolution {
    Retrograde::new(view.game).solve(view)
}

/// Reusable scratch space, for callers solving many views of one game.
#[derive(Debug)]
pub struct Retrograde {
    pending: Vec<u8>,
    queue: VecDeque<usize>,
    coin_order: Vec<usize>,
}

impl Retrograde {
    pub fn new(game: &Game) -> Self {
        Retrograde {
            pending: vec![0; game.n() + 1],
            queue: VecDeque::new(),
            coin_order: Vec::with_capacity(game.r()),
        }
    }

    pub fn solve<T: Payoff>(&mut self, view: DggView<'_, T>) -> DggSolution {
        let mut values = vec![DggValue::Zero; view.game.n() + 1];
        let mut witness = vec![None; view.game.n() + 1];
        let mut order = Vec::new();
        let classes = self.solve_into(view, &mut values, Some(&mut witness), Some(&mut order));
        DggSolution { values, witness, order, classes }
    }

    /// Writes values into `values` (length `n + 1`); witnesses and order are
    /// recorded only when buffers are supplied.
    pub fn solve_into<T: Payoff>(
        &mut self,
        view: DggView<'_, T>,
        values: &mut [DggValue],
        mut witness: Option<&mut [Option<Slot>]>,
        mut order: Option<&mut Vec<usize>>,
    ) -> Vec<(DggValue, usize)> {
        let game = view.game;
        let payoffs = view.coin_payoffs;
        debug_assert_eq!(values.len(), game.n() + 1);

        for (k, p) in self.pending.iter_mut().enumerate() {
            *p = if game.kind(k).is_player() { 2 } else { 0 };
        }
        values.fill(DggValue::Zero);
        if let Some(w) = witness.as_deref_mut() {
            w.fill(None);
        }

        self.coin_order.clear();
        self.coin_order.extend((0..payoffs.len()).filter(|&c| !payoffs[c].is_zero() && !payoffs[c].is_one()));
        self.coin_order.sort_by(|&a, &b| payoffs[b].cmp(&payoffs[a]).then(a.cmp(&b)));

        let mut classes = Vec::new();
        // GOAL and the coins paying exactly 1 form the first class.
        let mut seeds: Vec<usize> = std::iter::once(GOAL)
            .chain((0..payoffs.len()).filter(|&c| payoffs[c].is_one()).map(|c| game.coins()[c]))
            .collect();
        let mut value = DggValue::One;
        let mut next = 0;
        loop {
            let size = self.run_class(game, &seeds, value, values, witness.as_deref_mut(), order.as_deref_mut());
            classes.push((value, size));
            if next == self.coin_order.len() {
                break;
            }
            let head = self.coin_order[next];
            seeds.clear();
            while next < self.coin_order.len() && payoffs[self.coin_order[next]] == payoffs[head] {
                seeds.push(game.coins()[self.coin_order[next]]);
                next += 1;
            }
            value = DggValue::Payoff(head);
        }
        classes
    }

    fn run_class(
        &mut self,
        game: &Game,
        seeds: &[usize],
        value: DggValue,
        values: &mut [DggValue],
        mut witness: Option<&mut [Option<Slot>]>,
        mut order: Option<&mut Vec<usize>>,
    ) -> usize {
        let mut size = 0;
        for &t in seeds {
            values[t] = value;
            self.queue.push_back(t);
        }
        while let Some(k) = self.queue.pop_front() {
            size += 1;
            if let Some(o) = order.as_deref_mut() {
                o.push(k);
            }
            for &(pred, slot) in game.predecessors(k) {
                let counter = &mut self.pending[pred];
                if *counter == 0 {
                    // terminal, or already assigned
                    continue;
                }
                let assign = match game.kind(pred) {
                    PositionKind::Max => true,
                    PositionKind::Min => {
                        *counter -= 1;
                        *counter == 0
                    }
                    _ => false,
                };
                if assign {
                    *counter = 0;
                    values[pred] = value;
                    if let Some(w) = witness.as_deref_mut() {
                        w[pred] = Some(slot);
                    }
                    self.queue.push_back(pred);
                }
            }
        }
        size
    }
}
