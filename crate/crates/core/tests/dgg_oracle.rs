//! The retrograde solver against brute-force enumeration of positional
//! strategy pairs, each evaluated by following the deterministic play.

use ssg_core::dgg::{solve_dgg, DggView};
use ssg_core::game::{Game, PositionKind, GOAL};
use ssg_core::Rational;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Payoff of the play from `start` when each player position `k` follows
/// arc `choice[k]`; infinite play pays 0.
fn play(game: &Game, payoffs: &[Rational], choice: &[usize], start: usize) -> Rational {
    let mut seen = vec![false; game.n() + 1];
    let mut k = start;
    loop {
        if k == GOAL {
            return q(1, 1);
        }
        if let Some(c) = game.coin_ordinal(k) {
            return payoffs[c].clone();
        }
        if seen[k] {
            return q(0, 1);
        }
        seen[k] = true;
        k = game.successors(k)[choice[k]];
    }
}

fn brute_force(game: &Game, payoffs: &[Rational]) -> Vec<Rational> {
    let maxes: Vec<usize> = game.positions_of(PositionKind::Max).collect();
    let mins: Vec<usize> = game.positions_of(PositionKind::Min).collect();
    let mut choice = vec![0; game.n() + 1];
    (0..=game.n())
        .map(|k| {
            (0..1u32 << maxes.len())
                .map(|xb| {
                    (0..1u32 << mins.len())
                        .map(|yb| {
                            for (i, &m) in maxes.iter().enumerate() {
                                choice[m] = (xb >> i & 1) as usize;
                            }
                            for (i, &m) in mins.iter().enumerate() {
                                choice[m] = (yb >> i & 1) as usize;
                            }
                            play(game, payoffs, &choice, k)
                        })
                        .min()
                        .unwrap()
                })
                .max()
                .unwrap()
        })
        .collect()
}

fn retrograde(game: &Game, payoffs: &[Rational]) -> Vec<Rational> {
    solve_dgg(DggView::new(game, payoffs)).resolve(payoffs, &q(0, 1), &q(1, 1))
}

/// Every game with `players` player positions (coins first, then players),
/// all kind assignments and all successor choices.
fn for_each_structure(players: usize, coins: usize, mut f: impl FnMut(&Game)) {
    let n = players + coins;
    let targets = (n + 1) as u64;
    let arcs = 2 * players as u32;
    for kinds in 0..1u32 << players {
        for code in 0..targets.pow(arcs) {
            let mut c = code;
            let mut positions = vec![(PositionKind::Ave, [GOAL, GOAL]); coins];
            for p in 0..players {
                let kind = if kinds >> p & 1 == 1 { PositionKind::Max } else { PositionKind::Min };
                let s1 = (c % targets) as usize;
                c /= targets;
                let s2 = (c % targets) as usize;
                c /= targets;
                positions.push((kind, [s1, s2]));
            }
            f(&Game::new(positions).unwrap());
        }
    }
}

#[test]
fn exhaustive_small_views() {
    let payoff_sets = [
        vec![],
        vec![q(1, 2)],
        vec![q(0, 1)],
        vec![q(1, 3), q(2, 3)],
        vec![q(2, 3), q(1, 3)],
        vec![q(1, 2), q(1, 2)],
        vec![q(1, 1), q(1, 4)],
        vec![q(0, 1), q(3, 4)],
    ];
    let mut checked = 0;
    for payoffs in &payoff_sets {
        for players in 1..=3 {
            if players == 3 && payoffs.len() == 2 && payoffs[0] != q(1, 3) {
                continue; // keep the widest layer to one payoff pattern
            }
            for_each_structure(players, payoffs.len(), |g| {
                assert_eq!(retrograde(g, payoffs), brute_force(g, payoffs), "{}{:?}", g.to_ssg(), payoffs);
                checked += 1;
            });
        }
    }
    assert!(checked > 100_000, "{checked}");
}

#[test]
fn random_views_with_random_payoffs() {
    use ssg_core::generators::gen_random;
    for seed in 0..50u64 {
        let players = 1 + (seed % 3) as usize;
        let coins = (seed % 3) as usize;
        let max_count = (seed / 3 % (players as u64 + 1)) as usize;
        let g = gen_random(players + coins, coins, max_count, players - max_count, seed).unwrap();
        let payoffs: Vec<Rational> = (0..coins).map(|c| q(((seed * 7 + c as u64 * 3) % 9) as i64, 8)).collect();
        let payoffs: Vec<Rational> = payoffs.into_iter().map(|p| p.min(q(1, 1))).collect();
        assert_eq!(retrograde(&g, &payoffs), brute_force(&g, &payoffs), "seed {seed}");
    }
}

#[test]
fn local_optimality_holds() {
    use ssg_core::generators::gen_random;
    for seed in 0..300u64 {
        let g = gen_random(20, 5, 7, 8, seed).unwrap();
        let payoffs: Vec<Rational> = (0..5).map(|c| q(((seed + c) % 5) as i64, 4).min(q(1, 1))).collect();
        let s = solve_dgg(DggView::new(&g, &payoffs));
        let v = s.resolve(&payoffs, &q(0, 1), &q(1, 1));
        let mut distinct: Vec<&Rational> = v.iter().collect();
        distinct.sort();
        distinct.dedup();
        assert!(distinct.len() <= g.r() + 2);
        for k in 1..=g.n() {
            let [a, b] = g.successors(k).map(|x| &v[x]);
            match g.kind(k) {
                PositionKind::Max => assert_eq!(&v[k], a.max(b)),
                PositionKind::Min => {
                    if v[k] != q(0, 1) {
                        assert_eq!(&v[k], a.min(b));
                    } else {
                        // Min's witness keeps play inside the value-0 set
                        let w = s.witness(k);
                        let next = match w {
                            Some(slot) => g.successor(k, slot),
                            None => if v[g.successors(k)[0]] == q(0, 1) { g.successors(k)[0] } else { g.successors(k)[1] },
                        };
                        assert_eq!(v[next], q(0, 1));
                        assert_ne!(next, GOAL);
                    }
                }
                _ => assert_eq!(v[k], payoffs[g.coin_ordinal(k).unwrap()]),
            }
        }
    }
}

#[test]
fn doubling_n_roughly_doubles_time() {
    use ssg_core::dgg::Retrograde;
    use ssg_core::generators::gen_random;
    use std::time::Instant;
    let best_time = |n: usize| {
        let g = gen_random(n, 6, n / 2, n - 6 - n / 2, 5).unwrap();
        let payoffs: Vec<Rational> = (1..=6).map(|c| q(c, 7)).collect();
        let mut retro = Retrograde::new(&g);
        (0..5)
            .map(|_| {
                let start = Instant::now();
                std::hint::black_box(retro.solve(DggView::new(&g, &payoffs)));
                start.elapsed().as_secs_f64()
            })
            .fold(f64::INFINITY, f64::min)
    };
    let (small, large) = (best_time(200_000), best_time(400_000));
    assert!(large / small < 3.0, "{small:.4}s -> {large:.4}s");
}
