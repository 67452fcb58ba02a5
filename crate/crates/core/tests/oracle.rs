//! Cross-checks the engine against a deliberately naive solver: plain game
//! trees, no interning, no memo tables, no nim-heap shortcuts.

use std::rc::Rc;

use proptest::prelude::*;
use wildflower::{Engine, FormId, OutcomeClass, Position};

mod common;
use common::{intern, node, size, to_tree, tree_strategy, Tree};

fn conjugate(t: &Tree) -> Rc<Tree> {
    node(t.right.iter().map(|x| conjugate(x)).collect(), t.left.iter().map(|x| conjugate(x)).collect())
}

/// Literal `g:h`: Left options of `g`, plus `g:h^L`; same on the right.
fn ordinal(g: &Rc<Tree>, h: &Tree) -> Rc<Tree> {
    let side = |gs: &[Rc<Tree>], hs: &[Rc<Tree>]| gs.iter().cloned().chain(hs.iter().map(|x| ordinal(g, x))).collect();
    node(side(&g.left, &h.left), side(&g.right, &h.right))
}

/// Whether the player to move wins the sum.
fn mover_wins(sum: &[Rc<Tree>], left: bool, misere: bool) -> bool {
    let mut any_move = false;
    for (i, c) in sum.iter().enumerate() {
        for o in if left { &c.left } else { &c.right } {
            any_move = true;
            let mut next = sum.to_vec();
            next[i] = o.clone();
            if !mover_wins(&next, !left, misere) {
                return true;
            }
        }
    }
    !any_move && misere
}

fn naive_outcome(sum: &[Rc<Tree>], misere: bool) -> OutcomeClass {
    OutcomeClass::from_first_player_wins(mover_wins(sum, true, misere), mover_wins(sum, false, misere))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn outcomes_match_naive_solver(sum in prop::collection::vec(tree_strategy(3), 1..=3)) {
        let total: usize = sum.iter().map(|t| size(t)).sum();
        prop_assume!(total <= 40);
        let e = Engine::new();
        let p = Position::new(sum.iter().map(|t| intern(&e, t)));
        prop_assert_eq!(e.outcome_normal(&p), naive_outcome(&sum, false));
        prop_assert_eq!(e.outcome_misere(&p), naive_outcome(&sum, true));
    }

    #[test]
    fn ordinal_sum_and_conjugate_match_trees(g in tree_strategy(3), h in tree_strategy(3)) {
        let e = Engine::new();
        let (gi, hi) = (intern(&e, &g), intern(&e, &h));
        prop_assert_eq!(e.ordinal_sum(gi, hi), intern(&e, &ordinal(&g, &h)));
        prop_assert_eq!(e.conjugate(gi), intern(&e, &conjugate(&g)));
    }
}

/// Mixed sums of named small games, including impartial components that the
/// engine folds into a single nim heap.
#[test]
fn named_sums_match_naive_solver() {
    let e = Engine::new();
    let names = ["*", "*2", "*3", "*:1", "*2:-1", "{0,*2,*3}:1", "1/2", "-1", "{1|-1}", "{0|*}", "{*|0,*}", "{*2,*3}"];
    let trees: Vec<Rc<Tree>> = names.iter().map(|n| to_tree(&e, e.parse_form(n).unwrap())).collect();
    let ids: Vec<FormId> = names.iter().map(|n| e.parse_form(n).unwrap()).collect();
    for i in 0..names.len() {
        for j in i..names.len() {
            let p = Position::new([ids[i], ids[j]]);
            let sum = [trees[i].clone(), trees[j].clone()];
            assert_eq!(e.outcome_normal(&p), naive_outcome(&sum, false), "normal {} + {}", names[i], names[j]);
            assert_eq!(e.outcome_misere(&p), naive_outcome(&sum, true), "misere {} + {}", names[i], names[j]);
        }
    }
}

/// `*2 + *3` equals `*` in normal play but not in misère play.
#[test]
fn misere_split_survives_shared_caches() {
    let e = Engine::new();
    let (s, s2, s3) = (e.star(), e.nimber(2), e.nimber(3));
    assert!(e.eq_positions(&Position::new([s2, s3]), &Position::single(s)));
    assert_eq!(e.outcome_misere(&Position::single(s)), OutcomeClass::P);
    assert_eq!(e.outcome_misere(&Position::new([s2, s3])), OutcomeClass::N);
    let sum = [to_tree(&e, s2), to_tree(&e, s3)];
    assert_eq!(naive_outcome(&sum, true), OutcomeClass::N);
    assert_eq!(e.outcome_misere(&Position::single(s)), OutcomeClass::P);
}
