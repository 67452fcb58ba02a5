//! Random literal game trees shared by the integration tests.

#![allow(dead_code)]

use std::rc::Rc;

use proptest::prelude::*;
use wildflower::{Engine, FormId};

#[derive(Debug, PartialEq, Eq)]
pub struct Tree {
    pub left: Vec<Rc<Tree>>,
    pub right: Vec<Rc<Tree>>,
}

pub fn node(left: Vec<Rc<Tree>>, right: Vec<Rc<Tree>>) -> Rc<Tree> {
    Rc::new(Tree { left, right })
}

/// Trees of depth at most `depth` with up to two options per side.
pub fn tree_strategy(depth: u32) -> impl Strategy<Value = Rc<Tree>> {
    Just(node(vec![], vec![])).prop_recursive(depth, 16, 2, |inner| {
        (prop::collection::vec(inner.clone(), 0..=2), prop::collection::vec(inner, 0..=2)).prop_map(|(l, r)| node(l, r))
    })
}

/// Impartial trees: both sides share one option list.
pub fn impartial_strategy(depth: u32) -> impl Strategy<Value = Rc<Tree>> {
    Just(node(vec![], vec![]))
        .prop_recursive(depth, 16, 3, |inner| prop::collection::vec(inner, 0..=3).prop_map(|o| node(o.clone(), o)))
}

pub fn intern(e: &Engine, t: &Tree) -> FormId {
    let l: Vec<FormId> = t.left.iter().map(|x| intern(e, x)).collect();
    let r: Vec<FormId> = t.right.iter().map(|x| intern(e, x)).collect();
    e.intern(l, r).unwrap()
}

pub fn to_tree(e: &Engine, g: FormId) -> Rc<Tree> {
    let f = e.form(g);
    node(f.left().iter().map(|&x| to_tree(e, x)).collect(), f.right().iter().map(|&x| to_tree(e, x)).collect())
}

pub fn size(t: &Tree) -> usize {
    1 + t.left.iter().chain(&t.right).map(|x| size(x)).sum::<usize>()
}
