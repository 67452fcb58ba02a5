use std::collections::BTreeSet;
use std::sync::Arc;

use dashmap::DashMap;

use crate::arena::{Arena, Form, FormId};
use crate::dyadic::Dyadic;
use crate::error::Result;
use crate::normal::NormalKey;
use crate::outcome::OutcomeClass;
use crate::position::Position;
use crate::taxonomy::Wildflower;

/// Leaf constructors accepted by [`Engine::atom`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    Number(Dyadic),
    Nimber(u32),
    Up,
    Down,
}

/// The shared context: the form arena plus every memo table the solvers
/// use. All methods take `&self`; an `Engine` can be shared across threads.
///
/// Normal-play and misère tables are separate, and misère results are only
/// ever keyed by literal forms.
#[derive(Default)]
pub struct Engine {
    pub(crate) arena: Arena,
    pub(crate) normal_memo: DashMap<NormalKey, OutcomeClass>,
    pub(crate) misere_memo: DashMap<Vec<FormId>, OutcomeClass>,
    pub(crate) grundy_plus: DashMap<FormId, u32>,
    pub(crate) grundy_minus: DashMap<FormId, u32>,
    pub(crate) leq_memo: DashMap<(FormId, FormId), bool>,
    pub(crate) canonical_memo: DashMap<FormId, FormId>,
    pub(crate) number_memo: DashMap<FormId, Option<Dyadic>>,
    pub(crate) wildflower_memo: DashMap<FormId, Wildflower>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn arena(&self) -> &Arena {
        &self.arena
    }

    pub fn form(&self, g: FormId) -> Arc<Form> {
        self.arena.form(g)
    }

    pub fn intern(
        &self,
        left: impl IntoIterator<Item = FormId>,
        right: impl IntoIterator<Item = FormId>,
    ) -> Result<FormId> {
        self.arena.intern(left, right)
    }

    pub fn atom(&self, atom: Atom) -> FormId {
        match atom {
            Atom::Number(d) => self.arena.number(d),
            Atom::Nimber(n) => self.arena.nimber(n),
            Atom::Up => self.arena.up(),
            Atom::Down => self.arena.down(),
        }
    }

    pub fn zero(&self) -> FormId {
        FormId::ZERO
    }

    pub fn star(&self) -> FormId {
        FormId::STAR
    }

    pub fn nimber(&self, n: u32) -> FormId {
        self.arena.nimber(n)
    }

    pub fn number(&self, d: Dyadic) -> FormId {
        self.arena.number(d)
    }

    pub fn integer(&self, n: i64) -> FormId {
        self.arena.number(Dyadic::integer(n))
    }

    pub fn up(&self) -> FormId {
        self.arena.up()
    }

    pub fn down(&self) -> FormId {
        self.arena.down()
    }

    pub fn conjugate(&self, g: FormId) -> FormId {
        self.arena.conjugate(g)
    }

    pub fn ordinal_sum(&self, g: FormId, h: FormId) -> FormId {
        self.arena.ordinal_sum(g, h)
    }

    pub fn sum_form(&self, p: &Position) -> FormId {
        self.arena.sum_form(p.components())
    }

    pub fn subpositions(&self, g: FormId) -> BTreeSet<FormId> {
        self.arena.subpositions(g)
    }

    pub fn birthday(&self, g: FormId) -> u32 {
        self.arena.birthday(g)
    }

    pub fn is_impartial(&self, g: FormId) -> bool {
        self.arena.is_impartial(g)
    }

    /// The impartial form whose options are exactly the given nimbers.
    pub fn superstar(&self, indices: impl IntoIterator<Item = u32>) -> FormId {
        let opts: Vec<FormId> = indices.into_iter().map(|x| self.nimber(x)).collect();
        self.arena.intern_sets(opts.clone(), opts)
    }

    /// Componentwise conjugate of a position.
    pub fn conjugate_position(&self, p: &Position) -> Position {
        p.components().iter().map(|&g| self.conjugate(g)).collect()
    }
}
