//! Misère play: outcomes on literal forms, misère Grundy values, genus and
//! tameness.

use std::fmt;

use crate::arena::FormId;
use crate::engine::Engine;
use crate::error::Result;
use crate::normal::mex;
use crate::outcome::OutcomeClass;
use crate::position::Position;

/// Normal and misère Grundy values of an impartial form, written `a^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Genus {
    pub g_plus: u32,
    pub g_minus: u32,
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.g_plus, self.g_minus)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TamenessClass {
    /// Genus `1^0` or `0^1`.
    Fickle,
    /// Genus `n^n`.
    Firm,
    Wild,
}

impl TamenessClass {
    pub fn as_str(self) -> &'static str {
        match self {
            TamenessClass::Fickle => "fickle",
            TamenessClass::Firm => "firm",
            TamenessClass::Wild => "wild",
        }
    }
}

impl Genus {
    pub fn tameness(self) -> TamenessClass {
        match (self.g_plus, self.g_minus) {
            (1, 0) | (0, 1) => TamenessClass::Fickle,
            (a, b) if a == b => TamenessClass::Firm,
            _ => TamenessClass::Wild,
        }
    }
}

impl Engine {
    /// Exact misère outcome: a player who cannot move wins.
    pub fn outcome_misere(&self, p: &Position) -> OutcomeClass {
        let key: Vec<FormId> = p.components().iter().copied().filter(|&g| g != FormId::ZERO).collect();
        self.solve_misere(&key)
    }

    pub fn outcome_misere_form(&self, g: FormId) -> OutcomeClass {
        self.outcome_misere(&Position::single(g))
    }

    fn solve_misere(&self, key: &[FormId]) -> OutcomeClass {
        if key.is_empty() {
            return OutcomeClass::N;
        }
        if let Some(o) = self.misere_memo.get(key) {
            return *o;
        }
        let lf = self.misere_mover_wins(key, true);
        let rf = self.misere_mover_wins(key, false);
        let outcome = OutcomeClass::from_first_player_wins(lf, rf);
        self.misere_memo.insert(key.to_vec(), outcome);
        outcome
    }

    fn misere_mover_wins(&self, key: &[FormId], left: bool) -> bool {
        let mut has_move = false;
        for i in 0..key.len() {
            if i > 0 && key[i] == key[i - 1] {
                continue;
            }
            let form = self.form(key[i]);
            for &opt in form.options(left) {
                has_move = true;
                let mut child = key.to_vec();
                child.remove(i);
                if opt != FormId::ZERO {
                    let at = child.partition_point(|&x| x <= opt);
                    child.insert(at, opt);
                }
                let o = self.solve_misere(&child);
                if (left && o.left_wins_second()) || (!left && o.right_wins_second()) {
                    return true;
                }
            }
        }
        !has_move
    }

    pub(crate) fn grundy_minus(&self, g: FormId) -> u32 {
        if g == FormId::ZERO {
            return 1;
        }
        if let Some(v) = self.grundy_minus.get(&g) {
            return *v;
        }
        let form = self.form(g);
        let v = mex(form.left().iter().map(|&x| self.grundy_minus(x)));
        self.grundy_minus.insert(g, v);
        v
    }

    /// Misère Grundy value: 1 for the empty game, otherwise the mex of the
    /// options' values.
    pub fn grundy_misere(&self, g: FormId) -> Result<u32> {
        self.require_impartial(g)?;
        Ok(self.grundy_minus(g))
    }

    pub fn genus(&self, g: FormId) -> Result<Genus> {
        self.require_impartial(g)?;
        Ok(Genus { g_plus: self.grundy_plus(g), g_minus: self.grundy_minus(g) })
    }

    /// Tameness from the genus of `g`; with `hereditary` set, any wild
    /// subposition makes the whole form wild.
    pub fn classify_tameness(&self, g: FormId, hereditary: bool) -> Result<TamenessClass> {
        let own = self.genus(g)?.tameness();
        if hereditary && own != TamenessClass::Wild {
            let wild_below = self.subpositions(g).into_iter().any(|x| {
                Genus { g_plus: self.grundy_plus(x), g_minus: self.grundy_minus(x) }.tameness() == TamenessClass::Wild
            });
            if wild_below {
                return Ok(TamenessClass::Wild);
            }
        }
        Ok(own)
    }
}
