//! Wildflowers `G:H` (impartial base `G`) and the classification predicates
//! built on them: colour, star-closure, restricted fickle/firm bases, the
//! admissible-top classes, and mutant flowers `{*x1, ..., *xn}:a`.

use std::collections::BTreeSet;
use std::fmt;

use crate::arena::FormId;
use crate::dyadic::Dyadic;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::misere::{Genus, TamenessClass};
use crate::normal::mex;
use crate::outcome::OutcomeClass;
use crate::position::Position;

/// Three-valued answer for predicates that may not be decidable from the
/// information at hand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Tri::Yes => Some(true),
            Tri::No => Some(false),
            Tri::Unknown => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Tri::Yes => "true",
            Tri::No => "false",
            Tri::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A form split as `base:top` with an impartial base.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Wildflower {
    pub base: FormId,
    pub top: FormId,
    pub whole: FormId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    /// Top in `L+`.
    Blue,
    /// Top in `R+`.
    Red,
    /// Top in `P+`.
    Green,
    /// Top in `N+`.
    Neutral,
}

impl Color {
    pub fn as_str(self) -> &'static str {
        match self {
            Color::Blue => "blue",
            Color::Red => "red",
            Color::Green => "green",
            Color::Neutral => "neutral",
        }
    }

    pub fn is_colorful(self) -> bool {
        matches!(self, Color::Blue | Color::Red)
    }
}

/// `{*x1, ..., *xn}:a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutantFlower {
    pub xs: BTreeSet<u32>,
    pub value: Dyadic,
    pub height: u32,
    pub head: FormId,
    pub whole: FormId,
}

impl MutantFlower {
    /// Whether the flower lies in the closed set with the evil twin
    /// property: height above one, or `xs \ {0, 1}` closed under `^1`.
    pub fn in_closed_set(&self) -> bool {
        self.height > 1 || indices_star_closed(self.xs.iter().copied().filter(|&x| x > 1))
    }
}

/// A set of nimber indices is star-closed iff it is closed under `x ^ 1`.
pub fn indices_star_closed(indices: impl IntoIterator<Item = u32>) -> bool {
    let set: BTreeSet<u32> = indices.into_iter().collect();
    set.iter().all(|&x| set.contains(&(x ^ 1)))
}

impl Engine {
    /// Splits `g` as `base:top`, choosing the largest impartial base that
    /// reproduces `g` literally. Impartial forms come back as `g:0`.
    pub fn wildflower(&self, g: FormId) -> Wildflower {
        if let Some(w) = self.wildflower_memo.get(&g) {
            return *w;
        }
        let w = self.decompose(g);
        self.wildflower_memo.insert(g, w);
        w
    }

    fn decompose(&self, g: FormId) -> Wildflower {
        if self.is_impartial(g) {
            return Wildflower { base: g, top: FormId::ZERO, whole: g };
        }
        let form = self.form(g);
        let common: Vec<FormId> = form
            .left()
            .iter()
            .copied()
            .filter(|x| form.right().binary_search(x).is_ok() && self.is_impartial(*x))
            .collect();
        let k = common.len();
        let mut masks: Vec<u32> = if k <= 12 { (0..1u32 << k).collect() } else { vec![(1u32 << k.min(31)) - 1, 0] };
        masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
        for mask in masks {
            let opts: Vec<FormId> = (0..k).filter(|&j| mask >> j & 1 == 1).map(|j| common[j]).collect();
            let base = self.arena.intern_sets(opts.clone(), opts);
            if let Some(top) = self.strip_base(base, g) {
                debug_assert_eq!(self.ordinal_sum(base, top), g);
                return Wildflower { base, top, whole: g };
            }
        }
        Wildflower { base: FormId::ZERO, top: g, whole: g }
    }

    /// Finds `t` with `base:t ≅ x`, if any.
    fn strip_base(&self, base: FormId, x: FormId) -> Option<FormId> {
        if x == base {
            return Some(FormId::ZERO);
        }
        let base_opts = self.form(base).left().to_vec();
        let form = self.form(x);
        let mut sides = [Vec::new(), Vec::new()];
        for (side, out) in sides.iter_mut().enumerate() {
            let opts = form.options(side == 0);
            if !base_opts.iter().all(|b| opts.binary_search(b).is_ok()) {
                return None;
            }
            for &o in opts.iter().filter(|o| base_opts.binary_search(o).is_err()) {
                out.push(self.strip_base(base, o)?);
            }
        }
        let [left, right] = sides;
        let top = self.arena.intern_sets(left, right);
        (self.ordinal_sum(base, top) == x).then_some(top)
    }

    /// The dyadic value of `g` if `g` is literally a canonical number tree.
    pub fn as_number(&self, g: FormId) -> Option<Dyadic> {
        if let Some(v) = self.number_memo.get(&g) {
            return *v;
        }
        let form = self.form(g);
        let candidate = match (form.left(), form.right()) {
            ([], []) => Some(Dyadic::ZERO),
            ([x], []) => self
                .as_number(*x)
                .filter(|d| d.is_integer() && d.numerator() >= 0)
                .map(|d| Dyadic::integer(d.numerator() + 1)),
            ([], [y]) => self
                .as_number(*y)
                .filter(|d| d.is_integer() && d.numerator() <= 0)
                .map(|d| Dyadic::integer(d.numerator() - 1)),
            ([x], [y]) => match (self.as_number(*x), self.as_number(*y)) {
                (Some(a), Some(b)) if a < b => Some(a.midpoint(b)),
                _ => None,
            },
            _ => None,
        };
        let value = candidate.filter(|&d| self.number(d) == g);
        self.number_memo.insert(g, value);
        value
    }

    pub fn color(&self, w: &Wildflower) -> Color {
        match self.outcome_normal_form(w.top) {
            OutcomeClass::L => Color::Blue,
            OutcomeClass::R => Color::Red,
            OutcomeClass::P => Color::Green,
            OutcomeClass::N => Color::Neutral,
        }
    }

    /// Every member plus `*` equals (in normal play) some member.
    pub fn is_star_closed(&self, set: &[FormId]) -> bool {
        if set.iter().all(|&g| self.is_impartial(g)) {
            return indices_star_closed(set.iter().map(|&g| self.grundy_plus(g)));
        }
        set.iter().all(|&g| {
            let shifted = Position::new([g, FormId::STAR]);
            set.iter().any(|&h| self.eq_positions(&shifted, &Position::single(h)))
        })
    }

    fn own_tameness(&self, g: FormId) -> TamenessClass {
        Genus { g_plus: self.grundy_plus(g), g_minus: self.grundy_minus(g) }.tameness()
    }

    /// For every fickle subposition, its non-fickle options form a
    /// star-closed set.
    fn fickle_subpositions_restricted(&self, g: FormId) -> bool {
        self.subpositions(g).into_iter().filter(|&x| self.own_tameness(x) == TamenessClass::Fickle).all(|x| {
            let firm: Vec<FormId> = self
                .form(x)
                .left()
                .iter()
                .copied()
                .filter(|&o| self.own_tameness(o) != TamenessClass::Fickle)
                .collect();
            self.is_star_closed(&firm)
        })
    }

    pub fn is_restricted_fickle(&self, g: FormId) -> Result<bool> {
        Ok(self.classify_tameness(g, true)? == TamenessClass::Fickle && self.fickle_subpositions_restricted(g))
    }

    pub fn is_restricted_firm(&self, g: FormId) -> Result<bool> {
        Ok(self.classify_tameness(g, true)? == TamenessClass::Firm && self.fickle_subpositions_restricted(g))
    }

    /// Membership of `h` in the admissible-top class with shift `i`.
    pub fn in_r(&self, h: FormId, i: u32) -> Result<Tri> {
        self.in_r_with(h, i, false)
    }

    /// As [`Engine::in_r`]; with `hereditary`, every non-`N+` subposition of
    /// `h` must satisfy the option conditions too.
    pub fn in_r_with(&self, h: FormId, i: u32, hereditary: bool) -> Result<Tri> {
        if i > 1 {
            return Err(Error::Precondition(format!("shift must be 0 or 1, got {i}")));
        }
        if self.outcome_normal_form(h) == OutcomeClass::N {
            return Ok(Tri::No);
        }
        let mut verdict = self.in_r_options(h, i);
        if hereditary && verdict != Tri::No {
            for x in self.subpositions(h) {
                if x == h || self.outcome_normal_form(x) == OutcomeClass::N {
                    continue;
                }
                match self.in_r_options(x, i) {
                    Tri::No => return Ok(Tri::No),
                    Tri::Unknown => verdict = Tri::Unknown,
                    Tri::Yes => {}
                }
            }
        }
        Ok(verdict)
    }

    fn in_r_options(&self, h: FormId, i: u32) -> Tri {
        let form = self.form(h);
        let mut closed = true;
        for left in [true, false] {
            let mut values = Vec::new();
            for &o in form.options(left) {
                if self.outcome_normal_form(o) != OutcomeClass::N {
                    continue;
                }
                match self.form(self.canonical(o)).nimber() {
                    Some(v) => values.push(v + i),
                    None => return Tri::Unknown,
                }
            }
            closed &= indices_star_closed(values);
        }
        Tri::from_bool(closed)
    }

    pub fn is_restricted_fickle_wildflower(&self, w: &Wildflower) -> Result<Tri> {
        if !self.is_restricted_fickle(w.base)? {
            return Ok(Tri::No);
        }
        self.in_r(w.top, self.grundy_plus(w.base))
    }

    pub fn is_restricted_firm_wildflower(&self, w: &Wildflower) -> Result<bool> {
        self.is_restricted_firm(w.base)
    }

    pub fn mutant_flower(&self, xs: &BTreeSet<u32>, value: Dyadic) -> Result<MutantFlower> {
        if xs.is_empty() {
            return Err(Error::EmptyNimberSet);
        }
        let head = self.superstar(xs.iter().copied());
        let whole = self.ordinal_sum(head, self.number(value));
        Ok(MutantFlower { xs: xs.clone(), value, height: mex(xs.iter().copied()), head, whole })
    }

    /// Reads `g` back as a mutant flower when its largest impartial base is
    /// a nonempty superstar and its top a number.
    pub fn recognize_mutant(&self, g: FormId) -> Option<MutantFlower> {
        let w = self.wildflower(g);
        let head = self.form(w.base);
        let xs: Option<BTreeSet<u32>> = head.left().iter().map(|&o| self.form(o).nimber()).collect();
        let xs = xs.filter(|xs| !xs.is_empty())?;
        let value = self.as_number(w.top)?;
        Some(MutantFlower { height: mex(xs.iter().copied()), xs, value, head: w.base, whole: g })
    }

    /// Blue minus red wildflowers in a sum of colourful wildflowers and
    /// impartial games.
    pub fn flower_count_aw(&self, p: &Position) -> Result<i64> {
        p.components().iter().try_fold(0i64, |acc, &c| {
            if self.is_impartial(c) {
                return Ok(acc);
            }
            match self.color(&self.wildflower(c)) {
                Color::Blue => Ok(acc + 1),
                Color::Red => Ok(acc - 1),
                other => Err(Error::Unclassifiable(format!(
                    "component {} is a {} wildflower",
                    self.format_form(c),
                    other.as_str()
                ))),
            }
        })
    }
}
