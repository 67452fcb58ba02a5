//! Normal-play solving: outcomes, comparison, canonical forms, Grundy
//! values, and the atomic-weight bracket.
//!
//! Every impartial component of a position is collapsed into a single nim
//! heap before search, since an impartial game equals its Grundy nimber.

use crate::arena::FormId;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::outcome::OutcomeClass;
use crate::position::Position;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct NormalKey {
    parts: Vec<FormId>,
    nim: u32,
}

impl Engine {
    /// Exact normal-play outcome class of a position.
    pub fn outcome_normal(&self, p: &Position) -> OutcomeClass {
        let key = self.normal_key(p.components());
        self.solve_normal(&key)
    }

    pub fn outcome_normal_form(&self, g: FormId) -> OutcomeClass {
        self.outcome_normal(&Position::single(g))
    }

    fn normal_key(&self, components: &[FormId]) -> NormalKey {
        let mut nim = 0;
        let mut parts = Vec::with_capacity(components.len());
        for &c in components {
            if self.is_impartial(c) {
                nim ^= self.grundy_plus(c);
            } else {
                parts.push(c);
            }
        }
        parts.sort_unstable();
        NormalKey { parts, nim }
    }

    fn solve_normal(&self, key: &NormalKey) -> OutcomeClass {
        if key.parts.is_empty() {
            return if key.nim == 0 { OutcomeClass::P } else { OutcomeClass::N };
        }
        if let Some(o) = self.normal_memo.get(key) {
            return *o;
        }
        let lf = self.normal_mover_wins(key, true);
        let rf = self.normal_mover_wins(key, false);
        let outcome = OutcomeClass::from_first_player_wins(lf, rf);
        self.normal_memo.insert(key.clone(), outcome);
        outcome
    }

    fn normal_mover_wins(&self, key: &NormalKey, left: bool) -> bool {
        let wins = |child: &NormalKey| {
            let o = self.solve_normal(child);
            if left {
                o.left_wins_second()
            } else {
                o.right_wins_second()
            }
        };
        for i in 0..key.parts.len() {
            if i > 0 && key.parts[i] == key.parts[i - 1] {
                continue;
            }
            let form = self.form(key.parts[i]);
            for &opt in form.options(left) {
                let mut parts = key.parts.clone();
                parts.remove(i);
                let mut nim = key.nim;
                if self.is_impartial(opt) {
                    nim ^= self.grundy_plus(opt);
                } else {
                    let at = parts.partition_point(|&x| x <= opt);
                    parts.insert(at, opt);
                }
                if wins(&NormalKey { parts, nim }) {
                    return true;
                }
            }
        }
        (0..key.nim).any(|k| wins(&NormalKey { parts: key.parts.clone(), nim: k }))
    }

    /// `a ≤ b` in normal play: Left wins `b - a` moving second.
    pub fn leq_positions(&self, a: &Position, b: &Position) -> bool {
        let diff = b.sum(&self.conjugate_position(a));
        self.outcome_normal(&diff).left_wins_second()
    }

    pub fn eq_positions(&self, a: &Position, b: &Position) -> bool {
        self.leq_positions(a, b) && self.leq_positions(b, a)
    }

    pub fn lt_positions(&self, a: &Position, b: &Position) -> bool {
        self.leq_positions(a, b) && !self.leq_positions(b, a)
    }

    pub fn leq_normal(&self, g: FormId, h: FormId) -> bool {
        if g == h {
            return true;
        }
        if let Some(r) = self.leq_memo.get(&(g, h)) {
            return *r;
        }
        let r = self.leq_positions(&Position::single(g), &Position::single(h));
        self.leq_memo.insert((g, h), r);
        r
    }

    pub fn eq_normal(&self, g: FormId, h: FormId) -> bool {
        self.leq_normal(g, h) && self.leq_normal(h, g)
    }

    /// Normal-play canonical form: options canonicalized, then dominated
    /// options removed and reversible ones bypassed until nothing changes.
    pub fn canonical(&self, g: FormId) -> FormId {
        if let Some(c) = self.canonical_memo.get(&g) {
            return *c;
        }
        let c = if self.is_impartial(g) { self.nimber(self.grundy_plus(g)) } else { self.reduce_to_canonical(g) };
        self.canonical_memo.insert(g, c);
        self.canonical_memo.insert(c, c);
        c
    }

    fn reduce_to_canonical(&self, g: FormId) -> FormId {
        let form = self.form(g);
        let mut left: Vec<FormId> = form.left().iter().map(|&x| self.canonical(x)).collect();
        let mut right: Vec<FormId> = form.right().iter().map(|&x| self.canonical(x)).collect();
        loop {
            left.sort_unstable();
            left.dedup();
            right.sort_unstable();
            right.dedup();
            left = self.undominated(&left, true);
            right = self.undominated(&right, false);
            let current = self.arena.intern_sets(left.clone(), right.clone());

            let mut changed = false;
            let mut new_left = Vec::with_capacity(left.len());
            for &a in &left {
                let a_form = self.form(a);
                match a_form.right().iter().find(|&&ar| self.leq_normal(ar, current)) {
                    Some(&ar) => {
                        new_left.extend_from_slice(self.form(ar).left());
                        changed = true;
                    }
                    None => new_left.push(a),
                }
            }
            let mut new_right = Vec::with_capacity(right.len());
            for &b in &right {
                let b_form = self.form(b);
                match b_form.left().iter().find(|&&bl| self.leq_normal(current, bl)) {
                    Some(&bl) => {
                        new_right.extend_from_slice(self.form(bl).right());
                        changed = true;
                    }
                    None => new_right.push(b),
                }
            }
            if !changed {
                return current;
            }
            left = new_left;
            right = new_right;
        }
    }

    fn undominated(&self, opts: &[FormId], left: bool) -> Vec<FormId> {
        opts.iter()
            .copied()
            .filter(|&a| {
                !opts.iter().any(|&b| b != a && if left { self.leq_normal(a, b) } else { self.leq_normal(b, a) })
            })
            .collect()
    }

    pub(crate) fn grundy_plus(&self, g: FormId) -> u32 {
        let form = self.form(g);
        if let Some(n) = form.nimber() {
            return n;
        }
        if let Some(v) = self.grundy_plus.get(&g) {
            return *v;
        }
        let v = mex(form.left().iter().map(|&x| self.grundy_plus(x)));
        self.grundy_plus.insert(g, v);
        v
    }

    /// Normal-play Grundy value of an impartial form.
    pub fn grundy_normal(&self, g: FormId) -> Result<u32> {
        self.require_impartial(g)?;
        Ok(self.grundy_plus(g))
    }

    /// Nim-sum of the Grundy values of an all-impartial position.
    pub fn grundy_position(&self, p: &Position) -> Result<u32> {
        p.components().iter().try_fold(0, |acc, &g| Ok(acc ^ self.grundy_normal(g)?))
    }

    pub(crate) fn require_impartial(&self, g: FormId) -> Result<()> {
        let form = self.arena.try_form(g)?;
        if form.is_impartial() {
            Ok(())
        } else {
            Err(Error::NotImpartial(g))
        }
    }

    /// Whether `G(g:h) = G(g) + G(h)` with ordinary integer addition.
    pub fn colon_check(&self, g: FormId, h: FormId) -> Result<bool> {
        let lhs = self.grundy_normal(self.ordinal_sum(g, h))?;
        Ok(lhs == self.grundy_normal(g)? + self.grundy_normal(h)?)
    }

    /// Largest Grundy value among the impartial subpositions of `g`.
    pub fn max_nimber_index(&self, g: FormId) -> u32 {
        self.subpositions(g)
            .into_iter()
            .filter(|&x| self.is_impartial(x))
            .map(|x| self.grundy_plus(x))
            .max()
            .unwrap_or(0)
    }

    /// Checks `*n + ↓ < g ∓ ↑ < *n + ↑`, the bracket that pins the atomic
    /// weight of `g` to `sign` (which must be `1` or `-1`).
    pub fn verify_aw_pm1(&self, g: FormId, sign: i8, n: u32) -> Result<bool> {
        if sign != 1 && sign != -1 {
            return Err(Error::Precondition(format!("sign must be +1 or -1, got {sign}")));
        }
        let required = self.max_nimber_index(g) + 3;
        if n < required {
            return Err(Error::BoundTooSmall { given: n, required });
        }
        Ok(self.aw_bracket(g, sign > 0, n))
    }

    /// The bracket comparison of [`Engine::verify_aw_pm1`] at any `n`, with
    /// no check that `n` is large enough.
    pub fn aw_bracket(&self, g: FormId, positive: bool, n: u32) -> bool {
        let (up, down) = (self.up(), self.down());
        let heap = self.nimber(n);
        let low = Position::new([heap, down]);
        let high = Position::new([heap, up]);
        let shifted = Position::new([g, if positive { down } else { up }]);
        self.lt_positions(&low, &shifted) && self.lt_positions(&shifted, &high)
    }
}

pub(crate) fn mex(values: impl IntoIterator<Item = u32>) -> u32 {
    let mut seen: Vec<u32> = values.into_iter().collect();
    seen.sort_unstable();
    seen.dedup();
    seen.iter().enumerate().find(|&(i, &v)| i as u32 != v).map_or(seen.len() as u32, |(i, _)| i as u32)
}
