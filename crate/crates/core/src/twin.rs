//! Evil twins: a twin `G*` with `o+(G) = o-(G*)` and `o-(G) = o+(G*)`,
//! chosen per family as either `G` (kernel side) or `G + *`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::arena::FormId;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::misere::TamenessClass;
use crate::normal::mex;
use crate::outcome::OutcomeClass;
use crate::position::Position;
use crate::taxonomy::{MutantFlower, Tri};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyRule {
    Sprigs,
    Flowers,
    MutantFlowers,
    TameImpartial,
    RestrictedWildflowers,
}

impl FamilyRule {
    pub const ALL: [FamilyRule; 5] = [
        FamilyRule::Sprigs,
        FamilyRule::Flowers,
        FamilyRule::MutantFlowers,
        FamilyRule::TameImpartial,
        FamilyRule::RestrictedWildflowers,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyRule::Sprigs => "sprigs",
            FamilyRule::Flowers => "flowers",
            FamilyRule::MutantFlowers => "mutant-flowers",
            FamilyRule::TameImpartial => "tame-impartial",
            FamilyRule::RestrictedWildflowers => "restricted-wildflowers",
        }
    }
}

impl fmt::Display for FamilyRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyRule::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinReport {
    pub input: Position,
    pub kernel_member: Tri,
    pub twin: Position,
    /// `(o+(G), o+(G*))`.
    pub normal_outcomes: (OutcomeClass, OutcomeClass),
    /// `(o-(G), o-(G*))`.
    pub misere_outcomes: (OutcomeClass, OutcomeClass),
    pub verified: bool,
}

/// Outcomes of `F = {xs}:1 + {xs}:-1` and of `F + *`, each as `(o+, o-)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CounterexampleOutcomes {
    pub pair: (OutcomeClass, OutcomeClass),
    pub pair_star: (OutcomeClass, OutcomeClass),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The kernel's choice of twin does not satisfy the twin equalities.
    Twin { position: Position, twin: Position },
    /// `A + B` is outside the kernel but `A` or `B` is not, or vice versa.
    Addition { a: Position, b: Position },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvillyNormalReport {
    pub members: usize,
    pub pairs: usize,
    pub violations: Vec<Violation>,
}

/// Every multiset of at most `max` elements drawn from `pool`, smallest
/// first, starting with the empty one.
pub fn multisets(pool: &[FormId], max: usize) -> Vec<Position> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(Vec<FormId>, usize)> = vec![(Vec::new(), 0)];
    for _ in 0..max {
        let mut next = Vec::new();
        for (parts, start) in &frontier {
            for (j, &g) in pool.iter().enumerate().skip(*start) {
                let mut grown = parts.clone();
                grown.push(g);
                out.push(grown.clone());
                next.push((grown, j));
            }
        }
        frontier = next;
    }
    out.into_iter().map(Position::new).collect()
}

impl Engine {
    /// The four outcomes for a candidate twin, and whether they match up.
    pub fn verify_evil_twin(&self, p: &Position, twin: &Position) -> bool {
        self.outcome_normal(p) == self.outcome_misere(twin) && self.outcome_misere(p) == self.outcome_normal(twin)
    }

    fn report(&self, input: &Position, kernel_member: Tri, in_kernel: bool) -> TwinReport {
        let twin = if in_kernel { input.clone() } else { input.plus(FormId::STAR) };
        let normal_outcomes = (self.outcome_normal(input), self.outcome_normal(&twin));
        let misere_outcomes = (self.outcome_misere(input), self.outcome_misere(&twin));
        let verified = normal_outcomes.0 == misere_outcomes.1 && misere_outcomes.0 == normal_outcomes.1;
        TwinReport { input: input.clone(), kernel_member, twin, normal_outcomes, misere_outcomes, verified }
    }

    /// Builds the report for the twin `rule` assigns to `p`, or for the
    /// opposite choice when `flip` is set.
    pub fn twin_with(&self, p: &Position, rule: FamilyRule, flip: bool) -> Result<TwinReport> {
        let kernel = self.family_kernel(p, rule)?;
        let in_kernel = match kernel {
            Tri::Yes => true,
            Tri::No => false,
            Tri::Unknown => {
                return Err(Error::Unclassifiable(format!(
                    "kernel membership of {} under {rule} is unknown",
                    self.format_position(p)
                )))
            }
        };
        Ok(self.report(p, kernel, in_kernel != flip))
    }

    pub fn twin_of(&self, p: &Position, rule: FamilyRule) -> Result<TwinReport> {
        self.twin_with(p, rule, false)
    }

    fn family_kernel(&self, p: &Position, rule: FamilyRule) -> Result<Tri> {
        let mismatch = |reason: String| Error::FamilyMismatch { family: rule.as_str(), reason };
        match rule {
            FamilyRule::Sprigs => {
                for &c in p.components() {
                    match self.recognize_mutant(c) {
                        Some(m) if m.xs.len() == 1 && m.xs.contains(&0) => {}
                        _ => return Err(mismatch(format!("component {} is not a sprig *:a", self.format_form(c)))),
                    }
                }
                Ok(Tri::No)
            }
            FamilyRule::Flowers => {
                let mut m = 0;
                for &c in p.components() {
                    match self.recognize_mutant(c) {
                        Some(f) if f.height >= 1 && f.xs.len() as u32 == f.height => m = m.max(f.height),
                        _ => return Err(mismatch(format!("component {} is not a flower *n:a", self.format_form(c)))),
                    }
                }
                Ok(Tri::from_bool(m > 1))
            }
            FamilyRule::MutantFlowers => {
                let mut m = 0;
                for &c in p.components() {
                    let f = self
                        .recognize_mutant(c)
                        .ok_or_else(|| mismatch(format!("component {} is not a mutant flower", self.format_form(c))))?;
                    if !f.in_closed_set() {
                        return Err(mismatch(format!(
                            "mutant flower {c:?} has height {} and its nimber set minus 0 and 1 is not star-closed",
                            f.height
                        )));
                    }
                    m = m.max(f.height);
                }
                Ok(Tri::from_bool(m > 1))
            }
            FamilyRule::TameImpartial => {
                if let Some(&c) = p.components().iter().find(|&&c| !self.is_impartial(c)) {
                    return Err(mismatch(format!("component {} is not impartial", self.format_form(c))));
                }
                match self.classify_tameness(self.sum_form(p), true)? {
                    TamenessClass::Firm => Ok(Tri::Yes),
                    TamenessClass::Fickle => Ok(Tri::No),
                    TamenessClass::Wild => Err(Error::Unclassifiable("the sum is not hereditarily tame".into())),
                }
            }
            FamilyRule::RestrictedWildflowers => Ok(self.kernel_member_wildflowers(p)),
        }
    }

    /// Kernel membership for sums of wildflowers and impartial forms: inside
    /// as soon as one summand is restricted firm, outside when every summand
    /// is restricted fickle.
    pub fn kernel_member_wildflowers(&self, p: &Position) -> Tri {
        let mut all_fickle = true;
        for &c in p.components() {
            let (firm, fickle) = if self.is_impartial(c) {
                (self.is_restricted_firm(c).unwrap_or(false), self.is_restricted_fickle(c).unwrap_or(false))
            } else {
                let w = self.wildflower(c);
                (
                    self.is_restricted_firm_wildflower(&w).unwrap_or(false),
                    self.is_restricted_fickle_wildflower(&w).map(|t| t == Tri::Yes).unwrap_or(false),
                )
            };
            if firm {
                return Tri::Yes;
            }
            all_fickle &= fickle;
        }
        if all_fickle {
            Tri::No
        } else {
            Tri::Unknown
        }
    }

    /// Falsification harness for an evilly normal pair: enumerates sums of at
    /// most `max_summands` subpositions of the generators and checks that
    /// the kernel picks a valid twin for each, and that the kernel's
    /// complement is closed under addition in both directions.
    pub fn verify_evilly_normal<K>(&self, generators: &[FormId], kernel: K, max_summands: usize) -> EvillyNormalReport
    where
        K: Fn(&Engine, &Position) -> bool,
    {
        let pool: BTreeSet<FormId> =
            generators.iter().flat_map(|&g| self.subpositions(g)).filter(|&g| g != FormId::ZERO).collect();
        let pool: Vec<FormId> = pool.into_iter().collect();
        let members = multisets(&pool, max_summands);
        let mut report = EvillyNormalReport { members: members.len(), ..Default::default() };
        for a in &members {
            let twin = if kernel(self, a) { a.clone() } else { a.plus(FormId::STAR) };
            if !self.verify_evil_twin(a, &twin) {
                report.violations.push(Violation::Twin { position: a.clone(), twin });
            }
        }
        for (i, a) in members.iter().enumerate() {
            for b in &members[i..] {
                if a.is_empty() || b.is_empty() || a.len() + b.len() > max_summands {
                    continue;
                }
                report.pairs += 1;
                let outside_sum = !kernel(self, &a.sum(b));
                let outside_both = !kernel(self, a) && !kernel(self, b);
                if outside_sum != outside_both {
                    report.violations.push(Violation::Addition { a: a.clone(), b: b.clone() });
                }
            }
        }
        report
    }

    /// Every normal-play winning move from `p` into the kernel also wins
    /// under misère play.
    pub fn kernel_winning_move_check<K>(&self, p: &Position, kernel: K) -> bool
    where
        K: Fn(&Engine, &Position) -> bool,
    {
        [true, false].into_iter().all(|left| {
            self.moves(p, left).into_iter().all(|q| {
                let wins = |o: OutcomeClass| if left { o.left_wins_second() } else { o.right_wins_second() };
                !(wins(self.outcome_normal(&q)) && kernel(self, &q)) || wins(self.outcome_misere(&q))
            })
        })
    }

    /// Distinct positions reachable from `p` in one move.
    pub fn moves(&self, p: &Position, left: bool) -> Vec<Position> {
        let mut out: BTreeSet<Position> = BTreeSet::new();
        for i in p.distinct_indices() {
            for &o in self.form(p.components()[i]).options(left) {
                out.insert(p.replace(i, o));
            }
        }
        out.into_iter().collect()
    }

    /// Whether, in `g + *`, the move to `g` is never a player's only winning
    /// move under either convention.
    pub fn star_move_check(&self, g: &Position) -> bool {
        let start = g.plus(FormId::STAR);
        let outcome = |q: &Position, normal: bool| if normal { self.outcome_normal(q) } else { self.outcome_misere(q) };
        [true, false].into_iter().all(|normal| {
            [true, false].into_iter().all(|left| {
                let wins = |q: &Position| {
                    let o = outcome(q, normal);
                    if left {
                        o.left_wins_second()
                    } else {
                        o.right_wins_second()
                    }
                };
                !wins(g) || self.moves(&start, left).iter().any(|q| q != g && wins(q))
            })
        })
    }

    /// Outcomes of `{xs}:1 + {xs}:-1` and of that sum plus `*`.
    pub fn counterexample_outcomes(&self, xs: &BTreeSet<u32>) -> Result<CounterexampleOutcomes> {
        let height = mex(xs.iter().copied());
        if height > 1 {
            return Err(Error::Precondition(format!("height of the nimber set is {height}, expected at most 1")));
        }
        let blue = self.mutant_flower(xs, crate::Dyadic::integer(1))?;
        let red = self.mutant_flower(xs, crate::Dyadic::integer(-1))?;
        let pair = Position::new([blue.whole, red.whole]);
        let pair_star = pair.plus(FormId::STAR);
        Ok(CounterexampleOutcomes {
            pair: (self.outcome_normal(&pair), self.outcome_misere(&pair)),
            pair_star: (self.outcome_normal(&pair_star), self.outcome_misere(&pair_star)),
        })
    }
}

impl MutantFlower {
    pub fn position(&self) -> Position {
        Position::single(self.whole)
    }
}
