use std::collections::{BTreeSet, HashSet};

use super::cnf::CnfFormula;
use super::tovey::validate_tovey;
use crate::arena::FormId;
use crate::dyadic::Dyadic;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::outcome::OutcomeClass;
use crate::position::Position;
use crate::taxonomy::Color;

/// The red flower built for one variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableGadget {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub big: u32,
    /// Nimber indices of the flower head, `{0, 1, a, b, c, d, big}`.
    pub xs: BTreeSet<u32>,
    pub x: FormId,
}

impl VariableGadget {
    /// Left's meaningful choices, in the order a witness search tries them.
    pub fn choices(&self) -> [u32; 5] {
        [self.a, self.b, self.c, self.d, 0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub num_vars: usize,
    pub num_clauses: usize,
    pub gadgets: Vec<VariableGadget>,
    /// The blue flower `*:1`, present `num_vars` times.
    pub y: FormId,
    /// Index of the trailing nimber, `2^(m+1) - 2`.
    pub tail: u32,
    pub position: Position,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssignmentWitness {
    pub choices: Vec<u32>,
    pub assignment: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Oracle,
    FullGame,
}

/// Size limit for solving the reduced game outright.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FullGameBound {
    pub max_vars: usize,
    pub max_clauses: usize,
}

impl Default for FullGameBound {
    fn default() -> Self {
        FullGameBound { max_vars: 3, max_clauses: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub satisfiable: bool,
    pub xor_cover: bool,
    /// `o+(G)`, only in full-game mode.
    pub outcome: Option<OutcomeClass>,
    /// Left wins moving second, only in full-game mode.
    pub left_wins_second: Option<bool>,
    pub agree: bool,
}

/// Replays a witness: `N_0 = tail`, `N_i = N_(i-1) xor choice_i`.
pub fn trace(tail: u32, choices: &[u32]) -> Vec<u32> {
    let mut out = vec![tail];
    for &c in choices {
        out.push(out.last().unwrap() ^ c);
    }
    out
}

fn tovey_rst(f: &CnfFormula, allow_even: bool) -> Result<Vec<(usize, usize, usize)>> {
    let report = validate_tovey(f, allow_even);
    if !report.ok {
        return Err(Error::NotTovey(report.problems.join("; ")));
    }
    let (n, m) = (f.num_vars(), f.num_clauses());
    if n + m > 31 {
        return Err(Error::SizeBoundExceeded {
            vars: n,
            clauses: m,
            max_vars: 31 - m.min(31),
            max_clauses: 31 - n.min(31),
        });
    }
    Ok(report.rst())
}

/// Per-variable bits without building any games.
fn gadget_bits(f: &CnfFormula, allow_even: bool) -> Result<(Vec<[u32; 5]>, u32)> {
    let rst = tovey_rst(f, allow_even)?;
    let m = f.num_clauses() as u32;
    let bits = rst.iter().map(|&(r, s, t)| [1 << r, (1 << s) + (1 << t), 1 << s, 1 << t, 0]).collect();
    Ok((bits, (1 << (m + 1)) - 2))
}

/// Finds choices `l_i` among `{a_i, b_i, c_i, d_i, 0}` whose xor equals the
/// tail `2^(m+1) - 2`, preferring earlier entries of that list variable by
/// variable.
pub fn xor_cover(f: &CnfFormula, allow_even: bool) -> Result<Option<AssignmentWitness>> {
    let (bits, tail) = gadget_bits(f, allow_even)?;
    let n = bits.len();
    // reach[i]: xor values attainable by variables i..n.
    let mut reach: Vec<HashSet<u32>> = vec![HashSet::new(); n + 1];
    reach[n].insert(0);
    for i in (0..n).rev() {
        let next: HashSet<u32> = reach[i + 1].iter().flat_map(|&v| bits[i].iter().map(move |&c| v ^ c)).collect();
        reach[i] = next;
    }
    if !reach[0].contains(&tail) {
        return Ok(None);
    }
    let mut need = tail;
    let mut choices = Vec::with_capacity(n);
    for i in 0..n {
        let c = *bits[i].iter().find(|&&c| reach[i + 1].contains(&(need ^ c))).expect("reachable by construction");
        choices.push(c);
        need ^= c;
    }
    let assignment = choices.iter().zip(&bits).map(|(&c, b)| c == b[0]).collect();
    Ok(Some(AssignmentWitness { choices, assignment }))
}

impl Engine {
    pub fn build_reduction(&self, f: &CnfFormula, allow_even: bool) -> Result<ReductionOutput> {
        let rst = tovey_rst(f, allow_even)?;
        let (n, m) = (f.num_vars(), f.num_clauses());
        let minus_one = Dyadic::integer(-1);
        let gadgets: Vec<VariableGadget> = rst
            .iter()
            .enumerate()
            .map(|(i, &(r, s, t))| {
                let (a, b, c, d) = (1 << r, (1 << s) + (1 << t), 1 << s, 1 << t);
                let big = 1 << (m + i + 1);
                let xs: BTreeSet<u32> = [0, 1, a, b, c, d, big].into_iter().collect();
                let x = self.mutant_flower(&xs, minus_one).expect("nonempty").whole;
                VariableGadget { r, s, t, a, b, c, d, big, xs, x }
            })
            .collect();
        let y = self.ordinal_sum(self.star(), self.integer(1));
        let tail = (1u32 << (m + 1)) - 2;
        let parts = gadgets.iter().map(|g| g.x).chain(std::iter::repeat_n(y, n)).chain([self.nimber(tail)]);
        let position = Position::new(parts);
        Ok(ReductionOutput { num_vars: n, num_clauses: m, gadgets, y, tail, position })
    }

    pub fn verify_equivalence(
        &self,
        f: &CnfFormula,
        mode: VerifyMode,
        allow_even: bool,
        bound: FullGameBound,
    ) -> Result<EquivalenceReport> {
        let satisfiable = f.brute_force_sat().is_some();
        let cover = xor_cover(f, allow_even)?.is_some();
        let (outcome, left_wins_second) = match mode {
            VerifyMode::Oracle => (None, None),
            VerifyMode::FullGame => {
                let (n, m) = (f.num_vars(), f.num_clauses());
                if n > bound.max_vars || m > bound.max_clauses {
                    return Err(Error::SizeBoundExceeded {
                        vars: n,
                        clauses: m,
                        max_vars: bound.max_vars,
                        max_clauses: bound.max_clauses,
                    });
                }
                let red = self.build_reduction(f, allow_even)?;
                let o = self.outcome_normal(&red.position);
                (Some(o), Some(o.left_wins_second()))
            }
        };
        let agree = satisfiable == cover && left_wins_second.is_none_or(|w| w == satisfiable);
        Ok(EquivalenceReport { satisfiable, xor_cover: cover, outcome, left_wins_second, agree })
    }

    /// Walks the line where Right answers each Left move by taking a blue
    /// flower to 0, and checks at every Left turn that moving a red flower
    /// to its big nimber never wins. Along the way Left plays the witness
    /// choices when a witness exists.
    pub fn big_nimber_lemma_holds(&self, red: &ReductionOutput, witness: Option<&AssignmentWitness>) -> bool {
        let mut pos = red.position.clone();
        for (i, gadget) in red.gadgets.iter().enumerate() {
            let Some(at) = pos.components().iter().position(|&c| c == red.y) else {
                return false;
            };
            pos = pos.replace(at, FormId::ZERO);
            for g in &red.gadgets[i..] {
                let at = pos.components().iter().position(|&c| c == g.x).expect("gadget still present");
                let q = pos.replace(at, self.nimber(g.big));
                if self.outcome_normal(&q).left_wins_second() {
                    return false;
                }
            }
            let Some(w) = witness else {
                break;
            };
            let at = pos.components().iter().position(|&c| c == gadget.x).expect("gadget still present");
            pos = pos.replace(at, self.nimber(w.choices[i]));
        }
        true
    }

    /// Every `X_i` is red, every `Y_i` blue, and the flower count is zero.
    pub fn color_lemma_holds(&self, red: &ReductionOutput) -> bool {
        let colored = |g: FormId, want: Color| self.color(&self.wildflower(g)) == want;
        red.gadgets.iter().all(|g| colored(g.x, Color::Red))
            && colored(red.y, Color::Blue)
            && self.flower_count_aw(&red.position).ok() == Some(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::cnf::parse_dimacs;

    fn omega() -> CnfFormula {
        parse_dimacs("p cnf 3 4\n1 2 0\n-2 -3 0\n-1 -3 0\n-1 -2 3 0\n").unwrap()
    }

    #[test]
    fn omega_gadgets() {
        let e = Engine::new();
        let red = e.build_reduction(&omega(), false).unwrap();
        let heads: Vec<Vec<u32>> = red.gadgets.iter().map(|g| g.xs.iter().copied().collect()).collect();
        assert_eq!(heads[0], vec![0, 1, 2, 8, 16, 24, 32]);
        assert_eq!(heads[1], vec![0, 1, 2, 4, 16, 20, 64]);
        assert_eq!(heads[2], vec![0, 1, 4, 8, 12, 16, 128]);
        assert_eq!(red.tail, 30);
        assert_eq!(red.position.len(), 7);
        assert!(e.color_lemma_holds(&red));
    }

    #[test]
    fn omega_witness_and_trace() {
        let w = xor_cover(&omega(), false).unwrap().unwrap();
        assert_eq!(w.choices, vec![2, 20, 8]);
        assert_eq!(w.assignment, vec![true, false, false]);
        assert_eq!(trace(30, &w.choices), vec![30, 28, 8, 0]);
    }

    #[test]
    fn rejects_non_tovey() {
        let e = Engine::new();
        let f = CnfFormula::new(3, omega().clauses()[..3].to_vec()).unwrap();
        assert!(matches!(e.build_reduction(&f, false), Err(Error::NotTovey(_))));
        assert!(matches!(xor_cover(&f, false), Err(Error::NotTovey(_))));
    }

    #[test]
    fn full_game_bound() {
        let e = Engine::new();
        let tight = FullGameBound { max_vars: 2, max_clauses: 4 };
        assert!(matches!(
            e.verify_equivalence(&omega(), VerifyMode::FullGame, false, tight),
            Err(Error::SizeBoundExceeded { vars: 3, .. })
        ));
        let r = e.verify_equivalence(&omega(), VerifyMode::Oracle, false, FullGameBound::default()).unwrap();
        assert!(r.agree && r.satisfiable && r.outcome.is_none());
    }
}
