//! Exhaustive family sweeps: enumerate every instance of a family up to a
//! bound, build each twin by the family rule, and solve all four outcomes.

use std::collections::BTreeSet;

use crate::arena::FormId;
use crate::dyadic::Dyadic;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::misere::TamenessClass;
use crate::position::Position;
use crate::twin::{multisets, FamilyRule, TwinReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub family: FamilyRule,
    pub bound: usize,
    pub instances: usize,
    pub failures: Vec<TwinReport>,
    /// Instances whose twin fails once the rule is flipped.
    pub flipped_failures: usize,
}

impl SweepReport {
    /// Every instance verified, and the flipped rule is caught at least once.
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && (self.instances == 0 || self.flipped_failures > 0)
    }
}

impl FamilyRule {
    /// Default sweep size: summand count, or birthday for tame impartial
    /// forms.
    pub fn default_bound(self) -> usize {
        match self {
            FamilyRule::Sprigs | FamilyRule::Flowers | FamilyRule::RestrictedWildflowers => 3,
            FamilyRule::MutantFlowers => 2,
            FamilyRule::TameImpartial => 4,
        }
    }
}

/// Every impartial form born by `day`, oldest first. Day 4 already has
/// 65536 forms, so larger days are refused.
pub fn impartial_forms_by_day(e: &Engine, day: usize) -> Result<Vec<FormId>> {
    if day > 4 {
        return Err(Error::Precondition(format!("impartial enumeration is limited to day 4, got {day}")));
    }
    let mut forms = vec![FormId::ZERO];
    for _ in 0..day {
        let older = forms.clone();
        assert!(older.len() < 32);
        forms = (0u64..1 << older.len())
            .map(|mask| {
                let opts: Vec<FormId> = (0..older.len()).filter(|&j| mask >> j & 1 == 1).map(|j| older[j]).collect();
                e.intern(opts.clone(), opts).expect("valid handles")
            })
            .collect();
    }
    Ok(forms)
}

fn dy(p: i64, q: u32) -> Dyadic {
    Dyadic::new(p, q)
}

/// The summands a family sweep draws from.
pub fn family_catalog(e: &Engine, family: FamilyRule) -> Vec<FormId> {
    let flower = |base: FormId, d: Dyadic| e.ordinal_sum(base, e.number(d));
    match family {
        FamilyRule::Sprigs => {
            [dy(-1, 0), dy(-1, 1), dy(0, 0), dy(1, 1), dy(1, 0)].into_iter().map(|a| flower(e.star(), a)).collect()
        }
        FamilyRule::Flowers => {
            (1..=3).flat_map(|n| [-1, 0, 1].map(|a| flower(e.nimber(n), Dyadic::integer(a)))).collect()
        }
        FamilyRule::MutantFlowers => (1u32..16)
            .flat_map(|mask| {
                let xs: BTreeSet<u32> = (0..4).filter(|b| mask >> b & 1 == 1).collect();
                [-1, 1].map(|a| e.mutant_flower(&xs, Dyadic::integer(a)).expect("nonempty"))
            })
            .filter(|m| m.in_closed_set())
            .map(|m| m.whole)
            .collect(),
        FamilyRule::TameImpartial => Vec::new(),
        FamilyRule::RestrictedWildflowers => {
            let fickle_a = e.superstar([0, 2, 3]);
            let fickle_b = e.superstar([1, 2, 3]);
            vec![
                flower(e.star(), dy(1, 0)),
                flower(e.star(), dy(-1, 1)),
                flower(fickle_a, dy(1, 0)),
                flower(fickle_b, dy(-1, 0)),
                flower(e.nimber(2), dy(-1, 0)),
                flower(e.nimber(3), dy(1, 1)),
                e.star(),
                e.nimber(2),
            ]
        }
    }
}

/// All positions a family sweep checks.
pub fn family_instances(e: &Engine, family: FamilyRule, bound: usize) -> Result<Vec<Position>> {
    if family == FamilyRule::TameImpartial {
        let forms = impartial_forms_by_day(e, bound)?;
        return Ok(forms
            .into_iter()
            .filter(|&g| e.classify_tameness(g, true).map(|t| t != TamenessClass::Wild).unwrap_or(false))
            .map(Position::single)
            .collect());
    }
    Ok(multisets(&family_catalog(e, family), bound))
}

pub fn run_family(e: &Engine, family: FamilyRule, bound: usize) -> Result<SweepReport> {
    let instances = family_instances(e, family, bound)?;
    let mut report =
        SweepReport { family, bound, instances: instances.len(), failures: Vec::new(), flipped_failures: 0 };
    for p in &instances {
        let r = e.twin_of(p, family)?;
        if !r.verified {
            report.failures.push(r);
        }
        if !e.twin_with(p, family, true)?.verified {
            report.flipped_failures += 1;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn impartial_counts_by_day() {
        let e = Engine::new();
        let counts: Vec<usize> = (0..4).map(|d| impartial_forms_by_day(&e, d).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 16]);
        assert!(impartial_forms_by_day(&e, 5).is_err());
    }

    #[test]
    fn catalogs_belong_to_their_family() {
        let e = Engine::new();
        for family in
            [FamilyRule::Sprigs, FamilyRule::Flowers, FamilyRule::MutantFlowers, FamilyRule::RestrictedWildflowers]
        {
            for g in family_catalog(&e, family) {
                assert!(e.twin_of(&Position::single(g), family).is_ok(), "{family} {}", e.format_form(g));
            }
        }
    }

    #[test]
    fn small_sweeps_pass() {
        let e = Engine::new();
        let r = run_family(&e, FamilyRule::Sprigs, 2).unwrap();
        assert_eq!(r.instances, 21);
        assert!(r.passed(), "{r:?}");
        assert!(run_family(&e, FamilyRule::TameImpartial, 2).unwrap().passed());
    }
}
