use super::cnf::CnfFormula;

/// Where one variable occurs, by 1-based clause number.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Occurrences {
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
}

impl Occurrences {
    /// `(r, s, t)` when the variable occurs once positively in clause `r`
    /// and negatively in clauses `s < t`.
    pub fn rst(&self) -> Option<(usize, usize, usize)> {
        match (self.positive.as_slice(), self.negative.as_slice()) {
            ([r], [s, t]) => Some((*r, *s.min(t), *s.max(t))),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToveyReport {
    pub ok: bool,
    pub occurrences: Vec<Occurrences>,
    pub odd_var_count: bool,
    pub problems: Vec<String>,
}

impl ToveyReport {
    pub fn rst(&self) -> Vec<(usize, usize, usize)> {
        self.occurrences.iter().filter_map(Occurrences::rst).collect()
    }
}

/// Checks that every variable occurs exactly once positively and twice
/// negatively, and (unless `allow_even`) that the variable count is odd.
pub fn validate_tovey(f: &CnfFormula, allow_even: bool) -> ToveyReport {
    let mut occurrences = vec![Occurrences::default(); f.num_vars()];
    for (k, clause) in f.clauses().iter().enumerate() {
        for &l in clause {
            let occ = &mut occurrences[l.unsigned_abs() as usize - 1];
            if l > 0 {
                occ.positive.push(k + 1);
            } else {
                occ.negative.push(k + 1);
            }
        }
    }
    let mut problems = Vec::new();
    for (i, occ) in occurrences.iter().enumerate() {
        if occ.rst().is_none() {
            problems.push(format!(
                "x{} occurs {} times positively and {} times negatively, expected 1 and 2",
                i + 1,
                occ.positive.len(),
                occ.negative.len()
            ));
        }
    }
    let odd_var_count = f.num_vars() % 2 == 1;
    if !odd_var_count && !allow_even {
        problems.push(format!("{} variables, expected an odd count", f.num_vars()));
    }
    ToveyReport { ok: problems.is_empty(), occurrences, odd_var_count, problems }
}

/// All Tovey-form formulas with `n` variables and `m` clauses, up to the
/// order of literals inside a clause. Variable `i` picks its positive
/// clause `r` and negative clauses `s < t`; every clause must end up with
/// two or three literals.
pub fn tovey_instances(n: usize, m: usize) -> Vec<CnfFormula> {
    let mut choices = Vec::new();
    for r in 1..=m {
        for s in 1..=m {
            for t in s + 1..=m {
                if r != s && r != t {
                    choices.push((r, s, t));
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut picked = Vec::with_capacity(n);
    let mut sizes = vec![0usize; m + 1];
    extend(n, m, &choices, &mut picked, &mut sizes, &mut out);
    out
}

fn extend(
    n: usize,
    m: usize,
    choices: &[(usize, usize, usize)],
    picked: &mut Vec<(usize, usize, usize)>,
    sizes: &mut [usize],
    out: &mut Vec<CnfFormula>,
) {
    if picked.len() == n {
        if sizes[1..].iter().all(|&s| (2..=3).contains(&s)) {
            let mut clauses = vec![Vec::new(); m];
            for (i, &(r, s, t)) in picked.iter().enumerate() {
                let v = i as i32 + 1;
                clauses[r - 1].push(v);
                clauses[s - 1].push(-v);
                clauses[t - 1].push(-v);
            }
            out.push(CnfFormula::new(n, clauses).expect("clause sizes checked"));
        }
        return;
    }
    let remaining = n - picked.len() - 1;
    for &(r, s, t) in choices {
        if sizes[r] == 3 || sizes[s] == 3 || sizes[t] == 3 {
            continue;
        }
        for c in [r, s, t] {
            sizes[c] += 1;
        }
        // Every clause still short of two literals must be fillable.
        let deficit: usize = sizes[1..].iter().map(|&s| 2usize.saturating_sub(s)).sum();
        if deficit <= 3 * remaining {
            picked.push((r, s, t));
            extend(n, m, choices, picked, sizes, out);
            picked.pop();
        }
        for c in [r, s, t] {
            sizes[c] -= 1;
        }
    }
}
