//! Hash-consed store of literal game forms.
//!
//! Every form is interned exactly once, so two handles are equal iff the
//! game trees they denote are identical. Children always receive smaller ids
//! than their parents, which keeps the arena topologically ordered.

use std::collections::{BTreeSet, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use dashmap::DashMap;
use parking_lot::RwLock;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

/// Opaque handle to an interned form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormId(u32);

impl FormId {
    /// The empty game `{ | }`.
    pub const ZERO: FormId = FormId(0);
    /// `* = {0 | 0}`.
    pub const STAR: FormId = FormId(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A literal game form: sorted, duplicate-free option lists plus a few
/// attributes derived at intern time.
#[derive(Debug)]
pub struct Form {
    left: Box<[FormId]>,
    right: Box<[FormId]>,
    birthday: u32,
    impartial: bool,
    nimber: Option<u32>,
}

impl Form {
    pub fn left(&self) -> &[FormId] {
        &self.left
    }

    pub fn right(&self) -> &[FormId] {
        &self.right
    }

    pub fn options(&self, left: bool) -> &[FormId] {
        if left {
            &self.left
        } else {
            &self.right
        }
    }

    pub fn birthday(&self) -> u32 {
        self.birthday
    }

    /// Left and right option sets agree hereditarily.
    pub fn is_impartial(&self) -> bool {
        self.impartial
    }

    /// `Some(n)` when this form is literally `*n`.
    pub fn nimber(&self) -> Option<u32> {
        self.nimber
    }
}

impl PartialEq for Form {
    fn eq(&self, other: &Self) -> bool {
        self.left == other.left && self.right == other.right
    }
}

impl Eq for Form {}

impl Hash for Form {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.left.hash(state);
        self.right.hash(state);
    }
}

struct Store {
    forms: Vec<Arc<Form>>,
    index: HashMap<Arc<Form>, FormId>,
    nimbers: Vec<FormId>,
}

/// Interning arena. Reads take a shared lock; insertions are serialized.
pub struct Arena {
    store: RwLock<Store>,
    conjugates: DashMap<FormId, FormId>,
    ordinal_sums: DashMap<(FormId, FormId), FormId>,
    sums: DashMap<Vec<FormId>, FormId>,
    numbers: DashMap<Dyadic, FormId>,
}

impl Default for Arena {
    fn default() -> Self {
        Self::new()
    }
}

fn normalize(ids: impl IntoIterator<Item = FormId>) -> Box<[FormId]> {
    let mut v: Vec<FormId> = ids.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v.into_boxed_slice()
}

impl Arena {
    pub fn new() -> Self {
        let arena = Arena {
            store: RwLock::new(Store { forms: Vec::new(), index: HashMap::new(), nimbers: Vec::new() }),
            conjugates: DashMap::new(),
            ordinal_sums: DashMap::new(),
            sums: DashMap::new(),
            numbers: DashMap::new(),
        };
        let zero = arena.intern_trusted(Box::new([]), Box::new([]));
        let star = arena.intern_trusted(Box::new([zero]), Box::new([zero]));
        debug_assert_eq!((zero, star), (FormId::ZERO, FormId::STAR));
        arena.store.write().nimbers.extend([zero, star]);
        arena
    }

    pub fn len(&self) -> usize {
        self.store.read().forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, id: FormId) -> bool {
        id.index() < self.len()
    }

    /// Shared handle to the form behind `id`. Panics on a foreign id; use
    /// [`Arena::try_form`] for untrusted handles.
    pub fn form(&self, id: FormId) -> Arc<Form> {
        Arc::clone(&self.store.read().forms[id.index()])
    }

    pub fn try_form(&self, id: FormId) -> Result<Arc<Form>> {
        self.store.read().forms.get(id.index()).cloned().ok_or(Error::InvalidHandle(id))
    }

    /// Interns `{left | right}`, returning the existing handle when an
    /// identical form is already present.
    pub fn intern(
        &self,
        left: impl IntoIterator<Item = FormId>,
        right: impl IntoIterator<Item = FormId>,
    ) -> Result<FormId> {
        let left = normalize(left);
        let right = normalize(right);
        let len = self.len();
        if let Some(&bad) = left.iter().chain(right.iter()).find(|id| id.index() >= len) {
            return Err(Error::InvalidHandle(bad));
        }
        Ok(self.intern_trusted(left, right))
    }

    pub(crate) fn intern_sets(&self, left: Vec<FormId>, right: Vec<FormId>) -> FormId {
        self.intern_trusted(normalize(left), normalize(right))
    }

    fn intern_trusted(&self, left: Box<[FormId]>, right: Box<[FormId]>) -> FormId {
        let probe = {
            let store = self.store.read();
            let form = derive_form(&store, left, right);
            if let Some(&id) = store.index.get(&form) {
                return id;
            }
            form
        };
        let mut store = self.store.write();
        if let Some(&id) = store.index.get(&probe) {
            return id;
        }
        let id = FormId(u32::try_from(store.forms.len()).expect("arena overflow"));
        let form = Arc::new(probe);
        store.forms.push(Arc::clone(&form));
        store.index.insert(form, id);
        id
    }

    /// `*n = {*0, ..., *(n-1) | *0, ..., *(n-1)}`, built on first use.
    pub fn nimber(&self, n: u32) -> FormId {
        if let Some(&id) = self.store.read().nimbers.get(n as usize) {
            return id;
        }
        let mut k = self.store.read().nimbers.len() as u32;
        while k <= n {
            let opts: Box<[FormId]> = self.store.read().nimbers[..k as usize].into();
            let id = self.intern_trusted(opts.clone(), opts);
            let mut store = self.store.write();
            if store.nimbers.len() == k as usize {
                store.nimbers.push(id);
            }
            k = store.nimbers.len() as u32;
        }
        self.store.read().nimbers[n as usize]
    }

    /// Canonical (simplest-form) tree of a dyadic number.
    pub fn number(&self, value: Dyadic) -> FormId {
        if let Some(id) = self.numbers.get(&value) {
            return *id;
        }
        let id = if value.is_integer() {
            let n = value.numerator();
            let mut id = FormId::ZERO;
            for _ in 0..n.unsigned_abs() {
                id = if n > 0 {
                    self.intern_trusted(Box::new([id]), Box::new([]))
                } else {
                    self.intern_trusted(Box::new([]), Box::new([id]))
                };
            }
            id
        } else {
            let (lo, hi) = value.neighbours();
            let (lo, hi) = (self.number(lo), self.number(hi));
            self.intern_trusted(Box::new([lo]), Box::new([hi]))
        };
        self.numbers.insert(value, id);
        id
    }

    /// `↑ = {0 | *}`.
    pub fn up(&self) -> FormId {
        self.intern_trusted(Box::new([FormId::ZERO]), Box::new([FormId::STAR]))
    }

    /// `↓ = {* | 0}`.
    pub fn down(&self) -> FormId {
        self.intern_trusted(Box::new([FormId::STAR]), Box::new([FormId::ZERO]))
    }

    /// Recursively swaps the Left and Right option sets.
    pub fn conjugate(&self, g: FormId) -> FormId {
        let form = self.form(g);
        if form.impartial {
            return g;
        }
        if let Some(c) = self.conjugates.get(&g) {
            return *c;
        }
        let left = form.right.iter().map(|&x| self.conjugate(x)).collect();
        let right = form.left.iter().map(|&x| self.conjugate(x)).collect();
        let c = self.intern_sets(left, right);
        self.conjugates.insert(g, c);
        self.conjugates.insert(c, g);
        c
    }

    /// The literal ordinal sum `g:h = {g^L, g:h^L | g^R, g:h^R}`.
    pub fn ordinal_sum(&self, g: FormId, h: FormId) -> FormId {
        if h == FormId::ZERO {
            return g;
        }
        if let Some(id) = self.ordinal_sums.get(&(g, h)) {
            return *id;
        }
        let base = self.form(g);
        let top = self.form(h);
        let mut left: Vec<FormId> = base.left.to_vec();
        left.extend(top.left.iter().map(|&x| self.ordinal_sum(g, x)));
        let mut right: Vec<FormId> = base.right.to_vec();
        right.extend(top.right.iter().map(|&x| self.ordinal_sum(g, x)));
        let id = self.intern_sets(left, right);
        self.ordinal_sums.insert((g, h), id);
        id
    }

    /// Materializes the disjunctive sum of `parts` as one literal form.
    pub fn sum_form(&self, parts: &[FormId]) -> FormId {
        let mut key: Vec<FormId> = parts.iter().copied().filter(|&p| p != FormId::ZERO).collect();
        key.sort_unstable();
        match key.len() {
            0 => return FormId::ZERO,
            1 => return key[0],
            _ => {}
        }
        if let Some(id) = self.sums.get(&key) {
            return *id;
        }
        let forms: Vec<Arc<Form>> = key.iter().map(|&p| self.form(p)).collect();
        let mut sides = [Vec::new(), Vec::new()];
        for (side, out) in sides.iter_mut().enumerate() {
            for (i, form) in forms.iter().enumerate() {
                if i > 0 && key[i] == key[i - 1] {
                    continue;
                }
                for &opt in form.options(side == 0) {
                    let mut next = key.clone();
                    next[i] = opt;
                    out.push(self.sum_form(&next));
                }
            }
        }
        let [left, right] = sides;
        let id = self.intern_sets(left, right);
        self.sums.insert(key, id);
        id
    }

    /// `g` together with every form reachable from it.
    pub fn subpositions(&self, g: FormId) -> BTreeSet<FormId> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![g];
        while let Some(x) = stack.pop() {
            if seen.insert(x) {
                let form = self.form(x);
                stack.extend(form.left.iter().chain(form.right.iter()).copied());
            }
        }
        seen
    }

    pub fn birthday(&self, g: FormId) -> u32 {
        self.form(g).birthday
    }

    pub fn is_impartial(&self, g: FormId) -> bool {
        self.form(g).impartial
    }

    pub fn nimber_index(&self, g: FormId) -> Option<u32> {
        self.form(g).nimber
    }
}

fn derive_form(store: &Store, left: Box<[FormId]>, right: Box<[FormId]>) -> Form {
    let get = |id: &FormId| &store.forms[id.index()];
    let birthday = left.iter().chain(right.iter()).map(|id| get(id).birthday + 1).max().unwrap_or(0);
    let impartial = left == right && left.iter().all(|id| get(id).impartial);
    let nimber = (impartial && left.iter().enumerate().all(|(j, id)| get(id).nimber == Some(j as u32)))
        .then_some(left.len() as u32);
    Form { left, right, birthday, impartial, nimber }
}
