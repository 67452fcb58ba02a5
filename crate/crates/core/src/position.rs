use crate::arena::FormId;

/// A disjunctive sum, stored as a sorted multiset of form handles.
/// Zero components are dropped, so the empty position is the game 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position(Vec<FormId>);

impl Position {
    pub fn zero() -> Self {
        Position(Vec::new())
    }

    pub fn new(components: impl IntoIterator<Item = FormId>) -> Self {
        let mut v: Vec<FormId> = components.into_iter().filter(|&g| g != FormId::ZERO).collect();
        v.sort_unstable();
        Position(v)
    }

    pub fn single(g: FormId) -> Self {
        Position::new([g])
    }

    pub fn components(&self) -> &[FormId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self + g`.
    pub fn plus(&self, g: FormId) -> Position {
        let mut v = self.0.clone();
        if g == FormId::ZERO {
            return Position(v);
        }
        let at = v.partition_point(|&x| x <= g);
        v.insert(at, g);
        Position(v)
    }

    /// `self + other`.
    pub fn sum(&self, other: &Position) -> Position {
        Position::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// The position reached by replacing the component at `index` with `option`.
    pub fn replace(&self, index: usize, option: FormId) -> Position {
        let mut v = self.0.clone();
        v.remove(index);
        if option != FormId::ZERO {
            let at = v.partition_point(|&x| x <= option);
            v.insert(at, option);
        }
        Position(v)
    }

    /// Indices of the first copy of each distinct component.
    pub fn distinct_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len()).filter(|&i| i == 0 || self.0[i] != self.0[i - 1])
    }
}

impl FromIterator<FormId> for Position {
    fn from_iter<T: IntoIterator<Item = FormId>>(iter: T) -> Self {
        Position::new(iter)
    }
}
