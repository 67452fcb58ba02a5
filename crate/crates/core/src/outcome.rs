use std::cmp::Ordering;
use std::fmt;

/// Outcome class of a game under a fixed play convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutcomeClass {
    /// Left wins whoever starts.
    L,
    /// Right wins whoever starts.
    R,
    /// The player to move wins.
    N,
    /// The player to move loses.
    P,
}

impl OutcomeClass {
    pub fn from_first_player_wins(left_wins_first: bool, right_wins_first: bool) -> Self {
        match (left_wins_first, right_wins_first) {
            (true, false) => OutcomeClass::L,
            (false, true) => OutcomeClass::R,
            (true, true) => OutcomeClass::N,
            (false, false) => OutcomeClass::P,
        }
    }

    pub fn left_wins_first(self) -> bool {
        matches!(self, OutcomeClass::L | OutcomeClass::N)
    }

    pub fn right_wins_first(self) -> bool {
        matches!(self, OutcomeClass::R | OutcomeClass::N)
    }

    /// Left wins when Right has to start.
    pub fn left_wins_second(self) -> bool {
        !self.right_wins_first()
    }

    pub fn right_wins_second(self) -> bool {
        !self.left_wins_first()
    }

    /// Outcome of the conjugate game.
    pub fn swap(self) -> Self {
        match self {
            OutcomeClass::L => OutcomeClass::R,
            OutcomeClass::R => OutcomeClass::L,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OutcomeClass::L => "L",
            OutcomeClass::R => "R",
            OutcomeClass::N => "N",
            OutcomeClass::P => "P",
        }
    }

    fn rank(self) -> u8 {
        match self {
            OutcomeClass::R => 0,
            OutcomeClass::N | OutcomeClass::P => 1,
            OutcomeClass::L => 2,
        }
    }
}

/// Favourability for Left: `L` on top, `R` at the bottom, `N` and `P`
/// incomparable.
impl PartialOrd for OutcomeClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        match self.rank().cmp(&other.rank()) {
            Ordering::Equal => None,
            ord => Some(ord),
        }
    }
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::OutcomeClass::*;

    #[test]
    fn poset() {
        assert!(L > N && L > P && N > R && P > R && L > R);
        assert_eq!(N.partial_cmp(&P), None);
        assert!(P.partial_cmp(&N).is_none());
        assert!(N >= N);
    }

    #[test]
    fn first_player_bits_round_trip() {
        for o in [L, R, N, P] {
            let back = super::OutcomeClass::from_first_player_wins(o.left_wins_first(), o.right_wins_first());
            assert_eq!(back, o);
            assert_eq!(o.swap().swap(), o);
        }
    }
}
