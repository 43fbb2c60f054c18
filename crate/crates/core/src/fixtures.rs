//! Small machines for tests and experiments.

use crate::tm::{Action, Direction, TmSpec};

fn mv(dir: Direction, state: u16, color: u16) -> Action {
    Action::Move { dir, state, color }
}

/// Two states, two colors, halting on `(1, 1)`.
pub fn two_state_halter() -> TmSpec {
    use Direction::{Left as L, Right as R};
    TmSpec::new(
        2,
        2,
        vec![mv(R, 1, 1), mv(L, 0, 0), mv(L, 0, 1), Action::Stop],
    )
    .expect("fixture is well formed")
}

/// Two states, two colors, no Stop entry at all.
pub fn two_state_looper() -> TmSpec {
    use Direction::{Left as L, Right as R};
    TmSpec::new(
        2,
        2,
        vec![mv(R, 1, 1), mv(L, 0, 0), mv(L, 0, 1), mv(R, 1, 0)],
    )
    .expect("fixture is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_expected_stop_pairs() {
        assert_eq!(two_state_halter().stop_pairs().collect::<Vec<_>>(), vec![(1, 1)]);
        assert_eq!(two_state_looper().stop_pairs().count(), 0);
    }
}
