use std::fmt;

use serde::Serialize;

/// A failed check, with both sides of the violated identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub word: String,
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at position {} of {}: {} != {}",
            self.check, self.index, self.word, self.lhs, self.rhs
        )
    }
}
