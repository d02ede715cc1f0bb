//! Standard seeds, the checks they are expected to pass, their mutations and
//! the exhaustive walk over all reduced words of the longest element.

mod quiver;
mod seed;
mod standard;
mod violation;
mod walk;

pub use quiver::{Arrow, ArrowKind, Occurrences, Quiver};
pub use seed::{bootstrap_b, build_quiver, flag_minor_key, FlagMinorKey, Seed, SeedReport};
pub use standard::{
    cuspidal_inputs, homogeneous_value, lex_word, minimal_representative, move_path, nat_word,
    standard_seed, transport, Start,
};
pub use violation::Violation;
pub use walk::{walk, Atlas, AtlasEntry, WalkLimits, WalkReport, WalkStats};

/// Free-function form of [`Seed::check_b`].
pub fn check_b(seed: &Seed) -> Vec<Violation> {
    seed.check_b()
}

/// Free-function form of [`Seed::check_c`].
pub fn check_c(seed: &Seed) -> Vec<Violation> {
    seed.check_c()
}

/// Free-function form of [`Seed::yhat_check`].
pub fn yhat_check(seed: &Seed, j: usize) -> bool {
    seed.yhat_check(j)
}

/// Free-function form of [`Seed::braid_mutate`].
pub fn braid_mutate(seed: &Seed, k: usize) -> crate::Result<Seed> {
    seed.braid_mutate(k)
}

/// Free-function form of [`Seed::commute_move`].
pub fn commute_move(seed: &Seed, k: usize) -> crate::Result<Seed> {
    seed.commute_move(k)
}
