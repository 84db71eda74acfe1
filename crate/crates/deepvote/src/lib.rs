//! Voting by depth: consensus rankings as minimizers of a power mean of
//! ranking distances.
//!
//! A profile collects one full ranking per voter over a shared candidate
//! set. For a distance `d` between rankings and an exponent `p >= 1`, every
//! candidate ranking `s` gets the functional value
//!
//! ```text
//! U(s) = (1/n) * sum over voters v of d(s, s_v)^p
//! ```
//!
//! The rankings minimizing `U` are the deepest rankings of the profile, and
//! the election winners are the candidates they rank first. Depending on the
//! distance and `p` this recovers familiar rules: Kendall with `p = 1` is
//! Kemeny, squared rank displacement with `p = 2` is Borda, and first/last
//! place weight matrices recover plurality and antiplurality. The [`rules`]
//! module implements those classical rules independently so the equivalences
//! can be checked rather than assumed, [`axioms`] probes social choice
//! properties on sampled profiles, and [`continuous`] carries the same depth
//! idea to real-valued rank vectors.
//!
//! Winner sets are never tie-broken; every operation reports full sets.

pub mod axioms;
pub mod cases;
pub mod continuous;
pub mod frechet;
pub mod io;
pub mod metrics;
pub mod ranking;
pub mod replication;
pub mod report;
pub mod rules;

pub use frechet::{deepest_set, DeepestResult, FrechetParams};
pub use metrics::{Distance, WeightMatrix};
pub use ranking::{Profile, Ranking};
