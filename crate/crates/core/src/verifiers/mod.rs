//! Statement-level verification: single-instance checks, the extremal
//! family, seeded campaigns and the proof trace.

mod campaign;
mod extremal;
pub mod generate;
mod replay;
mod statements;
mod trace;

pub use campaign::{check_conjecture, exhaustive_pair_campaign, run_campaign, CampaignConfig, EXHAUSTIVE_MAX_P};
pub use extremal::{check_extremal, make_extremal, ExtremalInstance};
pub use replay::replay;
pub use statements::*;
pub use trace::trace_main_proof;
