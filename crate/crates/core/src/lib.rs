//! List accessing on a self-organizing list: serve request sequences under
//! the MTF, TRANS, and FC policies with position-based access costs, build
//! the four structured sequence types T1-T4, and predict MTF totals on them
//! with closed forms that simulation must match exactly.

pub mod error;
pub mod list;
pub mod policy;
pub mod predict;
pub mod seqgen;

pub use error::{Error, Result};
pub use list::{access_cost, CostModel, Item, ListState};
pub use policy::{policy_step, serve, FrequencyTable, PolicyKind, RequestRecord, SimulationResult};
pub use predict::{
    first_block_position_sum, predict_spec, predict_t1, predict_t2, predict_t3, predict_t4,
    Prediction,
};
pub use seqgen::{
    format_sequence_file, gen_t1, gen_t2, gen_t3, gen_t4, gen_t4_strict, parse_sequence_file,
    random_permutation, random_permutation_with, random_subsequence_with, RequestSequence,
    SequenceKind, SequenceSpec,
};
