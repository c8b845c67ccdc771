//! The toggle group and the actions built from it.

pub mod orbit;
pub mod rc;
pub mod word;

pub use orbit::{lcm_of, orbits, trajectory, Action, Orbit, OrbitOptions, OrbitPartition, WordAction};
pub use rc::{PathEnd, Position, RcPoset, Window};
pub use word::{
    column_toggle, conjugator_d, diagonal_word, gyration_word, promotion_word, row_toggle, rowmotion_word,
    superpromotion_word, toggle, CompiledWord, ToggleWord,
};
