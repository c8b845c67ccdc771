//! Equivariant bijections from ideals to words, tableaux, matchings and matrices.

pub mod asm;
pub mod boundary;
pub mod matching;
pub mod plane;
pub mod tableau;

pub use asm::{
    asm_from_height, gyration_heights, height_from_asm, height_to_ideal, ideal_to_height, AsmMatrix, HeightFunction,
};
pub use boundary::{
    boundary_word, halfsquare_ideal, halfsquare_word, row_boundary_ideal, row_boundary_word, word_to_ideal, BinaryWord,
};
pub use matching::{
    matching_from_word_a, matching_from_word_b, word_from_matching_a, word_from_matching_b, NoncrossingMatching,
};
pub use plane::{
    boundary_path_matrix, bracket_matrix, bracket_word, matrix_to_ideal, noncrossing_partition, psi,
    BoundaryPathMatrix, Bracket, BracketWord, SetPartition,
};
pub use tableau::{ideal_to_syt, syt_to_ideal, SkewShape, SkewTableau};
