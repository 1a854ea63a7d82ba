//! Published worked examples: `q = 4`, `m = 5`, `pi = (1, 0, 2)`, `c = 0`,
//! and `n = 2` for the family.

pub const Q: u32 = 4;
pub const M: usize = 5;
pub const N_FAMILY: usize = 2;
pub const PI: [usize; 3] = [1, 0, 2];
pub const LENGTH: usize = 18;
pub const ZCZ: usize = 5;

pub const SEQ_A: [u32; 18] = [0, 0, 0, 0, 2, 0, 2, 0, 0, 2, 2, 0, 2, 2, 0, 0, 0, 2];
pub const SEQ_B: [u32; 18] = [0, 0, 0, 0, 2, 2, 0, 2, 2, 2, 2, 0, 2, 0, 2, 2, 2, 0];
pub const SEQ_C: [u32; 18] = [0, 2, 2, 2, 0, 2, 0, 2, 2, 2, 2, 0, 2, 2, 0, 0, 0, 0];
pub const SEQ_D: [u32; 18] = [0, 2, 2, 2, 0, 0, 2, 0, 0, 2, 2, 0, 2, 0, 2, 2, 2, 2];

/// Printed `|C(a,d)(tau) + C(b,c)(tau)|`, listed for `tau = -17..=17`.
pub const MATE_SWAP_MAGNITUDES: [u64; 35] = [
    0, 0, 0, 0, 0, 4, 0, 4, 8, 0, 12, 0, 4, 4, 4, 4, 12, 4, 4, 4, 12, 4, 4, 0, 12, 0, 0, 4, 8, 4, 0, 0,
    0, 0, 0,
];

/// First shift of the printed magnitude listing.
pub const MATE_SWAP_FIRST_TAU: i64 = -17;

pub const FAMILY_SHAPE: (usize, usize, usize, usize) = (8, 8, 18, 5);
