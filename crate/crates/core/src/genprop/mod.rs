//! Instance generators for property testing, plus the element-enumeration
//! oracle.
//!
//! Generation is deterministic: all randomness flows through an explicit
//! [`Rng`] seeded from the configuration, so the same [`GenConfig`] always
//! streams identical instances. The oracle is a clean-room reimplementation
//! of element-level semantics — it reads only the raw invariant factors and
//! matrix entries and shares no code with the Smith-normal-form machinery,
//! so agreement between the two is evidence rather than tautology.

mod generate;
pub mod oracle;

pub use generate::{
    gen_ladder, gen_nine_grid, random_automorphism, random_epic, random_hom, random_monic,
    random_object, random_ses,
};

use serde::{Deserialize, Serialize};

/// Ladder construction schemes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LadderScheme {
    /// Both rows split; the middle map is assembled blockwise from drawn
    /// verticals and an off-diagonal twist.
    SplitSplit,
    /// Top row from a random epi and its kernel, bottom row split.
    EpiKernelTopSplitBottom,
    /// Either base scheme, then every object conjugated by a random
    /// automorphism.
    Conjugated,
}

impl std::str::FromStr for LadderScheme {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "split_split" => Ok(LadderScheme::SplitSplit),
            "epi_kernel_top_split_bottom" => Ok(LadderScheme::EpiKernelTopSplitBottom),
            "conjugated" => Ok(LadderScheme::Conjugated),
            other => Err(crate::Error::InvalidInput(format!(
                "unknown scheme '{other}'"
            ))),
        }
    }
}

impl LadderScheme {
    pub fn as_str(self) -> &'static str {
        match self {
            LadderScheme::SplitSplit => "split_split",
            LadderScheme::EpiKernelTopSplitBottom => "epi_kernel_top_split_bottom",
            LadderScheme::Conjugated => "conjugated",
        }
    }
}

/// Deterministic generation parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    /// Maximum number of cyclic summands per drawn object.
    pub max_rank: usize,
    /// Invariant factors to draw from; `0` adds free summands.
    pub factor_pool: Vec<u64>,
    /// Order bound for instances meant for the element oracle.
    pub max_order: u64,
    pub scheme: LadderScheme,
}

impl GenConfig {
    pub fn new(seed: u64, scheme: LadderScheme) -> Self {
        GenConfig {
            seed,
            max_rank: 2,
            factor_pool: vec![2, 3, 4, 8],
            max_order: 64,
            scheme,
        }
    }

    pub fn rng(&self) -> Rng {
        Rng::new(self.seed)
    }
}

/// SplitMix64: tiny, portable, and deterministic across platforms.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `[0, n)`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    pub fn below_usize(&mut self, n: usize) -> usize {
        self.below(n as u64) as usize
    }

    /// Draw in `[lo, hi]` inclusive.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}
