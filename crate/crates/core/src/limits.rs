/// Size guards for the exponential-time routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set accepted by the axiom checkers and covector closure.
    pub max_n: usize,
    /// Largest rank accepted by the axiom checkers.
    pub max_rank: usize,
    /// Largest number of sign positions `C(n, r)` for exhaustive enumeration.
    pub max_positions: usize,
    /// Largest rank for the Fourier-Motzkin oracle.
    pub max_fm_rank: usize,
    /// Largest ground set for the Fourier-Motzkin oracle.
    pub max_fm_n: usize,
}

pub const OVERRIDE_ENV: &str = "OM_SIZE_OVERRIDE";

impl Limits {
    pub const STANDARD: Limits = Limits {
        max_n: 9,
        max_rank: 5,
        max_positions: 20,
        max_fm_rank: 4,
        max_fm_n: 8,
    };

    pub const UNLIMITED: Limits = Limits {
        max_n: usize::MAX,
        max_rank: usize::MAX,
        max_positions: usize::MAX,
        max_fm_rank: usize::MAX,
        max_fm_n: usize::MAX,
    };

    /// Standard limits, or none at all when `OM_SIZE_OVERRIDE=1` is set.
    pub fn from_env() -> Self {
        match std::env::var(OVERRIDE_ENV) {
            Ok(v) if v.trim() == "1" => Limits::UNLIMITED,
            _ => Limits::STANDARD,
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::from_env()
    }
}
