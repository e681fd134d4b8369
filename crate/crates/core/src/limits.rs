use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::max_degree`].
pub const MAX_DEGREE_ENV: &str = "CARLITZ_MAX_DEGREE";

pub const DEFAULT_MAX_DEGREE: u64 = 1_000_000;
pub const DEFAULT_MAX_ENUMERATION: u64 = 1 << 24;

/// Size guards applied before any computation whose output could explode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest polynomial degree in `T` a computation may produce.
    pub max_degree: u64,
    /// Largest number of items an enumeration (of `A(d)`, compositions, ...) may visit.
    pub max_enumeration: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: DEFAULT_MAX_DEGREE,
            max_enumeration: DEFAULT_MAX_ENUMERATION,
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            max_degree: u64::MAX,
            max_enumeration: u64::MAX,
        }
    }

    /// Defaults, with the degree cap taken from `CARLITZ_MAX_DEGREE` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_DEGREE_ENV) {
            limits.max_degree = raw.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{MAX_DEGREE_ENV}={raw:?} is not a non-negative integer"))
            })?;
        }
        Ok(limits)
    }

    pub fn check_degree(&self, degree: u128) -> Result<()> {
        if degree > self.max_degree as u128 {
            return Err(Error::DegreeCap {
                degree: degree.to_string(),
                cap: self.max_degree,
            });
        }
        Ok(())
    }

    pub fn check_enumeration(&self, size: u128) -> Result<()> {
        if size > self.max_enumeration as u128 {
            return Err(Error::EnumerationCap {
                size: size.to_string(),
                cap: self.max_enumeration,
            });
        }
        Ok(())
    }
}

/// `base^exp` as u128, or `None` on overflow.
pub(crate) fn checked_pow(base: u64, exp: u64) -> Option<u128> {
    let exp = u32::try_from(exp).ok()?;
    (base as u128).checked_pow(exp)
}
