use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse group spec `{spec}`: {reason}")]
    SpecParse { spec: String, reason: String },
    #[error("invalid group spec: {0}")]
    SpecInvalid(String),
    #[error("group order {order} exceeds the cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("more than {cap} subgroups; raise the subgroup cap to enumerate this group")]
    SubgroupCapExceeded { cap: usize },
    #[error("{p} is not a prime divisor of the group order {order}")]
    PrimeNotInOrder { p: usize, order: usize },
    #[error("poset elements {a} and {b} are not comparable")]
    NotComparable { a: usize, b: usize },
}

impl Error {
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. } | Error::SubgroupCapExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Resource caps shared by construction and enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_subgroups: usize,
}

impl Limits {
    pub const DEFAULT_MAX_ORDER: usize = 512;
    pub const DEFAULT_MAX_SUBGROUPS: usize = 100_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: Self::DEFAULT_MAX_ORDER,
            max_subgroups: Self::DEFAULT_MAX_SUBGROUPS,
        }
    }
}
