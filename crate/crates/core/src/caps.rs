/// Size limits for the exponential searches and the product constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest graph whose maximal independent sets may be enumerated (at most 64).
    pub enumeration: usize,
    /// Largest graph for which all greedy decompositions may be enumerated.
    pub greedy: usize,
    /// Largest vertex count `G.n * H.n` the product constructor will build.
    pub product: usize,
}

pub const DEFAULT_ENUMERATION_CAP: usize = 36;
pub const DEFAULT_GREEDY_CAP: usize = 10;
pub const DEFAULT_PRODUCT_CAP: usize = 4096;

/// Hard ceiling: the enumerator works on single-word masks.
pub const MAX_ENUMERATION_CAP: usize = 64;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            greedy: DEFAULT_GREEDY_CAP,
            product: DEFAULT_PRODUCT_CAP,
        }
    }
}
