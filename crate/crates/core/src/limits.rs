//! Resource caps shared across modules. Every cap errors loudly instead of
//! degrading silently; the CLI can override each one.

#[derive(Debug, Clone)]
pub struct Limits {
    /// Maximum number of group elements enumerated by X(N) (N^m <= cap).
    pub enumeration_cap: u64,
    /// Maximum estimated total decimal digits in an exact evaluation matrix.
    pub digit_cap: f64,
    /// Exact structural rank: maximum number of pencil symbols.
    pub exact_max_symbols: usize,
    /// Exact structural rank: maximum matrix dimension.
    pub exact_max_dim: usize,
    /// Maximum number of linear factors in a product polynomial ((3N)^2 <= cap).
    pub product_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_cap: 1_000_000,
            digit_cap: 1_000_000.0,
            exact_max_symbols: 6,
            exact_max_dim: 8,
            product_cap: 4096,
        }
    }
}
