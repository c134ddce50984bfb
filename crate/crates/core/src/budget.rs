/// Resource limits shared by the search procedures.
///
/// Every operation that would exceed one of these fails with
/// [`Error::Budget`](crate::Error::Budget) rather than guessing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Largest group whose elements may be listed explicitly.
    pub elements: usize,
    /// Largest index `[H:N]` for a coset-action quotient.
    pub index: usize,
    /// Largest group handed to full subgroup enumeration.
    pub subgroups: usize,
    /// Largest `|N_U(G) : G|` for integrability candidate enumeration.
    pub candidates: usize,
    /// Largest number of elements visited by an exact normalizer scan.
    pub scan: u64,
    /// Maximum recursion depth for integrability reductions.
    pub depth: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            elements: 100_000,
            index: 100_000,
            subgroups: 2048,
            candidates: 10_000,
            scan: 10_000_000,
            depth: 4,
        }
    }
}

impl Budgets {
    /// Defaults overridden by `DERIVANT_BUDGET_ELEMENTS`, `DERIVANT_BUDGET_INDEX`,
    /// `DERIVANT_BUDGET_SUBGROUPS`, `DERIVANT_BUDGET_CANDIDATES` and
    /// `DERIVANT_BUDGET_SCAN` when set.
    pub fn from_env() -> Self {
        fn read<T: std::str::FromStr>(key: &str, default: T) -> T {
            std::env::var(key).ok().and_then(|v| v.parse().ok()).unwrap_or(default)
        }
        let d = Budgets::default();
        Budgets {
            elements: read("DERIVANT_BUDGET_ELEMENTS", d.elements),
            index: read("DERIVANT_BUDGET_INDEX", d.index),
            subgroups: read("DERIVANT_BUDGET_SUBGROUPS", d.subgroups),
            candidates: read("DERIVANT_BUDGET_CANDIDATES", d.candidates),
            scan: read("DERIVANT_BUDGET_SCAN", d.scan),
            depth: d.depth,
        }
    }
}
