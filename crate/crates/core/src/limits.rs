/// Size caps for the exhaustive searches.
///
/// Every search in the crate is exact; a cap turns an infeasible request into
/// an [`Error::CapExceeded`](crate::Error::CapExceeded) instead of a hang.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of elements produced by permutation closure.
    pub perm_closure: usize,
    /// Maximum group order for automorphism search.
    pub aut_search: usize,
    /// Maximum group order for isomorphism backtracking.
    pub iso_search: usize,
    /// Maximum `(n-1)!` for brute-force TAut/Aut filtering.
    pub taut_bruteforce: usize,
    /// Maximum order of a built extension group, and of any group table whose
    /// associativity is verified on load.
    pub extension: usize,
    /// Maximum order for right-loop enumeration.
    pub enumerate_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            perm_closure: 10080,
            aut_search: 24,
            iso_search: 120,
            taut_bruteforce: 40320,
            extension: 5040,
            enumerate_order: 6,
        }
    }
}
