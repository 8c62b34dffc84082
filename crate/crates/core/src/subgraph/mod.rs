//! Single-cluster problems: growing a highly connected component around a
//! seed set, and isolating a highly connected subgraph of a given size with
//! a small boundary.

mod connected_sets;
pub mod isolated;
mod seeded;

pub use connected_sets::enumerate_connected_sets;
pub use isolated::{
    isolated_feasible, solve_isolated, solve_isolated_case1, solve_isolated_case2,
    IsolatedInstance,
};
pub use seeded::{seeded_cost, solve_seeded, verify_seeded, SeededInstance};

/// Largest `r` with `r^3 <= k`.
pub(crate) fn cube_root_floor(k: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 1) * (r + 1) <= k {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    #[test]
    fn cube_roots() {
        let got: Vec<usize> = [0, 1, 7, 8, 26, 27, 64].map(super::cube_root_floor).to_vec();
        assert_eq!(got, vec![0, 1, 1, 2, 2, 3, 4]);
    }
}
