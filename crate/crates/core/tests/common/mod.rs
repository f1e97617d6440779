//! Brute-force reimplementations used as ground truth by the integration
//! tests. Everything here works straight from the definitions (bitmask
//! enumeration, explicit cyclic adjacency) and deliberately shares no code
//! with the library internals it checks.
#![allow(dead_code)]

/// Stability from the definition: the subset lies in the ground set, has no
/// repeats, and contains no two elements that are cyclically consecutive in
/// the ground set's order.
pub fn independent_is_stable(ground: &[u32], subset: &[u32]) -> bool {
    for e in subset {
        if !ground.contains(e) {
            return false;
        }
    }
    for i in 0..subset.len() {
        for j in i + 1..subset.len() {
            if subset[i] == subset[j] {
                return false;
            }
        }
    }
    let m = ground.len();
    for i in 0..m {
        let a = ground[i];
        let b = ground[(i + 1) % m];
        if a != b && subset.contains(&a) && subset.contains(&b) {
            return false;
        }
    }
    true
}

/// All stable k-subsets of `ground`, in lexicographic order, by scanning
/// every bitmask. Only usable for small ground sets.
pub fn independent_stable_subsets(ground: &[u32], k: usize) -> Vec<Vec<u32>> {
    let m = ground.len();
    assert!(m < 26, "bitmask enumeration is limited to small ground sets");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << m) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let subset: Vec<u32> = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| ground[i])
            .collect();
        if independent_is_stable(ground, &subset) {
            out.push(subset);
        }
    }
    out.sort();
    out
}

/// Stable k-subsets of the path `1..=m` (no wraparound), counted by scanning
/// every bitmask for two adjacent chosen positions.
pub fn independent_path_count(m: usize, k: usize) -> u64 {
    assert!(m < 26);
    (0u32..(1u32 << m))
        .filter(|mask| mask.count_ones() as usize == k && mask & (mask << 1) == 0)
        .count() as u64
}

/// The coloring `A -> min(min(A), cap)` evaluated directly.
pub fn min_capped_color(subset: &[u32], cap: u32) -> u32 {
    subset.iter().copied().min().unwrap_or(cap).min(cap)
}

/// The unique monochromatic edge of the min-capped coloring on the full
/// ground set `[n]`: the two alternating stable k-subsets of the last `2k`
/// elements, colored `n - 2k + 1`.
pub fn merged_min_edge(n: u32, k: u32) -> (Vec<u32>, Vec<u32>, u32) {
    let start = n - 2 * k + 1;
    let a: Vec<u32> = (0..k).map(|i| start + 2 * i).collect();
    let b: Vec<u32> = (0..k).map(|i| start + 2 * i + 1).collect();
    (a, b, start)
}
