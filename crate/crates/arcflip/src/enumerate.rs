//! Exhaustive small-graph enumeration up to isomorphism, used by the
//! validation sweeps and the `oracle` tooling.

use std::collections::HashSet;

use crate::graph::Graph;

/// Adjacency masks (n <= 16) in some canonical labeling.
type Masks = Vec<u16>;

fn canonical_key(masks: &Masks) -> u64 {
    let n = masks.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut key = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                key <<= 1;
                if masks[perm[i]] & (1 << perm[j]) != 0 {
                    key |= 1;
                }
            }
        }
        best = best.min(key);
        if !next_perm(&mut perm) {
            break;
        }
    }
    best
}

fn next_perm(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn key_to_graph(key: u64, n: usize) -> Graph {
    let bits = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if key >> (bits - 1 - idx) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// All graphs on exactly `n` vertices, one per isomorphism class
/// (n <= 8; n = 7 yields 1044 graphs).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "enumeration supports n <= 8");
    if n == 0 {
        return vec![Graph::from_edges(0, &[]).unwrap()];
    }
    let mut level: HashSet<u64> = HashSet::from([0u64]); // the 1-vertex graph
    for k in 1..n {
        let mut next = HashSet::new();
        for &key in &level {
            let base = key_to_graph(key, k);
            for nb in 0u16..(1 << k) {
                let mut masks: Masks = (0..k)
                    .map(|v| {
                        base.neighbors(v)
                            .iter()
                            .fold(0u16, |m, &u| m | (1 << u))
                    })
                    .collect();
                let mut new_mask = 0u16;
                for v in 0..k {
                    if nb & (1 << v) != 0 {
                        masks[v] |= 1 << k;
                        new_mask |= 1 << v;
                    }
                }
                masks.push(new_mask);
                next.insert(canonical_key(&masks));
            }
        }
        level = next;
    }
    let mut keys: Vec<u64> = level.into_iter().collect();
    keys.sort_unstable();
    keys.into_iter().map(|k| key_to_graph(k, n)).collect()
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(|g| g.is_connected()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        // reference counts for graphs up to isomorphism
        assert_eq!(all_graphs(1).len(), 1);
        assert_eq!(all_graphs(2).len(), 2);
        assert_eq!(all_graphs(3).len(), 4);
        assert_eq!(all_graphs(4).len(), 11);
        assert_eq!(all_graphs(5).len(), 34);
        assert_eq!(all_graphs(6).len(), 156);
    }

    #[test]
    fn connected_counts() {
        assert_eq!(connected_graphs(4).len(), 6);
        assert_eq!(connected_graphs(5).len(), 21);
        assert_eq!(connected_graphs(6).len(), 112);
    }
}
