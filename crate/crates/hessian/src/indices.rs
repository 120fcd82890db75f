//! Index combinatorics: the ten 3-subsets and ten 2-subsets of {1..5}
//! that label the node and line classes, and the fixed basis order.

/// 3-subsets of {1..5} in lexicographic order; these index the node
/// classes and the chamber-moving involutions.
pub const TRIPLES: [[u8; 3]; 10] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 2, 5],
    [1, 3, 4],
    [1, 3, 5],
    [1, 4, 5],
    [2, 3, 4],
    [2, 3, 5],
    [2, 4, 5],
    [3, 4, 5],
];

/// 2-subsets of {1..5} in lexicographic order; these index the line
/// classes.
pub const PAIRS: [[u8; 2]; 10] = [
    [1, 2],
    [1, 3],
    [1, 4],
    [1, 5],
    [2, 3],
    [2, 4],
    [2, 5],
    [3, 4],
    [3, 5],
    [4, 5],
];

/// Line classes appearing in the fixed lattice basis, in basis order.
pub const BASIS_PAIRS: [[u8; 2]; 6] = [[4, 5], [3, 5], [3, 4], [2, 5], [2, 4], [1, 3]];

/// Line classes that have to be reconstructed from the pairing relations.
pub const DERIVED_PAIRS: [[u8; 2]; 4] = [[1, 2], [1, 4], [1, 5], [2, 3]];

pub fn triple_index(t: &[u8; 3]) -> usize {
    TRIPLES.iter().position(|x| x == t).expect("triple index")
}

pub fn pair_index(p: &[u8; 2]) -> usize {
    PAIRS.iter().position(|x| x == p).expect("pair index")
}

/// Complement of a triple inside {1..5}, as a pair.
pub fn complement(t: &[u8; 3]) -> [u8; 2] {
    let mut out = Vec::new();
    for v in 1..=5u8 {
        if !t.contains(&v) {
            out.push(v);
        }
    }
    [out[0], out[1]]
}

/// Complement of a pair, as a triple.
pub fn complement_pair(p: &[u8; 2]) -> [u8; 3] {
    let mut out = Vec::new();
    for v in 1..=5u8 {
        if !p.contains(&v) {
            out.push(v);
        }
    }
    [out[0], out[1], out[2]]
}

pub fn contains(t: &[u8; 3], p: &[u8; 2]) -> bool {
    p.iter().all(|v| t.contains(v))
}

pub fn intersection_size(a: &[u8; 3], b: &[u8; 3]) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

/// Apply a permutation of {1..5} (given as images of 1..5) to a subset,
/// re-sorting.
pub fn apply_perm_triple(perm: &[u8; 5], t: &[u8; 3]) -> [u8; 3] {
    let mut out = [perm[(t[0] - 1) as usize], perm[(t[1] - 1) as usize], perm[(t[2] - 1) as usize]];
    out.sort();
    out
}

pub fn apply_perm_pair(perm: &[u8; 5], p: &[u8; 2]) -> [u8; 2] {
    let mut out = [perm[(p[0] - 1) as usize], perm[(p[1] - 1) as usize]];
    out.sort();
    out
}

/// All 120 permutations of {1..5}.
pub fn all_permutations() -> Vec<[u8; 5]> {
    let mut out = Vec::new();
    let mut items: Vec<u8> = (1..=5).collect();
    permute(&mut items, 0, &mut out);
    out.sort();
    out
}

fn permute(items: &mut Vec<u8>, k: usize, out: &mut Vec<[u8; 5]>) {
    if k == items.len() {
        out.push([items[0], items[1], items[2], items[3], items[4]]);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complements() {
        assert_eq!(complement(&[1, 2, 3]), [4, 5]);
        assert_eq!(complement_pair(&[4, 5]), [1, 2, 3]);
        for t in &TRIPLES {
            assert_eq!(complement_pair(&complement(t)), *t);
        }
    }

    #[test]
    fn perm_count() {
        assert_eq!(all_permutations().len(), 120);
    }
}
