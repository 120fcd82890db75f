//! Recognition of simply-laced Dynkin diagrams, finite and extended, from
//! root pairing data.

use lattice_core::mat::ZMat;
use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt;

/// A multiset of simple ADE components.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default, Hash)]
pub struct AdeType {
    /// Components ('A' | 'D' | 'E', rank), sorted descending by rank, then
    /// by letter reversed (so E before D before A at equal rank).
    pub components: Vec<(char, usize)>,
}

impl AdeType {
    pub fn empty() -> Self {
        AdeType { components: Vec::new() }
    }

    pub fn push(&mut self, letter: char, rank: usize) {
        self.components.push((letter, rank));
        self.components.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }

    /// Parse strings like "A5+A1", "3A2", "2A2+A1", "" or "0".
    pub fn parse(s: &str) -> Self {
        let mut t = AdeType::empty();
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return t;
        }
        for part in s.split('+') {
            let part = part.trim();
            let letter_pos = part
                .find(|c: char| c == 'A' || c == 'D' || c == 'E')
                .expect("ADE component letter");
            let mult: usize =
                if letter_pos == 0 { 1 } else { part[..letter_pos].parse().expect("multiplicity") };
            let letter = part.chars().nth(letter_pos).unwrap();
            let rank: usize = part[letter_pos + 1..].parse().expect("rank");
            for _ in 0..mult {
                t.push(letter, rank);
            }
        }
        t
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        // group equal components with a multiplicity prefix
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.components.len() {
            let (letter, rank) = self.components[i];
            let mut j = i;
            while j < self.components.len() && self.components[j] == (letter, rank) {
                j += 1;
            }
            let mult = j - i;
            if mult == 1 {
                parts.push(format!("{letter}{rank}"));
            } else {
                parts.push(format!("{mult}{letter}{rank}"));
            }
            i = j;
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// Classify a connected simply-laced finite Dynkin diagram given its
/// adjacency lists (edges of pairing 1). Panics if the diagram is not of
/// finite ADE shape.
pub fn classify_finite_component(adj: &[Vec<usize>]) -> (char, usize) {
    let n = adj.len();
    assert!(n >= 1);
    let edge_count: usize = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
    assert_eq!(edge_count, n - 1, "finite ADE diagram must be a tree");
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    match branch.len() {
        0 => ('A', n),
        1 => {
            let c = branch[0];
            assert_eq!(adj[c].len(), 3, "ADE branch vertex has degree 3");
            // arm lengths from the branch vertex
            let mut arms: Vec<usize> = adj[c]
                .iter()
                .map(|&start| {
                    let mut len = 1;
                    let mut prev = c;
                    let mut cur = start;
                    loop {
                        let next: Vec<usize> =
                            adj[cur].iter().copied().filter(|&x| x != prev).collect();
                        match next.len() {
                            0 => break,
                            1 => {
                                prev = cur;
                                cur = next[0];
                                len += 1;
                            }
                            _ => panic!("second branch vertex in a finite diagram"),
                        }
                    }
                    len
                })
                .collect();
            arms.sort();
            match (arms[0], arms[1]) {
                (1, 1) => ('D', n),
                (1, 2) => match arms[2] {
                    2 => ('E', 6),
                    3 => ('E', 7),
                    4 => ('E', 8),
                    _ => panic!("arm lengths {arms:?} are not of finite type"),
                },
                _ => panic!("arm lengths {arms:?} are not of finite type"),
            }
        }
        _ => panic!("more than one branch vertex"),
    }
}

/// An extended (affine) component recognized from its Gram matrix: type of
/// the underlying finite diagram and the multiplicities (the primitive
/// positive radical vector).
pub struct ExtendedComponent {
    pub letter: char,
    pub rank: usize,
    pub multiplicities: Vec<i64>,
}

/// Classify a connected component of curve classes forming an extended
/// Dynkin diagram. `gram[i][j]` are the pairings; off-diagonal values may
/// reach 2 (the doubled bond of the rank-1 extended diagram).
pub fn classify_extended_component(gram: &[Vec<i64>]) -> ExtendedComponent {
    let n = gram.len();
    // radical: primitive integer kernel vector, all entries positive
    let mut z = ZMat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            z[(i, j)] = BigInt::from(gram[i][j]);
        }
    }
    let ker = lattice_core::snf::left_kernel(&z);
    assert_eq!(ker.rows, 1, "extended diagram has a one-dimensional radical");
    let mut mult: Vec<BigInt> = (0..n).map(|j| ker[(0, j)].clone()).collect();
    if mult.iter().any(|m| m.is_negative()) {
        for m in mult.iter_mut() {
            *m = -m.clone();
        }
    }
    assert!(mult.iter().all(|m| m.is_positive()), "radical vector must be positive");
    let multiplicities: Vec<i64> =
        mult.iter().map(|m| i64::try_from(m).expect("multiplicity fits")).collect();

    let (letter, rank) = if n == 2 {
        // the doubled-bond diagram
        assert_eq!(gram[0][1], 2, "rank-1 extended diagram has pairing 2");
        ('A', 1)
    } else {
        // delete one multiplicity-1 vertex; the rest is the finite diagram
        let cut = multiplicities
            .iter()
            .position(|&m| m == 1)
            .expect("extended diagram has a multiplicity-1 vertex");
        let keep: Vec<usize> = (0..n).filter(|&v| v != cut).collect();
        let adj: Vec<Vec<usize>> = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|(_, &w)| w != v && gram[v][w] != 0)
                    .map(|(idx, _)| idx)
                    .collect()
            })
            .collect();
        // re-index adjacency to local indices
        classify_finite_component(&adj)
    };
    assert_eq!(rank + 1, n, "extended diagram has rank + 1 vertices");
    ExtendedComponent { letter, rank, multiplicities }
}

/// Split root indices into connected components of the pairing graph.
pub fn components(pairing: &dyn Fn(usize, usize) -> i64, n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if !seen[w] && pairing(v, w) != 0 {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let mut t = AdeType::empty();
        t.push('A', 1);
        t.push('A', 5);
        assert_eq!(t.to_string(), "A5+A1");
        assert_eq!(AdeType::parse("A5+A1"), t);
        let mut t2 = AdeType::empty();
        t2.push('A', 2);
        t2.push('A', 2);
        t2.push('A', 2);
        assert_eq!(t2.to_string(), "3A2");
        assert_eq!(AdeType::parse("3A2"), t2);
        assert_eq!(AdeType::parse("").to_string(), "0");
    }

    #[test]
    fn finite_classification() {
        // path of length 4 = A4
        let a4 = vec![vec![1], vec![0, 2], vec![1, 3], vec![2]];
        assert_eq!(classify_finite_component(&a4), ('A', 4));
        // star with three arms (1,1,1) = D4
        let d4 = vec![vec![3], vec![3], vec![3], vec![0, 1, 2]];
        assert_eq!(classify_finite_component(&d4), ('D', 4));
        // E6: arms (1,2,2) around vertex 2
        let e6 = vec![
            vec![1],
            vec![0, 2],
            vec![1, 3, 5],
            vec![2, 4],
            vec![3],
            vec![2],
        ];
        assert_eq!(classify_finite_component(&e6), ('E', 6));
    }

    #[test]
    fn extended_cycle_is_a_type() {
        // pentagon = extended A4: multiplicities all 1
        let n = 5;
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            gram[i][i] = -2;
            gram[i][(i + 1) % n] = 1;
            gram[(i + 1) % n][i] = 1;
        }
        let c = classify_extended_component(&gram);
        assert_eq!((c.letter, c.rank), ('A', 4));
        assert_eq!(c.multiplicities, vec![1; 5]);
    }

    #[test]
    fn extended_a1_doubled_bond() {
        let gram = vec![vec![-2, 2], vec![2, -2]];
        let c = classify_extended_component(&gram);
        assert_eq!((c.letter, c.rank), ('A', 1));
        assert_eq!(c.multiplicities, vec![1, 1]);
    }
}
