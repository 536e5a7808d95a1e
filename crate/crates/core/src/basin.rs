//! Basin grouping: from the subkey sequence to a permutation.
//!
//! The sequence r is read as a functional graph with an edge n -> r[n].
//! A basin is a connected component of that graph with edge direction
//! ignored. Basins are extracted by breadth-first traversal: when an
//! element e is processed, its forward image r[e] is appended first, then
//! the preimages of e in ascending index order; elements are processed in
//! append order. Basin starts are the smallest indices not yet visited.
//! Concatenating the basins yields a permutation of [0, N - 1], the
//! encryption subkey.
//!
//! This element ordering is fixed: it is the one that reproduces the
//! reference traversal b(0) = (0, 2, 1, 4, 10) for the case-1 fixture.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::SubKeySequence;

/// A permutation of [0, N - 1] assembled from the basins of a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBasinPermutation", into = "RawBasinPermutation")]
pub struct BasinPermutation {
    order: Vec<usize>,
    basins: Vec<Vec<usize>>,
    source_digits: u32,
}

/// Wire form: `{"digits": k, "order": [..], "basins": [[..], ..]}`.
#[derive(Serialize, Deserialize)]
struct RawBasinPermutation {
    digits: u32,
    order: Vec<usize>,
    basins: Vec<Vec<usize>>,
}

impl TryFrom<RawBasinPermutation> for BasinPermutation {
    type Error = Error;

    fn try_from(raw: RawBasinPermutation) -> Result<Self> {
        BasinPermutation::new(raw.order, raw.basins, raw.digits)
    }
}

impl From<BasinPermutation> for RawBasinPermutation {
    fn from(p: BasinPermutation) -> Self {
        RawBasinPermutation {
            digits: p.source_digits,
            order: p.order,
            basins: p.basins,
        }
    }
}

impl BasinPermutation {
    /// Validates that `order` is a permutation of [0, N - 1] and that the
    /// basins concatenate to `order`.
    pub fn new(order: Vec<usize>, basins: Vec<Vec<usize>>, source_digits: u32) -> Result<Self> {
        let n = crate::ternary::alphabet_size(source_digits)?;
        if order.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: order.len(),
            });
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n {
                return Err(Error::ValueOutOfRange {
                    value: v,
                    alphabet: n,
                });
            }
            if seen[v] {
                return Err(Error::AlreadyVisited { index: v });
            }
            seen[v] = true;
        }
        let concat: Vec<usize> = basins.iter().flatten().copied().collect();
        if concat != order {
            return Err(Error::LengthMismatch {
                expected: order.len(),
                actual: concat.len(),
            });
        }
        Ok(Self {
            order,
            basins,
            source_digits,
        })
    }

    /// The basin-concatenation order, a permutation of [0, N - 1].
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The basins, in extraction order.
    pub fn basins(&self) -> &[Vec<usize>] {
        &self.basins
    }

    pub fn source_digits(&self) -> u32 {
        self.source_digits
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// All indices i with r[i] = v, in ascending order. Empty when v never
/// occurs.
pub fn preimages(r: &SubKeySequence, v: usize) -> Result<Vec<usize>> {
    if v >= r.len() {
        return Err(Error::ValueOutOfRange {
            value: v,
            alphabet: r.len(),
        });
    }
    Ok(r.values()
        .iter()
        .enumerate()
        .filter(|&(_, &x)| x == v)
        .map(|(i, _)| i)
        .collect())
}

/// Ascending preimage lists for every value, built in one pass.
fn preimage_index(r: &SubKeySequence) -> Vec<Vec<usize>> {
    let mut index = vec![Vec::new(); r.len()];
    for (i, &v) in r.values().iter().enumerate() {
        index[v].push(i);
    }
    index
}

/// Shared traversal core. `visited` is the dense visited map; returns the
/// ordered basin of `start` and marks everything it reaches.
fn traverse(
    r: &SubKeySequence,
    index: &[Vec<usize>],
    start: usize,
    visited: &mut [bool],
) -> Vec<usize> {
    let mut basin = vec![start];
    visited[start] = true;
    let mut head = 0;
    while head < basin.len() {
        let e = basin[head];
        head += 1;
        let forward = r.values()[e];
        if !visited[forward] {
            visited[forward] = true;
            basin.push(forward);
        }
        for &p in &index[e] {
            if !visited[p] {
                visited[p] = true;
                basin.push(p);
            }
        }
    }
    basin
}

/// Ordered basin of `start`: the connected component of the functional
/// graph reachable from `start`, in the fixed traversal order. Every index
/// in the returned basin is added to `visited`.
pub fn basin_of(
    r: &SubKeySequence,
    start: usize,
    visited: &mut HashSet<usize>,
) -> Result<Vec<usize>> {
    if start >= r.len() {
        return Err(Error::IndexOutOfRange {
            index: start,
            modulus: r.len(),
        });
    }
    if visited.contains(&start) {
        return Err(Error::AlreadyVisited { index: start });
    }
    let mut dense = vec![false; r.len()];
    for &i in visited.iter() {
        if i < r.len() {
            dense[i] = true;
        }
    }
    let basin = traverse(r, &preimage_index(r), start, &mut dense);
    visited.extend(basin.iter().copied());
    Ok(basin)
}

/// Extracts every basin, starting each one at the smallest unvisited
/// index, and concatenates them into the subkey permutation.
pub fn permutation_from_sequence(r: &SubKeySequence) -> BasinPermutation {
    let n = r.len();
    let index = preimage_index(r);
    let mut visited = vec![false; n];
    let mut basins = Vec::new();
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if !visited[start] {
            let basin = traverse(r, &index, start, &mut visited);
            order.extend_from_slice(&basin);
            basins.push(basin);
        }
    }
    BasinPermutation {
        order,
        basins,
        source_digits: r.digits(),
    }
}

/// Inverse lookup table q with q[p.order[i]] = i.
pub fn invert(p: &BasinPermutation) -> Vec<usize> {
    let mut inverse = vec![0; p.len()];
    for (i, &v) in p.order().iter().enumerate() {
        inverse[v] = i;
    }
    inverse
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::key::KeyMatrix;
    use crate::sequence::generate_sequence;

    fn case1_r() -> SubKeySequence {
        let key = KeyMatrix::new(3, vec![vec![2, 5, -6], vec![3, 1, 3], vec![4, -2, -3]]).unwrap();
        generate_sequence(&key).unwrap()
    }

    #[test]
    fn preimages_of_case1_values() {
        let r = case1_r();
        assert_eq!(preimages(&r, 0).unwrap(), vec![1, 2, 4]);
        assert_eq!(preimages(&r, 2).unwrap(), vec![0, 10]);
        assert_eq!(preimages(&r, 1).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn preimages_rejects_out_of_range_value() {
        let r = case1_r();
        assert_eq!(
            preimages(&r, 27),
            Err(Error::ValueOutOfRange {
                value: 27,
                alphabet: 27
            })
        );
    }

    #[test]
    fn first_basin_order_is_exact() {
        let r = case1_r();
        let mut visited = HashSet::new();
        let basin = basin_of(&r, 0, &mut visited).unwrap();
        assert_eq!(basin, vec![0, 2, 1, 4, 10]);
        assert_eq!(visited.len(), 5);
    }

    #[test]
    fn self_loop_is_singleton() {
        let r = case1_r();
        let mut visited: HashSet<usize> = vec![0, 2, 1, 4, 10].into_iter().collect();
        let basin = basin_of(&r, 13, &mut visited).unwrap();
        assert_eq!(basin, vec![13]);
    }

    #[test]
    fn second_basin_set() {
        let r = case1_r();
        let mut visited: HashSet<usize> = vec![0, 2, 1, 4, 10].into_iter().collect();
        let basin = basin_of(&r, 3, &mut visited).unwrap();
        let set: HashSet<usize> = basin.into_iter().collect();
        let expected: HashSet<usize> =
            vec![3, 5, 6, 7, 8, 9, 11, 12, 14, 15, 17, 18, 19, 20, 21, 23]
                .into_iter()
                .collect();
        assert_eq!(set, expected);
    }

    #[test]
    fn visited_start_is_rejected() {
        let r = case1_r();
        let mut visited: HashSet<usize> = [0usize].into_iter().collect();
        assert_eq!(
            basin_of(&r, 0, &mut visited),
            Err(Error::AlreadyVisited { index: 0 })
        );
    }

    #[test]
    fn identity_sequence_gives_singletons() {
        let r = SubKeySequence::new((0..27).collect(), 3).unwrap();
        let p = permutation_from_sequence(&r);
        assert_eq!(p.basins().len(), 27);
        assert_eq!(p.order(), (0..27).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn invert_identity_and_cycle() {
        let id = BasinPermutation::new((0..27).collect(), vec![(0..27).collect()], 3).unwrap();
        assert_eq!(invert(&id), (0..27).collect::<Vec<_>>());

        // 3-cycle check on the smallest supported alphabet: embed (2,0,1)
        // at the front of an otherwise identity order over N = 9.
        let mut order: Vec<usize> = vec![2, 0, 1];
        order.extend(3..9);
        let basins = vec![vec![2, 0, 1], (3..9).collect()];
        let p = BasinPermutation::new(order, basins, 2).unwrap();
        let q = invert(&p);
        assert_eq!(&q[..3], &[1, 2, 0]);
        for (i, &v) in p.order().iter().enumerate() {
            assert_eq!(q[v], i);
        }
    }

    #[test]
    fn new_rejects_duplicate_order() {
        let mut order: Vec<usize> = (0..27).collect();
        order[5] = 4;
        let basins = vec![order.clone()];
        assert!(BasinPermutation::new(order, basins, 3).is_err());
    }

    #[test]
    fn new_rejects_basin_order_disagreement() {
        let order: Vec<usize> = (0..27).collect();
        let basins = vec![(0..26).collect::<Vec<_>>()];
        assert!(BasinPermutation::new(order, basins, 3).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = permutation_from_sequence(&case1_r());
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains("\"digits\":3"));
        assert!(json.contains("\"order\""));
        assert!(json.contains("\"basins\""));
        let back: BasinPermutation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
