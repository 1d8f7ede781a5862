//! Permutations of `{0, ..., n-1}` and closure enumeration.
//!
//! Products compose left to right: `p.then(q)` applies `p` first. Points
//! acted on by words therefore scan the word left to right.

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn new(map: Vec<usize>) -> Result<Perm> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &i in &map {
            if i >= n || seen[i] {
                return Err(Error::NotBijection(n));
            }
            seen[i] = true;
        }
        Ok(Perm { map })
    }

    pub fn identity(n: usize) -> Perm {
        Perm { map: (0..n).collect() }
    }

    /// The permutation cycling through `points` in order, fixing the rest.
    pub fn from_cycle(n: usize, points: &[usize]) -> Result<Perm> {
        let mut map: Vec<usize> = (0..n).collect();
        for (i, &p) in points.iter().enumerate() {
            if p >= n {
                return Err(Error::NotBijection(n));
            }
            map[p] = points[(i + 1) % points.len()];
        }
        Perm::new(map)
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.map[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { map: self.map.iter().map(|&i| other.map[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            map[j] = i;
        }
        Perm { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycles sorted by smallest member, each starting at its smallest.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.map[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.map[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn order(&self) -> u64 {
        self.cycles().into_iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }
}

/// Enumerates the group generated by `gens` (breadth-first, deterministic).
/// Fails if the order exceeds `cap`. Positive generators suffice: in a
/// finite group every inverse is a positive power.
pub fn closure(gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let n = gens.first().map_or(0, Perm::degree);
    let id = Perm::identity(n);
    let mut elements = vec![id.clone()];
    let mut index = std::collections::HashMap::new();
    index.insert(id, 0usize);
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in gens {
            let next = current.then(g);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::NotRegular { order: elements.len() + 1, degree: cap });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        let p = Perm::from_cycle(3, &[0, 1]).unwrap();
        let q = Perm::from_cycle(3, &[0, 1, 2]).unwrap();
        // 0 -p-> 1 -q-> 2
        assert_eq!(p.then(&q).apply(0), 2);
        assert_eq!(q.then(&p).apply(0), 0);
    }

    #[test]
    fn inverse_and_order() {
        let q = Perm::from_cycle(5, &[0, 1, 2, 3, 4]).unwrap();
        assert!(q.then(&q.inverse()).is_identity());
        assert_eq!(q.order(), 5);
        let two_cycles = Perm::new(vec![1, 0, 3, 2, 4]).unwrap();
        assert_eq!(two_cycles.order(), 2);
        assert_eq!(two_cycles.cycles(), vec![vec![0, 1], vec![2, 3], vec![4]]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn closure_of_s3() {
        let gens = vec![
            Perm::from_cycle(3, &[0, 1]).unwrap(),
            Perm::from_cycle(3, &[0, 1, 2]).unwrap(),
        ];
        assert_eq!(closure(&gens, 10).unwrap().len(), 6);
        assert!(closure(&gens, 5).is_err());
    }
}
