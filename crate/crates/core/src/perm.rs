// SPDX-License-Identifier: Apache-2.0

//! Permutations of `1..=m` and their factorization into 3-cycles.
//!
//! Products are written left to right: `s.then(&t)` applies `s` first, so the
//! result maps `i` to `t(s(i))`. Every factor list returned by this module
//! composes in that order.

use std::fmt;
use std::ops::BitXor;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl BitXor for Parity {
    type Output = Parity;

    fn bitxor(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A bijection on `1..=m`, stored in one-line form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // 0-based: image[i] is where symbol i + 1 goes, minus one.
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Self {
            image: (0..m).collect(),
        }
    }

    /// `images[i - 1]` is the image of symbol `i`; symbols are 1-based.
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        let mut image = Vec::with_capacity(m);
        for v in images {
            if v == 0 || v > m || seen[v - 1] {
                return Err(Error::NotABijection(m));
            }
            seen[v - 1] = true;
            image.push(v - 1);
        }
        Ok(Self { image })
    }

    pub(crate) fn from_zero_based_unchecked(image: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = image.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Self { image }
    }

    /// Left-to-right product of `cycles` on `1..=m`.
    pub fn from_cycles(m: usize, cycles: &[Cycle]) -> Result<Self> {
        let mut p = Self::identity(m);
        for c in cycles {
            p = p.then(&c.to_permutation(m)?)?;
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Image of the 1-based symbol `i`.
    ///
    /// Panics if `i` is outside `1..=m`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    pub(crate) fn apply0(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Result<Permutation> {
        if self.len() != next.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: next.len(),
            });
        }
        Ok(Self {
            image: self.image.iter().map(|&v| next.image[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Self { image }
    }

    /// Disjoint cycles of length at least 2, each starting at its smallest
    /// symbol, ordered by that symbol.
    pub fn cycles(&self) -> Vec<Cycle> {
        let m = self.len();
        let mut visited = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if visited[start] {
                continue;
            }
            let mut symbols = Vec::new();
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                symbols.push(i + 1);
                i = self.image[i];
            }
            if symbols.len() > 1 {
                out.push(Cycle { symbols });
            }
        }
        out
    }

    /// `m` minus the number of cycles (fixed points included), mod 2.
    pub fn parity(&self) -> Parity {
        let m = self.len();
        let mut visited = vec![false; m];
        let mut cycles = 0;
        for start in 0..m {
            if visited[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.image[i];
            }
        }
        if (m - cycles).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}](", self.len())?;
        let cycles = self.cycles();
        if cycles.is_empty() {
            f.write_str(")")?;
        }
        for c in cycles {
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A cycle `(x_1 x_2 ... x_j)` sending `x_1 -> x_2 -> ... -> x_j -> x_1`.
///
/// Stored rotated so the smallest symbol comes first; `(3 1 2)` and
/// `(1 2 3)` are the same value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    symbols: Vec<usize>,
}

impl Cycle {
    pub fn new(mut symbols: Vec<usize>) -> Result<Self> {
        if symbols.len() < 2 {
            return Err(Error::InvalidCycle(format!("length {} is below 2", symbols.len())));
        }
        if symbols.contains(&0) {
            return Err(Error::InvalidCycle("symbols are 1-based".into()));
        }
        let mut sorted = symbols.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle(format!("repeated symbol in {symbols:?}")));
        }
        let pos = symbols
            .iter()
            .enumerate()
            .min_by_key(|(_, &s)| s)
            .map(|(i, _)| i)
            .unwrap_or(0);
        symbols.rotate_left(pos);
        Ok(Self { symbols })
    }

    pub fn three(a: usize, b: usize, c: usize) -> Result<Self> {
        Self::new(vec![a, b, c])
    }

    /// The neighbor 3-cycle `(h, h+1, h+2)`.
    pub fn neighbor(h: usize) -> Self {
        assert!(h >= 1);
        Self {
            symbols: vec![h, h + 1, h + 2],
        }
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_symbol(&self) -> usize {
        self.symbols.iter().copied().max().unwrap_or(0)
    }

    pub fn is_three_cycle(&self) -> bool {
        self.symbols.len() == 3
    }

    pub fn is_neighbor_three_cycle(&self) -> bool {
        matches!(self.symbols[..], [a, b, c] if b == a + 1 && c == b + 1)
    }

    pub fn inverse(&self) -> Cycle {
        let mut symbols = self.symbols.clone();
        symbols[1..].reverse();
        Self { symbols }
    }

    pub fn to_permutation(&self, m: usize) -> Result<Permutation> {
        if self.max_symbol() > m {
            return Err(Error::InvalidCycle(format!("{self} does not fit in 1..={m}")));
        }
        let mut image: Vec<usize> = (0..m).collect();
        let k = self.symbols.len();
        for i in 0..k {
            image[self.symbols[i] - 1] = self.symbols[(i + 1) % k] - 1;
        }
        Ok(Permutation { image })
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

pub fn compose(s: &Permutation, t: &Permutation) -> Result<Permutation> {
    s.then(t)
}

pub fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

pub fn parity(p: &Permutation) -> Parity {
    p.parity()
}

pub fn cycle_decomposition(p: &Permutation) -> Vec<Cycle> {
    p.cycles()
}

/// Writes an even permutation as a left-to-right product of 3-cycles.
///
/// Each k-cycle `(c_1 ... c_k)` becomes the transpositions
/// `(c_1 c_2)(c_1 c_3)...(c_1 c_k)`. Consecutive transpositions are then
/// merged pairwise: `(a b)(a c) = (a b c)` and `(a b)(c d) = (a b c)(c a d)`.
pub fn three_cycle_factorization(p: &Permutation) -> Result<Vec<Cycle>> {
    if p.parity() == Parity::Odd {
        return Err(Error::OddPermutation);
    }
    let transpositions: Vec<(usize, usize)> = p
        .cycles()
        .iter()
        .flat_map(|c| {
            let head = c.symbols[0];
            c.symbols[1..].iter().map(move |&x| (head, x))
        })
        .collect();
    debug_assert!(transpositions.len().is_multiple_of(2));

    let mut out = Vec::with_capacity(transpositions.len());
    for pair in transpositions.chunks_exact(2) {
        let ((x, y), (z, w)) = (pair[0], pair[1]);
        if (x == z && y == w) || (x == w && y == z) {
            continue;
        }
        let shared = [x, y].into_iter().find(|&v| v == z || v == w);
        match shared {
            Some(a) => {
                let b = if x == a { y } else { x };
                let c = if z == a { w } else { z };
                out.push(Cycle::three(a, b, c)?);
            }
            None => {
                out.push(Cycle::three(x, y, z)?);
                out.push(Cycle::three(z, x, w)?);
            }
        }
    }
    Ok(out)
}

/// Writes a 3-cycle as a left-to-right product of neighbor 3-cycles
/// `(h, h+1, h+2)`.
///
/// The cycle is shrunk by conjugation: for a neighbor cycle `v` and `k` in
/// `{1, 2}`, `(a b c) = v^(3-k) * X * v^k` where `X` relabels `(a b c)` by
/// `v^(-k)`. Each step shrinks the sorted span `max - min` by at least one,
/// and three neighbor factors are spent per step.
pub fn neighbor_three_cycle_factorization(c: &Cycle) -> Result<Vec<Cycle>> {
    if !c.is_three_cycle() {
        return Err(Error::InvalidCycle(format!("{c} is not a 3-cycle")));
    }
    let mut cur = [c.symbols[0], c.symbols[1], c.symbols[2]];
    let mut prefix: Vec<Cycle> = Vec::new();
    let mut suffix: Vec<Cycle> = Vec::new();

    loop {
        let mut sorted = cur;
        sorted.sort_unstable();
        let [a, b, top] = sorted;
        if top - a == 2 {
            let neighbor = Cycle::neighbor(a);
            prefix.push(neighbor.clone());
            // (a a+2 a+1) is the square of (a a+1 a+2)
            if Cycle::new(cur.to_vec())? != neighbor {
                prefix.push(neighbor);
            }
            break;
        }
        // choose neighbor start h and k with X = v^(-k)(cur)
        let (h, k) = if b + 2 < top {
            (top - 2, 1)
        } else if b + 2 == top {
            (b, 2)
        } else if a + 2 < b {
            (a, 2)
        } else {
            (a, 1)
        };
        let back = 3 - k;
        cur = cur.map(|x| neighbor_power(h, back, x));
        for _ in 0..back {
            prefix.push(Cycle::neighbor(h));
        }
        for _ in 0..k {
            suffix.push(Cycle::neighbor(h));
        }
    }
    suffix.reverse();
    prefix.extend(suffix);
    Ok(prefix)
}

/// Image of `x` under `(h, h+1, h+2)^power`.
fn neighbor_power(h: usize, power: usize, x: usize) -> usize {
    if x < h || x > h + 2 {
        x
    } else {
        h + (x - h + power) % 3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(s: &[usize]) -> Cycle {
        Cycle::new(s.to_vec()).unwrap()
    }

    fn product(m: usize, cs: &[Cycle]) -> Permutation {
        Permutation::from_cycles(m, cs).unwrap()
    }

    #[test]
    fn compose_convention_is_left_first() {
        // (1 2) then (1 3): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
        let s = cyc(&[1, 2]).to_permutation(3).unwrap();
        let t = cyc(&[1, 3]).to_permutation(3).unwrap();
        assert_eq!(compose(&s, &t).unwrap().one_line(), vec![2, 3, 1]);
    }

    #[test]
    fn compose_examples() {
        let p = Permutation::from_one_line(vec![3, 1, 2, 5, 4]).unwrap();
        let id = Permutation::identity(5);
        assert_eq!(compose(&id, &p).unwrap(), p);
        let c = cyc(&[1, 2, 3]).to_permutation(5).unwrap();
        assert!(compose(&c, &inverse(&c)).unwrap().is_identity());
        let swap = product(9, &[cyc(&[2, 4]), cyc(&[3, 7]), cyc(&[6, 8])]);
        assert!(compose(&swap, &swap).unwrap().is_identity());
        assert!(matches!(
            compose(&id, &swap),
            Err(Error::SizeMismatch { left: 5, right: 9 })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert!(inverse(&Permutation::identity(4)).is_identity());
        assert_eq!(cyc(&[2, 5, 7]).inverse(), cyc(&[2, 7, 5]));
        let c = cyc(&[2, 5, 7]).to_permutation(9).unwrap();
        assert_eq!(inverse(&c), cyc(&[2, 7, 5]).to_permutation(9).unwrap());
        // a 3-cycle's inverse is its square
        assert_eq!(inverse(&c), compose(&c, &c).unwrap());
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity(&Permutation::identity(9)), Parity::Even);
        let swap = product(9, &[cyc(&[2, 4]), cyc(&[3, 7]), cyc(&[6, 8])]);
        assert_eq!(parity(&swap), Parity::Odd);
        assert_eq!(parity(&cyc(&[1, 5, 9]).to_permutation(9).unwrap()), Parity::Even);
        assert_eq!(parity(&cyc(&[1, 2, 3, 4]).to_permutation(9).unwrap()), Parity::Odd);
    }

    #[test]
    fn cycle_decomposition_examples() {
        assert!(cycle_decomposition(&Permutation::identity(9)).is_empty());
        let p = Permutation::from_one_line(vec![1, 4, 7, 2, 5, 8, 3, 6, 9]).unwrap();
        assert_eq!(cycle_decomposition(&p), vec![cyc(&[2, 4]), cyc(&[3, 7]), cyc(&[6, 8])]);
        assert_eq!(product(9, &cycle_decomposition(&p)), p);
    }

    #[test]
    fn cycle_validation_and_rotation() {
        assert!(Cycle::new(vec![1]).is_err());
        assert!(Cycle::new(vec![1, 2, 1]).is_err());
        assert!(Cycle::new(vec![0, 2]).is_err());
        assert_eq!(cyc(&[3, 1, 2]).symbols(), &[1, 2, 3]);
        assert!(cyc(&[4, 5, 6]).is_neighbor_three_cycle());
        assert!(!cyc(&[4, 6, 5]).is_neighbor_three_cycle());
        assert!(cyc(&[4, 5, 7]).to_permutation(6).is_err());
        assert_eq!(cyc(&[6, 4, 5]).to_string(), "(4 5 6)");
    }

    #[test]
    fn transposition_merge_rules_hold() {
        // oracle: direct multiplication on 1..=6
        let m = 6;
        let t = |a, b| cyc(&[a, b]);
        assert_eq!(product(m, &[t(1, 2), t(1, 3)]), product(m, &[cyc(&[1, 2, 3])]));
        assert_eq!(
            product(m, &[t(1, 2), t(3, 4)]),
            product(m, &[cyc(&[1, 2, 3]), cyc(&[3, 1, 4])])
        );
        assert_eq!(
            product(m, &[cyc(&[1, 2, 3, 4, 5])]),
            product(m, &[t(1, 2), t(1, 3), t(1, 4), t(1, 5)])
        );
    }

    #[test]
    fn span_reduction_identities_hold() {
        // (a b c) = (a b c-1)(a c-1 c) for c > b+1 and
        // (a b b+1) = (a b-1 b+1)(b-1 b b+1) for b > a+1
        let m = 12;
        for a in 1..=m {
            for b in a + 1..=m {
                for c in b + 2..=m {
                    assert_eq!(
                        product(m, &[cyc(&[a, b, c])]),
                        product(m, &[cyc(&[a, b, c - 1]), cyc(&[a, c - 1, c])])
                    );
                }
                if b > a + 1 && b < m {
                    assert_eq!(
                        product(m, &[cyc(&[a, b, b + 1])]),
                        product(m, &[cyc(&[a, b - 1, b + 1]), cyc(&[b - 1, b, b + 1])])
                    );
                }
            }
        }
    }

    #[test]
    fn three_cycle_factorization_examples() {
        assert!(three_cycle_factorization(&Permutation::identity(9)).unwrap().is_empty());
        let c = cyc(&[2, 7, 4]);
        let f = three_cycle_factorization(&c.to_permutation(9).unwrap()).unwrap();
        assert_eq!(f, vec![c]);
        let odd = cyc(&[1, 2]).to_permutation(9).unwrap();
        assert_eq!(three_cycle_factorization(&odd), Err(Error::OddPermutation));
    }

    #[test]
    fn neighbor_factorization_examples() {
        assert_eq!(
            neighbor_three_cycle_factorization(&cyc(&[1, 2, 3])).unwrap(),
            vec![cyc(&[1, 2, 3])]
        );
        assert_eq!(
            neighbor_three_cycle_factorization(&cyc(&[1, 3, 2])).unwrap(),
            vec![cyc(&[1, 2, 3]), cyc(&[1, 2, 3])]
        );
        assert!(neighbor_three_cycle_factorization(&cyc(&[1, 2])).is_err());
        assert!(neighbor_three_cycle_factorization(&cyc(&[1, 2, 3, 4])).is_err());
    }

    #[test]
    fn neighbor_factorization_exhaustive_small() {
        for m in 3..=12 {
            for a in 1..=m {
                for b in 1..=m {
                    for c in 1..=m {
                        let Ok(cycle) = Cycle::three(a, b, c) else { continue };
                        let factors = neighbor_three_cycle_factorization(&cycle).unwrap();
                        assert!(factors.iter().all(Cycle::is_neighbor_three_cycle));
                        assert!(factors.iter().all(|f| f.max_symbol() <= m));
                        assert_eq!(product(m, &factors), cycle.to_permutation(m).unwrap(), "{cycle}");
                        let span = cycle.max_symbol() - cycle.symbols()[0];
                        assert!(factors.len() <= 3 * (span - 2) + 2);
                    }
                }
            }
        }
    }
}
