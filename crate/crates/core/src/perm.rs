//! Permutations of `0..n` in one-line notation.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Panics if `images` is not a bijection of `0..len`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x < images.len() && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Perm(images)
    }

    /// Product of disjoint cycles on `0..n`; points not listed are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Self {
        let mut p: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                p[x] = c[(i + 1) % c.len()];
            }
        }
        Perm::from_images(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Perm) -> Perm {
        assert_eq!(self.len(), first.len());
        Perm(first.0.iter().map(|&x| self.0[x]).collect())
    }

    /// Disjoint cycles, each starting from its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Length of the orbit of `x`.
    pub fn orbit_len(&self, x: usize) -> usize {
        let mut len = 1;
        let mut y = self.0[x];
        while y != x {
            y = self.0[y];
            len += 1;
        }
        len
    }

    /// True iff the permutation is one cycle through every point.
    pub fn is_full_cycle(&self) -> bool {
        self.0.is_empty() || self.orbit_len(0) == self.0.len()
    }
}
