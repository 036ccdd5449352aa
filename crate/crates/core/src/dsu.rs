//! Union-find with parity and rollback.
//!
//! Each vertex carries a parity relative to its root; `unite(a, b, odd)`
//! records that `a` and `b` must sit on different sides of the switching iff
//! `odd`. A class stays balanced exactly while every constraint is
//! consistent. No path compression, so every union can be undone.

pub(crate) struct ParityDsu {
    parent: Vec<usize>,
    // parity of the edge to parent
    parity: Vec<bool>,
    size: Vec<u32>,
    history: Vec<usize>,
}

impl ParityDsu {
    pub(crate) fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n).collect(),
            parity: vec![false; n],
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    pub(crate) fn find(&self, mut x: usize) -> (usize, bool) {
        let mut p = false;
        while self.parent[x] != x {
            p ^= self.parity[x];
            x = self.parent[x];
        }
        (x, p)
    }

    /// Adds the constraint `side(a) ^ side(b) == odd`; false on contradiction.
    pub(crate) fn unite(&mut self, a: usize, b: usize, odd: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == odd;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.parity[small] = pa ^ pb ^ odd;
        self.size[big] += self.size[small];
        self.history.push(small);
        true
    }

    pub(crate) fn snapshot(&self) -> usize {
        self.history.len()
    }

    pub(crate) fn rollback(&mut self, to: usize) {
        while self.history.len() > to {
            let small = self.history.pop().unwrap();
            let big = self.parent[small];
            self.size[big] -= self.size[small];
            self.parent[small] = small;
            self.parity[small] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_triangle_conflicts() {
        let mut d = ParityDsu::new(3);
        assert!(d.unite(0, 1, true));
        assert!(d.unite(1, 2, true));
        let s = d.snapshot();
        assert!(!d.unite(0, 2, true));
        assert!(d.unite(0, 2, false));
        d.rollback(s);
        d.rollback(0);
        assert!(d.unite(0, 2, true));
    }
}
