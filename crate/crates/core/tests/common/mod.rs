//! An order oracle rebuilt from raw cover pairs, sharing no machinery with
//! the library: reachability by depth-first search instead of a closure
//! matrix, bounds and extremal elements by definition scans.

#![allow(dead_code)]

use orthores_core::ESet;

pub struct CoverOracle {
    n: usize,
    up: Vec<Vec<usize>>,
}

impl CoverOracle {
    pub fn new(n: usize, covers: &[(usize, usize)]) -> CoverOracle {
        let mut up = vec![Vec::new(); n];
        for &(a, b) in covers {
            up[a].push(b);
        }
        CoverOracle { n, up }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(x) = stack.pop() {
            for &y in &self.up[x] {
                if y == b {
                    return true;
                }
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    pub fn lower_bounds(&self, s: &[usize]) -> Vec<usize> {
        (0..self.n).filter(|&x| s.iter().all(|&m| self.leq(x, m))).collect()
    }

    pub fn upper_bounds(&self, s: &[usize]) -> Vec<usize> {
        (0..self.n).filter(|&x| s.iter().all(|&m| self.leq(m, x))).collect()
    }

    pub fn minimal(&self, s: &[usize]) -> Vec<usize> {
        s.iter()
            .copied()
            .filter(|&x| s.iter().all(|&y| !self.leq(y, x) || y == x))
            .collect()
    }

    pub fn maximal(&self, s: &[usize]) -> Vec<usize> {
        s.iter()
            .copied()
            .filter(|&x| s.iter().all(|&y| !self.leq(x, y) || y == x))
            .collect()
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower = self.lower_bounds(&[a, b]);
        let m = self.maximal(&lower);
        match m.as_slice() {
            [g] => Some(*g),
            _ => None,
        }
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let upper = self.upper_bounds(&[a, b]);
        let m = self.minimal(&upper);
        match m.as_slice() {
            [l] => Some(*l),
            _ => None,
        }
    }

    pub fn bottom(&self) -> Option<usize> {
        let mins = self.minimal(&(0..self.n).collect::<Vec<_>>());
        match mins.as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        let maxs = self.maximal(&(0..self.n).collect::<Vec<_>>());
        match maxs.as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    /// Longest path length in the cover graph, in edges.
    pub fn height(&self) -> usize {
        fn longest(o: &CoverOracle, x: usize, memo: &mut [Option<usize>]) -> usize {
            if let Some(h) = memo[x] {
                return h;
            }
            let h = o.up[x].iter().map(|&y| 1 + longest(o, y, memo)).max().unwrap_or(0);
            memo[x] = Some(h);
            h
        }
        let mut memo = vec![None; self.n];
        (0..self.n).map(|x| longest(self, x, &mut memo)).max().unwrap_or(0)
    }
}

pub fn eset_members(s: &ESet) -> Vec<usize> {
    s.members().to_vec()
}
