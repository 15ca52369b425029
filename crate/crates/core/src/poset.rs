//! Finite bounded posets.
//!
//! A [`Poset`] is built once from labels and a cover relation, closed
//! reflexively and transitively, and then queried: order tests, lower/upper
//! bound sets, minimal/maximal elements, partial meets and joins, and the
//! elementwise liftings of the partial operations to sets.
//!
//! Meets and joins are partial: `meet(a, b)` is `Some(g)` exactly when the
//! lower bounds of `{a, b}` have a unique maximal element `g` (which is then
//! the greatest lower bound), and `None` otherwise. The lifted forms
//! ([`Poset::set_meet`], [`Poset::set_join`]) report the first member at
//! which the underlying operation is undefined instead of an output set.

use std::fmt::Write as _;

use thiserror::Error;

/// Non-empty set of poset elements in canonical form: strictly ascending
/// indices, no duplicates. Set equality is plain `==`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ESet {
    items: Vec<usize>,
}

impl ESet {
    pub fn singleton(x: usize) -> Self {
        ESet { items: vec![x] }
    }

    pub fn pair(x: usize, y: usize) -> Self {
        if x == y {
            Self::singleton(x)
        } else {
            ESet { items: vec![x.min(y), x.max(y)] }
        }
    }

    /// Canonicalizes `items`; `None` when the input is empty.
    pub fn new<I: IntoIterator<Item = usize>>(items: I) -> Option<Self> {
        let mut v: Vec<usize> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            None
        } else {
            Some(ESet { items: v })
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.items
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.items.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    /// Always false; kept so `len` reads idiomatically at call sites.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.items.binary_search(&x).is_ok()
    }

    pub fn as_singleton(&self) -> Option<usize> {
        match self.items.as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn union(&self, other: &ESet) -> ESet {
        ESet::new(self.iter().chain(other.iter())).expect("union of non-empty sets")
    }
}

/// Marker produced by a lifted partial operation: the member of the lifted
/// set at which the underlying meet or join does not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UndefinedAt(pub usize);

/// Outcome of a lifted partial operation. `Err` is a reportable value, not a
/// failure: it identifies the first member without a meet (or join).
pub type Lifted = Result<ESet, UndefinedAt>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("bad label `{0}`: labels must be non-empty and free of whitespace and `#`")]
    BadLabel(String),
    #[error("unknown label `{0}` in cover pair")]
    UnknownLabel(String),
    #[error("cover index {0} out of range")]
    CoverOutOfRange(usize),
    #[error("cover relation has a cycle through `{0}`")]
    Cycle(String),
    #[error("not a bounded poset: {0}")]
    NotBounded(String),
}

/// Finite bounded poset over elements `0..n`, stored as a closed order
/// matrix. Construction guarantees antisymmetry and unique bottom/top with
/// `bottom != top`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    labels: Vec<String>,
    leq: Vec<bool>,
    bottom: usize,
    top: usize,
}

fn label_ok(label: &str) -> bool {
    !label.is_empty() && !label.contains(char::is_whitespace) && !label.contains('#')
}

impl Poset {
    /// Builds a poset from labels and cover pairs given as indices into
    /// `labels`. The order is the reflexive-transitive closure of the pairs;
    /// the pairs need not form a Hasse diagram.
    pub fn from_cover_indices(
        labels: Vec<String>,
        covers: &[(usize, usize)],
    ) -> Result<Poset, BuildError> {
        let n = labels.len();
        for label in &labels {
            if !label_ok(label) {
                return Err(BuildError::BadLabel(label.clone()));
            }
        }
        let mut sorted = labels.clone();
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(BuildError::DuplicateLabel(pair[0].clone()));
            }
        }
        if n == 0 {
            return Err(BuildError::NotBounded("no elements".into()));
        }
        if n == 1 {
            return Err(BuildError::NotBounded("least and greatest coincide".into()));
        }

        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(a, b) in covers {
            if a >= n {
                return Err(BuildError::CoverOutOfRange(a));
            }
            if b >= n {
                return Err(BuildError::CoverOutOfRange(b));
            }
            leq[a * n + b] = true;
        }
        // Warshall closure; O(n^3) is fine at the sizes this library targets.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if leq[x * n + y] && leq[y * n + x] {
                    return Err(BuildError::Cycle(labels[x].clone()));
                }
            }
        }
        let bottom = (0..n).find(|&b| (0..n).all(|y| leq[b * n + y]));
        let top = (0..n).find(|&t| (0..n).all(|x| leq[x * n + t]));
        let (bottom, top) = match (bottom, top) {
            (Some(b), Some(t)) => (b, t),
            (None, _) => return Err(BuildError::NotBounded("no least element".into())),
            (_, None) => return Err(BuildError::NotBounded("no greatest element".into())),
        };
        Ok(Poset { n, labels, leq, bottom, top })
    }

    /// Builds a poset from labels and cover pairs given as labels.
    pub fn from_covers(labels: &[&str], covers: &[(&str, &str)]) -> Result<Poset, BuildError> {
        let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let find = |l: &str| -> Result<usize, BuildError> {
            labels
                .iter()
                .position(|&x| x == l)
                .ok_or_else(|| BuildError::UnknownLabel(l.to_string()))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for &(a, b) in covers {
            pairs.push((find(a)?, find(b)?));
        }
        Poset::from_cover_indices(owned, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// L(A): elements below every member of `a`. Non-empty (contains bottom).
    pub fn lower_bounds(&self, a: &ESet) -> ESet {
        ESet::new(self.elements().filter(|&x| a.iter().all(|m| self.leq(x, m))))
            .expect("bottom is a lower bound of every set")
    }

    /// U(A): elements above every member of `a`. Non-empty (contains top).
    pub fn upper_bounds(&self, a: &ESet) -> ESet {
        ESet::new(self.elements().filter(|&x| a.iter().all(|m| self.leq(m, x))))
            .expect("top is an upper bound of every set")
    }

    /// Minimal elements of `s`: members with no strictly smaller member.
    pub fn min_of(&self, s: &ESet) -> ESet {
        ESet::new(s.iter().filter(|&m| !s.iter().any(|x| self.lt(x, m))))
            .expect("a non-empty finite set has a minimal element")
    }

    /// Maximal elements of `s`: members with no strictly larger member.
    pub fn max_of(&self, s: &ESet) -> ESet {
        ESet::new(s.iter().filter(|&m| !s.iter().any(|x| self.lt(m, x))))
            .expect("a non-empty finite set has a maximal element")
    }

    /// Greatest lower bound, when the lower bounds of `{a, b}` have a unique
    /// maximal element.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lb: Vec<usize> =
            self.elements().filter(|&x| self.leq(x, a) && self.leq(x, b)).collect();
        let mut g = lb[0];
        for &x in &lb[1..] {
            if self.lt(g, x) {
                g = x;
            }
        }
        if lb.iter().all(|&x| self.leq(x, g)) {
            Some(g)
        } else {
            None
        }
    }

    /// Least upper bound, when the upper bounds of `{a, b}` have a unique
    /// minimal element.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let ub: Vec<usize> =
            self.elements().filter(|&x| self.leq(a, x) && self.leq(b, x)).collect();
        let mut l = ub[0];
        for &x in &ub[1..] {
            if self.lt(x, l) {
                l = x;
            }
        }
        if ub.iter().all(|&x| self.leq(l, x)) {
            Some(l)
        } else {
            None
        }
    }

    /// A ≤ B: every member of `a` is below every member of `b`.
    pub fn set_leq(&self, a: &ESet, b: &ESet) -> bool {
        a.iter().all(|x| b.iter().all(|y| self.leq(x, y)))
    }

    /// a ≤ B.
    pub fn elem_below_set(&self, a: usize, b: &ESet) -> bool {
        b.iter().all(|y| self.leq(a, y))
    }

    /// A ≤ b.
    pub fn set_below_elem(&self, a: &ESet, b: usize) -> bool {
        a.iter().all(|x| self.leq(x, b))
    }

    /// S ∧ b = {m ∧ b : m ∈ S}, or the first m whose meet with b is
    /// undefined.
    pub fn set_meet(&self, s: &ESet, b: usize) -> Lifted {
        let mut out = Vec::with_capacity(s.len());
        for m in s.iter() {
            match self.meet(m, b) {
                Some(g) => out.push(g),
                None => return Err(UndefinedAt(m)),
            }
        }
        Ok(ESet::new(out).expect("input set is non-empty"))
    }

    /// a ∨ S = {a ∨ m : m ∈ S}, or the first m whose join with a is
    /// undefined.
    pub fn set_join(&self, a: usize, s: &ESet) -> Lifted {
        let mut out = Vec::with_capacity(s.len());
        for m in s.iter() {
            match self.join(a, m) {
                Some(l) => out.push(l),
                None => return Err(UndefinedAt(m)),
            }
        }
        Ok(ESet::new(out).expect("input set is non-empty"))
    }

    /// Length of a longest chain, counted in edges (a two-element chain has
    /// height 1).
    pub fn height(&self) -> usize {
        let mut order: Vec<usize> = self.elements().collect();
        let below: Vec<usize> =
            self.elements().map(|x| self.elements().filter(|&y| self.lt(y, x)).count()).collect();
        order.sort_by_key(|&x| below[x]);
        let mut h = vec![0usize; self.n];
        for &x in &order {
            for y in self.elements() {
                if self.lt(y, x) {
                    h[x] = h[x].max(h[y] + 1);
                }
            }
        }
        h[self.top]
    }

    /// The Hasse diagram of the stored order: pairs (a, b) with a covered by
    /// b. Rebuilding from these pairs reproduces the poset exactly.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if self.lt(a, b) && !self.elements().any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Renders a set as `{a,b}` using element labels.
    pub fn format_set(&self, s: &ESet) -> String {
        let mut out = String::from("{");
        for (i, m) in s.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", self.label(m));
        }
        out.push('}');
        out
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplementError {
    #[error("complement image {0} out of range")]
    OutOfRange(usize),
    #[error("element `{0}` missing from the complement map")]
    Missing(String),
    #[error("element `{0}` mapped twice")]
    Duplicate(String),
    #[error("unknown label `{0}` in complement pair")]
    Unknown(String),
}

/// Total unary map on a poset's elements, the candidate complementation.
/// Totality is the only construction-time guarantee; being an involution,
/// antitone, or a complementation is checked, not assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complementation {
    map: Vec<usize>,
}

impl Complementation {
    pub fn new(map: Vec<usize>) -> Result<Self, ComplementError> {
        let n = map.len();
        for &y in &map {
            if y >= n {
                return Err(ComplementError::OutOfRange(y));
            }
        }
        Ok(Complementation { map })
    }

    /// Builds the map from `(element, image)` label pairs; every element must
    /// appear exactly once on the left.
    pub fn from_pairs(p: &Poset, pairs: &[(&str, &str)]) -> Result<Self, ComplementError> {
        let mut map = vec![usize::MAX; p.n()];
        for &(x, y) in pairs {
            let xi = p.index_of(x).ok_or_else(|| ComplementError::Unknown(x.to_string()))?;
            let yi = p.index_of(y).ok_or_else(|| ComplementError::Unknown(y.to_string()))?;
            if map[xi] != usize::MAX {
                return Err(ComplementError::Duplicate(x.to_string()));
            }
            map[xi] = yi;
        }
        for x in p.elements() {
            if map[x] == usize::MAX {
                return Err(ComplementError::Missing(p.label(x).to_string()));
            }
        }
        Ok(Complementation { map })
    }

    pub fn of(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}
