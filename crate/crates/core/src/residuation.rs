//! Set-valued residuation operators on a poset with a unary map, writing x'
//! for the map:
//!
//!   x ⊙ y  =  Min U(x, y') ∧ y      (elementwise lifted meet)
//!   x → y  =  x' ∨ Max L(x, y)      (elementwise lifted join)
//!
//! Both produce a non-empty set of elements, or a marker naming the first
//! member whose inner meet/join does not exist. On lattices the outputs are
//! the singletons {(x ∨ y') ∧ y} and {x' ∨ (x ∧ y)}.
//!
//! Sets are compared with the existential order ⊑ ([`sqsubseteq`]):
//! A ⊑ B iff some a ∈ A lies below some b ∈ B. The operators lift to a set
//! in their left argument by union ([`lift_odot`], [`lift_arrow`]).

use crate::poset::{Complementation, ESet, Lifted, Poset};

/// Which operator a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpKind {
    Odot,
    Arrow,
}

impl OpKind {
    pub fn symbol(&self) -> &'static str {
        match self {
            OpKind::Odot => "odot",
            OpKind::Arrow => "arrow",
        }
    }
}

/// x ⊙ y = Min U(x, y') ∧ y.
pub fn odot(p: &Poset, c: &Complementation, x: usize, y: usize) -> Lifted {
    let mins = p.min_of(&p.upper_bounds(&ESet::pair(x, c.of(y))));
    p.set_meet(&mins, y)
}

/// x → y = x' ∨ Max L(x, y).
pub fn arrow(p: &Poset, c: &Complementation, x: usize, y: usize) -> Lifted {
    let maxs = p.max_of(&p.lower_bounds(&ESet::pair(x, y)));
    p.set_join(c.of(x), &maxs)
}

/// A ⊑ B: some member of A is below some member of B.
pub fn sqsubseteq(p: &Poset, a: &ESet, b: &ESet) -> bool {
    a.iter().any(|x| b.iter().any(|y| p.leq(x, y)))
}

/// A ⊙ y = ∪ { x ⊙ y : x ∈ A }; a marker in any constituent propagates.
pub fn lift_odot(p: &Poset, c: &Complementation, a: &ESet, y: usize) -> Lifted {
    let mut out: Option<ESet> = None;
    for x in a.iter() {
        let cell = odot(p, c, x, y)?;
        out = Some(match out {
            None => cell,
            Some(acc) => acc.union(&cell),
        });
    }
    Ok(out.expect("lifting set is non-empty"))
}

/// A → y = ∪ { x → y : x ∈ A }; a marker in any constituent propagates.
pub fn lift_arrow(p: &Poset, c: &Complementation, a: &ESet, y: usize) -> Lifted {
    let mut out: Option<ESet> = None;
    for x in a.iter() {
        let cell = arrow(p, c, x, y)?;
        out = Some(match out {
            None => cell,
            Some(acc) => acc.union(&cell),
        });
    }
    Ok(out.expect("lifting set is non-empty"))
}

/// Full n×n table of one operator, cells in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    kind: OpKind,
    n: usize,
    cells: Vec<Lifted>,
}

impl OpTable {
    pub fn build(p: &Poset, c: &Complementation, kind: OpKind) -> OpTable {
        let n = p.n();
        let mut cells = Vec::with_capacity(n * n);
        for x in p.elements() {
            for y in p.elements() {
                cells.push(match kind {
                    OpKind::Odot => odot(p, c, x, y),
                    OpKind::Arrow => arrow(p, c, x, y),
                });
            }
        }
        OpTable { kind, n, cells }
    }

    pub fn kind(&self) -> OpKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cell(&self, x: usize, y: usize) -> &Lifted {
        &self.cells[x * self.n + y]
    }

    /// True when no cell is a marker.
    pub fn is_well_defined(&self) -> bool {
        self.cells.iter().all(|c| c.is_ok())
    }

    /// First marker cell in row-major order: (x, y, failing member).
    pub fn first_undefined(&self) -> Option<(usize, usize, usize)> {
        self.cells.iter().enumerate().find_map(|(i, c)| match c {
            Ok(_) => None,
            Err(u) => Some((i / self.n, i % self.n, u.0)),
        })
    }
}

/// Convenience alias for [`OpTable::build`].
pub fn build_table(p: &Poset, c: &Complementation, kind: OpKind) -> OpTable {
    OpTable::build(p, c, kind)
}
