//! Named example structures exercised by the verification suites.
//!
//! Each entry carries its declared cover relation, its complement map, and
//! the classification flags it is known to have. Construction re-classifies
//! the structure and panics on any mismatch, so a transcription error in a
//! fixture cannot survive to a passing test run.
//!
//! The family: five hand-built examples, Boolean cubes of dimension one to
//! five, horizontal sums of each non-orthomodular example with the large
//! orthomodular non-lattice, and the sum of the four-element antichain
//! example with itself.

use crate::ortho::{classify, ClassReport};
use crate::poset::{Complementation, Poset};
use crate::sum::{horizontal_sum, Summand};

/// Classification flags a corpus entry is expected to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    pub lattice: bool,
    pub involution: bool,
    pub antitone: bool,
    pub orthomodular: bool,
    pub weakly_orthomodular: bool,
    pub dually_weakly_orthomodular: bool,
}

#[derive(Debug, Clone)]
pub struct NamedStructure {
    pub name: &'static str,
    pub poset: Poset,
    pub comp: Complementation,
    pub expected: Expected,
    covers: Vec<(usize, usize)>,
}

impl NamedStructure {
    /// The cover pairs the structure was declared with, before transitive
    /// closure. Tests rebuild the order from these independently.
    pub fn raw_covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn classify(&self) -> ClassReport {
        classify(&self.poset, &self.comp)
    }
}

fn self_check(s: &NamedStructure) {
    let r = s.classify();
    let got = Expected {
        lattice: r.is_lattice(),
        involution: r.involution.holds(),
        antitone: r.antitone.holds(),
        orthomodular: r.is_orthomodular(),
        weakly_orthomodular: r.is_weakly_orthomodular(),
        dually_weakly_orthomodular: r.is_dually_weakly_orthomodular(),
    };
    assert_eq!(got, s.expected, "corpus entry {} does not classify as declared", s.name);
}

fn assemble(
    name: &'static str,
    labels: &[&str],
    covers: &[(&str, &str)],
    comp_pairs: &[(&str, &str)],
    expected: Expected,
) -> NamedStructure {
    let poset = Poset::from_covers(labels, covers)
        .unwrap_or_else(|e| panic!("corpus entry {name}: {e}"));
    let comp = Complementation::from_pairs(&poset, comp_pairs)
        .unwrap_or_else(|e| panic!("corpus entry {name}: {e}"));
    let covers = covers
        .iter()
        .map(|&(a, b)| (poset.index_of(a).unwrap(), poset.index_of(b).unwrap()))
        .collect();
    let s = NamedStructure { name, poset, comp, expected, covers };
    self_check(&s);
    s
}

/// Atoms a..i, coatoms i'..a', with each atom below four coatoms. An
/// orthomodular poset in which a and b share two minimal upper bounds, so it
/// is not a lattice.
pub fn fig1() -> NamedStructure {
    let labels = [
        "0", "a", "b", "c", "d", "e", "f", "g", "h", "i", "i'", "h'", "g'", "f'", "e'", "d'",
        "c'", "b'", "a'", "1",
    ];
    let incidence: [(&str, [&str; 4]); 9] = [
        ("a", ["i'", "h'", "f'", "e'"]),
        ("b", ["i'", "g'", "f'", "d'"]),
        ("c", ["h'", "g'", "e'", "d'"]),
        ("d", ["i'", "h'", "c'", "b'"]),
        ("e", ["i'", "g'", "c'", "a'"]),
        ("f", ["h'", "g'", "b'", "a'"]),
        ("g", ["f'", "e'", "c'", "b'"]),
        ("h", ["f'", "d'", "c'", "a'"]),
        ("i", ["e'", "d'", "b'", "a'"]),
    ];
    let mut covers: Vec<(&str, &str)> = Vec::new();
    for (atom, ups) in &incidence {
        covers.push(("0", atom));
        for coatom in ups {
            covers.push((atom, coatom));
        }
    }
    for coatom in ["i'", "h'", "g'", "f'", "e'", "d'", "c'", "b'", "a'"] {
        covers.push((coatom, "1"));
    }
    let comp = [
        ("0", "1"),
        ("a", "a'"),
        ("b", "b'"),
        ("c", "c'"),
        ("d", "d'"),
        ("e", "e'"),
        ("f", "f'"),
        ("g", "g'"),
        ("h", "h'"),
        ("i", "i'"),
        ("i'", "i"),
        ("h'", "h"),
        ("g'", "g"),
        ("f'", "f"),
        ("e'", "e"),
        ("d'", "d"),
        ("c'", "c"),
        ("b'", "b"),
        ("a'", "a"),
        ("1", "0"),
    ];
    assemble(
        "fig1",
        &labels,
        &covers,
        &comp,
        Expected {
            lattice: false,
            involution: true,
            antitone: true,
            orthomodular: true,
            weakly_orthomodular: true,
            dually_weakly_orthomodular: true,
        },
    )
}

/// Four incomparable middles under a shared bottom and top: the smallest
/// orthomodular lattice that is not Boolean.
pub fn fig2() -> NamedStructure {
    assemble(
        "fig2",
        &["0", "a", "b", "b'", "a'", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "b'"),
            ("0", "a'"),
            ("a", "1"),
            ("b", "1"),
            ("b'", "1"),
            ("a'", "1"),
        ],
        &[("0", "1"), ("a", "a'"), ("b", "b'"), ("b'", "b"), ("a'", "a"), ("1", "0")],
        Expected {
            lattice: true,
            involution: true,
            antitone: true,
            orthomodular: true,
            weakly_orthomodular: true,
            dually_weakly_orthomodular: true,
        },
    )
}

/// A nine-element lattice whose complement is not an involution (a'' = b).
/// Weakly orthomodular but not dually so.
pub fn fig3() -> NamedStructure {
    assemble(
        "fig3",
        &["0", "a", "b", "c", "d", "e", "f", "g", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("0", "d"),
            ("a", "e"),
            ("b", "e"),
            ("b", "f"),
            ("c", "e"),
            ("c", "g"),
            ("d", "f"),
            ("d", "g"),
            ("e", "1"),
            ("f", "1"),
            ("g", "1"),
        ],
        &[
            ("0", "1"),
            ("a", "g"),
            ("b", "g"),
            ("c", "f"),
            ("d", "e"),
            ("e", "d"),
            ("f", "c"),
            ("g", "b"),
            ("1", "0"),
        ],
        Expected {
            lattice: true,
            involution: false,
            antitone: true,
            orthomodular: false,
            weakly_orthomodular: true,
            dually_weakly_orthomodular: false,
        },
    )
}

/// The order dual situation: a nine-element lattice, complement not an
/// involution (g'' = f), dually weakly orthomodular but not weakly so.
pub fn fig4() -> NamedStructure {
    assemble(
        "fig4",
        &["0", "a", "b", "c", "d", "e", "f", "g", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "d"),
            ("a", "e"),
            ("b", "d"),
            ("b", "f"),
            ("c", "e"),
            ("c", "f"),
            ("c", "g"),
            ("d", "1"),
            ("e", "1"),
            ("f", "1"),
            ("g", "1"),
        ],
        &[
            ("0", "1"),
            ("a", "f"),
            ("b", "e"),
            ("c", "d"),
            ("d", "c"),
            ("e", "b"),
            ("f", "a"),
            ("g", "a"),
            ("1", "0"),
        ],
        Expected {
            lattice: true,
            involution: false,
            antitone: true,
            orthomodular: false,
            weakly_orthomodular: false,
            dually_weakly_orthomodular: true,
        },
    )
}

/// A ten-element lattice with an involutive complement that is not antitone
/// (a ≤ f but f' ≰ a'). Both weakly and dually weakly orthomodular without
/// being orthomodular.
pub fn fig5() -> NamedStructure {
    assemble(
        "fig5",
        &["0", "a", "b", "c", "d", "e", "f", "g", "h", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("0", "d"),
            ("a", "e"),
            ("a", "f"),
            ("b", "e"),
            ("b", "g"),
            ("c", "e"),
            ("c", "h"),
            ("d", "f"),
            ("d", "g"),
            ("d", "h"),
            ("e", "1"),
            ("f", "1"),
            ("g", "1"),
            ("h", "1"),
        ],
        &[
            ("0", "1"),
            ("a", "g"),
            ("b", "h"),
            ("c", "f"),
            ("d", "e"),
            ("e", "d"),
            ("f", "c"),
            ("g", "a"),
            ("h", "b"),
            ("1", "0"),
        ],
        Expected {
            lattice: true,
            involution: true,
            antitone: false,
            orthomodular: false,
            weakly_orthomodular: true,
            dually_weakly_orthomodular: true,
        },
    )
}

/// The Boolean cube of dimension `k`, elements labelled by their bit
/// strings, complement by bitwise flip. Supported for 1 ≤ k ≤ 5.
pub fn boolean_cube(k: u32) -> Option<NamedStructure> {
    let name = match k {
        1 => "cube1",
        2 => "cube2",
        3 => "cube3",
        4 => "cube4",
        5 => "cube5",
        _ => return None,
    };
    let n = 1usize << k;
    let width = k as usize;
    let labels: Vec<String> = (0..n).map(|m| format!("{m:0width$b}")).collect();
    let mut covers = Vec::new();
    for m in 0..n {
        for bit in 0..k {
            if m & (1 << bit) == 0 {
                covers.push((m, m | (1 << bit)));
            }
        }
    }
    let poset = Poset::from_cover_indices(labels, &covers).expect("cube is a bounded order");
    let comp = Complementation::new((0..n).map(|m| (n - 1) ^ m).collect())
        .expect("bit flip stays in range");
    let expected = Expected {
        lattice: true,
        involution: true,
        antitone: true,
        orthomodular: true,
        weakly_orthomodular: true,
        dually_weakly_orthomodular: true,
    };
    let s = NamedStructure { name, poset, comp, expected, covers };
    self_check(&s);
    Some(s)
}

fn hsum_of(name: &'static str, parts: &[&NamedStructure], expected: Expected) -> NamedStructure {
    let summands: Vec<Summand> = parts
        .iter()
        .map(|s| Summand { name: s.name, poset: &s.poset, comp: &s.comp })
        .collect();
    let hs = horizontal_sum(&summands).expect("at least one summand");
    let mut covers = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        for &(a, b) in part.raw_covers() {
            covers.push((hs.embeddings[i][a], hs.embeddings[i][b]));
        }
    }
    covers.sort_unstable();
    covers.dedup();
    let s = NamedStructure { name, poset: hs.poset, comp: hs.comp, expected, covers };
    self_check(&s);
    s
}

/// Horizontal sums of each defective example with the orthomodular
/// non-lattice: the defect survives the gluing while the partner's side
/// stays clean.
pub fn example_hsums() -> Vec<NamedStructure> {
    let anchor = fig1();
    vec![
        hsum_of(
            "hsum-fig3-fig1",
            &[&fig3(), &anchor],
            Expected {
                lattice: false,
                involution: false,
                antitone: true,
                orthomodular: false,
                weakly_orthomodular: true,
                dually_weakly_orthomodular: false,
            },
        ),
        hsum_of(
            "hsum-fig4-fig1",
            &[&fig4(), &anchor],
            Expected {
                lattice: false,
                involution: false,
                antitone: true,
                orthomodular: false,
                weakly_orthomodular: false,
                dually_weakly_orthomodular: true,
            },
        ),
        hsum_of(
            "hsum-fig5-fig1",
            &[&fig5(), &anchor],
            Expected {
                lattice: false,
                involution: true,
                antitone: false,
                orthomodular: false,
                weakly_orthomodular: true,
                dually_weakly_orthomodular: true,
            },
        ),
    ]
}

/// Every corpus entry, in a fixed order.
pub fn all() -> Vec<NamedStructure> {
    let mut out = vec![fig1(), fig2(), fig3(), fig4(), fig5()];
    for k in 1..=4 {
        out.push(boolean_cube(k).expect("k in range"));
    }
    out.extend(example_hsums());
    let m = fig2();
    out.push(hsum_of(
        "hsum-fig2-fig2",
        &[&m, &m],
        Expected {
            lattice: true,
            involution: true,
            antitone: true,
            orthomodular: true,
            weakly_orthomodular: true,
            dually_weakly_orthomodular: true,
        },
    ));
    out
}
