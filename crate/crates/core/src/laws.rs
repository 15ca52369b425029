//! Exhaustive law verification for the residuation operators.
//!
//! Every check sweeps all instances of its law in ascending index order
//! (elements, then pairs, then triples, row-major), so a reported
//! counterexample is the first violating tuple and reports are byte-stable
//! across runs. A law report has one of three outcomes:
//!
//! * `Pass`: every swept instance satisfies the law;
//! * `Fail`: a genuine violation, with the first counterexample tuple;
//! * `Inapplicable`: a well-definedness hypothesis ruled the sweep out: an
//!   operator cell the law needs is a marker, or a lemma's structural
//!   hypothesis (condition (A)/(B), involution) does not hold. The offending
//!   cell or missing hypothesis is recorded. Inapplicable is never a pass.
//!
//! Set-identity sweeps range over all subsets of width at most three plus
//! every operator output set; the identities are elementwise, so wider sets
//! exercise no code path the swept family does not.

use std::collections::HashSet;

use thiserror::Error;

use crate::ortho;
use crate::poset::{Complementation, ESet, Poset, UndefinedAt};
use crate::residuation::{arrow, lift_arrow, lift_odot, odot, sqsubseteq, OpKind, OpTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LawId {
    Adjointness,
    AdjointnessForward,
    AdjointnessBackward,
    Units,
    OdotReducesToMeet,
    ArrowReducesToJoin,
    Idempotent,
    Divisible,
    DoubleNegation,
    Contraposition,
    UnitJoin,
    ArrowZeroIsComplement,
    SetIdentityA,
    SetIdentityB,
    MinUpperOdotAbsorption,
    ArrowOfLeqIsTop,
    TopArrowIdentity,
    ArrowRightMonotone,
    RoundtripComplement,
    RoundtripOperators,
    ConverseOrthomodular,
    ConverseDuallyWeak,
}

impl LawId {
    /// Stable identifier used in reports and machine-readable output.
    pub fn id(self) -> &'static str {
        match self {
            LawId::Adjointness => "adjointness",
            LawId::AdjointnessForward => "adjointness-forward",
            LawId::AdjointnessBackward => "adjointness-backward",
            LawId::Units => "units",
            LawId::OdotReducesToMeet => "odot-reduces-to-meet",
            LawId::ArrowReducesToJoin => "arrow-reduces-to-join",
            LawId::Idempotent => "idempotent",
            LawId::Divisible => "divisible",
            LawId::DoubleNegation => "double-negation",
            LawId::Contraposition => "contraposition",
            LawId::UnitJoin => "unit-join",
            LawId::ArrowZeroIsComplement => "arrow-zero-is-complement",
            LawId::SetIdentityA => "set-identity-a",
            LawId::SetIdentityB => "set-identity-b",
            LawId::MinUpperOdotAbsorption => "min-upper-odot-absorption",
            LawId::ArrowOfLeqIsTop => "arrow-of-leq-is-top",
            LawId::TopArrowIdentity => "top-arrow-identity",
            LawId::ArrowRightMonotone => "arrow-right-monotone",
            LawId::RoundtripComplement => "roundtrip-complement",
            LawId::RoundtripOperators => "roundtrip-operators",
            LawId::ConverseOrthomodular => "converse-orthomodular",
            LawId::ConverseDuallyWeak => "converse-dually-weak",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            LawId::Adjointness => "x⊙y ⊑ {z} ⟺ {x} ⊑ y→z",
            LawId::AdjointnessForward => "x⊙y ⊑ {z} ⟹ {x} ⊑ y→z",
            LawId::AdjointnessBackward => "{x} ⊑ y→z ⟹ x⊙y ⊑ {z}",
            LawId::Units => "x⊙1 = {x} = 1⊙x",
            LawId::OdotReducesToMeet => "y→0 ≤ x ⟹ x⊙y = {x∧y}",
            LawId::ArrowReducesToJoin => "y ≤ x ⟹ x→y = (x→0)∨y",
            LawId::Idempotent => "x⊙x = {x}",
            LawId::Divisible => "(x→y)⊙x = Max L(x,y)",
            LawId::DoubleNegation => "(x→0)→0 = {x}",
            LawId::Contraposition => "x ≤ y ⟹ y→0 ≤ x→0",
            LawId::UnitJoin => "x ∨ (x→0) = {1}",
            LawId::ArrowZeroIsComplement => "x→0 = {x'}",
            LawId::SetIdentityA => "a ≤ B ⟹ B = a∨(B∧a')",
            LawId::SetIdentityB => "A ≤ b ⟹ A = b∧(A∨b')",
            LawId::MinUpperOdotAbsorption => "Min U(a,b) ⊙ a = {a}",
            LawId::ArrowOfLeqIsTop => "a ≤ b ⟹ a→b = {1}",
            LawId::TopArrowIdentity => "1→a = {a}",
            LawId::ArrowRightMonotone => "a ≤ b ⟹ c→a ⊑ c→b",
            LawId::RoundtripComplement => "the member of x→0 equals the stored x'",
            LawId::RoundtripOperators => "Min U(x,y→0)∧y = x⊙y and (x→0)∨Max L(x,y) = x→y",
            LawId::ConverseOrthomodular => {
                "residuated, divisible, double negation, contraposition ⟹ derived x' orthomodular"
            }
            LawId::ConverseDuallyWeak => {
                "residuated, divisible, double negation ⟹ derived x' dually weak with x''=x"
            }
        }
    }
}

/// One component of a counterexample tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CexItem {
    Elem(usize),
    Set(ESet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub items: Vec<CexItem>,
}

impl Counterexample {
    pub fn elems(items: &[usize]) -> Self {
        Counterexample { items: items.iter().map(|&x| CexItem::Elem(x)).collect() }
    }

    pub fn render(&self, p: &Poset) -> String {
        let parts: Vec<String> = self
            .items
            .iter()
            .map(|item| match item {
                CexItem::Elem(x) => p.label(*x).to_string(),
                CexItem::Set(s) => p.format_set(s),
            })
            .collect();
        format!("({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inapplicability {
    /// The structure lacks a hypothesis the law is conditioned on.
    MissingHypothesis { hypothesis: &'static str },
    /// An operator cell or inner partial operation the sweep needs is a
    /// marker; the description names it with labels.
    Undefined { description: String },
}

impl Inapplicability {
    pub fn describe(&self) -> String {
        match self {
            Inapplicability::MissingHypothesis { hypothesis } => {
                format!("missing hypothesis: {hypothesis}")
            }
            Inapplicability::Undefined { description } => description.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawStatus {
    Pass,
    Fail(Counterexample),
    Inapplicable(Inapplicability),
}

impl LawStatus {
    pub fn passed(&self) -> bool {
        matches!(self, LawStatus::Pass)
    }

    pub fn failed(&self) -> bool {
        matches!(self, LawStatus::Fail(_))
    }

    pub fn is_inapplicable(&self) -> bool {
        matches!(self, LawStatus::Inapplicable(_))
    }
}

/// Outcome of sweeping one law over one structure. `checked` counts the
/// instances evaluated: all triples for the adjointness sweeps, guard-true
/// tuples for guarded laws, elements for per-element identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: LawId,
    pub status: LawStatus,
    pub checked: usize,
}

impl LawReport {
    fn pass(law: LawId, checked: usize) -> Self {
        LawReport { law, status: LawStatus::Pass, checked }
    }

    fn fail(law: LawId, cex: Counterexample, checked: usize) -> Self {
        LawReport { law, status: LawStatus::Fail(cex), checked }
    }

    fn inapplicable(law: LawId, why: Inapplicability, checked: usize) -> Self {
        LawReport { law, status: LawStatus::Inapplicable(why), checked }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Both,
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Residuation,
    Lemmas,
    Roundtrip,
    All,
}

fn undefined_cell(p: &Poset, kind: OpKind, x: usize, y: usize, at: usize) -> Inapplicability {
    Inapplicability::Undefined {
        description: format!(
            "{}({},{}) undefined at {}",
            kind.symbol(),
            p.label(x),
            p.label(y),
            p.label(at)
        ),
    }
}

/// x → 0; always defined, since joining with the bottom is the identity.
fn arrow_zero(p: &Poset, c: &Complementation, x: usize) -> ESet {
    arrow(p, c, x, p.bottom()).expect("x→0 = {x' ∨ 0} is always defined")
}

/// x⊙y ⊑ {z} compared with {x} ⊑ y→z over all triples, in the requested
/// direction. Both operator tables must be everywhere defined.
pub fn check_adjointness(p: &Poset, c: &Complementation, dir: Direction) -> LawReport {
    let law = match dir {
        Direction::Both => LawId::Adjointness,
        Direction::Forward => LawId::AdjointnessForward,
        Direction::Backward => LawId::AdjointnessBackward,
    };
    let odot_t = OpTable::build(p, c, OpKind::Odot);
    if let Some((x, y, at)) = odot_t.first_undefined() {
        return LawReport::inapplicable(law, undefined_cell(p, OpKind::Odot, x, y, at), 0);
    }
    let arrow_t = OpTable::build(p, c, OpKind::Arrow);
    if let Some((x, y, at)) = arrow_t.first_undefined() {
        return LawReport::inapplicable(law, undefined_cell(p, OpKind::Arrow, x, y, at), 0);
    }
    let singles: Vec<ESet> = p.elements().map(ESet::singleton).collect();
    let mut checked = 0;
    for x in p.elements() {
        for y in p.elements() {
            let oxy = odot_t.cell(x, y).as_ref().expect("checked above");
            for z in p.elements() {
                checked += 1;
                let lhs = sqsubseteq(p, oxy, &singles[z]);
                let rhs =
                    sqsubseteq(p, &singles[x], arrow_t.cell(y, z).as_ref().expect("checked"));
                let bad = match dir {
                    Direction::Forward => lhs && !rhs,
                    Direction::Backward => rhs && !lhs,
                    Direction::Both => lhs != rhs,
                };
                if bad {
                    return LawReport::fail(law, Counterexample::elems(&[x, y, z]), checked);
                }
            }
        }
    }
    LawReport::pass(law, checked)
}

/// x⊙1 = {x} = 1⊙x.
pub fn check_unit_laws(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::Units;
    let top = p.top();
    let want = |x: usize| ESet::singleton(x);
    for x in p.elements() {
        for (l, r) in [(x, top), (top, x)] {
            match odot(p, c, l, r) {
                Err(UndefinedAt(at)) => {
                    return LawReport::inapplicable(
                        law,
                        undefined_cell(p, OpKind::Odot, l, r, at),
                        x,
                    );
                }
                Ok(s) => {
                    if s != want(x) {
                        return LawReport::fail(law, Counterexample::elems(&[x]), x + 1);
                    }
                }
            }
        }
    }
    LawReport::pass(law, p.n())
}

/// y→0 ≤ x ⟹ x⊙y = {x ∧ y}. The guard compares the set y→0 against the
/// element x in the set-to-element order (every member below x).
pub fn check_def_v(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::OdotReducesToMeet;
    let mut checked = 0;
    for x in p.elements() {
        for y in p.elements() {
            let y0 = arrow_zero(p, c, y);
            if !p.set_below_elem(&y0, x) {
                continue;
            }
            checked += 1;
            match odot(p, c, x, y) {
                Err(UndefinedAt(at)) => {
                    return LawReport::inapplicable(
                        law,
                        undefined_cell(p, OpKind::Odot, x, y, at),
                        checked,
                    );
                }
                Ok(s) => {
                    let ok = match p.meet(x, y) {
                        Some(g) => s == ESet::singleton(g),
                        None => false,
                    };
                    if !ok {
                        return LawReport::fail(law, Counterexample::elems(&[x, y]), checked);
                    }
                }
            }
        }
    }
    LawReport::pass(law, checked)
}

/// y ≤ x ⟹ x→y = (x→0) ∨ y.
pub fn check_def_vi(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::ArrowReducesToJoin;
    let mut checked = 0;
    for x in p.elements() {
        for y in p.elements() {
            if !p.leq(y, x) {
                continue;
            }
            checked += 1;
            let lhs = match arrow(p, c, x, y) {
                Err(UndefinedAt(at)) => {
                    return LawReport::inapplicable(
                        law,
                        undefined_cell(p, OpKind::Arrow, x, y, at),
                        checked,
                    );
                }
                Ok(s) => s,
            };
            let ok = match p.set_join(y, &arrow_zero(p, c, x)) {
                Ok(rhs) => lhs == rhs,
                Err(_) => false,
            };
            if !ok {
                return LawReport::fail(law, Counterexample::elems(&[x, y]), checked);
            }
        }
    }
    LawReport::pass(law, checked)
}

/// x⊙x = {x}.
pub fn check_idempotent(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::Idempotent;
    for x in p.elements() {
        match odot(p, c, x, x) {
            Err(UndefinedAt(at)) => {
                return LawReport::inapplicable(law, undefined_cell(p, OpKind::Odot, x, x, at), x);
            }
            Ok(s) => {
                if s != ESet::singleton(x) {
                    return LawReport::fail(law, Counterexample::elems(&[x]), x + 1);
                }
            }
        }
    }
    LawReport::pass(law, p.n())
}

/// (x→y) ⊙ x = Max L(x, y), the lift running over the left argument.
pub fn check_divisible(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::Divisible;
    let mut checked = 0;
    for x in p.elements() {
        for y in p.elements() {
            checked += 1;
            let axy = match arrow(p, c, x, y) {
                Err(UndefinedAt(at)) => {
                    return LawReport::inapplicable(
                        law,
                        undefined_cell(p, OpKind::Arrow, x, y, at),
                        checked,
                    );
                }
                Ok(s) => s,
            };
            let prod = match lift_odot(p, c, &axy, x) {
                Err(UndefinedAt(at)) => {
                    return LawReport::inapplicable(
                        law,
                        Inapplicability::Undefined {
                            description: format!(
                                "({}→{})⊙{} undefined at {}",
                                p.label(x),
                                p.label(y),
                                p.label(x),
                                p.label(at)
                            ),
                        },
                        checked,
                    );
                }
                Ok(s) => s,
            };
            let target = p.max_of(&p.lower_bounds(&ESet::pair(x, y)));
            if prod != target {
                return LawReport::fail(law, Counterexample::elems(&[x, y]), checked);
            }
        }
    }
    LawReport::pass(law, checked)
}

/// (x→0)→0 = {x}.
pub fn check_double_negation(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::DoubleNegation;
    for x in p.elements() {
        let x0 = arrow_zero(p, c, x);
        match lift_arrow(p, c, &x0, p.bottom()) {
            Err(UndefinedAt(at)) => {
                return LawReport::inapplicable(
                    law,
                    Inapplicability::Undefined {
                        description: format!(
                            "({}→0)→0 undefined at {}",
                            p.label(x),
                            p.label(at)
                        ),
                    },
                    x,
                );
            }
            Ok(s) => {
                if s != ESet::singleton(x) {
                    return LawReport::fail(law, Counterexample::elems(&[x]), x + 1);
                }
            }
        }
    }
    LawReport::pass(law, p.n())
}

/// x ≤ y ⟹ y→0 ≤ x→0, both sides compared in the set order.
pub fn check_contraposition(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::Contraposition;
    let mut checked = 0;
    for x in p.elements() {
        for y in p.elements() {
            if !p.leq(x, y) {
                continue;
            }
            checked += 1;
            if !p.set_leq(&arrow_zero(p, c, y), &arrow_zero(p, c, x)) {
                return LawReport::fail(law, Counterexample::elems(&[x, y]), checked);
            }
        }
    }
    LawReport::pass(law, checked)
}

/// x ∨ (x→0) = {1}. An undefined join is a genuine violation: the law
/// asserts the join exists.
pub fn check_unit_join(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::UnitJoin;
    for x in p.elements() {
        let ok = match p.set_join(x, &arrow_zero(p, c, x)) {
            Ok(s) => s == ESet::singleton(p.top()),
            Err(_) => false,
        };
        if !ok {
            return LawReport::fail(law, Counterexample::elems(&[x]), x + 1);
        }
    }
    LawReport::pass(law, p.n())
}

/// x→0 = {x'} for the stored map.
pub fn check_arrow_zero_is_complement(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::ArrowZeroIsComplement;
    for x in p.elements() {
        if arrow_zero(p, c, x) != ESet::singleton(c.of(x)) {
            return LawReport::fail(law, Counterexample::elems(&[x]), x + 1);
        }
    }
    LawReport::pass(law, p.n())
}

/// Sample family for the set-identity sweeps: all subsets of width ≤ 3 in
/// lexicographic order, then every defined operator output (⊙ cells
/// row-major, then → cells), first occurrence kept.
fn sample_sets(p: &Poset, c: &Complementation) -> Vec<ESet> {
    let n = p.n();
    let mut out: Vec<ESet> = Vec::new();
    let mut seen: HashSet<ESet> = HashSet::new();
    let mut push = |s: ESet, out: &mut Vec<ESet>| {
        if seen.insert(s.clone()) {
            out.push(s);
        }
    };
    for i in 0..n {
        push(ESet::singleton(i), &mut out);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            push(ESet::pair(i, j), &mut out);
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                push(ESet::new([i, j, k]).expect("non-empty"), &mut out);
            }
        }
    }
    for kind in [OpKind::Odot, OpKind::Arrow] {
        for x in 0..n {
            for y in 0..n {
                let cell = match kind {
                    OpKind::Odot => odot(p, c, x, y),
                    OpKind::Arrow => arrow(p, c, x, y),
                };
                if let Ok(s) = cell {
                    push(s, &mut out);
                }
            }
        }
    }
    out
}

/// a ≤ B ⟹ B = a ∨ (B ∧ a'), swept over the sample family. Requires
/// condition (A).
fn check_set_identity_a(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::SetIdentityA;
    if !ortho::check_cond_a(p, c).holds() {
        return LawReport::inapplicable(
            law,
            Inapplicability::MissingHypothesis { hypothesis: "cond-a" },
            0,
        );
    }
    let sets = sample_sets(p, c);
    let mut checked = 0;
    for a in p.elements() {
        for b in &sets {
            if !p.elem_below_set(a, b) {
                continue;
            }
            checked += 1;
            let rebuilt = p
                .set_meet(b, c.of(a))
                .and_then(|m| p.set_join(a, &m));
            let ok = match rebuilt {
                Ok(s) => s == *b,
                Err(_) => false,
            };
            if !ok {
                return LawReport::fail(
                    law,
                    Counterexample { items: vec![CexItem::Elem(a), CexItem::Set(b.clone())] },
                    checked,
                );
            }
        }
    }
    LawReport::pass(law, checked)
}

/// A ≤ b ⟹ A = b ∧ (A ∨ b'), swept over the sample family. Requires
/// condition (B).
fn check_set_identity_b(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::SetIdentityB;
    if !ortho::check_cond_b(p, c).holds() {
        return LawReport::inapplicable(
            law,
            Inapplicability::MissingHypothesis { hypothesis: "cond-b" },
            0,
        );
    }
    let sets = sample_sets(p, c);
    let mut checked = 0;
    for b in p.elements() {
        for a in &sets {
            if !p.set_below_elem(a, b) {
                continue;
            }
            checked += 1;
            let rebuilt = p
                .set_join(c.of(b), a)
                .and_then(|j| p.set_meet(&j, b));
            let ok = match rebuilt {
                Ok(s) => s == *a,
                Err(_) => false,
            };
            if !ok {
                return LawReport::fail(
                    law,
                    Counterexample { items: vec![CexItem::Set(a.clone()), CexItem::Elem(b)] },
                    checked,
                );
            }
        }
    }
    LawReport::pass(law, checked)
}

/// Min U(a,b) ⊙ a = {a}. Requires condition (A) and an involution, which
/// together make the lifted ⊙ defined.
fn check_min_upper_odot(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::MinUpperOdotAbsorption;
    if !ortho::check_cond_a(p, c).holds() {
        return LawReport::inapplicable(
            law,
            Inapplicability::MissingHypothesis { hypothesis: "cond-a" },
            0,
        );
    }
    if !ortho::check_involution(p, c).holds() {
        return LawReport::inapplicable(
            law,
            Inapplicability::MissingHypothesis { hypothesis: "involution" },
            0,
        );
    }
    let mut checked = 0;
    for a in p.elements() {
        for b in p.elements() {
            checked += 1;
            let mins = p.min_of(&p.upper_bounds(&ESet::pair(a, b)));
            match lift_odot(p, c, &mins, a) {
                Err(UndefinedAt(at)) => {
                    return LawReport::inapplicable(
                        law,
                        Inapplicability::Undefined {
                            description: format!(
                                "Min U({},{})⊙{} undefined at {}",
                                p.label(a),
                                p.label(b),
                                p.label(a),
                                p.label(at)
                            ),
                        },
                        checked,
                    );
                }
                Ok(s) => {
                    if s != ESet::singleton(a) {
                        return LawReport::fail(law, Counterexample::elems(&[a, b]), checked);
                    }
                }
            }
        }
    }
    LawReport::pass(law, checked)
}

/// a ≤ b ⟹ a→b = {1}. Requires condition (B).
fn check_arrow_of_leq(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::ArrowOfLeqIsTop;
    if !ortho::check_cond_b(p, c).holds() {
        return LawReport::inapplicable(
            law,
            Inapplicability::MissingHypothesis { hypothesis: "cond-b" },
            0,
        );
    }
    let mut checked = 0;
    for a in p.elements() {
        for b in p.elements() {
            if !p.leq(a, b) {
                continue;
            }
            checked += 1;
            match arrow(p, c, a, b) {
                Err(UndefinedAt(at)) => {
                    return LawReport::inapplicable(
                        law,
                        undefined_cell(p, OpKind::Arrow, a, b, at),
                        checked,
                    );
                }
                Ok(s) => {
                    if s != ESet::singleton(p.top()) {
                        return LawReport::fail(law, Counterexample::elems(&[a, b]), checked);
                    }
                }
            }
        }
    }
    LawReport::pass(law, checked)
}

/// 1→a = {a}. Requires condition (B).
fn check_top_arrow(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::TopArrowIdentity;
    if !ortho::check_cond_b(p, c).holds() {
        return LawReport::inapplicable(
            law,
            Inapplicability::MissingHypothesis { hypothesis: "cond-b" },
            0,
        );
    }
    for a in p.elements() {
        match arrow(p, c, p.top(), a) {
            Err(UndefinedAt(at)) => {
                return LawReport::inapplicable(
                    law,
                    undefined_cell(p, OpKind::Arrow, p.top(), a, at),
                    a,
                );
            }
            Ok(s) => {
                if s != ESet::singleton(a) {
                    return LawReport::fail(law, Counterexample::elems(&[a]), a + 1);
                }
            }
        }
    }
    LawReport::pass(law, p.n())
}

/// a ≤ b ⟹ c→a ⊑ c→b. Requires condition (B).
fn check_arrow_monotone(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::ArrowRightMonotone;
    if !ortho::check_cond_b(p, c).holds() {
        return LawReport::inapplicable(
            law,
            Inapplicability::MissingHypothesis { hypothesis: "cond-b" },
            0,
        );
    }
    let mut checked = 0;
    for a in p.elements() {
        for b in p.elements() {
            if !p.leq(a, b) {
                continue;
            }
            for z in p.elements() {
                checked += 1;
                let ca = match arrow(p, c, z, a) {
                    Err(UndefinedAt(at)) => {
                        return LawReport::inapplicable(
                            law,
                            undefined_cell(p, OpKind::Arrow, z, a, at),
                            checked,
                        );
                    }
                    Ok(s) => s,
                };
                let cb = match arrow(p, c, z, b) {
                    Err(UndefinedAt(at)) => {
                        return LawReport::inapplicable(
                            law,
                            undefined_cell(p, OpKind::Arrow, z, b, at),
                            checked,
                        );
                    }
                    Ok(s) => s,
                };
                if !sqsubseteq(p, &ca, &cb) {
                    return LawReport::fail(law, Counterexample::elems(&[a, b, z]), checked);
                }
            }
        }
    }
    LawReport::pass(law, checked)
}

/// The lemma bundle: both set identities, the absorption law, and the three
/// arrow laws. Each report carries its own applicability gate.
pub fn check_lemma_suite(p: &Poset, c: &Complementation) -> Vec<LawReport> {
    vec![
        check_set_identity_a(p, c),
        check_set_identity_b(p, c),
        check_min_upper_odot(p, c),
        check_arrow_of_leq(p, c),
        check_top_arrow(p, c),
        check_arrow_monotone(p, c),
    ]
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("x→0 is not a singleton at element {element}")]
pub struct NotSingleton {
    pub element: usize,
}

/// Reads the complement back off the operators: x ↦ the unique member of
/// x→0.
pub fn reconstruct_complementation(
    p: &Poset,
    c: &Complementation,
) -> Result<Complementation, NotSingleton> {
    let mut map = Vec::with_capacity(p.n());
    for x in p.elements() {
        match arrow_zero(p, c, x).as_singleton() {
            Some(y) => map.push(y),
            None => return Err(NotSingleton { element: x }),
        }
    }
    Ok(Complementation::new(map).expect("images are elements"))
}

/// The reconstructed complement agrees with the stored map everywhere.
pub fn roundtrip_p(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::RoundtripComplement;
    match reconstruct_complementation(p, c) {
        Err(ns) => LawReport::fail(law, Counterexample::elems(&[ns.element]), ns.element + 1),
        Ok(derived) => {
            for x in p.elements() {
                if derived.of(x) != c.of(x) {
                    return LawReport::fail(law, Counterexample::elems(&[x]), x + 1);
                }
            }
            LawReport::pass(law, p.n())
        }
    }
}

/// Rebuilding each operator from the other's zero-section reproduces the
/// table: Min U(x, y→0) ∧ y = x⊙y and (x→0) ∨ Max L(x,y) = x→y, checked at
/// every cell where the canonical operator is defined.
pub fn roundtrip_r_condition(p: &Poset, c: &Complementation) -> LawReport {
    let law = LawId::RoundtripOperators;
    let mut checked = 0;
    for x in p.elements() {
        for y in p.elements() {
            if let Ok(rhs) = odot(p, c, x, y) {
                checked += 1;
                let base = ESet::singleton(x).union(&arrow_zero(p, c, y));
                let lhs = p.set_meet(&p.min_of(&p.upper_bounds(&base)), y);
                if lhs != Ok(rhs) {
                    return LawReport::fail(law, Counterexample::elems(&[x, y]), checked);
                }
            }
            if let Ok(rhs) = arrow(p, c, x, y) {
                checked += 1;
                let x0 = arrow_zero(p, c, x);
                let maxs = p.max_of(&p.lower_bounds(&ESet::pair(x, y)));
                let mut out = Vec::new();
                let mut ok = true;
                'outer: for u in x0.iter() {
                    for v in maxs.iter() {
                        match p.join(u, v) {
                            Some(j) => out.push(j),
                            None => {
                                ok = false;
                                break 'outer;
                            }
                        }
                    }
                }
                if !(ok && ESet::new(out).as_ref() == Some(&rhs)) {
                    return LawReport::fail(law, Counterexample::elems(&[x, y]), checked);
                }
            }
        }
    }
    LawReport::pass(law, checked)
}

/// Structure theorems, applied when their law hypotheses hold: with
/// contraposition the derived complement must classify as orthomodular,
/// without it as dually weakly orthomodular with an involution.
pub fn derive_structure_theorems(p: &Poset, c: &Complementation) -> Vec<LawReport> {
    let core = [
        check_adjointness(p, c, Direction::Both),
        check_unit_laws(p, c),
        check_def_v(p, c),
        check_def_vi(p, c),
        check_divisible(p, c),
        check_double_negation(p, c),
    ];
    let contraposition = check_contraposition(p, c);
    let first_unmet = |extra: Option<&LawReport>| -> Option<&'static str> {
        core.iter()
            .chain(extra)
            .find(|r| !r.status.passed())
            .map(|r| r.law.id())
    };

    let conclude = |law: LawId, verify: &dyn Fn(&ortho::ClassReport) -> Option<Counterexample>| {
        match reconstruct_complementation(p, c) {
            Err(ns) => LawReport::fail(law, Counterexample::elems(&[ns.element]), ns.element + 1),
            Ok(derived) => {
                let report = ortho::classify(p, &derived);
                match verify(&report) {
                    None => LawReport::pass(law, p.n()),
                    Some(cex) => LawReport::fail(law, cex, p.n()),
                }
            }
        }
    };

    let orthomodular = match first_unmet(Some(&contraposition)) {
        Some(hypothesis) => LawReport::inapplicable(
            LawId::ConverseOrthomodular,
            Inapplicability::MissingHypothesis { hypothesis },
            0,
        ),
        None => conclude(LawId::ConverseOrthomodular, &|r| {
            if r.is_orthomodular() {
                None
            } else if let Some(&x) = r.involution.witness() {
                Some(Counterexample::elems(&[x]))
            } else if let Some(&(x, y)) = r.antitone.witness() {
                Some(Counterexample::elems(&[x, y]))
            } else if let Some(&x) = r.complementation.witness() {
                Some(Counterexample::elems(&[x]))
            } else if let Some(&(x, y)) = r.cond_i.witness() {
                Some(Counterexample::elems(&[x, y]))
            } else if let Some(&(x, y)) = r.cond_ii.witness() {
                Some(Counterexample::elems(&[x, y]))
            } else {
                Some(Counterexample { items: vec![] })
            }
        }),
    };

    let dually_weak = match first_unmet(None) {
        Some(hypothesis) => LawReport::inapplicable(
            LawId::ConverseDuallyWeak,
            Inapplicability::MissingHypothesis { hypothesis },
            0,
        ),
        None => conclude(LawId::ConverseDuallyWeak, &|r| {
            if r.is_dually_weakly_orthomodular() && r.involution.holds() {
                None
            } else if let Some(&x) = r.involution.witness() {
                Some(Counterexample::elems(&[x]))
            } else if let Some(&x) = r.complementation.witness() {
                Some(Counterexample::elems(&[x]))
            } else if let Some(&(x, y)) = r.cond_b.witness() {
                Some(Counterexample::elems(&[x, y]))
            } else {
                Some(Counterexample { items: vec![] })
            }
        }),
    };

    vec![orthomodular, dually_weak]
}

/// Runs a named law suite in its fixed order.
pub fn run_suite(p: &Poset, c: &Complementation, suite: Suite) -> Vec<LawReport> {
    match suite {
        Suite::Residuation => vec![
            check_adjointness(p, c, Direction::Forward),
            check_adjointness(p, c, Direction::Backward),
            check_unit_laws(p, c),
            check_def_v(p, c),
            check_def_vi(p, c),
            check_idempotent(p, c),
            check_divisible(p, c),
            check_double_negation(p, c),
            check_contraposition(p, c),
            check_unit_join(p, c),
            check_arrow_zero_is_complement(p, c),
        ],
        Suite::Lemmas => check_lemma_suite(p, c),
        Suite::Roundtrip => {
            let mut out = vec![roundtrip_p(p, c), roundtrip_r_condition(p, c)];
            out.extend(derive_structure_theorems(p, c));
            out
        }
        Suite::All => {
            let mut out = run_suite(p, c, Suite::Residuation);
            out.extend(run_suite(p, c, Suite::Lemmas));
            out.extend(run_suite(p, c, Suite::Roundtrip));
            out
        }
    }
}
