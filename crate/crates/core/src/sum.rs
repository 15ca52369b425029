//! Horizontal sums: glue bounded posets together at a shared bottom and top,
//! keeping their interiors pairwise incomparable.

use thiserror::Error;

use crate::poset::{Complementation, Poset};

/// One input to [`horizontal_sum`]. The name seeds label disambiguation when
/// interiors share labels.
#[derive(Debug, Clone, Copy)]
pub struct Summand<'a> {
    pub name: &'a str,
    pub poset: &'a Poset,
    pub comp: &'a Complementation,
}

/// Result of a horizontal sum. `embeddings[i][x]` is the index in the sum of
/// element `x` of summand `i`; every summand's bottom maps to the shared
/// bottom and its top to the shared top.
#[derive(Debug, Clone)]
pub struct HorizontalSum {
    pub poset: Poset,
    pub comp: Complementation,
    pub embeddings: Vec<Vec<usize>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SumError {
    #[error("horizontal sum needs at least one summand")]
    NoSummands,
}

/// Interior labels are kept verbatim when globally unique, else prefixed
/// `{summand}.{label}`, else `{summand}.{ordinal}.{label}`. The shared bottom
/// and top take the first summand's bound labels.
fn resolve_labels(parts: &[Summand], bottom_label: &str, top_label: &str) -> Vec<String> {
    struct Entry {
        raw: String,
        tier1: String,
        tier2: String,
    }
    let mut entries = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let p = part.poset;
        for x in p.elements() {
            if x == p.bottom() || x == p.top() {
                continue;
            }
            let raw = p.label(x).to_string();
            entries.push(Entry {
                tier1: format!("{}.{}", part.name, raw),
                tier2: format!("{}.{}.{}", part.name, i + 1, raw),
                raw,
            });
        }
    }
    let count = |labels: &[&str], l: &str| labels.iter().filter(|&&x| x == l).count();
    let mut pool: Vec<&str> = vec![bottom_label, top_label];
    pool.extend(entries.iter().map(|e| e.raw.as_str()));
    let keep_raw: Vec<bool> = entries.iter().map(|e| count(&pool, &e.raw) == 1).collect();

    let mut pool1: Vec<&str> = vec![bottom_label, top_label];
    for (e, &k) in entries.iter().zip(&keep_raw) {
        pool1.push(if k { e.raw.as_str() } else { e.tier1.as_str() });
    }
    let keep_tier1: Vec<bool> = entries
        .iter()
        .zip(&keep_raw)
        .map(|(e, &k)| !k && count(&pool1, &e.tier1) == 1)
        .collect();

    let mut out: Vec<String> = Vec::with_capacity(entries.len());
    let mut used: Vec<String> = vec![bottom_label.to_string(), top_label.to_string()];
    for ((e, &k0), &k1) in entries.iter().zip(&keep_raw).zip(&keep_tier1) {
        let mut label = if k0 {
            e.raw.clone()
        } else if k1 {
            e.tier1.clone()
        } else {
            e.tier2.clone()
        };
        let mut bump = 2usize;
        while used.contains(&label) {
            label = format!("{}.{}", e.tier2, bump);
            bump += 1;
        }
        used.push(label.clone());
        out.push(label);
    }
    out
}

/// Disjoint union of the summands' interiors under a shared bottom and top.
/// The complement map is inherited from the summands, with the identified
/// bounds swapped (bottom ↦ top, top ↦ bottom).
pub fn horizontal_sum(parts: &[Summand]) -> Result<HorizontalSum, SumError> {
    if parts.is_empty() {
        return Err(SumError::NoSummands);
    }
    let first = parts[0].poset;
    let bottom_label = first.label(first.bottom()).to_string();
    let top_label = first.label(first.top()).to_string();
    let interior_labels = resolve_labels(parts, &bottom_label, &top_label);

    let n_sum = 2 + parts.iter().map(|s| s.poset.n() - 2).sum::<usize>();
    let top_idx = n_sum - 1;
    let mut labels = vec![bottom_label];
    labels.extend(interior_labels);
    labels.push(top_label);

    let mut embeddings: Vec<Vec<usize>> = Vec::with_capacity(parts.len());
    let mut next = 1usize;
    for part in parts {
        let p = part.poset;
        let mut emb = vec![usize::MAX; p.n()];
        for x in p.elements() {
            emb[x] = if x == p.bottom() {
                0
            } else if x == p.top() {
                top_idx
            } else {
                let idx = next;
                next += 1;
                idx
            };
        }
        embeddings.push(emb);
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (part, emb) in parts.iter().zip(&embeddings) {
        let p = part.poset;
        for x in p.elements() {
            for y in p.elements() {
                if p.lt(x, y) {
                    pairs.push((emb[x], emb[y]));
                }
            }
        }
    }
    let poset = Poset::from_cover_indices(labels, &pairs)
        .expect("summands are valid posets, so their sum is");
    debug_assert_eq!(poset.bottom(), 0);
    debug_assert_eq!(poset.top(), top_idx);

    let mut map = vec![usize::MAX; n_sum];
    map[0] = top_idx;
    map[top_idx] = 0;
    for (part, emb) in parts.iter().zip(&embeddings) {
        let p = part.poset;
        for x in p.elements() {
            if x == p.bottom() || x == p.top() {
                continue;
            }
            map[emb[x]] = emb[part.comp.of(x)];
        }
    }
    let comp = Complementation::new(map).expect("images are sum indices");

    Ok(HorizontalSum { poset, comp, embeddings })
}
