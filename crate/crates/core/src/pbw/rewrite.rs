//! Direct word rewriting, independent of the memoized engine. Used to
//! check termination and that the normal form does not depend on the order
//! in which relations are applied.

use std::collections::BTreeMap;

use super::algebra::NcAlgebra;
use super::element::PbwElement;
use super::PbwError;
use crate::math::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Rewrite the leftmost out-of-order adjacent pair first.
    Leftmost,
    /// Rewrite the rightmost out-of-order adjacent pair first.
    Rightmost,
}

/// Normal form of `scalar * word` by repeated application of
/// `x_j x_i -> x_i x_j + rel(j, i)`. Each application costs one unit of
/// `fuel`; running out is reported rather than looping.
pub fn normal_form(
    alg: &NcAlgebra,
    word: &[usize],
    scalar: &Series,
    strategy: Strategy,
    fuel: usize,
) -> Result<PbwElement, PbwError> {
    let n = alg.dim();
    if let Some(&bad) = word.iter().find(|&&g| g >= n) {
        return Err(PbwError::BadGenerator(bad));
    }
    let mut pending: BTreeMap<Vec<usize>, Series> = BTreeMap::new();
    push(&mut pending, word.to_vec(), scalar.clone());
    let mut out = PbwElement::zero(alg.order());
    let mut steps = 0usize;
    while let Some((w, c)) = pending.pop_first() {
        let mut inversions = (0..w.len().saturating_sub(1)).filter(|&p| w[p] > w[p + 1]);
        let pos = match strategy {
            Strategy::Leftmost => inversions.next(),
            Strategy::Rightmost => inversions.next_back(),
        };
        let Some(p) = pos else {
            let mut mono = vec![0u32; n];
            for &g in &w {
                mono[g] += 1;
            }
            out.add_term(mono, c);
            continue;
        };
        steps += 1;
        if steps > fuel {
            return Err(PbwError::FuelExhausted(fuel));
        }
        let (j, i) = (w[p], w[p + 1]);
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        push(&mut pending, swapped, c.clone());
        for (m, cr) in alg.relation(j, i).terms() {
            let mut nw = w[..p].to_vec();
            for (g, &e) in m.iter().enumerate() {
                nw.extend(std::iter::repeat_n(g, e as usize));
            }
            nw.extend_from_slice(&w[p + 2..]);
            push(&mut pending, nw, &c * cr);
        }
    }
    Ok(out)
}

fn push(pending: &mut BTreeMap<Vec<usize>, Series>, w: Vec<usize>, c: Series) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match pending.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}
