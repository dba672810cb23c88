use super::connectivity::connectivity;
use crate::graph::{bit, full_mask, mask_iter, Graph, Vertex, VertexMask};
use crate::rational::ExactRational;
use serde::{Deserialize, Serialize};

/// `τ(G)` with a minimizing cut. The witness is `None` only for complete
/// graphs and `Some(vec![])` for disconnected ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Toughness {
    pub value: ExactRational,
    pub witness: Option<Vec<Vertex>>,
}

/// Independence number of the subgraph induced by `within`.
pub fn independence_number_in(g: &Graph, within: VertexMask) -> usize {
    if within == 0 {
        return 0;
    }
    let v = within.trailing_zeros() as usize;
    let nv = g.neighbor_mask(v) & within;
    let with_v = 1 + independence_number_in(g, within & !nv & !bit(v));
    if nv == 0 {
        return with_v;
    }
    with_v.max(independence_number_in(g, within & !bit(v)))
}

pub fn independence_number(g: &Graph) -> usize {
    independence_number_in(g, g.vertex_mask())
}

/// Calls `f` on every `k`-subset of `0..n` as a mask, in lexicographic order
/// of the sorted vertex lists. Stops early when `f` returns false.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(VertexMask) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | bit(i));
        if !f(mask) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact toughness. Cuts are scanned by increasing size from `κ` and, within
/// a size, lexicographically; the first cut achieving the minimum is the
/// witness. A size-`k` cut leaves at most `min(n - k, α)` components, so the
/// scan stops once `k / min(n - k, α)` reaches the best ratio.
pub fn toughness(g: &Graph) -> Toughness {
    let n = g.n();
    if g.is_complete() {
        return Toughness { value: ExactRational::INFINITY, witness: None };
    }
    if !g.is_connected() {
        return Toughness { value: ExactRational::ZERO, witness: Some(Vec::new()) };
    }
    let all = full_mask(n);
    let alpha = independence_number(g) as u64;
    let mut best: Option<(ExactRational, VertexMask)> = None;
    for k in connectivity(g)..=n - 2 {
        let most = ((n - k) as u64).min(alpha);
        let floor = ExactRational::new(k as u64, most).expect("most >= 1");
        if matches!(best, Some((b, _)) if floor >= b) {
            break;
        }
        for_each_subset(n, k, |s| {
            let parts = g.components_in(all & !s);
            if parts >= 2 {
                let r = ExactRational::new(k as u64, parts as u64).expect("parts >= 2");
                if best.map_or(true, |(b, _)| r < b) {
                    best = Some((r, s));
                }
            }
            true
        });
    }
    let (value, s) = best.expect("a non-complete connected graph has a separating set");
    Toughness { value, witness: Some(mask_iter(s).collect()) }
}

/// Reference toughness straight from the definition: every vertex subset.
pub fn toughness_exhaustive(g: &Graph) -> ExactRational {
    let n = g.n();
    assert!(n <= 24, "exhaustive toughness is limited to 24 vertices");
    let all = full_mask(n);
    let mut best = ExactRational::INFINITY;
    for s in 0..(1u64 << n) {
        let parts = g.components_in(all & !s);
        if parts >= 2 {
            let r = ExactRational::new(s.count_ones() as u64, parts as u64).expect("parts >= 2");
            best = best.min(r);
        }
    }
    best
}

/// `τ(G) ≥ t`, compared exactly. `t` must be finite.
pub fn is_t_tough(g: &Graph, t: ExactRational) -> bool {
    assert!(!t.is_infinite(), "t must be finite");
    toughness(g).value >= t
}
