//! Exhaustive spectrum oracle: walks every set partition of the vertex set
//! (restricted growth strings in lexicographic order) with no pruning.

use std::collections::BTreeMap;

use super::colouring::Colouring;
use crate::hypergraph::Hypergraph;

pub(crate) fn exhaustive_witnesses(h: &Hypergraph, alpha: usize, beta: usize) -> BTreeMap<usize, Colouring> {
    let n = h.vertex_count();
    let mut found = BTreeMap::new();
    let mut rgs = vec![0usize; n];
    walk(h, alpha, beta, &mut rgs, 0, 0, &mut found);
    found
}

fn walk(
    h: &Hypergraph,
    alpha: usize,
    beta: usize,
    rgs: &mut Vec<usize>,
    v: usize,
    blocks: usize,
    found: &mut BTreeMap<usize, Colouring>,
) {
    if v == rgs.len() {
        if found.contains_key(&blocks) {
            return;
        }
        let ok = h.edges().iter().all(|e| {
            let mut colours: Vec<usize> = e.iter().map(|&u| rgs[u]).collect();
            colours.sort_unstable();
            colours.dedup();
            alpha <= colours.len() && colours.len() <= beta
        });
        if ok {
            let canonical = rgs.iter().map(|&b| b + 1).collect();
            found.insert(blocks, Colouring::from_canonical(canonical));
        }
        return;
    }
    for b in 0..=blocks {
        rgs[v] = b;
        walk(h, alpha, beta, rgs, v + 1, blocks.max(b + 1), found);
    }
}
