//! Maximum clique search for r-uniform hypergraphs.
//!
//! A clique with sorted vertices `s_1 < ... < s_m` (m >= r) contains its first
//! r vertices as an edge, and every later vertex is larger. Growing each edge
//! by increasing vertices therefore reaches every clique exactly once.

use itertools::Itertools;

use crate::hypergraph::{mask_of, Hypergraph};

pub(crate) struct CliqueSearch<'a> {
    h: &'a Hypergraph,
    best: Vec<usize>,
}

impl<'a> CliqueSearch<'a> {
    pub(crate) fn new(h: &'a Hypergraph) -> Self {
        debug_assert!(h.has_mask_index());
        CliqueSearch { h, best: Vec::new() }
    }

    fn best_size(&self) -> usize {
        self.best.len().max(self.h.r() - 1)
    }

    pub(crate) fn run(mut self) -> Vec<usize> {
        let r = self.h.r();
        for e in self.h.edges() {
            let top = e[r - 1];
            let faces: Vec<u128> = e.iter().copied().combinations(r - 1).map(|f| mask_of(&f)).collect();
            let cand: Vec<usize> = (top + 1..self.h.vertex_count())
                .filter(|&w| faces.iter().all(|&f| self.h.contains_mask(f | (1u128 << w))))
                .collect();
            if r + cand.len() <= self.best_size() {
                continue;
            }
            let mut clique = e.clone();
            self.grow(&mut clique, &cand);
        }
        self.best
    }

    fn grow(&mut self, clique: &mut Vec<usize>, cand: &[usize]) {
        if clique.len() > self.best_size() {
            self.best = clique.clone();
        }
        let r = self.h.r();
        for (i, &v) in cand.iter().enumerate() {
            if clique.len() + cand.len() - i <= self.best_size() {
                return;
            }
            // r-subsets containing both v and a later w: (r-2)-subsets of the clique plus {v, w}
            let with_v: Vec<u128> = clique
                .iter()
                .copied()
                .combinations(r - 2)
                .map(|x| mask_of(&x) | (1u128 << v))
                .collect();
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&w| with_v.iter().all(|&m| self.h.contains_mask(m | (1u128 << w))))
                .collect();
            clique.push(v);
            self.grow(clique, &next);
            clique.pop();
        }
    }
}
