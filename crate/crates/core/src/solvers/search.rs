//! Backtracking over canonical colourings in natural vertex order.
//!
//! Colours are tried in increasing order and only sound pruning is applied,
//! so the first colouring reached is the lexicographically smallest feasible
//! canonical colouring.

use crate::hypergraph::Hypergraph;

pub(crate) struct ColourSearch<'a> {
    n: usize,
    k: usize,
    alpha: usize,
    beta: usize,
    exact: bool,
    edges: &'a [Vec<usize>],
    /// For each vertex: (edge index, position of the vertex inside that edge).
    incident: Vec<Vec<(usize, usize)>>,
    /// First vertex after which no edge has unassigned vertices.
    free_from: usize,
    colour: Vec<usize>,
}

impl<'a> ColourSearch<'a> {
    /// `exact` asks for exactly `k` colours; otherwise at most `k`.
    pub(crate) fn new(h: &'a Hypergraph, k: usize, alpha: usize, beta: usize, exact: bool) -> Self {
        let n = h.vertex_count();
        let mut incident = vec![Vec::new(); n];
        for (i, e) in h.edges().iter().enumerate() {
            for (pos, &v) in e.iter().enumerate() {
                incident[v].push((i, pos));
            }
        }
        let free_from = h.edges().iter().map(|e| e[e.len() - 1] + 1).max().unwrap_or(0);
        ColourSearch {
            n,
            k,
            alpha,
            beta,
            exact,
            edges: h.edges(),
            incident,
            free_from,
            colour: vec![0; n],
        }
    }

    pub(crate) fn run(mut self) -> Option<Vec<usize>> {
        if self.exact && (self.k > self.n || (self.k == 0) != (self.n == 0)) {
            return None;
        }
        if self.dfs(0, 0) {
            Some(self.colour)
        } else {
            None
        }
    }

    fn edges_ok(&self, v: usize) -> bool {
        self.incident[v].iter().all(|&(ei, pos)| {
            let e = &self.edges[ei];
            let mut seen = 0u128;
            for &u in &e[..=pos] {
                seen |= 1u128 << (self.colour[u] - 1);
            }
            let distinct = seen.count_ones() as usize;
            let unassigned = e.len() - 1 - pos;
            distinct <= self.beta && distinct + unassigned >= self.alpha
        })
    }

    fn dfs(&mut self, v: usize, used: usize) -> bool {
        let remaining = self.n - v;
        let need = if self.exact { self.k - used } else { 0 };
        if need > remaining {
            return false;
        }
        if v >= self.free_from {
            self.fill_free(v, used);
            return true;
        }
        for c in 1..=(used + 1).min(self.k) {
            self.colour[v] = c;
            if self.edges_ok(v) && self.dfs(v + 1, used.max(c)) {
                return true;
            }
        }
        self.colour[v] = 0;
        false
    }

    /// Vertices from `v` on touch no edge: colour them lexicographically
    /// smallest while still introducing any colours an exact count needs.
    fn fill_free(&mut self, v: usize, mut used: usize) {
        for u in v..self.n {
            let after = self.n - u - 1;
            let need = if self.exact { self.k - used } else { 0 };
            if need > after {
                used += 1;
                self.colour[u] = used;
            } else {
                self.colour[u] = 1;
            }
        }
    }
}
