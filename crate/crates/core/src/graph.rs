//! Graph and hypergraph representations plus the counting kernels:
//! edge counts, crossing triangles/cliques, 4-cycles, hyperedge crossing
//! counts and partition density statistics.
//!
//! Adjacency is stored as fixed-width bit-set rows so that every crossing
//! count reduces to word intersections and popcounts; the checkers evaluate
//! thousands of cuts per graph.

use crate::bitset::{and_count, and_count_above, word_count, VertexSet};
use crate::{Error, Result};
use std::fmt::Write as _;

/// Undirected simple graph on n labeled vertices 0..n-1.
///
/// Immutable after construction; all counting operations are pure and safe
/// to call concurrently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    /// Flat adjacency: row v occupies adj[v*words .. (v+1)*words].
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            words: word_count(n),
            adj: vec![0; n * word_count(n)],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    g.set_edge_raw(u, v);
                }
            }
        }
        g.m = n * (n - 1) / 2;
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(Error::InvalidParam(format!("loop at vertex {u}")));
            }
            g.set_edge_raw(u, v);
            g.set_edge_raw(v, u);
        }
        g.m = g.recount_edges();
        Ok(g)
    }

    /// Builds a graph from arbitrary (possibly sparse) vertex labels.
    /// Labels are compacted to 0..n-1; returns the sorted label list,
    /// where position i holds the original label of new vertex i.
    pub fn from_labeled_edges(edges: &[(u64, u64)]) -> Result<(Self, Vec<u64>)> {
        let mut labels: Vec<u64> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        labels.sort_unstable();
        labels.dedup();
        let index = |l: u64| labels.binary_search(&l).unwrap();
        let mapped: Vec<(usize, usize)> =
            edges.iter().map(|&(a, b)| (index(a), index(b))).collect();
        let g = Self::from_edges(labels.len(), &mapped)?;
        Ok((g, labels))
    }

    #[inline]
    fn set_edge_raw(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + (v >> 6)] |= 1u64 << (v & 63);
    }

    fn recount_edges(&self) -> usize {
        let total: usize = self.adj.iter().map(|w| w.count_ones() as usize).sum();
        total / 2
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of edges.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + (v >> 6)] >> (v & 63) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &bits) in self.row(v).iter().enumerate() {
            let mut b = bits;
            while b != 0 {
                out.push((w << 6) + b.trailing_zeros() as usize);
                b &= b - 1;
            }
        }
        out
    }

    /// Edges of the induced subgraph on U.
    pub fn edges_within(&self, u_set: &VertexSet) -> Result<usize> {
        self.check_universe(u_set)?;
        let mut total = 0usize;
        for v in u_set.iter() {
            total += and_count(self.row(v), u_set.words());
        }
        Ok(total / 2)
    }

    /// Edges with one endpoint in X and the other in Y; X and Y must be disjoint.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> Result<usize> {
        self.check_universe(x)?;
        self.check_universe(y)?;
        if let Some(v) = x.intersects(y) {
            return Err(Error::OverlappingSets { vertex: v });
        }
        let mut total = 0usize;
        for v in x.iter() {
            total += and_count(self.row(v), y.words());
        }
        Ok(total)
    }

    /// e(X,Y) / (|X||Y|).
    pub fn density_between(&self, x: &VertexSet, y: &VertexSet) -> Result<f64> {
        let e = self.edges_between(x, y)?;
        let denom = (x.len() as f64) * (y.len() as f64);
        Ok(e as f64 / denom)
    }

    /// Number of triangles with at most one vertex in each part of the cut.
    pub fn triangles_crossing(&self, cut: &VertexCut) -> Result<usize> {
        self.cliques_crossing(cut, 3)
    }

    /// Number of k-cliques with at most one vertex in each part of the cut.
    /// Returns 0 when k exceeds the part count (no crossing tuple exists).
    pub fn cliques_crossing(&self, cut: &VertexCut, k: usize) -> Result<usize> {
        if k < 2 {
            return Err(Error::InvalidParam(format!("clique size {k} < 2")));
        }
        if cut.n() != self.n {
            return Err(Error::InvalidParam(format!(
                "cut covers {} vertices, graph has {}",
                cut.n(),
                self.n
            )));
        }
        if k > cut.r() {
            return Ok(0);
        }
        if k == 2 {
            return Ok(self.crossing_edges(cut));
        }
        let mut total = 0usize;
        let mut cand = vec![0u64; self.words];
        for u in 0..self.n {
            let pu = cut.part_of(u);
            for v in self.neighbors_above(u) {
                let pv = cut.part_of(v);
                if pv == pu {
                    continue;
                }
                // candidates: common neighbors above v outside both parts
                let ru = self.row(u);
                let rv = self.row(v);
                let mu = cut.part_words(pu);
                let mv = cut.part_words(pv);
                if k == 3 {
                    total += and_count_above(ru, rv, v, &[mu, mv]);
                } else {
                    for w in 0..self.words {
                        cand[w] = ru[w] & rv[w] & !mu[w] & !mv[w];
                    }
                    mask_below_inclusive(&mut cand, v);
                    total += self.count_cliques_rec(&cand, cut, k - 2);
                }
            }
        }
        Ok(total)
    }

    /// Extends a partial clique by `remaining` vertices chosen from `cand`
    /// (all above previously chosen, pairwise adjacent, distinct parts).
    fn count_cliques_rec(&self, cand: &[u64], cut: &VertexCut, remaining: usize) -> usize {
        if remaining == 1 {
            return cand.iter().map(|w| w.count_ones() as usize).sum();
        }
        let mut total = 0;
        let mut next = vec![0u64; self.words];
        for w_ix in 0..cand.len() {
            let mut bits = cand[w_ix];
            while bits != 0 {
                let v = (w_ix << 6) + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let rv = self.row(v);
                let mv = cut.part_words(cut.part_of(v));
                for w in 0..self.words {
                    next[w] = cand[w] & rv[w] & !mv[w];
                }
                mask_below_inclusive(&mut next, v);
                total += self.count_cliques_rec(&next, cut, remaining - 1);
            }
        }
        total
    }

    fn neighbors_above(&self, u: usize) -> Vec<usize> {
        let row = self.row(u);
        let mut out = Vec::new();
        let start_word = (u + 1) >> 6;
        let start_bit = (u + 1) & 63;
        for w in start_word..self.words {
            let mut bits = row[w];
            if w == start_word && start_bit != 0 {
                bits &= !0u64 << start_bit;
            }
            while bits != 0 {
                out.push((w << 6) + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Edges with endpoints in two different parts of the cut.
    pub fn crossing_edges(&self, cut: &VertexCut) -> usize {
        let mut total = 0usize;
        for u in 0..self.n {
            let mask = cut.part_words(cut.part_of(u));
            let row = self.row(u);
            let outside: usize = row
                .iter()
                .zip(mask)
                .map(|(&r, &m)| (r & !m).count_ones() as usize)
                .sum();
            total += outside;
        }
        total / 2
    }

    /// Number of 4-cycle subgraphs: each 4-vertex cyclic structure counted
    /// once, so K4 contributes 3. With this convention the expected count in
    /// G(n,p) is p^4 n^4 / 8 + O(n^3).
    pub fn count_c4(&self) -> u64 {
        // a 4-cycle is determined by an unordered pair of opposite vertices
        // plus 2 of their common neighbors; each cycle has 2 such pairs
        let mut twice: u64 = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let c = and_count(self.row(u), self.row(v)) as u64;
                twice += c * (c.saturating_sub(1)) / 2;
            }
        }
        twice / 2
    }

    /// The k-uniform hypergraph whose hyperedges are the k-cliques of self.
    pub fn clique_hypergraph(&self, k: usize) -> Result<UniformHypergraph> {
        if k < 2 {
            return Err(Error::InvalidParam(format!("clique size {k} < 2")));
        }
        let mut edges: Vec<Vec<u32>> = Vec::new();
        let mut prefix = Vec::with_capacity(k);
        let full = VertexSet::full(self.n);
        self.enum_cliques(full.words(), k, &mut prefix, &mut |clique| {
            edges.push(clique.iter().map(|&v| v as u32).collect());
        });
        UniformHypergraph::new(self.n, k, edges)
    }

    fn enum_cliques(
        &self,
        cand: &[u64],
        remaining: usize,
        prefix: &mut Vec<usize>,
        emit: &mut impl FnMut(&[usize]),
    ) {
        let mut next = vec![0u64; self.words];
        for w_ix in 0..cand.len() {
            let mut bits = cand[w_ix];
            while bits != 0 {
                let v = (w_ix << 6) + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                prefix.push(v);
                if remaining == 1 {
                    emit(prefix);
                } else {
                    let rv = self.row(v);
                    for w in 0..self.words {
                        next[w] = cand[w] & rv[w];
                    }
                    mask_below_inclusive(&mut next, v);
                    self.enum_cliques(&next, remaining - 1, prefix, emit);
                }
                prefix.pop();
            }
        }
    }

    /// Per-part and pairwise densities of an equipartition; parts must all
    /// have the same size.
    pub fn partition_stats(&self, parts: &[VertexSet]) -> Result<PartitionStats> {
        let t = parts.len();
        if t == 0 {
            return Err(Error::InvalidParam("no parts".into()));
        }
        let sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
        let m = sizes[0];
        if sizes.iter().any(|&s| s != m) || m == 0 {
            return Err(Error::UnequalParts { found: sizes });
        }
        let pairs_in_part = (m * (m - 1) / 2) as f64;
        let mut x = vec![0.0; t];
        let mut d = vec![vec![0.0; t]; t];
        for i in 0..t {
            x[i] = self.edges_within(&parts[i])? as f64 / pairs_in_part;
            for j in (i + 1)..t {
                let e = self.edges_between(&parts[i], &parts[j])? as f64;
                let dij = e / (m as f64 * m as f64);
                d[i][j] = dij;
                d[j][i] = dij;
            }
        }
        Ok(PartitionStats { t, m, x, d })
    }

    /// Canonical edge-list text: "n m" then one sorted edge per line,
    /// lines sorted lexicographically.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.m);
        for u in 0..self.n {
            for v in self.neighbors_above(u) {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let head: Vec<usize> = parse_usize_row(header)?;
        if head.len() != 2 {
            return Err(Error::Parse(format!(
                "expected header 'n m', got '{header}'"
            )));
        }
        let (n, m) = (head[0], head[1]);
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let row = parse_usize_row(line)?;
            if row.len() != 2 {
                return Err(Error::Parse(format!("expected 'u v', got '{line}'")));
            }
            edges.push((row[0], row[1]));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        Self::from_edges(n, &edges)
    }

    fn check_universe(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::InvalidParam(format!(
                "vertex set over universe {} used with graph of n = {}",
                s.universe(),
                self.n
            )));
        }
        Ok(())
    }
}

fn parse_usize_row(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad integer '{tok}': {e}")))
        })
        .collect()
}

/// Zero out all bits at positions <= v.
fn mask_below_inclusive(words: &mut [u64], v: usize) {
    let word = (v + 1) >> 6;
    let bit = (v + 1) & 63;
    for w in words.iter_mut().take(word) {
        *w = 0;
    }
    if word < words.len() && bit != 0 {
        words[word] &= !0u64 << bit;
    }
}

/// k-uniform hypergraph: a set of k-subsets of 0..n-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformHypergraph {
    n: usize,
    k: usize,
    /// Each edge sorted ascending; edge list sorted lexicographically.
    edges: Vec<Vec<u32>>,
}

impl UniformHypergraph {
    pub fn new(n: usize, k: usize, mut edges: Vec<Vec<u32>>) -> Result<Self> {
        for e in edges.iter_mut() {
            e.sort_unstable();
            if e.len() != k {
                return Err(Error::InvalidParam(format!(
                    "hyperedge of size {} in a {k}-uniform hypergraph",
                    e.len()
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParam("repeated vertex in hyperedge".into()));
            }
            if let Some(&max) = e.last() {
                if max as usize >= n {
                    return Err(Error::VertexOutOfRange {
                        index: max as usize,
                        n,
                    });
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(UniformHypergraph { n, k, edges })
    }

    /// Complete k-uniform hypergraph on n vertices.
    pub fn complete(n: usize, k: usize) -> Result<Self> {
        let subsets = crate::combin::subsets_colex(n, k);
        let edges = subsets
            .into_iter()
            .map(|s| s.into_iter().map(|v| v as u32).collect())
            .collect();
        Self::new(n, k, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// Hyperedges with at most one vertex in each part of the cut.
    pub fn hyperedges_crossing(&self, cut: &VertexCut) -> Result<usize> {
        if cut.n() != self.n {
            return Err(Error::InvalidParam(format!(
                "cut covers {} vertices, hypergraph has {}",
                cut.n(),
                self.n
            )));
        }
        if self.k > cut.r() {
            return Ok(0);
        }
        let part_of = cut.part_of_slice();
        let mut total = 0usize;
        let mut parts_buf: Vec<u16> = Vec::with_capacity(self.k);
        'edges: for e in &self.edges {
            parts_buf.clear();
            for &v in e {
                let p = part_of[v as usize];
                if parts_buf.contains(&p) {
                    continue 'edges;
                }
                parts_buf.push(p);
            }
            total += 1;
        }
        Ok(total)
    }

    /// Canonical edge-list text: "n m k" then one sorted edge per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.n, self.edges.len(), self.k);
        for e in &self.edges {
            let toks: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", toks.join(" "));
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let head = parse_usize_row(header)?;
        if head.len() != 3 {
            return Err(Error::Parse(format!(
                "expected header 'n m k', got '{header}'"
            )));
        }
        let (n, m, k) = (head[0], head[1], head[2]);
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let row = parse_usize_row(line)?;
            edges.push(row.into_iter().map(|v| v as u32).collect());
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {m} hyperedges, found {}",
                edges.len()
            )));
        }
        Self::new(n, k, edges)
    }
}

/// Ordered partition of 0..n-1 into r parts with prescribed size fractions.
#[derive(Clone, Debug)]
pub struct VertexCut {
    n: usize,
    parts: Vec<VertexSet>,
    part_of: Vec<u16>,
    alpha: Vec<f64>,
}

impl VertexCut {
    /// Builds a cut from explicit parts; checks disjointness and coverage.
    pub fn new(n: usize, parts: Vec<VertexSet>, alpha: Vec<f64>) -> Result<Self> {
        if parts.len() != alpha.len() {
            return Err(Error::InvalidSizeVector {
                reason: format!(
                    "{} parts but {} size fractions",
                    parts.len(),
                    alpha.len()
                ),
            });
        }
        if parts.len() > u16::MAX as usize {
            return Err(Error::InvalidParam("too many parts".into()));
        }
        let mut part_of = vec![u16::MAX; n];
        for (i, p) in parts.iter().enumerate() {
            if p.universe() != n {
                return Err(Error::InvalidParam(
                    "part universe does not match cut".into(),
                ));
            }
            for v in p.iter() {
                if part_of[v] != u16::MAX {
                    return Err(Error::OverlappingSets { vertex: v });
                }
                part_of[v] = i as u16;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == u16::MAX) {
            return Err(Error::InvalidSizeVector {
                reason: format!("vertex {v} not covered by any part"),
            });
        }
        Ok(VertexCut {
            n,
            parts,
            part_of,
            alpha,
        })
    }

    /// Builds the cut from an assignment vector (vertex -> part index).
    pub fn from_assignment(assignment: &[u8], r: usize, alpha: Vec<f64>) -> Result<Self> {
        let n = assignment.len();
        let mut parts = vec![VertexSet::empty(n); r];
        for (v, &p) in assignment.iter().enumerate() {
            if p as usize >= r {
                return Err(Error::InvalidParam(format!(
                    "assignment uses part {p} but r = {r}"
                )));
            }
            parts[p as usize].insert(v);
        }
        Self::new(n, parts, alpha)
    }

    /// Part sizes for a size-fraction vector: floor(alpha_i * n) plus one
    /// extra vertex for the largest remainders (ties broken by part index).
    pub fn sizes_for(n: usize, alpha: &[f64]) -> Result<Vec<usize>> {
        if alpha.is_empty() {
            return Err(Error::InvalidSizeVector {
                reason: "empty size vector".into(),
            });
        }
        let sum: f64 = alpha.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidSizeVector {
                reason: format!("fractions sum to {sum}, expected 1"),
            });
        }
        if alpha.iter().any(|&a| a <= 0.0) {
            return Err(Error::InvalidSizeVector {
                reason: "all fractions must be positive".into(),
            });
        }
        let mut sizes: Vec<usize> = alpha.iter().map(|&a| (a * n as f64).floor() as usize).collect();
        let assigned: usize = sizes.iter().sum();
        let mut remainders: Vec<(usize, f64)> = alpha
            .iter()
            .enumerate()
            .map(|(i, &a)| (i, a * n as f64 - sizes[i] as f64))
            .collect();
        remainders.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
        for k in 0..(n - assigned) {
            sizes[remainders[k % remainders.len()].0] += 1;
        }
        Ok(sizes)
    }

    /// Contiguous cut: part i takes the next sizes[i] vertices in label order.
    pub fn contiguous(n: usize, alpha: &[f64]) -> Result<Self> {
        let sizes = Self::sizes_for(n, alpha)?;
        let mut assignment = Vec::with_capacity(n);
        for (i, &s) in sizes.iter().enumerate() {
            assignment.extend(std::iter::repeat(i as u8).take(s));
        }
        Self::from_assignment(&assignment, sizes.len(), alpha.to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    #[inline]
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v] as usize
    }

    pub fn part_of_slice(&self) -> &[u16] {
        &self.part_of
    }

    #[inline]
    pub fn part_words(&self, i: usize) -> &[u64] {
        self.parts[i].words()
    }

    /// Compact text form: space-separated part assignment per vertex.
    pub fn assignment_string(&self) -> String {
        let toks: Vec<String> = self.part_of.iter().map(|p| p.to_string()).collect();
        toks.join(" ")
    }
}

/// Within-part and pairwise densities of a t-part equipartition.
#[derive(Clone, Debug)]
pub struct PartitionStats {
    pub t: usize,
    /// Vertices per part.
    pub m: usize,
    /// x[i] = e(V_i) / C(m,2)
    pub x: Vec<f64>,
    /// d[i][j] = e(V_i,V_j) / m^2, symmetric, diagonal unused (0).
    pub d: Vec<Vec<f64>>,
}

impl PartitionStats {
    /// Builds stats directly from target densities (used for closed-form
    /// solution families and synthetic profiles).
    pub fn from_values(x: Vec<f64>, d: Vec<Vec<f64>>) -> Result<Self> {
        let t = x.len();
        if d.len() != t || d.iter().any(|row| row.len() != t) {
            return Err(Error::InvalidParam("density matrix shape mismatch".into()));
        }
        for i in 0..t {
            for j in 0..t {
                if (d[i][j] - d[j][i]).abs() > 1e-12 {
                    return Err(Error::InvalidParam("density matrix not symmetric".into()));
                }
            }
        }
        Ok(PartitionStats { t, m: 0, x, d })
    }

    /// Smallest pairwise density over i != j.
    pub fn min_pair_density(&self) -> f64 {
        let mut min = f64::INFINITY;
        for i in 0..self.t {
            for j in 0..self.t {
                if i != j && self.d[i][j] < min {
                    min = self.d[i][j];
                }
            }
        }
        min
    }
}

/// Splits 0..n-1 into t contiguous equal parts; n must be divisible by t.
pub fn contiguous_equipartition(n: usize, t: usize) -> Result<Vec<VertexSet>> {
    if t == 0 || n % t != 0 {
        return Err(Error::InvalidParam(format!("{t} does not divide n = {n}")));
    }
    let m = n / t;
    let mut parts = Vec::with_capacity(t);
    for i in 0..t {
        let mut p = VertexSet::empty(n);
        for v in i * m..(i + 1) * m {
            p.insert(v);
        }
        parts.push(p);
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn c4_graph() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn balanced_cut(n: usize, r: usize) -> VertexCut {
        let alpha = vec![1.0 / r as f64; r];
        VertexCut::contiguous(n, &alpha).unwrap()
    }

    #[test]
    fn edges_within_examples() {
        let k4 = Graph::complete(4);
        let all = VertexSet::full(4);
        assert_eq!(k4.edges_within(&all).unwrap(), 6);

        let p = path3();
        let u = VertexSet::from_indices(3, &[0, 1, 2]).unwrap();
        assert_eq!(p.edges_within(&u).unwrap(), 2);

        let e = Graph::empty(5);
        let u = VertexSet::from_indices(5, &[1, 2, 4]).unwrap();
        assert_eq!(e.edges_within(&u).unwrap(), 0);
    }

    #[test]
    fn edges_between_examples() {
        let k4 = Graph::complete(4);
        let x = VertexSet::from_indices(4, &[0, 1]).unwrap();
        let y = VertexSet::from_indices(4, &[2, 3]).unwrap();
        assert_eq!(k4.edges_between(&x, &y).unwrap(), 4);

        let c4 = c4_graph();
        let x = VertexSet::from_indices(4, &[0, 2]).unwrap();
        let y = VertexSet::from_indices(4, &[1, 3]).unwrap();
        assert_eq!(c4.edges_between(&x, &y).unwrap(), 4);

        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let x = VertexSet::from_indices(4, &[0, 1]).unwrap();
        let y = VertexSet::from_indices(4, &[2, 3]).unwrap();
        assert_eq!(two.edges_between(&x, &y).unwrap(), 0);
    }

    #[test]
    fn edges_between_rejects_overlap() {
        let g = Graph::complete(4);
        let x = VertexSet::from_indices(4, &[0, 1]).unwrap();
        let y = VertexSet::from_indices(4, &[1, 2]).unwrap();
        assert!(matches!(
            g.edges_between(&x, &y),
            Err(Error::OverlappingSets { vertex: 1 })
        ));
    }

    #[test]
    fn triangles_crossing_examples() {
        let k6 = Graph::complete(6);
        assert_eq!(k6.triangles_crossing(&balanced_cut(6, 3)).unwrap(), 8);
        // r = 1: no crossing triple exists
        assert_eq!(k6.triangles_crossing(&balanced_cut(6, 1)).unwrap(), 0);
    }

    #[test]
    fn cliques_crossing_examples() {
        let k8 = Graph::complete(8);
        assert_eq!(k8.cliques_crossing(&balanced_cut(8, 4), 4).unwrap(), 16);
        // triangle-free graph: any cut, k=3 gives 0
        let c4 = c4_graph();
        assert_eq!(c4.cliques_crossing(&balanced_cut(4, 4), 3).unwrap(), 0);
        // k > r is 0 by convention
        assert_eq!(k8.cliques_crossing(&balanced_cut(8, 2), 3).unwrap(), 0);
    }

    #[test]
    fn count_c4_examples() {
        assert_eq!(c4_graph().count_c4(), 1);
        assert_eq!(Graph::complete(4).count_c4(), 3);
        assert_eq!(Graph::complete(5).count_c4(), 15);
    }

    #[test]
    fn clique_hypergraph_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.clique_hypergraph(3).unwrap().edge_count(), 4);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.clique_hypergraph(3).unwrap().edge_count(), 0);
    }

    #[test]
    fn partition_stats_examples() {
        let k8 = Graph::complete(8);
        let parts = contiguous_equipartition(8, 4).unwrap();
        let stats = k8.partition_stats(&parts).unwrap();
        for i in 0..4 {
            assert!((stats.x[i] - 1.0).abs() < 1e-12);
            for j in 0..4 {
                if i != j {
                    assert!((stats.d[i][j] - 1.0).abs() < 1e-12);
                }
            }
        }
        assert!((stats.min_pair_density() - 1.0).abs() < 1e-12);

        let e = Graph::empty(8);
        let stats = e.partition_stats(&parts).unwrap();
        assert!(stats.x.iter().all(|&v| v == 0.0));
        assert!(stats.min_pair_density() == 0.0);
    }

    #[test]
    fn partition_stats_rejects_unequal() {
        let g = Graph::complete(5);
        let parts = vec![
            VertexSet::from_indices(5, &[0, 1, 2]).unwrap(),
            VertexSet::from_indices(5, &[3, 4]).unwrap(),
        ];
        assert!(matches!(
            g.partition_stats(&parts),
            Err(Error::UnequalParts { .. })
        ));
    }

    #[test]
    fn hyperedges_crossing_examples() {
        let h = UniformHypergraph::complete(6, 3).unwrap();
        assert_eq!(h.hyperedges_crossing(&balanced_cut(6, 3)).unwrap(), 8);
        // r = 2 < k = 3 gives 0
        assert_eq!(h.hyperedges_crossing(&balanced_cut(6, 2)).unwrap(), 0);
    }

    #[test]
    fn decomposition_identity() {
        let g = Graph::from_edges(
            9,
            &[(0, 1), (0, 4), (1, 5), (2, 3), (4, 8), (5, 6), (6, 7), (2, 8)],
        )
        .unwrap();
        let cut = balanced_cut(9, 3);
        let within: usize = cut
            .parts()
            .iter()
            .map(|p| g.edges_within(p).unwrap())
            .sum();
        assert_eq!(within + g.crossing_edges(&cut), g.edge_count());
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::from_edges(6, &[(3, 1), (0, 5), (2, 4), (1, 0)]).unwrap();
        let text = g.to_edge_list();
        let g2 = Graph::from_edge_list(&text).unwrap();
        assert_eq!(g, g2);
        assert_eq!(text, g2.to_edge_list());
    }

    #[test]
    fn hypergraph_roundtrip() {
        let h = UniformHypergraph::new(
            5,
            3,
            vec![vec![4, 2, 0], vec![1, 2, 3], vec![0, 2, 4]],
        )
        .unwrap();
        assert_eq!(h.edge_count(), 2); // duplicate removed
        let text = h.to_edge_list();
        let h2 = UniformHypergraph::from_edge_list(&text).unwrap();
        assert_eq!(h, h2);
    }

    #[test]
    fn labeled_edges_relabeling() {
        let (g, labels) = Graph::from_labeled_edges(&[(10, 40), (40, 99)]).unwrap();
        assert_eq!(labels, vec![10, 40, 99]);
        assert_eq!(g.n(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn cut_sizes_rounding() {
        // sizes differ by at most one, largest remainders first
        let sizes = VertexCut::sizes_for(10, &[1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]).unwrap();
        assert_eq!(sizes, vec![4, 3, 3]);
        let sizes = VertexCut::sizes_for(11, &[0.5, 0.5]).unwrap();
        assert_eq!(sizes, vec![6, 5]);
    }
}
