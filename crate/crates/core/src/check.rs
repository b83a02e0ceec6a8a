//! Property checkers: each one searches a candidate space (subsets or
//! cuts) for the largest normalized deviation from the random-like target
//! count and reports it with a reproducible witness.
//!
//! Reported deviations are lower bounds on the true sup: the search is
//! exhaustive below fixed thresholds and otherwise samples a seeded
//! stream plus a battery of deterministic degree-ordered candidates (a
//! uniform sample alone has no realistic chance of hitting the planted
//! witnesses these checks exist to find).

use crate::bitset::VertexSet;
use crate::gen::{cut_count, rng_from, sample_balanced_cut};
use crate::graph::{Graph, UniformHypergraph, VertexCut};
use crate::report::Record;
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

/// Exhaustive subset scan is used iff 2^n fits this many evaluations.
pub const EXHAUSTIVE_SUBSET_LIMIT: u32 = 20;
/// Exhaustive cut scan is used iff the multinomial count is at most this.
pub const EXHAUSTIVE_CUT_LIMIT: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Subset(Vec<u32>),
    Cut(Vec<u8>),
    SubsetPair(Vec<u32>, Vec<u32>),
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
        }
    }
}

/// Outcome of a deviation search.
#[derive(Clone, Debug)]
pub struct DeviationReport {
    pub property: String,
    /// Target density parameter p of the property.
    pub target_density: f64,
    /// Deviations are normalized by n^exponent.
    pub norm_exponent: u32,
    pub samples: u64,
    pub max_abs_deviation: f64,
    pub witness: Witness,
    pub mode: Mode,
    pub seed: u64,
    pub flags: Vec<String>,
    /// Named sub-deviations for multi-part checks (empty otherwise).
    pub components: Vec<(String, f64)>,
}

impl DeviationReport {
    fn new(property: &str, p: f64, exponent: u32, mode: Mode, seed: u64) -> Self {
        DeviationReport {
            property: property.to_string(),
            target_density: p,
            norm_exponent: exponent,
            samples: 0,
            max_abs_deviation: 0.0,
            witness: Witness::None,
            mode,
            seed,
            flags: Vec::new(),
            components: Vec::new(),
        }
    }

    fn consider(&mut self, deviation: f64, witness: Witness) {
        self.samples += 1;
        if deviation > self.max_abs_deviation || self.samples == 1 {
            self.max_abs_deviation = deviation;
            self.witness = witness;
        }
    }

    pub fn to_record(&self) -> Record {
        let mut r = Record::new();
        r.push("record", "deviation-report");
        r.push("property", &self.property);
        r.push_f64("p", self.target_density);
        r.push("norm_exponent", self.norm_exponent);
        r.push("mode", self.mode.as_str());
        r.push("seed", self.seed);
        r.push("samples", self.samples);
        r.push_f64("max_abs_deviation", self.max_abs_deviation);
        match &self.witness {
            Witness::Subset(v) => {
                r.push("witness_kind", "subset");
                r.push("witness", join_u32(v));
            }
            Witness::Cut(assignment) => {
                r.push("witness_kind", "cut");
                r.push("witness", join_u8(assignment));
            }
            Witness::SubsetPair(a, b) => {
                r.push("witness_kind", "subset-pair");
                r.push("witness", format!("{} / {}", join_u32(a), join_u32(b)));
            }
            Witness::None => {
                r.push("witness_kind", "none");
            }
        }
        if !self.flags.is_empty() {
            r.push("flags", self.flags.join("; "));
        }
        for (name, value) in &self.components {
            r.push_f64(&format!("component.{name}"), *value);
        }
        r
    }
}

fn join_u8(v: &[u8]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_u32(v: &[u32]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// |e(U) - p |U|^2 / 2| / n^2
pub fn subset_edge_deviation(g: &Graph, p: f64, subset: &VertexSet) -> f64 {
    let e = g.edges_within(subset).expect("subset within universe") as f64;
    let u = subset.len() as f64;
    let n = g.n() as f64;
    (e - p * u * u / 2.0).abs() / (n * n)
}

/// |crossing_edges - p n^2 sum_{i<j} a_i a_j| / n^2
pub fn cut_edge_deviation(g: &Graph, p: f64, cut: &VertexCut) -> f64 {
    let n = g.n() as f64;
    let target = p * n * n * elementary_symmetric(cut.alpha(), 2);
    (g.crossing_edges(cut) as f64 - target).abs() / (n * n)
}

/// |cliques_crossing - p^C(k,2) n^k sum_{|S|=k} prod a_i| / n^k
pub fn cut_clique_deviation(g: &Graph, p: f64, k: usize, cut: &VertexCut) -> f64 {
    let n = g.n() as f64;
    let exponent = (k * (k - 1) / 2) as i32;
    let target = p.powi(exponent) * n.powi(k as i32) * elementary_symmetric(cut.alpha(), k);
    let count = g.cliques_crossing(cut, k).expect("checked parameters") as f64;
    (count - target).abs() / n.powi(k as i32)
}

/// |crossing_hyperedges - p n^k sum_{|S|=k} prod a_i| / n^k
pub fn cut_hyperedge_deviation(h: &UniformHypergraph, p: f64, cut: &VertexCut) -> f64 {
    let n = h.n() as f64;
    let k = h.k();
    let target = p * n.powi(k as i32) * elementary_symmetric(cut.alpha(), k);
    let count = h.hyperedges_crossing(cut).expect("checked parameters") as f64;
    (count - target).abs() / n.powi(k as i32)
}

/// Elementary symmetric polynomial e_k of the entries.
pub fn elementary_symmetric(values: &[f64], k: usize) -> f64 {
    let mut e = vec![0.0; k + 1];
    e[0] = 1.0;
    for &v in values {
        for j in (1..=k).rev() {
            e[j] += e[j - 1] * v;
        }
    }
    e[k]
}

/// Vertices ordered by degree descending (ties by index): the deterministic
/// candidate order used by the structured search.
fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    let degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    order.sort_by(|&a, &b| degs[b].cmp(&degs[a]).then(a.cmp(&b)));
    order
}

fn prefix_set(n: usize, order: &[usize], len: usize) -> VertexSet {
    let mut s = VertexSet::empty(n);
    for &v in &order[..len] {
        s.insert(v);
    }
    s
}

fn subset_witness(s: &VertexSet) -> Witness {
    Witness::Subset(s.iter().map(|v| v as u32).collect())
}

/// Max deviation of e(U) from p|U|^2/2 over all subsets (n <= 20) or over
/// `budget` uniform random subsets plus degree-ordered prefixes.
pub fn check_p1(g: &Graph, p: f64, budget: u64, seed: u64) -> DeviationReport {
    let n = g.n();
    if n as u32 <= EXHAUSTIVE_SUBSET_LIMIT {
        let mut report = DeviationReport::new("p1", p, 2, Mode::Exhaustive, seed);
        exhaustive_subsets(g, p, None, &mut report);
        return report;
    }
    let mut report = DeviationReport::new("p1", p, 2, Mode::Sampled, seed);
    let order = degree_order(g);
    for len in 0..=n {
        let s = prefix_set(n, &order, len);
        let dev = subset_edge_deviation(g, p, &s);
        report.consider(dev, subset_witness(&s));
    }
    let devs: Vec<f64> = (0..budget)
        .into_par_iter()
        .map(|i| {
            let s = random_subset(n, seed, i);
            subset_edge_deviation(g, p, &s)
        })
        .collect();
    fold_sampled_subsets(g, p, None, devs, seed, &mut report);
    report
}

/// As check_p1 restricted to subsets of size floor(alpha n) / ceil(alpha n).
pub fn check_p2(g: &Graph, p: f64, alpha: f64, budget: u64, seed: u64) -> Result<DeviationReport> {
    let n = g.n();
    if !(0.0 < alpha && alpha < 1.0) {
        return Err(Error::InvalidParam(format!("alpha = {alpha} outside (0,1)")));
    }
    let size = (alpha * n as f64).floor() as usize;
    if (alpha * n as f64) < 2.0 {
        return Err(Error::InvalidParam(format!(
            "alpha n = {} < 2",
            alpha * n as f64
        )));
    }
    let size_hi = (alpha * n as f64).ceil() as usize;
    if n as u32 <= EXHAUSTIVE_SUBSET_LIMIT {
        let mut report = DeviationReport::new("p2", p, 2, Mode::Exhaustive, seed);
        exhaustive_subsets(g, p, Some((size, size_hi)), &mut report);
        return Ok(report);
    }
    let mut report = DeviationReport::new("p2", p, 2, Mode::Sampled, seed);
    let order = degree_order(g);
    // densest and sparsest prefixes at the required size
    let s = prefix_set(n, &order, size);
    report.consider(subset_edge_deviation(g, p, &s), subset_witness(&s));
    let mut rev = order.clone();
    rev.reverse();
    let s = prefix_set(n, &rev, size);
    report.consider(subset_edge_deviation(g, p, &s), subset_witness(&s));
    let devs: Vec<f64> = (0..budget)
        .into_par_iter()
        .map(|i| {
            let s = random_fixed_subset(n, size, seed, i);
            subset_edge_deviation(g, p, &s)
        })
        .collect();
    fold_sampled_subsets(g, p, Some(size), devs, seed, &mut report);
    Ok(report)
}

fn exhaustive_subsets(
    g: &Graph,
    p: f64,
    size_filter: Option<(usize, usize)>,
    report: &mut DeviationReport,
) {
    let n = g.n();
    // single-word adjacency for n <= 20
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let nn = (n * n) as f64;
    let total: u64 = 1u64 << n;
    let chunk = 1u64 << 14;
    let chunks: Vec<(f64, u64)> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut best = (-1.0, 0u64);
            for mask in c * chunk..((c + 1) * chunk).min(total) {
                let size = mask.count_ones() as usize;
                if let Some((lo, hi)) = size_filter {
                    if size != lo && size != hi {
                        continue;
                    }
                }
                let mut e = 0u64;
                let mut bits = mask;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    e += (rows[v] & mask).count_ones() as u64;
                }
                let e = (e / 2) as f64;
                let u = size as f64;
                let dev = (e - p * u * u / 2.0).abs() / nn;
                if dev > best.0 {
                    best = (dev, mask);
                }
            }
            best
        })
        .collect();
    for (dev, mask) in chunks {
        if dev < 0.0 {
            continue;
        }
        let subset: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
        report.consider(dev, Witness::Subset(subset));
    }
    // samples = number of candidates actually evaluated
    report.samples = match size_filter {
        None => total,
        Some((lo, hi)) => {
            let mut c = crate::combin::binomial(n, lo);
            if hi != lo {
                c += crate::combin::binomial(n, hi);
            }
            c as u64
        }
    };
}

fn fold_sampled_subsets(
    g: &Graph,
    p: f64,
    fixed_size: Option<usize>,
    devs: Vec<f64>,
    seed: u64,
    report: &mut DeviationReport,
) {
    let n = g.n();
    let mut best: Option<(f64, usize)> = None;
    for (i, &d) in devs.iter().enumerate() {
        if best.map(|(bd, _)| d > bd).unwrap_or(true) {
            best = Some((d, i));
        }
    }
    if let Some((dev, i)) = best {
        if dev > report.max_abs_deviation {
            let s = match fixed_size {
                None => random_subset(n, seed, i as u64),
                Some(size) => random_fixed_subset(n, size, seed, i as u64),
            };
            report.max_abs_deviation = dev;
            report.witness = subset_witness(&s);
        }
    }
    report.samples += devs.len() as u64;
}

/// Uniform random subset: every vertex included with probability 1/2,
/// from the per-index derived stream.
fn random_subset(n: usize, seed: u64, index: u64) -> VertexSet {
    let mut rng = rng_from(seed, "subset", &[index]);
    let mut s = VertexSet::empty(n);
    for v in 0..n {
        if rng.random::<bool>() {
            s.insert(v);
        }
    }
    s
}

/// Uniform random subset of exactly `size` vertices.
fn random_fixed_subset(n: usize, size: usize, seed: u64, index: u64) -> VertexSet {
    let mut rng = rng_from(seed, "subset-fixed", &[index]);
    let mut perm: Vec<usize> = (0..n).collect();
    let (chosen, _) = perm.partial_shuffle(&mut rng, size);
    let mut s = VertexSet::empty(n);
    for &v in chosen.iter() {
        s.insert(v);
    }
    s
}

/// Subset drawn by including each vertex independently with probability
/// `alpha` (the random-subset concentration experiment).
pub fn sample_inclusion_subset(n: usize, alpha: f64, seed: u64, index: u64) -> VertexSet {
    let mut rng = rng_from(seed, "inclusion-subset", &[index]);
    let mut s = VertexSet::empty(n);
    for v in 0..n {
        if rng.random::<f64>() < alpha {
            s.insert(v);
        }
    }
    s
}

/// Edge count and 4-cycle count against their expected scale:
/// component "edges" is |e - p n^2/2|/n^2, component "c4" is
/// |c4 - p^4 n^4/8|/n^4; the reported deviation is the larger one.
pub fn check_p3(g: &Graph, p: f64) -> DeviationReport {
    let n = g.n() as f64;
    let mut report = DeviationReport::new("p3", p, 4, Mode::Exhaustive, 0);
    let edge_dev = (g.edge_count() as f64 - p * n * n / 2.0).abs() / (n * n);
    let c4_dev = (g.count_c4() as f64 - p.powi(4) * n.powi(4) / 8.0).abs() / n.powi(4);
    report.components.push(("edges".into(), edge_dev));
    report.components.push(("c4".into(), c4_dev));
    report.samples = 1;
    report.max_abs_deviation = edge_dev.max(c4_dev);
    report
}

fn validate_alpha(alpha: &[f64]) -> Result<()> {
    if alpha.len() < 2 {
        return Err(Error::InvalidSizeVector {
            reason: "need at least 2 parts".into(),
        });
    }
    let sum: f64 = alpha.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidSizeVector {
            reason: format!("fractions sum to {sum}"),
        });
    }
    Ok(())
}

/// Max deviation of crossing edge counts over ordered cuts with the given
/// size fractions. Exhaustive when the cut count is at most the fixed
/// enumeration limit, otherwise `budget` sampled cuts (flagged).
pub fn check_cut_graph(
    g: &Graph,
    p: f64,
    alpha: &[f64],
    budget: u64,
    seed: u64,
) -> Result<DeviationReport> {
    validate_alpha(alpha)?;
    check_cuts_generic(
        "cut",
        g.n(),
        p,
        alpha,
        budget,
        seed,
        2,
        |cut| cut_edge_deviation(g, p, cut),
    )
}

/// Max deviation of crossing k-clique counts over cuts; requires r >= k >= 2.
pub fn check_clique_cut(
    g: &Graph,
    p: f64,
    k: usize,
    alpha: &[f64],
    budget: u64,
    seed: u64,
) -> Result<DeviationReport> {
    validate_alpha(alpha)?;
    if k < 2 {
        return Err(Error::InvalidParam(format!("k = {k} < 2")));
    }
    if alpha.len() < k {
        return Err(Error::InvalidParam(format!(
            "r = {} < k = {k}",
            alpha.len()
        )));
    }
    check_cuts_generic(
        "clique-cut",
        g.n(),
        p,
        alpha,
        budget,
        seed,
        k as u32,
        |cut| cut_clique_deviation(g, p, k, cut),
    )
}

/// Max deviation of crossing hyperedge counts over cuts; requires r >= k.
pub fn check_cut_hypergraph(
    h: &UniformHypergraph,
    p: f64,
    alpha: &[f64],
    budget: u64,
    seed: u64,
) -> Result<DeviationReport> {
    validate_alpha(alpha)?;
    if alpha.len() < h.k() {
        return Err(Error::InvalidParam(format!(
            "r = {} < k = {}",
            alpha.len(),
            h.k()
        )));
    }
    check_cuts_generic(
        "hypergraph-cut",
        h.n(),
        p,
        alpha,
        budget,
        seed,
        h.k() as u32,
        |cut| cut_hyperedge_deviation(h, p, cut),
    )
}

#[allow(clippy::too_many_arguments)]
fn check_cuts_generic(
    property: &str,
    n: usize,
    p: f64,
    alpha: &[f64],
    budget: u64,
    seed: u64,
    exponent: u32,
    deviation: impl Fn(&VertexCut) -> f64 + Sync,
) -> Result<DeviationReport> {
    let count = cut_count(n, alpha)?;
    if count <= EXHAUSTIVE_CUT_LIMIT {
        let mut report = DeviationReport::new(property, p, exponent, Mode::Exhaustive, seed);
        let cuts: Vec<VertexCut> =
            crate::gen::enumerate_balanced_cuts(n, alpha, EXHAUSTIVE_CUT_LIMIT)?.collect();
        let devs: Vec<f64> = cuts.par_iter().map(&deviation).collect();
        for (cut, dev) in cuts.iter().zip(&devs) {
            report.consider(
                *dev,
                Witness::Cut(cut.part_of_slice().iter().map(|&p| p as u8).collect()),
            );
        }
        return Ok(report);
    }
    let mut report = DeviationReport::new(property, p, exponent, Mode::Sampled, seed);
    report
        .flags
        .push(format!("enumeration over limit ({count} cuts); sampled"));
    let devs: Vec<f64> = (0..budget)
        .into_par_iter()
        .map(|i| {
            let cut = sample_balanced_cut(n, alpha, crate::gen::derive_seed(seed, "cut-sample", &[i]))
                .expect("validated alpha");
            deviation(&cut)
        })
        .collect();
    let mut best: Option<(f64, u64)> = None;
    for (i, &d) in devs.iter().enumerate() {
        if best.map(|(bd, _)| d > bd).unwrap_or(true) {
            best = Some((d, i as u64));
        }
    }
    if let Some((dev, i)) = best {
        let cut = sample_balanced_cut(n, alpha, crate::gen::derive_seed(seed, "cut-sample", &[i]))?;
        report.max_abs_deviation = dev;
        report.witness = Witness::Cut(cut.part_of_slice().iter().map(|&p| p as u8).collect());
    }
    report.samples = budget;
    Ok(report)
}

/// |d(X,Y) - d(A,B)| for fixed sub-pairs (used for witness re-evaluation).
pub fn pair_density_gap(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<f64> {
    let dxy = g.density_between(x, y)?;
    let dab = g.density_between(a, b)?;
    Ok((dxy - dab).abs())
}

/// Sampled lower bound on the regularity defect of the pair (X,Y):
/// max |d(X,Y) - d(A,B)| over sampled sub-pairs with |A| >= eps|X|,
/// |B| >= eps|Y|, plus degree-ordered prefix candidates. The true sup is
/// at least the reported value; this is an estimate, not a certificate.
pub fn regularity_deviation(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    epsilon: f64,
    trials: u64,
    seed: u64,
) -> Result<DeviationReport> {
    if epsilon <= 0.0 || epsilon > 1.0 {
        return Err(Error::InvalidParam(format!("epsilon = {epsilon}")));
    }
    if (x.len() as f64) < 1.0 / epsilon || (y.len() as f64) < 1.0 / epsilon {
        return Err(Error::InvalidParam(format!(
            "|X| = {}, |Y| = {} below 1/epsilon = {}",
            x.len(),
            y.len(),
            1.0 / epsilon
        )));
    }
    if let Some(v) = x.intersects(y) {
        return Err(Error::OverlappingSets { vertex: v });
    }
    let n = g.n();
    let xs = x.to_indices();
    let ys = y.to_indices();
    let min_a = (epsilon * xs.len() as f64).ceil() as usize;
    let min_b = (epsilon * ys.len() as f64).ceil() as usize;
    let mut report = DeviationReport::new("regularity", g.density_between(x, y)?, 0, Mode::Sampled, seed);
    report.flags.push("sampled lower bound on sup deviation".into());

    // degree-into-the-other-side prefixes
    let deg_into = |side: &[usize], other: &VertexSet| -> Vec<usize> {
        let mut order = side.to_vec();
        order.sort_by_key(|&v| {
            std::cmp::Reverse(crate::bitset::and_count(g.row(v), other.words()))
        });
        order
    };
    let x_ord = deg_into(&xs, y);
    let y_ord = deg_into(&ys, x);
    let mut consider_pair = |a: &VertexSet, b: &VertexSet, report: &mut DeviationReport| {
        let dev = pair_density_gap(g, x, y, a, b).expect("subsets of X and Y");
        report.consider(
            dev,
            Witness::SubsetPair(
                a.iter().map(|v| v as u32).collect(),
                b.iter().map(|v| v as u32).collect(),
            ),
        );
    };
    for len in min_a..=x_ord.len() {
        let a = set_from(n, &x_ord[..len]);
        consider_pair(&a, y, &mut report);
    }
    for len in min_b..=y_ord.len() {
        let b = set_from(n, &y_ord[..len]);
        consider_pair(x, &b, &mut report);
    }

    let devs: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let (a, b) = random_subpair(&xs, &ys, min_a, min_b, n, seed, i);
            pair_density_gap(g, x, y, &a, &b).expect("subsets of X and Y")
        })
        .collect();
    let mut best: Option<(f64, u64)> = None;
    for (i, &d) in devs.iter().enumerate() {
        if best.map(|(bd, _)| d > bd).unwrap_or(true) {
            best = Some((d, i as u64));
        }
    }
    if let Some((dev, i)) = best {
        if dev > report.max_abs_deviation {
            let (a, b) = random_subpair(&xs, &ys, min_a, min_b, n, seed, i);
            report.max_abs_deviation = dev;
            report.witness = Witness::SubsetPair(
                a.iter().map(|v| v as u32).collect(),
                b.iter().map(|v| v as u32).collect(),
            );
        }
    }
    report.samples += trials;
    Ok(report)
}

fn set_from(n: usize, indices: &[usize]) -> VertexSet {
    let mut s = VertexSet::empty(n);
    for &v in indices {
        s.insert(v);
    }
    s
}

fn random_subpair(
    xs: &[usize],
    ys: &[usize],
    min_a: usize,
    min_b: usize,
    n: usize,
    seed: u64,
    index: u64,
) -> (VertexSet, VertexSet) {
    let mut rng = rng_from(seed, "regularity-pair", &[index]);
    let size_a = rng.random_range(min_a..=xs.len());
    let size_b = rng.random_range(min_b..=ys.len());
    let mut xv = xs.to_vec();
    let (ca, _) = xv.partial_shuffle(&mut rng, size_a);
    let a = set_from(n, ca);
    let mut yv = ys.to_vec();
    let (cb, _) = yv.partial_shuffle(&mut rng, size_b);
    let b = set_from(n, cb);
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{gen_gnp, gen_half_split};

    #[test]
    fn elementary_symmetric_values() {
        let a = [0.5, 0.5];
        assert!((elementary_symmetric(&a, 2) - 0.25).abs() < 1e-15);
        let b = [1.0 / 3.0; 3];
        assert!((elementary_symmetric(&b, 2) - 3.0 / 9.0).abs() < 1e-12);
        assert!((elementary_symmetric(&b, 3) - 1.0 / 27.0).abs() < 1e-12);
    }

    #[test]
    fn p1_complete_graph_gap() {
        // only the |U|^2/2 vs C(|U|,2) gap remains: exactly 1/(2n)
        let n = 12;
        let g = Graph::complete(n);
        let report = check_p1(&g, 1.0, 0, 1);
        assert_eq!(report.mode, Mode::Exhaustive);
        assert!((report.max_abs_deviation - 1.0 / (2.0 * n as f64)).abs() < 1e-12);
    }

    #[test]
    fn p1_empty_graph_zero() {
        let g = Graph::empty(10);
        let report = check_p1(&g, 0.0, 0, 1);
        assert_eq!(report.max_abs_deviation, 0.0);
    }

    #[test]
    fn p2_examples() {
        let n = 12;
        let g = Graph::complete(n);
        let report = check_p2(&g, 1.0, 0.5, 0, 1).unwrap();
        assert!(report.max_abs_deviation <= 1.0 / (2.0 * n as f64) + 1e-12);

        let g = Graph::empty(12);
        let report = check_p2(&g, 0.0, 0.5, 0, 1).unwrap();
        assert_eq!(report.max_abs_deviation, 0.0);

        assert!(check_p2(&Graph::empty(12), 0.0, 0.1, 0, 1).is_err());
    }

    #[test]
    fn p3_examples() {
        let n = 12usize;
        let g = Graph::complete(n);
        let report = check_p3(&g, 1.0);
        let c4_dev = report
            .components
            .iter()
            .find(|(k, _)| k == "c4")
            .unwrap()
            .1;
        assert!(c4_dev <= 1.0 / n as f64);

        let report = check_p3(&Graph::empty(20), 0.0);
        assert_eq!(report.max_abs_deviation, 0.0);
    }

    #[test]
    fn cut_graph_complete() {
        let g = Graph::complete(12);
        let report = check_cut_graph(&g, 1.0, &[0.5, 0.5], 100, 1).unwrap();
        assert_eq!(report.mode, Mode::Exhaustive);
        assert!(report.max_abs_deviation <= 1.0 / 12.0);
    }

    #[test]
    fn clique_cut_k2_matches_cut_graph() {
        let g = gen_gnp(40, 0.4, 3);
        // same seed -> same sampled stream (n large enough would sample;
        // here both go exhaustive over the same enumeration)
        let a = check_cut_graph(&g, 0.4, &[0.25, 0.75], 50, 9).unwrap();
        let b = check_clique_cut(&g, 0.4, 2, &[0.25, 0.75], 50, 9).unwrap();
        assert_eq!(a.max_abs_deviation, b.max_abs_deviation);
        assert_eq!(a.samples, b.samples);
    }

    #[test]
    fn half_split_separation_small() {
        // scaled-down version of the separation experiment
        let (n, p) = (200, 0.3);
        let g = gen_half_split(n, p, 17).unwrap();
        let cut_report = check_cut_graph(&g, p, &[0.5, 0.5], 500, 5).unwrap();
        assert!(
            cut_report.max_abs_deviation <= 0.03,
            "cut deviation {}",
            cut_report.max_abs_deviation
        );
        let p1_report = check_p1(&g, p, 500, 5);
        assert!(
            p1_report.max_abs_deviation >= 0.03,
            "p1 deviation {}",
            p1_report.max_abs_deviation
        );
    }

    #[test]
    fn budget_monotonicity() {
        let g = gen_gnp(64, 0.5, 2);
        let d1 = check_p1(&g, 0.5, 100, 7).max_abs_deviation;
        let d2 = check_p1(&g, 0.5, 400, 7).max_abs_deviation;
        assert!(d2 >= d1);
    }

    #[test]
    fn triangle_free_clique_cut_reports_target() {
        let g = Graph::from_edges(9, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let alpha = vec![1.0 / 3.0; 3];
        let report = check_clique_cut(&g, 0.5, 3, &alpha, 10, 1).unwrap();
        let expected = 0.5f64.powi(3) * elementary_symmetric(&alpha, 3);
        assert!((report.max_abs_deviation - expected).abs() < 1e-12);
    }

    #[test]
    fn regularity_examples() {
        // complete bipartite pair: defect 0
        let mut edges = Vec::new();
        for u in 0..15 {
            for v in 15..30 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(30, &edges).unwrap();
        let x = set_from(30, &(0..15).collect::<Vec<_>>());
        let y = set_from(30, &(15..30).collect::<Vec<_>>());
        let report = regularity_deviation(&g, &x, &y, 0.2, 50, 1).unwrap();
        assert_eq!(report.max_abs_deviation, 0.0);

        // all edges concentrated on half of X: estimate >= d(X,Y)/2
        let mut edges = Vec::new();
        for u in 0..10 {
            for v in 20..40 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(40, &edges).unwrap();
        let x = set_from(40, &(0..20).collect::<Vec<_>>());
        let y = set_from(40, &(20..40).collect::<Vec<_>>());
        let d = g.density_between(&x, &y).unwrap();
        let report = regularity_deviation(&g, &x, &y, 0.5, 100, 1).unwrap();
        assert!(report.max_abs_deviation >= d / 2.0);
    }

    #[test]
    fn report_record_roundtrip_fields() {
        let g = gen_gnp(30, 0.5, 1);
        let report = check_p1(&g, 0.5, 10, 3);
        let rec = report.to_record();
        assert_eq!(rec.require("property").unwrap(), "p1");
        assert_eq!(
            rec.require_f64("max_abs_deviation").unwrap(),
            report.max_abs_deviation
        );
    }
}
