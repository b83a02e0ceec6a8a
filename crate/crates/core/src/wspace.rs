//! Density vectors over the k-subsets of a t-part partition, the
//! half-set weight vectors u (entry 2p|e ∩ I|/k), and least-squares
//! distance to their affine hull W.
//!
//! The reported residual is the value of a feasible affine combination,
//! hence an upper bound on the minimum distance; exact arithmetic is not
//! needed here, this is the one floating-point corner of the matrix layer.

use crate::bitset::VertexSet;
use crate::combin::{binomial, colex_rank, subsets_colex};
use crate::graph::{Graph, UniformHypergraph};
use crate::{Error, Result};

/// Real vector indexed by the k-subsets of [t] in colexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityVector {
    pub t: usize,
    pub k: usize,
    pub values: Vec<f64>,
}

impl DensityVector {
    pub fn new(t: usize, k: usize, values: Vec<f64>) -> Result<Self> {
        let expect = binomial(t, k) as usize;
        if values.len() != expect {
            return Err(Error::InvalidParam(format!(
                "density vector needs C({t},{k}) = {expect} entries, got {}",
                values.len()
            )));
        }
        Ok(DensityVector { t, k, values })
    }

    pub fn constant(t: usize, k: usize, value: f64) -> Self {
        DensityVector {
            t,
            k,
            values: vec![value; binomial(t, k) as usize],
        }
    }

    pub fn get(&self, subset: &[usize]) -> f64 {
        self.values[colex_rank(subset)]
    }

    pub fn set(&mut self, subset: &[usize], v: f64) {
        self.values[colex_rank(subset)] = v;
    }

    pub fn linf_distance(&self, other: &DensityVector) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Density vector of a hypergraph with respect to equal parts: entry at J
/// is the number of hyperedges with exactly one vertex in each part of J,
/// divided by m^k.
pub fn hypergraph_density_vector(
    h: &UniformHypergraph,
    parts: &[VertexSet],
) -> Result<DensityVector> {
    let t = parts.len();
    let k = h.k();
    if k > t {
        return Err(Error::InvalidParam(format!("k = {k} exceeds t = {t}")));
    }
    let m = parts.first().map(|p| p.len()).unwrap_or(0);
    if parts.iter().any(|p| p.len() != m) || m == 0 {
        return Err(Error::UnequalParts {
            found: parts.iter().map(|p| p.len()).collect(),
        });
    }
    let n = h.n();
    let mut part_of = vec![u16::MAX; n];
    for (i, p) in parts.iter().enumerate() {
        for v in p.iter() {
            part_of[v] = i as u16;
        }
    }
    let mut counts = vec![0u64; binomial(t, k) as usize];
    let mut subset = vec![0usize; k];
    'edges: for e in h.edges() {
        for (slot, &v) in e.iter().enumerate() {
            let p = part_of[v as usize];
            if p == u16::MAX {
                continue 'edges; // vertex outside the partition
            }
            subset[slot] = p as usize;
        }
        subset.sort_unstable();
        if subset.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        counts[colex_rank(&subset)] += 1;
    }
    let scale = (m as f64).powi(k as i32);
    DensityVector::new(t, k, counts.iter().map(|&c| c as f64 / scale).collect())
}

/// Density vector of crossing k-cliques of a graph over equal parts:
/// entry at J counts cliques with one vertex in each listed part, / m^k.
pub fn clique_density_vector(g: &Graph, parts: &[VertexSet], k: usize) -> Result<DensityVector> {
    let t = parts.len();
    if k < 2 || k > t {
        return Err(Error::InvalidParam(format!("k = {k} out of range for t = {t}")));
    }
    let m = parts.first().map(|p| p.len()).unwrap_or(0);
    if parts.iter().any(|p| p.len() != m) || m == 0 {
        return Err(Error::UnequalParts {
            found: parts.iter().map(|p| p.len()).collect(),
        });
    }
    let subsets = subsets_colex(t, k);
    let scale = (m as f64).powi(k as i32);
    let values: Vec<f64> = subsets
        .iter()
        .map(|sub| cross_clique_count(g, parts, sub) as f64 / scale)
        .collect();
    DensityVector::new(t, k, values)
}

/// Number of k-cliques with exactly one vertex in each of the listed parts.
pub fn cross_clique_count(g: &Graph, parts: &[VertexSet], subset: &[usize]) -> u64 {
    let words = parts[subset[0]].words().len();
    let mut total = 0u64;
    // choose one vertex per part in subset order, constraining candidates
    // of later parts to common neighbors
    fn rec(
        g: &Graph,
        parts: &[VertexSet],
        subset: &[usize],
        depth: usize,
        cand_rest: &[Vec<u64>],
        total: &mut u64,
    ) {
        let part = &parts[subset[depth]];
        let cand = &cand_rest[depth];
        for w in 0..cand.len() {
            let mut bits = part.words()[w] & cand[w];
            while bits != 0 {
                let v = (w << 6) + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if depth + 1 == subset.len() {
                    *total += 1;
                } else {
                    let mut next = cand_rest.to_vec();
                    let row = g.row(v);
                    for d in (depth + 1)..subset.len() {
                        for (word, r) in next[d].iter_mut().zip(row) {
                            *word &= r;
                        }
                    }
                    rec(g, parts, subset, depth + 1, &next, total);
                }
            }
        }
    }
    // specialized fast paths for the common sizes
    match subset.len() {
        2 => {
            for v in parts[subset[0]].iter() {
                total += crate::bitset::and_count(g.row(v), parts[subset[1]].words()) as u64;
            }
        }
        3 => {
            let (a, b, c) = (subset[0], subset[1], subset[2]);
            for u in parts[a].iter() {
                let ru = g.row(u);
                let mut b_bits: Vec<u64> = parts[b]
                    .words()
                    .iter()
                    .zip(ru)
                    .map(|(&pw, &rw)| pw & rw)
                    .collect();
                for (w, word) in b_bits.iter_mut().enumerate() {
                    while *word != 0 {
                        let v = (w << 6) + word.trailing_zeros() as usize;
                        *word &= *word - 1;
                        let rv = g.row(v);
                        total += ru
                            .iter()
                            .zip(rv)
                            .zip(parts[c].words())
                            .map(|((&x, &y), &z)| (x & y & z).count_ones() as u64)
                            .sum::<u64>();
                    }
                }
            }
        }
        _ => {
            let cand_rest: Vec<Vec<u64>> = (0..subset.len()).map(|_| vec![!0u64; words]).collect();
            rec(g, parts, subset, 0, &cand_rest, &mut total);
        }
    }
    total
}

/// The half-set weight vector: entry at k-subset e is 2p|e ∩ I|/k.
/// Requires t even and |I| = t/2.
pub fn split_weight_vector(t: usize, k: usize, p: f64, half_set: &[usize]) -> Result<DensityVector> {
    if t % 2 != 0 {
        return Err(Error::InvalidParam(format!("t = {t} must be even")));
    }
    if half_set.len() != t / 2 {
        return Err(Error::InvalidParam(format!(
            "|I| = {} but t/2 = {}",
            half_set.len(),
            t / 2
        )));
    }
    let mut in_half = vec![false; t];
    for &v in half_set {
        if v >= t {
            return Err(Error::VertexOutOfRange { index: v, n: t });
        }
        in_half[v] = true;
    }
    let subsets = subsets_colex(t, k);
    let values: Vec<f64> = subsets
        .iter()
        .map(|sub| {
            let inter = sub.iter().filter(|&&v| in_half[v]).count();
            2.0 * p * inter as f64 / k as f64
        })
        .collect();
    DensityVector::new(t, k, values)
}

/// Result of projecting a density vector onto the affine hull of the
/// half-set weight vectors.
#[derive(Clone, Debug)]
pub struct HullProjection {
    pub l2_residual: f64,
    pub linf_residual: f64,
    /// Affine coefficients over all C(t, t/2) generators (sum to 1).
    pub coefficients: Vec<f64>,
    pub projection: DensityVector,
}

/// Least-squares projection of `d` onto the affine hull of
/// { u_{t,p,I} : |I| = t/2 }, with coefficients constrained to sum to 1.
/// The returned residuals are those of the projection, so the l-inf value
/// upper-bounds the minimum l-inf distance to the hull. t <= 16.
pub fn distance_to_split_hull(d: &DensityVector, p: f64) -> Result<HullProjection> {
    let (t, k) = (d.t, d.k);
    if t % 2 != 0 {
        return Err(Error::InvalidParam(format!("t = {t} must be even")));
    }
    if t > 16 {
        return Err(Error::BudgetExceeded {
            what: "split-hull generators",
            count: binomial(t, t / 2),
            budget: binomial(16, 8),
        });
    }
    let half_sets = subsets_colex(t, t / 2);
    let n_gen = half_sets.len();
    let dim = d.values.len();
    // the affine hull is ubar + span{u_I - ubar}; ubar is the constant-p
    // vector (every element lies in half of the I's)
    let generators: Vec<Vec<f64>> = half_sets
        .iter()
        .map(|hs| split_weight_vector(t, k, p, hs).expect("valid half sets").values)
        .collect();
    let ubar: Vec<f64> = {
        let mut acc = vec![0.0; dim];
        for g in &generators {
            for (a, &v) in acc.iter_mut().zip(g) {
                *a += v;
            }
        }
        for a in acc.iter_mut() {
            *a /= n_gen as f64;
        }
        acc
    };
    // modified Gram-Schmidt over centered generators, tracking each basis
    // vector as a combination of pivot generators
    let scale: f64 = generators
        .iter()
        .flat_map(|g| g.iter())
        .fold(0.0f64, |m, &v| m.max(v.abs()))
        .max(1.0);
    let tol = 1e-10 * scale;
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut combos: Vec<Vec<(usize, f64)>> = Vec::new();
    for (gi, g) in generators.iter().enumerate() {
        let mut v: Vec<f64> = g.iter().zip(&ubar).map(|(a, b)| a - b).collect();
        let mut combo: Vec<(usize, f64)> = vec![(gi, 1.0)];
        for (q, qc) in basis.iter().zip(&combos) {
            let proj: f64 = v.iter().zip(q).map(|(a, b)| a * b).sum();
            for (a, b) in v.iter_mut().zip(q) {
                *a -= proj * b;
            }
            for &(ix, w) in qc {
                combo.push((ix, -proj * w));
            }
        }
        let norm: f64 = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm <= tol {
            continue;
        }
        for a in v.iter_mut() {
            *a /= norm;
        }
        let combo: Vec<(usize, f64)> = combo.into_iter().map(|(ix, w)| (ix, w / norm)).collect();
        basis.push(v);
        combos.push(combo);
        if basis.len() == dim {
            break;
        }
    }
    // project the centered target
    let centered: Vec<f64> = d.values.iter().zip(&ubar).map(|(a, b)| a - b).collect();
    let mut projection = ubar.clone();
    let mut gamma = vec![0.0f64; n_gen];
    for (q, qc) in basis.iter().zip(&combos) {
        let beta: f64 = centered.iter().zip(q).map(|(a, b)| a * b).sum();
        for (pv, b) in projection.iter_mut().zip(q) {
            *pv += beta * b;
        }
        for &(ix, w) in qc {
            gamma[ix] += beta * w;
        }
    }
    // coefficients: uniform base for ubar plus the centered corrections
    let gamma_sum: f64 = gamma.iter().sum();
    let base = (1.0 - gamma_sum) / n_gen as f64;
    let coefficients: Vec<f64> = gamma.iter().map(|&g| base + g).collect();
    let residual: Vec<f64> = d
        .values
        .iter()
        .zip(&projection)
        .map(|(a, b)| a - b)
        .collect();
    let l2 = residual.iter().map(|r| r * r).sum::<f64>().sqrt();
    let linf = residual.iter().fold(0.0f64, |m, &r| m.max(r.abs()));
    Ok(HullProjection {
        l2_residual: l2,
        linf_residual: linf,
        coefficients,
        projection: DensityVector::new(t, k, projection)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contiguous_equipartition;
    use crate::gen::gen_gnp;

    #[test]
    fn split_weight_examples() {
        // t=4, k=3, p=0.5, I={0,1}: entries 2/3, 2/3, 1/3, 1/3
        let u = split_weight_vector(4, 3, 0.5, &[0, 1]).unwrap();
        assert!((u.get(&[0, 1, 2]) - 2.0 / 3.0).abs() < 1e-15);
        assert!((u.get(&[0, 1, 3]) - 2.0 / 3.0).abs() < 1e-15);
        assert!((u.get(&[0, 2, 3]) - 1.0 / 3.0).abs() < 1e-15);
        assert!((u.get(&[1, 2, 3]) - 1.0 / 3.0).abs() < 1e-15);

        let z = split_weight_vector(4, 3, 0.0, &[0, 1]).unwrap();
        assert!(z.values.iter().all(|&v| v == 0.0));

        assert!(split_weight_vector(4, 3, 0.5, &[0]).is_err());
        assert!(split_weight_vector(5, 3, 0.5, &[0, 1]).is_err());
    }

    #[test]
    fn average_of_generators_is_constant() {
        let (t, k, p) = (6, 3, 0.4);
        let half_sets = subsets_colex(t, t / 2);
        let dim = binomial(t, k) as usize;
        let mut acc = vec![0.0; dim];
        for hs in &half_sets {
            let u = split_weight_vector(t, k, p, hs).unwrap();
            for (a, v) in acc.iter_mut().zip(&u.values) {
                *a += v;
            }
        }
        for a in acc.iter_mut() {
            *a /= half_sets.len() as f64;
        }
        assert!(acc.iter().all(|&v| (v - p).abs() < 1e-12));
    }

    #[test]
    fn membership_cases_have_zero_residual() {
        let (t, k, p) = (8, 3, 0.3);
        // a generator itself
        let u = split_weight_vector(t, k, p, &[0, 2, 4, 6]).unwrap();
        let proj = distance_to_split_hull(&u, p).unwrap();
        assert!(proj.linf_residual <= 1e-10, "linf {}", proj.linf_residual);
        assert!(proj.l2_residual <= 1e-10);
        let sum: f64 = proj.coefficients.iter().sum();
        assert!((sum - 1.0).abs() < 1e-9);

        // the constant-p vector lies in the hull by symmetry
        let c = DensityVector::constant(t, k, p);
        let proj = distance_to_split_hull(&c, p).unwrap();
        assert!(proj.linf_residual <= 1e-10, "linf {}", proj.linf_residual);
    }

    #[test]
    fn density_vectors_agree_between_graph_and_lift() {
        let g = gen_gnp(36, 0.5, 4);
        let parts = contiguous_equipartition(36, 6).unwrap();
        let lift = g.clique_hypergraph(3).unwrap();
        let a = clique_density_vector(&g, &parts, 3).unwrap();
        let b = hypergraph_density_vector(&lift, &parts).unwrap();
        for (x, y) in a.values.iter().zip(&b.values) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn complete_graph_density_vector_is_one() {
        let g = Graph::complete(12);
        let parts = contiguous_equipartition(12, 4).unwrap();
        let d = clique_density_vector(&g, &parts, 3).unwrap();
        assert!(d.values.iter().all(|&v| (v - 1.0).abs() < 1e-12));
    }
}
