//! Seeded constructions of the graph, hypergraph and cut families the
//! checkers are calibrated against.
//!
//! Everything is a pure function of its spec (parameters + 64-bit seed).
//! Randomized structure is sampled from per-block/per-row derived ChaCha12
//! streams, so results do not depend on evaluation order or thread count.

use crate::combin::{multinomial, AssignmentStream};
use crate::graph::{Graph, PartitionStats, VertexCut};
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use std::fmt::Write as _;

#[inline]
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stable seed derivation: mixes a master seed with a stage tag and indices.
/// Identical inputs give identical derived seeds on every platform.
pub fn derive_seed(master: u64, tag: &str, indices: &[u64]) -> u64 {
    let mut state = master ^ 0xA076_1D64_78BD_642F;
    let mut out = 0u64;
    for chunk in tag.as_bytes().chunks(8) {
        let mut word = [0u8; 8];
        word[..chunk.len()].copy_from_slice(chunk);
        state ^= u64::from_le_bytes(word);
        out = splitmix64(&mut state);
    }
    for &ix in indices {
        state ^= ix;
        out = splitmix64(&mut state);
    }
    out
}

pub fn rng_from(master: u64, tag: &str, indices: &[u64]) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(derive_seed(master, tag, indices))
}

/// Specification of a generated graph family.
#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    Gnp { n: usize, p: f64, seed: u64 },
    HalfSplit { n: usize, p: f64, seed: u64 },
    PlantedStructure {
        t: usize,
        m: usize,
        s: usize,
        x: f64,
        y: f64,
        seed: u64,
    },
    Tripartite {
        m: usize,
        d12: f64,
        d13: f64,
        d23: f64,
        seed: u64,
    },
    Complete { n: usize },
    Empty { n: usize },
}

impl GenSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GenSpec::Gnp { .. } => "gnp",
            GenSpec::HalfSplit { .. } => "half_split",
            GenSpec::PlantedStructure { .. } => "planted_structure",
            GenSpec::Tripartite { .. } => "tripartite",
            GenSpec::Complete { .. } => "complete",
            GenSpec::Empty { .. } => "empty",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let prob = |name: &str, v: f64| -> Result<()> {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::Infeasible(format!("{name} = {v} outside [0,1]")));
            }
            Ok(())
        };
        match *self {
            GenSpec::Gnp { n, p, .. } => {
                if n == 0 {
                    return Err(Error::InvalidParam("n must be >= 1".into()));
                }
                prob("p", p)
            }
            GenSpec::HalfSplit { n, p, .. } => {
                if n % 2 != 0 {
                    return Err(Error::InvalidParam(format!("n = {n} must be even")));
                }
                prob("p", p)?;
                if 2.0 * p > 1.0 {
                    return Err(Error::Infeasible(format!("2p = {} > 1", 2.0 * p)));
                }
                Ok(())
            }
            GenSpec::PlantedStructure { t, m, s, x, y, .. } => {
                if t < 2 || m == 0 {
                    return Err(Error::InvalidParam("need t >= 2 and m >= 1".into()));
                }
                if s >= t {
                    return Err(Error::InvalidParam(format!("s = {s} out of range for t = {t}")));
                }
                planted_feasible(x, y)
            }
            GenSpec::Tripartite { m, d12, d13, d23, .. } => {
                if m == 0 {
                    return Err(Error::InvalidParam("m must be >= 1".into()));
                }
                prob("d12", d12)?;
                prob("d13", d13)?;
                prob("d23", d23)
            }
            GenSpec::Complete { n } | GenSpec::Empty { n } => {
                if n == 0 {
                    return Err(Error::InvalidParam("n must be >= 1".into()));
                }
                Ok(())
            }
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        Ok(match *self {
            GenSpec::Gnp { n, p, seed } => gen_gnp(n, p, seed),
            GenSpec::HalfSplit { n, p, seed } => gen_half_split(n, p, seed)?,
            GenSpec::PlantedStructure { t, m, s, x, y, seed } => {
                gen_planted_structure(t, m, s, x, y, seed)?
            }
            GenSpec::Tripartite { m, d12, d13, d23, seed } => {
                gen_tripartite(m, d12, d13, d23, seed)?
            }
            GenSpec::Complete { n } => Graph::complete(n),
            GenSpec::Empty { n } => Graph::empty(n),
        })
    }

    /// Part boundaries of the block structure, as (start, end) offsets.
    pub fn part_bounds(&self) -> Vec<(usize, usize)> {
        match *self {
            GenSpec::Gnp { n, .. } | GenSpec::Complete { n } | GenSpec::Empty { n } => {
                vec![(0, n)]
            }
            GenSpec::HalfSplit { n, .. } => vec![(0, n / 2), (n / 2, n)],
            GenSpec::PlantedStructure { t, m, .. } => {
                (0..t).map(|i| (i * m, (i + 1) * m)).collect()
            }
            GenSpec::Tripartite { m, .. } => (0..3).map(|i| (i * m, (i + 1) * m)).collect(),
        }
    }

    /// Flat key=value form; round-trips through `parse`.
    pub fn to_config(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "family = {}", self.family());
        match *self {
            GenSpec::Gnp { n, p, seed } => {
                let _ = writeln!(out, "n = {n}");
                let _ = writeln!(out, "p = {p}");
                let _ = writeln!(out, "seed = {seed}");
            }
            GenSpec::HalfSplit { n, p, seed } => {
                let _ = writeln!(out, "n = {n}");
                let _ = writeln!(out, "p = {p}");
                let _ = writeln!(out, "seed = {seed}");
            }
            GenSpec::PlantedStructure { t, m, s, x, y, seed } => {
                let _ = writeln!(out, "t = {t}");
                let _ = writeln!(out, "m = {m}");
                let _ = writeln!(out, "s = {s}");
                let _ = writeln!(out, "x = {x}");
                let _ = writeln!(out, "y = {y}");
                let _ = writeln!(out, "seed = {seed}");
            }
            GenSpec::Tripartite { m, d12, d13, d23, seed } => {
                let _ = writeln!(out, "m = {m}");
                let _ = writeln!(out, "d12 = {d12}");
                let _ = writeln!(out, "d13 = {d13}");
                let _ = writeln!(out, "d23 = {d23}");
                let _ = writeln!(out, "seed = {seed}");
            }
            GenSpec::Complete { n } | GenSpec::Empty { n } => {
                let _ = writeln!(out, "n = {n}");
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<GenSpec> {
        let kv = crate::report::parse_flat_kv(text)?;
        let get = |k: &str| -> Result<&str> {
            kv.iter()
                .find(|(key, _)| key == k)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| Error::Parse(format!("missing key '{k}'")))
        };
        let usize_of = |k: &str| -> Result<usize> {
            get(k)?.parse().map_err(|e| Error::Parse(format!("{k}: {e}")))
        };
        let f64_of = |k: &str| -> Result<f64> {
            get(k)?.parse().map_err(|e| Error::Parse(format!("{k}: {e}")))
        };
        let u64_of = |k: &str| -> Result<u64> {
            get(k)?.parse().map_err(|e| Error::Parse(format!("{k}: {e}")))
        };
        let spec = match get("family")? {
            "gnp" => GenSpec::Gnp {
                n: usize_of("n")?,
                p: f64_of("p")?,
                seed: u64_of("seed")?,
            },
            "half_split" => GenSpec::HalfSplit {
                n: usize_of("n")?,
                p: f64_of("p")?,
                seed: u64_of("seed")?,
            },
            "planted_structure" => GenSpec::PlantedStructure {
                t: usize_of("t")?,
                m: usize_of("m")?,
                s: usize_of("s")?,
                x: f64_of("x")?,
                y: f64_of("y")?,
                seed: u64_of("seed")?,
            },
            "tripartite" => GenSpec::Tripartite {
                m: usize_of("m")?,
                d12: f64_of("d12")?,
                d13: f64_of("d13")?,
                d23: f64_of("d23")?,
                seed: u64_of("seed")?,
            },
            "complete" => GenSpec::Complete { n: usize_of("n")? },
            "empty" => GenSpec::Empty { n: usize_of("n")? },
            other => return Err(Error::Parse(format!("unknown family '{other}'"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn planted_feasible(x: f64, y: f64) -> Result<()> {
    if x <= 0.0 {
        return Err(Error::Infeasible(format!("need x > 0, got x = {x}")));
    }
    if y <= 0.0 || y > 1.0 {
        return Err(Error::Infeasible(format!("need 0 < y <= 1, got y = {y}")));
    }
    if x > 1.0 {
        return Err(Error::Infeasible(format!("need x <= 1, got x = {x}")));
    }
    if x > 2.0 * y {
        return Err(Error::Infeasible(format!(
            "need x <= 2y, got x = {x}, 2y = {}",
            2.0 * y
        )));
    }
    let xs = x.sqrt() * (2.0 * y - x) / y;
    if xs > 1.0 + 1e-12 {
        return Err(Error::Infeasible(format!(
            "special-part self density sqrt(x)(2y-x)/y = {xs} > 1"
        )));
    }
    Ok(())
}

/// Block random graph: contiguous blocks with the given sizes; pair (u,v)
/// with u in block i, v in block j is an edge with probability density(i,j).
/// Each (block pair, row) gets its own derived stream, so generation is
/// order- and thread-independent.
fn sample_block_graph(
    sizes: &[usize],
    density: impl Fn(usize, usize) -> f64 + Sync,
    seed: u64,
) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut bounds = Vec::with_capacity(sizes.len());
    let mut off = 0;
    for &s in sizes {
        bounds.push((off, off + s));
        off += s;
    }
    let t = sizes.len();
    let mut jobs: Vec<(usize, usize)> = Vec::new();
    for i in 0..t {
        for j in i..t {
            jobs.push((i, j));
        }
    }
    let edge_lists: Vec<Vec<(u32, u32)>> = jobs
        .par_iter()
        .map(|&(i, j)| {
            let p = density(i, j);
            let mut edges = Vec::new();
            if p <= 0.0 {
                return edges;
            }
            let (si, ei) = bounds[i];
            let (sj, ej) = bounds[j];
            for u in si..ei {
                let mut rng = rng_from(seed, "block-row", &[i as u64, j as u64, u as u64]);
                let v_start = if i == j { u + 1 } else { sj };
                for v in v_start..ej {
                    if rng.random::<f64>() < p {
                        edges.push((u as u32, v as u32));
                    }
                }
            }
            edges
        })
        .collect();
    let all: Vec<(usize, usize)> = edge_lists
        .into_iter()
        .flatten()
        .map(|(u, v)| (u as usize, v as usize))
        .collect();
    Graph::from_edges(n, &all).expect("block sampler produced invalid edges")
}

/// Erdos-Renyi graph: every pair an edge independently with probability p.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Graph {
    sample_block_graph(&[n], |_, _| p, derive_seed(seed, "gnp", &[]))
}

/// Half-split graph: vertices 0..n/2 form G(n/2, 2p), the rest an
/// independent set, cross pairs edges with probability p. Requires 2p <= 1.
pub fn gen_half_split(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let spec = GenSpec::HalfSplit { n, p, seed };
    spec.validate()?;
    let half = n / 2;
    Ok(sample_block_graph(
        &[half, half],
        |i, j| {
            if i == 0 && j == 0 {
                2.0 * p
            } else if i == 1 && j == 1 {
                0.0
            } else {
                p
            }
        },
        derive_seed(seed, "half-split", &[]),
    ))
}

/// Target densities of the planted block structure with special part s:
/// off-s densities sqrt(x), to-s densities sqrt(y), within-s density
/// sqrt(x)(2y-x)/y. Every triple of these values has zero cut residual.
pub fn planted_target_profile(t: usize, s: usize, x: f64, y: f64) -> Result<PartitionStats> {
    planted_feasible(x, y)?;
    if s >= t {
        return Err(Error::InvalidParam(format!("s = {s} out of range for t = {t}")));
    }
    let sx = x.sqrt();
    let sy = y.sqrt();
    let xs = sx * (2.0 * y - x) / y;
    let mut xv = vec![sx; t];
    xv[s] = xs;
    let mut d = vec![vec![0.0; t]; t];
    for i in 0..t {
        for j in 0..t {
            if i == j {
                continue;
            }
            d[i][j] = if i == s || j == s { sy } else { sx };
        }
    }
    PartitionStats::from_values(xv, d)
}

/// Block random graph on t parts of size m realizing the planted structure
/// profile around special part s.
pub fn gen_planted_structure(
    t: usize,
    m: usize,
    s: usize,
    x: f64,
    y: f64,
    seed: u64,
) -> Result<Graph> {
    let spec = GenSpec::PlantedStructure { t, m, s, x, y, seed };
    spec.validate()?;
    let profile = planted_target_profile(t, s, x, y)?;
    // sample with the special part first, then relabel block 0 <-> block s;
    // the sampled distribution is the same, but block streams stay aligned
    // with the internal layout regardless of the requested s
    let internal = move |i: usize, j: usize| -> (usize, usize) {
        let map = |a: usize| {
            if a == 0 {
                s
            } else if a == s {
                0
            } else {
                a
            }
        };
        (map(i), map(j))
    };
    let g = sample_block_graph(
        &vec![m; t],
        |i, j| {
            let (a, b) = internal(i, j);
            if a == b {
                profile.x[a]
            } else {
                profile.d[a][b]
            }
        },
        derive_seed(seed, "planted", &[]),
    );
    // relabel vertices so the special block sits at position s
    let swap_block = |v: usize| -> usize {
        let b = v / m;
        let off = v % m;
        if b == 0 {
            s * m + off
        } else if b == s {
            off
        } else {
            v
        }
    };
    let mut edges = Vec::with_capacity(g.edge_count());
    for u in 0..g.n() {
        for v in g.neighbors(u) {
            if v > u {
                edges.push((swap_block(u), swap_block(v)));
            }
        }
    }
    Graph::from_edges(t * m, &edges)
}

/// Random tripartite graph: three parts of size m, independent cross-block
/// edges at the given densities, no within-part edges.
pub fn gen_tripartite(m: usize, d12: f64, d13: f64, d23: f64, seed: u64) -> Result<Graph> {
    let spec = GenSpec::Tripartite { m, d12, d13, d23, seed };
    spec.validate()?;
    Ok(sample_block_graph(
        &[m, m, m],
        move |i, j| match (i, j) {
            (0, 1) => d12,
            (0, 2) => d13,
            (1, 2) => d23,
            _ => 0.0,
        },
        derive_seed(seed, "tripartite", &[]),
    ))
}

/// Random graph conditioned to have minimum degree at least `min_deg`:
/// starts from G(n, p) and adds seeded random edges at deficient vertices.
pub fn gen_with_min_degree(n: usize, p: f64, min_deg: usize, seed: u64) -> Result<Graph> {
    if min_deg >= n {
        return Err(Error::InvalidParam(format!(
            "min_deg = {min_deg} impossible for n = {n}"
        )));
    }
    let g = gen_gnp(n, p, derive_seed(seed, "min-degree-base", &[]));
    let mut adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let mut deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut rng = rng_from(seed, "min-degree-fix", &[]);
    loop {
        let deficient: Vec<usize> = (0..n).filter(|&u| deg[u] < min_deg).collect();
        if deficient.is_empty() {
            break;
        }
        for u in deficient {
            while deg[u] < min_deg {
                let candidates: Vec<usize> =
                    (0..n).filter(|&v| v != u && !adj[u][v]).collect();
                let v = candidates[rng.random_range(0..candidates.len())];
                adj[u][v] = true;
                adj[v][u] = true;
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if adj[u][v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Uniformly random ordered cut with the prescribed size fractions.
pub fn sample_balanced_cut(n: usize, alpha: &[f64], seed: u64) -> Result<VertexCut> {
    let sizes = VertexCut::sizes_for(n, alpha)?;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    perm.shuffle(&mut rng);
    let mut assignment = vec![0u8; n];
    let mut pos = 0;
    for (part, &s) in sizes.iter().enumerate() {
        for &v in &perm[pos..pos + s] {
            assignment[v] = part as u8;
        }
        pos += s;
    }
    VertexCut::from_assignment(&assignment, sizes.len(), alpha.to_vec())
}

/// Complete stream of ordered cuts in lexicographic order of the
/// vertex->part assignment vector. Rejected when the multinomial count
/// exceeds the budget.
pub fn enumerate_balanced_cuts(
    n: usize,
    alpha: &[f64],
    budget: u128,
) -> Result<impl Iterator<Item = VertexCut>> {
    let sizes = VertexCut::sizes_for(n, alpha)?;
    let count = multinomial(&sizes);
    if count > budget {
        return Err(Error::BudgetExceeded {
            what: "ordered cut enumeration",
            count,
            budget,
        });
    }
    let r = sizes.len();
    let alpha = alpha.to_vec();
    Ok(AssignmentStream::new(&sizes).map(move |a| {
        VertexCut::from_assignment(&a, r, alpha.clone()).expect("stream emits valid cuts")
    }))
}

/// Number of ordered cuts for the given sizes.
pub fn cut_count(n: usize, alpha: &[f64]) -> Result<u128> {
    let sizes = VertexCut::sizes_for(n, alpha)?;
    Ok(multinomial(&sizes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contiguous_equipartition;

    #[test]
    fn gnp_extremes() {
        let g = gen_gnp(30, 0.0, 1);
        assert_eq!(g.edge_count(), 0);
        let g = gen_gnp(30, 1.0, 2);
        assert_eq!(g.edge_count(), 30 * 29 / 2);
    }

    #[test]
    fn gnp_edge_count_concentrates() {
        // binomial moments: 3 sigma band around p * C(n,2)
        let n = 1000;
        let p = 0.5;
        let pairs = (n * (n - 1) / 2) as f64;
        let sigma = (pairs * p * (1.0 - p)).sqrt();
        for seed in [11, 12, 13] {
            let g = gen_gnp(n, p, seed);
            let dev = (g.edge_count() as f64 - p * pairs).abs();
            assert!(dev <= 3.0 * sigma, "seed {seed}: dev {dev} > 3 sigma {sigma}");
        }
    }

    #[test]
    fn gnp_deterministic() {
        let a = gen_gnp(100, 0.3, 42).to_edge_list();
        let b = gen_gnp(100, 0.3, 42).to_edge_list();
        assert_eq!(a, b);
        let c = gen_gnp(100, 0.3, 43).to_edge_list();
        assert_ne!(a, c);
    }

    #[test]
    fn half_split_extremes() {
        let g = gen_half_split(40, 0.0, 1).unwrap();
        assert_eq!(g.edge_count(), 0);
        // p = 0.5 forces a clique on the first half, empty second half
        let g = gen_half_split(40, 0.5, 1).unwrap();
        let first = crate::bitset::VertexSet::from_indices(40, &(0..20).collect::<Vec<_>>()).unwrap();
        let second = crate::bitset::VertexSet::from_indices(40, &(20..40).collect::<Vec<_>>()).unwrap();
        assert_eq!(g.edges_within(&first).unwrap(), 190);
        assert_eq!(g.edges_within(&second).unwrap(), 0);
    }

    #[test]
    fn half_split_rejects_large_p() {
        assert!(gen_half_split(40, 0.6, 1).is_err());
    }

    #[test]
    fn planted_profile_matches_lemma_values() {
        // t=4, x=0.25, y=0.36: off-s 0.5, to-s 0.6, self-s ~ 0.65278
        let prof = planted_target_profile(4, 1, 0.25, 0.36).unwrap();
        assert!((prof.d[0][2] - 0.5).abs() < 1e-12);
        assert!((prof.d[0][1] - 0.6).abs() < 1e-12);
        assert!((prof.x[0] - 0.5).abs() < 1e-12);
        assert!((prof.x[1] - 0.6527777777777778).abs() < 1e-12);
    }

    #[test]
    fn planted_degenerate_uniform() {
        // x = y: all densities sqrt(x)
        let prof = planted_target_profile(5, 2, 0.49, 0.49).unwrap();
        for i in 0..5 {
            assert!((prof.x[i] - 0.7).abs() < 1e-12);
            for j in 0..5 {
                if i != j {
                    assert!((prof.d[i][j] - 0.7).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn planted_rejects_infeasible() {
        let err = gen_planted_structure(4, 10, 0, 0.9, 0.3, 1).unwrap_err();
        assert!(err.to_string().contains("x <= 2y"), "got: {err}");
    }

    #[test]
    fn planted_sampled_densities_near_target() {
        let (t, m, s, x, y) = (4, 150, 2, 0.25, 0.36);
        let g = gen_planted_structure(t, m, s, x, y, 9).unwrap();
        let parts = contiguous_equipartition(t * m, t).unwrap();
        let stats = g.partition_stats(&parts).unwrap();
        let target = planted_target_profile(t, s, x, y).unwrap();
        // 3 sigma per block, sigma <= 0.5/sqrt(pairs)
        let sigma_between = 0.5 / (m as f64);
        let sigma_within = 0.5 / ((m * (m - 1) / 2) as f64).sqrt();
        for i in 0..t {
            assert!(
                (stats.x[i] - target.x[i]).abs() <= 3.0 * sigma_within,
                "x[{i}] = {} vs {}",
                stats.x[i],
                target.x[i]
            );
            for j in (i + 1)..t {
                assert!(
                    (stats.d[i][j] - target.d[i][j]).abs() <= 3.0 * sigma_between,
                    "d[{i}][{j}] = {} vs {}",
                    stats.d[i][j],
                    target.d[i][j]
                );
            }
        }
    }

    #[test]
    fn tripartite_extremes() {
        let g = gen_tripartite(5, 1.0, 1.0, 1.0, 1).unwrap();
        let parts = contiguous_equipartition(15, 3).unwrap();
        let cut = VertexCut::new(15, parts, vec![1.0 / 3.0; 3]).unwrap();
        assert_eq!(g.triangles_crossing(&cut).unwrap(), 125);

        let g = gen_tripartite(5, 0.0, 0.7, 0.7, 1).unwrap();
        let parts = contiguous_equipartition(15, 3).unwrap();
        let cut = VertexCut::new(15, parts, vec![1.0 / 3.0; 3]).unwrap();
        assert_eq!(g.triangles_crossing(&cut).unwrap(), 0);
    }

    #[test]
    fn tripartite_triangle_density_matches_product() {
        let m = 200;
        let (d12, d13, d23) = (0.5, 0.6, 0.7);
        let g = gen_tripartite(m, d12, d13, d23, 5).unwrap();
        let parts = contiguous_equipartition(3 * m, 3).unwrap();
        let cut = VertexCut::new(3 * m, parts, vec![1.0 / 3.0; 3]).unwrap();
        let tr = g.triangles_crossing(&cut).unwrap() as f64;
        let density = tr / (m as f64).powi(3);
        assert!(
            (density - d12 * d13 * d23).abs() <= 0.02,
            "density {density} vs 0.21"
        );
    }

    #[test]
    fn cut_enumeration_counts() {
        let alpha3 = vec![1.0 / 3.0; 3];
        assert_eq!(cut_count(6, &alpha3).unwrap(), 90);
        assert_eq!(enumerate_balanced_cuts(6, &alpha3, 10_000_000).unwrap().count(), 90);
        let alpha2 = vec![0.5, 0.5];
        assert_eq!(enumerate_balanced_cuts(4, &alpha2, 10_000_000).unwrap().count(), 6);
        assert!(matches!(
            enumerate_balanced_cuts(30, &alpha2, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn sampled_cut_sizes_and_determinism() {
        let alpha = vec![0.25, 0.75];
        let cut = sample_balanced_cut(17, &alpha, 3).unwrap();
        let sizes: Vec<usize> = cut.parts().iter().map(|p| p.len()).collect();
        assert_eq!(sizes, VertexCut::sizes_for(17, &alpha).unwrap());
        let cut2 = sample_balanced_cut(17, &alpha, 3).unwrap();
        assert_eq!(cut.assignment_string(), cut2.assignment_string());
    }

    #[test]
    fn genspec_config_roundtrip() {
        let specs = vec![
            GenSpec::Gnp { n: 60, p: 0.35, seed: 7 },
            GenSpec::HalfSplit { n: 40, p: 0.3, seed: 11 },
            GenSpec::PlantedStructure { t: 6, m: 30, s: 2, x: 0.25, y: 0.36, seed: 5 },
            GenSpec::Tripartite { m: 12, d12: 0.5, d13: 0.6, d23: 0.7, seed: 1 },
            GenSpec::Complete { n: 9 },
            GenSpec::Empty { n: 4 },
        ];
        for spec in specs {
            let text = spec.to_config();
            let parsed = GenSpec::parse(&text).unwrap();
            assert_eq!(spec, parsed);
            assert_eq!(text, parsed.to_config());
        }
    }
}
