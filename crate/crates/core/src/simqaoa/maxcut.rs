use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compose::ProductSpec;
use crate::error::{Error, Result};
use crate::simqaoa::state::{check_size, StateVector};
use crate::subspace::FeasibleSet;

/// Weighted graph whose vertices are split into consecutive blocks, each
/// holding at most one selected vertex. Vertex `v` (0-based) is qubit `v + 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct MaxcutInstance {
    vertices: usize,
    blocks: Vec<usize>,
    /// `(u, v, w)` with `u < v`, sorted.
    edges: Vec<(usize, usize, f64)>,
}

impl MaxcutInstance {
    pub fn new(vertices: usize, blocks: Vec<usize>, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        if blocks.iter().sum::<usize>() != vertices || blocks.contains(&0) {
            return Err(Error::Layout(format!("blocks {blocks:?} do not partition {vertices} vertices")));
        }
        let mut norm: Vec<(usize, usize, f64)> = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            if u == v || u >= vertices || v >= vertices {
                return Err(Error::Layout(format!("edge ({u}, {v}) on {vertices} vertices")));
            }
            if !(w >= 0.0 && w.is_finite()) {
                return Err(Error::Layout(format!("edge ({u}, {v}) has weight {w}")));
            }
            norm.push((u.min(v), u.max(v), w));
        }
        norm.sort_by_key(|a| (a.0, a.1));
        if norm.windows(2).any(|p| (p[0].0, p[0].1) == (p[1].0, p[1].1)) {
            return Err(Error::Layout("repeated edge".into()));
        }
        Ok(MaxcutInstance { vertices, blocks, edges: norm })
    }

    /// Preferential-attachment graph with `m` edges per new vertex, started
    /// from a star on `m + 1` vertices, with weights uniform in `(0, 1)`.
    pub fn barabasi_albert(vertices: usize, m: usize, blocks: Vec<usize>, seed: u64) -> Result<Self> {
        if m == 0 || m >= vertices {
            return Err(Error::Layout(format!("attachment count {m} for {vertices} vertices")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs: Vec<(usize, usize)> = (1..=m).map(|v| (0, v)).collect();
        let mut repeated: Vec<usize> = std::iter::repeat_n(0, m).chain(1..=m).collect();
        for source in m + 1..vertices {
            let mut targets: Vec<usize> = Vec::with_capacity(m);
            while targets.len() < m {
                let t = repeated[rng.gen_range(0..repeated.len())];
                if !targets.contains(&t) {
                    targets.push(t);
                }
            }
            targets.sort_unstable();
            for &t in &targets {
                pairs.push((t, source));
                repeated.push(t);
                repeated.push(source);
            }
        }
        let edges = pairs
            .into_iter()
            .map(|(u, v)| {
                let w = loop {
                    let w: f64 = rng.gen();
                    if w > 0.0 {
                        break w;
                    }
                };
                (u, v, w)
            })
            .collect();
        Self::new(vertices, blocks, edges)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    /// Product of empty-or-one-hot sets, one per block.
    pub fn feasible_set(&self) -> Result<FeasibleSet> {
        let factors = self.blocks.iter().map(|&k| FeasibleSet::hamming_band(k, 0, 1)).collect::<Result<Vec<_>>>()?;
        ProductSpec::new(factors)?.product_set()
    }

    /// Total weight of edges whose endpoints differ in `z`.
    pub fn cut_value(&self, z: u64) -> f64 {
        let bit = |v: usize| (z >> (self.vertices - 1 - v)) & 1;
        self.edges.iter().filter(|(u, v, _)| bit(*u) != bit(*v)).map(|e| e.2).sum()
    }

    /// Best cut over the feasible states, by enumeration.
    pub fn optimum(&self, b: &FeasibleSet) -> f64 {
        b.states().iter().map(|&z| self.cut_value(z)).fold(f64::NEG_INFINITY, f64::max)
    }

    /// "vertices N", "blocks k1 k2 ...", then one "u v weight" line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices {}\nblocks", self.vertices);
        for b in &self.blocks {
            s.push_str(&format!(" {b}"));
        }
        s.push('\n');
        for (u, v, w) in &self.edges {
            s.push_str(&format!("{u} {v} {}\n", crate::circuit::format_float(*w)));
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let bad = |l: &str| Error::Parse { what: "instance line", detail: l.to_string() };
        let mut vertices = None;
        let mut blocks = None;
        let mut edges = Vec::new();
        for l in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let parts: Vec<&str> = l.split_whitespace().collect();
            match parts.as_slice() {
                ["vertices", n] => vertices = Some(n.parse().map_err(|_| bad(l))?),
                ["blocks", rest @ ..] => {
                    blocks = Some(rest.iter().map(|s| s.parse().map_err(|_| bad(l))).collect::<Result<Vec<usize>>>()?)
                }
                [u, v, w] => edges.push((
                    u.parse().map_err(|_| bad(l))?,
                    v.parse().map_err(|_| bad(l))?,
                    w.parse().map_err(|_| bad(l))?,
                )),
                _ => return Err(bad(l)),
            }
        }
        let vertices = vertices.ok_or_else(|| bad("missing vertices header"))?;
        let blocks = blocks.unwrap_or_else(|| vec![vertices]);
        Self::new(vertices, blocks, edges)
    }
}

/// Applies `exp(-iγ f)` with `f` the cut value.
pub fn maxcut_phase(instance: &MaxcutInstance, gamma: f64, psi: &StateVector) -> Result<StateVector> {
    check_size(psi.n())?;
    if psi.n() != instance.vertices {
        return Err(Error::Layout(format!("{} qubits for {} vertices", psi.n(), instance.vertices)));
    }
    let mut out = psi.clone();
    out.apply_diagonal_phase(gamma, |z| instance.cut_value(z));
    Ok(out)
}
