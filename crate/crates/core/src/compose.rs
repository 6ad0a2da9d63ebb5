//! Mixers for structured feasible sets: tensor products of blocks and
//! Hamming-weight bands.

use std::collections::BTreeSet;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::pauli::{PauliString, PauliSum};
use crate::restrict::Method;
use crate::subspace::{build_family, edge, Edge, FeasibleSet};
use crate::trotter::{self, is_connected, make_candidates_with, MixerCandidate, MixerPlan, SynthOptions};

/// Feasible set `B^1 ⊗ … ⊗ B^L`; factor 1 occupies the leftmost qubits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductSpec {
    factors: Vec<FeasibleSet>,
    offsets: Vec<usize>,
}

impl ProductSpec {
    pub fn new(factors: Vec<FeasibleSet>) -> Result<Self> {
        let mut offsets = Vec::with_capacity(factors.len());
        let mut at = 0;
        for f in &factors {
            offsets.push(at);
            at += f.n();
        }
        ProductSpec::with_offsets(factors, offsets)
    }

    /// Explicit 0-based qubit offsets; blocks must tile `0..n` in order.
    pub fn with_offsets(factors: Vec<FeasibleSet>, offsets: Vec<usize>) -> Result<Self> {
        if factors.is_empty() || factors.len() != offsets.len() {
            return Err(Error::OverlappingBlocks);
        }
        let mut at = 0;
        for (f, &o) in factors.iter().zip(&offsets) {
            if o != at {
                return Err(Error::OverlappingBlocks);
            }
            at += f.n();
        }
        crate::bits::check_qubits(at)?;
        Ok(ProductSpec { factors, offsets })
    }

    pub fn factors(&self) -> &[FeasibleSet] {
        &self.factors
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn n(&self) -> usize {
        self.factors.iter().map(|f| f.n()).sum()
    }

    fn shift(&self, i: usize) -> usize {
        self.n() - self.offsets[i] - self.factors[i].n()
    }

    /// All product states, factor 1 varying slowest.
    pub fn product_set(&self) -> Result<FeasibleSet> {
        let mut states = vec![0u64];
        for (i, f) in self.factors.iter().enumerate() {
            let sh = self.shift(i);
            states = states.iter().flat_map(|&z| f.states().iter().map(move |&s| z | s << sh)).collect();
        }
        FeasibleSet::new(self.n(), states)
    }
}

/// Embeds each factor plan into its block and concatenates them.
///
/// A factor edge `{x, y}` becomes one edge per choice of states in the other
/// factors, which is exactly the box product of the factor graphs.
pub fn tensor_plans(plans: &[MixerPlan], spec: &ProductSpec) -> Result<MixerPlan> {
    if plans.len() != spec.factors.len() {
        return Err(Error::Layout(format!("{} plans for {} factors", plans.len(), spec.factors.len())));
    }
    let n = spec.n();
    let mut out = Vec::new();
    for (i, plan) in plans.iter().enumerate() {
        let f = &spec.factors[i];
        if plan.n != f.n() {
            return Err(Error::Layout(format!("factor {} has {} qubits, plan has {}", i + 1, f.n(), plan.n)));
        }
        let sh = spec.shift(i);
        // Every assignment of the other factors, already positioned.
        let mut rest = vec![0u64];
        for (j, g) in spec.factors.iter().enumerate().filter(|&(j, _)| j != i) {
            let shj = spec.shift(j);
            rest = rest.iter().flat_map(|&z| g.states().iter().map(move |&s| z | s << shj)).collect();
        }
        for c in &plan.candidates {
            let projector = c.projector.embed(n, spec.offsets[i])?;
            let edges: Vec<Edge> =
                c.edges.iter().flat_map(|&(x, y)| rest.iter().map(move |&r| edge(r | x << sh, r | y << sh))).collect();
            out.push(MixerCandidate::new(c.lx << sh, projector, c.method, edges)?);
        }
    }
    Ok(MixerPlan::new(n, out))
}

/// An undirected graph on bitstring vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeGraph {
    pub n: usize,
    pub vertices: Vec<u64>,
    pub edges: Vec<Edge>,
}

impl EdgeGraph {
    pub fn from_plan(plan: &MixerPlan, b: &FeasibleSet) -> Self {
        EdgeGraph { n: plan.n, vertices: b.states().to_vec(), edges: plan.union_edges() }
    }
}

/// `G □ H`: `(g, h) ~ (g', h')` iff one coordinate is equal and the other adjacent.
/// Vertices of `g` occupy the high bits.
pub fn box_product(g: &EdgeGraph, h: &EdgeGraph) -> EdgeGraph {
    let join = |a: u64, b: u64| a << h.n | b;
    let vertices = g.vertices.iter().flat_map(|&a| h.vertices.iter().map(move |&b| join(a, b))).collect();
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    for &a in &g.vertices {
        for &(x, y) in &h.edges {
            edges.insert(edge(join(a, x), join(a, y)));
        }
    }
    for &b in &h.vertices {
        for &(x, y) in &g.edges {
            edges.insert(edge(join(x, b), join(y, b)));
        }
    }
    EdgeGraph { n: g.n + h.n, vertices, edges: edges.into_iter().collect() }
}

fn xy_candidate(b: &FeasibleSet, q: usize) -> Result<Option<MixerCandidate>> {
    let n = b.n();
    let lx = crate::bits::qubit_bit(n, q) | crate::bits::qubit_bit(n, q + 1);
    let pairs = |swap_only: bool| -> Vec<Edge> {
        b.states()
            .iter()
            .filter(|&&z| z < z ^ lx && b.contains(z ^ lx) && (!swap_only || (z & lx).count_ones() == 1))
            .map(|&z| (z, z ^ lx))
            .collect()
    };
    if pairs(true).is_empty() {
        return Ok(None);
    }
    // `P = I` is only safe when lX never leaves B; otherwise project onto z_q ≠ z_{q+1}.
    let closed = b.states().iter().all(|&z| b.contains(z ^ lx));
    let (projector, edges) = if closed {
        (PauliSum::identity(n), pairs(false))
    } else {
        let half = Dyadic::inv_pow2(1);
        let zz = PauliString::z_type(n, lx, true)?;
        (PauliSum::from_terms(n, [(PauliString::identity(n), half), (zz, half)])?, pairs(true))
    };
    Ok(Some(MixerCandidate::new(lx, projector, Method::Subgroup, edges)?))
}

/// Mixer for states of Hamming weight `k1..=k2`.
///
/// Adjacent-qubit XY terms move within a weight class. When `k1 < k2`,
/// single-qubit X candidates (restricted so they never leave the band) are
/// added cheapest first, lowest qubit on ties, as long as each one joins two
/// components.
pub fn multi_k_hot_plan(n: usize, k1: usize, k2: usize) -> Result<MixerPlan> {
    let b = FeasibleSet::hamming_band(n, k1, k2)?;
    if b.len() < 2 {
        return Err(Error::TooFewStates);
    }
    if k1 == 0 && k2 == n {
        let cands = (1..=n)
            .map(|q| {
                let lx = crate::bits::qubit_bit(n, q);
                let edges = b.states().iter().filter(|&&z| z & lx == 0).map(|&z| (z, z | lx)).collect();
                MixerCandidate::new(lx, PauliSum::identity(n), Method::Subgroup, edges)
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(MixerPlan::new(n, cands));
    }
    let mut chosen: Vec<MixerCandidate> = Vec::new();
    for q in 1..n {
        if let Some(c) = xy_candidate(&b, q)? {
            chosen.push(c);
        }
    }
    if k1 < k2 {
        let family = build_family(&b)?;
        let mut singles = make_candidates_with(&b, &family, true, |lx| lx.count_ones() == 1)?;
        // Lowest qubit index means highest mask.
        singles.sort_by_key(|a| (a.cost, std::cmp::Reverse(a.lx)));
        for c in singles {
            if connected(&b, &chosen) {
                break;
            }
            let before = components(&b, &chosen);
            let mut trial = chosen.clone();
            trial.push(c);
            if components(&b, &trial) < before {
                chosen = trial;
            }
        }
    }
    if !connected(&b, &chosen) {
        return Err(Error::InvalidPlan("band mixer does not connect the feasible set".into()));
    }
    Ok(MixerPlan::new(n, chosen))
}

fn connected(b: &FeasibleSet, cands: &[MixerCandidate]) -> bool {
    is_connected(b, cands.iter().map(|c| c.edges.as_slice()))
}

fn components(b: &FeasibleSet, cands: &[MixerCandidate]) -> usize {
    let idx: std::collections::HashMap<u64, usize> = b.states().iter().enumerate().map(|(i, &z)| (z, i)).collect();
    let mut parent: Vec<usize> = (0..b.len()).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    let mut count = b.len();
    for (x, y) in cands.iter().flat_map(|c| c.edges.iter()) {
        let (i, j) = (find(&mut parent, idx[x]), find(&mut parent, idx[y]));
        if i != j {
            parent[i.max(j)] = i.min(j);
            count -= 1;
        }
    }
    count
}

/// Weight classes `(k, k+1)` joined by a candidate's covered pairs.
pub fn bridged_weights(c: &MixerCandidate) -> Vec<(usize, usize)> {
    let set: BTreeSet<(usize, usize)> = c
        .edges
        .iter()
        .filter_map(|&(x, y)| {
            let (a, b) = (x.count_ones() as usize, y.count_ones() as usize);
            (a != b).then_some((a.min(b), a.max(b)))
        })
        .collect();
    set.into_iter().collect()
}

/// `Some((k1, k2))` when `b` is exactly the band of weights `k1..=k2`.
pub fn as_hamming_band(b: &FeasibleSet) -> Option<(usize, usize)> {
    let weights = b.states().iter().map(|z| z.count_ones() as usize);
    let k1 = weights.clone().min()?;
    let k2 = weights.max()?;
    let band = FeasibleSet::hamming_band(b.n(), k1, k2).ok()?;
    (band.len() == b.len()).then_some((k1, k2))
}

/// Band builder for Hamming-weight bands, general synthesis otherwise.
pub fn plan_factor(b: &FeasibleSet, options: SynthOptions) -> Result<MixerPlan> {
    match as_hamming_band(b) {
        Some((k1, k2)) if options.restrict && b.len() >= 2 => multi_k_hot_plan(b.n(), k1, k2),
        _ => trotter::synthesize(b, options),
    }
}

/// Plans every factor and composes them.
pub fn product_plan(spec: &ProductSpec, options: SynthOptions) -> Result<MixerPlan> {
    let plans = spec.factors.iter().map(|f| plan_factor(f, options)).collect::<Result<Vec<_>>>()?;
    tensor_plans(&plans, spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path2() -> EdgeGraph {
        EdgeGraph { n: 1, vertices: vec![0, 1], edges: vec![(0, 1)] }
    }

    #[test]
    fn box_of_two_paths_is_a_square() {
        let g = box_product(&path2(), &path2());
        assert_eq!(g.vertices.len(), 4);
        assert_eq!(g.edges, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn box_with_single_vertex_is_identity() {
        let k1 = EdgeGraph { n: 0, vertices: vec![0], edges: vec![] };
        let h = EdgeGraph { n: 2, vertices: vec![0, 1, 3], edges: vec![(0, 1), (1, 3)] };
        assert_eq!(box_product(&k1, &h), h);
    }

    #[test]
    fn fixed_weight_is_pure_xy_chain() {
        let plan = multi_k_hot_plan(5, 2, 2).unwrap();
        assert_eq!(plan.candidates.len(), 4);
        assert!(plan.candidates.iter().all(|c| c.lx.count_ones() == 2 && c.cost == 4));
    }

    #[test]
    fn zero_or_one_hot() {
        let plan = multi_k_hot_plan(5, 0, 1).unwrap();
        assert_eq!(plan.total_cost, 24);
        let single: Vec<&MixerCandidate> = plan.candidates.iter().filter(|c| c.lx.count_ones() == 1).collect();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].lx, 0b10000);
        let half = Dyadic::inv_pow2(1);
        let want =
            PauliSum::from_terms(5, [("IIIII", half), ("IZZZZ", half)].map(|(s, c)| (s.parse().unwrap(), c))).unwrap();
        assert_eq!(single[0].projector, want);
        assert_eq!(bridged_weights(single[0]), vec![(0, 1)]);
    }

    #[test]
    fn invalid_band() {
        assert!(matches!(multi_k_hot_plan(4, 3, 2), Err(Error::InvalidRange { .. })));
    }

    #[test]
    fn product_set_order() {
        let a = FeasibleSet::from_strings(&["10", "01"]).unwrap();
        let b = FeasibleSet::from_strings(&["100", "010", "001"]).unwrap();
        let spec = ProductSpec::new(vec![a, b]).unwrap();
        let p = spec.product_set().unwrap();
        assert_eq!(crate::bits::render(p.states()[0], 5), "10100");
        assert_eq!(crate::bits::render(p.states()[5], 5), "01001");
    }
}
