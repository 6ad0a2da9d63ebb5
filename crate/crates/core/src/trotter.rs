//! Mixer candidates, connectivity, and cheapest connected selection.

use std::collections::{BTreeSet, HashMap};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::pauli::{self, PauliString, PauliSum};
use crate::restrict::{self, best_restriction, Method};
use crate::stabilizer::minimal_generators;
use crate::subspace::{build_family, edge, find_group_orbits, Edge, FeasibleSet, LogicalXFamily};

/// Candidate pools up to this size are solved exactly under [`Selection::Auto`].
pub const EXACT_THRESHOLD: usize = 25;

/// One mixer term `lX · P` together with the feasible pairs it connects.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixerCandidate {
    pub lx: u64,
    pub projector: PauliSum,
    pub method: Method,
    pub term: PauliSum,
    /// Covered pairs, sorted.
    pub edges: Vec<Edge>,
    pub cost: usize,
}

impl MixerCandidate {
    pub fn new(lx: u64, projector: PauliSum, method: Method, mut edges: Vec<Edge>) -> Result<Self> {
        let lx_string = PauliString::x_type(projector.n(), lx)?;
        let term = projector.left_multiply(&lx_string)?;
        let cost = pauli::cost(&term);
        edges.sort_unstable();
        edges.dedup();
        Ok(MixerCandidate { lx, projector, method, term, edges, cost })
    }

    pub fn n(&self) -> usize {
        self.term.n()
    }

    pub fn lx_string(&self) -> PauliString {
        PauliString::x_type(self.n(), self.lx).expect("mask fits")
    }

    /// Distance between the outermost qubits the mixer term touches.
    pub fn span(&self) -> usize {
        let mask = self.term.terms().fold(0u64, |m, (p, _)| m | p.x_mask() | p.z_mask());
        if mask == 0 {
            return 0;
        }
        (63 - mask.leading_zeros() - mask.trailing_zeros()) as usize
    }

    /// Candidate order: cheapest first, then most local, then by mask.
    fn order_key(&self) -> (usize, usize, u64) {
        (self.cost, self.span(), self.lx)
    }
}

/// A selected set of candidates, applied in list order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixerPlan {
    pub n: usize,
    pub candidates: Vec<MixerCandidate>,
    pub total_cost: usize,
}

impl MixerPlan {
    pub fn new(n: usize, candidates: Vec<MixerCandidate>) -> Self {
        let total_cost = candidates.iter().map(|c| c.cost).sum();
        MixerPlan { n, candidates, total_cost }
    }

    pub fn empty(n: usize) -> Self {
        MixerPlan::new(n, Vec::new())
    }

    /// Union of all covered pairs, sorted.
    pub fn union_edges(&self) -> Vec<Edge> {
        let set: BTreeSet<Edge> = self.candidates.iter().flat_map(|c| c.edges.iter().copied()).collect();
        set.into_iter().collect()
    }

    /// `Σ` of the candidate mixer terms.
    pub fn hamiltonian(&self) -> Result<PauliSum> {
        self.candidates.iter().try_fold(PauliSum::zero(self.n), |acc, c| acc.add(&c.term))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Selection {
    /// Exact up to [`EXACT_THRESHOLD`] candidates, greedy beyond.
    #[default]
    Auto,
    Exact,
    Greedy,
}

impl std::str::FromStr for Selection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Selection::Auto),
            "exact" => Ok(Selection::Exact),
            "greedy" => Ok(Selection::Greedy),
            _ => Err(Error::Parse { what: "selection mode", detail: s.to_string() }),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SynthOptions {
    pub restrict: bool,
    pub selection: Selection,
}

impl Default for SynthOptions {
    fn default() -> Self {
        SynthOptions { restrict: true, selection: Selection::Auto }
    }
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), components: n }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.components -= 1;
        true
    }
}

impl Clone for UnionFind {
    fn clone(&self) -> Self {
        UnionFind { parent: self.parent.clone(), components: self.components }
    }
}

fn index_map(b: &FeasibleSet) -> HashMap<u64, usize> {
    b.states().iter().enumerate().map(|(i, &z)| (z, i)).collect()
}

/// True iff the union of the edge sets connects every state of `B`.
pub fn is_connected<'a, I>(b: &FeasibleSet, edge_sets: I) -> bool
where
    I: IntoIterator<Item = &'a [Edge]>,
{
    let idx = index_map(b);
    let mut uf = UnionFind::new(b.len());
    for set in edge_sets {
        for (x, y) in set {
            if let (Some(&i), Some(&j)) = (idx.get(x), idx.get(y)) {
                uf.union(i, j);
            }
        }
    }
    uf.components == 1
}

/// Pairs of `G_lX` on which `P` evaluates to 1.
fn covered_edges(lx: u64, p: &PauliSum, vertices: &[u64]) -> Result<Vec<Edge>> {
    let mut out = Vec::new();
    for &z in vertices {
        if z < z ^ lx && p.diagonal_value(z)? == Dyadic::ONE {
            out.push(edge(z, z ^ lx));
        }
    }
    Ok(out)
}

/// Candidate for the orbit `⟨lX, errors⟩|base⟩` inside `G_lX`.
pub fn orbit_candidate(
    b: &FeasibleSet,
    family: &LogicalXFamily,
    lx: u64,
    base: u64,
    errors: &[u64],
    restrict: bool,
) -> Result<MixerCandidate> {
    let n = b.n();
    let graph = family.get(lx).ok_or_else(|| Error::InvalidPlan(format!("no feasible pair for mask {lx:#b}")))?;
    let gens: Vec<u64> = std::iter::once(lx).chain(errors.iter().copied()).collect();
    let g = minimal_generators(n, base, &gens)?;
    let rp = if restrict { best_restriction(lx, &g, b, &graph.vertices)? } else { restrict::unrestricted(lx, &g)? };
    let edges = covered_edges(lx, &rp.projector, &graph.vertices)?;
    MixerCandidate::new(lx, rp.projector, rp.method, edges)
}

/// Whole-orbit candidates for every logical X, then single-pair candidates
/// for pairs sitting in larger orbits. Identical `(lX, P)` entries are merged.
/// Sorted by ascending cost, then qubit span, then `lX`.
pub fn make_candidates(b: &FeasibleSet, restrict: bool) -> Result<Vec<MixerCandidate>> {
    let family = build_family(b)?;
    make_candidates_with(b, &family, restrict, |_| true)
}

/// [`make_candidates`] limited to logical-X masks accepted by `keep`.
pub fn make_candidates_with<F>(
    b: &FeasibleSet,
    family: &LogicalXFamily,
    restrict: bool,
    keep: F,
) -> Result<Vec<MixerCandidate>>
where
    F: Fn(u64) -> bool,
{
    let mut out: Vec<MixerCandidate> = Vec::new();
    type Key = (u64, Vec<(u64, u64, Dyadic)>);
    let mut seen: BTreeSet<Key> = BTreeSet::new();
    let mut push = |c: MixerCandidate| {
        let key = (c.lx, c.projector.terms().map(|(p, w)| (p.x_mask(), p.z_mask(), w)).collect::<Vec<_>>());
        if seen.insert(key) {
            out.push(c);
        }
    };
    for (lx, graph) in family.iter().filter(|(lx, _)| keep(*lx)) {
        let orbits = find_group_orbits(lx, graph);
        for orbit in &orbits {
            push(orbit_candidate(b, family, lx, orbit.base, &orbit.generators, restrict)?);
        }
        for orbit in orbits.iter().filter(|o| !o.generators.is_empty()) {
            for (x, _) in orbit.edges() {
                push(orbit_candidate(b, family, lx, x, &[], restrict)?);
            }
        }
    }
    out.sort_by_key(MixerCandidate::order_key);
    Ok(out)
}

/// Drops candidates whose edges are covered by an equally cheap or cheaper candidate.
fn prune_dominated(cands: Vec<MixerCandidate>) -> Vec<MixerCandidate> {
    let sets: Vec<BTreeSet<Edge>> = cands.iter().map(|c| c.edges.iter().copied().collect()).collect();
    let keep: Vec<bool> = (0..cands.len())
        .map(|i| {
            !(0..cands.len()).any(|j| {
                j != i
                    && cands[j].cost <= cands[i].cost
                    && sets[j].is_superset(&sets[i])
                    && (cands[j].cost < cands[i].cost || sets[j].len() > sets[i].len() || j < i)
            })
        })
        .collect();
    cands.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect()
}

struct Problem {
    costs: Vec<usize>,
    edges: Vec<Vec<(usize, usize)>>,
    states: usize,
}

impl Problem {
    fn merges(&self, uf: &UnionFind, j: usize) -> usize {
        let mut u = uf.clone();
        self.edges[j].iter().filter(|&&(a, b)| u.union(a, b)).count()
    }

    fn greedy(&self) -> Option<Vec<usize>> {
        let mut uf = UnionFind::new(self.states);
        let mut chosen = Vec::new();
        while uf.components > 1 {
            let mut best: Option<(usize, usize, usize)> = None;
            for j in (0..self.costs.len()).filter(|j| !chosen.contains(j)) {
                let m = self.merges(&uf, j);
                if m == 0 {
                    continue;
                }
                // Compare cost/merges as cross products.
                let better = match best {
                    None => true,
                    Some((c, bm, _)) => self.costs[j] * bm < c * m,
                };
                if better {
                    best = Some((self.costs[j], m, j));
                }
            }
            let (_, _, j) = best?;
            for &(a, b) in &self.edges[j] {
                uf.union(a, b);
            }
            chosen.push(j);
        }
        let mut by_cost = chosen.clone();
        by_cost.sort_by_key(|&j| std::cmp::Reverse((self.costs[j], j)));
        for j in by_cost {
            let trial: Vec<usize> = chosen.iter().copied().filter(|&k| k != j).collect();
            if self.connects(&trial) {
                chosen = trial;
            }
        }
        chosen.sort_unstable();
        Some(chosen)
    }

    fn connects(&self, set: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.states);
        for &j in set {
            for &(a, b) in &self.edges[j] {
                uf.union(a, b);
            }
        }
        uf.components == 1
    }

    fn cost_of(&self, set: &[usize]) -> usize {
        set.iter().map(|&j| self.costs[j]).sum()
    }

    /// Branch and bound over candidates in index (cost) order.
    fn exact(&self) -> Option<Vec<usize>> {
        let mut best = self.greedy()?;
        let mut best_cost = self.cost_of(&best);
        let mut chosen = Vec::new();
        self.branch(0, UnionFind::new(self.states), 0, &mut chosen, &mut best, &mut best_cost);
        Some(best)
    }

    fn lower_bound(&self, uf: &UnionFind, from: usize) -> Option<usize> {
        let need = uf.components - 1;
        let mut items: Vec<(usize, usize)> =
            (from..self.costs.len()).map(|j| (self.costs[j], self.merges(uf, j))).filter(|&(_, m)| m > 0).collect();
        items.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
        let mut left = need;
        let mut bound_num = 0usize;
        // Fractional knapsack; the final partial item is rounded up.
        for (c, m) in items {
            if left == 0 {
                break;
            }
            if m <= left {
                bound_num += c;
                left -= m;
            } else {
                bound_num += (c * left).div_ceil(m);
                left = 0;
            }
        }
        (left == 0).then_some(bound_num)
    }

    fn branch(
        &self,
        i: usize,
        uf: UnionFind,
        cost: usize,
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
        best_cost: &mut usize,
    ) {
        if uf.components == 1 {
            if cost < *best_cost {
                *best_cost = cost;
                *best = chosen.clone();
            }
            return;
        }
        if i == self.costs.len() {
            return;
        }
        match self.lower_bound(&uf, i) {
            Some(lb) if cost + lb < *best_cost => {}
            _ => return,
        }
        let m = self.merges(&uf, i);
        if m > 0 {
            let mut next = uf.clone();
            for &(a, b) in &self.edges[i] {
                next.union(a, b);
            }
            chosen.push(i);
            self.branch(i + 1, next, cost + self.costs[i], chosen, best, best_cost);
            chosen.pop();
            if self.costs[i] == 0 {
                // A free merge is never worth skipping.
                return;
            }
        }
        self.branch(i + 1, uf, cost, chosen, best, best_cost);
    }
}

/// Cheapest connected subset of `candidates` (exact or greedy per `selection`).
pub fn select_optimal(candidates: &[MixerCandidate], b: &FeasibleSet, selection: Selection) -> Result<MixerPlan> {
    let mut pool = prune_dominated(candidates.to_vec());
    pool.sort_by_key(MixerCandidate::order_key);
    let idx = index_map(b);
    let edges: Vec<Vec<(usize, usize)>> =
        pool.iter().map(|c| c.edges.iter().filter_map(|(x, y)| Some((*idx.get(x)?, *idx.get(y)?))).collect()).collect();
    let problem = Problem { costs: pool.iter().map(|c| c.cost).collect(), edges, states: b.len() };
    if b.len() == 1 {
        return Ok(MixerPlan::empty(b.n()));
    }
    let exact = match selection {
        Selection::Exact => true,
        Selection::Greedy => false,
        Selection::Auto => pool.len() <= EXACT_THRESHOLD,
    };
    let chosen = if exact { problem.exact() } else { problem.greedy() }
        .ok_or_else(|| Error::InvalidPlan("candidates do not connect the feasible set".into()))?;
    Ok(MixerPlan::new(b.n(), chosen.into_iter().map(|j| pool[j].clone()).collect()))
}

/// Candidate generation followed by selection.
pub fn synthesize(b: &FeasibleSet, options: SynthOptions) -> Result<MixerPlan> {
    let cands = make_candidates(b, options.restrict)?;
    select_optimal(&cands, b, options.selection)
}

/// Linear chain over the states sorted by integer value.
///
/// Each link is a [`strict_pair_candidate`], so the transition graph is exactly the chain.
pub fn chain_mixer(b: &FeasibleSet, restrict: bool) -> Result<MixerPlan> {
    let mut order = b.states().to_vec();
    order.sort_unstable();
    chain_over(b, &order, restrict)
}

/// Linear chain over the states in input order.
pub fn chain_mixer_in_order(b: &FeasibleSet, restrict: bool) -> Result<MixerPlan> {
    chain_over(b, b.states(), restrict)
}

fn chain_over(b: &FeasibleSet, order: &[u64], restrict: bool) -> Result<MixerPlan> {
    let cands = order.windows(2).map(|w| strict_pair_candidate(b, w[0], w[1], restrict)).collect::<Result<Vec<_>>>()?;
    Ok(MixerPlan::new(b.n(), cands))
}

/// Candidate covering exactly the pair `{x, y}`: its projector vanishes on every other state of `B`.
pub fn strict_pair_candidate(b: &FeasibleSet, x: u64, y: u64, restrict: bool) -> Result<MixerCandidate> {
    let lx = crate::subspace::logical_x_of_pair(x, y)?;
    let g = minimal_generators(b.n(), x, &[lx])?;
    let rp = if restrict {
        let outside = b.states().iter().copied().filter(|&z| z != x && z != y).collect();
        restrict::restrict_with(lx, &g, &restrict::StateSplit { outside, free: Vec::new() })?
    } else {
        restrict::unrestricted(lx, &g)?
    };
    MixerCandidate::new(lx, rp.projector, rp.method, vec![edge(x, y)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &[&str]) -> FeasibleSet {
        FeasibleSet::from_strings(s).unwrap()
    }

    #[test]
    fn disjoint_pairs_are_not_connected() {
        let b = set(&["00", "01", "10", "11"]);
        assert!(!is_connected(&b, [&[(0u64, 1u64)][..], &[(2, 3)][..]]));
        assert!(is_connected(&b, [&[(0u64, 1u64), (1, 3), (2, 3)][..]]));
    }

    #[test]
    fn two_states_give_their_pair() {
        let b = set(&["0110", "1011"]);
        let plan = synthesize(&b, SynthOptions::default()).unwrap();
        assert_eq!(plan.candidates.len(), 1);
        assert_eq!(plan, chain_mixer(&b, true).unwrap());
    }

    #[test]
    fn full_space_is_x_mixer() {
        for n in 2..=4 {
            let b = FeasibleSet::full_space(n).unwrap();
            let plan = synthesize(&b, SynthOptions::default()).unwrap();
            assert_eq!(plan.total_cost, 0);
            assert_eq!(plan.candidates.len(), n);
            assert!(plan.candidates.iter().all(|c| c.lx.count_ones() == 1));
        }
    }

    #[test]
    fn commuting_example_costs() {
        let b = set(&["1010", "0111", "1110", "1001", "0010", "0000", "1101"]);
        let opts = |restrict| SynthOptions { restrict, selection: Selection::Exact };
        assert_eq!(synthesize(&b, opts(false)).unwrap().total_cost, 64);
        assert_eq!(synthesize(&b, opts(true)).unwrap().total_cost, 22);
        assert_eq!(chain_mixer(&b, false).unwrap().total_cost, 200);
        assert_eq!(chain_mixer(&b, true).unwrap().total_cost, 78);
    }
}
