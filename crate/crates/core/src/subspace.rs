//! Feasible sets, the logical-X graph family and X-type orbit discovery.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::bits::{self, check_qubits, fits};
use crate::error::{Error, Result};

/// An explicit list of distinct feasible basis states on `n` qubits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FeasibleSet {
    n: usize,
    states: Vec<u64>,
}

impl FeasibleSet {
    pub fn new(n: usize, states: Vec<u64>) -> Result<Self> {
        check_qubits(n)?;
        if states.is_empty() {
            return Err(Error::TooFewStates);
        }
        let mut seen = HashSet::with_capacity(states.len());
        for &z in &states {
            if !fits(n, z) {
                return Err(Error::StrayBits { n });
            }
            if !seen.insert(z) {
                return Err(Error::DuplicateState(bits::render(z, n)));
            }
        }
        Ok(FeasibleSet { n, states })
    }

    pub fn from_strings<S: AsRef<str>>(lines: &[S]) -> Result<Self> {
        let mut n = None;
        let mut states = Vec::with_capacity(lines.len());
        for (i, s) in lines.iter().enumerate() {
            let (z, len) = bits::parse(s.as_ref())?;
            match n {
                None => n = Some(len),
                Some(m) if m != len => {
                    return Err(Error::LineLength { line: i + 1, expected: m, found: len });
                }
                _ => {}
            }
            states.push(z);
        }
        FeasibleSet::new(n.ok_or(Error::TooFewStates)?, states)
    }

    /// Parses the text format: one bitstring per line, `#` comments, blank lines skipped.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut n = None;
        let mut states = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (z, len) = bits::parse(line)?;
            match n {
                None => n = Some(len),
                Some(m) if m != len => {
                    return Err(Error::LineLength { line: i + 1, expected: m, found: len });
                }
                _ => {}
            }
            states.push(z);
        }
        FeasibleSet::new(n.ok_or(Error::TooFewStates)?, states)
    }

    /// Every basis state of `n` qubits, ascending.
    pub fn full_space(n: usize) -> Result<Self> {
        if n > 20 {
            return Err(Error::QubitCount(n));
        }
        FeasibleSet::new(n, (0..1u64 << n).collect())
    }

    /// States whose Hamming weight lies in `k1..=k2`, ascending.
    pub fn hamming_band(n: usize, k1: usize, k2: usize) -> Result<Self> {
        if k1 > k2 || k2 > n || n > 20 {
            return Err(Error::InvalidRange { n, k1, k2 });
        }
        let states = (0..1u64 << n).filter(|z| (k1..=k2).contains(&(z.count_ones() as usize))).collect();
        FeasibleSet::new(n, states)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn states(&self) -> &[u64] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn contains(&self, z: u64) -> bool {
        self.states.contains(&z)
    }

    pub fn index_of(&self, z: u64) -> Option<usize> {
        self.states.iter().position(|&s| s == z)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &z in &self.states {
            out.push_str(&bits::render(z, self.n));
            out.push('\n');
        }
        out
    }
}

/// An unordered pair of states, stored with the smaller integer first.
pub type Edge = (u64, u64);

pub fn edge(a: u64, b: u64) -> Edge {
    (a.min(b), a.max(b))
}

/// Mask of the bits where `x` and `y` differ.
pub fn logical_x_of_pair(x: u64, y: u64) -> Result<u64> {
    if x == y {
        return Err(Error::IdenticalStates);
    }
    Ok(x ^ y)
}

/// The graph `G_lX`: states connected by one logical X and the connecting pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LxGraph {
    /// Member states in ascending order.
    pub vertices: Vec<u64>,
    /// Pairs in ascending order of their smaller member.
    pub edges: Vec<Edge>,
}

/// All nonempty `G_lX` keyed by logical-X mask, iterated in ascending mask order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LogicalXFamily {
    n: usize,
    graphs: BTreeMap<u64, LxGraph>,
}

impl LogicalXFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn get(&self, lx: u64) -> Option<&LxGraph> {
        self.graphs.get(&lx)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &LxGraph)> {
        self.graphs.iter().map(|(&k, g)| (k, g))
    }

    pub fn edge_count(&self) -> usize {
        self.graphs.values().map(|g| g.edges.len()).sum()
    }
}

pub fn build_family(b: &FeasibleSet) -> Result<LogicalXFamily> {
    if b.len() < 2 {
        return Err(Error::TooFewStates);
    }
    let mut edges: BTreeMap<u64, Vec<Edge>> = BTreeMap::new();
    let s = b.states();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            edges.entry(s[i] ^ s[j]).or_default().push(edge(s[i], s[j]));
        }
    }
    let graphs = edges
        .into_iter()
        .map(|(lx, mut es)| {
            es.sort_unstable();
            let mut vertices: Vec<u64> = es.iter().flat_map(|&(a, b)| [a, b]).collect();
            vertices.sort_unstable();
            (lx, LxGraph { vertices, edges: es })
        })
        .collect();
    Ok(LogicalXFamily { n: b.n(), graphs })
}

/// One orbit `⟨lX, E_1, …, E_k⟩|base⟩` inside a graph `G_lX`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orbit {
    pub lx: u64,
    pub base: u64,
    /// X-type generators beyond `lX`, in order of acceptance.
    pub generators: Vec<u64>,
    /// Orbit states, ascending; `2^(k+1)` of them.
    pub states: Vec<u64>,
}

impl Orbit {
    /// `lX` followed by the extra generators.
    pub fn all_generators(&self) -> Vec<u64> {
        std::iter::once(self.lx).chain(self.generators.iter().copied()).collect()
    }

    /// The `lX` pairs inside the orbit.
    pub fn edges(&self) -> Vec<Edge> {
        self.states.iter().filter(|&&z| z < z ^ self.lx).map(|&z| (z, z ^ self.lx)).collect()
    }
}

/// Partitions `V_lX` into X-type orbits that each contain whole `lX` pairs.
///
/// Pairs are processed in ascending order of their smaller state. Each
/// unassigned pair seeds an orbit `{a, a^lX}`; then every still unassigned
/// member `v` of `V_lX` (ascending) proposes the generator `a^v`, accepted when
/// the doubled orbit lands entirely on unassigned states.
pub fn find_group_orbits(lx: u64, graph: &LxGraph) -> Vec<Orbit> {
    let mut unassigned: BTreeSet<u64> = graph.vertices.iter().copied().collect();
    let mut orbits = Vec::new();
    for &(a, b) in &graph.edges {
        if !unassigned.contains(&a) {
            continue;
        }
        unassigned.remove(&a);
        unassigned.remove(&b);
        let mut members: Vec<u64> = vec![a, b];
        let mut generators = Vec::new();
        let proposals: Vec<u64> = unassigned.iter().copied().collect();
        for v in proposals {
            if !unassigned.contains(&v) {
                continue;
            }
            let c = a ^ v;
            if members.iter().all(|&m| unassigned.contains(&(m ^ c))) {
                let image: Vec<u64> = members.iter().map(|&m| m ^ c).collect();
                for m in &image {
                    unassigned.remove(m);
                }
                members.extend(image);
                generators.push(c);
            }
        }
        members.sort_unstable();
        orbits.push(Orbit { lx, base: a, generators, states: members });
    }
    orbits
}
