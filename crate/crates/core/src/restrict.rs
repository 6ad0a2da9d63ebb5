//! Cheaper projectors that agree with the orbit projector on `span(B)`.
//!
//! Only the rows of the outside states `B \ V_lX` constrain a restriction. The
//! remaining members of `V_lX` ("free" states, belonging to other orbits of the
//! same logical X) may see the projector as 0 or 1; a 1 just means the mixer
//! term also covers that pair. Anything else is rejected.

use std::collections::HashMap;

use crate::bits;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::linalg::{self, Rational};
use crate::pauli::{self, PauliString, PauliSum};
use crate::stabilizer::{expand_projector, group_elements, GeneratorSet};
use crate::subspace::FeasibleSet;

/// Column budget for the exhaustive support-3 kernel search.
pub const KERNEL_EXHAUSTIVE_COLUMNS: usize = 64;
/// Largest column count for which every exact kernel basis vector is offered.
pub const KERNEL_BASIS_COLUMNS: usize = 1024;
/// Subspaces examined per dimension before the subgroup search turns greedy.
pub const SUBGROUP_BUDGET: u64 = 1 << 18;

/// `entries[i][j]` is the eigenvalue of `columns[j]` on `rows[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignMatrix {
    pub rows: Vec<u64>,
    pub columns: Vec<PauliString>,
    pub entries: Vec<Vec<i8>>,
}

impl SignMatrix {
    fn build(columns: &[PauliString], rows: &[u64]) -> Result<SignMatrix> {
        let entries = rows
            .iter()
            .map(|&z| columns.iter().map(|c| c.eigenvalue_on_basis(z)).collect::<Result<Vec<i8>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(SignMatrix { rows: rows.to_vec(), columns: columns.to_vec(), entries })
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    /// Bit `i` set iff column `j` is `-1` on row `i`, packed in 64-bit words.
    fn column_pattern(&self, j: usize) -> Vec<u64> {
        let mut words = vec![0u64; self.rows.len().div_ceil(64)];
        for (i, row) in self.entries.iter().enumerate() {
            if row[j] < 0 {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        words
    }
}

/// Sign matrix over all group elements; each row must be balanced.
pub fn build_a(elements: &[PauliString], outside: &[u64]) -> Result<SignMatrix> {
    let a = SignMatrix::build(elements, outside)?;
    let n = elements.first().map_or(1, |e| e.n());
    for (row, &z) in a.entries.iter().zip(&a.rows) {
        if row.iter().all(|&e| e > 0) {
            return Err(Error::OutsideInCodeSpace(bits::render(z, n)));
        }
        if row.iter().map(|&e| e as i64).sum::<i64>() != 0 {
            return Err(Error::UnbalancedRow(bits::render(z, n)));
        }
    }
    Ok(a)
}

/// Sign matrix over the generators; each row needs at least one `-1`.
pub fn build_m(g: &GeneratorSet, outside: &[u64]) -> Result<SignMatrix> {
    let m = SignMatrix::build(g.generators(), outside)?;
    for (row, &z) in m.entries.iter().zip(&m.rows) {
        if row.iter().all(|&e| e > 0) {
            return Err(Error::OutsideInCodeSpace(bits::render(z, g.n())));
        }
    }
    Ok(m)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Method {
    Unrestricted,
    Subgroup,
    Kernel,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Unrestricted => "unrestricted",
            Method::Subgroup => "subgroup",
            Method::Kernel => "kernel",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        match s {
            "unrestricted" => Some(Method::Unrestricted),
            "subgroup" => Some(Method::Subgroup),
            "kernel" => Some(Method::Kernel),
            _ => None,
        }
    }
}

/// A diagonal operator `P` with its origin and the cost of `lX · P`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RestrictedProjector {
    pub method: Method,
    pub projector: PauliSum,
    pub cost: usize,
}

/// CX cost of `lX · s` for a diagonal `s`.
pub fn term_cost(lx: u64, s: &PauliString) -> usize {
    let w = (lx | s.z_mask()).count_ones() as usize;
    if w == 0 {
        0
    } else {
        2 * (w - 1)
    }
}

/// Cost of the mixer term `lX · P`.
pub fn mixer_cost(lx: u64, p: &PauliSum) -> Result<usize> {
    Ok(pauli::cost(&p.left_multiply(&PauliString::x_type(p.n(), lx)?)?))
}

fn is_binary_on(p: &PauliSum, free: &[u64]) -> bool {
    free.iter().all(|&z| match p.diagonal_value(z) {
        Ok(v) => v == Dyadic::ZERO || v == Dyadic::ONE,
        Err(_) => false,
    })
}

fn sum_of(columns: &[PauliString], support: &[(usize, Dyadic)]) -> Result<PauliSum> {
    let n = columns.first().map_or(1, |c| c.n());
    PauliSum::from_terms(n, support.iter().map(|&(j, c)| (columns[j], c)))
}

/// Kernel vector as dyadic coefficients normalised to unit sum, if it has one.
fn normalise(v: &[Rational]) -> Option<Vec<(usize, Dyadic)>> {
    let total: Rational = v.iter().copied().sum();
    if total == Rational::from_integer(0) {
        return None;
    }
    v.iter()
        .enumerate()
        .filter(|(_, x)| **x != Rational::from_integer(0))
        .map(|(j, x)| {
            let r = *x / total;
            Dyadic::from_ratio(*r.numer(), *r.denom()).map(|d| (j, d))
        })
        .collect()
}

#[derive(Clone)]
struct KernelHit {
    cost: usize,
    support: Vec<(usize, Dyadic)>,
}

impl KernelHit {
    /// Equal cost prefers supports without the identity column, then smaller index tuples.
    fn key(&self) -> (usize, bool, Vec<usize>) {
        let idx: Vec<usize> = self.support.iter().map(|&(j, _)| j).collect();
        let uses_identity = idx.len() > 1 && idx.contains(&0);
        (self.cost, uses_identity, idx)
    }
}

/// Sparse kernel vector of `A` with nonzero sum, minimising the summed cost of its support.
///
/// Column 0 must be the identity (as produced by `group_elements`). Supports
/// of size 2 are searched exhaustively by matching complementary sign
/// patterns; size 3 exhaustively up to [`KERNEL_EXHAUSTIVE_COLUMNS`] columns,
/// greedy column elimination on the exact kernel beyond that. Each vector of
/// the reduced-echelon kernel basis is also tried, and the all-ones vector is
/// always available as a fallback.
pub fn kernel_restrict(a: &SignMatrix, term_costs: &[usize], free: &[u64]) -> Result<RestrictedProjector> {
    let cols = a.n_cols();
    let mut best: Option<KernelHit> = None;
    let mut offer = |hit: KernelHit, p: &PauliSum| {
        if !is_binary_on(p, free) {
            return;
        }
        if best.as_ref().is_none_or(|b| hit.key() < b.key()) {
            best = Some(hit);
        }
    };

    if a.n_rows() == 0 {
        let hit = KernelHit { cost: term_costs[0], support: vec![(0, Dyadic::ONE)] };
        let p = sum_of(&a.columns, &hit.support)?;
        offer(hit, &p);
    }

    let half = Dyadic::inv_pow2(1);
    let mut by_pattern: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for j in 0..cols {
        by_pattern.entry(a.column_pattern(j)).or_default().push(j);
    }
    let n_rows = a.n_rows();
    for j in 0..cols {
        let mut comp = a.column_pattern(j);
        for (w, word) in comp.iter_mut().enumerate() {
            let bits_here = (n_rows - 64 * w).min(64);
            let mask = if bits_here == 64 { u64::MAX } else { (1u64 << bits_here) - 1 };
            *word = !*word & mask;
        }
        if let Some(partners) = by_pattern.get(&comp) {
            for &k in partners.iter().filter(|&&k| k > j) {
                let hit = KernelHit { cost: term_costs[j] + term_costs[k], support: vec![(j, half), (k, half)] };
                let p = sum_of(&a.columns, &hit.support)?;
                offer(hit, &p);
            }
        }
    }

    if cols <= KERNEL_EXHAUSTIVE_COLUMNS && n_rows > 0 {
        let pats: Vec<Vec<u64>> = (0..cols).map(|j| a.column_pattern(j)).collect();
        let row_mask: Vec<u64> = (0..n_rows.div_ceil(64))
            .map(|w| {
                let bits_here = (n_rows - 64 * w).min(64);
                if bits_here == 64 {
                    u64::MAX
                } else {
                    (1u64 << bits_here) - 1
                }
            })
            .collect();
        for i in 0..cols {
            for j in i + 1..cols {
                for k in j + 1..cols {
                    // Rows up to sign take at most four shapes; three distinct
                    // shapes already make the 3-column block full rank.
                    let mut shapes = [false; 4];
                    for w in 0..row_mask.len() {
                        let (d1, d2) = (pats[i][w] ^ pats[j][w], pats[i][w] ^ pats[k][w]);
                        let m = row_mask[w];
                        shapes[0] |= !d1 & !d2 & m != 0;
                        shapes[1] |= !d1 & d2 & m != 0;
                        shapes[2] |= d1 & !d2 & m != 0;
                        shapes[3] |= d1 & d2 & m != 0;
                    }
                    // Three distinct shapes make the block full rank; one shape
                    // leaves only kernel vectors with a zero entry. With two, the
                    // kernel is spanned by the cross product of one row of each.
                    if shapes.iter().filter(|&&s| s).count() != 2 {
                        continue;
                    }
                    let row =
                        |r: &Vec<i8>| [r[i] as i64 * r[i] as i64, r[j] as i64 * r[i] as i64, r[k] as i64 * r[i] as i64];
                    let first = row(&a.entries[0]);
                    let other = a.entries.iter().map(row).find(|r| *r != first).expect("two row shapes");
                    let v = [
                        first[1] * other[2] - first[2] * other[1],
                        first[2] * other[0] - first[0] * other[2],
                        first[0] * other[1] - first[1] * other[0],
                    ];
                    if v.contains(&0) {
                        continue;
                    }
                    let v: Vec<Rational> = v.iter().map(|&x| Rational::from_integer(x)).collect();
                    let Some(coeffs) = normalise(&v) else { continue };
                    let idx = [i, j, k];
                    let support: Vec<(usize, Dyadic)> = coeffs.iter().map(|&(t, c)| (idx[t], c)).collect();
                    let hit = KernelHit { cost: term_costs[i] + term_costs[j] + term_costs[k], support };
                    let p = sum_of(&a.columns, &hit.support)?;
                    offer(hit, &p);
                }
            }
        }
    } else if n_rows > 0 {
        if let Some(support) = greedy_elimination(a, term_costs) {
            let hit = KernelHit { cost: support.iter().map(|&(j, _)| term_costs[j]).sum(), support };
            let p = sum_of(&a.columns, &hit.support)?;
            offer(hit, &p);
        }
    }

    if n_rows > 0 && cols <= KERNEL_BASIS_COLUMNS {
        for v in linalg::kernel_basis(&a.entries, cols) {
            let Some(support) = normalise(&v) else { continue };
            let hit = KernelHit { cost: support.iter().map(|&(j, _)| term_costs[j]).sum(), support };
            let p = sum_of(&a.columns, &hit.support)?;
            offer(hit, &p);
        }
    }

    let uniform = Dyadic::inv_pow2(cols.trailing_zeros());
    let full = KernelHit { cost: term_costs.iter().sum(), support: (0..cols).map(|j| (j, uniform)).collect() };
    let p = sum_of(&a.columns, &full.support)?;
    offer(full, &p);

    let hit = best.expect("uniform vector is always admissible");
    let projector = sum_of(&a.columns, &hit.support)?;
    Ok(RestrictedProjector { method: Method::Kernel, projector, cost: hit.cost })
}

/// Drops columns from most to least expensive while a nonzero-sum kernel vector survives.
fn greedy_elimination(a: &SignMatrix, term_costs: &[usize]) -> Option<Vec<(usize, Dyadic)>> {
    let has_vector = |keep: &[usize]| -> Option<Vec<Rational>> {
        let sub: Vec<Vec<i8>> = a.entries.iter().map(|r| keep.iter().map(|&j| r[j]).collect()).collect();
        linalg::kernel_basis(&sub, keep.len())
            .into_iter()
            .find(|v| v.iter().copied().sum::<Rational>() != Rational::from_integer(0))
    };
    let mut keep: Vec<usize> = (0..a.n_cols()).collect();
    let mut order = keep.clone();
    order.sort_by_key(|&j| (std::cmp::Reverse(term_costs[j]), std::cmp::Reverse(j)));
    for j in order {
        let trial: Vec<usize> = keep.iter().copied().filter(|&k| k != j).collect();
        if has_vector(&trial).is_some() {
            keep = trial;
        }
    }
    let v = has_vector(&keep)?;
    let coeffs = normalise(&v)?;
    Some(coeffs.into_iter().map(|(t, c)| (keep[t], c)).collect())
}

/// Reduced echelon bases of every `d`-dimensional subspace of `GF(2)^l`.
fn for_each_subspace(l: usize, d: usize, f: &mut dyn FnMut(&[u64])) {
    fn pivots(l: usize, d: usize, start: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if acc.len() == d {
            f(acc);
            return;
        }
        for p in start..l {
            acc.push(p);
            pivots(l, d, p + 1, acc, f);
            acc.pop();
        }
    }
    pivots(l, d, 0, &mut Vec::new(), &mut |ps: &[usize]| {
        // Row r has its highest bit at ps[r] and may use the non-pivot bits below it.
        let free: Vec<Vec<usize>> = ps.iter().map(|&p| (0..p).filter(|b| !ps.contains(b)).collect()).collect();
        let total: u32 = free.iter().map(|v| v.len() as u32).sum();
        for assign in 0u64..1u64 << total {
            let mut basis = Vec::with_capacity(d);
            let mut shift = 0;
            for (r, &p) in ps.iter().enumerate() {
                let mut w = 1u64 << p;
                for (t, &b) in free[r].iter().enumerate() {
                    if assign >> (shift + t) & 1 == 1 {
                        w |= 1 << b;
                    }
                }
                shift += free[r].len();
                basis.push(w);
            }
            f(&basis);
        }
    });
}

/// Number of `d`-dimensional subspaces of `GF(2)^l`, saturating.
fn gaussian_binomial(l: usize, d: usize) -> u64 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..d {
        num = num.saturating_mul((1u128 << (l - i)) - 1);
        den = den.saturating_mul((1u128 << (i + 1)) - 1);
    }
    (num / den).min(u64::MAX as u128) as u64
}

fn subgroup_elements(g: &GeneratorSet, basis: &[u64]) -> Result<Vec<PauliString>> {
    let n = g.n();
    let elements: Vec<PauliString> = basis
        .iter()
        .map(|&w| {
            (0..g.len())
                .filter(|j| w >> j & 1 == 1)
                .try_fold(PauliString::identity(n), |acc, j| acc.multiply(&g.generators()[j]))
        })
        .collect::<Result<_>>()?;
    group_elements(&GeneratorSet::new(n, elements)?)
}

fn subgroup_cost(lx: u64, g: &GeneratorSet, basis: &[u64]) -> Result<usize> {
    Ok(subgroup_elements(g, basis)?.iter().map(|s| term_cost(lx, s)).sum())
}

/// Smallest subgroup `H` whose uniform sum vanishes on every row of `M`.
///
/// A row is annihilated iff some element of `H` is `-1` on it, i.e. iff the
/// row's `-1` pattern has odd overlap with some basis vector of `H`'s exponent
/// space. Dimensions are searched upward; within the first feasible dimension
/// the cheapest subgroup wins, earliest in enumeration order on ties.
pub fn subgroup_restrict(m: &SignMatrix, g: &GeneratorSet, lx: u64) -> Result<RestrictedProjector> {
    let l = g.len();
    let patterns: Vec<u64> = m
        .entries
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, &e)| e < 0).fold(0u64, |acc, (j, _)| acc | 1 << j))
        .collect();
    let covers = |basis: &[u64]| patterns.iter().all(|&r| basis.iter().any(|&w| (w & r).count_ones() % 2 == 1));

    let mut chosen: Option<Vec<u64>> = None;
    if patterns.is_empty() {
        chosen = Some(Vec::new());
    }
    let mut d = 1;
    while chosen.is_none() && d <= l {
        if gaussian_binomial(l, d) > SUBGROUP_BUDGET {
            chosen = Some(greedy_subgroup(&patterns, l, lx, g)?);
            break;
        }
        let mut best: Option<(usize, Vec<u64>)> = None;
        let mut err = None;
        for_each_subspace(l, d, &mut |basis: &[u64]| {
            if err.is_some() || !covers(basis) {
                return;
            }
            match subgroup_cost(lx, g, basis) {
                Ok(c) => {
                    if best.as_ref().is_none_or(|(bc, _)| c < *bc) {
                        best = Some((c, basis.to_vec()));
                    }
                }
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        chosen = best.map(|(_, b)| b);
        d += 1;
    }
    let basis = chosen.unwrap_or_else(|| (0..l).map(|j| 1u64 << j).collect());
    let elements = subgroup_elements(g, &basis)?;
    let w = Dyadic::inv_pow2(basis.len() as u32);
    let projector = PauliSum::from_terms(g.n(), elements.iter().map(|&s| (s, w)))?;
    let cost = elements.iter().map(|s| term_cost(lx, s)).sum();
    Ok(RestrictedProjector { method: Method::Subgroup, projector, cost })
}

/// Adds exponent vectors covering the most uncovered rows (cheapest first on ties).
fn greedy_subgroup(patterns: &[u64], l: usize, lx: u64, g: &GeneratorSet) -> Result<Vec<u64>> {
    let mut basis: Vec<u64> = Vec::new();
    let mut uncovered: Vec<u64> = patterns.to_vec();
    while !uncovered.is_empty() {
        let mut best: Option<(usize, usize, u64)> = None;
        for w in 1u64..1u64 << l {
            if linalg::gf2_rank(&[basis.as_slice(), &[w]].concat()) != basis.len() + 1 {
                continue;
            }
            let hits = uncovered.iter().filter(|&&r| (w & r).count_ones() % 2 == 1).count();
            if hits == 0 {
                continue;
            }
            let trial = [basis.as_slice(), &[w]].concat();
            let c = subgroup_cost(lx, g, &trial)?;
            let better = match best {
                None => true,
                Some((bh, bc, _)) => hits > bh || (hits == bh && c < bc),
            };
            if better {
                best = Some((hits, c, w));
            }
        }
        let (_, _, w) = best.expect("a generator is -1 on every uncovered row");
        basis.push(w);
        uncovered.retain(|&r| (w & r).count_ones() % 2 == 0);
    }
    Ok(basis)
}

/// `Π` itself, costed as `lX · Π`.
pub fn unrestricted(lx: u64, g: &GeneratorSet) -> Result<RestrictedProjector> {
    let projector = expand_projector(g)?;
    let cost = group_elements(g)?.iter().map(|s| term_cost(lx, s)).sum();
    Ok(RestrictedProjector { method: Method::Unrestricted, projector, cost })
}

/// The three constraint groups of a restriction problem.
#[derive(Clone, Debug)]
pub struct StateSplit {
    /// `B \ V_lX`, in the order of `B`.
    pub outside: Vec<u64>,
    /// Members of `V_lX` outside the code space.
    pub free: Vec<u64>,
}

pub fn split_states(g: &GeneratorSet, b: &FeasibleSet, v_lx: &[u64]) -> StateSplit {
    let outside = b.states().iter().copied().filter(|z| !v_lx.contains(z)).collect();
    let free = v_lx.iter().copied().filter(|&z| !g.stabilizes(z)).collect();
    StateSplit { outside, free }
}

/// Cheapest of the unrestricted, subgroup and kernel projectors for `lX` on this orbit.
///
/// Ties keep the earlier of unrestricted, subgroup, kernel.
pub fn best_restriction(lx: u64, g: &GeneratorSet, b: &FeasibleSet, v_lx: &[u64]) -> Result<RestrictedProjector> {
    restrict_with(lx, g, &split_states(g, b, v_lx))
}

/// [`best_restriction`] for an explicit split of the constraining states.
pub fn restrict_with(lx: u64, g: &GeneratorSet, split: &StateSplit) -> Result<RestrictedProjector> {
    let full = unrestricted(lx, g)?;
    if split.outside.is_empty() && split.free.is_empty() {
        // Nothing constrains the projector except V itself.
        let id = PauliSum::identity(g.n());
        let cost = mixer_cost(lx, &id)?;
        return Ok(if cost < full.cost {
            RestrictedProjector { method: Method::Subgroup, projector: id, cost }
        } else {
            full
        });
    }
    let elements = group_elements(g)?;
    let a = build_a(&elements, &split.outside)?;
    let costs: Vec<usize> = elements.iter().map(|s| term_cost(lx, s)).collect();
    let m = build_m(g, &split.outside)?;
    let sub = subgroup_restrict(&m, g, lx)?;
    let ker = kernel_restrict(&a, &costs, &split.free)?;
    let mut best = full;
    for cand in [sub, ker] {
        if cand.cost < best.cost {
            best = cand;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::minimal_generators;

    fn z(s: &str) -> u64 {
        bits::parse(s).unwrap().0
    }

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn table_set() -> FeasibleSet {
        FeasibleSet::from_strings(&["10010", "01010", "10011", "11101", "00110", "01110"]).unwrap()
    }

    #[test]
    fn first_row_of_a() {
        let g = GeneratorSet::new(5, vec![ps("IIZII"), ps("-IIIZI"), ps("-ZZIII"), ps("IZIIZ")]).unwrap();
        let elements = group_elements(&g).unwrap();
        let outside = [z("11101"), z("01010"), z("10011"), z("00110")];
        let a = build_a(&elements, &outside).unwrap();
        assert_eq!(a.n_rows(), 4);
        assert!(a.entries.iter().all(|r| r.iter().map(|&e| e as i32).sum::<i32>() == 0));
    }

    #[test]
    fn empty_outside_gives_identity_kernel_solution() {
        let g = minimal_generators(3, 0b101, &[0b011]).unwrap();
        let elements = group_elements(&g).unwrap();
        let a = build_a(&elements, &[]).unwrap();
        let costs: Vec<usize> = elements.iter().map(|s| term_cost(0b011, s)).collect();
        let r = kernel_restrict(&a, &costs, &[]).unwrap();
        assert_eq!(r.projector, PauliSum::identity(3));
        assert_eq!(r.cost, 2);
    }

    #[test]
    fn subgroup_needs_two_dimensions_for_all_patterns() {
        let g = GeneratorSet::new(2, vec![ps("ZI"), ps("IZ")]).unwrap();
        let m = SignMatrix {
            rows: vec![0b10, 0b01, 0b11],
            columns: g.generators().to_vec(),
            entries: vec![vec![-1, 1], vec![1, -1], vec![-1, -1]],
        };
        let r = subgroup_restrict(&m, &g, 0).unwrap();
        assert_eq!(r.projector.len(), 4);
    }

    #[test]
    fn single_column_all_negative() {
        let g = GeneratorSet::new(2, vec![ps("ZI"), ps("IZ")]).unwrap();
        let m = build_m(&g, &[0b10, 0b11]).unwrap();
        let r = subgroup_restrict(&m, &g, 0b01).unwrap();
        let half = Dyadic::inv_pow2(1);
        assert_eq!(r.projector, PauliSum::from_terms(2, [(ps("II"), half), (ps("ZI"), half)]).unwrap());
    }

    #[test]
    fn table_pairs_two_and_three() {
        let b = table_set();
        for (x, y, want) in [("10010", "10011", 4), ("10010", "11101", 14)] {
            let lx = z(x) ^ z(y);
            let g = minimal_generators(5, z(x), &[lx]).unwrap();
            let r = best_restriction(lx, &g, &b, &[z(x), z(y)]).unwrap();
            assert_eq!(r.cost, want, "{x}-{y}");
        }
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 1), 3);
        assert_eq!(gaussian_binomial(4, 2), 35);
        let mut count = 0;
        for_each_subspace(4, 2, &mut |_| count += 1);
        assert_eq!(count, 35);
    }
}
