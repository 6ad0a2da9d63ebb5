//! Diagonal stabilizer groups: generators for orbit code spaces and their projectors.

use crate::bits;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::pauli::{PauliString, PauliSum};

/// Largest generator count `group_elements` will enumerate.
pub const ENUMERATION_GUARD: usize = 20;

/// Independent signed Z-type generators of a stabilizer group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorSet {
    n: usize,
    generators: Vec<PauliString>,
}

impl GeneratorSet {
    pub fn new(n: usize, generators: Vec<PauliString>) -> Result<Self> {
        for g in &generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: g.n() });
            }
            if !g.is_diagonal() {
                return Err(Error::NotDiagonal(g.to_string()));
            }
            if !g.is_hermitian() {
                return Err(Error::NotHermitian(g.to_string()));
            }
        }
        let set = GeneratorSet { n, generators };
        if set.canonical().len() != set.generators.len() {
            return Err(Error::DependentGenerators);
        }
        Ok(set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True iff every generator has eigenvalue `+1` on `z`.
    pub fn stabilizes(&self, z: u64) -> bool {
        self.generators.iter().all(|g| g.eigenvalue_on_basis(z) == Ok(1))
    }

    /// Fully reduced GF(2) basis of `(z_mask, sign)` rows, sorted; equal iff the groups are equal.
    pub fn canonical(&self) -> Vec<(u64, bool)> {
        let mut rows: Vec<(u64, bool)> = self.generators.iter().map(|g| (g.z_mask(), g.phase_exp() == 2)).collect();
        let mut basis: Vec<(u64, bool)> = Vec::new();
        for bit in (0..self.n).rev() {
            let m = 1u64 << bit;
            let Some(pos) = rows.iter().position(|r| r.0 & m != 0) else { continue };
            let pivot = rows.swap_remove(pos);
            for r in rows.iter_mut().chain(basis.iter_mut()) {
                if r.0 & m != 0 {
                    r.0 ^= pivot.0;
                    r.1 ^= pivot.1;
                }
            }
            basis.push(pivot);
        }
        // Leftover rows reduced to zero mask: a zero row with sign set would be -I.
        basis.sort_unstable();
        basis
    }

    pub fn same_group(&self, other: &GeneratorSet) -> bool {
        self.n == other.n && self.canonical() == other.canonical()
    }
}

/// `{(-1)^{z_i} Z_i}` for `i = 1..=n`.
pub fn stabilizer_of_state(n: usize, z: u64) -> Result<GeneratorSet> {
    bits::check_qubits(n)?;
    let generators = (1..=n)
        .map(|q| {
            let bit = bits::qubit_bit(n, q);
            PauliString::z_type(n, bit, z & bit != 0)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorSet { n, generators })
}

/// Generators for `C(S) ⊕ E·C(S)`.
///
/// The anticommuting generator of lowest index is the pivot; each other
/// anticommuting generator is replaced in place by `pivot · g`, and the pivot
/// itself is dropped.
pub fn extend_by_error(g: &GeneratorSet, e: &PauliString) -> Result<GeneratorSet> {
    if e.n() != g.n {
        return Err(Error::DimensionMismatch { left: g.n, right: e.n() });
    }
    if !e.is_x_type() {
        return Err(Error::NotXType(e.to_string()));
    }
    let anti: Vec<bool> = g.generators.iter().map(|s| s.commutes(e).map(|c| !c)).collect::<Result<_>>()?;
    let pivot = anti.iter().position(|&a| a).ok_or_else(|| Error::UndetectableError(e.to_string()))?;
    let p = g.generators[pivot];
    let mut generators = Vec::with_capacity(g.len() - 1);
    for (j, s) in g.generators.iter().enumerate() {
        if j == pivot {
            continue;
        }
        generators.push(if anti[j] { p.multiply(s)? } else { *s });
    }
    Ok(GeneratorSet { n: g.n, generators })
}

/// Stabilizer generators of `span(⟨E_1, …, E_k⟩|z⟩)`, one error at a time.
pub fn minimal_generators(n: usize, base: u64, errors: &[u64]) -> Result<GeneratorSet> {
    let mut g = stabilizer_of_state(n, base)?;
    for &e in errors {
        g = extend_by_error(&g, &PauliString::x_type(n, e)?)?;
    }
    Ok(g)
}

/// All `2^l` group elements in Gray-code order: element `k` is the product of
/// the generators indexed by the set bits of `k ^ (k >> 1)`.
pub fn group_elements(g: &GeneratorSet) -> Result<Vec<PauliString>> {
    let l = g.len();
    if l > ENUMERATION_GUARD {
        return Err(Error::EnumerationGuard(l));
    }
    let mut out = Vec::with_capacity(1 << l);
    let mut cur = PauliString::identity(g.n);
    out.push(cur);
    for k in 1..1usize << l {
        let flip = k.trailing_zeros() as usize;
        cur = cur.multiply(&g.generators[flip])?;
        out.push(cur);
    }
    Ok(out)
}

/// Uniform group sum `(1/2^l) Σ_{s∈S} s`.
pub fn expand_projector(g: &GeneratorSet) -> Result<PauliSum> {
    let w = Dyadic::inv_pow2(g.len() as u32);
    PauliSum::from_terms(g.n, group_elements(g)?.into_iter().map(|s| (s, w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn gens(n: usize, list: &[&str]) -> GeneratorSet {
        GeneratorSet::new(n, list.iter().map(|s| ps(s)).collect()).unwrap()
    }

    fn z(s: &str) -> u64 {
        bits::parse(s).unwrap().0
    }

    #[test]
    fn state_stabilizers() {
        let g = stabilizer_of_state(4, z("1011")).unwrap();
        assert_eq!(g, gens(4, &["-ZIII", "IZII", "-IIZI", "-IIIZ"]));
        let g = stabilizer_of_state(5, z("10010")).unwrap();
        assert!(g.generators().iter().all(|s| s.eigenvalue_on_basis(z("10010")) == Ok(1)));
    }

    #[test]
    fn algorithm_walk() {
        let g0 = stabilizer_of_state(4, z("1011")).unwrap();
        let g1 = extend_by_error(&g0, &ps("IXXX")).unwrap();
        assert!(g1.same_group(&gens(4, &["-ZIII", "-IZZI", "IIZZ"])));
        let g2 = extend_by_error(&g1, &ps("XXII")).unwrap();
        assert!(g2.same_group(&gens(4, &["ZZZI", "IIZZ"])));
        let g3 = extend_by_error(&g2, &ps("XIIX")).unwrap();
        assert!(g3.same_group(&gens(4, &["ZZIZ"])));
    }

    #[test]
    fn undetectable_error_rejected() {
        let g = gens(2, &["ZZ"]);
        assert!(matches!(extend_by_error(&g, &ps("XX")), Err(Error::UndetectableError(_))));
    }

    #[test]
    fn pair_stabilizer() {
        let g = minimal_generators(5, z("10010"), &[z("11001")]).unwrap();
        assert!(g.same_group(&gens(5, &["IIZII", "-IIIZI", "-ZZIII", "IZIIZ"])));
        assert_eq!(expand_projector(&g).unwrap().len(), 16);
    }

    #[test]
    fn projector_of_orbit() {
        let g = minimal_generators(4, z("1011"), &[z("0111"), z("1100"), z("1001")]).unwrap();
        let p = expand_projector(&g).unwrap();
        let half = Dyadic::inv_pow2(1);
        assert_eq!(p, PauliSum::from_terms(4, [(ps("IIII"), half), (ps("ZZIZ"), half)]).unwrap());
        assert_eq!(expand_projector(&gens(3, &[])).unwrap(), PauliSum::identity(3));
    }

    #[test]
    fn gray_order() {
        let el = group_elements(&gens(2, &["-ZI", "IZ"])).unwrap();
        let names: Vec<String> = el.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["II", "-ZI", "-ZZ", "IZ"]);
    }

    #[test]
    fn dependent_generators_rejected() {
        assert_eq!(GeneratorSet::new(2, vec![ps("ZI"), ps("IZ"), ps("-ZZ")]), Err(Error::DependentGenerators));
    }
}
