//! Signed Pauli strings in symplectic bitmask form, real-weighted Pauli sums,
//! and the CX cost of a Hamiltonian.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::bits::{self, check_qubits, fits, qubit_bit};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

/// An `n`-qubit Pauli operator `i^phase · σ_1 ⊗ … ⊗ σ_n`.
///
/// Qubit `q` carries `σ_q = X` when only its x bit is set, `Z` when only its z
/// bit is set and `Y` when both are. The phase is relative to that letter form
/// (with `Y = iXZ`), so a string is Hermitian exactly when `phase ∈ {0, 2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PauliString {
    n: usize,
    x: u64,
    z: u64,
    phase: u8,
}

impl PauliString {
    pub fn new(n: usize, x: u64, z: u64, phase: u8) -> Result<Self> {
        check_qubits(n)?;
        if !fits(n, x) || !fits(n, z) {
            return Err(Error::StrayBits { n });
        }
        Ok(PauliString { n, x, z, phase: phase % 4 })
    }

    pub fn identity(n: usize) -> Self {
        PauliString::new(n, 0, 0, 0).expect("qubit count")
    }

    /// Product of X on every qubit in `mask`.
    pub fn x_type(n: usize, mask: u64) -> Result<Self> {
        PauliString::new(n, mask, 0, 0)
    }

    /// `±Z^mask`, negative when `negative` is set.
    pub fn z_type(n: usize, mask: u64, negative: bool) -> Result<Self> {
        PauliString::new(n, 0, mask, if negative { 2 } else { 0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn z_mask(&self) -> u64 {
        self.z
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase.is_multiple_of(2)
    }

    pub fn is_diagonal(&self) -> bool {
        self.x == 0
    }

    pub fn is_x_type(&self) -> bool {
        self.z == 0
    }

    /// `+1` or `-1` for Hermitian strings.
    pub fn sign(&self) -> Option<i8> {
        match self.phase {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// The same letters with phase `+1`.
    pub fn unsigned(&self) -> Self {
        PauliString { phase: 0, ..*self }
    }

    pub fn negate(&self) -> Self {
        PauliString { phase: (self.phase + 2) % 4, ..*self }
    }

    fn check_dim(&self, other: &PauliString) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Group product `self · other` with exact phase.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        self.check_dim(other)?;
        // Rewrite both factors as i^k X^x Z^z, multiply, then fold Y back in.
        let k1 = self.phase as u32 + (self.x & self.z).count_ones();
        let k2 = other.phase as u32 + (other.x & other.z).count_ones();
        let swap = 2 * (self.z & other.x).count_ones();
        let x = self.x ^ other.x;
        let z = self.z ^ other.z;
        let k = (k1 + k2 + swap + 4 * 64 - (x & z).count_ones()) % 4;
        Ok(PauliString { n: self.n, x, z, phase: k as u8 })
    }

    /// True iff the symplectic form vanishes.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        self.check_dim(other)?;
        let s = (self.x & other.z).count_ones() + (other.x & self.z).count_ones();
        Ok(s.is_multiple_of(2))
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    /// Eigenvalue of a Hermitian diagonal string on the basis state `z`.
    pub fn eigenvalue_on_basis(&self, z: u64) -> Result<i8> {
        if !self.is_diagonal() {
            return Err(Error::NotDiagonal(self.to_string()));
        }
        let sign = self.sign().ok_or_else(|| Error::NotHermitian(self.to_string()))?;
        Ok(if bits::parity(self.z & z) { -sign } else { sign })
    }

    /// Image of basis state `z` under an X-type string.
    pub fn apply_x_type(&self, z: u64) -> Result<u64> {
        if !self.is_x_type() {
            return Err(Error::NotXType(self.to_string()));
        }
        Ok(z ^ self.x)
    }

    /// Action on a basis state: `P|b⟩ = i^k |b'⟩`, returned as `(k, b')`.
    pub fn act_on_basis(&self, b: u64) -> (u8, u64) {
        let k = self.phase as u32 + (self.x & self.z).count_ones() + 2 * (self.z & b).count_ones();
        ((k % 4) as u8, b ^ self.x)
    }

    /// Letter of 1-based qubit `q`.
    pub fn letter(&self, q: usize) -> char {
        let bit = qubit_bit(self.n, q);
        match (self.x & bit != 0, self.z & bit != 0) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => 'Y',
            (false, true) => 'Z',
        }
    }

    /// Moves this string into qubits `offset+1 ..= offset+self.n` of a `total`-qubit register.
    pub fn embed(&self, total: usize, offset: usize) -> Result<PauliString> {
        if offset + self.n > total {
            return Err(Error::DimensionMismatch { left: offset + self.n, right: total });
        }
        let shift = total - offset - self.n;
        PauliString::new(total, self.x << shift, self.z << shift, self.phase)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        };
        f.write_str(prefix)?;
        for q in 1..=self.n {
            write!(f, "{}", self.letter(q))?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Parses an optional sign (`+`, `-`, `−`, `i`, `-i`) followed by letters from `IXYZ`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "Pauli string", detail: s.to_string() };
        let mut rest = s.trim();
        let mut phase = 0u8;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-').or_else(|| rest.strip_prefix('−')) {
            rest = r;
            phase = 2;
        }
        if let Some(r) = rest.strip_prefix('i') {
            rest = r;
            phase += 1;
        }
        let n = rest.chars().count();
        check_qubits(n).map_err(|_| bad())?;
        let (mut x, mut z) = (0u64, 0u64);
        for c in rest.chars() {
            x <<= 1;
            z <<= 1;
            match c {
                'I' => {}
                'X' => x |= 1,
                'Y' => {
                    x |= 1;
                    z |= 1
                }
                'Z' => z |= 1,
                _ => return Err(bad()),
            }
        }
        PauliString::new(n, x, z, phase)
    }
}

/// A real linear combination of Hermitian Pauli strings with exact coefficients.
///
/// Keys are unsigned letter strings `(x_mask, z_mask)`; signs live in the
/// coefficient. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PauliSum {
    n: usize,
    terms: BTreeMap<(u64, u64), Dyadic>,
}

impl PauliSum {
    pub fn zero(n: usize) -> Self {
        PauliSum { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut s = PauliSum::zero(n);
        s.terms.insert((0, 0), Dyadic::ONE);
        s
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PauliString, Dyadic)>,
    {
        let mut s = PauliSum::zero(n);
        for (p, c) in terms {
            s.add_term(&p, c)?;
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · p`; the string's sign is folded into the coefficient.
    pub fn add_term(&mut self, p: &PauliString, c: Dyadic) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: p.n() });
        }
        let sign = p.sign().ok_or_else(|| Error::NotHermitian(p.to_string()))?;
        let c = if sign < 0 { -c } else { c };
        let key = (p.x_mask(), p.z_mask());
        let entry = self.terms.entry(key).or_insert(Dyadic::ZERO);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn coefficient(&self, p: &PauliString) -> Dyadic {
        let c = self.terms.get(&(p.x_mask(), p.z_mask())).copied().unwrap_or_default();
        match p.sign() {
            Some(-1) => -c,
            _ => c,
        }
    }

    /// Terms as `(unsigned string, coefficient)` in ascending `(x, z)` order.
    pub fn terms(&self) -> impl Iterator<Item = (PauliString, Dyadic)> + '_ {
        self.terms.iter().map(move |(&(x, z), &c)| (PauliString { n: self.n, x, z, phase: 0 }, c))
    }

    pub fn add(&self, other: &PauliSum) -> Result<PauliSum> {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(&p, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PauliSum) -> Result<PauliSum> {
        self.add(&other.scale(-Dyadic::ONE))
    }

    pub fn scale(&self, k: Dyadic) -> PauliSum {
        if k.is_zero() {
            return PauliSum::zero(self.n);
        }
        PauliSum { n: self.n, terms: self.terms.iter().map(|(&key, &c)| (key, c * k)).collect() }
    }

    /// `p · self`, which must stay Hermitian term by term.
    pub fn left_multiply(&self, p: &PauliString) -> Result<PauliSum> {
        let mut out = PauliSum::zero(self.n);
        for (q, c) in self.terms() {
            let prod = p.multiply(&q)?;
            out.add_term(&prod, c)?;
        }
        Ok(out)
    }

    /// True when every pair of stored terms commutes.
    pub fn terms_commute(&self) -> bool {
        let ts: Vec<PauliString> = self.terms().map(|(p, _)| p).collect();
        ts.iter().enumerate().all(|(i, a)| ts[i + 1..].iter().all(|b| a.commutes(b).unwrap_or(false)))
    }

    /// Embeds every term into a wider register; see [`PauliString::embed`].
    pub fn embed(&self, total: usize, offset: usize) -> Result<PauliSum> {
        let mut out = PauliSum::zero(total);
        for (p, c) in self.terms() {
            out.add_term(&p.embed(total, offset)?, c)?;
        }
        Ok(out)
    }

    /// Diagonal value `⟨b|self|b⟩` for a sum of Z-type strings.
    pub fn diagonal_value(&self, b: u64) -> Result<Dyadic> {
        let mut acc = Dyadic::ZERO;
        for (p, c) in self.terms() {
            let lam = p.eigenvalue_on_basis(b)?;
            acc += if lam < 0 { -c } else { c };
        }
        Ok(acc)
    }
}

/// CX count of the standard circuit: `Σ 2·(weight − 1)` over non-identity terms.
pub fn cost(h: &PauliSum) -> usize {
    h.terms().filter(|(p, _)| !p.is_identity()).map(|(p, _)| 2 * (p.weight() - 1)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn x_times_z_is_minus_i_y() {
        let p = ps("X").multiply(&ps("Z")).unwrap();
        assert_eq!(p.to_string(), "-iY");
        assert_eq!(ps("Z").multiply(&ps("X")).unwrap().to_string(), "iY");
    }

    #[test]
    fn disjoint_z_products_multiply_signs() {
        assert_eq!(ps("-IIIZI").multiply(&ps("IZIIZ")).unwrap(), ps("-IZIZZ"));
        assert_eq!(ps("IZIII").multiply(&ps("-IIZII")).unwrap(), ps("-IZZII"));
    }

    #[test]
    fn commutation_examples() {
        assert!(!ps("X").commutes(&ps("Z")).unwrap());
        assert!(ps("XX").commutes(&ps("ZZ")).unwrap());
        assert!(!ps("IXXX").commutes(&ps("IZII")).unwrap());
        assert!(ps("X").commutes(&ps("XX")).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(ps("IIIII").weight(), 0);
        assert_eq!(ps("XXXII").weight(), 3);
        let p = ps("XXXII").multiply(&ps("-ZZIIZ")).unwrap();
        assert_eq!(p, ps("YYXIZ"));
        assert_eq!(p.weight(), 4);
    }

    #[test]
    fn eigenvalues() {
        assert_eq!(ps("Z").eigenvalue_on_basis(1).unwrap(), -1);
        let (z, _) = bits::parse("10010").unwrap();
        assert_eq!(ps("-ZZIII").eigenvalue_on_basis(z).unwrap(), 1);
        assert!(ps("XZ").eigenvalue_on_basis(0).is_err());
    }

    #[test]
    fn x_type_application() {
        let (z, _) = bits::parse("1110").unwrap();
        assert_eq!(bits::render(ps("IXXX").apply_x_type(z).unwrap(), 4), "1001");
        let (z, _) = bits::parse("10010").unwrap();
        assert_eq!(bits::render(ps("XXIIX").apply_x_type(z).unwrap(), 5), "01011");
        assert!(ps("XZ").apply_x_type(0).is_err());
    }

    #[test]
    fn cost_examples() {
        let xs = PauliSum::from_terms(3, ["XII", "IXI", "IIX"].iter().map(|s| (ps(s), Dyadic::ONE))).unwrap();
        assert_eq!(cost(&xs), 0);
        let half = Dyadic::inv_pow2(1);
        let xy = PauliSum::from_terms(2, [(ps("XX"), half), (ps("YY"), half)]).unwrap();
        assert_eq!(cost(&xy), 4);
        let proj = PauliSum::from_terms(5, [(ps("-ZZIIZ"), Dyadic::ONE), (ps("-ZIZII"), Dyadic::ONE)]).unwrap();
        assert_eq!(cost(&proj.left_multiply(&ps("XXXII")).unwrap()), 10);
    }

    #[test]
    fn text_round_trip() {
        for s in ["-ZZIIZ", "XYZI", "iX", "-iYY", "I"] {
            assert_eq!(ps(s).to_string(), s);
        }
        assert_eq!(ps("+ZIZZZ").to_string(), "ZIZZZ");
        assert_eq!(ps("−ZZ"), ps("-ZZ"));
        assert!("XQ".parse::<PauliString>().is_err());
    }

    #[test]
    fn sum_drops_cancelled_terms() {
        let mut s = PauliSum::identity(2);
        s.add_term(&ps("-ZZ"), Dyadic::ONE).unwrap();
        s.add_term(&ps("ZZ"), Dyadic::ONE).unwrap();
        assert_eq!(s, PauliSum::identity(2));
        assert!(s.add_term(&ps("iZZ"), Dyadic::ONE).is_err());
    }
}
