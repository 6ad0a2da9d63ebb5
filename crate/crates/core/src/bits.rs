//! Bitstring conventions shared by every module.
//!
//! Qubit 1 is the leftmost character of a printed string and lives in the most
//! significant of the `n` low bits, so the integer value of a state equals its
//! printed binary reading.

use crate::error::{Error, Result};

pub const MAX_QUBITS: usize = 64;

pub fn check_qubits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::QubitCount(n));
    }
    Ok(())
}

/// Mask with the low `n` bits set.
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Bit for 1-based qubit `q` out of `n`.
pub fn qubit_bit(n: usize, q: usize) -> u64 {
    debug_assert!(q >= 1 && q <= n);
    1u64 << (n - q)
}

pub fn fits(n: usize, bits: u64) -> bool {
    bits & !full_mask(n) == 0
}

pub fn parity(bits: u64) -> bool {
    bits.count_ones() % 2 == 1
}

/// Renders `z` as an `n`-character 0/1 string.
pub fn render(z: u64, n: usize) -> String {
    (1..=n).map(|q| if z & qubit_bit(n, q) != 0 { '1' } else { '0' }).collect()
}

/// Parses a 0/1 string of any length up to 64.
pub fn parse(s: &str) -> Result<(u64, usize)> {
    let s = s.trim();
    let n = s.chars().count();
    check_qubits(n).map_err(|_| Error::Parse { what: "bitstring", detail: s.to_string() })?;
    let mut z = 0u64;
    for c in s.chars() {
        z <<= 1;
        match c {
            '0' => {}
            '1' => z |= 1,
            _ => return Err(Error::Parse { what: "bitstring", detail: s.to_string() }),
        }
    }
    Ok((z, n))
}

/// 1-based qubit indices present in `mask`, ascending.
pub fn support(mask: u64, n: usize) -> Vec<usize> {
    (1..=n).filter(|&q| mask & qubit_bit(n, q) != 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leftmost_character_is_qubit_one() {
        let (z, n) = parse("10010").unwrap();
        assert_eq!(n, 5);
        assert_eq!(z, 0b10010);
        assert_eq!(support(z, n), vec![1, 4]);
        assert_eq!(render(z, n), "10010");
        assert_eq!(qubit_bit(5, 1), 0b10000);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("10a1").is_err());
        assert!(parse("").is_err());
    }
}
