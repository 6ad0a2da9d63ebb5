//! Small dense complex matrices, used as an independent check on the
//! bit-level simulator.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{PauliString, PauliSum};
use crate::simqaoa::state::{check_size, StateVector};
use crate::trotter::MixerPlan;

#[derive(Clone, PartialEq, Debug)]
pub struct DenseMatrix {
    pub dim: usize,
    /// Row-major entries.
    pub data: Vec<Complex64>,
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        (0..dim).for_each(|i| m.data[i * dim + i] = ONE);
        m
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.dim + c] = v;
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        DenseMatrix { dim: self.dim, data }
    }

    pub fn scale(&self, k: Complex64) -> DenseMatrix {
        DenseMatrix { dim: self.dim, data: self.data.iter().map(|a| a * k).collect() }
    }

    pub fn kron(&self, other: &DenseMatrix) -> DenseMatrix {
        let (a, b) = (self.dim, other.dim);
        let mut out = Self::zeros(a * b);
        for i in 0..a {
            for j in 0..a {
                let s = self.get(i, j);
                for k in 0..b {
                    for l in 0..b {
                        out.set(i * b + k, j * b + l, s * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> DenseMatrix {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j).norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        let amps = psi.amplitudes();
        if amps.len() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: amps.len() });
        }
        let out = (0..self.dim).map(|i| (0..self.dim).map(|j| self.data[i * self.dim + j] * amps[j]).sum()).collect();
        StateVector::from_amplitudes(psi.n(), out)
    }

    /// `exp(self)` by scaling and squaring over a truncated Taylor series.
    pub fn expm(&self) -> DenseMatrix {
        let norm = self.norm_inf();
        let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
        let a = self.scale(Complex64::new(0.5f64.powi(squarings as i32), 0.0));
        let mut sum = Self::identity(self.dim);
        let mut term = Self::identity(self.dim);
        for k in 1..=20 {
            term = term.mul(&a).scale(Complex64::new(1.0 / k as f64, 0.0));
            sum = sum.add(&term);
        }
        for _ in 0..squarings {
            sum = sum.mul(&sum);
        }
        sum
    }
}

/// Matrix of a Pauli string built from its bit masks.
pub fn pauli_matrix(p: &PauliString) -> DenseMatrix {
    let dim = 1usize << p.n();
    let mut m = DenseMatrix::zeros(dim);
    for col in 0..dim {
        let (k, row) = p.act_on_basis(col as u64);
        m.set(row as usize, col, Complex64::i().powu(k as u32));
    }
    m
}

/// Matrix of a Pauli string as a Kronecker product of its printed letters.
pub fn pauli_matrix_kron(p: &PauliString) -> DenseMatrix {
    let i = Complex64::i();
    let letter = |c: char| -> DenseMatrix {
        let d = match c {
            'I' => [ONE, ZERO, ZERO, ONE],
            'X' => [ZERO, ONE, ONE, ZERO],
            'Y' => [ZERO, -i, i, ZERO],
            _ => [ONE, ZERO, ZERO, -ONE],
        };
        DenseMatrix { dim: 2, data: d.to_vec() }
    };
    let mut m = DenseMatrix::identity(1);
    for q in 1..=p.n() {
        m = m.kron(&letter(p.letter(q)));
    }
    let phase = i.powu(p.phase_exp() as u32);
    m.scale(phase)
}

pub fn sum_matrix(h: &PauliSum) -> Result<DenseMatrix> {
    check_size(h.n())?;
    let mut m = DenseMatrix::zeros(1 << h.n());
    for (p, w) in h.terms() {
        m = m.add(&pauli_matrix(&p).scale(Complex64::new(w.to_f64(), 0.0)));
    }
    Ok(m)
}

/// `exp(-iβH)` for one Hermitian sum.
pub fn exp_minus_i(h: &PauliSum, beta: f64) -> Result<DenseMatrix> {
    Ok(sum_matrix(h)?.scale(Complex64::new(0.0, -beta)).expm())
}

/// Evolution by dense exponentials, one candidate at a time.
pub fn evolve_dense(plan: &MixerPlan, beta: f64, psi: &StateVector) -> Result<StateVector> {
    if psi.n() != plan.n {
        return Err(Error::DimensionMismatch { left: plan.n, right: psi.n() });
    }
    let mut out = psi.clone();
    for c in &plan.candidates {
        out = exp_minus_i(&c.term, beta)?.apply(&out)?;
    }
    Ok(out)
}
