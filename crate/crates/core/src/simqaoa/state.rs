use num_complex::Complex64;

use crate::bits::qubit_bit;
use crate::circuit::{Gate, GateList};
use crate::error::{Error, Result};
use crate::pauli::PauliString;
use crate::subspace::FeasibleSet;
use crate::trotter::MixerPlan;

/// Largest register the dense simulator accepts.
pub const MAX_SIM_QUBITS: usize = 14;

/// Dense amplitudes indexed by the integer value of the basis state.
#[derive(Clone, PartialEq, Debug)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

pub fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_SIM_QUBITS {
        return Err(Error::SimulationTooLarge { requested: n, max: MAX_SIM_QUBITS });
    }
    Ok(())
}

impl StateVector {
    pub fn basis(n: usize, z: u64) -> Result<Self> {
        check_size(n)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        let slot = amps.get_mut(z as usize).ok_or(Error::StrayBits { n })?;
        *slot = Complex64::new(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    /// Normalizes `amps`; its length must be `2^n`.
    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        check_size(n)?;
        if amps.len() != 1 << n {
            return Err(Error::DimensionMismatch { left: amps.len(), right: 1 << n });
        }
        let mut s = StateVector { n, amps };
        let norm = s.norm();
        if norm == 0.0 {
            return Err(Error::InvalidPlan("zero state vector".into()));
        }
        s.amps.iter_mut().for_each(|a| *a /= norm);
        Ok(s)
    }

    /// Equal superposition over the feasible states.
    pub fn uniform_over(b: &FeasibleSet) -> Result<Self> {
        check_size(b.n())?;
        let a = Complex64::new(1.0 / (b.len() as f64).sqrt(), 0.0);
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << b.n()];
        for &z in b.states() {
            amps[z as usize] = a;
        }
        Ok(StateVector { n: b.n(), amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amp(&self, z: u64) -> Complex64 {
        self.amps[z as usize]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Probability mass on the feasible states.
    pub fn probability_on(&self, b: &FeasibleSet) -> f64 {
        b.states().iter().map(|&z| self.amps[z as usize].norm_sqr()).sum()
    }

    /// Norm of the component outside the feasible span.
    pub fn leakage(&self, b: &FeasibleSet) -> f64 {
        let outside: f64 =
            self.amps.iter().enumerate().filter(|(z, _)| !b.contains(*z as u64)).map(|(_, a)| a.norm_sqr()).sum();
        outside.sqrt()
    }

    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn apply_pauli(&self, p: &PauliString) -> Result<StateVector> {
        self.same_n(p.n())?;
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (z, &a) in self.amps.iter().enumerate() {
            let (k, image) = p.act_on_basis(z as u64);
            out[image as usize] = a * I_POW[k as usize];
        }
        Ok(StateVector { n: self.n, amps: out })
    }

    /// `exp(-iθP)` for a Hermitian string, via `cos θ − i sin θ P`.
    pub fn apply_pauli_exp(&mut self, p: &PauliString, theta: f64) -> Result<()> {
        if !p.is_hermitian() {
            return Err(Error::NotHermitian(p.to_string()));
        }
        let pp = self.apply_pauli(p)?;
        let (c, s) = (theta.cos(), theta.sin());
        let minus_i_s = Complex64::new(0.0, -s);
        for (a, b) in self.amps.iter_mut().zip(&pp.amps) {
            *a = *a * c + b * minus_i_s;
        }
        Ok(())
    }

    /// Multiplies each amplitude by `exp(-iγ f(z))`.
    pub fn apply_diagonal_phase<F: Fn(u64) -> f64>(&mut self, gamma: f64, f: F) {
        for (z, a) in self.amps.iter_mut().enumerate() {
            *a *= Complex64::from_polar(1.0, -gamma * f(z as u64));
        }
    }

    pub fn apply_gate(&mut self, g: &Gate) -> Result<()> {
        let n = self.n;
        let bit = |q: usize| -> Result<usize> {
            if q == 0 || q > n {
                return Err(Error::Layout(format!("gate on qubit {q} of {n}")));
            }
            Ok(qubit_bit(n, q) as usize)
        };
        match *g {
            Gate::H(q) => {
                let m = bit(q)?;
                let r = std::f64::consts::FRAC_1_SQRT_2;
                for z in (0..self.amps.len()).filter(|z| z & m == 0) {
                    let (a, b) = (self.amps[z], self.amps[z | m]);
                    self.amps[z] = (a + b) * r;
                    self.amps[z | m] = (a - b) * r;
                }
            }
            Gate::S(q) | Gate::Sdg(q) => {
                let m = bit(q)?;
                let ph = if matches!(g, Gate::S(_)) { Complex64::i() } else { -Complex64::i() };
                for (z, a) in self.amps.iter_mut().enumerate() {
                    if z & m != 0 {
                        *a *= ph;
                    }
                }
            }
            Gate::Cx(c, t) => {
                let (mc, mt) = (bit(c)?, bit(t)?);
                if mc == mt {
                    return Err(Error::Layout(format!("cx with control equal to target q{c}")));
                }
                for z in (0..self.amps.len()).filter(|z| z & mc != 0 && z & mt == 0) {
                    self.amps.swap(z, z | mt);
                }
            }
            Gate::Rz(theta, q) => {
                let m = bit(q)?;
                let (lo, hi) = (Complex64::from_polar(1.0, -theta / 2.0), Complex64::from_polar(1.0, theta / 2.0));
                for (z, a) in self.amps.iter_mut().enumerate() {
                    *a *= if z & m == 0 { lo } else { hi };
                }
            }
        }
        Ok(())
    }

    pub fn apply_circuit(&mut self, c: &GateList) -> Result<()> {
        self.same_n(c.n)?;
        c.gates.iter().try_for_each(|g| self.apply_gate(g))
    }

    fn same_n(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::DimensionMismatch { left: n, right: self.n });
        }
        Ok(())
    }
}

const I_POW: [Complex64; 4] =
    [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(-1.0, 0.0), Complex64::new(0.0, -1.0)];

fn check_plan(plan: &MixerPlan, psi: &StateVector) -> Result<()> {
    check_size(plan.n)?;
    psi.same_n(plan.n)
}

/// `Π_c exp(-iβ H_c) ψ`, candidates in plan order.
///
/// Terms of one candidate commute, so each candidate factorizes exactly into
/// single-string exponentials.
pub fn evolve(plan: &MixerPlan, beta: f64, psi: &StateVector) -> Result<StateVector> {
    check_plan(plan, psi)?;
    let mut out = psi.clone();
    for c in &plan.candidates {
        for (p, w) in c.term.terms() {
            out.apply_pauli_exp(&p, beta * w.to_f64())?;
        }
    }
    Ok(out)
}

/// Same evolution applied gate by gate from [`crate::circuit::plan_circuit`].
///
/// Identity terms only add a global phase and are dropped by the circuit.
pub fn evolve_via_circuit(plan: &MixerPlan, beta: f64, psi: &StateVector) -> Result<StateVector> {
    check_plan(plan, psi)?;
    let mut out = psi.clone();
    out.apply_circuit(&crate::circuit::plan_circuit(plan, beta)?)?;
    Ok(out)
}
