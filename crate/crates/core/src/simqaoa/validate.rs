//! Numerical certificates that a plan keeps the state inside the feasible span
//! and mixes every feasible state with every other.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dyadic::Dyadic;
use crate::error::Result;
use crate::pauli::PauliSum;
use crate::simqaoa::state::{check_size, evolve, StateVector};
use crate::subspace::FeasibleSet;
use crate::trotter::{is_connected, MixerCandidate, MixerPlan};

/// Amplitudes below this count as "not reached".
pub const REACH_THRESHOLD: f64 = 1e-8;

/// Random normalized superposition supported on `b`.
pub fn random_feasible_state<R: Rng>(b: &FeasibleSet, rng: &mut R) -> Result<StateVector> {
    check_size(b.n())?;
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << b.n()];
    for &z in b.states() {
        amps[z as usize] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    StateVector::from_amplitudes(b.n(), amps)
}

/// Largest norm outside `span(b)` after one mixer layer, over random angles and starts.
pub fn check_preserves(plan: &MixerPlan, b: &FeasibleSet, trials: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let beta = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        let psi = random_feasible_state(b, &mut rng)?;
        worst = worst.max(evolve(plan, beta, &psi)?.leakage(b));
    }
    Ok(worst)
}

/// Whether the union graph is connected and, for one random angle, some power
/// `U^r` with `r ≤ |B|` carries every feasible state to every other.
pub fn check_transitions(plan: &MixerPlan, b: &FeasibleSet, seed: u64) -> Result<bool> {
    check_size(b.n())?;
    if !is_connected(b, plan.candidates.iter().map(|c| c.edges.as_slice())) {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let beta = rng.gen_range(0.1..std::f64::consts::PI - 0.1);
    for &y in b.states() {
        let mut psi = StateVector::basis(b.n(), y)?;
        let mut reached = vec![false; b.len()];
        reached[b.index_of(y).expect("feasible start")] = true;
        for _ in 0..b.len() {
            if reached.iter().all(|&r| r) {
                break;
            }
            psi = evolve(plan, beta, &psi)?;
            for (i, &x) in b.states().iter().enumerate() {
                reached[i] |= psi.amp(x).norm() > REACH_THRESHOLD;
            }
        }
        if !reached.iter().all(|&r| r) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fault injection for negative controls: flips the sign of the first
/// projector term of the first candidate whose lX can leave `b`.
///
/// `None` when no candidate qualifies (e.g. every state is feasible).
pub fn corrupt_plan(plan: &MixerPlan, b: &FeasibleSet) -> Option<MixerPlan> {
    let pos = plan.candidates.iter().position(|c| b.states().iter().any(|&z| !b.contains(z ^ c.lx)))?;
    let c = &plan.candidates[pos];
    let mut projector = PauliSum::zero(c.projector.n());
    for (i, (p, w)) in c.projector.terms().enumerate() {
        let w = if i == 0 { -w } else { w };
        projector.add_term(&p, w).ok()?;
    }
    let bad = MixerCandidate::new(c.lx, projector, c.method, c.edges.clone()).ok()?;
    let mut out = plan.clone();
    out.candidates[pos] = bad;
    out.total_cost = out.candidates.iter().map(|c| c.cost).sum();
    Some(out)
}

/// Entries `⟨x|H|y⟩` of a Pauli sum for `x, y ∈ b`, in the order of `b`.
pub fn feasible_block(h: &PauliSum, b: &FeasibleSet) -> Vec<Vec<Complex64>> {
    let mut m = vec![vec![Complex64::new(0.0, 0.0); b.len()]; b.len()];
    for (p, w) in h.terms() {
        for (col, &y) in b.states().iter().enumerate() {
            let (k, x) = p.act_on_basis(y);
            if let Some(row) = b.index_of(x) {
                m[row][col] += Complex64::i().powu(k as u32) * w.to_f64();
            }
        }
    }
    m
}

/// Exact `⟨x|H|y⟩` for real-valued entries; `None` if some entry is imaginary.
pub fn feasible_block_exact(h: &PauliSum, b: &FeasibleSet) -> Option<Vec<Vec<Dyadic>>> {
    let mut re = vec![vec![Dyadic::from_int(0); b.len()]; b.len()];
    let mut im = re.clone();
    for (p, w) in h.terms() {
        for (col, &y) in b.states().iter().enumerate() {
            let (k, x) = p.act_on_basis(y);
            if let Some(row) = b.index_of(x) {
                match k {
                    0 => re[row][col] += w,
                    1 => im[row][col] += w,
                    2 => re[row][col] += -w,
                    _ => im[row][col] += -w,
                }
            }
        }
    }
    im.iter().flatten().all(|v| v.is_zero()).then_some(re)
}
