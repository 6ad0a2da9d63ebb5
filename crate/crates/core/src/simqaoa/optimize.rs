use std::cell::Cell;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::simqaoa::maxcut::{maxcut_phase, MaxcutInstance};
use crate::simqaoa::state::{evolve, StateVector};
use crate::subspace::FeasibleSet;
use crate::trotter::MixerPlan;

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct NelderMead {
    pub max_evals: usize,
    /// Stop once the simplex values span less than this.
    pub ftol: f64,
    pub initial_step: f64,
}

impl Default for NelderMead {
    fn default() -> Self {
        NelderMead { max_evals: 1500, ftol: 1e-9, initial_step: 0.4 }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
}

impl NelderMead {
    /// Minimizes `f` from `x0`. The result is never worse than `f(x0)`.
    pub fn minimize<F: FnMut(&[f64]) -> f64>(&self, mut f: F, x0: &[f64]) -> Minimum {
        let d = x0.len();
        let mut evals = 0;
        let mut eval = |x: &[f64], evals: &mut usize| {
            *evals += 1;
            f(x)
        };
        let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(d + 1);
        let v0 = eval(x0, &mut evals);
        simplex.push((x0.to_vec(), v0));
        for i in 0..d {
            let mut x = x0.to_vec();
            x[i] += self.initial_step;
            let v = eval(&x, &mut evals);
            simplex.push((x, v));
        }
        while evals < self.max_evals && d > 0 {
            simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
            if simplex[d].1 - simplex[0].1 < self.ftol {
                break;
            }
            let centroid: Vec<f64> =
                (0..d).map(|j| simplex[..d].iter().map(|p| p.0[j]).sum::<f64>() / d as f64).collect();
            let along =
                |t: f64| -> Vec<f64> { centroid.iter().zip(&simplex[d].0).map(|(c, w)| c + t * (w - c)).collect() };
            let xr = along(-1.0);
            let fr = eval(&xr, &mut evals);
            if fr < simplex[0].1 {
                let xe = along(-2.0);
                let fe = eval(&xe, &mut evals);
                simplex[d] = if fe < fr { (xe, fe) } else { (xr, fr) };
            } else if fr < simplex[d - 1].1 {
                simplex[d] = (xr, fr);
            } else {
                let (xc, fc) = if fr < simplex[d].1 {
                    let x = along(-0.5);
                    let v = eval(&x, &mut evals);
                    (x, v)
                } else {
                    let x = along(0.5);
                    let v = eval(&x, &mut evals);
                    (x, v)
                };
                if fc < simplex[d].1.min(fr) {
                    simplex[d] = (xc, fc);
                } else {
                    let best = simplex[0].0.clone();
                    for p in simplex.iter_mut().skip(1) {
                        p.0 = best.iter().zip(&p.0).map(|(b, x)| b + 0.5 * (x - b)).collect();
                        p.1 = eval(&p.0, &mut evals);
                    }
                }
            }
        }
        let best = simplex.into_iter().min_by(|a, b| a.1.total_cmp(&b.1)).expect("nonempty simplex");
        Minimum { x: best.0, value: best.1, evaluations: evals }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct QaoaSettings {
    pub optimizer: NelderMead,
    /// Random restarts in addition to the warm start.
    pub restarts: usize,
}

impl Default for QaoaSettings {
    fn default() -> Self {
        QaoaSettings { optimizer: NelderMead::default(), restarts: 5 }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct DepthResult {
    pub depth: usize,
    pub ratio: f64,
    pub expectation: f64,
    pub evaluations: usize,
    /// `[γ_1, β_1, γ_2, β_2, ...]`.
    pub params: Vec<f64>,
    /// Smallest feasible probability seen at any evaluation of this depth.
    pub min_feasible_probability: f64,
}

/// Alternating phase and mixer layers from the uniform feasible state.
#[derive(Clone, Debug)]
pub struct Qaoa<'a> {
    pub instance: &'a MaxcutInstance,
    pub plan: &'a MixerPlan,
    pub feasible: FeasibleSet,
    pub optimum: f64,
}

impl<'a> Qaoa<'a> {
    pub fn new(instance: &'a MaxcutInstance, plan: &'a MixerPlan) -> Result<Self> {
        if plan.n != instance.vertices() {
            return Err(Error::Layout(format!(
                "plan on {} qubits, instance on {} vertices",
                plan.n,
                instance.vertices()
            )));
        }
        let feasible = instance.feasible_set()?;
        let optimum = instance.optimum(&feasible);
        if optimum <= 0.0 {
            return Err(Error::Layout("instance has no positive cut".into()));
        }
        Ok(Qaoa { instance, plan, feasible, optimum })
    }

    pub fn state(&self, params: &[f64]) -> Result<StateVector> {
        let mut psi = StateVector::uniform_over(&self.feasible)?;
        for layer in params.chunks(2) {
            psi = maxcut_phase(self.instance, layer[0], &psi)?;
            psi = evolve(self.plan, layer[1], &psi)?;
        }
        Ok(psi)
    }

    /// `(⟨f⟩, probability on the feasible states)`.
    pub fn expectation(&self, params: &[f64]) -> Result<(f64, f64)> {
        let psi = self.state(params)?;
        let e =
            psi.amplitudes().iter().enumerate().map(|(z, a)| a.norm_sqr() * self.instance.cut_value(z as u64)).sum();
        Ok((e, psi.probability_on(&self.feasible)))
    }

    /// Optimizes each depth in ascending order. Depth `p` starts from the best
    /// parameters of the previous depth padded with a zero layer, plus random
    /// restarts; depth 0 is the uniform state itself.
    pub fn run(&self, depths: &[usize], settings: &QaoaSettings, seed: u64) -> Result<Vec<DepthResult>> {
        let mut depths = depths.to_vec();
        depths.sort_unstable();
        depths.dedup();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best: Vec<f64> = Vec::new();
        let mut out = Vec::new();
        for &p in &depths {
            let min_prob = Cell::new(f64::INFINITY);
            let failure = Cell::new(None);
            let objective = |x: &[f64]| match self.expectation(x) {
                Ok((e, prob)) => {
                    min_prob.set(min_prob.get().min(prob));
                    -e
                }
                Err(err) => {
                    failure.set(Some(err));
                    f64::INFINITY
                }
            };
            let mut warm = best.clone();
            warm.resize(2 * p, 0.0);
            let mut result = if p == 0 {
                Minimum { value: objective(&warm), x: warm, evaluations: 1 }
            } else {
                settings.optimizer.minimize(objective, &warm)
            };
            if p > 0 {
                for _ in 0..settings.restarts {
                    let x0: Vec<f64> = (0..2 * p).map(|_| rng.gen_range(0.0..std::f64::consts::PI)).collect();
                    let r = settings.optimizer.minimize(objective, &x0);
                    let evaluations = result.evaluations + r.evaluations;
                    if r.value < result.value {
                        result = r;
                    }
                    result.evaluations = evaluations;
                }
            }
            if let Some(err) = failure.take() {
                return Err(err);
            }
            best = result.x.clone();
            out.push(DepthResult {
                depth: p,
                ratio: -result.value / self.optimum,
                expectation: -result.value,
                evaluations: result.evaluations,
                params: result.x,
                min_feasible_probability: min_prob.get(),
            });
        }
        Ok(out)
    }
}
