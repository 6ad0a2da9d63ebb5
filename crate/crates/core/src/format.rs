//! JSON serialization of mixer plans.
//!
//! Coefficients are written as exact `num/2^m` strings and Pauli strings in
//! their printed form, so a plan round-trips without loss. Derived fields
//! (mixer term, per-candidate cost) are recomputed on load and checked
//! against the recorded values.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::pauli::{PauliString, PauliSum};
use crate::restrict::Method;
use crate::subspace::edge;
use crate::trotter::{MixerCandidate, MixerPlan};

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct PlanFile {
    pub n: usize,
    pub seed: Option<u64>,
    pub total_cost: usize,
    pub candidates: Vec<CandidateRecord>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct CandidateRecord {
    pub lx: String,
    pub projector: Vec<TermRecord>,
    pub edges: Vec<[String; 2]>,
    pub cost: usize,
    pub method: String,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct TermRecord {
    pub coefficient: String,
    pub pauli: String,
}

impl PlanFile {
    pub fn from_plan(plan: &MixerPlan, seed: Option<u64>) -> Self {
        let n = plan.n;
        let candidates = plan
            .candidates
            .iter()
            .map(|c| CandidateRecord {
                lx: c.lx_string().to_string(),
                projector: c
                    .projector
                    .terms()
                    .map(|(p, w)| TermRecord { coefficient: w.to_string(), pauli: p.to_string() })
                    .collect(),
                edges: c.edges.iter().map(|&(x, y)| [bits::render(x, n), bits::render(y, n)]).collect(),
                cost: c.cost,
                method: c.method.as_str().to_string(),
            })
            .collect();
        PlanFile { n, seed, total_cost: plan.total_cost, candidates }
    }

    pub fn to_plan(&self) -> Result<MixerPlan> {
        let n = self.n;
        bits::check_qubits(n)?;
        let invalid = |msg: String| Error::InvalidPlan(msg);
        let mut out = Vec::with_capacity(self.candidates.len());
        for rec in &self.candidates {
            let lx: PauliString = rec.lx.parse()?;
            if lx.n() != n || !lx.is_x_type() || lx.is_identity() {
                return Err(invalid(format!("lx {} is not a nontrivial X string on {n} qubits", rec.lx)));
            }
            let mut projector = PauliSum::zero(n);
            for t in &rec.projector {
                let p: PauliString = t.pauli.parse()?;
                let w: Dyadic = t.coefficient.parse()?;
                projector.add_term(&p, w)?;
            }
            let edges = rec
                .edges
                .iter()
                .map(|[a, b]| {
                    let (x, nx) = bits::parse(a)?;
                    let (y, ny) = bits::parse(b)?;
                    if nx != n || ny != n || x ^ y != lx.x_mask() {
                        return Err(invalid(format!("edge {a}-{b} does not match lx {}", rec.lx)));
                    }
                    Ok(edge(x, y))
                })
                .collect::<Result<Vec<_>>>()?;
            let method = Method::parse(&rec.method).ok_or_else(|| invalid(format!("unknown method {}", rec.method)))?;
            let c = MixerCandidate::new(lx.x_mask(), projector, method, edges)?;
            if c.cost != rec.cost {
                return Err(invalid(format!("recorded cost {} but the term costs {}", rec.cost, c.cost)));
            }
            out.push(c);
        }
        let plan = MixerPlan::new(n, out);
        if plan.total_cost != self.total_cost {
            return Err(invalid(format!(
                "recorded total_cost {} but candidates sum to {}",
                self.total_cost, plan.total_cost
            )));
        }
        Ok(plan)
    }
}

pub fn plan_to_json(plan: &MixerPlan, seed: Option<u64>) -> String {
    let mut s = serde_json::to_string_pretty(&PlanFile::from_plan(plan, seed)).expect("plan serializes");
    s.push('\n');
    s
}

/// Plan and recorded seed.
pub fn plan_from_json(text: &str) -> Result<(MixerPlan, Option<u64>)> {
    let file: PlanFile =
        serde_json::from_str(text).map_err(|e| Error::Parse { what: "plan JSON", detail: e.to_string() })?;
    Ok((file.to_plan()?, file.seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subspace::FeasibleSet;
    use crate::trotter::synthesize;

    #[test]
    fn round_trip() {
        let b = FeasibleSet::from_strings(&["1010", "0111", "1110", "1001", "0010", "0000", "1101"]).unwrap();
        let plan = synthesize(&b, Default::default()).unwrap();
        let text = plan_to_json(&plan, Some(9));
        let (back, seed) = plan_from_json(&text).unwrap();
        assert_eq!(back, plan);
        assert_eq!(seed, Some(9));
        assert_eq!(plan_to_json(&back, Some(9)), text);
    }

    #[test]
    fn rejects_tampered_cost() {
        let b = FeasibleSet::from_strings(&["01", "10"]).unwrap();
        let plan = synthesize(&b, Default::default()).unwrap();
        let text = plan_to_json(&plan, None).replace("\"total_cost\": 2", "\"total_cost\": 3");
        assert!(matches!(plan_from_json(&text), Err(Error::InvalidPlan(_))));
        assert!(plan_from_json("{").is_err());
    }
}
