//! Gate-level circuits for exponentials of Pauli strings.

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};
use crate::pauli::PauliString;
use crate::trotter::MixerPlan;

/// Single gates; qubits are 1-based.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Gate {
    H(usize),
    S(usize),
    Sdg(usize),
    Cx(usize, usize),
    /// `RZ(θ) = diag(e^{-iθ/2}, e^{iθ/2})`.
    Rz(f64, usize),
}

#[derive(Clone, PartialEq, Debug)]
pub struct GateList {
    pub n: usize,
    pub gates: Vec<Gate>,
}

impl GateList {
    pub fn new(n: usize) -> Self {
        GateList { n, gates: Vec::new() }
    }

    pub fn extend(&mut self, other: GateList) {
        self.gates.extend(other.gates);
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// `%.15g`-style float rendering used by every text output.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&exp) {
        let s = format!("{:.14e}", x);
        let (mant, e) = s.split_once('e').expect("exponent");
        let mant = trim_zeros(mant);
        let e: i32 = e.parse().expect("exponent digits");
        return format!("{mant}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs());
    }
    let decimals = (14 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

impl fmt::Display for GateList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits {}", self.n)?;
        for g in &self.gates {
            match *g {
                Gate::H(q) => writeln!(f, "h q{q}")?,
                Gate::S(q) => writeln!(f, "s q{q}")?,
                Gate::Sdg(q) => writeln!(f, "sdg q{q}")?,
                Gate::Cx(c, t) => writeln!(f, "cx q{c} q{t}")?,
                Gate::Rz(a, q) => writeln!(f, "rz {} q{q}", format_float(a))?,
            }
        }
        Ok(())
    }
}

/// Gates for `exp(-i t w P)`: basis change, CX ladder onto the last support
/// qubit, `RZ(2 t w)` there, then the mirror image.
pub fn term_circuit(p: &PauliString, w: f64, t: f64) -> Result<GateList> {
    if !p.is_hermitian() {
        return Err(Error::NotHermitian(p.to_string()));
    }
    let n = p.n();
    let support = bits::support(p.x_mask() | p.z_mask(), n);
    if support.is_empty() {
        return Err(Error::InvalidPlan(format!("identity term {p} only contributes a global phase")));
    }
    let sign = if p.sign() == Some(-1) { -1.0 } else { 1.0 };
    let mut pre = Vec::new();
    let mut post = Vec::new();
    for &q in &support {
        match p.letter(q) {
            'X' => {
                pre.push(Gate::H(q));
                post.push(Gate::H(q));
            }
            'Y' => {
                pre.extend([Gate::Sdg(q), Gate::H(q)]);
                post.extend([Gate::H(q), Gate::S(q)]);
            }
            _ => {}
        }
    }
    let ladder: Vec<Gate> = support.windows(2).map(|w| Gate::Cx(w[0], w[1])).collect();
    let last = *support.last().expect("nonempty support");
    let mut gates = pre;
    gates.extend(ladder.iter().copied());
    gates.push(Gate::Rz(2.0 * t * w * sign, last));
    gates.extend(ladder.iter().rev().copied());
    // Basis gates on distinct qubits commute, so the restore order is free.
    gates.extend(post);
    Ok(GateList { n, gates })
}

/// Concatenated term circuits of every candidate at angle `beta`; identity terms are skipped.
pub fn plan_circuit(plan: &MixerPlan, beta: f64) -> Result<GateList> {
    let mut out = GateList::new(plan.n);
    for c in &plan.candidates {
        for (p, w) in c.term.terms() {
            if p.is_identity() {
                continue;
            }
            out.extend(term_circuit(&p, w.to_f64(), beta)?);
        }
    }
    Ok(out)
}

pub fn cx_count(g: &GateList) -> usize {
    g.gates.iter().filter(|g| matches!(g, Gate::Cx(..))).count()
}

/// Parses the text format written by `Display`.
pub fn parse_text(text: &str) -> Result<GateList> {
    let bad = |l: &str| Error::Parse { what: "circuit line", detail: l.to_string() };
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad(""))?;
    let n: usize = header.strip_prefix("qubits ").and_then(|s| s.trim().parse().ok()).ok_or_else(|| bad(header))?;
    let qubit = |s: &str, l: &str| -> Result<usize> {
        let q: usize = s.strip_prefix('q').and_then(|v| v.parse().ok()).ok_or_else(|| bad(l))?;
        if q == 0 || q > n {
            return Err(bad(l));
        }
        Ok(q)
    };
    let mut gates = Vec::new();
    for l in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let g = match parts.as_slice() {
            ["h", q] => Gate::H(qubit(q, l)?),
            ["s", q] => Gate::S(qubit(q, l)?),
            ["sdg", q] => Gate::Sdg(qubit(q, l)?),
            ["cx", c, t] => Gate::Cx(qubit(c, l)?, qubit(t, l)?),
            ["rz", a, q] => Gate::Rz(a.parse().map_err(|_| bad(l))?, qubit(q, l)?),
            _ => return Err(bad(l)),
        };
        gates.push(g);
    }
    Ok(GateList { n, gates })
}
