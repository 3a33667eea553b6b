//! Dense statevector engine: state initialization, gate application,
//! per-qubit measurement statistics, and shot sampling.
//!
//! Qubit 0 is the least-significant bit of the basis-state index. Gates are
//! applied in place via stride-pattern updates on the amplitude array; no
//! 2^n x 2^n matrices are ever materialized here. Global phase is not tracked:
//! everything consumed downstream is a |amplitude|^2 probability.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

/// Upper bound on register width; 2^12 amplitudes keep everything in-cache.
pub const MAX_QUBITS: usize = 12;

/// Where a rotation gate finds its angle: baked in, or bound to a parameter slot.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AngleSource {
    Fixed(f64),
    Slot(usize),
}

impl AngleSource {
    fn resolve(self, params: &[f64]) -> Result<f64> {
        match self {
            AngleSource::Fixed(a) => Ok(a),
            AngleSource::Slot(s) => params.get(s).copied().ok_or(Error::ParameterBinding {
                slot: s,
                provided: params.len(),
            }),
        }
    }
}

/// One gate from the supported set. Two-qubit kinds carry distinct
/// control/target indices; CNOT is the only kind without an angle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateOp {
    Rx { qubit: usize, angle: AngleSource },
    Ry { qubit: usize, angle: AngleSource },
    Rz { qubit: usize, angle: AngleSource },
    Cnot { control: usize, target: usize },
    CRx { control: usize, target: usize, angle: AngleSource },
    CRz { control: usize, target: usize, angle: AngleSource },
}

impl GateOp {
    pub fn rx(qubit: usize, angle: AngleSource) -> Self {
        GateOp::Rx { qubit, angle }
    }

    pub fn ry(qubit: usize, angle: AngleSource) -> Self {
        GateOp::Ry { qubit, angle }
    }

    pub fn rz(qubit: usize, angle: AngleSource) -> Self {
        GateOp::Rz { qubit, angle }
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        GateOp::Cnot { control, target }
    }

    pub fn crx(control: usize, target: usize, angle: AngleSource) -> Self {
        GateOp::CRx { control, target, angle }
    }

    pub fn crz(control: usize, target: usize, angle: AngleSource) -> Self {
        GateOp::CRz { control, target, angle }
    }

    /// Parameter slot this gate reads, if any.
    pub fn slot(&self) -> Option<usize> {
        match self.angle() {
            Some(AngleSource::Slot(s)) => Some(s),
            _ => None,
        }
    }

    pub fn angle(&self) -> Option<AngleSource> {
        match *self {
            GateOp::Rx { angle, .. } | GateOp::Ry { angle, .. } | GateOp::Rz { angle, .. } => {
                Some(angle)
            }
            GateOp::CRx { angle, .. } | GateOp::CRz { angle, .. } => Some(angle),
            GateOp::Cnot { .. } => None,
        }
    }

    /// True for controlled rotations, whose gradient needs the four-term
    /// shift rule rather than the plain two-term one.
    pub fn is_controlled_rotation(&self) -> bool {
        matches!(self, GateOp::CRx { .. } | GateOp::CRz { .. })
    }

    /// Same gate with the resolved angle offset by `delta` (no-op for CNOT).
    pub(crate) fn with_angle_offset(self, params: &[f64], delta: f64) -> Result<Self> {
        let shifted = |angle: AngleSource| -> Result<AngleSource> {
            Ok(AngleSource::Fixed(angle.resolve(params)? + delta))
        };
        Ok(match self {
            GateOp::Rx { qubit, angle } => GateOp::Rx { qubit, angle: shifted(angle)? },
            GateOp::Ry { qubit, angle } => GateOp::Ry { qubit, angle: shifted(angle)? },
            GateOp::Rz { qubit, angle } => GateOp::Rz { qubit, angle: shifted(angle)? },
            GateOp::CRx { control, target, angle } => {
                GateOp::CRx { control, target, angle: shifted(angle)? }
            }
            GateOp::CRz { control, target, angle } => {
                GateOp::CRz { control, target, angle: shifted(angle)? }
            }
            op @ GateOp::Cnot { .. } => op,
        })
    }

    fn validate(&self, n_qubits: usize) -> Result<()> {
        let check = |q: usize| -> Result<()> {
            if q < n_qubits {
                Ok(())
            } else {
                Err(Error::QubitIndex { qubit: q, n_qubits })
            }
        };
        match *self {
            GateOp::Rx { qubit, .. } | GateOp::Ry { qubit, .. } | GateOp::Rz { qubit, .. } => {
                check(qubit)
            }
            GateOp::Cnot { control, target }
            | GateOp::CRx { control, target, .. }
            | GateOp::CRz { control, target, .. } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(Error::DuplicateQubit { qubit: control });
                }
                Ok(())
            }
        }
    }
}

fn rotation_matrix_x(theta: f64) -> [Complex64; 4] {
    let (s, c) = (theta / 2.0).sin_cos();
    let mis = Complex64::new(0.0, -s);
    [c.into(), mis, mis, c.into()]
}

fn rotation_matrix_y(theta: f64) -> [Complex64; 4] {
    let (s, c) = (theta / 2.0).sin_cos();
    [c.into(), (-s).into(), s.into(), c.into()]
}

fn rotation_matrix_z(theta: f64) -> [Complex64; 4] {
    let half = theta / 2.0;
    [
        Complex64::from_polar(1.0, -half),
        Complex64::ZERO,
        Complex64::ZERO,
        Complex64::from_polar(1.0, half),
    ]
}

/// Pure n-qubit state: 2^n complex amplitudes with unit norm.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |0...0>: amplitude 1 on basis index 0.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::QubitCount { n: n_qubits, max: MAX_QUBITS });
        }
        let mut amps = vec![Complex64::ZERO; 1 << n_qubits];
        amps[0] = Complex64::ONE;
        Ok(StateVector { n_qubits, amps })
    }

    /// Wrap an explicit amplitude vector; must have length 2^n and unit norm.
    pub fn from_amplitudes(n_qubits: usize, amps: Vec<Complex64>) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::QubitCount { n: n_qubits, max: MAX_QUBITS });
        }
        if amps.len() != 1 << n_qubits {
            return Err(Error::shape(format!(
                "amplitude vector has length {}, expected {}",
                amps.len(),
                1usize << n_qubits
            )));
        }
        let state = StateVector { n_qubits, amps };
        let norm = state.norm_sqr();
        if (norm - 1.0).abs() > 1e-8 {
            return Err(Error::Domain(format!("state norm^2 is {norm}, expected 1")));
        }
        Ok(state)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Apply one gate in place, resolving slot angles from `params`.
    pub fn apply(&mut self, op: &GateOp, params: &[f64]) -> Result<()> {
        op.validate(self.n_qubits)?;
        match *op {
            GateOp::Rx { qubit, angle } => {
                self.apply_single(qubit, rotation_matrix_x(angle.resolve(params)?));
            }
            GateOp::Ry { qubit, angle } => {
                self.apply_single(qubit, rotation_matrix_y(angle.resolve(params)?));
            }
            GateOp::Rz { qubit, angle } => {
                self.apply_single(qubit, rotation_matrix_z(angle.resolve(params)?));
            }
            GateOp::Cnot { control, target } => self.apply_cnot(control, target),
            GateOp::CRx { control, target, angle } => {
                self.apply_controlled(control, target, rotation_matrix_x(angle.resolve(params)?));
            }
            GateOp::CRz { control, target, angle } => {
                self.apply_controlled(control, target, rotation_matrix_z(angle.resolve(params)?));
            }
        }
        Ok(())
    }

    fn apply_single(&mut self, qubit: usize, m: [Complex64; 4]) {
        let mask = 1usize << qubit;
        let block = mask << 1;
        let dim = self.amps.len();
        for base in (0..dim).step_by(block) {
            for i in base..base + mask {
                let j = i | mask;
                let a0 = self.amps[i];
                let a1 = self.amps[j];
                self.amps[i] = m[0] * a0 + m[1] * a1;
                self.amps[j] = m[2] * a0 + m[3] * a1;
            }
        }
    }

    fn apply_controlled(&mut self, control: usize, target: usize, m: [Complex64; 4]) {
        let cmask = 1usize << control;
        let tmask = 1usize << target;
        for i in 0..self.amps.len() {
            if i & cmask != 0 && i & tmask == 0 {
                let j = i | tmask;
                let a0 = self.amps[i];
                let a1 = self.amps[j];
                self.amps[i] = m[0] * a0 + m[1] * a1;
                self.amps[j] = m[2] * a0 + m[3] * a1;
            }
        }
    }

    fn apply_cnot(&mut self, control: usize, target: usize) {
        let cmask = 1usize << control;
        let tmask = 1usize << target;
        for i in 0..self.amps.len() {
            if i & cmask != 0 && i & tmask == 0 {
                self.amps.swap(i, i | tmask);
            }
        }
    }

    /// p(|0>) for every qubit: entry q sums |amplitude|^2 over basis states
    /// whose bit q is clear.
    pub fn zero_probabilities(&self) -> Vec<f64> {
        let mut probs = vec![0.0; self.n_qubits];
        for (i, a) in self.amps.iter().enumerate() {
            let p = a.norm_sqr();
            if p == 0.0 {
                continue;
            }
            for (q, entry) in probs.iter_mut().enumerate() {
                if i & (1 << q) == 0 {
                    *entry += p;
                }
            }
        }
        probs
    }

    pub fn zero_probability(&self, qubit: usize) -> Result<f64> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitIndex { qubit, n_qubits: self.n_qubits });
        }
        let mask = 1usize << qubit;
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & mask == 0)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Pauli-Z expectation on one qubit: p0 - p1 = 2*p0 - 1, in [-1, 1].
    pub fn expectation_z(&self, qubit: usize) -> Result<f64> {
        Ok(2.0 * self.zero_probability(qubit)? - 1.0)
    }

    /// Estimate p(|0>) per qubit from `shots` full-register samples.
    ///
    /// Samples whole bitstrings by inverse-CDF over the 2^n probability
    /// vector, then marginalizes per qubit, so inter-qubit correlations
    /// survive in the sample stream. Deterministic for a given generator.
    pub fn sample_zero_probabilities(&self, shots: usize, rng: &mut impl Rng) -> Result<Vec<f64>> {
        if shots == 0 {
            return Err(Error::InvalidShots);
        }
        let mut cdf = Vec::with_capacity(self.amps.len());
        let mut acc = 0.0;
        for a in &self.amps {
            acc += a.norm_sqr();
            cdf.push(acc);
        }
        let mut zero_counts = vec![0u64; self.n_qubits];
        for _ in 0..shots {
            let u: f64 = rng.random::<f64>() * acc;
            let idx = cdf.partition_point(|&c| c <= u).min(self.amps.len() - 1);
            for (q, count) in zero_counts.iter_mut().enumerate() {
                if idx & (1 << q) == 0 {
                    *count += 1;
                }
            }
        }
        Ok(zero_counts
            .iter()
            .map(|&c| c as f64 / shots as f64)
            .collect())
    }

    /// <self|other>.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::shape(format!(
                "inner product between {} and {} qubit states",
                self.n_qubits, other.n_qubits
            )));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }
}

/// Ordered gate list over a fixed register, with `n_slots` parameter slots.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    ops: Vec<GateOp>,
    n_slots: usize,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::QubitCount { n: n_qubits, max: MAX_QUBITS });
        }
        Ok(Circuit { n_qubits, ops: Vec::new(), n_slots: 0 })
    }

    /// Build from a complete op list, verifying indices and that slots
    /// 0..n_slots are each used at least once.
    pub fn with_ops(n_qubits: usize, ops: Vec<GateOp>) -> Result<Self> {
        let mut circuit = Circuit::new(n_qubits)?;
        for op in ops {
            circuit.push(op)?;
        }
        circuit.validate_slot_coverage()?;
        Ok(circuit)
    }

    pub fn push(&mut self, op: GateOp) -> Result<()> {
        op.validate(self.n_qubits)?;
        if let Some(s) = op.slot() {
            self.n_slots = self.n_slots.max(s + 1);
        }
        self.ops.push(op);
        Ok(())
    }

    /// Append another circuit on the same register, renumbering its slots
    /// to start after this circuit's.
    pub fn extend_from(&mut self, other: &Circuit) -> Result<()> {
        if other.n_qubits != self.n_qubits {
            return Err(Error::shape(format!(
                "cannot append a {}-qubit circuit to a {}-qubit circuit",
                other.n_qubits, self.n_qubits
            )));
        }
        let offset = self.n_slots;
        for op in &other.ops {
            let shifted = match op.angle() {
                Some(AngleSource::Slot(s)) => {
                    op.with_slot(AngleSource::Slot(s + offset))
                }
                _ => *op,
            };
            self.ops.push(shifted);
        }
        self.n_slots = offset + other.n_slots;
        Ok(())
    }

    fn validate_slot_coverage(&self) -> Result<()> {
        let mut used = vec![false; self.n_slots];
        for op in &self.ops {
            if let Some(s) = op.slot() {
                used[s] = true;
            }
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(Error::Config(format!(
                "parameter slot {missing} is never referenced by any gate"
            )));
        }
        Ok(())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_slots(&self) -> usize {
        self.n_slots
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Run on a copy of `initial` with `params` bound to the slots.
    pub fn run(&self, params: &[f64], initial: &StateVector) -> Result<StateVector> {
        let mut state = initial.clone();
        self.run_in_place(params, &mut state)?;
        Ok(state)
    }

    pub fn run_in_place(&self, params: &[f64], state: &mut StateVector) -> Result<()> {
        if state.n_qubits != self.n_qubits {
            return Err(Error::shape(format!(
                "circuit expects {} qubits, state has {}",
                self.n_qubits, state.n_qubits
            )));
        }
        if params.len() != self.n_slots {
            return Err(Error::shape(format!(
                "circuit has {} parameter slots, got {} values",
                self.n_slots,
                params.len()
            )));
        }
        for op in &self.ops {
            state.apply(op, params)?;
        }
        Ok(())
    }
}

impl GateOp {
    fn with_slot(&self, angle: AngleSource) -> Self {
        match *self {
            GateOp::Rx { qubit, .. } => GateOp::Rx { qubit, angle },
            GateOp::Ry { qubit, .. } => GateOp::Ry { qubit, angle },
            GateOp::Rz { qubit, .. } => GateOp::Rz { qubit, angle },
            GateOp::CRx { control, target, .. } => GateOp::CRx { control, target, angle },
            GateOp::CRz { control, target, .. } => GateOp::CRz { control, target, angle },
            op @ GateOp::Cnot { .. } => op,
        }
    }
}
