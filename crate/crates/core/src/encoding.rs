//! Data encodings: map normalized pixel windows into quantum states.
//!
//! Angle encoding puts one input on one qubit through a single Ry rotation;
//! dense angle encoding packs three inputs per qubit as an Rx-Rz-Rx triple.
//! Inputs must lie in [0, 1); angles are `angle_scale * x`.

use crate::error::{Error, Result};
use crate::sim::{AngleSource, Circuit, GateOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EncodingKind {
    Angle,
    DenseAngle,
}

/// How a window of inputs becomes an encoding circuit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EncodingSpec {
    kind: EncodingKind,
    n_qubits: usize,
    angle_scale: f64,
}

impl EncodingSpec {
    pub fn angle(n_qubits: usize, angle_scale: f64) -> Result<Self> {
        Self::new(EncodingKind::Angle, n_qubits, angle_scale)
    }

    pub fn dense_angle(n_qubits: usize, angle_scale: f64) -> Result<Self> {
        Self::new(EncodingKind::DenseAngle, n_qubits, angle_scale)
    }

    fn new(kind: EncodingKind, n_qubits: usize, angle_scale: f64) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::config("encoding needs at least one qubit"));
        }
        if !(angle_scale > 0.0) {
            return Err(Error::config(format!(
                "angle_scale must be positive, got {angle_scale}"
            )));
        }
        Ok(EncodingSpec { kind, n_qubits, angle_scale })
    }

    pub fn kind(&self) -> EncodingKind {
        self.kind
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn angle_scale(&self) -> f64 {
        self.angle_scale
    }

    /// Number of scalars one encoding consumes.
    pub fn n_inputs(&self) -> usize {
        match self.kind {
            EncodingKind::Angle => self.n_qubits,
            EncodingKind::DenseAngle => 3 * self.n_qubits,
        }
    }

    /// The gate input j feeds, with the given (already scaled) angle.
    ///
    /// Angle encoding maps input j to qubit j (Ry). Dense angle encoding maps
    /// input j to qubit j/3; the triple is applied in input order as Rx, Rz,
    /// Rx, so the net single-qubit unitary is Rx(a2) Rz(a1) Rx(a0) as an
    /// operator product.
    pub(crate) fn gate_for_input(&self, j: usize, angle: f64) -> GateOp {
        let a = AngleSource::Fixed(angle);
        match self.kind {
            EncodingKind::Angle => GateOp::ry(j, a),
            EncodingKind::DenseAngle => {
                let qubit = j / 3;
                match j % 3 {
                    0 | 2 => GateOp::rx(qubit, a),
                    _ => GateOp::rz(qubit, a),
                }
            }
        }
    }

    /// Build the fixed-angle encoding circuit for one window of inputs.
    pub fn encode(&self, x: &[f64]) -> Result<Circuit> {
        if x.len() != self.n_inputs() {
            return Err(Error::shape(format!(
                "encoding expects {} inputs, got {}",
                self.n_inputs(),
                x.len()
            )));
        }
        for &v in x {
            if !(0.0..1.0).contains(&v) {
                return Err(Error::EncodingDomain { value: v });
            }
        }
        let mut circuit = Circuit::new(self.n_qubits)?;
        for (j, &v) in x.iter().enumerate() {
            circuit.push(self.gate_for_input(j, self.angle_scale * v))?;
        }
        Ok(circuit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::StateVector;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    fn run(spec: &EncodingSpec, x: &[f64]) -> StateVector {
        let c = spec.encode(x).unwrap();
        c.run(&[], &StateVector::zero(spec.n_qubits()).unwrap()).unwrap()
    }

    #[test]
    fn zero_inputs_leave_zero_state() {
        let spec = EncodingSpec::angle(4, 1.0).unwrap();
        let state = run(&spec, &[0.0; 4]);
        assert_eq!(state.zero_probabilities(), vec![1.0; 4]);
    }

    #[test]
    fn single_nonzero_input() {
        let spec = EncodingSpec::angle(4, 1.0).unwrap();
        let state = run(&spec, &[0.8, 0.0, 0.0, 0.0]);
        let probs = state.zero_probabilities();
        assert_abs_diff_eq!(probs[0], 0.8483533546735827, epsilon = 1e-12);
        for &p in &probs[1..] {
            assert_abs_diff_eq!(p, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn near_one_input_stays_above_floor() {
        let spec = EncodingSpec::angle(1, 1.0).unwrap();
        let state = run(&spec, &[1.0 - 1e-12]);
        // cos^2 is decreasing on [0, pi/2], so p0 is bounded below by cos^2(0.5)
        let p0 = state.zero_probabilities()[0];
        assert!(p0 >= 0.7701511529340699 - 1e-9);
        assert_abs_diff_eq!(p0, 0.7701511529340699, epsilon = 1e-9);
    }

    #[test]
    fn domain_is_enforced() {
        let spec = EncodingSpec::angle(2, 1.0).unwrap();
        assert!(matches!(
            spec.encode(&[0.2, 1.0]),
            Err(Error::EncodingDomain { .. })
        ));
        assert!(matches!(
            spec.encode(&[-0.1, 0.5]),
            Err(Error::EncodingDomain { .. })
        ));
        assert!(matches!(spec.encode(&[0.5]), Err(Error::Shape(_))));
    }

    #[test]
    fn dense_identity_on_zeros() {
        let spec = EncodingSpec::dense_angle(3, 1.0).unwrap();
        let state = run(&spec, &[0.0; 9]);
        assert_eq!(state.zero_probabilities(), vec![1.0; 3]);
    }

    #[test]
    fn dense_first_input_rotates_first_qubit() {
        // scale chosen so a_0 = pi/2; remaining inputs zero
        let spec = EncodingSpec::dense_angle(3, FRAC_PI_2 / 0.5).unwrap();
        let mut x = [0.0; 9];
        x[0] = 0.5;
        let probs = run(&spec, &x).zero_probabilities();
        assert_abs_diff_eq!(probs[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(probs[1], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(probs[2], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn dense_gate_count_and_pattern() {
        let spec = EncodingSpec::dense_angle(3, 1.0).unwrap();
        let c = spec.encode(&[0.1; 9]).unwrap();
        assert_eq!(c.ops().len(), 9);
        assert_eq!(c.n_slots(), 0);
        for (j, op) in c.ops().iter().enumerate() {
            match (j % 3, op) {
                (0 | 2, GateOp::Rx { qubit, .. }) => assert_eq!(*qubit, j / 3),
                (1, GateOp::Rz { qubit, .. }) => assert_eq!(*qubit, j / 3),
                _ => panic!("unexpected gate {op:?} at position {j}"),
            }
        }
    }

    proptest! {
        #[test]
        fn angle_probabilities_are_cos_squared(
            xs in proptest::collection::vec(0.0..1.0f64, 4),
            scale in 0.5..3.0f64,
        ) {
            let spec = EncodingSpec::angle(4, scale).unwrap();
            let probs = run(&spec, &xs).zero_probabilities();
            for (p, x) in probs.iter().zip(&xs) {
                prop_assert!((p - (scale * x / 2.0).cos().powi(2)).abs() < 1e-12);
            }
        }
    }
}
