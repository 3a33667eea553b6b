//! The two hardware-efficient ansatz families, with layer stacking.
//!
//! `AllToAll` layers place one Rx rotation per qubit followed by a
//! parameterized CRx entangler on every unordered qubit pair (lower index
//! controls): maximal connectivity, n + n(n-1)/2 parameters per layer, and
//! the identity circuit at all-zero parameters. `CircuitBlock` layers place
//! one Ry rotation per qubit followed by an open nearest-neighbor CNOT
//! chain: n parameters per layer and a fixed entangling skeleton.

use rand::Rng;

use crate::error::{Error, Result};
use crate::sim::{AngleSource, Circuit, GateOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnsatzFamily {
    AllToAll,
    CircuitBlock,
}

impl AnsatzFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            AnsatzFamily::AllToAll => "all_to_all",
            AnsatzFamily::CircuitBlock => "circuit_block",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "all_to_all" => Ok(AnsatzFamily::AllToAll),
            "circuit_block" => Ok(AnsatzFamily::CircuitBlock),
            other => Err(Error::config(format!(
                "unknown ansatz family '{other}' (expected all_to_all or circuit_block)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnsatzSpec {
    pub family: AnsatzFamily,
    pub n_qubits: usize,
    pub n_layers: usize,
}

impl AnsatzSpec {
    pub fn new(family: AnsatzFamily, n_qubits: usize, n_layers: usize) -> Result<Self> {
        if n_qubits < 2 {
            return Err(Error::config(format!(
                "ansatz needs at least 2 qubits, got {n_qubits}"
            )));
        }
        if n_layers == 0 {
            return Err(Error::config("ansatz needs at least 1 layer"));
        }
        Ok(AnsatzSpec { family, n_qubits, n_layers })
    }

    /// Trainable parameter count: L*(n + n(n-1)/2) for AllToAll, L*n for
    /// CircuitBlock.
    pub fn parameter_count(&self) -> usize {
        let n = self.n_qubits;
        let per_layer = match self.family {
            AnsatzFamily::AllToAll => n + n * (n - 1) / 2,
            AnsatzFamily::CircuitBlock => n,
        };
        self.n_layers * per_layer
    }

    /// Build the circuit; slot ordering is deterministic (rotations first,
    /// then entangler pairs in (0,1), (0,2), ... order, layer by layer).
    pub fn build(&self) -> Circuit {
        let mut circuit = Circuit::new(self.n_qubits).expect("validated in new");
        let mut slot = 0;
        for _ in 0..self.n_layers {
            match self.family {
                AnsatzFamily::AllToAll => {
                    for q in 0..self.n_qubits {
                        circuit
                            .push(GateOp::rx(q, AngleSource::Slot(slot)))
                            .expect("valid qubit");
                        slot += 1;
                    }
                    for i in 0..self.n_qubits {
                        for j in (i + 1)..self.n_qubits {
                            circuit
                                .push(GateOp::crx(i, j, AngleSource::Slot(slot)))
                                .expect("valid pair");
                            slot += 1;
                        }
                    }
                }
                AnsatzFamily::CircuitBlock => {
                    for q in 0..self.n_qubits {
                        circuit
                            .push(GateOp::ry(q, AngleSource::Slot(slot)))
                            .expect("valid qubit");
                        slot += 1;
                    }
                    for q in 0..self.n_qubits - 1 {
                        circuit.push(GateOp::cnot(q, q + 1)).expect("valid pair");
                    }
                }
            }
        }
        circuit
    }

    /// Initial parameter values: uniform in (-0.1, 0.1), near the identity.
    pub fn init_params(&self, rng: &mut impl Rng) -> Vec<f64> {
        (0..self.parameter_count())
            .map(|_| rng.random_range(-0.1..0.1))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::StateVector;
    use proptest::prelude::*;

    #[test]
    fn slot_counts_match_formula() {
        let a = AnsatzSpec::new(AnsatzFamily::AllToAll, 4, 1).unwrap();
        assert_eq!(a.parameter_count(), 10);
        assert_eq!(a.build().n_slots(), 10);

        let b = AnsatzSpec::new(AnsatzFamily::CircuitBlock, 4, 1).unwrap();
        assert_eq!(b.parameter_count(), 4);
        let circuit = b.build();
        assert_eq!(circuit.n_slots(), 4);
        let cnots = circuit
            .ops()
            .iter()
            .filter(|op| matches!(op, GateOp::Cnot { .. }))
            .count();
        assert_eq!(cnots, 3);

        let c = AnsatzSpec::new(AnsatzFamily::CircuitBlock, 9, 3).unwrap();
        assert_eq!(c.parameter_count(), 27);
        assert_eq!(
            AnsatzSpec::new(AnsatzFamily::AllToAll, 9, 1).unwrap().parameter_count(),
            45
        );
        assert_eq!(
            AnsatzSpec::new(AnsatzFamily::CircuitBlock, 4, 4).unwrap().parameter_count(),
            16
        );
        assert_eq!(
            AnsatzSpec::new(AnsatzFamily::CircuitBlock, 4, 2).unwrap().parameter_count(),
            8
        );
    }

    #[test]
    fn too_few_qubits_rejected() {
        assert!(AnsatzSpec::new(AnsatzFamily::AllToAll, 1, 1).is_err());
        assert!(AnsatzSpec::new(AnsatzFamily::AllToAll, 2, 0).is_err());
    }

    #[test]
    fn all_to_all_zero_params_is_identity() {
        let spec = AnsatzSpec::new(AnsatzFamily::AllToAll, 3, 2).unwrap();
        let circuit = spec.build();
        let zeros = vec![0.0; spec.parameter_count()];
        // act on a scrambled input, not just |000>
        let mut input = StateVector::zero(3).unwrap();
        input.apply(&GateOp::ry(0, AngleSource::Fixed(1.1)), &[]).unwrap();
        input.apply(&GateOp::rx(2, AngleSource::Fixed(0.6)), &[]).unwrap();
        input.apply(&GateOp::cnot(0, 1), &[]).unwrap();
        let out = circuit.run(&zeros, &input).unwrap();
        for (a, b) in out.amplitudes().iter().zip(input.amplitudes()) {
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn circuit_block_zero_params_is_bare_cnot_chain() {
        let spec = AnsatzSpec::new(AnsatzFamily::CircuitBlock, 3, 1).unwrap();
        let circuit = spec.build();
        let mut input = StateVector::zero(3).unwrap();
        input.apply(&GateOp::ry(0, AngleSource::Fixed(0.9)), &[]).unwrap();
        let out = circuit.run(&vec![0.0; 3], &input).unwrap();

        let mut expected = input.clone();
        expected.apply(&GateOp::cnot(0, 1), &[]).unwrap();
        expected.apply(&GateOp::cnot(1, 2), &[]).unwrap();
        for (a, b) in out.amplitudes().iter().zip(expected.amplitudes()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn rebuilding_is_deterministic() {
        let spec = AnsatzSpec::new(AnsatzFamily::AllToAll, 4, 2).unwrap();
        assert_eq!(spec.build(), spec.build());
    }

    #[test]
    fn init_params_near_identity() {
        let spec = AnsatzSpec::new(AnsatzFamily::AllToAll, 4, 1).unwrap();
        let mut rng = crate::rng::SeedStream::from_seed(7).named("init").rng();
        let params = spec.init_params(&mut rng);
        assert_eq!(params.len(), 10);
        assert!(params.iter().all(|p| p.abs() < 0.1));
    }

    proptest! {
        #[test]
        fn built_slots_equal_parameter_count(
            family in prop_oneof![Just(AnsatzFamily::AllToAll), Just(AnsatzFamily::CircuitBlock)],
            n in 2..=9usize,
            layers in 1..=4usize,
        ) {
            let spec = AnsatzSpec::new(family, n, layers).unwrap();
            prop_assert_eq!(spec.build().n_slots(), spec.parameter_count());
        }
    }
}
