//! Hybrid quantum-classical convolutional networks on an exact statevector
//! simulator.
//!
//! The crate provides a small dense statevector engine, angle / dense-angle
//! data encodings, two hardware-efficient ansatz families, quantum
//! convolutional layers with parameter-shift gradients, classical layers with
//! hand-rolled backprop, six ready-made architectures (CNN, ResNet, and their
//! quantum-enhanced variants), an SGD training loop, and expressibility /
//! entangling-capability diagnostics for the ansatz circuits.

pub mod analysis;
pub mod ansatz;
pub mod clayers;
pub mod data;
pub mod encoding;
pub mod error;
pub mod models;
pub mod qlayers;
pub mod rng;
pub mod sim;
pub mod tensor;
pub mod training;

pub use error::{Error, Result};
pub use rng::SeedStream;
pub use sim::{AngleSource, Circuit, GateOp, StateVector};
pub use tensor::FeatureMap;
