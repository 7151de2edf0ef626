//! States, density matrices, correlation tensors and named-state factory.
//!
//! Multi-qubit basis indexing puts party 1 in the most significant bit, so
//! `|k1 k2 ... kN>` has computational index `k1*2^(N-1) + ... + kN`. The same
//! party-1-slowest order is used for correlation tensors.

mod named;
mod ops;
mod state;
mod tensor;

pub use named::{make_state, NamedStateSpec};
pub use ops::{partial_trace, partial_trace_vec, tensor_product, tensor_product_vec};
pub use state::{DensityMatrix, StateVector};
pub use tensor::{correlation_tensor, quantum_correlation, BlochVector, CorrelationTensor};

use crate::{C64, CMatrix};

/// Identity and the three Pauli matrices, indexed 0..=3.
pub fn pauli(mu: usize) -> CMatrix {
    let o = C64::new(0.0, 0.0);
    let l = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    match mu {
        0 => CMatrix::from_row_slice(2, 2, &[l, o, o, l]),
        1 => CMatrix::from_row_slice(2, 2, &[o, l, l, o]),
        2 => CMatrix::from_row_slice(2, 2, &[o, -i, i, o]),
        3 => CMatrix::from_row_slice(2, 2, &[l, o, o, -l]),
        _ => panic!("pauli index must be 0..=3"),
    }
}
