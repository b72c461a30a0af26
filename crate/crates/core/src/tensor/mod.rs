//! Small dense tensor algebra: mode-3 DFT, t-product, t-SVD, Haar
//! matrices, and circulant eigenstructure.
//!
//! Third-order tensors are `ndarray` arrays of shape (n1, n2, n3); the
//! third mode is the tube axis the DFT runs along. Everything here is a
//! pure function of its inputs and safe to call from any thread.

mod circulant;
mod eig;
mod fft;
mod haar;
mod tsvd;

pub use circulant::circulant_eigenvalues;
pub use fft::{fft_mode3, ifft_mode3, ifft_mode3_real, Mode3Dft};
pub use haar::{fast_haar, haar_matrix, Direction, HaarMatrix};
pub use tsvd::{tproduct, tsvd, TSvd};

pub(crate) use eig::{hermitian_evd, matmul, matmul_conj_a, matmul_conj_b};
pub(crate) use haar::fast_haar_complex;

use ndarray::{Array3, Array4};
use num_complex::Complex64;

/// Real third-order tensor (n1, n2, n3).
pub type Tensor3 = Array3<f64>;

/// Complex third-order tensor, typically a mode-3 spectrum.
pub type ComplexTensor3 = Array3<Complex64>;

/// Real fourth-order tensor (ps, ps, c, K): a patch group or its
/// coefficients.
pub type Tensor4 = Array4<f64>;
