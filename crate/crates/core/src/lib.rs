//! One-step collaborative image denoising built on a shared tensor-SVD
//! projection and the Haar group transform.
//!
//! The filter stacks similar patches of a noisy image into small 4-D groups,
//! projects each group through a global pair of per-frequency unitary bases
//! and a Haar matrix along the grouping mode, hard-thresholds the
//! coefficients, and aggregates the inverse-transformed patches back into
//! the image. An adaptive variant re-estimates the noise level per subimage
//! from the eigenvalue structure of the group circulant Gram matrix.
//!
//! Modules map onto the stages of that pipeline:
//!
//! - [`tensor`]: mode-3 DFT, t-product, t-SVD, Haar matrices, circulant
//!   eigenvalues — the dense kernels everything else calls.
//! - [`patch`]: reference-patch enumeration, green-channel-prior matching,
//!   group extraction, overlap-aware aggregation.
//! - [`transform`]: global basis learning/persistence and the
//!   forward/threshold/inverse group filter.
//! - [`noise`]: subimage noise estimation, eigenvalue rank adjustment,
//!   majority voting.
//! - [`pipeline`]: end-to-end denoising, tile-parallel execution, config.
//! - [`metrics`]: PSNR and SSIM.
//! - [`oracle`]: slow, obviously-correct reference implementations used by
//!   the test suite. Production paths never call into this module.

pub mod error;
pub mod image;
pub mod metrics;
pub mod noise;
pub mod oracle;
pub mod patch;
pub mod pipeline;
pub mod rng;
pub mod synth;
pub mod tensor;
pub mod transform;

pub use error::{Error, Result};
pub use image::Image;
pub use patch::{MatchConfig, PatchGroup, PatchRef};
pub use pipeline::{denoise, denoise_adaptive, BasesSource, DenoiseConfig, Threads};
pub use transform::{learn_global_bases, GlobalBases};
