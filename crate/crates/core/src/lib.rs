//! microseg-core: segmentation of microscale bead/cell scenes, from scratch.
//!
//! Pure algorithmic core with no I/O dependencies; `no_std` compatible
//! (requires `alloc`). All file formats, dataset layout and the CLI live in
//! the companion `microseg-cli` crate.
//!
//! The pipeline stages are:
//!
//! 1. **raster / preprocess** – float rasters, min-max normalization,
//!    histogram equalization, gamma correction.
//! 2. **tiling** – reflection padding, non-overlapping tile decomposition
//!    and bit-exact stitching for whole-image inference.
//! 3. **synth** – deterministic synthetic bead/cell scene generator with
//!    pixel-exact ground truth.
//! 4. **augment** – random crops plus dihedral-group (D4) transforms.
//! 5. **nn** – tensors, convolution and friends with hand-derived
//!    backpropagation, and the two network families (encoder-decoder and
//!    fully residual).
//! 6. **lovasz** – multiclass Lovász-softmax loss with analytic gradient.
//! 7. **optim** – normalized SGD with momentum + cosine annealing, Adadelta.
//! 8. **metrics** – confusion matrix, per-class and mean IOU.
//! 9. **contour** – Moore-neighbor border following on predicted masks.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod augment;
pub mod contour;
pub mod error;
pub mod lovasz;
pub mod mathx;
pub mod metrics;
pub mod nn;
pub mod optim;
pub mod preprocess;
pub mod raster;
pub mod rngx;
pub mod synth;
pub mod tensor;
pub mod tiling;

pub use error::{CoreError, Result};
pub use raster::{Image, LabelMask, PadSpec, ProbabilityMap, Raster, RgbRaster};
pub use tensor::Tensor;
