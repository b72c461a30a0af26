//! Planar floating-point images on the [0, 255] scale.

use ndarray::{Array3, ArrayView2};

use crate::error::{Error, Result};
use crate::rng;

/// An H x W x c image stored as c contiguous planes of f64 pixels.
///
/// Values live on the [0, 255] scale regardless of the source bit depth;
/// converting from and to integer formats is the caller's concern.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    /// Shape (c, h, w): channel planes are contiguous.
    data: Array3<f64>,
}

impl Image {
    /// Wrap planar data of shape (c, h, w).
    pub fn from_planes(data: Array3<f64>) -> Result<Self> {
        let (c, h, w) = data.dim();
        if c == 0 || h == 0 || w == 0 {
            return Err(Error::ShapeMismatch(format!(
                "image dimensions must be positive, got {c}x{h}x{w}"
            )));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::ShapeMismatch(
                "image contains non-finite pixels".into(),
            ));
        }
        Ok(Self { data })
    }

    /// Constant-valued image.
    pub fn constant(height: usize, width: usize, channels: usize, value: f64) -> Self {
        Self {
            data: Array3::from_elem((channels, height, width), value),
        }
    }

    /// Build from a per-pixel function of (channel, row, col).
    pub fn from_fn<F: Fn(usize, usize, usize) -> f64>(
        height: usize,
        width: usize,
        channels: usize,
        f: F,
    ) -> Self {
        Self {
            data: Array3::from_shape_fn((channels, height, width), |(ch, r, c)| f(ch, r, c)),
        }
    }

    pub fn height(&self) -> usize {
        self.data.dim().1
    }

    pub fn width(&self) -> usize {
        self.data.dim().2
    }

    pub fn channels(&self) -> usize {
        self.data.dim().0
    }

    #[inline]
    pub fn get(&self, channel: usize, row: usize, col: usize) -> f64 {
        self.data[[channel, row, col]]
    }

    #[inline]
    pub fn set(&mut self, channel: usize, row: usize, col: usize, value: f64) {
        self.data[[channel, row, col]] = value;
    }

    /// Borrow one channel plane.
    pub fn plane(&self, channel: usize) -> ArrayView2<'_, f64> {
        self.data.index_axis(ndarray::Axis(0), channel)
    }

    pub fn planes(&self) -> &Array3<f64> {
        &self.data
    }

    pub fn planes_mut(&mut self) -> &mut Array3<f64> {
        &mut self.data
    }

    /// Clamp every pixel into [0, 255] in place.
    pub fn clamp(&mut self) {
        self.data.mapv_inplace(|v| v.clamp(0.0, 255.0));
    }

    /// Add white Gaussian noise with one sigma per channel, then clamp.
    ///
    /// Draw `i` for plane element (ch, r, c) uses the global pixel index
    /// `(ch * h + r) * w + c` so output is independent of iteration order.
    pub fn add_awgn(&self, sigmas: &[f64], seed: u64) -> Result<Self> {
        let (c, h, w) = self.data.dim();
        if sigmas.len() != c && sigmas.len() != 1 {
            return Err(Error::InvalidConfig(format!(
                "need 1 or {c} sigma values, got {}",
                sigmas.len()
            )));
        }
        if sigmas.iter().any(|s| !s.is_finite() || *s < 0.0) {
            return Err(Error::InvalidConfig("sigma must be finite and >= 0".into()));
        }
        let mut out = self.data.clone();
        for ((ch, r, col), v) in out.indexed_iter_mut() {
            let sigma = sigmas[if sigmas.len() == 1 { 0 } else { ch }];
            let i = ((ch * h + r) * w + col) as u64;
            *v = (*v + sigma * rng::gaussian(seed, i)).clamp(0.0, 255.0);
        }
        Ok(Self { data: out })
    }

    /// Per-pixel mean across channels, rescaled so that i.i.d. per-channel
    /// noise of level sigma keeps level sigma in the result.
    ///
    /// Averaging c independent noise channels shrinks the noise standard
    /// deviation by sqrt(c); the sqrt(c) factor undoes that, which is what
    /// the detail-coefficient noise estimator needs. For c = 1 this is the
    /// plane itself.
    pub fn noise_carrier_plane(&self) -> ndarray::Array2<f64> {
        let (c, h, w) = self.data.dim();
        if c == 1 {
            return self.plane(0).to_owned();
        }
        let scale = (c as f64).sqrt() / c as f64;
        let mut out = ndarray::Array2::<f64>::zeros((h, w));
        for ch in 0..c {
            out += &self.plane(ch);
        }
        out.mapv_inplace(|v| v * scale);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn awgn_is_deterministic_and_calibrated() {
        let img = Image::constant(128, 128, 3, 128.0);
        let a = img.add_awgn(&[15.0, 10.0, 20.0], 7).unwrap();
        let b = img.add_awgn(&[15.0, 10.0, 20.0], 7).unwrap();
        assert_eq!(a, b);

        for (ch, target) in [(0usize, 15.0), (1, 10.0), (2, 20.0)] {
            let plane = a.plane(ch);
            let mean = plane.mean().unwrap();
            let var = plane.mapv(|v| (v - mean).powi(2)).mean().unwrap();
            let std = var.sqrt();
            assert!(
                (std - target).abs() / target < 0.03,
                "channel {ch}: std {std} vs target {target}"
            );
        }
    }

    #[test]
    fn awgn_zero_sigma_is_identity() {
        let img = Image::from_fn(16, 16, 1, |_, r, c| (r * 16 + c) as f64 % 256.0);
        let noisy = img.add_awgn(&[0.0], 3).unwrap();
        assert_eq!(img, noisy);
    }

    #[test]
    fn rejects_nonfinite() {
        let mut data = Array3::zeros((1, 4, 4));
        data[[0, 2, 2]] = f64::NAN;
        assert!(Image::from_planes(data).is_err());
    }

    #[test]
    fn noise_carrier_preserves_sigma() {
        let img = Image::constant(256, 256, 3, 100.0);
        let noisy = img.add_awgn(&[20.0], 11).unwrap();
        let plane = noisy.noise_carrier_plane();
        let mean = plane.mean().unwrap();
        let std = plane.mapv(|v| (v - mean).powi(2)).mean().unwrap().sqrt();
        assert!((std - 20.0).abs() < 1.0, "std = {std}");
    }
}
