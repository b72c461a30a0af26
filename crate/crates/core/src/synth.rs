//! Deterministic synthetic test images.
//!
//! The quality checks and benchmarks need known-clean inputs with
//! controlled structure; these generators produce them without any
//! external data. All of them are pure functions of their arguments.

use std::f64::consts::PI;

use crate::image::Image;

/// Smooth two-direction gradient; its finest diagonal detail coefficients
/// are exactly zero, which makes it the canonical noise-estimator fixture.
pub fn gradient(height: usize, width: usize, channels: usize) -> Image {
    Image::from_fn(height, width, channels, |ch, r, c| {
        let x = c as f64 / (width - 1).max(1) as f64;
        let y = r as f64 / (height - 1).max(1) as f64;
        40.0 + 160.0 * (0.5 * x + 0.5 * y) + 10.0 * ch as f64
    })
}

/// Piecewise-smooth image: constant blocks, a slope, and a disk.
///
/// Strong self-similarity, sharp edges, no fine texture — the regime where
/// collaborative filtering shines.
pub fn piecewise_smooth(height: usize, width: usize, channels: usize) -> Image {
    let h = height as f64;
    let w = width as f64;
    Image::from_fn(height, width, channels, |ch, r, c| {
        let x = c as f64;
        let y = r as f64;
        let mut v = if x < 0.35 * w {
            60.0
        } else if x < 0.6 * w {
            170.0
        } else {
            60.0 + 130.0 * (y / h)
        };
        let (cy, cx) = (0.3 * h, 0.72 * w);
        if (y - cy).powi(2) + (x - cx).powi(2) < (0.14 * w).powi(2) {
            v = 220.0;
        }
        if y > 0.78 * h && x > 0.1 * w && x < 0.5 * w {
            v = 30.0;
        }
        (v + 8.0 * ch as f64).clamp(0.0, 255.0)
    })
}

/// Textured image mixing low-frequency shading, oriented sinusoids, and
/// repeating block structure; stands in for a natural photograph.
pub fn texture(height: usize, width: usize, channels: usize) -> Image {
    let h = height as f64;
    let w = width as f64;
    Image::from_fn(height, width, channels, |ch, r, c| {
        let x = c as f64 / w;
        let y = r as f64 / h;
        let shade = 90.0 + 60.0 * (PI * x).sin() * (PI * y).cos();
        let stripes = 22.0 * (2.0 * PI * (9.0 * x + 4.0 * y)).sin();
        let weave = 14.0 * (2.0 * PI * 17.0 * x).sin() * (2.0 * PI * 13.0 * y).sin();
        let blocks = if ((r / 24) + (c / 24)) % 2 == 0 { 13.0 } else { -13.0 };
        let tint = match ch {
            0 => 12.0 * (2.0 * PI * y).cos(),
            1 => 0.0,
            _ => -10.0 * (2.0 * PI * x).sin(),
        };
        (shade + stripes + weave + blocks + tint).clamp(0.0, 255.0)
    })
}

/// Binary checkerboard with the given cell size, values {low, high}.
pub fn checkerboard(height: usize, width: usize, cell: usize, low: f64, high: f64) -> Image {
    Image::from_fn(height, width, 1, |_, r, c| {
        if ((r / cell) + (c / cell)) % 2 == 0 {
            low
        } else {
            high
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic_and_in_range() {
        for img in [
            gradient(64, 48, 3),
            piecewise_smooth(64, 48, 3),
            texture(64, 48, 3),
            checkerboard(32, 32, 4, 0.0, 255.0),
        ] {
            assert!(img
                .planes()
                .iter()
                .all(|v| v.is_finite() && (0.0..=255.0).contains(v)));
        }
        assert_eq!(texture(64, 48, 3), texture(64, 48, 3));
    }
}
