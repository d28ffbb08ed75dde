//! The four augmentation transforms and their deterministic composition.
//!
//! Each transform is a pure function of the clip plus an explicit seed, so a
//! factor configuration applied twice to the same clip is bitwise identical.
//! Composition order is fixed to the schedule's column order: noise, then
//! brightness, then rotation, then flip.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::clip::{Clip, CHANNELS};
use crate::design::{BrightnessLevel, FactorLevels, FlipLevel, NoiseLevel, RotationLevel};

/// Knobs shared by every augmentation invocation.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AugmentParams {
    /// Gaussian noise standard deviation in 8-bit sample units.
    pub noise_sigma: f64,
    /// Seed of the noise stream for one invocation.
    pub seed: u64,
}

impl Default for AugmentParams {
    fn default() -> Self {
        AugmentParams { noise_sigma: 10.0, seed: 0 }
    }
}

impl BrightnessLevel {
    /// Multiplier applied to the HSV V channel.
    pub fn factor(self) -> f64 {
        match self {
            BrightnessLevel::Same => 1.0,
            BrightnessLevel::Increase => 1.5,
            BrightnessLevel::Decrease => 0.5,
        }
    }
}

impl RotationLevel {
    /// Rotation angle in degrees; positive is counter-clockwise.
    pub fn degrees(self) -> f64 {
        match self {
            RotationLevel::None => 0.0,
            RotationLevel::Left => 45.0,
            RotationLevel::Right => -45.0,
        }
    }
}

/// RGB in `0..=255` to hexcone HSV: hue in degrees `[0, 360)`, saturation and
/// value in `[0, 1]`.
pub fn rgb_to_hsv(r: u8, g: u8, b: u8) -> (f64, f64, f64) {
    let rf = r as f64 / 255.0;
    let gf = g as f64 / 255.0;
    let bf = b as f64 / 255.0;
    let max = rf.max(gf).max(bf);
    let min = rf.min(gf).min(bf);
    let delta = max - min;
    let v = max;
    let s = if max > 0.0 { delta / max } else { 0.0 };
    let h = if delta == 0.0 {
        0.0
    } else if max == rf {
        60.0 * (((gf - bf) / delta).rem_euclid(6.0))
    } else if max == gf {
        60.0 * ((bf - rf) / delta + 2.0)
    } else {
        60.0 * ((rf - gf) / delta + 4.0)
    };
    (h.rem_euclid(360.0), s, v)
}

/// Inverse of [`rgb_to_hsv`]; round-trips within ±1 per channel.
pub fn hsv_to_rgb(h: f64, s: f64, v: f64) -> (u8, u8, u8) {
    let c = v * s;
    let sector = (h / 60.0).rem_euclid(6.0);
    let x = c * (1.0 - (sector % 2.0 - 1.0).abs());
    let (r1, g1, b1) = match sector as usize {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = v - c;
    let to_u8 = |f: f64| ((f + m) * 255.0).round().clamp(0.0, 255.0) as u8;
    (to_u8(r1), to_u8(g1), to_u8(b1))
}

/// Scales the HSV V channel of every pixel by `factor`, clamped at 1.
pub fn apply_brightness(clip: &Clip, factor: f64) -> Clip {
    let mut out = clip.clone();
    for t in 0..clip.frames() {
        for y in 0..clip.height() {
            for x in 0..clip.width() {
                let [r, g, b] = clip.pixel(t, y, x);
                let (h, s, v) = rgb_to_hsv(r, g, b);
                let scaled = (factor * v).clamp(0.0, 1.0);
                let (r2, g2, b2) = hsv_to_rgb(h, s, scaled);
                out.set_pixel(t, y, x, [r2, g2, b2]);
            }
        }
    }
    out
}

/// Adds iid Gaussian noise to every sample, rounding and clamping back to
/// 8 bits. Nonpositive `sigma` is the identity; a fixed generator state
/// always produces the same output.
pub fn apply_noise<R: Rng>(clip: &Clip, sigma: f64, rng: &mut R) -> Clip {
    if sigma <= 0.0 {
        return clip.clone();
    }
    let normal = Normal::new(0.0, sigma).expect("finite positive sigma");
    let mut out = clip.clone();
    for sample in out.samples_mut() {
        let noisy = *sample as f64 + normal.sample(rng);
        *sample = noisy.round().clamp(0.0, 255.0) as u8;
    }
    out
}

/// Rotates every frame about its center; positive degrees are
/// counter-clockwise. Sampling is bilinear, out-of-frame sources are black,
/// and frame dimensions are preserved.
pub fn apply_rotation(clip: &Clip, degrees: f64) -> Clip {
    if degrees == 0.0 {
        return clip.clone();
    }
    let (h, w) = (clip.height(), clip.width());
    let cy = (h - 1) as f64 / 2.0;
    let cx = (w - 1) as f64 / 2.0;
    let theta = degrees.to_radians();
    let (sin, cos) = (theta.sin(), theta.cos());
    let mut out = Clip::new(clip.frames(), h, w).expect("source clip is non-empty");
    for t in 0..clip.frames() {
        for y in 0..h {
            let dy = y as f64 - cy;
            for x in 0..w {
                let dx = x as f64 - cx;
                // inverse map: image y grows downward, so visual CCW uses
                // (dx cos − dy sin, dx sin + dy cos) for the source offset
                let sx = cx + dx * cos - dy * sin;
                let sy = cy + dx * sin + dy * cos;
                if sx < 0.0 || sx > (w - 1) as f64 || sy < 0.0 || sy > (h - 1) as f64 {
                    continue; // stays black
                }
                let x0 = sx.floor() as usize;
                let y0 = sy.floor() as usize;
                let x1 = (x0 + 1).min(w - 1);
                let y1 = (y0 + 1).min(h - 1);
                let fx = sx - x0 as f64;
                let fy = sy - y0 as f64;
                for c in 0..CHANNELS {
                    let top = clip.sample(t, y0, x0, c) as f64 * (1.0 - fx)
                        + clip.sample(t, y0, x1, c) as f64 * fx;
                    let bottom = clip.sample(t, y1, x0, c) as f64 * (1.0 - fx)
                        + clip.sample(t, y1, x1, c) as f64 * fx;
                    let value = top * (1.0 - fy) + bottom * fy;
                    out.set_sample(t, y, x, c, value.round().clamp(0.0, 255.0) as u8);
                }
            }
        }
    }
    out
}

/// Mirrors every frame left-right (horizontal) or top-bottom (vertical).
pub fn apply_flip(clip: &Clip, mode: FlipLevel) -> Clip {
    match mode {
        FlipLevel::None => clip.clone(),
        FlipLevel::Horizontal | FlipLevel::Vertical => {
            let mut out = clip.clone();
            let (h, w) = (clip.height(), clip.width());
            for t in 0..clip.frames() {
                for y in 0..h {
                    for x in 0..w {
                        let (sy, sx) = match mode {
                            FlipLevel::Horizontal => (y, w - 1 - x),
                            _ => (h - 1 - y, x),
                        };
                        out.set_pixel(t, y, x, clip.pixel(t, sy, sx));
                    }
                }
            }
            out
        }
    }
}

/// Applies one factor configuration: noise, brightness, rotation, flip, in
/// that fixed order, skipping factors at their neutral level. The output is
/// fully determined by `(clip, levels, params)`.
pub fn apply_config(clip: &Clip, levels: &FactorLevels, params: &AugmentParams) -> Clip {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut stages: Vec<Clip> = Vec::with_capacity(4);
    let mut current = clip;

    if levels.noise == NoiseLevel::AddNoise {
        stages.push(apply_noise(current, params.noise_sigma, &mut rng));
        current = stages.last().unwrap();
    }
    if levels.brightness != BrightnessLevel::Same {
        stages.push(apply_brightness(current, levels.brightness.factor()));
        current = stages.last().unwrap();
    }
    if levels.rotation != RotationLevel::None {
        stages.push(apply_rotation(current, levels.rotation.degrees()));
        current = stages.last().unwrap();
    }
    if levels.flip != FlipLevel::None {
        stages.push(apply_flip(current, levels.flip));
    }
    stages.pop().unwrap_or_else(|| clip.clone())
}
