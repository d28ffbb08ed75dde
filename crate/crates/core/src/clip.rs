//! The clip data model: frame tensors, rubric labels, first-contact
//! annotations, and temporal/spatial standardization.
//!
//! A [`Clip`] is a dense `T×H×W×C` tensor of 8-bit RGB samples. Raw clips of
//! any length are cut down to the fixed 32-frame analysis window around the
//! first point of contact by [`localize_clip`], then optionally resampled
//! spatially by [`resize_clip`]. Both operations are pure and deterministic.

use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

/// Color channels per pixel (RGB).
pub const CHANNELS: usize = 3;

/// Nominal capture rate of the source footage, frames per second.
pub const NOMINAL_FRAME_RATE: f64 = 30.0;

/// Frames kept before the first point of contact.
pub const FRAMES_BEFORE_CONTACT: usize = 15;

/// Frames kept after the first point of contact.
pub const FRAMES_AFTER_CONTACT: usize = 16;

/// Length of a localized clip: the contact frame plus 15 before and 16 after.
pub const LOCALIZED_FRAMES: usize = FRAMES_BEFORE_CONTACT + 1 + FRAMES_AFTER_CONTACT;

/// Errors raised by clip construction and annotation handling.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClipError {
    #[error("clip dimensions must be positive, got {t}x{h}x{w}")]
    EmptyDimensions { t: usize, h: usize, w: usize },
    #[error("expected {expected} samples for {t}x{h}x{w}x{CHANNELS}, got {got}")]
    SampleCountMismatch { t: usize, h: usize, w: usize, expected: usize, got: usize },
    #[error("first point of contact {fpoc} outside clip of {frames} frames")]
    InvalidFpoc { fpoc: usize, frames: usize },
    #[error("rubric score {0} outside 0..=3")]
    InvalidScore(u8),
    #[error("duplicate source id `{0}` in manifest")]
    DuplicateSourceId(String),
}

/// A video clip: `T×H×W×C` unsigned 8-bit samples, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clip {
    t: usize,
    h: usize,
    w: usize,
    samples: Vec<u8>,
}

impl Clip {
    /// A black clip of the given shape.
    pub fn new(t: usize, h: usize, w: usize) -> Result<Clip, ClipError> {
        if t == 0 || h == 0 || w == 0 {
            return Err(ClipError::EmptyDimensions { t, h, w });
        }
        Ok(Clip { t, h, w, samples: alloc::vec![0; t * h * w * CHANNELS] })
    }

    /// Wraps raw row-major samples of the given shape.
    pub fn from_samples(t: usize, h: usize, w: usize, samples: Vec<u8>) -> Result<Clip, ClipError> {
        if t == 0 || h == 0 || w == 0 {
            return Err(ClipError::EmptyDimensions { t, h, w });
        }
        let expected = t * h * w * CHANNELS;
        if samples.len() != expected {
            return Err(ClipError::SampleCountMismatch { t, h, w, expected, got: samples.len() });
        }
        Ok(Clip { t, h, w, samples })
    }

    pub fn frames(&self) -> usize {
        self.t
    }

    pub fn height(&self) -> usize {
        self.h
    }

    pub fn width(&self) -> usize {
        self.w
    }

    /// Raw samples in `(t, y, x, c)` row-major order.
    pub fn samples(&self) -> &[u8] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [u8] {
        &mut self.samples
    }

    #[inline]
    fn index(&self, t: usize, y: usize, x: usize, c: usize) -> usize {
        ((t * self.h + y) * self.w + x) * CHANNELS + c
    }

    #[inline]
    pub fn sample(&self, t: usize, y: usize, x: usize, c: usize) -> u8 {
        self.samples[self.index(t, y, x, c)]
    }

    #[inline]
    pub fn set_sample(&mut self, t: usize, y: usize, x: usize, c: usize, value: u8) {
        let idx = self.index(t, y, x, c);
        self.samples[idx] = value;
    }

    /// RGB triple at one pixel.
    #[inline]
    pub fn pixel(&self, t: usize, y: usize, x: usize) -> [u8; 3] {
        let i = self.index(t, y, x, 0);
        [self.samples[i], self.samples[i + 1], self.samples[i + 2]]
    }

    #[inline]
    pub fn set_pixel(&mut self, t: usize, y: usize, x: usize, rgb: [u8; 3]) {
        let i = self.index(t, y, x, 0);
        self.samples[i..i + 3].copy_from_slice(&rgb);
    }

    /// One frame as a `H*W*C` slice.
    pub fn frame(&self, t: usize) -> &[u8] {
        let len = self.h * self.w * CHANNELS;
        &self.samples[t * len..(t + 1) * len]
    }
}

/// Binary risk class derived from the rubric score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BinaryLabel {
    Risky,
    Safe,
}

impl BinaryLabel {
    /// Logit/probability index of this class in two-class model outputs.
    pub fn class_index(self) -> usize {
        match self {
            BinaryLabel::Risky => 0,
            BinaryLabel::Safe => 1,
        }
    }

    pub fn from_class_index(index: usize) -> BinaryLabel {
        if index == 0 {
            BinaryLabel::Risky
        } else {
            BinaryLabel::Safe
        }
    }
}

/// A strike-zone rubric score on the 0..=3 scale.
///
/// Scores 0 and 1 map to the risky class, 2 and 3 to safe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "u8", into = "u8"))]
pub struct SattLabel {
    score: u8,
}

impl SattLabel {
    pub fn new(score: u8) -> Result<SattLabel, ClipError> {
        if score > 3 {
            return Err(ClipError::InvalidScore(score));
        }
        Ok(SattLabel { score })
    }

    pub fn score(self) -> u8 {
        self.score
    }

    pub fn binary(self) -> BinaryLabel {
        if self.score <= 1 {
            BinaryLabel::Risky
        } else {
            BinaryLabel::Safe
        }
    }
}

impl TryFrom<u8> for SattLabel {
    type Error = ClipError;

    fn try_from(score: u8) -> Result<Self, Self::Error> {
        SattLabel::new(score)
    }
}

impl From<SattLabel> for u8 {
    fn from(label: SattLabel) -> u8 {
        label.score
    }
}

/// Zero-based index of the frame where the tackler first touches the dummy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct FpocAnnotation {
    pub frame: usize,
}

impl FpocAnnotation {
    pub fn validate(self, clip: &Clip) -> Result<(), ClipError> {
        if self.frame >= clip.frames() {
            return Err(ClipError::InvalidFpoc { fpoc: self.frame, frames: clip.frames() });
        }
        Ok(())
    }
}

/// One dataset entry: where the clip lives and how it is annotated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub path: String,
    pub label: SattLabel,
    pub fpoc: FpocAnnotation,
    pub source_id: String,
}

/// Per-class entry totals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassCounts {
    pub risky: usize,
    pub safe: usize,
}

impl ClassCounts {
    pub fn total(self) -> usize {
        self.risky + self.safe
    }
}

/// The dataset index: entries with unique source ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetManifest {
    entries: Vec<ManifestEntry>,
}

impl DatasetManifest {
    pub fn new(entries: Vec<ManifestEntry>) -> Result<DatasetManifest, ClipError> {
        let mut seen = alloc::collections::BTreeSet::new();
        for entry in &entries {
            if !seen.insert(entry.source_id.as_str()) {
                return Err(ClipError::DuplicateSourceId(entry.source_id.clone()));
            }
        }
        Ok(DatasetManifest { entries })
    }

    pub fn entries(&self) -> &[ManifestEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, source_id: &str) -> Option<&ManifestEntry> {
        self.entries.iter().find(|e| e.source_id == source_id)
    }

    /// Class totals recomputed from the entries.
    pub fn class_counts(&self) -> ClassCounts {
        let mut counts = ClassCounts::default();
        for entry in &self.entries {
            match entry.label.binary() {
                BinaryLabel::Risky => counts.risky += 1,
                BinaryLabel::Safe => counts.safe += 1,
            }
        }
        counts
    }
}

/// Cuts the fixed 32-frame analysis window around the first point of contact.
///
/// The window spans frames `fpoc-15 ..= fpoc+16` of the raw clip; the contact
/// frame itself is included. Indices falling outside the raw clip are filled
/// by edge replication, so the output always has exactly 32 frames.
pub fn localize_clip(raw: &Clip, fpoc: FpocAnnotation) -> Result<Clip, ClipError> {
    fpoc.validate(raw)?;
    let frame_len = raw.height() * raw.width() * CHANNELS;
    let mut samples = Vec::with_capacity(LOCALIZED_FRAMES * frame_len);
    let last = raw.frames() as isize - 1;
    for offset in -(FRAMES_BEFORE_CONTACT as isize)..=(FRAMES_AFTER_CONTACT as isize) {
        let index = (fpoc.frame as isize + offset).clamp(0, last) as usize;
        samples.extend_from_slice(raw.frame(index));
    }
    Clip::from_samples(LOCALIZED_FRAMES, raw.height(), raw.width(), samples)
}

/// Spatially resamples every frame to `target_h×target_w` with bilinear
/// interpolation. Frame count and channels are unchanged; resizing to the
/// source dimensions reproduces the input exactly.
pub fn resize_clip(clip: &Clip, target_h: usize, target_w: usize) -> Result<Clip, ClipError> {
    if target_h == 0 || target_w == 0 {
        return Err(ClipError::EmptyDimensions { t: clip.frames(), h: target_h, w: target_w });
    }
    let (sh, sw) = (clip.height(), clip.width());
    let scale_y = sh as f64 / target_h as f64;
    let scale_x = sw as f64 / target_w as f64;
    let mut out = Clip::new(clip.frames(), target_h, target_w)?;
    for t in 0..clip.frames() {
        for y in 0..target_h {
            let sy = ((y as f64 + 0.5) * scale_y - 0.5).clamp(0.0, (sh - 1) as f64);
            let y0 = sy.floor() as usize;
            let y1 = (y0 + 1).min(sh - 1);
            let fy = sy - y0 as f64;
            for x in 0..target_w {
                let sx = ((x as f64 + 0.5) * scale_x - 0.5).clamp(0.0, (sw - 1) as f64);
                let x0 = sx.floor() as usize;
                let x1 = (x0 + 1).min(sw - 1);
                let fx = sx - x0 as f64;
                for c in 0..CHANNELS {
                    let v00 = clip.sample(t, y0, x0, c) as f64;
                    let v01 = clip.sample(t, y0, x1, c) as f64;
                    let v10 = clip.sample(t, y1, x0, c) as f64;
                    let v11 = clip.sample(t, y1, x1, c) as f64;
                    let top = v00 * (1.0 - fx) + v01 * fx;
                    let bottom = v10 * (1.0 - fx) + v11 * fx;
                    let value = top * (1.0 - fy) + bottom * fy;
                    out.set_sample(t, y, x, c, value.round().clamp(0.0, 255.0) as u8);
                }
            }
        }
    }
    Ok(out)
}

/// Selects every `clip.frames()/target_t`-th frame, keeping spatial content
/// untouched. The source length must be a whole multiple of the target.
pub fn subsample_frames(clip: &Clip, target_t: usize) -> Result<Clip, ClipError> {
    if target_t == 0 || clip.frames() % target_t != 0 {
        return Err(ClipError::EmptyDimensions { t: target_t, h: clip.height(), w: clip.width() });
    }
    let stride = clip.frames() / target_t;
    if stride == 1 {
        return Ok(clip.clone());
    }
    let mut samples = Vec::with_capacity(target_t * clip.height() * clip.width() * CHANNELS);
    for i in 0..target_t {
        samples.extend_from_slice(clip.frame(i * stride));
    }
    Clip::from_samples(target_t, clip.height(), clip.width(), samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    /// Clip whose every pixel encodes its own frame index.
    fn frame_indexed(t: usize, h: usize, w: usize) -> Clip {
        let mut clip = Clip::new(t, h, w).unwrap();
        for f in 0..t {
            let v = (f % 256) as u8;
            for y in 0..h {
                for x in 0..w {
                    clip.set_pixel(f, y, x, [v, v, v]);
                }
            }
        }
        clip
    }

    fn frame_value(clip: &Clip, t: usize) -> u8 {
        clip.sample(t, 0, 0, 0)
    }

    #[test]
    fn localize_centers_the_window() {
        let raw = frame_indexed(200, 2, 2);
        let cut = localize_clip(&raw, FpocAnnotation { frame: 100 }).unwrap();
        assert_eq!(cut.frames(), 32);
        for (i, expected) in (85..=116).enumerate() {
            assert_eq!(frame_value(&cut, i) as usize, expected);
        }
    }

    #[test]
    fn localize_replicates_leading_edge() {
        let raw = frame_indexed(200, 2, 2);
        let cut = localize_clip(&raw, FpocAnnotation { frame: 5 }).unwrap();
        assert_eq!(cut.frames(), 32);
        for i in 0..10 {
            assert_eq!(frame_value(&cut, i), 0);
        }
        for i in 0..=21 {
            assert_eq!(frame_value(&cut, 10 + i) as usize, i);
        }
    }

    #[test]
    fn localize_replicates_trailing_edge() {
        let raw = frame_indexed(200, 2, 2);
        let cut = localize_clip(&raw, FpocAnnotation { frame: 195 }).unwrap();
        assert_eq!(cut.frames(), 32);
        for (i, expected) in (180..=199).enumerate() {
            assert_eq!(frame_value(&cut, i) as usize, expected % 256);
        }
        for i in 20..32 {
            assert_eq!(frame_value(&cut, i) as usize, 199);
        }
    }

    #[test]
    fn localize_rejects_out_of_range_fpoc() {
        let raw = frame_indexed(10, 2, 2);
        assert_eq!(
            localize_clip(&raw, FpocAnnotation { frame: 10 }),
            Err(ClipError::InvalidFpoc { fpoc: 10, frames: 10 })
        );
    }

    #[test]
    fn resize_changes_shape_only() {
        let clip = frame_indexed(32, 64, 64);
        let resized = resize_clip(&clip, 224, 224).unwrap();
        assert_eq!(resized.frames(), 32);
        assert_eq!(resized.height(), 224);
        assert_eq!(resized.width(), 224);
    }

    #[test]
    fn resize_to_same_shape_is_identity() {
        let mut clip = Clip::new(2, 7, 5).unwrap();
        for (i, s) in clip.samples_mut().iter_mut().enumerate() {
            *s = (i * 31 % 256) as u8;
        }
        let resized = resize_clip(&clip, 7, 5).unwrap();
        assert_eq!(resized, clip);
    }

    #[test]
    fn resize_preserves_constant_frames() {
        let mut clip = Clip::new(1, 9, 13).unwrap();
        clip.samples_mut().fill(77);
        let resized = resize_clip(&clip, 17, 4).unwrap();
        assert!(resized.samples().iter().all(|&v| v == 77));
    }

    #[test]
    fn subsample_takes_uniform_strides() {
        let clip = frame_indexed(32, 2, 2);
        let sub = subsample_frames(&clip, 8).unwrap();
        assert_eq!(sub.frames(), 8);
        for i in 0..8 {
            assert_eq!(frame_value(&sub, i) as usize, i * 4);
        }
        assert_eq!(subsample_frames(&clip, 32).unwrap(), clip);
        assert!(subsample_frames(&clip, 5).is_err());
    }

    #[test]
    fn binary_mapping_covers_all_scores() {
        assert_eq!(SattLabel::new(0).unwrap().binary(), BinaryLabel::Risky);
        assert_eq!(SattLabel::new(1).unwrap().binary(), BinaryLabel::Risky);
        assert_eq!(SattLabel::new(2).unwrap().binary(), BinaryLabel::Safe);
        assert_eq!(SattLabel::new(3).unwrap().binary(), BinaryLabel::Safe);
        assert_eq!(SattLabel::new(4), Err(ClipError::InvalidScore(4)));
    }

    #[test]
    fn manifest_counts_classes() {
        let entries: Vec<ManifestEntry> = (0..733)
            .map(|i| ManifestEntry {
                path: alloc::format!("clip{i}.tckl"),
                label: SattLabel::new(if i < 259 { 1 } else { 2 }).unwrap(),
                fpoc: FpocAnnotation { frame: 20 },
                source_id: alloc::format!("v{i}"),
            })
            .collect();
        let manifest = DatasetManifest::new(entries).unwrap();
        let counts = manifest.class_counts();
        assert_eq!(counts.risky, 259);
        assert_eq!(counts.safe, 474);
        assert_eq!(counts.total(), 733);
    }

    #[test]
    fn manifest_rejects_duplicate_ids() {
        let entry = ManifestEntry {
            path: "a.tckl".to_string(),
            label: SattLabel::new(0).unwrap(),
            fpoc: FpocAnnotation { frame: 0 },
            source_id: "dup".to_string(),
        };
        let err = DatasetManifest::new(alloc::vec![entry.clone(), entry]).unwrap_err();
        assert_eq!(err, ClipError::DuplicateSourceId("dup".to_string()));
    }

    #[test]
    fn empty_manifest_has_empty_counts() {
        let manifest = DatasetManifest::new(Vec::new()).unwrap();
        assert_eq!(manifest.class_counts(), ClassCounts::default());
    }

    proptest! {
        #[test]
        fn localized_clips_always_have_32_frames(raw_t in 1usize..300, seed in 0u64..1000) {
            let raw = frame_indexed(raw_t, 2, 2);
            let fpoc = FpocAnnotation { frame: (seed as usize) % raw_t };
            let cut = localize_clip(&raw, fpoc).unwrap();
            prop_assert_eq!(cut.frames(), 32);
            prop_assert_eq!(frame_value(&cut, 15), frame_value(&raw, fpoc.frame));
        }
    }
}
