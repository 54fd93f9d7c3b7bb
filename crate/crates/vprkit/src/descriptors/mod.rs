//! The four handcrafted place-recognition encoders and their shared types.
//!
//! Each encoder maps a [`GrayImage`](crate::imaging::GrayImage) to a
//! [`Descriptor`]: HOG and GIST produce a single dense vector, CoHOG a set of
//! entropy-selected regional vectors, and ORB a set of oriented keypoints
//! with 256-bit binary strings. All encoders are pure functions; identical
//! inputs produce bit-identical outputs.

mod cohog;
mod gist;
mod hog;
mod orb;
mod orb_pattern;
pub mod serialize;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::imaging::GrayImage;

pub use cohog::encode_cohog;
pub use gist::encode_gist;
pub use hog::encode_hog;
pub use orb::encode_orb;

/// Errors raised by the encoders.
#[derive(Debug, Error)]
pub enum EncodeError {
    /// The input is too small for the requested configuration.
    #[error("image {width}x{height} is smaller than the required {required} px per side")]
    ImageTooSmall {
        width: usize,
        height: usize,
        required: usize,
    },
    /// No keypoint survived detection, or the image is smaller than the
    /// descriptor patch. This is an expected outcome on small or textureless
    /// inputs, not a crash; the evaluation layer records it as data.
    #[error("no keypoints detected")]
    NoKeypoints,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// One of the four supported pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Technique {
    Hog,
    Gist,
    Cohog,
    Orb,
}

impl Technique {
    pub const ALL: [Technique; 4] = [
        Technique::Hog,
        Technique::Gist,
        Technique::Cohog,
        Technique::Orb,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Technique::Hog => "hog",
            Technique::Gist => "gist",
            Technique::Cohog => "cohog",
            Technique::Orb => "orb",
        }
    }
}

impl fmt::Display for Technique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Technique {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hog" => Ok(Technique::Hog),
            "gist" => Ok(Technique::Gist),
            "cohog" => Ok(Technique::Cohog),
            "orb" => Ok(Technique::Orb),
            other => Err(format!(
                "unknown technique '{other}' (expected hog, gist, cohog or orb)"
            )),
        }
    }
}

/// Shape of a descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescriptorKind {
    Dense,
    Regional,
    Keypoints,
}

impl fmt::Display for DescriptorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DescriptorKind::Dense => "dense",
            DescriptorKind::Regional => "regional",
            DescriptorKind::Keypoints => "keypoints",
        })
    }
}

/// A 256-bit binary string, stored as four little-endian words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BitString256(pub [u64; 4]);

impl BitString256 {
    pub const BITS: usize = 256;

    #[inline]
    pub fn set(&mut self, index: usize) {
        debug_assert!(index < Self::BITS);
        self.0[index / 64] |= 1u64 << (index % 64);
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        debug_assert!(index < Self::BITS);
        (self.0[index / 64] >> (index % 64)) & 1 == 1
    }

    /// Number of differing bits.
    #[inline]
    pub fn hamming(&self, other: &BitString256) -> u32 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a ^ b).count_ones())
            .sum()
    }

    /// 32 bytes, word 0 first, each word little-endian.
    pub fn to_bytes(&self) -> [u8; 32] {
        let mut out = [0u8; 32];
        for (i, w) in self.0.iter().enumerate() {
            out[i * 8..(i + 1) * 8].copy_from_slice(&w.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8; 32]) -> Self {
        let mut words = [0u64; 4];
        for (i, w) in words.iter_mut().enumerate() {
            *w = u64::from_le_bytes(bytes[i * 8..(i + 1) * 8].try_into().unwrap());
        }
        BitString256(words)
    }

    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(hex: &str) -> Result<Self, String> {
        if hex.len() != 64 {
            return Err(format!("expected 64 hex chars, got {}", hex.len()));
        }
        let mut bytes = [0u8; 32];
        for (i, byte) in bytes.iter_mut().enumerate() {
            *byte = u8::from_str_radix(&hex[i * 2..i * 2 + 2], 16)
                .map_err(|e| format!("invalid hex at byte {i}: {e}"))?;
        }
        Ok(Self::from_bytes(&bytes))
    }
}

impl Serialize for BitString256 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for BitString256 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let hex = String::deserialize(deserializer)?;
        BitString256::from_hex(&hex).map_err(serde::de::Error::custom)
    }
}

/// One entropy-selected region: its center in pixel coordinates and its
/// local gradient-histogram vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub center_x: f32,
    pub center_y: f32,
    pub vector: Vec<f32>,
}

/// One oriented keypoint with subpixel base-image coordinates, orientation
/// in radians and a 256-bit binary descriptor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Keypoint {
    pub x: f32,
    pub y: f32,
    pub angle: f32,
    pub bits: BitString256,
}

/// Tagged union over the three descriptor shapes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Descriptor {
    Dense(Vec<f32>),
    Regional(Vec<Region>),
    Keypoints(Vec<Keypoint>),
}

impl Descriptor {
    pub fn kind(&self) -> DescriptorKind {
        match self {
            Descriptor::Dense(_) => DescriptorKind::Dense,
            Descriptor::Regional(_) => DescriptorKind::Regional,
            Descriptor::Keypoints(_) => DescriptorKind::Keypoints,
        }
    }

    pub fn as_dense(&self) -> Option<&[f32]> {
        match self {
            Descriptor::Dense(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_regional(&self) -> Option<&[Region]> {
        match self {
            Descriptor::Regional(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_keypoints(&self) -> Option<&[Keypoint]> {
        match self {
            Descriptor::Keypoints(k) => Some(k),
            _ => None,
        }
    }
}

/// HOG configuration. Defaults: 16 px cells, 16 px blocks (no overlap,
/// stride equals the block side), 9 unsigned orientation bins.
#[derive(Debug, Clone, PartialEq)]
pub struct HogParams {
    pub cell_side: usize,
    pub block_side: usize,
    pub bins: usize,
    pub epsilon: f32,
}

impl Default for HogParams {
    fn default() -> Self {
        HogParams {
            cell_side: 16,
            block_side: 16,
            bins: 9,
            epsilon: 1e-6,
        }
    }
}

impl HogParams {
    pub fn validate(&self) -> Result<(), EncodeError> {
        if self.cell_side < 2 {
            return Err(EncodeError::InvalidParams(format!(
                "cell_side must be at least 2, got {}",
                self.cell_side
            )));
        }
        if self.block_side < self.cell_side || self.block_side % self.cell_side != 0 {
            return Err(EncodeError::InvalidParams(format!(
                "block_side ({}) must be a positive multiple of cell_side ({})",
                self.block_side, self.cell_side
            )));
        }
        if self.bins < 2 {
            return Err(EncodeError::InvalidParams(format!(
                "bins must be at least 2, got {}",
                self.bins
            )));
        }
        if !(self.epsilon > 0.0) {
            return Err(EncodeError::InvalidParams(
                "epsilon must be positive".to_string(),
            ));
        }
        Ok(())
    }
}

/// GIST configuration: 4 scales x 8 orientations pooled on a 4x4 grid gives
/// the canonical 512-entry descriptor regardless of input resolution.
#[derive(Debug, Clone, PartialEq)]
pub struct GistParams {
    pub scales: usize,
    pub orientations: usize,
    pub grid: usize,
}

impl Default for GistParams {
    fn default() -> Self {
        GistParams {
            scales: 4,
            orientations: 8,
            grid: 4,
        }
    }
}

impl GistParams {
    /// Output length: `grid^2 * scales * orientations`.
    pub fn descriptor_len(&self) -> usize {
        self.grid * self.grid * self.scales * self.orientations
    }

    pub fn validate(&self) -> Result<(), EncodeError> {
        if self.scales == 0 || self.orientations == 0 || self.grid == 0 {
            return Err(EncodeError::InvalidParams(
                "scales, orientations and grid must all be at least 1".to_string(),
            ));
        }
        Ok(())
    }
}

/// CoHOG configuration. `entropy_threshold` is a fraction of the maximum
/// attainable patch entropy (8 bits for 256 gray levels); regions at or
/// above it are kept. `internal_side` optionally resizes the input to a
/// fixed square working resolution first (default: none, so descriptor cost
/// scales with the input).
#[derive(Debug, Clone, PartialEq)]
pub struct CohogParams {
    pub internal_side: Option<usize>,
    pub cell_side: usize,
    pub bins: usize,
    pub entropy_threshold: f64,
    pub patch_side: usize,
}

impl Default for CohogParams {
    fn default() -> Self {
        CohogParams {
            internal_side: None,
            cell_side: 16,
            bins: 8,
            entropy_threshold: 0.4,
            patch_side: 16,
        }
    }
}

impl CohogParams {
    pub fn validate(&self) -> Result<(), EncodeError> {
        if self.cell_side < 2 {
            return Err(EncodeError::InvalidParams(format!(
                "cell_side must be at least 2, got {}",
                self.cell_side
            )));
        }
        if self.patch_side < self.cell_side {
            return Err(EncodeError::InvalidParams(format!(
                "patch_side ({}) must be at least cell_side ({})",
                self.patch_side, self.cell_side
            )));
        }
        if self.bins < 2 {
            return Err(EncodeError::InvalidParams(format!(
                "bins must be at least 2, got {}",
                self.bins
            )));
        }
        if !(0.0..=1.0).contains(&self.entropy_threshold) {
            return Err(EncodeError::InvalidParams(format!(
                "entropy_threshold must be in [0, 1], got {}",
                self.entropy_threshold
            )));
        }
        if self.internal_side == Some(0) {
            return Err(EncodeError::InvalidParams(
                "internal_side must be at least 1".to_string(),
            ));
        }
        Ok(())
    }
}

/// ORB configuration. `fast_threshold` is an intensity delta on the 0-255
/// scale. `patch_side` bounds both the minimum usable image side and the
/// keypoint border margin; it must be odd and at least 21 so the rotated
/// sampling layout stays inside the margin.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbParams {
    pub max_features: usize,
    pub fast_threshold: f32,
    pub pyramid_levels: usize,
    pub scale_factor: f64,
    pub patch_side: usize,
}

impl Default for OrbParams {
    fn default() -> Self {
        OrbParams {
            max_features: 500,
            fast_threshold: 20.0,
            pyramid_levels: 8,
            scale_factor: 1.2,
            patch_side: 31,
        }
    }
}

impl OrbParams {
    pub fn validate(&self) -> Result<(), EncodeError> {
        if self.max_features == 0 {
            return Err(EncodeError::InvalidParams(
                "max_features must be at least 1".to_string(),
            ));
        }
        if self.patch_side % 2 == 0 || self.patch_side < 21 {
            return Err(EncodeError::InvalidParams(format!(
                "patch_side must be odd and at least 21, got {}",
                self.patch_side
            )));
        }
        if !(self.scale_factor > 1.0) {
            return Err(EncodeError::InvalidParams(format!(
                "scale_factor must be greater than 1, got {}",
                self.scale_factor
            )));
        }
        if self.pyramid_levels == 0 {
            return Err(EncodeError::InvalidParams(
                "pyramid_levels must be at least 1".to_string(),
            ));
        }
        if !(self.fast_threshold > 0.0) {
            return Err(EncodeError::InvalidParams(
                "fast_threshold must be positive".to_string(),
            ));
        }
        Ok(())
    }
}

/// Parameter bundle for all four pipelines.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PipelineParams {
    pub hog: HogParams,
    pub gist: GistParams,
    pub cohog: CohogParams,
    pub orb: OrbParams,
}

impl PipelineParams {
    pub fn validate(&self) -> Result<(), EncodeError> {
        self.hog.validate()?;
        self.gist.validate()?;
        self.cohog.validate()?;
        self.orb.validate()
    }

    /// Encodes with the selected technique.
    pub fn encode(&self, technique: Technique, image: &GrayImage) -> Result<Descriptor, EncodeError> {
        match technique {
            Technique::Hog => encode_hog(image, &self.hog),
            Technique::Gist => encode_gist(image, &self.gist),
            Technique::Cohog => encode_cohog(image, &self.cohog),
            Technique::Orb => encode_orb(image, &self.orb),
        }
    }
}
