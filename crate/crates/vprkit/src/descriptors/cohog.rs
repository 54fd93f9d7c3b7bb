//! Training-free regional descriptor: entropy-selected patches described by
//! local gradient histograms.
//!
//! The image is quantized to 8-bit intensities and tiled into non-overlapping
//! `patch_side` windows. Patches whose Shannon entropy reaches
//! `entropy_threshold` times the maximum attainable entropy (8 bits for 256
//! gray levels) become regions; if none qualifies, the single highest-entropy
//! patch is used so the descriptor is never empty. Each region is described
//! by an L2-normalized histogram-of-gradients vector over its cells.

use crate::imaging::{resample, GrayImage};

use super::hog::{accumulate_cell_histogram, gradient_maps, normalize_block};
use super::{CohogParams, Descriptor, EncodeError, Region};

const GRAY_LEVELS: usize = 256;
const MAX_ENTROPY_BITS: f64 = 8.0;

/// Shannon entropy, in bits, of the 8-bit intensities in one patch.
fn patch_entropy(quantized: &[u8], width: usize, x0: usize, y0: usize, side: usize) -> f64 {
    let mut hist = [0u32; GRAY_LEVELS];
    for y in y0..y0 + side {
        for x in x0..x0 + side {
            hist[quantized[y * width + x] as usize] += 1;
        }
    }
    let total = (side * side) as f64;
    let mut entropy = 0.0;
    for &count in hist.iter() {
        if count > 0 {
            let p = count as f64 / total;
            entropy -= p * p.log2();
        }
    }
    entropy
}

/// Entropy of every non-overlapping patch, in row-major patch order.
/// Shared with tests and exposed so region-selection behavior can be
/// inspected without running the full encoder.
pub fn entropy_map(image: &GrayImage, patch_side: usize) -> Vec<f64> {
    let quantized: Vec<u8> = image
        .pixels()
        .iter()
        .map(|&p| (p * 255.0).round().clamp(0.0, 255.0) as u8)
        .collect();
    let patches_x = image.width() / patch_side;
    let patches_y = image.height() / patch_side;
    let mut out = Vec::with_capacity(patches_x * patches_y);
    for py in 0..patches_y {
        for px in 0..patches_x {
            out.push(patch_entropy(
                &quantized,
                image.width(),
                px * patch_side,
                py * patch_side,
                patch_side,
            ));
        }
    }
    out
}

/// Encodes an image as a set of regional vectors.
pub fn encode_cohog(image: &GrayImage, params: &CohogParams) -> Result<Descriptor, EncodeError> {
    params.validate()?;
    let resized;
    let working = match params.internal_side {
        Some(side) => {
            resized = resample(image, side, side);
            &resized
        }
        None => image,
    };
    let (w, h) = (working.width(), working.height());
    if w < params.patch_side || h < params.patch_side {
        return Err(EncodeError::ImageTooSmall {
            width: w,
            height: h,
            required: params.patch_side,
        });
    }

    let patch = params.patch_side;
    let patches_x = w / patch;
    let entropies = entropy_map(working, patch);
    let threshold = params.entropy_threshold * MAX_ENTROPY_BITS;

    let mut selected: Vec<usize> = entropies
        .iter()
        .enumerate()
        .filter(|(_, &e)| e >= threshold)
        .map(|(i, _)| i)
        .collect();
    if selected.is_empty() {
        // Fallback: the single highest-entropy patch, first on ties.
        let best = entropies
            .iter()
            .enumerate()
            .fold(0usize, |best, (i, &e)| if e > entropies[best] { i } else { best });
        selected.push(best);
    }

    let (gx, gy) = gradient_maps(working);
    let cells_per_patch = patch / params.cell_side;
    let vector_len = cells_per_patch * cells_per_patch * params.bins;

    let regions = selected
        .into_iter()
        .map(|patch_idx| {
            let px = patch_idx % patches_x;
            let py = patch_idx / patches_x;
            let x0 = px * patch;
            let y0 = py * patch;
            let mut vector = vec![0.0f64; vector_len];
            for cy in 0..cells_per_patch {
                for cx in 0..cells_per_patch {
                    let hist_start = (cy * cells_per_patch + cx) * params.bins;
                    accumulate_cell_histogram(
                        &gx,
                        &gy,
                        w,
                        x0 + cx * params.cell_side,
                        y0 + cy * params.cell_side,
                        params.cell_side,
                        params.cell_side,
                        &mut vector[hist_start..hist_start + params.bins],
                    );
                }
            }
            normalize_block(&mut vector, 1e-6);
            Region {
                center_x: (x0 + patch / 2) as f32,
                center_y: (y0 + patch / 2) as f32,
                vector: vector.into_iter().map(|v| v as f32).collect(),
            }
        })
        .collect();
    Ok(Descriptor::Regional(regions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::imaging::{resize, synth_image, synth_scene, Resolution, SynthPattern};

    fn regional(d: Descriptor) -> Vec<Region> {
        match d {
            Descriptor::Regional(r) => r,
            other => panic!("expected regional descriptor, got {:?}", other.kind()),
        }
    }

    #[test]
    fn constant_image_falls_back_to_one_region() {
        let img = synth_image(SynthPattern::Constant, 64, 0);
        let regions = regional(encode_cohog(&img, &CohogParams::default()).unwrap());
        assert_eq!(regions.len(), 1);
        // No gradients anywhere: the fallback region's vector is all zero.
        assert!(regions[0].vector.iter().all(|&v| v == 0.0));
    }

    /// Independent oracle: recompute the 16 patch entropies from scratch and
    /// check that each clears the selection threshold, so the encoder must
    /// return all 16 regions.
    #[test]
    fn seeded_noise_selects_every_patch() {
        let img = synth_image(SynthPattern::SeededNoise, 64, 21);
        let params = CohogParams::default();

        let mut oracle_entropies = Vec::new();
        for py in 0..4usize {
            for px in 0..4usize {
                let mut hist = [0u32; 256];
                for y in 0..16usize {
                    for x in 0..16usize {
                        let p = img.get(px * 16 + x, py * 16 + y);
                        hist[(p * 255.0).round() as usize] += 1;
                    }
                }
                let mut e = 0.0f64;
                for &c in hist.iter() {
                    if c > 0 {
                        let p = c as f64 / 256.0;
                        e -= p * p.log2();
                    }
                }
                oracle_entropies.push(e);
            }
        }
        for (i, &e) in oracle_entropies.iter().enumerate() {
            assert!(e >= 0.4 * 8.0, "patch {i} entropy {e} below threshold");
        }

        let regions = regional(encode_cohog(&img, &params).unwrap());
        assert_eq!(regions.len(), 16);
    }

    #[test]
    fn region_count_grows_with_resolution() {
        let scene = synth_scene(512, 33);
        let small = resize(&scene, Resolution::new(128));
        let large = resize(&scene, Resolution::new(1024));
        let params = CohogParams::default();

        // Oracle on the entropy stage alone.
        let threshold = params.entropy_threshold * 8.0;
        let count = |img: &crate::imaging::GrayImage| {
            entropy_map(img, params.patch_side)
                .iter()
                .filter(|&&e| e >= threshold)
                .count()
                .max(1)
        };
        assert!(count(&large) >= count(&small));

        let small_regions = regional(encode_cohog(&small, &params).unwrap());
        let large_regions = regional(encode_cohog(&large, &params).unwrap());
        assert_eq!(small_regions.len(), count(&small));
        assert_eq!(large_regions.len(), count(&large));
        assert!(large_regions.len() >= small_regions.len());
    }

    #[test]
    fn centers_lie_on_the_patch_grid_and_vectors_are_normalized() {
        let img = synth_scene(128, 5);
        let params = CohogParams::default();
        let regions = regional(encode_cohog(&img, &params).unwrap());
        assert!(!regions.is_empty());
        for r in &regions {
            let cx = r.center_x as usize;
            let cy = r.center_y as usize;
            assert_eq!((cx - params.patch_side / 2) % params.patch_side, 0);
            assert_eq!((cy - params.patch_side / 2) % params.patch_side, 0);
            assert_eq!(r.vector.len(), params.bins);
            let norm = r.vector.iter().map(|&v| v as f64 * v as f64).sum::<f64>().sqrt();
            assert!(norm <= 1.0 + 1e-6);
            assert!((norm - 1.0).abs() < 1e-4, "norm {norm}");
        }
    }

    #[test]
    fn image_below_patch_side_is_rejected() {
        let img = synth_scene(15, 2);
        match encode_cohog(&img, &CohogParams::default()) {
            Err(EncodeError::ImageTooSmall { required: 16, .. }) => {}
            other => panic!("expected ImageTooSmall, got {other:?}"),
        }
    }

    #[test]
    fn internal_side_fixes_the_working_resolution() {
        let img = synth_scene(256, 8);
        let params = CohogParams {
            internal_side: Some(64),
            ..CohogParams::default()
        };
        let regions = regional(encode_cohog(&img, &params).unwrap());
        // 64x64 working image has a 4x4 patch grid.
        assert!(regions.len() <= 16);
        for r in &regions {
            assert!(r.center_x < 64.0 && r.center_y < 64.0);
        }
    }

    #[test]
    fn encoding_is_deterministic() {
        let img = synth_scene(128, 14);
        let a = regional(encode_cohog(&img, &CohogParams::default()).unwrap());
        let b = regional(encode_cohog(&img, &CohogParams::default()).unwrap());
        assert_eq!(a, b);
    }
}
