//! Histogram of oriented gradients over non-overlapping cells.
//!
//! Gradients use centered differences with replicated borders. Orientations
//! are unsigned (folded into `[0, 180)` degrees) and votes are linearly
//! interpolated between the two nearest bin centers, weighted by gradient
//! magnitude. Blocks stride by their own side, so with the default
//! block = cell there is no overlap and the output length is
//! `floor(W / cell) * floor(H / cell) * bins`.

use crate::imaging::GrayImage;

use super::{Descriptor, EncodeError, HogParams};

/// Centered-difference gradient maps with replicated borders.
pub(crate) fn gradient_maps(image: &GrayImage) -> (Vec<f32>, Vec<f32>) {
    let (w, h) = (image.width(), image.height());
    let px = image.pixels();
    let mut gx = vec![0.0f32; w * h];
    let mut gy = vec![0.0f32; w * h];
    for y in 0..h {
        let y_up = y.saturating_sub(1);
        let y_dn = (y + 1).min(h - 1);
        for x in 0..w {
            let x_lf = x.saturating_sub(1);
            let x_rt = (x + 1).min(w - 1);
            gx[y * w + x] = px[y * w + x_rt] - px[y * w + x_lf];
            gy[y * w + x] = px[y_dn * w + x] - px[y_up * w + x];
        }
    }
    (gx, gy)
}

/// Adds the orientation votes of one `cw x ch` window at `(x0, y0)` into
/// `hist` (length `bins`). Votes split linearly between the two nearest bin
/// centers, which sit at multiples of `180 / bins` degrees and wrap.
pub(crate) fn accumulate_cell_histogram(
    gx: &[f32],
    gy: &[f32],
    width: usize,
    x0: usize,
    y0: usize,
    cw: usize,
    ch: usize,
    hist: &mut [f64],
) {
    let bins = hist.len();
    let bin_width = std::f64::consts::PI / bins as f64;
    for y in y0..y0 + ch {
        for x in x0..x0 + cw {
            let dx = gx[y * width + x] as f64;
            let dy = gy[y * width + x] as f64;
            let mag = (dx * dx + dy * dy).sqrt();
            if mag == 0.0 {
                continue;
            }
            let mut theta = dy.atan2(dx);
            if theta < 0.0 {
                theta += std::f64::consts::PI;
            }
            if theta >= std::f64::consts::PI {
                theta = 0.0;
            }
            let t = theta / bin_width;
            let lower = t.floor();
            let frac = t - lower;
            let b0 = (lower as usize) % bins;
            let b1 = (b0 + 1) % bins;
            hist[b0] += mag * (1.0 - frac);
            hist[b1] += mag * frac;
        }
    }
}

/// L2 normalization with an epsilon floor: `v / sqrt(|v|^2 + eps^2)`.
pub(crate) fn normalize_block(block: &mut [f64], epsilon: f32) {
    let norm_sq: f64 = block.iter().map(|v| v * v).sum();
    let denom = (norm_sq + (epsilon as f64) * (epsilon as f64)).sqrt();
    for v in block.iter_mut() {
        *v /= denom;
    }
}

/// Encodes an image as a dense HOG vector.
pub fn encode_hog(image: &GrayImage, params: &HogParams) -> Result<Descriptor, EncodeError> {
    params.validate()?;
    let (w, h) = (image.width(), image.height());
    if w < params.cell_side || h < params.cell_side {
        return Err(EncodeError::ImageTooSmall {
            width: w,
            height: h,
            required: params.cell_side,
        });
    }

    let (gx, gy) = gradient_maps(image);
    let cells_x = w / params.cell_side;
    let cells_y = h / params.cell_side;
    let bins = params.bins;

    let mut cell_hists = vec![0.0f64; cells_x * cells_y * bins];
    for cy in 0..cells_y {
        for cx in 0..cells_x {
            let hist = &mut cell_hists[(cy * cells_x + cx) * bins..(cy * cells_x + cx + 1) * bins];
            accumulate_cell_histogram(
                &gx,
                &gy,
                w,
                cx * params.cell_side,
                cy * params.cell_side,
                params.cell_side,
                params.cell_side,
                hist,
            );
        }
    }

    // Blocks tile the cell grid with stride = block side (no overlap).
    let cells_per_block = params.block_side / params.cell_side;
    let blocks_x = cells_x / cells_per_block;
    let blocks_y = cells_y / cells_per_block;
    let block_len = cells_per_block * cells_per_block * bins;

    let mut out = Vec::with_capacity(blocks_x * blocks_y * block_len);
    let mut block = vec![0.0f64; block_len];
    for by in 0..blocks_y {
        for bx in 0..blocks_x {
            for icy in 0..cells_per_block {
                for icx in 0..cells_per_block {
                    let cy = by * cells_per_block + icy;
                    let cx = bx * cells_per_block + icx;
                    let src = &cell_hists[(cy * cells_x + cx) * bins..(cy * cells_x + cx + 1) * bins];
                    let dst = (icy * cells_per_block + icx) * bins;
                    block[dst..dst + bins].copy_from_slice(src);
                }
            }
            normalize_block(&mut block, params.epsilon);
            out.extend(block.iter().map(|&v| v as f32));
        }
    }
    Ok(Descriptor::Dense(out))
}
