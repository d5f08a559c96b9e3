//! Block-compressed sparse row storage for the interior operator. One block
//! row per (field, element); block columns are sorted ascending within each
//! row, so products are reproducible bit-for-bit in both execution modes.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::par::{for_each_chunk, ExecMode};

#[derive(Debug, Clone)]
pub struct BlockCsr {
    /// Modes per block (square blocks).
    pub block_size: usize,
    pub n_block_rows: usize,
    pub n_block_cols: usize,
    pub row_ptr: Vec<usize>,
    pub cols: Vec<u32>,
    /// Row-major block entries, `block_size^2` per column entry.
    pub vals: Vec<f64>,
}

impl BlockCsr {
    /// Scalar nonzeros (counting stored blocks as dense).
    pub fn nnz(&self) -> usize {
        self.cols.len() * self.block_size * self.block_size
    }

    /// y = A x
    pub fn spmv(&self, x: &[f64], y: &mut [f64], mode: ExecMode) {
        let bs = self.block_size;
        debug_assert_eq!(x.len(), self.n_block_cols * bs);
        debug_assert_eq!(y.len(), self.n_block_rows * bs);
        let row_ptr = &self.row_ptr;
        let cols = &self.cols;
        let vals = &self.vals;
        // chunk in block rows; each output row is written by exactly one task
        let rows_per_chunk = (self.n_block_rows / (4 * rayon_threads()).max(1)).max(16);
        for_each_chunk(mode, y, rows_per_chunk * bs, |start, y_chunk| {
            let row0 = start / bs;
            let n_rows = y_chunk.len() / bs;
            let mut acc = [0.0f64; 32];
            for r in 0..n_rows {
                let row = row0 + r;
                let acc = &mut acc[..bs];
                acc.fill(0.0);
                for idx in row_ptr[row]..row_ptr[row + 1] {
                    let col = cols[idx] as usize;
                    let xb = &x[col * bs..(col + 1) * bs];
                    let block = &vals[idx * bs * bs..(idx + 1) * bs * bs];
                    for m in 0..bs {
                        let brow = &block[m * bs..m * bs + bs];
                        let mut s = 0.0;
                        for n in 0..bs {
                            s += brow[n] * xb[n];
                        }
                        acc[m] += s;
                    }
                }
                y_chunk[r * bs..r * bs + bs].copy_from_slice(acc);
            }
        });
    }

    /// Scalar entry lookup (zero when outside the stored pattern); used by
    /// tests and the matrix-market dump.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        let bs = self.block_size;
        let (brow, m) = (row / bs, row % bs);
        let (bcol, n) = (col / bs, col % bs);
        for idx in self.row_ptr[brow]..self.row_ptr[brow + 1] {
            if self.cols[idx] as usize == bcol {
                return self.vals[idx * bs * bs + m * bs + n];
            }
        }
        0.0
    }

    /// Dump in MatrixMarket coordinate text format (1-based indices).
    pub fn write_matrix_market(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        let mut w = std::io::BufWriter::new(file);
        let bs = self.block_size;
        let n = self.n_block_rows * bs;
        let m = self.n_block_cols * bs;
        let mut write = || -> std::io::Result<()> {
            writeln!(w, "%%MatrixMarket matrix coordinate real general")?;
            writeln!(w, "{} {} {}", n, m, self.nnz())?;
            for brow in 0..self.n_block_rows {
                for idx in self.row_ptr[brow]..self.row_ptr[brow + 1] {
                    let bcol = self.cols[idx] as usize;
                    let block = &self.vals[idx * bs * bs..(idx + 1) * bs * bs];
                    for r in 0..bs {
                        for c in 0..bs {
                            writeln!(w, "{} {} {}", brow * bs + r + 1, bcol * bs + c + 1, block[r * bs + c])?;
                        }
                    }
                }
            }
            Ok(())
        };
        write().map_err(|e| Error::io(path, e))
    }
}

fn rayon_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Row-by-row builder; rows must be appended in order with ascending column
/// indices inside each row.
#[derive(Debug)]
pub struct BlockCsrBuilder {
    block_size: usize,
    n_block_cols: usize,
    row_ptr: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<f64>,
}

impl BlockCsrBuilder {
    pub fn new(block_size: usize, n_block_cols: usize) -> Self {
        assert!(block_size <= 32, "block kernel buffer caps the mode count at 32");
        Self { block_size, n_block_cols, row_ptr: vec![0], cols: Vec::new(), vals: Vec::new() }
    }

    /// Append one block to the current row.
    pub fn push_block(&mut self, col: usize, block: &[f64]) {
        debug_assert_eq!(block.len(), self.block_size * self.block_size);
        debug_assert!(col < self.n_block_cols);
        debug_assert!(
            self.row_ptr.len() == 1
                || self.cols.len() == *self.row_ptr.last().unwrap()
                || *self.cols.last().unwrap() < col as u32,
            "columns must be strictly ascending within a row"
        );
        self.cols.push(col as u32);
        self.vals.extend_from_slice(block);
    }

    pub fn finish_row(&mut self) {
        self.row_ptr.push(self.cols.len());
    }

    pub fn build(self) -> BlockCsr {
        BlockCsr {
            block_size: self.block_size,
            n_block_rows: self.row_ptr.len() - 1,
            n_block_cols: self.n_block_cols,
            row_ptr: self.row_ptr,
            cols: self.cols,
            vals: self.vals,
        }
    }
}
