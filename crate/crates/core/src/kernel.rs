//! Sumset kernels over nonnegative offsets.
//!
//! All kernels take the elements of a set as strictly increasing offsets
//! from its minimum (so the first offset is 0). The dense kernel keeps one
//! bit per possible sum and builds `hA` by `h - 1` rounds of shift-or; the
//! restricted variant keeps one bit layer per number of distinct summands.
//! The sparse kernel does the same work on sorted vectors with merges.

use alloc::vec;
use alloc::vec::Vec;
use core::mem;

use crate::error::{Error, Result};

/// Which representation to use for intermediate sumsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Kernel {
    /// Pick per call from the diameter threshold and a cost estimate.
    #[default]
    Auto,
    /// Bit vectors over `[0, h * diameter]`.
    Dense,
    /// Sorted vectors combined by merging.
    Sparse,
}

/// Largest `h * diameter` the dense kernel will allocate bits for.
pub const DENSE_MAX_SPAN: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelConfig {
    pub kernel: Kernel,
    /// Sets with a larger diameter always go to the sparse kernel.
    pub dense_max_diameter: u64,
}

impl Default for KernelConfig {
    fn default() -> Self {
        KernelConfig {
            kernel: Kernel::Auto,
            dense_max_diameter: 1 << 26,
        }
    }
}

impl KernelConfig {
    pub fn dense() -> Self {
        KernelConfig {
            kernel: Kernel::Dense,
            ..Default::default()
        }
    }

    pub fn sparse() -> Self {
        KernelConfig {
            kernel: Kernel::Sparse,
            ..Default::default()
        }
    }

    /// Resolves `Auto` to a concrete kernel for one call.
    pub fn choose(&self, k: usize, h: usize, diameter: u64, restricted: bool) -> Result<Kernel> {
        let span = (h as u64).checked_mul(diameter).ok_or(Error::Overflow)?;
        let dense_ok = diameter <= self.dense_max_diameter && span <= DENSE_MAX_SPAN;
        match self.kernel {
            Kernel::Sparse => Ok(Kernel::Sparse),
            Kernel::Dense if dense_ok => Ok(Kernel::Dense),
            Kernel::Dense => Err(Error::Domain(alloc::format!(
                "dense kernel cannot hold span {} (diameter limit {}, span limit {})",
                span,
                self.dense_max_diameter,
                DENSE_MAX_SPAN
            ))),
            Kernel::Auto if !dense_ok => Ok(Kernel::Sparse),
            Kernel::Auto => {
                let words = span / 64 + 1;
                let bound = if restricted {
                    binom_saturating(k as u64, h as u64)
                } else {
                    binom_saturating((k + h - 1) as u64, h as u64)
                }
                .min(span + 1);
                // A word operation covers 64 candidate sums; a merge step
                // touches one element at a time.
                if words <= bound.saturating_mul(2) {
                    Ok(Kernel::Dense)
                } else {
                    Ok(Kernel::Sparse)
                }
            }
        }
    }
}

/// `C(n, r)`, capped at `u64::MAX`.
pub fn binom_saturating(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=r {
        acc = acc * (n - r + i) as u128 / i as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[derive(Clone, Copy)]
enum Out {
    DenseCur,
    DenseLayer,
    SparseCur,
    SparseLayer,
    Empty,
}

/// Reusable buffers for repeated sumset evaluation.
///
/// The explorer evaluates millions of small sets; keeping the buffers
/// between calls avoids an allocation per candidate.
#[derive(Debug, Default, Clone)]
pub struct Sizer {
    config: KernelConfig,
    cur: Vec<u64>,
    next: Vec<u64>,
    tmp: Vec<u64>,
    layers: Vec<Vec<u64>>,
    h: usize,
}

impl Sizer {
    pub fn new(config: KernelConfig) -> Self {
        Sizer {
            config,
            ..Default::default()
        }
    }

    pub fn config(&self) -> &KernelConfig {
        &self.config
    }

    /// `|hA|` (or `|ĥA|`) for the set with the given offsets.
    pub fn size(&mut self, offs: &[u64], h: usize, restricted: bool) -> Result<usize> {
        Ok(match self.run(offs, h, restricted)? {
            Out::DenseCur => popcount(&self.cur),
            Out::DenseLayer => popcount(&self.layers[self.h]),
            Out::SparseCur => self.cur.len(),
            Out::SparseLayer => self.layers[self.h].len(),
            Out::Empty => 0,
        })
    }

    /// Offsets (from `h * min`) of every element of `hA` (or `ĥA`), ascending.
    pub fn elements(&mut self, offs: &[u64], h: usize, restricted: bool) -> Result<Vec<u64>> {
        Ok(match self.run(offs, h, restricted)? {
            Out::DenseCur => bits_to_vec(&self.cur),
            Out::DenseLayer => bits_to_vec(&self.layers[self.h]),
            Out::SparseCur => self.cur.clone(),
            Out::SparseLayer => self.layers[self.h].clone(),
            Out::Empty => Vec::new(),
        })
    }

    /// `[|1A|, |2A|, ..., |max_h A|]`, computing each sumset from the previous one.
    pub fn sizes_up_to(&mut self, offs: &[u64], max_h: usize) -> Result<Vec<usize>> {
        check_input(offs, max_h)?;
        let d = *offs.last().unwrap();
        let mut sizes = Vec::with_capacity(max_h);
        match self.config.choose(offs.len(), max_h, d, false)? {
            Kernel::Dense => {
                let words = dense_words(max_h, d);
                reset(&mut self.cur, words);
                reset(&mut self.next, words);
                for &a in offs {
                    set_bit(&mut self.cur, a);
                }
                sizes.push(offs.len());
                let mut extent = d + 1;
                for _ in 1..max_h {
                    self.dense_step(offs, extent, d);
                    extent += d;
                    sizes.push(popcount(&self.cur));
                }
            }
            _ => {
                self.cur.clear();
                self.cur.extend_from_slice(offs);
                sizes.push(offs.len());
                for _ in 1..max_h {
                    self.sparse_step(offs);
                    sizes.push(self.cur.len());
                }
            }
        }
        Ok(sizes)
    }

    fn run(&mut self, offs: &[u64], h: usize, restricted: bool) -> Result<Out> {
        check_input(offs, h)?;
        let k = offs.len();
        if restricted && h > k {
            return Ok(Out::Empty);
        }
        let d = *offs.last().unwrap();
        let kernel = self.config.choose(k, h, d, restricted)?;
        self.h = h;
        Ok(match (kernel, restricted) {
            (Kernel::Dense, false) => {
                let words = dense_words(h, d);
                reset(&mut self.cur, words);
                reset(&mut self.next, words);
                for &a in offs {
                    set_bit(&mut self.cur, a);
                }
                let mut extent = d + 1;
                for _ in 1..h {
                    self.dense_step(offs, extent, d);
                    extent += d;
                }
                Out::DenseCur
            }
            (Kernel::Dense, true) => {
                self.dense_restricted(offs, h, d);
                Out::DenseLayer
            }
            (_, false) => {
                self.cur.clear();
                self.cur.extend_from_slice(offs);
                for _ in 1..h {
                    self.sparse_step(offs);
                }
                Out::SparseCur
            }
            (_, true) => {
                self.sparse_restricted(offs, h);
                Out::SparseLayer
            }
        })
    }

    /// `cur <- cur + A` where `cur` has bits only below `extent`.
    fn dense_step(&mut self, offs: &[u64], extent: u64, d: u64) {
        let src_words = (extent as usize).div_ceil(64);
        let dst_words = ((extent + d) as usize).div_ceil(64) + 1;
        let dst_words = dst_words.min(self.next.len());
        self.next[..dst_words].fill(0);
        for &a in offs {
            or_shifted(&mut self.next, &self.cur[..src_words], a as usize);
        }
        mem::swap(&mut self.cur, &mut self.next);
    }

    fn dense_restricted(&mut self, offs: &[u64], h: usize, d: u64) {
        let k = offs.len();
        let words = dense_words(h, d);
        self.layers.resize_with(h + 1, Vec::new);
        for layer in &mut self.layers[..=h] {
            reset(layer, words);
        }
        set_bit(&mut self.layers[0], 0);
        for (i, &a) in offs.iter().enumerate() {
            let top = h.min(i + 1);
            // Layers that cannot reach h with the remaining elements are dead.
            let low = h.saturating_sub(k - 1 - i).max(1);
            for j in (low..=top).rev() {
                let (lo, hi) = self.layers.split_at_mut(j);
                let src_bits = (j as u64 - 1) * d + 1;
                let src_words = (src_bits as usize).div_ceil(64).min(words);
                or_shifted(&mut hi[0], &lo[j - 1][..src_words], a as usize);
            }
        }
    }

    /// `cur <- cur + A` on sorted vectors.
    fn sparse_step(&mut self, offs: &[u64]) {
        // offs[0] == 0, so the unshifted copy seeds the accumulator.
        self.next.clear();
        self.next.extend_from_slice(&self.cur);
        for &a in &offs[1..] {
            merge_dedup(&self.next, self.cur.iter().map(|&x| x + a), &mut self.tmp);
            mem::swap(&mut self.next, &mut self.tmp);
        }
        mem::swap(&mut self.cur, &mut self.next);
    }

    fn sparse_restricted(&mut self, offs: &[u64], h: usize) {
        let k = offs.len();
        self.layers.resize_with(h + 1, Vec::new);
        for layer in &mut self.layers[..=h] {
            layer.clear();
        }
        self.layers[0].push(0);
        for (i, &a) in offs.iter().enumerate() {
            let top = h.min(i + 1);
            let low = h.saturating_sub(k - 1 - i).max(1);
            for j in (low..=top).rev() {
                let (lo, hi) = self.layers.split_at_mut(j);
                merge_dedup(&hi[0], lo[j - 1].iter().map(|&x| x + a), &mut self.tmp);
                mem::swap(&mut hi[0], &mut self.tmp);
            }
        }
    }
}

fn check_input(offs: &[u64], h: usize) -> Result<()> {
    if offs.is_empty() {
        return Err(Error::EmptySet);
    }
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    debug_assert_eq!(offs[0], 0);
    debug_assert!(offs.windows(2).all(|w| w[0] < w[1]));
    (h as u64)
        .checked_mul(*offs.last().unwrap())
        .ok_or(Error::Overflow)?;
    Ok(())
}

fn dense_words(h: usize, d: u64) -> usize {
    ((h as u64 * d + 1) as usize).div_ceil(64) + 1
}

fn reset(v: &mut Vec<u64>, words: usize) {
    v.clear();
    v.resize(words, 0);
}

fn set_bit(v: &mut [u64], i: u64) {
    v[(i / 64) as usize] |= 1 << (i % 64);
}

fn popcount(v: &[u64]) -> usize {
    v.iter().map(|w| w.count_ones() as usize).sum()
}

fn bits_to_vec(v: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(popcount(v));
    for (i, &w) in v.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let t = w.trailing_zeros() as u64;
            out.push(i as u64 * 64 + t);
            w &= w - 1;
        }
    }
    out
}

/// `dst |= src << shift` over little-endian word vectors.
fn or_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    if bs == 0 {
        for (d, &s) in dst[ws..].iter_mut().zip(src) {
            *d |= s;
        }
    } else {
        let n = dst.len();
        for (i, &s) in src.iter().enumerate() {
            if s == 0 {
                continue;
            }
            let j = i + ws;
            dst[j] |= s << bs;
            if j + 1 < n {
                dst[j + 1] |= s >> (64 - bs);
            }
        }
    }
}

/// Union of two ascending sequences into `out`.
fn merge_dedup<I: Iterator<Item = u64>>(a: &[u64], b: I, out: &mut Vec<u64>) {
    out.clear();
    out.reserve(a.len());
    let mut a = a.iter().copied().peekable();
    let mut b = b.peekable();
    loop {
        let v = match (a.peek(), b.peek()) {
            (Some(&x), Some(&y)) => {
                if x < y {
                    a.next();
                    x
                } else if y < x {
                    b.next();
                    y
                } else {
                    a.next();
                    b.next();
                    x
                }
            }
            (Some(&x), None) => {
                a.next();
                x
            }
            (None, Some(&y)) => {
                b.next();
                y
            }
            (None, None) => break,
        };
        out.push(v);
    }
}

/// One-shot helper used by tests and small callers.
pub fn dense_bits(offs: &[u64]) -> Vec<u64> {
    let d = offs.last().copied().unwrap_or(0);
    let mut v = vec![0; dense_words(1, d)];
    for &a in offs {
        set_bit(&mut v, a);
    }
    v
}
