//! Fixed-width bitset rows stored as `u64` words.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

#[inline]
pub(crate) fn clear(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1 << (i % 64));
}

#[inline]
pub(crate) fn test(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub(crate) fn popcount(bits: &[u64]) -> u64 {
    bits.iter().map(|w| w.count_ones() as u64).sum()
}

#[inline]
pub(crate) fn is_empty(bits: &[u64]) -> bool {
    bits.iter().all(|&w| w == 0)
}

pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut v = vec![u64::MAX; words_for(n)];
    if !n.is_multiple_of(64) {
        if let Some(last) = v.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    v
}

/// `dst = a & b`.
#[inline]
pub(crate) fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

/// `dst = a & b & {bits strictly above v}`.
#[inline]
pub(crate) fn and_above_into(dst: &mut [u64], a: &[u64], b: &[u64], v: usize) {
    let w = v / 64;
    for d in dst[..w].iter_mut() {
        *d = 0;
    }
    let shift = v % 64;
    let mask = if shift == 63 { 0 } else { u64::MAX << (shift + 1) };
    dst[w] = a[w] & b[w] & mask;
    for i in w + 1..dst.len() {
        dst[i] = a[i] & b[i];
    }
}

/// Iterator over set bit positions in increasing order.
pub(crate) struct Ones<'a> {
    bits: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.cur == 0 {
            self.word += 1;
            if self.word >= self.bits.len() {
                return None;
            }
            self.cur = self.bits[self.word];
        }
        let tz = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(self.word * 64 + tz)
    }
}

pub(crate) fn ones(bits: &[u64]) -> Ones<'_> {
    Ones {
        bits,
        word: 0,
        cur: bits.first().copied().unwrap_or(0),
    }
}
