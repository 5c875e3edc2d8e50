//! Fixed-length bit vector with the handful of word-level operations the
//! sieve and the sumset code need.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < self.len && (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    /// Sets every bit in `[from, to)`.
    pub fn set_range(&mut self, from: usize, to: usize) {
        for i in from..to.min(self.len) {
            self.set(i);
        }
    }

    /// `self |= other << shift`, truncated to `self.len()`.
    pub fn or_shifted(&mut self, other: &Bits, shift: usize) {
        let word_shift = shift >> 6;
        let bit_shift = shift & 63;
        let n = self.words.len();
        for (src_idx, &w) in other.words.iter().enumerate() {
            let dst = src_idx + word_shift;
            if dst >= n {
                break;
            }
            self.words[dst] |= w << bit_shift;
            if bit_shift != 0 && dst + 1 < n {
                self.words[dst + 1] |= w >> (64 - bit_shift);
            }
        }
        self.mask_tail();
    }

    /// `self &= !other` over the common prefix.
    pub fn and_not(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    #[cfg(test)]
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    fn mask_tail(&mut self) {
        let rem = self.len & 63;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}
