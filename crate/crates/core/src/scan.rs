//! Parallel exhaustive scans over all `2^n` bit masks.
//!
//! The mask space is cut into chunks by the high bits; each chunk is walked
//! in Gray-code order over its low bits so that consecutive masks differ in a
//! single vertex and per-mask state can be updated incrementally. Results are
//! reduced in chunk order, so the outcome does not depend on the thread count.

use rayon::prelude::*;

const MAX_CHUNK_BITS: usize = 8;

pub(crate) fn par_gray_scan<S, R, I, F, V, Id, C>(n: usize, init: I, flip: F, visit: V, identity: Id, combine: C) -> R
where
    S: Send,
    R: Send,
    I: Fn(u64) -> S + Sync,
    F: Fn(&mut S, usize) + Sync,
    V: Fn(&S, u64, &mut R) + Sync,
    Id: Fn() -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    assert!(n < 64, "mask scans are limited to 63 vertices");
    let high = n.min(MAX_CHUNK_BITS);
    let low = n - high;
    (0u64..1 << high)
        .into_par_iter()
        .map(|chunk| {
            let mut mask = chunk << low;
            let mut state = init(mask);
            let mut acc = identity();
            visit(&state, mask, &mut acc);
            for i in 1u64..1 << low {
                let bit = i.trailing_zeros() as usize;
                mask ^= 1 << bit;
                flip(&mut state, bit);
                visit(&state, mask, &mut acc);
            }
            acc
        })
        .reduce(&identity, &combine)
}

/// Lexicographic key of a mask: vertex 0 is the most significant position.
pub(crate) fn lex_key(mask: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        mask.reverse_bits() >> (64 - n)
    }
}

/// Best `(value, mask)` so far: larger value wins, ties go to the smaller lex key.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Best {
    pub value: i128,
    pub mask: u64,
    pub key: u64,
    pub found: bool,
}

impl Best {
    pub fn none() -> Self {
        Best { value: 0, mask: 0, key: 0, found: false }
    }

    pub fn offer(&mut self, value: i128, mask: u64, n: usize) {
        let key = lex_key(mask, n);
        if !self.found || value > self.value || (value == self.value && key < self.key) {
            *self = Best { value, mask, key, found: true };
        }
    }

    pub fn merge(a: Best, b: Best) -> Best {
        match (a.found, b.found) {
            (false, _) => b,
            (_, false) => a,
            _ => {
                if b.value > a.value || (b.value == a.value && b.key < a.key) {
                    b
                } else {
                    a
                }
            }
        }
    }
}
