//! Word-level helpers for the dense indicator layout (bit `e` is element `e`).

pub(crate) const WORD: usize = u64::BITS as usize;

/// Words needed to hold bits `0..=horizon`.
pub(crate) fn word_count(horizon: usize) -> usize {
    horizon / WORD + 1
}

/// Word `i` of `src << shift`, treating `src` as zero-extended.
#[inline]
pub(crate) fn shifted_word(src: &[u64], i: usize, shift: usize) -> u64 {
    let (ws, bs) = (shift / WORD, shift % WORD);
    if i < ws {
        return 0;
    }
    let j = i - ws;
    let low = src.get(j).copied().unwrap_or(0) << bs;
    let carry = if bs > 0 && j > 0 {
        src.get(j - 1).copied().unwrap_or(0) >> (WORD - bs)
    } else {
        0
    };
    low | carry
}

/// Clears bit 0 and every bit above `horizon`.
pub(crate) fn mask_tail(words: &mut [u64], horizon: usize) {
    if let Some(first) = words.first_mut() {
        *first &= !1;
    }
    let keep = horizon % WORD + 1;
    if let Some(last) = words.last_mut() {
        if keep < WORD {
            *last &= (1u64 << keep) - 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_word_crosses_boundaries() {
        let src = [0b1011u64, 1 << 63];
        assert_eq!(shifted_word(&src, 0, 0), 0b1011);
        assert_eq!(shifted_word(&src, 0, 2), 0b101100);
        assert_eq!(shifted_word(&src, 1, 1), 0);
        assert_eq!(shifted_word(&src, 2, 1), 1);
        assert_eq!(shifted_word(&src, 1, 64), 0b1011);
        assert_eq!(shifted_word(&src, 0, 64), 0);
        assert_eq!(shifted_word(&src, 1, 65), 0b10110);
        assert_eq!(shifted_word(&src, 3, 65), 1);
    }

    #[test]
    fn mask_tail_keeps_horizon_bit() {
        let mut w = vec![u64::MAX; 2];
        mask_tail(&mut w, 64);
        assert_eq!(w, vec![u64::MAX - 1, 1]);
        let mut w = vec![u64::MAX];
        mask_tail(&mut w, 63);
        assert_eq!(w, vec![u64::MAX - 1]);
    }
}
