/// Dense square bit matrix; row `i` is a set over `0..cols`.
#[derive(Clone, Debug)]
pub(crate) struct BitMatrix {
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix { words, data: vec![0; rows * words] }
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    pub fn insert(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] |= 1 << (c % 64);
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    /// `row[dst] |= row[src]`.
    pub fn union_into(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        let w = self.words;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * w);
            (&mut lo[dst * w..(dst + 1) * w], &hi[..w])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * w);
            (&mut hi[..w], &lo[src * w..(src + 1) * w])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x |= *y;
        }
    }

    pub fn count_row(&self, r: usize) -> u64 {
        self.row(r).iter().map(|w| w.count_ones() as u64).sum()
    }
}

pub(crate) fn and_rows(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

pub(crate) fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub(crate) fn first_bit(a: &[u64]) -> Option<usize> {
    a.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

pub(crate) fn last_bit(a: &[u64]) -> Option<usize> {
    a.iter().enumerate().rev().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

pub(crate) fn iter_bits(a: &[u64]) -> impl Iterator<Item = usize> + '_ {
    a.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut m = BitMatrix::new(3, 130);
        m.insert(0, 1);
        m.insert(0, 129);
        m.insert(2, 64);
        m.union_into(1, 0);
        m.union_into(1, 2);
        assert!(m.contains(1, 129) && m.contains(1, 64) && m.contains(1, 1));
        assert_eq!(m.count_row(1), 3);
        assert_eq!(iter_bits(m.row(1)).collect::<Vec<_>>(), vec![1, 64, 129]);
        assert_eq!(first_bit(m.row(1)), Some(1));
        assert_eq!(last_bit(m.row(1)), Some(129));
        assert!(is_subset(m.row(0), m.row(1)));
        assert!(!is_subset(m.row(1), m.row(0)));
        m.union_into(2, 1);
        assert_eq!(and_rows(m.row(0), m.row(2)), m.row(0).to_vec());
        assert_eq!(first_bit(&[0, 0]), None);
    }
}
