/// Square bit matrix with a one-bit-per-word summary per row, so that
/// scanning a sparse row skips empty words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    summary_per_row: usize,
    bits: Vec<u64>,
    summary: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64).max(1);
        let summary_per_row = words_per_row.div_ceil(64);
        BitMatrix {
            n,
            words_per_row,
            summary_per_row,
            bits: vec![0; n * words_per_row],
            summary: vec![0; n * summary_per_row],
        }
    }

    pub fn from_adjacency(adjacency: &[Vec<usize>]) -> Self {
        let mut m = BitMatrix::new(adjacency.len());
        for (v, list) in adjacency.iter().enumerate() {
            for &w in list {
                m.insert(v, w);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words_per_row + col / 64] >> (col % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, row: usize, col: usize) {
        let w = col / 64;
        self.bits[row * self.words_per_row + w] |= 1 << (col % 64);
        self.summary[row * self.summary_per_row + w / 64] |= 1 << (w % 64);
    }

    #[inline]
    pub fn remove(&mut self, row: usize, col: usize) {
        let w = col / 64;
        let word = &mut self.bits[row * self.words_per_row + w];
        *word &= !(1 << (col % 64));
        if *word == 0 {
            self.summary[row * self.summary_per_row + w / 64] &= !(1 << (w % 64));
        }
    }

    /// Smallest column `>= from` set in `row`.
    #[inline]
    pub fn next_in_row(&self, row: usize, from: usize) -> Option<usize> {
        if from >= self.n {
            return None;
        }
        let base = row * self.words_per_row;
        let wi = from / 64;
        let word = self.bits[base + wi] & (!0u64 << (from % 64));
        if word != 0 {
            return Some(wi * 64 + word.trailing_zeros() as usize);
        }
        let next = wi + 1;
        if next >= self.words_per_row {
            return None;
        }
        let sbase = row * self.summary_per_row;
        let mut si = next / 64;
        let mut sword = self.summary[sbase + si] & (!0u64 << (next % 64));
        loop {
            if sword != 0 {
                let w = si * 64 + sword.trailing_zeros() as usize;
                return Some(w * 64 + self.bits[base + w].trailing_zeros() as usize);
            }
            si += 1;
            if si >= self.summary_per_row {
                return None;
            }
            sword = self.summary[sbase + si];
        }
    }

    pub fn row(&self, row: usize) -> impl Iterator<Item = usize> + '_ {
        let mut from = 0;
        std::iter::from_fn(move || {
            let c = self.next_in_row(row, from)?;
            from = c + 1;
            Some(c)
        })
    }

    pub fn row_len(&self, row: usize) -> usize {
        let base = row * self.words_per_row;
        self.bits[base..base + self.words_per_row].iter().map(|w| w.count_ones() as usize).sum()
    }
}
