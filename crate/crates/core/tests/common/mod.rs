#![allow(dead_code)]

/// Calls `f` with every nondecreasing array of length `0..=max_len` whose
/// values lie in `lo..=hi`.
pub fn for_each_sorted_array(max_len: usize, lo: i64, hi: i64, mut f: impl FnMut(&[i64])) {
    fn rec(buf: &mut Vec<i64>, max_len: usize, lo: i64, hi: i64, f: &mut dyn FnMut(&[i64])) {
        f(buf);
        if buf.len() == max_len {
            return;
        }
        let start = buf.last().copied().unwrap_or(lo);
        for v in start..=hi {
            buf.push(v);
            rec(buf, max_len, lo, hi, f);
            buf.pop();
        }
    }
    rec(&mut Vec::with_capacity(max_len), max_len, lo, hi, &mut f);
}

/// Brute-force coefficient of variation of all consecutive gaps (population
/// standard deviation over mean), two-pass in f64.
pub fn gap_cv(values: &[i64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let gaps: Vec<f64> = values.windows(2).map(|w| (w[1] as f64) - (w[0] as f64)).collect();
    let mean = gaps.iter().sum::<f64>() / gaps.len() as f64;
    if mean == 0.0 {
        return 0.0;
    }
    let var = gaps.iter().map(|g| (g - mean).powi(2)).sum::<f64>() / gaps.len() as f64;
    var.sqrt() / mean
}

/// Unbounded LRU reference: entries tagged with a last-use timestamp; the
/// oldest-used entry is evicted when the size would exceed capacity.
pub struct ModelLru<K, V> {
    capacity: usize,
    clock: u64,
    entries: Vec<(K, V, u64)>,
    pub hits: u64,
    pub misses: u64,
    pub evictions: u64,
}

impl<K: PartialEq + Clone, V: Clone> ModelLru<K, V> {
    pub fn new(capacity: usize) -> Self {
        Self {
            capacity,
            clock: 0,
            entries: Vec::new(),
            hits: 0,
            misses: 0,
            evictions: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&mut self, key: &K) -> Option<V> {
        self.clock += 1;
        match self.entries.iter_mut().find(|e| &e.0 == key) {
            Some(e) => {
                e.2 = self.clock;
                self.hits += 1;
                Some(e.1.clone())
            }
            None => {
                self.misses += 1;
                None
            }
        }
    }

    pub fn put(&mut self, key: K, value: V) -> Option<(K, V)> {
        self.clock += 1;
        if let Some(e) = self.entries.iter_mut().find(|e| e.0 == key) {
            e.1 = value;
            e.2 = self.clock;
            return None;
        }
        let mut evicted = None;
        if self.entries.len() == self.capacity {
            let oldest = (0..self.entries.len()).min_by_key(|&i| self.entries[i].2).unwrap();
            let (k, v, _) = self.entries.remove(oldest);
            self.evictions += 1;
            evicted = Some((k, v));
        }
        self.entries.push((key, value, self.clock));
        evicted
    }

    /// Keys ordered from least to most recently used.
    pub fn keys_lru_order(&self) -> Vec<K> {
        let mut e = self.entries.clone();
        e.sort_by_key(|x| x.2);
        e.into_iter().map(|x| x.0).collect()
    }
}
