//! Neumaier (improved Kahan) summation.

#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated sum of an iterator of values.
pub fn sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut acc = Neumaier::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_small_terms() {
        let v = sum([1.0, 1e100, 1.0, -1e100]);
        assert_eq!(v, 2.0);
    }

    #[test]
    fn harmonic_partial_sum_matches_reverse_order() {
        let forward = sum((1..=100_000).map(|k| 1.0 / k as f64));
        let mut backward = 0.0;
        for k in (1..=100_000).rev() {
            backward += 1.0 / k as f64;
        }
        assert!((forward - backward).abs() < 1e-13);
    }
}
