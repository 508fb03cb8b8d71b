//! Compensated (Kahan-Babuska-Neumaier) summation.
//!
//! Zero-table sums reach 10^4 terms in window scans; the compensation
//! keeps the accumulated rounding error at a few ulps of the result
//! instead of growing with the term count.

/// Running compensated sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    pub fn sum_iter<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc.value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_small_term() {
        // Naive summation loses the 1.0 entirely.
        assert_eq!(KahanSum::sum_iter([1e16, 1.0, -1e16]), 1.0);
    }

    #[test]
    fn matches_exact_rational_sum() {
        // sum of k/128 for k in 1..=n is exact in binary, so any deviation
        // is an accumulation bug.
        let n = 100_000u32;
        let s = KahanSum::sum_iter((1..=n).map(|k| k as f64 / 128.0));
        let expected = (n as f64) * (n as f64 + 1.0) / 2.0 / 128.0;
        assert_eq!(s, expected);
    }

    #[test]
    fn harmonic_sum_close_to_reference() {
        // Reference computed by summing smallest-first, which is the
        // accurate order; the compensated forward sum must agree to 1 ulp.
        let n = 1_000_000u32;
        let forward = KahanSum::sum_iter((1..=n).map(|k| 1.0 / k as f64));
        let mut back = KahanSum::new();
        for k in (1..=n).rev() {
            back.add(1.0 / k as f64);
        }
        assert!((forward - back.value()).abs() <= f64::EPSILON * forward.abs());
    }
}
