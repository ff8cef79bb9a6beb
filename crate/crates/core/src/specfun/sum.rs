/// Neumaier-compensated accumulator that also tracks a rigorous-style bound on
/// the accumulated rounding error.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
    abs_sum: f64,
    term_err: f64,
    count: usize,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a term whose own relative error is at most `rel_err`.
    pub fn add(&mut self, term: f64, rel_err: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.comp += (self.sum - t) + term;
        } else {
            self.comp += (term - t) + self.sum;
        }
        self.sum = t;
        self.abs_sum += term.abs();
        self.term_err += term.abs() * rel_err;
        self.count += 1;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    pub fn abs_sum(&self) -> f64 {
        self.abs_sum
    }

    /// Absolute error bound: propagated term errors plus summation rounding.
    pub fn error_bound(&self) -> f64 {
        self.term_err + 2.0 * f64::EPSILON * f64::EPSILON * self.count as f64 * self.abs_sum
            + f64::EPSILON * self.value().abs()
    }

    /// Error bound relative to the magnitude of the result.
    pub fn relative_bound(&self) -> f64 {
        let v = self.value().abs();
        if v == 0.0 {
            if self.abs_sum == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            self.error_bound() / v
        }
    }
}

/// Relative rounding error of a term produced by `steps` chained ratio updates,
/// each involving `ops` floating-point operations.
pub fn chained_rel_err(steps: usize, ops: usize) -> f64 {
    (ops * steps + 1) as f64 * f64::EPSILON
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_digits() {
        let mut s = CompensatedSum::new();
        for t in [1e16, 1.0, -1e16, 1.0] {
            s.add(t, 0.0);
        }
        assert_eq!(s.value(), 2.0);
        assert!(s.relative_bound() < 1e-14);
    }

    #[test]
    fn flags_catastrophic_cancellation() {
        let mut s = CompensatedSum::new();
        for t in [1e12, -1e12 + 1.0] {
            s.add(t, 1e-15);
        }
        assert!(s.relative_bound() > 1e-5);
    }

    #[test]
    fn empty_sum() {
        let s = CompensatedSum::new();
        assert_eq!(s.value(), 0.0);
        assert_eq!(s.relative_bound(), 0.0);
    }
}
