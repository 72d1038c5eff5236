//! Counting pass/fail results with the first failing witness.

/// Outcome of one audit: how many instances were checked and, on failure,
/// a description of the first instance that failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub checks: u64,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Accumulates checks; keeps only the first witness.
#[derive(Debug, Default)]
pub struct Tally {
    checks: u64,
    witness: Option<String>,
}

impl Tally {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one check; `witness` is only evaluated on the first failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
        ok
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub fn absorb(&mut self, v: Verdict) {
        self.checks += v.checks;
        if self.witness.is_none() {
            self.witness = v.witness;
        }
    }

    pub fn finish(self) -> Verdict {
        Verdict { checks: self.checks, witness: self.witness }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_first_witness() {
        let mut t = Tally::new();
        t.check(true, || unreachable!());
        t.check(false, || "first".into());
        t.check(false, || "second".into());
        let v = t.finish();
        assert_eq!(v.checks, 3);
        assert_eq!(v.witness.as_deref(), Some("first"));
    }
}
