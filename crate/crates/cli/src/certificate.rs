//! Verification certificates: the machine-checkable record of a reproduced
//! example or a property sweep. Every expected value carries a provenance
//! tag saying where it comes from.

use std::fmt;

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// stated in the worked example this certificate reproduces
    Stated,
    /// recomputed here by an independent route
    Derived,
    /// immediate from the definitions
    Trivial,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Stated => write!(f, "stated"),
            Provenance::Derived => write!(f, "derived"),
            Provenance::Trivial => write!(f, "trivial"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub description: String,
    pub expected: String,
    pub provenance: Provenance,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    /// A check comparing printable values for equality.
    pub fn compare<T: PartialEq + fmt::Display>(
        description: impl Into<String>,
        provenance: Provenance,
        expected: T,
        computed: T,
    ) -> Check {
        Check {
            description: description.into(),
            pass: expected == computed,
            expected: expected.to_string(),
            provenance,
            computed: computed.to_string(),
        }
    }

    /// A check of a named condition.
    pub fn condition(
        description: impl Into<String>,
        provenance: Provenance,
        holds: bool,
    ) -> Check {
        Check {
            description: description.into(),
            expected: "true".into(),
            provenance,
            computed: holds.to_string(),
            pass: holds,
        }
    }

    /// A sweep over many cases: passes when every case passed.
    pub fn sweep(
        description: impl Into<String>,
        provenance: Provenance,
        passed: usize,
        total: usize,
    ) -> Check {
        Check {
            description: description.into(),
            expected: format!("{total}/{total} cases"),
            provenance,
            computed: format!("{passed}/{total} cases"),
            pass: passed == total,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationCertificate {
    pub example_id: String,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
}

impl VerificationCertificate {
    pub fn new(example_id: impl Into<String>, seed: Option<u64>) -> Self {
        VerificationCertificate {
            example_id: example_id.into(),
            seed,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Overall verdict: the conjunction of the per-check flags.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}
