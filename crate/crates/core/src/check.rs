use crate::algebra::Carrier;

/// Outcome of one exact identity check.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub pass: bool,
    pub residual_term_count: usize,
}

impl IdentityCheck {
    /// Passes iff `residual` is exactly zero.
    pub fn from_residual<T: Carrier>(identity: impl Into<String>, residual: &T) -> Self {
        let n = residual.support_size();
        Self {
            identity: identity.into(),
            pass: n == 0,
            residual_term_count: n,
        }
    }

    /// A yes/no check with no residual to measure.
    pub fn flag(identity: impl Into<String>, pass: bool) -> Self {
        Self {
            identity: identity.into(),
            pass,
            residual_term_count: usize::from(!pass),
        }
    }
}

pub fn all_pass(checks: &[IdentityCheck]) -> bool {
    checks.iter().all(|c| c.pass)
}
