//! Named verification outcomes collected by every checker.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check::new(name, true, detail)
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check::new(name, false, detail)
    }

    /// Passes iff `residual_terms == 0`; the detail names the count.
    pub fn residual(name: impl Into<String>, residual_terms: usize, what: &str) -> Self {
        if residual_terms == 0 {
            Check::pass(name, format!("{what}: residual 0"))
        } else {
            Check::fail(name, format!("{what}: {residual_terms} nonzero residual terms"))
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// A residual with a human-readable label.
#[derive(Clone, Debug, PartialEq)]
pub struct Labeled<T> {
    pub label: String,
    pub value: T,
}

impl<T> Labeled<T> {
    pub fn new(label: impl Into<String>, value: T) -> Self {
        Labeled {
            label: label.into(),
            value,
        }
    }
}

/// Passes iff every labeled residual is zero; names the offending labels.
pub fn labeled_check<T>(name: &str, rs: &[Labeled<T>], is_zero: impl Fn(&T) -> bool) -> Check {
    let bad: Vec<&str> = rs.iter().filter(|r| !is_zero(&r.value)).map(|r| r.label.as_str()).collect();
    if bad.is_empty() {
        Check::pass(name, format!("{} residuals vanish", rs.len()))
    } else {
        Check::fail(name, format!("nonzero residuals at {}", bad.join(", ")))
    }
}
