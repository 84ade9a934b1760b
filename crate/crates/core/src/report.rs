use serde::Serialize;

/// Outcome of one exhaustively checked identity.
///
/// `witness` holds the first failing case in iteration order, which is
/// lexicographic in the quantified variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            witness: None,
        }
    }

    /// Records one case; `witness` is only rendered for the first failure.
    #[inline]
    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// A list of checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(Check::holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Turns the first violation into an internal error.
    pub fn into_result(self, context: &str) -> crate::Result<Report> {
        if let Some(c) = self.violations().next() {
            return Err(crate::Error::Internal(format!(
                "{context}: `{}` fails at {}",
                c.name,
                c.witness.as_deref().unwrap_or("?")
            )));
        }
        Ok(self)
    }
}
