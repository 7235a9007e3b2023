use std::fmt;

/// Process exit statuses shared by every command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    VerificationFailure = 1,
    ParseError = 2,
    BudgetExceeded = 3,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Ordered `key = value` lines plus an exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    lines: Vec<(String, String)>,
    pub status: Status,
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

impl Report {
    pub fn new() -> Report {
        Report {
            lines: Vec::new(),
            status: Status::Ok,
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.lines.push((key.into(), value.to_string()));
    }

    /// Raises the status; a worse status is never downgraded.
    pub fn fail(&mut self, status: Status) {
        self.status = self.status.max(status);
    }

    pub fn lines(&self) -> &[(String, String)] {
        &self.lines
    }

    /// The first value stored under `key`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            writeln!(f, "{k} = {v}")?;
        }
        Ok(())
    }
}
