use std::fmt::Write as _;

use simatroid::FieldSpec;

use crate::certificate::Certificate;

/// The answer to a guarded question.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Inconclusive(String),
}

impl From<bool> for Decision {
    fn from(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub id: String,
    pub field: Option<FieldSpec>,
    pub entries: Vec<(String, String)>,
    pub certificates: Vec<Certificate>,
    pub inconclusive: bool,
}

impl Report {
    pub fn new(id: &str, field: Option<FieldSpec>) -> Self {
        Report { id: id.to_string(), field, ..Report::default() }
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn flag(&mut self, key: &str, d: impl Into<Decision>) {
        let value = match d.into() {
            Decision::Yes => "true".to_string(),
            Decision::No => "false".to_string(),
            Decision::Inconclusive(why) => {
                self.inconclusive = true;
                format!("inconclusive ({why})")
            }
        };
        self.push(key, value);
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// 0 when every question was decided, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.inconclusive {
            2
        } else {
            0
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "report {}", self.id);
        if let Some(f) = &self.field {
            let _ = writeln!(out, "field {f}");
        }
        for (k, v) in &self.entries {
            let _ = writeln!(out, "{k} {v}");
        }
        for c in &self.certificates {
            out.push('\n');
            out.push_str(&c.to_text());
        }
        out
    }
}
