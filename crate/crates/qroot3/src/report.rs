//! Pass/fail reporting for verification runs.
//!
//! Every checker in this crate appends [`ReportItem`]s to a [`Report`].
//! An item is a named boolean check; failures carry a human-readable
//! witness (the offending triple of basis indices, the mismatched matrix
//! entry, …) so a broken identity can be located without rerunning
//! anything under a debugger.

use std::fmt;

/// One named check with its outcome.
#[derive(Clone, Debug)]
pub struct ReportItem {
    pub name: String,
    pub pass: bool,
    /// Failure witness; empty on pass.
    pub detail: String,
}

/// An ordered collection of check outcomes.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Record a check that passed iff `pass`; `detail` is kept only on
    /// failure.
    pub fn check(&mut self, name: &str, pass: bool, detail: impl FnOnce() -> String) {
        self.items.push(ReportItem {
            name: name.to_string(),
            pass,
            detail: if pass { String::new() } else { detail() },
        });
    }

    /// Record an unconditional pass.
    pub fn ok(&mut self, name: &str) {
        self.check(name, true, String::new);
    }

    /// Record an unconditional failure with a witness.
    pub fn fail(&mut self, name: &str, detail: String) {
        self.check(name, false, move || detail);
    }

    /// Merge another report under a `prefix/` namespace.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut item in other.items {
            item.name = format!("{prefix}/{}", item.name);
            self.items.push(item);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Panic with a readable summary if any check failed. Test helper.
    pub fn assert_all(&self) {
        if !self.all_passed() {
            panic!("{self}");
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let passed = self.items.iter().filter(|i| i.pass).count();
        writeln!(f, "{passed}/{} checks passed", self.items.len())?;
        for item in &self.items {
            if item.pass {
                writeln!(f, "  ok   {}", item.name)?;
            } else {
                writeln!(f, "  FAIL {}: {}", item.name, item.detail)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_accumulates_and_summarises() {
        let mut r = Report::new();
        r.ok("alpha");
        r.check("beta", false, || "witness".into());
        assert!(!r.all_passed());
        assert_eq!(r.len(), 2);
        assert_eq!(r.failures().count(), 1);
        let shown = r.to_string();
        assert!(shown.contains("1/2 checks passed"));
        assert!(shown.contains("FAIL beta: witness"));

        let mut outer = Report::new();
        outer.absorb("inner", r);
        assert_eq!(outer.items[0].name, "inner/alpha");
        assert_eq!(outer.items[1].name, "inner/beta");
    }
}
