//! Report model and its two renderings.
//!
//! The key/value form carries no timing and is byte-stable for a given
//! document and tool version. The text form adds per-check timing.

use std::fmt::Write as _;
use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// An enumeration cap was hit before a verdict could be reached.
    Resource,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Resource => "RESOURCE",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub command: String,
    pub args: Vec<String>,
    pub line: usize,
    pub verdict: Verdict,
    pub fields: Vec<(String, String)>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Kv,
}

impl Report {
    pub fn count(&self, v: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == v).count()
    }

    /// `Resource` outranks `Fail`, which outranks `Pass`.
    pub fn status(&self) -> Verdict {
        if self.count(Verdict::Resource) > 0 {
            Verdict::Resource
        } else if self.count(Verdict::Fail) > 0 {
            Verdict::Fail
        } else {
            Verdict::Pass
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Resource => 3,
        }
    }

    pub fn render(&self, format: Format, with_fields: bool) -> String {
        match format {
            Format::Kv => self.render_kv(with_fields),
            Format::Text => self.render_text(with_fields),
        }
    }

    fn render_kv(&self, with_fields: bool) -> String {
        let mut out = String::new();
        for (i, c) in self.checks.iter().enumerate() {
            let n = i + 1;
            let _ = writeln!(out, "check.{n}.command={}", c.command);
            let _ = writeln!(out, "check.{n}.args={}", one_line(&c.args.join(" ")));
            let _ = writeln!(out, "check.{n}.line={}", c.line);
            let _ = writeln!(out, "check.{n}.verdict={}", c.verdict.label());
            if with_fields {
                for (k, v) in &c.fields {
                    let _ = writeln!(out, "check.{n}.{k}={}", one_line(v));
                }
            }
        }
        let _ = writeln!(out, "summary.checks={}", self.checks.len());
        let _ = writeln!(out, "summary.pass={}", self.count(Verdict::Pass));
        let _ = writeln!(out, "summary.fail={}", self.count(Verdict::Fail));
        let _ = writeln!(out, "summary.resource={}", self.count(Verdict::Resource));
        let _ = writeln!(out, "summary.status={}", self.status().label());
        out
    }

    fn render_text(&self, with_fields: bool) -> String {
        let mut out = String::new();
        for (i, c) in self.checks.iter().enumerate() {
            let mut head = c.command.clone();
            if !c.args.is_empty() {
                head.push(' ');
                head.push_str(&c.args.join(" "));
            }
            let _ = writeln!(
                out,
                "[{}] {head:<40} {:<8} {:>10.3} ms",
                i + 1,
                c.verdict.label(),
                c.elapsed.as_secs_f64() * 1e3
            );
            if with_fields {
                for (k, v) in &c.fields {
                    let _ = writeln!(out, "      {k} = {}", one_line(v));
                }
            }
        }
        let _ = writeln!(
            out,
            "{} checks: {} passed, {} failed, {} over bound => {}",
            self.checks.len(),
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Resource),
            self.status().label()
        );
        out
    }
}

fn one_line(s: &str) -> String {
    s.replace('\n', "\\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(v: Verdict) -> CheckResult {
        CheckResult {
            command: "factorize".into(),
            args: vec!["A".into()],
            line: 3,
            verdict: v,
            fields: vec![("factors".into(), "L2 x L3".into())],
            elapsed: Duration::from_millis(5),
        }
    }

    #[test]
    fn exit_codes() {
        let mut r = Report::default();
        assert_eq!(r.exit_code(), 0);
        r.checks.push(result(Verdict::Fail));
        assert_eq!(r.exit_code(), 1);
        r.checks.push(result(Verdict::Resource));
        assert_eq!(r.exit_code(), 3);
    }

    #[test]
    fn kv_has_no_timing() {
        let r = Report {
            checks: vec![result(Verdict::Pass)],
        };
        let kv = r.render(Format::Kv, true);
        assert!(kv.contains("check.1.factors=L2 x L3\n"));
        assert!(!kv.contains("ms"));
        assert!(kv.ends_with("summary.status=PASS\n"));
    }
}
