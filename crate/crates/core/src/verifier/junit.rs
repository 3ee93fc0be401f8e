use super::report::{AuditReport, Status};

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(ch),
        }
    }
    out
}

/// JUnit-style XML: one test suite per report, one test case per check.
/// Asserted failures become `<failure>`, budget exhaustion `<skipped>`, and
/// unasserted failures pass with the witness in `<system-out>`.
pub fn to_junit(reports: &[AuditReport]) -> String {
    let tests: usize = reports.iter().map(|r| r.summary.total).sum();
    let failures: usize = reports.iter().map(|r| r.summary.failed).sum();
    let skipped: usize = reports.iter().map(|r| r.summary.budget_exhausted).sum();
    let mut xml = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    xml.push_str(&format!("<testsuites tests=\"{tests}\" failures=\"{failures}\" skipped=\"{skipped}\">\n"));
    for rep in reports {
        let name = match rep.r {
            Some(r) => format!("{} {} r={r}", rep.target, rep.instance),
            None => format!("{} {}", rep.target, rep.instance),
        };
        xml.push_str(&format!(
            "  <testsuite name=\"{}\" tests=\"{}\" failures=\"{}\" skipped=\"{}\">\n",
            escape(&name),
            rep.summary.total,
            rep.summary.failed,
            rep.summary.budget_exhausted
        ));
        for c in &rep.checks {
            let open = format!(
                "    <testcase classname=\"{}\" name=\"{}\"",
                escape(&rep.target),
                escape(&c.assertion)
            );
            let witness = c.witness.as_deref().unwrap_or("");
            match (c.status, c.asserted) {
                (Status::Pass, _) => xml.push_str(&format!("{open}/>\n")),
                (Status::Fail, true) => xml.push_str(&format!(
                    "{open}>\n      <failure message=\"{}\"/>\n    </testcase>\n",
                    escape(witness)
                )),
                (Status::Fail, false) => xml.push_str(&format!(
                    "{open}>\n      <system-out>not asserted: {}</system-out>\n    </testcase>\n",
                    escape(witness)
                )),
                (Status::Budget, _) => xml.push_str(&format!(
                    "{open}>\n      <skipped message=\"{}\"/>\n    </testcase>\n",
                    escape(c.detail.as_deref().unwrap_or("budget exhausted"))
                )),
            }
        }
        xml.push_str("  </testsuite>\n");
    }
    xml.push_str("</testsuites>\n");
    xml
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_statuses() {
        let mut r = AuditReport::new("demo", "P(2)^1 & <x>");
        r.pass("a", true);
        r.fail("b", true, "{0} and {1} are disjoint");
        r.fail("c", false, "w");
        r.budget("d", "stopped");
        let xml = to_junit(&[r]);
        assert!(xml.contains("tests=\"4\" failures=\"1\" skipped=\"1\""));
        assert!(xml.contains("P(2)^1 &amp; &lt;x&gt;"));
        assert!(xml.contains("<failure message=\"{0} and {1} are disjoint\"/>"));
        assert!(xml.contains("<system-out>not asserted: w</system-out>"));
    }
}
