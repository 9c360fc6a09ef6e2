use radford::report::Report;
use radford::{CycMatrix, CycScalar};

pub struct Style {
    pub order: u32,
    pub decimal: bool,
}

impl Style {
    pub fn scalar(&self, x: &CycScalar) -> String {
        let exact = x.fmt_with("ξ", self.order);
        if self.decimal && !x.is_rational() {
            format!("{exact} ≈ {}", x.to_decimal())
        } else {
            exact
        }
    }

    pub fn scalar_json(&self, x: &CycScalar) -> serde_json::Value {
        if self.decimal {
            serde_json::json!({ "exact": x.fmt_with("ξ", self.order), "decimal": x.to_decimal() })
        } else {
            x.fmt_with("ξ", self.order).into()
        }
    }

    pub fn matrix(&self, a: &CycMatrix) -> String {
        let cells: Vec<Vec<String>> =
            (0..a.rows()).map(|r| (0..a.cols()).map(|c| self.scalar(&a[(r, c)])).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        let mut s = String::new();
        for row in cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            s.push_str(&format!("  [ {} ]\n", padded.join("  ")));
        }
        s
    }

    pub fn matrix_json(&self, a: &CycMatrix) -> serde_json::Value {
        (0..a.rows()).map(|r| (0..a.cols()).map(|c| self.scalar_json(&a[(r, c)])).collect::<Vec<_>>()).collect()
    }
}

pub fn report_text(rep: &Report) -> String {
    let mut s = format!("{}\n", rep.title);
    for c in &rep.checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        match &c.detail {
            Some(d) if !d.is_empty() => s.push_str(&format!("  [{tag}] {} ({d})\n", c.name)),
            _ => s.push_str(&format!("  [{tag}] {}\n", c.name)),
        }
    }
    s
}

pub fn report_json(rep: &Report) -> serde_json::Value {
    serde_json::json!({
        "title": rep.title,
        "checks": rep.checks,
        "passed": rep.all_passed(),
    })
}
