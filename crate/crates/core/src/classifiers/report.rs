use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

/// One comparison between a prediction and the solver.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub graph6: String,
    pub n: usize,
    /// Extra coordinates of the instance, such as `t=4` or `h=1221`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub classifier: Value,
    pub solver: Value,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl Record {
    pub fn new(
        graph6: String,
        n: usize,
        classifier: Value,
        solver: Value,
        matches: bool,
    ) -> Record {
        Record {
            graph6,
            n,
            case: None,
            classifier,
            solver,
            matches,
        }
    }

    /// A record whose two sides agree iff they are equal.
    pub fn compare(graph6: String, n: usize, classifier: Value, solver: Value) -> Record {
        let matches = classifier == solver;
        Record::new(graph6, n, classifier, solver, matches)
    }

    pub fn with_case(mut self, case: impl Into<String>) -> Record {
        self.case = Some(case.into());
        self
    }
}

/// All records of one suite run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub records: Vec<Record>,
}

impl Report {
    pub fn mismatches(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.matches)
    }

    pub fn mismatch_count(&self) -> usize {
        self.mismatches().count()
    }

    pub fn passed(&self) -> bool {
        self.mismatch_count() == 0
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    /// A table of instance and mismatch counts per vertex count.
    pub fn summary(&self) -> String {
        let mut rows: Vec<(usize, usize, usize)> = Vec::new();
        for r in &self.records {
            match rows.iter_mut().find(|row| row.0 == r.n) {
                Some(row) => {
                    row.1 += 1;
                    row.2 += usize::from(!r.matches);
                }
                None => rows.push((r.n, 1, usize::from(!r.matches))),
            }
        }
        rows.sort_unstable();
        let mut out = format!(
            "suite {}\n{:>4} {:>9} {:>10}\n",
            self.suite, "n", "instances", "mismatches"
        );
        for (n, total, bad) in rows {
            let _ = writeln!(out, "{n:>4} {total:>9} {bad:>10}");
        }
        let _ = writeln!(
            out,
            "total {} instances, {} mismatches",
            self.records.len(),
            self.mismatch_count()
        );
        for r in self.mismatches() {
            let case = r
                .case
                .as_deref()
                .map(|c| format!(" {c}"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "mismatch {}{case}: classifier={} solver={}",
                r.graph6, r.classifier, r.solver
            );
        }
        out
    }
}
