use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// At most this many counterexamples are kept verbatim; the total is always
/// counted.
pub const MAX_RECORDED_FAILURES: usize = 1000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpace {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub mode: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    pub long_run: bool,
    pub workers: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
}

/// Outcome of one verification sweep.
///
/// Reports from disjoint parts of a sweep combine with [`Self::merge`], which is
/// associative and commutative, so the result does not depend on how work was
/// split or in which order pieces finished.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub instance_space: InstanceSpace,
    pub instances_checked: u64,
    pub skipped: u64,
    pub failure_count: u64,
    /// Serialized counterexamples, sorted, at most [`MAX_RECORDED_FAILURES`].
    pub failures: Vec<String>,
    /// Named tallies specific to a check.
    pub counters: BTreeMap<String, u64>,
    /// Entrywise maxima, for checks that track extremal values.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maxima: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
    pub config: RunConfig,
}

impl VerificationReport {
    pub fn new(theorem: &str, instance_space: InstanceSpace, config: RunConfig) -> Self {
        VerificationReport {
            theorem: theorem.to_string(),
            instance_space,
            config,
            ..Default::default()
        }
    }

    /// An empty report with the same header, for accumulating a piece of a sweep.
    pub fn blank(&self) -> Self {
        VerificationReport::new(&self.theorem, self.instance_space.clone(), self.config.clone())
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn fail(&mut self, counterexample: impl Into<String>) {
        self.failure_count += 1;
        self.failures.push(counterexample.into());
        if self.failures.len() > 2 * MAX_RECORDED_FAILURES {
            self.normalize_failures();
        }
    }

    /// Records a failure when `ok` is false; the message is built lazily.
    pub fn require(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        if !ok {
            self.fail(counterexample());
        }
    }

    pub fn bump(&mut self, counter: &str, by: u64) {
        *self.counters.entry(counter.to_string()).or_default() += by;
    }

    pub fn counter(&self, name: &str) -> u64 {
        self.counters.get(name).copied().unwrap_or(0)
    }

    pub fn observe_maxima(&mut self, values: &[u64]) {
        let maxima = self.maxima.get_or_insert_with(Vec::new);
        if maxima.len() < values.len() {
            maxima.resize(values.len(), 0);
        }
        for (m, &v) in maxima.iter_mut().zip(values) {
            *m = (*m).max(v);
        }
    }

    fn normalize_failures(&mut self) {
        self.failures.sort();
        self.failures.dedup();
        self.failures.truncate(MAX_RECORDED_FAILURES);
    }

    /// Combines two partial reports of the same sweep. Wall time is not merged;
    /// the caller measures the whole sweep.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.instances_checked += other.instances_checked;
        self.skipped += other.skipped;
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self.normalize_failures();
        for (name, value) in other.counters {
            *self.counters.entry(name).or_default() += value;
        }
        if let Some(values) = other.maxima {
            self.observe_maxima(&values);
        }
        self
    }

    /// One summary line: `PASS thm31 n=5 r=2: 1024 instances, 0 failures`.
    pub fn summary(&self) -> String {
        let mut params = format!("n={}", self.instance_space.n);
        if let Some(r) = self.instance_space.r {
            params.push_str(&format!(" r={r}"));
        }
        if let Some(k) = self.instance_space.k {
            params.push_str(&format!(" k={k}"));
        }
        format!(
            "{} {} {}: {} instances, {} skipped, {} failures",
            if self.passed() { "PASS" } else { "FAIL" },
            self.theorem,
            params,
            self.instances_checked,
            self.skipped,
            self.failure_count
        )
    }

    /// CSV header matching [`Self::csv_row`].
    pub fn csv_header() -> &'static str {
        "theorem,n,r,k,mode,instances_checked,skipped,failure_count,passed"
    }

    pub fn csv_row(&self) -> String {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let mode = &self.instance_space.mode;
        let mode = if mode.contains([',', '"']) {
            format!("\"{}\"", mode.replace('"', "\"\""))
        } else {
            mode.clone()
        };
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.theorem,
            self.instance_space.n,
            opt(self.instance_space.r),
            opt(self.instance_space.k),
            mode,
            self.instances_checked,
            self.skipped,
            self.failure_count,
            self.passed()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn piece(checked: u64, failures: Vec<String>, counter: u64, maxima: Vec<u64>) -> VerificationReport {
        let mut r = VerificationReport::new("t", InstanceSpace::default(), RunConfig::default());
        r.instances_checked = checked;
        for f in failures {
            r.fail(f);
        }
        r.bump("c", counter);
        r.observe_maxima(&maxima);
        r
    }

    fn arb_piece() -> impl Strategy<Value = VerificationReport> {
        (
            0u64..1000,
            proptest::collection::vec("[a-c]{1,2}", 0..4),
            0u64..10,
            proptest::collection::vec(0u64..50, 0..4),
        )
            .prop_map(|(c, f, k, m)| piece(c, f, k, m))
    }

    proptest! {
        #[test]
        fn merge_is_associative_and_commutative(a in arb_piece(), b in arb_piece(), c in arb_piece()) {
            let left = a.clone().merge(b.clone()).merge(c.clone());
            let right = a.clone().merge(b.clone().merge(c.clone()));
            prop_assert_eq!(&left, &right);
            let swapped = b.merge(a).merge(c);
            prop_assert_eq!(left, swapped);
        }
    }

    #[test]
    fn summary_and_csv() {
        let mut r = VerificationReport::new(
            "thm31",
            InstanceSpace {
                n: 5,
                r: Some(2),
                k: None,
                mode: "exhaustive".into(),
            },
            RunConfig::default(),
        );
        r.instances_checked = 1024;
        assert_eq!(r.summary(), "PASS thm31 n=5 r=2: 1024 instances, 0 skipped, 0 failures");
        assert_eq!(r.csv_row(), "thm31,5,2,,exhaustive,1024,0,0,true");
        r.fail("x");
        assert!(!r.passed());
    }
}
