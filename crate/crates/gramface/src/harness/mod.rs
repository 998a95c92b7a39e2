//! Seeded verification procedures for the constructive statements behind the
//! face-dimension bounds, plus the conjecture experiments and the gallery of
//! worked examples.
//!
//! Every check runs `trials` independent instances; the per-trial RNG is
//! derived from `(master seed, trial index)` so parallel and serial runs
//! agree, and identical parameters and seed reproduce the identical report.
//! Genericity-dependent computations sample twice and must agree; resampling
//! events are reported separately and never count as theorem failures.

mod checks;
mod conjecture;
mod gallery;
mod random;

pub use conjecture::{conjecture_mkkk, ConjectureEntry, ConjectureReport};
pub use gallery::{example_gallery, GalleryEntry, GalleryReport};
pub use random::{
    bar_modulo_linear, contains_power_of_linear, random_bpf_complement_space, random_form,
    random_full_space, random_linear_form, PowerVerdict,
};

use std::collections::BTreeMap;
use std::path::PathBuf;

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::Error;

/// Derives the per-trial generator from the master seed; stable across
/// platforms and worker counts.
pub fn rng_for(master_seed: u64, index: u64) -> ChaCha12Rng {
    let mut seed = [0u8; 32];
    seed[..8].copy_from_slice(&master_seed.to_le_bytes());
    seed[8..16].copy_from_slice(&index.to_le_bytes());
    seed[16] = 0x9e;
    seed[17] = 0x37;
    ChaCha12Rng::from_seed(seed)
}

/// Parameters for one verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckParams {
    pub n: usize,
    pub d: u32,
    pub k: usize,
    /// Variable cut for the variable-reduction inequality.
    pub m: Option<usize>,
    /// Lift levels for the lifting formula.
    pub levels: usize,
    pub trials: u64,
    pub seed: u64,
    /// Coefficient height for random integer instances.
    pub height: i64,
    /// Hilbert truncation override; defaults to `2d + 2`.
    pub t_bound: Option<u32>,
    pub genericity_budget: u32,
    /// Where failing instances are persisted as interchange files.
    pub artifacts_dir: Option<PathBuf>,
}

impl CheckParams {
    pub fn new(n: usize, d: u32, k: usize) -> Self {
        CheckParams {
            n,
            d,
            k,
            m: None,
            levels: 1,
            trials: 50,
            seed: crate::DEFAULT_SEED,
            height: crate::DEFAULT_HEIGHT,
            t_bound: None,
            genericity_budget: crate::DEFAULT_GENERICITY_BUDGET,
            artifacts_dir: None,
        }
    }

    pub fn hilbert_bound(&self) -> u32 {
        self.t_bound.unwrap_or(2 * self.d + 2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialOutcome {
    Pass,
    /// The literal statement failed on this instance.
    Fail,
    /// Instance lies outside the statement's hypotheses; tracked separately.
    OutsideHypothesis,
    /// A recorded conjecture counterexample candidate.
    Candidate,
}

impl TrialOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            TrialOutcome::Pass => "pass",
            TrialOutcome::Fail => "fail",
            TrialOutcome::OutsideHypothesis => "outside-hypothesis",
            TrialOutcome::Candidate => "candidate",
        }
    }
}

/// One machine-readable record per trial.
#[derive(Clone, Debug)]
pub struct TrialRecord {
    pub trial: u64,
    pub outcome: TrialOutcome,
    /// Genericity resampling events encountered inside this trial.
    pub genericity_resamples: u32,
    /// Instances rejected during generation (not failures).
    pub rejected_instances: u32,
    pub observations: BTreeMap<String, String>,
    /// Interchange payloads to persist when the trial fails: (role, text).
    pub payloads: Vec<(String, String)>,
}

impl TrialRecord {
    fn new(trial: u64) -> Self {
        TrialRecord {
            trial,
            outcome: TrialOutcome::Pass,
            genericity_resamples: 0,
            rejected_instances: 0,
            observations: BTreeMap::new(),
            payloads: Vec::new(),
        }
    }

    fn observe(&mut self, key: &str, value: impl ToString) {
        self.observations.insert(key.into(), value.to_string());
    }
}

/// Aggregated result of a verification run.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check_id: String,
    pub params: CheckParams,
    pub records: Vec<TrialRecord>,
    pub counterexample_files: Vec<PathBuf>,
    /// Wall time; informational only and excluded from primary output.
    pub wall_time_ms: u128,
}

impl CheckReport {
    pub fn passes(&self) -> u64 {
        self.count(TrialOutcome::Pass)
    }

    pub fn fails(&self) -> u64 {
        self.count(TrialOutcome::Fail)
    }

    pub fn outside_hypothesis(&self) -> u64 {
        self.count(TrialOutcome::OutsideHypothesis)
    }

    pub fn candidates(&self) -> u64 {
        self.count(TrialOutcome::Candidate)
    }

    pub fn genericity_violations(&self) -> u64 {
        self.records
            .iter()
            .map(|r| u64::from(r.genericity_resamples))
            .sum()
    }

    fn count(&self, outcome: TrialOutcome) -> u64 {
        self.records.iter().filter(|r| r.outcome == outcome).count() as u64
    }

    /// Human-readable summary; deterministic for fixed parameters and seed.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "check {}: n={} d={} k={} trials={} seed={} height={}\n",
            self.check_id,
            self.params.n,
            self.params.d,
            self.params.k,
            self.params.trials,
            self.params.seed,
            self.params.height,
        ));
        out.push_str(&format!(
            "  pass {} / fail {} / outside-hypothesis {} / candidates {} / genericity-resamples {}\n",
            self.passes(),
            self.fails(),
            self.outside_hypothesis(),
            self.candidates(),
            self.genericity_violations(),
        ));
        for r in &self.records {
            if r.outcome != TrialOutcome::Pass {
                out.push_str(&format!("  trial {}: {}", r.trial, r.outcome.as_str()));
                for (k, v) in &r.observations {
                    out.push_str(&format!(" {k}={v}"));
                }
                out.push('\n');
            }
        }
        for f in &self.counterexample_files {
            out.push_str(&format!("  persisted: {}\n", f.display()));
        }
        out
    }

    /// One structured record per trial, for regression diffing.
    pub fn render_records(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let mut obj = serde_json::Map::new();
            obj.insert("check".into(), self.check_id.clone().into());
            obj.insert("trial".into(), r.trial.into());
            obj.insert("outcome".into(), r.outcome.as_str().into());
            obj.insert("genericity_resamples".into(), r.genericity_resamples.into());
            obj.insert("rejected_instances".into(), r.rejected_instances.into());
            let obs: serde_json::Map<String, serde_json::Value> = r
                .observations
                .iter()
                .map(|(k, v)| (k.clone(), serde_json::Value::from(v.clone())))
                .collect();
            obj.insert("observations".into(), obs.into());
            out.push_str(&serde_json::Value::from(obj).to_string());
            out.push('\n');
        }
        out
    }
}

/// Samples a generic computation twice; both draws must agree on the derived
/// invariant. Disagreement resamples up to the budget, then fails loudly.
/// Returns the agreed value and the number of resampling events.
pub fn with_agreement<T, F>(budget: u32, mut sample: F) -> Result<(T, u32), Error>
where
    T: PartialEq,
    F: FnMut() -> Result<T, Error>,
{
    let mut violations = 0;
    loop {
        let a = sample()?;
        let b = sample()?;
        if a == b {
            return Ok((a, violations));
        }
        violations += 1;
        if violations >= budget {
            return Err(Error::Genericity {
                attempts: violations,
                what: "independent generic samples kept disagreeing".into(),
            });
        }
    }
}

/// A registered check: identifier, one-line statement, parameter validation
/// and the per-trial runner.
pub struct CheckDef {
    pub id: &'static str,
    pub summary: &'static str,
    pub defaults: fn() -> CheckParams,
    pub validate: fn(&CheckParams) -> Result<(), Error>,
    pub run_trial: fn(&CheckParams, u64, &mut ChaCha12Rng, &mut TrialRecord),
}

pub fn registered_checks() -> &'static [CheckDef] {
    checks::REGISTRY
}

pub fn find_check(id: &str) -> Result<&'static CheckDef, Error> {
    registered_checks()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs a registered check: `trials` seeded instances, in parallel, with a
/// deterministic report. Failing instances are persisted as interchange
/// files under the params' artifacts directory.
pub fn verify(check_id: &str, params: &CheckParams) -> Result<CheckReport, Error> {
    let def = find_check(check_id)?;
    if params.trials == 0 {
        return Err(Error::InvalidArgument("trials must be positive".into()));
    }
    (def.validate)(params)?;
    let start = std::time::Instant::now();
    let mut records: Vec<TrialRecord> = (0..params.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = rng_for(params.seed, trial);
            let mut record = TrialRecord::new(trial);
            (def.run_trial)(params, trial, &mut rng, &mut record);
            record
        })
        .collect();
    let files = match &params.artifacts_dir {
        Some(dir) => persist_payloads(&mut records, dir, check_id, params.seed)?,
        None => Vec::new(),
    };
    Ok(CheckReport {
        check_id: check_id.to_string(),
        params: params.clone(),
        records,
        counterexample_files: files,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

/// Writes the interchange payloads of every non-passing trial under `dir`
/// with deterministic names; passing trials drop theirs.
fn persist_payloads(
    records: &mut [TrialRecord],
    dir: &std::path::Path,
    check_id: &str,
    seed: u64,
) -> Result<Vec<PathBuf>, Error> {
    std::fs::create_dir_all(dir)?;
    let mut files = Vec::new();
    for record in records {
        if matches!(record.outcome, TrialOutcome::Pass) {
            record.payloads.clear();
            continue;
        }
        for (role, text) in record.payloads.drain(..) {
            let name = format!("{check_id}-seed{seed}-trial{}-{role}.json", record.trial);
            let path = dir.join(name);
            std::fs::write(&path, text)?;
            files.push(path);
        }
    }
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_example_codim1_bp() {
        let mut params = CheckParams::new(4, 3, 1);
        params.trials = 20;
        params.seed = 7;
        let report = verify("codim1-bp", &params).unwrap();
        assert_eq!(report.passes(), 20);
        assert_eq!(report.fails(), 0);
        for r in &report.records {
            assert_eq!(r.observations["codim_usq"], "4");
        }
    }

    #[test]
    fn unknown_check_is_an_error() {
        assert!(matches!(
            verify("no-such-check", &CheckParams::new(3, 2, 1)),
            Err(Error::UnknownCheck(_))
        ));
    }

    #[test]
    fn invalid_params_rejected_before_running() {
        // quotient-generic needs k <= d.
        let params = CheckParams::new(3, 2, 5);
        assert!(verify("quotient-generic", &params).is_err());
        let mut params = CheckParams::new(3, 3, 1);
        params.trials = 0;
        assert!(verify("codim1-bp", &params).is_err());
    }

    #[test]
    fn reports_are_deterministic_across_worker_counts() {
        let mut params = CheckParams::new(3, 3, 2);
        params.trials = 8;
        params.seed = 11;
        let run_with = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| verify("deg-reduction", &params).unwrap())
        };
        let serial = run_with(1);
        let parallel = run_with(4);
        assert_eq!(serial.render_records(), parallel.render_records());
        assert_eq!(serial.render_text(), parallel.render_text());
        // And identical re-runs reproduce the identical report.
        let again = run_with(2);
        assert_eq!(serial.render_records(), again.render_records());
    }

    #[test]
    fn passing_trials_leave_no_artifacts() {
        let dir = tempfile::tempdir().unwrap();
        let mut params = CheckParams::new(4, 3, 1);
        params.trials = 3;
        params.artifacts_dir = Some(dir.path().to_path_buf());
        let report = verify("codim1-bp", &params).unwrap();
        assert_eq!(report.fails(), 0);
        assert!(report.counterexample_files.is_empty());
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
    }

    #[test]
    fn failing_trials_persist_reloadable_payloads() {
        use crate::formspace::FormSpace;
        use crate::order::MonomialOrder;
        let dir = tempfile::tempdir().unwrap();
        let space = FormSpace::full(2, 2, &MonomialOrder::default_for(2));
        let mut records = vec![TrialRecord::new(3)];
        records[0].outcome = TrialOutcome::Fail;
        records[0]
            .payloads
            .push(("space".into(), crate::interchange::write_space(&space)));
        let files = persist_payloads(&mut records, dir.path(), "demo", 9).unwrap();
        assert_eq!(files.len(), 1);
        assert!(files[0].ends_with("demo-seed9-trial3-space.json"));
        let reloaded = crate::interchange::load_space(&files[0]).unwrap();
        assert_eq!(reloaded, space);
    }
}
