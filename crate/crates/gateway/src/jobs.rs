use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::mpsc::{channel, Receiver, Sender};
use std::sync::{Arc, Condvar, Mutex};
use std::thread::JoinHandle;
use std::time::{Duration, Instant};

use chrono::{DateTime, Utc};
use qr_engine::{Progress, RetrieveReport, Scope, StationConfig};
use serde::{Deserialize, Serialize};

use crate::users::random_hex;

pub const DEFAULT_WORKERS: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub scope: Scope,
    pub study_uid: String,
    pub series_uid: Option<String>,
    pub station: StationConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JobState {
    Queued,
    Running,
    Completed,
    Failed,
}

impl JobState {
    pub fn is_terminal(self) -> bool {
        matches!(self, JobState::Completed | JobState::Failed)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetrieveJob {
    pub id: String,
    #[serde(flatten)]
    pub spec: JobSpec,
    pub state: JobState,
    pub progress: Progress,
    pub report: Option<RetrieveReport>,
    pub submitted_at: DateTime<Utc>,
    pub finished_at: Option<DateTime<Utc>>,
}

pub type Runner = Arc<dyn Fn(&JobSpec, &mut dyn FnMut(Progress)) -> RetrieveReport + Send + Sync>;

struct Shared {
    jobs: Mutex<HashMap<String, RetrieveJob>>,
    changed: Condvar,
}

impl Shared {
    fn with_job(&self, id: &str, f: impl FnOnce(&mut RetrieveJob)) {
        let mut jobs = self.jobs.lock().unwrap_or_else(|p| p.into_inner());
        if let Some(job) = jobs.get_mut(id) {
            f(job);
        }
        self.changed.notify_all();
    }
}

/// Bounded pool of retrieval workers.
pub struct JobManager {
    shared: Arc<Shared>,
    queue: Option<Sender<String>>,
    workers: Vec<JoinHandle<()>>,
}

fn failure_report(spec: &JobSpec, message: String) -> RetrieveReport {
    RetrieveReport {
        scope: spec.scope,
        study_uid: spec.study_uid.clone(),
        series_uid: spec.series_uid.clone(),
        expected: 0,
        completed: 0,
        failed: 0,
        output_root: Default::default(),
        per_series: Vec::new(),
        error: Some(message),
    }
}

fn work(shared: Arc<Shared>, queue: Arc<Mutex<Receiver<String>>>, runner: Runner) {
    loop {
        let next = queue.lock().unwrap_or_else(|p| p.into_inner()).recv();
        let Ok(id) = next else { return };
        let mut spec = None;
        shared.with_job(&id, |job| {
            job.state = JobState::Running;
            spec = Some(job.spec.clone());
        });
        let Some(spec) = spec else { continue };
        let report = catch_unwind(AssertUnwindSafe(|| {
            runner(&spec, &mut |p: Progress| {
                shared.with_job(&id, |job| {
                    if p.completed >= job.progress.completed && p.failed >= job.progress.failed {
                        job.progress = p;
                    }
                })
            })
        }))
        .unwrap_or_else(|_| failure_report(&spec, "retrieval worker panicked".into()));
        shared.with_job(&id, |job| {
            job.state = if report.success() { JobState::Completed } else { JobState::Failed };
            job.progress = Progress {
                completed: report.completed,
                failed: report.failed,
                expected: report.expected,
            };
            job.report = Some(report);
            job.finished_at = Some(Utc::now());
        });
    }
}

impl JobManager {
    pub fn new(workers: usize, runner: Runner) -> JobManager {
        let shared = Arc::new(Shared { jobs: Mutex::new(HashMap::new()), changed: Condvar::new() });
        let (tx, rx) = channel();
        let rx = Arc::new(Mutex::new(rx));
        let workers = (0..workers.max(1))
            .map(|i| {
                let (shared, rx, runner) = (shared.clone(), rx.clone(), runner.clone());
                std::thread::Builder::new()
                    .name(format!("retrieve-{i}"))
                    .spawn(move || work(shared, rx, runner))
                    .expect("spawn retrieval worker")
            })
            .collect();
        JobManager { shared, queue: Some(tx), workers }
    }

    /// Queues a job. An identical job still queued or running is returned
    /// instead, with `false`.
    pub fn submit(&self, spec: JobSpec) -> (RetrieveJob, bool) {
        let mut jobs = self.shared.jobs.lock().unwrap_or_else(|p| p.into_inner());
        if let Some(existing) = jobs.values().find(|j| !j.state.is_terminal() && j.spec == spec) {
            return (existing.clone(), false);
        }
        let job = RetrieveJob {
            id: random_hex(16),
            spec,
            state: JobState::Queued,
            progress: Progress::default(),
            report: None,
            submitted_at: Utc::now(),
            finished_at: None,
        };
        jobs.insert(job.id.clone(), job.clone());
        drop(jobs);
        if let Some(q) = &self.queue {
            let _ = q.send(job.id.clone());
        }
        (job, true)
    }

    pub fn get(&self, id: &str) -> Option<RetrieveJob> {
        self.shared.jobs.lock().unwrap_or_else(|p| p.into_inner()).get(id).cloned()
    }

    /// Blocks until the job is terminal or `timeout` passes.
    pub fn wait(&self, id: &str, timeout: Duration) -> Option<RetrieveJob> {
        let deadline = Instant::now() + timeout;
        let mut jobs = self.shared.jobs.lock().unwrap_or_else(|p| p.into_inner());
        loop {
            let job = jobs.get(id)?.clone();
            let left = deadline.saturating_duration_since(Instant::now());
            if job.state.is_terminal() || left.is_zero() {
                return Some(job);
            }
            jobs = self.shared.changed.wait_timeout(jobs, left).unwrap_or_else(|p| p.into_inner()).0;
        }
    }
}

impl Drop for JobManager {
    fn drop(&mut self) {
        self.queue.take();
        for w in self.workers.drain(..) {
            let _ = w.join();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicU32, Ordering};

    fn spec(study: &str) -> JobSpec {
        JobSpec {
            scope: Scope::Study,
            study_uid: study.into(),
            series_uid: None,
            station: StationConfig::new("s", "AE", "127.0.0.1", 104),
        }
    }

    fn report(spec: &JobSpec, completed: u32, failed: u32) -> RetrieveReport {
        RetrieveReport { expected: completed + failed, completed, failed, error: None, ..failure_report(spec, String::new()) }
    }

    #[test]
    fn runs_and_reports_progress() {
        let runner: Runner = Arc::new(|s, p| {
            for i in 1..=3 {
                p(Progress { completed: i, failed: 0, expected: 3 });
            }
            report(s, 3, 0)
        });
        let jobs = JobManager::new(2, runner);
        let (job, fresh) = jobs.submit(spec("1.2"));
        assert!(fresh);
        let done = jobs.wait(&job.id, Duration::from_secs(5)).unwrap();
        assert_eq!(done.state, JobState::Completed);
        assert_eq!(done.progress, Progress { completed: 3, failed: 0, expected: 3 });
    }

    #[test]
    fn identical_in_flight_job_is_deduplicated() {
        let gate = Arc::new((Mutex::new(false), Condvar::new()));
        let g = gate.clone();
        let runner: Runner = Arc::new(move |s, _| {
            let (lock, cv) = &*g;
            let mut open = lock.lock().unwrap();
            while !*open {
                open = cv.wait(open).unwrap();
            }
            report(s, 1, 0)
        });
        let jobs = JobManager::new(1, runner);
        let (a, _) = jobs.submit(spec("1.2"));
        let (b, fresh) = jobs.submit(spec("1.2"));
        let (c, _) = jobs.submit(spec("1.3"));
        assert!(!fresh);
        assert_eq!(a.id, b.id);
        assert_ne!(a.id, c.id);
        *gate.0.lock().unwrap() = true;
        gate.1.notify_all();
        assert_eq!(jobs.wait(&a.id, Duration::from_secs(5)).unwrap().state, JobState::Completed);
        // terminal jobs are not reused
        let (d, fresh) = jobs.submit(spec("1.2"));
        assert!(fresh);
        assert_ne!(d.id, a.id);
    }

    #[test]
    fn failures_and_panics_end_failed() {
        let calls = Arc::new(AtomicU32::new(0));
        let n = calls.clone();
        let runner: Runner = Arc::new(move |s, _| match n.fetch_add(1, Ordering::SeqCst) {
            0 => report(s, 4, 1),
            1 => panic!("boom"),
            _ => report(s, 5, 0),
        });
        let jobs = JobManager::new(1, runner);
        let first = jobs.submit(spec("1.2")).0;
        let done = jobs.wait(&first.id, Duration::from_secs(5)).unwrap();
        assert_eq!((done.state, done.progress.failed), (JobState::Failed, 1));
        let second = jobs.submit(spec("1.2")).0;
        assert_eq!(jobs.wait(&second.id, Duration::from_secs(5)).unwrap().state, JobState::Failed);
        let third = jobs.submit(spec("1.2")).0;
        assert_eq!(jobs.wait(&third.id, Duration::from_secs(5)).unwrap().state, JobState::Completed);
    }
}
