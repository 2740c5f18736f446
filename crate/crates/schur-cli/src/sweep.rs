//! Exhaustive desk-scale verification over all shapes within bounds,
//! fanned out over a small worker pool.

use schur_core::{
    conjecture_check, main_identity, quantum_identity, verify_identity, Mode, Partition,
};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepWhat {
    MainIdentity,
    QuantumIdentity,
    Conjecture,
}

impl SweepWhat {
    pub fn parse(s: &str) -> Option<SweepWhat> {
        match s {
            "main-identity" => Some(SweepWhat::MainIdentity),
            "quantum-identity" => Some(SweepWhat::QuantumIdentity),
            "conjecture" => Some(SweepWhat::Conjecture),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SweepWhat::MainIdentity => "main-identity",
            SweepWhat::QuantumIdentity => "quantum-identity",
            SweepWhat::Conjecture => "conjecture",
        }
    }

    /// Bound used when the flag is absent; matches the exhaustive ranges
    /// the test suite locks in.
    pub fn default_max_boxes(self) -> u64 {
        match self {
            SweepWhat::MainIdentity | SweepWhat::QuantumIdentity => 12,
            SweepWhat::Conjecture => 9,
        }
    }
}

pub struct SweepOutcome {
    pub shapes: usize,
    pub cases: usize,
    pub failures: Vec<String>,
}

fn check_case(what: SweepWhat, lam: &Partition, k: usize) -> Option<String> {
    match what {
        SweepWhat::MainIdentity | SweepWhat::QuantumIdentity => {
            let terms = if what == SweepWhat::QuantumIdentity {
                quantum_identity(lam, k)
            } else {
                main_identity(lam, k)
            };
            match verify_identity(&terms, Mode::Specialized) {
                Err(m) => Some(format!("{lam} k={k}: term {}: {}", m.index, m.reason)),
                Ok(rep) if !rep.is_zero() => Some(format!(
                    "{lam} k={k}: LHS - RHS kept {} monomials",
                    rep.residual.term_count()
                )),
                Ok(_) => None,
            }
        }
        SweepWhat::Conjecture => {
            if conjecture_check(lam, k).holds {
                None
            } else {
                Some(format!("{lam} k={k}: signed shape tables differ"))
            }
        }
    }
}

pub fn run(what: SweepWhat, max_boxes: u64, max_corners: usize, jobs: usize) -> SweepOutcome {
    let shapes: Vec<Partition> = Partition::all_up_to(max_boxes)
        .into_iter()
        .filter(|p| !p.is_empty() && p.corner_count() <= max_corners)
        .collect();
    let next = AtomicUsize::new(0);
    let cases = AtomicUsize::new(0);
    let failures: Mutex<Vec<String>> = Mutex::new(Vec::new());

    let workers = jobs.clamp(1, shapes.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(lam) = shapes.get(i) else { break };
                for k in 1..=lam.corner_count() {
                    cases.fetch_add(1, Ordering::Relaxed);
                    if let Some(msg) = check_case(what, lam, k) {
                        failures.lock().unwrap().push(msg);
                    }
                }
            });
        }
    });

    let mut failures = failures.into_inner().unwrap();
    failures.sort();
    SweepOutcome {
        shapes: shapes.len(),
        cases: cases.into_inner(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass_regardless_of_worker_count() {
        for jobs in [1, 4] {
            let out = run(SweepWhat::MainIdentity, 6, 4, jobs);
            assert_eq!(out.shapes, 29);
            assert_eq!(out.cases, 45);
            assert!(out.failures.is_empty());
        }
        let out = run(SweepWhat::Conjecture, 5, 4, 2);
        assert!(out.failures.is_empty());
        let out = run(SweepWhat::QuantumIdentity, 5, 4, 2);
        assert!(out.failures.is_empty());
    }
}
