//! A [`Runner`] that fans each pass out over scoped threads.
//!
//! Worker `w` of `P` takes the stream elements whose index is `w` modulo `P`.
//! Every worker re-creates the stream itself, so elements never cross
//! threads. Partial results are merged in worker order, and the merged
//! reports are identical to the sequential ones.

use std::thread;

use lattice_bijections_core::suites::{Item, LawReport, Runner, Sequential};
use lattice_bijections_core::verify::{BijectionReport, CodomainPass, DomainPass};

#[derive(Debug, Clone, Copy)]
pub struct Parallel {
    workers: usize,
}

impl Parallel {
    pub fn new(workers: usize) -> Self {
        Parallel {
            workers: workers.max(1),
        }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    /// Runs `work(w, P)` on every worker and folds the results in order.
    fn fan_out<R: Send>(&self, work: impl Fn(usize, usize) -> R + Sync, merge: impl Fn(R, R) -> R) -> R {
        let p = self.workers;
        let parts: Vec<R> = thread::scope(|s| {
            let work = &work;
            let handles: Vec<_> = (0..p).map(|w| s.spawn(move || work(w, p))).collect();
            handles
                .into_iter()
                .map(|h| h.join().unwrap_or_else(|e| std::panic::resume_unwind(e)))
                .collect()
        });
        parts.into_iter().reduce(merge).expect("at least one worker")
    }
}

fn mine(index: usize, w: usize, p: usize) -> bool {
    index % p == w
}

impl Runner for Parallel {
    fn verify<D, C, I, J>(
        &self,
        domain: impl Fn() -> I + Sync,
        map: impl Fn(&D) -> Option<C> + Sync,
        inverse: impl Fn(&C) -> Option<D> + Sync,
        codomain: impl Fn() -> J + Sync,
    ) -> BijectionReport
    where
        D: Item + PartialEq,
        C: Item + Ord + Clone,
        I: Iterator<Item = D>,
        J: Iterator<Item = C>,
    {
        if self.workers == 1 {
            return Sequential.verify(domain, map, inverse, codomain);
        }
        let forward = self.fan_out(
            |w, p| {
                let mut part = DomainPass::default();
                for (i, d) in domain().enumerate().filter(|(i, _)| mine(*i, w, p)) {
                    part.observe(i as u64, &d, &map, &inverse);
                }
                part
            },
            DomainPass::merge,
        );
        let image = forward.image();
        let backward = self.fan_out(
            |w, p| {
                let mut part = CodomainPass::default();
                for (i, c) in codomain().enumerate().filter(|(i, _)| mine(*i, w, p)) {
                    part.observe(i as u64, &c, image, &map, &inverse);
                }
                part
            },
            CodomainPass::merge,
        );
        BijectionReport::from_passes(forward, backward)
    }

    fn check_law<D, I>(
        &self,
        stream: impl Fn() -> I + Sync,
        law: impl Fn(&D) -> Result<(), String> + Sync,
    ) -> LawReport
    where
        D: Item,
        I: Iterator<Item = D>,
    {
        self.fan_out(
            |w, p| {
                let mut part = LawReport::default();
                for (i, d) in stream().enumerate().filter(|(i, _)| mine(*i, w, p)) {
                    part.observe(i as u64, &d, &law);
                }
                part
            },
            LawReport::merge,
        )
    }
}
