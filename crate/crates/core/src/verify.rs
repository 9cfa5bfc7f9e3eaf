//! Exhaustive bijectivity checks over finite streams.
//!
//! A check runs in two passes. The domain pass maps every element, records
//! the image in a seen-set, and checks `inverse(map(d)) == d`. The codomain
//! pass checks that every element was hit and that `map(inverse(c)) == c`.
//! Each pass can be split across workers by stream index and the partial
//! results merged with [`DomainPass::merge`] / [`CodomainPass::merge`]; the
//! merged report does not depend on how the stream was split.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// At most this many counterexamples are kept in a report.
pub const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Counterexamples(Vec<(u8, u64, String)>);

impl Counterexamples {
    fn push(&mut self, pass: u8, index: u64, text: String) {
        self.0.push((pass, index, text));
        self.trim();
    }

    fn extend(&mut self, other: Counterexamples) {
        self.0.extend(other.0);
        self.trim();
    }

    fn trim(&mut self) {
        if self.0.len() > MAX_COUNTEREXAMPLES {
            self.0.sort();
            self.0.truncate(MAX_COUNTEREXAMPLES);
        }
    }

    fn into_sorted(mut self) -> Vec<String> {
        self.0.sort();
        self.0.into_iter().map(|(_, _, s)| s).collect()
    }
}

/// Partial result of the domain pass.
#[derive(Debug, Clone)]
pub struct DomainPass<C> {
    domain: u64,
    failures: u64,
    image: BTreeSet<C>,
    counterexamples: Counterexamples,
}

impl<C: Ord> Default for DomainPass<C> {
    fn default() -> Self {
        DomainPass {
            domain: 0,
            failures: 0,
            image: BTreeSet::new(),
            counterexamples: Counterexamples::default(),
        }
    }
}

impl<C: Ord + Clone + fmt::Display> DomainPass<C> {
    /// Processes the `index`-th domain element.
    pub fn observe<D, F, G>(&mut self, index: u64, d: &D, map: &F, inverse: &G)
    where
        D: PartialEq + fmt::Display,
        F: Fn(&D) -> Option<C>,
        G: Fn(&C) -> Option<D>,
    {
        self.domain += 1;
        let Some(c) = map(d) else {
            self.failures += 1;
            self.counterexamples
                .push(0, index, alloc::format!("map undefined at {d}"));
            return;
        };
        match inverse(&c) {
            Some(back) if back == *d => {}
            Some(back) => {
                self.failures += 1;
                self.counterexamples
                    .push(0, index, alloc::format!("{d} -> {c} -> {back}"));
            }
            None => {
                self.failures += 1;
                self.counterexamples
                    .push(0, index, alloc::format!("{d} -> {c} -> (inverse undefined)"));
            }
        }
        // collisions show up as image < domain
        self.image.insert(c);
    }

    pub fn merge(mut self, mut other: DomainPass<C>) -> Self {
        if other.image.len() > self.image.len() {
            core::mem::swap(&mut self.image, &mut other.image);
        }
        self.image.append(&mut other.image);
        self.domain += other.domain;
        self.failures += other.failures;
        self.counterexamples.extend(other.counterexamples);
        self
    }

    pub fn image(&self) -> &BTreeSet<C> {
        &self.image
    }
}

/// Partial result of the codomain pass.
#[derive(Debug, Clone, Default)]
pub struct CodomainPass {
    codomain: u64,
    uncovered: u64,
    failures: u64,
    counterexamples: Counterexamples,
}

impl CodomainPass {
    /// Processes the `index`-th codomain element against the finished image.
    pub fn observe<D, C, F, G>(&mut self, index: u64, c: &C, image: &BTreeSet<C>, map: &F, inverse: &G)
    where
        C: Ord + fmt::Display,
        D: fmt::Display,
        F: Fn(&D) -> Option<C>,
        G: Fn(&C) -> Option<D>,
    {
        self.codomain += 1;
        if !image.contains(c) {
            self.uncovered += 1;
            self.counterexamples
                .push(1, index, alloc::format!("not in image: {c}"));
        }
        let Some(d) = inverse(c) else {
            self.failures += 1;
            self.counterexamples
                .push(1, index, alloc::format!("inverse undefined at {c}"));
            return;
        };
        match map(&d) {
            Some(again) if again == *c => {}
            Some(again) => {
                self.failures += 1;
                self.counterexamples
                    .push(1, index, alloc::format!("{c} -> {d} -> {again}"));
            }
            None => {
                self.failures += 1;
                self.counterexamples
                    .push(1, index, alloc::format!("{c} -> {d} -> (map undefined)"));
            }
        }
    }

    pub fn merge(mut self, other: CodomainPass) -> Self {
        self.codomain += other.codomain;
        self.uncovered += other.uncovered;
        self.failures += other.failures;
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

/// Outcome of a bijectivity check. Failures are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub domain: u64,
    pub codomain: u64,
    /// Number of distinct images.
    pub image: u64,
    /// Round trips that failed or were undefined, in either direction.
    pub round_trip_failures: u64,
    /// Codomain elements no domain element maps to.
    pub uncovered: u64,
    pub counterexamples: Vec<String>,
}

impl BijectionReport {
    pub fn from_passes<C>(domain: DomainPass<C>, codomain: CodomainPass) -> Self {
        let mut examples = domain.counterexamples;
        examples.extend(codomain.counterexamples);
        BijectionReport {
            domain: domain.domain,
            codomain: codomain.codomain,
            image: domain.image.len() as u64,
            round_trip_failures: domain.failures + codomain.failures,
            uncovered: codomain.uncovered,
            counterexamples: examples.into_sorted(),
        }
    }

    pub fn passed(&self) -> bool {
        self.domain == self.codomain
            && self.image == self.domain
            && self.round_trip_failures == 0
            && self.uncovered == 0
    }
}

impl fmt::Display for BijectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "domain={}", self.domain)?;
        writeln!(f, "codomain={}", self.codomain)?;
        writeln!(f, "image={}", self.image)?;
        writeln!(f, "round_trip_failures={}", self.round_trip_failures)?;
        writeln!(f, "uncovered={}", self.uncovered)?;
        write!(f, "counterexamples=[")?;
        for (i, c) in self.counterexamples.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(c)?;
        }
        f.write_str("]")
    }
}

/// Single-threaded check of `map: domain -> codomain` against `inverse`.
pub fn verify_bijection<D, C, F, G>(
    domain: impl IntoIterator<Item = D>,
    map: F,
    inverse: G,
    codomain: impl IntoIterator<Item = C>,
) -> BijectionReport
where
    D: PartialEq + fmt::Display,
    C: Ord + Clone + fmt::Display,
    F: Fn(&D) -> Option<C>,
    G: Fn(&C) -> Option<D>,
{
    let mut forward = DomainPass::default();
    for (i, d) in domain.into_iter().enumerate() {
        forward.observe(i as u64, &d, &map, &inverse);
    }
    let mut backward = CodomainPass::default();
    for (i, c) in codomain.into_iter().enumerate() {
        backward.observe(i as u64, &c, &forward.image, &map, &inverse);
    }
    BijectionReport::from_passes(forward, backward)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_passes() {
        let r = verify_bijection(0u32..10, |x| Some((x + 3) % 10), |y| Some((y + 7) % 10), 0u32..10);
        assert!(r.passed(), "{r}");
        assert_eq!((r.domain, r.codomain, r.image), (10, 10, 10));
    }

    #[test]
    fn collapsing_map_fails() {
        let r = verify_bijection(0u32..10, |x| Some(x / 2), |y| Some(*y), 0u32..10);
        assert!(!r.passed());
        assert_eq!(r.image, 5);
        assert_eq!(r.uncovered, 5);
        assert!(r.round_trip_failures > 0);
        assert!(r.counterexamples.len() <= MAX_COUNTEREXAMPLES);
    }

    #[test]
    fn split_passes_merge_to_same_report() {
        let map = |x: &u32| Some((x * 7) % 31);
        let inv = |y: &u32| Some((y * 9) % 31);
        let whole = verify_bijection(0u32..31, map, inv, 0u32..31);
        let mut even = DomainPass::default();
        let mut odd = DomainPass::default();
        for i in 0u32..31 {
            let part = if i % 2 == 0 { &mut even } else { &mut odd };
            part.observe(i as u64, &i, &map, &inv);
        }
        let forward = odd.merge(even);
        let mut back = CodomainPass::default();
        for c in 0u32..31 {
            back.observe(c as u64, &c, forward.image(), &map, &inv);
        }
        assert_eq!(BijectionReport::from_passes(forward, back), whole);
        assert!(whole.passed());
    }
}
