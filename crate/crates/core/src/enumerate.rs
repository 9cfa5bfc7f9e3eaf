//! Lazy enumerators for every set the bijections act on, in lexicographic
//! step order (`U < D`, `E < N`).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{mismatch, ContractError};
use crate::hockey::{MarkedPath, PathTriple};
use crate::path::{GridPoint, NEPath, Step, StepNE, StepUD, UDPath};
use crate::warmup::{AnkPath, AvoidPath, MarkedTiePath, TiePath};

/// Rearranges `v` into the next permutation in lexicographic order.
/// Returns `false` (leaving `v` sorted) once the last one has been passed.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        v.reverse();
        return false;
    };
    let j = v.iter().rposition(|x| *x > v[i]).expect("v[i + 1] > v[i]");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// All words with `first` copies of the first letter and `second` copies of
/// the second, in lexicographic order.
pub struct Arrangements<S> {
    next: Option<Vec<S>>,
}

impl<S: Step> Arrangements<S> {
    pub fn new(first: usize, second: usize) -> Self {
        let [lo, hi] = S::ALPHABET;
        let mut word = vec![lo; first];
        word.resize(first + second, hi);
        Arrangements { next: Some(word) }
    }
}

impl<S: Step> Iterator for Arrangements<S> {
    type Item = Vec<S>;

    fn next(&mut self) -> Option<Vec<S>> {
        let current = self.next.take()?;
        let mut following = current.clone();
        if next_permutation(&mut following) {
            self.next = Some(following);
        }
        Some(current)
    }
}

/// All words of a given length over a two-letter alphabet.
pub struct Words<S> {
    next: Option<Vec<S>>,
}

impl<S: Step> Words<S> {
    pub fn new(len: usize) -> Self {
        Words {
            next: Some(vec![S::ALPHABET[0]; len]),
        }
    }
}

impl<S: Step> Iterator for Words<S> {
    type Item = Vec<S>;

    fn next(&mut self) -> Option<Vec<S>> {
        let current = self.next.take()?;
        let mut following = current.clone();
        // binary increment from the right
        let [lo, hi] = S::ALPHABET;
        for slot in following.iter_mut().rev() {
            if *slot == lo {
                *slot = hi;
                self.next = Some(following);
                return Some(current);
            }
            *slot = lo;
        }
        Some(current)
    }
}

/// Balanced up/down paths of semilength `m`.
pub fn balanced_paths(m: usize) -> impl Iterator<Item = UDPath> + Clone {
    Arrangements::<StepUD>::new(m, m).map(UDPath::new)
}

impl<S: Clone> Clone for Arrangements<S> {
    fn clone(&self) -> Self {
        Arrangements {
            next: self.next.clone(),
        }
    }
}

/// Every element of `T_n`: triples of balanced paths with semilengths summing
/// to `n`.
pub fn enumerate_t(n: usize) -> impl Iterator<Item = PathTriple> {
    (0..=n)
        .flat_map(move |i| (0..=n - i).map(move |j| (i, j, n - i - j)))
        .flat_map(|(i, j, k)| {
            balanced_paths(i).flat_map(move |a| {
                balanced_paths(j).flat_map(move |b| {
                    let a = a.clone();
                    balanced_paths(k)
                        .map(move |c| PathTriple::new_unchecked(a.clone(), b.clone(), c))
                })
            })
        })
}

/// Every element of `D_n`: balanced paths of semilength `n` with a mark.
pub fn enumerate_d(n: usize) -> impl Iterator<Item = MarkedPath> {
    balanced_paths(n).flat_map(move |h| {
        (0..=2 * n).map(move |x| MarkedPath::new(h.clone(), x).expect("mark in range"))
    })
}

/// All `4^n` north/east paths of `2n` steps from the origin.
pub fn enumerate_free(n: usize) -> impl Iterator<Item = NEPath> {
    Words::<StepNE>::new(2 * n).map(NEPath::from_origin)
}

/// Tie paths from `(0, 0)` to `(n, n)`.
pub fn enumerate_x(n: usize) -> impl Iterator<Item = TiePath> {
    Arrangements::<StepNE>::new(n, n)
        .map(|s| TiePath::new(NEPath::from_origin(s)).expect("n easts and n norths"))
}

/// `2n`-step paths from the origin that never return to the diagonal.
pub fn enumerate_y(n: usize) -> impl Iterator<Item = AvoidPath> {
    enumerate_free(n).filter_map(|p| AvoidPath::new(p).ok())
}

/// Tie paths with each of their diagonal points marked in turn.
pub fn enumerate_marked_tie(n: usize) -> impl Iterator<Item = MarkedTiePath> {
    enumerate_x(n).flat_map(move |p| {
        (0..=n).filter_map(move |i| MarkedTiePath::new(p.clone(), i).ok())
    })
}

fn check_nk(n: usize, k: usize) -> Result<(), ContractError> {
    if n == 0 || k < n || k > 2 * n {
        return Err(mismatch("1 <= n <= k <= 2n", alloc::format!("n={n}, k={k}")));
    }
    Ok(())
}

/// `A(n, k)`: paths from `(1, 0)` to `(k, 2n - k)`.
pub fn enumerate_ank(n: usize, k: usize) -> Result<impl Iterator<Item = AnkPath>, ContractError> {
    check_nk(n, k)?;
    Ok(Arrangements::<StepNE>::new(k - 1, 2 * n - k).map(move |s| {
        AnkPath::new(n, k, NEPath::new(GridPoint::new(1, 0), s)).expect("step counts match A(n,k)")
    }))
}

/// `B(n, k)`: the members of `A(n, k)` that never meet the diagonal.
pub fn enumerate_bnk(n: usize, k: usize) -> Result<impl Iterator<Item = AnkPath>, ContractError> {
    Ok(enumerate_ank(n, k)?.filter(AnkPath::in_b))
}
