//! Brute-force enumeration of non-negative up-down lattice paths.
//!
//! A path starts at height 0 and takes steps `U = (1, 1)` and `D = (1, -1)`
//! without going below the axis. Its weight is `t^nu` where `nu` counts the
//! down-steps that land on an odd height.

use std::fmt;

use crate::catalanseq::narayana_conv;
use crate::error::{Error, Result};
use crate::exactring::{Integer, Ring, UniPoly};
use crate::report::CheckReport;

pub const DEFAULT_PATH_CAP: usize = 22;

/// Environment variable overriding the enumeration cap.
pub const PATH_CAP_ENV: &str = "HANKEL_PATH_CAP";

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    Up,
    Down,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    /// `None` if the steps dip below the axis.
    pub fn new(steps: Vec<Step>) -> Option<Self> {
        let mut h = 0i64;
        for s in &steps {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 {
                return None;
            }
        }
        Some(Path { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights after each step.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        self.steps
            .iter()
            .map(|s| {
                match s {
                    Step::Up => h += 1,
                    Step::Down => h -= 1,
                }
                h
            })
            .collect()
    }

    pub fn end_height(&self) -> usize {
        self.heights().last().copied().unwrap_or(0)
    }

    /// Number of down-steps landing at odd height.
    pub fn odd_landings(&self) -> usize {
        self.steps
            .iter()
            .zip(self.heights())
            .filter(|(s, h)| **s == Step::Down && h % 2 == 1)
            .count()
    }

    /// `t^nu(P)`
    pub fn weight(&self) -> UniPoly {
        UniPoly::monomial(Integer::one(), self.odd_landings())
    }
}

/// Rendered as the sequence of heights, e.g. `(1,2,1,0)`.
impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hs: Vec<String> = self.heights().iter().map(|h| h.to_string()).collect();
        write!(f, "({})", hs.join(","))
    }
}

pub fn path_weight(p: &Path) -> UniPoly {
    p.weight()
}

/// Enumerator refusing path lengths above `cap`.
#[derive(Clone, Copy, Debug)]
pub struct PathOracle {
    pub cap: usize,
}

impl Default for PathOracle {
    fn default() -> Self {
        PathOracle { cap: DEFAULT_PATH_CAP }
    }
}

impl PathOracle {
    pub fn new(cap: usize) -> Self {
        PathOracle { cap }
    }

    /// Cap from `HANKEL_PATH_CAP`, falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        let cap = std::env::var(PATH_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_PATH_CAP);
        PathOracle { cap }
    }

    fn check_cap(&self, j: usize) -> Result<()> {
        if j > self.cap {
            return Err(Error::PathCapExceeded {
                length: j,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// All paths of length `j` ending at height `k`.
    pub fn enumerate_paths(&self, j: usize, k: usize) -> Result<Vec<Path>> {
        self.check_cap(j)?;
        let mut out = Vec::new();
        let mut steps = Vec::with_capacity(j);
        walk(j, k, 0, &mut steps, &mut |s| out.push(Path { steps: s.to_vec() }));
        Ok(out)
    }

    /// Total weight of all paths from `(0,0)` to `(j,k)`, summed during the
    /// depth-first walk without storing paths.
    pub fn a_weight(&self, j: usize, k: usize) -> Result<UniPoly> {
        self.check_cap(j)?;
        let mut counts = vec![0u64; j / 2 + 1];
        let mut steps = Vec::with_capacity(j);
        walk(j, k, 0, &mut steps, &mut |s| {
            let p = Path { steps: s.to_vec() };
            counts[p.odd_landings()] += 1;
        });
        Ok(UniPoly::new(counts.into_iter().map(Integer::from).collect()))
    }

    /// `C_{k,n}(t)` equals the weight of paths from `(0,0)` to `(2n+k-1, k-1)`.
    pub fn prop1_check(&self, k: usize, n: usize) -> Result<CheckReport> {
        if k < 1 {
            return Err(Error::InvalidConvolutionIndex(k as i64));
        }
        let paths = self.a_weight(2 * n + k - 1, k - 1)?;
        let conv = narayana_conv(k as i64, n as i64)?;
        Ok(CheckReport::equal(
            "prop1",
            &[("k", k as i64), ("n", n as i64)],
            &paths,
            &conv,
            UniPoly::render,
        ))
    }
}

fn walk(remaining: usize, target: usize, height: usize, steps: &mut Vec<Step>, visit: &mut dyn FnMut(&[Step])) {
    if remaining == 0 {
        if height == target {
            visit(steps);
        }
        return;
    }
    // cannot reach the target any more
    if height.abs_diff(target) > remaining {
        return;
    }
    steps.push(Step::Up);
    walk(remaining - 1, target, height + 1, steps, visit);
    steps.pop();
    if height > 0 {
        steps.push(Step::Down);
        walk(remaining - 1, target, height - 1, steps, visit);
        steps.pop();
    }
}

/// Weights `a(n, h, t)` for all `n <= j` from the step recurrences
/// `a(n, 2i) = a(n-1, 2i-1) + a(n-1, 2i+1)` and
/// `a(n, 2i-1) = a(n-1, 2i-2) + t a(n-1, 2i)`; row `n` is indexed by height.
pub fn a_weight_table(j: usize) -> Vec<Vec<UniPoly>> {
    let t = UniPoly::var();
    let mut rows = vec![vec![UniPoly::one()]];
    for n in 1..=j {
        let prev = &rows[n - 1];
        let at = |h: usize| prev.get(h).cloned().unwrap_or_else(UniPoly::zero);
        let row = (0..=n)
            .map(|h| {
                let from_below = if h == 0 { UniPoly::zero() } else { at(h - 1) };
                let from_above = at(h + 1);
                if h % 2 == 0 {
                    from_below + from_above
                } else {
                    from_below + &t * &from_above
                }
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `a(j, k, t)` via [`a_weight_table`].
pub fn a_weight_recurrence(j: usize, k: usize) -> UniPoly {
    a_weight_table(j)[j].get(k).cloned().unwrap_or_else(UniPoly::zero)
}
