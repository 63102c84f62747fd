//! Closed-form stable-set lower bounds for graphs without induced `K_t`
//! subdivisions. All logarithms are base 2 and real-valued.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq)]
pub enum BoundError {
    #[error("n must be at least 2 (got {0})")]
    SmallN(usize),
    #[error("k must be at least 1 (got {0})")]
    SmallK(usize),
    #[error("t must be at least 3 (got {0})")]
    SmallT(usize),
    #[error("d must be at least 2 (got {0})")]
    SmallD(usize),
}

fn check(n: usize, k: usize, t: usize) -> Result<(), BoundError> {
    if n < 2 {
        return Err(BoundError::SmallN(n));
    }
    if k < 1 {
        return Err(BoundError::SmallK(k));
    }
    if t < 3 {
        return Err(BoundError::SmallT(t));
    }
    Ok(())
}

/// `(2t)^4`.
pub fn star_constant(t: usize) -> f64 {
    ((2 * t) as f64).powi(4)
}

/// `n / ((2t)^{4(k-1)} (log n)^{3(k-1)} log d)`: the guarantee for graphs with
/// clique number at most `k` and maximum degree at most `d`.
pub fn bound_main(n: usize, k: usize, t: usize, d: usize) -> Result<f64, BoundError> {
    check(n, k, t)?;
    if d < 2 {
        return Err(BoundError::SmallD(d));
    }
    let e = (k - 1) as i32;
    let l = (n as f64).log2();
    let denom = star_constant(t).powi(e) * l.powi(3 * e) * (d as f64).log2();
    Ok(n as f64 / denom)
}

/// `n / ((2t)^{4(k-1)} (log n)^{3k-2})`, the degree-free form (`d = n`).
pub fn bound_no_degree(n: usize, k: usize, t: usize) -> Result<f64, BoundError> {
    check(n, k, t)?;
    let l = (n as f64).log2();
    let denom = star_constant(t).powi((k - 1) as i32) * l.powi((3 * k - 2) as i32);
    Ok(n as f64 / denom)
}

/// `(2t)^{-4(t-2)}`.
pub fn clique_free_constant(t: usize) -> f64 {
    ((2 * t) as f64).powi(-4 * (t as i32 - 2))
}

/// `c_t n / (log n)^{3t-5}`: the bound for `K_t`-subdivision-free graphs,
/// whose clique number is automatically below `t`.
pub fn bound_clique_free(n: usize, t: usize) -> Result<f64, BoundError> {
    check(n, 1, t)?;
    let l = (n as f64).log2();
    Ok(clique_free_constant(t) * n as f64 / l.powi(3 * t as i32 - 5))
}

/// The order to use in place of `t` when excluding subdivisions of an
/// arbitrary pattern `h`: a `K_{|h|}` subdivision with lengths at least two
/// contains a subdivision of every graph on `|h|` vertices.
pub fn general_h_order(h: &Graph) -> usize {
    h.n()
}

/// Integer form of a real lower bound: a set of size `ceil(x)` has size `>= x`.
pub fn ceil_bound(x: f64) -> usize {
    if x <= 0.0 {
        0
    } else if x.is_finite() {
        x.ceil() as usize
    } else {
        usize::MAX
    }
}

/// Derived quantities for one `(n, k, t, d)` instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivedConstants {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub d: usize,
    /// `(2t)^4`
    pub big_t: f64,
    /// `log n`
    pub log_n: f64,
    /// `log d`
    pub log_d: f64,
}

impl DerivedConstants {
    pub fn new(n: usize, k: usize, t: usize, d: usize) -> Result<Self, BoundError> {
        check(n, k, t)?;
        if d < 2 {
            return Err(BoundError::SmallD(d));
        }
        Ok(DerivedConstants {
            n,
            k,
            t,
            d,
            big_t: star_constant(t),
            log_n: (n as f64).log2(),
            log_d: (d as f64).log2(),
        })
    }

    /// Constants for a graph with maximum degree `delta`, with `n` and `d`
    /// lifted to 2 where the graph is smaller than the formula's domain.
    pub fn for_graph(n: usize, k: usize, t: usize, delta: usize) -> Result<Self, BoundError> {
        let n = n.max(2);
        Self::new(n, k, t, delta.max(2).min(n))
    }

    pub fn bound(&self) -> f64 {
        bound_main(self.n, self.k, self.t, self.d).expect("validated on construction")
    }

    /// Longest permitted subdivision length, `floor((log n)^2)`.
    pub fn max_len(&self) -> usize {
        max_subdivision_len(self.n)
    }
}

/// `floor((log n)^2)`, 0 for `n <= 1`.
pub fn max_subdivision_len(n: usize) -> usize {
    if n <= 1 {
        return 0;
    }
    let l = (n as f64).log2();
    (l * l).floor() as usize
}
