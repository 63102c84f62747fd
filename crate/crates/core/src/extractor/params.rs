use std::fmt;

use crate::certificates::bounds::star_constant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Exact constants; every early return is guaranteed to meet the bound.
    Faithful,
    /// User constants so the construction activates on small inputs.
    /// Certificates are still verified, but the size guarantee is dropped.
    Scaled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Faithful => "faithful",
            Mode::Scaled => "scaled",
        })
    }
}

/// Knobs for one extraction run.
///
/// In faithful mode the scaled overrides are ignored: the star constant is
/// `(2t)^4`, the log coefficient is 3 and the density margin is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    pub t: usize,
    pub k: usize,
    pub mode: Mode,
    /// Replaces `(2t)^4` in scaled mode.
    pub star_constant: f64,
    /// Replaces the coefficient 3 of the `(log n)^{3(k-1)}` exponent.
    pub log_exponent: f64,
    /// Multiplies every sparsity threshold (star building, sparsification
    /// and the route-phase density filter).
    pub density_margin: f64,
    /// Skip the greedy and high-degree early returns at the top level.
    pub force_pipeline: bool,
    /// Recursive calls allowed before nested calls fall back to greedy.
    pub work_budget: usize,
    /// Top-level pipeline attempts. A stuck attempt rules out its pair of
    /// leading centres and starts over; only scaled runs use more than one.
    pub pipeline_attempts: usize,
    /// Reserved; the algorithm is deterministic.
    pub rng_seed: u64,
    pub recursion_depth_limit: usize,
}

impl Params {
    pub fn faithful(t: usize, k: usize) -> Self {
        Params {
            t,
            k,
            mode: Mode::Faithful,
            star_constant: star_constant(t),
            log_exponent: 3.0,
            density_margin: 1.0,
            force_pipeline: false,
            work_budget: usize::MAX,
            pipeline_attempts: 1,
            rng_seed: 0,
            recursion_depth_limit: 4096,
        }
    }

    /// Scaled defaults: star constant 1, no log factor, and a density
    /// margin of `(2t)^3`, which lifts the semi-sparsity threshold to 1.
    pub fn scaled(t: usize, k: usize) -> Self {
        Params {
            mode: Mode::Scaled,
            star_constant: 1.0,
            log_exponent: 0.0,
            density_margin: ((2 * t) as f64).powi(3),
            work_budget: 256,
            pipeline_attempts: 128,
            recursion_depth_limit: 1024,
            ..Params::faithful(t, k)
        }
    }

    pub fn with_force_pipeline(mut self, force: bool) -> Self {
        self.force_pipeline = force;
        self
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.t < 3 {
            return Err(format!("t must be at least 3 (got {})", self.t));
        }
        if self.k < 1 {
            return Err(format!("k must be at least 1 (got {})", self.k));
        }
        if self.mode == Mode::Scaled {
            if !(self.star_constant > 0.0 && self.star_constant.is_finite()) {
                return Err("star constant must be positive".into());
            }
            if !(self.log_exponent >= 0.0 && self.log_exponent.is_finite()) {
                return Err("log exponent must be nonnegative".into());
            }
            if !(self.density_margin > 0.0 && self.density_margin.is_finite()) {
                return Err("density margin must be positive".into());
            }
        }
        if self.pipeline_attempts == 0 {
            return Err("pipeline attempts must be positive".into());
        }
        if self.recursion_depth_limit == 0 {
            return Err("recursion depth limit must be positive".into());
        }
        Ok(())
    }

    pub fn is_faithful(&self) -> bool {
        self.mode == Mode::Faithful
    }

    fn base(&self) -> f64 {
        match self.mode {
            Mode::Faithful => star_constant(self.t),
            Mode::Scaled => self.star_constant,
        }
    }

    fn log_coeff(&self) -> f64 {
        match self.mode {
            Mode::Faithful => 3.0,
            Mode::Scaled => self.log_exponent,
        }
    }

    fn density(&self) -> f64 {
        match self.mode {
            Mode::Faithful => 1.0,
            Mode::Scaled => self.density_margin,
        }
    }

    /// `T^{k-1} L^{c(k-1)} D`, the expansion factor a stable set must reach.
    pub fn expansion_threshold(&self, n: usize, k: usize, d: usize) -> f64 {
        let e = (k - 1) as f64;
        let l = (n as f64).log2();
        self.base().powf(e) * l.powf(self.log_coeff() * e) * (d.max(2) as f64).log2()
    }

    /// Stable-set size this level has to beat: `n / (T^{k-1} L^{c(k-1)} D)`.
    pub fn bound(&self, n: usize, k: usize, d: usize) -> f64 {
        if n < 2 {
            return n as f64;
        }
        n as f64 / self.expansion_threshold(n, k, d)
    }

    /// Leaf-set size promised when a star centre is added:
    /// `d / (2 T^{k-2} D^{c(k-2)+1})`.
    pub fn star_target(&self, d: usize, k: usize) -> f64 {
        let e = k.saturating_sub(2) as f64;
        let dd = (d.max(2) as f64).log2();
        d as f64 / (2.0 * self.base().powf(e) * dd.powf(self.log_coeff() * e + 1.0))
    }

    /// Sparsity of the finished star system, `1/(4t^2)` times the margin.
    pub fn final_sparsity(&self) -> f64 {
        self.density() / (4.0 * (self.t * self.t) as f64)
    }

    /// Semi-sparsity the star system is built with: `final / (2t)`.
    pub fn semi_sparsity(&self) -> f64 {
        self.final_sparsity() / (2 * self.t) as f64
    }

    /// Route-phase density filter: a vertex is set aside when it has at least
    /// this fraction of some leaf set as neighbours, `1/(2t^2 L^2)` times the margin.
    pub fn route_density(&self, log_n: f64) -> f64 {
        self.density() / (2.0 * (self.t * self.t) as f64 * log_n * log_n)
    }
}
