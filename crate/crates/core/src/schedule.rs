//! Piecewise-constant, right-continuous rate schedules α(t).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Nonnegative rate per interval; `values[i]` applies on
/// `[breakpoints[i], breakpoints[i+1])` and the last value extends to +∞.
/// A constant schedule is a single interval starting at 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ScheduleRepr", into = "ScheduleRepr")]
pub struct WeightSchedule {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScheduleRepr {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

impl From<WeightSchedule> for ScheduleRepr {
    fn from(s: WeightSchedule) -> Self {
        Self {
            breakpoints: s.breakpoints,
            values: s.values,
        }
    }
}

impl TryFrom<ScheduleRepr> for WeightSchedule {
    type Error = Error;
    fn try_from(r: ScheduleRepr) -> Result<Self> {
        WeightSchedule::new(r.breakpoints, r.values)
    }
}

impl WeightSchedule {
    pub fn constant(alpha: f64) -> Self {
        Self::new(vec![0.0], vec![alpha]).expect("constant schedule is always valid")
    }

    pub fn new(breakpoints: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if breakpoints.is_empty() || breakpoints.len() != values.len() {
            return Err(Error::InvalidSchedule {
                reason: format!(
                    "need equal, nonzero counts of breakpoints and values (got {} and {})",
                    breakpoints.len(),
                    values.len()
                ),
            });
        }
        if breakpoints[0] != 0.0 {
            return Err(Error::InvalidSchedule {
                reason: format!("first breakpoint must be 0, got {}", breakpoints[0]),
            });
        }
        if breakpoints.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidSchedule {
                reason: "breakpoints must be strictly ascending".into(),
            });
        }
        if let Some(&bad) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::InvalidSchedule {
                reason: format!("rates must be finite and nonnegative, got {bad}"),
            });
        }
        Ok(Self {
            breakpoints,
            values,
        })
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn is_constant(&self) -> bool {
        self.values.len() == 1
    }

    /// Right-continuous lookup; times before 0 clamp to the first interval.
    pub fn value_at(&self, t: f64) -> f64 {
        match self.breakpoints.iter().rposition(|&b| b <= t) {
            Some(i) => self.values[i],
            None => self.values[0],
        }
    }

    /// Largest rate over all intervals.
    pub fn sup(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// Exact integral over [t0, t1] (piecewise-constant closed form).
    pub fn integral(&self, t0: f64, t1: f64) -> f64 {
        if t1 <= t0 {
            return 0.0;
        }
        let mut acc = 0.0;
        for (i, &start) in self.breakpoints.iter().enumerate() {
            let end = self
                .breakpoints
                .get(i + 1)
                .copied()
                .unwrap_or(f64::INFINITY);
            let lo = start.max(t0);
            let hi = end.min(t1);
            if hi > lo {
                acc += self.values[i] * (hi - lo);
            }
        }
        // leading clamp region, for t0 < 0
        if t0 < 0.0 {
            acc += self.values[0] * (t1.min(0.0) - t0);
        }
        acc
    }
}
