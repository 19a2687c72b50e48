use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

/// Whether the extreme nodes sit on `lo`/`hi` or half a step inside.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Endpoints {
    Closed,
    OpenHalfStep,
}

/// One sampling axis: a range with a spacing law, or explicit values.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Axis {
    Range {
        name: String,
        lo: f64,
        hi: f64,
        count: usize,
        spacing: Spacing,
        endpoints: Endpoints,
    },
    Values {
        name: String,
        values: Vec<f64>,
    },
}

impl Axis {
    pub fn linear(name: &str, lo: f64, hi: f64, count: usize) -> Self {
        Axis::Range {
            name: name.into(),
            lo,
            hi,
            count,
            spacing: Spacing::Linear,
            endpoints: Endpoints::Closed,
        }
    }

    /// Linear axis whose nodes are the midpoints of `count` equal cells.
    pub fn open(name: &str, lo: f64, hi: f64, count: usize) -> Self {
        Axis::Range {
            name: name.into(),
            lo,
            hi,
            count,
            spacing: Spacing::Linear,
            endpoints: Endpoints::OpenHalfStep,
        }
    }

    pub fn log(name: &str, lo: f64, hi: f64, count: usize) -> Self {
        Axis::Range {
            name: name.into(),
            lo,
            hi,
            count,
            spacing: Spacing::Log,
            endpoints: Endpoints::Closed,
        }
    }

    pub fn values(name: &str, values: Vec<f64>) -> Self {
        Axis::Values {
            name: name.into(),
            values,
        }
    }

    pub fn single(name: &str, v: f64) -> Self {
        Axis::values(name, vec![v])
    }

    /// Integers `lo..=hi`.
    pub fn integers(name: &str, lo: u64, hi: u64) -> Self {
        Axis::values(name, (lo..=hi).map(|k| k as f64).collect())
    }

    pub fn name(&self) -> &str {
        match self {
            Axis::Range { name, .. } | Axis::Values { name, .. } => name,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Axis::Range {
                name,
                lo,
                hi,
                count,
                spacing,
                ..
            } => {
                if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                    return Err(Error::Config(format!("axis {name}: need finite lo < hi")));
                }
                if *count < 2 {
                    return Err(Error::Config(format!("axis {name}: count must be at least 2")));
                }
                if *spacing == Spacing::Log && *lo <= 0.0 {
                    return Err(Error::Config(format!("axis {name}: log spacing needs lo > 0")));
                }
            }
            Axis::Values { name, values } => {
                if values.is_empty() || values.iter().any(|v| !v.is_finite()) {
                    return Err(Error::Config(format!("axis {name}: need finite values")));
                }
            }
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        match self {
            Axis::Values { values, .. } => values.clone(),
            Axis::Range {
                lo,
                hi,
                count,
                spacing,
                endpoints,
                ..
            } => {
                let (a, b) = match spacing {
                    Spacing::Linear => (*lo, *hi),
                    Spacing::Log => (lo.ln(), hi.ln()),
                };
                let n = *count;
                let node = |i: usize| match endpoints {
                    Endpoints::Closed => a + (b - a) * i as f64 / (n - 1) as f64,
                    Endpoints::OpenHalfStep => a + (b - a) * (i as f64 + 0.5) / n as f64,
                };
                (0..n)
                    .map(|i| match (endpoints, i) {
                        (Endpoints::Closed, 0) => *lo,
                        (Endpoints::Closed, i) if i + 1 == n => *hi,
                        _ => match spacing {
                            Spacing::Linear => node(i),
                            Spacing::Log => node(i).exp(),
                        },
                    })
                    .collect()
            }
        }
    }
}

/// Tensor grid over one or more axes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSpec {
    pub axes: Vec<Axis>,
}

impl GridSpec {
    pub fn new(axes: Vec<Axis>) -> Self {
        Self { axes }
    }

    pub fn validate(&self) -> Result<()> {
        if self.axes.is_empty() {
            return Err(Error::Config("grid needs at least one axis".into()));
        }
        self.axes.iter().try_for_each(Axis::validate)
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.points().len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All nodes in row-major order, first axis slowest.
    pub fn points(&self) -> Vec<Vec<f64>> {
        let mut out: Vec<Vec<f64>> = vec![Vec::new()];
        for axis in &self.axes {
            let pts = axis.points();
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    pts.iter().map(move |&v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out
    }
}
