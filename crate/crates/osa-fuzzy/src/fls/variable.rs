use crate::error::{Error, Result};
use crate::fls::MembershipFunction;
use crate::Real;

/// A named universe interval with ordered linguistic labels.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyVariable<F: Real> {
    name: String,
    universe: (F, F),
    labels: Vec<(String, MembershipFunction<F>)>,
}

impl<F: Real> FuzzyVariable<F> {
    pub fn new(
        name: impl Into<String>,
        universe: (F, F),
        labels: Vec<(String, MembershipFunction<F>)>,
    ) -> Result<Self> {
        let name = name.into();
        let (lo, hi) = universe;
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::InvalidUniverse {
                lo: lo.to_f64().unwrap_or(f64::NAN),
                hi: hi.to_f64().unwrap_or(f64::NAN),
            });
        }
        for (i, (label, mf)) in labels.iter().enumerate() {
            if labels[..i].iter().any(|(other, _)| other == label) {
                return Err(Error::DuplicateLabel {
                    variable: name,
                    label: label.clone(),
                });
            }
            let (a, b) = mf.support();
            if a < lo || b > hi {
                return Err(Error::SupportOutsideUniverse {
                    variable: name,
                    label: label.clone(),
                });
            }
        }
        Ok(Self { name, universe, labels })
    }

    /// Uniform Ruspini partition: shoulder trapezoids at the edges, a
    /// triangle per interior label, with degrees summing to 1 everywhere.
    pub fn ruspini(name: impl Into<String>, lo: F, hi: F, label_names: &[&str]) -> Result<Self> {
        let n = label_names.len();
        assert!(n >= 2, "a partition needs at least two labels");
        let segments = F::from_usize(n + 1).unwrap();
        let width = (hi - lo) / segments;
        let knot = |k: usize| lo + width * F::from_usize(k).unwrap();
        let mut labels = Vec::with_capacity(n);
        for (i, &label) in label_names.iter().enumerate() {
            let mf = if i == 0 {
                MembershipFunction::trapezoid(lo, lo, knot(1), knot(2))?
            } else if i == n - 1 {
                MembershipFunction::trapezoid(knot(n - 1), knot(n), hi, hi)?
            } else {
                MembershipFunction::triangle(knot(i), knot(i + 1), knot(i + 2))?
            };
            labels.push((label.to_string(), mf));
        }
        Self::new(name, (lo, hi), labels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> (F, F) {
        self.universe
    }

    pub fn labels(&self) -> &[(String, MembershipFunction<F>)] {
        &self.labels
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|(l, _)| l == name)
    }

    pub fn membership(&self, label: usize, x: F) -> F {
        self.labels[label].1.degree(x)
    }

    /// Degrees of every label at `x`, in label order.
    pub fn degrees(&self, x: F) -> Vec<F> {
        self.labels.iter().map(|(_, mf)| mf.degree(x)).collect()
    }

    /// Clamp `x` into the universe interval.
    pub fn clamp(&self, x: F) -> F {
        let (lo, hi) = self.universe;
        if x < lo {
            lo
        } else if x > hi {
            hi
        } else {
            x
        }
    }

    /// Point at which the given label has degree 1.
    pub fn prototype(&self, label: usize) -> F {
        self.labels[label].1.prototype()
    }
}
