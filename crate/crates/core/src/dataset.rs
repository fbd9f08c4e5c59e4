//! Column-typed numeric tables.
//!
//! Every column carries a [`VariableKind`] describing its support (real line,
//! half-lines, unit interval, bounded interval or non-negative integers); the
//! kind decides which kernel a generator may use on that column. Schemas can
//! be declared by the caller or inferred from the data with
//! [`infer_schema`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::numeric::stats;
use crate::{Error, Matrix, Result};

/// Support of one variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VariableKind {
    RealLine,
    PositiveHalfLine { lower: f64 },
    NegativeHalfLine { upper: f64 },
    UnitInterval,
    BoundedInterval { lower: f64, upper: f64 },
    /// Non-negative integers.
    Count,
}

impl VariableKind {
    /// Whether `v` lies in this support.
    pub fn contains(&self, v: f64) -> bool {
        if !v.is_finite() {
            return false;
        }
        match *self {
            VariableKind::RealLine => true,
            VariableKind::PositiveHalfLine { lower } => v >= lower,
            VariableKind::NegativeHalfLine { upper } => v <= upper,
            VariableKind::UnitInterval => (0.0..=1.0).contains(&v),
            VariableKind::BoundedInterval { lower, upper } => v >= lower && v <= upper,
            VariableKind::Count => v >= 0.0 && v.fract() == 0.0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            VariableKind::RealLine => "RealLine",
            VariableKind::PositiveHalfLine { .. } => "PositiveHalfLine",
            VariableKind::NegativeHalfLine { .. } => "NegativeHalfLine",
            VariableKind::UnitInterval => "UnitInterval",
            VariableKind::BoundedInterval { .. } => "BoundedInterval",
            VariableKind::Count => "Count",
        }
    }

    /// Validate structural constraints (finite bounds, ordered interval).
    pub fn validate(&self) -> Result<()> {
        match *self {
            VariableKind::PositiveHalfLine { lower } if !lower.is_finite() => Err(
                Error::InvalidConfig("PositiveHalfLine needs a finite lower bound".into()),
            ),
            VariableKind::NegativeHalfLine { upper } if !upper.is_finite() => Err(
                Error::InvalidConfig("NegativeHalfLine needs a finite upper bound".into()),
            ),
            VariableKind::BoundedInterval { lower, upper }
                if !(lower.is_finite() && upper.is_finite() && lower < upper) =>
            {
                Err(Error::InvalidConfig(format!(
                    "BoundedInterval needs finite bounds with lower < upper, got [{lower}, {upper}]"
                )))
            }
            _ => Ok(()),
        }
    }
}

/// Name, support and target flag of one column.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnSchema {
    pub name: String,
    pub kind: VariableKind,
    pub is_target: bool,
}

impl ColumnSchema {
    pub fn new(name: impl Into<String>, kind: VariableKind) -> Self {
        Self {
            name: name.into(),
            kind,
            is_target: false,
        }
    }
}

/// Immutable numeric table with a validated schema and at most one target
/// column. A dataset without a target is an unsupervised generation input.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    schema: Vec<ColumnSchema>,
    rows: Matrix,
}

impl Dataset {
    /// Build a dataset, checking schema/shape coherence and that every cell
    /// lies in its column's support.
    pub fn new(schema: Vec<ColumnSchema>, rows: Matrix) -> Result<Self> {
        if rows.n_rows() == 0 {
            return Err(Error::EmptyDataset);
        }
        if schema.len() != rows.n_cols() {
            return Err(Error::DimensionMismatch {
                expected: schema.len(),
                got: rows.n_cols(),
            });
        }
        let n_targets = schema.iter().filter(|c| c.is_target).count();
        if n_targets > 1 {
            return Err(Error::TargetCount(n_targets));
        }
        for col in &schema {
            col.kind.validate()?;
        }
        for i in 0..rows.n_rows() {
            let row = rows.row(i);
            for (j, col) in schema.iter().enumerate() {
                if !col.kind.contains(row[j]) {
                    return Err(Error::SupportViolation {
                        column: col.name.clone(),
                        row: i,
                        value: row[j],
                        kind: col.kind.name().to_string(),
                    });
                }
            }
        }
        Ok(Self { schema, rows })
    }

    pub fn n(&self) -> usize {
        self.rows.n_rows()
    }

    pub fn n_columns(&self) -> usize {
        self.schema.len()
    }

    pub fn schema(&self) -> &[ColumnSchema] {
        &self.schema
    }

    pub fn rows(&self) -> &Matrix {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[f64] {
        self.rows.row(i)
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.rows.column(j)
    }

    pub fn column_by_name(&self, name: &str) -> Result<Vec<f64>> {
        let j = self
            .schema
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::UnknownColumn(name.to_string()))?;
        Ok(self.rows.column(j))
    }

    /// Index of the target column, if any.
    pub fn target_index(&self) -> Option<usize> {
        self.schema.iter().position(|c| c.is_target)
    }

    /// Target values, if a target column is declared.
    pub fn target(&self) -> Option<Vec<f64>> {
        self.target_index().map(|j| self.rows.column(j))
    }

    /// Column indices of the covariates (everything but the target).
    pub fn covariate_indices(&self) -> Vec<usize> {
        let t = self.target_index();
        (0..self.schema.len()).filter(|&j| Some(j) != t).collect()
    }

    /// Copy of the covariate block, columns in schema order.
    pub fn covariates(&self) -> Matrix {
        self.rows.select_columns(&self.covariate_indices())
    }

    /// Schemas of the covariate columns, in the same order as
    /// [`Dataset::covariates`].
    pub fn covariate_schema(&self) -> Vec<&ColumnSchema> {
        self.covariate_indices()
            .into_iter()
            .map(|j| &self.schema[j])
            .collect()
    }

    /// Dataset restricted to the given rows (duplicates allowed).
    pub fn subset(&self, indices: &[usize]) -> Result<Dataset> {
        if indices.is_empty() {
            return Err(Error::EmptyDataset);
        }
        Ok(Dataset {
            schema: self.schema.clone(),
            rows: self.rows.select_rows(indices),
        })
    }

    /// Five-number summary plus mean for every column.
    pub fn summaries(&self) -> Vec<ColumnSummary> {
        self.schema
            .iter()
            .enumerate()
            .map(|(j, col)| {
                let mut vals = self.rows.column(j);
                vals.sort_unstable_by(f64::total_cmp);
                ColumnSummary {
                    name: col.name.clone(),
                    kind: col.kind,
                    is_target: col.is_target,
                    min: vals[0],
                    q1: stats::quantile_sorted(&vals, 0.25),
                    median: stats::quantile_sorted(&vals, 0.5),
                    mean: stats::mean(&vals),
                    q3: stats::quantile_sorted(&vals, 0.75),
                    max: vals[vals.len() - 1],
                }
            })
            .collect()
    }
}

/// Descriptive statistics of one column.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnSummary {
    pub name: String,
    pub kind: VariableKind,
    pub is_target: bool,
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub mean: f64,
    pub q3: f64,
    pub max: f64,
}

/// Skewness beyond which a column is treated as half-line supported.
pub const SKEWNESS_THRESHOLD: f64 = 1.0;

/// Infer a support kind for each column of `table`.
///
/// Per column: all integers >= 0 give `Count`; all values in [0, 1] give
/// `UnitInterval`; strong positive skew gives `PositiveHalfLine` anchored at
/// the observed minimum (mirror case for negative skew); everything else is
/// `RealLine`. `BoundedInterval` is never inferred, only declared — both
/// bounds of a sample range are too noisy to trust. Constant columns fall
/// back to `RealLine` with a warning.
pub fn infer_schema(names: &[String], table: &Matrix) -> Result<Vec<ColumnSchema>> {
    if table.n_rows() == 0 {
        return Err(Error::EmptyDataset);
    }
    if names.len() != table.n_cols() {
        return Err(Error::DimensionMismatch {
            expected: names.len(),
            got: table.n_cols(),
        });
    }
    let schema = names
        .iter()
        .enumerate()
        .map(|(j, name)| {
            let vals = table.column(j);
            ColumnSchema::new(name.clone(), infer_column_kind(name, &vals))
        })
        .collect();
    Ok(schema)
}

fn infer_column_kind(name: &str, vals: &[f64]) -> VariableKind {
    let min = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if min == max {
        log::warn!("column `{name}` is constant; assigning RealLine");
        return VariableKind::RealLine;
    }
    if vals.iter().all(|&v| v >= 0.0 && v.fract() == 0.0) {
        return VariableKind::Count;
    }
    if min >= 0.0 && max <= 1.0 {
        return VariableKind::UnitInterval;
    }
    let skew = stats::skewness(vals);
    if skew > SKEWNESS_THRESHOLD {
        VariableKind::PositiveHalfLine { lower: min }
    } else if skew < -SKEWNESS_THRESHOLD {
        VariableKind::NegativeHalfLine { upper: max }
    } else {
        VariableKind::RealLine
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{substream, Domain};
    use rand::Rng;
    use rand_distr::Distribution;

    fn names(ns: &[&str]) -> Vec<String> {
        ns.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn infer_count_column() {
        let table = Matrix::new(5, 1, vec![0.0, 1.0, 3.0, 2.0, 2.0]).unwrap();
        let schema = infer_schema(&names(&["c"]), &table).unwrap();
        assert_eq!(schema[0].kind, VariableKind::Count);
    }

    #[test]
    fn infer_unit_interval_column() {
        let table = Matrix::new(3, 1, vec![0.1, 0.9, 0.5]).unwrap();
        let schema = infer_schema(&names(&["u"]), &table).unwrap();
        assert_eq!(schema[0].kind, VariableKind::UnitInterval);
    }

    #[test]
    fn infer_positive_half_line_from_gamma_sample() {
        // Gamma(shape 2) has skewness sqrt(2) > 1, so at n = 400 the sample
        // skewness clears the threshold and the minimum anchors the support.
        let mut rng = substream(7, Domain::Covariates, 0);
        let gamma = rand_distr::Gamma::new(2.0, 1.0).unwrap();
        let vals: Vec<f64> = (0..400).map(|_| gamma.sample(&mut rng)).collect();
        let skew = stats::skewness(&vals);
        assert!(skew > 1.0, "fixture skewness {skew} must exceed 1");
        let min = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let table = Matrix::new(vals.len(), 1, vals).unwrap();
        let schema = infer_schema(&names(&["g"]), &table).unwrap();
        assert_eq!(schema[0].kind, VariableKind::PositiveHalfLine { lower: min });
    }

    #[test]
    fn infer_negative_half_line_is_the_mirror() {
        let mut rng = substream(8, Domain::Covariates, 0);
        let gamma = rand_distr::Gamma::new(2.0, 1.0).unwrap();
        let vals: Vec<f64> = (0..400).map(|_| 1.5 - gamma.sample(&mut rng)).collect();
        let max = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let table = Matrix::new(vals.len(), 1, vals).unwrap();
        let schema = infer_schema(&names(&["g"]), &table).unwrap();
        assert_eq!(schema[0].kind, VariableKind::NegativeHalfLine { upper: max });
    }

    #[test]
    fn infer_is_row_order_independent() {
        let mut rng = substream(9, Domain::Covariates, 0);
        let mut vals: Vec<f64> = (0..200).map(|_| rng.random::<f64>() * 10.0 - 3.0).collect();
        let table = Matrix::new(vals.len(), 1, vals.clone()).unwrap();
        let a = infer_schema(&names(&["x"]), &table).unwrap();
        vals.reverse();
        let table_rev = Matrix::new(vals.len(), 1, vals).unwrap();
        let b = infer_schema(&names(&["x"]), &table_rev).unwrap();
        assert_eq!(a[0].kind, b[0].kind);
    }

    #[test]
    fn constant_column_falls_back_to_real_line() {
        let table = Matrix::new(3, 1, vec![2.0, 2.0, 2.0]).unwrap();
        let schema = infer_schema(&names(&["k"]), &table).unwrap();
        assert_eq!(schema[0].kind, VariableKind::RealLine);
    }

    #[test]
    fn dataset_rejects_support_violation() {
        let mut schema = vec![ColumnSchema::new("u", VariableKind::UnitInterval)];
        schema[0].is_target = false;
        let rows = Matrix::new(2, 1, vec![0.5, 1.5]).unwrap();
        let err = Dataset::new(schema, rows).unwrap_err();
        match err {
            Error::SupportViolation { column, row, value, .. } => {
                assert_eq!(column, "u");
                assert_eq!(row, 1);
                assert_eq!(value, 1.5);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn dataset_rejects_two_targets() {
        let mut a = ColumnSchema::new("a", VariableKind::RealLine);
        let mut b = ColumnSchema::new("b", VariableKind::RealLine);
        a.is_target = true;
        b.is_target = true;
        let rows = Matrix::new(1, 2, vec![0.0, 1.0]).unwrap();
        assert!(matches!(Dataset::new(vec![a, b], rows), Err(Error::TargetCount(2))));
    }

    #[test]
    fn covariates_skip_target_column() {
        let mut t = ColumnSchema::new("y", VariableKind::RealLine);
        t.is_target = true;
        let schema = vec![
            ColumnSchema::new("x1", VariableKind::RealLine),
            t,
            ColumnSchema::new("x2", VariableKind::RealLine),
        ];
        let rows = Matrix::new(2, 3, vec![1.0, 9.0, 2.0, 3.0, 8.0, 4.0]).unwrap();
        let ds = Dataset::new(schema, rows).unwrap();
        assert_eq!(ds.target_index(), Some(1));
        assert_eq!(ds.target().unwrap(), vec![9.0, 8.0]);
        let x = ds.covariates();
        assert_eq!(x.n_cols(), 2);
        assert_eq!(x.row(0), &[1.0, 2.0]);
    }

    #[test]
    fn summaries_match_hand_computation() {
        let schema = vec![ColumnSchema::new("v", VariableKind::RealLine)];
        let rows = Matrix::new(4, 1, vec![4.0, 1.0, 3.0, 2.0]).unwrap();
        let ds = Dataset::new(schema, rows).unwrap();
        let s = &ds.summaries()[0];
        assert_eq!(s.min, 1.0);
        assert_eq!(s.max, 4.0);
        assert_eq!(s.median, 2.5);
        assert_eq!(s.mean, 2.5);
        assert_eq!(s.q1, 1.75);
        assert_eq!(s.q3, 3.25);
    }
}
