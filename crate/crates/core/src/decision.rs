//! Preference relations and baseline-driven multi-criteria evaluation.
//!
//! Preference matrices use `r_ij = D(A_j, A_i)`: the degree to which `A_i`
//! dominates when `A_j` is taken as the control set, so `r_ij > 1/2` reads as
//! "`A_i` is preferred to `A_j`".

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dominance::{dominance, DominanceKind};
use crate::error::{HfeError, Result};
use crate::exact::half;
use crate::grade::parse_decimal;
use crate::thfe::Thfe;

/// A reciprocal matrix: `r_ij ≥ 0`, `r_ij + r_ji = 1`, `r_ii = 1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferenceMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl PreferenceMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(HfeError::Preference("matrix is empty".into()));
        }
        if let Some(i) = entries.iter().position(|row| row.len() != n) {
            return Err(HfeError::Preference(format!(
                "row {} does not have {n} entries",
                i + 1
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            if row[i] != half() {
                return Err(HfeError::Preference(format!("r_{0}{0} is not 1/2", i + 1)));
            }
            for (j, r_ij) in row.iter().enumerate() {
                if *r_ij < BigRational::zero() {
                    return Err(HfeError::Preference(format!(
                        "r_{}{} is negative",
                        i + 1,
                        j + 1
                    )));
                }
                if r_ij + &entries[j][i] != BigRational::one() {
                    return Err(HfeError::Preference(format!(
                        "r_{0}{1} + r_{1}{0} is not 1",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(PreferenceMatrix { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    /// The matrix under the opposite index convention.
    pub fn transpose(&self) -> PreferenceMatrix {
        let n = self.len();
        PreferenceMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
                .collect(),
        }
    }
}

/// `r_ij = D(A_j, A_i)` for every pair of alternatives.
pub fn preference_matrix(kind: DominanceKind, alternatives: &[Thfe]) -> Result<PreferenceMatrix> {
    let entries = alternatives
        .iter()
        .map(|ai| {
            alternatives
                .iter()
                .map(|aj| dominance(kind, aj, ai))
                .collect()
        })
        .collect();
    PreferenceMatrix::new(entries)
}

/// Combines per-criterion dominance values into one number.
pub trait Aggregator: Sync {
    fn name(&self) -> &str;
    fn aggregate(&self, values: &[BigRational]) -> BigRational;
}

/// Unweighted arithmetic mean.
#[derive(Clone, Copy, Debug, Default)]
pub struct Mean;

impl Aggregator for Mean {
    fn name(&self) -> &str {
        "mean"
    }

    fn aggregate(&self, values: &[BigRational]) -> BigRational {
        let total: BigRational = values.iter().sum();
        total / BigRational::from_integer(BigInt::from(values.len()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Criterion {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Minimum acceptable standard for the criterion.
    pub baseline: Thfe,
    /// Reserved. Accepted only when every criterion carries the same weight.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<serde_json::Number>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Alternative {
    pub id: String,
    pub values: BTreeMap<String, Thfe>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvaluationConfig {
    pub criteria: Vec<Criterion>,
    pub alternatives: Vec<Alternative>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<DominanceKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aggregation: Option<String>,
}

impl EvaluationConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: EvaluationConfig =
            serde_json::from_str(text).map_err(|e| HfeError::parse("config", e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.criteria.is_empty() {
            return Err(HfeError::Config("no criteria".into()));
        }
        if self.alternatives.is_empty() {
            return Err(HfeError::Config("no alternatives".into()));
        }
        let ids = unique_ids(self.criteria.iter().map(|c| c.id.as_str()), "criterion")?;
        unique_ids(
            self.alternatives.iter().map(|a| a.id.as_str()),
            "alternative",
        )?;
        for alt in &self.alternatives {
            if let Some(missing) = ids.iter().find(|c| !alt.values.contains_key(**c)) {
                return Err(HfeError::Config(format!(
                    "alternative {} has no value for criterion {missing}",
                    alt.id
                )));
            }
            if let Some(extra) = alt.values.keys().find(|k| !ids.contains(k.as_str())) {
                return Err(HfeError::Config(format!(
                    "alternative {} has a value for unknown criterion {extra}",
                    alt.id
                )));
            }
        }
        self.check_weights()?;
        match self.aggregation.as_deref() {
            None | Some("mean") => Ok(()),
            Some(other) => Err(HfeError::Config(format!("unsupported aggregation {other}"))),
        }
    }

    fn check_weights(&self) -> Result<()> {
        let weights: Vec<Option<BigRational>> = self
            .criteria
            .iter()
            .map(|c| {
                c.weight
                    .as_ref()
                    .map(|w| parse_decimal(&w.to_string()))
                    .transpose()
            })
            .collect::<Result<_>>()?;
        if weights.iter().all(Option::is_none) {
            return Ok(());
        }
        let first = &weights[0];
        if weights.iter().any(|w| w != first) {
            return Err(HfeError::Config(
                "criterion weights are only accepted when all are present and equal".into(),
            ));
        }
        Ok(())
    }
}

fn unique_ids<'a>(ids: impl Iterator<Item = &'a str>, what: &str) -> Result<BTreeSet<&'a str>> {
    let mut seen = BTreeSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(HfeError::Config(format!("duplicate {what} id {id}")));
        }
    }
    Ok(seen)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternativeRow {
    pub id: String,
    /// Dominance against each baseline, in criterion order.
    pub values: Vec<BigRational>,
    pub aggregate: BigRational,
    /// Position in the ranking, starting at 1.
    pub rank: usize,
    /// Another alternative has exactly the same aggregate; the order between
    /// them was decided by id.
    pub tied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankingReport {
    pub kind: DominanceKind,
    pub aggregation: String,
    pub criteria: Vec<String>,
    /// Rows in rank order: aggregate descending, then id ascending.
    pub rows: Vec<AlternativeRow>,
}

impl RankingReport {
    pub fn row(&self, id: &str) -> Option<&AlternativeRow> {
        self.rows.iter().find(|r| r.id == id)
    }
}

/// Evaluates with the kind stored in the config and the mean aggregation.
pub fn evaluate(config: &EvaluationConfig) -> Result<RankingReport> {
    let kind = config
        .kind
        .ok_or_else(|| HfeError::Config("no dominance kind given".into()))?;
    evaluate_with(config, kind, &Mean)
}

/// Scores each alternative against every criterion baseline, aggregates
/// the row and ranks the alternatives.
pub fn evaluate_with(
    config: &EvaluationConfig,
    kind: DominanceKind,
    aggregator: &dyn Aggregator,
) -> Result<RankingReport> {
    config.validate()?;
    let mut rows: Vec<AlternativeRow> = config
        .alternatives
        .par_iter()
        .map(|alt| {
            let values: Vec<BigRational> = config
                .criteria
                .iter()
                .map(|c| dominance(kind, &c.baseline, &alt.values[&c.id]))
                .collect();
            AlternativeRow {
                id: alt.id.clone(),
                aggregate: aggregator.aggregate(&values),
                values,
                rank: 0,
                tied: false,
            }
        })
        .collect();
    rows.sort_by(|a, b| b.aggregate.cmp(&a.aggregate).then_with(|| a.id.cmp(&b.id)));
    let aggregates: Vec<BigRational> = rows.iter().map(|r| r.aggregate.clone()).collect();
    for (i, row) in rows.iter_mut().enumerate() {
        row.rank = i + 1;
        row.tied = aggregates.iter().filter(|a| **a == row.aggregate).count() > 1;
    }
    Ok(RankingReport {
        kind,
        aggregation: aggregator.name().to_string(),
        criteria: config.criteria.iter().map(|c| c.id.clone()).collect(),
        rows,
    })
}
