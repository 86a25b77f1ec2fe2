//! Stratified cross-validation and the seven-measure evaluation report:
//! correctly/incorrectly classified instances, the kappa statistic, mean
//! absolute and root-mean-squared error over class-probability vectors, and
//! the two errors relative to the training-prior predictor.
//!
//! Fold assignment is content-addressed: instances are ordered within each
//! class by a seeded hash of their attribute symbols and dealt round-robin,
//! so the plan survives re-ordering of the input file. (Two bit-identical
//! instances are interchangeable; their fold ids may swap under
//! permutation.) All measures are pooled once over the union of held-out
//! predictions; the prior predictor always answers with the raw class
//! distribution of the fold's training split.

use std::fmt::Write as _;

use thiserror::Error;

use crate::features::{Dataset, FeatureVector};
use crate::hashing;
use crate::learn::{
    argmax_class, mix_seed, train, Algorithm, ClassDistribution, PredictError, TrainError,
    TrainOptions,
};
use crate::sandhi::SandhiClass;

const CLASSES: usize = SandhiClass::COUNT;

/// Errors raised by fold planning and measurement.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{n} instances cannot fill {k} folds")]
    TooFewInstances { n: usize, k: usize },
    #[error("fold count {k} must be at least 2")]
    BadFoldCount { k: usize },
    #[error("the confusion matrix is empty")]
    EmptyMatrix,
    #[error("{actuals} actual labels but {predictions} predictions")]
    LengthMismatch { actuals: usize, predictions: usize },
    #[error("the prior predictor is already perfect; relative errors are undefined")]
    DegeneratePrior,
    #[error("datasets do not describe the same junction set")]
    JunctionSetMismatch,
    #[error(transparent)]
    Train(#[from] TrainError),
    #[error(transparent)]
    Predict(#[from] PredictError),
}

/// A reproducible fold assignment: `assignment[i]` is the fold of instance
/// `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldPlan {
    pub k: usize,
    pub seed: u64,
    pub assignment: Vec<usize>,
}

/// Assign instances to `k` stratified folds: within each class, order by a
/// seeded content hash and deal round-robin, so per-class fold counts
/// differ by at most one.
pub fn stratified_kfold(data: &Dataset, k: usize, seed: u64) -> Result<FoldPlan, EvalError> {
    if k < 2 {
        return Err(EvalError::BadFoldCount { k });
    }
    let n = data.rows.len();
    if n < k {
        return Err(EvalError::TooFewInstances { n, k });
    }
    let mut assignment = vec![0usize; n];
    for class in SandhiClass::ALL {
        let mut members: Vec<(u64, usize)> = data
            .rows
            .iter()
            .enumerate()
            .filter(|(_, row)| row.class == class)
            .map(|(index, row)| (instance_hash(seed, row), index))
            .collect();
        members.sort_unstable();
        for (deal, (_, index)) in members.into_iter().enumerate() {
            assignment[index] = deal % k;
        }
    }
    Ok(FoldPlan { k, seed, assignment })
}

/// Seed-keyed content hash of one instance (class plus attribute symbols).
fn instance_hash(seed: u64, row: &FeatureVector) -> u64 {
    let mut state = hashing::fnv1a_64(&seed.to_le_bytes());
    state = hashing::extend(state, &[row.class.id()]);
    for &value in &row.values {
        state = hashing::extend(state, &[value.id() as u8]);
    }
    state
}

/// Counts of actual-by-predicted class pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConfusionMatrix {
    pub counts: [[u64; CLASSES]; CLASSES],
}

impl ConfusionMatrix {
    pub fn add(&mut self, actual: SandhiClass, predicted: SandhiClass) {
        self.counts[actual.slot()][predicted.slot()] += 1;
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    pub fn trace(&self) -> u64 {
        (0..CLASSES).map(|i| self.counts[i][i]).sum()
    }

    fn row_total(&self, slot: usize) -> u64 {
        self.counts[slot].iter().sum()
    }

    fn column_total(&self, slot: usize) -> u64 {
        self.counts.iter().map(|row| row[slot]).sum()
    }
}

/// Chance-corrected agreement. Computed in integer form,
/// `(N·trace − Σ rowᵢ·colᵢ) / (N² − Σ rowᵢ·colᵢ)`, so hand-checkable
/// fractions come out exact; the degenerate expected-agreement-one case
/// reports 1 for a perfect diagonal and 0 otherwise.
pub fn kappa(matrix: &ConfusionMatrix) -> Result<f64, EvalError> {
    let n = matrix.total();
    if n == 0 {
        return Err(EvalError::EmptyMatrix);
    }
    let agree = n * matrix.trace();
    let chance: u64 = (0..CLASSES)
        .map(|slot| matrix.row_total(slot) * matrix.column_total(slot))
        .sum();
    let denominator = n * n - chance;
    if denominator == 0 {
        return Ok(if matrix.trace() == n { 1.0 } else { 0.0 });
    }
    Ok((agree as f64 - chance as f64) / denominator as f64)
}

/// Pooled (MAE, RMSE) of probability vectors against one-hot actuals:
/// `MAE = (1/N)·Σᵢ(1/11)·Σⱼ|pᵢⱼ − yᵢⱼ|` and
/// `RMSE = sqrt((1/(11N))·ΣᵢΣⱼ(pᵢⱼ − yᵢⱼ)²)`.
pub fn probabilistic_errors(
    actuals: &[SandhiClass],
    distributions: &[ClassDistribution],
) -> Result<(f64, f64), EvalError> {
    if actuals.len() != distributions.len() {
        return Err(EvalError::LengthMismatch {
            actuals: actuals.len(),
            predictions: distributions.len(),
        });
    }
    let mut absolute = 0.0;
    let mut squared = 0.0;
    for (&actual, dist) in actuals.iter().zip(distributions) {
        for (slot, &p) in dist.iter().enumerate() {
            let y = if slot == actual.slot() { 1.0 } else { 0.0 };
            absolute += (p - y).abs();
            squared += (p - y) * (p - y);
        }
    }
    let scale = (actuals.len() * CLASSES) as f64;
    Ok((absolute / scale, (squared / scale).sqrt()))
}

/// (RAE %, RRSE %) of predictions against the predictor that always answers
/// `prior`.
pub fn relative_errors(
    actuals: &[SandhiClass],
    distributions: &[ClassDistribution],
    prior: &ClassDistribution,
) -> Result<(f64, f64), EvalError> {
    let (mae, rmse) = probabilistic_errors(actuals, distributions)?;
    let prior_dists = vec![*prior; actuals.len()];
    let (prior_mae, prior_rmse) = probabilistic_errors(actuals, &prior_dists)?;
    if prior_mae == 0.0 {
        return Err(EvalError::DegeneratePrior);
    }
    Ok((100.0 * mae / prior_mae, 100.0 * rmse / prior_rmse))
}

/// One algorithm's pooled cross-validation measures.
#[derive(Debug, Clone)]
pub struct AlgorithmScores {
    pub algorithm: Algorithm,
    pub correct: usize,
    pub incorrect: usize,
    pub cci_pct: f64,
    pub ici_pct: f64,
    pub kappa: f64,
    pub mae: f64,
    pub rmse: f64,
    /// Percent of the prior predictor's MAE; NaN when that prior is
    /// already perfect.
    pub rae_pct: f64,
    /// Percent of the prior predictor's RMSE; NaN as above.
    pub rrse_pct: f64,
    pub confusion: ConfusionMatrix,
}

/// Run one algorithm through stratified k-fold cross-validation, pooling
/// all held-out predictions before measuring. Per-fold trainer seeds are
/// derived from `seed`, so the whole evaluation is a pure function of
/// (dataset content, hyperparameters, k, seed).
pub fn cross_validate(
    data: &Dataset,
    algorithm: Algorithm,
    options: &TrainOptions,
    k: usize,
    seed: u64,
) -> Result<AlgorithmScores, EvalError> {
    let plan = stratified_kfold(data, k, seed)?;
    let mut actuals: Vec<SandhiClass> = Vec::with_capacity(data.rows.len());
    let mut dists: Vec<ClassDistribution> = Vec::with_capacity(data.rows.len());
    let mut priors: Vec<ClassDistribution> = Vec::with_capacity(data.rows.len());
    for fold in 0..k {
        let mut training = Dataset::new(data.model);
        let mut held_out: Vec<&FeatureVector> = Vec::new();
        for (row, &assigned) in data.rows.iter().zip(&plan.assignment) {
            if assigned == fold {
                held_out.push(row);
            } else {
                training.rows.push(row.clone());
            }
        }
        if held_out.is_empty() {
            continue;
        }
        let fold_options = TrainOptions {
            seed: mix_seed(seed, fold as u64 + 1),
            ..options.clone()
        };
        let model = train(&training, algorithm, &fold_options)?;
        let prior = raw_class_prior(&training);
        for row in held_out {
            dists.push(model.predict_proba(&row.values)?);
            actuals.push(row.class);
            priors.push(prior);
        }
    }
    score_pool(algorithm, &actuals, &dists, &priors)
}

/// The unsmoothed class distribution of a training split.
fn raw_class_prior(data: &Dataset) -> ClassDistribution {
    let counts = data.class_counts();
    let total = data.rows.len() as f64;
    let mut prior = [0.0; CLASSES];
    for (slot, &count) in prior.iter_mut().zip(&counts) {
        *slot = count as f64 / total;
    }
    prior
}

fn score_pool(
    algorithm: Algorithm,
    actuals: &[SandhiClass],
    dists: &[ClassDistribution],
    priors: &[ClassDistribution],
) -> Result<AlgorithmScores, EvalError> {
    let mut confusion = ConfusionMatrix::default();
    for (&actual, dist) in actuals.iter().zip(dists) {
        confusion.add(actual, argmax_class(dist));
    }
    let n = actuals.len();
    let correct = confusion.trace() as usize;
    let incorrect = n - correct;
    let (mae, rmse) = probabilistic_errors(actuals, dists)?;
    let (prior_mae, prior_rmse) = probabilistic_errors(actuals, priors)?;
    let rae_pct = if prior_mae > 0.0 {
        100.0 * mae / prior_mae
    } else {
        f64::NAN
    };
    let rrse_pct = if prior_rmse > 0.0 {
        100.0 * rmse / prior_rmse
    } else {
        f64::NAN
    };
    Ok(AlgorithmScores {
        algorithm,
        correct,
        incorrect,
        cci_pct: 100.0 * correct as f64 / n as f64,
        ici_pct: 100.0 * incorrect as f64 / n as f64,
        kappa: kappa(&confusion)?,
        mae,
        rmse,
        rae_pct,
        rrse_pct,
        confusion,
    })
}

/// A full evaluation: several algorithms over one dataset.
#[derive(Debug, Clone)]
pub struct EvalReport {
    pub instances: usize,
    pub k: usize,
    pub seed: u64,
    pub scores: Vec<AlgorithmScores>,
}

/// Cross-validate each algorithm on the same fold plan.
pub fn evaluate_all(
    data: &Dataset,
    algorithms: &[Algorithm],
    options: &TrainOptions,
    k: usize,
    seed: u64,
) -> Result<EvalReport, EvalError> {
    let scores = algorithms
        .iter()
        .map(|&algorithm| cross_validate(data, algorithm, options, k, seed))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EvalReport {
        instances: data.rows.len(),
        k,
        seed,
        scores,
    })
}

/// Evaluate two featurizations of the same junction set side by side.
pub fn compare_models(
    first: &Dataset,
    second: &Dataset,
    algorithms: &[Algorithm],
    options: &TrainOptions,
    k: usize,
    seed: u64,
) -> Result<(EvalReport, EvalReport), EvalError> {
    if first.rows.len() != second.rows.len()
        || first
            .rows
            .iter()
            .zip(&second.rows)
            .any(|(a, b)| a.class != b.class)
    {
        return Err(EvalError::JunctionSetMismatch);
    }
    Ok((
        evaluate_all(first, algorithms, options, k, seed)?,
        evaluate_all(second, algorithms, options, k, seed)?,
    ))
}

const MEASURE_ROWS: [&str; 7] = [
    "cci_pct", "ici_pct", "kappa", "mae", "rmse", "rae_pct", "rrse_pct",
];

impl AlgorithmScores {
    fn measure(&self, row: usize) -> f64 {
        match row {
            0 => self.cci_pct,
            1 => self.ici_pct,
            2 => self.kappa,
            3 => self.mae,
            4 => self.rmse,
            5 => self.rae_pct,
            _ => self.rrse_pct,
        }
    }
}

impl EvalReport {
    /// Aligned text table: one row per measure, one column per algorithm.
    pub fn table(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "instances {}, folds {}, seed {}",
            self.instances, self.k, self.seed
        )
        .expect("writing to a String cannot fail");
        write!(out, "{:<10}", "measure").unwrap();
        for scores in &self.scores {
            write!(out, "{:>12}", scores.algorithm.key()).unwrap();
        }
        out.push('\n');
        for (row, name) in MEASURE_ROWS.iter().enumerate() {
            write!(out, "{name:<10}").unwrap();
            for scores in &self.scores {
                write!(out, "{:>12.4}", scores.measure(row)).unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Machine-readable lines: a header, then one algorithm per line with
    /// the seven measures.
    pub fn csv(&self) -> String {
        let mut out = String::from("algorithm,cci_pct,ici_pct,kappa,mae,rmse,rae_pct,rrse_pct\n");
        for scores in &self.scores {
            writeln!(
                out,
                "{},{:.4},{:.4},{:.4},{:.4},{:.4},{:.4},{:.4}",
                scores.algorithm.key(),
                scores.cci_pct,
                scores.ici_pct,
                scores.kappa,
                scores.mae,
                scores.rmse,
                scores.rae_pct,
                scores.rrse_pct
            )
            .expect("writing to a String cannot fail");
        }
        out
    }
}
