//! Nominal-attribute classifiers behind one train/predict interface.
//!
//! Six algorithms are available, keyed `id3`, `c45`, `nb`, `aode`, `rtree`,
//! and `rforest`. All of them train from a [`Dataset`], share the
//! [`TrainedModel`] wrapper, and predict a probability distribution over
//! the eleven junction classes. Every learner is a deterministic function
//! of (dataset, hyperparameters, seed).

pub mod bayes;
pub mod io;
pub mod tree;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::features::{ContextModel, Dataset, Symbol};
use crate::hashing;
use crate::sandhi::SandhiClass;

pub use bayes::{Aode, NaiveBayes};
pub use io::{load_model, save_model, ModelIoError};
pub use tree::TreeNode;

/// A probability distribution over the eleven classes, indexed by
/// [`SandhiClass::slot`].
pub type ClassDistribution = [f64; SandhiClass::COUNT];

/// The available learning algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Id3,
    C45,
    NaiveBayes,
    Aode,
    RandomTree,
    RandomForest,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Id3,
        Algorithm::C45,
        Algorithm::NaiveBayes,
        Algorithm::Aode,
        Algorithm::RandomTree,
        Algorithm::RandomForest,
    ];

    /// The stable key used on the command line, in reports, and in model
    /// files.
    pub fn key(self) -> &'static str {
        match self {
            Algorithm::Id3 => "id3",
            Algorithm::C45 => "c45",
            Algorithm::NaiveBayes => "nb",
            Algorithm::Aode => "aode",
            Algorithm::RandomTree => "rtree",
            Algorithm::RandomForest => "rforest",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.key() == s)
            .ok_or_else(|| {
                format!("unknown algorithm '{s}' (expected id3, c45, nb, aode, rtree, or rforest)")
            })
    }
}

/// Hyperparameters for [`train`]. Fields irrelevant to an algorithm are
/// ignored by it.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainOptions {
    /// Randomization seed for `rtree` and `rforest`.
    pub seed: u64,
    /// Laplace pseudo-count for `nb` and `aode`; must be positive.
    pub laplace: f64,
    /// Minimum observations of a value before it may anchor a one-dependence
    /// estimator (`aode`); must be at least 1.
    pub freq_limit: u32,
    /// Pruning confidence for `c45`; must lie in (0, 0.5).
    pub confidence: f64,
    /// Ensemble size for `rforest`; must be at least 1.
    pub trees: usize,
    /// Candidate attributes per split for `rtree`/`rforest`; defaults to
    /// ⌊log₂(arity)⌋ + 1.
    pub k: Option<usize>,
}

impl Default for TrainOptions {
    fn default() -> TrainOptions {
        TrainOptions {
            seed: 1,
            laplace: 1.0,
            freq_limit: 1,
            confidence: 0.25,
            trees: 10,
            k: None,
        }
    }
}

/// The default per-split candidate count for randomized trees.
pub fn default_candidate_count(arity: usize) -> usize {
    arity.ilog2() as usize + 1
}

/// Errors raised by training and the entropy helpers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrainError {
    #[error("cannot train on an empty dataset")]
    EmptyDataset,
    #[error("entropy of an empty or all-zero distribution is undefined")]
    EmptyDistribution,
    #[error("invalid hyperparameter: {0}")]
    BadParameter(String),
}

/// Errors raised at prediction time.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredictError {
    #[error("feature vector has {found} attributes but the model expects {expected}")]
    SchemaMismatch { expected: usize, found: usize },
}

/// The attribute layout a model was trained on: context width plus the
/// observed per-attribute symbol domains (always id-sorted, always
/// containing the blank).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schema {
    pub model: ContextModel,
    pub domains: Vec<Vec<Symbol>>,
}

impl Schema {
    pub fn of(data: &Dataset) -> Schema {
        Schema {
            model: data.model,
            domains: data.attribute_domains(),
        }
    }

    pub fn arity(&self) -> usize {
        self.model.arity()
    }

    pub fn attribute_names(&self) -> Vec<String> {
        self.model.attribute_names()
    }

    /// Position of a symbol in an attribute's domain, if present.
    pub fn domain_position(&self, attribute: usize, symbol: Symbol) -> Option<usize> {
        self.domains[attribute]
            .binary_search_by_key(&symbol.id(), |s| s.id())
            .ok()
    }

    /// The serialized attribute lines, also the fingerprint input.
    pub(crate) fn canonical_lines(&self) -> Vec<String> {
        self.attribute_names()
            .iter()
            .zip(&self.domains)
            .map(|(name, domain)| {
                let symbols: Vec<&str> = domain.iter().map(|s| s.as_str()).collect();
                format!("attr {name} {}", symbols.join(" "))
            })
            .collect()
    }

    /// Sixteen-hex-digit content fingerprint of the schema.
    pub fn fingerprint(&self) -> String {
        let mut state = hashing::fnv1a_64(b"context ");
        state = hashing::extend(state, self.model.name().as_bytes());
        for line in self.canonical_lines() {
            state = hashing::extend(state, b"\n");
            state = hashing::extend(state, line.as_bytes());
        }
        hashing::to_hex(state)
    }
}

/// A trained classifier plus the metadata needed to use and serialize it.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainedModel {
    pub algorithm: Algorithm,
    pub seed: u64,
    pub schema: Schema,
    pub kind: ModelKind,
}

/// The algorithm-specific payload.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelKind {
    Tree(TreeNode),
    /// Pruned tree, kept distinct so the pruning confidence survives
    /// serialization.
    PrunedTree { tree: TreeNode, confidence: f64 },
    Forest { trees: Vec<TreeNode>, k: usize },
    RandomTree { tree: TreeNode, k: usize },
    Bayes(NaiveBayes),
    OneDependence(Aode),
}

impl TrainedModel {
    /// Probability distribution over the eleven classes.
    pub fn predict_proba(&self, values: &[Symbol]) -> Result<ClassDistribution, PredictError> {
        if values.len() != self.schema.arity() {
            return Err(PredictError::SchemaMismatch {
                expected: self.schema.arity(),
                found: values.len(),
            });
        }
        Ok(match &self.kind {
            ModelKind::Tree(tree) => tree.distribution(values, &self.schema),
            ModelKind::PrunedTree { tree, .. } => tree.distribution(values, &self.schema),
            ModelKind::RandomTree { tree, .. } => tree.distribution(values, &self.schema),
            ModelKind::Forest { trees, .. } => {
                tree::forest_distribution(trees, values, &self.schema)
            }
            ModelKind::Bayes(nb) => nb.distribution(values, &self.schema),
            ModelKind::OneDependence(aode) => aode.distribution(values, &self.schema),
        })
    }

    /// Most probable class; ties go to the lowest class id.
    pub fn predict(&self, values: &[Symbol]) -> Result<SandhiClass, PredictError> {
        Ok(argmax_class(&self.predict_proba(values)?))
    }
}

/// Highest-probability class, ties to the lowest class id.
pub fn argmax_class(distribution: &ClassDistribution) -> SandhiClass {
    let mut best = 0;
    for (slot, &p) in distribution.iter().enumerate() {
        if p > distribution[best] {
            best = slot;
        }
    }
    SandhiClass::from_id(best as u8 + 1).expect("slot maps to a class")
}

/// Train one model.
pub fn train(
    data: &Dataset,
    algorithm: Algorithm,
    options: &TrainOptions,
) -> Result<TrainedModel, TrainError> {
    if data.rows.is_empty() {
        return Err(TrainError::EmptyDataset);
    }
    let schema = Schema::of(data);
    let kind = match algorithm {
        Algorithm::Id3 => ModelKind::Tree(tree::train_plain(data, &schema)),
        Algorithm::C45 => {
            let confidence = options.confidence;
            if !(confidence > 0.0 && confidence < 0.5) {
                return Err(TrainError::BadParameter(format!(
                    "confidence {confidence} must lie strictly between 0 and 0.5"
                )));
            }
            ModelKind::PrunedTree {
                tree: tree::train_pruned(data, &schema, confidence),
                confidence,
            }
        }
        Algorithm::NaiveBayes => {
            check_laplace(options.laplace)?;
            ModelKind::Bayes(NaiveBayes::train(data, &schema, options.laplace))
        }
        Algorithm::Aode => {
            check_laplace(options.laplace)?;
            if options.freq_limit < 1 {
                return Err(TrainError::BadParameter(
                    "frequency limit must be at least 1".into(),
                ));
            }
            ModelKind::OneDependence(Aode::train(
                data,
                &schema,
                options.laplace,
                options.freq_limit,
            ))
        }
        Algorithm::RandomTree => {
            let k = resolve_candidates(options.k, schema.arity())?;
            ModelKind::RandomTree {
                tree: tree::train_random_tree(data, &schema, k, options.seed),
                k,
            }
        }
        Algorithm::RandomForest => {
            if options.trees < 1 {
                return Err(TrainError::BadParameter(
                    "a forest needs at least one tree".into(),
                ));
            }
            let k = resolve_candidates(options.k, schema.arity())?;
            ModelKind::Forest {
                trees: tree::train_forest(data, &schema, options.trees, k, options.seed),
                k,
            }
        }
    };
    Ok(TrainedModel {
        algorithm,
        seed: options.seed,
        schema,
        kind,
    })
}

fn check_laplace(laplace: f64) -> Result<(), TrainError> {
    if laplace > 0.0 && laplace.is_finite() {
        Ok(())
    } else {
        Err(TrainError::BadParameter(format!(
            "laplace pseudo-count {laplace} must be positive and finite"
        )))
    }
}

fn resolve_candidates(k: Option<usize>, arity: usize) -> Result<usize, TrainError> {
    let k = k.unwrap_or_else(|| default_candidate_count(arity));
    if (1..=arity).contains(&k) {
        Ok(k)
    } else {
        Err(TrainError::BadParameter(format!(
            "candidate count {k} must lie in 1..={arity}"
        )))
    }
}

/// Shannon entropy in bits of a count distribution.
pub fn entropy(counts: &[u32]) -> Result<f64, TrainError> {
    if counts.iter().all(|&c| c == 0) {
        return Err(TrainError::EmptyDistribution);
    }
    Ok(tree::entropy_of_counts(counts))
}

/// Information gain of one attribute over the whole dataset.
pub fn info_gain(data: &Dataset, attribute: usize) -> f64 {
    let schema = Schema::of(data);
    tree::attribute_stats(data, &schema, attribute).0
}

/// Gain ratio of one attribute over the whole dataset; zero when the
/// attribute does not split the data at all.
pub fn gain_ratio(data: &Dataset, attribute: usize) -> f64 {
    let schema = Schema::of(data);
    tree::attribute_stats(data, &schema, attribute).1
}

/// Deterministic seed derivation for independently seeded sub-tasks.
pub(crate) fn mix_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::FeatureVector;

    fn sym(s: &str) -> Symbol {
        s.parse().expect("test symbol parses")
    }

    fn toy_dataset(rows: &[(&[&str], u8)]) -> Dataset {
        let mut data = Dataset::new(ContextModel::II);
        for (values, class_id) in rows {
            let mut full: Vec<Symbol> = values.iter().map(|v| sym(v)).collect();
            full.resize(ContextModel::II.arity(), Symbol::Pad);
            data.rows.push(FeatureVector {
                values: full,
                class: SandhiClass::from_id(*class_id).unwrap(),
            });
        }
        data
    }

    fn separable_toy() -> Dataset {
        toy_dataset(&[
            (&["a", "k"], 1),
            (&["a", "t"], 1),
            (&["i", "k"], 2),
            (&["i", "t"], 2),
            (&["u", "k"], 3),
            (&["u", "t"], 3),
        ])
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy(&[8, 8]).unwrap(), 1.0);
        assert_eq!(entropy(&[5, 0]).unwrap(), 0.0);
        assert!((entropy(&[9, 5]).unwrap() - 0.9403).abs() < 1e-3);
        assert_eq!(entropy(&[]), Err(TrainError::EmptyDistribution));
        assert_eq!(entropy(&[0, 0, 0]), Err(TrainError::EmptyDistribution));
    }

    #[test]
    fn gain_examples() {
        let data = toy_dataset(&[
            (&["a", "k"], 1),
            (&["a", "k"], 1),
            (&["i", "k"], 2),
            (&["i", "k"], 2),
        ]);
        // Attribute 1 is constant: no gain, and zero split info means the
        // ratio is defined as zero.
        assert_eq!(info_gain(&data, 1), 0.0);
        assert_eq!(gain_ratio(&data, 1), 0.0);
        // Attribute 0 mirrors the class labels exactly.
        assert_eq!(info_gain(&data, 0), entropy(&[2, 2]).unwrap());
        assert_eq!(info_gain(&data, 0), 1.0);
        assert!(gain_ratio(&data, 0) > 0.0);
    }

    #[test]
    fn gain_is_never_negative() {
        let data = separable_toy();
        for attribute in 0..data.model.arity() {
            assert!(info_gain(&data, attribute) >= 0.0);
        }
    }

    #[test]
    fn every_algorithm_fits_a_separable_toy_set() {
        let data = separable_toy();
        for algorithm in Algorithm::ALL {
            let model = train(&data, algorithm, &TrainOptions::default()).unwrap();
            for row in &data.rows {
                assert_eq!(
                    model.predict(&row.values).unwrap(),
                    row.class,
                    "{algorithm} on a cleanly separable set"
                );
            }
        }
    }

    #[test]
    fn predict_is_argmax_of_predict_proba() {
        let data = separable_toy();
        for algorithm in Algorithm::ALL {
            let model = train(&data, algorithm, &TrainOptions::default()).unwrap();
            for row in &data.rows {
                let dist = model.predict_proba(&row.values).unwrap();
                assert!((dist.iter().sum::<f64>() - 1.0).abs() < 1e-9);
                assert_eq!(model.predict(&row.values).unwrap(), argmax_class(&dist));
            }
        }
    }

    #[test]
    fn argmax_breaks_ties_toward_the_lowest_class() {
        let mut dist = [0.0; SandhiClass::COUNT];
        dist[SandhiClass::UDeletion.slot()] = 0.5;
        dist[SandhiClass::NoChange.slot()] = 0.5;
        assert_eq!(argmax_class(&dist), SandhiClass::UDeletion);
        // A tied leaf behaves the same end to end: two identical vectors
        // with different classes leave an evenly split leaf.
        let data = toy_dataset(&[(&["a"], 3), (&["a"], 4)]);
        let model = train(&data, Algorithm::Id3, &TrainOptions::default()).unwrap();
        assert_eq!(
            model.predict(&data.rows[0].values).unwrap(),
            SandhiClass::ConsonantDoubling
        );
    }

    #[test]
    fn wrong_arity_is_a_schema_mismatch() {
        let data = separable_toy();
        let model = train(&data, Algorithm::NaiveBayes, &TrainOptions::default()).unwrap();
        let err = model.predict(&[Symbol::Pad; 15]).unwrap_err();
        assert_eq!(
            err,
            PredictError::SchemaMismatch {
                expected: 10,
                found: 15
            }
        );
    }

    #[test]
    fn hyperparameters_are_validated() {
        let data = separable_toy();
        let base = TrainOptions::default;
        let rejected = [
            (Algorithm::C45, TrainOptions { confidence: 0.5, ..base() }),
            (Algorithm::C45, TrainOptions { confidence: 0.0, ..base() }),
            (Algorithm::NaiveBayes, TrainOptions { laplace: 0.0, ..base() }),
            (Algorithm::Aode, TrainOptions { freq_limit: 0, ..base() }),
            (Algorithm::RandomForest, TrainOptions { trees: 0, ..base() }),
            (Algorithm::RandomTree, TrainOptions { k: Some(0), ..base() }),
            (Algorithm::RandomTree, TrainOptions { k: Some(11), ..base() }),
        ];
        for (algorithm, opts) in rejected {
            assert!(
                matches!(
                    train(&data, algorithm, &opts),
                    Err(TrainError::BadParameter(_))
                ),
                "{algorithm:?} must reject {opts:?}"
            );
        }
        assert_eq!(
            train(&Dataset::new(ContextModel::II), Algorithm::Id3, &TrainOptions::default()),
            Err(TrainError::EmptyDataset)
        );
    }

    #[test]
    fn default_candidate_counts() {
        assert_eq!(default_candidate_count(15), 4);
        assert_eq!(default_candidate_count(10), 4);
        assert_eq!(default_candidate_count(2), 2);
        assert_eq!(default_candidate_count(1), 1);
    }

    #[test]
    fn algorithm_keys_round_trip() {
        for algorithm in Algorithm::ALL {
            assert_eq!(algorithm.key().parse::<Algorithm>(), Ok(algorithm));
            assert_eq!(algorithm.to_string(), algorithm.key());
        }
        assert!("j48".parse::<Algorithm>().is_err());
    }

    #[test]
    fn schema_fingerprint_tracks_content() {
        let data = separable_toy();
        let schema = Schema::of(&data);
        assert_eq!(schema.fingerprint().len(), 16);
        assert_eq!(schema.fingerprint(), Schema::of(&data).fingerprint());
        let mut other = toy_dataset(&[(&["a", "k"], 1)]);
        other.rows[0].values[0] = sym("E");
        assert_ne!(
            schema.fingerprint(),
            Schema::of(&other).fingerprint(),
            "different observed domains change the fingerprint"
        );
    }

    #[test]
    fn domain_positions_cover_the_domain_only() {
        let data = separable_toy();
        let schema = Schema::of(&data);
        assert_eq!(schema.domain_position(0, Symbol::Pad), Some(0));
        assert_eq!(schema.domain_position(0, sym("a")), Some(1));
        assert_eq!(schema.domain_position(0, sym("i")), Some(2));
        assert_eq!(schema.domain_position(0, sym("u")), Some(3));
        assert_eq!(schema.domain_position(0, sym("k")), None);
    }

    #[test]
    fn seed_mixing_separates_salts() {
        assert_ne!(mix_seed(1, 0), mix_seed(1, 1));
        assert_ne!(mix_seed(1, 0), mix_seed(2, 0));
        assert_eq!(mix_seed(7, 3), mix_seed(7, 3));
    }
}
