//! Romanized Tamil phonology, a deterministic sandhi rule engine for noun
//! declension, and from-scratch nominal classifiers with a matching
//! evaluation kit.

pub mod corpus;
pub mod eval;
pub mod features;
pub mod hashing;
pub mod learn;
pub mod phonology;
pub mod sandhi;

pub use eval::{
    compare_models, cross_validate, evaluate_all, kappa, probabilistic_errors, relative_errors,
    stratified_kfold, AlgorithmScores, ConfusionMatrix, EvalError, EvalReport, FoldPlan,
};

pub use features::{extract, window, ContextModel, Dataset, DatasetError, FeatureVector, Symbol};
pub use learn::{
    load_model, save_model, train, Algorithm, Aode, ClassDistribution, ModelIoError, ModelKind,
    NaiveBayes, PredictError, Schema, TrainError, TrainOptions, TrainedModel, TreeNode,
};
pub use phonology::{
    render, tokenize, Frontness, Manner, Phoneme, PhonologyError, VowelClass, VowelLength, Word,
};
pub use sandhi::{
    default_synthesis_suffixes, standard_suffix, standard_suffixes, ExceptionLexicon, Junction,
    SandhiClass, SandhiEngine, SandhiError, SuffixCategory, SuffixEntry, SynthesisOutcome,
};
