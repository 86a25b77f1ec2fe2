//! The eight subcommands and their argument surface.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sandhi_forge::learn::TreeNode;
use sandhi_forge::phonology::{Frontness, Manner, VowelLength};
use sandhi_forge::{
    compare_models, default_synthesis_suffixes, evaluate_all, load_model, save_model, train,
    Algorithm, ContextModel, Dataset, EvalError, EvalReport, ModelKind, Phoneme, SandhiClass,
    SandhiEngine, Schema, SuffixCategory, Symbol, TrainError, TrainOptions, TrainedModel, Word,
};

use crate::ingest::ingest_stems;
use crate::pipeline::{
    inflect, paradigm, sandhi_error, Engine, InflectionRequest, ParadigmTable, Step,
};
use crate::CliError;

/// Fixed shuffle seed for `synth`: dataset files never depend on stem-file
/// ordering tricks, and re-synthesizing the same corpus is byte-identical.
pub const SYNTH_SHUFFLE_SEED: u64 = 7;

/// Default cross-validation seed for `eval`.
pub const DEFAULT_CV_SEED: u64 = 1;

#[derive(Parser)]
#[command(
    name = "sandhi-forge",
    version,
    about = "Romanized Tamil noun declension: rule engine, dataset synthesis, classifiers, evaluation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Label every junction of a stem corpus and write the featurized dataset.
    Synth {
        /// Stems file: one romanized stem per line, '#' comments allowed.
        #[arg(long)]
        stems: PathBuf,
        /// Context model: I (ten stem slots) or II (five).
        #[arg(long)]
        model: String,
        /// Suffix set to synthesize against (only 'std' exists).
        #[arg(long, default_value = "std")]
        suffixes: String,
        /// Output dataset file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Train one classifier on a dataset file and write the model file.
    Train {
        /// Algorithm: id3, c45, nb, aode, rtree, or rforest.
        #[arg(long)]
        algo: String,
        /// Dataset file written by synth.
        #[arg(long)]
        data: PathBuf,
        /// Output model file.
        #[arg(long)]
        out: PathBuf,
        /// Randomization seed for rtree and rforest.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Pruning confidence for c45, in (0, 0.5).
        #[arg(long, default_value_t = 0.25)]
        confidence: f64,
        /// Ensemble size for rforest.
        #[arg(long, default_value_t = 10)]
        trees: usize,
        /// Candidate attributes per split for rtree/rforest
        /// (default: floor(log2(arity)) + 1).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Cross-validate one or more algorithms and print the report.
    Eval {
        /// Comma-separated algorithms, e.g. 'id3,nb,rforest'.
        #[arg(long)]
        algo: String,
        /// Dataset file written by synth.
        #[arg(long)]
        data: PathBuf,
        /// Fold count (at least 2).
        #[arg(long, default_value_t = 10)]
        folds: usize,
        /// Cross-validation seed.
        #[arg(long, default_value_t = DEFAULT_CV_SEED)]
        seed: u64,
        /// Second dataset over the same junctions, reported side by side.
        #[arg(long)]
        compare: Option<PathBuf>,
    },
    /// Generate one inflected form, printing the surface and its junction trace.
    Inflect {
        /// Romanized stem.
        #[arg(long)]
        stem: String,
        /// Attach the plural suffix before the case suffix.
        #[arg(long)]
        plural: bool,
        /// Euphonic increment between plural and case: 'in' or 'an'.
        #[arg(long)]
        euphonic: Option<String>,
        /// Case category, e.g. nominative, accusative, dative.
        #[arg(long)]
        case: String,
        /// Junction-class decider: 'oracle' or 'model:PATH'.
        #[arg(long, default_value = "oracle")]
        engine: String,
    },
    /// Print a stem's full declension: every case, singular and plural.
    Paradigm {
        /// Romanized stem.
        #[arg(long)]
        stem: String,
    },
    /// Classify one junction, reporting the engine's call against the rules.
    Classify {
        /// Romanized stem.
        #[arg(long)]
        stem: String,
        /// Romanized suffix form, e.g. 'ai' or 'kaL'.
        #[arg(long)]
        suffix: String,
        /// Junction-class decider: 'oracle' or 'model:PATH'.
        #[arg(long, default_value = "oracle")]
        engine: String,
    },
    /// Pretty-print a model file: tree structure or probability tables.
    Inspect {
        /// Model file written by train.
        #[arg(long)]
        model: PathBuf,
    },
    /// Print the romanized alphabet: one line per phoneme with its features.
    DumpAlphabet,
}

/// Where a junction-deciding engine comes from, as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineSpec {
    Oracle,
    Model(PathBuf),
}

impl FromStr for EngineSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "oracle" {
            return Ok(EngineSpec::Oracle);
        }
        if let Some(path) = s.strip_prefix("model:") {
            if path.is_empty() {
                return Err("engine 'model:' needs a file path".into());
            }
            return Ok(EngineSpec::Model(PathBuf::from(path)));
        }
        Err(format!("engine must be 'oracle' or 'model:PATH', got '{s}'"))
    }
}

/// Execute one subcommand, printing its output to stdout.
pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Synth {
            stems,
            model,
            suffixes,
            out,
        } => cmd_synth(&stems, &model, &suffixes, &out),
        Command::Train {
            algo,
            data,
            out,
            seed,
            confidence,
            trees,
            k,
        } => cmd_train(&algo, &data, &out, seed, confidence, trees, k),
        Command::Eval {
            algo,
            data,
            folds,
            seed,
            compare,
        } => cmd_eval(&algo, &data, folds, seed, compare.as_deref()),
        Command::Inflect {
            stem,
            plural,
            euphonic,
            case,
            engine,
        } => cmd_inflect(&stem, plural, euphonic.as_deref(), &case, &engine),
        Command::Paradigm { stem } => cmd_paradigm(&stem),
        Command::Classify {
            stem,
            suffix,
            engine,
        } => cmd_classify(&stem, &suffix, &engine),
        Command::Inspect { model } => cmd_inspect(&model),
        Command::DumpAlphabet => {
            print!("{}", render_alphabet());
            Ok(())
        }
    }
}

fn cmd_synth(stems: &Path, model: &str, suffixes: &str, out: &Path) -> Result<(), CliError> {
    if suffixes != "std" {
        return Err(CliError::Usage(format!(
            "unknown suffix set '{suffixes}' (only 'std' exists)"
        )));
    }
    let model: ContextModel = model.parse().map_err(CliError::Usage)?;
    let stems = ingest_stems(stems)?;
    let engine = SandhiEngine::new();
    let outcome = engine.synthesize(&stems, &default_synthesis_suffixes());
    if let Some((stem, err)) = outcome.skipped.first() {
        return Err(CliError::Data(format!(
            "{} junction(s) not covered by any rule; first: stem '{stem}': {err}",
            outcome.skipped.len()
        )));
    }
    let mut junctions = outcome.junctions;
    let mut rng = ChaCha8Rng::seed_from_u64(SYNTH_SHUFFLE_SEED);
    junctions.shuffle(&mut rng);
    let dataset = Dataset::from_junctions(&junctions, model);
    write_file(out, &dataset.to_csv())?;
    println!(
        "synthesized {} junctions from {} stems (context {model}) -> {}",
        dataset.len(),
        stems.len(),
        out.display()
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_train(
    algo: &str,
    data: &Path,
    out: &Path,
    seed: u64,
    confidence: f64,
    trees: usize,
    k: Option<usize>,
) -> Result<(), CliError> {
    let algorithm: Algorithm = algo.parse().map_err(CliError::Usage)?;
    let dataset = read_dataset(data)?;
    let options = TrainOptions {
        seed,
        confidence,
        trees,
        k,
        ..TrainOptions::default()
    };
    let model = train(&dataset, algorithm, &options).map_err(train_error)?;
    write_file(out, &save_model(&model))?;
    println!(
        "trained {algorithm} on {} instances (context {}) -> {}",
        dataset.len(),
        dataset.model,
        out.display()
    );
    Ok(())
}

fn cmd_eval(
    algo: &str,
    data: &Path,
    folds: usize,
    seed: u64,
    compare: Option<&Path>,
) -> Result<(), CliError> {
    let algorithms = parse_algorithms(algo)?;
    if folds < 2 {
        return Err(CliError::Usage(format!(
            "--folds must be at least 2, got {folds}"
        )));
    }
    let dataset = read_dataset(data)?;
    let options = TrainOptions::default();
    match compare {
        None => {
            let report =
                evaluate_all(&dataset, &algorithms, &options, folds, seed).map_err(eval_error)?;
            print!("{}", render_report(&report));
        }
        Some(second_path) => {
            let second = read_dataset(second_path)?;
            let (first_report, second_report) =
                compare_models(&dataset, &second, &algorithms, &options, folds, seed)
                    .map_err(eval_error)?;
            println!("[context {}]", dataset.model);
            print!("{}", render_report(&first_report));
            println!();
            println!("[context {}]", second.model);
            print!("{}", render_report(&second_report));
        }
    }
    Ok(())
}

fn cmd_inflect(
    stem: &str,
    plural: bool,
    euphonic: Option<&str>,
    case: &str,
    engine: &str,
) -> Result<(), CliError> {
    let stem = parse_word(stem, "stem")?;
    let case = parse_case(case)?;
    let euphonic = match euphonic {
        None => None,
        Some("in") => Some(0),
        Some("an") => Some(1),
        Some(other) => {
            return Err(CliError::Usage(format!(
                "--euphonic must be 'in' or 'an', got '{other}'"
            )))
        }
    };
    let engine = load_engine(engine)?;
    let rules = SandhiEngine::new();
    let request = InflectionRequest {
        stem,
        plural,
        euphonic,
        case,
        variant_index: 0,
    };
    let (surface, steps) = inflect(&engine, &rules, &request)?;
    print!("{}", render_inflection(&surface, &steps));
    Ok(())
}

fn cmd_paradigm(stem: &str) -> Result<(), CliError> {
    let stem = parse_word(stem, "stem")?;
    let rules = SandhiEngine::new();
    let table: ParadigmTable = paradigm(&rules, &stem)?;
    print!("{}", table.render());
    Ok(())
}

fn cmd_classify(stem: &str, suffix: &str, engine: &str) -> Result<(), CliError> {
    let stem = parse_word(stem, "stem")?;
    let form = parse_word(suffix, "suffix")?;
    let engine = load_engine(engine)?;
    let rules = SandhiEngine::new();
    let (oracle_class, surface) = rules.join_form(&stem, &form).map_err(sandhi_error)?;
    println!("junction: {stem} + {form}");
    if let Engine::Model(_) = &engine {
        let predicted = engine.decide(&rules, &stem, &form)?;
        println!("model class: {}", class_text(predicted));
        println!("oracle class: {}", class_text(oracle_class));
        println!(
            "agreement: {}",
            if predicted == oracle_class { "yes" } else { "no" }
        );
    } else {
        println!("oracle class: {}", class_text(oracle_class));
    }
    println!("surface: {surface}");
    Ok(())
}

fn cmd_inspect(path: &Path) -> Result<(), CliError> {
    let text = read_file(path)?;
    let model =
        load_model(&text).map_err(|err| CliError::Data(format!("{}: {err}", path.display())))?;
    print!("{}", render_model(&model));
    Ok(())
}

// ---------------------------------------------------------------------------
// Flag parsing helpers.

fn parse_word(text: &str, what: &str) -> Result<Word, CliError> {
    text.parse()
        .map_err(|err| CliError::Data(format!("invalid {what} '{text}': {err}")))
}

fn parse_case(name: &str) -> Result<SuffixCategory, CliError> {
    let category: SuffixCategory = name.parse().map_err(CliError::Usage)?;
    if !SuffixCategory::CASES.contains(&category) {
        return Err(CliError::Usage(format!(
            "'{name}' is not a case category (the plural and euphonic slots have their own flags)"
        )));
    }
    Ok(category)
}

fn parse_algorithms(spec: &str) -> Result<Vec<Algorithm>, CliError> {
    let mut algorithms = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(CliError::Usage(format!(
                "empty algorithm name in '{spec}'"
            )));
        }
        algorithms.push(part.parse().map_err(CliError::Usage)?);
    }
    Ok(algorithms)
}

fn load_engine(spec: &str) -> Result<Engine, CliError> {
    match spec.parse::<EngineSpec>().map_err(CliError::Usage)? {
        EngineSpec::Oracle => Ok(Engine::Oracle),
        EngineSpec::Model(path) => {
            let text = read_file(&path)?;
            let model = load_model(&text)
                .map_err(|err| CliError::Data(format!("{}: {err}", path.display())))?;
            Ok(Engine::Model(Box::new(model)))
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|err| CliError::Data(format!("cannot read {}: {err}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    fs::write(path, content)
        .map_err(|err| CliError::Data(format!("cannot write {}: {err}", path.display())))
}

fn read_dataset(path: &Path) -> Result<Dataset, CliError> {
    let text = read_file(path)?;
    Dataset::from_csv(&text).map_err(|err| CliError::Data(format!("{}: {err}", path.display())))
}

// ---------------------------------------------------------------------------
// Error bucket mapping.

fn train_error(err: TrainError) -> CliError {
    match err {
        TrainError::BadParameter(_) => CliError::Usage(err.to_string()),
        TrainError::EmptyDataset => CliError::Data(err.to_string()),
        TrainError::EmptyDistribution => CliError::Internal(err.to_string()),
    }
}

fn eval_error(err: EvalError) -> CliError {
    match err {
        EvalError::BadFoldCount { .. } => CliError::Usage(err.to_string()),
        EvalError::TooFewInstances { .. } | EvalError::JunctionSetMismatch => {
            CliError::Data(err.to_string())
        }
        EvalError::Train(inner) => train_error(inner),
        EvalError::EmptyMatrix
        | EvalError::LengthMismatch { .. }
        | EvalError::DegeneratePrior
        | EvalError::Predict(_) => CliError::Internal(err.to_string()),
    }
}

// ---------------------------------------------------------------------------
// Output rendering.

fn class_text(class: SandhiClass) -> String {
    format!("{} ({})", class.id(), class.label())
}

/// The surface on the first line, then one indented line per junction.
pub fn render_inflection(surface: &Word, steps: &[Step]) -> String {
    let mut out = format!("{surface}\n");
    for step in steps {
        out.push_str(&format!(
            "  class {} ({}): {}\n",
            step.class.id(),
            step.class.label(),
            step.surface
        ));
    }
    out
}

/// The aligned measure table followed by the machine-readable lines.
pub fn render_report(report: &EvalReport) -> String {
    format!("{}\n{}", report.table(), report.csv())
}

/// One line per phoneme: symbol, kind, features.
pub fn render_alphabet() -> String {
    let mut out = String::new();
    for phoneme in Phoneme::ALL {
        let (kind, features) = if phoneme.is_vowel() {
            let class = phoneme.vowel_class().expect("vowels have a vowel class");
            let frontness = match class.frontness {
                Frontness::Front => "front",
                Frontness::Back => "back",
            };
            let length = match class.length {
                VowelLength::Short => "short",
                VowelLength::Long => "long",
                VowelLength::Diphthong => "diphthong",
            };
            ("vowel", format!("{frontness} {length}"))
        } else {
            let manner = match phoneme.manner().expect("consonants have a manner") {
                Manner::Plosive => "plosive",
                Manner::Nasal => "nasal",
                Manner::Medial => "medial",
            };
            ("consonant", manner.to_string())
        };
        out.push_str(&format!(
            "{:<4} {:<10} {features}\n",
            phoneme.symbol(),
            kind
        ));
    }
    out
}

/// Header plus an algorithm-specific payload: tree structure for the tree
/// learners, probability tables for the Bayes learners.
pub fn render_model(model: &TrainedModel) -> String {
    let mut out = format!(
        "algorithm: {}\ncontext: {}\ntrained with seed: {}\nschema fingerprint: {}\nattributes: {}\n",
        model.algorithm,
        model.schema.model,
        model.seed,
        model.schema.fingerprint(),
        model.schema.attribute_names().join(" ")
    );
    match &model.kind {
        ModelKind::Tree(tree) => {
            out.push_str(&tree_summary("tree", tree));
            render_tree(tree, &model.schema, 0, &mut out);
        }
        ModelKind::PrunedTree { tree, confidence } => {
            out.push_str(&format!(
                "pruning confidence: {confidence}\n{}",
                tree_summary("tree", tree)
            ));
            render_tree(tree, &model.schema, 0, &mut out);
        }
        ModelKind::RandomTree { tree, k } => {
            out.push_str(&format!(
                "candidate attributes per split: {k}\n{}",
                tree_summary("tree", tree)
            ));
            render_tree(tree, &model.schema, 0, &mut out);
        }
        ModelKind::Forest { trees, k } => {
            out.push_str(&format!(
                "forest: {} trees, {k} candidate attributes per split\n",
                trees.len()
            ));
            for (index, tree) in trees.iter().enumerate() {
                out.push_str(&tree_summary(&format!("tree {index}"), tree));
            }
        }
        ModelKind::Bayes(bayes) => {
            out.push_str(&format!(
                "naive bayes over {} instances (pseudo-count {})\n",
                bayes.total, bayes.laplace
            ));
            render_priors(&bayes.class_counts, bayes.total, bayes.laplace, &mut out);
            for attribute in 0..model.schema.arity() {
                render_conditionals(
                    &model.schema,
                    attribute,
                    |value, slot, domain_size| bayes.conditional(attribute, value, slot, domain_size),
                    &mut out,
                );
            }
        }
        ModelKind::OneDependence(aode) => {
            out.push_str(&format!(
                "one-dependence ensemble over {} instances (pseudo-count {}, parent frequency limit {})\n",
                aode.total, aode.laplace, aode.freq_limit
            ));
            render_priors(&aode.class_counts, aode.total, aode.laplace, &mut out);
            for attribute in 0..model.schema.arity() {
                render_conditionals(
                    &model.schema,
                    attribute,
                    |value, slot, domain_size| {
                        let index = (attribute * Symbol::COUNT + value.id())
                            * SandhiClass::COUNT
                            + slot;
                        (f64::from(aode.single[index]) + aode.laplace)
                            / (f64::from(aode.class_counts[slot])
                                + aode.laplace * domain_size as f64)
                    },
                    &mut out,
                );
            }
            let populated = aode.pair.iter().filter(|&&count| count > 0).count();
            let arity = model.schema.arity();
            out.push_str(&format!(
                "pair store: {} attribute pairs, {populated} populated cells\n",
                arity * (arity - 1) / 2
            ));
        }
    }
    out
}

fn tree_summary(name: &str, tree: &TreeNode) -> String {
    format!(
        "{name}: {} nodes, {} leaves, depth {}\n",
        tree.node_count(),
        tree.leaf_count(),
        tree.depth()
    )
}

fn leaf_text(counts: &[u32; SandhiClass::COUNT]) -> String {
    let total: u32 = counts.iter().sum();
    if total == 0 {
        return "unreached".into();
    }
    let slot = counts
        .iter()
        .enumerate()
        .max_by_key(|&(_, &count)| count)
        .map(|(slot, _)| slot)
        .expect("eleven slots");
    let class = SandhiClass::ALL[slot];
    format!(
        "class {} ({}) [{}/{total}]",
        class.id(),
        class.label(),
        counts[slot]
    )
}

fn render_tree(node: &TreeNode, schema: &Schema, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match node {
        TreeNode::Leaf { counts } => {
            out.push_str(&format!("{pad}{}\n", leaf_text(counts)));
        }
        TreeNode::Split {
            attribute,
            default,
            children,
            ..
        } => {
            out.push_str(&format!(
                "{pad}split on {}\n",
                schema.attribute_names()[*attribute]
            ));
            for (position, child) in children.iter().enumerate() {
                let symbol = schema.domains[*attribute][position].as_str();
                let marker = if position == *default { "*" } else { "" };
                match child {
                    TreeNode::Leaf { counts } => {
                        out.push_str(&format!(
                            "{pad}  {symbol}{marker} -> {}\n",
                            leaf_text(counts)
                        ));
                    }
                    TreeNode::Split { .. } => {
                        out.push_str(&format!("{pad}  {symbol}{marker} ->\n"));
                        render_tree(child, schema, indent + 2, out);
                    }
                }
            }
        }
    }
}

fn render_priors(
    class_counts: &[u32; SandhiClass::COUNT],
    total: u32,
    laplace: f64,
    out: &mut String,
) {
    out.push_str("class priors:\n");
    for class in SandhiClass::ALL {
        let slot = class.slot();
        let prior = (f64::from(class_counts[slot]) + laplace)
            / (f64::from(total) + laplace * SandhiClass::COUNT as f64);
        out.push_str(&format!(
            "  {:>2} {:<20} {prior:.4}\n",
            class.id(),
            class.label()
        ));
    }
}

fn render_conditionals(
    schema: &Schema,
    attribute: usize,
    conditional: impl Fn(Symbol, usize, usize) -> f64,
    out: &mut String,
) {
    let domain = &schema.domains[attribute];
    out.push_str(&format!(
        "P(value | class) for {}:\n  value",
        schema.attribute_names()[attribute]
    ));
    for class in SandhiClass::ALL {
        out.push_str(&format!("{:>8}", format!("c{}", class.id())));
    }
    out.push('\n');
    for &value in domain {
        out.push_str(&format!("  {:<5}", value.as_str()));
        for class in SandhiClass::ALL {
            out.push_str(&format!(
                "{:>8.4}",
                conditional(value, class.slot(), domain.len())
            ));
        }
        out.push('\n');
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_spec_parses_oracle_and_model_paths() {
        assert_eq!("oracle".parse::<EngineSpec>().unwrap(), EngineSpec::Oracle);
        assert_eq!(
            "model:out/id3.model".parse::<EngineSpec>().unwrap(),
            EngineSpec::Model(PathBuf::from("out/id3.model"))
        );
        assert!("model:".parse::<EngineSpec>().is_err());
        assert!("rules".parse::<EngineSpec>().is_err());
    }

    #[test]
    fn algorithm_lists_parse_and_reject_blanks() {
        let all = parse_algorithms("id3,c45,nb,aode,rtree,rforest").unwrap();
        assert_eq!(all, Algorithm::ALL);
        assert!(parse_algorithms("id3,,nb").is_err());
        assert!(parse_algorithms("j48").is_err());
    }

    #[test]
    fn case_parsing_rejects_non_case_categories() {
        assert_eq!(parse_case("dative").unwrap(), SuffixCategory::Dative);
        let err = parse_case("plural").unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(parse_case("vocative").is_err());
    }

    #[test]
    fn alphabet_covers_all_thirty_phonemes_with_features() {
        let text = render_alphabet();
        assert_eq!(text.lines().count(), 30);
        assert!(text.contains("ai   vowel      front diphthong"));
        assert!(text.contains("zh   consonant  medial"));
        assert!(text.contains("n2   consonant  nasal"));
    }

    #[test]
    fn inflection_rendering_lists_each_junction() {
        let rules = SandhiEngine::new();
        let request = InflectionRequest {
            stem: "maram".parse().unwrap(),
            plural: true,
            euphonic: None,
            case: SuffixCategory::Dative,
            variant_index: 0,
        };
        let (surface, steps) = inflect(&Engine::Oracle, &rules, &request).unwrap();
        let text = render_inflection(&surface, &steps);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "marangkaLukku");
        assert!(lines[1].contains("class 8 (plural-m-to-ng): marangkaL"));
        assert!(lines[2].contains("class 7 (no-change): marangkaLukku"));
    }
}
