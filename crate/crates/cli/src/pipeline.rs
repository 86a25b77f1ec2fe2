//! The inflection pipeline: sequential affixation with one classified
//! junction per suffix, plus full-paradigm generation.

use sandhi_forge::{
    standard_suffix, window, SandhiClass, SandhiEngine, SandhiError, SuffixCategory, SuffixEntry,
    TrainedModel, Word,
};

use crate::CliError;

/// What decides each junction's class: the rule engine itself, or a trained
/// model whose calls are verified against the rule engine.
pub enum Engine {
    Oracle,
    Model(Box<TrainedModel>),
}

impl Engine {
    /// Short description for report headers.
    pub fn describe(&self) -> String {
        match self {
            Engine::Oracle => "oracle".into(),
            Engine::Model(model) => {
                format!("model ({}, context {})", model.algorithm, model.schema.model)
            }
        }
    }

    /// Decide the class of one junction on the current intermediate stem.
    pub fn decide(
        &self,
        rules: &SandhiEngine,
        stem: &Word,
        form: &Word,
    ) -> Result<SandhiClass, CliError> {
        match self {
            Engine::Oracle => rules.classify_form(stem, form).map_err(sandhi_error),
            Engine::Model(model) => {
                let values = window(stem, form, model.schema.model);
                model
                    .predict(&values)
                    .map_err(|err| CliError::Internal(err.to_string()))
            }
        }
    }
}

/// Map rule-engine failures onto exit-code buckets. A junction no rule
/// covers, or a class that contradicts the rules, is a problem with the
/// data at hand; anything else coming out of the engine is a bug.
pub fn sandhi_error(err: SandhiError) -> CliError {
    match err {
        SandhiError::UnclassifiableStem { .. }
        | SandhiError::ClassMismatch { .. }
        | SandhiError::LexiconSyntax { .. } => CliError::Data(err.to_string()),
        SandhiError::Phonology(inner) => CliError::Data(inner.to_string()),
        SandhiError::NominativeJunction | SandhiError::Invariant(_) => {
            CliError::Internal(err.to_string())
        }
    }
}

/// One full generation request.
pub struct InflectionRequest {
    pub stem: Word,
    pub plural: bool,
    /// Euphonic increment variant: 0 for `in`, 1 for `an`.
    pub euphonic: Option<usize>,
    pub case: SuffixCategory,
    /// Which form of a multi-form case to use.
    pub variant_index: usize,
}

/// One pipeline step: the class the junction took and the surface after it.
#[derive(Debug, Clone)]
pub struct Step {
    pub class: SandhiClass,
    pub surface: Word,
}

/// The suffixes a request attaches, in pipeline order. Null-form suffixes
/// (the nominative) contribute nothing.
pub fn suffix_chain(request: &InflectionRequest) -> Result<Vec<SuffixEntry>, CliError> {
    let mut chain = Vec::new();
    if request.plural {
        chain.push(
            standard_suffix(SuffixCategory::Plural, 0)
                .expect("the inventory always carries the plural"),
        );
    }
    if let Some(variant) = request.euphonic {
        chain.push(standard_suffix(SuffixCategory::Euphonic, variant).ok_or_else(|| {
            CliError::Usage(format!("the euphonic increment has no variant {variant}"))
        })?);
    }
    let case = standard_suffix(request.case, request.variant_index).ok_or_else(|| {
        CliError::Usage(format!(
            "case {} has no variant {}",
            request.case, request.variant_index
        ))
    })?;
    if case.form.is_some() {
        chain.push(case);
    }
    Ok(chain)
}

/// Run the sequential pipeline: attach each suffix to the current
/// intermediate surface, classifying every junction on that intermediate
/// form. Classes decided by a model are verified against the rules when
/// the suffix is applied, so a wrong call surfaces as a data error rather
/// than a silently wrong form.
pub fn run_chain(
    engine: &Engine,
    rules: &SandhiEngine,
    start: &Word,
    chain: &[SuffixEntry],
) -> Result<(Word, Vec<Step>), CliError> {
    let mut current = start.clone();
    let mut steps = Vec::with_capacity(chain.len());
    for suffix in chain {
        let form = suffix
            .form
            .as_ref()
            .ok_or_else(|| CliError::Internal("null suffix in a pipeline chain".into()))?;
        let class = engine.decide(rules, &current, form)?;
        let surface = rules.apply(&current, suffix, class).map_err(sandhi_error)?;
        steps.push(Step {
            class,
            surface: surface.clone(),
        });
        current = surface;
    }
    Ok((current, steps))
}

/// Generate one surface form. A request that attaches nothing (nominative,
/// singular, no euphonic) returns the bare stem with an empty trace.
pub fn inflect(
    engine: &Engine,
    rules: &SandhiEngine,
    request: &InflectionRequest,
) -> Result<(Word, Vec<Step>), CliError> {
    let chain = suffix_chain(request)?;
    run_chain(engine, rules, &request.stem, &chain)
}

/// A stem's full declension: every case in singular and plural, first
/// variant of multi-form cases, no euphonic increment.
pub struct ParadigmTable {
    pub stem: Word,
    /// One row per case, in conventional case order.
    pub rows: Vec<ParadigmRow>,
}

pub struct ParadigmRow {
    pub case: SuffixCategory,
    pub singular: Word,
    pub plural: Word,
}

/// Build the paradigm with the rule engine.
pub fn paradigm(rules: &SandhiEngine, stem: &Word) -> Result<ParadigmTable, CliError> {
    let mut rows = Vec::with_capacity(SuffixCategory::CASES.len());
    for case in SuffixCategory::CASES {
        let mut cells = [None, None];
        for (cell, plural) in cells.iter_mut().zip([false, true]) {
            let request = InflectionRequest {
                stem: stem.clone(),
                plural,
                euphonic: None,
                case,
                variant_index: 0,
            };
            let (surface, _) = inflect(&Engine::Oracle, rules, &request)?;
            *cell = Some(surface);
        }
        let [singular, plural] = cells;
        rows.push(ParadigmRow {
            case,
            singular: singular.expect("cell filled above"),
            plural: plural.expect("cell filled above"),
        });
    }
    Ok(ParadigmTable {
        stem: stem.clone(),
        rows,
    })
}

impl ParadigmTable {
    /// Aligned text table: a header row, then one row per case.
    pub fn render(&self) -> String {
        let mut case_width = "case".len();
        let mut singular_width = "singular".len();
        for row in &self.rows {
            case_width = case_width.max(row.case.name().len());
            singular_width = singular_width.max(row.singular.to_string().len());
        }
        let mut out = format!(
            "{:<case_width$}  {:<singular_width$}  plural\n",
            "case", "singular"
        );
        for row in &self.rows {
            out.push_str(&format!(
                "{:<case_width$}  {:<singular_width$}  {}\n",
                row.case.name(),
                row.singular.to_string(),
                row.plural
            ));
        }
        out
    }
}
