//! Deterministic sandhi rule engine for noun declension.
//!
//! A noun form is built as `stem + [plural] + [euphonic increment] + [case]`,
//! and every junction between a stem and a suffix is resolved by one of
//! eleven morphophonemic patterns ([`SandhiClass`]). The engine both
//! generates correct surface forms and serves as a labeling oracle for
//! training data: [`SandhiEngine::classify`] decides the pattern from the
//! phonological shape of the junction, [`SandhiEngine::apply`] performs the
//! string transformation, and [`SandhiEngine::synthesize`] labels whole
//! stem-by-suffix grids.
//!
//! Classification is a pure function of the final three phonemes of the
//! stem, the stem's syllable (vowel) count, and the suffix onset — except
//! where an explicit exception lexicon overrides the final-`u` length call
//! for listed stems.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::phonology::{Phoneme, PhonologyError, VowelLength, Word};

/// Errors raised by junction classification and application.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SandhiError {
    /// The nominative suffix is null; there is no junction to classify.
    #[error("the nominative suffix is null and forms no junction")]
    NominativeJunction,
    /// No rule covers the junction. Cannot happen for well-formed stems
    /// with the standard suffix inventory; treat as a bug signal.
    #[error("no sandhi rule covers stem '{stem}' with suffix '{suffix}'")]
    UnclassifiableStem { stem: String, suffix: String },
    /// The caller asked to apply a class other than the one the rules select.
    #[error("class {given} does not match the junction, which takes class {expected}")]
    ClassMismatch {
        expected: SandhiClass,
        given: SandhiClass,
    },
    /// A malformed exception-lexicon line.
    #[error("exception lexicon line {line}: {detail}")]
    LexiconSyntax { line: usize, detail: String },
    /// An internal invariant failed; always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Phonology(#[from] PhonologyError),
}

/// The eleven junction patterns. Discriminants are the class ids used in
/// datasets and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum SandhiClass {
    /// Glide `y` inserted after a front-vowel-final stem: `paTi + ai = paTiyai`.
    YInsertion = 1,
    /// Glide `v` inserted after a back-vowel-final stem: `pU + ai = pUvai`.
    VInsertion = 2,
    /// Final consonant doubled on a short-voweled CVC stem: `kal + ai = kallai`.
    ConsonantDoubling = 3,
    /// Final `m` replaced by `tt`: `maram + ai = marattai`.
    MToTt = 4,
    /// Overshort final `u` deleted: `katavu + ai = katavai`.
    UDeletion = 5,
    /// Overshort final `u` deleted and the preceding plosive doubled:
    /// `kATu + ai = kATTai`.
    UDeletionDoubling = 6,
    /// Plain concatenation: `kAl + ai = kAlai`, `kaN + kaL = kaNkaL`.
    NoChange = 7,
    /// Before the plural, final `m` becomes `ng`: `maram + kaL = marangkaL`.
    PluralMToNg = 8,
    /// Before the plural, `k` doubles after a back vowel: `pU + kaL = pUkkaL`.
    PluralKDoubling = 9,
    /// Before the plural, final `l` becomes `R`: `kal + kaL = kaRkaL`.
    PluralLToR = 10,
    /// Before the plural, final `L` becomes `T`: `tAL + kaL = tATkaL`.
    PluralLlToT = 11,
}

impl SandhiClass {
    /// Every class, in id order.
    pub const ALL: [SandhiClass; 11] = [
        SandhiClass::YInsertion,
        SandhiClass::VInsertion,
        SandhiClass::ConsonantDoubling,
        SandhiClass::MToTt,
        SandhiClass::UDeletion,
        SandhiClass::UDeletionDoubling,
        SandhiClass::NoChange,
        SandhiClass::PluralMToNg,
        SandhiClass::PluralKDoubling,
        SandhiClass::PluralLToR,
        SandhiClass::PluralLlToT,
    ];

    /// Number of classes; class ids run `1..=COUNT`.
    pub const COUNT: usize = 11;

    /// The numeric id (1..=11).
    pub fn id(self) -> u8 {
        self as u8
    }

    /// Zero-based position, for indexing count and distribution arrays.
    pub fn slot(self) -> usize {
        self as usize - 1
    }

    pub fn from_id(id: u8) -> Option<SandhiClass> {
        SandhiClass::ALL.get(id.checked_sub(1)? as usize).copied()
    }

    /// A short human-readable label.
    pub fn label(self) -> &'static str {
        match self {
            SandhiClass::YInsertion => "y-insertion",
            SandhiClass::VInsertion => "v-insertion",
            SandhiClass::ConsonantDoubling => "consonant-doubling",
            SandhiClass::MToTt => "m-to-tt",
            SandhiClass::UDeletion => "u-deletion",
            SandhiClass::UDeletionDoubling => "u-deletion-doubling",
            SandhiClass::NoChange => "no-change",
            SandhiClass::PluralMToNg => "plural-m-to-ng",
            SandhiClass::PluralKDoubling => "plural-k-doubling",
            SandhiClass::PluralLToR => "plural-l-to-R",
            SandhiClass::PluralLlToT => "plural-L-to-T",
        }
    }
}

impl fmt::Display for SandhiClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// Morphosyntactic slot a suffix fills.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuffixCategory {
    Nominative,
    Accusative,
    Instrumental,
    Dative,
    Locative,
    Ablative,
    Sociative,
    Genitive,
    Plural,
    Euphonic,
}

impl SuffixCategory {
    /// The eight case categories, in conventional order.
    pub const CASES: [SuffixCategory; 8] = [
        SuffixCategory::Nominative,
        SuffixCategory::Accusative,
        SuffixCategory::Instrumental,
        SuffixCategory::Dative,
        SuffixCategory::Locative,
        SuffixCategory::Ablative,
        SuffixCategory::Sociative,
        SuffixCategory::Genitive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuffixCategory::Nominative => "nominative",
            SuffixCategory::Accusative => "accusative",
            SuffixCategory::Instrumental => "instrumental",
            SuffixCategory::Dative => "dative",
            SuffixCategory::Locative => "locative",
            SuffixCategory::Ablative => "ablative",
            SuffixCategory::Sociative => "sociative",
            SuffixCategory::Genitive => "genitive",
            SuffixCategory::Plural => "plural",
            SuffixCategory::Euphonic => "euphonic",
        }
    }
}

impl fmt::Display for SuffixCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuffixCategory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            SuffixCategory::Nominative,
            SuffixCategory::Accusative,
            SuffixCategory::Instrumental,
            SuffixCategory::Dative,
            SuffixCategory::Locative,
            SuffixCategory::Ablative,
            SuffixCategory::Sociative,
            SuffixCategory::Genitive,
            SuffixCategory::Plural,
            SuffixCategory::Euphonic,
        ]
        .into_iter()
        .find(|c| c.name() == s)
        .ok_or_else(|| format!("unknown suffix category '{s}'"))
    }
}

/// One suffix of the inventory: its slot, its romanized form (null for the
/// nominative), and which variant of the category it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixEntry {
    pub category: SuffixCategory,
    pub form: Option<Word>,
    pub variant_index: usize,
}

impl SuffixEntry {
    fn new(category: SuffixCategory, form: Option<&str>, variant_index: usize) -> SuffixEntry {
        SuffixEntry {
            category,
            form: form.map(|f| f.parse().expect("inventory suffix forms tokenize")),
            variant_index,
        }
    }
}

/// The standard suffix inventory: the eight cases (nominative null;
/// sociative and genitive with two variants each), the plural `kaL`, and
/// the euphonic increments `in` / `an`.
pub fn standard_suffixes() -> Vec<SuffixEntry> {
    use SuffixCategory::*;
    vec![
        SuffixEntry::new(Nominative, None, 0),
        SuffixEntry::new(Accusative, Some("ai"), 0),
        SuffixEntry::new(Instrumental, Some("Al"), 0),
        SuffixEntry::new(Dative, Some("ukku"), 0),
        SuffixEntry::new(Locative, Some("il"), 0),
        SuffixEntry::new(Ablative, Some("iliruntu"), 0),
        SuffixEntry::new(Sociative, Some("uTan"), 0),
        SuffixEntry::new(Sociative, Some("oTu"), 1),
        SuffixEntry::new(Genitive, Some("in"), 0),
        SuffixEntry::new(Genitive, Some("uTaiya"), 1),
        SuffixEntry::new(Plural, Some("kaL"), 0),
        SuffixEntry::new(Euphonic, Some("in"), 0),
        SuffixEntry::new(Euphonic, Some("an"), 1),
    ]
}

/// Look up one suffix of the standard inventory.
pub fn standard_suffix(category: SuffixCategory, variant_index: usize) -> Option<SuffixEntry> {
    standard_suffixes()
        .into_iter()
        .find(|s| s.category == category && s.variant_index == variant_index)
}

/// The nine forms used for dataset synthesis: the first variant of every
/// non-nominative category.
pub fn default_synthesis_suffixes() -> Vec<SuffixEntry> {
    standard_suffixes()
        .into_iter()
        .filter(|s| s.form.is_some() && s.variant_index == 0)
        .collect()
}

/// A classified junction together with its generated surface form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Junction {
    pub stem: Word,
    pub suffix: SuffixEntry,
    pub class: SandhiClass,
    pub surface: Word,
}

/// Length call for a stem-final `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinalU {
    Full,
    Overshort,
}

/// Per-stem overrides of the final-`u` length call, for lexical exceptions
/// the shape test gets wrong.
///
/// File format: one romanized stem per line, whitespace, then `full-u` or
/// `overshort-u`. Blank lines and `#` comments are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExceptionLexicon {
    entries: BTreeMap<String, FinalU>,
}

impl ExceptionLexicon {
    pub fn parse(text: &str) -> Result<ExceptionLexicon, SandhiError> {
        let mut entries = BTreeMap::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut parts = content.split_whitespace();
            let stem = parts.next().expect("non-empty line has a first token");
            let call = parts
                .next()
                .ok_or_else(|| SandhiError::LexiconSyntax {
                    line,
                    detail: format!("missing annotation after '{stem}'"),
                })?;
            if parts.next().is_some() {
                return Err(SandhiError::LexiconSyntax {
                    line,
                    detail: "expected exactly one stem and one annotation".into(),
                });
            }
            let status = match call {
                "full-u" => FinalU::Full,
                "overshort-u" => FinalU::Overshort,
                other => {
                    return Err(SandhiError::LexiconSyntax {
                        line,
                        detail: format!("unknown annotation '{other}' (expected full-u or overshort-u)"),
                    })
                }
            };
            // Reject stems that do not tokenize, with the offending line.
            Word::from_str(stem).map_err(|e| SandhiError::LexiconSyntax {
                line,
                detail: e.to_string(),
            })?;
            entries.insert(stem.to_string(), status);
        }
        Ok(ExceptionLexicon { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn lookup(&self, stem: &Word) -> Option<FinalU> {
        if self.entries.is_empty() {
            return None;
        }
        self.entries.get(&stem.to_string()).copied()
    }
}

/// Outcome of labeling a stem-by-suffix grid.
#[derive(Debug, Clone)]
pub struct SynthesisOutcome {
    pub junctions: Vec<Junction>,
    /// Instances per class, indexed by [`SandhiClass::slot`].
    pub class_counts: [usize; SandhiClass::COUNT],
    /// Stems that raised [`SandhiError::UnclassifiableStem`], with the error.
    pub skipped: Vec<(Word, SandhiError)>,
}

/// The rule engine. Carries the exception lexicon, loaded once at
/// construction.
#[derive(Debug, Clone, Default)]
pub struct SandhiEngine {
    lexicon: ExceptionLexicon,
}

impl SandhiEngine {
    /// An engine with no lexical exceptions.
    pub fn new() -> SandhiEngine {
        SandhiEngine::default()
    }

    pub fn with_exceptions(lexicon: ExceptionLexicon) -> SandhiEngine {
        SandhiEngine { lexicon }
    }

    /// Decide the junction class for a stem and a suffix of the inventory.
    pub fn classify(&self, stem: &Word, suffix: &SuffixEntry) -> Result<SandhiClass, SandhiError> {
        let form = suffix.form.as_ref().ok_or(SandhiError::NominativeJunction)?;
        self.classify_form(stem, form)
    }

    /// Decide the junction class for a stem and a bare suffix form.
    ///
    /// The decision is phonological: the plural `kaL` selects the plural
    /// branch, a vowel onset selects the glide/deletion/doubling branch,
    /// and any other consonant onset has no rule.
    pub fn classify_form(&self, stem: &Word, form: &Word) -> Result<SandhiClass, SandhiError> {
        use Phoneme::*;
        if is_plural_kal(form) {
            return Ok(match stem.last() {
                M => SandhiClass::PluralMToNg,
                L => SandhiClass::PluralLToR,
                RetroL => SandhiClass::PluralLlToT,
                last if last.is_back_vowel() && !self.overshort_final_u(stem) => {
                    SandhiClass::PluralKDoubling
                }
                _ => SandhiClass::NoChange,
            });
        }
        let onset = form.phonemes()[0];
        if !onset.is_vowel() {
            return Err(SandhiError::UnclassifiableStem {
                stem: stem.to_string(),
                suffix: form.to_string(),
            });
        }
        let last = stem.last();
        Ok(if last == M {
            SandhiClass::MToTt
        } else if self.overshort_final_u(stem) {
            if doubling_context(stem) {
                SandhiClass::UDeletionDoubling
            } else {
                SandhiClass::UDeletion
            }
        } else if last.is_vowel() {
            if last.is_front_vowel() {
                SandhiClass::YInsertion
            } else {
                SandhiClass::VInsertion
            }
        } else if is_short_cvc(stem) {
            SandhiClass::ConsonantDoubling
        } else {
            SandhiClass::NoChange
        })
    }

    /// Apply a junction class, verifying it is the one the rules select.
    pub fn apply(
        &self,
        stem: &Word,
        suffix: &SuffixEntry,
        class: SandhiClass,
    ) -> Result<Word, SandhiError> {
        let expected = self.classify(stem, suffix)?;
        if expected != class {
            return Err(SandhiError::ClassMismatch {
                expected,
                given: class,
            });
        }
        let form = suffix
            .form
            .as_ref()
            .expect("classify rejected the null suffix");
        transform(stem, form, class)
    }

    /// Classify and apply in one step.
    pub fn join(&self, stem: &Word, suffix: &SuffixEntry) -> Result<Junction, SandhiError> {
        let form = suffix.form.as_ref().ok_or(SandhiError::NominativeJunction)?;
        let class = self.classify_form(stem, form)?;
        let surface = transform(stem, form, class)?;
        Ok(Junction {
            stem: stem.clone(),
            suffix: suffix.clone(),
            class,
            surface,
        })
    }

    /// Classify a junction given as a bare suffix form and build its
    /// surface.
    pub fn join_form(&self, stem: &Word, form: &Word) -> Result<(SandhiClass, Word), SandhiError> {
        let class = self.classify_form(stem, form)?;
        let surface = transform(stem, form, class)?;
        Ok((class, surface))
    }

    /// Label every (stem, non-nominative suffix) pair. Null suffixes are
    /// skipped silently; stems that raise [`SandhiError::UnclassifiableStem`]
    /// are skipped and reported in the outcome.
    pub fn synthesize(&self, stems: &[Word], suffixes: &[SuffixEntry]) -> SynthesisOutcome {
        let mut outcome = SynthesisOutcome {
            junctions: Vec::with_capacity(stems.len() * suffixes.len()),
            class_counts: [0; SandhiClass::COUNT],
            skipped: Vec::new(),
        };
        for stem in stems {
            for suffix in suffixes {
                if suffix.form.is_none() {
                    continue;
                }
                match self.join(stem, suffix) {
                    Ok(junction) => {
                        outcome.class_counts[junction.class.slot()] += 1;
                        outcome.junctions.push(junction);
                    }
                    Err(err @ SandhiError::UnclassifiableStem { .. }) => {
                        outcome.skipped.push((stem.clone(), err));
                    }
                    Err(err) => {
                        // Only unclassifiable junctions are skippable; any
                        // other failure here is a bug in the engine itself.
                        outcome.skipped.push((stem.clone(), err));
                    }
                }
            }
        }
        outcome
    }

    /// True when the stem ends in an overshort `u`: a final short `u`
    /// preceded by a consonant, in a stem that is not of the shape
    /// `(C)V̆Cu` (where the `u` carries full weight), unless the exception
    /// lexicon overrides the call.
    fn overshort_final_u(&self, stem: &Word) -> bool {
        if stem.last() != Phoneme::U {
            return false;
        }
        let preceded_by_consonant = stem.from_end(1).is_some_and(|p| p.is_consonant());
        if !preceded_by_consonant {
            return false;
        }
        if let Some(call) = self.lexicon.lookup(stem) {
            return call == FinalU::Overshort;
        }
        // A sole-vowel `u` always carries full weight, and `(C)V̆Cu` stems
        // keep a full `u`; everything else reduces.
        stem.vowel_count() >= 2 && !has_full_u_shape(stem)
    }
}

/// True for the exact plural suffix form `kaL`.
fn is_plural_kal(form: &Word) -> bool {
    form.phonemes() == [Phoneme::K, Phoneme::A, Phoneme::RetroL]
}

/// `(C)V̆Cu`: a short vowel, one consonant, then `u` — with the leading
/// consonant optional. Expressed over the final three phonemes plus the
/// vowel count so that classification stays a function of those features.
fn has_full_u_shape(stem: &Word) -> bool {
    stem.last() == Phoneme::U
        && stem.vowel_count() == 2
        && stem.from_end(1).is_some_and(|p| p.is_consonant())
        && stem.from_end(2).is_some_and(|p| p.is_short_vowel())
}

/// Context in which deleting an overshort `u` also doubles the preceding
/// plosive: the plosive must be single (not already doubled) and must
/// follow a long vowel, a diphthong, or one of `r zh y`.
fn doubling_context(stem: &Word) -> bool {
    use Phoneme::*;
    let Some(plosive) = stem.from_end(1) else {
        return false;
    };
    if !plosive.is_plosive().unwrap_or(false) {
        return false;
    }
    let Some(context) = stem.from_end(2) else {
        return false;
    };
    if context == plosive {
        return false;
    }
    let long_nucleus = matches!(
        context.vowel_class(),
        Ok(class) if class.length != VowelLength::Short
    );
    long_nucleus || matches!(context, R | Zh | Y)
}

/// A consonant-final stem whose single nucleus is short: `kal`, `kaN`,
/// `vil`. Expressed over the final phonemes plus the vowel count.
fn is_short_cvc(stem: &Word) -> bool {
    stem.vowel_count() == 1
        && stem.last().is_consonant()
        && stem.from_end(1).is_some_and(|p| p.is_short_vowel())
}

/// Perform the surface transformation for an already-decided class.
fn transform(stem: &Word, form: &Word, class: SandhiClass) -> Result<Word, SandhiError> {
    use Phoneme::*;
    let stem_ph = stem.phonemes();
    let trunk = &stem_ph[..stem_ph.len() - 1];
    let mut surface: Vec<Phoneme> = Vec::with_capacity(stem.len() + form.len() + 2);
    match class {
        SandhiClass::YInsertion => {
            surface.extend_from_slice(stem_ph);
            surface.push(Y);
        }
        SandhiClass::VInsertion => {
            surface.extend_from_slice(stem_ph);
            surface.push(V);
        }
        SandhiClass::ConsonantDoubling => {
            surface.extend_from_slice(stem_ph);
            surface.push(stem.last());
        }
        SandhiClass::MToTt => {
            surface.extend_from_slice(trunk);
            surface.push(T);
            surface.push(T);
        }
        SandhiClass::UDeletion => {
            surface.extend_from_slice(trunk);
        }
        SandhiClass::UDeletionDoubling => {
            surface.extend_from_slice(trunk);
            let plosive = stem.from_end(1).ok_or_else(|| {
                SandhiError::Invariant("u-deletion-doubling on a one-phoneme stem".into())
            })?;
            surface.push(plosive);
        }
        SandhiClass::NoChange => {
            surface.extend_from_slice(stem_ph);
        }
        SandhiClass::PluralMToNg => {
            surface.extend_from_slice(trunk);
            surface.push(Ng);
        }
        SandhiClass::PluralKDoubling => {
            surface.extend_from_slice(stem_ph);
            surface.push(K);
        }
        SandhiClass::PluralLToR => {
            surface.extend_from_slice(trunk);
            surface.push(AlveolarR);
        }
        SandhiClass::PluralLlToT => {
            surface.extend_from_slice(trunk);
            surface.push(RetroT);
        }
    }
    surface.extend_from_slice(form.phonemes());
    Word::from_phonemes(surface)
        .map_err(|e| SandhiError::Invariant(format!("surface does not round-trip: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine() -> SandhiEngine {
        SandhiEngine::new()
    }

    fn w(s: &str) -> Word {
        s.parse().expect("test word tokenizes")
    }

    fn accusative() -> SuffixEntry {
        standard_suffix(SuffixCategory::Accusative, 0).unwrap()
    }

    fn plural() -> SuffixEntry {
        standard_suffix(SuffixCategory::Plural, 0).unwrap()
    }

    #[test]
    fn accusative_exemplars_cover_classes_one_through_seven() {
        let cases = [
            ("paTi", 1, "paTiyai"),
            ("pU", 2, "pUvai"),
            ("kal", 3, "kallai"),
            ("maram", 4, "marattai"),
            ("katavu", 5, "katavai"),
            ("kATu", 6, "kATTai"),
            ("kAl", 7, "kAlai"),
        ];
        for (stem, id, surface) in cases {
            let junction = engine().join(&w(stem), &accusative()).unwrap();
            assert_eq!(junction.class.id(), id, "class for {stem} + ai");
            assert_eq!(
                junction.surface.to_string(),
                surface,
                "surface for {stem} + ai"
            );
        }
    }

    #[test]
    fn plural_exemplars_cover_classes_seven_through_eleven() {
        let cases = [
            ("paTi", 7, "paTikaL"),
            ("maram", 8, "marangkaL"),
            ("pU", 9, "pUkkaL"),
            ("kal", 10, "kaRkaL"),
            ("tAL", 11, "tATkaL"),
        ];
        for (stem, id, surface) in cases {
            let junction = engine().join(&w(stem), &plural()).unwrap();
            assert_eq!(junction.class.id(), id, "class for {stem} + kaL");
            assert_eq!(
                junction.surface.to_string(),
                surface,
                "surface for {stem} + kaL"
            );
        }
    }

    #[test]
    fn locative_and_dative_junctions() {
        let locative = standard_suffix(SuffixCategory::Locative, 0).unwrap();
        let dative = standard_suffix(SuffixCategory::Dative, 0).unwrap();
        let join = |stem: &str, suffix: &SuffixEntry| {
            let j = engine().join(&w(stem), suffix).unwrap();
            (j.class.id(), j.surface.to_string())
        };
        assert_eq!(join("katavu", &locative), (5, "katavil".into()));
        assert_eq!(join("kaN", &locative), (3, "kaNNil".into()));
        assert_eq!(join("pU", &dative), (2, "pUvukku".into()));
        assert_eq!(join("kATu", &dative), (6, "kATTukku".into()));
        assert_eq!(join("maram", &dative), (4, "marattukku".into()));
        assert_eq!(join("paTi", &dative), (1, "paTiyukku".into()));
    }

    #[test]
    fn join_form_matches_join_on_the_inventory() {
        let engine = engine();
        for suffix in standard_suffixes() {
            let Some(form) = suffix.form.as_ref() else {
                continue;
            };
            for stem in ["paTi", "pU", "kal", "maram", "katavu", "kATu", "kAl"] {
                let junction = engine.join(&w(stem), &suffix).unwrap();
                let (class, surface) = engine.join_form(&w(stem), form).unwrap();
                assert_eq!(class, junction.class);
                assert_eq!(surface, junction.surface);
            }
        }
    }

    #[test]
    fn overshort_u_edge_cases() {
        let acc = accusative();
        let join = |stem: &str| {
            let j = engine().join(&w(stem), &acc).unwrap();
            (j.class.id(), j.surface.to_string())
        };
        // (C)V̆Cu keeps a full u, so the glide rule fires.
        assert_eq!(join("pacu"), (2, "pacuvai".into()));
        assert_eq!(join("teru"), (2, "teruvai".into()));
        // Longer stems reduce the final u.
        assert_eq!(join("maruntu"), (5, "maruntai".into()));
        assert_eq!(join("miLaku"), (5, "miLakai".into()));
        // A doubled plosive blocks further doubling.
        assert_eq!(join("pATTu"), (5, "pATTai".into()));
        assert_eq!(join("uppu"), (5, "uppai".into()));
        // Long nucleus before a single plosive doubles it.
        assert_eq!(join("vITu"), (6, "vITTai".into()));
        assert_eq!(join("ARu"), (6, "ARRai".into()));
        assert_eq!(join("cORu"), (6, "cORRai".into()));
        // A sole-vowel u carries full weight.
        assert_eq!(join("pu"), (2, "puvai".into()));
    }

    #[test]
    fn plural_edge_cases() {
        let kal = plural();
        let join = |stem: &str| {
            let j = engine().join(&w(stem), &kal).unwrap();
            (j.class.id(), j.surface.to_string())
        };
        assert_eq!(join("kaN"), (7, "kaNkaL".into()));
        assert_eq!(join("katavu"), (7, "katavukaL".into()));
        assert_eq!(join("pacu"), (9, "pacukkaL".into()));
        assert_eq!(join("vilA"), (9, "vilAkkaL".into()));
        assert_eq!(join("vil"), (10, "viRkaL".into()));
        assert_eq!(join("kAl"), (10, "kARkaL".into()));
    }

    #[test]
    fn glide_choice_is_exhaustive_over_the_vowel_inventory() {
        let acc = accusative();
        for vowel in Phoneme::ALL.into_iter().filter(|p| p.is_vowel()) {
            for stem in [
                Word::from_phonemes(vec![Phoneme::K, vowel]).unwrap(),
                Word::from_phonemes(vec![Phoneme::M, Phoneme::A, Phoneme::R, vowel]).unwrap(),
            ] {
                let class = engine().classify(&stem, &acc).unwrap();
                let expected = if vowel.is_front_vowel() {
                    SandhiClass::YInsertion
                } else {
                    SandhiClass::VInsertion
                };
                // `maru` is (C)V̆Cu and `ku` has a sole vowel, so neither
                // reduces; every vowel-final stem here takes a glide.
                assert_eq!(class, expected, "stem {stem} + ai");
            }
        }
    }

    #[test]
    fn classification_ignores_material_before_the_window() {
        let acc = accusative();
        for stem in ["paTi", "maram", "katavu", "kATu", "maruntu", "kaTal"] {
            let base = w(stem);
            let mut extended = vec![Phoneme::P, Phoneme::A, Phoneme::V];
            extended.extend_from_slice(base.phonemes());
            let extended = Word::from_phonemes(extended).unwrap();
            assert_eq!(
                engine().classify(&base, &acc).unwrap(),
                engine().classify(&extended, &acc).unwrap(),
                "prefix changed the class of {stem}"
            );
        }
    }

    #[test]
    fn apply_rejects_the_wrong_class() {
        let err = engine()
            .apply(&w("paTi"), &accusative(), SandhiClass::VInsertion)
            .unwrap_err();
        assert_eq!(
            err,
            SandhiError::ClassMismatch {
                expected: SandhiClass::YInsertion,
                given: SandhiClass::VInsertion,
            }
        );
    }

    #[test]
    fn apply_accepts_the_oracle_class() {
        let surface = engine()
            .apply(&w("maram"), &accusative(), SandhiClass::MToTt)
            .unwrap();
        assert_eq!(surface.to_string(), "marattai");
    }

    #[test]
    fn nominative_has_no_junction() {
        let nominative = standard_suffix(SuffixCategory::Nominative, 0).unwrap();
        assert_eq!(
            engine().classify(&w("maram"), &nominative),
            Err(SandhiError::NominativeJunction)
        );
    }

    #[test]
    fn consonant_initial_non_plural_suffix_is_unclassifiable() {
        let bogus = SuffixEntry {
            category: SuffixCategory::Locative,
            form: Some(w("man")),
            variant_index: 0,
        };
        assert!(matches!(
            engine().classify(&w("maram"), &bogus),
            Err(SandhiError::UnclassifiableStem { .. })
        ));
    }

    #[test]
    fn inventory_shape() {
        let suffixes = standard_suffixes();
        assert_eq!(suffixes.len(), 13);
        let nominative: Vec<_> = suffixes.iter().filter(|s| s.form.is_none()).collect();
        assert_eq!(nominative.len(), 1);
        assert_eq!(nominative[0].category, SuffixCategory::Nominative);
        for suffix in &suffixes {
            let Some(form) = &suffix.form else { continue };
            if suffix.category == SuffixCategory::Plural {
                assert_eq!(form.to_string(), "kaL");
            } else {
                assert!(
                    form.phonemes()[0].is_vowel(),
                    "{} form {} must be vowel-initial",
                    suffix.category,
                    form
                );
            }
        }
        let two_variant: Vec<_> = suffixes
            .iter()
            .filter(|s| s.variant_index == 1)
            .map(|s| s.category)
            .collect();
        assert_eq!(
            two_variant,
            [
                SuffixCategory::Sociative,
                SuffixCategory::Genitive,
                SuffixCategory::Euphonic
            ]
        );
    }

    #[test]
    fn default_synthesis_suffixes_are_the_nine_first_variants() {
        let nine = default_synthesis_suffixes();
        assert_eq!(nine.len(), 9);
        assert!(nine.iter().all(|s| s.form.is_some() && s.variant_index == 0));
    }

    #[test]
    fn synthesize_labels_one_junction_per_pair() {
        let outcome = engine().synthesize(&[w("maram")], &default_synthesis_suffixes());
        assert_eq!(outcome.junctions.len(), 9);
        assert!(outcome.skipped.is_empty());
        // maram takes m-to-tt with all eight vowel-initial suffixes and
        // m-to-ng with the plural.
        assert_eq!(outcome.class_counts[SandhiClass::MToTt.slot()], 8);
        assert_eq!(outcome.class_counts[SandhiClass::PluralMToNg.slot()], 1);
    }

    #[test]
    fn synthesize_skips_unclassifiable_pairs() {
        let bogus = SuffixEntry {
            category: SuffixCategory::Locative,
            form: Some(w("man")),
            variant_index: 0,
        };
        let outcome = engine().synthesize(&[w("maram"), w("pU")], &[bogus, accusative()]);
        assert_eq!(outcome.junctions.len(), 2);
        assert_eq!(outcome.skipped.len(), 2);
    }

    #[test]
    fn exception_lexicon_overrides_the_length_call() {
        let lexicon = ExceptionLexicon::parse(
            "# lexical exceptions\nkatavu full-u\nmaTu overshort-u # forced reduction\n",
        )
        .unwrap();
        assert_eq!(lexicon.len(), 2);
        let engine = SandhiEngine::with_exceptions(lexicon);
        let acc = accusative();
        // Forced full: the glide rule fires instead of deletion.
        let forced_full = engine.join(&w("katavu"), &acc).unwrap();
        assert_eq!(forced_full.class, SandhiClass::VInsertion);
        assert_eq!(forced_full.surface.to_string(), "katavuvai");
        // Forced overshort: deletion fires instead of the glide rule.
        let forced_short = engine.join(&w("maTu"), &acc).unwrap();
        assert_eq!(forced_short.class, SandhiClass::UDeletion);
        assert_eq!(forced_short.surface.to_string(), "maTai");
        // Unlisted stems keep the shape-test behavior.
        assert_eq!(
            engine.join(&w("pacu"), &acc).unwrap().class,
            SandhiClass::VInsertion
        );
    }

    #[test]
    fn exception_lexicon_rejects_malformed_lines() {
        assert!(matches!(
            ExceptionLexicon::parse("katavu"),
            Err(SandhiError::LexiconSyntax { line: 1, .. })
        ));
        assert!(matches!(
            ExceptionLexicon::parse("\nkatavu half-u"),
            Err(SandhiError::LexiconSyntax { line: 2, .. })
        ));
        assert!(matches!(
            ExceptionLexicon::parse("qatavu full-u"),
            Err(SandhiError::LexiconSyntax { line: 1, .. })
        ));
        assert!(matches!(
            ExceptionLexicon::parse("katavu full-u extra"),
            Err(SandhiError::LexiconSyntax { line: 1, .. })
        ));
    }

    #[test]
    fn no_change_plural_is_plain_concatenation() {
        let junction = engine().join(&w("kaN"), &plural()).unwrap();
        assert_eq!(junction.class, SandhiClass::NoChange);
        assert_eq!(
            junction.surface.to_string(),
            format!("{}{}", "kaN", "kaL")
        );
    }

    #[test]
    fn surfaces_never_have_adjacent_vowels() {
        let stems = [
            "paTi", "pU", "kal", "maram", "katavu", "kATu", "kAl", "tAL", "pacu", "maruntu",
            "vilA", "uppu", "Ur", "ilai",
        ];
        for stem in stems {
            for suffix in default_synthesis_suffixes() {
                let junction = engine().join(&w(stem), &suffix).unwrap();
                let adjacent = junction
                    .surface
                    .phonemes()
                    .windows(2)
                    .any(|pair| pair[0].is_vowel() && pair[1].is_vowel());
                assert!(
                    !adjacent,
                    "adjacent vowels in {} + {:?}",
                    stem, junction.suffix.category
                );
            }
        }
    }

    #[test]
    fn class_ids_round_trip() {
        for class in SandhiClass::ALL {
            assert_eq!(SandhiClass::from_id(class.id()), Some(class));
        }
        assert_eq!(SandhiClass::from_id(0), None);
        assert_eq!(SandhiClass::from_id(12), None);
    }
}
