//! Fixed-arity nominal feature vectors over stem/suffix junction windows.
//!
//! Each labeled junction becomes one row: the last `stem_window` phonemes of
//! the stem (left-padded with the blank symbol `X`, truncated from the left
//! so the boundary-adjacent phonemes survive), then the first five phonemes
//! of the suffix (right-padded with `X`, truncated from the right), then the
//! class id. Two context widths are supported: model I keeps ten stem
//! phonemes, model II keeps five.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::phonology::{Phoneme, Word};
use crate::sandhi::{Junction, SandhiClass};

/// One nominal attribute value: a phoneme or the blank `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// The padding blank, rendered `X`.
    Pad,
    Ph(Phoneme),
}

impl Symbol {
    /// Number of distinct symbols (the blank plus thirty phonemes).
    pub const COUNT: usize = Phoneme::ALL.len() + 1;

    /// Dense id: `X` is 0, phonemes follow in inventory order.
    pub fn id(self) -> usize {
        match self {
            Symbol::Pad => 0,
            Symbol::Ph(p) => p.index() + 1,
        }
    }

    pub fn from_id(id: usize) -> Option<Symbol> {
        match id {
            0 => Some(Symbol::Pad),
            _ => Phoneme::ALL.get(id - 1).map(|&p| Symbol::Ph(p)),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Symbol::Pad => "X",
            Symbol::Ph(p) => p.symbol(),
        }
    }

    /// Every symbol, in id order.
    pub fn all() -> impl Iterator<Item = Symbol> {
        (0..Symbol::COUNT).map(|id| Symbol::from_id(id).expect("id in range"))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Symbol {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "X" {
            return Ok(Symbol::Pad);
        }
        Phoneme::from_symbol(s)
            .map(Symbol::Ph)
            .ok_or_else(|| format!("unknown attribute symbol '{s}'"))
    }
}

/// How much stem context a feature vector keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContextModel {
    /// Ten stem phonemes plus five suffix phonemes (arity 15).
    I,
    /// Five stem phonemes plus five suffix phonemes (arity 10).
    II,
}

impl ContextModel {
    pub fn stem_window(self) -> usize {
        match self {
            ContextModel::I => 10,
            ContextModel::II => 5,
        }
    }

    pub fn suffix_window(self) -> usize {
        5
    }

    pub fn arity(self) -> usize {
        self.stem_window() + self.suffix_window()
    }

    pub fn name(self) -> &'static str {
        match self {
            ContextModel::I => "I",
            ContextModel::II => "II",
        }
    }

    /// The model with the given attribute count, if any (15 or 10).
    pub fn from_arity(arity: usize) -> Option<ContextModel> {
        match arity {
            15 => Some(ContextModel::I),
            10 => Some(ContextModel::II),
            _ => None,
        }
    }

    /// Attribute names: `s1..sN` for stem slots, `x1..x5` for suffix slots.
    pub fn attribute_names(self) -> Vec<String> {
        let mut names: Vec<String> = (1..=self.stem_window()).map(|i| format!("s{i}")).collect();
        names.extend((1..=self.suffix_window()).map(|i| format!("x{i}")));
        names
    }

    /// The dataset header line: attribute names then `class`.
    pub fn header(self) -> String {
        let mut parts = self.attribute_names();
        parts.push("class".into());
        parts.join(",")
    }

    fn from_header(header: &str) -> Option<ContextModel> {
        [ContextModel::I, ContextModel::II]
            .into_iter()
            .find(|m| m.header() == header)
    }
}

impl fmt::Display for ContextModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ContextModel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" => Ok(ContextModel::I),
            "II" => Ok(ContextModel::II),
            other => Err(format!("unknown context model '{other}' (expected I or II)")),
        }
    }
}

/// One labeled instance: attribute values plus the class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeatureVector {
    pub values: Vec<Symbol>,
    pub class: SandhiClass,
}

/// Extract the attribute values for a junction window, without a label.
pub fn window(stem: &Word, suffix: &Word, model: ContextModel) -> Vec<Symbol> {
    let mut values = Vec::with_capacity(model.arity());
    let stem_ph = stem.phonemes();
    let keep = stem_ph.len().min(model.stem_window());
    values.extend(std::iter::repeat_n(Symbol::Pad, model.stem_window() - keep));
    values.extend(stem_ph[stem_ph.len() - keep..].iter().map(|&p| Symbol::Ph(p)));
    let suffix_ph = suffix.phonemes();
    let keep = suffix_ph.len().min(model.suffix_window());
    values.extend(suffix_ph[..keep].iter().map(|&p| Symbol::Ph(p)));
    values.extend(std::iter::repeat_n(Symbol::Pad, model.suffix_window() - keep));
    values
}

/// Extract one labeled instance.
pub fn extract(stem: &Word, suffix: &Word, class: SandhiClass, model: ContextModel) -> FeatureVector {
    FeatureVector {
        values: window(stem, suffix, model),
        class,
    }
}

/// Errors raised while reading a dataset from CSV text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatasetError {
    #[error("unrecognized dataset header '{found}'")]
    Header { found: String },
    #[error("dataset row {line}: {detail}")]
    Row { line: usize, detail: String },
}

/// A labeled dataset with a fixed context model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    pub model: ContextModel,
    pub rows: Vec<FeatureVector>,
}

impl Dataset {
    pub fn new(model: ContextModel) -> Dataset {
        Dataset {
            model,
            rows: Vec::new(),
        }
    }

    /// Featurize every junction under one context model.
    pub fn from_junctions(junctions: &[Junction], model: ContextModel) -> Dataset {
        let rows = junctions
            .iter()
            .map(|j| {
                let form = j
                    .suffix
                    .form
                    .as_ref()
                    .expect("junctions always carry a non-null suffix");
                extract(&j.stem, form, j.class, model)
            })
            .collect();
        Dataset { model, rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Per-attribute observed symbol sets, each including the blank `X`,
    /// in symbol-id order.
    pub fn attribute_domains(&self) -> Vec<Vec<Symbol>> {
        let arity = self.model.arity();
        let mut seen = vec![[false; Symbol::COUNT]; arity];
        for column in seen.iter_mut() {
            column[Symbol::Pad.id()] = true;
        }
        for row in &self.rows {
            for (column, &value) in seen.iter_mut().zip(&row.values) {
                column[value.id()] = true;
            }
        }
        seen.into_iter()
            .map(|column| {
                column
                    .iter()
                    .enumerate()
                    .filter(|(_, &present)| present)
                    .map(|(id, _)| Symbol::from_id(id).expect("id in range"))
                    .collect()
            })
            .collect()
    }

    /// Instances per class, indexed by [`SandhiClass::slot`].
    pub fn class_counts(&self) -> [usize; SandhiClass::COUNT] {
        let mut counts = [0; SandhiClass::COUNT];
        for row in &self.rows {
            counts[row.class.slot()] += 1;
        }
        counts
    }

    /// Serialize as CSV: header line, then one `sym,...,sym,class_id` row
    /// per instance. Ends with a newline.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.model.header());
        out.push('\n');
        for row in &self.rows {
            for value in &row.values {
                out.push_str(value.as_str());
                out.push(',');
            }
            out.push_str(&row.class.id().to_string());
            out.push('\n');
        }
        out
    }

    /// Parse CSV text produced by [`Dataset::to_csv`].
    pub fn from_csv(text: &str) -> Result<Dataset, DatasetError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(DatasetError::Header {
            found: String::new(),
        })?;
        let header = header.trim_end_matches('\r');
        let model = ContextModel::from_header(header).ok_or_else(|| DatasetError::Header {
            found: header.to_string(),
        })?;
        let arity = model.arity();
        let mut rows = Vec::new();
        for (index, raw) in lines {
            let line = index + 1;
            let raw = raw.trim_end_matches('\r');
            if raw.is_empty() {
                continue;
            }
            let fields: Vec<&str> = raw.split(',').collect();
            if fields.len() != arity + 1 {
                return Err(DatasetError::Row {
                    line,
                    detail: format!("expected {} fields, found {}", arity + 1, fields.len()),
                });
            }
            let mut values = Vec::with_capacity(arity);
            for field in &fields[..arity] {
                values.push(field.parse().map_err(|e: String| DatasetError::Row {
                    line,
                    detail: e,
                })?);
            }
            let class_id: u8 = fields[arity].parse().map_err(|_| DatasetError::Row {
                line,
                detail: format!("class id '{}' is not an integer", fields[arity]),
            })?;
            let class = SandhiClass::from_id(class_id).ok_or_else(|| DatasetError::Row {
                line,
                detail: format!("class id {class_id} out of range 1..=11"),
            })?;
            rows.push(FeatureVector { values, class });
        }
        Ok(Dataset { model, rows })
    }
}
