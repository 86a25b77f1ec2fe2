//! Line-oriented text serialization for trained models.
//!
//! Layout: a header `sandhi-forge-model v1 <algorithm> <fingerprint> <seed>`,
//! optional `param <name> <value>` lines, the schema (`attrs <n>` then one
//! `attr <name> <symbols...>` line per attribute), a `model` line, the
//! algorithm-specific body, and a final `end`. All statistics are stored as
//! exact integer counts so a load/save round trip reproduces every
//! prediction bit for bit. Tree bodies are pre-order, one node per line,
//! children following their split in domain order; indentation is cosmetic.

use std::fmt::Write as _;

use thiserror::Error;

use crate::features::{ContextModel, Symbol};
use crate::sandhi::SandhiClass;

use super::bayes::{pair_index, single_index, Aode, NaiveBayes};
use super::tree::TreeNode;
use super::{default_candidate_count, Algorithm, ModelKind, Schema, TrainedModel};

const MAGIC: &str = "sandhi-forge-model";
const VERSION: &str = "v1";
const CLASSES: usize = SandhiClass::COUNT;

/// Errors raised while reading a model file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelIoError {
    #[error("model file line {line}: {detail}")]
    Format { line: usize, detail: String },
    #[error("unsupported model format version '{found}' (this build reads {VERSION})")]
    VersionMismatch { found: String },
}

fn format_err(line: usize, detail: impl Into<String>) -> ModelIoError {
    ModelIoError::Format {
        line,
        detail: detail.into(),
    }
}

/// Serialize a trained model to its text form.
pub fn save_model(model: &TrainedModel) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{MAGIC} {VERSION} {} {} {}",
        model.algorithm.key(),
        model.schema.fingerprint(),
        model.seed
    )
    .expect("writing to a String cannot fail");
    match &model.kind {
        ModelKind::Tree(_) => {}
        ModelKind::PrunedTree { confidence, .. } => {
            writeln!(out, "param confidence {confidence}").unwrap();
        }
        ModelKind::RandomTree { k, .. } => {
            writeln!(out, "param k {k}").unwrap();
        }
        ModelKind::Forest { trees, k } => {
            writeln!(out, "param trees {}", trees.len()).unwrap();
            writeln!(out, "param k {k}").unwrap();
        }
        ModelKind::Bayes(nb) => {
            writeln!(out, "param laplace {}", nb.laplace).unwrap();
        }
        ModelKind::OneDependence(aode) => {
            writeln!(out, "param laplace {}", aode.laplace).unwrap();
            writeln!(out, "param freqlimit {}", aode.freq_limit).unwrap();
        }
    }
    writeln!(out, "attrs {}", model.schema.arity()).unwrap();
    for line in model.schema.canonical_lines() {
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str("model\n");
    let names = model.schema.attribute_names();
    match &model.kind {
        ModelKind::Tree(tree)
        | ModelKind::PrunedTree { tree, .. }
        | ModelKind::RandomTree { tree, .. } => {
            write_tree(&mut out, tree, &model.schema, &names, 0);
        }
        ModelKind::Forest { trees, .. } => {
            for (index, tree) in trees.iter().enumerate() {
                writeln!(out, "tree {index}").unwrap();
                write_tree(&mut out, tree, &model.schema, &names, 0);
            }
        }
        ModelKind::Bayes(nb) => {
            write_counts_line(&mut out, "classes", &nb.class_counts);
            write_single_table(&mut out, "cond", &nb.counts, &model.schema, &names);
        }
        ModelKind::OneDependence(aode) => {
            write_counts_line(&mut out, "classes", &aode.class_counts);
            write_single_table(&mut out, "single", &aode.single, &model.schema, &names);
            write_pair_table(&mut out, aode, &model.schema, &names);
        }
    }
    out.push_str("end\n");
    out
}

fn write_counts_line(out: &mut String, keyword: &str, counts: &[u32]) {
    out.push_str(keyword);
    for count in counts {
        write!(out, " {count}").unwrap();
    }
    out.push('\n');
}

fn write_tree(out: &mut String, node: &TreeNode, schema: &Schema, names: &[String], depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
    match node {
        TreeNode::Leaf { counts } => {
            write_counts_line(out, "leaf", counts);
        }
        TreeNode::Split {
            attribute,
            default,
            counts,
            children,
        } => {
            let default_symbol = schema.domains[*attribute][*default];
            write_counts_line(
                out,
                &format!("split {} {}", names[*attribute], default_symbol),
                counts,
            );
            for child in children {
                write_tree(out, child, schema, names, depth + 1);
            }
        }
    }
}

/// Emit the nonzero rows of an `[attribute][symbol][class]` count table.
fn write_single_table(
    out: &mut String,
    keyword: &str,
    counts: &[u32],
    schema: &Schema,
    names: &[String],
) {
    for (attribute, name) in names.iter().enumerate().take(schema.arity()) {
        for symbol in Symbol::all() {
            let base = single_index(attribute, symbol, 0);
            let row = &counts[base..base + CLASSES];
            if row.iter().any(|&c| c > 0) {
                write_counts_line(out, &format!("{keyword} {name} {symbol}"), row);
            }
        }
    }
}

fn write_pair_table(out: &mut String, aode: &Aode, schema: &Schema, names: &[String]) {
    let arity = schema.arity();
    for a in 0..arity {
        for b in (a + 1)..arity {
            for va in Symbol::all() {
                for vb in Symbol::all() {
                    let base = pair_index(a, va, b, vb, arity);
                    let row = &aode.pair[base..base + CLASSES];
                    if row.iter().any(|&c| c > 0) {
                        write_counts_line(
                            out,
                            &format!("pair {} {va} {} {vb}", names[a], names[b]),
                            row,
                        );
                    }
                }
            }
        }
    }
}

/// Parse a model file produced by [`save_model`].
pub fn load_model(text: &str) -> Result<TrainedModel, ModelIoError> {
    let mut cursor = Cursor::new(text);
    let (header_line, header) = cursor.expect("the header")?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.first() != Some(&MAGIC) {
        return Err(format_err(header_line, format!("expected a '{MAGIC}' header")));
    }
    let version = *tokens.get(1).ok_or_else(|| {
        format_err(header_line, "header is missing the format version")
    })?;
    if version != VERSION {
        return Err(ModelIoError::VersionMismatch {
            found: version.to_string(),
        });
    }
    if tokens.len() != 5 {
        return Err(format_err(
            header_line,
            "header needs exactly: magic, version, algorithm, fingerprint, seed",
        ));
    }
    let algorithm: Algorithm = tokens[2]
        .parse()
        .map_err(|e: String| format_err(header_line, e))?;
    let fingerprint = tokens[3].to_string();
    let seed: u64 = tokens[4]
        .parse()
        .map_err(|_| format_err(header_line, format!("seed '{}' is not an integer", tokens[4])))?;

    // Optional parameter lines, then the schema.
    let mut params = Params::default();
    let attr_count;
    loop {
        let (line_no, line) = cursor.expect("'param' or 'attrs'")?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first().copied() {
            Some("param") => params.read(line_no, &tokens)?,
            Some("attrs") if tokens.len() == 2 => {
                attr_count = tokens[1].parse::<usize>().map_err(|_| {
                    format_err(line_no, format!("attribute count '{}' is not an integer", tokens[1]))
                })?;
                break;
            }
            _ => return Err(format_err(line_no, "expected a 'param' or 'attrs' line")),
        }
    }
    let context = ContextModel::from_arity(attr_count).ok_or_else(|| {
        format_err(0, format!("no context model has {attr_count} attributes"))
    })?;
    let names = context.attribute_names();
    let mut domains = Vec::with_capacity(attr_count);
    for name in &names {
        let (line_no, line) = cursor.expect("an 'attr' line")?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < 3 || tokens[0] != "attr" {
            return Err(format_err(line_no, "expected 'attr <name> <symbols...>'"));
        }
        if tokens[1] != name {
            return Err(format_err(
                line_no,
                format!("expected attribute '{name}', found '{}'", tokens[1]),
            ));
        }
        let mut domain = Vec::with_capacity(tokens.len() - 2);
        for token in &tokens[2..] {
            let symbol: Symbol = token
                .parse()
                .map_err(|e: String| format_err(line_no, e))?;
            domain.push(symbol);
        }
        if domain[0] != Symbol::Pad {
            return Err(format_err(line_no, "a domain must start with the blank X"));
        }
        if !domain.windows(2).all(|w| w[0].id() < w[1].id()) {
            return Err(format_err(line_no, "domain symbols must be unique and id-ordered"));
        }
        domains.push(domain);
    }
    let schema = Schema {
        model: context,
        domains,
    };
    if schema.fingerprint() != fingerprint {
        return Err(format_err(
            header_line,
            format!(
                "schema fingerprint mismatch: header says {fingerprint}, content is {}",
                schema.fingerprint()
            ),
        ));
    }
    let (line_no, line) = cursor.expect("the 'model' line")?;
    if line.trim() != "model" {
        return Err(format_err(line_no, "expected the 'model' line"));
    }

    let kind = read_body(&mut cursor, algorithm, &schema, &names, &params)?;
    let (line_no, line) = cursor.expect("the 'end' line")?;
    if line.trim() != "end" {
        return Err(format_err(line_no, "expected the 'end' line"));
    }
    if let Some((line_no, _)) = cursor.next_content() {
        return Err(format_err(line_no, "unexpected content after 'end'"));
    }
    Ok(TrainedModel {
        algorithm,
        seed,
        schema,
        kind,
    })
}

#[derive(Default)]
struct Params {
    laplace: Option<f64>,
    freq_limit: Option<u32>,
    confidence: Option<f64>,
    trees: Option<usize>,
    k: Option<usize>,
}

impl Params {
    fn read(&mut self, line_no: usize, tokens: &[&str]) -> Result<(), ModelIoError> {
        if tokens.len() != 3 {
            return Err(format_err(line_no, "expected 'param <name> <value>'"));
        }
        let value = tokens[2];
        let bad = |what: &str| format_err(line_no, format!("{what} '{value}' does not parse"));
        match tokens[1] {
            "laplace" => self.laplace = Some(value.parse().map_err(|_| bad("laplace"))?),
            "freqlimit" => self.freq_limit = Some(value.parse().map_err(|_| bad("freqlimit"))?),
            "confidence" => self.confidence = Some(value.parse().map_err(|_| bad("confidence"))?),
            "trees" => self.trees = Some(value.parse().map_err(|_| bad("trees"))?),
            "k" => self.k = Some(value.parse().map_err(|_| bad("k"))?),
            other => return Err(format_err(line_no, format!("unknown parameter '{other}'"))),
        }
        Ok(())
    }
}

fn read_body(
    cursor: &mut Cursor<'_>,
    algorithm: Algorithm,
    schema: &Schema,
    names: &[String],
    params: &Params,
) -> Result<ModelKind, ModelIoError> {
    match algorithm {
        Algorithm::Id3 => Ok(ModelKind::Tree(read_tree(cursor, schema, names)?)),
        Algorithm::C45 => Ok(ModelKind::PrunedTree {
            tree: read_tree(cursor, schema, names)?,
            confidence: params.confidence.unwrap_or(0.25),
        }),
        Algorithm::RandomTree => Ok(ModelKind::RandomTree {
            tree: read_tree(cursor, schema, names)?,
            k: params.k.unwrap_or_else(|| default_candidate_count(schema.arity())),
        }),
        Algorithm::RandomForest => {
            let mut trees = Vec::new();
            loop {
                let (line_no, line) = cursor.peek("a 'tree' or 'end' line")?;
                let tokens: Vec<&str> = line.split_whitespace().collect();
                if tokens.first() != Some(&"tree") {
                    break;
                }
                if tokens.len() != 2 || tokens[1] != trees.len().to_string() {
                    return Err(format_err(
                        line_no,
                        format!("expected 'tree {}'", trees.len()),
                    ));
                }
                cursor.next_content();
                trees.push(read_tree(cursor, schema, names)?);
            }
            if trees.is_empty() {
                let (line_no, _) = cursor.peek("a 'tree' line")?;
                return Err(format_err(line_no, "a forest needs at least one tree"));
            }
            Ok(ModelKind::Forest {
                trees,
                k: params.k.unwrap_or_else(|| default_candidate_count(schema.arity())),
            })
        }
        Algorithm::NaiveBayes => {
            let class_counts = read_classes(cursor)?;
            let total = class_counts.iter().sum();
            let mut counts = vec![0u32; schema.arity() * Symbol::COUNT * CLASSES];
            loop {
                let (_, line) = cursor.peek("a 'cond' or 'end' line")?;
                if !line.trim_start().starts_with("cond ") {
                    break;
                }
                let (line_no, line) = cursor.next_content().expect("just peeked");
                let tokens: Vec<&str> = line.split_whitespace().collect();
                if tokens.len() != 3 + CLASSES {
                    return Err(format_err(line_no, "expected 'cond <attr> <symbol> <11 counts>'"));
                }
                let attribute = attribute_index(names, tokens[1], line_no)?;
                let symbol: Symbol = tokens[2]
                    .parse()
                    .map_err(|e: String| format_err(line_no, e))?;
                let row = read_row(&tokens[3..], line_no)?;
                let base = single_index(attribute, symbol, 0);
                counts[base..base + CLASSES].copy_from_slice(&row);
            }
            Ok(ModelKind::Bayes(NaiveBayes {
                class_counts,
                total,
                counts,
                laplace: params.laplace.unwrap_or(1.0),
            }))
        }
        Algorithm::Aode => {
            let class_counts = read_classes(cursor)?;
            let total = class_counts.iter().sum();
            let arity = schema.arity();
            let mut single = vec![0u32; arity * Symbol::COUNT * CLASSES];
            let mut pair =
                vec![0u32; arity * (arity - 1) / 2 * Symbol::COUNT * Symbol::COUNT * CLASSES];
            loop {
                let (_, line) = cursor.peek("a 'single', 'pair', or 'end' line")?;
                let trimmed = line.trim_start();
                if !trimmed.starts_with("single ") && !trimmed.starts_with("pair ") {
                    break;
                }
                let (line_no, line) = cursor.next_content().expect("just peeked");
                let tokens: Vec<&str> = line.split_whitespace().collect();
                match tokens[0] {
                    "single" => {
                        if tokens.len() != 3 + CLASSES {
                            return Err(format_err(
                                line_no,
                                "expected 'single <attr> <symbol> <11 counts>'",
                            ));
                        }
                        let attribute = attribute_index(names, tokens[1], line_no)?;
                        let symbol: Symbol = tokens[2]
                            .parse()
                            .map_err(|e: String| format_err(line_no, e))?;
                        let row = read_row(&tokens[3..], line_no)?;
                        let base = single_index(attribute, symbol, 0);
                        single[base..base + CLASSES].copy_from_slice(&row);
                    }
                    "pair" => {
                        if tokens.len() != 5 + CLASSES {
                            return Err(format_err(
                                line_no,
                                "expected 'pair <attr> <symbol> <attr> <symbol> <11 counts>'",
                            ));
                        }
                        let a = attribute_index(names, tokens[1], line_no)?;
                        let va: Symbol = tokens[2]
                            .parse()
                            .map_err(|e: String| format_err(line_no, e))?;
                        let b = attribute_index(names, tokens[3], line_no)?;
                        let vb: Symbol = tokens[4]
                            .parse()
                            .map_err(|e: String| format_err(line_no, e))?;
                        if a >= b {
                            return Err(format_err(
                                line_no,
                                "pair rows must name the lower attribute first",
                            ));
                        }
                        let row = read_row(&tokens[5..], line_no)?;
                        let base = pair_index(a, va, b, vb, arity);
                        pair[base..base + CLASSES].copy_from_slice(&row);
                    }
                    _ => unreachable!("guarded by the peek above"),
                }
            }
            Ok(ModelKind::OneDependence(Aode::from_parts(
                class_counts,
                total,
                single,
                pair,
                params.laplace.unwrap_or(1.0),
                params.freq_limit.unwrap_or(1),
                arity,
            )))
        }
    }
}

fn read_classes(cursor: &mut Cursor<'_>) -> Result<[u32; CLASSES], ModelIoError> {
    let (line_no, line) = cursor.expect("the 'classes' line")?;
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != 1 + CLASSES || tokens[0] != "classes" {
        return Err(format_err(line_no, "expected 'classes <11 counts>'"));
    }
    read_row(&tokens[1..], line_no)
}

fn read_row(tokens: &[&str], line_no: usize) -> Result<[u32; CLASSES], ModelIoError> {
    let mut row = [0u32; CLASSES];
    for (slot, token) in row.iter_mut().zip(tokens) {
        *slot = token
            .parse()
            .map_err(|_| format_err(line_no, format!("count '{token}' is not an integer")))?;
    }
    Ok(row)
}

fn attribute_index(names: &[String], name: &str, line_no: usize) -> Result<usize, ModelIoError> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| format_err(line_no, format!("unknown attribute '{name}'")))
}

fn read_tree(
    cursor: &mut Cursor<'_>,
    schema: &Schema,
    names: &[String],
) -> Result<TreeNode, ModelIoError> {
    let (line_no, line) = cursor.expect("a tree node line")?;
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.first().copied() {
        Some("leaf") => {
            if tokens.len() != 1 + CLASSES {
                return Err(format_err(line_no, "expected 'leaf <11 counts>'"));
            }
            Ok(TreeNode::Leaf {
                counts: read_row(&tokens[1..], line_no)?,
            })
        }
        Some("split") => {
            if tokens.len() != 3 + CLASSES {
                return Err(format_err(
                    line_no,
                    "expected 'split <attr> <default-symbol> <11 counts>'",
                ));
            }
            let attribute = attribute_index(names, tokens[1], line_no)?;
            let default_symbol: Symbol = tokens[2]
                .parse()
                .map_err(|e: String| format_err(line_no, e))?;
            let default = schema
                .domain_position(attribute, default_symbol)
                .ok_or_else(|| {
                    format_err(
                        line_no,
                        format!("default symbol '{default_symbol}' is outside the domain of '{}'", tokens[1]),
                    )
                })?;
            let counts = read_row(&tokens[3..], line_no)?;
            let mut children = Vec::with_capacity(schema.domains[attribute].len());
            for _ in 0..schema.domains[attribute].len() {
                children.push(read_tree(cursor, schema, names)?);
            }
            Ok(TreeNode::Split {
                attribute,
                default,
                counts,
                children,
            })
        }
        _ => Err(format_err(line_no, "expected a 'leaf' or 'split' line")),
    }
}

/// Line reader with 1-based numbering and one-line lookahead; blank lines
/// are only tolerated at the very end of the file.
struct Cursor<'a> {
    lines: std::vec::IntoIter<(usize, &'a str)>,
    peeked: Option<(usize, &'a str)>,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(index, line)| (index + 1, line.trim_end_matches('\r')))
            .collect();
        Cursor {
            lines: lines.into_iter(),
            peeked: None,
        }
    }

    /// Next non-blank line, if any.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        if let Some(line) = self.peeked.take() {
            return Some(line);
        }
        self.lines.by_ref().find(|(_, line)| !line.trim().is_empty())
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), ModelIoError> {
        self.next_content()
            .ok_or_else(|| format_err(0, format!("file ended while reading {what}")))
    }

    fn peek(&mut self, what: &str) -> Result<(usize, &'a str), ModelIoError> {
        if self.peeked.is_none() {
            self.peeked = self.next_content();
        }
        self.peeked
            .ok_or_else(|| format_err(0, format!("file ended while reading {what}")))
    }
}
