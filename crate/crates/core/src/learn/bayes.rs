//! Count-based Bayes learners: naive Bayes and averaged one-dependence
//! estimation, both Laplace-smoothed and stored as exact integer counts.
//!
//! The one-dependence scorer factors its joint term as
//! `P(c) · P(x_p | c) · Π_b P(x_b | c, x_p)` with exactly the smoothing the
//! naive scorer uses for the first two factors, so on a single-attribute
//! schema the two models produce bit-identical posteriors.

use crate::features::{Dataset, Symbol};
use crate::sandhi::SandhiClass;

use super::Schema;

const CLASSES: usize = SandhiClass::COUNT;

/// Index into a flattened `[attribute][symbol][class]` count table.
pub(crate) fn single_index(attribute: usize, symbol: Symbol, class_slot: usize) -> usize {
    (attribute * Symbol::COUNT + symbol.id()) * CLASSES + class_slot
}

/// Naive Bayes over nominal attributes, in linear probability space.
///
/// Linear space is safe here: every smoothed factor is at least
/// `laplace / (N + laplace·|domain|)`, so a product over at most fifteen
/// attributes stays far above the subnormal range.
#[derive(Debug, Clone, PartialEq)]
pub struct NaiveBayes {
    pub class_counts: [u32; CLASSES],
    pub total: u32,
    /// `counts[(attribute · #symbols + symbol) · #classes + class]`.
    pub counts: Vec<u32>,
    pub laplace: f64,
}

impl NaiveBayes {
    pub(crate) fn train(data: &Dataset, schema: &Schema, laplace: f64) -> NaiveBayes {
        let arity = schema.arity();
        let mut model = NaiveBayes {
            class_counts: [0; CLASSES],
            total: data.rows.len() as u32,
            counts: vec![0; arity * Symbol::COUNT * CLASSES],
            laplace,
        };
        for row in &data.rows {
            let slot = row.class.slot();
            model.class_counts[slot] += 1;
            for (attribute, &value) in row.values.iter().enumerate() {
                model.counts[single_index(attribute, value, slot)] += 1;
            }
        }
        model
    }

    /// Smoothed prior for one class slot.
    pub fn prior(&self, class_slot: usize) -> f64 {
        (f64::from(self.class_counts[class_slot]) + self.laplace)
            / (f64::from(self.total) + self.laplace * CLASSES as f64)
    }

    /// Smoothed P(value | class) for one attribute.
    pub fn conditional(
        &self,
        attribute: usize,
        value: Symbol,
        class_slot: usize,
        domain_size: usize,
    ) -> f64 {
        let count = self.counts[single_index(attribute, value, class_slot)];
        (f64::from(count) + self.laplace)
            / (f64::from(self.class_counts[class_slot]) + self.laplace * domain_size as f64)
    }

    pub(crate) fn distribution(&self, values: &[Symbol], schema: &Schema) -> [f64; CLASSES] {
        let mut scores = [0.0; CLASSES];
        for (slot, score) in scores.iter_mut().enumerate() {
            let mut s = self.prior(slot);
            for (attribute, &value) in values.iter().enumerate() {
                s *= self.conditional(attribute, value, slot, schema.domains[attribute].len());
            }
            *score = s;
        }
        normalize(scores)
    }
}

/// Averaged one-dependence estimation: every attribute whose observed value
/// is frequent enough serves once as the parent all other attributes are
/// conditioned on, and the per-parent posteriors are summed. When no parent
/// qualifies the scorer degrades to naive Bayes over the same counts.
#[derive(Debug, Clone, PartialEq)]
pub struct Aode {
    pub class_counts: [u32; CLASSES],
    pub total: u32,
    /// Same layout as [`NaiveBayes::counts`].
    pub single: Vec<u32>,
    /// `pair[((rank(a,b) · #symbols + symbol_a) · #symbols + symbol_b) · #classes + class]`
    /// for attribute pairs a < b.
    pub pair: Vec<u32>,
    pub laplace: f64,
    pub freq_limit: u32,
    arity: usize,
}

/// Rank of the unordered pair (a, b), a < b, in lexicographic order.
fn pair_rank(a: usize, b: usize, arity: usize) -> usize {
    debug_assert!(a < b && b < arity);
    a * (2 * arity - a - 1) / 2 + (b - a - 1)
}

pub(crate) fn pair_index(a: usize, va: Symbol, b: usize, vb: Symbol, arity: usize) -> usize {
    ((pair_rank(a, b, arity) * Symbol::COUNT + va.id()) * Symbol::COUNT + vb.id()) * CLASSES
}

impl Aode {
    pub(crate) fn train(data: &Dataset, schema: &Schema, laplace: f64, freq_limit: u32) -> Aode {
        let arity = schema.arity();
        let pairs = arity * (arity - 1) / 2;
        let mut model = Aode {
            class_counts: [0; CLASSES],
            total: data.rows.len() as u32,
            single: vec![0; arity * Symbol::COUNT * CLASSES],
            pair: vec![0; pairs * Symbol::COUNT * Symbol::COUNT * CLASSES],
            laplace,
            freq_limit,
            arity,
        };
        for row in &data.rows {
            let slot = row.class.slot();
            model.class_counts[slot] += 1;
            for (a, &va) in row.values.iter().enumerate() {
                model.single[single_index(a, va, slot)] += 1;
                for (offset, &vb) in row.values[a + 1..].iter().enumerate() {
                    let b = a + offset + 1;
                    model.pair[pair_index(a, va, b, vb, arity) + slot] += 1;
                }
            }
        }
        model
    }

    /// Reassemble a model from serialized count tables.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_parts(
        class_counts: [u32; CLASSES],
        total: u32,
        single: Vec<u32>,
        pair: Vec<u32>,
        laplace: f64,
        freq_limit: u32,
        arity: usize,
    ) -> Aode {
        debug_assert_eq!(single.len(), arity * Symbol::COUNT * CLASSES);
        debug_assert_eq!(
            pair.len(),
            arity * (arity - 1) / 2 * Symbol::COUNT * Symbol::COUNT * CLASSES
        );
        Aode {
            class_counts,
            total,
            single,
            pair,
            laplace,
            freq_limit,
            arity,
        }
    }

    /// Count of (class, attribute=value) observations.
    fn single_count(&self, attribute: usize, value: Symbol, class_slot: usize) -> u32 {
        self.single[single_index(attribute, value, class_slot)]
    }

    /// Count of the value across all classes, for the parent frequency test.
    fn value_count(&self, attribute: usize, value: Symbol) -> u32 {
        let base = (attribute * Symbol::COUNT + value.id()) * CLASSES;
        self.single[base..base + CLASSES].iter().sum()
    }

    /// Joint count of (class, a=va, b=vb) for any attribute order.
    fn joint_count(&self, a: usize, va: Symbol, b: usize, vb: Symbol, class_slot: usize) -> u32 {
        if a < b {
            self.pair[pair_index(a, va, b, vb, self.arity) + class_slot]
        } else {
            self.pair[pair_index(b, vb, a, va, self.arity) + class_slot]
        }
    }

    fn prior(&self, class_slot: usize) -> f64 {
        (f64::from(self.class_counts[class_slot]) + self.laplace)
            / (f64::from(self.total) + self.laplace * CLASSES as f64)
    }

    fn parent_conditional(
        &self,
        parent: usize,
        value: Symbol,
        class_slot: usize,
        domain_size: usize,
    ) -> f64 {
        (f64::from(self.single_count(parent, value, class_slot)) + self.laplace)
            / (f64::from(self.class_counts[class_slot]) + self.laplace * domain_size as f64)
    }

    pub(crate) fn distribution(&self, values: &[Symbol], schema: &Schema) -> [f64; CLASSES] {
        let parents: Vec<usize> = (0..self.arity)
            .filter(|&p| self.value_count(p, values[p]) >= self.freq_limit)
            .collect();
        if parents.is_empty() {
            return self.naive_distribution(values, schema);
        }
        let mut scores = [0.0; CLASSES];
        for (slot, score) in scores.iter_mut().enumerate() {
            let mut sum = 0.0;
            for &p in &parents {
                let parent_count = f64::from(self.single_count(p, values[p], slot));
                let mut term = self.prior(slot)
                    * self.parent_conditional(p, values[p], slot, schema.domains[p].len());
                for (b, &vb) in values.iter().enumerate() {
                    if b == p {
                        continue;
                    }
                    let joint = f64::from(self.joint_count(p, values[p], b, vb, slot));
                    term *= (joint + self.laplace)
                        / (parent_count + self.laplace * schema.domains[b].len() as f64);
                }
                sum += term;
            }
            *score = sum;
        }
        normalize(scores)
    }

    /// The no-qualified-parent fallback: naive Bayes over the same counts.
    fn naive_distribution(&self, values: &[Symbol], schema: &Schema) -> [f64; CLASSES] {
        let mut scores = [0.0; CLASSES];
        for (slot, score) in scores.iter_mut().enumerate() {
            let mut s = self.prior(slot);
            for (attribute, &value) in values.iter().enumerate() {
                s *= (f64::from(self.single_count(attribute, value, slot)) + self.laplace)
                    / (f64::from(self.class_counts[slot])
                        + self.laplace * schema.domains[attribute].len() as f64);
            }
            *score = s;
        }
        normalize(scores)
    }
}

fn normalize(mut scores: [f64; CLASSES]) -> [f64; CLASSES] {
    let total: f64 = scores.iter().sum();
    if total <= 0.0 {
        scores.fill(1.0 / CLASSES as f64);
        return scores;
    }
    for score in &mut scores {
        *score /= total;
    }
    scores
}
