//! Decision-tree learners over nominal attributes: plain information-gain
//! trees, gain-ratio trees with pessimistic-error pruning, and randomized
//! trees/forests.
//!
//! All growth is recursive partitioning. A branch that receives no training
//! instances becomes a leaf with all-zero counts; prediction through such a
//! leaf backs off to the closest ancestor that saw data, which realizes the
//! usual parent-majority rule while keeping serialized counts exact.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::features::{Dataset, Symbol};
use crate::sandhi::SandhiClass;

use super::{mix_seed, Schema};

const CLASSES: usize = SandhiClass::COUNT;

/// A grown decision tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeNode {
    /// Terminal node; counts are the training instances that reached it
    /// (all zero for branches no instance reached).
    Leaf { counts: [u32; CLASSES] },
    /// Internal test on one attribute, with one child per domain symbol of
    /// that attribute, in domain order. `default` is the child position for
    /// symbols outside the domain (the largest training branch).
    Split {
        attribute: usize,
        default: usize,
        counts: [u32; CLASSES],
        children: Vec<TreeNode>,
    },
}

impl TreeNode {
    /// Class distribution for one feature vector.
    pub fn distribution(&self, values: &[Symbol], schema: &Schema) -> [f64; CLASSES] {
        let mut node = self;
        let mut backstop = self.counts();
        loop {
            match node {
                TreeNode::Leaf { counts } => {
                    let effective = if counts.iter().all(|&c| c == 0) {
                        backstop
                    } else {
                        counts
                    };
                    return normalized(effective);
                }
                TreeNode::Split {
                    attribute,
                    default,
                    counts,
                    children,
                } => {
                    if counts.iter().any(|&c| c > 0) {
                        backstop = counts;
                    }
                    let position = schema
                        .domain_position(*attribute, values[*attribute])
                        .unwrap_or(*default);
                    node = &children[position];
                }
            }
        }
    }

    /// Training-instance counts at this node.
    pub fn counts(&self) -> &[u32; CLASSES] {
        match self {
            TreeNode::Leaf { counts } => counts,
            TreeNode::Split { counts, .. } => counts,
        }
    }

    /// Total nodes, leaves included.
    pub fn node_count(&self) -> usize {
        match self {
            TreeNode::Leaf { .. } => 1,
            TreeNode::Split { children, .. } => {
                1 + children.iter().map(TreeNode::node_count).sum::<usize>()
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            TreeNode::Leaf { .. } => 1,
            TreeNode::Split { children, .. } => {
                children.iter().map(TreeNode::leaf_count).sum::<usize>()
            }
        }
    }

    /// Longest root-to-leaf edge count.
    pub fn depth(&self) -> usize {
        match self {
            TreeNode::Leaf { .. } => 0,
            TreeNode::Split { children, .. } => {
                1 + children.iter().map(TreeNode::depth).max().unwrap_or(0)
            }
        }
    }
}

fn normalized(counts: &[u32; CLASSES]) -> [f64; CLASSES] {
    let total: u32 = counts.iter().sum();
    let mut dist = [0.0; CLASSES];
    if total == 0 {
        // Unreachable for trees grown on non-empty data; keep a defined
        // value anyway.
        dist.fill(1.0 / CLASSES as f64);
        return dist;
    }
    for (slot, &count) in dist.iter_mut().zip(counts) {
        *slot = f64::from(count) / f64::from(total);
    }
    dist
}

/// Shannon entropy in bits of a count vector; zero counts contribute zero.
pub(crate) fn entropy_of_counts(counts: &[u32]) -> f64 {
    let total: u32 = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let total = f64::from(total);
    let mut bits = 0.0;
    for &count in counts {
        if count > 0 {
            let p = f64::from(count) / total;
            bits -= p * p.log2();
        }
    }
    bits
}

/// How an attribute partitions a row set: per-branch class counts.
struct BranchStats {
    counts: Vec<[u32; CLASSES]>,
    sizes: Vec<u32>,
    total: u32,
}

impl BranchStats {
    fn gain(&self, node_entropy: f64) -> f64 {
        let total = f64::from(self.total);
        let mut remainder = 0.0;
        for (size, counts) in self.sizes.iter().zip(&self.counts) {
            if *size > 0 {
                remainder += f64::from(*size) / total * entropy_of_counts(counts);
            }
        }
        (node_entropy - remainder).max(0.0)
    }

    fn split_info(&self) -> f64 {
        entropy_of_counts(&self.sizes)
    }

    /// At least two branches hold at least two instances each.
    fn admissible(&self) -> bool {
        self.sizes.iter().filter(|&&s| s >= 2).count() >= 2
    }

    /// Largest branch, ties to the lowest position.
    fn default_child(&self) -> usize {
        let mut best = 0;
        for (position, &size) in self.sizes.iter().enumerate() {
            if size > self.sizes[best] {
                best = position;
            }
        }
        best
    }
}

/// Recursion callback that grows one child subtree during a split.
type GrowChild<'a> = &'a mut dyn FnMut(&Grower, Vec<u32>, &[usize]) -> TreeNode;

/// Shared context for growing trees over one dataset.
struct Grower<'a> {
    data: &'a Dataset,
    schema: &'a Schema,
    /// Per attribute: symbol id → domain position (positions fit in u8
    /// because the symbol space has 31 members).
    positions: Vec<[u8; Symbol::COUNT]>,
}

impl<'a> Grower<'a> {
    fn new(data: &'a Dataset, schema: &'a Schema) -> Grower<'a> {
        let positions = schema
            .domains
            .iter()
            .map(|domain| {
                let mut table = [u8::MAX; Symbol::COUNT];
                for (position, symbol) in domain.iter().enumerate() {
                    table[symbol.id()] = position as u8;
                }
                table
            })
            .collect();
        Grower {
            data,
            schema,
            positions,
        }
    }

    fn value_position(&self, row: u32, attribute: usize) -> usize {
        let value = self.data.rows[row as usize].values[attribute];
        let position = self.positions[attribute][value.id()];
        debug_assert_ne!(position, u8::MAX, "training value outside its domain");
        position as usize
    }

    fn class_counts(&self, rows: &[u32]) -> [u32; CLASSES] {
        let mut counts = [0; CLASSES];
        for &row in rows {
            counts[self.data.rows[row as usize].class.slot()] += 1;
        }
        counts
    }

    fn branch_stats(&self, rows: &[u32], attribute: usize) -> BranchStats {
        let width = self.schema.domains[attribute].len();
        let mut counts = vec![[0u32; CLASSES]; width];
        let mut sizes = vec![0u32; width];
        for &row in rows {
            let position = self.value_position(row, attribute);
            counts[position][self.data.rows[row as usize].class.slot()] += 1;
            sizes[position] += 1;
        }
        BranchStats {
            counts,
            sizes,
            total: rows.len() as u32,
        }
    }

    fn partition(&self, rows: &[u32], attribute: usize) -> Vec<Vec<u32>> {
        let mut parts = vec![Vec::new(); self.schema.domains[attribute].len()];
        for &row in rows {
            parts[self.value_position(row, attribute)].push(row);
        }
        parts
    }

    fn split_node(
        &self,
        rows: &[u32],
        attribute: usize,
        counts: [u32; CLASSES],
        remaining: &[usize],
        grow_child: GrowChild<'_>,
    ) -> TreeNode {
        let stats = self.branch_stats(rows, attribute);
        let default = stats.default_child();
        let next: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&a| a != attribute)
            .collect();
        let children = self
            .partition(rows, attribute)
            .into_iter()
            .map(|branch_rows| {
                if branch_rows.is_empty() {
                    TreeNode::Leaf {
                        counts: [0; CLASSES],
                    }
                } else {
                    grow_child(self, branch_rows, &next)
                }
            })
            .collect();
        TreeNode::Split {
            attribute,
            default,
            counts,
            children,
        }
    }
}

fn is_pure(counts: &[u32; CLASSES]) -> bool {
    counts.iter().filter(|&&c| c > 0).count() <= 1
}

/// Grow an unpruned information-gain tree. Ties in gain go to the lowest
/// attribute index, and a zero-gain attribute is still consumed rather than
/// stopping, so consistent data is always fit exactly.
fn grow_max_gain(grower: &Grower<'_>, rows: Vec<u32>, remaining: &[usize]) -> TreeNode {
    let counts = grower.class_counts(&rows);
    if is_pure(&counts) || remaining.is_empty() {
        return TreeNode::Leaf { counts };
    }
    let node_entropy = entropy_of_counts(&counts);
    let mut best = remaining[0];
    let mut best_gain = f64::NEG_INFINITY;
    for &attribute in remaining {
        let gain = grower.branch_stats(&rows, attribute).gain(node_entropy);
        if gain > best_gain {
            best_gain = gain;
            best = attribute;
        }
    }
    grower.split_node(&rows, best, counts, remaining, &mut |g, r, next| {
        grow_max_gain(g, r, next)
    })
}

/// Information-gain tree over the full dataset.
pub(crate) fn train_plain(data: &Dataset, schema: &Schema) -> TreeNode {
    let grower = Grower::new(data, schema);
    let rows: Vec<u32> = (0..data.rows.len() as u32).collect();
    let remaining: Vec<usize> = (0..schema.arity()).collect();
    grow_max_gain(&grower, rows, &remaining)
}

const GAIN_FLOOR: f64 = 1e-12;

/// Whole-dataset (gain, gain ratio) for one attribute.
pub(crate) fn attribute_stats(data: &Dataset, schema: &Schema, attribute: usize) -> (f64, f64) {
    assert!(attribute < schema.arity(), "attribute index out of range");
    let grower = Grower::new(data, schema);
    let rows: Vec<u32> = (0..data.rows.len() as u32).collect();
    let node_entropy = entropy_of_counts(&grower.class_counts(&rows));
    let stats = grower.branch_stats(&rows, attribute);
    let gain = stats.gain(node_entropy);
    let split_info = stats.split_info();
    let ratio = if split_info <= GAIN_FLOOR {
        0.0
    } else {
        gain / split_info
    };
    (gain, ratio)
}

/// Grow with gain-ratio selection: a candidate must have positive gain and
/// an admissible partition (two branches of two or more instances).
fn grow_gain_ratio(grower: &Grower<'_>, rows: Vec<u32>, remaining: &[usize]) -> TreeNode {
    let counts = grower.class_counts(&rows);
    if is_pure(&counts) || remaining.is_empty() {
        return TreeNode::Leaf { counts };
    }
    let node_entropy = entropy_of_counts(&counts);
    let mut best: Option<usize> = None;
    let mut best_ratio = f64::NEG_INFINITY;
    for &attribute in remaining {
        let stats = grower.branch_stats(&rows, attribute);
        if !stats.admissible() {
            continue;
        }
        let gain = stats.gain(node_entropy);
        if gain <= GAIN_FLOOR {
            continue;
        }
        let split_info = stats.split_info();
        let ratio = if split_info <= GAIN_FLOOR {
            0.0
        } else {
            gain / split_info
        };
        if ratio > best_ratio {
            best_ratio = ratio;
            best = Some(attribute);
        }
    }
    let Some(best) = best else {
        return TreeNode::Leaf { counts };
    };
    grower.split_node(&rows, best, counts, remaining, &mut |g, r, next| {
        grow_gain_ratio(g, r, next)
    })
}

/// Gain-ratio tree pruned bottom-up with the pessimistic error estimate at
/// the given confidence.
pub(crate) fn train_pruned(data: &Dataset, schema: &Schema, confidence: f64) -> TreeNode {
    let grower = Grower::new(data, schema);
    let rows: Vec<u32> = (0..data.rows.len() as u32).collect();
    let remaining: Vec<usize> = (0..schema.arity()).collect();
    let tree = grow_gain_ratio(&grower, rows, &remaining);
    let z = normal_inverse(1.0 - confidence);
    prune(tree, confidence, z).0
}

/// Bottom-up pessimistic pruning. Returns the pruned node and its estimated
/// error count.
fn prune(node: TreeNode, confidence: f64, z: f64) -> (TreeNode, f64) {
    match node {
        TreeNode::Leaf { .. } => {
            let errors = leaf_estimated_errors(node.counts(), confidence, z);
            (node, errors)
        }
        TreeNode::Split {
            attribute,
            default,
            counts,
            children,
        } => {
            let mut subtree_errors = 0.0;
            let children: Vec<TreeNode> = children
                .into_iter()
                .map(|child| {
                    let (pruned, errors) = prune(child, confidence, z);
                    subtree_errors += errors;
                    pruned
                })
                .collect();
            let as_leaf_errors = leaf_estimated_errors(&counts, confidence, z);
            if as_leaf_errors <= subtree_errors + 0.1 {
                (TreeNode::Leaf { counts }, as_leaf_errors)
            } else {
                (
                    TreeNode::Split {
                        attribute,
                        default,
                        counts,
                        children,
                    },
                    subtree_errors,
                )
            }
        }
    }
}

/// Pessimistic error estimate for a node treated as a leaf: observed errors
/// plus the upper-confidence correction. Zero-weight leaves cost nothing.
fn leaf_estimated_errors(counts: &[u32; CLASSES], confidence: f64, z: f64) -> f64 {
    let total: u32 = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let n = f64::from(total);
    let errors = n - f64::from(*counts.iter().max().expect("eleven classes"));
    errors + added_errors(n, errors, confidence, z)
}

/// Upper-confidence correction on an observed error count, via the normal
/// approximation to the binomial tail (with exact handling of the small-e
/// regime).
fn added_errors(n: f64, e: f64, confidence: f64, z: f64) -> f64 {
    if e < 1.0 {
        let base = n * (1.0 - confidence.powf(1.0 / n));
        if e == 0.0 {
            return base;
        }
        return base + e * (added_errors(n, 1.0, confidence, z) - base);
    }
    if e + 0.5 >= n {
        return (n - e).max(0.0);
    }
    let f = (e + 0.5) / n;
    let r = (f + z * z / (2.0 * n)
        + z * (f / n - f * f / n + z * z / (4.0 * n * n)).sqrt())
        / (1.0 + z * z / n);
    r * n - e
}

/// Inverse standard-normal CDF (rational approximation, ~1e-9 accurate).
pub(crate) fn normal_inverse(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "quantile argument must be in (0, 1)");
    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.38357751867269e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const P_LOW: f64 = 0.02425;
    if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -((((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0))
    }
}

/// Draw `k` distinct candidates from `remaining`, returned in ascending
/// order; all of them when `k` covers the set.
fn sample_candidates(remaining: &[usize], k: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    if remaining.len() <= k {
        return remaining.to_vec();
    }
    let mut pool = remaining.to_vec();
    for slot in 0..k {
        let pick = rng.gen_range(slot..pool.len());
        pool.swap(slot, pick);
    }
    pool.truncate(k);
    pool.sort_unstable();
    pool
}

/// Grow with the best of `k` randomly drawn candidate attributes per split.
fn grow_random(
    grower: &Grower<'_>,
    rows: Vec<u32>,
    remaining: &[usize],
    k: usize,
    rng: &mut ChaCha8Rng,
) -> TreeNode {
    let counts = grower.class_counts(&rows);
    if is_pure(&counts) || remaining.is_empty() {
        return TreeNode::Leaf { counts };
    }
    let node_entropy = entropy_of_counts(&counts);
    let candidates = sample_candidates(remaining, k, rng);
    let mut best = candidates[0];
    let mut best_gain = f64::NEG_INFINITY;
    for &attribute in &candidates {
        let gain = grower.branch_stats(&rows, attribute).gain(node_entropy);
        if gain > best_gain {
            best_gain = gain;
            best = attribute;
        }
    }
    grower.split_node(&rows, best, counts, remaining, &mut |g, r, next| {
        grow_random(g, r, next, k, rng)
    })
}

/// Randomized tree over the full dataset (no bootstrap).
pub(crate) fn train_random_tree(
    data: &Dataset,
    schema: &Schema,
    k: usize,
    seed: u64,
) -> TreeNode {
    let grower = Grower::new(data, schema);
    let rows: Vec<u32> = (0..data.rows.len() as u32).collect();
    let remaining: Vec<usize> = (0..schema.arity()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, 0));
    grow_random(&grower, rows, &remaining, k, &mut rng)
}

/// Randomized trees over bootstrap resamples of the dataset.
pub(crate) fn train_forest(
    data: &Dataset,
    schema: &Schema,
    n_trees: usize,
    k: usize,
    seed: u64,
) -> Vec<TreeNode> {
    let grower = Grower::new(data, schema);
    let remaining: Vec<usize> = (0..schema.arity()).collect();
    let n = data.rows.len() as u32;
    (0..n_trees)
        .map(|index| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, 1 + index as u64));
            let rows: Vec<u32> = (0..n).map(|_| rng.gen_range(0..n)).collect();
            grow_random(&grower, rows, &remaining, k, &mut rng)
        })
        .collect()
}

/// Mean of per-tree distributions.
pub(crate) fn forest_distribution(
    trees: &[TreeNode],
    values: &[Symbol],
    schema: &Schema,
) -> [f64; CLASSES] {
    let mut sum = [0.0; CLASSES];
    for tree in trees {
        let dist = tree.distribution(values, schema);
        for (acc, p) in sum.iter_mut().zip(dist) {
            *acc += p;
        }
    }
    let scale = 1.0 / trees.len() as f64;
    for slot in &mut sum {
        *slot *= scale;
    }
    sum
}
