//! Cost of training each learner, of single-vector prediction, and of a
//! small cross-validation pass, all on a 400-stem synthesized corpus.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sandhi_forge::corpus::generate_stems;
use sandhi_forge::{
    cross_validate, default_synthesis_suffixes, train, Algorithm, ContextModel, Dataset,
    SandhiEngine, TrainOptions,
};

fn training_data() -> Dataset {
    let stems = generate_stems(400, 1);
    let outcome = SandhiEngine::new().synthesize(&stems, &default_synthesis_suffixes());
    assert!(outcome.skipped.is_empty(), "corpus must classify fully");
    Dataset::from_junctions(&outcome.junctions, ContextModel::II)
}

fn bench_train(c: &mut Criterion) {
    let data = training_data();
    let options = TrainOptions::default();
    let mut group = c.benchmark_group("train_3600_rows");
    group.sample_size(20);
    for algorithm in Algorithm::ALL {
        group.bench_function(format!("{algorithm:?}"), |b| {
            b.iter(|| black_box(train(black_box(&data), algorithm, &options).expect("trains")))
        });
    }
    group.finish();
}

fn bench_predict(c: &mut Criterion) {
    let data = training_data();
    let options = TrainOptions::default();
    let probes: Vec<_> = data.rows.iter().step_by(997).cloned().collect();
    let mut group = c.benchmark_group("predict_proba");
    for algorithm in Algorithm::ALL {
        let model = train(&data, algorithm, &options).expect("trains");
        group.bench_function(format!("{algorithm:?}"), |b| {
            b.iter(|| {
                for probe in &probes {
                    black_box(model.predict_proba(black_box(&probe.values)).expect("predicts"));
                }
            })
        });
    }
    group.finish();
}

fn bench_cross_validate(c: &mut Criterion) {
    let data = training_data();
    let options = TrainOptions::default();
    let mut group = c.benchmark_group("cross_validate_5_fold");
    group.sample_size(10);
    for algorithm in [Algorithm::Id3, Algorithm::NaiveBayes] {
        group.bench_function(format!("{algorithm:?}"), |b| {
            b.iter(|| {
                black_box(
                    cross_validate(black_box(&data), algorithm, &options, 5, 1).expect("scores"),
                )
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_train, bench_predict, bench_cross_validate);
criterion_main!(benches);
